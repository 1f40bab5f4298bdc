//! Command-line front end. [`run`] takes the argument vector and output
//! sinks so it can be driven from tests.
//!
//! Exit codes: 0 on success, 1 on domain errors (message on stderr), 2 on
//! usage errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use braidcert::blocks::{
    block_linking, block_profile, block_twist, cable, BlockStructure,
};
use braidcert::certify::{default_candidate_set, lower_bound_certificate, parse_candidates};
use braidcert::pure::linking_matrix;
use braidcert::word_problem::{self, Engine};
use braidcert::{BraidWord, Execution, ExampleSpec, Variant};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Debug, Parser)]
#[command(name = "braidcert", about = "Exact braid group computations and centralizer certificates")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Word problem: triviality, equality, commutation, normal form.
    #[command(subcommand)]
    Wp(WpCommand),
    /// Linking numbers of a pure braid.
    Lk {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Cable a braid on m strands with ribbons of the given size.
    Cable {
        #[arg(long)]
        size: usize,
        /// Strand count of the input word (default: smallest that fits).
        #[arg(long)]
        m: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Full twist of one block.
    BlockTwist {
        #[arg(long, value_parser = parse_sizes)]
        sizes: BlockStructure,
        #[arg(long)]
        i: usize,
    },
    /// Block linking element L_jk.
    BlockLinking {
        #[arg(long, value_parser = parse_sizes)]
        sizes: BlockStructure,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
    },
    /// Block profile of a block-preserving braid.
    Profile {
        #[arg(long, value_parser = parse_sizes)]
        sizes: BlockStructure,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Build a counterexample braid.
    #[command(subcommand)]
    Example(ExampleCommand),
    /// Certify a generator lower bound for the centralizer of an example.
    Certify(CertifyArgs),
    /// Seeded cross-validation of the two word-problem engines.
    Crossval {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 64)]
        max_len: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum WpCommand {
    IsTrivial {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    Equal {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    Commutes {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    Nf {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Debug, Args)]
pub struct ExampleParams {
    #[arg(long)]
    m: usize,
    #[arg(long = "exps", visible_alias = "powers", value_delimiter = ',', required = true)]
    params: Vec<u32>,
}

#[derive(Debug, Subcommand)]
pub enum ExampleCommand {
    Twist(ExampleParams),
    TwistOdd(ExampleParams),
    Pa(ExampleParams),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Twist,
    TwistOdd,
    Pa,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Twist => Variant::TwistEven,
            VariantArg::TwistOdd => Variant::TwistOdd,
            VariantArg::Pa => Variant::PseudoAnosov,
        }
    }
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[command(flatten)]
    params: ExampleParams,
    /// JSON array of {"label", "word"} replacing the default candidates.
    #[arg(long)]
    candidates: Option<PathBuf>,
    /// Also write the certificate to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Verify candidates on one thread.
    #[arg(long)]
    sequential: bool,
}

fn parse_sizes(s: &str) -> Result<BlockStructure, String> {
    BlockStructure::parse(s).map_err(|e| e.to_string())
}

fn word(text: &str, n: usize) -> Result<BraidWord, String> {
    BraidWord::parse(text, n).map_err(|e| e.to_string())
}

fn letters_json(w: &BraidWord) -> serde_json::Value {
    json!(w.letters())
}

/// Runs one invocation, writing to `out` and `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, text: impl AsRef<str>) -> Result<(), String> {
    writeln!(out, "{}", text.as_ref()).map_err(|e| e.to_string())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    let as_json = cli.json;
    match &cli.command {
        Command::Wp(wp) => run_wp(wp, as_json, out)?,
        Command::Lk { n, word: text } => {
            let w = word(text, *n)?;
            let lk = linking_matrix(&w).map_err(|e| e.to_string())?;
            if as_json {
                let entries: Vec<_> = lk.iter().map(|(i, j, v)| json!([i, j, v])).collect();
                emit(out, json!({"n": n, "entries": entries}).to_string())?;
            } else {
                for (i, j, v) in lk.iter() {
                    emit(out, format!("{i} {j} {v}"))?;
                }
            }
        }
        Command::Cable { size, m, word: text } => {
            let m = match m {
                Some(m) => *m,
                None => {
                    let max = text
                        .split_whitespace()
                        .filter_map(|t| t.parse::<i64>().ok())
                        .map(|g| g.unsigned_abs() as usize)
                        .max()
                        .unwrap_or(0);
                    max + 1
                }
            };
            let gamma = word(text, m)?;
            let c = cable(&gamma, *size).map_err(|e| e.to_string())?;
            print_word(out, &c, as_json)?;
        }
        Command::BlockTwist { sizes, i } => {
            let t = block_twist(*i, sizes).map_err(|e| e.to_string())?;
            print_word(out, &t, as_json)?;
        }
        Command::BlockLinking { sizes, j, k } => {
            let l = block_linking(*j, *k, sizes).map_err(|e| e.to_string())?;
            print_word(out, &l, as_json)?;
        }
        Command::Profile { sizes, word: text } => {
            let w = word(text, sizes.strand_count())?;
            let p = block_profile(&w, sizes).map_err(|e| e.to_string())?;
            let m = sizes.block_count();
            let pairs: Vec<(usize, usize)> = (1..=m)
                .flat_map(|j| (j + 1..=m).map(move |k| (j, k)))
                .collect();
            if as_json {
                let cross: Vec<_> = pairs
                    .iter()
                    .map(|&(j, k)| json!([j, k, p.cross_count(j, k)]))
                    .collect();
                emit(out, json!({"internal": p.internal, "cross": cross}).to_string())?;
            } else {
                let internal: Vec<String> = p.internal.iter().map(|x| x.to_string()).collect();
                emit(out, format!("internal {}", internal.join(" ")))?;
                for (j, k) in pairs {
                    emit(out, format!("cross {j} {k} {}", p.cross_count(j, k)))?;
                }
            }
        }
        Command::Example(cmd) => {
            let (variant, params) = match cmd {
                ExampleCommand::Twist(p) => (Variant::TwistEven, p),
                ExampleCommand::TwistOdd(p) => (Variant::TwistOdd, p),
                ExampleCommand::Pa(p) => (Variant::PseudoAnosov, p),
            };
            let spec = ExampleSpec::new(variant, params.m, params.params.clone())
                .map_err(|e| e.to_string())?;
            let inst = spec.build();
            if as_json {
                let view = inst.to_json_view();
                emit(out, serde_json::to_string(&view).map_err(|e| e.to_string())?)?;
            } else {
                let sizes: Vec<String> = inst.structure.sizes().iter().map(|s| s.to_string()).collect();
                emit(out, format!("n: {}", inst.n()))?;
                emit(out, format!("sizes: {}", sizes.join(",")))?;
                emit(out, format!("beta: {}", inst.beta))?;
            }
        }
        Command::Certify(args) => run_certify(args, out)?,
        Command::Crossval {
            seed,
            count,
            max_n,
            max_len,
        } => return run_crossval(*seed, *count, *max_n, *max_len, as_json, out),
    }
    Ok(0)
}

fn print_word(out: &mut dyn Write, w: &BraidWord, as_json: bool) -> Result<(), String> {
    if as_json {
        emit(out, json!({"n": w.strand_count(), "word": letters_json(w)}).to_string())
    } else {
        emit(out, w.to_string())
    }
}

fn run_wp(cmd: &WpCommand, as_json: bool, out: &mut dyn Write) -> Result<(), String> {
    match cmd {
        WpCommand::IsTrivial { n, word: text } => {
            let w = word(text, *n)?;
            let trivial = word_problem::is_identity(&w);
            if as_json {
                emit(out, json!({"n": n, "word": letters_json(&w), "trivial": trivial}).to_string())
            } else {
                emit(out, if trivial { "trivial" } else { "nontrivial" })
            }
        }
        WpCommand::Equal { n, first, second } => {
            let (u, v) = (word(first, *n)?, word(second, *n)?);
            let eq = word_problem::equal(&u, &v).map_err(|e| e.to_string())?;
            if as_json {
                emit(out, json!({"n": n, "equal": eq}).to_string())
            } else {
                emit(out, if eq { "equal" } else { "not equal" })
            }
        }
        WpCommand::Commutes { n, first, second } => {
            let (u, v) = (word(first, *n)?, word(second, *n)?);
            let c = word_problem::commutes(&u, &v).map_err(|e| e.to_string())?;
            if as_json {
                emit(out, json!({"n": n, "commutes": c}).to_string())
            } else {
                emit(out, if c { "commute" } else { "do not commute" })
            }
        }
        WpCommand::Nf { n, word: text } => {
            let w = word(text, *n)?;
            let nf = word_problem::normal_form(&w);
            if as_json {
                let factors: Vec<_> = nf.factors().iter().map(|p| json!(p.images())).collect();
                emit(out, json!({"n": n, "inf": nf.inf(), "factors": factors}).to_string())
            } else {
                emit(out, nf.to_string())
            }
        }
    }
}

fn run_certify(args: &CertifyArgs, out: &mut dyn Write) -> Result<(), String> {
    let spec = ExampleSpec::new(args.variant.into(), args.params.m, args.params.params.clone())
        .map_err(|e| e.to_string())?;
    let inst = spec.build();
    let candidates = match &args.candidates {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_candidates(&text, inst.n())?
        }
        None => default_candidate_set(&inst),
    };
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let report = lower_bound_certificate(&inst, &candidates, exec).map_err(|e| e.to_string())?;
    let text = report.to_json();
    if let Some(path) = &args.out {
        fs::write(path, format!("{text}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    emit(out, text)
}

fn run_crossval(
    seed: u64,
    count: usize,
    max_n: usize,
    max_len: usize,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<i32, String> {
    if max_n < 2 {
        return Err("--max-n must be at least 2".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<BraidWord> = (0..count)
        .map(|k| {
            let n = rng.gen_range(2..=max_n);
            if k % 2 == 0 {
                BraidWord::random_trivial(&mut rng, n, max_len)
            } else {
                let len = rng.gen_range(0..=max_len);
                BraidWord::random(&mut rng, n, len)
            }
        })
        .collect();
    let a = word_problem::is_identity_batch(Engine::Coordinates, Execution::Parallel, &words);
    let b = word_problem::is_identity_batch(Engine::Garside, Execution::Parallel, &words);
    let disagreements: Vec<usize> = (0..count).filter(|&i| a[i] != b[i]).collect();
    let trivial = a.iter().filter(|&&x| x).count();
    if as_json {
        emit(
            out,
            json!({
                "seed": seed,
                "count": count,
                "trivial": trivial,
                "disagreements": disagreements.iter().map(|&i| words[i].to_string()).collect::<Vec<_>>(),
            })
            .to_string(),
        )?;
    } else {
        emit(
            out,
            format!(
                "seed {seed}: {count} words, {trivial} trivial, {} disagreements",
                disagreements.len()
            ),
        )?;
        for &i in &disagreements {
            emit(out, format!("disagree --n {} \"{}\"", words[i].strand_count(), words[i]))?;
        }
    }
    Ok(if disagreements.is_empty() { 0 } else { 1 })
}
