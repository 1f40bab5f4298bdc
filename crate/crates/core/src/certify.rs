//! Generator lower-bound certificates for centralizers.
//!
//! A certificate lists candidate braids, checks with both word-problem
//! engines that each commutes with `beta` and preserves the blocks, and
//! records the integer rank of their block profiles. The block profile is a
//! homomorphism from the block-preserving subgroup to a free abelian group,
//! so if the centralizer of `beta` lies in that subgroup, any generating set
//! of the centralizer has at least `rank` elements.

use serde::{Deserialize, Serialize};

use crate::blocks::{block_linking, block_profile, block_twist, blocks_preserved};
use crate::error::{BraidError, Result};
use crate::examples::{ExampleInstance, ExampleSpec, Variant};
use crate::exec::{self, Execution};
use crate::rank::integer_rank;
use crate::word::BraidWord;
use crate::word_problem::{commutator, Engine};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub label: String,
    pub word: BraidWord,
}

impl Candidate {
    pub fn new(label: impl Into<String>, word: BraidWord) -> Self {
        Candidate {
            label: label.into(),
            word,
        }
    }

    pub fn to_json(&self) -> CandidateJson {
        CandidateJson {
            label: self.label.clone(),
            word: self.word.letters().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateJson {
    pub label: String,
    pub word: Vec<i32>,
}

impl CandidateJson {
    pub fn to_candidate(&self, n: usize) -> Result<Candidate> {
        Ok(Candidate::new(
            self.label.clone(),
            BraidWord::new(n, self.word.clone())?,
        ))
    }
}

/// Reads a JSON array of `{"label", "word"}` objects.
pub fn parse_candidates(json: &str, n: usize) -> std::result::Result<Vec<Candidate>, String> {
    let raw: Vec<CandidateJson> = serde_json::from_str(json).map_err(|e| e.to_string())?;
    raw.iter()
        .map(|c| c.to_candidate(n).map_err(|e| format!("candidate {:?}: {e}", c.label)))
        .collect()
}

/// Block twists `T_i` (non-empty ones) followed by block linkings `L_{j,k}`
/// for every pair of blocks, singleton blocks included.
pub fn default_candidate_set(inst: &ExampleInstance) -> Vec<Candidate> {
    let blocks = &inst.structure;
    let m = blocks.block_count();
    let mut out = Vec::new();
    for i in 1..=m {
        let t = block_twist(i, blocks).expect("block index in range");
        if !t.is_empty() {
            out.push(Candidate::new(format!("T{i}"), t));
        }
    }
    for j in 1..=m {
        for k in j + 1..=m {
            let l = block_linking(j, k, blocks).expect("block indices in range");
            out.push(Candidate::new(format!("L{j},{k}"), l));
        }
    }
    out
}

/// Commutation verdict for each candidate, decided by both engines on the
/// commutator. Fails if the engines ever disagree.
pub fn verify_commutation(
    beta: &BraidWord,
    candidates: &[Candidate],
    execution: Execution,
) -> Result<Vec<bool>> {
    for c in candidates {
        if c.word.strand_count() != beta.strand_count() {
            return Err(BraidError::StrandCountMismatch {
                left: beta.strand_count(),
                right: c.word.strand_count(),
            });
        }
    }
    exec::try_map(execution, candidates, |c| {
        let comm = commutator(beta, &c.word)?;
        let a = Engine::Coordinates.is_identity(&comm);
        let b = Engine::Garside.is_identity(&comm);
        if a != b {
            return Err(BraidError::EngineDisagreement(format!(
                "commutator of beta with {}",
                c.label
            )));
        }
        Ok(a)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCheck {
    pub label: String,
    pub commutes: bool,
    pub block_preserving: bool,
}

impl CandidateCheck {
    pub fn passed(&self) -> bool {
        self.commutes && self.block_preserving
    }
}

/// Field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub variant: Variant,
    pub m: usize,
    pub n: usize,
    pub sizes: Vec<usize>,
    pub params: Vec<u32>,
    pub beta: Vec<i32>,
    /// Accepted candidates only; one profile row each.
    pub candidates: Vec<CandidateJson>,
    /// One entry per submitted candidate, including excluded ones.
    pub checks: Vec<CandidateCheck>,
    pub profile_matrix: Vec<Vec<i64>>,
    pub rank: usize,
    pub lower_bound: usize,
    pub conjecture_threshold: usize,
    pub refuted: bool,
    pub assumptions: String,
}

impl CertificateReport {
    /// Compact JSON in field-declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn excluded(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.label.as_str())
            .collect()
    }

    pub fn spec(&self) -> Result<ExampleSpec> {
        ExampleSpec::new(self.variant, self.m, self.params.clone())
    }

    /// Recomputes every machine-checkable field from the example parameters and the listed
    /// candidates and compares. Returns a description of the first mismatch.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let inst = self.spec().map_err(|e| e.to_string())?.build();
        if inst.beta.letters() != self.beta.as_slice() || inst.n() != self.n {
            return Err("beta does not match the example parameters".into());
        }
        let candidates: Vec<Candidate> = self
            .candidates
            .iter()
            .map(|c| c.to_candidate(self.n))
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
        for c in &candidates {
            let comm = commutator(&inst.beta, &c.word).map_err(|e| e.to_string())?;
            for engine in Engine::ALL {
                if !engine.is_identity(&comm) {
                    return Err(format!("{} does not commute ({})", c.label, engine.name()));
                }
            }
            if !blocks_preserved(&c.word, &inst.structure).map_err(|e| e.to_string())? {
                return Err(format!("{} is not block-preserving", c.label));
            }
        }
        let rows: Vec<Vec<i64>> = candidates
            .iter()
            .map(|c| block_profile(&c.word, &inst.structure).map(|p| p.to_row()))
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
        if rows != self.profile_matrix {
            return Err("profile matrix mismatch".into());
        }
        let rank = integer_rank(&rows).map_err(|e| e.to_string())?;
        if rank != self.rank || self.lower_bound != rank {
            return Err("rank mismatch".into());
        }
        if self.conjecture_threshold != self.n - 1 || self.refuted != (rank > self.n - 1) {
            return Err("refutation flag mismatch".into());
        }
        Ok(())
    }
}

fn assumptions_text(inst: &ExampleInstance, excluded: &[&str]) -> String {
    let pieces = match inst.spec.variant {
        Variant::PseudoAnosov => "pseudo-Anosov pieces with pairwise distinct dilatations",
        Variant::TwistEven | Variant::TwistOdd => "pairwise distinct powers of boundary twists",
    };
    let mut s = format!(
        "Taken as input (not machine-checked): every braid commuting with beta maps each block \
         of strands onto itself. The block boundaries form the canonical reduction system of \
         beta and its pieces are {pieces}, so a commuting braid permutes the reduction curves \
         and must fix each one. Given this, the block profile is a homomorphism from the \
         centralizer of beta to a free abelian group, and its image has rank at least the \
         rank below, which is therefore a lower bound on the number of generators of the \
         centralizer in B_n. Bounds in the mapping class group of the punctured disc differ by \
         the central boundary twist and are not reported. Machine-checked: each listed \
         candidate commutes with beta (coordinate action and Garside normal form agree), \
         preserves the blocks, and has the listed block profile; the rank is exact."
    );
    if excluded.is_empty() {
        s.push_str(" No candidates were excluded.");
    } else {
        s.push_str(&format!(
            " Excluded after failing checks: {}.",
            excluded.join(" ")
        ));
    }
    s
}

pub fn lower_bound_certificate(
    inst: &ExampleInstance,
    candidates: &[Candidate],
    execution: Execution,
) -> Result<CertificateReport> {
    if candidates.is_empty() {
        return Err(BraidError::NoCandidates);
    }
    let commutes = verify_commutation(&inst.beta, candidates, execution)?;
    let preserving = exec::try_map(execution, candidates, |c| {
        blocks_preserved(&c.word, &inst.structure)
    })?;
    let checks: Vec<CandidateCheck> = candidates
        .iter()
        .zip(commutes.iter().zip(&preserving))
        .map(|(c, (&commutes, &block_preserving))| CandidateCheck {
            label: c.label.clone(),
            commutes,
            block_preserving,
        })
        .collect();
    let accepted: Vec<&Candidate> = candidates
        .iter()
        .zip(&checks)
        .filter(|(_, k)| k.passed())
        .map(|(c, _)| c)
        .collect();
    let profile_matrix = accepted
        .iter()
        .map(|c| block_profile(&c.word, &inst.structure).map(|p| p.to_row()))
        .collect::<Result<Vec<_>>>()?;
    let rank = integer_rank(&profile_matrix)?;
    let n = inst.n();
    let excluded: Vec<&str> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.label.as_str())
        .collect();
    Ok(CertificateReport {
        variant: inst.spec.variant,
        m: inst.spec.m,
        n,
        sizes: inst.structure.sizes().to_vec(),
        params: inst.spec.params.clone(),
        beta: inst.beta.letters().to_vec(),
        candidates: accepted.iter().map(|c| c.to_json()).collect(),
        assumptions: assumptions_text(inst, &excluded),
        checks,
        profile_matrix,
        rank,
        lower_bound: rank,
        conjecture_threshold: n - 1,
        refuted: rank > n - 1,
    })
}

/// Builds the example and certifies it with the default candidates.
pub fn certify(spec: &ExampleSpec, execution: Execution) -> Result<CertificateReport> {
    let inst = spec.build();
    lower_bound_certificate(&inst, &default_candidate_set(&inst), execution)
}
