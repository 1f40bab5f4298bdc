//! The counterexample braids: block-diagonal products of pieces that are
//! pairwise distinguishable, so that any braid commuting with the product
//! has to keep every block in place.
//!
//! - `TwistEven`: `n = 2m`, blocks of two strands, block `i` twisted
//!   `a_i` full times (`σ_{2i-1}^{2a_i}`).
//! - `TwistOdd`: as above plus one free strand at the end, `n = 2m + 1`.
//! - `PseudoAnosov`: `n = 3m`, block `i` carries `(σ_1 σ_2⁻¹)^{k_i}`
//!   shifted onto strands `3i-2..3i`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::blocks::BlockStructure;
use crate::error::{BraidError, Result};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "twist")]
    TwistEven,
    #[serde(rename = "twist-odd")]
    TwistOdd,
    #[serde(rename = "pa")]
    PseudoAnosov,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::TwistEven => "twist",
            Variant::TwistOdd => "twist-odd",
            Variant::PseudoAnosov => "pa",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Variant {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "twist" => Ok(Variant::TwistEven),
            "twist-odd" => Ok(Variant::TwistOdd),
            "pa" => Ok(Variant::PseudoAnosov),
            _ => Err(BraidError::InvalidParams(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleSpec {
    pub variant: Variant,
    pub m: usize,
    /// Twist exponents or pseudo-Anosov powers, one per block.
    pub params: Vec<u32>,
}

impl ExampleSpec {
    pub fn new(variant: Variant, m: usize, params: Vec<u32>) -> Result<Self> {
        if m == 0 {
            return Err(BraidError::InvalidParams("m must be at least 1".into()));
        }
        if params.len() != m {
            return Err(BraidError::InvalidParams(format!(
                "expected {m} parameters, got {}",
                params.len()
            )));
        }
        if params.contains(&0) {
            return Err(BraidError::InvalidParams("parameters must be >= 1".into()));
        }
        let mut sorted = params.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(BraidError::InvalidParams(
                "parameters must be pairwise distinct".into(),
            ));
        }
        Ok(ExampleSpec { variant, m, params })
    }

    pub fn strand_count(&self) -> usize {
        match self.variant {
            Variant::TwistEven => 2 * self.m,
            Variant::TwistOdd => 2 * self.m + 1,
            Variant::PseudoAnosov => 3 * self.m,
        }
    }

    pub fn block_structure(&self) -> BlockStructure {
        let sizes = match self.variant {
            Variant::TwistEven => vec![2; self.m],
            Variant::TwistOdd => {
                let mut s = vec![2; self.m];
                s.push(1);
                s
            }
            Variant::PseudoAnosov => vec![3; self.m],
        };
        BlockStructure::new(sizes).expect("example block sizes are valid")
    }

    pub fn build(&self) -> ExampleInstance {
        let n = self.strand_count();
        let mut letters = Vec::new();
        match self.variant {
            Variant::TwistEven | Variant::TwistOdd => {
                for (i, &a) in self.params.iter().enumerate() {
                    let g = 2 * i as i32 + 1;
                    letters.extend(std::iter::repeat_n(g, 2 * a as usize));
                }
            }
            Variant::PseudoAnosov => {
                for (i, &k) in self.params.iter().enumerate() {
                    let o = 3 * i as i32;
                    for _ in 0..k {
                        letters.extend([o + 1, -(o + 2)]);
                    }
                }
            }
        }
        ExampleInstance {
            beta: BraidWord::from_raw(n, letters),
            structure: self.block_structure(),
            spec: self.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleInstance {
    pub beta: BraidWord,
    pub structure: BlockStructure,
    pub spec: ExampleSpec,
}

impl ExampleInstance {
    pub fn n(&self) -> usize {
        self.beta.strand_count()
    }

    pub fn to_json_view(&self) -> ExampleJson {
        ExampleJson {
            variant: self.spec.variant,
            m: self.spec.m,
            n: self.n(),
            sizes: self.structure.sizes().to_vec(),
            params: self.spec.params.clone(),
            beta: self.beta.letters().to_vec(),
        }
    }

    /// Inverse of [`Self::to_json_view`]; rebuilds and checks the word.
    pub fn from_json_view(view: &ExampleJson) -> Result<Self> {
        let spec = ExampleSpec::new(view.variant, view.m, view.params.clone())?;
        let inst = spec.build();
        if inst.n() != view.n
            || inst.structure.sizes() != view.sizes.as_slice()
            || inst.beta.letters() != view.beta.as_slice()
        {
            return Err(BraidError::InvalidParams(
                "example JSON is inconsistent with its parameters".into(),
            ));
        }
        Ok(inst)
    }
}

/// JSON shape of an example instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleJson {
    pub variant: Variant,
    pub m: usize,
    pub n: usize,
    pub sizes: Vec<usize>,
    pub params: Vec<u32>,
    pub beta: Vec<i32>,
}

pub fn build_twist_example(m: usize, exponents: &[u32]) -> Result<ExampleInstance> {
    Ok(ExampleSpec::new(Variant::TwistEven, m, exponents.to_vec())?.build())
}

pub fn build_twist_example_odd(m: usize, exponents: &[u32]) -> Result<ExampleInstance> {
    Ok(ExampleSpec::new(Variant::TwistOdd, m, exponents.to_vec())?.build())
}

pub fn build_pa_example(m: usize, powers: &[u32]) -> Result<ExampleInstance> {
    Ok(ExampleSpec::new(Variant::PseudoAnosov, m, powers.to_vec())?.build())
}

pub fn embed(word: &BraidWord, offset: usize, n: usize) -> Result<BraidWord> {
    word.embed(offset, n)
}

/// 2×2 integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2(pub [[BigInt; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Mat2::from_i64([[1, 0], [0, 1]])
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        Mat2(m.map(|row| row.map(BigInt::from)))
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn trace(&self) -> BigInt {
        &self.0[0][0] + &self.0[1][1]
    }
}

/// Image of a 3-strand braid in `SL(2, Z)`, with `σ_1 ↦ [[1,1],[0,1]]` and
/// `σ_2 ↦ [[1,0],[-1,1]]`.
pub fn sl2_image(word: &BraidWord) -> Result<Mat2> {
    if word.strand_count() != 3 {
        return Err(BraidError::WrongStrandCount {
            expected: 3,
            actual: word.strand_count(),
        });
    }
    let gen = |g: i32| match g {
        1 => Mat2::from_i64([[1, 1], [0, 1]]),
        -1 => Mat2::from_i64([[1, -1], [0, 1]]),
        2 => Mat2::from_i64([[1, 0], [-1, 1]]),
        -2 => Mat2::from_i64([[1, 0], [1, 1]]),
        _ => unreachable!("validated 3-strand word"),
    };
    Ok(word
        .letters()
        .iter()
        .fold(Mat2::identity(), |acc, &g| acc.mul(&gen(g))))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceDilatation {
    pub trace: BigInt,
    /// Floating approximation of the dilatation; `None` unless pseudo-Anosov.
    pub dilatation: Option<f64>,
    pub is_pseudo_anosov: bool,
}

/// Trace of the `SL(2, Z)` image; pseudo-Anosov iff `|trace| > 2`, with
/// dilatation `(|t| + sqrt(t² - 4)) / 2`.
pub fn pa_trace_and_dilatation(word: &BraidWord) -> Result<TraceDilatation> {
    let trace = sl2_image(word)?.trace();
    let is_pa = trace.abs() > BigInt::from(2);
    let dilatation = is_pa.then(|| {
        let half = trace.abs().to_f64().unwrap_or(f64::INFINITY) / 2.0;
        half + (half * half - 1.0).sqrt()
    });
    Ok(TraceDilatation {
        trace,
        dilatation,
        is_pseudo_anosov: is_pa,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn twist_builders() {
        let x = build_twist_example(3, &[1, 2, 3]).unwrap();
        assert_eq!(x.beta, w("1 1 3 3 3 3 5 5 5 5 5 5", 6));
        assert_eq!(x.structure.sizes(), &[2, 2, 2]);
        assert_eq!(build_twist_example(1, &[1]).unwrap().beta, w("1 1", 2));
        assert!(build_twist_example(2, &[1, 1]).is_err());
        assert!(build_twist_example(2, &[0, 1]).is_err());
        assert!(build_twist_example(2, &[1]).is_err());
        assert!(build_twist_example(0, &[]).is_err());

        let y = build_twist_example_odd(2, &[1, 2]).unwrap();
        assert_eq!(y.beta, w("1 1 3 3 3 3", 5));
        assert_eq!(y.structure.sizes(), &[2, 2, 1]);
        assert_eq!(build_twist_example_odd(1, &[2]).unwrap().beta, w("1 1 1 1", 3));
        assert!(build_twist_example_odd(2, &[2, 2]).is_err());
    }

    #[test]
    fn pa_builder() {
        let x = build_pa_example(2, &[1, 2]).unwrap();
        assert_eq!(x.beta, w("1 -2 4 -5 4 -5", 6));
        assert_eq!(build_pa_example(1, &[1]).unwrap().beta, w("1 -2", 3));
        assert!(build_pa_example(2, &[1, 1]).is_err());
    }

    #[test]
    fn traces() {
        let t = pa_trace_and_dilatation(&w("1 -2", 3)).unwrap();
        assert_eq!(t.trace, BigInt::from(3));
        assert!(t.is_pseudo_anosov);
        assert!((t.dilatation.unwrap() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(pa_trace_and_dilatation(&w("1 -2 1 -2", 3)).unwrap().trace, BigInt::from(7));
        let r = pa_trace_and_dilatation(&w("1 2 1", 3)).unwrap();
        assert_eq!(r.trace, BigInt::from(0));
        assert!(!r.is_pseudo_anosov);
        assert!(r.dilatation.is_none());
        assert!(pa_trace_and_dilatation(&w("1", 4)).is_err());
    }

    #[test]
    fn sl2_respects_relations() {
        assert_eq!(sl2_image(&w("1 2 1", 3)).unwrap(), sl2_image(&w("2 1 2", 3)).unwrap());
        assert_eq!(sl2_image(&w("1 -1 -2 2", 3)).unwrap(), Mat2::identity());
    }

    #[test]
    fn json_view_round_trip() {
        let x = build_twist_example_odd(2, &[3, 1]).unwrap();
        let v = x.to_json_view();
        assert_eq!(ExampleInstance::from_json_view(&v).unwrap(), x);
        let mut bad = v.clone();
        bad.beta.pop();
        assert!(ExampleInstance::from_json_view(&bad).is_err());
    }
}
