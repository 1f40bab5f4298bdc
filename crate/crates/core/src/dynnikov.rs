//! Piecewise-linear action of the braid group on integral laminations of
//! the punctured disc, in Dynnikov coordinates.
//!
//! A lamination on the `n`-strand disc is encoded by `2n` integers
//! `(a_1, b_1, ..., a_n, b_n)`. The base lamination `(0, 1, ..., 0, 1)` has
//! trivial stabilizer, so a braid is trivial iff it fixes the base point.
//! Generators act on the right, one letter at a time; `σ_i^{±1}` only
//! touches the pairs `i` and `i + 1`.
//!
//! Coordinates can grow exponentially with word length. Evaluation first
//! runs on `i64` with checked arithmetic and restarts on `BigInt` the first
//! time an operation overflows.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::BraidWord;

/// Exact integral coordinates of a lamination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveCoordinates {
    coordinates: Vec<BigInt>,
}

impl CurveCoordinates {
    /// The base lamination for `n` strands.
    pub fn base(n: usize) -> Self {
        CurveCoordinates {
            coordinates: base_vec::<BigInt>(n),
        }
    }

    pub fn from_vec(coordinates: Vec<BigInt>) -> Self {
        assert!(coordinates.len().is_multiple_of(2), "coordinates come in (a, b) pairs");
        CurveCoordinates { coordinates }
    }

    pub fn coordinates(&self) -> &[BigInt] {
        &self.coordinates
    }

    pub fn strand_count(&self) -> usize {
        self.coordinates.len() / 2
    }

    /// Applies `word` to these coordinates.
    pub fn act(&self, word: &BraidWord) -> CurveCoordinates {
        assert_eq!(self.strand_count(), word.strand_count());
        let small: Option<Vec<i64>> = self
            .coordinates
            .iter()
            .map(|x| i64::try_from(x).ok())
            .collect();
        if let Some(mut v) = small {
            if act_all(&mut v, word.letters()).is_some() {
                return CurveCoordinates {
                    coordinates: v.into_iter().map(BigInt::from).collect(),
                };
            }
        }
        let mut v = self.coordinates.clone();
        act_all(&mut v, word.letters()).expect("bigint arithmetic cannot overflow");
        CurveCoordinates { coordinates: v }
    }

    /// Largest absolute coordinate, in bits.
    pub fn max_bits(&self) -> u64 {
        self.coordinates.iter().map(|x| x.bits()).max().unwrap_or(0)
    }
}

/// Whether `word` fixes the base lamination, i.e. is the trivial braid.
pub fn is_identity(word: &BraidWord) -> bool {
    let n = word.strand_count();
    let mut v = base_vec::<i64>(n);
    match act_all(&mut v, word.letters()) {
        Some(()) => v == base_vec::<i64>(n),
        None => {
            let mut big = base_vec::<BigInt>(n);
            act_all(&mut big, word.letters()).expect("bigint arithmetic cannot overflow");
            big == base_vec::<BigInt>(n)
        }
    }
}

/// Minimal exact-integer interface the update rules need. `None` signals
/// overflow.
trait Coord: Clone + Ord + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
}

impl Coord for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
}

impl Coord for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
}

fn base_vec<T: Coord>(n: usize) -> Vec<T> {
    (0..2 * n)
        .map(|k| if k % 2 == 0 { T::zero() } else { T::one() })
        .collect()
}

fn pos<T: Coord>(x: &T) -> T {
    std::cmp::max(x.clone(), T::zero())
}

fn neg<T: Coord>(x: &T) -> T {
    std::cmp::min(x.clone(), T::zero())
}

fn act_all<T: Coord>(v: &mut [T], letters: &[i32]) -> Option<()> {
    for &g in letters {
        act_letter(v, g)?;
    }
    Some(())
}

/// One generator. Writes nothing back if any step overflows.
fn act_letter<T: Coord>(v: &mut [T], g: i32) -> Option<()> {
    let i = g.unsigned_abs() as usize - 1;
    let (a1, b1, a2, b2) = (&v[2 * i], &v[2 * i + 1], &v[2 * i + 2], &v[2 * i + 3]);
    let (na1, nb1, na2, nb2);
    if g > 0 {
        // z = a1 - b1^- - a2 + b2^+
        let z = a1.sub(&neg(b1))?.sub(a2)?.add(&pos(b2))?;
        na1 = a1.add(&pos(b1))?.add(&pos(&pos(b2).sub(&z)?))?;
        nb1 = b2.sub(&pos(&z))?;
        na2 = a2.add(&neg(b2))?.add(&neg(&neg(b1).add(&z)?))?;
        nb2 = b1.add(&pos(&z))?;
    } else {
        // z = a1 + b1^- - a2 - b2^+
        let z = a1.add(&neg(b1))?.sub(a2)?.sub(&pos(b2))?;
        na1 = a1.sub(&pos(b1))?.sub(&pos(&pos(b2).add(&z)?))?;
        nb1 = b2.add(&neg(&z))?;
        na2 = a2.sub(&neg(b2))?.sub(&neg(&neg(b1).sub(&z)?))?;
        nb2 = b1.sub(&neg(&z))?;
    }
    v[2 * i] = na1;
    v[2 * i + 1] = nb1;
    v[2 * i + 2] = na2;
    v[2 * i + 3] = nb2;
    Some(())
}
