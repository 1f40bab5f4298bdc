//! Words in the Artin generators of the braid group.
//!
//! A letter `g > 0` stands for `σ_g` and `g < 0` for `σ_{|g|}^{-1}`; indices
//! are 1-based, so valid letters on `n` strands satisfy `1 <= |g| <= n - 1`.
//! Words are never reduced implicitly.

use std::fmt;

use rand::Rng;

use crate::error::{BraidError, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i32>,
}

fn check_strands(n: usize) -> Result<()> {
    if n == 0 {
        Err(BraidError::InvalidStrandCount(n))
    } else {
        Ok(())
    }
}

fn check_letter(g: i64, n: usize) -> Result<i32> {
    if g == 0 {
        return Err(BraidError::ZeroLetter);
    }
    if g.unsigned_abs() >= n as u64 {
        return Err(BraidError::LetterOutOfRange {
            letter: g,
            strands: n,
        });
    }
    Ok(g as i32)
}

impl BraidWord {
    pub fn identity(strand_count: usize) -> Result<Self> {
        check_strands(strand_count)?;
        Ok(BraidWord {
            strand_count,
            letters: Vec::new(),
        })
    }

    pub fn new(strand_count: usize, letters: Vec<i32>) -> Result<Self> {
        check_strands(strand_count)?;
        for &g in &letters {
            check_letter(g as i64, strand_count)?;
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    /// Caller guarantees every letter is in range.
    pub(crate) fn from_raw(strand_count: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&g| g != 0 && (g.unsigned_abs() as usize) < strand_count));
        BraidWord {
            strand_count,
            letters,
        }
    }

    /// Parses whitespace-separated signed decimal integers.
    pub fn parse(text: &str, strand_count: usize) -> Result<Self> {
        check_strands(strand_count)?;
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let g: i64 = tok
                    .parse()
                    .map_err(|_| BraidError::MalformedToken(tok.to_string()))?;
                check_letter(g, strand_count)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strand_count != other.strand_count {
            return Err(BraidError::StrandCountMismatch {
                left: self.strand_count,
                right: other.strand_count,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_raw(self.strand_count, letters))
    }

    /// Appends `other` in place. Panics on a strand-count mismatch.
    pub(crate) fn extend(&mut self, other: &BraidWord) {
        assert_eq!(self.strand_count, other.strand_count);
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::from_raw(
            self.strand_count,
            self.letters.iter().rev().map(|g| -g).collect(),
        )
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_raw(self.strand_count, letters)
    }

    /// Cancels adjacent `g, -g` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord::from_raw(self.strand_count, out)
    }

    /// Image in the symmetric group; see [`Permutation`] for the convention.
    pub fn permutation(&self) -> Permutation {
        // strand_at[p] = strand currently at position p
        let mut strand_at = Permutation::identity(self.strand_count);
        for &g in &self.letters {
            strand_at.swap_positions(g.unsigned_abs() as usize);
        }
        strand_at.inverse()
    }

    /// Walks the word tracking strands; for each letter calls
    /// `f(a, b, sign)` where `a` is the initial position of the strand on
    /// the left of the crossing and `b` that of the strand on the right.
    pub fn for_each_crossing<F: FnMut(usize, usize, i32)>(&self, mut f: F) {
        let mut strand_at: Vec<usize> = (1..=self.strand_count).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize;
            f(strand_at[i - 1], strand_at[i], g.signum());
            strand_at.swap(i - 1, i);
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Shifts every generator index by `offset`, viewing the word inside a
    /// braid group on `n` strands.
    pub fn embed(&self, offset: usize, n: usize) -> Result<BraidWord> {
        if offset + self.strand_count > n {
            return Err(BraidError::IndexOutOfRange(format!(
                "cannot embed {} strands at offset {offset} into {n}",
                self.strand_count
            )));
        }
        let shift = offset as i32;
        Ok(BraidWord::from_raw(
            n,
            self.letters
                .iter()
                .map(|&g| if g > 0 { g + shift } else { g - shift })
                .collect(),
        ))
    }

    /// Uniformly random word: each letter is a generator or inverse chosen
    /// uniformly among the `2(n - 1)` possibilities.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, strand_count: usize, len: usize) -> BraidWord {
        assert!(strand_count >= 1);
        if strand_count == 1 {
            return BraidWord::from_raw(1, Vec::new());
        }
        let top = strand_count as i32 - 1;
        let letters = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..=top);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        BraidWord::from_raw(strand_count, letters)
    }

    /// Rewrites the word by `steps` randomly chosen relation moves: inserting
    /// or cancelling `g, -g`, swapping far-apart letters, `x y x -> y x y`
    /// and `x y x⁻¹ -> y⁻¹ x y` for adjacent generators of equal sign. The
    /// result is the same braid.
    pub fn scramble<R: Rng + ?Sized>(&self, rng: &mut R, steps: usize) -> BraidWord {
        let n = self.strand_count;
        if n < 2 {
            return self.clone();
        }
        let mut w = self.letters.clone();
        let adjacent = |x: i32, y: i32| x.signum() == y.signum() && (x.abs() - y.abs()).abs() == 1;
        for _ in 0..steps {
            let k = if w.is_empty() { 0 } else { rng.gen_range(0..w.len()) };
            match rng.gen_range(0..5) {
                0 => {
                    let g = rng.gen_range(1..n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
                    let at = rng.gen_range(0..=w.len());
                    w.splice(at..at, [g, -g]);
                }
                1 if k + 1 < w.len() && w[k] == -w[k + 1] => {
                    w.drain(k..k + 2);
                }
                2 if k + 1 < w.len() && (w[k].abs() - w[k + 1].abs()).abs() >= 2 => {
                    w.swap(k, k + 1);
                }
                3 if k + 2 < w.len() && w[k] == w[k + 2] && adjacent(w[k], w[k + 1]) => {
                    let (x, y) = (w[k], w[k + 1]);
                    w[k..k + 3].copy_from_slice(&[y, x, y]);
                }
                4 if k + 2 < w.len() && w[k + 2] == -w[k] && adjacent(w[k], w[k + 1]) => {
                    let (x, y) = (w[k], w[k + 1]);
                    w[k..k + 3].copy_from_slice(&[-y, x, y]);
                }
                _ => {}
            }
        }
        BraidWord::from_raw(n, w)
    }

    /// A word for the trivial braid of length at most `max_len`: a random
    /// word followed by the inverse of a scrambled copy of itself.
    pub fn random_trivial<R: Rng + ?Sized>(rng: &mut R, strand_count: usize, max_len: usize) -> BraidWord {
        loop {
            let base_len = rng.gen_range(0..=max_len / 3);
            let w = BraidWord::random(rng, strand_count, base_len);
            let s = w.scramble(rng, 3 * base_len + 4);
            let mut letters = w.letters;
            letters.extend(s.letters.iter().rev().map(|g| -g));
            if letters.len() <= max_len {
                return BraidWord::from_raw(strand_count, letters);
            }
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}
