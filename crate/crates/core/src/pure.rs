//! Linking numbers of pure braids: the abelianization
//! `PB_n -> Z^{n(n-1)/2}`.
//!
//! Strands are labelled by their initial positions (top of the braid, before
//! the first letter). For a braid `g` with positional permutation `π` and a
//! pure braid `u`, this convention gives
//! `lk(g⁻¹ u g)[π(i), π(j)] = lk(u)[i, j]`.

use std::fmt;
use std::ops::{Add, Neg};

use crate::error::{BraidError, Result};
use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingMatrix {
    strand_count: usize,
    /// Entries for pairs `i < j` in lexicographic order.
    entries: Vec<i64>,
}

/// Position of the pair `{i, j}` (1-based, `i < j`) in lexicographic order.
pub(crate) fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // pairs starting with 1..i-1 come first
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

impl LinkingMatrix {
    pub fn zero(strand_count: usize) -> Self {
        LinkingMatrix {
            strand_count,
            entries: vec![0; strand_count * strand_count.saturating_sub(1) / 2],
        }
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    /// Linking number of strands `i` and `j` (order irrelevant).
    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(i != j, "linking number needs two distinct strands");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.entries[pair_index(a, b, self.strand_count)]
    }

    /// `(i, j, value)` for every pair, lexicographic.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let n = self.strand_count;
        (1..=n)
            .flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
            .zip(self.entries.iter())
            .map(|((i, j), &v)| (i, j, v))
    }

    pub fn as_vec(&self) -> &[i64] {
        &self.entries
    }
}

impl Add for &LinkingMatrix {
    type Output = LinkingMatrix;
    fn add(self, rhs: &LinkingMatrix) -> LinkingMatrix {
        assert_eq!(self.strand_count, rhs.strand_count);
        LinkingMatrix {
            strand_count: self.strand_count,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Neg for &LinkingMatrix {
    type Output = LinkingMatrix;
    fn neg(self) -> LinkingMatrix {
        LinkingMatrix {
            strand_count: self.strand_count,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, v) in self.iter() {
            writeln!(f, "{i} {j} {v}")?;
        }
        Ok(())
    }
}

/// Linking numbers by strand tracking. Fails on non-pure input.
pub fn linking_matrix(word: &BraidWord) -> Result<LinkingMatrix> {
    if !word.is_pure() {
        return Err(BraidError::NotPure);
    }
    let n = word.strand_count();
    let mut twice = LinkingMatrix::zero(n);
    word.for_each_crossing(|a, b, sign| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        twice.entries[pair_index(i, j, n)] += sign as i64;
    });
    for e in twice.entries.iter_mut() {
        debug_assert!(*e % 2 == 0, "pure braids cross each pair an even number of times");
        *e /= 2;
    }
    Ok(twice)
}

/// The standard generator `A_ij = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹`.
pub fn pure_generator(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(BraidError::IndexOutOfRange(format!(
            "pure generator needs 1 <= i < j <= n, got i={i}, j={j}, n={n}"
        )));
    }
    let down: Vec<i32> = (i + 1..j).rev().map(|k| k as i32).collect();
    let mut letters = down.clone();
    letters.extend([i as i32, i as i32]);
    letters.extend(down.iter().rev().map(|k| -k));
    Ok(BraidWord::from_raw(n, letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let n = 5;
        let mut k = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                assert_eq!(pair_index(i, j, n), k);
                k += 1;
            }
        }
    }

    #[test]
    fn linking_examples() {
        assert_eq!(linking_matrix(&w("1 1", 2)).unwrap().get(1, 2), 1);
        let a13 = linking_matrix(&w("2 1 1 -2", 3)).unwrap();
        assert_eq!(a13.as_vec(), &[0, 1, 0]);
        let both = w("1 1", 3).compose(&w("2 1 1 -2", 3)).unwrap();
        assert_eq!(linking_matrix(&both).unwrap().as_vec(), &[1, 1, 0]);
        assert_eq!(linking_matrix(&w("1", 2)), Err(BraidError::NotPure));
        assert_eq!(linking_matrix(&w("", 1)).unwrap().as_vec(), &[] as &[i64]);
    }

    #[test]
    fn generator_words() {
        assert_eq!(pure_generator(1, 2, 2).unwrap(), w("1 1", 2));
        assert_eq!(pure_generator(1, 3, 3).unwrap(), w("2 1 1 -2", 3));
        assert_eq!(pure_generator(2, 4, 4).unwrap(), w("3 2 2 -3", 4));
        assert_eq!(pure_generator(1, 4, 5).unwrap(), w("3 2 1 1 -2 -3", 5));
        assert!(pure_generator(2, 2, 3).is_err());
        assert!(pure_generator(0, 2, 3).is_err());
        assert!(pure_generator(1, 4, 3).is_err());
    }

    #[test]
    fn negative_full_twist() {
        let m = linking_matrix(&w("-1 -1 -1 -1", 2)).unwrap();
        assert_eq!(m.get(2, 1), -2);
    }
}
