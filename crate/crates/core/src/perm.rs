use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{1..size}` in one-line notation.
///
/// For braids the convention is positional: `image(i)` is the position at
/// which the strand starting at position `i` ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (1..=size).collect(),
        }
    }

    /// Builds a permutation from 1-based images, returning `None` if they do
    /// not form a bijection of `{1..len}`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation { images })
    }

    /// The transposition of `i` and `i + 1`.
    pub fn adjacent_transposition(size: usize, i: usize) -> Self {
        let mut p = Self::identity(size);
        p.images.swap(i - 1, i);
        p
    }

    /// The order-reversing permutation `i -> size + 1 - i`.
    pub fn reversal(size: usize) -> Self {
        Permutation {
            images: (1..=size).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// `self` first, then `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.size(), other.size(), "permutation size mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x - 1]).collect(),
        }
    }

    /// Swaps the values stored at positions `i` and `i + 1` (right
    /// multiplication by the transposition in function-composition order).
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Exchanges the values `i` and `i + 1` wherever they occur.
    pub(crate) fn swap_values(&mut self, i: usize) {
        for x in self.images.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }

    /// Number of inversions, i.e. the length of the positive permutation
    /// braid realizing this permutation.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.images {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}
