//! Rank of integer matrices over `Q` by fraction-free (Bareiss)
//! elimination. Every intermediate entry is a minor of the input, so all
//! divisions are exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{BraidError, Result};

pub fn integer_rank(rows: &[Vec<i64>]) -> Result<usize> {
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    integer_rank_big(&big)
}

pub fn integer_rank_big(rows: &[Vec<BigInt>]) -> Result<usize> {
    let Some(first) = rows.first() else {
        return Ok(0);
    };
    let cols = first.len();
    for (row, r) in rows.iter().enumerate() {
        if r.len() != cols {
            return Err(BraidError::RaggedRows {
                row,
                len: r.len(),
                expected: cols,
            });
        }
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let num = pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Ok(rank)
}
