#![allow(dead_code)]

use braidcert::pure::pure_generator;
use braidcert::BraidWord;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

pub fn scramble<R: Rng>(rng: &mut R, word: &BraidWord, steps: usize) -> BraidWord {
    word.scramble(rng, steps)
}

pub fn trivial_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    BraidWord::random_trivial(rng, n, max_len)
}

/// Random pure braid: product of conjugated standard pure generators.
pub fn random_pure<R: Rng>(rng: &mut R, n: usize, factors: usize, conj_len: usize) -> BraidWord {
    let mut out = BraidWord::identity(n).unwrap();
    if n < 2 {
        return out;
    }
    for _ in 0..factors {
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let a = pure_generator(i, j, n).unwrap();
        let a = if rng.gen_bool(0.5) { a } else { a.inverse() };
        let g = { let len = rng.gen_range(0..=conj_len); BraidWord::random(rng, n, len) };
        out = out
            .compose(&g)
            .unwrap()
            .compose(&a)
            .unwrap()
            .compose(&g.inverse())
            .unwrap();
    }
    out
}

/// Rank over Q by plain Gaussian elimination on rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}
