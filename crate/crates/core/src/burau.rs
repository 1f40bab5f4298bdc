//! Reduced Burau representation of `B_3`, which is faithful, as an
//! independent triviality oracle for three strands.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{BraidError, Result};
use crate::word::BraidWord;

/// Integer Laurent polynomial in `t`, kept normalized: no leading or
/// trailing zero coefficients; zero is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(c: i64, exp: i64) -> Self {
        LaurentPoly {
            low: exp,
            coeffs: vec![BigInt::from(c)],
        }
        .normalized()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Coefficient of `t^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = (self.low + self.coeffs.len() as i64).max(rhs.low + rhs.coeffs.len() as i64);
        let coeffs = (low..high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly { low, coeffs }.normalized()
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly {
            low: self.low + rhs.low,
            coeffs,
        }
        .normalized()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{c}t^{}", self.low + k as i64)?;
            first = false;
        }
        Ok(())
    }
}

/// 2×2 matrix over Laurent polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurauMatrix(pub [[LaurentPoly; 2]; 2]);

impl BurauMatrix {
    pub fn identity() -> Self {
        BurauMatrix([
            [LaurentPoly::constant(1), LaurentPoly::zero()],
            [LaurentPoly::zero(), LaurentPoly::constant(1)],
        ])
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    fn generator(g: i32) -> Self {
        let m = LaurentPoly::monomial;
        let z = LaurentPoly::zero;
        match g {
            1 => BurauMatrix([[m(-1, 1), m(1, 0)], [z(), m(1, 0)]]),
            -1 => BurauMatrix([[m(-1, -1), m(1, -1)], [z(), m(1, 0)]]),
            2 => BurauMatrix([[m(1, 0), z()], [m(1, 1), m(-1, 1)]]),
            -2 => BurauMatrix([[m(1, 0), z()], [m(1, 0), m(-1, -1)]]),
            _ => unreachable!("B_3 has generators ±1, ±2"),
        }
    }

    pub fn mul(&self, rhs: &BurauMatrix) -> BurauMatrix {
        let a = &self.0;
        let b = &rhs.0;
        let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        BurauMatrix([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }
}

/// Reduced Burau image of a 3-strand braid.
pub fn burau3(word: &BraidWord) -> Result<BurauMatrix> {
    if word.strand_count() != 3 {
        return Err(BraidError::WrongStrandCount {
            expected: 3,
            actual: word.strand_count(),
        });
    }
    Ok(word
        .letters()
        .iter()
        .fold(BurauMatrix::identity(), |acc, &g| acc.mul(&BurauMatrix::generator(g))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(text: &str) -> BurauMatrix {
        burau3(&BraidWord::parse(text, 3).unwrap()).unwrap()
    }

    #[test]
    fn relations() {
        assert!(b("").is_identity());
        assert_eq!(b("1 2 1"), b("2 1 2"));
        assert!(b("1 -1").is_identity());
        assert!(b("-2 2").is_identity());
        assert!(!b("1 2 1 2 1 2").is_identity());
    }

    #[test]
    fn product_of_two_generators() {
        // [[-t, 1], [0, 1]] · [[1, 0], [1, -1/t]] = [[1 - t, -1/t], [1, -1/t]]
        let m = b("1 -2");
        assert!(!m.0[0][0].is_constant());
        assert_eq!(m.0[0][0].coeff(0), BigInt::from(1));
        assert_eq!(m.0[0][0].coeff(1), BigInt::from(-1));
        assert_eq!(m.0[0][1], LaurentPoly::monomial(-1, -1));
        assert_eq!(m.0[1][0], LaurentPoly::constant(1));
        assert_eq!(m.0[1][1], LaurentPoly::monomial(-1, -1));
    }

    #[test]
    fn rejects_other_strand_counts() {
        assert!(burau3(&BraidWord::parse("1", 2).unwrap()).is_err());
    }

    #[test]
    fn laurent_arithmetic() {
        let p = &LaurentPoly::monomial(1, -1) + &LaurentPoly::constant(2);
        let q = &p * &p;
        assert_eq!(q.coeff(-2), BigInt::from(1));
        assert_eq!(q.coeff(-1), BigInt::from(4));
        assert_eq!(q.coeff(0), BigInt::from(4));
        let r = &p + &LaurentPoly::monomial(-1, -1);
        assert_eq!(r, LaurentPoly::constant(2));
        assert!((&r + &LaurentPoly::constant(-2)).is_zero());
    }
}
