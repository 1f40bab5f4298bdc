//! Garside left normal form.
//!
//! Every braid is written uniquely as `Δ^inf · A_1 ⋯ A_k` where each `A_j`
//! is a positive permutation braid other than `1` and `Δ`, and every
//! adjacent pair is left-weighted. A permutation braid is stored by its
//! permutation (positional convention, see [`Permutation`]).
//!
//! Descent sets of a permutation braid `P` with permutation `π`:
//! - starting set `S(P) = { i : π(i) > π(i+1) }` (P = σ_i · P'),
//! - finishing set `F(P) = { i : π⁻¹(i) > π⁻¹(i+1) }` (P = P' · σ_i).
//!
//! The pair `(A, B)` is left-weighted iff `S(B) ⊆ F(A)`. Normalizing a pair
//! repeatedly moves a letter `σ_i`, `i ∈ S(B) \ F(A)`, from the front of
//! `B` to the back of `A` until the inclusion holds.

use std::fmt;

use crate::perm::Permutation;
use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    strand_count: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

#[derive(Debug, Clone)]
struct Simple {
    perm: Permutation,
    inv: Permutation,
}

impl Simple {
    fn new(perm: Permutation) -> Self {
        let inv = perm.inverse();
        Simple { perm, inv }
    }

    fn in_start(&self, i: usize) -> bool {
        self.perm.image(i) > self.perm.image(i + 1)
    }

    fn in_finish(&self, i: usize) -> bool {
        self.inv.image(i) > self.inv.image(i + 1)
    }

    /// `self · σ_i`; requires `i ∉ F(self)`.
    fn push_back(&mut self, i: usize) {
        self.perm.swap_values(i);
        self.inv.swap_positions(i);
    }

    /// `σ_i⁻¹ · self`; requires `i ∈ S(self)`.
    fn pop_front(&mut self, i: usize) {
        self.perm.swap_positions(i);
        self.inv.swap_values(i);
    }

    fn tau(&self) -> Simple {
        Simple::new(tau(&self.perm))
    }
}

/// Conjugation by `Δ` on permutations: `i -> n + 1 - π(n + 1 - i)`.
fn tau(p: &Permutation) -> Permutation {
    let n = p.size();
    let images = (1..=n).map(|k| n + 1 - p.image(n + 1 - k)).collect();
    Permutation::from_images(images).expect("tau of a permutation is a permutation")
}

/// Makes `(a, b)` left-weighted. Returns whether anything moved.
fn normalize_pair(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.perm.size();
    let mut moved = false;
    loop {
        let next = (1..n).find(|&i| b.in_start(i) && !a.in_finish(i));
        match next {
            Some(i) => {
                a.push_back(i);
                b.pop_front(i);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// Appends `x` to a left-weighted sequence and restores left-weightedness
/// with one right-to-left sweep.
fn append_normalized(factors: &mut Vec<Simple>, x: Simple) {
    factors.push(x);
    let mut j = factors.len() - 1;
    while j > 0 {
        let (left, right) = factors.split_at_mut(j);
        if !normalize_pair(&mut left[j - 1], &mut right[0]) {
            break;
        }
        j -= 1;
    }
}

/// A reduced positive word for the permutation braid of `p`.
pub fn permutation_braid_word(p: &Permutation) -> BraidWord {
    let n = p.size();
    let mut s = Simple::new(p.clone());
    let mut letters = Vec::with_capacity(p.inversions());
    while let Some(i) = (1..n).find(|&i| s.in_start(i)) {
        letters.push(i as i32);
        s.pop_front(i);
    }
    BraidWord::from_raw(n, letters)
}

/// The positive half twist `Δ` on `n` strands.
pub fn half_twist(n: usize) -> BraidWord {
    permutation_braid_word(&Permutation::reversal(n))
}

impl GarsideNormalForm {
    pub fn of(word: &BraidWord) -> Self {
        let n = word.strand_count();
        // Δ⁻¹ is pulled to the front each time a negative letter appears:
        // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹) and X · Δ⁻¹ = Δ⁻¹ · τ(X). Rather than
        // applying τ to every earlier factor, record how many negative
        // letters precede each factor and apply the parity at the end.
        let mut raw: Vec<(Permutation, usize)> = Vec::with_capacity(word.len());
        let mut negatives = 0usize;
        for &g in word.letters() {
            let i = g.unsigned_abs() as usize;
            if g > 0 {
                raw.push((Permutation::adjacent_transposition(n, i), negatives));
            } else {
                let mut p = Permutation::reversal(n);
                p.swap_values(i);
                negatives += 1;
                raw.push((p, negatives));
            }
        }
        let mut factors: Vec<Simple> = Vec::with_capacity(raw.len());
        for (p, seen) in raw {
            let s = Simple::new(p);
            let s = if (negatives - seen) % 2 == 1 { s.tau() } else { s };
            append_normalized(&mut factors, s);
        }
        let delta = Permutation::reversal(n);
        let leading = factors.iter().take_while(|s| s.perm == delta).count();
        let trailing = factors[leading..]
            .iter()
            .rev()
            .take_while(|s| s.perm.is_identity())
            .count();
        let end = factors.len() - trailing;
        let mut inf = leading as i64 - negatives as i64;
        let factors: Vec<Permutation> = factors
            .drain(leading..end)
            .map(|s| s.perm)
            .collect();
        if n == 1 {
            inf = 0;
        }
        GarsideNormalForm {
            strand_count: n,
            inf,
            factors,
        }
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// `inf + k`: the exponent of `Δ` in the last factor position.
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// A word spelling out this normal form.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strand_count;
        let mut w = half_twist(n).pow(self.inf);
        for f in &self.factors {
            w.extend(&permutation_braid_word(f));
        }
        w
    }

    /// Checks the structural invariants: no trivial or `Δ` factor, and
    /// every adjacent pair left-weighted.
    pub fn is_well_formed(&self) -> bool {
        let n = self.strand_count;
        let delta = Permutation::reversal(n);
        if self
            .factors
            .iter()
            .any(|f| f.size() != n || f.is_identity() || *f == delta)
        {
            return false;
        }
        self.factors.windows(2).all(|pair| {
            let a = Simple::new(pair[0].clone());
            let b = Simple::new(pair[1].clone());
            (1..n).all(|i| !b.in_start(i) || a.in_finish(i))
        })
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " | {p}")?;
        }
        Ok(())
    }
}
