//! Blocks of consecutive strands, and the braids that move them as units.
//!
//! A [`BlockStructure`] splits the `n` strands into consecutive intervals
//! (the discs). Braids that map every block onto itself form a subgroup; on
//! that subgroup the [`BlockProfile`] (signed crossing counts inside each
//! block and between each pair of blocks) is an additive homomorphism.
//! Cabling sends a braid on `m` strands to a braid on `m·s` strands in which
//! each strand is replaced by a ribbon of `s` parallel strands; the tube
//! projection undoes this.

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::pure::pair_index;
use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockStructure {
    sizes: Vec<usize>,
}

impl BlockStructure {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(BraidError::InvalidBlocks("no blocks".into()));
        }
        if sizes.contains(&0) {
            return Err(BraidError::InvalidBlocks("empty block".into()));
        }
        Ok(BlockStructure { sizes })
    }

    pub fn uniform(blocks: usize, size: usize) -> Result<Self> {
        Self::new(vec![size; blocks])
    }

    /// Parses a comma-separated size list such as `2,2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let sizes = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| BraidError::InvalidBlocks(format!("bad size {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn strand_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    /// Size of block `i` (1-based).
    pub fn size(&self, i: usize) -> usize {
        self.sizes[i - 1]
    }

    /// Number of strands before block `i` (1-based).
    pub fn offset(&self, i: usize) -> usize {
        self.sizes[..i - 1].iter().sum()
    }

    pub fn has_singleton(&self) -> bool {
        self.sizes.contains(&1)
    }

    /// Block index (1-based) of every strand, indexed by `strand - 1`.
    pub fn block_labels(&self) -> Vec<usize> {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(b, &s)| std::iter::repeat_n(b + 1, s))
            .collect()
    }

    /// Whether generator `σ_g` acts inside block `i`.
    pub fn is_internal(&self, i: usize, g: usize) -> bool {
        let o = self.offset(i);
        o < g && g < o + self.size(i)
    }

    fn check_strands(&self, word: &BraidWord) -> Result<()> {
        if word.strand_count() != self.strand_count() {
            return Err(BraidError::StrandCountMismatch {
                left: word.strand_count(),
                right: self.strand_count(),
            });
        }
        Ok(())
    }

    fn check_block(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.block_count() {
            return Err(BraidError::IndexOutOfRange(format!(
                "block {i} not in 1..={}",
                self.block_count()
            )));
        }
        Ok(())
    }

    fn swapped(&self, t: usize) -> BlockStructure {
        let mut sizes = self.sizes.clone();
        sizes.swap(t - 1, t);
        BlockStructure { sizes }
    }
}

pub fn blocks_preserved(word: &BraidWord, blocks: &BlockStructure) -> Result<bool> {
    blocks.check_strands(word)?;
    let labels = blocks.block_labels();
    let perm = word.permutation();
    Ok((1..=word.strand_count()).all(|k| labels[perm.image(k) - 1] == labels[k - 1]))
}

/// The word moving block `t` across block `t + 1`.
///
/// With `p = size(t)`, `q = size(t + 1)` and `o = offset(t)`, the positive
/// crossing is `∏_{i=0}^{p-1} σ_{o+p-i} σ_{o+p-i+1} ⋯ σ_{o+p-i+q-1}`: the
/// rightmost strand of block `t` travels first. It has `p·q` letters and
/// leaves the two blocks in swapped positions. The negative crossing is the
/// inverse of the positive crossing of the swapped arrangement, so it also
/// starts from the current arrangement.
pub fn block_crossing(t: usize, blocks: &BlockStructure, sign: i32) -> Result<BraidWord> {
    let m = blocks.block_count();
    if t == 0 || t >= m {
        return Err(BraidError::IndexOutOfRange(format!(
            "block crossing {t} needs 1 <= t <= {}",
            m.saturating_sub(1)
        )));
    }
    if sign != 1 && sign != -1 {
        return Err(BraidError::InvalidParams(format!("sign must be ±1, got {sign}")));
    }
    if sign < 0 {
        return Ok(block_crossing(t, &blocks.swapped(t), 1)?.inverse());
    }
    let (p, q, o) = (blocks.size(t), blocks.size(t + 1), blocks.offset(t));
    let mut letters = Vec::with_capacity(p * q);
    for i in 0..p {
        let start = o + p - i;
        letters.extend((start..start + q).map(|g| g as i32));
    }
    Ok(BraidWord::from_raw(blocks.strand_count(), letters))
}

/// Replaces each strand of `gamma` by `size` parallel strands.
pub fn cable(gamma: &BraidWord, size: usize) -> Result<BraidWord> {
    let blocks = BlockStructure::uniform(gamma.strand_count(), size)?;
    let mut out = BraidWord::identity(blocks.strand_count())?;
    for &g in gamma.letters() {
        out.extend(&block_crossing(g.unsigned_abs() as usize, &blocks, g.signum())?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TubeToken {
    /// A braid internal to the block currently at position `block`, written
    /// with global generator indices.
    Interior { block: usize, word: BraidWord },
    /// Block at position `position` crosses the one at `position + 1`.
    Cross { position: usize, sign: i32 },
}

/// A block-structured word: interior moves and whole-block crossings.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TubeWord {
    pub tokens: Vec<TubeToken>,
}

impl TubeWord {
    pub fn new(tokens: Vec<TubeToken>) -> Self {
        TubeWord { tokens }
    }

    /// The tube word of the cable of `gamma`: one crossing per letter.
    pub fn of_cable(gamma: &BraidWord) -> Self {
        TubeWord {
            tokens: gamma
                .letters()
                .iter()
                .map(|&g| TubeToken::Cross {
                    position: g.unsigned_abs() as usize,
                    sign: g.signum(),
                })
                .collect(),
        }
    }

    /// Validates against `blocks` (tracking block sizes through crossings)
    /// and spells out the full braid word.
    pub fn to_braid(&self, blocks: &BlockStructure) -> Result<BraidWord> {
        let mut current = blocks.clone();
        let mut out = BraidWord::identity(blocks.strand_count())?;
        for (k, token) in self.tokens.iter().enumerate() {
            match token {
                TubeToken::Interior { block, word } => {
                    if *block == 0 || *block > current.block_count() {
                        return Err(BraidError::MalformedTube(format!(
                            "token {k}: block {block} out of range"
                        )));
                    }
                    if word.strand_count() != current.strand_count() {
                        return Err(BraidError::MalformedTube(format!(
                            "token {k}: interior word has {} strands, expected {}",
                            word.strand_count(),
                            current.strand_count()
                        )));
                    }
                    if let Some(g) = word
                        .letters()
                        .iter()
                        .find(|g| !current.is_internal(*block, g.unsigned_abs() as usize))
                    {
                        return Err(BraidError::MalformedTube(format!(
                            "token {k}: letter {g} is not internal to block {block}"
                        )));
                    }
                    out.extend(word);
                }
                TubeToken::Cross { position, sign } => {
                    let crossing = block_crossing(*position, &current, *sign)
                        .map_err(|e| BraidError::MalformedTube(format!("token {k}: {e}")))?;
                    out.extend(&crossing);
                    current = current.swapped(*position);
                }
            }
        }
        Ok(out)
    }
}

/// The braid on `m` strands traced by the blocks: interiors collapse,
/// crossings become generators.
pub fn tube_projection(tube: &TubeWord, blocks: &BlockStructure) -> Result<BraidWord> {
    tube.to_braid(blocks)?;
    let letters = tube
        .tokens
        .iter()
        .filter_map(|t| match t {
            TubeToken::Cross { position, sign } => Some(*position as i32 * sign),
            TubeToken::Interior { .. } => None,
        })
        .collect();
    BraidWord::new(blocks.block_count(), letters)
}

/// Full twist on block `i`: `(σ_a σ_{a+1} ⋯ σ_{a+s-2})^s` with `a` the first
/// internal generator; empty for a singleton block.
pub fn block_twist(i: usize, blocks: &BlockStructure) -> Result<BraidWord> {
    blocks.check_block(i)?;
    let s = blocks.size(i);
    let a = blocks.offset(i) + 1;
    let run: Vec<i32> = (a..a + s - 1).map(|g| g as i32).collect();
    Ok(BraidWord::from_raw(blocks.strand_count(), run.repeat(s)))
}

/// Block version of the pure generator `A_jk`: block `k` is carried left
/// next to block `j`, the two make a full turn around each other, and block
/// `k` is carried back. Block sizes are tracked through every move.
pub fn block_linking(j: usize, k: usize, blocks: &BlockStructure) -> Result<BraidWord> {
    let m = blocks.block_count();
    if !(1 <= j && j < k && k <= m) {
        return Err(BraidError::IndexOutOfRange(format!(
            "block linking needs 1 <= j < k <= {m}, got j={j}, k={k}"
        )));
    }
    let mut current = blocks.clone();
    let mut out = BraidWord::identity(blocks.strand_count())?;
    let mut carried = Vec::with_capacity(k - j - 1);
    for t in (j + 1..k).rev() {
        let c = block_crossing(t, &current, 1)?;
        out.extend(&c);
        carried.push(c);
        current = current.swapped(t);
    }
    for _ in 0..2 {
        out.extend(&block_crossing(j, &current, 1)?);
        current = current.swapped(j);
    }
    for c in carried.iter().rev() {
        out.extend(&c.inverse());
    }
    Ok(out)
}

/// Signed crossing counts of a block-preserving braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockProfile {
    /// `Θ_i`: crossings between two strands of block `i`.
    pub internal: Vec<i64>,
    /// `X_jk` for `j < k` in lexicographic order: crossings between a strand
    /// of block `j` and one of block `k`.
    pub cross: Vec<i64>,
}

impl BlockProfile {
    pub fn zero(blocks: usize) -> Self {
        BlockProfile {
            internal: vec![0; blocks],
            cross: vec![0; blocks * blocks.saturating_sub(1) / 2],
        }
    }

    pub fn block_count(&self) -> usize {
        self.internal.len()
    }

    pub fn cross_count(&self, j: usize, k: usize) -> i64 {
        let (a, b) = if j < k { (j, k) } else { (k, j) };
        self.cross[pair_index(a, b, self.block_count())]
    }

    /// `Θ_1..Θ_m` followed by `X_jk` in lexicographic pair order.
    pub fn to_row(&self) -> Vec<i64> {
        self.internal.iter().chain(&self.cross).copied().collect()
    }

    pub fn add(&self, other: &BlockProfile) -> BlockProfile {
        assert_eq!(self.block_count(), other.block_count());
        let sum = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        BlockProfile {
            internal: sum(&self.internal, &other.internal),
            cross: sum(&self.cross, &other.cross),
        }
    }
}

pub fn block_profile(word: &BraidWord, blocks: &BlockStructure) -> Result<BlockProfile> {
    if !blocks_preserved(word, blocks)? {
        return Err(BraidError::NotBlockPreserving);
    }
    let m = blocks.block_count();
    let labels = blocks.block_labels();
    let mut profile = BlockProfile::zero(m);
    word.for_each_crossing(|a, b, sign| {
        let (x, y) = (labels[a - 1], labels[b - 1]);
        let sign = sign as i64;
        if x == y {
            profile.internal[x - 1] += sign;
        } else {
            let (j, k) = if x < y { (x, y) } else { (y, x) };
            profile.cross[pair_index(j, k, m)] += sign;
        }
    });
    Ok(profile)
}
