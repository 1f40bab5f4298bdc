//! Deciding equality of braids.
//!
//! Two engines are available and are kept independent: the coordinate
//! action on laminations ([`crate::dynnikov`]) and the Garside left normal
//! form ([`crate::garside`]). [`is_identity`] uses the coordinate action;
//! [`is_identity_checked`] runs both and refuses to answer if they differ.

use crate::dynnikov;
use crate::error::{BraidError, Result};
use crate::exec::{self, Execution};
use crate::garside::GarsideNormalForm;
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Coordinates,
    Garside,
}

impl Engine {
    pub const ALL: [Engine; 2] = [Engine::Coordinates, Engine::Garside];

    pub fn is_identity(self, word: &BraidWord) -> bool {
        match self {
            Engine::Coordinates => dynnikov::is_identity(word),
            Engine::Garside => GarsideNormalForm::of(word).is_identity(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Engine::Coordinates => "coordinates",
            Engine::Garside => "garside",
        }
    }
}

pub fn is_identity(word: &BraidWord) -> bool {
    Engine::Coordinates.is_identity(word)
}

/// Both engines; an error if they disagree.
pub fn is_identity_checked(word: &BraidWord) -> Result<bool> {
    let a = Engine::Coordinates.is_identity(word);
    let b = Engine::Garside.is_identity(word);
    if a != b {
        return Err(BraidError::EngineDisagreement(word.to_string()));
    }
    Ok(a)
}

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    Ok(is_identity(&u.compose(&v.inverse())?))
}

/// `u v u⁻¹ v⁻¹`.
pub fn commutator(u: &BraidWord, v: &BraidWord) -> Result<BraidWord> {
    u.compose(v)?.compose(&u.inverse())?.compose(&v.inverse())
}

pub fn commutes(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    Ok(is_identity(&commutator(u, v)?))
}

pub fn commutes_with(engine: Engine, u: &BraidWord, v: &BraidWord) -> Result<bool> {
    Ok(engine.is_identity(&commutator(u, v)?))
}

pub fn normal_form(word: &BraidWord) -> GarsideNormalForm {
    GarsideNormalForm::of(word)
}

/// Triviality verdicts for a batch of words, in input order.
pub fn is_identity_batch(engine: Engine, exec: Execution, words: &[BraidWord]) -> Vec<bool> {
    exec::map(exec, words, |w| engine.is_identity(w))
}
