//! Finite colored cyclic operads over finite involutive sets of colors.
//!
//! Entries are finite sets indexed by profiles `c₀, …, cₙ`; the
//! [`cyclic::CyclicOperad`] trait exposes the permutation action, identities
//! and the one-sided compositions `∘ᵢ⁰`, from which every `∘ᵢʲ` is derived.
//! Validators check the axioms exhaustively up to an arity bound and return
//! a [`report::Report`] of violations.

pub mod collection;
pub mod constructions;
pub mod cyclic;
pub mod element;
pub mod error;
pub mod fixtures;
pub mod functors;
pub mod operad;
pub mod profile;
pub mod report;
pub mod termlang;

pub use error::{Error, Result};
