//! Three-valued cubic logic over the domain `{0, 1/2, 1}`.
//!
//! The library implements Rota-Metropolis algebras (term-equivalent to Post
//! algebras of order 3) together with the machinery built on top of them:
//!
//! - [`trit`]: the three-element carrier and its table-driven operations;
//! - [`formula`] / [`parse`]: formula ASTs, a text grammar, desugaring,
//!   signature translations, and truth-table synthesis;
//! - [`semantics`]: valuations, packed truth tables, the consequence
//!   relation arising from the sharpening order, and its reductions;
//! - [`faces`]: nonempty faces of the n-cube as words over `{0, h, 1}`,
//!   with the original partial face operations;
//! - [`algebra`]: finite-algebra axiom checking, the RM/Post
//!   interderivations, isomorphism search, and free algebras;
//! - [`clone`]: clone closure at arity <= 2 and the nondefinability of the
//!   lattice meet from `{0, 1/2, join, dpar}`;
//! - [`lindenbaum`]: Mod-sets, Lindenbaum algebras, and the cube/simplex
//!   correspondence tables;
//! - [`selftest`]: every exhaustive invariant sweep as a named check.
//!
//! The crate is `no_std` (it needs only `alloc`); IO, file formats and the
//! command-line front end live in the companion `rmlogic-cli` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod clone;
pub mod enumerate;
pub mod faces;
pub mod formula;
pub mod lindenbaum;
pub mod parse;
pub mod selftest;
pub mod semantics;
pub mod trit;

pub use faces::Face;
pub use formula::{Formula, PostFormula};
pub use parse::{parse, render, RenderStyle};
pub use semantics::{Theory, TruthTable, Valuation, Verdict};
pub use trit::Trit;
