//! Computational tools for nilpotent multipliers of finite groups.
//!
//! The crate covers four areas:
//!
//! - **Combinatorics of basic commutators**: the Möbius/Witt counting
//!   formula ([`witt`]) and ordered generation of Hall bases ([`hall`]).
//! - **Exact abelian-group arithmetic** in invariant-factor form, including
//!   tensor products and iterated tensor powers ([`abelian`]).
//! - **A small finite group engine** over multiplication tables: central
//!   series, quotients, abelianization, minimal generators, special rank
//!   ([`group`]), plus normal forms in free nilpotent groups ([`nilpotent`]).
//! - **Multiplier values and inequality evaluators**: exact c-nilpotent
//!   multipliers where a closed form is known ([`multiplier`]) and one
//!   evaluator per order/exponent/generator bound ([`bounds`]), with a
//!   built-in verification corpus ([`corpus`]).
//!
//! The `nilmult` binary exposes all of this as subcommands; the crate's
//! `examples/` directory has one runnable example per capability.

pub mod abelian;
pub mod bounds;
pub mod caps;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod group;
pub mod hall;
pub mod multiplier;
pub mod nilpotent;
pub mod pvalue;
pub mod witt;

pub use abelian::AbelianGroup;
pub use caps::Caps;
pub use error::{Error, Result};

pub use hall::{hall_basis, BasicCommutator, HallBasis};


pub use pvalue::PValue;
pub use witt::{mobius, witt, WittTable};
