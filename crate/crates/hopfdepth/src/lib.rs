//! An exact-arithmetic engine for finite-dimensional Hopf algebras given by
//! rational structure constants: group algebras and their duals, smash
//! products, double cross products and Drinfel'd doubles, together with a
//! subring-depth engine built on canonical central-annihilator supports.
//!
//! Everything is computed over the rationals with no rounding. By the
//! Noether–Deuring theorem, direct-summand similarity of modules is
//! preserved and reflected under extension of the ground field, so the depth
//! values reported here are the depth values over every field of
//! characteristic zero.

pub mod algebra;
pub mod bimodule;
pub mod catalog;
pub mod cli;
pub mod depth;
pub mod error;
pub mod group;
pub mod hopf;
pub mod json;
pub mod matrix;
pub mod products;
pub mod rat;
pub mod sparse;
pub mod subspace;
pub mod theorems;

pub use error::HopfError;
pub use rat::Rat;
