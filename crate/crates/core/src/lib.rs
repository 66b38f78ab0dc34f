//! Classification data for group-theoretical tensor categories over finite
//! (étale) groups.
//!
//! The crate computes, exactly where possible:
//!
//! * simple objects, Frobenius–Perron dimensions, duals and projective
//!   covers of `C(G, ω, H, ψ)`, together with the simples of its module
//!   categories `M((H, ψ), (K, η))` and its fiber functors;
//! * the block structure of the center `Z(G, ω)` (the twisted Drinfeld
//!   double), and a cross-check of it through `C(G×G, ω×ω⁻¹, Δ(G), 1)`.
//!
//! Everything rests on three layers: Cayley-table groups ([`group`]),
//! normalized cochains with values in `μ_m` stored as exponents in `Z/m`
//! ([`cochain`]), and irreducible projective representations of twisted
//! group algebras in characteristic zero and in positive characteristic
//! ([`projrep`]).
//!
//! The crate is `no_std` (it needs `alloc`). The `parallel` feature pulls in
//! `std` and rayon and processes independent blocks concurrently; results
//! are identical with and without it.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod category;
pub mod center;
pub mod cochain;
mod error;
pub mod group;
pub mod linalg;
pub mod projrep;
mod util;

pub use error::{Error, Result};

/// Default seed for every randomized routine.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Knobs shared by the representation-theoretic pipelines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub seed: u64,
    /// Numerical tolerance of the complex irrep engine.
    pub tol: f64,
    /// Eigenvalues closer than `10·tol` are merged; gaps between that and
    /// `cluster_gap` are reported as ambiguous.
    pub cluster_gap: f64,
    /// Largest group order accepted by subgroup enumeration.
    pub max_enumeration_order: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            tol: 1e-9,
            cluster_gap: 1e-6,
            max_enumeration_order: group::DEFAULT_ENUMERATION_BOUND,
        }
    }
}

impl Options {
    pub fn with_seed(seed: u64) -> Self {
        Options { seed, ..Options::default() }
    }
}
