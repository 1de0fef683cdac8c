//! Terminal embeddings of finite point sets in ℝ^N.
//!
//! A linear Johnson–Lindenstrauss map `Φ = Π/√m` preserves the pairwise
//! distances of a fixed training set `X`. A *terminal* embedding goes
//! further: it is a map `f: ℝ^N → ℝ^{m+1}` that preserves the distance
//! between every training point and *every* point of ℝ^N,
//!
//! ```text
//! (1−ε)‖x−y‖ ≤ ‖f(x)−f(y)‖ ≤ (1+ε)‖x−y‖   ∀ x ∈ X, ∀ y ∈ ℝ^N.
//! ```
//!
//! This crate computes such embeddings by extending `Φ` outward: each query
//! `y` is anchored at its nearest training point `y_X̄`, a correction
//! `y′ ∈ ℝ^m` is found by constrained convex minimization, and the embedded
//! point is assembled as
//!
//! ```text
//! f(y) = (Φ y_X̄ + y′, √(‖y−y_X̄‖² − ‖y′‖²)).
//! ```
//!
//! The crate is organized around that pipeline:
//!
//! * [`points`] — dense point sets with optional labels,
//! * [`geometry`] — unit secants, Monte-Carlo Gaussian widths, manifold
//!   width bounds, and the sufficient embedding dimension rule,
//! * [`jl`] — Gaussian sensing matrices and empirical distortion measures,
//! * [`solver`] — the per-query constrained program and its reference
//!   oracle,
//! * [`datasets`] — synthetic generators, train/test splits, and byte-level
//!   parsers for the IDX and CSV container formats,
//! * [`classify`] — compressive nearest-neighbor classification and the
//!   distortion/nonlinearity metrics used to benchmark embeddings.
//!
//! The crate is `no_std`-compatible (it requires `alloc`); file IO, the
//! command-line interface, and report serialization live in the companion
//! `terminal-embed` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod classify;
pub mod datasets;
pub mod error;
pub mod geometry;
pub mod jl;
pub mod linalg;
pub mod points;
pub mod rng;
pub mod solver;
pub mod special;

pub use error::{Error, Result};
pub use geometry::{
    gaussian_width_mc, manifold_width_bound, target_dimension, unit_secants, ManifoldParams,
    SecantSet, WidthEstimate,
};
pub use jl::{DistortionStats, JLMatrix};
pub use points::PointSet;
pub use solver::{
    ExtensionResult, Objective, PiConvention, SolverConfig, TerminalModel,
};
