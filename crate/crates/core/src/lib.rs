//! Training linear and one-hidden-layer classifiers/regressors on an
//! *infinite* stream of corrupted copies of the data, by marginalizing the
//! corruption instead of sampling it.
//!
//! The entry points are the three linear engines in [`linear`]
//! ([`linear::train_hinge`], [`linear::train_logistic`], [`linear::train_svr`])
//! and the one-hidden-layer extension in [`latent`]. Each engine alternates a
//! closed-form re-weighting step (expectations of augmented variables, see
//! [`reweight`]) with a re-weighted least-squares step solved either in closed
//! form or by L-BFGS (see [`solver`]). Per-feature corruption models live in
//! [`noise`]; dataset handling, one-vs-all reduction and evaluation utilities
//! in [`data`]; the explicit (Monte-Carlo) corruption baseline in [`baseline`].

pub mod baseline;
pub mod data;
pub mod error;
pub mod latent;
pub mod linear;
pub mod model;
pub mod noise;
pub mod reweight;
pub mod solver;
pub mod sparse;
pub mod synth;

pub use error::Error;
pub use sparse::SparseVec;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
