//! Unbiased per-feature corruption models and their first two moments.
//!
//! Every model here satisfies `E[corrupted | x] = x`, so engines only ever
//! need the per-coordinate variance. Dropout (blankout) zeroes a feature with
//! probability `q` and rescales survivors by `1/(1-q)`; its variance
//! `(q/(1-q)) x_d^2` vanishes on zero features, which is what keeps all the
//! downstream algebra sparse on bag-of-words data.

use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::sparse::SparseVec;
use crate::Result;

/// An unbiased corrupting distribution applied independently per feature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseModel {
    /// No corruption; variance is identically zero.
    None,
    /// Blankout/dropout noise with level `q` in [0, 1).
    Dropout { q: f64 },
    /// Additive Gaussian noise with variance `var` on every coordinate.
    Gaussian { var: f64 },
    /// Additive Laplace noise with scale `scale` (variance `2*scale^2`).
    Laplace { scale: f64 },
    /// Poisson resampling: corrupted value ~ Poisson(x_d); needs x_d >= 0.
    Poisson,
}

impl NoiseModel {
    pub fn dropout(q: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&q) {
            return Err(Error::invalid(format!("dropout level q={q} outside [0, 1)")));
        }
        Ok(NoiseModel::Dropout { q })
    }

    pub fn gaussian(var: f64) -> Result<Self> {
        if !var.is_finite() || var < 0.0 {
            return Err(Error::invalid(format!("gaussian variance {var} must be >= 0")));
        }
        Ok(NoiseModel::Gaussian { var })
    }

    pub fn laplace(scale: f64) -> Result<Self> {
        if !scale.is_finite() || scale < 0.0 {
            return Err(Error::invalid(format!("laplace scale {scale} must be >= 0")));
        }
        Ok(NoiseModel::Laplace { scale })
    }

    /// True when the variance is the same on every declared coordinate
    /// regardless of the feature value (Gaussian/Laplace). Returns that
    /// constant. Value-dependent models (dropout, Poisson, none) return None.
    pub fn constant_variance(&self) -> Option<f64> {
        match *self {
            NoiseModel::Gaussian { var } => Some(var),
            NoiseModel::Laplace { scale } => Some(2.0 * scale * scale),
            _ => None,
        }
    }

    /// Variance of the corrupted coordinate given the raw value `x_d`.
    ///
    /// Poisson requires `x_d >= 0`; callers validate via [`check_supported`]
    /// or [`moments`], after which this is total.
    pub fn variance_at(&self, x_d: f64) -> f64 {
        match *self {
            NoiseModel::None => 0.0,
            NoiseModel::Dropout { q } => q / (1.0 - q) * x_d * x_d,
            NoiseModel::Gaussian { var } => var,
            NoiseModel::Laplace { scale } => 2.0 * scale * scale,
            NoiseModel::Poisson => x_d,
        }
    }

    /// Validates that the model is applicable to the feature vector
    /// (Poisson rejects negative features).
    pub fn check_supported(&self, x: &SparseVec) -> Result<()> {
        if matches!(self, NoiseModel::Poisson) {
            for (d, v) in x.iter() {
                if v < 0.0 {
                    return Err(Error::domain(format!(
                        "poisson noise requires nonnegative features; x[{d}] = {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// True when corruption leaves zero coordinates at exactly zero, so a
    /// sample has the same (or smaller) support as the input.
    pub fn preserves_sparsity(&self) -> bool {
        matches!(self, NoiseModel::None | NoiseModel::Dropout { .. } | NoiseModel::Poisson)
    }
}

/// Diagonal of the corruption covariance, stored to match the data layout.
#[derive(Debug, Clone, PartialEq)]
pub enum Variance {
    /// One entry per stored nonzero of the mean vector, in the same order.
    /// All unstored coordinates have zero variance.
    PerNonzero(Vec<f64>),
    /// The same variance on every declared coordinate.
    Constant(f64),
}

/// First two moments of the corrupted feature vector.
///
/// `mean` always equals the raw features (unbiasedness); `var` is the
/// diagonal of the corruption covariance over `dim` declared coordinates.
/// The offset coordinate engines append later is deterministic and carries
/// no entry here.
#[derive(Debug, Clone)]
pub struct CorruptionMoments {
    pub mean: SparseVec,
    pub var: Variance,
    pub dim: usize,
}

impl CorruptionMoments {
    /// Variance of coordinate `d`.
    pub fn var_at(&self, d: usize) -> f64 {
        match &self.var {
            Variance::Constant(v) => {
                if d < self.dim {
                    *v
                } else {
                    0.0
                }
            }
            Variance::PerNonzero(vs) => {
                // Aligned with mean's stored coordinates.
                for (pos, (idx, _)) in self.mean.iter().enumerate() {
                    if idx == d {
                        return vs[pos];
                    }
                }
                0.0
            }
        }
    }

    /// `sum_d var_d * w_d^2` over the declared coordinates. `w` must cover
    /// at least `dim` entries; extra entries (e.g. an appended offset) are
    /// ignored, matching the zero-variance offset convention.
    pub fn weighted_var(&self, w: &[f64]) -> f64 {
        match &self.var {
            Variance::Constant(v) => *v * w[..self.dim].iter().map(|wd| wd * wd).sum::<f64>(),
            Variance::PerNonzero(vs) => self
                .mean
                .iter()
                .zip(vs.iter())
                .map(|((d, _), &vd)| vd * w[d] * w[d])
                .sum(),
        }
    }
}

/// Mean vector and diagonal variance of `p(corrupted | x)` for `model`.
///
/// `dim` is the declared dimensionality of the data; it only matters for
/// models with constant variance, whose variance applies to every declared
/// coordinate rather than just the stored ones.
pub fn moments(x: &SparseVec, dim: usize, model: &NoiseModel) -> Result<CorruptionMoments> {
    model.check_supported(x)?;
    let var = match model.constant_variance() {
        Some(v) => Variance::Constant(v),
        None => Variance::PerNonzero(x.iter().map(|(_, v)| model.variance_at(v)).collect()),
    };
    Ok(CorruptionMoments { mean: x.clone(), var, dim })
}

/// Draws one corrupted copy of `x`, deterministically from `seed`.
pub fn sample(x: &SparseVec, dim: usize, model: &NoiseModel, seed: u64) -> Result<SparseVec> {
    model.check_supported(x)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let out = match *model {
        NoiseModel::None => x.clone(),
        NoiseModel::Dropout { q } => {
            if q == 0.0 {
                return Ok(x.clone());
            }
            let keep_scale = 1.0 / (1.0 - q);
            let mut idx = Vec::with_capacity(x.nnz());
            let mut val = Vec::with_capacity(x.nnz());
            for (d, v) in x.iter() {
                if rng.random::<f64>() >= q {
                    idx.push(d as u32);
                    val.push(v * keep_scale);
                }
            }
            SparseVec::from_sorted_unchecked(idx, val)
        }
        NoiseModel::Gaussian { var } => {
            let sd = var.sqrt();
            let mut dense = x.to_dense(dim);
            let normal = rand_distr::Normal::new(0.0, sd)
                .map_err(|e| Error::invalid(format!("gaussian noise: {e}")))?;
            for v in dense.iter_mut() {
                *v += normal.sample(&mut rng);
            }
            SparseVec::from_dense(&dense)
        }
        NoiseModel::Laplace { scale } => {
            let mut dense = x.to_dense(dim);
            for v in dense.iter_mut() {
                // Inverse-CDF draw: u in (-1/2, 1/2).
                let u: f64 = rng.random::<f64>() - 0.5;
                *v -= scale * u.signum() * (1.0 - 2.0 * u.abs()).ln();
            }
            SparseVec::from_dense(&dense)
        }
        NoiseModel::Poisson => {
            let mut idx = Vec::with_capacity(x.nnz());
            let mut val = Vec::with_capacity(x.nnz());
            for (d, v) in x.iter() {
                if v == 0.0 {
                    continue;
                }
                let pois = rand_distr::Poisson::new(v)
                    .map_err(|e| Error::domain(format!("poisson noise at x[{d}]={v}: {e}")))?;
                let draw = pois.sample(&mut rng);
                if draw != 0.0 {
                    idx.push(d as u32);
                    val.push(draw);
                }
            }
            SparseVec::from_sorted_unchecked(idx, val)
        }
    };
    Ok(out)
}
