//! The fixed random model of the harness: complex Ginibre matrices for X,
//! Wishart-plus-ridge for the positive matrices, Haar-ish unitaries from QR.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::matops::{C64, CMatrix, PositiveMatrix};

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Matrix with independent standard complex normal entries.
pub fn random_ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    let mut m = CMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            m[(i, j)] = C64::new(re * SQRT_HALF, im * SQRT_HALF);
        }
    }
    m
}

/// Random positive definite matrix `G G* + δI` with
/// `δ = 1e-6 · trace(G G*)/dim`, so the ridge scales with the instance.
pub fn random_positive<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<PositiveMatrix> {
    let g = random_ginibre(dim, dim, rng);
    let w = &g * g.adjoint();
    let delta = 1e-6 * w.trace().re / dim as f64;
    let m = w + CMatrix::identity(dim, dim) * C64::new(delta, 0.0);
    PositiveMatrix::new(m)
}

/// Unitary matrix from the QR factorization of a Ginibre sample.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMatrix {
    random_ginibre(dim, dim, rng).qr().q()
}

/// Positive points `λ_i = e^{u_i}` with `u_i` uniform over `[-4, 4]`,
/// the sample grid for dominance trials.
pub fn random_log_uniform_points<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<f64> {
    (0..count).map(|_| (rng.random::<f64>() * 8.0 - 4.0).exp()).collect()
}
