//! Hermitian matrix machinery: spectral decompositions, fractional powers,
//! weighted cross-terms, the matrix integral mean in closed form with a
//! quadrature oracle, Schur products and the 2×2 block embedding.
//!
//! Everything is complex; real symmetric inputs are the special case with
//! zero imaginary parts.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};
use crate::means::integral_weight;
use crate::norms::{norm, NormKind};
use crate::report::{InequalityReport, TheoremId};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

/// Relative tolerance for the Hermitian symmetry check on inputs.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Positivity floor: the smallest eigenvalue must exceed this times the largest.
pub const POSITIVITY_FLOOR: f64 = 1e-12;
/// Runtime accuracy contract for the eigensolver. All downstream tolerances
/// are derived from this, so it is asserted on every decomposition rather
/// than assumed.
pub const EIGEN_CONTRACT_TOL: f64 = 1e-11;

fn max_modulus(m: &CMatrix) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn check_hermitian(m: &CMatrix, context: &str) -> Result<()> {
    let n = m.nrows();
    if n != m.ncols() || n == 0 {
        return Err(Error::Dimension(format!(
            "{context}: expected a nonempty square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if !m.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
        return Err(Error::Domain(format!("{context}: entries must be finite")));
    }
    let scale = max_modulus(m).max(f64::MIN_POSITIVE);
    for i in 0..n {
        for j in i..n {
            let dev = (m[(i, j)] - m[(j, i)].conj()).norm();
            if dev > HERMITIAN_TOL * scale {
                return Err(Error::NotHermitian(format!(
                    "{context}: entry ({i}, {j}) deviates from conjugate symmetry by {dev:.3e}"
                )));
            }
        }
    }
    Ok(())
}

/// A Hermitian positive definite matrix, validated on construction.
///
/// Positive *semi*definite inputs with eigenvalues at or below the relative
/// floor are rejected: the fractional powers and integral weights used
/// downstream all go through `log λ`. Callers that start from semidefinite
/// data must regularize first (the harness adds a small ridge).
#[derive(Debug, Clone)]
pub struct PositiveMatrix {
    m: CMatrix,
}

impl PositiveMatrix {
    /// Validate Hermitian symmetry and strict positive definiteness.
    pub fn new(m: CMatrix) -> Result<Self> {
        check_hermitian(&m, "PositiveMatrix")?;
        spectral_of(&m)?;
        Ok(Self { m })
    }

    /// Wrap a matrix known to be Hermitian positive definite by construction
    /// (spectral reassembly, block-diagonal of validated matrices, ...).
    pub(crate) fn new_unchecked(m: CMatrix) -> Self {
        Self { m }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new_unchecked(CMatrix::identity(dim, dim))
    }

    /// Diagonal positive matrix from real entries.
    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Dimension("empty diagonal".into()));
        }
        if !diag.iter().all(|&d| d.is_finite() && d > 0.0) {
            return Err(Error::NotPositive(format!(
                "diagonal entries must be positive, got {diag:?}"
            )));
        }
        let max = diag.iter().cloned().fold(0.0, f64::max);
        let min = diag.iter().cloned().fold(f64::INFINITY, f64::min);
        if min <= POSITIVITY_FLOOR * max {
            return Err(Error::NotPositive(format!(
                "diagonal entry {min:.3e} is below the relative floor {:.3e}",
                POSITIVITY_FLOOR * max
            )));
        }
        Ok(Self::new_unchecked(CMatrix::from_diagonal(
            &DVector::from_iterator(diag.len(), diag.iter().map(|&d| C64::new(d, 0.0))),
        )))
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix {
        self.m
    }

    /// Eigendecomposition with eigenvalues sorted ascending.
    pub fn spectral(&self) -> Result<SpectralDecomp> {
        spectral_of(&self.m)
    }

    /// `A^v` through the spectral decomposition.
    pub fn frac_power(&self, v: f64) -> Result<PositiveMatrix> {
        if !v.is_finite() {
            return Err(Error::Parameter(format!("power exponent must be finite, got {v}")));
        }
        Ok(Self::new_unchecked(self.spectral()?.power(v)))
    }
}

/// Eigendecomposition of a positive definite matrix: ascending positive
/// eigenvalues and a unitary basis of eigenvectors.
#[derive(Debug, Clone)]
pub struct SpectralDecomp {
    eigenvalues: Vec<f64>,
    basis: CMatrix,
}

impl SpectralDecomp {
    /// Eigenvalues in ascending order, all positive.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose columns are the eigenvectors, aligned with
    /// `eigenvalues()`.
    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    /// Assemble `U diag(λ_i^v) U*`.
    pub fn power(&self, v: f64) -> CMatrix {
        let d = DVector::from_iterator(
            self.eigenvalues.len(),
            self.eigenvalues.iter().map(|&l| C64::new(l.powf(v), 0.0)),
        );
        &self.basis * CMatrix::from_diagonal(&d) * self.basis.adjoint()
    }
}

fn spectral_of(m: &CMatrix) -> Result<SpectralDecomp> {
    check_hermitian(m, "spectral")?;
    let n = m.nrows();
    let se = m.clone().symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].total_cmp(&se.eigenvalues[j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let basis = CMatrix::from_fn(n, n, |i, j| se.eigenvectors[(i, order[j])]);

    let lam_max = eigenvalues[n - 1];
    if !lam_max.is_finite() || lam_max <= 0.0 {
        return Err(Error::NotPositive(format!(
            "largest eigenvalue {lam_max:.3e} is not positive"
        )));
    }
    if eigenvalues[0] <= POSITIVITY_FLOOR * lam_max {
        return Err(Error::NotPositive(format!(
            "smallest eigenvalue {:.3e} is at or below the relative floor {:.3e}",
            eigenvalues[0],
            POSITIVITY_FLOOR * lam_max
        )));
    }

    let decomp = SpectralDecomp { eigenvalues, basis };

    // Runtime accuracy contract.
    let unit_dev = max_modulus(&(decomp.basis.adjoint() * &decomp.basis - CMatrix::identity(n, n)));
    if unit_dev > EIGEN_CONTRACT_TOL {
        return Err(Error::Accuracy(format!(
            "eigenvector basis deviates from unitarity by {unit_dev:.3e}"
        )));
    }
    let resid = (decomp.power(1.0) - m).norm() / m.norm();
    if resid > EIGEN_CONTRACT_TOL {
        return Err(Error::Accuracy(format!(
            "spectral reconstruction residual {resid:.3e} exceeds {EIGEN_CONTRACT_TOL:.1e}"
        )));
    }

    Ok(decomp)
}

fn check_conformable(a: &PositiveMatrix, x: &CMatrix, b: &PositiveMatrix) -> Result<()> {
    if a.dim() != x.nrows() || b.dim() != x.ncols() {
        return Err(Error::Dimension(format!(
            "A is {0}x{0}, X is {1}x{2}, B is {3}x{3}",
            a.dim(),
            x.nrows(),
            x.ncols(),
            b.dim()
        )));
    }
    Ok(())
}

fn check_map_parameter(t: f64) -> Result<()> {
    if !t.is_finite() || !(0.0..=1.0).contains(&t) {
        return Err(Error::Parameter(format!(
            "map parameter must lie in [0, 1], got {t}"
        )));
    }
    Ok(())
}

/// The weighted cross-term `A^{1−t} X B^t + A^t X B^{1−t}`.
///
/// At `t = 1/2` this is exactly `2 A^{1/2} X B^{1/2}`.
pub fn heinz_map(a: &PositiveMatrix, x: &CMatrix, b: &PositiveMatrix, t: f64) -> Result<CMatrix> {
    check_map_parameter(t)?;
    check_conformable(a, x, b)?;
    let sa = a.spectral()?;
    let sb = b.spectral()?;
    Ok(sa.power(1.0 - t) * x * sb.power(t) + sa.power(t) * x * sb.power(1.0 - t))
}

/// The antisymmetric counterpart `A^{1−t} X B^t − A^t X B^{1−t}`.
///
/// Exactly the zero matrix at `t = 1/2`.
pub fn diff_map(a: &PositiveMatrix, x: &CMatrix, b: &PositiveMatrix, t: f64) -> Result<CMatrix> {
    check_map_parameter(t)?;
    check_conformable(a, x, b)?;
    let sa = a.spectral()?;
    let sb = b.spectral()?;
    Ok(sa.power(1.0 - t) * x * sb.power(t) - sa.power(t) * x * sb.power(1.0 - t))
}

fn check_integral_parameter(s: f64) -> Result<()> {
    if !s.is_finite() || !(0.0..0.5).contains(&s) {
        return Err(Error::Parameter(format!(
            "integral mean requires s in [0, 1/2), got {s}"
        )));
    }
    Ok(())
}

/// `∫_s^{1−s} A^v X B^{1−v} dv` in closed form.
///
/// With `A = UΛU*`, `B = VMV*` and `Y = U*XV` the integral is
/// `U (W ∘ Y) V*` where `W[i][j] = ∫_s^{1−s} λ_i^v μ_j^{1−v} dv` comes from
/// [`integral_weight`]. Requires `s ∈ [0, 1/2)` so the interval has positive
/// length.
pub fn integral_mean(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    s: f64,
) -> Result<CMatrix> {
    check_integral_parameter(s)?;
    check_conformable(a, x, b)?;
    let sa = a.spectral()?;
    let sb = b.spectral()?;
    let mut y = sa.basis().adjoint() * x * sb.basis();
    for i in 0..y.nrows() {
        for j in 0..y.ncols() {
            let w = integral_weight(s, sa.eigenvalues()[i], sb.eigenvalues()[j])?;
            y[(i, j)] *= w;
        }
    }
    Ok(sa.basis() * y * sb.basis().adjoint())
}

/// Composite Simpson approximation of `∫_s^{1−s} A^v X B^{1−v} dv`,
/// the independent oracle for [`integral_mean`].
///
/// `nodes` must be odd and at least 3; the integrand is evaluated through
/// [`PositiveMatrix::frac_power`] at each node.
pub fn integral_mean_quadrature(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    s: f64,
    nodes: usize,
) -> Result<CMatrix> {
    if nodes < 3 || nodes % 2 == 0 {
        return Err(Error::Parameter(format!(
            "Simpson rule needs an odd node count >= 3, got {nodes}"
        )));
    }
    check_integral_parameter(s)?;
    check_conformable(a, x, b)?;

    let (lo, hi) = (s, 1.0 - s);
    let h = (hi - lo) / (nodes - 1) as f64;
    let mut acc = CMatrix::zeros(x.nrows(), x.ncols());
    for k in 0..nodes {
        let v = lo + k as f64 * h;
        let w = if k == 0 || k == nodes - 1 {
            1.0
        } else if k % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let term = a.frac_power(v)?.into_matrix() * x * b.frac_power(1.0 - v)?.into_matrix();
        acc += term * C64::new(w, 0.0);
    }
    Ok(acc * C64::new(h / 3.0, 0.0))
}

/// Entrywise (Hadamard) product.
pub fn schur_product(y: &CMatrix, x: &CMatrix) -> Result<CMatrix> {
    if y.nrows() != x.nrows() || y.ncols() != x.ncols() {
        return Err(Error::Dimension(format!(
            "Schur product needs equal shapes, got {}x{} and {}x{}",
            y.nrows(),
            y.ncols(),
            x.nrows(),
            x.ncols()
        )));
    }
    Ok(y.component_mul(x))
}

/// Check the Schur multiplier bound `‖Y ∘ X‖ ≤ (max_i y_ii) ‖X‖` for a
/// positive semidefinite `Y`.
///
/// `Y` must be Hermitian and PSD within the Gram-test tolerance
/// `1e-10·n·max(1, max|entry|)`; otherwise the hypothesis is violated and an
/// error is returned.
pub fn schur_multiplier_check(y: &CMatrix, x: &CMatrix, kind: NormKind) -> Result<InequalityReport> {
    check_hermitian(y, "schur_multiplier_check")?;
    let n = y.nrows();
    if x.nrows() != n || x.ncols() != n {
        return Err(Error::Dimension(format!(
            "X must be {n}x{n} to match Y, got {}x{}",
            x.nrows(),
            x.ncols()
        )));
    }
    let min_eig = y
        .clone()
        .symmetric_eigenvalues()
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let tol = 1e-10 * n as f64 * max_modulus(y).max(1.0);
    if min_eig < -tol {
        return Err(Error::Hypothesis(format!(
            "Y is not positive semidefinite: min eigenvalue {min_eig:.3e} < -{tol:.3e}"
        )));
    }

    let lhs = norm(&schur_product(y, x)?, kind)?;
    let max_diag = (0..n).map(|i| y[(i, i)].re).fold(f64::NEG_INFINITY, f64::max);
    let rhs = max_diag * norm(x, kind)?;
    Ok(InequalityReport::new(
        TheoremId::Schur24,
        0.0,
        0.0,
        n,
        kind,
        lhs,
        rhs,
        true,
    ))
}

/// The 2×2 block embedding used to pass from the `A = B` case to general
/// `(A, B)`: returns `diag(A, B)` and the corner block `[[0, X], [0, 0]]`.
///
/// For any `t`, `heinz_map` on the embedded pair carries
/// `heinz_map(A, X, B, t)` in its top-right n×n block and zeros elsewhere,
/// and the corner block has the same singular values as `X` (plus zeros).
pub fn embed_block(
    a: &PositiveMatrix,
    b: &PositiveMatrix,
    x: &CMatrix,
) -> Result<(PositiveMatrix, CMatrix)> {
    let n = a.dim();
    if b.dim() != n || x.nrows() != n || x.ncols() != n {
        return Err(Error::Dimension(format!(
            "block embedding needs equal dimensions, got A {n}, B {}, X {}x{}",
            b.dim(),
            x.nrows(),
            x.ncols()
        )));
    }
    let mut big_a = CMatrix::zeros(2 * n, 2 * n);
    big_a.view_mut((0, 0), (n, n)).copy_from(a.matrix());
    big_a.view_mut((n, n), (n, n)).copy_from(b.matrix());
    let mut big_x = CMatrix::zeros(2 * n, 2 * n);
    big_x.view_mut((0, n), (n, n)).copy_from(x);
    Ok((PositiveMatrix::new_unchecked(big_a), big_x))
}
