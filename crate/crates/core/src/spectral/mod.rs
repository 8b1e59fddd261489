//! Assembly of `A_alpha` and computation of its Perron pair.
//!
//! Two independent solver routes are kept deliberately separate so each can
//! check the other: [`perron`] runs a shifted power iteration, while
//! [`perron_oracle`] diagonalizes the whole matrix with cyclic Jacobi
//! rotations. Beyond the Perron pair, this module evaluates the decay
//! ratio [`Gamma`] and the closed form for the alpha-index of a complete
//! graph with one deleted edge.

mod jacobi;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::scalar::{lossy_f64, real, real_from_usize, Real};

/// Default infinity-norm residual target for [`perron`].
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Iteration cap for the power route before falling back to Jacobi.
pub const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// After the residual target is met, the solver keeps iterating until the
/// residual stops improving for this many consecutive steps, then returns
/// the best iterate seen. This polishes the eigenpair to the floating-point
/// fixed point, which the tightest inequality margins depend on.
const POLISH_STALL_LIMIT: usize = 10;

/// Errors from matrix assembly and the eigensolvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutsideClosed(f64),
    #[error("alpha must lie in [0, 1), got {0}")]
    AlphaOutsideHalfOpen(f64),
    #[error("graph is disconnected, so the Perron pair is not well defined")]
    Disconnected,
    #[error("tolerance must be a positive finite number, got {0}")]
    InvalidTolerance(f64),
    #[error(
        "no convergence after {iterations} iterations: best residual {best_residual:e} \
         above tolerance {tolerance:e}"
    )]
    NoConvergence {
        iterations: usize,
        best_residual: f64,
        tolerance: f64,
    },
    #[error("the decay ratio needs rho >= 2, got {0}")]
    RhoBelowTwo(f64),
    #[error("the closed form for a clique with one deleted edge needs k >= 4, got {0}")]
    CliqueTooSmall(usize),
    #[error("dimension mismatch: matrix order {expected}, vector length {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Dense symmetric matrix `alpha * D + (1 - alpha) * A`.
#[derive(Clone, Debug)]
pub struct AlphaMatrix<F> {
    n: usize,
    alpha: F,
    entries: Vec<F>,
}

impl<F: Real> AlphaMatrix<F> {
    /// Assembles `A_alpha` for `alpha` in the closed interval `[0, 1]`.
    pub fn assemble(g: &Graph, alpha: F) -> Result<Self, SpectralError> {
        if !(alpha >= F::zero() && alpha <= F::one()) {
            return Err(SpectralError::AlphaOutsideClosed(lossy_f64(alpha)));
        }
        let n = g.order();
        let off = F::one() - alpha;
        let mut entries = vec![F::zero(); n * n];
        for v in g.vertices() {
            entries[v * n + v] = alpha * real_from_usize(g.degree(v));
            for u in g.neighbors(v) {
                entries[v * n + u] = off;
            }
        }
        Ok(AlphaMatrix { n, alpha, entries })
    }

    /// Matrix order.
    pub fn order(&self) -> usize {
        self.n
    }

    /// The interpolation parameter.
    pub fn alpha(&self) -> F {
        self.alpha
    }

    /// Entry at row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> F {
        self.entries[i * self.n + j]
    }

    /// Dense row-major entries.
    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    fn mul_into(&self, x: &[F], y: &mut [F]) {
        for (r, slot) in y.iter_mut().enumerate() {
            let row = &self.entries[r * self.n..(r + 1) * self.n];
            *slot = row
                .iter()
                .zip(x)
                .fold(F::zero(), |acc, (&m, &xv)| acc + m * xv);
        }
    }
}

/// Evaluates `x^T M x`.
pub fn quadratic_form<F: Real>(m: &AlphaMatrix<F>, x: &[F]) -> Result<F, SpectralError> {
    if x.len() != m.order() {
        return Err(SpectralError::DimensionMismatch {
            expected: m.order(),
            got: x.len(),
        });
    }
    let mut total = F::zero();
    for i in 0..m.order() {
        for j in 0..m.order() {
            total = total + m.entry(i, j) * x[i] * x[j];
        }
    }
    Ok(total)
}

/// Which computation produced a [`SpectralResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverRoute {
    /// Shifted power iteration converged.
    Power,
    /// Power iteration stalled and the Jacobi solver finished the job.
    JacobiFallback,
    /// Direct Jacobi diagonalization, the oracle route.
    Jacobi,
}

/// Perron root and vector of `A_alpha` with convergence diagnostics.
///
/// The vector has unit 2-norm and strictly positive entries. `iterations`
/// counts power steps on the power route and Jacobi sweeps otherwise.
#[derive(Clone, Debug)]
pub struct SpectralResult<F> {
    pub rho: F,
    pub perron: Vec<F>,
    pub residual: F,
    pub iterations: usize,
    pub route: SolverRoute,
}

fn dot<F: Real>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (&x, &y)| acc + x * y)
}

fn infinity_residual<F: Real>(m: &AlphaMatrix<F>, x: &[F], rho: F, scratch: &mut [F]) -> F {
    m.mul_into(x, scratch);
    x.iter()
        .zip(scratch.iter())
        .fold(F::zero(), |worst, (&xv, &mx)| worst.max((mx - rho * xv).abs()))
}

fn validate_perron_inputs<F: Real>(g: &Graph, alpha: F, tolerance: F) -> Result<(), SpectralError> {
    if !(alpha >= F::zero() && alpha < F::one()) {
        return Err(SpectralError::AlphaOutsideHalfOpen(lossy_f64(alpha)));
    }
    if !(tolerance > F::zero() && tolerance.is_finite()) {
        return Err(SpectralError::InvalidTolerance(lossy_f64(tolerance)));
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    Ok(())
}

/// Computes the Perron pair of `A_alpha` by shifted power iteration.
///
/// The iteration runs on `A_alpha + (max_degree + 1) I`, whose spectrum is
/// positive and whose top eigenvalue is strictly dominant for connected
/// graphs, covering bipartite adjacency spectra that are symmetric around
/// zero. After reaching `tolerance` the solver polishes to the best
/// floating-point iterate (see [`POLISH_STALL_LIMIT`]). If the power route
/// stalls above `tolerance`, the Jacobi route finishes and the result is
/// marked [`SolverRoute::JacobiFallback`].
pub fn perron<F: Real>(g: &Graph, alpha: F, tolerance: F) -> Result<SpectralResult<F>, SpectralError> {
    validate_perron_inputs(g, alpha, tolerance)?;
    let matrix = AlphaMatrix::assemble(g, alpha)?;
    let shift = real_from_usize::<F>(g.max_degree() + 1);
    if let Some(result) = power_iterate(&matrix, shift, tolerance) {
        return Ok(result);
    }
    let (rho, vector, sweeps) = jacobi_top(&matrix)?;
    let mut scratch = vec![F::zero(); matrix.order()];
    let residual = infinity_residual(&matrix, &vector, rho, &mut scratch);
    if residual > tolerance {
        return Err(SpectralError::NoConvergence {
            iterations: MAX_POWER_ITERATIONS,
            best_residual: lossy_f64(residual),
            tolerance: lossy_f64(tolerance),
        });
    }
    Ok(SpectralResult {
        rho,
        perron: vector,
        residual,
        iterations: sweeps,
        route: SolverRoute::JacobiFallback,
    })
}

fn power_iterate<F: Real>(
    matrix: &AlphaMatrix<F>,
    shift: F,
    tolerance: F,
) -> Option<SpectralResult<F>> {
    let n = matrix.order();
    let mut x = vec![(F::one() / real_from_usize::<F>(n)).sqrt(); n];
    let mut y = vec![F::zero(); n];
    let mut best_x = x.clone();
    let mut best_rho_shifted = F::zero();
    let mut best_residual = F::infinity();
    let mut stall = 0usize;
    for iteration in 1..=MAX_POWER_ITERATIONS {
        matrix.mul_into(&x, &mut y);
        for (yv, &xv) in y.iter_mut().zip(&x) {
            *yv = *yv + shift * xv;
        }
        let xx = dot(&x, &x);
        let rho_shifted = dot(&x, &y) / xx;
        let residual = x
            .iter()
            .zip(&y)
            .fold(F::zero(), |worst, (&xv, &yv)| {
                worst.max((yv - rho_shifted * xv).abs())
            });
        if residual < best_residual {
            best_residual = residual;
            best_rho_shifted = rho_shifted;
            best_x.copy_from_slice(&x);
            stall = 0;
        } else {
            stall += 1;
        }
        if best_residual <= tolerance && stall >= POLISH_STALL_LIMIT {
            return finish_power(matrix, best_x, best_rho_shifted, shift, iteration);
        }
        let norm = dot(&y, &y).sqrt();
        for (xv, &yv) in x.iter_mut().zip(&y) {
            *xv = yv / norm;
        }
    }
    if best_residual <= tolerance {
        finish_power(matrix, best_x, best_rho_shifted, shift, MAX_POWER_ITERATIONS)
    } else {
        None
    }
}

fn finish_power<F: Real>(
    matrix: &AlphaMatrix<F>,
    mut x: Vec<F>,
    rho_shifted: F,
    shift: F,
    iterations: usize,
) -> Option<SpectralResult<F>> {
    let norm = dot(&x, &x).sqrt();
    for xv in x.iter_mut() {
        *xv = *xv / norm;
    }
    if x.iter().any(|&xv| xv <= F::zero()) {
        return None;
    }
    let rho = rho_shifted - shift;
    let mut scratch = vec![F::zero(); matrix.order()];
    let residual = infinity_residual(matrix, &x, rho, &mut scratch);
    Some(SpectralResult {
        rho,
        perron: x,
        residual,
        iterations,
        route: SolverRoute::Power,
    })
}

fn jacobi_top<F: Real>(matrix: &AlphaMatrix<F>) -> Result<(F, Vec<F>, usize), SpectralError> {
    let n = matrix.order();
    let eigen = jacobi::symmetric_eigen(n, matrix.entries());
    let top = (0..n)
        .max_by(|&a, &b| eigen.eigenvalues[a].partial_cmp(&eigen.eigenvalues[b]).expect("eigenvalues are finite"))
        .expect("matrix order is at least 1");
    let mut vector = eigen.eigenvector(top);
    let total = vector.iter().fold(F::zero(), |acc, &v| acc + v);
    if total < F::zero() {
        for v in vector.iter_mut() {
            *v = -*v;
        }
    }
    let norm = dot(&vector, &vector).sqrt();
    for v in vector.iter_mut() {
        *v = *v / norm;
    }
    if vector.iter().any(|&v| v <= F::zero()) {
        return Err(SpectralError::NumericalBreakdown(
            "computed Perron vector is not strictly positive".to_string(),
        ));
    }
    Ok((eigen.eigenvalues[top], vector, eigen.sweeps))
}

/// Computes the Perron pair by full Jacobi diagonalization.
///
/// This is the oracle route: independent of the power iteration, used to
/// cross-check it. `tolerance` plays no role in the computation; the
/// returned residual reflects what the diagonalization achieved.
pub fn perron_oracle<F: Real>(g: &Graph, alpha: F) -> Result<SpectralResult<F>, SpectralError> {
    validate_perron_inputs(g, alpha, real(DEFAULT_TOLERANCE))?;
    let matrix = AlphaMatrix::assemble(g, alpha)?;
    let (rho, vector, sweeps) = jacobi_top(&matrix)?;
    let mut scratch = vec![F::zero(); matrix.order()];
    let residual = infinity_residual(&matrix, &vector, rho, &mut scratch);
    Ok(SpectralResult {
        rho,
        perron: vector,
        residual,
        iterations: sweeps,
        route: SolverRoute::Jacobi,
    })
}

/// The decay ratio: the root `gamma >= 1` of
/// `X^2 - ((rho - 2 alpha) / (1 - alpha)) X + 1 = 0`.
///
/// Perron entries along a pendent path fall off geometrically with ratio at
/// least `gamma` whenever `rho >= 2`.
#[derive(Clone, Copy, Debug)]
pub struct Gamma<F> {
    value: F,
    rho: F,
    alpha: F,
}

impl<F: Real> Gamma<F> {
    /// The ratio itself.
    pub fn value(&self) -> F {
        self.value
    }

    /// The alpha-index the ratio was derived from.
    pub fn rho(&self) -> F {
        self.rho
    }

    /// The interpolation parameter.
    pub fn alpha(&self) -> F {
        self.alpha
    }

    /// The companion root `1 / gamma`.
    pub fn reciprocal(&self) -> F {
        F::one() / self.value
    }

    /// Residual of the defining quadratic at `gamma`; at round-off scale
    /// for any value produced by [`gamma_of`].
    pub fn characteristic_residual(&self) -> F {
        let t = (self.rho - real::<F>(2.0) * self.alpha) / (F::one() - self.alpha);
        (self.value * self.value - t * self.value + F::one()).abs()
    }
}

/// Slack accepted below exact hypothesis thresholds, absorbing solver
/// round-off in computed values of rho.
pub(crate) const HYPOTHESIS_SLACK: f64 = 1e-12;

/// Evaluates the decay ratio for `rho >= 2` and `alpha` in `[0, 1)`.
///
/// Values of `rho` within `1e-12` below 2 are accepted and clamped, so a
/// numerically computed index of a graph with `rho = 2` exactly (a cycle,
/// for instance) does not trip the hypothesis check.
pub fn gamma_of<F: Real>(rho: F, alpha: F) -> Result<Gamma<F>, SpectralError> {
    if !(alpha >= F::zero() && alpha < F::one()) {
        return Err(SpectralError::AlphaOutsideHalfOpen(lossy_f64(alpha)));
    }
    if rho < real::<F>(2.0) - real(HYPOTHESIS_SLACK) {
        return Err(SpectralError::RhoBelowTwo(lossy_f64(rho)));
    }
    let two = real::<F>(2.0);
    let t = (rho - two * alpha) / (F::one() - alpha);
    let discriminant = (t * t - real(4.0)).max(F::zero());
    let value = ((t + discriminant.sqrt()) / two).max(F::one());
    Ok(Gamma { value, rho, alpha })
}

/// Closed form for the alpha-index of the complete graph on `k >= 4`
/// vertices with one deleted edge:
/// `(k - 3 + k alpha + sqrt(k^2 (1-alpha)^2 + 2 (k-4)(1-alpha) + 1)) / 2`.
///
/// The value is always at least `k - 3 + 2 alpha`.
pub fn rho_complete_minus_edge<F: Real>(k: usize, alpha: F) -> Result<F, SpectralError> {
    if k < 4 {
        return Err(SpectralError::CliqueTooSmall(k));
    }
    if !(alpha >= F::zero() && alpha < F::one()) {
        return Err(SpectralError::AlphaOutsideHalfOpen(lossy_f64(alpha)));
    }
    let kf = real_from_usize::<F>(k);
    let off = F::one() - alpha;
    let three = real::<F>(3.0);
    let discriminant = kf * kf * off * off
        + real::<F>(2.0) * (kf - real::<F>(4.0)) * off
        + F::one();
    Ok((kf - three + kf * alpha + discriminant.sqrt()) / real(2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_minus_edge, cycle, path, Graph};

    const TOL: f64 = 1e-12;

    fn rho64(g: &Graph, alpha: f64) -> f64 {
        perron(g, alpha, TOL).unwrap().rho
    }

    #[test]
    fn assembly_matches_definition() {
        let k2 = complete(2).unwrap();
        let m = AlphaMatrix::assemble(&k2, 0.5f64).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.entry(i, j), 0.5);
            }
        }

        let p3 = path(3).unwrap();
        let adjacency = AlphaMatrix::assemble(&p3, 0.0f64).unwrap();
        assert_eq!(adjacency.entry(0, 1), 1.0);
        assert_eq!(adjacency.entry(0, 2), 0.0);
        assert_eq!(adjacency.entry(1, 1), 0.0);

        let diagonal = AlphaMatrix::assemble(&p3, 1.0f64).unwrap();
        assert_eq!(diagonal.entry(0, 0), 1.0);
        assert_eq!(diagonal.entry(1, 1), 2.0);
        assert_eq!(diagonal.entry(0, 1), 0.0);

        assert!(AlphaMatrix::assemble(&p3, -0.1f64).is_err());
        assert!(AlphaMatrix::assemble(&p3, 1.1f64).is_err());
    }

    #[test]
    fn convexity_identity() {
        let g = complete_minus_edge(5).unwrap();
        let alpha = 0.3f64;
        let blended = AlphaMatrix::assemble(&g, alpha).unwrap();
        let adjacency = AlphaMatrix::assemble(&g, 0.0f64).unwrap();
        let degrees = AlphaMatrix::assemble(&g, 1.0f64).unwrap();
        for i in 0..g.order() {
            for j in 0..g.order() {
                let expected = alpha * degrees.entry(i, j) + (1.0 - alpha) * adjacency.entry(i, j);
                assert!((blended.entry(i, j) - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn complete_graphs_are_regular_fixed_points() {
        for n in 2..=8 {
            let g = complete(n).unwrap();
            for alpha in [0.0, 0.25, 0.5, 0.75] {
                let result = perron(&g, alpha, TOL).unwrap();
                assert!((result.rho - (n as f64 - 1.0)).abs() < 1e-10);
                let flat = 1.0 / (n as f64).sqrt();
                for &entry in &result.perron {
                    assert!((entry - flat).abs() < 1e-8);
                }
            }
        }
        assert!((rho64(&cycle(6).unwrap(), 0.4) - 2.0).abs() < 1e-10);
        assert!((rho64(&complete(2).unwrap(), 0.25) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn known_adjacency_spectra() {
        let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!((rho64(&path(4).unwrap(), 0.0) - golden).abs() < 1e-12);
        assert!((rho64(&path(5).unwrap(), 0.0) - 3.0f64.sqrt()).abs() < 1e-12);
        let k4e = (1.0 + 17.0f64.sqrt()) / 2.0;
        assert!((rho64(&complete_minus_edge(4).unwrap(), 0.0) - k4e).abs() < 1e-12);
    }

    #[test]
    fn result_invariants() {
        let g = crate::graph::bug(5, 3, 2).unwrap().graph;
        let result = perron(&g, 0.25, TOL).unwrap();
        let norm: f64 = result.perron.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-14);
        assert!(result.perron.iter().all(|&x| x > 0.0));
        assert!(result.residual <= TOL);
        assert_eq!(result.route, SolverRoute::Power);

        let m = AlphaMatrix::assemble(&g, 0.25f64).unwrap();
        let rayleigh = quadratic_form(&m, &result.perron).unwrap();
        assert!((rayleigh - result.rho).abs() < 1e-12);
    }

    #[test]
    fn rejects_invalid_inputs() {
        let p3 = path(3).unwrap();
        assert!(matches!(
            perron(&p3, 1.0, TOL),
            Err(SpectralError::AlphaOutsideHalfOpen(_))
        ));
        assert!(matches!(
            perron(&p3, 0.0, 0.0),
            Err(SpectralError::InvalidTolerance(_))
        ));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            perron(&split, 0.0, TOL),
            Err(SpectralError::Disconnected)
        ));
        assert!(matches!(
            perron_oracle(&split, 0.0),
            Err(SpectralError::Disconnected)
        ));
    }

    #[test]
    fn oracle_agrees_with_power_route() {
        let samples = [
            complete(5).unwrap(),
            path(7).unwrap(),
            complete_minus_edge(6).unwrap(),
            crate::graph::bug(6, 3, 5).unwrap().graph,
            crate::graph::path_kite(3, 4).unwrap(),
        ];
        for g in &samples {
            for alpha in [0.0, 0.3, 0.5, 0.8] {
                let fast = perron(g, alpha, TOL).unwrap();
                let oracle = perron_oracle(g, alpha).unwrap();
                assert!((fast.rho - oracle.rho).abs() < 1e-9);
                assert_eq!(oracle.route, SolverRoute::Jacobi);
                for (a, b) in fast.perron.iter().zip(&oracle.perron) {
                    assert!((a - b).abs() < 1e-7);
                }
            }
        }
    }

    #[test]
    fn gamma_values() {
        let unit = gamma_of(2.0f64, 0.3).unwrap();
        assert!((unit.value() - 1.0).abs() < 1e-12);

        let exact_two = gamma_of(2.5f64, 0.0).unwrap();
        assert_eq!(exact_two.value(), 2.0);

        let golden_like = gamma_of(3.0f64, 0.0).unwrap();
        assert!((golden_like.value() - (3.0 + 5.0f64.sqrt()) / 2.0).abs() < 1e-12);

        let shifted = gamma_of(3.0f64, 0.5).unwrap();
        assert!((shifted.value() - (2.0 + 3.0f64.sqrt())).abs() < 1e-12);

        for (rho, alpha) in [(2.0f64, 0.0), (2.7, 0.25), (5.0, 0.9), (3.3, 0.5)] {
            let gamma = gamma_of(rho, alpha).unwrap();
            assert!(gamma.value() >= 1.0);
            assert!(gamma.characteristic_residual() <= 1e-12);
            assert!((gamma.value() * gamma.reciprocal() - 1.0).abs() < 1e-12);
        }

        assert!(matches!(
            gamma_of(1.9f64, 0.0),
            Err(SpectralError::RhoBelowTwo(_))
        ));
        assert!(gamma_of(2.5f64, 1.0).is_err());
    }

    #[test]
    fn clique_minus_edge_closed_form() {
        let k4e = (1.0 + 17.0f64.sqrt()) / 2.0;
        assert!((rho_complete_minus_edge(4, 0.0f64).unwrap() - k4e).abs() < 1e-14);
        for k in 4..=8 {
            let g = complete_minus_edge(k).unwrap();
            for alpha in [0.0, 0.2, 0.5, 0.9] {
                let formula = rho_complete_minus_edge(k, alpha).unwrap();
                assert!((formula - rho64(&g, alpha)).abs() < 1e-9);
                assert!(formula >= k as f64 - 3.0 + 2.0 * alpha - 1e-12);
            }
        }
        assert!(matches!(
            rho_complete_minus_edge(3, 0.0f64),
            Err(SpectralError::CliqueTooSmall(3))
        ));
    }

    #[test]
    fn quadratic_form_checks_dimensions() {
        let m = AlphaMatrix::assemble(&path(3).unwrap(), 0.0f64).unwrap();
        assert!(matches!(
            quadratic_form(&m, &[1.0, 2.0]),
            Err(SpectralError::DimensionMismatch { expected: 3, got: 2 })
        ));
        let zero = AlphaMatrix::assemble(&Graph::empty(2).unwrap(), 0.0f64).unwrap();
        assert_eq!(quadratic_form(&zero, &[1.0, 1.0]).unwrap(), 0.0);
        let k2 = AlphaMatrix::assemble(&complete(2).unwrap(), 0.0f64).unwrap();
        let half = std::f64::consts::FRAC_1_SQRT_2;
        assert!((quadratic_form(&k2, &[half, half]).unwrap() - 1.0).abs() < 1e-15);
    }
}
