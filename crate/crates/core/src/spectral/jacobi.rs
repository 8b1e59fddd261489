//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! This is the independent cross-check route: it shares no code with the
//! power iteration beyond matrix assembly. Rotations sweep the strict upper
//! triangle in row order until the off-diagonal mass is at round-off scale.

use crate::scalar::{real, Real};

const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition of a symmetric matrix.
pub(crate) struct SymmetricEigen<F> {
    pub eigenvalues: Vec<F>,
    /// Row-major orthogonal matrix; column `k` is the eigenvector for
    /// `eigenvalues[k]`.
    pub vectors: Vec<F>,
    pub sweeps: usize,
}

impl<F: Real> SymmetricEigen<F> {
    pub fn eigenvector(&self, k: usize) -> Vec<F> {
        let n = self.eigenvalues.len();
        (0..n).map(|r| self.vectors[r * n + k]).collect()
    }
}

/// Diagonalizes the row-major symmetric matrix `entries` of order `n`.
pub(crate) fn symmetric_eigen<F: Real>(n: usize, entries: &[F]) -> SymmetricEigen<F> {
    debug_assert_eq!(entries.len(), n * n);
    let mut a = entries.to_vec();
    let mut v = vec![F::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = F::one();
    }
    let scale: F = entries.iter().fold(F::zero(), |acc, &x| acc + x.abs());
    let threshold = scale * F::epsilon() * real(1e-2);
    let mut sweeps = 0;
    for _ in 0..MAX_SWEEPS {
        let mut off = F::zero();
        for p in 0..n {
            for q in p + 1..n {
                off = off + a[p * n + q].abs();
            }
        }
        if off <= threshold {
            break;
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
    }
    SymmetricEigen {
        eigenvalues: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
        sweeps,
    }
}

/// One Jacobi rotation zeroing `a[p][q]`, accumulated into `v`.
fn rotate<F: Real>(a: &mut [F], v: &mut [F], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == F::zero() {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (apq * real(2.0));
    let t = {
        let magnitude = F::one() / (theta.abs() + (theta * theta + F::one()).sqrt());
        if theta < F::zero() {
            -magnitude
        } else {
            magnitude
        }
    };
    let c = F::one() / (t * t + F::one()).sqrt();
    let s = t * c;
    let tau = s / (F::one() + c);

    let app = a[p * n + p];
    let aqq = a[q * n + q];
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = F::zero();
    a[q * n + p] = F::zero();
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        a[r * n + p] = arp - s * (arq + tau * arp);
        a[p * n + r] = a[r * n + p];
        a[r * n + q] = arq + s * (arp - tau * arq);
        a[q * n + r] = a[r * n + q];
    }
    for r in 0..n {
        let vrp = v[r * n + p];
        let vrq = v[r * n + q];
        v[r * n + p] = vrp - s * (vrq + tau * vrp);
        v[r * n + q] = vrq + s * (vrp - tau * vrq);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizes_a_known_matrix() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3.
        let entries = vec![2.0f64, 1.0, 1.0, 2.0];
        let eig = symmetric_eigen(2, &entries);
        let mut values = eig.eigenvalues.clone();
        values.sort_by(f64::total_cmp);
        assert!((values[0] - 1.0).abs() < 1e-14);
        assert!((values[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvectors_satisfy_the_eigenequation() {
        // Symmetric 3x3 with distinct eigenvalues.
        let entries = vec![4.0f64, 1.0, 0.5, 1.0, 3.0, 1.0, 0.5, 1.0, 2.0];
        let eig = symmetric_eigen(3, &entries);
        for k in 0..3 {
            let lambda = eig.eigenvalues[k];
            let x = eig.eigenvector(k);
            for r in 0..3 {
                let ax: f64 = (0..3).map(|c| entries[r * 3 + c] * x[c]).sum();
                assert!((ax - lambda * x[r]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn handles_order_one() {
        let eig = symmetric_eigen(1, &[5.0f64]);
        assert_eq!(eig.eigenvalues, vec![5.0]);
        assert_eq!(eig.vectors, vec![1.0]);
    }
}
