//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Matrices in this crate are small (N up to a few dozen), where Jacobi is
//! simple, accurate to machine precision and needs no external backend.

use super::cmat::{C64, CMat};
use crate::error::{Error, Result};

/// Eigen-decomposition of a Hermitian matrix: ascending real eigenvalues and
/// the unitary matrix of eigenvectors (columns).
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMat,
}

pub const DEFAULT_HERM_TOL: f64 = 1e-10;

/// Diagonalize a Hermitian matrix. `herm_tol` bounds the allowed
/// non-Hermiticity relative to the matrix norm.
pub fn eigh(h: &CMat, herm_tol: f64) -> Result<HermitianSpectrum> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let scale = h.norm().max(1e-300);
    let res = h.herm_residual();
    if res > herm_tol * scale.max(1.0) {
        return Err(Error::NotHermitian {
            residual: res,
            tol: herm_tol * scale.max(1.0),
        });
    }
    let n = h.rows();
    let mut a = h.herm_part();
    let mut v = CMat::eye(n);

    let max_sweeps = 80;
    let target = 1e-15 * scale;
    let mut sweeps = 0;
    loop {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        let off = (2.0 * off).sqrt();
        if off <= target || n < 2 {
            break;
        }
        if sweeps >= max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                offdiag: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let b = a[(p, q)];
                let babs = b.norm();
                if babs <= 1e-300 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let phi = b.im.atan2(b.re);
                let eip = C64::new(phi.cos(), phi.sin());
                let tau = (aqq - app) / (2.0 * babs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // A <- J^dag A J on rows/cols p, q
                for r in 0..n {
                    let arp = a[(r, p)];
                    let arq = a[(r, q)];
                    a[(r, p)] = arp * c - arq * (eip.conj() * s);
                    a[(r, q)] = arp * (eip * s) + arq * c;
                }
                for r in 0..n {
                    let apr = a[(p, r)];
                    let aqr = a[(q, r)];
                    a[(p, r)] = apr * c - aqr * (eip * s);
                    a[(q, r)] = apr * (eip.conj() * s) + aqr * c;
                }
                for r in 0..n {
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = vrp * c - vrq * (eip.conj() * s);
                    v[(r, q)] = vrp * (eip * s) + vrq * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = v.select_cols(&order);
    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

impl HermitianSpectrum {
    /// ‖V Λ V† − H‖.
    pub fn reconstruction_residual(&self, h: &CMat) -> f64 {
        let lam = CMat::diag_re(&self.eigenvalues);
        (&(&self.eigenvectors * &lam) * &self.eigenvectors.dagger()).dist(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numlin::cmat::c64;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub fn random_hermitian(n: usize, rng: &mut impl Rng) -> CMat {
        let a = CMat::from_fn(n, n, |_, _| {
            c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        a.herm_part()
    }

    #[test]
    fn diag_matrix() {
        let h = CMat::diag_re(&[1.0, -1.0]);
        let s = eigh(&h, 1e-10).unwrap();
        assert_eq!(s.eigenvalues, vec![-1.0, 1.0]);
        // eigenvectors are a permuted identity
        assert!((s.eigenvectors[(0, 1)].norm() - 1.0).abs() < 1e-14);
        assert!((s.eigenvectors[(1, 0)].norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_x() {
        let h = CMat::from_rows(&[
            vec![c64(0.0, 0.0), c64(1.0, 0.0)],
            vec![c64(1.0, 0.0), c64(0.0, 0.0)],
        ]);
        let s = eigh(&h, 1e-10).unwrap();
        assert!((s.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((s.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    /// Independent oracle: roots of the characteristic polynomial by
    /// Durand-Kerner iteration on coefficients from Faddeev-LeVerrier.
    fn charpoly_roots(h: &CMat) -> Vec<f64> {
        let n = h.rows();
        // Faddeev-LeVerrier: coefficients of det(xI - H)
        let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
        coeffs[n] = C64::new(1.0, 0.0);
        let mut m = CMat::zeros(n, n);
        for k in 1..=n {
            m = &(h * &m) + &CMat::eye(n).scale(coeffs[n + 1 - k]);
            coeffs[n - k] = (h * &m).trace() * C64::new(-1.0 / k as f64, 0.0);
        }
        // Durand-Kerner
        let mut roots: Vec<C64> = (0..n)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * (i as f64 + 0.25) / n as f64;
                C64::new(0.4 + 0.9 * th.cos(), 0.9 * th.sin())
            })
            .collect();
        let eval = |x: C64| -> C64 {
            let mut acc = C64::new(0.0, 0.0);
            for k in (0..=n).rev() {
                acc = acc * x + coeffs[k];
            }
            acc
        };
        for _ in 0..500 {
            let mut delta: f64 = 0.0;
            for i in 0..n {
                let mut denom = C64::new(1.0, 0.0);
                for j in 0..n {
                    if j != i {
                        denom *= roots[i] - roots[j];
                    }
                }
                let step = eval(roots[i]) / denom;
                roots[i] -= step;
                delta = delta.max(step.norm());
            }
            if delta < 1e-14 {
                break;
            }
        }
        let mut re: Vec<f64> = roots.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        re
    }

    #[test]
    fn random_6x6_matches_charpoly_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let h = random_hermitian(6, &mut rng);
        let s = eigh(&h, 1e-10).unwrap();
        let oracle = charpoly_roots(&h);
        for (a, b) in s.eigenvalues.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        assert!(s.reconstruction_residual(&h) < 1e-12 * h.norm().max(1.0));
        assert!(s.eigenvectors.unitarity_residual() < 1e-13);
    }

    #[test]
    fn non_hermitian_rejected() {
        let h = CMat::from_rows(&[
            vec![c64(0.0, 0.0), c64(1.0, 0.0)],
            vec![c64(2.0, 0.0), c64(0.0, 0.0)],
        ]);
        assert!(matches!(eigh(&h, 1e-10), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn reconstruction_up_to_32() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &n in &[4usize, 12, 32] {
            let h = random_hermitian(n, &mut rng);
            let s = eigh(&h, 1e-10).unwrap();
            assert!(
                s.reconstruction_residual(&h) <= 1e-12 * h.norm(),
                "n={n}"
            );
        }
    }
}
