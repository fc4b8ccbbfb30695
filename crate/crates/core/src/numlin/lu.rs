//! Partial-pivot LU for small dense complex matrices: determinants, solves,
//! inverses.

use super::cmat::{C64, CMat};
use crate::error::{Error, Result};

pub struct Lu {
    lu: CMat,
    perm: Vec<usize>,
    sign: f64,
}

pub fn lu_factor(a: &CMat) -> Result<Lu> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    for k in 0..n {
        let mut p = k;
        let mut best = lu[(k, k)].norm();
        for i in (k + 1)..n {
            let v = lu[(i, k)].norm();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best == 0.0 {
            return Err(Error::Singular { pivot: k });
        }
        if p != k {
            lu.swap_rows(p, k);
            perm.swap(p, k);
            sign = -sign;
        }
        let piv = lu[(k, k)];
        for i in (k + 1)..n {
            let f = lu[(i, k)] / piv;
            lu[(i, k)] = f;
            for j in (k + 1)..n {
                let upd = f * lu[(k, j)];
                lu[(i, j)] -= upd;
            }
        }
    }
    Ok(Lu { lu, perm, sign })
}

impl Lu {
    pub fn det(&self) -> C64 {
        let n = self.lu.rows();
        let mut d = C64::new(self.sign, 0.0);
        for i in 0..n {
            d *= self.lu[(i, i)];
        }
        d
    }

    pub fn solve(&self, rhs: &[C64]) -> Vec<C64> {
        let n = self.lu.rows();
        assert_eq!(rhs.len(), n);
        let mut y = vec![C64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut v = rhs[self.perm[i]];
            for j in 0..i {
                v -= self.lu[(i, j)] * y[j];
            }
            y[i] = v;
        }
        for i in (0..n).rev() {
            let mut v = y[i];
            for j in (i + 1)..n {
                v -= self.lu[(i, j)] * y[j];
            }
            y[i] = v / self.lu[(i, i)];
        }
        y
    }
}

pub fn det(a: &CMat) -> Result<C64> {
    Ok(lu_factor(a)?.det())
}

pub fn inverse(a: &CMat) -> Result<CMat> {
    let n = a.rows();
    let lu = lu_factor(a)?;
    let mut out = CMat::zeros(n, n);
    let mut e = vec![C64::new(0.0, 0.0); n];
    for c in 0..n {
        e.iter_mut().for_each(|z| *z = C64::new(0.0, 0.0));
        e[c] = C64::new(1.0, 0.0);
        let x = lu.solve(&e);
        out.set_col(c, &x);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numlin::cmat::c64;

    #[test]
    fn det_and_inverse() {
        let a = CMat::from_rows(&[
            vec![c64(2.0, 0.0), c64(1.0, 1.0), c64(0.0, 0.0)],
            vec![c64(0.5, -0.5), c64(3.0, 0.0), c64(1.0, 0.0)],
            vec![c64(0.0, 1.0), c64(0.0, 0.0), c64(1.5, 0.5)],
        ]);
        let inv = inverse(&a).unwrap();
        assert!((&a * &inv).dist(&CMat::eye(3)) < 1e-12);
        // det(A) * det(A^-1) = 1
        let d = det(&a).unwrap() * det(&inv).unwrap();
        assert!((d - c64(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn singular_detected() {
        let a = CMat::from_rows(&[
            vec![c64(1.0, 0.0), c64(2.0, 0.0)],
            vec![c64(2.0, 0.0), c64(4.0, 0.0)],
        ]);
        assert!(matches!(lu_factor(&a), Err(Error::Singular { .. })));
    }
}
