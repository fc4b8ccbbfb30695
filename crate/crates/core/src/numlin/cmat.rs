//! Dense complex matrices, row-major storage.
//!
//! Everything in this crate works at desk scale (matrices of size a few to a
//! few hundred), so the representation is a flat `Vec<Complex64>` with no
//! blocking or sparsity.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub type C64 = Complex64;

/// Shorthand for `Complex64::new`.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMat {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl fmt::Debug for CMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn eye(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = CMat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Build from row-major slices of (re, im) pairs.
    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = CMat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, z) in row.iter().enumerate() {
                m[(i, j)] = *z;
            }
        }
        m
    }

    /// Real diagonal matrix.
    pub fn diag_re(d: &[f64]) -> Self {
        let mut m = CMat::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = C64::new(x, 0.0);
        }
        m
    }

    /// Complex diagonal matrix.
    pub fn diag(d: &[C64]) -> Self {
        let mut m = CMat::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [C64] {
        &mut self.data
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMat {
        CMat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> CMat {
        CMat::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> CMat {
        CMat::from_fn(self.rows, self.cols, |r, c| self[(r, c)].conj())
    }

    pub fn scale(&self, s: C64) -> CMat {
        CMat::from_fn(self.rows, self.cols, |r, c| self[(r, c)] * s)
    }

    pub fn trace(&self) -> C64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Max absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// ‖self − other‖_F.
    pub fn dist(&self, other: &CMat) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Column `j` as a vector (rows×1).
    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[C64]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i];
        }
    }

    /// Submatrix of the given columns, in order.
    pub fn select_cols(&self, idx: &[usize]) -> CMat {
        CMat::from_fn(self.rows, idx.len(), |r, c| self[(r, idx[c])])
    }

    /// Submatrix on the given row and column index sets.
    pub fn submatrix(&self, ridx: &[usize], cidx: &[usize]) -> CMat {
        CMat::from_fn(ridx.len(), cidx.len(), |r, c| self[(ridx[r], cidx[c])])
    }

    /// Hermitian residual ‖A − A†‖.
    pub fn herm_residual(&self) -> f64 {
        self.dist(&self.dagger())
    }

    /// Unitarity residual ‖A†A − I‖.
    pub fn unitarity_residual(&self) -> f64 {
        (self.dagger() * self).dist(&CMat::eye(self.cols))
    }

    /// Antisymmetry residual ‖A + Aᵀ‖.
    pub fn antisym_residual(&self) -> f64 {
        assert!(self.is_square());
        let mut s = 0.0;
        for r in 0..self.rows {
            for c in 0..self.cols {
                s += (self[(r, c)] + self[(c, r)]).norm_sqr();
            }
        }
        s.sqrt()
    }

    /// (A − A†)/2.
    pub fn antiherm_part(&self) -> CMat {
        let d = self.dagger();
        CMat::from_fn(self.rows, self.cols, |r, c| {
            (self[(r, c)] - d[(r, c)]) * 0.5
        })
    }

    /// (A + A†)/2.
    pub fn herm_part(&self) -> CMat {
        let d = self.dagger();
        CMat::from_fn(self.rows, self.cols, |r, c| {
            (self[(r, c)] + d[(r, c)]) * 0.5
        })
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![C64::new(0.0, 0.0); self.rows];
        for r in 0..self.rows {
            let mut acc = C64::new(0.0, 0.0);
            for c in 0..self.cols {
                acc += self[(r, c)] * v[c];
            }
            out[r] = acc;
        }
        out
    }

    /// A ← A + s·B.
    pub fn add_scaled(&mut self, b: &CMat, s: C64) {
        assert_eq!((self.rows, self.cols), (b.rows, b.cols));
        for (x, y) in self.data.iter_mut().zip(&b.data) {
            *x += s * y;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let t = self[(a, c)];
            self[(a, c)] = self[(b, c)];
            self[(b, c)] = t;
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            let t = self[(r, a)];
            self[(r, a)] = self[(r, b)];
            self[(r, b)] = t;
        }
    }
}

impl Index<(usize, usize)> for CMat {
    type Output = C64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for CMat {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &CMat {
    type Output = CMat;
    fn mul(self, rhs: &CMat) -> CMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matmul");
        let mut out = CMat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        out
    }
}

impl Mul for CMat {
    type Output = CMat;
    fn mul(self, rhs: CMat) -> CMat {
        &self * &rhs
    }
}

impl Mul<&CMat> for CMat {
    type Output = CMat;
    fn mul(self, rhs: &CMat) -> CMat {
        &self * rhs
    }
}

impl Mul<CMat> for &CMat {
    type Output = CMat;
    fn mul(self, rhs: CMat) -> CMat {
        self * &rhs
    }
}

impl Add for &CMat {
    type Output = CMat;
    fn add(self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        out.add_scaled(rhs, C64::new(1.0, 0.0));
        out
    }
}

impl Sub for &CMat {
    type Output = CMat;
    fn sub(self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        out.add_scaled(rhs, C64::new(-1.0, 0.0));
        out
    }
}

impl Neg for &CMat {
    type Output = CMat;
    fn neg(self) -> CMat {
        self.scale(C64::new(-1.0, 0.0))
    }
}

/// Commutator AB − BA.
pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    &(a * b) - &(b * a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = CMat::from_rows(&[
            vec![c64(1.0, 0.0), c64(0.0, 1.0)],
            vec![c64(2.0, -1.0), c64(0.5, 0.0)],
        ]);
        let id = CMat::eye(2);
        assert_eq!(&a * &id, a.clone());
        assert!((a.dagger().dagger()).dist(&a) < 1e-15);
        let tr = a.trace();
        assert!((tr - c64(1.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn herm_antiherm_split() {
        let a = CMat::from_rows(&[
            vec![c64(1.0, 2.0), c64(0.3, 1.0)],
            vec![c64(-2.0, -1.0), c64(0.5, -0.25)],
        ]);
        let h = a.herm_part();
        let k = a.antiherm_part();
        assert!(h.herm_residual() < 1e-15);
        assert!((&h + &k).dist(&a) < 1e-15);
    }
}
