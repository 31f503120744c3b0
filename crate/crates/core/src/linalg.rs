//! Dense matrices over a [`Scalar`] and the eliminations everything else is
//! built on.
//!
//! Matrices act on column vectors: the image of the `j`-th basis vector is
//! column `j`. Row reduction pivots on the first nonzero entry for exact
//! scalars and on the largest entry for floats.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{tolerance, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `rows x columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape(format!("columns must have length {rows}")));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| {
            columns[j][i].clone()
        }))
    }

    /// Convenience for tests and literals: integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
                .collect(),
        )
        .expect("ragged literal")
    }

    pub fn diagonal(entries: &[F]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(b))
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a.clone() * b.clone())
                    .sum()
            })
            .collect()
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let candidate = if F::is_exact() {
                (r..self.rows).find(|&i| !self[(i, c)].is_zero())
            } else {
                (r..self.rows)
                    .filter(|&i| !self[(i, c)].is_zero())
                    .max_by(|&a, &b| {
                        self[(a, c)]
                            .magnitude()
                            .total_cmp(&self[(b, c)].magnitude())
                    })
            };
            let Some(p) = candidate else { continue };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let x = self[(r, j)].clone();
                self[(r, j)] = x * inv.clone();
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    let delta = factor.clone() * self[(r, j)].clone();
                    self[(i, j)] -= delta;
                }
                if !F::is_exact() {
                    self[(i, c)] = F::zero();
                }
            }
            pivots.push(c);
            r += 1;
        }
        if !F::is_exact() {
            for x in &mut self.data {
                if x.is_zero() {
                    *x = F::zero();
                }
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// A solution of `A x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side has length {} but the matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients from the
    /// constant term up (Faddeev-LeVerrier).
    pub fn characteristic_polynomial(&self) -> Vec<F> {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m);
            for i in 0..n {
                next[(i, i)] += coeffs[n - k + 1].clone();
            }
            m = next;
            let am = self.mul(&m);
            coeffs[n - k] = -am.trace() * F::from_ratio(1, k as i64);
        }
        coeffs
    }

    /// Nilpotency and semisimplicity of a square matrix of size at most 4.
    pub fn eigen_structure(&self) -> Result<EigenStructure> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n > 4 {
            return Err(Error::MatrixTooLarge(n));
        }
        let is_nilpotent = self.pow(n as u32).is_zero();
        let is_semisimple = if F::is_exact() {
            let min = self.minimal_polynomial();
            poly::degree(&poly::gcd(&min, &poly::derivative(&min))) == Some(0)
        } else {
            semisimple_numeric(self)
        };
        Ok(EigenStructure {
            is_nilpotent,
            is_semisimple,
        })
    }

    /// Monic minimal polynomial, coefficients from the constant term up.
    pub fn minimal_polynomial(&self) -> Vec<F> {
        assert!(
            self.is_square(),
            "minimal polynomial of a non-square matrix"
        );
        let n = self.rows;
        if n == 0 {
            return vec![F::one()];
        }
        let mut powers: Vec<Vec<F>> = vec![Self::identity(n).data];
        let mut current = Self::identity(n);
        for k in 1..=n {
            current = current.mul(self);
            let basis = Matrix::from_columns(n * n, &powers).expect("consistent sizes");
            if let Some(c) = basis.solve(&current.data).expect("consistent sizes") {
                let mut p: Vec<F> = c.into_iter().map(|x| -x).collect();
                p.push(F::one());
                debug_assert_eq!(p.len(), k + 1);
                return p;
            }
            powers.push(current.data.clone());
        }
        unreachable!("Cayley-Hamilton bounds the degree by n")
    }
}

/// Result of [`Matrix::eigen_structure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EigenStructure {
    pub is_nilpotent: bool,
    pub is_semisimple: bool,
}

fn semisimple_numeric<F: Scalar>(a: &Matrix<F>) -> bool {
    let n = a.rows();
    if n == 0 {
        return true;
    }
    let m: Vec<Complex64> = a.entries().iter().map(Scalar::to_complex64).collect();
    let scale = a.max_abs().max(1.0);
    let coeffs: Vec<Complex64> = a
        .characteristic_polynomial()
        .iter()
        .map(Scalar::to_complex64)
        .collect();
    let roots = poly::roots(&coeffs);
    // Multiple roots come back split by roughly sqrt(eps); cluster them.
    let cluster_radius = tolerance().sqrt() * scale;
    let mut distinct: Vec<Complex64> = Vec::new();
    for r in roots {
        if !distinct.iter().any(|d| (d - r).norm() <= cluster_radius) {
            distinct.push(r);
        }
    }
    // Diagonalizable iff the product of (A - mu I) over distinct eigenvalues vanishes.
    let mut prod: Vec<Complex64> = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    for mu in &distinct {
        let mut next = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    let shifted = if k == j {
                        m[k * n + j] - mu
                    } else {
                        m[k * n + j]
                    };
                    acc += prod[i * n + k] * shifted;
                }
                next[i * n + j] = acc;
            }
        }
        prod = next;
    }
    let threshold = cluster_radius * scale.powi(distinct.len() as i32 - 1).max(1.0);
    prod.iter().all(|z| z.norm() <= threshold)
}

pub(crate) mod poly {
    //! Dense univariate polynomials, coefficients from the constant term up.

    use num_complex::Complex64;

    use crate::field::Scalar;

    pub fn trim<F: Scalar>(p: &[F]) -> Vec<F> {
        let mut v = p.to_vec();
        while v.last().is_some_and(Scalar::is_zero) {
            v.pop();
        }
        v
    }

    pub fn degree<F: Scalar>(p: &[F]) -> Option<usize> {
        trim(p).len().checked_sub(1)
    }

    pub fn derivative<F: Scalar>(p: &[F]) -> Vec<F> {
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * F::from_i64(k as i64))
            .collect()
    }

    fn rem<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
        let b = trim(b);
        let lead = b.last().expect("division by the zero polynomial").clone();
        let mut r = trim(a);
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let factor = r.last().unwrap().clone() / lead.clone();
            for (k, c) in b.iter().enumerate() {
                let delta = factor.clone() * c.clone();
                r[shift + k] -= delta;
            }
            r.pop();
            r = trim(&r);
        }
        r
    }

    pub fn gcd<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
        let (mut a, mut b) = (trim(a), trim(b));
        while !b.is_empty() {
            let r = rem(&a, &b);
            a = b;
            b = r;
        }
        a
    }

    /// All complex roots of a polynomial (Durand-Kerner).
    pub fn roots(coeffs: &[Complex64]) -> Vec<Complex64> {
        let mut c: Vec<Complex64> = coeffs.to_vec();
        while c.last().is_some_and(|z| z.norm() == 0.0) {
            c.pop();
        }
        let n = c.len().saturating_sub(1);
        if n == 0 {
            return Vec::new();
        }
        let lead = c[n];
        let monic: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
        let eval = |x: Complex64| {
            monic
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, k| acc * x + k)
        };
        let bound = 1.0 + monic[..n].iter().map(|z| z.norm()).fold(0.0, f64::max);
        let seed = Complex64::new(0.4, 0.9);
        let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound).collect();
        for _ in 0..2000 {
            let mut delta = 0.0f64;
            for i in 0..n {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    if i != j {
                        denom *= z[i] - z[j];
                    }
                }
                if denom.norm() == 0.0 {
                    denom = Complex64::new(1e-300, 0.0);
                }
                let step = eval(z[i]) / denom;
                z[i] -= step;
                delta = delta.max(step.norm());
            }
            if delta < 1e-15 * bound {
                break;
            }
        }
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Complex, Rational};
    use proptest::prelude::*;

    type M = Matrix<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let a = M::identity(3);
        assert_eq!(a.solve(&ints(&[1, 2, 3])).unwrap(), Some(ints(&[1, 2, 3])));
    }

    #[test]
    fn solve_inconsistent() {
        let a = M::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(a.solve(&ints(&[1, 2])).unwrap(), None);
    }

    #[test]
    fn solve_diagonal() {
        let a = M::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            a.solve(&ints(&[1, 1])).unwrap(),
            Some(vec![q(1, 2), q(1, 3)])
        );
    }

    #[test]
    fn solve_rejects_wrong_length() {
        let a = M::identity(2);
        assert!(matches!(a.solve(&ints(&[1, 2, 3])), Err(Error::Shape(_))));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(M::zeros(3, 3).nullspace().len(), 3);
        assert!(M::identity(3).nullspace().is_empty());
        let a = M::from_i64(&[&[1, 1, 0]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.apply(v).iter().all(Scalar::is_zero));
        }
        assert_eq!(Matrix::from_columns(3, &ns).unwrap().rank(), 2);
    }

    #[test]
    fn eigen_structure_examples() {
        let jordan = M::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            jordan.eigen_structure().unwrap(),
            EigenStructure {
                is_nilpotent: true,
                is_semisimple: false
            }
        );
        let diag = M::from_i64(&[&[1, 0], &[0, -1]]);
        assert_eq!(
            diag.eigen_structure().unwrap(),
            EigenStructure {
                is_nilpotent: false,
                is_semisimple: true
            }
        );
        // Minimal polynomial (x-1)^2, worked by hand: A - I = [[0,1],[0,0]] != 0.
        let shear = M::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(shear.minimal_polynomial(), ints(&[1, -2, 1]));
        assert_eq!(
            shear.eigen_structure().unwrap(),
            EigenStructure {
                is_nilpotent: false,
                is_semisimple: false
            }
        );
        assert!(matches!(
            M::identity(5).eigen_structure(),
            Err(Error::MatrixTooLarge(5))
        ));
        assert!(M::zeros(0, 0).eigen_structure().unwrap().is_semisimple);
    }

    #[test]
    fn eigen_structure_float_backend() {
        let c = |x: f64| Complex::new(x, 0.0);
        let shear = Matrix::from_rows(vec![vec![c(1.0), c(1.0)], vec![c(0.0), c(1.0)]]).unwrap();
        assert!(!shear.eigen_structure().unwrap().is_semisimple);
        let scalar = Matrix::<Complex>::identity(3).scale(&c(2.5));
        assert!(scalar.eigen_structure().unwrap().is_semisimple);
        let rot = Matrix::from_rows(vec![vec![c(0.0), c(-1.0)], vec![c(1.0), c(0.0)]]).unwrap();
        assert_eq!(
            rot.eigen_structure().unwrap(),
            EigenStructure {
                is_nilpotent: false,
                is_semisimple: true
            }
        );
        let nil = Matrix::from_rows(vec![
            vec![c(0.0), c(1.0), c(0.0)],
            vec![c(0.0), c(0.0), c(1.0)],
            vec![c(0.0), c(0.0), c(0.0)],
        ])
        .unwrap();
        assert_eq!(
            nil.eigen_structure().unwrap(),
            EigenStructure {
                is_nilpotent: true,
                is_semisimple: false
            }
        );
        // diag(1,1,2) with a Jordan block on the double eigenvalue 1
        let mixed = Matrix::from_rows(vec![
            vec![c(1.0), c(1.0), c(0.0)],
            vec![c(0.0), c(1.0), c(0.0)],
            vec![c(0.0), c(0.0), c(2.0)],
        ])
        .unwrap();
        assert!(!mixed.eigen_structure().unwrap().is_semisimple);
    }

    #[test]
    fn characteristic_polynomial_of_companion() {
        // x^3 - 2x + 5
        let a = M::from_i64(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(a.characteristic_polynomial(), ints(&[5, -2, 0, 1]));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = M::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), M::identity(2));
        assert!(M::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = M> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |v| {
                M::from_fn(r, c, |i, j| {
                    let (n, d) = v[i * c + j];
                    // Sparsify so that rank deficiency actually shows up.
                    if (i as i64 + 2 * j as i64 + n).rem_euclid(3) == 0 {
                        Rational::from(0)
                    } else {
                        Rational::new(n, d)
                    }
                })
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix()) {
            let ns = a.nullspace();
            prop_assert_eq!(a.rank() + ns.len(), a.cols());
            for v in &ns {
                prop_assert!(a.apply(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn solve_then_substitute(a in small_matrix(), seed in proptest::collection::vec(-5i64..=5, 6)) {
            let x0: Vec<Rational> = (0..a.cols()).map(|j| Rational::from(seed[j])).collect();
            let b = a.apply(&x0);
            let x = a.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(a.apply(&x), b);
        }

        #[test]
        fn solve_then_substitute_float(entries in proptest::collection::vec(-4.0f64..4.0, 9), rhs in proptest::collection::vec(-4.0f64..4.0, 3)) {
            let a = Matrix::from_fn(3, 3, |i, j| Complex::new(entries[i * 3 + j], 0.0));
            let b: Vec<Complex> = rhs.iter().map(|&x| Complex::new(x, 0.0)).collect();
            if let Some(x) = a.solve(&b).unwrap() {
                let r = a.apply(&x);
                // Residuals scale with the conditioning; only check well-posed draws.
                if a.inverse().is_some_and(|inv| inv.max_abs() < 1e3) {
                    for (ri, bi) in r.iter().zip(&b) {
                        prop_assert!((*ri - *bi).magnitude() <= 1e-9);
                    }
                }
            }
        }
    }
}
