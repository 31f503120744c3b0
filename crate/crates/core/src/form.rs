//! Supersymmetric bilinear forms given by Gram matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::koszul_sign;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::space::{Subspace, SuperSpace};

/// Even forms pair each homogeneous part with itself; odd forms pair the
/// even part with the odd part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormParity {
    Even,
    Odd,
}

impl FormParity {
    /// Whether the form may pair basis vectors of parities `a` and `b`.
    pub fn allows(self, a: u8, b: u8) -> bool {
        match self {
            FormParity::Even => a == b,
            FormParity::Odd => a != b,
        }
    }
}

impl fmt::Display for FormParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormParity::Even => "even",
            FormParity::Odd => "odd",
        })
    }
}

impl FromStr for FormParity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(FormParity::Even),
            "odd" => Ok(FormParity::Odd),
            other => Err(Error::Syntax(format!("unknown form parity `{other}`"))),
        }
    }
}

/// `B(x, y) = x^T G y`.
#[derive(Clone, PartialEq)]
pub struct BilinearForm<F> {
    gram: Matrix<F>,
    parity: FormParity,
}

impl<F: Scalar> fmt::Debug for BilinearForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearForm({}, {:?})", self.parity, self.gram)
    }
}

impl<F: Scalar> BilinearForm<F> {
    /// Wraps a Gram matrix without checking symmetry or parity pattern; those
    /// are reported by [`crate::quadratic::verify_form`].
    pub fn new(gram: Matrix<F>, parity: FormParity) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Shape(format!(
                "{}x{} Gram matrix",
                gram.rows(),
                gram.cols()
            )));
        }
        Ok(BilinearForm { gram, parity })
    }

    pub fn zero(n: usize, parity: FormParity) -> Self {
        BilinearForm {
            gram: Matrix::zeros(n, n),
            parity,
        }
    }

    /// Builds from `B(e_i, e_j) = v` entries; the mirrored entry follows from
    /// supersymmetry `B(e_j, e_i) = (-1)^(|i||j|) B(e_i, e_j)`.
    pub fn from_entries(
        space: &SuperSpace,
        parity: FormParity,
        entries: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Result<Self> {
        let mut form = Self::zero(space.dim(), parity);
        let mut seen = vec![false; space.dim() * space.dim()];
        for (i, j, v) in entries {
            form.set_entry(space, i, j, v, &mut seen)?;
        }
        Ok(form)
    }

    /// Like [`BilinearForm::from_entries`] with basis labels.
    pub fn from_labeled<'a>(
        space: &SuperSpace,
        parity: FormParity,
        entries: impl IntoIterator<Item = (&'a str, &'a str, F)>,
    ) -> Result<Self> {
        let entries: Vec<_> = entries
            .into_iter()
            .map(|(a, b, v)| Ok((space.require(a)?, space.require(b)?, v)))
            .collect::<Result<_>>()?;
        Self::from_entries(space, parity, entries)
    }

    pub(crate) fn set_entry(
        &mut self,
        space: &SuperSpace,
        i: usize,
        j: usize,
        v: F,
        seen: &mut [bool],
    ) -> Result<()> {
        let n = space.dim();
        let (pi, pj) = (space.parity(i), space.parity(j));
        let (a, b) = (space.label(i), space.label(j));
        if seen[i * n + j] {
            return Err(Error::Duplicate(format!(
                "form entry ({a}, {b}) given twice"
            )));
        }
        if v.is_zero() {
            seen[i * n + j] = true;
            seen[j * n + i] = true;
            return Ok(());
        }
        if !self.parity.allows(pi, pj) {
            return Err(Error::FormParity(format!(
                "an {} form cannot pair {a} and {b}",
                self.parity
            )));
        }
        let mirrored = koszul_sign::<F>(pi, pj) * v.clone();
        if i == j && !mirrored.approx_eq(&v) {
            return Err(Error::FormParity(format!(
                "B({a}, {a}) must vanish by supersymmetry"
            )));
        }
        self.gram[(i, j)] = v;
        self.gram[(j, i)] = mirrored;
        seen[i * n + j] = true;
        seen[j * n + i] = true;
        Ok(())
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn parity(&self) -> FormParity {
        self.parity
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> F {
        self.gram[(i, j)].clone()
    }

    pub fn eval(&self, x: &[F], y: &[F]) -> F {
        x.iter()
            .zip(self.gram.row_vectors())
            .filter(|(xi, _)| !xi.is_zero())
            .map(|(xi, row)| {
                xi.clone()
                    * row
                        .iter()
                        .zip(y)
                        .filter(|(g, yj)| !g.is_zero() && !yj.is_zero())
                        .map(|(g, yj)| g.clone() * yj.clone())
                        .sum::<F>()
            })
            .sum()
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim()
    }

    /// Rank of the form restricted to a subspace.
    pub fn rank_on(&self, s: &Subspace<F>) -> usize {
        let basis = s.basis();
        Matrix::from_fn(basis.len(), basis.len(), |a, b| {
            self.eval(&basis[a], &basis[b])
        })
        .rank()
    }

    pub fn scale(&self, s: &F) -> Self {
        BilinearForm {
            gram: self.gram.scale(s),
            parity: self.parity,
        }
    }

    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> BilinearForm<G> {
        BilinearForm {
            gram: self.gram.map(f),
            parity: self.parity,
        }
    }

    /// Upper-triangle nonzero entries `(i, j, B(e_i, e_j))`, `i <= j`.
    pub fn entries(&self) -> Vec<(usize, usize, F)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if !self.gram[(i, j)].is_zero() {
                    out.push((i, j, self.gram[(i, j)].clone()));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn odd_odd_entries_are_antisymmetric() {
        let s = SuperSpace::new(&["X0", "Y0"], &["X1", "Y1"]).unwrap();
        let b = BilinearForm::from_labeled(
            &s,
            FormParity::Even,
            [
                ("X0", "Y0", Rational::from(1)),
                ("X1", "Y1", Rational::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(b.entry(3, 2), Rational::from(-1));
        assert_eq!(b.entry(1, 0), Rational::from(1));
        assert!(b.is_nondegenerate());
    }

    #[test]
    fn parity_pattern_is_enforced() {
        let s = SuperSpace::new(&["X0"], &["X1"]).unwrap();
        let bad =
            BilinearForm::from_labeled(&s, FormParity::Even, [("X0", "X1", Rational::from(1))]);
        assert!(matches!(bad, Err(Error::FormParity(_))));
        let ok = BilinearForm::from_labeled(&s, FormParity::Odd, [("X0", "X1", Rational::from(1))])
            .unwrap();
        assert_eq!(ok.entry(1, 0), Rational::from(1));
        let self_pair =
            BilinearForm::from_labeled(&s, FormParity::Even, [("X1", "X1", Rational::from(1))]);
        assert!(matches!(self_pair, Err(Error::FormParity(_))));
    }

    #[test]
    fn restricted_rank() {
        let s = SuperSpace::even(&["X", "P", "Q", "Z"]).unwrap();
        let b = BilinearForm::from_labeled(
            &s,
            FormParity::Even,
            [("X", "Z", Rational::from(1)), ("P", "Q", Rational::from(1))],
        )
        .unwrap();
        assert_eq!(b.rank_on(&Subspace::coordinate(4, [3])), 0);
        assert_eq!(b.rank_on(&Subspace::coordinate(4, [1, 2])), 2);
    }
}
