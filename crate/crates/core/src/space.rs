//! Graded vector spaces with named bases, and subspaces in echelon form.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;

/// A `Z/2`-graded space with a labelled basis, even vectors first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    dim_even: usize,
    dim_odd: usize,
    labels: Vec<String>,
}

impl SuperSpace {
    pub fn new(even: &[&str], odd: &[&str]) -> Result<Self> {
        Self::from_labels(
            even.len(),
            odd.len(),
            even.iter().chain(odd).map(|s| s.to_string()).collect(),
        )
    }

    pub fn from_labels(dim_even: usize, dim_odd: usize, labels: Vec<String>) -> Result<Self> {
        if labels.len() != dim_even + dim_odd {
            return Err(Error::Basis(format!(
                "{} labels for dimension {}|{}",
                labels.len(),
                dim_even,
                dim_odd
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !is_valid_label(l) {
                return Err(Error::Basis(format!("`{l}` is not a valid basis label")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::Duplicate(format!("basis label `{l}`")));
            }
        }
        Ok(SuperSpace {
            dim_even,
            dim_odd,
            labels,
        })
    }

    /// Purely even space with the given labels.
    pub fn even(labels: &[&str]) -> Result<Self> {
        Self::new(labels, &[])
    }

    pub fn dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }

    pub fn dim_even(&self) -> usize {
        self.dim_even
    }

    pub fn dim_odd(&self) -> usize {
        self.dim_odd
    }

    pub fn is_purely_even(&self) -> bool {
        self.dim_odd == 0
    }

    /// `0` for even basis vectors, `1` for odd ones.
    pub fn parity(&self, i: usize) -> u8 {
        assert!(i < self.dim(), "basis index {i} out of range");
        u8::from(i >= self.dim_even)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn even_range(&self) -> std::ops::Range<usize> {
        0..self.dim_even
    }

    pub fn odd_range(&self) -> std::ops::Range<usize> {
        self.dim_even..self.dim()
    }

    /// Same dimensions, new names.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        Self::from_labels(self.dim_even, self.dim_odd, labels)
    }

    /// Unit vector `e_i`.
    pub fn basis_vector<F: Scalar>(&self, i: usize) -> Vec<F> {
        unit(self.dim(), i)
    }

    /// Whether a vector has a definite parity, and which.
    pub fn vector_parity<F: Scalar>(&self, v: &[F]) -> Option<u8> {
        let even = self.even_range().any(|i| !v[i].is_zero());
        let odd = self.odd_range().any(|i| !v[i].is_zero());
        match (even, odd) {
            (true, true) => None,
            (false, true) => Some(1),
            _ => Some(0),
        }
    }

    /// Human-readable linear combination, e.g. `e - X + 1/2 P`.
    pub fn format_vector<F: Scalar>(&self, v: &[F]) -> String {
        format_combination(v.iter().zip(&self.labels).map(|(c, l)| (c, l.as_str())))
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (even, odd) = self.labels.split_at(self.dim_even);
        write!(f, "<{} | {}>", even.join(" "), odd.join(" "))
    }
}

pub(crate) fn is_valid_label(l: &str) -> bool {
    !l.is_empty()
        && l.chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '*' | '\'' | '.'))
        && !l.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '+')
}

pub(crate) fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub(crate) fn format_combination<'a, F: Scalar + 'a>(
    terms: impl Iterator<Item = (&'a F, &'a str)>,
) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) if F::is_exact() => (true, rest.to_string()),
            _ => (false, text),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if body != "1" {
            out.push_str(&body);
            out.push(' ');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A linear subspace of `F^n`, stored as the nonzero rows of its reduced
/// row echelon form. Two subspaces are equal iff these rows agree.
#[derive(Clone)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Scalar> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient", &self.ambient)
            .field("basis", &self.basis)
            .finish()
    }
}

impl<F: Scalar> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.basis.len() == other.basis.len()
            && self
                .basis
                .iter()
                .zip(&other.basis)
                .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x.approx_eq(y)))
    }
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit(ambient, i)).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let rows: Vec<Vec<F>> = vectors.into_iter().collect();
        for r in &rows {
            assert_eq!(
                r.len(),
                ambient,
                "vector length does not match the ambient dimension"
            );
        }
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(rows).expect("equal lengths").rref();
        Subspace {
            ambient,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }

    /// Span of the given basis vectors `e_i`.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span(ambient, indices.into_iter().map(|i| unit(ambient, i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Echelon basis.
    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector length does not match the ambient dimension"
        );
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        Self::span(self.ambient, self.basis.iter().cloned().chain([v.to_vec()])).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // Solve sum a_i u_i - sum b_j w_j = 0 and read off the u-part.
        let cols: Vec<Vec<F>> = self
            .basis
            .iter()
            .cloned()
            .chain(
                other
                    .basis
                    .iter()
                    .map(|w| w.iter().map(|x| -x.clone()).collect()),
            )
            .collect();
        let m = Matrix::from_columns(self.ambient, &cols).expect("consistent lengths");
        let k = self.dim();
        let vectors = m.nullspace().into_iter().map(|coeffs| {
            let mut v = vec![F::zero(); self.ambient];
            for (a, u) in coeffs[..k].iter().zip(&self.basis) {
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi += a.clone() * ui.clone();
                }
            }
            v
        });
        Self::span(self.ambient, vectors)
    }

    /// The subspace as a matrix whose columns are the basis vectors.
    pub fn as_columns(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient, &self.basis).expect("consistent lengths")
    }

    pub fn format(&self, space: &SuperSpace) -> String {
        let parts: Vec<String> = self.basis.iter().map(|v| space.format_vector(v)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn labels_are_validated() {
        assert!(SuperSpace::new(&["X", "X"], &[]).is_err());
        assert!(SuperSpace::new(&["1X"], &[]).is_err());
        let s = SuperSpace::new(&["X0", "Y0"], &["X1", "Y1"]).unwrap();
        assert_eq!(s.parity(1), 0);
        assert_eq!(s.parity(2), 1);
        assert_eq!(s.index_of("Y1"), Some(3));
        assert!(matches!(s.require("Q"), Err(Error::UnknownLabel(_))));
        assert_eq!(s.to_string(), "<X0 Y0 | X1 Y1>");
    }

    #[test]
    fn vector_formatting() {
        let s = SuperSpace::even(&["e", "X", "P"]).unwrap();
        let v = vec![Rational::from(-1), Rational::from(1), Rational::new(1, 2)];
        assert_eq!(s.format_vector(&v), "-e + X + 1/2 P");
        assert_eq!(s.format_vector(&r(&[0, 0, 0])), "0");
    }

    #[test]
    fn echelon_equality() {
        let a = Subspace::span(3, [r(&[1, 1, 0]), r(&[0, 1, 0])]);
        let b = Subspace::coordinate(3, [0, 1]);
        assert_eq!(a, b);
        assert!(a.contains(&r(&[5, -2, 0])));
        assert!(!a.contains(&r(&[0, 0, 1])));
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::coordinate(4, [0, 1]);
        let b = Subspace::span(4, [r(&[0, 1, 1, 0]), r(&[0, 0, 0, 1])]);
        assert_eq!(a.sum(&b).dim(), 4);
        assert!(a.intersection(&b).is_zero());
        let c = Subspace::span(4, [r(&[1, 1, 0, 0]), r(&[0, 0, 1, 0])]);
        let i = a.intersection(&c);
        assert_eq!(i, Subspace::span(4, [r(&[1, 1, 0, 0])]));
    }
}
