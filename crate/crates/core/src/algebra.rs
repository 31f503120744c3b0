//! Lie superalgebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::space::SuperSpace;

/// `(-1)^(a*b)` for parities `a`, `b`.
pub(crate) fn koszul_sign<F: Scalar>(a: u8, b: u8) -> F {
    if a & b == 1 {
        -F::one()
    } else {
        F::one()
    }
}

/// A finite-dimensional Lie superalgebra: `[e_i, e_j] = sum_k c[i][j][k] e_k`.
///
/// Both orientations `(i, j)` and `(j, i)` are stored; graded antisymmetry
/// `c[j][i][k] = -(-1)^(|i||j|) c[i][j][k]` and parity consistency are
/// validated on construction. The Jacobi identity is not assumed; see
/// [`crate::quadratic::verify_jacobi`].
#[derive(Clone)]
pub struct LieSuperalgebra<F> {
    name: String,
    space: SuperSpace,
    /// Sparse rows, indexed by `i * n + j`, sorted by `k`.
    table: Vec<Vec<(usize, F)>>,
}

impl<F: Scalar> fmt::Debug for LieSuperalgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieSuperalgebra({} on {})", self.name, self.space)?;
        for line in self.bracket_lines() {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

impl<F: Scalar> PartialEq for LieSuperalgebra<F> {
    /// Equal spaces and structure constants (names are ignored).
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.same_constants(other)
    }
}

impl<F: Scalar> LieSuperalgebra<F> {
    /// Builds from a dense table: `rows[i * n + j]` is the coordinate vector of
    /// `[e_i, e_j]`.
    pub fn from_dense(
        name: impl Into<String>,
        space: SuperSpace,
        rows: Vec<Vec<F>>,
    ) -> Result<Self> {
        let n = space.dim();
        if rows.len() != n * n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!(
                "bracket table must be {n}x{n} vectors of length {n}"
            )));
        }
        let table = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        let a = LieSuperalgebra {
            name: name.into(),
            space,
            table,
        };
        a.validate()?;
        Ok(a)
    }

    /// Builds from a closure giving `[e_i, e_j]` for every ordered pair.
    pub fn from_fn(
        name: impl Into<String>,
        space: SuperSpace,
        mut bracket: impl FnMut(usize, usize) -> Vec<F>,
    ) -> Result<Self> {
        let n = space.dim();
        let rows = (0..n * n).map(|ij| bracket(ij / n, ij % n)).collect();
        Self::from_dense(name, space, rows)
    }

    pub fn abelian(name: impl Into<String>, space: SuperSpace) -> Self {
        let n = space.dim();
        LieSuperalgebra {
            name: name.into(),
            space,
            table: vec![Vec::new(); n * n],
        }
    }

    pub fn builder(name: impl Into<String>, space: SuperSpace) -> AlgebraBuilder<F> {
        AlgebraBuilder::new(name, space)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let (pi, pj) = (self.space.parity(i), self.space.parity(j));
                for (k, c) in &self.table[i * n + j] {
                    if self.space.parity(*k) != pi ^ pj {
                        return Err(Error::Parity(format!(
                            "[{}, {}] has a component along {} ({})",
                            self.space.label(i),
                            self.space.label(j),
                            self.space.label(*k),
                            c
                        )));
                    }
                }
                if j < i {
                    continue;
                }
                let sign: F = -koszul_sign::<F>(pi, pj);
                for k in 0..n {
                    let forward = self.structure_constant(i, j, k);
                    let backward = self.structure_constant(j, i, k);
                    if !backward.approx_eq(&(sign.clone() * forward.clone())) {
                        return Err(Error::Antisymmetry(format!(
                            "[{a}, {b}] and [{b}, {a}] disagree on {c}: {forward} vs {backward}",
                            a = self.space.label(i),
                            b = self.space.label(j),
                            c = self.space.label(k),
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.space.parity(i)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> F {
        let n = self.dim();
        self.table[i * n + j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(F::zero, |(_, c)| c.clone())
    }

    /// Nonzero terms of `[e_i, e_j]`.
    pub fn bracket_terms(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim() + j]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        for (k, c) in self.bracket_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Bilinear extension of the bracket to arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = xi.clone() * yj.clone();
                for (k, c) in self.bracket_terms(i, j) {
                    out[*k] += s.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`: column `j` holds `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.bracket_terms(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Matrix of `ad(x)` for an arbitrary vector.
    pub fn ad_vector(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for j in 0..n {
                for (k, c) in self.bracket_terms(i, j) {
                    m[(*k, j)] += xi.clone() * c.clone();
                }
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Whether structure constants agree entrywise (labels ignored).
    pub fn same_constants(&self, other: &Self) -> bool {
        let n = self.dim();
        n == other.dim()
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    (0..n).all(|k| {
                        self.structure_constant(i, j, k)
                            .approx_eq(&other.structure_constant(i, j, k))
                    })
                })
            })
    }

    /// Same constants, new basis names.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        Ok(LieSuperalgebra {
            name: self.name.clone(),
            space: self.space.relabel(labels)?,
            table: self.table.clone(),
        })
    }

    /// Same algebra over another scalar backend.
    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> LieSuperalgebra<G> {
        LieSuperalgebra {
            name: self.name.clone(),
            space: self.space.clone(),
            table: self
                .table
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(k, c)| (*k, f(c)))
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    /// Canonical bracket lines `[a, b] = ...`, one per unordered pair with
    /// `i <= j`, skipping zero brackets.
    pub fn bracket_lines(&self) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    out.push(format!(
                        "[{}, {}] = {}",
                        self.space.label(i),
                        self.space.label(j),
                        self.space.format_vector(&v)
                    ));
                }
            }
        }
        out
    }
}

/// Incremental construction from one orientation per unordered pair.
pub struct AlgebraBuilder<F> {
    name: String,
    space: SuperSpace,
    rows: Vec<Vec<F>>,
    set: Vec<Option<(usize, usize)>>,
    error: Option<Error>,
}

impl<F: Scalar> AlgebraBuilder<F> {
    pub fn new(name: impl Into<String>, space: SuperSpace) -> Self {
        let n = space.dim();
        AlgebraBuilder {
            name: name.into(),
            space,
            rows: vec![vec![F::zero(); n]; n * n],
            set: vec![None; n * n],
            error: None,
        }
    }

    /// Sets `[a, b] = sum c_k label_k`; the opposite orientation is filled in
    /// by graded antisymmetry.
    pub fn bracket<'a>(
        mut self,
        a: &str,
        b: &str,
        terms: impl IntoIterator<Item = (F, &'a str)>,
    ) -> Self {
        if self.error.is_none() {
            if let Err(e) = self.try_bracket(
                a,
                b,
                terms.into_iter().map(|(c, l)| (c, l.to_string())).collect(),
            ) {
                self.error = Some(e);
            }
        }
        self
    }

    /// Fallible version of [`AlgebraBuilder::bracket`].
    pub fn try_bracket(&mut self, a: &str, b: &str, terms: Vec<(F, String)>) -> Result<()> {
        let i = self.space.require(a)?;
        let j = self.space.require(b)?;
        let n = self.space.dim();
        let (pi, pj) = (self.space.parity(i), self.space.parity(j));
        let mut v = vec![F::zero(); n];
        for (c, label) in terms {
            let k = self.space.require(&label)?;
            if !c.is_zero() && self.space.parity(k) != pi ^ pj {
                return Err(Error::Parity(format!(
                    "[{a}, {b}] has parity {} but {label} has parity {}",
                    pi ^ pj,
                    self.space.parity(k)
                )));
            }
            v[k] += c;
        }
        let sign: F = -koszul_sign::<F>(pi, pj);
        let mirrored: Vec<F> = v.iter().map(|c| sign.clone() * c.clone()).collect();
        if i == j && !v.iter().zip(&mirrored).all(|(x, y)| x.approx_eq(y)) {
            return Err(Error::Antisymmetry(format!(
                "[{a}, {a}] must vanish for an even element"
            )));
        }
        if let Some((pa, _)) = self.set[i * n + j] {
            let prev = &self.rows[i * n + j];
            let consistent = prev.iter().zip(&v).all(|(x, y)| x.approx_eq(y));
            return Err(if pa == i || consistent {
                Error::Duplicate(format!("bracket [{a}, {b}] given twice"))
            } else {
                Error::Antisymmetry(format!(
                    "[{a}, {b}] = {} contradicts the bracket already given for [{b}, {a}]",
                    self.space.format_vector(&v)
                ))
            });
        }
        self.rows[i * n + j] = v;
        self.rows[j * n + i] = mirrored;
        self.set[i * n + j] = Some((i, j));
        self.set[j * n + i] = Some((i, j));
        Ok(())
    }

    pub fn build(self) -> Result<LieSuperalgebra<F>> {
        if let Some(e) = self.error {
            return Err(e);
        }
        LieSuperalgebra::from_dense(self.name, self.space, self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn one() -> Rational {
        Rational::from(1)
    }

    fn diamond() -> LieSuperalgebra<Rational> {
        LieSuperalgebra::builder("g4", SuperSpace::even(&["X", "P", "Q", "Z"]).unwrap())
            .bracket("X", "P", [(one(), "P")])
            .bracket("X", "Q", [(-one(), "Q")])
            .bracket("P", "Q", [(one(), "Z")])
            .build()
            .unwrap()
    }

    #[test]
    fn builder_fills_antisymmetric_partner() {
        let g = diamond();
        assert_eq!(
            g.bracket_basis(1, 0),
            vec![
                Rational::from(0),
                -one(),
                Rational::from(0),
                Rational::from(0)
            ]
        );
        assert_eq!(g.structure_constant(2, 1, 3), -one());
        assert_eq!(
            g.bracket_lines(),
            vec!["[X, P] = P", "[X, Q] = -Q", "[P, Q] = Z"]
        );
    }

    #[test]
    fn ad_acts_on_columns() {
        let g = diamond();
        let ad_x = g.ad(0);
        assert_eq!(ad_x[(1, 1)], one());
        assert_eq!(ad_x[(2, 2)], -one());
        assert_eq!(
            ad_x.apply(&[0, 1, 1, 0].map(Rational::from)),
            g.bracket_basis(0, 1)
                .iter()
                .zip(g.bracket_basis(0, 2))
                .map(|(a, b)| a.clone() + b)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn odd_brackets_are_symmetric() {
        let s = SuperSpace::new(&["Z"], &["F"]).unwrap();
        let g = LieSuperalgebra::builder("h", s)
            .bracket("F", "F", [(one(), "Z")])
            .build()
            .unwrap();
        assert_eq!(g.structure_constant(1, 1, 0), one());
    }

    #[test]
    fn validation_errors() {
        let s = SuperSpace::new(&["Z"], &["F"]).unwrap();
        let parity = LieSuperalgebra::builder("h", s.clone())
            .bracket("F", "F", [(one(), "F")])
            .build();
        assert!(matches!(parity, Err(Error::Parity(_))));
        let even_self = LieSuperalgebra::builder("h", s.clone())
            .bracket("Z", "Z", [(one(), "Z")])
            .build();
        assert!(matches!(even_self, Err(Error::Antisymmetry(_))));
        let both = LieSuperalgebra::builder("g", SuperSpace::even(&["X", "P"]).unwrap())
            .bracket("P", "X", [(one(), "P")])
            .bracket("X", "P", [(one(), "P")])
            .build();
        assert!(matches!(both, Err(Error::Antisymmetry(_))));
        let twice = LieSuperalgebra::builder("g", SuperSpace::even(&["X", "P"]).unwrap())
            .bracket("X", "P", [(one(), "P")])
            .bracket("X", "P", [(one(), "P")])
            .build();
        assert!(matches!(twice, Err(Error::Duplicate(_))));
        let unknown = LieSuperalgebra::builder("g", SuperSpace::even(&["X", "P"]).unwrap())
            .bracket("X", "W", [(one(), "P")])
            .build();
        assert!(matches!(unknown, Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn dense_tables_are_checked() {
        let s = SuperSpace::even(&["X", "Y"]).unwrap();
        let bad = LieSuperalgebra::from_fn("bad", s, |i, j| {
            let mut v = vec![Rational::from(0); 2];
            if (i, j) == (0, 1) || (i, j) == (1, 0) {
                v[1] = one();
            }
            v
        });
        assert!(matches!(bad, Err(Error::Antisymmetry(_))));
    }
}
