//! Derivation spaces by exact linear algebra.
//!
//! Only even (parity-preserving) derivations are computed. Matrices act on
//! columns: column `j` of `D` is the coordinate vector of `D(e_j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::form::BilinearForm;
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DerivationKind {
    /// All even derivations.
    All,
    /// Even derivations with `B(Dx, y) + B(x, Dy) = 0`.
    Skew,
    /// `ad` of even elements.
    Inner,
}

impl fmt::Display for DerivationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivationKind::All => "all",
            DerivationKind::Skew => "skew",
            DerivationKind::Inner => "inner",
        })
    }
}

impl FromStr for DerivationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(DerivationKind::All),
            "skew" => Ok(DerivationKind::Skew),
            "inner" => Ok(DerivationKind::Inner),
            other => Err(Error::Syntax(format!("unknown derivation kind `{other}`"))),
        }
    }
}

/// A linearly independent family of derivation matrices.
#[derive(Clone, Debug)]
pub struct DerivationSpace<F: Scalar> {
    kind: DerivationKind,
    dim_algebra: usize,
    basis: Vec<Matrix<F>>,
}

impl<F: Scalar> DerivationSpace<F> {
    /// Spans the given matrices, dropping dependent ones.
    pub fn span(
        kind: DerivationKind,
        dim_algebra: usize,
        matrices: impl IntoIterator<Item = Matrix<F>>,
    ) -> Self {
        let flat: Vec<Vec<F>> = matrices.into_iter().map(|m| m.entries().to_vec()).collect();
        let basis = if flat.is_empty() {
            Vec::new()
        } else {
            let (r, pivots) = Matrix::from_rows(flat).expect("equal sizes").rref();
            (0..pivots.len())
                .map(|i| {
                    Matrix::from_rows(r.row(i).chunks(dim_algebra).map(<[F]>::to_vec).collect())
                        .expect("square")
                })
                .collect()
        };
        DerivationSpace {
            kind,
            dim_algebra,
            basis,
        }
    }

    pub fn kind(&self) -> DerivationKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<F>] {
        &self.basis
    }

    pub fn contains(&self, d: &Matrix<F>) -> bool {
        if d.is_zero() {
            return true;
        }
        let with = Self::span(
            self.kind,
            self.dim_algebra,
            self.basis.iter().cloned().chain([d.clone()]),
        );
        with.dim() == self.dim()
    }

    /// Whether `self ⊆ other` as matrix spaces.
    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|d| other.contains(d))
    }

    /// Whether the commutator of any two basis elements stays in the span.
    pub fn is_closed_under_commutator(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| {
            self.basis[i + 1..]
                .iter()
                .all(|b| self.contains(&a.commutator(b)))
        })
    }

    /// `sum_i c_i D_i`.
    pub fn combination(&self, coeffs: &[F]) -> Matrix<F> {
        assert_eq!(
            coeffs.len(),
            self.dim(),
            "one coefficient per basis element"
        );
        let n = self.dim_algebra;
        self.basis
            .iter()
            .zip(coeffs)
            .fold(Matrix::zeros(n, n), |acc, (d, c)| acc.add(&d.scale(c)))
    }
}

/// Solves for the requested derivation space of `a`.
pub fn derivation_space<F: Scalar>(
    a: &LieSuperalgebra<F>,
    form: Option<&BilinearForm<F>>,
    kind: DerivationKind,
) -> Result<DerivationSpace<F>> {
    let n = a.dim();
    if kind == DerivationKind::Inner {
        return Ok(DerivationSpace::span(
            kind,
            n,
            a.space().even_range().map(|i| a.ad(i)),
        ));
    }
    let skew_form = match kind {
        DerivationKind::Skew => Some(form.ok_or(Error::MissingForm("skew-symmetric derivations"))?),
        _ => None,
    };
    if let Some(b) = skew_form {
        if b.dim() != n {
            return Err(Error::Shape(format!(
                "form of size {} on dimension {n}",
                b.dim()
            )));
        }
    }
    // Unknowns: D[k][j] with parity(k) = parity(j).
    let unknowns: Vec<(usize, usize)> = (0..n)
        .flat_map(|k| (0..n).map(move |j| (k, j)))
        .filter(|&(k, j)| a.parity(k) == a.parity(j))
        .collect();
    let mut index = vec![None; n * n];
    for (u, &(k, j)) in unknowns.iter().enumerate() {
        index[k * n + j] = Some(u);
    }
    let var = |k: usize, j: usize| index[k * n + j];
    let mut rows: Vec<Vec<F>> = Vec::new();
    // Leibniz: D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, component m.
    for i in 0..n {
        for j in i..n {
            let mut eqs = vec![vec![F::zero(); unknowns.len()]; n];
            for (k, c) in a.bracket_terms(i, j) {
                for (m, eq) in eqs.iter_mut().enumerate() {
                    if let Some(u) = var(m, *k) {
                        eq[u] += c.clone();
                    }
                }
            }
            for k in 0..n {
                if let Some(u) = var(k, i) {
                    for (m, c) in a.bracket_terms(k, j) {
                        eqs[*m][u] -= c.clone();
                    }
                }
                if let Some(u) = var(k, j) {
                    for (m, c) in a.bracket_terms(i, k) {
                        eqs[*m][u] -= c.clone();
                    }
                }
            }
            rows.extend(eqs.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
        }
    }
    if let Some(b) = skew_form {
        // B(D e_i, e_j) + B(e_i, D e_j) = sum_k D[k][i] G[k][j] + D[k][j] G[i][k].
        let g = b.gram();
        for i in 0..n {
            for j in i..n {
                let mut eq = vec![F::zero(); unknowns.len()];
                for k in 0..n {
                    if let Some(u) = var(k, i) {
                        eq[u] += g[(k, j)].clone();
                    }
                    if let Some(u) = var(k, j) {
                        eq[u] += g[(i, k)].clone();
                    }
                }
                if eq.iter().any(|c| !c.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let solutions = if rows.is_empty() {
        (0..unknowns.len())
            .map(|u| {
                let mut v = vec![F::zero(); unknowns.len()];
                v[u] = F::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows).expect("equal lengths").nullspace()
    };
    let matrices = solutions.into_iter().map(|sol| {
        let mut d = Matrix::zeros(n, n);
        for (u, &(k, j)) in unknowns.iter().enumerate() {
            d[(k, j)] = sol[u].clone();
        }
        d
    });
    Ok(DerivationSpace::span(kind, n, matrices))
}

/// First basis pair `(i, j)` where the Leibniz rule fails, if any.
pub fn leibniz_violation<F: Scalar>(
    a: &LieSuperalgebra<F>,
    d: &Matrix<F>,
) -> Option<(usize, usize)> {
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let lhs = d.apply(&a.bracket_basis(i, j));
            let di = d.column(i);
            let dj = d.column(j);
            let ei = a.space().basis_vector::<F>(i);
            let ej = a.space().basis_vector::<F>(j);
            let r1 = a.bracket(&di, &ej);
            let r2 = a.bracket(&ei, &dj);
            if lhs
                .iter()
                .zip(r1.iter().zip(&r2))
                .any(|(l, (x, y))| !(l.clone() - x.clone() - y.clone()).is_zero())
            {
                return Some((i, j));
            }
        }
    }
    None
}

/// Whether `d` is an even derivation of `a`.
pub fn is_derivation<F: Scalar>(a: &LieSuperalgebra<F>, d: &Matrix<F>) -> bool {
    d.rows() == a.dim()
        && d.cols() == a.dim()
        && is_even_map(a, d)
        && leibniz_violation(a, d).is_none()
}

fn is_even_map<F: Scalar>(a: &LieSuperalgebra<F>, d: &Matrix<F>) -> bool {
    let n = a.dim();
    (0..n).all(|k| (0..n).all(|j| a.parity(k) == a.parity(j) || d[(k, j)].is_zero()))
}

/// First basis pair where `B(D e_i, e_j) + B(e_i, D e_j) != 0`, if any.
pub fn skewness_violation<F: Scalar>(
    form: &BilinearForm<F>,
    d: &Matrix<F>,
) -> Option<(usize, usize)> {
    let n = form.dim();
    let g = form.gram();
    for i in 0..n {
        for j in i..n {
            let s: F = (0..n)
                .map(|k| {
                    d[(k, i)].clone() * g[(k, j)].clone() + d[(k, j)].clone() * g[(i, k)].clone()
                })
                .sum();
            if !s.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Checks that `d` is an even skew-symmetric derivation, describing the
/// first violated instance.
pub fn check_skew_derivation<F: Scalar>(
    a: &LieSuperalgebra<F>,
    form: &BilinearForm<F>,
    d: &Matrix<F>,
) -> Result<()> {
    let n = a.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::Shape(format!(
            "{}x{} map on dimension {n}",
            d.rows(),
            d.cols()
        )));
    }
    if !is_even_map(a, d) {
        return Err(Error::NotADerivation(
            "the map does not preserve parity".into(),
        ));
    }
    let s = a.space();
    if let Some((i, j)) = leibniz_violation(a, d) {
        return Err(Error::NotADerivation(format!(
            "D[{a}, {b}] != [D {a}, {b}] + [{a}, D {b}]",
            a = s.label(i),
            b = s.label(j)
        )));
    }
    if let Some((i, j)) = skewness_violation(form, d) {
        return Err(Error::NotSkew(format!(
            "B(D {a}, {b}) != -B({a}, D {b})",
            a = s.label(i),
            b = s.label(j)
        )));
    }
    Ok(())
}

/// Coefficients `c` with `D = ad(sum c_i e_i)`, or `None` if `D` is outer.
pub fn is_inner<F: Scalar>(a: &LieSuperalgebra<F>, d: &Matrix<F>) -> Result<Option<Vec<F>>> {
    if !is_derivation(a, d) {
        return Err(Error::NotADerivation(
            "inner-ness is only defined for derivations".into(),
        ));
    }
    let n = a.dim();
    let evens: Vec<usize> = a.space().even_range().collect();
    let columns: Vec<Vec<F>> = evens.iter().map(|&i| a.ad(i).entries().to_vec()).collect();
    let m = Matrix::from_columns(n * n, &columns)?;
    Ok(m.solve(d.entries())?.map(|c| {
        let mut full = vec![F::zero(); n];
        for (&i, ci) in evens.iter().zip(c) {
            full[i] = ci;
        }
        full
    }))
}

/// The skew derivations of `g_{2n+2}` written out from their closed form:
/// `D(Y0) = sum a_i X_i + sum b_i Y_i`, `D(X_i) = sum_j a_ij X_j - b_i X0`,
/// `D(Y_i) = -sum_j a_ji Y_j - a_i X0`, `D(X0) = 0`, one basis matrix per
/// parameter (`n^2 + 2n` in total).
///
/// The basis order is `X0..Xn, Y0..Yn`, matching [`crate::catalog`].
pub fn skew_derivation_family_g2n2<F: Scalar>(n: usize) -> Result<DerivationSpace<F>> {
    if n == 0 {
        return Err(Error::Inadmissible("g2n2 needs n >= 1".into()));
    }
    let dim = 2 * n + 2;
    let x = |i: usize| i;
    let y = |i: usize| n + 1 + i;
    let mut mats = Vec::new();
    let mut unit = |entries: &[(usize, usize, i64)]| {
        let mut m = Matrix::zeros(dim, dim);
        for &(row, col, v) in entries {
            m[(row, col)] = F::from_i64(v);
        }
        mats.push(m);
    };
    for p in 1..=n {
        for q in 1..=n {
            // a_pq: D(X_p) has X_q-coefficient a_pq, D(Y_q) has Y_p-coefficient -a_pq.
            unit(&[(x(q), x(p), 1), (y(p), y(q), -1)]);
        }
    }
    for i in 1..=n {
        unit(&[(x(i), y(0), 1), (x(0), y(i), -1)]);
        unit(&[(y(i), y(0), 1), (x(0), x(i), -1)]);
    }
    Ok(DerivationSpace::span(DerivationKind::Skew, dim, mats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::form::FormParity;
    use crate::space::SuperSpace;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn g4() -> (LieSuperalgebra<Rational>, BilinearForm<Rational>) {
        let s = SuperSpace::even(&["X", "P", "Q", "Z"]).unwrap();
        let a = LieSuperalgebra::builder("g4", s.clone())
            .bracket("X", "P", [(q(1), "P")])
            .bracket("X", "Q", [(q(-1), "Q")])
            .bracket("P", "Q", [(q(1), "Z")])
            .build()
            .unwrap();
        let b =
            BilinearForm::from_labeled(&s, FormParity::Even, [("X", "Z", q(1)), ("P", "Q", q(1))])
                .unwrap();
        (a, b)
    }

    /// The three-parameter matrix of a skew derivation of the diamond algebra
    /// in basis X, P, Q, Z, entered row by row.
    fn diamond_pattern(x: i64, y: i64, z: i64) -> Matrix<Rational> {
        Matrix::from_i64(&[
            &[0, 0, 0, 0],
            &[y, x, 0, 0],
            &[z, 0, -x, 0],
            &[0, -z, -y, 0],
        ])
    }

    #[test]
    fn diamond_skew_derivations() {
        let (a, b) = g4();
        let skew = derivation_space(&a, Some(&b), DerivationKind::Skew).unwrap();
        assert_eq!(skew.dim(), 3);
        let pattern = DerivationSpace::span(
            DerivationKind::Skew,
            4,
            [
                diamond_pattern(1, 0, 0),
                diamond_pattern(0, 1, 0),
                diamond_pattern(0, 0, 1),
            ],
        );
        assert!(skew.is_subspace_of(&pattern) && pattern.is_subspace_of(&skew));
        assert!(skew.is_closed_under_commutator());
        let inner = derivation_space(&a, None, DerivationKind::Inner).unwrap();
        let all = derivation_space(&a, None, DerivationKind::All).unwrap();
        assert!(inner.is_subspace_of(&all));
        assert!(inner.is_subspace_of(&skew));
    }

    #[test]
    fn diamond_pattern_is_inner() {
        let (a, _) = g4();
        // D(1,0,0) sends P to P and Q to -Q, which is ad(X).
        let c = is_inner(&a, &diamond_pattern(1, 0, 0)).unwrap().unwrap();
        assert_eq!(c, vec![q(1), q(0), q(0), q(0)]);
        assert_eq!(
            is_inner(&a, &Matrix::zeros(4, 4)).unwrap(),
            Some(vec![q(0); 4])
        );
        assert!(matches!(
            is_inner(&a, &Matrix::identity(4)),
            Err(Error::NotADerivation(_))
        ));
    }

    #[test]
    fn skew_requires_a_form() {
        let (a, _) = g4();
        assert!(matches!(
            derivation_space(&a, None, DerivationKind::Skew),
            Err(Error::MissingForm(_))
        ));
    }

    #[test]
    fn abelian_derivations() {
        let s = SuperSpace::even(&["A", "B", "C"]).unwrap();
        let a = LieSuperalgebra::<Rational>::abelian("a3", s.clone());
        assert_eq!(
            derivation_space(&a, None, DerivationKind::All)
                .unwrap()
                .dim(),
            9
        );
        let b = BilinearForm::from_labeled(
            &s,
            FormParity::Even,
            [("A", "A", q(1)), ("B", "B", q(1)), ("C", "C", q(1))],
        )
        .unwrap();
        // so(3) has dimension 3.
        assert_eq!(
            derivation_space(&a, Some(&b), DerivationKind::Skew)
                .unwrap()
                .dim(),
            3
        );
    }

    #[test]
    fn super_abelian_skew_derivations_are_o_plus_sp() {
        let s = SuperSpace::new(&["X0", "Y0"], &["X1", "Y1"]).unwrap();
        let a = LieSuperalgebra::<Rational>::abelian("a", s.clone());
        let b = BilinearForm::from_labeled(
            &s,
            FormParity::Even,
            [("X0", "Y0", q(1)), ("X1", "Y1", q(1))],
        )
        .unwrap();
        // o(2) + sp(2): 1 + 3.
        assert_eq!(
            derivation_space(&a, Some(&b), DerivationKind::Skew)
                .unwrap()
                .dim(),
            4
        );
        // gl(1|1) even part: gl(2) + gl(2).
        assert_eq!(
            derivation_space(&a, None, DerivationKind::All)
                .unwrap()
                .dim(),
            8
        );
    }
}
