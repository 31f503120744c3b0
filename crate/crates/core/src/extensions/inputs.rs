//! The tensors fed to the constructions: 2-cocycles `θ`, symmetric pairings
//! `φ` and representations `ψ`.

use crate::algebra::LieSuperalgebra;
use crate::derivations;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::form::BilinearForm;
use crate::linalg::Matrix;

fn dense3<F: Scalar>(n: usize) -> Vec<F> {
    vec![F::zero(); n * n * n]
}

fn require_even<F: Scalar>(g: &LieSuperalgebra<F>) -> Result<()> {
    if g.space().is_purely_even() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{} must be a Lie algebra (no odd part)",
            g.name()
        )))
    }
}

/// `θ : g × g → g*`, stored as `θ[i][j][k] = θ(e_i, e_j)(e_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle2<F> {
    dim: usize,
    theta: Vec<F>,
}

impl<F: Scalar> Cocycle2<F> {
    pub fn zero(dim: usize) -> Self {
        Cocycle2 {
            dim,
            theta: dense3(dim),
        }
    }

    /// From entries `θ(e_i, e_j)(e_k) = v`; the value for `(j, i)` is filled
    /// in by antisymmetry.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, F)>,
    ) -> Result<Self> {
        let mut c = Self::zero(dim);
        for (i, j, k, v) in entries {
            if i.max(j).max(k) >= dim {
                return Err(Error::Shape(format!(
                    "cocycle index out of range for dimension {dim}"
                )));
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::NotACocycle("θ(X, X) must vanish".into()));
                }
                continue;
            }
            c.theta[(i * dim + j) * dim + k] = v.clone();
            c.theta[(j * dim + i) * dim + k] = -v;
        }
        Ok(c)
    }

    /// From labelled entries `θ(a, b) = v c*`, with labels of the base algebra.
    pub fn from_labeled<'a>(
        g: &LieSuperalgebra<F>,
        entries: impl IntoIterator<Item = (&'a str, &'a str, &'a str, F)>,
    ) -> Result<Self> {
        let s = g.space();
        let entries: Vec<_> = entries
            .into_iter()
            .map(|(a, b, c, v)| Ok((s.require(a)?, s.require(b)?, s.require(c)?, v)))
            .collect::<Result<_>>()?;
        Self::from_entries(g.dim(), entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> F {
        self.theta[(i * self.dim + j) * self.dim + k].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.theta.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &F) -> Self {
        Cocycle2 {
            dim: self.dim,
            theta: self.theta.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    /// `θ(e_i, e_j)` evaluated at a vector.
    fn eval(&self, i: usize, j: usize, w: &[F]) -> F {
        (0..self.dim)
            .filter(|&k| !w[k].is_zero())
            .map(|k| self.value(i, j, k) * w[k].clone())
            .sum()
    }

    /// `θ(x, y)` for coordinate vectors, as a covector.
    fn eval_pair(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let s = x[i].clone() * y[j].clone();
                for (k, o) in out.iter_mut().enumerate() {
                    *o += s.clone() * self.value(i, j, k);
                }
            }
        }
        out
    }

    /// First basis quadruple `(X, Y, Z, W)` where
    /// `θ(X,Y)([Z,W]) + θ([X,Y],Z)(W) + cyclic = 0` fails.
    pub fn cocycle_violation(&self, g: &LieSuperalgebra<F>) -> Option<[usize; 4]> {
        let n = self.dim;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let triples = [(x, y, z), (y, z, x), (z, x, y)];
                    for w in 0..n {
                        let ew = g.space().basis_vector::<F>(w);
                        let mut total = F::zero();
                        for &(a, b, c) in &triples {
                            total += self.eval(a, b, &g.bracket_basis(c, w));
                            let ab = g.bracket_basis(a, b);
                            let ec = g.space().basis_vector::<F>(c);
                            let t: F = self
                                .eval_pair(&ab, &ec)
                                .iter()
                                .zip(&ew)
                                .map(|(p, q)| p.clone() * q.clone())
                                .sum();
                            total += t;
                        }
                        if !total.is_zero() {
                            return Some([x, y, z, w]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn check_cocycle(&self, g: &LieSuperalgebra<F>) -> Result<()> {
        require_even(g)?;
        if g.dim() != self.dim {
            return Err(Error::Shape(format!(
                "cocycle of dimension {} on {}",
                self.dim,
                g.dim()
            )));
        }
        if let Some([x, y, z, w]) = self.cocycle_violation(g) {
            let s = g.space();
            return Err(Error::NotACocycle(format!(
                "cocycle identity fails on ({}, {}, {}) evaluated at {}",
                s.label(x),
                s.label(y),
                s.label(z),
                s.label(w)
            )));
        }
        Ok(())
    }

    /// `θ(X,Y)Z = θ(Y,Z)X` on all basis triples.
    pub fn is_cyclic(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.value(i, j, k).approx_eq(&self.value(j, k, i))))
        })
    }
}

/// `φ : g* × g* → g`, stored as `φ[i][j][k]`: `φ(e_i*, e_j*) = sum_k φ[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPairing<F> {
    dim: usize,
    phi: Vec<F>,
}

/// Which of the pairing conditions failed, with the offending indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingViolation {
    Symmetry {
        i: usize,
        j: usize,
    },
    /// `ad(X)φ(f,g) + φ(f, g∘ad X) + φ(g, f∘ad X) = 0` fails at `X = e_x`, `f = e_i*`, `g = e_j*`.
    Condition1 {
        x: usize,
        i: usize,
        j: usize,
    },
    /// `f∘ad(φ(g,h)) + cyclic = 0` fails at `f, g, h = e_i*, e_j*, e_l*`.
    Condition2 {
        i: usize,
        j: usize,
        l: usize,
    },
}

impl<F: Scalar> SymPairing<F> {
    pub fn zero(dim: usize) -> Self {
        SymPairing {
            dim,
            phi: dense3(dim),
        }
    }

    /// From entries `φ(e_i*, e_j*) ∋ v e_k`; the `(j, i)` value is mirrored.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, F)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (i, j, k, v) in entries {
            if i.max(j).max(k) >= dim {
                return Err(Error::Shape(format!(
                    "pairing index out of range for dimension {dim}"
                )));
            }
            p.phi[(i * dim + j) * dim + k] = v.clone();
            p.phi[(j * dim + i) * dim + k] = v;
        }
        Ok(p)
    }

    /// From labelled entries `φ(a*, b*) ∋ v c` with base-algebra labels.
    pub fn from_labeled<'a>(
        g: &LieSuperalgebra<F>,
        entries: impl IntoIterator<Item = (&'a str, &'a str, &'a str, F)>,
    ) -> Result<Self> {
        let s = g.space();
        let entries: Vec<_> = entries
            .into_iter()
            .map(|(a, b, c, v)| Ok((s.require(a)?, s.require(b)?, s.require(c)?, v)))
            .collect::<Result<_>>()?;
        Self::from_entries(g.dim(), entries)
    }

    /// From a flat coefficient vector in `i, j, k` order.
    pub fn from_flat(dim: usize, phi: Vec<F>) -> Self {
        assert_eq!(
            phi.len(),
            dim * dim * dim,
            "flat pairing has the wrong length"
        );
        SymPairing { dim, phi }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> F {
        self.phi[(i * self.dim + j) * self.dim + k].clone()
    }

    pub fn flat(&self) -> &[F] {
        &self.phi
    }

    pub fn is_zero(&self) -> bool {
        self.phi.iter().all(Scalar::is_zero)
    }

    /// The linear conditions as rows over the `n^3` unknowns `φ[i][j][k]`:
    /// symmetry, condition (1) and condition (2), plus cyclicity if asked.
    fn constraint_rows(g: &LieSuperalgebra<F>, cyclic: bool) -> Vec<Vec<F>> {
        let n = g.dim();
        let var = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        let c = |a: usize, b: usize, k: usize| g.structure_constant(a, b, k);
        let mut rows = Vec::new();
        let mut push = |row: Vec<F>| {
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i < j {
                        let mut r = vec![F::zero(); n * n * n];
                        r[var(i, j, k)] += F::one();
                        r[var(j, i, k)] -= F::one();
                        push(r);
                    }
                    if cyclic {
                        let mut r = vec![F::zero(); n * n * n];
                        r[var(i, j, k)] += F::one();
                        r[var(j, k, i)] -= F::one();
                        push(r);
                    }
                }
            }
        }
        // (1): sum_k φ[i][j][k] c[x][k][m] + c[x][k][j] φ[i][k][m] + c[x][k][i] φ[j][k][m] = 0.
        for x in 0..n {
            for i in 0..n {
                for j in i..n {
                    for m in 0..n {
                        let mut r = vec![F::zero(); n * n * n];
                        for k in 0..n {
                            r[var(i, j, k)] += c(x, k, m);
                            r[var(i, k, m)] += c(x, k, j);
                            r[var(j, k, m)] += c(x, k, i);
                        }
                        push(r);
                    }
                }
            }
        }
        // (2): at Y = e_b, sum_k φ[j][l][k] c[k][b][i] + φ[l][i][k] c[k][b][j] + φ[i][j][k] c[k][b][l] = 0.
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for b in 0..n {
                        let mut r = vec![F::zero(); n * n * n];
                        for k in 0..n {
                            r[var(j, l, k)] += c(k, b, i);
                            r[var(l, i, k)] += c(k, b, j);
                            r[var(i, j, k)] += c(k, b, l);
                        }
                        push(r);
                    }
                }
            }
        }
        rows
    }

    /// Basis of all pairings satisfying symmetry and conditions (1) and (2)
    /// (both are linear in `φ`), optionally also the cyclic condition.
    pub fn solve(g: &LieSuperalgebra<F>, cyclic: bool) -> Result<Vec<SymPairing<F>>> {
        require_even(g)?;
        let n = g.dim();
        let rows = Self::constraint_rows(g, cyclic);
        let basis = if rows.is_empty() {
            (0..n * n * n)
                .map(|u| {
                    let mut v = dense3(n);
                    v[u] = F::one();
                    v
                })
                .collect()
        } else {
            Matrix::from_rows(rows)?.nullspace()
        };
        Ok(basis
            .into_iter()
            .map(|phi| SymPairing { dim: n, phi })
            .collect())
    }

    pub fn violation(&self, g: &LieSuperalgebra<F>) -> Option<PairingViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.value(i, j, k).approx_eq(&self.value(j, i, k)) {
                        return Some(PairingViolation::Symmetry { i, j });
                    }
                }
            }
        }
        let c = |a: usize, b: usize, k: usize| g.structure_constant(a, b, k);
        for x in 0..n {
            for i in 0..n {
                for j in i..n {
                    for m in 0..n {
                        let s: F = (0..n)
                            .map(|k| {
                                self.value(i, j, k) * c(x, k, m)
                                    + c(x, k, j) * self.value(i, k, m)
                                    + c(x, k, i) * self.value(j, k, m)
                            })
                            .sum();
                        if !s.is_zero() {
                            return Some(PairingViolation::Condition1 { x, i, j });
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for b in 0..n {
                        let s: F = (0..n)
                            .map(|k| {
                                self.value(j, l, k) * c(k, b, i)
                                    + self.value(l, i, k) * c(k, b, j)
                                    + self.value(i, j, k) * c(k, b, l)
                            })
                            .sum();
                        if !s.is_zero() {
                            return Some(PairingViolation::Condition2 { i, j, l });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn check(&self, g: &LieSuperalgebra<F>) -> Result<()> {
        require_even(g)?;
        if g.dim() != self.dim {
            return Err(Error::Shape(format!(
                "pairing of dimension {} on {}",
                self.dim,
                g.dim()
            )));
        }
        let s = g.space();
        match self.violation(g) {
            None => Ok(()),
            Some(PairingViolation::Symmetry { i, j }) => Err(Error::InvalidPairing(format!(
                "φ({}*, {}*) is not symmetric",
                s.label(i),
                s.label(j)
            ))),
            Some(PairingViolation::Condition1 { x, i, j }) => Err(Error::InvalidPairing(format!(
                "condition ad(X)φ(f,g) + φ(f,g∘ad X) + φ(g,f∘ad X) = 0 fails at X = {}, f = {}*, g = {}*",
                s.label(x),
                s.label(i),
                s.label(j)
            ))),
            Some(PairingViolation::Condition2 { i, j, l }) => Err(Error::InvalidPairing(format!(
                "condition f∘ad(φ(g,h)) + cyclic = 0 fails at f, g, h = {}*, {}*, {}*",
                s.label(i),
                s.label(j),
                s.label(l)
            ))),
        }
    }

    /// `h(φ(f, g)) = f(φ(g, h))` on all basis triples.
    pub fn is_cyclic(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.value(i, j, k).approx_eq(&self.value(j, k, i))))
        })
    }
}

/// `ψ : g → End(h)`, one matrix per basis vector of `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F: Scalar> {
    target_dim: usize,
    psi: Vec<Matrix<F>>,
}

impl<F: Scalar> Representation<F> {
    pub fn new(target_dim: usize, psi: Vec<Matrix<F>>) -> Result<Self> {
        if psi
            .iter()
            .any(|m| m.rows() != target_dim || m.cols() != target_dim)
        {
            return Err(Error::Shape(format!(
                "representation matrices must be {target_dim}x{target_dim}"
            )));
        }
        Ok(Representation { target_dim, psi })
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        Representation {
            target_dim,
            psi: vec![Matrix::zeros(target_dim, target_dim); source_dim],
        }
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.psi
    }

    pub fn source_dim(&self) -> usize {
        self.psi.len()
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// `ψ(x)` for a coordinate vector.
    pub fn at(&self, x: &[F]) -> Matrix<F> {
        x.iter().zip(&self.psi).filter(|(c, _)| !c.is_zero()).fold(
            Matrix::zeros(self.target_dim, self.target_dim),
            |acc, (c, m)| acc.add(&m.scale(c)),
        )
    }

    /// Checks that `ψ` is a homomorphism from `g` into the skew-symmetric
    /// derivations of `(h, B_h)`.
    pub fn check(
        &self,
        g: &LieSuperalgebra<F>,
        h: &LieSuperalgebra<F>,
        h_form: &BilinearForm<F>,
    ) -> Result<()> {
        require_even(g)?;
        if self.source_dim() != g.dim() || self.target_dim != h.dim() || h_form.dim() != h.dim() {
            return Err(Error::Shape(format!(
                "ψ maps a {}-dimensional algebra to {}x{} matrices; expected {} and {}",
                self.source_dim(),
                self.target_dim,
                self.target_dim,
                g.dim(),
                h.dim()
            )));
        }
        let s = g.space();
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = self.at(&g.bracket_basis(i, j));
                let rhs = self.psi[i].commutator(&self.psi[j]);
                if !lhs.approx_eq(&rhs) {
                    return Err(Error::NotAHomomorphism(format!(
                        "ψ([{a}, {b}]) != [ψ({a}), ψ({b})]",
                        a = s.label(i),
                        b = s.label(j)
                    )));
                }
            }
        }
        for (i, m) in self.psi.iter().enumerate() {
            derivations::check_skew_derivation(h, h_form, m).map_err(|e| match e {
                Error::NotSkew(msg) => Error::NotSkew(format!("ψ({}): {msg}", s.label(i))),
                Error::NotADerivation(msg) => {
                    Error::NotADerivation(format!("ψ({}): {msg}", s.label(i)))
                }
                other => other,
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::space::SuperSpace;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn heisenberg() -> LieSuperalgebra<Rational> {
        LieSuperalgebra::builder("h3", SuperSpace::even(&["X", "Y", "Z"]).unwrap())
            .bracket("X", "Y", [(q(1), "Z")])
            .build()
            .unwrap()
    }

    #[test]
    fn heisenberg_cyclic_cocycle() {
        let g = heisenberg();
        let theta = Cocycle2::from_labeled(
            &g,
            [
                ("X", "Y", "Z", q(1)),
                ("Y", "Z", "X", q(1)),
                ("Z", "X", "Y", q(1)),
            ],
        )
        .unwrap();
        assert!(theta.check_cocycle(&g).is_ok());
        assert!(theta.is_cyclic());
        let lopsided = Cocycle2::from_labeled(&g, [("X", "Y", "Z", q(1))]).unwrap();
        assert!(!lopsided.is_cyclic());
    }

    #[test]
    fn pairing_solver_on_small_algebras() {
        let ab = LieSuperalgebra::<Rational>::abelian("a2", SuperSpace::even(&["X", "Y"]).unwrap());
        assert_eq!(SymPairing::solve(&ab, true).unwrap().len(), 4);
        assert_eq!(SymPairing::solve(&ab, false).unwrap().len(), 6);
        let nonab = LieSuperalgebra::builder("r2", SuperSpace::even(&["X", "Y"]).unwrap())
            .bracket("X", "Y", [(q(1), "Y")])
            .build()
            .unwrap();
        assert!(SymPairing::solve(&nonab, true).unwrap().is_empty());
    }

    #[test]
    fn representation_checks() {
        let g = LieSuperalgebra::<Rational>::abelian("c", SuperSpace::even(&["X"]).unwrap());
        let h_space = SuperSpace::new(&[], &["F1", "F2"]).unwrap();
        let h = LieSuperalgebra::abelian("h", h_space.clone());
        let b = BilinearForm::from_labeled(
            &h_space,
            crate::form::FormParity::Even,
            [("F1", "F2", q(1))],
        )
        .unwrap();
        let nilpotent =
            Representation::new(2, vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])]).unwrap();
        assert!(nilpotent.check(&g, &h, &b).is_ok());
        let not_sp = Representation::new(2, vec![Matrix::from_i64(&[&[1, 0], &[0, 1]])]).unwrap();
        assert!(matches!(not_sp.check(&g, &h, &b), Err(Error::NotSkew(_))));
    }
}
