//! Double extensions, T*-extensions, super double extensions, odd
//! T*s-extensions and orthogonal direct sums.
//!
//! All extensions of a Lie algebra `g` share one layout: the even part is
//! `g`, then the even part of `h`, then `g*` (labelled `X*` for each `X` of
//! `g`); the odd part of `h` comes last. The T*s-extension puts `g*` in the
//! odd part instead.
//!
//! The coadjoint action is `ad*(X) f = -f ∘ ad(X)`.

mod inputs;

pub use inputs::{Cocycle2, PairingViolation, Representation, SymPairing};

use crate::algebra::LieSuperalgebra;
use crate::derivations;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::form::{BilinearForm, FormParity};
use crate::linalg::Matrix;
use crate::quadratic::QuadraticAlgebra;
use crate::space::SuperSpace;

/// Output of the constructions whose form is invariant only for cyclic
/// input: a quadratic algebra, or a Lie superalgebra with the reason the
/// form was dropped.
#[derive(Clone, Debug)]
pub enum Constructed<F: Scalar> {
    Quadratic(QuadraticAlgebra<F>),
    Plain {
        algebra: LieSuperalgebra<F>,
        warning: String,
    },
}

impl<F: Scalar> Constructed<F> {
    pub fn algebra(&self) -> &LieSuperalgebra<F> {
        match self {
            Constructed::Quadratic(q) => q.algebra(),
            Constructed::Plain { algebra, .. } => algebra,
        }
    }

    pub fn quadratic(&self) -> Option<&QuadraticAlgebra<F>> {
        match self {
            Constructed::Quadratic(q) => Some(q),
            Constructed::Plain { .. } => None,
        }
    }

    pub fn warning(&self) -> Option<&str> {
        match self {
            Constructed::Quadratic(_) => None,
            Constructed::Plain { warning, .. } => Some(warning),
        }
    }

    /// The quadratic algebra, or [`Error::Verification`] carrying the warning.
    pub fn into_quadratic(self) -> Result<QuadraticAlgebra<F>> {
        match self {
            Constructed::Quadratic(q) => Ok(q),
            Constructed::Plain { warning, .. } => Err(Error::Verification(warning)),
        }
    }
}

fn require_lie<F: Scalar>(g: &LieSuperalgebra<F>) -> Result<()> {
    if g.space().is_purely_even() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{} must be a Lie algebra (no odd part)",
            g.name()
        )))
    }
}

fn dual_labels<F: Scalar>(g: &LieSuperalgebra<F>) -> Vec<String> {
    g.space().labels().iter().map(|l| format!("{l}*")).collect()
}

struct Attached<'a, F: Scalar> {
    h: &'a LieSuperalgebra<F>,
    form: &'a BilinearForm<F>,
    psi: &'a Representation<F>,
}

/// Where each block of the glued algebra lives.
struct Layout {
    h_pos: Vec<usize>,
    dual: usize,
    dim: usize,
}

fn glue<F: Scalar>(
    name: String,
    g: &LieSuperalgebra<F>,
    theta: Option<&Cocycle2<F>>,
    attached: Option<Attached<'_, F>>,
    phi: Option<&SymPairing<F>>,
) -> Result<(LieSuperalgebra<F>, BilinearForm<F>)> {
    let n = g.dim();
    let (h_even, h_odd) = attached
        .as_ref()
        .map_or((0, 0), |a| (a.h.space().dim_even(), a.h.space().dim_odd()));
    let dual_odd = phi.is_some();
    let mut labels: Vec<String> = g.space().labels().to_vec();
    let mut h_pos = Vec::new();
    if let Some(a) = &attached {
        for i in a.h.space().even_range() {
            h_pos.push(labels.len());
            labels.push(a.h.space().label(i).to_owned());
        }
    }
    let dual = labels.len();
    labels.extend(dual_labels(g));
    if let Some(a) = &attached {
        for i in a.h.space().odd_range() {
            h_pos.push(labels.len());
            labels.push(a.h.space().label(i).to_owned());
        }
    }
    let dim = labels.len();
    let lay = Layout { h_pos, dual, dim };
    let (dim_even, dim_odd) = if dual_odd {
        (n, n)
    } else {
        (2 * n + h_even, h_odd)
    };
    let space = SuperSpace::from_labels(dim_even, dim_odd, labels)?;

    let mut rows = vec![vec![F::zero(); dim]; dim * dim];
    let mut add = |i: usize, j: usize, k: usize, v: F| {
        if !v.is_zero() {
            rows[i * dim + j][k] += v;
        }
    };
    let c = |a: usize, b: usize, k: usize| g.structure_constant(a, b, k);
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                add(a, b, k, c(a, b, k));
                if let Some(t) = theta {
                    add(a, b, lay.dual + k, t.value(a, b, k));
                }
                // [x_a, x_b*] = -x_b* ∘ ad(x_a) and its mirror.
                let co = -c(a, k, b);
                add(a, lay.dual + b, lay.dual + k, co.clone());
                add(lay.dual + b, a, lay.dual + k, -co);
                if let Some(p) = phi {
                    add(lay.dual + a, lay.dual + b, k, p.value(a, b, k));
                }
            }
        }
    }
    if let Some(at) = &attached {
        let m = at.h.dim();
        for a in 0..n {
            let psi = &at.psi.matrices()[a];
            for u in 0..m {
                for v in 0..m {
                    let x = psi[(v, u)].clone();
                    add(a, lay.h_pos[u], lay.h_pos[v], x.clone());
                    add(lay.h_pos[u], a, lay.h_pos[v], -x);
                }
            }
        }
        for u in 0..m {
            for v in 0..m {
                for (w, x) in at.h.bracket_terms(u, v) {
                    add(lay.h_pos[u], lay.h_pos[v], lay.h_pos[*w], x.clone());
                }
                for k in 0..n {
                    let col = at.psi.matrices()[k].column(u);
                    let phi_uv: F = (0..m).map(|w| col[w].clone() * at.form.entry(w, v)).sum();
                    add(lay.h_pos[u], lay.h_pos[v], lay.dual + k, phi_uv);
                }
            }
        }
    }
    let algebra = LieSuperalgebra::from_dense(name, space, rows)?;

    let parity = if dual_odd {
        FormParity::Odd
    } else {
        FormParity::Even
    };
    let mut gram = Matrix::zeros(lay.dim, lay.dim);
    for a in 0..n {
        gram[(a, lay.dual + a)] = F::one();
        gram[(lay.dual + a, a)] = F::one();
    }
    if let Some(at) = &attached {
        for u in 0..at.h.dim() {
            for v in 0..at.h.dim() {
                gram[(lay.h_pos[u], lay.h_pos[v])] = at.form.entry(u, v);
            }
        }
    }
    Ok((algebra, BilinearForm::new(gram, parity)?))
}

fn downgrade_or_verify<F: Scalar>(
    algebra: LieSuperalgebra<F>,
    form: BilinearForm<F>,
    cyclic: bool,
    what: &str,
) -> Result<Constructed<F>> {
    if cyclic {
        return Ok(Constructed::Quadratic(QuadraticAlgebra::new_verified(
            algebra, form,
        )?));
    }
    let jacobi = crate::quadratic::verify_jacobi(&algebra);
    if let Some(first) = jacobi.failures().next() {
        return Err(Error::Verification(format!("{}: {first}", algebra.name())));
    }
    Ok(Constructed::Plain {
        algebra,
        warning: format!("{what} is not cyclic, so the canonical form is not invariant; returning the Lie superalgebra only"),
    })
}

/// One-dimensional double extension of `q` by an even skew-symmetric
/// derivation `C`, with new basis vectors labelled `e` and `f`.
///
/// The basis of the result is `q_even, e, f, q_odd`; the bracket is
/// `[X, Y] + B(CX, Y) f` on `q`, `[e, X] = CX`, and `f` is central, with
/// `B(e, f) = 1`.
pub fn double_extension_1d<F: Scalar>(
    q: &QuadraticAlgebra<F>,
    c: &Matrix<F>,
) -> Result<QuadraticAlgebra<F>> {
    double_extension_1d_labeled(q, c, "e", "f")
}

/// [`double_extension_1d`] with chosen labels for the two new vectors.
pub fn double_extension_1d_labeled<F: Scalar>(
    q: &QuadraticAlgebra<F>,
    c: &Matrix<F>,
    e_label: &str,
    f_label: &str,
) -> Result<QuadraticAlgebra<F>> {
    if q.form_parity() != FormParity::Even {
        return Err(Error::FormParity(
            "double extensions need an even form".into(),
        ));
    }
    let (g, b) = (q.algebra(), q.form());
    derivations::check_skew_derivation(g, b, c)?;
    let s = g.space();
    for l in [e_label, f_label] {
        if s.index_of(l).is_some() {
            return Err(Error::Duplicate(format!(
                "label `{l}` already names a basis vector of {}",
                g.name()
            )));
        }
    }
    let m = g.dim();
    let ev = s.dim_even();
    // old index -> new index; e and f sit between the even and odd blocks.
    let pos = |i: usize| if i < ev { i } else { i + 2 };
    let (e, f) = (ev, ev + 1);
    let dim = m + 2;
    let mut labels: Vec<String> = s.labels()[..ev].to_vec();
    labels.push(e_label.to_owned());
    labels.push(f_label.to_owned());
    labels.extend_from_slice(&s.labels()[ev..]);
    let space = SuperSpace::from_labels(ev + 2, s.dim_odd(), labels)?;

    let mut rows = vec![vec![F::zero(); dim]; dim * dim];
    for i in 0..m {
        for j in 0..m {
            for (k, v) in g.bracket_terms(i, j) {
                rows[pos(i) * dim + pos(j)][pos(*k)] += v.clone();
            }
            let cx = c.column(i);
            let bcxy: F = (0..m).map(|k| cx[k].clone() * b.entry(k, j)).sum();
            rows[pos(i) * dim + pos(j)][f] += bcxy;
        }
        for (k, v) in c.column(i).into_iter().enumerate() {
            rows[e * dim + pos(i)][pos(k)] += v.clone();
            rows[pos(i) * dim + e][pos(k)] -= v;
        }
    }
    let name = format!("{}^({}, {})", g.name(), e_label, f_label);
    let algebra = LieSuperalgebra::from_dense(name, space, rows)?;
    let mut gram = Matrix::zeros(dim, dim);
    for i in 0..m {
        for j in 0..m {
            gram[(pos(i), pos(j))] = b.entry(i, j);
        }
    }
    gram[(e, f)] = F::one();
    gram[(f, e)] = F::one();
    QuadraticAlgebra::new_verified(algebra, BilinearForm::new(gram, FormParity::Even)?)
}

/// Double extension of a quadratic `h` by a Lie algebra `g` through
/// `ψ : g → Der_a(h)`. With `h = 0` this is the semidirect product
/// `g ⋉ g*` with the canonical pairing.
pub fn double_extension_general<F: Scalar>(
    g: &LieSuperalgebra<F>,
    h: &QuadraticAlgebra<F>,
    psi: &Representation<F>,
) -> Result<QuadraticAlgebra<F>> {
    require_lie(g)?;
    if h.form_parity() != FormParity::Even {
        return Err(Error::FormParity(
            "double extensions need an even form".into(),
        ));
    }
    psi.check(g, h.algebra(), h.form())?;
    let attached = Attached {
        h: h.algebra(),
        form: h.form(),
        psi,
    };
    let name = format!("D({}, {})", g.name(), h.name());
    let (a, b) = glue(name, g, None, Some(attached), None)?;
    QuadraticAlgebra::new_verified(a, b)
}

/// T*-extension `g ⋉_θ g*`. Returns a quadratic algebra when `θ` is cyclic
/// and the bare Lie algebra with a warning otherwise.
pub fn t_star_extension<F: Scalar>(
    g: &LieSuperalgebra<F>,
    theta: &Cocycle2<F>,
) -> Result<Constructed<F>> {
    theta.check_cocycle(g)?;
    let name = if theta.is_zero() {
        format!("T*({})", g.name())
    } else {
        format!("T*_θ({})", g.name())
    };
    let (a, b) = glue(name, g, Some(theta), None, None)?;
    downgrade_or_verify(a, b, theta.is_cyclic(), "θ")
}

/// Super double extension of a symplectic space `h` (purely odd, abelian,
/// with an even form) by `g` through `ψ`, optionally twisted by a cocycle.
pub fn super_double_extension<F: Scalar>(
    g: &LieSuperalgebra<F>,
    h: &QuadraticAlgebra<F>,
    psi: &Representation<F>,
    theta: Option<&Cocycle2<F>>,
) -> Result<Constructed<F>> {
    require_lie(g)?;
    let hs = h.algebra().space();
    if hs.dim_even() != 0 || !h.algebra().is_abelian() || h.form_parity() != FormParity::Even {
        return Err(Error::Precondition(format!(
            "{} must be a symplectic space: purely odd, abelian, with an even form",
            h.name()
        )));
    }
    if !h.form().is_nondegenerate() {
        return Err(Error::DegenerateForm(format!(
            "the form on {} is degenerate",
            h.name()
        )));
    }
    psi.check(g, h.algebra(), h.form())?;
    if let Some(t) = theta {
        t.check_cocycle(g)?;
    }
    let attached = Attached {
        h: h.algebra(),
        form: h.form(),
        psi,
    };
    let name = format!("D_s({}, {})", g.name(), h.name());
    let (a, b) = glue(name, g, theta, Some(attached), None)?;
    downgrade_or_verify(a, b, theta.map_or(true, Cocycle2::is_cyclic), "θ")
}

/// Odd T*s-extension `g ⊕ Πg*` with `[f, g] = φ(f, g)` and the odd
/// canonical form.
pub fn ts_star_extension<F: Scalar>(
    g: &LieSuperalgebra<F>,
    phi: &SymPairing<F>,
) -> Result<Constructed<F>> {
    phi.check(g)?;
    let name = format!("T*s({})", g.name());
    let (a, b) = glue(name, g, None, None, Some(phi))?;
    downgrade_or_verify(a, b, phi.is_cyclic(), "φ")
}

/// An abelian purely odd algebra with an even non-degenerate form, given by
/// pairs `B(a, b) = v`.
pub fn symplectic_space<'a, F: Scalar>(
    name: &str,
    labels: &[&str],
    pairs: impl IntoIterator<Item = (&'a str, &'a str, F)>,
) -> Result<QuadraticAlgebra<F>> {
    let space = SuperSpace::new(&[], labels)?;
    let form = BilinearForm::from_labeled(&space, FormParity::Even, pairs)?;
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm(format!(
            "rank {} of {}",
            form.rank(),
            form.dim()
        )));
    }
    QuadraticAlgebra::new_verified(LieSuperalgebra::abelian(name, space), form)
}

/// Positions of the basis of each summand inside [`direct_sum`]:
/// `q1_even, q2_even, q1_odd, q2_odd`.
pub fn direct_sum_indices(s1: &SuperSpace, s2: &SuperSpace) -> (Vec<usize>, Vec<usize>) {
    let (e1, e2) = (s1.dim_even(), s2.dim_even());
    let p1 = (0..s1.dim())
        .map(|i| if i < e1 { i } else { e2 + i })
        .collect();
    let p2 = (0..s2.dim())
        .map(|i| if i < e2 { e1 + i } else { s1.dim() + i })
        .collect();
    (p1, p2)
}

/// Orthogonal direct sum. Labels must be disjoint; see
/// [`with_label_suffix`].
pub fn direct_sum<F: Scalar>(
    q1: &QuadraticAlgebra<F>,
    q2: &QuadraticAlgebra<F>,
) -> Result<QuadraticAlgebra<F>> {
    if q1.form_parity() != q2.form_parity() {
        return Err(Error::FormParity(format!(
            "{} has an {} form and {} an {} form",
            q1.name(),
            q1.form_parity(),
            q2.name(),
            q2.form_parity()
        )));
    }
    let (s1, s2) = (q1.algebra().space(), q2.algebra().space());
    let (p1, p2) = direct_sum_indices(s1, s2);
    let dim = s1.dim() + s2.dim();
    let mut labels = vec![String::new(); dim];
    for (i, &p) in p1.iter().enumerate() {
        labels[p] = s1.label(i).to_owned();
    }
    for (i, &p) in p2.iter().enumerate() {
        labels[p] = s2.label(i).to_owned();
    }
    let space = SuperSpace::from_labels(
        s1.dim_even() + s2.dim_even(),
        s1.dim_odd() + s2.dim_odd(),
        labels,
    )?;
    let mut rows = vec![vec![F::zero(); dim]; dim * dim];
    let mut gram = Matrix::zeros(dim, dim);
    for (q, p) in [(q1, &p1), (q2, &p2)] {
        for i in 0..q.dim() {
            for j in 0..q.dim() {
                for (k, v) in q.algebra().bracket_terms(i, j) {
                    rows[p[i] * dim + p[j]][p[*k]] = v.clone();
                }
                gram[(p[i], p[j])] = q.form().entry(i, j);
            }
        }
    }
    let name = format!("{} ⊕ {}", q1.name(), q2.name());
    let algebra = LieSuperalgebra::from_dense(name, space, rows)?;
    QuadraticAlgebra::new_verified(algebra, BilinearForm::new(gram, q1.form_parity())?)
}

/// Appends `suffix` to every basis label.
pub fn with_label_suffix<F: Scalar>(
    q: &QuadraticAlgebra<F>,
    suffix: &str,
) -> Result<QuadraticAlgebra<F>> {
    let labels = q
        .algebra()
        .space()
        .labels()
        .iter()
        .map(|l| format!("{l}{suffix}"))
        .collect();
    q.relabel(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::structure;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn line() -> LieSuperalgebra<Rational> {
        LieSuperalgebra::abelian("c", SuperSpace::even(&["X"]).unwrap())
    }

    fn g4() -> QuadraticAlgebra<Rational> {
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
        QuadraticAlgebra::new_verified(a, b).unwrap()
    }

    #[test]
    fn zero_derivation_adds_two_central_vectors() {
        let q4 = g4();
        let out = double_extension_1d(&q4, &Matrix::zeros(4, 4)).unwrap();
        assert_eq!(out.dim(), 6);
        assert_eq!(structure::center(out.algebra()).dim(), 3);
    }

    #[test]
    fn inner_derivation_gives_central_element() {
        let q4 = g4();
        let out = double_extension_1d(&q4, &q4.algebra().ad(0)).unwrap();
        let s = out.algebra().space();
        let mut u = vec![q(0); 6];
        u[s.require("e").unwrap()] = q(-1);
        u[s.require("X").unwrap()] = q(1);
        assert!(structure::center(out.algebra()).contains(&u));
        let f = s.basis_vector(s.require("f").unwrap());
        assert_eq!(out.form().eval(&u, &f), q(-1));
    }

    #[test]
    fn non_derivation_is_refused() {
        let q4 = g4();
        let bad = Matrix::from_fn(4, 4, |i, j| if i == 1 && j == 1 { q(1) } else { q(0) });
        assert!(matches!(
            double_extension_1d(&q4, &bad),
            Err(Error::NotADerivation(_))
        ));
    }

    #[test]
    fn label_clash_is_an_error() {
        let q4 = g4();
        assert!(matches!(
            double_extension_1d_labeled(&q4, &Matrix::zeros(4, 4), "X", "f"),
            Err(Error::Duplicate(_))
        ));
    }

    #[test]
    fn semidirect_product_when_h_is_zero() {
        let g = LieSuperalgebra::builder("r2", SuperSpace::even(&["X", "Y"]).unwrap())
            .bracket("X", "Y", [(q(1), "Y")])
            .build()
            .unwrap();
        let zero = QuadraticAlgebra::new(
            LieSuperalgebra::abelian("0", SuperSpace::even(&[]).unwrap()),
            BilinearForm::zero(0, FormParity::Even),
        )
        .unwrap();
        let out = double_extension_general(&g, &zero, &Representation::zero(2, 0)).unwrap();
        let s = out.algebra().space();
        assert_eq!(s.labels(), ["X", "Y", "X*", "Y*"]);
        let lines = out.algebra().bracket_lines();
        assert!(lines.contains(&"[X, Y*] = -Y*".to_string()), "{lines:?}");
        assert!(lines.contains(&"[Y, Y*] = X*".to_string()), "{lines:?}");
    }

    #[test]
    fn one_dimensional_general_extension_matches_1d() {
        let q4 = g4();
        let c = q4.algebra().ad(0);
        let t = LieSuperalgebra::abelian("c", SuperSpace::even(&["T"]).unwrap());
        let general =
            double_extension_general(&t, &q4, &Representation::new(4, vec![c.clone()]).unwrap())
                .unwrap();
        let direct = double_extension_1d(&q4, &c).unwrap();
        // general: T, q, T*; direct: q, e, f.
        let order = [1, 2, 3, 4, 0, 5];
        let n = 6;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(
                        general
                            .algebra()
                            .structure_constant(order[i], order[j], order[k]),
                        direct.algebra().structure_constant(i, j, k)
                    );
                }
                assert_eq!(
                    general.form().entry(order[i], order[j]),
                    direct.form().entry(i, j)
                );
            }
        }
    }

    #[test]
    fn heisenberg_t_star() {
        let g = LieSuperalgebra::builder("h3", SuperSpace::even(&["X", "Y", "Z"]).unwrap())
            .bracket("X", "Y", [(q(1), "Z")])
            .build()
            .unwrap();
        let theta = Cocycle2::from_labeled(
            &g,
            [
                ("X", "Y", "Z", q(1)),
                ("Y", "Z", "X", q(1)),
                ("Z", "X", "Y", q(1)),
            ],
        )
        .unwrap();
        let out = t_star_extension(&g, &theta).unwrap();
        assert!(out.quadratic().is_some());
        let lopsided = Cocycle2::from_labeled(&g, [("X", "Y", "Z", q(1))]).unwrap();
        let plain = t_star_extension(&g, &lopsided).unwrap();
        assert!(plain.warning().is_some());
    }

    #[test]
    fn super_double_extension_nilpotent() {
        let h = symplectic_space("h", &["F1", "F2"], [("F1", "F2", q(1))]).unwrap();
        let psi = Representation::new(2, vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])]).unwrap();
        let out = super_double_extension(&line(), &h, &psi, None)
            .unwrap()
            .into_quadratic()
            .unwrap();
        assert_eq!(out.algebra().space().labels(), ["X", "X*", "F1", "F2"]);
        assert_eq!(out.algebra().space().dim_odd(), 2);
    }

    #[test]
    fn odd_t_star_of_the_line() {
        let phi = SymPairing::from_entries(1, [(0, 0, 0, q(3))]).unwrap();
        let out = ts_star_extension(&line(), &phi)
            .unwrap()
            .into_quadratic()
            .unwrap();
        assert_eq!(out.form_parity(), FormParity::Odd);
        assert_eq!(out.algebra().bracket_lines(), ["[X*, X*] = 3 X"]);
    }

    #[test]
    fn direct_sum_layout_and_parity() {
        let h = symplectic_space("h", &["F1", "F2"], [("F1", "F2", q(1))]).unwrap();
        let sum = direct_sum(&g4(), &h).unwrap();
        assert_eq!(
            sum.algebra().space().labels(),
            ["X", "P", "Q", "Z", "F1", "F2"]
        );
        let odd = ts_star_extension(&line(), &SymPairing::zero(1))
            .unwrap()
            .into_quadratic()
            .unwrap();
        assert!(matches!(direct_sum(&g4(), &odd), Err(Error::FormParity(_))));
        assert!(matches!(direct_sum(&g4(), &g4()), Err(Error::Duplicate(_))));
        let renamed = with_label_suffix(&g4(), "'").unwrap();
        assert_eq!(direct_sum(&g4(), &renamed).unwrap().dim(), 8);
    }
}
