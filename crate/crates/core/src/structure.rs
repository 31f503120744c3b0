//! Centers, derived and central series, ideals and orthogonal complements.

use crate::algebra::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::form::BilinearForm;
use crate::linalg::Matrix;
use crate::space::Subspace;

/// `{v : [v, e_j] = 0 for all j}`, the joint kernel of the bracket columns.
pub fn center<F: Scalar>(a: &LieSuperalgebra<F>) -> Subspace<F> {
    let n = a.dim();
    let mut m = Matrix::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.bracket_terms(i, j) {
                m[(j * n + k, i)] = c.clone();
            }
        }
    }
    Subspace::span(n, m.nullspace())
}

/// `[s, t]`, the span of brackets of basis vectors.
pub fn bracket_of<F: Scalar>(
    a: &LieSuperalgebra<F>,
    s: &Subspace<F>,
    t: &Subspace<F>,
) -> Subspace<F> {
    let mut vectors = Vec::new();
    for u in s.basis() {
        for v in t.basis() {
            vectors.push(a.bracket(u, v));
        }
    }
    Subspace::span(a.dim(), vectors)
}

/// `[g, g]`.
pub fn derived_subalgebra<F: Scalar>(a: &LieSuperalgebra<F>) -> Subspace<F> {
    let n = a.dim();
    Subspace::span(
        n,
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| a.bracket_basis(i, j)),
    )
}

/// `g, [g,g], [[g,g],[g,g]], ...` up to and including the first repeated term.
pub fn derived_series<F: Scalar>(a: &LieSuperalgebra<F>) -> Vec<Subspace<F>> {
    iterate_series(Subspace::full(a.dim()), |s| bracket_of(a, s, s))
}

/// `g, [g,g], [g,[g,g]], ...` up to and including the first repeated term.
pub fn lower_central_series<F: Scalar>(a: &LieSuperalgebra<F>) -> Vec<Subspace<F>> {
    let g = Subspace::full(a.dim());
    iterate_series(g.clone(), |s| bracket_of(a, &g, s))
}

fn iterate_series<F: Scalar>(
    start: Subspace<F>,
    step: impl Fn(&Subspace<F>) -> Subspace<F>,
) -> Vec<Subspace<F>> {
    let mut series = vec![start];
    loop {
        let next = step(series.last().unwrap());
        let stable = next.dim() == series.last().unwrap().dim();
        series.push(next);
        if stable {
            return series;
        }
    }
}

pub fn is_solvable<F: Scalar>(a: &LieSuperalgebra<F>) -> bool {
    derived_series(a).last().unwrap().is_zero()
}

pub fn is_nilpotent<F: Scalar>(a: &LieSuperalgebra<F>) -> bool {
    lower_central_series(a).last().unwrap().is_zero()
}

/// Whether `[g, s] ⊆ s`.
pub fn is_ideal<F: Scalar>(a: &LieSuperalgebra<F>, s: &Subspace<F>) -> bool {
    let n = a.dim();
    (0..n).all(|i| {
        let e = a.space().basis_vector::<F>(i);
        s.basis().iter().all(|v| s.contains(&a.bracket(&e, v)))
    })
}

/// `{v : B(v, s) = 0}`; refuses degenerate forms.
pub fn orthogonal_complement<F: Scalar>(
    form: &BilinearForm<F>,
    s: &Subspace<F>,
) -> Result<Subspace<F>> {
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm(format!(
            "rank {} of {}",
            form.rank(),
            form.dim()
        )));
    }
    Ok(orthogonal_raw(form, s))
}

pub(crate) fn orthogonal_raw<F: Scalar>(form: &BilinearForm<F>, s: &Subspace<F>) -> Subspace<F> {
    let n = form.dim();
    if s.is_zero() {
        return Subspace::full(n);
    }
    let rows: Vec<Vec<F>> = s.basis().iter().map(|w| form.gram().apply(w)).collect();
    Subspace::span(
        n,
        Matrix::from_rows(rows).expect("equal lengths").nullspace(),
    )
}

/// Whether the restriction of `form` to `s` is non-degenerate.
pub fn is_nondegenerate_on<F: Scalar>(form: &BilinearForm<F>, s: &Subspace<F>) -> bool {
    form.rank_on(s) == s.dim()
}

/// Whether `form(s, s) = 0`.
pub fn is_totally_isotropic<F: Scalar>(form: &BilinearForm<F>, s: &Subspace<F>) -> bool {
    form.rank_on(s) == 0
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

    #[test]
    fn diamond_structure() {
        let (a, b) = g4();
        let z = Subspace::coordinate(4, [3]);
        assert_eq!(center(&a), z);
        assert_eq!(derived_subalgebra(&a), Subspace::coordinate(4, [1, 2, 3]));
        assert!(is_solvable(&a));
        assert!(!is_nilpotent(&a));
        assert_eq!(
            orthogonal_complement(&b, &z).unwrap(),
            Subspace::coordinate(4, [1, 2, 3])
        );
        assert!(orthogonal_complement(&b, &Subspace::full(4))
            .unwrap()
            .is_zero());
        assert!(is_ideal(&a, &z));
        assert!(!is_nondegenerate_on(&b, &z));
        assert!(is_ideal(&a, &Subspace::full(4)));
        assert!(!is_ideal(&a, &Subspace::coordinate(4, [1])));
    }

    #[test]
    fn abelian_structure() {
        let a =
            LieSuperalgebra::<Rational>::abelian("a", SuperSpace::even(&["A", "B", "C"]).unwrap());
        assert!(center(&a).is_full());
        assert!(derived_subalgebra(&a).is_zero());
        assert!(is_nilpotent(&a));
    }

    #[test]
    fn degenerate_forms_are_refused() {
        let b = BilinearForm::<Rational>::zero(2, FormParity::Even);
        assert!(matches!(
            orthogonal_complement(&b, &Subspace::zero(2)),
            Err(Error::DegenerateForm(_))
        ));
    }
}
