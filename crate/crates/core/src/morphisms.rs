//! Graded linear maps, homomorphism and isometry checks, central
//! decomposition witnesses and isomorphism fingerprints.

use std::fmt;

use serde::Serialize;

use crate::algebra::LieSuperalgebra;
use crate::derivations::{self, DerivationKind};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::quadratic::QuadraticAlgebra;
use crate::report::{Check, Report};
use crate::space::{Subspace, SuperSpace};
use crate::structure;

/// A parity-preserving linear map; column `j` is the image of source basis
/// vector `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLinearMap<F: Scalar> {
    source: SuperSpace,
    target: SuperSpace,
    matrix: Matrix<F>,
}

impl<F: Scalar> GradedLinearMap<F> {
    pub fn new(source: SuperSpace, target: SuperSpace, matrix: Matrix<F>) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "{}x{} matrix for a map from dimension {} to {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        for j in 0..source.dim() {
            for i in 0..target.dim() {
                if source.parity(j) != target.parity(i) && !matrix[(i, j)].is_zero() {
                    return Err(Error::Parity(format!(
                        "the image of {} has a component along {}",
                        source.label(j),
                        target.label(i)
                    )));
                }
            }
        }
        Ok(GradedLinearMap {
            source,
            target,
            matrix,
        })
    }

    /// From images of every source label written in target labels.
    pub fn from_images<'a>(
        source: &SuperSpace,
        target: &SuperSpace,
        images: impl IntoIterator<Item = (&'a str, Vec<(F, &'a str)>)>,
    ) -> Result<Self> {
        let mut columns: Vec<Option<Vec<F>>> = vec![None; source.dim()];
        for (label, terms) in images {
            let j = source.require(label)?;
            if columns[j].is_some() {
                return Err(Error::Duplicate(format!("image of {label} given twice")));
            }
            let mut col = vec![F::zero(); target.dim()];
            for (c, t) in terms {
                col[target.require(t)?] += c;
            }
            columns[j] = Some(col);
        }
        let columns: Vec<Vec<F>> = columns
            .into_iter()
            .enumerate()
            .map(|(j, c)| {
                c.ok_or_else(|| Error::Basis(format!("no image given for {}", source.label(j))))
            })
            .collect::<Result<_>>()?;
        let matrix = Matrix::from_columns(target.dim(), &columns)?;
        Self::new(source.clone(), target.clone(), matrix)
    }

    pub fn identity(space: &SuperSpace) -> Self {
        GradedLinearMap {
            source: space.clone(),
            target: space.clone(),
            matrix: Matrix::identity(space.dim()),
        }
    }

    pub fn source(&self) -> &SuperSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperSpace {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.apply(v)
    }

    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> GradedLinearMap<G> {
        GradedLinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.map(f),
        }
    }
}

fn require_dims<F: Scalar>(
    map: &GradedLinearMap<F>,
    src: &LieSuperalgebra<F>,
    tgt: &LieSuperalgebra<F>,
) -> Result<()> {
    if map.source.dim_even() != src.space().dim_even()
        || map.source.dim_odd() != src.space().dim_odd()
        || map.target.dim_even() != tgt.space().dim_even()
        || map.target.dim_odd() != tgt.space().dim_odd()
    {
        return Err(Error::Shape(format!(
            "map {} -> {} does not fit {} -> {}",
            map.source,
            map.target,
            src.space(),
            tgt.space()
        )));
    }
    Ok(())
}

/// `A[e_i, e_j] = [A e_i, A e_j]` on every basis pair.
pub fn verify_homomorphism<F: Scalar>(
    map: &GradedLinearMap<F>,
    src: &LieSuperalgebra<F>,
    tgt: &LieSuperalgebra<F>,
) -> Result<Report> {
    require_dims(map, src, tgt)?;
    let s = src.space();
    let n = src.dim();
    let images: Vec<Vec<F>> = (0..n).map(|j| map.matrix.column(j)).collect();
    let mut report = Report::new();
    for i in 0..n {
        for j in i..n {
            let lhs = map.apply(&src.bracket_basis(i, j));
            let rhs = tgt.bracket(&images[i], &images[j]);
            let residual: Vec<F> = lhs
                .iter()
                .zip(&rhs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect();
            if residual.iter().any(|r| !r.is_zero()) {
                report.push(
                    Check::fail(
                        format!("homomorphism ({}, {})", s.label(i), s.label(j)),
                        crate::quadratic::CITE_ISOMORPHISM,
                    )
                    .with_residual(tgt.space().format_vector(&residual)),
                );
            }
        }
    }
    if report.is_empty() {
        report.push(
            Check::pass("homomorphism", crate::quadratic::CITE_ISOMORPHISM).with_residual("0"),
        );
    }
    Ok(report)
}

/// Homomorphism check plus invertibility.
pub fn verify_isomorphism<F: Scalar>(
    map: &GradedLinearMap<F>,
    src: &LieSuperalgebra<F>,
    tgt: &LieSuperalgebra<F>,
) -> Result<Report> {
    let mut report = verify_homomorphism(map, src, tgt)?;
    let n = map.matrix.rows();
    let rank = map.matrix.rank();
    report.push(
        Check::from_bool(
            map.matrix.is_square() && rank == n,
            "bijective",
            crate::quadratic::CITE_ISOMORPHISM,
        )
        .with_residual(format!("rank {rank} of {n}")),
    );
    Ok(report)
}

/// Isomorphism check plus `A^T G' A = G`.
pub fn verify_i_isomorphism<F: Scalar>(
    map: &GradedLinearMap<F>,
    src: &QuadraticAlgebra<F>,
    tgt: &QuadraticAlgebra<F>,
) -> Result<Report> {
    let mut report = verify_isomorphism(map, src.algebra(), tgt.algebra())?;
    let pulled = map
        .matrix
        .transpose()
        .mul(tgt.form().gram())
        .mul(&map.matrix);
    let diff = pulled.sub(src.form().gram());
    let mut check = Check::from_bool(
        diff.is_zero(),
        "isometry",
        crate::quadratic::CITE_I_ISOMORPHISM,
    );
    if !diff.is_zero() {
        let (i, j) = first_nonzero(&diff);
        let s = src.algebra().space();
        check = check
            .with_residual(format!("{:.3e}", diff.max_abs()))
            .with_witness(format!(
                "B'(A {a}, A {b}) != B({a}, {b})",
                a = s.label(i),
                b = s.label(j)
            ));
    } else {
        check = check.with_residual(format!("{:.3e}", diff.max_abs()));
    }
    report.push(check);
    Ok(report)
}

fn first_nonzero<F: Scalar>(m: &Matrix<F>) -> (usize, usize) {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !m[(i, j)].is_zero())
        .unwrap_or((0, 0))
}

/// A splitting `g = U ⊥⊕ U^⊥` with `U` central and non-degenerate.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<F: Scalar> {
    pub ideal: Subspace<F>,
    pub complement: Subspace<F>,
    /// The homogeneous central vectors spanning `U`.
    pub generators: Vec<Vec<F>>,
}

impl<F: Scalar> Witness<F> {
    /// `B(w, w)` for a one-dimensional `U`.
    pub fn self_pairing(&self, q: &QuadraticAlgebra<F>) -> Option<F> {
        match self.generators.as_slice() {
            [w] => Some(q.form().eval(w, w)),
            _ => None,
        }
    }

    pub fn format(&self, space: &SuperSpace) -> String {
        format!(
            "{} ⊥⊕ {}",
            self.ideal.format(space),
            self.complement.format(space)
        )
    }
}

fn homogeneous_center<F: Scalar>(a: &LieSuperalgebra<F>) -> (Vec<Vec<F>>, Vec<Vec<F>>) {
    let z = structure::center(a);
    let s = a.space();
    let n = a.dim();
    let part = |range: std::ops::Range<usize>| {
        z.intersection(&Subspace::coordinate(n, range))
            .basis()
            .to_vec()
    };
    (part(s.even_range()), part(s.odd_range()))
}

/// Looks for a non-zero restriction of the form to the center and builds a
/// minimal central non-degenerate ideal `U` from it: a single `w` with
/// `B(w, w) != 0` when possible, otherwise a pair `u, v` with
/// `B(u, v) != 0`. Returns `None` when the restriction vanishes; the test is
/// sufficient for decomposability, not necessary.
pub fn decomposability_via_center<F: Scalar>(q: &QuadraticAlgebra<F>) -> Option<Witness<F>> {
    if !q.form().is_nondegenerate() {
        return None;
    }
    let b = q.form();
    let (even, odd) = homogeneous_center(q.algebra());
    let all: Vec<&Vec<F>> = even.iter().chain(&odd).collect();
    for w in &all {
        if !b.eval(w, w).is_zero() {
            return central_witness_from(q, &[(*w).clone()]);
        }
    }
    for (x, u) in all.iter().enumerate() {
        for v in &all[x + 1..] {
            if b.eval(u, v).is_zero() {
                continue;
            }
            let same = q.algebra().space().vector_parity(u) == q.algebra().space().vector_parity(v);
            let sum: Vec<F> = u
                .iter()
                .zip(v.iter())
                .map(|(p, r)| p.clone() + r.clone())
                .collect();
            if same && !b.eval(&sum, &sum).is_zero() {
                return central_witness_from(q, &[sum]);
            }
            return central_witness_from(q, &[(*u).clone(), (*v).clone()]);
        }
    }
    None
}

/// The witness spanned by given vectors, if they are homogeneous, central
/// and span a non-degenerate subspace.
pub fn central_witness_from<F: Scalar>(
    q: &QuadraticAlgebra<F>,
    generators: &[Vec<F>],
) -> Option<Witness<F>> {
    let n = q.dim();
    let z = structure::center(q.algebra());
    let s = q.algebra().space();
    if generators
        .iter()
        .any(|g| g.len() != n || !z.contains(g) || s.vector_parity(g).is_none())
    {
        return None;
    }
    let ideal = Subspace::span(n, generators.iter().cloned());
    if ideal.dim() != generators.len() || !structure::is_nondegenerate_on(q.form(), &ideal) {
        return None;
    }
    let complement = structure::orthogonal_complement(q.form(), &ideal).ok()?;
    Some(Witness {
        ideal,
        complement,
        generators: generators.to_vec(),
    })
}

/// Checks that `s1` and `s2` are orthogonal non-degenerate ideals with
/// `s1 ⊕ s2 = g`.
pub fn verify_decomposition<F: Scalar>(
    q: &QuadraticAlgebra<F>,
    s1: &Subspace<F>,
    s2: &Subspace<F>,
) -> Report {
    let (a, b) = (q.algebra(), q.form());
    let n = q.dim();
    let cite = crate::quadratic::CITE_DECOMPOSITION;
    let mut report = Report::new();
    report.push(Check::from_bool(
        structure::is_ideal(a, s1),
        "first summand is an ideal",
        cite,
    ));
    report.push(Check::from_bool(
        structure::is_ideal(a, s2),
        "second summand is an ideal",
        cite,
    ));
    let orthogonal = s1
        .basis()
        .iter()
        .all(|u| s2.basis().iter().all(|v| b.eval(u, v).is_zero()));
    report.push(Check::from_bool(
        orthogonal,
        "summands are orthogonal",
        cite,
    ));
    report.push(
        Check::from_bool(
            structure::is_nondegenerate_on(b, s1),
            "form non-degenerate on first summand",
            cite,
        )
        .with_residual(format!("rank {} of {}", b.rank_on(s1), s1.dim())),
    );
    report.push(
        Check::from_bool(
            structure::is_nondegenerate_on(b, s2),
            "form non-degenerate on second summand",
            cite,
        )
        .with_residual(format!("rank {} of {}", b.rank_on(s2), s2.dim())),
    );
    let spans = s1.dim() + s2.dim() == n && s1.sum(s2).is_full();
    report.push(
        Check::from_bool(spans, "summands span the algebra directly", cite).with_residual(format!(
            "{} + {} of {n}",
            s1.dim(),
            s2.dim()
        )),
    );
    report
}

/// Isomorphism invariants computed from the bracket, plus the dimension of
/// the skew-symmetric derivations when a form is supplied (an invariant of
/// isometric isomorphism only).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_even: usize,
    pub dim_odd: usize,
    pub center: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub derived_meet_center: usize,
    pub derivations: usize,
    pub skew_derivations: Option<usize>,
    pub solvable: bool,
    pub nilpotent: bool,
}

impl Fingerprint {
    /// The fields that are invariant under any isomorphism.
    fn bracket_part(&self) -> Fingerprint {
        Fingerprint {
            skew_derivations: None,
            ..self.clone()
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "dim {}|{}, center {}, derived [{}], lower central [{}], [g,g]∩Z {}, der {}",
            self.dim_even,
            self.dim_odd,
            self.center,
            join(&self.derived_series),
            join(&self.lower_central_series),
            self.derived_meet_center,
            self.derivations
        )?;
        if let Some(s) = self.skew_derivations {
            write!(f, ", skew der {s}")?;
        }
        write!(
            f,
            ", {}{}",
            if self.solvable {
                "solvable"
            } else {
                "not solvable"
            },
            if self.nilpotent { ", nilpotent" } else { "" }
        )
    }
}

pub fn fingerprint<F: Scalar>(a: &LieSuperalgebra<F>) -> Fingerprint {
    let derived = structure::derived_series(a);
    let lower = structure::lower_central_series(a);
    let center = structure::center(a);
    let d1 = structure::derived_subalgebra(a);
    Fingerprint {
        dim: a.dim(),
        dim_even: a.space().dim_even(),
        dim_odd: a.space().dim_odd(),
        center: center.dim(),
        derived_series: derived.iter().map(Subspace::dim).collect(),
        lower_central_series: lower.iter().map(Subspace::dim).collect(),
        derived_meet_center: d1.intersection(&center).dim(),
        derivations: derivations::derivation_space(a, None, DerivationKind::All)
            .expect("no form needed")
            .dim(),
        skew_derivations: None,
        solvable: derived.last().is_some_and(Subspace::is_zero),
        nilpotent: lower.last().is_some_and(Subspace::is_zero),
    }
}

/// [`fingerprint`] with the skew-symmetric derivation count filled in.
pub fn quadratic_fingerprint<F: Scalar>(q: &QuadraticAlgebra<F>) -> Fingerprint {
    let mut fp = fingerprint(q.algebra());
    fp.skew_derivations = Some(
        derivations::derivation_space(q.algebra(), Some(q.form()), DerivationKind::Skew)
            .expect("form supplied")
            .dim(),
    );
    fp
}

/// `true` certifies that the algebras are not isomorphic; `false` proves
/// nothing.
pub fn fingerprints_distinguish<F: Scalar>(a: &LieSuperalgebra<F>, b: &LieSuperalgebra<F>) -> bool {
    fingerprint(a) != fingerprint(b)
}

/// `true` certifies that the quadratic algebras are not isometrically
/// isomorphic; `false` proves nothing.
pub fn fingerprints_distinguish_isometric<F: Scalar>(
    a: &QuadraticAlgebra<F>,
    b: &QuadraticAlgebra<F>,
) -> bool {
    quadratic_fingerprint(a) != quadratic_fingerprint(b)
}

/// Whether two fingerprints differ in a bracket-only field.
pub fn bracket_fields_differ(a: &Fingerprint, b: &Fingerprint) -> bool {
    a.bracket_part() != b.bracket_part()
}

/// For `A, B` in `sp(2)` with `B != 0` and `[A, B] = B`, checks that `A` is
/// semisimple and `B` nilpotent.
pub fn check_sp2_lemma<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Report> {
    for (m, name) in [(a, "A"), (b, "B")] {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::Shape(format!("{name} must be 2x2")));
        }
        if !m.trace().is_zero() {
            return Err(Error::Precondition(format!(
                "{name} is not in sp(2): trace {}",
                m.trace()
            )));
        }
    }
    if b.is_zero() {
        return Err(Error::Precondition("B must be non-zero".into()));
    }
    if !a.commutator(b).sub(b).is_zero() {
        return Err(Error::Precondition("[A, B] != B".into()));
    }
    let cite = crate::quadratic::CITE_SP2_LEMMA;
    let (ea, eb) = (a.eigen_structure()?, b.eigen_structure()?);
    let mut report = Report::new();
    report.push(Check::from_bool(ea.is_semisimple, "A is semisimple", cite));
    report.push(Check::from_bool(eb.is_nilpotent, "B is nilpotent", cite));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::form::{BilinearForm, FormParity};

    fn q(n: i64) -> Rational {
        Rational::from(n)
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
    fn identity_and_a_bad_swap() {
        let g = g4();
        let s = g.algebra().space();
        let id = GradedLinearMap::identity(s);
        assert!(verify_i_isomorphism(&id, &g, &g).unwrap().passed());
        let swap = GradedLinearMap::from_images(
            s,
            s,
            [
                ("X", vec![(q(1), "X")]),
                ("P", vec![(q(1), "Q")]),
                ("Q", vec![(q(1), "Q")]),
                ("Z", vec![(q(1), "Z")]),
            ],
        )
        .unwrap();
        let report = verify_isomorphism(&swap, g.algebra(), g.algebra()).unwrap();
        let first = report.failures().next().unwrap();
        assert_eq!(first.check, "homomorphism (X, P)");
    }

    #[test]
    fn scaled_form_is_not_an_isometry() {
        let g = g4();
        let doubled = QuadraticAlgebra::new(g.algebra().clone(), g.form().scale(&q(2))).unwrap();
        let id = GradedLinearMap::identity(g.algebra().space());
        let report = verify_i_isomorphism(&id, &g, &doubled).unwrap();
        assert!(verify_isomorphism(&id, g.algebra(), doubled.algebra())
            .unwrap()
            .passed());
        assert!(!report.passed());
    }

    #[test]
    fn odd_images_of_even_vectors_are_refused() {
        let s = SuperSpace::new(&["A"], &["B"]).unwrap();
        let m = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(matches!(
            GradedLinearMap::<Rational>::new(s.clone(), s, m),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn diamond_has_no_central_witness() {
        assert!(decomposability_via_center(&g4()).is_none());
    }

    #[test]
    fn decomposition_reports() {
        let g = g4();
        let full = Subspace::full(4);
        assert!(verify_decomposition(&g, &full, &Subspace::zero(4)).passed());
        let bad = verify_decomposition(
            &g,
            &Subspace::coordinate(4, [0, 3]),
            &Subspace::coordinate(4, [1, 2]),
        );
        assert!(!bad.passed());
        assert!(bad
            .failures()
            .any(|c| c.check == "second summand is an ideal"));
    }

    #[test]
    fn sp2_lemma_examples() {
        let half = Rational::new(1, 2);
        let a = Matrix::diagonal(&[half.clone(), -half]);
        let b = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(check_sp2_lemma(&a, &b).unwrap().passed());
        let lower = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(matches!(
            check_sp2_lemma(&a, &lower),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn fingerprint_of_itself_does_not_distinguish() {
        let g = g4();
        assert!(!fingerprints_distinguish(g.algebra(), g.algebra()));
        let fp = quadratic_fingerprint(&g);
        assert_eq!(fp.center, 1);
        assert_eq!(fp.skew_derivations, Some(3));
        assert!(fp.solvable && !fp.nilpotent);
    }
}
