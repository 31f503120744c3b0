mod common;

use common::{all_zero, Dense};
use proptest::prelude::*;
use superquad::catalog;
use superquad::derivations::{self, DerivationKind};
use superquad::extensions;
use superquad::format;
use superquad::morphisms;
use superquad::verification as v;
use superquad::{BilinearForm, LieSuperalgebra, Matrix, QuadraticAlgebra, Rational, Scalar};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

fn catalog_id() -> impl Strategy<Value = &'static str> {
    prop::sample::select(catalog::list().iter().map(|e| e.id).collect::<Vec<_>>())
}

/// `q` with its basis reordered by `perm`: new basis vector `i` is old
/// `perm[i]`. Parities are kept grouped, so `perm` only shuffles within
/// each block.
fn permuted(q: &QuadraticAlgebra<Rational>, perm: &[usize]) -> QuadraticAlgebra<Rational> {
    let a = q.algebra();
    let n = a.dim();
    let labels: Vec<String> = perm
        .iter()
        .map(|&p| a.space().label(p).to_string())
        .collect();
    let space = a.space().relabel(labels).unwrap();
    let alg = LieSuperalgebra::from_fn("p", space, |i, j| {
        let old = a.bracket_basis(perm[i], perm[j]);
        (0..n).map(|k| old[perm[k]].clone()).collect()
    })
    .unwrap();
    let g = q.form().gram();
    let gram = Matrix::from_fn(n, n, |i, j| g[(perm[i], perm[j])].clone());
    QuadraticAlgebra::new(alg, BilinearForm::new(gram, q.form_parity()).unwrap()).unwrap()
}

fn block_permutation(dim_even: usize, dim_odd: usize) -> impl Strategy<Value = Vec<usize>> {
    (
        Just((0..dim_even).collect::<Vec<_>>()).prop_shuffle(),
        Just((dim_even..dim_even + dim_odd).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(|(a, b)| [a, b].concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inner_derivations_are_skew_and_recognised(
        id in prop::sample::select(vec!["g4", "g5", "g6_2", "gs6_3", "osp12"]),
        coeffs in prop::collection::vec(small_rational(), 6),
    ) {
        let q = catalog::build::<Rational>(id, &[]).unwrap();
        let a = q.algebra();
        let ev = a.space().dim_even();
        let x: Vec<Rational> = (0..a.dim()).map(|i| if i < ev { coeffs[i % 6].clone() } else { Rational::zero() }).collect();
        let d = a.ad_vector(&x);
        prop_assert!(derivations::is_derivation(a, &d));
        prop_assert!(derivations::skewness_violation(q.form(), &d).is_none());
        let back = derivations::is_inner(a, &d).unwrap().expect("ad(x) is inner");
        prop_assert!(a.ad_vector(&back) == d);
    }

    #[test]
    fn double_extension_by_any_skew_derivation_is_quadratic(
        id in prop::sample::select(vec!["g4", "g5", "g6_1", "g6_3"]),
        coeffs in prop::collection::vec(small_rational(), 18),
    ) {
        let q = catalog::build::<Rational>(id, &[]).unwrap();
        let space = derivations::derivation_space(q.algebra(), Some(q.form()), DerivationKind::Skew).unwrap();
        let d = space.combination(&coeffs[..space.dim()]);
        let ext = extensions::double_extension_1d(&q, &d).unwrap();
        let t = Dense::of(&ext);
        prop_assert!(all_zero(&t.bracket_defects()));
        prop_assert!(all_zero(&t.form_defects(false)));
        prop_assert_eq!(t.form_rank(), q.dim() + 2);
        prop_assert!(v::full_report(&ext).passed());
    }

    #[test]
    fn fingerprint_ignores_basis_order(
        (id, perm) in catalog_id().prop_flat_map(|id| {
            let q = catalog::build::<Rational>(id, &[]).unwrap();
            let s = q.algebra().space();
            (Just(id), block_permutation(s.dim_even(), s.dim_odd()))
        })
    ) {
        let q = catalog::build::<Rational>(id, &[]).unwrap();
        let p = permuted(&q, &perm);
        prop_assert!(v::full_report(&p).passed());
        prop_assert_eq!(morphisms::quadratic_fingerprint(&q), morphisms::quadratic_fingerprint(&p));
    }

    #[test]
    fn emitted_files_are_stable(id in catalog_id(), sample_seed in any::<u64>()) {
        let e = catalog::entry(id).unwrap();
        let samples = e.default_samples();
        let p = &samples[(sample_seed as usize) % samples.len()];
        let q = e.build_with(p).unwrap();
        let text = format::emit(&q, &[]);
        let again = format::emit(&format::parse::<Rational>(&text).unwrap().algebra, &[]);
        prop_assert_eq!(text, again);
    }

    #[test]
    fn sp2_pairs_meet_the_hypothesis(a in small_rational(), b in small_rational(), c in small_rational(), t in small_rational()) {
        prop_assume!(!(a.is_zero() && b.is_zero()) && !c.is_zero());
        let (am, bm) = v::sp2_pair(a, b, c, t);
        prop_assert!(am.commutator(&bm) == bm);
        prop_assert!(bm.mul(&bm).is_zero());
        prop_assert!(morphisms::check_sp2_lemma(&am, &bm).unwrap().passed());
    }
}
