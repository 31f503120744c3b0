//! Axiom verification and algebras equipped with an invariant form.

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{koszul_sign, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::form::{BilinearForm, FormParity};
use crate::report::{Check, Report};

pub const CITE_JACOBI: &str = "graded Jacobi identity";
pub const CITE_SUPERSYMMETRY: &str = "supersymmetry B(Y,X) = (-1)^(xy) B(X,Y)";
pub const CITE_FORM_PARITY: &str = "even forms vanish on B(g0,g1), odd forms on B(ga,ga)";
pub const CITE_NONDEGENERATE: &str = "non-degeneracy of B";
pub const CITE_INVARIANCE: &str = "invariance B([X,Y],Z) = B(X,[Y,Z])";
pub const CITE_ISOMORPHISM: &str = "isomorphism A[X,Y] = [AX,AY]";
pub const CITE_I_ISOMORPHISM: &str = "isometry B'(AX,AY) = B(X,Y)";
pub const CITE_DECOMPOSITION: &str = "orthogonal decomposition into non-degenerate ideals";
pub const CITE_SP2_LEMMA: &str = "[A,B] = B in sp(2) forces A semisimple, B nilpotent";

fn is_zero_vec<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn max_magnitude<F: Scalar>(v: &[F]) -> f64 {
    v.iter().map(Scalar::magnitude).fold(0.0, f64::max)
}

/// Residual label: exact zero on the exact backend, else the largest
/// entry magnitude.
fn residual_text<F: Scalar>(worst: f64) -> String {
    if F::is_exact() && worst == 0.0 {
        "0".to_string()
    } else {
        format!("{worst:e}")
    }
}

/// Checks `(-1)^{|X||Z|}[X,[Y,Z]] + (-1)^{|Y||X|}[Y,[Z,X]] + (-1)^{|Z||Y|}[Z,[X,Y]] = 0`
/// on every ordered basis triple. Each failing triple becomes its own entry.
pub fn verify_jacobi<F: Scalar>(a: &LieSuperalgebra<F>) -> Report {
    let n = a.dim();
    let s = a.space();
    let mut report = Report::new();
    let mut worst = 0.0f64;
    for x in 0..n {
        for y in 0..n {
            let xy = a.bracket_basis(x, y);
            for z in 0..n {
                let (px, py, pz) = (a.parity(x), a.parity(y), a.parity(z));
                let yz = a.bracket_basis(y, z);
                let zx = a.bracket_basis(z, x);
                let ex = s.basis_vector::<F>(x);
                let ey = s.basis_vector::<F>(y);
                let ez = s.basis_vector::<F>(z);
                let t1 = a.bracket(&ex, &yz);
                let t2 = a.bracket(&ey, &zx);
                let t3 = a.bracket(&ez, &xy);
                let (s1, s2, s3) = (
                    koszul_sign::<F>(px, pz),
                    koszul_sign::<F>(py, px),
                    koszul_sign::<F>(pz, py),
                );
                let residual: Vec<F> = (0..n)
                    .map(|k| {
                        s1.clone() * t1[k].clone()
                            + s2.clone() * t2[k].clone()
                            + s3.clone() * t3[k].clone()
                    })
                    .collect();
                if !is_zero_vec(&residual) {
                    worst = worst.max(max_magnitude(&residual));
                    report.push(
                        Check::fail(
                            format!("jacobi ({}, {}, {})", s.label(x), s.label(y), s.label(z)),
                            CITE_JACOBI,
                        )
                        .with_residual(s.format_vector(&residual)),
                    );
                } else {
                    worst = worst.max(max_magnitude(&residual));
                }
            }
        }
    }
    if report.is_empty() {
        report.push(Check::pass("jacobi", CITE_JACOBI).with_residual(residual_text::<F>(worst)));
    }
    report
}

/// Checks supersymmetry, the parity pattern, non-degeneracy and invariance
/// of `form` with respect to `a`.
pub fn verify_form<F: Scalar>(a: &LieSuperalgebra<F>, form: &BilinearForm<F>) -> Result<Report> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::Shape(format!(
            "form of size {} on an algebra of dimension {n}",
            form.dim()
        )));
    }
    let s = a.space();
    let g = form.gram();
    let mut report = Report::new();

    let mut bad_symmetry = Vec::new();
    let mut bad_parity = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (pi, pj) = (s.parity(i), s.parity(j));
            if j >= i {
                let expected = koszul_sign::<F>(pi, pj) * g[(i, j)].clone();
                if !g[(j, i)].approx_eq(&expected) {
                    bad_symmetry.push(format!("({}, {})", s.label(i), s.label(j)));
                }
            }
            if !g[(i, j)].is_zero() && !form.parity().allows(pi, pj) {
                bad_parity.push(format!("({}, {})", s.label(i), s.label(j)));
            }
        }
    }
    let mut push_list = |name: &str, cite: &str, bad: Vec<String>| {
        let c = Check::from_bool(bad.is_empty(), name, cite);
        report.push(if bad.is_empty() {
            c
        } else {
            c.with_witness(bad.join(" "))
        });
    };
    push_list("supersymmetry", CITE_SUPERSYMMETRY, bad_symmetry);
    push_list(
        &format!("{} form parity pattern", form.parity()),
        CITE_FORM_PARITY,
        bad_parity,
    );

    let rank = form.rank();
    report.push(
        Check::from_bool(rank == n, "non-degeneracy", CITE_NONDEGENERATE)
            .with_residual(format!("rank {rank} of {n}")),
    );

    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let ij = a.bracket_basis(i, j);
            for k in 0..n {
                let lhs = form.eval(&ij, &s.basis_vector(k));
                let jk = a.bracket_basis(j, k);
                let rhs = form.eval(&s.basis_vector(i), &jk);
                let diff = lhs.clone() - rhs.clone();
                worst = worst.max(diff.magnitude());
                if !diff.is_zero() {
                    failures.push(
                        Check::fail(
                            format!(
                                "invariance ({}, {}, {})",
                                s.label(i),
                                s.label(j),
                                s.label(k)
                            ),
                            CITE_INVARIANCE,
                        )
                        .with_residual(format!(
                            "B([{a},{b}],{c}) = {lhs} but B({a},[{b},{c}]) = {rhs}",
                            a = s.label(i),
                            b = s.label(j),
                            c = s.label(k)
                        )),
                    );
                }
            }
        }
    }
    if failures.is_empty() {
        report.push(
            Check::pass("invariance", CITE_INVARIANCE).with_residual(residual_text::<F>(worst)),
        );
    } else {
        report.checks.extend(failures);
    }
    Ok(report)
}

/// Cached outcome of the axiom checks.
#[derive(Clone, Debug)]
pub struct Verification {
    pub jacobi: Report,
    pub form: Report,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.jacobi.passed() && self.form.passed()
    }

    pub fn report(&self) -> Report {
        let mut r = self.jacobi.clone();
        r.extend(self.form.clone());
        r
    }
}

/// A Lie superalgebra with a bilinear form of matching dimension. The axiom
/// checks run once, on first request, and are cached.
#[derive(Clone)]
pub struct QuadraticAlgebra<F> {
    algebra: LieSuperalgebra<F>,
    form: BilinearForm<F>,
    verified: OnceLock<Verification>,
}

impl<F: Scalar> fmt::Debug for QuadraticAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}\n{:?}", self.algebra, self.form)
    }
}

impl<F: Scalar> QuadraticAlgebra<F> {
    /// Pairs an algebra with a form; only dimensions are checked here.
    pub fn new(algebra: LieSuperalgebra<F>, form: BilinearForm<F>) -> Result<Self> {
        if algebra.dim() != form.dim() {
            return Err(Error::Shape(format!(
                "form of size {} on an algebra of dimension {}",
                form.dim(),
                algebra.dim()
            )));
        }
        Ok(QuadraticAlgebra {
            algebra,
            form,
            verified: OnceLock::new(),
        })
    }

    /// Pairs and verifies, refusing algebras that fail any axiom.
    pub fn new_verified(algebra: LieSuperalgebra<F>, form: BilinearForm<F>) -> Result<Self> {
        let q = Self::new(algebra, form)?;
        let v = q.verification();
        if !v.passed() {
            let first = v
                .jacobi
                .failures()
                .chain(v.form.failures())
                .next()
                .expect("a failure");
            return Err(Error::Verification(format!(
                "{}: {first}",
                q.algebra.name()
            )));
        }
        Ok(q)
    }

    pub fn algebra(&self) -> &LieSuperalgebra<F> {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm<F> {
        &self.form
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn form_parity(&self) -> FormParity {
        self.form.parity()
    }

    pub fn into_parts(self) -> (LieSuperalgebra<F>, BilinearForm<F>) {
        (self.algebra, self.form)
    }

    pub fn verification(&self) -> &Verification {
        self.verified.get_or_init(|| Verification {
            jacobi: verify_jacobi(&self.algebra),
            form: verify_form(&self.algebra, &self.form)
                .expect("dimensions checked on construction"),
        })
    }

    pub fn is_verified(&self) -> bool {
        self.verification().passed()
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        QuadraticAlgebra {
            algebra: self.algebra.with_name(name),
            form: self.form,
            verified: self.verified,
        }
    }

    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        Self::new(self.algebra.relabel(labels)?, self.form.clone())
    }

    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> QuadraticAlgebra<G> {
        QuadraticAlgebra {
            algebra: self.algebra.map_scalars(&f),
            form: self.form.map_scalars(&f),
            verified: OnceLock::new(),
        }
    }
}
