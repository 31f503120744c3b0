//! Named low-dimensional quadratic and odd-quadratic Lie superalgebras.
//!
//! Every entry is stored with exact rational structure constants and can be
//! built over either backend. Parameterized families carry admissibility
//! constraints and are checked over a small default grid by [`verify_all`].

mod entries;

use std::fmt;

use rayon::prelude::*;

use crate::algebra::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::field::{Complex, Rational, Scalar};
use crate::form::{BilinearForm, FormParity};
use crate::morphisms::{self, GradedLinearMap};
use crate::quadratic::QuadraticAlgebra;
use crate::report::{Check, Report};
use crate::space::SuperSpace;
use crate::structure;
use crate::verification;

pub const CITE_FINGERPRINT: &str = "structural invariants of the catalog entry";
pub const CITE_FLAGS: &str = "solvability and nilpotency of the catalog entry";
pub const CITE_INDECOMPOSABLE: &str = "indecomposability of the catalog entry";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    Any,
    NonZero,
    /// `|x| <= 1`.
    UnitDisc,
    /// `|x| <= 1`, `x != -1`.
    UnitDiscNotMinusOne,
    /// `0 < |x| <= 1`.
    UnitDiscNonZero,
    IntegerAtLeastOne,
}

impl Constraint {
    pub fn admits(self, x: &Rational) -> bool {
        let one = Rational::from(1);
        let in_disc = x.clone() <= one && x.clone() >= -one.clone();
        match self {
            Constraint::Any => true,
            Constraint::NonZero => !x.is_zero(),
            Constraint::UnitDisc => in_disc,
            Constraint::UnitDiscNotMinusOne => in_disc && *x != -one,
            Constraint::UnitDiscNonZero => in_disc && !x.is_zero(),
            Constraint::IntegerAtLeastOne => x.denom() == &1.into() && x.clone() >= one,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Constraint::Any => "any",
            Constraint::NonZero => "nonzero",
            Constraint::UnitDisc => "|x| <= 1",
            Constraint::UnitDiscNotMinusOne => "|x| <= 1, x != -1",
            Constraint::UnitDiscNonZero => "0 < |x| <= 1",
            Constraint::IntegerAtLeastOne => "integer >= 1",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    /// Default value as `(numerator, denominator)`.
    pub default: (i64, i64),
    pub constraint: Constraint,
}

impl ParamSpec {
    const fn new(name: &'static str, default: i64, constraint: Constraint) -> Self {
        ParamSpec {
            name,
            default: (default, 1),
            constraint,
        }
    }

    pub fn default_value(&self) -> Rational {
        Rational::new(self.default.0, self.default.1)
    }
}

/// Resolved parameter values, in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params(Vec<(&'static str, Rational)>);

impl Params {
    pub fn get(&self, name: &str) -> Rational {
        self.0
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| panic!("parameter {name} not declared"))
    }

    pub(crate) fn integer(&self, name: &str) -> usize {
        self.get(name).to_f64() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Rational)> {
        self.0.iter().map(|(n, v)| (*n, v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(n, v)| format!("{n}={v}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

type Builder = fn(&Params) -> Result<QuadraticAlgebra<Rational>>;

pub struct CatalogEntry {
    pub id: &'static str,
    pub title: &'static str,
    /// Where the entry sits in the classification, in words.
    pub source: &'static str,
    pub params: &'static [ParamSpec],
    pub form_parity: FormParity,
    pub solvable: bool,
    pub nilpotent: bool,
    /// Whether the entry is listed as indecomposable at these parameters.
    pub indecomposable: fn(&Params) -> bool,
    /// `Display` of the quadratic fingerprint at the default parameters.
    pub fingerprint: &'static str,
    builder: Builder,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("title", &self.title)
            .finish()
    }
}

impl CatalogEntry {
    /// Fills in defaults and checks admissibility.
    pub fn resolve(&self, overrides: &[(&str, Rational)]) -> Result<Params> {
        for (name, _) in overrides {
            if !self.params.iter().any(|p| p.name == *name) {
                return Err(Error::Inadmissible(format!(
                    "{} has no parameter `{name}`",
                    self.id
                )));
            }
        }
        let mut values = Vec::with_capacity(self.params.len());
        for param in self.params {
            let v = overrides
                .iter()
                .rev()
                .find(|(n, _)| *n == param.name)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(|| param.default_value());
            if !param.constraint.admits(&v) {
                return Err(Error::Inadmissible(format!(
                    "{}: {} = {v} violates {}",
                    self.id,
                    param.name,
                    param.constraint.describe()
                )));
            }
            values.push((param.name, v));
        }
        Ok(Params(values))
    }

    pub fn defaults(&self) -> Params {
        self.resolve(&[]).expect("defaults are admissible")
    }

    pub fn build_with(&self, params: &Params) -> Result<QuadraticAlgebra<Rational>> {
        Ok((self.builder)(params)?.with_name(self.id))
    }

    pub fn build(&self, overrides: &[(&str, Rational)]) -> Result<QuadraticAlgebra<Rational>> {
        self.build_with(&self.resolve(overrides)?)
    }

    /// The defaults, plus each parameter moved over the sample grid with the
    /// others held at their defaults.
    pub fn default_samples(&self) -> Vec<Params> {
        let mut out = vec![self.defaults()];
        for param in self.params {
            for v in sample_grid() {
                if let Ok(p) = self.resolve(&[(param.name, v)]) {
                    if !out.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// `id` or `id(k=v,...)` for logs and report prefixes.
    pub fn instance_name(&self, params: &Params) -> String {
        if params.is_empty() {
            self.id.to_string()
        } else {
            format!("{}({params})", self.id)
        }
    }
}

/// `{-2, -1, -1/2, 0, 1/2, 1, 2}`.
pub fn sample_grid() -> Vec<Rational> {
    [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)]
        .into_iter()
        .map(|(n, d)| Rational::new(n, d))
        .collect()
}

use Constraint::*;
use FormParity::{Even, Odd};

const NONE: &[ParamSpec] = &[];

fn always(_: &Params) -> bool {
    true
}

fn never(_: &Params) -> bool {
    false
}

fn mu_nonzero(p: &Params) -> bool {
    !p.get("mu").is_zero()
}

const CUBIC_PARAMS: [ParamSpec; 10] = {
    let mut out = [ParamSpec::new("", 0, Any); 10];
    let mut i = 0;
    while i < 10 {
        out[i].name = entries::CUBIC[i];
        i += 1;
    }
    out[4].default = (1, 1);
    out
};

macro_rules! entry {
    ($id:literal, $f:ident, $title:literal, $source:literal, $params:expr, $parity:expr,
     solvable: $s:literal, nilpotent: $n:literal, $ind:expr, $fp:literal) => {
        CatalogEntry {
            id: $id,
            title: $title,
            source: $source,
            params: $params,
            form_parity: $parity,
            solvable: $s,
            nilpotent: $n,
            indecomposable: $ind,
            fingerprint: $fp,
            builder: entries::$f,
        }
    };
}

static ENTRIES: [CatalogEntry; 28] = [
    entry!("g4", g4, "diamond Lie algebra", "quadratic Lie algebras, dimension 4", NONE, Even,
        solvable: true, nilpotent: false, always,
        "dim 4|0, center 1, derived [4,3,1,0,0], lower central [4,3,3], [g,g]∩Z 1, der 5, skew der 3, solvable"),
    entry!("g5", g5, "five-dimensional nilpotent quadratic Lie algebra", "quadratic Lie algebras, dimension 5", NONE, Even,
        solvable: true, nilpotent: true, always,
        "dim 5|0, center 2, derived [5,3,0,0], lower central [5,3,2,0,0], [g,g]∩Z 2, der 10, skew der 6, solvable, nilpotent"),
    entry!("g2n2", g2n2, "family g_{2n+2}", "quadratic Lie algebras, even dimension, one-dimensional double extensions", &[ParamSpec::new("n", 2, IntegerAtLeastOne)], Even,
        solvable: true, nilpotent: false, never,
        "dim 6|0, center 1, derived [6,5,1,0,0], lower central [6,5,5], [g,g]∩Z 1, der 10, skew der 8, solvable"),
    entry!("g6_1", g6_1, "T*-extension of the Heisenberg algebra", "quadratic Lie algebras, dimension 6", NONE, Even,
        solvable: true, nilpotent: true, always,
        "dim 6|0, center 3, derived [6,3,0,0], lower central [6,3,0,0], [g,g]∩Z 3, der 18, skew der 11, solvable, nilpotent"),
    entry!("g6_2", g6_2, "T*-extension of g_{3,2}", "quadratic Lie algebras, dimension 6", NONE, Even,
        solvable: true, nilpotent: false, always,
        "dim 6|0, center 1, derived [6,5,1,0,0], lower central [6,5,5], [g,g]∩Z 1, der 8, skew der 6, solvable"),
    entry!("g6_3", g6_3, "T*-extension of g_{3,3}(mu)", "quadratic Lie algebras, dimension 6", &[ParamSpec::new("mu", 1, UnitDiscNotMinusOne)], Even,
        solvable: true, nilpotent: false, mu_nonzero,
        "dim 6|0, center 1, derived [6,5,1,0,0], lower central [6,5,5], [g,g]∩Z 1, der 10, skew der 8, solvable"),
    entry!("gs4_1", gs4_1, "super double extension by a nilpotent map", "quadratic Lie superalgebras, dimension 2|2", NONE, Even,
        solvable: true, nilpotent: true, never,
        "dim 2|2, center 2, derived [4,2,0,0], lower central [4,2,0,0], [g,g]∩Z 2, der 4, skew der 2, solvable, nilpotent"),
    entry!("gs4_2", gs4_2, "super double extension by a semisimple map", "quadratic Lie superalgebras, dimension 2|2", NONE, Even,
        solvable: true, nilpotent: false, never,
        "dim 2|2, center 1, derived [4,3,1,0,0], lower central [4,3,3], [g,g]∩Z 1, der 3, skew der 1, solvable"),
    entry!("osp12", osp12, "orthosymplectic superalgebra osp(1|2)", "quadratic Lie superalgebras, dimension 3|2", NONE, Even,
        solvable: false, nilpotent: false, always,
        "dim 3|2, center 0, derived [5,5], lower central [5,5], [g,g]∩Z 0, der 3, skew der 3, not solvable"),
    entry!("gs6_1", gs6_1, "diamond with nilpotent odd action", "quadratic Lie superalgebras, dimension 4|2", NONE, Even,
        solvable: true, nilpotent: false, always,
        "dim 4|2, center 2, derived [6,4,1,0,0], lower central [6,4,3,3], [g,g]∩Z 2, der 6, skew der 4, solvable"),
    entry!("gs6_2", gs6_2, "diamond with diagonal odd action", "quadratic Lie superalgebras, dimension 4|2", &[ParamSpec::new("lambda", 1, NonZero)], Even,
        solvable: true, nilpotent: false, always,
        "dim 4|2, center 1, derived [6,5,1,0,0], lower central [6,5,5], [g,g]∩Z 1, der 6, skew der 4, solvable"),
    entry!("gs6_3", gs6_3, "diamond with mixed odd action", "quadratic Lie superalgebras, dimension 4|2", NONE, Even,
        solvable: true, nilpotent: false, always,
        "dim 4|2, center 1, derived [6,5,3,0,0], lower central [6,5,5], [g,g]∩Z 1, der 5, skew der 3, solvable"),
    entry!("gs6_4", gs6_4, "double extension by sp(4) nilpotent class [2,2]", "quadratic Lie superalgebras, dimension 2|4", NONE, Even,
        solvable: true, nilpotent: true, never,
        "dim 2|4, center 3, derived [6,3,0,0], lower central [6,3,0,0], [g,g]∩Z 3, der 8, skew der 5, solvable, nilpotent"),
    entry!("gs6_5", gs6_5, "double extension by sp(4), mixed class", "quadratic Lie superalgebras, dimension 2|4", NONE, Even,
        solvable: true, nilpotent: false, never,
        "dim 2|4, center 2, derived [6,4,1,0,0], lower central [6,4,3,3], [g,g]∩Z 2, der 4, skew der 2, solvable"),
    entry!("gs6_6", gs6_6, "double extension by sp(4), diagonal class", "quadratic Lie superalgebras, dimension 2|4", &[ParamSpec::new("lambda", 1, NonZero)], Even,
        solvable: true, nilpotent: false, never,
        "dim 2|4, center 1, derived [6,5,1,0,0], lower central [6,5,5], [g,g]∩Z 1, der 6, skew der 4, solvable"),
    entry!("gs6_7", gs6_7, "double extension by sp(4), non-semisimple class", "quadratic Lie superalgebras, dimension 2|4", NONE, Even,
        solvable: true, nilpotent: false, never,
        "dim 2|4, center 1, derived [6,5,1,0,0], lower central [6,5,5], [g,g]∩Z 1, der 4, skew der 2, solvable"),
    entry!("go2", go2, "two-dimensional odd-quadratic superalgebra", "odd-quadratic Lie superalgebras, dimension 1|1", &[ParamSpec::new("lambda", 1, Any)], Odd,
        solvable: true, nilpotent: true, never,
        "dim 1|1, center 1, derived [2,1,0,0], lower central [2,1,0,0], [g,g]∩Z 1, der 1, skew der 0, solvable, nilpotent"),
    entry!("go4_1", go4_1, "odd-quadratic, nilpotent, first type", "odd-quadratic Lie superalgebras, dimension 2|2", NONE, Odd,
        solvable: true, nilpotent: true, never,
        "dim 2|2, center 2, derived [4,2,0,0], lower central [4,2,0,0], [g,g]∩Z 2, der 3, skew der 1, solvable, nilpotent"),
    entry!("go4_2", go4_2, "odd-quadratic, nilpotent, second type", "odd-quadratic Lie superalgebras, dimension 2|2", NONE, Odd,
        solvable: true, nilpotent: true, never,
        "dim 2|2, center 2, derived [4,2,0,0], lower central [4,2,0,0], [g,g]∩Z 2, der 2, skew der 0, solvable, nilpotent"),
    entry!("go4_3", go4_3, "diamond algebra with odd pairing", "odd-quadratic Lie superalgebras, dimension 2|2", NONE, Odd,
        solvable: true, nilpotent: false, never,
        "dim 2|2, center 1, derived [4,3,1,0,0], lower central [4,3,3], [g,g]∩Z 1, der 3, skew der 2, solvable"),
    entry!("go6_0", go6_0, "abelian", "odd-quadratic Lie superalgebras, dimension 3|3", NONE, Odd,
        solvable: true, nilpotent: true, never,
        "dim 3|3, center 6, derived [6,0,0], lower central [6,0,0], [g,g]∩Z 0, der 18, skew der 9, solvable, nilpotent"),
    entry!("go6_1", go6_1, "abelian even part, cubic odd bracket", "odd-quadratic Lie superalgebras, dimension 3|3", &CUBIC_PARAMS, Odd,
        solvable: true, nilpotent: true, never,
        "dim 3|3, center 3, derived [6,3,0,0], lower central [6,3,0,0], [g,g]∩Z 3, der 3, skew der 2, solvable, nilpotent"),
    entry!("go6_2", go6_2, "Heisenberg even part", "odd-quadratic Lie superalgebras, dimension 3|3", NONE, Odd,
        solvable: true, nilpotent: true, always,
        "dim 3|3, center 3, derived [6,3,0,0], lower central [6,3,0,0], [g,g]∩Z 3, der 9, skew der 6, solvable, nilpotent"),
    entry!("go6_3", go6_3, "Heisenberg even part with odd square", "odd-quadratic Lie superalgebras, dimension 3|3", &[ParamSpec::new("lambda", 1, NonZero)], Odd,
        solvable: true, nilpotent: true, always,
        "dim 3|3, center 3, derived [6,3,0,0], lower central [6,3,0,0], [g,g]∩Z 3, der 8, skew der 5, solvable, nilpotent"),
    entry!("go6_4", go6_4, "even part g_{3,2}", "odd-quadratic Lie superalgebras, dimension 3|3", NONE, Odd,
        solvable: true, nilpotent: false, always,
        "dim 3|3, center 1, derived [6,5,1,0,0], lower central [6,5,5], [g,g]∩Z 1, der 5, skew der 4, solvable"),
    entry!("go6_5", go6_5, "diamond-type plus go2", "odd-quadratic Lie superalgebras, dimension 3|3", &[ParamSpec::new("gamma", 1, Any)], Odd,
        solvable: true, nilpotent: false, never,
        "dim 3|3, center 2, derived [6,4,1,0,0], lower central [6,4,3,3], [g,g]∩Z 2, der 6, skew der 3, solvable"),
    entry!("go6_6", go6_6, "even part g_{3,3}(mu)", "odd-quadratic Lie superalgebras, dimension 3|3", &[ParamSpec::new("mu", 1, UnitDiscNonZero)], Odd,
        solvable: true, nilpotent: false, always,
        "dim 3|3, center 1, derived [6,5,1,0,0], lower central [6,5,5], [g,g]∩Z 1, der 7, skew der 6, solvable"),
    entry!("go6_7", go6_7, "even part g_{3,3}(-1/2) with odd squares", "odd-quadratic Lie superalgebras, dimension 3|3", NONE, Odd,
        solvable: true, nilpotent: false, always,
        "dim 3|3, center 1, derived [6,5,3,0,0], lower central [6,5,5], [g,g]∩Z 1, der 4, skew der 3, solvable"),
];

/// All entries, in catalog order.
pub fn list() -> &'static [CatalogEntry] {
    &ENTRIES
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Builds `id` with the given parameter overrides over backend `F`.
pub fn build<F: Scalar>(id: &str, params: &[(&str, Rational)]) -> Result<QuadraticAlgebra<F>> {
    Ok(entry(id)?.build(params)?.map_scalars(F::from_rational))
}

/// Checks one instance: axioms, center identities, expected flags, and the
/// indecomposability claim. The fingerprint is compared only when `params`
/// are the defaults.
pub fn verify_instance(e: &CatalogEntry, params: &Params) -> Report {
    let name = e.instance_name(params);
    let mut report = Report::new();
    let q = match e.build_with(params) {
        Ok(q) => q,
        Err(err) => {
            report.push(Check::fail(format!("{name}: build"), CITE_FINGERPRINT).with_residual(err));
            return report;
        }
    };
    report.extend_prefixed(&name, verification::full_report(&q));
    let a = q.algebra();
    let (solvable, nilpotent) = (structure::is_solvable(a), structure::is_nilpotent(a));
    report.push(
        Check::from_bool(
            solvable == e.solvable && nilpotent == e.nilpotent,
            format!("{name}: solvable/nilpotent flags"),
            CITE_FLAGS,
        )
        .with_residual(format!("solvable {solvable}, nilpotent {nilpotent}")),
    );
    if *params == e.defaults() {
        let fp = morphisms::quadratic_fingerprint(&q).to_string();
        report.push(
            Check::from_bool(
                fp == e.fingerprint,
                format!("{name}: fingerprint"),
                CITE_FINGERPRINT,
            )
            .with_residual(fp),
        );
    }
    if (e.indecomposable)(params) {
        let w = morphisms::decomposability_via_center(&q);
        let mut c = Check::from_bool(
            w.is_none(),
            format!("{name}: no central witness"),
            CITE_INDECOMPOSABLE,
        );
        if let Some(w) = w {
            c = c.with_witness(w.format(a.space()));
        }
        report.push(c);
    }
    report
}

/// Runs [`verify_instance`] over every sample of every entry (or of the given
/// ids), entries in parallel, report in catalog order.
pub fn verify_all(ids: Option<&[&str]>) -> Result<Report> {
    let selected: Vec<&CatalogEntry> = match ids {
        Some(ids) => ids.iter().map(|id| entry(id)).collect::<Result<_>>()?,
        None => ENTRIES.iter().collect(),
    };
    let parts: Vec<Report> = selected
        .par_iter()
        .map(|e| {
            let mut r = Report::new();
            for p in e.default_samples() {
                r.extend(verify_instance(e, &p));
            }
            r
        })
        .collect();
    let mut report = Report::new();
    for p in parts {
        report.extend(p);
    }
    Ok(report)
}

/// `osp(1|2)` over the complex numbers in an orthonormal basis of the even
/// part: `B(X_i, X_j) = delta_ij`, `B(F1, F2) = 1`.
pub fn osp12_orthonormal() -> Result<QuadraticAlgebra<Complex>> {
    let c = Complex::new;
    let i2 = c(0.0, 0.5);
    let h = c(0.5, 0.0);
    let space = SuperSpace::new(&["X1", "X2", "X3"], &["F1", "F2"])?;
    let algebra = LieSuperalgebra::builder("osp12", space.clone())
        .bracket("X1", "X2", [(c(1.0, 0.0), "X3")])
        .bracket("X2", "X3", [(c(1.0, 0.0), "X1")])
        .bracket("X3", "X1", [(c(1.0, 0.0), "X2")])
        .bracket("X1", "F1", [(-i2, "F2")])
        .bracket("X1", "F2", [(-i2, "F1")])
        .bracket("X2", "F1", [(h, "F2")])
        .bracket("X2", "F2", [(-h, "F1")])
        .bracket("X3", "F1", [(-i2, "F1")])
        .bracket("X3", "F2", [(i2, "F2")])
        .bracket("F1", "F1", [(i2, "X1"), (-h, "X2")])
        .bracket("F1", "F2", [(-i2, "X3")])
        .bracket("F2", "F2", [(-i2, "X1"), (-h, "X2")])
        .build()?;
    let one = Complex::one();
    let form = BilinearForm::from_labeled(
        &space,
        FormParity::Even,
        [
            ("X1", "X1", one),
            ("X2", "X2", one),
            ("X3", "X3", one),
            ("F1", "F2", one),
        ],
    )?;
    QuadraticAlgebra::new(algebra, form)
}

/// Isomorphism from the Chevalley basis of `osp12` onto
/// [`osp12_orthonormal`]. It pulls the orthonormal form back to `-2` times
/// the catalog form, so it is an isometry onto the orthonormal version with
/// its form scaled by `-1/2`.
pub fn osp12_to_orthonormal() -> Result<GradedLinearMap<Complex>> {
    let src = entry("osp12")?.build(&[])?;
    let tgt = osp12_orthonormal()?;
    let c = Complex::new;
    let s = std::f64::consts::SQRT_2;
    GradedLinearMap::from_images(
        src.algebra().space(),
        tgt.algebra().space(),
        [
            ("H", vec![(c(0.0, 2.0), "X3")]),
            ("E", vec![(c(0.0, 1.0), "X1"), (c(-1.0, 0.0), "X2")]),
            ("F", vec![(c(0.0, 1.0), "X1"), (c(1.0, 0.0), "X2")]),
            ("x", vec![(c(0.0, s), "F1")]),
            ("y", vec![(c(0.0, s), "F2")]),
        ],
    )
}
