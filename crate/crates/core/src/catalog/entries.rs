//! Structure constants of every catalog algebra, in the basis and with the
//! names used in the classification lists.

use crate::algebra::LieSuperalgebra;
use crate::error::Result;
use crate::extensions::{self, SymPairing};
use crate::field::{Rational, Scalar};
use crate::form::{BilinearForm, FormParity};
use crate::quadratic::QuadraticAlgebra;
use crate::space::SuperSpace;

use super::Params;

type Terms = Vec<(Rational, String)>;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// A small table-driven builder: `br("X", "P", [(1, "P")])` style.
struct Table {
    name: String,
    space: SuperSpace,
    brackets: Vec<(String, String, Terms)>,
    form: Vec<(String, String, Rational)>,
    parity: FormParity,
}

impl Table {
    fn new(
        name: impl Into<String>,
        even: &[&str],
        odd: &[&str],
        parity: FormParity,
    ) -> Result<Self> {
        Ok(Table {
            name: name.into(),
            space: SuperSpace::new(even, odd)?,
            brackets: Vec::new(),
            form: Vec::new(),
            parity,
        })
    }

    fn with_labels(
        name: impl Into<String>,
        even: Vec<String>,
        odd: Vec<String>,
        parity: FormParity,
    ) -> Result<Self> {
        let (e, o) = (even.len(), odd.len());
        let labels = even.into_iter().chain(odd).collect();
        Ok(Table {
            name: name.into(),
            space: SuperSpace::from_labels(e, o, labels)?,
            brackets: Vec::new(),
            form: Vec::new(),
            parity,
        })
    }

    fn br(&mut self, a: &str, b: &str, terms: &[(Rational, &str)]) -> &mut Self {
        let terms = terms
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| (c.clone(), (*l).to_owned()))
            .collect::<Terms>();
        if !terms.is_empty() {
            self.brackets.push((a.to_owned(), b.to_owned(), terms));
        }
        self
    }

    fn b(&mut self, a: &str, b: &str, c: i64, t: &str) -> &mut Self {
        self.br(a, b, &[(r(c), t)])
    }

    fn pair(&mut self, a: &str, b: &str, v: Rational) -> &mut Self {
        self.form.push((a.to_owned(), b.to_owned(), v));
        self
    }

    fn build(&self) -> Result<QuadraticAlgebra<Rational>> {
        let mut builder = LieSuperalgebra::builder(self.name.clone(), self.space.clone());
        for (a, b, terms) in &self.brackets {
            builder.try_bracket(a, b, terms.clone())?;
        }
        let algebra = builder.build()?;
        let form = BilinearForm::from_labeled(
            &self.space,
            self.parity,
            self.form
                .iter()
                .map(|(a, b, v)| (a.as_str(), b.as_str(), v.clone())),
        )?;
        QuadraticAlgebra::new(algebra, form)
    }
}

fn diamond_brackets(t: &mut Table) {
    t.b("X", "P", 1, "P")
        .b("X", "Q", -1, "Q")
        .b("P", "Q", 1, "Z");
}

fn diamond_form(t: &mut Table) {
    t.pair("X", "Z", r(1)).pair("P", "Q", r(1));
}

pub(super) fn g4(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = Table::new("g4", &["X", "P", "Q", "Z"], &[], FormParity::Even)?;
    diamond_brackets(&mut t);
    diamond_form(&mut t);
    t.build()
}

pub(super) fn g5(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = Table::new("g5", &["X1", "X2", "T", "Z1", "Z2"], &[], FormParity::Even)?;
    t.b("X1", "X2", 1, "T")
        .b("X1", "T", -1, "Z2")
        .b("X2", "T", 1, "Z1");
    t.pair("X1", "Z1", r(1))
        .pair("X2", "Z2", r(1))
        .pair("T", "T", r(1));
    t.build()
}

pub(super) fn g2n2(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let n = p.integer("n");
    let xs: Vec<String> = (0..=n).map(|i| format!("X{i}")).collect();
    let ys: Vec<String> = (0..=n).map(|i| format!("Y{i}")).collect();
    let labels = xs.iter().chain(&ys).cloned().collect();
    let mut t = Table::with_labels(
        format!("g{}", 2 * n + 2),
        labels,
        Vec::new(),
        FormParity::Even,
    )?;
    for i in 1..=n {
        t.b("Y0", &xs[i], 1, &xs[i].clone());
        t.b("Y0", &ys[i], -1, &ys[i].clone());
        t.b(&xs[i].clone(), &ys[i].clone(), 1, "X0");
    }
    for i in 0..=n {
        t.pair(&xs[i], &ys[i], r(1));
    }
    t.build()
}

fn dual_form(t: &mut Table, base: &[&str]) {
    for l in base {
        t.pair(l, &format!("{l}*"), r(1));
    }
}

const XYZ: [&str; 3] = ["X", "Y", "Z"];
const XYZ_DUAL: [&str; 3] = ["X", "Y", "Z*"];

fn t_star_table(name: &str) -> Result<Table> {
    let mut t = Table::new(
        name,
        &["X", "Y", "Z", "X*", "Y*", "Z*"],
        &[],
        FormParity::Even,
    )?;
    dual_form(&mut t, &XYZ);
    Ok(t)
}

pub(super) fn g6_1(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = t_star_table("g6_1")?;
    let _ = XYZ_DUAL;
    t.b("X", "Y", 1, "Z")
        .b("X", "Z*", -1, "Y*")
        .b("Y", "Z*", 1, "X*");
    t.build()
}

pub(super) fn g6_2(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = t_star_table("g6_2")?;
    t.b("X", "Y", 1, "Y")
        .br("X", "Z", &[(r(1), "Y"), (r(1), "Z")])
        .br("X", "Y*", &[(r(-1), "Y*"), (r(-1), "Z*")])
        .b("X", "Z*", -1, "Z*")
        .b("Y", "Y*", 1, "X*")
        .b("Z", "Y*", 1, "X*")
        .b("Z", "Z*", 1, "X*");
    t.build()
}

pub(super) fn g6_3(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mu = p.get("mu");
    let mut t = t_star_table("g6_3")?;
    t.b("X", "Y", 1, "Y")
        .br("X", "Z", &[(mu.clone(), "Z")])
        .b("X", "Y*", -1, "Y*")
        .br("X", "Z*", &[(-mu.clone(), "Z*")])
        .b("Y", "Y*", 1, "X*")
        .br("Z", "Z*", &[(mu, "X*")]);
    t.build()
}

fn gs4_table(name: &str) -> Result<Table> {
    let mut t = Table::new(name, &["X0", "Y0"], &["X1", "Y1"], FormParity::Even)?;
    t.pair("X0", "Y0", r(1)).pair("X1", "Y1", r(1));
    Ok(t)
}

pub(super) fn gs4_1(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = gs4_table("gs4_1")?;
    t.b("Y1", "Y1", -2, "X0").b("Y0", "Y1", -2, "X1");
    t.build()
}

pub(super) fn gs4_2(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = gs4_table("gs4_2")?;
    t.b("X1", "Y1", 1, "X0")
        .b("Y0", "X1", 1, "X1")
        .b("Y0", "Y1", -1, "Y1");
    t.build()
}

/// `osp(1|2)` in a Chevalley basis `H, E, F | x, y`.
pub(super) fn osp12(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = Table::new("osp12", &["H", "E", "F"], &["x", "y"], FormParity::Even)?;
    t.b("H", "E", 2, "E")
        .b("H", "F", -2, "F")
        .b("E", "F", 1, "H")
        .b("H", "x", 1, "x")
        .b("H", "y", -1, "y")
        .b("E", "y", 1, "x")
        .b("F", "x", 1, "y")
        .b("x", "x", -1, "E")
        .br("x", "y", &[(half(), "H")])
        .b("y", "y", 1, "F");
    t.pair("H", "H", r(2))
        .pair("E", "F", r(1))
        .pair("x", "y", r(1));
    t.build()
}

fn gs6_diamond(name: &str) -> Result<Table> {
    let mut t = Table::new(name, &["X", "P", "Q", "Z"], &["X1", "Y1"], FormParity::Even)?;
    diamond_brackets(&mut t);
    diamond_form(&mut t);
    t.pair("X1", "Y1", r(1));
    Ok(t)
}

pub(super) fn gs6_1(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = gs6_diamond("gs6_1")?;
    t.b("X", "Y1", 1, "X1").b("Y1", "Y1", 1, "Z");
    t.build()
}

pub(super) fn gs6_2(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let l = p.get("lambda");
    let mut t = gs6_diamond("gs6_2")?;
    t.br("X", "X1", &[(l.clone(), "X1")])
        .br("X", "Y1", &[(-l.clone(), "Y1")])
        .br("X1", "Y1", &[(l, "Z")]);
    t.build()
}

/// Generators `ad(X)|g1 = diag(1/2, -1/2)`, `ad(P)|g1` nilpotent,
/// `[X1, Y1] = Z/2`, `[Y1, Y1] = Q`, completed by invariance of `B`.
pub(super) fn gs6_3(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = gs6_diamond("gs6_3")?;
    t.br("X", "X1", &[(half(), "X1")])
        .br("X", "Y1", &[(-half(), "Y1")])
        .b("P", "Y1", 1, "X1")
        .br("X1", "Y1", &[(half(), "Z")])
        .b("Y1", "Y1", 1, "Q");
    t.build()
}

fn gs6_sp4(name: &str) -> Result<Table> {
    let mut t = Table::new(
        name,
        &["X0", "Y0"],
        &["X1", "X2", "Y1", "Y2"],
        FormParity::Even,
    )?;
    t.pair("X0", "Y0", r(1))
        .pair("X1", "Y1", r(1))
        .pair("X2", "Y2", r(1));
    Ok(t)
}

pub(super) fn gs6_4(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = gs6_sp4("gs6_4")?;
    t.b("Y0", "X2", 1, "X1")
        .b("Y0", "Y1", -1, "Y2")
        .b("X2", "Y1", 1, "X0");
    t.build()
}

pub(super) fn gs6_5(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = gs6_sp4("gs6_5")?;
    t.b("Y0", "X2", 1, "X2")
        .b("Y0", "Y1", 1, "X1")
        .b("Y0", "Y2", -1, "Y2")
        .b("Y1", "Y1", 1, "X0")
        .b("X2", "Y2", 1, "X0");
    t.build()
}

pub(super) fn gs6_6(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let l = p.get("lambda");
    let mut t = gs6_sp4("gs6_6")?;
    t.b("Y0", "X1", 1, "X1")
        .br("Y0", "X2", &[(l.clone(), "X2")])
        .b("Y0", "Y1", -1, "Y1")
        .br("Y0", "Y2", &[(-l.clone(), "Y2")])
        .b("X1", "Y1", 1, "X0")
        .br("X2", "Y2", &[(l, "X0")]);
    t.build()
}

/// `[Y0, Y2] = -Y2`, as forced by the listed sp(4) matrix.
pub(super) fn gs6_7(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = gs6_sp4("gs6_7")?;
    t.b("Y0", "X1", 1, "X1")
        .br("Y0", "X2", &[(r(1), "X2"), (r(1), "X1")])
        .br("Y0", "Y1", &[(r(-1), "Y1"), (r(-1), "Y2")])
        .b("Y0", "Y2", -1, "Y2")
        .b("X1", "Y1", 1, "X0")
        .b("X2", "Y1", 1, "X0")
        .b("X2", "Y2", 1, "X0");
    t.build()
}

pub(super) fn go2(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let l = p.get("lambda");
    let mut t = Table::new("go2", &["X0"], &["X1"], FormParity::Odd)?;
    t.br("X1", "X1", &[(l, "X0")]);
    t.pair("X0", "X1", r(1));
    t.build()
}

fn go4_table(name: &str) -> Result<Table> {
    let mut t = Table::new(name, &["X0", "Y0"], &["X1", "Y1"], FormParity::Odd)?;
    t.pair("X0", "X1", r(1)).pair("Y0", "Y1", r(1));
    Ok(t)
}

pub(super) fn go4_1(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = go4_table("go4_1")?;
    t.b("X1", "X1", 1, "Y0").b("X1", "Y1", 1, "X0");
    t.build()
}

pub(super) fn go4_2(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = go4_table("go4_2")?;
    t.b("X1", "X1", 1, "Y0")
        .br("X1", "Y1", &[(r(1), "X0"), (r(1), "Y0")])
        .b("Y1", "Y1", 1, "X0");
    t.build()
}

pub(super) fn go4_3(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = go4_table("go4_3")?;
    t.b("X0", "Y0", 1, "Y0")
        .b("X0", "Y1", -1, "Y1")
        .b("Y0", "Y1", 1, "X1");
    t.build()
}

fn go6_table(name: &str) -> Result<Table> {
    let mut t = Table::new(
        name,
        &["X0", "Y0", "Z0"],
        &["X1", "Y1", "Z1"],
        FormParity::Odd,
    )?;
    t.pair("X0", "X1", r(1))
        .pair("Y0", "Y1", r(1))
        .pair("Z0", "Z1", r(1));
    Ok(t)
}

pub(super) fn go6_0(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    go6_table("go6_0")?.build()
}

/// The names of the ten coefficients of the cubic form
/// `sum c_ijk x_i x_j x_k` that determines `[g1, g1]`.
pub(super) const CUBIC: [&str; 10] = [
    "c000", "c001", "c002", "c011", "c012", "c022", "c111", "c112", "c122", "c222",
];

/// Abelian even part with `[F_i, F_j] = sum_k c_ijk E_k`, `c` totally
/// symmetric: the odd T*s-extension of the abelian 3-dimensional algebra by a
/// cyclic pairing.
pub(super) fn go6_1(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let g = LieSuperalgebra::abelian("a3", SuperSpace::even(&["X0", "Y0", "Z0"])?);
    let mut entries = Vec::new();
    for name in CUBIC {
        let v = p.get(name);
        let idx: Vec<usize> = name[1..].bytes().map(|b| (b - b'0') as usize).collect();
        let mut perms = vec![[idx[0], idx[1], idx[2]]];
        for s in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let q = [idx[s[0]], idx[s[1]], idx[s[2]]];
            if !perms.contains(&q) {
                perms.push(q);
            }
        }
        for [i, j, k] in perms {
            entries.push((i, j, k, v.clone()));
        }
    }
    let phi = SymPairing::from_entries(3, entries)?;
    let built = extensions::ts_star_extension(&g, &phi)?.into_quadratic()?;
    Ok(built
        .relabel(
            ["X0", "Y0", "Z0", "X1", "Y1", "Z1"]
                .map(String::from)
                .to_vec(),
        )?
        .with_name("go6_1"))
}

pub(super) fn go6_2(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = go6_table("go6_2")?;
    t.b("X0", "Y0", 1, "Z0")
        .b("Y0", "Z1", 1, "X1")
        .b("X0", "Z1", -1, "Y1");
    t.build()
}

pub(super) fn go6_3(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let l = p.get("lambda");
    let mut t = go6_table("go6_3")?;
    t.b("X0", "Y0", 1, "Z0")
        .b("Y0", "Z1", 1, "X1")
        .b("X0", "Z1", -1, "Y1")
        .br("Z1", "Z1", &[(l, "Z0")]);
    t.build()
}

pub(super) fn go6_4(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = go6_table("go6_4")?;
    t.b("X0", "Y0", 1, "Y0")
        .br("X0", "Z0", &[(r(1), "Y0"), (r(1), "Z0")])
        .br("X0", "Y1", &[(r(-1), "Y1"), (r(-1), "Z1")])
        .b("Y0", "Y1", 1, "X1")
        .b("Z0", "Y1", 1, "X1")
        .b("X0", "Z1", -1, "Z1")
        .b("Z0", "Z1", 1, "X1");
    t.build()
}

pub(super) fn go6_5(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let gamma = p.get("gamma");
    let mut t = go6_table("go6_5")?;
    t.b("X0", "Y0", 1, "Y0")
        .b("X0", "Y1", -1, "Y1")
        .b("Y0", "Y1", 1, "X1")
        .br("Z1", "Z1", &[(gamma, "Z0")]);
    t.build()
}

pub(super) fn go6_6(p: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mu = p.get("mu");
    let mut t = go6_table("go6_6")?;
    t.b("X0", "Y0", 1, "Y0")
        .br("X0", "Z0", &[(mu.clone(), "Z0")])
        .b("X0", "Y1", -1, "Y1")
        .b("Y0", "Y1", 1, "X1")
        .br("X0", "Z1", &[(-mu.clone(), "Z1")])
        .br("Z0", "Z1", &[(mu, "X1")]);
    t.build()
}

pub(super) fn go6_7(_: &Params) -> Result<QuadraticAlgebra<Rational>> {
    let mut t = go6_table("go6_7")?;
    t.b("X0", "Y0", 1, "Y0")
        .br("X0", "Z0", &[(-half(), "Z0")])
        .b("X0", "Y1", -1, "Y1")
        .b("Y0", "Y1", 1, "X1")
        .br("X0", "Z1", &[(half(), "Z1")])
        .br("Z0", "Z1", &[(-half(), "X1")])
        .b("Z1", "Z1", 1, "Y0")
        .b("Z1", "Y1", 1, "Z0");
    t.build()
}
