//! The line-oriented algebra file format and the small companion formats for
//! linear maps, cocycles, pairings and representations.
//!
//! ```text
//! # the diamond algebra
//! algebra g4
//! dim_even 4
//! dim_odd 0
//! backend exact
//! basis X P Q Z
//! bracket X P = 1 P
//! bracket X Q = -1 Q
//! bracket P Q = 1 Z
//! form X Z = 1
//! form P Q = 1
//! ```
//!
//! Brackets and form entries not listed are zero, and only one orientation
//! of each pair may appear. Files may also bind catalog parameters with
//! `param <name> = <value>`; these are recorded but do not affect parsing.
//! The name after `algebra` runs to the end of the line. In a linear
//! combination a bare label stands for coefficient 1.

use std::fmt::Write as _;

use crate::algebra::{AlgebraBuilder, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::extensions::{Cocycle2, Representation, SymPairing};
use crate::field::{Backend, Scalar};
use crate::form::{BilinearForm, FormParity};
use crate::linalg::Matrix;
use crate::morphisms::GradedLinearMap;
use crate::quadratic::QuadraticAlgebra;
use crate::space::SuperSpace;

/// A parsed algebra file.
#[derive(Clone, Debug)]
pub struct AlgebraFile<F: Scalar> {
    pub algebra: QuadraticAlgebra<F>,
    pub backend: Backend,
    /// `param` bindings, values kept as written.
    pub params: Vec<(String, String)>,
}

/// A whitespace-separated token with its 1-based column.
#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    /// Column just past the end of the content, for "missing token" errors.
    end: usize,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, e: Error) -> Error {
        e.at(self.number, column)
    }

    fn syntax(&self, column: usize, msg: impl Into<String>) -> Error {
        self.err(column, Error::Syntax(msg.into()))
    }

    fn token(&self, i: usize, what: &str) -> Result<Token<'a>> {
        self.tokens
            .get(i)
            .copied()
            .ok_or_else(|| self.syntax(self.end, format!("expected {what}")))
    }

    fn expect_len(&self, n: usize) -> Result<()> {
        match self.tokens.get(n) {
            Some(t) => Err(self.syntax(t.column, format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }

    fn expect_eq(&self, i: usize) -> Result<()> {
        let t = self.token(i, "`=`")?;
        if t.text != "=" {
            return Err(self.syntax(t.column, format!("expected `=`, found `{}`", t.text)));
        }
        Ok(())
    }

    fn scalar<F: Scalar>(&self, t: Token<'_>) -> Result<F> {
        t.text
            .parse::<F>()
            .map_err(|e| self.err(t.column, e.into()))
    }

    fn usize(&self, i: usize, what: &str) -> Result<usize> {
        let t = self.token(i, what)?;
        t.text
            .parse()
            .map_err(|_| self.syntax(t.column, format!("expected {what}, found `{}`", t.text)))
    }

    /// `c1 L1 [+|- c2 L2 ...]` starting at token `i`. A term may omit its
    /// coefficient, which then reads as 1.
    fn combination<F: Scalar>(&self, i: usize) -> Result<Vec<(F, Token<'a>)>> {
        let mut out = Vec::new();
        let mut k = i;
        let mut sign = F::one();
        loop {
            let c = self.token(k, "a coefficient")?;
            let bare = self
                .tokens
                .get(k + 1)
                .map_or(true, |t| t.text == "+" || t.text == "-");
            if bare {
                out.push((sign.clone(), c));
                k += 1;
            } else {
                let l = self.token(k + 1, "a basis label")?;
                out.push((sign.clone() * self.scalar::<F>(c)?, l));
                k += 2;
            }
            match self.tokens.get(k) {
                None => return Ok(out),
                Some(t) if t.text == "+" => sign = F::one(),
                Some(t) if t.text == "-" => sign = -F::one(),
                Some(t) => {
                    return Err(
                        self.syntax(t.column, format!("expected `+` or `-`, found `{}`", t.text))
                    )
                }
            }
            k += 1;
        }
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(n, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (idx, ch) in content.char_indices().chain([(content.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(idx),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..idx],
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then(|| Line {
            number: n + 1,
            tokens,
            end: content.trim_end().chars().count() + 1,
        })
    })
}

/// The `backend` declared by an algebra file, `exact` when absent.
pub fn declared_backend(text: &str) -> Result<Backend> {
    for line in lines(text) {
        if line.tokens[0].text == "backend" {
            let t = line.token(1, "`exact` or `complex`")?;
            return t
                .text
                .parse()
                .map_err(|e: crate::field::ScalarParseError| line.err(t.column, e.into()));
        }
    }
    Ok(Backend::Exact)
}

struct Header {
    name: Option<String>,
    dim_even: Option<(usize, usize)>,
    dim_odd: Option<(usize, usize)>,
    backend: Option<Backend>,
}

/// Parses an algebra file over backend `F`. Exact files can be read over the
/// complex backend; complex files cannot be read exactly.
pub fn parse<F: Scalar>(text: &str) -> Result<AlgebraFile<F>> {
    let mut header = Header {
        name: None,
        dim_even: None,
        dim_odd: None,
        backend: None,
    };
    let mut params = Vec::new();
    let mut space: Option<SuperSpace> = None;
    let mut builder: Option<AlgebraBuilder<F>> = None;
    let mut form_entries: Vec<(usize, usize, usize, F, usize)> = Vec::new();

    for line in lines(text) {
        let kw = line.tokens[0];
        let once = |slot: bool| -> Result<()> {
            if slot {
                Err(line.err(
                    kw.column,
                    Error::Duplicate(format!("`{}` given twice", kw.text)),
                ))
            } else {
                Ok(())
            }
        };
        let before_basis = |space: &Option<SuperSpace>| -> Result<()> {
            if space.is_some() {
                Err(line.syntax(kw.column, format!("`{}` must precede `basis`", kw.text)))
            } else {
                Ok(())
            }
        };
        match kw.text {
            "algebra" => {
                once(header.name.is_some())?;
                line.token(1, "a name")?;
                let words: Vec<&str> = line.tokens[1..].iter().map(|t| t.text).collect();
                header.name = Some(words.join(" "));
            }
            "dim_even" => {
                once(header.dim_even.is_some())?;
                before_basis(&space)?;
                header.dim_even = Some((line.usize(1, "a dimension")?, line.number));
                line.expect_len(2)?;
            }
            "dim_odd" => {
                once(header.dim_odd.is_some())?;
                before_basis(&space)?;
                header.dim_odd = Some((line.usize(1, "a dimension")?, line.number));
                line.expect_len(2)?;
            }
            "backend" => {
                once(header.backend.is_some())?;
                let t = line.token(1, "`exact` or `complex`")?;
                let b: Backend = t
                    .text
                    .parse()
                    .map_err(|e: crate::field::ScalarParseError| line.err(t.column, e.into()))?;
                if b == Backend::Complex && F::BACKEND == Backend::Exact {
                    return Err(line.syntax(
                        t.column,
                        "a complex file cannot be read over the exact backend",
                    ));
                }
                header.backend = Some(b);
                line.expect_len(2)?;
            }
            "param" => {
                let name = line.token(1, "a parameter name")?;
                line.expect_eq(2)?;
                let value = line.token(3, "a value")?;
                line.expect_len(4)?;
                params.push((name.text.to_owned(), value.text.to_owned()));
            }
            "basis" => {
                once(space.is_some())?;
                let labels: Vec<String> =
                    line.tokens[1..].iter().map(|t| t.text.to_owned()).collect();
                let (Some((ev, _)), Some((od, _))) = (header.dim_even, header.dim_odd) else {
                    return Err(
                        line.syntax(kw.column, "`dim_even` and `dim_odd` must precede `basis`")
                    );
                };
                if labels.len() != ev + od {
                    return Err(line.err(
                        kw.column,
                        Error::Shape(format!("{} labels for dimension {ev}|{od}", labels.len())),
                    ));
                }
                let s =
                    SuperSpace::from_labels(ev, od, labels).map_err(|e| line.err(kw.column, e))?;
                builder = Some(LieSuperalgebra::builder(
                    header.name.clone().unwrap_or_default(),
                    s.clone(),
                ));
                space = Some(s);
            }
            "bracket" | "form" => {
                let (Some(s), Some(b)) = (space.as_ref(), builder.as_mut()) else {
                    return Err(line.syntax(kw.column, format!("`{}` before `basis`", kw.text)));
                };
                let a = line.token(1, "a basis label")?;
                let c = line.token(2, "a basis label")?;
                let ia = s.require(a.text).map_err(|e| line.err(a.column, e))?;
                let ic = s.require(c.text).map_err(|e| line.err(c.column, e))?;
                line.expect_eq(3)?;
                if kw.text == "bracket" {
                    let terms = line.combination::<F>(4)?;
                    for (_, l) in &terms {
                        s.require(l.text).map_err(|e| line.err(l.column, e))?;
                    }
                    let terms = terms
                        .into_iter()
                        .map(|(v, l)| (v, l.text.to_owned()))
                        .collect();
                    b.try_bracket(a.text, c.text, terms)
                        .map_err(|e| line.err(kw.column, e))?;
                } else {
                    let v = line.scalar::<F>(line.token(4, "a coefficient")?)?;
                    line.expect_len(5)?;
                    form_entries.push((ia, ic, line.number, v, kw.column));
                }
            }
            other => return Err(line.syntax(kw.column, format!("unknown directive `{other}`"))),
        }
    }

    let (Some(space), Some(builder)) = (space, builder) else {
        return Err(Error::Syntax("missing `basis` line".into()));
    };
    let name = header
        .name
        .ok_or_else(|| Error::Syntax("missing `algebra` line".into()))?;
    let parity = form_entries
        .iter()
        .find(|(_, _, _, v, _)| !v.is_zero())
        .map(|(i, j, ..)| {
            if space.parity(*i) == space.parity(*j) {
                FormParity::Even
            } else {
                FormParity::Odd
            }
        })
        .unwrap_or(FormParity::Even);
    let n = space.dim();
    let mut form = BilinearForm::zero(n, parity);
    let mut seen = vec![false; n * n];
    for (i, j, number, v, column) in form_entries {
        form.set_entry(&space, i, j, v, &mut seen)
            .map_err(|e| e.at(number, column))?;
    }
    let algebra = builder.build()?.with_name(name);
    Ok(AlgebraFile {
        algebra: QuadraticAlgebra::new(algebra, form)?,
        backend: header.backend.unwrap_or(Backend::Exact),
        params,
    })
}

/// Writes an algebra file; `parse(emit(q))` reproduces `q` exactly on the
/// exact backend.
pub fn emit<F: Scalar>(q: &QuadraticAlgebra<F>, params: &[(String, String)]) -> String {
    let a = q.algebra();
    let s = a.space();
    let n = a.dim();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", a.name());
    let _ = writeln!(out, "dim_even {}", s.dim_even());
    let _ = writeln!(out, "dim_odd {}", s.dim_odd());
    let _ = writeln!(out, "backend {}", F::BACKEND);
    for (k, v) in params {
        let _ = writeln!(out, "param {k} = {v}");
    }
    let _ = writeln!(out, "basis {}", s.labels().join(" "));
    for i in 0..n {
        for j in i..n {
            let terms = a.bracket_terms(i, j);
            if terms.is_empty() {
                continue;
            }
            let rhs: Vec<String> = terms
                .iter()
                .map(|(k, c)| format!("{c} {}", s.label(*k)))
                .collect();
            let _ = writeln!(
                out,
                "bracket {} {} = {}",
                s.label(i),
                s.label(j),
                rhs.join(" + ")
            );
        }
    }
    for i in 0..n {
        for j in i..n {
            let v = q.form().entry(i, j);
            if !v.is_zero() {
                let _ = writeln!(out, "form {} {} = {v}", s.label(i), s.label(j));
            }
        }
    }
    out
}

/// Entries `keyword l1 .. lk = value`, with labels resolved in `space`.
fn labeled_values<F: Scalar>(
    text: &str,
    keyword: &str,
    arity: usize,
    space: &SuperSpace,
) -> Result<Vec<(Vec<usize>, F)>> {
    let mut out = Vec::new();
    for line in lines(text) {
        let kw = line.tokens[0];
        if kw.text != keyword {
            return Err(line.syntax(
                kw.column,
                format!("expected `{keyword}`, found `{}`", kw.text),
            ));
        }
        let mut idx = Vec::with_capacity(arity);
        for k in 1..=arity {
            let t = line.token(k, "a basis label")?;
            idx.push(space.require(t.text).map_err(|e| line.err(t.column, e))?);
        }
        line.expect_eq(arity + 1)?;
        let v = line.scalar::<F>(line.token(arity + 2, "a value")?)?;
        line.expect_len(arity + 3)?;
        out.push((idx, v));
    }
    Ok(out)
}

/// Optional prefix index, column index and the column itself.
type Column<F> = (Option<usize>, usize, Vec<F>);

/// Columns `keyword <label> = <combination>` of a linear map between two
/// spaces. Labels not listed map to zero.
fn columns<F: Scalar>(
    text: &str,
    keyword: &str,
    prefix_space: Option<&SuperSpace>,
    source: &SuperSpace,
    target: &SuperSpace,
) -> Result<Vec<Column<F>>> {
    let mut out = Vec::new();
    for line in lines(text) {
        let kw = line.tokens[0];
        if kw.text != keyword {
            return Err(line.syntax(
                kw.column,
                format!("expected `{keyword}`, found `{}`", kw.text),
            ));
        }
        let mut k = 1;
        let outer = match prefix_space {
            Some(p) => {
                let t = line.token(1, "a basis label")?;
                k = 2;
                Some(p.require(t.text).map_err(|e| line.err(t.column, e))?)
            }
            None => None,
        };
        let t = line.token(k, "a basis label")?;
        let j = source.require(t.text).map_err(|e| line.err(t.column, e))?;
        line.expect_eq(k + 1)?;
        let mut col = vec![F::zero(); target.dim()];
        for (c, l) in line.combination::<F>(k + 2)? {
            col[target.require(l.text).map_err(|e| line.err(l.column, e))?] += c;
        }
        if out.iter().any(|(o, jj, _)| *o == outer && *jj == j) {
            return Err(line.err(
                kw.column,
                Error::Duplicate(format!("image of {} given twice", t.text)),
            ));
        }
        out.push((outer, j, col));
    }
    Ok(out)
}

fn assemble<F: Scalar>(
    rows: usize,
    cols: usize,
    entries: impl IntoIterator<Item = (usize, Vec<F>)>,
) -> Matrix<F> {
    let mut m = Matrix::zeros(rows, cols);
    for (j, col) in entries {
        for (i, v) in col.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    m
}

/// Map file: lines `map <source label> = <combination of target labels>`.
pub fn parse_map<F: Scalar>(
    text: &str,
    source: &SuperSpace,
    target: &SuperSpace,
) -> Result<GradedLinearMap<F>> {
    let cols = columns::<F>(text, "map", None, source, target)?;
    let m = assemble(
        target.dim(),
        source.dim(),
        cols.into_iter().map(|(_, j, c)| (j, c)),
    );
    GradedLinearMap::new(source.clone(), target.clone(), m)
}

/// Endomorphism file: lines `map <label> = <combination>`, columns of `C`.
pub fn parse_endomorphism<F: Scalar>(text: &str, space: &SuperSpace) -> Result<Matrix<F>> {
    let cols = columns::<F>(text, "map", None, space, space)?;
    Ok(assemble(
        space.dim(),
        space.dim(),
        cols.into_iter().map(|(_, j, c)| (j, c)),
    ))
}

/// Representation file: lines `psi <g label> <h label> = <combination of h labels>`.
pub fn parse_representation<F: Scalar>(
    text: &str,
    g: &SuperSpace,
    h: &SuperSpace,
) -> Result<Representation<F>> {
    let cols = columns::<F>(text, "psi", Some(g), h, h)?;
    let mats = (0..g.dim())
        .map(|x| {
            assemble(
                h.dim(),
                h.dim(),
                cols.iter()
                    .filter(|(o, ..)| *o == Some(x))
                    .map(|(_, j, c)| (*j, c.clone())),
            )
        })
        .collect();
    Representation::new(h.dim(), mats)
}

/// Cocycle file: lines `theta a b c = v`, meaning `theta(a, b)(c) = v`.
pub fn parse_cocycle<F: Scalar>(text: &str, g: &LieSuperalgebra<F>) -> Result<Cocycle2<F>> {
    let entries = labeled_values::<F>(text, "theta", 3, g.space())?;
    Cocycle2::from_entries(
        g.dim(),
        entries.into_iter().map(|(i, v)| (i[0], i[1], i[2], v)),
    )
}

/// Pairing file: lines `phi a b c = v`, meaning `phi(a, b)(c) = v`.
pub fn parse_pairing<F: Scalar>(text: &str, g: &LieSuperalgebra<F>) -> Result<SymPairing<F>> {
    let entries = labeled_values::<F>(text, "phi", 3, g.space())?;
    SymPairing::from_entries(
        g.dim(),
        entries.into_iter().map(|(i, v)| (i[0], i[1], i[2], v)),
    )
}

/// Writes a map file for `map`.
pub fn emit_map<F: Scalar>(map: &GradedLinearMap<F>) -> String {
    let mut out = String::new();
    for j in 0..map.source().dim() {
        let col = map.matrix().column(j);
        let terms: Vec<String> = col
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c} {}", map.target().label(i)))
            .collect();
        if !terms.is_empty() {
            let _ = writeln!(out, "map {} = {}", map.source().label(j), terms.join(" + "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Complex, Rational};

    const G4: &str = "algebra g4\ndim_even 4\ndim_odd 0\nbackend exact\nbasis X P Q Z\n\
        bracket X P = 1 P\nbracket X Q = -1 Q\nbracket P Q = 1 Z\nform X Z = 1\nform P Q = 1\n";

    #[test]
    fn g4_round_trip() {
        let f = parse::<Rational>(G4).unwrap();
        assert!(f.algebra.is_verified());
        assert_eq!(emit(&f.algebra, &[]), G4);
    }

    #[test]
    fn both_orientations_rejected() {
        let text =
            "algebra a\ndim_even 2\ndim_odd 0\nbasis X P\nbracket P X = 1 P\nbracket X P = 1 P\n";
        let e = parse::<Rational>(text).unwrap_err();
        assert!(matches!(e, Error::At { line: 6, .. }), "{e}");
        assert!(matches!(e.root(), Error::Antisymmetry(_)), "{e}");
    }

    #[test]
    fn diagnostics_carry_positions() {
        let text = "algebra a\ndim_even 2\ndim_odd 0\nbasis X P\nbracket X P = 1 W\n";
        let e = parse::<Rational>(text).unwrap_err();
        assert_eq!(e.to_string(), "line 5, column 17: unknown basis label `W`");
        let e = parse::<Rational>("algebra a\nbasis X\n").unwrap_err();
        assert!(matches!(
            e,
            Error::At {
                line: 2,
                column: 1,
                ..
            }
        ));
        let e =
            parse::<Rational>("algebra a\ndim_even 1\ndim_odd 0\nbasis X\nbracket X X = 1/0 X\n")
                .unwrap_err();
        assert!(
            matches!(
                e,
                Error::At {
                    line: 5,
                    column: 15,
                    ..
                }
            ),
            "{e}"
        );
    }

    #[test]
    fn odd_form_inferred() {
        let text = "algebra go2\ndim_even 1\ndim_odd 1\nbasis X0 X1\nbracket X1 X1 = 2 X0\nform X0 X1 = 1\n";
        let f = parse::<Rational>(text).unwrap();
        assert_eq!(f.algebra.form_parity(), FormParity::Odd);
        assert!(f.algebra.is_verified());
    }

    #[test]
    fn complex_file() {
        let text = "algebra c\ndim_even 1\ndim_odd 0\nbackend complex\nbasis X\nform X X = 0+1i\n";
        assert!(parse::<Rational>(text).is_err());
        let f = parse::<Complex>(text).unwrap();
        assert_eq!(f.algebra.form().entry(0, 0), Complex::i());
        let again = parse::<Complex>(&emit(&f.algebra, &[])).unwrap();
        assert_eq!(again.algebra.form().entry(0, 0), Complex::i());
    }

    #[test]
    fn params_and_comments() {
        let text = "# family\nalgebra go2\nparam lambda = 2  # bound\ndim_even 1\ndim_odd 1\nbasis X0 X1\n";
        let f = parse::<Rational>(text).unwrap();
        assert_eq!(f.params, [("lambda".to_string(), "2".to_string())]);
    }

    #[test]
    fn map_and_cocycle_files() {
        let g4 = parse::<Rational>(G4).unwrap().algebra;
        let s = g4.algebra().space();
        let m = parse_map::<Rational>(
            "map X = 1 X\nmap P = 2 P\nmap Q = 1/2 Q\nmap Z = 1 Z\n",
            s,
            s,
        )
        .unwrap();
        assert_eq!(
            parse_map::<Rational>(&emit_map(&m), s, s).unwrap().matrix(),
            m.matrix()
        );
        let c = parse_endomorphism::<Rational>("map P = 1 P\nmap Q = -1 Q\n", s).unwrap();
        assert_eq!(
            c,
            crate::linalg::Matrix::diagonal(&[0, 1, -1, 0].map(Rational::from))
        );
        let e = parse_cocycle::<Rational>("theta X P = 1\n", g4.algebra()).unwrap_err();
        assert!(
            matches!(
                e,
                Error::At {
                    line: 1,
                    column: 11,
                    ..
                }
            ),
            "{e}"
        );
    }
}
