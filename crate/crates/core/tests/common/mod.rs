//! Brute-force oracles over dense structure-constant tables. Nothing here
//! calls the library's checkers; only raw table entries and the linear
//! algebra primitives are read from it.
#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use superquad::{Matrix, QuadraticAlgebra, Rational, Scalar};

/// `c[(i * n + j) * n + k]` is the coefficient of `e_k` in `[e_i, e_j]`.
#[derive(Clone, Debug)]
pub struct Dense<F> {
    pub n: usize,
    pub parity: Vec<u8>,
    pub c: Vec<F>,
    pub gram: Vec<F>,
}

impl<F: Scalar> Dense<F> {
    pub fn of(q: &QuadraticAlgebra<F>) -> Self {
        let a = q.algebra();
        let n = a.dim();
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c.push(a.structure_constant(i, j, k));
                }
            }
        }
        let g = q.form().gram();
        let gram = (0..n * n).map(|x| g[(x / n, x % n)].clone()).collect();
        Dense {
            n,
            parity: (0..n).map(|i| a.parity(i)).collect(),
            c,
            gram,
        }
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[(i * self.n + j) * self.n + k]
    }

    pub fn g(&self, i: usize, j: usize) -> &F {
        &self.gram[i * self.n + j]
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.n;
        let mut out = vec![F::zero(); n];
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let s = x[i].clone() * y[j].clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    pub fn pair(&self, x: &[F], y: &[F]) -> F {
        let mut s = F::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                s += xi.clone() * self.g(i, j).clone() * yj.clone();
            }
        }
        s
    }

    pub fn unit(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.n];
        v[i] = F::one();
        v
    }

    fn sign(&self, a: usize, b: usize) -> F {
        if self.parity[a] * self.parity[b] == 1 {
            -F::one()
        } else {
            F::one()
        }
    }

    /// Every entry of the graded Jacobi sum, of graded antisymmetry and of
    /// the parity rule `|[e_i, e_j]| = |e_i| + |e_j|`.
    pub fn bracket_defects(&self) -> Vec<F> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let anti = self.c(i, j, k).clone() + self.sign(i, j) * self.c(j, i, k).clone();
                    out.push(anti);
                    if (self.parity[i] + self.parity[j]) % 2 != self.parity[k] {
                        out.push(self.c(i, j, k).clone());
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (ex, ey, ez) = (self.unit(x), self.unit(y), self.unit(z));
                    let t1 = self.bracket(&ex, &self.bracket(&ey, &ez));
                    let t2 = self.bracket(&ey, &self.bracket(&ez, &ex));
                    let t3 = self.bracket(&ez, &self.bracket(&ex, &ey));
                    let (s1, s2, s3) = (self.sign(x, z), self.sign(y, x), self.sign(z, y));
                    for k in 0..n {
                        out.push(
                            s1.clone() * t1[k].clone()
                                + s2.clone() * t2[k].clone()
                                + s3.clone() * t3[k].clone(),
                        );
                    }
                }
            }
        }
        out
    }

    /// Supersymmetry, invariance `B([x,y],z) = B(x,[y,z])` and the parity of
    /// the form (`odd` for odd forms).
    pub fn form_defects(&self, odd: bool) -> Vec<F> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                out.push(self.g(j, i).clone() - self.sign(i, j) * self.g(i, j).clone());
                let same = self.parity[i] == self.parity[j];
                if same == odd {
                    out.push(self.g(i, j).clone());
                }
                for k in 0..n {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    out.push(
                        self.pair(&self.bracket(&ei, &ej), &ek)
                            - self.pair(&ei, &self.bracket(&ej, &ek)),
                    );
                }
            }
        }
        out
    }

    pub fn form_rank(&self) -> usize {
        Matrix::from_fn(self.n, self.n, |i, j| self.g(i, j).clone()).rank()
    }

    /// `A[x,y] - [Ax,Ay]` on basis pairs and, when `tgt_gram` is used,
    /// `B'(Ax,Ay) - B(x,y)`. `a` holds images as columns.
    pub fn map_defects(&self, tgt: &Dense<F>, a: &Matrix<F>, isometric: bool) -> Vec<F> {
        let img = |i: usize| a.column(i);
        let apply = |v: &[F]| a.apply(v);
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let lhs = apply(&self.bracket(&self.unit(i), &self.unit(j)));
                let rhs = tgt.bracket(&img(i), &img(j));
                out.extend(lhs.into_iter().zip(rhs).map(|(p, q)| p - q));
                if isometric {
                    out.push(tgt.pair(&img(i), &img(j)) - self.g(i, j).clone());
                }
            }
        }
        out
    }
}

pub fn all_zero<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn max_magnitude<F: Scalar>(v: &[F]) -> f64 {
    v.iter().map(Scalar::magnitude).fold(0.0, f64::max)
}

/// Rank of the span of `vectors` (all of length `n`).
pub fn span_rank<F: Scalar>(n: usize, vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_fn(vectors.len(), n, |r, c| vectors[r][c].clone()).rank()
}

pub fn same_span<F: Scalar>(n: usize, a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    let both: Vec<Vec<F>> = a.iter().chain(b).cloned().collect();
    let r = span_rank(n, &both);
    r == span_rank(n, a) && r == span_rank(n, b)
}

/// Dimension of the skew-symmetric derivations of a purely even algebra,
/// by solving the Leibniz and skewness equations entry by entry. Unknown
/// `D[a][j]` (image of `e_j` has coefficient `D[a][j]` on `e_a`) is column
/// `a * n + j`.
pub fn skew_derivation_dim(t: &Dense<Rational>) -> usize {
    let n = t.n;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let var = |a: usize, j: usize| a * n + j;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for m in 0..n {
                    row[var(k, m)] += t.c(i, j, m).clone();
                    row[var(m, i)] -= t.c(m, j, k).clone();
                    row[var(m, j)] -= t.c(i, m, k).clone();
                }
                rows.push(row);
            }
            let mut row = vec![Rational::zero(); n * n];
            for a in 0..n {
                row[var(a, i)] += t.g(a, j).clone();
                row[var(a, j)] += t.g(i, a).clone();
            }
            rows.push(row);
        }
    }
    n * n - span_rank(n * n, &rows)
}

/// Center as the kernel of `x -> ([x, e_j])_j`, and the derived algebra as
/// the span of all basis brackets.
pub fn center_and_derived(t: &Dense<Rational>) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let n = t.n;
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| t.c(i, j, k).clone()).collect::<Vec<_>>());
        }
    }
    let center = Matrix::from_fn(rows.len(), n, |r, c| rows[r][c].clone()).nullspace();
    let mut derived = Vec::new();
    for i in 0..n {
        for j in 0..n {
            derived.push((0..n).map(|k| t.c(i, j, k).clone()).collect::<Vec<_>>());
        }
    }
    (center, derived)
}

/// `{x : B(x, d) = 0 for all d in vectors}`.
pub fn perp(t: &Dense<Rational>, vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = t.n;
    if vectors.is_empty() {
        return (0..n).map(|i| t.unit(i)).collect();
    }
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|d| (0..n).map(|i| t.pair(&t.unit(i), d)).collect())
        .collect();
    Matrix::from_fn(rows.len(), n, |r, c| rows[r][c].clone()).nullspace()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::new(rng.random_range(-bound..=bound), rng.random_range(1..=4))
}

pub fn shipped(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../algebras")
        .join(name)
}
