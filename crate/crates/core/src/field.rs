//! Scalar backends.
//!
//! Everything in the crate is generic over [`Scalar`], which has two
//! realizations: [`Rational`] (exact, arbitrary precision) and [`Complex`]
//! (a pair of `f64` with a global zero tolerance). The exact backend is the
//! default everywhere; the complex one exists for maps whose coefficients are
//! irrational, such as cube roots of parameters.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Default zero tolerance of the complex backend.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// Current zero tolerance of the complex backend.
pub fn tolerance() -> f64 {
    f64::from_bits(TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// Sets the zero tolerance used by [`Complex::is_zero`]. Non-finite or
/// negative values are ignored.
pub fn set_tolerance(tol: f64) {
    if tol.is_finite() && tol >= 0.0 {
        TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
    }
}

/// Which scalar realization a value or file uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Complex,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Complex => "complex",
        })
    }
}

impl FromStr for Backend {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Backend::Exact),
            "complex" => Ok(Backend::Complex),
            other => Err(ScalarParseError(format!("unknown backend `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar: {0}")]
pub struct ScalarParseError(pub String);

/// The field contract shared by both backends.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Sum
    + FromStr<Err = ScalarParseError>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    /// `num / den`; panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for (numerically) zero values.
    fn inv(&self) -> Option<Self>;
    /// Absolute value, used for pivoting and admissibility checks.
    fn magnitude(&self) -> f64;
    fn to_complex64(&self) -> Complex64;

    fn is_exact() -> bool {
        Self::BACKEND == Backend::Exact
    }

    fn is_one(&self) -> bool {
        (self.clone() - Self::one()).is_zero()
    }

    /// Equality up to the backend's notion of zero.
    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

// ---------------------------------------------------------------------------
// Exact rationals

/// Arbitrary-precision rational number, always stored reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ScalarParseError(format!("`{s}` is not a rational literal"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(ScalarParseError(format!("`{s}` has a zero denominator")));
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        if let Some((int, frac)) = s.split_once('.') {
            // Finite decimals are read exactly.
            let negative = int.trim_start().starts_with('-');
            let int_digits = int.trim_start_matches(['-', '+']);
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let whole: BigInt = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                int_digits.parse().map_err(|_| err())?
            };
            let frac_num: BigInt = frac.parse().map_err(|_| err())?;
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let mut value = BigRational::new(whole * &scale + frac_num, scale);
            if negative {
                value = -value;
            }
            return Ok(Rational(value));
        }
        let n: BigInt = s.parse().map_err(|_| err())?;
        Ok(Rational(BigRational::from_integer(n)))
    }
}

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $method:ident, $assign_tr:ident, $assign:ident, $op:tt) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                $ty(&self.0 $op &rhs.0)
            }
        }
        impl $assign_tr for $ty {
            fn $assign(&mut self, rhs: $ty) {
                self.0 = std::mem::take(&mut self.0) $op rhs.0;
            }
        }
    };
}

forward_binop!(Rational, Add, add, AddAssign, add_assign, +);
forward_binop!(Rational, Sub, sub, SubAssign, sub_assign, -);
forward_binop!(Rational, Mul, mul, MulAssign, mul_assign, *);

impl Default for Rational {
    fn default() -> Self {
        Rational(BigRational::zero())
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Scalar for Rational {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(n: i64) -> Self {
        n.into()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(num, den)
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }

    fn magnitude(&self) -> f64 {
        self.0.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

// ---------------------------------------------------------------------------
// Complex floats

/// Complex number in double precision. Zero means `|z| <= tolerance()`.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Complex(pub Complex64);

impl Complex {
    pub fn new(re: f64, im: f64) -> Self {
        Complex(Complex64::new(re, im))
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn i() -> Self {
        Complex::new(0.0, 1.0)
    }

    /// Principal cube root.
    pub fn cbrt(&self) -> Self {
        if self.0.im == 0.0 && self.0.re >= 0.0 {
            return Complex::new(self.0.re.cbrt(), 0.0);
        }
        Complex(self.0.cbrt())
    }

    pub fn sqrt(&self) -> Self {
        Complex(self.0.sqrt())
    }

    pub fn powf(&self, e: f64) -> Self {
        Complex(self.0.powf(e))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.0.re, self.0.im);
        if im.is_sign_negative() {
            write!(f, "{re}-{}i", -im)
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}

impl FromStr for Complex {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || ScalarParseError(format!("`{s}` is not a complex literal"));
        if t.is_empty() {
            return Err(err());
        }
        let real = |p: &str| -> Result<f64, ScalarParseError> {
            if p.contains('/') {
                return p.parse::<Rational>().map(|q| q.to_f64());
            }
            p.parse::<f64>().map_err(|_| err())
        };
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Complex::new(real(&t)?, 0.0));
        };
        // Split at the last sign that is not part of an exponent.
        let bytes = body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&k| {
            (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E')
        });
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            p => real(p)?,
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            real(re_part)?
        };
        Ok(Complex::new(re, im))
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex(self.0 + rhs.0)
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex(self.0 - rhs.0)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex(self.0 * rhs.0)
    }
}

impl Div for Complex {
    type Output = Complex;
    fn div(self, rhs: Complex) -> Complex {
        Complex(self.0 / rhs.0)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex(-self.0)
    }
}

impl AddAssign for Complex {
    fn add_assign(&mut self, rhs: Complex) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Complex {
    fn sub_assign(&mut self, rhs: Complex) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Complex {
    fn mul_assign(&mut self, rhs: Complex) {
        self.0 *= rhs.0;
    }
}

impl Sum for Complex {
    fn sum<I: Iterator<Item = Complex>>(iter: I) -> Complex {
        iter.fold(Complex::default(), |acc, x| acc + x)
    }
}

impl Scalar for Complex {
    const BACKEND: Backend = Backend::Complex;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }

    fn from_i64(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex::new(num as f64 / den as f64, 0.0)
    }

    fn from_rational(q: &Rational) -> Self {
        Complex::new(q.to_f64(), 0.0)
    }

    fn is_zero(&self) -> bool {
        self.0.norm() <= tolerance()
    }

    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Complex(self.0.inv()))
    }

    fn magnitude(&self) -> f64 {
        self.0.norm()
    }

    fn to_complex64(&self) -> Complex64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rationals_are_reduced_and_print_compactly() {
        assert_eq!(q(2, 4).to_string(), "1/2");
        assert_eq!(q(-6, 3).to_string(), "-2");
        assert_eq!(q(3, -9).to_string(), "-1/3");
        assert_eq!(q(2, 4), q(1, 2));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!("7/-14".parse::<Rational>().unwrap(), q(-1, 2));
        assert_eq!(" 5 ".parse::<Rational>().unwrap(), q(5, 1));
        assert_eq!("-0.25".parse::<Rational>().unwrap(), q(-1, 4));
        assert_eq!("1.5".parse::<Rational>().unwrap(), q(3, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("1.".parse::<Rational>().is_err());
    }

    #[test]
    fn complex_parsing() {
        let c: Complex = "1.5-2i".parse().unwrap();
        assert_eq!(c, Complex::new(1.5, -2.0));
        assert_eq!("-i".parse::<Complex>().unwrap(), Complex::new(0.0, -1.0));
        assert_eq!("3".parse::<Complex>().unwrap(), Complex::new(3.0, 0.0));
        assert_eq!(
            "1e-3+2e5i".parse::<Complex>().unwrap(),
            Complex::new(1e-3, 2e5)
        );
        assert_eq!("2.5i".parse::<Complex>().unwrap(), Complex::new(0.0, 2.5));
        assert_eq!("1/4".parse::<Complex>().unwrap(), Complex::new(0.25, 0.0));
        assert_eq!(
            "-1e-3-1e-3i".parse::<Complex>().unwrap(),
            Complex::new(-1e-3, -1e-3)
        );
        assert!("1+2j".parse::<Complex>().is_err());
    }

    #[test]
    fn complex_zero_uses_tolerance() {
        assert!(Complex::new(1e-12, -1e-12).is_zero());
        assert!(!Complex::new(1e-6, 0.0).is_zero());
        assert!(Complex::new(1e-12, 0.0).inv().is_none());
    }

    #[test]
    fn cube_roots() {
        let r = Complex::new(8.0, 0.0).cbrt();
        assert!(r.approx_eq(&Complex::new(2.0, 0.0)));
        let z = Complex::new(-1.0, 2.0);
        let c = z.cbrt();
        assert!((c * c * c).approx_eq(&z));
    }

    #[test]
    fn backend_tags() {
        assert!(Rational::is_exact());
        assert!(!Complex::is_exact());
        assert_eq!("complex".parse::<Backend>().unwrap(), Backend::Complex);
        assert_eq!(Backend::Exact.to_string(), "exact");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| Rational::new(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn exact_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!(a.clone() + (b.clone() + c.clone()), (a.clone() + b.clone()) + c.clone());
            prop_assert_eq!(a.clone() * (b.clone() * c.clone()), (a.clone() * b.clone()) * c.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            if let Some(ai) = a.inv() {
                prop_assert!((a.clone() * ai).is_one());
            }
        }

        #[test]
        fn rational_display_roundtrips(a in small_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }

        #[test]
        fn complex_display_roundtrips(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let z = Complex::new(re, im);
            let back: Complex = z.to_string().parse().unwrap();
            prop_assert_eq!(back.re().to_bits(), re.to_bits());
            prop_assert_eq!(back.im().to_bits(), im.to_bits());
        }
    }
}
