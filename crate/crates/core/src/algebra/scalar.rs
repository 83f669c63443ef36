//! Complex scalars in two arithmetic modes.
//!
//! `Scalar::Exact` holds a Gaussian rational `p/q + (r/s)i` with both parts in
//! lowest terms. `Scalar::Float` holds a finite `Complex64`. Mixed arithmetic
//! promotes to float, so an exact constant times a float coefficient stays a
//! float while all-exact computations never round.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `re + im·i` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GaussianRational::new(BigRational::new(p.into(), q.into()), BigRational::zero())
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        GaussianRational::from_integer(0)
    }

    pub fn one() -> Self {
        GaussianRational::from_integer(1)
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    /// Exact conversion of a finite double (every double is a dyadic rational).
    pub fn from_f64(x: f64) -> Result<Self> {
        let re = BigRational::from_float(x).ok_or(Error::NonFinite)?;
        Ok(GaussianRational::from_real(re))
    }

    pub fn from_c64(z: Complex64) -> Result<Self> {
        let re = BigRational::from_float(z.re).ok_or(Error::NonFinite)?;
        let im = BigRational::from_float(z.im).ok_or(Error::NonFinite)?;
        Ok(GaussianRational::new(re, im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussianRational::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Parses `p/q`, decimals, `r/si`, `i`, and sums like `1/2-3/4i`.
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidScalar(text.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from_real(parse_real(&s).ok_or_else(bad)?));
        };
        // split at the last sign that is not a leading sign or an exponent sign
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                split = Some(k);
                break;
            }
        }
        let (re_text, im_text) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_text.is_empty() { BigRational::zero() } else { parse_real(re_text).ok_or_else(bad)? };
        let im = match im_text {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_real(t).ok_or_else(bad)?,
        };
        Ok(GaussianRational::new(re, im))
    }
}

/// Parses an optionally signed rational `p/q` or decimal (with optional exponent).
pub(crate) fn parse_real(s: &str) -> Option<BigRational> {
    if let Some((p, q)) = s.split_once('/') {
        let num = parse_decimal(p)?;
        let den = parse_decimal(q)?;
        if den.is_zero() {
            return None;
        }
        return Some(num / den);
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, rest) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exp) = match rest.find(['e', 'E']) {
        Some(k) => (&rest[..k], rest[k + 1..].parse::<i32>().ok()?),
        None => (rest, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = digits.parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        value = -value;
    }
    Some(value)
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| if r.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

pub(crate) fn fmt_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_ratio(&self.re));
        }
        let im_abs = self.im.abs();
        let im_text = if im_abs.is_one() { String::new() } else { fmt_ratio(&im_abs) };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{lead}{im_text}i")
        } else {
            write!(f, "{}{sign}{im_text}i", fmt_ratio(&self.re))
        }
    }
}

macro_rules! gauss_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

gauss_binop!(Add, add, |a, b| GaussianRational::new(&a.re + &b.re, &a.im + &b.im));
gauss_binop!(Sub, sub, |a, b| GaussianRational::new(&a.re - &b.re, &a.im - &b.im));
gauss_binop!(Mul, mul, |a, b| match (a.im.is_zero(), b.im.is_zero()) {
    (true, true) => GaussianRational::from_real(&a.re * &b.re),
    (true, false) => GaussianRational::new(&a.re * &b.re, &a.re * &b.im),
    (false, true) => GaussianRational::new(&a.re * &b.re, &a.im * &b.re),
    (false, false) => GaussianRational::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re),
});
gauss_binop!(Div, div, |a, b| a * &b.recip().expect("division by exact zero"));

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

/// A complex number in float or exact mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Float(Complex64),
    Exact(GaussianRational),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(GaussianRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(GaussianRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Exact(GaussianRational::from_integer(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::Exact(GaussianRational::from_ratio(p, q))
    }

    pub fn i() -> Self {
        Scalar::Exact(GaussianRational::i())
    }

    /// Float scalar; rejects NaN and infinities.
    pub fn float(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Scalar::Float(Complex64::new(re, im)))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn real(x: f64) -> Result<Self> {
        Scalar::float(x, 0.0)
    }

    pub fn from_c64(z: Complex64) -> Result<Self> {
        Scalar::float(z.re, z.im)
    }

    /// Parses an exact literal such as `-3/2`, `0.25`, `1/2+3/4i`.
    pub fn parse(text: &str) -> Result<Self> {
        GaussianRational::parse(text).map(Scalar::Exact)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Literal zero test (no tolerance in float mode).
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Float(z) => z.re == 0.0 && z.im == 0.0,
            Scalar::Exact(g) => g.is_zero(),
        }
    }

    /// Literal realness test.
    pub fn is_real(&self) -> bool {
        match self {
            Scalar::Float(z) => z.im == 0.0,
            Scalar::Exact(g) => g.is_real(),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Scalar::Float(z) => *z,
            Scalar::Exact(g) => g.to_c64(),
        }
    }

    pub fn abs(&self) -> f64 {
        self.to_c64().norm()
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Float(z) => Scalar::Float(z.conj()),
            Scalar::Exact(g) => Scalar::Exact(g.conj()),
        }
    }

    pub fn to_float(&self) -> Self {
        Scalar::Float(self.to_c64())
    }

    /// Exact copy; floats convert to their exact dyadic value.
    pub fn to_exact(&self) -> Self {
        match self {
            Scalar::Float(z) => Scalar::Exact(GaussianRational::from_c64(*z).expect("float scalars are finite")),
            Scalar::Exact(_) => self.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&GaussianRational> {
        match self {
            Scalar::Exact(g) => Some(g),
            Scalar::Float(_) => None,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Equality up to `rel_tol` relative to the larger magnitude; literal for
    /// two exact scalars.
    pub fn approx_eq(&self, other: &Scalar, rel_tol: f64) -> bool {
        if let (Scalar::Exact(a), Scalar::Exact(b)) = (self, other) {
            return a == b;
        }
        let (a, b) = (self.to_c64(), other.to_c64());
        (a - b).norm() <= rel_tol * (1.0 + a.norm().max(b.norm()))
    }
}

impl From<GaussianRational> for Scalar {
    fn from(g: GaussianRational) -> Self {
        Scalar::Exact(g)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(g) => write!(f, "{g}"),
            Scalar::Float(z) => write!(f, "{}", format_c64(*z)),
        }
    }
}

/// Formats a float with 12 significant digits, trimming trailing zeros.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 || x.abs() < 1e-300 {
        return "0".to_string();
    }
    let s = format!("{:.*e}", 11, x);
    let (mant, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let plain = format!("{:.*}", decimals, x);
        trim_zeros(&plain)
    } else {
        format!("{}e{}", trim_zeros(mant), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" {
            "0".to_string()
        } else {
            t.to_string()
        }
    } else {
        s.to_string()
    }
}

/// Human-readable complex float, e.g. `0.75+1.98431348329844i`.
pub fn format_c64(z: Complex64) -> String {
    let scale = z.re.abs().max(z.im.abs());
    let re = if z.re.abs() <= 1e-13 * scale { 0.0 } else { z.re };
    let im = if z.im.abs() <= 1e-13 * scale { 0.0 } else { z.im };
    if im == 0.0 {
        return format_f64(re);
    }
    let im_text = format_f64(im.abs());
    let im_text = if im_text == "1" { String::new() } else { im_text };
    if re == 0.0 {
        let lead = if im < 0.0 { "-" } else { "" };
        format!("{lead}{im_text}i")
    } else {
        let sign = if im < 0.0 { "-" } else { "+" };
        format!("{}{sign}{im_text}i", format_f64(re))
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.$method(b)),
                    _ => Scalar::Float(self.to_c64().$method(rhs.to_c64())),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Float(z) => Scalar::Float(-z),
            Scalar::Exact(g) => Scalar::Exact(-g),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}
