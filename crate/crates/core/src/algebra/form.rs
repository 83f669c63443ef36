use std::fmt;

use num_complex::Complex64;

use super::scalar::{format_c64, Scalar};
use crate::error::{Error, Result};

/// Variable selector for partial derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Homogeneous polynomial in `x, y` stored in the raw monomial basis:
/// `coeffs[k]` multiplies `x^(d-k) y^k`.
///
/// Public inputs are cubics or quartics; intermediate forms (partials,
/// eigenvector equations) may have other degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::CoefficientCount { expected: 1, got: 0 });
        }
        Ok(BinaryForm { coeffs })
    }

    /// A cubic or quartic; anything else is `UnsupportedDegree`.
    pub fn supported(coeffs: Vec<Scalar>) -> Result<Self> {
        let f = BinaryForm::new(coeffs)?;
        f.check_supported()?;
        Ok(f)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| Scalar::int(c)).collect()).expect("non-empty coefficient list")
    }

    pub fn from_f64s(coeffs: &[f64]) -> Result<Self> {
        BinaryForm::new(coeffs.iter().map(|&c| Scalar::real(c)).collect::<Result<_>>()?)
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![Scalar::zero(); degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn check_supported(&self) -> Result<usize> {
        match self.degree() {
            d @ (3 | 4) => Ok(d),
            d => Err(Error::UnsupportedDegree(d)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_exact)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_real)
    }

    pub fn to_float(&self) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(Scalar::to_float).collect() }
    }

    pub fn to_exact(&self) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(Scalar::to_exact).collect() }
    }

    pub fn to_c64(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(Scalar::to_c64).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(Scalar::abs).fold(0.0, f64::max)
    }

    pub fn evaluate(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let d = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * &(x.pow(d - k as u32) * y.pow(k as u32)))
            .fold(Scalar::zero(), |acc, t| acc + t)
    }

    /// Formal partial derivative; a degree-0 form differentiates to zero.
    pub fn partial(&self, var: Var) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        let coeffs = match var {
            Var::X => (0..d).map(|k| &self.coeffs[k] * &Scalar::int((d - k) as i64)).collect(),
            Var::Y => (1..=d).map(|k| &self.coeffs[k] * &Scalar::int(k as i64)).collect(),
        };
        BinaryForm { coeffs }
    }

    /// `x · self`, one degree higher.
    pub fn mul_x(&self) -> BinaryForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(Scalar::zero());
        BinaryForm { coeffs }
    }

    /// `y · self`, one degree higher.
    pub fn mul_y(&self) -> BinaryForm {
        let mut coeffs = vec![Scalar::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        BinaryForm { coeffs }
    }

    pub fn scale(&self, s: &Scalar) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Difference of two forms of equal degree.
    pub fn sub(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        BinaryForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }
}

fn monomial(d: usize, k: usize) -> String {
    let px = d - k;
    let mut s = String::new();
    match px {
        0 => {}
        1 => s.push('x'),
        p => s.push_str(&format!("x^{p}")),
    }
    match k {
        0 => {}
        1 => s.push('y'),
        p => s.push_str(&format!("y^{p}")),
    }
    s
}

impl fmt::Display for BinaryForm {
    /// Renders e.g. `x^3 + 6x^2y - 3/2xy^2`; complex coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut terms: Vec<(bool, String)> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = monomial(d, k);
            let (neg, mag) = if c.is_real() {
                let text = match c {
                    Scalar::Exact(g) => g.to_string(),
                    Scalar::Float(z) => format_c64(*z),
                };
                match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text),
                }
            } else {
                (false, format!("({c})"))
            };
            let body = if mag == "1" && !mono.is_empty() { mono } else { format!("{mag}{mono}") };
            terms.push((neg, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (neg, body)) in terms.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
