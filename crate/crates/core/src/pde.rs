//! Principal parts of constant-coefficient linear PDEs of order 3 and 4 in
//! two variables, mapped one-to-one onto binary forms.
//!
//! Text grammar (whitespace is ignored):
//!
//! ```text
//! equation := sum [ "=" <anything> ]
//! sum      := [sign] term { sign term }
//! term     := [number ["*"]] ( "U_" {x|y}+ | "U" | factor+ "U" )   or a bare number
//! factor   := "∂" (x|y) [power] | "(" opsum ")" [power]
//! power    := superscript digits | "^" digits
//! number   := decimal | decimal "/" decimal
//! sign     := "+" | "-" | "−"
//! ```
//!
//! So `3*U_xyy`, `3U_yxy` and `3∂x∂y²U` denote the same term, and
//! `(∂x²+∂y²)²U` expands to `U_xxxx + 2*U_xxyy + U_yyyy`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    fmt_ratio, parse_real, transform_coeffs_closed, BinaryForm, GaussianRational, Scalar, Transform2,
};
use crate::classify::{classify_real_cubic, classify_real_quartic, RealType};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// `coeffs[k]` multiplies `∂x^(order−k) ∂y^k U`.
#[derive(Clone, Debug, PartialEq)]
pub struct PdePrincipal {
    order: usize,
    coeffs: Vec<Scalar>,
    lower: bool,
}

impl PdePrincipal {
    pub fn new(order: usize, coeffs: Vec<Scalar>, lower: bool) -> Result<Self> {
        if order != 3 && order != 4 {
            return Err(Error::UnsupportedOrder(order));
        }
        if coeffs.len() != order + 1 {
            return Err(Error::CoefficientCount { expected: order + 1, got: coeffs.len() });
        }
        if !coeffs.iter().all(Scalar::is_real) {
            return Err(Error::NonRealCoefficient);
        }
        Ok(PdePrincipal { order, coeffs, lower })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// True when the source contained lower-order terms (collected into Φ).
    pub fn has_lower_order(&self) -> bool {
        self.lower
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn to_float(&self) -> Self {
        PdePrincipal { coeffs: self.coeffs.iter().map(Scalar::to_float).collect(), ..self.clone() }
    }

    /// The same principal part with the lower-order flag replaced.
    pub fn with_lower_order(mut self, lower: bool) -> Self {
        self.lower = lower;
        self
    }
}

impl fmt::Display for PdePrincipal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_pde(self))
    }
}

/// Classification of a principal part under real coordinate changes.
#[derive(Clone, Debug, PartialEq)]
pub struct PdeReport {
    pub real_type: RealType,
    pub canonical_text: String,
    pub mu: Option<Scalar>,
}

impl fmt::Display for PdeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Type {}, canonical: {}", self.real_type.type_id, self.canonical_text)?;
        if let Some(mu) = &self.mu {
            write!(f, " with μ={mu}")?;
        }
        Ok(())
    }
}

type OpPoly = BTreeMap<(usize, usize), BigRational>;

fn monomial(i: usize, j: usize, c: BigRational) -> OpPoly {
    BTreeMap::from([((i, j), c)])
}

fn op_add(acc: &mut OpPoly, p: OpPoly, sign: &BigRational) {
    for (k, c) in p {
        let slot = acc.entry(k).or_insert_with(BigRational::zero);
        *slot += c * sign;
    }
}

fn op_mul(a: &OpPoly, b: &OpPoly) -> OpPoly {
    let mut out = OpPoly::new();
    for (&(i1, j1), c1) in a {
        for (&(i2, j2), c2) in b {
            let slot = out.entry((i1 + i2, j1 + j2)).or_insert_with(BigRational::zero);
            *slot += c1 * c2;
        }
    }
    out
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴'..='⁹' => Some(c as u32 - '⁴' as u32 + 4),
        _ => None,
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|d| DIGITS[d.to_digit(10).expect("decimal digit") as usize]).collect()
}

/// One parsed top-level term.
struct Term {
    poly: OpPoly,
    /// False for bare numbers (source terms), true when `U` is differentiated.
    derivative: bool,
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    idx: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { text, chars, idx: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.text.len(), |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.idx += 1;
        c
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn sign(&mut self) -> Option<BigRational> {
        match self.peek()? {
            '+' => {
                self.bump();
                Some(BigRational::one())
            }
            '-' | '−' => {
                self.bump();
                Some(-BigRational::one())
            }
            _ => None,
        }
    }

    fn number(&mut self) -> Result<Option<BigRational>> {
        let start = self.idx;
        let mut s = String::new();
        let take_digits = |p: &mut Self, s: &mut String| {
            while let Some(c) = p.peek().filter(|c| c.is_ascii_digit() || *c == '.') {
                s.push(c);
                p.bump();
            }
        };
        take_digits(self, &mut s);
        if s.is_empty() {
            return Ok(None);
        }
        if self.peek() == Some('/') {
            s.push('/');
            self.bump();
            take_digits(self, &mut s);
        }
        if self.peek() == Some('i') {
            return Err(Error::NonRealCoefficient);
        }
        match parse_real(&s) {
            Some(v) => Ok(Some(v)),
            None => {
                self.idx = start;
                self.error(format!("invalid number `{s}`"))
            }
        }
    }

    fn power(&mut self) -> Result<usize> {
        if self.peek() == Some('^') {
            self.bump();
            let mut n = 0usize;
            let mut any = false;
            while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
                n = n.saturating_mul(10).saturating_add(d as usize);
                any = true;
                self.bump();
            }
            return if any { Ok(n) } else { self.error("expected an exponent after `^`") };
        }
        let mut n = None;
        while let Some(d) = self.peek().and_then(superscript_digit) {
            n = Some(n.unwrap_or(0usize).saturating_mul(10).saturating_add(d as usize));
            self.bump();
        }
        Ok(n.unwrap_or(1))
    }

    fn factor(&mut self) -> Result<OpPoly> {
        match self.peek() {
            Some('∂') => {
                self.bump();
                let (i, j) = match self.peek() {
                    Some('x') => (1, 0),
                    Some('y') => (0, 1),
                    _ => return self.error("expected `x` or `y` after `∂`"),
                };
                self.bump();
                let n = self.power()?;
                if n > 4 {
                    return Err(Error::UnsupportedOrder(n));
                }
                Ok(monomial(i * n, j * n, BigRational::one()))
            }
            Some('(') => {
                self.bump();
                let inner = self.op_sum()?;
                if self.bump() != Some(')') {
                    self.idx -= 1;
                    return self.error("expected `)`");
                }
                let n = self.power()?;
                if n > 4 {
                    return Err(Error::UnsupportedOrder(n));
                }
                let mut out = monomial(0, 0, BigRational::one());
                for _ in 0..n {
                    out = op_mul(&out, &inner);
                }
                Ok(out)
            }
            _ => self.error("expected `∂` or `(`"),
        }
    }

    fn factors(&mut self) -> Result<Option<OpPoly>> {
        let mut acc: Option<OpPoly> = None;
        while matches!(self.peek(), Some('∂') | Some('(')) {
            let f = self.factor()?;
            acc = Some(match acc {
                Some(a) => op_mul(&a, &f),
                None => f,
            });
        }
        Ok(acc)
    }

    fn op_sum(&mut self) -> Result<OpPoly> {
        let mut acc = OpPoly::new();
        let mut sign = self.sign().unwrap_or_else(BigRational::one);
        loop {
            let coef = self.coefficient()?;
            let term = match (coef, self.factors()?) {
                (Some(c), Some(f)) => op_mul(&monomial(0, 0, c), &f),
                (Some(c), None) => monomial(0, 0, c),
                (None, Some(f)) => f,
                (None, None) => return self.error("expected an operator term"),
            };
            op_add(&mut acc, term, &sign);
            match self.sign() {
                Some(s) => sign = s,
                None => return Ok(acc),
            }
        }
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>> {
        if self.peek() == Some('i') {
            return Err(Error::NonRealCoefficient);
        }
        let c = self.number()?;
        if c.is_some() && self.peek() == Some('*') {
            self.bump();
        }
        Ok(c)
    }

    fn term(&mut self) -> Result<Term> {
        let coef = self.coefficient()?;
        let poly = match self.peek() {
            Some('U') => {
                self.bump();
                let (mut i, mut j) = (0, 0);
                if self.peek() == Some('_') {
                    self.bump();
                    while let Some(c) = self.peek().filter(|c| *c == 'x' || *c == 'y') {
                        if c == 'x' {
                            i += 1;
                        } else {
                            j += 1;
                        }
                        self.bump();
                    }
                    if i + j == 0 {
                        return self.error("expected derivative letters `x`/`y` after `U_`");
                    }
                }
                Some(monomial(i, j, BigRational::one()))
            }
            Some('∂') | Some('(') => {
                let ops = self.factors()?.expect("at least one factor");
                if self.peek() != Some('U') {
                    return self.error("expected `U` after the differential operator");
                }
                self.bump();
                Some(ops)
            }
            _ => None,
        };
        match (coef, poly) {
            (Some(c), Some(p)) => Ok(Term { poly: op_mul(&monomial(0, 0, c), &p), derivative: true }),
            (None, Some(p)) => Ok(Term { poly: p, derivative: true }),
            (Some(c), None) => Ok(Term { poly: monomial(0, 0, c), derivative: false }),
            (None, None) => match self.peek() {
                Some(c) if c.is_alphabetic() => {
                    self.error(format!("unexpected `{c}`: only constant coefficients are supported"))
                }
                Some(c) => self.error(format!("unexpected `{c}`")),
                None => self.error("unexpected end of input"),
            },
        }
    }

    fn equation(&mut self) -> Result<Vec<(BigRational, Term)>> {
        if self.peek().is_none() {
            return self.error("empty input");
        }
        let mut terms = Vec::new();
        let mut sign = self.sign().unwrap_or_else(BigRational::one);
        loop {
            terms.push((sign, self.term()?));
            match self.sign() {
                Some(s) => sign = s,
                None => break,
            }
        }
        match self.peek() {
            None | Some('=') => Ok(terms),
            Some(c) => self.error(format!("unexpected `{c}`")),
        }
    }
}

/// Parses the principal part of a PDE; see the module documentation for the
/// grammar. The order is the highest derivative order written; lower-order
/// terms set the lower-order flag and are dropped.
pub fn parse_pde(text: &str) -> Result<PdePrincipal> {
    let terms = Parser::new(text).equation()?;
    let mut total = OpPoly::new();
    let mut max_order: Option<usize> = None;
    let mut source = false;
    for (sign, term) in terms {
        if term.derivative {
            for &(i, j) in term.poly.keys() {
                max_order = Some(max_order.map_or(i + j, |m| m.max(i + j)));
            }
            op_add(&mut total, term.poly, &sign);
        } else if term.poly.values().any(|c| !c.is_zero()) {
            source = true;
        }
    }
    let order = match max_order {
        Some(m) => m,
        None if !source => 3,
        None => return Err(Error::UnsupportedOrder(0)),
    };
    if order != 3 && order != 4 {
        return Err(Error::UnsupportedOrder(order));
    }
    let lower = source || total.keys().any(|&(i, j)| i + j < order);
    let coeffs = (0..=order)
        .map(|k| {
            let c = total.get(&(order - k, k)).cloned().unwrap_or_else(BigRational::zero);
            Scalar::Exact(GaussianRational::from_real(c))
        })
        .collect();
    PdePrincipal::new(order, coeffs, lower)
}

/// `∂x^i ∂y^j U ↔ x^i y^j` coefficient by coefficient.
pub fn pde_to_form(p: &PdePrincipal) -> BinaryForm {
    BinaryForm::new(p.coeffs.clone()).expect("non-empty")
}

/// Inverse of [`pde_to_form`] for real cubics and quartics.
pub fn form_to_pde(f: &BinaryForm) -> Result<PdePrincipal> {
    let order = f.check_supported().map_err(|_| Error::UnsupportedOrder(f.degree()))?;
    PdePrincipal::new(order, f.coeffs().to_vec(), false)
}

/// Real equivalence type of the principal part with its canonical operator.
pub fn classify_pde(p: &PdePrincipal, tol: &Tolerances) -> Result<PdeReport> {
    let f = pde_to_form(p);
    let real_type = match p.order {
        3 => classify_real_cubic(&f, tol)?,
        _ => classify_real_quartic(&f, tol)?,
    };
    let canonical_text = canonical_pde_text(real_type.type_id, p.order)?.to_string();
    let mu = real_type.mu.clone();
    Ok(PdeReport { real_type, canonical_text, mu })
}

/// Canonical operator of a real type, leading coefficient normalized to 1;
/// parametric rows keep the symbol `μ`.
pub fn canonical_pde_text(type_id: usize, order: usize) -> Result<&'static str> {
    let text = match (order, type_id) {
        (3 | 4, 1) => "0 = Φ",
        (3, 2) => "∂x³U = Φ",
        (3, 3) => "∂x³U+∂y³U = Φ",
        (3, 4) => "∂x³U−3∂x∂y²U = Φ",
        (3, 5) => "∂x²∂yU = Φ",
        (4, 2) => "∂x⁴U = Φ",
        (4, 3 | 4) => "∂x⁴U+6μ∂x²∂y²U+∂y⁴U = Φ",
        (4, 5) => "∂x⁴U+6μ∂x²∂y²U−∂y⁴U = Φ",
        (4, 6) => "∂x⁴U+6∂x²∂y²U = Φ",
        (4, 7) => "∂x⁴U−6∂x²∂y²U = Φ",
        (4, 8) => "∂x²∂y²U = Φ",
        (4, 9) => "(∂x²+∂y²)²U = Φ",
        (4, 10) => "∂x³∂yU = Φ",
        (3 | 4, _) => return Err(Error::InvalidType { type_id, order, domain: "real" }),
        _ => return Err(Error::UnsupportedOrder(order)),
    };
    Ok(text)
}

/// Coefficients after the real change of variables `x = p11·u + p12·v`,
/// `y = p21·u + p22·v`, through the closed coefficient formulas.
pub fn transform_pde(p: &PdePrincipal, t: &Transform2) -> Result<PdePrincipal> {
    if !t.is_real() {
        return Err(Error::NonRealTransform);
    }
    let g = transform_coeffs_closed(&pde_to_form(p), t)?;
    PdePrincipal::new(p.order, g.coeffs().to_vec(), p.lower)
}

fn derivative_text(order: usize, k: usize) -> String {
    format!("U_{}{}", "x".repeat(order - k), "y".repeat(k))
}

fn unicode_derivative(order: usize, k: usize) -> String {
    let part = |var: char, n: usize| match n {
        0 => String::new(),
        1 => format!("∂{var}"),
        n => format!("∂{var}{}", superscript(n)),
    };
    format!("{}{}U", part('x', order - k), part('y', k))
}

/// Magnitude text and sign of a real coefficient.
fn coefficient_text(c: &Scalar) -> (String, bool) {
    match c {
        Scalar::Exact(g) => (fmt_ratio(&g.re.abs()), g.re.is_negative()),
        Scalar::Float(z) => (format!("{}", z.re.abs()), z.re.is_sign_negative()),
    }
}

fn render_terms(p: &PdePrincipal, derivative: impl Fn(usize, usize) -> String, times: &str, minus: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (mag, negative) = coefficient_text(c);
        let sign = match (out.is_empty(), negative) {
            (true, false) => String::new(),
            (true, true) => "-".to_string(),
            (false, false) => " + ".to_string(),
            (false, true) => format!(" {minus} "),
        };
        let coef = if mag == "1" { String::new() } else { format!("{mag}{times}") };
        out.push_str(&format!("{sign}{coef}{}", derivative(p.order, k)));
    }
    out
}

/// Deterministic ASCII rendering accepted back by [`parse_pde`]. A zero
/// quartic keeps a `0*U_xxxx` term so that its order survives the round trip.
/// The lower-order flag is not rendered.
pub fn render_pde(p: &PdePrincipal) -> String {
    if p.is_zero() {
        return match p.order {
            3 => "0 = Phi".to_string(),
            _ => format!("0*{} = Phi", derivative_text(p.order, 0)),
        };
    }
    format!("{} = Phi", render_terms(p, derivative_text, "*", "-"))
}

/// Unicode rendering in the `∂x³U−3∂x∂y²U = Φ` style.
pub fn render_pde_unicode(p: &PdePrincipal) -> String {
    if p.is_zero() {
        return "0 = Φ".to_string();
    }
    let body = render_terms(p, unicode_derivative, "", "−");
    format!("{} = Φ", body.replace(' ', ""))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(order: usize, c: &[i64]) -> PdePrincipal {
        PdePrincipal::new(order, c.iter().map(|&v| Scalar::int(v)).collect(), false).unwrap()
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn parses_ascii_terms() {
        assert_eq!(parse_pde("U_xxx - 3*U_xyy = Phi").unwrap(), ints(3, &[1, 0, -3, 0]));
        assert_eq!(parse_pde("U_xxyy = Phi").unwrap(), ints(4, &[0, 0, 1, 0, 0]));
        let p = parse_pde("2*U_xxx + U_x = 0").unwrap();
        assert_eq!(p.coeffs(), ints(3, &[2, 0, 0, 0]).coeffs());
        assert!(p.has_lower_order());
    }

    #[test]
    fn letter_order_and_repeats_are_summed() {
        assert_eq!(parse_pde("U_xyx + U_yxx - 1/2*U_xxy").unwrap().coeffs()[1], Scalar::ratio(3, 2));
        assert_eq!(parse_pde("  0.5 U_yyyy+U_yyyy ").unwrap().coeffs()[4], Scalar::ratio(3, 2));
    }

    #[test]
    fn parses_unicode_operators() {
        assert_eq!(parse_pde("∂x³U−3∂x∂y²U = Φ").unwrap(), ints(3, &[1, 0, -3, 0]));
        assert_eq!(parse_pde("(∂x²+∂y²)²U = Φ").unwrap(), ints(4, &[1, 0, 2, 0, 1]));
        assert_eq!(parse_pde("∂x^3∂yU").unwrap(), ints(4, &[0, 1, 0, 0, 0]));
    }

    #[test]
    fn zero_principal() {
        assert_eq!(parse_pde("0 = Φ").unwrap(), ints(3, &[0, 0, 0, 0]));
        assert_eq!(render_pde(&ints(3, &[0, 0, 0, 0])), "0 = Phi");
        let q = ints(4, &[0; 5]);
        assert_eq!(parse_pde(&render_pde(&q)).unwrap(), q);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_pde(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_pde("U_xxx + x*U_yyy"), Err(Error::Syntax { pos: 8, .. })));
        assert!(matches!(parse_pde("U_xx + U_y"), Err(Error::UnsupportedOrder(2))));
        assert!(matches!(parse_pde("U_xxxxx"), Err(Error::UnsupportedOrder(5))));
        assert!(matches!(parse_pde("2i*U_xxx"), Err(Error::NonRealCoefficient)));
        assert!(matches!(parse_pde("U_xxx +"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_pde("U_ + U_xxx"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_pde("5 = Phi"), Err(Error::UnsupportedOrder(0))));
    }

    #[test]
    fn render_examples_and_round_trip() {
        assert_eq!(render_pde(&ints(3, &[1, 0, -3, 0])), "U_xxx - 3*U_xyy = Phi");
        assert_eq!(render_pde(&ints(4, &[0, 0, 1, 0, 0])), "U_xxyy = Phi");
        assert_eq!(render_pde(&ints(4, &[-1, 2, 0, 0, -1])), "-U_xxxx + 2*U_xxxy - U_yyyy = Phi");
        let p = PdePrincipal::new(
            3,
            vec![Scalar::ratio(-7, 3), Scalar::zero(), Scalar::ratio(1, 8), Scalar::int(5)],
            false,
        )
        .unwrap();
        assert_eq!(parse_pde(&render_pde(&p)).unwrap(), p);
        assert_eq!(render_pde_unicode(&ints(3, &[1, 0, -3, 0])), "∂x³U−3∂x∂y²U = Φ");
    }

    #[test]
    fn float_round_trip_is_bit_exact() {
        let vals = [0.1, -2.0 / 3.0, 1e-7 * std::f64::consts::PI, 12345.678901234567];
        let p = PdePrincipal::new(3, vals.iter().map(|&v| Scalar::real(v).unwrap()).collect(), false).unwrap();
        assert_eq!(parse_pde(&render_pde(&p)).unwrap().to_float(), p);
    }

    #[test]
    fn classification_examples() {
        let r = classify_pde(&parse_pde("U_xxx + U_yyy").unwrap(), &tol()).unwrap();
        assert_eq!((r.real_type.type_id, r.canonical_text.as_str()), (3, "∂x³U+∂y³U = Φ"));
        let r = classify_pde(&parse_pde("U_xxxx - 6*U_xxyy").unwrap(), &tol()).unwrap();
        assert_eq!((r.real_type.type_id, r.canonical_text.as_str()), (7, "∂x⁴U−6∂x²∂y²U = Φ"));
        let r = classify_pde(&parse_pde("U_xxxy").unwrap(), &tol()).unwrap();
        assert_eq!((r.real_type.type_id, r.canonical_text.as_str()), (10, "∂x³∂yU = Φ"));
        let r = classify_pde(&parse_pde("U_xxxx + U_yyyy = Phi").unwrap(), &tol()).unwrap();
        assert_eq!(r.to_string(), "Type 3, canonical: ∂x⁴U+6μ∂x²∂y²U+∂y⁴U = Φ with μ=0");
    }

    #[test]
    fn transform_matches_closed_formulas() {
        // a ∂x³ only: (a p1³, 3a p1² p2, 3a p1 p2², a p2³)
        let p = ints(3, &[2, 0, 0, 0]);
        let t = Transform2::from_ints(3, 5, 1, 2).unwrap();
        assert_eq!(transform_pde(&p, &t).unwrap(), ints(3, &[54, 270, 450, 250]));
        assert_eq!(transform_pde(&p, &Transform2::identity()).unwrap(), p);
        let c = Transform2::new(Scalar::i(), Scalar::zero(), Scalar::zero(), Scalar::one()).unwrap();
        assert_eq!(transform_pde(&p, &c), Err(Error::NonRealTransform));
    }
}
