//! Complex equivalence types from spectral signatures (cross-checked against
//! root multiplicities), real equivalence types from root patterns, and the
//! canonical representatives of every type.

use num_complex::Complex64;

use crate::algebra::{tensor_to_form, BinaryForm, Scalar, SymmetricTensor2};
use crate::error::{Error, Result};
use crate::roots::{self, pattern_from_roots, ProjectivePoint, RootKind, RootList, RootPattern};
use crate::spectra::{signature, Count, SpectralSignature};
use crate::tolerance::Tolerances;

/// Float-mode half-width of the excluded band around `μ = −1/3`.
pub const MU_BOUNDARY_TOL: f64 = 1e-8;

/// Float moduli components below this (relative to `max(1, |μ|)`) are
/// rounding noise and are reported as zero.
pub const MU_SNAP_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Real,
    Complex,
}

impl Domain {
    fn name(self) -> &'static str {
        match self {
            Domain::Real => "real",
            Domain::Complex => "complex",
        }
    }
}

/// Equivalence type under `GL₂(ℂ)` (cubic types 1–4, quartic types 1–6).
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexType {
    pub order: usize,
    pub type_id: usize,
    /// Modulus of the quartic type-3 family, one representative.
    pub mu: Option<Scalar>,
}

/// Equivalence type under `GL₂(ℝ)` (cubic types 1–5, quartic types 1–10).
#[derive(Clone, Debug, PartialEq)]
pub struct RealType {
    pub order: usize,
    pub type_id: usize,
    /// Real modulus of the quartic types 3–5, one representative.
    pub mu: Option<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Spectral,
    RootFallback,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Spectral => "spectral",
            Method::RootFallback => "root-fallback",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationReport {
    pub complex_type: ComplexType,
    pub real_type: Option<RealType>,
    pub signature: SpectralSignature,
    pub root_pattern: Option<RootPattern>,
    pub method: Method,
}

impl ClassificationReport {
    /// The reported modulus: the real one when available, else the complex one.
    pub fn mu(&self) -> Option<&Scalar> {
        match &self.real_type {
            Some(r) => r.mu.as_ref(),
            None => self.complex_type.mu.as_ref(),
        }
    }
}

fn cubic_type_from_signature(sig: &SpectralSignature) -> Option<usize> {
    match (sig.classes, sig.zeros) {
        (Count::Infinite, Count::Infinite) if !sig.degenerate => Some(1),
        (Count::Finite(2), Count::Finite(1)) => Some(2),
        (Count::Finite(3), Count::Finite(0)) => Some(3),
        (Count::Finite(3), Count::Finite(1)) => Some(4),
        _ => None,
    }
}

fn quartic_type_from_signature(sig: &SpectralSignature) -> Option<usize> {
    match (sig.classes, sig.zeros) {
        (Count::Infinite, Count::Infinite) if !sig.degenerate => Some(1),
        (Count::Finite(2), Count::Finite(1)) => Some(2),
        (Count::Finite(4), Count::Finite(0)) => Some(3),
        (Count::Finite(4), Count::Finite(1)) => Some(4),
        (Count::Finite(4), Count::Finite(2)) => Some(5),
        (Count::Finite(3), Count::Finite(1)) => Some(6),
        _ => None,
    }
}

fn type_from_multiplicities(order: usize, mults: &[usize]) -> Option<usize> {
    match (order, mults) {
        (3, [3]) => Some(2),
        (3, [1, 1, 1]) => Some(3),
        (3, [2, 1]) => Some(4),
        (4, [4]) => Some(2),
        (4, [1, 1, 1, 1]) => Some(3),
        (4, [2, 1, 1]) => Some(4),
        (4, [2, 2]) => Some(5),
        (4, [3, 1]) => Some(6),
        _ => None,
    }
}

fn real_type_from_pattern(order: usize, pattern: &RootPattern) -> Option<usize> {
    let (real, pairs) = (pattern.real(), pattern.pairs());
    match (order, real.as_slice(), pairs.as_slice()) {
        (3, [3], []) => Some(2),
        (3, [1], [1]) => Some(3),
        (3, [1, 1, 1], []) => Some(4),
        (3, [2, 1], []) => Some(5),
        (4, [4], []) => Some(2),
        (4, [], [1, 1]) => Some(3),
        (4, [1, 1, 1, 1], []) => Some(4),
        (4, [1, 1], [1]) => Some(5),
        (4, [2], [1]) => Some(6),
        (4, [2, 1, 1], []) => Some(7),
        (4, [2, 2], []) => Some(8),
        (4, [], [2]) => Some(9),
        (4, [3, 1], []) => Some(10),
        _ => None,
    }
}

struct ComplexAnalysis {
    complex_type: ComplexType,
    signature: SpectralSignature,
    method: Method,
    roots: Option<RootList>,
}

fn analyze_complex(f: &BinaryForm, tol: &Tolerances) -> Result<ComplexAnalysis> {
    let order = f.check_supported()?;
    let sig = signature(f, tol)?;
    if f.is_zero() {
        return Ok(ComplexAnalysis {
            complex_type: ComplexType { order, type_id: 1, mu: None },
            signature: sig,
            method: Method::Spectral,
            roots: None,
        });
    }
    let roots = roots::projective_roots(f, tol)?;
    let mults = roots.multiplicities();
    let by_roots = type_from_multiplicities(order, &mults)
        .ok_or_else(|| Error::InternalInconsistency(format!("unexpected root multiplicities {mults:?}")))?;
    let (type_id, method) = if sig.degenerate {
        if order == 4 && by_roots != 5 {
            return Err(Error::InternalInconsistency(format!(
                "eigenvector equation vanishes but root multiplicities are {mults:?}"
            )));
        }
        (by_roots, Method::RootFallback)
    } else {
        let spectral = match order {
            3 => cubic_type_from_signature(&sig),
            _ => quartic_type_from_signature(&sig),
        };
        match spectral {
            Some(t) if t == by_roots => (t, Method::Spectral),
            // Exact arithmetic rules out tolerance trouble: the eigenvector
            // equation acquired a repeated root on a special orbit member,
            // and the exact root multiplicities decide.
            _ if f.is_exact() => (by_roots, Method::RootFallback),
            Some(t) => {
                return Err(Error::InternalInconsistency(format!(
                    "signature {sig} gives type {t} but root multiplicities {mults:?} give type {by_roots}"
                )))
            }
            None => {
                return Err(Error::InternalInconsistency(format!("signature {sig} matches no type of order {order}")))
            }
        }
    };
    let mu = if order == 4 && type_id == 3 { Some(complex_mu(&roots)?) } else { None };
    Ok(ComplexAnalysis { complex_type: ComplexType { order, type_id, mu }, signature: sig, method, roots: Some(roots) })
}

/// Complex type of a cubic.
pub fn classify_complex_cubic(f: &BinaryForm, tol: &Tolerances) -> Result<ComplexType> {
    if f.degree() != 3 {
        return Err(Error::UnsupportedDegree(f.degree()));
    }
    analyze_complex(f, tol).map(|a| a.complex_type)
}

/// Complex type of a quartic.
pub fn classify_complex_quartic(f: &BinaryForm, tol: &Tolerances) -> Result<ComplexType> {
    if f.degree() != 4 {
        return Err(Error::UnsupportedDegree(f.degree()));
    }
    analyze_complex(f, tol).map(|a| a.complex_type)
}

/// `exact_input`: the type is settled exactly by the root pattern, so a float
/// modulus near `−1/3` is only used to pick a representative.
fn real_type_from_roots(
    order: usize,
    roots: Option<&RootList>,
    exact_input: bool,
) -> Result<(RealType, Option<RootPattern>)> {
    let Some(roots) = roots else {
        return Ok((RealType { order, type_id: 1, mu: None }, None));
    };
    let pattern = pattern_from_roots(roots)?;
    let type_id = real_type_from_pattern(order, &pattern)
        .ok_or_else(|| Error::InternalInconsistency(format!("unexpected root pattern {pattern}")))?;
    let mu = match (order, type_id) {
        (4, 3 | 4) => Some(real_mu_biquadratic(roots, type_id, exact_input)?),
        (4, 5) => Some(real_mu_indefinite(roots)?),
        _ => None,
    };
    Ok((RealType { order, type_id, mu }, Some(pattern)))
}

fn classify_real(f: &BinaryForm, order: usize, tol: &Tolerances) -> Result<RealType> {
    if f.degree() != order {
        return Err(Error::UnsupportedDegree(f.degree()));
    }
    if !f.is_real() {
        return Err(Error::NonRealInput);
    }
    if f.is_zero() {
        return Ok(RealType { order, type_id: 1, mu: None });
    }
    let roots = roots::projective_roots(f, tol)?;
    real_type_from_roots(order, Some(&roots), f.is_exact()).map(|(t, _)| t)
}

/// Real type of a real cubic, decided by its root pattern.
pub fn classify_real_cubic(f: &BinaryForm, tol: &Tolerances) -> Result<RealType> {
    classify_real(f, 3, tol)
}

/// Real type of a real quartic, decided by its root pattern.
pub fn classify_real_quartic(f: &BinaryForm, tol: &Tolerances) -> Result<RealType> {
    classify_real(f, 4, tol)
}

/// Full report for a cubic or quartic form.
pub fn classify(f: &BinaryForm, tol: &Tolerances) -> Result<ClassificationReport> {
    let analysis = analyze_complex(f, tol)?;
    let (real_type, root_pattern) = if f.is_real() {
        let (t, p) = real_type_from_roots(analysis.complex_type.order, analysis.roots.as_ref(), f.is_exact())?;
        (Some(t), p)
    } else {
        (None, None)
    };
    Ok(ClassificationReport {
        complex_type: analysis.complex_type,
        real_type,
        signature: analysis.signature,
        root_pattern,
        method: analysis.method,
    })
}

/// Full report for a symmetric tensor.
pub fn classify_tensor(t: &SymmetricTensor2, tol: &Tolerances) -> Result<ClassificationReport> {
    classify(&tensor_to_form(t), tol)
}

// ---- modulus recovery -------------------------------------------------

fn bracket(a: &ProjectivePoint, b: &ProjectivePoint) -> Scalar {
    a.x() * b.y() - &(a.y() * b.x())
}

/// Cross-ratio `[z1,z3][z2,z4] / ([z1,z4][z2,z3])`.
fn cross_ratio(z: [&ProjectivePoint; 4]) -> Scalar {
    let num = bracket(z[0], z[2]) * bracket(z[1], z[3]);
    let den = bracket(z[0], z[3]) * bracket(z[1], z[2]);
    num / den
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|k| p.contains(&k)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn four_points(roots: &RootList) -> Result<[&ProjectivePoint; 4]> {
    let pts: Vec<&ProjectivePoint> = roots.entries.iter().map(|e| &e.point).collect();
    <[&ProjectivePoint; 4]>::try_from(pts)
        .map_err(|_| Error::InternalInconsistency("modulus needs four distinct roots".into()))
}

/// `μ` of `x⁴ + 6μx²y² + y⁴` whose roots `a, −a, 1/a, −1/a` have the
/// cross-ratio `λ` in that order.
fn mu_from_cross_ratio(lambda: &Scalar) -> Scalar {
    (lambda + &Scalar::one()) / (Scalar::int(3) * (lambda - &Scalar::one()))
}

/// A scalar judged real, returned with its imaginary part removed.
fn as_real(s: &Scalar) -> Option<Scalar> {
    match s {
        Scalar::Exact(g) => g.is_real().then(|| s.clone()),
        Scalar::Float(z) => (z.im.abs() <= 1e-8 * (1.0 + z.norm())).then(|| Scalar::Float(Complex64::new(z.re, 0.0))),
    }
}

fn snap(mu: Scalar) -> Scalar {
    match mu {
        Scalar::Float(z) => {
            let cut = MU_SNAP_TOL * z.norm().max(1.0);
            let part = |v: f64| if v.abs() <= cut { 0.0 } else { v };
            Scalar::Float(Complex64::new(part(z.re), part(z.im)))
        }
        exact => exact,
    }
}

fn smallest(candidates: impl Iterator<Item = Scalar>) -> Option<Scalar> {
    candidates
        .fold(None, |best: Option<Scalar>, c| match best {
            Some(b) if b.abs() <= c.abs() => Some(b),
            _ => Some(c),
        })
        .map(snap)
}

fn complex_mu(roots: &RootList) -> Result<Scalar> {
    let z = four_points(roots)?;
    smallest(
        permutations4().into_iter().map(|p| mu_from_cross_ratio(&cross_ratio([z[p[0]], z[p[1]], z[p[2]], z[p[3]]]))),
    )
    .ok_or_else(|| Error::InternalInconsistency("no modulus candidate".into()))
}

/// Compares a real scalar with `−1/3`: exact when exact, otherwise by
/// value with the float boundary band reported as ambiguous unless
/// `settled` says the caller already knows the type exactly.
fn side_of_boundary(mu: &Scalar, settled: bool) -> Result<std::cmp::Ordering> {
    match mu {
        Scalar::Exact(g) => {
            let third = Scalar::ratio(-1, 3);
            let d = &g.re - &third.as_exact().expect("exact").re;
            Ok(d.cmp(&num_rational::BigRational::from_integer(0.into())))
        }
        Scalar::Float(z) => {
            let d = z.re + 1.0 / 3.0;
            if d.abs() <= MU_BOUNDARY_TOL && !settled {
                return Err(Error::BoundaryAmbiguity(z.re));
            }
            Ok(d.partial_cmp(&0.0).expect("finite"))
        }
    }
}

/// Real type 3 (`μ > −1/3`) or 4 (`μ < −1/3`) modulus of a real quartic
/// with four distinct roots.
fn real_mu_biquadratic(roots: &RootList, type_id: usize, settled: bool) -> Result<Scalar> {
    let z = four_points(roots)?;
    let wanted = if type_id == 3 { std::cmp::Ordering::Greater } else { std::cmp::Ordering::Less };
    let mut candidates = Vec::new();
    for p in permutations4() {
        let mu = mu_from_cross_ratio(&cross_ratio([z[p[0]], z[p[1]], z[p[2]], z[p[3]]]));
        let Some(mu) = as_real(&mu) else { continue };
        if side_of_boundary(&mu, settled)? == wanted {
            candidates.push(mu);
        }
    }
    smallest(candidates.into_iter())
        .ok_or_else(|| Error::InternalInconsistency(format!("no real modulus for type {type_id}")))
}

/// Real type 5 modulus: `x⁴ + 6μx²y² − y⁴` has real roots `±s` and the
/// pair `±i/s`; their cross-ratio `λ` gives `μ = i(λ+1)/(3(λ−1))`.
fn real_mu_indefinite(roots: &RootList) -> Result<Scalar> {
    let real: Vec<&ProjectivePoint> =
        roots.entries.iter().filter(|e| e.kind == RootKind::Real).map(|e| &e.point).collect();
    let pair: Vec<&ProjectivePoint> =
        roots.entries.iter().filter(|e| e.kind == RootKind::Complex).map(|e| &e.point).collect();
    if real.len() != 2 || pair.len() != 2 {
        return Err(Error::InternalInconsistency("type 5 needs two real roots and one pair".into()));
    }
    for (r1, r2) in [(real[0], real[1]), (real[1], real[0])] {
        let lambda = cross_ratio([r1, r2, pair[0], pair[1]]);
        let mu = Scalar::i() * mu_from_cross_ratio(&lambda);
        if let Some(mu) = as_real(&mu) {
            if mu.to_c64().re >= 0.0 {
                return Ok(snap(mu));
            }
        }
    }
    Err(Error::InternalInconsistency("no real modulus for type 5".into()))
}

// ---- canonical forms --------------------------------------------------

fn quartic_family(mu: &Scalar, last: i64) -> BinaryForm {
    BinaryForm::new(vec![Scalar::one(), Scalar::zero(), Scalar::int(6) * mu, Scalar::zero(), Scalar::int(last)])
        .expect("five coefficients")
}

fn require_mu(mu: Option<&Scalar>, type_id: usize) -> Result<&Scalar> {
    mu.ok_or(Error::MissingModulus(type_id))
}

fn invalid_mu(type_id: usize, mu: &Scalar) -> Error {
    Error::InvalidModulus { type_id, mu: mu.to_string() }
}

fn is_exactly(mu: &Scalar, p: i64, q: i64) -> bool {
    match mu {
        Scalar::Exact(_) => *mu == Scalar::ratio(p, q),
        Scalar::Float(z) => (*z - Complex64::new(p as f64 / q as f64, 0.0)).norm() <= MU_BOUNDARY_TOL,
    }
}

/// The table representative of a type.
pub fn canonical_form(type_id: usize, order: usize, domain: Domain, mu: Option<&Scalar>) -> Result<BinaryForm> {
    let invalid = || Error::InvalidType { type_id, order, domain: domain.name() };
    let ints = |c: &[i64]| Ok(BinaryForm::from_ints(c));
    match (order, domain, type_id) {
        (3, _, 1) => Ok(BinaryForm::zero(3)),
        (3, _, 2) => ints(&[1, 0, 0, 0]),
        (3, _, 3) => ints(&[1, 0, 0, 1]),
        (3, Domain::Complex, 4) => ints(&[0, 3, 0, 0]),
        (3, Domain::Real, 4) => ints(&[1, 0, -3, 0]),
        (3, Domain::Real, 5) => ints(&[0, 3, 0, 0]),
        (4, _, 1) => Ok(BinaryForm::zero(4)),
        (4, _, 2) => ints(&[1, 0, 0, 0, 0]),
        (4, Domain::Complex, 3) => {
            let mu = require_mu(mu, type_id)?;
            if is_exactly(mu, 1, 3) || is_exactly(mu, -1, 3) {
                return Err(invalid_mu(type_id, mu));
            }
            Ok(quartic_family(mu, 1))
        }
        (4, Domain::Complex, 4) => ints(&[0, 0, 6, 0, 1]),
        (4, Domain::Complex, 5) => ints(&[0, 0, 6, 0, 0]),
        (4, Domain::Complex, 6) => ints(&[0, 4, 0, 0, 0]),
        (4, Domain::Real, 3..=5) => {
            let mu = require_mu(mu, type_id)?;
            if !mu.is_real() {
                return Err(invalid_mu(type_id, mu));
            }
            let ok = match type_id {
                3 => !is_exactly(mu, -1, 3) && !is_exactly(mu, 1, 3) && mu.to_c64().re > -1.0 / 3.0,
                4 => !is_exactly(mu, -1, 3) && mu.to_c64().re < -1.0 / 3.0,
                _ => true,
            };
            if !ok {
                return Err(invalid_mu(type_id, mu));
            }
            Ok(quartic_family(mu, if type_id == 5 { -1 } else { 1 }))
        }
        (4, Domain::Real, 6) => ints(&[1, 0, 6, 0, 0]),
        (4, Domain::Real, 7) => ints(&[1, 0, -6, 0, 0]),
        (4, Domain::Real, 8) => ints(&[0, 0, 6, 0, 0]),
        (4, Domain::Real, 9) => ints(&[1, 0, 2, 0, 1]),
        (4, Domain::Real, 10) => ints(&[0, 4, 0, 0, 0]),
        _ => Err(invalid()),
    }
}

/// Number of types for an order and domain.
pub fn type_count(order: usize, domain: Domain) -> Result<usize> {
    match (order, domain) {
        (3, Domain::Complex) => Ok(4),
        (3, Domain::Real) => Ok(5),
        (4, Domain::Complex) => Ok(6),
        (4, Domain::Real) => Ok(10),
        (o, _) => Err(Error::UnsupportedDegree(o)),
    }
}

/// Whether a table row carries the modulus `μ`.
pub fn has_modulus(type_id: usize, order: usize, domain: Domain) -> bool {
    match (order, domain) {
        (4, Domain::Complex) => type_id == 3,
        (4, Domain::Real) => (3..=5).contains(&type_id),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn both(coeffs: &[i64]) -> [BinaryForm; 2] {
        let f = BinaryForm::from_ints(coeffs);
        let g = f.to_float();
        [f, g]
    }

    #[test]
    fn complex_cubic_examples() {
        for f in both(&[9, 18, 18, 9]) {
            assert_eq!(classify_complex_cubic(&f, &tol()).unwrap().type_id, 3);
        }
        for f in both(&[1, 6, 12, 8]) {
            assert_eq!(classify_complex_cubic(&f, &tol()).unwrap().type_id, 2);
        }
        assert_eq!(classify_complex_cubic(&BinaryForm::zero(3), &tol()).unwrap().type_id, 1);
        assert_eq!(classify_complex_cubic(&BinaryForm::zero(4), &tol()), Err(Error::UnsupportedDegree(4)));
    }

    #[test]
    fn complex_quartic_examples() {
        for f in both(&[16, 32, 24, 8, 1]) {
            assert_eq!(classify_complex_quartic(&f, &tol()).unwrap().type_id, 2);
        }
        for f in both(&[2, 4, 6, 4, 2]) {
            assert_eq!(classify_complex_quartic(&f, &tol()).unwrap().type_id, 5);
        }
        for f in both(&[1, 0, 2, 0, 1]) {
            let r = classify(&f, &tol()).unwrap();
            assert_eq!(r.complex_type.type_id, 5);
            assert_eq!(r.method, Method::RootFallback);
            assert!(r.signature.degenerate);
            assert_eq!(r.real_type.unwrap().type_id, 9);
        }
    }

    #[test]
    fn real_examples() {
        for (coeffs, want) in [
            (&[1, 0, 0, 1][..], 3),
            (&[1, 0, -3, 0], 4),
            (&[0, 3, 0, 0], 5),
            (&[1, 0, 0, 0, 1], 3),
            (&[1, 0, 0, 0, -1], 5),
            (&[0, 4, 0, 0, 0], 10),
        ] {
            for f in both(coeffs) {
                let t = if f.degree() == 3 {
                    classify_real_cubic(&f, &tol()).unwrap()
                } else {
                    classify_real_quartic(&f, &tol()).unwrap()
                };
                assert_eq!(t.type_id, want, "{f}");
            }
        }
        let complex = BinaryForm::new(vec![Scalar::one(), Scalar::i(), Scalar::zero(), Scalar::zero()]).unwrap();
        assert_eq!(classify_real_cubic(&complex, &tol()), Err(Error::NonRealInput));
    }

    #[test]
    fn moduli_are_recovered() {
        let r = classify(&BinaryForm::from_ints(&[1, 0, 0, 0, 1]), &tol()).unwrap();
        // the roots e^{ikπ/4} are irrational, so μ is a float
        assert_eq!(r.complex_type.mu, Some(Scalar::real(0.0).unwrap()));
        assert_eq!(r.real_type.unwrap().mu, Some(Scalar::real(0.0).unwrap()));
        let r = classify(&BinaryForm::from_ints(&[1, 0, 0, 0, -1]), &tol()).unwrap();
        assert_eq!(r.real_type.unwrap().mu, Some(Scalar::zero()));
        // μ = −1: x⁴ − 6x²y² + y⁴, real type 4
        let r = classify(&BinaryForm::from_ints(&[1, 0, -6, 0, 1]), &tol()).unwrap();
        let t = r.real_type.unwrap();
        assert_eq!(t.type_id, 4);
        assert!((t.mu.unwrap().to_c64().re + 1.0).abs() < 1e-9);
        // μ = 2 in the indefinite family
        let r = classify(&BinaryForm::from_ints(&[1, 0, 12, 0, -1]).to_float(), &tol()).unwrap();
        let t = r.real_type.unwrap();
        assert_eq!(t.type_id, 5);
        assert!((t.mu.unwrap().to_c64().re - 2.0).abs() < 1e-9);
    }

    #[test]
    fn tensor_reports() {
        let t = SymmetricTensor2::from_ints(&[1, 2, 4, 8]).unwrap();
        let r = classify_tensor(&t, &tol()).unwrap();
        assert_eq!((r.complex_type.type_id, r.real_type.unwrap().type_id), (2, 2));
        assert_eq!(r.signature, SpectralSignature::finite(2, 1));
        let t = SymmetricTensor2::from_ints(&[1, 0, 0, 0, -1]).unwrap();
        let r = classify_tensor(&t, &tol()).unwrap();
        assert_eq!((r.complex_type.type_id, r.real_type.unwrap().type_id), (3, 5));
        assert_eq!(r.signature, SpectralSignature::finite(4, 0));
    }

    #[test]
    fn exact_signature_collapse_falls_back_to_roots() {
        // x³ + y³ under a special rational P: Q gains a double root with λ ≠ 0
        let p = crate::Transform2::random_rational(25, true);
        let g = crate::algebra::transform(&BinaryForm::from_ints(&[1, 0, 0, 1]), &p);
        let r = classify(&g, &tol()).unwrap();
        assert_eq!(r.signature, SpectralSignature::finite(2, 0));
        assert_eq!(r.method, Method::RootFallback);
        assert_eq!((r.complex_type.type_id, r.real_type.unwrap().type_id), (3, 3));
        assert!(matches!(classify(&g.to_float(), &tol()), Err(Error::InternalInconsistency(_))));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_form(4, 3, Domain::Complex, None).unwrap(), BinaryForm::from_ints(&[0, 3, 0, 0]));
        assert_eq!(canonical_form(9, 4, Domain::Real, None).unwrap(), BinaryForm::from_ints(&[1, 0, 2, 0, 1]));
        assert_eq!(
            canonical_form(3, 4, Domain::Complex, Some(&Scalar::zero())).unwrap(),
            BinaryForm::from_ints(&[1, 0, 0, 0, 1])
        );
        assert!(matches!(canonical_form(99, 4, Domain::Real, None), Err(Error::InvalidType { .. })));
        assert_eq!(canonical_form(3, 4, Domain::Complex, None), Err(Error::MissingModulus(3)));
        assert!(matches!(
            canonical_form(3, 4, Domain::Real, Some(&Scalar::ratio(-1, 2))),
            Err(Error::InvalidModulus { .. })
        ));
        assert!(matches!(
            canonical_form(3, 4, Domain::Complex, Some(&Scalar::ratio(1, 3))),
            Err(Error::InvalidModulus { .. })
        ));
    }

    #[test]
    fn canonical_fixed_points() {
        let mus = [Scalar::int(-1), Scalar::zero(), Scalar::one()];
        for (order, domain) in [(3, Domain::Complex), (3, Domain::Real), (4, Domain::Complex), (4, Domain::Real)] {
            for type_id in 1..=type_count(order, domain).unwrap() {
                for mu in &mus {
                    let Ok(f) = canonical_form(type_id, order, domain, Some(mu)) else { continue };
                    for g in [f.clone(), f.to_float()] {
                        let r = classify(&g, &tol()).unwrap();
                        let got = match domain {
                            Domain::Complex => r.complex_type.type_id,
                            Domain::Real => r.real_type.unwrap().type_id,
                        };
                        assert_eq!(got, type_id, "{g} ({domain:?})");
                    }
                }
            }
        }
    }

    #[test]
    fn near_boundary_is_settled_exactly() {
        // μ = −1/3 + 5·10⁻⁹
        let coeffs = ["1", "0", "-1.99999997", "0", "1"].map(|c| Scalar::parse(c).unwrap());
        let f = BinaryForm::new(coeffs.to_vec()).unwrap();
        let t = classify_real_quartic(&f, &tol()).unwrap();
        assert_eq!(t.type_id, 3);
        assert!((t.mu.unwrap().to_c64().re + 1.0 / 3.0 - 5e-9).abs() < 1e-12);
        let err = classify_real_quartic(&f.to_float(), &tol()).unwrap_err();
        assert!(err.is_numerical_ambiguity(), "{err}");
    }
}
