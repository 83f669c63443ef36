//! Roots with multiplicities of univariate polynomials (degree ≤ 4) and
//! projective roots of binary forms, with real/complex structure.

mod closed;
mod companion;
pub(crate) mod exact;
mod float;

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{BinaryForm, GaussianRational, Scalar};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::tolerance::Tolerances;

/// Float directions with `|y| ≤ INFINITY_SNAP·|x|` normalize to `(1, 0)`.
pub const INFINITY_SNAP: f64 = 1e-13;

/// A root of a univariate polynomial with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct UniRoot {
    pub value: Scalar,
    pub multiplicity: usize,
    pub real: bool,
}

/// A direction in ℂ², normalized to `(t, 1)` or `(1, 0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectivePoint {
    x: Scalar,
    y: Scalar,
}

impl ProjectivePoint {
    /// Normalizes `(x, y)`; `(0, 0)` is rejected.
    pub fn new(x: Scalar, y: Scalar) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroDirection);
        }
        if x.is_exact() && y.is_exact() {
            if y.is_zero() {
                return Ok(ProjectivePoint::infinity());
            }
            return Ok(ProjectivePoint { x: &x / &y, y: Scalar::one() });
        }
        let (xc, yc) = (x.to_c64(), y.to_c64());
        if yc.norm() <= INFINITY_SNAP * xc.norm() {
            return Ok(ProjectivePoint::float_infinity());
        }
        Ok(ProjectivePoint::affine(Scalar::Float(xc / yc)))
    }

    /// The point `(t, 1)`.
    pub fn affine(t: Scalar) -> Self {
        let y = if t.is_exact() { Scalar::one() } else { Scalar::Float(Complex64::new(1.0, 0.0)) };
        ProjectivePoint { x: t, y }
    }

    /// The exact point at infinity `(1, 0)`.
    pub fn infinity() -> Self {
        ProjectivePoint { x: Scalar::one(), y: Scalar::zero() }
    }

    fn float_infinity() -> Self {
        ProjectivePoint { x: Scalar::Float(Complex64::new(1.0, 0.0)), y: Scalar::Float(Complex64::new(0.0, 0.0)) }
    }

    pub fn x(&self) -> &Scalar {
        &self.x
    }

    pub fn y(&self) -> &Scalar {
        &self.y
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    pub fn to_c64(&self) -> [Complex64; 2] {
        [self.x.to_c64(), self.y.to_c64()]
    }

    /// Same direction up to `rel_tol` (literal for exact points).
    pub fn approx_eq(&self, other: &ProjectivePoint, rel_tol: f64) -> bool {
        if self.is_infinity() != other.is_infinity() {
            return false;
        }
        self.x.approx_eq(&other.x, rel_tol)
    }

    pub fn conj(&self) -> Self {
        ProjectivePoint { x: self.x.conj(), y: self.y.conj() }
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    Real,
    Complex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootEntry {
    pub point: ProjectivePoint,
    pub multiplicity: usize,
    pub kind: RootKind,
}

/// Distinct projective roots of a form with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct RootList {
    pub entries: Vec<RootEntry>,
}

impl RootList {
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Multiplicities in descending order (the complex root pattern).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.entries.iter().map(|e| e.multiplicity).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PatternKind {
    Real,
    Pair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternEntry {
    pub multiplicity: usize,
    pub kind: PatternKind,
}

/// Multiplicities split into real roots and conjugate pairs; real entries
/// first, then by descending multiplicity. A `Pair` entry counts one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPattern {
    pub entries: Vec<PatternEntry>,
}

impl RootPattern {
    fn new(mut entries: Vec<PatternEntry>) -> Self {
        entries.sort_by(|a, b| a.kind.cmp(&b.kind).then(b.multiplicity.cmp(&a.multiplicity)));
        RootPattern { entries }
    }

    /// Builds a pattern from `(multiplicity, kind)` pairs in any order.
    pub fn from_pairs(pairs: &[(usize, PatternKind)]) -> Self {
        RootPattern::new(pairs.iter().map(|&(multiplicity, kind)| PatternEntry { multiplicity, kind }).collect())
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity * if e.kind == PatternKind::Pair { 2 } else { 1 }).sum()
    }

    /// Real multiplicities in descending order.
    pub fn real(&self) -> Vec<usize> {
        self.entries.iter().filter(|e| e.kind == PatternKind::Real).map(|e| e.multiplicity).collect()
    }

    /// Pair multiplicities in descending order.
    pub fn pairs(&self) -> Vec<usize> {
        self.entries.iter().filter(|e| e.kind == PatternKind::Pair).map(|e| e.multiplicity).collect()
    }
}

impl fmt::Display for RootPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let kind = if e.kind == PatternKind::Real { "real" } else { "pair" };
                format!("({},{kind})", e.multiplicity)
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn exact_poly(coeffs: &[Scalar]) -> Option<Poly<GaussianRational>> {
    coeffs.iter().map(|c| c.as_exact().cloned()).collect::<Option<Vec<_>>>().map(Poly::new)
}

/// Roots of a univariate polynomial given by ascending coefficients.
/// All-exact input is solved exactly; anything else in float mode.
pub fn roots_complex(coeffs: &[Scalar], tol: &Tolerances) -> Result<Vec<UniRoot>> {
    if coeffs.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    if coeffs.len() > 5 {
        return Err(Error::UnsupportedDegree(coeffs.len() - 1));
    }
    match exact_poly(coeffs) {
        Some(p) => Ok(exact::roots(&p)),
        None => {
            let c: Vec<Complex64> = coeffs.iter().map(Scalar::to_c64).collect();
            Ok(float::roots(&c, tol))
        }
    }
}

/// Ascending coefficients of `f(t, 1)`.
pub(crate) fn dehomogenize_y(f: &BinaryForm) -> Vec<Scalar> {
    f.coeffs().iter().rev().cloned().collect()
}

/// Number of vanishing leading coefficients of `f(t, 1)`: the multiplicity
/// of the point at infinity.
fn infinity_multiplicity(f: &BinaryForm) -> usize {
    f.coeffs().iter().take_while(|c| c.is_zero()).count()
}

fn float_kind(real: bool) -> RootKind {
    if real {
        RootKind::Real
    } else {
        RootKind::Complex
    }
}

/// Distinct projective roots of a nonzero form.
pub fn projective_roots(f: &BinaryForm, tol: &Tolerances) -> Result<RootList> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mut entries = Vec::new();
    if f.is_exact() {
        let at_inf = infinity_multiplicity(f);
        if at_inf > 0 {
            entries.push(RootEntry { point: ProjectivePoint::infinity(), multiplicity: at_inf, kind: RootKind::Real });
        }
        let p = exact_poly(&dehomogenize_y(f)).expect("exact form");
        for r in exact::roots(&p) {
            entries.push(RootEntry {
                point: ProjectivePoint::affine(r.value),
                multiplicity: r.multiplicity,
                kind: float_kind(r.real),
            });
        }
        return Ok(RootList { entries });
    }

    let c = f.to_c64();
    let d = f.degree();
    let input_real = c.iter().all(|z| z.im == 0.0);
    if c[0].norm() >= c[d].norm() {
        // chart y = 1, t = x/y
        let at_inf = c.iter().take_while(|z| z.norm() == 0.0).count();
        if at_inf > 0 {
            entries.push(RootEntry {
                point: ProjectivePoint::float_infinity(),
                multiplicity: at_inf,
                kind: RootKind::Real,
            });
        }
        let p: Vec<Complex64> = c.iter().rev().copied().collect();
        for r in float::roots(&p, tol) {
            entries.push(RootEntry {
                point: ProjectivePoint::affine(r.value),
                multiplicity: r.multiplicity,
                kind: float_kind(r.real),
            });
        }
    } else {
        // chart x = 1, s = y/x; the leading end of f(1, s) is never zero here
        let zeros_at_y_axis = c.iter().rev().take_while(|z| z.norm() == 0.0).count();
        if zeros_at_y_axis > 0 {
            entries.push(RootEntry {
                point: ProjectivePoint::affine(Scalar::Float(Complex64::new(0.0, 0.0))),
                multiplicity: zeros_at_y_axis,
                kind: RootKind::Real,
            });
        }
        for r in float::roots(&c, tol) {
            let s = r.value.to_c64();
            let point = if s.norm() <= INFINITY_SNAP {
                ProjectivePoint::float_infinity()
            } else {
                let mut t = 1.0 / s;
                if r.real && input_real {
                    t.im = 0.0;
                }
                ProjectivePoint::affine(Scalar::Float(t))
            };
            entries.push(RootEntry { point, multiplicity: r.multiplicity, kind: float_kind(r.real) });
        }
    }
    Ok(RootList { entries })
}

/// Root pattern of a nonzero real form.
pub fn root_pattern(f: &BinaryForm, tol: &Tolerances) -> Result<RootPattern> {
    if !f.is_real() {
        return Err(Error::NonRealInput);
    }
    let roots = projective_roots(f, tol)?;
    pattern_from_roots(&roots)
}

/// Aggregates a real form's roots into a pattern, pairing each non-real
/// root in the upper half plane with its conjugate.
pub(crate) fn pattern_from_roots(roots: &RootList) -> Result<RootPattern> {
    let mut entries = Vec::new();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for e in &roots.entries {
        match e.kind {
            RootKind::Real => entries.push(PatternEntry { multiplicity: e.multiplicity, kind: PatternKind::Real }),
            RootKind::Complex => {
                if e.point.x().to_c64().im > 0.0 {
                    upper.push(e.multiplicity);
                } else {
                    lower.push(e.multiplicity);
                }
            }
        }
    }
    upper.sort_unstable();
    lower.sort_unstable();
    if upper != lower {
        return Err(Error::InternalInconsistency(format!(
            "non-real roots of a real form are not conjugate-closed (multiplicities {upper:?} vs {lower:?})"
        )));
    }
    entries.extend(upper.into_iter().map(|m| PatternEntry { multiplicity: m, kind: PatternKind::Pair }));
    Ok(RootPattern::new(entries))
}

/// Classical discriminant in the homogeneous convention; zero exactly when
/// the form has a repeated projective root (or vanishes).
pub fn discriminant(f: &BinaryForm) -> Result<Scalar> {
    let c = f.coeffs();
    let k = |n: i64| Scalar::int(n);
    let prod = |idx: &[usize]| idx.iter().fold(Scalar::one(), |acc, &i| acc * &c[i]);
    let sum = |terms: &[(i64, &[usize])]| terms.iter().fold(Scalar::zero(), |acc, (n, idx)| acc + k(*n) * prod(idx));
    match f.degree() {
        3 => {
            let (a, b, cc, d) = (0, 1, 2, 3);
            Ok(sum(&[
                (1, &[b, b, cc, cc]),
                (-4, &[a, cc, cc, cc]),
                (-4, &[b, b, b, d]),
                (-27, &[a, a, d, d]),
                (18, &[a, b, cc, d]),
            ]))
        }
        4 => {
            let (a, b, cc, d, e) = (0, 1, 2, 3, 4);
            Ok(sum(&[
                (256, &[a, a, a, e, e, e]),
                (-192, &[a, a, b, d, e, e]),
                (-128, &[a, a, cc, cc, e, e]),
                (144, &[a, a, cc, d, d, e]),
                (-27, &[a, a, d, d, d, d]),
                (144, &[a, b, b, cc, e, e]),
                (-6, &[a, b, b, d, d, e]),
                (-80, &[a, b, cc, cc, d, e]),
                (18, &[a, b, cc, d, d, d]),
                (16, &[a, cc, cc, cc, cc, e]),
                (-4, &[a, cc, cc, cc, d, d]),
                (-27, &[b, b, b, b, e, e]),
                (18, &[b, b, b, cc, d, e]),
                (-4, &[b, b, b, d, d, d]),
                (-4, &[b, b, cc, cc, cc, e]),
                (1, &[b, b, cc, cc, d, d]),
            ]))
        }
        d => Err(Error::UnsupportedDegree(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn sorted_mults(f: &BinaryForm) -> Vec<usize> {
        projective_roots(f, &tol()).unwrap().multiplicities()
    }

    #[test]
    fn univariate_examples() {
        let r = roots_complex(&[Scalar::int(-1), Scalar::int(3), Scalar::int(-3), Scalar::int(1)], &tol()).unwrap();
        assert_eq!(r, vec![UniRoot { value: Scalar::int(1), multiplicity: 3, real: true }]);

        let r =
            roots_complex(&[Scalar::int(1), Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::int(1)], &tol())
                .unwrap();
        assert_eq!(r.len(), 4);
        for k in [1.0, 3.0, 5.0, 7.0] {
            let w = Complex64::from_polar(1.0, k * std::f64::consts::FRAC_PI_4);
            assert!(r.iter().any(|x| (x.value.to_c64() - w).norm() < 1e-12 && x.multiplicity == 1));
        }

        let r = roots_complex(&[Scalar::zero(), Scalar::int(-2), Scalar::int(1)], &tol()).unwrap();
        let mut v: Vec<Scalar> = r.into_iter().map(|x| x.value).collect();
        v.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());
        assert_eq!(v, vec![Scalar::int(0), Scalar::int(2)]);

        assert_eq!(roots_complex(&[Scalar::zero(), Scalar::zero()], &tol()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn projective_examples() {
        let f = BinaryForm::from_ints(&[1, 0, -3, 0]);
        let r = projective_roots(&f, &tol()).unwrap();
        assert_eq!(r.entries.len(), 3);
        assert!(r.entries.iter().all(|e| e.kind == RootKind::Real && e.multiplicity == 1));
        for t in [0.0, 3f64.sqrt(), -(3f64.sqrt())] {
            assert!(r.entries.iter().any(|e| (e.point.x().to_c64().re - t).abs() < 1e-12));
        }

        let r = projective_roots(&BinaryForm::from_ints(&[1, 0, 0, 0, 0]), &tol()).unwrap();
        assert_eq!(
            r.entries,
            vec![RootEntry { point: ProjectivePoint::affine(Scalar::zero()), multiplicity: 4, kind: RootKind::Real }]
        );

        let r = projective_roots(&BinaryForm::from_ints(&[0, 4, 0, 0, 0]), &tol()).unwrap();
        assert!(r.entries.contains(&RootEntry {
            point: ProjectivePoint::affine(Scalar::zero()),
            multiplicity: 3,
            kind: RootKind::Real,
        }));
        assert!(r.entries.contains(&RootEntry {
            point: ProjectivePoint::infinity(),
            multiplicity: 1,
            kind: RootKind::Real,
        }));
    }

    #[test]
    fn float_projective_roots_match_exact() {
        for coeffs in [[1, 0, -3, 0, 0], [0, 4, 0, 0, 0], [1, 0, 2, 0, 1], [0, 0, 6, 0, 0], [1, 0, 0, 0, -1]] {
            let f = BinaryForm::from_ints(&coeffs);
            assert_eq!(sorted_mults(&f), sorted_mults(&f.to_float()), "{f}");
            assert_eq!(root_pattern(&f, &tol()), root_pattern(&f.to_float(), &tol()), "{f}");
        }
    }

    #[test]
    fn float_chart_for_small_leading_coefficient() {
        // y(x − 2y)(x + 3y)(x − 5y) has the root (1, 0)
        let f = BinaryForm::from_ints(&[0, 1, 0, -19, 30]).to_float();
        let r = projective_roots(&f, &tol()).unwrap();
        assert!(r.entries.iter().any(|e| e.point.is_infinity()));
        assert_eq!(r.total_multiplicity(), 4);
    }

    #[test]
    fn pattern_examples() {
        let p = root_pattern(&BinaryForm::from_ints(&[1, 0, 0, 0, -1]), &tol()).unwrap();
        assert_eq!(
            p,
            RootPattern::from_pairs(&[(1, PatternKind::Real), (1, PatternKind::Real), (1, PatternKind::Pair)])
        );
        let p = root_pattern(&BinaryForm::from_ints(&[1, 0, 0, 1]), &tol()).unwrap();
        assert_eq!(p, RootPattern::from_pairs(&[(1, PatternKind::Pair), (1, PatternKind::Real)]));
        let p = root_pattern(&BinaryForm::from_ints(&[1, 0, 2, 0, 1]), &tol()).unwrap();
        assert_eq!(p, RootPattern::from_pairs(&[(2, PatternKind::Pair)]));
        assert_eq!(p.to_string(), "[(2,pair)]");
        let complex = BinaryForm::new(vec![Scalar::one(), Scalar::i(), Scalar::zero(), Scalar::zero()]).unwrap();
        assert_eq!(root_pattern(&complex, &tol()), Err(Error::NonRealInput));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&BinaryForm::from_ints(&[1, 0, 0, 1])).unwrap(), Scalar::int(-27));
        assert!(discriminant(&BinaryForm::from_ints(&[1, 0, 0, 0])).unwrap().is_zero());
        assert!(discriminant(&BinaryForm::from_ints(&[0, 0, 6, 0, 0])).unwrap().is_zero());
        // t⁴ − 1 has discriminant −256
        assert_eq!(discriminant(&BinaryForm::from_ints(&[1, 0, 0, 0, -1])).unwrap(), Scalar::int(-256));
    }

    #[test]
    fn projective_point_normalization() {
        let p = ProjectivePoint::new(Scalar::int(2), Scalar::int(4)).unwrap();
        assert_eq!(p, ProjectivePoint::affine(Scalar::ratio(1, 2)));
        let p = ProjectivePoint::new(Scalar::int(-3), Scalar::zero()).unwrap();
        assert_eq!(p, ProjectivePoint::infinity());
        assert_eq!(ProjectivePoint::new(Scalar::zero(), Scalar::zero()), Err(Error::ZeroDirection));
        let p = ProjectivePoint::new(Scalar::real(1.0).unwrap(), Scalar::real(1e-20).unwrap()).unwrap();
        assert!(p.is_infinity());
    }
}
