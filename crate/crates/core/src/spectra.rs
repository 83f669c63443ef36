//! Eigenpair classes and spectral signatures of 2-dimensional symmetric
//! tensors, computed through the associated binary form `f`.
//!
//! Eigendirections are the projective roots of `Q = y·f_x − x·f_y`. A class
//! is represented by its normalized direction; `λ` is evaluated at that
//! exact representative.

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{form_to_tensor, BinaryForm, GaussianRational, Scalar, Var};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::roots::{self, exact, ProjectivePoint};
use crate::tolerance::Tolerances;

/// One eigenpair class.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenpairClass {
    pub lambda: Scalar,
    pub direction: ProjectivePoint,
    /// Multiplicity of the direction as a root of `Q`.
    pub multiplicity: usize,
    /// `λ = 0`, equivalently `∇f` vanishes at the direction.
    pub is_zero: bool,
}

/// Result of the eigenpair computation.
#[derive(Clone, Debug, PartialEq)]
pub enum Eigenpairs {
    Finite(Vec<EigenpairClass>),
    /// Every direction is an eigendirection. `degenerate` is set when this
    /// happens for a nonzero form (`Q ≡ 0`).
    Infinite {
        degenerate: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => write!(f, "inf"),
        }
    }
}

/// Number of eigenpair classes and of those with `λ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralSignature {
    pub classes: Count,
    pub zeros: Count,
    pub degenerate: bool,
}

impl SpectralSignature {
    pub fn finite(classes: usize, zeros: usize) -> Self {
        SpectralSignature { classes: Count::Finite(classes), zeros: Count::Finite(zeros), degenerate: false }
    }

    pub fn infinite(degenerate: bool) -> Self {
        SpectralSignature { classes: Count::Infinite, zeros: Count::Infinite, degenerate }
    }

    pub fn of(pairs: &Eigenpairs) -> Self {
        match pairs {
            Eigenpairs::Infinite { degenerate } => SpectralSignature::infinite(*degenerate),
            Eigenpairs::Finite(classes) => {
                SpectralSignature::finite(classes.len(), classes.iter().filter(|c| c.is_zero).count())
            }
        }
    }
}

impl fmt::Display for SpectralSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.classes, self.zeros) {
            (Count::Finite(c), Count::Finite(z)) => {
                let cs = if c == 1 { "class" } else { "classes" };
                let zs = if z == 1 { "zero" } else { "zeros" };
                write!(f, "({c} {cs}, {z} {zs})")
            }
            _ if self.degenerate => write!(f, "(infinite, infinite, degenerate)"),
            _ => write!(f, "(infinite, infinite)"),
        }
    }
}

/// `Q = y·∂f/∂x − x·∂f/∂y`, homogeneous of the same degree as `f`.
pub fn eigenvector_equation(f: &BinaryForm) -> BinaryForm {
    let fx = f.partial(Var::X).mul_y();
    let fy = f.partial(Var::Y).mul_x();
    fx.sub(&fy)
}

fn is_numerically_zero(q: &BinaryForm, f: &BinaryForm, tol: &Tolerances) -> bool {
    if q.is_exact() && f.is_exact() {
        return q.is_zero();
    }
    q.max_abs() <= tol.eps_eig * f.degree() as f64 * f.max_abs()
}

/// `λ` at a normalized direction, dividing by the larger coordinate.
fn lambda_at(f: &BinaryForm, x: &Scalar, y: &Scalar) -> Scalar {
    let m = Scalar::int(f.degree() as i64);
    if x.abs() >= y.abs() {
        f.partial(Var::X).evaluate(x, y) / (m * x)
    } else {
        f.partial(Var::Y).evaluate(x, y) / (m * y)
    }
}

fn lambda_at_c64(f: &BinaryForm, x: Complex64, y: Complex64) -> Scalar {
    let f = f.to_float();
    lambda_at(&f, &Scalar::Float(x), &Scalar::Float(y))
}

/// Eigenpair classes of a cubic or quartic.
pub fn eigenpairs(f: &BinaryForm, tol: &Tolerances) -> Result<Eigenpairs> {
    f.check_supported()?;
    if f.is_zero() {
        return Ok(Eigenpairs::Infinite { degenerate: false });
    }
    let q = eigenvector_equation(f);
    if is_numerically_zero(&q, f, tol) {
        return Ok(Eigenpairs::Infinite { degenerate: true });
    }
    if f.is_exact() {
        Ok(Eigenpairs::Finite(exact_classes(f, &q)))
    } else {
        float_classes(f, &q, tol).map(Eigenpairs::Finite)
    }
}

fn to_exact_poly(coeffs: &[Scalar]) -> Poly<GaussianRational> {
    Poly::new(coeffs.iter().map(|c| c.as_exact().expect("exact form").clone()).collect())
}

fn exact_classes(f: &BinaryForm, q: &BinaryForm) -> Vec<EigenpairClass> {
    let fx = f.partial(Var::X);
    let fy = f.partial(Var::Y);
    let mut out = Vec::new();

    let at_inf = q.coeffs().iter().take_while(|c| c.is_zero()).count();
    if at_inf > 0 {
        let is_zero = fx.coeffs()[0].is_zero() && fy.coeffs()[0].is_zero();
        let lambda = if is_zero { Scalar::zero() } else { lambda_at(f, &Scalar::one(), &Scalar::zero()) };
        out.push(EigenpairClass { lambda, direction: ProjectivePoint::infinity(), multiplicity: at_inf, is_zero });
    }

    // singular directions are the common roots of the partials
    let sx = to_exact_poly(&roots::dehomogenize_y(&fx));
    let sy = to_exact_poly(&roots::dehomogenize_y(&fy));
    let singular = sx.gcd(&sy);
    let qd = to_exact_poly(&roots::dehomogenize_y(q));
    for (factor, mult) in qd.square_free() {
        let g = factor.gcd(&singular);
        let h = factor.div_rem(&g).0;
        for (part, is_zero) in [(g, true), (h, false)] {
            for (t, _) in exact::simple_roots(&part, false) {
                let lambda = if is_zero {
                    Scalar::zero()
                } else if t.is_exact() {
                    lambda_at(f, &t, &Scalar::one())
                } else {
                    lambda_at_c64(f, t.to_c64(), Complex64::new(1.0, 0.0))
                };
                out.push(EigenpairClass { lambda, direction: ProjectivePoint::affine(t), multiplicity: mult, is_zero });
            }
        }
    }
    out
}

fn float_classes(f: &BinaryForm, q: &BinaryForm, tol: &Tolerances) -> Result<Vec<EigenpairClass>> {
    let fx = f.partial(Var::X).to_c64();
    let fy = f.partial(Var::Y).to_c64();
    let eval = |c: &[Complex64], x: Complex64, y: Complex64| -> (Complex64, f64) {
        let d = c.len() - 1;
        let mut value = Complex64::new(0.0, 0.0);
        let mut scale = 0.0;
        for (k, ck) in c.iter().enumerate() {
            let term = ck * x.powu((d - k) as u32) * y.powu(k as u32);
            value += term;
            scale += term.norm();
        }
        (value, scale)
    };
    let list = roots::projective_roots(q, tol)?;
    let mut out = Vec::with_capacity(list.entries.len());
    for entry in list.entries {
        let [x, y] = entry.point.to_c64();
        let (gx, sx) = eval(&fx, x, y);
        let (gy, sy) = eval(&fy, x, y);
        let is_zero = gx.norm() + gy.norm() <= tol.eps_eig * (sx + sy);
        let lambda = if is_zero { Scalar::Float(Complex64::new(0.0, 0.0)) } else { lambda_at_c64(f, x, y) };
        out.push(EigenpairClass { lambda, direction: entry.point, multiplicity: entry.multiplicity, is_zero });
    }
    Ok(out)
}

/// Spectral signature of a cubic or quartic.
pub fn signature(f: &BinaryForm, tol: &Tolerances) -> Result<SpectralSignature> {
    eigenpairs(f, tol).map(|p| SpectralSignature::of(&p))
}

/// Whether `(λ₁, v₁)` and `(λ₂, v₂)` are related by `v₂ = t·v₁`,
/// `λ₂ = t^(m−2)·λ₁` for some `t ≠ 0`. Literal when every input is exact,
/// otherwise up to relative tolerance `rel_tol`.
pub fn class_equivalent(
    lambda1: &Scalar,
    v1: [&Scalar; 2],
    lambda2: &Scalar,
    v2: [&Scalar; 2],
    m: usize,
    rel_tol: f64,
) -> bool {
    if (v1[0].is_zero() && v1[1].is_zero()) || (v2[0].is_zero() && v2[1].is_zero()) || m < 2 {
        return false;
    }
    let cross = v1[0] * v2[1] - &(v1[1] * v2[0]);
    let scale = (v1[0].abs().max(v1[1].abs())) * (v2[0].abs().max(v2[1].abs()));
    let parallel = if cross.is_exact() { cross.is_zero() } else { cross.abs() <= rel_tol * scale };
    if !parallel {
        return false;
    }
    let k = if v1[0].abs() >= v1[1].abs() { 0 } else { 1 };
    let t = v2[k] / v1[k];
    let predicted = t.pow((m - 2) as u32) * lambda1;
    predicted.approx_eq(lambda2, rel_tol)
}

impl EigenpairClass {
    /// Direction as a pair of scalars.
    pub fn vector(&self) -> [&Scalar; 2] {
        [self.direction.x(), self.direction.y()]
    }

    /// Largest component of `A·x^(m−1) − λ·x` at the representative, where
    /// `A` is the symmetric tensor of `f`.
    pub fn residual(&self, f: &BinaryForm) -> Result<f64> {
        let t = form_to_tensor(f)?;
        let v = self.vector();
        let ax = t.contract(v);
        let r0 = &ax[0] - &(&self.lambda * v[0]);
        let r1 = &ax[1] - &(&self.lambda * v[1]);
        Ok(r0.abs().max(r1.abs()))
    }
}

/// Largest class count of a generic form of order `m`.
pub fn generic_class_bound(m: usize) -> Result<usize> {
    match m {
        3 | 4 => Ok(((m - 1) * (m - 1) - 1) / (m - 2)),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tensor_to_form;
    use crate::SymmetricTensor2;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::float(re, im).unwrap()
    }

    fn finite(p: Eigenpairs) -> Vec<EigenpairClass> {
        match p {
            Eigenpairs::Finite(v) => v,
            other => panic!("expected finitely many classes, got {other:?}"),
        }
    }

    fn has_class(classes: &[EigenpairClass], lambda: &Scalar, v: [&Scalar; 2], m: usize) -> bool {
        classes.iter().any(|k| class_equivalent(&k.lambda, k.vector(), lambda, v, m, 1e-8))
    }

    #[test]
    fn eigenvector_equation_examples() {
        let q = eigenvector_equation(&BinaryForm::from_ints(&[1, 0, 0, 1]));
        assert_eq!(q, BinaryForm::from_ints(&[0, 3, -3, 0]));
        let q = eigenvector_equation(&BinaryForm::from_ints(&[1, 0, 0, 0, 1]));
        assert_eq!(q, BinaryForm::from_ints(&[0, 4, 0, -4, 0]));
        assert!(eigenvector_equation(&BinaryForm::from_ints(&[1, 0, 2, 0, 1])).is_zero());
    }

    #[test]
    fn cubic_with_two_classes() {
        for f in [BinaryForm::from_ints(&[1, 6, 12, 8]), BinaryForm::from_ints(&[1, 6, 12, 8]).to_float()] {
            let classes = finite(eigenpairs(&f, &tol()).unwrap());
            assert_eq!(classes.len(), 2);
            assert!(has_class(&classes, &Scalar::zero(), [&Scalar::int(-2), &Scalar::one()], 3));
            assert!(has_class(&classes, &Scalar::int(25), [&Scalar::one(), &Scalar::int(2)], 3));
            for k in &classes {
                assert!(k.residual(&f).unwrap() <= 1e-8);
            }
        }
    }

    #[test]
    fn exact_mode_is_exact_for_rational_directions() {
        let f = BinaryForm::from_ints(&[1, 6, 12, 8]);
        let classes = finite(eigenpairs(&f, &tol()).unwrap());
        let big = classes.iter().find(|k| !k.is_zero).unwrap();
        assert_eq!(big.direction, ProjectivePoint::affine(Scalar::ratio(1, 2)));
        // (1/2, 1) = (1, 2)/2, so λ = 25/2
        assert_eq!(big.lambda, Scalar::ratio(25, 2));
        assert_eq!(big.residual(&f).unwrap(), 0.0);
    }

    #[test]
    fn cubic_with_three_classes() {
        let f = BinaryForm::from_ints(&[9, 18, 18, 9]);
        let s7 = 7f64.sqrt();
        for g in [f.clone(), f.to_float()] {
            let classes = finite(eigenpairs(&g, &tol()).unwrap());
            assert_eq!(classes.len(), 3);
            assert!(has_class(&classes, &Scalar::int(27), [&Scalar::one(), &Scalar::one()], 3));
            for sign in [1.0, -1.0] {
                let lambda = c(0.75, sign * 0.75 * s7);
                let x = c(-0.75, sign * s7 / 4.0);
                assert!(has_class(&classes, &lambda, [&x, &Scalar::one()], 3));
            }
        }
    }

    #[test]
    fn quartic_with_two_zero_classes() {
        let f = BinaryForm::from_ints(&[2, 4, 6, 4, 2]);
        let w = c(-0.5, 3f64.sqrt() / 2.0);
        for g in [f.clone(), f.to_float()] {
            let classes = finite(eigenpairs(&g, &tol()).unwrap());
            assert_eq!(classes.len(), 4);
            assert!(has_class(&classes, &Scalar::int(9), [&Scalar::one(), &Scalar::one()], 4));
            assert!(has_class(&classes, &Scalar::int(1), [&Scalar::int(-1), &Scalar::one()], 4));
            assert!(has_class(&classes, &Scalar::zero(), [&w, &Scalar::one()], 4));
            assert!(has_class(&classes, &Scalar::zero(), [&w.conj(), &Scalar::one()], 4));
            assert_eq!(classes.iter().filter(|k| k.is_zero).count(), 2);
        }
    }

    #[test]
    fn class_equivalence_examples() {
        assert!(class_equivalent(
            &Scalar::int(-1),
            [&Scalar::zero(), &Scalar::one()],
            &Scalar::one(),
            [&Scalar::zero(), &Scalar::i()],
            4,
            0.0
        ));
        let (l, x, y) = (Scalar::ratio(3, 2), Scalar::int(2), Scalar::i());
        assert!(class_equivalent(&l, [&x, &y], &-&l, [&-&x, &-&y], 3, 0.0));
        assert!(!class_equivalent(
            &Scalar::one(),
            [&Scalar::one(), &Scalar::zero()],
            &Scalar::int(2),
            [&Scalar::one(), &Scalar::zero()],
            3,
            0.0
        ));
        assert!(!class_equivalent(
            &Scalar::one(),
            [&Scalar::zero(), &Scalar::zero()],
            &Scalar::one(),
            [&Scalar::one(), &Scalar::zero()],
            3,
            0.0
        ));
    }

    #[test]
    fn signature_examples() {
        for g in [BinaryForm::from_ints(&[1, 0, 0, 0]), BinaryForm::from_ints(&[1, 0, 0, 0]).to_float()] {
            assert_eq!(signature(&g, &tol()).unwrap(), SpectralSignature::finite(2, 1));
        }
        for g in [BinaryForm::from_ints(&[0, 0, 6, 0, 0]), BinaryForm::from_ints(&[0, 0, 6, 0, 0]).to_float()] {
            assert_eq!(signature(&g, &tol()).unwrap(), SpectralSignature::finite(4, 2));
        }
        assert_eq!(signature(&BinaryForm::zero(3), &tol()).unwrap(), SpectralSignature::infinite(false));
        let radial = BinaryForm::from_ints(&[1, 0, 2, 0, 1]);
        assert_eq!(signature(&radial, &tol()).unwrap(), SpectralSignature::infinite(true));
        assert_eq!(signature(&radial.to_float(), &tol()).unwrap(), SpectralSignature::infinite(true));
        assert_eq!(signature(&BinaryForm::from_ints(&[1, 0]), &tol()), Err(Error::UnsupportedDegree(1)));
        assert_eq!(SpectralSignature::finite(2, 1).to_string(), "(2 classes, 1 zero)");
    }

    #[test]
    fn triple_root_quartic() {
        // 4x³y: Q = 4x²(3y² − x²), a double root at (0,1) where ∇f = 0
        let f = BinaryForm::from_ints(&[0, 4, 0, 0, 0]);
        for g in [f.clone(), f.to_float()] {
            let classes = finite(eigenpairs(&g, &tol()).unwrap());
            assert_eq!(SpectralSignature::of(&Eigenpairs::Finite(classes.clone())), SpectralSignature::finite(3, 1));
            for k in &classes {
                assert!(k.residual(&g).unwrap() <= 1e-8 * (1.0 + k.lambda.abs()) * 4.0);
            }
        }
    }

    #[test]
    fn tensor_route_matches_form_route() {
        let t = SymmetricTensor2::from_ints(&[16, 8, 4, 2, 1]).unwrap();
        let f = tensor_to_form(&t);
        let classes = finite(eigenpairs(&f, &tol()).unwrap());
        assert_eq!(classes.len(), 2);
        assert!(has_class(&classes, &Scalar::int(125), [&Scalar::int(2), &Scalar::one()], 4));
    }

    #[test]
    fn generic_bounds() {
        assert_eq!(generic_class_bound(3).unwrap(), 3);
        assert_eq!(generic_class_bound(4).unwrap(), 4);
    }
}
