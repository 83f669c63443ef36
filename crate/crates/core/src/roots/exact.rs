//! Exact-mode roots: multiplicities from Yun's square-free decomposition over
//! ℚ(i), rational roots recovered exactly, real-root counts from Sturm
//! sequences. Irrational roots are reported as floats.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::{closed, UniRoot};
use crate::algebra::{GaussianRational, Scalar};
use crate::poly::Poly;

const MAX_DENOMINATOR: i64 = 1_000_000;

/// Best rational approximation with bounded denominator, if close enough.
fn reconstruct_real(x: f64) -> Option<BigRational> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let tol = 1e-9 * (1.0 + x.abs());
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        let ai = a as i64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > MAX_DENOMINATOR {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= tol {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = r - a;
        if frac.abs() < 1e-15 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

fn reconstruct(z: Complex64) -> Option<GaussianRational> {
    let scale = 1.0 + z.norm();
    let re = if z.re.abs() <= 1e-10 * scale { BigRational::zero() } else { reconstruct_real(z.re)? };
    let im = if z.im.abs() <= 1e-10 * scale { BigRational::zero() } else { reconstruct_real(z.im)? };
    Some(GaussianRational::new(re, im))
}

/// Number of distinct real roots of a polynomial with Gaussian-rational
/// coefficients: real roots are the common roots of its real and
/// imaginary parts.
fn real_root_count(p: &Poly<GaussianRational>) -> usize {
    let (re, im) = p.split_re_im();
    let core = if im.is_zero() { re } else { re.gcd(&im) };
    core.count_real_roots()
}

/// Distinct roots of a square-free polynomial, each with a realness flag.
/// Without `realness` the flags of irrational roots are not computed and
/// read `false`.
pub(crate) fn simple_roots(p: &Poly<GaussianRational>, realness: bool) -> Vec<(Scalar, bool)> {
    let mut out = Vec::new();
    let mut rest = p.monic();
    if rest.degree().unwrap_or(0) == 0 {
        return out;
    }
    for z in closed::roots(&rest.to_c64()) {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let Some(g) = reconstruct(z) else { continue };
        if rest.eval(&g).is_zero() {
            let linear = Poly::new(vec![-g.clone(), GaussianRational::one()]);
            rest = rest.div_rem(&linear).0;
            let real = g.is_real();
            out.push((Scalar::Exact(g), real));
        }
    }
    let n = rest.degree().unwrap_or(0);
    if n == 0 {
        return out;
    }
    if n == 1 {
        let g = -&rest.coeffs()[0];
        let real = g.is_real();
        out.push((Scalar::Exact(g), real));
        return out;
    }
    let real_count = if realness { real_root_count(&rest) } else { 0 };
    let mut numeric = closed::roots(&rest.to_c64());
    numeric.sort_by(|a, b| {
        let (ka, kb) = (a.im.abs() / (1.0 + a.norm()), b.im.abs() / (1.0 + b.norm()));
        ka.partial_cmp(&kb).expect("finite roots")
    });
    for (idx, z) in numeric.into_iter().enumerate() {
        let real = idx < real_count;
        let z = if real { Complex64::new(z.re, 0.0) } else { z };
        out.push((Scalar::Float(z), real));
    }
    out
}

/// All roots of a nonzero polynomial with exact multiplicities.
pub(crate) fn roots(p: &Poly<GaussianRational>) -> Vec<UniRoot> {
    let mut out = Vec::new();
    for (factor, mult) in p.square_free() {
        for (value, real) in simple_roots(&factor, true) {
            out.push(UniRoot { value, multiplicity: mult, real });
        }
    }
    out
}
