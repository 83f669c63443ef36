//! Closed-form (radical) roots of complex polynomials of degree ≤ 4,
//! followed by Newton polishing. Intended for square-free inputs.

use num_complex::Complex64;

fn cbrt(z: Complex64) -> Complex64 {
    if z.norm() == 0.0 {
        return z;
    }
    Complex64::from_polar(z.norm().cbrt(), z.arg() / 3.0)
}

fn quadratic(b: Complex64, c: Complex64) -> [Complex64; 2] {
    // t² + b t + c, computed without cancellation
    let disc = (b * b - 4.0 * c).sqrt();
    let q = if (b.conj() * disc).re >= 0.0 { -(b + disc) / 2.0 } else { -(b - disc) / 2.0 };
    if q.norm() == 0.0 {
        return [q, q];
    }
    [q, c / q]
}

fn cubic(a: Complex64, b: Complex64, c: Complex64) -> [Complex64; 3] {
    // t³ + a t² + b t + c with t = s − a/3
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let root = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let u1 = -q / 2.0 + root;
    let u2 = -q / 2.0 - root;
    let u3 = if u1.norm() >= u2.norm() { u1 } else { u2 };
    let u = cbrt(u3);
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let shift = a / 3.0;
    let mut out = [Complex64::new(0.0, 0.0); 3];
    let mut w = Complex64::new(1.0, 0.0);
    for slot in &mut out {
        let uk = u * w;
        let vk = if uk.norm() == 0.0 { Complex64::new(0.0, 0.0) } else { -p / (3.0 * uk) };
        *slot = uk + vk - shift;
        w *= omega;
    }
    out
}

fn quartic(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> [Complex64; 4] {
    // t⁴ + a t³ + b t² + c t + d with t = s − a/4  →  s⁴ + p s² + q s + r
    let a2 = a * a;
    let p = b - 3.0 * a2 / 8.0;
    let q = c - a * b / 2.0 + a2 * a / 8.0;
    let r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;
    let shift = a / 4.0;
    let scale = 1.0 + p.norm() + q.norm().sqrt() + r.norm().sqrt();
    if q.norm() <= 1e-14 * scale * scale * scale {
        let [z1, z2] = quadratic(p, r);
        let (s1, s2) = (z1.sqrt(), z2.sqrt());
        return [s1 - shift, -s1 - shift, s2 - shift, -s2 - shift];
    }
    // resolvent: 8m³ + 8p m² + (2p² − 8r) m − q² = 0
    let ms = cubic(p, p * p / 4.0 - r, -q * q / 8.0);
    let m = ms.into_iter().max_by(|x, y| x.norm().partial_cmp(&y.norm()).expect("finite")).expect("three roots");
    let s = (2.0 * m).sqrt();
    let k = q / (2.0 * s);
    let [r1, r2] = quadratic(-s, p / 2.0 + m + k);
    let [r3, r4] = quadratic(s, p / 2.0 + m - k);
    [r1 - shift, r2 - shift, r3 - shift, r4 - shift]
}

fn eval(p: &[Complex64], t: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut dv = Complex64::new(0.0, 0.0);
    for c in p.iter().rev() {
        dv = dv * t + v;
        v = v * t + c;
    }
    (v, dv)
}

/// Newton steps that are kept only while they reduce `|p|`.
pub(crate) fn polish(p: &[Complex64], mut t: Complex64) -> Complex64 {
    for _ in 0..8 {
        let (v, dv) = eval(p, t);
        if v.norm() == 0.0 || dv.norm() == 0.0 {
            break;
        }
        let next = t - v / dv;
        if !next.is_finite() || eval(p, next).0.norm() >= v.norm() {
            break;
        }
        t = next;
    }
    t
}

/// Roots of `p` (ascending, nonzero leading coefficient, degree ≤ 4).
pub(crate) fn roots(p: &[Complex64]) -> Vec<Complex64> {
    let n = p.len() - 1;
    let lead = p[n];
    let m: Vec<Complex64> = p.iter().map(|c| c / lead).collect();
    let raw: Vec<Complex64> = match n {
        0 => Vec::new(),
        1 => vec![-m[0]],
        2 => quadratic(m[1], m[0]).to_vec(),
        3 => cubic(m[2], m[1], m[0]).to_vec(),
        4 => quartic(m[3], m[2], m[1], m[0]).to_vec(),
        _ => panic!("closed-form roots only up to degree 4"),
    };
    raw.into_iter().map(|t| polish(p, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_roots(p: &[Complex64], expected: &[Complex64]) {
        let got = roots(p);
        assert_eq!(got.len(), expected.len());
        for e in expected {
            assert!(got.iter().any(|g| (g - e).norm() < 1e-10), "missing {e} in {got:?}");
        }
    }

    #[test]
    fn cubic_with_complex_roots() {
        // 3(t² + t + 1)... from 9x³+18x²y+18xy²+9y³ eigen-equation style: t³ + 1
        let w = c(0.5, 3f64.sqrt() / 2.0);
        assert_roots(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], &[c(-1.0, 0.0), w, w.conj()]);
    }

    #[test]
    fn quartic_generic_and_biquadratic() {
        // (t-1)(t+2)(t-i)(t+3i)
        let rs = [c(1.0, 0.0), c(-2.0, 0.0), c(0.0, 1.0), c(0.0, -3.0)];
        let mut p = vec![c(1.0, 0.0)];
        for r in rs {
            let mut next = vec![c(0.0, 0.0); p.len() + 1];
            for (k, a) in p.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            p = next;
        }
        assert_roots(&p, &rs);
        // t⁴ − 5t² + 4 = (t²−1)(t²−4)
        assert_roots(
            &[c(4.0, 0.0), c(0.0, 0.0), c(-5.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
            &[c(1.0, 0.0), c(-1.0, 0.0), c(2.0, 0.0), c(-2.0, 0.0)],
        );
    }

    #[test]
    fn quadratic_with_tiny_root() {
        assert_roots(&[c(1e-8, 0.0), c(-1.0, 0.0), c(1.0, 0.0)], &[c(1e-8 + 1e-16, 0.0), c(1.0 - 1e-8, 0.0)]);
    }
}
