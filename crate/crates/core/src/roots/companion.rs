//! Eigenvalues of the companion matrix by shifted complex QR iteration on
//! the (already upper Hessenberg) companion form.

use num_complex::Complex64;

const MAX_SWEEPS: usize = 500;

/// All roots of `p` (ascending coefficients, nonzero leading coefficient).
pub(crate) fn roots(p: &[Complex64]) -> Vec<Complex64> {
    let n = p.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = p[n];
    let monic: Vec<Complex64> = p.iter().map(|c| c / lead).collect();
    // rescale t = sigma·s so that the scaled roots are of order one
    let sigma = (0..n)
        .filter(|&k| monic[k].norm() > 0.0)
        .map(|k| monic[k].norm().powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max);
    let sigma = if sigma > 0.0 && sigma.is_finite() { sigma } else { 1.0 };
    let scaled: Vec<Complex64> = (0..n).map(|k| monic[k] / sigma.powi((n - k) as i32)).collect();

    let zero = Complex64::new(0.0, 0.0);
    let mut h = vec![vec![zero; n]; n];
    for j in 0..n {
        h[0][j] = -scaled[n - 1 - j];
    }
    for i in 1..n {
        h[i][i - 1] = Complex64::new(1.0, 0.0);
    }
    hessenberg_eigenvalues(&mut h).into_iter().map(|z| z * sigma).collect()
}

fn hessenberg_eigenvalues(h: &mut [Vec<Complex64>]) -> Vec<Complex64> {
    let n = h.len();
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut total = 0usize;
    while hi > 0 {
        let mut l = hi;
        while l > 0 {
            let s = h[l - 1][l - 1].norm() + h[l][l].norm();
            let s = if s == 0.0 { 1.0 } else { s };
            if h[l][l - 1].norm() <= f64::EPSILON * s {
                h[l][l - 1] = Complex64::new(0.0, 0.0);
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            iter = 0;
            continue;
        }
        total += 1;
        if total > MAX_SWEEPS * n {
            break;
        }
        iter += 1;
        let shift = if iter % 11 == 10 {
            // exceptional shift to break cycles
            h[hi][hi] + Complex64::new(0.75, 0.4) * h[hi][hi - 1].norm()
        } else {
            wilkinson_shift(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        };
        qr_step(h, l, hi, shift);
    }
    (0..n).map(|i| h[i][i]).collect()
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let (m1, m2) = (mid + disc, mid - disc);
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// One shifted QR sweep on the active block `lo..=hi` via Givens rotations.
fn qr_step(h: &mut [Vec<Complex64>], lo: usize, hi: usize, shift: Complex64) {
    for k in lo..=hi {
        h[k][k] -= shift;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let x = h[k][k];
        let y = h[k + 1][k];
        let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
        let (c, s) = if r == 0.0 { (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)) } else { (x / r, y / r) };
        for j in k..=hi {
            let (a, b) = (h[k][j], h[k + 1][j]);
            h[k][j] = c.conj() * a + s.conj() * b;
            h[k + 1][j] = -s * a + c * b;
        }
        rots.push((c, s));
    }
    for (offset, (c, s)) in rots.into_iter().enumerate() {
        let k = lo + offset;
        let last = (k + 2).min(hi);
        for row in h.iter_mut().take(last + 1).skip(lo) {
            let (a, b) = (row[k], row[k + 1]);
            row[k] = a * c + b * s;
            row[k + 1] = -(a * s.conj()) + b * c.conj();
        }
    }
    for k in lo..=hi {
        h[k][k] += shift;
    }
}
