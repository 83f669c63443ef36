use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::form::BinaryForm;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Invertible change of variables `x = p11·u + p12·v`, `y = p21·u + p22·v`.
#[derive(Clone, Debug, PartialEq)]
pub struct Transform2 {
    p: [[Scalar; 2]; 2],
    det: Scalar,
}

/// Relative floor for float determinants: `|det| > 1e-12·max(1, max|entry|²)`.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

/// Sampling box half-width and determinant floor for [`Transform2::random`].
pub const RANDOM_BOX: f64 = 2.0;
pub const RANDOM_MIN_DET: f64 = 0.1;
/// Denominator of the entries drawn by [`Transform2::random_rational`].
pub const RATIONAL_GRID: i64 = 8;

impl Transform2 {
    pub fn new(p11: Scalar, p12: Scalar, p21: Scalar, p22: Scalar) -> Result<Self> {
        let det = &p11 * &p22 - &p12 * &p21;
        let p = [[p11, p12], [p21, p22]];
        let exact = p.iter().flatten().all(Scalar::is_exact);
        if exact {
            if det.is_zero() {
                return Err(Error::SingularTransform(0.0));
            }
        } else {
            let max_entry = p.iter().flatten().map(Scalar::abs).fold(0.0, f64::max);
            if det.abs() <= SINGULAR_THRESHOLD * max_entry.powi(2).max(1.0) {
                return Err(Error::SingularTransform(det.abs()));
            }
        }
        Ok(Transform2 { p, det })
    }

    pub fn from_ints(p11: i64, p12: i64, p21: i64, p22: i64) -> Result<Self> {
        Transform2::new(Scalar::int(p11), Scalar::int(p12), Scalar::int(p21), Scalar::int(p22))
    }

    pub fn identity() -> Self {
        Transform2::from_ints(1, 0, 0, 1).expect("identity is invertible")
    }

    /// Entry `(row, col)`, zero-based.
    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.p[row][col]
    }

    pub fn det(&self) -> &Scalar {
        &self.det
    }

    pub fn is_real(&self) -> bool {
        self.p.iter().flatten().all(Scalar::is_real)
    }

    pub fn is_exact(&self) -> bool {
        self.p.iter().flatten().all(Scalar::is_exact)
    }

    pub fn to_exact(&self) -> Self {
        let [[a, b], [c, d]] = &self.p;
        Transform2::new(a.to_exact(), b.to_exact(), c.to_exact(), d.to_exact())
            .expect("exact copy of an invertible float matrix is invertible")
    }

    pub fn inverse(&self) -> Self {
        let [[a, b], [c, d]] = &self.p;
        let det = &self.det;
        Transform2::new(d / det, -b / det, -c / det, a / det).expect("inverse is invertible")
    }

    /// Matrix product `self · other`; applying `self` then `other` to a form
    /// equals applying the product once.
    pub fn compose(&self, other: &Transform2) -> Result<Self> {
        let m = |i: usize, j: usize| &self.p[i][0] * &other.p[0][j] + &self.p[i][1] * &other.p[1][j];
        Transform2::new(m(0, 0), m(0, 1), m(1, 0), m(1, 1))
    }

    /// Deterministic random matrix with entries uniform in `[-2, 2]`
    /// (`[-2, 2]i` for imaginary parts unless `real_only`), resampled until
    /// `|det| ≥ 0.1`.
    pub fn random(seed: u64, real_only: bool) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut draw = || {
                let re = rng.gen_range(-RANDOM_BOX..=RANDOM_BOX);
                let im = if real_only { 0.0 } else { rng.gen_range(-RANDOM_BOX..=RANDOM_BOX) };
                Scalar::float(re, im).expect("finite sample")
            };
            let (a, b, c, d) = (draw(), draw(), draw(), draw());
            let det = &a * &d - &b * &c;
            if det.abs() >= RANDOM_MIN_DET {
                return Transform2::new(a, b, c, d).expect("determinant checked");
            }
        }
    }
}

impl Transform2 {
    /// Exact counterpart of [`Transform2::random`]: the same uniform draws
    /// rounded to multiples of `1/RATIONAL_GRID`, resampled until
    /// `|det| ≥ 0.1` holds exactly.
    pub fn random_rational(seed: u64, real_only: bool) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = RATIONAL_GRID as f64;
        let min_det = Scalar::ratio(1, 10);
        loop {
            let mut draw = || {
                let mut part = || {
                    let x: f64 = rng.gen_range(-RANDOM_BOX..=RANDOM_BOX);
                    Scalar::ratio((x * grid).round() as i64, RATIONAL_GRID)
                };
                let re = part();
                let im = if real_only { Scalar::zero() } else { part() };
                re + im * Scalar::i()
            };
            let (a, b, c, d) = (draw(), draw(), draw(), draw());
            let det = &a * &d - &b * &c;
            let det_sq = (&det * &det.conj()).as_exact().expect("exact").re.clone();
            let min_sq = (&min_det * &min_det).as_exact().expect("exact").re.clone();
            if det_sq >= min_sq {
                return Transform2::new(a, b, c, d).expect("determinant checked");
            }
        }
    }
}

/// Product of linear forms as coefficient arrays in the `(u, v)` monomial basis.
fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// `g(u, v) = f(p11·u + p12·v, p21·u + p22·v)` by full expansion.
pub fn transform(f: &BinaryForm, p: &Transform2) -> BinaryForm {
    let d = f.degree();
    let lx = [p.p[0][0].clone(), p.p[0][1].clone()];
    let ly = [p.p[1][0].clone(), p.p[1][1].clone()];
    // powers[j] = (linear form)^j
    let powers = |l: &[Scalar; 2]| {
        let mut out = vec![vec![Scalar::one()]];
        for j in 1..=d {
            let next = poly_mul(&out[j - 1], l);
            out.push(next);
        }
        out
    };
    let (px, py) = (powers(&lx), powers(&ly));
    let mut coeffs = vec![Scalar::zero(); d + 1];
    for (k, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = poly_mul(&px[d - k], &py[k]);
        for (slot, t) in coeffs.iter_mut().zip(term) {
            *slot = &*slot + &(c * &t);
        }
    }
    BinaryForm::new(coeffs).expect("non-empty")
}

/// Same result as [`transform`], computed through the closed coefficient
/// formulas in the binomially weighted (tensor) convention.
pub fn transform_coeffs_closed(f: &BinaryForm, p: &Transform2) -> Result<BinaryForm> {
    let [[p1, p2], [p3, p4]] = &p.p;
    let m = f.check_supported()?;
    let c = f.coeffs();
    let n = |k: i64| Scalar::int(k);
    let coeffs = if m == 3 {
        let (a, b, cc, d) = (c[0].clone(), &c[1] / &n(3), &c[2] / &n(3), c[3].clone());
        let big_a = &a * &p1.pow(3) + &n(3) * &b * &p1.pow(2) * p3 + &n(3) * &cc * p1 * &p3.pow(2) + &d * &p3.pow(3);
        let big_b = &a * &p1.pow(2) * p2
            + &b * &(&p1.pow(2) * p4 + &n(2) * p1 * p2 * p3)
            + &cc * &(&n(2) * p1 * p3 * p4 + p2 * &p3.pow(2))
            + &d * &p3.pow(2) * p4;
        let big_c = &a * p1 * &p2.pow(2)
            + &b * &(&n(2) * p1 * p2 * p4 + &p2.pow(2) * p3)
            + &cc * &(p1 * &p4.pow(2) + &n(2) * p2 * p3 * p4)
            + &d * p3 * &p4.pow(2);
        let big_d = &a * &p2.pow(3) + &n(3) * &b * &p2.pow(2) * p4 + &n(3) * &cc * p2 * &p4.pow(2) + &d * &p4.pow(3);
        vec![big_a, &n(3) * &big_b, &n(3) * &big_c, big_d]
    } else {
        let (a, b, cc, d, e) = (c[0].clone(), &c[1] / &n(4), &c[2] / &n(6), &c[3] / &n(4), c[4].clone());
        let big_a = &a * &p1.pow(4)
            + &n(4) * &b * &p1.pow(3) * p3
            + &n(6) * &cc * &p1.pow(2) * &p3.pow(2)
            + &n(4) * &d * p1 * &p3.pow(3)
            + &e * &p3.pow(4);
        let big_b = &a * &p1.pow(3) * p2
            + &b * &(&n(3) * &p1.pow(2) * p2 * p3 + &p1.pow(3) * p4)
            + &cc * &(&n(3) * p1 * p2 * &p3.pow(2) + &n(3) * &p1.pow(2) * p3 * p4)
            + &d * &(p2 * &p3.pow(3) + &n(3) * p1 * &p3.pow(2) * p4)
            + &e * &p3.pow(3) * p4;
        let big_c = &a * &p1.pow(2) * &p2.pow(2)
            + &n(2) * &b * &(&p1.pow(2) * p2 * p4 + p1 * &p2.pow(2) * p3)
            + &cc * &(&p1.pow(2) * &p4.pow(2) + &n(4) * p1 * p2 * p3 * p4 + &p2.pow(2) * &p3.pow(2))
            + &n(2) * &d * &(p1 * p3 * &p4.pow(2) + p2 * &p3.pow(2) * p4)
            + &e * &p3.pow(2) * &p4.pow(2);
        let big_d = &a * p1 * &p2.pow(3)
            + &b * &(&p2.pow(3) * p3 + &n(3) * p1 * &p2.pow(2) * p4)
            + &n(3) * &cc * &(p1 * p2 * &p4.pow(2) + &p2.pow(2) * p3 * p4)
            + &d * &(p1 * &p4.pow(3) + &n(3) * p2 * p3 * &p4.pow(2))
            + &e * p3 * &p4.pow(3);
        let big_e = &a * &p2.pow(4)
            + &n(4) * &b * &p2.pow(3) * p4
            + &n(6) * &cc * &p2.pow(2) * &p4.pow(2)
            + &n(4) * &d * p2 * &p4.pow(3)
            + &e * &p4.pow(4);
        vec![big_a, &n(4) * &big_b, &n(6) * &big_c, &n(4) * &big_d, big_e]
    };
    BinaryForm::new(coeffs)
}
