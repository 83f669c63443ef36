//! Float-mode roots with multiplicities.
//!
//! Raw roots come from the companion matrix. Rounding splits an m-fold root
//! into m roots at distance ~ε^(1/m), so no single radius separates "one
//! multiple root" from "nearby simple roots" at both m = 2 and m = 4.
//! Instead every grouping of the raw roots is tried: each group collapses to
//! one center, and the grouping is accepted when `lead·Π(t − c_j)^(m_j)`
//! reproduces the input coefficients to relative backward error `eps_root`.
//! The accepted grouping with the fewest groups wins.

use num_complex::Complex64;

use super::{companion, UniRoot};
use crate::algebra::Scalar;
use crate::tolerance::Tolerances;

/// Groupings are enumerated exhaustively up to this many raw roots.
const MAX_PARTITION_ROOTS: usize = 6;

fn eval(p: &[Complex64], t: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c)
}

fn derivative(p: &[Complex64]) -> Vec<Complex64> {
    p.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect()
}

/// Set partitions of `0..n` as restricted-growth label vectors.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(labels: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if labels.len() == n {
            out.push(labels.clone());
            return;
        }
        for l in 0..=max + 1 {
            labels.push(l);
            let next_max = if l > max { l } else { max };
            rec(labels, n, next_max, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut labels = vec![0];
    rec(&mut labels, n, 0, &mut out);
    out
}

/// Center of an m-fold cluster: the root of `p^(m−1)` near the centroid.
fn refine_center(p: &[Complex64], m: usize, start: Complex64) -> Complex64 {
    let mut q = p.to_vec();
    for _ in 1..m {
        q = derivative(&q);
    }
    let dq = derivative(&q);
    let mut t = start;
    for _ in 0..30 {
        let v = eval(&q, t);
        let dv = eval(&dq, t);
        if dv.norm() == 0.0 {
            break;
        }
        let step = v / dv;
        t -= step;
        if !t.is_finite() {
            return start;
        }
        if step.norm() <= 1e-16 * (1.0 + t.norm()) {
            break;
        }
    }
    t
}

fn backward_error(p: &[Complex64], clusters: &[(Complex64, usize)]) -> f64 {
    let n = p.len() - 1;
    let mut rec = vec![p[n]];
    for &(c, m) in clusters {
        for _ in 0..m {
            let mut next = vec![Complex64::new(0.0, 0.0); rec.len() + 1];
            for (k, a) in rec.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * c;
            }
            rec = next;
        }
    }
    let scale = p.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let err = p.iter().zip(&rec).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    err / scale
}

/// Groups raw roots into multiple roots validated by backward error.
fn cluster(p: &[Complex64], raw: &[Complex64], eps_root: f64) -> Vec<(Complex64, usize)> {
    let singletons: Vec<(Complex64, usize)> = raw.iter().map(|&z| (z, 1)).collect();
    if raw.len() > MAX_PARTITION_ROOTS || raw.len() < 2 {
        return singletons;
    }
    let mut best: Option<(usize, f64, Vec<(Complex64, usize)>)> = None;
    for labels in partitions(raw.len()) {
        let groups = labels.iter().max().map_or(0, |m| m + 1);
        if best.as_ref().is_some_and(|(g, _, _)| groups > *g) {
            continue;
        }
        let mut centroid_clusters = Vec::with_capacity(groups);
        let mut refined_clusters = Vec::with_capacity(groups);
        for g in 0..groups {
            let members: Vec<Complex64> = labels.iter().zip(raw).filter(|(l, _)| **l == g).map(|(_, z)| *z).collect();
            let m = members.len();
            let centroid = members.iter().sum::<Complex64>() / m as f64;
            centroid_clusters.push((centroid, m));
            let refined = if m == 1 { centroid } else { refine_center(p, m, centroid) };
            refined_clusters.push((refined, m));
        }
        for clusters in [refined_clusters, centroid_clusters] {
            let err = backward_error(p, &clusters);
            if err > eps_root {
                continue;
            }
            let better = match &best {
                None => true,
                Some((g, e, _)) => groups < *g || (groups == *g && err < *e),
            };
            if better {
                best = Some((groups, err, clusters));
            }
        }
    }
    best.map(|(_, _, c)| c).unwrap_or(singletons)
}

/// Roots of `p` (ascending coefficients, not identically zero) with
/// multiplicities. Exact zero coefficients at the leading end reduce the
/// degree; exact zeros at the constant end are roots at `0`.
pub(crate) fn roots(p: &[Complex64], tol: &Tolerances) -> Vec<UniRoot> {
    let mut p = p.to_vec();
    while p.last().is_some_and(|c| c.norm() == 0.0) {
        p.pop();
    }
    if p.len() <= 1 {
        return Vec::new();
    }
    let zeros = p.iter().take_while(|c| c.norm() == 0.0).count();
    let mut raw = vec![Complex64::new(0.0, 0.0); zeros];
    raw.extend(companion::roots(&p[zeros..]));
    let input_real = p.iter().all(|c| c.im == 0.0);
    let clusters = cluster(&p, &raw, tol.eps_root);
    clusters
        .into_iter()
        .map(|(z, m)| {
            let real = z.im.abs() <= tol.eps_real * (1.0 + z.norm());
            let z = if real && input_real { Complex64::new(z.re, 0.0) } else { z };
            UniRoot { value: Scalar::Float(z), multiplicity: m, real }
        })
        .collect()
}
