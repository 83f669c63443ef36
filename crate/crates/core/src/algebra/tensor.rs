use super::form::BinaryForm;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Unique entries of a 2×2×2 (order 3) or 2×2×2×2 (order 4) symmetric tensor.
///
/// `entries[k]` is the common value of every component whose multi-index
/// contains the index 2 exactly `k` times, i.e. `(a, b, c, d[, e])`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricTensor2 {
    entries: Vec<Scalar>,
}

const SYMMETRY_TOL: f64 = 1e-12;

impl SymmetricTensor2 {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        match entries.len() {
            4 | 5 => Ok(SymmetricTensor2 { entries }),
            n => Err(Error::UnsupportedDegree(n.saturating_sub(1))),
        }
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        SymmetricTensor2::new(entries.iter().map(|&e| Scalar::int(e)).collect())
    }

    /// Builds the tensor from all `2^order` components in lexicographic
    /// multi-index order, rejecting arrays that are not symmetric.
    pub fn from_full(order: usize, full: Vec<Scalar>) -> Result<Self> {
        if !(3..=4).contains(&order) {
            return Err(Error::UnsupportedDegree(order));
        }
        let n = 1usize << order;
        if full.len() != n {
            return Err(Error::CoefficientCount { expected: n, got: full.len() });
        }
        let mut entries: Vec<Option<Scalar>> = vec![None; order + 1];
        let scale = full.iter().map(Scalar::abs).fold(0.0, f64::max);
        for (idx, value) in full.into_iter().enumerate() {
            let k = idx.count_ones() as usize;
            match &entries[k] {
                None => entries[k] = Some(value),
                Some(first) => {
                    let same = match (first, &value) {
                        (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
                        _ => (first.to_c64() - value.to_c64()).norm() <= SYMMETRY_TOL * (1.0 + scale),
                    };
                    if !same {
                        return Err(Error::AsymmetricTensor);
                    }
                }
            }
        }
        SymmetricTensor2::new(entries.into_iter().map(|e| e.expect("every class is hit")).collect())
    }

    pub fn order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(Scalar::is_real)
    }

    /// All `2^order` components in lexicographic multi-index order.
    pub fn full(&self) -> Vec<Scalar> {
        (0..1usize << self.order()).map(|idx| self.entries[idx.count_ones() as usize].clone()).collect()
    }

    /// Contraction `A·v^(m-1)`: component `i` sums `a_{i j2..jm} v_j2 … v_jm`.
    pub fn contract(&self, v: [&Scalar; 2]) -> [Scalar; 2] {
        let m = self.order();
        let full = self.full();
        let mut out = [Scalar::zero(), Scalar::zero()];
        for (idx, a) in full.iter().enumerate() {
            let lead = (idx >> (m - 1)) & 1;
            let mut term = a.clone();
            for pos in 0..m - 1 {
                term = term * v[(idx >> pos) & 1];
            }
            out[lead] = &out[lead] + &term;
        }
        out
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `(a,b,c,d)` ↦ `a x³ + 3b x²y + 3c xy² + d y³`; quartics use weights `1,4,6,4,1`.
pub fn tensor_to_form(t: &SymmetricTensor2) -> BinaryForm {
    let m = t.order();
    let coeffs = t.entries.iter().enumerate().map(|(k, e)| e * &Scalar::int(binomial(m, k))).collect();
    BinaryForm::new(coeffs).expect("non-empty")
}

/// Inverse of [`tensor_to_form`].
pub fn form_to_tensor(f: &BinaryForm) -> Result<SymmetricTensor2> {
    let m = f.check_supported()?;
    let entries = f.coeffs().iter().enumerate().map(|(k, c)| c / &Scalar::int(binomial(m, k))).collect();
    SymmetricTensor2::new(entries)
}
