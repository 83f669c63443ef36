/// Numerical thresholds used by float-mode decisions. Exact-mode decisions
/// never consult them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative backward error a candidate multiplicity structure must meet
    /// before nearby float roots are merged into one multiple root.
    pub eps_root: f64,
    /// A float root `z` counts as real when `|Im z| ≤ eps_real·(1 + |z|)`.
    pub eps_real: f64,
    /// Relative tolerance for eigen-system residuals, zero eigenvalues and
    /// the `Q ≡ 0` test.
    pub eps_eig: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eps_root: 1e-9, eps_real: 1e-8, eps_eig: 1e-8 }
    }
}
