//! Randomized orbit-invariance check.

use rayon::prelude::*;
use serde_json::{json, Value};

use binform::algebra::transform;
use binform::classify::{classify, ClassificationReport, Method};
use binform::json::{report_to_json, transform_to_json};
use binform::{BinaryForm, Result, Tolerances, Transform2};

use crate::Mode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Batch {
    Real,
    Complex,
}

impl Batch {
    fn name(self) -> &'static str {
        match self {
            Batch::Real => "real",
            Batch::Complex => "complex",
        }
    }
}

struct Trial {
    index: usize,
    seed: u64,
    p: Transform2,
    outcome: std::result::Result<ClassificationReport, binform::Error>,
}

pub struct BatchSummary {
    pub batch: Batch,
    pub total: usize,
    pub type_agree: usize,
    pub signature_agree: usize,
    pub fallback: usize,
    counterexamples: Vec<Trial>,
}

pub struct OrbitCheck {
    pub base: ClassificationReport,
    pub batches: Vec<BatchSummary>,
}

impl OrbitCheck {
    pub fn agrees(&self) -> bool {
        self.batches.iter().all(|b| b.type_agree == b.total)
    }
}

/// Trial `i` of either batch draws its transform from seed `seed + i`.
/// Exact mode samples from the rational grid so the arithmetic stays exact.
fn trial_transform(mode: Mode, seed: u64, batch: Batch) -> Transform2 {
    let real_only = batch == Batch::Real;
    match mode {
        Mode::Float => Transform2::random(seed, real_only),
        Mode::Exact => Transform2::random_rational(seed, real_only),
    }
}

fn type_of(r: &ClassificationReport, batch: Batch) -> Option<usize> {
    match batch {
        Batch::Real => r.real_type.as_ref().map(|t| t.type_id),
        Batch::Complex => Some(r.complex_type.type_id),
    }
}

fn run_batch(f: &BinaryForm, base: &ClassificationReport, batch: Batch, cfg: &OrbitConfig) -> BatchSummary {
    let trials: Vec<Trial> = (0..cfg.trials)
        .into_par_iter()
        .map(|index| {
            let seed = cfg.seed.wrapping_add(index as u64);
            let p = trial_transform(cfg.mode, seed, batch);
            let mut g = transform(f, &p);
            if cfg.mode == Mode::Float {
                g = g.to_float();
            }
            Trial { index, seed, p, outcome: classify(&g, &cfg.tol) }
        })
        .collect();
    let expected = type_of(base, batch);
    let mut summary = BatchSummary {
        batch,
        total: trials.len(),
        type_agree: 0,
        signature_agree: 0,
        fallback: 0,
        counterexamples: Vec::new(),
    };
    for trial in trials {
        match &trial.outcome {
            Ok(r) => {
                if r.signature == base.signature {
                    summary.signature_agree += 1;
                }
                if r.method == Method::RootFallback {
                    summary.fallback += 1;
                }
                if type_of(r, batch) == expected {
                    summary.type_agree += 1;
                } else {
                    summary.counterexamples.push(trial);
                }
            }
            Err(_) => summary.counterexamples.push(trial),
        }
    }
    summary
}

pub struct OrbitConfig {
    pub mode: Mode,
    pub seed: u64,
    pub trials: usize,
    pub tol: Tolerances,
}

/// Classifies `f`, then `trials` images under random real transforms (only
/// for real `f`) and random complex transforms.
pub fn orbit_check(f: &BinaryForm, cfg: &OrbitConfig) -> Result<OrbitCheck> {
    let base = classify(f, &cfg.tol)?;
    let mut batches = Vec::new();
    if f.is_real() {
        batches.push(run_batch(f, &base, Batch::Real, cfg));
    }
    batches.push(run_batch(f, &base, Batch::Complex, cfg));
    Ok(OrbitCheck { base, batches })
}

fn got_text(t: &Trial, batch: Batch) -> String {
    match &t.outcome {
        Ok(r) => match type_of(r, batch) {
            Some(k) => format!("{} Type {k}", batch.name()),
            None => "no type".to_string(),
        },
        Err(e) => format!("error: {}: {e}", e.module()),
    }
}

pub fn render_text(c: &OrbitCheck) -> String {
    let mut out = String::new();
    let real = c.base.real_type.as_ref().map_or(String::new(), |t| format!(", real Type {}", t.type_id));
    out.push_str(&format!(
        "base: complex Type {}{real}, signature {}\n",
        c.base.complex_type.type_id, c.base.signature
    ));
    for b in &c.batches {
        let expected = type_of(&c.base, b.batch).map_or("-".to_string(), |k| k.to_string());
        out.push_str(&format!(
            "{} batch: {}/{} {} Type {expected}, {}/{} signature {}, root-fallback {}\n",
            b.batch.name(),
            b.type_agree,
            b.total,
            b.batch.name(),
            b.signature_agree,
            b.total,
            c.base.signature,
            b.fallback
        ));
        for t in &b.counterexamples {
            out.push_str(&format!(
                "  counterexample: trial {} seed {} P = {} got {}\n",
                t.index,
                t.seed,
                transform_to_json(&t.p),
                got_text(t, b.batch)
            ));
        }
    }
    out.push_str(if c.agrees() { "agreement: full\n" } else { "agreement: FAILED\n" });
    out
}

pub fn render_json(c: &OrbitCheck, cfg: &OrbitConfig) -> Value {
    let batches: Vec<Value> = c
        .batches
        .iter()
        .map(|b| {
            let counterexamples: Vec<Value> = b
                .counterexamples
                .iter()
                .map(|t| {
                    let mut v = json!({ "trial": t.index, "seed": t.seed, "transform": transform_to_json(&t.p) });
                    match &t.outcome {
                        Ok(r) => v["report"] = report_to_json(r),
                        Err(e) => v["error"] = json!(format!("{}: {e}", e.module())),
                    }
                    v
                })
                .collect();
            json!({
                "batch": b.batch.name(),
                "trials": b.total,
                "typeAgree": b.type_agree,
                "signatureAgree": b.signature_agree,
                "rootFallback": b.fallback,
                "counterexamples": counterexamples,
            })
        })
        .collect();
    json!({
        "seed": cfg.seed,
        "base": report_to_json(&c.base),
        "batches": batches,
        "agree": c.agrees(),
    })
}
