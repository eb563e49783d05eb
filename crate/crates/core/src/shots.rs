//! Finite-shot estimation of `|G|^2` entries under an optional depolarising
//! channel, ingestion of measured metric tables and error reports against
//! theory.

use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ChinosError, Result};
use crate::metric::{MetricMatrix, PairIndex, BLOCK_ORDER};
use crate::modes::bell_family;
use crate::qstate::{Basis, DensityMatrix, StateVector};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "p", rename_all = "snake_case")]
pub enum NoiseModel {
    None,
    /// `rho -> (1 - p) rho + p I / 4` after each operator layer.
    Depolarizing(f64),
}

impl NoiseModel {
    fn validate(self) -> Result<Self> {
        match self {
            NoiseModel::Depolarizing(p) if !(0.0..=1.0).contains(&p) => Err(ChinosError::InvalidConfig(format!(
                "depolarizing p = {p} is outside [0, 1]"
            ))),
            m => Ok(m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShotConfig {
    pub shots: u64,
    pub seed: u64,
    pub noise: NoiseModel,
}

impl Default for ShotConfig {
    fn default() -> Self {
        ShotConfig {
            shots: 8192,
            seed: 0,
            noise: NoiseModel::None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub row: PairIndex,
    pub col: PairIndex,
    pub estimate: f64,
    pub stderr: f64,
    /// Exact `|00>` population the shots sample from.
    pub population: f64,
}

/// Population of `|00>` after `O†_{j1} O†_{i1} O_{i2} O_{j2} |00>`, with the
/// noise channel applied after each of the four layers.
pub fn overlap_population(row: PairIndex, col: PairIndex, theta: f64, noise: NoiseModel) -> Result<f64> {
    let noise = noise.validate()?;
    let family = bell_family(theta)?;
    let layers = [
        family.op(col.second as usize)?.clone(),
        family.op(col.first as usize)?.clone(),
        family.op(row.first as usize)?.adjoint(),
        family.op(row.second as usize)?.adjoint(),
    ];
    let mut rho = DensityMatrix::from_pure(&StateVector::basis_state(Basis::Qubit2, 0)?);
    for layer in &layers {
        rho = rho.conjugate_by(layer)?;
        if let NoiseModel::Depolarizing(p) = noise {
            rho = rho.depolarize(p);
        }
    }
    Ok(rho.population(0).clamp(0.0, 1.0))
}

/// Bernoulli sampling of the `|00>` outcome. Deterministic under the seed.
pub fn estimate_overlap(row: PairIndex, col: PairIndex, theta: f64, config: ShotConfig) -> Result<Estimate> {
    if config.shots == 0 {
        return Err(ChinosError::InvalidConfig("shots must be at least 1".into()));
    }
    let population = overlap_population(row, col, theta, config.noise)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let hits = (0..config.shots).filter(|_| rng.gen_bool(population)).count();
    let n = config.shots as f64;
    let estimate = hits as f64 / n;
    Ok(Estimate {
        row,
        col,
        estimate,
        stderr: (estimate * (1.0 - estimate) / n).sqrt(),
        population,
    })
}

/// All 256 entries in canonical order. Entry `k` uses seed `seed ^ k`, so the
/// result does not depend on scheduling.
pub fn estimate_matrix(theta: f64, config: ShotConfig) -> Result<Vec<Estimate>> {
    (0..256usize)
        .into_par_iter()
        .map(|k| {
            let cfg = ShotConfig {
                seed: config.seed ^ k as u64,
                ..config
            };
            estimate_overlap(
                PairIndex::from_canonical(k / 16),
                PairIndex::from_canonical(k % 16),
                theta,
                cfg,
            )
        })
        .collect()
}

/// Depolarising strength that brings the noisy population of `row, col` to
/// `target`, by bisection on `p ∈ [0, 1]`.
pub fn calibrate_depolarizing(target: f64, row: PairIndex, col: PairIndex, theta: f64) -> Result<f64> {
    let f = |p: f64| overlap_population(row, col, theta, NoiseModel::Depolarizing(p)).map(|x| x - target);
    let (mut lo, mut hi) = (0.0, 1.0);
    let (flo, fhi) = (f(lo)?, f(hi)?);
    if flo.signum() == fhi.signum() {
        return Err(ChinosError::RootNotBracketed { lo, hi });
    }
    for _ in 0..200 {
        if hi - lo <= 1e-14 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid)?.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentalMatrix {
    /// Signed values, 16 x 16 canonical row-major.
    entries: Vec<f64>,
    pub source_label: String,
}

const MODULUS_SLACK: f64 = 0.05;

static BUNDLED: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/ibmq_manila_g.csv"));

impl ExperimentalMatrix {
    pub fn get(&self, row: PairIndex, col: PairIndex) -> f64 {
        self.entries[16 * row.canonical() + col.canonical()]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Builds a matrix from 16 rows in block order.
    pub fn from_block_rows(rows: &[Vec<f64>], source_label: &str) -> Result<Self> {
        if rows.len() != 16 || rows.iter().any(|r| r.len() != 16) {
            return Err(ChinosError::Shape {
                rows: rows.len(),
                cols: rows.iter().map(|r| r.len()).find(|&l| l != 16).unwrap_or(16),
            });
        }
        let mut entries = vec![0.0; 256];
        for (r, row) in BLOCK_ORDER.iter().zip(rows) {
            for (c, &v) in BLOCK_ORDER.iter().zip(row) {
                if v.abs() > 1.0 + MODULUS_SLACK {
                    return Err(ChinosError::Parse {
                        line: r.block_position() + 1,
                        field: c.block_position() + 1,
                        message: format!("|{v}| exceeds 1 + {MODULUS_SLACK}"),
                    });
                }
                entries[16 * r.canonical() + c.canonical()] = v;
            }
        }
        Ok(ExperimentalMatrix {
            entries,
            source_label: source_label.to_string(),
        })
    }
}

/// Parses a 16 x 16 table in block order.
///
/// Fields are separated by `;` (decimal commas allowed) or by `,` (decimal
/// points). An optional header row and an optional leading label column are
/// recognised. Blank lines and lines starting with `#` are skipped.
pub fn parse_experimental(text: &str, source_label: &str) -> Result<ExperimentalMatrix> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let semicolon = line.contains(';');
        let fields: Vec<&str> = if semicolon {
            line.split(';').collect()
        } else {
            line.split(',').collect()
        };
        let first = fields[0].trim();
        let is_header =
            rows.is_empty() && first.parse::<f64>().is_err() && first.replace(',', ".").parse::<f64>().is_err();
        if is_header && fields.iter().skip(1).all(|f| f.trim().parse::<PairIndex>().is_ok()) {
            continue;
        }
        let has_label = fields.len() == 17;
        let values = if has_label { &fields[1..] } else { &fields[..] };
        let mut row = Vec::with_capacity(values.len());
        for (k, f) in values.iter().enumerate() {
            let norm = if semicolon {
                f.trim().replace(',', ".")
            } else {
                f.trim().to_string()
            };
            let v = norm.parse::<f64>().map_err(|e| ChinosError::Parse {
                line: idx + 1,
                field: k + 1 + usize::from(has_label),
                message: format!("{f:?}: {e}"),
            })?;
            row.push(v);
        }
        if row.len() != 16 {
            return Err(ChinosError::Shape {
                rows: rows.len() + 1,
                cols: row.len(),
            });
        }
        rows.push(row);
    }
    ExperimentalMatrix::from_block_rows(&rows, source_label)
}

pub fn ingest_experimental(path: impl AsRef<Path>) -> Result<ExperimentalMatrix> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_experimental(&text, &path.display().to_string())
}

/// The measured table shipped with the crate.
pub fn bundled_experimental() -> ExperimentalMatrix {
    parse_experimental(BUNDLED, "data/ibmq_manila_g.csv").expect("bundled table is well formed")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorReport {
    pub avg_err_on_units: f64,
    pub avg_err_on_zeros: f64,
    pub max_err: f64,
    /// `| |exp| - |theory| |`, 16 x 16 in block order.
    pub deltas: Vec<Vec<f64>>,
}

/// Mean modulus error over entries whose theoretical modulus is one and over
/// those where it is zero.
pub fn error_report(theory: &MetricMatrix<f64>, exp: &ExperimentalMatrix) -> ErrorReport {
    let (mut units, mut zeros) = (Vec::new(), Vec::new());
    let mut deltas = vec![vec![0.0; 16]; 16];
    for (r, &row) in BLOCK_ORDER.iter().enumerate() {
        for (c, &col) in BLOCK_ORDER.iter().enumerate() {
            let t = theory.get(row, col).norm();
            let d = (exp.get(row, col).abs() - t).abs();
            deltas[r][c] = d;
            if (t - 1.0).abs() <= 1e-9 {
                units.push(d);
            } else if t <= 1e-9 {
                zeros.push(d);
            }
        }
    }
    let mean = |v: &[f64]| {
        if v.is_empty() {
            0.0
        } else {
            v.iter().sum::<f64>() / v.len() as f64
        }
    };
    ErrorReport {
        avg_err_on_units: mean(&units),
        avg_err_on_zeros: mean(&zeros),
        max_err: deltas.iter().flatten().fold(0.0, |m: f64, &d| m.max(d)),
        deltas,
    }
}

/// Off-diagonal guess pairs whose measured overlap modulus is at most
/// `threshold`, in block order.
pub fn admissible_pairs(exp: &ExperimentalMatrix, threshold: f64) -> Vec<(PairIndex, PairIndex)> {
    let mut out = Vec::new();
    for &r in &BLOCK_ORDER {
        for &c in &BLOCK_ORDER {
            if r != c && exp.get(r, c).abs() <= threshold {
                out.push((r, c));
            }
        }
    }
    out
}
