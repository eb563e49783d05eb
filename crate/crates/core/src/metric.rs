//! The two-qubit game: the metric matrix of guess states against joint
//! states, its block structure, orthogonality-constrained guessing, payoffs
//! and normalised winning probabilities.
//!
//! Guess and joint states are `O_i O_j |00>` for the rotated Bell family. A
//! [`PairIndex`] `(i, j)` labels such a state. Canonical storage is
//! lexicographic in `(i, j)`; reports use [`BLOCK_ORDER`], which groups the
//! sixteen labels into four mutually orthogonal sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{ChinosError, Result};
use crate::games::Player;
use crate::modes::{bell_family, OperatorFamily};
use crate::qstate::{overlap, Basis, DensityMatrix, StateVector};
use crate::scalar::{Cx, Scalar};
use crate::strategy::{outcome_of, EquilibriumReport, IterationRecord, Outcome, StrategySummary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairIndex {
    pub first: u8,
    pub second: u8,
}

impl PairIndex {
    pub const fn new(first: u8, second: u8) -> Self {
        PairIndex { first, second }
    }

    pub fn from_canonical(k: usize) -> Self {
        PairIndex::new((k / 4) as u8, (k % 4) as u8)
    }

    pub fn canonical(self) -> usize {
        4 * self.first as usize + self.second as usize
    }

    pub fn swapped(self) -> Self {
        PairIndex::new(self.second, self.first)
    }

    /// Position in [`BLOCK_ORDER`].
    pub fn block_position(self) -> usize {
        BLOCK_ORDER
            .iter()
            .position(|&p| p == self)
            .expect("every pair appears in the block order")
    }

    pub fn all() -> impl Iterator<Item = PairIndex> {
        (0..16).map(PairIndex::from_canonical)
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first, self.second)
    }
}

impl FromStr for PairIndex {
    type Err = ChinosError;

    /// Accepts `"22"`, `"2,2"` or `"2 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| ChinosError::InvalidConfig(format!("bad pair label {s:?}")))?;
        match digits[..] {
            [a, b] if a < 4 && b < 4 => Ok(PairIndex::new(a, b)),
            _ => Err(ChinosError::InvalidConfig(format!("bad pair label {s:?}"))),
        }
    }
}

const fn p(a: u8, b: u8) -> PairIndex {
    PairIndex::new(a, b)
}

/// Guess labels grouped Set by Set, pair by pair; the row and column order of
/// every table.
#[rustfmt::skip]
pub const BLOCK_ORDER: [PairIndex; 16] = [
    p(0, 0), p(2, 2), p(1, 2), p(3, 0),
    p(1, 3), p(3, 1), p(0, 1), p(2, 3),
    p(0, 2), p(2, 0), p(1, 0), p(3, 2),
    p(1, 1), p(3, 3), p(0, 3), p(2, 1),
];

/// Set1..Set4.
pub const SETS: [[PairIndex; 4]; 4] = [
    [p(0, 0), p(2, 2), p(1, 2), p(3, 0)],
    [p(1, 3), p(3, 1), p(0, 1), p(2, 3)],
    [p(0, 2), p(2, 0), p(1, 0), p(3, 2)],
    [p(1, 1), p(3, 3), p(0, 3), p(2, 1)],
];

/// P1..P8.
pub const PAIRS: [[PairIndex; 2]; 8] = [
    [p(0, 0), p(2, 2)],
    [p(1, 2), p(3, 0)],
    [p(1, 3), p(3, 1)],
    [p(0, 1), p(2, 3)],
    [p(0, 2), p(2, 0)],
    [p(1, 0), p(3, 2)],
    [p(1, 1), p(3, 3)],
    [p(0, 3), p(2, 1)],
];

/// Pair class number (1..=8) of a guess.
pub fn pair_class(q: PairIndex) -> usize {
    PAIRS
        .iter()
        .position(|pair| pair.contains(&q))
        .expect("pairs partition the labels")
        + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JointOrder {
    /// Joint state `O_{a0} O_{b0} |00>`: Bob's operator acts first.
    BobFirst,
    /// Column labels swapped: `G~[p, (a0, b0)] = G[p, (b0, a0)]`.
    AliceFirst,
}

impl FromStr for JointOrder {
    type Err = ChinosError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "bobfirst" => Ok(JointOrder::BobFirst),
            "alicefirst" => Ok(JointOrder::AliceFirst),
            _ => Err(ChinosError::InvalidConfig(format!("unknown order {s:?}"))),
        }
    }
}

impl fmt::Display for JointOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JointOrder::BobFirst => "bob_first",
            JointOrder::AliceFirst => "alice_first",
        })
    }
}

/// `O_i O_j |00>` for the family.
pub fn pair_state<T: Scalar>(family: &OperatorFamily<T>, q: PairIndex) -> Result<StateVector<T>> {
    let vac = StateVector::basis_state(Basis::Qubit2, 0)?;
    family
        .op(q.first as usize)?
        .apply(&family.op(q.second as usize)?.apply(&vac)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetricMatrix<T> {
    theta: T,
    order: JointOrder,
    /// 16 x 16, canonical row-major.
    entries: Vec<Cx<T>>,
}

/// Metric matrix of guess states (rows) against joint states (columns).
pub fn metric_matrix<T: Scalar>(theta: T, order: JointOrder) -> Result<MetricMatrix<T>> {
    let family = bell_family(theta)?;
    let states = PairIndex::all()
        .map(|q| pair_state(&family, q))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::with_capacity(256);
    for row in PairIndex::all() {
        for col in PairIndex::all() {
            let col = match order {
                JointOrder::BobFirst => col,
                JointOrder::AliceFirst => col.swapped(),
            };
            entries.push(overlap(&states[row.canonical()], &states[col.canonical()])?);
        }
    }
    Ok(MetricMatrix { theta, order, entries })
}

impl<T: Scalar> MetricMatrix<T> {
    pub fn from_entries(theta: T, order: JointOrder, entries: Vec<Cx<T>>) -> Result<Self> {
        if entries.len() != 256 {
            return Err(ChinosError::Shape {
                rows: entries.len() / 16,
                cols: 16,
            });
        }
        Ok(MetricMatrix { theta, order, entries })
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn order(&self) -> JointOrder {
        self.order
    }

    pub fn entries(&self) -> &[Cx<T>] {
        &self.entries
    }

    pub fn get(&self, row: PairIndex, col: PairIndex) -> Cx<T> {
        self.entries[16 * row.canonical() + col.canonical()]
    }

    /// `<g_p | g_q>` between two guess states, whatever the column order.
    pub fn guess_overlap(&self, p: PairIndex, q: PairIndex) -> Cx<T> {
        match self.order {
            JointOrder::BobFirst => self.get(p, q),
            JointOrder::AliceFirst => self.get(p, q.swapped()),
        }
    }

    /// Rows and columns permuted into [`BLOCK_ORDER`].
    pub fn block_rows(&self) -> Vec<Vec<Cx<T>>> {
        BLOCK_ORDER
            .iter()
            .map(|&r| BLOCK_ORDER.iter().map(|&c| self.get(r, c)).collect())
            .collect()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |m, (a, b)| m.max((a - b).norm()))
    }

    /// CSV in block order: a `row` label column followed by `re`/`im`
    /// columns per entry.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["row".to_string()];
        for q in BLOCK_ORDER {
            header.push(format!("{q}_re"));
            header.push(format!("{q}_im"));
        }
        w.write_record(&header)?;
        for (label, row) in BLOCK_ORDER.iter().zip(self.block_rows()) {
            let mut rec = vec![label.to_string()];
            for z in row {
                rec.push(render(z.re.as_f64()));
                rec.push(render(z.im.as_f64()));
            }
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| ChinosError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn from_csv(text: &str, theta: T, order: JointOrder) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
        let mut entries = vec![Cx::new(T::zero(), T::zero()); 256];
        let mut rows = 0;
        for (line, rec) in rdr.records().enumerate() {
            let rec = rec?;
            if rec.len() != 33 {
                return Err(ChinosError::Shape {
                    rows: line + 1,
                    cols: rec.len().saturating_sub(1) / 2,
                });
            }
            let row: PairIndex = rec[0].parse()?;
            for (k, &col) in BLOCK_ORDER.iter().enumerate() {
                let field = |i: usize| -> Result<T> {
                    rec[i]
                        .trim()
                        .parse::<f64>()
                        .map(T::lit)
                        .map_err(|e| ChinosError::Parse {
                            line: line + 2,
                            field: i + 1,
                            message: e.to_string(),
                        })
                };
                entries[16 * row.canonical() + col.canonical()] = Cx::new(field(1 + 2 * k)?, field(2 + 2 * k)?);
            }
            rows += 1;
        }
        if rows != 16 {
            return Err(ChinosError::Shape { rows, cols: 16 });
        }
        Self::from_entries(theta, order, entries)
    }

    /// JSON with `theta`, `order`, block-order `labels` and `entries` as
    /// `[re, im]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<[f64; 2]>> = self
            .block_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|z| [z.re.as_f64(), z.im.as_f64()]).collect())
            .collect();
        json!({
            "theta": self.theta.as_f64(),
            "order": self.order,
            "labels": BLOCK_ORDER.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            "entries": entries,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            theta: f64,
            order: JointOrder,
            labels: Vec<String>,
            entries: Vec<Vec<[f64; 2]>>,
        }
        let raw: Raw = serde_json::from_value(value.clone())?;
        if raw.entries.len() != 16 || raw.entries.iter().any(|r| r.len() != 16) || raw.labels.len() != 16 {
            return Err(ChinosError::Shape {
                rows: raw.entries.len(),
                cols: raw.entries.first().map_or(0, |r| r.len()),
            });
        }
        let labels = raw
            .labels
            .iter()
            .map(|l| l.parse())
            .collect::<Result<Vec<PairIndex>>>()?;
        let mut entries = vec![Cx::new(T::zero(), T::zero()); 256];
        for (r, row) in labels.iter().zip(&raw.entries) {
            for (c, z) in labels.iter().zip(row) {
                entries[16 * r.canonical() + c.canonical()] = Cx::new(T::lit(z[0]), T::lit(z[1]));
            }
        }
        Self::from_entries(T::lit(raw.theta), raw.order, entries)
    }
}

/// Shortest round-tripping decimal for an `f64`, with negative zero folded.
pub fn render(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Mutually orthogonal groups of four, in block order.
    pub sets: Vec<Vec<PairIndex>>,
    /// Classes of two equal-up-to-phase guess states, in block order.
    pub pairs: Vec<Vec<PairIndex>>,
    /// Unit-modulus classes at the matrix's own angle. These coincide with
    /// `pairs` at generic angles and merge into the sets at `θ = 0`.
    pub unit_classes: Vec<Vec<PairIndex>>,
}

/// Angle used to resolve pairs when the input angle merges them.
const PAIR_REFERENCE_THETA: f64 = std::f64::consts::FRAC_PI_4;

pub fn block_decomposition<T: Scalar>(g: &MetricMatrix<T>) -> Result<BlockDecomposition> {
    let tol = T::lit(1e-9).max(T::tol());
    let g0 = metric_matrix::<T>(T::zero(), JointOrder::BobFirst)?;
    let sets = classes(|a, b| g0.guess_overlap(a, b).norm() > tol);
    let unit = |m: &MetricMatrix<T>| classes(|a, b| (m.guess_overlap(a, b).norm() - T::one()).abs() <= tol);
    let unit_classes = unit(g);
    let pairs = if unit_classes.iter().all(|c| c.len() == 2) {
        unit_classes.clone()
    } else {
        unit(&metric_matrix(T::lit(PAIR_REFERENCE_THETA), JointOrder::BobFirst)?)
    };
    let expect_sets: Vec<Vec<PairIndex>> = SETS.iter().map(|s| s.to_vec()).collect();
    let expect_pairs: Vec<Vec<PairIndex>> = PAIRS.iter().map(|s| s.to_vec()).collect();
    if sets != expect_sets {
        return Err(ChinosError::DecompositionMismatch(format!("sets {sets:?}")));
    }
    if pairs != expect_pairs {
        return Err(ChinosError::DecompositionMismatch(format!("pairs {pairs:?}")));
    }
    Ok(BlockDecomposition {
        sets,
        pairs,
        unit_classes,
    })
}

/// Connected components of the relation, each sorted and listed in block
/// order.
fn classes(linked: impl Fn(PairIndex, PairIndex) -> bool) -> Vec<Vec<PairIndex>> {
    let mut comp: Vec<usize> = (0..16).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    for a in PairIndex::all() {
        for b in PairIndex::all() {
            if a != b && linked(a, b) {
                let (ra, rb) = (find(&mut comp, a.canonical()), find(&mut comp, b.canonical()));
                comp[ra] = rb;
            }
        }
    }
    let mut out: Vec<Vec<PairIndex>> = Vec::new();
    for q in BLOCK_ORDER {
        let root = find(&mut comp, q.canonical());
        match out.iter_mut().find(|c| find(&mut comp, c[0].canonical()) == root) {
            Some(c) => c.push(q),
            None => out.push(vec![q]),
        }
    }
    out
}

/// Guesses whose overlap with Alice's guess has modulus at most `threshold`.
pub fn orthogonal_guesses<T: Scalar>(g: &MetricMatrix<T>, alice: PairIndex, threshold: T) -> Vec<PairIndex> {
    BLOCK_ORDER
        .iter()
        .copied()
        .filter(|&q| g.guess_overlap(alice, q).norm() <= threshold)
        .collect()
}

/// `|G[guess, (a0, b0)]|^2`.
pub fn payoff<T: Scalar>(g: &MetricMatrix<T>, guess: PairIndex, a0: u8, b0: u8) -> T {
    g.get(guess, PairIndex::new(a0, b0)).norm_sqr()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BobChoice<T> {
    /// Alice's guess.
    pub alice: String,
    /// Bob's maximising guesses, mixed uniformly.
    pub bob: Vec<String>,
    pub f_a: T,
    pub f_b: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PayoffReport<T> {
    pub theta: T,
    pub order: JointOrder,
    pub b0: u8,
    /// `|G[guess, (a0, b0)]|^2`, rows by guess and columns by `(a0, b0)`,
    /// both in canonical order. The same table serves as `f^A` and `f^B`.
    pub payoffs: Vec<Vec<T>>,
    pub responses: Vec<BobChoice<T>>,
    pub mean_f_a: T,
    pub mean_f_b: T,
    pub p_a: T,
    pub p_b: T,
}

const THEORY_THRESHOLD: f64 = 1e-12;

fn threshold<T: Scalar>() -> T {
    T::lit(THEORY_THRESHOLD).max(T::tol())
}

fn mean<T: Scalar>(xs: impl IntoIterator<Item = T>) -> T {
    let (s, n) = xs.into_iter().fold((T::zero(), 0usize), |(s, n), x| (s + x, n + 1));
    s / T::lit(n as f64)
}

/// Bob's best orthogonal replies to `alice` given a belief over `a0`.
/// Returns the tied maximisers and the expected value.
fn bob_reply<T: Scalar>(g: &MetricMatrix<T>, alice: PairIndex, belief: &[T; 4], b0: u8) -> (Vec<PairIndex>, T) {
    let value = |q: PairIndex| (0..4u8).fold(T::zero(), |acc, a0| acc + belief[a0 as usize] * payoff(g, q, a0, b0));
    let cands = orthogonal_guesses(g, alice, threshold());
    let best = cands.iter().map(|&q| value(q)).fold(T::neg_infinity(), |m, v| m.max(v));
    let tol = T::lit(1e-12).max(T::tol());
    let chosen = cands.into_iter().filter(|&q| best - value(q) <= tol).collect();
    (chosen, best)
}

/// Averages `(<f^A>, <f^B>)` when Bob moves first with `b0` and Alice mixes
/// uniformly over `guesses` and `a0`.
fn bob_first_means<T: Scalar>(g: &MetricMatrix<T>, guesses: &[PairIndex], b0: u8) -> (T, T, Vec<BobChoice<T>>) {
    let uniform = [T::lit(0.25); 4];
    let mut responses = Vec::new();
    for &ga in guesses {
        let f_a = mean((0..4u8).map(|a0| payoff(g, ga, a0, b0)));
        let (bob, f_b) = bob_reply(g, ga, &uniform, b0);
        responses.push(BobChoice {
            alice: ga.to_string(),
            bob: bob.iter().map(|q| q.to_string()).collect(),
            f_a,
            f_b,
        });
    }
    let fa = mean(responses.iter().map(|r| r.f_a));
    let fb = mean(responses.iter().map(|r| r.f_b));
    (fa, fb, responses)
}

/// Alice moves first: for each `a0` she mixes over the guesses that maximise
/// her payoff averaged over Bob's unknown `b0`. Bob infers a posterior over
/// `a0` from her guess and replies with the best orthogonal guess.
fn alice_first_means<T: Scalar>(g: &MetricMatrix<T>, b0: u8) -> (T, T, Vec<BobChoice<T>>) {
    let tol = T::lit(1e-12).max(T::tol());
    let support: Vec<Vec<PairIndex>> = (0..4u8)
        .map(|a0| {
            let value = |q: PairIndex| mean((0..4u8).map(|b| payoff(g, q, a0, b)));
            let best = BLOCK_ORDER
                .iter()
                .map(|&q| value(q))
                .fold(T::neg_infinity(), |m, v| m.max(v));
            BLOCK_ORDER
                .iter()
                .copied()
                .filter(|&q| best - value(q) <= tol)
                .collect()
        })
        .collect();
    let mut responses = Vec::new();
    let (mut fa, mut fb) = (T::zero(), T::zero());
    for a0 in 0..4u8 {
        let share = T::lit(0.25) / T::lit(support[a0 as usize].len() as f64);
        for &ga in &support[a0 as usize] {
            let mut belief = [T::zero(); 4];
            for (k, s) in support.iter().enumerate() {
                if s.contains(&ga) {
                    belief[k] = T::one() / T::lit(s.len() as f64);
                }
            }
            let total = belief.iter().fold(T::zero(), |a, &b| a + b);
            for w in &mut belief {
                *w = *w / total;
            }
            let (bob, _) = bob_reply(g, ga, &belief, b0);
            let f_a = payoff(g, ga, a0, b0);
            let f_b = mean(bob.iter().map(|&q| payoff(g, q, a0, b0)));
            fa = fa + share * f_a;
            fb = fb + share * f_b;
            responses.push(BobChoice {
                alice: format!("{ga}|a0={a0}"),
                bob: bob.iter().map(|q| q.to_string()).collect(),
                f_a,
                f_b,
            });
        }
    }
    (fa, fb, responses)
}

/// Normalised winning probabilities for the two-qubit game with Bob's own
/// index fixed at `b0`.
pub fn two_qubit_probabilities_b0<T: Scalar>(theta: T, order: JointOrder, b0: u8) -> Result<PayoffReport<T>> {
    if b0 > 3 {
        return Err(ChinosError::InvalidConfig(format!("b0 = {b0} is not in 0..4")));
    }
    let g = metric_matrix(theta, order)?;
    let (mean_f_a, mean_f_b, responses) = match order {
        JointOrder::BobFirst => bob_first_means(&g, &BLOCK_ORDER, b0),
        JointOrder::AliceFirst => alice_first_means(&g, b0),
    };
    let payoffs = PairIndex::all()
        .map(|r| PairIndex::all().map(|c| g.get(r, c).norm_sqr()).collect())
        .collect();
    let p_a = mean_f_a / (mean_f_a + mean_f_b);
    Ok(PayoffReport {
        theta,
        order,
        b0,
        payoffs,
        responses,
        mean_f_a,
        mean_f_b,
        p_a,
        p_b: T::one() - p_a,
    })
}

/// Normalised winning probabilities with `b0 = 0`.
pub fn two_qubit_probabilities<T: Scalar>(theta: T, order: JointOrder) -> Result<PayoffReport<T>> {
    two_qubit_probabilities_b0(theta, order, 0)
}

/// Reduced state of qubit 1 for the rotated Bell state `O_0 |00>`.
pub fn rotated_bell_reduced_state<T: Scalar>(theta: T) -> Result<DensityMatrix<T>> {
    let family = bell_family(theta)?;
    let psi = family.op(0)?.apply(&StateVector::basis_state(Basis::Qubit2, 0)?)?;
    DensityMatrix::from_pure(&psi).partial_trace_qubit0()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PurityRelation<T> {
    pub ratio: T,
    pub purity: T,
    pub rhs: T,
}

/// `P_B / P_A` against `3 - 2 tr(rho'^2)` for the reduced rotated Bell state.
pub fn purity_relation<T: Scalar>(theta: T) -> Result<PurityRelation<T>> {
    let r = two_qubit_probabilities(theta, JointOrder::BobFirst)?;
    let purity = rotated_bell_reduced_state(theta)?.purity();
    Ok(PurityRelation {
        ratio: r.p_b / r.p_a,
        purity,
        rhs: T::lit(3.0) - T::two() * purity,
    })
}

/// Iterated best response in the two-qubit game.
///
/// Play opens with Alice uniform over all guesses and Bob replying per the
/// protocol. When Alice is behind she searches uniform mixtures over every
/// nonempty set of pair classes, scored with Bob's `b0` averaged; Bob already
/// plays a best reply to each observed guess.
pub fn two_qubit_equilibrium<T: Scalar>(theta: T, order: JointOrder, max_iters: usize) -> Result<EquilibriumReport<T>> {
    if max_iters == 0 {
        return Err(ChinosError::InvalidConfig("max_iters must be at least 1".into()));
    }
    let g = metric_matrix(theta, order)?;
    let opening = two_qubit_probabilities(theta, order)?;
    let all_classes: Vec<usize> = (1..=8).collect();
    let summary = |classes: &[usize]| StrategySummary {
        support: classes.iter().map(|c| format!("P{c}")).collect(),
        weights: vec![T::one() / T::lit(classes.len() as f64); classes.len()],
        guesses: Vec::new(),
    };
    let bob_summary = StrategySummary {
        support: vec!["orthogonal best reply".to_string()],
        weights: vec![T::one()],
        guesses: Vec::new(),
    };
    let mut iterations = vec![IterationRecord {
        mover: None,
        alice: summary(&all_classes),
        bob: bob_summary.clone(),
        p_a: opening.p_a,
        p_b: opening.p_b,
    }];
    let mut stable = false;
    let mut current = opening.p_a;
    let mut history = vec![all_classes];
    let mut non_convergence = false;
    while iterations.len() <= max_iters {
        match outcome_of(current) {
            Outcome::Symmetric | Outcome::Alice => {
                stable = true;
                break;
            }
            Outcome::Bob => {}
        }
        if order == JointOrder::AliceFirst {
            stable = true;
            break;
        }
        let mut best: Option<(Vec<usize>, T)> = None;
        for mask in 1u32..256 {
            let classes: Vec<usize> = (0..8).filter(|k| mask & (1 << k) != 0).map(|k| k + 1).collect();
            let guesses: Vec<PairIndex> = classes.iter().flat_map(|&c| PAIRS[c - 1]).collect();
            let (fa, fb) = (0..4u8).fold((T::zero(), T::zero()), |(a, b), b0| {
                let (x, y, _) = bob_first_means(&g, &guesses, b0);
                (a + x, b + y)
            });
            let pa = fa / (fa + fb);
            if best.as_ref().is_none_or(|(_, v)| pa > *v + T::tol()) {
                best = Some((classes, pa));
            }
        }
        let (classes, pa) = best.expect("255 candidates");
        if pa <= current + T::tol() {
            stable = true;
            break;
        }
        if history.contains(&classes) {
            non_convergence = true;
            break;
        }
        history.push(classes.clone());
        current = pa;
        iterations.push(IterationRecord {
            mover: Some(Player::Alice),
            alice: summary(&classes),
            bob: bob_summary.clone(),
            p_a: pa,
            p_b: T::one() - pa,
        });
    }
    Ok(EquilibriumReport {
        winner: outcome_of(current),
        iterations,
        stable,
        non_convergence,
    })
}
