use std::f64::consts::PI;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use chinos_core::games::{classical_winners_table, GameDefinition, GameKind};
use chinos_core::metric::{
    metric_matrix, two_qubit_equilibrium, two_qubit_probabilities, JointOrder, MetricMatrix, PairIndex,
};
use chinos_core::shots::{
    admissible_pairs, calibrate_depolarizing, error_report, estimate_matrix, estimate_overlap, ingest_experimental,
    Estimate, NoiseModel, ShotConfig,
};
use chinos_core::strategy::{
    crossing_angles, equilibrium_scan, winning_probability, CandidateSpace, CrossingFamily, MixedStrategy, TieBreak,
};
use chinos_core::{ChinosError, Result};

use crate::render::{csv_string, json_string, round_json, sig12, Sink};
use crate::{Format, Game};

fn game_definition(game: Game, theta: Option<f64>) -> Result<GameDefinition<f64>> {
    match game {
        Game::Classical => Ok(GameDefinition::classical()),
        Game::Boson => Ok(GameDefinition::boson()),
        Game::Hardcore => GameDefinition::hardcore(theta.unwrap_or(PI / 4.0)),
        Game::Qubit => Ok(GameDefinition::qubit(theta.unwrap_or(PI / 2.0))),
        Game::TwoQubit => Err(ChinosError::InvalidConfig(
            "the two-qubit game has no outcome table; use `metric` or `sweep`".into(),
        )),
    }
}

fn kind_theta(kind: GameKind<f64>) -> Option<f64> {
    match kind {
        GameKind::HardCore(t) | GameKind::Qubit(t) => Some(t),
        _ => None,
    }
}

pub fn table(game: Game, theta: Option<f64>, format: Format, sink: &Sink) -> Result<()> {
    let g = game_definition(game, theta)?;
    if game == Game::Classical {
        let rows = classical_winners_table();
        let data = match format {
            Format::Json => json_string(&json!({ "game": "classical", "rows": rows })),
            Format::Csv => {
                let header = ["c_A", "c_B", "g_AB", "g_A", "g_B", "winner"].map(String::from);
                let body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        let w = serde_json::to_value(r.winner).expect("winner serialises");
                        vec![
                            r.c_a.to_string(),
                            r.c_b.to_string(),
                            r.g_ab.to_string(),
                            r.g_a.to_string(),
                            r.g_b.to_string(),
                            w.as_str().unwrap_or_default().to_string(),
                        ]
                    })
                    .collect();
                csv_string(&header, &body)?
            }
        };
        return sink.emit(&data, "classical: 4 rounds of rational play, P_A = P_B = 0.5");
    }

    let table = g.probability_table()?;
    let u = g.uniform_mixture();
    let avg = g.averaged_probs(&u)?;
    let alice = MixedStrategy::best_guessing(&g, u.clone(), &u, TieBreak::LowestOutcome)?;
    let (pa, pb) = winning_probability(&g, &alice, &u)?;
    let summary = format!(
        "{}: uniform play with best guessing gives P_A = {}, P_B = {}",
        g.name(),
        sig12(pa),
        sig12(pb)
    );
    let data = match format {
        Format::Json => json_string(&round_json(json!({
            "game": g.name(),
            "theta": kind_theta(g.kind()),
            "per_move": table,
            "averaged": avg,
            "p_a": pa,
            "p_b": pb,
        }))),
        Format::Csv => {
            let mut header: Vec<String> = ["section", "alice", "bob"].map(String::from).to_vec();
            header.extend(table.outcomes.iter().map(|n| format!("p{n}")));
            let mut body = Vec::new();
            for (ia, &ca) in table.choices.iter().enumerate() {
                for (ib, &cb) in table.choices.iter().enumerate() {
                    let mut row = vec!["move".to_string(), format!("O{ca}"), format!("O{cb}")];
                    row.extend(table.cells[ia][ib].iter().map(|&p| sig12(p)));
                    body.push(row);
                }
            }
            for (ia, &ca) in avg.choices.iter().enumerate() {
                let mut row = vec!["average".to_string(), format!("O{ca}"), "uniform".to_string()];
                row.extend(avg.rows[ia].iter().map(|&p| sig12(p)));
                body.push(row);
            }
            csv_string(&header, &body)?
        }
    };
    sink.emit(&data, &summary)
}

pub struct SweepSpec {
    pub start: Option<f64>,
    pub stop: Option<f64>,
    pub points: usize,
}

impl SweepSpec {
    fn grid(&self, default: (f64, f64)) -> Result<Vec<f64>> {
        if self.points < 2 {
            return Err(ChinosError::InvalidConfig("a sweep needs at least 2 points".into()));
        }
        let (a, b) = (self.start.unwrap_or(default.0), self.stop.unwrap_or(default.1));
        if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) {
            return Err(ChinosError::InvalidConfig(format!(
                "sweep start {a} must be below stop {b}"
            )));
        }
        let n = self.points - 1;
        Ok((0..=n).map(|k| a + (b - a) * k as f64 / n as f64).collect())
    }
}

pub fn sweep(game: Game, spec: &SweepSpec, order: JointOrder, format: Format, sink: &Sink) -> Result<()> {
    let (header, rows, summary): (Vec<String>, Vec<Vec<f64>>, String) = match game {
        Game::TwoQubit => {
            let grid = spec.grid((0.0, PI))?;
            let rows = grid
                .par_iter()
                .map(|&t| two_qubit_probabilities(t, order).map(|r| vec![t, r.p_a, r.p_b]))
                .collect::<Result<Vec<_>>>()?;
            let (first, last) = (&rows[0], &rows[rows.len() - 1]);
            let summary = format!(
                "two-qubit ({order}): (P_A, P_B) = ({}, {}) at theta = {} and ({}, {}) at theta = {}",
                sig12(first[1]),
                sig12(first[2]),
                sig12(first[0]),
                sig12(last[1]),
                sig12(last[2]),
                sig12(last[0])
            );
            (["theta", "p_a", "p_b"].map(String::from).to_vec(), rows, summary)
        }
        Game::Hardcore | Game::Qubit => {
            let (default, family) = if game == Game::Hardcore {
                ((PI / 64.0, 31.0 * PI / 64.0), CrossingFamily::HardCore)
            } else {
                ((0.0, PI), CrossingFamily::Qubit)
            };
            let grid = spec.grid(default)?;
            let rows = grid
                .par_iter()
                .map(|&t| {
                    let g = game_definition(game, Some(t))?;
                    let avg = g.averaged_probs(&g.uniform_mixture())?;
                    let mut row = vec![t];
                    row.extend(avg.rows.iter().flatten().copied());
                    Ok(row)
                })
                .collect::<Result<Vec<_>>>()?;
            let g = game_definition(game, Some(grid[0]))?;
            let mut header = vec!["theta".to_string()];
            for &c in g.choices() {
                header.extend(g.guesses().iter().map(|n| format!("O{c}_p{n}")));
            }
            let (t1, t2) = crossing_angles::<f64>(family)?;
            let summary = format!(
                "{}: crossing angles theta1 = {}, theta2 = {}",
                g.name(),
                sig12(t1),
                sig12(t2)
            );
            (header, rows, summary)
        }
        _ => {
            return Err(ChinosError::InvalidConfig(
                "sweeps are defined for hardcore, qubit and two-qubit".into(),
            ))
        }
    };
    let data = match format {
        Format::Csv => {
            let body: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|&x| sig12(x)).collect()).collect();
            csv_string(&header, &body)?
        }
        Format::Json => {
            let records: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(header.iter().cloned().zip(r.iter().map(|&x| json!(x))).collect()))
                .collect();
            json_string(&round_json(json!({ "game": game.name(), "rows": records })))
        }
    };
    sink.emit(&data, &summary)
}

pub fn equilibrium(
    game: Game,
    theta: Option<f64>,
    order: JointOrder,
    max_iters: usize,
    space: CandidateSpace,
    sink: &Sink,
) -> Result<()> {
    let report = match game {
        Game::TwoQubit => two_qubit_equilibrium(theta.unwrap_or(0.0), order, max_iters)?,
        _ => equilibrium_scan(&game_definition(game, theta)?, max_iters, space)?,
    };
    let last = report.terminal();
    let winner = serde_json::to_value(report.winner).expect("outcome serialises");
    let summary = format!(
        "{}: {} after {} moves, winner {}, P_A = {}, P_B = {}{}",
        game.name(),
        if report.stable { "stable" } else { "not stable" },
        report.iterations.len() - 1,
        winner.as_str().unwrap_or_default(),
        sig12(last.p_a),
        sig12(last.p_b),
        if report.non_convergence {
            " (cycle detected)"
        } else {
            ""
        }
    );
    let data = json_string(&round_json(json!({ "game": game.name(), "report": report })));
    sink.emit(&data, &summary)
}

pub fn metric(theta: f64, order: JointOrder, format: Format, sink: &Sink) -> Result<()> {
    let g = metric_matrix(theta, order)?;
    let data = match format {
        Format::Csv => g.to_csv()?,
        Format::Json => json_string(&g.to_json()),
    };
    sink.emit(&data, &format!("metric at theta = {} ({order}), 16 x 16", sig12(theta)))
}

pub struct ShotsArgs {
    pub theta: f64,
    pub entry: Option<(PairIndex, PairIndex)>,
    pub shots: u64,
    pub seed: u64,
    pub depolarizing: Option<f64>,
    pub calibrate: Option<f64>,
}

pub fn shots(args: &ShotsArgs, format: Format, sink: &Sink) -> Result<()> {
    let noise = match (args.depolarizing, args.calibrate) {
        (Some(_), Some(_)) => {
            return Err(ChinosError::InvalidConfig(
                "--depolarizing and --calibrate are mutually exclusive".into(),
            ))
        }
        (Some(p), None) => NoiseModel::Depolarizing(p),
        (None, Some(target)) => {
            let (r, c) = args.entry.unwrap_or((PairIndex::new(2, 2), PairIndex::new(3, 0)));
            NoiseModel::Depolarizing(calibrate_depolarizing(target, r, c, args.theta)?)
        }
        (None, None) => NoiseModel::None,
    };
    let config = ShotConfig {
        shots: args.shots,
        seed: args.seed,
        noise,
    };
    let estimates: Vec<Estimate> = match args.entry {
        Some((r, c)) => vec![estimate_overlap(r, c, args.theta, config)?],
        None => estimate_matrix(args.theta, config)?,
    };
    let noise_text = match noise {
        NoiseModel::None => "no noise".to_string(),
        NoiseModel::Depolarizing(p) => format!("depolarizing p = {}", sig12(p)),
    };
    let summary = match estimates.as_slice() {
        [e] => format!(
            "|G[{},{}]|^2 ~ {} +/- {} from {} shots, seed {}, {noise_text}",
            e.row,
            e.col,
            sig12(e.estimate),
            sig12(e.stderr),
            args.shots,
            args.seed
        ),
        many => format!(
            "{} entries from {} shots each, seed {}, {noise_text}",
            many.len(),
            args.shots,
            args.seed
        ),
    };
    let data = match format {
        Format::Csv => {
            let header = ["row", "col", "estimate", "stderr", "population"].map(String::from);
            let body: Vec<Vec<String>> = estimates
                .iter()
                .map(|e| {
                    vec![
                        e.row.to_string(),
                        e.col.to_string(),
                        sig12(e.estimate),
                        sig12(e.stderr),
                        sig12(e.population),
                    ]
                })
                .collect();
            csv_string(&header, &body)?
        }
        Format::Json => {
            let p = match noise {
                NoiseModel::None => None,
                NoiseModel::Depolarizing(p) => Some(p),
            };
            let entries: Vec<Value> = estimates
                .iter()
                .map(|e| {
                    json!({
                        "row": e.row.to_string(),
                        "col": e.col.to_string(),
                        "estimate": e.estimate,
                        "stderr": e.stderr,
                        "population": e.population,
                    })
                })
                .collect();
            json_string(&round_json(json!({
                "theta": args.theta,
                "shots": args.shots,
                "seed": args.seed,
                "depolarizing": p,
                "estimates": entries,
            })))
        }
    };
    sink.emit(&data, &summary)
}

pub fn compare(exp: &Path, theta: f64, threshold: f64, sink: &Sink) -> Result<()> {
    let measured = ingest_experimental(exp).inspect_err(|_| eprintln!("while reading {}", exp.display()))?;
    let theory: MetricMatrix<f64> = metric_matrix(theta, JointOrder::BobFirst)?;
    let report = error_report(&theory, &measured);
    let admissible = admissible_pairs(&measured, threshold);
    let summary = format!(
        "avg_err_on_units = {}, avg_err_on_zeros = {}, max_err = {}, {} admissible pairs at {}",
        sig12(report.avg_err_on_units),
        sig12(report.avg_err_on_zeros),
        sig12(report.max_err),
        admissible.len(),
        sig12(threshold)
    );
    let data = json_string(&round_json(json!({
        "source": exp.display().to_string(),
        "theta": theta,
        "threshold": threshold,
        "avg_err_on_units": report.avg_err_on_units,
        "avg_err_on_zeros": report.avg_err_on_zeros,
        "max_err": report.max_err,
        "admissible_pairs": admissible.iter().map(|(r, c)| format!("{r},{c}")).collect::<Vec<_>>(),
        "deltas": report.deltas,
    })));
    sink.emit(&data, &summary)
}
