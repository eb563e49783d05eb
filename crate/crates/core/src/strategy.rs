//! Mixed strategies, best guesses and best responses, iterated best-response
//! scans, crossing angles and Monte Carlo replay of rounds.
//!
//! Scoring in the quantum games follows the semiclassical accounting: Alice
//! wins a round when the measured outcome equals her guess, and Bob is the
//! residual claimant, `P_B = 1 - P_A`. The classical game is adjudicated
//! round by round.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{ChinosError, Result};
use crate::games::{classical_round, validate_mixture, AveragedTable, GameDefinition, GameKind, Player, Winner};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub enum TieBreak {
    #[default]
    LowestOutcome,
    /// Uniform choice among tied outcomes, seeded.
    Randomized(u64),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GuessPolicy<T> {
    /// Guess label per choice position.
    Deterministic(Vec<usize>),
    /// Distribution over guess positions per choice position.
    Mixed(Vec<Vec<T>>),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MixedStrategy<T> {
    pub choices: Vec<usize>,
    pub choice_weights: Vec<T>,
    pub guess_policy: GuessPolicy<T>,
}

impl<T: Scalar> MixedStrategy<T> {
    /// Validates the weights and, when the game enforces it, the intelligence
    /// map.
    pub fn new(game: &GameDefinition<T>, weights: Vec<T>, policy: GuessPolicy<T>) -> Result<Self> {
        let n = game.choices().len();
        validate_mixture(&weights, n)?;
        match &policy {
            GuessPolicy::Deterministic(g) => {
                if g.len() != n {
                    return Err(ChinosError::InvalidMixture(format!(
                        "guess policy covers {} choices, expected {n}",
                        g.len()
                    )));
                }
                for (pos, &guess) in g.iter().enumerate() {
                    game.guess_pos(guess)?;
                    if weights[pos] > T::zero() {
                        game.check_intelligence(game.choices()[pos], guess)?;
                    }
                }
            }
            GuessPolicy::Mixed(rows) => {
                if rows.len() != n {
                    return Err(ChinosError::InvalidMixture(format!(
                        "guess policy covers {} choices, expected {n}",
                        rows.len()
                    )));
                }
                for (pos, row) in rows.iter().enumerate() {
                    validate_mixture(row, game.guesses().len())?;
                    if weights[pos] > T::zero() {
                        for (k, &q) in row.iter().enumerate() {
                            if q > T::zero() {
                                game.check_intelligence(game.choices()[pos], game.guesses()[k])?;
                            }
                        }
                    }
                }
            }
        }
        Ok(MixedStrategy {
            choices: game.choices().to_vec(),
            choice_weights: weights,
            guess_policy: policy,
        })
    }

    /// Given choice weights, guesses optimally against the opponent mixture.
    pub fn best_guessing(
        game: &GameDefinition<T>,
        weights: Vec<T>,
        opponent_mixture: &[T],
        tie: TieBreak,
    ) -> Result<Self> {
        let policy = best_guess_policy(game, opponent_mixture, tie)?;
        Self::new(game, weights, policy)
    }

    /// Uniform over the given choice labels with best guesses.
    pub fn uniform_over(
        game: &GameDefinition<T>,
        labels: &[usize],
        opponent_mixture: &[T],
        tie: TieBreak,
    ) -> Result<Self> {
        Self::best_guessing(game, subset_weights(game, labels)?, opponent_mixture, tie)
    }

    pub fn support(&self) -> Vec<usize> {
        self.choices
            .iter()
            .zip(&self.choice_weights)
            .filter(|(_, &w)| w > T::zero())
            .map(|(&c, _)| c)
            .collect()
    }

    fn guess_distribution(&self, pos: usize, n_guesses: usize, guesses: &[usize]) -> Vec<T> {
        match &self.guess_policy {
            GuessPolicy::Deterministic(g) => guesses
                .iter()
                .map(|&x| if x == g[pos] { T::one() } else { T::zero() })
                .collect(),
            GuessPolicy::Mixed(rows) => {
                debug_assert_eq!(rows[pos].len(), n_guesses);
                rows[pos].clone()
            }
        }
    }
}

/// Uniform weights over a subset of choice labels.
pub fn subset_weights<T: Scalar>(game: &GameDefinition<T>, labels: &[usize]) -> Result<Vec<T>> {
    if labels.is_empty() {
        return Err(ChinosError::InvalidMixture("empty support".into()));
    }
    let mut w = vec![T::zero(); game.choices().len()];
    let share = T::one() / T::lit(labels.len() as f64);
    for &l in labels {
        w[game.choice_pos(l)?] = share;
    }
    Ok(w)
}

/// Argmax of `<p_choice(n)>` over outcomes. Returns the guess label.
pub fn best_guess<T: Scalar>(avg: &AveragedTable<T>, choice_pos: usize, tie: TieBreak) -> usize {
    let row = &avg.rows[choice_pos];
    let max = row.iter().fold(T::neg_infinity(), |m, &x| m.max(x));
    let tied: Vec<usize> = row
        .iter()
        .enumerate()
        .filter(|(_, &x)| max - x <= T::tol())
        .map(|(k, _)| k)
        .collect();
    let k = match tie {
        TieBreak::LowestOutcome => tied[0],
        TieBreak::Randomized(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ choice_pos as u64);
            tied[rng.gen_range(0..tied.len())]
        }
    };
    avg.outcomes[k]
}

pub fn best_guess_policy<T: Scalar>(
    game: &GameDefinition<T>,
    opponent_mixture: &[T],
    tie: TieBreak,
) -> Result<GuessPolicy<T>> {
    let avg = game.averaged_probs(opponent_mixture)?;
    Ok(GuessPolicy::Deterministic(
        (0..game.choices().len())
            .map(|pos| best_guess(&avg, pos, tie))
            .collect(),
    ))
}

/// Bob's classical reply: the admissible guess that is most often exact,
/// given his coin and the Alice choices compatible with her guess. Ties go to
/// the lowest guess.
pub fn classical_bob_reply<T: Scalar>(game: &GameDefinition<T>, ga: usize, cb: usize) -> Result<usize> {
    let alice_support: Vec<usize> = game
        .choices()
        .iter()
        .copied()
        .filter(|&c| game.intelligence(c).map(|s| s.contains(&ga)).unwrap_or(false))
        .collect();
    let hits = |g: usize| alice_support.iter().filter(|&&c| c + cb == g).count();
    let mut best: Option<usize> = None;
    for &g in game.intelligence(cb)? {
        if !game.restriction_check(ga, g)? {
            continue;
        }
        match best {
            Some(b) if hits(b) >= hits(g) => {}
            _ => best = Some(g),
        }
    }
    best.ok_or(ChinosError::RestrictionViolation {
        guess_a: ga,
        guess_b: ga,
        d0: game.d0().as_f64(),
    })
}

/// `(P_A, P_B)` for Alice's strategy against Bob's choice mixture.
pub fn winning_probability<T: Scalar>(
    game: &GameDefinition<T>,
    alice: &MixedStrategy<T>,
    bob_mixture: &[T],
) -> Result<(T, T)> {
    validate_mixture(bob_mixture, game.choices().len())?;
    let n_guesses = game.guesses().len();
    let mut pa = T::zero();
    if game.kind() == GameKind::Classical {
        for (ia, &ca) in game.choices().iter().enumerate() {
            let q = alice.guess_distribution(ia, n_guesses, game.guesses());
            for (ib, &cb) in game.choices().iter().enumerate() {
                for (k, &ga) in game.guesses().iter().enumerate() {
                    let w = alice.choice_weights[ia] * bob_mixture[ib] * q[k];
                    if w == T::zero() {
                        continue;
                    }
                    let gb = classical_bob_reply(game, ga, cb)?;
                    if classical_round(ca, cb, ga, gb, false)? == Winner::Alice {
                        pa = pa + w;
                    }
                }
            }
        }
    } else {
        let avg = game.averaged_probs(bob_mixture)?;
        for ia in 0..game.choices().len() {
            let q = alice.guess_distribution(ia, n_guesses, game.guesses());
            let hit = q
                .iter()
                .zip(&avg.rows[ia])
                .fold(T::zero(), |acc, (&qk, &pk)| acc + qk * pk);
            pa = pa + alice.choice_weights[ia] * hit;
        }
    }
    Ok((pa, T::one() - pa))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CandidateSpace {
    /// Uniform mixtures over subsets of at least two choices.
    #[default]
    Mixed,
    /// Uniform mixtures over every nonempty subset, pure choices included.
    AllSubsets,
}

/// Candidate supports as position lists, in ascending bitmask order.
pub fn candidate_supports(n: usize, space: CandidateSpace) -> Vec<Vec<usize>> {
    let min = match space {
        CandidateSpace::Mixed => 2.min(n),
        CandidateSpace::AllSubsets => 1,
    };
    (1u32..(1u32 << n))
        .filter(|m| m.count_ones() as usize >= min)
        .map(|m| (0..n).filter(|k| m & (1 << k) != 0).collect())
        .collect()
}

#[derive(Clone, Debug)]
pub struct Response<T> {
    pub support: Vec<usize>,
    pub weights: Vec<T>,
    pub p_a: T,
    pub p_b: T,
}

/// Best uniform-support response of `responder` to the opponent's weights.
/// Alice's guesses are always re-optimised against Bob's mixture.
pub fn best_response<T: Scalar>(
    game: &GameDefinition<T>,
    responder: Player,
    opponent_weights: &[T],
    space: CandidateSpace,
    tie: TieBreak,
) -> Result<Response<T>> {
    let mut best: Option<Response<T>> = None;
    for support in candidate_supports(game.choices().len(), space) {
        let labels: Vec<usize> = support.iter().map(|&p| game.choices()[p]).collect();
        let weights = subset_weights(game, &labels)?;
        let (alice_w, bob_w) = match responder {
            Player::Alice => (weights.clone(), opponent_weights.to_vec()),
            Player::Bob => (opponent_weights.to_vec(), weights.clone()),
        };
        let alice = MixedStrategy::best_guessing(game, alice_w, &bob_w, tie)?;
        let (p_a, p_b) = winning_probability(game, &alice, &bob_w)?;
        let value = match responder {
            Player::Alice => p_a,
            Player::Bob => p_b,
        };
        let improves = match &best {
            None => true,
            Some(b) => {
                let bv = match responder {
                    Player::Alice => b.p_a,
                    Player::Bob => b.p_b,
                };
                value > bv + T::tol()
            }
        };
        if improves {
            best = Some(Response {
                support: labels,
                weights,
                p_a,
                p_b,
            });
        }
    }
    best.ok_or_else(|| ChinosError::InvalidMixture("empty candidate space".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    #[serde(rename = "A")]
    Alice,
    #[serde(rename = "B")]
    Bob,
    #[serde(rename = "symmetric")]
    Symmetric,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrategySummary<T> {
    pub support: Vec<String>,
    pub weights: Vec<T>,
    /// Guess per supported choice, when meaningful.
    pub guesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IterationRecord<T> {
    /// Player who moved to reach this profile; `None` for the opening profile.
    pub mover: Option<Player>,
    pub alice: StrategySummary<T>,
    pub bob: StrategySummary<T>,
    pub p_a: T,
    pub p_b: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquilibriumReport<T> {
    pub iterations: Vec<IterationRecord<T>>,
    pub stable: bool,
    pub non_convergence: bool,
    pub winner: Outcome,
}

impl<T: Scalar> EquilibriumReport<T> {
    pub fn terminal(&self) -> &IterationRecord<T> {
        self.iterations.last().expect("a report has at least one iteration")
    }
}

pub(crate) fn outcome_of<T: Scalar>(p_a: T) -> Outcome {
    if (p_a - T::half()).abs() <= T::tol() {
        Outcome::Symmetric
    } else if p_a > T::half() {
        Outcome::Alice
    } else {
        Outcome::Bob
    }
}

/// Iterated best response starting from uniform play by both players.
///
/// At each step the player below one half looks for a strictly better
/// candidate. The scan stops when the profile is symmetric, when the loser
/// has no improving response (the winner holds a winning and stable
/// strategy), when a profile repeats, or after `max_iters` moves.
pub fn equilibrium_scan<T: Scalar>(
    game: &GameDefinition<T>,
    max_iters: usize,
    space: CandidateSpace,
) -> Result<EquilibriumReport<T>> {
    if max_iters == 0 {
        return Err(ChinosError::InvalidConfig("max_iters must be at least 1".into()));
    }
    let tie = TieBreak::LowestOutcome;
    let mut a_w = game.uniform_mixture();
    let mut b_w = game.uniform_mixture();
    let mut history = vec![(a_w.clone(), b_w.clone())];
    let mut iterations = Vec::new();
    let mut mover = None;
    let mut stable = false;
    let mut non_convergence = false;
    for _ in 0..=max_iters {
        let alice = MixedStrategy::best_guessing(game, a_w.clone(), &b_w, tie)?;
        let bob = MixedStrategy::best_guessing(game, b_w.clone(), &a_w, tie)?;
        let (p_a, p_b) = winning_probability(game, &alice, &b_w)?;
        iterations.push(IterationRecord {
            mover,
            alice: summarize(game, &alice),
            bob: summarize(game, &bob),
            p_a,
            p_b,
        });
        let outcome = outcome_of(p_a);
        if outcome == Outcome::Symmetric {
            stable = true;
            break;
        }
        if iterations.len() > max_iters {
            break;
        }
        let loser = if outcome == Outcome::Alice {
            Player::Bob
        } else {
            Player::Alice
        };
        let (current, opponent) = match loser {
            Player::Alice => (p_a, &b_w),
            Player::Bob => (p_b, &a_w),
        };
        let r = best_response(game, loser, opponent, space, tie)?;
        let value = if loser == Player::Alice { r.p_a } else { r.p_b };
        if value <= current + T::tol() {
            stable = true;
            break;
        }
        match loser {
            Player::Alice => a_w = r.weights,
            Player::Bob => b_w = r.weights,
        }
        mover = Some(loser);
        let profile = (a_w.clone(), b_w.clone());
        if history.contains(&profile) {
            non_convergence = true;
            let alice = MixedStrategy::best_guessing(game, a_w.clone(), &b_w, tie)?;
            let bob = MixedStrategy::best_guessing(game, b_w.clone(), &a_w, tie)?;
            let (p_a, p_b) = winning_probability(game, &alice, &b_w)?;
            iterations.push(IterationRecord {
                mover,
                alice: summarize(game, &alice),
                bob: summarize(game, &bob),
                p_a,
                p_b,
            });
            break;
        }
        history.push(profile);
    }
    let winner = outcome_of(iterations.last().expect("at least one iteration").p_a);
    Ok(EquilibriumReport {
        iterations,
        stable,
        non_convergence,
        winner,
    })
}

fn summarize<T: Scalar>(game: &GameDefinition<T>, s: &MixedStrategy<T>) -> StrategySummary<T> {
    let mut support = Vec::new();
    let mut weights = Vec::new();
    let mut guesses = Vec::new();
    for (pos, (&c, &w)) in s.choices.iter().zip(&s.choice_weights).enumerate() {
        if w <= T::zero() {
            continue;
        }
        support.push(choice_name(game, c));
        weights.push(w);
        if let GuessPolicy::Deterministic(g) = &s.guess_policy {
            guesses.push(g[pos].to_string());
        }
    }
    StrategySummary {
        support,
        weights,
        guesses,
    }
}

fn choice_name<T: Scalar>(game: &GameDefinition<T>, c: usize) -> String {
    match game.kind() {
        GameKind::Classical => c.to_string(),
        _ => format!("O{c}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingFamily {
    HardCore,
    Qubit,
}

/// Angles where the uniformly averaged `<p(0)>` of the O2 and the O1 columns
/// cross one half, `(θ1, θ2)`.
///
/// Each function is scanned on a fine grid for its first sign change, which
/// is then refined by bisection to `1e-10`.
pub fn crossing_angles<T: Scalar>(family: CrossingFamily) -> Result<(T, T)> {
    let (lo, hi) = match family {
        CrossingFamily::HardCore => (0.01, std::f64::consts::FRAC_PI_2 - 0.01),
        CrossingFamily::Qubit => (0.01, std::f64::consts::PI - 0.01),
    };
    let column = |label: usize| {
        move |theta: T| -> Result<T> {
            let game = match family {
                CrossingFamily::HardCore => GameDefinition::hardcore(theta)?,
                CrossingFamily::Qubit => GameDefinition::qubit(theta),
            };
            let avg = game.averaged_probs(&game.uniform_mixture())?;
            Ok(avg.get(game.choice_pos(label)?, 0) - T::half())
        }
    };
    let t1 = first_root(column(2), T::lit(lo), T::lit(hi))?;
    let t2 = first_root(column(1), T::lit(lo), T::lit(hi))?;
    Ok((t1, t2))
}

/// First root of `f` on `[lo, hi]`: grid scan for a sign change, then
/// bisection to `1e-10` with at most 200 halvings.
pub fn first_root<T: Scalar>(f: impl Fn(T) -> Result<T>, lo: T, hi: T) -> Result<T> {
    const GRID: usize = 2000;
    let step = (hi - lo) / T::lit(GRID as f64);
    let mut a = lo;
    let mut fa = f(a)?;
    for k in 1..=GRID {
        let b = if k == GRID { hi } else { lo + step * T::lit(k as f64) };
        let fb = f(b)?;
        if fa == T::zero() {
            return Ok(a);
        }
        if fa.signum() != fb.signum() || fb == T::zero() {
            return bisect(&f, a, b, fa);
        }
        a = b;
        fa = fb;
    }
    Err(ChinosError::RootNotBracketed {
        lo: lo.as_f64(),
        hi: hi.as_f64(),
    })
}

fn bisect<T: Scalar>(f: &impl Fn(T) -> Result<T>, mut a: T, mut b: T, mut fa: T) -> Result<T> {
    let tol = T::lit(1e-10).max(T::epsilon());
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        let m = (a + b) * T::half();
        let fm = f(m)?;
        if fm == T::zero() {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok((a + b) * T::half())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MonteCarloResult {
    pub rounds: u64,
    pub p_a: f64,
    pub p_b: f64,
    pub stderr: f64,
}

/// Simulates `rounds` independent rounds with a seeded ChaCha generator.
pub fn monte_carlo_rounds<T: Scalar>(
    game: &GameDefinition<T>,
    alice: &MixedStrategy<T>,
    bob_mixture: &[T],
    rounds: u64,
    seed: u64,
) -> Result<MonteCarloResult> {
    if rounds == 0 {
        return Err(ChinosError::InvalidConfig("rounds must be at least 1".into()));
    }
    validate_mixture(bob_mixture, game.choices().len())?;
    let to_f64 = |v: &[T]| v.iter().map(|x| x.as_f64()).collect::<Vec<f64>>();
    let n_guesses = game.guesses().len();
    let weights_err = |e: rand::distributions::WeightedError| ChinosError::InvalidMixture(e.to_string());
    let pick_a = WeightedIndex::new(to_f64(&alice.choice_weights)).map_err(weights_err)?;
    let pick_b = WeightedIndex::new(to_f64(bob_mixture)).map_err(weights_err)?;
    let guess_dists = (0..game.choices().len())
        .map(|pos| {
            let q = to_f64(&alice.guess_distribution(pos, n_guesses, game.guesses()));
            WeightedIndex::new(q).map_err(weights_err)
        })
        .collect::<Result<Vec<_>>>()?;
    let table = game.probability_table()?;
    let outcome_dists = table
        .cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| WeightedIndex::new(to_f64(cell)).map_err(weights_err))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut wins_a, mut wins_b) = (0u64, 0u64);
    for _ in 0..rounds {
        let ia = pick_a.sample(&mut rng);
        let ib = pick_b.sample(&mut rng);
        let ga = game.guesses()[guess_dists[ia].sample(&mut rng)];
        if game.kind() == GameKind::Classical {
            let (ca, cb) = (game.choices()[ia], game.choices()[ib]);
            let gb = classical_bob_reply(game, ga, cb)?;
            match classical_round(ca, cb, ga, gb, false)? {
                Winner::Alice => wins_a += 1,
                Winner::Bob => wins_b += 1,
                Winner::Nobody => {}
            }
        } else {
            let n = game.guesses()[outcome_dists[ia][ib].sample(&mut rng)];
            if n == ga {
                wins_a += 1;
            } else {
                wins_b += 1;
            }
        }
    }
    let n = rounds as f64;
    let p_a = wins_a as f64 / n;
    Ok(MonteCarloResult {
        rounds,
        p_a,
        p_b: wins_b as f64 / n,
        stderr: (p_a * (1.0 - p_a) / n).sqrt(),
    })
}
