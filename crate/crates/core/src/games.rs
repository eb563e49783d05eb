//! Game definitions: choices, guesses, the joint-state device, the restriction
//! rule and the intelligence map, plus exact outcome-probability tables.

use serde::Serialize;

use crate::error::{ChinosError, Result};
use crate::modes::{self, ModeKind, OperatorFamily};
use crate::qstate::{Basis, StateVector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "game", content = "theta", rename_all = "snake_case")]
pub enum GameKind<T> {
    Classical,
    Boson,
    HardCore(T),
    Qubit(T),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Player {
    #[serde(rename = "A")]
    Alice,
    #[serde(rename = "B")]
    Bob,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Winner {
    #[serde(rename = "A")]
    Alice,
    #[serde(rename = "B")]
    Bob,
    #[serde(rename = "none")]
    Nobody,
}

#[derive(Clone, Debug)]
pub struct GameDefinition<T> {
    name: String,
    kind: GameKind<T>,
    choices: Vec<usize>,
    guesses: Vec<usize>,
    d0: T,
    intelligence: Vec<Vec<usize>>,
    enforce_intelligence: bool,
    family: Option<OperatorFamily<T>>,
}

/// Outcome distributions `p_{i,j}(n)` for every pair of choices.
#[derive(Clone, Debug, Serialize)]
pub struct ProbabilityTable<T> {
    pub choices: Vec<usize>,
    pub outcomes: Vec<usize>,
    /// Indexed `[alice][bob][outcome]` by position in `choices` / `outcomes`.
    pub cells: Vec<Vec<Vec<T>>>,
}

/// `<p_i(n)>`, the outcome distribution for each own choice averaged over the
/// opponent's mixture.
#[derive(Clone, Debug, Serialize)]
pub struct AveragedTable<T> {
    pub choices: Vec<usize>,
    pub outcomes: Vec<usize>,
    pub opponent_mixture: Vec<T>,
    /// Indexed `[choice][outcome]`.
    pub rows: Vec<Vec<T>>,
}

impl<T: Scalar> AveragedTable<T> {
    pub fn get(&self, choice_pos: usize, outcome_pos: usize) -> T {
        self.rows[choice_pos][outcome_pos]
    }
}

impl<T: Scalar> GameDefinition<T> {
    /// One coin each: choices `{0, 1}`, guesses `{0, 1, 2}`, `d0 = 1`.
    pub fn classical() -> Self {
        GameDefinition {
            name: "classical".into(),
            kind: GameKind::Classical,
            choices: vec![0, 1],
            guesses: vec![0, 1, 2],
            d0: T::one(),
            intelligence: vec![vec![0, 1], vec![1, 2]],
            enforce_intelligence: true,
            family: None,
        }
    }

    pub fn boson() -> Self {
        Self::quantum("boson", GameKind::Boson, modes::boson_family()).expect("boson family is never degenerate")
    }

    pub fn hardcore(theta: T) -> Result<Self> {
        Self::quantum("hardcore", GameKind::HardCore(theta), modes::hardcore_family(theta)?)
    }

    pub fn qubit(theta: T) -> Self {
        Self::quantum("qubit", GameKind::Qubit(theta), modes::qubit_family(theta))
            .expect("rotations never annihilate a state")
    }

    pub fn from_kind(kind: GameKind<T>) -> Result<Self> {
        match kind {
            GameKind::Classical => Ok(Self::classical()),
            GameKind::Boson => Ok(Self::boson()),
            GameKind::HardCore(t) => Self::hardcore(t),
            GameKind::Qubit(t) => Ok(Self::qubit(t)),
        }
    }

    /// Quantum games read the intelligence map off the device: a guess is
    /// allowed for a choice when some opponent move can produce it.
    fn quantum(name: &str, kind: GameKind<T>, family: OperatorFamily<T>) -> Result<Self> {
        let choices = family.labels();
        let guesses: Vec<usize> = (0..family.dim()).collect();
        let mut game = GameDefinition {
            name: name.into(),
            kind,
            choices,
            guesses,
            d0: T::one(),
            intelligence: Vec::new(),
            enforce_intelligence: true,
            family: Some(family),
        };
        let table = game.probability_table()?;
        game.intelligence = table
            .cells
            .iter()
            .map(|row| {
                game.guesses
                    .iter()
                    .enumerate()
                    .filter(|&(n, _)| row.iter().any(|cell| cell[n] > T::tol()))
                    .map(|(_, &g)| g)
                    .collect()
            })
            .collect();
        Ok(game)
    }

    pub fn with_intelligence_enforced(mut self, on: bool) -> Self {
        self.enforce_intelligence = on;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> GameKind<T> {
        self.kind
    }

    pub fn mode(&self) -> Option<ModeKind<T>> {
        self.family.as_ref().map(|f| f.kind())
    }

    pub fn choices(&self) -> &[usize] {
        &self.choices
    }

    pub fn guesses(&self) -> &[usize] {
        &self.guesses
    }

    pub fn d0(&self) -> T {
        self.d0
    }

    pub fn enforces_intelligence(&self) -> bool {
        self.enforce_intelligence
    }

    /// Guesses consistent with rational play after choosing `choice`.
    pub fn intelligence(&self, choice: usize) -> Result<&[usize]> {
        Ok(&self.intelligence[self.choice_pos(choice)?])
    }

    pub fn choice_pos(&self, choice: usize) -> Result<usize> {
        self.choices
            .iter()
            .position(|&c| c == choice)
            .ok_or_else(|| ChinosError::InvalidChoice {
                label: choice,
                allowed: self.choices.clone(),
            })
    }

    pub fn guess_pos(&self, guess: usize) -> Result<usize> {
        self.guesses
            .iter()
            .position(|&g| g == guess)
            .ok_or_else(|| ChinosError::InvalidGuess {
                guess,
                allowed: self.guesses.clone(),
            })
    }

    /// `O_i^A O_j^B |0>`, normalised. The classical device is `|c_A + c_B>`.
    pub fn joint_state(&self, i: usize, j: usize) -> Result<StateVector<T>> {
        self.choice_pos(i)?;
        self.choice_pos(j)?;
        match &self.family {
            None => StateVector::basis_state(Basis::Fock3, i + j),
            Some(f) => {
                let basis = Basis::from_dim(f.dim()).expect("family dimension is 2 or 3");
                let vac = StateVector::basis_state(basis, 0)?;
                let psi = f.op(i)?.apply(&f.op(j)?.apply(&vac)?)?;
                Ok(psi.normalize()?.0)
            }
        }
    }

    pub fn outcome_probs(&self, i: usize, j: usize) -> Result<Vec<T>> {
        Ok(self.joint_state(i, j)?.probabilities())
    }

    pub fn probability_table(&self) -> Result<ProbabilityTable<T>> {
        let cells = self
            .choices
            .iter()
            .map(|&i| {
                self.choices
                    .iter()
                    .map(|&j| self.outcome_probs(i, j))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ProbabilityTable {
            choices: self.choices.clone(),
            outcomes: self.guesses.clone(),
            cells,
        })
    }

    pub fn uniform_mixture(&self) -> Vec<T> {
        let w = T::one() / T::lit(self.choices.len() as f64);
        vec![w; self.choices.len()]
    }

    /// Averages each own-choice row over the opponent mixture (indexed by
    /// choice position).
    pub fn averaged_probs(&self, opponent_mixture: &[T]) -> Result<AveragedTable<T>> {
        validate_mixture(opponent_mixture, self.choices.len())?;
        let table = self.probability_table()?;
        let rows = table
            .cells
            .iter()
            .map(|row| {
                (0..self.guesses.len())
                    .map(|n| {
                        row.iter()
                            .zip(opponent_mixture)
                            .fold(T::zero(), |acc, (cell, &w)| acc + w * cell[n])
                    })
                    .collect()
            })
            .collect();
        Ok(AveragedTable {
            choices: self.choices.clone(),
            outcomes: self.guesses.clone(),
            opponent_mixture: opponent_mixture.to_vec(),
            rows,
        })
    }

    /// Distance between two guesses: `|g - g'|` classically, trace distance
    /// between basis states (0 or 1) otherwise.
    pub fn guess_distance(&self, ga: usize, gb: usize) -> T {
        match self.kind {
            GameKind::Classical => T::lit((ga as f64 - gb as f64).abs()),
            _ => {
                if ga == gb {
                    T::zero()
                } else {
                    T::one()
                }
            }
        }
    }

    /// True iff `d(gA, gB) >= d0`.
    pub fn restriction_check(&self, ga: usize, gb: usize) -> Result<bool> {
        self.guess_pos(ga)?;
        self.guess_pos(gb)?;
        Ok(self.guess_distance(ga, gb) >= self.d0)
    }

    pub fn check_intelligence(&self, choice: usize, guess: usize) -> Result<()> {
        if self.enforce_intelligence && !self.intelligence(choice)?.contains(&guess) {
            return Err(ChinosError::IntelligenceViolation { choice, guess });
        }
        Ok(())
    }
}

pub(crate) fn validate_mixture<T: Scalar>(w: &[T], len: usize) -> Result<()> {
    if w.len() != len {
        return Err(ChinosError::InvalidMixture(format!(
            "expected {len} weights, found {}",
            w.len()
        )));
    }
    if w.iter().any(|&x| x < T::zero() || !x.is_finite()) {
        return Err(ChinosError::InvalidMixture("negative or non-finite weight".into()));
    }
    let s = w.iter().fold(T::zero(), |a, &b| a + b);
    if (s - T::one()).abs() > T::tol() {
        return Err(ChinosError::InvalidMixture(format!("weights sum to {s}")));
    }
    Ok(())
}

/// Adjudicates one classical round. The total is `c_A + c_B`; the closer
/// guess wins and equal distances are a push.
pub fn classical_round(ca: usize, cb: usize, ga: usize, gb: usize, enforce_intelligence: bool) -> Result<Winner> {
    let game = GameDefinition::<f64>::classical().with_intelligence_enforced(enforce_intelligence);
    game.choice_pos(ca)?;
    game.choice_pos(cb)?;
    if !game.restriction_check(ga, gb)? {
        return Err(ChinosError::RestrictionViolation {
            guess_a: ga,
            guess_b: gb,
            d0: game.d0,
        });
    }
    game.check_intelligence(ca, ga)?;
    game.check_intelligence(cb, gb)?;
    let total = (ca + cb) as i64;
    let da = (ga as i64 - total).abs();
    let db = (gb as i64 - total).abs();
    Ok(match da.cmp(&db) {
        std::cmp::Ordering::Less => Winner::Alice,
        std::cmp::Ordering::Greater => Winner::Bob,
        std::cmp::Ordering::Equal => Winner::Nobody,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalRow {
    pub c_a: usize,
    pub c_b: usize,
    pub g_ab: usize,
    pub g_a: usize,
    pub g_b: usize,
    pub winner: Winner,
}

/// Exhaustive play of the one-coin game with rational guessing.
///
/// Alice speaks first and, among her guesses compatible with the most of her
/// own choices, takes the lowest; such a guess tells Bob nothing. Bob then
/// picks the allowed guess at distance `>= d0` from hers that is most likely
/// given his coin and the choices of Alice compatible with her guess.
pub fn classical_winners_table() -> Vec<ClassicalRow> {
    let game = GameDefinition::<f64>::classical();
    let compat = |g: usize| {
        game.choices
            .iter()
            .filter(|&&c| game.intelligence(c).unwrap().contains(&g))
            .count()
    };
    let mut rows = Vec::new();
    for &ca in &game.choices {
        for &cb in &game.choices {
            let allowed_a = game.intelligence(ca).unwrap();
            let best = allowed_a.iter().map(|&g| compat(g)).max().unwrap();
            let ga = *allowed_a.iter().find(|&&g| compat(g) == best).unwrap();
            let alice_support: Vec<usize> = game
                .choices
                .iter()
                .copied()
                .filter(|&c| game.intelligence(c).unwrap().contains(&ga))
                .collect();
            let hits = |g: usize| alice_support.iter().filter(|&&c| c + cb == g).count();
            let gb = game
                .intelligence(cb)
                .unwrap()
                .iter()
                .copied()
                .filter(|&g| game.restriction_check(ga, g).unwrap())
                .fold(None, |acc: Option<usize>, g| match acc {
                    Some(b) if hits(b) >= hits(g) => Some(b),
                    _ => Some(g),
                })
                .expect("Bob always has an admissible guess");
            let winner = classical_round(ca, cb, ga, gb, true).expect("rational guesses are legal");
            rows.push(ClassicalRow {
                c_a: ca,
                c_b: cb,
                g_ab: ca + cb,
                g_a: ga,
                g_b: gb,
                winner,
            });
        }
    }
    rows
}
