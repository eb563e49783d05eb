//! Operator families available to the players and the two-qubit gates used to
//! build them.

use serde::{Deserialize, Serialize};

use crate::error::{ChinosError, Result};
use crate::qstate::LinearOperator;
use crate::scalar::{cx, re, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "theta", rename_all = "snake_case")]
pub enum ModeKind<T> {
    BosonFock3,
    HardCore(T),
    Qubit(T),
    TwoQubitBell(T),
}

impl<T: Scalar> ModeKind<T> {
    pub fn theta(&self) -> Option<T> {
        match *self {
            ModeKind::BosonFock3 => None,
            ModeKind::HardCore(t) | ModeKind::Qubit(t) | ModeKind::TwoQubitBell(t) => Some(t),
        }
    }
}

/// An ordered list of operators addressed by their conventional labels.
///
/// Single-mode families are labelled from 1 (`O1`, `O2`, ...); the two-qubit
/// family is labelled from 0 with `k = 2 * i1 + i0`.
#[derive(Clone, Debug)]
pub struct OperatorFamily<T> {
    kind: ModeKind<T>,
    first_label: usize,
    ops: Vec<LinearOperator<T>>,
}

impl<T: Scalar> OperatorFamily<T> {
    pub fn kind(&self) -> ModeKind<T> {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.ops[0].dim()
    }

    pub fn labels(&self) -> Vec<usize> {
        (self.first_label..self.first_label + self.ops.len()).collect()
    }

    pub fn label_name(&self, label: usize) -> String {
        format!("O{label}")
    }

    /// Operator by its conventional label.
    pub fn op(&self, label: usize) -> Result<&LinearOperator<T>> {
        label
            .checked_sub(self.first_label)
            .and_then(|k| self.ops.get(k))
            .ok_or_else(|| ChinosError::InvalidChoice {
                label,
                allowed: self.labels(),
            })
    }

    pub fn ops(&self) -> &[LinearOperator<T>] {
        &self.ops
    }
}

/// Truncated bosonic creation operator on `|0>, |1>, |2>`.
pub fn creation_fock3<T: Scalar>() -> LinearOperator<T> {
    LinearOperator::from_fn(3, |r, c| {
        if r == c + 1 {
            re(T::lit(r as f64).sqrt())
        } else {
            re(T::zero())
        }
    })
}

/// Hard-core creation operator `|1><0|`.
pub fn creation_hardcore<T: Scalar>() -> LinearOperator<T> {
    LinearOperator::from_fn(2, |r, c| if r == 1 && c == 0 { re(T::one()) } else { re(T::zero()) })
}

/// `{I, (I + b†)/√2, (I - b†)/√2, b†}` on the truncated Fock space.
pub fn boson_family<T: Scalar>() -> OperatorFamily<T> {
    let id = LinearOperator::identity(3);
    let b = creation_fock3::<T>();
    let k = re(T::FRAC_1_SQRT_2());
    let plus = id.add(&b).expect("same dim").scale(k);
    let minus = id.sub(&b).expect("same dim").scale(k);
    OperatorFamily {
        kind: ModeKind::BosonFock3,
        first_label: 1,
        ops: vec![id, plus, minus, b],
    }
}

/// `{I, cos θ I + sin θ b†, cos θ I - sin θ b†}` for `θ ∈ (0, π/2)`.
pub fn hardcore_family<T: Scalar>(theta: T) -> Result<OperatorFamily<T>> {
    if !(theta > T::zero() && theta < T::FRAC_PI_2()) {
        return Err(ChinosError::DegenerateAngle {
            theta: theta.as_f64(),
            range: "(0, pi/2)",
        });
    }
    let id = LinearOperator::identity(2);
    let b = creation_hardcore::<T>();
    let ci = id.scale(re(theta.cos()));
    let sb = b.scale(re(theta.sin()));
    Ok(OperatorFamily {
        kind: ModeKind::HardCore(theta),
        first_label: 1,
        ops: vec![id, ci.add(&sb)?, ci.sub(&sb)?],
    })
}

/// Rotation `exp(-i θ σ_y / 2)`.
pub fn y_rotation<T: Scalar>(theta: T) -> LinearOperator<T> {
    let (s, c) = (theta * T::half()).sin_cos();
    LinearOperator::from_fn(2, |r, col| match (r, col) {
        (0, 0) | (1, 1) => re(c),
        (0, 1) => re(-s),
        _ => re(s),
    })
    .with_unitary_hint(true)
}

/// Rotation `exp(-i θ σ_x / 2)`.
pub fn x_rotation<T: Scalar>(theta: T) -> LinearOperator<T> {
    let (s, c) = (theta * T::half()).sin_cos();
    LinearOperator::from_fn(2, |r, col| if r == col { re(c) } else { cx(T::zero(), -s) }).with_unitary_hint(true)
}

/// `{I, R(θ), R(-θ)}` with `R` the Y rotation.
pub fn qubit_family<T: Scalar>(theta: T) -> OperatorFamily<T> {
    OperatorFamily {
        kind: ModeKind::Qubit(theta),
        first_label: 1,
        ops: vec![LinearOperator::identity(2), y_rotation(theta), y_rotation(-theta)],
    }
}

pub fn pauli_x<T: Scalar>() -> LinearOperator<T> {
    LinearOperator::from_fn(2, |r, c| re(if r != c { T::one() } else { T::zero() })).with_unitary_hint(true)
}

pub fn hadamard<T: Scalar>() -> LinearOperator<T> {
    let h = T::FRAC_1_SQRT_2();
    LinearOperator::from_fn(2, |r, c| re(if r == 1 && c == 1 { -h } else { h })).with_unitary_hint(true)
}

/// Applies `u` to qubit 1 when qubit 0 is set: `|i1, 1> -> (u|i1>) ⊗ |1>`.
pub fn controlled<T: Scalar>(u: &LinearOperator<T>) -> LinearOperator<T> {
    LinearOperator::from_fn(4, |r, c| {
        let (r1, r0) = (r >> 1, r & 1);
        let (c1, c0) = (c >> 1, c & 1);
        if r0 != c0 {
            re(T::zero())
        } else if c0 == 0 {
            re(if r1 == c1 { T::one() } else { T::zero() })
        } else {
            u.entry(r1, c1)
        }
    })
    .with_unitary_hint(u.unitary_hint())
}

/// `CNOT |i1, i0> = |i1 ⊕ i0, i0>`.
pub fn cnot<T: Scalar>() -> LinearOperator<T> {
    controlled(&pauli_x())
}

/// Controlled X rotation `CU(θ)`; identity on the control-off subspace.
pub fn gate_cu<T: Scalar>(theta: T) -> LinearOperator<T> {
    controlled(&x_rotation(theta))
}

/// `CNOT · CU(θ)`, equal to `CNOT` at `θ = 0`.
pub fn rotated_entangler<T: Scalar>(theta: T) -> LinearOperator<T> {
    controlled(&(&pauli_x() * &x_rotation(theta)))
}

fn x_power<T: Scalar>(k: usize) -> LinearOperator<T> {
    if k & 1 == 1 {
        pauli_x()
    } else {
        LinearOperator::identity(2)
    }
}

/// `Bell(i1, i0) = CNOT (I ⊗ H) (X^i1 ⊗ X^i0)`.
pub fn bell_operator<T: Scalar>(i1: usize, i0: usize) -> LinearOperator<T> {
    rotated_bell_operator(T::zero(), i1, i0)
}

/// Bell operator with the entangler replaced by [`rotated_entangler`].
pub fn rotated_bell_operator<T: Scalar>(theta: T, i1: usize, i0: usize) -> LinearOperator<T> {
    let prep = x_power::<T>(i1).kron(&x_power(i0));
    let local = LinearOperator::identity(2).kron(&hadamard());
    &(&rotated_entangler(theta) * &local) * &prep
}

/// The four two-qubit operators `O_k`, `k = 2 * i1 + i0`.
///
/// Distinct physics lives on `θ ∈ [0, π]`; other angles are accepted so that
/// reflection symmetries can be evaluated directly.
pub fn bell_family<T: Scalar>(theta: T) -> Result<OperatorFamily<T>> {
    if !theta.is_finite() {
        return Err(ChinosError::DegenerateAngle {
            theta: theta.as_f64(),
            range: "[0, pi]",
        });
    }
    Ok(OperatorFamily {
        kind: ModeKind::TwoQubitBell(theta),
        first_label: 0,
        ops: (0..4).map(|k| rotated_bell_operator(theta, k >> 1, k & 1)).collect(),
    })
}

pub fn family<T: Scalar>(kind: ModeKind<T>) -> Result<OperatorFamily<T>> {
    match kind {
        ModeKind::BosonFock3 => Ok(boson_family()),
        ModeKind::HardCore(t) => hardcore_family(t),
        ModeKind::Qubit(t) => Ok(qubit_family(t)),
        ModeKind::TwoQubitBell(t) => bell_family(t),
    }
}
