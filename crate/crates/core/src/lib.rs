//! Simulation library for the classical and quantum Chinos guessing games.
//!
//! The numerical core is generic over a real [`Scalar`] (`f32` or `f64`).
//! Concrete aliases for both precisions are exported below.

pub mod error;
pub mod games;
pub mod metric;
pub mod modes;
pub mod qstate;
pub mod scalar;
pub mod shots;
pub mod strategy;

pub use error::{ChinosError, Result};
pub use scalar::{Cx, Scalar};

pub type StateVectorF64 = qstate::StateVector<f64>;
pub type StateVectorF32 = qstate::StateVector<f32>;
pub type LinearOperatorF64 = qstate::LinearOperator<f64>;
pub type LinearOperatorF32 = qstate::LinearOperator<f32>;
pub type DensityMatrixF64 = qstate::DensityMatrix<f64>;
pub type DensityMatrixF32 = qstate::DensityMatrix<f32>;
pub type OperatorFamilyF64 = modes::OperatorFamily<f64>;
pub type OperatorFamilyF32 = modes::OperatorFamily<f32>;
pub type GameDefinitionF64 = games::GameDefinition<f64>;
pub type GameDefinitionF32 = games::GameDefinition<f32>;
pub type MixedStrategyF64 = strategy::MixedStrategy<f64>;
pub type MixedStrategyF32 = strategy::MixedStrategy<f32>;
pub type MetricMatrixF64 = metric::MetricMatrix<f64>;
pub type MetricMatrixF32 = metric::MetricMatrix<f32>;
