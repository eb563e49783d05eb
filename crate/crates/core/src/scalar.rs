use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar backing every amplitude, matrix entry and probability.
///
/// Implemented for `f32` and `f64`. The associated tolerance is the
/// absolute slack used when checking that a computed quantity is "exact"
/// (normalisation, unitarity, vanishing overlaps).
pub trait Scalar: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Absolute tolerance for exactness checks.
    const EXACT_TOL: f64;

    /// Converts an `f64` literal into this scalar.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    fn tol() -> Self {
        Self::lit(Self::EXACT_TOL)
    }

    fn half() -> Self {
        Self::lit(0.5)
    }

    fn two() -> Self {
        Self::lit(2.0)
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT_TOL: f64 = 1e-12;
}

impl Scalar for f32 {
    const EXACT_TOL: f64 = 1e-5;
}

pub type Cx<T> = Complex<T>;

pub(crate) fn cx<T: Scalar>(re: T, im: T) -> Cx<T> {
    Complex::new(re, im)
}

pub(crate) fn re<T: Scalar>(x: T) -> Cx<T> {
    Complex::new(x, T::zero())
}
