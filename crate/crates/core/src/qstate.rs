//! Finite-dimensional complex state vectors, linear operators and density
//! matrices.
//!
//! Two-qubit indices follow the `|i1, i0>` convention: basis index
//! `2 * i1 + i0`, so qubit 0 is the rightmost tensor factor.

use std::ops::Mul;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{ChinosError, Result};
use crate::scalar::{re, Cx, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Bosonic occupation `|0>, |1>, |2>`.
    Fock3,
    Qubit1,
    /// Two qubits, `|00>, |01>, |10>, |11>`.
    Qubit2,
}

impl Basis {
    pub fn dim(self) -> usize {
        match self {
            Basis::Fock3 => 3,
            Basis::Qubit1 => 2,
            Basis::Qubit2 => 4,
        }
    }

    pub fn from_dim(dim: usize) -> Option<Basis> {
        match dim {
            2 => Some(Basis::Qubit1),
            3 => Some(Basis::Fock3),
            4 => Some(Basis::Qubit2),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    basis: Basis,
    amps: Vec<Cx<T>>,
    normalized: bool,
}

impl<T: Scalar> StateVector<T> {
    /// Builds a state from raw amplitudes. The normalised flag is set when the
    /// norm is within tolerance of one.
    pub fn new(basis: Basis, amps: Vec<Cx<T>>) -> Result<Self> {
        if amps.len() != basis.dim() {
            return Err(ChinosError::DimensionMismatch {
                expected: basis.dim(),
                found: amps.len(),
            });
        }
        let mut s = StateVector {
            basis,
            amps,
            normalized: false,
        };
        s.normalized = (s.norm() - T::one()).abs() <= T::tol();
        Ok(s)
    }

    pub fn from_real(basis: Basis, amps: &[T]) -> Result<Self> {
        Self::new(basis, amps.iter().map(|&a| re(a)).collect())
    }

    /// Computational basis vector `|k>`.
    pub fn basis_state(basis: Basis, k: usize) -> Result<Self> {
        if k >= basis.dim() {
            return Err(ChinosError::DimensionMismatch {
                expected: basis.dim(),
                found: k + 1,
            });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); basis.dim()];
        amps[k] = Complex::new(T::one(), T::zero());
        Ok(StateVector {
            basis,
            amps,
            normalized: true,
        })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Cx<T>] {
        &self.amps
    }

    pub fn amp(&self, k: usize) -> Cx<T> {
        self.amps[k]
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// Returns the normalised state together with the original norm.
    pub fn normalize(&self) -> Result<(Self, T)> {
        let n = self.norm();
        if n <= T::lit(1e-12) {
            return Err(ChinosError::NullMove { norm: n.as_f64() });
        }
        let amps = self.amps.iter().map(|a| a / n).collect();
        Ok((
            StateVector {
                basis: self.basis,
                amps,
                normalized: true,
            },
            n,
        ))
    }

    /// Born-rule probabilities `|<k|psi>|^2`.
    pub fn probabilities(&self) -> Vec<T> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn probability(&self, k: usize) -> T {
        self.amps[k].norm_sqr()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(T::zero(), |m, (a, b)| m.max((a - b).norm()))
    }
}

/// Inner product `<a|b>`, antilinear in the first argument.
pub fn overlap<T: Scalar>(a: &StateVector<T>, b: &StateVector<T>) -> Result<Cx<T>> {
    if a.basis != b.basis {
        return Err(ChinosError::BasisMismatch {
            left: a.basis,
            right: b.basis,
        });
    }
    Ok(a.amps
        .iter()
        .zip(&b.amps)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (x, y)| acc + x.conj() * y))
}

/// Trace distance between two pure states, `sqrt(1 - |<a|b>|^2)`.
///
/// Evaluated as the norm of the component of one state orthogonal to the
/// other, which stays accurate for nearly equal states.
pub fn trace_distance_pure<T: Scalar>(a: &StateVector<T>, b: &StateVector<T>) -> Result<T> {
    overlap(a, b)?;
    let unit = |s: &StateVector<T>| {
        let n = s.norm();
        s.amps.iter().map(|z| z / n).collect::<Vec<_>>()
    };
    let (ua, ub) = (unit(a), unit(b));
    let residual = |x: &[Cx<T>], y: &[Cx<T>]| {
        let o = x
            .iter()
            .zip(y)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (p, q)| acc + p.conj() * q);
        y.iter()
            .zip(x)
            .fold(T::zero(), |acc, (q, p)| acc + (q - o * p).norm_sqr())
            .sqrt()
    };
    Ok((residual(&ua, &ub) + residual(&ub, &ua)) * T::half())
}

/// Kronecker product `a ⊗ b` with `a` as the high (qubit 1) factor.
pub fn tensor<T: Scalar>(a: &StateVector<T>, b: &StateVector<T>) -> Result<StateVector<T>> {
    if a.basis != Basis::Qubit1 {
        return Err(ChinosError::UnsupportedBasis(a.basis));
    }
    if b.basis != Basis::Qubit1 {
        return Err(ChinosError::UnsupportedBasis(b.basis));
    }
    let amps = a.amps.iter().flat_map(|x| b.amps.iter().map(move |y| x * y)).collect();
    Ok(StateVector {
        basis: Basis::Qubit2,
        amps,
        normalized: a.normalized && b.normalized,
    })
}

/// Dense square operator stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOperator<T> {
    dim: usize,
    entries: Vec<Cx<T>>,
    unitary_hint: bool,
}

impl<T: Scalar> LinearOperator<T> {
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { re(T::one()) } else { re(T::zero()) }).with_unitary_hint(true)
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| re(T::zero()))
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Cx<T>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        LinearOperator {
            dim,
            entries,
            unitary_hint: false,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Cx<T>>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(ChinosError::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(LinearOperator {
            dim,
            entries,
            unitary_hint: false,
        })
    }

    pub fn from_real_rows(rows: &[&[T]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| re(x)).collect()).collect())
    }

    pub fn with_unitary_hint(mut self, unitary: bool) -> Self {
        self.unitary_hint = unitary;
        self
    }

    pub fn unitary_hint(&self) -> bool {
        self.unitary_hint
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, r: usize, c: usize) -> Cx<T> {
        self.entries[r * self.dim + c]
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::from_fn(self.dim, |r, c| self.entry(c, r).conj());
        out.unitary_hint = self.unitary_hint;
        out
    }

    pub fn scale(&self, k: Cx<T>) -> Self {
        Self::from_fn(self.dim, |r, c| self.entry(r, c) * k)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim)?;
        Ok(Self::from_fn(self.dim, |r, c| self.entry(r, c) + other.entry(r, c)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim)?;
        Ok(Self::from_fn(self.dim, |r, c| self.entry(r, c) - other.entry(r, c)))
    }

    /// Operator product `self * other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim)?;
        let n = self.dim;
        let mut out = Self::from_fn(n, |r, c| {
            (0..n).fold(re(T::zero()), |acc, k| acc + self.entry(r, k) * other.entry(k, c))
        });
        out.unitary_hint = self.unitary_hint && other.unitary_hint;
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::from_fn(n * m, |r, c| self.entry(r / m, c / m) * other.entry(r % m, c % m));
        out.unitary_hint = self.unitary_hint && other.unitary_hint;
        out
    }

    /// `O|psi>`. The result keeps the normalised flag only for unitary
    /// operators acting on normalised input.
    pub fn apply(&self, psi: &StateVector<T>) -> Result<StateVector<T>> {
        self.check_dim(psi.dim())?;
        let n = self.dim;
        let amps = (0..n)
            .map(|r| (0..n).fold(re(T::zero()), |acc, k| acc + self.entry(r, k) * psi.amps[k]))
            .collect();
        Ok(StateVector {
            basis: psi.basis,
            amps,
            normalized: psi.normalized && self.unitary_hint,
        })
    }

    /// Largest entrywise modulus of `O^† O - I`.
    pub fn unitarity_defect(&self) -> T {
        let p = self
            .adjoint()
            .compose(self)
            .expect("square operator composes with its adjoint");
        p.max_abs_diff(&Self::identity(self.dim))
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.dim != other.dim {
            return T::infinity();
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |m, (a, b)| m.max((a - b).norm()))
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim {
            return Err(ChinosError::DimensionMismatch {
                expected: self.dim,
                found,
            });
        }
        Ok(())
    }
}

/// Operator product. Panics on dimension mismatch; use
/// [`LinearOperator::compose`] for a fallible variant.
impl<'a, T: Scalar> Mul<&'a LinearOperator<T>> for &'a LinearOperator<T> {
    type Output = LinearOperator<T>;

    fn mul(self, rhs: &'a LinearOperator<T>) -> LinearOperator<T> {
        self.compose(rhs).expect("operator dimensions agree")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T> {
    dim: usize,
    entries: Vec<Cx<T>>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validates Hermiticity, unit trace and positive semidefiniteness.
    pub fn new(dim: usize, entries: Vec<Cx<T>>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(ChinosError::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        let rho = DensityMatrix { dim, entries };
        let tol = T::lit(1e-9).max(T::tol());
        for r in 0..dim {
            for c in 0..dim {
                if (rho.entry(r, c) - rho.entry(c, r).conj()).norm() > tol {
                    return Err(ChinosError::InvalidDensity(format!("not Hermitian at ({r}, {c})")));
                }
            }
        }
        let tr = rho.trace();
        if (tr - re(T::one())).norm() > tol {
            return Err(ChinosError::InvalidDensity(format!("trace {} differs from one", tr.re)));
        }
        if let Some(&min) = rho.eigenvalues().first() {
            if min < -tol {
                return Err(ChinosError::InvalidDensity(format!("negative eigenvalue {min}")));
            }
        }
        Ok(rho)
    }

    pub fn from_pure(psi: &StateVector<T>) -> Self {
        let n = psi.dim();
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(psi.amps[r] * psi.amps[c].conj());
            }
        }
        DensityMatrix { dim: n, entries }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let w = T::one() / T::lit(dim as f64);
        let mut entries = vec![re(T::zero()); dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = re(w);
        }
        DensityMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, r: usize, c: usize) -> Cx<T> {
        self.entries[r * self.dim + c]
    }

    pub fn entries(&self) -> &[Cx<T>] {
        &self.entries
    }

    pub fn trace(&self) -> Cx<T> {
        (0..self.dim).fold(re(T::zero()), |acc, k| acc + self.entry(k, k))
    }

    /// Diagonal element `<k|rho|k>`.
    pub fn population(&self, k: usize) -> T {
        self.entry(k, k).re
    }

    /// `U rho U^†`.
    pub fn conjugate_by(&self, u: &LinearOperator<T>) -> Result<Self> {
        if u.dim() != self.dim {
            return Err(ChinosError::DimensionMismatch {
                expected: self.dim,
                found: u.dim(),
            });
        }
        let rho = LinearOperator::from_fn(self.dim, |r, c| self.entry(r, c));
        let out = u.compose(&rho)?.compose(&u.adjoint())?;
        Ok(DensityMatrix {
            dim: self.dim,
            entries: (0..self.dim * self.dim)
                .map(|k| out.entry(k / self.dim, k % self.dim))
                .collect(),
        })
    }

    /// Depolarising channel `(1 - p) rho + p I / d`.
    pub fn depolarize(&self, p: T) -> Self {
        let d = T::lit(self.dim as f64);
        let mut entries: Vec<Cx<T>> = self.entries.iter().map(|e| e * (T::one() - p)).collect();
        for k in 0..self.dim {
            entries[k * self.dim + k] = entries[k * self.dim + k] + re(p / d);
        }
        DensityMatrix { dim: self.dim, entries }
    }

    /// Reduced state of qubit 1 after tracing out qubit 0.
    pub fn partial_trace_qubit0(&self) -> Result<Self> {
        if self.dim != 4 {
            return Err(ChinosError::UnsupportedBasis(
                Basis::from_dim(self.dim).unwrap_or(Basis::Qubit1),
            ));
        }
        let mut entries = Vec::with_capacity(4);
        for a in 0..2 {
            for b in 0..2 {
                entries.push(self.entry(2 * a, 2 * b) + self.entry(2 * a + 1, 2 * b + 1));
            }
        }
        Ok(DensityMatrix { dim: 2, entries })
    }

    /// `tr(rho^2)`.
    pub fn purity(&self) -> T {
        let mut acc = T::zero();
        for r in 0..self.dim {
            for c in 0..self.dim {
                acc = acc + (self.entry(r, c) * self.entry(c, r)).re;
            }
        }
        acc
    }

    /// Closed-form eigenvalues of a 2x2 Hermitian matrix, ascending.
    pub fn eig2_hermitian(&self) -> Result<(T, T)> {
        if self.dim != 2 {
            return Err(ChinosError::DimensionMismatch {
                expected: 2,
                found: self.dim,
            });
        }
        let a = self.entry(0, 0).re;
        let d = self.entry(1, 1).re;
        let b = self.entry(0, 1);
        let mean = (a + d) * T::half();
        let half_gap = (a - d) * T::half();
        let r = (half_gap * half_gap + b.norm_sqr()).sqrt();
        Ok((mean - r, mean + r))
    }

    /// All eigenvalues, ascending, via Jacobi on the real symmetric embedding.
    pub fn eigenvalues(&self) -> Vec<T> {
        hermitian_eigenvalues(self.dim, &self.entries)
    }
}

/// Eigenvalues of a Hermitian matrix (row-major, `n x n`), ascending.
///
/// `H = A + iB` is embedded as the real symmetric `[[A, -B], [B, A]]`, whose
/// spectrum is that of `H` with every eigenvalue doubled.
pub fn hermitian_eigenvalues<T: Scalar>(n: usize, h: &[Cx<T>]) -> Vec<T> {
    let m = 2 * n;
    let mut a = vec![T::zero(); m * m];
    for r in 0..n {
        for c in 0..n {
            let z = h[r * n + c];
            a[r * m + c] = z.re;
            a[(r + n) * m + c + n] = z.re;
            a[r * m + c + n] = -z.im;
            a[(r + n) * m + c] = z.im;
        }
    }
    let mut ev = jacobi_symmetric(m, a);
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    ev.into_iter().step_by(2).collect()
}

fn jacobi_symmetric<T: Scalar>(m: usize, mut a: Vec<T>) -> Vec<T> {
    let eps = T::epsilon();
    for _sweep in 0..100 {
        let mut off = T::zero();
        let mut scale = T::zero();
        for r in 0..m {
            for c in 0..m {
                let v = a[r * m + c] * a[r * m + c];
                if r == c {
                    scale = scale + v;
                } else {
                    off = off + v;
                }
            }
        }
        if off <= eps * eps * (scale + off) || off == T::zero() {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = a[p * m + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p * m + p];
                let aqq = a[q * m + q];
                let tau = (aqq - app) / (T::two() * apq);
                let t = tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..m).map(|k| a[k * m + k]).collect()
}
