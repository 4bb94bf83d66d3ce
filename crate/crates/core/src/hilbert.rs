//! Truncated integer power series and Hilbert series of graded quotients.

use std::fmt;

use thiserror::Error;

use crate::alphabet::{VariableSet, WeightedAlphabet};
use crate::division::{standard_monomial_counts, DivisionError};
use crate::groebner::{
    bayer_stillman_basis, check_fr_condition, GroebnerBasis, GroebnerError, IdealPresentation,
    RegularSequenceCandidate, TruncationWindow,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("integer overflow in coefficient {0}")]
    Overflow(usize),
    #[error("constant term {0} is not a unit over the integers")]
    NonInvertible(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Division(#[from] DivisionError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("generators could not be certified as a regular sequence up to degree {0}")]
    Uncertified(u64),
}

/// `sum c_i T^i`, known exactly for `i <= N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    /// Coefficients `c_0..=c_N`; missing ones are zero.
    pub fn new(mut coeffs: Vec<i64>, truncation: u64) -> Self {
        coeffs.resize(truncation as usize + 1, 0);
        TruncatedSeries { coeffs }
    }

    pub fn zero(truncation: u64) -> Self {
        Self::new(Vec::new(), truncation)
    }

    pub fn one(truncation: u64) -> Self {
        Self::new(vec![1], truncation)
    }

    /// `c T^d`.
    pub fn monomial(c: i64, d: u64, truncation: u64) -> Self {
        let mut s = Self::zero(truncation);
        if d <= truncation {
            s.coeffs[d as usize] = c;
        }
        s
    }

    /// `1 / (1 - T^d)`.
    pub fn geometric(d: u64, truncation: u64) -> Self {
        assert!(d >= 1, "geometric series needs a positive step");
        let mut s = Self::zero(truncation);
        for k in (0..=truncation).step_by(d as usize) {
            s.coeffs[k as usize] = 1;
        }
        s
    }

    /// `1 - T^d`.
    pub fn one_minus_power(d: u64, truncation: u64) -> Self {
        let mut s = Self::one(truncation);
        if d <= truncation {
            s.coeffs[d as usize] -= 1;
        }
        s
    }

    pub fn truncation(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: u64) -> Option<i64> {
        self.coeffs.get(k as usize).copied()
    }

    pub fn truncate(&self, truncation: u64) -> Self {
        assert!(
            truncation <= self.truncation(),
            "cannot extend a truncated series"
        );
        TruncatedSeries {
            coeffs: self.coeffs[..=truncation as usize].to_vec(),
        }
    }

    fn common(&self, other: &Self) -> usize {
        self.coeffs.len().min(other.coeffs.len())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let coeffs = (0..self.common(other))
            .map(|k| {
                self.coeffs[k]
                    .checked_add(other.coeffs[k])
                    .ok_or(SeriesError::Overflow(k))
            })
            .collect::<Result<_, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn neg(&self) -> Result<Self, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.checked_neg().ok_or(SeriesError::Overflow(k)))
            .collect::<Result<_, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg()?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let len = self.common(other);
        let mut coeffs = vec![0i64; len];
        for (i, &a) in self.coeffs[..len]
            .iter()
            .enumerate()
            .filter(|(_, a)| **a != 0)
        {
            for (j, &b) in other.coeffs[..len - i].iter().enumerate() {
                let term = a.checked_mul(b).ok_or(SeriesError::Overflow(i + j))?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(term)
                    .ok_or(SeriesError::Overflow(i + j))?;
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `self / other` for `other` with constant term `+-1`.
    pub fn mul_unit_inverse(&self, other: &Self) -> Result<Self, SeriesError> {
        let u = other.coeffs[0];
        if u != 1 && u != -1 {
            return Err(SeriesError::NonInvertible(u));
        }
        let len = self.common(other);
        let mut q = vec![0i64; len];
        for k in 0..len {
            // self_k = sum_{j <= k} other_j q_{k-j}
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                let t = other.coeffs[j]
                    .checked_mul(q[k - j])
                    .ok_or(SeriesError::Overflow(k))?;
                acc = acc.checked_sub(t).ok_or(SeriesError::Overflow(k))?;
            }
            q[k] = acc.checked_mul(u).ok_or(SeriesError::Overflow(k))?;
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// Multiplies in place by `1 / (1 - T^d)`.
    fn mul_geometric_in_place(&mut self, d: usize) -> Result<(), SeriesError> {
        for k in d..self.coeffs.len() {
            self.coeffs[k] = self.coeffs[k]
                .checked_add(self.coeffs[k - d])
                .ok_or(SeriesError::Overflow(k))?;
        }
        Ok(())
    }

    /// Multiplies in place by `1 - T^d`.
    fn mul_one_minus_power_in_place(&mut self, d: usize) -> Result<(), SeriesError> {
        for k in (d..self.coeffs.len()).rev() {
            self.coeffs[k] = self.coeffs[k]
                .checked_sub(self.coeffs[k - d])
                .ok_or(SeriesError::Overflow(k))?;
        }
        Ok(())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "T^{k}")?,
                _ => write!(f, "{a}*T^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(T^{})", self.truncation() + 1)
    }
}

/// `prod 1 / (1 - T^{d_i})` over the variables of `vars` with `d_i <= N`.
pub fn ambient_series(
    weights: &WeightedAlphabet,
    vars: &VariableSet,
    truncation: u64,
) -> Result<TruncatedSeries, SeriesError> {
    let mut s = TruncatedSeries::one(truncation);
    for i in vars.members_with_weight_at_most(weights, truncation) {
        s.mul_geometric_in_place(weights.weight(i) as usize)?;
    }
    Ok(s)
}

/// `prod (1 - T^{d_j})` applied to `base`.
pub fn times_one_minus_powers(
    base: &TruncatedSeries,
    degrees: impl IntoIterator<Item = u64>,
) -> Result<TruncatedSeries, SeriesError> {
    let mut s = base.clone();
    for d in degrees {
        if d >= 1 && d <= s.truncation() {
            s.mul_one_minus_power_in_place(d as usize)?;
        }
    }
    Ok(s)
}

/// Hilbert series of `k[x_i | i in vars] / I` read off from the standard
/// monomials of a homogeneous basis of `I`.
pub fn quotient_series_from_standard_monomials(
    basis: &GroebnerBasis,
    vars: &VariableSet,
    truncation: u64,
) -> Result<TruncatedSeries, HilbertError> {
    let counts = standard_monomial_counts(basis, truncation, vars)?;
    let coeffs = counts
        .into_iter()
        .enumerate()
        .map(|(k, c)| i64::try_from(c).map_err(|_| SeriesError::Overflow(k)))
        .collect::<Result<_, _>>()?;
    Ok(TruncatedSeries::new(coeffs, truncation))
}

/// Hilbert series of `k[x_i | i in W] / I` for an ideal generated by a
/// regular sequence: the ambient series times `prod (1 - T^{deg f})`.
/// Regularity is certified through coprime leading monomials or, failing
/// that, the Hilbert-series test on the generators up to degree `N`.
pub fn regular_sequence_series(
    ideal: &IdealPresentation,
    truncation: u64,
) -> Result<TruncatedSeries, HilbertError> {
    let weights = ideal.ring().weights();
    let horizon = ideal
        .variables()
        .members_with_weight_at_most(weights, truncation)
        .last()
        .copied()
        .unwrap_or(1);
    let horizon = match ideal.rule() {
        crate::groebner::GeneratorRule::Explicit(gens) => gens
            .iter()
            .map(|g| g.max_variable_index())
            .max()
            .unwrap_or(1)
            .max(horizon),
        _ => horizon,
    };
    let gens = ideal.instantiate(TruncationWindow::new(horizon, truncation.max(1))?)?;
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(DivisionError::NotHomogeneous.into());
    }
    let certified = bayer_stillman_basis(ideal.ring(), &gens).is_ok() || {
        let cand = RegularSequenceCandidate::new(ideal.ring(), gens.clone())?;
        check_fr_condition(&cand, truncation)?
    };
    if !certified {
        return Err(HilbertError::Uncertified(truncation));
    }
    let ambient = ambient_series(weights, ideal.variables(), truncation)?;
    Ok(times_one_minus_powers(
        &ambient,
        gens.iter().map(|g| g.degree()),
    )?)
}
