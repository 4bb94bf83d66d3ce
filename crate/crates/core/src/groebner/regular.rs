//! Regular sequences of homogeneous polynomials, decided degree by degree
//! through Hilbert series.
//!
//! A sequence `f_1..f_r` of homogeneous elements of positive degree in
//! `S<m>` is regular exactly when
//! `H(S<m> / (f_1..f_r)) = H(S<m>) * prod (1 - T^{deg f_j})`.
//! Comparing both sides up to `T^D` certifies regularity up to degree `D`.

use rayon::prelude::*;

use crate::alphabet::VariableSet;
use crate::division::count_outside;
use crate::hilbert::{ambient_series, times_one_minus_powers, TruncatedSeries};
use crate::monomial::{Monomial, OrderKind};
use crate::polynomial::{Polynomial, Ring};

use super::{buchberger_truncated, GroebnerError, TruncationWindow};

/// An ordered finite sequence of homogeneous polynomials of positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularSequenceCandidate {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl RegularSequenceCandidate {
    pub fn new(ring: &Ring, elements: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        for f in &elements {
            ring.check(f.ring())?;
            if f.is_zero() || !f.is_homogeneous() || f.degree() == 0 {
                return Err(GroebnerError::NotHomogeneous(f.to_string()));
            }
        }
        Ok(RegularSequenceCandidate {
            ring: ring.clone(),
            elements,
        })
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The sequence `f_{perm[0]}, f_{perm[1]}, ...`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.elements.len(), "permutation length");
        RegularSequenceCandidate {
            ring: self.ring.clone(),
            elements: perm.iter().map(|&k| self.elements[k].clone()).collect(),
        }
    }
}

/// Shared data for Hilbert-series comparisons inside `S<m>`.
struct Probe {
    ring: Ring,
    elements: Vec<Polynomial>,
    vars: VariableSet,
    var_bound: u32,
    degree_bound: u64,
    ambient: TruncatedSeries,
}

impl Probe {
    fn new(cand: &RegularSequenceCandidate, degree_bound: u64) -> Result<Self, GroebnerError> {
        if degree_bound == 0 {
            return Err(GroebnerError::BadWindow);
        }
        // any homogeneous order gives the same Hilbert series
        let order = if cand.ring.order().is_homogeneous() {
            cand.ring.order()
        } else {
            OrderKind::HomRevLex
        };
        let ring = cand.ring.with_order(order);
        let elements = cand.elements.iter().map(|f| f.with_order(order)).collect();
        let var_bound = cand
            .elements
            .iter()
            .map(Polynomial::max_variable_index)
            .max()
            .unwrap_or(1)
            .max(1);
        let vars = VariableSet::up_to(var_bound);
        let ambient = ambient_series(ring.weights(), &vars, degree_bound)
            .map_err(|e| GroebnerError::Family(e.to_string()))?;
        Ok(Probe {
            ring,
            elements,
            vars,
            var_bound,
            degree_bound,
            ambient,
        })
    }

    /// Whether the elements selected by `mask` satisfy the Hilbert-series
    /// identity up to the degree bound.
    fn subset_passes(&self, mask: u64) -> Result<bool, GroebnerError> {
        let chosen: Vec<Polynomial> = self
            .elements
            .iter()
            .enumerate()
            .filter(|(k, f)| mask >> k & 1 == 1 && f.degree() <= self.degree_bound)
            .map(|(_, f)| f.clone())
            .collect();
        if chosen.is_empty() {
            return Ok(true);
        }
        let window = TruncationWindow::new(self.var_bound, self.degree_bound)?;
        let gb = buchberger_truncated(&self.ring, &chosen, window)?;
        let leads: Vec<Monomial> = gb.leading_monomials();
        let counts = count_outside(&self.ring, &leads, &self.vars, self.degree_bound);
        let expected = times_one_minus_powers(&self.ambient, chosen.iter().map(Polynomial::degree))
            .map_err(|e| GroebnerError::Family(e.to_string()))?;
        Ok(counts
            .iter()
            .zip(expected.coeffs())
            .all(|(&c, &e)| c as i64 == e))
    }
}

/// The FR-condition up to degree `probe_degree`: every subsequence of the
/// candidate is a regular sequence. Costs one truncated basis computation per
/// nonempty subset.
pub fn check_fr_condition(
    cand: &RegularSequenceCandidate,
    probe_degree: u64,
) -> Result<bool, GroebnerError> {
    assert!(cand.len() < 64, "sequence too long for subset enumeration");
    let probe = Probe::new(cand, probe_degree)?;
    let masks: Vec<u64> = (1..1u64 << cand.len()).collect();
    let outcomes: Vec<Result<bool, GroebnerError>> =
        masks.par_iter().map(|&m| probe.subset_passes(m)).collect();
    for o in outcomes {
        if !o? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Regularity of the sequence in its given order up to degree
/// `probe_degree`, checked on each prefix.
pub fn is_regular_in_order(
    cand: &RegularSequenceCandidate,
    probe_degree: u64,
) -> Result<bool, GroebnerError> {
    let probe = Probe::new(cand, probe_degree)?;
    for k in 1..=cand.len() {
        if !probe.subset_passes((1u64 << k) - 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::WeightedAlphabet;
    use crate::coefficient::Field;

    fn cand(r: &Ring, items: &[&str]) -> RegularSequenceCandidate {
        RegularSequenceCandidate::new(r, items.iter().map(|s| r.parse(s).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn variables_are_regular() {
        let r = Ring::standard(OrderKind::HomRevLex);
        assert!(check_fr_condition(&cand(&r, &["x1", "x2", "x3"]), 8).unwrap());
    }

    #[test]
    fn zero_divisor_is_detected() {
        let r = Ring::standard(OrderKind::HomRevLex);
        let c = cand(&r, &["x1", "x1^2"]);
        assert!(!check_fr_condition(&c, 4).unwrap());
        assert!(!is_regular_in_order(&c, 4).unwrap());
    }

    #[test]
    fn shuffled_family_prefix() {
        let r = Ring::standard(OrderKind::HomAntiRevLex);
        let a = cand(&r, &["x1^2 - x2", "x2^2 - x4"]);
        let b = a.permuted(&[1, 0]);
        assert_eq!(b.elements()[0].to_string(), "x2^2 - x4");
        assert!(check_fr_condition(&a, 12).unwrap());
        assert!(check_fr_condition(&b, 12).unwrap());
    }

    #[test]
    fn common_factor_breaks_regularity_in_every_order() {
        let r = Ring::new(
            OrderKind::HomLex,
            WeightedAlphabet::unit_on(4),
            Field::Rational,
        );
        let c = cand(&r, &["x1*x2 + x1*x3", "x2^2 + x3^2", "x1*x4"]);
        for perm in [[0, 1, 2], [1, 0, 2], [2, 1, 0]] {
            assert!(!check_fr_condition(&c.permuted(&perm), 6).unwrap());
        }
        // two forms without a common factor are a regular pair
        let pair = cand(&r, &["x1*x2 + x3^2", "x1*x3 + x3*x4"]);
        assert!(is_regular_in_order(&pair, 6).unwrap());
    }

    #[test]
    fn validation() {
        let r = Ring::standard(OrderKind::HomRevLex);
        let bad = |s: &str| RegularSequenceCandidate::new(&r, vec![r.parse(s).unwrap()]);
        assert!(matches!(
            bad("x1 + x2"),
            Err(GroebnerError::NotHomogeneous(_))
        ));
        assert!(matches!(bad("3"), Err(GroebnerError::NotHomogeneous(_))));
        let plex = Ring::standard(OrderKind::PureLex);
        let c = cand(&plex, &["x1^2 - x2", "x1*x2 - x3"]);
        assert!(check_fr_condition(&c, 8).is_ok());
    }
}
