//! Division by a finite list of polynomials, ideal membership, and standard
//! monomials.

use std::cmp::Ordering;

use thiserror::Error;

use crate::alphabet::VariableSet;
use crate::groebner::GroebnerBasis;
use crate::monomial::Monomial;
use crate::polynomial::{PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("divisor #{0} is zero")]
    ZeroDivisor(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("standard monomials need a homogeneous order and homogeneous basis elements")]
    NotHomogeneous,
    #[error("basis carries no certificate")]
    Uncertified,
}

/// `f = sum quotients[i] * divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    /// One quotient per divisor, aligned with the divisor slice.
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    /// Number of reduction steps (leading-term cancellations).
    pub steps: usize,
}

/// Division algorithm: while the working polynomial is nonzero, cancel its
/// leading term with the first divisor whose leading monomial divides it,
/// otherwise move the leading term to the remainder.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<DivisionResult, DivisionError> {
    let ring = f.ring();
    let mut leads = Vec::with_capacity(divisors.len());
    for (k, g) in divisors.iter().enumerate() {
        ring.check(g.ring())?;
        let lead = g.leading().map_err(|_| DivisionError::ZeroDivisor(k))?;
        leads.push((lead.lm, lead.lc.inv()));
    }
    let mut quotient_terms: Vec<Vec<(crate::coefficient::Coefficient, Monomial)>> =
        vec![Vec::new(); divisors.len()];
    let mut remainder = Polynomial::zero(ring);
    let mut work = f.clone();
    let mut steps = 0;
    while let Some(lt_monomial) = work.lm().cloned() {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(k, (lm, _))| lt_monomial.try_divide(lm).map(|q| (k, q)));
        match hit {
            Some((k, mu)) => {
                let c = work.lc().expect("nonzero").mul(&leads[k].1);
                work = work.sub_scaled(&c, &mu, &divisors[k]);
                quotient_terms[k].push((c, mu));
                steps += 1;
            }
            None => {
                let (lt, rest) = work.split_leading().expect("nonzero");
                remainder.push_smallest(lt);
                work = rest;
            }
        }
    }
    let quotients = quotient_terms
        .into_iter()
        .map(|ts| Polynomial::from_terms(ring, ts))
        .collect();
    Ok(DivisionResult {
        quotients,
        remainder,
        steps,
    })
}

pub fn remainder(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial, DivisionError> {
    Ok(divide(f, divisors)?.remainder)
}

/// Sorts divisors by leading monomial (largest first), then by text.
pub fn canonical_divisor_order(divisors: &mut [Polynomial]) {
    divisors.sort_by(|a, b| match (a.lm(), b.lm()) {
        (Some(x), Some(y)) => a
            .ring()
            .compare(y, x)
            .then_with(|| a.to_string().cmp(&b.to_string())),
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (None, None) => Ordering::Equal,
    });
}

/// Membership in the ideal spanned by a Gröbner basis: the remainder is zero.
pub fn is_member(f: &Polynomial, basis: &GroebnerBasis) -> Result<bool, DivisionError> {
    if !basis.certificate().is_certified() {
        return Err(DivisionError::Uncertified);
    }
    Ok(remainder(f, basis.elements())?.is_zero())
}

/// Monomials of weighted degree `degree` in the variables `vars` that are
/// divisible by no leading monomial of the basis.
pub fn standard_monomials(
    basis: &GroebnerBasis,
    degree: u64,
    vars: &VariableSet,
) -> Result<Vec<Monomial>, DivisionError> {
    check_homogeneous(basis.ring(), basis.elements())?;
    let leads: Vec<Monomial> = basis
        .elements()
        .iter()
        .filter_map(|g| g.lm().cloned())
        .collect();
    let mut out = Vec::new();
    walk_standard(basis.ring(), &leads, vars, degree, |d, m| {
        if d == degree {
            out.push(m);
        }
    });
    Ok(out)
}

/// Number of standard monomials in each degree `0..=max_degree`.
pub fn standard_monomial_counts(
    basis: &GroebnerBasis,
    max_degree: u64,
    vars: &VariableSet,
) -> Result<Vec<u64>, DivisionError> {
    check_homogeneous(basis.ring(), basis.elements())?;
    let leads: Vec<Monomial> = basis
        .elements()
        .iter()
        .filter_map(|g| g.lm().cloned())
        .collect();
    Ok(count_outside(basis.ring(), &leads, vars, max_degree))
}

pub(crate) fn check_homogeneous(ring: &Ring, elements: &[Polynomial]) -> Result<(), DivisionError> {
    if !ring.order().is_homogeneous() || !elements.iter().all(Polynomial::is_homogeneous) {
        return Err(DivisionError::NotHomogeneous);
    }
    Ok(())
}

/// Counts monomials of each degree `<= max_degree` in `vars` outside the
/// monomial ideal generated by `leads`.
pub(crate) fn count_outside(
    ring: &Ring,
    leads: &[Monomial],
    vars: &VariableSet,
    max_degree: u64,
) -> Vec<u64> {
    let mut counts = vec![0u64; max_degree as usize + 1];
    walk_standard(ring, leads, vars, max_degree, |d, _| {
        counts[d as usize] += 1
    });
    counts
}

/// Depth-first enumeration of standard monomials of degree `<= max_degree`.
/// Divisibility is monotone, so a branch is cut as soon as the partial
/// monomial lands in the monomial ideal.
fn walk_standard(
    ring: &Ring,
    leads: &[Monomial],
    vars: &VariableSet,
    max_degree: u64,
    mut visit: impl FnMut(u64, Monomial),
) {
    let candidates: Vec<(u32, u64)> = vars
        .members_with_weight_at_most(ring.weights(), max_degree)
        .into_iter()
        .map(|i| (i, ring.weights().weight(i)))
        .collect();
    let leads: Vec<&Monomial> = leads
        .iter()
        .filter(|m| m.in_subring(vars) && ring.degree(m) <= max_degree)
        .collect();
    let mut current: Vec<(u32, u32)> = Vec::new();
    if leads.iter().any(|m| m.is_one()) {
        return;
    }
    walk(&candidates, &leads, max_degree, 0, &mut current, &mut visit);

    fn walk(
        candidates: &[(u32, u64)],
        leads: &[&Monomial],
        max_degree: u64,
        degree: u64,
        current: &mut Vec<(u32, u32)>,
        visit: &mut impl FnMut(u64, Monomial),
    ) {
        visit(degree, Monomial::from_pairs(current.iter().copied()));
        // extend with variables of index >= the last one used, so each
        // monomial is produced once
        let start = current.last().map(|&(i, _)| i).unwrap_or(0);
        let first = candidates.partition_point(|&(i, _)| i < start);
        for &(index, weight) in &candidates[first..] {
            if degree + weight > max_degree {
                continue;
            }
            match current.last_mut() {
                Some((i, e)) if *i == index => *e += 1,
                _ => current.push((index, 1)),
            }
            let m = Monomial::from_pairs(current.iter().copied());
            if !leads.iter().any(|l| l.divides(&m)) {
                walk(
                    candidates,
                    leads,
                    max_degree,
                    degree + weight,
                    current,
                    visit,
                );
            }
            match current.last_mut() {
                Some((_, e)) if *e > 1 => *e -= 1,
                _ => {
                    current.pop();
                }
            }
        }
    }
}
