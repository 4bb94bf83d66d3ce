//! Truncated Buchberger completion, reduced bases, and the coprime
//! leading-monomial shortcut.
//!
//! Every computation happens inside a [`TruncationWindow`]: the variables
//! `x_1..x_n` and S-pairs whose least common multiple has weighted degree at
//! most `D`. For homogeneous input this yields exactly the degree `<= D` part
//! of a Gröbner basis of the ideal generated in `k[x_1..x_n]`.

mod filtration;
mod regular;

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::division::{remainder, DivisionError};
use crate::monomial::Monomial;
use crate::polynomial::{s_polynomial, PolyError, Polynomial, Ring};

pub use filtration::{
    assemble_filtration, initial_restriction_gap, nsc_containment, purelex_restriction_check,
    stabilized_reduced_basis, GeneratorRule, IdealPresentation, NscCheck, StabilityReport,
};
pub use regular::{check_fr_condition, is_regular_in_order, RegularSequenceCandidate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Division(#[from] DivisionError),
    #[error("generator `{element}` lies outside the window (n = {var_bound}, D = {degree_bound})")]
    OutsideWindow {
        element: String,
        var_bound: u32,
        degree_bound: u64,
    },
    #[error("truncation window needs n >= 1 and D >= 1")]
    BadWindow,
    #[error("windows must strictly increase in their variable bound")]
    NonIncreasingWindows,
    #[error("leading monomials are not pairwise coprime")]
    NotApplicable,
    #[error("operation requires the {0} order")]
    WrongOrder(&'static str),
    #[error("sequence element `{0}` is not homogeneous of positive degree")]
    NotHomogeneous(String),
    #[error("family rule: {0}")]
    Family(String),
    #[error("stabilization window length must be at least 2")]
    ShortWindow,
}

/// Restriction to `k[x_1..x_n]` and to weighted degree at most `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncationWindow {
    var_bound: u32,
    degree_bound: u64,
}

impl TruncationWindow {
    pub fn new(var_bound: u32, degree_bound: u64) -> Result<Self, GroebnerError> {
        if var_bound == 0 || degree_bound == 0 {
            return Err(GroebnerError::BadWindow);
        }
        Ok(TruncationWindow {
            var_bound,
            degree_bound,
        })
    }

    pub fn var_bound(&self) -> u32 {
        self.var_bound
    }

    pub fn degree_bound(&self) -> u64 {
        self.degree_bound
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.max_variable_index() <= self.var_bound && f.degree() <= self.degree_bound
    }

    /// Smallest window holding all of `polys`.
    pub fn enclosing(polys: &[Polynomial]) -> Self {
        TruncationWindow {
            var_bound: polys
                .iter()
                .map(Polynomial::max_variable_index)
                .max()
                .unwrap_or(0)
                .max(1),
            degree_bound: polys
                .iter()
                .map(Polynomial::degree)
                .max()
                .unwrap_or(0)
                .max(1),
        }
    }
}

impl fmt::Display for TruncationWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n = {}, D = {})", self.var_bound, self.degree_bound)
    }
}

/// How a basis was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Every S-pair inside the window reduces to zero.
    BuchbergerVerified { degree_bound: u64 },
    /// Leading monomials are pairwise coprime.
    BayerStillman,
    /// Union over a filtration; the listed windows passed the initial-ideal
    /// coherence check.
    Asserted { verified_windows: Vec<u32> },
    /// An arbitrary set of polynomials.
    Uncertified,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Certificate::Uncertified)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Certificate::BuchbergerVerified { .. } => "BuchbergerVerified",
            Certificate::BayerStillman => "BayerStillman",
            Certificate::Asserted { .. } => "Asserted",
            Certificate::Uncertified => "Uncertified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    window: TruncationWindow,
    certificate: Certificate,
    reduced: bool,
    discarded_pairs: usize,
}

impl GroebnerBasis {
    /// Wraps an arbitrary set; division works, membership does not.
    pub fn uncertified(ring: &Ring, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            window: TruncationWindow::enclosing(&elements),
            elements,
            certificate: Certificate::Uncertified,
            reduced: false,
            discarded_pairs: 0,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn window(&self) -> TruncationWindow {
        self.window
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// S-pairs dropped because their lcm degree exceeded the window.
    pub fn discarded_pairs(&self) -> usize {
        self.discarded_pairs
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.lm().cloned())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Monic, and no leading monomial divides any term of another element.
pub fn is_reduced_set(elements: &[Polynomial]) -> bool {
    elements.iter().all(|g| g.lc().is_some_and(|c| c.is_one()))
        && elements.iter().enumerate().all(|(i, g)| {
            let lm = g.lm().expect("nonzero");
            elements
                .iter()
                .enumerate()
                .all(|(j, h)| i == j || h.monomials().all(|m| !lm.divides(m)))
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub pairs_checked: usize,
    pub pairs_over_degree: usize,
    /// Index pairs whose S-polynomial has a nonzero remainder.
    pub failures: Vec<(usize, usize)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduces every S-pair (coprime ones included) with lcm degree at most
/// `degree_bound` against `elements`.
pub fn verify_buchberger(
    elements: &[Polynomial],
    degree_bound: u64,
) -> Result<VerificationReport, GroebnerError> {
    let mut pairs = Vec::new();
    let mut over = 0;
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let (a, b) = (elements[i].lm(), elements[j].lm());
            let (Some(a), Some(b)) = (a, b) else { continue };
            if elements[i].ring().degree(&a.lcm(b)) > degree_bound {
                over += 1;
            } else {
                pairs.push((i, j));
            }
        }
    }
    let outcomes: Vec<Result<Option<(usize, usize)>, GroebnerError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let s = s_polynomial(&elements[i], &elements[j])?;
            let r = remainder(&s, elements)?;
            Ok((!r.is_zero()).then_some((i, j)))
        })
        .collect();
    let mut failures = Vec::new();
    for o in outcomes {
        if let Some(pair) = o? {
            failures.push(pair);
        }
    }
    Ok(VerificationReport {
        pairs_checked: pairs.len(),
        pairs_over_degree: over,
        failures,
    })
}

/// Buchberger completion inside `window`, pairs processed smallest lcm
/// degree first, skipping pairs with coprime leading monomials.
pub fn buchberger_truncated(
    ring: &Ring,
    gens: &[Polynomial],
    window: TruncationWindow,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        ring.check(g.ring())?;
        if !window.contains(g) {
            return Err(GroebnerError::OutsideWindow {
                element: g.to_string(),
                var_bound: window.var_bound,
                degree_bound: window.degree_bound,
            });
        }
        if g.is_zero() {
            continue;
        }
        let g = g.monic();
        if !basis.contains(&g) {
            basis.push(g);
        }
    }

    // (lcm degree, insertion sequence, i, j), min-heap
    let mut queue: BinaryHeap<Reverse<(u64, usize, usize, usize)>> = BinaryHeap::new();
    let mut seq = 0;
    let mut discarded = 0;
    let mut enqueue = |basis: &[Polynomial], j: usize, queue: &mut BinaryHeap<_>| {
        let lj = basis[j].lm().expect("nonzero");
        for (i, bi) in basis[..j].iter().enumerate() {
            let li = bi.lm().expect("nonzero");
            if li.is_coprime(lj) {
                continue;
            }
            let d = ring.degree(&li.lcm(lj));
            if d > window.degree_bound {
                discarded += 1;
                continue;
            }
            queue.push(Reverse((d, seq, i, j)));
            seq += 1;
        }
    };
    for j in 0..basis.len() {
        enqueue(&basis, j, &mut queue);
    }
    while let Some(Reverse((_, _, i, j))) = queue.pop() {
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = remainder(&s, &basis)?;
        if !r.is_zero() {
            basis.push(r.monic());
            enqueue(&basis, basis.len() - 1, &mut queue);
        }
    }
    let reduced = is_reduced_set(&basis);
    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: basis,
        window,
        certificate: Certificate::BuchbergerVerified {
            degree_bound: window.degree_bound,
        },
        reduced,
        discarded_pairs: discarded,
    })
}

/// The reduced basis with the same span: drop elements whose leading
/// monomial is a multiple of another's, reduce each survivor by the rest,
/// make monic, and sort by leading monomial (largest first).
pub fn reduce_basis(basis: &GroebnerBasis) -> GroebnerBasis {
    let ring = basis.ring();
    let mut candidates: Vec<Polynomial> = basis
        .elements
        .iter()
        .filter(|g| !g.is_zero())
        .map(Polynomial::monic)
        .collect();
    crate::division::canonical_divisor_order(&mut candidates);
    // keep the first element for each minimal leading monomial
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in candidates.iter().enumerate() {
        let lm = g.lm().expect("nonzero");
        let dominated = candidates.iter().enumerate().any(|(j, h)| {
            let hm = h.lm().expect("nonzero");
            j != k && hm.divides(lm) && (hm != lm || j < k)
        });
        if !dominated {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, h)| h.clone())
                .collect();
            remainder(&minimal[k], &others)
                .expect("same ring, nonzero divisors")
                .monic()
        })
        .collect();
    crate::division::canonical_divisor_order(&mut reduced);
    GroebnerBasis {
        ring: ring.clone(),
        elements: reduced,
        window: basis.window,
        certificate: basis.certificate.clone(),
        reduced: true,
        discarded_pairs: basis.discarded_pairs,
    }
}

/// Certifies `gens` as a Gröbner basis without any S-pair work when their
/// leading monomials are pairwise coprime.
pub fn bayer_stillman_basis(
    ring: &Ring,
    gens: &[Polynomial],
) -> Result<GroebnerBasis, GroebnerError> {
    let mut leads = Vec::with_capacity(gens.len());
    for g in gens {
        ring.check(g.ring())?;
        leads.push(g.lm().ok_or(GroebnerError::NotApplicable)?);
    }
    for i in 0..leads.len() {
        for j in i + 1..leads.len() {
            if !leads[i].is_coprime(leads[j]) {
                return Err(GroebnerError::NotApplicable);
            }
        }
    }
    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: gens.to_vec(),
        window: TruncationWindow::enclosing(gens),
        certificate: Certificate::BayerStillman,
        reduced: is_reduced_set(gens),
        discarded_pairs: 0,
    })
}
