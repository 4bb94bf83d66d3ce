//! Integer partitions, the partition/monomial dictionary, the bijection
//! between partitions with parts in `W \ pW` and partitions with parts in
//! `W` of multiplicity below `p`, and the Schur and Rogers-Ramanujan
//! coefficient identities.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::alphabet::{VariableSet, WeightedAlphabet};
use crate::division::{canonical_divisor_order, divide};
use crate::hilbert::{ambient_series, SeriesError, TruncatedSeries};
use crate::monomial::{Monomial, OrderKind};
use crate::polynomial::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and non-increasing: {0:?}")]
    Malformed(Vec<u32>),
    #[error("{partition} is not in {family}")]
    NotInFamily { partition: String, family: String },
    #[error("invalid family: {0}")]
    BadSpec(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("division produced a non-monomial remainder `{0}`")]
    NotMonomial(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `lambda_1 >= ... >= lambda_r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Malformed(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    fn from_multiplicities(m: &BTreeMap<u32, u32>) -> Self {
        Partition(
            m.iter()
                .rev()
                .flat_map(|(&p, &k)| std::iter::repeat_n(p, k as usize))
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// `(5,4,1)`, `5,4,1` or `()`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::BadSpec(format!("cannot read partition `{s}`")))?;
        Partition::new(parts)
    }
}

/// `x^lambda = x_{lambda_r} ... x_{lambda_1}`.
pub fn partition_to_monomial(lambda: &Partition) -> Monomial {
    Monomial::from_indices(lambda.0.iter().copied())
}

/// Inverse of [`partition_to_monomial`]: variable `x_i` becomes a part `i`.
pub fn monomial_to_partition(m: &Monomial) -> Partition {
    Partition::from_unsorted(
        m.pairs()
            .iter()
            .flat_map(|&(i, e)| std::iter::repeat_n(i, e as usize))
            .collect(),
    )
}

/// Which parts may occur, how often, and how far apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraints {
    parts: VariableSet,
    /// Parts `p*i` with `i` in this set are excluded.
    excluded_multiples: Option<(u32, VariableSet)>,
    max_multiplicity: Option<u32>,
    /// Consecutive parts differ by at least this much (0 for no condition).
    min_gap: u32,
}

impl Constraints {
    pub fn allows_part(&self, k: u32) -> bool {
        self.parts.contains(k)
            && !self
                .excluded_multiples
                .as_ref()
                .is_some_and(|(p, w)| k.is_multiple_of(*p) && w.contains(k / p))
    }

    pub fn admits(&self, lambda: &Partition) -> bool {
        lambda.0.iter().all(|&k| self.allows_part(k))
            && self
                .max_multiplicity
                .is_none_or(|m| lambda.multiplicities().values().all(|&c| c <= m))
            && lambda.0.windows(2).all(|w| w[0] - w[1] >= self.min_gap)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Preset {
    /// Parts congruent to `+-1` mod 6.
    A,
    /// Distinct parts congruent to `+-1` mod 3.
    B,
    /// Odd parts, each appearing at most twice.
    C,
    /// Parts congruent to `+-1` mod 5.
    P,
    /// Parts differing pairwise by at least 2.
    Q,
}

impl Preset {
    pub const ALL: [Preset; 5] = [Preset::A, Preset::B, Preset::C, Preset::P, Preset::Q];
}

impl FromStr for Preset {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Preset::A),
            "B" | "b" => Ok(Preset::B),
            "C" | "c" => Ok(Preset::C),
            "P" | "p" => Ok(Preset::P),
            "Q" | "q" => Ok(Preset::Q),
            other => Err(PartitionError::UnknownPreset(other.to_string())),
        }
    }
}

/// A family of partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Parts in `W \ pW`.
    X(PowerSpec),
    /// Parts in `W`, each with multiplicity below `p`.
    Y(PowerSpec),
    Preset(Preset),
}

impl FamilySpec {
    pub fn constraints(&self) -> Constraints {
        match self {
            FamilySpec::X(s) => Constraints {
                parts: s.w.clone(),
                excluded_multiples: Some((s.p, s.w.clone())),
                max_multiplicity: None,
                min_gap: 0,
            },
            FamilySpec::Y(s) => Constraints {
                parts: s.w.clone(),
                excluded_multiples: None,
                max_multiplicity: Some(s.p - 1),
                min_gap: 0,
            },
            FamilySpec::Preset(p) => {
                let (parts, max_multiplicity, min_gap) = match p {
                    Preset::A => (VariableSet::pm1_mod(6), None, 0),
                    Preset::B => (VariableSet::pm1_mod(3), Some(1), 0),
                    Preset::C => (VariableSet::odd(), Some(2), 0),
                    Preset::P => (VariableSet::pm1_mod(5), None, 0),
                    Preset::Q => (VariableSet::all(), None, 2),
                };
                Constraints {
                    parts,
                    excluded_multiples: None,
                    max_multiplicity,
                    min_gap,
                }
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::X(s) => write!(f, "X(W = {}, p = {})", s.w, s.p),
            FamilySpec::Y(s) => write!(f, "Y(W = {}, p = {})", s.w, s.p),
            FamilySpec::Preset(p) => write!(f, "{p:?}"),
        }
    }
}

/// A set `W` and an integer `p >= 2` with `pW` inside `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSpec {
    w: VariableSet,
    p: u32,
}

impl PowerSpec {
    /// Checks `p >= 2` and `p*i in W` for members `i <= probe`.
    pub fn new(w: VariableSet, p: u32, probe: u32) -> Result<Self, PartitionError> {
        if p < 2 {
            return Err(PartitionError::BadSpec(format!(
                "p must be at least 2, got {p}"
            )));
        }
        if let Some(i) = (1..=probe).find(|&i| w.contains(i) && !w.contains(p * i)) {
            return Err(PartitionError::BadSpec(format!(
                "{i} is in {w} but {} is not",
                p * i
            )));
        }
        Ok(PowerSpec { w, p })
    }

    /// `W = +-1 mod 3`, `p = 2`: `X` is the `A` family and `Y` the `B` family.
    pub fn schur_p2() -> Self {
        PowerSpec::new(VariableSet::pm1_mod(3), 2, 300).expect("valid preset")
    }

    /// `W` odd, `p = 3`: `X` is the `A` family and `Y` the `C` family.
    pub fn schur_p3() -> Self {
        PowerSpec::new(VariableSet::odd(), 3, 300).expect("valid preset")
    }

    /// `AB`/`schur-p2` or `AC`/`schur-p3`.
    pub fn preset(name: &str) -> Result<Self, PartitionError> {
        match name {
            "AB" | "schur-p2" => Ok(Self::schur_p2()),
            "AC" | "schur-p3" => Ok(Self::schur_p3()),
            other => Err(PartitionError::UnknownPreset(other.to_string())),
        }
    }

    pub fn w(&self) -> &VariableSet {
        &self.w
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn x(&self) -> FamilySpec {
        FamilySpec::X(self.clone())
    }

    pub fn y(&self) -> FamilySpec {
        FamilySpec::Y(self.clone())
    }

    fn in_p_w(&self, k: u32) -> bool {
        k.is_multiple_of(self.p) && self.w.contains(k / self.p)
    }
}

/// All partitions of `n` in the family, in decreasing lexicographic order.
pub fn enumerate(spec: &FamilySpec, n: u32) -> Vec<Partition> {
    enumerate_constrained(&spec.constraints(), n)
}

pub fn enumerate_constrained(c: &Constraints, n: u32) -> Vec<Partition> {
    let allowed: Vec<u32> = (1..=n).rev().filter(|&k| c.allows_part(k)).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    walk(c, &allowed, n, &mut current, &mut out);
    return out;

    fn walk(
        c: &Constraints,
        allowed: &[u32],
        rest: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for (idx, &k) in allowed.iter().enumerate() {
            if k > rest {
                continue;
            }
            if let Some(&last) = current.last() {
                if k > last || (k < last && last - k < c.min_gap) || (k == last && c.min_gap > 0) {
                    continue;
                }
            }
            if let Some(m) = c.max_multiplicity {
                let run = current.iter().rev().take_while(|&&q| q == k).count() as u32;
                if run >= m {
                    continue;
                }
            }
            current.push(k);
            walk(c, &allowed[idx..], rest - k, current, out);
            current.pop();
        }
    }
}

pub fn count(spec: &FamilySpec, n: u32) -> usize {
    enumerate(spec, n).len()
}

/// The binomials `x_i^p - x_{p i}` with `p i <= n`, and the two rings in
/// which dividing by them realizes the maps.
pub struct Bijection {
    spec: PowerSpec,
    forward: (Ring, Vec<Polynomial>),
    backward: (Ring, Vec<Polynomial>),
}

impl Bijection {
    pub fn new(spec: &PowerSpec, n: u32) -> Self {
        let build = |order: OrderKind| {
            let ring = Ring::new(order, WeightedAlphabet::standard(), Default::default());
            let mut gens: Vec<Polynomial> = (1..=n / spec.p)
                .filter(|&i| spec.w.contains(i))
                .map(|i| Polynomial::power_binomial(&ring, i, spec.p))
                .collect();
            canonical_divisor_order(&mut gens);
            (ring, gens)
        };
        Bijection {
            spec: spec.clone(),
            forward: build(OrderKind::HomAntiRevLex),
            backward: build(OrderKind::HomLex),
        }
    }

    pub fn spec(&self) -> &PowerSpec {
        &self.spec
    }

    fn check(&self, lambda: &Partition, family: FamilySpec) -> Result<(), PartitionError> {
        if family.constraints().admits(lambda) {
            Ok(())
        } else {
            Err(PartitionError::NotInFamily {
                partition: lambda.to_string(),
                family: family.to_string(),
            })
        }
    }

    fn remainder_partition(
        (ring, gens): &(Ring, Vec<Polynomial>),
        lambda: &Partition,
    ) -> Result<Partition, PartitionError> {
        let f = Polynomial::monomial(ring, partition_to_monomial(lambda));
        let r = divide(&f, gens)
            .expect("binomials are nonzero and share the ring")
            .remainder;
        match r.terms() {
            [t] if t.coeff.is_one() => Ok(monomial_to_partition(&t.monomial)),
            _ => Err(PartitionError::NotMonomial(r.to_string())),
        }
    }

    /// `phi(lambda)`: the remainder of `x^lambda` under the homogeneous
    /// anti-reverse lexicographic order.
    pub fn phi(&self, lambda: &Partition) -> Result<Partition, PartitionError> {
        self.check(lambda, self.spec.x())?;
        Self::remainder_partition(&self.forward, lambda)
    }

    /// `psi(rho)`: the remainder of `x^rho` under the homogeneous
    /// lexicographic order.
    pub fn psi(&self, rho: &Partition) -> Result<Partition, PartitionError> {
        self.check(rho, self.spec.y())?;
        Self::remainder_partition(&self.backward, rho)
    }
}

/// Merges `p` equal parts `i` into one part `p i`, smallest parts first,
/// until every multiplicity is below `p`.
pub fn phi_rewrite(lambda: &Partition, p: u32) -> Partition {
    let mut m = lambda.multiplicities();
    while let Some((&i, _)) = m.iter().find(|(_, &c)| c >= p) {
        *m.get_mut(&i).expect("present") -= p;
        if m[&i] == 0 {
            m.remove(&i);
        }
        *m.entry(p * i).or_insert(0) += 1;
    }
    Partition::from_multiplicities(&m)
}

/// Splits each part `p i` with `i in W` into `p` parts `i`, smallest parts
/// first, until no part lies in `pW`.
pub fn psi_rewrite(rho: &Partition, spec: &PowerSpec) -> Partition {
    let mut m = rho.multiplicities();
    while let Some(k) = m.keys().copied().find(|&k| spec.in_p_w(k)) {
        *m.get_mut(&k).expect("present") -= 1;
        if m[&k] == 0 {
            m.remove(&k);
        }
        *m.entry(k / spec.p).or_insert(0) += spec.p;
    }
    Partition::from_multiplicities(&m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: u32,
    pub x_count: usize,
    pub y_count: usize,
    /// `(lambda, phi(lambda))` for every `lambda` in `X(n)`.
    pub rows: Vec<(Partition, Partition)>,
    pub phi_into_y: bool,
    pub injective: bool,
    pub surjective: bool,
    pub psi_after_phi_is_identity: bool,
    pub phi_after_psi_is_identity: bool,
    pub routes_agree: bool,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `phi` and `psi` are mutually inverse bijections between
/// `X(n)` and `Y(n)`, computing both by division and by rewriting.
pub fn verify_bijection(spec: &PowerSpec, n: u32) -> BijectionReport {
    let xs = enumerate(&spec.x(), n);
    let ys = enumerate(&spec.y(), n);
    let bij = Bijection::new(spec, n);
    let y_family = spec.y().constraints();
    let x_family = spec.x().constraints();
    let mut failures = Vec::new();

    let forward: Vec<Result<(Partition, Partition, Partition), String>> = xs
        .par_iter()
        .map(|l| {
            let by_division = bij.phi(l).map_err(|e| format!("phi{l}: {e}"))?;
            Ok((l.clone(), by_division, phi_rewrite(l, spec.p)))
        })
        .collect();
    let backward: Vec<Result<(Partition, Partition, Partition), String>> = ys
        .par_iter()
        .map(|r| {
            let by_division = bij.psi(r).map_err(|e| format!("psi{r}: {e}"))?;
            Ok((r.clone(), by_division, psi_rewrite(r, spec)))
        })
        .collect();

    let mut rows = Vec::new();
    let mut routes_agree = true;
    let mut phi_into_y = true;
    for item in forward {
        match item {
            Ok((l, d, o)) => {
                if d != o {
                    routes_agree = false;
                    failures.push(format!("phi{l}: division gives {d}, rewriting gives {o}"));
                }
                if !y_family.admits(&d) || d.weight() != l.weight() {
                    phi_into_y = false;
                    failures.push(format!("phi{l} = {d} is not in Y({n})"));
                }
                rows.push((l, d));
            }
            Err(e) => {
                phi_into_y = false;
                failures.push(e);
            }
        }
    }
    let mut psi_map = BTreeMap::new();
    for item in backward {
        match item {
            Ok((r, d, o)) => {
                if d != o {
                    routes_agree = false;
                    failures.push(format!("psi{r}: division gives {d}, rewriting gives {o}"));
                }
                if !x_family.admits(&d) {
                    failures.push(format!("psi{r} = {d} is not in X({n})"));
                }
                psi_map.insert(r, d);
            }
            Err(e) => failures.push(e),
        }
    }

    let mut images: Vec<&Partition> = rows.iter().map(|(_, d)| d).collect();
    images.sort();
    let before = images.len();
    images.dedup();
    let injective = images.len() == before;
    if !injective {
        failures.push("phi is not injective".to_string());
    }
    let surjective = ys.iter().all(|y| images.binary_search(&y).is_ok());
    if !surjective {
        failures.push("phi is not onto Y(n)".to_string());
    }
    let psi_after_phi_is_identity = rows.iter().all(|(l, d)| psi_map.get(d) == Some(l));
    if !psi_after_phi_is_identity {
        failures.push("psi(phi(lambda)) differs from lambda".to_string());
    }
    let phi_of: BTreeMap<&Partition, &Partition> = rows.iter().map(|(l, d)| (l, d)).collect();
    let phi_after_psi_is_identity = psi_map.iter().all(|(r, l)| phi_of.get(l) == Some(&r));
    if !phi_after_psi_is_identity {
        failures.push("phi(psi(rho)) differs from rho".to_string());
    }
    BijectionReport {
        n,
        x_count: xs.len(),
        y_count: ys.len(),
        rows,
        phi_into_y,
        injective,
        surjective,
        psi_after_phi_is_identity,
        phi_after_psi_is_identity,
        routes_agree,
        failures,
    }
}

/// Named coefficient columns that should all coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub truncation: u32,
    pub columns: Vec<(String, Vec<i64>)>,
    /// Degrees where some column disagrees with the first.
    pub mismatches: Vec<u32>,
}

impl IdentityReport {
    fn new(truncation: u32, columns: Vec<(String, Vec<i64>)>) -> Self {
        let mismatches = (0..=truncation)
            .filter(|&n| {
                let first = columns[0].1[n as usize];
                columns.iter().any(|(_, c)| c[n as usize] != first)
            })
            .collect();
        IdentityReport {
            truncation,
            columns,
            mismatches,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn counts(spec: &FamilySpec, truncation: u32) -> Vec<i64> {
    (0..=truncation)
        .into_par_iter()
        .map(|n| count(spec, n) as i64)
        .collect()
}

/// `prod_{m in W, m <= N} (1 + t^m + ... + t^{(k-1) m})`.
fn bounded_multiplicity_product(
    w: &VariableSet,
    k: u64,
    truncation: u64,
) -> Result<TruncatedSeries, SeriesError> {
    let mut s = TruncatedSeries::one(truncation);
    for m in (1..=truncation).filter(|&m| w.contains(m as u32)) {
        let factor: Vec<i64> = (0..=truncation)
            .map(|d| i64::from(d % m == 0 && d / m < k))
            .collect();
        s = s.mul(&TruncatedSeries::new(factor, truncation))?;
    }
    Ok(s)
}

/// Coefficients up to `t^N` of the three Schur products alongside the
/// enumerated counts of the `A`, `B` and `C` families.
pub fn schur_identity_check(truncation: u32) -> Result<IdentityReport, PartitionError> {
    let n = truncation as u64;
    let standard = WeightedAlphabet::standard();
    let mod6 = ambient_series(&standard, &VariableSet::pm1_mod(6), n)?;
    let distinct = bounded_multiplicity_product(&VariableSet::pm1_mod(3), 2, n)?;
    let odd_twice = bounded_multiplicity_product(&VariableSet::odd(), 3, n)?;
    Ok(IdentityReport::new(
        truncation,
        vec![
            (
                "prod_{m = +-1 mod 6} 1/(1-t^m)".to_string(),
                mod6.coeffs().to_vec(),
            ),
            (
                "prod_{m = +-1 mod 3} (1+t^m)".to_string(),
                distinct.coeffs().to_vec(),
            ),
            (
                "prod_{m odd} (1+t^m+t^2m)".to_string(),
                odd_twice.coeffs().to_vec(),
            ),
            (
                "|A(n)|".to_string(),
                counts(&FamilySpec::Preset(Preset::A), truncation),
            ),
            (
                "|B(n)|".to_string(),
                counts(&FamilySpec::Preset(Preset::B), truncation),
            ),
            (
                "|C(n)|".to_string(),
                counts(&FamilySpec::Preset(Preset::C), truncation),
            ),
        ],
    ))
}

/// `1 + sum_{m >= 1} t^{m^2} / ((1-t)...(1-t^m))` up to `t^N`.
fn rogers_ramanujan_sum(truncation: u64) -> Result<TruncatedSeries, SeriesError> {
    let mut total = TruncatedSeries::one(truncation);
    let mut m = 1u64;
    while m * m <= truncation {
        let mut term = TruncatedSeries::monomial(1, m * m, truncation);
        for j in 1..=m {
            term = term.mul_unit_inverse(&TruncatedSeries::one_minus_power(j, truncation))?;
        }
        total = total.add(&term)?;
        m += 1;
    }
    Ok(total)
}

/// Coefficients up to `t^N` of both sides of the first Rogers-Ramanujan
/// identity alongside the enumerated counts of the `P` and `Q` families.
pub fn rr_identity_check(truncation: u32) -> Result<IdentityReport, PartitionError> {
    let n = truncation as u64;
    let product = ambient_series(&WeightedAlphabet::standard(), &VariableSet::pm1_mod(5), n)?;
    let sum = rogers_ramanujan_sum(n)?;
    Ok(IdentityReport::new(
        truncation,
        vec![
            (
                "prod_{m = +-1 mod 5} 1/(1-t^m)".to_string(),
                product.coeffs().to_vec(),
            ),
            (
                "1 + sum t^(m^2)/((1-t)...(1-t^m))".to_string(),
                sum.coeffs().to_vec(),
            ),
            (
                "|P(n)|".to_string(),
                counts(&FamilySpec::Preset(Preset::P), truncation),
            ),
            (
                "|Q(n)|".to_string(),
                counts(&FamilySpec::Preset(Preset::Q), truncation),
            ),
        ],
    ))
}
