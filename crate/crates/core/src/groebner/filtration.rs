//! Ideals of the infinite-variable ring given by a (possibly infinite)
//! generator rule, and their study through the filtration by the subrings
//! `S<n> = k[x_1..x_n]`.

use std::collections::BTreeMap;

use crate::alphabet::VariableSet;
use crate::division::count_outside;
use crate::monomial::{Monomial, OrderKind};
use crate::polynomial::{Polynomial, Ring};

use super::{
    buchberger_truncated, is_reduced_set, reduce_basis, verify_buchberger, Certificate,
    GroebnerBasis, GroebnerError, TruncationWindow,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorRule {
    /// A finite list of generators.
    Explicit(Vec<Polynomial>),
    /// `i -> x_i^p - x_{p i}` for every `i` in the variable set.
    PowerBinomial { p: u32 },
    /// `i -> x_i - x_{i+1}` for every `i` with `i, i+1` in the variable set.
    Chain,
}

/// An ideal `I` of `k[x_i | i in W]` described by a generator rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: Ring,
    rule: GeneratorRule,
    variables: VariableSet,
}

impl IdealPresentation {
    pub fn new(
        ring: &Ring,
        rule: GeneratorRule,
        variables: VariableSet,
    ) -> Result<Self, GroebnerError> {
        match &rule {
            GeneratorRule::Explicit(gens) => {
                for g in gens {
                    ring.check(g.ring())?;
                    if !g.in_subring(&variables) {
                        return Err(GroebnerError::Family(format!(
                            "generator `{g}` uses variables outside {variables}"
                        )));
                    }
                }
            }
            GeneratorRule::PowerBinomial { p } if *p < 2 => {
                return Err(GroebnerError::Family(format!(
                    "p must be at least 2, got {p}"
                )));
            }
            _ => {}
        }
        Ok(IdealPresentation {
            ring: ring.clone(),
            rule,
            variables,
        })
    }

    pub fn explicit(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        Self::new(ring, GeneratorRule::Explicit(gens), VariableSet::all())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rule(&self) -> &GeneratorRule {
        &self.rule
    }

    pub fn variables(&self) -> &VariableSet {
        &self.variables
    }

    /// Same ideal, different monomial order.
    pub fn with_order(&self, order: OrderKind) -> Self {
        let rule = match &self.rule {
            GeneratorRule::Explicit(gens) => {
                GeneratorRule::Explicit(gens.iter().map(|g| g.with_order(order)).collect())
            }
            other => other.clone(),
        };
        IdealPresentation {
            ring: self.ring.with_order(order),
            rule,
            variables: self.variables.clone(),
        }
    }

    /// The generators lying in the window: every variable at most `n` and
    /// weighted degree at most `D`.
    pub fn instantiate(&self, window: TruncationWindow) -> Result<Vec<Polynomial>, GroebnerError> {
        let n = window.var_bound();
        let fits = |g: &Polynomial| window.contains(g);
        let out = match &self.rule {
            GeneratorRule::Explicit(gens) => gens.iter().filter(|g| fits(g)).cloned().collect(),
            GeneratorRule::PowerBinomial { p } => {
                let mut out = Vec::new();
                for i in (1..=n / p).filter(|&i| self.variables.contains(i)) {
                    if !self.variables.contains(p * i) {
                        return Err(GroebnerError::Family(format!(
                            "{p}*{i} is not in {}; the rule needs pW inside W",
                            self.variables
                        )));
                    }
                    let g = Polynomial::power_binomial(&self.ring, i, *p);
                    if fits(&g) {
                        out.push(g);
                    }
                }
                out
            }
            GeneratorRule::Chain => (1..n)
                .filter(|&i| self.variables.contains(i) && self.variables.contains(i + 1))
                .map(|i| {
                    Polynomial::from_int_terms(
                        &self.ring,
                        [(1, Monomial::var(i)), (-1, Monomial::var(i + 1))],
                    )
                })
                .filter(|g| fits(g))
                .collect(),
        };
        Ok(out)
    }

    /// Largest variable index a homogeneous generator of degree `<= D`
    /// can involve.
    fn variable_horizon(&self, degree_bound: u64) -> u32 {
        let from_weights = self
            .variables
            .members_with_weight_at_most(self.ring.weights(), degree_bound)
            .last()
            .copied()
            .unwrap_or(1);
        match &self.rule {
            GeneratorRule::Explicit(gens) => gens
                .iter()
                .filter(|g| g.degree() <= degree_bound)
                .map(Polynomial::max_variable_index)
                .max()
                .unwrap_or(1),
            _ => from_weights,
        }
    }
}

/// Computes reduced bases of `I ∩ S<n>` for a fixed degree bound.
///
/// For homogeneous generators the degree `<= D` part of `I` is generated
/// inside `S<m>` with `m` the variable horizon, and a pure lexicographic
/// basis there restricts to a basis of every `I ∩ S<n>`. Otherwise only the
/// generators lying in `S<n>` are used, which may miss elements of the
/// intersection.
struct Restrictor<'a> {
    ideal: &'a IdealPresentation,
    degree_bound: u64,
    elimination: Option<Vec<Polynomial>>,
}

impl<'a> Restrictor<'a> {
    fn new(
        ideal: &'a IdealPresentation,
        max_n: u32,
        degree_bound: u64,
    ) -> Result<Self, GroebnerError> {
        let horizon = ideal.variable_horizon(degree_bound).max(max_n);
        let gens = ideal.instantiate(TruncationWindow::new(horizon, degree_bound)?)?;
        let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
        let elimination = if homogeneous {
            let plex = ideal.ring.with_order(OrderKind::PureLex);
            let gens: Vec<Polynomial> = gens
                .iter()
                .map(|g| g.with_order(OrderKind::PureLex))
                .collect();
            let gb =
                buchberger_truncated(&plex, &gens, TruncationWindow::new(horizon, degree_bound)?)?;
            Some(gb.into_elements())
        } else {
            None
        };
        Ok(Restrictor {
            ideal,
            degree_bound,
            elimination,
        })
    }

    fn exact(&self) -> bool {
        self.elimination.is_some()
    }

    fn basis(&self, n: u32) -> Result<GroebnerBasis, GroebnerError> {
        let window = TruncationWindow::new(n, self.degree_bound)?;
        let order = self.ideal.ring.order();
        let gens: Vec<Polynomial> = match &self.elimination {
            Some(plex) => plex
                .iter()
                .filter(|g| g.max_variable_index() <= n)
                .map(|g| g.with_order(order))
                .collect(),
            None => self.ideal.instantiate(window)?,
        };
        Ok(reduce_basis(&buchberger_truncated(
            &self.ideal.ring,
            &gens,
            window,
        )?))
    }
}

/// Outcome of comparing `in(G) ∩ S<n>` with `in(I ∩ S<n>)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NscCheck {
    pub var_bound: u32,
    /// Leading monomials of `I ∩ S<n>` not divisible by any leading
    /// monomial of `G` lying in `S<n>`.
    pub uncovered: Vec<Monomial>,
    /// Leading monomials of `G` in `S<n>` outside `in(I ∩ S<n>)`.
    pub surplus: Vec<Monomial>,
    /// Per-degree standard monomial counts in `S<n>`: outside
    /// `in(G) ∩ S<n>`, and outside `in(I ∩ S<n>)`. Empty when the input is
    /// not homogeneous.
    pub counts_basis: Vec<u64>,
    pub counts_restricted: Vec<u64>,
}

impl NscCheck {
    /// `in(I ∩ S<n>)` is contained in the ideal generated by
    /// `in(G) ∩ S<n>`.
    pub fn contained(&self) -> bool {
        self.uncovered.is_empty()
            && self
                .counts_basis
                .iter()
                .zip(&self.counts_restricted)
                .all(|(a, b)| a <= b)
    }

    pub fn equal(&self) -> bool {
        self.contained() && self.surplus.is_empty() && self.counts_basis == self.counts_restricted
    }
}

/// Compares the leading monomials of `basis` lying in `S<n>` against the
/// initial ideal of `I ∩ S<n>`, given a basis `restricted` of the latter.
pub fn nsc_containment(basis: &[Polynomial], restricted: &GroebnerBasis, n: u32) -> NscCheck {
    let ring = restricted.ring();
    let d = restricted.window().degree_bound();
    let in_g: Vec<Monomial> = basis
        .iter()
        .filter_map(|g| g.lm().cloned())
        .filter(|m| m.max_index() <= n && ring.degree(m) <= d)
        .collect();
    let in_i = restricted.leading_monomials();
    let covered_by = |m: &Monomial, gens: &[Monomial]| gens.iter().any(|g| g.divides(m));
    let uncovered = in_i
        .iter()
        .filter(|m| !covered_by(m, &in_g))
        .cloned()
        .collect();
    let surplus = in_g
        .iter()
        .filter(|m| !covered_by(m, &in_i))
        .cloned()
        .collect();
    let homogeneous = ring.order().is_homogeneous()
        && basis
            .iter()
            .chain(restricted.elements())
            .all(Polynomial::is_homogeneous);
    let (counts_basis, counts_restricted) = if homogeneous {
        let vars = VariableSet::up_to(n);
        (
            count_outside(ring, &in_g, &vars, d),
            count_outside(ring, &in_i, &vars, d),
        )
    } else {
        (Vec::new(), Vec::new())
    };
    NscCheck {
        var_bound: n,
        uncovered,
        surplus,
        counts_basis,
        counts_restricted,
    }
}

/// Leading monomials of elements of `G` lying in `S<n>` that are not
/// multiples of a leading monomial of `G ∩ S<n>`: the gap between
/// `in(G ∩ S<n>)` and `in(G) ∩ S<n>`.
pub fn initial_restriction_gap(basis: &[Polynomial], n: u32) -> Vec<Monomial> {
    let inside: Vec<&Monomial> = basis
        .iter()
        .filter(|g| g.max_variable_index() <= n)
        .filter_map(Polynomial::lm)
        .collect();
    basis
        .iter()
        .filter_map(Polynomial::lm)
        .filter(|m| m.max_index() <= n && !inside.iter().any(|g| g.divides(m)))
        .cloned()
        .collect()
}

/// Union of reduced bases of `I ∩ S<n>` over increasing windows. The
/// certificate lists the windows on which `in(I ∩ S<n>)` was verified to lie
/// inside the ideal generated by the union's leading monomials in `S<n>`.
pub fn assemble_filtration(
    ideal: &IdealPresentation,
    windows: &[TruncationWindow],
) -> Result<GroebnerBasis, GroebnerError> {
    let Some(last) = windows.last() else {
        return Err(GroebnerError::NonIncreasingWindows);
    };
    if windows
        .windows(2)
        .any(|w| w[0].var_bound() >= w[1].var_bound())
    {
        return Err(GroebnerError::NonIncreasingWindows);
    }
    let mut union: Vec<Polynomial> = Vec::new();
    let mut per_window = Vec::new();
    for w in windows {
        let restrictor = Restrictor::new(ideal, w.var_bound(), w.degree_bound())?;
        let gb = restrictor.basis(w.var_bound())?;
        for g in gb.elements() {
            if !union.contains(g) {
                union.push(g.clone());
            }
        }
        per_window.push((w.var_bound(), restrictor.exact(), gb));
    }
    crate::division::canonical_divisor_order(&mut union);
    let verified_windows = per_window
        .iter()
        .filter(|(n, exact, gb)| *exact && nsc_containment(&union, gb, *n).contained())
        .map(|(n, _, _)| *n)
        .collect();
    let reduced = is_reduced_set(&union);
    Ok(GroebnerBasis {
        ring: ideal.ring.clone(),
        elements: union,
        window: *last,
        certificate: Certificate::Asserted { verified_windows },
        reduced,
        discarded_pairs: 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    /// Elements present in every `G_n` of the trailing window, with the
    /// smallest `n` from which they stayed present up to `max_n`.
    pub stable: Vec<(Polynomial, u32)>,
    /// Elements of `G_max_n` that entered inside the trailing window.
    pub pending: Vec<Polynomial>,
    /// Elements that belonged to some `G_n` and were later dropped.
    pub transient: Vec<Polynomial>,
    /// Number of elements of each `G_n`, `n = 1..=max_n`.
    pub sizes: Vec<usize>,
    /// No element left the basis inside the trailing window.
    pub stabilized: bool,
    /// Whether each `G_n` is a basis of the full intersection `I ∩ S<n>`
    /// (homogeneous generators) or only of the generators inside `S<n>`.
    pub exact: bool,
    pub max_n: u32,
    pub window_len: u32,
    pub degree_bound: u64,
    pub caveat: String,
}

impl StabilityReport {
    pub fn stable_elements(&self) -> Vec<Polynomial> {
        self.stable.iter().map(|(g, _)| g.clone()).collect()
    }
}

/// Finite-scale tail intersection: reduced bases `G_n` of `I ∩ S<n>` for
/// `n = 1..=max_n`, keeping what persists through the last `window_len`
/// values of `n`.
pub fn stabilized_reduced_basis(
    ideal: &IdealPresentation,
    max_n: u32,
    window_len: u32,
    degree_bound: u64,
) -> Result<StabilityReport, GroebnerError> {
    if window_len < 2 {
        return Err(GroebnerError::ShortWindow);
    }
    TruncationWindow::new(max_n, degree_bound)?;
    let restrictor = Restrictor::new(ideal, max_n, degree_bound)?;
    let bases: Vec<Vec<Polynomial>> = (1..=max_n)
        .map(|n| restrictor.basis(n).map(GroebnerBasis::into_elements))
        .collect::<Result<_, _>>()?;

    // for each element of the last basis, the start of its current run
    let mut run_start: BTreeMap<String, u32> = BTreeMap::new();
    let mut transient: Vec<Polynomial> = Vec::new();
    let tail_start = max_n.saturating_sub(window_len - 1).max(1);
    let mut dropped_in_tail = false;
    for (k, basis) in bases.iter().enumerate() {
        let n = k as u32 + 1;
        if k > 0 {
            for g in &bases[k - 1] {
                if !basis.contains(g) {
                    if !transient.contains(g) {
                        transient.push(g.clone());
                    }
                    run_start.remove(&g.to_string());
                    if n > tail_start {
                        dropped_in_tail = true;
                    }
                }
            }
        }
        for g in basis {
            run_start.entry(g.to_string()).or_insert(n);
        }
    }
    let last = bases.last().cloned().unwrap_or_default();
    let mut stable = Vec::new();
    let mut pending = Vec::new();
    for g in last {
        let start = run_start[&g.to_string()];
        if start <= tail_start {
            stable.push((g, start));
        } else {
            pending.push(g);
        }
    }
    transient.retain(|g| !stable.iter().any(|(s, _)| s == g) && !pending.contains(g));
    let exact = restrictor.exact();
    let caveat = format!(
        "persistence over n = {tail_start}..{max_n} stands in for membership in every G_n with n large; \
         elements entering later are not detected{}",
        if exact {
            String::new()
        } else {
            "; generators are inhomogeneous, so G_n spans only the generators inside S<n>".to_string()
        }
    );
    Ok(StabilityReport {
        stable,
        pending,
        transient,
        sizes: bases.iter().map(Vec::len).collect(),
        stabilized: !dropped_in_tail,
        exact,
        max_n,
        window_len,
        degree_bound,
        caveat,
    })
}

/// Checks that the elements of a pure lexicographic basis lying in `S<n>`
/// form a basis there: their S-pairs reduce to zero within the degree bound,
/// and no element outside `S<n>` has its leading monomial inside.
pub fn purelex_restriction_check(basis: &GroebnerBasis, n: u32) -> Result<bool, GroebnerError> {
    if basis.ring().order() != OrderKind::PureLex {
        return Err(GroebnerError::WrongOrder("plex"));
    }
    let restricted: Vec<Polynomial> = basis
        .elements()
        .iter()
        .filter(|g| g.max_variable_index() <= n)
        .cloned()
        .collect();
    let lm_escapes = basis
        .elements()
        .iter()
        .any(|g| g.max_variable_index() > n && g.lm().is_some_and(|m| m.max_index() <= n));
    let report = verify_buchberger(&restricted, basis.window().degree_bound())?;
    Ok(report.passed() && !lm_escapes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::WeightedAlphabet;
    use crate::coefficient::Field;
    use crate::division::is_member;

    fn family(order: OrderKind, vars: VariableSet, p: u32) -> IdealPresentation {
        IdealPresentation::new(
            &Ring::standard(order),
            GeneratorRule::PowerBinomial { p },
            vars,
        )
        .unwrap()
    }

    fn binomials(r: &Ring, pairs: &[(u32, u32)]) -> Vec<Polynomial> {
        let mut v: Vec<Polynomial> = pairs
            .iter()
            .map(|&(i, p)| Polynomial::power_binomial(r, i, p))
            .collect();
        crate::division::canonical_divisor_order(&mut v);
        v
    }

    #[test]
    fn instantiation_respects_window() {
        let ideal = family(OrderKind::HomAntiRevLex, VariableSet::pm1_mod(3), 2);
        let gens = ideal
            .instantiate(TruncationWindow::new(12, 30).unwrap())
            .unwrap();
        let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["x1^2 - x2", "x2^2 - x4", "x4^2 - x8", "x5^2 - x10"]);
        let low = ideal
            .instantiate(TruncationWindow::new(12, 4).unwrap())
            .unwrap();
        assert_eq!(low.len(), 2);
        let bad = family(OrderKind::HomLex, VariableSet::odd(), 2);
        assert!(matches!(
            bad.instantiate(TruncationWindow::new(4, 8).unwrap()),
            Err(GroebnerError::Family(_))
        ));
    }

    #[test]
    fn filtration_of_the_binomial_family() {
        let ideal = family(OrderKind::HomAntiRevLex, VariableSet::pm1_mod(3), 2);
        let windows: Vec<TruncationWindow> = [4, 8, 12]
            .iter()
            .map(|&n| TruncationWindow::new(n, 24).unwrap())
            .collect();
        let gb = assemble_filtration(&ideal, &windows).unwrap();
        assert_eq!(
            gb.elements(),
            &binomials(ideal.ring(), &[(1, 2), (2, 2), (4, 2), (5, 2)])[..]
        );
        assert_eq!(
            gb.certificate(),
            &Certificate::Asserted {
                verified_windows: vec![4, 8, 12]
            }
        );
        assert!(gb.is_reduced());
    }

    #[test]
    fn filtration_edge_cases() {
        let r = Ring::standard(OrderKind::HomLex);
        let empty = IdealPresentation::explicit(&r, vec![]).unwrap();
        let w = |n| TruncationWindow::new(n, 10).unwrap();
        assert!(assemble_filtration(&empty, &[w(3), w(5)])
            .unwrap()
            .is_empty());
        assert_eq!(
            assemble_filtration(&empty, &[w(5), w(5)]),
            Err(GroebnerError::NonIncreasingWindows)
        );
        let f = r.parse("x1*x2 - x3").unwrap();
        let principal = IdealPresentation::explicit(&r, vec![f.clone()]).unwrap();
        let single = assemble_filtration(&principal, &[w(4)]).unwrap();
        let multi = assemble_filtration(&principal, &[w(3), w(4), w(6)]).unwrap();
        assert_eq!(single.elements(), multi.elements());
        assert_eq!(multi.elements(), &[f.monic()][..]);
        assert_eq!(multi.elements()[0].to_string(), "x3 - x1*x2");
    }

    #[test]
    fn stabilization_of_the_binomial_family() {
        let ideal = family(OrderKind::HomAntiRevLex, VariableSet::pm1_mod(3), 2);
        let report = stabilized_reduced_basis(&ideal, 12, 3, 24).unwrap();
        assert!(report.exact);
        assert!(report.stabilized);
        assert!(report.pending.is_empty());
        assert!(report.transient.is_empty());
        for (g, _) in &report.stable {
            let lm = g.lm().unwrap();
            let (i, e) = lm.pairs()[0];
            assert_eq!(g, &Polynomial::power_binomial(ideal.ring(), i, 2));
            assert_eq!(e, 2);
        }
        let entries: Vec<u32> = report.stable.iter().map(|(_, n)| *n).collect();
        assert_eq!(entries.len(), 4);
        assert_eq!(report.sizes, [0, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 4]);
    }

    #[test]
    fn principal_ideal_stabilizes_at_once() {
        let r = Ring::standard(OrderKind::HomRevLex);
        let f = r.parse("3*x1^3 - 6*x3").unwrap();
        let ideal = IdealPresentation::explicit(&r, vec![f.clone()]).unwrap();
        let report = stabilized_reduced_basis(&ideal, 6, 3, 12).unwrap();
        assert!(report.stabilized);
        assert_eq!(report.stable, vec![(f.monic(), 3)]);
    }

    #[test]
    fn chain_family_never_stabilizes() {
        // with unit weights x_i - x_{i+1} is homogeneous and its leading
        // monomial under this order is x_i, so every G_n is
        // {x_i - x_n : i < n} and nothing survives a change of n
        let r = Ring::new(
            OrderKind::HomAntiRevLex,
            WeightedAlphabet::unit_on(10),
            Field::Rational,
        );
        let ideal = IdealPresentation::new(&r, GeneratorRule::Chain, VariableSet::all()).unwrap();
        let report = stabilized_reduced_basis(&ideal, 8, 3, 2).unwrap();
        assert!(report.exact);
        assert!(!report.stabilized);
        assert!(report.stable.is_empty());
        assert_eq!(report.pending.len(), 7);
        assert!(report.pending.iter().all(|g| g.max_variable_index() == 8));
        assert!(!report.transient.is_empty());
    }

    #[test]
    fn short_window_is_rejected() {
        let ideal = family(OrderKind::HomLex, VariableSet::pm1_mod(3), 2);
        assert_eq!(
            stabilized_reduced_basis(&ideal, 6, 1, 12),
            Err(GroebnerError::ShortWindow)
        );
    }

    #[test]
    fn restriction_intersections_are_exact() {
        // x1*x3 is the sum of the last two generators: it lies in S<3>
        // while neither summand does
        let r = Ring::standard(OrderKind::HomLex);
        let ideal = IdealPresentation::explicit(
            &r,
            vec![
                r.parse("x1^2 - x2").unwrap(),
                r.parse("x2^2 - x4").unwrap(),
                r.parse("x4 - x2^2 + x1*x3").unwrap(),
            ],
        )
        .unwrap();
        let restrictor = Restrictor::new(&ideal, 4, 8).unwrap();
        let g3 = restrictor.basis(3).unwrap();
        // I contains x1*x3, which lies in S<3>
        assert!(is_member(&r.parse("x1*x3").unwrap(), &g3).unwrap());
        assert!(is_member(&r.parse("x1^2 - x2").unwrap(), &g3).unwrap());
        assert!(!is_member(&r.parse("x2").unwrap(), &g3).unwrap());
    }

    #[test]
    fn nsc_under_both_orders() {
        for order in [OrderKind::HomLex, OrderKind::HomAntiRevLex] {
            let ideal = family(order, VariableSet::pm1_mod(3), 2);
            let full =
                assemble_filtration(&ideal, &[TruncationWindow::new(20, 20).unwrap()]).unwrap();
            let restrictor = Restrictor::new(&ideal, 20, 20).unwrap();
            for n in 1..=12 {
                let check = nsc_containment(full.elements(), &restrictor.basis(n).unwrap(), n);
                assert!(check.contained(), "{order:?} n = {n}");
                if order == OrderKind::HomLex {
                    assert!(check.equal(), "n = {n}");
                }
            }
            if order == OrderKind::HomAntiRevLex {
                // x1^2 is a leading monomial in S<1> but I ∩ S<1> = 0
                let check = nsc_containment(full.elements(), &restrictor.basis(1).unwrap(), 1);
                assert!(!check.equal());
                assert_eq!(check.surplus, vec![Monomial::power(1, 2)]);
            }
        }
    }

    #[test]
    fn initial_restriction_can_be_strict() {
        let r = Ring::standard(OrderKind::HomAntiRevLex);
        let g = vec![r.parse("x1^2 - x2").unwrap()];
        assert_eq!(initial_restriction_gap(&g, 1), vec![Monomial::power(1, 2)]);
        assert!(initial_restriction_gap(&g, 2).is_empty());
        let r = Ring::standard(OrderKind::PureLex);
        let g = vec![r.parse("x2 - x1^2").unwrap()];
        assert!(initial_restriction_gap(&g, 1).is_empty());
    }

    #[test]
    fn purelex_restrictions() {
        let r = Ring::standard(OrderKind::PureLex);
        let w = TruncationWindow::new(3, 12).unwrap();
        let single = buchberger_truncated(&r, &[r.parse("x2 - x1^2").unwrap()], w).unwrap();
        assert!(purelex_restriction_check(&single, 1).unwrap());
        // nothing of low degree in x1 alone is in the ideal
        for k in 1..=6 {
            assert!(!is_member(&Polynomial::monomial(&r, Monomial::power(1, k)), &single).unwrap());
        }
        let gens = [r.parse("x1^2 - x2").unwrap(), r.parse("x3").unwrap()];
        let gb = buchberger_truncated(&r, &gens, w).unwrap();
        assert!(purelex_restriction_check(&gb, 2).unwrap());
        assert!(purelex_restriction_check(&gb, 3).unwrap());
        let hl = Ring::standard(OrderKind::HomLex);
        let other = buchberger_truncated(&hl, &[hl.parse("x1^2 - x2").unwrap()], w).unwrap();
        assert_eq!(
            purelex_restriction_check(&other, 2),
            Err(GroebnerError::WrongOrder("plex"))
        );
        // an arbitrary non-basis fails
        let bad = GroebnerBasis {
            certificate: Certificate::Asserted {
                verified_windows: vec![],
            },
            ..GroebnerBasis::uncertified(
                &r,
                vec![r.parse("x2 - x1^2").unwrap(), r.parse("x2 - x1").unwrap()],
            )
        };
        assert!(!purelex_restriction_check(&bad, 2).unwrap());
    }
}
