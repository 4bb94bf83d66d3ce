//! Sparse monomials over `x_1, x_2, ...` and the five monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{VariableSet, WeightedAlphabet};

/// A monomial `x^a` stored as strictly increasing `(index, exponent)` pairs
/// with positive exponents. The empty sequence is `1`.
///
/// The derived `Ord` is structural and only meant for use as a map key; use
/// [`OrderKind::compare`] for monomial orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(index: u32) -> Self {
        Self::power(index, 1)
    }

    pub fn power(index: u32, exponent: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        if exponent == 0 {
            return Self::one();
        }
        Monomial {
            exps: vec![(index, exponent)],
        }
    }

    /// Builds a monomial from arbitrary `(index, exponent)` pairs; repeated
    /// indices are merged and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut exps: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        assert!(
            exps.iter().all(|&(i, _)| i >= 1),
            "variable indices start at 1"
        );
        exps.sort_unstable_by_key(|&(i, _)| i);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (i, e) in exps {
            match merged.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => merged.push((i, e)),
            }
        }
        Monomial { exps: merged }
    }

    /// Product of the listed variables, with repetition: `[1, 1, 3]` is `x_1^2 x_3`.
    pub fn from_indices(indices: impl IntoIterator<Item = u32>) -> Self {
        Self::from_pairs(indices.into_iter().map(|i| (i, 1)))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(i, _)| i)
            .map_or(0, |k| self.exps[k].1)
    }

    /// Largest variable index present; 0 for the monomial 1.
    pub fn max_index(&self) -> u32 {
        self.exps.last().map_or(0, |&(i, _)| i)
    }

    pub fn total_exponent(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn degree(&self, weights: &WeightedAlphabet) -> u64 {
        self.exps
            .iter()
            .map(|&(i, e)| e as u64 * weights.weight(i))
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::max)
    }

    fn merge_with(&self, other: &Monomial, op: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push((a[i].0, op(a[i].1, 0)));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, op(0, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, op(a[i].1, b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().map(|&(k, e)| (k, op(e, 0))));
        out.extend(b[j..].iter().map(|&(k, e)| (k, op(0, e))));
        out.retain(|&(_, e)| e > 0);
        Monomial { exps: out }
    }

    /// `true` when `self` divides `other` exponentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(i, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < i {
                j += 1;
            }
            if j == other.exps.len() || other.exps[j].0 != i || other.exps[j].1 < e {
                return false;
            }
        }
        true
    }

    /// The quotient `self / divisor`, or `None` when `divisor` does not divide `self`.
    pub fn try_divide(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(i, e) in &self.exps {
            let d = if j < divisor.exps.len() && divisor.exps[j].0 == i {
                j += 1;
                divisor.exps[j - 1].1
            } else {
                0
            };
            if e > d {
                out.push((i, e - d));
            }
        }
        Some(Monomial { exps: out })
    }

    /// Disjoint supports, equivalently `lcm(a, b) = a * b`.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn in_subring(&self, vars: &VariableSet) -> bool {
        self.exps.iter().all(|&(i, _)| vars.contains(i))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, &(i, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = crate::parse::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse_monomial(s)
    }
}

/// The monomial orders, all with `x_1 < x_2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    /// Larger exponent at the last differing index wins.
    PureLex,
    /// Degree first, then larger exponent at the last differing index.
    HomLex,
    /// Degree first, then larger exponent at the first differing index.
    HomAntiLex,
    /// Degree first, then smaller exponent at the first differing index.
    HomRevLex,
    /// Degree first, then smaller exponent at the last differing index.
    HomAntiRevLex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 5] = [
        OrderKind::PureLex,
        OrderKind::HomLex,
        OrderKind::HomAntiLex,
        OrderKind::HomRevLex,
        OrderKind::HomAntiRevLex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::PureLex => "plex",
            OrderKind::HomLex => "hlex",
            OrderKind::HomAntiLex => "halex",
            OrderKind::HomRevLex => "hrevlex",
            OrderKind::HomAntiRevLex => "harevlex",
        }
    }

    pub fn is_homogeneous(self) -> bool {
        self != OrderKind::PureLex
    }

    pub fn compare(self, a: &Monomial, b: &Monomial, weights: &WeightedAlphabet) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        if self.is_homogeneous() {
            match a.degree(weights).cmp(&b.degree(weights)) {
                Ordering::Equal => {}
                unequal => return unequal,
            }
        }
        let by_exponent = |diff: Option<(u32, u32)>, larger_wins: bool| {
            let (ea, eb) = diff.expect("distinct monomials differ somewhere");
            if larger_wins {
                ea.cmp(&eb)
            } else {
                eb.cmp(&ea)
            }
        };
        match self {
            OrderKind::PureLex | OrderKind::HomLex => by_exponent(last_difference(a, b), true),
            OrderKind::HomAntiLex => by_exponent(first_difference(a, b), true),
            OrderKind::HomRevLex => by_exponent(first_difference(a, b), false),
            OrderKind::HomAntiRevLex => by_exponent(last_difference(a, b), false),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown monomial order `{0}` (expected plex, hlex, halex, hrevlex or harevlex)")]
pub struct UnknownOrder(pub String);

impl FromStr for OrderKind {
    type Err = UnknownOrder;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OrderKind::ALL
            .into_iter()
            .find(|o| o.name() == s.trim())
            .ok_or_else(|| UnknownOrder(s.to_string()))
    }
}

/// Exponents of `a` and `b` at the smallest index where they differ.
fn first_difference(a: &Monomial, b: &Monomial) -> Option<(u32, u32)> {
    let (a, b) = (&a.exps, &b.exps);
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return None,
            (Some(&(_, e)), None) => return Some((e, 0)),
            (None, Some(&(_, f))) => return Some((0, f)),
            (Some(&(ia, e)), Some(&(ib, f))) => match ia.cmp(&ib) {
                Ordering::Less => return Some((e, 0)),
                Ordering::Greater => return Some((0, f)),
                Ordering::Equal if e != f => return Some((e, f)),
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

/// Exponents of `a` and `b` at the largest index where they differ.
fn last_difference(a: &Monomial, b: &Monomial) -> Option<(u32, u32)> {
    let mut ai = a.exps.iter().rev().peekable();
    let mut bi = b.exps.iter().rev().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (None, None) => return None,
            (Some(&&(_, e)), None) => return Some((e, 0)),
            (None, Some(&&(_, f))) => return Some((0, f)),
            (Some(&&(ia, e)), Some(&&(ib, f))) => match ia.cmp(&ib) {
                Ordering::Greater => return Some((e, 0)),
                Ordering::Less => return Some((0, f)),
                Ordering::Equal if e != f => return Some((e, f)),
                Ordering::Equal => {
                    ai.next();
                    bi.next();
                }
            },
        }
    }
}

/// Every monomial of weighted degree exactly `degree`.
pub fn monomials_of_degree(degree: u64, weights: &WeightedAlphabet) -> Vec<Monomial> {
    monomials_of_degree_in(degree, weights, &VariableSet::all())
}

/// Monomials of weighted degree exactly `degree` in the variables of `vars`.
pub fn monomials_of_degree_in(
    degree: u64,
    weights: &WeightedAlphabet,
    vars: &VariableSet,
) -> Vec<Monomial> {
    let candidates: Vec<(u32, u64)> = vars
        .members_with_weight_at_most(weights, degree)
        .into_iter()
        .map(|i| (i, weights.weight(i)))
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_degree(&candidates, degree, &mut current, &mut out);
    out
}

fn fill_degree(
    candidates: &[(u32, u64)],
    remaining: u64,
    current: &mut Vec<(u32, u32)>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial::from_pairs(current.iter().copied()));
        return;
    }
    let Some((&(index, weight), rest)) = candidates.split_first() else {
        return;
    };
    let max_e = remaining / weight;
    for e in (0..=max_e).rev() {
        if e > 0 {
            current.push((index, e as u32));
        }
        fill_degree(rest, remaining - e * weight, current, out);
        if e > 0 {
            current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn chain(order: OrderKind, items: &[&str]) {
        let w = WeightedAlphabet::standard();
        for pair in items.windows(2) {
            assert_eq!(
                order.compare(&m(pair[0]), &m(pair[1]), &w),
                Ordering::Greater,
                "{} > {} under {}",
                pair[0],
                pair[1],
                order
            );
        }
    }

    #[test]
    fn degree_examples() {
        let w = WeightedAlphabet::standard();
        assert_eq!(Monomial::one().degree(&w), 0);
        assert_eq!(m("x4").degree(&w), 4);
        assert_eq!(m("x1^2*x2").degree(&w), 4);
    }

    #[test]
    fn degree_four_chains() {
        chain(
            OrderKind::HomLex,
            &["x4", "x1*x3", "x2^2", "x1^2*x2", "x1^4"],
        );
        chain(
            OrderKind::HomAntiLex,
            &["x1^4", "x1^2*x2", "x1*x3", "x2^2", "x4"],
        );
        chain(
            OrderKind::HomRevLex,
            &["x4", "x2^2", "x1*x3", "x1^2*x2", "x1^4"],
        );
        chain(
            OrderKind::HomAntiRevLex,
            &["x1^4", "x1^2*x2", "x2^2", "x1*x3", "x4"],
        );
    }

    #[test]
    fn pure_lex_prefers_later_variables() {
        let w = WeightedAlphabet::standard();
        assert_eq!(
            OrderKind::PureLex.compare(&m("x2"), &m("x1^100"), &w),
            Ordering::Greater
        );
        assert_eq!(
            OrderKind::PureLex.compare(&m("x1*x3"), &m("x2^5*x3"), &w),
            Ordering::Less
        );
    }

    #[test]
    fn binomial_leading_monomials() {
        let w = WeightedAlphabet::standard();
        for (i, p) in [(1u32, 2u32), (5, 2), (3, 3), (7, 5)] {
            let pow = Monomial::power(i, p);
            let var = Monomial::var(p * i);
            assert_eq!(
                OrderKind::HomAntiRevLex.compare(&pow, &var, &w),
                Ordering::Greater
            );
            assert_eq!(OrderKind::HomLex.compare(&pow, &var, &w), Ordering::Less);
        }
    }

    #[test]
    fn multiply_divide_lcm() {
        assert_eq!(m("x1*x3").mul(&m("x1")), m("x1^2*x3"));
        assert_eq!(m("x2*x5").mul(&Monomial::one()), m("x2*x5"));
        assert_eq!(m("x2").mul(&m("x2")), m("x2^2"));
        assert_eq!(m("x1^2*x2").try_divide(&m("x1")), Some(m("x1*x2")));
        assert_eq!(m("x1").try_divide(&m("x2")), None);
        assert_eq!(m("x3^2").try_divide(&m("x3^2")), Some(Monomial::one()));
        assert_eq!(m("x1^2").lcm(&m("x1*x2")), m("x1^2*x2"));
        assert!(Monomial::power(1, 3).is_coprime(&Monomial::power(3, 3)));
        assert!(!m("x1*x2").is_coprime(&m("x2*x3")));
    }

    #[test]
    fn degree_slices() {
        let w = WeightedAlphabet::standard();
        assert_eq!(monomials_of_degree(0, &w), vec![Monomial::one()]);
        let four: std::collections::BTreeSet<Monomial> =
            monomials_of_degree(4, &w).into_iter().collect();
        let expected = ["x4", "x1*x3", "x2^2", "x1^2*x2", "x1^4"]
            .iter()
            .map(|s| m(s))
            .collect();
        assert_eq!(four, expected);
        assert_eq!(monomials_of_degree(10, &w).len(), 42);
    }

    #[test]
    fn order_names_round_trip() {
        for o in OrderKind::ALL {
            assert_eq!(o.name().parse::<OrderKind>().unwrap(), o);
        }
        assert!("grevlex".parse::<OrderKind>().is_err());
    }

    pub(crate) fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec((1u32..7, 0u32..4), 0..5).prop_map(Monomial::from_pairs)
    }

    fn arb_order() -> impl Strategy<Value = OrderKind> {
        proptest::sample::select(OrderKind::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn total_antisymmetric_transitive(
            a in arb_monomial(), b in arb_monomial(), c in arb_monomial(), o in arb_order()
        ) {
            let w = WeightedAlphabet::standard();
            let ab = o.compare(&a, &b, &w);
            prop_assert_eq!(ab, o.compare(&b, &a, &w).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab != Ordering::Greater && o.compare(&b, &c, &w) != Ordering::Greater {
                prop_assert_ne!(o.compare(&a, &c, &w), Ordering::Greater);
            }
        }

        #[test]
        fn multiplicative(a in arb_monomial(), b in arb_monomial(), c in arb_monomial(), o in arb_order()) {
            let w = WeightedAlphabet::standard();
            prop_assert_eq!(o.compare(&a, &b, &w), o.compare(&c.mul(&a), &c.mul(&b), &w));
        }

        #[test]
        fn homogeneous_orders_respect_degree(a in arb_monomial(), b in arb_monomial(), o in arb_order()) {
            let w = WeightedAlphabet::standard();
            if o.is_homogeneous() && a.degree(&w) > b.degree(&w) {
                prop_assert_eq!(o.compare(&a, &b, &w), Ordering::Greater);
            }
        }

        #[test]
        fn lcm_and_coprime(a in arb_monomial(), b in arb_monomial()) {
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert_eq!(a.is_coprime(&b), l == a.mul(&b));
            let q = a.mul(&b).try_divide(&b).unwrap();
            prop_assert_eq!(q, a);
        }

        #[test]
        fn text_round_trip(a in arb_monomial()) {
            prop_assert_eq!(a.to_string().parse::<Monomial>().unwrap(), a);
        }
    }
}
