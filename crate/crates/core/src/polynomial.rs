//! Sparse polynomials with exact coefficients, kept in canonical form: terms
//! strictly decreasing under the ring's monomial order, no zero coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::alphabet::{VariableSet, WeightedAlphabet};
use crate::coefficient::{Coefficient, Field};
use crate::monomial::{Monomial, OrderKind};
use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring contexts differ: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Ring context shared by polynomials: monomial order, grading and
/// coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    order: OrderKind,
    weights: Arc<WeightedAlphabet>,
    field: Field,
}

impl Ring {
    pub fn new(order: OrderKind, weights: WeightedAlphabet, field: Field) -> Self {
        Ring {
            order,
            weights: Arc::new(weights),
            field,
        }
    }

    /// Rational coefficients, `deg x_i = i`.
    pub fn standard(order: OrderKind) -> Self {
        Self::new(order, WeightedAlphabet::standard(), Field::Rational)
    }

    pub fn with_order(&self, order: OrderKind) -> Ring {
        Ring {
            order,
            weights: Arc::clone(&self.weights),
            field: self.field,
        }
    }

    pub fn with_field(&self, field: Field) -> Ring {
        Ring {
            order: self.order,
            weights: Arc::clone(&self.weights),
            field,
        }
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn weights(&self) -> &WeightedAlphabet {
        &self.weights
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b, &self.weights)
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        m.degree(&self.weights)
    }

    pub fn same_as(&self, other: &Ring) -> bool {
        self.order == other.order
            && self.field == other.field
            && (Arc::ptr_eq(&self.weights, &other.weights) || self.weights == other.weights)
    }

    pub fn check(&self, other: &Ring) -> Result<(), PolyError> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(self.to_string(), other.to_string()))
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, PolyError> {
        Polynomial::parse(self, text)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[x1,x2,...] ({}, {})",
            self.field, self.order, self.weights
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coefficient,
    pub monomial: Monomial,
}

/// Leading term, monomial and coefficient of a nonzero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingData {
    pub lm: Monomial,
    pub lc: Coefficient,
}

impl LeadingData {
    pub fn lt(&self) -> (Coefficient, Monomial) {
        (self.lc.clone(), self.lm.clone())
    }
}

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Coefficient) -> Self {
        Self::term(ring, c, Monomial::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Self {
        Self::term(ring, ring.field().one(), m)
    }

    pub fn term(ring: &Ring, c: Coefficient, m: Monomial) -> Self {
        assert_eq!(
            c.field(),
            ring.field(),
            "coefficient outside the ring's field"
        );
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term {
                coeff: c,
                monomial: m,
            }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Coefficient, Monomial)>,
    ) -> Self {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, monomial)| {
                assert_eq!(
                    coeff.field(),
                    ring.field(),
                    "coefficient outside the ring's field"
                );
                Term { coeff, monomial }
            })
            .collect();
        raw.sort_by(|a, b| ring.compare(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = last.coeff.add(&t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(ring: &Ring, terms: impl IntoIterator<Item = (i64, Monomial)>) -> Self {
        let field = ring.field();
        Self::from_terms(ring, terms.into_iter().map(|(c, m)| (field.from_i64(c), m)))
    }

    /// The binomial `x_i^p - x_{p i}`.
    pub fn power_binomial(ring: &Ring, i: u32, p: u32) -> Self {
        Self::from_int_terms(
            ring,
            [(1, Monomial::power(i, p)), (-1, Monomial::var(p * i))],
        )
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Self, PolyError> {
        let raw = crate::parse::parse_polynomial(text)?;
        let mut terms = Vec::with_capacity(raw.len());
        for t in raw {
            let c = ring
                .field()
                .from_ratio(&t.numer, &t.denom)
                .map_err(|e| ParseError::new(t.position, e.to_string()))?;
            terms.push((c, t.monomial));
        }
        Ok(Self::from_terms(ring, terms))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.monomial)
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Result<LeadingData, PolyError> {
        let t = self.terms.first().ok_or(PolyError::ZeroPolynomial)?;
        Ok(LeadingData {
            lm: t.monomial.clone(),
            lc: t.coeff.clone(),
        })
    }

    /// Leading monomial; `None` for zero.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn lc(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Largest weighted degree among the terms; 0 for zero and constants.
    pub fn degree(&self) -> u64 {
        self.monomials()
            .map(|m| self.ring.degree(m))
            .max()
            .unwrap_or(0)
    }

    /// All terms share one weighted degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.monomials().map(|m| self.ring.degree(m));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Smallest `n` with the polynomial in `k[x_1..x_n]`.
    pub fn max_variable_index(&self) -> u32 {
        self.monomials().map(Monomial::max_index).max().unwrap_or(0)
    }

    pub fn in_subring(&self, vars: &VariableSet) -> bool {
        self.monomials().all(|m| m.in_subring(vars))
    }

    /// Same polynomial re-sorted under another order.
    pub fn with_order(&self, order: OrderKind) -> Polynomial {
        let ring = self.ring.with_order(order);
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.compare(&b.monomial, &a.monomial));
        Polynomial { ring, terms }
    }

    /// Coefficients mapped into another field (integers and rationals with
    /// invertible denominators only).
    pub fn to_field(&self, field: Field) -> Result<Polynomial, PolyError> {
        let ring = self.ring.with_field(field);
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = match &t.coeff {
                Coefficient::Rational(r) => field
                    .from_ratio(r.numer(), r.denom())
                    .map_err(|e| ParseError::new(0, e.to_string()))?,
                Coefficient::Modular { value, .. } => field.from_i64(*value as i64),
            };
            terms.push((c, t.monomial.clone()));
        }
        Ok(Polynomial::from_terms(&ring, terms))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        self.mul_term(c, &Monomial::one())
    }

    /// `c * m * self`; order is preserved because monomial orders are
    /// multiplicative.
    pub fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.lc() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv()),
            _ => self.clone(),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check(&other.ring)?;
        Ok(self.merge(other, None))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check(&other.ring)?;
        Ok(self.merge(
            other,
            Some((&self.ring.field().one().neg(), &Monomial::one())),
        ))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check(&other.ring)?;
        let mut products = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push((a.coeff.mul(&b.coeff), a.monomial.mul(&b.monomial)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, products))
    }

    /// `self - c * m * g`, the reduction step of the division algorithm.
    pub fn sub_scaled(&self, c: &Coefficient, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_as(&g.ring));
        self.merge(g, Some((&c.neg(), m)))
    }

    /// `self + c * m * other` (or `self + other` when `scaled` is `None`)
    /// by a single ordered merge.
    fn merge(&self, other: &Polynomial, scaled: Option<(&Coefficient, &Monomial)>) -> Polynomial {
        let map = |t: &Term| -> Term {
            match scaled {
                None => t.clone(),
                Some((c, m)) => Term {
                    coeff: t.coeff.mul(c),
                    monomial: t.monomial.mul(m),
                },
            }
        };
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<Term> = b.first().map(map);
        while i < a.len() {
            let Some(bt) = pending.as_ref() else { break };
            match self.ring.compare(&a[i].monomial, &bt.monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = b.get(j).map(map);
                }
                Ordering::Equal => {
                    let c = a[i].coeff.add(&bt.coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a[i].monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                    pending = b.get(j).map(map);
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        if let Some(t) = pending {
            out.push(t);
            out.extend(b[j + 1..].iter().map(map));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Drops the leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// Moves the leading term out: returns `(lt, rest)`.
    pub(crate) fn split_leading(mut self) -> Option<(Term, Polynomial)> {
        if self.terms.is_empty() {
            return None;
        }
        let lt = self.terms.remove(0);
        Some((lt, self))
    }

    pub(crate) fn push_smallest(&mut self, t: Term) {
        debug_assert!(
            self.terms.last().is_none_or(
                |last| self.ring.compare(&last.monomial, &t.monomial) == Ordering::Greater
            )
        );
        self.terms.push(t);
    }
}

/// `(lcm / lt(f)) f - (lcm / lt(g)) g` with `lcm = LCM(lm f, lm g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    f.ring.check(&g.ring)?;
    let lf = f.leading()?;
    let lg = g.leading()?;
    let lcm = lf.lm.lcm(&lg.lm);
    let mf = lcm.try_divide(&lf.lm).expect("lm(f) divides the lcm");
    let mg = lcm.try_divide(&lg.lm).expect("lm(g) divides the lcm");
    let left = f.mul_term(&lf.lc.inv(), &mf);
    Ok(left.sub_scaled(&lg.lc.inv(), &mg, g))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let magnitude = if negative {
                t.coeff.neg()
            } else {
                t.coeff.clone()
            };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", t.monomial)?;
            } else {
                write!(f, "{}*{}", magnitude, t.monomial)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on ring mismatch; use [`Polynomial::try_add`] otherwise.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn ring(order: OrderKind) -> Ring {
        Ring::standard(order)
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        r.parse(s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(OrderKind::HomAntiRevLex);
        let f = p(&r, "x1^2 - x2");
        assert_eq!(&f + &r.zero(), f);
        assert_eq!(&f + &p(&r, "x2"), p(&r, "x1^2"));
        assert_eq!(&p(&r, "x1 + x2") * &p(&r, "x1 - x2"), p(&r, "x1^2 - x2^2"));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = p(&ring(OrderKind::HomLex), "x1");
        let b = p(&ring(OrderKind::HomRevLex), "x1");
        assert!(matches!(a.try_add(&b), Err(PolyError::RingMismatch(..))));
        let gf = Ring::new(
            OrderKind::HomLex,
            WeightedAlphabet::standard(),
            Field::Prime(5),
        );
        assert!(a.try_mul(&p(&gf, "x1")).is_err());
    }

    #[test]
    fn leading_data() {
        let harl = ring(OrderKind::HomAntiRevLex);
        let hl = ring(OrderKind::HomLex);
        for (i, q) in [(1u32, 2u32), (5, 2), (1, 3), (7, 3)] {
            let f = Polynomial::power_binomial(&harl, i, q);
            assert_eq!(f.leading().unwrap().lm, Monomial::power(i, q));
            let g = Polynomial::power_binomial(&hl, i, q);
            assert_eq!(g.leading().unwrap().lm, Monomial::var(q * i));
        }
        let five = p(&harl, "5*x3").leading().unwrap();
        assert_eq!(five.lt(), (Field::Rational.from_i64(5), Monomial::var(3)));
        assert_eq!(harl.zero().leading(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn s_polynomial_examples() {
        let r = ring(OrderKind::HomAntiRevLex);
        let f = p(&r, "x1^2 - x2");
        let g = p(&r, "x2^2 - x4");
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        let s = s_polynomial(&f, &g).unwrap();
        assert_eq!(s, p(&r, "-x2^3 + x1^2*x4"));
        // coprime leading monomials: S(f, g) = -(g - lt g) f + (f - lt f) g
        let two_term = &(&g.tail().neg() * &f) + &(&f.tail() * &g);
        assert_eq!(s, two_term);
        assert!(s_polynomial(&f, &r.zero()).is_err());
    }

    #[test]
    fn s_polynomial_against_dense_expansion() {
        // independent route: dense exponent vectors over x1..x4
        type Dense = BTreeMap<[u32; 4], i64>;
        let mul = |a: &Dense, b: &Dense| {
            let mut out = Dense::new();
            for (ea, ca) in a {
                for (eb, cb) in b {
                    let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                    *out.entry(e).or_insert(0) += ca * cb;
                }
            }
            out.retain(|_, c| *c != 0);
            out
        };
        let f: Dense = [([2, 0, 0, 0], 1), ([0, 1, 0, 0], -1)]
            .into_iter()
            .collect();
        let g: Dense = [([0, 2, 0, 0], 1), ([0, 0, 0, 1], -1)]
            .into_iter()
            .collect();
        // lcm x1^2 x2^2: x2^2 * f - x1^2 * g
        let left = mul(&[([0, 2, 0, 0], 1)].into_iter().collect(), &f);
        let right = mul(&[([2, 0, 0, 0], -1)].into_iter().collect(), &g);
        let mut expected = left;
        for (e, c) in right {
            *expected.entry(e).or_insert(0) += c;
        }
        expected.retain(|_, c| *c != 0);
        let r = ring(OrderKind::HomAntiRevLex);
        let s = s_polynomial(&p(&r, "x1^2 - x2"), &p(&r, "x2^2 - x4")).unwrap();
        let got: Dense = s
            .terms()
            .iter()
            .map(|t| {
                let mut e = [0u32; 4];
                for &(i, x) in t.monomial.pairs() {
                    e[i as usize - 1] = x;
                }
                (e, t.coeff.to_string().parse::<i64>().unwrap())
            })
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn max_variable_index_examples() {
        let r = ring(OrderKind::HomLex);
        assert_eq!(p(&r, "x1^2*x2 - x4").max_variable_index(), 4);
        assert_eq!(p(&r, "7").max_variable_index(), 0);
        assert_eq!(p(&r, "x3").max_variable_index(), 3);
    }

    #[test]
    fn display_and_parse() {
        let r = ring(OrderKind::HomLex);
        let f = p(&r, "3/2*x1^2*x3 - x7");
        assert_eq!(f.to_string(), "-x7 + 3/2*x1^2*x3");
        assert_eq!(p(&r, "x1 - 1").to_string(), "x1 - 1");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(p(&r, "0"), r.zero());
        assert_eq!(p(&r, "2*x1*3"), p(&r, "6*x1"));
    }

    #[test]
    fn homogeneity_and_degree() {
        let r = ring(OrderKind::HomLex);
        assert!(p(&r, "x1^2 - x2").is_homogeneous());
        assert!(!p(&r, "x1 - x2").is_homogeneous());
        assert_eq!(p(&r, "x1 + x5").degree(), 5);
    }

    pub(crate) fn arb_poly(
        r: Ring,
        max_var: u32,
        max_exp: u32,
    ) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (
                -3i64..=3,
                proptest::collection::vec((1..=max_var, 0..=max_exp), 0..3),
            ),
            0..4,
        )
        .prop_map(move |ts| {
            Polynomial::from_int_terms(
                &r,
                ts.into_iter().map(|(c, m)| (c, Monomial::from_pairs(m))),
            )
        })
    }

    /// Homogeneous of degree `d` in x1..x4, built from weighted-degree slices.
    fn arb_homogeneous(r: Ring) -> impl Strategy<Value = Polynomial> {
        (
            1u64..7,
            proptest::collection::vec((-3i64..=3, 0usize..64), 1..4),
        )
            .prop_map(move |(d, ts)| {
                let slice: Vec<Monomial> =
                    crate::monomial::monomials_of_degree_in(d, r.weights(), &VariableSet::up_to(5));
                Polynomial::from_int_terms(
                    &r,
                    ts.into_iter()
                        .map(|(c, k)| (c, slice[k % slice.len()].clone())),
                )
            })
    }

    fn arb_order() -> impl Strategy<Value = OrderKind> {
        proptest::sample::select(OrderKind::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn ring_axioms(
            o in arb_order(),
            a in arb_poly(Ring::standard(OrderKind::HomLex), 4, 3),
            b in arb_poly(Ring::standard(OrderKind::HomLex), 4, 3),
            c in arb_poly(Ring::standard(OrderKind::HomLex), 4, 3),
        ) {
            let (a, b, c) = (a.with_order(o), b.with_order(o), c.with_order(o));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn leading_monomial_is_multiplicative(
            o in arb_order(),
            a in arb_poly(Ring::standard(OrderKind::HomLex), 4, 3),
            b in arb_poly(Ring::standard(OrderKind::HomLex), 4, 3),
        ) {
            let (a, b) = (a.with_order(o), b.with_order(o));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.lm().unwrap(), &a.lm().unwrap().mul(b.lm().unwrap()));
        }

        #[test]
        fn s_polynomial_cancels_lcm(
            o in arb_order(),
            a in arb_poly(Ring::standard(OrderKind::HomLex), 4, 3),
            b in arb_poly(Ring::standard(OrderKind::HomLex), 4, 3),
        ) {
            let (a, b) = (a.with_order(o), b.with_order(o));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let lcm = a.lm().unwrap().lcm(b.lm().unwrap());
            let s = s_polynomial(&a, &b).unwrap();
            if let Some(lm) = s.lm() {
                prop_assert_eq!(a.ring().compare(lm, &lcm), Ordering::Less);
            }
        }

        #[test]
        fn pure_lex_leading_monomial_bounds_variables(
            a in arb_poly(Ring::standard(OrderKind::PureLex), 6, 3),
        ) {
            prop_assume!(!a.is_zero());
            let n = a.lm().unwrap().max_index();
            prop_assert!(a.max_variable_index() <= n);
        }

        #[test]
        fn hom_lex_leading_monomial_bounds_variables_for_homogeneous(
            a in arb_homogeneous(Ring::standard(OrderKind::HomLex)),
        ) {
            prop_assume!(!a.is_zero());
            prop_assert!(a.max_variable_index() <= a.lm().unwrap().max_index());
        }

        #[test]
        fn hom_revlex_leading_monomial_detects_first_variables(
            a in arb_homogeneous(Ring::standard(OrderKind::HomRevLex)),
            n in 1u32..5,
        ) {
            prop_assume!(!a.is_zero());
            let in_ideal = |m: &Monomial| m.pairs().first().is_some_and(|&(i, _)| i <= n);
            if in_ideal(a.lm().unwrap()) {
                prop_assert!(a.monomials().all(in_ideal));
            }
        }

        #[test]
        fn text_round_trip(a in arb_poly(Ring::standard(OrderKind::HomRevLex), 5, 3)) {
            prop_assert_eq!(a.ring().parse(&a.to_string()).unwrap(), a);
        }
    }
}
