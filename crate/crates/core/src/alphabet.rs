//! Degree assignments on the variables `x_1, x_2, ...` and decidable
//! variable subsets.
//!
//! The grading is only usable when every degree slice is finite, which is a
//! statement about infinitely many variables. It is enforced structurally:
//! a [`WeightedAlphabet`] is a finite table of explicit weights plus an affine
//! tail rule `d_i = slope * i + offset` with `slope >= 1`, so only finitely
//! many variables ever have weight below any bound.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("variable indices start at 1")]
    ZeroIndex,
    #[error("weight of x{0} must be at least 1")]
    NonPositiveWeight(u32),
    #[error("tail rule d_i = {slope}*i + {offset} must have slope >= 1 and d_1 >= 1")]
    BadTail { slope: u32, offset: i64 },
    #[error("unknown variable set `{0}`")]
    UnknownVariableSet(String),
    #[error("modulus must be at least 1")]
    ZeroModulus,
}

/// Weight map `i -> d_i` on the variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedAlphabet {
    overrides: BTreeMap<u32, u32>,
    slope: u32,
    offset: i64,
}

impl Default for WeightedAlphabet {
    fn default() -> Self {
        Self::standard()
    }
}

impl WeightedAlphabet {
    /// `deg x_i = i`.
    pub fn standard() -> Self {
        WeightedAlphabet {
            overrides: BTreeMap::new(),
            slope: 1,
            offset: 0,
        }
    }

    pub fn affine(slope: u32, offset: i64) -> Result<Self, AlphabetError> {
        Self::with_overrides(BTreeMap::new(), slope, offset)
    }

    /// Explicit weights on a finite support, with the affine tail rule used
    /// for every index not listed.
    pub fn with_overrides(
        overrides: BTreeMap<u32, u32>,
        slope: u32,
        offset: i64,
    ) -> Result<Self, AlphabetError> {
        if slope == 0 || slope as i64 + offset < 1 {
            return Err(AlphabetError::BadTail { slope, offset });
        }
        for (&i, &d) in &overrides {
            if i == 0 {
                return Err(AlphabetError::ZeroIndex);
            }
            if d == 0 {
                return Err(AlphabetError::NonPositiveWeight(i));
            }
        }
        Ok(WeightedAlphabet {
            overrides,
            slope,
            offset,
        })
    }

    /// Standard grading `deg x_i = 1` on `x_1..x_n`, `deg x_i = i` beyond.
    pub fn unit_on(n: u32) -> Self {
        let overrides = (1..=n).map(|i| (i, 1)).collect();
        Self::with_overrides(overrides, 1, 0).expect("unit weights are valid")
    }

    pub fn is_standard(&self) -> bool {
        self.overrides.is_empty() && self.slope == 1 && self.offset == 0
    }

    pub fn weight(&self, index: u32) -> u64 {
        debug_assert!(index >= 1);
        match self.overrides.get(&index) {
            Some(&d) => d as u64,
            None => (self.slope as i64 * index as i64 + self.offset) as u64,
        }
    }

    /// All variable indices whose weight is at most `degree`, ascending.
    pub fn variables_up_to_degree(&self, degree: u64) -> Vec<u32> {
        let mut out: BTreeSet<u32> = self
            .overrides
            .iter()
            .filter(|(_, &d)| d as u64 <= degree)
            .map(|(&i, _)| i)
            .collect();
        let mut i: u32 = 1;
        loop {
            let d = self.slope as i64 * i as i64 + self.offset;
            if d > degree as i64 {
                break;
            }
            if !self.overrides.contains_key(&i) {
                out.insert(i);
            }
            i += 1;
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for WeightedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_standard() {
            return write!(f, "d_i = i");
        }
        for (i, d) in &self.overrides {
            write!(f, "d_{i} = {d}, ")?;
        }
        write!(f, "d_i = {}*i + {}", self.slope, self.offset)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VariableRule {
    All,
    /// Indices `i` with `i mod modulus` in `residues`.
    Residues {
        modulus: u32,
        residues: BTreeSet<u32>,
    },
    Finite(BTreeSet<u32>),
}

/// A decidable set `W` of variable indices, optionally capped at `max_index`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    rule: VariableRule,
    max_index: Option<u32>,
}

impl VariableSet {
    pub fn all() -> Self {
        VariableSet {
            rule: VariableRule::All,
            max_index: None,
        }
    }

    /// `{1, ..., n}`.
    pub fn up_to(n: u32) -> Self {
        Self::all().bounded(n)
    }

    pub fn residues(
        modulus: u32,
        residues: impl IntoIterator<Item = u32>,
    ) -> Result<Self, AlphabetError> {
        if modulus == 0 {
            return Err(AlphabetError::ZeroModulus);
        }
        Ok(VariableSet {
            rule: VariableRule::Residues {
                modulus,
                residues: residues.into_iter().map(|r| r % modulus).collect(),
            },
            max_index: None,
        })
    }

    /// `{ i : i = +-1 mod m }`.
    pub fn pm1_mod(modulus: u32) -> Self {
        Self::residues(modulus, [1, modulus.saturating_sub(1)]).expect("modulus >= 1")
    }

    pub fn odd() -> Self {
        Self::residues(2, [1]).expect("modulus 2")
    }

    /// `{ i : q does not divide i }`.
    pub fn non_multiples(q: u32) -> Result<Self, AlphabetError> {
        Self::residues(q, 1..q)
    }

    pub fn finite(indices: impl IntoIterator<Item = u32>) -> Self {
        VariableSet {
            rule: VariableRule::Finite(indices.into_iter().filter(|&i| i >= 1).collect()),
            max_index: None,
        }
    }

    pub fn bounded(mut self, n: u32) -> Self {
        self.max_index = Some(self.max_index.map_or(n, |m| m.min(n)));
        self
    }

    pub fn rule(&self) -> &VariableRule {
        &self.rule
    }

    pub fn max_index(&self) -> Option<u32> {
        self.max_index
    }

    pub fn contains(&self, index: u32) -> bool {
        if index == 0 || self.max_index.is_some_and(|m| index > m) {
            return false;
        }
        match &self.rule {
            VariableRule::All => true,
            VariableRule::Residues { modulus, residues } => residues.contains(&(index % modulus)),
            VariableRule::Finite(set) => set.contains(&index),
        }
    }

    /// Members of the set whose weight is at most `degree`, ascending.
    pub fn members_with_weight_at_most(&self, weights: &WeightedAlphabet, degree: u64) -> Vec<u32> {
        weights
            .variables_up_to_degree(degree)
            .into_iter()
            .filter(|&i| self.contains(i))
            .collect()
    }

    /// Parses the names used on the command line: `all`, `odd`, `pm1mod<m>`,
    /// `nonmult<q>`, `mod<m>:<r>,<r>,...`, `upto<n>` and `{i,j,...}`.
    pub fn parse(text: &str) -> Result<Self, AlphabetError> {
        let s = text.trim();
        let bad = || AlphabetError::UnknownVariableSet(text.to_string());
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        if s == "all" {
            return Ok(Self::all());
        }
        if s == "odd" {
            return Ok(Self::odd());
        }
        if let Some(m) = s.strip_prefix("pm1mod") {
            let m = num(m)?;
            if m == 0 {
                return Err(AlphabetError::ZeroModulus);
            }
            return Ok(Self::pm1_mod(m));
        }
        if let Some(q) = s.strip_prefix("nonmult") {
            return Self::non_multiples(num(q)?);
        }
        if let Some(n) = s.strip_prefix("upto") {
            return Ok(Self::up_to(num(n)?));
        }
        if let Some(rest) = s.strip_prefix("mod") {
            let (m, rs) = rest.split_once(':').ok_or_else(bad)?;
            let residues = rs.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
            return Self::residues(num(m)?, residues);
        }
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let items = inner
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(num)
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Self::finite(items));
        }
        Err(bad())
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rule {
            VariableRule::All => write!(f, "all")?,
            VariableRule::Residues { modulus, residues } => {
                let rs: Vec<String> = residues.iter().map(u32::to_string).collect();
                write!(f, "mod{}:{}", modulus, rs.join(","))?
            }
            VariableRule::Finite(set) => {
                let items: Vec<String> = set.iter().map(u32::to_string).collect();
                write!(f, "{{{}}}", items.join(","))?
            }
        }
        if let Some(m) = self.max_index {
            write!(f, "<={m}")?;
        }
        Ok(())
    }
}
