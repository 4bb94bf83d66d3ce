//! Gröbner bases for polynomial rings in countably many variables
//! `k[x_1, x_2, ...]`, computed through the filtration by the finite
//! subrings `k[x_1..x_n]`, and the partition bijections and generating
//! function identities they realize.

pub mod alphabet;
pub mod cli;
pub mod coefficient;
pub mod division;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod parse;
pub mod partition;
pub mod polynomial;

pub use alphabet::{VariableSet, WeightedAlphabet};
pub use coefficient::{Coefficient, Field};
pub use division::{divide, is_member, remainder, standard_monomials, DivisionResult};
pub use groebner::{
    bayer_stillman_basis, buchberger_truncated, reduce_basis, verify_buchberger, Certificate,
    GroebnerBasis, TruncationWindow,
};
pub use hilbert::TruncatedSeries;
pub use monomial::{Monomial, OrderKind};
pub use partition::Partition;
pub use polynomial::{Polynomial, Ring};
