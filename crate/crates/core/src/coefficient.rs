//! Exact coefficients: arbitrary-precision rationals or a prime field GF(q).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(String, u64),
}

/// The coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(q: u64) -> Result<Field, FieldError> {
        let is_prime = (2..(1 << 31)).contains(&q)
            && (2..)
                .take_while(|d| d * d <= q)
                .all(|d| !q.is_multiple_of(d));
        if is_prime {
            Ok(Field::Prime(q))
        } else {
            Err(FieldError::NotPrime(q))
        }
    }

    pub fn zero(self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Coefficient {
        match self {
            Field::Rational => Coefficient::Rational(BigRational::from_integer(n.into())),
            Field::Prime(q) => Coefficient::Modular {
                value: n.rem_euclid(q as i64) as u64,
                modulus: q,
            },
        }
    }

    /// Maps `num/den` into the field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Coefficient, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Coefficient::Rational(BigRational::new(
                num.clone(),
                den.clone(),
            ))),
            Field::Prime(q) => {
                let reduce = |x: &BigInt| {
                    x.mod_floor(&BigInt::from(q))
                        .to_u64()
                        .expect("residue fits")
                };
                let d = reduce(den);
                if d == 0 {
                    return Err(FieldError::NotInvertible(den.to_string(), q));
                }
                let n = Coefficient::Modular {
                    value: reduce(num),
                    modulus: q,
                };
                let d = Coefficient::Modular {
                    value: d,
                    modulus: q,
                };
                Ok(n.mul(&d.inv()))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(q) => write!(f, "GF({q})"),
        }
    }
}

/// A field element in canonical form. Mixing elements of different fields is
/// a programming error and panics; polynomial operations check ring
/// compatibility before reaching here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn field(&self) -> Field {
        match self {
            Coefficient::Rational(_) => Field::Rational,
            Coefficient::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Modular { value, .. } => *value == 1,
        }
    }

    /// Whether the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Modular { .. } => false,
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (
                Coefficient::Modular { value: a, modulus },
                Coefficient::Modular {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Coefficient::Modular {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => mismatch(self, other),
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Modular { value, modulus } => Coefficient::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (
                Coefficient::Modular { value: a, modulus },
                Coefficient::Modular {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Coefficient::Modular {
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => mismatch(self, other),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coefficient {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(a.recip()),
            Coefficient::Modular { value, modulus } => Coefficient::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Coefficient) -> Coefficient {
        self.mul(&other.inv())
    }
}

fn mismatch(a: &Coefficient, b: &Coefficient) -> ! {
    panic!("coefficient fields differ: {} vs {}", a.field(), b.field())
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = modulus as u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_canonical() {
        let q = Field::Rational;
        let half = q.from_ratio(&2.into(), &4.into()).unwrap();
        assert_eq!(half.to_string(), "1/2");
        assert!(half.add(&half).is_one());
        assert_eq!(half.inv().to_string(), "2");
        assert!(half.sub(&half).is_zero());
        assert_eq!(q.from_i64(-3).to_string(), "-3");
        assert!(q.from_i64(-3).is_negative());
        assert!(q.from_ratio(&1.into(), &0.into()).is_err());
    }

    #[test]
    fn prime_field() {
        assert!(Field::prime(91).is_err());
        assert!(Field::prime(1).is_err());
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(three.inv(), f.from_i64(5));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(three.neg().add(&three), f.zero());
        let x = f.from_ratio(&1.into(), &2.into()).unwrap();
        assert_eq!(x, f.from_i64(4));
        assert!(f.from_ratio(&1.into(), &14.into()).is_err());
    }

    #[test]
    #[should_panic(expected = "coefficient fields differ")]
    fn mixing_fields_panics() {
        let _ = Field::Rational.one().add(&Field::Prime(5).one());
    }
}
