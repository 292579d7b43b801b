//! Exact scalars: arbitrary-precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals, with exact big-integer fractions.
    Rationals,
    /// The prime field GF(p).
    Prime(u64),
}

impl Field {
    /// Builds GF(p), rejecting non-primes and moduli too large for `u64` products.
    pub fn prime(p: u64) -> Result<Self, LinalgError> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Maps an exact rational into this field. Fails when the denominator
    /// vanishes modulo p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, LinalgError> {
        match *self {
            Field::Rationals => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let modulus = BigInt::from(p);
                let reduce = |n: &BigInt| -> u64 {
                    let r = ((n % &modulus) + &modulus) % &modulus;
                    r.try_into().expect("residue fits in u64")
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(LinalgError::DenominatorVanishes {
                        value: q.to_string(),
                        modulus: p,
                    });
                }
                let num = Scalar::Modular {
                    value: num,
                    modulus: p,
                };
                let den = Scalar::Modular {
                    value: den,
                    modulus: p,
                };
                Ok(&num / &den)
            }
        }
    }

    /// Parses integer or fraction text such as `3`, `-3/2` or `−3/2`
    /// (Unicode minus is accepted).
    pub fn parse(&self, text: &str) -> Result<Scalar, LinalgError> {
        let cleaned: String = text.trim().replace('\u{2212}', "-");
        let bad = || LinalgError::BadScalar(text.to_string());
        let q = match cleaned.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(cleaned.parse().map_err(|_| bad())?),
        };
        self.from_rational(&q)
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Modular { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rationals"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Arithmetic between scalars of different
/// fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular {
                    value: b,
                    modulus: q,
                },
            ) => {
                let m = same_modulus(*p, *q);
                Scalar::Modular {
                    value: (a + b) % m,
                    modulus: m,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular {
                    value: b,
                    modulus: q,
                },
            ) => {
                let m = same_modulus(*p, *q);
                Scalar::Modular {
                    value: a * b % m,
                    modulus: m,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inverse().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => {
                let sign = if q.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", q.numer().abs(), q.denom())
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fractions_and_unicode_minus() {
        let q = Field::Rationals;
        assert_eq!(q.parse("−3/2").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse(" 7 ").unwrap(), q.from_int(7));
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(101).unwrap();
        let half = f.parse("1/2").unwrap();
        assert_eq!(&half + &half, f.one());
        assert_eq!(f.parse("-1").unwrap(), f.from_int(100));
        let three = f.from_int(3);
        assert_eq!(&three * &three.inverse().unwrap(), f.one());
        assert!(f.parse("1/101").is_err());
    }

    #[test]
    fn rejects_composite_moduli() {
        assert!(Field::prime(100).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }
}
