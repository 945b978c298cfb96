//! Exact field arithmetic over the rationals and over prime fields.
//!
//! Every coefficient in the library is a [`Scalar`] attached to a
//! [`FieldSpec`]. Rational values are kept as reduced fractions with
//! positive denominator; prime-field values as residues in `[0, p)`.
//! There is no floating point anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Ground field of a computation session.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("operands belong to different fields: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a valid prime modulus (need a prime 2 <= p < 2^31)")]
    BadModulus(u64),
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// A prime field with modulus `p`; `p` must be prime and below `2^31`
    /// so products fit in a widening `u64` multiply.
    pub fn prime_field(p: u64) -> Result<FieldSpec, ScalarError> {
        if p < 2 || p >= (1 << 31) || !is_prime_u64(p) {
            return Err(ScalarError::BadModulus(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    /// True when the characteristic is zero or strictly larger than `bound`.
    /// Characteristic zero counts as infinite.
    pub fn char_exceeds(&self, bound: u64) -> bool {
        match self {
            FieldSpec::Rationals => true,
            FieldSpec::PrimeField(p) => *p > bound,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 1, p: *p },
        }
    }

    /// Image of the integer `v` in the field.
    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => {
                let r = v.rem_euclid(*p as i64) as u64;
                Scalar::Mod { value: r, p: *p }
            }
        }
    }

    /// Image of the rational `num/den` in the field. For a prime field this
    /// requires `p` not to divide `den`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::PrimeField(_) => self.from_i64(num).div(&self.from_i64(den)),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s.strip_prefix('F').or_else(|| s.strip_prefix('f'));
        if let Some(d) = digits {
            if let Ok(p) = d.parse::<u64>() {
                return FieldSpec::prime_field(p);
            }
        }
        Err(ScalarError::Parse(s.to_string()))
    }
}

/// An exact field element. Always canonical: reduced fraction with positive
/// denominator over Q, residue in `[0, p)` over a prime field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

// Scalars travel through JSON in their textual form ("a/b" or "a mod p").
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if let Some((_, p)) = s.split_once(" mod ") {
            let p: u64 = p.trim().parse().map_err(serde::de::Error::custom)?;
            return parse_scalar(&s, FieldSpec::PrimeField(p)).map_err(serde::de::Error::custom);
        }
        parse_scalar(&s, FieldSpec::Rationals).map_err(serde::de::Error::custom)
    }
}

#[inline]
fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^31, so a*b < 2^62 never overflows u64.
    (a * b) % p
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    fn check_same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        let (fa, fb) = (self.field(), other.field());
        if fa != fb {
            return Err(ScalarError::FieldMismatch(fa, fb));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (p + a - b) % p,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: mod_mul(*a, *b, *p),
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same_field(other)?;
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a / b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: mod_mul(*a, mod_pow(*b, p - 2, *p), *p),
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        self.field().one().div(self)
    }

    /// Unchecked arithmetic for inner loops where the field has already been
    /// validated; panics on a field mismatch.
    pub fn add_unchecked(&self, other: &Scalar) -> Scalar {
        self.add(other).expect("field mismatch")
    }

    pub fn sub_unchecked(&self, other: &Scalar) -> Scalar {
        self.sub(other).expect("field mismatch")
    }

    pub fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        self.mul(other).expect("field mismatch")
    }

    /// Residue of a rational scalar modulo `p`, when the denominator is
    /// invertible mod `p`. Identity on scalars already in `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Mod { p: q, .. } => {
                if *q == p {
                    Ok(self.clone())
                } else {
                    Err(ScalarError::FieldMismatch(
                        FieldSpec::PrimeField(*q),
                        FieldSpec::PrimeField(p),
                    ))
                }
            }
            Scalar::Rational(r) => {
                let pb = BigInt::from(p);
                let num = r.numer().clone() % &pb;
                let den = r.denom().clone() % &pb;
                let num = ((num + &pb) % &pb)
                    .try_into()
                    .map(|v: u64| v)
                    .expect("residue fits u64");
                let den: u64 = ((den + &pb) % &pb).try_into().expect("residue fits u64");
                if den == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(Scalar::Mod {
                    value: mod_mul(num, mod_pow(den, p - 2, p), p),
                    p,
                })
            }
        }
    }

    /// The underlying rational, when over Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, p } => write!(f, "{value} mod {p}"),
        }
    }
}

/// Parses "a", "a/b" or "a mod p" into a scalar of the given field.
pub fn parse_scalar(s: &str, field: FieldSpec) -> Result<Scalar, ScalarError> {
    let s = s.trim();
    if let Some((a, p)) = s.split_once(" mod ") {
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| ScalarError::Parse(s.to_string()))?;
        if FieldSpec::PrimeField(p) != field {
            return Err(ScalarError::FieldMismatch(FieldSpec::PrimeField(p), field));
        }
        let a: i64 = a
            .trim()
            .parse()
            .map_err(|_| ScalarError::Parse(s.to_string()))?;
        return Ok(field.from_i64(a));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num
            .trim()
            .parse()
            .map_err(|_| ScalarError::Parse(s.to_string()))?;
        let den: i64 = den
            .trim()
            .parse()
            .map_err(|_| ScalarError::Parse(s.to_string()))?;
        return field.from_ratio(num, den);
    }
    match BigInt::from_str(s) {
        Ok(n) => match field {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::from_integer(n))),
            FieldSpec::PrimeField(p) => {
                let pb = BigInt::from(p);
                let r: u64 = ((n % &pb + &pb) % &pb).try_into().expect("residue fits");
                Ok(Scalar::Mod { value: r, p })
            }
        },
        Err(_) => Err(ScalarError::Parse(s.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::Rationals.from_ratio(n, d).unwrap()
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        // 1/2 + 1/3 = 5/6
        assert_eq!(q(1, 2).add(&q(1, 3)).unwrap(), q(5, 6));
        // canonical form: 2/4 stored as 1/2
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(2, 4).to_string(), "1/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        // 3 * 4 = 12 = 2 mod 5
        assert_eq!(f5.from_i64(3).mul(&f5.from_i64(4)).unwrap(), f5.from_i64(2));
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
        let inv = f5.from_i64(3).inv().unwrap();
        assert_eq!(inv.mul(&f5.from_i64(3)).unwrap(), f5.one());
    }

    #[test]
    fn field_mismatch_and_zero_division_are_errors() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert!(matches!(
            q(1, 1).add(&f5.one()),
            Err(ScalarError::FieldMismatch(_, _))
        ));
        assert_eq!(q(1, 1).div(&q(0, 1)), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn bad_moduli_rejected() {
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(6).is_err());
        assert!(FieldSpec::prime_field(1 << 31).is_err());
        assert!(FieldSpec::prime_field(2147483647).is_ok()); // 2^31 - 1 is prime
    }

    #[test]
    fn field_axioms_on_sampled_triples() {
        // deterministic pseudo-random triples via a tiny LCG
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 13) - 6
        };
        let fields = [FieldSpec::Rationals, FieldSpec::prime_field(7).unwrap()];
        for field in fields {
            for _ in 0..200 {
                let a = field.from_i64(next());
                let b = field.from_i64(next());
                let c = field.from_i64(next());
                let ab_c = a.add(&b).unwrap().add(&c).unwrap();
                let a_bc = a.add(&b.add(&c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc);
                let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
                let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), field.one());
                }
                assert_eq!(a.add(&a.neg()).unwrap(), field.zero());
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        assert_eq!(parse_scalar("3 mod 7", f7).unwrap(), f7.from_i64(3));
        assert_eq!(parse_scalar("-5/3", FieldSpec::Rationals).unwrap(), q(-5, 3));
        assert_eq!(parse_scalar("4", FieldSpec::Rationals).unwrap(), q(4, 1));
        assert_eq!("F11".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(11));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
    }
}
