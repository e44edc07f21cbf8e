//! Exact coefficient fields: the rationals and prime fields `Z/pZ`.
//!
//! Values are plain immutable data ([`FieldValue`]). All arithmetic goes
//! through a [`Field`], which owns the [`OpCounter`] for one computation, so
//! independent computations never share a counter.

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which exact field the coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    /// `Z/pZ`; only constructed through [`FieldDescriptor::prime_field`],
    /// which checks primality.
    PrimeField(u64),
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldDescriptor::PrimeField(p))
        } else {
            Err(Error::InvalidModulus(p.to_string()))
        }
    }

    /// 0 for the rationals, `p` for `Z/pZ`.
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => p,
        }
    }

    /// True when every positive integer below `bound` is invertible.
    pub fn inverts_below(&self, bound: u64) -> bool {
        let p = self.characteristic();
        p == 0 || p >= bound
    }
}

pub fn char_of(desc: FieldDescriptor) -> u64 {
    desc.characteristic()
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "q"),
            FieldDescriptor::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Parses `q` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" {
            return Ok(FieldDescriptor::Rationals);
        }
        let Some(p) = s.strip_prefix("fp:") else {
            return Err(Error::Parse(format!(
                "field must be `q` or `fp:<p>`, got `{s}`"
            )));
        };
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidModulus(p.to_string()))?;
        FieldDescriptor::prime_field(p)
    }
}

/// An element of an exact field.
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// `BigRational` invariant); residues are canonical in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl FieldValue {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            FieldValue::Rational(_) => FieldDescriptor::Rationals,
            FieldValue::Residue { modulus, .. } => FieldDescriptor::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(q) => q.is_zero(),
            FieldValue::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldValue::Rational(q) => q.is_one(),
            FieldValue::Residue { value, .. } => *value == 1,
        }
    }

    /// True for rationals with denominator 1 and for every residue.
    pub fn is_integral(&self) -> bool {
        match self {
            FieldValue::Rational(q) => q.is_integer(),
            FieldValue::Residue { .. } => true,
        }
    }

    /// Re-establishes the canonical form. Values built through [`Field`] are
    /// already canonical, so this is the identity on them.
    pub fn normalized(&self) -> FieldValue {
        match self {
            FieldValue::Rational(q) => {
                FieldValue::Rational(BigRational::new(q.numer().clone(), q.denom().clone()))
            }
            FieldValue::Residue { value, modulus } => FieldValue::Residue {
                value: value % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Parses a decimal integer or `num/den` string into `desc`.
    pub fn parse(s: &str, desc: FieldDescriptor) -> Result<FieldValue> {
        let s = s.trim();
        let q = if s.contains('/') {
            BigRational::from_str(s).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?
        } else {
            BigRational::from_integer(
                BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad integer `{s}`")))?,
            )
        };
        match desc {
            FieldDescriptor::Rationals => Ok(FieldValue::Rational(q)),
            FieldDescriptor::PrimeField(p) => {
                let num = reduce_bigint(q.numer(), p);
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                let inv = mod_inverse(den, p).ok_or(Error::DivisionByZero)?;
                Ok(FieldValue::Residue {
                    value: mul_mod(num, inv, p),
                    modulus: p,
                })
            }
        }
    }
}

impl fmt::Display for FieldValue {
    /// Integers print as `n`, other rationals as `num/den`, residues as their
    /// representative in `[0, p)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(q) => write!(f, "{q}"),
            FieldValue::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Field-operation tallies for one computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    /// Additions and subtractions.
    pub adds: u64,
    pub muls: u64,
    /// Divisions and inversions.
    pub divs: u64,
    pub negs: u64,
}

impl OpCounter {
    pub fn total(&self) -> u64 {
        self.adds + self.muls + self.divs + self.negs
    }

    /// Component-wise `self - earlier`.
    pub fn since(&self, earlier: &OpCounter) -> OpCounter {
        OpCounter {
            adds: self.adds - earlier.adds,
            muls: self.muls - earlier.muls,
            divs: self.divs - earlier.divs,
            negs: self.negs - earlier.negs,
        }
    }
}

/// Arithmetic in one field with an attached operation counter.
///
/// A `Field` is the scope of a single computation: it is deliberately not
/// `Sync`, and concurrent computations each build their own.
#[derive(Debug)]
pub struct Field {
    desc: FieldDescriptor,
    counter: Cell<OpCounter>,
}

impl Field {
    pub fn new(desc: FieldDescriptor) -> Self {
        Field {
            desc,
            counter: Cell::new(OpCounter::default()),
        }
    }

    pub fn rationals() -> Self {
        Field::new(FieldDescriptor::Rationals)
    }

    pub fn prime(p: u64) -> Result<Self> {
        Ok(Field::new(FieldDescriptor::prime_field(p)?))
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.desc
    }

    pub fn characteristic(&self) -> u64 {
        self.desc.characteristic()
    }

    pub fn counter(&self) -> OpCounter {
        self.counter.get()
    }

    pub fn reset_counter(&self) {
        self.counter.set(OpCounter::default());
    }

    fn tally(&self, f: impl FnOnce(&mut OpCounter)) {
        let mut c = self.counter.get();
        f(&mut c);
        self.counter.set(c);
    }

    pub fn zero(&self) -> FieldValue {
        self.int(0)
    }

    pub fn one(&self) -> FieldValue {
        self.int(1)
    }

    /// Image of an integer in the field. Injections are not field operations
    /// and are not counted.
    pub fn int(&self, i: i128) -> FieldValue {
        match self.desc {
            FieldDescriptor::Rationals => {
                FieldValue::Rational(BigRational::from_integer(BigInt::from(i)))
            }
            FieldDescriptor::PrimeField(p) => FieldValue::Residue {
                value: i.rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn big(&self, i: &BigInt) -> FieldValue {
        match self.desc {
            FieldDescriptor::Rationals => FieldValue::Rational(BigRational::from_integer(i.clone())),
            FieldDescriptor::PrimeField(p) => FieldValue::Residue {
                value: reduce_bigint(i, p),
                modulus: p,
            },
        }
    }

    /// Image of a nonzero integer that is about to be used as a divisor.
    pub fn int_nonzero(&self, i: i128) -> Result<FieldValue> {
        let v = self.int(i);
        if v.is_zero() {
            return Err(Error::CharacteristicTooSmall {
                characteristic: self.characteristic(),
                requirement: format!("the integer {i} must be invertible"),
            });
        }
        Ok(v)
    }

    pub fn parse(&self, s: &str) -> Result<FieldValue> {
        FieldValue::parse(s, self.desc)
    }

    fn check(&self, a: &FieldValue) -> Result<()> {
        let found = a.descriptor();
        if found != self.desc {
            return Err(Error::FieldMismatch {
                expected: self.desc,
                found,
            });
        }
        Ok(())
    }

    fn check2(&self, a: &FieldValue, b: &FieldValue) -> Result<()> {
        self.check(a)?;
        self.check(b)
    }

    pub fn add(&self, a: &FieldValue, b: &FieldValue) -> Result<FieldValue> {
        self.check2(a, b)?;
        self.tally(|c| c.adds += 1);
        Ok(match (a, b) {
            (FieldValue::Rational(x), FieldValue::Rational(y)) => FieldValue::Rational(x + y),
            (FieldValue::Residue { value: x, modulus: p }, FieldValue::Residue { value: y, .. }) => {
                FieldValue::Residue {
                    value: add_mod(*x, *y, *p),
                    modulus: *p,
                }
            }
            _ => unreachable!("descriptors checked"),
        })
    }

    pub fn sub(&self, a: &FieldValue, b: &FieldValue) -> Result<FieldValue> {
        self.check2(a, b)?;
        self.tally(|c| c.adds += 1);
        Ok(match (a, b) {
            (FieldValue::Rational(x), FieldValue::Rational(y)) => FieldValue::Rational(x - y),
            (FieldValue::Residue { value: x, modulus: p }, FieldValue::Residue { value: y, .. }) => {
                FieldValue::Residue {
                    value: add_mod(*x, *p - *y % *p, *p),
                    modulus: *p,
                }
            }
            _ => unreachable!("descriptors checked"),
        })
    }

    pub fn neg(&self, a: &FieldValue) -> Result<FieldValue> {
        self.check(a)?;
        self.tally(|c| c.negs += 1);
        Ok(match a {
            FieldValue::Rational(x) => FieldValue::Rational(-x),
            FieldValue::Residue { value, modulus } => FieldValue::Residue {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        })
    }

    pub fn mul(&self, a: &FieldValue, b: &FieldValue) -> Result<FieldValue> {
        self.check2(a, b)?;
        self.tally(|c| c.muls += 1);
        Ok(match (a, b) {
            (FieldValue::Rational(x), FieldValue::Rational(y)) => FieldValue::Rational(x * y),
            (FieldValue::Residue { value: x, modulus: p }, FieldValue::Residue { value: y, .. }) => {
                FieldValue::Residue {
                    value: mul_mod(*x, *y, *p),
                    modulus: *p,
                }
            }
            _ => unreachable!("descriptors checked"),
        })
    }

    /// `a / b`; a prime-field inverse is one extended-Euclid run and is
    /// counted as a single division.
    pub fn div(&self, a: &FieldValue, b: &FieldValue) -> Result<FieldValue> {
        self.check2(a, b)?;
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.tally(|c| c.divs += 1);
        Ok(match (a, b) {
            (FieldValue::Rational(x), FieldValue::Rational(y)) => FieldValue::Rational(x / y),
            (FieldValue::Residue { value: x, modulus: p }, FieldValue::Residue { value: y, .. }) => {
                let inv = mod_inverse(*y, *p).ok_or(Error::DivisionByZero)?;
                FieldValue::Residue {
                    value: mul_mod(*x, inv, *p),
                    modulus: *p,
                }
            }
            _ => unreachable!("descriptors checked"),
        })
    }

    pub fn inv(&self, a: &FieldValue) -> Result<FieldValue> {
        self.div(&self.one(), a)
    }

    /// `a^e` by left-to-right square-and-multiply: at most `2*floor(log2 e)`
    /// multiplications for `e >= 1`. `0^0` is defined as 1 so that empty
    /// powers of `alpha - beta` are harmless.
    pub fn pow(&self, a: &FieldValue, e: u64) -> Result<FieldValue> {
        self.check(a)?;
        if e == 0 {
            return Ok(self.one());
        }
        let top = 63 - e.leading_zeros();
        let mut acc = a.clone();
        for bit in (0..top).rev() {
            acc = self.mul(&acc, &acc)?;
            if (e >> bit) & 1 == 1 {
                acc = self.mul(&acc, a)?;
            }
        }
        Ok(acc)
    }

    /// `(-1)^e * a`, at most one negation.
    pub fn signed(&self, a: FieldValue, e: u64) -> Result<FieldValue> {
        if e % 2 == 1 {
            self.neg(&a)
        } else {
            Ok(a)
        }
    }
}

/// Binary powering as a free function.
pub fn binary_pow(field: &Field, a: &FieldValue, e: u64) -> Result<FieldValue> {
    field.pow(a, e)
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn reduce_bigint(i: &BigInt, p: u64) -> u64 {
    i.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue below p fits u64")
}

/// Inverse modulo `p` by the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin; the fixed witness set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Exact integer of a rational value, if it has one.
pub fn as_bigint(v: &FieldValue) -> Option<BigInt> {
    match v {
        FieldValue::Rational(q) if q.is_integer() => Some(q.to_integer()),
        FieldValue::Rational(_) => None,
        FieldValue::Residue { value, .. } => Some(BigInt::from(*value)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> FieldValue {
        FieldValue::parse(s, FieldDescriptor::Rationals).unwrap()
    }

    #[test]
    fn rational_addition() {
        let f = Field::rationals();
        assert_eq!(f.add(&q("1/2"), &q("1/3")).unwrap(), q("5/6"));
        assert_eq!(f.counter().adds, 1);
    }

    #[test]
    fn prime_field_multiplication() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.mul(&f.int(3), &f.int(5)).unwrap(), f.int(1));
        assert_eq!(f.counter().muls, 1);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.div(&f.int(4), &f.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.counter().divs, 0);
    }

    #[test]
    fn descriptor_mismatch_is_an_error() {
        let f = Field::prime(7).unwrap();
        let g = Field::prime(11).unwrap();
        assert!(matches!(
            f.add(&f.one(), &g.one()),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(matches!(
            f.mul(&f.one(), &q("1/2")),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn characteristic() {
        assert_eq!(char_of(FieldDescriptor::Rationals), 0);
        assert_eq!(char_of(FieldDescriptor::prime_field(7).unwrap()), 7);
        assert_eq!(char_of(FieldDescriptor::prime_field(101).unwrap()), 101);
    }

    #[test]
    fn composite_and_tiny_moduli_rejected() {
        for p in [0u64, 1, 4, 9, 561, 1_000_000_007 * 3] {
            assert!(FieldDescriptor::prime_field(p).is_err(), "{p}");
        }
        assert!(FieldDescriptor::prime_field(18_446_744_073_709_551_557).is_ok());
        assert!("fp:18446744073709551616".parse::<FieldDescriptor>().is_err());
    }

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), trial(n), "{n}");
        }
    }

    #[test]
    fn binary_pow_values() {
        let f = Field::rationals();
        assert_eq!(f.pow(&f.int(2), 10).unwrap(), f.int(1024));
        let g = Field::prime(5).unwrap();
        assert_eq!(g.pow(&g.int(3), 4).unwrap(), g.one());
        assert_eq!(f.pow(&f.zero(), 0).unwrap(), f.one());
    }

    #[test]
    fn binary_pow_multiplication_count() {
        let f = Field::rationals();
        f.pow(&f.one(), 1_000_000_000).unwrap();
        // floor(log2 1e9) = 29, popcount(1e9) = 13: 29 squarings + 12 products.
        assert_eq!(f.counter().muls, 41);
        assert!(f.counter().muls <= 61);
        for e in 1..2000u64 {
            let f = Field::prime(101).unwrap();
            f.pow(&f.int(3), e).unwrap();
            let log = 63 - e.leading_zeros() as u64;
            assert!(f.counter().muls <= 2 * log + 1, "e={e}");
            let g = Field::prime(101).unwrap();
            g.pow(&g.int(3), 2 * e).unwrap();
            assert!(g.counter().muls <= f.counter().muls + 2, "e={e}");
        }
    }

    #[test]
    fn parse_and_display() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.parse("-1").unwrap(), f.int(6));
        assert_eq!(f.parse("1/2").unwrap(), f.int(4));
        assert_eq!(f.parse("1/7"), Err(Error::DivisionByZero));
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("-6/3").to_string(), "-2");
        assert_eq!(q("3/-6").to_string(), "-1/2");
        assert!("fp:8".parse::<FieldDescriptor>().is_err());
        assert_eq!("fp:13".parse::<FieldDescriptor>().unwrap().to_string(), "fp:13");
    }

    #[test]
    fn normalization_is_idempotent() {
        let v = FieldValue::Residue { value: 12, modulus: 7 };
        assert_eq!(v.normalized(), v.normalized().normalized());
        assert_eq!(v.normalized(), FieldValue::Residue { value: 5, modulus: 7 });
        let r = q("10/4");
        assert_eq!(r.normalized(), r);
    }
}
