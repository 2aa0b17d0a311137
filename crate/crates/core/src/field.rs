//! Exact scalars: arbitrary-precision rationals and residues modulo a word-sized prime.
//!
//! Every [`FieldValue`] carries its [`FieldSpec`]. The `try_*` methods report a
//! mismatch as [`Error::IncompatibleField`]; the operator impls on references
//! panic instead and are meant for code that has already checked its operands
//! share a field (polynomial arithmetic does this once per call).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which field a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// Prime modulus; only constructible through [`FieldSpec::prime`].
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(*p),
        }
    }

    /// Number of elements, or `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        self.modulus()
    }

    pub fn zero(&self) -> FieldValue {
        FieldValue::from_i64(*self, 0)
    }

    pub fn one(&self) -> FieldValue {
        FieldValue::from_i64(*self, 1)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| Error::BadFieldSpec(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
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

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Payload {
    Rational(BigRational),
    Residue(u64),
}

/// An exact element of ℚ or of a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldValue {
    spec: FieldSpec,
    payload: Payload,
}

impl FieldValue {
    pub fn from_i64(spec: FieldSpec, v: i64) -> Self {
        Self::from_bigint(spec, &BigInt::from(v))
    }

    pub fn from_bigint(spec: FieldSpec, v: &BigInt) -> Self {
        let payload = match spec {
            FieldSpec::Rationals => Payload::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::PrimeField(p) => Payload::Residue(bigint_mod(v, p)),
        };
        Self { spec, payload }
    }

    /// `num / den` reduced into the field; fails when `den` is zero in the field.
    pub fn from_ratio(spec: FieldSpec, num: &BigInt, den: &BigInt) -> Result<Self> {
        match spec {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Self::rational(BigRational::new(num.clone(), den.clone())))
            }
            FieldSpec::PrimeField(_) => {
                let n = Self::from_bigint(spec, num);
                let d = Self::from_bigint(spec, den);
                n.try_div(&d)
            }
        }
    }

    pub fn rational(r: BigRational) -> Self {
        Self {
            spec: FieldSpec::Rationals,
            payload: Payload::Rational(r),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.payload {
            Payload::Rational(r) => Some(r),
            Payload::Residue(_) => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self.payload {
            Payload::Residue(r) => Some(r),
            Payload::Rational(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Rational(r) => r.is_zero(),
            Payload::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.payload {
            Payload::Rational(r) => r.is_one(),
            Payload::Residue(r) => *r == 1,
        }
    }

    /// Strictly positive rational. Residues have no order and always answer `false`.
    pub fn is_positive(&self) -> bool {
        matches!(&self.payload, Payload::Rational(r) if r.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        matches!(&self.payload, Payload::Rational(r) if r.is_negative())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::IncompatibleField(self.spec, other.spec))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let payload = match &self.payload {
            Payload::Rational(r) => Payload::Rational(r.recip()),
            Payload::Residue(r) => {
                let p = self.spec.modulus().expect("residue has a modulus");
                Payload::Residue(inv_mod(*r, p))
            }
        };
        Ok(Self {
            spec: self.spec,
            payload,
        })
    }

    pub fn pow(&self, exp: u64) -> Self {
        let payload = match &self.payload {
            Payload::Rational(r) => {
                let e = i32::try_from(exp).expect("exponent fits in i32");
                Payload::Rational(num_traits::Pow::pow(r, e))
            }
            Payload::Residue(r) => {
                let p = self.spec.modulus().expect("residue has a modulus");
                Payload::Residue(pow_mod(*r, exp, p))
            }
        };
        Self {
            spec: self.spec,
            payload,
        }
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let payload = match (&self.payload, &other.payload) {
            (Payload::Rational(a), Payload::Rational(b)) => Payload::Rational(a + b),
            (Payload::Residue(a), Payload::Residue(b)) => {
                let p = self.spec.modulus().expect("residue has a modulus");
                Payload::Residue(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => unreachable!("payload kind matches the field"),
        };
        Self {
            spec: self.spec,
            payload,
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let payload = match (&self.payload, &other.payload) {
            (Payload::Rational(a), Payload::Rational(b)) => Payload::Rational(a * b),
            (Payload::Residue(a), Payload::Residue(b)) => {
                let p = self.spec.modulus().expect("residue has a modulus");
                Payload::Residue(mul_mod(*a, *b, p))
            }
            _ => unreachable!("payload kind matches the field"),
        };
        Self {
            spec: self.spec,
            payload,
        }
    }

    fn neg_ref(&self) -> Self {
        let payload = match &self.payload {
            Payload::Rational(r) => Payload::Rational(-r),
            Payload::Residue(r) => {
                let p = self.spec.modulus().expect("residue has a modulus");
                Payload::Residue(if *r == 0 { 0 } else { p - r })
            }
        };
        Self {
            spec: self.spec,
            payload,
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit values
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(p as i128) as u64
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&FieldValue> for &FieldValue {
            type Output = FieldValue;

            fn $method(self, rhs: &FieldValue) -> FieldValue {
                self.check(rhs).expect("operands share a field");
                self.$inner(rhs)
            }
        }

        impl $trait<FieldValue> for FieldValue {
            type Output = FieldValue;

            fn $method(self, rhs: FieldValue) -> FieldValue {
                (&self).$method(&rhs)
            }
        }
    };
}

impl FieldValue {
    fn sub_unchecked(&self, other: &Self) -> Self {
        self.add_unchecked(&other.neg_ref())
    }
}

forward_binop!(Add, add, add_unchecked);
forward_binop!(Sub, sub, sub_unchecked);
forward_binop!(Mul, mul, mul_unchecked);

impl Neg for &FieldValue {
    type Output = FieldValue;

    fn neg(self) -> FieldValue {
        self.neg_ref()
    }
}

impl Neg for FieldValue {
    type Output = FieldValue;

    fn neg(self) -> FieldValue {
        self.neg_ref()
    }
}

/// Rationals print as `n` or `n/d`, residues as their canonical representative.
impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Payload::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Payload::Residue(v) => write!(f, "{v}"),
        }
    }
}

/// Parses a scalar literal such as `3`, `-2`, `5/7` or `-1/2` into `spec`.
pub fn parse_scalar(spec: FieldSpec, text: &str) -> Result<FieldValue> {
    let t = text.trim();
    let bad = || Error::BadFieldSpec(format!("bad scalar literal {t:?}"));
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, t),
    };
    let parse_nat = |s: &str| -> Result<BigInt> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let value = match body.split_once('/') {
        Some((n, d)) => FieldValue::from_ratio(spec, &parse_nat(n)?, &parse_nat(d)?)?,
        None => FieldValue::from_bigint(spec, &parse_nat(body)?),
    };
    Ok(if neg { -value } else { value })
}
