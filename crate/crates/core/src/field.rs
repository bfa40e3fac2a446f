//! Exact coefficient fields.
//!
//! Everything downstream is generic over [`Field`]. Three implementations exist:
//! a word-sized prime field (the default, fast), arbitrary precision rationals
//! (exact characteristic zero, used for certification), and `GF(2^64)`, which
//! stands in for an infinite field of characteristic two.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest prime below `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_629;

/// Bound on the absolute value of random integer entries in rational mode.
pub const RATIONAL_ENTRY_BOUND: i64 = 1_000_000;

pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// A random entry for a coordinate change matrix.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn characteristic(&self) -> u64;
    fn describe(&self) -> String;
}

/// `Z/pZ` with `p < 2^63`, checked prime at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 {
            return Err(Error::invalid(format!("modulus {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base, self.p);
            }
            base = mul_mod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
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

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn describe(&self) -> String {
        format!("prime:{}", self.p)
    }
}

/// The rationals, with canonical `BigRational` elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-RATIONAL_ENTRY_BOUND..=RATIONAL_ENTRY_BOUND))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn describe(&self) -> String {
        "rational".into()
    }
}

/// `GF(2^64)` modulo `x^64 + x^4 + x^3 + x + 1`.
///
/// A finite field of characteristic two large enough that random matrices are
/// generic with overwhelming probability. Used for characteristic-two negative
/// tests, where `F_2` itself has too few elements to sample from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BinaryField;

const GF64_REDUCTION: u64 = 0b1_1011; // x^4 + x^3 + x + 1

fn clmul(a: u64, b: u64) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 0u64);
    for i in 0..64 {
        if (b >> i) & 1 == 1 {
            lo ^= a << i;
            if i > 0 {
                hi ^= a >> (64 - i);
            }
        }
    }
    (lo, hi)
}

fn gf64_mul(a: u64, b: u64) -> u64 {
    let (mut lo, mut hi) = clmul(a, b);
    // fold the high word twice; the second fold has at most 4 bits
    while hi != 0 {
        let (l2, h2) = clmul(hi, GF64_REDUCTION);
        lo ^= l2;
        hi = h2;
    }
    lo
}

impl Field for BinaryField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v & 1) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        a ^ b
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        a ^ b
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        gf64_mul(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        *a
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // a^(2^64 - 2)
        let mut acc = 1u64;
        let mut base = *a;
        let mut exp = u64::MAX - 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = gf64_mul(acc, base);
            }
            base = gf64_mul(base, base);
            exp >>= 1;
        }
        Some(acc)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen()
    }
    fn characteristic(&self) -> u64 {
        2
    }
    fn describe(&self) -> String {
        "char2:gf(2^64)".into()
    }
}

/// Runtime choice of coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldMode {
    Prime(u64),
    Rational,
    /// Characteristic two, realised as `GF(2^64)`.
    Char2,
}

impl Default for FieldMode {
    fn default() -> Self {
        FieldMode::Prime(DEFAULT_PRIME)
    }
}

impl FieldMode {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldMode::Prime(p) => *p,
            FieldMode::Rational => 0,
            FieldMode::Char2 => 2,
        }
    }

    /// Parses `prime:<p>` or `rational`. `prime:2` selects [`FieldMode::Char2`].
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldMode::Rational);
        }
        if let Some(p) = s.strip_prefix("prime:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::invalid(format!("bad prime in field spec {s:?}")))?;
            if p == 2 {
                return Ok(FieldMode::Char2);
            }
            PrimeField::new(p)?;
            return Ok(FieldMode::Prime(p));
        }
        Err(Error::invalid(format!("unknown field spec {s:?}")))
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Prime(p) => write!(f, "prime:{p}"),
            FieldMode::Rational => write!(f, "rational"),
            FieldMode::Char2 => write!(f, "prime:2"),
        }
    }
}

/// Runs a generic computation over the field selected by a [`FieldMode`].
#[macro_export]
macro_rules! with_field {
    ($mode:expr, |$f:ident| $body:expr) => {
        match $mode {
            $crate::field::FieldMode::Prime(p) => {
                let $f = $crate::field::PrimeField::new(p)?;
                $body
            }
            $crate::field::FieldMode::Rational => {
                let $f = $crate::field::RationalField;
                $body
            }
            $crate::field::FieldMode::Char2 => {
                let $f = $crate::field::BinaryField;
                $body
            }
        }
    };
}

/// Integer-valued scalar helper used by tests and oracles.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-{}/{}", q.numer().abs(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality() {
        assert!(is_prime(DEFAULT_PRIME));
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_631));
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(PrimeField::new(15).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a = f.random(&mut rng);
            if let Some(b) = f.inv(&a) {
                assert_eq!(f.mul(&a, &b), 1);
            }
        }
        assert_eq!(f.from_i64(-1), DEFAULT_PRIME - 1);
    }

    #[test]
    fn binary_field_axioms() {
        let f = BinaryField;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
            assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            if a != 0 {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
            // Frobenius is additive in characteristic two
            assert_eq!(f.mul(&f.add(&a, &b), &f.add(&a, &b)), f.add(&f.mul(&a, &a), &f.mul(&b, &b)));
        }
    }

    #[test]
    fn rational_canonical() {
        let f = RationalField;
        let half = f.inv(&f.from_i64(-2)).unwrap();
        assert_eq!(rational_to_string(&half), "-1/2");
        assert!(half.denom().is_positive());
    }

    #[test]
    fn field_mode_parse() {
        assert_eq!(FieldMode::parse("rational").unwrap(), FieldMode::Rational);
        assert_eq!(FieldMode::parse("prime:2").unwrap(), FieldMode::Char2);
        assert_eq!(FieldMode::parse("prime:101").unwrap(), FieldMode::Prime(101));
        assert!(FieldMode::parse("prime:100").is_err());
        assert!(FieldMode::parse("real").is_err());
    }
}
