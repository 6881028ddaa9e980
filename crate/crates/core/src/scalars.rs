//! Exact scalar arithmetic.
//!
//! The algebra engine works over a prime field `F_p` together with a chosen
//! element `xi` of exact multiplicative order `e`. Rationals are available for
//! parameter sets with `e = 0`, where `xi` has infinite order.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted; keeps products of two residues inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut k = 3;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

/// Arithmetic in `Z/pZ` on canonical representatives `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::param(format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::param(format!("prime {p} exceeds the supported bound {MAX_PRIME}")));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(Error::Arithmetic("inverse of zero".into()));
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// `a^k` for a possibly negative exponent.
    pub fn pow_signed(&self, a: u64, k: i64) -> Result<u64> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            Ok(self.pow(self.inv(a)?, k.unsigned_abs()))
        }
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Signed representative in `(-p/2, p/2]`, handy for display.
    pub fn to_signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn order(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        let mut x = a % self.p;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }
}

/// Smallest `2 <= xi < p` whose multiplicative order is exactly `e`.
pub fn find_xi(p: u64, e: u32) -> Result<u64> {
    let field = PrimeField::new(p)?;
    if e < 2 {
        return Err(Error::param(format!(
            "quantum characteristic e = {e} is not allowed over F_{p}: xi must differ from 1, so e >= 2"
        )));
    }
    if !(p - 1).is_multiple_of(e as u64) {
        return Err(Error::param(format!("e = {e} does not divide p - 1 = {}", p - 1)));
    }
    (2..p)
        .find(|&x| field.order(x) == Some(e as u64))
        .ok_or_else(|| Error::param(format!("no element of order {e} in F_{p}")))
}

/// Smallest prime `p >= 5` with `p = 1 (mod e)`.
pub fn default_prime(e: u32) -> Result<u64> {
    if e < 2 {
        return Err(Error::param(format!("no default prime for e = {e}; need e >= 2")));
    }
    let mut p = 5u64;
    loop {
        if is_prime(p) && (p - 1).is_multiple_of(e as u64) {
            return Ok(p);
        }
        p += 1;
        if p > MAX_PRIME {
            return Err(Error::param(format!("no supported prime for e = {e}")));
        }
    }
}

/// Ground field together with the Hecke parameter `xi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime { field: PrimeField, e: u32, xi: u64 },
    Rational { xi: BigRational },
}

impl FieldSpec {
    /// Prime field with `xi` chosen by [`find_xi`].
    pub fn prime(p: u64, e: u32) -> Result<Self> {
        let xi = find_xi(p, e)?;
        Ok(FieldSpec::Prime { field: PrimeField::new(p)?, e, xi })
    }

    /// Prime field with a caller-chosen `xi`; `e` is its order.
    pub fn prime_with_xi(p: u64, xi: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let xi = xi % p;
        let e = field
            .order(xi)
            .ok_or_else(|| Error::param("xi must be nonzero"))?;
        if e < 2 {
            return Err(Error::param("xi must differ from 1"));
        }
        Ok(FieldSpec::Prime { field, e: e as u32, xi })
    }

    pub fn rational(xi: BigRational) -> Result<Self> {
        if xi.abs() == BigRational::one() || xi.is_zero() {
            return Err(Error::param(format!(
                "rational xi = {xi} must have |xi| not in {{0, 1}} so that e = 0"
            )));
        }
        Ok(FieldSpec::Rational { xi })
    }

    /// Prime field with the default prime for `e >= 2`; rationals with
    /// `xi = 2` for `e = 0`.
    pub fn default_for_e(e: u32) -> Result<Self> {
        match e {
            0 => Self::rational(BigRational::from_integer(BigInt::from(2))),
            1 => Err(Error::param("e = 1 would force xi = 1")),
            _ => Self::prime(default_prime(e)?, e),
        }
    }

    pub fn e(&self) -> u32 {
        match self {
            FieldSpec::Prime { e, .. } => *e,
            FieldSpec::Rational { .. } => 0,
        }
    }

    pub fn xi(&self) -> Scalar {
        match self {
            FieldSpec::Prime { field, xi, .. } => Scalar::Prime { value: *xi, p: field.p() },
            FieldSpec::Rational { xi } => Scalar::Rational(xi.clone()),
        }
    }

    pub fn prime_field(&self) -> Option<(PrimeField, u64)> {
        match self {
            FieldSpec::Prime { field, xi, .. } => Some((*field, *xi)),
            FieldSpec::Rational { .. } => None,
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Prime { field, .. } => Scalar::Prime { value: field.from_i64(v), p: field.p() },
            FieldSpec::Rational { .. } => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
        }
    }
}

/// A single field element, tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Prime { value: u64, p: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn prime(value: i64, p: u64) -> Self {
        Scalar::Prime { value: value.rem_euclid(p as i64) as u64, p }
    }

    pub fn rational(numer: i64, denom: i64) -> Self {
        Scalar::Rational(BigRational::new(numer.into(), denom.into()))
    }

    fn zip<F, G>(&self, other: &Scalar, fp: F, fq: G) -> Scalar
    where
        F: Fn(PrimeField, u64, u64) -> u64,
        G: Fn(&BigRational, &BigRational) -> BigRational,
    {
        match (self, other) {
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: q }) if p == q => {
                let field = PrimeField { p: *p };
                Scalar::Prime { value: fp(field, *a, *b), p: *p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(fq(a, b)),
            _ => panic!("scalar arithmetic across different fields: {self} and {other}"),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.zip(other, |f, a, b| f.add(a, b), |a, b| a + b)
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.zip(other, |f, a, b| f.sub(a, b), |a, b| a - b)
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.zip(other, |f, a, b| f.mul(a, b), |a, b| a * b)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Prime { value, p } => Scalar::Prime { value: PrimeField { p: *p }.neg(*value), p: *p },
            Scalar::Rational(a) => Scalar::Rational(-a),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Rational(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Rational(a) => a.is_one(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::Arithmetic("inverse of zero".into()));
        }
        Ok(match self {
            Scalar::Prime { value, p } => Scalar::Prime { value: PrimeField { p: *p }.inv(*value)?, p: *p },
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
        })
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = match self {
            Scalar::Prime { p, .. } => Scalar::Prime { value: 1, p: *p },
            Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
        };
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Prime { value, p } => write!(f, "{value} (mod {p})"),
            Scalar::Rational(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Order of x computed by repeated multiplication, independent of PrimeField::order.
    fn naive_order(x: u64, p: u64) -> u64 {
        let mut k = 1;
        let mut y = x % p;
        while y != 1 {
            y = y * x % p;
            k += 1;
        }
        k
    }

    #[test]
    fn find_xi_examples() {
        assert_eq!(find_xi(7, 3).unwrap(), 2);
        assert_eq!(find_xi(5, 2).unwrap(), 4);
        assert!(matches!(find_xi(5, 1), Err(Error::Parameter(_))));
        let err = find_xi(7, 4).unwrap_err().to_string();
        assert!(err.contains('4') && err.contains('6'), "{err}");
    }

    #[test]
    fn find_xi_is_smallest_of_exact_order() {
        for p in [5u64, 7, 11, 13, 17, 29, 31, 37, 41, 97, 101] {
            for e in 2..p as u32 {
                if (p - 1) % e as u64 != 0 {
                    continue;
                }
                let xi = find_xi(p, e).unwrap();
                assert_eq!(naive_order(xi, p), e as u64);
                for smaller in 2..xi {
                    assert_ne!(naive_order(smaller, p), e as u64);
                }
            }
        }
    }

    #[test]
    fn field_ops_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(3, 4), 2);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(2).unwrap(), 4);
        assert!(f7.inv(0).is_err());
        let half = Scalar::rational(2, 1).inv().unwrap();
        assert_eq!(half, Scalar::rational(1, 2));
        assert!(Scalar::rational(0, 1).inv().is_err());
        assert_eq!(Scalar::prime(3, 5).add(&Scalar::prime(4, 5)), Scalar::prime(2, 5));
    }

    #[test]
    fn inverses_exhaustive_small_primes() {
        for p in (2..=101).filter(|&p| is_prime(p)) {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn default_primes() {
        assert_eq!(default_prime(2).unwrap(), 5);
        assert_eq!(default_prime(3).unwrap(), 7);
        assert_eq!(default_prime(4).unwrap(), 5);
        assert_eq!(default_prime(5).unwrap(), 11);
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::rational(BigRational::one()).is_err());
        assert!(FieldSpec::rational(-BigRational::one()).is_err());
        assert_eq!(FieldSpec::default_for_e(0).unwrap().e(), 0);
        assert_eq!(FieldSpec::prime_with_xi(7, 2).unwrap().e(), 3);
        assert!(FieldSpec::prime_with_xi(7, 1).is_err());
    }

    proptest::proptest! {
        #[test]
        fn rational_inverse(n in -1000i64..1000, d in 1i64..1000) {
            proptest::prop_assume!(n != 0);
            let a = Scalar::rational(n, d);
            proptest::prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }
}
