//! Scalar fields: the rationals with unbounded integers, and small prime fields.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linalg::Polynomial;

/// Exact rational scalar. Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// An exact field. Arithmetic never rounds.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// 0 for the rationals, `p` for 𝔽_p.
    fn characteristic() -> u64;

    fn from_i64(n: i64) -> Self;

    /// `self -= a * b`, the inner step of elimination.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.clone() - a.clone() * b.clone();
    }

    /// All roots of `p` lying in the field, ascending, without multiplicity.
    fn roots(p: &Polynomial<Self>) -> Vec<Self>;

    /// Every element, for finite fields.
    fn elements() -> Option<Vec<Self>> {
        None
    }
}

impl Field for Rational {
    fn characteristic() -> u64 {
        0
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self -= a * b;
    }

    fn roots(p: &Polynomial<Self>) -> Vec<Self> {
        crate::linalg::poly::rational_roots_unchecked(p)
    }
}

/// Parses the shared rational literal syntax: optional sign, integer, optional `/denominator`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n = BigInt::from_str(num.strip_prefix('+').unwrap_or(num)).ok()?;
    let d = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let d = BigInt::from_str(d).ok()?;
            if d.is_zero() {
                return None;
            }
            d
        }
        None => BigInt::one(),
    };
    Some(BigRational::new(n, d))
}

/// Element of the prime field 𝔽_P, stored as its least non-negative residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(P >= 2 && P <= 7 && P != 4 && P != 6, "only p in 2, 3, 5, 7");

    pub fn new(n: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Fp(n.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{P}");
        // Fermat inverse.
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }

    fn roots(p: &Polynomial<Self>) -> Vec<Self> {
        if p.is_zero() {
            return Vec::new();
        }
        (0..P).map(Fp).filter(|x| p.eval(x).is_zero()).collect()
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-3/4"), Some(BigRational::new((-3).into(), 4.into())));
        assert_eq!(parse_rational("5"), Some(Rational::from_i64(5)));
        assert_eq!(parse_rational("+2/4"), Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(parse_rational("6/-3"), None);
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("-"), None);
    }

    #[test]
    fn rationals_are_reduced() {
        let q = parse_rational("-6/8").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(4));
        assert_eq!(q.to_string(), "-3/4");
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = F7::new(3);
        let b = F7::new(5);
        assert_eq!(a + b, F7::new(1));
        assert_eq!(a - b, F7::new(5));
        assert_eq!(a * b, F7::new(1));
        assert_eq!(a / b, F7::new(2));
        assert_eq!(-a, F7::new(4));
        assert_eq!(F2::new(-1), F2::one());
        for x in 1..5 {
            let x = F5::new(x);
            assert_eq!(x * (F5::one() / x), F5::one());
        }
    }
}
