use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Rational};

/// Univariate polynomial, coefficients lowest degree first, trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| F::from_i64(x)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![F::one()] }
    }

    /// `x - root`
    pub fn linear(root: F) -> Self {
        Self::new(vec![-root, F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &[F], i: usize| v.get(i).cloned().unwrap_or_else(F::zero);
        Self::new((0..n).map(|i| get(&self.coeffs, i) + get(&o.coeffs, i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut q = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = rem[k].clone() / lead.clone();
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k - dd + i].sub_mul_assign(&c, dc);
                }
                q[k - dd] = c;
            }
            rem.pop();
        }
        (Self::new(q), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(F::one() / l.clone())),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All rational roots of a nonzero polynomial, ascending, without multiplicity.
pub fn rational_roots(p: &Polynomial<Rational>) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(rational_roots_unchecked(p))
}

/// Trial division bound for splitting the end coefficients into primes.
const TRIAL_LIMIT: u64 = 1 << 20;

pub(crate) fn rational_roots_unchecked(p: &Polynomial<Rational>) -> Vec<Rational> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // Strip the factor x^k.
    let shift = p.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut q = Polynomial::new(p.coeffs[shift..].to_vec());
    if shift > 0 {
        roots.push(Rational::zero());
    }
    if q.degree() == Some(0) {
        return roots;
    }
    // Rational roots of q are roots of its square-free part.
    let g = q.gcd(&q.derivative());
    if g.degree().unwrap_or(0) > 0 {
        q = q.div_rem(&g).0;
    }
    let ints = primitive_integer_coeffs(&q);
    let lead = ints.last().expect("nonzero").abs();
    let trail = ints[0].abs();
    // Cauchy bound on root magnitudes.
    let bound = {
        let l = BigRational::from_integer(lead.clone());
        ints.iter().map(|c| BigRational::from_integer(c.abs()) / l.clone()).max().unwrap()
            + BigRational::one()
    };
    let nums = divisors(&trail);
    let dens = divisors(&lead);
    for d in &dens {
        for n in &nums {
            if n.gcd(d) != BigInt::one() {
                continue;
            }
            let cand = BigRational::new(n.clone(), d.clone());
            if cand > bound {
                continue;
            }
            for c in [cand.clone(), -cand] {
                if q.eval(&c).is_zero() {
                    roots.push(c);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Integer coefficients with gcd 1 and positive leading coefficient, proportional to `p`.
fn primitive_integer_coeffs(p: &Polynomial<Rational>) -> Vec<BigInt> {
    let l = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut ints {
            *c = &*c / &g;
        }
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    ints
}

/// Positive divisors of `n > 0`. Primes up to `TRIAL_LIMIT` are split off exactly; an
/// unfactored cofactor above `TRIAL_LIMIT²` is treated as a single atom.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut rest = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d: u64 = 2;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn roots_of_simple_polynomials() {
        assert_eq!(rational_roots(&P::from_ints(&[0, -1, 1])).unwrap(), vec![r(0, 1), r(1, 1)]);
        // (2x - 3)(x + 5)^2 (x^2 + 1)
        let p = P::from_ints(&[-3, 2])
            .mul(&P::from_ints(&[5, 1]))
            .mul(&P::from_ints(&[5, 1]))
            .mul(&P::from_ints(&[1, 0, 1]));
        assert_eq!(rational_roots(&p).unwrap(), vec![r(-5, 1), r(3, 2)]);
        assert!(rational_roots(&P::from_ints(&[1, 0, 1])).unwrap().is_empty());
        assert!(rational_roots(&P::from_ints(&[7])).unwrap().is_empty());
        assert!(rational_roots(&P::zero()).is_err());
    }

    #[test]
    fn roots_with_rational_coefficients() {
        // (x - 1/3)(x + 2/7)
        let p = P::linear(r(1, 3)).mul(&P::linear(r(-2, 7)));
        assert_eq!(rational_roots(&p).unwrap(), vec![r(-2, 7), r(1, 3)]);
    }

    #[test]
    fn roots_with_large_prime_constant() {
        // x - 1000003 : the constant term is a prime above the trial limit's square root.
        let p = P::linear(r(1_000_003, 1)).mul(&P::from_ints(&[1, 1, 1]));
        assert_eq!(rational_roots(&p).unwrap(), vec![r(1_000_003, 1)]);
    }

    #[test]
    fn division_and_gcd() {
        let a = P::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = P::from_ints(&[1, 1]); // x + 1
        let (q, rem) = a.div_rem(&b);
        assert_eq!(q, P::from_ints(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(a.gcd(&P::from_ints(&[-1, 1]).mul(&P::from_ints(&[2, 1]))), P::from_ints(&[-1, 1]));
        assert_eq!(P::from_ints(&[1, 2, 3]).derivative(), P::from_ints(&[2, 6]));
    }
}
