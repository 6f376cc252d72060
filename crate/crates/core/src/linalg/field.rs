use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Largest supported prime modulus. The lazy-reduction elimination kernel
/// accumulates up to `2^16` unreduced products of residues, so `p^2 * 2^16`
/// must stay below `2^64`.
pub const MAX_PRIME: u64 = 1 << 20;

/// A ground field: `F_p` for a prime `p`, or the rationals.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Prime(u64),
    Rationals,
}

/// An exact field element. `Fp` values are canonical residues in `0..p`;
/// the owning [`Field`] supplies the modulus for arithmetic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Fp(u64),
    Rat(BigRational),
}

impl Field {
    pub fn prime(p: u64) -> Field {
        assert!(p >= 2 && p < MAX_PRIME && is_prime(p), "modulus must be a prime below 2^20");
        Field::Prime(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(1),
            Field::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
            Field::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(x * y % p),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                Scalar::Fp(super::fp::inv_mod(*x, *p))
            }
            (Field::Rationals, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    /// A deterministic pseudo-random element drawn from the seeded stream.
    /// Over the rationals this draws small integers, which is all the
    /// witness searches need.
    pub fn random(&self, rng: &mut crate::rng::Rng) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp(rng.below(*p)),
            Field::Rationals => self.from_i64(rng.below(201) as i64 - 100),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F{p}"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(v) => write!(f, "{v}"),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl Scalar {
    /// Signed display helper: true when the scalar is "negative" in the
    /// usual sense (only meaningful for rationals and for residues > p/2,
    /// which stay positive). Used by pretty-printers.
    pub fn is_negative_rat(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic_is_canonical() {
        let f = Field::prime(101);
        let a = f.from_i64(-1);
        assert_eq!(a, Scalar::Fp(100));
        assert_eq!(f.add(&a, &f.one()), Scalar::Fp(0));
        assert_eq!(f.mul(&f.inv(&Scalar::Fp(2)), &Scalar::Fp(2)), f.one());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::Rationals;
        let third = f.inv(&f.from_i64(3));
        let one = f.mul(&third, &f.from_i64(3));
        assert_eq!(one, f.one());
    }

    #[test]
    #[should_panic]
    fn composite_modulus_rejected() {
        Field::prime(91);
    }
}
