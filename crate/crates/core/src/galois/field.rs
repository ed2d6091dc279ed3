use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub const MAX_MODULUS: u64 = 1 << 31;

pub fn is_prime(n: u64) -> bool {
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

/// Validates `p` as a supported field characteristic.
pub fn check_prime(p: u64) -> Result<u32> {
    if p > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p as u32)
}

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    add_mod(a, p - b % p, p)
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
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

/// Multiplicative inverse by Fermat; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p as u64 - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
pub fn reduce_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// Binomial coefficient mod `p` via Lucas' theorem.
pub fn binomial_mod(mut n: u64, mut k: u64, p: u32) -> u32 {
    if k > n {
        return 0;
    }
    let pp = p as u64;
    let mut acc = 1u32;
    while k > 0 {
        let (ni, ki) = (n % pp, k % pp);
        if ki > ni {
            return 0;
        }
        acc = mul_mod(acc, small_binomial(ni, ki, p), p);
        n /= pp;
        k /= pp;
    }
    acc
}

fn small_binomial(n: u64, k: u64, p: u32) -> u32 {
    let mut num = 1u32;
    let mut den = 1u32;
    for i in 0..k {
        num = mul_mod(num, ((n - i) % p as u64) as u32, p);
        den = mul_mod(den, ((i + 1) % p as u64) as u32, p);
    }
    mul_mod(num, inv_mod(den, p), p)
}

/// An element of the prime field `F_p`, always fully reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpElem {
    value: u32,
    modulus: u32,
}

impl FpElem {
    pub fn new(value: i64, modulus: u32) -> Self {
        FpElem {
            value: reduce_i64(value, modulus),
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<Self> {
        (self.value != 0).then(|| FpElem {
            value: inv_mod(self.value, self.modulus),
            modulus: self.modulus,
        })
    }

    pub fn pow(self, e: u64) -> Self {
        FpElem {
            value: pow_mod(self.value, e, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Add for FpElem {
    type Output = FpElem;
    fn add(self, rhs: FpElem) -> FpElem {
        assert_eq!(self.modulus, rhs.modulus, "field mismatch");
        FpElem {
            value: add_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Sub for FpElem {
    type Output = FpElem;
    fn sub(self, rhs: FpElem) -> FpElem {
        assert_eq!(self.modulus, rhs.modulus, "field mismatch");
        FpElem {
            value: sub_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Mul for FpElem {
    type Output = FpElem;
    fn mul(self, rhs: FpElem) -> FpElem {
        assert_eq!(self.modulus, rhs.modulus, "field mismatch");
        FpElem {
            value: mul_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Neg for FpElem {
    type Output = FpElem;
    fn neg(self) -> FpElem {
        FpElem {
            value: sub_mod(0, self.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(check_prime(4), Err(Error::NotPrime(4)));
        assert!(matches!(check_prime(1 << 32), Err(Error::ModulusTooLarge(_))));
        assert_eq!(check_prime(2147483647), Ok(2147483647));
    }

    #[test]
    fn arithmetic_reduces() {
        let a = FpElem::new(2, 3);
        assert_eq!((a + a).value(), 1);
        assert_eq!((-a).value(), 1);
        assert_eq!(FpElem::new(-7, 5).value(), 3);
        assert_eq!(a.inverse().unwrap().value(), 2);
        assert_eq!(FpElem::new(0, 7).inverse(), None);
        // large modulus does not overflow
        let big = FpElem::new(2147483646, 2147483647);
        assert_eq!((big * big).value(), 1);
    }

    #[test]
    fn lucas_matches_pascal() {
        for p in [2u32, 3, 5, 7] {
            let mut row = vec![1u32];
            for n in 0..40u64 {
                for (k, &c) in row.iter().enumerate() {
                    assert_eq!(binomial_mod(n, k as u64, p), c, "C({n},{k}) mod {p}");
                }
                let mut next = vec![1u32; row.len() + 1];
                for k in 1..row.len() {
                    next[k] = (row[k - 1] + row[k]) % p;
                }
                row = next;
            }
        }
    }
}
