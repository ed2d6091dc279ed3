use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An element of `Z[ω]`, `ω` a primitive p-th root of unity, in the power
/// basis `1, ω, …, ω^{p−2}`.
///
/// Products are reduced with `ω^{p−1} = −(1 + ω + ⋯ + ω^{p−2})`, so two values
/// are equal exactly when their coordinates are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u32,
    coords: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        assert!(p >= 3 && p % 2 == 1, "cyclotomic prime must be odd");
        CycInt {
            p,
            coords: vec![BigInt::zero(); p as usize - 1],
        }
    }

    pub fn from_int(p: u32, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(p);
        z.coords[0] = n.into();
        z
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    /// `ω^k`, `k` taken mod p.
    pub fn omega_pow(p: u32, k: i64) -> Self {
        let mut full = vec![BigInt::zero(); p as usize];
        full[k.rem_euclid(p as i64) as usize] = BigInt::one();
        Self::reduce(p, full)
    }

    /// Reduces coefficients of `1, ω, …, ω^{p−1}` modulo the cyclotomic polynomial.
    fn reduce(p: u32, mut full: Vec<BigInt>) -> Self {
        debug_assert_eq!(full.len(), p as usize);
        let top = full.pop().expect("p >= 3");
        if !top.is_zero() {
            for c in &mut full {
                *c -= &top;
            }
        }
        CycInt { p, coords: full }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.p)
    }

    fn check(&self, other: &CycInt) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::PrimeMismatch(self.p, other.p))
        }
    }

    pub fn try_add(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(CycInt { p: self.p, coords })
    }

    pub fn try_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(CycInt { p: self.p, coords })
    }

    pub fn try_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coords.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                full[(i + j) % p] += a * b;
            }
        }
        Ok(Self::reduce(self.p, full))
    }

    pub fn pow(&self, mut e: u64) -> CycInt {
        let mut acc = Self::one(self.p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplication by `ω^k`, a cyclic shift before reduction.
    pub fn mul_omega_pow(&self, k: i64) -> CycInt {
        let p = self.p as usize;
        let shift = k.rem_euclid(p as i64) as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, c) in self.coords.iter().enumerate() {
            full[(i + shift) % p] = c.clone();
        }
        Self::reduce(self.p, full)
    }

    /// The Galois conjugate under `ω ↦ ω^k`, `k` a unit mod p.
    pub fn conjugate(&self, k: u32) -> CycInt {
        assert!(!k.is_multiple_of(self.p), "Galois conjugation needs a unit exponent");
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, c) in self.coords.iter().enumerate() {
            full[(i * k as usize) % p] += c;
        }
        Self::reduce(self.p, full)
    }

    /// Field norm to `Q`: the product of all `p − 1` conjugates.
    pub fn norm(&self) -> BigInt {
        let prod = (1..self.p).fold(Self::one(self.p), |acc, k| &acc * &self.conjugate(k));
        debug_assert!(prod.coords[1..].iter().all(Zero::is_zero), "norm must be rational");
        prod.coords[0].clone()
    }

    /// `self / divisor` when the quotient lies in `Z[ω]`.
    pub fn div_exact(&self, divisor: &CycInt) -> Result<CycInt> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::Invalid("division by zero in Z[ω]".into()));
        }
        // a / b = a · ∏_{k≠1} σ_k(b) / N(b)
        let cofactor = (2..self.p).fold(Self::one(self.p), |acc, k| &acc * &divisor.conjugate(k));
        let numerator = self * &cofactor;
        let norm = divisor.norm();
        let mut coords = Vec::with_capacity(numerator.coords.len());
        for c in &numerator.coords {
            let (q, r) = c.div_rem(&norm);
            if !r.is_zero() {
                return Err(Error::Invalid("quotient is not an algebraic integer".into()));
            }
            coords.push(q);
        }
        Ok(CycInt { p: self.p, coords })
    }

    /// `Some(k)` with `0 ≤ k < p` if `self = ω^k`.
    pub fn as_omega_power(&self) -> Option<u32> {
        (0..self.p).find(|&k| *self == Self::omega_pow(self.p, k as i64))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycInt> for &CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                self.$checked(rhs).expect("cyclotomic prime mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            p: self.p,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.sign() == Sign::Minus { "-" } else { "+" };
            let mag = c.magnitude();
            match (first, sign) {
                (true, "+") => {}
                (true, _) => f.write_str("-")?,
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("w")?,
                1 => write!(f, "{mag}*w")?,
                _ if unit => write!(f, "w^{i}")?,
                _ => write!(f, "{mag}*w^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_relations() {
        for p in [3u32, 5, 7] {
            let w = CycInt::omega_pow(p, 1);
            assert!((&w * &CycInt::omega_pow(p, p as i64 - 1)).is_one());
            let sum = (0..p).fold(CycInt::zero(p), |acc, k| &acc + &CycInt::omega_pow(p, k as i64));
            assert!(sum.is_zero());
            assert!(w.pow(p as u64).is_one());
            for k in 1..p {
                assert!(!w.pow(k as u64).is_one(), "ω has order exactly p");
            }
            for (a, b) in [(1, 2), (p - 1, p - 1), (3, p - 2)] {
                let lhs = &CycInt::omega_pow(p, a as i64) * &CycInt::omega_pow(p, b as i64);
                assert_eq!(lhs, CycInt::omega_pow(p, ((a + b) % p) as i64));
                assert_eq!(lhs.as_omega_power(), Some((a + b) % p));
            }
        }
    }

    #[test]
    fn norm_and_exact_division() {
        let p = 5;
        let one_minus_w = &CycInt::one(p) - &CycInt::omega_pow(p, 1);
        assert_eq!(one_minus_w.norm(), BigInt::from(5));
        let five = CycInt::from_int(p, 5);
        let q = five.div_exact(&one_minus_w).unwrap();
        assert_eq!(&q * &one_minus_w, five);
        assert!(CycInt::one(p).div_exact(&CycInt::from_int(p, 2)).is_err());
        assert!(CycInt::one(3).try_add(&CycInt::one(5)).is_err());
    }

    #[test]
    fn shift_matches_multiplication() {
        let p = 7;
        let x = &(&CycInt::from_int(p, 3) + &CycInt::omega_pow(p, 4)) - &CycInt::omega_pow(p, 6);
        for k in -3..10 {
            assert_eq!(x.mul_omega_pow(k), &x * &CycInt::omega_pow(p, k));
        }
        assert_eq!(CycInt::from_int(p, 2).as_omega_power(), None);
        assert_eq!((-&x).to_string(), "-4 - w - w^2 - w^3 - 2*w^4 - w^5");
        assert_eq!(x.to_string(), "4 + w + w^2 + w^3 + 2*w^4 + w^5");
    }
}
