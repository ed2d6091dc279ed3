use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::galois::field::{add_mod, check_prime, mul_mod, sub_mod};
use crate::galois::{Monomial, Poly, PolyRing};

/// Largest number of generator pairs; the exterior part is a `u32` bitmask.
pub const MAX_GENERATORS: usize = 32;

/// The algebra `H^*(BV^m; F_p)` for an odd prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CohAlgebra {
    p: u32,
    m: usize,
}

/// `a_S · y^e`: bit `g−1` of `odd` marks `a_g`; `even[g−1]` is the exponent of `y_g`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CohMonomial {
    pub(crate) odd: u32,
    pub(crate) even: SmallVec<[u32; 8]>,
}

impl CohMonomial {
    /// Exterior generators, ascending and 1-based.
    pub fn odd(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_GENERATORS)
            .filter(move |b| self.odd >> b & 1 == 1)
            .map(|b| b + 1)
    }

    pub fn even(&self) -> &[u32] {
        &self.even
    }

    /// Topological degree `|S| + 2 Σ e`.
    pub fn degree(&self) -> u64 {
        self.odd.count_ones() as u64 + 2 * self.even.iter().map(|&e| e as u64).sum::<u64>()
    }
}

/// Sign of `a_S · a_T` after sorting, or `None` when `S ∩ T ≠ ∅`.
pub(crate) fn koszul_negative(s: u32, t: u32) -> Option<bool> {
    if s & t != 0 {
        return None;
    }
    let mut inversions = 0;
    let mut rest = t;
    while rest != 0 {
        let b = rest.trailing_zeros();
        inversions += (s >> b).count_ones();
        rest &= rest - 1;
    }
    Some(inversions % 2 == 1)
}

impl CohAlgebra {
    pub fn new(p: u64, m: usize) -> Result<Self> {
        let p = check_prime(p)?;
        if p == 2 {
            return Err(Error::Invalid("cohomology classes need an odd prime".into()));
        }
        if m == 0 || m > MAX_GENERATORS {
            return Err(Error::Invalid(format!(
                "number of generators must be in 1..={MAX_GENERATORS}"
            )));
        }
        Ok(CohAlgebra { p, m })
    }

    /// The algebra for `V^{2l}`.
    pub fn for_level(p: u64, l: usize) -> Result<Self> {
        Self::new(p, 2 * l)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn zero(&self) -> CohClass {
        CohClass {
            alg: *self,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: i64) -> CohClass {
        self.term(0, &vec![0; self.m], c)
    }

    pub fn one(&self) -> CohClass {
        self.constant(1)
    }

    pub(crate) fn term(&self, odd: u32, even: &[u32], c: i64) -> CohClass {
        let mut x = self.zero();
        let c = crate::galois::field::reduce_i64(c, self.p);
        if c != 0 {
            x.terms.insert(
                CohMonomial {
                    odd,
                    even: SmallVec::from_slice(even),
                },
                c,
            );
        }
        x
    }

    fn check_gen(&self, g: usize) {
        assert!((1..=self.m).contains(&g), "generator index {g} outside 1..={}", self.m);
    }

    /// The degree-1 generator `a_g`.
    pub fn odd(&self, g: usize) -> CohClass {
        self.check_gen(g);
        self.term(1 << (g - 1), &vec![0; self.m], 1)
    }

    /// The degree-2 generator `y_g = β(a_g)`.
    pub fn even(&self, g: usize) -> CohClass {
        self.check_gen(g);
        let mut e = vec![0; self.m];
        e[g - 1] = 1;
        self.term(0, &e, 1)
    }

    pub fn a(&self, k: usize) -> CohClass {
        self.odd(2 * k - 1)
    }

    pub fn b(&self, k: usize) -> CohClass {
        self.odd(2 * k)
    }

    pub fn xi(&self, k: usize) -> CohClass {
        self.even(2 * k - 1)
    }

    pub fn eta(&self, k: usize) -> CohClass {
        self.even(2 * k)
    }

    /// Polynomial ring on the even generators, named `xi1, eta1, xi2, eta2, …`.
    pub fn even_ring(&self) -> PolyRing {
        let names: Vec<String> = (1..=self.m)
            .map(|g| {
                if g % 2 == 1 {
                    format!("xi{}", g.div_ceil(2))
                } else {
                    format!("eta{}", g / 2)
                }
            })
            .collect();
        PolyRing::new(self.p as u64, &names).expect("p already validated")
    }

    /// The purely even class with the same exponents as `f`.
    pub fn from_even_poly(&self, f: &Poly) -> Result<CohClass> {
        if f.modulus() != self.p {
            return Err(Error::PrimeMismatch(self.p, f.modulus()));
        }
        if f.ring().arity() != self.m {
            return Err(Error::ArityMismatch {
                expected: self.m,
                got: f.ring().arity(),
            });
        }
        let mut x = self.zero();
        for (m, c) in f.raw_terms() {
            x.terms.insert(
                CohMonomial {
                    odd: 0,
                    even: SmallVec::from_slice(m.exponents()),
                },
                *c,
            );
        }
        Ok(x)
    }

    /// Random class with up to `max_terms` terms and even exponents `≤ max_exp`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, max_terms: usize, max_exp: u32) -> CohClass {
        let mut x = self.zero();
        for _ in 0..rng.gen_range(0..=max_terms) {
            let odd = rng.gen_range(0..1u64 << self.m) as u32;
            let even: Vec<u32> = (0..self.m).map(|_| rng.gen_range(0..=max_exp)).collect();
            let c = rng.gen_range(1..self.p) as i64;
            x = &x + &self.term(odd, &even, c);
        }
        x
    }

    /// Random homogeneous class of topological degree `degree`.
    pub fn random_homogeneous<R: Rng + ?Sized>(&self, rng: &mut R, degree: u64, max_terms: usize) -> CohClass {
        let mut x = self.zero();
        let odd_sizes: Vec<u32> = (0..=self.m as u32)
            .filter(|&s| s as u64 <= degree && (degree - s as u64).is_multiple_of(2))
            .collect();
        if odd_sizes.is_empty() {
            return x;
        }
        for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
            let size = odd_sizes[rng.gen_range(0..odd_sizes.len())];
            let mut bits: Vec<u32> = (0..self.m as u32).collect();
            let mut odd = 0u32;
            for _ in 0..size {
                let b = bits.swap_remove(rng.gen_range(0..bits.len()));
                odd |= 1 << b;
            }
            let mut even = vec![0u32; self.m];
            for _ in 0..(degree - size as u64) / 2 {
                even[rng.gen_range(0..self.m)] += 1;
            }
            x = &x + &self.term(odd, &even, rng.gen_range(1..self.p) as i64);
        }
        x
    }
}

/// Element of `H^*(BV^m; F_p)`, stored as a sparse map with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    pub(crate) alg: CohAlgebra,
    pub(crate) terms: BTreeMap<CohMonomial, u32>,
}

pub(crate) fn accumulate(terms: &mut BTreeMap<CohMonomial, u32>, key: CohMonomial, c: u32, p: u32) {
    if c == 0 {
        return;
    }
    match terms.get_mut(&key) {
        Some(v) => {
            *v = add_mod(*v, c, p);
            if *v == 0 {
                terms.remove(&key);
            }
        }
        None => {
            terms.insert(key, c);
        }
    }
}

impl CohClass {
    pub fn algebra(&self) -> CohAlgebra {
        self.alg
    }

    pub fn p(&self) -> u32 {
        self.alg.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CohMonomial, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// The common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(CohMonomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// The component of topological degree `d`.
    pub fn component(&self, d: u64) -> CohClass {
        CohClass {
            alg: self.alg,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.odd == 0)
    }

    fn check(&self, other: &CohClass) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &CohClass) -> Result<CohClass> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            accumulate(&mut terms, m.clone(), c, self.p());
        }
        Ok(CohClass { alg: self.alg, terms })
    }

    pub fn try_sub(&self, other: &CohClass) -> Result<CohClass> {
        self.try_add(&-other)
    }

    /// Koszul-signed product: `a_g a_g = 0`, `a_g a_h = −a_h a_g`, even classes central.
    pub fn try_mul(&self, other: &CohClass) -> Result<CohClass> {
        self.check(other)?;
        let p = self.p();
        let mut terms = BTreeMap::new();
        for (x, &c) in &self.terms {
            for (y, &d) in &other.terms {
                let Some(negative) = koszul_negative(x.odd, y.odd) else {
                    continue;
                };
                let even = x.even.iter().zip(&y.even).map(|(a, b)| a + b).collect();
                let c = mul_mod(c, d, p);
                let c = if negative { sub_mod(0, c, p) } else { c };
                accumulate(
                    &mut terms,
                    CohMonomial {
                        odd: x.odd | y.odd,
                        even,
                    },
                    c,
                    p,
                );
            }
        }
        Ok(CohClass { alg: self.alg, terms })
    }

    pub fn scale(&self, c: i64) -> CohClass {
        let c = crate::galois::field::reduce_i64(c, self.p());
        let terms = if c == 0 {
            BTreeMap::new()
        } else {
            self.terms
                .iter()
                .map(|(m, &v)| (m.clone(), mul_mod(v, c, self.p())))
                .collect()
        };
        CohClass { alg: self.alg, terms }
    }

    /// The same class as a polynomial in `xi1, eta1, …`; degrees are halved.
    pub fn even_to_poly(&self) -> Result<Poly> {
        if !self.is_even() {
            return Err(Error::OddPartPresent);
        }
        let ring = self.alg.even_ring();
        let terms = self.terms.iter().map(|(m, &c)| (Monomial::new(&m.even), c)).collect();
        Ok(ring.from_terms(terms))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CohClass> for &CohClass {
            type Output = CohClass;
            fn $method(self, rhs: &CohClass) -> CohClass {
                self.$checked(rhs).expect("cohomology context mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        self.scale(-1)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::serialize(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_signs() {
        let alg = CohAlgebra::new(3, 3).unwrap();
        let (a1, a2) = (alg.odd(1), alg.odd(2));
        assert!((&a1 * &a1).is_zero());
        assert!((&(&a1 * &a2) + &(&a2 * &a1)).is_zero());
        let (x, y) = (alg.even(1), alg.even(2));
        assert_eq!(&x * &y, &y * &x);
        assert_eq!(&a1 * &x, &x * &a1);
        let a3 = alg.odd(3);
        assert_eq!(&(&a3 * &a1) * &a2, &(&a1 * &a2) * &a3);
        assert_eq!(&(&a2 * &a1) * &a3, -&(&(&a1 * &a2) * &a3));
    }

    #[test]
    fn degrees_and_components() {
        let alg = CohAlgebra::new(5, 2).unwrap();
        let x = &(&alg.a(1) * &alg.eta(1)) + &alg.xi(1);
        assert_eq!(x.homogeneous_degree(), None);
        assert_eq!(x.component(3), &alg.a(1) * &alg.eta(1));
        assert_eq!(x.component(2), alg.xi(1));
        assert!(alg.zero().component(0).is_zero());
    }

    #[test]
    fn even_poly_round_trip() {
        let alg = CohAlgebra::new(3, 2).unwrap();
        let ring = alg.even_ring();
        assert_eq!(ring.names(), ["xi1", "eta1"]);
        let f = crate::galois::parse(&ring, "xi1^3*eta1 + 2*xi1*eta1^3").unwrap();
        let x = alg.from_even_poly(&f).unwrap();
        assert_eq!(x.even_to_poly().unwrap(), f);
        assert!(alg.zero().even_to_poly().unwrap().is_zero());
        assert_eq!(alg.a(1).even_to_poly(), Err(Error::OddPartPresent));
    }

    #[test]
    fn context_checks() {
        let a = CohAlgebra::new(3, 2).unwrap();
        let b = CohAlgebra::new(3, 4).unwrap();
        assert_eq!(a.one().try_mul(&b.one()), Err(Error::ContextMismatch));
        assert!(CohAlgebra::new(2, 2).is_err());
        assert!(CohAlgebra::new(3, 33).is_err());
    }

    #[test]
    fn random_homogeneous_has_requested_degree() {
        use rand::SeedableRng;
        let alg = CohAlgebra::new(3, 4).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for d in 1..9 {
            let x = alg.random_homogeneous(&mut rng, d, 4);
            assert!(x.is_zero() || x.homogeneous_degree() == Some(d));
        }
    }
}
