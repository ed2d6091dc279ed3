use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::field::{self, add_mod, check_prime, inv_mod, mul_mod, sub_mod, FpElem};
use crate::error::{Error, Result};

/// Number of pairwise term products above which multiplication is split across threads.
const PAR_MUL_THRESHOLD: usize = 1 << 15;
/// Cap on the pre-sized accumulator; sparse products collide heavily.
const MUL_PREALLOC: usize = 1 << 16;

pub type Exponents = SmallVec<[u32; 8]>;

/// Exponent vector of a monomial, one entry per ring variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the first variable, then the second, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn new(exponents: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Panics if an exponent overflows `u32`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    fn scale_exponents(&self, factor: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&e| e.checked_mul(factor).expect("exponent overflow in Frobenius"))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug)]
struct RingData {
    modulus: u32,
    names: Vec<String>,
}

/// The ring `F_p[x_1, ..., x_n]` with named variables.
#[derive(Clone, Debug)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.modulus == other.0.modulus && self.0.names == other.0.names)
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new<S: AsRef<str>>(p: u64, names: &[S]) -> Result<Self> {
        let modulus = check_prime(p)?;
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Invalid(format!("bad variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::Invalid(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(PolyRing(Arc::new(RingData { modulus, names })))
    }

    /// Ring with variables `{prefix}1 .. {prefix}n`.
    pub fn numbered(p: u64, prefix: &str, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(p, &names)
    }

    pub fn modulus(&self) -> u32 {
        self.0.modulus
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn arity(&self) -> usize {
        self.0.names.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> Poly {
        Poly {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Poly {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Poly {
        self.monomial(&vec![0; self.arity()], c)
    }

    pub fn var(&self, index: usize) -> Poly {
        assert!(index < self.arity(), "variable index {index} out of range");
        let mut exps = vec![0; self.arity()];
        exps[index] = 1;
        self.monomial(&exps, 1)
    }

    pub fn monomial(&self, exponents: &[u32], c: i64) -> Poly {
        assert_eq!(exponents.len(), self.arity(), "monomial arity mismatch");
        let c = field::reduce_i64(c, self.modulus());
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(Monomial::new(exponents), c)]
        };
        Poly {
            ring: self.clone(),
            terms,
        }
    }

    /// `Σ coeffs[i] * x_i`.
    pub fn linear_form(&self, coeffs: &[i64]) -> Poly {
        assert_eq!(coeffs.len(), self.arity(), "linear form arity mismatch");
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let mut m = Monomial::one(self.arity());
                m.0[i] = 1;
                (m, field::reduce_i64(c, self.modulus()))
            })
            .collect();
        Poly::from_terms(self.clone(), terms)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(&self, terms: Vec<(Monomial, u32)>) -> Poly {
        Poly::from_terms(self.clone(), terms)
    }

    /// A random polynomial with up to `max_terms` terms and exponents below `max_exp`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, max_terms: usize, max_exp: u32) -> Poly {
        let count = rng.gen_range(0..=max_terms);
        let terms = (0..count)
            .map(|_| {
                let exps: Exponents = (0..self.arity()).map(|_| rng.gen_range(0..max_exp)).collect();
                (Monomial(exps), rng.gen_range(0..self.modulus()))
            })
            .collect();
        self.from_terms(terms)
    }
}

/// A sparse polynomial over `F_p`.
///
/// Terms are kept in strictly descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: PolyRing,
    terms: Vec<(Monomial, u32)>,
}

impl Poly {
    fn from_terms(ring: PolyRing, terms: Vec<(Monomial, u32)>) -> Poly {
        let p = ring.modulus();
        let mut acc: FxHashMap<Monomial, u32> = FxHashMap::default();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity mismatch");
            let slot = acc.entry(m).or_insert(0);
            *slot = add_mod(*slot, c % p, p);
        }
        Poly::from_map(ring, acc)
    }

    fn from_map(ring: PolyRing, map: FxHashMap<Monomial, u32>) -> Poly {
        let mut terms: Vec<(Monomial, u32)> = map.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.par_sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { ring, terms }
    }

    /// Terms already in canonical order; only the zero filter is applied.
    fn from_sorted(ring: PolyRing, terms: Vec<(Monomial, u32)>) -> Poly {
        let terms = terms.into_iter().filter(|(_, c)| *c != 0).collect();
        Poly { ring, terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn modulus(&self) -> u32 {
        self.ring.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FpElem)> + '_ {
        let p = self.modulus();
        self.terms.iter().map(move |(m, c)| (m, FpElem::new(*c as i64, p)))
    }

    pub(crate) fn raw_terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> FpElem {
        let c = self
            .terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0);
        FpElem::new(c as i64, self.modulus())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, FpElem)> {
        self.terms().next()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.0[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some() || self.is_zero()
    }

    /// The common total degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        self.weighted_homogeneous_degree(&vec![1; self.ring.arity()])
    }

    /// The common weighted degree of all terms under `weights`, if there is one.
    pub fn weighted_homogeneous_degree(&self, weights: &[u64]) -> Option<u64> {
        let mut degrees = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let p = self.modulus();
        let fix = |c: u32| if negate { sub_mod(0, c, p) } else { c };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), fix(b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = add_mod(a.1, fix(b.1), p);
                    if c != 0 {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), fix(*c))));
        Poly::from_sorted(self.ring.clone(), out)
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, *c);
        }
        let p = self.modulus();
        let accumulate = |chunk: &[(Monomial, u32)]| {
            let mut acc: FxHashMap<Monomial, u32> =
                FxHashMap::with_capacity_and_hasher((chunk.len() * small.len()).min(MUL_PREALLOC), Default::default());
            for (ma, ca) in chunk {
                for (mb, cb) in &small.terms {
                    let slot = acc.entry(ma.mul(mb)).or_insert(0);
                    *slot = add_mod(*slot, mul_mod(*ca, *cb, p), p);
                }
            }
            acc
        };
        let work = big.len() * small.len();
        let map = if work < PAR_MUL_THRESHOLD || rayon::current_num_threads() == 1 {
            accumulate(&big.terms)
        } else {
            let chunk = big.len().div_ceil(rayon::current_num_threads() * 4).max(1);
            big.terms
                .par_chunks(chunk)
                .map(accumulate)
                .reduce(FxHashMap::default, |a, b| {
                    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                    for (m, c) in small {
                        let slot = big.entry(m).or_insert(0);
                        *slot = add_mod(*slot, c, p);
                    }
                    big
                })
        };
        Poly::from_map(self.ring.clone(), map)
    }

    /// Multiplication by a single term keeps the order, so no re-sort is needed.
    fn mul_term(&self, m: &Monomial, c: u32) -> Poly {
        let p = self.modulus();
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), mul_mod(*d, c, p))).collect();
        Poly::from_sorted(self.ring.clone(), terms)
    }

    pub fn scale(&self, c: i64) -> Poly {
        let c = field::reduce_i64(c, self.modulus());
        self.mul_term(&Monomial::one(self.ring.arity()), c)
    }

    /// `self^e`, splitting `e` into base-p digits so that each digit's
    /// `p^k`-th power is a cheap Frobenius twist.
    pub fn pow(&self, e: u64) -> Poly {
        let p = self.modulus() as u64;
        if p > 64 {
            return self.pow_binary(e);
        }
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            let digit = e % p;
            if digit > 0 {
                acc = &acc * &base.pow_binary(digit);
            }
            e /= p;
            if e > 0 {
                base = base.frobenius(1);
            }
        }
        acc
    }

    fn pow_binary(&self, mut e: u64) -> Poly {
        let mut acc = self.ring.one();
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

    /// `self^(p^e)`: exponents scale by `p^e`, coefficients are fixed by Fermat.
    ///
    /// Panics if an exponent would overflow `u32`.
    pub fn frobenius(&self, e: u32) -> Poly {
        let factor = (self.modulus()).checked_pow(e).expect("Frobenius exponent overflow");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.scale_exponents(factor), *c))
            .collect();
        Poly::from_sorted(self.ring.clone(), terms)
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn graded_part(&self, d: u64) -> Poly {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Poly::from_sorted(self.ring.clone(), terms)
    }

    /// Formal partial derivative in characteristic p.
    pub fn partial_derivative(&self, var: usize) -> Poly {
        assert!(var < self.ring.arity(), "variable index {var} out of range");
        let p = self.modulus();
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.0[var];
                let k = e % p;
                (k != 0).then(|| {
                    let mut d = m.clone();
                    d.0[var] -= 1;
                    (d, mul_mod(*c, k, p))
                })
            })
            .collect();
        Poly::from_terms(self.ring.clone(), terms)
    }

    /// Moves the polynomial into `target`, sending variable `i` to `target` variable `map[i]`.
    pub fn rename(&self, target: &PolyRing, map: &[usize]) -> Result<Poly> {
        if map.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                expected: self.ring.arity(),
                got: map.len(),
            });
        }
        if target.modulus() != self.modulus() {
            return Err(Error::RingMismatch);
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= target.arity()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                expected: format!("< {}", target.arity()),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one(target.arity());
                for (i, &e) in m.0.iter().enumerate() {
                    out.0[map[i]] += e;
                }
                (out, *c)
            })
            .collect();
        Ok(Poly::from_terms(target.clone(), terms))
    }

    /// Ring homomorphism `x_i ↦ images[i]`, evaluated by nested Horner schemes.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                expected: self.ring.arity(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(first) => first.ring.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|g| g.ring != target) || target.modulus() != self.modulus() {
            return Err(Error::RingMismatch);
        }
        let mut cache = HashMap::new();
        let refs: Vec<&(Monomial, u32)> = self.terms.iter().collect();
        Ok(horner(&refs, 0, images, &target, &mut cache))
    }

    /// Exact quotient `self / divisor` by leading-term long division.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        self.check_ring(divisor)?;
        let (lead_m, lead_c) = match divisor.terms.first() {
            Some(t) => t,
            None => return Err(Error::DivisionByZero),
        };
        let p = self.modulus();
        let lead_inv = inv_mod(*lead_c, p);
        let mut rem: BTreeMap<Monomial, u32> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lead_m).ok_or(Error::NonExactDivision)?;
            let qc = mul_mod(c, lead_inv, p);
            for (dm, dc) in &divisor.terms[1..] {
                let key = qm.mul(dm);
                let cur = rem.get(&key).copied().unwrap_or(0);
                let next = sub_mod(cur, mul_mod(qc, *dc, p), p);
                if next == 0 {
                    rem.remove(&key);
                } else {
                    rem.insert(key, next);
                }
            }
            quotient.push((qm, qc));
        }
        Ok(Poly::from_sorted(self.ring.clone(), quotient))
    }

    /// Product of `factors` by a balanced tree of the given arity.
    ///
    /// Children are contiguous chunks of `factors`, multiplied left to right
    /// after being computed (possibly in parallel), so the result does not
    /// depend on the thread count.
    pub fn product(ring: &PolyRing, factors: &[Poly], arity: usize) -> Poly {
        assert!(arity >= 2, "product tree arity must be at least 2");
        match factors.len() {
            0 => ring.one(),
            1 => factors[0].clone(),
            n if n <= arity => factors[1..].iter().fold(factors[0].clone(), |acc, f| &acc * f),
            n => {
                let chunk = n.div_ceil(arity);
                let children: Vec<Poly> = factors
                    .par_chunks(chunk)
                    .map(|c| Poly::product(ring, c, arity))
                    .collect();
                children[1..].iter().fold(children[0].clone(), |acc, f| &acc * f)
            }
        }
    }

    pub fn sum(ring: &PolyRing, terms: &[Poly]) -> Poly {
        terms.iter().fold(ring.zero(), |acc, t| &acc + t)
    }

    /// Canonical text form; see [`crate::galois::parse()`].
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Up to `limit` monomials on which `self` and `other` differ, in canonical order.
    pub fn diff_terms(&self, other: &Poly, limit: usize) -> Vec<String> {
        let delta = self.merge(other, true);
        delta
            .terms
            .iter()
            .take(limit)
            .map(|(m, _)| {
                format!(
                    "{}: {} vs {}",
                    format_monomial(self.ring.names(), m).unwrap_or_else(|| "1".into()),
                    self.coefficient(m),
                    other.coefficient(m)
                )
            })
            .collect()
    }
}

fn horner(
    terms: &[&(Monomial, u32)],
    var: usize,
    images: &[Poly],
    target: &PolyRing,
    cache: &mut HashMap<(usize, u32), Poly>,
) -> Poly {
    if terms.is_empty() {
        return target.zero();
    }
    if var == images.len() {
        let p = target.modulus();
        let c = terms.iter().fold(0, |acc, (_, c)| add_mod(acc, *c, p));
        return target.constant(c as i64);
    }
    let mut groups: BTreeMap<u32, Vec<&(Monomial, u32)>> = BTreeMap::new();
    for t in terms {
        groups.entry(t.0 .0[var]).or_default().push(t);
    }
    let mut acc = target.zero();
    let mut prev: Option<u32> = None;
    for (&e, group) in groups.iter().rev() {
        if let Some(pe) = prev {
            let step = power_cached(images, var, pe - e, cache);
            acc = &acc * &step;
        }
        acc = &acc + &horner(group, var + 1, images, target, cache);
        prev = Some(e);
    }
    if let Some(last) = prev.filter(|&e| e > 0) {
        acc = &acc * &power_cached(images, var, last, cache);
    }
    acc
}

fn power_cached(images: &[Poly], var: usize, e: u32, cache: &mut HashMap<(usize, u32), Poly>) -> Poly {
    cache
        .entry((var, e))
        .or_insert_with(|| images[var].pow(e as u64))
        .clone()
}

fn format_monomial(names: &[String], m: &Monomial) -> Option<String> {
    let factors: Vec<String> =
        m.0.iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
            .collect();
    (!factors.is_empty()).then(|| factors.join("*"))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (format_monomial(self.ring.names(), m), c) {
                (None, c) => write!(f, "{c}")?,
                (Some(mono), 1) => f.write_str(&mono)?,
                (Some(mono), c) => write!(f, "{c}*{mono}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }

        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.ring.zero().merge(self, true)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
