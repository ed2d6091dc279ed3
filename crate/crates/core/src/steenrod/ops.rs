use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::class::{accumulate, CohAlgebra, CohClass, CohMonomial};
use crate::error::{Error, Result};
use crate::galois::field::{binomial_mod, mul_mod, sub_mod};

/// Deepest Milnor primitive computed by the literal recursion.
pub const MAX_MILNOR_DEPTH: u32 = 6;

impl CohClass {
    /// The Bockstein: `β(a_g) = y_g`, `β(y_g) = 0`, a derivation of degree +1.
    pub fn bockstein(&self) -> CohClass {
        let p = self.p();
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            for (t, g) in m.odd().enumerate() {
                let mut even = m.even.clone();
                even[g - 1] += 1;
                let c = if t % 2 == 1 { sub_mod(0, c, p) } else { c };
                accumulate(
                    &mut terms,
                    CohMonomial {
                        odd: m.odd & !(1 << (g - 1)),
                        even,
                    },
                    c,
                    p,
                );
            }
        }
        CohClass { alg: self.alg, terms }
    }

    /// The total reduced power, the ring endomorphism with `a_g ↦ a_g` and
    /// `y_g ↦ y_g + y_g^p`.
    pub fn total_power(&self) -> CohClass {
        let p = self.p();
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            let mut ks = vec![0u32; m.even.len()];
            expand_total(m, c, 0, &mut ks, p, &mut terms);
        }
        CohClass { alg: self.alg, terms }
    }

    /// `P^k`, the part of the total power raising degree by `2k(p−1)`.
    pub fn power_op(&self, k: u64) -> CohClass {
        if k == 0 {
            return self.clone();
        }
        let p = self.p();
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            let mut capacity: Vec<u64> = m
                .even
                .iter()
                .rev()
                .scan(0u64, |s, &e| {
                    *s += e as u64;
                    Some(*s)
                })
                .collect();
            capacity.reverse();
            let mut ks = vec![0u32; m.even.len()];
            expand_power(m, c, 0, k, &capacity, &mut ks, p, &mut terms);
        }
        CohClass { alg: self.alg, terms }
    }
}

fn raised(m: &CohMonomial, ks: &[u32], p: u32) -> CohMonomial {
    let even: SmallVec<[u32; 8]> = m.even.iter().zip(ks).map(|(&e, &k)| e + k * (p - 1)).collect();
    CohMonomial { odd: m.odd, even }
}

fn expand_total(m: &CohMonomial, c: u32, i: usize, ks: &mut Vec<u32>, p: u32, out: &mut BTreeMap<CohMonomial, u32>) {
    if i == ks.len() {
        accumulate(out, raised(m, ks, p), c, p);
        return;
    }
    for k in 0..=m.even[i] {
        let b = binomial_mod(m.even[i] as u64, k as u64, p);
        if b != 0 {
            ks[i] = k;
            expand_total(m, mul_mod(c, b, p), i + 1, ks, p, out);
        }
    }
    ks[i] = 0;
}

/// Distributes `remaining` over `ks[i..]` with `k_j ≤ e_j`, weighting by `∏ C(e_j, k_j)`.
#[allow(clippy::too_many_arguments)]
fn expand_power(
    m: &CohMonomial,
    c: u32,
    i: usize,
    remaining: u64,
    capacity: &[u64],
    ks: &mut Vec<u32>,
    p: u32,
    out: &mut BTreeMap<CohMonomial, u32>,
) {
    if i == ks.len() {
        if remaining == 0 {
            accumulate(out, raised(m, ks, p), c, p);
        }
        return;
    }
    if remaining > capacity[i] {
        return;
    }
    let hi = remaining.min(m.even[i] as u64);
    let rest = capacity.get(i + 1).copied().unwrap_or(0);
    let lo = remaining.saturating_sub(rest);
    for k in lo..=hi {
        let b = binomial_mod(m.even[i] as u64, k, p);
        if b != 0 {
            ks[i] = k as u32;
            expand_power(m, mul_mod(c, b, p), i + 1, remaining - k, capacity, ks, p, out);
        }
    }
    ks[i] = 0;
}

/// `Q_0 = β`, `Q_i = P^{p^{i−1}} Q_{i−1} − Q_{i−1} P^{p^{i−1}}`, applied literally.
pub fn milnor_q(i: u32, x: &CohClass) -> Result<CohClass> {
    if i > MAX_MILNOR_DEPTH {
        return Err(Error::DepthGuard(i));
    }
    if i == 0 {
        return Ok(x.bockstein());
    }
    let k = (x.p() as u64).pow(i - 1);
    let left = milnor_q(i - 1, x)?.power_op(k);
    let right = milnor_q(i - 1, &x.power_op(k))?;
    Ok(&left - &right)
}

/// `Σ_k a_k η_k − ξ_k b_k` in `H^3(BV^{2l})`.
pub fn x_class(p: u64, l: usize) -> Result<CohClass> {
    let alg = CohAlgebra::for_level(p, l)?;
    Ok((1..=l).fold(alg.zero(), |acc, k| {
        &(&acc + &(&alg.a(k) * &alg.eta(k))) - &(&alg.xi(k) * &alg.b(k))
    }))
}

/// `r_i = Σ_k ξ_k^{p^i} η_k − ξ_k η_k^{p^i}`.
pub fn r_closed(p: u64, i: u32, l: usize) -> Result<CohClass> {
    let alg = CohAlgebra::for_level(p, l)?;
    let q = p
        .checked_pow(i)
        .and_then(|q| u32::try_from(q).ok())
        .ok_or_else(|| Error::SizeGuard(format!("p^{i} overflows an exponent")))?;
    let mut x = alg.zero();
    for k in 0..l {
        let mut e = vec![0u32; 2 * l];
        e[2 * k] = q;
        e[2 * k + 1] = 1;
        x = &x + &alg.term(0, &e, 1);
        e[2 * k] = 1;
        e[2 * k + 1] = q;
        x = &x - &alg.term(0, &e, 1);
    }
    Ok(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SteenrodOp {
    Bockstein,
    Power(u64),
}

/// A composite of Bocksteins and reduced powers, applied right to left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OperationWord(pub Vec<SteenrodOp>);

impl OperationWord {
    pub fn apply(&self, x: &CohClass) -> CohClass {
        self.0.iter().rev().fold(x.clone(), |acc, op| match op {
            SteenrodOp::Bockstein => acc.bockstein(),
            SteenrodOp::Power(k) => acc.power_op(*k),
        })
    }

    /// Degree shift on homogeneous classes.
    pub fn degree_shift(&self, p: u32) -> u64 {
        self.0
            .iter()
            .map(|op| match op {
                SteenrodOp::Bockstein => 1,
                SteenrodOp::Power(k) => 2 * k * (p as u64 - 1),
            })
            .sum()
    }
}

impl fmt::Display for OperationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .0
            .iter()
            .map(|op| match op {
                SteenrodOp::Bockstein => "β".to_string(),
                SteenrodOp::Power(k) => format!("P^{k}"),
            })
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

/// `Q_i` as a signed sum of words, expanding the recursion formally.
pub fn milnor_expansion(p: u32, i: u32) -> Result<Vec<(i64, OperationWord)>> {
    if i > MAX_MILNOR_DEPTH {
        return Err(Error::DepthGuard(i));
    }
    let mut words = vec![(1, OperationWord(vec![SteenrodOp::Bockstein]))];
    for level in 1..=i {
        let k = (p as u64).pow(level - 1);
        let mut next = Vec::with_capacity(2 * words.len());
        for (c, w) in &words {
            let mut left = vec![SteenrodOp::Power(k)];
            left.extend(&w.0);
            next.push((*c, OperationWord(left)));
        }
        for (c, w) in &words {
            let mut right = w.0.clone();
            right.push(SteenrodOp::Power(k));
            next.push((-c, OperationWord(right)));
        }
        words = next;
    }
    Ok(words)
}
