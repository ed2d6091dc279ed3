use std::fmt;

use super::int::CycInt;
use crate::error::{Error, Result};

/// Square matrix over `Z[ω]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    p: u32,
    size: usize,
    entries: Vec<CycInt>,
}

impl CycMatrix {
    pub fn new(p: u32, size: usize, entries: Vec<CycInt>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::ArityMismatch {
                expected: size * size,
                got: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.p() != p) {
            return Err(Error::PrimeMismatch(p, bad.p()));
        }
        Ok(CycMatrix { p, size, entries })
    }

    pub fn from_fn(p: u32, size: usize, mut f: impl FnMut(usize, usize) -> CycInt) -> Self {
        let entries = (0..size * size).map(|k| f(k / size, k % size)).collect();
        Self::new(p, size, entries).expect("generated entries share p")
    }

    pub fn identity(p: u32, size: usize) -> Self {
        Self::scalar(p, size, &CycInt::one(p))
    }

    pub fn scalar(p: u32, size: usize, c: &CycInt) -> Self {
        Self::from_fn(p, size, |r, col| if r == col { c.clone() } else { CycInt::zero(p) })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &CycInt {
        &self.entries[r * self.size + c]
    }

    fn check(&self, other: &CycMatrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        if self.size != other.size {
            return Err(Error::ArityMismatch {
                expected: self.size,
                got: other.size,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &CycMatrix) -> Result<CycMatrix> {
        self.check(other)?;
        let n = self.size;
        Ok(Self::from_fn(self.p, n, |r, c| {
            (0..n)
                .filter(|&k| !self.get(r, k).is_zero() && !other.get(k, c).is_zero())
                .fold(CycInt::zero(self.p), |acc, k| {
                    &acc + &(self.get(r, k) * other.get(k, c))
                })
        }))
    }

    pub fn scale(&self, c: &CycInt) -> CycMatrix {
        Self::from_fn(self.p, self.size, |r, col| self.get(r, col) * c)
    }

    pub fn pow(&self, mut e: u64) -> CycMatrix {
        let mut acc = Self::identity(self.p, self.size);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        acc
    }

    /// Kronecker product `self ⊗ other`, with `self` as the outer factor.
    pub fn kron(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        let m = other.size;
        Ok(Self::from_fn(self.p, self.size * m, |r, c| {
            self.get(r / m, c / m) * other.get(r % m, c % m)
        }))
    }

    /// `Some(c)` if the matrix is `c · I`.
    pub fn as_scalar(&self) -> Option<CycInt> {
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(self.p, self.size, &c)).then_some(c)
    }

    /// For each row, the column and ω-exponent of its single nonzero entry.
    fn monomial_support(&self) -> Result<Vec<(usize, u32)>> {
        let mut seen = vec![false; self.size];
        (0..self.size)
            .map(|r| {
                let mut nonzero = (0..self.size).filter(|&c| !self.get(r, c).is_zero());
                let c = nonzero.next().ok_or(Error::NotMonomial)?;
                if nonzero.next().is_some() || std::mem::replace(&mut seen[c], true) {
                    return Err(Error::NotMonomial);
                }
                let k = self.get(r, c).as_omega_power().ok_or(Error::NotMonomial)?;
                Ok((c, k))
            })
            .collect()
    }

    /// Inverse of a monomial matrix whose nonzero entries are powers of ω.
    pub fn monomial_inverse(&self) -> Result<CycMatrix> {
        let support = self.monomial_support()?;
        let mut inv = Self::from_fn(self.p, self.size, |_, _| CycInt::zero(self.p));
        for (r, (c, k)) in support.into_iter().enumerate() {
            inv.entries[c * self.size + r] = CycInt::omega_pow(self.p, -(k as i64));
        }
        Ok(inv)
    }

    /// Determinant by fraction-free (Bareiss) elimination; every intermediate
    /// division is exact in `Z[ω]`.
    pub fn determinant(&self) -> CycInt {
        let n = self.size;
        let p = self.p;
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = CycInt::one(p);
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return CycInt::zero(p);
            };
            if pivot != k {
                for c in 0..n {
                    a.swap(pivot * n + c, k * n + c);
                }
                negate = !negate;
            }
            if k + 1 == n {
                break;
            }
            let akk = a[k * n + k].clone();
            for i in k + 1..n {
                let aik = a[i * n + k].clone();
                for j in k + 1..n {
                    let num = &(&a[i * n + j] * &akk) - &(&aik * &a[k * n + j]);
                    a[i * n + j] = if num.is_zero() {
                        num
                    } else {
                        num.div_exact(&prev).expect("Bareiss division is exact")
                    };
                }
                a[i * n + k] = CycInt::zero(p);
            }
            prev = akk;
        }
        let det = a[n * n - 1].clone();
        if negate {
            -&det
        } else {
            det
        }
    }
}

/// `[g] ∘ M = g M g^{-1}` for a monomial `g`.
///
/// With `g[r][π(r)] = ω^{k_r}` the product collapses to
/// `(g M g^{-1})[r][c] = ω^{k_r − k_c} M[π(r)][π(c)]`.
pub fn conj_act(g: &CycMatrix, m: &CycMatrix) -> Result<CycMatrix> {
    g.check(m)?;
    let support = g.monomial_support()?;
    Ok(CycMatrix::from_fn(g.p, g.size, |r, c| {
        let (pr, kr) = support[r];
        let (pc, kc) = support[c];
        m.get(pr, pc).mul_omega_pow(kr as i64 - kc as i64)
    }))
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: u32, k: i64) -> CycInt {
        CycInt::omega_pow(p, k)
    }

    #[test]
    fn monomial_inverse_round_trip() {
        let p = 5;
        let g = CycMatrix::from_fn(p, 3, |r, c| {
            if (r + 1) % 3 == c {
                w(p, r as i64 + 2)
            } else {
                CycInt::zero(p)
            }
        });
        let inv = g.monomial_inverse().unwrap();
        assert_eq!(g.mul(&inv).unwrap(), CycMatrix::identity(p, 3));
        let not_mono = CycMatrix::from_fn(p, 2, |_, _| CycInt::one(p));
        assert_eq!(not_mono.monomial_inverse(), Err(Error::NotMonomial));
        let two = CycMatrix::scalar(p, 2, &CycInt::from_int(p, 2));
        assert_eq!(two.monomial_inverse(), Err(Error::NotMonomial));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let p = 3;
        let entries: Vec<CycInt> = [(1, 0), (2, 1), (0, 2), (1, 1), (3, 0), (1, 2), (2, 2), (0, 1), (1, 0)]
            .iter()
            .map(|&(a, k)| CycInt::from_int(p, a).mul_omega_pow(k))
            .collect();
        let m = CycMatrix::new(p, 3, entries).unwrap();
        let g = |r, c| m.get(r, c).clone();
        let minor = |a: CycInt, b: CycInt, c: CycInt, d: CycInt| &(&a * &d) - &(&b * &c);
        let expected = &(&(&g(0, 0) * &minor(g(1, 1), g(1, 2), g(2, 1), g(2, 2)))
            - &(&g(0, 1) * &minor(g(1, 0), g(1, 2), g(2, 0), g(2, 2))))
            + &(&g(0, 2) * &minor(g(1, 0), g(1, 1), g(2, 0), g(2, 1)));
        assert_eq!(m.determinant(), expected);
    }

    #[test]
    fn determinant_of_singular_and_permuted() {
        let p = 3;
        let zero_col = CycMatrix::from_fn(p, 2, |_, c| if c == 0 { CycInt::zero(p) } else { CycInt::one(p) });
        assert!(zero_col.determinant().is_zero());
        let swap = CycMatrix::from_fn(p, 2, |r, c| if r != c { CycInt::one(p) } else { CycInt::zero(p) });
        assert_eq!(swap.determinant(), CycInt::from_int(p, -1));
    }

    #[test]
    fn conjugation_action_axiom() {
        let p = 3;
        let g = CycMatrix::from_fn(p, 3, |r, c| if r == c { w(p, r as i64) } else { CycInt::zero(p) });
        let h = CycMatrix::from_fn(p, 3, |r, c| {
            if (c + 1) % 3 == r {
                CycInt::one(p)
            } else {
                CycInt::zero(p)
            }
        });
        let m = CycMatrix::from_fn(p, 3, |r, c| CycInt::from_int(p, (r * 3 + c) as i64));
        assert_eq!(conj_act(&CycMatrix::identity(p, 3), &m).unwrap(), m);
        let direct = g.mul(&m).unwrap().mul(&g.monomial_inverse().unwrap()).unwrap();
        assert_eq!(conj_act(&g, &m).unwrap(), direct);
        let direct = h.mul(&m).unwrap().mul(&h.monomial_inverse().unwrap()).unwrap();
        assert_eq!(conj_act(&h, &m).unwrap(), direct);
        let gh = g.mul(&h).unwrap();
        assert_eq!(
            conj_act(&gh, &m).unwrap(),
            conj_act(&g, &conj_act(&h, &m).unwrap()).unwrap()
        );
    }
}
