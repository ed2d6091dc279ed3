//! Moore determinants and the Dickson invariants `C_{n,i}`.
//!
//! `Δ_n(X)` is the determinant of the `(n+1) × (n+1)` matrix whose row `r`
//! is `(x_1^{p^r}, …, x_n^{p^r}, X^{p^r})`, and `f_n(X) = ∏ (X − Σ k_i x_i)`
//! over all `k ∈ F_p^n`. The Dickson invariants are reachable two ways: as a
//! quotient of Moore determinants `Δ_{n,i} / Δ_{n,n}`, and as signed
//! coefficients of `f_n(X)`. The verifier checks that the two agree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::galois::field::{inv_mod, mul_mod, sub_mod};
use crate::galois::{Poly, PolyMatrix, PolyRing};
use crate::report::{Outcome, ReportBuilder, VerificationReport};

pub const MAX_VARIABLES: usize = 6;

/// Upper bound on `p^n`, the number of linear factors in `f_n(X)`.
pub const MAX_FACTORS: u64 = 1_000_000;

/// Up to this many tuples the root property of `f_n` is checked exhaustively;
/// beyond it, on this many seeded tuples.
const ROOT_CHECK_ALL: u64 = 125;

/// The rings `F_p[x_1..x_n]` and `F_p[x_1..x_n, X]`.
#[derive(Clone, Debug)]
pub struct DicksonContext {
    p: u32,
    n: usize,
    ring: PolyRing,
    ring_x: PolyRing,
}

impl DicksonContext {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::with_names(p, &names)
    }

    /// Context whose variables carry the given names (the auxiliary one is `X`).
    pub fn with_names<S: AsRef<str>>(p: u64, names: &[S]) -> Result<Self> {
        let n = names.len();
        if !(1..=MAX_VARIABLES).contains(&n) {
            return Err(Error::IndexOutOfRange {
                index: n,
                expected: format!("1..={MAX_VARIABLES} variables"),
            });
        }
        let ring = PolyRing::new(p, names)?;
        let mut with_x: Vec<String> = ring.names().to_vec();
        with_x.push("X".into());
        let ring_x = PolyRing::new(p, &with_x)?;
        Ok(DicksonContext {
            p: ring.modulus(),
            n,
            ring,
            ring_x,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `F_p[x_1..x_n]`.
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// `F_p[x_1..x_n, X]`.
    pub fn ring_x(&self) -> &PolyRing {
        &self.ring_x
    }

    fn pow_p(&self, r: usize) -> u32 {
        self.p.pow(r as u32)
    }

    /// Embeds a polynomial in `x_1..x_n` into the ring with `X`.
    pub fn embed(&self, f: &Poly) -> Poly {
        let map: Vec<usize> = (0..self.n).collect();
        f.rename(&self.ring_x, &map).expect("context rings are compatible")
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                expected: format!("0..={}", self.n),
            });
        }
        Ok(())
    }

    fn guard_factor_count(&self) -> Result<u64> {
        let count = (self.p as u64)
            .checked_pow(self.n as u32)
            .filter(|&c| c <= MAX_FACTORS)
            .ok_or_else(|| Error::SizeGuard(format!("p^n = {}^{} exceeds {MAX_FACTORS}", self.p, self.n)))?;
        Ok(count)
    }
}

/// `Δ_n(x_1, …, x_n, X)`.
pub fn delta_full(ctx: &DicksonContext) -> Poly {
    let n = ctx.n;
    let m = PolyMatrix::from_fn(n + 1, n + 1, |r, c| ctx.ring_x.var(c).frobenius(r as u32))
        .expect("Moore matrix dimensions are valid");
    m.determinant().expect("Moore matrix is square and small")
}

/// `Δ_{n,i}`: the Moore determinant over rows `0..=n` with row `i` removed.
pub fn delta_ni(ctx: &DicksonContext, i: usize) -> Result<Poly> {
    ctx.check_index(i)?;
    let rows: Vec<usize> = (0..=ctx.n).filter(|&r| r != i).collect();
    let m = PolyMatrix::from_fn(ctx.n, ctx.n, |r, c| ctx.ring.var(c).frobenius(rows[r] as u32))?;
    m.determinant()
}

/// `f_n(X)`, multiplied out over a p-ary tree.
///
/// Factors are listed with the last coordinate of `k` varying fastest, so every
/// subtree covers a coset of a coordinate subspace and its product is an
/// additive polynomial shifted by a constant, which keeps intermediates sparse.
pub fn f_n_product(ctx: &DicksonContext) -> Result<Poly> {
    let count = ctx.guard_factor_count()?;
    let x = ctx.ring_x.var(ctx.n);
    let factors: Vec<Poly> = (0..count)
        .map(|idx| {
            let k = digits(idx, ctx.p, ctx.n);
            let mut coeffs: Vec<i64> = k.iter().map(|&ki| -(ki as i64)).collect();
            coeffs.push(0);
            &x + &ctx.ring_x.linear_form(&coeffs)
        })
        .collect();
    Ok(Poly::product(&ctx.ring_x, &factors, ctx.p as usize))
}

/// Base-`p` digits of `idx`, most significant first, padded to `len`.
pub(crate) fn digits(mut idx: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut().rev() {
        *slot = (idx % p as u64) as u32;
        idx /= p as u64;
    }
    out
}

/// `C_{n,i} = Δ_{n,i} / Δ_{n,n}`.
pub fn dickson_c(ctx: &DicksonContext, i: usize) -> Result<Poly> {
    let num = delta_ni(ctx, i)?;
    let den = delta_ni(ctx, ctx.n)?;
    num.exact_div(&den)
}

/// All of `C_{n,0}, …, C_{n,n}` by the determinant route, sharing `Δ_{n,n}`.
pub fn dickson_all(ctx: &DicksonContext) -> Result<Vec<Poly>> {
    let den = delta_ni(ctx, ctx.n)?;
    (0..=ctx.n).map(|i| delta_ni(ctx, i)?.exact_div(&den)).collect()
}

/// `C_{n,i}` read off `f_n(X)` as `(−1)^{n+i}` times the coefficient of `X^{p^i}`.
pub fn dickson_c_from_f(ctx: &DicksonContext, i: usize) -> Result<Poly> {
    ctx.check_index(i)?;
    let f = f_n_product(ctx)?;
    Ok(coefficient_from_f(ctx, &f, i))
}

fn coefficient_from_f(ctx: &DicksonContext, f: &Poly, i: usize) -> Poly {
    let target = ctx.pow_p(i);
    let terms = f
        .raw_terms()
        .iter()
        .filter(|(m, _)| m.exponents()[ctx.n] == target)
        .map(|(m, c)| (crate::galois::Monomial::new(&m.exponents()[..ctx.n]), *c))
        .collect();
    let coeff = ctx.ring.from_terms(terms);
    if (ctx.n + i) % 2 == 1 {
        -coeff
    } else {
        coeff
    }
}

/// An invertible `n × n` matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLMatrix {
    p: u32,
    n: usize,
    entries: Vec<u32>,
}

impl GLMatrix {
    pub fn new(p: u32, n: usize, entries: Vec<u32>) -> Result<Self> {
        crate::galois::field::check_prime(p as u64)?;
        if entries.len() != n * n || n == 0 {
            return Err(Error::ArityMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        let m = GLMatrix {
            p,
            n,
            entries: entries.into_iter().map(|e| e % p).collect(),
        };
        if m.det() == 0 {
            return Err(Error::Invalid("matrix is singular mod p".into()));
        }
        Ok(m)
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let entries = (0..n * n).map(|k| u32::from(k / n == k % n)).collect();
        GLMatrix { p, n, entries }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.n + c]
    }

    /// Determinant mod p by Gaussian elimination.
    pub fn det(&self) -> u32 {
        det_mod_p(self.entries.clone(), self.n, self.p)
    }

    pub fn mul(&self, other: &GLMatrix) -> GLMatrix {
        assert_eq!((self.p, self.n), (other.p, other.n), "GL shape mismatch");
        let n = self.n;
        let entries = (0..n * n)
            .map(|k| {
                let (r, c) = (k / n, k % n);
                (0..n).fold(0, |acc, j| {
                    crate::galois::field::add_mod(acc, mul_mod(self.get(r, j), other.get(j, c), self.p), self.p)
                })
            })
            .collect();
        GLMatrix { p: self.p, n, entries }
    }
}

pub(crate) fn det_mod_p(mut a: Vec<u32>, n: usize, p: u32) -> u32 {
    let mut det = 1u32;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if pivot != col {
            for c in 0..n {
                a.swap(pivot * n + c, col * n + c);
            }
            det = sub_mod(0, det, p);
        }
        let pv = a[col * n + col];
        det = mul_mod(det, pv, p);
        let inv = inv_mod(pv, p);
        for r in col + 1..n {
            let factor = mul_mod(a[r * n + col], inv, p);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let sub = mul_mod(factor, a[col * n + c], p);
                a[r * n + c] = sub_mod(a[r * n + c], sub, p);
            }
        }
    }
    det
}

/// Uniform invertible matrix, by rejection; deterministic in `seed`.
pub fn random_gl(n: usize, p: u32, seed: u64) -> GLMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let entries: Vec<u32> = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
        if det_mod_p(entries.clone(), n, p) != 0 {
            return GLMatrix { p, n, entries };
        }
    }
}

/// The substitution `x_j ↦ Σ_i A_{ij} x_i`.
///
/// With this convention `gl_action(f, A·B) = gl_action(gl_action(f, B), A)`.
pub fn gl_action(f: &Poly, a: &GLMatrix) -> Result<Poly> {
    let ring = f.ring();
    if ring.arity() != a.n || ring.modulus() != a.p {
        return Err(Error::RingMismatch);
    }
    let images: Vec<Poly> = (0..a.n)
        .map(|j| {
            let column: Vec<i64> = (0..a.n).map(|i| a.get(i, j) as i64).collect();
            ring.linear_form(&column)
        })
        .collect();
    f.substitute(&images)
}

/// Cross-checks the two routes to `C_{n,i}`, the factorization
/// `Δ_n(X) = Δ_{n−1}(x_n) f_n(X)`, and GL-invariance on `trials` random matrices.
pub fn verify_dickson(ctx: &DicksonContext, trials: usize, seed: u64) -> VerificationReport {
    let mut report = ReportBuilder::new("dickson", seed)
        .param("p", ctx.p)
        .param("n", ctx.n as u64)
        .param("trials", trials as u64);

    let mut by_det = None;
    report.check("determinant route C_{n,i} = Δ_{n,i}/Δ_{n,n}", || {
        match dickson_all(ctx) {
            Ok(cs) => {
                let degrees_ok = cs.iter().enumerate().all(|(i, c)| {
                    let expected = ctx.pow_p(ctx.n) as u64 - ctx.pow_p(i) as u64;
                    if expected == 0 {
                        c.is_one()
                    } else {
                        c.homogeneous_degree() == Some(expected)
                    }
                });
                let outcome = Outcome::from_bool(degrees_ok, "each C_{n,i} homogeneous of degree p^n - p^i");
                by_det = Some(cs);
                outcome
            }
            Err(e) => e.into(),
        }
    });

    let f = f_n_product(ctx);
    report.check("two routes agree: C_{n,i} from f_n(X)", || {
        let f = f.as_ref().map_err(Clone::clone)?;
        let cs = by_det
            .as_ref()
            .ok_or(Error::Invalid("determinant route unavailable".into()))?;
        Ok::<_, Error>(Outcome::all(cs.iter().enumerate().map(|(i, c)| {
            (format!("i={i}"), Outcome::equal(&coefficient_from_f(ctx, f, i), c))
        })))
    });

    report.check("f_n(X) has X-support on powers of p only", || match &f {
        Ok(f) => {
            let bad = f.raw_terms().iter().find(|(m, _)| {
                let e = m.exponents()[ctx.n];
                e == 0 || !is_power_of(e, ctx.p)
            });
            Outcome::from_bool(bad.is_none(), "coefficient of X^k vanishes unless k = p^i")
        }
        Err(e) => e.clone().into(),
    });

    report.check("f_n(Σ k_i x_i) = 0 for k ∈ F_p^n", || {
        let f = f.as_ref().map_err(Clone::clone)?;
        let total = ctx.p.pow(ctx.n as u32) as u64;
        let tuples: Vec<u64> = if total <= ROOT_CHECK_ALL {
            (0..total).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..ROOT_CHECK_ALL).map(|_| rng.gen_range(0..total)).collect()
        };
        let mut images: Vec<Poly> = (0..ctx.n).map(|i| ctx.ring_x.var(i)).collect();
        images.push(ctx.ring_x.zero());
        Ok::<_, Error>(Outcome::all(tuples.into_iter().map(|idx| {
            let k = digits(idx, ctx.p, ctx.n);
            let mut coeffs: Vec<i64> = k.iter().map(|&ki| ki as i64).collect();
            coeffs.push(0);
            images[ctx.n] = ctx.ring_x.linear_form(&coeffs);
            let value = f.substitute(&images);
            (
                format!("k={k:?}"),
                value.map(|v| Outcome::from_bool(v.is_zero(), "")).into(),
            )
        })))
    });

    report.check("Δ_{n,0} = Δ_{n,n}^p", || {
        Ok::<_, Error>(Outcome::equal(
            &delta_ni(ctx, 0)?,
            &delta_ni(ctx, ctx.n)?.pow(ctx.p as u64),
        ))
    });

    report.check("Δ_n(X) = Δ_{n-1}(x_n) · f_n(X)", || {
        let f = f.as_ref().map_err(Clone::clone)?;
        let lhs = delta_full(ctx);
        let rhs = &ctx.embed(&delta_ni(ctx, ctx.n)?) * f;
        Ok::<_, Error>(Outcome::equal(&lhs, &rhs))
    });

    report.check(
        format!("C_{{n,i}} fixed by all {} permutation matrices", factorial(ctx.n)),
        || {
            let Some(cs) = by_det.as_ref() else {
                return Outcome::Fail("determinant route unavailable".into());
            };
            Outcome::all(permutations(ctx.n).into_iter().map(|perm| {
                let mut entries = vec![0u32; ctx.n * ctx.n];
                for (r, &c) in perm.iter().enumerate() {
                    entries[r * ctx.n + c] = 1;
                }
                let a = GLMatrix::new(ctx.p, ctx.n, entries).expect("permutation matrices are invertible");
                let o = Outcome::all(cs.iter().enumerate().map(|(i, c)| {
                    (
                        format!("C_{{n,{i}}}"),
                        gl_action(c, &a).map(|m| Outcome::equal(&m, c)).into(),
                    )
                }));
                (format!("{perm:?}"), o)
            }))
        },
    );

    report.check(
        format!("GL_{}(F_{}) invariance, {trials} random matrices", ctx.n, ctx.p),
        || {
            let Some(cs) = by_det.as_ref() else {
                return Outcome::Fail("determinant route unavailable".into());
            };
            let outcomes = (0..trials).map(|t| {
                let a = random_gl(ctx.n, ctx.p, seed.wrapping_add(t as u64));
                let o = Outcome::all(cs.iter().enumerate().map(|(i, c)| {
                    let moved = gl_action(c, &a);
                    (format!("C_{{n,{i}}}"), moved.map(|m| Outcome::equal(&m, c)).into())
                }));
                (format!("trial {t}"), o)
            });
            Outcome::all(outcomes)
        },
    );

    report.finish()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for slot in 0..n {
            let mut perm = rest.clone();
            perm.insert(slot, n - 1);
            out.push(perm);
        }
    }
    out
}

fn is_power_of(mut e: u32, p: u32) -> bool {
    while e.is_multiple_of(p) {
        e /= p;
    }
    e == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::parse;

    #[test]
    fn delta_full_small_case() {
        let ctx = DicksonContext::new(3, 1).unwrap();
        assert_eq!(delta_full(&ctx), parse(ctx.ring_x(), "x1*X^3 - x1^3*X").unwrap());
    }

    #[test]
    fn delta_full_vanishes_on_repeated_column() {
        let ctx = DicksonContext::new(3, 2).unwrap();
        let r = ctx.ring_x();
        let images = [r.var(0), r.var(1), r.var(0)];
        assert!(delta_full(&ctx).substitute(&images).unwrap().is_zero());
    }

    #[test]
    fn delta_ni_cases() {
        let ctx = DicksonContext::new(3, 2).unwrap();
        assert_eq!(
            delta_ni(&ctx, 2).unwrap(),
            parse(ctx.ring(), "x1*x2^3 - x1^3*x2").unwrap()
        );
        let one = DicksonContext::new(7, 1).unwrap();
        assert_eq!(delta_ni(&one, 1).unwrap(), one.ring().var(0));
        assert!(matches!(delta_ni(&ctx, 3), Err(Error::IndexOutOfRange { .. })));
        let swapped = delta_ni(&ctx, 1).unwrap().rename(ctx.ring(), &[1, 0]).unwrap();
        assert_eq!(swapped, -delta_ni(&ctx, 1).unwrap());
    }

    #[test]
    fn f_n_small_cases() {
        let c3 = DicksonContext::new(3, 1).unwrap();
        assert_eq!(f_n_product(&c3).unwrap(), parse(c3.ring_x(), "X^3 - x1^2*X").unwrap());
        let c2 = DicksonContext::new(2, 1).unwrap();
        assert_eq!(f_n_product(&c2).unwrap(), parse(c2.ring_x(), "X^2 + x1*X").unwrap());
        let big = DicksonContext::new(11, 6).unwrap();
        assert!(matches!(f_n_product(&big), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn dickson_small_cases() {
        let c = DicksonContext::new(3, 1).unwrap();
        assert_eq!(dickson_c(&c, 0).unwrap(), parse(c.ring(), "x1^2").unwrap());
        assert!(dickson_c(&c, 1).unwrap().is_one());
        let c2 = DicksonContext::new(2, 2).unwrap();
        assert_eq!(
            dickson_c(&c2, 1).unwrap(),
            parse(c2.ring(), "x1^2 + x1*x2 + x2^2").unwrap()
        );
        assert_eq!(
            dickson_c(&c2, 0).unwrap(),
            parse(c2.ring(), "x1^2*x2 + x1*x2^2").unwrap()
        );
        let c5 = DicksonContext::new(5, 1).unwrap();
        assert_eq!(dickson_c_from_f(&c5, 0).unwrap(), parse(c5.ring(), "x1^4").unwrap());
        assert!(dickson_c_from_f(&c5, 1).unwrap().is_one());
    }

    #[test]
    fn context_bounds() {
        assert!(DicksonContext::new(3, 0).is_err());
        assert!(DicksonContext::new(3, 7).is_err());
        assert_eq!(DicksonContext::new(4, 2).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn random_gl_properties() {
        for seed in 0..1000 {
            assert_ne!(random_gl(2, 3, seed).det(), 0);
        }
        assert_eq!(random_gl(3, 5, 9), random_gl(3, 5, 9));
        let scalar = random_gl(1, 7, 3);
        assert_ne!(scalar.get(0, 0), 0);
        assert!(GLMatrix::new(3, 2, vec![1, 2, 2, 1]).is_err());
    }

    #[test]
    fn identity_action_and_composition() {
        let ctx = DicksonContext::new(3, 2).unwrap();
        let f = parse(ctx.ring(), "x1^2*x2 + 2*x2^3 + x1").unwrap();
        assert_eq!(gl_action(&f, &GLMatrix::identity(3, 2)).unwrap(), f);
        let (a, b) = (random_gl(2, 3, 1), random_gl(2, 3, 2));
        let lhs = gl_action(&f, &a.mul(&b)).unwrap();
        let rhs = gl_action(&gl_action(&f, &b).unwrap(), &a).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(gl_action(&f, &GLMatrix::identity(3, 3)), Err(Error::RingMismatch));
    }

    #[test]
    fn verify_suite_passes_small() {
        let report = verify_dickson(&DicksonContext::new(3, 2).unwrap(), 5, 1);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 8);
    }
}
