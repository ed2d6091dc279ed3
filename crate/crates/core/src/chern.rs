//! The restricted total Chern class of the conjugation representation,
//! `∏_{v ∈ F_p^{2l}} (1 + Σ_k i_k ξ_k + j_k η_k)`, in the half-degree grading
//! where `ξ_k` and `η_k` have degree 1.

use std::collections::BTreeMap;

use crate::dickson::{delta_ni, dickson_all, digits, DicksonContext};
use crate::error::{Error, Result};
use crate::galois::field::check_prime;
use crate::galois::{Poly, PolyRing};
use crate::report::{Outcome, ReportBuilder, VerificationReport};
use crate::steenrod::{r_closed, CohAlgebra};

/// Largest number of factors `p^{2l}` multiplied by [`total_conj_chern`]. `(5, 2)` takes
/// about 20 s; `(3, 3)` and `(7, 2)` run for more than ten minutes.
pub const MAX_CHERN_FACTORS: u64 = 625;

/// `F_p[ξ_1, η_1, …, ξ_l, η_l]` for the group `V^{2l}`.
#[derive(Clone, Debug)]
pub struct ChernContext {
    p: u32,
    l: usize,
    ring: PolyRing,
}

impl ChernContext {
    pub fn new(p: u64, l: usize) -> Result<Self> {
        let p = check_prime(p)?;
        if p == 2 {
            return Err(Error::Invalid(
                "the conjugation representation needs an odd prime".into(),
            ));
        }
        if l == 0 || 2 * l > crate::dickson::MAX_VARIABLES {
            return Err(Error::IndexOutOfRange {
                index: l,
                expected: format!("1..={}", crate::dickson::MAX_VARIABLES / 2),
            });
        }
        let ring = CohAlgebra::for_level(p as u64, l)?.even_ring();
        Ok(ChernContext { p, l, ring })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// The ring with variables `xi1, eta1, …`.
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn xi(&self, k: usize) -> Poly {
        self.ring.var(2 * (k - 1))
    }

    pub fn eta(&self, k: usize) -> Poly {
        self.ring.var(2 * k - 1)
    }

    /// `p^{2l}`, the number of factors and the degree of the product.
    pub fn top_degree(&self) -> u64 {
        (self.p as u64).pow(2 * self.l as u32)
    }
}

/// `Σ_k i_k ξ_k + j_k η_k` for `v = (i_1, j_1, …, i_l, j_l)`.
pub fn linear_form(v: &[u32], ctx: &ChernContext) -> Result<Poly> {
    if v.len() != 2 * ctx.l {
        return Err(Error::ArityMismatch {
            expected: 2 * ctx.l,
            got: v.len(),
        });
    }
    let coeffs: Vec<i64> = v.iter().map(|&c| c as i64).collect();
    Ok(ctx.ring.linear_form(&coeffs))
}

/// Graded parts of the total Chern class; part `d` represents `θ*(γ_d)`.
#[derive(Clone, Debug)]
pub struct GradedChern {
    ring: PolyRing,
    parts: BTreeMap<u64, Poly>,
}

impl GradedChern {
    fn split(total: &Poly) -> Self {
        let mut parts: BTreeMap<u64, Vec<_>> = BTreeMap::new();
        for (m, c) in total.raw_terms() {
            parts.entry(m.degree()).or_default().push((m.clone(), *c));
        }
        GradedChern {
            ring: total.ring().clone(),
            parts: parts
                .into_iter()
                .map(|(d, terms)| (d, total.ring().from_terms(terms)))
                .collect(),
        }
    }

    /// The degree-`d` part, zero when absent.
    pub fn part(&self, d: u64) -> Poly {
        self.parts.get(&d).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Degrees carrying a nonzero part, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = u64> + '_ {
        self.parts.keys().copied()
    }

    pub fn total(&self) -> Poly {
        let parts: Vec<Poly> = self.parts.values().cloned().collect();
        Poly::sum(&self.ring, &parts)
    }
}

/// The product over all `p^{2l}` tuples, the zero tuple contributing 1.
///
/// Tuples are enumerated with the last coordinate fastest and multiplied over a
/// p-ary tree, so each subtree is a coset of a coordinate subspace.
pub fn total_conj_chern(ctx: &ChernContext) -> Result<GradedChern> {
    let count = ctx.top_degree();
    if count > MAX_CHERN_FACTORS {
        return Err(Error::SizeGuard(format!(
            "p^(2l) = {count} exceeds {MAX_CHERN_FACTORS}"
        )));
    }
    let one = ctx.ring.one();
    let factors: Vec<Poly> = (0..count)
        .map(|idx| linear_form(&digits(idx, ctx.p, 2 * ctx.l), ctx).map(|f| &one + &f))
        .collect::<Result<_>>()?;
    Ok(GradedChern::split(&Poly::product(&ctx.ring, &factors, ctx.p as usize)))
}

/// Where the Dickson variables `x_1..x_{2l}` go in the Chern ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariableOrder {
    /// `(η_1, ξ_1, …, η_l, ξ_l)`.
    EtaFirst,
    /// `(ξ_1, η_1, …, ξ_l, η_l)`.
    XiFirst,
}

impl VariableOrder {
    fn map(self, l: usize) -> Vec<usize> {
        (0..2 * l)
            .map(|g| match self {
                VariableOrder::EtaFirst => g ^ 1,
                VariableOrder::XiFirst => g,
            })
            .collect()
    }
}

/// Dickson-side data evaluated in the Chern ring.
struct DicksonImages {
    /// `C_{2l,k}` in the order `(η_1, ξ_1, …)` and `(ξ_1, η_1, …)`.
    invariants: Vec<(Poly, Poly)>,
    delta_top: Poly,
    delta_bottom: Poly,
}

fn dickson_images(ctx: &ChernContext) -> Result<DicksonImages> {
    let dctx = DicksonContext::new(ctx.p as u64, 2 * ctx.l)?;
    let eta_first = VariableOrder::EtaFirst.map(ctx.l);
    let xi_first = VariableOrder::XiFirst.map(ctx.l);
    let invariants = dickson_all(&dctx)?
        .iter()
        .map(|c| Ok((c.rename(&ctx.ring, &eta_first)?, c.rename(&ctx.ring, &xi_first)?)))
        .collect::<Result<_>>()?;
    Ok(DicksonImages {
        invariants,
        delta_top: delta_ni(&dctx, 2 * ctx.l)?.rename(&ctx.ring, &eta_first)?,
        delta_bottom: delta_ni(&dctx, 0)?.rename(&ctx.ring, &eta_first)?,
    })
}

fn signed(c: &Poly, k: usize) -> Poly {
    if k.is_multiple_of(2) {
        c.clone()
    } else {
        -c
    }
}

fn parts_checks(report: &mut ReportBuilder, ctx: &ChernContext, chern: &GradedChern, images: &DicksonImages) {
    let p = ctx.p as u64;
    let n = 2 * ctx.l;
    let top = ctx.top_degree();
    let expected_degrees: Vec<u64> = (0..=n).map(|k| top - p.pow(k as u32)).collect();
    report.check("part(0) = 1", || {
        Outcome::from_bool(chern.part(0).is_one(), chern.part(0).to_string())
    });
    for (k, (c, _)) in images.invariants.iter().enumerate().take(n) {
        let d = expected_degrees[k];
        report.check(format!("part({d}) = (-1)^{k} C_{{{n},{k}}}(η_1,ξ_1,…)"), || {
            Outcome::equal(&chern.part(d), &signed(c, k))
        });
    }
    report.check(format!("every other part in 1..={top} is zero"), || {
        let stray: Vec<u64> = chern
            .degrees()
            .filter(|d| *d != 0 && !expected_degrees.contains(d))
            .collect();
        Outcome::from_bool(
            stray.is_empty(),
            match stray.first() {
                None => format!("{} nonzero parts", chern.parts.len()),
                Some(d) => format!("nonzero part in degree {d}"),
            },
        )
    });
    report.check("C_{2l,k} agree under the order (ξ_1,η_1,…)", || {
        Outcome::all(
            images
                .invariants
                .iter()
                .enumerate()
                .map(|(k, (eta_first, xi_first))| (format!("k={k}"), Outcome::equal(xi_first, eta_first))),
        )
    });
    report.check(
        "product = Σ_k (-1)^k C_{2l,k} assembled from Dickson invariants",
        || {
            let parts: Vec<Poly> = images
                .invariants
                .iter()
                .enumerate()
                .map(|(k, (c, _))| signed(c, k))
                .collect();
            Outcome::equal(&chern.total(), &Poly::sum(&ctx.ring, &parts))
        },
    );
    report.check("product invariant under ξ_k <-> η_k and pair-block swaps", || {
        let total = chern.total();
        let mut maps = vec![VariableOrder::EtaFirst.map(ctx.l)];
        if ctx.l >= 2 {
            maps.push((0..n).map(|g| (g + 2) % n).collect());
        }
        let cases = maps
            .iter()
            .map(|map| {
                Ok((
                    format!("{map:?}"),
                    Outcome::equal(&total.rename(&ctx.ring, map)?, &total),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok::<_, Error>(Outcome::all(cases))
    });
}

fn top_checks(report: &mut ReportBuilder, ctx: &ChernContext, chern: &GradedChern, images: &DicksonImages) {
    let p = ctx.p as u64;
    let top = ctx.top_degree();
    report.check(format!("part({}) = Δ_{{2l,2l}}(η_1,ξ_1,…)^(p-1)", top - 1), || {
        Outcome::equal(&chern.part(top - 1), &images.delta_top.pow(p - 1))
    });
    report.check("Δ_{2l,0} = Δ_{2l,2l}^p", || {
        Outcome::equal(&images.delta_bottom, &images.delta_top.pow(p))
    });
}

fn chern_report(
    suite: &str,
    ctx: &ChernContext,
    add: impl FnOnce(&mut ReportBuilder, &ChernContext, &GradedChern, &DicksonImages),
) -> VerificationReport {
    let mut report = ReportBuilder::new(suite, 0).param("p", ctx.p).param("l", ctx.l as u64);
    let mut chern = None;
    report.check(format!("product of {} factors (1 + L_v)", ctx.top_degree()), || {
        let g = total_conj_chern(ctx)?;
        let detail = format!("{} terms", g.parts.values().map(Poly::len).sum::<usize>());
        chern = Some(g);
        Ok::<_, Error>(Outcome::Pass(detail))
    });
    let mut images = None;
    report.check(
        format!("Dickson invariants C_{{{},k}} by determinants", 2 * ctx.l),
        || {
            if chern.is_none() {
                return Err(Error::SizeGuard("product unavailable".into()));
            }
            let found = dickson_images(ctx)?;
            let terms: usize = found.invariants.iter().map(|(c, _)| c.len()).sum();
            images = Some(found);
            Ok::<_, Error>(Outcome::Pass(format!("{} invariants, {terms} terms", 2 * ctx.l + 1)))
        },
    );
    if let (Some(chern), Some(images)) = (chern, images) {
        add(&mut report, ctx, &chern, &images);
    }
    report.finish()
}

/// Every graded part of the product against `(−1)^k C_{2l,k}` or zero.
pub fn verify_chern_parts(ctx: &ChernContext) -> VerificationReport {
    chern_report("chern", ctx, parts_checks)
}

/// The top Chern class as `Δ_{2l,2l}^{p−1}` and `Δ_{2l,0} = Δ_{2l,2l}^p`.
pub fn verify_top_chern(ctx: &ChernContext) -> VerificationReport {
    chern_report("top_chern", ctx, top_checks)
}

/// Both of the above sharing one product computation.
pub fn verify_chern(ctx: &ChernContext) -> VerificationReport {
    chern_report("chern", ctx, |report, ctx, chern, images| {
        parts_checks(report, ctx, chern, images);
        top_checks(report, ctx, chern, images);
    })
}

/// The rank-two description of `θ*(γ_{p²−p})` and `θ*(γ_{p²−1})` for `l = 1`, and
/// the relations they imply for `r_1, r_2`.
pub fn verify_vistoli(p: u64) -> VerificationReport {
    let mut report = ReportBuilder::new("vistoli", 0).param("p", p);
    let setup = || -> Result<(ChernContext, GradedChern, Poly, Poly)> {
        let ctx = ChernContext::new(p, 1)?;
        let chern = total_conj_chern(&ctx)?;
        let r1 = r_closed(p, 1, 1)?.even_to_poly()?;
        let r2 = r_closed(p, 2, 1)?.even_to_poly()?;
        Ok((ctx, chern, r1, r2))
    };
    let (ctx, chern, r1, r2) = match setup() {
        Ok(s) => s,
        Err(e) => {
            report.record("setup", e.into(), 0);
            return report.finish();
        }
    };
    let q = p * p;
    let (xi, eta) = (ctx.xi(1), ctx.eta(1));
    let gamma_low = chern.part(q - p);
    let gamma_top = chern.part(q - 1);

    report.check(
        "θ*(γ_{p²-p}) = -ξ^(p²-p) - η^(p-1)(ξ^(p-1) - η^(p-1))^(p-1)",
        || {
            let inner = &xi.pow(p - 1) - &eta.pow(p - 1);
            let rhs = &(-&xi.pow(q - p)) - &(&eta.pow(p - 1) * &inner.pow(p - 1));
            Outcome::equal(&gamma_low, &rhs)
        },
    );
    report.check("θ*(γ_{p²-1}) = r_1^(p-1) = (ξ^p η - ξ η^p)^(p-1)", || {
        let explicit = &(&xi.pow(p) * &eta) - &(&xi * &eta.pow(p));
        Outcome::all([
            ("closed form".to_string(), Outcome::equal(&gamma_top, &r1.pow(p - 1))),
            ("explicit".to_string(), Outcome::equal(&gamma_top, &explicit.pow(p - 1))),
        ])
    });
    report.check("r_2 = -θ*(γ_{p²-p}) r_1", || {
        Outcome::equal(&r2, &-&(&gamma_low * &r1))
    });
    report.check("r_1^p = θ*(γ_{p²-1}) r_1", || {
        Outcome::equal(&r1.pow(p), &(&gamma_top * &r1))
    });
    report.check("θ*(γ_{p²-p}) = -Σ_k ξ^((p-1)k) η^((p-1)(p-k))", || {
        let sum = (0..=p).fold(ctx.ring.zero(), |acc, k| {
            &acc + &(&xi.pow((p - 1) * k) * &eta.pow((p - 1) * (p - k)))
        });
        Outcome::equal(&gamma_low, &-&sum)
    });
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::parse;

    #[test]
    fn linear_forms() {
        let ctx = ChernContext::new(3, 1).unwrap();
        assert!(linear_form(&[0, 0], &ctx).unwrap().is_zero());
        assert_eq!(linear_form(&[1, 0], &ctx).unwrap(), ctx.xi(1));
        assert_eq!(
            linear_form(&[1, 2], &ctx).unwrap(),
            parse(ctx.ring(), "xi1 + 2*eta1").unwrap()
        );
        assert!(matches!(linear_form(&[1], &ctx), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn graded_parts_at_three() {
        let ctx = ChernContext::new(3, 1).unwrap();
        let chern = total_conj_chern(&ctx).unwrap();
        assert!(chern.part(0).is_one());
        assert!(chern.part(7).is_zero());
        assert!(chern.part(9).is_zero());
        let r1 = parse(ctx.ring(), "xi1^3*eta1 - xi1*eta1^3").unwrap();
        assert_eq!(chern.part(8), r1.pow(2));
        let c21 = parse(ctx.ring(), "eta1^6 + eta1^4*xi1^2 + eta1^2*xi1^4 + xi1^6").unwrap();
        assert_eq!(chern.part(6), -&c21);
        assert_eq!(chern.degrees().collect::<Vec<_>>(), vec![0, 6, 8]);
    }

    #[test]
    fn reports_pass_for_l1() {
        for p in [3, 5] {
            let ctx = ChernContext::new(p, 1).unwrap();
            let report = verify_chern(&ctx);
            assert!(report.passed(), "{report}");
            let report = verify_vistoli(p);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn guards() {
        assert!(ChernContext::new(2, 1).is_err());
        assert!(ChernContext::new(4, 1).is_err());
        assert!(ChernContext::new(3, 0).is_err());
        let big = ChernContext::new(11, 2).unwrap();
        assert!(matches!(total_conj_chern(&big), Err(Error::SizeGuard(_))));
        assert_eq!(verify_chern_parts(&big).count(crate::report::CheckStatus::Skipped), 2);
    }
}
