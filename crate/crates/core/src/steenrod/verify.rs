use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::class::{CohAlgebra, CohClass};
use super::ops::{milnor_q, r_closed, x_class};
use crate::error::{Error, Result};
use crate::galois::{jacobian_det, Poly};
use crate::report::{Outcome, ReportBuilder, VerificationReport};

/// Largest index `i` for which `Q_i(x̄) = r_i` is checked.
const CLOSED_FORM_DEPTH: u32 = 4;
/// Largest index used in the derivation and anticommutation checks.
const PROPERTY_DEPTH: u32 = 3;

fn class_outcome(lhs: &CohClass, rhs: &CohClass) -> Outcome {
    if lhs == rhs {
        return Outcome::Pass(format!("{} terms", lhs.len()));
    }
    match (lhs.even_to_poly(), rhs.even_to_poly()) {
        (Ok(a), Ok(b)) => Outcome::equal(&a, &b),
        _ => Outcome::Fail(format!("{} vs {}", truncate(lhs), truncate(rhs))),
    }
}

fn truncate(x: &CohClass) -> String {
    let s = x.to_string();
    match s.char_indices().nth(120) {
        Some((at, _)) => format!("{}...", &s[..at]),
        None => s,
    }
}

fn sign(degree: u64) -> i64 {
    if degree.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Small random homogeneous classes, the shape used by the property checks.
fn samples(alg: &CohAlgebra, seed: u64, count: usize) -> Vec<CohClass> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|t| alg.random_homogeneous(&mut rng, 1 + (t as u64 % 5), 3))
        .collect()
}

/// `r_1, …, r_{2l}` as polynomials in `xi1, eta1, …`.
fn r_polys(p: u64, l: usize) -> Result<Vec<Poly>> {
    (1..=2 * l as u32).map(|i| r_closed(p, i, l)?.even_to_poly()).collect()
}

/// Jacobian determinant of `r_1..r_{2l}` in `ξ_1, η_1, …, ξ_l, η_l`.
pub fn verify_jacobian_independence(p: u64, l: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("jacobian", 0).param("p", p).param("l", l as u64);
    jacobian_check(&mut report, p, l);
    report.finish()
}

fn jacobian_check(report: &mut ReportBuilder, p: u64, l: usize) {
    report.check("Jacobian of (r_1..r_2l) is nonzero", || {
        if l > 2 {
            return Err(Error::SizeGuard(format!("Jacobian check supports l <= 2, got {l}")));
        }
        let rs = r_polys(p, l)?;
        let vars: Vec<usize> = (0..2 * l).collect();
        let det = jacobian_det(&rs, &vars)?;
        Ok(Outcome::from_bool(
            !det.is_zero(),
            format!("{} terms, degree {}", det.len(), det.degree().unwrap_or(0)),
        ))
    });
}

/// Closed forms `Q_i(x̄) = r_i` and the structural properties of `β`, `P`, `Q_i`
/// on `trials` seeded random classes.
pub fn verify_steenrod(p: u64, l: usize, trials: usize, seed: u64) -> VerificationReport {
    let mut report = ReportBuilder::new("steenrod", seed)
        .param("p", p)
        .param("l", l as u64)
        .param("trials", trials as u64);
    let alg = match CohAlgebra::for_level(p, l) {
        Ok(alg) => alg,
        Err(e) => {
            report.record("algebra", e.into(), 0);
            return report.finish();
        }
    };
    let x = x_class(p, l).expect("algebra already validated");

    report.check("x̄ has degree 3 and β(x̄) = 0", || {
        Outcome::from_bool(
            x.homogeneous_degree() == Some(3) && x.bockstein().is_zero(),
            x.to_string(),
        )
    });
    for i in 0..=CLOSED_FORM_DEPTH {
        report.check(format!("Q_{i}(x̄) = r_{i}"), || {
            Ok::<_, Error>(class_outcome(&milnor_q(i, &x)?, &r_closed(p, i, l)?))
        });
    }

    let pool = samples(&alg, seed, trials);
    let partners = samples(&alg, seed.wrapping_add(1), trials);

    report.check("β² = 0", || {
        Outcome::all(pool.iter().enumerate().map(|(t, x)| {
            (
                format!("sample {t}"),
                Outcome::from_bool(x.bockstein().bockstein().is_zero(), ""),
            )
        }))
    });
    report.check(format!("Q_i raises degree by 2p^i - 1 (i <= {PROPERTY_DEPTH})"), || {
        let mut cases = Vec::new();
        for i in 0..=PROPERTY_DEPTH {
            let shift = 2 * p.pow(i) - 1;
            for (t, x) in pool.iter().enumerate() {
                let q = milnor_q(i, x)?;
                let ok = q.is_zero() || q.homogeneous_degree() == x.homogeneous_degree().map(|d| d + shift);
                cases.push((format!("i={i} sample {t}"), Outcome::from_bool(ok, "")));
            }
        }
        Ok::<_, Error>(Outcome::all(cases))
    });
    report.check(format!("Q_i is a derivation (i <= {PROPERTY_DEPTH})"), || {
        let mut cases = Vec::new();
        let mut nontrivial = 0;
        for i in 0..=PROPERTY_DEPTH {
            for (t, (x, y)) in pool.iter().zip(&partners).enumerate() {
                let d = x.homogeneous_degree().unwrap_or(0);
                let lhs = milnor_q(i, &(x * y))?;
                let rhs = &(&milnor_q(i, x)? * y) + &(x * &milnor_q(i, y)?).scale(sign(d));
                nontrivial += usize::from(!lhs.is_zero());
                cases.push((format!("i={i} sample {t}"), class_outcome(&lhs, &rhs)));
            }
        }
        Ok::<_, Error>(match Outcome::all(cases) {
            Outcome::Pass(d) => Outcome::Pass(format!("{d}, {nontrivial} with Q_i(xy) != 0")),
            other => other,
        })
    });
    report.check(format!("Q_iQ_j + Q_jQ_i = 0 (i, j <= {PROPERTY_DEPTH})"), || {
        let mut cases = Vec::new();
        for (t, x) in pool.iter().enumerate() {
            let firsts: Vec<CohClass> = (0..=PROPERTY_DEPTH).map(|i| milnor_q(i, x)).collect::<Result<_>>()?;
            for i in 0..=PROPERTY_DEPTH {
                for j in i..=PROPERTY_DEPTH {
                    let sum = &milnor_q(i, &firsts[j as usize])? + &milnor_q(j, &firsts[i as usize])?;
                    cases.push((format!("i={i} j={j} sample {t}"), Outcome::from_bool(sum.is_zero(), "")));
                }
            }
        }
        Ok::<_, Error>(Outcome::all(cases))
    });
    report.check("total power is a ring homomorphism with P^0 = id", || {
        Outcome::all(pool.iter().zip(&partners).enumerate().map(|(t, (x, y))| {
            let hom = (x * y).total_power() == &x.total_power() * &y.total_power();
            let unit = x.power_op(0) == *x && x.total_power().component(x.homogeneous_degree().unwrap_or(0)) == *x;
            (format!("sample {t}"), Outcome::from_bool(hom && unit, ""))
        }))
    });
    jacobian_check(&mut report, p, l);
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobian_oracle_l1() {
        for p in [3u64, 5] {
            let ring = CohAlgebra::new(p, 2).unwrap().even_ring();
            let (xi, eta) = (ring.var(0), ring.var(1));
            let q = |i: u32| p.pow(i);
            // entries ∂r_i/∂ξ = −η^{p^i}, ∂r_i/∂η = ξ^{p^i}
            let expected = &(&eta.pow(q(2)) * &xi.pow(q(1))) - &(&eta.pow(q(1)) * &xi.pow(q(2)));
            let rs = r_polys(p, 1).unwrap();
            assert_eq!(jacobian_det(&rs, &[0, 1]).unwrap(), expected);
            assert!(verify_jacobian_independence(p, 1).passed());
        }
    }

    #[test]
    fn steenrod_report_small() {
        let report = verify_steenrod(3, 1, 20, 7);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 12);
    }
}
