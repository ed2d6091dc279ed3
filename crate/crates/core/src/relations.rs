//! (2,2)-partitions of four indices, the polynomials `R_{i,j}` and `R_j` in
//! `F_p[Y_1..Y_4]` with `deg Y_i = p^i + 1`, and their evaluation at `r_1..r_4`.

use std::fmt;

use crate::chern::{total_conj_chern, ChernContext};
use crate::dickson::{delta_ni, DicksonContext};
use crate::error::{Error, Result};
use crate::galois::field::check_prime;
use crate::galois::{Poly, PolyRing};
use crate::report::{Outcome, ReportBuilder, VerificationReport};
use crate::steenrod::r_closed;

/// Whether `p = 5` is accepted by the `R_j(r)` checks by default.
pub const ALLOW_P5: bool = cfg!(feature = "p5");

/// Four distinct non-negative integers, ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet4([u32; 4]);

impl IndexSet4 {
    pub fn new(mut elements: [u32; 4]) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("index set {elements:?} has repeated entries")));
        }
        Ok(IndexSet4(elements))
    }

    /// `I_j = {0, …, 4} − {j}`.
    pub fn complement(j: u32) -> Result<Self> {
        if j > 4 {
            return Err(Error::IndexOutOfRange {
                index: j as usize,
                expected: "0..=4".into(),
            });
        }
        let mut rest = (0..=4).filter(|&i| i != j);
        Ok(IndexSet4(std::array::from_fn(|_| rest.next().expect("four remain"))))
    }

    pub fn elements(&self) -> [u32; 4] {
        self.0
    }

    /// All 4-element subsets of `0..n`, in lexicographic order.
    pub fn all_below(n: u32) -> Vec<IndexSet4> {
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        out.push(IndexSet4([a, b, c, d]));
                    }
                }
            }
        }
        out
    }
}

/// `{ρ(1), ρ(2)}` with each block sorted and the blocks sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Partition22 {
    blocks: [[u32; 2]; 2],
}

impl Partition22 {
    pub fn new(a: [u32; 2], b: [u32; 2]) -> Result<Self> {
        let sort = |[x, y]: [u32; 2]| if x < y { [x, y] } else { [y, x] };
        let (a, b) = (sort(a), sort(b));
        if a[0] == a[1] || b[0] == b[1] || a.iter().any(|x| b.contains(x)) {
            return Err(Error::Invalid("blocks must be disjoint pairs".into()));
        }
        Ok(Partition22 {
            blocks: if a <= b { [a, b] } else { [b, a] },
        })
    }

    pub fn blocks(&self) -> [[u32; 2]; 2] {
        self.blocks
    }

    pub fn set(&self) -> IndexSet4 {
        let [[a, b], [c, d]] = self.blocks;
        IndexSet4::new([a, b, c, d]).expect("blocks are disjoint")
    }
}

impl fmt::Display for Partition22 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.blocks;
        write!(f, "{{{{{a},{b}}},{{{c},{d}}}}}")
    }
}

/// `u, v, w` in that order.
pub fn partitions22(set: IndexSet4) -> [Partition22; 3] {
    let [i1, i2, i3, i4] = set.0;
    let make = |a, b| Partition22::new(a, b).expect("distinct indices");
    [
        make([i1, i2], [i3, i4]),
        make([i1, i3], [i2, i4]),
        make([i1, i4], [i2, i3]),
    ]
}

fn permutation_sign(images: [u32; 4]) -> i8 {
    let inversions = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .filter(|&(a, b)| images[a] > images[b])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of `(i_1 i_2 i_3 i_4) ↦ (k_1 l_1 k_2 l_2)`, listing block `first` first.
pub fn epsilon_ordered(rho: &Partition22, first: usize) -> i8 {
    let [a, b] = if first == 0 {
        rho.blocks
    } else {
        [rho.blocks[1], rho.blocks[0]]
    };
    permutation_sign([a[0], a[1], b[0], b[1]])
}

/// `ε(ρ)`; both block orders give the same sign.
pub fn epsilon(rho: &Partition22) -> i8 {
    let sign = epsilon_ordered(rho, 0);
    debug_assert_eq!(sign, epsilon_ordered(rho, 1));
    sign
}

/// `(ρ/κ)` with block `domain` of `ρ` as the domain of the pairing bijection.
pub fn slash_from(rho: &Partition22, kappa: &Partition22, domain: usize) -> Result<i8> {
    if rho == kappa {
        return Err(Error::SamePartition);
    }
    if rho.set() != kappa.set() {
        return Err(Error::Invalid("partitions of different index sets".into()));
    }
    let from = rho.blocks[domain];
    let partner = |x: u32| {
        let block = kappa.blocks.iter().find(|b| b.contains(&x)).expect("same set");
        if block[0] == x {
            block[1]
        } else {
            block[0]
        }
    };
    Ok(if partner(from[0]) < partner(from[1]) { 1 } else { -1 })
}

/// `(ρ/κ)`, taking `ρ(1)` as the domain.
pub fn slash(rho: &Partition22, kappa: &Partition22) -> Result<i8> {
    slash_from(rho, kappa, 0)
}

/// Sign values, well-definedness, and the vanishing sums for one index set.
pub fn verify_sign_identity(set: IndexSet4) -> VerificationReport {
    let mut report = ReportBuilder::new("signs", 0).param("set", format!("{:?}", set.0));
    signs_checks(&mut report, set, "");
    report.finish()
}

fn signs_checks(report: &mut ReportBuilder, set: IndexSet4, prefix: &str) {
    let parts = partitions22(set);
    report.check(format!("{prefix}ε and (ρ/κ) are well defined"), || {
        let mut cases = Vec::new();
        for rho in &parts {
            cases.push((
                format!("ε{rho}"),
                Outcome::from_bool(epsilon_ordered(rho, 0) == epsilon_ordered(rho, 1), ""),
            ));
            for kappa in parts.iter().filter(|k| *k != rho) {
                let same = slash_from(rho, kappa, 0)? == slash_from(rho, kappa, 1)?;
                cases.push((format!("({rho}/{kappa})"), Outcome::from_bool(same, "")));
            }
        }
        Ok::<_, Error>(Outcome::all(cases))
    });
    report.check(
        format!("{prefix}Σ_(ρ≠κ) ε(ρ)(ρ/κ) = 0 for κ = u, v, w"),
        || {
            let mut cases = Vec::new();
            for (name, kappa) in ["u", "v", "w"].iter().zip(&parts) {
                let mut sum = 0i32;
                for rho in parts.iter().filter(|r| *r != kappa) {
                    sum += (epsilon(rho) * slash(rho, kappa)?) as i32;
                }
                cases.push((
                    format!("κ = {name}"),
                    Outcome::from_bool(sum == 0, format!("sum {sum}")),
                ));
            }
            Ok::<_, Error>(Outcome::all(cases))
        },
    );
}

/// The sign identity on every 4-subset of `{0..6}` and the explicit values on `{0,1,2,3}`.
pub fn verify_signs() -> VerificationReport {
    let mut report = ReportBuilder::new("signs", 0);
    report.check("ε(u) = 1, ε(v) = -1, ε(w) = 1 on {0,1,2,3}", || {
        let [u, v, w] = partitions22(IndexSet4([0, 1, 2, 3]));
        let got = [epsilon(&u), epsilon(&v), epsilon(&w)];
        Outcome::from_bool(got == [1, -1, 1], format!("{got:?}"))
    });
    report.check("(u/v) = (v/u) = (w/u) = 1, (u/w) = (v/w) = (w/v) = -1", || {
        let [u, v, w] = partitions22(IndexSet4([0, 1, 2, 3]));
        let got = [
            slash(&u, &v)?,
            slash(&v, &u)?,
            slash(&w, &u)?,
            slash(&u, &w)?,
            slash(&v, &w)?,
            slash(&w, &v)?,
        ];
        Ok::<_, Error>(Outcome::from_bool(got == [1, 1, 1, -1, -1, -1], format!("{got:?}")))
    });
    let sets = IndexSet4::all_below(7);
    report.check(
        format!("sign identity on all {} subsets of {{0..6}}", sets.len()),
        || {
            Outcome::all(sets.iter().map(|set| {
                let mut sub = ReportBuilder::new("signs", 0);
                signs_checks(&mut sub, *set, "");
                let sub = sub.finish();
                let outcome = match sub.checks.iter().find(|c| c.status != crate::report::CheckStatus::Pass) {
                    None => Outcome::pass(),
                    Some(c) => Outcome::Fail(format!("{}: {}", c.name, c.detail)),
                };
                (format!("{:?}", set.0), outcome)
            }))
        },
    );
    report.finish()
}

/// `F_p[Y_1..Y_4]` and the weights `p^i + 1`.
pub fn y_ring(p: u64) -> Result<(PolyRing, Vec<u64>)> {
    let ring = PolyRing::numbered(p, "Y", 4)?;
    let weights = (1..=4).map(|i| p.pow(i) + 1).collect();
    Ok((ring, weights))
}

/// `R_{i,j} = Y_{j−i}^{p^i}`.
pub fn r_ij(i: u32, j: u32, p: u64) -> Result<Poly> {
    if !(i < j && j <= 4) {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            expected: format!("0 <= i < j <= 4 (got i = {i})"),
        });
    }
    let (ring, _) = y_ring(p)?;
    Ok(ring.var((j - i - 1) as usize).pow(p.pow(i)))
}

/// `R_j = Σ_{ρ ∈ P(I_j)} ε(ρ) R_{ρ(1)} R_{ρ(2)}`.
pub fn r_j_poly(j: u32, p: u64) -> Result<Poly> {
    let (ring, _) = y_ring(p)?;
    let mut sum = ring.zero();
    for rho in partitions22(IndexSet4::complement(j)?) {
        let [[a, b], [c, d]] = rho.blocks();
        let term = &r_ij(a, b, p)? * &r_ij(c, d, p)?;
        sum = if epsilon(&rho) > 0 { &sum + &term } else { &sum - &term };
    }
    Ok(sum)
}

/// Weighted degree `(1 + p + p² + p³ + p⁴) − p^j` of `R_j`.
pub fn r_j_weight(j: u32, p: u64) -> u64 {
    (0..=4).map(|i| p.pow(i)).sum::<u64>() - p.pow(j)
}

/// `R_j(aY) = a² R_j(Y)` for all `a ∈ F_p` and `j ≤ 4`.
pub fn verify_quadratic(p: u64) -> VerificationReport {
    let mut report = ReportBuilder::new("quadratic", 0).param("p", p);
    quadratic_checks(&mut report, p);
    report.finish()
}

fn quadratic_checks(report: &mut ReportBuilder, p: u64) {
    report.check("R_j(aY_1,…,aY_4) = a² R_j(Y_1,…,Y_4)", || {
        let (ring, _) = y_ring(p)?;
        let mut cases = Vec::new();
        for j in 0..=4 {
            let r = r_j_poly(j, p)?;
            for a in 0..p as i64 {
                let images: Vec<Poly> = (0..4).map(|i| ring.var(i).scale(a)).collect();
                cases.push((
                    format!("j={j} a={a}"),
                    Outcome::equal(&r.substitute(&images)?, &r.scale(a * a)),
                ));
            }
        }
        Ok::<_, Error>(Outcome::all(cases))
    });
    report.check(
        "R_j homogeneous of weight Σp^i - p^j; R_{i,j} of weight p^i + p^j",
        || {
            let (_, weights) = y_ring(p)?;
            let mut cases = Vec::new();
            for j in 0..=4 {
                let w = r_j_poly(j, p)?.weighted_homogeneous_degree(&weights);
                cases.push((
                    format!("R_{j}"),
                    Outcome::from_bool(w == Some(r_j_weight(j, p)), format!("{w:?}")),
                ));
                for i in 0..j {
                    let w = r_ij(i, j, p)?.weighted_homogeneous_degree(&weights);
                    cases.push((
                        format!("R_{i},{j}"),
                        Outcome::from_bool(w == Some(p.pow(i) + p.pow(j)), format!("{w:?}")),
                    ));
                }
            }
            Ok::<_, Error>(Outcome::all(cases))
        },
    );
}

fn check_relation_prime(p: u64, allow_p5: bool) -> Result<()> {
    check_prime(p)?;
    match p {
        3 => Ok(()),
        5 if allow_p5 => Ok(()),
        _ => Err(Error::SizeGuard(format!(
            "relations at p = {p} need p = 3 (or p = 5 with the p5 feature)"
        ))),
    }
}

/// `r_1..r_4` in `F_p[ξ_1, η_1, ξ_2, η_2]` (half degrees).
fn r_values(p: u64) -> Result<Vec<Poly>> {
    (1..=4).map(|i| r_closed(p, i, 2)?.even_to_poly()).collect()
}

/// `Δ_{4,j}(η_1, ξ_1, η_2, ξ_2)` in the ring of the `r_i`.
fn deltas(p: u64, target: &PolyRing) -> Result<Vec<Poly>> {
    let ctx = DicksonContext::new(p, 4)?;
    (0..=4)
        .map(|j| delta_ni(&ctx, j)?.rename(target, &[1, 0, 3, 2]))
        .collect()
}

/// `R_j(r_1, r_2, r_3, r_4) = Δ_{4,j}(η_1, ξ_1, η_2, ξ_2)` for `j = 0..4`.
pub fn verify_r_values(p: u64, allow_p5: bool) -> VerificationReport {
    let mut report = ReportBuilder::new("r_values", 0).param("p", p);
    r_value_checks(&mut report, p, allow_p5);
    report.finish()
}

fn r_value_checks(report: &mut ReportBuilder, p: u64, allow_p5: bool) {
    let setup = check_relation_prime(p, allow_p5).and_then(|()| {
        let rs = r_values(p)?;
        let ds = deltas(p, rs[0].ring())?;
        Ok((rs, ds))
    });
    for j in 0..=4 {
        report.check(
            format!("R_{j}(r_1,…,r_4) = Δ_{{4,{j}}}(η_1,ξ_1,η_2,ξ_2)"),
            || {
                let (rs, ds) = setup.as_ref().map_err(Clone::clone)?;
                let lhs = r_j_poly(j, p)?.substitute(rs)?;
                let expected = r_j_weight(j, p);
                if lhs.homogeneous_degree() != Some(expected) || ds[j as usize].homogeneous_degree() != Some(expected) {
                    return Ok(Outcome::Fail(format!(
                        "sides are not both homogeneous of degree {expected}"
                    )));
                }
                Ok::<_, Error>(Outcome::equal(&lhs, &ds[j as usize]))
            },
        );
    }
}

/// `R_j(r) = (−1)^j θ*(γ_{p⁴−p^j}) R_4(r)` for `j = 0..4`, and the four relations
/// written out explicitly.
pub fn verify_relations(p: u64, allow_p5: bool) -> VerificationReport {
    let mut report = ReportBuilder::new("relations", 0).param("p", p);
    relations_checks(&mut report, p, allow_p5);
    report.finish()
}

fn relations_checks(report: &mut ReportBuilder, p: u64, allow_p5: bool) {
    let mut setup = None;
    report.check("θ*(γ_k) from the product over F_p^4", || {
        check_relation_prime(p, allow_p5)?;
        let rs = r_values(p)?;
        let chern = total_conj_chern(&ChernContext::new(p, 2)?)?;
        let detail = format!("{} nonzero graded parts", chern.degrees().count());
        setup = Some((rs, chern));
        Ok::<_, Error>(Outcome::Pass(detail))
    });
    let Some((rs, chern)) = setup else {
        return;
    };
    let top = p.pow(4);
    let gamma = |j: u32| chern.part(top - p.pow(j));
    let r4_of_r = r_j_poly(4, p).and_then(|r| r.substitute(&rs));
    for j in 0..=4u32 {
        report.check(format!("R_{j}(r) = (-1)^{j} θ*(γ_{{p^4-p^{j}}}) R_4(r)"), || {
            let r4 = r4_of_r.as_ref().map_err(Clone::clone)?;
            let lhs = r_j_poly(j, p)?.substitute(&rs)?;
            let g = gamma(j);
            if j == 4 && !g.is_one() {
                return Ok(Outcome::Fail("γ_0 is not 1".into()));
            }
            let rhs = &g * r4;
            Ok::<_, Error>(Outcome::equal(&lhs, &if j % 2 == 0 { rhs } else { -&rhs }))
        });
    }

    // The same relations with every power written out by hand.
    let (r1, r2, r3, r4) = (&rs[0], &rs[1], &rs[2], &rs[3]);
    let (p2, p3) = (p * p, p * p * p);
    let r4_display = &(&r1.pow(p2 + 1) - &r2.pow(p + 1)) + &(&r1.pow(p) * r3);
    let displays: [(&str, Poly, Poly); 4] = [
        (
            "r_1^p r_4 + r_1 r_2^(p²) - r_2 r_3^p = -θ*(γ_{p^4-p^3})(…)",
            &(&(&r1.pow(p) * r4) + &(r1 * &r2.pow(p2))) - &(r2 * &r3.pow(p)),
            -&(&gamma(3) * &r4_display),
        ),
        (
            "r_1^(p³+1) + r_2^p r_4 - r_3^(p+1) = θ*(γ_{p^4-p^2})(…)",
            &(&r1.pow(p3 + 1) + &(&r2.pow(p) * r4)) - &r3.pow(p + 1),
            &gamma(2) * &r4_display,
        ),
        (
            "r_1^(p³) r_2 - r_2^(p²) r_3 + r_1^(p²) r_4 = -θ*(γ_{p^4-p})(…)",
            &(&(&r1.pow(p3) * r2) - &(&r2.pow(p2) * r3)) + &(&r1.pow(p2) * r4),
            -&(&gamma(1) * &r4_display),
        ),
        (
            "r_1^(p³+p) - r_2^(p²+p) + r_1^(p²) r_3^p = θ*(γ_{p^4-1})(…)",
            &(&r1.pow(p3 + p) - &r2.pow(p2 + p)) + &(&r1.pow(p2) * &r3.pow(p)),
            &gamma(0) * &r4_display,
        ),
    ];
    for (name, lhs, rhs) in &displays {
        report.check(*name, || Outcome::equal(lhs, rhs));
    }
}

/// Quadratic scaling, the `R_j(r) = Δ_{4,j}` identities and the relations, for the CLI.
pub fn verify_relations_suite(p: u64, allow_p5: bool) -> VerificationReport {
    let mut report = ReportBuilder::new("relations", 0).param("p", p);
    quadratic_checks(&mut report, p);
    r_value_checks(&mut report, p, allow_p5);
    relations_checks(&mut report, p, allow_p5);
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::parse;

    #[test]
    fn partitions_of_0123() {
        let set = IndexSet4::new([3, 1, 0, 2]).unwrap();
        let [u, v, w] = partitions22(set);
        assert_eq!(u.to_string(), "{{0,1},{2,3}}");
        assert_eq!(v.blocks(), [[0, 2], [1, 3]]);
        assert_eq!(w.blocks(), [[0, 3], [1, 2]]);
        for rho in [u, v, w] {
            let [[a, b], [c, d]] = rho.blocks();
            let mut all = [a, b, c, d];
            all.sort_unstable();
            assert_eq!(all, set.elements());
        }
        assert!(IndexSet4::new([1, 1, 2, 3]).is_err());
        assert_eq!(IndexSet4::complement(2).unwrap().elements(), [0, 1, 3, 4]);
    }

    #[test]
    fn signs_and_slashes() {
        let [u, v, w] = partitions22(IndexSet4::new([0, 1, 2, 3]).unwrap());
        assert_eq!([epsilon(&u), epsilon(&v), epsilon(&w)], [1, -1, 1]);
        assert_eq!(slash(&u, &v), Ok(1));
        assert_eq!(slash(&u, &w), Ok(-1));
        assert_eq!(slash(&w, &u), Ok(1));
        assert_eq!(slash(&u, &u), Err(Error::SamePartition));
        for set in [[0, 1, 2, 3], [0, 1, 2, 4], [1, 2, 3, 4]] {
            assert!(verify_sign_identity(IndexSet4::new(set).unwrap()).passed());
        }
        assert!(verify_signs().passed());
    }

    #[test]
    fn r_polynomials() {
        let p = 3;
        let (ring, _) = y_ring(p).unwrap();
        assert_eq!(r_ij(2, 3, p).unwrap(), parse(&ring, "Y1^9").unwrap());
        assert_eq!(r_j_poly(4, p).unwrap(), parse(&ring, "Y1^10 - Y2^4 + Y1^3*Y3").unwrap());
        assert_eq!(
            r_j_poly(3, p).unwrap(),
            parse(&ring, "Y1*Y2^9 - Y2*Y3^3 + Y1^3*Y4").unwrap()
        );
        assert_eq!(
            r_j_poly(0, p).unwrap(),
            parse(&ring, "Y1^30 - Y2^12 + Y1^9*Y3^3").unwrap()
        );
        assert!(r_ij(3, 3, p).is_err());
        assert!(r_j_poly(5, p).is_err());
        assert!(verify_quadratic(3).passed());
        assert!(verify_quadratic(5).passed());
    }

    #[test]
    fn r_values_and_relations_at_three() {
        let report = verify_r_values(3, false);
        assert!(report.passed(), "{report}");
        let report = verify_relations(3, false);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 10);
        assert_eq!(verify_r_values(7, true).count(crate::report::CheckStatus::Skipped), 5);
    }
}
