use std::collections::BTreeMap;

use rayon::prelude::*;

use super::int::CycInt;
use super::matrix::{conj_act, CycMatrix};
use crate::dickson::digits;
use crate::error::{Error, Result};
use crate::galois::field::check_prime;
use crate::report::{Outcome, ReportBuilder, VerificationReport};

/// Largest matrix size `p^l` accepted by [`verify_weight_basis`].
pub const MAX_REP_SIZE: u64 = 27;

fn check_odd_prime(p: u32) -> Result<()> {
    check_prime(p as u64)?;
    if p == 2 {
        return Err(Error::Invalid("the representation needs an odd prime".into()));
    }
    Ok(())
}

/// `(σ̃, τ̃)`: `σ̃ = diag(ω, ω², …, ω^{p−1}, 1)` and `τ̃` the cyclic shift with
/// a 1 in the top-right corner and `I_{p−1}` below it.
pub fn gen_matrices(p: u32) -> (CycMatrix, CycMatrix) {
    let n = p as usize;
    let sigma = CycMatrix::from_fn(p, n, |r, c| {
        if r == c {
            CycInt::omega_pow(p, r as i64 + 1)
        } else {
            CycInt::zero(p)
        }
    });
    let tau = CycMatrix::from_fn(p, n, |r, c| {
        if (c + 1) % n == r {
            CycInt::one(p)
        } else {
            CycInt::zero(p)
        }
    });
    (sigma, tau)
}

/// `A_{i,j} = A_{i,0} A_{0,j}` with `A_{i,0} = [[0, I_i], [I_{p−i}, 0]]` and
/// `A_{0,j} = diag(ω^{(p−1)j}, …, ω^j, 1)`.
pub fn a_matrix(i: u32, j: u32, p: u32) -> Result<CycMatrix> {
    for index in [i, j] {
        if index >= p {
            return Err(Error::IndexOutOfRange {
                index: index as usize,
                expected: format!("0..{p}"),
            });
        }
    }
    let n = p as usize;
    let (i, j) = (i as usize, j as usize);
    // Row r of A_{i,0} has its 1 in column (r − i) mod p; the diagonal factor
    // scales that column by ω^{(p−1−c)j}.
    let entries = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .map(|(r, c)| {
            if (c + i) % n == r {
                CycInt::omega_pow(p, ((n - 1 - c) * j) as i64)
            } else {
                CycInt::zero(p)
            }
        })
        .collect();
    CycMatrix::new(p, n, entries)
}

/// `A_{i_1,j_1} ⊗ ⋯ ⊗ A_{i_l,j_l}` for `index = (i_1, j_1, …, i_l, j_l)`.
pub fn kron_a_matrix(index: &[u32], p: u32) -> Result<CycMatrix> {
    if index.is_empty() || !index.len().is_multiple_of(2) {
        return Err(Error::Invalid("index tuple must have even positive length".into()));
    }
    let mut acc = a_matrix(index[0], index[1], p)?;
    for pair in index[2..].chunks(2) {
        acc = acc.kron(&a_matrix(pair[0], pair[1], p)?)?;
    }
    Ok(acc)
}

fn embed_at(g: &CycMatrix, k: usize, l: usize) -> CycMatrix {
    let p = g.p();
    let id = CycMatrix::identity(p, p as usize);
    (0..l)
        .skip(1)
        .fold(if k == 0 { g.clone() } else { id.clone() }, |acc, slot| {
            acc.kron(if slot == k { g } else { &id }).expect("same prime")
        })
}

/// `(σ_k, τ_k)` for `k = 1..l`: the generator in tensor slot `k` and the identity elsewhere.
pub fn level_generators(p: u32, l: usize) -> Vec<(CycMatrix, CycMatrix)> {
    let (sigma, tau) = gen_matrices(p);
    (0..l).map(|k| (embed_at(&sigma, k, l), embed_at(&tau, k, l))).collect()
}

/// Observed weight `k` with `g ∘ M = ω^k M`, or `None` if `M` is not an eigenvector.
fn eigen_weight(g: &CycMatrix, m: &CycMatrix) -> Result<Option<u32>> {
    let image = conj_act(g, m)?;
    let size = m.size();
    let Some((r, c)) = (0..size * size)
        .map(|k| (k / size, k % size))
        .find(|&(r, c)| !m.get(r, c).is_zero())
    else {
        return Ok(None);
    };
    let p = g.p();
    Ok((0..p).find(|&k| {
        image.get(r, c) == &m.get(r, c).mul_omega_pow(k as i64) && image == m.scale(&CycInt::omega_pow(p, k as i64))
    }))
}

/// Weights observed under `σ_1, …, σ_l` and `τ_1, …, τ_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    pub sigma: Vec<Option<u32>>,
    pub tau: Vec<Option<u32>>,
}

/// Observed weights for every index tuple in `F_p^{2l}`.
#[derive(Clone, Debug)]
pub struct WeightTable {
    pub p: u32,
    pub l: usize,
    pub entries: BTreeMap<Vec<u32>, Weights>,
    /// Determinant of the coordinate matrix of the `A_{i,j}` (only for `l = 1`).
    pub basis_det: Option<CycInt>,
}

impl WeightTable {
    /// Index tuples whose observed weights differ from `(i_k, j_k)`.
    pub fn mismatches(&self) -> Vec<Vec<u32>> {
        self.entries
            .iter()
            .filter(|(index, w)| {
                (0..self.l).any(|k| w.sigma[k] != Some(index[2 * k]) || w.tau[k] != Some(index[2 * k + 1]))
            })
            .map(|(index, _)| index.clone())
            .collect()
    }

    pub fn covers_all(&self) -> bool {
        self.entries.len() as u64 == (self.p as u64).pow(2 * self.l as u32)
    }

    /// Whether any two distinct tuples are separated by some generator.
    pub fn characters_distinct(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.entries
            .values()
            .all(|w| w.sigma.iter().chain(&w.tau).all(Option::is_some) && seen.insert((w.sigma.clone(), w.tau.clone())))
    }
}

/// Coordinates of the `A_{i,j}` in the matrix-unit basis, one column per pair.
fn coordinate_matrix(p: u32) -> Result<CycMatrix> {
    let n = p as usize;
    let basis: Vec<CycMatrix> = (0..n * n)
        .map(|k| a_matrix((k / n) as u32, (k % n) as u32, p))
        .collect::<Result<_>>()?;
    Ok(CycMatrix::from_fn(p, n * n, |unit, col| {
        basis[col].get(unit / n, unit % n).clone()
    }))
}

/// Observes the conjugation weights of every `A_{i_1,j_1} ⊗ ⋯ ⊗ A_{i_l,j_l}`;
/// for `l = 1` also computes the basis determinant.
pub fn verify_weight_basis(p: u32, l: usize) -> Result<WeightTable> {
    check_odd_prime(p)?;
    if l == 0 {
        return Err(Error::Invalid("tensor power must be positive".into()));
    }
    let size = (p as u64).checked_pow(l as u32).filter(|&s| s <= MAX_REP_SIZE);
    if size.is_none() {
        return Err(Error::SizeGuard(format!("p^l = {p}^{l} exceeds {MAX_REP_SIZE}")));
    }
    let generators = level_generators(p, l);
    let count = (p as u64).pow(2 * l as u32);
    let entries = (0..count)
        .into_par_iter()
        .map(|idx| {
            let index = digits(idx, p, 2 * l);
            let a = kron_a_matrix(&index, p)?;
            let mut sigma = Vec::with_capacity(l);
            let mut tau = Vec::with_capacity(l);
            for (s, t) in &generators {
                sigma.push(eigen_weight(s, &a)?);
                tau.push(eigen_weight(t, &a)?);
            }
            Ok((index, Weights { sigma, tau }))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    let basis_det = if l == 1 {
        Some(coordinate_matrix(p)?.determinant())
    } else {
        None
    };
    Ok(WeightTable {
        p,
        l,
        entries,
        basis_det,
    })
}

/// Commutators of `f = τ̃`, `e = σ̃` under the two bracket conventions.
fn commutators(p: u32) -> Result<[(&'static str, CycMatrix); 2]> {
    let (e, f) = gen_matrices(p);
    let (e_inv, f_inv) = (e.monomial_inverse()?, f.monomial_inverse()?);
    let left = f.mul(&e)?.mul(&f_inv)?.mul(&e_inv)?;
    let right = f_inv.mul(&e_inv)?.mul(&f)?.mul(&e)?;
    Ok([("f e f^-1 e^-1", left), ("f^-1 e^-1 f e", right)])
}

fn describe_scalar(m: &CycMatrix) -> String {
    match m.as_scalar().and_then(|c| c.as_omega_power()) {
        Some(k) => format!("w^{k}*I"),
        None => "not a root-of-unity scalar".into(),
    }
}

fn extraspecial_checks(report: &mut ReportBuilder, p: u32) {
    let (sigma, tau) = gen_matrices(p);
    let id = CycMatrix::identity(p, p as usize);
    for (name, g) in [("σ̃", &sigma), ("τ̃", &tau)] {
        report.check(format!("{name}^p = I with exact order p"), || {
            let proper = (1..p as u64).all(|k| g.pow(k) != id);
            Outcome::from_bool(g.pow(p as u64) == id && proper, format!("order {p}"))
        });
    }
    report.check("ω·I commutes with σ̃ and τ̃", || {
        let z = CycMatrix::scalar(p, p as usize, &CycInt::omega_pow(p, 1));
        let ok = [&sigma, &tau].iter().all(|g| z.mul(g).ok() == g.mul(&z).ok());
        Outcome::from_bool(ok, "central")
    });
    let commutators = commutators(p);
    report.check("commutator [τ̃, σ̃] is a central scalar ω^{±1}·I", || {
        let cs = commutators.as_ref().map_err(Clone::clone)?;
        let holds: Vec<&str> = cs
            .iter()
            .filter(|(_, c)| matches!(c.as_scalar().and_then(|s| s.as_omega_power()), Some(k) if k == 1 || k == p - 1))
            .map(|(name, _)| *name)
            .collect();
        let detail = cs
            .iter()
            .map(|(name, c)| format!("{name} = {}", describe_scalar(c)))
            .collect::<Vec<_>>()
            .join("; ");
        Ok::<_, Error>(Outcome::from_bool(
            !holds.is_empty(),
            format!("{detail}; holds for: {}", holds.join(", ")),
        ))
    });
    report.check("z[f,e] = I with z = ω·I", || {
        let cs = commutators.as_ref().map_err(Clone::clone)?;
        let z = CycMatrix::scalar(p, p as usize, &CycInt::omega_pow(p, 1));
        let mut holds = Vec::new();
        for (name, c) in cs {
            if z.mul(c)? == id {
                holds.push(*name);
            }
        }
        let detail = if holds.is_empty() {
            "no bracket convention satisfies the relation".to_string()
        } else {
            format!("holds for: {}", holds.join(", "))
        };
        Ok::<_, Error>(Outcome::from_bool(!holds.is_empty(), detail))
    });
}

/// Relations of the extraspecial group realized by `σ̃, τ̃, ω·I`.
pub fn verify_extraspecial(p: u32) -> VerificationReport {
    let mut report = ReportBuilder::new("extraspecial", 0).param("p", p);
    match check_odd_prime(p) {
        Ok(()) => extraspecial_checks(&mut report, p),
        Err(e) => {
            report.record("prime", e.into(), 0);
        }
    }
    report.finish()
}

/// Extraspecial relations plus the weight splitting of `M_p^{⊗l}`.
pub fn verify_representation(p: u32, l: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("rep", 0).param("p", p).param("l", l as u64);
    if let Err(e) = check_odd_prime(p) {
        report.record("prime", e.into(), 0);
        return report.finish();
    }
    extraspecial_checks(&mut report, p);
    let mut table = None;
    report.check(format!("weight table covers F_p^{}", 2 * l), || {
        let t = verify_weight_basis(p, l)?;
        let outcome = Outcome::from_bool(t.covers_all(), format!("{} index tuples", t.entries.len()));
        table = Some(t);
        Ok::<_, Error>(outcome)
    });
    let Some(table) = table else {
        return report.finish();
    };
    report.check("σ_k∘A = ω^{i_k}A and τ_k∘A = ω^{j_k}A", || {
        let bad = table.mismatches();
        match bad.first() {
            None => Outcome::Pass(format!("{} tuples, {} generators each", table.entries.len(), 2 * l)),
            Some(index) => Outcome::Fail(format!("{} mismatches, first at {index:?}", bad.len())),
        }
    });
    report.check("weight characters pairwise distinct", || {
        Outcome::from_bool(table.characters_distinct(), "every pair of tuples is separated")
    });
    if let Some(det) = &table.basis_det {
        report.check("coordinate determinant of {A_{i,j}} is nonzero", || {
            Outcome::from_bool(!det.is_zero(), format!("det = {det}"))
        });
    }
    report.finish()
}
