//! Which unipotent classes meet which Bruhat cells.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{is_unipotent, FqGroupInstance, GeometricClassOverFq, GroupKind, Model};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::partition::dominance_leq;
use crate::phi::phi_full;
use crate::unipotent::UnipotentLabel;
use crate::weyl::classes::ClassLabel;
use crate::weyl::WeylElement;

fn first_min_element<F: Field>(c: &ClassLabel, inst: &FqGroupInstance<F>) -> Result<WeylElement> {
    inst.weyl
        .min_length(c)?
        .elements
        .first()
        .cloned()
        .ok_or_else(|| Error::NotFound(format!("no element of minimal length in {c}")))
}

/// Some member g of γ has rel_position(F_0, g F_0) = w.
pub fn dsv_test_at<F: Field>(w: &WeylElement, gamma: &GeometricClassOverFq, inst: &FqGroupInstance<F>) -> bool {
    gamma.members.iter().any(|&i| inst.position_at(i) == w)
}

/// B_w^γ ≠ ∅ for the first w of C_min.
pub fn dsv_test<F: Field>(c: &ClassLabel, gamma: &GeometricClassOverFq, inst: &FqGroupInstance<F>) -> Result<bool> {
    Ok(dsv_test_at(&first_min_element(c, inst)?, gamma, inst))
}

/// Labels of the classes meeting the cell of w.
fn meeting_at<F: Field>(w: &WeylElement, inst: &FqGroupInstance<F>) -> Vec<UnipotentLabel> {
    inst.unipotent_classes().iter().filter(|g| dsv_test_at(w, g, inst)).map(|g| g.label.clone()).collect()
}

/// Classes γ with C ⊣ γ, read off at the first element of C_min.
pub fn meeting_classes<F: Field>(c: &ClassLabel, inst: &FqGroupInstance<F>) -> Result<Vec<UnipotentLabel>> {
    Ok(meeting_at(&first_min_element(c, inst)?, inst))
}

fn parts(l: &UnipotentLabel) -> Result<&crate::partition::Partition> {
    l.parts().ok_or_else(|| Error::Precondition(format!("{l} is not a Jordan type")))
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalClassReport {
    pub group: String,
    pub class: String,
    /// The w ∈ C_min used, one-based.
    pub w: Vec<usize>,
    pub meeting: Vec<String>,
    pub minimal: Vec<String>,
    pub expected: String,
    pub unique: bool,
    pub matches_phi: bool,
    /// Every w ∈ C_min gives the same set of meeting classes.
    pub independent_of_w: bool,
}

impl MinimalClassReport {
    pub fn holds(&self) -> bool {
        self.unique && self.matches_phi && self.independent_of_w
    }
}

/// Dominance-minimal classes meeting the cell of C, compared with Φ(C).
pub fn minimal_class<F: Field>(c: &ClassLabel, inst: &FqGroupInstance<F>) -> Result<MinimalClassReport> {
    if inst.q.is_multiple_of(2) {
        return Err(Error::Precondition("closure order is dominance only in odd characteristic".into()));
    }
    let mins = inst.weyl.min_length(c)?;
    let w = mins.elements.first().ok_or_else(|| Error::NotFound(format!("C_min of {c}")))?;
    let meeting = meeting_at(w, inst);
    let independent_of_w = mins.elements.iter().all(|x| meeting_at(x, inst) == meeting);
    let mut minimal = Vec::new();
    for a in &meeting {
        let mut is_min = true;
        for b in &meeting {
            if a != b && dominance_leq(parts(b)?, parts(a)?)? {
                is_min = false;
            }
        }
        if is_min {
            minimal.push(a.clone());
        }
    }
    let expected = phi_full(&inst.weyl, c, F::characteristic())?;
    let unique = minimal.len() == 1;
    let matches_phi = unique && minimal[0].matches(&expected);
    Ok(MinimalClassReport {
        group: format!("{}(F_{})", inst.kind, inst.q),
        class: c.to_string(),
        w: w.as_perm().map(|p| p.one_based()).unwrap_or_default(),
        meeting: meeting.iter().map(|l| l.to_string()).collect(),
        minimal: minimal.iter().map(|l| l.to_string()).collect(),
        expected: expected.to_string(),
        unique,
        matches_phi,
        independent_of_w,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub group: String,
    pub class: String,
    pub expected: String,
    pub meeting: Vec<String>,
    pub holds: bool,
}

/// C ⊣ Φ(C) at q = 2, where the class is identified by Jordan type and the
/// form flags.
pub fn bad_char_membership<F: Field>(c: &ClassLabel, inst: &FqGroupInstance<F>) -> Result<MembershipReport> {
    if inst.q != 2 {
        return Err(Error::Precondition(format!("membership check is for q = 2, not {}", inst.q)));
    }
    let expected = phi_full(&inst.weyl, c, 2)?;
    let meeting = meeting_classes(c, inst)?;
    let holds = meeting.iter().any(|l| l.matches(&expected));
    Ok(MembershipReport {
        group: format!("{}(F_2)", inst.kind),
        class: c.to_string(),
        expected: expected.to_string(),
        meeting: meeting.iter().map(|l| l.to_string()).collect(),
        holds,
    })
}

/// |B w B ∩ γ| for every unipotent γ, without enumerating G: the map
/// (u, t, u') ↦ u ẇ t u' covers B w B exactly q^{N-ℓ(w)} times.
pub fn cell_unipotent_counts<F: Field>(kind: GroupKind, w: &WeylElement) -> Result<BTreeMap<UnipotentLabel, u64>> {
    let q = F::order().ok_or_else(|| Error::Precondition("finite field required".into()))?;
    let model = Model::<F>::new(kind)?;
    let weyl = kind.weyl();
    let u = model.unipotent_radical(&weyl)?;
    let t = model.torus();
    let work = (u.len() as u64).saturating_mul(u.len() as u64).saturating_mul(t.len() as u64);
    let budget = crate::enumeration_budget();
    if work > budget.saturating_mul(16) {
        return Err(Error::Budget { needed: work, budget: budget.saturating_mul(16) });
    }
    let lw = model.lift(&weyl, w)?;
    let tb: Vec<_> = t.iter().flat_map(|t| u.iter().map(move |v| t * v)).collect();
    let raw = u
        .par_iter()
        .map(|x| {
            let xw = x * &lw;
            let mut acc: BTreeMap<UnipotentLabel, u64> = BTreeMap::new();
            for b in &tb {
                let g = &xw * b;
                if is_unipotent(&g) {
                    *acc.entry(model.label(&g)?).or_default() += 1;
                }
            }
            Ok::<_, Error>(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            Ok(a)
        })?;
    let fibre = q.pow(kind.positive_roots() - weyl.length(w)? as u32);
    raw.into_iter()
        .map(|(k, v)| {
            if v % fibre != 0 {
                return Err(Error::Internal(format!("count {v} not divisible by fibre size {fibre}")));
            }
            Ok((k, v / fibre))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PointCountReport {
    pub group: String,
    pub class: String,
    pub unipotent: String,
    /// (q, |B_w^γ(F_q)| / |G(F_q)| as a reduced fraction).
    pub ratios: Vec<(u64, String)>,
    pub degree_bound: usize,
    pub expected_constant_term: u32,
    /// Coefficients (constant term first) of the unique polynomial of the
    /// allowed shape through the data, when the data determine it.
    pub fitted: Option<Vec<String>>,
    /// `None` when the data underdetermine the polynomial.
    pub consistent: Option<bool>,
}

/// |B_w^γ(F_q)| / |G(F_q)| = |B w B ∩ γ| / |B(F_q)| at each q, and whether
/// the values fit a polynomial of degree ≤ ℓ(w) - rank with the expected
/// constant term (1 for Φ(C), 0 otherwise).  Reported, not asserted.
pub fn point_count_series(kind: GroupKind, c: &ClassLabel, gamma: &UnipotentLabel, qs: &[u64]) -> Result<PointCountReport> {
    let weyl = kind.weyl();
    let w = weyl.min_length(c)?.elements.first().cloned().ok_or_else(|| Error::NotFound(format!("C_min of {c}")))?;
    let mut ratios = Vec::new();
    let mut rows: Vec<(BigRational, BigRational)> = Vec::new();
    let mut is_phi = true;
    for &q in qs {
        let counts = crate::with_prime_field!(q, F => cell_unipotent_counts::<F>(kind, &w)?)?;
        let phi = phi_full(&weyl, c, q as u32)?;
        is_phi &= phi.matches(gamma);
        let count: u64 = counts.iter().filter(|(l, _)| l.matches(gamma)).map(|(_, v)| v).sum();
        let r = kind.positive_roots();
        let borel = q.pow(r) * (q - 1).pow(2);
        let ratio = BigRational::new(count.into(), borel.into());
        ratios.push((q, ratio.to_string()));
        rows.push((BigRational::from_integer(q.into()), ratio));
    }
    let degree_bound = weyl.length(&w)?.saturating_sub(weyl.rank());
    let c0 = if is_phi { <BigRational as Field>::one() } else { <BigRational as Field>::zero() };
    // unknowns a_1..a_D; equations Σ a_k q^k = ratio - c0
    let (fitted, consistent) = fit_through(&rows, &c0, degree_bound);
    Ok(PointCountReport {
        group: kind.to_string(),
        class: c.to_string(),
        unipotent: gamma.to_string(),
        ratios,
        degree_bound,
        expected_constant_term: is_phi as u32,
        fitted: fitted.map(|v| v.iter().map(|x| x.to_string()).collect()),
        consistent,
    })
}

/// Integer polynomial with the given constant term and degree ≤ d through
/// the points; solved exactly when the system is square or overdetermined.
fn fit_through(rows: &[(BigRational, BigRational)], c0: &BigRational, d: usize) -> (Option<Vec<BigRational>>, Option<bool>) {
    if d == 0 {
        let ok = rows.iter().all(|(_, r)| r == c0);
        return (Some(vec![c0.clone()]), Some(ok));
    }
    if rows.len() < d {
        return (None, None);
    }
    let m = crate::matrix::Matrix::from_fn(rows.len(), d + 1, |i, j| {
        if j < d {
            let mut p = <BigRational as Field>::one();
            for _ in 0..=j {
                p *= &rows[i].0;
            }
            p
        } else {
            &rows[i].1 - c0
        }
    });
    let (r, pivots) = m.rref();
    if pivots.contains(&d) {
        return (None, Some(false));
    }
    if pivots.len() < d {
        return (None, None);
    }
    let mut coeffs = vec![c0.clone()];
    coeffs.extend((0..d).map(|k| r[(k, d)].clone()));
    let integral = coeffs.iter().all(|x| x.is_integer());
    (Some(coeffs), Some(integral))
}
