//! Stabilizers of pairs (g, B) with (B, gBg⁻¹) in position w.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::FqGroupInstance;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::weyl::classes::ClassLabel;

/// Cells larger than this are sampled rather than walked.
const SAMPLE: usize = 2000;

#[derive(Clone, Debug, Serialize)]
pub struct IsotropyReport {
    pub group: String,
    pub class: String,
    pub det_one_minus_w: u64,
    /// Prime-to-p part of det(1-w) times |Z(F_q)|.
    pub bound: u64,
    pub center_order: usize,
    pub pairs_checked: usize,
    pub exhaustive: bool,
    /// Stabilizer orders that occurred, sorted.
    pub orders: Vec<usize>,
    pub all_abelian: bool,
    pub all_divide: bool,
    /// First violating (w one-based, element index, stabilizer order).
    pub counterexample: Option<(Vec<usize>, usize, usize)>,
}

impl IsotropyReport {
    pub fn holds(&self) -> bool {
        self.all_abelian && self.all_divide
    }
}

fn prime_to(mut n: u64, p: u64) -> u64 {
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
    }
    n
}

/// For every w ∈ C_min and g with rel_position(F_0, g F_0) = w, the
/// stabilizer of (g, F_0) is Z_B(g); it must be abelian of order dividing
/// det(1-w)*·|Z|.  Cells above 2000 elements are sampled with a fixed seed.
pub fn isotropy_check<F: Field>(c: &ClassLabel, inst: &FqGroupInstance<F>) -> Result<IsotropyReport> {
    if !inst.weyl.is_elliptic(c)? {
        return Err(Error::Precondition(format!("{c} is not elliptic")));
    }
    let p = F::characteristic() as u64;
    let mins = inst.weyl.min_length(c)?;
    let det = inst.weyl.det_one_minus_w(&mins.elements[0])?;
    let bound = prime_to(det, p) * inst.center_order() as u64;
    let borel: Vec<_> = inst.borel().iter().map(|&i| &inst.elements()[i]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pairs = Vec::new();
    let mut exhaustive = true;
    for w in &mins.elements {
        let cell = inst.cell(w);
        let picked: Vec<usize> = if cell.len() > SAMPLE {
            exhaustive = false;
            let mut idx = rand::seq::index::sample(&mut rng, cell.len(), SAMPLE).into_vec();
            idx.sort_unstable();
            idx.into_iter().map(|k| cell[k]).collect()
        } else {
            cell
        };
        pairs.extend(picked.into_iter().map(|i| (w.clone(), i)));
    }
    let results: Vec<(usize, bool)> = pairs
        .par_iter()
        .map(|(_, i)| {
            let g = &inst.elements()[*i];
            let stab: Vec<_> = borel.iter().filter(|b| (**b * g) == (g * **b)).collect();
            let abelian = stab.iter().enumerate().all(|(k, x)| stab[k + 1..].iter().all(|y| (**x * **y) == (**y * **x)));
            (stab.len(), abelian)
        })
        .collect();
    let mut orders: Vec<usize> = results.iter().map(|r| r.0).collect();
    orders.sort_unstable();
    orders.dedup();
    let all_abelian = results.iter().all(|r| r.1);
    let all_divide = results.iter().all(|r| bound.is_multiple_of(r.0 as u64));
    let counterexample = pairs.iter().zip(&results).find(|(_, r)| !r.1 || !bound.is_multiple_of(r.0 as u64)).map(|((w, i), r)| {
        (w.as_perm().map(|p| p.one_based()).unwrap_or_default(), *i, r.0)
    });
    Ok(IsotropyReport {
        group: format!("{}(F_{})", inst.kind, inst.q),
        class: c.to_string(),
        det_one_minus_w: det,
        bound,
        center_order: inst.center_order(),
        pairs_checked: pairs.len(),
        exhaustive,
        orders,
        all_abelian,
        all_divide,
        counterexample,
    })
}
