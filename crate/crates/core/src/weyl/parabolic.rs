//! Parabolic subgroups W_J and the intersections C ∩ W_J.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::classes::ClassLabel;
use super::{Family, WeylElement, WeylGroup};
use crate::error::{Error, Result};

/// A subset J of the generators with D = C ∩ W_J a single W_J-class that is
/// elliptic in W_J.
#[derive(Clone, Debug, Serialize)]
pub struct ParabolicIntersection {
    /// 1-based generator indices, increasing.
    pub j: Vec<usize>,
    /// The class D, sorted by (length, element).
    pub members: Vec<WeylElement>,
}

impl ParabolicIntersection {
    pub fn mask(&self) -> u64 {
        self.j.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    pub fn representative(&self) -> &WeylElement {
        &self.members[0]
    }
}

fn mask_to_vec(mask: u64, rank: usize) -> Vec<usize> {
    (0..rank).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// C ∩ W_J if it is one W_J-class whose members all have support J.
pub fn intersect_with(g: &WeylGroup, label: &ClassLabel, j_mask: u64) -> Result<Option<ParabolicIntersection>> {
    let t = g.class_table()?;
    let c = t.classes.iter().position(|c| &c.label == label).ok_or_else(|| Error::NotFound(format!("class {label}")))?;
    let inside: BTreeSet<usize> = t.members(c).filter(|&i| t.support_at(i) & !j_mask == 0).collect();
    let Some(&start) = inside.iter().next() else { return Ok(None) };
    if inside.iter().any(|&i| t.support_at(i) != j_mask) {
        return Ok(None);
    }
    let gens: Vec<WeylElement> =
        mask_to_vec(j_mask, g.rank()).into_iter().map(|i| g.generator(i)).collect::<Result<_>>()?;
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for s in &gens {
            let k = t.index_of(&g.conjugate(&t.elements()[i], s)).expect("closed under conjugation");
            if seen.insert(k) {
                queue.push_back(k);
            }
        }
    }
    if seen != inside {
        return Ok(None);
    }
    let mut members: Vec<(usize, &WeylElement)> = inside.iter().map(|&i| (t.length_at(i), &t.elements()[i])).collect();
    members.sort();
    Ok(Some(ParabolicIntersection {
        j: mask_to_vec(j_mask, g.rank()),
        members: members.into_iter().map(|(_, w)| w.clone()).collect(),
    }))
}

/// Every J of minimal size for which C ∩ W_J is an elliptic W_J-class.
pub fn all_minimal_intersections(g: &WeylGroup, label: &ClassLabel) -> Result<Vec<ParabolicIntersection>> {
    let r = g.rank();
    let mut masks: Vec<u64> = (0..1u64 << r).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut out = Vec::new();
    let mut size = None;
    for m in masks {
        if size.is_some_and(|s| m.count_ones() > s) {
            break;
        }
        if let Some(x) = intersect_with(g, label, m)? {
            size = Some(m.count_ones());
            out.push(x);
        }
    }
    if out.is_empty() {
        return Err(Error::Internal(format!("no parabolic subgroup carries {label} as an elliptic class")));
    }
    Ok(out)
}

/// The first minimal J in (size, bitmask) order.
pub fn parabolic_class_intersection(g: &WeylGroup, label: &ClassLabel) -> Result<ParabolicIntersection> {
    let r = g.rank();
    let mut masks: Vec<u64> = (0..1u64 << r).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for m in masks {
        if let Some(x) = intersect_with(g, label, m)? {
            return Ok(x);
        }
    }
    Err(Error::Internal(format!("no parabolic subgroup carries {label} as an elliptic class")))
}

/// J for a classical class by the block rule: a string of α_j - 1 type-A
/// generators for each positive cycle, then the last |β| generators.
pub fn classical_levi(label: &ClassLabel, family: Family, rank: usize) -> Result<Vec<usize>> {
    let (alpha, beta) = match label {
        ClassLabel::Classical { positive, negative, .. } if family.is_isometry_type() => (positive, negative.size() as usize),
        ClassLabel::CycleType(tau) if family == Family::A => (tau, 0),
        _ => return Err(Error::Mismatch(format!("{label} is not a classical label of type {family}"))),
    };
    let mut j = Vec::new();
    let mut start = 0;
    for &a in alpha.parts() {
        j.extend(start + 1..start + a as usize);
        start += a as usize;
    }
    j.extend(rank - beta + 1..=rank);
    Ok(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_examples() {
        let g = WeylGroup::of(Family::B, 2).unwrap();
        let l = ClassLabel::parse("[2];[]", Family::B).unwrap();
        assert_eq!(parabolic_class_intersection(&g, &l).unwrap().j, vec![1]);
        let l = ClassLabel::parse("[1];[1]", Family::B).unwrap();
        let x = parabolic_class_intersection(&g, &l).unwrap();
        assert_eq!(x.j, vec![2]);
        assert_eq!(x.members.len(), 1);
        let l = ClassLabel::parse("[];[2]", Family::B).unwrap();
        assert_eq!(parabolic_class_intersection(&g, &l).unwrap().j, vec![1, 2]);
    }

    #[test]
    fn block_rule_matches_search() {
        for (f, n) in [(Family::B, 3), (Family::C, 4), (Family::D, 4), (Family::D, 5), (Family::A, 4)] {
            let g = WeylGroup::of(f, n).unwrap();
            for l in g.class_labels().unwrap() {
                if matches!(l, ClassLabel::Classical { split: Some(_), .. }) {
                    continue;
                }
                let j = classical_levi(&l, f, n).unwrap();
                let mask = j.iter().fold(0u64, |m, &i| m | 1 << (i - 1));
                let all = all_minimal_intersections(&g, &l).unwrap();
                assert_eq!(all[0].j.len(), j.len(), "{f}{n} {l}");
                assert!(intersect_with(&g, &l, mask).unwrap().is_some(), "{f}{n} {l} {j:?}");
            }
        }
    }
}
