//! The map Φ from conjugacy classes of W to unipotent classes: tables and
//! Jordan types on elliptic classes, Levi descent on the rest.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{char_poly, cyclotomic_factorization, CyclotomicSignature, IntPoly};
use crate::tables;
use crate::unipotent::{self, gamma_from_partition, Char, UnipotentLabel};
use crate::weyl::classes::ClassLabel;
use crate::weyl::parabolic::{parabolic_class_intersection, ParabolicIntersection};
use crate::weyl::{Family, WeylElement, WeylGroup};

/// Φ on an elliptic class.
pub fn phi_elliptic(g: &WeylGroup, label: &ClassLabel, ch: Char) -> Result<UnipotentLabel> {
    if !g.is_elliptic(label)? {
        return Err(Error::Precondition(format!("{label} is not elliptic in W({})", g.descriptor())));
    }
    match label {
        ClassLabel::CycleType(tau) => Ok(UnipotentLabel::jordan(tau.clone())),
        ClassLabel::Classical { negative, .. } => gamma_from_partition(negative, g.family(), ch),
        ClassLabel::Exceptional { signature, disc } => {
            Ok(UnipotentLabel::Named(tables::lookup(g.family(), signature, disc.as_ref())?.name.clone()))
        }
    }
}

/// Φ on any class: elliptic classes directly, others through a Levi subgroup
/// L of type J with C ∩ W_J elliptic in W_J.
pub fn phi_full(g: &WeylGroup, label: &ClassLabel, ch: Char) -> Result<UnipotentLabel> {
    g.validate_label(label)?;
    match label {
        ClassLabel::CycleType(tau) => Ok(UnipotentLabel::jordan(tau.clone())),
        ClassLabel::Classical { positive, negative, split } => {
            if split.is_some() && !g.is_elliptic(label)? {
                return Err(Error::Unsupported(format!("descent for the very even class {label}")));
            }
            classical_descent(positive, negative, g.family(), ch)
        }
        ClassLabel::Exceptional { .. } => {
            if g.is_elliptic(label)? {
                return phi_elliptic(g, label, ch);
            }
            if !g.is_enumerable() {
                return Err(Error::Unsupported(format!("Φ of non-elliptic classes of W({})", g.descriptor())));
            }
            let x = parabolic_class_intersection(g, label)?;
            phi_via(g, &x, x.representative())
        }
    }
}

/// GL_{α_j} factors give block pairs (α_j, α_j); the β part gives γ_β.
fn classical_descent(alpha: &Partition, beta: &Partition, family: Family, ch: Char) -> Result<UnipotentLabel> {
    let mut parts: Vec<u32> = alpha.parts().iter().flat_map(|&a| [a, a]).collect();
    let mut flags = BTreeMap::new();
    if ch == 2 {
        flags.extend(alpha.parts().iter().filter(|a| *a % 2 == 0).map(|&a| (a, None)));
    }
    if beta.is_empty() {
        if family == Family::B {
            parts.push(1);
        }
    } else {
        let UnipotentLabel::Jordan { parts: gp, flags: gf } = gamma_from_partition(beta, family, ch)? else {
            unreachable!("classical γ is a Jordan type")
        };
        parts.extend(gp.parts());
        flags.extend(gf);
    }
    Ok(UnipotentLabel::Jordan { parts: Partition::from_unsorted(parts), flags })
}

/// Levi descent through a chosen intersection and a member d of it.
pub fn phi_via(g: &WeylGroup, x: &ParabolicIntersection, d: &WeylElement) -> Result<UnipotentLabel> {
    let root = d.as_root().ok_or_else(|| Error::Unsupported("descent naming is for exceptional types".into()))?;
    let rs = g.root_system();
    let gram = rs.gram();
    let longest = (0..g.rank()).map(|i| gram[i][i]).max().unwrap_or(2);
    let two_lengths = (0..g.rank()).any(|i| gram[i][i] != longest);
    let nodes: Vec<usize> = x.j.iter().map(|i| i - 1).collect();
    let mut summands = Vec::new();
    for comp in components(&nodes, gram) {
        let sig = cyclotomic_factorization(&char_poly(&root.restricted_matrix(&comp)))?;
        summands.extend(component_summands(&comp, gram, longest, two_lengths, &sig)?);
    }
    Ok(UnipotentLabel::Named(format_name(summands)))
}

fn components(nodes: &[usize], gram: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&s) = left.iter().next() {
        left.remove(&s);
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            let nb: Vec<usize> = left.iter().copied().filter(|&u| gram[u][v] != 0).collect();
            for u in nb {
                left.remove(&u);
                comp.push(u);
            }
            k += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// A simple factor of a Levi name: base letter, rank, tilde (short roots), suffix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Summand {
    base: char,
    rank: usize,
    tilde: bool,
    suffix: &'static str,
}

fn s(base: char, rank: usize, tilde: bool, suffix: &'static str) -> Summand {
    Summand { base, rank, tilde, suffix }
}

fn signed_cycle_signature(p: &Partition) -> Result<CyclotomicSignature> {
    let poly = p.parts().iter().fold(IntPoly::one(), |acc, &k| {
        let mut c = vec![0; k as usize + 1];
        c[0] = 1;
        c[k as usize] = 1;
        acc.mul(&IntPoly::new(c))
    });
    cyclotomic_factorization(&poly)
}

fn component_summands(
    comp: &[usize],
    gram: &[Vec<i64>],
    longest: i64,
    two_lengths: bool,
    sig: &CyclotomicSignature,
) -> Result<Vec<Summand>> {
    let k = comp.len();
    let short = comp.iter().filter(|&&i| gram[i][i] != longest).count();
    let branched = comp.iter().any(|&i| comp.iter().filter(|&&j| j != i && gram[i][j] != 0).count() >= 3);
    let family = match (short, branched) {
        (0, false) => return Ok(vec![s('A', k, false, "")]),
        (s0, false) if s0 == k => return Ok(vec![s('A', k, two_lengths, "")]),
        (0, true) => Family::D,
        (s0, false) if k == 2 || s0 < k - s0 => Family::B,
        (_, false) => Family::C,
        _ => return Err(Error::Internal(format!("unexpected Levi component {comp:?}"))),
    };
    if k > 5 {
        return Err(Error::Unsupported(format!("Levi component of rank {k}")));
    }
    let candidates: Vec<Partition> = Partition::all(k as u32)
        .into_iter()
        .filter(|p| family != Family::D || p.is_even_length())
        .filter(|p| signed_cycle_signature(p).is_ok_and(|x| &x == sig))
        .collect();
    let [p] = candidates.as_slice() else {
        return Err(Error::Internal(format!("{} partitions match {sig} on {comp:?}", candidates.len())));
    };
    let gamma = gamma_from_partition(p, family, 0)?;
    name_classical(gamma.parts().expect("Jordan type"), family)
}

/// Bala–Carter style name of a class of SO/Sp given by its Jordan type:
/// pairs of equal parts come from GL factors, the rest is distinguished.
fn name_classical(lambda: &Partition, family: Family) -> Result<Vec<Summand>> {
    let mut out = Vec::new();
    let mut rest = Vec::new();
    for (v, m) in lambda.parts().iter().copied().counts() {
        for _ in 0..m / 2 {
            if v >= 2 {
                out.push(s('A', v as usize - 1, family == Family::C, ""));
            }
        }
        if m % 2 == 1 {
            rest.push(v);
        }
    }
    rest.sort_unstable_by(|a, b| b.cmp(a));
    let unsupported = || Err(Error::Unsupported(format!("naming the distinguished part {rest:?} of type {family}")));
    match family {
        Family::B => match rest.as_slice() {
            [1] => {}
            [3] => out.push(s('A', 1, true, "")),
            [5] => out.push(s('B', 2, false, "")),
            [7] => out.push(s('B', 3, false, "")),
            _ => return unsupported(),
        },
        Family::C => match rest.as_slice() {
            [] => {}
            [2] => out.push(s('A', 1, false, "")),
            [4] => out.push(s('B', 2, false, "")),
            [6] => out.push(s('C', 3, false, "")),
            [4, 2] => out.push(s('C', 3, false, "(a_1)")),
            _ => return unsupported(),
        },
        _ => match rest.as_slice() {
            [] => {}
            [3, 1] => out.extend([s('A', 1, false, ""), s('A', 1, false, "")]),
            [5, 1] => out.push(s('A', 3, false, "")),
            [a, 1] => out.push(s('D', (a + 1) as usize / 2, false, "")),
            [a, 3] => out.push(s('D', (a + 3) as usize / 2, false, "(a_1)")),
            _ => return unsupported(),
        },
    }
    Ok(out)
}

/// Larger rank first, untilded before tilded, repeated factors collected.
fn format_name(mut summands: Vec<Summand>) -> String {
    if summands.is_empty() {
        return "1".into();
    }
    summands.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.tilde.cmp(&b.tilde)).then(a.cmp(b)));
    summands
        .iter()
        .chunk_by(|x| *x)
        .into_iter()
        .map(|(x, grp)| {
            let n = grp.count();
            let mult = if n > 1 { n.to_string() } else { String::new() };
            let tilde = if x.tilde { "~" } else { "" };
            format!("{mult}{tilde}{}_{}{}", x.base, x.rank, x.suffix)
        })
        .join("+")
}

/// The elliptic class with Φ(C) equal to a basic unipotent class.
pub fn phi_inverse_basic(g: &WeylGroup, target: &UnipotentLabel, ch: Char) -> Result<ClassLabel> {
    let mut hits = Vec::new();
    for l in elliptic_labels(g)? {
        if &phi_elliptic(g, &l, ch)? == target {
            hits.push(l);
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().expect("one hit")),
        0 => Err(Error::NotFound(format!("{target} is not basic in {}", g.descriptor()))),
        _ => Err(Error::Internal(format!("Φ is not injective on elliptic classes at {target}"))),
    }
}

pub fn elliptic_labels(g: &WeylGroup) -> Result<Vec<ClassLabel>> {
    let mut out = Vec::new();
    for l in g.class_labels()? {
        if g.is_elliptic(&l)? {
            out.push(l);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SurjectivityReport {
    pub group: String,
    pub rows: Vec<(String, String)>,
    pub expected: Vec<String>,
    pub missed: Vec<String>,
    pub surjective: bool,
}

/// Φ on every class against the unipotent class list (good characteristic).
/// Very even classes of type D are left out on both sides.
pub fn phi_surjectivity_report(g: &WeylGroup, ch: Char) -> Result<SurjectivityReport> {
    if ch == 2 {
        return Err(Error::Unsupported("class lists are for characteristic ≠ 2".into()));
    }
    let family = g.family();
    let expected: Vec<UnipotentLabel> = if family.is_classical() {
        unipotent::classical_unipotent_classes(family, g.rank())?
            .into_iter()
            .filter(|l| family != Family::D || !unipotent::is_very_even(l.parts().expect("Jordan")))
            .collect()
    } else {
        unipotent::exceptional_class_names(family)?.iter().map(|n| UnipotentLabel::Named(n.to_string())).collect()
    };
    let mut rows = Vec::new();
    let mut hit = BTreeSet::new();
    for l in g.class_labels()? {
        if matches!(l, ClassLabel::Classical { split: Some(_), .. }) {
            continue;
        }
        let u = phi_full(g, &l, ch)?;
        rows.push((l.to_string(), u.to_string()));
        hit.insert(u);
    }
    let missed: Vec<String> = expected.iter().filter(|e| !hit.contains(*e)).map(|e| e.to_string()).collect();
    Ok(SurjectivityReport {
        group: g.descriptor().to_string(),
        rows,
        expected: expected.iter().map(|e| e.to_string()).collect(),
        surjective: missed.is_empty(),
        missed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(s: &str, f: Family) -> ClassLabel {
        ClassLabel::parse(s, f).unwrap()
    }

    #[test]
    fn sp4_values() {
        let g = WeylGroup::of(Family::C, 2).unwrap();
        let cases = [("[];[2]", "(4)"), ("[];[1,1]", "(2,2)"), ("[2];[]", "(2,2)"), ("[1];[1]", "(2,1,1)"), ("[1,1];[]", "(1,1,1,1)")];
        for (c, u) in cases {
            assert_eq!(phi_full(&g, &lab(c, Family::C), 3).unwrap().to_string(), u, "{c}");
        }
        assert_eq!(phi_full(&g, &lab("[2];[]", Family::C), 2).unwrap().to_string(), "(2,2)[2?]");
    }

    #[test]
    fn inverse_examples() {
        let c3 = WeylGroup::of(Family::C, 3).unwrap();
        let u = UnipotentLabel::jordan(Partition::new(vec![4, 2]).unwrap());
        assert_eq!(phi_inverse_basic(&c3, &u, 0).unwrap().to_string(), "[];[2,1]");
        let g2 = WeylGroup::of(Family::G2, 2).unwrap();
        let l = phi_inverse_basic(&g2, &UnipotentLabel::Named("G_2(a_1)".into()), 0).unwrap();
        assert_eq!(l.to_string(), "3");
    }

    #[test]
    fn surjective_small() {
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G2, 2)] {
            let g = WeylGroup::of(f, n).unwrap();
            let r = phi_surjectivity_report(&g, 0).unwrap();
            assert!(r.surjective, "{f}{n} missed {:?}", r.missed);
        }
    }

    #[test]
    fn f4_surjective() {
        let g = WeylGroup::of(Family::F4, 4).unwrap();
        let r = phi_surjectivity_report(&g, 0).unwrap();
        assert!(r.surjective, "missed {:?} rows {:?}", r.missed, r.rows);
        let images: BTreeSet<&String> = r.rows.iter().map(|x| &x.1).collect();
        assert_eq!(images.len(), 16);
    }

    #[test]
    fn e6_surjective_and_independent_of_j() {
        let g = WeylGroup::of(Family::E6, 6).unwrap();
        let r = phi_surjectivity_report(&g, 0).unwrap();
        assert!(r.surjective, "missed {:?}", r.missed);
        assert_eq!(r.rows.iter().map(|x| &x.1).collect::<BTreeSet<_>>().len(), 21);
        for f in [Family::G2, Family::F4, Family::E6] {
            let g = WeylGroup::of(f, f.fixed_rank().unwrap()).unwrap();
            for l in g.class_labels().unwrap() {
                if g.is_elliptic(&l).unwrap() {
                    continue;
                }
                let want = phi_full(&g, &l, 0).unwrap();
                for x in crate::weyl::parabolic::all_minimal_intersections(&g, &l).unwrap() {
                    for d in x.members.iter().take(4) {
                        assert_eq!(phi_via(&g, &x, d).unwrap(), want, "{f} {l} J={:?}", x.j);
                    }
                }
            }
        }
    }
}
