//! Unipotent classes: Jordan types (with the characteristic 2 form condition),
//! the classes γ_{p*} attached to partitions, and related identities.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{psi, Partition};
use crate::tables;
use crate::weyl::Family;

pub use crate::partition::dominance_leq;

/// Characteristic of the base field; 0 for characteristic zero.
pub type Char = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UnipotentLabel {
    /// Jordan block sizes of g - 1.  In characteristic 2, `flags[j]` records
    /// whether ((g-1)^{j-1}x, x) ≠ 0 for some x ∈ ker (g-1)^j; `None` means not asserted.
    Jordan { parts: Partition, flags: BTreeMap<u32, Option<bool>> },
    Named(String),
}

impl UnipotentLabel {
    pub fn jordan(parts: Partition) -> Self {
        UnipotentLabel::Jordan { parts, flags: BTreeMap::new() }
    }

    pub fn parts(&self) -> Option<&Partition> {
        match self {
            UnipotentLabel::Jordan { parts, .. } => Some(parts),
            UnipotentLabel::Named(_) => None,
        }
    }

    /// Equality where unasserted flags match anything.
    pub fn matches(&self, other: &Self) -> bool {
        match (self, other) {
            (UnipotentLabel::Jordan { parts: a, flags: fa }, UnipotentLabel::Jordan { parts: b, flags: fb }) => {
                a == b
                    && fa.keys().chain(fb.keys()).all(|j| {
                        match (fa.get(j).copied().flatten(), fb.get(j).copied().flatten()) {
                            (Some(x), Some(y)) => x == y,
                            _ => true,
                        }
                    })
            }
            _ => self == other,
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            UnipotentLabel::Jordan { parts, .. } => parts.parts().iter().all(|&p| p == 1),
            UnipotentLabel::Named(n) => n == "1",
        }
    }
}

impl fmt::Display for UnipotentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnipotentLabel::Jordan { parts, flags } => {
                write!(f, "{parts}")?;
                if !flags.is_empty() {
                    let s = flags.iter().map(|(j, v)| {
                        let mark = match v {
                            Some(true) => "+",
                            Some(false) => "-",
                            None => "?",
                        };
                        format!("{j}{mark}")
                    });
                    write!(f, "[{}]", s.format(","))?;
                }
                Ok(())
            }
            UnipotentLabel::Named(n) => write!(f, "{n}"),
        }
    }
}

fn check_partition_for(p: &Partition, family: Family) -> Result<()> {
    if p.is_empty() {
        return Err(Error::InvalidPartition("empty partition".into()));
    }
    if family == Family::D && !p.is_even_length() {
        return Err(Error::Precondition(format!("type D needs an even number of parts, got {p}")));
    }
    if !family.is_isometry_type() {
        return Err(Error::Precondition(format!("partitions parametrize elliptic classes of B, C, D, not {family}")));
    }
    Ok(())
}

/// Jordan type of γ_{p*}.  Type C is Sp_{2n}, type B is SO_{2n+1}, type D is SO_{2n}.
pub fn gamma_from_partition(p: &Partition, family: Family, ch: Char) -> Result<UnipotentLabel> {
    check_partition_for(p, family)?;
    let doubled: Vec<u32> = p.parts().iter().map(|&x| 2 * x).collect();
    if ch == 2 {
        let flags = doubled.iter().map(|&j| (j, Some(true))).collect();
        let mut parts = doubled;
        if family == Family::B {
            parts.push(1);
        }
        return Ok(UnipotentLabel::Jordan { parts: Partition::from_unsorted(parts), flags });
    }
    if family == Family::C {
        return Ok(UnipotentLabel::jordan(Partition::from_unsorted(doubled)));
    }
    let mut parts = phi_small_core(p);
    if family == Family::B && p.is_even_length() {
        parts.push(1);
    }
    Ok(UnipotentLabel::jordan(Partition::from_unsorted(parts)))
}

fn phi_small_core(p: &Partition) -> Vec<u32> {
    let s = psi(p);
    (1..=p.len()).map(|t| (2 * p.part(t) as i32 + s.get(t) as i32) as u32).collect()
}

/// (2p_1+ψ(1), …, 2p_σ+ψ(σ)), with a final 1 when σ is even; a partition of 2n+1.
pub fn phi_small_injection(p: &Partition) -> Vec<u32> {
    let mut v = phi_small_core(p);
    if p.is_even_length() {
        v.push(1);
    }
    v
}

/// f_j = #{i : λ_i ≥ j}.
fn f(lambda: &Partition, j: u32) -> u32 {
    lambda.parts().iter().filter(|&&x| x >= j).count() as u32
}

fn sum_f(lambda: &Partition) -> u32 {
    (1..=lambda.part(1) / 2).map(|h| f(lambda, 2 * h).pow(2) - f(lambda, 2 * h)).sum()
}

/// Σ_{h≥1} (f_{2h}² - f_{2h}) + n for a Jordan type with even parts only.
pub fn centralizer_dim_type_c_p2(lambda: &Partition) -> Result<u32> {
    if lambda.parts().iter().any(|x| x % 2 == 1) {
        return Err(Error::Precondition(format!("{lambda} has an odd part")));
    }
    Ok(sum_f(lambda) + lambda.size() / 2)
}

/// X = Σ_h (f_{2h}² - f_{2h}) for λ = (2p_i) and Y = p_2 + 2p_3 + … + (σ-1)p_σ.
pub fn x_and_y(p: &Partition) -> (u32, u32) {
    let lambda = Partition::from_unsorted(p.parts().iter().map(|x| 2 * x).collect());
    let y = (1..p.len()).map(|v| v as u32 * p.part(v + 1)).sum();
    (sum_f(&lambda), y)
}

pub fn check_x_equals_2y(p: &Partition) -> bool {
    let (x, y) = x_and_y(p);
    x == 2 * y
}

fn multiplicities(p: &Partition) -> BTreeMap<u32, usize> {
    p.parts().iter().copied().counts().into_iter().collect()
}

/// Distinguished unipotent classes.  Exceptional names are looked up in the
/// elliptic tables; names not listed there count as not distinguished.
pub fn is_distinguished(label: &UnipotentLabel, family: Family, ch: Char) -> Result<bool> {
    match label {
        UnipotentLabel::Named(name) => {
            if family.is_classical() {
                return Err(Error::Mismatch(format!("named class {name} for classical type {family}")));
            }
            Ok(tables::lookup_name(family, name).is_some_and(|r| r.dist.holds(ch)))
        }
        UnipotentLabel::Jordan { parts, flags } => {
            let m = multiplicities(parts);
            Ok(match family {
                Family::A => parts.len() == 1,
                Family::C | Family::B | Family::D if ch == 2 => {
                    let flags_ok = flags.values().all(|v| *v != Some(false));
                    let ones = parts.multiplicity(1);
                    let even_ok = m.iter().all(|(&j, &k)| if j % 2 == 0 { k <= 2 } else { j == 1 });
                    let tail_ok = match family {
                        Family::B => ones == 1,
                        _ => ones == 0 && (family != Family::D || parts.is_even_length()),
                    };
                    flags_ok && even_ok && tail_ok
                }
                Family::C => m.iter().all(|(&j, &k)| j % 2 == 0 && k == 1),
                Family::B | Family::D => m.iter().all(|(&j, &k)| j % 2 == 1 && k == 1),
                _ => return Err(Error::Mismatch(format!("Jordan label for exceptional type {family}"))),
            })
        }
    }
}

/// Jordan types of unipotent classes in good characteristic (very even
/// classes of type D are listed once).
pub fn classical_unipotent_classes(family: Family, rank: usize) -> Result<Vec<UnipotentLabel>> {
    let n = rank as u32;
    let (total, keep): (u32, fn(&Partition) -> bool) = match family {
        Family::A => (n + 1, |_| true),
        Family::C => (2 * n, |p| multiplicities(p).iter().all(|(&j, &k)| j % 2 == 0 || k % 2 == 0)),
        Family::B => (2 * n + 1, |p| multiplicities(p).iter().all(|(&j, &k)| j % 2 == 1 || k % 2 == 0)),
        Family::D => (2 * n, |p| multiplicities(p).iter().all(|(&j, &k)| j % 2 == 1 || k % 2 == 0)),
        other => return Err(Error::Precondition(format!("{other} is not classical"))),
    };
    Ok(Partition::all(total).into_iter().filter(keep).map(UnipotentLabel::jordan).collect())
}

/// Very even: every part even (type D, split into two classes).
pub fn is_very_even(parts: &Partition) -> bool {
    parts.parts().iter().all(|x| x % 2 == 0)
}

/// Unipotent classes of the exceptional groups G2, F4, E6 in good
/// characteristic, by Bala–Carter name.  The E6 class usually written
/// E_6(a_3) carries the name A_5+A_1, as in the elliptic table.
pub fn exceptional_class_names(family: Family) -> Result<&'static [&'static str]> {
    Ok(match family {
        Family::G2 => &["1", "A_1", "~A_1", "G_2(a_1)", "G_2"],
        Family::F4 => &[
            "1", "A_1", "~A_1", "A_1+~A_1", "A_2", "~A_2", "A_2+~A_1", "B_2", "~A_2+A_1", "C_3(a_1)", "F_4(a_3)",
            "B_3", "C_3", "F_4(a_2)", "F_4(a_1)", "F_4",
        ],
        Family::E6 => &[
            "1", "A_1", "2A_1", "3A_1", "A_2", "A_2+A_1", "2A_2", "A_2+2A_1", "A_3", "2A_2+A_1", "A_3+A_1", "D_4(a_1)",
            "A_4", "D_4", "A_4+A_1", "A_5", "D_5(a_1)", "A_5+A_1", "D_5", "E_6(a_1)", "E_6",
        ],
        other => return Err(Error::Unsupported(format!("unipotent class list of {other}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn parts(l: &UnipotentLabel) -> Vec<u32> {
        l.parts().unwrap().parts().to_vec()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(parts(&gamma_from_partition(&p(&[2, 1]), Family::C, 0).unwrap()), vec![4, 2]);
        assert_eq!(parts(&gamma_from_partition(&p(&[2, 1]), Family::B, 0).unwrap()), vec![5, 1, 1]);
        let b2 = gamma_from_partition(&p(&[2, 1]), Family::B, 2).unwrap();
        assert_eq!(b2.to_string(), "(4,2,1)[2+,4+]");
        assert_eq!(parts(&gamma_from_partition(&p(&[2, 2]), Family::D, 3).unwrap()), vec![5, 3]);
        assert!(gamma_from_partition(&p(&[2, 1, 1]), Family::D, 0).is_err());
    }

    #[test]
    fn phi_small_examples() {
        assert_eq!(phi_small_injection(&p(&[3, 1])), vec![7, 1, 1]);
        assert_eq!(phi_small_injection(&p(&[2, 2])), vec![5, 3, 1]);
        assert_eq!(phi_small_injection(&p(&[4, 1])), vec![9, 1, 1]);
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(centralizer_dim_type_c_p2(&p(&[4])).unwrap(), 2);
        assert_eq!(centralizer_dim_type_c_p2(&p(&[2, 2])).unwrap(), 4);
        assert_eq!(centralizer_dim_type_c_p2(&p(&[4, 2])).unwrap(), 5);
        assert!(centralizer_dim_type_c_p2(&p(&[3, 1])).is_err());
        assert_eq!(x_and_y(&p(&[2])), (0, 0));
        assert_eq!(x_and_y(&p(&[2, 1])), (2, 1));
        assert!(check_x_equals_2y(&p(&[3, 3, 2])));
    }

    #[test]
    fn distinguished_examples() {
        let j = |v: &[u32]| UnipotentLabel::jordan(p(v));
        assert!(is_distinguished(&j(&[4, 2]), Family::C, 0).unwrap());
        assert!(!is_distinguished(&j(&[2, 2]), Family::C, 3).unwrap());
        assert!(is_distinguished(&UnipotentLabel::Named("F_4(a_3)".into()), Family::F4, 0).unwrap());
        assert!(!is_distinguished(&UnipotentLabel::Named("~A_1".into()), Family::G2, 0).unwrap());
        assert!(is_distinguished(&UnipotentLabel::Named("~A_1".into()), Family::G2, 3).unwrap());
        let g = gamma_from_partition(&p(&[1, 1]), Family::C, 2).unwrap();
        assert!(is_distinguished(&g, Family::C, 2).unwrap());
    }

    #[test]
    fn class_counts() {
        let c2 = classical_unipotent_classes(Family::C, 2).unwrap();
        assert_eq!(c2.iter().map(|l| l.to_string()).collect::<Vec<_>>(), vec!["(4)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(exceptional_class_names(Family::F4).unwrap().len(), 16);
        assert_eq!(exceptional_class_names(Family::E6).unwrap().len(), 21);
    }
}
