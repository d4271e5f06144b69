//! Elliptic classes of W(B_n) = W(C_n) and W(D_n), parametrized by partitions:
//! the elements w_{p*}, the sign function ψ, d_C, and excellent decompositions.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
pub use crate::partition::{psi, PsiVector};
use crate::weyl::classes::signed_cycle_representative;
use crate::weyl::{Family, Perm, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassicalType {
    B,
    C,
    D,
}

impl ClassicalType {
    pub fn family(self) -> Family {
        match self {
            ClassicalType::B => Family::B,
            ClassicalType::C => Family::C,
            ClassicalType::D => Family::D,
        }
    }

    pub fn from_family(f: Family) -> Result<Self> {
        match f {
            Family::B => Ok(ClassicalType::B),
            Family::C => Ok(ClassicalType::C),
            Family::D => Ok(ClassicalType::D),
            other => Err(Error::Precondition(format!("{other} is not of type B, C or D"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    A,
    B,
}

/// w_{p*}: one negative p_h-cycle on each consecutive block of positions.
/// With κ = 1 the middle point of [1, 2n+1] is inserted as a fixed point.
pub fn w_from_partition(p: &Partition, kappa: u32) -> Perm {
    let w = signed_cycle_representative(&Partition::empty(), p);
    if kappa == 1 {
        w.lift_odd()
    } else {
        w
    }
}

/// 2 Σ_{v=1}^{σ-1} v p_{v+1} + n, minus σ in type D.
pub fn d_c_classical(p: &Partition, ty: ClassicalType) -> Result<usize> {
    let base: u32 = (1..p.len()).map(|v| 2 * v as u32 * p.part(v + 1)).sum::<u32>() + p.size();
    match ty {
        ClassicalType::D if !p.is_even_length() => {
            Err(Error::Precondition(format!("type D needs an even number of parts, got {p}")))
        }
        ClassicalType::D => Ok((base - p.len() as u32) as usize),
        _ => Ok(base as usize),
    }
}

/// A reduced word cut into odd palindromic blocks; 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcellentDecomposition {
    pub blocks: Vec<Vec<usize>>,
}

impl ExcellentDecomposition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        ExcellentDecomposition { blocks }
    }

    pub fn parse(s: &str) -> Result<Self> {
        crate::tables::parse_blocks(s).map(Self::new)
    }

    pub fn word(&self) -> Vec<usize> {
        self.blocks.concat()
    }

    pub fn letters(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.blocks.iter().all(|b| b.len() % 2 == 1 && b.iter().eq(b.iter().rev()))
    }

    /// Each block as (s_1 … s_q, s_{q+1}): the left half and the middle letter.
    pub fn halves(&self) -> Vec<(&[usize], usize)> {
        self.blocks.iter().map(|b| (&b[..b.len() / 2], b[b.len() / 2])).collect()
    }
}

impl fmt::Display for ExcellentDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let multi = self.blocks.iter().flatten().any(|&i| i > 9);
        for b in &self.blocks {
            if multi {
                write!(f, "({})", b.iter().map(|i| format!("s{i}")).join(" "))?;
            } else {
                write!(f, "({})", b.iter().join(""))?;
            }
        }
        Ok(())
    }
}

/// Suffix sums M_k = p_σ + p_{σ-1} + … + p_{σ-k+1}.
fn suffix_sums(p: &Partition) -> Vec<usize> {
    let s = p.len();
    (0..=s).map(|k| (s - k + 1..=s).map(|i| p.part(i) as usize).sum()).collect()
}

fn asc(a: usize, b: usize) -> impl Iterator<Item = usize> {
    a..=b
}

fn desc(a: usize, b: usize) -> impl Iterator<Item = usize> {
    (b..=a).rev()
}

/// Excellent decomposition of w_{p*}⁻¹.  Variant `A` is the one with a
/// palindrome per part; variant `B` (σ even, required for type D) pairs the parts.
pub fn excellent_decomposition(p: &Partition, ty: ClassicalType, variant: Variant) -> Result<ExcellentDecomposition> {
    let n = p.size() as usize;
    let s = p.len();
    if n == 0 {
        return Err(Error::Precondition("empty partition".into()));
    }
    if (variant == Variant::B || ty == ClassicalType::D) && s % 2 == 1 {
        return Err(Error::Precondition(format!("{p} has an odd number of parts")));
    }
    if ty == ClassicalType::D && variant == Variant::A {
        return Err(Error::Precondition("type D uses the paired variant".into()));
    }
    let m = suffix_sums(p);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let singles = |blocks: &mut Vec<Vec<usize>>, from: usize, to: usize| {
        blocks.extend(desc(from, to).map(|i| vec![i]));
    };
    match variant {
        Variant::A => {
            singles(&mut blocks, n, n + 1 - m[1]);
            for k in 1..s {
                let a = n - m[k];
                blocks.push(asc(a, n).chain(desc(n - 1, a)).collect());
                singles(&mut blocks, a - 1, a + 1 - p.part(s - k) as usize);
            }
        }
        Variant::B => {
            for j in 0..s / 2 {
                let a = n - m[2 * j];
                let b = n - m[2 * j + 1];
                let block: Vec<usize> = if ty == ClassicalType::D {
                    // drop both s_n; the middle stretch is conjugated by s_n,
                    // which only changes s_{n-1} into generator n of W(D_n)
                    let tilde = |i: usize| if i == n - 1 { n } else { i };
                    asc(a, n - 1)
                        .chain(desc(n - 1, b).map(tilde))
                        .chain(asc(b + 1, n - 1).map(tilde))
                        .chain(desc(n - 1, a))
                        .collect()
                } else {
                    asc(a, n).chain(desc(n - 1, b)).chain(asc(b + 1, n)).chain(desc(n - 1, a)).collect()
                };
                blocks.push(block);
                singles(&mut blocks, a - 1, n + 1 - m[2 * j + 2]);
            }
        }
    }
    Ok(ExcellentDecomposition { blocks })
}

/// Outcome of checking a decomposition against an element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcellentReport {
    pub product_matches: bool,
    pub letters: usize,
    pub length: usize,
    pub reduced: bool,
    pub palindromic: bool,
    pub block_count_is_rank: bool,
    /// ℓ(w) = d_C for the class of w; `None` when d_C is not available.
    pub minimal: Option<bool>,
}

impl ExcellentReport {
    pub fn passed(&self) -> bool {
        self.product_matches
            && self.reduced
            && self.palindromic
            && self.block_count_is_rank
            && self.minimal != Some(false)
    }
}

pub fn validate_excellent(dec: &ExcellentDecomposition, w: &WeylElement, g: &WeylGroup) -> Result<ExcellentReport> {
    let product = g.element_from_word(&dec.word())?;
    let length = g.length(&product)?;
    let minimal = match g.class_of(&product).and_then(|c| g.d_c(&c)) {
        Ok(d) => Some(d == length),
        Err(Error::Budget { .. } | Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ExcellentReport {
        product_matches: &product == w,
        letters: dec.letters(),
        length,
        reduced: dec.letters() == length,
        palindromic: dec.is_palindromic(),
        block_count_is_rank: dec.blocks.len() == g.rank(),
        minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_elements() {
        assert_eq!(w_from_partition(&p(&[2]), 0).one_based(), vec![2, 4, 1, 3]);
        assert_eq!(w_from_partition(&p(&[1, 1]), 0).one_based(), vec![4, 3, 2, 1]);
        assert_eq!(w_from_partition(&p(&[1]), 1).one_based(), vec![3, 2, 1]);
    }

    #[test]
    fn d_c_values() {
        assert_eq!(d_c_classical(&p(&[2]), ClassicalType::C).unwrap(), 2);
        assert_eq!(d_c_classical(&p(&[1, 1]), ClassicalType::C).unwrap(), 4);
        assert_eq!(d_c_classical(&p(&[2, 1]), ClassicalType::B).unwrap(), 5);
        assert_eq!(d_c_classical(&p(&[2, 2]), ClassicalType::D).unwrap(), 6);
        assert!(d_c_classical(&p(&[2, 1, 1]), ClassicalType::D).is_err());
    }

    #[test]
    fn small_words() {
        let a = excellent_decomposition(&p(&[2]), ClassicalType::C, Variant::A).unwrap();
        assert_eq!(a.to_string(), "(2)(1)");
        let b = excellent_decomposition(&p(&[1, 1]), ClassicalType::C, Variant::A).unwrap();
        assert_eq!(b.to_string(), "(2)(121)");
        let d = excellent_decomposition(&p(&[2, 2]), ClassicalType::D, Variant::B).unwrap();
        assert_eq!(d.letters(), 6);
    }

    #[test]
    fn words_multiply_to_inverse() {
        for n in 2..=5u32 {
            for q in Partition::all(n) {
                let inv = WeylElement::Perm(w_from_partition(&q, 0).inverse());
                let b = WeylGroup::of(Family::B, n as usize).unwrap();
                let a = excellent_decomposition(&q, ClassicalType::B, Variant::A).unwrap();
                assert!(validate_excellent(&a, &inv, &b).unwrap().passed(), "{q} a");
                if q.is_even_length() {
                    let v = excellent_decomposition(&q, ClassicalType::B, Variant::B).unwrap();
                    assert!(validate_excellent(&v, &inv, &b).unwrap().passed(), "{q} b");
                    if n >= 2 {
                        let dg = WeylGroup::of(Family::D, n as usize).unwrap();
                        let d = excellent_decomposition(&q, ClassicalType::D, Variant::B).unwrap();
                        let rep = validate_excellent(&d, &inv, &dg).unwrap();
                        assert!(rep.passed(), "{q} d {rep:?}");
                    }
                }
            }
        }
    }
}
