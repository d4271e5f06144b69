//! Weyl groups of types A–G: elements, words, length, reflection representation.
//!
//! Classical elements are one-line permutations: S_{n+1} for A_n and the
//! centralizer of i ↦ 2n-1-i (zero-based) in S_{2n} for B_n, C_n, D_n, the
//! latter being the even permutations.  Exceptional elements are integer
//! matrices on the root lattice.

pub mod classes;
pub mod parabolic;
pub mod perm;
pub mod roots;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{char_poly, cyclotomic_factorization, CyclotomicSignature, IntPoly};
pub use perm::Perm;
pub use roots::{RootElement, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// B, C or D.
    pub fn is_isometry_type(self) -> bool {
        matches!(self, Family::B | Family::C | Family::D)
    }

    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "G2" => Family::G2,
            "F4" => Family::F4,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Realization {
    SignedPerm,
    RootMatrix,
    TableOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub family: Family,
    pub rank: usize,
}

impl GroupDescriptor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None if family == Family::A => rank >= 1,
            None => rank >= 2,
        };
        if !ok || rank > 64 {
            return Err(Error::IllegalGroup(format!("{family}{rank}")));
        }
        Ok(GroupDescriptor { family, rank })
    }

    /// Also allows B_1 and C_1, which occur as Levi factors.
    pub fn new_lenient(family: Family, rank: usize) -> Result<Self> {
        if matches!(family, Family::B | Family::C) && rank == 1 {
            return Ok(GroupDescriptor { family, rank });
        }
        Self::new(family, rank)
    }

    pub fn realization(&self) -> Realization {
        match self.family {
            Family::E7 | Family::E8 => Realization::TableOnly,
            f if f.is_classical() => Realization::SignedPerm,
            _ => Realization::RootMatrix,
        }
    }

    /// Order of the Weyl group.
    pub fn order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => fact(n) << n,
            Family::D => fact(n) << (n - 1),
            Family::G2 => 12,
            Family::F4 => 1152,
            Family::E6 => 51840,
            Family::E7 => 2903040,
            Family::E8 => 696729600,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G2 => 6,
            Family::F4 => 24,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.fixed_rank().is_some() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}{}", self.family, self.rank)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylElement {
    Perm(Perm),
    Root(RootElement),
}

impl WeylElement {
    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            WeylElement::Perm(p) => Some(p),
            WeylElement::Root(_) => None,
        }
    }

    pub fn as_root(&self) -> Option<&RootElement> {
        match self {
            WeylElement::Root(r) => Some(r),
            WeylElement::Perm(_) => None,
        }
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylElement::Perm(p) => write!(f, "{p}"),
            WeylElement::Root(r) => write!(f, "{r:?}"),
        }
    }
}

/// A Weyl group together with whatever data its realization needs.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    desc: GroupDescriptor,
    roots: RootSystem,
}

impl WeylGroup {
    pub fn new(desc: GroupDescriptor) -> Self {
        WeylGroup { desc, roots: RootSystem::for_family(desc.family, desc.rank) }
    }

    pub fn of(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(GroupDescriptor::new(family, rank)?))
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.desc
    }

    pub fn family(&self) -> Family {
        self.desc.family
    }

    pub fn rank(&self) -> usize {
        self.desc.rank
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    fn perm_degree(&self) -> usize {
        match self.desc.family {
            Family::A => self.desc.rank + 1,
            _ => 2 * self.desc.rank,
        }
    }

    pub fn identity(&self) -> WeylElement {
        if self.desc.family.is_classical() {
            WeylElement::Perm(Perm::identity(self.perm_degree()))
        } else {
            WeylElement::Root(RootElement::identity(self.desc.rank))
        }
    }

    /// Simple reflection s_i, 1-based.  In type D, s_n is s_n s_{n-1} s_n of type B.
    pub fn generator(&self, i: usize) -> Result<WeylElement> {
        let n = self.desc.rank;
        if i == 0 || i > n {
            return Err(Error::Precondition(format!("generator index {i} out of range for {}", self.desc)));
        }
        Ok(match self.desc.family {
            Family::A => WeylElement::Perm(Perm::transposition(n + 1, i - 1, i)),
            Family::B | Family::C | Family::D => {
                let m = 2 * n;
                let bgen = |j: usize| {
                    if j < n {
                        Perm::transposition(m, j - 1, j).compose(&Perm::transposition(m, m - j, m - j - 1))
                    } else {
                        Perm::transposition(m, n - 1, n)
                    }
                };
                if self.desc.family == Family::D && i == n {
                    WeylElement::Perm(bgen(n).compose(&bgen(n - 1)).compose(&bgen(n)))
                } else {
                    WeylElement::Perm(bgen(i))
                }
            }
            _ => WeylElement::Root(self.roots.generator(i - 1).clone()),
        })
    }

    pub fn generators(&self) -> Vec<WeylElement> {
        (1..=self.desc.rank).map(|i| self.generator(i).expect("index in range")).collect()
    }

    /// Validates that `g` belongs to this group.
    pub fn check(&self, g: &WeylElement) -> Result<()> {
        let bad = |why: &str| Err(Error::Mismatch(format!("{g:?} is not an element of W({}): {why}", self.desc)));
        match (g, self.desc.family.is_classical()) {
            (WeylElement::Perm(p), true) => {
                if p.degree() != self.perm_degree() {
                    return bad("wrong degree");
                }
                if self.desc.family != Family::A && !p.commutes_with_involution() {
                    return bad("does not commute with the involution");
                }
                if self.desc.family == Family::D && !p.is_even() {
                    return bad("odd permutation");
                }
                Ok(())
            }
            (WeylElement::Root(r), false) if r.rank() == self.desc.rank => Ok(()),
            _ => bad("wrong realization"),
        }
    }

    pub fn multiply(&self, g: &WeylElement, h: &WeylElement) -> Result<WeylElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul(g, h))
    }

    pub(crate) fn mul(&self, g: &WeylElement, h: &WeylElement) -> WeylElement {
        match (g, h) {
            (WeylElement::Perm(a), WeylElement::Perm(b)) => WeylElement::Perm(a.compose(b)),
            (WeylElement::Root(a), WeylElement::Root(b)) => WeylElement::Root(a.compose(b)),
            _ => panic!("mixed realizations"),
        }
    }

    pub fn invert(&self, g: &WeylElement) -> Result<WeylElement> {
        self.check(g)?;
        Ok(self.inv(g))
    }

    pub(crate) fn inv(&self, g: &WeylElement) -> WeylElement {
        match g {
            WeylElement::Perm(p) => WeylElement::Perm(p.inverse()),
            WeylElement::Root(r) => WeylElement::Root(self.roots.inverse(r)),
        }
    }

    /// x g x⁻¹.
    pub fn conjugate(&self, g: &WeylElement, x: &WeylElement) -> WeylElement {
        self.mul(&self.mul(x, g), &self.inv(x))
    }

    /// Product s_{i_1} s_{i_2} ⋯ of 1-based generator indices.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let gens = self.generators();
        word.iter().try_fold(self.identity(), |acc, &i| {
            gens.get(i.wrapping_sub(1))
                .map(|s| self.mul(&acc, s))
                .ok_or_else(|| Error::Precondition(format!("generator index {i} out of range for {}", self.desc)))
        })
    }

    pub fn length(&self, g: &WeylElement) -> Result<usize> {
        self.check(g)?;
        Ok(self.len_unchecked(g))
    }

    pub(crate) fn len_unchecked(&self, g: &WeylElement) -> usize {
        match g {
            WeylElement::Perm(p) => {
                let n = self.desc.rank;
                match self.desc.family {
                    Family::A => p.inversions(),
                    Family::B | Family::C => (p.inversions() + p.negatives(n)) / 2,
                    _ => (p.inversions() + p.negatives(n)) / 2 - p.negatives(n),
                }
            }
            WeylElement::Root(r) => self.roots.length(r),
        }
    }

    /// Reduced expression, 1-based generator indices.
    pub fn reduced_word(&self, g: &WeylElement) -> Result<Vec<usize>> {
        self.check(g)?;
        Ok(self.word_unchecked(g))
    }

    pub(crate) fn word_unchecked(&self, g: &WeylElement) -> Vec<usize> {
        if let WeylElement::Root(r) = g {
            return self.roots.reduced_word(r).into_iter().map(|i| i + 1).collect();
        }
        let gens = self.generators();
        let mut cur = g.clone();
        let mut l = self.len_unchecked(&cur);
        let mut rev = Vec::with_capacity(l);
        while l > 0 {
            let (i, next) = gens
                .iter()
                .enumerate()
                .map(|(i, s)| (i, self.mul(&cur, s)))
                .find(|(_, x)| self.len_unchecked(x) < l)
                .expect("a nontrivial element has a right descent");
            rev.push(i + 1);
            cur = next;
            l -= 1;
        }
        rev.reverse();
        rev
    }

    /// Bitmask of generators occurring in any reduced expression.
    pub fn support(&self, g: &WeylElement) -> u64 {
        self.word_unchecked(g).iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// Matrix of g on the natural representation: signed permutation matrix
    /// for B/C/D, permutation matrix of degree n+1 for A, root-lattice matrix
    /// otherwise.  For A this contains the trivial summand once.
    pub fn natural_matrix(&self, g: &WeylElement) -> Result<Matrix<i64>> {
        self.check(g)?;
        Ok(match g {
            WeylElement::Perm(p) if self.desc.family == Family::A => {
                let m = p.degree();
                Matrix::from_fn(m, m, |i, j| i64::from(p.image(j) == i))
            }
            WeylElement::Perm(p) => {
                let n = self.desc.rank;
                let mut m = Matrix::from_fn(n, n, |_, _| 0i64);
                for j in 0..n {
                    let x = p.image(j);
                    if x < n {
                        m[(x, j)] = 1;
                    } else {
                        m[(2 * n - 1 - x, j)] = -1;
                    }
                }
                m
            }
            WeylElement::Root(r) => r.matrix(),
        })
    }

    /// Characteristic polynomial on the reflection representation.
    pub fn reflection_poly(&self, g: &WeylElement) -> Result<IntPoly> {
        let p = char_poly(&self.natural_matrix(g)?);
        if self.desc.family == Family::A {
            return p
                .div_exact(&IntPoly::new(vec![-1, 1]))
                .ok_or_else(|| Error::Internal("permutation matrix without eigenvalue 1".into()));
        }
        Ok(p)
    }

    pub fn reflection_char_poly(&self, g: &WeylElement) -> Result<CyclotomicSignature> {
        cyclotomic_factorization(&self.reflection_poly(g)?)
    }

    /// det(1 - g) on the reflection representation.
    pub fn det_one_minus_w(&self, g: &WeylElement) -> Result<u64> {
        let v = self.reflection_poly(g)?.eval(1);
        // det(xI - M) at x = 1; the sign is (-1)^rank times det(M - I)
        u64::try_from(v).map_err(|_| Error::Internal(format!("negative det(1-w) = {v}")))
    }

    pub fn is_enumerable(&self) -> bool {
        self.desc.realization() != Realization::TableOnly && self.desc.order() <= crate::enumeration_budget() as u128
    }

    /// All elements, in a deterministic order.
    pub fn elements(&self) -> Result<Vec<WeylElement>> {
        if self.desc.realization() == Realization::TableOnly {
            return Err(Error::Unsupported(format!("W({}) is table-only", self.desc)));
        }
        let order = self.desc.order();
        let budget = crate::enumeration_budget();
        if order > budget as u128 {
            return Err(Error::Budget { needed: order.min(u64::MAX as u128) as u64, budget });
        }
        let n = self.desc.rank;
        Ok(match self.desc.family {
            Family::A => Perm::all(n + 1).into_iter().map(WeylElement::Perm).collect(),
            Family::B | Family::C => Perm::all_signed(n).into_iter().map(WeylElement::Perm).collect(),
            Family::D => Perm::all_signed(n).into_iter().filter(Perm::is_even).map(WeylElement::Perm).collect(),
            _ => {
                let mut out = self.closure(&self.identity(), |x, s| self.mul(x, s));
                out.sort();
                out
            }
        })
    }

    fn closure(&self, start: &WeylElement, step: impl Fn(&WeylElement, &WeylElement) -> WeylElement) -> Vec<WeylElement> {
        let gens = self.generators();
        let mut seen: HashSet<WeylElement> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = step(&x, s);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Conjugacy class of `g`, by breadth-first conjugation with generators.
    pub fn conjugacy_orbit(&self, g: &WeylElement) -> Result<Vec<WeylElement>> {
        self.check(g)?;
        Ok(self.closure(g, |x, s| self.mul(&self.mul(s, x), s)))
    }

    pub fn longest_element(&self) -> WeylElement {
        // greedy: multiply by generators while the length grows
        let gens = self.generators();
        let mut w = self.identity();
        let mut l = 0;
        loop {
            let next = gens.iter().map(|s| self.mul(&w, s)).find(|x| self.len_unchecked(x) > l);
            match next {
                Some(x) => {
                    w = x;
                    l += 1;
                }
                None => return w,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    /// Word length by breadth-first search in the Cayley graph.
    fn bfs_lengths(w: &WeylGroup) -> HashMap<WeylElement, usize> {
        let gens = w.generators();
        let mut dist = HashMap::from([(w.identity(), 0)]);
        let mut queue = VecDeque::from([w.identity()]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for s in &gens {
                let y = w.mul(&x, s);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    #[test]
    fn length_formulas_match_cayley_graph() {
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 4), (Family::D, 4), (Family::G2, 2), (Family::F4, 4)] {
            let w = WeylGroup::of(f, r).unwrap();
            let dist = bfs_lengths(&w);
            assert_eq!(dist.len() as u128, w.descriptor().order(), "{f:?}");
            for (g, d) in &dist {
                assert_eq!(w.length(g).unwrap(), *d, "{f:?} {g:?}");
            }
            let elements = w.elements().unwrap();
            assert_eq!(elements.len(), dist.len());
        }
    }

    #[test]
    fn longest_element_of_b2() {
        let w = WeylGroup::of(Family::B, 2).unwrap();
        let w0 = w.longest_element();
        assert_eq!(w0, WeylElement::Perm(Perm::from_one_based(&[4, 3, 2, 1]).unwrap()));
        assert_eq!(w.length(&w0).unwrap(), 4);
    }

    #[test]
    fn type_d_generator_is_conjugated_reflection() {
        let w = WeylGroup::of(Family::D, 4).unwrap();
        let s = w.generator(4).unwrap();
        assert_eq!(w.length(&s).unwrap(), 1);
        assert!(w.check(&s).is_ok());
        let b = WeylGroup::of(Family::B, 4).unwrap();
        assert!(w.check(&b.generator(4).unwrap()).is_err());
    }

    #[test]
    fn reflection_signatures() {
        let g2 = WeylGroup::of(Family::G2, 2).unwrap();
        let cox = g2.element_from_word(&[1, 2]).unwrap();
        assert_eq!(g2.reflection_char_poly(&cox).unwrap().to_string(), "Φ6");
        assert_eq!(g2.det_one_minus_w(&cox).unwrap(), 1);
        let b2 = WeylGroup::of(Family::B, 2).unwrap();
        assert_eq!(b2.reflection_char_poly(&b2.longest_element()).unwrap().to_string(), "Φ2^2");
        assert_eq!(b2.det_one_minus_w(&b2.identity()).unwrap(), 0);
        let a3 = WeylGroup::of(Family::A, 3).unwrap();
        assert_eq!(a3.reflection_char_poly(&a3.identity()).unwrap().to_string(), "Φ1^3");
    }

    #[test]
    fn descriptor_validation() {
        assert!(GroupDescriptor::new(Family::B, 1).is_err());
        assert!(GroupDescriptor::new(Family::F4, 3).is_err());
        assert_eq!(GroupDescriptor::new(Family::E8, 8).unwrap().realization(), Realization::TableOnly);
    }
}
