//! One-line permutations: S_{n+1} for type A, and permutations of [1..2n]
//! commuting with i ↦ 2n+1-i for types B, C, D.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// Zero-based one-line notation: `self.0[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((0..m as u8).collect())
    }

    /// From one-based one-line notation.
    pub fn from_one_based(v: &[usize]) -> Option<Self> {
        let m = v.len();
        let z: Vec<u8> = v.iter().map(|&x| x.wrapping_sub(1) as u8).collect();
        let mut seen = vec![false; m];
        for &x in &z {
            if x as usize >= m || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm(z))
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// (self · other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        Perm(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u8;
        }
        Perm(v)
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(m);
        p.0.swap(a, b);
        p
    }

    pub fn inversions(&self) -> usize {
        self.0.iter().tuple_combinations().filter(|(a, b)| a > b).count()
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.0.len();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.image(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// Commutes with i ↦ m-1-i.
    pub fn commutes_with_involution(&self) -> bool {
        let m = self.0.len();
        (0..m).all(|i| self.image(m - 1 - i) == m - 1 - self.image(i))
    }

    /// Number of i < n (zero-based) sent into the upper half.
    pub fn negatives(&self, n: usize) -> usize {
        (0..n).filter(|&i| self.image(i) >= n).count()
    }

    /// Signed cycle type (positive cycle lengths, negative cycle lengths)
    /// of a permutation of [0..2n) commuting with the involution.
    pub fn signed_cycle_type(&self) -> (Partition, Partition) {
        let m = self.0.len();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut seen = vec![false; m];
        for c in self.cycles() {
            if seen[c[0]] {
                continue;
            }
            for &x in &c {
                seen[x] = true;
            }
            let self_mirror = c.contains(&(m - 1 - c[0]));
            if self_mirror {
                neg.push((c.len() / 2) as u32);
            } else {
                for &x in &c {
                    seen[m - 1 - x] = true;
                }
                pos.push(c.len() as u32);
            }
        }
        (Partition::from_unsorted(pos), Partition::from_unsorted(neg))
    }

    /// Signed permutation view: entry i is ±(|image|) with 1-based values,
    /// negative when i is sent into the upper half.
    pub fn signed_view(&self, n: usize) -> Vec<i32> {
        (0..n)
            .map(|i| {
                let x = self.image(i);
                if x < n {
                    x as i32 + 1
                } else {
                    -((2 * n - x) as i32)
                }
            })
            .collect()
    }

    pub fn from_signed_view(sv: &[i32]) -> Option<Self> {
        let n = sv.len();
        let mut v = vec![0u8; 2 * n];
        for (i, &s) in sv.iter().enumerate() {
            let a = s.unsigned_abs() as usize;
            if a == 0 || a > n {
                return None;
            }
            let img = if s > 0 { a - 1 } else { 2 * n - a };
            v[i] = img as u8;
            v[2 * n - 1 - i] = (2 * n - 1 - img) as u8;
        }
        Perm::from_one_based(&Perm(v).one_based()).filter(Perm::commutes_with_involution)
    }

    /// Insert a fixed middle point: permutation of [0..2n) to one of [0..2n+1).
    pub fn lift_odd(&self) -> Self {
        let n = self.0.len() / 2;
        let sh = |v: u8| if (v as usize) < n { v } else { v + 1 };
        let mut out: Vec<u8> = self.0[..n].iter().map(|&v| sh(v)).collect();
        out.push(n as u8);
        out.extend(self.0[n..].iter().map(|&v| sh(v)));
        Perm(out)
    }

    /// Inverse of `lift_odd`; `None` if the middle point moves.
    pub fn drop_middle(&self) -> Option<Self> {
        let m = self.0.len();
        if m.is_multiple_of(2) {
            return Some(self.clone());
        }
        let n = m / 2;
        if self.image(n) != n {
            return None;
        }
        let sh = |v: u8| if (v as usize) < n { v } else { v - 1 };
        Some(Perm(self.0.iter().enumerate().filter(|&(i, _)| i != n).map(|(_, &v)| sh(v)).collect()))
    }

    /// All permutations of degree m, in lexicographic order.
    pub fn all(m: usize) -> Vec<Perm> {
        (0..m as u8).permutations(m).map(Perm).collect()
    }

    /// All permutations of [0..2n) commuting with the involution.
    pub fn all_signed(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        for p in (1..=n as i32).permutations(n) {
            for signs in 0..(1u32 << n) {
                let sv: Vec<i32> = p.iter().enumerate().map(|(i, &x)| if signs >> i & 1 == 1 { -x } else { x }).collect();
                out.push(Perm::from_signed_view(&sv).expect("valid signed permutation"));
            }
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_based().iter().join(","))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_view_roundtrip() {
        for p in Perm::all_signed(3) {
            assert!(p.commutes_with_involution());
            assert_eq!(Perm::from_signed_view(&p.signed_view(3)).unwrap(), p);
        }
        assert_eq!(Perm::all_signed(3).len(), 48);
    }

    #[test]
    fn lift_and_drop() {
        let w = Perm::from_one_based(&[2, 4, 1, 3]).unwrap();
        let l = w.lift_odd();
        assert_eq!(l.one_based(), vec![2, 5, 3, 1, 4]);
        assert!(l.commutes_with_involution());
        assert_eq!(l.drop_middle().unwrap(), w);
    }

    #[test]
    fn signed_cycles_of_longest() {
        let w0 = Perm::from_one_based(&[4, 3, 2, 1]).unwrap();
        let (a, b) = w0.signed_cycle_type();
        assert!(a.is_empty());
        assert_eq!(b.parts(), &[1, 1]);
    }
}
