//! Partitions (weakly decreasing positive sequences) and the ψ sign vector.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates positivity and weak decrease.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// σ, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// n = Σ p_i.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// p_i with 1-based index; 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn conjugate(&self) -> Self {
        let max = self.0.first().copied().unwrap_or(0);
        Partition((1..=max).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// κ_σ: parity of the number of parts.
    pub fn kappa(&self) -> u32 {
        (self.0.len() % 2) as u32
    }

    /// Membership in 𝒫⁺ (even number of parts).
    pub fn is_even_length(&self) -> bool {
        self.0.len().is_multiple_of(2)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_unsorted(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn prefix_sums(&self) -> Vec<u32> {
        self.0.iter().scan(0, |s, &p| {
            *s += p;
            Some(*s)
        }).collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` with an even number of parts.
    pub fn all_even_length(n: u32) -> Vec<Partition> {
        Self::all(n).into_iter().filter(Partition::is_even_length).collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Accepts `2,1`, `(2,1)` or `[2,1]`; empty brackets give the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Dominance order: equal totals and every prefix sum of `a` at most that of `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::Precondition(format!("{a} and {b} have different totals")));
    }
    let len = a.len().max(b.len());
    let mut sa = 0;
    let mut sb = 0;
    for i in 1..=len {
        sa += a.part(i);
        sb += b.part(i);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Values ψ(1..σ) in {-1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiVector(pub Vec<i8>);

impl PsiVector {
    pub fn get(&self, t: usize) -> i8 {
        self.0[t - 1]
    }

    pub fn sum(&self) -> i32 {
        self.0.iter().map(|&x| x as i32).sum()
    }
}

/// ψ(t) = 1 if t is odd and p_t is strictly below every earlier part,
/// -1 if t is even and p_t is strictly above every later part, 0 otherwise.
pub fn psi(p: &Partition) -> PsiVector {
    let s = p.len();
    let v = (1..=s)
        .map(|t| {
            let pt = p.part(t);
            if t % 2 == 1 && (1..t).all(|x| pt < p.part(x)) {
                1
            } else if t % 2 == 0 && (t + 1..=s).all(|x| p.part(x) < pt) {
                -1
            } else {
                0
            }
        })
        .collect();
    PsiVector(v)
}

/// ψ extended to t = σ+1 with p_{σ+1} = κ/2, as used by the Λ'' bound.
pub fn psi_extended(p: &Partition, kappa: u32, t: usize) -> i8 {
    let s = p.len();
    if t <= s {
        return psi(p).get(t);
    }
    if t == s + 1 && t.is_multiple_of(2) && kappa == 1 {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&p(&[3, 1])).0, vec![1, -1]);
        assert_eq!(psi(&p(&[2, 2])).0, vec![1, -1]);
        let v = psi(&p(&[2, 2, 1]));
        assert_eq!(v.get(1), 1);
        assert_eq!(v.sum(), 1);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[4])).unwrap());
        assert!(!dominance_leq(&p(&[4]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[3]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
    }
}
