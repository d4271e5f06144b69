//! Root systems given by the Gram matrix of the simple roots, and Weyl group
//! elements acting on the root lattice in simple-root coordinates.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Family;
use crate::matrix::Matrix;

/// Linear map on the root lattice; column j is the image of α_j.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootElement {
    rank: u8,
    cols: Vec<i8>,
}

impl RootElement {
    pub fn identity(rank: usize) -> Self {
        let mut cols = vec![0; rank * rank];
        for i in 0..rank {
            cols[i * rank + i] = 1;
        }
        RootElement { rank: rank as u8, cols }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// Coordinates of w(α_j).
    pub fn column(&self, j: usize) -> &[i8] {
        let r = self.rank();
        &self.cols[j * r..(j + 1) * r]
    }

    pub fn apply(&self, v: &[i8]) -> Vec<i8> {
        let r = self.rank();
        let mut out = vec![0i8; r];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(self.column(j)) {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// (self · other)(v) = self(other(v)).
    pub fn compose(&self, other: &Self) -> Self {
        let r = self.rank();
        let mut cols = Vec::with_capacity(r * r);
        for j in 0..r {
            cols.extend(self.apply(other.column(j)));
        }
        RootElement { rank: self.rank, cols }
    }

    /// Integer matrix, rows indexed by coordinates.
    pub fn matrix(&self) -> Matrix<i64> {
        Matrix::from_fn(self.rank(), self.rank(), |i, j| self.column(j)[i] as i64)
    }

    /// Restriction to the span of the simple roots in `support`, which must be stable.
    pub fn restricted_matrix(&self, support: &[usize]) -> Matrix<i64> {
        Matrix::from_fn(support.len(), support.len(), |a, b| self.column(support[b])[support[a]] as i64)
    }
}

impl fmt::Debug for RootElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<&[i8]> = (0..self.rank()).map(|j| self.column(j)).collect();
        write!(f, "{cols:?}")
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    /// Symmetric Gram matrix of the simple roots.
    gram: Vec<Vec<i64>>,
    positive: Vec<Vec<i8>>,
    generators: Vec<RootElement>,
}

fn is_positive(v: &[i8]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

impl RootSystem {
    pub fn from_gram(gram: Vec<Vec<i64>>) -> Self {
        let rank = gram.len();
        let mut rs = RootSystem { rank, gram, positive: Vec::new(), generators: Vec::new() };
        rs.generators = (0..rank)
            .map(|i| {
                let mut cols = Vec::with_capacity(rank * rank);
                for j in 0..rank {
                    let mut col = vec![0i8; rank];
                    col[j] = 1;
                    col[i] -= rs.cartan(i, j) as i8;
                    cols.extend(col);
                }
                RootElement { rank: rank as u8, cols }
            })
            .collect();
        // closure of the simple roots under simple reflections
        let mut roots: Vec<Vec<i8>> = (0..rank).map(|i| unit(rank, i)).collect();
        let mut k = 0;
        while k < roots.len() {
            for g in &rs.generators {
                let img = g.apply(&roots[k]);
                if is_positive(&img) && !roots.contains(&img) {
                    roots.push(img);
                }
            }
            k += 1;
        }
        roots.sort_by_key(|r| (r.iter().map(|&x| x as i32).sum::<i32>(), r.clone()));
        rs.positive = roots;
        rs
    }

    pub fn for_family(family: Family, rank: usize) -> Self {
        Self::from_gram(gram_matrix(family, rank))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// ⟨α_j, α_i^∨⟩ = 2(α_i, α_j)/(α_i, α_i).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        2 * self.gram[i][j] / self.gram[i][i]
    }

    pub fn positive_roots(&self) -> &[Vec<i8>] {
        &self.positive
    }

    pub fn generator(&self, i: usize) -> &RootElement {
        &self.generators[i]
    }

    pub fn inner(&self, a: &[i8], b: &[i8]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += a[i] as i64 * self.gram[i][j] * b[j] as i64;
            }
        }
        s
    }

    pub fn norm(&self, a: &[i8]) -> i64 {
        self.inner(a, a)
    }

    pub fn is_long(&self, a: &[i8]) -> bool {
        let max = (0..self.rank).map(|i| self.gram[i][i]).max().unwrap_or(0);
        self.norm(a) == max
    }

    /// Reflection in an arbitrary root.
    pub fn reflection(&self, beta: &[i8]) -> RootElement {
        let nb = self.norm(beta);
        let mut cols = Vec::with_capacity(self.rank * self.rank);
        for j in 0..self.rank {
            let aj = unit(self.rank, j);
            let c = 2 * self.inner(beta, &aj) / nb;
            cols.extend((0..self.rank).map(|i| aj[i] - (c as i8) * beta[i]));
        }
        RootElement { rank: self.rank as u8, cols }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &RootElement) -> usize {
        self.positive.iter().filter(|b| !is_positive(&w.apply(b))).count()
    }

    /// Right descent: ℓ(w s_i) < ℓ(w) iff w(α_i) is negative.
    pub fn is_right_descent(&self, w: &RootElement, i: usize) -> bool {
        !is_positive(w.column(i))
    }

    /// Zero-based generator indices of a reduced expression.
    pub fn reduced_word(&self, w: &RootElement) -> Vec<usize> {
        let mut cur = w.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| self.is_right_descent(&cur, i)) {
            cur = cur.compose(&self.generators[i]);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    pub fn from_word(&self, word: &[usize]) -> RootElement {
        word.iter().fold(RootElement::identity(self.rank), |acc, &i| acc.compose(&self.generators[i]))
    }

    pub fn inverse(&self, w: &RootElement) -> RootElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.from_word(&word)
    }

    /// Simple roots of the subsystem formed by the given positive roots:
    /// the members that are not a sum of two members.
    pub fn subsystem_simple_roots(&self, pos: &[Vec<i8>]) -> Vec<Vec<i8>> {
        pos.iter()
            .filter(|b| {
                !pos.iter().any(|g| {
                    let d: Vec<i8> = b.iter().zip(g.iter()).map(|(x, y)| x - y).collect();
                    pos.contains(&d)
                })
            })
            .cloned()
            .collect()
    }
}

fn unit(rank: usize, i: usize) -> Vec<i8> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// Gram matrices of the simple roots, standard (Bourbaki) numbering.
/// Types B/C/D use the numbering matching the permutation realization:
/// generator n is the special node.
pub fn gram_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match family {
        Family::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 2 } else { 4 };
            }
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 4 } else { 2 };
            }
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, if i + 2 == n { -2 } else { -1 });
            }
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(2) {
                link(&mut g, i, i + 1, -1);
            }
            if n >= 3 {
                link(&mut g, n - 3, n - 1, -1);
            }
        }
        Family::G2 => {
            g = vec![vec![2, -3], vec![-3, 6]];
        }
        Family::F4 => {
            g = vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]];
        }
        Family::E6 | Family::E7 | Family::E8 => {
            for i in 0..n {
                g[i][i] = 2;
            }
            // 1-3-4-5-6-7-8 with 2 attached to 4
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Family::G2, 2, 6),
            (Family::F4, 4, 24),
            (Family::E6, 6, 36),
            (Family::E7, 7, 63),
            (Family::E8, 8, 120),
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::A, 3, 6),
        ];
        for (f, r, count) in cases {
            assert_eq!(RootSystem::for_family(f, r).positive_roots().len(), count, "{f:?}");
        }
    }

    #[test]
    fn generators_are_involutions() {
        let rs = RootSystem::for_family(Family::F4, 4);
        for i in 0..4 {
            let s = rs.generator(i);
            assert_eq!(s.compose(s), RootElement::identity(4));
            assert_eq!(rs.length(s), 1);
        }
    }

    #[test]
    fn reduced_word_roundtrip() {
        let rs = RootSystem::for_family(Family::E6, 6);
        let w = rs.from_word(&[0, 2, 3, 1, 4, 5, 3, 2]);
        let word = rs.reduced_word(&w);
        assert_eq!(word.len(), rs.length(&w));
        assert_eq!(rs.from_word(&word), w);
    }
}
