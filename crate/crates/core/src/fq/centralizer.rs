//! Centralizer orders of unipotent isometries, counted without enumerating
//! the group, and the C-small test built on them.

use itertools::Itertools;
use serde::Serialize;

use super::{enumerate, meeting_classes, GroupKind};
use crate::error::{Error, Result};
use crate::field::{Field, F3};
use crate::isometry::{jordan_type, FormKind, FormedSpace};
use crate::matrix::Matrix;
use crate::partition::Partition;
use crate::phi::phi_full;
use crate::unipotent::UnipotentLabel;
use crate::weyl::classes::ClassLabel;

/// Unipotent element of Sp_{2n} with Jordan type λ: even parts through a
/// regular element of Sp_{2m} on the first m hyperbolic pairs, each pair of
/// equal odd parts (k, k) through a regular unipotent of GL_k acting on
/// span(e_i) and contragrediently on span(e'_i).
pub fn sp_representative<F: Field>(n: usize, lambda: &Partition) -> Result<Matrix<F>> {
    let m: u32 = lambda.parts().iter().filter(|p| *p % 2 == 0).map(|p| p / 2).sum();
    sp_representative_with(n, lambda, &vec![F::one(); m as usize])
}

/// Same, with the constants c of the even part chosen by the caller; varying
/// c runs through the rational forms of the class.
pub fn sp_representative_with<F: Field>(n: usize, lambda: &Partition, c: &[F]) -> Result<Matrix<F>> {
    if lambda.size() as usize != 2 * n {
        return Err(Error::InvalidPartition(format!("{lambda} is not a partition of {}", 2 * n)));
    }
    let even: Vec<u32> = lambda.parts().iter().copied().filter(|p| p % 2 == 0).collect();
    let odd: Vec<u32> = lambda.parts().iter().copied().filter(|p| p % 2 == 1).collect();
    if odd.chunks(2).any(|c| c.len() != 2 || c[0] != c[1]) {
        return Err(Error::Precondition(format!("odd parts of {lambda} need even multiplicity")));
    }
    let space = FormedSpace::<F>::symplectic(n);
    let mut g = Matrix::identity(2 * n);
    let m: usize = even.iter().map(|&p| p as usize / 2).sum();
    if m > 0 {
        let half = Partition::from_unsorted(even.iter().map(|p| p / 2).collect());
        let small = FormedSpace::<F>::symplectic(m);
        let u = small.u_w(&half, c)?;
        // index maps of e_i and e'_i of the small space into the big one
        let place = |idx: usize| -> usize { if idx < m { space.e(idx + 1) } else { space.e_prime(2 * m - idx) } };
        for r in 0..2 * m {
            for c in 0..2 * m {
                g[(place(r), place(c))] = u[(r, c)].clone();
            }
        }
    }
    let mut start = m + 1;
    for pair in odd.chunks(2) {
        let k = pair[0] as usize;
        // J on e_start..e_{start+k-1}: e_i ↦ e_i + e_{i-1}
        let a = Matrix::from_fn(k, k, |i, j| if i == j || i + 1 == j { F::one() } else { F::zero() });
        let at = a.inverse().expect("unipotent").transpose();
        for i in 0..k {
            for j in 0..k {
                g[(space.e(start + i), space.e(start + j))] = a[(i, j)].clone();
                g[(space.e_prime(start + i), space.e_prime(start + j))] = at[(i, j)].clone();
            }
        }
        start += k;
    }
    debug_assert!(space.is_isometry(&g));
    Ok(g)
}

/// Generators v_b of a Jordan basis {N^k v_b} of N = g - 1, with block sizes.
fn jordan_chains<F: Field>(nmat: &Matrix<F>, lambda: &Partition) -> Result<Vec<(Vec<F>, usize)>> {
    let dim = nmat.rows();
    let mut chains: Vec<(Vec<F>, usize)> = Vec::new();
    let mut vectors: Vec<Vec<F>> = Vec::new();
    let mut sizes: Vec<u32> = lambda.parts().to_vec();
    sizes.dedup();
    for s in sizes {
        let need = lambda.multiplicity(s);
        let mut got = 0;
        for x in nmat.pow(s as u64).kernel() {
            if got == need {
                break;
            }
            let mut chain = vec![x.clone()];
            for _ in 1..s {
                let next = nmat.apply(chain.last().unwrap());
                chain.push(next);
            }
            let mut all = vectors.clone();
            all.extend(chain.iter().cloned());
            if Matrix::from_rows(&all).rank() == all.len() {
                vectors = all;
                chains.push((x, s as usize));
                got += 1;
            }
        }
        if got != need {
            return Err(Error::Internal(format!("could not complete a Jordan basis for {lambda}")));
        }
    }
    if vectors.len() != dim {
        return Err(Error::Internal("Jordan basis does not span".into()));
    }
    Ok(chains)
}

/// Solutions of A y = t as (particular, kernel basis), or `None`.
fn solve_affine<F: Field>(rows: &[(Vec<F>, F)], nvars: usize) -> Option<(Vec<F>, Vec<Vec<F>>)> {
    if rows.is_empty() {
        let basis = (0..nvars).map(|i| (0..nvars).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect();
        return Some((vec![F::zero(); nvars], basis));
    }
    let aug = Matrix::from_rows(&rows.iter().map(|(a, t)| a.iter().cloned().chain([t.clone()]).collect()).collect::<Vec<_>>());
    let (r, pivots) = aug.rref();
    if pivots.contains(&nvars) {
        return None;
    }
    let mut part = vec![F::zero(); nvars];
    for (row, &p) in pivots.iter().enumerate() {
        part[p] = r[(row, nvars)].clone();
    }
    let coeffs = Matrix::from_rows(&rows.iter().map(|(a, _)| a.clone()).collect::<Vec<_>>());
    Some((part, coeffs.kernel()))
}

struct Search<'a, F: Field> {
    space: &'a FormedSpace<F>,
    nmat: &'a Matrix<F>,
    chains: Vec<(Vec<F>, usize)>,
    /// (source vector, image) for every vector of the assigned chains.
    assigned: Vec<(Vec<F>, Vec<F>)>,
    special: bool,
    nodes: u64,
    limit: u64,
}

impl<F: Field> Search<'_, F> {
    fn chain(&self, v: &[F], len: usize) -> Vec<Vec<F>> {
        let mut out = vec![v.to_vec()];
        for _ in 1..len {
            out.push(self.nmat.apply(out.last().unwrap()));
        }
        out
    }

    fn count(&mut self, level: usize) -> Result<u64> {
        if level == self.chains.len() {
            if !self.special {
                return Ok(1);
            }
            let src: Vec<Vec<F>> = self.assigned.iter().map(|a| a.0.clone()).collect();
            let img: Vec<Vec<F>> = self.assigned.iter().map(|a| a.1.clone()).collect();
            let d = Matrix::from_rows(&img).det().div(&Matrix::from_rows(&src).det()).expect("basis");
            return Ok(d.is_one() as u64);
        }
        let dim = self.nmat.rows();
        let (v, len) = self.chains[level].clone();
        let src = self.chain(&v, len);
        let gram = self.space.gram();
        let gt = gram.transpose();
        // linear conditions on y: N^len y = 0 and (N^i y, z) = (N^i v, z_src)
        let mut rows: Vec<(Vec<F>, F)> = Vec::new();
        let nl = self.nmat.pow(len as u64);
        for r in 0..dim {
            rows.push((nl.row(r), F::zero()));
        }
        let mut npow = Matrix::identity(dim);
        for i in 0..len {
            let npt = npow.transpose();
            for (zs, zi) in &self.assigned {
                // (N^i y)ᵀ G z = yᵀ (N^i)ᵀ G z
                let coeff = npt.apply(&gram.apply(zi));
                rows.push((coeff, self.space.bilinear(&src[i], zs)));
                // (z, N^i y) = zᵀ G N^i y
                let coeff2 = npt.apply(&gt.apply(zi));
                rows.push((coeff2, self.space.bilinear(zs, &src[i])));
            }
            npow = &npow * self.nmat;
        }
        let Some((part, kernel)) = solve_affine(&rows, dim) else { return Ok(0) };
        let q = F::order().expect("finite");
        let k = kernel.len() as u32;
        let total = q.checked_pow(k).ok_or(Error::Budget { needed: u64::MAX, budget: self.limit })?;
        self.nodes = self.nodes.saturating_add(total);
        if self.nodes > self.limit {
            return Err(Error::Budget { needed: self.nodes, budget: self.limit });
        }
        let mut found = 0;
        for idx in 0..total {
            let mut y = part.clone();
            let mut rest = idx;
            for b in &kernel {
                let c = F::nth(rest % q);
                rest /= q;
                if !c.is_zero() {
                    for (yi, bi) in y.iter_mut().zip(b) {
                        *yi = yi.clone() + c.clone() * bi.clone();
                    }
                }
            }
            let img = self.chain(&y, len);
            let ok = (0..len).all(|i| (0..len).all(|j| self.space.bilinear(&img[i], &img[j]) == self.space.bilinear(&src[i], &src[j])));
            let q_ok = F::characteristic() != 2 || self.space.kind() != FormKind::Orthogonal || (0..len).all(|i| self.space.quadratic(&img[i]) == self.space.quadratic(&src[i]));
            if !(ok && q_ok) {
                continue;
            }
            let mark = self.assigned.len();
            self.assigned.extend(src.iter().cloned().zip(img));
            found += self.count(level + 1)?;
            self.assigned.truncate(mark);
        }
        Ok(found)
    }
}

/// |{x in the isometry group : xg = gx}| for unipotent g, by choosing the
/// images of Jordan chain generators one block at a time; the form
/// conditions against earlier blocks are linear, so only the affine
/// solution set is walked.  `special` adds det x = 1.
pub fn centralizer_order<F: Field>(space: &FormedSpace<F>, g: &Matrix<F>, special: bool) -> Result<u64> {
    let lambda = jordan_type(g)?;
    let nmat = g.sub(&Matrix::identity(space.dim()));
    let chains = jordan_chains(&nmat, &lambda)?;
    let limit = crate::enumeration_budget().saturating_mul(64);
    let mut s = Search { space, nmat: &nmat, chains, assigned: Vec::new(), special, nodes: 0, limit };
    s.count(0)
}

/// dim {X : XᵀG + GX = 0, gX = Xg}, the centralizer of g in the Lie algebra
/// of the isometry group; equals dim Z(g) in good odd characteristic.
pub fn lie_centralizer_dim<F: Field>(space: &FormedSpace<F>, g: &Matrix<F>) -> usize {
    let d = space.dim();
    let gram = space.gram();
    let var = |i: usize, j: usize| i * d + j;
    let mut rows: Vec<Vec<F>> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            // (XᵀG + GX)[a][b] = Σ_k X[k][a] G[k][b] + G[a][k] X[k][b]
            let mut r = vec![F::zero(); d * d];
            for k in 0..d {
                r[var(k, a)] = r[var(k, a)].clone() + gram[(k, b)].clone();
                r[var(k, b)] = r[var(k, b)].clone() + gram[(a, k)].clone();
            }
            rows.push(r);
            // (gX - Xg)[a][b]
            let mut r = vec![F::zero(); d * d];
            for k in 0..d {
                r[var(k, b)] = r[var(k, b)].clone() + g[(a, k)].clone();
                r[var(a, k)] = r[var(a, k)].clone() - g[(k, b)].clone();
            }
            rows.push(r);
        }
    }
    d * d - Matrix::from_rows(&rows).rank()
}

#[derive(Clone, Debug, Serialize)]
pub struct CSmallRow {
    pub unipotent: String,
    /// (q, smallest |Z(g)(F_q)| over the representatives tried).  The
    /// smallest one belongs to the split rational form, whose order is a
    /// single polynomial in q.
    pub counts: Vec<(u64, u64)>,
    /// (q, every distinct |Z(g)(F_q)| seen), for the record.
    pub all_counts: Vec<(u64, Vec<u64>)>,
    /// Growth exponent read from consecutive q; `None` if the pairs disagree.
    pub degree: Option<usize>,
    pub lie_dim: usize,
    pub is_phi: bool,
    /// degree ≤ d_C, with equality iff the class is Φ(C).
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CSmallReport {
    pub class: String,
    pub d_c: usize,
    pub dim_center: usize,
    pub rows: Vec<CSmallRow>,
    pub inconclusive: bool,
}

impl CSmallReport {
    pub fn holds(&self) -> bool {
        !self.inconclusive && self.rows.iter().all(|r| r.ok) && self.rows.iter().filter(|r| r.is_phi).count() == 1
    }
}

/// Integer d with N(q) ~ c·q^d, read from every consecutive pair of q; the
/// fit is declared ambiguous when two pairs round differently.
fn growth_degree(counts: &[(u64, u64)]) -> Option<usize> {
    let ds: Vec<i64> = counts
        .windows(2)
        .map(|w| {
            let r = (w[1].1 as f64 / w[0].1 as f64).ln() / (w[1].0 as f64 / w[0].0 as f64).ln();
            r.round() as i64
        })
        .collect();
    match ds.first() {
        Some(&d) if d >= 0 && ds.iter().all(|&x| x == d) => Some(d as usize),
        _ => None,
    }
}

/// Distinct centralizer orders over the representatives with constants in
/// (F_q^*)^m, ascending, and the Lie centralizer dimension.
fn rational_forms<F: Field>(lambda: &Partition) -> Result<(Vec<u64>, usize)> {
    let space = FormedSpace::<F>::symplectic(2);
    let m = lambda.parts().iter().filter(|p| *p % 2 == 0).map(|p| p / 2).sum::<u32>() as usize;
    let q = F::order().expect("finite");
    let units: Vec<F> = (1..q).map(F::nth).collect();
    let mut seen = Vec::new();
    let mut lie = None;
    for c in std::iter::repeat_n(units.iter(), m).multi_cartesian_product() {
        let c: Vec<F> = c.into_iter().cloned().collect();
        let g = sp_representative_with::<F>(2, lambda, &c)?;
        let n = centralizer_order(&space, &g, false)?;
        if !seen.contains(&n) {
            seen.push(n);
        }
        let l = lie_centralizer_dim(&space, &g);
        if *lie.get_or_insert(l) != l {
            return Err(Error::Internal(format!("Lie centralizer dimension varies over rational forms of {lambda}")));
        }
    }
    seen.sort_unstable();
    Ok((seen, lie.unwrap_or(0)))
}

/// For an elliptic class C of W(C_2): every unipotent class meeting the cell
/// (found in Sp_4(F_3)) has centralizer growth degree ≤ d_C, with equality
/// exactly for Φ(C).  Centralizer orders are counted at each q in `qs`.
pub fn c_small_check(c: &ClassLabel, qs: &[u64]) -> Result<CSmallReport> {
    let kind = GroupKind::Sp4;
    let inst = enumerate::<F3>(kind)?;
    if !inst.weyl.is_elliptic(c)? {
        return Err(Error::Precondition(format!("{c} is not elliptic")));
    }
    if qs.iter().any(|q| q % 2 == 0) {
        return Err(Error::Precondition("centralizer degrees need odd q".into()));
    }
    let d_c = inst.weyl.d_c(c)?;
    let phi = phi_full(&inst.weyl, c, 0)?;
    let mut rows = Vec::new();
    for label in meeting_classes(c, &inst)? {
        let lambda = label.parts().ok_or_else(|| Error::Precondition(format!("{label} is not a Jordan type")))?.clone();
        let mut counts = Vec::new();
        let mut all_counts = Vec::new();
        let mut lie_dim = 0;
        for &q in qs {
            let (seen, ld) = crate::with_prime_field!(q, F => rational_forms::<F>(&lambda)?)?;
            counts.push((q, seen[0]));
            all_counts.push((q, seen));
            lie_dim = ld;
        }
        let degree = growth_degree(&counts);
        let is_phi = UnipotentLabel::jordan(lambda.clone()).matches(&phi);
        let ok = degree.is_some_and(|d| d <= d_c && ((d == d_c) == is_phi));
        rows.push(CSmallRow { unipotent: label.to_string(), counts, all_counts, degree, lie_dim, is_phi, ok });
    }
    let inconclusive = rows.iter().any(|r| r.degree.is_none());
    Ok(CSmallReport { class: c.to_string(), d_c, dim_center: 0, rows, inconclusive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{F5, F7};

    #[test]
    fn representatives_have_their_type() {
        for l in ["4", "2,2", "2,1,1", "1,1,1,1"] {
            let lambda: Partition = l.parse().unwrap();
            let g = sp_representative::<F5>(2, &lambda).unwrap();
            assert!(FormedSpace::<F5>::symplectic(2).is_isometry(&g));
            assert_eq!(jordan_type(&g).unwrap(), lambda);
        }
        let lambda: Partition = "3,3,2".parse().unwrap();
        let g = sp_representative::<F7>(4, &lambda).unwrap();
        assert!(FormedSpace::<F7>::symplectic(4).is_isometry(&g));
        assert_eq!(jordan_type(&g).unwrap(), lambda);
    }
}
