//! Brute force over small finite fields: SL_3, Sp_4 and SO_5 over F_q, their
//! flags and unipotent classes, Bruhat cells and stabilizers.
//!
//! Everything is computed relative to the standard flag F_0.  Since G acts
//! transitively on flags, (g, F) with F in position w relative to gF exists
//! iff some conjugate of g lies in B w B, i.e. rel_position(F_0, g F_0) = w.

mod cells;
mod centralizer;
mod isotropy;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::isometry::{rel_position, unipotent_label, Flag, FormedSpace};
use crate::matrix::Matrix;
use crate::unipotent::UnipotentLabel;
use crate::weyl::{Family, Perm, WeylElement, WeylGroup};

pub use cells::{
    bad_char_membership, cell_unipotent_counts, dsv_test, dsv_test_at, meeting_classes, minimal_class, point_count_series,
    MembershipReport, MinimalClassReport, PointCountReport,
};
pub use centralizer::{c_small_check, centralizer_order, lie_centralizer_dim, sp_representative, sp_representative_with, CSmallReport, CSmallRow};
pub use isotropy::{isotropy_check, IsotropyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupKind {
    Sl3,
    Sp4,
    So5,
}

impl GroupKind {
    pub fn dim(self) -> usize {
        match self {
            GroupKind::Sl3 => 3,
            GroupKind::Sp4 => 4,
            GroupKind::So5 => 5,
        }
    }

    pub fn weyl(self) -> WeylGroup {
        let (f, r) = match self {
            GroupKind::Sl3 => (Family::A, 2),
            GroupKind::Sp4 => (Family::C, 2),
            GroupKind::So5 => (Family::B, 2),
        };
        WeylGroup::of(f, r).expect("rank 2 Weyl groups exist")
    }

    pub fn order(self, q: u64) -> u128 {
        let q = q as u128;
        match self {
            GroupKind::Sl3 => q.pow(3) * (q * q - 1) * (q.pow(3) - 1),
            GroupKind::Sp4 | GroupKind::So5 => q.pow(4) * (q * q - 1) * (q.pow(4) - 1),
        }
    }

    pub fn flag_count(self, q: u64) -> u64 {
        match self {
            GroupKind::Sl3 => (q + 1) * (q * q + q + 1),
            GroupKind::Sp4 | GroupKind::So5 => (q + 1) * (q + 1) * (q * q + 1),
        }
    }

    /// Number of positive roots.
    pub fn positive_roots(self) -> u32 {
        match self {
            GroupKind::Sl3 => 3,
            GroupKind::Sp4 | GroupKind::So5 => 4,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Sl3 => "sl3",
            GroupKind::Sp4 => "sp4",
            GroupKind::So5 => "so5",
        })
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sl3" => Ok(GroupKind::Sl3),
            "sp4" => Ok(GroupKind::Sp4),
            "so5" => Ok(GroupKind::So5),
            other => Err(Error::Parse(format!("unknown group {other:?} (expected sl3, sp4 or so5)"))),
        }
    }
}

/// Matrix model of a group kind over F: generators, membership, Weyl lifts.
#[derive(Clone, Debug)]
pub struct Model<F: Field> {
    kind: GroupKind,
    space: Option<FormedSpace<F>>,
}

impl<F: Field> Model<F> {
    pub fn new(kind: GroupKind) -> Result<Self> {
        let q = F::order().ok_or_else(|| Error::Precondition("finite field required".into()))?;
        if kind == GroupKind::So5 && q % 2 == 0 {
            return Err(Error::Unsupported("SO_5 in characteristic 2".into()));
        }
        let space = match kind {
            GroupKind::Sl3 => None,
            GroupKind::Sp4 => Some(FormedSpace::symplectic(2)),
            GroupKind::So5 => Some(FormedSpace::orthogonal(2, 1)),
        };
        Ok(Model { kind, space })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn space(&self) -> Option<&FormedSpace<F>> {
        self.space.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn contains(&self, g: &Matrix<F>) -> bool {
        match &self.space {
            None => g.det().is_one(),
            Some(s) => s.is_isometry(g) && (self.kind != GroupKind::So5 || g.det().is_one()),
        }
    }

    /// Simple root element of the opposite Borel.
    pub fn y(&self, h: usize, a: &F) -> Matrix<F> {
        match &self.space {
            Some(s) => s.y(h, a),
            None => {
                let mut m = Matrix::identity(3);
                m[(h, h - 1)] = a.clone();
                m
            }
        }
    }

    /// Monomial lift of s_h.
    pub fn sdot(&self, h: usize) -> Matrix<F> {
        match &self.space {
            Some(s) => s.sdot(h),
            None => {
                let mut m = Matrix::identity(3);
                m[(h - 1, h - 1)] = F::zero();
                m[(h, h)] = F::zero();
                m[(h, h - 1)] = F::one();
                m[(h - 1, h)] = -F::one();
                m
            }
        }
    }

    /// Lift of w along a reduced word.
    pub fn lift(&self, weyl: &WeylGroup, w: &WeylElement) -> Result<Matrix<F>> {
        let word = weyl.reduced_word(w)?;
        Ok(word.iter().fold(Matrix::identity(self.dim()), |acc, &h| &acc * &self.sdot(h)))
    }

    /// Diagonal elements of the group.
    pub fn torus(&self) -> Vec<Matrix<F>> {
        let q = F::order().expect("finite");
        let units: Vec<F> = (1..q).map(F::nth).collect();
        let d = self.dim();
        let mut out = Vec::new();
        let mut idx = vec![0usize; d];
        loop {
            let m = Matrix::from_fn(d, d, |i, j| if i == j { units[idx[i]].clone() } else { F::zero() });
            if self.contains(&m) {
                out.push(m);
            }
            let mut k = 0;
            while k < d {
                idx[k] += 1;
                if idx[k] < units.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == d {
                return out;
            }
        }
    }

    /// Generators of the whole group: root elements, Weyl lifts and the torus
    /// (the torus is needed for SO_5, where root elements only give Ω_5).
    pub fn generators(&self) -> Vec<Matrix<F>> {
        let mut gens: Vec<Matrix<F>> = Vec::new();
        for h in 1..=2 {
            gens.push(self.y(h, &F::one()));
            gens.push(self.sdot(h));
        }
        gens.extend(self.torus());
        gens.retain(|g| !g.is_identity());
        gens.sort_by_key(|g| format!("{g:?}"));
        gens.dedup();
        gens
    }

    /// Upper unitriangular part U of the standard Borel, generated by the
    /// positive root elements ẇ y ẇ⁻¹ that land in it.
    pub fn unipotent_radical(&self, weyl: &WeylGroup) -> Result<Vec<Matrix<F>>> {
        let mut gens = Vec::new();
        for w in weyl.elements()? {
            let lw = self.lift(weyl, &w)?;
            let inv = lw.inverse().expect("monomial");
            for h in 1..=2 {
                let x = &(&lw * &self.y(h, &F::one())) * &inv;
                if is_upper_unitriangular(&x) && !gens.contains(&x) {
                    gens.push(x);
                }
            }
        }
        let q = F::order().expect("finite");
        let expected = q.pow(self.kind.positive_roots());
        let u = closure(&gens, self.dim(), expected)?;
        if u.len() as u64 != expected {
            return Err(Error::Internal(format!("|U| = {} but q^N = {expected}", u.len())));
        }
        Ok(u)
    }

    /// Relative position of F_0 and g F_0 as an element of W.
    pub fn position(&self, g: &Matrix<F>) -> Result<WeylElement> {
        let f0 = Flag::from_basis(Matrix::identity(self.dim()));
        let p = rel_position(&f0, &Flag::from_basis(g.clone()))?;
        let p = match self.kind {
            GroupKind::So5 => p.drop_middle().ok_or_else(|| Error::Internal("position moves e_0".into()))?,
            _ => p,
        };
        Ok(WeylElement::Perm(p))
    }

    /// Jordan type, with the characteristic 2 form flags for isometry groups.
    pub fn label(&self, g: &Matrix<F>) -> Result<UnipotentLabel> {
        match &self.space {
            Some(s) => unipotent_label(s, g),
            None => crate::isometry::jordan_type(g).map(UnipotentLabel::jordan),
        }
    }
}

pub fn is_upper_unitriangular<F: Field>(m: &Matrix<F>) -> bool {
    (0..m.rows()).all(|i| (0..=i).all(|j| if i == j { m[(i, j)].is_one() } else { m[(i, j)].is_zero() }))
}

pub fn is_upper_triangular<F: Field>(m: &Matrix<F>) -> bool {
    (0..m.rows()).all(|i| (0..i).all(|j| m[(i, j)].is_zero()))
}

pub fn is_unipotent<F: Field>(g: &Matrix<F>) -> bool {
    let n = g.sub(&Matrix::identity(g.rows()));
    let mut p = n.clone();
    for _ in 1..g.rows() {
        p = &p * &n;
    }
    p.is_zero()
}

/// Group generated by `gens`, by breadth-first search, refusing to grow past
/// `expected` or the enumeration budget.
fn closure<F: Field>(gens: &[Matrix<F>], dim: usize, expected: u64) -> Result<Vec<Matrix<F>>> {
    let budget = crate::enumeration_budget();
    if expected > budget {
        return Err(Error::Budget { needed: expected, budget });
    }
    let id = Matrix::identity(dim);
    let mut seen: HashSet<Matrix<F>> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.clone()) {
                if seen.len() as u64 > expected {
                    return Err(Error::Internal(format!("generated group exceeds the expected order {expected}")));
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

/// Canonical basis of a flag: column i is reduced against earlier pivots and
/// scaled so that its lowest nonzero entry is 1.
pub fn canonical_flag<F: Field>(basis: &Matrix<F>) -> Matrix<F> {
    let n = basis.rows();
    let mut cols: Vec<Vec<F>> = Vec::with_capacity(n);
    let mut pivots: Vec<usize> = Vec::with_capacity(n);
    for j in 0..basis.cols() {
        let mut v = basis.col(j);
        for (c, &p) in cols.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(c) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        let p = (0..n).rev().find(|&r| !v[r].is_zero()).expect("flag basis is invertible");
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        pivots.push(p);
        cols.push(v);
    }
    Matrix::from_cols(n, &cols)
}

/// One unipotent class over F_q: Jordan type (plus form flags when q is even)
/// and the indices of its members in the element list.
#[derive(Clone, Debug, Serialize)]
pub struct GeometricClassOverFq {
    pub label: UnipotentLabel,
    pub members: Vec<usize>,
}

/// A fully enumerated group over F_q.
#[derive(Debug)]
pub struct FqGroupInstance<F: Field> {
    pub kind: GroupKind,
    pub q: u64,
    pub model: Model<F>,
    pub weyl: WeylGroup,
    elements: Vec<Matrix<F>>,
    index: HashMap<Matrix<F>, usize>,
    positions: Vec<WeylElement>,
    flags: Vec<Matrix<F>>,
    borel: Vec<usize>,
    center: Vec<usize>,
    classes: Vec<GeometricClassOverFq>,
}

/// Enumerates the group, its flags, its unipotent classes and the relative
/// position of F_0 and g F_0 for every element g.
pub fn enumerate<F: Field>(kind: GroupKind) -> Result<FqGroupInstance<F>> {
    let q = F::order().ok_or_else(|| Error::Precondition("finite field required".into()))?;
    let model = Model::<F>::new(kind)?;
    let weyl = kind.weyl();
    let order = kind.order(q);
    let budget = crate::enumeration_budget();
    if order > budget as u128 {
        return Err(Error::Budget { needed: order.min(u64::MAX as u128) as u64, budget });
    }
    let elements = closure(&model.generators(), kind.dim(), order as u64)?;
    if elements.len() as u128 != order {
        return Err(Error::Internal(format!("enumerated {} elements of {kind}({q}), expected {order}", elements.len())));
    }
    let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    let positions = elements.par_iter().map(|g| model.position(g)).collect::<Result<Vec<_>>>()?;

    let mut flags: Vec<Matrix<F>> = elements.par_iter().map(canonical_flag).collect();
    flags.sort_by_cached_key(|m| format!("{m:?}"));
    flags.dedup();

    let id = WeylElement::Perm(Perm::identity(weyl.generators()[0].as_perm().expect("classical").degree()));
    let borel: Vec<usize> = (0..elements.len()).filter(|&i| positions[i] == id).collect();
    debug_assert!(borel.iter().all(|&i| is_upper_triangular(&elements[i])));
    let center: Vec<usize> = (0..elements.len())
        .filter(|&i| {
            let g = &elements[i];
            (0..g.rows()).all(|r| (0..g.cols()).all(|c| if r == c { g[(r, c)] == g[(0, 0)] } else { g[(r, c)].is_zero() }))
        })
        .collect();

    let labelled: Vec<Option<UnipotentLabel>> = elements
        .par_iter()
        .map(|g| if is_unipotent(g) { model.label(g).map(Some) } else { Ok(None) })
        .collect::<Result<_>>()?;
    let mut by_label: std::collections::BTreeMap<UnipotentLabel, Vec<usize>> = Default::default();
    for (i, l) in labelled.into_iter().enumerate() {
        if let Some(l) = l {
            by_label.entry(l).or_default().push(i);
        }
    }
    let classes = by_label.into_iter().map(|(label, members)| GeometricClassOverFq { label, members }).collect();

    Ok(FqGroupInstance { kind, q, model, weyl, elements, index, positions, flags, borel, center, classes })
}

impl<F: Field> FqGroupInstance<F> {
    pub fn elements(&self) -> &[Matrix<F>] {
        &self.elements
    }

    pub fn index_of(&self, g: &Matrix<F>) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Canonical bases of all full flags of the relevant type.
    pub fn flags(&self) -> &[Matrix<F>] {
        &self.flags
    }

    /// The stabilizer B of F_0, as element indices.
    pub fn borel(&self) -> &[usize] {
        &self.borel
    }

    /// Stabilizer of the flag with the given canonical basis.
    pub fn flag_stabilizer(&self, flag: &Matrix<F>) -> Vec<usize> {
        let key = canonical_flag(flag);
        (0..self.elements.len()).filter(|&i| canonical_flag(&(&self.elements[i] * flag)) == key).collect()
    }

    pub fn center_order(&self) -> usize {
        self.center.len()
    }

    pub fn position_at(&self, i: usize) -> &WeylElement {
        &self.positions[i]
    }

    pub fn unipotent_classes(&self) -> &[GeometricClassOverFq] {
        &self.classes
    }

    pub fn unipotent_count(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    /// Element indices in the cell B w B.
    pub fn cell(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| &self.positions[i] == w).collect()
    }

    pub fn class_of_label(&self, label: &UnipotentLabel) -> Option<&GeometricClassOverFq> {
        self.classes.iter().find(|c| c.label.matches(label))
    }
}

/// Runs `$body` with `$inst` an enumerated instance of `$kind` over F_`$q`.
#[macro_export]
macro_rules! with_instance {
    ($kind:expr, $q:expr, $inst:ident => $body:expr) => {
        $crate::with_prime_field!($q, F => {
            let $inst = $crate::fq::enumerate::<F>($kind)?;
            $body
        })
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{F2, F3};

    #[test]
    fn small_orders_and_flags() {
        let sp = enumerate::<F2>(GroupKind::Sp4).unwrap();
        assert_eq!(sp.elements().len(), 720);
        assert_eq!(sp.flags().len(), 45);
        let sl = enumerate::<F2>(GroupKind::Sl3).unwrap();
        assert_eq!(sl.elements().len(), 168);
        assert_eq!(sl.flags().len(), 21);
        assert_eq!(sl.borel().len(), 8);
        let sl3 = enumerate::<F3>(GroupKind::Sl3).unwrap();
        assert_eq!(sl3.elements().len(), 5616);
        assert_eq!(sl3.flags().len(), 52);
    }

    #[test]
    fn lifts_have_their_position() {
        for kind in [GroupKind::Sl3, GroupKind::Sp4, GroupKind::So5] {
            let m = Model::<F3>::new(kind).unwrap();
            let w = kind.weyl();
            for x in w.elements().unwrap() {
                let l = m.lift(&w, &x).unwrap();
                assert!(m.contains(&l));
                assert_eq!(m.position(&l).unwrap(), x, "{kind}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(enumerate::<crate::field::F5>(GroupKind::Sp4), Err(Error::Budget { .. })));
    }

    #[test]
    fn canonical_flag_is_invariant_under_borel() {
        let m = Model::<F3>::new(GroupKind::Sp4).unwrap();
        let w = GroupKind::Sp4.weyl();
        let u = m.unipotent_radical(&w).unwrap();
        assert_eq!(u.len(), 81);
        let g = m.lift(&w, &w.longest_element()).unwrap();
        let key = canonical_flag(&g);
        for b in u.iter().take(20) {
            assert_eq!(canonical_flag(&(&g * b)), key);
        }
    }
}
