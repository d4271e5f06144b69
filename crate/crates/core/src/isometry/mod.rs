//! Vector spaces with a symplectic or quadratic form, full isotropic flags,
//! their relative position, and the unipotent elements u_w built from
//! excellent decompositions.
//!
//! Coordinates follow flag order: e_1..e_n, then e_0 when κ = 1, then
//! e'_n..e'_1. So e_i sits at index i-1, e_0 at n and e'_j at ν-j, and
//! the standard flag is spanned by initial segments of the basis.

mod canonical;

use serde::Serialize;

use crate::elliptic::{excellent_decomposition, w_from_partition, ClassicalType, ExcellentDecomposition, Variant};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Matrix, Subspace};
use crate::partition::Partition;
use crate::unipotent::UnipotentLabel;
use crate::weyl::Perm;

pub use canonical::{
    canonical_basis, check_canonical_basis, lambda, lambda_bounds_check, lambda_double_prime, lambda_prime, lambda_pure_identity, string_decomposition_holds,
    CanonicalBasis, CanonicalCheck, LambdaReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FormKind {
    /// Alternating form, Q = 0, κ = 0.
    Symplectic,
    /// Quadratic form Q with polar form (,); κ = 0 or 1.
    Orthogonal,
}

/// F^ν with the standard form described in the module docs.
#[derive(Clone, Debug)]
pub struct FormedSpace<F: Field> {
    n: usize,
    kappa: usize,
    kind: FormKind,
    gram: Matrix<F>,
}

impl<F: Field> FormedSpace<F> {
    pub fn symplectic(n: usize) -> Self {
        Self::build(n, 0, FormKind::Symplectic)
    }

    /// κ = 1 gives the odd orthogonal space of dimension 2n+1.
    pub fn orthogonal(n: usize, kappa: usize) -> Self {
        assert!(kappa <= 1);
        Self::build(n, kappa, FormKind::Orthogonal)
    }

    fn build(n: usize, kappa: usize, kind: FormKind) -> Self {
        let nu = 2 * n + kappa;
        let mut gram = Matrix::zeros(nu, nu);
        for i in 1..=n {
            let (a, b) = (i - 1, nu - i);
            gram[(a, b)] = F::one();
            gram[(b, a)] = if kind == FormKind::Symplectic { -F::one() } else { F::one() };
        }
        if kappa == 1 {
            gram[(n, n)] = F::from_i64(2);
        }
        FormedSpace { n, kappa, kind, gram }
    }

    /// The same standard form over another field.
    pub fn lift<G: Field>(&self) -> FormedSpace<G> {
        FormedSpace::<G>::build(self.n, self.kappa, self.kind)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        2 * self.n + self.kappa
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    /// Coordinate index of e_i (1-based i).
    pub fn e(&self, i: usize) -> usize {
        i - 1
    }

    /// Coordinate index of e'_i (1-based i).
    pub fn e_prime(&self, i: usize) -> usize {
        self.dim() - i
    }

    /// Coordinate index of e_0 (κ = 1 only).
    pub fn e0(&self) -> usize {
        assert_eq!(self.kappa, 1, "e_0 exists only in odd dimension");
        self.n
    }

    pub fn basis_vector(&self, idx: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[idx] = F::one();
        v
    }

    pub fn bilinear(&self, x: &[F], y: &[F]) -> F {
        let gy = self.gram.apply(y);
        x.iter().zip(gy).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    /// Q(x) = Σ x_i x'_i + x_0², or 0 in the symplectic case.
    pub fn quadratic(&self, x: &[F]) -> F {
        if self.kind == FormKind::Symplectic {
            return F::zero();
        }
        let nu = self.dim();
        let mut q = (0..self.n).fold(F::zero(), |acc, i| acc + x[i].clone() * x[nu - 1 - i].clone());
        if self.kappa == 1 {
            q = q + x[self.n].clone() * x[self.n].clone();
        }
        q
    }

    /// Gram and Q preserved on basis vectors, which suffices since the
    /// polar form of Q is (,).
    pub fn is_isometry(&self, g: &Matrix<F>) -> bool {
        let nu = self.dim();
        if g.rows() != nu || g.cols() != nu {
            return false;
        }
        let gt = g.transpose();
        if &(&gt * &self.gram) * g != self.gram {
            return false;
        }
        (0..nu).all(|i| self.quadratic(&g.col(i)) == self.quadratic(&self.basis_vector(i)))
    }

    /// {x : (x, S) = 0}.
    pub fn perp(&self, s: &Subspace<F>) -> Subspace<F> {
        let nu = self.dim();
        if s.dim() == 0 {
            return Subspace::whole(nu);
        }
        let gt = self.gram.transpose();
        let rows: Vec<Vec<F>> = s.basis().iter().map(|b| gt.apply(b)).collect();
        Subspace::span(nu, &Matrix::from_rows(&rows).kernel())
    }

    pub fn is_totally_isotropic(&self, s: &Subspace<F>) -> bool {
        let b = s.basis();
        b.iter().all(|x| self.quadratic(x).is_zero())
            && b.iter().all(|x| b.iter().all(|y| self.bilinear(x, y).is_zero()))
    }

    pub fn standard_flag(&self) -> Flag<F> {
        Flag::from_basis(Matrix::identity(self.dim()))
    }

    /// Q vanishes on V_i and V_i^⊥ = V_{ν-i} for i ≤ n.
    pub fn is_valid_flag(&self, f: &Flag<F>) -> bool {
        let nu = self.dim();
        if f.basis.rows() != nu || f.basis.cols() != nu || f.basis.rank() != nu {
            return false;
        }
        (0..=self.n).all(|i| {
            let vi = f.subspace(i);
            self.is_totally_isotropic(&vi) && self.perp(&vi) == f.subspace(nu - i)
        })
    }

    /// y_{s_h}(a) in the standard root subgroup of the opposite Borel.
    pub fn y(&self, h: usize, a: &F) -> Matrix<F> {
        let n = self.n;
        assert!((1..=n).contains(&h));
        let mut m = Matrix::identity(self.dim());
        if h < n {
            m[(self.e(h + 1), self.e(h))] = a.clone();
            m[(self.e_prime(h), self.e_prime(h + 1))] = -a.clone();
            return m;
        }
        match (self.kind, self.kappa) {
            (FormKind::Symplectic, _) => m[(self.e_prime(n), self.e(n))] = -a.clone(),
            (FormKind::Orthogonal, 1) => {
                let (en, e0, epn) = (self.e(n), self.e0(), self.e_prime(n));
                m[(e0, en)] = a.clone();
                m[(epn, en)] = -(a.clone() * a.clone());
                m[(epn, e0)] = -(F::from_i64(2) * a.clone());
            }
            _ => panic!("no root subgroup for s_n in even orthogonal type"),
        }
        m
    }

    /// Signed permutation lift of s_h normalising the diagonal torus.
    pub fn sdot(&self, h: usize) -> Matrix<F> {
        let n = self.n;
        assert!((1..=n).contains(&h));
        let nu = self.dim();
        let mut m = Matrix::zeros(nu, nu);
        let mut set = |to: usize, from: usize, v: F| m[(to, from)] = v;
        let mut moved = vec![false; nu];
        if h < n {
            for (a, b) in [(self.e(h), self.e(h + 1)), (self.e_prime(h), self.e_prime(h + 1))] {
                set(b, a, F::one());
                set(a, b, F::one());
                moved[a] = true;
                moved[b] = true;
            }
        } else {
            let (en, epn) = (self.e(n), self.e_prime(n));
            match (self.kind, self.kappa) {
                (FormKind::Symplectic, _) => {
                    set(epn, en, -F::one());
                    set(en, epn, F::one());
                }
                (FormKind::Orthogonal, 1) => {
                    set(epn, en, F::one());
                    set(en, epn, F::one());
                    set(self.e0(), self.e0(), -F::one());
                    moved[self.e0()] = true;
                }
                _ => panic!("s_n is not in the even orthogonal group"),
            }
            moved[en] = true;
            moved[epn] = true;
        }
        for (i, _) in moved.iter().enumerate().filter(|(_, &mv)| !mv) {
            m[(i, i)] = F::one();
        }
        m
    }

    /// The product over blocks of ṡ_1…ṡ_q y_{s_{q+1}}(c_k) ṡ_q⁻¹…ṡ_1⁻¹.
    pub fn build_u_w(&self, dec: &ExcellentDecomposition, c: &[F]) -> Result<Matrix<F>> {
        if c.len() != dec.blocks.len() {
            return Err(Error::Precondition(format!("{} constants for {} blocks", c.len(), dec.blocks.len())));
        }
        if c.iter().any(F::is_zero) {
            return Err(Error::Precondition("the constants c_k must be nonzero".into()));
        }
        let mut u = Matrix::identity(self.dim());
        for ((left, mid), ck) in dec.halves().into_iter().zip(c) {
            let mut conj = Matrix::identity(self.dim());
            for &s in left {
                conj = &conj * &self.sdot(s);
            }
            let inv = conj.inverse().expect("signed permutation");
            u = &u * &(&(&conj * &self.y(mid, ck)) * &inv);
        }
        Ok(u)
    }

    /// u_w for w = w_{p*}⁻¹ from the one-palindrome-per-part decomposition.
    /// Symplectic spaces use the type C word, odd orthogonal ones type B.
    pub fn u_w(&self, p: &Partition, c: &[F]) -> Result<Matrix<F>> {
        if p.size() as usize != self.n {
            return Err(Error::Precondition(format!("{p} is not a partition of {}", self.n)));
        }
        let ty = match (self.kind, self.kappa) {
            (FormKind::Symplectic, _) => ClassicalType::C,
            (FormKind::Orthogonal, 1) => ClassicalType::B,
            _ => return Err(Error::Unsupported("u_w in even orthogonal type: use so_even_restriction".into())),
        };
        let dec = excellent_decomposition(p, ty, Variant::A)?;
        self.build_u_w(&dec, c)
    }

    /// The product of explicit per-part maps, which equals u_w⁻¹ for
    /// one choice of constants. Used as an independent oracle.
    pub fn u_w_inverse_oracle(&self, p: &Partition) -> Result<Matrix<F>> {
        if p.size() as usize != self.n {
            return Err(Error::Precondition(format!("{p} is not a partition of {}", self.n)));
        }
        if self.kind == FormKind::Orthogonal && self.kappa == 0 {
            return Err(Error::Unsupported("no closed formula in even orthogonal type".into()));
        }
        let nu = self.dim();
        let mut total = Matrix::<F>::identity(nu);
        let mut end = 0;
        let mut factors = Vec::new();
        for &ph in p.parts() {
            let ph = ph as usize;
            end += ph;
            let (m, b) = (end, end - ph + 1);
            let mut f = Matrix::<F>::identity(nu);
            let sign = |v: usize| F::from_i64(if v.is_multiple_of(2) { 1 } else { -1 });
            for v in 1..=ph {
                f[(self.e_prime(m - v + 1), self.e(m))] = f[(self.e_prime(m - v + 1), self.e(m))].clone() + sign(v);
            }
            if self.kappa == 1 {
                f[(self.e0(), self.e(m))] = F::one();
                for v in 1..=ph {
                    f[(self.e_prime(m - v + 1), self.e0())] = F::from_i64(2) * sign(v);
                }
            }
            for i in b..m {
                f[(self.e(i + 1), self.e(i))] = F::one();
            }
            for k in 0..ph.saturating_sub(1) {
                for v in 1..ph - k {
                    f[(self.e_prime(m - k - v), self.e_prime(m - k))] = sign(v);
                }
            }
            factors.push(f);
        }
        for f in &factors {
            total = &total * f;
        }
        Ok(total)
    }
}

/// Full flag V_0 ⊂ … ⊂ V_ν; V_i is spanned by the first i columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag<F: Field> {
    basis: Matrix<F>,
}

impl<F: Field> Flag<F> {
    pub fn from_basis(basis: Matrix<F>) -> Self {
        Flag { basis }
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn subspace(&self, i: usize) -> Subspace<F> {
        let cols: Vec<Vec<F>> = (0..i).map(|j| self.basis.col(j)).collect();
        Subspace::span(self.basis.rows(), &cols)
    }

    pub fn transform(&self, g: &Matrix<F>) -> Self {
        Flag { basis: g * &self.basis }
    }
}

/// a_{V*,V'*}: i ↦ a_i where a_i is the unique j entering
/// {j : V'_i ∩ V_j ≠ V'_i ∩ V_{j-1}} at step i.
///
/// Computed by expressing V'* in a basis adapted to V* and reducing
/// columns so that their lowest nonzero rows are distinct.
pub fn rel_position<F: Field>(v: &Flag<F>, v_prime: &Flag<F>) -> Result<Perm> {
    let nu = v.dim();
    if v_prime.dim() != nu {
        return Err(Error::Mismatch("flags live in different spaces".into()));
    }
    let inv = v.basis.inverse().ok_or_else(|| Error::Precondition("flag basis is singular".into()))?;
    let m = &inv * &v_prime.basis;
    let mut reduced: Vec<(usize, Vec<F>)> = Vec::with_capacity(nu);
    let mut image = vec![0u8; nu];
    for i in 0..nu {
        let mut col = m.col(i);
        loop {
            let low = (0..nu).rev().find(|&r| !col[r].is_zero()).ok_or_else(|| Error::Precondition("flag basis is singular".into()))?;
            match reduced.iter().find(|(l, _)| *l == low) {
                Some((_, prev)) => {
                    let f = col[low].div(&prev[low]).expect("pivot is nonzero");
                    for (x, y) in col.iter_mut().zip(prev) {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
                None => {
                    image[i] = low as u8;
                    reduced.push((low, col));
                    break;
                }
            }
        }
    }
    Ok(Perm(image))
}

/// Same permutation from the definition: dimensions of V'_i ∩ V_j.
pub fn rel_position_by_dimensions<F: Field>(v: &Flag<F>, v_prime: &Flag<F>) -> Perm {
    let nu = v.dim();
    let vs: Vec<Subspace<F>> = (0..=nu).map(|j| v.subspace(j)).collect();
    let d = |i: usize, j: usize| -> bool {
        let vp = v_prime.subspace(i);
        vp.intersect(&vs[j]).dim() > vp.intersect(&vs[j - 1]).dim()
    };
    let mut image = vec![0u8; nu];
    for i in 1..=nu {
        let a = (1..=nu).find(|&j| d(i, j) && !d(i - 1, j)).expect("X_i grows by one element");
        image[i - 1] = (a - 1) as u8;
    }
    Perm(image)
}

/// Jordan block sizes of a unipotent matrix, from dim ker (M-1)^k.
pub fn jordan_type<F: Field>(m: &Matrix<F>) -> Result<Partition> {
    let nu = m.rows();
    let nmat = m.sub(&Matrix::identity(nu));
    let mut kernel_dims = vec![0usize];
    let mut pw = Matrix::identity(nu);
    for _ in 0..nu {
        pw = &pw * &nmat;
        kernel_dims.push(nu - pw.rank());
        if *kernel_dims.last().unwrap() == nu {
            break;
        }
    }
    if *kernel_dims.last().unwrap() != nu {
        return Err(Error::Precondition("matrix is not unipotent".into()));
    }
    // number of blocks of size ≥ k is dim ker N^k - dim ker N^{k-1}
    let at_least: Vec<usize> = kernel_dims.windows(2).map(|w| w[1] - w[0]).collect();
    let mut parts = Vec::new();
    for k in 1..=at_least.len() {
        let next = at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k as u32, at_least[k - 1] - next));
    }
    Ok(Partition::from_unsorted(parts))
}

/// Jordan type together with, in characteristic 2, the form flags: for each
/// even block size j, whether ((g-1)^{j-1}x, x) ≠ 0 for some x ∈ ker (g-1)^j.
pub fn unipotent_label<F: Field>(space: &FormedSpace<F>, g: &Matrix<F>) -> Result<UnipotentLabel> {
    let jt = jordan_type(g)?;
    if F::characteristic() != 2 {
        return Ok(UnipotentLabel::jordan(jt));
    }
    let nu = space.dim();
    let nmat = g.sub(&Matrix::identity(nu));
    let mut flags = std::collections::BTreeMap::new();
    let mut sizes: Vec<u32> = jt.parts().iter().copied().filter(|j| j % 2 == 0).collect();
    sizes.dedup();
    for j in sizes {
        let kern = nmat.pow(j as u64).kernel();
        let nj1 = nmat.pow(j as u64 - 1);
        // the map x ↦ (N^{j-1}x, x) is a quadratic form on ker N^j; it is
        // nonzero iff it is nonzero on a basis vector or on a sum of two
        let val = |x: &[F]| space.bilinear(&nj1.apply(x), x);
        let mut hit = kern.iter().any(|x| !val(x).is_zero());
        if !hit {
            'outer: for (a, x) in kern.iter().enumerate() {
                for y in &kern[a + 1..] {
                    let s: Vec<F> = x.iter().zip(y).map(|(p, q)| p.clone() + q.clone()).collect();
                    if !val(&s).is_zero() {
                        hit = true;
                        break 'outer;
                    }
                }
            }
        }
        flags.insert(j, Some(hit));
    }
    Ok(UnipotentLabel::Jordan { parts: jt, flags })
}

/// Expected Jordan type of u_w: 2p_i in the symplectic case and in odd
/// orthogonal characteristic 2 (plus a trailing 1), 2p_i + ψ(i) in odd
/// orthogonal odd characteristic (plus 1 when σ is even).
pub fn predicted_jordan_type(p: &Partition, kind: FormKind, kappa: usize, ch: u32) -> Partition {
    let psi = crate::partition::psi(p);
    let mut parts: Vec<u32> = match (kind, ch) {
        (FormKind::Orthogonal, c) if c != 2 => {
            (1..=p.len()).map(|i| (2 * p.part(i) as i64 + psi.get(i) as i64) as u32).collect()
        }
        _ => p.parts().iter().map(|x| 2 * x).collect(),
    };
    if kappa == 1 && (ch == 2 || p.is_even_length()) {
        parts.push(1);
    }
    Partition::from_unsorted(parts)
}

/// Restriction of u_w to a 2n-dimensional nondegenerate subspace U of the
/// odd orthogonal space of rank n, for p with an even number of parts.
///
/// U is the unique u_w-stable hyperplane containing e_1, …, e_n and not e_0.
/// In odd characteristic it is Ξ^⊥. In characteristic 2 the span of the
/// e_i, e'_i is not u_w-stable (y_{s_n} always adds a multiple of e_0), so
/// the stable hyperplane is the right replacement; it still contains the
/// standard isotropic flag.
#[derive(Clone, Debug)]
pub struct EvenRestriction<F: Field> {
    pub u: Subspace<F>,
    /// u_w restricted to U, in the basis `u_basis`.
    pub matrix: Matrix<F>,
    pub u_basis: Vec<Vec<F>>,
    pub jordan: Partition,
    /// Ξ when the characteristic is odd.
    pub xi: Option<Vec<F>>,
}

/// u_w is built with the constants for which u_w⁻¹ equals the closed-form
/// product, so that the explicit vector Ξ is fixed by u_w.
pub fn so_even_restriction<F: Field>(p: &Partition) -> Result<EvenRestriction<F>> {
    if !p.is_even_length() {
        return Err(Error::Precondition(format!("{p} has an odd number of parts")));
    }
    let n = p.size() as usize;
    let space = FormedSpace::<F>::orthogonal(n, 1);
    let c = vec![-F::one(); n];
    let u = space.u_w(p, &c)?;
    let nu = space.dim();
    // U = ker ℓ with ℓ∘(u_w - 1) = 0, ℓ(e_i) = 0 for i ≤ n and ℓ(e_0) = 1
    let nmat = u.sub(&Matrix::identity(nu));
    let mut rows: Vec<Vec<F>> = nmat.columns().into_iter().map(|mut c| {
        c.push(F::zero());
        c
    }).collect();
    for i in 1..=n {
        let mut r = space.basis_vector(space.e(i));
        r.push(F::zero());
        rows.push(r);
    }
    let mut r = space.basis_vector(space.e0());
    r.push(-F::one());
    rows.push(r);
    let sols = Matrix::from_rows(&rows).kernel();
    let ell: Vec<F> = match sols.as_slice() {
        [s] if !s[nu].is_zero() => {
            let t = s[nu].inv().expect("nonzero");
            s[..nu].iter().map(|x| x.clone() * t.clone()).collect()
        }
        _ => return Err(Error::Internal("no unique u_w-stable complement of e_0".into())),
    };
    let sub = Subspace::span(nu, &Matrix::from_rows(&[ell]).kernel());
    let xi = if F::characteristic() == 2 {
        None
    } else {
        let mut xi = space.basis_vector(space.e0());
        let mut end = 0;
        for x in 1..=p.len() {
            end += p.part(x) as usize;
            xi[space.e(end)] = F::from_i64(if x % 2 == 0 { -2 } else { 2 });
        }
        if u.apply(&xi) != xi || !space.quadratic(&xi).is_one() {
            return Err(Error::Internal("Ξ is not a u_w-fixed vector with Q(Ξ) = 1".into()));
        }
        if space.perp(&Subspace::span(nu, std::slice::from_ref(&xi))) != sub {
            return Err(Error::Internal("stable complement differs from Ξ^⊥".into()));
        }
        Some(xi)
    };
    if sub.dim() != 2 * n || sub.image(&u) != sub {
        return Err(Error::Internal("U is not a u_w-stable hyperplane".into()));
    }
    let u_basis = sub.basis().to_vec();
    let gram = Matrix::from_fn(2 * n, 2 * n, |i, j| space.bilinear(&u_basis[i], &u_basis[j]));
    if gram.rank() != 2 * n {
        return Err(Error::Internal("form is degenerate on U".into()));
    }
    // coordinates of u·b_j in the basis of U
    let bmat = Matrix::from_cols(nu, &u_basis);
    let cols: Vec<Vec<F>> = u_basis
        .iter()
        .map(|b| {
            let img = u.apply(b);
            let aug = bmat.hstack(&Matrix::from_cols(nu, &[img]));
            let (r, piv) = aug.rref();
            debug_assert!(piv.len() == 2 * n);
            (0..2 * n).map(|k| r[(k, 2 * n)].clone()).collect()
        })
        .collect();
    let matrix = Matrix::from_cols(2 * n, &cols);
    let jordan = jordan_type(&matrix)?;
    Ok(EvenRestriction { u: sub, matrix, u_basis, jordan, xi })
}

/// (2p_i + ψ(i)) in odd characteristic, (2p_i) in characteristic 2.
pub fn predicted_even_restriction(p: &Partition, ch: u32) -> Partition {
    let psi = crate::partition::psi(p);
    Partition::from_unsorted(
        (1..=p.len())
            .map(|i| if ch == 2 { 2 * p.part(i) } else { (2 * p.part(i) as i64 + psi.get(i) as i64) as u32 })
            .collect(),
    )
}

/// w_{p*} as an element of the permutation group of [1, ν].
pub fn w_p(p: &Partition, kappa: usize) -> Perm {
    w_from_partition(p, kappa as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F2, F3};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generators_are_isometries() {
        let sp = FormedSpace::<Rational>::symplectic(3);
        let so = FormedSpace::<Rational>::orthogonal(3, 1);
        for s in [&sp, &so] {
            for h in 1..=3 {
                for a in [-2, 1, 5] {
                    assert!(s.is_isometry(&s.y(h, &Rational::from_i64(a))), "y {h}");
                }
                assert!(s.is_isometry(&s.sdot(h)), "sdot {h}");
            }
            assert!(s.y(1, &Rational::from_i64(0)).is_identity());
            assert!(s.is_valid_flag(&s.standard_flag()));
        }
        let so2 = FormedSpace::<F2>::orthogonal(2, 1);
        assert!(so2.is_isometry(&so2.y(2, &F2::new(1))));
    }

    #[test]
    fn sdot_has_the_position_of_s_h() {
        let sp = FormedSpace::<Rational>::symplectic(2);
        let std = sp.standard_flag();
        assert!(rel_position(&std, &std).unwrap() == Perm::identity(4));
        for h in 1..=2 {
            let w = rel_position(&std, &std.transform(&sp.sdot(h))).unwrap();
            let expected = if h == 1 {
                Perm::from_one_based(&[2, 1, 4, 3]).unwrap()
            } else {
                Perm::from_one_based(&[1, 3, 2, 4]).unwrap()
            };
            assert_eq!(w, expected);
        }
    }

    #[test]
    fn jordan_type_basics() {
        assert_eq!(jordan_type(&Matrix::<Rational>::identity(5)).unwrap().parts(), &[1, 1, 1, 1, 1]);
        let j = Matrix::<Rational>::from_fn(4, 4, |i, k| Rational::from_i64((i == k || k == i + 1) as i64));
        assert_eq!(jordan_type(&j).unwrap().parts(), &[4]);
        assert!(jordan_type(&Matrix::<Rational>::identity(2).scale(&Rational::from_i64(2))).is_err());
    }

    #[test]
    fn small_u_w_examples() {
        let sp = FormedSpace::<Rational>::symplectic(2);
        let one = Rational::from_i64(1);
        assert_eq!(jordan_type(&sp.u_w(&p(&[2]), &[one.clone(), one.clone()]).unwrap()).unwrap().parts(), &[4]);
        let dec = excellent_decomposition(&p(&[1, 1]), ClassicalType::C, Variant::A).unwrap();
        let c = vec![one.clone(); dec.blocks.len()];
        assert_eq!(jordan_type(&sp.u_w(&p(&[1, 1]), &c).unwrap()).unwrap().parts(), &[2, 2]);

        let so = FormedSpace::<F2>::orthogonal(3, 1);
        let dec = excellent_decomposition(&p(&[2, 1]), ClassicalType::B, Variant::A).unwrap();
        let u = so.u_w(&p(&[2, 1]), &vec![F2::new(1); dec.blocks.len()]).unwrap();
        assert_eq!(jordan_type(&u).unwrap().parts(), &[4, 2, 1]);
        let soq = FormedSpace::<Rational>::orthogonal(3, 1);
        let u = soq.u_w(&p(&[2, 1]), &vec![one; dec.blocks.len()]).unwrap();
        assert_eq!(jordan_type(&u).unwrap().parts(), &[5, 1, 1]);
    }

    #[test]
    fn even_restrictions() {
        assert_eq!(so_even_restriction::<Rational>(&p(&[2, 2])).unwrap().jordan.parts(), &[5, 3]);
        assert_eq!(so_even_restriction::<Rational>(&p(&[1, 1])).unwrap().jordan.parts(), &[3, 1]);
        assert_eq!(so_even_restriction::<F2>(&p(&[2, 2])).unwrap().jordan.parts(), &[4, 4]);
        assert_eq!(so_even_restriction::<F3>(&p(&[2, 2])).unwrap().jordan.parts(), &[5, 3]);
        assert!(so_even_restriction::<Rational>(&p(&[2, 1, 1])).is_err());
    }
}
