//! The adapted basis v_1, …, v_σ (and v_{σ+1} when κ = 1) attached to an
//! isometry g moving a flag V* into relative position w_{p*}, and the rank
//! bounds on powers of g - 1 that it implies.

use serde::Serialize;

use super::{jordan_type, rel_position, w_p, Flag, FormKind, FormedSpace};
use crate::error::{Error, Result};
use crate::field::{Field, Gauss};
use crate::matrix::{Matrix, Subspace};
use crate::partition::{psi_extended, Partition};

#[derive(Clone, Debug)]
pub struct CanonicalBasis<F> {
    pub p: Partition,
    pub v: Vec<Vec<F>>,
    /// v_{σ+1}, odd dimension only.
    pub extra: Option<Vec<F>>,
    /// Clause name and verdict, in order (i) … (vi).
    pub clauses: Vec<(String, bool)>,
}

impl<F> CanonicalBasis<F> {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|(_, ok)| *ok)
    }
}

struct Powers<F> {
    g: Matrix<F>,
    ginv: Matrix<F>,
}

impl<F: Field> Powers<F> {
    fn apply(&self, j: i64, v: &[F]) -> Vec<F> {
        let m = if j >= 0 { &self.g } else { &self.ginv };
        (0..j.unsigned_abs()).fold(v.to_vec(), |acc, _| m.apply(&acc))
    }
}

fn scale<F: Field>(v: &[F], c: &F) -> Vec<F> {
    v.iter().map(|x| x.clone() * c.clone()).collect()
}

fn one_line<F: Field>(s: &Subspace<F>, what: &str) -> Result<Vec<F>> {
    if s.dim() != 1 {
        return Err(Error::Precondition(format!("{what} has dimension {} instead of 1", s.dim())));
    }
    Ok(s.basis()[0].clone())
}

/// Builds v_1, …, v_σ inductively: v_u spans V_{p_{<u}+1} ∩ E_{u-1}^⊥ and
/// is scaled so that (v_u, g^{p_u} v_u) = 1. Fails with `Unsupported` when
/// that scaling needs a square root the field does not have.
pub fn canonical_basis<F: Field>(space: &FormedSpace<F>, g: &Matrix<F>, flag: &Flag<F>, p: &Partition) -> Result<CanonicalBasis<F>> {
    let nu = space.dim();
    let kappa = space.kappa();
    if p.size() as usize != space.n() {
        return Err(Error::Precondition(format!("{p} is not a partition of {}", space.n())));
    }
    let target = w_p(p, kappa);
    let g_flag = flag.transform(g);
    if rel_position(flag, &g_flag)? != target {
        return Err(Error::Precondition(format!("(V*, gV*) is not in position w_{p}")));
    }
    let pw = Powers { g: g.clone(), ginv: g.inverse().ok_or_else(|| Error::Precondition("g is singular".into()))? };
    let parts: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
    let mut v: Vec<Vec<F>> = Vec::new();
    let mut e_vectors: Vec<Vec<F>> = Vec::new();
    let mut before = 0usize;
    for (u, &pu) in parts.iter().enumerate() {
        let e_perp = space.perp(&Subspace::span(nu, &e_vectors));
        let line = flag.subspace(before + 1).intersect(&e_perp);
        let raw = one_line(&line, &format!("V_{} ∩ E_{}^⊥", before + 1, u))?;
        let c = space.bilinear(&raw, &pw.apply(pu, &raw));
        let lambda = c
            .inv()
            .and_then(|ci| ci.sqrt())
            .ok_or_else(|| Error::Unsupported(format!("scaling v_{} needs a square root of 1/{c}", u + 1)))?;
        let vu = scale(&raw, &lambda);
        e_vectors.extend((0..pu).map(|i| pw.apply(-pu + i, &vu)));
        v.push(vu);
        before += pu as usize;
    }
    let extra = if kappa == 1 {
        let e_perp = space.perp(&Subspace::span(nu, &e_vectors));
        let raw = one_line(&flag.subspace(before + 1).intersect(&e_perp), "V_{n+1} ∩ E_σ^⊥")?;
        let q = space.quadratic(&raw);
        let lambda =
            q.inv().and_then(|qi| qi.sqrt()).ok_or_else(|| Error::Unsupported(format!("scaling v_{{σ+1}} needs a square root of 1/{q}")))?;
        Some(scale(&raw, &lambda))
    } else {
        None
    };
    let clauses = check_clauses(space, &pw, flag, &parts, &v, extra.as_deref());
    Ok(CanonicalBasis { p: p.clone(), v, extra, clauses })
}

fn independent<F: Field>(vs: &[Vec<F>]) -> bool {
    vs.is_empty() || Matrix::from_rows(vs).rank() == vs.len()
}

fn check_clauses<F: Field>(
    space: &FormedSpace<F>,
    pw: &Powers<F>,
    flag: &Flag<F>,
    parts: &[i64],
    v: &[Vec<F>],
    extra: Option<&[F]>,
) -> Vec<(String, bool)> {
    let nu = space.dim();
    let s = parts.len();
    let b = |x: &[F], y: &[F]| space.bilinear(x, y);
    let orbit = |t: usize, lo: i64, hi: i64| -> Vec<Vec<F>> { (lo..=hi).map(|j| pw.apply(j, &v[t])).collect() };

    let mut spans_ok = true;
    let mut prefix: Vec<Vec<F>> = Vec::new();
    let mut before = 0usize;
    for r in 0..s {
        for i in 0..=parts[r] {
            let mut gens = prefix.clone();
            gens.extend(orbit(r, 0, i - 1));
            spans_ok &= Subspace::span(nu, &gens) == flag.subspace(before + i as usize);
        }
        prefix.extend(orbit(r, 0, parts[r] - 1));
        before += parts[r] as usize;
    }

    let orth_ok = (0..s).all(|r| (0..r).all(|t| orbit(t, -parts[t], parts[t] - 1).iter().all(|x| b(x, &v[r]).is_zero())));

    let norm_ok = (0..s).all(|r| {
        let pr = parts[r];
        (-pr + 1..pr).all(|i| b(&v[r], &pw.apply(i, &v[r])).is_zero())
            && space.quadratic(&v[r]).is_zero()
            && b(&v[r], &pw.apply(pr, &v[r])).is_one()
    });

    let long: Vec<Vec<F>> = (0..s).flat_map(|t| orbit(t, -parts[t], parts[t] - 1)).collect();
    let mut indep_ok = true;
    let mut complement_ok = true;
    let mut count = 0usize;
    let mut e_r: Vec<Vec<F>> = Vec::new();
    let mut before = 0usize;
    for r in 0..s {
        count += 2 * parts[r] as usize;
        indep_ok &= independent(&long[..count]);
        e_r.extend(orbit(r, -parts[r], -1));
        before += parts[r] as usize;
        let perp = space.perp(&Subspace::span(nu, &e_r));
        let vr = flag.subspace(before);
        complement_ok &= vr.dim() + perp.dim() == nu && vr.intersect(&perp).dim() == 0;
    }

    let mut out = vec![
        ("(i) flag spanned by g-strings".to_string(), spans_ok),
        ("(ii) orthogonality across strings".to_string(), orth_ok),
        ("(iii) isotropy and normalisation".to_string(), norm_ok),
        ("(iv) long strings independent".to_string(), indep_ok),
        ("(v) V = V_{p≤r} ⊕ E_r^⊥".to_string(), complement_ok),
    ];
    let mut basis = long.clone();
    if let Some(x) = extra {
        let orth = (0..s).all(|t| orbit(t, -parts[t], parts[t] - 1).iter().all(|y| b(y, x).is_zero()));
        out.push(("(ii') v_{σ+1} orthogonal to the strings".to_string(), orth));
        out.push(("(iii') Q(v_{σ+1}) = 1".to_string(), space.quadratic(x).is_one()));
        basis.push(x.to_vec());
    }
    out.push(("(vi) basis of V".to_string(), basis.len() == nu && independent(&basis)));
    out
}

/// dim N^k V against Λ_k, Λ'_k and the Jordan type of g.
#[derive(Clone, Debug, Serialize)]
pub struct LambdaReport {
    pub p: Partition,
    pub kappa: usize,
    pub dims: Vec<usize>,
    pub lambda: Vec<usize>,
    /// Present when the refined bound applies (odd characteristic, Q ≠ 0).
    pub lambda_prime: Option<Vec<usize>>,
    pub jordan: Partition,
    /// Every k has dim N^k V = Λ_k.
    pub tight: bool,
    /// The string lengths (2p_1, …, 2p_σ, κ) are dominated by the Jordan type.
    pub spanning_dominated: bool,
    pub holds: bool,
}

/// 2p_r for r ≤ σ, κ for r = σ+1.
fn doubled(p: &Partition, kappa: usize) -> Vec<usize> {
    let mut v: Vec<usize> = p.parts().iter().map(|&x| 2 * x as usize).collect();
    v.push(kappa);
    v
}

pub fn lambda(p: &Partition, kappa: usize, k: usize) -> usize {
    doubled(p, kappa).iter().map(|&x| x.saturating_sub(k)).sum()
}

pub fn lambda_prime(p: &Partition, kappa: usize, k: usize) -> usize {
    let d2 = doubled(p, kappa);
    let bump = k > 0 && (1..=p.len()).step_by(2).any(|d| d2[d] <= k && k <= d2[d - 1]);
    lambda(p, kappa, k) + bump as usize
}

pub fn lambda_double_prime(p: &Partition, kappa: usize, k: usize) -> usize {
    let d2 = doubled(p, kappa);
    (1..=p.len() + 1).map(|r| ((d2[r - 1] as i64 + psi_extended(p, kappa as u32, r) as i64 - k as i64).max(0)) as usize).sum()
}

/// Λ''_k = Λ'_k for 0 ≤ k ≤ kmax; `None` when p violates the standing
/// hypothesis (κ = 0 forces an even number of parts).
pub fn lambda_pure_identity(p: &Partition, kappa: usize, kmax: usize) -> Option<bool> {
    if kappa == 0 && !p.is_even_length() {
        return None;
    }
    Some((0..=kmax).all(|k| lambda_double_prime(p, kappa, k) == lambda_prime(p, kappa, k)))
}

pub fn lambda_bounds_check<F: Field>(space: &FormedSpace<F>, g: &Matrix<F>, p: &Partition) -> Result<LambdaReport> {
    let nu = space.dim();
    let kappa = space.kappa();
    let jordan = jordan_type(g)?;
    let nmat = g.sub(&Matrix::identity(nu));
    let mut dims = Vec::with_capacity(nu + 1);
    let mut pw = Matrix::identity(nu);
    for _ in 0..=nu {
        dims.push(pw.rank());
        pw = &pw * &nmat;
    }
    let lam: Vec<usize> = (0..=nu).map(|k| lambda(p, kappa, k)).collect();
    let refined = F::characteristic() != 2 && space.kind() == FormKind::Orthogonal;
    let lam_p = refined.then(|| (0..=nu).map(|k| lambda_prime(p, kappa, k)).collect::<Vec<_>>());
    let mut holds = dims[0] == nu && lam[0] == nu && dims.iter().zip(&lam).all(|(d, l)| d >= l);
    if let Some(lp) = &lam_p {
        holds &= dims.iter().zip(lp).all(|(d, l)| d >= l);
    }
    let m = Partition::from_unsorted(doubled(p, kappa).into_iter().filter(|&x| x > 0).map(|x| x as u32).collect());
    let spanning_dominated = crate::partition::dominance_leq(&m, &jordan)?;
    let tight = dims == lam;
    Ok(LambdaReport { p: p.clone(), kappa, dims, lambda: lam, lambda_prime: lam_p, jordan, tight, spanning_dominated, holds: holds && spanning_dominated })
}

/// Under dim N^k V = Λ_k for all k, the strings X_r are g-stable and
/// mutually orthogonal.
pub fn string_decomposition_holds<F: Field>(space: &FormedSpace<F>, g: &Matrix<F>, cb: &CanonicalBasis<F>) -> Result<bool> {
    let nu = space.dim();
    let ginv = g.inverse().ok_or_else(|| Error::Precondition("g is singular".into()))?;
    let pw = Powers { g: g.clone(), ginv };
    let mut xs: Vec<Subspace<F>> = cb
        .v
        .iter()
        .zip(cb.p.parts())
        .map(|(v, &pr)| {
            let pr = pr as i64;
            let vecs: Vec<Vec<F>> = (-pr..pr).map(|j| pw.apply(j, v)).collect();
            Subspace::span(nu, &vecs)
        })
        .collect();
    if let Some(x) = &cb.extra {
        xs.push(Subspace::span(nu, std::slice::from_ref(x)));
    }
    let stable = xs.iter().all(|x| x.image(g) == *x);
    let orth = xs.iter().enumerate().all(|(i, a)| {
        xs.iter().skip(i + 1).all(|b| a.basis().iter().all(|x| b.basis().iter().all(|y| space.bilinear(x, y).is_zero())))
    });
    Ok(stable && orth)
}

/// Outcome of building and checking the adapted basis.
#[derive(Clone, Debug, Serialize)]
pub struct CanonicalCheck {
    /// The scaling needed √-1, so the basis lives over F(√-1).
    pub extended: bool,
    pub clauses: Vec<(String, bool)>,
    /// Strings g-stable and pairwise orthogonal; only asked when every
    /// dim N^k V equals Λ_k.
    pub string_decomposition: Option<bool>,
}

impl CanonicalCheck {
    pub fn holds(&self) -> bool {
        self.clauses.iter().all(|(_, ok)| *ok) && self.string_decomposition != Some(false)
    }
}

fn check_in<F: Field>(space: &FormedSpace<F>, g: &Matrix<F>, flag: &Flag<F>, p: &Partition, extended: bool) -> Result<CanonicalCheck> {
    let cb = canonical_basis(space, g, flag, p)?;
    let unipotent = jordan_type(g).is_ok();
    let tight = unipotent && lambda_bounds_check(space, g, p)?.tight;
    let string_decomposition = if tight { Some(string_decomposition_holds(space, g, &cb)?) } else { None };
    Ok(CanonicalCheck { extended, clauses: cb.clauses, string_decomposition })
}

/// Runs `canonical_basis` over F, or over F(√-1) when the normalisation
/// needs a square root that F lacks. The construction itself is over an
/// algebraically closed field, so either outcome is a faithful check.
pub fn check_canonical_basis<F: Field>(space: &FormedSpace<F>, g: &Matrix<F>, flag: &Flag<F>, p: &Partition) -> Result<CanonicalCheck> {
    match check_in(space, g, flag, p, false) {
        Err(Error::Unsupported(_)) => {
            let up = |m: &Matrix<F>| m.map(|x| Gauss::<F>::embed(x.clone()));
            let big = space.lift::<Gauss<F>>();
            check_in(&big, &up(g), &Flag::from_basis(up(flag.basis())), p, true)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lambda_zero_is_dimension() {
        for n in 1..=6u32 {
            for q in Partition::all(n) {
                for kappa in 0..=1 {
                    assert_eq!(lambda(&q, kappa, 0), 2 * n as usize + kappa);
                    assert_eq!(lambda_prime(&q, kappa, 0), 2 * n as usize + kappa);
                }
            }
        }
    }

    #[test]
    fn lambda_identity_small() {
        assert_eq!(lambda_pure_identity(&p(&[2, 1]), 1, 8), Some(true));
        assert_eq!(lambda_pure_identity(&p(&[2, 1, 1]), 0, 8), None);
        assert_eq!(lambda_pure_identity(&p(&[3, 1]), 0, 10), Some(true));
    }
}
