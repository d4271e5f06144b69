//! Integer polynomials, characteristic polynomials and cyclotomic factorization.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::matrix::Matrix;

/// Integer polynomial, coefficients from the constant term upwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        IntPoly(coeffs)
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    /// x^k - 1 (sign = -1) or x^k + 1 (sign = +1).
    pub fn binomial(k: usize, sign: i64) -> Self {
        let mut c = vec![0; k + 1];
        c[0] = sign;
        c[k] = 1;
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut c = vec![0; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    /// Quotient when `d` (monic) divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(d.0.last(), Some(&1), "divisor must be monic");
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.0.clone();
        let dd = d.degree();
        let mut q = vec![0; self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd];
            q[k] = c;
            for (j, &dc) in d.0.iter().enumerate() {
                rem[k + j] -= c * dc;
            }
        }
        rem.iter().all(|&r| r == 0).then(|| IntPoly::new(q))
    }
}

/// The d-th cyclotomic polynomial.
pub fn cyclotomic(d: u32) -> IntPoly {
    let mut p = IntPoly::binomial(d as usize, -1);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        p = p.div_exact(&cyclotomic(e)).expect("cyclotomic divisibility");
    }
    p
}

pub fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|k| num_integer::gcd(*k, d) == 1).count() as u32
}

/// Characteristic polynomial det(xI - A) of an integer matrix.
pub fn char_poly(a: &Matrix<i64>) -> IntPoly {
    let n = a.rows();
    let q: Matrix<Rational> = Matrix::from_fn(n, n, |i, j| Rational::from_i64(a[(i, j)]));
    // Faddeev-LeVerrier over the rationals
    let mut coeffs = vec![<Rational as Field>::one(); n + 1];
    let mut m = Matrix::<Rational>::identity(n);
    for k in 1..=n {
        let am = &q * &m;
        let tr = (0..n).fold(<Rational as Field>::zero(), |acc, i| acc + am[(i, i)].clone());
        let c = -tr * BigRational::new(BigInt::from(1), BigInt::from(k as i64));
        coeffs[n - k] = c.clone();
        m = am.add(&Matrix::identity(n).scale(&c));
    }
    IntPoly::new(
        coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "integer matrix has integer characteristic polynomial");
                c.to_integer().to_i64().expect("small coefficients")
            })
            .collect(),
    )
}

/// Multiset of cyclotomic factors: index d ↦ multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclotomicSignature(pub BTreeMap<u32, u32>);

impl CyclotomicSignature {
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut m = BTreeMap::new();
        for &(d, k) in pairs {
            *m.entry(d).or_insert(0) += k;
        }
        CyclotomicSignature(m)
    }

    pub fn multiplicity(&self, d: u32) -> u32 {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(&d, &k)| euler_phi(d) * k).sum()
    }

    pub fn has_eigenvalue_one(&self) -> bool {
        self.multiplicity(1) > 0
    }

    pub fn polynomial(&self) -> IntPoly {
        self.0.iter().fold(IntPoly::one(), |acc, (&d, &k)| (0..k).fold(acc, |a, _| a.mul(&cyclotomic(d))))
    }

    /// The value at 1 of the polynomial, i.e. det(1 - w).
    pub fn value_at_one(&self) -> i64 {
        self.polynomial().eval(1)
    }

    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.0.iter().map(|(&d, &k)| (d, k)).collect()
    }

    /// Dot separated indices with repetition, e.g. `2.2.6`.
    pub fn dotted(&self) -> String {
        self.0
            .iter()
            .flat_map(|(&d, &k)| std::iter::repeat_n(d, k as usize))
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

impl fmt::Display for CyclotomicSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&d, &k) in &self.0 {
            if k == 1 {
                write!(f, "Φ{d}")?;
            } else {
                write!(f, "Φ{d}^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CyclotomicSignature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut m = BTreeMap::new();
        for tok in s.split('.').filter(|t| !t.is_empty()) {
            let d: u32 = tok.trim().parse().map_err(|_| Error::Parse(format!("bad cyclotomic index {tok:?}")))?;
            if d == 0 {
                return Err(Error::Parse("cyclotomic index 0".into()));
            }
            *m.entry(d).or_insert(0) += 1;
        }
        if m.is_empty() {
            return Err(Error::Parse("empty signature".into()));
        }
        Ok(CyclotomicSignature(m))
    }
}

/// Factor a monic integer polynomial into cyclotomic polynomials.
pub fn cyclotomic_factorization(p: &IntPoly) -> Result<CyclotomicSignature> {
    let mut rest = p.clone();
    let mut sig = BTreeMap::new();
    // phi(d) >= sqrt(d / 2), so no factor of degree <= deg has index above 2 deg^2
    let bound = 2 * (p.degree() as u32).pow(2) + 2;
    for d in 1..=bound {
        if rest.degree() == 0 {
            break;
        }
        let c = cyclotomic(d);
        while let Some(q) = rest.div_exact(&c) {
            *sig.entry(d).or_insert(0) += 1;
            rest = q;
        }
    }
    if rest.coeffs() != [1] {
        return Err(Error::Internal(format!("non-cyclotomic factor {:?}", rest.coeffs())));
    }
    Ok(CyclotomicSignature(sig))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).coeffs(), &[-1, 1]);
        assert_eq!(cyclotomic(2).coeffs(), &[1, 1]);
        assert_eq!(cyclotomic(6).coeffs(), &[1, -1, 1]);
        assert_eq!(cyclotomic(12).coeffs(), &[1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic(30).degree(), 8);
    }

    #[test]
    fn char_poly_of_rotation() {
        let m = Matrix::from_rows(&[vec![0i64, -1], vec![1, 1]]);
        let p = char_poly(&m);
        assert_eq!(p.coeffs(), &[1, -1, 1]);
        let sig = cyclotomic_factorization(&p).unwrap();
        assert_eq!(sig, CyclotomicSignature::from_pairs(&[(6, 1)]));
        assert_eq!(sig.value_at_one(), 1);
    }

    #[test]
    fn signature_parse_roundtrip() {
        let s: CyclotomicSignature = "2.2.6".parse().unwrap();
        assert_eq!(s.multiplicity(2), 2);
        assert_eq!(s.dotted(), "2.2.6");
        assert_eq!(s.to_string(), "Φ2^2Φ6");
        assert_eq!(s.degree(), 4);
    }

    #[test]
    fn non_cyclotomic_is_rejected() {
        assert!(cyclotomic_factorization(&IntPoly::new(vec![-2, 0, 1])).is_err());
    }
}
