//! Exact scalar fields: arbitrary precision rationals and prime fields.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    /// 0 for the rationals.
    fn characteristic() -> u32;
    /// Some square root in the field, if one exists.
    fn sqrt(&self) -> Option<Self>;
    /// Number of elements, `None` when infinite.
    fn order() -> Option<u64> {
        None
    }
    /// The `i`-th element in a fixed enumeration (finite fields only).
    fn nth(_i: u64) -> Self {
        unreachable!("not a finite field")
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic() -> u32 {
        0
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| BigRational::new(n, d))
    }
}

/// The prime field F_P.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }
    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u64 + o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| Field::pow(self, (P - 2) as u64))
    }
    fn characteristic() -> u32 {
        P
    }
    fn sqrt(&self) -> Option<Self> {
        (0..P).map(Fp).find(|r| *r * *r == *self)
    }
    fn order() -> Option<u64> {
        Some(P as u64)
    }
    fn nth(i: u64) -> Self {
        Fp((i % P as u64) as u32)
    }
}

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F1009 = Fp<1009>;

/// F(√D) = F[t]/(t² - D) for a non-square D of F, stored as a + b·√D.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quad<F, const D: i64> {
    pub a: F,
    pub b: F,
}

/// Adjoins a square root of -1.
pub type Gauss<F> = Quad<F, -1>;

impl<F: Field, const D: i64> Quad<F, D> {
    pub fn new(a: F, b: F) -> Self {
        Quad { a, b }
    }

    pub fn embed(a: F) -> Self {
        Quad { a, b: F::zero() }
    }

    /// The base-field value, if the √D part vanishes.
    pub fn in_base(&self) -> Option<F> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn d() -> F {
        F::from_i64(D)
    }
}

impl<F: Field, const D: i64> fmt::Debug for Quad<F, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field, const D: i64> fmt::Display for Quad<F, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}√{}", self.a, self.b, D)
        }
    }
}

impl<F: Field, const D: i64> Add for Quad<F, D> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quad { a: self.a + o.a, b: self.b + o.b }
    }
}

impl<F: Field, const D: i64> Sub for Quad<F, D> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quad { a: self.a - o.a, b: self.b - o.b }
    }
}

impl<F: Field, const D: i64> Mul for Quad<F, D> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let a = self.a.clone() * o.a.clone() + Self::d() * self.b.clone() * o.b.clone();
        let b = self.a * o.b + self.b * o.a;
        Quad { a, b }
    }
}

impl<F: Field, const D: i64> Neg for Quad<F, D> {
    type Output = Self;
    fn neg(self) -> Self {
        Quad { a: -self.a, b: -self.b }
    }
}

impl<F: Field, const D: i64> Field for Quad<F, D> {
    fn zero() -> Self {
        Self::embed(F::zero())
    }
    fn one() -> Self {
        Self::embed(F::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::embed(F::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let norm = self.a.clone() * self.a.clone() - Self::d() * self.b.clone() * self.b.clone();
        let ni = norm.inv()?;
        Some(Quad { a: self.a.clone() * ni.clone(), b: -(self.b.clone() * ni) })
    }
    fn characteristic() -> u32 {
        F::characteristic()
    }
    /// Square roots of base-field elements only: either √x ∈ F or √(x/D) ∈ F.
    fn sqrt(&self) -> Option<Self> {
        let x = self.in_base()?;
        if let Some(r) = x.sqrt() {
            return Some(Self::embed(r));
        }
        let r = x.div(&Self::d())?.sqrt()?;
        Some(Quad { a: F::zero(), b: r })
    }
    fn order() -> Option<u64> {
        F::order().map(|q| q * q)
    }
    fn nth(i: u64) -> Self {
        let q = F::order().expect("finite base field");
        Quad { a: F::nth(i % q), b: F::nth(i / q) }
    }
}

/// Runs `$body` with `$F` bound to the prime field of size `$q`.
#[macro_export]
macro_rules! with_prime_field {
    ($q:expr, $F:ident => $body:expr) => {
        match $q {
            2 => {
                type $F = $crate::field::Fp<2>;
                Ok($body)
            }
            3 => {
                type $F = $crate::field::Fp<3>;
                Ok($body)
            }
            5 => {
                type $F = $crate::field::Fp<5>;
                Ok($body)
            }
            7 => {
                type $F = $crate::field::Fp<7>;
                Ok($body)
            }
            1009 => {
                type $F = $crate::field::Fp<1009>;
                Ok($body)
            }
            other => Err($crate::Error::Unsupported(format!("field of size {other}"))),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_table() {
        for a in 1..7 {
            let x = F7::new(a);
            assert_eq!(x * x.inv().unwrap(), F7::one());
        }
        assert!(F7::zero().inv().is_none());
    }

    #[test]
    fn rational_sqrt() {
        let x = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(
            Field::sqrt(&x),
            Some(BigRational::new(BigInt::from(3), BigInt::from(2)))
        );
        assert_eq!(Field::sqrt(&Rational::from_i64(2)), None);
        assert_eq!(Field::sqrt(&Rational::from_i64(-1)), None);
    }

    #[test]
    fn gaussian_extension() {
        type G3 = Gauss<F3>;
        let i = G3::new(F3::new(0), F3::new(1));
        assert_eq!(i.clone() * i.clone(), -G3::one());
        assert_eq!(G3::from_i64(-1).sqrt().map(|r| r.clone() * r), Some(G3::from_i64(-1)));
        for k in 1..9 {
            let x = G3::nth(k);
            assert!((x.clone() * x.inv().unwrap()).is_one());
        }
        let q = Gauss::<Rational>::from_i64(-4).sqrt().unwrap();
        assert_eq!(q.clone() * q, Gauss::<Rational>::from_i64(-4));
        assert!(Gauss::<Rational>::from_i64(2).sqrt().is_none());
    }

    #[test]
    fn squares_mod_three() {
        assert_eq!(F3::new(2).sqrt(), None);
        assert!(F3::new(1).sqrt().is_some());
        assert_eq!(F2::new(1).sqrt(), Some(F2::new(1)));
    }
}
