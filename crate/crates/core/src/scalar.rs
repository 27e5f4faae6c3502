//! Scalar traits for the exact linear algebra layer.
//!
//! Everything in this crate is exact. The integer types carry lattice data
//! (roots, 2-roots, canonical coordinates), [`Rational`](crate::Rational) carries
//! solves and inverses, and [`Fp`] carries Gram matrices reduced modulo a prime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// A commutative ring with exact equality.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

/// A field: every nonzero element has an inverse.
pub trait Field: Scalar + Div<Output = Self> {}

/// Exact division by two, for the symmetric-square forms whose trace formula
/// carries a factor of one half.
pub trait Halve: Scalar {
    /// Panics on integer types when the value is odd.
    fn halve(self) -> Self;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Halve for i64 {
    fn halve(self) -> Self {
        assert!(self % 2 == 0, "halving odd integer {self}");
        self / 2
    }
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Halve for i128 {
    fn halve(self) -> Self {
        assert!(self % 2 == 0, "halving odd integer {self}");
        self / 2
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for BigRational {}

impl Halve for BigRational {
    fn halve(self) -> Self {
        self / BigRational::from_i64(2)
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Field for Ratio<i64> {}

impl Halve for Ratio<i64> {
    fn halve(self) -> Self {
        self / Ratio::from_integer(2)
    }
}

/// Integer residues modulo the prime `P`.
///
/// `P` must be prime for division to be meaningful; [`Fp::new`] does not check.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P - 2)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {P})", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

impl<const P: u64> Field for Fp<P> {}

/// Converts an exact rational to an integer when its denominator is one.
pub fn rational_to_i64(q: &BigRational) -> Option<i64> {
    if !q.denom().is_one() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        type F7 = Fp<7>;
        let a = F7::new(3);
        let b = F7::new(-2);
        assert_eq!(b.value(), 5);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!(a / a, F7::one());
        assert_eq!((a * a.inverse()).value(), 1);
        assert_eq!((-F7::zero()).value(), 0);
    }

    #[test]
    fn f2_is_a_field() {
        type F2 = Fp<2>;
        assert_eq!(F2::one() + F2::one(), F2::zero());
        assert_eq!(F2::new(4), F2::zero());
        assert_eq!(F2::one() / F2::one(), F2::one());
    }

    #[test]
    #[should_panic]
    fn halving_odd_integer_panics() {
        let _ = 3i64.halve();
    }

    #[test]
    fn rational_conversion() {
        let q = BigRational::new(BigInt::from(6), BigInt::from(3));
        assert_eq!(rational_to_i64(&q), Some(2));
        let h = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(rational_to_i64(&h), None);
        assert_eq!(common_denominator([&q, &h]), BigInt::from(2));
    }
}
