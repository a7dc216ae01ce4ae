//! Gaussian-rational coefficient arithmetic.
//!
//! `GaussianRational` is a complex number with exact rational real and
//! imaginary parts. It is the coefficient field of every wave function in
//! this crate; no floating point appears anywhere downstream.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Exact rational number, reduced with positive denominator.
pub type Rational = BigRational;

/// Exact complex number with rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(BigInt::from(n)),
            im: Rational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational {
            re: Rational::new(BigInt::from(num), BigInt::from(den)),
            im: Rational::zero(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussianRational {
            re: r,
            im: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 = re^2 + im^2, an exact rational.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero GaussianRational");
        let n = self.norm_sq();
        GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inverse()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({}{}i)", self.re, self.im)
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

/// Rounded division of BigInt: nearest integer to n/d, ties toward +inf.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    use num_integer::Integer;
    let (n, d) = if d.is_negative() {
        (-n, -d)
    } else {
        (n.clone(), d.clone())
    };
    let two = BigInt::from(2);
    (&two * &n + &d).div_floor(&(&two * &d))
}

/// Gaussian integer as a coefficient pair.
pub type GaussInt = (BigInt, BigInt);

fn gi_mul(a: &GaussInt, b: &GaussInt) -> GaussInt {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gi_sub(a: &GaussInt, b: &GaussInt) -> GaussInt {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn gi_is_zero(a: &GaussInt) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

/// Exact quotient a/b of Gaussian integers, rounded to the nearest lattice point.
fn gi_div_round(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let nb = &b.0 * &b.0 + &b.1 * &b.1;
    let num = gi_mul(a, &(b.0.clone(), -b.1.clone()));
    (div_round(&num.0, &nb), div_round(&num.1, &nb))
}

/// Euclidean gcd in the Gaussian integers (defined up to a unit).
pub fn gaussian_gcd(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let mut a = a.clone();
    let mut b = b.clone();
    while !gi_is_zero(&b) {
        let q = gi_div_round(&a, &b);
        let r = gi_sub(&a, &gi_mul(&q, &b));
        a = b;
        b = r;
    }
    a
}

/// Exact Gaussian-integer division; panics if not divisible.
pub fn gaussian_div_exact(a: &GaussInt, b: &GaussInt) -> GaussInt {
    use num_integer::Integer;
    let nb = &b.0 * &b.0 + &b.1 * &b.1;
    let num = gi_mul(a, &(b.0.clone(), -b.1.clone()));
    let (qr, rr) = num.0.div_rem(&nb);
    let (qi, ri) = num.1.div_rem(&nb);
    assert!(rr.is_zero() && ri.is_zero(), "inexact Gaussian division");
    (qr, qi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::new(
            Rational::from_integer(BigInt::from(a)),
            Rational::from_integer(BigInt::from(b)),
        )
    }

    #[test]
    fn field_ops() {
        let x = g(1, 2);
        let y = g(3, -1);
        assert_eq!(&x * &y, g(5, 5));
        assert_eq!(&(&x * &y) / &y, x);
        assert_eq!(&x + &(-&x), GaussianRational::zero());
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn gcd_divides() {
        let a = (BigInt::from(4), BigInt::from(2));
        let b = (BigInt::from(6), BigInt::from(0));
        let d = gaussian_gcd(&a, &b);
        gaussian_div_exact(&a, &d);
        gaussian_div_exact(&b, &d);
        // 1+i divides 2
        let d2 = gaussian_gcd(
            &(BigInt::from(1), BigInt::from(1)),
            &(BigInt::from(2), BigInt::from(0)),
        );
        assert_eq!(&d2.0 * &d2.0 + &d2.1 * &d2.1, BigInt::from(2));
    }
}
