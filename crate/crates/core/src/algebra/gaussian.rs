//! Gaussian integers: complex numbers with [`ExactInt`] components.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ExactInt;

/// A Gaussian integer re + im*i. Closed under addition, multiplication,
/// and nonnegative integer powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianInt {
    pub re: ExactInt,
    pub im: ExactInt,
}

impl GaussianInt {
    pub fn new(re: ExactInt, im: ExactInt) -> GaussianInt {
        GaussianInt { re, im }
    }

    pub fn zero() -> GaussianInt {
        GaussianInt::new(ExactInt::zero(), ExactInt::zero())
    }

    pub fn one() -> GaussianInt {
        GaussianInt::new(ExactInt::one(), ExactInt::zero())
    }

    /// The imaginary unit.
    pub fn i() -> GaussianInt {
        GaussianInt::new(ExactInt::zero(), ExactInt::one())
    }

    /// i^n; cycles through 1, i, -1, -i.
    pub fn i_pow(n: usize) -> GaussianInt {
        match n % 4 {
            0 => GaussianInt::one(),
            1 => GaussianInt::i(),
            2 => -GaussianInt::one(),
            _ => -GaussianInt::i(),
        }
    }

    pub fn from_int(v: ExactInt) -> GaussianInt {
        GaussianInt::new(v, ExactInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, c: &ExactInt) -> GaussianInt {
        GaussianInt::new(&self.re * c, &self.im * c)
    }

    /// Repeated-squaring power.
    pub fn pow(&self, mut n: usize) -> GaussianInt {
        let mut base = self.clone();
        let mut acc = GaussianInt::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "{}{:+}i", self.re, self.im)
        }
    }
}
