//! Exact complex-rational scalars `re + im·i`.
//!
//! Real matrix algebras simply keep `im = 0`; quaternionic entries are
//! handled one level up via the standard 2×2 complex embedding.

use crate::linalg::{rat, rat_str, Rat};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        CRat { re, im }
    }

    pub fn zero() -> Self {
        CRat::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        CRat::from_int(1)
    }

    pub fn i() -> Self {
        CRat::new(Rat::zero(), rat(1))
    }

    pub fn from_int(n: i64) -> Self {
        CRat::new(rat(n), Rat::zero())
    }

    pub fn from_rat(re: Rat) -> Self {
        CRat::new(re, Rat::zero())
    }

    pub fn conj(&self) -> Self {
        CRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for &CRat {
    type Output = CRat;
    fn add(self, rhs: &CRat) -> CRat {
        CRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &CRat {
    type Output = CRat;
    fn sub(self, rhs: &CRat) -> CRat {
        CRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &CRat {
    type Output = CRat;
    fn mul(self, rhs: &CRat) -> CRat {
        CRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        CRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rat_str(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", rat_str(&self.im))
        } else {
            write!(f, "{}+{}i", rat_str(&self.re), rat_str(&self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_arithmetic() {
        let a = CRat::new(rat(1), rat(2));
        let b = CRat::new(rat(3), rat(-1));
        assert_eq!(&a * &b, CRat::new(rat(5), rat(5)));
        assert_eq!(&a + &b, CRat::new(rat(4), rat(1)));
        assert_eq!((&a.conj() * &a).im, rat(0));
        assert_eq!(&CRat::i() * &CRat::i(), CRat::from_int(-1));
    }
}
