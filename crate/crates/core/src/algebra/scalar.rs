//! Exact arithmetic in Q(i).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::{Int, Rat};

/// An element of Q(i): an exact rational real part and imaginary part.
/// Equality is decidable and exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Rat,
    pub im: Rat,
}

impl Gaussian {
    pub fn new(re: Rat, im: Rat) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Self::new(Rat::one(), Rat::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rat::zero(), Rat::one())
    }

    /// The rational p/q.
    pub fn rat(p: i64, q: i64) -> Self {
        Self::new(Rat::new(Int::from(p), Int::from(q)), Rat::zero())
    }

    /// The purely imaginary rational (p/q)·i.
    pub fn rat_i(p: i64, q: i64) -> Self {
        Self::new(Rat::zero(), Rat::new(Int::from(p), Int::from(q)))
    }

    pub fn from_int(n: i64) -> Self {
        Self::rat(n, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_pure_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        Some(Self::new(
            self.re.clone() / norm.clone(),
            -self.im.clone() / norm,
        ))
    }
}

impl Add for &Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(self.re.clone() + rhs.re.clone(), self.im.clone() + rhs.im.clone())
    }
}

impl Sub for &Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(self.re.clone() - rhs.re.clone(), self.im.clone() - rhs.im.clone())
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(
            self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            self.re.clone() * rhs.im.clone() + self.im.clone() * rhs.re.clone(),
        )
    }
}

impl Div for &Gaussian {
    type Output = Gaussian;
    fn div(self, rhs: &Gaussian) -> Gaussian {
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re.clone(), -self.im.clone())
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im_part = if self.im.is_one() {
            "i".to_string()
        } else if (-self.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rat(&self.im))
        };
        if self.re.is_zero() {
            return write!(f, "{im_part}");
        }
        if self.im.is_negative() {
            write!(f, "{}{}", fmt_rat(&self.re), im_part)
        } else {
            write!(f, "{}+{}", fmt_rat(&self.re), im_part)
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let i = Gaussian::i();
        assert_eq!(&i * &i, Gaussian::from_int(-1));
        let x = Gaussian::new(Rat::new(Int::from(1), Int::from(2)), Rat::new(Int::from(1), Int::from(2)));
        let y = &x * &x.inv().unwrap();
        assert!(y.is_one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Gaussian::rat(1, 2).to_string(), "1/2");
        assert_eq!(Gaussian::i().to_string(), "i");
        assert_eq!(Gaussian::rat_i(-1, 2).to_string(), "-1/2*i");
        assert_eq!(
            (&Gaussian::rat(1, 2) + &Gaussian::i()).to_string(),
            "1/2+i"
        );
    }
}
