use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::{gcd_all, LatticeInt};

/// A point of the lattice M ≅ Zⁿ or its dual N, in unitless lattice coordinates.
///
/// The derived `Ord` is lexicographic on coordinates; it is the canonical
/// order used everywhere reports must be byte-stable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector<I: LatticeInt> {
    coords: Vec<I>,
}

impl<I: LatticeInt> LatticeVector<I> {
    pub fn new(coords: Vec<I>) -> Self {
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coords: vec![I::zero(); dim],
        }
    }

    pub fn from_i32(coords: &[i32]) -> Self {
        Self {
            coords: coords.iter().map(|&c| I::from(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[I] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> I {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(I::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.iter().map(|a| -a.clone()).collect())
    }

    /// Divide by the gcd of the coordinates, keeping the direction.
    pub fn primitive(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = gcd_all(&self.coords);
        Ok(Self::new(
            self.coords.iter().map(|c| c.clone() / g.clone()).collect(),
        ))
    }

    /// True iff nonzero and the coordinate gcd is 1.
    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && gcd_all(&self.coords).is_one()
    }

    /// Image under the linear map given by `rows` (a matrix acting on column
    /// vectors), i.e. `(rows * self)`.
    pub fn apply(&self, rows: &[Vec<I>]) -> Self {
        Self::new(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .zip(&self.coords)
                        .fold(I::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
                })
                .collect(),
        )
    }
}

impl<I: LatticeInt> fmt::Display for LatticeVector<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<I: LatticeInt> fmt::Debug for LatticeVector<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    type V = LatticeVector<Int>;

    #[test]
    fn primitive_divides_by_gcd() {
        assert_eq!(V::from_i32(&[2, -2, 4]).primitive().unwrap(), V::from_i32(&[1, -1, 2]));
        assert_eq!(V::from_i32(&[0, 0, 3]).primitive().unwrap(), V::from_i32(&[0, 0, 1]));
        // already primitive: a ray generator stays put
        assert_eq!(
            V::from_i32(&[-2, -1, -1]).primitive().unwrap(),
            V::from_i32(&[-2, -1, -1])
        );
    }

    #[test]
    fn primitive_of_zero_fails() {
        assert!(matches!(V::from_i32(&[0, 0]).primitive(), Err(Error::ZeroVector)));
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![
            V::from_i32(&[1, 0, 0]),
            V::from_i32(&[-1, 3, -1]),
            V::from_i32(&[-1, -1, 3]),
        ];
        v.sort();
        assert_eq!(v[0], V::from_i32(&[-1, -1, 3]));
        assert_eq!(v[2], V::from_i32(&[1, 0, 0]));
    }
}
