//! Scalar abstraction for the lattice kernel.
//!
//! All polyhedral computations are exact: the kernel is generic over an
//! integer scalar and never touches floating point. The default alias
//! [`crate::Int`] is an arbitrary-precision integer; `i64` also satisfies
//! the bound and is handy for small fixed data in tests.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Integer scalar usable as a lattice coordinate.
pub trait LatticeInt:
    Integer + Signed + Clone + Hash + Debug + Display + From<i32> + ToPrimitive + 'static
{
}

impl<T> LatticeInt for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + From<i32> + ToPrimitive + 'static
{
}

/// gcd of a slice, ignoring signs; zero for an empty or all-zero slice.
pub fn gcd_all<I: LatticeInt>(values: &[I]) -> I {
    let mut g = I::zero();
    for v in values {
        g = g.gcd(v);
    }
    g
}
