//! Scalar abstraction over the coefficient field.
//!
//! Matrices, polynomials, rational functions and power series are generic
//! over [`Scalar`]. The library instantiates them at three types:
//!
//! * [`crate::algebra::Cyclotomic`] — the exact field `Q(zeta_N)`, the
//!   primary scalar for all group matrices and characters;
//! * [`num_complex::Complex<f64>`] — the floating-point shadow used to
//!   cross-check exact results numerically;
//! * [`num_rational::BigRational`] — plain rationals, for computations that
//!   never leave `Q` (positive-form denominators, Fock norms).

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A field scalar with exact (or best-effort, for floats) arithmetic.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    /// Complex conjugation. Identity on real scalar types.
    fn conjugate(&self) -> Self;

    /// Embed a machine integer.
    fn from_int(n: i64) -> Self;

    /// Exact division by a nonzero integer.
    ///
    /// This is the only division the Faddeev–LeVerrier recurrence needs,
    /// which keeps determinants pivot-free over symbolic entries.
    fn div_int(&self, n: i64) -> Self;
}

impl Scalar for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn conjugate(&self) -> Self {
        self.clone()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero integer");
        self / BigRational::from_integer(n.into())
    }
}

impl Scalar for Complex64 {
    fn try_inv(&self) -> Option<Self> {
        if self.norm_sqr() == 0.0 {
            None
        } else {
            Some(self.inv())
        }
    }

    fn conjugate(&self) -> Self {
        self.conj()
    }

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero integer");
        self / n as f64
    }
}
