//! Half-integers, stored as twice their value.
//!
//! Angular-momentum labels `j` and `m` range over `0, 1/2, 1, 3/2, ...`;
//! keeping `2j` as an integer avoids rationals in indices.

use std::fmt;

/// A half-integer `n/2`, stored as `n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// Twice the value, always an integer.
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if integral.
    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    /// Parse `"2"`, `"5/2"`, or `"2.5"`-free fraction syntax.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            if d == 2 {
                Some(HalfInt(n))
            } else if d == 1 {
                Some(HalfInt(2 * n))
            } else {
                None
            }
        } else {
            let n: i64 = s.parse().ok()?;
            Some(HalfInt(2 * n))
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
