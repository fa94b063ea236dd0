//! Rational functions in one formal variable, and their power-series
//! expansions at the origin.

use crate::algebra::poly::Polynomial;
use crate::algebra::series::PowerSeries;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A quotient of polynomials. The denominator is nonzero by construction.
#[derive(Clone, PartialEq)]
pub struct RationalFunction<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunction {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        RationalFunction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    /// Cancel the gcd of numerator and denominator, then normalize the
    /// denominator so its constant term is one (or make it monic when it
    /// vanishes at the origin). After this, gcd(num, den) is a unit.
    pub fn reduce(&self) -> Self {
        if self.num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = self.num.gcd(&self.den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (self.num.clone(), self.den.clone())
        } else {
            (self.num.div_exact(&g), self.den.div_exact(&g))
        };
        let c0 = den.constant_term();
        let unit = if c0.is_zero() {
            den.leading().unwrap().clone()
        } else {
            c0
        };
        let inv = unit.try_inv().expect("nonzero unit");
        num = num.scale(&inv);
        den = den.scale(&inv);
        RationalFunction { num, den }
    }

    /// Expand into a truncated power series at the origin.
    ///
    /// Requires a nonzero denominator constant term. The expansion is the
    /// unique series `s` with `s * den - num = O(lambda^(n_max+1))`.
    pub fn series(&self, n_max: usize) -> Result<PowerSeries<T>> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(Error::DenominatorVanishesAtOrigin);
        }
        let d0_inv = d0.try_inv().expect("nonzero constant");
        let dd = self.den.degree().unwrap_or(0);
        let mut rem: Vec<T> = (0..=n_max).map(|k| self.num.coeff(k)).collect();
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let c = rem[n].clone() * d0_inv.clone();
            for k in 1..=dd.min(n_max - n) {
                let delta = c.clone() * self.den.coeff(k);
                rem[n + k] = rem[n + k].clone() - delta;
            }
            out.push(c);
        }
        Ok(PowerSeries::new(out))
    }
}

impl<T: Scalar> std::fmt::Debug for RationalFunction<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(coeffs: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    fn int(n: i64) -> BigRational {
        Scalar::from_int(n)
    }

    #[test]
    fn geometric_series() {
        // 1/(1 - lambda)^2 -> 1, 2, 3, 4, 5
        let f = RationalFunction::new(p(&[1]), p(&[1, -2, 1])).unwrap();
        let s = f.series(4).unwrap();
        assert_eq!(
            s.coeffs(),
            &[int(1), int(2), int(3), int(4), int(5)]
        );
    }

    #[test]
    fn alternating_series() {
        // 1/(1 + lambda) -> 1, -1, 1, -1
        let f = RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap();
        let s = f.series(3).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(-1), int(1), int(-1)]);
    }

    #[test]
    fn molien_like_form_matches_hand_convolution() {
        // (1 + x^8) / ((1-x^4)(1-x^6)): independent oracle by convolving
        // truncated geometric series with integer arithmetic.
        let n = 12usize;
        let mut a = vec![0i64; n + 1];
        for k in (0..=n).step_by(4) {
            a[k] = 1;
        }
        let mut b = vec![0i64; n + 1];
        for k in (0..=n).step_by(6) {
            b[k] = 1;
        }
        let mut conv = vec![0i64; n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                conv[i + j] += a[i] * b[j];
            }
        }
        let mut expected = conv.clone();
        for k in 8..=n {
            expected[k] += conv[k - 8];
        }

        let num = p(&[1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let den = p(&[1, 0, 0, 0, -1]).mul(&p(&[1, 0, 0, 0, 0, 0, -1]));
        let f = RationalFunction::new(num, den).unwrap();
        let s = f.series(n).unwrap();
        let got: Vec<BigRational> = s.coeffs().to_vec();
        let want: Vec<BigRational> = expected.iter().map(|&c| int(c)).collect();
        assert_eq!(got, want);
        // spot values quoted at degrees 0, 4, 6, 8
        assert_eq!(expected[0], 1);
        assert_eq!(expected[4], 1);
        assert_eq!(expected[6], 1);
        assert_eq!(expected[8], 2);
    }

    #[test]
    fn series_needs_nonzero_origin() {
        let f = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        assert!(matches!(
            f.series(3),
            Err(Error::DenominatorVanishesAtOrigin)
        ));
    }

    #[test]
    fn recomposition_vanishes() {
        let f = RationalFunction::new(p(&[2, 1]), p(&[1, -1, 3])).unwrap();
        let n = 10;
        let s = f.series(n).unwrap();
        let sp = Polynomial::new(s.coeffs().to_vec());
        let back = sp.mul(f.denominator()).sub(f.numerator());
        for k in 0..=n {
            assert!(back.coeff(k).is_zero());
        }
    }

    #[test]
    fn reduce_cancels() {
        // (1 - x^2)/(1 - x) reduces to (1 + x)/1
        let f = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -1])).unwrap().reduce();
        assert_eq!(f.numerator(), &p(&[1, 1]));
        assert_eq!(f.denominator(), &p(&[1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(p(&[1]), p(&[])).is_err());
    }
}
