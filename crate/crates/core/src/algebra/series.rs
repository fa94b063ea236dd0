//! Truncated power series: univariate, and multigraded in several formal
//! variables (for combined vibrational ladders).

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// A univariate power series truncated at some degree.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn zero(n_max: usize) -> Self {
        PowerSeries {
            coeffs: vec![T::zero(); n_max + 1],
        }
    }

    /// Truncation degree (inclusive).
    pub fn truncation(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        PowerSeries {
            coeffs: (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }
}

/// A multivariate series truncated by total degree. Keys are exponent
/// tuples; absent keys are zero.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiSeries<T> {
    nvars: usize,
    trunc: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MultiSeries<T> {
    pub fn one(nvars: usize, trunc: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], T::one());
        MultiSeries {
            nvars,
            trunc,
            terms,
        }
    }

    pub fn zero(nvars: usize, trunc: usize) -> Self {
        MultiSeries {
            nvars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        out.trunc = self.trunc.min(other.trunc);
        for (e, c) in &other.terms {
            let cur = out.terms.remove(e).unwrap_or_else(T::zero);
            let sum = cur + c.clone();
            if !sum.is_zero() {
                out.terms.insert(e.clone(), sum);
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = self.clone();
        if s.is_zero() {
            out.terms.clear();
            return out;
        }
        for c in out.terms.values_mut() {
            let v = std::mem::replace(c, T::zero());
            *c = v * s.clone();
        }
        out
    }

    /// Multiply by a univariate series living on the `axis`-th variable.
    pub fn mul_axis(&self, axis: usize, series: &PowerSeries<T>) -> Self {
        assert!(axis < self.nvars);
        let mut out = Self::zero(self.nvars, self.trunc);
        for (e, c) in &self.terms {
            let total: u32 = e.iter().sum();
            let room = self.trunc as u32 - total.min(self.trunc as u32);
            for k in 0..=room.min(series.truncation() as u32) {
                let s = series.coeff(k as usize);
                if s.is_zero() {
                    continue;
                }
                let mut e2 = e.clone();
                e2[axis] += k;
                let add = c.clone() * s;
                let cur = out.terms.remove(&e2).unwrap_or_else(T::zero);
                let sum = cur + add;
                if !sum.is_zero() {
                    out.terms.insert(e2, sum);
                }
            }
        }
        out
    }

    /// Set every variable to the same `lambda`: collapse by total degree.
    pub fn specialize(&self) -> PowerSeries<T> {
        let mut coeffs = vec![T::zero(); self.trunc + 1];
        for (e, c) in &self.terms {
            let total: usize = e.iter().map(|&x| x as usize).sum();
            if total <= self.trunc {
                let cur = std::mem::replace(&mut coeffs[total], T::zero());
                coeffs[total] = cur + c.clone();
            }
        }
        PowerSeries::new(coeffs)
    }

    /// All exponent tuples with total degree at most the truncation,
    /// in (total degree, lexicographic) order.
    pub fn enumerate_exponents(nvars: usize, trunc: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(cur: &mut Vec<u32>, idx: usize, left: u32, out: &mut Vec<Vec<u32>>) {
            if idx + 1 == cur.len() {
                cur[idx] = left;
                out.push(cur.clone());
                return;
            }
            for k in (0..=left).rev() {
                cur[idx] = k;
                rec(cur, idx + 1, left - k, out);
            }
        }
        for total in 0..=trunc as u32 {
            rec(&mut cur, 0, total, &mut out);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn int(n: i64) -> BigRational {
        Scalar::from_int(n)
    }

    #[test]
    fn axis_products_and_specialization() {
        // (1 + x + x^2 + ...) on axis 0 times the same on axis 1:
        // coefficient at (a, b) is 1; specialized coefficient at n is n+1.
        let geo = PowerSeries::new(vec![int(1); 5]);
        let m = MultiSeries::one(2, 4).mul_axis(0, &geo).mul_axis(1, &geo);
        assert_eq!(m.coeff(&[2, 1]), int(1));
        assert_eq!(m.coeff(&[0, 4]), int(1));
        let s = m.specialize();
        assert_eq!(s.coeffs(), &[int(1), int(2), int(3), int(4), int(5)]);
    }

    #[test]
    fn exponent_enumeration_is_graded() {
        let e = MultiSeries::<BigRational>::enumerate_exponents(3, 2);
        assert_eq!(e.len(), 10);
        assert_eq!(e[0], vec![0, 0, 0]);
        assert_eq!(e[1], vec![1, 0, 0]);
        // all degree-1 tuples precede degree-2 tuples
        let degree_of = |v: &Vec<u32>| v.iter().sum::<u32>();
        for w in e.windows(2) {
            assert!(degree_of(&w[0]) <= degree_of(&w[1]));
        }
    }
}
