//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element is stored by its coordinates over the power basis
//! `zeta^0, ..., zeta^(phi(N)-1)`, reduced modulo the N-th cyclotomic
//! polynomial. The representation is canonical: two elements of the same
//! order are equal iff their coefficient vectors are identical.
//!
//! Elements of different orders may meet in arithmetic; they are embedded
//! into `Q(zeta_lcm)` on the fly. The strict "one order per group" regime
//! is enforced at the catalog boundary, where every matrix entry and
//! character is embedded into the group's declared field once.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Precomputed reduction data for one cyclotomic order.
struct CycloTable {
    phi: usize,
    /// `zeta^k` in the canonical basis, integer coordinates, for
    /// `k < max(order, 2*phi - 1)` (enough for products and conjugation).
    powers: Vec<Vec<BigInt>>,
}

fn table_cache() -> &'static Mutex<HashMap<u32, Arc<CycloTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn table(order: u32) -> Arc<CycloTable> {
    assert!(order >= 1, "cyclotomic order must be positive");
    let mut cache = table_cache().lock().unwrap();
    if let Some(t) = cache.get(&order) {
        return Arc::clone(t);
    }
    let t = Arc::new(CycloTable::build(order));
    cache.insert(order, Arc::clone(&t));
    t
}

/// Exact division of integer polynomials, `num / den`, `den` monic.
fn int_poly_div_exact(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let dn = den.len() - 1;
    assert!(num.len() >= den.len());
    let qn = num.len() - den.len() + 1;
    let mut quot = vec![BigInt::zero(); qn];
    for k in (0..qn).rev() {
        let c = num[k + dn].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                num[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(num.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// The N-th cyclotomic polynomial as a dense integer coefficient list.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut known: HashMap<u32, Vec<BigInt>> = HashMap::new();
    let mut divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    divisors.sort_unstable();
    for d in divisors {
        // x^d - 1
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = -BigInt::one();
        poly[d as usize] = BigInt::one();
        for e in 1..d {
            if d % e == 0 {
                poly = int_poly_div_exact(poly, &known[&e]);
            }
        }
        known.insert(d, poly);
    }
    known.remove(&n).unwrap()
}

impl CycloTable {
    fn build(order: u32) -> Self {
        let min_poly = cyclotomic_polynomial(order);
        let phi = min_poly.len() - 1;
        let span = (order as usize).max(2 * phi.max(1) - 1);
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(span);
        for k in 0..span {
            if k < phi {
                let mut v = vec![BigInt::zero(); phi];
                v[k] = BigInt::one();
                powers.push(v);
            } else {
                // x * powers[k-1], reduced mod the minimal polynomial
                let prev = &powers[k - 1];
                let mut v = vec![BigInt::zero(); phi + 1];
                for (i, c) in prev.iter().enumerate() {
                    v[i + 1] = c.clone();
                }
                let top = v.pop().unwrap();
                if !top.is_zero() {
                    for (i, c) in min_poly.iter().take(phi).enumerate() {
                        v[i] -= &top * c;
                    }
                }
                powers.push(v);
            }
        }
        CycloTable { phi, powers }
    }
}

/// An exact element of the cyclotomic field `Q(zeta_order)`.
///
/// `zeta_N = exp(2 pi i / N)`. The coefficient vector always has length
/// `phi(order)` and is fully reduced, so equality of vectors is equality
/// of field elements.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// The zero element of `Q(zeta_order)`.
    pub fn zero_of(order: u32) -> Self {
        let t = table(order);
        Cyclotomic {
            order,
            coeffs: vec![BigRational::zero(); t.phi],
        }
    }

    /// Embed a rational number (at the given order).
    pub fn from_rational_of(r: BigRational, order: u32) -> Self {
        let mut x = Self::zero_of(order);
        x.coeffs[0] = r;
        x
    }

    /// Embed a rational number at order 1 (plain `Q`).
    pub fn from_rational(r: BigRational) -> Self {
        Self::from_rational_of(r, 1)
    }

    /// `zeta_order^k`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let t = table(order);
        let k = k.rem_euclid(order as i64) as usize;
        let coeffs = t.powers[k]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        Cyclotomic { order, coeffs }
    }

    /// The order N of the ambient field `Q(zeta_N)`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients over the canonical power basis.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree `phi(order)` of the ambient field.
    pub fn field_degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Re-express this element in `Q(zeta_new_order)`.
    ///
    /// Fails unless the current order divides the new one (rationals embed
    /// anywhere).
    pub fn embed_into(&self, new_order: u32) -> Result<Self> {
        if self.order == new_order {
            return Ok(self.clone());
        }
        if self.is_rational() {
            return Ok(Self::from_rational_of(self.coeffs[0].clone(), new_order));
        }
        if new_order % self.order != 0 {
            return Err(Error::BadEmbedding {
                from: self.order,
                to: new_order,
            });
        }
        let stride = (new_order / self.order) as usize;
        let t = table(new_order);
        let mut acc = vec![BigRational::zero(); t.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = &t.powers[(k * stride) % new_order as usize];
            for (i, b) in image.iter().enumerate() {
                if !b.is_zero() {
                    acc[i] += c * BigRational::from_integer(b.clone());
                }
            }
        }
        Ok(Cyclotomic {
            order: new_order,
            coeffs: acc,
        })
    }

    fn common_pair(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = (self.order as u64).lcm(&(other.order as u64)) as u32;
        (
            self.embed_into(l).expect("lcm embedding"),
            other.embed_into(l).expect("lcm embedding"),
        )
    }

    /// Apply the Galois automorphism `zeta -> zeta^a` (`gcd(a, order) = 1`).
    pub fn galois(&self, a: u32) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        assert!(
            (a as u64).gcd(&(self.order as u64)) == 1,
            "galois exponent must be coprime to the order"
        );
        let t = table(self.order);
        let mut acc = vec![BigRational::zero(); t.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = &t.powers[(k * a as usize) % self.order as usize];
            for (i, b) in image.iter().enumerate() {
                if !b.is_zero() {
                    acc[i] += c * BigRational::from_integer(b.clone());
                }
            }
        }
        Cyclotomic {
            order: self.order,
            coeffs: acc,
        }
    }

    /// `true` iff the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    /// The element as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// `true` iff fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// Numerical value under the embedding `zeta_N -> exp(2 pi i / N)`.
    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * k as f64 / self.order as f64;
            let r = c.numer().to_f64().unwrap_or(f64::NAN)
                / c.denom().to_f64().unwrap_or(f64::NAN);
            acc += Complex64::new(angle.cos(), angle.sin()) * r;
        }
        acc
    }

    /// Total ordering on canonical representations (embeds to a common
    /// field first). Used only to fix deterministic orderings; it has no
    /// field-theoretic meaning.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        let (a, b) = self.common_pair(other);
        a.coeffs.cmp(&b.coeffs)
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational_of(r.recip(), self.order));
        }
        // Extended Euclid against the minimal polynomial over Q.
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let (g, u) = poly_half_egcd(&self.coeffs, &modulus);
        // g is a nonzero constant since the modulus is irreducible.
        debug_assert!(g.len() == 1 && !g[0].is_zero());
        let scale = g[0].recip();
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len()];
        for (k, c) in u.iter().enumerate() {
            // u may have degree < phi already; reduction is a no-op but keep it safe
            coeffs[k] = c * &scale;
        }
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }
}

/// Extended Euclid over `Q[x]` returning `(gcd, u)` with
/// `u*a = gcd (mod m)`. Both inputs are dense coefficient lists; `a` must
/// be nonzero and `deg a < deg m`.
fn poly_half_egcd(
    a: &[BigRational],
    m: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    fn deg(p: &[BigRational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.last().map(|c| c.is_zero()).unwrap_or(false) {
            p.pop();
        }
        p
    }
    // r0 = m, r1 = a; u tracks the coefficient of a.
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut u0: Vec<BigRational> = vec![];
    let mut u1: Vec<BigRational> = vec![BigRational::one()];
    while let Some(d1) = deg(&r1) {
        if d1 == 0 {
            break;
        }
        let d0 = deg(&r0).expect("nonzero remainder chain");
        if d0 < d1 {
            std::mem::swap(&mut r0, &mut r1);
            std::mem::swap(&mut u0, &mut u1);
            continue;
        }
        // one long-division step sequence: r0 = q*r1 + r
        let mut rem = r0.clone();
        let mut q = vec![BigRational::zero(); d0 - d1 + 1];
        let lead_inv = r1[d1].recip();
        for k in (0..=d0 - d1).rev() {
            if rem.len() <= k + d1 {
                continue;
            }
            let c = rem[k + d1].clone() * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, rc) in r1.iter().enumerate() {
                rem[k + i] -= &c * rc;
            }
            q[k] = c;
        }
        let rem = trim(rem);
        // u_new = u0 - q*u1
        let mut u_new = u0.clone();
        let need = q.len() + u1.len();
        if u_new.len() < need {
            u_new.resize(need, BigRational::zero());
        }
        for (i, qc) in q.iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            for (j, uc) in u1.iter().enumerate() {
                u_new[i + j] -= qc * uc;
            }
        }
        r0 = r1;
        u0 = u1;
        r1 = rem;
        u1 = trim(u_new);
    }
    (r1, u1)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::zero_of(1)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
}

impl std::ops::Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        if self.order == rhs.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect();
            return Cyclotomic {
                order: self.order,
                coeffs,
            };
        }
        let (a, b) = self.common_pair(&rhs);
        a + b
    }
}

impl std::ops::Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            let v = std::mem::replace(c, BigRational::zero());
            *c = -v;
        }
        self
    }
}

impl std::ops::Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        if self.order != rhs.order {
            let (a, b) = self.common_pair(&rhs);
            return a * b;
        }
        let order = self.order;
        let t = table(order);
        let phi = t.phi;
        if phi == 1 {
            return Cyclotomic {
                order,
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        // convolve, then fold powers >= phi through the reduction table
        let mut conv = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut acc: Vec<BigRational> = conv[..phi].to_vec();
        for (k, c) in conv.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (i, b) in t.powers[k].iter().enumerate() {
                if !b.is_zero() {
                    acc[i] += c * BigRational::from_integer(b.clone());
                }
            }
        }
        Cyclotomic {
            order,
            coeffs: acc,
        }
    }
}

impl Scalar for Cyclotomic {
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn conjugate(&self) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        self.galois(self.order - 1)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero integer");
        let d = BigRational::from_integer(n.into());
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c / &d).collect(),
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "z{}^{}", self.order, k)?;
            } else {
                write!(f, "{mag}*z{}^{}", self.order, k)?;
            }
        }
        Ok(())
    }
}

/// Parse the cyclotomic literal syntax: terms `c*zN^k` joined by `+`/`-`,
/// with `c` a rational like `3/2`. Examples: `1/2*z8^1 + 1/2*z8^7`, `-1`,
/// `z4^1`, `0`.
pub fn parse_cyclotomic(input: &str) -> Result<Cyclotomic> {
    let bad = |msg: &str| Error::BadCyclotomicLiteral(input.to_string(), msg.to_string());
    let s = input.trim();
    if s.is_empty() {
        return Err(bad("empty literal"));
    }
    // split into signed terms at top-level + and -
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    let mut seen_any = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' if seen_any && !cur.trim().is_empty() => {
                terms.push((sign, cur.trim().to_string()));
                cur = String::new();
                sign = ch == '-';
            }
            '+' if !seen_any || cur.trim().is_empty() => {
                if !cur.trim().is_empty() {
                    return Err(bad("misplaced sign"));
                }
            }
            '-' if cur.trim().is_empty() => {
                sign = !sign;
            }
            _ => {
                if !ch.is_whitespace() {
                    seen_any = true;
                }
                cur.push(ch);
            }
        }
    }
    if cur.trim().is_empty() {
        return Err(bad("dangling sign"));
    }
    terms.push((sign, cur.trim().to_string()));

    let mut acc = Cyclotomic::zero();
    for (neg, term) in terms {
        let (coef_str, z_str) = match term.split_once('*') {
            Some((c, z)) => (Some(c.trim()), Some(z.trim())),
            None => {
                if term.starts_with('z') {
                    (None, Some(term.as_str()))
                } else {
                    (Some(term.as_str()), None)
                }
            }
        };
        let mut coef = match coef_str {
            None => BigRational::one(),
            Some(c) => parse_rational(c).ok_or_else(|| bad("bad rational coefficient"))?,
        };
        if neg {
            coef = -coef;
        }
        let value = match z_str {
            None => Cyclotomic::from_rational(coef),
            Some(z) => {
                let rest = z.strip_prefix('z').ok_or_else(|| bad("expected zN^k"))?;
                let (ord_str, exp_str) = match rest.split_once('^') {
                    Some((o, e)) => (o, Some(e)),
                    None => (rest, None),
                };
                let order: u32 = ord_str.parse().map_err(|_| bad("bad order in zN"))?;
                if order == 0 {
                    return Err(bad("order must be positive"));
                }
                let k: i64 = match exp_str {
                    Some(e) => e.parse().map_err(|_| bad("bad exponent"))?,
                    None => 1,
                };
                Cyclotomic::root_of_unity(order, k) * Cyclotomic::from_rational(coef)
            }
        };
        acc = acc + value;
    }
    Ok(acc)
}

/// Parse `p`, `-p`, or `p/q` as an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// Euler's totient, via the reduction table (degree of `Q(zeta_n)`).
pub fn euler_phi(n: u32) -> usize {
    table(n).phi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(order: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(order, k)
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let i = zeta(4, 1);
        assert_eq!(i.clone() * i, Cyclotomic::from_int(-1));
    }

    #[test]
    fn primitive_fifth_roots_sum_to_minus_one() {
        let sum = (1..=4).fold(Cyclotomic::zero(), |acc, k| acc + zeta(5, k));
        assert_eq!(sum, Cyclotomic::from_int(-1));
    }

    #[test]
    fn conjugate_of_zeta8() {
        assert_eq!(zeta(8, 1).conjugate(), zeta(8, 7));
    }

    #[test]
    fn conjugation_is_involutive() {
        let x = zeta(12, 1) + zeta(12, 5).div_int(3) + Cyclotomic::from_int(2);
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let x = zeta(8, 1) + Cyclotomic::from_int(2);
        let inv = x.inverse().unwrap();
        assert_eq!(x * inv, Cyclotomic::one());
        assert!(Cyclotomic::zero_of(8).inverse().is_err());
    }

    #[test]
    fn cross_order_equality() {
        // zeta_4 expressed at order 4 and at order 12
        assert_eq!(zeta(4, 1), zeta(12, 3));
        assert_eq!(zeta(3, 1) + zeta(3, 2), Cyclotomic::from_int(-1));
    }

    #[test]
    fn embedding_requires_divisibility() {
        assert!(zeta(5, 1).embed_into(8).is_err());
        assert!(zeta(5, 1).embed_into(20).is_ok());
        // rationals embed anywhere
        assert!(Cyclotomic::from_int(3).embed_into(7).is_ok());
    }

    #[test]
    fn literal_round_trip() {
        let x = parse_cyclotomic("1/2*z8^1 + 1/2*z8^7").unwrap();
        assert!(x.is_real());
        let printed = x.to_string();
        assert_eq!(parse_cyclotomic(&printed).unwrap(), x);
        assert_eq!(parse_cyclotomic("-1").unwrap(), Cyclotomic::from_int(-1));
        assert_eq!(parse_cyclotomic("0").unwrap(), Cyclotomic::zero());
        assert_eq!(parse_cyclotomic("z4").unwrap(), zeta(4, 1));
        assert!(parse_cyclotomic("z0^1").is_err());
        assert!(parse_cyclotomic("1//2").is_err());
    }

    #[test]
    fn numeric_embedding_matches() {
        let sqrt2 = zeta(8, 1) + zeta(8, 7);
        let v = sqrt2.to_complex();
        assert!((v.re - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn totients() {
        for (n, phi) in [(1, 1), (2, 1), (4, 2), (8, 4), (12, 4), (20, 8), (120, 32)] {
            assert_eq!(euler_phi(n), phi);
        }
    }
}
