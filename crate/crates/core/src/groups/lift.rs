//! Numeric lifting of a rotation group to its binary double group.
//!
//! The catalog is the primary source of double groups; this is the
//! secondary path for user-supplied rotation groups. For each rotation
//! the axis/angle data is extracted through the quaternion component
//! products, which are exact linear expressions in the matrix entries.
//! Only one square root per element leaves the rational expressions; it
//! is proposed in floating point and then verified exactly, so a value
//! outside `Q(zeta_N)` raises instead of being rounded silently.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{euler_phi, Cyclotomic, Matrix};
use crate::error::{Error, Result};
use crate::groups::spinor::verify_double_cover;
use crate::groups::{close_group, FiniteGroup};
use crate::scalar::Scalar;

/// Lift a rotation group (3x3 proper rotations) into `SU(2)`, producing
/// the binary double group over `Q(zeta_target_order)`.
///
/// Both signs `+U` and `-U` are included for every rotation, which the
/// double group requires anyway and which makes the one square-root sign
/// choice per element immaterial. The result is checked against
/// [`verify_double_cover`] before being returned.
pub fn lift_numeric(vec: &FiniteGroup, target_order: u32) -> Result<FiniteGroup> {
    if vec.dim() != 3 {
        return Err(Error::ExactificationFailure(
            "lift expects a 3x3 rotation group".into(),
        ));
    }
    if target_order % 4 != 0 {
        return Err(Error::ExactificationFailure(format!(
            "target order {target_order} lacks i; use a multiple of 4"
        )));
    }
    if euler_phi(target_order) > 16 {
        return Err(Error::ExactificationFailure(format!(
            "target field Q(zeta_{target_order}) is too large for the numeric lift"
        )));
    }
    let mut lifts = Vec::with_capacity(2 * vec.order());
    for (idx, r) in vec.elements().iter().enumerate() {
        // proper rotation check: det(I - R x) has constant-free form; use
        // det via the characteristic polynomial instead: det(R) = 1
        let det = determinant3(r);
        if det != Cyclotomic::one() {
            return Err(Error::ExactificationFailure(format!(
                "element {idx} is not a proper rotation (det != 1)"
            )));
        }
        let u = lift_one(r, target_order)
            .map_err(|e| Error::ExactificationFailure(format!("element {idx}: {e}")))?;
        lifts.push(u.clone());
        lifts.push(u.neg());
    }
    let lifted = close_group(&lifts, target_order, 2 * vec.order())?;
    if lifted.order() != 2 * vec.order() {
        return Err(Error::ExactificationFailure(format!(
            "lifted set closed to {} elements, expected {}",
            lifted.order(),
            2 * vec.order()
        )));
    }
    verify_double_cover(&lifted, vec)?;
    Ok(lifted)
}

fn determinant3(m: &Matrix<Cyclotomic>) -> Cyclotomic {
    let p = m.det_one_minus_lambda().expect("square");
    // det(I - R) expansion: det(R) = -coeff_3 of det(I - R lambda) ... the
    // top coefficient is (-1)^3 det(R)
    -p.coeff(3)
}

/// One rotation to one `SU(2)` representative (sign arbitrary).
fn lift_one(r: &Matrix<Cyclotomic>, target: u32) -> Result<Matrix<Cyclotomic>> {
    // all ten quaternion component products, exact in the source field
    let quarter = |x: Cyclotomic| x.div_int(4);
    let one = Cyclotomic::one();
    let tr = r.trace();
    let qq = |a: usize, b: usize| -> Cyclotomic {
        // q_a * q_b for a <= b, from the standard rotation-matrix relations
        match (a, b) {
            (0, 0) => quarter(one.clone() + tr.clone()),
            (0, 1) => quarter(r[(2, 1)].clone() - r[(1, 2)].clone()),
            (0, 2) => quarter(r[(0, 2)].clone() - r[(2, 0)].clone()),
            (0, 3) => quarter(r[(1, 0)].clone() - r[(0, 1)].clone()),
            (1, 1) => quarter(one.clone() + r[(0, 0)].clone() - r[(1, 1)].clone() - r[(2, 2)].clone()),
            (2, 2) => quarter(one.clone() - r[(0, 0)].clone() + r[(1, 1)].clone() - r[(2, 2)].clone()),
            (3, 3) => quarter(one.clone() - r[(0, 0)].clone() - r[(1, 1)].clone() + r[(2, 2)].clone()),
            (1, 2) => quarter(r[(0, 1)].clone() + r[(1, 0)].clone()),
            (1, 3) => quarter(r[(0, 2)].clone() + r[(2, 0)].clone()),
            (2, 3) => quarter(r[(1, 2)].clone() + r[(2, 1)].clone()),
            _ => unreachable!(),
        }
    };

    // pivot on the numerically largest diagonal product
    let diag: Vec<Cyclotomic> = (0..4).map(|a| qq(a, a)).collect();
    let pivot = (0..4)
        .max_by(|&a, &b| {
            diag[a]
                .to_complex()
                .re
                .partial_cmp(&diag[b].to_complex().re)
                .unwrap()
        })
        .unwrap();

    let pivot_sq = convert_to_order(&diag[pivot], target)?;
    let s = sqrt_in_field(&pivot_sq)?;
    let s_inv = s.inverse().map_err(|_| {
        Error::ExactificationFailure("zero pivot in quaternion extraction".into())
    })?;

    let mut q = Vec::with_capacity(4);
    for b in 0..4 {
        let prod = if b <= pivot { qq(b, pivot) } else { qq(pivot, b) };
        let prod = convert_to_order(&prod, target)?;
        q.push(prod * s_inv.clone());
    }

    // U = q0 I - i (q1 s1 + q2 s2 + q3 s3)
    let i = Cyclotomic::root_of_unity(4, 1).embed_into(target)?;
    let w = q[0].clone();
    let (x, y, z) = (q[1].clone(), q[2].clone(), q[3].clone());
    let u = Matrix::from_rows(vec![
        vec![
            w.clone() - i.clone() * z.clone(),
            -(i.clone() * x.clone()) - y.clone(),
        ],
        vec![
            -(i.clone() * x.clone()) + y.clone(),
            w + i * z,
        ],
    ]);
    if !u.is_unitary() {
        return Err(Error::ExactificationFailure(
            "reconstructed lift is not unitary".into(),
        ));
    }
    Ok(u)
}

/// Re-express an exact cyclotomic in `Q(zeta_target)`, going through the
/// compositum and solving an exact linear system when the orders are
/// incomparable. Fails when the value does not lie in the target field.
pub fn convert_to_order(c: &Cyclotomic, target: u32) -> Result<Cyclotomic> {
    if c.order() == target {
        return Ok(c.clone());
    }
    if let Ok(e) = c.embed_into(target) {
        return Ok(e);
    }
    let l = num_integer::lcm(c.order() as u64, target as u64) as u32;
    let cl = c.embed_into(l)?;
    let phi_l = euler_phi(l);
    let phi_t = euler_phi(target);
    // columns: canonical coordinates of zeta_target^k inside Q(zeta_l)
    let mut cols = Vec::with_capacity(phi_t);
    for k in 0..phi_t {
        let b = Cyclotomic::root_of_unity(target, k as i64).embed_into(l)?;
        cols.push(b.coeffs().to_vec());
    }
    let rhs = cl.coeffs().to_vec();
    let sol = solve_rational(&cols, &rhs, phi_l).ok_or_else(|| {
        Error::ExactificationFailure(format!(
            "value {c} is not an element of Q(zeta_{target})"
        ))
    })?;
    let mut out = Cyclotomic::zero_of(target);
    for (k, x) in sol.into_iter().enumerate() {
        if !x.is_zero() {
            out = out
                + Cyclotomic::root_of_unity(target, k as i64)
                    * Cyclotomic::from_rational_of(x, target);
        }
    }
    Ok(out)
}

/// Solve `cols * x = rhs` exactly over `Q`; `cols` are column vectors of
/// length `rows`. Returns `None` when inconsistent.
fn solve_rational(
    cols: &[Vec<BigRational>],
    rhs: &[BigRational],
    rows: usize,
) -> Option<Vec<BigRational>> {
    let n = cols.len();
    // augmented row-major matrix
    let mut a = vec![vec![BigRational::zero(); n + 1]; rows];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..rows {
            a[i][j] = col[i].clone();
        }
    }
    for i in 0..rows {
        a[i][n] = rhs[i].clone();
    }
    let mut pivot_of_col = vec![usize::MAX; n];
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for j in col..=n {
            a[row][j] = &a[row][j] * &inv;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..=n {
                    let d = &f * &a[row][j];
                    a[r][j] = &a[r][j] - d;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
        if row == rows {
            break;
        }
    }
    // consistency: no row of zeros with nonzero rhs
    for r in 0..rows {
        if a[r][..n].iter().all(|c| c.is_zero()) && !a[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for col in 0..n {
        if pivot_of_col[col] != usize::MAX {
            x[col] = a[pivot_of_col[col]][n].clone();
        }
    }
    Some(x)
}

/// Exact square root in `Q(zeta_N)`, proposed numerically across all
/// complex embeddings and verified exactly. Returns an error when no
/// square root exists in the field.
pub fn sqrt_in_field(c: &Cyclotomic) -> Result<Cyclotomic> {
    if c.is_zero() {
        return Ok(Cyclotomic::zero_of(c.order()));
    }
    let n = c.order();
    let phi = euler_phi(n);
    if phi > 16 {
        return Err(Error::ExactificationFailure(format!(
            "square-root search not supported for phi({n}) > 16"
        )));
    }
    // units of Z/n in ascending order; embeddings come in conjugate pairs
    let units: Vec<u32> = (1..n.max(2))
        .filter(|a| num_integer::gcd(*a as u64, n as u64) == 1)
        .collect();
    let reps: Vec<u32> = units
        .iter()
        .copied()
        .filter(|&a| a <= n - a || n <= 2)
        .collect();

    // target values at each embedding, exact then numeric
    let sigma_c: Vec<Complex64> = units
        .iter()
        .map(|&a| if n <= 2 { c.to_complex() } else { c.galois(a).to_complex() })
        .collect();

    // Vandermonde: row per embedding a, column per basis power k
    let mut v = vec![vec![Complex64::new(0.0, 0.0); phi]; phi];
    for (r, &a) in units.iter().enumerate() {
        for k in 0..phi {
            let angle = 2.0 * std::f64::consts::PI * (a as f64) * (k as f64) / n as f64;
            v[r][k] = Complex64::new(angle.cos(), angle.sin());
        }
    }
    let vinv = invert_complex(&v).ok_or_else(|| {
        Error::ExactificationFailure("embedding matrix is singular".into())
    })?;

    let base_sqrt: Vec<Complex64> = sigma_c.iter().map(|z| z.sqrt()).collect();
    let combos = 1usize << reps.len();
    for mask in 0..combos {
        // choose a sign per representative, force conjugate symmetry
        let mut values = vec![Complex64::new(0.0, 0.0); units.len()];
        for (ri, &a) in reps.iter().enumerate() {
            let sgn = if mask >> ri & 1 == 1 { -1.0 } else { 1.0 };
            let pos = units.iter().position(|&u| u == a).unwrap();
            values[pos] = base_sqrt[pos] * sgn;
            if n > 2 {
                let conj_a = n - a;
                if conj_a != a {
                    let cpos = units.iter().position(|&u| u == conj_a).unwrap();
                    values[cpos] = values[pos].conj();
                }
            }
        }
        // coefficients = V^{-1} values
        let mut coeffs = Vec::with_capacity(phi);
        let mut plausible = true;
        for r in 0..phi {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..phi {
                acc += vinv[r][k] * values[k];
            }
            if acc.im.abs() > 1e-6 {
                plausible = false;
                break;
            }
            match rational_reconstruct(acc.re, 1_000_000) {
                Some(q) => coeffs.push(q),
                None => {
                    plausible = false;
                    break;
                }
            }
        }
        if !plausible {
            continue;
        }
        let mut candidate = Cyclotomic::zero_of(n);
        for (k, q) in coeffs.into_iter().enumerate() {
            if !q.is_zero() {
                candidate = candidate
                    + Cyclotomic::root_of_unity(n, k as i64)
                        * Cyclotomic::from_rational_of(q, n);
            }
        }
        if candidate.clone() * candidate.clone() == *c {
            return Ok(candidate);
        }
    }
    Err(Error::ExactificationFailure(format!(
        "{c} has no square root in Q(zeta_{n})"
    )))
}

fn invert_complex(m: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Complex64>> = m.to_vec();
    let mut inv: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).max_by(|&x, &y| {
            a[x][col]
                .norm_sqr()
                .partial_cmp(&a[y][col].norm_sqr())
                .unwrap()
        })?;
        if a[p][col].norm_sqr() < 1e-20 {
            return None;
        }
        a.swap(col, p);
        inv.swap(col, p);
        let s = a[col][col].inv();
        for j in 0..n {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f.norm_sqr() > 0.0 {
                    for j in 0..n {
                        let d1 = f * a[col][j];
                        a[r][j] -= d1;
                        let d2 = f * inv[col][j];
                        inv[r][j] -= d2;
                    }
                }
            }
        }
    }
    Some(inv)
}

/// Nearest rational with bounded denominator, by continued fractions;
/// `None` when nothing within `1e-9 * max(1, |x|)` fits.
fn rational_reconstruct(x: f64, max_den: i64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let tol = 1e-9 * x.abs().max(1.0);
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, x.floor() as i64, 1i64);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() <= tol {
            return Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)));
        }
        if frac.abs() < 1e-15 {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        let a = a as i64;
        let (p2, q2) = (a.checked_mul(p1)?.checked_add(p0)?, a.checked_mul(q1)?.checked_add(q0)?);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if q1 > max_den {
            return None;
        }
    }
    let approx = p1 as f64 / q1 as f64;
    if (approx - x).abs() <= tol {
        Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_two_lives_in_zeta8() {
        let two = Cyclotomic::from_int(2).embed_into(8).unwrap();
        let r = sqrt_in_field(&two).unwrap();
        assert_eq!(r.clone() * r.clone(), two);
    }

    #[test]
    fn sqrt_of_two_fails_in_zeta5() {
        let two = Cyclotomic::from_int(2).embed_into(5).unwrap();
        assert!(sqrt_in_field(&two).is_err());
    }

    #[test]
    fn rational_reconstruction() {
        assert_eq!(
            rational_reconstruct(0.5, 100).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            rational_reconstruct(-0.25, 100).unwrap(),
            BigRational::new((-1).into(), 4.into())
        );
        assert!(rational_reconstruct(std::f64::consts::PI, 10).is_none());
    }

    #[test]
    fn conversion_between_incomparable_orders() {
        // sqrt(5) written in Q(zeta_5) converts to Q(zeta_20) and back
        let sqrt5 = Cyclotomic::root_of_unity(5, 1) - Cyclotomic::root_of_unity(5, 2)
            - Cyclotomic::root_of_unity(5, 3)
            + Cyclotomic::root_of_unity(5, 4);
        let in20 = convert_to_order(&sqrt5, 20).unwrap();
        assert_eq!(in20.order(), 20);
        let back = convert_to_order(&in20, 5).unwrap();
        assert_eq!(back, sqrt5);
        // 1/2 + i sqrt(3)/2 = zeta_6 does not belong to Q(zeta_20)
        let z6 = Cyclotomic::root_of_unity(6, 1);
        assert!(convert_to_order(&z6, 20).is_err());
    }
}
