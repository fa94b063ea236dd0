//! The spinor frame, rotation matrices from `SU(2)` elements, and exact
//! verification of the 2-to-1 double cover onto a rotation group.
//!
//! A spin matrix `U` acts on the symmetric frame triple
//! `g = (I + s3, sqrt(2) s1, I - s3)/2` by `g_i -> U^T g_i U`; expanding
//! the images over the frame gives a 3x3 matrix which is the spin-1
//! rotation in the spherical basis. A fixed unitary change of basis turns
//! it into the Cartesian rotation that catalog vector groups use.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::One;

use crate::algebra::{Cyclotomic, Matrix};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::scalar::Scalar;

/// The fixed frame triple of Eq.-style `g` matrices and the Pauli
/// matrices, all over `Q(zeta_N)` with `8 | N`.
pub struct SpinorFrame {
    pub order: u32,
    pub g: [Matrix<Cyclotomic>; 3],
    pub sigma: [Matrix<Cyclotomic>; 3],
}

impl SpinorFrame {
    /// Build the frame at cyclotomic order `n` (requires `8 | n` for
    /// `sqrt(2)` and `i`).
    pub fn new(n: u32) -> Result<Self> {
        if n % 8 != 0 {
            return Err(Error::BadEmbedding { from: 8, to: n });
        }
        let zero = || Cyclotomic::zero_of(n);
        let one = || Cyclotomic::one().embed_into(n).unwrap();
        let i = Cyclotomic::root_of_unity(4, 1).embed_into(n).unwrap();
        // sqrt(2)/2 = (z8 + z8^7)/2
        let s = (Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7))
            .div_int(2)
            .embed_into(n)
            .unwrap();
        let g1 = Matrix::from_rows(vec![vec![one(), zero()], vec![zero(), zero()]]);
        let g2 = Matrix::from_rows(vec![vec![zero(), s.clone()], vec![s, zero()]]);
        let g3 = Matrix::from_rows(vec![vec![zero(), zero()], vec![zero(), one()]]);
        let s1 = Matrix::from_rows(vec![vec![zero(), one()], vec![one(), zero()]]);
        let s2 = Matrix::from_rows(vec![vec![zero(), -i.clone()], vec![i.clone(), zero()]]);
        let s3 = Matrix::from_rows(vec![vec![one(), zero()], vec![zero(), -one()]]);
        Ok(SpinorFrame {
            order: n,
            g: [g1, g2, g3],
            sigma: [s1, s2, s3],
        })
    }

    /// `sqrt(2)` in this frame's field.
    fn sqrt2(&self) -> Cyclotomic {
        (Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7))
            .embed_into(self.order)
            .unwrap()
    }

    /// The spin-1 rotation of a spin matrix in the frame (spherical)
    /// basis: row `i` holds the coordinates of `U^T g_i U` over the frame.
    pub fn rotation_spherical(&self, u: &Matrix<Cyclotomic>) -> Result<Matrix<Cyclotomic>> {
        let u = crate::groups::embed_matrix(u, self.order)?;
        let ut = u.transpose();
        let sqrt2 = self.sqrt2();
        let mut rows = Vec::with_capacity(3);
        for gi in &self.g {
            let m = ut.mul(gi).mul(&u);
            // images stay symmetric; coordinates over the frame are
            // (m00, sqrt(2) m01, m11)
            debug_assert_eq!(m[(0, 1)], m[(1, 0)]);
            rows.push(vec![
                m[(0, 0)].clone(),
                m[(0, 1)].clone() * sqrt2.clone(),
                m[(1, 1)].clone(),
            ]);
        }
        Ok(Matrix::from_rows(rows))
    }

    /// Unitary change of basis from spherical (frame) coordinates to
    /// Cartesian ones: columns are `e_{+1}, e_0, e_{-1}`.
    fn spherical_to_cartesian(&self) -> Matrix<Cyclotomic> {
        let n = self.order;
        let zero = || Cyclotomic::zero_of(n);
        let one = || Cyclotomic::one().embed_into(n).unwrap();
        let i = Cyclotomic::root_of_unity(4, 1).embed_into(n).unwrap();
        // 1/sqrt(2) = sqrt(2)/2
        let r = self.sqrt2().div_int(2);
        Matrix::from_rows(vec![
            vec![-r.clone(), zero(), r.clone()],
            vec![-i.clone() * r.clone(), zero(), -i * r],
            vec![zero(), one(), zero()],
        ])
    }

    /// The Cartesian rotation matrix corresponding to a spin matrix.
    pub fn rotation_cartesian(&self, u: &Matrix<Cyclotomic>) -> Result<Matrix<Cyclotomic>> {
        let rg = self.rotation_spherical(u)?;
        let a = self.spherical_to_cartesian();
        Ok(a.mul(&rg).mul(&a.dagger()))
    }
}

/// Outcome of a successful double-cover verification.
#[derive(Debug, Clone)]
pub struct CoverReport {
    pub spin_order: usize,
    pub vec_order: usize,
    pub field_order: u32,
}

/// Verify that `spin` (2x2) covers `vec` (3x3) exactly 2-to-1 via the
/// frame construction: the image of every spin matrix lies in `vec`,
/// `+U` and `-U` land on the same rotation, the kernel is `{I, -I}`, and
/// every rotation is hit exactly twice.
pub fn verify_double_cover(spin: &FiniteGroup, vec: &FiniteGroup) -> Result<CoverReport> {
    if spin.dim() != 2 || vec.dim() != 3 {
        return Err(Error::CoverFailure(format!(
            "expected dim 2 covering dim 3, got {} and {}",
            spin.dim(),
            vec.dim()
        )));
    }
    let Some(minus) = spin.minus_identity() else {
        return Err(Error::CoverFailure(
            "spin group does not contain -I; kernel cannot be {+I, -I}".into(),
        ));
    };
    if spin.order() != 2 * vec.order() {
        return Err(Error::CoverFailure(format!(
            "spin order {} is not twice the rotation order {}",
            spin.order(),
            vec.order()
        )));
    }
    let l = lcm3(spin.field_order(), vec.field_order(), 8);
    let frame = SpinorFrame::new(l)?;

    // index the rotation group in the big field
    let mut rot_index: HashMap<Vec<BigRational>, usize> = HashMap::new();
    for (i, m) in vec.elements().iter().enumerate() {
        rot_index.insert(flat(m, l)?, i);
    }

    let mut hits: Vec<Vec<usize>> = std::iter::repeat_with(Vec::new)
        .take(vec.order())
        .collect();
    for (ui, u) in spin.elements().iter().enumerate() {
        let r = frame.rotation_cartesian(u)?;
        let Some(&ri) = rot_index.get(&flat(&r, l)?) else {
            return Err(Error::CoverFailure(format!(
                "image of spin element {ui} is not in the rotation group"
            )));
        };
        hits[ri].push(ui);
    }

    for (ri, pre) in hits.iter().enumerate() {
        if pre.len() != 2 {
            return Err(Error::CoverFailure(format!(
                "rotation {ri} has {} preimages instead of 2",
                pre.len()
            )));
        }
        // the two preimages must be U and -U
        let partner = spin.mul_index(minus, pre[0]);
        if partner != pre[1] {
            return Err(Error::CoverFailure(format!(
                "preimages of rotation {ri} are not a +/- pair"
            )));
        }
    }
    // kernel = {I, -I}: identity rotation is element 0 of vec
    let kernel = &hits[0];
    if !(kernel.contains(&0) && kernel.contains(&minus)) {
        return Err(Error::CoverFailure(
            "kernel of the covering map is not {+I, -I}".into(),
        ));
    }

    Ok(CoverReport {
        spin_order: spin.order(),
        vec_order: vec.order(),
        field_order: l,
    })
}

fn lcm3(a: u32, b: u32, c: u32) -> u32 {
    let ab = (a as u64).lcm(&(b as u64));
    ab.lcm(&(c as u64)) as u32
}

fn flat(m: &Matrix<Cyclotomic>, order: u32) -> crate::error::Result<Vec<BigRational>> {
    let mut key = Vec::new();
    for e in m.entries() {
        let e = e.embed_into(order)?;
        key.extend(e.coeffs().iter().cloned());
    }
    Ok(key)
}

/// Euler angles as rational multiples of pi, reduced modulo `4 pi`
/// (the double-group period).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerAngles {
    pub alpha: Rational64,
    pub beta: Rational64,
    pub gamma: Rational64,
}

impl EulerAngles {
    pub fn new(alpha: Rational64, beta: Rational64, gamma: Rational64) -> Self {
        fn reduce(r: Rational64) -> Rational64 {
            let four = Rational64::new(4, 1);
            let mut x = r;
            while x >= four {
                x -= four;
            }
            while x < Rational64::new(0, 1) {
                x += four;
            }
            x
        }
        EulerAngles {
            alpha: reduce(alpha),
            beta: reduce(beta),
            gamma: reduce(gamma),
        }
    }

    /// The spin-1/2 rotation matrix at these angles over `Q(zeta_n)`:
    /// the product of z-, y-, z-axis half-angle factors.
    pub fn wigner_half(&self, n: u32) -> Result<Matrix<Cyclotomic>> {
        let half = |r: Rational64| Rational64::new(*r.numer(), *r.denom() * 2);
        let sum_half = half(self.alpha + self.gamma);
        let dif_half = half(self.alpha - self.gamma);
        let beta_half = half(self.beta);
        let c = cos_pi(beta_half, n)?;
        let s = sin_pi(beta_half, n)?;
        let e_sum_m = exp_i_pi(-sum_half, n)?;
        let e_sum_p = exp_i_pi(sum_half, n)?;
        let e_dif_m = exp_i_pi(-dif_half, n)?;
        let e_dif_p = exp_i_pi(dif_half, n)?;
        Ok(Matrix::from_rows(vec![
            vec![e_sum_m * c.clone(), -(e_dif_m * s.clone())],
            vec![e_dif_p * s, e_sum_p * c],
        ]))
    }
}

/// `exp(i pi r)` as an exact root of unity in `Q(zeta_n)`.
pub fn exp_i_pi(r: Rational64, n: u32) -> Result<Cyclotomic> {
    let reduced = r.reduced();
    let q = *reduced.denom();
    let p = *reduced.numer();
    // e^{i pi p/q} = zeta_{2q}^p
    let order = (2 * q) as u32;
    Cyclotomic::root_of_unity(order, p).embed_into(n)
}

/// `cos(pi r)` exactly.
pub fn cos_pi(r: Rational64, n: u32) -> Result<Cyclotomic> {
    Ok((exp_i_pi(r, n)? + exp_i_pi(-r, n)?).div_int(2))
}

/// `sin(pi r)` exactly.
pub fn sin_pi(r: Rational64, n: u32) -> Result<Cyclotomic> {
    let i_inv = Cyclotomic::root_of_unity(4, 3).embed_into(n)?; // 1/(i)
    Ok((exp_i_pi(r, n)? - exp_i_pi(-r, n)?).div_int(2) * i_inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_matches_definition() {
        let f = SpinorFrame::new(8).unwrap();
        // g1 + g3 = I, g2 = sqrt(2)/2 * sigma1
        let sum = f.g[0].add(&f.g[2]);
        assert_eq!(sum, Matrix::identity(2));
        let s = f.sigma[0].scale(&f.sqrt2().div_int(2));
        assert_eq!(f.g[1], s);
        for k in 0..3 {
            assert_eq!(f.sigma[k].mul(&f.sigma[k]), Matrix::identity(2));
        }
    }

    #[test]
    fn minus_identity_maps_to_identity_rotation() {
        let f = SpinorFrame::new(8).unwrap();
        let minus: Matrix<Cyclotomic> = Matrix::identity(2).neg();
        let r = f.rotation_cartesian(&minus).unwrap();
        assert_eq!(r, Matrix::identity(3));
    }

    #[test]
    fn half_turn_about_z() {
        // D^{1/2}(pi, 0, 0) = diag(zeta_4^-1, zeta_4) maps to the
        // Cartesian rotation by pi about z
        let angles = EulerAngles::new(
            Rational64::new(1, 1),
            Rational64::new(0, 1),
            Rational64::new(0, 1),
        );
        let u = angles.wigner_half(8).unwrap();
        let expect = Matrix::from_rows(vec![
            vec![Cyclotomic::root_of_unity(4, 3), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), Cyclotomic::root_of_unity(4, 1)],
        ]);
        assert_eq!(u, expect);

        let f = SpinorFrame::new(8).unwrap();
        let r = f.rotation_cartesian(&u).unwrap();
        let m1 = Cyclotomic::from_int(-1);
        let rz_pi = Matrix::from_rows(vec![
            vec![m1.clone(), Cyclotomic::zero(), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), m1, Cyclotomic::zero()],
            vec![Cyclotomic::zero(), Cyclotomic::zero(), Cyclotomic::one()],
        ]);
        assert_eq!(r, rz_pi);
    }

    #[test]
    fn two_pi_rotation_is_minus_identity() {
        let angles = EulerAngles::new(
            Rational64::new(2, 1),
            Rational64::new(0, 1),
            Rational64::new(0, 1),
        );
        let u = angles.wigner_half(8).unwrap();
        assert_eq!(u, Matrix::<Cyclotomic>::identity(2).neg());
    }
}
