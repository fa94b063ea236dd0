//! Character tables and their exact orthogonality verification.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::scalar::Scalar;

/// Whether an irrep hosts half-integer angular momentum. Only meaningful
/// for double groups, where `-I` acts as `-1` on spinor irreps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IrrepKind {
    Vector,
    Spinor,
}

/// One row of a character table.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub name: String,
    pub kind: IrrepKind,
    /// Character values per conjugacy class, in the group's canonical
    /// class order.
    pub values: Vec<Cyclotomic>,
    pub dim: usize,
}

impl Irrep {
    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }
}

/// An irreducible character table, verified against its group.
pub struct CharacterTable {
    irreps: Vec<Irrep>,
    verified: bool,
}

impl CharacterTable {
    /// Build an unverified table. `values` rows follow the group's
    /// canonical class order; dimensions are read off the identity class.
    pub fn new(rows: Vec<(String, IrrepKind, Vec<Cyclotomic>)>) -> Result<Self> {
        let irreps = rows
            .into_iter()
            .map(|(name, kind, values)| {
                let dim = values
                    .first()
                    .and_then(|v| v.to_rational())
                    .and_then(|r| if r.is_integer() { r.to_integer().to_usize() } else { None })
                    .ok_or_else(|| {
                        Error::OrthogonalityFailure(format!(
                            "irrep {name}: identity character is not a positive integer"
                        ))
                    })?;
                if dim == 0 {
                    return Err(Error::OrthogonalityFailure(format!(
                        "irrep {name}: zero dimension"
                    )));
                }
                Ok(Irrep {
                    name,
                    kind,
                    values,
                    dim,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            irreps,
            verified: false,
        })
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn irrep_names(&self) -> Vec<&str> {
        self.irreps.iter().map(|i| i.name.as_str()).collect()
    }

    pub fn irrep(&self, name: &str) -> Option<&Irrep> {
        self.irreps.iter().find(|i| i.name == name)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Verify both orthogonality relations, the dimension sum, and the
    /// spinor flags against the `-I` column. All checks are exact.
    pub fn verify(&mut self, group: &FiniteGroup) -> Result<()> {
        let classes = group.classes();
        let g_order = group.order();
        if self.irreps.is_empty() {
            return Err(Error::OrthogonalityFailure("empty table".into()));
        }
        if self.irreps.len() != classes.len() {
            return Err(Error::OrthogonalityFailure(format!(
                "{} irreps vs {} classes",
                self.irreps.len(),
                classes.len()
            )));
        }
        for irrep in &self.irreps {
            if irrep.values.len() != classes.len() {
                return Err(Error::OrthogonalityFailure(format!(
                    "irrep {} has {} values for {} classes",
                    irrep.name,
                    irrep.values.len(),
                    classes.len()
                )));
            }
        }
        // identity class must be class 0 (order sorts it first)
        debug_assert_eq!(classes[0].element_order, 1);

        // sum of squared dimensions
        let dim_sq: usize = self.irreps.iter().map(|i| i.dim * i.dim).sum();
        if dim_sq != g_order {
            return Err(Error::OrthogonalityFailure(format!(
                "sum of squared dimensions {dim_sq} != group order {g_order}"
            )));
        }

        // row orthogonality
        for (ai, a) in self.irreps.iter().enumerate() {
            for (bi, b) in self.irreps.iter().enumerate().skip(ai) {
                let mut acc = Cyclotomic::zero();
                for (c, class) in classes.iter().enumerate() {
                    let term = a.values[c].clone()
                        * b.values[c].conjugate()
                        * Cyclotomic::from_int(class.size() as i64);
                    acc = acc + term;
                }
                let expected = if ai == bi { g_order as i64 } else { 0 };
                if acc != Cyclotomic::from_int(expected) {
                    return Err(Error::OrthogonalityFailure(format!(
                        "rows {} and {}: inner product {} != {}",
                        a.name, b.name, acc, expected
                    )));
                }
            }
        }

        // column orthogonality
        for (ci, cc) in classes.iter().enumerate() {
            for (cj, _) in classes.iter().enumerate().skip(ci) {
                let mut acc = Cyclotomic::zero();
                for irrep in &self.irreps {
                    acc = acc + irrep.values[ci].clone() * irrep.values[cj].conjugate();
                }
                let expected = if ci == cj {
                    let r = BigRational::new(
                        (g_order as i64).into(),
                        (cc.size() as i64).into(),
                    );
                    if !r.is_integer() || r.is_negative() {
                        return Err(Error::OrthogonalityFailure(format!(
                            "class size {} does not divide group order",
                            cc.size()
                        )));
                    }
                    Cyclotomic::from_rational(r)
                } else {
                    Cyclotomic::zero()
                };
                if acc != expected {
                    return Err(Error::OrthogonalityFailure(format!(
                        "columns {ci} and {cj}: inner product {acc} is wrong"
                    )));
                }
            }
        }

        // spinor flags against the -I column
        if let Some(minus) = group.minus_identity() {
            let mc = group.class_of(minus);
            for irrep in &self.irreps {
                let at_minus = &irrep.values[mc];
                let dim = irrep.dim as i64;
                let expected = match irrep.kind {
                    IrrepKind::Vector => Cyclotomic::from_int(dim),
                    IrrepKind::Spinor => Cyclotomic::from_int(-dim),
                };
                if *at_minus != expected {
                    return Err(Error::OrthogonalityFailure(format!(
                        "irrep {}: character at -I is {}, inconsistent with {:?} flag",
                        irrep.name, at_minus, irrep.kind
                    )));
                }
            }
        }

        self.verified = true;
        Ok(())
    }
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CharacterTable({} irreps, verified={})",
            self.irreps.len(),
            self.verified
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Matrix;
    use crate::groups::close_group;

    #[test]
    fn trivial_table_verifies() {
        let g = close_group(&[Matrix::<Cyclotomic>::identity(1)], 4, 2).unwrap();
        let mut t = CharacterTable::new(vec![(
            "A".into(),
            IrrepKind::Vector,
            vec![Cyclotomic::one()],
        )])
        .unwrap();
        t.verify(&g).unwrap();
        assert!(t.is_verified());
    }

    #[test]
    fn perturbed_value_fails_orthogonality() {
        // order-2 group {I, -I} in dim 1: irreps 1,1 and 1,-1
        let g = close_group(&[Matrix::<Cyclotomic>::identity(1).neg()], 4, 4).unwrap();
        let mut good = CharacterTable::new(vec![
            (
                "A".into(),
                IrrepKind::Vector,
                vec![Cyclotomic::one(), Cyclotomic::one()],
            ),
            (
                "B".into(),
                IrrepKind::Spinor,
                vec![Cyclotomic::one(), Cyclotomic::from_int(-1)],
            ),
        ])
        .unwrap();
        good.verify(&g).unwrap();

        let mut bad = CharacterTable::new(vec![
            (
                "A".into(),
                IrrepKind::Vector,
                vec![Cyclotomic::one(), Cyclotomic::one()],
            ),
            (
                "B".into(),
                IrrepKind::Spinor,
                vec![Cyclotomic::one(), Cyclotomic::one()],
            ),
        ])
        .unwrap();
        assert!(bad.verify(&g).is_err());
    }
}
