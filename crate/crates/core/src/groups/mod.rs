//! Finite unitary matrix groups: closure from generators, conjugacy
//! classes, character tables, the curated catalog, and the spin double
//! cover.

pub mod catalog;
pub mod chartab;
pub mod lift;
pub mod spinor;

pub use catalog::{Catalog, GroupData, NamedRep};
pub use chartab::{CharacterTable, Irrep, IrrepKind};
pub use lift::lift_numeric;
pub use spinor::{verify_double_cover, CoverReport, EulerAngles, SpinorFrame};

use std::collections::HashMap;

use num_rational::{BigRational, Rational64};

use crate::algebra::{Cyclotomic, Matrix};
use crate::error::{Error, Result};

/// One conjugacy class of a closed group.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Catalog name, or a synthesized `cl<k>` label.
    pub name: String,
    /// Index of the canonical representative (smallest element index).
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
    /// Common order of the members.
    pub element_order: usize,
    /// Defining-representation trace (a class function).
    pub trace: Cyclotomic,
    /// Rotation angle as a rational multiple of pi, when the group is a
    /// rotation or double-rotation group with catalog angles.
    pub angle: Option<Rational64>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite group of unitary matrices, closed under products, with its
/// canonical conjugacy-class structure.
///
/// Element 0 is always the identity. Every element carries the generator
/// word that produced it during breadth-first closure, so auxiliary
/// representations can be evaluated element-by-element.
pub struct FiniteGroup {
    dim: usize,
    field_order: u32,
    elements: Vec<Matrix<Cyclotomic>>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<BigRational>, usize>,
    inverse: Vec<usize>,
    minus_identity: Option<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

fn flat_key(m: &Matrix<Cyclotomic>, order: u32) -> Vec<BigRational> {
    // canonicalize every entry to the group field so structurally
    // different representations of the same value hash identically
    let mut key = Vec::new();
    for e in m.entries() {
        let e = e.embed_into(order).expect("entry embeds into the group field");
        key.extend(e.coeffs().iter().cloned());
    }
    key
}

/// Embed every entry into `Q(zeta_order)`.
pub fn embed_matrix(m: &Matrix<Cyclotomic>, order: u32) -> Result<Matrix<Cyclotomic>> {
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = m[(i, j)].embed_into(order)?;
        }
    }
    Ok(out)
}

/// Close a generating set of unitary matrices into a finite group.
///
/// All generators are embedded into `Q(zeta_field_order)` first; the
/// closure aborts once it exceeds `max_order` elements, which signals an
/// infinite or mis-specified group.
pub fn close_group(
    generators: &[Matrix<Cyclotomic>],
    field_order: u32,
    max_order: usize,
) -> Result<FiniteGroup> {
    if generators.is_empty() {
        return Err(Error::DimensionMismatch);
    }
    let dim = generators[0].rows();
    let mut gens = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        if !g.is_square() || g.rows() != dim {
            return Err(Error::DimensionMismatch);
        }
        let g = embed_matrix(g, field_order)?;
        if !g.is_unitary() {
            return Err(Error::NonUnitaryGenerator { index: i });
        }
        gens.push(g);
    }

    let identity = embed_matrix(&Matrix::identity(dim), field_order)?;
    let mut elements = vec![identity];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut index = HashMap::new();
    index.insert(flat_key(&elements[0], field_order), 0usize);

    let mut cursor = 0usize;
    while cursor < elements.len() {
        for (gi, g) in gens.iter().enumerate() {
            let prod = elements[cursor].mul(g);
            let key = flat_key(&prod, field_order);
            if !index.contains_key(&key) {
                if elements.len() >= max_order {
                    return Err(Error::ClosureExceeded { max: max_order });
                }
                let mut w = words[cursor].clone();
                w.push(gi);
                index.insert(key, elements.len());
                elements.push(prod);
                words.push(w);
            }
        }
        cursor += 1;
    }

    // Unitary closure: the inverse is the conjugate transpose.
    let mut inverse = Vec::with_capacity(elements.len());
    for e in &elements {
        let inv_key = flat_key(&e.dagger(), field_order);
        let idx = *index
            .get(&inv_key)
            .expect("closed set contains its inverses");
        inverse.push(idx);
    }

    let minus_identity = index
        .get(&flat_key(
            &Matrix::<Cyclotomic>::identity(dim).neg(),
            field_order,
        ))
        .copied();

    let mut g = FiniteGroup {
        dim,
        field_order,
        elements,
        words,
        index,
        inverse,
        minus_identity,
        classes: vec![],
        class_of: vec![],
    };
    g.compute_classes(&gens);
    Ok(g)
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn elements(&self) -> &[Matrix<Cyclotomic>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix<Cyclotomic> {
        &self.elements[i]
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn has_minus_identity(&self) -> bool {
        self.minus_identity.is_some()
    }

    pub fn minus_identity(&self) -> Option<usize> {
        self.minus_identity
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub(crate) fn classes_mut(&mut self) -> &mut [ConjugacyClass] {
        &mut self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Index of a group element given its matrix, if present.
    pub fn find(&self, m: &Matrix<Cyclotomic>) -> Option<usize> {
        self.index.get(&flat_key(m, self.field_order)).copied()
    }

    /// Index of the product of two elements.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].mul(&self.elements[b]);
        *self
            .index
            .get(&flat_key(&prod, self.field_order))
            .expect("group is closed under products")
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, i: usize) -> usize {
        let mut cur = i;
        let mut n = 1;
        while cur != 0 {
            cur = self.mul_index(cur, i);
            n += 1;
            assert!(n <= self.order(), "element order exceeds group order");
        }
        n
    }

    fn compute_classes(&mut self, gens: &[Matrix<Cyclotomic>]) {
        let n = self.order();
        let mut assigned = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        let gen_indices: Vec<usize> = gens
            .iter()
            .map(|g| {
                *self
                    .index
                    .get(&flat_key(g, self.field_order))
                    .expect("generators are group members")
            })
            .collect();
        for start in 0..n {
            if assigned[start] != usize::MAX {
                continue;
            }
            let id = raw.len();
            let mut members = vec![start];
            assigned[start] = id;
            let mut queue = vec![start];
            while let Some(x) = queue.pop() {
                for &g in &gen_indices {
                    // g x g^{-1}
                    let y = self.mul_index(self.mul_index(g, x), self.inverse[g]);
                    if assigned[y] == usize::MAX {
                        assigned[y] = id;
                        members.push(y);
                        queue.push(y);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }

        let mut classes: Vec<ConjugacyClass> = raw
            .into_iter()
            .map(|members| {
                let representative = members[0];
                ConjugacyClass {
                    name: String::new(),
                    element_order: self.element_order(representative),
                    trace: self.elements[representative].trace(),
                    representative,
                    members,
                    angle: None,
                }
            })
            .collect();

        // Deterministic canonical order: element order, then size, then
        // canonical trace, then smallest member index.
        classes.sort_by(|a, b| {
            a.element_order
                .cmp(&b.element_order)
                .then(a.size().cmp(&b.size()))
                .then(a.trace.cmp_canonical(&b.trace))
                .then(a.representative.cmp(&b.representative))
        });
        for (k, c) in classes.iter_mut().enumerate() {
            c.name = format!("cl{k}");
        }
        let mut class_of = vec![0usize; n];
        for (k, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = k;
            }
        }
        self.classes = classes;
        self.class_of = class_of;
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteGroup(order={}, dim={}, field=Q(zeta_{}), classes={})",
            self.order(),
            self.dim,
            self.field_order,
            self.classes.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn z(order: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(order, k)
    }

    #[test]
    fn closure_of_minus_identity() {
        let m = Matrix::<Cyclotomic>::identity(2).neg();
        let g = close_group(&[m], 4, 10).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.has_minus_identity());
    }

    #[test]
    fn dicyclic_12_closure_and_classes() {
        // binary triangular dihedral: diag(e^{-i pi/3}, e^{i pi/3}) and a
        // half-turn lift about y
        let a = Matrix::from_rows(vec![
            vec![z(12, 10), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), z(12, 2)],
        ]);
        let b = Matrix::from_rows(vec![
            vec![Cyclotomic::zero(), Cyclotomic::from_int(-1)],
            vec![Cyclotomic::one(), Cyclotomic::zero()],
        ]);
        let g = close_group(&[a, b], 12, 100).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.classes().len(), 6);
        let total: usize = g.classes().iter().map(|c| c.size()).sum();
        assert_eq!(total, 12);
        // class trace constancy
        for c in g.classes() {
            for &m in &c.members {
                assert_eq!(g.element(m).trace(), c.trace);
            }
        }
        // all elements unitary
        for e in g.elements() {
            assert!(e.is_unitary());
        }
    }

    #[test]
    fn abelian_group_has_singleton_classes() {
        let a = Matrix::from_rows(vec![
            vec![z(4, 1), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), z(4, 3)],
        ]);
        let g = close_group(&[a], 4, 16).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.classes().iter().all(|c| c.size() == 1));
    }

    #[test]
    fn closure_limit_is_enforced() {
        let a = Matrix::from_rows(vec![
            vec![z(12, 10), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), z(12, 2)],
        ]);
        let b = Matrix::from_rows(vec![
            vec![Cyclotomic::zero(), Cyclotomic::from_int(-1)],
            vec![Cyclotomic::one(), Cyclotomic::zero()],
        ]);
        assert!(matches!(
            close_group(&[a, b], 12, 5),
            Err(Error::ClosureExceeded { max: 5 })
        ));
    }

    #[test]
    fn non_unitary_generator_rejected() {
        let m = Matrix::from_rows(vec![
            vec![Cyclotomic::from_int(2), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), Cyclotomic::from_int(1)],
        ]);
        assert!(matches!(
            close_group(&[m], 4, 10),
            Err(Error::NonUnitaryGenerator { index: 0 })
        ));
    }
}
