//! Finite groups materialized as multiplication tables.
//!
//! A group is built once from permutation generators; afterwards every
//! element is just an index into the Cayley table and all the heavy work
//! (subgroup enumeration, mark counting) runs on plain integers.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on group order during generator closure. Closure aborts with
/// [`Error::GroupTooLarge`] instead of grinding on when generators produce a
/// bigger group than the caller intended.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 10_000;

/// Identifies a group inside a catalog by `(order, id)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupLabel {
    pub order: usize,
    pub id: usize,
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.order, self.id)
    }
}

/// A finite group: elements are the indices `0..order`, with `0` the
/// identity, and multiplication is a table lookup.
///
/// Instances come from [`build_group`], so the table is a genuine group by
/// construction; [`validate`](FiniteGroup::validate) re-checks the axioms
/// directly and exists so tests can confirm that claim rather than trust it.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: `cayley[a * order + b]` is the product `a · b`.
    cayley: Vec<u16>,
    inverse: Vec<u16>,
    label: Option<GroupLabel>,
}

impl FiniteGroup {
    /// Index of the identity element.
    pub const IDENTITY: usize = 0;

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Product `a · b`. With elements realized as permutations this is
    /// function composition applying `b` first.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b] as usize
    }

    /// Inverse of `a`.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Conjugate `x⁻¹ · a · x`.
    #[inline]
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// Multiplicative order of element `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut n = 1;
        let mut x = a;
        while x != Self::IDENTITY {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Catalog label, if the group came from one.
    pub fn label(&self) -> Option<GroupLabel> {
        self.label
    }

    pub fn with_label(mut self, label: GroupLabel) -> Self {
        self.label = Some(label);
        self
    }

    /// Checks the group axioms directly on the table: identity at index 0,
    /// two-sided inverses, each row and column a bijection, and full
    /// associativity. O(order³), intended for tests and small groups.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        let fail = |reason: String| Err(Error::InvalidGroup { reason });
        if n == 0 {
            return fail("empty element set".into());
        }
        for a in 0..n {
            if self.mul(Self::IDENTITY, a) != a || self.mul(a, Self::IDENTITY) != a {
                return fail(format!("index 0 is not a two-sided identity at {a}"));
            }
            let b = self.inv(a);
            if self.mul(a, b) != Self::IDENTITY || self.mul(b, a) != Self::IDENTITY {
                return fail(format!("element {a} lacks a two-sided inverse"));
            }
        }
        // Latin square: every row and column hits each element exactly once.
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                let r = self.mul(a, b);
                let c = self.mul(b, a);
                if row[r] || col[c] {
                    return fail(format!("row or column {a} repeats a product"));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return fail(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Closes a generator list under composition, breadth-first from the
/// identity, multiplying on the right by the generators in the order given.
/// The returned list starts with the identity and its order is deterministic
/// for a given generator list.
pub fn close_generators(generators: &[Permutation]) -> Result<Vec<Permutation>> {
    close_generators_bounded(generators, DEFAULT_MAX_GROUP_ORDER)
}

/// [`close_generators`] with an explicit element bound.
pub fn close_generators_bounded(
    generators: &[Permutation],
    max_order: usize,
) -> Result<Vec<Permutation>> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidGroup {
            reason: "no generators given".into(),
        });
    };
    let degree = first.degree();
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }

    let mut elements = vec![Permutation::identity(degree)];
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    seen.insert(elements[0].images().to_vec(), 0);
    let mut i = 0;
    while i < elements.len() {
        for g in generators {
            let next = elements[i].compose(g)?;
            if !seen.contains_key(next.images()) {
                if elements.len() >= max_order {
                    return Err(Error::GroupTooLarge { bound: max_order });
                }
                seen.insert(next.images().to_vec(), elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    Ok(elements)
}

/// Builds a [`FiniteGroup`] from permutation generators: closes them under
/// composition and tabulates multiplication. Element index = position in the
/// breadth-first closure order, so index 0 is the identity.
pub fn build_group(generators: &[Permutation]) -> Result<FiniteGroup> {
    build_group_bounded(generators, DEFAULT_MAX_GROUP_ORDER)
}

/// [`build_group`] with an explicit element bound.
pub fn build_group_bounded(generators: &[Permutation], max_order: usize) -> Result<FiniteGroup> {
    let elements = close_generators_bounded(generators, max_order)?;
    let n = elements.len();
    let index: HashMap<&[u32], usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.images(), i))
        .collect();

    let mut cayley = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let product = elements[a].compose(&elements[b])?;
            cayley[a * n + b] = index[product.images()] as u16;
        }
    }
    let mut inverse = vec![0u16; n];
    for a in 0..n {
        let b = (0..n)
            .find(|&b| cayley[a * n + b] as usize == FiniteGroup::IDENTITY)
            .expect("closed element set has inverses");
        inverse[a] = b as u16;
    }

    let group = FiniteGroup {
        order: n,
        cayley,
        inverse,
        label: None,
    };
    debug_assert!(group.validate().is_ok());
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[u32]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    /// Symmetric group on 3 points from a 3-cycle and a transposition.
    pub(crate) fn s3() -> FiniteGroup {
        build_group(&[perm(&[1, 2, 0]), perm(&[1, 0, 2])]).unwrap()
    }

    #[test]
    fn closure_of_identity_is_trivial() {
        let elems = close_generators(&[Permutation::identity(1)]).unwrap();
        assert_eq!(elems.len(), 1);
    }

    #[test]
    fn closure_of_a_transposition_has_two_elements() {
        let elems = close_generators(&[perm(&[1, 0])]).unwrap();
        assert_eq!(elems.len(), 2);
        assert!(elems[0].is_identity());
    }

    #[test]
    fn cyclic_group_of_order_two_has_expected_table() {
        let g = build_group(&[perm(&[1, 0])]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(
            (0..2)
                .map(|a| (0..2).map(|b| g.mul(a, b)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            vec![vec![0, 1], vec![1, 0]],
        );
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let g = s3();
        assert_eq!(g.order(), 6);
        g.validate().unwrap();
        // One identity, two 3-cycles, three transpositions.
        let mut orders: Vec<usize> = (0..6).map(|a| g.element_order(a)).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
        // Non-abelian: some pair fails to commute.
        assert!((0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a))));
    }

    #[test]
    fn closure_is_deterministic_and_identity_first() {
        let gens = [perm(&[1, 2, 0]), perm(&[1, 0, 2])];
        let once = close_generators(&gens).unwrap();
        let twice = close_generators(&gens).unwrap();
        assert_eq!(once, twice);
        assert!(once[0].is_identity());
        // Generators in file order are discovered first.
        assert_eq!(once[1], gens[0]);
        assert_eq!(once[2], gens[1]);
    }

    #[test]
    fn closure_respects_element_bound() {
        let c5 = perm(&[1, 2, 3, 4, 0]);
        assert!(matches!(
            close_generators_bounded(std::slice::from_ref(&c5), 3),
            Err(Error::GroupTooLarge { bound: 3 })
        ));
        assert_eq!(close_generators_bounded(&[c5], 5).unwrap().len(), 5);
    }

    #[test]
    fn mixed_degrees_are_rejected() {
        let result = close_generators(&[perm(&[1, 0]), perm(&[1, 2, 0])]);
        assert!(matches!(result, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn inverses_and_conjugation_are_consistent() {
        let g = s3();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), FiniteGroup::IDENTITY);
            assert_eq!(g.conj(a, FiniteGroup::IDENTITY), a);
            // Conjugation preserves element order.
            for x in 0..g.order() {
                assert_eq!(g.element_order(g.conj(a, x)), g.element_order(a));
            }
        }
    }
}
