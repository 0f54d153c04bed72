//! Finite groups given by a full multiplication table.
//!
//! Elements are the indices `0..order`; index 0 is always the identity.
//! Tables are stored row-major, `table[g * order + h] = g·h`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest group order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 512;

/// Element of a [`FiniteGroup`], by index.
pub type Elem = usize;

/// A permutation of `0..degree` stored as its image vector: `p[i]` is the image of `i`.
pub type Perm = Vec<usize>;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    label: String,
    perms: Option<Vec<Perm>>,
    generators: Vec<Elem>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// Identity and inverse laws are checked against index 0, and associativity is
    /// checked on all `order³` triples.
    pub fn from_table(label: impl Into<String>, table: &[Vec<usize>]) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidInput("empty multiplication table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::TooLarge { order, cap: MAX_ORDER });
        }
        let mut flat = Vec::with_capacity(order * order);
        for (g, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidInput(format!(
                    "row {g} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::InvalidInput(format!("table entry {x} out of range")));
                }
                flat.push(x as u16);
            }
        }
        Self::from_flat(label.into(), order, flat, None)
    }

    fn from_flat(label: String, order: usize, table: Vec<u16>, perms: Option<Vec<Perm>>) -> Result<Self> {
        let at = |g: usize, h: usize| table[g * order + h] as usize;

        for g in 0..order {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::NotAGroup {
                    reason: "identity law fails for index 0".into(),
                    witness: vec![g],
                });
            }
        }

        let mut inverses = vec![0u16; order];
        for (g, slot) in inverses.iter_mut().enumerate() {
            let Some(inv) = (0..order).find(|&h| at(g, h) == 0) else {
                return Err(Error::NotAGroup {
                    reason: "element has no right inverse".into(),
                    witness: vec![g],
                });
            };
            if at(inv, g) != 0 {
                return Err(Error::NotAGroup {
                    reason: "right inverse is not a left inverse".into(),
                    witness: vec![g, inv],
                });
            }
            *slot = inv as u16;
        }

        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                let row_b = &table[b * order..(b + 1) * order];
                let row_ab = &table[ab * order..(ab + 1) * order];
                for c in 0..order {
                    if row_ab[c] as usize != at(a, row_b[c] as usize) {
                        return Err(Error::NotAGroup {
                            reason: "associativity fails".into(),
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }

        Ok(FiniteGroup { order, table, inverses, label, perms, generators: Vec::new() })
    }

    /// Closes a set of permutations under composition.
    ///
    /// Composition acts left to right: `(g·h)(i) = h(g(i))`. The identity receives
    /// index 0 and the remaining elements are numbered in breadth-first discovery
    /// order, expanding each element by the generators in input order.
    pub fn from_permutations(label: impl Into<String>, degree: usize, generators: &[Perm]) -> Result<Self> {
        for p in generators {
            validate_perm(degree, p)?;
        }
        let identity: Perm = (0..degree).collect();
        let mut index: HashMap<Perm, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for gen in generators {
                let next = compose(&elements[i], gen);
                if !index.contains_key(&next) {
                    if elements.len() == MAX_ORDER {
                        return Err(Error::TooLarge { order: MAX_ORDER + 1, cap: MAX_ORDER });
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }

        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for g in &elements {
            for h in &elements {
                table.push(index[&compose(g, h)] as u16);
            }
        }
        let gens = generators.iter().map(|p| index[p]).filter(|&g| g != 0).collect();
        Ok(Self::from_flat(label.into(), order, table, Some(elements))?.with_generators(gens))
    }

    /// Records a preferred generating set (used for balls and length functions).
    pub fn with_generators(mut self, mut gens: Vec<Elem>) -> Self {
        let mut seen = ElementSet::empty(self.order);
        gens.retain(|&g| g < self.order && seen.insert(g));
        self.generators = gens;
        self
    }

    /// The preferred generators: the input generators for permutation-built groups.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Direct product; the pair `(g, h)` has index `g + |G|·h`.
    pub fn direct_product(label: impl Into<String>, left: &FiniteGroup, right: &FiniteGroup) -> Result<Self> {
        let order = left.order * right.order;
        if order > MAX_ORDER {
            return Err(Error::TooLarge { order, cap: MAX_ORDER });
        }
        let split = |x: usize| (x % left.order, x / left.order);
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (g1, h1) = split(x);
            for y in 0..order {
                let (g2, h2) = split(y);
                table.push((left.mul(g1, g2) + left.order * right.mul(h1, h2)) as u16);
            }
        }
        Self::from_flat(label.into(), order, table, None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, g: Elem, h: Elem) -> Elem {
        self.table[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: Elem) -> Elem {
        self.inverses[g] as usize
    }

    pub fn inverses(&self) -> Vec<Elem> {
        self.inverses.iter().map(|&x| x as usize).collect()
    }

    /// `g^k` for any integer `k`.
    pub fn pow(&self, g: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(g) } else { g };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    /// `h g h⁻¹`.
    pub fn conjugate(&self, g: Elem, by: Elem) -> Elem {
        self.mul(self.mul(by, g), self.inv(by))
    }

    /// Commutator `[g,h] = g⁻¹h⁻¹gh`.
    #[inline]
    pub fn commutator(&self, g: Elem, h: Elem) -> Elem {
        let gh = self.mul(g, h);
        let hg = self.mul(h, g);
        self.mul(self.inv(hg), gh)
    }

    pub fn element_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// The multiplication table as nested rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|g| self.elements().all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Permutation images, when the group was built from permutations.
    pub fn permutations(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    /// Looks up the element with the given permutation image.
    pub fn element_of_perm(&self, p: &[usize]) -> Option<Elem> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    pub fn whole(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn trivial(&self) -> ElementSet {
        ElementSet::from_elems(self.order, [0])
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_elems(
            self.order,
            self.elements().filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z))),
        )
    }
}

fn validate_perm(degree: usize, p: &[usize]) -> Result<()> {
    if p.len() != degree {
        return Err(Error::InvalidPermutation(format!("length {} but degree {degree}", p.len())));
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree || seen[x] {
            return Err(Error::InvalidPermutation(format!("{p:?} is not a bijection")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Left-to-right composition: apply `g`, then `h`.
pub fn compose(g: &[usize], h: &[usize]) -> Perm {
    g.iter().map(|&i| h[i]).collect()
}

/// Builds a permutation of `0..degree` from disjoint cycles.
pub fn perm_from_cycles(degree: usize, cycles: &[&[usize]]) -> Perm {
    let mut p: Perm = (0..degree).collect();
    for cycle in cycles {
        for (k, &x) in cycle.iter().enumerate() {
            p[x] = cycle[(k + 1) % cycle.len()];
        }
    }
    p
}

/// A subset of a finite group's elements, stored as a bitset over indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    order: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet { order, words: vec![0; order.div_ceil(64)] }
    }

    pub fn full(order: usize) -> Self {
        Self::from_elems(order, 0..order)
    }

    pub fn from_elems(order: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Self::empty(order);
        for g in elems {
            s.insert(g);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.order
    }

    pub fn insert(&mut self, g: Elem) -> bool {
        assert!(g < self.order, "element {g} out of range");
        let (w, b) = (g / 64, g % 64);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn contains(&self, g: Elem) -> bool {
        g < self.order && self.words[g / 64] >> (g % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order).filter(move |&g| self.contains(g))
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            order: self.order,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subgroup(&self, group: &FiniteGroup) -> bool {
        self.contains(0)
            && self.iter().all(|g| self.contains(group.inv(g)) && self.iter().all(|h| self.contains(group.mul(g, h))))
    }

    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        self.is_subgroup(group) && self.iter().all(|g| group.elements().all(|c| self.contains(group.conjugate(g, c))))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// JSON form of a group definition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table {
        label: String,
        order: usize,
        table: Vec<Vec<usize>>,
    },
    Permutations {
        label: String,
        degree: usize,
        generators: Vec<Perm>,
    },
}

impl GroupSpec {
    pub fn label(&self) -> &str {
        match self {
            GroupSpec::Table { label, .. } | GroupSpec::Permutations { label, .. } => label,
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Table { label, order, table } => {
                if *order != table.len() {
                    return Err(Error::InvalidInput(format!(
                        "declared order {order} but table has {} rows",
                        table.len()
                    )));
                }
                FiniteGroup::from_table(label.clone(), table)
            }
            GroupSpec::Permutations { label, degree, generators } => {
                FiniteGroup::from_permutations(label.clone(), *degree, generators)
            }
        }
    }
}

impl From<&FiniteGroup> for GroupSpec {
    fn from(g: &FiniteGroup) -> Self {
        GroupSpec::Table { label: g.label.clone(), order: g.order, table: g.table_rows() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_table("1", &[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inverses(), vec![0]);
    }

    #[test]
    fn s3_table_in_textbook_order() {
        // e, (12), (13), (23), (123), (132) on points 1..3, composed left to right.
        let perms: Vec<Perm> = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![0, 2, 1],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|g| perms.iter().map(|h| perms.iter().position(|p| *p == compose(g, h)).unwrap()).collect())
            .collect();
        let g = FiniteGroup::from_table("S3", &table).unwrap();
        assert_eq!(g.inv(4), 5);
        assert_eq!(g.mul(4, 5), 0);
    }

    #[test]
    fn idempotent_non_identity_rejected() {
        let table = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroup::from_table("bad", &table), Err(Error::NotAGroup { .. })));
    }

    #[test]
    fn non_associative_loop_rejected() {
        // A Latin square with identity 0 and two-sided inverses that is not associative.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table("loop", &table).unwrap_err();
        match err {
            Error::NotAGroup { witness, .. } => assert_eq!(witness.len(), 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn oversize_rejected() {
        let order = MAX_ORDER + 1;
        let table: Vec<Vec<usize>> = (0..order).map(|g| (0..order).map(|h| (g + h) % order).collect()).collect();
        assert!(matches!(FiniteGroup::from_table("big", &table), Err(Error::TooLarge { .. })));
        let cycle: Perm = (0..order).map(|i| (i + 1) % order).collect();
        assert!(matches!(
            FiniteGroup::from_permutations("big", order, &[cycle]),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn permutation_closures() {
        assert_eq!(s3().order(), 6);
        let a5 = FiniteGroup::from_permutations(
            "A5",
            5,
            &[perm_from_cycles(5, &[&[0, 1, 2, 3, 4]]), perm_from_cycles(5, &[&[0, 1, 2]])],
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(FiniteGroup::from_permutations("1", 4, &[]).unwrap().order(), 1);
    }

    #[test]
    fn bad_permutation_rejected() {
        assert!(FiniteGroup::from_permutations("x", 3, &[vec![0, 0, 1]]).is_err());
        assert!(FiniteGroup::from_permutations("x", 3, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn discovery_order_is_breadth_first() {
        let g = s3();
        assert_eq!(g.permutations().unwrap()[1], vec![1, 0, 2]);
        assert_eq!(g.permutations().unwrap()[2], vec![1, 2, 0]);
    }

    #[test]
    fn table_round_trip() {
        let g = s3();
        let h = GroupSpec::from(&g).build().unwrap();
        assert_eq!(g.table_rows(), h.table_rows());
        assert_eq!(g.inverses(), h.inverses());
    }

    #[test]
    fn group_spec_json() {
        let spec: GroupSpec = serde_json::from_str(r#"{"label":"Z2","order":2,"table":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(spec.build().unwrap().order(), 2);
        let spec: GroupSpec =
            serde_json::from_str(r#"{"label":"S3","degree":3,"generators":[[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(spec.build().unwrap().order(), 6);
    }

    #[test]
    fn element_set_basics() {
        let mut s = ElementSet::empty(130);
        assert!(s.insert(129));
        assert!(!s.insert(129));
        s.insert(3);
        assert_eq!(s.to_vec(), vec![3, 129]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[3,129]");
        assert!(s.is_subset(&ElementSet::full(130)));
    }
}
