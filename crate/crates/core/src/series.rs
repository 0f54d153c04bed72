//! Subgroup closures and central series.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, ElementSet, FiniteGroup};

/// Smallest subgroup containing `seed`.
///
/// In a finite group the monoid generated by a set is already a subgroup, so a
/// breadth-first closure under right multiplication by the seed suffices.
pub fn subgroup_generated(group: &FiniteGroup, seed: &ElementSet) -> ElementSet {
    let gens: Vec<Elem> = seed.iter().filter(|&g| g != 0).collect();
    let mut set = group.trivial();
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for &s in &gens {
            let y = group.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Smallest normal subgroup containing `seed`: the subgroup generated by all conjugates.
pub fn normal_closure(group: &FiniteGroup, seed: &ElementSet) -> ElementSet {
    let mut conjugates = ElementSet::empty(group.order());
    for g in seed.iter() {
        for c in group.elements() {
            conjugates.insert(group.conjugate(g, c));
        }
    }
    subgroup_generated(group, &conjugates)
}

/// `[H, K]`, the subgroup generated by all `[h, k]`.
pub fn commutator_subgroup(group: &FiniteGroup, h: &ElementSet, k: &ElementSet) -> ElementSet {
    let mut comms = ElementSet::empty(group.order());
    for x in h.iter() {
        for y in k.iter() {
            comms.insert(group.commutator(x, y));
        }
    }
    subgroup_generated(group, &comms)
}

pub fn derived_subgroup(group: &FiniteGroup) -> ElementSet {
    let whole = group.whole();
    commutator_subgroup(group, &whole, &whole)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralSeriesReport {
    /// `G₁ = G`, `G_{i+1} = [G, G_i]`, ending with a repeated term.
    pub descending: Vec<ElementSet>,
    /// `Z₀ = 1`, `Z_{i+1}/Z_i = Z(G/Z_i)`, ending with a repeated term.
    pub ascending: Vec<ElementSet>,
    pub last_term: ElementSet,
    pub hypercenter: ElementSet,
    pub derived: ElementSet,
    pub nilpotent: bool,
    pub perfect: bool,
}

impl CentralSeriesReport {
    /// Number of distinct terms in the descending series.
    pub fn descending_length(&self) -> usize {
        self.descending.len() - 1
    }

    pub fn ascending_length(&self) -> usize {
        self.ascending.len() - 1
    }
}

pub fn central_series(group: &FiniteGroup) -> CentralSeriesReport {
    series_within(group, &group.whole())
}

/// The central series of the subgroup `sub`, viewed as a group in its own right.
pub fn relative_central_series(group: &FiniteGroup, sub: &ElementSet) -> Result<CentralSeriesReport> {
    if sub.universe() != group.order() || !sub.is_subgroup(group) {
        return Err(Error::NotASubgroup);
    }
    Ok(series_within(group, sub))
}

fn series_within(group: &FiniteGroup, sub: &ElementSet) -> CentralSeriesReport {
    let mut descending = vec![sub.clone()];
    loop {
        let next = commutator_subgroup(group, sub, descending.last().unwrap());
        let done = &next == descending.last().unwrap();
        descending.push(next);
        if done {
            break;
        }
    }

    let mut ascending = vec![group.trivial()];
    loop {
        let current = ascending.last().unwrap();
        let next = ElementSet::from_elems(
            group.order(),
            sub.iter().filter(|&g| sub.iter().all(|x| current.contains(group.commutator(g, x)))),
        );
        let done = &next == current;
        ascending.push(next);
        if done {
            break;
        }
    }

    let last_term = descending.last().unwrap().clone();
    let hypercenter = ascending.last().unwrap().clone();
    let derived = descending[1].clone();
    let nilpotent = last_term.len() == 1;
    let perfect = &derived == sub;
    CentralSeriesReport { descending, ascending, last_term, hypercenter, derived, nilpotent, perfect }
}

pub fn is_perfect(group: &FiniteGroup) -> bool {
    derived_subgroup(group).len() == group.order()
}

pub fn is_nilpotent(group: &FiniteGroup) -> bool {
    central_series(group).nilpotent
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(g: &FiniteGroup, elems: &[Elem]) -> ElementSet {
        ElementSet::from_elems(g.order(), elems.iter().copied())
    }

    fn three_cycles(g: &FiniteGroup) -> Vec<Elem> {
        g.elements().filter(|&x| g.element_order(x) == 3).collect()
    }

    #[test]
    fn commutator_basics() {
        let s3 = catalog::s3();
        for g in s3.elements() {
            assert_eq!(s3.commutator(g, g), 0);
        }
        let z6 = catalog::cyclic(6);
        for g in z6.elements() {
            for h in z6.elements() {
                assert_eq!(z6.commutator(g, h), 0);
            }
        }
    }

    #[test]
    fn s3_commutator_of_transposition_and_three_cycle() {
        // Hand composition, left to right on points {0,1,2}:
        // t = (0 1), c = (0 1 2); [t,c] = t⁻¹ c⁻¹ t c = t (0 2 1) t c.
        // 0 -t-> 1 -(021)-> 0 -t-> 1 -c-> 2; 2 -> 2 -> 1 -> 0 -> 1; 1 -> 0 -> 2 -> 2 -> 0.
        // So [t,c] maps 0->2, 2->1, 1->0: the cycle (0 2 1).
        let s3 = catalog::s3();
        let t = s3.element_of_perm(&[1, 0, 2]).unwrap();
        let c = s3.element_of_perm(&[1, 2, 0]).unwrap();
        let expected = s3.element_of_perm(&[2, 0, 1]).unwrap();
        assert_eq!(s3.commutator(t, c), expected);
    }

    #[test]
    fn generated_subgroups() {
        let s3 = catalog::s3();
        assert_eq!(subgroup_generated(&s3, &ElementSet::empty(6)).to_vec(), vec![0]);
        let c = s3.element_of_perm(&[1, 2, 0]).unwrap();
        let a3 = subgroup_generated(&s3, &set(&s3, &[c]));
        let mut expected = vec![0];
        expected.extend(three_cycles(&s3));
        assert_eq!(a3, set(&s3, &expected));
        let t = s3.element_of_perm(&[1, 0, 2]).unwrap();
        assert_eq!(subgroup_generated(&s3, &set(&s3, &[t, c])).len(), 6);
    }

    #[test]
    fn normal_closures() {
        let s3 = catalog::s3();
        assert_eq!(normal_closure(&s3, &set(&s3, &[0])).len(), 1);
        let t = s3.element_of_perm(&[1, 0, 2]).unwrap();
        assert_eq!(normal_closure(&s3, &set(&s3, &[t])).len(), 6);
        let c = s3.element_of_perm(&[1, 2, 0]).unwrap();
        let a3 = normal_closure(&s3, &set(&s3, &[c]));
        assert_eq!(a3.len(), 3);
        assert!(a3.is_normal(&s3));
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(derived_subgroup(&catalog::cyclic(8)).len(), 1);
        let s3 = catalog::s3();
        let d = derived_subgroup(&s3);
        assert_eq!(d.len(), 3);
        assert!(d.iter().all(|g| g == 0 || s3.element_order(g) == 3));
        assert_eq!(derived_subgroup(&catalog::a5()).len(), 60);
        assert!(is_perfect(&catalog::a5()));
    }

    #[test]
    fn cyclic_series() {
        let z4 = catalog::cyclic(4);
        let r = central_series(&z4);
        assert!(r.nilpotent);
        assert_eq!(r.last_term.len(), 1);
        assert_eq!(r.hypercenter.len(), 4);
        assert!(!r.perfect);
    }

    #[test]
    fn s3_series() {
        let s3 = catalog::s3();
        let r = central_series(&s3);
        assert_eq!(r.last_term.len(), 3);
        assert_eq!(r.last_term, derived_subgroup(&s3));
        assert!(!r.nilpotent);
        assert!(!r.perfect);
        assert_eq!(r.hypercenter.to_vec(), vec![0]);
        // G, A3, A3 with the repeated term kept.
        assert_eq!(r.descending.len(), 3);
        assert_eq!(r.descending[1], r.descending[2]);
        assert_eq!(r.ascending.len(), 2);
    }

    #[test]
    fn s4_and_sl23_last_terms() {
        let s4 = catalog::s4();
        let r = central_series(&s4);
        assert_eq!(r.last_term.len(), 12);
        assert!(r.last_term.iter().all(|g| {
            let p = &s4.permutations().unwrap()[g];
            parity(p) == 0
        }));
        let sl = catalog::sl23();
        let r = central_series(&sl);
        assert_eq!(r.last_term.len(), 8);
        assert_eq!(r.hypercenter.len(), 2);
    }

    fn parity(p: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2
    }

    #[test]
    fn relative_series() {
        let s3 = catalog::s3();
        let r = relative_central_series(&s3, &s3.trivial()).unwrap();
        assert!(r.nilpotent);
        let a3 = derived_subgroup(&s3);
        let r = relative_central_series(&s3, &a3).unwrap();
        assert!(r.nilpotent);
        assert_eq!(r.hypercenter, a3);

        let s4 = catalog::s4();
        let a4 = derived_subgroup(&s4);
        let r = relative_central_series(&s4, &a4).unwrap();
        assert!(!r.nilpotent);
        assert_eq!(r.hypercenter.len(), 1);
        assert_eq!(r.last_term.len(), 4);
        assert!(r.last_term.iter().all(|g| g == 0 || s4.element_order(g) == 2));
    }

    #[test]
    fn relative_series_rejects_non_subgroup() {
        let s3 = catalog::s3();
        let t = s3.element_of_perm(&[1, 0, 2]).unwrap();
        assert!(matches!(relative_central_series(&s3, &set(&s3, &[t])), Err(Error::NotASubgroup)));
    }

    #[test]
    fn catalog_series_invariants() {
        for g in catalog::all() {
            let r = central_series(&g);
            let d = derived_subgroup(&g);
            assert!(d.is_normal(&g), "{}", g.label());
            assert!(commutator_subgroup(&g, &g.whole(), &d).is_subset(&d));
            assert_eq!(commutator_subgroup(&g, &g.whole(), &r.last_term), r.last_term, "{}", g.label());
            assert_eq!(r.nilpotent, r.hypercenter.len() == g.order(), "{}", g.label());
            assert_eq!(r.perfect, d.len() == g.order());
            for w in r.descending.windows(2) {
                assert!(w[1].is_subset(&w[0]));
            }
            for w in r.ascending.windows(2) {
                assert!(w[0].is_subset(&w[1]));
            }
            let n = r.descending.len();
            assert_eq!(r.descending[n - 1], r.descending[n - 2]);
            let n = r.ascending.len();
            assert_eq!(r.ascending[n - 1], r.ascending[n - 2]);
        }
    }

    #[test]
    fn normal_closure_matches_alternating_oracle() {
        // Alternate subgroup generation and conjugation closure until nothing changes.
        fn oracle(g: &FiniteGroup, seed: &ElementSet) -> ElementSet {
            let mut cur = seed.clone();
            loop {
                let sub = subgroup_generated(g, &cur);
                let mut conj = sub.clone();
                for x in sub.iter() {
                    for c in g.elements() {
                        conj.insert(g.conjugate(x, c));
                    }
                }
                if conj == cur {
                    return cur;
                }
                cur = conj;
            }
        }
        for g in catalog::all().into_iter().filter(|g| g.order() <= 24) {
            for x in g.elements() {
                let seed = set(&g, &[x]);
                assert_eq!(normal_closure(&g, &seed), oracle(&g, &seed), "{} {x}", g.label());
            }
        }
    }
}
