//! Finite powers `Gⁿ` of a finite group.
//!
//! Elements of `Gⁿ` are coordinate vectors. For breadth-first search they are
//! packed into a mixed-radix integer with coordinate 0 least significant.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, ElementSet, FiniteGroup};
use crate::monomial::{Letter, Monomial, Witness};

/// Largest `|G|ⁿ` handled by the flat distance array.
pub const MAX_STATES: u64 = 1 << 28;

/// Default cap on set sizes in [`group_closure_step`]; the step costs `|X|²` products.
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 14;

const UNVISITED: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProductElement(pub Vec<Elem>);

impl ProductElement {
    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `Gⁿ` with coordinatewise multiplication.
#[derive(Debug, Clone, Copy)]
pub struct PowerGroup<'a> {
    base: &'a FiniteGroup,
    n: usize,
}

impl<'a> PowerGroup<'a> {
    pub fn new(base: &'a FiniteGroup, n: usize) -> Self {
        PowerGroup { base, n }
    }

    pub fn base(&self) -> &'a FiniteGroup {
        self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|G|ⁿ`, saturating.
    pub fn order(&self) -> u128 {
        (self.base.order() as u128).saturating_pow(self.n as u32)
    }

    fn checked_states(&self, cap: u64) -> Result<usize> {
        let states = self.order();
        if states > cap as u128 {
            return Err(Error::StateSpaceTooLarge { states, cap });
        }
        Ok(states as usize)
    }

    pub fn identity(&self) -> ProductElement {
        ProductElement(vec![0; self.n])
    }

    /// The diagonal element `x_I`.
    pub fn constant(&self, x: Elem) -> ProductElement {
        ProductElement(vec![x; self.n])
    }

    pub fn mul(&self, x: &ProductElement, y: &ProductElement) -> ProductElement {
        ProductElement(x.0.iter().zip(&y.0).map(|(&a, &b)| self.base.mul(a, b)).collect())
    }

    pub fn inv(&self, x: &ProductElement) -> ProductElement {
        ProductElement(x.0.iter().map(|&a| self.base.inv(a)).collect())
    }

    pub fn validate(&self, x: &ProductElement) -> Result<()> {
        if x.len() != self.n || x.0.iter().any(|&c| c >= self.base.order()) {
            return Err(Error::InvalidInput(format!("{:?} is not an element of {}^{}", x.0, self.base.label(), self.n)));
        }
        Ok(())
    }

    pub fn encode(&self, x: &ProductElement) -> u64 {
        let order = self.base.order() as u64;
        x.0.iter().rev().fold(0, |acc, &c| acc * order + c as u64)
    }

    pub fn decode(&self, mut code: u64) -> ProductElement {
        let order = self.base.order() as u64;
        ProductElement(
            (0..self.n)
                .map(|_| {
                    let c = code % order;
                    code /= order;
                    c as Elem
                })
                .collect(),
        )
    }

    /// Every element, in code order.
    pub fn elements(&self) -> Result<impl Iterator<Item = ProductElement> + '_> {
        let states = self.checked_states(MAX_STATES)?;
        Ok((0..states as u64).map(move |c| self.decode(c)))
    }
}

/// `x_J`: `x` on the coordinates in `J`, identity elsewhere.
pub fn embed_xj(group: &FiniteGroup, n: usize, x: Elem, support: &[usize]) -> Result<ProductElement> {
    if x >= group.order() {
        return Err(Error::InvalidInput(format!("element {x} out of range")));
    }
    let mut coords = vec![0; n];
    for &i in support {
        if i >= n {
            return Err(Error::InvalidInput(format!("index {i} outside 0..{n}")));
        }
        coords[i] = x;
    }
    Ok(ProductElement(coords))
}

fn embed_mask(n: usize, x: Elem, mask: u32) -> ProductElement {
    ProductElement((0..n).map(|i| if mask >> i & 1 == 1 { x } else { 0 }).collect())
}

/// A monomial over `G` applied in `Gⁿ`, constants `c` acting as `c_I`.
#[derive(Debug, Clone)]
pub struct LiftedMonomial<'a> {
    f: Monomial,
    power: PowerGroup<'a>,
}

pub fn lift_monomial<'a>(group: &'a FiniteGroup, f: &Monomial, n: usize) -> LiftedMonomial<'a> {
    LiftedMonomial { f: f.clone(), power: PowerGroup::new(group, n) }
}

impl LiftedMonomial<'_> {
    /// Evaluates the word with the multiplication of `Gⁿ`.
    pub fn apply(&self, args: &[ProductElement]) -> Result<ProductElement> {
        if args.len() != self.f.arity() {
            return Err(Error::ArityMismatch { expected: self.f.arity(), got: args.len() });
        }
        for a in args {
            self.power.validate(a)?;
        }
        let inverses: Vec<ProductElement> = args.iter().map(|a| self.power.inv(a)).collect();
        let mut acc = self.power.identity();
        for letter in self.f.word() {
            let factor = match *letter {
                Letter::Const(c) => self.power.constant(c),
                Letter::Var { pos, exp: 1 } => args[pos].clone(),
                Letter::Var { pos, .. } => inverses[pos].clone(),
            };
            acc = self.power.mul(&acc, &factor);
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub checked: u64,
    pub failures: u64,
    /// First failing `(J, K)`, as sorted index lists.
    pub counterexample: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub group: String,
    pub n: usize,
    pub pairs: u64,
    pub equations: Vec<EquationResult>,
    pub all_passed: bool,
}

fn mask_indices(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Checks, for every pair `J, K ⊆ {0..n-1}`:
/// `a_I·a_J⁻¹ = a_{I−J}`, `f̄(a_J, b_K) = b_{J∩K}`, `f̄(a_J, b_I) = b_J`, and
/// `b_J·b_K = b_{J⊔K}` when `J ∩ K = ∅`.
pub fn verify_relations(witness: &Witness, n: usize) -> Result<RelationsReport> {
    if n > 5 {
        return Err(Error::BoundTooLarge { n, max: 5 });
    }
    let group = &witness.group;
    let power = PowerGroup::new(group, n);
    let lifted = lift_monomial(group, &witness.f, n);
    let full: u32 = (1u32 << n) - 1;
    let (a, b) = (witness.a, witness.b);

    let mut eqs = [
        ("complement", "a_I · a_J⁻¹ = a_{I−J}"),
        ("lift_intersection", "f̄(a_J, b_K) = b_{J∩K}"),
        ("lift_full_support", "f̄(a_J, b_I) = b_J"),
        ("disjoint_union", "b_J · b_K = b_{J⊔K} for disjoint J, K"),
    ]
    .map(|(name, statement)| EquationResult { name, statement, checked: 0, failures: 0, counterexample: None });

    let record = |eq: &mut EquationResult, ok: bool, j: u32, k: u32| {
        eq.checked += 1;
        if !ok {
            eq.failures += 1;
            eq.counterexample.get_or_insert((mask_indices(n, j), mask_indices(n, k)));
        }
    };

    let a_full = embed_mask(n, a, full);
    let b_full = embed_mask(n, b, full);
    for j in 0..=full {
        let a_j = embed_mask(n, a, j);
        let b_j = embed_mask(n, b, j);
        let eq1 = power.mul(&a_full, &power.inv(&a_j)) == embed_mask(n, a, full & !j);
        let eq3 = lifted.apply(&[a_j.clone(), b_full.clone()])? == b_j;
        for k in 0..=full {
            let b_k = embed_mask(n, b, k);
            record(&mut eqs[0], eq1, j, k);
            let eq2 = lifted.apply(&[a_j.clone(), b_k.clone()])? == embed_mask(n, b, j & k);
            record(&mut eqs[1], eq2, j, k);
            record(&mut eqs[2], eq3, j, k);
            if j & k == 0 {
                record(&mut eqs[3], power.mul(&b_j, &b_k) == embed_mask(n, b, j | k), j, k);
            }
        }
    }

    let all_passed = eqs.iter().all(|e| e.failures == 0);
    Ok(RelationsReport {
        group: group.label().to_string(),
        n,
        pairs: 1u64 << (2 * n),
        equations: eqs.to_vec(),
        all_passed,
    })
}

/// A deduplicated set of elements of `Gⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratingSet {
    pub n: usize,
    pub members: Vec<ProductElement>,
}

/// One entry of a generator list in JSON: either `x_J` or explicit coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Embedded {
        x: Elem,
        #[serde(rename = "J")]
        support: Vec<usize>,
    },
    Coords(Vec<Elem>),
}

impl GeneratingSet {
    pub fn new(group: &FiniteGroup, n: usize, members: impl IntoIterator<Item = ProductElement>) -> Result<Self> {
        let power = PowerGroup::new(group, n);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for m in members {
            power.validate(&m)?;
            if seen.insert(m.clone()) {
                out.push(m);
            }
        }
        Ok(GeneratingSet { n, members: out })
    }

    /// Elements of `G` itself, as a generating set of `G¹`.
    pub fn from_elements(group: &FiniteGroup, elems: &[Elem]) -> Result<Self> {
        Self::new(group, 1, elems.iter().map(|&x| ProductElement(vec![x])))
    }

    /// All `x_{i}` with `x ≠ 1`: the union of the factors of `Gⁿ`.
    pub fn union_of_factors(group: &FiniteGroup, n: usize) -> Self {
        let members = (0..n)
            .flat_map(|i| (1..group.order()).map(move |x| (i, x)))
            .map(|(i, x)| embed_mask(n, x, 1 << i))
            .collect();
        GeneratingSet { n, members }
    }

    pub fn from_specs(group: &FiniteGroup, n: usize, specs: &[GeneratorSpec]) -> Result<Self> {
        let members = specs
            .iter()
            .map(|s| match s {
                GeneratorSpec::Embedded { x, support } => embed_xj(group, n, *x, support),
                GeneratorSpec::Coords(c) => Ok(ProductElement(c.clone())),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, n, members)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `gens ∪ gens⁻¹`.
    pub fn symmetrized(&self, group: &FiniteGroup) -> GeneratingSet {
        let power = PowerGroup::new(group, self.n);
        let inverses = self.members.iter().map(|m| power.inv(m));
        let mut seen = BTreeSet::new();
        let members = self.members.iter().cloned().chain(inverses).filter(|m| seen.insert(m.clone())).collect();
        GeneratingSet { n: self.n, members }
    }

    pub fn generates(&self, group: &FiniteGroup) -> Result<bool> {
        Ok(cayley_diameter(group, self.n, self)?.generates)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterReport {
    pub group: String,
    pub n: usize,
    pub generator_count: usize,
    pub generates: bool,
    /// Largest distance reached; the diameter of the generated subgroup.
    pub diameter: u32,
    /// `histogram[d]` = number of elements at distance `d` from the identity.
    pub histogram: Vec<u64>,
    pub states_visited: u64,
    /// First element, in code order, at maximal distance.
    pub farthest: Vec<Elem>,
}

/// Word-metric distances from the identity in `Gⁿ`, right-multiplying by
/// `gens ∪ gens⁻¹`. Unreached states hold 255.
fn bfs_distances(group: &FiniteGroup, n: usize, gens: &GeneratingSet) -> Result<Vec<u8>> {
    let power = PowerGroup::new(group, n);
    let states = power.checked_states(MAX_STATES)?;
    if gens.n != n {
        return Err(Error::InvalidInput(format!("generators live in G^{} but n = {n}", gens.n)));
    }
    let order = group.order();
    let place: Vec<u64> = (0..n).map(|i| (order as u64).pow(i as u32)).collect();
    // Sparse form of each generator: its non-identity coordinates.
    let moves: Vec<Vec<(usize, Elem)>> = gens
        .symmetrized(group)
        .members
        .iter()
        .map(|m| m.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect::<Vec<_>>())
        .filter(|m| !m.is_empty())
        .collect();

    let mut dist = vec![UNVISITED; states];
    dist[0] = 0;
    let mut frontier: Vec<u64> = vec![0];
    let mut coords = vec![0usize; n];
    let mut level = 0u8;
    while !frontier.is_empty() {
        if level == UNVISITED - 1 {
            return Err(Error::DistanceOverflow);
        }
        let mut next = Vec::new();
        for &code in &frontier {
            let mut rest = code;
            for c in coords.iter_mut() {
                *c = (rest % order as u64) as usize;
                rest /= order as u64;
            }
            for mv in &moves {
                let mut target = code;
                for &(i, s) in mv {
                    let old = coords[i];
                    let new = group.mul(old, s);
                    target = target + new as u64 * place[i] - old as u64 * place[i];
                }
                let slot = &mut dist[target as usize];
                if *slot == UNVISITED {
                    *slot = level + 1;
                    next.push(target);
                }
            }
        }
        frontier = next;
        level += 1;
    }
    Ok(dist)
}

/// Breadth-first search of the Cayley graph of `Gⁿ` from the identity.
pub fn cayley_diameter(group: &FiniteGroup, n: usize, gens: &GeneratingSet) -> Result<DiameterReport> {
    if gens.is_empty() {
        return Err(Error::InvalidInput("empty generating set".into()));
    }
    let dist = bfs_distances(group, n, gens)?;
    let mut histogram: Vec<u64> = Vec::new();
    let mut farthest = 0u64;
    let mut diameter = 0u32;
    for (code, &d) in dist.iter().enumerate() {
        if d == UNVISITED {
            continue;
        }
        let d = d as usize;
        if histogram.len() <= d {
            histogram.resize(d + 1, 0);
        }
        histogram[d] += 1;
        if d as u32 > diameter {
            diameter = d as u32;
            farthest = code as u64;
        }
    }
    let states_visited: u64 = histogram.iter().sum();
    Ok(DiameterReport {
        group: group.label().to_string(),
        n,
        generator_count: gens.len(),
        generates: states_visited == dist.len() as u64,
        diameter,
        histogram,
        states_visited,
        farthest: PowerGroup::new(group, n).decode(farthest).0,
    })
}

/// Word length of every element of `Gⁿ`, indexed by mixed-radix code.
pub fn length_function(group: &FiniteGroup, n: usize, gens: &GeneratingSet) -> Result<Vec<u32>> {
    let dist = bfs_distances(group, n, gens)?;
    if dist.contains(&UNVISITED) {
        return Err(Error::NotGenerating);
    }
    Ok(dist.into_iter().map(u32::from).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthCheck {
    pub group: String,
    pub n: usize,
    pub pairs_checked: u64,
    pub identity_is_zero: bool,
    pub subadditive: bool,
    pub counterexample: Option<(Vec<Elem>, Vec<Elem>)>,
}

impl LengthCheck {
    pub fn passed(&self) -> bool {
        self.identity_is_zero && self.subadditive
    }
}

/// Checks `ℓ(1) = 0` and `ℓ(gh) ≤ ℓ(g) + ℓ(h)` on every pair.
pub fn check_length_function(group: &FiniteGroup, n: usize, gens: &GeneratingSet) -> Result<LengthCheck> {
    let power = PowerGroup::new(group, n);
    let states = power.checked_states(1 << 14)?;
    let len = length_function(group, n, gens)?;
    let elems: Vec<ProductElement> = (0..states as u64).map(|c| power.decode(c)).collect();
    let mut report = LengthCheck {
        group: group.label().to_string(),
        n,
        pairs_checked: 0,
        identity_is_zero: len[0] == 0,
        subadditive: true,
        counterexample: None,
    };
    for (g, x) in elems.iter().enumerate() {
        for (h, y) in elems.iter().enumerate() {
            report.pairs_checked += 1;
            let gh = power.encode(&power.mul(x, y)) as usize;
            if len[gh] > len[g] + len[h] {
                report.subadditive = false;
                report.counterexample.get_or_insert((x.0.clone(), y.0.clone()));
            }
        }
    }
    Ok(report)
}

fn base_distances(group: &FiniteGroup, gens: &[Elem]) -> Result<Vec<u32>> {
    let set = GeneratingSet::from_elements(group, gens)?;
    if set.is_empty() {
        return if group.order() == 1 { Ok(vec![0]) } else { Err(Error::NotGenerating) };
    }
    length_function(group, 1, &set)
}

/// `K_r = {g : d(1, g) < r}` in the word metric of `gens`.
pub fn word_ball(group: &FiniteGroup, gens: &[Elem], r: u32) -> Result<ElementSet> {
    let dist = base_distances(group, gens)?;
    Ok(ball_from(&dist, r))
}

fn ball_from(dist: &[u32], r: u32) -> ElementSet {
    ElementSet::from_elems(dist.len(), (0..dist.len()).filter(|&g| dist[g] < r))
}

/// `S^m` as a set, with `S⁰ = {1}`.
pub fn product_set(group: &FiniteGroup, set: &ElementSet, m: u32) -> ElementSet {
    let mut acc = group.trivial();
    for _ in 0..m {
        let mut next = ElementSet::empty(group.order());
        for x in acc.iter() {
            for y in set.iter() {
                next.insert(group.mul(x, y));
            }
        }
        acc = next;
    }
    acc
}

/// Whether `G ⊆ (K_n)^m` implies `G ⊆ K_{nm}` for these `n`, `m`.
pub fn check_ball_power(group: &FiniteGroup, gens: &[Elem], n: u32, m: u32) -> Result<bool> {
    let dist = base_distances(group, gens)?;
    let covered = product_set(group, &ball_from(&dist, n), m).len() == group.order();
    Ok(!covered || ball_from(&dist, n * m).len() == group.order())
}

fn closure_step_coords(
    power: &PowerGroup<'_>,
    members: &[ProductElement],
    cap: usize,
) -> Result<BTreeSet<ProductElement>> {
    if members.len() > cap {
        return Err(Error::SizeCap { size: members.len(), cap });
    }
    let mut out: BTreeSet<ProductElement> = members.iter().cloned().collect();
    out.insert(power.identity());
    for x in members {
        out.insert(power.inv(x));
        for y in members {
            out.insert(power.mul(x, y));
        }
    }
    if out.len() > cap {
        return Err(Error::SizeCap { size: out.len(), cap });
    }
    Ok(out)
}

/// `𝒢(X) = X ∪ {1} ∪ X⁻¹ ∪ X·X` in `Gⁿ`.
pub fn group_closure_step(
    group: &FiniteGroup,
    n: usize,
    x: &BTreeSet<ProductElement>,
    cap: usize,
) -> Result<BTreeSet<ProductElement>> {
    let power = PowerGroup::new(group, n);
    let members: Vec<ProductElement> = x.iter().cloned().collect();
    for m in &members {
        power.validate(m)?;
    }
    closure_step_coords(&power, &members, cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ExhaustionOutcome {
    /// Least `m` with `targetⁿ ⊆ 𝒢^m(seed)`.
    Reached { steps: usize, set_size: usize },
    /// The fixed point of `𝒢` above the seed misses part of `targetⁿ`.
    Unreachable { steps_to_fixed_point: usize, fixed_point_size: usize },
}

/// Iterates `𝒢` from `seed` until `targetⁿ` is covered or a fixed point is reached.
pub fn exhaustion_experiment(
    group: &FiniteGroup,
    n: usize,
    seed: &[ProductElement],
    target: &ElementSet,
    cap: usize,
) -> Result<ExhaustionOutcome> {
    let power = PowerGroup::new(group, n);
    let states = power.order();
    if states > cap as u128 {
        return Err(Error::StateSpaceTooLarge { states, cap: cap as u64 });
    }
    for s in seed {
        power.validate(s)?;
    }
    let target_power: Vec<ProductElement> =
        power.elements()?.filter(|e| e.0.iter().all(|&c| target.contains(c))).collect();

    let mut current: BTreeSet<ProductElement> = seed.iter().cloned().collect();
    let mut steps = 0;
    loop {
        if target_power.iter().all(|t| current.contains(t)) {
            return Ok(ExhaustionOutcome::Reached { steps, set_size: current.len() });
        }
        let members: Vec<ProductElement> = current.iter().cloned().collect();
        let next = closure_step_coords(&power, &members, cap)?;
        if next == current {
            return Ok(ExhaustionOutcome::Unreachable {
                steps_to_fixed_point: steps,
                fixed_point_size: current.len(),
            });
        }
        current = next;
        steps += 1;
    }
}

/// Seed family built from a witness: every diagonal constant and `a` on each
/// single coordinate.
pub fn witness_seed(witness: &Witness, n: usize) -> Vec<ProductElement> {
    let group = &witness.group;
    let power = PowerGroup::new(group, n);
    let mut seed: BTreeSet<ProductElement> = group.elements().map(|c| power.constant(c)).collect();
    for i in 0..n {
        seed.insert(embed_mask(n, witness.a, 1 << i));
    }
    seed.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::monomial::{evaluate, find_witness};

    #[test]
    fn embedding_examples() {
        let s3 = catalog::s3();
        let t = s3.element_of_perm(&[1, 0, 2]).unwrap();
        assert_eq!(embed_xj(&s3, 3, t, &[]).unwrap().0, vec![0, 0, 0]);
        assert_eq!(embed_xj(&s3, 3, t, &[0, 1, 2]).unwrap().0, vec![t, t, t]);
        assert_eq!(embed_xj(&s3, 3, t, &[0, 2]).unwrap().0, vec![t, 0, t]);
        assert!(embed_xj(&s3, 3, t, &[3]).is_err());
    }

    #[test]
    fn encode_decode() {
        let a5 = catalog::a5();
        let p = PowerGroup::new(&a5, 3);
        let x = ProductElement(vec![7, 0, 59]);
        assert_eq!(p.decode(p.encode(&x)), x);
        assert_eq!(p.encode(&ProductElement(vec![1, 0, 0])), 1);
        assert_eq!(p.encode(&ProductElement(vec![0, 1, 0])), 60);
    }

    #[test]
    fn lifted_projection_is_identity() {
        let s3 = catalog::s3();
        let lifted = lift_monomial(&s3, &Monomial::projection(1, 0), 2);
        for x in PowerGroup::new(&s3, 2).elements().unwrap() {
            assert_eq!(lifted.apply(std::slice::from_ref(&x)).unwrap(), x);
        }
    }

    #[test]
    fn lifted_witness_on_singleton_support() {
        let s3 = catalog::s3();
        let w = find_witness(&s3).unwrap();
        let lifted = lift_monomial(&s3, &w.f, 3);
        let a_j = embed_xj(&s3, 3, w.a, &[1]).unwrap();
        let b_full = embed_xj(&s3, 3, w.b, &[0, 1, 2]).unwrap();
        assert_eq!(lifted.apply(&[a_j, b_full]).unwrap().0, vec![0, w.b, 0]);
    }

    #[test]
    fn relations_trivial_power() {
        let w = find_witness(&catalog::s3()).unwrap();
        let r = verify_relations(&w, 0).unwrap();
        assert!(r.all_passed);
        assert_eq!(r.pairs, 1);
        assert!(matches!(verify_relations(&w, 6), Err(Error::BoundTooLarge { .. })));
    }

    #[test]
    fn relations_catch_a_bad_witness() {
        let s3 = catalog::s3();
        let mut w = find_witness(&s3).unwrap();
        // The bare projection onto y is homogeneous in y only; eq2 must fail for J ⊂ K.
        w.f = Monomial::projection(2, 1);
        let r = verify_relations(&w, 2).unwrap();
        assert!(!r.all_passed);
        assert!(r.equations[1].failures > 0);
        assert_eq!(r.equations[0].failures, 0);
        assert_eq!(r.equations[3].failures, 0);
    }

    #[test]
    fn closure_step_examples() {
        let s3 = catalog::s3();
        let out = group_closure_step(&s3, 1, &BTreeSet::new(), DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![ProductElement(vec![0])]);

        let c = s3.element_of_perm(&[1, 2, 0]).unwrap();
        let x = BTreeSet::from([ProductElement(vec![c])]);
        let out = group_closure_step(&s3, 1, &x, DEFAULT_CLOSURE_CAP).unwrap();
        let expected: BTreeSet<_> = [0, c, s3.inv(c), s3.mul(c, c)].into_iter().map(|e| ProductElement(vec![e])).collect();
        assert_eq!(out, expected);

        let big: BTreeSet<_> = PowerGroup::new(&s3, 2).elements().unwrap().collect();
        assert!(matches!(group_closure_step(&s3, 2, &big, 10), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn closure_from_union_of_factors_reaches_s3_squared() {
        let s3 = catalog::s3();
        let gens = GeneratingSet::union_of_factors(&s3, 2);
        let mut x: BTreeSet<ProductElement> = gens.members.into_iter().collect();
        let mut steps = 0;
        while x.len() < 36 {
            x = group_closure_step(&s3, 2, &x, DEFAULT_CLOSURE_CAP).unwrap();
            steps += 1;
        }
        assert!(steps <= 2, "{steps}");
    }

    #[test]
    fn complete_graph_diameter() {
        let s3 = catalog::s3();
        let all: Vec<Elem> = (1..6).collect();
        let r = cayley_diameter(&s3, 1, &GeneratingSet::from_elements(&s3, &all).unwrap()).unwrap();
        assert_eq!(r.diameter, 1);
        assert_eq!(r.histogram, vec![1, 5]);
    }

    #[test]
    fn proper_subgroup_does_not_generate() {
        let s3 = catalog::s3();
        let c = s3.element_of_perm(&[1, 2, 0]).unwrap();
        let gens = GeneratingSet::from_elements(&s3, &[c]).unwrap();
        let r = cayley_diameter(&s3, 1, &gens).unwrap();
        assert!(!r.generates);
        assert_eq!(r.states_visited, 3);
        assert!(matches!(word_ball(&s3, &[c], 2), Err(Error::NotGenerating)));
    }

    #[test]
    fn union_of_factors_diameter_small() {
        let s3 = catalog::s3();
        for n in 1..=3 {
            let r = cayley_diameter(&s3, n, &GeneratingSet::union_of_factors(&s3, n)).unwrap();
            assert!(r.generates);
            assert_eq!(r.diameter as usize, n);
            assert_eq!(r.histogram.iter().sum::<u64>(), 6u64.pow(n as u32));
            assert!(r.farthest.iter().all(|&c| c != 0));
        }
    }

    #[test]
    fn state_space_cap() {
        let a5 = catalog::a5();
        let gens = GeneratingSet::union_of_factors(&a5, 5);
        assert!(matches!(cayley_diameter(&a5, 5, &gens), Err(Error::StateSpaceTooLarge { .. })));
    }

    #[test]
    fn symmetrizing_generators_changes_nothing() {
        for g in [catalog::s4(), catalog::sl23(), catalog::cyclic(7)] {
            let gens = GeneratingSet::from_elements(&g, g.generators()).unwrap();
            let sym = gens.symmetrized(&g);
            let mut r1 = cayley_diameter(&g, 1, &gens).unwrap();
            let r2 = cayley_diameter(&g, 1, &sym).unwrap();
            r1.generator_count = r2.generator_count;
            assert_eq!(r1, r2);
        }
    }

    #[test]
    fn ball_examples() {
        let s3 = catalog::s3();
        let gens = s3.generators().to_vec();
        assert_eq!(word_ball(&s3, &gens, 1).unwrap().to_vec(), vec![0]);
        let mut expected = vec![0];
        expected.extend(gens.iter().copied());
        expected.extend(gens.iter().map(|&g| s3.inv(g)));
        assert_eq!(word_ball(&s3, &gens, 2).unwrap(), ElementSet::from_elems(6, expected));
        let diameter = cayley_diameter(&s3, 1, &GeneratingSet::from_elements(&s3, &gens).unwrap()).unwrap().diameter;
        assert_eq!(word_ball(&s3, &gens, diameter + 1).unwrap().len(), 6);
        assert!(word_ball(&s3, &gens, diameter).unwrap().len() < 6);
    }

    #[test]
    fn ball_power_trivial_radius() {
        let s3 = catalog::s3();
        for m in 0..5 {
            assert!(check_ball_power(&s3, s3.generators(), 1, m).unwrap());
        }
    }

    #[test]
    fn exhaustion_examples() {
        let s3 = catalog::s3();
        let a3 = crate::series::derived_subgroup(&s3);
        let everything: Vec<ProductElement> = PowerGroup::new(&s3, 2).elements().unwrap().collect();
        assert_eq!(
            exhaustion_experiment(&s3, 2, &everything, &a3, DEFAULT_CLOSURE_CAP).unwrap(),
            ExhaustionOutcome::Reached { steps: 0, set_size: 36 }
        );
        let w = find_witness(&s3).unwrap();
        let seed = witness_seed(&w, 1);
        match exhaustion_experiment(&s3, 1, &seed, &a3, DEFAULT_CLOSURE_CAP).unwrap() {
            ExhaustionOutcome::Reached { steps, .. } => assert!(steps <= 1),
            other => panic!("{other:?}"),
        }
        // The diagonal alone never leaves the diagonal.
        let diagonal: Vec<ProductElement> = s3.elements().map(|c| ProductElement(vec![c, c])).collect();
        assert!(matches!(
            exhaustion_experiment(&s3, 2, &diagonal, &a3, DEFAULT_CLOSURE_CAP).unwrap(),
            ExhaustionOutcome::Unreachable { fixed_point_size: 6, .. }
        ));
    }

    #[test]
    fn lift_agrees_with_coordinatewise_evaluation() {
        use rand::{Rng, SeedableRng};
        let a4 = catalog::a4();
        let w = find_witness(&a4).unwrap();
        let n = 4;
        let lifted = lift_monomial(&a4, &w.f, n);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let x = ProductElement((0..n).map(|_| rng.gen_range(0..12)).collect());
            let y = ProductElement((0..n).map(|_| rng.gen_range(0..12)).collect());
            let got = lifted.apply(&[x.clone(), y.clone()]).unwrap();
            for i in 0..n {
                assert_eq!(got.0[i], evaluate(&a4, &w.f, &[x.0[i], y.0[i]]).unwrap());
            }
        }
    }
}
