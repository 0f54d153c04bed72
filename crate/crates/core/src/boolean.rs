//! Families of subsets of a finite set `E`, seen as subsets of the Boolean ring
//! `𝒫(E)` with product AND, sum XOR, zero the empty set and one the full set.
//!
//! A family is a dense bitset over all `2^|E|` masks, so `|E| ≤ 16`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_UNIVERSE: usize = 16;

/// Subset of `E` encoded as a bitmask.
pub type Mask = u32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolFamily {
    universe: usize,
    bits: Vec<u64>,
}

impl BoolFamily {
    pub fn empty(universe: usize) -> Result<Self> {
        if universe > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(universe));
        }
        Ok(BoolFamily { universe, bits: vec![0; (1usize << universe).div_ceil(64)] })
    }

    pub fn from_masks(universe: usize, masks: impl IntoIterator<Item = Mask>) -> Result<Self> {
        let mut f = Self::empty(universe)?;
        for m in masks {
            if m as u64 >= 1u64 << universe {
                return Err(Error::MaskOutOfRange { mask: m, universe });
            }
            f.insert(m);
        }
        Ok(f)
    }

    /// All of `𝒫(E)`.
    pub fn power_set(universe: usize) -> Result<Self> {
        Self::from_masks(universe, 0..(1u32 << universe))
    }

    pub fn singletons(universe: usize) -> Result<Self> {
        Self::from_masks(universe, (0..universe).map(|i| 1 << i))
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// The unit of the ring: the full set.
    pub fn full_mask(&self) -> Mask {
        ((1u64 << self.universe) - 1) as Mask
    }

    pub fn complement(&self, x: Mask) -> Mask {
        !x & self.full_mask()
    }

    fn insert(&mut self, m: Mask) -> bool {
        let (w, b) = (m as usize / 64, m as usize % 64);
        let fresh = self.bits[w] >> b & 1 == 0;
        self.bits[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn contains(&self, m: Mask) -> bool {
        (m as u64) < (1u64 << self.universe) && self.bits[m as usize / 64] >> (m % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Members in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = Mask> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros();
                rest &= rest - 1;
                Some(w as Mask * 64 + b)
            })
        })
    }

    pub fn masks(&self) -> Vec<Mask> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &BoolFamily) -> bool {
        self.universe == other.universe && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &BoolFamily) -> BoolFamily {
        assert_eq!(self.universe, other.universe);
        BoolFamily {
            universe: self.universe,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        }
    }

    /// Closed under complement and containing the empty set.
    pub fn is_symmetric_with_zero(&self) -> bool {
        self.contains(0) && self.iter().all(|x| self.contains(self.complement(x)))
    }

    fn with_constants(&self) -> BoolFamily {
        let mut out = self.clone();
        out.insert(0);
        out.insert(self.full_mask());
        out
    }
}

impl std::fmt::Debug for BoolFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BoolFamily(|E|={}, ", self.universe)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    universe: usize,
    sets: Vec<Mask>,
}

impl Serialize for BoolFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyRepr { universe: self.universe, sets: self.masks() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoolFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FamilyRepr::deserialize(d)?;
        BoolFamily::from_masks(repr.universe, repr.sets).map_err(serde::de::Error::custom)
    }
}

/// `ℛ(F) = F ∪ {0, 1} ∪ {x + y} ∪ {xy}`; `-1 = 1` in characteristic 2.
pub fn op_r(f: &BoolFamily) -> BoolFamily {
    let mut out = f.with_constants();
    let members = f.masks();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i..] {
            out.insert(x ^ y);
            out.insert(x & y);
        }
    }
    out
}

/// Like [`op_r`], but sums only of disjoint pairs.
pub fn op_d(f: &BoolFamily) -> BoolFamily {
    let mut out = f.with_constants();
    let members = f.masks();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i..] {
            if x & y == 0 {
                out.insert(x | y);
            }
            out.insert(x & y);
        }
    }
    out
}

/// Subring generated by `F`: the least fixed point of [`op_r`] above `F`.
pub fn ring_closure(f: &BoolFamily) -> BoolFamily {
    let mut cur = f.clone();
    loop {
        let next = op_r(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

pub fn iterate(op: impl Fn(&BoolFamily) -> BoolFamily, f: &BoolFamily, times: usize) -> BoolFamily {
    (0..times).fold(f.clone(), |acc, _| op(&acc))
}

/// `ℐ_k(F)`: all products of `k` members, repetition allowed.
pub fn op_i(k: usize, f: &BoolFamily) -> Result<BoolFamily> {
    if k == 0 {
        return Err(Error::InvalidInput("ℐ_k needs k ≥ 1".into()));
    }
    let members = f.masks();
    let mut cur = f.clone();
    // x·x = x makes the layers increasing, so a repeated layer is final.
    for _ in 1..k {
        let mut next = cur.clone();
        for p in cur.iter() {
            for &x in &members {
                next.insert(p & x);
            }
        }
        if next == cur {
            break;
        }
        cur = next;
    }
    Ok(cur)
}

/// `𝒱_k(F)`: sums of `k` members that are pairwise disjoint.
///
/// A nonzero member is never disjoint from itself, so only `0` may repeat. The
/// masks reachable as a union of exactly `j` pairwise disjoint nonzero members
/// are built layer by layer: extending a union by a member disjoint from it is
/// again such a union. With `0 ∈ F` short sums are padded with zeros.
pub fn op_v(k: usize, f: &BoolFamily) -> Result<BoolFamily> {
    if k == 0 {
        return Err(Error::InvalidInput("𝒱_k needs k ≥ 1".into()));
    }
    let nonzero: Vec<Mask> = f.iter().filter(|&x| x != 0).collect();
    let has_zero = f.contains(0);
    let mut out = BoolFamily::empty(f.universe)?;
    let mut layer = BoolFamily::from_masks(f.universe, [0])?;
    if has_zero {
        out.insert(0);
    }
    for j in 1..=k {
        let mut next = BoolFamily::empty(f.universe)?;
        for u in layer.iter() {
            for &x in &nonzero {
                if u & x == 0 {
                    next.insert(u | x);
                }
            }
        }
        layer = next;
        if has_zero || j == k {
            out = out.union(&layer);
        }
        if layer.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// `F ∪ {1 - x : x ∈ F} ∪ {0}`.
pub fn symmetrize(f: &BoolFamily) -> BoolFamily {
    let mut out = f.clone();
    out.insert(0);
    out.insert(f.full_mask());
    for x in f.iter() {
        out.insert(f.complement(x));
    }
    out
}

fn require_symmetric(f: &BoolFamily) -> Result<()> {
    if f.is_symmetric_with_zero() {
        Ok(())
    } else {
        Err(Error::HypothesisViolated("family must contain 0 and be closed under complement".into()))
    }
}

/// `ℛⁿ(F) ⊆ 𝒟²ⁿ(F)` for a symmetric family containing 0, `n ≤ 3`.
pub fn check_rnd2n_part1(f: &BoolFamily, n: usize) -> Result<bool> {
    require_symmetric(f)?;
    if n > 3 {
        return Err(Error::BoundTooLarge { n, max: 3 });
    }
    let lhs = iterate(op_r, f, n);
    let rhs = iterate(op_d, f, 2 * n);
    Ok(lhs.is_subset(&rhs))
}

/// `𝒟ⁿ(F) ⊆ 𝒱_{2^{2^n}}(ℐ_{2^n}(F))` for a symmetric family containing 0, `n ≤ 2`.
pub fn check_rnd2n_part2(f: &BoolFamily, n: usize) -> Result<bool> {
    require_symmetric(f)?;
    if n > 2 {
        return Err(Error::BoundTooLarge { n, max: 2 });
    }
    let lhs = iterate(op_d, f, n);
    let rhs = op_v(1 << (1 << n), &op_i(1 << n, f)?)?;
    Ok(lhs.is_subset(&rhs))
}
