//! Monomials `Gᵏ → G` and the homogeneous-monomial witness construction.
//!
//! A monomial is a word in constants and signed argument variables, evaluated
//! left to right. It is homogeneous when it evaluates to the identity as soon as
//! one argument is the identity.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Elem, ElementSet, FiniteGroup};
use crate::series::{central_series, normal_closure, relative_central_series};

/// Default cap on the number of candidate words in [`exhaust_no_witness`].
pub const DEFAULT_WORD_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Const(Elem),
    /// Argument `pos` raised to `exp`, which is `+1` or `-1`.
    Var { pos: usize, exp: i8 },
}

impl Letter {
    pub fn var(pos: usize) -> Self {
        Letter::Var { pos, exp: 1 }
    }

    pub fn var_inv(pos: usize) -> Self {
        Letter::Var { pos, exp: -1 }
    }

    fn cancels(&self, next: &Letter) -> bool {
        matches!((self, next), (Letter::Var { pos: p, exp: e }, Letter::Var { pos: q, exp: f }) if p == q && e == &-f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LetterRepr {
    Const {
        #[serde(rename = "const")]
        value: Elem,
    },
    Var {
        var: usize,
        exp: i8,
    },
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Letter::Const(value) => LetterRepr::Const { value },
            Letter::Var { pos, exp } => LetterRepr::Var { var: pos, exp },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match LetterRepr::deserialize(d)? {
            LetterRepr::Const { value } => Letter::Const(value),
            LetterRepr::Var { var, exp } => Letter::Var { pos: var, exp },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Monomial {
    arity: usize,
    word: Vec<Letter>,
}

#[derive(Deserialize)]
struct MonomialRepr {
    arity: usize,
    word: Vec<Letter>,
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MonomialRepr::deserialize(d)?;
        Monomial::new(repr.arity, repr.word).map_err(serde::de::Error::custom)
    }
}

impl Monomial {
    /// Builds a monomial in normal form: `Const(0)` letters are dropped and adjacent
    /// `Var(i,e) Var(i,-e)` pairs cancel.
    pub fn new(arity: usize, word: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut out: Vec<Letter> = Vec::new();
        for letter in word {
            match letter {
                Letter::Const(0) => continue,
                Letter::Var { pos, exp } if pos >= arity || (exp != 1 && exp != -1) => {
                    return Err(Error::InvalidInput(format!("bad variable letter x{pos}^{exp} for arity {arity}")));
                }
                _ => {}
            }
            if out.last().is_some_and(|top| top.cancels(&letter)) {
                out.pop();
            } else {
                out.push(letter);
            }
        }
        Ok(Monomial { arity, word: out })
    }

    pub fn identity(arity: usize) -> Self {
        Monomial { arity, word: Vec::new() }
    }

    /// The projection onto argument `pos`.
    pub fn projection(arity: usize, pos: usize) -> Self {
        assert!(pos < arity);
        Monomial { arity, word: vec![Letter::var(pos)] }
    }

    /// `[x₀, x₁] = x₀⁻¹x₁⁻¹x₀x₁`.
    pub fn commutator_word() -> Self {
        Monomial {
            arity: 2,
            word: vec![Letter::var_inv(0), Letter::var_inv(1), Letter::var(0), Letter::var(1)],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Pointwise product `self · other`, as word concatenation.
    pub fn concat(&self, other: &Monomial) -> Result<Monomial> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: other.arity });
        }
        Monomial::new(self.arity, self.word.iter().chain(&other.word).copied())
    }

    pub fn inverse(&self, group: &FiniteGroup) -> Monomial {
        let word = self
            .word
            .iter()
            .rev()
            .map(|l| match *l {
                Letter::Const(c) => Letter::Const(group.inv(c)),
                Letter::Var { pos, exp } => Letter::Var { pos, exp: -exp },
            })
            .collect();
        Monomial { arity: self.arity, word }
    }

    /// Pointwise commutator `[self, other]`.
    pub fn commutator(&self, other: &Monomial, group: &FiniteGroup) -> Result<Monomial> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: other.arity });
        }
        let word: Vec<Letter> = self
            .inverse(group)
            .word
            .into_iter()
            .chain(other.inverse(group).word)
            .chain(self.word.iter().copied())
            .chain(other.word.iter().copied())
            .collect();
        Ok(Monomial::new(self.arity, word)?.reduced(group))
    }

    /// Reinterprets the monomial with a larger arity; variables keep their positions.
    pub fn widen(&self, arity: usize) -> Monomial {
        assert!(arity >= self.arity);
        Monomial { arity, word: self.word.clone() }
    }

    /// Free reduction that also merges adjacent constants using the group law.
    pub fn reduced(&self, group: &FiniteGroup) -> Monomial {
        let mut out: Vec<Letter> = Vec::with_capacity(self.word.len());
        for &letter in &self.word {
            match (out.last().copied(), letter) {
                (Some(Letter::Const(c)), Letter::Const(d)) => {
                    out.pop();
                    let cd = group.mul(c, d);
                    if cd != 0 {
                        out.push(Letter::Const(cd));
                    }
                }
                (_, Letter::Const(0)) => {}
                (Some(top), _) if top.cancels(&letter) => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        Monomial { arity: self.arity, word: out }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, letter) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            match letter {
                Letter::Const(c) => write!(f, "c{c}")?,
                Letter::Var { pos, exp: 1 } => write!(f, "x{pos}")?,
                Letter::Var { pos, .. } => write!(f, "x{pos}⁻¹")?,
            }
        }
        Ok(())
    }
}

/// Left-to-right product of the letters with `Var(i,e) ↦ args[i]^e`.
pub fn evaluate(group: &FiniteGroup, f: &Monomial, args: &[Elem]) -> Result<Elem> {
    if args.len() != f.arity {
        return Err(Error::ArityMismatch { expected: f.arity, got: args.len() });
    }
    Ok(eval_unchecked(group, f, args))
}

#[inline]
fn eval_unchecked(group: &FiniteGroup, f: &Monomial, args: &[Elem]) -> Elem {
    f.word.iter().fold(0, |acc, letter| {
        let x = match *letter {
            Letter::Const(c) => c,
            Letter::Var { pos, exp: 1 } => args[pos],
            Letter::Var { pos, .. } => group.inv(args[pos]),
        };
        group.mul(acc, x)
    })
}

/// Calls `visit` on every tuple in `Gᵏ` with at least one coordinate in `marked`,
/// each exactly once. Stops early when `visit` returns `false`.
fn for_each_marked_tuple(
    group: &FiniteGroup,
    arity: usize,
    marked: &ElementSet,
    mut visit: impl FnMut(&[Elem]) -> bool,
) -> bool {
    let all: Vec<Elem> = group.elements().collect();
    let unmarked: Vec<Elem> = group.elements().filter(|&g| !marked.contains(g)).collect();
    let marked: Vec<Elem> = marked.iter().collect();
    let mut tuple = vec![0; arity];
    // Partition by the first marked position p: coordinates before p unmarked, p marked, after p free.
    for p in 0..arity {
        let choices: Vec<&[Elem]> = (0..arity)
            .map(|i| match i.cmp(&p) {
                std::cmp::Ordering::Less => unmarked.as_slice(),
                std::cmp::Ordering::Equal => marked.as_slice(),
                std::cmp::Ordering::Greater => all.as_slice(),
            })
            .collect();
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; arity];
        loop {
            for i in 0..arity {
                tuple[i] = choices[i][idx[i]];
            }
            if !visit(&tuple) {
                return false;
            }
            let mut i = 0;
            loop {
                if i == arity {
                    break;
                }
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == arity {
                break;
            }
        }
    }
    true
}

/// Whether `f` evaluates to the identity on every tuple with an identity coordinate.
pub fn is_homogeneous(group: &FiniteGroup, f: &Monomial) -> bool {
    for_each_marked_tuple(group, f.arity, &group.trivial(), |t| eval_unchecked(group, f, t) == 0)
}

/// Whether `f` evaluates to the identity on every tuple with a central coordinate.
pub fn check_central_vanishing(group: &FiniteGroup, f: &Monomial) -> Result<bool> {
    if f.arity < 2 {
        return Err(Error::ArityTooSmall(f.arity));
    }
    if !is_homogeneous(group, f) {
        return Err(Error::NotHomogeneous);
    }
    Ok(for_each_marked_tuple(group, f.arity, &group.center(), |t| eval_unchecked(group, f, t) == 0))
}

/// Writes `target` as a product of conjugates `c·g^{±1}·c⁻¹` and returns the
/// corresponding arity-1 monomial, which is homogeneous by construction.
///
/// Breadth-first search over the number of factors; factors are tried with
/// exponent `+1` before `-1` and conjugators in index order, so `target = g`
/// yields the bare projection.
pub fn conjugate_expression(group: &FiniteGroup, g: Elem, target: Elem) -> Result<Monomial> {
    let mut factors: Vec<(Elem, i8, Elem)> = Vec::new();
    let mut seen = ElementSet::empty(group.order());
    for exp in [1i8, -1] {
        let base = if exp == 1 { g } else { group.inv(g) };
        for c in group.elements() {
            let value = group.conjugate(base, c);
            if seen.insert(value) {
                factors.push((c, exp, value));
            }
        }
    }

    const NONE: usize = usize::MAX;
    let mut parent = vec![(NONE, NONE); group.order()];
    let mut visited = ElementSet::from_elems(group.order(), [0]);
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        if x == target {
            break;
        }
        for (k, &(_, _, value)) in factors.iter().enumerate() {
            let y = group.mul(x, value);
            if visited.insert(y) {
                parent[y] = (x, k);
                queue.push_back(y);
            }
        }
    }
    if !visited.contains(target) {
        return Err(Error::NotInClosure { generator: g, target });
    }

    let mut chain = Vec::new();
    let mut x = target;
    while x != 0 {
        let (prev, k) = parent[x];
        chain.push(k);
        x = prev;
    }
    let word = chain.into_iter().rev().flat_map(|k| {
        let (c, exp, _) = factors[k];
        [Letter::Const(c), Letter::Var { pos: 0, exp }, Letter::Const(group.inv(c))]
    });
    Monomial::new(1, word)
}

/// Smallest element whose normal closure is not nilpotent.
pub fn find_non_nilpotent_generator(group: &FiniteGroup) -> Result<Elem> {
    if central_series(group).nilpotent {
        return Err(Error::GroupIsNilpotent);
    }
    for a in group.elements() {
        let closure = normal_closure(group, &ElementSet::from_elems(group.order(), [a]));
        if !relative_central_series(group, &closure)?.nilpotent {
            return Ok(a);
        }
    }
    Err(Error::InternalContradiction(
        "non-nilpotent group whose normal closures of single elements are all nilpotent".into(),
    ))
}

/// Data recorded while building a [`Witness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessTrace {
    /// Normal closure of `a`.
    pub closure_order: usize,
    /// Hypercenter of that closure.
    pub hypercenter: ElementSet,
    /// First index of the repeated `b` value.
    pub m: usize,
    /// Second index of the repeated `b` value.
    pub m_prime: usize,
    /// `a_i` for `i < m'`.
    pub a_seq: Vec<Elem>,
    /// `b_i` for `i ≤ m'`, with `b_{i+1} = [a_i, b_i]`.
    pub b_seq: Vec<Elem>,
    /// Arity-1 monomials with `f_i(a) = a_i`, for `m ≤ i < m'`.
    pub factors: Vec<Monomial>,
}

/// `a`, `b ≠ 1` and a homogeneous arity-2 monomial with `f(a, b) = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub group: FiniteGroup,
    pub a: Elem,
    pub b: Elem,
    pub f: Monomial,
    pub trace: WitnessTrace,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Witness", 6)?;
        st.serialize_field("group", self.group.label())?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("monomial_length", &self.f.len())?;
        st.serialize_field("monomial", &self.f)?;
        st.serialize_field("trace", &self.trace)?;
        st.end()
    }
}

/// Outcome of re-checking a witness by direct evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub b_nontrivial: bool,
    pub fixes_b: bool,
    pub homogeneous: bool,
}

impl WitnessCheck {
    pub fn passed(&self) -> bool {
        self.b_nontrivial && self.fixes_b && self.homogeneous
    }
}

impl Witness {
    pub fn check(&self) -> WitnessCheck {
        WitnessCheck {
            b_nontrivial: self.b != 0,
            fixes_b: self.f.arity() == 2 && eval_unchecked(&self.group, &self.f, &[self.a, self.b]) == self.b,
            homogeneous: self.f.arity() == 2 && is_homogeneous(&self.group, &self.f),
        }
    }
}

/// Builds `(a, b, f)` with `f` homogeneous and `f(a, b) = b` for a non-nilpotent group.
///
/// `A` is the normal closure of `a` and `A₁` its hypercenter. Starting from the
/// smallest `b₀ ∈ A − A₁`, each `a_i` is the smallest element of `A` with
/// `[a_i, b_i] ∉ A₁` and `b_{i+1} = [a_i, b_i]`. At the first repetition
/// `b_m = b_{m'}` the monomial
/// `(x, y) ↦ [f_{m'-1}(x), [f_{m'-2}(x), … [f_m(x), y] …]]` maps `(a, b_m)` to `b_m`.
pub fn find_witness(group: &FiniteGroup) -> Result<Witness> {
    let a = find_non_nilpotent_generator(group)?;
    let closure = normal_closure(group, &ElementSet::from_elems(group.order(), [a]));
    let hypercenter = relative_central_series(group, &closure)?.hypercenter;
    let outside = |x: Elem| closure.contains(x) && !hypercenter.contains(x);

    let Some(b0) = group.elements().find(|&x| outside(x)) else {
        return Err(Error::InternalContradiction("closure equals its hypercenter".into()));
    };
    let mut first_seen: Vec<Option<usize>> = vec![None; group.order()];
    first_seen[b0] = Some(0);
    let mut a_seq = Vec::new();
    let mut b_seq = vec![b0];
    let (m, m_prime) = loop {
        if a_seq.len() > closure.len() {
            return Err(Error::InternalContradiction("b-sequence did not repeat within |A|+1 steps".into()));
        }
        let b = *b_seq.last().unwrap();
        let Some(ai) = closure.iter().find(|&x| outside(group.commutator(x, b))) else {
            return Err(Error::InternalContradiction(format!("b = {b} is central modulo the hypercenter")));
        };
        let next = group.commutator(ai, b);
        a_seq.push(ai);
        b_seq.push(next);
        if let Some(m) = first_seen[next] {
            break (m, b_seq.len() - 1);
        }
        first_seen[next] = Some(b_seq.len() - 1);
    };

    let factors = (m..m_prime)
        .map(|i| conjugate_expression(group, a, a_seq[i]))
        .collect::<Result<Vec<_>>>()?;
    let mut f = Monomial::projection(2, 1);
    for fi in &factors {
        f = fi.widen(2).commutator(&f, group)?;
    }

    let witness = Witness {
        group: group.clone(),
        a,
        b: b_seq[m],
        f,
        trace: WitnessTrace {
            closure_order: closure.len(),
            hypercenter,
            m,
            m_prime,
            a_seq,
            b_seq,
            factors,
        },
    };
    let check = witness.check();
    if !check.passed() {
        return Err(Error::InternalContradiction(format!("witness failed re-check: {check:?}")));
    }
    Ok(witness)
}

/// Result of the bounded search for a homogeneous `f` and `b ≠ 1` with `f(a,b) = b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustReport {
    pub group: String,
    pub max_len: usize,
    pub alphabet_size: usize,
    pub words_examined: u64,
    pub homogeneous_words: u64,
    pub no_witness: bool,
    pub counterexample: Option<(Monomial, Elem, Elem)>,
}

pub fn exhaust_no_witness(group: &FiniteGroup, max_len: usize) -> Result<bool> {
    Ok(exhaust_report(group, max_len, DEFAULT_WORD_CAP)?.no_witness)
}

/// Runs the search over every word produced by [`for_each_word`].
///
/// Skipped words equal a shorter word as maps, so the search is complete up to
/// `max_len`. `cap` bounds `Σ_k |alphabet|^k`.
pub fn exhaust_report(group: &FiniteGroup, max_len: usize, cap: u64) -> Result<ExhaustReport> {
    let alphabet_size = group.order() - 1 + 4;
    let size = alphabet_size as u128;
    let bound: u128 = (0..=max_len as u32).map(|k| size.saturating_pow(k)).fold(0u128, u128::saturating_add);
    if bound > cap as u128 {
        return Err(Error::SearchSpaceTooLarge { words: bound, cap });
    }

    let mut report = ExhaustReport {
        group: group.label().to_string(),
        max_len,
        alphabet_size,
        words_examined: 0,
        homogeneous_words: 0,
        no_witness: true,
        counterexample: None,
    };
    let mut found = None;
    for_each_word(group, max_len, |f| {
        report.words_examined += 1;
        if is_homogeneous(group, f) {
            report.homogeneous_words += 1;
            for a in group.elements() {
                for b in 1..group.order() {
                    if eval_unchecked(group, f, &[a, b]) == b {
                        found = Some((f.clone(), a, b));
                        return false;
                    }
                }
            }
        }
        true
    });
    report.no_witness = found.is_none();
    report.counterexample = found;
    Ok(report)
}

/// Visits every normal-form arity-2 word of length at most `max_len` in
/// depth-first order, until `visit` returns `false`.
///
/// The alphabet is `Const(c)` for `c ≠ 1` and `x₀^{±1}, x₁^{±1}`. Words with two
/// adjacent constants or a cancelling variable pair are skipped.
pub fn for_each_word(group: &FiniteGroup, max_len: usize, mut visit: impl FnMut(&Monomial) -> bool) {
    let mut alphabet: Vec<Letter> = (1..group.order()).map(Letter::Const).collect();
    alphabet.extend([Letter::var(0), Letter::var_inv(0), Letter::var(1), Letter::var_inv(1)]);
    let mut f = Monomial { arity: 2, word: Vec::with_capacity(max_len) };
    walk_words(&alphabet, max_len, &mut f, &mut visit);
}

fn walk_words(alphabet: &[Letter], max_len: usize, f: &mut Monomial, visit: &mut impl FnMut(&Monomial) -> bool) -> bool {
    if !visit(f) {
        return false;
    }
    if f.word.len() == max_len {
        return true;
    }
    for &letter in alphabet {
        let skip = match (f.word.last(), letter) {
            (Some(Letter::Const(_)), Letter::Const(_)) => true,
            (Some(top), _) => top.cancels(&letter),
            (None, _) => false,
        };
        if skip {
            continue;
        }
        f.word.push(letter);
        let go_on = walk_words(alphabet, max_len, f, visit);
        f.word.pop();
        if !go_on {
            return false;
        }
    }
    true
}
