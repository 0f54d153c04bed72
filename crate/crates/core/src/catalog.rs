//! Built-in groups.
//!
//! Every group here is built from permutations, so its preferred generators are
//! the permutation generators listed below.

use crate::group::{perm_from_cycles, FiniteGroup, Perm};

fn build(label: &str, degree: usize, gens: Vec<Perm>) -> FiniteGroup {
    FiniteGroup::from_permutations(label, degree, &gens).expect("catalog groups are valid")
}

/// `Z/n`, generated by an `n`-cycle.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let gens = if n == 1 { vec![] } else { vec![perm_from_cycles(n, &[&(0..n).collect::<Vec<_>>()])] };
    build(&format!("Z{n}"), n, gens)
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroup {
    let rotation = perm_from_cycles(n, &[&(0..n).collect::<Vec<_>>()]);
    let reflection: Perm = (0..n).map(|i| (n - i) % n).collect();
    build(&format!("D{n}"), n, vec![rotation, reflection])
}

pub fn s3() -> FiniteGroup {
    build("S3", 3, vec![perm_from_cycles(3, &[&[0, 1]]), perm_from_cycles(3, &[&[0, 1, 2]])])
}

pub fn a4() -> FiniteGroup {
    build("A4", 4, vec![perm_from_cycles(4, &[&[0, 1, 2]]), perm_from_cycles(4, &[&[1, 2, 3]])])
}

pub fn s4() -> FiniteGroup {
    build("S4", 4, vec![perm_from_cycles(4, &[&[0, 1]]), perm_from_cycles(4, &[&[0, 1, 2, 3]])])
}

pub fn a5() -> FiniteGroup {
    build("A5", 5, vec![perm_from_cycles(5, &[&[0, 1, 2, 3, 4]]), perm_from_cycles(5, &[&[0, 1, 2]])])
}

pub fn s3_x_z2() -> FiniteGroup {
    build(
        "S3xZ2",
        5,
        vec![perm_from_cycles(5, &[&[0, 1]]), perm_from_cycles(5, &[&[0, 1, 2]]), perm_from_cycles(5, &[&[3, 4]])],
    )
}

/// Quaternion group in its right regular representation.
///
/// Points `2u + s` stand for `±1, ±i, ±j, ±k` with unit `u ∈ {1,i,j,k}` and sign bit `s`.
pub fn q8() -> FiniteGroup {
    // unit products: UNIT[u][v] = (sign, unit) of u·v.
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = |x: usize, y: usize| {
        let (s, u) = UNIT[x / 2][y / 2];
        2 * u + ((x % 2) ^ (y % 2) ^ s)
    };
    let right = |y: usize| (0..8).map(|x| mul(x, y)).collect::<Perm>();
    build("Q8", 8, vec![right(2), right(4)])
}

/// `SL(2,3)` acting on the eight nonzero row vectors of `F₃²`.
pub fn sl23() -> FiniteGroup {
    let vectors: Vec<(usize, usize)> =
        (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[usize; 2]; 2]| -> Perm {
        vectors
            .iter()
            .map(|&(x, y)| {
                let image = ((x * m[0][0] + y * m[1][0]) % 3, (x * m[0][1] + y * m[1][1]) % 3);
                vectors.iter().position(|&v| v == image).unwrap()
            })
            .collect()
    };
    build("SL(2,3)", 8, vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

/// The full built-in catalog.
pub fn all() -> Vec<FiniteGroup> {
    let mut groups: Vec<FiniteGroup> = (1..=12).map(cyclic).collect();
    groups.extend([q8(), dihedral(4), dihedral(5), s3(), a4(), s4(), a5(), sl23(), s3_x_z2()]);
    groups
}

fn normalize(label: &str) -> String {
    label.to_lowercase().chars().filter(|c| !matches!(c, '/' | ' ' | '_' | '(' | ')' | ',')).map(|c| if c == '×' || c == '*' { 'x' } else { c }).collect()
}

/// Looks up a catalog group by label, ignoring case, spaces and `/`, `(`, `)`, `,`.
///
/// `Z/6`, `z6`, `SL(2,3)`, `sl23` and `S3xZ/2` all resolve.
pub fn by_label(label: &str) -> Option<FiniteGroup> {
    let key = normalize(label);
    all().into_iter().find(|g| normalize(g.label()) == key)
}
