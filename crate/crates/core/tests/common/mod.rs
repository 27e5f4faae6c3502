#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use tworoots::{BasisAction, CanonicalBasis, Diagram};

pub fn setup(d: &Diagram) -> (CanonicalBasis, BasisAction) {
    let basis = CanonicalBasis::new(d).unwrap();
    let action = BasisAction::new(&basis).unwrap();
    (basis, action)
}

/// Adjacency of Y(a,b,c) with the branch at 0 and arms numbered outward,
/// built without the library.
pub fn y_edges(a: usize, b: usize, c: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    edges
}

pub fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub fn cartan_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    a
}

pub fn form(a: &[Vec<i64>], u: &[i64], v: &[i64]) -> i64 {
    let n = u.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| u[i] * a[i][j] * v[j])
        .sum()
}

/// Positive roots of a finite type by closing the simple roots under
/// simple reflections, keeping positive vectors.
pub fn positive_roots_oracle(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|j| a[i][j] * r[j]).sum();
            let mut s = r.clone();
            s[i] -= p;
            if s.iter().all(|&x| x >= 0) && s.iter().any(|&x| x > 0) && seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn orthogonal_pair_count(a: &[Vec<i64>]) -> usize {
    let roots = positive_roots_oracle(a);
    let mut count = 0;
    for (x, r) in roots.iter().enumerate() {
        for s in &roots[x + 1..] {
            if form(a, r, s) == 0 {
                count += 1;
            }
        }
    }
    count
}

pub fn e6() -> Diagram {
    Diagram::y(1, 2, 2).unwrap()
}

pub fn e7() -> Diagram {
    Diagram::y(1, 2, 3).unwrap()
}

pub fn e8() -> Diagram {
    Diagram::y(1, 2, 4).unwrap()
}

/// D_n for n ≥ 4.
pub fn d(n: usize) -> Diagram {
    Diagram::y(1, 1, n - 3).unwrap()
}
