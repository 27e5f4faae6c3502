//! The Weyl group action on 2-roots and on canonical coordinates.

use std::collections::{HashMap, VecDeque};

use crate::basis::{is_sign_coherent, CanonicalBasis};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::roots::{norm, Root};
use crate::symsq::SymSquare;

/// What a simple reflection does to a basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionCase {
    Fix,
    Negate,
    /// `s(b) = b + b'` with `b'` the basis element at this index.
    Add(usize),
}

/// The reflection in a real root `γ` applied to `t`, as `R S Rᵀ`.
pub fn reflect_tworoot(d: &Diagram, gamma: &Root, t: &SymSquare<i64>) -> Result<SymSquare<i64>> {
    let g = norm(d, gamma)?;
    if g != 2 {
        return Err(Error::NotARealRoot(g));
    }
    if t.n() != d.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: t.n(),
        });
    }
    Ok(t.reflect_by(d, gamma.coeffs()))
}

/// Classifies `s_γ(b_k)` for a simple vertex `γ`.
pub fn simple_action_on_basis(basis: &CanonicalBasis, gamma: usize, k: usize) -> Result<ActionCase> {
    let d = basis.diagram();
    d.check_vertex(gamma)?;
    if k >= basis.len() {
        return Err(Error::NotInBasis);
    }
    let b = &basis.get(k).tworoot;
    let image = b.reflect_simple(d, gamma);
    if image == *b {
        return Ok(ActionCase::Fix);
    }
    if image == b.neg() {
        return Ok(ActionCase::Negate);
    }
    basis
        .index_of(&image.sub(b))
        .map(ActionCase::Add)
        .ok_or(Error::NotInBasis)
}

/// Generator matrices of the action on canonical coordinates, with the
/// case table they are built from.
#[derive(Clone, Debug)]
pub struct BasisAction {
    cases: Vec<Vec<ActionCase>>,
    generators: Vec<Matrix<i64>>,
}

impl BasisAction {
    pub fn new(basis: &CanonicalBasis) -> Result<Self> {
        let n = basis.diagram().n();
        let k = basis.len();
        let mut cases = Vec::with_capacity(n);
        let mut generators = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<ActionCase> = (0..k)
                .map(|c| simple_action_on_basis(basis, i, c))
                .collect::<Result<_>>()?;
            let mut g = Matrix::zeros(k, k);
            for (c, case) in row.iter().enumerate() {
                match *case {
                    ActionCase::Fix => g[(c, c)] = 1,
                    ActionCase::Negate => g[(c, c)] = -1,
                    ActionCase::Add(t) => {
                        g[(c, c)] = 1;
                        g[(t, c)] += 1;
                    }
                }
            }
            cases.push(row);
            generators.push(g);
        }
        Ok(BasisAction { cases, generators })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn dim(&self) -> usize {
        self.cases.first().map_or(0, Vec::len)
    }

    pub fn case(&self, i: usize, k: usize) -> ActionCase {
        self.cases[i][k]
    }

    pub fn generator(&self, i: usize) -> &Matrix<i64> {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[Matrix<i64>] {
        &self.generators
    }

    /// `s_i` applied to a coordinate vector.
    pub fn apply_generator(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for (c, &v) in x.iter().enumerate() {
            if v == 0 {
                continue;
            }
            match self.cases[i][c] {
                ActionCase::Fix => out[c] += v,
                ActionCase::Negate => out[c] -= v,
                ActionCase::Add(t) => {
                    out[c] += v;
                    out[t] += v;
                }
            }
        }
        out
    }

    /// `w = w[0] w[1] …` applied to coordinates, rightmost generator first.
    pub fn apply_word(&self, word: &[usize], x: &[i64]) -> Vec<i64> {
        word.iter()
            .rev()
            .fold(x.to_vec(), |acc, &i| self.apply_generator(i, &acc))
    }

    /// Matrix of `w[0] w[1] …` over the basis; column `j` holds the
    /// coordinates of `w(b_j)`.
    pub fn word_matrix(&self, word: &[usize]) -> Matrix<i64> {
        let k = self.dim();
        let cols: Vec<Vec<i64>> = (0..k)
            .map(|j| {
                let mut e = vec![0; k];
                e[j] = 1;
                self.apply_word(word, &e)
            })
            .collect();
        Matrix::from_fn(k, k, |r, c| cols[c][r])
    }
}

/// The same matrix as [`BasisAction::word_matrix`], computed by acting on
/// each basis element by conjugation and expanding the result.
pub fn word_matrix_by_conjugation(basis: &CanonicalBasis, word: &[usize]) -> Result<Matrix<i64>> {
    let d = basis.diagram();
    let k = basis.len();
    let mut cols = Vec::with_capacity(k);
    for e in basis.elements() {
        cols.push(basis.expand_integral(&e.tworoot.apply_word(d, word))?);
    }
    Ok(Matrix::from_fn(k, k, |r, c| cols[c][r]))
}

/// Every column has entries of one sign.
pub fn columns_sign_coherent(m: &Matrix<i64>) -> bool {
    (0..m.cols()).all(|c| is_sign_coherent(&m.column(c)))
}

/// The map `v ↦ s_i s_j(v)` from the elements `α_i ∨ β` of the basis onto
/// the elements `α_j ∨ β'`, as index pairs.
pub fn star_bijection(basis: &CanonicalBasis, i: usize, j: usize) -> Result<Vec<(usize, usize)>> {
    let d = basis.diagram();
    d.check_vertex(i)?;
    d.check_vertex(j)?;
    if !d.adjacent(i, j) {
        return Err(Error::NotAdjacent(i, j));
    }
    basis
        .star(i)
        .into_iter()
        .map(|k| {
            let image = basis.get(k).tworoot.apply_word(d, &[i, j]);
            match basis.index_of(&image) {
                Some(t) if basis.get(t).involves(j) => Ok((k, t)),
                _ => Err(Error::NotInBasis),
            }
        })
        .collect()
}

/// Breadth-first search for a word in the reflections along `roots` that
/// carries `from` to `to`, up to `max_depth` letters. The word lists root
/// indices, rightmost applied first.
pub fn conjugating_word(
    d: &Diagram,
    roots: &[Root],
    from: &SymSquare<i64>,
    to: &SymSquare<i64>,
    max_depth: usize,
) -> Option<Vec<usize>> {
    let mut seen: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    seen.insert(from.key().to_vec(), Vec::new());
    let mut queue = VecDeque::from([(from.clone(), 0usize)]);
    while let Some((s, depth)) = queue.pop_front() {
        let word = seen[s.key()].clone();
        if s == *to {
            return Some(word);
        }
        if depth == max_depth {
            continue;
        }
        for (r, root) in roots.iter().enumerate() {
            let next = s.reflect_by(d, root.coeffs());
            if !seen.contains_key(next.key()) {
                let mut w = vec![r];
                w.extend(&word);
                seen.insert(next.key().to_vec(), w);
                queue.push_back((next, depth + 1));
            }
        }
    }
    None
}

/// Integer coordinates of `s_γ(t)`, for checks that bypass the case table.
pub fn reflect_and_expand(basis: &CanonicalBasis, gamma: usize, t: &SymSquare<i64>) -> Result<Vec<i64>> {
    let image = t.reflect_simple(basis.diagram(), gamma);
    basis.expand_integral(&image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(a: usize, b: usize, c: usize) -> (CanonicalBasis, BasisAction) {
        let d = Diagram::y(a, b, c).unwrap();
        let basis = CanonicalBasis::new(&d).unwrap();
        let action = BasisAction::new(&basis).unwrap();
        (basis, action)
    }

    #[test]
    fn generators_are_involutions() {
        let (basis, action) = setup(1, 2, 2);
        let id = Matrix::identity(basis.len());
        for g in action.generators() {
            assert_eq!(g.mul(g), id);
        }
    }

    #[test]
    fn empty_word_is_identity() {
        let (basis, action) = setup(1, 1, 2);
        assert_eq!(action.word_matrix(&[]), Matrix::identity(basis.len()));
    }

    #[test]
    fn both_routes_agree() {
        let (basis, action) = setup(1, 2, 3);
        let word = [0, 3, 5, 1, 2, 6, 0, 4];
        assert_eq!(action.word_matrix(&word), word_matrix_by_conjugation(&basis, &word).unwrap());
    }

    #[test]
    fn negate_on_component() {
        let (basis, _) = setup(1, 1, 1);
        let k = basis
            .elements()
            .iter()
            .position(|e| e.vertex == 0)
            .unwrap();
        assert_eq!(simple_action_on_basis(&basis, 0, k).unwrap(), ActionCase::Negate);
    }

    #[test]
    fn star_round_trip() {
        let (basis, _) = setup(1, 2, 2);
        let d = basis.diagram().clone();
        for (i, j) in d.edges() {
            let there = star_bijection(&basis, i, j).unwrap();
            let back: HashMap<usize, usize> = star_bijection(&basis, j, i).unwrap().into_iter().collect();
            assert_eq!(there.len(), d.n() - 1);
            for (k, t) in there {
                assert_eq!(back[&t], k);
            }
        }
        assert_eq!(star_bijection(&basis, 1, 2), Err(Error::NotAdjacent(1, 2)));
    }

    #[test]
    fn reflect_requires_real_root() {
        let d = Diagram::y(1, 1, 1).unwrap();
        let t = SymSquare::of_roots(&Root::simple(4, 1), &Root::simple(4, 2)).unwrap();
        assert_eq!(reflect_tworoot(&d, &Root::simple(4, 0).scale(2), &t), Err(Error::NotARealRoot(8)));
        let flipped = reflect_tworoot(&d, &Root::simple(4, 1), &t).unwrap();
        assert_eq!(flipped, t.neg());
    }
}
