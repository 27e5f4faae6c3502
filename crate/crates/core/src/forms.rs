//! Invariant bilinear forms on the symmetric square, Gram matrices and
//! radicals, the Virasoro element, the decomposition of `S²(V)`, and the
//! norm-two witnesses in hyperbolic types.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::action::BasisAction;
use crate::basis::{is_sign_coherent, CanonicalBasis};
use crate::diagram::{Diagram, DiagramKind, TypeClass};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::orbits::Orbit;
use crate::roots::{bform, cartan_apply, delta, Root};
use crate::scalar::{Field, Fp, Halve, Scalar};
use crate::symsq::{sym_dim, SymSquare};
use crate::Rational;

/// `A S` for the Cartan matrix of `d`.
fn cartan_times<T: Scalar>(d: &Diagram, s: &Matrix<T>) -> Matrix<T> {
    let n = d.n();
    Matrix::from_fn(n, s.cols(), |i, c| {
        let mut v = T::from_i64(2) * s[(i, c)].clone();
        for &j in d.neighbors(i) {
            v = v - s[(j, c)].clone();
        }
        v
    })
}

/// `B′(S, T) = ½ trace(A S A T)`.
pub fn bprime<T: Halve>(d: &Diagram, s: &SymSquare<T>, t: &SymSquare<T>) -> T {
    let x = cartan_times(d, s.matrix());
    let y = cartan_times(d, t.matrix());
    let n = d.n();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            acc = acc + x[(i, j)].clone() * y[(j, i)].clone();
        }
    }
    acc.halve()
}

/// `B′(α_i ∨ α_j, α_k ∨ α_l) = A_ik A_jl + A_il A_jk`, the permanent of the
/// 2×2 block of the Cartan matrix.
pub fn bprime_permanent(d: &Diagram, (i, j): (usize, usize), (k, l): (usize, usize)) -> i64 {
    let a = d.cartan();
    a.entry(i, k) * a.entry(j, l) + a.entry(i, l) * a.entry(j, k)
}

/// `B̃(X, Y) = trace(Xᵀ A Y A)` on `V ⊗ V`, with `X_ij` the coefficient of
/// `α_i ⊗ α_j`.
pub fn btilde<T: Scalar>(d: &Diagram, x: &Matrix<T>, y: &Matrix<T>) -> T {
    let ay = cartan_times(d, y);
    let aya = cartan_times(d, &ay.transpose()).transpose();
    x.data()
        .iter()
        .zip(aya.data())
        .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// `(s_α − 1)(s_β − 1) v`, computed by conjugation.
pub fn c_pair_apply<T: Scalar>(d: &Diagram, alpha: &Root, beta: &Root, v: &SymSquare<T>) -> Result<SymSquare<T>> {
    for r in [alpha, beta] {
        let nr = bform(d, r, r)?;
        if nr != 2 {
            return Err(Error::NotARealRoot(nr));
        }
    }
    if bform(d, alpha, beta)? != 0 {
        return Err(Error::NotOrthogonal);
    }
    let sb = v.reflect_by(d, beta.coeffs());
    let first = sb.sub(v);
    Ok(first.reflect_by(d, alpha.coeffs()).sub(&first))
}

/// Gram matrix of `B′` on a list of integer elements.
pub fn gram(d: &Diagram, elems: &[SymSquare<i64>]) -> Matrix<i64> {
    let k = elems.len();
    let mut g = Matrix::zeros(k, k);
    for r in 0..k {
        for c in r..k {
            let v = bprime(d, &elems[r], &elems[c]);
            g[(r, c)] = v;
            g[(c, r)] = v;
        }
    }
    g
}

pub fn gram_mod_p<const P: u64>(g: &Matrix<i64>) -> Matrix<Fp<P>> {
    g.map(|&v| Fp::new(v))
}

pub fn to_rational(g: &Matrix<i64>) -> Matrix<Rational> {
    g.map(|&v| Rational::from_integer(v.into()))
}

/// Basis of the null space of a symmetric form's Gram matrix.
pub fn radical<F: Field>(g: &Matrix<F>) -> Vec<Vec<F>> {
    g.nullspace()
}

/// Gram matrix of `B′` over the canonical basis elements with the given
/// indices.
pub fn basis_gram(basis: &CanonicalBasis, indices: &[usize]) -> Matrix<i64> {
    let elems: Vec<SymSquare<i64>> = indices.iter().map(|&k| basis.get(k).tworoot.clone()).collect();
    gram(basis.diagram(), &elems)
}

/// `ω = Σ α_i* ⊗ α_i`, whose matrix is `A⁻¹`.
pub fn virasoro(d: &Diagram) -> Result<SymSquare<Rational>> {
    let inv = d.cartan().to_rational().inverse().ok_or(Error::SingularCartan)?;
    SymSquare::from_matrix(inv)
}

/// The elements `δ ∨ α_i` and `δ ∨ δ` of an affine diagram, each checked to
/// lie in `M`, to pair to zero with every basis element under `B′`, and
/// together to span the radical.
pub fn affine_radical_witness(basis: &CanonicalBasis) -> Result<Vec<SymSquare<i64>>> {
    let d = basis.diagram();
    let dl = delta(d)?;
    let n = d.n();
    let mut out: Vec<SymSquare<i64>> = (0..n)
        .map(|i| SymSquare::of_roots(&dl, &Root::simple(n, i)))
        .collect::<Result<_>>()?;
    out.push(SymSquare::of_roots(&dl, &dl)?);
    for w in &out {
        if w.m_functional(d) != 0 {
            return Err(Error::NotInSubmodule(w.m_functional(d).to_string()));
        }
        if basis.elements().iter().any(|e| bprime(d, w, &e.tworoot) != 0) {
            return Err(Error::Unsupported("witness is not in the radical".into()));
        }
    }
    let coords: Vec<Vec<Rational>> = out.iter().map(|w| basis.expand(w)).collect::<Result<_>>()?;
    let span = Matrix::from_rows(coords).rank();
    let rad = module_radical_dim(basis);
    if span != rad {
        return Err(Error::Unsupported(format!(
            "witnesses span {span} dimensions of a {rad}-dimensional radical"
        )));
    }
    Ok(out)
}

/// Dimension bookkeeping for `S²(V) = Fω ⊕ M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// `dim S²(V)`.
    pub total: usize,
    /// Dimension of the span of `ω` (1 in non-affine types).
    pub omega: usize,
    pub orbit_ids: Vec<usize>,
    /// `|B ∩ X_i|` for each orbit.
    pub dims: Vec<usize>,
    /// Rational radical dimension of `B′` on each orbit span.
    pub radical_dims: Vec<usize>,
    /// Part of `M` outside the orbit spans (nonzero only for paths).
    pub complement: usize,
    /// Every generator maps each orbit span into itself.
    pub invariant: bool,
}

impl Decomposition {
    pub fn is_consistent(&self) -> bool {
        self.omega + self.dims.iter().sum::<usize>() + self.complement == self.total
    }
}

/// Decomposition for a finite type, given its orbits.
pub fn decompose_s2v(basis: &CanonicalBasis, action: &BasisAction, orbits: &[Orbit]) -> Result<Decomposition> {
    let d = basis.diagram();
    if d.classify() == TypeClass::Affine {
        return Err(Error::Unsupported("affine types have a radical; use the affine witness".into()));
    }
    let mut owner = vec![usize::MAX; basis.len()];
    for o in orbits {
        for &k in &o.basis_members {
            owner[k] = o.id;
        }
    }
    let invariant = (0..action.rank()).all(|i| {
        (0..basis.len()).all(|k| match action.case(i, k) {
            crate::action::ActionCase::Add(t) => owner[t] == owner[k],
            _ => true,
        })
    });
    let radical_dims = orbits
        .iter()
        .map(|o| radical(&to_rational(&basis_gram(basis, &o.basis_members))).len())
        .collect();
    let total = sym_dim(d.n());
    let complement = match d.kind() {
        DiagramKind::Path { .. } => total - 1 - basis.len(),
        DiagramKind::Y { .. } => 0,
    };
    Ok(Decomposition {
        total,
        omega: 1,
        orbit_ids: orbits.iter().map(|o| o.id).collect(),
        dims: orbits.iter().map(|o| o.basis_members.len()).collect(),
        radical_dims,
        complement,
        invariant,
    })
}

/// Rational radical dimension of `B′` on all of `M`.
pub fn module_radical_dim(basis: &CanonicalBasis) -> usize {
    let all: Vec<usize> = (0..basis.len()).collect();
    radical(&to_rational(&basis_gram(basis, &all))).len()
}

/// A sign-coherent lattice element of norm two in a hyperbolic diagram
/// obtained by extending an affine one by a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormTwoWitness {
    pub element: SymSquare<i64>,
    pub coords: Vec<i64>,
    pub norm: i64,
}

/// Builds `((α + β) ∨ α₋₁) + (α ∨ δ)` where `α₋₁` ends the third arm, `δ` is
/// the null root of the diagram with `α₋₁` removed, `α` ends the first arm
/// and `β` is its neighbour.
pub fn norm2_witness(a: usize, b: usize, c: usize) -> Result<NormTwoWitness> {
    if !matches!((a, b, c), (2, 2, 3) | (1, 3, 4) | (1, 2, 6)) {
        return Err(Error::UnsupportedTriple(a, b, c));
    }
    let d = Diagram::y(a, b, c)?;
    let n = d.n();
    let extra = n - 1;
    let keep: Vec<usize> = (0..extra).collect();
    let sub = d.parabolic_restrict(&keep)?;
    let dl = Root(sub.embed(delta(&sub.diagram)?.coeffs(), n));
    let end = a;
    let nbr = d.neighbors(end)[0];
    let alpha = Root::simple(n, end);
    let ab = alpha.add(&Root::simple(n, nbr));
    let x = SymSquare::of_roots(&ab, &Root::simple(n, extra))?.add(&SymSquare::of_roots(&alpha, &dl)?);
    let basis = CanonicalBasis::new(&d)?;
    let coords = basis.expand_integral(&x)?;
    let norm = bprime(&d, &x, &x);
    if norm != 2 || !is_sign_coherent(&coords) {
        return Err(Error::Unsupported(format!(
            "witness has norm {norm} and coordinates {coords:?}"
        )));
    }
    Ok(NormTwoWitness {
        element: x,
        coords,
        norm,
    })
}

/// Integer coordinate vectors with entries in `-box..=box` and at most
/// `support` nonzero entries, sign-coherent, whose `B′` norm equals `target`. No claim is
/// attached to the result; it is a bounded exploration aid.
pub fn norm_search(basis: &CanonicalBasis, target: i64, support: usize, box_: i64, limit: usize) -> Vec<Vec<i64>> {
    let g = basis_gram(basis, &(0..basis.len()).collect::<Vec<_>>());
    let k = basis.len();
    let mut found = Vec::new();
    let mut coords = vec![0i64; k];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Matrix<i64>,
        start: usize,
        left: usize,
        box_: i64,
        target: i64,
        limit: usize,
        coords: &mut Vec<i64>,
        found: &mut Vec<Vec<i64>>,
    ) {
        if found.len() >= limit {
            return;
        }
        if coords.iter().any(|&c| c != 0) {
            let nz: Vec<usize> = (0..coords.len()).filter(|&i| coords[i] != 0).collect();
            let q: i64 = nz
                .iter()
                .flat_map(|&i| nz.iter().map(move |&j| (i, j)))
                .map(|(i, j)| coords[i] * g[(i, j)] * coords[j])
                .sum();
            if q == target && is_sign_coherent(coords) {
                found.push(coords.clone());
            }
        }
        if left == 0 {
            return;
        }
        for i in start..coords.len() {
            for v in (-box_..=box_).filter(|&v| v != 0) {
                coords[i] = v;
                rec(g, i + 1, left - 1, box_, target, limit, coords, found);
                coords[i] = 0;
                if found.len() >= limit {
                    return;
                }
            }
        }
    }
    rec(&g, 0, support, box_, target, limit, &mut coords, &mut found);
    found
}

/// `B̃(ω, v)` for the Virasoro element, which equals `trace(A v)`.
pub fn virasoro_pairing(d: &Diagram, omega: &SymSquare<Rational>, v: &SymSquare<Rational>) -> Rational {
    btilde(d, omega.matrix(), v.matrix())
}

/// `B̃(α_i ⊗ α_j − α_j ⊗ α_i, S)`, which vanishes for symmetric `S`.
pub fn antisymmetric_pairing(d: &Diagram, i: usize, j: usize, s: &SymSquare<i64>) -> i64 {
    let n = d.n();
    let mut x = Matrix::zeros(n, n);
    x[(i, j)] += 1;
    x[(j, i)] -= 1;
    btilde(d, &x, s.matrix())
}

/// Whether `x ↦ A x` is injective on `V`, by exact rank.
pub fn cartan_nondegenerate(d: &Diagram) -> bool {
    !d.cartan().determinant().is_zero()
}

/// Gram matrix of `B̃` on the standard basis `α_s ⊗ α_t + α_t ⊗ α_s` of `S²(V)`.
pub fn btilde_gram(d: &Diagram) -> Matrix<i64> {
    let n = d.n();
    let elems: Vec<Matrix<i64>> = (0..n)
        .flat_map(|s| (s..n).map(move |t| (s, t)))
        .map(|(s, t)| {
            let mut m = Matrix::zeros(n, n);
            m[(s, t)] += 1;
            m[(t, s)] += 1;
            m
        })
        .collect();
    let k = elems.len();
    Matrix::from_fn(k, k, |r, c| btilde(d, &elems[r], &elems[c]))
}

/// `A γ` convenience used by the identity checks.
pub fn cartan_vector(d: &Diagram, v: &Root) -> Vec<i64> {
    cartan_apply(d, v.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee(n: usize, i: usize, j: usize) -> SymSquare<i64> {
        SymSquare::of_roots(&Root::simple(n, i), &Root::simple(n, j)).unwrap()
    }

    #[test]
    fn orthogonal_simples_have_norm_four() {
        let d = Diagram::path(4).unwrap();
        assert_eq!(bprime(&d, &vee(4, 0, 2), &vee(4, 0, 2)), 4);
        assert_eq!(bprime(&d, &vee(4, 0, 2), &vee(4, 1, 3)), 1);
    }

    #[test]
    fn trace_matches_permanent_in_e6() {
        let d = Diagram::y(1, 2, 2).unwrap();
        let n = d.n();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    for l in k..n {
                        let s = vee(n, i, j).to_rational();
                        let t = vee(n, k, l).to_rational();
                        let want = Rational::from_integer(bprime_permanent(&d, (i, j), (k, l)).into());
                        assert_eq!(bprime(&d, &s, &t), want);
                    }
                }
            }
        }
    }

    #[test]
    fn virasoro_properties() {
        let d = Diagram::y(1, 1, 2).unwrap();
        let w = virasoro(&d).unwrap();
        assert_eq!(btilde(&d, w.matrix(), w.matrix()), Rational::from_integer(5.into()));
        assert!(!w.m_functional(&d).is_zero());
        for i in 0..d.n() {
            assert_eq!(w.reflect_simple(&d, i), w);
        }
        assert_eq!(virasoro(&Diagram::y(2, 2, 2).unwrap()), Err(Error::SingularCartan));
    }

    #[test]
    fn a3_gram_vanishes_mod_two() {
        let d = Diagram::path(3).unwrap();
        let basis = CanonicalBasis::new(&d).unwrap();
        let g = basis_gram(&basis, &(0..basis.len()).collect::<Vec<_>>());
        assert!(gram_mod_p::<2>(&g).is_zero());
    }

    #[test]
    fn c_pair_identity() {
        let d = Diagram::y(1, 1, 2).unwrap();
        let a = Root::simple(5, 1);
        let b = Root::simple(5, 2);
        let ab = SymSquare::of_roots(&a, &b).unwrap();
        let v = SymSquare::of_roots(&Root(vec![1, 1, 0, 1, 0]), &Root(vec![0, 1, 1, 1, 1])).unwrap();
        let lhs = c_pair_apply(&d, &a, &b, &v).unwrap();
        assert_eq!(lhs, ab.scale(&bprime(&d, &ab, &v)));
        assert_eq!(c_pair_apply(&d, &a, &b, &ab).unwrap(), ab.scale(&4));
    }

    #[test]
    fn witnesses() {
        for (a, b, c) in [(2, 2, 3), (1, 3, 4), (1, 2, 6)] {
            let w = norm2_witness(a, b, c).unwrap();
            assert_eq!(w.norm, 2);
        }
        assert_eq!(norm2_witness(1, 1, 1), Err(Error::UnsupportedTriple(1, 1, 1)));
    }
}
