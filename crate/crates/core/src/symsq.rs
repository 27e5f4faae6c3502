//! Elements of the symmetric square `S²(V)` stored as symmetric matrices,
//! the product `α ∨ β`, the functional `trace(A S)`, the reflection action
//! and recovery of components.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::roots::{bform, cartan_apply, pair_simple, Root};
use crate::scalar::{Halve, Scalar};
use crate::Rational;

/// An element of `S²(V)`: entry `(i, j)` is the coefficient of `α_i ⊗ α_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymSquare<T>(Matrix<T>);

impl<T: fmt::Debug> fmt::Debug for SymSquare<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Number of standard coordinates `α_s α_t`, `s ≤ t`.
pub fn sym_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of `(s, t)` in the standard coordinate order.
pub fn sym_index(n: usize, s: usize, t: usize) -> usize {
    let (s, t) = if s <= t { (s, t) } else { (t, s) };
    s * n - s * s.saturating_sub(1) / 2 + (t - s)
}

impl<T: Scalar> SymSquare<T> {
    pub fn zero(n: usize) -> Self {
        SymSquare(Matrix::zeros(n, n))
    }

    pub fn from_matrix(m: Matrix<T>) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::Unsupported("matrix is not symmetric".into()));
        }
        Ok(SymSquare(m))
    }

    /// `a bᵀ + b aᵀ`.
    pub fn vee(a: &[T], b: &[T]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        let n = a.len();
        Ok(SymSquare(Matrix::from_fn(n, n, |i, j| {
            a[i].clone() * b[j].clone() + b[i].clone() * a[j].clone()
        })))
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.0[(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        SymSquare(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        SymSquare(self.0.sub(&other.0))
    }

    pub fn scale(&self, k: &T) -> Self {
        SymSquare(self.0.scale(k))
    }

    pub fn neg(&self) -> Self {
        SymSquare(self.0.map(|v| -v.clone()))
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> SymSquare<U> {
        SymSquare(self.0.map(f))
    }

    /// `trace(A S)`; equals `2 B(α, β)` on `α ∨ β`.
    pub fn m_functional(&self, d: &Diagram) -> T {
        let n = self.n();
        let mut acc = T::zero();
        for i in 0..n {
            acc = acc + T::from_i64(2) * self.0[(i, i)].clone();
            for &j in d.neighbors(i) {
                acc = acc - self.0[(j, i)].clone();
            }
        }
        acc
    }

    /// The action of the simple reflection `s_i`, `S ↦ R S Rᵀ`.
    pub fn reflect_simple(&self, d: &Diagram, i: usize) -> Self {
        let n = self.n();
        let mut m = self.0.clone();
        // Row i of R S is row i of S minus row i of A S.
        let mut new_row: Vec<T> = (0..n).map(|c| -m[(i, c)].clone()).collect();
        for &j in d.neighbors(i) {
            for (c, slot) in new_row.iter_mut().enumerate() {
                *slot = slot.clone() + m[(j, c)].clone();
            }
        }
        for (c, v) in new_row.into_iter().enumerate() {
            m[(i, c)] = v;
        }
        let mut new_col: Vec<T> = (0..n).map(|r| -m[(r, i)].clone()).collect();
        for &j in d.neighbors(i) {
            for (r, slot) in new_col.iter_mut().enumerate() {
                *slot = slot.clone() + m[(r, j)].clone();
            }
        }
        for (r, v) in new_col.into_iter().enumerate() {
            m[(r, i)] = v;
        }
        SymSquare(m)
    }

    /// Applies `w[0] w[1] … w[k-1]`, rightmost generator first.
    pub fn apply_word(&self, d: &Diagram, word: &[usize]) -> Self {
        word.iter()
            .rev()
            .fold(self.clone(), |acc, &i| acc.reflect_simple(d, i))
    }

    /// The action of the reflection in an arbitrary vector `γ`, via the
    /// matrix `R = I − γ (Aγ)ᵀ`. Validity of `γ` is the caller's concern.
    pub fn reflect_by(&self, d: &Diagram, gamma: &[i64]) -> Self {
        let n = self.n();
        let ag = cartan_apply(d, gamma);
        let r = Matrix::from_fn(n, n, |i, j| {
            let id = if i == j { T::one() } else { T::zero() };
            id - T::from_i64(gamma[i] * ag[j])
        });
        SymSquare(r.mul(&self.0).mul(&r.transpose()))
    }

    /// Standard coordinates: `S_st` for `s < t` and `S_ss / 2` on the diagonal.
    pub fn standard_coords(&self) -> Vec<T>
    where
        T: Halve,
    {
        let n = self.n();
        let mut out = Vec::with_capacity(sym_dim(n));
        for s in 0..n {
            out.push(self.0[(s, s)].clone().halve());
            for t in s + 1..n {
                out.push(self.0[(s, t)].clone());
            }
        }
        out
    }

    pub fn from_standard_coords(n: usize, coords: &[T]) -> Self {
        assert_eq!(coords.len(), sym_dim(n));
        let mut m = Matrix::zeros(n, n);
        let mut k = 0;
        for s in 0..n {
            m[(s, s)] = T::from_i64(2) * coords[k].clone();
            k += 1;
            for t in s + 1..n {
                m[(s, t)] = coords[k].clone();
                m[(t, s)] = coords[k].clone();
                k += 1;
            }
        }
        SymSquare(m)
    }
}

impl SymSquare<i64> {
    pub fn of_roots(a: &Root, b: &Root) -> Result<Self> {
        SymSquare::vee(a.coeffs(), b.coeffs())
    }

    /// Every entry nonnegative and some entry positive.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.data().iter().all(|&v| v >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.data().iter().all(|&v| v <= 0)
    }

    /// Negates a negative element; anything else is returned unchanged.
    pub fn positive_form(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn to_rational(&self) -> SymSquare<Rational> {
        self.map(|&v| Rational::from_integer(v.into()))
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.0.to_rows()
    }

    /// Row-major entries, used as a hash key.
    pub fn key(&self) -> &[i64] {
        self.0.data()
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Unsupported("matrix is not square".into()));
        }
        SymSquare::from_matrix(Matrix::from_rows(rows))
    }
}

/// Recovers `(α, β)` with `S = α βᵀ + β αᵀ` from an integer symmetric matrix.
///
/// A 2×2 principal block `K` with `K₁₂² − K₁₁K₂₂ = d² > 0` determines the
/// restriction of `[α β]` to two coordinates up to the stabilizer of the
/// form `xyᵀ + yxᵀ`, that is, up to swapping and reciprocal scaling. The
/// two full columns of `S` then determine `α` and `β` up to the same
/// ambiguity, which is removed by making `α` primitive and the pair
/// positive where possible. The result is ordered by height, then
/// coefficients.
pub fn components(s: &SymSquare<i64>) -> Result<(Root, Root)> {
    let n = s.n();
    let fail = |why: &str| Error::NoDecomposition(why.to_string());
    let mut block = None;
    'search: for p in 0..n {
        for q in p + 1..n {
            let (k11, k12, k22) = (*s.entry(p, p), *s.entry(p, q), *s.entry(q, q));
            let disc = k12 * k12 - k11 * k22;
            if disc > 0 {
                let d = disc.sqrt();
                if d * d != disc {
                    return Err(fail("discriminant is not a square"));
                }
                block = Some((p, q, k11, k12, k22, d));
                break 'search;
            }
        }
    }
    let (p, q, k11, k12, k22, d) = block.ok_or_else(|| fail("no rank-two block"))?;
    let q_ = |v: i64| Rational::from_integer(BigInt::from(v));
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    // Columns x, y with K = x yᵀ + y xᵀ.
    let (x, y) = if k11 != 0 {
        let t = Rational::new(BigInt::from(k12 + d), BigInt::from(k11));
        let y1 = q_(k11) * &half;
        let y2 = q_(k12) - &t * q_(k11) * &half;
        ([q_(1), t], [y1, y2])
    } else if k22 != 0 {
        let t = Rational::new(BigInt::from(k12 + d), BigInt::from(k22));
        let y2 = q_(k22) * &half;
        let y1 = q_(k12) - &t * q_(k22) * &half;
        ([t, q_(1)], [y1, y2])
    } else {
        ([q_(1), q_(0)], [q_(0), q_(k12)])
    };
    // [a b] = [u v] (Pᵀ)⁻¹ J with P = [x y] and J the swap.
    let det = &x[0] * &y[1] - &x[1] * &y[0];
    if det.is_zero() {
        return Err(fail("degenerate block"));
    }
    // (Pᵀ)⁻¹ = (1/det) [[y1, -x1], [-y0, x0]]; multiplying by J swaps columns.
    let inv = [
        [-&x[1] / &det, &y[1] / &det],
        [&x[0] / &det, -&y[0] / &det],
    ];
    let u: Vec<Rational> = (0..n).map(|r| q_(*s.entry(r, p))).collect();
    let v: Vec<Rational> = (0..n).map(|r| q_(*s.entry(r, q))).collect();
    let a: Vec<Rational> = (0..n).map(|r| &u[r] * &inv[0][0] + &v[r] * &inv[1][0]).collect();
    let b: Vec<Rational> = (0..n).map(|r| &u[r] * &inv[0][1] + &v[r] * &inv[1][1]).collect();
    // Rescale a to a primitive integer vector.
    let den = crate::scalar::common_denominator(&a);
    let a_int: Vec<BigInt> = a.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = a_int.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return Err(fail("zero component"));
    }
    let factor = Rational::new(den, g);
    let to_i64 = |c: &Rational| crate::scalar::rational_to_i64(c);
    let a: Option<Vec<i64>> = a.iter().map(|c| to_i64(&(c * &factor))).collect();
    let b: Option<Vec<i64>> = b.iter().map(|c| to_i64(&(c / &factor))).collect();
    let (Some(a), Some(b)) = (a, b) else {
        return Err(fail("components are not integral"));
    };
    let (mut a, mut b) = (Root(a), Root(b));
    if a.is_negative() || (!a.is_positive() && b.is_negative()) {
        a = -a;
        b = -b;
    }
    if SymSquare::of_roots(&a, &b)? != *s {
        return Err(fail("not of the form a bᵀ + b aᵀ"));
    }
    if b.sort_key() < a.sort_key() {
        std::mem::swap(&mut a, &mut b);
    }
    Ok((a, b))
}

/// An element of `S²(V)` known to be a 2-root, optionally with its components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TwoRootRepr", into = "TwoRootRepr")]
pub struct TwoRoot {
    pub s: SymSquare<i64>,
    pub components: Option<(Root, Root)>,
}

#[derive(Serialize, Deserialize)]
struct TwoRootRepr {
    #[serde(rename = "S")]
    s: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    components: Option<[Root; 2]>,
}

impl TryFrom<TwoRootRepr> for TwoRoot {
    type Error = Error;
    fn try_from(r: TwoRootRepr) -> Result<Self> {
        let s = SymSquare::from_rows(r.s)?;
        let components = r.components.map(|[a, b]| (a, b));
        if let Some((a, b)) = &components {
            if SymSquare::of_roots(a, b)? != s {
                return Err(Error::NoDecomposition("components disagree with S".into()));
            }
        }
        Ok(TwoRoot { s, components })
    }
}

impl From<TwoRoot> for TwoRootRepr {
    fn from(t: TwoRoot) -> Self {
        TwoRootRepr {
            s: t.s.rows(),
            components: t.components.map(|(a, b)| [a, b]),
        }
    }
}

impl TwoRoot {
    pub fn vee(a: &Root, b: &Root) -> Result<Self> {
        Ok(TwoRoot {
            s: SymSquare::of_roots(a, b)?,
            components: Some((a.clone(), b.clone())),
        })
    }

    /// Wraps a matrix, recovering its components.
    pub fn from_matrix(s: SymSquare<i64>) -> Result<Self> {
        let comps = components(&s)?;
        Ok(TwoRoot {
            s,
            components: Some(comps),
        })
    }

    /// Components, computed if not cached.
    pub fn components(&self) -> Result<(Root, Root)> {
        match &self.components {
            Some(c) => Ok(c.clone()),
            None => components(&self.s),
        }
    }

    /// Both components are real roots and orthogonal.
    pub fn is_real(&self, d: &Diagram) -> Result<bool> {
        let (a, b) = self.components()?;
        Ok(bform(d, &a, &a)? == 2 && bform(d, &b, &b)? == 2 && bform(d, &a, &b)? == 0)
    }
}

/// `B(α, γ) B(β, γ) γ − B(α, γ) β − B(β, γ) α`: the vector `v` with
/// `s_γ(α ∨ β) = α ∨ β + γ ∨ v`.
pub fn reflection_offset(d: &Diagram, alpha: &Root, beta: &Root, gamma: &Root) -> Result<Root> {
    let x = bform(d, alpha, gamma)?;
    let y = bform(d, beta, gamma)?;
    Ok(gamma.scale(x * y).sub(&beta.scale(x)).sub(&alpha.scale(y)))
}

/// `B(α_i, v)` for each vertex, as a convenience for case analyses.
pub fn simple_pairings(d: &Diagram, v: &Root) -> Vec<i64> {
    (0..d.n()).map(|i| pair_simple(d, i, v.coeffs())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::positive_roots;

    fn simple(n: usize, i: usize) -> Root {
        Root::simple(n, i)
    }

    #[test]
    fn vee_of_simples() {
        let t = SymSquare::of_roots(&simple(3, 0), &simple(3, 2)).unwrap();
        assert_eq!(t.rows(), vec![vec![0, 0, 1], vec![0, 0, 0], vec![1, 0, 0]]);
        let sq = SymSquare::of_roots(&simple(3, 1), &simple(3, 1)).unwrap();
        assert_eq!(*sq.entry(1, 1), 2);
    }

    #[test]
    fn functional_values() {
        let d = Diagram::path(3).unwrap();
        let f = |a: usize, b: usize| {
            SymSquare::of_roots(&simple(3, a), &simple(3, b)).unwrap().m_functional(&d)
        };
        assert_eq!(f(0, 2), 0);
        assert_eq!(f(1, 1), 4);
        assert_eq!(f(0, 1), -2);
    }

    #[test]
    fn standard_coords_round_trip() {
        let t = SymSquare::of_roots(&Root(vec![1, 1, 0]), &Root(vec![0, 1, 1])).unwrap();
        let c = t.standard_coords();
        assert_eq!(c.len(), 6);
        assert_eq!(SymSquare::from_standard_coords(3, &c), t);
        assert_eq!(c[sym_index(3, 1, 2)], *t.entry(1, 2));
        assert_eq!(c[sym_index(3, 2, 0)], *t.entry(0, 2));
        assert_eq!(sym_index(3, 2, 2), 5);
    }

    #[test]
    fn simple_reflection_matches_general() {
        let d = Diagram::y(1, 2, 2).unwrap();
        let roots = positive_roots(&d, None).unwrap();
        let t = SymSquare::of_roots(&roots[3], &roots[20]).unwrap();
        for i in 0..d.n() {
            assert_eq!(t.reflect_simple(&d, i), t.reflect_by(&d, simple(d.n(), i).coeffs()));
        }
    }

    #[test]
    fn components_round_trip_in_d5() {
        let d = Diagram::y(1, 1, 2).unwrap();
        let roots = positive_roots(&d, None).unwrap();
        for (x, a) in roots.iter().enumerate() {
            for b in &roots[x + 1..] {
                let t = SymSquare::of_roots(a, b).unwrap();
                let (p, q) = components(&t).unwrap();
                let mut want = [a.clone(), b.clone()];
                want.sort_by(|u, v| u.sort_key().cmp(&v.sort_key()));
                assert_eq!([p.clone(), q.clone()], want);
                let flipped = SymSquare::of_roots(&-a, &-b).unwrap();
                assert_eq!(components(&flipped).unwrap(), (p, q));
            }
        }
    }

    #[test]
    fn components_reject_rank_one() {
        let t = SymSquare::of_roots(&simple(3, 0), &simple(3, 0)).unwrap();
        assert!(components(&t).is_err());
    }

    #[test]
    fn two_root_json() {
        let t = TwoRoot::vee(&simple(2, 0), &simple(2, 1)).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"S":[[0,1],[1,0]],"components":[[1,0],[0,1]]}"#);
        let back: TwoRoot = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
