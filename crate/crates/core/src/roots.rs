//! Real roots over the simple roots, the symmetric form, reflections, root
//! enumeration, elementary roots and the null root of affine types.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, TypeClass};
use crate::error::{Error, Result};
use crate::scalar::common_denominator;

/// Integer coefficients over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{i}")?;
            } else {
                write!(f, "{sign}{mag}a{i}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Root {
    pub fn zero(n: usize) -> Self {
        Root(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// `self` if it is nonnegative, otherwise its negation.
    pub fn positive_part(&self) -> Root {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }

    /// Sum of simple roots over `vertices`.
    pub fn sum_of(n: usize, vertices: &[usize]) -> Root {
        let mut v = vec![0; n];
        for &i in vertices {
            v[i] += 1;
        }
        Root(v)
    }

    /// Sort key: height, then coefficients.
    pub fn sort_key(&self) -> (i64, &[i64]) {
        (self.height(), &self.0)
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl std::ops::Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

fn check_len(d: &Diagram, v: &Root) -> Result<()> {
    if v.len() == d.n() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: d.n(),
            found: v.len(),
        })
    }
}

/// `B(α_i, v)`, the i-th entry of `A v`.
pub fn pair_simple(d: &Diagram, i: usize, v: &[i64]) -> i64 {
    2 * v[i] - d.neighbors(i).iter().map(|&j| v[j]).sum::<i64>()
}

/// `A v` for the Cartan matrix `A` of `d`.
pub fn cartan_apply(d: &Diagram, v: &[i64]) -> Vec<i64> {
    (0..d.n()).map(|i| pair_simple(d, i, v)).collect()
}

/// The symmetric form `uᵀ A v`.
pub fn bform(d: &Diagram, u: &Root, v: &Root) -> Result<i64> {
    check_len(d, u)?;
    check_len(d, v)?;
    Ok(bform_unchecked(d, &u.0, &v.0))
}

pub(crate) fn bform_unchecked(d: &Diagram, u: &[i64], v: &[i64]) -> i64 {
    (0..d.n())
        .filter(|&i| u[i] != 0)
        .map(|i| u[i] * pair_simple(d, i, v))
        .sum()
}

pub fn norm(d: &Diagram, v: &Root) -> Result<i64> {
    bform(d, v, v)
}

/// `v − B(α, v) α`, for `α` of norm 2.
pub fn reflect(d: &Diagram, alpha: &Root, v: &Root) -> Result<Root> {
    let na = norm(d, alpha)?;
    if na != 2 {
        return Err(Error::NotARealRoot(na));
    }
    let k = bform(d, alpha, v)?;
    Ok(v.sub(&alpha.scale(k)))
}

/// Reflection in the simple root `α_i`.
pub fn simple_reflect(d: &Diagram, i: usize, v: &Root) -> Root {
    let k = pair_simple(d, i, &v.0);
    let mut out = v.clone();
    out.0[i] -= k;
    out
}

/// Applies the word `w[0] w[1] … w[k-1]`, rightmost generator first.
pub fn apply_word(d: &Diagram, word: &[usize], v: &Root) -> Root {
    word.iter().rev().fold(v.clone(), |acc, &i| simple_reflect(d, i, &acc))
}

/// Positive real roots sorted by height then coefficients.
///
/// Non-finite diagrams need a height bound; for finite ones the bound only
/// truncates.
pub fn positive_roots(d: &Diagram, height_bound: Option<i64>) -> Result<Vec<Root>> {
    let finite = d.classify() == TypeClass::Finite;
    if !finite && height_bound.is_none() {
        return Err(Error::HeightBoundRequired);
    }
    let bound = height_bound.unwrap_or(i64::MAX);
    let n = d.n();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut queue = VecDeque::new();
    if bound >= 1 {
        for i in 0..n {
            let r = Root::simple(n, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let k = pair_simple(d, i, &r.0);
            if k >= 0 {
                continue;
            }
            let mut next = r.clone();
            next.0[i] -= k;
            if next.height() <= bound && !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(roots)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ElementaryKind {
    /// A simple root.
    Simple,
    /// `α_h + α_j + α_k` along a path `h–j–k`.
    Eta,
    /// Highest root of a minimal type-D parabolic through the branch.
    Theta,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryRoot {
    pub root: Root,
    pub kind: ElementaryKind,
    /// Vertices `i` for which this root is elementary with respect to `i`.
    pub l_set: Vec<usize>,
}

/// `α_i + α_j + α_k` for a path `i–j–k`.
pub fn eta(d: &Diagram, i: usize, k: usize) -> Result<Root> {
    d.check_vertex(i)?;
    d.check_vertex(k)?;
    let middle = d
        .neighbors(i)
        .iter()
        .copied()
        .find(|&j| i != k && d.adjacent(j, k));
    match middle {
        Some(j) => Ok(Root::sum_of(d.n(), &[i, j, k])),
        None => Err(Error::NotAPath(i, k)),
    }
}

/// Highest root of the smallest type-D parabolic containing `i` and the
/// branch: coefficient 2 on the branch and every vertex strictly between it
/// and `i`, and 1 on `i` and the two other branch neighbours.
pub fn theta(d: &Diagram, i: usize) -> Result<Root> {
    d.check_vertex(i)?;
    let branch = d
        .branch()
        .ok_or_else(|| Error::Unsupported(format!("{d} has no branch vertex")))?;
    if i == branch {
        return Err(Error::BranchVertex(i));
    }
    let path = d.tree_path(i, branch);
    let mut v = vec![0; d.n()];
    for &p in &path[1..] {
        v[p] = 2;
    }
    v[i] = 1;
    for &w in d.neighbors(branch) {
        if !path.contains(&w) {
            v[w] = 1;
        }
    }
    let root = Root(v);
    debug_assert_eq!(bform_unchecked(d, &root.0, &root.0), 2);
    debug_assert_eq!(pair_simple(d, i, &root.0), 0);
    Ok(root)
}

/// The `n − 1` roots elementary with respect to vertex `i` of a Y diagram:
/// simple roots not adjacent to `i`, the `η` roots centred at `i`, and `θ_i`
/// when `i` is not the branch.
pub fn elementary_roots(d: &Diagram, i: usize) -> Result<Vec<ElementaryRoot>> {
    d.check_vertex(i)?;
    let branch = d
        .branch()
        .ok_or_else(|| Error::Unsupported(format!("{d} has no branch vertex")))?;
    let n = d.n();
    let mut out = Vec::with_capacity(n - 1);
    for j in 0..n {
        if j != i && !d.adjacent(i, j) {
            out.push(ElementaryRoot {
                root: Root::simple(n, j),
                kind: ElementaryKind::Simple,
                l_set: (0..n).filter(|&k| k != j && !d.adjacent(j, k)).collect(),
            });
        }
    }
    let nbrs = d.neighbors(i);
    for (x, &h) in nbrs.iter().enumerate() {
        for &k in &nbrs[x + 1..] {
            out.push(ElementaryRoot {
                root: Root::sum_of(n, &[h, i, k]),
                kind: ElementaryKind::Eta,
                l_set: vec![i],
            });
        }
    }
    if i != branch {
        let l_set = if d.adjacent(i, branch) {
            d.neighbors(branch).to_vec()
        } else {
            vec![i]
        };
        out.push(ElementaryRoot {
            root: theta(d, i)?,
            kind: ElementaryKind::Theta,
            l_set,
        });
    }
    Ok(out)
}

/// Primitive positive null vector of the Cartan matrix of an affine diagram.
pub fn delta(d: &Diagram) -> Result<Root> {
    if d.classify() != TypeClass::Affine {
        return Err(Error::NotAffine);
    }
    let null = d.cartan().to_rational().nullspace();
    let [v] = null.as_slice() else {
        return Err(Error::NotAffine);
    };
    let den = common_denominator(v);
    let ints: Vec<num_bigint::BigInt> = v
        .iter()
        .map(|q| (q * crate::Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints
        .iter()
        .fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.iter().any(Signed::is_negative) { -1 } else { 1 };
    let coeffs = ints
        .iter()
        .map(|x| i64::try_from(x / &g).expect("small null vector") * sign)
        .collect();
    Ok(Root(coeffs))
}
