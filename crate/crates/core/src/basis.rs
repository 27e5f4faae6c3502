//! The canonical basis of the submodule `M = ker(trace(A ·))` of `S²(V)` and
//! exact expansion of elements over it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, DiagramKind};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::roots::{elementary_roots, ElementaryKind, Root};
use crate::scalar::{common_denominator, rational_to_i64};
use crate::symsq::{sym_dim, SymSquare};
use crate::Rational;

/// One basis element `α_vertex ∨ partner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub vertex: usize,
    pub partner: Root,
    pub kind: ElementaryKind,
    pub tworoot: SymSquare<i64>,
}

impl BasisElement {
    /// The two components, ordered by height then coefficients.
    pub fn components(&self) -> (Root, Root) {
        let a = Root::simple(self.partner.len(), self.vertex);
        let b = self.partner.clone();
        if b.sort_key() < a.sort_key() {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// Whether this element is `α_i ∨ β` for some `β` elementary with
    /// respect to `i`.
    pub fn involves(&self, i: usize) -> bool {
        self.vertex == i || (self.kind == ElementaryKind::Simple && self.partner.coeffs()[i] == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

/// The common sign of the nonzero entries, or `None` if signs are mixed.
pub fn sign_coherence<T: Signed>(v: &[T]) -> Option<Sign> {
    let pos = v.iter().any(Signed::is_positive);
    let neg = v.iter().any(Signed::is_negative);
    match (pos, neg) {
        (true, true) => None,
        (true, false) => Some(Sign::Positive),
        (false, true) => Some(Sign::Negative),
        (false, false) => Some(Sign::Zero),
    }
}

pub fn is_sign_coherent<T: Signed>(v: &[T]) -> bool {
    sign_coherence(v).is_some()
}

/// Left inverse of the basis matrix, from one elimination.
#[derive(Clone, Debug)]
struct Solver {
    rank: usize,
    /// `E` with `E · basis_matrix = [I; 0]`.
    transform: Matrix<Rational>,
    /// `transform · denom` as integers, when it fits.
    scaled: Option<(Matrix<i64>, i64)>,
}

/// The canonical basis of `M` for a Y diagram, or the type A basis of the
/// 2-root lattice for a path.
#[derive(Clone, Debug)]
pub struct CanonicalBasis {
    diagram: Diagram,
    elements: Vec<BasisElement>,
    lookup: HashMap<Vec<i64>, usize>,
    solver: Solver,
}

impl CanonicalBasis {
    pub fn new(d: &Diagram) -> Result<Self> {
        let n = d.n();
        let mut elements = Vec::new();
        let mut push = |vertex: usize, partner: Root, kind: ElementaryKind| -> Result<()> {
            let tworoot = SymSquare::of_roots(&Root::simple(n, vertex), &partner)?;
            elements.push(BasisElement {
                vertex,
                partner,
                kind,
                tworoot,
            });
            Ok(())
        };
        match d.kind() {
            DiagramKind::Y { .. } => {
                for i in 0..n {
                    for e in elementary_roots(d, i)? {
                        // α_i ∨ α_j is listed once, under the smaller vertex.
                        if e.kind == ElementaryKind::Simple && e.root.support()[0] < i {
                            continue;
                        }
                        push(i, e.root, e.kind)?;
                    }
                }
            }
            DiagramKind::Path { .. } => {
                for i in 0..n {
                    for j in i + 2..n {
                        push(i, Root::simple(n, j), ElementaryKind::Simple)?;
                    }
                    if i >= 1 && i + 1 < n {
                        push(i, Root::sum_of(n, &[i - 1, i, i + 1]), ElementaryKind::Eta)?;
                    }
                }
            }
        }
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.tworoot.key().to_vec(), k))
            .collect();
        let solver = Self::solver(n, &elements)?;
        Ok(CanonicalBasis {
            diagram: d.clone(),
            elements,
            lookup,
            solver,
        })
    }

    fn solver(n: usize, elements: &[BasisElement]) -> Result<Solver> {
        let dim = sym_dim(n);
        let k = elements.len();
        let cols: Vec<Vec<i64>> = elements.iter().map(|e| e.tworoot.standard_coords()).collect();
        let bmat = Matrix::from_fn(dim, k, |r, c| Rational::from_integer(cols[c][r].into()));
        let ech = bmat.echelon();
        if ech.pivots.len() != k {
            return Err(Error::Unsupported(format!(
                "basis candidates have rank {} < {k}",
                ech.pivots.len()
            )));
        }
        let transform = ech.transform;
        let den = common_denominator(transform.data());
        let scaled = den.to_i64().and_then(|den_i| {
            let entries: Option<Vec<i64>> = transform
                .data()
                .iter()
                .map(|q| rational_to_i64(&(q * Rational::from_integer(BigInt::from(den_i)))))
                .collect();
            entries.map(|e| (Matrix::from_vec(dim, dim, e), den_i))
        });
        Ok(Solver {
            rank: k,
            transform,
            scaled,
        })
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &BasisElement {
        &self.elements[k]
    }

    pub fn index_of(&self, s: &SymSquare<i64>) -> Option<usize> {
        self.lookup.get(s.key()).copied()
    }

    /// Indices of the elements `α_i ∨ β`.
    pub fn star(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.elements[k].involves(i)).collect()
    }

    fn check_dim<T>(&self, s: &SymSquare<T>) -> Result<()>
    where
        T: crate::Scalar,
    {
        if s.n() == self.diagram.n() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.diagram.n(),
                found: s.n(),
            })
        }
    }

    /// Exact coordinates of an integer element over the basis.
    pub fn expand(&self, s: &SymSquare<i64>) -> Result<Vec<Rational>> {
        self.check_dim(s)?;
        let m = s.m_functional(&self.diagram);
        if m != 0 {
            return Err(Error::NotInSubmodule(m.to_string()));
        }
        let Some((e, den)) = &self.solver.scaled else {
            return self.expand_rational(&s.to_rational());
        };
        // Twice the standard coordinates are integers.
        let n = s.n();
        let mut doubled = Vec::with_capacity(sym_dim(n));
        for a in 0..n {
            doubled.push(*s.entry(a, a));
            for b in a + 1..n {
                doubled.push(2 * *s.entry(a, b));
            }
        }
        let nz: Vec<usize> = (0..doubled.len()).filter(|&c| doubled[c] != 0).collect();
        let row_value = |r: usize| -> i128 {
            let row = e.row(r);
            nz.iter().map(|&c| row[c] as i128 * doubled[c] as i128).sum()
        };
        if (self.solver.rank..e.rows()).any(|r| row_value(r) != 0) {
            return Err(Error::NotInSpan);
        }
        let den2 = 2 * *den as i128;
        Ok((0..self.solver.rank)
            .map(|r| Rational::new(BigInt::from(row_value(r)), BigInt::from(den2)))
            .collect())
    }

    /// Coordinates of a lattice element; fails if any coordinate is not an
    /// integer.
    pub fn expand_integral(&self, s: &SymSquare<i64>) -> Result<Vec<i64>> {
        self.expand(s)?
            .iter()
            .map(rational_to_i64)
            .collect::<Option<Vec<i64>>>()
            .ok_or(Error::NotIntegral)
    }

    pub fn expand_rational(&self, s: &SymSquare<Rational>) -> Result<Vec<Rational>> {
        self.check_dim(s)?;
        let m = s.m_functional(&self.diagram);
        if !m.is_zero() {
            return Err(Error::NotInSubmodule(m.to_string()));
        }
        let coords = s.standard_coords();
        let sol = self.solver.transform.mul_vec(&coords);
        if sol[self.solver.rank..].iter().any(|v| !v.is_zero()) {
            return Err(Error::NotInSpan);
        }
        Ok(sol[..self.solver.rank].to_vec())
    }

    /// `Σ c_k b_k`.
    pub fn recombine(&self, coords: &[Rational]) -> SymSquare<Rational> {
        let n = self.diagram.n();
        let mut out = SymSquare::zero(n);
        for (c, e) in coords.iter().zip(&self.elements) {
            if !c.is_zero() {
                out = out.add(&e.tworoot.to_rational().scale(c));
            }
        }
        out
    }

    pub fn recombine_integral(&self, coords: &[i64]) -> SymSquare<i64> {
        let n = self.diagram.n();
        let mut out = SymSquare::zero(n);
        for (&c, e) in coords.iter().zip(&self.elements) {
            if c != 0 {
                out = out.add(&e.tworoot.scale(&c));
            }
        }
        out
    }

    /// Sum of coordinates over the basis.
    pub fn ht2(&self, s: &SymSquare<i64>) -> Result<Rational> {
        Ok(self.expand(s)?.into_iter().sum())
    }

    /// `t1 ≤₂ t2`: the difference expands with nonnegative coordinates.
    pub fn leq2(&self, t1: &SymSquare<i64>, t2: &SymSquare<i64>) -> Result<bool> {
        Ok(self
            .expand(&t2.sub(t1))?
            .iter()
            .all(|c| !c.is_negative()))
    }

    /// A short description of element `k`, such as `a0 v a1+a2+a3`.
    pub fn describe(&self, k: usize) -> String {
        let e = &self.elements[k];
        format!("a{} v {}", e.vertex, e.partner)
    }
}
