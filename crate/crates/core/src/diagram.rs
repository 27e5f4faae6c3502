//! Y-shaped and path Dynkin diagrams, Cartan matrices, type classification,
//! and the hexagon graphs that predict orbit counts.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Rational;

/// Shape parameters of a diagram; this is also its JSON form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DiagramKind {
    Y { a: usize, b: usize, c: usize },
    Path { n: usize },
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DiagramKind::Y { a, b, c } => write!(f, "Y({a},{b},{c})"),
            DiagramKind::Path { n } => write!(f, "A{n}"),
        }
    }
}

/// The finite simply laced types reachable as paths or Y shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteType {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeClass {
    Finite,
    Affine,
    Indefinite,
}

/// A simply laced Dynkin diagram of path or Y shape.
///
/// For the Y shape the branch vertex is 0, arm 1 occupies `1..=a` ordered
/// outward from the branch, arm 2 occupies `a+1..=a+b`, and arm 3 the rest.
/// A path is numbered `0..n` from one end.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramKind", into = "DiagramKind")]
pub struct Diagram {
    kind: DiagramKind,
    adjacency: Vec<Vec<usize>>,
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({})", self.kind)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

impl TryFrom<DiagramKind> for Diagram {
    type Error = Error;
    fn try_from(kind: DiagramKind) -> Result<Self> {
        Diagram::new(kind)
    }
}

impl From<Diagram> for DiagramKind {
    fn from(d: Diagram) -> Self {
        d.kind
    }
}

impl Diagram {
    pub fn new(kind: DiagramKind) -> Result<Self> {
        match kind {
            DiagramKind::Y { a, b, c } => Self::y(a, b, c),
            DiagramKind::Path { n } => Self::path(n),
        }
    }

    pub fn y(a: usize, b: usize, c: usize) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidArms(a, b, c));
        }
        let n = a + b + c + 1;
        let mut adjacency = vec![Vec::new(); n];
        let mut start = 1;
        for len in [a, b, c] {
            let mut prev = 0;
            for v in start..start + len {
                adjacency[prev].push(v);
                adjacency[v].push(prev);
                prev = v;
            }
            start += len;
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Diagram {
            kind: DiagramKind::Y { a, b, c },
            adjacency,
        })
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        let adjacency = (0..n)
            .map(|i| {
                let mut v = Vec::new();
                if i > 0 {
                    v.push(i - 1);
                }
                if i + 1 < n {
                    v.push(i + 1);
                }
                v
            })
            .collect();
        Ok(Diagram {
            kind: DiagramKind::Path { n },
            adjacency,
        })
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_y(&self) -> bool {
        matches!(self.kind, DiagramKind::Y { .. })
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: i,
                n: self.n(),
            })
        }
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    pub fn branch(&self) -> Option<usize> {
        self.is_y().then_some(0)
    }

    /// Arm lengths for the Y shape.
    pub fn arm_lengths(&self) -> Option<[usize; 3]> {
        match self.kind {
            DiagramKind::Y { a, b, c } => Some([a, b, c]),
            DiagramKind::Path { .. } => None,
        }
    }

    /// The three arms of a Y shape, each listed outward from the branch.
    pub fn arms(&self) -> Option<[Vec<usize>; 3]> {
        let [a, b, c] = self.arm_lengths()?;
        Some([
            (1..=a).collect(),
            (a + 1..=a + b).collect(),
            (a + b + 1..=a + b + c).collect(),
        ])
    }

    /// Index of the arm containing `v`, or `None` for the branch or a path.
    pub fn arm_of(&self, v: usize) -> Option<usize> {
        let [a, b, _] = self.arm_lengths()?;
        match v {
            0 => None,
            v if v <= a => Some(0),
            v if v <= a + b => Some(1),
            _ => Some(2),
        }
    }

    /// Vertices of the unique simple path from `u` to `v`, both included.
    pub fn tree_path(&self, u: usize, v: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in self.neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        path
    }

    pub fn cartan(&self) -> CartanMatrix {
        let n = self.n();
        CartanMatrix(Matrix::from_fn(n, n, |i, j| {
            if i == j {
                2
            } else if self.adjacent(i, j) {
                -1
            } else {
                0
            }
        }))
    }

    pub fn classify(&self) -> TypeClass {
        self.cartan().classify()
    }

    pub fn is_finite(&self) -> bool {
        self.classify() == TypeClass::Finite
    }

    /// Identifies the Cartan type when the diagram is of type A, D or E.
    pub fn finite_type(&self) -> Option<FiniteType> {
        match self.kind {
            DiagramKind::Path { n } => Some(FiniteType::A(n)),
            DiagramKind::Y { a, b, c } => {
                let mut arms = [a, b, c];
                arms.sort_unstable();
                match arms {
                    [1, 1, c] => Some(FiniteType::D(c + 3)),
                    [1, 2, c @ 2..=4] => Some(FiniteType::E(c + 4)),
                    _ => None,
                }
            }
        }
    }

    /// The induced subdiagram on `vertices`, which must be connected and of
    /// path or Y shape.
    ///
    /// A Y result keeps the original arm order; a path result starts from
    /// whichever end has the smaller original index.
    pub fn parabolic_restrict(&self, vertices: &[usize]) -> Result<Restriction> {
        let mut keep = vec![false; self.n()];
        for &v in vertices {
            self.check_vertex(v)?;
            keep[v] = true;
        }
        let kept: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        if kept.is_empty() {
            return Err(Error::InvalidRestriction("empty vertex set".into()));
        }
        let induced = |v: usize| -> Vec<usize> {
            self.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| keep[w])
                .collect()
        };
        let mut seen = vec![false; self.n()];
        let mut stack = vec![kept[0]];
        seen[kept[0]] = true;
        let mut reached = 0;
        while let Some(v) = stack.pop() {
            reached += 1;
            for w in induced(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if reached != kept.len() {
            return Err(Error::InvalidRestriction(
                "induced subgraph is disconnected".into(),
            ));
        }
        let branches: Vec<usize> = kept.iter().copied().filter(|&v| induced(v).len() >= 3).collect();
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![to];
            let (mut prev, mut cur) = (from, to);
            loop {
                let next: Vec<usize> = induced(cur).into_iter().filter(|&w| w != prev).collect();
                match next.as_slice() {
                    [w] => {
                        out.push(*w);
                        prev = cur;
                        cur = *w;
                    }
                    _ => return out,
                }
            }
        };
        let new_to_old: Vec<usize>;
        let diagram;
        match branches.as_slice() {
            [] => {
                let ends: Vec<usize> = kept
                    .iter()
                    .copied()
                    .filter(|&v| induced(v).len() <= 1)
                    .collect();
                let start = ends[0];
                let mut order = vec![start];
                if let Some(&first) = induced(start).first() {
                    order.extend(walk(start, first));
                }
                diagram = Diagram::path(order.len())?;
                new_to_old = order;
            }
            [b] => {
                let nbrs = induced(*b);
                if nbrs.len() != 3 {
                    return Err(Error::InvalidRestriction(
                        "vertex of degree above 3".into(),
                    ));
                }
                let arms: Vec<Vec<usize>> = nbrs.iter().map(|&w| walk(*b, w)).collect();
                if arms.iter().flatten().any(|&v| induced(v).len() > 2) {
                    return Err(Error::InvalidRestriction("more than one branch".into()));
                }
                diagram = Diagram::y(arms[0].len(), arms[1].len(), arms[2].len())?;
                let mut order = vec![*b];
                for arm in arms {
                    order.extend(arm);
                }
                new_to_old = order;
            }
            _ => {
                return Err(Error::InvalidRestriction(
                    "induced subgraph has more than one branch vertex".into(),
                ))
            }
        }
        let mut old_to_new = vec![None; self.n()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        Ok(Restriction {
            diagram,
            old_to_new,
            new_to_old,
        })
    }
}

/// Output of [`Diagram::parabolic_restrict`].
#[derive(Clone, Debug)]
pub struct Restriction {
    pub diagram: Diagram,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Restriction {
    /// Embeds a coefficient vector of the subdiagram into the parent.
    pub fn embed(&self, coeffs: &[i64], parent_n: usize) -> Vec<i64> {
        let mut out = vec![0; parent_n];
        for (new, &c) in coeffs.iter().enumerate() {
            out[self.new_to_old[new]] = c;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix(Matrix<i64>);

impl CartanMatrix {
    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[(i, j)]
    }

    pub fn to_rational(&self) -> Matrix<Rational> {
        self.0.map(|&v| Rational::from_integer(v.into()))
    }

    pub fn determinant(&self) -> BigInt {
        integer_det(&self.0)
    }

    /// Sylvester's criterion on leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        is_positive_definite(&self.0)
    }

    pub fn classify(&self) -> TypeClass {
        if self.is_positive_definite() {
            return TypeClass::Finite;
        }
        let n = self.n();
        if self.determinant().is_zero() {
            let proper_definite = (0..n).all(|skip| {
                let idx: Vec<usize> = (0..n).filter(|&i| i != skip).collect();
                is_positive_definite(&self.0.select(&idx, &idx))
            });
            if proper_definite {
                return TypeClass::Affine;
            }
        }
        TypeClass::Indefinite
    }
}

fn integer_det(m: &Matrix<i64>) -> BigInt {
    if m.rows() == 0 {
        return BigInt::from(1);
    }
    let det = m.map(|&v| Rational::from_integer(v.into())).determinant();
    debug_assert!(det.is_integer());
    det.to_integer()
}

fn is_positive_definite(m: &Matrix<i64>) -> bool {
    (1..=m.rows()).all(|k| {
        let idx: Vec<usize> = (0..k).collect();
        integer_det(&m.select(&idx, &idx)).is_positive()
    })
}

/// The stabilizer graph: a hexagon `h1..h6` with paths of lengths `p`, `q`,
/// `r` attached at `h1`, `h3`, `h5`. Length 0 leaves the hexagon alone and
/// length −1 deletes the attachment vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGraph {
    params: [i64; 3],
    adjacency: Vec<Vec<usize>>,
}

impl HGraph {
    pub fn new(p: i64, q: i64, r: i64) -> Self {
        let params = [p, q, r];
        assert!(params.iter().all(|&t| t >= -1), "parameters must be at least -1");
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let mut alive = vec![true; 6];
        let mut count = 6;
        for (slot, &len) in params.iter().enumerate() {
            let anchor = 2 * slot;
            if len == -1 {
                alive[anchor] = false;
                continue;
            }
            let mut prev = anchor;
            for _ in 0..len {
                alive.push(true);
                edges.push((prev, count));
                prev = count;
                count += 1;
            }
        }
        let mut relabel = vec![usize::MAX; count];
        let mut next = 0;
        for v in 0..count {
            if alive[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let mut adjacency = vec![Vec::new(); next];
        for (u, v) in edges {
            if alive[u] && alive[v] {
                adjacency[relabel[u]].push(relabel[v]);
                adjacency[relabel[v]].push(relabel[u]);
            }
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        HGraph { params, adjacency }
    }

    /// The stabilizer graph for the diagram Y(a, b, c).
    pub fn for_arms(a: usize, b: usize, c: usize) -> Self {
        HGraph::new(a as i64 - 2, b as i64 - 2, c as i64 - 2)
    }

    pub fn params(&self) -> [i64; 3] {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_numbering_is_branch_first() {
        let d = Diagram::y(1, 2, 4).unwrap();
        assert_eq!(d.n(), 8);
        assert_eq!(d.neighbors(0), &[1, 2, 4]);
        assert_eq!(d.neighbors(3), &[2]);
        assert_eq!(d.neighbors(7), &[6]);
        assert_eq!(d.arms().unwrap()[2], vec![4, 5, 6, 7]);
        assert_eq!(d.arm_of(5), Some(2));
        assert_eq!(d.arm_of(0), None);
    }

    #[test]
    fn rejects_empty_arm() {
        assert_eq!(Diagram::y(0, 1, 1), Err(Error::InvalidArms(0, 1, 1)));
        assert_eq!(Diagram::path(0), Err(Error::EmptyPath));
    }

    #[test]
    fn path_of_one_vertex() {
        let d = Diagram::path(1).unwrap();
        assert_eq!(d.n(), 1);
        assert!(d.edges().is_empty());
        assert_eq!(d.classify(), TypeClass::Finite);
    }

    #[test]
    fn cartan_of_a2() {
        let a = Diagram::path(2).unwrap().cartan();
        assert_eq!(a.matrix().to_rows(), vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn classification_of_known_shapes() {
        assert_eq!(Diagram::y(1, 2, 4).unwrap().classify(), TypeClass::Finite);
        assert_eq!(Diagram::y(2, 2, 2).unwrap().classify(), TypeClass::Affine);
        assert_eq!(Diagram::y(1, 3, 3).unwrap().classify(), TypeClass::Affine);
        assert_eq!(Diagram::y(1, 2, 5).unwrap().classify(), TypeClass::Affine);
        assert_eq!(Diagram::y(1, 2, 6).unwrap().classify(), TypeClass::Indefinite);
        assert_eq!(Diagram::y(3, 3, 3).unwrap().classify(), TypeClass::Indefinite);
    }

    #[test]
    fn finite_type_names() {
        assert_eq!(Diagram::y(1, 1, 1).unwrap().finite_type(), Some(FiniteType::D(4)));
        assert_eq!(Diagram::y(2, 1, 2).unwrap().finite_type(), Some(FiniteType::E(6)));
        assert_eq!(Diagram::y(4, 2, 1).unwrap().finite_type(), Some(FiniteType::E(8)));
        assert_eq!(Diagram::y(2, 2, 2).unwrap().finite_type(), None);
        assert_eq!(Diagram::path(5).unwrap().finite_type(), Some(FiniteType::A(5)));
    }

    #[test]
    fn hexagon_cases() {
        let d4 = HGraph::for_arms(1, 1, 1);
        assert_eq!(d4.vertex_count(), 3);
        assert_eq!(d4.edge_count(), 0);
        assert_eq!(d4.component_count(), 3);

        let e6 = HGraph::for_arms(2, 2, 2);
        assert_eq!(e6.vertex_count(), 6);
        assert_eq!(e6.edge_count(), 6);
        assert!(e6.adjacency.iter().all(|n| n.len() == 2));

        let e8 = HGraph::for_arms(1, 2, 4);
        assert_eq!(e8.vertex_count(), 7);
        assert_eq!(e8.component_count(), 1);
        assert_eq!(HGraph::for_arms(1, 1, 5).component_count(), 2);
    }

    #[test]
    fn tree_path_through_branch() {
        let d = Diagram::y(2, 2, 2).unwrap();
        assert_eq!(d.tree_path(2, 6), vec![2, 1, 0, 5, 6]);
        assert_eq!(d.tree_path(3, 3), vec![3]);
    }

    #[test]
    fn restriction_shapes() {
        let d = Diagram::y(1, 1, 2).unwrap();
        let r = d.parabolic_restrict(&[0, 2, 3, 4]).unwrap();
        assert_eq!(r.diagram.kind(), DiagramKind::Path { n: 4 });
        assert_eq!(r.new_to_old, vec![2, 0, 3, 4]);

        let e8 = Diagram::y(1, 2, 4).unwrap();
        let r = e8.parabolic_restrict(&[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(r.diagram.kind(), DiagramKind::Y { a: 1, b: 2, c: 3 });

        let d4 = Diagram::y(1, 1, 1).unwrap();
        assert!(d4.parabolic_restrict(&[1, 2, 3]).is_err());
    }

    #[test]
    fn json_shape() {
        let d = Diagram::y(1, 2, 4).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"kind":"Y","a":1,"b":2,"c":4}"#);
        let back: Diagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<Diagram>(r#"{"kind":"Y","a":0,"b":2,"c":4}"#).is_err());
    }
}
