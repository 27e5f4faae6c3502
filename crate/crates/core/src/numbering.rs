//! Classical vertex labels for types A, D and E, and the ε-coordinate form
//! of roots in types A and D.
//!
//! Type A labels a path `1..=n`. Type D labels the long arm `1..=n-2`
//! ending at the branch `n-2`, with the two short leaves `n-1` and `n`.
//! Type E puts the branch at 3 on the path `1–2–3–…`, with the extra vertex
//! `x` hanging off 3.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, FiniteType};
use crate::error::{Error, Result};
use crate::roots::Root;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Index(usize),
    X,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Index(i) => write!(f, "{i}"),
            Label::X => write!(f, "x"),
        }
    }
}

impl std::str::FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "x" {
            return Ok(Label::X);
        }
        s.parse()
            .map(Label::Index)
            .map_err(|_| Error::Unsupported(format!("bad vertex label {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numbering {
    family: FiniteType,
    labels: Vec<Label>,
}

impl Numbering {
    /// Classical labels for a diagram of type A, D or E.
    pub fn classical(d: &Diagram) -> Result<Self> {
        let family = d
            .finite_type()
            .ok_or_else(|| Error::Unsupported(format!("{d} is not of type A, D or E")))?;
        let n = d.n();
        let mut labels = vec![Label::X; n];
        match family {
            FiniteType::A(_) => {
                for (v, l) in labels.iter_mut().enumerate() {
                    *l = Label::Index(v + 1);
                }
            }
            FiniteType::D(_) => {
                let arms = d.arms().expect("type D is a Y shape");
                // Longest arm; ties go to the last one.
                let long = (0..3).rev().max_by_key(|&k| arms[k].len()).unwrap_or(2);
                let short: Vec<usize> = (0..3).filter(|&k| k != long).collect();
                labels[0] = Label::Index(n - 2);
                labels[arms[short[0]][0]] = Label::Index(n - 1);
                labels[arms[short[1]][0]] = Label::Index(n);
                for (dist, &v) in arms[long].iter().enumerate() {
                    labels[v] = Label::Index(n - 3 - dist);
                }
            }
            FiniteType::E(_) => {
                let arms = d.arms().expect("type E is a Y shape");
                let unit = (0..3).find(|&k| arms[k].len() == 1).expect("E has a unit arm");
                let pair = (0..3)
                    .find(|&k| k != unit && arms[k].len() == 2)
                    .expect("E has an arm of length two");
                let rest = (0..3).find(|&k| k != unit && k != pair).expect("three arms");
                labels[0] = Label::Index(3);
                labels[arms[unit][0]] = Label::X;
                labels[arms[pair][0]] = Label::Index(2);
                labels[arms[pair][1]] = Label::Index(1);
                for (dist, &v) in arms[rest].iter().enumerate() {
                    labels[v] = Label::Index(4 + dist);
                }
            }
        }
        Ok(Numbering { family, labels })
    }

    pub fn family(&self) -> FiniteType {
        self.family
    }

    pub fn label(&self, vertex: usize) -> Label {
        self.labels[vertex]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn vertex(&self, label: Label) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| Error::Unsupported(format!("no vertex labelled {label}")))
    }

    /// Vertex for a numeric label.
    pub fn v(&self, i: usize) -> usize {
        self.vertex(Label::Index(i)).expect("label in range")
    }

    /// Vertex carrying the `x` label in type E.
    pub fn x(&self) -> usize {
        self.vertex(Label::X).expect("type E numbering")
    }

    /// Builds a root from coefficients listed by label.
    pub fn root(&self, terms: &[(Label, i64)]) -> Root {
        let mut v = vec![0; self.labels.len()];
        for &(l, c) in terms {
            v[self.vertex(l).expect("label in range")] += c;
        }
        Root(v)
    }

    /// Coefficients indexed by classical label order (`x` last in type E).
    pub fn reorder(&self, root: &Root) -> Vec<(Label, i64)> {
        let mut out: Vec<(Label, i64)> = self
            .labels
            .iter()
            .zip(root.coeffs())
            .map(|(&l, &c)| (l, c))
            .collect();
        out.sort_by_key(|&(l, _)| l);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EpsSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// `±(ε_i ± ε_j)` with `i < j`, indices starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EpsilonRoot {
    pub sign: EpsSign,
    pub i: usize,
    pub j: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub negative: bool,
}

impl fmt::Display for EpsilonRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.sign {
            EpsSign::Plus => '+',
            EpsSign::Minus => '-',
        };
        if self.negative {
            write!(f, "-(e{}{op}e{})", self.i, self.j)
        } else {
            write!(f, "e{}{op}e{}", self.i, self.j)
        }
    }
}

impl std::str::FromStr for EpsilonRoot {
    type Err = Error;

    /// Parses `e1-e3`, `e2+e4` or a negated form such as `-(e1-e3)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unsupported(format!("bad epsilon root {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (negative, body) = match t.strip_prefix("-(").and_then(|r| r.strip_suffix(')')) {
            Some(inner) => (true, inner),
            None => (false, t.as_str()),
        };
        let body = body.strip_prefix('e').ok_or_else(bad)?;
        let (split, sign) = match (body.find('+'), body.find('-')) {
            (Some(k), None) => (k, EpsSign::Plus),
            (None, Some(k)) => (k, EpsSign::Minus),
            _ => return Err(bad()),
        };
        let i: usize = body[..split].parse().map_err(|_| bad())?;
        let j: usize = body[split + 1..]
            .strip_prefix('e')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        if i == 0 || i >= j {
            return Err(bad());
        }
        Ok(EpsilonRoot { sign, i, j, negative })
    }
}

impl EpsilonRoot {
    pub fn minus(i: usize, j: usize) -> Self {
        EpsilonRoot {
            sign: EpsSign::Minus,
            i,
            j,
            negative: false,
        }
    }

    pub fn plus(i: usize, j: usize) -> Self {
        EpsilonRoot {
            sign: EpsSign::Plus,
            i,
            j,
            negative: false,
        }
    }

    /// The vector over `ε_1, …, ε_m`.
    pub fn vector(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0; m];
        v[self.i - 1] = 1;
        v[self.j - 1] = match self.sign {
            EpsSign::Plus => 1,
            EpsSign::Minus => -1,
        };
        if self.negative {
            v.iter_mut().for_each(|c| *c = -*c);
        }
        v
    }

    fn from_vector(v: &[i64]) -> Option<Self> {
        let nz: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
        let [i, j] = nz.as_slice() else { return None };
        let (a, b) = (v[*i], v[*j]);
        if a.abs() != 1 || b.abs() != 1 {
            return None;
        }
        let sign = if a == b { EpsSign::Plus } else { EpsSign::Minus };
        Some(EpsilonRoot {
            sign,
            i: i + 1,
            j: j + 1,
            negative: a < 0,
        })
    }
}

fn coeffs_by_label(num: &Numbering, root: &Root) -> Vec<i64> {
    let mut p = vec![0; root.len()];
    for (v, &c) in root.coeffs().iter().enumerate() {
        if let Label::Index(l) = num.label(v) {
            p[l - 1] = c;
        }
    }
    p
}

/// The ε-form of a real root in type A (a path) or type D.
pub fn epsilon_coords(d: &Diagram, root: &Root) -> Result<EpsilonRoot> {
    let num = Numbering::classical(d)?;
    let p = coeffs_by_label(&num, root);
    let n = d.n();
    let e = match num.family() {
        FiniteType::A(_) => {
            let mut e = vec![0; n + 1];
            for k in 0..n {
                e[k] += p[k];
                e[k + 1] -= p[k];
            }
            e
        }
        FiniteType::D(_) => {
            let mut e = vec![0; n];
            for k in 0..n - 1 {
                e[k] += p[k];
                e[k + 1] -= p[k];
            }
            e[n - 2] += p[n - 1];
            e[n - 1] += p[n - 1];
            e
        }
        FiniteType::E(_) => {
            return Err(Error::Unsupported("ε-coordinates exist for types A and D only".into()))
        }
    };
    EpsilonRoot::from_vector(&e)
        .ok_or_else(|| Error::Unsupported(format!("{root:?} is not a root in ε-form")))
}

/// Inverse of [`epsilon_coords`].
pub fn root_from_epsilon(d: &Diagram, eps: &EpsilonRoot) -> Result<Root> {
    let num = Numbering::classical(d)?;
    let n = d.n();
    let p: Vec<i64> = match num.family() {
        FiniteType::A(_) => {
            if eps.j > n + 1 || eps.sign == EpsSign::Plus {
                return Err(Error::Unsupported(format!("{eps} is not a type A root")));
            }
            let e = eps.vector(n + 1);
            e.iter()
                .take(n)
                .scan(0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect()
        }
        FiniteType::D(_) => {
            if eps.j > n {
                return Err(Error::Unsupported(format!("{eps} is out of range")));
            }
            let e = eps.vector(n);
            let mut p: Vec<i64> = e
                .iter()
                .take(n - 2)
                .scan(0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect();
            let base = p.last().copied().unwrap_or(0);
            let total = e[n - 2] + base;
            p.push((total - e[n - 1]) / 2);
            p.push((total + e[n - 1]) / 2);
            p
        }
        FiniteType::E(_) => {
            return Err(Error::Unsupported("ε-coordinates exist for types A and D only".into()))
        }
    };
    let mut v = vec![0; n];
    for (vertex, slot) in v.iter_mut().enumerate() {
        if let Label::Index(l) = num.label(vertex) {
            *slot = p[l - 1];
        }
    }
    Ok(Root(v))
}

/// The highest root of a type-E diagram, built from its classical
/// coefficient list.
pub fn e_highest_root(num: &Numbering) -> Result<Root> {
    let coeffs: &[i64] = match num.family() {
        FiniteType::E(6) => &[1, 2, 3, 2, 1, 2],
        FiniteType::E(7) => &[2, 3, 4, 3, 2, 1, 2],
        FiniteType::E(8) => &[2, 4, 6, 5, 4, 3, 2, 3],
        _ => return Err(Error::Unsupported("not of type E".into())),
    };
    let (path, x) = coeffs.split_at(coeffs.len() - 1);
    let mut terms: Vec<(Label, i64)> = path
        .iter()
        .enumerate()
        .map(|(k, &c)| (Label::Index(k + 1), c))
        .collect();
    terms.push((Label::X, x[0]));
    Ok(num.root(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_parse_round_trip() {
        for text in ["e1-e3", "e2+e4", "-(e1+e2)"] {
            let e: EpsilonRoot = text.parse().unwrap();
            assert_eq!(e.to_string(), text);
        }
        assert!("e3-e1".parse::<EpsilonRoot>().is_err());
        assert!("e1*e2".parse::<EpsilonRoot>().is_err());
    }
    use crate::roots::{positive_roots, theta};

    #[test]
    fn d_labels() {
        let d = Diagram::y(1, 1, 2).unwrap();
        let num = Numbering::classical(&d).unwrap();
        assert_eq!(
            num.labels(),
            &[
                Label::Index(3),
                Label::Index(4),
                Label::Index(5),
                Label::Index(2),
                Label::Index(1)
            ]
        );
    }

    #[test]
    fn e_labels() {
        let d = Diagram::y(1, 2, 4).unwrap();
        let num = Numbering::classical(&d).unwrap();
        assert_eq!(num.x(), 1);
        assert_eq!(num.v(2), 2);
        assert_eq!(num.v(1), 3);
        assert_eq!(num.v(7), 7);
        assert_eq!("x".parse::<Label>().unwrap(), Label::X);
    }

    #[test]
    fn d_epsilon_of_simple_and_highest() {
        let d = Diagram::y(1, 1, 3).unwrap();
        let num = Numbering::classical(&d).unwrap();
        let last = Root::simple(6, num.v(6));
        assert_eq!(epsilon_coords(&d, &last).unwrap(), EpsilonRoot::plus(5, 6));
        let t = theta(&d, num.v(1)).unwrap();
        assert_eq!(epsilon_coords(&d, &t).unwrap(), EpsilonRoot::plus(1, 2));
    }

    #[test]
    fn epsilon_round_trip() {
        for d in [Diagram::path(5).unwrap(), Diagram::y(1, 1, 3).unwrap(), Diagram::y(1, 3, 1).unwrap()] {
            for r in positive_roots(&d, None).unwrap() {
                let e = epsilon_coords(&d, &r).unwrap();
                assert!(!e.negative && e.i < e.j);
                assert_eq!(root_from_epsilon(&d, &e).unwrap(), r);
                let neg = epsilon_coords(&d, &-&r).unwrap();
                assert!(neg.negative);
            }
        }
    }

    #[test]
    fn epsilon_json() {
        let e = EpsilonRoot::plus(1, 4);
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"sign":"+","i":1,"j":4}"#);
    }

    #[test]
    fn e_highest_roots_have_norm_two() {
        for c in 2..=4 {
            let d = Diagram::y(1, 2, c).unwrap();
            let num = Numbering::classical(&d).unwrap();
            let h = e_highest_root(&num).unwrap();
            let roots = positive_roots(&d, None).unwrap();
            assert_eq!(roots.last(), Some(&h));
        }
    }
}
