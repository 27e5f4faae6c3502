//! ASCII arc diagrams of 2-roots in types A and D.
//!
//! Points sit on one row at a fixed pitch. Each arc gets its own row above
//! the points, widest first, drawn as `+---+` with a `*` at its midpoint when
//! decorated; legs of the arcs above are continued with `|`.

use serde::Serialize;
use tworoots::numbering::epsilon_coords;
use tworoots::{CanonicalBasis, Diagram, EpsSign, Result, Root, SymSquare};

const PITCH: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Arc {
    pub i: usize,
    pub j: usize,
    pub decorated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcDiagram {
    pub points: usize,
    pub arcs: Vec<Arc>,
}

impl ArcDiagram {
    /// The two arcs of `α ∨ β`, one per component, ignoring signs.
    pub fn of_tworoot(d: &Diagram, a: &Root, b: &Root) -> Result<Self> {
        let points = match d.kind() {
            tworoots::DiagramKind::Path { n } => n + 1,
            tworoots::DiagramKind::Y { .. } => d.n(),
        };
        let mut arcs: Vec<Arc> = [a, b]
            .into_iter()
            .map(|r| {
                let e = epsilon_coords(d, &r.positive_part())?;
                Ok(Arc {
                    i: e.i,
                    j: e.j,
                    decorated: e.sign == EpsSign::Plus,
                })
            })
            .collect::<Result<_>>()?;
        arcs.sort();
        Ok(ArcDiagram { points, arcs })
    }

    pub fn render(&self) -> String {
        let width = (self.points - 1) * PITCH + 1;
        let col = |p: usize| (p - 1) * PITCH;
        let mut order: Vec<&Arc> = self.arcs.iter().collect();
        order.sort_by_key(|a| (std::cmp::Reverse(a.j - a.i), a.i, a.decorated));
        let mut lines = Vec::new();
        for (r, arc) in order.iter().enumerate() {
            let mut row = vec![' '; width];
            for above in &order[..r] {
                row[col(above.i)] = '|';
                row[col(above.j)] = '|';
            }
            for cell in &mut row[col(arc.i)..=col(arc.j)] {
                if *cell == ' ' {
                    *cell = '-';
                }
            }
            row[col(arc.i)] = '+';
            row[col(arc.j)] = '+';
            if arc.decorated {
                row[(col(arc.i) + col(arc.j)) / 2] = '*';
            }
            lines.push(row.into_iter().collect::<String>().trim_end().to_string());
        }
        let mut row = vec![' '; width + 2];
        for p in 1..=self.points {
            for (k, ch) in p.to_string().chars().enumerate() {
                row[col(p) + k] = ch;
            }
        }
        lines.push(row.into_iter().collect::<String>().trim_end().to_string());
        lines.join("\n")
    }
}

/// A 2-root as an arc diagram together with its canonical expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skein {
    pub input: ArcDiagram,
    pub terms: Vec<(i64, ArcDiagram)>,
}

impl Skein {
    pub fn new(basis: &CanonicalBasis, a: &Root, b: &Root) -> Result<Self> {
        let d = basis.diagram();
        let input = ArcDiagram::of_tworoot(d, a, b)?;
        let coords = basis.expand_integral(&SymSquare::of_roots(a, b)?)?;
        let mut terms = Vec::new();
        for (k, &c) in coords.iter().enumerate() {
            if c != 0 {
                let (x, y) = basis.get(k).components();
                terms.push((c, ArcDiagram::of_tworoot(d, &x, &y)?));
            }
        }
        Ok(Skein { input, terms })
    }

    pub fn render(&self) -> String {
        let mut out = self.input.render();
        for (k, (c, diagram)) in self.terms.iter().enumerate() {
            let op = if k == 0 { "=" } else { "+" };
            out.push_str(&format!("\n\n{op} {c} x\n{}", diagram.render()));
        }
        out
    }
}
