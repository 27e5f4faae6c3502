//! Vertex labels and text rendering of roots, 2-roots and tables.

use clap::ValueEnum;
use tworoots::{Diagram, FiniteType, Numbering, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassicalNumbering {
    D,
    E,
}

/// Maps internal vertex indices to printed labels.
#[derive(Clone, Debug)]
pub struct Labels {
    names: Vec<String>,
}

impl Labels {
    pub fn new(d: &Diagram, scheme: Option<ClassicalNumbering>) -> anyhow::Result<Self> {
        let names = match scheme {
            None => (0..d.n()).map(|v| v.to_string()).collect(),
            Some(s) => {
                let num = Numbering::classical(d)?;
                let ok = matches!(
                    (s, num.family()),
                    (ClassicalNumbering::D, FiniteType::D(_)) | (ClassicalNumbering::E, FiniteType::E(_))
                );
                anyhow::ensure!(ok, "{d} is of type {}, not {s:?}", num.family());
                (0..d.n()).map(|v| num.label(v).to_string()).collect()
            }
        };
        Ok(Labels { names })
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn root(&self, r: &Root) -> String {
        let mut order: Vec<usize> = (0..self.names.len()).collect();
        order.sort_by_key(|&v| self.names[v].parse::<usize>().unwrap_or(v));
        let mut out = String::new();
        for v in order {
            let c = r.coeffs()[v];
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            out.push_str(&format!("{sign}{mag}a{}", self.names[v]));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn vee(&self, a: &Root, b: &Root) -> String {
        format!("({}) v ({})", self.root(a), self.root(b))
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(header.to_vec())];
    for row in rows {
        out.push(line(row.iter().map(String::as_str).collect()));
    }
    out.join("\n")
}

pub fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}
