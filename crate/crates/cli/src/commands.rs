//! One function per subcommand. Each returns the text and JSON renderings of
//! its result together with an exit status.

use anyhow::{bail, ensure, Context};
use serde::Serialize;
use serde_json::{json, Value};
use tworoots::forms::{
    affine_radical_witness, basis_gram, decompose_s2v, gram_mod_p, module_radical_dim, Decomposition,
};
use tworoots::group::{action_kernel_order, group_order_of, DEFAULT_STATE_CAP};
use tworoots::numbering::root_from_epsilon;
use tworoots::orbits::{enumerate_orbits, highest_tworoot, orbit_of, orbit_tables};
use tworoots::roots::positive_roots;
use tworoots::{
    action::columns_sign_coherent, basis::sign_coherence, BasisAction, CanonicalBasis, Diagram, EpsilonRoot,
    Matrix, Rational, Root, SymSquare, TypeClass,
};

use crate::args::{Command, PairArgs, Target};
use crate::format::{join, table, Labels};
use crate::render::Skein;
use crate::weyl::weyl_order;

/// What a command produced.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }
}

struct Ctx {
    diagram: Diagram,
    labels: Labels,
}

impl Ctx {
    fn new(target: &Target) -> anyhow::Result<Self> {
        let diagram = target.diagram.diagram()?;
        let labels = Labels::new(&diagram, target.output.classical_numbering)?;
        Ok(Ctx { diagram, labels })
    }

    fn basis(&self) -> anyhow::Result<(CanonicalBasis, BasisAction)> {
        let basis = CanonicalBasis::new(&self.diagram)?;
        let action = BasisAction::new(&basis)?;
        Ok((basis, action))
    }
}

pub fn run(command: &Command) -> anyhow::Result<Report> {
    match command {
        Command::Basis(t) => basis(&Ctx::new(t)?),
        Command::Roots { target, height_bound } => roots(&Ctx::new(target)?, *height_bound),
        Command::Orbits {
            target,
            height_bound,
            element,
        } => orbits(&Ctx::new(target)?, *height_bound, *element),
        Command::Highest(t) => highest(&Ctx::new(t)?),
        Command::Expand { target, pair } => expand(&Ctx::new(target)?, pair),
        Command::Matrix {
            target,
            word,
            check_sign_coherence,
        } => matrix(&Ctx::new(target)?, word, *check_sign_coherence),
        Command::Decompose { target, prime } => decompose(&Ctx::new(target)?, *prime),
        Command::Kernel { target, max_order } => kernel(&Ctx::new(target)?, *max_order),
        Command::Skein { target, pair } => skein(&Ctx::new(target)?, pair),
        Command::Verify { .. } => unreachable!("verify is dispatched separately"),
    }
}

/// A root given as coefficients `c0 c1 …` or as an ε-root.
pub fn parse_root(d: &Diagram, text: &str) -> anyhow::Result<Root> {
    if text.contains('e') {
        let eps: EpsilonRoot = text.parse()?;
        return Ok(root_from_epsilon(d, &eps)?);
    }
    let coeffs: Vec<i64> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().with_context(|| format!("bad coefficient {s:?}")))
        .collect::<anyhow::Result<_>>()?;
    ensure!(coeffs.len() == d.n(), "expected {} coefficients, found {}", d.n(), coeffs.len());
    Ok(Root(coeffs))
}

pub fn parse_word(d: &Diagram, text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            let i: usize = s.parse().with_context(|| format!("bad generator {s:?}"))?;
            d.check_vertex(i)?;
            Ok(i)
        })
        .collect()
}

fn basis(ctx: &Ctx) -> anyhow::Result<Report> {
    let (basis, _) = ctx.basis()?;
    let l = &ctx.labels;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (k, e) in basis.elements().iter().enumerate() {
        let (a, b) = e.components();
        rows.push(vec![
            k.to_string(),
            l.vertex(e.vertex).to_string(),
            format!("{:?}", e.kind),
            l.root(&e.partner),
            l.vee(&a, &b),
        ]);
        items.push(json!({
            "index": k,
            "vertex": l.vertex(e.vertex),
            "kind": e.kind,
            "partner": e.partner,
            "components": [a, b],
        }));
    }
    let text = format!(
        "{} canonical basis, {} elements\n{}",
        ctx.diagram,
        basis.len(),
        table(&["#", "vertex", "kind", "partner", "2-root"], &rows)
    );
    Ok(Report::ok(text, json!({ "diagram": ctx.diagram, "basis": items })))
}

fn roots(ctx: &Ctx, bound: Option<i64>) -> anyhow::Result<Report> {
    let roots = positive_roots(&ctx.diagram, bound)?;
    let rows: Vec<Vec<String>> = roots
        .iter()
        .enumerate()
        .map(|(k, r)| vec![k.to_string(), r.height().to_string(), ctx.labels.root(r)])
        .collect();
    let text = format!(
        "{} positive real roots: {}\n{}",
        ctx.diagram,
        roots.len(),
        table(&["#", "height", "root"], &rows)
    );
    Ok(Report::ok(text, json!({ "diagram": ctx.diagram, "roots": roots })))
}

fn orbits(ctx: &Ctx, bound: Option<i64>, element: usize) -> anyhow::Result<Report> {
    let (basis, action) = ctx.basis()?;
    if ctx.diagram.classify() != TypeClass::Finite {
        let Some(bound) = bound else {
            bail!("{} is infinite; pass --height-bound for a truncated orbit", ctx.diagram)
        };
        ensure!(element < basis.len(), "basis element {element} out of range");
        let seed = &basis.get(element).tworoot;
        let orbit = orbit_of(&basis, &action, seed, bound)?;
        let rows: Vec<Vec<String>> = orbit
            .members
            .iter()
            .map(|c| vec![c.iter().sum::<i64>().to_string(), join(c)])
            .collect();
        let text = format!(
            "{} orbit of basis element {element} up to height {bound}: {} members\n{}",
            ctx.diagram,
            orbit.members.len(),
            table(&["ht2", "coordinates"], &rows)
        );
        let json = json!({ "diagram": ctx.diagram, "element": element, "bound": bound, "members": orbit.members });
        return Ok(Report::ok(text, json));
    }
    let orbits = enumerate_orbits(&basis)?;
    let tables = orbit_tables(&basis, &action, &orbits)?;
    let rows: Vec<Vec<String>> = tables
        .iter()
        .map(|t| {
            let (a, b) = t.highest.components().expect("highest has components");
            vec![
                t.id.to_string(),
                t.size.to_string(),
                t.basis_members.len().to_string(),
                ctx.labels.vee(&a, &b),
                t.height.to_string(),
            ]
        })
        .collect();
    let text = format!(
        "{}: {} orbits\n{}",
        ctx.diagram,
        tables.len(),
        table(&["orbit", "size", "basis", "highest", "height"], &rows)
    );
    Ok(Report::ok(text, json!({ "diagram": ctx.diagram, "orbits": tables })))
}

fn highest(ctx: &Ctx) -> anyhow::Result<Report> {
    let (basis, action) = ctx.basis()?;
    let orbits = enumerate_orbits(&basis)?;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for o in &orbits {
        let h = highest_tworoot(&basis, &action, o)?;
        rows.push(vec![
            o.id.to_string(),
            ctx.labels.vee(h.pair.lo(), h.pair.hi()),
            h.height.to_string(),
            join(&h.coords),
        ]);
        items.push(json!({
            "orbit": o.id,
            "components": [h.pair.lo(), h.pair.hi()],
            "height": h.height,
            "coords": h.coords,
        }));
    }
    let text = format!(
        "{} highest 2-roots\n{}",
        ctx.diagram,
        table(&["orbit", "2-root", "height", "coordinates"], &rows)
    );
    Ok(Report::ok(text, json!({ "diagram": ctx.diagram, "highest": items })))
}

fn coord_strings(c: &[Rational]) -> Vec<String> {
    c.iter().map(ToString::to_string).collect()
}

fn expand(ctx: &Ctx, pair: &PairArgs) -> anyhow::Result<Report> {
    let (basis, _) = ctx.basis()?;
    let a = parse_root(&ctx.diagram, &pair.alpha)?;
    let b = parse_root(&ctx.diagram, &pair.beta)?;
    let t = SymSquare::of_roots(&a, &b)?;
    let coords = basis.expand(&t)?;
    let ht2: Rational = coords.iter().sum();
    let sign = sign_coherence(&coords);
    let sign_text = match &sign {
        Some(s) => format!("{s:?}").to_lowercase(),
        None => "mixed".to_string(),
    };
    let mut rows = Vec::new();
    for (k, c) in coords.iter().enumerate() {
        if *c != Rational::from_integer(0.into()) {
            let (x, y) = basis.get(k).components();
            rows.push(vec![k.to_string(), c.to_string(), ctx.labels.vee(&x, &y)]);
        }
    }
    let text = format!(
        "{} = sum over {} basis elements, ht2 {ht2}, sign {sign_text}\n{}",
        ctx.labels.vee(&a, &b),
        rows.len(),
        table(&["#", "coefficient", "basis element"], &rows)
    );
    let json = json!({
        "diagram": ctx.diagram,
        "components": [a, b],
        "coords": coord_strings(&coords),
        "ht2": ht2.to_string(),
        "sign": sign,
    });
    Ok(Report::ok(text, json))
}

fn matrix(ctx: &Ctx, word: &str, check: bool) -> anyhow::Result<Report> {
    let (_, action) = ctx.basis()?;
    let word = parse_word(&ctx.diagram, word)?;
    let m = action.word_matrix(&word);
    let coherent = columns_sign_coherent(&m);
    let rows: Vec<String> = m.to_rows().iter().map(|r| join(r)).collect();
    let text = format!(
        "{} word [{}], {}x{} matrix, columns sign-coherent: {coherent}\n{}",
        ctx.diagram,
        join(&word),
        m.rows(),
        m.cols(),
        rows.join("\n")
    );
    let json = json!({
        "diagram": ctx.diagram,
        "word": word,
        "matrix": m.to_rows(),
        "sign_coherent": coherent,
    });
    Ok(Report {
        text,
        json,
        code: if check && !coherent { 1 } else { 0 },
    })
}

#[derive(Serialize)]
struct ModP {
    prime: u64,
    rank: usize,
    zero: bool,
}

fn reduce_mod(g: &Matrix<i64>, p: u64) -> anyhow::Result<ModP> {
    macro_rules! dispatch {
        ($($q:literal),*) => {
            match p {
                $($q => {
                    let m = gram_mod_p::<$q>(g);
                    ModP { prime: p, rank: m.rank(), zero: m.is_zero() }
                })*
                _ => bail!("supported primes: {}", [$($q),*].map(|q: u64| q.to_string()).join(", ")),
            }
        };
    }
    Ok(dispatch!(2, 3, 5, 7, 11, 13))
}

fn decompose(ctx: &Ctx, prime: Option<u64>) -> anyhow::Result<Report> {
    let d = &ctx.diagram;
    let (basis, action) = ctx.basis()?;
    let all: Vec<usize> = (0..basis.len()).collect();
    let modp = prime.map(|p| reduce_mod(&basis_gram(&basis, &all), p)).transpose()?;
    let modp_line = modp
        .as_ref()
        .map(|m| format!("\nGram mod {}: rank {}, zero {}", m.prime, m.rank, m.zero))
        .unwrap_or_default();
    match d.classify() {
        TypeClass::Finite => {
            let orbits = enumerate_orbits(&basis)?;
            let rep: Decomposition = decompose_s2v(&basis, &action, &orbits)?;
            let dims: Vec<String> = std::iter::once(rep.omega)
                .chain(rep.dims.iter().copied())
                .chain((rep.complement > 0).then_some(rep.complement))
                .map(|x| x.to_string())
                .collect();
            let text = format!(
                "{d}: S^2(V) has dimension {} = {}\norbit radical dimensions: {}\nsummands invariant: {}{modp_line}",
                rep.total,
                dims.join(" + "),
                join(&rep.radical_dims),
                rep.invariant
            );
            let json = json!({ "diagram": d, "class": "Finite", "decomposition": rep, "mod_p": modp });
            Ok(Report::ok(text, json))
        }
        TypeClass::Affine => {
            let witness = affine_radical_witness(&basis)?;
            let rad = module_radical_dim(&basis);
            let text = format!(
                "{d} is affine: radical of M has dimension {rad}, spanned by {} elements delta v x{modp_line}",
                witness.len()
            );
            let json = json!({
                "diagram": d,
                "class": "Affine",
                "radical_dim": rad,
                "witness": witness.iter().map(|w| w.rows()).collect::<Vec<_>>(),
                "mod_p": modp,
            });
            Ok(Report::ok(text, json))
        }
        TypeClass::Indefinite => {
            let rad = module_radical_dim(&basis);
            let text = format!("{d} is indefinite: radical of M has dimension {rad}{modp_line}");
            let json = json!({ "diagram": d, "class": "Indefinite", "radical_dim": rad, "mod_p": modp });
            Ok(Report::ok(text, json))
        }
    }
}

fn kernel(ctx: &Ctx, max_order: u64) -> anyhow::Result<Report> {
    let d = &ctx.diagram;
    let order = weyl_order(d).with_context(|| format!("{d} has no finite Weyl group order"))?;
    ensure!(order <= max_order, "|W| = {order} exceeds --max-order {max_order}");
    let (basis, action) = ctx.basis()?;
    let orbits = enumerate_orbits(&basis)?;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for o in &orbits {
        let image = group_order_of(&action, &o.basis_members, DEFAULT_STATE_CAP)?;
        let kernel = action_kernel_order(&action, &o.basis_members, order, DEFAULT_STATE_CAP)?;
        rows.push(vec![
            o.id.to_string(),
            o.basis_members.len().to_string(),
            image.to_string(),
            kernel.to_string(),
        ]);
        items.push(json!({ "orbit": o.id, "dim": o.basis_members.len(), "image": image, "kernel": kernel }));
    }
    let text = format!(
        "{d}: |W| = {order}\n{}",
        table(&["orbit", "dim", "image", "kernel"], &rows)
    );
    Ok(Report::ok(text, json!({ "diagram": d, "group_order": order, "orbits": items })))
}

fn skein(ctx: &Ctx, pair: &PairArgs) -> anyhow::Result<Report> {
    let (basis, _) = ctx.basis()?;
    let a = parse_root(&ctx.diagram, &pair.alpha)?;
    let b = parse_root(&ctx.diagram, &pair.beta)?;
    let s = Skein::new(&basis, &a, &b)?;
    Ok(Report::ok(s.render(), json!({ "diagram": ctx.diagram, "skein": s })))
}
