//! Orbits of pairs of orthogonal positive roots, the height comparison and
//! monoidal covers on pairs, and highest 2-roots.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::action::BasisAction;
use crate::basis::CanonicalBasis;
use crate::diagram::{Diagram, FiniteType, TypeClass};
use crate::error::{Error, Result};
use crate::numbering::{e_highest_root, Label, Numbering};
use crate::roots::{apply_word, bform, pair_simple, positive_roots, simple_reflect, theta, Root};
use crate::symsq::{components, SymSquare, TwoRoot};

/// An unordered pair of distinct orthogonal positive roots, stored with the
/// lower root (by height, then coefficients) first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootPair {
    lo: Root,
    hi: Root,
}

impl RootPair {
    pub fn new(d: &Diagram, a: &Root, b: &Root) -> Result<Self> {
        for r in [a, b] {
            let nr = bform(d, r, r)?;
            if nr != 2 {
                return Err(Error::NotARealRoot(nr));
            }
        }
        if bform(d, a, b)? != 0 {
            return Err(Error::NotOrthogonal);
        }
        Ok(Self::normalized(a.positive_part(), b.positive_part()))
    }

    /// Orders two positive roots without checking them.
    pub fn normalized(a: Root, b: Root) -> Self {
        if b.sort_key() < a.sort_key() {
            RootPair { lo: b, hi: a }
        } else {
            RootPair { lo: a, hi: b }
        }
    }

    pub fn lo(&self) -> &Root {
        &self.lo
    }

    pub fn hi(&self) -> &Root {
        &self.hi
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.lo == *r || self.hi == *r
    }

    pub fn tworoot(&self) -> SymSquare<i64> {
        SymSquare::of_roots(&self.lo, &self.hi).expect("components of equal length")
    }

    pub fn to_tworoot(&self) -> TwoRoot {
        TwoRoot {
            s: self.tworoot(),
            components: Some((self.lo.clone(), self.hi.clone())),
        }
    }

    /// The pair underlying a positive 2-root.
    pub fn from_tworoot(s: &SymSquare<i64>) -> Result<Self> {
        let (a, b) = components(&s.positive_form())?;
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::NoDecomposition("components are not both positive".into()));
        }
        Ok(Self::normalized(a, b))
    }
}

/// `s_i(ρ)` with each root replaced by its positive representative.
pub fn pair_reflect(d: &Diagram, i: usize, rho: &RootPair) -> RootPair {
    RootPair::normalized(
        simple_reflect(d, i, &rho.lo).positive_part(),
        simple_reflect(d, i, &rho.hi).positive_part(),
    )
}

/// `w(ρ)` for `w = word[0] word[1] …`, rightmost generator first.
pub fn pair_action(d: &Diagram, word: &[usize], rho: &RootPair) -> RootPair {
    RootPair::normalized(
        apply_word(d, word, &rho.lo).positive_part(),
        apply_word(d, word, &rho.hi).positive_part(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub id: usize,
    /// Sorted by the row-major entries of the 2-root.
    pub members: Vec<RootPair>,
    pub basis_members: Vec<usize>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// All orbits of a finite-type diagram, numbered in order of their first
/// basis element.
pub fn enumerate_orbits(basis: &CanonicalBasis) -> Result<Vec<Orbit>> {
    let d = basis.diagram();
    if d.classify() != TypeClass::Finite {
        return Err(Error::NotFinite);
    }
    let mut assigned: HashMap<RootPair, usize> = HashMap::new();
    let mut orbits = Vec::new();
    for (k, e) in basis.elements().iter().enumerate() {
        let (a, b) = e.components();
        let seed = RootPair::normalized(a, b);
        if let Some(&id) = assigned.get(&seed) {
            let orbit: &mut Orbit = &mut orbits[id];
            orbit.basis_members.push(k);
            continue;
        }
        let id = orbits.len();
        let mut members = vec![seed.clone()];
        assigned.insert(seed.clone(), id);
        let mut queue = VecDeque::from([seed]);
        while let Some(rho) = queue.pop_front() {
            for i in 0..d.n() {
                let next = pair_reflect(d, i, &rho);
                if !assigned.contains_key(&next) {
                    assigned.insert(next.clone(), id);
                    members.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        members.sort_by_cached_key(|p| p.tworoot().key().to_vec());
        orbits.push(Orbit {
            id,
            members,
            basis_members: vec![k],
        });
    }
    Ok(orbits)
}

/// The orbit containing `rho`.
pub fn orbit_id_of(orbits: &[Orbit], rho: &RootPair) -> Option<usize> {
    orbits
        .iter()
        .find(|o| o.members.contains(rho))
        .map(|o| o.id)
}

/// Negates a coordinate vector whose entries are all nonpositive.
pub fn positive_normalize(x: &mut [i64]) {
    if x.iter().all(|&v| v <= 0) {
        x.iter_mut().for_each(|v| *v = -*v);
    }
}

/// Orbit members reachable from a seed through elements of height at most
/// `bound`, in canonical coordinates sorted by height then entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedOrbit {
    pub bound: i64,
    pub members: Vec<Vec<i64>>,
}

pub fn orbit_of(
    basis: &CanonicalBasis,
    action: &BasisAction,
    t: &SymSquare<i64>,
    bound: i64,
) -> Result<TruncatedOrbit> {
    let mut seed = basis.expand_integral(&t.positive_form())?;
    positive_normalize(&mut seed);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    if seed.iter().sum::<i64>() <= bound {
        seen.insert(seed.clone());
        queue.push_back(seed);
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..action.rank() {
            let mut y = action.apply_generator(i, &x);
            positive_normalize(&mut y);
            if y.iter().sum::<i64>() <= bound && !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut members: Vec<Vec<i64>> = seen.into_iter().collect();
    members.sort_by(|a, b| (a.iter().sum::<i64>(), a).cmp(&(b.iter().sum::<i64>(), b)));
    Ok(TruncatedOrbit { bound, members })
}

/// The comparison on pairs in one orbit: the lowest root of `ρ1 \ ρ2` is
/// strictly lower than the lowest root of `ρ2 \ ρ1`.
pub fn cgw_less(rho1: &RootPair, rho2: &RootPair) -> bool {
    let min_height = |x: &RootPair, y: &RootPair| -> Option<i64> {
        [&x.lo, &x.hi]
            .into_iter()
            .filter(|r| !y.contains(r))
            .map(Root::height)
            .min()
    };
    match (min_height(rho1, rho2), min_height(rho2, rho1)) {
        (Some(h1), Some(h2)) => h1 < h2,
        _ => false,
    }
}

/// Generators `s_i` with `ρ < s_i(ρ)` a covering step of the monoidal order.
pub fn monoidal_covers(d: &Diagram, rho: &RootPair) -> Vec<(usize, RootPair)> {
    (0..d.n())
        .map(|i| (i, pair_reflect(d, i, rho)))
        .filter(|(_, next)| next != rho && cgw_less(rho, next))
        .collect()
}

/// Generators `s_i` with `s_i(ρ) < ρ` a covering step of the monoidal order.
pub fn monoidal_down_covers(d: &Diagram, rho: &RootPair) -> Vec<(usize, RootPair)> {
    (0..d.n())
        .map(|i| (i, pair_reflect(d, i, rho)))
        .filter(|(_, next)| next != rho && cgw_less(next, rho))
        .collect()
}

/// Generators whose action strictly increases `x` in the coordinatewise
/// order, with the resulting vectors.
pub fn upward_steps(action: &BasisAction, x: &[i64]) -> Vec<(usize, Vec<i64>)> {
    (0..action.rank())
        .filter_map(|i| {
            let mut y = action.apply_generator(i, x);
            positive_normalize(&mut y);
            let up = y != x && y.iter().zip(x).all(|(a, b)| a >= b);
            up.then_some((i, y))
        })
        .collect()
}

/// Repeatedly applies an upward step until none exists. `choose` picks one
/// of the available generators (given in increasing order).
pub fn climb(
    action: &BasisAction,
    start: &[i64],
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Vec<i64> {
    let mut x = start.to_vec();
    loop {
        let steps = upward_steps(action, &x);
        if steps.is_empty() {
            return x;
        }
        let gens: Vec<usize> = steps.iter().map(|(i, _)| *i).collect();
        let pick = choose(&gens);
        x = steps
            .into_iter()
            .find(|(i, _)| *i == pick)
            .expect("chosen generator is available")
            .1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Highest {
    pub pair: RootPair,
    pub coords: Vec<i64>,
    pub height: i64,
}

/// Climbs from the first basis element of the orbit, always taking the
/// lowest-index upward generator.
pub fn highest_tworoot(basis: &CanonicalBasis, action: &BasisAction, orbit: &Orbit) -> Result<Highest> {
    if basis.diagram().classify() != TypeClass::Finite {
        return Err(Error::NotFinite);
    }
    let mut start = vec![0; basis.len()];
    start[orbit.basis_members[0]] = 1;
    highest_from(basis, action, &start, |g| g[0])
}

/// Climbs from arbitrary coordinates with a caller-supplied choice rule.
pub fn highest_from(
    basis: &CanonicalBasis,
    action: &BasisAction,
    start: &[i64],
    choose: impl FnMut(&[usize]) -> usize,
) -> Result<Highest> {
    let coords = climb(action, start, choose);
    let s = basis.recombine_integral(&coords);
    Ok(Highest {
        pair: RootPair::from_tworoot(&s)?,
        height: coords.iter().sum(),
        coords,
    })
}

/// Sufficient condition for a pair to be highest in its orbit: equal
/// heights, and whenever a simple root pairs to −1 with one component it
/// pairs to +1 with the other.
pub fn satisfies_highest_criterion(d: &Diagram, rho: &RootPair) -> bool {
    if rho.lo.height() != rho.hi.height() {
        return false;
    }
    (0..d.n()).all(|i| {
        let x = pair_simple(d, i, rho.lo.coeffs());
        let y = pair_simple(d, i, rho.hi.coeffs());
        (x != -1 || y == 1) && (y != -1 || x == 1)
    })
}

/// Closed-form highest pairs, one per orbit. Type D with at least five
/// vertices lists the small orbit first; type D4 lists three.
pub fn closed_form_highest(d: &Diagram) -> Result<Vec<RootPair>> {
    let num = Numbering::classical(d)?;
    let n = d.n();
    let path = |b: Label, c: Label| -> Root {
        let (u, v) = (num.vertex(b).expect("label"), num.vertex(c).expect("label"));
        Root::sum_of(n, &d.tree_path(u, v))
    };
    let l = Label::Index;
    let pair = |a: Root, b: Root| RootPair::new(d, &a, &b);
    match num.family() {
        FiniteType::A(n) => Ok(vec![pair(path(l(1), l(n - 1)), path(l(2), l(n)))?]),
        FiniteType::D(n) => {
            let top = theta(d, num.v(1))?;
            if n == 4 {
                let a24 = top.sub(&path(l(2), l(4)));
                let a23 = top.sub(&path(l(2), l(3)));
                let a12 = top.sub(&path(l(1), l(2)));
                Ok(vec![
                    pair(a24.clone(), a23.clone())?,
                    pair(a24, a12.clone())?,
                    pair(a23, a12)?,
                ])
            } else {
                Ok(vec![
                    pair(path(l(1), l(n - 1)), path(l(1), l(n)))?,
                    pair(top.sub(&path(l(1), l(2))), top.sub(&path(l(2), l(3))))?,
                ])
            }
        }
        FiniteType::E(rank) => {
            let top = e_highest_root(&num)?;
            let (p, q, end) = match rank {
                6 => (l(2), l(4), Label::X),
                7 => (Label::X, l(4), l(1)),
                _ => (l(2), Label::X, l(7)),
            };
            Ok(vec![pair(top.sub(&path(p, end)), top.sub(&path(q, end)))?])
        }
    }
}

/// The closed-form highest pair lying in orbit `id`.
pub fn explicit_highest(d: &Diagram, orbits: &[Orbit], id: usize) -> Result<RootPair> {
    if id >= orbits.len() {
        return Err(Error::UnknownOrbit(id));
    }
    closed_form_highest(d)?
        .into_iter()
        .find(|p| orbits[id].members.contains(p))
        .ok_or(Error::UnknownOrbit(id))
}

/// Height of the highest 2-root of orbit `id`.
pub fn highest_height(basis: &CanonicalBasis, action: &BasisAction, orbits: &[Orbit], id: usize) -> Result<i64> {
    let orbit = orbits.get(id).ok_or(Error::UnknownOrbit(id))?;
    Ok(highest_tworoot(basis, action, orbit)?.height)
}

/// All unordered pairs of distinct orthogonal positive roots, found by
/// brute force over the positive roots.
pub fn orthogonal_positive_pairs(d: &Diagram) -> Result<Vec<RootPair>> {
    let roots = positive_roots(d, None)?;
    let mut out = Vec::new();
    for (x, a) in roots.iter().enumerate() {
        for b in &roots[x + 1..] {
            if bform(d, a, b)? == 0 {
                out.push(RootPair::normalized(a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// Summary of one orbit; this is its JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTable {
    pub id: usize,
    pub size: usize,
    pub basis_members: Vec<usize>,
    pub highest: TwoRoot,
    pub height: i64,
}

pub fn orbit_tables(basis: &CanonicalBasis, action: &BasisAction, orbits: &[Orbit]) -> Result<Vec<OrbitTable>> {
    orbits
        .iter()
        .map(|o| {
            let h = highest_tworoot(basis, action, o)?;
            Ok(OrbitTable {
                id: o.id,
                size: o.size(),
                basis_members: o.basis_members.clone(),
                highest: h.pair.to_tworoot(),
                height: h.height,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbits_of(d: &Diagram) -> (CanonicalBasis, BasisAction, Vec<Orbit>) {
        let basis = CanonicalBasis::new(d).unwrap();
        let action = BasisAction::new(&basis).unwrap();
        let orbits = enumerate_orbits(&basis).unwrap();
        (basis, action, orbits)
    }

    #[test]
    fn d4_has_three_orbits() {
        let (_, _, orbits) = orbits_of(&Diagram::y(1, 1, 1).unwrap());
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.basis_members.len() == 3));
    }

    #[test]
    fn e6_single_orbit_height() {
        let d = Diagram::y(1, 2, 2).unwrap();
        let (basis, action, orbits) = orbits_of(&d);
        assert_eq!(orbits.len(), 1);
        let h = highest_tworoot(&basis, &action, &orbits[0]).unwrap();
        assert_eq!(h.height, 28);
        assert_eq!(explicit_highest(&d, &orbits, 0).unwrap(), h.pair);
    }

    #[test]
    fn cgw_is_irreflexive() {
        let d = Diagram::path(4).unwrap();
        let p = RootPair::new(&d, &Root::simple(4, 0), &Root::simple(4, 2)).unwrap();
        assert!(!cgw_less(&p, &p));
    }

    #[test]
    fn pair_rejects_non_orthogonal() {
        let d = Diagram::path(3).unwrap();
        assert_eq!(
            RootPair::new(&d, &Root::simple(3, 0), &Root::simple(3, 1)),
            Err(Error::NotOrthogonal)
        );
    }

    #[test]
    fn reflection_in_component_fixes_pair() {
        let d = Diagram::path(4).unwrap();
        let p = RootPair::new(&d, &Root::simple(4, 0), &Root::simple(4, 2)).unwrap();
        assert_eq!(pair_reflect(&d, 0, &p), p);
    }

    #[test]
    fn truncated_orbit_is_monotone() {
        let d = Diagram::y(2, 2, 2).unwrap();
        let basis = CanonicalBasis::new(&d).unwrap();
        let action = BasisAction::new(&basis).unwrap();
        let seed = basis.get(0).tworoot.clone();
        let small = orbit_of(&basis, &action, &seed, 3).unwrap();
        let large = orbit_of(&basis, &action, &seed, 5).unwrap();
        assert!(small.members.iter().all(|m| large.members.contains(m)));
        assert!(small.members.len() < large.members.len());
    }
}
