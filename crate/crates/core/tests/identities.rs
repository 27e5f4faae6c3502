mod common;

use std::collections::HashMap;

use common::*;
use tworoots::action::{conjugating_word, simple_action_on_basis, star_bijection};
use tworoots::forms::{bprime, c_pair_apply};
use tworoots::orbits::{enumerate_orbits, RootPair};
use tworoots::roots::{bform, norm};
use tworoots::symsq::reflection_offset;
use tworoots::{ActionCase, CanonicalBasis, Diagram, Root, SymSquare};

fn all_pairs(basis: &CanonicalBasis) -> Vec<RootPair> {
    enumerate_orbits(basis)
        .unwrap()
        .into_iter()
        .flat_map(|o| o.members)
        .collect()
}

#[test]
fn operator_identity_on_all_tworoots() {
    for d in [d(5), e6()] {
        let basis = CanonicalBasis::new(&d).unwrap();
        for p in all_pairs(&basis) {
            let t = p.tworoot();
            for e in basis.elements() {
                let lhs = c_pair_apply(&d, p.lo(), p.hi(), &e.tworoot).unwrap();
                let rhs = t.scale(&bprime(&d, &t, &e.tworoot));
                assert_eq!(lhs, rhs, "{d}");
            }
        }
    }
}

#[test]
fn reflection_formula_matches_conjugation() {
    for d in [d(5), e6()] {
        let basis = CanonicalBasis::new(&d).unwrap();
        let n = d.n();
        for p in all_pairs(&basis) {
            for g in 0..n {
                let gamma = Root::simple(n, g);
                let v = reflection_offset(&d, p.lo(), p.hi(), &gamma).unwrap();
                let formula = p.tworoot().add(&SymSquare::of_roots(&gamma, &v).unwrap());
                assert_eq!(formula, p.tworoot().reflect_simple(&d, g));
            }
        }
    }
}

#[test]
fn offset_is_real_exactly_when_a_pairing_is_a_unit() {
    for d in [d(5), e6()] {
        let basis = CanonicalBasis::new(&d).unwrap();
        let n = d.n();
        for p in all_pairs(&basis) {
            for g in 0..n {
                let gamma = Root::simple(n, g);
                let v = reflection_offset(&d, p.lo(), p.hi(), &gamma).unwrap();
                let x = bform(&d, p.lo(), &gamma).unwrap();
                let y = bform(&d, p.hi(), &gamma).unwrap();
                let real = norm(&d, &v).unwrap() == 2;
                assert_eq!(real, x.abs() == 1 || y.abs() == 1, "{d} {p:?} {g}");
            }
        }
    }
}

#[test]
fn basis_pairings_trichotomy() {
    for d in [d(4), d(5), d(6), e6(), e7(), e8(), Diagram::y(2, 2, 2).unwrap(), Diagram::y(2, 3, 4).unwrap()] {
        let basis = CanonicalBasis::new(&d).unwrap();
        let n = d.n();
        for e in basis.elements() {
            let ai = Root::simple(n, e.vertex);
            for g in 0..n {
                let gamma = Root::simple(n, g);
                if gamma == ai || gamma == e.partner {
                    continue;
                }
                let x = bform(&d, &ai, &gamma).unwrap();
                let y = bform(&d, &e.partner, &gamma).unwrap();
                assert!((x == 0 && y == 0) || x == -1 || (x == 0 && y == -1), "{d}");
                assert!((-1..=1).contains(&y), "{d}");
            }
        }
    }
}

#[test]
fn star_bijections_round_trip() {
    for d in [d(5), e6()] {
        let basis = CanonicalBasis::new(&d).unwrap();
        for (i, j) in d.edges() {
            let there = star_bijection(&basis, i, j).unwrap();
            let back: HashMap<usize, usize> = star_bijection(&basis, j, i).unwrap().into_iter().collect();
            assert_eq!(there.len(), basis.star(i).len());
            for (k, t) in there {
                assert_eq!(back[&t], k);
            }
        }
    }
}

#[test]
fn added_elements_are_locally_conjugate() {
    for d in [d(5), e6(), Diagram::y(2, 2, 3).unwrap()] {
        let basis = CanonicalBasis::new(&d).unwrap();
        let n = d.n();
        for (k, e) in basis.elements().iter().enumerate() {
            for g in 0..n {
                let case = simple_action_on_basis(&basis, g, k).unwrap();
                let ActionCase::Add(t) = case else { continue };
                let roots = [Root::simple(n, e.vertex), e.partner.clone(), Root::simple(n, g)];
                let target = &basis.get(t).tworoot;
                let word = conjugating_word(&d, &roots, &e.tworoot, target, 6);
                assert!(word.is_some(), "{d} b{k} s{g}");
            }
        }
    }
}
