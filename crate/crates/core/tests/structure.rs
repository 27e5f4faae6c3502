mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use num_integer::binomial;
use tworoots::numbering::{epsilon_coords, root_from_epsilon};
use tworoots::orbits::{enumerate_orbits, orthogonal_positive_pairs, RootPair};
use tworoots::roots::{bform, delta, positive_roots};
use tworoots::{
    components, ActionCase, CanonicalBasis, Diagram, EpsilonRoot, FiniteType, HGraph, Matrix, Rational, Root,
    SymSquare, TypeClass,
};

/// Classification by the reciprocal-sum criterion for star-shaped trees.
fn expected_class(a: usize, b: usize, c: usize) -> TypeClass {
    let s = Rational::new(1.into(), ((a + 1) as i64).into())
        + Rational::new(1.into(), ((b + 1) as i64).into())
        + Rational::new(1.into(), ((c + 1) as i64).into());
    let one = Rational::from_integer(1.into());
    match s.cmp(&one) {
        std::cmp::Ordering::Greater => TypeClass::Finite,
        std::cmp::Ordering::Equal => TypeClass::Affine,
        std::cmp::Ordering::Less => TypeClass::Indefinite,
    }
}

#[test]
fn classification_matches_reciprocal_criterion() {
    for a in 1..=6 {
        for b in a..=6 {
            for c in b..=8 {
                let d = Diagram::y(a, b, c).unwrap();
                assert_eq!(d.classify(), expected_class(a, b, c), "Y({a},{b},{c})");
            }
        }
    }
    assert_eq!(Diagram::y(1, 2, 4).unwrap().finite_type(), Some(FiniteType::E(8)));
    assert_eq!(Diagram::y(1, 1, 4).unwrap().finite_type(), Some(FiniteType::D(7)));
    assert_eq!(Diagram::path(5).unwrap().finite_type(), Some(FiniteType::A(5)));
}

#[test]
fn cartan_matches_independent_construction() {
    for (a, b, c) in [(1, 1, 1), (1, 2, 4), (2, 3, 5)] {
        let d = Diagram::y(a, b, c).unwrap();
        let want = cartan_from_edges(d.n(), &y_edges(a, b, c));
        assert_eq!(d.cartan().matrix().to_rows(), want);
    }
}

#[test]
fn positive_root_counts() {
    // |Φ⁺|: A_n n(n+1)/2, D_n n(n−1), E6 36, E7 63, E8 120.
    for n in 2..=7 {
        assert_eq!(positive_roots(&Diagram::path(n).unwrap(), None).unwrap().len(), n * (n + 1) / 2);
    }
    for n in 4..=8 {
        assert_eq!(positive_roots(&d(n), None).unwrap().len(), n * (n - 1));
    }
    for (d, count) in [(e6(), 36), (e7(), 63), (e8(), 120)] {
        let roots = positive_roots(&d, None).unwrap();
        assert_eq!(roots.len(), count);
        let oracle: BTreeSet<Vec<i64>> = positive_roots_oracle(&d.cartan().matrix().to_rows()).into_iter().collect();
        let got: BTreeSet<Vec<i64>> = roots.into_iter().map(|r| r.0).collect();
        assert_eq!(got, oracle);
    }
}

#[test]
fn bounded_roots_in_infinite_type() {
    let d = Diagram::y(2, 3, 4).unwrap();
    let roots = positive_roots(&d, Some(6)).unwrap();
    assert!(roots.iter().all(|r| r.height() <= 6 && bform(&d, r, r).unwrap() == 2));
    assert!(positive_roots(&d, None).is_err());
}

#[test]
fn null_roots() {
    for (a, b, c) in [(2, 2, 2), (1, 3, 3), (1, 2, 5)] {
        let d = Diagram::y(a, b, c).unwrap();
        let dl = delta(&d).unwrap();
        let a_rows = cartan_from_edges(d.n(), &y_edges(a, b, c));
        for row in &a_rows {
            assert_eq!(row.iter().zip(dl.coeffs()).map(|(x, y)| x * y).sum::<i64>(), 0);
        }
        assert!(dl.coeffs().contains(&1));
    }
    assert!(delta(&e8()).is_err());
}

#[test]
fn basis_sizes_and_independence() {
    for a in 1..=4 {
        for b in a..=4 {
            for c in b..=4 {
                let d = Diagram::y(a, b, c).unwrap();
                let basis = CanonicalBasis::new(&d).unwrap();
                let n = d.n();
                assert_eq!(basis.len(), binomial(n + 1, 2) - 1, "Y({a},{b},{c})");
                for e in basis.elements() {
                    assert_eq!(e.tworoot.m_functional(&d), 0);
                    assert_eq!(bform(&d, &Root::simple(n, e.vertex), &e.partner).unwrap(), 0);
                    assert_eq!(bform(&d, &e.partner, &e.partner).unwrap(), 2);
                }
                let rows: Vec<Vec<Rational>> = basis
                    .elements()
                    .iter()
                    .map(|e| e.tworoot.to_rational().standard_coords())
                    .collect();
                assert_eq!(Matrix::from_rows(rows).rank(), basis.len());
                let keys: HashSet<&[i64]> = basis.elements().iter().map(|e| e.tworoot.key()).collect();
                assert_eq!(keys.len(), basis.len());
            }
        }
    }
}

#[test]
fn d4_basis_is_the_explicit_nine() {
    // Branch 0, leaves 1, 2, 3.
    let d = Diagram::y(1, 1, 1).unwrap();
    let basis = CanonicalBasis::new(&d).unwrap();
    let theta = Root(vec![2, 1, 1, 1]);
    let s = |i| Root::simple(4, i);
    let eta = |i, j| Root::sum_of(4, &[0, i, j]);
    let want: BTreeSet<Vec<i64>> = [
        (s(1), theta.clone()),
        (s(2), theta.clone()),
        (s(3), theta.clone()),
        (s(0), eta(1, 2)),
        (s(0), eta(1, 3)),
        (s(0), eta(2, 3)),
        (s(1), s(2)),
        (s(1), s(3)),
        (s(2), s(3)),
    ]
    .iter()
    .map(|(x, y)| SymSquare::of_roots(x, y).unwrap().key().to_vec())
    .collect();
    let got: BTreeSet<Vec<i64>> = basis.elements().iter().map(|e| e.tworoot.key().to_vec()).collect();
    assert_eq!(got, want);
}

#[test]
fn path_basis_spans_the_tworoot_lattice() {
    for n in 3..=7 {
        let d = Diagram::path(n).unwrap();
        let basis = CanonicalBasis::new(&d).unwrap();
        assert_eq!(basis.len(), (n + 1) * (n - 2) / 2);
        for p in orthogonal_positive_pairs(&d).unwrap() {
            let coords = basis.expand_integral(&p.tworoot()).unwrap();
            assert!(coords.iter().all(|&c| c >= 0));
        }
    }
}

#[test]
fn components_recover_roots() {
    let d = e6();
    for p in orthogonal_positive_pairs(&d).unwrap() {
        let t = p.tworoot();
        let (a, b) = components(&t).unwrap();
        assert_eq!(RootPair::normalized(a, b), p);
        // −(α ∨ β) = (−α) ∨ β has components of opposite sign.
        let (a, b) = components(&t.neg()).unwrap();
        assert_ne!(a.is_positive(), b.is_positive());
        assert_eq!(SymSquare::of_roots(&a, &b).unwrap(), t.neg());
    }
}

#[test]
fn orbit_counts_and_sizes() {
    let mut cases: Vec<(Diagram, usize)> = vec![(d(4), 3)];
    cases.extend((5..=8).map(|n| (d(n), 2)));
    cases.extend((4..=8).map(|n| (Diagram::path(n).unwrap(), 1)));
    cases.extend([(e6(), 1), (e7(), 1), (e8(), 1)]);
    for (d, count) in cases {
        let (basis, _) = setup(&d);
        let orbits = enumerate_orbits(&basis).unwrap();
        assert_eq!(orbits.len(), count, "{d}");
        let total: usize = orbits.iter().map(|o| o.size()).sum();
        assert_eq!(total, orthogonal_pair_count(&d.cartan().matrix().to_rows()), "{d}");
        let members: usize = orbits.iter().map(|o| o.basis_members.len()).sum();
        assert_eq!(members, basis.len());
    }
}

#[test]
fn e8_pair_count() {
    // 120 positive roots, each orthogonal to 63 others.
    let pairs = orthogonal_positive_pairs(&e8()).unwrap();
    assert_eq!(pairs.len(), 120 * 63 / 2);
}

#[test]
fn small_orbit_in_epsilon_form() {
    for n in 5..=8 {
        let d = d(n);
        let (basis, _) = setup(&d);
        let orbits = enumerate_orbits(&basis).unwrap();
        let want: BTreeSet<RootPair> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let a = root_from_epsilon(&d, &EpsilonRoot::minus(i, j)).unwrap();
                let b = root_from_epsilon(&d, &EpsilonRoot::plus(i, j)).unwrap();
                RootPair::new(&d, &a, &b).unwrap()
            })
            .collect();
        assert_eq!(want.len(), binomial(n, 2));
        let small = orbits.iter().find(|o| o.members.iter().any(|p| want.contains(p))).unwrap();
        let got: BTreeSet<RootPair> = small.members.iter().cloned().collect();
        assert_eq!(got, want, "D{n}");
        assert_eq!(small.basis_members.len(), n - 1);
    }
}

#[test]
fn epsilon_round_trip() {
    for d in [d(4), d(6), Diagram::path(5).unwrap()] {
        for r in positive_roots(&d, None).unwrap() {
            let e = epsilon_coords(&d, &r).unwrap();
            assert!(!e.negative);
            assert_eq!(root_from_epsilon(&d, &e).unwrap(), r);
        }
    }
}

#[test]
fn hgraph_components() {
    for a in 1..=6 {
        for b in a..=6 {
            for c in b..=6 {
                let want = match (a, b, c) {
                    (1, 1, 1) => 3,
                    (1, 1, _) => 2,
                    _ => 1,
                };
                assert_eq!(HGraph::for_arms(a, b, c).component_count(), want, "({a},{b},{c})");
            }
        }
    }
}

/// Classes of basis elements joined by the relation `s(b) = b + b'`.
fn linked_classes(basis: &CanonicalBasis) -> usize {
    let (_, action) = setup(basis.diagram());
    let k = basis.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..action.rank() {
        for b in 0..k {
            if let ActionCase::Add(t) = action.case(i, b) {
                let (x, y) = (find(&mut parent, b), find(&mut parent, t));
                parent[x] = y;
            }
        }
    }
    (0..k).filter(|&x| find(&mut parent, x) == x).count()
}

#[test]
fn linked_basis_classes_match_hgraph_components() {
    for a in 1..=3 {
        for b in a..=4 {
            for c in b..=5 {
                let basis = CanonicalBasis::new(&Diagram::y(a, b, c).unwrap()).unwrap();
                let want = HGraph::for_arms(a, b, c).component_count();
                assert_eq!(linked_classes(&basis), want, "Y({a},{b},{c})");
            }
        }
    }
}
