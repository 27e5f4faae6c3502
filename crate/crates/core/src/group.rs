//! Finite matrix groups generated by the restricted action, and the kernels
//! of the orbit representations.

use std::collections::{HashSet, VecDeque};

use crate::action::{ActionCase, BasisAction};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// The generators restricted to the span of the basis elements `indices`,
/// which must be invariant.
pub fn restrict_generators(action: &BasisAction, indices: &[usize]) -> Result<Vec<Matrix<i64>>> {
    let pos = |k: usize| indices.iter().position(|&j| j == k);
    let m = indices.len();
    (0..action.rank())
        .map(|i| {
            let mut g = Matrix::zeros(m, m);
            for (c, &k) in indices.iter().enumerate() {
                match action.case(i, k) {
                    ActionCase::Fix => g[(c, c)] = 1,
                    ActionCase::Negate => g[(c, c)] = -1,
                    ActionCase::Add(t) => {
                        let r = pos(t).ok_or_else(|| {
                            Error::InvalidRestriction(format!("span is not invariant under s{i}"))
                        })?;
                        g[(c, c)] = 1;
                        g[(r, c)] += 1;
                    }
                }
            }
            Ok(g)
        })
        .collect()
}

fn key(m: &Matrix<i64>) -> Result<Box<[i16]>> {
    m.data()
        .iter()
        .map(|&v| i16::try_from(v).map_err(|_| Error::Unsupported(format!("entry {v} exceeds i16"))))
        .collect()
}

/// Order of the group generated by `gens`, by breadth-first closure. Fails
/// once more than `cap` elements have been found.
pub fn group_order(gens: &[Matrix<i64>], cap: usize) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Ok(1);
    };
    let id = Matrix::identity(first.rows());
    let mut seen: HashSet<Box<[i16]>> = HashSet::new();
    seen.insert(key(&id)?);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let next = g.mul(&m);
            if seen.insert(key(&next)?) {
                if seen.len() > cap {
                    return Err(Error::StateCapExceeded(cap));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// `|ker|` of a group of order `group_order` acting on the span of
/// `indices`, as `group_order / |image|`.
pub fn action_kernel_order(action: &BasisAction, indices: &[usize], group_order: u64, cap: usize) -> Result<u64> {
    let image = group_order_of(action, indices, cap)? as u64;
    if !group_order.is_multiple_of(image) {
        return Err(Error::Unsupported(format!(
            "image order {image} does not divide {group_order}"
        )));
    }
    Ok(group_order / image)
}

/// Order of the image of the action on the span of `indices`.
pub fn group_order_of(action: &BasisAction, indices: &[usize], cap: usize) -> Result<usize> {
    group_order(&restrict_generators(action, indices)?, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::CanonicalBasis;
    use crate::diagram::Diagram;
    use crate::orbits::enumerate_orbits;

    #[test]
    fn symmetric_group_orders() {
        let d = Diagram::path(3).unwrap();
        let basis = CanonicalBasis::new(&d).unwrap();
        let action = BasisAction::new(&basis).unwrap();
        let all: Vec<usize> = (0..basis.len()).collect();
        // S4 acts on the 2-dimensional lattice through S3.
        assert_eq!(action_kernel_order(&action, &all, 24, DEFAULT_STATE_CAP).unwrap(), 4);
    }

    #[test]
    fn d4_orbit_kernels() {
        let d = Diagram::y(1, 1, 1).unwrap();
        let basis = CanonicalBasis::new(&d).unwrap();
        let action = BasisAction::new(&basis).unwrap();
        for o in enumerate_orbits(&basis).unwrap() {
            assert_eq!(action_kernel_order(&action, &o.basis_members, 192, DEFAULT_STATE_CAP).unwrap(), 8);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = Diagram::y(1, 2, 2).unwrap();
        let basis = CanonicalBasis::new(&d).unwrap();
        let action = BasisAction::new(&basis).unwrap();
        let all: Vec<usize> = (0..basis.len()).collect();
        assert_eq!(group_order(&restrict_generators(&action, &all).unwrap(), 100), Err(Error::StateCapExceeded(100)));
    }
}
