//! Orders of the finite Weyl groups, from the classical formulas.

use tworoots::{Diagram, FiniteType};

fn factorial(k: usize) -> Option<u64> {
    (1..=k as u64).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

/// `|W|`, or `None` for infinite types or overflow.
pub fn weyl_order(d: &Diagram) -> Option<u64> {
    match d.finite_type()? {
        FiniteType::A(n) => factorial(n + 1),
        FiniteType::D(n) => factorial(n)?.checked_mul(1u64 << (n - 1)),
        FiniteType::E(6) => Some(51_840),
        FiniteType::E(7) => Some(2_903_040),
        FiniteType::E(8) => Some(696_729_600),
        FiniteType::E(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(weyl_order(&Diagram::path(3).unwrap()), Some(24));
        assert_eq!(weyl_order(&Diagram::y(1, 1, 1).unwrap()), Some(192));
        assert_eq!(weyl_order(&Diagram::y(1, 1, 2).unwrap()), Some(1920));
        assert_eq!(weyl_order(&Diagram::y(2, 2, 2).unwrap()), None);
    }
}
