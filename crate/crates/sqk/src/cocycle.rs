//! Cocycles of the quotient cochain complexes, their verification and
//! evaluation against chains.
//!
//! A degree-`n` cocycle is a map from basis tuples to a coefficient group
//! (the integers or integers mod m), stored sparsely: absent tuples map to
//! zero. Verification checks that the map kills the image of the boundary
//! from degree `n+1` and vanishes on the degenerate generators demanded by
//! the chosen complex variant.

use crate::chain::{basis_tuples, boundary_tuple, Chain, Tuple};
use crate::error::{Error, Result};
use crate::group::XSetAction;
use crate::homology::ComplexVariant;
use crate::quandle::SymmetricQuandle;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Coefficient group for cocycle values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientGroup {
    Integers,
    /// Integers modulo `m`, `m >= 2`; values are least nonnegative residues.
    IntegersMod(u64),
}

impl CoefficientGroup {
    /// Canonical representative of a value in this group.
    pub fn normalize(&self, v: BigInt) -> BigInt {
        match self {
            CoefficientGroup::Integers => v,
            CoefficientGroup::IntegersMod(m) => v.mod_floor(&BigInt::from(*m)),
        }
    }

    pub fn is_zero(&self, v: &BigInt) -> bool {
        match self {
            CoefficientGroup::Integers => v.is_zero(),
            CoefficientGroup::IntegersMod(m) => v.mod_floor(&BigInt::from(*m)).is_zero(),
        }
    }
}

impl std::fmt::Display for CoefficientGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoefficientGroup::Integers => write!(f, "Z"),
            CoefficientGroup::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

/// A sparse cochain `theta`, intended to be a cocycle for `variant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    degree: usize,
    coeff: CoefficientGroup,
    variant: ComplexVariant,
    table: BTreeMap<Tuple, BigInt>,
}

impl Cocycle {
    /// Builds the cochain without checking the cocycle conditions; see
    /// [`Cocycle::verified`] for the checked constructor. Values are
    /// normalized and zeros dropped.
    pub fn new(
        degree: usize,
        coeff: CoefficientGroup,
        variant: ComplexVariant,
        entries: impl IntoIterator<Item = (Tuple, BigInt)>,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (t, v) in entries {
            if t.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: t.degree(),
                });
            }
            let v = coeff.normalize(v);
            if !v.is_zero() {
                let slot = table.entry(t).or_insert_with(BigInt::zero);
                *slot = coeff.normalize(&*slot + v);
            }
        }
        table.retain(|_, v| !v.is_zero());
        Ok(Cocycle {
            degree,
            coeff,
            variant,
            table,
        })
    }

    /// Checked constructor: builds the cochain and runs [`is_cocycle`].
    pub fn verified(
        degree: usize,
        coeff: CoefficientGroup,
        variant: ComplexVariant,
        entries: impl IntoIterator<Item = (Tuple, BigInt)>,
        sq: &SymmetricQuandle,
        act: &XSetAction,
        cap: usize,
    ) -> Result<Self> {
        let theta = Cocycle::new(degree, coeff, variant, entries)?;
        theta.check(sq, act, cap)?;
        Ok(theta)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient_group(&self) -> CoefficientGroup {
        self.coeff
    }

    pub fn variant(&self) -> ComplexVariant {
        self.variant
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Tuple, &BigInt)> {
        self.table.iter()
    }

    /// Value on a single tuple (zero when absent).
    pub fn value(&self, t: &Tuple) -> BigInt {
        self.table.get(t).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Linear pairing with a chain of the same degree.
    pub fn evaluate(&self, c: &Chain) -> Result<BigInt> {
        if c.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: c.degree(),
            });
        }
        let mut acc = BigInt::zero();
        for (t, coeff) in c.terms() {
            if let Some(v) = self.table.get(t) {
                acc += coeff * v;
            }
        }
        Ok(self.coeff.normalize(acc))
    }

    /// Verifies the cocycle conditions for this cochain's variant: the
    /// composition with the boundary vanishes on every basis tuple of degree
    /// `n+1`, and the cochain vanishes on the degenerate generators the
    /// variant quotients out. Returns the first failing tuple.
    pub fn check(&self, sq: &SymmetricQuandle, act: &XSetAction, cap: usize) -> Result<()> {
        let n = self.degree;
        for t in basis_tuples(act.y_size(), sq.order(), n + 1, cap)? {
            let b = boundary_tuple(sq, act, &t);
            let mut acc = BigInt::zero();
            for (u, coeff) in b.terms() {
                if let Some(v) = self.table.get(u) {
                    acc += coeff * v;
                }
            }
            if !self.coeff.is_zero(&acc) {
                return Err(Error::CocycleViolation {
                    condition: "coboundary condition".into(),
                    tuple: t,
                });
            }
        }
        if self.variant.kills_adjacent_repeats() && n >= 2 {
            for (t, _) in self.table.iter() {
                if t.has_adjacent_repeat() {
                    return Err(Error::CocycleViolation {
                        condition: "vanishing on adjacent repeats".into(),
                        tuple: t.clone(),
                    });
                }
            }
        }
        if self.variant.kills_rho_pairs() && n >= 1 {
            for t in basis_tuples(act.y_size(), sq.order(), n, cap)? {
                for i in 1..=n {
                    let s = t.twist(sq, act, i);
                    let sum = self.value(&t) + self.value(&s);
                    if !self.coeff.is_zero(&sum) {
                        return Err(Error::CocycleViolation {
                            condition: format!("rho condition at position {i}"),
                            tuple: t,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Convenience wrapper: true iff `theta` passes [`Cocycle::check`] when
/// reinterpreted for the given variant.
pub fn is_cocycle(
    sq: &SymmetricQuandle,
    act: &XSetAction,
    theta: &Cocycle,
    variant: ComplexVariant,
    cap: usize,
) -> Result<()> {
    let reinterpreted = Cocycle {
        degree: theta.degree,
        coeff: theta.coeff,
        variant,
        table: theta.table.clone(),
    };
    reinterpreted.check(sq, act, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn mochizuki_cocycle_passes_all_conditions() {
        let (sq, act, theta) = fixtures::mochizuki_mod3();
        assert!(theta.check(&sq, &act, 100_000).is_ok());
    }

    #[test]
    fn linking_cocycle_passes_and_single_term_fails() {
        let (sq, act, theta) = fixtures::linking_2cocycle_t4();
        assert!(theta.check(&sq, &act, 100_000).is_ok());

        // a single indicator term violates the rho condition
        let single = Cocycle::new(
            2,
            CoefficientGroup::Integers,
            ComplexVariant::QRho,
            vec![(Tuple::new(0, vec![0, 2]), BigInt::from(1))],
        )
        .unwrap();
        let err = single.check(&sq, &act, 100_000).unwrap_err();
        match err {
            Error::CocycleViolation { condition, .. } => {
                assert!(condition.starts_with("rho condition"));
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn evaluation_is_linear_and_degree_checked() {
        let (_sq, _act, theta) = fixtures::mochizuki_mod3();
        let c1 = Chain::unit(Tuple::new(0, vec![1, 2]));
        let c2 = Chain::unit(Tuple::new(2, vec![1, 2])).scale(&BigInt::from(5));
        let lhs = theta.evaluate(&c1.add(&c2)).unwrap();
        let rhs = theta
            .coefficient_group()
            .normalize(theta.evaluate(&c1).unwrap() + theta.evaluate(&c2).unwrap());
        assert_eq!(lhs, rhs);
        assert!(theta.evaluate(&Chain::zero(3)).is_err());
        assert_eq!(theta.evaluate(&Chain::zero(2)).unwrap(), BigInt::zero());
    }
}
