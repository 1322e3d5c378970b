//! Chain-level surface-link data: colored triple points, cycle checking,
//! cocycle evaluation and triple-point bounds.
//!
//! Surface-link diagrams enter as lists of signed triple-point weights
//! `(y, x1, x2, x3)`, one block per coloring. The integrity gate is the
//! 3-cycle check: the boundary of each block must land in the degree-2
//! degenerate subgroup of the symmetric quandle complex. Evaluating a
//! 3-cocycle per block gives the invariant multiset, and an integer cocycle
//! bounded by one in absolute value turns the largest evaluation into a
//! lower bound for the number of triple points any diagram of the
//! surface-link must carry.

use crate::chain::{boundary, chain_in_subgroup, Chain, Tuple};
use crate::cocycle::{CoefficientGroup, Cocycle};
use crate::error::{Error, Result};
use crate::group::XSetAction;
use crate::homology::{degenerate_generators, ComplexVariant};
use crate::invariant::InvariantMultiset;
use crate::quandle::SymmetricQuandle;
use num_bigint::BigInt;
use num_traits::Signed;

/// One signed triple-point weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTerm {
    pub sign: i8,
    pub tuple: Tuple,
}

impl WeightTerm {
    pub fn new(sign: i8, y: usize, xs: [usize; 3]) -> Self {
        WeightTerm {
            sign,
            tuple: Tuple::new(y, xs.to_vec()),
        }
    }
}

/// The weights of one coloring of a surface-link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceColoring {
    pub id: String,
    pub terms: Vec<WeightTerm>,
}

impl SurfaceColoring {
    pub fn chain(&self) -> Chain {
        Chain::from_terms(
            3,
            self.terms
                .iter()
                .map(|t| (t.tuple.clone(), BigInt::from(t.sign))),
        )
    }
}

/// Colored triple-point data: one or more coloring blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredTriplePointData {
    pub colorings: Vec<SurfaceColoring>,
}

impl ColoredTriplePointData {
    pub fn validate_ranges(&self, sq: &SymmetricQuandle, act: &XSetAction) -> Result<()> {
        for block in &self.colorings {
            for t in &block.terms {
                if t.sign != 1 && t.sign != -1 {
                    return Err(Error::Invalid(format!(
                        "weight sign must be +1 or -1, got {}",
                        t.sign
                    )));
                }
                if t.tuple.y >= act.y_size() {
                    return Err(Error::EntryOutOfRange {
                        value: t.tuple.y,
                        n: act.y_size(),
                    });
                }
                for &x in &t.tuple.xs {
                    if x >= sq.order() {
                        return Err(Error::EntryOutOfRange {
                            value: x,
                            n: sq.order(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Checks that every coloring block is a 3-cycle of the symmetric quandle
/// complex: its boundary must be an integer combination of the degree-2
/// degenerate generators.
pub fn check_surface_cycle(
    data: &ColoredTriplePointData,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    cap: usize,
) -> Result<()> {
    data.validate_ranges(sq, act)?;
    let gens = degenerate_generators(sq, act, ComplexVariant::QRho, 2, cap)?;
    for block in &data.colorings {
        let b = boundary(sq, act, &block.chain());
        if !chain_in_subgroup(&b, &gens) {
            return Err(Error::NotACycle {
                id: block.id.clone(),
                residual: b.to_string(),
            });
        }
    }
    Ok(())
}

fn require_surface_cocycle(theta: &Cocycle) -> Result<()> {
    if theta.degree() != 3 {
        return Err(Error::DegreeMismatch {
            expected: 3,
            got: theta.degree(),
        });
    }
    if theta.variant() != ComplexVariant::QRho {
        return Err(Error::Invalid(format!(
            "surface invariants need a Qrho cocycle, got variant {}",
            theta.variant()
        )));
    }
    Ok(())
}

/// Evaluates a degree-3 cocycle on every coloring block, after the cycle
/// check passes.
pub fn phi_surface(
    data: &ColoredTriplePointData,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    theta: &Cocycle,
    cap: usize,
) -> Result<InvariantMultiset> {
    require_surface_cocycle(theta)?;
    check_surface_cycle(data, sq, act, cap)?;
    let mut values = Vec::with_capacity(data.colorings.len());
    for block in &data.colorings {
        values.push(theta.evaluate(&block.chain())?);
    }
    Ok(InvariantMultiset::from_values(values))
}

/// Lower bound for the minimal triple point number: the largest absolute
/// evaluation over the coloring blocks. Requires an integer-valued cocycle
/// with every entry bounded by one in absolute value.
pub fn triple_point_bound(
    theta: &Cocycle,
    data: &ColoredTriplePointData,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    cap: usize,
) -> Result<BigInt> {
    require_surface_cocycle(theta)?;
    if theta.coefficient_group() != CoefficientGroup::Integers {
        return Err(Error::Invalid(
            "triple point bounds need integer cocycle values".into(),
        ));
    }
    for (t, v) in theta.entries() {
        if v.abs() > BigInt::from(1) {
            return Err(Error::BoundPreconditionViolated {
                tuple: t.clone(),
                value: v.to_string(),
            });
        }
    }
    check_surface_cycle(data, sq, act, cap)?;
    let mut best = BigInt::from(0);
    for block in &data.colorings {
        let v = theta.evaluate(&block.chain())?.abs();
        if v > best {
            best = v;
        }
    }
    Ok(best)
}

/// The stacked-annulus family of chains: for a coloring of the `n`-fold
/// stack by a pair of colors `(x, y)`, the triple points contribute
/// `n (e, x, y, x) - n (e, y, x, y)`, listed as `2n` unit weight terms in
/// one coloring block.
pub fn fn_chain(n: usize, x: usize, y: usize) -> ColoredTriplePointData {
    assert!(n >= 1, "the stack height is positive");
    let mut terms = Vec::with_capacity(2 * n);
    for _ in 0..n {
        terms.push(WeightTerm::new(1, 0, [x, y, x]));
    }
    for _ in 0..n {
        terms.push(WeightTerm::new(-1, 0, [y, x, y]));
    }
    ColoredTriplePointData {
        colorings: vec![SurfaceColoring {
            id: format!("stack{n}"),
            terms,
        }],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fn_chains_are_cycles_and_evaluate_to_twice_the_height() {
        let (sq, act, theta) = fixtures::dihedral4_3cocycle();
        for n in 1..=3 {
            let data = fn_chain(n, 0, 1); // (x, y) = (e1, e2)
            check_surface_cycle(&data, &sq, &act, 100_000).unwrap();
            let phi = phi_surface(&data, &sq, &act, &theta, 100_000).unwrap();
            assert_eq!(phi.entries(), &[(BigInt::from(2 * n as i64), 1)]);
            let bound = triple_point_bound(&theta, &data, &sq, &act, 100_000).unwrap();
            assert_eq!(bound, BigInt::from(2 * n as i64));
        }
    }

    #[test]
    fn degenerate_color_choice_evaluates_to_zero() {
        let (sq, act, theta) = fixtures::dihedral4_3cocycle();
        let data = fn_chain(2, 0, 0);
        let phi = phi_surface(&data, &sq, &act, &theta, 100_000).unwrap();
        assert_eq!(phi.entries(), &[(BigInt::from(0), 1)]);
    }

    #[test]
    fn single_tuple_over_trivial_quandle_is_a_cycle() {
        let (sq, act, theta) = fixtures::triple_linking_3cocycle_t6();
        let data = ColoredTriplePointData {
            colorings: vec![SurfaceColoring {
                id: "one".into(),
                terms: vec![WeightTerm::new(1, 0, [0, 2, 4])],
            }],
        };
        check_surface_cycle(&data, &sq, &act, 100_000).unwrap();
        let phi = phi_surface(&data, &sq, &act, &theta, 100_000).unwrap();
        assert_eq!(phi.entries(), &[(BigInt::from(1), 1)]);
    }

    #[test]
    fn corrupted_chain_is_not_a_cycle() {
        // over (R_3, id) with a one-point action the quotient boundary is
        // nonzero, so a stray single weight is caught
        use crate::quandle::{FiniteQuandle, Involution, SymmetricQuandle};
        let sq =
            SymmetricQuandle::new(FiniteQuandle::dihedral(3), Involution::identity(3)).unwrap();
        let act = crate::group::XSetAction::singleton(&sq);
        let data = ColoredTriplePointData {
            colorings: vec![SurfaceColoring {
                id: "stray".into(),
                terms: vec![WeightTerm::new(1, 0, [0, 1, 0])],
            }],
        };
        let err = check_surface_cycle(&data, &sq, &act, 100_000).unwrap_err();
        assert!(matches!(err, Error::NotACycle { .. }));
    }

    #[test]
    fn sign_corruption_over_r4_still_passes_the_gate() {
        // the quotient boundary from degree 3 vanishes identically for
        // (R_4, antipodal) with a one-point action, so no corruption of the
        // stacked-annulus chain can be caught there; the gate is only
        // discriminating over quandles like R_3 (previous test)
        let (sq, act, _) = fixtures::dihedral4_3cocycle();
        let mut data = fn_chain(2, 0, 1);
        data.colorings[0].terms[0].sign = -1;
        assert!(check_surface_cycle(&data, &sq, &act, 100_000).is_ok());
    }

    #[test]
    fn mod2_cocycle_evaluates_on_its_support() {
        let (sq, act, theta) = fixtures::mod2_triple_linking_3cocycle_t2();
        let data = ColoredTriplePointData {
            colorings: vec![SurfaceColoring {
                id: "support".into(),
                terms: vec![WeightTerm::new(1, 0, [0, 1, 0])],
            }],
        };
        let phi = phi_surface(&data, &sq, &act, &theta, 100_000).unwrap();
        assert_eq!(phi.entries(), &[(BigInt::from(1), 1)]);
        // bounds require integer coefficients
        assert!(triple_point_bound(&theta, &data, &sq, &act, 100_000).is_err());
    }

    #[test]
    fn scaled_cocycles_violate_the_bound_precondition() {
        let (sq, act, theta) = fixtures::dihedral4_3cocycle();
        let doubled = Cocycle::new(
            3,
            theta.coefficient_group(),
            theta.variant(),
            theta
                .entries()
                .map(|(t, v)| (t.clone(), v * BigInt::from(2))),
        )
        .unwrap();
        let data = fn_chain(1, 0, 1);
        let err = triple_point_bound(&doubled, &data, &sq, &act, 100_000).unwrap_err();
        assert!(matches!(err, Error::BoundPreconditionViolated { .. }));
    }

    #[test]
    fn zero_chain_evaluates_to_zero() {
        let (sq, act, theta) = fixtures::dihedral4_3cocycle();
        let data = ColoredTriplePointData {
            colorings: vec![SurfaceColoring {
                id: "empty".into(),
                terms: vec![],
            }],
        };
        let phi = phi_surface(&data, &sq, &act, &theta, 100_000).unwrap();
        assert_eq!(phi.entries(), &[(BigInt::from(0), 1)]);
    }
}
