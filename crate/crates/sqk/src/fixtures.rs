//! Standard symmetric quandles and cocycles from the literature, used by the
//! reproduction suite, the CLI and the tests.
//!
//! Each constructor returns the symmetric quandle, the action it pairs with,
//! and a verified cocycle. Indicator conventions: `chi(t)` contributes 1 on
//! the tuple `t` and 0 elsewhere.

use crate::chain::Tuple;
use crate::cocycle::{CoefficientGroup, Cocycle};
use crate::group::XSetAction;
use crate::homology::ComplexVariant;
use crate::quandle::{FiniteQuandle, Involution, SymmetricQuandle};
use num_bigint::BigInt;

fn chi(entries: &mut Vec<(Tuple, BigInt)>, y: usize, xs: &[usize], v: i64) {
    entries.push((Tuple::new(y, xs.to_vec()), BigInt::from(v)));
}

/// Dihedral quandle of order 3 with the identity involution, acting on
/// itself, and the mod-3 two-cocycle `theta(y, x1, x2) = (y - x1)(x1 - x2)^2 x2`
/// (Mochizuki's cocycle adapted to the symmetric conditions). Detects
/// chirality of three-colorable knots.
pub fn mochizuki_mod3() -> (SymmetricQuandle, XSetAction, Cocycle) {
    let sq = SymmetricQuandle::new(FiniteQuandle::dihedral(3), Involution::identity(3))
        .expect("identity on a kei is good");
    let act = XSetAction::quandle_action(&sq);
    let mut entries = Vec::new();
    for y in 0..3i64 {
        for x1 in 0..3i64 {
            for x2 in 0..3i64 {
                let v = (y - x1) * (x1 - x2) * (x1 - x2) * x2;
                chi(&mut entries, y as usize, &[x1 as usize, x2 as usize], v);
            }
        }
    }
    let theta = Cocycle::verified(
        2,
        CoefficientGroup::IntegersMod(3),
        ComplexVariant::QRho,
        entries,
        &sq,
        &act,
        100_000,
    )
    .expect("the adapted Mochizuki map is a 2-cocycle");
    (sq, act, theta)
}

/// Trivial quandle of order 4 (elements `e1, e'1, e2, e'2` as indices
/// `0, 1, 2, 3`) with the pairing involution, one-point action, and the
/// integral 2-cocycle that reads off linking numbers of 2-component links.
pub fn linking_2cocycle_t4() -> (SymmetricQuandle, XSetAction, Cocycle) {
    let sq = SymmetricQuandle::new(
        FiniteQuandle::trivial(4),
        Involution::new(vec![1, 0, 3, 2]).expect("pairing is an involution"),
    )
    .expect("every involution of a trivial quandle is good");
    let act = XSetAction::singleton(&sq);
    let (e1, e1p, e2, e2p) = (0, 1, 2, 3);
    let mut entries = Vec::new();
    chi(&mut entries, 0, &[e1, e2], 1);
    chi(&mut entries, 0, &[e1p, e2p], 1);
    chi(&mut entries, 0, &[e1p, e2], -1);
    chi(&mut entries, 0, &[e1, e2p], -1);
    let theta = Cocycle::verified(
        2,
        CoefficientGroup::Integers,
        ComplexVariant::QRho,
        entries,
        &sq,
        &act,
        100_000,
    )
    .expect("the linking cochain is a 2-cocycle");
    (sq, act, theta)
}

/// Labels used by [`linking_2cocycle_t4`].
pub const T4_LABELS: [&str; 4] = ["e1", "e'1", "e2", "e'2"];

/// Trivial quandle of order 6 (elements `e1, e'1, e2, e'2, e3, e'3`) with the
/// pairing involution, one-point action, and the integral 3-cocycle carrying
/// triple linking information of surface-links.
pub fn triple_linking_3cocycle_t6() -> (SymmetricQuandle, XSetAction, Cocycle) {
    let sq = SymmetricQuandle::new(
        FiniteQuandle::trivial(6),
        Involution::new(vec![1, 0, 3, 2, 5, 4]).expect("pairing is an involution"),
    )
    .expect("every involution of a trivial quandle is good");
    let act = XSetAction::singleton(&sq);
    let (e1, e1p, e2, e2p, e3, e3p) = (0, 1, 2, 3, 4, 5);
    let mut entries = Vec::new();
    chi(&mut entries, 0, &[e1, e2, e3], 1);
    chi(&mut entries, 0, &[e1p, e2p, e3], 1);
    chi(&mut entries, 0, &[e1p, e2, e3p], 1);
    chi(&mut entries, 0, &[e1, e2p, e3p], 1);
    chi(&mut entries, 0, &[e1p, e2, e3], -1);
    chi(&mut entries, 0, &[e1, e2p, e3], -1);
    chi(&mut entries, 0, &[e1, e2, e3p], -1);
    chi(&mut entries, 0, &[e1p, e2p, e3p], -1);
    let theta = Cocycle::verified(
        3,
        CoefficientGroup::Integers,
        ComplexVariant::QRho,
        entries,
        &sq,
        &act,
        100_000,
    )
    .expect("the triple linking cochain is a 3-cocycle");
    (sq, act, theta)
}

/// Labels used by [`triple_linking_3cocycle_t6`].
pub const T6_LABELS: [&str; 6] = ["e1", "e'1", "e2", "e'2", "e3", "e'3"];

/// Trivial quandle of order 2 with the identity involution, one-point
/// action, and the mod-2 3-cocycle `chi(e, e1, e2, e1)` carrying mod-2
/// triple linking information.
pub fn mod2_triple_linking_3cocycle_t2() -> (SymmetricQuandle, XSetAction, Cocycle) {
    let sq = SymmetricQuandle::new(FiniteQuandle::trivial(2), Involution::identity(2))
        .expect("identity is good on a trivial quandle");
    let act = XSetAction::singleton(&sq);
    let mut entries = Vec::new();
    chi(&mut entries, 0, &[0, 1, 0], 1);
    let theta = Cocycle::verified(
        3,
        CoefficientGroup::IntegersMod(2),
        ComplexVariant::QRho,
        entries,
        &sq,
        &act,
        100_000,
    )
    .expect("the mod-2 triple linking cochain is a 3-cocycle");
    (sq, act, theta)
}

/// Labels used by [`mod2_triple_linking_3cocycle_t2`].
pub const T2_LABELS: [&str; 2] = ["e1", "e2"];

/// Dihedral quandle of order 4 (elements `0,1,2,3` labeled `e1, e2, e'1,
/// e'2`) with the antipodal involution, one-point action, and a sixteen
/// term integral 3-cocycle taking values in `{-1, 0, 1}`. It is supported on
/// the parity-alternating triples (outer entries of one parity, middle entry
/// of the other) with sign `+1` exactly when the outer entries are equal and
/// even, or distinct and odd. The integral 3-cocycle space here is spanned
/// by the even-outer and odd-outer halves; this combination is pinned by
/// `theta(e, e1, e2, e1) = 1` and `theta(e, e2, e1, e2) = -1`, which drive
/// the triple-point bounds.
pub fn dihedral4_3cocycle() -> (SymmetricQuandle, XSetAction, Cocycle) {
    let sq = SymmetricQuandle::new(FiniteQuandle::dihedral(4), Involution::antipodal(4))
        .expect("the antipodal map is good on R_4");
    let act = XSetAction::singleton(&sq);
    let (e1, e2, e1p, e2p) = (0, 1, 2, 3);
    let mut entries = Vec::new();
    chi(&mut entries, 0, &[e1, e2, e1], 1);
    chi(&mut entries, 0, &[e1p, e2p, e1], -1);
    chi(&mut entries, 0, &[e1p, e2, e1p], 1);
    chi(&mut entries, 0, &[e1, e2p, e1p], -1);
    chi(&mut entries, 0, &[e1p, e2, e1], -1);
    chi(&mut entries, 0, &[e1, e2p, e1], 1);
    chi(&mut entries, 0, &[e1, e2, e1p], -1);
    chi(&mut entries, 0, &[e1p, e2p, e1p], 1);
    chi(&mut entries, 0, &[e2, e1, e2], -1);
    chi(&mut entries, 0, &[e2p, e1p, e2], 1);
    chi(&mut entries, 0, &[e2p, e1, e2p], -1);
    chi(&mut entries, 0, &[e2, e1p, e2p], 1);
    chi(&mut entries, 0, &[e2p, e1, e2], 1);
    chi(&mut entries, 0, &[e2, e1p, e2], -1);
    chi(&mut entries, 0, &[e2, e1, e2p], 1);
    chi(&mut entries, 0, &[e2p, e1p, e2p], -1);
    let theta = Cocycle::verified(
        3,
        CoefficientGroup::Integers,
        ComplexVariant::QRho,
        entries,
        &sq,
        &act,
        100_000,
    )
    .expect("the sixteen term cochain is a 3-cocycle");
    (sq, act, theta)
}

/// Labels used by [`dihedral4_3cocycle`]: `R_4` elements `0,1,2,3` are named
/// `e1, e2, e'1, e'2` so the antipodal map pairs `e_i` with `e'_i`.
pub const R4_LABELS: [&str; 4] = ["e1", "e2", "e'1", "e'2"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bundled_cocycles_verify() {
        mochizuki_mod3();
        linking_2cocycle_t4();
        triple_linking_3cocycle_t6();
        mod2_triple_linking_3cocycle_t2();
        dihedral4_3cocycle();
    }

    #[test]
    fn dihedral4_cocycle_pinning_values() {
        use crate::chain::Chain;
        let (_sq, _act, theta) = dihedral4_3cocycle();
        let plus = Chain::unit(Tuple::new(0, vec![0, 1, 0])); // (e, e1, e2, e1)
        let minus = Chain::unit(Tuple::new(0, vec![1, 0, 1])); // (e, e2, e1, e2)
        assert_eq!(theta.evaluate(&plus).unwrap(), BigInt::from(1));
        assert_eq!(theta.evaluate(&minus).unwrap(), BigInt::from(-1));
        assert_eq!(theta.evaluate(&Chain::zero(3)).unwrap(), BigInt::from(0));
    }

    #[test]
    fn mutated_cocycles_are_rejected() {
        use num_traits::One;
        let cases: Vec<(SymmetricQuandle, XSetAction, Cocycle)> = vec![
            mochizuki_mod3(),
            linking_2cocycle_t4(),
            triple_linking_3cocycle_t6(),
            mod2_triple_linking_3cocycle_t2(),
            dihedral4_3cocycle(),
        ];
        for (sq, act, theta) in cases {
            // seat a value on a degenerate tuple: breaks the adjacent-repeat
            // condition in every coefficient group
            let mut entries: Vec<(Tuple, BigInt)> =
                theta.entries().map(|(t, v)| (t.clone(), v.clone())).collect();
            entries.push((
                Tuple::new(0, vec![0; theta.degree()]),
                BigInt::one(),
            ));
            let mutated = Cocycle::new(
                theta.degree(),
                theta.coefficient_group(),
                theta.variant(),
                entries,
            )
            .unwrap();
            assert!(
                mutated.check(&sq, &act, 100_000).is_err(),
                "degenerate-entry mutation of a {}-cocycle over order {} went undetected",
                theta.degree(),
                sq.order()
            );

            // bump an existing entry by one, unless that zeroes the whole
            // table (the mod-2 single-term cochain turns into the zero
            // cocycle, which is legitimately valid)
            let mut entries: Vec<(Tuple, BigInt)> =
                theta.entries().map(|(t, v)| (t.clone(), v.clone())).collect();
            entries[0].1 += BigInt::one();
            let mutated = Cocycle::new(
                theta.degree(),
                theta.coefficient_group(),
                theta.variant(),
                entries,
            )
            .unwrap();
            if mutated.entries().count() > 0 {
                assert!(
                    mutated.check(&sq, &act, 100_000).is_err(),
                    "entry bump of a {}-cocycle over order {} went undetected",
                    theta.degree(),
                    sq.order()
                );
            }
        }
    }
}
