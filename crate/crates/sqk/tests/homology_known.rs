//! Homology of small quandles against independently known values.

use num_bigint::BigInt;
use sqk::cocycle::CoefficientGroup;
use sqk::group::XSetAction;
use sqk::homology::{homology, ComplexVariant};
use sqk::quandle::{FiniteQuandle, Involution, SymmetricQuandle};

fn descriptor(
    sq: &SymmetricQuandle,
    act: &XSetAction,
    variant: ComplexVariant,
    n: usize,
) -> (usize, Vec<BigInt>) {
    let h = homology(sq, act, variant, n, CoefficientGroup::Integers, 200_000)
        .unwrap()
        .result;
    (h.group.rank, h.group.torsion)
}

#[test]
fn dihedral_three_low_degrees() {
    let sq = SymmetricQuandle::new(FiniteQuandle::dihedral(3), Involution::identity(3)).unwrap();
    let act = XSetAction::singleton(&sq);
    // one orbit in degree one
    assert_eq!(descriptor(&sq, &act, ComplexVariant::Q, 1), (1, vec![]));
    // trivial second quandle homology
    assert_eq!(descriptor(&sq, &act, ComplexVariant::Q, 2), (0, vec![]));
    // the classical 3-torsion in degree three
    assert_eq!(
        descriptor(&sq, &act, ComplexVariant::Q, 3),
        (0, vec![BigInt::from(3)])
    );
    // rack homology picks up one extra free summand in degree two
    assert_eq!(descriptor(&sq, &act, ComplexVariant::R, 2), (1, vec![]));
}

#[test]
fn dihedral_five_has_five_torsion_in_degree_three() {
    let sq = SymmetricQuandle::new(FiniteQuandle::dihedral(5), Involution::identity(5)).unwrap();
    let act = XSetAction::singleton(&sq);
    assert_eq!(
        descriptor(&sq, &act, ComplexVariant::Q, 3),
        (0, vec![BigInt::from(5)])
    );
}

#[test]
fn trivial_quandle_rack_homology_is_free_of_rank_two_to_the_n() {
    let sq = SymmetricQuandle::new(FiniteQuandle::trivial(2), Involution::identity(2)).unwrap();
    let act = XSetAction::singleton(&sq);
    for n in 1..=3usize {
        assert_eq!(
            descriptor(&sq, &act, ComplexVariant::R, n),
            (1 << n, vec![])
        );
    }
}

#[test]
fn symmetric_quandle_homology_shrinks_the_rack_answer() {
    // the swap on T_2 kills half of each rack group
    let sq = SymmetricQuandle::new(
        FiniteQuandle::trivial(2),
        Involution::new(vec![1, 0]).unwrap(),
    )
    .unwrap();
    let act = XSetAction::singleton(&sq);
    let (rank_r, _) = descriptor(&sq, &act, ComplexVariant::R, 2);
    let (rank_rrho, tors) = descriptor(&sq, &act, ComplexVariant::RRho, 2);
    assert_eq!(rank_r, 4);
    assert!(rank_rrho < rank_r, "quotient must be smaller, got {rank_rrho} ({tors:?})");
}
