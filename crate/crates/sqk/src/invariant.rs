//! Weight cycles of colored diagrams and the multiset invariants built from
//! them.
//!
//! Every crossing of a colored diagram contributes a signed weight
//! `(y, x1, x2)`: `y` is the color of the corner both canonical normals
//! leave, `x1` the facing under semi-arc color, `x2` the over color, and the
//! sign compares the (over, under) travel directions against the plane
//! orientation. Summing over crossings gives a 2-cycle of the symmetric
//! quandle complex; evaluating cocycles on it over all colorings yields the
//! multiset invariant.

use crate::chain::{boundary, chain_in_subgroup, Chain, Tuple};
use crate::cocycle::{CoefficientGroup, Cocycle};
use crate::coloring::{
    enumerate_colorings_in_frame, Coloring, OrientationChoice,
};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::group::XSetAction;
use crate::homology::{degenerate_generators, homology, ComplexVariant, HomologyBasis};
use crate::quandle::SymmetricQuandle;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// A sorted multiset of coefficient values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantMultiset {
    entries: Vec<(BigInt, usize)>,
}

impl InvariantMultiset {
    pub fn from_values(values: impl IntoIterator<Item = BigInt>) -> Self {
        let mut counts: BTreeMap<BigInt, usize> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        InvariantMultiset {
            entries: counts.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[(BigInt, usize)] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn count_of(&self, v: &BigInt) -> usize {
        self.entries
            .iter()
            .find(|(val, _)| val == v)
            .map_or(0, |(_, m)| *m)
    }
}

impl std::fmt::Display for InvariantMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(v, m)| format!("{v}:{m}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A sorted multiset of homology classes given by their coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyClassMultiset {
    entries: Vec<(Vec<BigInt>, usize)>,
}

impl HomologyClassMultiset {
    pub fn from_values(values: impl IntoIterator<Item = Vec<BigInt>>) -> Self {
        let mut counts: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        HomologyClassMultiset {
            entries: counts.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[(Vec<BigInt>, usize)] {
        &self.entries
    }
}

impl std::fmt::Display for HomologyClassMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(coords, m)| {
                let cs: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                format!("[{}]:{m}", cs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The weight cycle of a coloring in the reference frame.
pub fn weight_cycle(d: &Diagram, c: &Coloring) -> Chain {
    weight_cycle_in_frame(d, c, &OrientationChoice::reference(d.n_components()))
}

/// The weight cycle of a coloring canonical in the given frame. The corner
/// whose normals both point outward, the facing under semi-arc and the sign
/// all depend on the travel directions; the four cases are tabulated here.
pub fn weight_cycle_in_frame(d: &Diagram, c: &Coloring, frame: &OrientationChoice) -> Chain {
    let mut out = Chain::zero(2);
    for v in 0..d.n_crossings() {
        let [ea, eb, ec, _] = d.crossing_edges(v);
        let xo = c.arcs[eb];
        let over_rev = frame.is_reversed(d.component_of_edge(eb));
        let under_rev = frame.is_reversed(d.component_of_edge(ea));
        let over_fwd_b_to_d = (d.over_in_slot(v) == 1) != over_rev;
        let under_fwd = !under_rev;
        // (sector slot, under edge, sign) per direction pair
        let (sector, under_edge, sign) = match (under_fwd, over_fwd_b_to_d) {
            (true, false) => (2, ec, 1),
            (true, true) => (3, ea, -1),
            (false, false) => (1, ec, -1),
            (false, true) => (0, ea, 1),
        };
        let region = d.region_of_face(d.sector_face(v, sector));
        let y = c.regions[region];
        out.add_term(
            Tuple::new(y, vec![c.arcs[under_edge], xo]),
            BigInt::from(sign),
        );
    }
    out
}

/// Verifies the defining property of weight cycles: the boundary lands in
/// the degree-1 degenerate subgroup of the symmetric quandle complex.
pub fn is_weight_cycle(
    sq: &SymmetricQuandle,
    act: &XSetAction,
    c: &Chain,
    cap: usize,
) -> Result<bool> {
    let gens = degenerate_generators(sq, act, ComplexVariant::QRho, 1, cap)?;
    Ok(chain_in_subgroup(&boundary(sq, act, c), &gens))
}

fn require_link_cocycle(theta: &Cocycle) -> Result<()> {
    if theta.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: theta.degree(),
        });
    }
    if theta.variant() != ComplexVariant::QRho {
        return Err(Error::Invalid(format!(
            "link invariants need a Qrho cocycle, got variant {}",
            theta.variant()
        )));
    }
    Ok(())
}

/// The cocycle invariant: the multiset of `theta` evaluated on the weight
/// cycles of all colorings (optionally with pinned region colors).
pub fn phi(
    d: &Diagram,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    theta: &Cocycle,
    constraints: &BTreeMap<usize, usize>,
) -> Result<InvariantMultiset> {
    phi_oriented(
        d,
        sq,
        act,
        theta,
        &OrientationChoice::reference(d.n_components()),
        constraints,
    )
}

/// The invariant computed through the oriented route: colorings and weights
/// are taken canonical with respect to the orientation choice. For a
/// symmetric cocycle this equals [`phi`] for every choice.
pub fn phi_oriented(
    d: &Diagram,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    theta: &Cocycle,
    o: &OrientationChoice,
    constraints: &BTreeMap<usize, usize>,
) -> Result<InvariantMultiset> {
    require_link_cocycle(theta)?;
    let colorings = enumerate_colorings_in_frame(d, sq, act, constraints, o)?;
    let mut values = Vec::with_capacity(colorings.len());
    for c in &colorings {
        values.push(theta.evaluate(&weight_cycle_in_frame(d, c, o))?);
    }
    Ok(InvariantMultiset::from_values(values))
}

/// The multiset of homology classes of weight cycles in degree-2 symmetric
/// quandle homology, as coordinates in the Smith basis.
pub fn homology_classes(
    d: &Diagram,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    constraints: &BTreeMap<usize, usize>,
    cap: usize,
) -> Result<HomologyClassMultiset> {
    let basis = homology(
        sq,
        act,
        ComplexVariant::QRho,
        2,
        CoefficientGroup::Integers,
        cap,
    )?;
    homology_classes_with_basis(d, sq, act, constraints, &basis)
}

/// Same as [`homology_classes`] with a precomputed homology basis.
pub fn homology_classes_with_basis(
    d: &Diagram,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    constraints: &BTreeMap<usize, usize>,
    basis: &HomologyBasis,
) -> Result<HomologyClassMultiset> {
    let colorings = enumerate_colorings_in_frame(
        d,
        sq,
        act,
        constraints,
        &OrientationChoice::reference(d.n_components()),
    )?;
    let mut values = Vec::with_capacity(colorings.len());
    for c in &colorings {
        let cycle = weight_cycle(d, c);
        let coords = basis.class_coords(&cycle).ok_or_else(|| {
            Error::Invalid("weight chain is not a cycle of the symmetric quandle complex".into())
        })?;
        values.push(coords);
    }
    Ok(HomologyClassMultiset::from_values(values))
}
