//! Exact homology of the four quotient chain complexes.
//!
//! For a variant W the degree-n chain group is the free group on basis
//! tuples modulo the lattice spanned by W's degenerate generators. These
//! quotients can carry torsion (a generator `t + twist(t)` collapses to `2t`
//! when the twist fixes `t`), so homology is computed on lattices:
//!
//!   H_n = K / M,   K = { c : d(c) lies in the degree-(n-1) generator lattice },
//!                  M = image of d from degree n+1  +  degree-n generator lattice.
//!
//! `K` comes from a kernel computation on a stacked matrix, `M` from its
//! spanning vectors, and the quotient's invariant factors from one Smith
//! normal form. Coefficients mod m are handled by adjoining `m` times the
//! standard basis to both lattices, which is exactly tensoring the quotient
//! complex with Z/m.

use crate::chain::{basis_tuples, boundary_tuple, dq_generators, drho_generators, Chain, Tuple};
use crate::cocycle::CoefficientGroup;
use crate::error::{Error, Result};
use crate::group::{AbelianGroupDescriptor, XSetAction};
use crate::quandle::SymmetricQuandle;
use crate::snf::{kernel_basis, smith, solve, IntMat, Lattice};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Which degenerate generators are quotiented out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexVariant {
    /// Full rack complex: no quotient.
    R,
    /// Quandle complex: kill adjacent repeats.
    Q,
    /// Symmetric rack complex: kill `t + twist_i(t)`.
    RRho,
    /// Symmetric quandle complex: kill both families.
    QRho,
}

impl ComplexVariant {
    pub fn kills_adjacent_repeats(&self) -> bool {
        matches!(self, ComplexVariant::Q | ComplexVariant::QRho)
    }

    pub fn kills_rho_pairs(&self) -> bool {
        matches!(self, ComplexVariant::RRho | ComplexVariant::QRho)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(ComplexVariant::R),
            "Q" => Ok(ComplexVariant::Q),
            "Rrho" => Ok(ComplexVariant::RRho),
            "Qrho" => Ok(ComplexVariant::QRho),
            other => Err(Error::Parse(format!(
                "unknown complex variant '{other}' (expected R, Q, Rrho or Qrho)"
            ))),
        }
    }
}

impl std::fmt::Display for ComplexVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComplexVariant::R => write!(f, "R"),
            ComplexVariant::Q => write!(f, "Q"),
            ComplexVariant::RRho => write!(f, "Rrho"),
            ComplexVariant::QRho => write!(f, "Qrho"),
        }
    }
}

/// Degenerate generators of the given variant in degree `n`, as chains.
pub fn degenerate_generators(
    sq: &SymmetricQuandle,
    act: &XSetAction,
    variant: ComplexVariant,
    n: usize,
    cap: usize,
) -> Result<Vec<Chain>> {
    let mut gens = Vec::new();
    if variant.kills_adjacent_repeats() {
        gens.extend(dq_generators(sq, act, n, cap)?);
    }
    if variant.kills_rho_pairs() {
        gens.extend(drho_generators(sq, act, n, cap)?);
    }
    Ok(gens)
}

/// Result of a homology computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub degree: usize,
    pub variant: ComplexVariant,
    pub coeff: CoefficientGroup,
    pub group: AbelianGroupDescriptor,
    /// Free ranks of the quotient chain groups in degrees `n-1`, `n`, `n+1`.
    pub quotient_ranks: [usize; 3],
}

/// Basis data retained from a homology computation so cycle classes can be
/// read off afterwards.
pub struct HomologyBasis {
    degree: usize,
    index: BTreeMap<Tuple, usize>,
    dim: usize,
    kernel: IntMat,
    /// `p` of the Smith form of the relation matrix `W` (`p W q = d`).
    p: IntMat,
    /// invariant factors of `W`, padded conceptually with zeros
    factors: Vec<BigInt>,
    kernel_rank: usize,
    pub result: HomologyResult,
}

impl HomologyBasis {
    /// Coordinates of a cycle's homology class in the Smith basis: torsion
    /// coordinates reduced to least nonnegative residues (factors > 1
    /// first), then free coordinates. Returns `None` if the chain is not a
    /// cycle of the quotient complex.
    pub fn class_coords(&self, c: &Chain) -> Option<Vec<BigInt>> {
        if c.degree() != self.degree {
            return None;
        }
        let mut v = vec![BigInt::zero(); self.dim];
        for (t, coeff) in c.terms() {
            let i = *self.index.get(t)?;
            v[i] = coeff.clone();
        }
        // express in the kernel basis
        let b = IntMat::from_columns(self.dim, &[v]);
        let sol = solve(&self.kernel, &b)?;
        let coords: Vec<BigInt> = (0..self.kernel_rank).map(|i| sol.get(i, 0).clone()).collect();
        let u = self.p.mul_vec(&coords);
        let mut out = Vec::new();
        for (i, ui) in u.iter().enumerate() {
            if i < self.factors.len() {
                let d = &self.factors[i];
                if d.is_one() {
                    continue; // coordinate dies in the quotient
                }
                out.push(ui.mod_floor(d));
            } else {
                out.push(ui.clone());
            }
        }
        Some(out)
    }
}

/// Computes `H_n` of the chosen quotient complex with the chosen
/// coefficients, retaining enough data to locate cycle classes.
pub fn homology(
    sq: &SymmetricQuandle,
    act: &XSetAction,
    variant: ComplexVariant,
    n: usize,
    coeff: CoefficientGroup,
    cap: usize,
) -> Result<HomologyBasis> {
    let gens_low = degenerate_generators(sq, act, variant, n.saturating_sub(1), cap)?;
    let gens_mid = degenerate_generators(sq, act, variant, n, cap)?;
    homology_with_generators(sq, act, variant, n, coeff, cap, &gens_low, &gens_mid)
}

/// Same as [`homology`] but with the degenerate generator lists supplied by
/// the caller (in any order). The result must not depend on the order; tests
/// exercise exactly that.
#[allow(clippy::too_many_arguments)]
pub fn homology_with_generators(
    sq: &SymmetricQuandle,
    act: &XSetAction,
    variant: ComplexVariant,
    n: usize,
    coeff: CoefficientGroup,
    cap: usize,
    gens_low: &[Chain],
    gens_mid: &[Chain],
) -> Result<HomologyBasis> {
    let y = act.y_size();
    let x = sq.order();
    let basis_low = if n >= 1 {
        basis_tuples(y, x, n - 1, cap)?
    } else {
        Vec::new()
    };
    let basis_mid = basis_tuples(y, x, n, cap)?;
    let basis_high = basis_tuples(y, x, n + 1, cap)?;

    let index_low: BTreeMap<Tuple, usize> = basis_low
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let index_mid: BTreeMap<Tuple, usize> = basis_mid
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();

    let dim_low = basis_low.len();
    let dim_mid = basis_mid.len();

    // boundary matrix from degree n (columns) to degree n-1 (rows)
    let mut d_n = IntMat::zeros(dim_low, dim_mid);
    if n >= 1 {
        for (j, t) in basis_mid.iter().enumerate() {
            for (u, c) in boundary_tuple(sq, act, t).terms() {
                let i = index_low[u];
                let v = d_n.get(i, j) + c;
                d_n.set(i, j, v);
            }
        }
    }

    // modulus block for Z/m coefficients
    let m_val = match coeff {
        CoefficientGroup::Integers => None,
        CoefficientGroup::IntegersMod(m) => Some(BigInt::from(m)),
    };

    // K: chains whose boundary lands in the low generator lattice
    // (plus m * standard basis when working mod m)
    let mut low_cols: Vec<Vec<BigInt>> = gens_low
        .iter()
        .map(|g| g.coordinates(&index_low, dim_low))
        .collect();
    if let Some(m) = &m_val {
        for i in 0..dim_low {
            let mut e = vec![BigInt::zero(); dim_low];
            e[i] = m.clone();
            low_cols.push(e);
        }
    }
    let kernel = if dim_low == 0 {
        IntMat::identity(dim_mid)
    } else {
        let g_low = IntMat::from_columns(dim_low, &low_cols);
        let stacked = d_n.hstack(&g_low);
        let full_kernel = kernel_basis(&stacked);
        // project to the chain coordinates and re-extract an independent basis
        let projected: Vec<Vec<BigInt>> = (0..full_kernel.cols())
            .map(|j| (0..dim_mid).map(|i| full_kernel.get(i, j).clone()).collect())
            .collect();
        Lattice::new(dim_mid, &projected).basis()
    };
    let kernel_rank = kernel.cols();

    // M: boundaries from above plus the mid generator lattice (plus the
    // modulus block)
    let mut mid_cols: Vec<Vec<BigInt>> = Vec::new();
    for t in &basis_high {
        let b = boundary_tuple(sq, act, t);
        if !b.is_zero() {
            mid_cols.push(b.coordinates(&index_mid, dim_mid));
        }
    }
    for g in gens_mid {
        mid_cols.push(g.coordinates(&index_mid, dim_mid));
    }
    if let Some(m) = &m_val {
        for i in 0..dim_mid {
            let mut e = vec![BigInt::zero(); dim_mid];
            e[i] = m.clone();
            mid_cols.push(e);
        }
    }
    let m_mat = IntMat::from_columns(dim_mid, &mid_cols);

    // express M in the kernel basis; inclusion is guaranteed
    let w = solve(&kernel, &m_mat)
        .ok_or_else(|| Error::Invalid("image does not lie in the cycle lattice".into()))?;
    let s = smith(&w);
    let factors = s.invariant_factors();
    let torsion: Vec<BigInt> = factors.iter().filter(|d| !d.is_one()).cloned().collect();
    let rank = kernel_rank - factors.len();

    // free ranks of the quotient chain groups, for reporting
    let gens_high = degenerate_generators(sq, act, variant, n + 1, cap)?;
    let quotient_ranks = [
        quotient_free_rank(dim_low, &index_low, gens_low),
        quotient_free_rank(dim_mid, &index_mid, gens_mid),
        {
            let index_high: BTreeMap<Tuple, usize> = basis_high
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, t)| (t, i))
                .collect();
            quotient_free_rank(basis_high.len(), &index_high, &gens_high)
        },
    ];

    let result = HomologyResult {
        degree: n,
        variant,
        coeff,
        group: AbelianGroupDescriptor { rank, torsion },
        quotient_ranks,
    };
    Ok(HomologyBasis {
        degree: n,
        index: index_mid,
        dim: dim_mid,
        kernel,
        p: s.p,
        factors,
        kernel_rank,
        result,
    })
}

fn quotient_free_rank(dim: usize, index: &BTreeMap<Tuple, usize>, gens: &[Chain]) -> usize {
    if gens.is_empty() {
        return dim;
    }
    let cols: Vec<Vec<BigInt>> = gens.iter().map(|g| g.coordinates(index, dim)).collect();
    dim - Lattice::new(dim, &cols).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{FiniteQuandle, Involution};

    fn t1() -> (SymmetricQuandle, XSetAction) {
        let sq =
            SymmetricQuandle::new(FiniteQuandle::trivial(1), Involution::identity(1)).unwrap();
        let act = XSetAction::singleton(&sq);
        (sq, act)
    }

    #[test]
    fn rack_homology_of_the_point_in_degree_one() {
        let (sq, act) = t1();
        let h = homology(
            &sq,
            &act,
            ComplexVariant::R,
            1,
            CoefficientGroup::Integers,
            10_000,
        )
        .unwrap();
        assert_eq!(h.result.group.rank, 1);
        assert!(h.result.group.torsion.is_empty());
    }

    #[test]
    fn q_quotient_is_smaller_than_r() {
        let sq =
            SymmetricQuandle::new(FiniteQuandle::dihedral(3), Involution::identity(3)).unwrap();
        let act = XSetAction::quandle_action(&sq);
        let hr = homology(
            &sq,
            &act,
            ComplexVariant::R,
            2,
            CoefficientGroup::Integers,
            10_000,
        )
        .unwrap();
        let hq = homology(
            &sq,
            &act,
            ComplexVariant::Q,
            2,
            CoefficientGroup::Integers,
            10_000,
        )
        .unwrap();
        assert!(hq.result.quotient_ranks[1] < hr.result.quotient_ranks[1]);
    }

    #[test]
    fn zeroth_symmetric_homology_counts_orbits() {
        // Y = X = R_3 acted on by the quandle operation is transitive
        let sq =
            SymmetricQuandle::new(FiniteQuandle::dihedral(3), Involution::identity(3)).unwrap();
        let act = XSetAction::quandle_action(&sq);
        let h = homology(
            &sq,
            &act,
            ComplexVariant::QRho,
            0,
            CoefficientGroup::Integers,
            10_000,
        )
        .unwrap();
        assert_eq!(h.result.group.rank, 1);
    }

    #[test]
    fn mod_m_coefficients_follow_the_tensored_complex() {
        // two-point trivial quandle with the swap, one-point action: both
        // boundaries vanish, the degree-1 rho quotient is Z^2/(e0 + e1)
        let sq = SymmetricQuandle::new(
            FiniteQuandle::trivial(2),
            crate::quandle::Involution::new(vec![1, 0]).unwrap(),
        )
        .unwrap();
        let act = XSetAction::singleton(&sq);
        let h = homology(
            &sq,
            &act,
            ComplexVariant::RRho,
            1,
            CoefficientGroup::Integers,
            10_000,
        )
        .unwrap();
        assert_eq!(h.result.group.rank, 1);
        assert!(h.result.group.torsion.is_empty());

        let h2 = homology(
            &sq,
            &act,
            ComplexVariant::RRho,
            1,
            CoefficientGroup::IntegersMod(2),
            10_000,
        )
        .unwrap();
        assert_eq!(h2.result.group.rank, 0);
        assert_eq!(h2.result.group.torsion, vec![BigInt::from(2)]);

        let h3 = homology(
            &sq,
            &act,
            ComplexVariant::RRho,
            1,
            CoefficientGroup::IntegersMod(3),
            10_000,
        )
        .unwrap();
        assert_eq!(h3.result.group.torsion, vec![BigInt::from(3)]);
    }

    #[test]
    fn class_coords_of_boundaries_vanish() {
        let sq =
            SymmetricQuandle::new(FiniteQuandle::dihedral(3), Involution::identity(3)).unwrap();
        let act = XSetAction::quandle_action(&sq);
        let h = homology(
            &sq,
            &act,
            ComplexVariant::QRho,
            2,
            CoefficientGroup::Integers,
            100_000,
        )
        .unwrap();
        let c = Chain::unit(Tuple::new(0, vec![0, 1, 2]));
        let b = crate::chain::boundary(&sq, &act, &c);
        let coords = h.class_coords(&b).expect("boundaries are cycles");
        assert!(coords.iter().all(|v| v.is_zero()));
    }
}
