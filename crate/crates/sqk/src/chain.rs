//! Chains over a symmetric quandle acting on a set.
//!
//! Degree-`n` chains are sparse integer combinations of tuples
//! `(y, x_1, ..., x_n)`; degree 0 tuples are bare `y`s. The boundary takes
//! the alternating sum over deleted positions, in its action form:
//!
//! `d(y, x_1..x_n) = sum_i (-1)^i [ (y, ..no x_i..)
//!                                - (y.x_i, x_1^{x_i}, .., x_{i-1}^{x_i}, no x_i, x_{i+1}, ..) ]`
//!
//! for `n >= 1` and zero otherwise. Two families of degenerate generators cut
//! out the quotient complexes: tuples with an adjacent repeat, and the sums
//! `t + twist_i(t)` where `twist_i` acts through position `i` and replaces
//! `x_i` by `rho(x_i)`.

use crate::error::{Error, Result};
use crate::group::XSetAction;
use crate::quandle::SymmetricQuandle;
use crate::snf::Lattice;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// A basis tuple `(y, x_1, ..., x_n)`; the degree is the number of `x`s.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple {
    pub y: usize,
    pub xs: Vec<usize>,
}

impl Tuple {
    pub fn new(y: usize, xs: Vec<usize>) -> Self {
        Tuple { y, xs }
    }

    pub fn degree(&self) -> usize {
        self.xs.len()
    }

    /// Applies the position-`i` involution (`i` is 1-based as in the boundary
    /// formula): acts on `y` and the first `i-1` entries by `x_i` and
    /// replaces `x_i` by `rho(x_i)`.
    pub fn twist(&self, sq: &SymmetricQuandle, act: &XSetAction, i: usize) -> Tuple {
        assert!(i >= 1 && i <= self.degree());
        let xi = self.xs[i - 1];
        let mut xs = Vec::with_capacity(self.degree());
        for (k, &x) in self.xs.iter().enumerate() {
            if k < i - 1 {
                xs.push(sq.op(x, xi));
            } else if k == i - 1 {
                xs.push(sq.rho_of(xi));
            } else {
                xs.push(x);
            }
        }
        Tuple::new(act.act(self.y, xi), xs)
    }

    /// True if some adjacent pair of `x` entries is equal.
    pub fn has_adjacent_repeat(&self) -> bool {
        self.xs.windows(2).any(|w| w[0] == w[1])
    }
}

impl std::fmt::Display for Tuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}", self.y)?;
        for x in &self.xs {
            write!(f, ",{x}")?;
        }
        write!(f, ")")
    }
}

/// A sparse integer chain of homogeneous degree. Zero coefficients are never
/// stored; the term order is the lexicographic tuple order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Tuple, BigInt>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(t: Tuple) -> Self {
        let mut c = Chain::zero(t.degree());
        c.add_term(t, BigInt::from(1));
        c
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Tuple, BigInt)>) -> Self {
        let mut c = Chain::zero(degree);
        for (t, coeff) in terms {
            c.add_term(t, coeff);
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Tuple) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tuple, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, t: Tuple, coeff: BigInt) {
        assert_eq!(t.degree(), self.degree, "tuple degree mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Chain {
        Chain {
            degree: self.degree,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Chain {
        if k.is_zero() {
            return Chain::zero(self.degree);
        }
        Chain {
            degree: self.degree,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect(),
        }
    }

    /// Coordinates of the chain with respect to an indexed tuple basis.
    pub fn coordinates(&self, index: &BTreeMap<Tuple, usize>, dim: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); dim];
        for (t, c) in self.terms() {
            let i = *index.get(t).expect("tuple outside the basis");
            v[i] = c.clone();
        }
        v
    }
}

impl std::fmt::Display for Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.terms() {
            if first {
                write!(f, "{c}{t}")?;
                first = false;
            } else if c < &BigInt::zero() {
                write!(f, " - {}{}", -c, t)?;
            } else {
                write!(f, " + {c}{t}")?;
            }
        }
        Ok(())
    }
}

/// Enumerates all degree-`n` basis tuples in lexicographic `(y, x_1..x_n)`
/// order, subject to the basis cap.
pub fn basis_tuples(y_size: usize, x_size: usize, n: usize, cap: usize) -> Result<Vec<Tuple>> {
    let mut count = y_size;
    for _ in 0..n {
        count = count.saturating_mul(x_size);
    }
    if count > cap {
        return Err(Error::SizeCapExceeded { needed: count, cap });
    }
    let mut out = Vec::with_capacity(count);
    for y in 0..y_size {
        let mut xs = vec![0usize; n];
        'odometer: loop {
            out.push(Tuple::new(y, xs.clone()));
            for k in (0..n).rev() {
                xs[k] += 1;
                if xs[k] < x_size {
                    continue 'odometer;
                }
                xs[k] = 0;
            }
            break;
        }
    }
    Ok(out)
}

/// Boundary of a single tuple.
pub fn boundary_tuple(sq: &SymmetricQuandle, act: &XSetAction, t: &Tuple) -> Chain {
    let n = t.degree();
    if n == 0 {
        return Chain::zero(0);
    }
    let mut out = Chain::zero(n - 1);
    for i in 1..=n {
        let sign = if i % 2 == 1 {
            BigInt::from(-1)
        } else {
            BigInt::from(1)
        };
        // term with x_i deleted
        let mut xs = Vec::with_capacity(n - 1);
        xs.extend_from_slice(&t.xs[..i - 1]);
        xs.extend_from_slice(&t.xs[i..]);
        out.add_term(Tuple::new(t.y, xs), sign.clone());
        // term acted through x_i, then x_i deleted
        let xi = t.xs[i - 1];
        let mut xs = Vec::with_capacity(n - 1);
        for &x in &t.xs[..i - 1] {
            xs.push(sq.op(x, xi));
        }
        xs.extend_from_slice(&t.xs[i..]);
        out.add_term(Tuple::new(act.act(t.y, xi), xs), -sign);
    }
    out
}

/// Linear extension of the boundary to chains. Degrees `n <= 0` map to zero.
pub fn boundary(sq: &SymmetricQuandle, act: &XSetAction, c: &Chain) -> Chain {
    if c.degree() == 0 {
        return Chain::zero(0);
    }
    let mut out = Chain::zero(c.degree() - 1);
    for (t, coeff) in c.terms() {
        let bt = boundary_tuple(sq, act, t);
        for (u, v) in bt.terms() {
            out.add_term(u.clone(), v * coeff);
        }
    }
    out
}

/// Unit chains on all degree-`n` tuples with an adjacent repeat, in
/// lexicographic order. Empty below degree 2.
pub fn dq_generators(
    sq: &SymmetricQuandle,
    act: &XSetAction,
    n: usize,
    cap: usize,
) -> Result<Vec<Chain>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    let tuples = basis_tuples(act.y_size(), sq.order(), n, cap)?;
    Ok(tuples
        .into_iter()
        .filter(|t| t.has_adjacent_repeat())
        .map(Chain::unit)
        .collect())
}

/// The chains `t + twist_i(t)` over all degree-`n` tuples and positions, with
/// exact duplicates removed (each generator arises twice since the twist is
/// an involution on tuples). Sorted, deterministic. Empty below degree 1.
pub fn drho_generators(
    sq: &SymmetricQuandle,
    act: &XSetAction,
    n: usize,
    cap: usize,
) -> Result<Vec<Chain>> {
    if n < 1 {
        return Ok(Vec::new());
    }
    let tuples = basis_tuples(act.y_size(), sq.order(), n, cap)?;
    let mut set = BTreeSet::new();
    for t in &tuples {
        for i in 1..=n {
            let mut c = Chain::unit(t.clone());
            c.add_term(t.twist(sq, act, i), BigInt::from(1));
            set.insert(c);
        }
    }
    Ok(set.into_iter().collect())
}

/// True iff `c` is an integer combination of the given chains (the zero
/// chain always is, even of an empty set).
pub fn chain_in_subgroup(c: &Chain, gens: &[Chain]) -> bool {
    if c.is_zero() {
        return true;
    }
    // index only the tuples that occur; everything else has coordinate zero
    let mut tuples: BTreeSet<Tuple> = c.terms().map(|(t, _)| t.clone()).collect();
    for g in gens {
        tuples.extend(g.terms().map(|(t, _)| t.clone()));
    }
    let index: BTreeMap<Tuple, usize> = tuples
        .into_iter()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let dim = index.len();
    let cols: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| g.coordinates(&index, dim))
        .collect();
    let lat = Lattice::new(dim, &cols);
    lat.contains(&c.coordinates(&index, dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{FiniteQuandle, Involution};

    fn r3_id() -> (SymmetricQuandle, XSetAction) {
        let sq =
            SymmetricQuandle::new(FiniteQuandle::dihedral(3), Involution::identity(3)).unwrap();
        let act = XSetAction::singleton(&sq);
        (sq, act)
    }

    fn r4_antipodal_self() -> (SymmetricQuandle, XSetAction) {
        let sq =
            SymmetricQuandle::new(FiniteQuandle::dihedral(4), Involution::antipodal(4)).unwrap();
        let act = XSetAction::quandle_action(&sq);
        (sq, act)
    }

    #[test]
    fn boundary_of_a_two_tuple_over_r3() {
        let (sq, act) = r3_id();
        let c = Chain::unit(Tuple::new(0, vec![0, 1]));
        let b = boundary(&sq, &act, &c);
        // i = 1 cancels (singleton Y); i = 2 leaves (0,0) - (0, 0^1) = (0,0) - (0,2)
        let mut expected = Chain::zero(1);
        expected.add_term(Tuple::new(0, vec![0]), BigInt::from(1));
        expected.add_term(Tuple::new(0, vec![2]), BigInt::from(-1));
        assert_eq!(b, expected);
    }

    #[test]
    fn boundary_squares_to_zero_on_basis_tuples() {
        let (sq, act) = r4_antipodal_self();
        for n in 2..=4 {
            for t in basis_tuples(act.y_size(), sq.order(), n, 100_000).unwrap() {
                let b = boundary(&sq, &act, &Chain::unit(t));
                let bb = boundary(&sq, &act, &b);
                assert!(bb.is_zero());
            }
        }
    }

    #[test]
    fn degree_one_boundary_hits_degree_zero() {
        let (sq, act) = r4_antipodal_self();
        let c = Chain::unit(Tuple::new(0, vec![1]));
        let b = boundary(&sq, &act, &c);
        // -(y) + (y.x): here y = 0, x = 1, 0.1 = 0^1 = 2
        let mut expected = Chain::zero(0);
        expected.add_term(Tuple::new(0, vec![]), BigInt::from(-1));
        expected.add_term(Tuple::new(2, vec![]), BigInt::from(1));
        assert_eq!(b, expected);
    }

    #[test]
    fn dq_generator_counts() {
        let (sq, act) = r3_id();
        assert_eq!(dq_generators(&sq, &act, 2, 10_000).unwrap().len(), 3);
        // degree 3: x1 = x2 or x2 = x3, by inclusion-exclusion 9 + 9 - 3
        assert_eq!(dq_generators(&sq, &act, 3, 10_000).unwrap().len(), 15);

        let t2 = SymmetricQuandle::new(FiniteQuandle::trivial(2), Involution::identity(2)).unwrap();
        let a2 = XSetAction::singleton(&t2);
        assert_eq!(dq_generators(&t2, &a2, 2, 10_000).unwrap().len(), 2);
    }

    #[test]
    fn drho_generators_pair_up() {
        let (sq, act) = r4_antipodal_self();
        for n in 1..=2 {
            for t in basis_tuples(act.y_size(), sq.order(), n, 10_000).unwrap() {
                for i in 1..=n {
                    let twisted = t.twist(&sq, &act, i);
                    assert_eq!(twisted.twist(&sq, &act, i), t);
                }
            }
        }
        // degree-1 generators over a singleton Y are (e,x) + (e,rho(x))
        let sq =
            SymmetricQuandle::new(FiniteQuandle::dihedral(4), Involution::antipodal(4)).unwrap();
        let act = XSetAction::singleton(&sq);
        let gens = drho_generators(&sq, &act, 1, 10_000).unwrap();
        for g in &gens {
            let ts: Vec<_> = g.terms().collect();
            match ts.len() {
                1 => {
                    // fixed tuple: coefficient 2
                    assert_eq!(ts[0].1, &BigInt::from(2));
                }
                2 => {
                    assert_eq!(sq.rho_of(ts[0].0.xs[0]), ts[1].0.xs[0]);
                }
                _ => panic!("unexpected generator shape"),
            }
        }
    }

    #[test]
    fn boundary_of_dq_generator_is_degenerate() {
        let (sq, act) = r4_antipodal_self();
        let dq2 = dq_generators(&sq, &act, 2, 100_000).unwrap();
        for g in &dq2 {
            let b = boundary(&sq, &act, g);
            // degree-1 Q-degenerates are zero, so the boundary must vanish
            assert!(b.is_zero());
        }
        let dq3 = dq_generators(&sq, &act, 3, 100_000).unwrap();
        for g in &dq3 {
            let b = boundary(&sq, &act, g);
            assert!(chain_in_subgroup(&b, &dq2));
        }
    }

    #[test]
    fn subcomplex_closure_for_drho() {
        let (sq, act) = r3_id();
        for n in 1..=3 {
            let lower = drho_generators(&sq, &act, n - 1, 100_000).unwrap();
            for g in drho_generators(&sq, &act, n, 100_000).unwrap() {
                let b = boundary(&sq, &act, &g);
                assert!(chain_in_subgroup(&b, &lower), "degree {n} generator {g}");
            }
        }
    }

    #[test]
    fn membership_oracle_basics() {
        let (sq, act) = r3_id();
        let gens = dq_generators(&sq, &act, 2, 10_000).unwrap();
        assert!(chain_in_subgroup(&gens[0], &gens));
        assert!(chain_in_subgroup(&Chain::zero(2), &[]));

        // over T_2 with the swap, (e,0) - (e,1) is not in the degree-1
        // rho-span: (e,0) + (e,1) is the only generator
        let t2 = SymmetricQuandle::new(
            FiniteQuandle::trivial(2),
            Involution::new(vec![1, 0]).unwrap(),
        )
        .unwrap();
        let a = XSetAction::singleton(&t2);
        let gens = drho_generators(&t2, &a, 1, 10_000).unwrap();
        let mut diff = Chain::unit(Tuple::new(0, vec![0]));
        diff.add_term(Tuple::new(0, vec![1]), BigInt::from(-1));
        assert!(!chain_in_subgroup(&diff, &gens));
        let mut sum = Chain::unit(Tuple::new(0, vec![0]));
        sum.add_term(Tuple::new(0, vec![1]), BigInt::from(1));
        assert!(chain_in_subgroup(&sum, &gens));
    }

    #[test]
    fn basis_enumeration_is_lexicographic_and_capped() {
        let ts = basis_tuples(2, 2, 2, 100).unwrap();
        assert_eq!(ts.len(), 8);
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            basis_tuples(10, 10, 6, 100_000),
            Err(Error::SizeCapExceeded { .. })
        ));
    }
}
