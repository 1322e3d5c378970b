//! Associated groups of (symmetric) quandles and their actions.
//!
//! The associated group of a quandle has one generator per element and the
//! conjugation relators `(x^y)^-1 y^-1 x y`; the symmetric version adds
//! `rho(x) x` for every element. No general finitely-presented-group
//! machinery is attempted (the word problem is undecidable): the module
//! exposes presentations, exact abelianizations via Smith normal form, and
//! relation checking against concrete finite targets.

use crate::error::{Error, Result};
use crate::quandle::{FiniteGroupTable, SymmetricQuandle};
use crate::snf::{invariant_factors, IntMat};
use num_bigint::BigInt;
use num_traits::One;

/// A word in the free group on indexed generators: a sequence of
/// `(generator, sign)` letters with signs in `{+1, -1}`.
pub type Word = Vec<(usize, i8)>;

/// Inverse word: reversed letters with flipped signs.
pub fn word_inverse(w: &Word) -> Word {
    w.iter().rev().map(|&(g, s)| (g, -s)).collect()
}

/// Formats a word the way presentation files print it, e.g. `+0 -1 +0 +1`.
pub fn format_word(w: &Word) -> String {
    if w.is_empty() {
        return "(empty)".to_string();
    }
    w.iter()
        .map(|&(g, s)| format!("{}{}", if s > 0 { "+" } else { "-" }, g))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A finite presentation with one generator per quandle element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

/// Presentation of the associated group of a quandle: relators
/// `(x^y)^-1 y^-1 x y` over all pairs in lexicographic order.
pub fn associated_presentation(sq: &SymmetricQuandle) -> GroupPresentation {
    let n = sq.order();
    let mut relators = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            relators.push(vec![
                (sq.op(x, y), -1),
                (y, -1),
                (x, 1),
                (y, 1),
            ]);
        }
    }
    GroupPresentation {
        generators: n,
        relators,
    }
}

/// Presentation of the associated group of a symmetric quandle: the
/// conjugation relators plus `rho(x) x` for every element.
pub fn symmetric_presentation(sq: &SymmetricQuandle) -> GroupPresentation {
    let mut p = associated_presentation(sq);
    for x in 0..sq.order() {
        p.relators.push(vec![(sq.rho_of(x), 1), (x, 1)]);
    }
    p
}

/// Canonical description of a finitely generated abelian group: free rank
/// plus invariant factors `d_1 | d_2 | ...` (each at least 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupDescriptor {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupDescriptor {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Abelianization of a presentation: Smith normal form of the relator
/// exponent matrix (generators as rows, relators as columns).
pub fn abelianization(p: &GroupPresentation) -> AbelianGroupDescriptor {
    let mut mat = IntMat::zeros(p.generators, p.relators.len());
    for (j, rel) in p.relators.iter().enumerate() {
        for &(g, s) in rel {
            let v = mat.get(g, j) + BigInt::from(s);
            mat.set(g, j, v);
        }
    }
    let factors = invariant_factors(&mat);
    AbelianGroupDescriptor {
        rank: p.generators - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Evaluates a word in a finite group, mapping generator `i` to element
/// `embed[i]`.
pub fn evaluate_word_in_group(g: &FiniteGroupTable, embed: &[usize], w: &Word) -> usize {
    let mut acc = g.identity();
    for &(gen, s) in w {
        let e = if s > 0 {
            embed[gen]
        } else {
            g.inv(embed[gen])
        };
        acc = g.mul(acc, e);
    }
    acc
}

/// A verified right action of the associated group of a symmetric quandle on
/// a finite set: `act[y][x]` is the image of `y` under the generator `x`,
/// and `inv_act` the inverse permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSetAction {
    y_size: usize,
    x_size: usize,
    act: Vec<Vec<usize>>,
    inv_act: Vec<Vec<usize>>,
}

impl XSetAction {
    /// Validates a raw `|Y| x |X|` table: every column a permutation, the
    /// conjugation relation `y.(x1^x2) = ((y.x2^-1).x1).x2`, and the rho
    /// relation `y.rho(x) = y.(x^-1)`, all checked exhaustively.
    pub fn validate(sq: &SymmetricQuandle, table: Vec<Vec<usize>>) -> Result<Self> {
        let y_size = table.len();
        let x_size = sq.order();
        if y_size == 0 {
            return Err(Error::Invalid("action set must be nonempty".into()));
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != x_size {
                return Err(Error::RaggedTable {
                    row,
                    len: r.len(),
                    n: x_size,
                });
            }
            for &v in r {
                if v >= y_size {
                    return Err(Error::EntryOutOfRange {
                        value: v,
                        n: y_size,
                    });
                }
            }
        }
        let mut inv_act = vec![vec![usize::MAX; x_size]; y_size];
        for x in 0..x_size {
            let mut seen = vec![false; y_size];
            for y in 0..y_size {
                let v = table[y][x];
                if seen[v] {
                    return Err(Error::NotPermutation { x });
                }
                seen[v] = true;
                inv_act[v][x] = y;
            }
        }
        let action = XSetAction {
            y_size,
            x_size,
            act: table,
            inv_act,
        };
        for y in 0..y_size {
            for x1 in 0..x_size {
                for x2 in 0..x_size {
                    let lhs = action.act(y, sq.op(x1, x2));
                    let rhs = action.act(action.act(action.inv_act(y, x2), x1), x2);
                    if lhs != rhs {
                        return Err(Error::RelationViolation { y, x1, x2 });
                    }
                }
            }
            for x in 0..x_size {
                if action.act(y, sq.rho_of(x)) != action.inv_act(y, x) {
                    return Err(Error::RhoViolation { y, x });
                }
            }
        }
        Ok(action)
    }

    /// The one-point action, valid for every symmetric quandle.
    pub fn singleton(sq: &SymmetricQuandle) -> Self {
        XSetAction::validate(sq, vec![vec![0; sq.order()]])
            .expect("singleton action satisfies all relations")
    }

    /// `Y = X` acting on itself by the quandle operation. Self-distributivity
    /// makes the conjugation relation hold, and the second goodness identity
    /// is exactly the rho relation, so this is valid for every symmetric
    /// quandle.
    pub fn quandle_action(sq: &SymmetricQuandle) -> Self {
        let n = sq.order();
        let table = (0..n)
            .map(|y| (0..n).map(|x| sq.op(y, x)).collect())
            .collect();
        XSetAction::validate(sq, table).expect("the quandle acts on itself")
    }

    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    /// `y . x`
    #[inline]
    pub fn act(&self, y: usize, x: usize) -> usize {
        self.act[y][x]
    }

    /// `y . x^-1`
    #[inline]
    pub fn inv_act(&self, y: usize, x: usize) -> usize {
        self.inv_act[y][x]
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        &self.act
    }
}

/// Acts on `y` by a word, one generator at a time (inverse permutations for
/// negative letters).
pub fn word_acts(action: &XSetAction, y: usize, w: &Word) -> usize {
    w.iter().fold(y, |acc, &(g, s)| {
        if s > 0 {
            action.act(acc, g)
        } else {
            action.inv_act(acc, g)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{conjugation, FiniteQuandle, Involution};

    fn sym(q: FiniteQuandle, rho: Involution) -> SymmetricQuandle {
        SymmetricQuandle::new(q, rho).unwrap()
    }

    fn t2_swap() -> SymmetricQuandle {
        sym(FiniteQuandle::trivial(2), Involution::new(vec![1, 0]).unwrap())
    }

    fn t1_id() -> SymmetricQuandle {
        sym(FiniteQuandle::trivial(1), Involution::identity(1))
    }

    #[test]
    fn relator_counts() {
        let r3 = sym(FiniteQuandle::dihedral(3), Involution::identity(3));
        assert_eq!(associated_presentation(&r3).relators.len(), 9);
        assert_eq!(symmetric_presentation(&r3).relators.len(), 12);
    }

    #[test]
    fn abelianizations_of_small_fundamental_quandles() {
        // two-element trivial quandle with the swap: G_X = Z x Z, G_(X,rho) = Z
        let sq = t2_swap();
        let plain = abelianization(&associated_presentation(&sq));
        assert_eq!(plain.rank, 2);
        assert!(plain.torsion.is_empty());
        let symd = abelianization(&symmetric_presentation(&sq));
        assert_eq!(symd.rank, 1);
        assert!(symd.torsion.is_empty());

        // one-element quandle: G_X = Z, G_(X,rho) = Z/2
        let sq = t1_id();
        let plain = abelianization(&associated_presentation(&sq));
        assert_eq!(plain.rank, 1);
        let symd = abelianization(&symmetric_presentation(&sq));
        assert_eq!(symd.rank, 0);
        assert_eq!(symd.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn abelianization_of_free_presentation() {
        let p = GroupPresentation {
            generators: 3,
            relators: vec![],
        };
        let d = abelianization(&p);
        assert_eq!(d.rank, 3);
        assert!(d.torsion.is_empty());
        assert_eq!(d.to_string(), "Z^3");
    }

    #[test]
    fn abelianization_is_stable_under_relator_rewrites() {
        let sq = sym(FiniteQuandle::dihedral(4), Involution::antipodal(4));
        let p = symmetric_presentation(&sq);
        let base = abelianization(&p);

        let mut permuted = p.clone();
        permuted.relators.reverse();
        permuted.relators.rotate_left(3);
        assert_eq!(abelianization(&permuted), base);

        // append a product of conjugates of existing relators
        let mut extended = p.clone();
        let conjugator: Word = vec![(1, 1), (2, -1)];
        let mut extra: Word = Vec::new();
        for rel in [&p.relators[0], &p.relators[5]] {
            extra.extend(word_inverse(&conjugator));
            extra.extend(rel.iter().cloned());
            extra.extend(conjugator.iter().cloned());
        }
        extended.relators.push(extra);
        assert_eq!(abelianization(&extended), base);
    }

    #[test]
    fn universal_property_on_conjugation_quandles() {
        for g in [
            FiniteGroupTable::cyclic(4),
            FiniteGroupTable::symmetric(3),
        ] {
            let sq = conjugation(&g);
            let p = symmetric_presentation(&sq);
            let embed: Vec<usize> = (0..g.order()).collect();
            for rel in &p.relators {
                assert_eq!(evaluate_word_in_group(&g, &embed, rel), g.identity());
            }
        }
    }

    #[test]
    fn kei_acts_on_itself() {
        let sq = sym(FiniteQuandle::dihedral(3), Involution::identity(3));
        let action = XSetAction::quandle_action(&sq);
        assert_eq!(action.act(0, 1), 2);
    }

    #[test]
    fn singleton_action_is_valid_for_everything() {
        for sq in [
            conjugation(&FiniteGroupTable::symmetric(3)),
            sym(FiniteQuandle::dihedral(4), Involution::antipodal(4)),
            t2_swap(),
        ] {
            let a = XSetAction::singleton(&sq);
            assert_eq!(a.y_size(), 1);
        }
    }

    #[test]
    fn dihedral_four_with_antipodal_acts_on_itself() {
        let sq = sym(FiniteQuandle::dihedral(4), Involution::antipodal(4));
        let action = XSetAction::quandle_action(&sq);
        assert_eq!(action.y_size(), 4);
    }

    #[test]
    fn broken_action_tables_are_rejected() {
        let sq = t2_swap();
        // column 0 not a permutation
        let err = XSetAction::validate(&sq, vec![vec![0, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotPermutation { x: 0 }));
    }

    #[test]
    fn rho_relation_is_enforced() {
        // R_3 with identity rho: acting by x and by x^-1 must agree since
        // rho(x) = x; a table where some column is not an involution fails.
        let sq = sym(FiniteQuandle::dihedral(3), Involution::identity(3));
        let table = vec![vec![1, 0, 0], vec![2, 1, 1], vec![0, 2, 2]];
        let err = XSetAction::validate(&sq, table).unwrap_err();
        assert!(matches!(
            err,
            Error::RhoViolation { .. } | Error::RelationViolation { .. }
        ));
    }

    #[test]
    fn words_act_through_relators_trivially() {
        let sq = sym(FiniteQuandle::dihedral(4), Involution::antipodal(4));
        let action = XSetAction::quandle_action(&sq);
        let p = symmetric_presentation(&sq);
        for rel in &p.relators {
            for y in 0..action.y_size() {
                assert_eq!(word_acts(&action, y, rel), y);
            }
        }
    }

    #[test]
    fn word_action_basics() {
        let sq = t2_swap();
        let action = XSetAction::singleton(&sq);
        assert_eq!(word_acts(&action, 0, &vec![]), 0);
        assert_eq!(word_acts(&action, 0, &vec![(1, 1), (1, -1)]), 0);
        // rho(x) acts as x^-1
        let sq = sym(FiniteQuandle::dihedral(4), Involution::antipodal(4));
        let action = XSetAction::quandle_action(&sq);
        for y in 0..4 {
            for x in 0..4 {
                assert_eq!(
                    word_acts(&action, y, &vec![(sq.rho_of(x), 1)]),
                    word_acts(&action, y, &vec![(x, -1)])
                );
            }
        }
    }
}
