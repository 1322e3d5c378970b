//! Finite quandles, good involutions and symmetric quandles.
//!
//! Elements are indices `0..n`. The operation table stores `op[x][y] = x ^ y`
//! (the result of acting on `x` by `y`); the inverse table `inv_op[x][y] =
//! x ^ (y^-1)` is derived once at validation time since it shows up in the
//! goodness check, in coloring conditions and in action relations.

use crate::error::{Error, GoodnessIdentity, QuandleAxiom, Result};

/// A verified finite quandle on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    n: usize,
    op: Vec<Vec<usize>>,
    inv_op: Vec<Vec<usize>>,
}

impl FiniteQuandle {
    /// Validates a raw operation table against the quandle axioms and builds
    /// the inverse table. Axioms are checked in order Q1, Q2, Q3 and the
    /// lexicographically first witness of the first violated axiom is
    /// reported.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("quandle order must be positive".into()));
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(Error::RaggedTable {
                    row,
                    len: r.len(),
                    n,
                });
            }
            for &v in r {
                if v >= n {
                    return Err(Error::EntryOutOfRange { value: v, n });
                }
            }
        }
        // Q1
        for x in 0..n {
            if table[x][x] != x {
                return Err(Error::AxiomViolation {
                    axiom: QuandleAxiom::Q1,
                    witness: vec![x],
                });
            }
        }
        // Q2: each column is a permutation of 0..n
        let mut inv_op = vec![vec![0usize; n]; n];
        for y in 0..n {
            let mut seen = vec![usize::MAX; n];
            for x in 0..n {
                let v = table[x][y];
                if seen[v] != usize::MAX {
                    return Err(Error::AxiomViolation {
                        axiom: QuandleAxiom::Q2,
                        witness: vec![y, seen[v], x],
                    });
                }
                seen[v] = x;
                inv_op[v][y] = x;
            }
        }
        // Q3
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[table[x][z]][table[y][z]] {
                        return Err(Error::AxiomViolation {
                            axiom: QuandleAxiom::Q3,
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        Ok(FiniteQuandle {
            n,
            op: table,
            inv_op,
        })
    }

    /// The trivial quandle `T_n`: `x ^ y = x`.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        let op = (0..n).map(|x| vec![x; n]).collect();
        FiniteQuandle::from_table(op).expect("trivial table satisfies the axioms")
    }

    /// The dihedral quandle `R_n`: `x ^ y = 2y - x (mod n)`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        let op = (0..n)
            .map(|x| (0..n).map(|y| (2 * y + n - x % n) % n).collect())
            .collect();
        FiniteQuandle::from_table(op).expect("dihedral table satisfies the axioms")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ^ y`
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x][y]
    }

    /// `x ^ (y^-1)`
    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_op[x][y]
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        &self.op
    }

    /// True iff `(x^y)^y = x` for all pairs, i.e. the quandle is a kei
    /// (involutory quandle).
    pub fn is_kei(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.op[self.op[x][y]][y] == x))
    }

    /// The double cover `D(X)` on two copies of `X`, with the copy-swapping
    /// good involution. Elements `0..n` are the first copy, `n..2n` the
    /// second; acting by the second copy acts through the inverse operation.
    pub fn double_cover(&self) -> SymmetricQuandle {
        let n = self.n;
        let mut op = vec![vec![0usize; 2 * n]; 2 * n];
        for a in 0..2 * n {
            let (x, i) = (a % n, a / n);
            for b in 0..2 * n {
                let (y, j) = (b % n, b / n);
                let base = if j == 0 {
                    self.op[x][y]
                } else {
                    self.inv_op[x][y]
                };
                op[a][b] = base + i * n;
            }
        }
        let q = FiniteQuandle::from_table(op).expect("double cover satisfies the axioms");
        let rho = Involution::new((0..2 * n).map(|a| (a + n) % (2 * n)).collect())
            .expect("copy swap is an involution");
        SymmetricQuandle::new(q, rho).expect("copy swap is a good involution")
    }
}

/// An involution of `0..n`, kept as its value table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Involution {
    map: Vec<usize>,
}

impl Involution {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        for (x, &v) in map.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryOutOfRange { value: v, n });
            }
            if map[v] != x {
                return Err(Error::NotInvolution { x, image: map[v] });
            }
        }
        Ok(Involution { map })
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            map: (0..n).collect(),
        }
    }

    /// `i -> i + n/2` on `0..n`; only defined for even `n`.
    pub fn antipodal(n: usize) -> Self {
        assert!(n % 2 == 0, "antipodal map needs even order");
        Involution {
            map: (0..n).map(|i| (i + n / 2) % n).collect(),
        }
    }

    /// The half-antipodal map shifting one parity class by `n/2` and fixing
    /// the other. `shift_even` selects which class moves.
    pub fn half_antipodal(n: usize, shift_even: bool) -> Self {
        assert!(n % 4 == 0, "half-antipodal maps need order divisible by 4");
        Involution {
            map: (0..n)
                .map(|i| {
                    if (i % 2 == 0) == shift_even {
                        (i + n / 2) % n
                    } else {
                        i
                    }
                })
                .collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// Returns the first pair violating one of the goodness identities, or `None`
/// if `rho` is a good involution of `q`.
pub fn good_involution_witness(q: &FiniteQuandle, rho: &Involution) -> Option<Error> {
    let n = q.order();
    for x in 0..n {
        for y in 0..n {
            if rho.apply(q.op(x, y)) != q.op(rho.apply(x), y) {
                return Some(Error::NotGoodInvolution {
                    identity: GoodnessIdentity::Equivariance,
                    x,
                    y,
                });
            }
            if q.op(x, rho.apply(y)) != q.inv_op(x, y) {
                return Some(Error::NotGoodInvolution {
                    identity: GoodnessIdentity::InverseAction,
                    x,
                    y,
                });
            }
        }
    }
    None
}

/// True iff both goodness identities hold for every pair.
pub fn is_good_involution(q: &FiniteQuandle, rho: &Involution) -> bool {
    rho.len() == q.order() && good_involution_witness(q, rho).is_none()
}

/// Enumerates all good involutions of `q` in lexicographic order of their
/// value tables, by filtering every involution of `0..n`. The brute force is
/// deliberate: classification statements about good involutions are verified
/// against it rather than assumed.
pub fn enumerate_good_involutions(q: &FiniteQuandle, cap: usize) -> Result<Vec<Involution>> {
    let n = q.order();
    if n > cap {
        return Err(Error::OrderCapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    enumerate_involutions(&mut map, 0, &mut |m| {
        let rho = Involution { map: m.to_vec() };
        if good_involution_witness(q, &rho).is_none() {
            out.push(rho);
        }
    });
    out.sort();
    Ok(out)
}

/// Enumerates all involutions of `0..n` (as value tables) into `visit`.
pub fn enumerate_involutions(map: &mut [usize], from: usize, visit: &mut impl FnMut(&[usize])) {
    let n = map.len();
    let x = match (from..n).find(|&i| map[i] == usize::MAX) {
        Some(x) => x,
        None => {
            visit(map);
            return;
        }
    };
    map[x] = x;
    enumerate_involutions(map, x + 1, visit);
    map[x] = usize::MAX;
    for y in x + 1..n {
        if map[y] == usize::MAX {
            map[x] = y;
            map[y] = x;
            enumerate_involutions(map, x + 1, visit);
            map[x] = usize::MAX;
            map[y] = usize::MAX;
        }
    }
}

/// A finite quandle together with a verified good involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricQuandle {
    quandle: FiniteQuandle,
    rho: Involution,
}

impl SymmetricQuandle {
    pub fn new(quandle: FiniteQuandle, rho: Involution) -> Result<Self> {
        if rho.len() != quandle.order() {
            return Err(Error::Invalid(format!(
                "involution on {} elements does not match quandle of order {}",
                rho.len(),
                quandle.order()
            )));
        }
        if let Some(err) = good_involution_witness(&quandle, &rho) {
            return Err(err);
        }
        Ok(SymmetricQuandle { quandle, rho })
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn rho(&self) -> &Involution {
        &self.rho
    }

    pub fn order(&self) -> usize {
        self.quandle.order()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.quandle.op(x, y)
    }

    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.quandle.inv_op(x, y)
    }

    #[inline]
    pub fn rho_of(&self, x: usize) -> usize {
        self.rho.apply(x)
    }
}

/// A verified finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    n: usize,
    mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroupTable {
    /// Validates associativity, a two-sided identity and inverses.
    pub fn from_mul_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::Invalid("group order must be positive".into()));
        }
        for (row, r) in mul.iter().enumerate() {
            if r.len() != n {
                return Err(Error::RaggedTable {
                    row,
                    len: r.len(),
                    n,
                });
            }
            for &v in r {
                if v >= n {
                    return Err(Error::EntryOutOfRange { value: v, n });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or_else(|| Error::GroupLawViolation {
                law: "identity".into(),
                witness: vec![],
            })?;
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| mul[g][h] == identity && mul[h][g] == identity) {
                Some(h) => inverse[g] = h,
                None => {
                    return Err(Error::GroupLawViolation {
                        law: "inverse".into(),
                        witness: vec![g],
                    })
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::GroupLawViolation {
                            law: "associativity".into(),
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }
        Ok(FiniteGroupTable {
            n,
            mul,
            inverse,
            identity,
        })
    }

    /// The cyclic group `Z/n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroupTable::from_mul_table(mul).expect("cyclic table is a group")
    }

    /// The symmetric group `S_k` on `k` letters, elements ordered
    /// lexicographically as permutation words. Products compose left to
    /// right: `(g * h)(i) = h(g(i))`.
    pub fn symmetric(k: usize) -> Self {
        assert!((1..=5).contains(&k), "S_k supported for k in 1..=5");
        let perms = permutations(k);
        let index: std::collections::HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mul = perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| {
                        let prod: Vec<usize> = (0..k).map(|i| h[g[i]]).collect();
                        index[&prod]
                    })
                    .collect()
            })
            .collect();
        FiniteGroupTable::from_mul_table(mul).expect("permutation table is a group")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; k];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

/// The conjugation symmetric quandle of a finite group: `x ^ y = y^-1 x y`
/// with `rho(x) = x^-1`. Goodness is a consequence of the group laws but is
/// still asserted by construction.
pub fn conjugation(g: &FiniteGroupTable) -> SymmetricQuandle {
    let n = g.order();
    let op = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| g.mul(g.mul(g.inv(y), x), y))
                .collect::<Vec<_>>()
        })
        .collect();
    let q = FiniteQuandle::from_table(op).expect("conjugation satisfies the quandle axioms");
    let rho =
        Involution::new((0..n).map(|x| g.inv(x)).collect()).expect("inversion is an involution");
    SymmetricQuandle::new(q, rho).expect("inversion is a good involution of conj(G)")
}
