//! The bundled verification suite: reruns every headline computation the
//! toolkit is calibrated against and prints one pass/fail line per item.

use num_bigint::BigInt;
use sqk::cocycle::Cocycle;
use sqk::coloring::OrientationChoice;
use sqk::diagram::{build_diagram, Diagram};
use sqk::fixtures;
use sqk::group::{abelianization, associated_presentation, symmetric_presentation};
use sqk::invariant::{phi, phi_oriented, InvariantMultiset};
use sqk::pd::braid_closure;
use sqk::quandle::{enumerate_good_involutions, FiniteQuandle, Involution, SymmetricQuandle};
use sqk::surface::{check_surface_cycle, fn_chain, phi_surface, triple_point_bound};
use std::collections::BTreeMap;

struct Report {
    failures: usize,
}

impl Report {
    fn item(&mut self, name: &str, ok: bool) {
        println!("{} {name}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
    }

    fn check(&mut self, name: &str, run: impl FnOnce() -> Result<bool, sqk::Error>) {
        match run() {
            Ok(ok) => self.item(name, ok),
            Err(e) => {
                println!("FAIL {name}: {e}");
                self.failures += 1;
            }
        }
    }
}

fn multiset(pairs: &[(i64, usize)]) -> InvariantMultiset {
    InvariantMultiset::from_values(
        pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat(BigInt::from(v)).take(m)),
    )
}

fn unbounded_face(d: &Diagram) -> usize {
    (0..d.n_faces())
        .find(|&f| d.region_of_face(f) == d.unbounded_region())
        .unwrap()
}

/// Runs the whole suite; returns true when every item passes.
pub fn run_all() -> bool {
    let mut r = Report { failures: 0 };
    let cap = 200_000;

    r.check("good involution counts of dihedral quandles R_3..R_12", || {
        let expected = |n: usize| match (n % 2, n % 4) {
            (1, _) => 1,
            (0, 0) => 4,
            _ => 2,
        };
        Ok((3..=12).all(|n| {
            enumerate_good_involutions(&FiniteQuandle::dihedral(n), 12)
                .map(|v| v.len() == expected(n))
                .unwrap_or(false)
        }))
    });

    r.check("every involution of a trivial quandle is good (T_1..T_6)", || {
        let telephone = [1usize, 2, 4, 10, 26, 76];
        Ok((1..=6).all(|n| {
            enumerate_good_involutions(&FiniteQuandle::trivial(n), 12)
                .map(|v| v.len() == telephone[n - 1])
                .unwrap_or(false)
        }))
    });

    r.check("abelianized associated groups of the two-point symmetric quandle", || {
        let t2 = SymmetricQuandle::new(
            FiniteQuandle::trivial(2),
            Involution::new(vec![1, 0])?,
        )?;
        let plain = abelianization(&associated_presentation(&t2));
        let symd = abelianization(&symmetric_presentation(&t2));
        let t1 = SymmetricQuandle::new(FiniteQuandle::trivial(1), Involution::identity(1))?;
        let p1 = abelianization(&associated_presentation(&t1));
        let s1 = abelianization(&symmetric_presentation(&t1));
        Ok(plain.rank == 2
            && plain.torsion.is_empty()
            && symd.rank == 1
            && symd.torsion.is_empty()
            && p1.rank == 1
            && s1.rank == 0
            && s1.torsion == vec![BigInt::from(2)])
    });

    r.check("bundled 2- and 3-cocycles satisfy the symmetric cocycle conditions", || {
        fixtures::mochizuki_mod3();
        fixtures::linking_2cocycle_t4();
        fixtures::triple_linking_3cocycle_t6();
        fixtures::mod2_triple_linking_3cocycle_t2();
        fixtures::dihedral4_3cocycle();
        Ok(true)
    });

    r.check("trefoil chirality: {0:3,1:6} vs {0:3,2:6} mod 3", || {
        let (sq, act, theta) = fixtures::mochizuki_mod3();
        let d = build_diagram(&braid_closure(2, &[1, 1, 1])?, None)?;
        let c = BTreeMap::from([(unbounded_face(&d), 0usize)]);
        let right = phi(&d, &sq, &act, &theta, &c)?;
        let dm = build_diagram(&braid_closure(2, &[-1, -1, -1])?, None)?;
        let c = BTreeMap::from([(unbounded_face(&dm), 0usize)]);
        let left = phi(&dm, &sq, &act, &theta, &c)?;
        Ok(right == multiset(&[(0, 3), (1, 6)]) && left == multiset(&[(0, 3), (2, 6)]))
    });

    r.check("torus links: {m:4,-m:4,0:8} with the linking number m (m = 1,2,3)", || {
        let (sq, act, theta) = fixtures::linking_2cocycle_t4();
        for m in 1i64..=3 {
            let d = build_diagram(&braid_closure(2, &vec![1; 2 * m as usize])?, None)?;
            if d.linking_number() != Some(m) {
                return Ok(false);
            }
            if phi(&d, &sq, &act, &theta, &BTreeMap::new())?
                != multiset(&[(m, 4), (-m, 4), (0, 8)])
            {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.check("orientation independence on trefoil, figure-eight and Hopf link", || {
        let diagrams = [
            build_diagram(&braid_closure(2, &[1, 1, 1])?, None)?,
            build_diagram(&braid_closure(3, &[1, -2, 1, -2])?, None)?,
            build_diagram(&braid_closure(2, &[1, 1])?, None)?,
        ];
        for (sq, act, theta) in [fixtures::mochizuki_mod3(), fixtures::linking_2cocycle_t4()] {
            for d in &diagrams {
                let base = phi(d, &sq, &act, &theta, &BTreeMap::new())?;
                for o in OrientationChoice::enumerate_all(d.n_components()) {
                    if phi_oriented(d, &sq, &act, &theta, &o, &BTreeMap::new())? != base {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    });

    r.check("diagram invariance across distinct PD codes of the same link", || {
        let pairs = [
            (braid_closure(2, &[1, 1, 1])?, braid_closure(3, &[1, 1, 1, 2])?),
            (braid_closure(2, &[1, 1])?, braid_closure(3, &[1, 1, 2])?),
        ];
        for (sq, act, theta) in [fixtures::mochizuki_mod3(), fixtures::linking_2cocycle_t4()] {
            for (p1, p2) in &pairs {
                let d1 = build_diagram(p1, None)?;
                let d2 = build_diagram(p2, None)?;
                if phi(&d1, &sq, &act, &theta, &BTreeMap::new())?
                    != phi(&d2, &sq, &act, &theta, &BTreeMap::new())?
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });

    r.check("stacked-annulus chains: 3-cycles, evaluation 2n, bound 2n (n = 1,2,3)", || {
        let (sq, act, theta) = fixtures::dihedral4_3cocycle();
        for n in 1..=3usize {
            let data = fn_chain(n, 0, 1);
            check_surface_cycle(&data, &sq, &act, cap)?;
            let v = phi_surface(&data, &sq, &act, &theta, cap)?;
            if v.entries() != [(BigInt::from(2 * n as i64), 1)] {
                return Ok(false);
            }
            if triple_point_bound(&theta, &data, &sq, &act, cap)? != BigInt::from(2 * n as i64) {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.check("triple point bound rejects cocycles with an entry above one", || {
        let (sq, act, theta) = fixtures::dihedral4_3cocycle();
        let doubled = Cocycle::new(
            3,
            theta.coefficient_group(),
            theta.variant(),
            theta.entries().map(|(t, v)| (t.clone(), v * 2)),
        )?;
        Ok(triple_point_bound(&doubled, &fn_chain(1, 0, 1), &sq, &act, cap).is_err())
    });

    println!(
        "{}",
        if r.failures == 0 {
            "all items passed".to_string()
        } else {
            format!("{} item(s) failed", r.failures)
        }
    );
    r.failures == 0
}
