//! Colorings of link diagrams by a symmetric quandle and an action set.
//!
//! A coloring assigns a quandle element to every semi-arc and an action-set
//! element to every region. Colorings are stored in canonical form: every
//! semi-arc carries the reference normal (the direction of travel rotated to
//! its right), which picks one representative out of each equivalence class
//! under basic inversions and makes equality and enumeration exact.
//!
//! In that frame the crossing conditions collapse to: the two over semi-arcs
//! agree, and the outgoing under color is `in ^ over` or `in ^ over^-1`
//! according to the direction of the over-strand. Region colors satisfy
//! `left . x = right` across each semi-arc (sides taken along the direction
//! of travel).

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::group::XSetAction;
use crate::quandle::SymmetricQuandle;
use std::collections::BTreeMap;

/// Per-component choice of keeping or reversing the reference orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationChoice {
    reversed: Vec<bool>,
}

impl OrientationChoice {
    pub fn reference(n_components: usize) -> Self {
        OrientationChoice {
            reversed: vec![false; n_components],
        }
    }

    pub fn new(reversed: Vec<bool>) -> Self {
        OrientationChoice { reversed }
    }

    /// All `2^n` orientation choices, reference first.
    pub fn enumerate_all(n_components: usize) -> Vec<Self> {
        (0..1usize << n_components)
            .map(|mask| {
                OrientationChoice::new(
                    (0..n_components).map(|k| mask >> k & 1 == 1).collect(),
                )
            })
            .collect()
    }

    pub fn is_reversed(&self, component: usize) -> bool {
        self.reversed[component]
    }

    pub fn n_components(&self) -> usize {
        self.reversed.len()
    }
}

/// A canonical coloring: one quandle index per semi-arc (edge), one action
/// set index per region.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coloring {
    pub arcs: Vec<usize>,
    pub regions: Vec<usize>,
}

fn check_frame(d: &Diagram, frame: &OrientationChoice) -> Result<()> {
    if frame.n_components() != d.n_components() {
        return Err(Error::Invalid(format!(
            "orientation choice covers {} components, diagram has {}",
            frame.n_components(),
            d.n_components()
        )));
    }
    Ok(())
}

/// True when the over-strand at crossing `c` runs from slot 1 to slot 3 in
/// the given frame.
fn over_b_to_d(d: &Diagram, frame: &OrientationChoice, c: usize) -> bool {
    let over_edge = d.crossing_edges(c)[1];
    let reversed = frame.is_reversed(d.component_of_edge(over_edge));
    (d.over_in_slot(c) == 1) != reversed
}

/// Enumerates all canonical colorings in the reference frame, sorted.
/// `constraints` pins region colors by face index (the traced order).
pub fn enumerate_colorings(
    d: &Diagram,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    constraints: &BTreeMap<usize, usize>,
) -> Result<Vec<Coloring>> {
    enumerate_colorings_in_frame(
        d,
        sq,
        act,
        constraints,
        &OrientationChoice::reference(d.n_components()),
    )
}

/// Enumerates all colorings canonical with respect to the given orientation
/// choice. These are exactly the classical oriented colorings of the
/// correspondingly oriented diagram.
pub fn enumerate_colorings_in_frame(
    d: &Diagram,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    constraints: &BTreeMap<usize, usize>,
    frame: &OrientationChoice,
) -> Result<Vec<Coloring>> {
    check_frame(d, frame)?;
    for (&f, &y) in constraints {
        if f >= d.n_faces() {
            return Err(Error::InvalidFaceIndex {
                index: f,
                faces: d.n_faces(),
            });
        }
        if y >= act.y_size() {
            return Err(Error::EntryOutOfRange {
                value: y,
                n: act.y_size(),
            });
        }
    }
    let mut region_constraints: BTreeMap<usize, usize> = BTreeMap::new();
    for (&f, &y) in constraints {
        let r = d.region_of_face(f);
        if let Some(&prev) = region_constraints.get(&r) {
            if prev != y {
                return Ok(Vec::new());
            }
        }
        region_constraints.insert(r, y);
    }

    let arcs = vec![usize::MAX; d.n_edges()];
    let mut out = Vec::new();
    search_arcs(d, sq, act, frame, &region_constraints, &arcs, &mut out);
    out.sort();
    Ok(out)
}

/// Propagates crossing conditions; returns false on conflict.
fn propagate(
    d: &Diagram,
    sq: &SymmetricQuandle,
    frame: &OrientationChoice,
    arcs: &mut [usize],
) -> bool {
    loop {
        let mut changed = false;
        for c in 0..d.n_crossings() {
            let [ea, eb, ec, ed] = d.crossing_edges(c);
            // over semi-arcs agree
            match (arcs[eb], arcs[ed]) {
                (usize::MAX, usize::MAX) => {}
                (v, usize::MAX) => {
                    arcs[ed] = v;
                    changed = true;
                }
                (usize::MAX, v) => {
                    arcs[eb] = v;
                    changed = true;
                }
                (v, w) => {
                    if v != w {
                        return false;
                    }
                }
            }
            let xo = arcs[eb];
            if xo == usize::MAX {
                continue;
            }
            let forward = over_b_to_d(d, frame, c);
            let image = |x: usize| if forward { sq.op(x, xo) } else { sq.inv_op(x, xo) };
            let preimage = |x: usize| if forward { sq.inv_op(x, xo) } else { sq.op(x, xo) };
            match (arcs[ea], arcs[ec]) {
                (usize::MAX, usize::MAX) => {}
                (a, usize::MAX) => {
                    arcs[ec] = image(a);
                    changed = true;
                }
                (usize::MAX, cv) => {
                    arcs[ea] = preimage(cv);
                    changed = true;
                }
                (a, cv) => {
                    if image(a) != cv {
                        return false;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search_arcs(
    d: &Diagram,
    sq: &SymmetricQuandle,
    act: &XSetAction,
    frame: &OrientationChoice,
    region_constraints: &BTreeMap<usize, usize>,
    arcs: &[usize],
    out: &mut Vec<Coloring>,
) {
    let mut work = arcs.to_vec();
    if !propagate(d, sq, frame, &mut work) {
        return;
    }
    match (0..d.n_edges()).find(|&e| work[e] == usize::MAX) {
        None => {
            extend_regions(d, act, frame, region_constraints, &work, out);
        }
        Some(e) => {
            for color in 0..sq.order() {
                let mut next = work.clone();
                next[e] = color;
                search_arcs(d, sq, act, frame, region_constraints, &next, out);
            }
        }
    }
}

/// Given a full arc assignment, finds every consistent region assignment.
fn extend_regions(
    d: &Diagram,
    act: &XSetAction,
    frame: &OrientationChoice,
    region_constraints: &BTreeMap<usize, usize>,
    arcs: &[usize],
    out: &mut Vec<Coloring>,
) {
    let base = d.unbounded_region();
    let candidates: Vec<usize> = match region_constraints.get(&base) {
        Some(&y) => vec![y],
        None => (0..act.y_size()).collect(),
    };
    'candidate: for y0 in candidates {
        let mut regions = vec![usize::MAX; d.n_regions()];
        regions[base] = y0;
        // propagate across semi-arcs to a fixpoint
        loop {
            let mut changed = false;
            for e in 0..d.n_edges() {
                let x = arcs[e];
                let reversed = frame.is_reversed(d.component_of_edge(e));
                let (from, to) = if reversed {
                    (
                        d.region_of_face(d.right_face(e)),
                        d.region_of_face(d.left_face(e)),
                    )
                } else {
                    (
                        d.region_of_face(d.left_face(e)),
                        d.region_of_face(d.right_face(e)),
                    )
                };
                match (regions[from], regions[to]) {
                    (usize::MAX, usize::MAX) => {}
                    (v, usize::MAX) => {
                        regions[to] = act.act(v, x);
                        changed = true;
                    }
                    (usize::MAX, w) => {
                        regions[from] = act.inv_act(w, x);
                        changed = true;
                    }
                    (v, w) => {
                        if act.act(v, x) != w {
                            continue 'candidate;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        debug_assert!(
            regions.iter().all(|&r| r != usize::MAX),
            "region graph must be connected"
        );
        for (&r, &y) in region_constraints {
            if regions[r] != y {
                continue 'candidate;
            }
        }
        out.push(Coloring {
            arcs: arcs.to_vec(),
            regions,
        });
    }
}

/// Re-expresses a canonical coloring in the frame `o`: semi-arcs on reversed
/// components flip their normals, so their colors pass through `rho`.
/// Region colors are untouched. Applying the same choice twice is the
/// identity, and for fixed `o` this is a bijection between the two coloring
/// sets.
pub fn reorient(
    c: &Coloring,
    d: &Diagram,
    sq: &SymmetricQuandle,
    o: &OrientationChoice,
) -> Result<Coloring> {
    check_frame(d, o)?;
    let arcs = c
        .arcs
        .iter()
        .enumerate()
        .map(|(e, &x)| {
            if o.is_reversed(d.component_of_edge(e)) {
                sq.rho_of(x)
            } else {
                x
            }
        })
        .collect();
    Ok(Coloring {
        arcs,
        regions: c.regions.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::{braid_closure, parse_pd};
    use crate::quandle::{FiniteQuandle, Involution};

    fn r3_self() -> (SymmetricQuandle, XSetAction) {
        let sq =
            SymmetricQuandle::new(FiniteQuandle::dihedral(3), Involution::identity(3)).unwrap();
        let act = XSetAction::quandle_action(&sq);
        (sq, act)
    }

    fn t4_pairing() -> (SymmetricQuandle, XSetAction) {
        let sq = SymmetricQuandle::new(
            FiniteQuandle::trivial(4),
            Involution::new(vec![1, 0, 3, 2]).unwrap(),
        )
        .unwrap();
        let act = XSetAction::singleton(&sq);
        (sq, act)
    }

    #[test]
    fn trefoil_has_nine_colorings_with_pinned_base() {
        let d = crate::diagram::build_diagram(&braid_closure(2, &[1, 1, 1]).unwrap(), None)
            .unwrap();
        let (sq, act) = r3_self();
        let constraints = BTreeMap::from([(unbounded_face(&d), 0usize)]);
        let cols = enumerate_colorings(&d, &sq, &act, &constraints).unwrap();
        assert_eq!(cols.len(), 9);
        // and three times that without the constraint
        let cols = enumerate_colorings(&d, &sq, &act, &BTreeMap::new()).unwrap();
        assert_eq!(cols.len(), 27);
    }

    fn unbounded_face(d: &crate::diagram::Diagram) -> usize {
        (0..d.n_faces())
            .find(|&f| d.region_of_face(f) == d.unbounded_region())
            .unwrap()
    }

    #[test]
    fn torus_braids_have_sixteen_colorings_over_t4() {
        let (sq, act) = t4_pairing();
        for m in 1..=3 {
            let pd = braid_closure(2, &vec![1; 2 * m]).unwrap();
            let d = crate::diagram::build_diagram(&pd, None).unwrap();
            let cols = enumerate_colorings(&d, &sq, &act, &BTreeMap::new()).unwrap();
            assert_eq!(cols.len(), 16);
        }
    }

    #[test]
    fn zero_crossing_unknot_has_one_color_per_quandle_element() {
        let d = crate::diagram::build_diagram(&parse_pd("L 1").unwrap(), None).unwrap();
        for (sq, _) in [r3_self(), t4_pairing()] {
            let act = XSetAction::singleton(&sq);
            let cols = enumerate_colorings(&d, &sq, &act, &BTreeMap::new()).unwrap();
            assert_eq!(cols.len(), sq.order());
        }
    }

    #[test]
    fn fox_oracle_agrees_on_kei_diagrams_up_to_eight_crossings() {
        // brute force over assignments to the over-arcs, classical
        // unoriented condition x_in ^ x_over = x_out
        let (sq, act) = r3_self();
        for word in [
            vec![1, 1, 1],
            vec![1, 1],
            vec![1, -1, 1, -1],
            vec![1; 7],
            vec![1; 8],
            vec![1, -1, 1, 1, -1, 1, 1, 1],
        ] {
            let pd = braid_closure(2, &word).unwrap();
            let d = crate::diagram::build_diagram(&pd, None).unwrap();
            let constraints = BTreeMap::from([(unbounded_face(&d), 0usize)]);
            let ours = enumerate_colorings(&d, &sq, &act, &constraints)
                .unwrap()
                .len();
            let oracle = fox_count(&d, sq.quandle());
            assert_eq!(ours, oracle, "word {word:?}");
        }
    }

    /// Counts assignments of quandle elements to the over-arcs (semi-arcs
    /// glued across over-passes) satisfying the unoriented kei conditions,
    /// by exhaustive search over all |X|^arcs maps.
    fn fox_count(d: &crate::diagram::Diagram, q: &FiniteQuandle) -> usize {
        let e = d.n_edges();
        // glue the two over semi-arcs at each crossing
        let mut arc_of = (0..e).collect::<Vec<usize>>();
        fn root(arc_of: &mut [usize], mut a: usize) -> usize {
            while arc_of[a] != a {
                arc_of[a] = arc_of[arc_of[a]];
                a = arc_of[a];
            }
            a
        }
        for c in 0..d.n_crossings() {
            let [_, eb, _, ed] = d.crossing_edges(c);
            let (ra, rb) = (root(&mut arc_of, eb), root(&mut arc_of, ed));
            if ra != rb {
                arc_of[ra] = rb;
            }
        }
        let mut arc_ids = std::collections::BTreeMap::new();
        let mut arcs = vec![0usize; e];
        for edge in 0..e {
            let r = root(&mut arc_of, edge);
            let next = arc_ids.len();
            arcs[edge] = *arc_ids.entry(r).or_insert(next);
        }
        let n_arcs = arc_ids.len();

        let n = q.order();
        let mut count = 0usize;
        let mut assign = vec![0usize; n_arcs];
        'outer: loop {
            let ok = (0..d.n_crossings()).all(|c| {
                let [ea, eb, ec, _] = d.crossing_edges(c);
                q.op(assign[arcs[ea]], assign[arcs[eb]]) == assign[arcs[ec]]
            });
            if ok {
                count += 1;
            }
            for k in (0..n_arcs).rev() {
                assign[k] += 1;
                if assign[k] < n {
                    continue 'outer;
                }
                assign[k] = 0;
            }
            break;
        }
        count
    }

    #[test]
    fn reorient_is_an_involution_and_a_bijection() {
        let pd = braid_closure(2, &[1, 1]).unwrap(); // Hopf link, 2 components
        let d = crate::diagram::build_diagram(&pd, None).unwrap();
        let (sq, act) = t4_pairing();
        let cols = enumerate_colorings(&d, &sq, &act, &BTreeMap::new()).unwrap();
        for o in OrientationChoice::enumerate_all(d.n_components()) {
            let mut mapped: Vec<Coloring> = cols
                .iter()
                .map(|c| reorient(c, &d, &sq, &o).unwrap())
                .collect();
            for (c, m) in cols.iter().zip(mapped.iter()) {
                assert_eq!(&reorient(m, &d, &sq, &o).unwrap(), c);
            }
            // the image is exactly the coloring set of the reoriented frame
            let frame_cols =
                enumerate_colorings_in_frame(&d, &sq, &act, &BTreeMap::new(), &o).unwrap();
            mapped.sort();
            assert_eq!(mapped, frame_cols);
        }
    }

    #[test]
    fn reversing_nothing_is_the_identity() {
        let pd = braid_closure(2, &[1, 1, 1]).unwrap();
        let d = crate::diagram::build_diagram(&pd, None).unwrap();
        let (sq, act) = r3_self();
        let cols = enumerate_colorings(&d, &sq, &act, &BTreeMap::new()).unwrap();
        let o = OrientationChoice::reference(1);
        for c in &cols {
            assert_eq!(&reorient(c, &d, &sq, &o).unwrap(), c);
        }
    }
}
