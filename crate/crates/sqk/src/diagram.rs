//! Planar diagrams built from PD codes.
//!
//! A PD code determines a 4-valent graph with a rotation system (the
//! counterclockwise slot order at each crossing). This module orients every
//! component (labels must increase cyclically, under-strands enter at slot 0
//! and leave at slot 2), traces the faces, verifies planarity per connected
//! piece, and fixes which face is unbounded. Split diagrams live side by
//! side: each piece's outer face is merged into one unbounded region.
//!
//! Reference orientations and the slot order encode everything geometric the
//! coloring and weight rules need: an edge traversed forward has the traced
//! face of its forward dart on its left, and the canonical normal of a
//! semi-arc points to its right.

use crate::error::{Error, Result};
use crate::pd::PdCode;

/// A directed traversal of an edge: forward means tail to head with respect
/// to the reference orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

/// Where an edge lives: its two crossing ends (tail first), or a free loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeEnds {
    /// `(crossing, slot)` of the tail (departure) and head (arrival).
    Crossing {
        tail: (usize, usize),
        head: (usize, usize),
    },
    Loop,
}

/// A built diagram: oriented edges, traced faces, merged regions, signs.
#[derive(Debug, Clone)]
pub struct Diagram {
    /// Original labels, indexed by dense edge id.
    edge_labels: Vec<usize>,
    /// Edge ids at the four slots of each crossing.
    crossing_edges: Vec<[usize; 4]>,
    /// Tail/head data per edge.
    edge_ends: Vec<EdgeEnds>,
    /// Slot (1 or 3) where the over-strand arrives, per crossing.
    over_in_slot: Vec<usize>,
    /// Link component of each edge.
    component_of_edge: Vec<usize>,
    /// Edge ids of each link component in strand order.
    components: Vec<Vec<usize>>,
    /// Traced faces as dart lists, in traced order.
    faces: Vec<Vec<Dart>>,
    /// Face id on the left of each edge's forward dart.
    left_face: Vec<usize>,
    /// Face id on the left of each edge's backward dart.
    right_face: Vec<usize>,
    /// Region id of each face after outer-face merging.
    region_of_face: Vec<usize>,
    region_count: usize,
    unbounded_region: usize,
    /// Crossing signs under the reference orientation.
    signs: Vec<i8>,
}

/// Builds a diagram from a PD code. `unbounded_face`, when given, selects
/// the unbounded face by traced index; by default each connected piece uses
/// its face with the most sides (ties to the lowest index).
pub fn build_diagram(pd: &PdCode, unbounded_face: Option<usize>) -> Result<Diagram> {
    let edge_labels = pd.labels();
    let edge_of_label: std::collections::BTreeMap<usize, usize> = edge_labels
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i))
        .collect();
    let n_edges = edge_labels.len();
    let n_crossings = pd.crossings.len();

    let crossing_edges: Vec<[usize; 4]> = pd
        .crossings
        .iter()
        .map(|c| {
            let mut e = [0usize; 4];
            for (s, &l) in c.labels.iter().enumerate() {
                e[s] = edge_of_label[&l];
            }
            e
        })
        .collect();

    // the two (crossing, slot) occurrences of each edge, in record order
    let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_edges];
    for (c, edges) in crossing_edges.iter().enumerate() {
        for (s, &e) in edges.iter().enumerate() {
            occurrences[e].push((c, s));
        }
    }
    let is_loop: Vec<bool> = (0..n_edges).map(|e| occurrences[e].is_empty()).collect();

    // orient components by walking strand continuations (slot 0 <-> 2,
    // slot 1 <-> 3); the direction is pinned by the under-slot convention
    // and the cyclic label order
    let mut head_end = vec![usize::MAX; n_edges]; // index into occurrences
    let mut component_of_edge = vec![usize::MAX; n_edges];
    let mut components: Vec<Vec<usize>> = Vec::new();

    let walk = |start: usize, start_target: usize| -> (Vec<(usize, usize)>, usize) {
        // returns the (edge, target-end) sequence and a violation count
        let mut seq = Vec::new();
        let mut violations = 0usize;
        let mut cur = (start, start_target);
        loop {
            seq.push(cur);
            let (c, s) = occurrences[cur.0][cur.1];
            if s == 2 {
                violations += 1; // arrival at the under-out slot
            }
            let s_next = (s + 2) % 4;
            if s_next == 0 {
                violations += 1; // departure from the under-in slot
            }
            let e_next = crossing_edges[c][s_next];
            let target = if occurrences[e_next][0] == (c, s_next) {
                1
            } else {
                0
            };
            cur = (e_next, target);
            if cur == (start, start_target) {
                break;
            }
        }
        (seq, violations)
    };

    // labels along the strand must be cyclically increasing
    let labels_ok = |seq: &[(usize, usize)]| -> bool {
        let labels: Vec<usize> = seq.iter().map(|&(e, _)| edge_labels[e]).collect();
        let min_pos = labels
            .iter()
            .enumerate()
            .min_by_key(|&(_, l)| l)
            .map(|(i, _)| i)
            .unwrap();
        (0..labels.len().saturating_sub(1))
            .all(|k| labels[(min_pos + k) % labels.len()] < labels[(min_pos + k + 1) % labels.len()])
    };
    for e0 in 0..n_edges {
        if component_of_edge[e0] != usize::MAX || is_loop[e0] {
            continue;
        }
        let mut chosen = None;
        for target in [1, 0] {
            let (seq, violations) = walk(e0, target);
            if violations == 0 && labels_ok(&seq) {
                chosen = Some(seq);
                break;
            }
        }
        let chosen = chosen.ok_or(Error::OrientationInconsistency {
            label: edge_labels[e0],
        })?;
        let comp_id = components.len();
        let mut comp_edges = Vec::with_capacity(chosen.len());
        for &(e, t) in &chosen {
            head_end[e] = t;
            component_of_edge[e] = comp_id;
            comp_edges.push(e);
        }
        components.push(comp_edges);
    }
    for e in 0..n_edges {
        if is_loop[e] {
            let comp_id = components.len();
            component_of_edge[e] = comp_id;
            components.push(vec![e]);
        }
    }

    let edge_ends: Vec<EdgeEnds> = (0..n_edges)
        .map(|e| {
            if is_loop[e] {
                EdgeEnds::Loop
            } else {
                EdgeEnds::Crossing {
                    tail: occurrences[e][1 - head_end[e]],
                    head: occurrences[e][head_end[e]],
                }
            }
        })
        .collect();

    // over-strand arrival slot and crossing signs
    let mut over_in_slot = vec![0usize; n_crossings];
    let mut signs = vec![0i8; n_crossings];
    for c in 0..n_crossings {
        let eb = crossing_edges[c][1];
        let ed = crossing_edges[c][3];
        let b_is_head = matches!(edge_ends[eb], EdgeEnds::Crossing { head, .. } if head == (c, 1));
        let d_is_head = matches!(edge_ends[ed], EdgeEnds::Crossing { head, .. } if head == (c, 3));
        over_in_slot[c] = match (b_is_head, d_is_head) {
            (true, false) => 1,
            (false, true) => 3,
            _ => {
                return Err(Error::OrientationInconsistency {
                    label: edge_labels[eb],
                })
            }
        };
        signs[c] = if over_in_slot[c] == 3 { 1 } else { -1 };
    }

    // face tracing: arrive at a slot, depart via the next slot clockwise
    let n_darts = 2 * n_edges;
    let dart_head = |d: usize| -> Option<(usize, usize)> {
        let (e, fwd) = (d / 2, d % 2 == 0);
        match edge_ends[e] {
            EdgeEnds::Loop => None,
            EdgeEnds::Crossing { tail, head } => Some(if fwd { head } else { tail }),
        }
    };
    let mut face_of_dart = vec![usize::MAX; n_darts];
    let mut faces: Vec<Vec<Dart>> = Vec::new();
    for d0 in 0..n_darts {
        if face_of_dart[d0] != usize::MAX {
            continue;
        }
        let face_id = faces.len();
        let mut darts = Vec::new();
        let mut d = d0;
        loop {
            face_of_dart[d] = face_id;
            darts.push(Dart {
                edge: d / 2,
                forward: d % 2 == 0,
            });
            let next = match dart_head(d) {
                None => d, // loop edge: the single dart closes its own face
                Some((c, s)) => {
                    let s_dep = (s + 3) % 4;
                    let e_dep = crossing_edges[c][s_dep];
                    let fwd = matches!(
                        edge_ends[e_dep],
                        EdgeEnds::Crossing { tail, .. } if tail == (c, s_dep)
                    );
                    2 * e_dep + if fwd { 0 } else { 1 }
                }
            };
            if next == d0 {
                break;
            }
            d = next;
        }
        faces.push(darts);
    }
    let n_faces = faces.len();

    // connected pieces of the 4-valent graph, for Euler checks and outer
    // face merging
    let mut piece_parent: Vec<usize> = (0..n_crossings + n_edges).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    // nodes: crossings 0..n_crossings, then edges (only loops stay separate)
    for e in 0..n_edges {
        if let EdgeEnds::Crossing { tail, head } = edge_ends[e] {
            for node in [tail.0, head.0, n_crossings + e] {
                let (ra, rb) = (
                    find(&mut piece_parent, node),
                    find(&mut piece_parent, n_crossings + e),
                );
                if ra != rb {
                    piece_parent[ra] = rb;
                }
            }
        }
    }
    let piece_of_edge: Vec<usize> = (0..n_edges)
        .map(|e| find(&mut piece_parent, n_crossings + e))
        .collect();
    let piece_of_face: Vec<usize> = faces
        .iter()
        .map(|darts| piece_of_edge[darts[0].edge])
        .collect();

    // Euler check per piece with crossings
    {
        use std::collections::BTreeMap;
        let mut v_count: BTreeMap<usize, usize> = BTreeMap::new();
        let mut e_count: BTreeMap<usize, usize> = BTreeMap::new();
        let mut f_count: BTreeMap<usize, usize> = BTreeMap::new();
        for c in 0..n_crossings {
            *v_count.entry(find(&mut piece_parent, c)).or_insert(0) += 1;
        }
        for e in 0..n_edges {
            *e_count.entry(piece_of_edge[e]).or_insert(0) += 1;
        }
        for f in 0..n_faces {
            *f_count.entry(piece_of_face[f]).or_insert(0) += 1;
        }
        for (&piece, &v) in &v_count {
            let e = e_count.get(&piece).copied().unwrap_or(0);
            let f = f_count.get(&piece).copied().unwrap_or(0);
            if v + f != e + 2 {
                return Err(Error::NonPlanar {
                    vertices: v,
                    edges: e,
                    faces: f,
                });
            }
        }
    }

    // choose each piece's outer face, honoring an explicit override
    if let Some(f) = unbounded_face {
        if f >= n_faces {
            return Err(Error::InvalidFaceIndex {
                index: f,
                faces: n_faces,
            });
        }
    }
    use std::collections::BTreeMap;
    let mut outer_of_piece: BTreeMap<usize, usize> = BTreeMap::new();
    for f in 0..n_faces {
        let piece = piece_of_face[f];
        let better = match outer_of_piece.get(&piece) {
            None => true,
            Some(&cur) => faces[f].len() > faces[cur].len(),
        };
        if better {
            outer_of_piece.insert(piece, f);
        }
    }
    if let Some(f) = unbounded_face {
        outer_of_piece.insert(piece_of_face[f], f);
    }

    // merge all outer faces into one region
    let mut region_parent: Vec<usize> = (0..n_faces).collect();
    let outers: Vec<usize> = outer_of_piece.values().copied().collect();
    for &f in &outers[1..] {
        let (ra, rb) = (
            find(&mut region_parent, outers[0]),
            find(&mut region_parent, f),
        );
        if ra != rb {
            region_parent[rb] = ra;
        }
    }
    let mut region_of_face = vec![usize::MAX; n_faces];
    let mut region_count = 0usize;
    for f in 0..n_faces {
        let root = find(&mut region_parent, f);
        if region_of_face[root] == usize::MAX {
            region_of_face[root] = region_count;
            region_count += 1;
        }
        region_of_face[f] = region_of_face[root];
    }
    let unbounded_region = region_of_face[outers[0]];

    let left_face: Vec<usize> = (0..n_edges).map(|e| face_of_dart[2 * e]).collect();
    let right_face: Vec<usize> = (0..n_edges).map(|e| face_of_dart[2 * e + 1]).collect();

    Ok(Diagram {
        edge_labels,
        crossing_edges,
        edge_ends,
        over_in_slot,
        component_of_edge,
        components,
        faces,
        left_face,
        right_face,
        region_of_face,
        region_count,
        unbounded_region,
        signs,
    })
}

impl Diagram {
    pub fn n_crossings(&self) -> usize {
        self.crossing_edges.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn n_regions(&self) -> usize {
        self.region_count
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &Vec<Vec<usize>> {
        &self.components
    }

    pub fn component_of_edge(&self, e: usize) -> usize {
        self.component_of_edge[e]
    }

    pub fn edge_label(&self, e: usize) -> usize {
        self.edge_labels[e]
    }

    pub fn crossing_edges(&self, c: usize) -> [usize; 4] {
        self.crossing_edges[c]
    }

    /// Slot (1 or 3) where the over-strand arrives under the reference
    /// orientation.
    pub fn over_in_slot(&self, c: usize) -> usize {
        self.over_in_slot[c]
    }

    pub fn edge_ends(&self, e: usize) -> EdgeEnds {
        self.edge_ends[e]
    }

    pub fn faces(&self) -> &Vec<Vec<Dart>> {
        &self.faces
    }

    /// Face on the left when traversing the edge forward.
    pub fn left_face(&self, e: usize) -> usize {
        self.left_face[e]
    }

    /// Face on the right when traversing the edge forward.
    pub fn right_face(&self, e: usize) -> usize {
        self.right_face[e]
    }

    pub fn region_of_face(&self, f: usize) -> usize {
        self.region_of_face[f]
    }

    pub fn unbounded_region(&self) -> usize {
        self.unbounded_region
    }

    /// Crossing sign with respect to the reference orientation.
    pub fn sign(&self, c: usize) -> i8 {
        self.signs[c]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// The face filling the sector counterclockwise of the given slot's ray
    /// (between slot and slot+1): the face left of the dart departing via
    /// that slot.
    pub fn sector_face(&self, c: usize, slot: usize) -> usize {
        let e = self.crossing_edges[c][slot];
        let forward = matches!(
            self.edge_ends[e],
            EdgeEnds::Crossing { tail, .. } if tail == (c, slot)
        );
        if forward {
            self.left_face[e]
        } else {
            self.right_face[e]
        }
    }

    /// Link components of the under and over strands at a crossing.
    pub fn crossing_components(&self, c: usize) -> (usize, usize) {
        (
            self.component_of_edge[self.crossing_edges[c][0]],
            self.component_of_edge[self.crossing_edges[c][1]],
        )
    }

    /// Signed linking number of a 2-component diagram: half the signed count
    /// of crossings between the two components, under the reference
    /// orientation. `None` unless there are exactly two components.
    pub fn linking_number(&self) -> Option<i64> {
        if self.components.len() != 2 {
            return None;
        }
        let mut sum = 0i64;
        for c in 0..self.n_crossings() {
            let (under, over) = self.crossing_components(c);
            if under != over {
                sum += self.signs[c] as i64;
            }
        }
        Some(sum / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::{braid_closure, parse_pd};

    fn trefoil() -> PdCode {
        braid_closure(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn trefoil_has_five_faces_and_euler_two() {
        let d = build_diagram(&trefoil(), None).unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.n_edges(), 6);
        assert_eq!(d.n_faces(), 5);
        assert_eq!(d.n_components(), 1);
        assert_eq!(d.writhe(), 3);
        assert!(d.signs.iter().all(|&s| s == 1));
    }

    #[test]
    fn hopf_link_has_four_faces() {
        let pd = parse_pd("X[1,3,2,4] X[3,1,4,2]").unwrap();
        let d = build_diagram(&pd, None).unwrap();
        assert_eq!(d.n_faces(), 4);
        assert_eq!(d.n_components(), 2);
        assert_eq!(d.linking_number(), Some(1));
    }

    #[test]
    fn braid_closure_hopf_has_linking_number_one() {
        let pd = braid_closure(2, &[1, 1]).unwrap();
        let d = build_diagram(&pd, None).unwrap();
        assert_eq!(d.linking_number(), Some(1));
        let pd = braid_closure(2, &[-1, -1]).unwrap();
        let d = build_diagram(&pd, None).unwrap();
        assert_eq!(d.linking_number(), Some(-1));
    }

    #[test]
    fn each_edge_borders_two_faces() {
        let d = build_diagram(&trefoil(), None).unwrap();
        for e in 0..d.n_edges() {
            assert!(d.left_face(e) < d.n_faces());
            assert!(d.right_face(e) < d.n_faces());
            assert_ne!(d.left_face(e), d.right_face(e), "trefoil has no 1-sided faces");
        }
    }

    #[test]
    fn nonplanar_codes_are_rejected() {
        // a rotation system of genus one: three mutually-crossing circles
        let pd = parse_pd("X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]").unwrap();
        assert!(matches!(
            build_diagram(&pd, None),
            Err(Error::NonPlanar { .. })
        ));
    }

    #[test]
    fn explicit_unbounded_face_is_honored() {
        let d1 = build_diagram(&trefoil(), Some(1)).unwrap();
        assert_eq!(d1.region_of_face(1), d1.unbounded_region());
        assert!(matches!(
            build_diagram(&trefoil(), Some(99)),
            Err(Error::InvalidFaceIndex { .. })
        ));
    }

    #[test]
    fn split_diagrams_share_the_outer_region() {
        let pd = parse_pd("L 1\nL 2").unwrap();
        let d = build_diagram(&pd, None).unwrap();
        assert_eq!(d.n_faces(), 4);
        // two inner regions plus the shared outer one
        assert_eq!(d.n_regions(), 3);
        assert_eq!(d.n_components(), 2);
    }

    #[test]
    fn kink_diagram_builds() {
        let pd = parse_pd("X[1,1,2,2]").unwrap();
        let d = build_diagram(&pd, None).unwrap();
        assert_eq!(d.n_faces(), 3);
        assert_eq!(d.n_components(), 1);
        assert_eq!(d.writhe().abs(), 1);
    }
}
