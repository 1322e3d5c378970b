//! PD codes: the serialization format for link diagrams.
//!
//! Each crossing record `X[a,b,c,d]` lists the four incident edge labels
//! counterclockwise starting from the incoming under-edge; `L a` records a
//! crossing-free loop component. Labels are positive integers, each appearing
//! exactly twice across crossing records (once for loops), increasing
//! cyclically along every component.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// One crossing: edge labels at slots `a, b, c, d` in counterclockwise
/// order, slot 0 being the incoming under-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PdCrossing {
    pub labels: [usize; 4],
}

/// A parsed PD code: crossings plus crossing-free loop records.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PdCode {
    pub crossings: Vec<PdCrossing>,
    pub loops: Vec<usize>,
}

impl PdCode {
    /// All distinct edge labels in ascending order.
    pub fn labels(&self) -> Vec<usize> {
        let mut set = std::collections::BTreeSet::new();
        for c in &self.crossings {
            set.extend(c.labels.iter().copied());
        }
        set.extend(self.loops.iter().copied());
        set.into_iter().collect()
    }
}

impl std::fmt::Display for PdCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                format!(
                    "X[{},{},{},{}]",
                    c.labels[0], c.labels[1], c.labels[2], c.labels[3]
                )
            })
            .collect();
        parts.extend(self.loops.iter().map(|l| format!("L[{l}]")));
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses PD text: `X a b c d` or `X[a,b,c,d]` records, `L a` loops, `#`
/// comments, free whitespace. Checks that every crossing label appears
/// exactly twice and loop labels once.
pub fn parse_pd(text: &str) -> Result<PdCode> {
    let mut tokens: Vec<(usize, String)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let cleaned: String = line
            .chars()
            .map(|ch| if ch == '[' || ch == ']' || ch == ',' { ' ' } else { ch })
            .collect();
        for tok in cleaned.split_whitespace() {
            tokens.push((lineno + 1, tok.to_string()));
        }
    }

    let mut code = PdCode::default();
    let mut i = 0;
    let parse_label = |tok: &(usize, String)| -> Result<usize> {
        let v: usize = tok
            .1
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: expected edge label, got '{}'", tok.0, tok.1)))?;
        if v == 0 {
            return Err(Error::Parse(format!(
                "line {}: edge labels are positive integers",
                tok.0
            )));
        }
        Ok(v)
    };
    while i < tokens.len() {
        let (lineno, tok) = &tokens[i];
        match tok.as_str() {
            "X" => {
                if i + 4 >= tokens.len() {
                    return Err(Error::Parse(format!(
                        "line {lineno}: crossing record needs four labels"
                    )));
                }
                let mut labels = [0usize; 4];
                for (k, slot) in labels.iter_mut().enumerate() {
                    *slot = parse_label(&tokens[i + 1 + k])?;
                }
                code.crossings.push(PdCrossing { labels });
                i += 5;
            }
            "L" => {
                if i + 1 >= tokens.len() {
                    return Err(Error::Parse(format!(
                        "line {lineno}: loop record needs one label"
                    )));
                }
                code.loops.push(parse_label(&tokens[i + 1])?);
                i += 2;
            }
            other => {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected 'X' or 'L' record, got '{other}'"
                )));
            }
        }
    }

    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &code.crossings {
        for &l in &c.labels {
            *counts.entry(l).or_insert(0) += 1;
        }
    }
    for (&label, &count) in &counts {
        if count != 2 {
            return Err(Error::LabelCount { label, count });
        }
    }
    for &l in &code.loops {
        let seen = counts.contains_key(&l) || code.loops.iter().filter(|&&x| x == l).count() > 1;
        if seen {
            return Err(Error::LabelCount {
                label: l,
                count: 2,
            });
        }
    }
    Ok(code)
}

/// Builds the PD code of the closure of a braid word on `strands` strands.
/// Letters are `+i` / `-i` for the positive / negative crossing of strands
/// `i` and `i+1` (1-based, `i < strands`). In a positive crossing the strand
/// entering at the lower-left passes over.
///
/// Strands run upward and close off to the right; edge labels are assigned
/// so that they increase cyclically along each component, as the PD
/// convention requires.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<PdCode> {
    if strands < 1 {
        return Err(Error::Invalid("braid needs at least one strand".into()));
    }
    for &w in word {
        let i = w.unsigned_abs() as usize;
        if w == 0 || i + 1 > strands {
            return Err(Error::Invalid(format!(
                "braid letter {w} out of range for {strands} strands"
            )));
        }
    }
    let rows = word.len();
    // segments[r][p]: id of the vertical segment at position p between row
    // r-1 and row r crossings; row 0 is identified with row `rows` by closure
    let mut next_seg = 0usize;
    let mut seg_id = vec![vec![usize::MAX; strands]; rows + 1];
    for p in 0..strands {
        seg_id[0][p] = next_seg;
        next_seg += 1;
    }
    for (r, &w) in word.iter().enumerate() {
        let i = (w.unsigned_abs() as usize) - 1;
        for p in 0..strands {
            if p == i || p == i + 1 {
                seg_id[r + 1][p] = next_seg;
                next_seg += 1;
            } else {
                seg_id[r + 1][p] = seg_id[r][p];
            }
        }
    }
    // closure identifies top with bottom
    let mut parent: Vec<usize> = (0..next_seg).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    for p in 0..strands {
        let (a, b) = (seg_id[rows][p], seg_id[0][p]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    // edge = equivalence class of segments
    let mut edge_of_seg = vec![usize::MAX; next_seg];
    let mut n_edges = 0;
    for s in 0..next_seg {
        let r = find(&mut parent, s);
        if edge_of_seg[r] == usize::MAX {
            edge_of_seg[r] = n_edges;
            n_edges += 1;
        }
        edge_of_seg[s] = edge_of_seg[r];
    }

    // crossing incidences in grid terms; orientation is upward everywhere
    struct GridCrossing {
        bl: usize,
        br: usize,
        tl: usize,
        tr: usize,
        positive: bool,
    }
    let mut crossings = Vec::with_capacity(rows);
    for (r, &w) in word.iter().enumerate() {
        let i = (w.unsigned_abs() as usize) - 1;
        crossings.push(GridCrossing {
            bl: edge_of_seg[seg_id[r][i]],
            br: edge_of_seg[seg_id[r][i + 1]],
            tl: edge_of_seg[seg_id[r + 1][i]],
            tr: edge_of_seg[seg_id[r + 1][i + 1]],
            positive: w > 0,
        });
    }

    // successor along the strand: bottom edge continues into the
    // diagonally-opposite top edge of its crossing; untouched positions keep
    // the same edge (already merged by seg identity)
    let mut successor = vec![usize::MAX; n_edges];
    for c in &crossings {
        successor[c.bl] = c.tr;
        successor[c.br] = c.tl;
    }
    for e in 0..n_edges {
        if successor[e] == usize::MAX {
            successor[e] = e; // crossing-free loop component
        }
    }

    // assign labels: walk each component along the strand order
    let mut label = vec![0usize; n_edges];
    let mut next_label = 1usize;
    let mut loops = Vec::new();
    let mut visited = vec![false; n_edges];
    for start in 0..n_edges {
        if visited[start] {
            continue;
        }
        if successor[start] == start {
            visited[start] = true;
            loops.push(next_label);
            label[start] = next_label;
            next_label += 1;
            continue;
        }
        let mut e = start;
        while !visited[e] {
            visited[e] = true;
            label[e] = next_label;
            next_label += 1;
            e = successor[e];
        }
    }

    // emit PD records; slots CCW from the incoming under-edge
    let mut code = PdCode { crossings: Vec::new(), loops };
    for c in &crossings {
        let labels = if c.positive {
            // under strand runs BR -> TL; CCW from BR: TR, TL, BL
            [label[c.br], label[c.tr], label[c.tl], label[c.bl]]
        } else {
            // under strand runs BL -> TR; CCW from BL: BR, TR, TL
            [label[c.bl], label[c.br], label[c.tr], label[c.tl]]
        };
        code.crossings.push(PdCrossing { labels });
    }
    Ok(code)
}
