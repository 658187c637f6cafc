//! Planar diagrams and the realization of DT codes.
//!
//! A [`PlanarDiagram`] lists, for every crossing, its four incident edges in
//! counterclockwise order starting from the incoming under edge (the usual
//! PD convention). The over strand therefore occupies positions 1 and 3;
//! the crossing sign records which way it runs: `+1` when it enters at 3 and
//! leaves at 1, `-1` the other way round.
//!
//! Diagrams built here number their edges along the knot: edge `k` is the
//! arc arriving at passage `k` of the underlying Gauss code.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::braid::{closure_passages, BraidError, BraidWord};
use crate::codes::{dt_to_gauss, gauss_to_dt, interlaced, DTCode, GaussCode, Passage, Role};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("DT code {0} is not realizable by a planar diagram")]
    NotRealizable(String),
    #[error("edge {edge} appears {count} times (expected 2)")]
    EdgeMultiplicity { edge: usize, count: usize },
    #[error("edge {0} is out of range")]
    EdgeRange(usize),
    #[error("edge {0} must enter one crossing and leave another")]
    Orientation(usize),
    #[error("crossing sign must be +1 or -1, got {0}")]
    Sign(i8),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    /// Counterclockwise, starting at the incoming under edge.
    pub edges: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    /// Rotation positions of the over strand.
    pub const OVER: [usize; 2] = [1, 3];

    /// Rotation positions at which the knot enters this crossing.
    fn incoming(&self) -> [usize; 2] {
        if self.sign > 0 { [0, 3] } else { [0, 1] }
    }

    fn mirrored(&self) -> Crossing {
        let [a, b, c, d] = self.edges;
        if self.sign > 0 {
            Crossing { edges: [d, a, b, c], sign: -1 }
        } else {
            Crossing { edges: [b, c, d, a], sign: 1 }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
}

impl PlanarDiagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        PlanarDiagram { crossings: Vec::new() }
    }

    /// Validate and wrap raw crossings. Edge ids must be `0..2c`, each used
    /// twice, once entering and once leaving a crossing.
    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self, EmbedError> {
        let n = 2 * crossings.len();
        let mut heads = vec![0usize; n];
        let mut tails = vec![0usize; n];
        for x in &crossings {
            if x.sign != 1 && x.sign != -1 {
                return Err(EmbedError::Sign(x.sign));
            }
            let inc = x.incoming();
            for (j, &e) in x.edges.iter().enumerate() {
                if e >= n {
                    return Err(EmbedError::EdgeRange(e));
                }
                if inc.contains(&j) {
                    heads[e] += 1;
                } else {
                    tails[e] += 1;
                }
            }
        }
        for e in 0..n {
            if heads[e] + tails[e] != 2 {
                return Err(EmbedError::EdgeMultiplicity { edge: e, count: heads[e] + tails[e] });
            }
            if heads[e] != 1 {
                return Err(EmbedError::Orientation(e));
            }
        }
        Ok(PlanarDiagram { crossings })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign as i64).sum()
    }

    /// Swap over and under everywhere.
    pub fn mirror(&self) -> PlanarDiagram {
        PlanarDiagram { crossings: self.crossings.iter().map(Crossing::mirrored).collect() }
    }

    /// Faces of the underlying 4-valent graph under this rotation system.
    pub fn face_count(&self) -> usize {
        let c = self.crossings.len();
        if c == 0 {
            return 2;
        }
        // slot = 4 * crossing + position
        let mut ends = vec![Vec::with_capacity(2); 2 * c];
        for (i, x) in self.crossings.iter().enumerate() {
            for (j, &e) in x.edges.iter().enumerate() {
                ends[e].push(4 * i + j);
            }
        }
        let across = |s: usize| {
            let e = self.crossings[s / 4].edges[s % 4];
            let [u, v] = [ends[e][0], ends[e][1]];
            if u == s { v } else { u }
        };
        let mut seen = vec![false; 4 * c];
        let mut faces = 0;
        for start in 0..4 * c {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                let t = across(s);
                s = 4 * (t / 4) + (t % 4 + 1) % 4;
            }
        }
        faces
    }

    /// Walk the knot starting along `start_edge`, naming crossings by their
    /// index here plus one.
    ///
    /// # Panics
    /// If the diagram has no crossings or `start_edge` is out of range.
    pub fn gauss_code(&self, start_edge: usize) -> GaussCode {
        let n = self.edge_count();
        assert!(start_edge < n, "edge {start_edge} out of range");
        let mut head = vec![(0usize, 0usize); n];
        for (i, x) in self.crossings.iter().enumerate() {
            for j in x.incoming() {
                head[x.edges[j]] = (i, j);
            }
        }
        let mut e = start_edge;
        let mut passages = Vec::with_capacity(n);
        for _ in 0..n {
            let (i, j) = head[e];
            let role = if j == 0 { Role::Under } else { Role::Over };
            passages.push(Passage::new(i as u32 + 1, role));
            e = self.crossings[i].edges[(j + 2) % 4];
        }
        GaussCode::new(passages).expect("a valid diagram traverses to a valid Gauss code")
    }

    /// DT code read from edge 0.
    pub fn dt_code(&self) -> DTCode {
        gauss_to_dt(&self.gauss_code(0)).expect("planar diagrams satisfy DT parity")
    }
}

/// Build crossings from a Gauss code and a projection orientation per
/// crossing. `orientation[x]` is `+1` when the second passage of crossing
/// `x + 1` crosses the first from its right to its left.
pub fn diagram_from_passages(code: &GaussCode, orientation: &[i8]) -> PlanarDiagram {
    let n = code.len();
    let crossings = code
        .positions()
        .iter()
        .zip(orientation)
        .map(|(&(p, q), &eps)| {
            let (in_p, out_p, in_q, out_q) = (p, (p + 1) % n, q, (q + 1) % n);
            let first_under = code.passages()[p].role == Role::Under;
            let (edges, sign) = match (first_under, eps > 0) {
                (true, true) => ([in_p, in_q, out_p, out_q], -1),
                (true, false) => ([in_p, out_q, out_p, in_q], 1),
                (false, true) => ([in_q, out_p, out_q, in_p], 1),
                (false, false) => ([in_q, in_p, out_q, out_p], -1),
            };
            Crossing { edges, sign }
        })
        .collect();
    PlanarDiagram { crossings }
}

/// Projection orientations forced by the interlacement graph.
///
/// For interlaced crossings `a`, `b` with first passages at `p_a`, `p_b`, the
/// orientations agree exactly when the number of crossings interlaced with
/// both, plus `|p_a - p_b|`, is odd. Each connected component
/// of the interlacement graph is anchored at its smallest crossing. Returns
/// `None` when the constraints are inconsistent.
fn interlacement_orientation(code: &GaussCode) -> Option<Vec<i8>> {
    let pos = code.positions();
    let c = pos.len();
    let adj: Vec<Vec<bool>> = (0..c)
        .map(|i| (0..c).map(|j| i != j && interlaced(pos[i], pos[j])).collect())
        .collect();
    let mut eps = vec![0i8; c];
    for root in 0..c {
        if eps[root] != 0 {
            continue;
        }
        eps[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for b in 0..c {
                if !adj[a][b] {
                    continue;
                }
                let common = (0..c).filter(|&k| adj[a][k] && adj[b][k]).count();
                let gap = pos[a].0.abs_diff(pos[b].0);
                let want = if (common + gap) % 2 == 1 { eps[a] } else { -eps[a] };
                if eps[b] == 0 {
                    eps[b] = want;
                    queue.push_back(b);
                } else if eps[b] != want {
                    return None;
                }
            }
        }
    }
    Some(eps)
}

fn realize_gauss(code: &GaussCode) -> Option<PlanarDiagram> {
    let eps = interlacement_orientation(code)?;
    let pd = diagram_from_passages(code, &eps);
    (pd.face_count() == code.crossings() + 2).then_some(pd)
}

/// Whether the Gauss code is the code of some planar knot projection.
pub fn is_realizable(code: &GaussCode) -> bool {
    realize_gauss(code).is_some()
}

/// A planar diagram whose traversal from edge 0 reproduces `code`.
///
/// DT codes fix a prime diagram only up to mirror image; the embedding is
/// chosen so that crossing 1 (the one owning label 1) is positive. When the
/// interlacement graph is disconnected (a connected sum) the code does not
/// say how each summand is reflected, and every class is drawn with its
/// smallest crossing oriented the same way.
pub fn realize(code: &DTCode) -> Result<PlanarDiagram, EmbedError> {
    let g = dt_to_gauss(code);
    let pd = realize_gauss(&g).ok_or_else(|| EmbedError::NotRealizable(code.to_string()))?;
    if pd.crossings[0].sign < 0 {
        let eps: Vec<i8> = interlacement_orientation(&g).unwrap().iter().map(|e| -e).collect();
        return Ok(diagram_from_passages(&g, &eps));
    }
    Ok(pd)
}

/// The standard diagram of a braid closure.
pub fn pd_from_braid(word: &BraidWord) -> Result<PlanarDiagram, EmbedError> {
    if word.strands() == 1 && word.is_empty() {
        return Ok(PlanarDiagram::unknot());
    }
    let passages = closure_passages(word)?;
    let mut ids = vec![0u32; word.len()];
    let mut first_descends = vec![false; word.len()];
    let mut next = 1;
    let code: Vec<Passage> = passages
        .iter()
        .map(|p| {
            if ids[p.letter] == 0 {
                ids[p.letter] = next;
                first_descends[p.letter] = p.descending;
                next += 1;
            }
            Passage::new(ids[p.letter], p.role)
        })
        .collect();
    let g = GaussCode::new(code).expect("closure passages form a Gauss code");
    // With the braid drawn left to right, a descending strand crossed by an
    // ascending one is crossed from its right to its left.
    let mut eps = vec![0i8; word.len()];
    for (letter, &id) in ids.iter().enumerate() {
        eps[id as usize - 1] = if first_descends[letter] { 1 } else { -1 };
    }
    Ok(diagram_from_passages(&g, &eps))
}

/// Sum of crossing signs.
pub fn writhe(pd: &PlanarDiagram) -> i64 {
    pd.writhe()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::codes::parse_dt;

    #[test]
    fn trefoil_realizes_with_full_writhe() {
        let d = parse_dt("[4, 6, 2]").unwrap();
        let pd = realize(&d).unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.writhe().abs(), 3);
        assert_eq!(pd.crossings()[0].sign, 1);
        assert_eq!(pd.dt_code(), d);
        assert_eq!(pd.face_count(), 5);
    }

    #[test]
    fn mixed_signs_round_trip() {
        for s in ["[-8, 10, 2, -12, 6, 4]", "[12, -14, 16, -2, 4, -6, 8, -10]", "[2]"] {
            let d = parse_dt(s).unwrap();
            assert_eq!(realize(&d).unwrap().dt_code(), d);
        }
    }

    #[test]
    fn non_realizable_code() {
        let d = parse_dt("[4, 6, 8, 10, 2]").unwrap();
        assert!(!is_realizable(&dt_to_gauss(&d)));
        assert!(matches!(realize(&d), Err(EmbedError::NotRealizable(_))));
    }

    #[test]
    fn braid_closure_writhe() {
        let pd = pd_from_braid(&parse_braid("1 1 1", None).unwrap()).unwrap();
        assert_eq!(pd.writhe(), 3);
        assert_eq!(pd.face_count(), 5);
        let pd = pd_from_braid(&parse_braid("1 -2 1 -2", None).unwrap()).unwrap();
        assert_eq!(pd.writhe(), 0);
        let pd = pd_from_braid(&parse_braid("1 -2 -2", Some(3)).unwrap());
        assert!(pd.is_err());
    }

    #[test]
    fn mirror_negates_writhe() {
        let pd = realize(&parse_dt("[-8, 10, 2, -12, 6, 4]").unwrap()).unwrap();
        let m = pd.mirror();
        assert_eq!(m.writhe(), -pd.writhe());
        assert_eq!(m.mirror(), pd);
        assert!(PlanarDiagram::from_crossings(m.crossings().to_vec()).is_ok());
    }

    #[test]
    fn unknot_has_zero_writhe() {
        assert_eq!(writhe(&PlanarDiagram::unknot()), 0);
    }

    #[test]
    fn from_crossings_validates() {
        let bad = vec![Crossing { edges: [0, 0, 1, 1], sign: 2 }];
        assert_eq!(PlanarDiagram::from_crossings(bad), Err(EmbedError::Sign(2)));
        let bad = vec![Crossing { edges: [0, 0, 0, 1], sign: 1 }];
        assert!(PlanarDiagram::from_crossings(bad).is_err());
    }
}
