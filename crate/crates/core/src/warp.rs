//! The roller-coaster traversal.
//!
//! Walk a diagram from a basepoint and change every crossing whose first
//! passage is an under passage. The number of such crossings is the
//! warping degree of the diagram at that basepoint; after the changes the
//! diagram is descending from the basepoint and hence unknotted.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::codes::{Basepoint, Direction, GaussCode, Passage, Role};

/// Outcome of one traversal: which crossings were first met from below
/// (and are therefore changed) and which from above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WarpResult {
    pub basepoint: Basepoint,
    pub below: BTreeSet<u32>,
    pub above: BTreeSet<u32>,
    pub degree: usize,
}

fn passage_order(n: usize, base: Basepoint) -> impl Iterator<Item = usize> {
    let start = base.edge;
    (0..n).map(move |i| match base.direction {
        Direction::Forward => (start + i) % n,
        Direction::Backward => (start + n - 1 - i) % n,
    })
}

/// Run the traversal from `base`.
///
/// # Panics
/// If `base.edge` is not below the passage count.
pub fn warp_from(code: &GaussCode, base: Basepoint) -> WarpResult {
    let n = code.len();
    assert!(base.edge < n, "basepoint edge {} out of range 0..{n}", base.edge);
    let mut seen = vec![false; code.crossings()];
    let mut below = BTreeSet::new();
    let mut above = BTreeSet::new();
    for k in passage_order(n, base) {
        let Passage { crossing, role } = code.passages()[k];
        let slot = &mut seen[crossing as usize - 1];
        if !*slot {
            *slot = true;
            match role {
                Role::Under => below.insert(crossing),
                Role::Over => above.insert(crossing),
            };
        }
    }
    let degree = below.len();
    WarpResult { basepoint: base, below, above, degree }
}

/// Degrees at every edge `0..2c` for one direction.
///
/// Moving a forward basepoint past passage `k` turns that passage from the
/// first meeting of its crossing into the last, so the degree drops by one
/// when `k` is under and rises by one when it is over. Backward runs are the
/// complements of forward runs from the same edge.
pub fn warp_profile(code: &GaussCode, direction: Direction) -> Vec<usize> {
    let n = code.len();
    let c = code.crossings();
    let mut forward = Vec::with_capacity(n);
    let mut d = warp_from(code, Basepoint::forward(0)).degree as isize;
    for p in code.passages() {
        forward.push(d as usize);
        d += match p.role {
            Role::Over => 1,
            Role::Under => -1,
        };
    }
    match direction {
        Direction::Forward => forward,
        Direction::Backward => forward.into_iter().map(|f| c - f).collect(),
    }
}

/// Least warping degree over all `2c` edges and both directions.
///
/// Ties go to the smallest edge, then `Forward` before `Backward`.
pub fn min_warp(code: &GaussCode) -> (usize, WarpResult) {
    let fwd = warp_profile(code, Direction::Forward);
    let c = code.crossings();
    let mut best = (usize::MAX, Basepoint::forward(0));
    for (edge, &f) in fwd.iter().enumerate() {
        for (d, direction) in [(f, Direction::Forward), (c - f, Direction::Backward)] {
            if d < best.0 {
                best = (d, Basepoint::new(edge, direction));
            }
        }
    }
    let witness = warp_from(code, best.1);
    debug_assert_eq!(witness.degree, best.0);
    (best.0, witness)
}

/// Change every crossing the traversal from `base` first meets from below.
pub fn apply_roller_coaster(code: &GaussCode, base: Basepoint) -> GaussCode {
    let below = warp_from(code, base).below;
    let passages = code
        .passages()
        .iter()
        .map(|p| {
            if below.contains(&p.crossing) {
                Passage::new(p.crossing, p.role.flipped())
            } else {
                *p
            }
        })
        .collect();
    GaussCode::new(passages).expect("flipping both passages of a crossing keeps the code valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{dt_to_gauss, mirror, parse_dt, reverse};

    fn code(s: &str) -> GaussCode {
        dt_to_gauss(&parse_dt(s).unwrap())
    }

    #[test]
    fn trefoil_from_first_edge() {
        let w = warp_from(&code("[4, 6, 2]"), Basepoint::forward(0));
        assert_eq!(w.degree, 1);
        // crossing 3 owns odd label 5, paired with 2
        assert_eq!(w.below, BTreeSet::from([3]));
        assert_eq!(w.above, BTreeSet::from([1, 2]));
    }

    #[test]
    fn trefoil_adjacent_basepoint() {
        let w = warp_from(&code("[4, 6, 2]"), Basepoint::forward(1));
        assert!(w.degree.abs_diff(1) <= 1);
    }

    #[test]
    fn backward_meets_passages_in_reverse() {
        let g = code("[4, 6, 2]");
        let b = warp_from(&g, Basepoint::new(0, Direction::Backward));
        let r = warp_from(&reverse(&g), Basepoint::forward(0));
        assert_eq!(b.below, r.below);
    }

    #[test]
    fn profile_matches_direct_traversal() {
        let g = code("[-8, 10, 2, -12, 6, 4]");
        for dir in [Direction::Forward, Direction::Backward] {
            let prof = warp_profile(&g, dir);
            for (e, &d) in prof.iter().enumerate() {
                assert_eq!(d, warp_from(&g, Basepoint::new(e, dir)).degree);
            }
        }
    }

    #[test]
    fn mirror_complements_degree() {
        let g = code("[-8, 10, 2, -12, 6, 4]");
        let m = mirror(&g);
        for e in 0..g.len() {
            let b = Basepoint::forward(e);
            assert_eq!(warp_from(&g, b).degree + warp_from(&m, b).degree, 6);
        }
        let pg = warp_profile(&g, Direction::Forward);
        let pm = warp_profile(&m, Direction::Forward);
        assert!(pg.iter().zip(&pm).all(|(a, b)| a + b == 6));
    }

    #[test]
    fn table_minima() {
        assert_eq!(min_warp(&code("[4, 6, 2]")).0, 1);
        assert_eq!(min_warp(&code("[4, 6, 8, 2]")).0, 1);
        assert_eq!(min_warp(&code("[12, 14, 16, 2, 4, 6, 8, 10]")).0, 2);
        assert_eq!(min_warp(&code("[16, 18, -20, 22, 2, 6, -4, 10, 8, 14, 12]")).0, 2);
    }

    #[test]
    fn witness_tie_break_prefers_first_edge_forward() {
        let (d, w) = min_warp(&code("[4, 6, 2]"));
        assert_eq!(d, 1);
        assert_eq!(w.basepoint, Basepoint::forward(0));
    }

    #[test]
    fn roller_coaster_descends() {
        let g = code("[4, 6, 2]");
        let b = Basepoint::forward(0);
        let r = apply_roller_coaster(&g, b);
        assert_eq!(warp_from(&r, b).degree, 0);
        assert_eq!(apply_roller_coaster(&r, b), r);
    }

    #[test]
    fn figure_eight_witness_changes_one_crossing() {
        let g = code("[4, 6, 8, 2]");
        let (_, w) = min_warp(&g);
        let r = apply_roller_coaster(&g, w.basepoint);
        let changed = g
            .passages()
            .iter()
            .zip(r.passages())
            .filter(|(a, b)| a.role != b.role)
            .count();
        assert_eq!(changed, 2);
        assert_eq!(warp_from(&r, w.basepoint).degree, 0);
    }
}
