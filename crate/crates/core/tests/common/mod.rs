//! Reference implementations used only by tests. Each one recomputes a
//! quantity from scratch, sharing no code with the library beyond its data
//! types.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rollercoaster::codes::{DTCode, GaussCode, Role};
use rollercoaster::embed::PlanarDiagram;

/// Crossing positions `(first, second)` of each crossing id.
pub fn chords(g: &GaussCode) -> Vec<(usize, usize)> {
    let mut at: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (k, p) in g.passages().iter().enumerate() {
        at.entry(p.crossing).or_default().push(k);
    }
    at.values().map(|v| (v[0], v[1])).collect()
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1) != (a.0 < b.1 && b.1 < a.1)
}

/// Faces of the 4-regular graph of a Gauss code with crossing `x` drawn so
/// that its second strand runs across the first from right to left when
/// `turn[x]` is set, and from left to right otherwise.
pub fn faces_with_turns(g: &GaussCode, turn: &[bool]) -> usize {
    let n = g.len();
    let ch = chords(g);
    // dart ids: 4 * crossing + slot, slot in ccw order
    // slots: 0 = leaving along first strand, 2 = arriving along first strand
    let mut slot_of = vec![[0usize; 2]; n]; // [arrive, leave] at passage k
    for (x, &(p, q)) in ch.iter().enumerate() {
        slot_of[p] = [4 * x + 2, 4 * x];
        let (arrive_q, leave_q) = if turn[x] { (3, 1) } else { (1, 3) };
        slot_of[q] = [4 * x + arrive_q, 4 * x + leave_q];
    }
    // edge k runs from "leave" at passage k-1 to "arrive" at passage k
    let mut other = vec![0usize; 4 * ch.len()];
    for k in 0..n {
        let from = slot_of[(k + n - 1) % n][1];
        let to = slot_of[k][0];
        other[from] = to;
        other[to] = from;
    }
    let mut seen = vec![false; 4 * ch.len()];
    let mut faces = 0;
    for s in 0..seen.len() {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            let e = other[d];
            d = 4 * (e / 4) + (e % 4 + 3) % 4;
        }
    }
    faces
}

/// Try every one of the `2^c` ways to draw each crossing.
pub fn brute_force_planar(g: &GaussCode) -> bool {
    let c = g.crossings();
    (0u32..1 << c).any(|m| {
        let turn: Vec<bool> = (0..c).map(|i| m >> i & 1 == 1).collect();
        faces_with_turns(g, &turn) == c + 2
    })
}

/// Kauffman bracket by recursive smoothing and relabelling, as a map from
/// powers of `A` to coefficients.
pub fn skein_bracket(pd: &PlanarDiagram) -> BTreeMap<i32, i64> {
    fn add(into: &mut BTreeMap<i32, i64>, from: &BTreeMap<i32, i64>, shift: i32) {
        for (&e, &c) in from {
            *into.entry(e + shift).or_insert(0) += c;
        }
        into.retain(|_, c| *c != 0);
    }
    fn mul(a: &BTreeMap<i32, i64>, b: &BTreeMap<i32, i64>) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&e1, &c1) in a {
            for (&e2, &c2) in b {
                *out.entry(e1 + e2).or_insert(0) += c1 * c2;
            }
        }
        out.retain(|_, c: &mut i64| *c != 0);
        out
    }
    // join two arc ends; returns whether a closed loop was completed
    fn join(rest: &mut [[usize; 4]], x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        for cr in rest.iter_mut() {
            for e in cr.iter_mut() {
                if *e == y {
                    *e = x;
                }
            }
        }
        false
    }
    fn go(crossings: &[[usize; 4]], loops: usize) -> BTreeMap<i32, i64> {
        let Some((first, rest)) = crossings.split_first() else {
            let delta = BTreeMap::from([(2, -1), (-2, -1)]);
            let mut out = BTreeMap::from([(0, 1)]);
            for _ in 1..loops {
                out = mul(&out, &delta);
            }
            return out;
        };
        let [a, b, c, d] = *first;
        let mut total = BTreeMap::new();
        for (shift, pairs) in [(1, [(a, b), (c, d)]), (-1, [(a, d), (b, c)])] {
            let mut r: Vec<[usize; 4]> = rest.to_vec();
            let mut closed = 0;
            let mut p2 = pairs[1];
            if join(&mut r, pairs[0].0, pairs[0].1) {
                closed += 1;
            } else {
                let (x, y) = pairs[0];
                if p2.0 == y {
                    p2.0 = x;
                }
                if p2.1 == y {
                    p2.1 = x;
                }
            }
            if join(&mut r, p2.0, p2.1) {
                closed += 1;
            }
            add(&mut total, &go(&r, loops + closed), shift);
        }
        total
    }
    if pd.crossing_count() == 0 {
        return BTreeMap::from([(0, 1)]);
    }
    let crossings: Vec<[usize; 4]> = pd.crossings().iter().map(|x| x.edges).collect();
    go(&crossings, 0)
}

/// Walk the closure of a positive braid (generators 1-based, strands `n`)
/// and count crossings first met from above and from below.
pub fn trace_ab(n: usize, gens: &[usize]) -> (usize, usize) {
    let mut first_seen: Vec<Option<bool>> = vec![None; gens.len()];
    let mut pos = 1usize;
    loop {
        for (i, &k) in gens.iter().enumerate() {
            if pos == k || pos == k + 1 {
                let over = pos == k;
                first_seen[i].get_or_insert(over);
                pos = if over { k + 1 } else { k };
            }
        }
        if pos == 1 {
            break;
        }
    }
    let _ = n;
    let a = first_seen.iter().filter(|s| **s == Some(true)).count();
    let b = first_seen.iter().filter(|s| **s == Some(false)).count();
    (a, b)
}

/// Rotation- and reflection-invariant key of the chord diagram of a code.
pub fn chord_key(g: &GaussCode) -> Vec<usize> {
    let n = g.len();
    let mut partner = vec![0usize; n];
    for (p, q) in chords(g) {
        partner[p] = q;
        partner[q] = p;
    }
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        for rev in [false, true] {
            let key: Vec<usize> = (0..n)
                .map(|i| {
                    let k = if rev { (s + n - i) % n } else { (s + i) % n };
                    let d = (partner[k] + n - k) % n;
                    if rev { n - d } else { d }
                })
                .collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.unwrap_or_default()
}

/// Gauss code of a DT code, computed from the pairing directly.
pub fn gauss_of_dt(entries: &[i32]) -> GaussCode {
    use rollercoaster::codes::Passage;
    let n = 2 * entries.len();
    let mut passages = vec![Passage::new(0, Role::Over); n];
    for (i, &e) in entries.iter().enumerate() {
        let odd = 2 * i; // label 2i+1 at index 2i
        let even = e.unsigned_abs() as usize - 1;
        let id = i as u32 + 1;
        let even_over = e < 0;
        passages[odd] = Passage::new(id, if even_over { Role::Under } else { Role::Over });
        passages[even] = Passage::new(id, if even_over { Role::Over } else { Role::Under });
    }
    GaussCode::new(passages).unwrap()
}

/// Reduced realizable alternating diagrams with `c` crossings, as chord
/// keys, by trying every pairing and every drawing.
pub fn brute_force_alternating(c: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut perm: Vec<i32> = (1..=c as i32).map(|i| 2 * i).collect();
    permute(&mut perm, 0, &mut |p| {
        let g = gauss_of_dt(p);
        let ch = chords(&g);
        let reduced = ch.iter().all(|&a| ch.iter().any(|&b| a != b && crosses(a, b)));
        if reduced && brute_force_planar(&g) {
            out.insert(chord_key(&g));
        }
    });
    out
}

fn permute(v: &mut Vec<i32>, k: usize, f: &mut impl FnMut(&[i32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Every pairing of odd with even labels for `c` crossings.
pub fn all_pairings(c: usize) -> Vec<DTCode> {
    let mut out = Vec::new();
    let mut perm: Vec<i32> = (1..=c as i32).map(|i| 2 * i).collect();
    permute(&mut perm, 0, &mut |p| out.push(DTCode::new(p.to_vec()).unwrap()));
    out
}

/// `name | dt | jones | braid | unknotting | positive_braid`
pub struct KnotInfoRow {
    pub name: String,
    pub dt: Vec<i32>,
    pub jones: BTreeMap<i32, i64>,
    pub braid: Vec<i32>,
    pub unknotting: Option<usize>,
    pub positive_braid: bool,
}

pub fn knotinfo_rows() -> Vec<KnotInfoRow> {
    let text = include_str!("../fixtures/knotinfo_le10.dat");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('|').map(str::trim).collect();
            let ints = |s: &str| -> Vec<i32> { s.split(',').map(|t| t.trim().parse().unwrap()).collect() };
            KnotInfoRow {
                name: f[0].to_string(),
                dt: ints(f[1]),
                jones: f[2]
                    .split_whitespace()
                    .map(|t| {
                        let (e, c) = t.split_once(':').unwrap();
                        (e.parse().unwrap(), c.parse().unwrap())
                    })
                    .collect(),
                braid: ints(f[3]),
                unknotting: f[4].parse().ok(),
                positive_braid: f[5] == "Y",
            }
        })
        .collect()
}
