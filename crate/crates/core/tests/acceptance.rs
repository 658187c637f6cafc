//! One line per acceptance criterion. Run with
//! `cargo test -p rollercoaster --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use rollercoaster::braid::{
    ab_counts, closure_gauss, find_innermost_bigon, positive_unknotting, random_positive_braid_knot,
    remove_first_ascending_strand, smooth_bigon, BraidWord,
};
use rollercoaster::catalog::{
    classify, shipped_catalog, shipped_refs, summarize, table_rows, verify_catalog, CatalogEntry,
};
use rollercoaster::codes::{dt_to_gauss, mirror, Basepoint, Direction, GaussCode};
use rollercoaster::embed::{pd_from_braid, realize, PlanarDiagram};
use rollercoaster::invariants::kauffman_bracket;
use rollercoaster::search::{a_min_warp, enumerate_alternating};
use rollercoaster::warp::{apply_roller_coaster, min_warp, warp_from, warp_profile};

const SEEDS: u64 = 1000;
const N_MAX: usize = 6;
const C_MAX: usize = 20;

enum Verdict {
    Pass(String),
    Fail(String),
    NotReproducible(String),
}

struct Report {
    passed: usize,
    failed: usize,
}

impl Report {
    fn line(&mut self, id: u32, title: &str, started: Instant, v: Verdict) {
        let t = started.elapsed();
        let (tag, detail) = match v {
            Verdict::Pass(d) => {
                self.passed += 1;
                ("PASS", d)
            }
            Verdict::Fail(d) => {
                self.failed += 1;
                ("FAIL", d)
            }
            Verdict::NotReproducible(d) => ("NOT REPRODUCIBLE", d),
        };
        println!("criterion {id:>2} {tag:<16} {title} ({:.2}s): {detail}", t.as_secs_f64());
    }
}

fn witnesses() -> Vec<CatalogEntry> {
    shipped_catalog()
}

fn row<'a>(all: &'a [CatalogEntry], name: &str) -> &'a CatalogEntry {
    all.iter().find(|e| e.name == name).unwrap()
}

fn sample() -> Vec<BraidWord> {
    (0..SEEDS).map(|s| random_positive_braid_knot(N_MAX, C_MAX, s).unwrap()).collect()
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    if t.elapsed() <= limit {
        Ok(())
    } else {
        Err(format!("took {:.1}s, limit {}s", t.elapsed().as_secs_f64(), limit.as_secs()))
    }
}

fn criterion_1(all: &[CatalogEntry]) -> Verdict {
    let t = Instant::now();
    let rows = table_rows(all);
    let mut warp_bad = Vec::new();
    let mut rc_bad = Vec::new();
    for e in &rows {
        let d = min_warp(&dt_to_gauss(&e.dt)).0;
        if d as u32 != e.ascending.hi {
            warp_bad.push(format!("{} (min_warp {d}, table {})", e.name, e.ascending));
        }
        let c = e.dt.crossings() as u32;
        if !e.rc_crossing.admits(c) {
            rc_bad.push(format!("{} (witness {c} crossings, table {})", e.name, e.rc_crossing));
        }
    }
    let timing = within(t, Duration::from_secs(10));
    if warp_bad.is_empty() && rc_bad.is_empty() && timing.is_ok() {
        Verdict::Pass(format!("{} rows: min_warp and witness crossing counts match", rows.len()))
    } else {
        let mut parts = Vec::new();
        parts.push(format!("min_warp matches on {}/{} rows", rows.len() - warp_bad.len(), rows.len()));
        if !warp_bad.is_empty() {
            parts.push(format!("min_warp mismatch: {}", warp_bad.join("; ")));
        }
        if !rc_bad.is_empty() {
            parts.push(format!(
                "witness crossing count disagrees with the rc-crossing column of the source table: {}",
                rc_bad.join("; ")
            ));
        }
        if let Err(e) = timing {
            parts.push(e);
        }
        Verdict::Fail(parts.join(". "))
    }
}

fn criterion_2(all: &[CatalogEntry]) -> Verdict {
    let mut got = Vec::new();
    let mut ok = true;
    for (name, want) in [("9_32", 2), ("9_33", 2), ("9_40", 3)] {
        let e = row(all, name);
        let d = min_warp(&dt_to_gauss(&e.dt)).0;
        ok &= d == want && e.dt.crossings() == 11;
        got.push(format!("{name}={d} on {} crossings", e.dt.crossings()));
    }
    let s = got.join(", ");
    if ok { Verdict::Pass(s) } else { Verdict::Fail(s) }
}

fn criterion_3(all: &[CatalogEntry]) -> Verdict {
    let rows = table_rows(all);
    let counts = summarize(&rows);
    let misclassified: Vec<&str> = rows.iter().filter(|e| classify(e) != e.property).map(|e| e.name.as_str()).collect();
    let s = format!("{} over {} rows", counts, rows.len());
    if counts.as_tuple() == (12, 32, 34, 6) && misclassified.is_empty() && rows.len() == 84 {
        Verdict::Pass(s)
    } else {
        Verdict::Fail(format!("{s}; reclassified differently: {misclassified:?}"))
    }
}

fn criterion_4(all: &[CatalogEntry]) -> Verdict {
    let mut got = Vec::new();
    let mut ok = true;
    for name in ["12a_181", "12a_477"] {
        let e = row(all, name);
        let d = min_warp(&dt_to_gauss(&e.dt)).0;
        ok &= d == 3 && e.dt.crossings() == 12;
        got.push(format!("{name} {} -> {d}", e.dt));
    }
    let s = got.join(", ");
    if ok { Verdict::Pass(s) } else { Verdict::Fail(s) }
}

fn criterion_5(words: &[BraidWord], t: Instant) -> Verdict {
    let mut bad = Vec::new();
    for w in words {
        let (a, b) = ab_counts(w).unwrap();
        let n = w.strands();
        let (g, _) = closure_gauss(w).unwrap();
        let d = min_warp(&g).0;
        if a != b + n - 1 || 2 * d != w.len() + 1 - n || positive_unknotting(w).unwrap() != d {
            bad.push(w.to_string());
        }
    }
    let timing = within(t, Duration::from_secs(30));
    if bad.is_empty() && timing.is_ok() {
        Verdict::Pass(format!("{} words, n <= {N_MAX}, C <= {C_MAX}", words.len()))
    } else {
        Verdict::Fail(format!("{} counterexamples {:?} {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>(), timing.err()))
    }
}

fn criterion_6(words: &[BraidWord]) -> Verdict {
    let (mut smoothings, mut removals, mut bad) = (0, 0, Vec::new());
    for w in words {
        let mut cur = w.clone();
        let mut ok = true;
        while cur.len() + 1 > cur.strands() {
            let (a, b) = ab_counts(&cur).unwrap();
            if let Some(bg) = find_innermost_bigon(&cur) {
                cur = smooth_bigon(&cur, &bg).unwrap();
                ok &= ab_counts(&cur).unwrap() == (a - 1, b - 1);
                smoothings += 1;
            } else {
                let (next, cert) = remove_first_ascending_strand(&cur).unwrap();
                ok &= ab_counts(&next).unwrap() == (a - cert.m - 1, b - cert.m);
                cur = next;
                removals += 1;
            }
        }
        ok &= ab_counts(&cur).unwrap() == (cur.strands() - 1, 0);
        if !ok {
            bad.push(w.to_string());
        }
    }
    let s = format!("{smoothings} bigon smoothings, {removals} strand removals");
    if bad.is_empty() { Verdict::Pass(s) } else { Verdict::Fail(format!("{s}; failing words {bad:?}")) }
}

fn warping_properties(g: &GaussCode) -> bool {
    let c = g.crossings();
    let m = mirror(g);
    [Direction::Forward, Direction::Backward].into_iter().all(|dir| {
        let p = warp_profile(g, dir);
        (0..g.len()).all(|e| {
            let b = Basepoint::new(e, dir);
            let d = warp_from(g, b).degree;
            let r = apply_roller_coaster(g, b);
            d == p[e]
                && d + warp_from(&m, b).degree == c
                && p[e].abs_diff(p[(e + 1) % p.len()]) <= 1
                && warp_from(&r, b).degree == 0
        })
    })
}

fn criterion_7(all: &[CatalogEntry], words: &[BraidWord]) -> Verdict {
    let mut bad: Vec<String> = all.iter().filter(|e| !warping_properties(&dt_to_gauss(&e.dt))).map(|e| e.name.clone()).collect();
    bad.extend(words.iter().filter(|w| !warping_properties(&closure_gauss(w).unwrap().0)).map(|w| w.to_string()));
    let s = format!("{} catalog witnesses and {} braid closures", all.len(), words.len());
    if bad.is_empty() { Verdict::Pass(s) } else { Verdict::Fail(format!("{s}; failing {bad:?}")) }
}

fn criterion_8(all: &[CatalogEntry]) -> Verdict {
    let mut corpus: Vec<PlanarDiagram> = vec![PlanarDiagram::unknot()];
    corpus.extend(all.iter().filter(|e| e.dt.crossings() <= 8).map(|e| realize(&e.dt).unwrap()));
    for c in 3..=8 {
        corpus.extend(enumerate_alternating(c).unwrap().iter().map(|d| realize(d).unwrap()));
    }
    corpus.extend(
        (0..200)
            .map(|s| random_positive_braid_knot(5, 8, s).unwrap())
            .map(|w| pd_from_braid(&w).unwrap()),
    );
    let bracket_bad = corpus
        .iter()
        .filter(|pd| {
            let s: Vec<(i32, i64)> = kauffman_bracket(pd).unwrap().terms().collect();
            s != common::skein_bracket(pd).into_iter().collect::<Vec<_>>()
        })
        .count();

    let refs = shipped_refs();
    let reports = verify_catalog(all, &refs);
    let id_bad: Vec<String> = reports
        .iter()
        .filter(|r| r.check("identification") != Some(true))
        .map(|r| format!("{} -> {}", r.name, r.identification))
        .collect();
    let collisions = refs.collisions();
    let collision_rows: Vec<&str> = reports.iter().filter(|r| !r.flags.is_empty()).map(|r| r.name.as_str()).collect();
    let s = format!(
        "bracket oracle agrees on {}/{} diagrams; identification {}/{} rows; Jones collisions: {}",
        corpus.len() - bracket_bad,
        corpus.len(),
        reports.len() - id_bad.len(),
        reports.len(),
        if collisions.is_empty() { "none".to_string() } else { format!("{collisions:?} (rows {collision_rows:?})") }
    );
    if bracket_bad == 0 && id_bad.is_empty() && reports.len() == 86 {
        Verdict::Pass(s)
    } else {
        Verdict::Fail(format!("{s}; misidentified {id_bad:?}"))
    }
}

fn criterion_9(t: Instant) -> Verdict {
    let got: Vec<usize> = (3..=8).map(|c| a_min_warp(c).unwrap().0).collect();
    let want: Vec<usize> = (3..=8usize).map(|c| c.div_ceil(4)).collect();
    let timing = within(t, Duration::from_secs(300));
    let s = format!("a_min_warp(3..=8) = {got:?}, ceil(c/4) = {want:?} (diagram-level)");
    if got == want && got == [1, 1, 2, 2, 2, 2] && timing.is_ok() { Verdict::Pass(s) } else { Verdict::Fail(s) }
}

fn main() {
    let mut r = Report { passed: 0, failed: 0 };
    let all = witnesses();

    let t = Instant::now();
    r.line(1, "table reproduction", t, criterion_1(&all));
    let t = Instant::now();
    r.line(2, "11-crossing witnesses", t, criterion_2(&all));
    let t = Instant::now();
    r.line(3, "class counts", t, criterion_3(&all));
    let t = Instant::now();
    r.line(4, "12-crossing witnesses", t, criterion_4(&all));

    let t = Instant::now();
    let words = sample();
    r.line(5, "positive braid lemma", t, criterion_5(&words, t));
    let t = Instant::now();
    r.line(6, "induction steps", t, criterion_6(&words));
    let t = Instant::now();
    r.line(7, "warping properties", t, criterion_7(&all, &words));
    let t = Instant::now();
    r.line(8, "invariant oracles", t, criterion_8(&all));
    let t = Instant::now();
    r.line(9, "alternating minima", t, criterion_9(t));
    r.line(
        10,
        "out of desk scale",
        Instant::now(),
        Verdict::NotReproducible(
            "exhaustive search over every diagram of up to 11 crossings per knot, the 16-crossing check of the \
             ceil(c/4) pattern and braid-index certification are not run; criteria 1-9 stand in for them"
                .into(),
        ),
    );
    println!("acceptance: {} passed, {} failed, 1 not reproducible", r.passed, r.failed);
}
