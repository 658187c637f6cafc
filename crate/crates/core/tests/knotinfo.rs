//! Checks against KnotInfo data for all knots with 3 to 10 crossings.

mod common;

use common::{knotinfo_rows, KnotInfoRow};
use rollercoaster::braid::{positive_unknotting, BraidWord, Letter};
use rollercoaster::catalog::shipped_refs;
use rollercoaster::codes::DTCode;
use rollercoaster::embed::{pd_from_braid, realize};
use rollercoaster::invariants::jones;
use rollercoaster::LaurentPolynomial;

fn reference(row: &KnotInfoRow) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(row.jones.iter().map(|(&e, &c)| (e, c)))
}

fn braid(row: &KnotInfoRow) -> BraidWord {
    let n = row.braid.iter().map(|g| g.unsigned_abs() as usize).max().unwrap() + 1;
    let letters = row
        .braid
        .iter()
        .map(|&g| if g > 0 { Letter::pos(g as usize) } else { Letter::neg((-g) as usize) })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn up_to_mirror(a: &LaurentPolynomial, b: &LaurentPolynomial) -> bool {
    a == b || *a == b.invert_variable()
}

#[test]
fn corpus_is_complete() {
    // 1 + 1 + 2 + 3 + 7 + 21 + 49 + 165 prime knots with 3..=10 crossings
    assert_eq!(knotinfo_rows().len(), 249);
}

#[test]
fn jones_of_realized_dt_codes() {
    for row in knotinfo_rows() {
        let dt = DTCode::new(row.dt.clone()).unwrap();
        let j = jones(&realize(&dt).unwrap()).unwrap();
        assert!(up_to_mirror(&j, &reference(&row)), "{}: {}", row.name, j);
    }
}

#[test]
fn jones_of_braid_closures() {
    for row in knotinfo_rows() {
        let w = braid(&row);
        let j = jones(&pd_from_braid(&w).unwrap()).unwrap();
        assert!(up_to_mirror(&j, &reference(&row)), "{}: {}", row.name, j);
    }
}

#[test]
fn positive_braid_unknotting_numbers() {
    let mut checked = 0;
    for row in knotinfo_rows() {
        if !row.positive_braid || row.braid.iter().any(|&g| g < 0) {
            continue;
        }
        let u = positive_unknotting(&braid(&row)).unwrap();
        assert_eq!(Some(u), row.unknotting, "{}", row.name);
        checked += 1;
    }
    assert!(checked >= 7, "only {checked} positive braid words");
}

#[test]
fn shipped_refs_agree_with_corpus() {
    let refs = shipped_refs();
    for row in knotinfo_rows() {
        if let Some(k) = refs.get(&row.name) {
            assert_eq!(k.jones, reference(&row), "{}", row.name);
        }
    }
}
