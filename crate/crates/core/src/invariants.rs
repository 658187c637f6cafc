//! Kauffman bracket, Jones polynomial, and lookup against a table of named
//! knots.

use std::collections::HashMap;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::embed::PlanarDiagram;
use crate::poly::LaurentPolynomial;

/// Largest diagram the state sum accepts unless told otherwise.
pub const DEFAULT_CROSSING_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error("refs not found: {0}")]
    RefsNotFound(String),
    #[error("reference table line {line}: {message}")]
    RefsSyntax { line: usize, message: String },
    #[error("Jones polynomial matches several references: {}", .0.join(", "))]
    Ambiguous(Vec<String>),
}

/// `-A^2 - A^-2`
fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(2, -1), (-2, -1)])
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
        ra != rb
    }
}

/// Bracket with the default crossing cap.
pub fn kauffman_bracket(pd: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    kauffman_bracket_capped(pd, DEFAULT_CROSSING_CAP)
}

/// State sum over all `2^c` smoothings, normalised so the crossingless
/// unknot has bracket 1. Exponents are powers of `A`.
///
/// At a crossing `[a, b, c, d]` the A-smoothing joins `a`–`b` and `c`–`d`;
/// the B-smoothing joins `a`–`d` and `b`–`c`.
pub fn kauffman_bracket_capped(pd: &PlanarDiagram, cap: usize) -> Result<LaurentPolynomial, InvariantError> {
    let c = pd.crossing_count();
    if c > cap {
        return Err(InvariantError::CapExceeded { crossings: c, cap });
    }
    if c == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let edges = pd.edge_count();
    // tally[a_count][loops]
    let mut tally = vec![vec![0i64; edges + 1]; c + 1];
    for state in 0u64..(1u64 << c) {
        let mut uf = UnionFind::new(edges);
        let mut loops = edges;
        for (i, x) in pd.crossings().iter().enumerate() {
            let [a, b, cc, d] = x.edges;
            let joins = if state >> i & 1 == 1 { [(a, b), (cc, d)] } else { [(a, d), (b, cc)] };
            for (u, v) in joins {
                if uf.union(u, v) {
                    loops -= 1;
                }
            }
        }
        tally[state.count_ones() as usize][loops] += 1;
    }
    let delta = loop_value();
    let mut delta_pows = vec![LaurentPolynomial::one()];
    for k in 1..=edges {
        delta_pows.push(&delta_pows[k - 1] * &delta);
    }
    let mut out = LaurentPolynomial::zero();
    for (a_count, row) in tally.iter().enumerate() {
        let a_exp = 2 * a_count as i32 - c as i32;
        for (loops, &n) in row.iter().enumerate() {
            if n != 0 {
                let term = delta_pows[loops - 1].shift(a_exp);
                out += &(&term * &LaurentPolynomial::monomial(0, n));
            }
        }
    }
    Ok(out)
}

/// Jones polynomial `(-A^3)^{-w} <D>` at `A = t^{-1/4}`, with exponents in
/// quarter powers of `t`.
pub fn jones(pd: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let bracket = kauffman_bracket(pd)?;
    Ok(jones_from_bracket(&bracket, pd.writhe()))
}

pub(crate) fn jones_from_bracket(bracket: &LaurentPolynomial, writhe: i64) -> LaurentPolynomial {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = &bracket.shift(-3 * writhe as i32) * &LaurentPolynomial::monomial(0, sign);
    f.invert_variable()
}

/// Human-readable Jones polynomial, e.g. `t + t^3 - t^4`.
pub fn format_jones(p: &LaurentPolynomial) -> String {
    p.display_with("t", 4)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceKnot {
    pub name: String,
    pub jones: LaurentPolynomial,
    pub source: String,
}

/// Named Jones polynomials, one record per knot.
///
/// Text format, one record per line, `#` comments allowed:
///
/// ```text
/// 3_1 | 4:1 12:1 16:-1 | KnotInfo
/// ```
///
/// The middle field lists `exponent:coefficient` pairs with exponents in
/// quarter powers of `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReferenceTable {
    knots: Vec<ReferenceKnot>,
    index: HashMap<LaurentPolynomial, Vec<usize>>,
}

impl ReferenceTable {
    pub fn parse(text: &str) -> Result<Self, InvariantError> {
        let mut table = ReferenceTable::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| InvariantError::RefsSyntax { line: i + 1, message };
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(err(format!("expected 3 fields, found {}", fields.len())));
            }
            let mut jones = LaurentPolynomial::zero();
            for pair in fields[1].split_whitespace() {
                let (e, c) = pair.split_once(':').ok_or_else(|| err(format!("bad term `{pair}`")))?;
                let e: i32 = e.parse().map_err(|_| err(format!("bad exponent `{e}`")))?;
                let c: i64 = c.parse().map_err(|_| err(format!("bad coefficient `{c}`")))?;
                jones.add_term(e, c);
            }
            table.push(ReferenceKnot {
                name: fields[0].to_string(),
                jones,
                source: fields[2].to_string(),
            });
        }
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, InvariantError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|_| InvariantError::RefsNotFound(path.display().to_string()))?;
        Self::parse(&text)
    }

    pub fn push(&mut self, knot: ReferenceKnot) {
        self.index.entry(knot.jones.clone()).or_default().push(self.knots.len());
        self.knots.push(knot);
    }

    pub fn knots(&self) -> &[ReferenceKnot] {
        &self.knots
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.knots.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&ReferenceKnot> {
        self.knots.iter().find(|k| k.name == name)
    }

    /// Names whose polynomial equals `jones` or its mirror image, each with
    /// a flag saying whether the mirror matched.
    pub fn matches(&self, jones: &LaurentPolynomial) -> Vec<(String, bool)> {
        let mut out: Vec<(String, bool)> = Vec::new();
        let mirror = jones.invert_variable();
        for (poly, mirrored) in [(jones, false), (&mirror, true)] {
            for &i in self.index.get(poly).into_iter().flatten() {
                let name = &self.knots[i].name;
                if !out.iter().any(|(n, _)| n == name) {
                    out.push((name.clone(), mirrored));
                }
            }
        }
        out
    }

    /// Groups of reference knots that share a Jones polynomial up to mirror.
    pub fn collisions(&self) -> Vec<Vec<String>> {
        let mut groups: Vec<Vec<String>> = Vec::new();
        for k in &self.knots {
            let names: Vec<String> = self.matches(&k.jones).into_iter().map(|(n, _)| n).collect();
            if names.len() > 1 && !groups.iter().any(|g| g.contains(&k.name)) {
                groups.push(names);
            }
        }
        groups
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Identification {
    Known { name: String, mirrored: bool },
    Unknown,
}

/// Name the knot of `pd` by its Jones polynomial, up to mirror image.
pub fn identify(pd: &PlanarDiagram, refs: &ReferenceTable) -> Result<Identification, InvariantError> {
    identify_polynomial(&jones(pd)?, refs)
}

pub fn identify_polynomial(
    jones: &LaurentPolynomial,
    refs: &ReferenceTable,
) -> Result<Identification, InvariantError> {
    let mut found = refs.matches(jones);
    match found.len() {
        0 => Ok(Identification::Unknown),
        1 => {
            let (name, mirrored) = found.pop().unwrap();
            Ok(Identification::Known { name, mirrored })
        }
        _ => Err(InvariantError::Ambiguous(found.into_iter().map(|(n, _)| n).collect())),
    }
}
