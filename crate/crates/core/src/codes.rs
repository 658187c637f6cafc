//! Dowker–Thistlethwaite and Gauss codes for knot diagrams.
//!
//! A [`GaussCode`] is the sequence of crossing passages met while walking
//! once around the knot; each crossing is passed twice, once over and once
//! under. A [`DTCode`] is the compressed form used by knot tables: the
//! passages are labelled `1..=2c`, every crossing pairs an odd label with an
//! even one, and entry `i` holds the even partner of odd label `2i - 1`.
//!
//! Sign convention: a negative DT entry means the even-labelled passage is
//! the over passage. All-positive codes put every odd passage over.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("empty code")]
    Empty,
    #[error("odd entry {0}")]
    OddEntry(i64),
    #[error("duplicate absolute value {0}")]
    DuplicateEntry(u64),
    #[error("absolute values must be exactly {{2, 4, ..., {expected_max}}}; found {found}")]
    LabelSet { expected_max: usize, found: u64 },
    #[error("passage count {0} is not a positive even number")]
    PassageCount(usize),
    #[error("crossing ids must be 1..={crossings}; found {id}")]
    CrossingId { id: u32, crossings: usize },
    #[error("crossing {id} appears {count} times (expected 2)")]
    CrossingMultiplicity { id: u32, count: usize },
    #[error("crossing {0} must be passed once over and once under")]
    CrossingRoles(u32),
    #[error("crossing {0} pairs two labels of the same parity; rotate to a valid framing first")]
    ParityCollision(u32),
}

/// How a strand passes through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flipped(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
}

impl Passage {
    pub fn new(crossing: u32, role: Role) -> Self {
        Passage { crossing, role }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// A starting point on the diagram.
///
/// Basepoints sit on edges, i.e. in the gaps between passages: edge `k` is
/// the arc arriving at passage `k`. Going `Forward` from edge `k` meets
/// passages `k, k+1, ...`; going `Backward` meets `k-1, k-2, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Basepoint {
    pub edge: usize,
    pub direction: Direction,
}

impl Basepoint {
    pub fn new(edge: usize, direction: Direction) -> Self {
        Basepoint { edge, direction }
    }

    pub fn forward(edge: usize) -> Self {
        Basepoint::new(edge, Direction::Forward)
    }
}

/// A validated DT code: `c >= 1` nonzero even entries whose absolute values
/// are exactly `{2, 4, ..., 2c}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct DTCode {
    entries: Vec<i32>,
}

impl DTCode {
    pub fn new(entries: Vec<i32>) -> Result<Self, CodeError> {
        let c = entries.len();
        if c == 0 {
            return Err(CodeError::Empty);
        }
        let mut seen = vec![false; c];
        for &e in &entries {
            let a = e.unsigned_abs() as u64;
            if a % 2 == 1 {
                return Err(CodeError::OddEntry(e as i64));
            }
            if a == 0 || a > 2 * c as u64 {
                return Err(CodeError::LabelSet { expected_max: 2 * c, found: a });
            }
            let slot = (a / 2 - 1) as usize;
            if seen[slot] {
                return Err(CodeError::DuplicateEntry(a));
            }
            seen[slot] = true;
        }
        Ok(DTCode { entries })
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn crossings(&self) -> usize {
        self.entries.len()
    }

    /// True when every entry is positive, i.e. the diagram alternates.
    pub fn is_alternating(&self) -> bool {
        self.entries.iter().all(|&e| e > 0)
    }

    /// Flip every sign. This is the DT code of the mirror diagram.
    pub fn mirrored(&self) -> DTCode {
        DTCode { entries: self.entries.iter().map(|e| -e).collect() }
    }
}

impl TryFrom<Vec<i32>> for DTCode {
    type Error = CodeError;
    fn try_from(v: Vec<i32>) -> Result<Self, CodeError> {
        DTCode::new(v)
    }
}

impl From<DTCode> for Vec<i32> {
    fn from(d: DTCode) -> Vec<i32> {
        d.entries
    }
}

impl fmt::Display for DTCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for DTCode {
    type Err = CodeError;
    fn from_str(s: &str) -> Result<Self, CodeError> {
        parse_dt(s)
    }
}

fn integer_tokens(text: &str) -> Result<Vec<i64>, CodeError> {
    let body = text.trim();
    let body = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .or_else(|| body.strip_prefix('(').and_then(|b| b.strip_suffix(')')))
        .unwrap_or(body);
    body.split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| CodeError::MalformedToken(t.to_string())))
        .collect()
}

/// Parse `"[4, 6, 2]"` or `"4 6 2"`. Anything after `#` is ignored.
pub fn parse_dt(text: &str) -> Result<DTCode, CodeError> {
    let text = text.split('#').next().unwrap_or("");
    let values = integer_tokens(text)?;
    let mut entries = Vec::with_capacity(values.len());
    for v in values {
        if v % 2 != 0 {
            return Err(CodeError::OddEntry(v));
        }
        let e = i32::try_from(v).map_err(|_| CodeError::MalformedToken(v.to_string()))?;
        entries.push(e);
    }
    DTCode::new(entries)
}

/// Parse a file of DT codes: one code per line, blank lines and `#`
/// comments skipped.
pub fn parse_dt_lines(text: &str) -> Result<Vec<DTCode>, (usize, CodeError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.split('#').next().unwrap_or("").trim().is_empty())
        .map(|(i, l)| parse_dt(l).map_err(|e| (i + 1, e)))
        .collect()
}

/// The passage sequence of a single-component knot diagram.
///
/// Crossing ids are exactly `1..=c`; each appears twice, once over and once
/// under.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Passage>", into = "Vec<Passage>")]
pub struct GaussCode {
    passages: Vec<Passage>,
}

impl TryFrom<Vec<Passage>> for GaussCode {
    type Error = CodeError;
    fn try_from(v: Vec<Passage>) -> Result<Self, CodeError> {
        GaussCode::new(v)
    }
}

impl From<GaussCode> for Vec<Passage> {
    fn from(g: GaussCode) -> Vec<Passage> {
        g.passages
    }
}

impl GaussCode {
    pub fn new(passages: Vec<Passage>) -> Result<Self, CodeError> {
        let n = passages.len();
        if n < 2 || n % 2 == 1 {
            return Err(CodeError::PassageCount(n));
        }
        let c = n / 2;
        let mut over = vec![0usize; c];
        let mut under = vec![0usize; c];
        for p in &passages {
            if p.crossing == 0 || p.crossing as usize > c {
                return Err(CodeError::CrossingId { id: p.crossing, crossings: c });
            }
            let i = p.crossing as usize - 1;
            match p.role {
                Role::Over => over[i] += 1,
                Role::Under => under[i] += 1,
            }
        }
        for i in 0..c {
            let id = i as u32 + 1;
            if over[i] + under[i] != 2 {
                return Err(CodeError::CrossingMultiplicity { id, count: over[i] + under[i] });
            }
            if over[i] != 1 {
                return Err(CodeError::CrossingRoles(id));
            }
        }
        Ok(GaussCode { passages })
    }

    pub fn passages(&self) -> &[Passage] {
        &self.passages
    }

    pub fn len(&self) -> usize {
        self.passages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passages.is_empty()
    }

    pub fn crossings(&self) -> usize {
        self.passages.len() / 2
    }

    /// Positions `(first, second)` of each crossing, indexed by `id - 1`.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.crossings()];
        for (k, p) in self.passages.iter().enumerate() {
            let slot = &mut pos[p.crossing as usize - 1];
            if slot.0 == usize::MAX {
                slot.0 = k;
            } else {
                slot.1 = k;
            }
        }
        pos
    }

    /// The same diagram read from passage `shift` onwards.
    pub fn rotated(&self, shift: usize) -> GaussCode {
        let n = self.len();
        let s = shift % n;
        let mut passages = Vec::with_capacity(n);
        passages.extend_from_slice(&self.passages[s..]);
        passages.extend_from_slice(&self.passages[..s]);
        GaussCode { passages }
    }

    /// Rename crossings so ids run `1..=c` in order of first passage.
    pub fn relabeled(&self) -> GaussCode {
        let mut map = vec![0u32; self.crossings() + 1];
        let mut next = 1;
        let passages = self
            .passages
            .iter()
            .map(|p| {
                let slot = &mut map[p.crossing as usize];
                if *slot == 0 {
                    *slot = next;
                    next += 1;
                }
                Passage::new(*slot, p.role)
            })
            .collect();
        GaussCode { passages }
    }
}

impl fmt::Display for GaussCode {
    /// Signed form: `+k` for an over passage of crossing `k`, `-k` for under.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.passages.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match p.role {
                Role::Over => write!(f, "{}", p.crossing)?,
                Role::Under => write!(f, "-{}", p.crossing)?,
            }
        }
        Ok(())
    }
}

/// Parse a signed Gauss code such as `"1, -2, 3, -1, 2, -3"`: positive ids
/// are over passages, negative ids under passages.
pub fn parse_gauss(text: &str) -> Result<GaussCode, CodeError> {
    let text = text.split('#').next().unwrap_or("");
    let values = integer_tokens(text)?;
    let passages = values
        .into_iter()
        .map(|v| {
            let id = u32::try_from(v.unsigned_abs())
                .map_err(|_| CodeError::MalformedToken(v.to_string()))?;
            let role = if v > 0 { Role::Over } else { Role::Under };
            Ok(Passage::new(id, role))
        })
        .collect::<Result<Vec<_>, CodeError>>()?;
    GaussCode::new(passages)
}

/// Expand a DT code into passages. Crossing `i` owns odd label `2i - 1`.
pub fn dt_to_gauss(code: &DTCode) -> GaussCode {
    let c = code.crossings();
    let mut passages = vec![Passage::new(0, Role::Over); 2 * c];
    for (i, &e) in code.entries().iter().enumerate() {
        let id = i as u32 + 1;
        let odd_pos = 2 * i;
        let even_pos = e.unsigned_abs() as usize - 1;
        let (odd_role, even_role) =
            if e < 0 { (Role::Under, Role::Over) } else { (Role::Over, Role::Under) };
        passages[odd_pos] = Passage::new(id, odd_role);
        passages[even_pos] = Passage::new(id, even_role);
    }
    GaussCode { passages }
}

/// Read a DT code off a Gauss code, labelling passage 0 as `1`.
pub fn gauss_to_dt(code: &GaussCode) -> Result<DTCode, CodeError> {
    let c = code.crossings();
    let mut entries = vec![0i32; c];
    for (i, &(p, q)) in code.positions().iter().enumerate() {
        if (p + q) % 2 == 0 {
            return Err(CodeError::ParityCollision(i as u32 + 1));
        }
        let (odd, even) = if p % 2 == 0 { (p, q) } else { (q, p) };
        let even_label = (even + 1) as i32;
        let even_over = code.passages[even].role == Role::Over;
        entries[odd / 2] = if even_over { -even_label } else { even_label };
    }
    Ok(DTCode { entries })
}

/// Swap over and under at every crossing.
pub fn mirror(code: &GaussCode) -> GaussCode {
    GaussCode {
        passages: code
            .passages
            .iter()
            .map(|p| Passage::new(p.crossing, p.role.flipped()))
            .collect(),
    }
}

/// Walk the knot the other way round.
pub fn reverse(code: &GaussCode) -> GaussCode {
    GaussCode { passages: code.passages.iter().rev().copied().collect() }
}

/// Whether crossings `a` and `b` (given by their passage positions) are
/// interlaced: exactly one passage of `b` lies between the two of `a`.
pub fn interlaced(a: (usize, usize), b: (usize, usize)) -> bool {
    let (lo, hi) = if a.0 < a.1 { a } else { (a.1, a.0) };
    let inside = |k: usize| lo < k && k < hi;
    inside(b.0) != inside(b.1)
}

/// A crossing is nugatory when every crossing passed strictly between its
/// two passages is passed there twice.
pub fn is_nugatory(code: &GaussCode, crossing: u32) -> bool {
    let pos = code.positions();
    let me = pos[crossing as usize - 1];
    pos.iter()
        .enumerate()
        .filter(|&(i, _)| i as u32 + 1 != crossing)
        .all(|(_, &other)| !interlaced(me, other))
}

/// True iff no crossing is nugatory.
pub fn is_reduced(code: &GaussCode) -> bool {
    let pos = code.positions();
    pos.iter().enumerate().all(|(i, &a)| {
        pos.iter()
            .enumerate()
            .any(|(j, &b)| i != j && interlaced(a, b))
    })
}

fn canonical_key(d: &DTCode) -> (Vec<u32>, Vec<bool>) {
    (
        d.entries.iter().map(|e| e.unsigned_abs()).collect(),
        d.entries.iter().map(|&e| e < 0).collect(),
    )
}

fn canonical_over(codes: impl Iterator<Item = GaussCode>) -> Result<DTCode, CodeError> {
    let mut best: Option<(Vec<u32>, Vec<bool>, DTCode)> = None;
    for g in codes {
        let d = gauss_to_dt(&g)?;
        let (abs, neg) = canonical_key(&d);
        let better = match &best {
            None => true,
            Some((ba, bn, _)) => (&abs, &neg) < (ba, bn),
        };
        if better {
            best = Some((abs, neg, d));
        }
    }
    Ok(best.expect("at least one framing").2)
}

fn framings(code: &GaussCode) -> impl Iterator<Item = GaussCode> + '_ {
    let rev = reverse(code);
    let n = code.len();
    (0..n)
        .map(move |s| code.rotated(s))
        .chain((0..n).map(move |s| rev.rotated(s)))
}

/// Least DT code over all `2c` starting passages and both directions.
///
/// Codes are ordered by their absolute values first, then by sign pattern
/// with `+` before `-`. Fails with [`CodeError::ParityCollision`] when the
/// code has a crossing whose passages are an even distance apart, which
/// no planar diagram does.
pub fn canonical_dt(code: &GaussCode) -> Result<DTCode, CodeError> {
    canonical_over(framings(code))
}

/// As [`canonical_dt`], additionally ranging over the mirror image.
pub fn canonical_dt_up_to_mirror(code: &GaussCode) -> Result<DTCode, CodeError> {
    let m = mirror(code);
    canonical_over(framings(code).chain(framings(&m).collect::<Vec<_>>()))
}
