//! Braid words, their closures, and the reduction steps that take a positive
//! braid knot down to a twist-free base case.
//!
//! Conventions: strand positions are numbered `1` (top) to `n` (bottom) and
//! the braid is read left to right. In a positive letter `σ_i` the strand
//! entering at position `i` crosses over the strand entering at `i + 1`. The
//! closure is traversed from the top-left point, heading right.
//!
//! Braid strands (the `n` arcs running from the left edge to the right edge
//! of the braid diagram) are named by the position they start at.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::codes::{Basepoint, GaussCode, Passage, Role};
use crate::warp::warp_from;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("malformed braid token `{0}`")]
    MalformedToken(String),
    #[error("generator index 0 is not allowed")]
    ZeroGenerator,
    #[error("generator {generator} needs at least {} strands, got {strands}", generator + 1)]
    GeneratorOutOfRange { generator: usize, strands: usize },
    #[error("closure has {0} components")]
    NotAKnot(usize),
    #[error("letter {0} is negative; a positive braid is required")]
    NotPositive(usize),
    #[error("closure has no crossings")]
    NoCrossings,
    #[error("bigon does not match the word")]
    StaleBigon,
    #[error("word still contains a bigon")]
    BigonPresent,
    #[error("infeasible generator bounds: {0}")]
    Infeasible(String),
    #[error("crossing count and strand count have the wrong parity for a knot")]
    Parity,
}

/// One Artin generator `σ_i^{±1}`; `generator` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, positive: true }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, positive: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.positive { l.generator.to_string() } else { format!("-{}", l.generator) })
            .collect();
        write!(f, "{}", body.join(" "))
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        let strands = strands.max(1);
        for l in &letters {
            if l.generator == 0 {
                return Err(BraidError::ZeroGenerator);
            }
            if l.generator >= strands {
                return Err(BraidError::GeneratorOutOfRange { generator: l.generator, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// A word of positive letters, e.g. `positive(3, &[1, 2, 1, 2])`.
    pub fn positive(strands: usize, generators: &[usize]) -> Result<Self, BraidError> {
        BraidWord::new(strands, generators.iter().map(|&g| Letter::pos(g)).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters, i.e. crossings of the braid diagram.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.positive)
    }

    fn require_positive(&self) -> Result<(), BraidError> {
        match self.letters.iter().position(|l| !l.positive) {
            Some(i) => Err(BraidError::NotPositive(i)),
            None => Ok(()),
        }
    }

    fn require_knot(&self) -> Result<(), BraidError> {
        match closure_components(self) {
            1 => Ok(()),
            k => Err(BraidError::NotAKnot(k)),
        }
    }

    /// `(upper, lower)` strand entering each letter, strands named by their
    /// 1-based starting position.
    pub fn crossing_strands(&self) -> Vec<(usize, usize)> {
        let mut at: Vec<usize> = (1..=self.strands).collect();
        self.letters
            .iter()
            .map(|l| {
                let k = l.generator - 1;
                let pair = (at[k], at[k + 1]);
                at.swap(k, k + 1);
                pair
            })
            .collect()
    }

    /// Final position (1-based) of the strand starting at each position.
    pub fn end_positions(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (1..=self.strands).collect();
        for l in &self.letters {
            at.swap(l.generator - 1, l.generator);
        }
        let mut end = vec![0; self.strands + 1];
        for (pos, &s) in at.iter().enumerate() {
            end[s] = pos + 1;
        }
        end
    }
}

fn parse_letter(token: &str) -> Result<Letter, BraidError> {
    let bad = || BraidError::MalformedToken(token.to_string());
    let mut t = token;
    let mut positive = true;
    if let Some(rest) = t.strip_prefix('-') {
        positive = false;
        t = rest;
    } else if let Some(rest) = t.strip_prefix('+') {
        t = rest;
    }
    let named = t
        .strip_prefix('s')
        .or_else(|| t.strip_prefix('σ'))
        .or_else(|| t.strip_prefix("sigma"));
    if let Some(rest) = named {
        t = rest;
        if let Some((gen, exp)) = t.split_once('^') {
            let exp = exp.trim_matches(|ch| ch == '{' || ch == '}' || ch == '(' || ch == ')');
            match exp {
                "1" | "+1" => {}
                "-1" => positive = !positive,
                _ => return Err(bad()),
            }
            t = gen;
        }
    }
    let generator: usize = t.parse().map_err(|_| bad())?;
    if generator == 0 {
        return Err(BraidError::ZeroGenerator);
    }
    Ok(Letter { generator, positive })
}

/// Parse `"1 2 -1"` or `"s1 s2 s1^-1"`. Without `strands`, the strand count
/// is one more than the largest generator index.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, BraidError> {
    let body = text.trim().trim_start_matches('[').trim_end_matches(']');
    let letters = body
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_letter)
        .collect::<Result<Vec<_>, _>>()?;
    let n = strands.unwrap_or_else(|| letters.iter().map(|l| l.generator + 1).max().unwrap_or(1));
    BraidWord::new(n, letters)
}

/// Number of components of the closure: the cycle count of the braid's
/// permutation.
pub fn closure_components(word: &BraidWord) -> usize {
    let end = word.end_positions();
    let mut seen = vec![false; word.strands + 1];
    let mut cycles = 0;
    for s in 1..=word.strands {
        if !seen[s] {
            cycles += 1;
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                t = end[t];
            }
        }
    }
    cycles
}

/// One passage through a braid crossing during the closure traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct BraidPassage {
    pub letter: usize,
    pub role: Role,
    /// The strand moves from position `i` to `i + 1` here.
    pub descending: bool,
}

pub(crate) fn closure_passages(word: &BraidWord) -> Result<Vec<BraidPassage>, BraidError> {
    word.require_knot()?;
    if word.is_empty() {
        return Err(BraidError::NoCrossings);
    }
    let mut out = Vec::with_capacity(2 * word.len());
    let mut pos = 1usize;
    loop {
        for (i, l) in word.letters.iter().enumerate() {
            let k = l.generator;
            let (role_upper, role_lower) =
                if l.positive { (Role::Over, Role::Under) } else { (Role::Under, Role::Over) };
            if pos == k {
                out.push(BraidPassage { letter: i, role: role_upper, descending: true });
                pos = k + 1;
            } else if pos == k + 1 {
                out.push(BraidPassage { letter: i, role: role_lower, descending: false });
                pos = k;
            }
        }
        if pos == 1 {
            break;
        }
    }
    debug_assert_eq!(out.len(), 2 * word.len());
    Ok(out)
}

/// Gauss code of the closure, read from the top-left point heading right.
///
/// Crossing ids follow the order of first passage. The returned basepoint
/// is edge 0, forward.
pub fn closure_gauss(word: &BraidWord) -> Result<(GaussCode, Basepoint), BraidError> {
    let passages = closure_passages(word)?;
    let mut ids: HashMap<usize, u32> = HashMap::new();
    let code = passages
        .iter()
        .map(|p| {
            let next = ids.len() as u32 + 1;
            Passage::new(*ids.entry(p.letter).or_insert(next), p.role)
        })
        .collect();
    let g = GaussCode::new(code).expect("closure of a knot braid is a valid Gauss code");
    Ok((g, Basepoint::forward(0)))
}

/// Crossings first met from above and from below by the top-left traversal
/// of a positive braid knot.
pub fn ab_counts(word: &BraidWord) -> Result<(usize, usize), BraidError> {
    word.require_positive()?;
    if word.strands == 1 && word.is_empty() {
        return Ok((0, 0));
    }
    let (g, base) = closure_gauss(word)?;
    let w = warp_from(&g, base);
    Ok((w.above.len(), w.below.len()))
}

/// `(C - n + 1) / 2` for a positive braid knot on `n` strands with `C`
/// letters. This is its unknotting number (and genus).
pub fn positive_unknotting(word: &BraidWord) -> Result<usize, BraidError> {
    word.require_positive()?;
    word.require_knot()?;
    let c = word.len() + 1;
    if c < word.strands || (c - word.strands) % 2 == 1 {
        return Err(BraidError::Parity);
    }
    Ok((c - word.strands) / 2)
}

/// Two letters where the same pair of braid strands cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bigon {
    pub first: usize,
    pub second: usize,
    /// The two strands, by 1-based starting position, smaller first.
    pub strands: (usize, usize),
}

fn unordered(p: (usize, usize)) -> (usize, usize) {
    if p.0 < p.1 { p } else { (p.1, p.0) }
}

/// An innermost bigon, leftmost first.
///
/// A candidate is a pair of consecutive crossings of the same two strands;
/// it is innermost when no other pair of strands crosses twice strictly
/// between those letters. The shortest candidate is always innermost, so
/// this returns `None` exactly when every pair of strands crosses at most
/// once.
pub fn find_innermost_bigon(word: &BraidWord) -> Option<Bigon> {
    let pairs: Vec<(usize, usize)> = word.crossing_strands().into_iter().map(unordered).collect();
    for p in 0..pairs.len() {
        let Some(q) = (p + 1..pairs.len()).find(|&q| pairs[q] == pairs[p]) else {
            continue;
        };
        let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
        let nested = pairs[p + 1..q].iter().any(|pr| {
            let n = counts.entry(*pr).or_insert(0);
            *n += 1;
            *n >= 2
        });
        if !nested {
            return Some(Bigon { first: p, second: q, strands: pairs[p] });
        }
    }
    None
}

/// Smooth both crossings of a bigon along the orientation. For a braid
/// crossing the oriented smoothing deletes the letter.
pub fn smooth_bigon(word: &BraidWord, bigon: &Bigon) -> Result<BraidWord, BraidError> {
    let n = word.len();
    if bigon.first >= bigon.second || bigon.second >= n {
        return Err(BraidError::StaleBigon);
    }
    let pairs = word.crossing_strands();
    if unordered(pairs[bigon.first]) != bigon.strands || unordered(pairs[bigon.second]) != bigon.strands {
        return Err(BraidError::StaleBigon);
    }
    let letters = word
        .letters
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != bigon.first && i != bigon.second)
        .map(|(_, l)| *l)
        .collect();
    BraidWord::new(word.strands, letters)
}

/// Record of one strand-removal step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalCertificate {
    /// Letter position of the resolved crossing in the input word.
    pub resolved_crossing: usize,
    /// Starting position of the closed strand that was removed.
    pub removed_strand: usize,
    /// Half the number of crossings along the removed strand, excluding the
    /// resolved one; that many are passed over and that many under.
    pub m: usize,
    /// Index (1-based, in traversal order) of the first ascending strand.
    pub ascending_strand: usize,
}

/// Resolve the crossing between the first ascending traversal strand and
/// its predecessor, then delete the closed strand this splits off.
///
/// Traversal strands are the braid strands taken in the order the closure
/// walks them from the top-left. A strand ascends when it ends higher (at a
/// smaller position) than it starts. The input must be a bigon-free positive
/// braid knot; the result has one strand fewer.
pub fn remove_first_ascending_strand(
    word: &BraidWord,
) -> Result<(BraidWord, RemovalCertificate), BraidError> {
    word.require_positive()?;
    word.require_knot()?;
    if word.strands < 2 {
        return Err(BraidError::NoCrossings);
    }
    if find_innermost_bigon(word).is_some() {
        return Err(BraidError::BigonPresent);
    }
    let end = word.end_positions();
    let mut traversal = vec![1usize];
    while traversal.len() < word.strands {
        traversal.push(end[*traversal.last().unwrap()]);
    }
    let i = traversal
        .iter()
        .position(|&s| end[s] < s)
        .expect("a closed traversal cannot descend on every strand");
    debug_assert!(i >= 1, "the strand starting at the top must descend");
    let (prev, asc) = (traversal[i - 1], traversal[i]);

    let pairs = word.crossing_strands();
    let c = pairs
        .iter()
        .position(|&p| unordered(p) == unordered((prev, asc)))
        .expect("a descending strand and the ascending strand after it must cross");

    let mut resolved = word.letters.clone();
    resolved.remove(c);
    let resolved = BraidWord::new(word.strands, resolved)?;

    // In the resolved word the strand starting at `asc`'s start position
    // closes up on itself.
    let alpha = asc;
    debug_assert_eq!(resolved.end_positions()[alpha], alpha);
    let mut at: Vec<usize> = (1..=word.strands).collect();
    let mut kept = Vec::new();
    let (mut over, mut under) = (0usize, 0usize);
    for l in &resolved.letters {
        let k = l.generator;
        let (upper, lower) = (at[k - 1], at[k]);
        at.swap(k - 1, k);
        if upper == alpha {
            over += 1;
        } else if lower == alpha {
            under += 1;
        } else {
            let alpha_pos = at.iter().position(|&s| s == alpha).unwrap() + 1;
            let g = if alpha_pos < k { k - 1 } else { k };
            kept.push(Letter::pos(g));
        }
    }
    debug_assert_eq!(over, under, "a closed strand in a positive braid goes down as often as up");
    let reduced = BraidWord::new(word.strands - 1, kept)?;
    let cert = RemovalCertificate {
        resolved_crossing: c,
        removed_strand: alpha,
        m: over,
        ascending_strand: i + 1,
    };
    Ok((reduced, cert))
}

/// One step of the reduction of a positive braid knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionStep {
    SmoothBigon {
        bigon: Bigon,
        before: (usize, usize),
        after: (usize, usize),
        word: String,
        strands: usize,
    },
    RemoveStrand {
        certificate: RemovalCertificate,
        before: (usize, usize),
        after: (usize, usize),
        word: String,
        strands: usize,
    },
}

/// Smooth innermost bigons and remove ascending strands until the word has
/// exactly `n - 1` letters, recording `(above, below)` counts around every
/// step.
pub fn reduction_steps(word: &BraidWord) -> Result<Vec<ReductionStep>, BraidError> {
    word.require_positive()?;
    word.require_knot()?;
    let mut steps = Vec::new();
    let mut w = word.clone();
    while w.len() + 1 > w.strands {
        let before = ab_counts(&w)?;
        if let Some(b) = find_innermost_bigon(&w) {
            w = smooth_bigon(&w, &b)?;
            steps.push(ReductionStep::SmoothBigon {
                bigon: b,
                before,
                after: ab_counts(&w)?,
                word: w.to_string(),
                strands: w.strands,
            });
        } else {
            let (next, certificate) = remove_first_ascending_strand(&w)?;
            w = next;
            steps.push(ReductionStep::RemoveStrand {
                certificate,
                before,
                after: ab_counts(&w)?,
                word: w.to_string(),
                strands: w.strands,
            });
        }
    }
    Ok(steps)
}

/// A seeded random positive braid whose closure is a knot, using every
/// generator at least once.
///
/// The strand count is uniform in `2..=n_max`; the letter count is uniform
/// among values `<= c_max` with the parity a knot closure needs.
pub fn random_positive_braid_knot(n_max: usize, c_max: usize, seed: u64) -> Result<BraidWord, BraidError> {
    if n_max < 2 {
        return Err(BraidError::Infeasible(format!("n_max = {n_max} < 2")));
    }
    if c_max + 1 < n_max {
        return Err(BraidError::Infeasible(format!("c_max = {c_max} < n_max - 1 = {}", n_max - 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=n_max);
    let extra_pairs = (c_max - (n - 1)) / 2;
    let letters = n - 1 + 2 * rng.gen_range(0..=extra_pairs);
    loop {
        let mut gens: Vec<usize> = (1..n).collect();
        gens.extend((0..letters - (n - 1)).map(|_| rng.gen_range(1..n)));
        gens.shuffle(&mut rng);
        let w = BraidWord::positive(n, &gens)?;
        if closure_components(&w) == 1 {
            return Ok(w);
        }
    }
}
