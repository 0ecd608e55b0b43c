//! Return words and derived words of uniformly recurrent binary words.
//!
//! A return word of a factor `w` in `u` is a word `v` such that `vw` lies in
//! the language of `u` and contains exactly two occurrences of `w`, as a
//! prefix and as a suffix. Coding the order in which the return words tile
//! `u` yields the derived word of `u` with respect to `w`; derived words are
//! compared up to a permutation of letters, and the letters here are assigned
//! in order of first appearance.
//!
//! Sources are lazy: a substitution fixed point or an exact interval-exchange
//! coding. Prefixes grow geometrically until the requested number of return
//! blocks is visible and the set of distinct return words is stable across
//! the final doubling; a hard cap turns non-termination into an explicit
//! error.

use std::collections::BTreeMap;
use std::fmt;

use crate::morphism::{BinaryWord, MorphismWord};
use crate::normalization::{delta_orbit, normalize, DeltaError};
use crate::words::{
    fixed_point_prefix, language_query, IetParams, WordsError,
};

/// Default hard cap on generated prefix length during stabilization.
pub const DEFAULT_PREFIX_CAP: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivedError {
    FactorAbsent(BinaryWord),
    /// Only one return word keeps appearing: the source is (eventually)
    /// periodic and has no meaningful derived word.
    PeriodicSource(BinaryWord),
    ResourceExhausted { cap: usize },
    /// No power of the rotation operator matches the derived word; the
    /// matching theorem guarantees one, so this signals a bug.
    NoMatch(BinaryWord),
    Words(WordsError),
    Delta(DeltaError),
}

impl fmt::Display for DerivedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivedError::FactorAbsent(w) => write!(f, "factor `{w}` does not occur in the source"),
            DerivedError::PeriodicSource(w) => {
                write!(f, "factor `{w}` has a single return word; the source is periodic")
            }
            DerivedError::ResourceExhausted { cap } => {
                write!(f, "stabilization exceeded the prefix cap of {cap} letters")
            }
            DerivedError::NoMatch(p) => {
                write!(f, "no rotation power matches the derived word of prefix `{p}`")
            }
            DerivedError::Words(e) => write!(f, "{e}"),
            DerivedError::Delta(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DerivedError {}

impl From<WordsError> for DerivedError {
    fn from(e: WordsError) -> Self {
        DerivedError::Words(e)
    }
}

impl From<DeltaError> for DerivedError {
    fn from(e: DeltaError) -> Self {
        DerivedError::Delta(e)
    }
}

/// A lazily generated uniformly recurrent binary word.
#[derive(Debug, Clone)]
pub enum Source {
    /// Fixed point of the substitution named by `name`; `start` picks the
    /// fixed point when there are two.
    FixedPoint {
        name: MorphismWord,
        start: Option<u8>,
    },
    /// Exact interval-exchange coding.
    Iet(Box<IetParams>),
}

impl Source {
    pub fn fixed_point(name: MorphismWord, start: Option<u8>) -> Source {
        Source::FixedPoint { name, start }
    }

    pub fn iet(params: IetParams) -> Source {
        Source::Iet(Box::new(params))
    }

    pub fn prefix(&self, len: usize) -> Result<BinaryWord, DerivedError> {
        match self {
            Source::FixedPoint { name, start } => {
                Ok(fixed_point_prefix(name, len, *start)?)
            }
            Source::Iet(params) => Ok(params.generate(len)),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Source::FixedPoint { name, start } => match start {
                Some(s) => format!("fixed point of `{name}` starting with {s}"),
                None => format!("fixed point of `{name}`"),
            },
            Source::Iet(p) => format!(
                "coding of ({}, {}, {}), {} convention",
                p.l0(),
                p.l1(),
                p.rho(),
                p.boundary()
            ),
        }
    }
}

/// Ascending start indices of all occurrences of `w` in `u`. By convention
/// the empty factor occurs at every index `0..=|u|`.
pub fn occurrences(u: &BinaryWord, w: &BinaryWord) -> Vec<usize> {
    if w.is_empty() {
        return (0..=u.len()).collect();
    }
    let hay = u.as_bytes();
    let needle = w.as_bytes();
    let mut out = Vec::new();
    if needle.len() > hay.len() {
        return out;
    }
    for i in 0..=hay.len() - needle.len() {
        if &hay[i..i + needle.len()] == needle {
            out.push(i);
        }
    }
    out
}

/// The result of a derived-word computation on a finite approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedWordReport {
    /// The factor derived on.
    pub factor: BinaryWord,
    /// Return words in order of first appearance.
    pub return_words: Vec<BinaryWord>,
    /// Coded derived word over `0..k-1`, truncated to the requested length.
    pub derived_prefix: String,
    /// Length of the source prefix reproduced by `reconstruct`.
    pub source_prefix_length: usize,
    /// Filled by rotation matching; `None` straight out of the derivation.
    pub matched_delta_power: Option<usize>,
}

impl DerivedWordReport {
    /// Prefix before the first occurrence plus the coded return blocks; equals
    /// the source prefix of length `source_prefix_length` by construction.
    pub fn reconstruct(&self, source_head: &BinaryWord) -> BinaryWord {
        let mut s = source_head.as_str().to_string();
        for code in self.derived_prefix.bytes() {
            let idx = (code - b'0') as usize;
            s.push_str(self.return_words[idx].as_str());
        }
        BinaryWord::from_string_unchecked(s)
    }
}

struct Derivation {
    prefix_before: usize,
    return_words: Vec<BinaryWord>,
    codes: Vec<u8>,
}

fn derive_on_prefix(u: &BinaryWord, w: &BinaryWord) -> Option<Derivation> {
    let occs = occurrences(u, w);
    if occs.len() < 2 {
        return None;
    }
    let mut return_words: Vec<BinaryWord> = Vec::new();
    let mut codes = Vec::with_capacity(occs.len() - 1);
    for pair in occs.windows(2) {
        let block = BinaryWord::from_string_unchecked(u.as_str()[pair[0]..pair[1]].to_string());
        let idx = match return_words.iter().position(|r| *r == block) {
            Some(i) => i,
            None => {
                return_words.push(block);
                return_words.len() - 1
            }
        };
        codes.push(idx as u8);
    }
    Some(Derivation {
        prefix_before: occs[0],
        return_words,
        codes,
    })
}

/// Derived word of the source with respect to `w`, with at least `n` coded
/// letters, stabilized by doubling. See [`derived_word_with_cap`].
pub fn derived_word(
    source: &Source,
    w: &BinaryWord,
    n: usize,
) -> Result<DerivedWordReport, DerivedError> {
    derived_word_with_cap(source, w, n, DEFAULT_PREFIX_CAP)
}

/// As [`derived_word`] with an explicit prefix cap. The generated prefix
/// doubles until (a) at least `n + 1` complete return blocks are visible and
/// (b) the set of distinct return words is unchanged across the last
/// doubling.
pub fn derived_word_with_cap(
    source: &Source,
    w: &BinaryWord,
    n: usize,
    cap: usize,
) -> Result<DerivedWordReport, DerivedError> {
    if w.is_empty() {
        // The derived word of the empty prefix is the word itself.
        let u = source.prefix(n)?;
        return Ok(DerivedWordReport {
            factor: w.clone(),
            return_words: vec![
                BinaryWord::from_string_unchecked("0".into()),
                BinaryWord::from_string_unchecked("1".into()),
            ],
            derived_prefix: u.as_str().to_string(),
            source_prefix_length: u.len(),
            matched_delta_power: None,
        });
    }

    let mut len = 1024.max((w.len() + 2) * 64);
    let mut previous_set: Option<Vec<BinaryWord>> = None;
    loop {
        let u = source.prefix(len)?;
        if let Some(d) = derive_on_prefix(&u, w) {
            let mut sorted = d.return_words.clone();
            sorted.sort();
            let stable = previous_set.as_deref() == Some(sorted.as_slice());
            if stable && d.codes.len() > n {
                if d.return_words.len() < 2 {
                    return Err(DerivedError::PeriodicSource(w.clone()));
                }
                let taken = n.min(d.codes.len());
                let derived_prefix: String =
                    d.codes[..taken].iter().map(|c| (b'0' + c) as char).collect();
                let consumed: usize = d.codes[..taken]
                    .iter()
                    .map(|&c| d.return_words[c as usize].len())
                    .sum();
                return Ok(DerivedWordReport {
                    factor: w.clone(),
                    return_words: d.return_words,
                    derived_prefix,
                    source_prefix_length: d.prefix_before + consumed,
                    matched_delta_power: None,
                });
            }
            previous_set = Some(sorted);
        } else if u.len() >= (w.len() + 2) * 512 && !u.contains_word(w) {
            return Err(DerivedError::FactorAbsent(w.clone()));
        }
        if len >= cap {
            return Err(DerivedError::ResourceExhausted { cap });
        }
        len = (len * 2).min(cap);
    }
}

/// A letter bijection `pi` with `pi(x) = y` on the compared length, if any.
pub fn equal_up_to_letter_permutation(x: &str, y: &str) -> Option<BTreeMap<char, char>> {
    let n = x.len().min(y.len());
    let mut forward: BTreeMap<char, char> = BTreeMap::new();
    let mut backward: BTreeMap<char, char> = BTreeMap::new();
    for (a, b) in x.chars().take(n).zip(y.chars().take(n)) {
        match forward.get(&a) {
            Some(&mapped) if mapped != b => return None,
            Some(_) => {}
            None => {
                if let Some(&pre) = backward.get(&b) {
                    if pre != a {
                        return None;
                    }
                }
                forward.insert(a, b);
                backward.insert(b, a);
            }
        }
    }
    Some(forward)
}

fn stabilized<T, F>(source: &Source, mut compute: F) -> Result<T, DerivedError>
where
    T: PartialEq,
    F: FnMut(&BinaryWord) -> Result<Option<T>, DerivedError>,
{
    let mut len = 4096;
    let mut previous: Option<T> = None;
    loop {
        let u = source.prefix(len)?;
        if let Some(value) = compute(&u)? {
            if previous.as_ref() == Some(&value) {
                return Ok(value);
            }
            previous = Some(value);
        }
        if len >= DEFAULT_PREFIX_CAP {
            return Err(DerivedError::ResourceExhausted {
                cap: DEFAULT_PREFIX_CAP,
            });
        }
        len *= 2;
    }
}

/// The shortest extension `ws` of `w` that is right special; its derived word
/// equals that of `w`.
pub fn extend_to_right_special(
    source: &Source,
    w: &BinaryWord,
) -> Result<BinaryWord, DerivedError> {
    stabilized(source, |u| {
        if !u.contains_word(w) && !w.is_empty() {
            return Err(DerivedError::FactorAbsent(w.clone()));
        }
        let mut cur = w.clone();
        loop {
            let flags = language_query(u, &cur);
            if flags.is_right_special {
                return Ok(Some(cur));
            }
            let with0 = BinaryWord::from_string_unchecked(format!("{cur}0"));
            let with1 = BinaryWord::from_string_unchecked(format!("{cur}1"));
            let c0 = u.contains_word(&with0);
            let c1 = u.contains_word(&with1);
            match (c0, c1) {
                (true, false) => cur = with0,
                (false, true) => cur = with1,
                // Not enough prefix to decide; grow.
                _ => return Ok(None),
            }
            if cur.len() > u.len() / 4 {
                return Ok(None);
            }
        }
    })
}

/// Result of extending a factor to the left until it becomes left special.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftSpecialExtension {
    /// `pw` with `p` the shortest left prolongation making the factor left
    /// special.
    pub extended: BinaryWord,
    /// `p'w` for the shortest suffix `p'` of `p` such that `p'w` is a prefix
    /// of the source, else `pw`; the derived word of `w` equals the derived
    /// word of this factor.
    pub effective: BinaryWord,
}

pub fn extend_to_left_special(
    source: &Source,
    w: &BinaryWord,
) -> Result<LeftSpecialExtension, DerivedError> {
    stabilized(source, |u| {
        if !u.contains_word(w) && !w.is_empty() {
            return Err(DerivedError::FactorAbsent(w.clone()));
        }
        let mut cur = w.clone();
        loop {
            let flags = language_query(u, &cur);
            if flags.is_left_special {
                break;
            }
            let with0 = BinaryWord::from_string_unchecked(format!("0{cur}"));
            let with1 = BinaryWord::from_string_unchecked(format!("1{cur}"));
            let c0 = u.contains_word(&with0);
            let c1 = u.contains_word(&with1);
            match (c0, c1) {
                (true, false) => cur = with0,
                (false, true) => cur = with1,
                _ => return Ok(None),
            }
            if cur.len() > u.len() / 4 {
                return Ok(None);
            }
        }
        let p_len = cur.len() - w.len();
        let effective = (0..=p_len)
            .map(|keep| cur.suffix_from(p_len - keep))
            .find(|cand| u.starts_with(cand))
            .unwrap_or_else(|| cur.clone());
        Ok(Some(LeftSpecialExtension {
            extended: cur,
            effective,
        }))
    })
}

/// One match of a derived word against a rotation power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixMatch {
    pub prefix: BinaryWord,
    pub delta_power: usize,
}

/// For every right-special prefix of the fixed point of `w` up to
/// `prefix_len` (plus the empty prefix), finds the least `j` such that the
/// derived word matches the fixed point of the `j`-th rotation power, up to a
/// permutation of letters, compared over `derive_len` letters.
pub fn match_derived_to_delta(
    w: &MorphismWord,
    prefix_len: usize,
    derive_len: usize,
) -> Result<Vec<PrefixMatch>, DerivedError> {
    let nw = normalize(w);
    if !nw.is_primitive() {
        return Err(DerivedError::Words(WordsError::NotPrimitive(nw)));
    }
    let orbit = delta_orbit(&nw)?;
    let orbit_prefixes: Vec<BinaryWord> = orbit
        .words()
        .iter()
        .map(|member| fixed_point_prefix(member, derive_len, None))
        .collect::<Result<_, _>>()?;

    let source = Source::fixed_point(nw.clone(), None);
    // Enough prefix to settle right-specialness of short prefixes.
    let probe = source.prefix(((prefix_len + 2) * 64).max(8192))?;

    let mut out = Vec::new();
    for m in 0..=prefix_len {
        let p = probe.prefix(m);
        if m > 0 && !language_query(&probe, &p).is_right_special {
            continue;
        }
        let report = derived_word(&source, &p, derive_len)?;
        let matched = orbit_prefixes.iter().enumerate().find_map(|(j, fixed)| {
            equal_up_to_letter_permutation(&report.derived_prefix, fixed.as_str()).map(|_| j)
        });
        match matched {
            Some(j) => out.push(PrefixMatch {
                prefix: p,
                delta_power: j,
            }),
            None => return Err(DerivedError::NoMatch(p)),
        }
    }
    Ok(out)
}
