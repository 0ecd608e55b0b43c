//! The relation side of the monoid: rewriting to normal form, equality of
//! morphisms, and the rotate-and-normalize operator on normalized names.
//!
//! The monoid is presented by `alpha a^k beta = beta b^k alpha` and
//! `a alpha^k b = b beta^k a` for every `k >= 0`. A name is *normalized*
//! when it contains no left-hand side `alpha a^k beta` or `a alpha^k b`
//! (the `k = 0` cases are the two-letter factors `alpha beta` and `a b`).
//! The normal form is the lexicographically largest word in the congruence
//! class under `a < b`, `alpha < beta`; rewriting preserves the positions of
//! Latin and Greek letters, so the class is finite and the leftmost-rewrite
//! loop terminates.

use std::collections::HashMap;
use std::fmt;

use crate::morphism::{Letter, MorphismWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaError {
    /// The operator is defined on normalized names only.
    NotNormalized(MorphismWord),
    /// Names over `{a, alpha}` alone have no `a^k beta` / `alpha^k b` prefix
    /// to rotate.
    NoGreekLatinPivot(MorphismWord),
}

impl fmt::Display for DeltaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaError::NotNormalized(w) => write!(f, "name `{w}` is not normalized"),
            DeltaError::NoGreekLatinPivot(w) => {
                write!(f, "name `{w}` uses only a/alpha; the rotation operator is undefined")
            }
        }
    }
}

impl std::error::Error for DeltaError {}

/// Leftmost occurrence of a rewriting-rule left-hand side, as
/// `(start, length, replacement)`.
fn find_rewrite(letters: &[Letter]) -> Option<(usize, usize, Vec<Letter>)> {
    let n = letters.len();
    for i in 0..n {
        match letters[i] {
            Letter::Alpha => {
                let mut j = i + 1;
                while j < n && letters[j] == Letter::A {
                    j += 1;
                }
                if j < n && letters[j] == Letter::Beta {
                    let k = j - i - 1;
                    let mut rep = Vec::with_capacity(k + 2);
                    rep.push(Letter::Beta);
                    rep.extend(std::iter::repeat_n(Letter::B, k));
                    rep.push(Letter::Alpha);
                    return Some((i, k + 2, rep));
                }
            }
            Letter::A => {
                let mut j = i + 1;
                while j < n && letters[j] == Letter::Alpha {
                    j += 1;
                }
                if j < n && letters[j] == Letter::B {
                    let k = j - i - 1;
                    let mut rep = Vec::with_capacity(k + 2);
                    rep.push(Letter::B);
                    rep.extend(std::iter::repeat_n(Letter::Beta, k));
                    rep.push(Letter::A);
                    return Some((i, k + 2, rep));
                }
            }
            _ => {}
        }
    }
    None
}

/// True iff no rule left-hand side occurs, i.e. the name is its own normal
/// form.
pub fn is_normalized(w: &MorphismWord) -> bool {
    find_rewrite(w.letters()).is_none()
}

/// The normal form: rewrites the leftmost left-hand side until none remains.
/// Each step is a strict lexicographic increase inside a finite class, so
/// this terminates with the unique rule-free representative.
pub fn normalize(w: &MorphismWord) -> MorphismWord {
    let mut letters = w.letters().to_vec();
    while let Some((start, len, rep)) = find_rewrite(&letters) {
        letters.splice(start..start + len, rep);
    }
    MorphismWord::new(letters)
}

/// Two names realize the same substitution iff their normal forms agree.
pub fn morphisms_equal(u: &MorphismWord, v: &MorphismWord) -> bool {
    normalize(u) == normalize(v)
}

/// Rotate-and-normalize: for a normalized `w = a^k beta w'` this is
/// `N(w' a^k beta)`, for `w = alpha^k b w'` it is `N(w' alpha^k b)`.
/// Length is preserved.
pub fn delta(w: &MorphismWord) -> Result<MorphismWord, DeltaError> {
    if !is_normalized(w) {
        return Err(DeltaError::NotNormalized(w.clone()));
    }
    if w.is_a_alpha_only() {
        return Err(DeltaError::NoGreekLatinPivot(w.clone()));
    }
    let letters = w.letters();
    // A normalized name outside {a, alpha}* starts with a^k beta or alpha^k b.
    let head = letters[0];
    let pivot = match head {
        Letter::A | Letter::Beta => Letter::Beta,
        Letter::Alpha | Letter::B => Letter::B,
    };
    let k = letters
        .iter()
        .take_while(|&&l| l == Letter::A || l == Letter::Alpha)
        .count();
    debug_assert_eq!(letters[k], pivot, "normalized prefix must be a^k beta or alpha^k b");
    let rotated = w.cyc(k + 1);
    let out = normalize(&rotated);
    debug_assert_eq!(out.len(), w.len());
    Ok(out)
}

/// The eventually periodic orbit of a name under [`delta`], starting from its
/// normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaOrbit {
    preperiod: usize,
    period: usize,
    words: Vec<MorphismWord>,
}

impl DeltaOrbit {
    pub fn preperiod(&self) -> usize {
        self.preperiod
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// The orbit `delta^0(w), ..., delta^(preperiod + period - 1)(w)`, all
    /// pairwise distinct and normalized.
    pub fn words(&self) -> &[MorphismWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `delta^j` of the base word for any `j`, folding into the periodic part.
    pub fn power(&self, j: usize) -> &MorphismWord {
        if j < self.words.len() {
            &self.words[j]
        } else {
            &self.words[self.preperiod + (j - self.preperiod) % self.period]
        }
    }
}

/// Iterates [`delta`] from `normalize(w)` until the first repetition and
/// reports the minimal preperiod and period.
pub fn delta_orbit(w: &MorphismWord) -> Result<DeltaOrbit, DeltaError> {
    let start = normalize(w);
    if start.is_a_alpha_only() {
        return Err(DeltaError::NoGreekLatinPivot(start));
    }
    let mut seen: HashMap<MorphismWord, usize> = HashMap::new();
    let mut words = Vec::new();
    let mut current = start;
    loop {
        if let Some(&first) = seen.get(&current) {
            let period = words.len() - first;
            return Ok(DeltaOrbit {
                preperiod: first,
                period,
                words,
            });
        }
        seen.insert(current.clone(), words.len());
        words.push(current.clone());
        current = delta(&current)?;
    }
}
