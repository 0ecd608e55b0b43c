//! Deciding closure under derivation.
//!
//! A finite set `M` of primitive substitutions is closed under derivation
//! when the derived word with respect to any factor of any fixed point of a
//! member is again fixed by a member. A substitution is closeable when it
//! belongs to some closed set. For the special Sturmian monoid the answer is
//! a dichotomy on the name: names over one of `{b,beta}`, `{b,alpha}`,
//! `{a,beta}`, `{a,alpha}` are closeable, names using three or more distinct
//! generators are not. Equivalently, the fixed point's intercept must be one
//! of `0`, `gamma`, `1-gamma`, `1`.
//!
//! Yasutomi's criterion decides whether a Sturmian word with given exact
//! parameters is fixed by a primitive morphism at all; it is the engine
//! behind the non-closeable direction and is exposed here in both the
//! `(gamma, delta)` and `(theta, rho)` parameterizations.

use std::collections::BTreeMap;
use std::fmt;

use crate::derived::{
    derived_word_with_cap, equal_up_to_letter_permutation, DerivedError, Source,
};
use crate::morphism::{BinaryWord, Letter, MorphismWord};
use crate::normalization::normalize;
use crate::quad::{QuadNumber, Sign};
use crate::words::{
    fixed_point_params, fixed_point_prefix, fixed_point_start, language_query, IetParams,
    WordsError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CloseabilityError {
    NotPrimitive(MorphismWord),
    NotCloseable(MorphismWord),
    RationalSlope(Box<QuadNumber>),
    Words(WordsError),
    Derived(Box<DerivedError>),
}

impl fmt::Display for CloseabilityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CloseabilityError::NotPrimitive(w) => write!(f, "name `{w}` is not primitive"),
            CloseabilityError::NotCloseable(w) => {
                write!(f, "name `{w}` is not closeable under derivation")
            }
            CloseabilityError::RationalSlope(g) => {
                write!(f, "slope {g} is rational; the criterion needs a quadratic irrational")
            }
            CloseabilityError::Words(e) => write!(f, "{e}"),
            CloseabilityError::Derived(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CloseabilityError {}

impl From<WordsError> for CloseabilityError {
    fn from(e: WordsError) -> Self {
        CloseabilityError::Words(e)
    }
}

impl From<DerivedError> for CloseabilityError {
    fn from(e: DerivedError) -> Self {
        CloseabilityError::Derived(Box::new(e))
    }
}

/// Yasutomi's criterion in the `(gamma, delta)` form: the Sturmian word with
/// parameters `(1-gamma, gamma, delta)` is fixed by a primitive morphism iff
/// `delta` lies in `Q(gamma)`, the conjugate of `gamma` avoids `(0, 1)`, and
/// the conjugate of `delta` lies between `conj(gamma)` and `1 - conj(gamma)`
/// (ordered by the sign of `conj(gamma)`). All inequalities are exact and
/// weak.
pub fn yasutomi_gamma(gamma: &QuadNumber, delta: &QuadNumber) -> Result<bool, CloseabilityError> {
    if gamma.is_rational() {
        return Err(CloseabilityError::RationalSlope(Box::new(gamma.clone())));
    }
    // (1) same quadratic field
    if !delta.is_rational() && delta.radicand() != gamma.radicand() {
        return Ok(false);
    }
    let gc = gamma.conjugate();
    let dc = delta.conjugate();
    let one = QuadNumber::one();
    // (2) conjugate of the slope outside (0, 1)
    let below = gc.sign() != Sign::Positive;
    let above = gc.cmp_exact(&one).map_err(WordsError::from)?.is_ge();
    if !below && !above {
        return Ok(false);
    }
    // (3) conjugate of the intercept in the closed interval
    let lo;
    let hi;
    if above {
        lo = one.try_sub(&gc).map_err(WordsError::from)?;
        hi = gc;
    } else {
        hi = one.try_sub(&gc).map_err(WordsError::from)?;
        lo = gc;
    }
    Ok(dc.cmp_exact(&lo).map_err(WordsError::from)?.is_ge()
        && dc.cmp_exact(&hi).map_err(WordsError::from)?.is_le())
}

/// Yasutomi's criterion in the `(theta, rho)` form, for parameters normalized
/// so the longer interval has length 1: fixed by a primitive morphism iff the
/// parameters share a field, `conj(theta) < 0`, and
/// `conj(theta) <= conj(rho) <= 1`.
pub fn yasutomi_theta(theta: &QuadNumber, rho: &QuadNumber) -> Result<bool, CloseabilityError> {
    if theta.is_rational() {
        return Err(CloseabilityError::RationalSlope(Box::new(theta.clone())));
    }
    if !rho.is_rational() && rho.radicand() != theta.radicand() {
        return Ok(false);
    }
    let tc = theta.conjugate();
    if tc.sign() != Sign::Negative {
        return Ok(false);
    }
    let rc = rho.conjugate();
    Ok(rc.cmp_exact(&tc).map_err(WordsError::from)?.is_ge()
        && rc
            .cmp_exact(&QuadNumber::one())
            .map_err(WordsError::from)?
            .is_le())
}

/// A Sturm number: a quadratic irrational in `(0, 1)` whose conjugate avoids
/// `(0, 1)`. Exactly the slopes of substitution-fixed Sturmian words.
pub fn is_sturm_number(gamma: &QuadNumber) -> bool {
    if gamma.is_rational() {
        return false;
    }
    let zero = QuadNumber::zero();
    let one = QuadNumber::one();
    let in_unit = gamma.cmp_exact(&zero).map(|o| o.is_gt()).unwrap_or(false)
        && gamma.cmp_exact(&one).map(|o| o.is_lt()).unwrap_or(false);
    if !in_unit {
        return false;
    }
    let gc = gamma.conjugate();
    gc.sign() != Sign::Positive || gc.cmp_exact(&one).map(|o| o.is_ge()).unwrap_or(false)
}

/// Letterwise projection onto `{b, alpha, beta}`: both Latin letters map to
/// `b`.
pub fn project_h(w: &MorphismWord) -> MorphismWord {
    MorphismWord::new(
        w.letters()
            .iter()
            .map(|&l| if l == Letter::A { Letter::B } else { l })
            .collect(),
    )
}

/// Letterwise projection onto `{a, b, beta}`: both Greek letters map to
/// `beta`.
pub fn project_f(w: &MorphismWord) -> MorphismWord {
    MorphismWord::new(
        w.letters()
            .iter()
            .map(|&l| if l == Letter::Alpha { Letter::Beta } else { l })
            .collect(),
    )
}

/// The four two-generator families of closeable names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterClass {
    BBeta,
    BAlpha,
    ABeta,
    AAlpha,
}

impl LetterClass {
    pub fn as_str(self) -> &'static str {
        match self {
            LetterClass::BBeta => "{b, beta}",
            LetterClass::BAlpha => "{b, alpha}",
            LetterClass::ABeta => "{a, beta}",
            LetterClass::AAlpha => "{a, alpha}",
        }
    }

    /// The class of a primitive name, when its letters fit a single family.
    pub fn of(w: &MorphismWord) -> Option<LetterClass> {
        let latin: Vec<Letter> = w.distinct_letters().into_iter().filter(|l| l.is_latin()).collect();
        let greek: Vec<Letter> = w.distinct_letters().into_iter().filter(|l| l.is_greek()).collect();
        if latin.len() != 1 || greek.len() != 1 {
            return None;
        }
        Some(match (latin[0], greek[0]) {
            (Letter::B, Letter::Beta) => LetterClass::BBeta,
            (Letter::B, Letter::Alpha) => LetterClass::BAlpha,
            (Letter::A, Letter::Beta) => LetterClass::ABeta,
            (Letter::A, Letter::Alpha) => LetterClass::AAlpha,
            _ => unreachable!("latin and greek letters filtered by class"),
        })
    }
}

impl fmt::Display for LetterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The closeable/non-closeable verdict with the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloseabilityVerdict {
    pub closeable: bool,
    pub class: Option<LetterClass>,
    pub reason: String,
}

/// A primitive name is closeable under derivation iff its distinct letters
/// fit one of the four two-generator families.
pub fn is_closeable(w: &MorphismWord) -> Result<CloseabilityVerdict, CloseabilityError> {
    if !w.is_primitive() {
        return Err(CloseabilityError::NotPrimitive(w.clone()));
    }
    match LetterClass::of(w) {
        Some(class) => Ok(CloseabilityVerdict {
            closeable: true,
            class: Some(class),
            reason: format!("name over {class} generates a cyclic-shift closed set"),
        }),
        None => Ok(CloseabilityVerdict {
            closeable: false,
            class: None,
            reason: format!(
                "name uses {} distinct generators; three or more force an unfixable derived word",
                w.distinct_letters().len()
            ),
        }),
    }
}

/// A finite set of substitutions closed under derivation, with the
/// construction provenance of each member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSet {
    members: Vec<MorphismWord>,
    witness: BTreeMap<MorphismWord, String>,
}

impl ClosedSet {
    /// Normalized, deduplicated members.
    pub fn members(&self) -> &[MorphismWord] {
        &self.members
    }

    pub fn provenance(&self, member: &MorphismWord) -> Option<&str> {
        self.witness.get(member).map(|s| s.as_str())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The witness set for a closeable name: all cyclic shifts of the name,
/// united with the shifts of its `F`/`H`/`HF` projections as the letter class
/// requires. Members are stored normalized; shifts that normalize to the
/// same name collapse.
pub fn closed_set(w: &MorphismWord) -> Result<ClosedSet, CloseabilityError> {
    let verdict = is_closeable(w)?;
    let Some(class) = verdict.class else {
        return Err(CloseabilityError::NotCloseable(w.clone()));
    };

    let mut members: Vec<MorphismWord> = Vec::new();
    let mut witness: BTreeMap<MorphismWord, String> = BTreeMap::new();
    let mut add_cycles = |base: &MorphismWord, label: &str| {
        for k in 0..base.len().max(1) {
            let member = normalize(&base.cyc(k));
            if !witness.contains_key(&member) {
                witness.insert(member.clone(), format!("cyc^{k}({label})"));
                members.push(member);
            }
        }
    };

    add_cycles(w, "w");
    match class {
        LetterClass::BBeta => {}
        LetterClass::BAlpha => add_cycles(&project_f(w), "F(w)"),
        LetterClass::ABeta => add_cycles(&project_h(w), "H(w)"),
        LetterClass::AAlpha => {
            add_cycles(&project_h(w), "H(w)");
            add_cycles(&project_f(w), "F(w)");
            add_cycles(&project_h(&project_f(w)), "HF(w)");
        }
    }
    Ok(ClosedSet { members, witness })
}

/// Intercept class of a fixed point in the unit normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaClass {
    Zero,
    Gamma,
    OneMinusGamma,
    One,
    Other,
}

impl DeltaClass {
    pub fn as_str(self) -> &'static str {
        match self {
            DeltaClass::Zero => "0",
            DeltaClass::Gamma => "gamma",
            DeltaClass::OneMinusGamma => "1-gamma",
            DeltaClass::One => "1",
            DeltaClass::Other => "other",
        }
    }
}

impl fmt::Display for DeltaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterceptClassification {
    pub closeable: bool,
    pub delta_class: DeltaClass,
    /// Unit-normalized fixed-point parameters (of the lower fixed point for
    /// two-fixed-point names; both share the intercept).
    pub params: IetParams,
}

/// Classifies a primitive name by the exact intercept of its fixed point:
/// closeable iff `delta` is one of `0`, `gamma`, `1-gamma`, `1`. For names
/// fixing two words both fixed points share the intercept, so the
/// classification is unambiguous.
pub fn classify_by_intercept(w: &MorphismWord) -> Result<InterceptClassification, CloseabilityError> {
    if !w.is_primitive() {
        return Err(CloseabilityError::NotPrimitive(w.clone()));
    }
    let (f0, f1) = crate::morphism::first_letter_fate(w);
    let start = if f0 == 0 && f1 == 1 { Some(1) } else { None };
    let params = fixed_point_params(w, start)?;
    let delta = params.intercept();
    let gamma = params.slope();
    let one = QuadNumber::one();
    let one_minus_gamma = one.try_sub(&gamma).map_err(WordsError::from)?;
    let delta_class = if delta.is_zero() {
        DeltaClass::Zero
    } else if delta == gamma {
        DeltaClass::Gamma
    } else if delta == one_minus_gamma {
        DeltaClass::OneMinusGamma
    } else if delta == one {
        DeltaClass::One
    } else {
        DeltaClass::Other
    };
    Ok(InterceptClassification {
        closeable: delta_class != DeltaClass::Other,
        delta_class,
        params,
    })
}

/// One empirical check: a factor of one fixed point of one member, and the
/// member whose fixed point the derived word matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureCheck {
    pub member: MorphismWord,
    /// Starting letter of the fixed point checked (names over `{a, alpha}`
    /// fix two words).
    pub start: Option<u8>,
    pub factor: BinaryWord,
    pub factor_kind: FactorKind,
    pub matched: Option<MatchedMember>,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    Empty,
    RightSpecialPrefix,
    NonPrefixBispecial,
}

impl FactorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorKind::Empty => "empty",
            FactorKind::RightSpecialPrefix => "right-special prefix",
            FactorKind::NonPrefixBispecial => "non-prefix bispecial",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedMember {
    pub member: MorphismWord,
    pub start: Option<u8>,
    /// Whether the match needed the letter swap.
    pub swapped: bool,
}

/// Report of [`verify_closed_empirically`]; failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub max_factor_len: usize,
    pub derive_len: usize,
    pub checks: Vec<ClosureCheck>,
    pub failures: usize,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn member_fixed_points(member: &MorphismWord) -> Vec<Option<u8>> {
    match fixed_point_start(member, None) {
        Ok(_) => vec![None],
        Err(WordsError::AmbiguousFixedPoint(_)) => vec![Some(0), Some(1)],
        Err(_) => vec![],
    }
}

/// Checks the closure property on finite data: for every member, every fixed
/// point, and every factor up to `max_factor_len` — reduced to the empty
/// word, right-special prefixes, and non-prefix bispecial factors — the
/// derived word must match some member's fixed point up to a letter
/// permutation. A match must persist when the compared length doubles.
pub fn verify_closed_empirically(
    set: &ClosedSet,
    max_factor_len: usize,
    derive_len: usize,
) -> ClosureReport {
    let long_len = derive_len * 2;

    // Fixed-point prefixes of every member, the match targets.
    let mut targets: Vec<(MorphismWord, Option<u8>, BinaryWord)> = Vec::new();
    for member in set.members() {
        for start in member_fixed_points(member) {
            if let Ok(prefix) = fixed_point_prefix(member, long_len, start) {
                targets.push((member.clone(), start, prefix));
            }
        }
    }

    let mut checks = Vec::new();
    let mut failures = 0;

    for member in set.members() {
        for start in member_fixed_points(member) {
            let source = Source::fixed_point(member.clone(), start);
            let factors = candidate_factors(&source, max_factor_len);
            for (factor, kind) in factors {
                let outcome = check_one(&source, &factor, derive_len, long_len, &targets);
                let (matched, passed) = match outcome {
                    Ok(m) => (m, true),
                    Err(_) => (None, false),
                };
                let passed = passed && matched.is_some();
                if !passed {
                    failures += 1;
                }
                checks.push(ClosureCheck {
                    member: member.clone(),
                    start,
                    factor,
                    factor_kind: kind,
                    matched,
                    passed,
                });
            }
        }
    }

    ClosureReport {
        max_factor_len,
        derive_len,
        checks,
        failures,
    }
}

fn check_one(
    source: &Source,
    factor: &BinaryWord,
    derive_len: usize,
    long_len: usize,
    targets: &[(MorphismWord, Option<u8>, BinaryWord)],
) -> Result<Option<MatchedMember>, DerivedError> {
    let short = derived_word_with_cap(source, factor, derive_len, crate::derived::DEFAULT_PREFIX_CAP)?;
    let long = derived_word_with_cap(source, factor, long_len, crate::derived::DEFAULT_PREFIX_CAP)?;
    for (member, start, target) in targets {
        let ok_short =
            equal_up_to_letter_permutation(&short.derived_prefix, &target.as_str()[..derive_len.min(target.len())]);
        if let Some(perm) = ok_short {
            let ok_long = equal_up_to_letter_permutation(
                &long.derived_prefix,
                &target.as_str()[..long_len.min(target.len())],
            );
            if ok_long.is_some() {
                let swapped = perm.get(&'0') == Some(&'1');
                return Ok(Some(MatchedMember {
                    member: member.clone(),
                    start: *start,
                    swapped,
                }));
            }
        }
    }
    Ok(None)
}

/// The factor candidates the closure definition reduces to: the empty word,
/// right-special prefixes, and non-prefix bispecial factors, up to the given
/// length. Determined on a doubling-stable finite prefix.
fn candidate_factors(source: &Source, max_len: usize) -> Vec<(BinaryWord, FactorKind)> {
    let mut probe_len = ((max_len + 2) * 256).max(8192);
    let mut previous: Option<Vec<(BinaryWord, FactorKind)>> = None;
    loop {
        let u = source.prefix(probe_len).expect("source generates prefixes");
        let mut found = vec![(BinaryWord::empty(), FactorKind::Empty)];
        for m in 1..=max_len {
            for candidate in distinct_factors(&u, m) {
                let flags = language_query(&u, &candidate);
                if !flags.is_right_special {
                    continue;
                }
                if u.starts_with(&candidate) {
                    found.push((candidate, FactorKind::RightSpecialPrefix));
                } else if flags.is_bispecial {
                    found.push((candidate, FactorKind::NonPrefixBispecial));
                }
            }
        }
        if previous.as_ref() == Some(&found) {
            return found;
        }
        previous = Some(found);
        probe_len *= 2;
    }
}

fn distinct_factors(u: &BinaryWord, len: usize) -> Vec<BinaryWord> {
    use std::collections::BTreeSet;
    let bytes = u.as_bytes();
    let mut set = BTreeSet::new();
    if bytes.len() >= len {
        for i in 0..=bytes.len() - len {
            set.insert(&bytes[i..i + len]);
        }
    }
    set.into_iter()
        .map(|b| BinaryWord::from_string_unchecked(String::from_utf8(b.to_vec()).unwrap()))
        .collect()
}
