//! Exact two-interval-exchange coding of Sturmian words.
//!
//! A word is the itinerary of an initial point `rho` under the exchange of
//! two intervals of lengths `l0`, `l1`, coded `0` on the left interval and
//! `1` on the right. The `lower` convention uses `[0, l0)` and
//! `[l0, l0+l1)`; the `upper` convention uses `(0, l0]` and `(l0, l0+l1]`.
//! All arithmetic is exact: the orbit of `rho` stays in the lattice
//! `rho + m*l1 - n*l0`, so no precision management is ever needed.
//!
//! The module also transports parameters along elementary morphisms and
//! solves for the exact parameters of substitution fixed points via the
//! Perron eigenvalue of the incidence matrix.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::morphism::{first_letter_fate, incidence_matrix, realize, BinaryWord, Letter, MorphismWord};
use crate::quad::{QuadError, QuadNumber, Rational, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordsError {
    NotPrimitive(MorphismWord),
    /// The substitution fixes two words; a starting letter must be chosen.
    AmbiguousFixedPoint(MorphismWord),
    NoFixedPointWithStart(MorphismWord, u8),
    OutOfDomain(String),
    InvalidParams(String),
    Quad(QuadError),
}

impl fmt::Display for WordsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordsError::NotPrimitive(w) => write!(f, "name `{w}` is not primitive"),
            WordsError::AmbiguousFixedPoint(w) => {
                write!(f, "`{w}` fixes two words; pass a starting letter (0 or 1)")
            }
            WordsError::NoFixedPointWithStart(w, s) => {
                write!(f, "`{w}` has no fixed point starting with {s}")
            }
            WordsError::OutOfDomain(s) => write!(f, "point outside the exchange domain: {s}"),
            WordsError::InvalidParams(s) => write!(f, "invalid parameters: {s}"),
            WordsError::Quad(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for WordsError {}

impl From<QuadError> for WordsError {
    fn from(e: QuadError) -> Self {
        WordsError::Quad(e)
    }
}

/// Interval convention: half-open from the left (`lower`) or from the right
/// (`upper`). The two codings differ only when the orbit hits an interval
/// endpoint; this module never silently identifies them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Lower,
    Upper,
}

impl Boundary {
    pub fn as_str(self) -> &'static str {
        match self {
            Boundary::Lower => "lower",
            Boundary::Upper => "upper",
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Boundary {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lower" => Ok(Boundary::Lower),
            "upper" => Ok(Boundary::Upper),
            other => Err(format!("expected `lower` or `upper`, got `{other}`")),
        }
    }
}

/// Exact parameters `(l0, l1, rho)` of a two-interval-exchange coding plus
/// the boundary convention.
#[derive(Debug, Clone, PartialEq)]
pub struct IetParams {
    l0: QuadNumber,
    l1: QuadNumber,
    rho: QuadNumber,
    boundary: Boundary,
}

impl IetParams {
    /// Validates positivity of the lengths, a common field, and the intercept
    /// range (`0 <= rho < l0+l1` lower, `0 < rho <= l0+l1` upper).
    pub fn new(
        l0: QuadNumber,
        l1: QuadNumber,
        rho: QuadNumber,
        boundary: Boundary,
    ) -> Result<Self, WordsError> {
        if !l0.is_positive() || !l1.is_positive() {
            return Err(WordsError::InvalidParams(format!(
                "interval lengths must be positive, got l0 = {l0}, l1 = {l1}"
            )));
        }
        let total = l0.try_add(&l1)?;
        let low_ok = match boundary {
            Boundary::Lower => rho.sign() != Sign::Negative && rho.cmp_exact(&total)?.is_lt(),
            Boundary::Upper => rho.is_positive() && rho.cmp_exact(&total)?.is_le(),
        };
        if !low_ok {
            return Err(WordsError::InvalidParams(format!(
                "intercept rho = {rho} outside the {boundary} domain of length {total}"
            )));
        }
        Ok(IetParams { l0, l1, rho, boundary })
    }

    pub fn l0(&self) -> &QuadNumber {
        &self.l0
    }

    pub fn l1(&self) -> &QuadNumber {
        &self.l1
    }

    pub fn rho(&self) -> &QuadNumber {
        &self.rho
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn total(&self) -> QuadNumber {
        self.l0.try_add(&self.l1).expect("lengths share a field")
    }

    /// Slope `gamma = l1 / (l0 + l1)`.
    pub fn slope(&self) -> QuadNumber {
        self.l1.try_div(&self.total()).expect("total is nonzero")
    }

    /// Intercept `delta = rho / (l0 + l1)`.
    pub fn intercept(&self) -> QuadNumber {
        self.rho.try_div(&self.total()).expect("total is nonzero")
    }

    /// Rescales so that `l0 + l1 = 1`, exposing `(1-gamma, gamma, delta)`.
    pub fn normalized_unit(&self) -> IetParams {
        self.scale(&self.total().recip().expect("total is nonzero"))
    }

    /// Rescales so that the longer interval has length 1; returns
    /// `(theta, rho)` with `theta` the short/long ratio in `(0, 1]`.
    pub fn theta_form(&self) -> (QuadNumber, QuadNumber) {
        let l0_longer = self
            .l0
            .cmp_exact(&self.l1)
            .expect("lengths share a field")
            .is_ge();
        let longer = if l0_longer { &self.l0 } else { &self.l1 };
        let shorter = if l0_longer { &self.l1 } else { &self.l0 };
        (
            shorter.try_div(longer).expect("longer is positive"),
            self.rho.try_div(longer).expect("longer is positive"),
        )
    }

    pub fn scale(&self, c: &QuadNumber) -> IetParams {
        assert!(c.is_positive(), "scaling constant must be positive");
        IetParams {
            l0: self.l0.try_mul(c).expect("same field"),
            l1: self.l1.try_mul(c).expect("same field"),
            rho: self.rho.try_mul(c).expect("same field"),
            boundary: self.boundary,
        }
    }

    fn in_left_interval(&self, x: &QuadNumber) -> Result<bool, WordsError> {
        let total = self.total();
        match self.boundary {
            Boundary::Lower => {
                if x.sign() == Sign::Negative || x.cmp_exact(&total)?.is_ge() {
                    return Err(WordsError::OutOfDomain(format!(
                        "{x} not in [0, {total})"
                    )));
                }
                Ok(x.cmp_exact(&self.l0)?.is_lt())
            }
            Boundary::Upper => {
                if !x.is_positive() || x.cmp_exact(&total)?.is_gt() {
                    return Err(WordsError::OutOfDomain(format!(
                        "{x} not in (0, {total}]"
                    )));
                }
                Ok(x.cmp_exact(&self.l0)?.is_le())
            }
        }
    }

    /// One step of the exchange: `x + l1` on the left interval, `x - l0` on
    /// the right.
    pub fn iet_map(&self, x: &QuadNumber) -> Result<QuadNumber, WordsError> {
        if self.in_left_interval(x)? {
            Ok(x.try_add(&self.l1)?)
        } else {
            Ok(x.try_sub(&self.l0)?)
        }
    }

    /// The first `n` letters of the coding of the orbit of `rho`.
    pub fn generate(&self, n: usize) -> BinaryWord {
        let mut out = String::with_capacity(n);
        let mut x = self.rho.clone();
        for _ in 0..n {
            let left = self
                .in_left_interval(&x)
                .expect("orbit stays inside the domain");
            out.push(if left { '0' } else { '1' });
            x = self.iet_map(&x).expect("orbit stays inside the domain");
        }
        BinaryWord::from_string_unchecked(out)
    }

    /// Parameters of the shifted word: the intercept advances one exchange
    /// step, lengths and boundary stay put.
    pub fn shift(&self) -> IetParams {
        let rho = self.iet_map(&self.rho).expect("intercept is in the domain");
        IetParams {
            l0: self.l0.clone(),
            l1: self.l1.clone(),
            rho,
            boundary: self.boundary,
        }
    }

    /// Parameter transport along one elementary morphism:
    /// `b: (l0+l1, l1, rho)`, `a: (l0+l1, l1, rho+l1)`,
    /// `beta: (l0, l0+l1, rho+l0)`, `alpha: (l0, l0+l1, rho)`.
    pub fn image(&self, g: Letter) -> IetParams {
        let total = self.total();
        let (l0, l1, rho) = match g {
            Letter::B => (total, self.l1.clone(), self.rho.clone()),
            Letter::A => (
                total,
                self.l1.clone(),
                self.rho.try_add(&self.l1).expect("same field"),
            ),
            Letter::Beta => (
                self.l0.clone(),
                total,
                self.rho.try_add(&self.l0).expect("same field"),
            ),
            Letter::Alpha => (self.l0.clone(), total, self.rho.clone()),
        };
        IetParams::new(l0, l1, rho, self.boundary).expect("transport preserves validity")
    }
}

/// Resolves which fixed point is meant: errors when the name fixes two words
/// and no start is given, or when the requested start is impossible.
pub fn fixed_point_start(w: &MorphismWord, start: Option<u8>) -> Result<u8, WordsError> {
    if !w.is_primitive() {
        return Err(WordsError::NotPrimitive(w.clone()));
    }
    let (f0, f1) = first_letter_fate(w);
    if f0 == 0 && f1 == 1 {
        match start {
            None => Err(WordsError::AmbiguousFixedPoint(w.clone())),
            Some(s) if s <= 1 => Ok(s),
            Some(s) => Err(WordsError::NoFixedPointWithStart(w.clone(), s)),
        }
    } else {
        // Both letters funnel to the same first letter.
        debug_assert_eq!(f0, f1);
        match start {
            Some(s) if s != f0 => Err(WordsError::NoFixedPointWithStart(w.clone(), s)),
            _ => Ok(f0),
        }
    }
}

fn bigint_to_quad(n: &BigInt) -> QuadNumber {
    QuadNumber::from_rational(Rational::from_integer(n.clone()))
}

/// Exact parameters of the fixed point of `realize(w)`, normalized to
/// `l0 + l1 = 1`.
///
/// The slope comes from the Perron eigenvector of the incidence matrix; the
/// intercept solves `rho * lambda = rho + c0*l0 + c1*l1` where `(c0, c1)`
/// accumulates the affine offsets of [`IetParams::image`] along the name.
/// Names over `{a, alpha}` fix two words sharing `rho = l0`; `start = 1`
/// selects the lower coding, `start = 0` the upper one.
pub fn fixed_point_params(w: &MorphismWord, start: Option<u8>) -> Result<IetParams, WordsError> {
    let first = fixed_point_start(w, start)?;

    // Fold the affine transport right to left: lengths as integer rows of m,
    // the rho offset as an integer combination c of the original lengths.
    let mut m = [
        [BigInt::one(), BigInt::zero()],
        [BigInt::zero(), BigInt::one()],
    ];
    let mut c = [BigInt::zero(), BigInt::zero()];
    for &g in w.letters().iter().rev() {
        match g {
            Letter::A => {
                c[0] += &m[1][0];
                c[1] += &m[1][1];
            }
            Letter::Beta => {
                c[0] += &m[0][0];
                c[1] += &m[0][1];
            }
            Letter::B | Letter::Alpha => {}
        }
        if g.is_latin() {
            // lengths become (l0+l1, l1)
            let r0 = [&m[0][0] + &m[1][0], &m[0][1] + &m[1][1]];
            m[0] = r0;
        } else {
            // lengths become (l0, l0+l1)
            let r1 = [&m[0][0] + &m[1][0], &m[0][1] + &m[1][1]];
            m[1] = r1;
        }
    }
    debug_assert_eq!(
        incidence_matrix(w).e,
        [
            [m[0][0].clone(), m[0][1].clone()],
            [m[1][0].clone(), m[1][1].clone()]
        ],
        "length transport equals the incidence matrix"
    );

    // Perron eigenvalue of m: the larger root of x^2 - t x + det.
    let t = &m[0][0] + &m[1][1];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    let disc = &t * &t - BigInt::from(4) * &det;
    debug_assert!(disc.is_positive());
    let disc_u: BigUint = disc.to_biguint().expect("positive discriminant");
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let lambda = bigint_to_quad(&t)
        .try_add(&quad_sqrt_biguint(&disc_u))?
        .mul_rational(&half);
    debug_assert!(!lambda.is_rational(), "primitive names have irrational dilation");

    // Eigenvector from the first row: (m00 - lambda) l0 + m01 l1 = 0.
    let l0 = bigint_to_quad(&m[0][1]);
    let l1 = lambda.try_sub(&bigint_to_quad(&m[0][0]))?;
    debug_assert!(l0.is_positive() && l1.is_positive());
    let rho_num = bigint_to_quad(&c[0])
        .try_mul(&l0)?
        .try_add(&bigint_to_quad(&c[1]).try_mul(&l1)?)?;
    let rho = rho_num.try_div(&lambda.try_sub(&QuadNumber::one())?)?;

    // Normalize to l0 + l1 = 1.
    let scale = l0.try_add(&l1)?.recip()?;
    let l0 = l0.try_mul(&scale)?;
    let l1 = l1.try_mul(&scale)?;
    let rho = rho.try_mul(&scale)?;
    let total = l0.try_add(&l1)?;

    let boundary = if rho.cmp_exact(&total)?.is_eq() {
        Boundary::Upper
    } else if rho.is_zero() {
        Boundary::Lower
    } else {
        match rho.cmp_exact(&l0)? {
            std::cmp::Ordering::Equal => {
                // Two codings split at the discontinuity; `first` picks one.
                if first == 1 {
                    Boundary::Lower
                } else {
                    Boundary::Upper
                }
            }
            _ => Boundary::Lower,
        }
    };
    let params = IetParams::new(l0, l1, rho, boundary)?;
    debug_assert_eq!(params.generate(1).bit(0), first);
    Ok(params)
}

fn quad_sqrt_biguint(n: &BigUint) -> QuadNumber {
    QuadNumber::sqrt_biguint(n.clone()).expect("positive radicand")
}

/// The first `n` letters of the fixed point of `realize(w)`, computed by
/// iterating the substitution from its prolongable starting letter.
pub fn fixed_point_prefix(
    w: &MorphismWord,
    n: usize,
    start: Option<u8>,
) -> Result<BinaryWord, WordsError> {
    let first = fixed_point_start(w, start)?;
    if n == 0 {
        return Ok(BinaryWord::empty());
    }
    let phi = realize(w);
    let mut s = BinaryWord::from_bit(first);
    debug_assert!(phi.apply(&s).starts_with(&s), "start letter is prolongable");
    while s.len() < n {
        let next = phi.apply(&s);
        debug_assert!(next.len() > s.len(), "primitive substitutions grow");
        s = next;
    }
    Ok(s.prefix(n))
}

/// Factor flags of `w` relative to the finite prefix `u`. Answers are exact
/// for the prefix supplied; callers wanting certainty about an infinite word
/// must pass a prefix long enough for their factor length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorFlags {
    pub is_factor: bool,
    pub is_right_special: bool,
    pub is_left_special: bool,
    pub is_bispecial: bool,
}

pub fn language_query(u: &BinaryWord, w: &BinaryWord) -> FactorFlags {
    let hay = u.as_str();
    let needle = w.as_str();
    let is_factor = hay.contains(needle);
    let right = hay.contains(&format!("{needle}0")) && hay.contains(&format!("{needle}1"));
    let left = hay.contains(&format!("0{needle}")) && hay.contains(&format!("1{needle}"));
    FactorFlags {
        is_factor,
        is_right_special: right,
        is_left_special: left,
        is_bispecial: right && left,
    }
}

/// Number of distinct factors of each length `1..=max_len` in `u`.
pub fn factor_complexity(u: &BinaryWord, max_len: usize) -> Vec<usize> {
    use std::collections::HashSet;
    let bytes = u.as_bytes();
    (1..=max_len)
        .map(|m| {
            let mut set: HashSet<&[u8]> = HashSet::new();
            if bytes.len() >= m {
                for i in 0..=bytes.len() - m {
                    set.insert(&bytes[i..i + m]);
                }
            }
            set.len()
        })
        .collect()
}
