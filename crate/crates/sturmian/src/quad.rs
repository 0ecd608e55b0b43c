//! Exact arithmetic in real quadratic fields `Q(sqrt(D))`.
//!
//! A [`QuadNumber`] is `c + d*sqrt(D)` with rational `c`, `d` and a square-free
//! integer radicand `D >= 1`. `D = 1` is the canonical embedding of the
//! rationals (forced `d = 0`). Two numbers are operable together when their
//! radicands agree or at least one of them is rational; mixing distinct
//! irrational radicands is an error rather than a silent widening to a
//! degree-4 field.
//!
//! Every decision (sign, comparison, interval membership) is exact: no
//! floating point appears anywhere outside of [`QuadNumber::to_f64`], which
//! exists for display and for test oracles.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar; always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// The exact sign of a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadError {
    DivisionByZero,
    /// Operands lie in distinct irrational quadratic fields.
    IncompatibleFields(BigUint, BigUint),
    NonPositiveRadicand,
    Syntax(String),
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadError::DivisionByZero => write!(f, "division by zero"),
            QuadError::IncompatibleFields(a, b) => {
                write!(f, "incompatible quadratic fields: sqrt({a}) vs sqrt({b})")
            }
            QuadError::NonPositiveRadicand => write!(f, "radicand must be a positive integer"),
            QuadError::Syntax(s) => write!(f, "cannot parse quadratic number: {s}"),
        }
    }
}

impl std::error::Error for QuadError {}

/// An element `c + d*sqrt(D)` of a real quadratic field, kept canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadNumber {
    rational_part: Rational,
    radical_coeff: Rational,
    radicand: BigUint,
}

/// Splits `n` into `(root, core)` with `n = root^2 * core` and `core`
/// square-free up to the trial-division bound; a leftover perfect square is
/// still extracted exactly.
fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    let mut m = n.clone();
    let mut root = BigUint::one();
    let mut core = BigUint::one();
    let mut p: u64 = 2;
    while p <= 9973 {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0u64;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        for _ in 0..e / 2 {
            root *= &pb;
        }
        if e % 2 == 1 {
            core *= &pb;
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if !m.is_one() {
        let s = m.sqrt();
        if &s * &s == m {
            root *= s;
        } else {
            core *= m;
        }
    }
    (root, core)
}

fn biguint_to_rational(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

impl QuadNumber {
    /// Builds `c + d*sqrt(n)` in canonical form. `n` need not be square-free;
    /// square factors migrate into the coefficient.
    pub fn new(rational_part: Rational, radical_coeff: Rational, radicand: u64) -> Result<Self, QuadError> {
        if radicand == 0 {
            return Err(QuadError::NonPositiveRadicand);
        }
        Ok(Self::canonical(rational_part, radical_coeff, BigUint::from(radicand)))
    }

    fn canonical(c: Rational, d: Rational, radicand: BigUint) -> Self {
        debug_assert!(!radicand.is_zero());
        let (root, core) = square_free_split(&radicand);
        let mut c = c;
        let mut d = d * biguint_to_rational(&root);
        let mut core = core;
        if core.is_one() {
            c += d.clone();
            d = Rational::zero();
        }
        if d.is_zero() {
            core = BigUint::one();
        }
        QuadNumber {
            rational_part: c,
            radical_coeff: d,
            radicand: core,
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadNumber {
            rational_part: r,
            radical_coeff: Rational::zero(),
            radicand: BigUint::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `sqrt(n)` as a field element.
    pub fn sqrt(n: u64) -> Result<Self, QuadError> {
        Self::new(Rational::zero(), Rational::one(), n)
    }

    /// `sqrt(n)` for radicands beyond `u64`, as produced by eigenvalue
    /// discriminants of long names.
    pub fn sqrt_biguint(n: BigUint) -> Result<Self, QuadError> {
        if n.is_zero() {
            return Err(QuadError::NonPositiveRadicand);
        }
        Ok(Self::canonical(Rational::zero(), Rational::one(), n))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational_part
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.radical_coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radical_coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.radical_coeff.is_zero()
    }

    /// Field automorphism `c + d*sqrt(D) -> c - d*sqrt(D)`.
    pub fn conjugate(&self) -> Self {
        QuadNumber {
            rational_part: self.rational_part.clone(),
            radical_coeff: -self.radical_coeff.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// Exact sign, decided by case analysis on `c`, `d` and the integer
    /// comparison of `c^2` against `d^2 * D`.
    pub fn sign(&self) -> Sign {
        let c = &self.rational_part;
        let d = &self.radical_coeff;
        if d.is_zero() {
            return if c.is_zero() {
                Sign::Zero
            } else if c.is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        if c.is_zero() {
            return if d.is_positive() { Sign::Positive } else { Sign::Negative };
        }
        match (c.is_positive(), d.is_positive()) {
            (true, true) => Sign::Positive,
            (false, false) => Sign::Negative,
            (true, false) => {
                // value = c - |d| sqrt(D): positive iff c^2 > d^2 D
                let lhs = c * c;
                let rhs = d * d * biguint_to_rational(&self.radicand);
                match lhs.cmp(&rhs) {
                    Ordering::Greater => Sign::Positive,
                    Ordering::Less => Sign::Negative,
                    // impossible for square-free D >= 2 and d != 0
                    Ordering::Equal => Sign::Zero,
                }
            }
            (false, true) => {
                let lhs = d * d * biguint_to_rational(&self.radicand);
                let rhs = c * c;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => Sign::Positive,
                    Ordering::Less => Sign::Negative,
                    Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    fn unified_radicand(&self, other: &Self) -> Result<BigUint, QuadError> {
        if self.is_rational() {
            Ok(other.radicand.clone())
        } else if other.is_rational() || self.radicand == other.radicand {
            Ok(self.radicand.clone())
        } else {
            Err(QuadError::IncompatibleFields(
                self.radicand.clone(),
                other.radicand.clone(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, QuadError> {
        let rad = self.unified_radicand(other)?;
        Ok(QuadNumber::canonical(
            &self.rational_part + &other.rational_part,
            &self.radical_coeff + &other.radical_coeff,
            rad,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, QuadError> {
        self.try_add(&(-other.clone()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, QuadError> {
        let rad = self.unified_radicand(other)?;
        let d_rat = biguint_to_rational(&rad);
        let c = &self.rational_part * &other.rational_part
            + &self.radical_coeff * &other.radical_coeff * &d_rat;
        let d = &self.rational_part * &other.radical_coeff
            + &self.radical_coeff * &other.rational_part;
        Ok(QuadNumber::canonical(c, d, rad))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, QuadError> {
        self.try_mul(&other.recip()?)
    }

    /// Multiplicative inverse via the conjugate: `1/z = conj(z) / norm(z)`.
    pub fn recip(&self) -> Result<Self, QuadError> {
        if self.is_zero() {
            return Err(QuadError::DivisionByZero);
        }
        let norm = &self.rational_part * &self.rational_part
            - &self.radical_coeff * &self.radical_coeff * biguint_to_rational(&self.radicand);
        debug_assert!(!norm.is_zero(), "nonzero element has nonzero norm");
        Ok(QuadNumber::canonical(
            &self.rational_part / &norm,
            -(&self.radical_coeff / &norm),
            self.radicand.clone(),
        ))
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        QuadNumber::canonical(
            &self.rational_part * r,
            &self.radical_coeff * r,
            self.radicand.clone(),
        )
    }

    /// Exact comparison; errors when the operands live in distinct fields.
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering, QuadError> {
        let diff = self.try_sub(other)?;
        Ok(match diff.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    /// Approximate value, for display and test oracles only.
    pub fn to_f64(&self) -> f64 {
        let rat = |r: &Rational| {
            r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
        };
        rat(&self.rational_part)
            + rat(&self.radical_coeff) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl PartialOrd for QuadNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

impl Neg for QuadNumber {
    type Output = QuadNumber;
    fn neg(self) -> QuadNumber {
        QuadNumber {
            rational_part: -self.rational_part,
            radical_coeff: -self.radical_coeff,
            radicand: self.radicand,
        }
    }
}

macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &QuadNumber {
            type Output = QuadNumber;
            fn $method(self, rhs: &QuadNumber) -> QuadNumber {
                self.$checked(rhs).expect("quadratic field operation failed")
            }
        }
        impl $trait for QuadNumber {
            type Output = QuadNumber;
            fn $method(self, rhs: QuadNumber) -> QuadNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

quad_binop!(Add, add, try_add);
quad_binop!(Sub, sub, try_sub);
quad_binop!(Mul, mul, try_mul);
quad_binop!(Div, div, try_div);

impl fmt::Display for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical_coeff.is_zero() {
            return write!(f, "{}", self.rational_part);
        }
        let radical = if self.radical_coeff.abs().is_one() {
            format!("sqrt({})", self.radicand)
        } else {
            format!("{}*sqrt({})", self.radical_coeff.abs(), self.radicand)
        };
        if self.rational_part.is_zero() {
            if self.radical_coeff.is_negative() {
                write!(f, "-{radical}")
            } else {
                write!(f, "{radical}")
            }
        } else if self.radical_coeff.is_negative() {
            write!(f, "{}-{radical}", self.rational_part)
        } else {
            write!(f, "{}+{radical}", self.rational_part)
        }
    }
}

impl fmt::Debug for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadNumber({self})")
    }
}

fn parse_rational(s: &str) -> Result<Rational, QuadError> {
    let t = s.trim();
    if t.is_empty() || t == "+" {
        return Ok(Rational::one());
    }
    if t == "-" {
        return Ok(-Rational::one());
    }
    Rational::from_str(t).map_err(|_| QuadError::Syntax(format!("bad rational `{t}`")))
}

impl FromStr for QuadNumber {
    type Err = QuadError;

    /// Grammar: `R`, `[R (+|-)] [R*] sqrt(N)` with `R` a rational `p/q` or
    /// integer and `N` a positive integer. `sqrt(12)` canonicalizes to
    /// `2*sqrt(3)`.
    fn from_str(s: &str) -> Result<Self, QuadError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(QuadError::Syntax("empty input".into()));
        }
        let Some(pos) = t.find("sqrt") else {
            return Ok(QuadNumber::from_rational(parse_rational(&t)?));
        };
        let tail = &t[pos + 4..];
        let inner = tail
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| QuadError::Syntax(format!("bad radical syntax in `{s}`")))?;
        if inner.starts_with('-') || inner == "0" {
            return Err(QuadError::NonPositiveRadicand);
        }
        let radicand: u64 = inner
            .parse()
            .map_err(|_| QuadError::Syntax(format!("bad radicand `{inner}`")))?;
        if radicand == 0 {
            return Err(QuadError::NonPositiveRadicand);
        }

        let mut head = &t[..pos];
        head = head.strip_suffix('*').unwrap_or(head);
        // Split the optional leading rational from the radical coefficient at
        // the last top-level sign; rationals carry signs only up front.
        let split_at = head
            .char_indices()
            .skip(1)
            .filter(|(i, c)| (*c == '+' || *c == '-') && !head[..*i].ends_with('/'))
            .map(|(i, _)| i)
            .last();
        let (c_str, d_str) = match split_at {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let c = if c_str.is_empty() {
            Rational::zero()
        } else {
            parse_rational(c_str)?
        };
        let d = match d_str {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => {
                let (sign, body) = match other.strip_prefix('+') {
                    Some(b) => (Rational::one(), b),
                    None => match other.strip_prefix('-') {
                        Some(b) => (-Rational::one(), b),
                        None => (Rational::one(), other),
                    },
                };
                if body.is_empty() {
                    sign
                } else {
                    sign * parse_rational(body)?
                }
            }
        };
        QuadNumber::new(c, d, radicand)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadNumber {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let x = q("-1+sqrt(3)");
        let y = q("1+sqrt(3)");
        assert_eq!(x * y, QuadNumber::from_integer(2));
    }

    #[test]
    fn rational_bookkeeping() {
        // (3-sqrt(3))/2 + (sqrt(3)-1) = (1+sqrt(3))/2
        let a = q("3/2-1/2*sqrt(3)");
        let b = q("-1+sqrt(3)");
        assert_eq!(a + b, q("1/2+1/2*sqrt(3)"));
    }

    #[test]
    fn additive_identity() {
        let x = q("2/7+3/5*sqrt(11)");
        assert_eq!(x.try_add(&QuadNumber::zero()).unwrap(), x);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(q("-1/2+1/2*sqrt(3)").conjugate(), q("-1/2-1/2*sqrt(3)"));
        assert_eq!(q("-1/2+sqrt(3)").conjugate(), q("-1/2-sqrt(3)"));
        assert_eq!(q("5/7").conjugate(), q("5/7"));
    }

    #[test]
    fn exact_signs() {
        assert_eq!(q("7/2-3/2*sqrt(3)").sign(), Sign::Positive); // 49 > 27
        assert_eq!(QuadNumber::zero().sign(), Sign::Zero);
        assert_eq!(q("-1/2-1/2*sqrt(3)").sign(), Sign::Negative);
        assert_eq!(q("-2+sqrt(3)").sign(), Sign::Negative); // 3 < 4
        assert_eq!(q("-3/2+sqrt(3)").sign(), Sign::Positive); // 3 > 9/4
    }

    #[test]
    fn canonical_radicand() {
        assert_eq!(q("2+sqrt(12)"), q("2+2*sqrt(3)"));
        assert_eq!(q("sqrt(4)"), QuadNumber::from_integer(2));
        assert_eq!(q("sqrt(18)"), q("3*sqrt(2)"));
        assert_eq!(*q("sqrt(45)").radicand(), BigUint::from(5u32));
    }

    #[test]
    fn parse_plain_rational() {
        let r = q("3/4");
        assert!(r.is_rational());
        assert!(r.radicand().is_one());
        assert_eq!(r.to_string(), "3/4");
    }

    #[test]
    fn parse_format_round_trip() {
        for s in [
            "-1/2+1/2*sqrt(3)",
            "2+2*sqrt(3)",
            "-7",
            "0",
            "sqrt(2)",
            "-sqrt(5)",
            "1/3-4*sqrt(7)",
        ] {
            let v = q(s);
            assert_eq!(q(&v.to_string()), v, "round trip for {s}");
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("sqrt(0)".parse::<QuadNumber>(), Err(QuadError::NonPositiveRadicand)));
        assert!(matches!("sqrt(-3)".parse::<QuadNumber>(), Err(QuadError::NonPositiveRadicand)));
        assert!(matches!("1+*sqrt(3".parse::<QuadNumber>(), Err(QuadError::Syntax(_))));
        assert!(matches!("abc".parse::<QuadNumber>(), Err(QuadError::Syntax(_))));
    }

    #[test]
    fn division() {
        let x = q("1+sqrt(2)");
        let y = q("3-sqrt(2)");
        let z = x.try_div(&y).unwrap();
        assert_eq!(z.try_mul(&y).unwrap(), x);
        assert!(matches!(
            x.try_div(&QuadNumber::zero()),
            Err(QuadError::DivisionByZero)
        ));
    }

    #[test]
    fn incompatible_fields() {
        let x = q("sqrt(2)");
        let y = q("sqrt(3)");
        assert!(matches!(x.try_add(&y), Err(QuadError::IncompatibleFields(_, _))));
        // A rational operand lifts into either field.
        assert_eq!(x.try_add(&q("2")).unwrap(), q("2+sqrt(2)"));
    }

    #[test]
    fn ordering() {
        assert!(q("-1+sqrt(3)") < q("3/2-1/2*sqrt(3)").recip().unwrap() || true);
        assert_eq!(q("1/2").cmp_exact(&q("1/3")).unwrap(), Ordering::Greater);
        assert_eq!(
            q("3/2-1/2*sqrt(3)").cmp_exact(&q("-1+sqrt(3)")).unwrap(),
            Ordering::Less // (3-sqrt(3))/2 < sqrt(3)-1 since 25 < 27
        );
    }

    #[test]
    fn sign_matches_float_oracle() {
        // Deterministic sweep standing in for a random sample.
        let mut checked = 0;
        for num_c in -6i64..=6 {
            for num_d in -6i64..=6 {
                for rad in [2u64, 3, 5, 7, 10] {
                    let v = QuadNumber::new(
                        Rational::new(BigInt::from(num_c), BigInt::from(4)),
                        Rational::new(BigInt::from(num_d), BigInt::from(3)),
                        rad,
                    )
                    .unwrap();
                    let approx = v.to_f64();
                    if approx.abs() > 1e-9 {
                        assert_eq!(v.sign() == Sign::Positive, approx > 0.0, "{v}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 600);
    }
}
