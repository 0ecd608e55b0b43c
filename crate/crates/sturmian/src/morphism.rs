//! The free side of the special Sturmian monoid.
//!
//! Names are finite words over the four generator letters `a`, `b`, `alpha`,
//! `beta` (ASCII `a b A B`). A name realizes to a concrete binary
//! substitution by composing the elementary morphisms
//!
//! ```text
//! phi_a: 0->0, 1->10      phi_b: 0->0, 1->01
//! phi_alpha: 0->01, 1->1  phi_beta: 0->10, 1->1
//! ```
//!
//! Composition order: `realize(uv) = realize(u) . realize(v)` — the rightmost
//! letter of a name acts on a word first. Both conventions exist in the
//! literature; this one makes the defining relations
//! `alpha a^k beta = beta b^k alpha` and `a alpha^k b = b beta^k a` hold and
//! is assumed everywhere downstream.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// One of the four generator letters. `a`, `b` are Latin; `alpha`, `beta`
/// are Greek. The derived order (`a < b < alpha < beta`) restricts to
/// `a < b` and `alpha < beta`; rewriting never compares across classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    Alpha,
    Beta,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::Alpha, Letter::Beta];

    pub fn is_latin(self) -> bool {
        matches!(self, Letter::A | Letter::B)
    }

    pub fn is_greek(self) -> bool {
        !self.is_latin()
    }

    /// ASCII encoding: `a`, `b`, `A` (alpha), `B` (beta).
    pub fn ascii(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::Alpha => 'A',
            Letter::Beta => 'B',
        }
    }

    /// Accepts the ASCII encoding plus the UTF-8 Greek letters as synonyms.
    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'A' | 'α' => Some(Letter::Alpha),
            'B' | 'β' => Some(Letter::Beta),
            _ => None,
        }
    }

    /// The letter-exchange pairing `a <-> alpha`, `b <-> beta` induced by
    /// conjugating with `E: 0 <-> 1`.
    pub fn exchanged(self) -> Letter {
        match self {
            Letter::A => Letter::Alpha,
            Letter::Alpha => Letter::A,
            Letter::B => Letter::Beta,
            Letter::Beta => Letter::B,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NameParseError(pub char);

impl fmt::Display for NameParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid generator letter `{}` (expected a, b, A, B)", self.0)
    }
}

impl std::error::Error for NameParseError {}

/// A name in the special Sturmian monoid: a finite word over the generators.
/// The empty word names the identity morphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MorphismWord(Vec<Letter>);

impl MorphismWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        MorphismWord(letters)
    }

    pub fn empty() -> Self {
        MorphismWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &MorphismWord) -> MorphismWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MorphismWord(v)
    }

    /// `k`-fold cyclic shift left: `cyc(u) = u_1 ... u_{n-1} u_0`.
    pub fn cyc(&self, k: usize) -> MorphismWord {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        let n = v.len();
        v.rotate_left(k % n);
        MorphismWord(v)
    }

    /// Primitive iff the name contains at least one Latin and at least one
    /// Greek letter.
    pub fn is_primitive(&self) -> bool {
        self.0.iter().any(|l| l.is_latin()) && self.0.iter().any(|l| l.is_greek())
    }

    /// Letterwise swap `a <-> alpha`, `b <-> beta`; realizes conjugation by
    /// the exchange morphism `E`.
    pub fn conjugate_by_e(&self) -> MorphismWord {
        MorphismWord(self.0.iter().map(|l| l.exchanged()).collect())
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.0.contains(&l)
    }

    /// True when the name uses only `a` and `alpha` (no length-growth pivot
    /// for the rotation operator).
    pub fn is_a_alpha_only(&self) -> bool {
        self.0.iter().all(|l| matches!(l, Letter::A | Letter::Alpha))
    }

    pub fn distinct_letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for l in Letter::ALL {
            if self.contains(l) {
                out.push(l);
            }
        }
        out
    }
}

impl FromStr for MorphismWord {
    type Err = NameParseError;
    fn from_str(s: &str) -> Result<Self, NameParseError> {
        s.chars()
            .map(|c| Letter::from_char(c).ok_or(NameParseError(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(MorphismWord)
    }
}

impl fmt::Display for MorphismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.ascii())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitParseError(pub char);

impl fmt::Display for BitParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid binary letter `{}` (expected 0 or 1)", self.0)
    }
}

impl std::error::Error for BitParseError {}

/// A finite word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BinaryWord(String);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(String::new())
    }

    pub(crate) fn from_string_unchecked(s: String) -> Self {
        debug_assert!(s.bytes().all(|b| b == b'0' || b == b'1'));
        BinaryWord(s)
    }

    pub fn from_bit(bit: u8) -> Self {
        assert!(bit <= 1);
        BinaryWord(if bit == 0 { "0".into() } else { "1".into() })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Bit value (0 or 1) at position `i`.
    pub fn bit(&self, i: usize) -> u8 {
        self.0.as_bytes()[i] - b'0'
    }

    pub fn prefix(&self, n: usize) -> BinaryWord {
        BinaryWord(self.0[..n.min(self.0.len())].to_string())
    }

    pub fn suffix_from(&self, i: usize) -> BinaryWord {
        BinaryWord(self.0[i.min(self.0.len())..].to_string())
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        BinaryWord(format!("{}{}", self.0, other.0))
    }

    pub fn count(&self, bit: u8) -> usize {
        let target = bit + b'0';
        self.0.bytes().filter(|&b| b == target).count()
    }

    pub fn starts_with(&self, other: &BinaryWord) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn contains_word(&self, other: &BinaryWord) -> bool {
        self.0.contains(&other.0)
    }
}

impl FromStr for BinaryWord {
    type Err = BitParseError;
    fn from_str(s: &str) -> Result<Self, BitParseError> {
        match s.chars().find(|&c| c != '0' && c != '1') {
            Some(c) => Err(BitParseError(c)),
            None => Ok(BinaryWord(s.to_string())),
        }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl PartialEq<&str> for BinaryWord {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

/// A binary substitution given by its images of `0` and `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmianMorphism {
    image0: BinaryWord,
    image1: BinaryWord,
}

impl SturmianMorphism {
    pub fn identity() -> Self {
        SturmianMorphism {
            image0: BinaryWord("0".into()),
            image1: BinaryWord("1".into()),
        }
    }

    pub fn generator(l: Letter) -> Self {
        let (i0, i1) = match l {
            Letter::A => ("0", "10"),
            Letter::B => ("0", "01"),
            Letter::Alpha => ("01", "1"),
            Letter::Beta => ("10", "1"),
        };
        SturmianMorphism {
            image0: BinaryWord(i0.into()),
            image1: BinaryWord(i1.into()),
        }
    }

    pub fn image0(&self) -> &BinaryWord {
        &self.image0
    }

    pub fn image1(&self) -> &BinaryWord {
        &self.image1
    }

    /// Letterwise image concatenation.
    pub fn apply(&self, x: &BinaryWord) -> BinaryWord {
        let mut out = String::with_capacity(
            x.count(0) * self.image0.len() + x.count(1) * self.image1.len(),
        );
        for b in x.as_bytes() {
            out.push_str(if *b == b'0' {
                self.image0.as_str()
            } else {
                self.image1.as_str()
            });
        }
        BinaryWord(out)
    }

    /// `self . other`: `other` acts first.
    pub fn compose(&self, other: &SturmianMorphism) -> SturmianMorphism {
        SturmianMorphism {
            image0: self.apply(&other.image0),
            image1: self.apply(&other.image1),
        }
    }
}

/// Realizes a name as a substitution, rightmost letter acting first:
/// `realize(uv) = realize(u) . realize(v)`, `realize(empty) = identity`.
pub fn realize(w: &MorphismWord) -> SturmianMorphism {
    w.letters().iter().fold(SturmianMorphism::identity(), |acc, &l| {
        acc.compose(&SturmianMorphism::generator(l))
    })
}

/// Shorthand for applying the realization of `w` to a binary word.
pub fn apply_morphism(w: &MorphismWord, x: &BinaryWord) -> BinaryWord {
    realize(w).apply(x)
}

/// A 2x2 integer matrix; entry `(i, j)` counts letter `i` in the image of
/// letter `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2 {
    pub e: [[BigInt; 2]; 2],
}

impl Matrix2 {
    pub fn identity() -> Self {
        Matrix2 {
            e: [
                [BigInt::one(), BigInt::zero()],
                [BigInt::zero(), BigInt::one()],
            ],
        }
    }

    pub fn from_i64(rows: [[i64; 2]; 2]) -> Self {
        Matrix2 {
            e: [
                [BigInt::from(rows[0][0]), BigInt::from(rows[0][1])],
                [BigInt::from(rows[1][0]), BigInt::from(rows[1][1])],
            ],
        }
    }

    pub fn mul(&self, other: &Matrix2) -> Matrix2 {
        let mut e = [
            [BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::zero()],
        ];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = &self.e[i][0] * &other.e[0][j] + &self.e[i][1] * &other.e[1][j];
            }
        }
        Matrix2 { e }
    }

    pub fn det(&self) -> BigInt {
        &self.e[0][0] * &self.e[1][1] - &self.e[0][1] * &self.e[1][0]
    }

    pub fn trace(&self) -> BigInt {
        &self.e[0][0] + &self.e[1][1]
    }
}

fn letter_matrix(l: Letter) -> Matrix2 {
    if l.is_latin() {
        Matrix2::from_i64([[1, 1], [0, 1]])
    } else {
        Matrix2::from_i64([[1, 0], [1, 1]])
    }
}

/// Incidence matrix of `realize(w)`, computed multiplicatively over the name.
pub fn incidence_matrix(w: &MorphismWord) -> Matrix2 {
    w.letters()
        .iter()
        .fold(Matrix2::identity(), |acc, &l| acc.mul(&letter_matrix(l)))
}

/// For each starting letter, the first letter of its image under
/// `realize(w)` (equal images of length >= 1 are guaranteed: generators fix
/// or grow both letters).
pub fn first_letter_fate(w: &MorphismWord) -> (u8, u8) {
    let step = |l: Letter, x: u8| -> u8 {
        match l {
            Letter::A | Letter::Alpha => x,
            Letter::B => 0,
            Letter::Beta => 1,
        }
    };
    let mut zero = 0u8;
    let mut one = 1u8;
    for &l in w.letters().iter().rev() {
        zero = step(l, zero);
        one = step(l, one);
    }
    (zero, one)
}
