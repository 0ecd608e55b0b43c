//! Shared helpers for the integration suites: parsing shorthands, seeded
//! samplers, and an independent normal-form oracle.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use sturmian::morphism::{BinaryWord, Letter, MorphismWord};
use sturmian::quad::{QuadNumber, Rational};
use sturmian::words::{Boundary, IetParams};

pub fn name(s: &str) -> MorphismWord {
    s.parse().unwrap()
}

pub fn bin(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

pub fn q(s: &str) -> QuadNumber {
    s.parse().unwrap()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent oracle for the normal form: enumerates the whole congruence
/// class by applying single rewrites in both directions to closure and picks
/// the lexicographically largest member. Shares nothing with the library's
/// leftmost-rewrite loop.
pub fn oracle_normalize(w: &MorphismWord) -> MorphismWord {
    use std::collections::BTreeSet;

    fn neighbors(letters: &[Letter]) -> Vec<Vec<Letter>> {
        let n = letters.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mid = &letters[i + 1..j];
                let all = |l: Letter| mid.iter().all(|&x| x == l);
                let k_ok = j - i - 1 == 0;
                let mut push = |head: Letter, fill: Letter, tail: Letter| {
                    let mut v = letters.to_vec();
                    v[i] = head;
                    v[j] = tail;
                    for cell in v[i + 1..j].iter_mut() {
                        *cell = fill;
                    }
                    out.push(v);
                };
                match (letters[i], letters[j]) {
                    (Letter::Alpha, Letter::Beta) if k_ok || all(Letter::A) => {
                        push(Letter::Beta, Letter::B, Letter::Alpha)
                    }
                    (Letter::Beta, Letter::Alpha) if k_ok || all(Letter::B) => {
                        push(Letter::Alpha, Letter::A, Letter::Beta)
                    }
                    (Letter::A, Letter::B) if k_ok || all(Letter::Alpha) => {
                        push(Letter::B, Letter::Beta, Letter::A)
                    }
                    (Letter::B, Letter::A) if k_ok || all(Letter::Beta) => {
                        push(Letter::A, Letter::Alpha, Letter::B)
                    }
                    _ => {}
                }
            }
        }
        out
    }

    let mut class: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut stack = vec![w.letters().to_vec()];
    while let Some(v) = stack.pop() {
        if class.insert(v.clone()) {
            stack.extend(neighbors(&v));
        }
    }
    MorphismWord::new(class.into_iter().next_back().unwrap())
}

/// `count` distinct pseudo-random names with lengths in `min_len..=max_len`
/// satisfying `keep`.
pub fn sample_names<F>(
    rng: &mut ChaCha8Rng,
    count: usize,
    min_len: usize,
    max_len: usize,
    mut keep: F,
) -> Vec<MorphismWord>
where
    F: FnMut(&MorphismWord) -> bool,
{
    let mut out: Vec<MorphismWord> = Vec::new();
    while out.len() < count {
        let len = rng.gen_range(min_len..=max_len);
        let letters: Vec<Letter> = (0..len)
            .map(|_| Letter::ALL[rng.gen_range(0..4)])
            .collect();
        let w = MorphismWord::new(letters);
        if keep(&w) && !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// Names over exactly the two letters of one family, both present.
pub fn sample_class_names(
    rng: &mut ChaCha8Rng,
    letters: [Letter; 2],
    count: usize,
    min_len: usize,
    max_len: usize,
) -> Vec<MorphismWord> {
    let mut out: Vec<MorphismWord> = Vec::new();
    while out.len() < count {
        let len = rng.gen_range(min_len..=max_len);
        let ls: Vec<Letter> = (0..len).map(|_| letters[rng.gen_range(0..2)]).collect();
        let w = MorphismWord::new(ls);
        if w.contains(letters[0]) && w.contains(letters[1]) && !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// A pseudo-random exact parameter triple with an irrational slope: `l0`
/// rational, `l1` with a nonzero radical part, `rho` a rational fraction of
/// the interval length.
pub fn sample_params(rng: &mut ChaCha8Rng) -> IetParams {
    let radicands = [2u64, 3, 5, 6, 7, 10, 11, 13];
    let d = radicands[rng.gen_range(0..radicands.len())];
    let l0 = QuadNumber::from_rational(rat(rng.gen_range(1..5), rng.gen_range(1..4)));
    let l1 = QuadNumber::new(
        rat(rng.gen_range(0..3), 1),
        rat(rng.gen_range(1..4), rng.gen_range(1..3)),
        d,
    )
    .unwrap();
    let boundary = if rng.gen_bool(0.5) {
        Boundary::Lower
    } else {
        Boundary::Upper
    };
    let total = l0.try_add(&l1).unwrap();
    let denom = rng.gen_range(5..13);
    let numer = match boundary {
        Boundary::Lower => rng.gen_range(0..denom),
        Boundary::Upper => rng.gen_range(1..=denom),
    };
    let rho = total.mul_rational(&rat(numer, denom));
    IetParams::new(l0, l1, rho, boundary).unwrap()
}

/// As [`sample_params`] but with the slope confined to `(1/5, 4/5)`, keeping
/// recurrence times short enough for finite-prefix complexity counts.
pub fn sample_params_moderate(rng: &mut ChaCha8Rng) -> IetParams {
    loop {
        let p = sample_params(rng);
        let gamma = p.slope();
        if gamma.cmp_exact(&q("1/5")).unwrap().is_gt()
            && gamma.cmp_exact(&q("4/5")).unwrap().is_lt()
        {
            return p;
        }
    }
}
