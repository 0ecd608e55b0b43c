//! Exact arithmetic in real quadratic fields: the substrate for every slope
//! and intercept computation.
//!
//! ```bash
//! cargo run -p sturmian --example exact_arithmetic
//! ```

use sturmian::quad::QuadNumber;

fn q(s: &str) -> QuadNumber {
    s.parse().unwrap()
}

fn main() {
    // Values parse from a small grammar and canonicalize: sqrt(12) = 2 sqrt(3).
    let x = q("2+sqrt(12)");
    println!("2+sqrt(12) canonicalizes to {x}");

    // Field operations are exact.
    let a = q("-1+sqrt(3)");
    let b = q("1+sqrt(3)");
    println!("({a}) * ({b}) = {}", a.try_mul(&b).unwrap());
    println!("({a})^-1 = {}", a.recip().unwrap());

    // Conjugation is the nontrivial field automorphism.
    let gamma = q("-1/2+1/2*sqrt(3)");
    println!("conjugate of {gamma} is {}", gamma.conjugate());

    // Signs and comparisons are decided exactly, never by floating point:
    // (3-sqrt(3))/2 < sqrt(3)-1 because 25 < 27.
    let lhs = q("3/2-1/2*sqrt(3)");
    let cmp = lhs.cmp_exact(&a).unwrap();
    println!("(3-sqrt(3))/2 vs sqrt(3)-1: {cmp:?}");
    println!("sign of (7-3*sqrt(3))/2: {}", q("7/2-3/2*sqrt(3)").sign());

    // Mixing distinct irrational fields is an error, not a silent widening.
    let err = q("sqrt(2)").try_add(&q("sqrt(3)")).unwrap_err();
    println!("sqrt(2) + sqrt(3): {err}");
}
