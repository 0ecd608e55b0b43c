//! The rotate-and-normalize operator and its eventually periodic orbits.
//!
//! For a normalized name starting `a^k beta` (or `alpha^k b`), the operator
//! moves that prefix to the back and renormalizes. Iterating it produces the
//! substitutions fixing the derived words of the fixed point's prefixes.
//!
//! ```bash
//! cargo run -p sturmian --example delta_orbit
//! ```

use sturmian::morphism::MorphismWord;
use sturmian::normalization::{delta, delta_orbit, normalize};

fn main() {
    let v: MorphismWord = "aaBABBa".parse().unwrap();
    let w = normalize(&v);
    println!("N({v}) = {w}");
    println!("delta({w}) = {}\n", delta(&w).unwrap());

    let orbit = delta_orbit(&w).unwrap();
    for (i, word) in orbit.words().iter().enumerate() {
        println!("delta^{i:<2}(w) = {word}");
    }
    println!(
        "delta^{:<2}(w) = {}   <- repeats delta^{}",
        orbit.len(),
        orbit.power(orbit.len()),
        orbit.preperiod()
    );
    println!(
        "\npreperiod {}, period {}; past the preperiod every step is a pure cyclic shift",
        orbit.preperiod(),
        orbit.period()
    );

    // Two-letter names rotate from the start.
    let fib: MorphismWord = "bB".parse().unwrap();
    let orbit = delta_orbit(&fib).unwrap();
    println!(
        "\norbit of {fib}: {:?} (preperiod {}, period {})",
        orbit.words().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        orbit.preperiod(),
        orbit.period()
    );
}
