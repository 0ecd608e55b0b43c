//! Derived words of prefixes are fixed points of rotation powers: the
//! matching that drives everything else.
//!
//! ```bash
//! cargo run -p sturmian --example delta_matching
//! ```

use sturmian::derived::match_derived_to_delta;
use sturmian::morphism::MorphismWord;
use sturmian::normalization::{delta_orbit, normalize};

fn main() {
    for s in ["bB", "abB", "BaAb"] {
        let w: MorphismWord = s.parse().unwrap();
        let orbit = delta_orbit(&normalize(&w)).unwrap();
        println!(
            "{s}: orbit of {} words (preperiod {}, period {})",
            orbit.len(),
            orbit.preperiod(),
            orbit.period()
        );
        // Every right-special prefix of the fixed point derives to the fixed
        // point of some rotation power, up to a letter permutation.
        let matches = match_derived_to_delta(&w, 15, 120).unwrap();
        for m in &matches {
            println!(
                "  prefix {:<16} -> fixed point of delta^{}({})",
                format!("`{}`", m.prefix),
                m.delta_power,
                normalize(&w)
            );
        }
        println!();
    }
}
