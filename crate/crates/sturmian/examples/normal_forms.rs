//! Rewriting names to their normal form and testing equality of morphisms.
//!
//! ```bash
//! cargo run -p sturmian --example normal_forms
//! ```

use sturmian::morphism::{realize, MorphismWord};
use sturmian::normalization::{is_normalized, morphisms_equal, normalize};

fn main() {
    // The normal form is the lexicographically largest name in the
    // congruence class (a < b, alpha < beta); it is the unique member
    // containing no factor alpha a^k beta or a alpha^k b.
    for input in ["aaBABBa", "ab", "AaB", "bBa", "AB"] {
        let w: MorphismWord = input.parse().unwrap();
        let n = normalize(&w);
        println!(
            "N({w}) = {n}   (input normalized: {})",
            is_normalized(&w)
        );
        assert_eq!(realize(&w), realize(&n), "normal form names the same map");
    }

    // Equality of substitutions reduces to equality of normal forms.
    println!();
    for (u, v) in [("ab", "ba"), ("aB", "Ba"), ("abB", "baB")] {
        let u: MorphismWord = u.parse().unwrap();
        let v: MorphismWord = v.parse().unwrap();
        println!("phi_{u} == phi_{v}  ->  {}", morphisms_equal(&u, &v));
    }
}
