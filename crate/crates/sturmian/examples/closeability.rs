//! The closeable/non-closeable dichotomy: Yasutomi's criterion, intercept
//! classification, closed-set construction, and empirical verification.
//!
//! ```bash
//! cargo run -p sturmian --example closeability
//! ```

use sturmian::closeability::{
    classify_by_intercept, closed_set, is_closeable, is_sturm_number, verify_closed_empirically,
    yasutomi_gamma,
};
use sturmian::morphism::MorphismWord;
use sturmian::quad::QuadNumber;

fn q(s: &str) -> QuadNumber {
    s.parse().unwrap()
}

fn main() {
    // Yasutomi's criterion decides whether a Sturmian word with exact
    // parameters is fixed by a primitive morphism at all.
    let gamma = q("-1/2+1/2*sqrt(3)");
    println!("gamma = {gamma} is a Sturm number: {}", is_sturm_number(&gamma));
    println!(
        "word with delta = gamma fixed by a primitive morphism: {}",
        yasutomi_gamma(&gamma, &gamma).unwrap()
    );
    println!(
        "word with delta = (2 sqrt(3)-1)/2 fixed: {}",
        yasutomi_gamma(&gamma, &q("-1/2+sqrt(3)")).unwrap()
    );

    // A primitive name is closeable iff it uses only one Latin and one Greek
    // generator; equivalently iff its fixed point's intercept is one of
    // 0, gamma, 1-gamma, 1.
    println!();
    for s in ["bB", "bA", "aB", "aA", "abB"] {
        let w: MorphismWord = s.parse().unwrap();
        let verdict = is_closeable(&w).unwrap();
        let by_intercept = classify_by_intercept(&w).unwrap();
        println!(
            "{s}: closeable {} (delta class {})",
            verdict.closeable, by_intercept.delta_class
        );
    }

    // Closed sets: cyclic shifts of the name plus projections as required.
    println!();
    for s in ["bB", "bA", "aA"] {
        let w: MorphismWord = s.parse().unwrap();
        let set = closed_set(&w).unwrap();
        let members: Vec<String> = set
            .members()
            .iter()
            .map(|m| format!("{m} [{}]", set.provenance(m).unwrap()))
            .collect();
        println!("closed set of {s}: {}", members.join(", "));
    }

    // Empirical verification: derive on every reduced factor of every fixed
    // point of every member and look the result up in the set.
    let set = closed_set(&"aA".parse().unwrap()).unwrap();
    let report = verify_closed_empirically(&set, 8, 150);
    println!(
        "\nverification of the aA set: {} checks, {} failures",
        report.checks.len(),
        report.failures
    );
}
