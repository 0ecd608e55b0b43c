//! Return words, derived words, and the special-factor extensions that
//! reduce derivation to right-special prefixes and bispecial factors.
//!
//! ```bash
//! cargo run -p sturmian --example derived_words
//! ```

use sturmian::derived::{
    derived_word, extend_to_left_special, extend_to_right_special, occurrences, Source,
};
use sturmian::morphism::{BinaryWord, MorphismWord};

fn main() {
    let name: MorphismWord = "aBb".parse().unwrap();
    let source = Source::fixed_point(name, None);
    let u = source.prefix(60).unwrap();
    println!("fixed point of 0 -> 100, 1 -> 10010:");
    println!("  u = {u}...");

    let zero: BinaryWord = "0".parse().unwrap();
    println!("  occurrences of 0: {:?}...", &occurrences(&u, &zero)[..12]);

    // The derived word codes the order in which the return words of the
    // factor tile the source; letters are assigned by first appearance.
    let report = derived_word(&source, &zero, 25).unwrap();
    for (i, r) in report.return_words.iter().enumerate() {
        println!("  return word r{i} = {r}");
    }
    println!("  derived word to 0: {}", report.derived_prefix);

    // Derivation only depends on the factor up to its right-special
    // extension and left-special context.
    let one: BinaryWord = "1".parse().unwrap();
    let right = extend_to_right_special(&source, &one).unwrap();
    println!("\nshortest right-special extension of 1: {right}");
    let left = extend_to_left_special(&source, &one).unwrap();
    println!(
        "shortest left-special extension of 1: {} (effective factor {})",
        left.extended, left.effective
    );
    let d1 = derived_word(&source, &one, 20).unwrap();
    let d2 = derived_word(&source, &right, 20).unwrap();
    assert_eq!(d1.derived_prefix, d2.derived_prefix);
    println!("derived words of 1 and of its right-special extension agree");

    // The empty factor derives to the word itself.
    let eps = derived_word(&source, &BinaryWord::empty(), 20).unwrap();
    println!("\nderived word to the empty factor: {}", eps.derived_prefix);
}
