//! The four elementary morphisms, composition of names, and the defining
//! relations of the special Sturmian monoid.
//!
//! ```bash
//! cargo run -p sturmian --example monoid_relations
//! ```

use sturmian::morphism::{incidence_matrix, realize, Letter, MorphismWord, SturmianMorphism};

fn show(label: &str, m: &SturmianMorphism) {
    println!("{label}: 0 -> {}, 1 -> {}", m.image0(), m.image1());
}

fn main() {
    println!("elementary morphisms:");
    for l in Letter::ALL {
        show(&format!("  phi_{}", l.ascii()), &SturmianMorphism::generator(l));
    }

    // Names compose with the rightmost letter acting first:
    // realize(uv) = realize(u) . realize(v).
    let w: MorphismWord = "aBb".parse().unwrap();
    println!("\nrealize({w}):");
    show("  phi_aBb", &realize(&w));
    let inc = incidence_matrix(&w);
    println!(
        "  incidence [[{}, {}], [{}, {}]], det {}",
        inc.e[0][0], inc.e[0][1], inc.e[1][0], inc.e[1][1], inc.det()
    );

    // The defining relations: alpha a^k beta = beta b^k alpha and
    // a alpha^k b = b beta^k a, for every k.
    println!("\nrelations (images must agree):");
    for k in 0..3 {
        let lhs: MorphismWord = format!("A{}B", "a".repeat(k)).parse().unwrap();
        let rhs: MorphismWord = format!("B{}A", "b".repeat(k)).parse().unwrap();
        let same = realize(&lhs) == realize(&rhs);
        println!("  {lhs} = {rhs}  ->  {same}");
        assert!(same);
    }

    // Conjugating by the exchange 0 <-> 1 swaps a <-> alpha and b <-> beta.
    let conj = w.conjugate_by_e();
    println!("\nconjugate of {w} by the letter exchange: {conj}");
    show("  phi_AbB", &realize(&conj));
}
