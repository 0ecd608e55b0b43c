//! End-to-end story: a three-generator substitution is not closeable under
//! derivation, witnessed by one factor of one fixed point.
//!
//! ```bash
//! cargo run -p sturmian --example worked_example
//! ```

use sturmian::closeability::{is_closeable, yasutomi_theta};
use sturmian::derived::{derived_word, equal_up_to_letter_permutation, Source};
use sturmian::morphism::{realize, BinaryWord, MorphismWord};
use sturmian::normalization::{delta_orbit, normalize};
use sturmian::words::{fixed_point_params, fixed_point_prefix, IetParams};

fn main() {
    // The name abB uses three generators, so it is not closeable; its
    // rotation orbit is {baB, aBb}, and the orbit member aBb realizes to the
    // substitution 0 -> 100, 1 -> 10010 whose fixed point witnesses why.
    let name: MorphismWord = "abB".parse().unwrap();
    println!("verdict for {name}: {}", is_closeable(&name).unwrap().reason);

    let orbit = delta_orbit(&normalize(&name)).unwrap();
    println!(
        "rotation orbit: {:?}",
        orbit.words().iter().map(|m| m.to_string()).collect::<Vec<_>>()
    );

    let worked: MorphismWord = "aBb".parse().unwrap();
    let m = realize(&worked);
    println!("\nphi_{worked}: 0 -> {}, 1 -> {}", m.image0(), m.image1());
    let u = fixed_point_prefix(&worked, 19, None).unwrap();
    println!("fixed point u = {u}...");
    let p = fixed_point_params(&worked, None).unwrap();
    println!("exact parameters ({}, {}, {})", p.l0(), p.l1(), p.rho());

    // The factor 0 is not a prefix of u. Its derived word has return words
    // 0 and 01, i.e. the images of 0 and 1 under phi_b, so it arises from u
    // by one shift and one desubstitution.
    let zero: BinaryWord = "0".parse().unwrap();
    let source = Source::fixed_point(worked, None);
    let report = derived_word(&source, &zero, 300).unwrap();
    println!(
        "\nderived word to 0: return words {:?}, prefix {}...",
        report.return_words.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        &report.derived_prefix[..24]
    );

    let sigma = p.shift();
    let d_params = IetParams::new(
        sigma.l0().try_sub(sigma.l1()).unwrap(),
        sigma.l1().clone(),
        sigma.rho().clone(),
        sigma.boundary(),
    )
    .unwrap();
    let (theta, rho) = d_params.theta_form();
    println!("its exact parameters in theta form: theta = {theta}, rho = {rho}");
    println!(
        "fixed by a primitive morphism (Yasutomi): {}",
        yasutomi_theta(&theta, &rho).unwrap()
    );

    // And indeed no fixed point from the rotation orbit matches it.
    for member in orbit.words() {
        let fixed = fixed_point_prefix(member, 300, None).unwrap();
        let matched = equal_up_to_letter_permutation(&report.derived_prefix, fixed.as_str());
        println!("matches fixed point of {member}: {}", matched.is_some());
    }
    println!("\nno member fixes the derived word: the set cannot be closed");
}
