//! Exact fixed-point parameters of primitive substitutions, and the
//! agreement between substitution iteration and interval-exchange coding.
//!
//! ```bash
//! cargo run -p sturmian --example fixed_points
//! ```

use sturmian::morphism::MorphismWord;
use sturmian::words::{fixed_point_params, fixed_point_prefix};

fn main() {
    for s in ["abB", "aBb", "bB", "aB", "bA"] {
        let w: MorphismWord = s.parse().unwrap();
        let p = fixed_point_params(&w, None).unwrap();
        let u = fixed_point_prefix(&w, 30, None).unwrap();
        println!("{s}:");
        println!("  l0 = {}, l1 = {}, rho = {}  ({})", p.l0(), p.l1(), p.rho(), p.boundary());
        println!("  gamma = {}, delta = {}", p.slope(), p.intercept());
        let (theta, rho_theta) = p.theta_form();
        println!("  theta form: theta = {theta}, rho = {rho_theta}");
        println!("  fixed point: {u}...");
        // The two routes agree letter for letter.
        assert_eq!(u, p.generate(30));
    }

    // Names over {a, alpha} fix two words; both share the intercept l0 and
    // differ only in the boundary convention.
    let w: MorphismWord = "aA".parse().unwrap();
    for start in [0u8, 1] {
        let p = fixed_point_params(&w, Some(start)).unwrap();
        let u = fixed_point_prefix(&w, 25, Some(start)).unwrap();
        println!("aA starting with {start}: rho = l0 = {}, {} coding: {u}", p.rho(), p.boundary());
        assert_eq!(u, p.generate(25));
    }
}
