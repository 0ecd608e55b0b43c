//! Exact computations with Sturmian substitutions.
//!
//! The special Sturmian monoid is generated by four elementary morphisms on
//! binary words, presented by the relations
//! `alpha a^k beta = beta b^k alpha` and `a alpha^k b = b beta^k a`. This
//! crate implements the full toolchain around that monoid:
//!
//! - [`morphism`] — names over the generators, realization as substitutions,
//!   incidence matrices, primitivity, conjugation, cyclic shifts;
//! - [`normalization`] — the rewriting system, normal forms, equality of
//!   morphisms, and the rotate-and-normalize operator with orbit detection;
//! - [`quad`] — exact arithmetic in real quadratic fields, the substrate for
//!   every slope and intercept computation;
//! - [`words`] — two-interval-exchange codings, parameter transport along
//!   morphisms, and exact fixed-point parameters;
//! - [`derived`] — return words, derived words, special-factor extensions,
//!   and the matching of derived words to rotation powers;
//! - [`closeability`] — Yasutomi's fixed-point criterion, the
//!   closeable/non-closeable dichotomy, closed-set construction, and an
//!   empirical closure verifier;
//! - [`cli`] — the command-line dispatch used by the `sturmian` binary.
//!
//! Everything is exact: decisions are made in `Q(sqrt(D))`, never in
//! floating point. All values are immutable and every operation is pure, so
//! the whole crate is safe for concurrent use.
//!
//! The `examples/` directory is the primary tour: one runnable example per
//! capability (`cargo run --example worked_example`, etc.).

pub mod cli;
pub mod closeability;
pub mod derived;
pub mod morphism;
pub mod normalization;
pub mod quad;
pub mod words;

pub use closeability::{
    classify_by_intercept, closed_set, is_closeable, is_sturm_number, project_f, project_h,
    verify_closed_empirically, yasutomi_gamma, yasutomi_theta, ClosedSet, CloseabilityError,
    DeltaClass, LetterClass,
};
pub use derived::{
    derived_word, equal_up_to_letter_permutation, extend_to_left_special,
    extend_to_right_special, match_derived_to_delta, occurrences, DerivedError,
    DerivedWordReport, Source,
};
pub use morphism::{
    apply_morphism, incidence_matrix, realize, BinaryWord, Letter, MorphismWord,
    SturmianMorphism,
};
pub use normalization::{
    delta, delta_orbit, is_normalized, morphisms_equal, normalize, DeltaError, DeltaOrbit,
};
pub use quad::{QuadNumber, Rational, Sign};
pub use words::{
    fixed_point_params, fixed_point_prefix, language_query, Boundary, FactorFlags, IetParams,
    WordsError,
};
