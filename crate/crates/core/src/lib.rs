//! Approximating quantum gates with braids.
//!
//! A braid is a word in a set of generator matrices and their inverses; its
//! value is the product of those matrices. This crate searches for braids
//! whose value is close to a target gate, trading accuracy against length:
//!
//! - [`algebra`]: fixed-size complex matrices and the Frobenius error metric.
//! - [`gateset`]: the Fibonacci-anyon and Majorana generator sets and target gates.
//! - [`word`]: braid words, their text form, slicing, evaluation and free reduction.
//! - [`diagram`]: SVG braid diagrams.
//! - [`brute`]: exhaustive search giving the optimal error-vs-length frontier.
//! - [`genetic`]: a steady-state genetic algorithm with a tunable fitness.
//! - [`harness`]: seeded multi-run batches, averages and λ sweeps.
//!
//! ```
//! use braidforge::gateset::{fibonacci_gateset, target_gate};
//! use braidforge::word::parse_word;
//! use braidforge::algebra::braid_error;
//!
//! let gs = fibonacci_gateset();
//! let x = target_gate("x-rotation")?;
//! let word = parse_word("s2^-2 s1^4 s2^-1 s1 s2^-1 s1 s2 s1^-2 s2 s1^-1 s2^-5 s1 s2^-1", &gs)?;
//! assert_eq!(word.len(), 22);
//! assert!(braid_error(&word, &x, &gs)? < 5e-3);
//! # Ok::<(), braidforge::Error>(())
//! ```

pub mod algebra;
pub mod brute;
pub mod diagram;
mod error;
pub mod gateset;
pub mod genetic;
pub mod harness;
pub mod word;

pub use error::{Error, Result};

// Code blocks in the guide under book/ are compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/gate-sets.md")]
    mod gate_sets {}
    #[doc = include_str!("../../../book/src/braid-words.md")]
    mod braid_words {}
    #[doc = include_str!("../../../book/src/exhaustive-search.md")]
    mod exhaustive_search {}
    #[doc = include_str!("../../../book/src/genetic-search.md")]
    mod genetic_search {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
}
