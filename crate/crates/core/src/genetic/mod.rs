//! Steady-state genetic search for short, accurate braids.
//!
//! Each generation ranks the population by fitness, remembers the fittest
//! braid seen so far, culls the least fit tenth, and refills the population
//! by recombining pairs of survivors.

mod breed;
mod config;
mod evolve;
mod mutate;
mod population;

pub use breed::{breed_contextual, breed_naive, common_prefix_len, contextual_split};
pub use config::{GaConfig, Mutation, Recombination, Selection};
pub use evolve::{evolve, evolve_with_observer, GenerationRow, RunRecord};
pub use mutate::{mutate, IdentityTable};
pub use population::{cull, cull_count, init_population, random_word, GaState, Individual};

use crate::error::{Error, Result};
use crate::gateset::TargetGate;

/// The length-vs-accuracy weight `λ` and the gate being emulated.
#[derive(Debug, Clone, PartialEq)]
pub struct FitnessParams {
    lambda: f64,
    pub target: TargetGate,
}

impl FitnessParams {
    pub fn new(lambda: f64, target: TargetGate) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidConfig(format!(
                "lambda must lie in [0, 1], got {lambda}"
            )));
        }
        Ok(FitnessParams { lambda, target })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn fitness(&self, length: usize, error: f64) -> Result<f64> {
        fitness(length, error, self.lambda)
    }
}

/// `(1−λ)/(1+ε) + λ/ℓ`. Higher is better.
///
/// `λ → 0` rewards accuracy only, `λ → 1` rewards brevity only.
pub fn fitness(length: usize, error: f64, lambda: f64) -> Result<f64> {
    if length == 0 {
        return Err(Error::EmptyBraid);
    }
    Ok((1.0 - lambda) / (1.0 + error) + lambda / length as f64)
}
