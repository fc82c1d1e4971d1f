use std::cmp::Ordering;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FitnessParams, GaConfig};
use crate::error::Result;
use crate::gateset::GateSet;
use crate::word::{BraidWord, Letter};

/// A braid together with its cached error and fitness.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub word: BraidWord,
    pub error: f64,
    pub fitness: f64,
}

impl Individual {
    pub fn evaluate(word: BraidWord, gs: &GateSet, fp: &FitnessParams) -> Result<Self> {
        let error = crate::algebra::braid_error(&word, &fp.target, gs)?;
        let fitness = fp.fitness(word.len(), error)?;
        Ok(Individual {
            word,
            error,
            fitness,
        })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Ascending fitness order; among equal fitness the longer braid counts as less fit.
pub(crate) fn ascending(a: &Individual, b: &Individual) -> Ordering {
    a.fitness
        .total_cmp(&b.fitness)
        .then_with(|| b.len().cmp(&a.len()))
}

#[derive(Debug, Clone)]
pub struct GaState {
    pub population: Vec<Individual>,
    pub best: Individual,
    pub generation: usize,
    pub rng: ChaCha8Rng,
}

impl GaState {
    /// Sorts least fit first. Equal individuals keep their relative order
    /// reversed, so earlier insertions rank as fitter.
    pub fn sort_ascending(&mut self) {
        self.population.reverse();
        self.population.sort_by(ascending);
    }

    /// Fittest individual, reading the population in insertion order (first one wins ties).
    pub fn fittest(&self) -> Option<&Individual> {
        self.population
            .iter()
            .rev()
            .max_by(|a, b| ascending(a, b))
    }
}

/// A reduced word with length drawn uniformly from `lengths` and letters drawn
/// uniformly among those that do not cancel their predecessor.
pub fn random_word<R: Rng>(rng: &mut R, gs: &GateSet, lengths: (usize, usize)) -> BraidWord {
    let alphabet = gs.alphabet();
    let len = rng.gen_range(lengths.0..=lengths.1);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    for _ in 0..len {
        let next = match letters.last() {
            None => alphabet[rng.gen_range(0..alphabet.len())],
            Some(&prev) => {
                let forbidden = prev.inverse();
                let mut i = rng.gen_range(0..alphabet.len() - 1);
                if alphabet[i] >= forbidden {
                    i += 1;
                }
                alphabet[i]
            }
        };
        letters.push(next);
    }
    BraidWord::new(letters)
}

pub fn init_population(cfg: &GaConfig, gs: &GateSet, fp: &FitnessParams) -> Result<GaState> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let population = (0..cfg.population_size)
        .map(|_| Individual::evaluate(random_word(&mut rng, gs, cfg.init_length), gs, fp))
        .collect::<Result<Vec<_>>>()?;
    let mut state = GaState {
        best: population[0].clone(),
        population,
        generation: 0,
        rng,
    };
    state.best = state.fittest().expect("population is nonempty").clone();
    Ok(state)
}

/// `floor(m / 10)`.
pub fn cull_count(population_size: usize) -> usize {
    population_size / 10
}

/// Sorts the population least fit first and drops the bottom tenth.
pub fn cull(state: &mut GaState) {
    state.sort_ascending();
    let n = cull_count(state.population.len());
    state.population.drain(..n);
}
