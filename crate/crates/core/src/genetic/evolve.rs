use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::index::sample;
use rand::Rng;

use super::breed::{breed_contextual, breed_naive};
use super::mutate::{mutate, IdentityTable};
use super::population::{cull, init_population, random_word, GaState, Individual};
use super::{FitnessParams, GaConfig, Mutation, Recombination, Selection};
use crate::error::Result;
use crate::gateset::GateSet;
use crate::word::BraidWord;

/// Statistics for one generation, taken after ranking and before culling.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationRow {
    /// 1-based generation index.
    pub generation: usize,
    pub mean_error: f64,
    pub mean_length: f64,
    pub best_error: f64,
    pub best_length: usize,
    pub best_fitness: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub gateset: String,
    pub target: String,
    pub lambda: f64,
    pub config: GaConfig,
    pub rows: Vec<GenerationRow>,
    pub best: Individual,
}

pub fn evolve(cfg: &GaConfig, gs: &GateSet, fp: &FitnessParams) -> Result<RunRecord> {
    evolve_with_observer(cfg, gs, fp, |_| {})
}

/// Like [`evolve`], calling `observe` with the state at the end of every generation.
pub fn evolve_with_observer<F>(
    cfg: &GaConfig,
    gs: &GateSet,
    fp: &FitnessParams,
    mut observe: F,
) -> Result<RunRecord>
where
    F: FnMut(&GaState),
{
    let mut state = init_population(cfg, gs, fp)?;
    let table = match cfg.mutation {
        Mutation::InsertIdentity => IdentityTable::build(gs)?,
        _ => IdentityTable::default(),
    };
    let mut rows = Vec::with_capacity(cfg.generations);

    for generation in 1..=cfg.generations {
        state.generation = generation;
        state.sort_ascending();
        let fittest = state.population.last().expect("population is nonempty");
        if state.best.fitness < fittest.fitness {
            state.best = fittest.clone();
        }
        rows.push(summarize(generation, &state));

        cull(&mut state);
        let deficit = cfg.population_size - state.population.len();
        let children = breed_children(&mut state, cfg, gs, &table, deficit);
        for word in children {
            state.population.push(Individual::evaluate(word, gs, fp)?);
        }
        observe(&state);
    }

    Ok(RunRecord {
        gateset: gs.name().to_string(),
        target: fp.target.label.clone(),
        lambda: fp.lambda(),
        config: cfg.clone(),
        rows,
        best: state.best,
    })
}

fn summarize(generation: usize, state: &GaState) -> GenerationRow {
    let n = state.population.len() as f64;
    let (err_sum, len_sum) = state
        .population
        .iter()
        .fold((0.0, 0.0), |(e, l), i| (e + i.error, l + i.len() as f64));
    GenerationRow {
        generation,
        mean_error: err_sum / n,
        mean_length: len_sum / n,
        best_error: state.best.error,
        best_length: state.best.len(),
        best_fitness: state.best.fitness,
    }
}

fn pick_parents(state: &mut GaState, selection: Selection) -> (&BraidWord, &BraidWord) {
    let survivors = &state.population;
    let (i, j) = match selection {
        Selection::Uniform => {
            let pair = sample(&mut state.rng, survivors.len(), 2);
            (pair.index(0), pair.index(1))
        }
        Selection::FitnessProportional => {
            let mut weights: Vec<f64> = survivors.iter().map(|s| s.fitness).collect();
            let first = WeightedIndex::new(&weights)
                .expect("fitness is positive")
                .sample(&mut state.rng);
            weights[first] = 0.0;
            let second = WeightedIndex::new(&weights)
                .expect("at least two survivors")
                .sample(&mut state.rng);
            (first, second)
        }
    };
    (&survivors[i].word, &survivors[j].word)
}

/// Breeds `deficit` children from the current survivors.
///
/// Each pair of parents gives two children; an odd deficit drops the last
/// second child. When recombination has no valid split, new parents are
/// drawn up to `breed_retries` times, then naive recombination is tried the
/// same number of times, and if that also fails (every survivor shorter than
/// two letters) two fresh random words take the pair's place.
fn breed_children(
    state: &mut GaState,
    cfg: &GaConfig,
    gs: &GateSet,
    table: &IdentityTable,
    deficit: usize,
) -> Vec<BraidWord> {
    let mut children = Vec::with_capacity(deficit + 1);
    while children.len() < deficit {
        let (c1, c2) = breed_pair(state, cfg, gs);
        children.push(c1);
        if children.len() < deficit {
            children.push(c2);
        }
    }
    if cfg.mutation != Mutation::Off {
        for child in children.iter_mut() {
            if state.rng.gen_bool(cfg.mutation_rate) {
                *child = mutate(child, cfg.mutation, gs, table, &mut state.rng);
            }
        }
    }
    children
}

fn breed_pair(state: &mut GaState, cfg: &GaConfig, gs: &GateSet) -> (BraidWord, BraidWord) {
    let attempts = cfg.breed_retries.max(1);
    if cfg.recombination == Recombination::Contextual {
        for _ in 0..attempts {
            let (p1, p2) = pick_parents(state, cfg.selection);
            if let Ok(children) = breed_contextual(p1, p2, gs) {
                return children;
            }
        }
    }
    for _ in 0..attempts {
        let (p1, p2) = pick_parents(state, cfg.selection);
        let (p1, p2) = (p1.clone(), p2.clone());
        if let Ok(children) = breed_naive(&p1, &p2, &mut state.rng) {
            return children;
        }
    }
    (
        random_word(&mut state.rng, gs, cfg.init_length),
        random_word(&mut state.rng, gs, cfg.init_length),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gateset::{fibonacci_gateset, majorana_gateset, target_gate};

    fn fib(lambda: f64) -> (GateSet, FitnessParams) {
        (
            fibonacci_gateset(),
            FitnessParams::new(lambda, target_gate("x-rotation").unwrap()).unwrap(),
        )
    }

    #[test]
    fn zero_generations_keeps_initial_best() {
        let (gs, fp) = fib(0.0);
        let cfg = GaConfig { generations: 0, seed: 7, ..Default::default() };
        let record = evolve(&cfg, &gs, &fp).unwrap();
        let init = init_population(&cfg, &gs, &fp).unwrap();
        assert!(record.rows.is_empty());
        assert_eq!(record.best, init.best);
    }

    #[test]
    fn population_size_is_conserved() {
        for (m, recombination) in [
            (10, Recombination::Contextual),
            (13, Recombination::Naive),
            (80, Recombination::Contextual),
            (25, Recombination::Naive),
        ] {
            let (gs, fp) = fib(0.3);
            let cfg = GaConfig {
                population_size: m,
                generations: 40,
                recombination,
                seed: m as u64,
                ..Default::default()
            };
            let mut sizes = Vec::new();
            evolve_with_observer(&cfg, &gs, &fp, |s| sizes.push(s.population.len())).unwrap();
            assert_eq!(sizes, vec![m; 40]);
        }
    }

    #[test]
    fn best_fitness_never_decreases() {
        for lambda in [0.0, 0.5, 1.0] {
            let (gs, fp) = fib(lambda);
            let cfg = GaConfig { generations: 120, seed: 99, ..Default::default() };
            let record = evolve(&cfg, &gs, &fp).unwrap();
            assert_eq!(record.rows.len(), 120);
            for w in record.rows.windows(2) {
                assert!(w[1].best_fitness >= w[0].best_fitness);
            }
            if lambda == 0.0 {
                for w in record.rows.windows(2) {
                    assert!(w[1].best_error <= w[0].best_error);
                }
            }
            assert_eq!(record.rows.last().unwrap().best_fitness, record.best.fitness);
        }
    }

    #[test]
    fn runs_are_deterministic() {
        let (gs, fp) = fib(0.2);
        let cfg = GaConfig {
            generations: 60,
            seed: 2024,
            mutation: Mutation::Replace,
            selection: Selection::FitnessProportional,
            ..Default::default()
        };
        assert_eq!(evolve(&cfg, &gs, &fp).unwrap(), evolve(&cfg, &gs, &fp).unwrap());
        let other = evolve(&cfg.with_seed(2025), &gs, &fp).unwrap();
        assert_ne!(evolve(&cfg, &gs, &fp).unwrap().rows, other.rows);
    }

    #[test]
    fn length_only_fitness_survives_single_letter_population() {
        // λ = 1 drives everything to length 1, where neither operator can split
        let (gs, fp) = fib(1.0);
        let cfg = GaConfig { generations: 200, seed: 1, ..Default::default() };
        let record = evolve(&cfg, &gs, &fp).unwrap();
        assert_eq!(record.best.len(), 1);
        assert_eq!(record.best.fitness, 1.0);
    }

    #[test]
    fn majorana_with_insert_identity() {
        let gs = majorana_gateset();
        let fp = FitnessParams::new(0.0, target_gate("cnot").unwrap()).unwrap();
        let cfg = GaConfig {
            generations: 30,
            mutation: Mutation::InsertIdentity,
            mutation_rate: 1.0,
            seed: 5,
            ..Default::default()
        };
        let mut sizes = Vec::new();
        let record = evolve_with_observer(&cfg, &gs, &fp, |s| sizes.push(s.population.len())).unwrap();
        assert!(sizes.iter().all(|&s| s == 80));
        assert_eq!(record.rows.len(), 30);
    }

    #[test]
    fn mean_error_drops_early_on() {
        let (gs, fp) = fib(0.0);
        let cfg = GaConfig { generations: 100, seed: 3, ..Default::default() };
        let record = evolve(&cfg, &gs, &fp).unwrap();
        assert!(record.rows[99].mean_error < record.rows[0].mean_error);
    }
}
