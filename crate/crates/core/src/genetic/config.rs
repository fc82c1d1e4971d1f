use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Recombination {
    /// Uniformly random split points.
    Naive,
    /// Split points that bring the two parents' prefixes closest together.
    Contextual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    Off,
    /// Swap one letter for a different random letter.
    Replace,
    /// Splice in a short word that is close to the identity.
    InsertIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Selection {
    /// Two distinct survivors drawn uniformly.
    Uniform,
    /// Two distinct survivors drawn with probability proportional to fitness.
    FitnessProportional,
}

macro_rules! named_enum {
    ($ty:ty, $what:literal, $($variant:path => $name:literal),+ $(,)?) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($variant => $name),+ })
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($variant),)+
                    other => Err(Error::InvalidConfig(format!(
                        concat!("unknown ", $what, " {:?}; expected one of: {}"),
                        other,
                        [$($name),+].join(", ")
                    ))),
                }
            }
        }
    };
}

named_enum!(Recombination, "recombination", Recombination::Naive => "naive", Recombination::Contextual => "contextual");
named_enum!(Mutation, "mutation mode", Mutation::Off => "off", Mutation::Replace => "replace", Mutation::InsertIdentity => "insert-identity");
named_enum!(Selection, "selection", Selection::Uniform => "uniform", Selection::FitnessProportional => "fitness-proportional");

/// Settings for one GA run.
#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    pub population_size: usize,
    pub generations: usize,
    pub recombination: Recombination,
    pub mutation: Mutation,
    /// Probability that a freshly bred child is mutated (ignored when mutation is off).
    pub mutation_rate: f64,
    pub selection: Selection,
    /// Inclusive range of initial genome lengths.
    pub init_length: (usize, usize),
    /// Parent pairs tried per child pair before falling back to naive recombination.
    pub breed_retries: usize,
    pub seed: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        GaConfig {
            population_size: 80,
            generations: 1000,
            recombination: Recombination::Contextual,
            mutation: Mutation::Off,
            mutation_rate: 0.1,
            selection: Selection::Uniform,
            init_length: (1, 40),
            breed_retries: 16,
            seed: 0,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.population_size < 10 {
            return bad(format!(
                "population size must be at least 10, got {}",
                self.population_size
            ));
        }
        let (lo, hi) = self.init_length;
        if lo < 1 || hi < lo {
            return bad(format!("initial length range ({lo}, {hi}) must satisfy 1 <= min <= max"));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return bad(format!("mutation rate must lie in [0, 1], got {}", self.mutation_rate));
        }
        Ok(())
    }

    pub fn with_seed(&self, seed: u64) -> GaConfig {
        GaConfig { seed, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for r in [Recombination::Naive, Recombination::Contextual] {
            assert_eq!(r.to_string().parse::<Recombination>().unwrap(), r);
        }
        for m in [Mutation::Off, Mutation::Replace, Mutation::InsertIdentity] {
            assert_eq!(m.to_string().parse::<Mutation>().unwrap(), m);
        }
        assert_eq!(
            "fitness-proportional".parse::<Selection>().unwrap(),
            Selection::FitnessProportional
        );
        assert!("roulette".parse::<Selection>().is_err());
    }

    #[test]
    fn validation() {
        assert!(GaConfig::default().validate().is_ok());
        let small = GaConfig { population_size: 9, ..Default::default() };
        assert!(small.validate().is_err());
        let empty_genomes = GaConfig { init_length: (0, 5), ..Default::default() };
        assert!(empty_genomes.validate().is_err());
        let inverted = GaConfig { init_length: (6, 5), ..Default::default() };
        assert!(inverted.validate().is_err());
    }
}
