use rand::Rng;

use super::Mutation;
use crate::brute::{enumerate_within, length_ceiling};
use crate::error::Result;
use crate::gateset::{GateSet, TargetGate};
use crate::word::{BraidWord, Letter};

const IDENTITY_MAX_ERROR: f64 = 0.3;
const IDENTITY_MAX_LENGTH: usize = 8;
const IDENTITY_NODE_BUDGET: u128 = 1_000_000;

/// Short reduced words whose matrices are close to the identity.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct IdentityTable {
    entries: Vec<(BraidWord, f64)>,
}

impl IdentityTable {
    pub fn new(entries: Vec<(BraidWord, f64)>) -> Self {
        IdentityTable { entries }
    }

    /// Every reduced word with identity error ≤ 0.3 and length ≤ 8. For
    /// large alphabets the length cap shrinks to keep the enumeration under
    /// a million nodes (6 for the Majorana set).
    pub fn build(gs: &GateSet) -> Result<Self> {
        let max_len =
            IDENTITY_MAX_LENGTH.min(length_ceiling(gs.alphabet_size() as u64, IDENTITY_NODE_BUDGET));
        let id = TargetGate::identity(gs.dim())?;
        Ok(IdentityTable::new(enumerate_within(gs, &id, max_len, IDENTITY_MAX_ERROR)?))
    }

    pub fn entries(&self) -> &[(BraidWord, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Applies one mutation. `Off`, an empty word under `Replace`, and an empty
/// table under `InsertIdentity` return the word unchanged.
pub fn mutate<R: Rng>(
    word: &BraidWord,
    mode: Mutation,
    gs: &GateSet,
    table: &IdentityTable,
    rng: &mut R,
) -> BraidWord {
    match mode {
        Mutation::Off => word.clone(),
        Mutation::Replace => {
            if word.is_empty() {
                return word.clone();
            }
            let alphabet = gs.alphabet();
            let pos = rng.gen_range(0..word.len());
            let current = word.letters()[pos];
            let others: Vec<Letter> = alphabet.into_iter().filter(|&l| l != current).collect();
            let mut letters = word.letters().to_vec();
            letters[pos] = others[rng.gen_range(0..others.len())];
            letters.into()
        }
        Mutation::InsertIdentity => {
            if table.is_empty() {
                return word.clone();
            }
            let (insert, _) = &table.entries[rng.gen_range(0..table.len())];
            let pos = rng.gen_range(0..=word.len());
            let mut letters = Vec::with_capacity(word.len() + insert.len());
            letters.extend_from_slice(&word.letters()[..pos]);
            letters.extend_from_slice(insert.letters());
            letters.extend_from_slice(&word.letters()[pos..]);
            letters.into()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gateset::{fibonacci_gateset, majorana_gateset};
    use crate::genetic::random_word;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn replace_single_letter() {
        let gs = fibonacci_gateset();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let w: BraidWord = "s1".parse().unwrap();
        for _ in 0..50 {
            let m = mutate(&w, Mutation::Replace, &gs, &IdentityTable::default(), &mut rng);
            assert_eq!(m.len(), 1);
            assert_ne!(m, w);
        }
    }

    #[test]
    fn replace_changes_exactly_one_letter() {
        let gs = majorana_gateset();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let w = random_word(&mut rng, &gs, (1, 20));
            let m = mutate(&w, Mutation::Replace, &gs, &IdentityTable::default(), &mut rng);
            let diffs = w.letters().iter().zip(m.letters()).filter(|(a, b)| a != b).count();
            assert_eq!(diffs, 1);
        }
    }

    #[test]
    fn off_is_identity() {
        let gs = fibonacci_gateset();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let w: BraidWord = "s1 s2^-3".parse().unwrap();
        assert_eq!(mutate(&w, Mutation::Off, &gs, &IdentityTable::default(), &mut rng), w);
    }

    #[test]
    fn identity_tables() {
        let fib = IdentityTable::build(&fibonacci_gateset()).unwrap();
        assert!(!fib.is_empty());
        assert!(fib
            .entries()
            .iter()
            .all(|(w, e)| *e <= 0.3 && w.len() <= 8 && w.is_freely_reduced()));
        let maj = IdentityTable::build(&majorana_gateset()).unwrap();
        assert!(maj.entries().iter().any(|(w, _)| *w == "s1^4".parse().unwrap()));
        assert!(maj.entries().iter().all(|(w, _)| w.len() <= 6));
    }

    #[test]
    fn insert_identity_moves_matrix_by_at_most_table_error() {
        // |A·W·B − A·B| = |W − I| for unitary A, B.
        let gs = fibonacci_gateset();
        let table = IdentityTable::build(&gs).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let max_err = table.entries().iter().map(|e| e.1).fold(0.0, f64::max);
        for _ in 0..200 {
            let w = random_word(&mut rng, &gs, (1, 30));
            let m = mutate(&w, Mutation::InsertIdentity, &gs, &table, &mut rng);
            assert!(m.len() > w.len());
            let moved = m.mat(&gs).unwrap().frobenius_distance(&w.mat(&gs).unwrap()).unwrap();
            assert!(moved <= max_err + 1e-12);
        }
    }
}
