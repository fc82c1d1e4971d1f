//! Exhaustive search over freely reduced braid words.
//!
//! Words are enumerated shortest first by iterative deepening. A letter is
//! never followed by its own inverse, so an alphabet of `a` letters yields
//! `a·(a−1)^(ℓ−1)` candidates of length `ℓ` instead of `a^ℓ`. Dropping the
//! cancelling words loses nothing: each of them has the same matrix as a
//! shorter reduced word.
//!
//! The search at each depth is split by first letter and the subtrees run in
//! parallel; results are merged in alphabet order, so the outcome does not
//! depend on the number of worker threads.

use rayon::prelude::*;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::gateset::{GateSet, TargetGate};
use crate::word::{BraidWord, Letter};

/// Node budget used to derive the default length ceiling for a gate set.
pub const DEFAULT_NODE_BUDGET: u128 = 10_000_000;

/// Best error achievable by any word of length at most `max_length`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierPoint {
    pub max_length: usize,
    pub min_error: f64,
    pub witness: BraidWord,
}

/// Number of words of `length` over an alphabet of generators and inverses
/// with no adjacent cancelling pair. Saturates at `u128::MAX`.
pub fn count_reduced_words(alphabet_size: u64, length: u32) -> u128 {
    debug_assert!(alphabet_size >= 2 && alphabet_size.is_multiple_of(2));
    if length == 0 {
        return 1;
    }
    let a = alphabet_size as u128;
    (a - 1)
        .checked_pow(length - 1)
        .and_then(|p| p.checked_mul(a))
        .unwrap_or(u128::MAX)
}

/// Longest length whose cumulative reduced-word count stays within `budget`.
///
/// With the default budget this is 14 for the Fibonacci alphabet (4 letters)
/// and 7 for the Majorana alphabet (10 letters).
pub fn length_ceiling(alphabet_size: u64, budget: u128) -> usize {
    let mut total: u128 = 0;
    let mut len = 0u32;
    loop {
        total = total.saturating_add(count_reduced_words(alphabet_size, len + 1));
        if total > budget || len >= 512 {
            return len as usize;
        }
        len += 1;
    }
}

/// The trivial frontier point at length 0: the empty word.
pub fn empty_point(gs: &GateSet, target: &TargetGate) -> Result<FrontierPoint> {
    let error = crate::algebra::braid_error(&BraidWord::empty(), target, gs)?;
    Ok(FrontierPoint {
        max_length: 0,
        min_error: error,
        witness: BraidWord::empty(),
    })
}

struct Alphabet {
    letters: Vec<Letter>,
    matrices: Vec<Matrix>,
}

impl Alphabet {
    fn new(gs: &GateSet) -> Self {
        let letters = gs.alphabet();
        let matrices = letters
            .iter()
            .map(|&l| *gs.letter_matrix(l).expect("alphabet letters are valid"))
            .collect();
        Alphabet { letters, matrices }
    }
}

fn check_dims(gs: &GateSet, target: &TargetGate) -> Result<()> {
    if gs.dim() != target.matrix.dim() {
        return Err(Error::DimensionMismatch {
            left: gs.dim(),
            right: target.matrix.dim(),
        });
    }
    Ok(())
}

/// Lowest-error word of exactly `depth` letters below `prefix` (ties: first in letter order).
fn best_below(
    alphabet: &Alphabet,
    target: &Matrix,
    depth: usize,
    prefix: &Matrix,
    path: &mut Vec<usize>,
    best: &mut Option<(f64, Vec<usize>)>,
) {
    if path.len() == depth {
        let err = prefix.distance_unchecked(target);
        if best.as_ref().is_none_or(|(b, _)| err < *b) {
            *best = Some((err, path.clone()));
        }
        return;
    }
    let last = *path.last().expect("search starts from a one-letter prefix");
    for (i, m) in alphabet.matrices.iter().enumerate() {
        if alphabet.letters[last].cancels(alphabet.letters[i]) {
            continue;
        }
        let next = prefix * m;
        path.push(i);
        best_below(alphabet, target, depth, &next, path, best);
        path.pop();
    }
}

fn best_of_length(alphabet: &Alphabet, target: &Matrix, depth: usize) -> (f64, BraidWord) {
    let per_first: Vec<Option<(f64, Vec<usize>)>> = (0..alphabet.letters.len())
        .into_par_iter()
        .map(|first| {
            let mut best = None;
            let mut path = vec![first];
            best_below(
                alphabet,
                target,
                depth,
                &alphabet.matrices[first],
                &mut path,
                &mut best,
            );
            best
        })
        .collect();
    let (err, path) = per_first
        .into_iter()
        .flatten()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
        .expect("alphabet is nonempty");
    let word = path.into_iter().map(|i| alphabet.letters[i]).collect::<Vec<_>>();
    (err, word.into())
}

/// Error-vs-length frontier for `target`, one point per maximum length
/// `1..=max_length`. Stops after the first length whose best error is at or
/// below `stop_error`.
pub fn exhaustive_search(
    gs: &GateSet,
    target: &TargetGate,
    max_length: usize,
    stop_error: Option<f64>,
) -> Result<Vec<FrontierPoint>> {
    check_dims(gs, target)?;
    if max_length < 1 {
        return Err(Error::InvalidConfig("max_length must be at least 1".into()));
    }
    let alphabet = Alphabet::new(gs);
    let mut frontier: Vec<FrontierPoint> = Vec::with_capacity(max_length);
    let mut running: Option<(f64, BraidWord)> = None;
    for depth in 1..=max_length {
        let (err, word) = best_of_length(&alphabet, &target.matrix, depth);
        if running.as_ref().is_none_or(|(b, _)| err < *b) {
            running = Some((err, word));
        }
        let (min_error, witness) = running.clone().expect("set on first depth");
        frontier.push(FrontierPoint {
            max_length: depth,
            min_error,
            witness,
        });
        if stop_error.is_some_and(|s| min_error <= s) {
            break;
        }
    }
    Ok(frontier)
}

/// Every nonempty reduced word of length at most `max_length` whose error
/// against `target` is at most `max_error`, in enumeration order.
pub fn enumerate_within(
    gs: &GateSet,
    target: &TargetGate,
    max_length: usize,
    max_error: f64,
) -> Result<Vec<(BraidWord, f64)>> {
    check_dims(gs, target)?;
    let alphabet = Alphabet::new(gs);

    fn walk(
        alphabet: &Alphabet,
        target: &Matrix,
        max_length: usize,
        max_error: f64,
        prefix: &Matrix,
        path: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, f64)>,
    ) {
        let err = prefix.distance_unchecked(target);
        if err <= max_error {
            out.push((path.clone(), err));
        }
        if path.len() == max_length {
            return;
        }
        let last = alphabet.letters[*path.last().unwrap()];
        for (i, m) in alphabet.matrices.iter().enumerate() {
            if last.cancels(alphabet.letters[i]) {
                continue;
            }
            let next = prefix * m;
            path.push(i);
            walk(alphabet, target, max_length, max_error, &next, path, out);
            path.pop();
        }
    }

    if max_length == 0 {
        return Ok(Vec::new());
    }
    let chunks: Vec<Vec<(Vec<usize>, f64)>> = (0..alphabet.letters.len())
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut path = vec![first];
            walk(
                &alphabet,
                &target.matrix,
                max_length,
                max_error,
                &alphabet.matrices[first],
                &mut path,
                &mut out,
            );
            out
        })
        .collect();
    Ok(chunks
        .into_iter()
        .flatten()
        .map(|(path, err)| {
            let word: Vec<Letter> = path.into_iter().map(|i| alphabet.letters[i]).collect();
            (word.into(), err)
        })
        .collect())
}
