//! Recombination operators.
//!
//! Both operators pick split points `n1 ∈ (lo, len(P1)]`, `n2 ∈ (lo, len(P2)]`
//! and swap tails:
//!
//! ```text
//! C1 = P1[1, n1-1] · P2[n2, end]
//! C2 = P2[1, n2-1] · P1[n1, end]
//! ```
//!
//! so the children's lengths always sum to the parents' lengths.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gateset::GateSet;
use crate::word::BraidWord;

fn swap_tails(p1: &BraidWord, p2: &BraidWord, n1: usize, n2: usize) -> (BraidWord, BraidWord) {
    let (a, b) = (p1.letters(), p2.letters());
    let c1 = [&a[..n1 - 1], &b[n2 - 1..]].concat();
    let c2 = [&b[..n2 - 1], &a[n1 - 1..]].concat();
    (c1.into(), c2.into())
}

/// Recombines at uniformly random split points `n1 ∈ (1, len(P1)]`, `n2 ∈ (1, len(P2)]`.
pub fn breed_naive<R: Rng>(
    p1: &BraidWord,
    p2: &BraidWord,
    rng: &mut R,
) -> Result<(BraidWord, BraidWord)> {
    for p in [p1, p2] {
        if p.len() < 2 {
            return Err(Error::ParentTooShort(p.len()));
        }
    }
    let n1 = rng.gen_range(2..=p1.len());
    let n2 = rng.gen_range(2..=p2.len());
    Ok(swap_tails(p1, p2, n1, n2))
}

/// Length of the longest common prefix of two words.
pub fn common_prefix_len(p1: &BraidWord, p2: &BraidWord) -> usize {
    p1.letters()
        .iter()
        .zip(p2.letters())
        .take_while(|(a, b)| a == b)
        .count()
}

/// Split points minimizing the distance between the parents' prefixes.
///
/// Scans `n1 ∈ (m, len(P1)]`, `n2 ∈ (m, len(P2)]` where `m` is the common
/// prefix length, skipping pairs whose prefixes are identical words. The
/// first minimum in `(n1, n2)` scan order wins.
pub fn contextual_split(p1: &BraidWord, p2: &BraidWord, gs: &GateSet) -> Result<(usize, usize)> {
    let m = common_prefix_len(p1, p2);
    if m == p1.len() || m == p2.len() {
        return Err(Error::NoValidSplit);
    }
    let pre1 = p1.prefix_products(gs)?;
    let pre2 = p2.prefix_products(gs)?;
    let (a, b) = (p1.letters(), p2.letters());

    let mut best: Option<(f64, usize, usize)> = None;
    for n1 in m + 1..=p1.len() {
        for n2 in m + 1..=p2.len() {
            if n1 == n2 && a[..n1 - 1] == b[..n2 - 1] {
                continue;
            }
            let d = pre1[n1 - 1].distance_unchecked(&pre2[n2 - 1]);
            if best.is_none_or(|(bd, _, _)| d < bd) {
                best = Some((d, n1, n2));
            }
        }
    }
    best.map(|(_, n1, n2)| (n1, n2)).ok_or(Error::NoValidSplit)
}

/// Contextual recombination: tails are swapped where the two prefixes are
/// closest as matrices, so each child keeps a head that "means" nearly the
/// same thing in both parents.
pub fn breed_contextual(
    p1: &BraidWord,
    p2: &BraidWord,
    gs: &GateSet,
) -> Result<(BraidWord, BraidWord)> {
    let (n1, n2) = contextual_split(p1, p2, gs)?;
    Ok(swap_tails(p1, p2, n1, n2))
}
