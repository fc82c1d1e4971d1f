//! Braid words: finite sequences of signed generator letters.
//!
//! Words do not carry matrices; they are evaluated against a [`GateSet`] on
//! demand, so the same word type serves every scheme. Evaluation multiplies
//! left to right: the first letter is the leftmost factor of the product.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::gateset::GateSet;

/// Largest run length accepted by the text grammar (`s1^e` with `|e|` above this is rejected).
pub const MAX_EXPONENT: i64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One generator (1-based `index`) or its inverse.
///
/// Letters order lexicographically by index, then `+` before `−`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub index: u16,
    pub sign: Sign,
}

impl Letter {
    pub const fn pos(index: u16) -> Letter {
        Letter {
            index,
            sign: Sign::Pos,
        }
    }

    pub const fn neg(index: u16) -> Letter {
        Letter {
            index,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    /// True when `self` followed by `next` is a generator–inverse pair.
    #[inline]
    pub fn cancels(self, next: Letter) -> bool {
        self.index == next.index && self.sign != next.sign
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    /// The identity braid.
    pub fn empty() -> Self {
        BraidWord::default()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Inclusive, 1-based slice `B^[start, end]`; `end = None` means "to the end".
    ///
    /// `start = end + 1` yields the empty word.
    pub fn subbraid(&self, start: usize, end: Option<usize>) -> Result<BraidWord> {
        let len = self.len();
        let end = end.unwrap_or(len);
        if start < 1 || end > len || start > end + 1 {
            return Err(Error::SliceOutOfRange { start, end, len });
        }
        Ok(BraidWord::new(self.letters[start - 1..end].to_vec()))
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord::new(letters)
    }

    pub fn validate(&self, gs: &GateSet) -> Result<()> {
        let count = gs.generator_count();
        match self
            .letters
            .iter()
            .find(|l| l.index == 0 || l.index as usize > count)
        {
            Some(l) => Err(Error::GeneratorOutOfRange {
                index: l.index as usize,
                count,
            }),
            None => Ok(()),
        }
    }

    /// Product of the letter matrices, first letter leftmost. Empty word → identity.
    pub fn mat(&self, gs: &GateSet) -> Result<Matrix> {
        let mut acc = gs.identity();
        for &l in &self.letters {
            acc = &acc * gs.letter_matrix(l)?;
        }
        Ok(acc)
    }

    /// `out[k]` is the matrix of the first `k` letters, for `k = 0..=len`.
    pub fn prefix_products(&self, gs: &GateSet) -> Result<Vec<Matrix>> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut acc = gs.identity();
        out.push(acc);
        for &l in &self.letters {
            acc = &acc * gs.letter_matrix(l)?;
            out.push(acc);
        }
        Ok(out)
    }

    /// Deletes adjacent generator–inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            match out.last() {
                Some(&prev) if prev.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord::new(out)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }
}

impl From<Vec<Letter>> for BraidWord {
    fn from(letters: Vec<Letter>) -> Self {
        BraidWord::new(letters)
    }
}

/// Parses the text grammar: whitespace-separated `s<k>` or `s<k>^<e>` tokens.
///
/// Generator indices are only checked for being positive; use
/// [`parse_word`] to check them against a gate set.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (n, tok) in text.split_whitespace().enumerate() {
            let position = n + 1;
            let fail = |reason: &str| Error::Parse {
                position,
                token: tok.to_string(),
                reason: reason.to_string(),
            };
            let body = tok
                .strip_prefix('s')
                .ok_or_else(|| fail("expected a token of the form s<k> or s<k>^<e>"))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (body, None),
            };
            if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
                return Err(fail("generator index must be a positive integer"));
            }
            let index: u16 = idx
                .parse()
                .map_err(|_| fail("generator index is too large"))?;
            if index == 0 {
                return Err(fail("generator indices start at 1"));
            }
            let exponent: i64 = match exp {
                None => 1,
                Some(e) => {
                    let digits = e.strip_prefix(['-', '+']).unwrap_or(e);
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(fail("exponent must be a signed integer"));
                    }
                    e.parse().map_err(|_| fail("exponent is too large"))?
                }
            };
            if exponent == 0 {
                return Err(fail("exponent must be nonzero"));
            }
            if exponent.abs() > MAX_EXPONENT {
                return Err(fail("exponent is too large"));
            }
            let letter = if exponent > 0 {
                Letter::pos(index)
            } else {
                Letter::neg(index)
            };
            letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
        }
        Ok(BraidWord::new(letters))
    }
}

/// Parses `text` and checks every generator index against `gs`.
pub fn parse_word(text: &str, gs: &GateSet) -> Result<BraidWord> {
    let word: BraidWord = text.parse()?;
    // report the offending token, not just the index
    for (n, tok) in text.split_whitespace().enumerate() {
        let single: BraidWord = tok.parse()?;
        if let Err(e) = single.validate(gs) {
            return Err(Error::Parse {
                position: n + 1,
                token: tok.to_string(),
                reason: e.to_string(),
            });
        }
    }
    Ok(word)
}

/// Run-length groups a word back into the text grammar.
pub fn format_word(word: &BraidWord) -> String {
    word.to_string()
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for run in self.letters.chunk_by(|a, b| a == b) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let l = run[0];
            let e = run.len() as i64 * if l.sign == Sign::Pos { 1 } else { -1 };
            if e == 1 {
                write!(f, "s{}", l.index)?;
            } else {
                write!(f, "s{}^{}", l.index, e)?;
            }
        }
        Ok(())
    }
}
