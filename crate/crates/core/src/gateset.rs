//! Generator sets for the two braiding schemes, plus the target gates.

use std::collections::HashSet;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::algebra::{Matrix, EQ_TOLERANCE};
use crate::error::{Error, Result};
use crate::word::{Letter, Sign};

/// The golden-ratio conjugate `(√5 − 1)/2`; satisfies `τ² + τ = 1`.
pub fn tau() -> f64 {
    (5f64.sqrt() - 1.0) / 2.0
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub label: String,
    pub matrix: Matrix,
}

/// A labeled, ordered set of unitary generators of one dimension.
///
/// Letters refer to generators by 1-based index; the inverse of each
/// generator is its conjugate transpose and is cached next to it.
#[derive(Debug, Clone, PartialEq)]
pub struct GateSet {
    name: String,
    dim: usize,
    generators: Vec<Generator>,
    inverses: Vec<Matrix>,
}

impl GateSet {
    pub fn new(name: impl Into<String>, generators: Vec<Generator>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidConfig("a gate set needs at least one generator".into()))?;
        let dim = first.matrix.dim();
        let mut seen = HashSet::new();
        for g in &generators {
            if g.matrix.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: g.matrix.dim(),
                });
            }
            if !seen.insert(g.label.as_str()) {
                return Err(Error::InvalidConfig(format!(
                    "duplicate generator label {:?}",
                    g.label
                )));
            }
            if !g.matrix.is_unitary(EQ_TOLERANCE) {
                return Err(Error::NotUnitary {
                    label: g.label.clone(),
                    tolerance: EQ_TOLERANCE,
                });
            }
        }
        if generators.len() > u16::MAX as usize {
            return Err(Error::InvalidConfig("too many generators".into()));
        }
        let inverses = generators.iter().map(|g| g.matrix.adjoint()).collect();
        Ok(GateSet {
            name: name.into(),
            dim,
            generators,
            inverses,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Generators plus their inverses.
    pub fn alphabet_size(&self) -> usize {
        2 * self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Looks up generator `index` (1-based).
    pub fn generator(&self, index: usize) -> Result<&Generator> {
        index
            .checked_sub(1)
            .and_then(|i| self.generators.get(i))
            .ok_or(Error::GeneratorOutOfRange {
                index,
                count: self.generators.len(),
            })
    }

    pub fn letter_matrix(&self, letter: Letter) -> Result<&Matrix> {
        let index = letter.index as usize;
        let i = index
            .checked_sub(1)
            .filter(|&i| i < self.generators.len())
            .ok_or(Error::GeneratorOutOfRange {
                index,
                count: self.generators.len(),
            })?;
        Ok(match letter.sign {
            Sign::Pos => &self.generators[i].matrix,
            Sign::Neg => &self.inverses[i],
        })
    }

    /// Every letter of the alphabet, in search order: index ascending, `+` before `−`.
    pub fn alphabet(&self) -> Vec<Letter> {
        (1..=self.generators.len() as u16)
            .flat_map(|k| [Letter::pos(k), Letter::neg(k)])
            .collect()
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.dim).expect("gate set dim is validated")
    }

    /// Parses a gate set from text.
    ///
    /// Blocks are separated by blank lines. Each block starts with a label line
    /// followed by `dim²` whitespace-separated `re,im` entries in row-major
    /// order. Lines starting with `#` are ignored.
    pub fn from_text(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut generators = Vec::new();
        let mut label: Option<(usize, String)> = None;
        let mut entries: Vec<Complex64> = Vec::new();

        let mut finish = |label: &mut Option<(usize, String)>,
                          entries: &mut Vec<Complex64>|
         -> Result<()> {
            if let Some((line, l)) = label.take() {
                let dim = match entries.len() {
                    4 => 2,
                    16 => 4,
                    n => {
                        return Err(Error::GateSetFile {
                            line,
                            reason: format!("generator {l:?} has {n} entries, expected 4 or 16"),
                        })
                    }
                };
                let matrix = Matrix::from_row_major(dim, entries)?;
                generators.push(Generator { label: l, matrix });
                entries.clear();
            }
            Ok(())
        };

        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.trim();
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                finish(&mut label, &mut entries)?;
                continue;
            }
            if label.is_none() {
                label = Some((line_no, line.to_string()));
                continue;
            }
            for tok in line.split_whitespace() {
                let (re, im) = tok.split_once(',').ok_or_else(|| Error::GateSetFile {
                    line: line_no,
                    reason: format!("expected `re,im`, got {tok:?}"),
                })?;
                let parse = |s: &str| {
                    s.trim().parse::<f64>().map_err(|e| Error::GateSetFile {
                        line: line_no,
                        reason: format!("bad number {s:?}: {e}"),
                    })
                };
                entries.push(Complex64::new(parse(re)?, parse(im)?));
            }
        }
        finish(&mut label, &mut entries)?;
        GateSet::new(name, generators)
    }
}

/// A gate to emulate.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetGate {
    pub label: String,
    pub matrix: Matrix,
}

impl TargetGate {
    pub fn new(label: impl Into<String>, matrix: Matrix) -> Self {
        TargetGate {
            label: label.into(),
            matrix,
        }
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Ok(TargetGate::new("identity", Matrix::identity(dim)?))
    }
}

pub const TARGET_NAMES: [&str; 2] = ["x-rotation", "cnot"];

pub fn target_gate(name: &str) -> Result<TargetGate> {
    let i = Complex64::i();
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let matrix = match name {
        "x-rotation" => Matrix::from_row_major(2, &[o, i, i, o])?,
        "cnot" => Matrix::from_row_major(
            4,
            &[
                l, o, o, o, //
                o, l, o, o, //
                o, o, o, l, //
                o, o, l, o,
            ],
        )?,
        _ => {
            return Err(Error::UnknownTarget {
                name: name.to_string(),
                available: TARGET_NAMES.to_vec(),
            })
        }
    };
    Ok(TargetGate::new(name, matrix))
}

/// Fibonacci-anyon exchange matrices σ₁, σ₂, already projected onto SU(2).
pub fn fibonacci_gateset() -> GateSet {
    let t = tau();
    let phase = |theta: f64| Complex64::from_polar(1.0, theta);
    let minus_i_sqrt_tau = Complex64::new(0.0, -t.sqrt());

    let sigma1 = Matrix::diagonal(&[phase(-7.0 * PI / 10.0), -phase(-3.0 * PI / 10.0)]).unwrap();
    let sigma2 = Matrix::from_row_major(
        2,
        &[
            -t * phase(-PI / 10.0),
            minus_i_sqrt_tau,
            minus_i_sqrt_tau,
            -t * phase(PI / 10.0),
        ],
    )
    .unwrap();

    GateSet::new(
        "fibonacci",
        vec![
            Generator {
                label: "s1".into(),
                matrix: sigma1,
            },
            Generator {
                label: "s2".into(),
                matrix: sigma2,
            },
        ],
    )
    .expect("Fibonacci generators are unitary")
}

/// The five 4×4 Majorana braid operators B₁…B₅.
pub fn majorana_gateset() -> GateSet {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::i();
    let r = FRAC_1_SQRT_2;
    let (hl, hi) = (l * r, i * r);

    let b1 = Matrix::diagonal(&[i, i, l, l]).unwrap();
    #[rustfmt::skip]
    let b2 = Matrix::from_row_major(4, &[
        hl, o,  hi, o,
        o,  hl, o,  hi,
        hi, o,  hl, o,
        o,  hi, o,  hl,
    ]).unwrap();
    let b3 = Matrix::diagonal(&[i, l, l, i]).unwrap();
    #[rustfmt::skip]
    let b4 = Matrix::from_row_major(4, &[
        hl, hi, o,   o,
        hi, hl, o,   o,
        o,  o,  hl,  -hi,
        o,  o,  -hi, hl,
    ]).unwrap();
    let b5 = Matrix::diagonal(&[i, l, i, l]).unwrap();

    let generators = [b1, b2, b3, b4, b5]
        .into_iter()
        .enumerate()
        .map(|(k, matrix)| Generator {
            label: format!("b{}", k + 1),
            matrix,
        })
        .collect();
    GateSet::new("majorana", generators).expect("Majorana generators are unitary")
}
