//! CSV schemas. Floats use Rust's shortest round-trip formatting, which is
//! locale-independent and identical across runs.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use braidforge::brute::FrontierPoint;
use braidforge::harness::{MeanRow, SweepRow};

pub fn open(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn finish<W: Write>(w: csv::Writer<W>) -> Result<()> {
    let mut inner = w.into_inner().map_err(|e| e.into_error())?;
    inner.flush()?;
    Ok(())
}

pub fn write_frontier<W: Write>(sink: W, points: &[FrontierPoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["length", "min_error", "witness"])?;
    for p in points {
        w.write_record([
            p.max_length.to_string(),
            p.min_error.to_string(),
            p.witness.to_string(),
        ])?;
    }
    finish(w)
}

pub fn write_mean_curve<W: Write>(sink: W, rows: &[MeanRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["generation", "mean_error", "mean_length", "best_error", "best_length"])?;
    for r in rows {
        w.write_record([
            r.generation.to_string(),
            r.mean_error.to_string(),
            r.mean_length.to_string(),
            r.best_error.to_string(),
            r.best_length.to_string(),
        ])?;
    }
    finish(w)
}

pub fn write_sweep<W: Write>(sink: W, rows: &[SweepRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["lambda", "mean_error", "std_error", "mean_length", "std_length", "runs"])?;
    for r in rows {
        w.write_record([
            r.lambda.to_string(),
            r.mean_error.to_string(),
            r.std_error.to_string(),
            r.mean_length.to_string(),
            r.std_length.to_string(),
            r.runs.to_string(),
        ])?;
    }
    finish(w)
}
