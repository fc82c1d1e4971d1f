use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use braidforge::algebra::braid_error;
use braidforge::brute::{exhaustive_search, length_ceiling, DEFAULT_NODE_BUDGET};
use braidforge::diagram::render_diagram;
use braidforge::gateset::{fibonacci_gateset, majorana_gateset, target_gate, GateSet, TargetGate};
use braidforge::genetic::{FitnessParams, GaConfig};
use braidforge::harness::{self, mean_curve, overall_best, run_batch, threads_from_env, with_workers};
use braidforge::word::parse_word;

use crate::output;
use crate::{BruteArgs, EvalArgs, EvolveArgs, GaArgs, Problem, RenderArgs, SweepArgs};

fn load_gateset(name: &str) -> Result<GateSet> {
    match name {
        "fibonacci" => Ok(fibonacci_gateset()),
        "majorana" => Ok(majorana_gateset()),
        path => {
            let text = fs::read_to_string(path).with_context(|| {
                format!("unknown gate set {path:?} (expected fibonacci, majorana, or a file path)")
            })?;
            let stem = Path::new(path)
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.to_string());
            Ok(GateSet::from_text(stem, &text)?)
        }
    }
}

fn load_target(name: &str, gs: &GateSet) -> Result<TargetGate> {
    let target = match name {
        "identity" => TargetGate::identity(gs.dim())?,
        other => target_gate(other)?,
    };
    if target.matrix.dim() != gs.dim() {
        bail!(
            "target {:?} is {}x{} but gate set {:?} is {}x{}",
            target.label,
            target.matrix.dim(),
            target.matrix.dim(),
            gs.name(),
            gs.dim(),
            gs.dim()
        );
    }
    Ok(target)
}

fn load_problem(p: &Problem) -> Result<(GateSet, TargetGate)> {
    let gs = load_gateset(&p.gateset)?;
    let target = load_target(&p.target, &gs)?;
    Ok((gs, target))
}

fn ga_config(a: &GaArgs) -> Result<GaConfig> {
    let cfg = GaConfig {
        population_size: a.population,
        generations: a.generations,
        recombination: a.recombination.parse()?,
        mutation: a.mutation.parse()?,
        mutation_rate: a.mutation_rate,
        selection: a.selection.parse()?,
        init_length: (a.init_min, a.init_max),
        seed: a.seed,
        ..Default::default()
    };
    cfg.validate()?;
    if a.runs == 0 {
        bail!("--runs must be at least 1");
    }
    Ok(cfg)
}

pub fn brute(a: BruteArgs) -> Result<()> {
    let (gs, target) = load_problem(&a.problem)?;
    if a.max_length == 0 {
        bail!("--max-length must be at least 1");
    }
    let ceiling = length_ceiling(gs.alphabet_size() as u64, DEFAULT_NODE_BUDGET);
    if a.max_length > ceiling && !a.force {
        bail!(
            "--max-length {} exceeds the ceiling of {} for gate set {:?}; pass --force to run anyway",
            a.max_length,
            ceiling,
            gs.name()
        );
    }
    let threads = threads_from_env()?;
    let frontier = with_workers(threads, || {
        exhaustive_search(&gs, &target, a.max_length, a.stop_error)
    })??;
    output::write_frontier(output::open(a.out.as_deref())?, &frontier)
}

fn report_best(out_is_file: bool, line: String) -> Result<()> {
    if out_is_file {
        writeln!(std::io::stdout(), "{line}")?;
    } else {
        eprintln!("{line}");
    }
    Ok(())
}

pub fn evolve(a: EvolveArgs) -> Result<()> {
    let (gs, target) = load_problem(&a.problem)?;
    let fp = FitnessParams::new(a.lambda, target)?;
    let cfg = ga_config(&a.ga)?;
    let threads = threads_from_env()?;
    let records = with_workers(threads, || run_batch(&cfg, &gs, &fp, a.ga.runs))??;
    output::write_mean_curve(output::open(a.out.as_deref())?, &mean_curve(&records)?)?;
    if let Some((run, best)) = overall_best(&records) {
        report_best(
            a.out.is_some(),
            format!(
                "best run={} seed={} length={} error={} fitness={} word=\"{}\"",
                run,
                records[run].config.seed,
                best.len(),
                best.error,
                best.fitness,
                best.word
            ),
        )?;
    }
    Ok(())
}

pub fn sweep(a: SweepArgs) -> Result<()> {
    let (gs, target) = load_problem(&a.problem)?;
    for &l in &a.lambdas {
        FitnessParams::new(l, target.clone())?;
    }
    let fp = FitnessParams::new(a.lambdas[0], target)?;
    let cfg = ga_config(&a.ga)?;
    let threads = threads_from_env()?;
    let summary = with_workers(threads, || harness::sweep(&cfg, &gs, &fp, &a.lambdas, a.ga.runs))??;
    output::write_sweep(output::open(a.out.as_deref())?, &summary.rows)
}

pub fn render(a: RenderArgs) -> Result<()> {
    let gs = load_gateset(&a.gateset)?;
    let word = parse_word(&a.word, &gs)?;
    let strands = a.strands.unwrap_or(gs.generator_count() + 1);
    let svg = render_diagram(&word, strands)?;
    let mut sink = output::open(a.out.as_deref())?;
    sink.write_all(svg.as_bytes())?;
    sink.flush()?;
    Ok(())
}

pub fn eval(a: EvalArgs) -> Result<()> {
    let (gs, target) = load_problem(&a.problem)?;
    let word = parse_word(&a.word, &gs)?;
    let error = braid_error(&word, &target, &gs)?;
    let matrix = word.mat(&gs)?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "word: {word}")?;
    writeln!(out, "length: {}", word.len())?;
    writeln!(out, "error: {error:e}")?;
    writeln!(out, "matrix:")?;
    writeln!(out, "{matrix}")?;
    Ok(())
}
