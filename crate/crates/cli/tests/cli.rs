use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use braidforge::algebra::braid_error;
use braidforge::gateset::{fibonacci_gateset, target_gate};
use braidforge::genetic::{init_population, FitnessParams, GaConfig};
use braidforge::harness::run_batch;
use braidforge::word::BraidWord;

const X_BRAID: &str = "s2^-2 s1^4 s2^-1 s1 s2^-1 s1 s2 s1^-2 s2 s1^-1 s2^-5 s1 s2^-1";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn brute_writes_one_row_per_length() {
    let o = run(&["brute", "--gateset", "fibonacci", "--target", "x-rotation", "--max-length", "8"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "length,min_error,witness");
    assert_eq!(lines.len(), 9);

    // length 1 row against the four candidates
    let gs = fibonacci_gateset();
    let x = target_gate("x-rotation").unwrap();
    let best = ["s1", "s1^-1", "s2", "s2^-1"]
        .iter()
        .map(|w| braid_error(&w.parse().unwrap(), &x, &gs).unwrap())
        .fold(f64::INFINITY, f64::min);
    let row: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(row[0], "1");
    assert_eq!(row[1].parse::<f64>().unwrap(), best);
    let witness: BraidWord = row[2].parse().unwrap();
    assert_eq!(braid_error(&witness, &x, &gs).unwrap(), best);
}

#[test]
fn brute_refuses_lengths_over_the_ceiling() {
    let o = run(&["brute", "--max-length", "30"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("--force"));
    let o = run(&["brute", "--gateset", "majorana", "--target", "cnot", "--max-length", "8"]);
    assert!(!o.status.success());
}

#[test]
fn brute_stop_error_and_identity_target() {
    let o = run(&[
        "brute", "--gateset", "majorana", "--target", "identity", "--max-length", "6",
        "--stop-error", "1e-9",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(text.lines().count() < 7);
    assert!(last.split(',').nth(1).unwrap().parse::<f64>().unwrap() <= 1e-9);
}

#[test]
fn evolve_zero_generations_reports_initial_best() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("curve.csv");
    let o = run(&[
        "evolve", "--runs", "1", "--generations", "0", "--seed", "3",
        "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        "generation,mean_error,mean_length,best_error,best_length\n"
    );
    let gs = fibonacci_gateset();
    let fp = FitnessParams::new(0.0, target_gate("x-rotation").unwrap()).unwrap();
    let cfg = GaConfig { generations: 0, seed: 3, ..Default::default() };
    let init = init_population(&cfg, &gs, &fp).unwrap();
    assert!(stdout(&o).contains(&format!("word=\"{}\"", init.best.word)));
}

#[test]
fn evolve_csv_is_the_mean_of_the_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("curve.csv");
    let o = run(&[
        "evolve", "--runs", "5", "--generations", "30", "--seed", "11", "--lambda", "0.2",
        "--population", "40", "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 31);

    let gs = fibonacci_gateset();
    let fp = FitnessParams::new(0.2, target_gate("x-rotation").unwrap()).unwrap();
    let cfg = GaConfig { population_size: 40, generations: 30, seed: 11, ..Default::default() };
    let records = run_batch(&cfg, &gs, &fp, 5).unwrap();
    for g in 0..30 {
        let row = &rows[g + 1];
        assert_eq!(row[0], (g + 1).to_string());
        let mean = |f: &dyn Fn(usize) -> f64| (0..5).map(f).sum::<f64>() / 5.0;
        let expect = [
            mean(&|r| records[r].rows[g].mean_error),
            mean(&|r| records[r].rows[g].mean_length),
            mean(&|r| records[r].rows[g].best_error),
            mean(&|r| records[r].rows[g].best_length as f64),
        ];
        for (cell, e) in row[1..].iter().zip(expect) {
            assert!((cell.parse::<f64>().unwrap() - e).abs() <= 1e-12 * e.abs().max(1.0));
        }
    }
}

#[test]
fn evolve_rejects_bad_flags() {
    for args in [
        &["evolve", "--lambda", "1.5"][..],
        &["evolve", "--lambda", "-0.1"],
        &["evolve", "--population", "9"],
        &["evolve", "--runs", "0"],
        &["evolve", "--recombination", "uniform"],
        &["evolve", "--target", "cnot"],
        &["evolve", "--gateset", "/nonexistent/gates.txt"],
    ] {
        let o = run(args);
        assert!(!o.status.success(), "{args:?} should fail");
    }
}

#[test]
fn evolve_options_run() {
    let o = run(&[
        "evolve", "--generations", "20", "--runs", "2", "--mutation", "insert-identity",
        "--mutation-rate", "0.5", "--selection", "fitness-proportional",
        "--recombination", "naive", "--init-min", "3", "--init-max", "9",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 21);
    assert!(stderr(&o).contains("best run="));
}

#[test]
fn sweep_rows_per_lambda() {
    let o = run(&[
        "sweep", "--lambdas", "0,0.25,0.5,0.75,1", "--runs", "3", "--generations", "30",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,mean_error,std_error,mean_length,std_length,runs");
    assert_eq!(lines.len(), 6);
    for line in &lines[1..] {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cells[2] >= 0.0 && cells[4] >= 0.0);
        assert_eq!(cells[5], 3.0);
    }
    assert!(!run(&["sweep", "--lambdas", "0,2"]).status.success());
}

#[test]
fn render_x_braid_and_single_crossing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x_braid.svg");
    let o = run(&["render", "--word", X_BRAID, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let svg = fs::read_to_string(&out).unwrap();
    assert_eq!(svg.matches(r#"class="crossing""#).count(), 22);

    let o = run(&["render", "--word", "s1", "--strands", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches(r#"class="crossing""#).count(), 1);

    let o = run(&["render", "--word", "s9", "--gateset", "fibonacci"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("token 1"));
}

#[test]
fn eval_outputs() {
    let o = run(&["eval", "--word", X_BRAID, "--target", "x-rotation"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("length: 22"));
    assert!(text.contains("matrix:"));

    let o = run(&["eval", "--word", "", "--target", "x-rotation"]);
    assert!(stdout(&o).contains("error: 2e0"), "{}", stdout(&o));

    let o = run(&["eval", "--word", "s1 s1^-1", "--target", "identity"]);
    let err: f64 = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("error: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(err < 1e-12);

    let o = run(&["eval", "--word", "s1", "--gateset", "fibonacci", "--target", "cnot"]);
    assert!(!o.status.success());
    let o = run(&["eval", "--word", "s1 s1^0"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("token 2"));
}

#[test]
fn custom_gateset_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fib.txt");
    let gs = fibonacci_gateset();
    let mut text = String::new();
    for g in gs.generators() {
        text.push_str(&g.label);
        text.push('\n');
        for row in g.matrix.rows() {
            let cells: Vec<String> = row.iter().map(|z| format!("{},{}", z.re, z.im)).collect();
            text.push_str(&cells.join(" "));
            text.push('\n');
        }
        text.push('\n');
    }
    fs::write(&path, text).unwrap();
    let builtin = run(&["brute", "--max-length", "6"]);
    let custom = run(&["brute", "--max-length", "6", "--gateset", path.to_str().unwrap()]);
    assert!(custom.status.success(), "{}", stderr(&custom));
    assert_eq!(stdout(&builtin), stdout(&custom));
}
