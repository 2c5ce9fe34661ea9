//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use symspin::config::RunConfig;
use symspin::report::Record;
use symspin::{run, Command as Cmd};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    note: String,
}

fn config(l: usize, buffer: u32) -> RunConfig {
    RunConfig { l, max_deg: if l == 2 { 10 } else { 8 }, buffer, ..RunConfig::default() }
}

fn records(cmd: Cmd, cfg: &RunConfig) -> Vec<Record> {
    run(cmd, cfg).unwrap_or_else(|e| panic!("{} failed: {e}", cmd.name())).records
}

fn suite(l: usize, name: &str) -> Vec<Record> {
    let cfg = RunConfig { suite: name.into(), ..config(l, 4) };
    records(Cmd::Verify, &cfg)
}

fn find<'a>(recs: &'a [Record], name: &str) -> &'a Record {
    recs.iter().find(|r| r.name == name).unwrap_or_else(|| panic!("no record {name}"))
}

fn passed(recs: &[Record], name: &str) -> bool {
    let r = find(recs, name);
    r.status == "PASS" && r.checked > 0
}

fn describe(recs: &[Record], names: &[&str]) -> String {
    names.iter().map(|n| format!("{n}={}", find(recs, n).status)).collect::<Vec<_>>().join(" ")
}

fn both_ranks(f: impl Fn(usize) -> (bool, String)) -> Outcome {
    let (a, na) = f(2);
    let (b, nb) = f(3);
    Outcome { pass: a && b, note: format!("l=2: {na}; l=3: {nb}") }
}

fn clifford() -> Outcome {
    let start = Instant::now();
    let mut o = both_ranks(|l| {
        let r = suite(l, "clifford");
        (passed(&r, "clifford-relation"), format!("{} checks", find(&r, "clifford-relation").checked))
    });
    let t = start.elapsed();
    o.pass &= t < Duration::from_secs(10);
    o.note += &format!("; {:.1}s (target < 10s)", t.as_secs_f64());
    o
}

fn squares() -> Outcome {
    both_ranks(|l| {
        let r = suite(l, "squares");
        (
            passed(&r, "x-squared") && passed(&r, "y-squared"),
            describe(&r, &["x-squared", "y-squared", "y-squared-inner-first"]),
        )
    })
}

fn super_commutators() -> Outcome {
    let start = Instant::now();
    let names = ["sigma-x-anticommutator", "sigma-y-y-squared", "x-theta-commutator", "theta-y-squared"];
    let mut o = both_ranks(|l| {
        let r = suite(l, "super-commutators");
        let mut ok = names.iter().all(|n| passed(&r, n) && find(&r, n).checked >= 150);
        if l == 2 {
            ok &= names.iter().all(|n| passed(&r, &format!("{n}-block-matrices")));
        }
        let total: usize = r.iter().map(|x| x.checked).sum();
        (ok, format!("{} records, {total} vectors", r.len()))
    });
    let t = start.elapsed();
    o.pass &= t < Duration::from_secs(120);
    o.note += &format!("; {:.1}s (target < 2min)", t.as_secs_f64());
    o
}

fn equivariance() -> Outcome {
    both_ranks(|l| {
        let r = suite(l, "equivariance");
        let ok = passed(&r, "rho-commutes-with-x") && passed(&r, "rho-commutes-with-y");
        let samples = find(&r, "rho-commutes-with-x").details["algebra_samples"].as_u64().unwrap_or(0);
        (ok && samples >= 10, format!("{} over {samples} elements", describe(&r, &["rho-commutes-with-x", "rho-commutes-with-y"])))
    })
}

fn direct_sum() -> Outcome {
    let mut o = both_ranks(|l| {
        let r = records(Cmd::Decompose, &config(l, 3));
        (passed(&r, "direct-sum"), format!("{} blocks", find(&r, "direct-sum").checked))
    });
    let report = run(Cmd::Decompose, &config(3, 3)).expect("decompose");
    let tri = &report.artifacts["triangle"];
    let nodes = tri["nodes"].as_array().map_or(0, |n| n.len());
    let cols = tri["column_sizes"].clone();
    o.pass &= nodes == 16 && cols == serde_json::json!([1, 2, 3, 4, 3, 2, 1]);
    o.note += &format!("; l=3 triangle: {nodes} nodes, columns {cols}");
    o
}

fn injectivity() -> Outcome {
    both_ranks(|l| {
        let r = records(Cmd::Decompose, &config(l, 4));
        (passed(&r, "x-injective") && passed(&r, "y-injective"), describe(&r, &["x-injective", "y-injective"]))
    })
}

fn containment() -> Outcome {
    both_ranks(|l| {
        let r = suite(l, "containment");
        let with_forbidden: Vec<_> = r.iter().filter(|x| x.status != "VACUOUS").collect();
        let ok = !with_forbidden.is_empty() && with_forbidden.iter().all(|x| x.status == "PASS" && x.checked > 0);
        let samples = r[0].details["sigma_samples"].as_u64().unwrap_or(0);
        (ok && samples >= 5, format!("{} nodes with forbidden slots, {samples} sigma", with_forbidden.len()))
    })
}

fn ricci_identity() -> Outcome {
    both_ranks(|l| {
        let r = records(Cmd::Complex, &config(l, 4));
        (
            passed(&r, "ricci-operator-identity"),
            describe(&r, &["ricci-operator-identity", "ricci-operator-identity-plus-sign"]),
        )
    })
}

fn sequence_edges() -> Outcome {
    let start = Instant::now();
    let mut o = both_ranks(|l| {
        let r = records(Cmd::Complex, &config(l, 4));
        let edges: Vec<usize> = (0..=2 * l - 2).filter(|&i| i != l - 1).collect();
        let ok = edges.iter().all(|i| passed(&r, &format!("sequence-edge-{i}")));
        (ok, format!("edges {edges:?}"))
    });
    let t = start.elapsed();
    o.pass &= t < Duration::from_secs(600);
    o.note += &format!("; {:.1}s", t.as_secs_f64());
    o
}

fn middle_gap() -> Outcome {
    both_ranks(|l| {
        let r = records(Cmd::Complex, &config(l, 4));
        let gap = find(&r, "middle-gap");
        let samples = gap.details["samples"].as_array().map_or(0, |s| s.len());
        let nonzero = gap.details["samples"]
            .as_array()
            .map_or(0, |s| s.iter().filter(|x| x["outcome"] == "nonzero").count());
        (gap.status == "FINDING" && samples >= 5, format!("{samples} sigma, {nonzero} nonzero"))
    })
}

fn geometry() -> Outcome {
    let r = records(Cmd::Geometry, &config(2, 4));
    let mut ok = true;
    for c in ["flat", "constant-gamma", "linear-gamma"] {
        for (check, min) in [
            ("ricci-symmetric", 0),
            ("second-spinor-derivative", 10),
            ("curvature-bridge", 1),
            ("derivative-containment", 1),
        ] {
            let rec = find(&r, &format!("{c}/{check}"));
            ok &= rec.status == "PASS" && rec.checked >= min;
        }
        ok &= find(&r, &format!("{c}/derivative-containment")).details["samples_per_component"].as_u64() >= Some(5);
    }
    let pass = r.iter().filter(|x| x.status == "PASS").count();
    Outcome { pass: ok, note: format!("{pass}/{} records pass over 3 connections", r.len()) }
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_symspin");
    let runs = [
        vec!["verify", "--suite", "all", "--seed", "11"],
        vec!["complex", "--seed", "11"],
        vec!["geometry", "--seed", "11"],
        vec!["decompose", "--l", "3", "--max-deg", "8"],
    ];
    let mut ok = true;
    for args in &runs {
        let a = Command::new(bin).args(args).output().expect("run");
        let b = Command::new(bin).args(args).env("SSL_THREADS", "1").output().expect("run");
        ok &= !a.stdout.is_empty() && a.stdout == b.stdout;
    }
    Outcome { pass: ok, note: format!("{} commands run twice, byte comparison", runs.len()) }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("clifford relation on all basis pairs", clifford),
        ("X^2 and Y^2 closed forms", squares),
        ("super-commutator relations", super_commutators),
        ("infinitesimal equivariance of X and Y", equivariance),
        ("truncated direct sum and triangle shape", direct_sum),
        ("injectivity of X and Y", injectivity),
        ("Sigma and Theta containment", containment),
        ("extended Ricci operator identity", ricci_identity),
        ("curvature sequences are complexes", sequence_edges),
        ("middle-gap probe", middle_gap),
        ("connection geometry suite", geometry),
        ("byte-identical reports", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.pass);
        println!("criterion {:>2} {} {name}: {}", k + 1, if o.pass { "PASS" } else { "FAIL" }, o.note);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
