use std::io::Write;
use std::process::{Command, Output};

use beergraph::GraphFile;
use beergraph_cli::{generate, run, run_trial, Cli, KindArg};
use clap::Parser;

const G15: &str = "000001000101001110011011011111";

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beergraph")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn in_process(args: &[&str]) -> (bool, String) {
    let cli = Cli::try_parse_from(std::iter::once("beergraph").chain(args.iter().copied())).unwrap();
    let mut buf = Vec::new();
    let ok = run(cli, &mut buf).is_ok();
    (ok, String::from_utf8(buf).unwrap())
}

fn g15_file(beers: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "kind: proper\nendpoints: {G15}\nbeer: {beers}\n").unwrap();
    f
}

#[test]
fn generate_round_trips() {
    let text = stdout(&["generate", "--kind", "proper", "--n", "15", "--seed", "7"]);
    let file = GraphFile::parse(&text).unwrap();
    assert_eq!(file.graph.len(), 15);
    assert!(file.graph.is_proper());
    assert_eq!(file.to_string(), text);
    assert_eq!(text, stdout(&["generate", "--kind", "proper", "--n", "15", "--seed", "7"]));

    let empty = stdout(&["generate", "--kind", "proper", "--n", "9", "--beer-density", "0"]);
    assert!(empty.lines().any(|l| l == "beer:"));

    let interval = GraphFile::parse(&stdout(&["generate", "--kind", "interval", "--n", "4", "--seed", "1"])).unwrap();
    assert_eq!(interval.graph.endpoint_string().len(), 8);
}

#[test]
fn generate_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    stdout(&["generate", "--kind", "interval", "--n", "12", "--seed", "3", "--out", path.to_str().unwrap()]);
    let file = GraphFile::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file, generate(KindArg::Interval, 12, 0.1, 3).unwrap());
}

#[test]
fn query_g15_example() {
    let one = g15_file("6");
    let two = g15_file("6 8");
    let q = |f: &tempfile::NamedTempFile, rest: &[&str]| {
        let mut args = vec!["query", "--graph", f.path().to_str().unwrap()];
        args.extend_from_slice(rest);
        stdout(&args)
    };
    assert_eq!(q(&one, &["--op", "beer-dist", "--u", "13", "--v", "3"]), "{\"op\":\"beer_dist\",\"u\":13,\"v\":3,\"result\":3}\n");
    assert_eq!(q(&two, &["--op", "beer-shortest-path", "--u", "13", "--v", "3"]), "{\"op\":\"beer_shortest_path\",\"u\":13,\"v\":3,\"result\":[13,8,3]}\n");
    assert_eq!(q(&two, &["--op", "beer-dist", "--u", "13", "--v", "3", "--compact", "--delta", "3"]), "{\"op\":\"beer_dist\",\"u\":13,\"v\":3,\"result\":2}\n");
    assert_eq!(q(&one, &["--op", "dist", "--u", "13", "--v", "3"]), "{\"op\":\"dist\",\"u\":13,\"v\":3,\"result\":2}\n");
    assert_eq!(q(&one, &["--op", "dist", "--u", "4", "--v", "4"]), "{\"op\":\"dist\",\"u\":4,\"v\":4,\"result\":0}\n");
}

#[test]
fn usage_errors_exit_2() {
    let mut no_beer = tempfile::NamedTempFile::new().unwrap();
    write!(no_beer, "kind: proper\nendpoints: {G15}\n").unwrap();
    let path = no_beer.path().to_str().unwrap();
    for args in [
        vec!["query", "--graph", path, "--op", "beer-dist", "--u", "1", "--v", "2"],
        vec!["query", "--graph", path, "--op", "dist", "--u", "1", "--v", "16"],
        vec!["query", "--graph", "/nonexistent/graph", "--op", "dist", "--u", "1", "--v", "2"],
        vec!["generate", "--kind", "proper", "--n", "0"],
        vec!["generate", "--kind", "tree", "--n", "3"],
        vec!["count", "--series", "sxy", "--max-n", "11"],
    ] {
        assert_eq!(bin(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = bin(&["verify", "--kind", "proper", "--n", "50", "--trials", "1000", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    let b = bin(&["verify", "--kind", "proper", "--n", "50", "--trials", "1000", "--seed", "42"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(bin(&["verify", "--kind", "interval", "--n", "40", "--trials", "1000", "--seed", "1"]).status.code(), Some(0));
    let (ok, text) = in_process(&["verify", "--kind", "interval", "--n", "7", "--trials", "0"]);
    assert!(ok);
    assert!(text.contains("\"status\":\"pass\""));
}

#[test]
fn trials_are_independent_of_order() {
    for seed in [5, 17, 99] {
        assert!(run_trial(KindArg::Proper, 30, seed, &[2, 4]).is_none());
        assert!(run_trial(KindArg::Interval, 30, seed, &[]).is_none());
    }
}

#[test]
fn count_reports() {
    let cbar = stdout(&["count", "--series", "cbar", "--max-n", "10"]);
    assert!(cbar.lines().any(|l| l.starts_with("2,7,7,7,")));
    let h = stdout(&["count", "--series", "h", "--max-n", "5"]);
    assert!(h.lines().any(|l| l.starts_with("3,24,24,24,24,")));
    let cat = stdout(&["count", "--series", "catalan-identity", "--max-n", "3"]);
    assert_eq!(cat.lines().last(), Some("3,14,14,pass"));
    let sxy = stdout(&["count", "--series", "sxy", "--max-n", "6"]);
    assert!(sxy.lines().skip(1).all(|l| l.ends_with(",pass")));
    let bounds = stdout(&["count", "--series", "bounds", "--max-n", "8"]);
    assert_eq!(bounds.lines().count(), 9);
}

#[test]
fn bench_reports() {
    let text = stdout(&["bench", "--n", "2000", "--queries", "500", "--seed", "3"]);
    let records: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(records.iter().any(|r| r["record"] == "latency"));
    let sweep = records.iter().find(|r| r["record"] == "sweep").unwrap();
    assert_eq!(sweep["monotone"], true);
    assert_eq!(sweep["within_bound"], true);
    assert!(records.iter().filter(|r| r["record"] == "compact").all(|r| r["bits_per_vertex"].as_f64().unwrap() > 0.0));

    let build_only = stdout(&["bench", "--n", "100", "--queries", "0"]);
    assert!(!build_only.contains("latency"));
}
