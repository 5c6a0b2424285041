use std::path::PathBuf;
use std::process::Command;

use tilinggate::cli::{run_with, EXIT_INVALID, EXIT_LIMIT, EXIT_OK, THREADS_ENV};
use tilinggate::golden::{normalize, GoldenProgram};
use tilinggate::output::{OutputRecord, RecordKind, Value};

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tilinggate").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Vec<OutputRecord> {
    let mut full = vec!["--format", "json-lines"];
    full.extend_from_slice(args);
    let (code, out, err) = cli(&full);
    assert!(code == EXIT_OK || code == EXIT_LIMIT, "{args:?}: {err}");
    out.lines().map(|l| OutputRecord::from_json(l).unwrap()).collect()
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("tilinggate-{}-{name}", std::process::id()))
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["triples", "--max-a", "11"], EXIT_OK),
        (&["triples", "--max-a", "x"], EXIT_INVALID),
        (&["triples", "--max-a", "10", "--method", "sideways"], EXIT_INVALID),
        (&["arith", "sqfree", "80"], EXIT_OK),
        (&["arith", "sqdiv", "0"], EXIT_INVALID),
        (&["compose", "--length", "30", "--tile", "3,5,7"], EXIT_OK),
        (&["compose", "--length", "30", "--tile", "3,5,8"], EXIT_INVALID),
        (&["compose", "--length", "30", "--tile", "3,5,7", "--mode", "other"], EXIT_INVALID),
        (&["analyze", "--tile", "3,5,7", "--nmax", "300"], EXIT_OK),
        (&["analyze", "--all-tiles", "--nmax", "100", "--shape", "equilateral"], EXIT_OK),
        (&["analyze", "--nmax", "100"], EXIT_INVALID),
        (&["analyze", "--tile", "3,5,7", "--nmax", "100", "--shape", "square"], EXIT_INVALID),
        (&["report", "--nmax", "100"], EXIT_OK),
        (&["golden", "--program", "isosceles-log"], EXIT_OK),
        (&["golden", "--program", "nothing"], EXIT_INVALID),
        (&["search", "--shape", "similar", "--tile", "3,5,7", "--k", "2"], EXIT_OK),
        (&["search", "--shape", "similar", "--tile", "3,5,7", "--k", "0"], EXIT_INVALID),
        (&["search", "--shape", "equilateral", "--tile", "3,5,7", "--k", "2", "--node-limit", "200"], EXIT_LIMIT),
        (&["search", "--shape", "equilateral", "--tile", "3,5,7", "--k", "2", "--depth-limit", "1"], EXIT_LIMIT),
        (&["search", "--shape", "isosceles-alpha", "--tile", "5,16,19", "--k", "1"], EXIT_INVALID),
        (&["search", "--shape", "similar", "--tile", "3,5,7", "--k", "2", "--threads", "0"], EXIT_INVALID),
        (&["search", "--shape", "similar", "--tile", "3,5,7", "--k", "2", "--time-limit", "-1"], EXIT_INVALID),
        (&["render", "--candidate", "bogus", "--svg", "/dev/null"], EXIT_INVALID),
        (&["frobnicate"], EXIT_INVALID),
        (&["--format", "xml", "triples", "--max-a", "3"], EXIT_INVALID),
        (&["--help"], EXIT_OK),
        (&["--version"], EXIT_OK),
    ];
    for (args, want) in cases {
        let (code, _, err) = cli(args);
        assert_eq!(code, *want, "{args:?}: {err}");
        if *want == EXIT_INVALID {
            assert!(!err.is_empty(), "{args:?} gives no diagnostic");
        }
    }
}

#[test]
fn binary_and_thread_override() {
    let bin = env!("CARGO_BIN_EXE_tilinggate");
    let o = Command::new(bin).args(["arith", "sqdiv", "80"]).output().unwrap();
    assert_eq!((o.status.code(), String::from_utf8_lossy(&o.stdout).trim()), (Some(0), "20"));

    let search = ["search", "--shape", "similar", "--tile", "7,8,13", "--k", "3"];
    let o = Command::new(bin).args(search).env(THREADS_ENV, "many").output().unwrap();
    assert_eq!(o.status.code(), Some(EXIT_INVALID));
    assert!(String::from_utf8_lossy(&o.stderr).contains(THREADS_ENV));
    let o = Command::new(bin).args(search).env(THREADS_ENV, "4").output().unwrap();
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&o.stdout).contains("found"));
}

#[test]
fn arith_prints_the_bare_value() {
    assert_eq!(cli(&["arith", "sqdiv", "80"]).1, "20\n");
    assert_eq!(cli(&["arith", "sqfree", "80"]).1, "5\n");
}

#[test]
fn json_lines_roundtrip() {
    let runs: &[&[&str]] = &[
        &["triples", "--max-a", "20", "--method", "both"],
        &["analyze", "--tile", "5,3,7", "--nmax", "500"],
        &["report", "--nmax", "200"],
        &["compose", "--length", "60", "--tile", "3,5,7"],
        &["search", "--shape", "similar", "--tile", "3,5,7", "--k", "2"],
    ];
    for args in runs {
        let mut full = vec!["--format", "json-lines"];
        full.extend_from_slice(args);
        let (code, out, _) = cli(&full);
        assert_eq!(code, EXIT_OK);
        assert!(!out.is_empty());
        for line in out.lines() {
            let rec = OutputRecord::from_json(line).unwrap();
            assert_eq!(rec.to_json(), line);
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v.as_object().unwrap().len(), 2);
        }
    }
}

#[test]
fn triples_output() {
    let recs = json(&["triples", "--max-a", "11"]);
    let got: Vec<_> = recs
        .iter()
        .map(|r| r.keys().iter().map(|k| r.get(k).unwrap().to_string()).collect::<Vec<_>>().join(","))
        .collect();
    assert_eq!(got, ["3,5,7", "5,16,19", "7,8,13", "7,33,37", "9,56,61", "11,24,31", "11,85,91"]);
    assert!(recs.iter().all(|r| r.kind == RecordKind::Triple));
    // The two enumerations agree, so no discrepancy is added.
    assert_eq!(json(&["triples", "--max-a", "60", "--method", "both"]).len(), json(&["triples", "--max-a", "60"]).len());
}

#[test]
fn golden_programs_match() {
    for p in GoldenProgram::ALL {
        let (code, out, _) = cli(&["golden", "--program", p.name()]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(normalize(&out), normalize(p.expected()), "{}", p.name());
    }
    let recs = json(&["golden", "--program", "equilateralboundtable"]);
    assert!(recs.iter().all(|r| r.get("program") == Some(&Value::Str("equilateralboundtable".into()))));
}

#[test]
fn csv_column_order() {
    let (code, out, _) = cli(&["--format", "csv", "analyze", "--tile", "3,5,7", "--nmax", "200", "--shape", "equilateral"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("kind,shape,a,b,c,k,n,x,y,z,verdict,reason"));
    assert!(lines.any(|l| l == "candidate,equilateral,3,5,7,3,135,45,45,45,accept,"));

    let (_, out, _) = cli(&["--format", "csv", "compose", "--length", "30", "--tile", "3,5,7"]);
    assert_eq!(out, "kind,length,p,d,e\ntable_row,30,3,0,3\n");

    let (_, out, _) = cli(&["--format", "csv", "triples", "--max-a", "3"]);
    assert_eq!(out, "kind,a,b,c\ntriple,3,5,7\n");
}

#[test]
fn table_format_has_headers() {
    let (_, out, _) = cli(&["triples", "--max-a", "5"]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "# triple");
    assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["a", "b", "c"]);
    assert_eq!(lines.len(), 4);
}

#[test]
fn report_names_the_overall_minimum() {
    let recs = json(&["report", "--nmax", "200"]);
    let overall = recs.iter().find(|r| r.get("role") == Some(&Value::Str("overall".into()))).unwrap();
    assert_eq!(overall.get("n"), Some(&Value::Int(96)));
    assert_eq!(overall.get("shape"), Some(&Value::Str("alpha-pi3".into())));
    assert!(recs.iter().any(|r| r.kind == RecordKind::Discrepancy));
}

#[test]
fn search_summary_fields() {
    let recs = json(&["search", "--shape", "similar", "--tile", "7,8,13", "--k", "2"]);
    let s = recs.iter().find(|r| r.kind == RecordKind::SearchSummary).unwrap();
    assert_eq!(
        s.keys(),
        ["shape", "a", "b", "c", "k", "n", "status", "tilings", "nodes", "max_depth", "elapsed_ms"]
    );
    assert_eq!(s.get("status"), Some(&Value::Str("found".into())));
    let tiles = recs.iter().filter(|r| r.kind == RecordKind::TableRow).count();
    assert_eq!(tiles, 4);
    assert!(!recs.iter().any(|r| r.kind == RecordKind::Discrepancy));

    let recs = json(&["search", "--shape", "equilateral", "--tile", "3,5,7", "--k", "2", "--node-limit", "100"]);
    let s = recs.iter().find(|r| r.kind == RecordKind::SearchSummary).unwrap();
    assert_eq!(s.get("status"), Some(&Value::Str("limit-hit".into())));
}

fn polygons(svg: &str) -> usize {
    svg.matches("<polygon").count()
}

#[test]
fn svg_output() {
    let path = tmp("render.svg");
    let p = path.to_str().unwrap();
    let (code, _, err) = cli(&["render", "--candidate", "alpha-2alpha:5,3,7:1", "--svg", p]);
    assert_eq!(code, EXIT_OK, "{err}");
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(polygons(&svg), 3);
    assert_eq!(svg.matches("class=\"tile\"").count(), 2);

    let (code, _, err) = cli(&["search", "--shape", "similar", "--tile", "3,5,7", "--k", "2", "--svg", p]);
    assert_eq!(code, EXIT_OK, "{err}");
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(polygons(&svg), 5);
    std::fs::remove_file(&path).unwrap();
}
