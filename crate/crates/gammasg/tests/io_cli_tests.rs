//! Table-file parsing/serialization, corpus directories, and the CLI binary.

mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use common::*;
use gammasg::enumerate::{enumerate_exhaustive, CorpusInstance};
use gammasg::io::{parse, read_corpus, serialize, write_corpus, HEADER};
use gammasg::Error;

const NIL3_TEXT: &str = "gamma-semigroup v1\nT 3\nG 1\nzero 0\n0 0 0\n0 2 0\n0 0 0\n";

fn syntax_error(text: &str) -> (usize, String) {
    match parse(text) {
        Err(Error::SyntaxError { line, reason }) => (line, reason),
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn serialization_is_canonical() {
    assert_eq!(serialize(&nil3()), NIL3_TEXT);
    assert_eq!(
        serialize(&four_with_group_kernel()),
        "gamma-semigroup v1\nT 4\nG 1\nnames a b c d\n0 0 3 3\n0 0 3 3\n3 3 0 0\n3 3 0 0\n"
    );
    assert_eq!(HEADER, "gamma-semigroup v1");
}

#[test]
fn parse_serialize_round_trips_on_every_fixture() {
    for (label, s) in all_fixtures() {
        let text = serialize(&s);
        let back = parse(&text).unwrap_or_else(|e| panic!("{label}: {e}"));
        assert_eq!(back, s, "{label}: semantic identity");
        assert_eq!(serialize(&back), text, "{label}: textual fixpoint");
    }
}

#[test]
fn parser_accepts_comments_blanks_and_keyword_order() {
    let text = "\
# leading comment
gamma-semigroup v1

T 3
G 1
# labels first, zero second
names x y z
zero 0
0 0 0
0 2 0

0 0 0
";
    let s = parse(text).unwrap();
    assert_eq!(s, nil3());
    assert_eq!(s.element_label(1), "y");

    // zero before names works too.
    let flipped = "gamma-semigroup v1\nT 3\nG 1\nzero 0\nnames x y z\n0 0 0\n0 2 0\n0 0 0\n";
    assert_eq!(parse(flipped).unwrap(), nil3());
}

#[test]
fn parse_errors_carry_line_numbers() {
    let (line, reason) = syntax_error("");
    assert_eq!(line, 1);
    assert!(reason.contains("unexpected end of input"));

    let (line, reason) = syntax_error("gamma semigroup v1\nT 2\nG 1\n0 0\n0 0\n");
    assert_eq!(line, 1);
    assert!(reason.contains("expected header"));

    let (line, reason) = syntax_error("gamma-semigroup v1\nT x\nG 1\n");
    assert_eq!(line, 2);
    assert_eq!(reason, "`x` is not a base-10 count");

    let (line, reason) = syntax_error("gamma-semigroup v1\nT 2\n");
    assert_eq!(line, 3);
    assert!(reason.contains("expected `G <m>`"));

    let (line, reason) =
        syntax_error("gamma-semigroup v1\nT 3\nG 1\nzero 0\nzero 0\n0 0 0\n0 2 0\n0 0 0\n");
    assert_eq!(line, 5);
    assert_eq!(reason, "duplicate `zero` line");

    let (line, reason) =
        syntax_error("gamma-semigroup v1\nT 3\nG 1\nnames a b\n0 0 0\n0 2 0\n0 0 0\n");
    assert_eq!(line, 4);
    assert_eq!(reason, "expected 3 names, found 2");

    let (line, reason) = syntax_error("gamma-semigroup v1\nT 3\nG 1\nzero 0\n0 0\n0 2 0\n0 0 0\n");
    assert_eq!(line, 5);
    assert_eq!(reason, "expected 3 entries, found 2");

    let (line, reason) =
        syntax_error("gamma-semigroup v1\nT 3\nG 1\nzero 0\n0 q 0\n0 2 0\n0 0 0\n");
    assert_eq!(line, 5);
    assert_eq!(reason, "`q` is not a base-10 entry");

    let (line, reason) = syntax_error(&format!("{NIL3_TEXT}0 0 0\n"));
    assert_eq!(line, 8);
    assert_eq!(reason, "unexpected trailing content `0 0 0`");
}

#[test]
fn out_of_range_entries_carry_both_position_and_line() {
    let text = "gamma-semigroup v1\nT 3\nG 1\nzero 0\n0 7 0\n0 2 0\n0 0 0\n";
    assert!(matches!(
        parse(text),
        Err(Error::IndexOutOfRange { position: 1, line: Some(5) })
    ));
}

#[test]
fn construction_errors_pass_through_parsing() {
    let nonassoc = "gamma-semigroup v1\nT 2\nG 1\n1 0\n0 0\n";
    assert!(matches!(
        parse(nonassoc),
        Err(Error::NotAssociative { a: 0, alpha: 0, b: 0, beta: 0, c: 1 })
    ));

    let bad_zero = "gamma-semigroup v1\nT 2\nG 1\nzero 1\n0 0\n0 0\n";
    assert!(matches!(
        parse(bad_zero),
        Err(Error::BadZero { element: 0, gamma: 0 })
    ));
}

#[test]
fn corpus_directories_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let corpus: Vec<CorpusInstance> = enumerate_exhaustive(2, 1)
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, instance)| CorpusInstance {
            id: format!("exh-2x1-{i:04}"),
            class: "exh-2x1".to_string(),
            provenance: "exhaustive n=2 m=1".to_string(),
            instance,
        })
        .collect();
    write_corpus(dir.path(), &corpus).unwrap();

    let manifest = fs::read_to_string(dir.path().join("manifest.tsv")).unwrap();
    assert!(manifest.starts_with("id\tclass\tprovenance\tfile\n"));
    assert_eq!(manifest.lines().count(), 9);
    assert!(dir.path().join("exh-2x1-0000.gsg").exists());
    assert!(dir.path().join("exh-2x1-0007.gsg").exists());

    let back = read_corpus(dir.path()).unwrap();
    assert_eq!(back, corpus);
}

#[test]
fn corpus_reader_rejects_missing_or_malformed_input() {
    assert!(matches!(
        read_corpus(Path::new("/nonexistent/gammasg-corpus")),
        Err(Error::Io(_))
    ));

    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("manifest.tsv"),
        "id\tclass\tprovenance\tfile\nbad row with no tabs\n",
    )
    .unwrap();
    match read_corpus(dir.path()) {
        Err(Error::SyntaxError { line: 2, reason }) => {
            assert_eq!(reason, "manifest row has 1 fields, expected 4");
        }
        other => panic!("expected a manifest syntax error, got {other:?}"),
    }
}

// ---------------------------------------------------------------------------
// CLI binary.
// ---------------------------------------------------------------------------

fn gammasg() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gammasg"))
}

fn write_instance(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

struct CliResult {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_cli(args: &[&str]) -> CliResult {
    let output = gammasg().args(args).output().expect("binary runs");
    CliResult {
        code: output.status.code().expect("no signal"),
        stdout: String::from_utf8_lossy(&output.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&output.stderr).into_owned(),
    }
}

#[test]
fn cli_validate_reports_shape_or_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_instance(dir.path(), "zmod6.gsg", &serialize(&zmod6()));
    let ok = run_cli(&["validate", good.to_str().unwrap()]);
    assert_eq!(ok.code, 0, "stderr: {}", ok.stderr);
    assert_eq!(ok.stdout, "valid gamma-semigroup: n=6 m=1 zero=0\n");

    let bad = write_instance(
        dir.path(),
        "bad.gsg",
        "gamma-semigroup v1\nT 5\nG 1\n0 0 0 0 0\n0 0 3 0 1\n0 0 3 0 2\n0 0 3 0 3\n0 1 2 3 4\n",
    );
    let fail = run_cli(&["validate", bad.to_str().unwrap()]);
    assert_eq!(fail.code, 1);
    assert_eq!(
        fail.stderr,
        "invalid: table is not associative: witness (a=1, alpha=0, b=2, beta=0, c=2)\n"
    );
}

#[test]
fn cli_analyze_human_sections() {
    let dir = tempfile::tempdir().unwrap();
    let four = write_instance(dir.path(), "four.gsg", &serialize(&four_with_group_kernel()));
    let out = run_cli(&[
        "analyze",
        four.to_str().unwrap(),
        "--ideals",
        "two-sided",
        "--classify",
    ]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("instance: n=4 m=1\n"));
    assert!(out.stdout.contains("commutative: true\n"));
    assert!(out.stdout.contains("two-sided ideals (4):\n"));
    assert!(out.stdout.contains("  {a,d}\n"));
    assert!(out.stdout.contains("least two-sided ideal: {a,d} (ideal: true)\n"));
    assert!(out.stdout.contains("simple: false\n"));
    assert!(out.stdout.contains("0-simple: not-applicable\n"));
}

#[test]
fn cli_analyze_tsv_rows() {
    let dir = tempfile::tempdir().unwrap();
    let z = write_instance(dir.path(), "zmod6.gsg", &serialize(&zmod6()));
    let out = run_cli(&[
        "analyze",
        z.to_str().unwrap(),
        "--ideals",
        "two-sided",
        "--primes",
        "--format",
        "tsv",
    ]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("summary\tn\t6\n"));
    assert!(out.stdout.contains("summary\tzero\t0\n"));
    assert!(out.stdout.contains("ideal\ttwo-sided\t0\t{0}\n"));
    assert!(out.stdout.contains("least\ttwo-sided\t{0}\ttrue\n"));
    assert!(out.stdout.contains("prime\t0\t{0,3}\n"));
    assert!(out.stdout.contains("prime\t3\t{0,1,2,3,4,5}\n"));
}

#[test]
fn cli_enumerate_then_conform() {
    let dir = tempfile::tempdir().unwrap();
    let corpus_dir = dir.path().join("corpus21");
    let wrote = run_cli(&[
        "enumerate",
        "--n",
        "2",
        "--m",
        "1",
        "--exhaustive",
        "--out",
        corpus_dir.to_str().unwrap(),
    ]);
    assert_eq!(wrote.code, 0, "stderr: {}", wrote.stderr);
    assert!(wrote.stdout.starts_with("wrote 8 instances to "));
    assert!(corpus_dir.join("manifest.tsv").exists());
    assert!(corpus_dir.join("exh-2x1-0000.gsg").exists());

    let conform = run_cli(&["conform", "--corpus", corpus_dir.to_str().unwrap()]);
    assert_eq!(conform.code, 0, "stderr: {}", conform.stderr);
    assert!(conform
        .stdout
        .starts_with("conformance over 8 instances: 0 expected-pass failure(s)\n"));
    // Without --report the TSV follows the summary on stdout.
    assert!(conform.stdout.contains("id\tclass\tapplicable\tpassed\tfailed\tfirst_witness\n"));

    let report_path = dir.path().join("report.tsv");
    let filtered = run_cli(&[
        "conform",
        "--corpus",
        corpus_dir.to_str().unwrap(),
        "--checks",
        "T2.1,L3.1",
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(filtered.code, 0, "stderr: {}", filtered.stderr);
    assert!(!filtered.stdout.contains("id\tclass"), "TSV went to the file");
    let report = fs::read_to_string(&report_path).unwrap();
    let lines: Vec<&str> = report.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "id\tclass\tapplicable\tpassed\tfailed\tfirst_witness");
    assert!(lines[1].starts_with("T2.1\texh-2x1\t8\t8\t0"));
    assert!(lines[2].starts_with("L3.1\texh-2x1\t8\t8\t0"));
}

#[test]
fn cli_conform_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let corpus_dir = dir.path().join("parity");
    write_corpus(
        &corpus_dir,
        &[CorpusInstance {
            id: "fix-parity".to_string(),
            class: "fix-parity".to_string(),
            provenance: "test fixture".to_string(),
            instance: zero_adjoined_parity(),
        }],
    )
    .unwrap();

    let blocked = run_cli(&[
        "conform",
        "--corpus",
        corpus_dir.to_str().unwrap(),
        "--checks",
        "T5.2",
    ]);
    assert_eq!(blocked.code, 1);
    assert_eq!(blocked.stderr, "1 expected-pass failure(s)\n");
    assert!(blocked.stdout.contains("FAIL 1/1 applicable"));

    let unknown = run_cli(&[
        "conform",
        "--corpus",
        corpus_dir.to_str().unwrap(),
        "--checks",
        "QQ",
    ]);
    assert_eq!(unknown.code, 1);
    assert_eq!(unknown.stderr, "error: unknown check id: QQ\n");
}

#[test]
fn cli_usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("none");
    let nothing = run_cli(&["enumerate", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(nothing.code, 2);
    assert_eq!(
        nothing.stderr,
        "usage error: choose at least one of --exhaustive, --random, --structured\n"
    );

    let shapeless = run_cli(&["enumerate", "--exhaustive", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(shapeless.code, 2);
    assert_eq!(
        shapeless.stderr,
        "usage error: --exhaustive/--random require --n and --m\n"
    );
}
