use std::io::Write;
use std::process::{Command, Output};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or("").to_string()
}

fn symmetry_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

const TWISTED_FLIP: &str = "hecke-symmetry v1\nd = 2\nq = 1\n1 0 0 0\n0 0 2 0\n0 1/2 0 0\n0 0 0 1\n";
const DIAGONAL: &str = "hecke-symmetry v1\nd = 2\nq = 2\n2 0 0 0\n0 -1 0 0\n0 0 -1 0\n0 0 0 2\n";

#[test]
fn predict_exterior_from_roots() {
    let o = hecke(&["predict", "--alphas", "1,1", "--what", "ext", "--degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "1, 2, 1, 0, 0");
    assert!(stdout(&o).contains("birank (2, 0)"));
}

#[test]
fn predict_echoes_rational_series() {
    let o = hecke(&["predict", "--series", "1,1;1,-1", "--what", "sym"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2");
    assert!(stdout(&o).contains("birank (1, 1)"));
}

#[test]
fn predict_hom_series_of_lines() {
    let o = hecke(&["predict", "--series", "1;1,-1", "--series2", "1;1,-1", "--what", "A", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "1, 1, 1, 1, 1, 1");
    let o = hecke(&["predict", "--alphas", "1,1", "--alphas2", "1,1", "--what", "E", "--degree", "5"]);
    assert_eq!(first_line(&o), "1, 4, 6, 4, 1, 0");
}

#[test]
fn predict_flags_uncertified_roots() {
    let o = hecke(&["predict", "--alphas", "-1", "--what", "sym", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(first_line(&o), "1, -1, 1, -1");
}

#[test]
fn predict_usage_errors() {
    assert_eq!(hecke(&["predict", "--what", "sym"]).status.code(), Some(2));
    assert_eq!(hecke(&["predict", "--alphas", "1", "--what", "A"]).status.code(), Some(2));
    let o = hecke(&["predict", "--series", "1,1;1,q", "--what", "sym"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--series: line 1, column 7"), "{}", stderr(&o));
}

#[test]
fn compute_examples() {
    let o = hecke(&["compute", "--symmetry", "std:r=2,q=2", "--what", "sym", "--degree", "5"]);
    assert_eq!((o.status.code(), first_line(&o)), (Some(0), "1, 2, 3, 4, 5, 6".to_string()));
    let o = hecke(&["compute", "--symmetry", "super:1,1,q=1", "--what", "ext", "--degree", "4"]);
    assert_eq!(first_line(&o), "1, 2, 2, 2, 2");
    let o = hecke(&["compute", "--symmetry", "std:r=1,q=3", "--what", "quotient:[1];[1]"]);
    assert_eq!(first_line(&o), "1");
    let o = hecke(&["compute", "--symmetry", "std:r=2,q=2", "--what", "A:std:r=2,q=2", "--degree", "3"]);
    assert_eq!(first_line(&o), "1, 4, 10, 20");
    let o = hecke(&["compute", "--symmetry", "std:r=2,q=2", "--what", "E:std:r=2,q=2", "--degree", "4"]);
    assert_eq!(first_line(&o), "1, 4, 6, 4, 1");
}

#[test]
fn compute_errors_and_cap() {
    let o = hecke(&["compute", "--symmetry", "std:r=3,q=2", "--what", "sym", "--degree", "9"]);
    assert_eq!(o.status.code(), Some(3));
    let o = hecke(&["compute", "--symmetry", "std:r=2,q=2", "--what", "quotient:[1];[x]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 15"), "{}", stderr(&o));
    assert_eq!(hecke(&["compute", "--symmetry", "bogus", "--what", "sym"]).status.code(), Some(2));
    assert_eq!(hecke(&["compute", "--symmetry", "std:r=2,q=2", "--what", "nope"]).status.code(), Some(2));
    let o = hecke(&["compute", "--symmetry", "std:r=2,q=2", "--what", "A:std:r=2,q=3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn file_symmetries() {
    let tw = symmetry_file(TWISTED_FLIP);
    let spec = format!("file:{}", tw.path().display());
    let o = hecke(&["compute", "--symmetry", &spec, "--what", "sym", "--degree", "3"]);
    assert_eq!(first_line(&o), "1, 2, 3, 4");
    let o = hecke(&["verify", "--suite", "hilbert", "--symmetry", &spec]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("conjectural"));

    let diag = symmetry_file(DIAGONAL);
    let o = hecke(&["compute", "--symmetry", &format!("file:{}", diag.path().display()), "--what", "sym"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("(1, 1, 2)"), "{}", stderr(&o));

    let bad = symmetry_file("hecke-symmetry v1\nd = 1\nq = 2\n2/0\n");
    let o = hecke(&["compute", "--symmetry", &format!("file:{}", bad.path().display()), "--what", "sym"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4, column 3"), "{}", stderr(&o));

    let o = hecke(&["compute", "--symmetry", "file:/nonexistent/symmetry.txt", "--what", "sym"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_nonsemisimple() {
    let o = hecke(&["verify", "--suite", "all", "--symmetry", "std:r=2,q=-1", "--nmax", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    for suite in ["hilbert", "character", "homspace", "positivity"] {
        assert!(stdout(&o).contains(&format!("suite {suite} on")), "{suite}");
    }
}

#[test]
fn verify_homspace_machine_output() {
    let args = [
        "verify", "--suite", "homspace", "--symmetry", "std:r=2,q=2", "--symmetry2", "std:r=1,q=2", "--nmax", "4",
        "--machine",
    ];
    let o = hecke(&args);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "# suite\thomspace\tstd:r=1,q=2 / std:r=2,q=2");
    for line in lines {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 4, "{line}");
        assert_eq!(fields[3], "true");
    }
    assert_eq!(stdout(&hecke(&args)), text, "repeated runs differ");
}

#[test]
fn verify_reports_failed_certificate() {
    // two coefficients are too few to detect the series
    let o = hecke(&["verify", "--suite", "positivity", "--symmetry", "std:r=2,q=2", "--nmax", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn series_examples() {
    let o = hecke(&["series", "detect-rational", "--coeffs", "1,2,3,4,5,6,7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "num=1; den=1,-2,1");
    assert!(stdout(&o).contains("truncation order 6"));
    let o = hecke(&["series", "diamond", "--f", "1,1", "--g", "1,1", "--degree", "5"]);
    assert_eq!((o.status.code(), first_line(&o)), (Some(0), "1, 1, 1, 1, 1, 1".to_string()));
    let o = hecke(&["series", "total-positivity", "--coeffs", "1,1,1", "--max-weight", "3"]);
    assert_eq!((o.status.code(), first_line(&o)), (Some(1), "violation at [1,1,1]: -1".to_string()));
    let o = hecke(&["series", "total-positivity", "--coeffs", "1,2,1", "--max-weight", "6"]);
    assert_eq!((o.status.code(), first_line(&o)), (Some(0), "totally positive through weight 6".to_string()));
}

#[test]
fn series_detection_failures() {
    let o = hecke(&["series", "detect-rational", "--coeffs", "1,1,2,5,14,42,132"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(first_line(&o).starts_with("inconclusive"));
    let o = hecke(&["series", "detect-rational", "--coeffs", "1,2,x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column 5"));
    let o = hecke(&["series", "diamond", "--f", "2,1", "--g", "1", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_documents_machine_format() {
    let o = hecke(&["verify", "--help"]);
    assert!(stdout(&o).contains("TAB-separated"));
}
