use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abelcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn coeff() {
    let out = run(&["coeff", "--kind", "fls", "--genus", "5", "--nodes", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1169520\n");

    let out = run(&["coeff", "--kind", "n", "--genus", "1", "--nodes", "0"]);
    assert_eq!(stdout(&out), "1\n");

    let out = run(&[
        "coeff", "--kind", "n", "--genus", "5", "--nodes", "7", "--source", "oracle",
    ]);
    assert_eq!(stdout(&out), "2126400\n");
}

#[test]
fn coeff_domain_error() {
    let out = run(&["coeff", "--kind", "fls", "--genus", "1", "--nodes", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("fls is undefined for genus 1"));

    let out = run(&["coeff", "--kind", "n", "--genus", "0", "--nodes", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["coeff", "--kind", "n99", "--genus", "2", "--nodes", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["table", "--kind", "n", "--gmin", "3", "--gmax", "2", "--nmin", "0", "--nmax", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "table", "--kind", "n", "--gmin", "2", "--gmax", "2", "--nmin", "0", "--nmax", "1",
            "--format", "xml"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["series", "--kind", "n", "--genus", "2", "--prec", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--gmax", "0"]).status.code(), Some(2));
}

#[test]
fn series_pairs() {
    let cases = [
        (
            ["series", "--kind", "n34", "--genus", "2", "--prec", "5"],
            "0:0 1:1 2:6 3:12 4:28\n",
        ),
        (
            ["series", "--kind", "n", "--genus", "1", "--prec", "3"],
            "0:1 1:0 2:0\n",
        ),
        (
            ["series", "--kind", "fls", "--genus", "2", "--prec", "5"],
            "0:0 1:1 2:12 3:36 4:112\n",
        ),
    ];
    for (args, expected) in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), expected);
    }
}

#[test]
fn series_formats() {
    let base = [
        "series", "--kind", "n34", "--genus", "2", "--prec", "3", "--format",
    ];
    let csv = run(&[&base[..], &["csv"]].concat());
    assert_eq!(stdout(&csv), "exponent,coefficient\n0,0\n1,1\n2,6\n");
    let json = run(&[&base[..], &["json"]].concat());
    assert_eq!(
        stdout(&json),
        "{\"kind\":\"n34\",\"genus\":2,\"prec\":3,\"coefficients\":[\"0\",\"1\",\"6\"]}\n"
    );
}

#[test]
fn zero_table() {
    let out = run(&[
        "table", "--kind", "zero13", "--gmin", "1", "--gmax", "3", "--nmin", "0", "--nmax", "2",
        "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "g\\n,0,1,2\n1,0,0,0\n2,0,0,0\n3,0,0,0\n");
}

#[test]
fn table_json_parses_back() {
    for source in ["closed", "oracle"] {
        let out = run(&[
            "table", "--kind", "n", "--gmin", "2", "--gmax", "5", "--nmin", "0", "--nmax", "7",
            "--format", "json", "--source", source,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let table = abelcount::CountTable::from_json(stdout(&out).trim()).unwrap();
        assert_eq!(table.source().name(), source);
        assert_eq!(
            table.get(5, 7).unwrap(),
            &num_bigint::BigInt::from(2_126_400)
        );
        assert_eq!(table.to_json() + "\n", stdout(&out));
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table", "--kind", "fls", "--gmin", "2", "--gmax", "6", "--nmin", "0", "--nmax", "9",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    assert_eq!(run(&["verify"]).stdout, run(&["verify"]).stdout);
}

#[test]
fn verify_degenerate_bounds() {
    let out = run(&["verify", "--gmax", "1", "--nmax", "0", "--sigma-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn verify_names_corrupted_cell() {
    let out = run(&["verify", "--golden-cell", "n:4:3=2929"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("kind=n g=4 n=3 expected=2929 got=2928"),
        "{stderr}"
    );
    assert!(stdout(&out).contains("FAIL golden-n"));

    assert_eq!(
        run(&["verify", "--golden-cell", "n:9:3=1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--golden-cell", "garbage"]).status.code(),
        Some(2)
    );
}
