use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use fracvar::fracops::{caputo_left_l1_all, Grid};
use fracvar::{Method, Order, SeriesControl, SolutionSpec};

fn fracvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracvar"))
        .args(args)
        .output()
        .expect("spawn fracvar")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    (header, rows)
}

fn numeric(rows: &[Vec<String>], col: usize) -> Vec<f64> {
    rows.iter().map(|r| r[col].parse().unwrap()).collect()
}

fn write_samples(path: &Path, xs: &[f64], ys: &[f64]) {
    let mut s = String::from("x,y\n");
    for (x, y) in xs.iter().zip(ys) {
        s.push_str(&format!("{x:.17e},{y:.17e}\n"));
    }
    fs::write(path, s).unwrap();
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (
            &["solve", "--method", "cc", "--alpha", "0.5", "--m", "10"],
            0,
        ),
        (&["solve", "--method", "crl", "--alpha", "0.5"], 2),
        (&["solve", "--method", "cc", "--alpha", "0"], 2),
        (&["solve", "--method", "cc", "--alpha", "1.2"], 2),
        (&["solve", "--method", "classical", "--alpha", "0.8"], 2),
        (
            &["solve", "--method", "cc", "--alpha", "0.7", "--m", "0"],
            2,
        ),
        (
            &["solve", "--method", "cc", "--alpha", "0.7", "--tol", "-1"],
            2,
        ),
        (
            &["functional", "--method", "cc", "--alpha", "0.7", "--m", "1"],
            2,
        ),
        (&["table", "--sweep", "1"], 2),
        (&["bogus"], 2),
        (
            &[
                "deriv",
                "--input",
                "/definitely/not/here.csv",
                "--alpha",
                "0.5",
            ],
            1,
        ),
        (
            &[
                "solve",
                "--method",
                "cc",
                "--alpha",
                "0.7",
                "--out",
                "/definitely/not/here.csv",
            ],
            1,
        ),
    ];
    for (args, code) in cases {
        let out = fracvar(args);
        assert_eq!(
            out.status.code(),
            Some(*code),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        if *code != 0 {
            assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
        }
    }
}

#[test]
fn crl_low_order_message() {
    let out = fracvar(&["solve", "--method", "crl", "--alpha", "0.4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("solution does not exist for alpha <= 0.5")
    );
    assert!(out.stdout.is_empty());
}

#[test]
fn solve_cc_grid() {
    let out = fracvar(&["solve", "--method", "cc", "--alpha", "0.4", "--m", "100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains('\r'));
    assert!(text.ends_with('\n'));
    let (header, rows) = parse_csv(&text);
    assert_eq!(header, ["x", "y"]);
    assert_eq!(rows.len(), 101);
    assert_eq!(rows[0][1], "0.000000000000e+00");
    let ys = numeric(&rows, 1);
    assert!(ys[100].abs() < 1e-10);
    assert!(ys.iter().all(|y| y.is_finite()));
}

#[test]
fn solve_classical_midpoint() {
    let out = fracvar(&["solve", "--method", "classical", "--alpha", "1", "--m", "4"]);
    let (_, rows) = parse_csv(&stdout(&out));
    assert_eq!(rows[2], ["5.000000000000e-01", "1.500000000000e+00"]);
}

#[test]
fn functional_values() {
    let out = fracvar(&[
        "functional",
        "--method",
        "cc",
        "--alpha",
        "0.7",
        "--m",
        "100",
    ]);
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(header, ["method", "alpha", "m", "j"]);
    assert_eq!(rows[0][0], "cc");
    assert_eq!(rows[0][2], "100");
    let j: f64 = rows[0][3].parse().unwrap();
    assert!((j + 28.9016).abs() < 5e-5, "{j}");

    let out = fracvar(&[
        "functional",
        "--method",
        "classical",
        "--alpha",
        "1",
        "--m",
        "1000",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let j = v[0]["j"].as_f64().unwrap();
    assert!((j + 12.0).abs() <= 25.0 / 1000.0);

    let right = fracvar(&[
        "functional",
        "--method",
        "classical",
        "--alpha",
        "1",
        "--m",
        "100",
        "--rule",
        "right",
    ]);
    let (_, rows) = parse_csv(&stdout(&right));
    let j: f64 = rows[0][3].parse().unwrap();
    assert!((j + 11.9988).abs() < 5e-4, "{j}");
}

#[test]
fn table_layout() {
    let out = fracvar(&["table", "--sweep", "100,200"]);
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(
        header,
        [
            "alpha",
            "j_crl",
            "j_cc",
            "m",
            "m_crl",
            "j_crl_limit",
            "j_cc_limit"
        ]
    );
    assert_eq!(rows.len(), 7);
    let last = rows.last().unwrap();
    assert_eq!(last[0].parse::<f64>().unwrap(), 0.4);
    assert_eq!(last[1], "NOT_EXISTS");
    assert_eq!(last[4], "NOT_EXISTS");
    for row in &rows[..6] {
        assert_ne!(row[1], "NOT_EXISTS");
    }
}

#[test]
fn figures_written() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("figs");
    let out = fracvar(&["figures", "--m", "50", "--out", target.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut names: Vec<_> = fs::read_dir(&target)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(
        names,
        [
            "figure1_convergence.csv",
            "figure2_comparison.csv",
            "figure3_cc_alpha_0.4.csv"
        ]
    );
    for name in &names {
        let (header, rows) = parse_csv(&fs::read_to_string(target.join(name)).unwrap());
        assert_eq!(header[0], "x");
        assert_eq!(rows.len(), 51);
        for row in &rows {
            assert_eq!(row.len(), header.len());
            assert!(row.iter().all(|v| v.parse::<f64>().unwrap().is_finite()));
        }
    }

    let out = fracvar(&[
        "figures",
        "--m",
        "20",
        "--format",
        "json",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(target.join("figure2_comparison.json")).unwrap())
            .unwrap();
    assert_eq!(v.as_array().unwrap().len(), 21);
}

#[test]
fn deriv_of_constant_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("c.csv");
    let xs: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
    write_samples(&input, &xs, &[3.5; 21]);
    for side in ["left", "right"] {
        let out = fracvar(&[
            "deriv",
            "--input",
            input.to_str().unwrap(),
            "--alpha",
            "0.6",
            "--side",
            side,
        ]);
        assert!(out.status.success());
        let (header, rows) = parse_csv(&stdout(&out));
        assert_eq!(header, ["x", "dy"]);
        assert_eq!(rows.len(), 21);
        assert!(numeric(&rows, 1).iter().all(|&d| d == 0.0));
    }
}

#[test]
fn deriv_of_identity() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("x.csv");
    let xs: Vec<f64> = (0..=64).map(|i| i as f64 / 64.0).collect();
    write_samples(&input, &xs, &xs);
    let out = fracvar(&[
        "deriv",
        "--input",
        input.to_str().unwrap(),
        "--alpha",
        "0.5",
    ]);
    let (_, rows) = parse_csv(&stdout(&out));
    let g15 = fracvar::specfun::gamma(1.5).unwrap();
    for (x, d) in numeric(&rows, 0).into_iter().zip(numeric(&rows, 1)) {
        assert!((d - x.sqrt() / g15).abs() < 1e-10, "x={x} d={d}");
    }
}

#[test]
fn deriv_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let uneven = dir.path().join("uneven.csv");
    write_samples(&uneven, &[0.0, 0.1, 0.3, 0.4], &[0.0, 1.0, 2.0, 3.0]);
    let garbage = dir.path().join("garbage.csv");
    fs::write(&garbage, "x,y\n0,1\n0.5,abc\n1,2\n").unwrap();
    let single = dir.path().join("single.csv");
    fs::write(&single, "x,y\n0,1\n").unwrap();
    for path in [&uneven, &garbage, &single] {
        let out = fracvar(&["deriv", "--input", path.to_str().unwrap(), "--alpha", "0.5"]);
        assert_eq!(out.status.code(), Some(2), "{}", path.display());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--sweep", "100,200", "--format", "json"];
    assert_eq!(fracvar(&args).stdout, fracvar(&args).stdout);
    let args = ["solve", "--method", "crl", "--alpha", "0.8", "--m", "200"];
    assert_eq!(fracvar(&args).stdout, fracvar(&args).stdout);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("y.csv");
    let args = ["solve", "--method", "cc", "--alpha", "0.9", "--m", "30"];
    let direct = fracvar(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let out = fracvar(&with_out);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn solve_then_deriv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("y.csv");
    let m = 40;
    let out = fracvar(&[
        "solve",
        "--method",
        "cc",
        "--alpha",
        "0.7",
        "--m",
        "40",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = fracvar(&["deriv", "--input", path.to_str().unwrap(), "--alpha", "0.7"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let (_, rows) = parse_csv(&stdout(&out));
    let cli = numeric(&rows, 1);

    let ord = Order::new(0.7).unwrap();
    let spec = SolutionSpec::new(Method::Cc, ord).unwrap();
    let y = spec
        .sample(Grid::unit(m).unwrap(), SeriesControl::default())
        .unwrap();
    let direct = caputo_left_l1_all(&y, ord);
    let scale = direct.iter().fold(1.0_f64, |s, d| s.max(d.abs()));
    for (a, b) in cli.iter().zip(&direct) {
        // 13 significant digits survive the text round trip; the L1 sum amplifies the
        // rounding by roughly the weight scale h^-alpha.
        assert!((a - b).abs() <= 1e-10 * scale, "{a} vs {b}");
    }
}
