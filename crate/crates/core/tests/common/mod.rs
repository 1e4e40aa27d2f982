//! Shared fixtures, printed reference tables and brute-force oracles for the
//! integration tests. Nothing here calls into the decision or product code
//! paths it is used to check.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nsm::{parse_matrix, Labels, NsMatrix, NsValue};
use rand::Rng;

pub type Triple = [f64; 3];

pub const EPS: f64 = 1e-9;

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> NsMatrix {
    let path = manifest_dir().join("tests/fixtures").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_matrix(&text).unwrap()
}

pub fn v([t, i, f]: Triple) -> NsValue {
    NsValue::new(t, i, f).unwrap()
}

pub fn triple(x: &NsValue) -> Triple {
    x.components()
}

pub fn max_dev(a: Triple, b: Triple) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

// --- tables as printed in the worked examples, rows = objects -----------

/// First worked example: union under min/max, rows u1..u4, columns x1..x3.
pub const PRINTED_UNION: [[Triple; 3]; 4] = [
    [[0.7, 0.5, 0.7], [0.5, 0.7, 0.7], [0.8, 0.6, 0.6]],
    [[0.4, 0.2, 0.1], [0.5, 0.6, 0.3], [0.5, 0.6, 0.7]],
    [[0.9, 0.1, 0.4], [0.5, 0.6, 0.5], [0.7, 0.5, 0.4]],
    [[0.4, 0.7, 0.7], [0.5, 0.8, 0.5], [0.3, 0.5, 0.5]],
];

/// First worked example: intersection under min/max.
pub const PRINTED_INTERSECTION: [[Triple; 3]; 4] = [
    [[0.4, 0.6, 0.8], [0.5, 0.7, 0.8], [0.7, 0.8, 0.9]],
    [[0.2, 0.5, 0.8], [0.3, 0.9, 0.3], [0.5, 0.9, 0.9]],
    [[0.3, 0.1, 0.5], [0.2, 0.6, 0.8], [0.7, 0.5, 0.8]],
    [[0.4, 0.7, 0.7], [0.4, 0.8, 0.5], [0.2, 0.8, 0.6]],
];

/// First worked example: complement of N1 keeping I.
pub const PRINTED_SET_COMPLEMENT: [[Triple; 3]; 4] = [
    [[0.8, 0.5, 0.4], [0.7, 0.7, 0.5], [0.6, 0.8, 0.7]],
    [[0.1, 0.5, 0.2], [0.3, 0.6, 0.3], [0.7, 0.6, 0.5]],
    [[0.4, 0.1, 0.3], [0.5, 0.6, 0.2], [0.8, 0.5, 0.7]],
    [[0.7, 0.7, 0.4], [0.5, 0.5, 0.4], [0.5, 0.8, 0.2]],
];

/// Matrix complement of N1 with `1 - I`.
pub const PRINTED_MATRIX_COMPLEMENT: [[Triple; 3]; 4] = [
    [[0.8, 0.5, 0.4], [0.7, 0.3, 0.5], [0.6, 0.2, 0.7]],
    [[0.1, 0.5, 0.2], [0.3, 0.4, 0.3], [0.7, 0.4, 0.5]],
    [[0.4, 0.9, 0.3], [0.5, 0.4, 0.2], [0.8, 0.5, 0.7]],
    [[0.7, 0.3, 0.4], [0.5, 0.5, 0.4], [0.5, 0.2, 0.2]],
];

/// And-product of the case-study matrices under min/max.
pub const PRINTED_AND_PRODUCT: [[Triple; 4]; 3] = [
    [[1.0, 0.7, 0.1], [1.0, 0.1, 0.1], [1.0, 0.7, 0.1], [1.0, 0.4, 0.1]],
    [[1.0, 0.5, 0.1], [1.0, 0.2, 0.1], [1.0, 0.5, 0.1], [1.0, 0.2, 0.1]],
    [[1.0, 0.8, 0.1], [1.0, 0.8, 0.1], [1.0, 0.7, 0.1], [1.0, 0.7, 0.1]],
];

/// Or-product of the case-study matrices under min/max.
pub const PRINTED_OR_PRODUCT: [[Triple; 4]; 3] = [
    [[1.0, 0.1, 0.1], [1.0, 0.1, 0.1], [1.0, 0.4, 0.1], [1.0, 0.1, 0.1]],
    [[1.0, 0.2, 0.1], [1.0, 0.2, 0.1], [1.0, 0.1, 0.1], [1.0, 0.1, 0.1]],
    [[1.0, 0.8, 0.1], [1.0, 0.8, 0.1], [1.0, 0.5, 0.1], [1.0, 0.5, 0.1]],
];

/// Decision column of the case study.
pub const PRINTED_DECISION: [Triple; 3] = [[1.0, 0.7, 0.1], [1.0, 0.5, 0.1], [1.0, 0.8, 0.1]];

/// Printed score column (its first two rows are swapped relative to the
/// decision column above).
pub const PRINTED_SCORES: [f64; 3] = [0.95, 0.93, 0.92];

/// Cells of `m` that differ from `printed` by more than `EPS`, as
/// `(row label, column label, printed, computed)`.
pub fn diff_against<const C: usize>(
    m: &NsMatrix,
    printed: &[[Triple; C]],
) -> Vec<(String, String, Triple, Triple)> {
    assert_eq!((m.rows(), m.cols()), (printed.len(), C), "shape");
    let mut out = Vec::new();
    for (i, row) in printed.iter().enumerate() {
        for (j, expected) in row.iter().enumerate() {
            let got = triple(&m.get(i, j));
            if max_dev(got, *expected) > EPS {
                out.push((
                    m.row_labels()[i].to_string(),
                    m.col_labels()[j].to_string(),
                    *expected,
                    got,
                ));
            }
        }
    }
    out
}

// --- brute-force oracles -------------------------------------------------

const ZERO: Triple = [0.0, 1.0, 1.0];

/// Min-max-max decision column of an `m x n^2` matrix. Blocks are built by
/// walking the `(j, k)` pairs in order and handing out consecutive columns.
pub fn dmmm_oracle(c: &NsMatrix) -> Vec<Triple> {
    let cols = c.cols();
    let n = (1..=cols).find(|n| n * n >= cols).unwrap();
    assert_eq!(n * n, cols);

    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut cursor = 0;
    for block in blocks.iter_mut() {
        for _k in 0..n {
            let active = (0..c.rows()).any(|i| triple(&c.get(i, cursor)) != ZERO);
            if active {
                block.push(cursor);
            }
            cursor += 1;
        }
    }

    (0..c.rows())
        .map(|i| {
            let mut best = [f64::NEG_INFINITY, f64::NEG_INFINITY, f64::INFINITY];
            for block in &blocks {
                let t = if block.is_empty() {
                    ZERO
                } else {
                    let mut t = [f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY];
                    for &p in block {
                        let [mu, nu, w] = triple(&c.get(i, p));
                        t = [t[0].min(mu), t[1].max(nu), t[2].max(w)];
                    }
                    t
                };
                best = [best[0].max(t[0]), best[1].max(t[1]), best[2].min(t[2])];
            }
            best
        })
        .collect()
}

/// Min/max And (`and = true`) or Or product, laid out by walking `(j, k)`.
pub fn minmax_product_oracle(a: &NsMatrix, b: &NsMatrix, and: bool) -> Vec<Vec<Triple>> {
    let n = a.cols();
    (0..a.rows())
        .map(|i| {
            let mut row = Vec::with_capacity(n * n);
            for j in 0..n {
                for k in 0..n {
                    let [ta, ia, fa] = triple(&a.get(i, j));
                    let [tb, ib, fb] = triple(&b.get(i, k));
                    row.push(if and {
                        [ta.min(tb), ia.max(ib), fa.max(fb)]
                    } else {
                        [ta.max(tb), ia.min(ib), fa.min(fb)]
                    });
                }
            }
            row
        })
        .collect()
}

pub fn score_oracle([mu, nu, w]: Triple) -> f64 {
    mu - nu * w
}

// --- random instances ----------------------------------------------------

pub fn random_value<R: Rng>(rng: &mut R) -> NsValue {
    NsValue::new(rng.gen(), rng.gen(), rng.gen()).unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, m: usize, n: usize) -> NsMatrix {
    NsMatrix::from_fn(
        Labels::numbered("u", m).unwrap(),
        Labels::numbered("x", n).unwrap(),
        |_, _| random_value(rng),
    )
}

/// Values drawn from `{0, 0.25, 0.5, 0.75, 1}` so that ties and
/// comparable pairs are common.
pub fn random_grid_matrix<R: Rng>(rng: &mut R, m: usize, n: usize) -> NsMatrix {
    let mut g = || rng.gen_range(0..=4) as f64 / 4.0;
    NsMatrix::from_fn(
        Labels::numbered("u", m).unwrap(),
        Labels::numbered("x", n).unwrap(),
        |_, _| NsValue::new(g(), g(), g()).unwrap(),
    )
}

/// A matrix at or above `base` in the submatrix order.
pub fn random_superset<R: Rng>(rng: &mut R, base: &NsMatrix) -> NsMatrix {
    NsMatrix::from_fn(base.row_labels().clone(), base.col_labels().clone(), |i, j| {
        let [t, ind, f] = triple(&base.get(i, j));
        let up = |x: f64, r: f64| x + (1.0 - x) * r;
        let down = |x: f64, r: f64| x * (1.0 - r);
        NsValue::new(
            up(t, rng.gen::<f64>()),
            down(ind, rng.gen::<f64>()),
            down(f, rng.gen::<f64>()),
        )
        .unwrap()
    })
}

/// An `m x n^2` matrix with a sprinkling of zero cells and zero columns.
pub fn random_product_shaped<R: Rng>(rng: &mut R, m: usize, n: usize) -> NsMatrix {
    let cols = n * n;
    let dead: Vec<bool> = (0..cols).map(|_| rng.gen_bool(0.25)).collect();
    let grid = |rng: &mut R| rng.gen_range(0..=10) as f64 / 10.0;
    let cells: Vec<NsValue> = (0..m * cols)
        .map(|k| {
            if dead[k % cols] || rng.gen_bool(0.15) {
                NsValue::ZERO
            } else if rng.gen_bool(0.5) {
                NsValue::new(grid(rng), grid(rng), grid(rng)).unwrap()
            } else {
                random_value(rng)
            }
        })
        .collect();
    NsMatrix::from_fn(
        Labels::numbered("u", m).unwrap(),
        Labels::numbered("c", cols).unwrap(),
        |i, j| cells[i * cols + j],
    )
}

// --- CLI golden cases ----------------------------------------------------

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

const A1: &str = "tests/fixtures/example1_n1.json";
const A2: &str = "tests/fixtures/example1_n2.json";
const SQ: &str = "tests/fixtures/example_square.json";
const CA: &str = "tests/fixtures/case_study_a.json";
const CB: &str = "tests/fixtures/case_study_b.json";

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase { name: "validate_case_study_a", args: &["validate", CA] },
    GoldenCase { name: "validate_example1_n1", args: &["validate", A1] },
    GoldenCase { name: "op_union_example1", args: &["op", "--kind", "union", A1, A2] },
    GoldenCase { name: "op_intersect_example1", args: &["op", "--kind", "intersect", A1, A2] },
    GoldenCase { name: "op_union_algebraic_example1", args: &["op", "--kind", "union", "--norm", "algebraic", A1, A2] },
    GoldenCase { name: "op_complement_example1", args: &["op", "--kind", "complement", A1] },
    GoldenCase { name: "op_complement_identity_example1", args: &["op", "--kind", "complement", "--complement-mode", "identity_i", A1] },
    GoldenCase { name: "op_transpose_square", args: &["op", "--kind", "transpose", SQ] },
    GoldenCase { name: "product_and_case_study", args: &["product", "--kind", "and", CA, CB] },
    GoldenCase { name: "product_or_case_study", args: &["product", "--kind", "or", CA, CB] },
    GoldenCase { name: "product_and_einstein_case_study", args: &["product", "--kind", "and", "--norm", "einstein", CA, CB] },
    GoldenCase { name: "decide_table_case_study", args: &["decide", CA, CB] },
    GoldenCase { name: "decide_json_case_study", args: &["decide", "--format", "json", CA, CB] },
    GoldenCase { name: "decide_or_json_case_study", args: &["decide", "--product", "or", "--format", "json", CA, CB] },
    GoldenCase { name: "decide_hamacher_table_case_study", args: &["decide", "--norm", "Hamacher", CA, CB] },
];

pub struct ErrorCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub env: Option<(&'static str, &'static str)>,
    pub code: i32,
}

pub const ERROR_CASES: &[ErrorCase] = &[
    ErrorCase { name: "out_of_range_component", args: &["validate", "tests/fixtures/invalid/out_of_range.json"], env: None, code: 2 },
    ErrorCase { name: "row_count_mismatch", args: &["validate", "tests/fixtures/invalid/row_count.json"], env: None, code: 2 },
    ErrorCase { name: "short_triple", args: &["validate", "tests/fixtures/invalid/short_triple.json"], env: None, code: 2 },
    ErrorCase { name: "duplicate_label", args: &["validate", "tests/fixtures/invalid/duplicate_label.json"], env: None, code: 2 },
    ErrorCase { name: "malformed_json", args: &["validate", "tests/fixtures/invalid/malformed.json"], env: None, code: 2 },
    ErrorCase { name: "invalid_second_input", args: &["decide", CA, "tests/fixtures/invalid/out_of_range.json"], env: None, code: 2 },
    ErrorCase { name: "union_shape_mismatch", args: &["op", "--kind", "union", A1, SQ], env: None, code: 3 },
    ErrorCase { name: "product_shape_mismatch", args: &["product", "--kind", "and", CA, A1], env: None, code: 3 },
    ErrorCase { name: "decide_label_mismatch", args: &["decide", CA, "tests/fixtures/invalid/relabeled_case_study_b.json"], env: None, code: 3 },
    ErrorCase { name: "unknown_norm", args: &["decide", "--norm", "lukasiewicz", CA, CB], env: None, code: 4 },
    ErrorCase { name: "unknown_product_kind", args: &["product", "--kind", "xor", CA, CB], env: None, code: 4 },
    ErrorCase { name: "unknown_complement_mode", args: &["op", "--kind", "complement", "--complement-mode", "flip", CA], env: None, code: 4 },
    ErrorCase { name: "union_missing_operand", args: &["op", "--kind", "union", CA], env: None, code: 4 },
    ErrorCase { name: "transpose_extra_operand", args: &["op", "--kind", "transpose", CA, CB], env: None, code: 4 },
    ErrorCase { name: "unknown_subcommand", args: &["frobnicate"], env: None, code: 4 },
    ErrorCase { name: "missing_file", args: &["validate", "tests/fixtures/does_not_exist.json"], env: None, code: 4 },
    ErrorCase { name: "bad_precision_env", args: &["decide", CA, CB], env: Some(("NSM_PRECISION", "many")), code: 4 },
    ErrorCase { name: "precision_too_large", args: &["decide", CA, CB], env: Some(("NSM_PRECISION", "18")), code: 4 },
];

pub fn run_nsm(args: &[&str], env: Option<(&str, &str)>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nsm"));
    cmd.args(args)
        .current_dir(manifest_dir())
        .env_remove("NSM_PRECISION");
    if let Some((k, val)) = env {
        cmd.env(k, val);
    }
    cmd.output().expect("spawn nsm")
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.out"))
}

/// Runs one golden case. With `UPDATE_GOLDEN` set, rewrites the golden file
/// instead of comparing.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let out = run_nsm(case.args, None);
    if !out.status.success() {
        return Err(format!(
            "{}: exit {:?}, stderr: {}",
            case.name,
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let path = golden_path(case.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != out.stdout {
        return Err(format!(
            "{}: stdout differs from {}\n--- expected\n{}\n--- actual\n{}",
            case.name,
            rel(&path),
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(&out.stdout)
        ));
    }
    Ok(())
}

pub fn check_error_case(case: &ErrorCase) -> Result<(), String> {
    let out = run_nsm(case.args, case.env);
    let code = out.status.code();
    if code != Some(case.code) {
        return Err(format!(
            "{}: expected exit {}, got {:?} (stderr: {})",
            case.name,
            case.code,
            code,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    if out.stderr.is_empty() {
        return Err(format!("{}: no diagnostic on stderr", case.name));
    }
    if !out.stdout.is_empty() {
        return Err(format!("{}: unexpected output on stdout", case.name));
    }
    Ok(())
}

fn rel(path: &Path) -> String {
    path.strip_prefix(manifest_dir())
        .unwrap_or(path)
        .display()
        .to_string()
}
