//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::type_complexity)]

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use su2cp::algebra::{verify_defining_relations, RepLabel};
use su2cp::hyper::identities::{
    balanced_relation_lowered, balanced_relation_shifted, difference_relation_lowered, difference_relation_shifted,
    even_point_orthogonality, krawtchouk_orthogonality, orthogonality_sum, reduction_to_balanced_3f2, IdentityReport,
};
use su2cp::hyper::{int, ratio, weight_printed, weight_standard};
use su2cp::numerics::{matmul, max_abs_diff, Matrix};
use su2cp::oscillator::{
    apply_transform, build_u, cp_transform, heisenberg_residuals, momentum_wavefunctions, oracle_decomposition,
    position_matrix_eigenvalues, position_wavefunctions, SpectralData,
};

type Outcome = Result<String, String>;

fn suites(reports: &[IdentityReport]) -> Outcome {
    let mut checked = 0;
    for r in reports {
        if !r.passed() {
            let shown: Vec<_> = r.failures.iter().take(3).collect();
            return Err(format!("{}: {} failures, e.g. {shown:?}", r.name, r.failures.len()));
        }
        if r.checked == 0 {
            return Err(format!("{}: empty sweep", r.name));
        }
        checked += r.checked;
    }
    Ok(format!("{checked} exact cases"))
}

fn within(limit: Duration, start: Instant, outcome: Outcome) -> Outcome {
    let elapsed = start.elapsed();
    let detail = outcome?;
    if elapsed >= limit {
        return Err(format!("{detail}, but took {elapsed:.1?} (limit {limit:?})"));
    }
    Ok(format!("{detail} in {elapsed:.1?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let outcome = suites(&[difference_relation_shifted(15), difference_relation_lowered(15)]);
    within(Duration::from_secs(60), start, outcome)
}

fn criterion_2() -> Outcome {
    suites(&[reduction_to_balanced_3f2(15), balanced_relation_shifted(15), balanced_relation_lowered(15)])
}

fn criterion_3() -> Outcome {
    suites(&[even_point_orthogonality(15)])
}

fn criterion_4() -> Outcome {
    let detail = suites(&[krawtchouk_orthogonality(weight_standard, 30, &[ratio(1, 2), ratio(1, 3), ratio(3, 4)])])?;
    let printed = orthogonality_sum(weight_printed, 0, 1, &ratio(1, 2), 2).map_err(|e| e.to_string())?;
    if printed == int(0) {
        return Err("printed weight unexpectedly orthogonal at N=2, n=0, n'=1".into());
    }
    Ok(format!("{detail}; printed weight gives {printed} at N=2, n=0, n'=1"))
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let tol = 1e-10;
    let mut worst = [0.0f64; 4];
    for j in 1..=30 {
        let rep = RepLabel::new(j);
        let data = SpectralData::assemble(rep).map_err(|e| e.to_string())?;
        let oracle = oracle_decomposition(rep).map_err(|e| e.to_string())?;
        let closed = position_matrix_eigenvalues(rep);
        let residuals = [
            data.orthogonality_residual(),
            data.eigen_residual(),
            max_gap(&data.eigenvalues, &closed),
            max_gap(&oracle.eigenvalues, &closed),
        ];
        for (w, r) in worst.iter_mut().zip(residuals) {
            if !(r < tol) {
                return Err(format!("j={j}: residuals {residuals:?} exceed {tol:e}"));
            }
            *w = w.max(r);
        }
    }
    within(Duration::from_secs(30), start, Ok(format!("worst residuals {worst:?}")))
}

fn criterion_6() -> Outcome {
    for j in 0..=20 {
        let report = verify_defining_relations(RepLabel::new(j), 1e-12);
        if let Some(c) = report.failures().next() {
            return Err(format!("j={j}: {} residual {:e}", c.name, c.residual));
        }
        if report.get("[J+,J-] = 2 J0 (CP - 1) exact diagonal").is_none() {
            return Err("exact diagonal check missing".into());
        }
    }
    Ok("all relations for j <= 20".into())
}

fn criterion_7() -> Outcome {
    let mut worst = 0.0f64;
    for j in 0..=30 {
        let (a, b) = heisenberg_residuals(RepLabel::new(j));
        if !(a < 1e-10 && b < 1e-10) {
            return Err(format!("j={j}: residuals {a:e}, {b:e}"));
        }
        worst = worst.max(a).max(b);
    }
    Ok(format!("worst residual {worst:.1e}"))
}

fn cli(args: &[&str]) -> Result<String, String> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = su2cp::cli::run(std::iter::once("su2cp").chain(args.iter().copied()), &mut out, &mut err);
    if code != 0 {
        return Err(format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&err)));
    }
    String::from_utf8(out).map_err(|e| e.to_string())
}

fn csv_rows(text: &str) -> Result<Vec<Vec<String>>, String> {
    if !text.ends_with('\n') {
        return Err("output is not newline-terminated".into());
    }
    Ok(text.lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect())
}

fn parse(field: &str) -> Result<f64, String> {
    field.parse().map_err(|_| format!("bad number `{field}`"))
}

fn criterion_8() -> Outcome {
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let closed: [(&str, fn(f64) -> f64); 3] = [
        ("su2", |k| k),
        ("sl21", |k| k.signum() * k.abs().sqrt()),
        ("su2cp", |k| k.signum() * (k.abs() * (10.0 - k.abs())).sqrt()),
    ];
    for (model, f) in closed {
        let out = cli(&["spectrum", "--j", "5", "--model", model, "--format", "csv"])?;
        let rows = csv_rows(&out)?;
        if rows.len() != 11 {
            return Err(format!("{model}: {} rows", rows.len()));
        }
        for row in &rows {
            let k = parse(&row[1])?;
            let q = parse(&row[2])?;
            let want = if k == 0.0 { 0.0 } else { f(k) };
            if !((q - want).abs() < 1e-12) {
                return Err(format!("{model}: q({k}) = {q}, expected {want}"));
            }
        }
        let golden = std::fs::read_to_string(golden_dir.join(format!("spectrum_j5_{model}.csv")))
            .map_err(|e| format!("golden file: {e}"))?;
        if golden != out {
            return Err(format!("{model}: output differs from golden file"));
        }
    }
    Ok("su2, sl21, su2cp match closed form and golden files".into())
}

fn criterion_9() -> Outcome {
    let out = cli(&["wavefunction", "--j", "30", "--n", "0", "--n", "1", "--n", "2", "--n", "60"])?;
    let rows = csv_rows(&out)?;
    let mut worst = 0.0f64;
    for n in [0usize, 1, 2, 60] {
        let table: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r[0] == n.to_string())
            .map(|r| Ok((parse(&r[1])?, parse(&r[2])?)))
            .collect::<Result<_, String>>()?;
        if table.len() != 61 {
            return Err(format!("n={n}: {} rows", table.len()));
        }
        let norm_gap = (table.iter().map(|(_, a)| a * a).sum::<f64>() - 1.0).abs();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let parity_gap = (0..61).map(|i| (table[60 - i].1 - sign * table[i].1).abs()).fold(0.0, f64::max);
        let grid_gap = (0..61).map(|i| (table[60 - i].0 + table[i].0).abs()).fold(0.0, f64::max);
        if !(norm_gap < 1e-12 && parity_gap < 1e-12 && grid_gap == 0.0) {
            return Err(format!("n={n}: norm {norm_gap:e}, parity {parity_gap:e}, grid {grid_gap:e}"));
        }
        worst = worst.max(norm_gap).max(parity_gap);
    }
    Ok(format!("four 61-point tables, worst residual {worst:.1e}"))
}

fn criterion_10() -> Outcome {
    let mut worst = 0.0f64;
    for j in 0..=30 {
        let data = build_u(RepLabel::new(j)).map_err(|e| e.to_string())?;
        let k = cp_transform(&data);
        let id = Matrix::<Complex64>::identity(k.rows());
        let unitarity =
            max_abs_diff(&matmul(&k.adjoint(), &k).map_err(|e| e.to_string())?, &id).map_err(|e| e.to_string())?;
        let mut mapping = 0.0f64;
        for (psi, phi) in position_wavefunctions(&data).iter().zip(momentum_wavefunctions(&data)) {
            let mapped = apply_transform(&k, psi).map_err(|e| e.to_string())?;
            for ((_, a), (_, b)) in mapped.entries.iter().zip(&phi.entries) {
                mapping = mapping.max((a - b).norm());
            }
        }
        if !(unitarity < 1e-12 && mapping < 1e-12) {
            return Err(format!("j={j}: unitarity {unitarity:e}, mapping {mapping:e}"));
        }
        worst = worst.max(unitarity).max(mapping);
    }
    Ok(format!("j <= 30, worst residual {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("difference relations, exact, j <= 15, < 60 s", criterion_1),
        ("balanced 3F2 reduction and relations, exact, j <= 15", criterion_2),
        ("even-point orthogonality with factor 2, exact, N <= 15", criterion_3),
        ("standard orthogonality N <= 30; printed weight fails", criterion_4),
        ("closed-form eigenvectors vs oracle, j <= 30, < 30 s", criterion_5),
        ("algebra relations j <= 20 at 1e-12, exact diagonal", criterion_6),
        ("Heisenberg residuals j <= 30", criterion_7),
        ("spectrum --j 5 against closed form and golden CSVs", criterion_8),
        ("wavefunction --j 30 tables: norm and parity", criterion_9),
        ("transform unitary and maps position to momentum", criterion_10),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {label} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {label} ({detail})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion/criteria failed");
        ExitCode::FAILURE
    }
}
