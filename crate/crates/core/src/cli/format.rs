use std::fmt::Write;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::numerics::Matrix;
use crate::oscillator::WavefunctionTable;

/// Folds `-0.0` into `0.0`.
pub fn unsigned_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// 17 significant digits, scientific notation, `.` as decimal point.
pub fn number(x: f64) -> String {
    format!("{:.16e}", unsigned_zero(x))
}

pub fn spectrum_csv(rows: &[(&str, Vec<f64>)]) -> String {
    let mut out = String::from("model,k,q\n");
    for (model, values) in rows {
        let j = (values.len() as i64 - 1) / 2;
        for (idx, &q) in values.iter().enumerate() {
            writeln!(out, "{model},{},{}", idx as i64 - j, number(q)).expect("string write");
        }
    }
    out
}

pub fn spectrum_json(j: u32, rows: &[(&str, Vec<f64>)]) -> Value {
    let spectra: Vec<Value> = rows
        .iter()
        .map(|(model, values)| {
            let jj = i64::from(j);
            json!({
                "model": model,
                "k": (-jj..=jj).collect::<Vec<_>>(),
                "q": values.iter().map(|&q| unsigned_zero(q)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "j": j, "spectra": spectra })
}

pub fn wavefunction_csv(tables: &[WavefunctionTable]) -> String {
    let mut out = String::from("n,q,re,im\n");
    for t in tables {
        for (q, a) in &t.entries {
            writeln!(out, "{},{},{},{}", t.n, number(*q), number(a.re), number(a.im)).expect("string write");
        }
    }
    out
}

pub fn wavefunction_json(j: u32, tables: &[WavefunctionTable]) -> Value {
    let tables: Vec<Value> = tables
        .iter()
        .map(|t| {
            json!({
                "n": t.n,
                "picture": t.picture,
                "q": t.entries.iter().map(|(q, _)| unsigned_zero(*q)).collect::<Vec<_>>(),
                "re": t.entries.iter().map(|(_, a)| unsigned_zero(a.re)).collect::<Vec<_>>(),
                "im": t.entries.iter().map(|(_, a)| unsigned_zero(a.im)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "j": j, "tables": tables })
}

pub fn matrix_csv(m: &Matrix<Complex64>) -> String {
    let mut out = String::from("row,col,re,im\n");
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let z = m[(r, c)];
            writeln!(out, "{r},{c},{},{}", number(z.re), number(z.im)).expect("string write");
        }
    }
    out
}

/// `{"shape": [rows, cols], "re": [[..]], "im": [[..]]}`, row-major.
pub fn matrix_json(m: &Matrix<Complex64>) -> Value {
    let part = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
        (0..m.rows()).map(|r| (0..m.cols()).map(|c| unsigned_zero(f(&m[(r, c)]))).collect()).collect()
    };
    json!({ "shape": [m.rows(), m.cols()], "re": part(|z| z.re), "im": part(|z| z.im) })
}
