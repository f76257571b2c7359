//! Minimal SVG renderings of the CSV data.

use std::fmt::Write;

use crate::oscillator::WavefunctionTable;

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 60.0;

fn header(out: &mut String, height: f64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" font-family="sans-serif" font-size="12">"#
    )
    .expect("string write");
    writeln!(out, r#"<rect width="{WIDTH}" height="{height}" fill="white"/>"#).expect("string write");
}

fn x_scale(extent: f64) -> impl Fn(f64) -> f64 {
    let half = (WIDTH - 2.0 * MARGIN) / 2.0;
    let extent = if extent > 0.0 { extent } else { 1.0 };
    move |q| WIDTH / 2.0 + q / extent * half
}

/// One row of dots per model, sharing the horizontal axis.
pub fn spectrum(rows: &[(&str, Vec<f64>)]) -> String {
    let row_height = 50.0;
    let height = row_height * rows.len() as f64 + 40.0;
    let extent = rows.iter().flat_map(|(_, v)| v.iter()).fold(0.0f64, |m, q| m.max(q.abs()));
    let x = x_scale(extent);
    let mut out = String::new();
    header(&mut out, height);
    for (i, (model, values)) in rows.iter().enumerate() {
        let y = 30.0 + row_height * i as f64 + row_height / 2.0;
        writeln!(out, r#"<text x="10" y="{:.3}">{model}</text>"#, y + 4.0).expect("string write");
        writeln!(
            out,
            r##"<line x1="{:.3}" y1="{y:.3}" x2="{:.3}" y2="{y:.3}" stroke="#bbb"/>"##,
            x(-extent),
            x(extent)
        )
        .expect("string write");
        for &q in values {
            writeln!(out, r#"<circle cx="{:.3}" cy="{y:.3}" r="4"/>"#, x(q)).expect("string write");
        }
    }
    out.push_str("</svg>\n");
    out
}

/// One stem-plot panel per table; filled markers for the real part,
/// hollow markers for the imaginary part.
pub fn wavefunctions(tables: &[WavefunctionTable]) -> String {
    let panel_height = 160.0;
    let height = panel_height * tables.len() as f64 + 20.0;
    let extent = tables.iter().flat_map(|t| t.entries.iter()).fold(0.0f64, |m, (q, _)| m.max(q.abs()));
    let amp = tables.iter().flat_map(|t| t.entries.iter()).fold(0.0f64, |m, (_, a)| m.max(a.re.abs()).max(a.im.abs()));
    let amp = if amp > 0.0 { amp } else { 1.0 };
    let x = x_scale(extent);
    let mut out = String::new();
    header(&mut out, height);
    for (i, t) in tables.iter().enumerate() {
        let top = 10.0 + panel_height * i as f64;
        let base = top + panel_height / 2.0;
        let y = |v: f64| base - v / amp * (panel_height / 2.0 - 15.0);
        writeln!(out, r#"<text x="10" y="{:.3}">n = {} ({})</text>"#, top + 14.0, t.n, t.picture)
            .expect("string write");
        writeln!(
            out,
            r##"<line x1="{:.3}" y1="{base:.3}" x2="{:.3}" y2="{base:.3}" stroke="#bbb"/>"##,
            x(-extent),
            x(extent)
        )
        .expect("string write");
        for (q, a) in &t.entries {
            let cx = x(*q);
            for (v, fill) in [(a.re, "black"), (a.im, "none")] {
                if v == 0.0 {
                    continue;
                }
                writeln!(out, r##"<line x1="{cx:.3}" y1="{base:.3}" x2="{cx:.3}" y2="{:.3}" stroke="#888"/>"##, y(v))
                    .expect("string write");
                writeln!(out, r#"<circle cx="{cx:.3}" cy="{:.3}" r="3" fill="{fill}" stroke="black"/>"#, y(v))
                    .expect("string write");
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
