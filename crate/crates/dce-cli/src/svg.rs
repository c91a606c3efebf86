//! Minimal SVG line plots generated from result tables: axes, polylines,
//! legend. Convenience output only — no acceptance logic depends on it.

use crate::table::ResultTable;
use std::fmt::Write as _;

const W: f64 = 640.0;
const H: f64 = 480.0;
const MARGIN: f64 = 56.0;
const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

/// One curve: the rows of `table` matching every (column, value) constraint
/// in `group` (all rows when empty), plotted as y(x).
pub struct Series<'a> {
    pub label: String,
    pub group: Vec<(&'a str, String)>,
}

/// Canonical text key of a cell, for series grouping.
pub fn cell_key(c: &crate::table::Cell) -> String {
    match c {
        crate::table::Cell::Text(t) => t.clone(),
        crate::table::Cell::Int(v) => v.to_string(),
        crate::table::Cell::Float(v) => crate::table::format_float(*v),
        crate::table::Cell::Bool(b) => b.to_string(),
    }
}

/// Render y-vs-x polylines for each series into an SVG document.
pub fn line_plot(
    table: &ResultTable,
    x_col: &str,
    y_col: &str,
    series: &[Series<'_>],
    title: &str,
) -> Option<String> {
    table.column_index(x_col)?;
    table.column_index(y_col)?;
    let mut curves: Vec<(String, Vec<(f64, f64)>)> = Vec::new();
    for s in series {
        let mut pts = Vec::new();
        'rows: for (r, row) in table.rows.iter().enumerate() {
            for (col, val) in &s.group {
                let ci = table.column_index(col)?;
                let cell = cell_key(&row[ci]);
                if &cell != val {
                    continue 'rows;
                }
            }
            let x = table.value(r, x_col)?;
            let y = table.value(r, y_col)?;
            pts.push((x, y));
        }
        if !pts.is_empty() {
            curves.push((s.label.clone(), pts));
        }
    }
    if curves.is_empty() {
        return None;
    }
    let all = curves.iter().flat_map(|(_, p)| p.iter());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in all {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if x1 <= x0 {
        x1 = x0 + 1.0;
    }
    if y1 <= y0 {
        y1 = y0 + 1.0;
    }
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - (y - y0) / (y1 - y0) * (H - 2.0 * MARGIN);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(out, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{title}</text>"#,
        W / 2.0
    );
    // axes
    let _ = writeln!(
        out,
        r#"<path d="M {m} {t} L {m} {b} L {r} {b}" stroke="black" fill="none"/>"#,
        m = MARGIN,
        t = MARGIN,
        b = H - MARGIN,
        r = W - MARGIN
    );
    for (frac, xv) in [(0.0, x0), (0.5, 0.5 * (x0 + x1)), (1.0, x1)] {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="11">{:.3}</text>"#,
            MARGIN + frac * (W - 2.0 * MARGIN),
            H - MARGIN + 18.0,
            xv
        );
    }
    for (frac, yv) in [(0.0, y0), (0.5, 0.5 * (y0 + y1)), (1.0, y1)] {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end" font-size="11">{:.3e}</text>"#,
            MARGIN - 6.0,
            H - MARGIN - frac * (H - 2.0 * MARGIN) + 4.0,
            yv
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="12">{x_col}</text>"#,
        W / 2.0,
        H - 12.0
    );
    let _ = writeln!(
        out,
        r#"<text x="16" y="{}" text-anchor="middle" font-size="12" transform="rotate(-90 16 {})">{y_col}</text>"#,
        H / 2.0,
        H / 2.0
    );
    for (i, (label, pts)) in curves.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let mut d = String::new();
        for (j, &(x, y)) in pts.iter().enumerate() {
            let _ = write!(d, "{}{:.2} {:.2} ", if j == 0 { "M " } else { "L " }, sx(x), sy(y));
        }
        let _ = writeln!(
            out,
            r#"<path d="{}" stroke="{color}" stroke-width="1.5" fill="none"/>"#,
            d.trim_end()
        );
        let ly = MARGIN + 16.0 * i as f64 + 8.0;
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/>"#,
            W - MARGIN - 120.0,
            W - MARGIN - 96.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="11">{label}</text>"#,
            W - MARGIN - 90.0,
            ly + 4.0
        );
    }
    out.push_str("</svg>\n");
    Some(out)
}
