//! Result tables with deterministic CSV/JSON serialization.
//!
//! Every column carries a unit tag; floats are written with 17 significant
//! digits so repeated runs are byte-identical. Metadata echoes the full
//! parameter set (wall time goes to stderr only, to keep files reproducible).

use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_float(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => serde_json::json!(v),
            // serialize floats as strings to preserve the 17-digit contract
            Cell::Float(v) => serde_json::json!(format_float(*v)),
            Cell::Text(s) => serde_json::json!(s),
            Cell::Bool(b) => serde_json::json!(b),
        }
    }
}

/// 17 significant digits, locale-independent.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Default)]
pub struct ResultTable {
    /// Column names including a bracketed unit tag, e.g. "rate [Gamma0]".
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Parameter echo, tool version, tolerances — deterministic only.
    pub metadata: Vec<(String, String)>,
}

impl ResultTable {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.metadata.push((key.to_string(), value.to_string()));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    /// CSV: `# key=value` metadata lines, a header row, then data rows.
    /// Comma separators, '.' decimals, LF endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "# {k}={v}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let metadata: serde_json::Map<String, serde_json::Value> = self
            .metadata
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::json!(v)))
            .collect();
        let rows: Vec<Vec<serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::json).collect())
            .collect();
        let doc = serde_json::json!({
            "metadata": metadata,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
        s.push('\n');
        s
    }

    /// Numeric value of column `name` in row `i` (tests and plotting).
    pub fn value(&self, i: usize, name: &str) -> Option<f64> {
        let c = self.columns.iter().position(|n| n == name)?;
        match self.rows.get(i)?.get(c)? {
            Cell::Float(v) => Some(*v),
            Cell::Int(v) => Some(*v as f64),
            _ => None,
        }
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|n| n == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_is_deterministic_and_lf_terminated() {
        let mut t = ResultTable::new(&["x [1]", "y [Gamma0]"]);
        t.meta("tolerance", "1e-8");
        t.push(vec![Cell::Int(1), Cell::Float(0.1)]);
        t.push(vec![Cell::Int(2), Cell::Float(2.0 / 3.0)]);
        let a = t.to_csv();
        let b = t.to_csv();
        assert_eq!(a, b);
        assert!(a.starts_with("# tolerance=1e-8\nx [1],y [Gamma0]\n"));
        assert!(a.contains("6.6666666666666663e-1"));
        assert!(!a.contains('\r'));
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn float_format_has_17_significant_digits() {
        assert_eq!(format_float(1.0), "1.0000000000000000e0");
        assert_eq!(format_float(std::f64::consts::PI), "3.1415926535897931e0");
    }

    #[test]
    fn json_round_trips_structure() {
        let mut t = ResultTable::new(&["a [1]"]);
        t.push(vec![Cell::Bool(true)]);
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["columns"][0], "a [1]");
        assert_eq!(v["rows"][0][0], true);
    }
}
