//! Minimal CSV table with a `#` provenance block.

use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use casimir_core::constants::{C, G_N, HBAR, K_B};

/// C-style `%.12e`: two-digit signed exponent.
pub fn fmt_sci(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let s = format!("{v:.12e}");
    let (mant, exp) = s.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mant}e{sign}{:02}", exp.abs())
}

#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(v) => fmt_sci(*v),
            Cell::Int(v) => v.to_string(),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|s| s.to_string()).collect(), ..Default::default() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write<W: Write>(&self, mut out: W, command: &str, config_json: &str) -> std::io::Result<()> {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        writeln!(out, "# casimir-propel {}", env!("CARGO_PKG_VERSION"))?;
        writeln!(out, "# generated-at: {now} (unix seconds)")?;
        writeln!(out, "# command: {command}")?;
        writeln!(out, "# config: {config_json}")?;
        writeln!(
            out,
            "# constants: hbar={} J s, k_B={} J/K, c={} m/s, g={} m/s^2",
            fmt_sci(HBAR),
            fmt_sci(K_B),
            fmt_sci(C),
            fmt_sci(G_N)
        )?;
        for n in &self.notes {
            writeln!(out, "# {n}")?;
        }
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_style_exponent() {
        assert_eq!(fmt_sci(1.0), "1.000000000000e+00");
        assert_eq!(fmt_sci(-2.5e-7), "-2.500000000000e-07");
        assert_eq!(fmt_sci(6.02214076e23), "6.022140760000e+23");
        assert_eq!(fmt_sci(1e-300), "1.000000000000e-300");
        assert_eq!(fmt_sci(0.0), "0.000000000000e+00");
    }
}
