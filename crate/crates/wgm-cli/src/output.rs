//! Payload rendering. CSV cells use the shortest representation that
//! round-trips the exact binary value, so identical runs produce
//! identical bytes and a reader recovers the computed numbers without
//! loss. Human cells trade that for fixed, readable precision.

use crate::Format;

/// CSV float form: plain shortest round-trip in a mid-range band,
/// scientific outside it.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let ax = x.abs();
    if ax < 1e-3 || ax > 1e6 {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn human_num(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let ax = x.abs();
    if ax < 1e-3 || ax >= 1e6 {
        format!("{x:.4e}")
    } else if ax >= 100.0 {
        format!("{x:.3}")
    } else {
        format!("{x:.6}")
    }
}

/// Quote a text field when it would otherwise break the row apart.
fn csv_text(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Clone, Debug)]
pub enum Cell {
    Int(u32),
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(x) => fmt_float(*x),
            Cell::Text(s) => csv_text(s),
            Cell::Empty => String::new(),
        }
    }

    fn human(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(x) => human_num(*x),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn right_aligned(&self) -> bool {
        matches!(self, Cell::Int(_) | Cell::Num(_))
    }
}

pub struct Table {
    pub schema: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Human => self.aligned(),
        }
    }

    fn csv(&self) -> String {
        let mut s = format!("# {}\n{}\n", self.schema, self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    fn aligned(&self) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::human).collect())
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &rendered {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut s = String::new();
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(&format!("{:<w$}", c, w = widths[i]));
        }
        s.push('\n');
        for (row, cells) in self.rows.iter().zip(&rendered) {
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                if row[i].right_aligned() {
                    s.push_str(&format!("{:>w$}", cell, w = widths[i]));
                } else {
                    s.push_str(&format!("{:<w$}", cell, w = widths[i]));
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Two-column report with aligned keys.
pub fn key_values(lines: &[(&str, String)]) -> String {
    let w = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in lines {
        s.push_str(&format!("{k:<w$}  {v}\n"));
    }
    s
}
