use std::fmt::Write;

use crate::fourier::FieldGrid;

/// Shortest representation that parses back to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v}")
    }
}

/// Comma-separated table with a header row and LF line endings.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        CsvTable {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: &[f64]) {
        self.rows.push(row.iter().map(|v| fmt_f64(*v)).collect());
    }

    pub fn push_cells(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.header.join(","));
        for r in &self.rows {
            let _ = writeln!(s, "{}", r.join(","));
        }
        s
    }
}

/// One row per sample: the coordinates of each active axis, then `re,im`.
pub fn grid_to_csv(grid: &FieldGrid) -> CsvTable {
    let fourier = grid.domain == crate::fourier::Domain::Fourier;
    let mut header: Vec<&str> = grid
        .spec
        .axes
        .iter()
        .map(|a| {
            if fourier {
                a.kind.conjugate_name()
            } else {
                a.kind.name()
            }
        })
        .collect();
    header.extend(["re", "im"]);
    let mut t = CsvTable::new(&header);
    for (k, v) in grid.data.iter().enumerate() {
        let c = grid.coords(k);
        let mut row: Vec<f64> = c[..grid.spec.axes.len()].to_vec();
        row.extend([v.re, v.im]);
        t.push(&row);
    }
    t
}
