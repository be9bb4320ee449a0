use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which row constraints a [`LinSystem`] imposes on `Ax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinMode {
    /// `Ax >= b`
    Geq,
    /// `b_lower <= Ax <= b_upper`
    Band,
    /// `Ax = b`
    Eq,
}

impl fmt::Display for LinMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinMode::Geq => "geq",
            LinMode::Band => "band",
            LinMode::Eq => "eq",
        })
    }
}

impl FromStr for LinMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geq" => Ok(LinMode::Geq),
            "band" => Ok(LinMode::Band),
            "eq" => Ok(LinMode::Eq),
            _ => Err(Error::Unknown {
                kind: "lin mode",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinEntry {
    pub row: usize,
    pub col: usize,
    pub value: i64,
}

/// A sparse integer system over `{0,1}` variables.
///
/// `col_bound` is the declared per-column nonzero budget `k` carried in the
/// file header. `upper` is empty unless the mode is [`LinMode::Band`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinSystem {
    mode: LinMode,
    num_rows: usize,
    num_cols: usize,
    col_bound: usize,
    entries: Vec<LinEntry>,
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl LinSystem {
    pub fn new(
        mode: LinMode,
        num_rows: usize,
        num_cols: usize,
        col_bound: usize,
        entries: Vec<LinEntry>,
        lower: Vec<i64>,
        upper: Vec<i64>,
    ) -> Self {
        assert_eq!(lower.len(), num_rows, "one lower bound per row");
        if mode == LinMode::Band {
            assert_eq!(upper.len(), num_rows, "one upper bound per row");
        } else {
            assert!(upper.is_empty(), "upper bounds only exist in band mode");
        }
        LinSystem {
            mode,
            num_rows,
            num_cols,
            col_bound,
            entries,
            lower,
            upper,
        }
    }

    /// Builds a system from dense rows, dropping zero coefficients.
    pub fn from_dense(
        mode: LinMode,
        col_bound: usize,
        rows: &[&[i64]],
        lower: Vec<i64>,
        upper: Vec<i64>,
    ) -> Self {
        let num_cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .enumerate()
            .flat_map(|(row, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(move |(col, &value)| LinEntry { row, col, value })
            })
            .collect();
        LinSystem::new(mode, rows.len(), num_cols, col_bound, entries, lower, upper)
    }

    pub fn mode(&self) -> LinMode {
        self.mode
    }

    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    pub fn col_bound(&self) -> usize {
        self.col_bound
    }

    pub fn entries(&self) -> &[LinEntry] {
        &self.entries
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    /// `(col, value)` lists per row.
    pub fn rows(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.num_rows];
        for e in &self.entries {
            rows[e.row].push((e.col, e.value));
        }
        rows
    }

    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.num_cols];
        for e in &self.entries {
            counts[e.col] += 1;
        }
        counts
    }

    /// Whether a row value meets the constraint of row `row`.
    pub fn row_holds(&self, row: usize, value: i128) -> bool {
        let lo = i128::from(self.lower[row]);
        match self.mode {
            LinMode::Geq => value >= lo,
            LinMode::Eq => value == lo,
            LinMode::Band => lo <= value && value <= i128::from(self.upper[row]),
        }
    }

    pub fn is_satisfied_by(&self, x: &[bool]) -> bool {
        if x.len() != self.num_cols {
            return false;
        }
        let mut values = vec![0i128; self.num_rows];
        for e in &self.entries {
            if x[e.col] {
                values[e.row] += i128::from(e.value);
            }
        }
        values
            .iter()
            .enumerate()
            .all(|(row, &v)| self.row_holds(row, v))
    }
}

impl fmt::Display for LinSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "p lin {} {} {} {}",
            self.mode, self.num_rows, self.num_cols, self.col_bound
        )?;
        for e in &self.entries {
            writeln!(f, "a {} {} {}", e.row + 1, e.col + 1, e.value)?;
        }
        for (row, b) in self.lower.iter().enumerate() {
            writeln!(f, "b {} {}", row + 1, b)?;
        }
        for (row, b) in self.upper.iter().enumerate() {
            writeln!(f, "B {} {}", row + 1, b)?;
        }
        Ok(())
    }
}
