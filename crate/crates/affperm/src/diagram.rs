use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::AffPermError;

/// A finite diagram: a set of `(row, column)` cells, either in the plane or
/// on a cylinder `C_{p,q}` where cells are identified under the diagonal
/// translation `(i, j) ↦ (i + p, j + q)`.
///
/// Cylindric cells are stored canonically with row representative in
/// `[1, p]`.  Two canonical cells lie in the same cylinder row iff their
/// rows are equal, and in the same cylinder column iff their columns are
/// congruent mod `q`.
#[derive(Clone, PartialEq, Eq)]
pub struct Diagram {
    /// `Some((p, q))` for the cylinder `C_{p,q}`, `None` for the plane.
    period: Option<(u32, u32)>,
    cells: BTreeSet<(i64, i64)>,
}

impl Diagram {
    /// A planar diagram (no identification).
    pub fn planar(cells: impl IntoIterator<Item = (i64, i64)>) -> Self {
        Diagram { period: None, cells: cells.into_iter().collect() }
    }

    /// A diagram on the cylinder `C_{p,q}`; cells are canonicalized so the
    /// row representative lies in `[1, p]`.
    pub fn cylindric(p: u32, q: u32, cells: impl IntoIterator<Item = (i64, i64)>) -> Self {
        assert!(p > 0 && q > 0, "cylinder periods must be positive");
        let canonical = cells.into_iter().map(|(i, j)| {
            let t = (i - 1).div_euclid(i64::from(p));
            (i - t * i64::from(p), j - t * i64::from(q))
        });
        Diagram { period: Some((p, q)), cells: canonical.collect() }
    }

    pub fn period(&self) -> Option<(u32, u32)> {
        self.period
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The transposed diagram (rows and columns swapped, periods swapped,
    /// cylindric cells re-canonicalized).
    pub fn transpose(&self) -> Diagram {
        let flipped = self.cells.iter().map(|&(i, j)| (j, i));
        match self.period {
            None => Diagram::planar(flipped),
            Some((p, q)) => Diagram::cylindric(q, p, flipped),
        }
    }

    /// Row-grouping key for a cell (exact row in the plane, canonical row on
    /// a cylinder — canonical cells already identify rows).
    fn row_key(&self, cell: (i64, i64)) -> i64 {
        cell.0
    }

    /// Column-grouping key (exact column in the plane, column residue on a
    /// cylinder).
    fn col_key(&self, cell: (i64, i64)) -> i64 {
        match self.period {
            None => cell.1,
            Some((_, q)) => cell.1.rem_euclid(i64::from(q)),
        }
    }

    /// Cells grouped by row, as (key, cells) in key order.
    pub fn row_groups(&self) -> Vec<(i64, Vec<(i64, i64)>)> {
        let mut groups: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for &c in &self.cells {
            groups.entry(self.row_key(c)).or_default().push(c);
        }
        groups.into_iter().collect()
    }

    /// Cells grouped by column (residue classes on a cylinder).
    pub fn column_groups(&self) -> Vec<(i64, Vec<(i64, i64)>)> {
        let mut groups: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for &c in &self.cells {
            groups.entry(self.col_key(c)).or_default().push(c);
        }
        groups.into_iter().collect()
    }

    /// Multiset of nonzero row sizes.
    pub fn row_sizes(&self) -> Vec<usize> {
        self.row_groups().into_iter().map(|(_, g)| g.len()).collect()
    }

    /// Multiset of nonzero column sizes.
    pub fn column_sizes(&self) -> Vec<usize> {
        self.column_groups().into_iter().map(|(_, g)| g.len()).collect()
    }

    /// Whether a cylindric diagram embeds injectively in the torus (no two
    /// cells share both a row and a column-residue).  Planar diagrams are
    /// trivially toric.
    pub fn is_toric(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.cells
            .iter()
            .all(|&c| seen.insert((self.row_key(c), self.col_key(c))))
    }
}

impl fmt::Display for Diagram {
    /// One line per occupied row: `row: col1,col2,…`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, (row, group)) in self.row_groups().into_iter().enumerate() {
            if x > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}: ")?;
            for (y, (_, col)) in group.into_iter().enumerate() {
                if y > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{col}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.period {
            None => write!(f, "planar{{{}}}", self.one_line()),
            Some((p, q)) => write!(f, "C[{p},{q}]{{{}}}", self.one_line()),
        }
    }
}

impl Diagram {
    fn one_line(&self) -> String {
        self.to_string().replace('\n', "; ")
    }
}

impl FromStr for Diagram {
    type Err = AffPermError;

    /// Parses a planar diagram: rows separated by newlines or `;`, each
    /// `row: col1,col2,…`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cells = Vec::new();
        for line in s.split(['\n', ';']) {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (row, cols) = line
                .split_once(':')
                .ok_or_else(|| AffPermError::Parse(line.to_string()))?;
            let row: i64 = row.trim().parse().map_err(|_| AffPermError::Parse(line.to_string()))?;
            for col in cols.split(',') {
                let col = col.trim();
                if col.is_empty() {
                    continue;
                }
                let col: i64 = col.parse().map_err(|_| AffPermError::Parse(line.to_string()))?;
                cells.push((row, col));
            }
        }
        Ok(Diagram::planar(cells))
    }
}
