use crate::{OracleBudget, OracleError, WeightTable};
use bridge::CylindricSkewShape;
use schurring::{Partition, SchurVector};
use std::collections::HashMap;

/// The Schur expansion of a cylindric Schur polynomial, split into the part
/// supported inside the `k x m` rectangle and a flag recording whether any
/// nonzero coefficient fell outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricSchurExpansion {
    /// The coefficients on partitions inside the `k x m` rectangle.
    pub vector: SchurVector,
    /// Whether the full expansion had a nonzero coefficient on a partition
    /// outside the rectangle.
    pub out_of_rectangle: bool,
}

/// Expands the cylindric Schur polynomial of `shape` in `k` variables by
/// enumerating semistandard cylindric tableaux one by one.
///
/// A tableau assigns each cell a value in `1..=k` so that rows weakly
/// increase eastward and columns strictly increase upward, including across
/// the seam identifying row `k + 1` with row `1` shifted by the period `m`.
/// Shapes with a row longer than `m` admit no tableaux (the seam constraints
/// wrap into a contradiction), so non-toric shapes yield zero without any
/// special casing.
///
/// # Errors
///
/// [`OracleError::BudgetExceeded`] if the shape has more cells than the
/// enumeration budget allows.
pub fn cylindric_schur(
    shape: &CylindricSkewShape,
    budget: &OracleBudget,
) -> Result<CylindricSchurExpansion, OracleError> {
    let size = shape.size();
    if size > budget.max_cylindric_cells {
        return Err(OracleError::BudgetExceeded {
            quantity: "cylindric shape cells",
            size,
            limit: budget.max_cylindric_cells,
        });
    }
    let k = shape.k() as usize;
    let m = i64::from(shape.m());
    let low = shape.lower_profile();
    let up = shape.upper_profile();

    // Cells in assignment order: row by row from the top, west to east, so
    // every left and upward neighbour (and the seam partner in row one) is
    // assigned before the cell that constrains against it.
    let mut cells: Vec<(usize, i64)> = Vec::new();
    for r in 0..k {
        for c in (low[r] + 1)..=up[r] {
            cells.push((r, c));
        }
    }
    let index_of: HashMap<(usize, i64), usize> = cells
        .iter()
        .enumerate()
        .map(|(idx, &cell)| (cell, idx))
        .collect();

    let mut contents: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut values = vec![0u32; cells.len()];
    enumerate_tableaux(
        &cells,
        &index_of,
        k as u32,
        m,
        &low,
        &up,
        0,
        &mut values,
        &mut contents,
    );

    let mut table = WeightTable::new(size, k as u32);
    let mut spot_check: Option<Vec<u32>> = None;
    for (content, count) in &contents {
        let sorted: Vec<u32> = {
            let mut s = content.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            s
        };
        if &sorted == content {
            table.add(Partition::from_unsorted(content.iter().copied()), (*count).into());
        } else if spot_check.is_none() {
            spot_check = Some(content.clone());
        }
    }
    if let Some(content) = spot_check {
        let observed = contents.get(&content).copied().unwrap_or(0);
        let sorted = Partition::from_unsorted(content.iter().copied());
        let sorted_count = {
            let mut key = sorted.parts().to_vec();
            key.resize(k, 0);
            contents.get(&key).copied().unwrap_or(0)
        };
        assert_eq!(
            observed, sorted_count,
            "tableau contents must be symmetric under permuting the values"
        );
    }

    let mut vector = SchurVector::zero(k as u32, shape.m());
    let mut out_of_rectangle = false;
    for (partition, coeff) in table.schur_expansion() {
        if partition.fits_in_rect(k as u32, shape.m()) {
            vector.insert(partition, coeff);
        } else {
            out_of_rectangle = true;
        }
    }
    Ok(CylindricSchurExpansion {
        vector,
        out_of_rectangle,
    })
}

/// Depth-first enumeration of tableau values; records the content vector of
/// each completed tableau.
#[allow(clippy::too_many_arguments)]
fn enumerate_tableaux(
    cells: &[(usize, i64)],
    index_of: &HashMap<(usize, i64), usize>,
    k: u32,
    m: i64,
    low: &[i64],
    up: &[i64],
    position: usize,
    values: &mut Vec<u32>,
    contents: &mut HashMap<Vec<u32>, u64>,
) {
    if position == cells.len() {
        let mut content = vec![0u32; k as usize];
        for &v in values.iter() {
            content[v as usize - 1] += 1;
        }
        *contents.entry(content).or_insert(0) += 1;
        return;
    }
    let (r, c) = cells[position];
    let mut min_value = 1u32;
    let mut max_value = k;
    if c > low[r] + 1 {
        // Weak increase along the row.
        min_value = min_value.max(values[index_of[&(r, c - 1)]]);
    }
    if r > 0 && low[r - 1] < c && c <= up[r - 1] {
        // Strict increase up the column: the cell above carries a larger value.
        max_value = max_value.min(values[index_of[&(r - 1, c)]].saturating_sub(1));
    }
    if r == low.len() - 1 {
        // Seam: the cell below row k at column c is row 1 at column c - m in
        // the next translate of the fundamental domain.
        if let Some(&seam) = index_of.get(&(0, c - m)) {
            min_value = min_value.max(values[seam] + 1);
        }
    }
    for v in min_value..=max_value {
        values[position] = v;
        enumerate_tableaux(cells, index_of, k, m, low, up, position + 1, values, contents);
    }
}
