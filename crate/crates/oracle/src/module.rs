use crate::{OracleBudget, OracleError, WeightTable};
use affperm::Diagram;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use schurring::Partition;
use std::collections::{BTreeMap, HashMap};

/// The character of the Schur module of a planar diagram in `k` variables,
/// expanded in the Schur basis, computed from first principles.
///
/// For each content `mu`, the dimension of the `mu`-weight space is the rank
/// of the Young symmetrizer of the diagram — symmetrize along rows, then
/// antisymmetrize along columns — acting on the span of the fillings with
/// content `mu`. The rank is computed exactly over the integers by
/// fraction-free (Bareiss) elimination. The character is the resulting
/// monomial expansion, converted to the Schur basis.
///
/// # Errors
///
/// - [`OracleError::NotPlanar`] for cylindric diagrams.
/// - [`OracleError::BudgetExceeded`] if the diagram or the variable count
///   exceeds the brute-force budget.
pub fn schur_module_character(
    diagram: &Diagram,
    k: u32,
    budget: &OracleBudget,
) -> Result<BTreeMap<Partition, BigInt>, OracleError> {
    if diagram.period().is_some() {
        return Err(OracleError::NotPlanar);
    }
    let cells: Vec<(i64, i64)> = diagram.cells().collect();
    let size = cells.len() as u64;
    if size > budget.max_module_cells {
        return Err(OracleError::BudgetExceeded {
            quantity: "diagram cells",
            size,
            limit: budget.max_module_cells,
        });
    }
    if k > budget.max_module_dim {
        return Err(OracleError::BudgetExceeded {
            quantity: "variable count",
            size: u64::from(k),
            limit: u64::from(budget.max_module_dim),
        });
    }
    let index_of: HashMap<(i64, i64), usize> = cells
        .iter()
        .enumerate()
        .map(|(idx, &cell)| (cell, idx))
        .collect();
    let rows: Vec<Vec<usize>> = diagram
        .row_groups()
        .into_iter()
        .map(|(_, group)| group.into_iter().map(|cell| index_of[&cell]).collect())
        .collect();
    let cols: Vec<Vec<usize>> = diagram
        .column_groups()
        .into_iter()
        .map(|(_, group)| group.into_iter().map(|cell| index_of[&cell]).collect())
        .collect();

    let mut table = WeightTable::new(size, k);
    for mu in schurring::partitions_bounded(size, size as u32, k) {
        let rank = weight_space_rank(cells.len(), &rows, &cols, &mu);
        if rank > 0 {
            table.add(mu, rank.into());
        }
    }
    Ok(table.schur_expansion())
}

/// Rank of the Young symmetrizer on the span of content-`mu` fillings.
///
/// Row symmetrization sends every filling of a given row-rearrangement class
/// to the same vector up to a positive scalar, so the image of the full
/// symmetrizer is spanned by one column per row-sorted filling; the matrix
/// has a column for each class and a row for each filling.
fn weight_space_rank(num_cells: usize, rows: &[Vec<usize>], cols: &[Vec<usize>], mu: &Partition) -> usize {
    let basis = fillings_with_content(num_cells, mu.parts());
    if basis.is_empty() {
        return 0;
    }
    let index: HashMap<Vec<u8>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, filling)| (filling.clone(), i))
        .collect();
    let representatives: Vec<&Vec<u8>> = basis
        .iter()
        .filter(|filling| {
            rows.iter().all(|row| {
                row.iter()
                    .zip(row.iter().skip(1))
                    .all(|(&a, &b)| filling[a] <= filling[b])
            })
        })
        .collect();
    let mut matrix = vec![vec![0i64; representatives.len()]; basis.len()];
    for (j, representative) in representatives.iter().enumerate() {
        for arrangement in row_arrangements(representative, rows) {
            // Column antisymmetrization: arrangements with a repeated value
            // in some column cancel and are skipped; the rest expand into
            // signed column rearrangements.
            if cols
                .iter()
                .any(|col| has_duplicate(col.iter().map(|&i| arrangement[i])))
            {
                continue;
            }
            let mut scratch = arrangement.clone();
            signed_column_expand(&mut scratch, cols, 0, 1, &mut |result, sign| {
                let row = index[result];
                matrix[row][j] += sign;
            });
        }
    }
    integer_matrix_rank(matrix)
}

/// All sequences of length `num_cells` using the value `v` (1-based) exactly
/// `counts[v - 1]` times, in lexicographic order.
fn fillings_with_content(num_cells: usize, counts: &[u32]) -> Vec<Vec<u8>> {
    fn extend(remaining: &mut Vec<u32>, current: &mut Vec<u8>, target: usize, out: &mut Vec<Vec<u8>>) {
        if current.len() == target {
            out.push(current.clone());
            return;
        }
        for v in 0..remaining.len() {
            if remaining[v] > 0 {
                remaining[v] -= 1;
                current.push(v as u8 + 1);
                extend(remaining, current, target, out);
                current.pop();
                remaining[v] += 1;
            }
        }
    }
    let total: u32 = counts.iter().sum();
    if total as usize != num_cells {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut remaining = counts.to_vec();
    extend(&mut remaining, &mut Vec::with_capacity(num_cells), num_cells, &mut out);
    out
}

/// Every filling obtained from `filling` by rearranging the values within
/// each row (each distinct rearrangement once).
fn row_arrangements(filling: &[u8], rows: &[Vec<usize>]) -> Vec<Vec<u8>> {
    let mut results = vec![filling.to_vec()];
    for row in rows {
        let values: Vec<u8> = row.iter().map(|&cell| filling[cell]).collect();
        let rearrangements = multiset_permutations(&values);
        let mut next = Vec::with_capacity(results.len() * rearrangements.len());
        for base in &results {
            for rearrangement in &rearrangements {
                let mut updated = base.clone();
                for (slot, &cell) in row.iter().enumerate() {
                    updated[cell] = rearrangement[slot];
                }
                next.push(updated);
            }
        }
        results = next;
    }
    results
}

/// All distinct orderings of a multiset of values.
fn multiset_permutations(values: &[u8]) -> Vec<Vec<u8>> {
    let mut counts = [0u32; 256];
    for &v in values {
        counts[v as usize] += 1;
    }
    fn extend(
        counts: &mut [u32; 256],
        current: &mut Vec<u8>,
        target: usize,
        out: &mut Vec<Vec<u8>>,
    ) {
        if current.len() == target {
            out.push(current.clone());
            return;
        }
        for v in 0..256 {
            if counts[v] > 0 {
                counts[v] -= 1;
                current.push(v as u8);
                extend(counts, current, target, out);
                current.pop();
                counts[v] += 1;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut counts, &mut Vec::with_capacity(values.len()), values.len(), &mut out);
    out
}

fn has_duplicate(values: impl Iterator<Item = u8>) -> bool {
    let mut seen = 0u64;
    for v in values {
        let bit = 1u64 << (v % 64);
        if seen & bit != 0 {
            return true;
        }
        seen |= bit;
    }
    false
}

/// Recursively rearranges the (distinct) values within each column in every
/// possible way, invoking `sink` with each fully rearranged filling and the
/// sign of the column permutation that produced it.
fn signed_column_expand(
    filling: &mut Vec<u8>,
    cols: &[Vec<usize>],
    col_index: usize,
    sign: i64,
    sink: &mut impl FnMut(&[u8], i64),
) {
    if col_index == cols.len() {
        sink(filling, sign);
        return;
    }
    let col = &cols[col_index];
    let original: Vec<u8> = col.iter().map(|&cell| filling[cell]).collect();
    for (order, parity) in permutations_with_sign(col.len()) {
        for (slot, &cell) in col.iter().enumerate() {
            filling[cell] = original[order[slot]];
        }
        signed_column_expand(filling, cols, col_index + 1, sign * parity, sink);
    }
    for (slot, &cell) in col.iter().enumerate() {
        filling[cell] = original[slot];
    }
}

/// All permutations of `0..len` together with their parities.
fn permutations_with_sign(len: usize) -> Vec<(Vec<usize>, i64)> {
    fn extend(len: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        if current.len() == len {
            let mut inversions = 0;
            for a in 0..len {
                for b in a + 1..len {
                    if current[a] > current[b] {
                        inversions += 1;
                    }
                }
            }
            out.push((current.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..len {
            if !used[v] {
                used[v] = true;
                current.push(v);
                extend(len, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(len, &mut Vec::with_capacity(len), &mut vec![false; len], &mut out);
    out
}

/// Rank of an integer matrix by fraction-free Gaussian (Bareiss) elimination.
fn integer_matrix_rank(matrix: Vec<Vec<i64>>) -> usize {
    let mut m: Vec<Vec<BigInt>> = matrix
        .into_iter()
        .filter(|row| row.iter().any(|&x| x != 0))
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut previous_pivot = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Choose the smallest-magnitude nonzero pivot to slow entry growth.
        let mut pivot_row: Option<usize> = None;
        for r in rank..rows {
            if !m[r][col].is_zero()
                && pivot_row.map_or(true, |p| m[r][col].abs() < m[p][col].abs())
            {
                pivot_row = Some(r);
            }
        }
        let Some(pivot) = pivot_row else { continue };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let numerator = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&numerator % &previous_pivot).is_zero());
                m[r][c] = numerator / &previous_pivot;
            }
            m[r][col] = BigInt::zero();
        }
        previous_pivot = m[rank][col].clone();
        rank += 1;
    }
    rank
}
