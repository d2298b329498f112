use std::collections::{BTreeMap, BTreeSet};

use affperm::Diagram;
use num_bigint::BigInt;
use schurring::Partition;

use crate::{toric_gw_expand, BridgeError, CylindricSkewShape};

/// The six possible row sets of a column of a three-row diagram with no
/// full columns, in the order that turns the sorted diagram into a toric
/// skew shape.
fn column_type(rows: &BTreeSet<u8>) -> usize {
    let key: Vec<u8> = rows.iter().copied().collect();
    match key.as_slice() {
        [1] => 0,
        [1, 2] => 1,
        [2] => 2,
        [2, 3] => 3,
        [3] => 4,
        [1, 3] => 5,
        other => unreachable!("column rows {other:?} outside a three-row diagram"),
    }
}

/// Decomposes the Schur module of a planar diagram with at most three
/// occupied rows into irreducibles over `GL(V)`: the returned map sends each
/// partition `ν` with at most `dim_v` rows to its multiplicity.
///
/// Full columns split off as determinant factors, adding one box to each of
/// the first three parts; the remaining columns are sorted by type into a
/// toric skew shape on `C_{3,p}` whose Gromov–Witten expansion is the rest
/// of the character.
pub fn three_row_decompose(
    diagram: &Diagram,
    dim_v: u32,
) -> Result<BTreeMap<Partition, BigInt>, BridgeError> {
    if diagram.period().is_some() {
        return Err(BridgeError::NotPlanar);
    }
    let occupied: Vec<i64> = diagram.row_groups().into_iter().map(|(row, _)| row).collect();
    if occupied.len() > 3 {
        return Err(BridgeError::TooManyRows(occupied.len()));
    }
    let row_index = |row: i64| occupied.iter().position(|&r| r == row).unwrap() as u8 + 1;

    let mut columns: BTreeMap<i64, BTreeSet<u8>> = BTreeMap::new();
    for (row, col) in diagram.cells() {
        columns.entry(col).or_default().insert(row_index(row));
    }
    let full: BTreeSet<u8> = [1, 2, 3].into();
    let determinants = columns.values().filter(|rows| **rows == full).count() as u32;
    let mut counts = [0i64; 6];
    for rows in columns.values().filter(|rows| **rows != full) {
        counts[column_type(rows)] += 1;
    }
    let width: i64 = counts.iter().sum();

    let mut out = BTreeMap::new();
    let mut record = |shape: Partition, coeff: BigInt| {
        if shape.num_parts() as u32 <= dim_v {
            out.insert(shape, coeff);
        }
    };
    if width == 0 {
        let det = Partition::from_unsorted([determinants; 3]);
        record(det, BigInt::from(1));
        return Ok(out);
    }

    // Prefix counts over the six column types; sorting the columns by type
    // and rewriting each {1,3} column as {3,4} leaves rows 1..3 occupying
    // the intervals below on the cylinder C_{3,width} (the rewritten cells
    // re-enter row 1 one period west).
    let q: Vec<i64> = counts
        .iter()
        .scan(0i64, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect();
    let lower = [q[4] - width, q[0], q[2]];
    let upper = [q[1], q[3], width];
    let shape = CylindricSkewShape::from_profiles(&lower, &upper, width as u32)?;
    debug_assert!(shape.is_toric(), "sorted three-row diagrams are toric");
    let expansion = toric_gw_expand(&shape)?;
    for (mu, coeff) in expansion.terms() {
        let parts: Vec<u32> = (0..3).map(|i| mu.part(i) + determinants).collect();
        record(Partition::from_unsorted(parts), coeff.clone());
    }
    Ok(out)
}
