use crate::error::SchurError;
use crate::partition::Partition;

/// Number of standard Young tableaux of shape λ, by the hook length formula
/// f^λ = |λ|! / ∏ hooks.  Evaluated in u128 and checked back into u64; the
/// shapes arising here (inside small rectangles) stay far below either bound.
pub fn syt_count(shape: &Partition) -> u64 {
    let n = shape.size();
    assert!(n <= 33, "hook length formula overflows u128 beyond 33 boxes");
    let conj = shape.conjugate();
    let mut numerator: u128 = 1;
    for v in 1..=n {
        numerator *= u128::from(v);
    }
    let mut denom: u128 = 1;
    for i in 0..shape.num_parts() {
        for j in 0..shape.part(i) as usize {
            let arm = shape.part(i) as u64 - 1 - j as u64;
            let leg = u64::from(conj.part(j)) - 1 - i as u64;
            denom *= u128::from(arm + leg + 1);
        }
    }
    u64::try_from(numerator / denom).expect("SYT count exceeds u64")
}

/// Kostka number K_{λμ}: semistandard tableaux of shape λ and content μ
/// (rows weakly increasing, columns strictly increasing), counted by direct
/// cell-by-cell enumeration.
pub fn kostka_number(shape: &Partition, content: &Partition) -> Result<u64, SchurError> {
    if shape.size() != content.size() {
        return Err(SchurError::SizeMismatch(shape.clone(), content.clone()));
    }
    if shape.is_empty() {
        return Ok(1);
    }
    // Quick dominance screen: K_{λμ} = 0 unless μ ≤ λ.
    if !content.dominance_leq(shape)? {
        return Ok(0);
    }
    let rows = shape.num_parts();
    let mut remaining: Vec<u64> = content.parts().iter().map(|&p| u64::from(p)).collect();
    let mut grid = vec![vec![0usize; shape.part(0) as usize]; rows];

    fn fill(
        shape: &Partition,
        remaining: &mut Vec<u64>,
        grid: &mut Vec<Vec<usize>>,
        row: usize,
        col: usize,
    ) -> u64 {
        if row == shape.num_parts() {
            return 1;
        }
        let (next_row, next_col) = if col + 1 < shape.part(row) as usize {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        // Rows weakly increase left to right; columns strictly increase
        // downward.  Entries are 1-indexed values stored 0-indexed.
        let min_left = if col > 0 { grid[row][col - 1] } else { 0 };
        let min_above = if row > 0 { grid[row - 1][col] + 1 } else { 0 };
        let lo = min_left.max(min_above);
        let mut total = 0;
        for value in lo..remaining.len() {
            if remaining[value] == 0 {
                continue;
            }
            remaining[value] -= 1;
            grid[row][col] = value;
            total += fill(shape, remaining, grid, next_row, next_col);
            remaining[value] += 1;
        }
        total
    }

    Ok(fill(shape, &mut remaining, &mut grid, 0, 0))
}
