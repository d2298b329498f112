use crate::subset::{cyclically_decreasing_from_subset, CyclicSubset};
use crate::{OracleBudget, OracleError, WeightTable};
use affperm::AffinePermutation;
use itertools::Itertools;
use schurring::{Partition, SchurVector};
use std::collections::HashMap;

/// Counts factorizations of `g` into cyclically decreasing factors whose
/// sizes follow `parts`, peeling one factor off the left at each step.
///
/// The memo key pairs the remaining window with the number of parts still to
/// peel; within a single top-level call the part list is fixed, so the suffix
/// is determined by its length.
fn count_peels(
    g: &AffinePermutation,
    parts: &[u32],
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> u64 {
    if parts.is_empty() {
        return u64::from(g.length() == 0);
    }
    let key = (g.window().to_vec(), parts.len());
    if let Some(&cached) = memo.get(&key) {
        return cached;
    }
    let n = g.n();
    let size = parts[0] as usize;
    let mut total = 0u64;
    // A cyclically decreasing element omits at least one residue, so factors
    // of size >= n never occur.
    if size < n {
        for combo in (0..n as u32).combinations(size) {
            let subset = CyclicSubset::new(n, combo).expect("a size < n subset is proper");
            let factor = cyclically_decreasing_from_subset(&subset);
            let rest = factor
                .inverse()
                .compose(g)
                .expect("factors share the same modulus");
            if rest.length() + size as u64 == g.length() {
                total += count_peels(&rest, &parts[1..], memo);
            }
        }
    }
    memo.insert(key, total);
    total
}

/// The coefficient of the monomial `x^mu` in the affine Stanley symmetric
/// function of `f`, counting factorizations of the length-zero shift of `f`
/// into cyclically decreasing factors of sizes `mu_1, mu_2, ...`.
///
/// # Errors
///
/// [`OracleError::SizeMismatch`] if `mu` is not a partition of the length
/// of `f`.
pub fn affine_stanley_monomial_coeff(
    f: &AffinePermutation,
    mu: &Partition,
) -> Result<u64, OracleError> {
    let g = f.shift(-f.av());
    if mu.size() != g.length() {
        return Err(OracleError::SizeMismatch {
            expected: g.length(),
            got: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(count_peels(&g, mu.parts(), &mut memo))
}

/// Tabulates every monomial coefficient of the affine Stanley symmetric
/// function of `f` in `vars` variables.
///
/// As a consistency check, each run verifies the symmetry of the result on
/// one non-sorted rearrangement of a tabulated weight.
pub fn affine_stanley_weight_table(f: &AffinePermutation, vars: u32) -> WeightTable {
    let g = f.shift(-f.av());
    let degree = g.length();
    let max_part = degree.min(g.n() as u64 - 1) as u32;
    let mut table = WeightTable::new(degree, vars);
    let mut spot_check: Option<Vec<u32>> = None;
    for mu in schurring::partitions_bounded(degree, max_part, vars) {
        let mut memo = HashMap::new();
        let coeff = count_peels(&g, mu.parts(), &mut memo);
        if coeff > 0 {
            if spot_check.is_none() && mu.num_parts() >= 2 && mu.part(0) != mu.part(mu.num_parts() - 1)
            {
                let mut rearranged = mu.parts().to_vec();
                rearranged.reverse();
                spot_check = Some(rearranged);
            }
            table.add(mu, coeff.into());
        }
    }
    if let Some(composition) = spot_check {
        let mut memo = HashMap::new();
        let unsorted_coeff = count_peels(&g, &composition, &mut memo);
        let sorted = Partition::from_unsorted(composition.iter().copied());
        assert_eq!(
            Into::<num_bigint::BigInt>::into(unsorted_coeff),
            table.coeff(&sorted),
            "monomial coefficients must be symmetric in the exponents"
        );
    }
    table
}

/// The affine Stanley symmetric function of `f`, Schur-expanded and truncated
/// to the partitions fitting inside the `k x (n - k)` rectangle.
///
/// # Errors
///
/// [`OracleError::BudgetExceeded`] if the length of `f` exceeds the budget
/// for monomial-by-monomial expansion.
pub fn affine_stanley_truncated(
    f: &AffinePermutation,
    k: u32,
    budget: &OracleBudget,
) -> Result<SchurVector, OracleError> {
    let n = f.n() as u32;
    assert!(k <= n, "truncation rank {k} exceeds the modulus {n}");
    let length = f.length();
    if length > budget.max_stanley_length {
        return Err(OracleError::BudgetExceeded {
            quantity: "permutation length",
            size: length,
            limit: budget.max_stanley_length,
        });
    }
    let table = affine_stanley_weight_table(f, k);
    let mut vector = SchurVector::zero(k, n - k);
    for (shape, coeff) in table.schur_expansion() {
        vector.insert(shape, coeff);
    }
    Ok(vector)
}
