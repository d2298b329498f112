use crate::{OracleBudget, OracleError, WeightTable};
use affperm::AffinePermutation;
use schurring::SchurVector;
use std::collections::HashMap;

/// Which statistic labels a cover `w -> w t_{ab}` (positions `a <= k < b`)
/// when reading off the quasisymmetric function of a saturated chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelConvention {
    /// The larger of the two swapped values, `w(b)`.
    LargerValue,
    /// The eastern position `b` of the transposition.
    RightPosition,
}

fn assert_finite(w: &AffinePermutation) {
    let n = w.n() as i64;
    assert!(
        w.window().iter().all(|&x| 1 <= x && x <= n),
        "chain enumeration expects finite permutations (window inside 1..=n)"
    );
}

/// The number of saturated chains from `u` to `v` in the `k`-Bruhat order,
/// by memoized depth-first search over covers. `count(u, u)` is 1 (the empty
/// chain), and the count is 0 exactly when `u` is not below `v`.
pub fn count_maximal_chains(u: &AffinePermutation, v: &AffinePermutation, k: u32) -> u64 {
    assert_finite(u);
    assert_finite(v);
    assert_eq!(u.n(), v.n(), "chain endpoints must share a symmetric group");
    let mut memo: HashMap<Vec<i64>, u64> = HashMap::new();
    count_from(u, v, k, &mut memo)
}

fn count_from(
    w: &AffinePermutation,
    v: &AffinePermutation,
    k: u32,
    memo: &mut HashMap<Vec<i64>, u64>,
) -> u64 {
    if w == v {
        return 1;
    }
    if w.length() >= v.length() {
        return 0;
    }
    if let Some(&cached) = memo.get(w.window()) {
        return cached;
    }
    let mut total = 0u64;
    for cover in bridge::k_bruhat_covers(w, k) {
        total += count_from(&cover, v, k, memo);
    }
    memo.insert(w.window().to_vec(), total);
    total
}

/// Whether `u <= v` in the `k`-Bruhat order.
pub fn is_k_bruhat_leq(u: &AffinePermutation, v: &AffinePermutation, k: u32) -> bool {
    u == v || count_maximal_chains(u, v, k) > 0
}

/// The sum, over saturated `k`-Bruhat chains from `u` to `v`, of the
/// fundamental quasisymmetric functions indexed by the descents of the chain
/// label words, expanded in the Schur basis and restricted to the
/// `k x (n - k)` rectangle.
///
/// # Errors
///
/// - [`OracleError::BudgetExceeded`] if the interval carries more chains
///   than the budget allows.
/// - [`OracleError::NotSymmetric`] if the quasisymmetric sum fails to be a
///   symmetric function, which signals that `convention` labels chains
///   incorrectly.
pub fn chain_quasisym_schur(
    u: &AffinePermutation,
    v: &AffinePermutation,
    k: u32,
    convention: LabelConvention,
    budget: &OracleBudget,
) -> Result<SchurVector, OracleError> {
    assert_finite(u);
    assert_finite(v);
    assert_eq!(u.n(), v.n(), "chain endpoints must share a symmetric group");
    let n = u.n() as u32;
    assert!(k <= n, "rank {k} exceeds the symmetric group size {n}");
    let rectangle_cols = n - k;

    let chain_count = count_maximal_chains(u, v, k);
    if chain_count > budget.max_chains {
        return Err(OracleError::BudgetExceeded {
            quantity: "saturated chain count",
            size: chain_count,
            limit: budget.max_chains,
        });
    }
    if chain_count == 0 {
        return Ok(SchurVector::zero(k, rectangle_cols));
    }

    let length = v.length() - u.length();
    let mut masks: HashMap<u64, u64> = HashMap::new();
    let mut labels: Vec<i64> = Vec::with_capacity(length as usize);
    collect_descent_masks(u, v, k, convention, &mut labels, &mut masks);

    let vars = k.max(length.min(u64::from(u32::MAX)) as u32);
    let mut table = WeightTable::new(length, vars);
    for mu in schurring::partitions_bounded(length, length.max(1) as u32, vars) {
        // The weakly increasing word of content mu rises strictly exactly at
        // the proper partial sums of mu, so it refines a chain's descent set
        // iff that set is contained in the partial sums.
        let mut breaks = 0u64;
        let mut acc = 0u64;
        for &part in mu.parts() {
            acc += u64::from(part);
            if acc < length {
                breaks |= 1u64 << (acc - 1);
            }
        }
        let coeff: u64 = masks
            .iter()
            .filter(|(mask, _)| *mask & !breaks == 0)
            .map(|(_, count)| count)
            .sum();
        if coeff > 0 {
            table.add(mu, coeff.into());
        }
    }

    let expansion = schurring::schur_expand_from_monomials(table.entries(), vars)
        .map_err(|_| OracleError::NotSymmetric { vars })?;
    let mut vector = SchurVector::zero(k, rectangle_cols);
    for (shape, coeff) in expansion {
        vector.insert(shape, coeff);
    }
    Ok(vector)
}

fn collect_descent_masks(
    w: &AffinePermutation,
    v: &AffinePermutation,
    k: u32,
    convention: LabelConvention,
    labels: &mut Vec<i64>,
    masks: &mut HashMap<u64, u64>,
) {
    if w == v {
        let mut mask = 0u64;
        for t in 1..labels.len() {
            if labels[t - 1] > labels[t] {
                mask |= 1u64 << (t - 1);
            }
        }
        *masks.entry(mask).or_insert(0) += 1;
        return;
    }
    if w.length() >= v.length() {
        return;
    }
    let n = w.n() as i64;
    for a in 1..=i64::from(k) {
        for b in i64::from(k) + 1..=n {
            let next = w
                .right_multiply_t(a, b)
                .expect("distinct positions within the window");
            if next.length() != w.length() + 1 {
                continue;
            }
            let label = match convention {
                LabelConvention::LargerValue => w.evaluate(b),
                LabelConvention::RightPosition => b,
            };
            labels.push(label);
            collect_descent_masks(&next, v, k, convention, labels, masks);
            labels.pop();
        }
    }
}
