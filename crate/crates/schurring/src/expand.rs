use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::SchurError;
use crate::partition::{partitions_bounded, Partition};
use crate::tableau::kostka_number;

/// Converts the monomial-coefficient table of a symmetric polynomial in `k`
/// variables into Schur coefficients: given `table[μ]` = coefficient of
/// `m_μ(x_1..x_k)`, returns `c` with `Σ c[λ] s_λ = Σ table[μ] m_μ`.
///
/// Works by peeling: the Kostka matrix is unitriangular with respect to
/// dominance, so repeatedly selecting a dominance-maximal surviving μ,
/// recording its coefficient, and subtracting that multiple of the monomial
/// expansion of s_μ terminates with an empty table exactly when the input
/// was symmetric.
pub fn schur_expand_from_monomials(
    table: &BTreeMap<Partition, BigInt>,
    k: u32,
) -> Result<BTreeMap<Partition, BigInt>, SchurError> {
    let mut work: BTreeMap<Partition, BigInt> = table
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect();
    let Some(degree) = work.keys().next().map(Partition::size) else {
        return Ok(BTreeMap::new());
    };
    for shape in work.keys() {
        if shape.size() != degree {
            return Err(SchurError::NotSymmetric {
                k,
                reason: format!(
                    "mixed degrees {} and {} in one table",
                    degree,
                    shape.size()
                ),
            });
        }
        if shape.num_parts() as u32 > k {
            return Err(SchurError::NotSymmetric {
                k,
                reason: format!("monomial x^{shape} has more than {k} variables"),
            });
        }
    }

    let candidates = partitions_bounded(degree, degree.min(u64::from(u32::MAX)) as u32, k);
    let mut kostka_cache: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
    let mut result: BTreeMap<Partition, BigInt> = BTreeMap::new();

    while !work.is_empty() {
        // Any dominance-maximal element of the support will do: subtracting
        // its Schur expansion only disturbs strictly smaller partitions.
        // Climb until nothing in the support strictly dominates the pick.
        let mut mu = work.keys().next().expect("nonempty").clone();
        loop {
            let above = work
                .keys()
                .find(|nu| **nu != mu && mu.dominance_leq(nu).expect("equal degrees"))
                .cloned();
            match above {
                Some(nu) => mu = nu,
                None => break,
            }
        }
        let c = work.remove(&mu).expect("selected key is present");
        for nu in &candidates {
            if nu == &mu {
                continue;
            }
            let key = (mu.clone(), nu.clone());
            let kn = match kostka_cache.get(&key) {
                Some(&v) => v,
                None => {
                    let v = kostka_number(&mu, nu)?;
                    kostka_cache.insert(key, v);
                    v
                }
            };
            if kn != 0 {
                let delta = &c * BigInt::from(kn);
                let entry = work.entry(nu.clone()).or_insert_with(BigInt::zero);
                *entry -= delta;
                if entry.is_zero() {
                    work.remove(nu);
                }
            }
        }
        *result.entry(mu).or_insert_with(BigInt::zero) += c;
    }

    result.retain(|_, c| !c.is_zero());
    Ok(result)
}
