use std::collections::{BTreeMap, HashSet};

use affperm::AffinePermutation;
use num_bigint::BigInt;
use schurring::Partition;

use crate::BridgeError;

/// Embeds a permutation of `[n]`, given in one-line notation, as an affine
/// permutation whose window is exactly that word.
pub fn permutation_from_one_line(values: &[i64]) -> Result<AffinePermutation, BridgeError> {
    let n = values.len();
    let mut seen = vec![false; n];
    for &v in values {
        if v < 1 || v > n as i64 || seen[v as usize - 1] {
            return Err(BridgeError::NotPermutation(values.to_vec()));
        }
        seen[v as usize - 1] = true;
    }
    Ok(AffinePermutation::from_window(n, values.to_vec()).expect("validated one-line word"))
}

/// Upward covers of `w` in the k-Bruhat order: the permutations `w·t_{ij}`
/// with positions `i ≤ k < j` and `ℓ(w·t_{ij}) = ℓ(w) + 1`.
pub fn k_bruhat_covers(w: &AffinePermutation, k: u32) -> Vec<AffinePermutation> {
    let n = w.n() as i64;
    let len = w.length();
    let mut out = Vec::new();
    for i in 1..=i64::from(k) {
        for j in i64::from(k) + 1..=n {
            let g = w.right_multiply_t(i, j).expect("distinct residues for i < j ≤ n");
            if g.length() == len + 1 {
                out.push(g);
            }
        }
    }
    out
}

/// Whether `u ≤ v` in the k-Bruhat order, decided by breadth-first search
/// over saturated chains of covers.
fn k_bruhat_leq(u: &AffinePermutation, v: &AffinePermutation, k: u32) -> bool {
    if u == v {
        return true;
    }
    if u.length() >= v.length() {
        return false;
    }
    let target = v.window().to_vec();
    let mut frontier = vec![u.clone()];
    let mut visited: HashSet<Vec<i64>> = HashSet::new();
    while let Some(w) = frontier.pop() {
        for cover in k_bruhat_covers(&w, k) {
            if cover.window() == target.as_slice() {
                return true;
            }
            if cover.length() >= v.length() {
                continue;
            }
            if visited.insert(cover.window().to_vec()) {
                frontier.push(cover);
            }
        }
    }
    false
}

/// An interval `[u, v]` in the k-Bruhat order on `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KBruhatInterval {
    k: u32,
    u: AffinePermutation,
    v: AffinePermutation,
}

impl KBruhatInterval {
    /// Builds the interval from one-line words, verifying that `u ≤ v` holds
    /// in the k-Bruhat order.
    pub fn new(k: u32, u: &[i64], v: &[i64]) -> Result<Self, BridgeError> {
        if u.len() != v.len() {
            return Err(BridgeError::LengthMismatch { u: u.len(), v: v.len() });
        }
        let u = permutation_from_one_line(u)?;
        let v = permutation_from_one_line(v)?;
        if k as usize > u.n() {
            return Err(BridgeError::InvalidRank { k, n: u.n() });
        }
        if !k_bruhat_leq(&u, &v, k) {
            return Err(BridgeError::NotComparable {
                u: u.window().to_vec(),
                v: v.window().to_vec(),
                k,
            });
        }
        Ok(KBruhatInterval { k, u, v })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.u.n()
    }

    pub fn lower(&self) -> &AffinePermutation {
        &self.u
    }

    pub fn upper(&self) -> &AffinePermutation {
        &self.v
    }
}

/// The permutation with window `[n+1, …, n+k, k+1, …, n]`: the image of the
/// trivial interval, and the unique longest element of its bounded class.
pub(crate) fn rectangle_permutation(k: u32, n: usize) -> AffinePermutation {
    let window = (1..=i64::from(k))
        .map(|i| n as i64 + i)
        .chain(i64::from(k) + 1..=n as i64)
        .collect();
    AffinePermutation::from_window(n, window).expect("shifted identity blocks")
}

/// The bounded affine permutation attached to a k-Bruhat interval `[u, v]`:
/// `u ∘ g ∘ v⁻¹` where `g` is the rectangle permutation.  Its Bruhat length
/// is `k(n−k) − ℓ(v) + ℓ(u)` and it lies in `Bound(k, n)`.
pub fn f_from_interval(interval: &KBruhatInterval) -> AffinePermutation {
    let n = interval.n();
    let k = interval.k();
    let g = rectangle_permutation(k, n);
    let f = interval
        .lower()
        .compose(&g)
        .expect("same period")
        .compose(&interval.upper().inverse())
        .expect("same period");
    let expected =
        u64::from(k) * (n as u64 - u64::from(k)) + interval.lower().length() - interval.upper().length();
    assert_eq!(f.length(), expected, "length of an interval image");
    assert_eq!(f.bounded_class(), Some(k), "interval images are bounded");
    f
}

/// The unique Grassmannian permutation in `S_n` with descent at `k` whose
/// sorted Lehmer code is `shape`: `w(i) = i + shape_{k+1−i}` for `i ≤ k`,
/// with the remaining values ascending.
pub fn grassmannian_permutation(
    shape: &Partition,
    k: u32,
    n: usize,
) -> Result<AffinePermutation, BridgeError> {
    if k as usize > n {
        return Err(BridgeError::InvalidRank { k, n });
    }
    let m = n as u32 - k;
    if !shape.fits_in_rect(k, m) {
        return Err(BridgeError::RectangleOverflow { shape: shape.clone(), k, m });
    }
    let mut window = Vec::with_capacity(n);
    let mut taken = vec![false; n + 1];
    for i in 1..=k as usize {
        let value = i as i64 + i64::from(shape.part(k as usize - i));
        window.push(value);
        taken[value as usize] = true;
    }
    window.extend((1..=n as i64).filter(|&v| !taken[v as usize]));
    let w = AffinePermutation::from_window(n, window).expect("distinct values in [1, n]");
    debug_assert_eq!(&Partition::from_unsorted(w.code().entries().iter().copied()), shape);
    Ok(w)
}

/// Expands the product of a Schubert polynomial with a Schur polynomial in
/// `k` variables over the Schubert basis: the returned map sends `λ` to the
/// coefficient of the Schubert polynomial of `v` in `S_u · s_λ(x_1..x_k)`,
/// for the `u, v, k` of the interval.
pub fn schubert_times_schur(interval: &KBruhatInterval) -> BTreeMap<Partition, BigInt> {
    let f = f_from_interval(interval);
    let k = interval.k();
    let m = interval.n() as u32 - k;
    let expansion = lstree::expand(&f, k).expect("interval images are bounded");
    let mut out = BTreeMap::new();
    for (shape, coeff) in expansion.result().terms() {
        assert!(coeff > &BigInt::from(0), "class expansions are Schur-positive");
        let label = shape.complement(k, m).expect("support lies in the rectangle");
        out.insert(label, coeff.clone());
    }
    out
}
