use crate::perm::AffinePermutation;

/// `BCov_r(f)`: pairs `(i, j)` with `i ∈ [1,n]`, `j ∈ (i, i+n)`, the cyclic
/// interval `[i, j)` hitting the residue `r`, `f ⋖ f·t_{ij}` a Bruhat cover,
/// and `f·t_{ij}` still bounded.  Cover tests compare exact lengths.
pub fn bcov(f: &AffinePermutation, r: i64) -> Vec<(i64, i64)> {
    let n = f.n() as i64;
    let base_len = f.length();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..i + n {
            if (r - i).rem_euclid(n) >= j - i {
                continue;
            }
            let g = f.right_multiply_t(i, j).expect("j − i < n, distinct residues");
            if g.bounded_class().is_some() && g.length() == base_len + 1 {
                out.push((i, j));
            }
        }
    }
    out
}

/// `BΦ⁻(f, r)`: bounded class-`k` covers of `f` of the form `f·t_{ir}` with
/// `i ∈ (r−n, r)`.
pub fn phi_minus_bounded(f: &AffinePermutation, r: i64, k: u32) -> Vec<AffinePermutation> {
    let n = f.n() as i64;
    let base_len = f.length();
    (r - n + 1..r)
        .filter_map(|i| {
            let g = f.right_multiply_t(i, r).expect("0 < r − i < n");
            (g.bounded_class() == Some(k) && g.length() == base_len + 1).then_some(g)
        })
        .collect()
}

/// `BΦ⁺(f, r)`: bounded class-`k` covers of `f` of the form `f·t_{rj}` with
/// `j ∈ (r, r+n)`.
pub fn phi_plus_bounded(f: &AffinePermutation, r: i64, k: u32) -> Vec<AffinePermutation> {
    let n = f.n() as i64;
    let base_len = f.length();
    (r + 1..r + n)
        .filter_map(|j| {
            let g = f.right_multiply_t(r, j).expect("0 < j − r < n");
            (g.bounded_class() == Some(k) && g.length() == base_len + 1).then_some(g)
        })
        .collect()
}
