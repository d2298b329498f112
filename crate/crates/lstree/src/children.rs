use affperm::{phi_minus_bounded, phi_plus_bounded, AffinePermutation};

use crate::error::LsTreeError;

/// The children of a vertex of the bounded affine transition tree.
///
/// Let `(r, s)` be the lexicographically maximal window inversion of `f` and
/// `h = f·t_{rs}` the resulting lower cover.  The plus children are the
/// bounded lower covers of `h` in column `r`, the minus children the bounded
/// upper covers of `h` in column `r` other than `f` itself, and the class of
/// `f` equals the sum of the plus classes minus the sum of the minus classes.
/// Both lists are sorted by window and every child again lies in
/// `Bound(k, n)`, with the same length as `f`.
///
/// Errors with [`LsTreeError::NotBounded`] when `f ∉ Bound(k, n)` and with
/// [`LsTreeError::ZeroGrassmannianLeaf`] when `f` has no window inversion.
pub fn ls_children(
    f: &AffinePermutation,
    k: u32,
) -> Result<(Vec<AffinePermutation>, Vec<AffinePermutation>), LsTreeError> {
    if f.bounded_class() != Some(k) {
        return Err(LsTreeError::NotBounded {
            window: f.window().to_vec(),
            k,
        });
    }
    let Some((r, s)) = f.max_inversion() else {
        return Err(LsTreeError::ZeroGrassmannianLeaf(f.window().to_vec()));
    };
    let pivot = f
        .right_multiply_t(r, s)
        .expect("window inversion columns have distinct residues");
    assert!(
        pivot.is_bruhat_cover(f),
        "maximal inversion must step down to a cover"
    );

    let mut plus = phi_minus_bounded(&pivot, r, k);
    let mut minus = phi_plus_bounded(&pivot, r, k);
    let before = minus.len();
    minus.retain(|g| g != f);
    assert_eq!(before, minus.len() + 1, "f is itself a bounded upper cover");
    plus.sort();
    minus.sort();

    // Structural guarantee behind termination: every child either has fewer
    // window inversions than its parent, or the same number and a
    // lexicographically greater window.
    let len = f.length();
    let measure = f.window_inversions();
    for child in plus.iter().chain(minus.iter()) {
        assert_eq!(child.length(), len, "children keep the parent's length");
        let child_measure = child.window_inversions();
        assert!(
            child_measure < measure
                || (child_measure == measure && child.window() > f.window()),
            "termination measure must decrease from {f} to {child}"
        );
    }
    Ok((plus, minus))
}
