//! Rothe diagram invariants: cell count = length, transpose = inverse,
//! row sizes = code, toricity on shifted bounded classes.

use affperm::{enumerate_bounded, AffinePermutation, Diagram};

fn ap(s: &str) -> AffinePermutation {
    s.parse().unwrap()
}

#[test]
fn rothe_examples() {
    let f = ap("5,2,7,4");
    let d = f.rothe_diagram();
    let cells: Vec<(i64, i64)> = d.cells().collect();
    assert_eq!(cells, vec![(1, 2), (1, 4), (3, 4), (3, 6)]);
    assert_eq!(d.len() as u64, f.length());

    assert!(AffinePermutation::identity(4).rothe_diagram().is_empty());
    assert_eq!(ap("5,6,3,4").rothe_diagram().len(), 4);
}

#[test]
fn diagram_display_format() {
    let d = ap("5,2,7,4").rothe_diagram();
    assert_eq!(d.to_string(), "1: 2,4\n3: 4,6");
    let planar: Diagram = "1: 1,2; 2: 1,3".parse().unwrap();
    assert_eq!(planar.len(), 4);
    assert_eq!(planar.to_string(), "1: 1,2\n2: 1,3");
}

/// Every f ∈ Bound(k, n) for n ≤ 5, and assorted τ-shifts: the diagram has
/// ℓ(f) cells, row sizes matching the code, and the inverse has the
/// transposed diagram.
#[test]
fn diagram_invariants_over_bounded_classes() {
    for n in 1..=5usize {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                let d = f.rothe_diagram();
                assert_eq!(d.len() as u64, f.length(), "f={f:?}");

                let code = f.code();
                for (i, &c) in code.entries().iter().enumerate() {
                    let row = i as i64 + 1;
                    let size = d.cells().filter(|&(r, _)| r == row).count();
                    assert_eq!(size, c as usize, "f={f:?} row={row}");
                }

                let inv_diag = f.inverse().rothe_diagram();
                assert_eq!(inv_diag, d.transpose(), "f={f:?}");

                // Lemma 6.2: diagrams of shifted-bounded permutations are toric.
                assert!(d.is_toric(), "f={f:?}");

                // Thm 2.16 diagram characterization of T·Bound(k', n).
                for kp in 0..=n as u32 {
                    let diagram_side = d
                        .row_sizes()
                        .iter()
                        .all(|&r| r <= (n as u32 - kp) as usize)
                        && d.column_sizes().iter().all(|&c| c <= kp as usize);
                    assert_eq!(
                        f.in_t_bound(kp),
                        diagram_side,
                        "f={f:?} k'={kp}"
                    );
                }
            }
        }
    }
}

/// τ-shifts leave the shifted-boundedness predicate invariant, and diagrams
/// of shifts stay toric with the same multiset of row sizes.
#[test]
fn shifts_preserve_t_bound_membership() {
    for f in enumerate_bounded(2, 4) {
        for j in -2..=2i64 {
            let g = f.shift(j);
            assert!(g.in_t_bound(2), "f={f:?} j={j}");
            assert_eq!(g.rothe_diagram().len() as u64, g.length());
            assert!(g.rothe_diagram().is_toric());
        }
    }
}

#[test]
fn bounded_enumeration_counts() {
    // |Bound(k,n)| for n = 4: classes k = 0..4.
    let per_k: Vec<usize> = (0..=4u32).map(|k| enumerate_bounded(k, 4).len()).collect();
    assert_eq!(per_k[0], 1, "only the identity is bounded with k = 0");
    assert_eq!(per_k[4], 1, "only τ^4... window shift by n is the unique k = n element");
    // Total over all k at n = 5 (known from the Bruhat-interval count
    // Σ_{w ∈ S_5} 2^{#fixed points}).
    let total5: usize = (0..=5u32).map(|k| enumerate_bounded(k, 5).len()).sum();
    assert_eq!(total5, 326);
}
