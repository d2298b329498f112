use affperm::{enumerate_bounded, AffinePermutation};
use lstree::{expand, expand_with_threads, ls_children, LsTreeError};
use num_bigint::BigInt;
use schurring::Partition;

fn af(n: usize, window: &[i64]) -> AffinePermutation {
    AffinePermutation::from_window(n, window.to_vec()).unwrap()
}

fn shape(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn children_of_5274_chain() {
    let f = af(4, &[5, 2, 7, 4]);
    let (plus, minus) = ls_children(&f, 2).unwrap();
    assert_eq!(plus, vec![af(4, &[5, 2, 3, 8])]);
    assert!(minus.is_empty());

    let (plus, minus) = ls_children(&plus[0], 2).unwrap();
    assert_eq!(plus, vec![af(4, &[1, 2, 7, 8])]);
    assert!(minus.is_empty());
    assert!(plus[0].is_zero_grassmannian());
}

#[test]
fn children_errors() {
    let leaf = af(4, &[1, 2, 7, 8]);
    assert_eq!(
        ls_children(&leaf, 2),
        Err(LsTreeError::ZeroGrassmannianLeaf(vec![1, 2, 7, 8]))
    );
    let f = af(4, &[5, 2, 7, 4]);
    assert_eq!(
        ls_children(&f, 1),
        Err(LsTreeError::NotBounded {
            window: vec![5, 2, 7, 4],
            k: 1
        })
    );
}

#[test]
fn expansion_of_5274() {
    let f = af(4, &[5, 2, 7, 4]);
    let expansion = expand(&f, 2).unwrap();
    assert_eq!(expansion.result().to_string(), "s[2,2]");
    assert_eq!(expansion.result().coeff(&shape(&[2, 2])), BigInt::from(1));
    assert_eq!(expansion.k(), 2);
    assert_eq!(expansion.n(), 4);
    assert_eq!(expansion.root(), &f);
    let stats = expansion.stats();
    assert_eq!(stats.nodes, 3);
    assert_eq!(stats.max_depth, 2);
    assert_eq!(stats.memo_hits, 0);
}

#[test]
fn expansion_normalizes_orbit_representatives() {
    let f = af(4, &[5, 2, 7, 4]);
    let reference = expand(&f, 2).unwrap();
    for j in [-4, -1, 1, 3] {
        let shifted = expand(&f.shift(j), 2).unwrap();
        assert_eq!(shifted.result(), reference.result());
        assert_eq!(shifted.root(), &f);
    }
}

#[test]
fn expansion_rejects_wrong_class() {
    let f = af(4, &[5, 2, 7, 4]);
    assert_eq!(
        expand(&f, 1),
        Err(LsTreeError::NotBounded {
            window: vec![5, 2, 7, 4],
            k: 1
        })
    );
}

#[test]
fn zero_grassmannian_roots_are_single_leaves() {
    for n in 1..=4 {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                if !f.is_zero_grassmannian() {
                    continue;
                }
                let expansion = expand(&f, k).unwrap();
                let lambda = f.grassmannian_shape(k).unwrap();
                assert_eq!(expansion.result().coeff(&lambda), BigInt::from(1));
                assert_eq!(expansion.result().num_terms(), 1);
                let stats = expansion.stats();
                assert_eq!((stats.nodes, stats.max_depth, stats.memo_hits), (1, 0, 0));
            }
        }
    }
}

#[test]
fn maximal_length_classes_are_full_rectangles() {
    for n in 2..=4 {
        for k in 1..=n as u32 {
            let m = n as u32 - k;
            let rectangle = shape(&vec![m; k as usize]);
            for f in enumerate_bounded(k, n) {
                if f.length() != u64::from(k) * u64::from(m) {
                    continue;
                }
                let expansion = expand(&f, k).unwrap();
                assert_eq!(
                    expansion.result().coeff(&rectangle),
                    BigInt::from(1),
                    "maximal {f} expands to the full rectangle"
                );
                assert_eq!(expansion.result().num_terms(), 1);
            }
        }
    }
}

#[test]
fn expansions_are_positive_nonzero_and_homogeneous() {
    for n in 1..=4 {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                let expansion = expand(&f, k).unwrap();
                let vector = expansion.result();
                assert!(vector.is_schur_positive(), "{f} expands positively");
                assert!(!vector.is_zero(), "{f} expands to a nonzero class");
                for (lambda, _) in vector.terms() {
                    assert_eq!(lambda.size(), f.length(), "degree ℓ(f) for {f}");
                }
            }
        }
    }
}

#[test]
fn parallel_expansion_matches_single_threaded() {
    let fixtures = [
        af(4, &[5, 2, 7, 4]),
        af(4, &[5, 2, 3, 8]),
        af(5, &[2, 6, 4, 5, 8]),
        af(5, &[6, 7, 3, 9, 5]),
    ];
    for f in fixtures {
        let k = f.bounded_class().unwrap();
        let single = expand(&f, k).unwrap();
        for threads in [2, 4] {
            let parallel = expand_with_threads(&f, k, threads).unwrap();
            assert_eq!(parallel.result(), single.result());
            assert_eq!(parallel.stats().nodes, single.stats().nodes);
        }
    }
    for f in enumerate_bounded(2, 5) {
        let single = expand(&f, 2).unwrap();
        let parallel = expand_with_threads(&f, 2, 3).unwrap();
        assert_eq!(parallel.result(), single.result());
        assert_eq!(parallel.stats().nodes, single.stats().nodes);
    }
}

#[test]
fn expansion_serializes_with_traversal_metadata() {
    let f = af(4, &[5, 2, 7, 4]);
    let expansion = expand(&f, 2).unwrap();
    let value = serde_json::to_value(&expansion).unwrap();
    assert_eq!(value["window"], serde_json::json!([5, 2, 7, 4]));
    assert_eq!(value["n"], serde_json::json!(4));
    assert_eq!(value["k"], serde_json::json!(2));
    assert_eq!(value["m"], serde_json::json!(2));
    assert_eq!(
        value["terms"],
        serde_json::json!([{"partition": [2, 2], "coeff": 1}])
    );
    assert_eq!(
        value["stats"],
        serde_json::json!({"nodes": 3, "max_depth": 2, "memo_hits": 0})
    );
}
