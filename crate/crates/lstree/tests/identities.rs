//! Ring identities satisfied by the expansions: the transition identity that
//! drives the tree, the Chevalley rule for multiplication by s₁, and the
//! duality between the classes of f and f⁻¹ under ω.

use std::collections::HashMap;

use affperm::{bcov, enumerate_bounded, phi_minus_bounded, phi_plus_bounded, AffinePermutation};
use lstree::expand;
use schurring::SchurVector;

/// Lazily expanded classes of one `Bound(k, n)`, keyed by window.
struct Classes {
    k: u32,
    cache: HashMap<Vec<i64>, SchurVector>,
}

impl Classes {
    fn new(k: u32) -> Self {
        Classes {
            k,
            cache: HashMap::new(),
        }
    }

    fn class(&mut self, f: &AffinePermutation) -> SchurVector {
        self.cache
            .entry(f.window().to_vec())
            .or_insert_with(|| expand(f, self.k).unwrap().into_result())
            .clone()
    }

    fn sum(&mut self, members: &[AffinePermutation], n: usize) -> SchurVector {
        let mut total = SchurVector::zero(self.k, n as u32 - self.k);
        for g in members {
            total.add_assign(&self.class(g)).unwrap();
        }
        total
    }
}

#[test]
fn transition_identity() {
    for n in 2..=5 {
        for k in 0..=n as u32 {
            let mut classes = Classes::new(k);
            for f in enumerate_bounded(k, n) {
                for r in 0..n as i64 {
                    let lower = classes.sum(&phi_minus_bounded(&f, r, k), n);
                    let upper = classes.sum(&phi_plus_bounded(&f, r, k), n);
                    assert_eq!(lower, upper, "transition at {f}, column {r}");
                }
            }
        }
    }
}

#[test]
fn chevalley_identity() {
    for n in 2..=4 {
        for k in 0..=n as u32 {
            let mut classes = Classes::new(k);
            for f in enumerate_bounded(k, n) {
                let product = classes.class(&f).multiply_by_s1();
                for r in 0..n as i64 {
                    let covers: Vec<AffinePermutation> = bcov(&f, r)
                        .into_iter()
                        .map(|(i, j)| f.right_multiply_t(i, j).unwrap())
                        .collect();
                    let total = classes.sum(&covers, n);
                    assert_eq!(product, total, "Chevalley at {f}, column {r}");
                }
            }
        }
    }
}

#[test]
fn chevalley_identity_spot_checks_at_n5() {
    let mut classes = Classes::new(2);
    for f in enumerate_bounded(2, 5).into_iter().step_by(7) {
        let product = classes.class(&f).multiply_by_s1();
        for r in 0..5 {
            let covers: Vec<AffinePermutation> = bcov(&f, r)
                .into_iter()
                .map(|(i, j)| f.right_multiply_t(i, j).unwrap())
                .collect();
            let total = classes.sum(&covers, 5);
            assert_eq!(product, total, "Chevalley at {f}, column {r}");
        }
    }
}

#[test]
fn omega_duality_with_the_inverse() {
    for n in 1..=4 {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                let dual = expand(&f, k).unwrap().result().omega_dual();
                let inverse = expand(&f.inverse(), n as u32 - k).unwrap();
                assert_eq!(&dual, inverse.result(), "duality at {f}");
            }
        }
    }
    for f in enumerate_bounded(2, 5).into_iter().step_by(5) {
        let dual = expand(&f, 2).unwrap().result().omega_dual();
        let inverse = expand(&f.inverse(), 3).unwrap();
        assert_eq!(&dual, inverse.result(), "duality at {f}");
    }
}
