use std::collections::HashMap;
use std::sync::Mutex;

use affperm::AffinePermutation;
use rayon::prelude::*;
use schurring::SchurVector;
use serde::ser::Error as _;
use serde::{Serialize, Serializer};

use crate::children::ls_children;
use crate::error::LsTreeError;

/// Traversal statistics for one expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExpansionStats {
    /// Distinct vertex labels evaluated (memo-table entries).
    pub nodes: usize,
    /// Deepest vertex visited, counting the root as depth 0.
    pub max_depth: usize,
    /// Vertex visits answered from the memo table.
    pub memo_hits: usize,
}

/// The Schur expansion of the positroid class of a bounded affine
/// permutation, together with the statistics of the tree traversal that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsExpansion {
    root: AffinePermutation,
    k: u32,
    result: SchurVector,
    stats: ExpansionStats,
}

impl LsExpansion {
    /// The tree root: the input shifted into average `k`.
    pub fn root(&self) -> &AffinePermutation {
        &self.root
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.root.n()
    }

    /// The expansion of the class in the `(k, n−k)` Schur basis.
    pub fn result(&self) -> &SchurVector {
        &self.result
    }

    pub fn into_result(self) -> SchurVector {
        self.result
    }

    pub fn stats(&self) -> ExpansionStats {
        self.stats
    }
}

impl Serialize for LsExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut value = serde_json::to_value(&self.result).map_err(S::Error::custom)?;
        let object = value.as_object_mut().expect("vector serialises to a map");
        object.insert(
            "window".to_owned(),
            serde_json::to_value(self.root.window()).map_err(S::Error::custom)?,
        );
        object.insert("n".to_owned(), self.root.n().into());
        object.insert("k".to_owned(), self.k.into());
        object.insert(
            "stats".to_owned(),
            serde_json::to_value(self.stats).map_err(S::Error::custom)?,
        );
        value.serialize(serializer)
    }
}

/// Shift `f` into average `k` and insist the result is bounded.
pub(crate) fn normalize(
    f: &AffinePermutation,
    k: u32,
) -> Result<AffinePermutation, LsTreeError> {
    let root = f.shift(i64::from(k) - f.av());
    if root.bounded_class() != Some(k) {
        return Err(LsTreeError::NotBounded {
            window: f.window().to_vec(),
            k,
        });
    }
    Ok(root)
}

type Memo = Mutex<HashMap<Vec<i64>, SchurVector>>;

enum Frame {
    Enter {
        node: AffinePermutation,
        depth: usize,
    },
    Exit {
        node: AffinePermutation,
        plus: Vec<AffinePermutation>,
        minus: Vec<AffinePermutation>,
    },
}

struct Engine<'a> {
    k: u32,
    m: u32,
    memo: &'a Memo,
}

impl Engine<'_> {
    /// Evaluate the subtree rooted at `root`, recording depths relative to
    /// the overall tree.  Returns the class of `root`, the deepest visited
    /// depth and the number of memo hits along the way.
    fn run(&self, root: &AffinePermutation, base_depth: usize) -> (SchurVector, usize, usize) {
        let mut max_depth = base_depth;
        let mut hits = 0usize;
        let mut stack = vec![Frame::Enter {
            node: root.clone(),
            depth: base_depth,
        }];
        while let Some(frame) = stack.pop() {
            match frame {
                Frame::Enter { node, depth } => {
                    max_depth = max_depth.max(depth);
                    if self.memo.lock().unwrap().contains_key(node.window()) {
                        hits += 1;
                        continue;
                    }
                    if node.is_zero_grassmannian() {
                        let shape = node
                            .grassmannian_shape(self.k)
                            .expect("leaf windows ascend");
                        let value = SchurVector::schur(self.k, self.m, &shape);
                        self.memo
                            .lock()
                            .unwrap()
                            .insert(node.window().to_vec(), value);
                        continue;
                    }
                    let (plus, minus) =
                        ls_children(&node, self.k).expect("interior vertices have children");
                    let children: Vec<AffinePermutation> =
                        plus.iter().chain(minus.iter()).cloned().collect();
                    stack.push(Frame::Exit { node, plus, minus });
                    for child in children {
                        stack.push(Frame::Enter {
                            node: child,
                            depth: depth + 1,
                        });
                    }
                }
                Frame::Exit { node, plus, minus } => {
                    let mut memo = self.memo.lock().unwrap();
                    let mut value = SchurVector::zero(self.k, self.m);
                    for child in &plus {
                        let term = memo.get(child.window()).expect("children precede parents");
                        value.add_assign(term).expect("same ring");
                    }
                    for child in &minus {
                        let term = memo.get(child.window()).expect("children precede parents");
                        value.sub_assign(term).expect("same ring");
                    }
                    memo.insert(node.window().to_vec(), value);
                }
            }
        }
        let memo = self.memo.lock().unwrap();
        let value = memo.get(root.window()).cloned().expect("root evaluated");
        (value, max_depth, hits)
    }
}

/// Expand the positroid class `G_f` in the `(k, n−k)` Schur basis.
///
/// `f` may be any T-orbit representative: it is first shifted into average
/// `k`, and the shifted window must lie in `Bound(k, n)` or the call fails
/// with [`LsTreeError::NotBounded`].  The expansion is Schur-positive, is
/// homogeneous of degree `ℓ(f)`, and is never zero.
pub fn expand(f: &AffinePermutation, k: u32) -> Result<LsExpansion, LsTreeError> {
    expand_with_threads(f, k, 1)
}

/// [`expand`], evaluating the subtrees under the root on up to `threads`
/// worker threads sharing one memo table.
///
/// The returned expansion is identical to the single-threaded one;
/// `stats.nodes` agrees as well, while `max_depth` and `memo_hits` may vary
/// with scheduling when `threads > 1`.
pub fn expand_with_threads(
    f: &AffinePermutation,
    k: u32,
    threads: usize,
) -> Result<LsExpansion, LsTreeError> {
    let root = normalize(f, k)?;
    let m = root.n() as u32 - k;
    let memo: Memo = Mutex::new(HashMap::new());
    let engine = Engine { k, m, memo: &memo };

    let (result, max_depth, memo_hits) = if threads <= 1 || root.is_zero_grassmannian() {
        engine.run(&root, 0)
    } else {
        let (plus, minus) = ls_children(&root, k)?;
        let signed: Vec<(bool, AffinePermutation)> = plus
            .into_iter()
            .map(|g| (true, g))
            .chain(minus.into_iter().map(|g| (false, g)))
            .collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("worker pool");
        let parts: Vec<(bool, SchurVector, usize, usize)> = pool.install(|| {
            signed
                .into_par_iter()
                .map(|(sign, child)| {
                    let (value, depth, hits) = engine.run(&child, 1);
                    (sign, value, depth, hits)
                })
                .collect()
        });
        let mut value = SchurVector::zero(k, m);
        let mut max_depth = 0;
        let mut hits = 0;
        for (sign, part, depth, part_hits) in parts {
            if sign {
                value.add_assign(&part).expect("same ring");
            } else {
                value.sub_assign(&part).expect("same ring");
            }
            max_depth = max_depth.max(depth);
            hits += part_hits;
        }
        memo.lock()
            .unwrap()
            .insert(root.window().to_vec(), value.clone());
        (value, max_depth, hits)
    };

    let nodes = memo.lock().unwrap().len();
    Ok(LsExpansion {
        root,
        k,
        result,
        stats: ExpansionStats {
            nodes,
            max_depth,
            memo_hits,
        },
    })
}
