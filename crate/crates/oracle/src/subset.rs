use crate::OracleError;
use affperm::AffinePermutation;
use std::collections::BTreeSet;

/// A proper subset of the residues `Z/nZ`, indexing a cyclically decreasing
/// affine permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubset {
    n: usize,
    members: BTreeSet<u32>,
}

impl CyclicSubset {
    /// Builds a proper residue subset of `Z/nZ`.
    ///
    /// # Errors
    ///
    /// - [`OracleError::ResidueOutOfRange`] if any residue is `>= n`.
    /// - [`OracleError::FullSubset`] if every residue of `Z/nZ` is present:
    ///   the full set would index an infinite decreasing word.
    pub fn new(n: usize, residues: impl IntoIterator<Item = u32>) -> Result<Self, OracleError> {
        assert!(n > 0, "the residue ring Z/nZ needs n >= 1");
        let mut members = BTreeSet::new();
        for residue in residues {
            if residue as usize >= n {
                return Err(OracleError::ResidueOutOfRange { residue, n });
            }
            members.insert(residue);
        }
        if members.len() == n {
            return Err(OracleError::FullSubset { n });
        }
        Ok(CyclicSubset { n, members })
    }

    /// The modulus of the residue ring.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The number of residues in the subset.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Whether the subset is empty.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether `residue` belongs to the subset.
    pub fn contains(&self, residue: u32) -> bool {
        self.members.contains(&residue)
    }

    /// The residues in increasing order.
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }
}

/// The simple reflection `s_i` of the affine symmetric group on `n` letters,
/// for `i` in `0..n`. For `i >= 1` it swaps `i` and `i + 1`; `s_0` swaps
/// `0` and `1` (equivalently `n` and `n + 1`).
pub fn simple_reflection(n: usize, i: u32) -> AffinePermutation {
    assert!((i as usize) < n, "simple reflection index {i} out of range for n = {n}");
    let mut window: Vec<i64> = (1..=n as i64).collect();
    if i == 0 {
        window[0] = 0;
        window[n - 1] = n as i64 + 1;
    } else {
        window.swap(i as usize - 1, i as usize);
    }
    AffinePermutation::from_window(n, window).expect("a simple reflection window is valid")
}

/// The cyclically decreasing affine permutation indexed by a proper residue
/// subset.
///
/// The subset splits into maximal runs of cyclically consecutive residues
/// `a, a+1, ..., b`; each run contributes the factor
/// `s_b s_{b-1} ... s_a`, and distinct runs commute because they share no
/// adjacent residues. The result has length equal to the subset size, with
/// one reduced word per linear extension of the commuting runs.
pub fn cyclically_decreasing_from_subset(subset: &CyclicSubset) -> AffinePermutation {
    let n = subset.n();
    let modulus = n as u32;
    let mut element = AffinePermutation::identity(n);
    for start in subset.members() {
        let previous = (start + modulus - 1) % modulus;
        if subset.contains(previous) {
            // Not the first residue of its run; the run starting earlier
            // already covers it.
            continue;
        }
        let mut run = vec![start];
        let mut current = start;
        loop {
            let next = (current + 1) % modulus;
            if subset.contains(next) {
                run.push(next);
                current = next;
            } else {
                break;
            }
        }
        for &index in run.iter().rev() {
            element = element
                .compose(&simple_reflection(n, index))
                .expect("factors share the same modulus");
        }
    }
    debug_assert_eq!(
        element.length(),
        subset.len() as u64,
        "a cyclically decreasing word is reduced"
    );
    element
}
