use std::fmt;
use std::str::FromStr;

use crate::diagram::Diagram;
use crate::error::AffPermError;

/// An affine permutation of quasi-period `n`: a bijection `f : ℤ → ℤ` with
/// `f(i + n) = f(i) + n`, stored by its window `f(1), …, f(n)`.
///
/// Windows are kept unreduced — values may lie anywhere in ℤ — and equality
/// is window equality.  Orbit equality under the shift `τ` is the separate
/// predicate [`AffinePermutation::t_orbit_eq`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

/// One period of the Lehmer code: `c_i(f) = #{i' > i : f(i) > f(i')}` for
/// `i ∈ [1, n]`.  Entry `i` equals the size of row `i` of the Rothe diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeVector(pub Vec<u32>);

impl CodeVector {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl AffinePermutation {
    /// Builds the permutation with window `f(i) = values[i−1]`, validating
    /// bijectivity (distinct residues) and the displacement-sum condition.
    pub fn from_window(n: usize, values: Vec<i64>) -> Result<Self, AffPermError> {
        assert!(n > 0, "quasi-period must be positive");
        if values.len() != n {
            return Err(AffPermError::WrongWindowLength { expected: n, got: values.len() });
        }
        for (x, &a) in values.iter().enumerate() {
            for &b in &values[x + 1..] {
                if (a - b).rem_euclid(n as i64) == 0 {
                    return Err(AffPermError::DuplicateResidue { a, b, n });
                }
            }
        }
        let sum: i64 = values.iter().enumerate().map(|(x, &v)| v - (x as i64 + 1)).sum();
        if sum.rem_euclid(n as i64) != 0 {
            return Err(AffPermError::BadWindowSum { sum, n });
        }
        Ok(AffinePermutation { n, window: values })
    }

    /// The identity in quasi-period `n`.
    pub fn identity(n: usize) -> Self {
        AffinePermutation { n, window: (1..=n as i64).collect() }
    }

    /// The shift power `τ^j`, acting as `i ↦ i + j`.
    pub fn tau_power(n: usize, j: i64) -> Self {
        AffinePermutation { n, window: (1..=n as i64).map(|i| i + j).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Evaluates `f(i)` for any integer via quasi-periodicity.
    pub fn evaluate(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let q = (i - 1).div_euclid(n);
        let r = (i - 1).rem_euclid(n) as usize;
        self.window[r] + q * n
    }

    /// The composite `f ∘ g`, acting as `i ↦ f(g(i))`.
    pub fn compose(&self, g: &AffinePermutation) -> Result<AffinePermutation, AffPermError> {
        if self.n != g.n {
            return Err(AffPermError::PeriodMismatch(self.n, g.n));
        }
        let window = (1..=self.n as i64).map(|i| self.evaluate(g.evaluate(i))).collect();
        Ok(AffinePermutation { n: self.n, window })
    }

    /// The group inverse, by solving `f(x) = i` within each residue class.
    pub fn inverse(&self) -> AffinePermutation {
        let n = self.n as i64;
        let mut window = vec![0i64; self.n];
        for (x, &v) in self.window.iter().enumerate() {
            // f(x+1) = v, so f((x+1) + t·n) = v + t·n covers v's residue class.
            let r = (v - 1).rem_euclid(n) as usize;
            let t = (r as i64 + 1 - v) / n;
            window[r] = (x as i64 + 1) + t * n;
        }
        AffinePermutation { n: self.n, window }
    }

    /// The average displacement `av(f) = (1/n) Σ (f(i) − i)`, always an
    /// integer; a group homomorphism to ℤ.
    pub fn av(&self) -> i64 {
        let sum: i64 = self.window.iter().enumerate().map(|(x, &v)| v - (x as i64 + 1)).sum();
        sum / self.n as i64
    }

    /// Smallest displacement `min_i (f(i) − i)`; used to bound inversion scans.
    fn min_displacement(&self) -> i64 {
        self.window
            .iter()
            .enumerate()
            .map(|(x, &v)| v - (x as i64 + 1))
            .min()
            .expect("window is nonempty")
    }

    /// The number of inversions `ℓ(f) = #{(i,j) : i ∈ [1,n], i < j, f(i) > f(j)}`.
    ///
    /// For j beyond `f(i) − min_disp` every value satisfies `f(j) ≥ j + min_disp
    /// ≥ f(i)`, so the scan per i is finite.
    pub fn length(&self) -> u64 {
        let min_disp = self.min_displacement();
        let mut count = 0u64;
        for i in 1..=self.n as i64 {
            let fi = self.evaluate(i);
            for j in (i + 1)..=(fi - min_disp - 1) {
                if self.evaluate(j) < fi {
                    count += 1;
                }
            }
        }
        count
    }

    /// One period of the Lehmer code: `c_i = #{j > i : f(i) > f(j)}`.
    pub fn code(&self) -> CodeVector {
        let min_disp = self.min_displacement();
        let mut entries = Vec::with_capacity(self.n);
        for i in 1..=self.n as i64 {
            let fi = self.evaluate(i);
            let c = ((i + 1)..=(fi - min_disp - 1))
                .filter(|&j| self.evaluate(j) < fi)
                .count();
            entries.push(c as u32);
        }
        CodeVector(entries)
    }

    /// Number of inversions of the window word `f(1) … f(n)` alone (both
    /// endpoints inside the window).  This is the first component of the
    /// termination measure for the transition tree.
    pub fn window_inversions(&self) -> u64 {
        let mut count = 0u64;
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.window[a] > self.window[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The Rothe diagram `D(f) = {(i, f(j)) : i < j, f(i) > f(j)}` on the
    /// cylinder `C_{n,n}`, with row representatives in `[1, n]`.
    pub fn rothe_diagram(&self) -> Diagram {
        let min_disp = self.min_displacement();
        let mut cells = Vec::new();
        for i in 1..=self.n as i64 {
            let fi = self.evaluate(i);
            for j in (i + 1)..=(fi - min_disp - 1) {
                let fj = self.evaluate(j);
                if fj < fi {
                    cells.push((i, fj));
                }
            }
        }
        Diagram::cylindric(self.n as u32, self.n as u32, cells)
    }

    /// Returns `k` when `f ∈ Bound(k, n)`: `i ≤ f(i) ≤ i + n` for all `i`,
    /// with `k` the number of window values exceeding `n`.
    pub fn bounded_class(&self) -> Option<u32> {
        let n = self.n as i64;
        for (x, &v) in self.window.iter().enumerate() {
            let i = x as i64 + 1;
            if v < i || v > i + n {
                return None;
            }
        }
        Some(self.window.iter().filter(|&&v| v > n).count() as u32)
    }

    /// Whether `f ∈ T · Bound(k, n)`, i.e. the shift `τ^{k − av(f)} f` is
    /// bounded of class `k`.
    pub fn in_t_bound(&self, k: u32) -> bool {
        let shift = i64::from(k) - self.av();
        let shifted = AffinePermutation {
            n: self.n,
            window: self.window.iter().map(|&v| v + shift).collect(),
        };
        shifted.bounded_class() == Some(k)
    }

    /// Left-composes with `τ^j` (adds `j` to every window value).
    pub fn shift(&self, j: i64) -> AffinePermutation {
        AffinePermutation { n: self.n, window: self.window.iter().map(|&v| v + j).collect() }
    }

    /// Whether `f` and `g` differ by a power of `τ` on the left.
    pub fn t_orbit_eq(&self, other: &AffinePermutation) -> bool {
        self.n == other.n && self.shift(other.av() - self.av()).window == other.window
    }

    /// Right multiplication by the transposition `t_{ij}` (for `i ≢ j` mod n),
    /// which swaps the residue classes of `i` and `j` with offsets `±(j−i)`.
    pub fn right_multiply_t(&self, i: i64, j: i64) -> Result<AffinePermutation, AffPermError> {
        let n = self.n as i64;
        let d = j - i;
        if d.rem_euclid(n) == 0 {
            return Err(AffPermError::EqualResidues { i, j, n: self.n });
        }
        let mut window = Vec::with_capacity(self.n);
        for p in 1..=n {
            let target = if (p - i).rem_euclid(n) == 0 {
                p + d
            } else if (p - j).rem_euclid(n) == 0 {
                p - d
            } else {
                p
            };
            window.push(self.evaluate(target));
        }
        Ok(AffinePermutation { n: self.n, window })
    }

    /// Whether `g` covers `f` in Bruhat order: `g = f·t_{ij}` for some
    /// transposition and `ℓ(g) = ℓ(f) + 1`.
    pub fn is_bruhat_cover(&self, g: &AffinePermutation) -> bool {
        if self.n != g.n {
            return false;
        }
        let n = self.n as i64;
        let diff: Vec<usize> = (0..self.n).filter(|&x| self.window[x] != g.window[x]).collect();
        let [a, b] = diff.as_slice() else { return false };
        // g = f·t swaps the two residue classes: g(a) = f(b) + cn, g(b) = f(a) − cn.
        let c = g.window[*a] - self.window[*b];
        if c.rem_euclid(n) != 0 || g.window[*b] - self.window[*a] != -c {
            return false;
        }
        g.length() == self.length() + 1
    }

    /// The lexicographically maximal window inversion `(r, s)` with
    /// `1 ≤ r < s ≤ n` and `f(r) > f(s)`, or `None` when `f` is
    /// 0-Grassmannian (no window inversion; descents only at multiples of n).
    pub fn max_inversion(&self) -> Option<(i64, i64)> {
        for r in (0..self.n.saturating_sub(1)).rev() {
            for s in (r + 1..self.n).rev() {
                if self.window[r] > self.window[s] {
                    return Some((r as i64 + 1, s as i64 + 1));
                }
            }
        }
        None
    }

    /// Whether the descent set avoids the window, i.e. [`Self::max_inversion`]
    /// is absent.
    pub fn is_zero_grassmannian(&self) -> bool {
        self.max_inversion().is_none()
    }

    /// The shape of a 0-Grassmannian element of `Bound(k, n)`: the sorted
    /// code of `f ∘ τ^{−k}`, which is a k-Grassmannian element of S_n.
    pub fn grassmannian_shape(&self, k: u32) -> Result<schurring::Partition, AffPermError> {
        if !self.is_zero_grassmannian() {
            return Err(AffPermError::NotZeroGrassmannian(self.window.clone()));
        }
        let finite = self
            .compose(&AffinePermutation::tau_power(self.n, -i64::from(k)))
            .expect("equal periods");
        let code = finite.code();
        Ok(schurring::Partition::from_unsorted(code.0))
    }
}

impl fmt::Display for AffinePermutation {
    /// Comma-separated window, e.g. `5,2,7,4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, v) in self.window.iter().enumerate() {
            if x > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]/{}", self, self.n)
    }
}

impl FromStr for AffinePermutation {
    type Err = AffPermError;

    /// Parses a comma-separated window, e.g. `"5,2,7,4"` (brackets optional);
    /// the quasi-period is the number of entries.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let values: Result<Vec<i64>, _> =
            inner.split(',').map(|t| t.trim().parse::<i64>()).collect();
        let values = values.map_err(|_| AffPermError::Parse(s.to_string()))?;
        let n = values.len();
        AffinePermutation::from_window(n, values)
    }
}

/// Enumerates `Bound(k, n)`: all windows with `i ≤ f(i) ≤ i + n`, pairwise
/// distinct residues, and exactly `k` values exceeding `n`.
pub fn enumerate_bounded(k: u32, n: usize) -> Vec<AffinePermutation> {
    // Each residue class mod n is hit exactly once; pick per position.
    fn rec(
        n: usize,
        k: u32,
        pos: usize,
        used: &mut Vec<bool>,
        window: &mut Vec<i64>,
        excess: u32,
        out: &mut Vec<AffinePermutation>,
    ) {
        if pos == n {
            if excess == k {
                out.push(AffinePermutation { n, window: window.clone() });
            }
            return;
        }
        let i = pos as i64 + 1;
        for v in i..=i + n as i64 {
            let r = (v - 1).rem_euclid(n as i64) as usize;
            if used[r] {
                continue;
            }
            let e = excess + u32::from(v > n as i64);
            if e > k {
                continue;
            }
            used[r] = true;
            window.push(v);
            rec(n, k, pos + 1, used, window, e, out);
            window.pop();
            used[r] = false;
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut vec![false; n], &mut Vec::with_capacity(n), 0, &mut out);
    out
}
