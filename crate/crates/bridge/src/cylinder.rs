use std::fmt;

use affperm::{AffinePermutation, Diagram};
use schurring::SchurVector;

use crate::BridgeError;

/// One step of a boundary path, read west to east: `V` drops one row south,
/// `H` moves one column east.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    V,
    H,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::V => "V",
            Step::H => "H",
        })
    }
}

fn parse_word(word: &str) -> Result<Vec<Step>, BridgeError> {
    word.chars()
        .map(|c| match c {
            'V' | 'v' => Ok(Step::V),
            'H' | 'h' => Ok(Step::H),
            other => Err(BridgeError::InvalidPath(format!(
                "unexpected character {other:?}; paths are words in V and H"
            ))),
        })
        .collect()
}

fn word_string(word: &[Step]) -> String {
    word.iter().map(Step::to_string).collect()
}

/// The x-coordinates of the `V` steps of a path word whose start lies at
/// `(start_x, 0)`: entry `r−1` is the column of the step covering row `r`.
fn word_profile(word: &[Step], start_x: i64) -> Vec<i64> {
    let mut x = start_x;
    let mut out = Vec::new();
    for step in word {
        match step {
            Step::V => out.push(x),
            Step::H => x += 1,
        }
    }
    out
}

/// A skew shape on the cylinder `C_{k,m}`: the cells between two
/// non-crossing staircase paths, each with `k` south and `m` east steps per
/// period, repeating under the translation `(row, col) ↦ (row + k, col + m)`.
/// Row `r` of the fundamental window consists of the cells in columns
/// `(L(r), U(r)]`, where `L` and `U` are the step profiles of the lower
/// (southwest) and upper (northeast) paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricSkewShape {
    k: u32,
    m: u32,
    lower: Vec<Step>,
    upper: Vec<Step>,
    offset: i64,
}

impl CylindricSkewShape {
    /// Builds a shape from two path words and the horizontal offset of the
    /// upper path's start relative to the lower path's start.
    pub fn from_words(lower: &str, upper: &str, offset: i64) -> Result<Self, BridgeError> {
        let lower = parse_word(lower)?;
        let upper = parse_word(upper)?;
        let count = |w: &[Step], s: Step| w.iter().filter(|&&x| x == s).count();
        let k = count(&lower, Step::V);
        let m = count(&lower, Step::H);
        if count(&upper, Step::V) != k || count(&upper, Step::H) != m {
            return Err(BridgeError::InvalidPath(format!(
                "step counts differ: lower has {k} V and {m} H, upper has {} V and {} H",
                count(&upper, Step::V),
                count(&upper, Step::H)
            )));
        }
        if k == 0 || m == 0 {
            return Err(BridgeError::InvalidPath(
                "paths need at least one V and one H per period".into(),
            ));
        }
        let shape = CylindricSkewShape { k: k as u32, m: m as u32, lower, upper, offset };
        let (low, up) = (shape.lower_profile(), shape.upper_profile());
        for r in 0..k {
            if low[r] > up[r] {
                return Err(BridgeError::InvalidPath(format!(
                    "paths cross: row {} has lower boundary {} east of upper boundary {}",
                    r + 1,
                    low[r],
                    up[r]
                )));
            }
        }
        Ok(shape)
    }

    /// Builds a shape from its row profiles: row `r` spans the columns
    /// `(lower[r−1], upper[r−1]]` on the cylinder with horizontal period `m`.
    pub fn from_profiles(lower: &[i64], upper: &[i64], m: u32) -> Result<Self, BridgeError> {
        if lower.len() != upper.len() || lower.is_empty() {
            return Err(BridgeError::InvalidPath(format!(
                "profiles must have equal positive lengths, got {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        if m == 0 {
            return Err(BridgeError::InvalidPath("horizontal period must be positive".into()));
        }
        let k = lower.len();
        let word_from = |profile: &[i64]| -> Result<Vec<Step>, BridgeError> {
            let mut word = Vec::with_capacity(k + m as usize);
            for r in 0..k {
                word.push(Step::V);
                let next = if r + 1 < k { profile[r + 1] } else { profile[0] + i64::from(m) };
                let run = next - profile[r];
                if run < 0 {
                    return Err(BridgeError::InvalidPath(format!(
                        "profile {profile:?} is not weakly increasing with period {m}"
                    )));
                }
                word.extend(std::iter::repeat(Step::H).take(run as usize));
            }
            Ok(word)
        };
        let shift = lower[0];
        let low: Vec<i64> = lower.iter().map(|x| x - shift).collect();
        let up: Vec<i64> = upper.iter().map(|x| x - shift).collect();
        for r in 0..k {
            if low[r] > up[r] {
                return Err(BridgeError::InvalidPath(format!(
                    "paths cross: row {} has lower profile {} east of upper profile {}",
                    r + 1,
                    lower[r],
                    upper[r]
                )));
            }
        }
        Ok(CylindricSkewShape {
            k: k as u32,
            m,
            lower: word_from(&low)?,
            upper: word_from(&up)?,
            offset: up[0],
        })
    }

    /// Embeds the planar skew shape `outer/inner` in `C_{k,m}`, with the
    /// first (longest) partition row placed as fundamental row `k`.
    pub fn from_partitions(
        outer: &schurring::Partition,
        inner: &schurring::Partition,
        k: u32,
        m: u32,
    ) -> Result<Self, BridgeError> {
        if !outer.fits_in_rect(k, m) {
            return Err(BridgeError::RectangleOverflow { shape: outer.clone(), k, m });
        }
        if !(0..outer.num_parts().max(inner.num_parts()))
            .all(|i| inner.part(i) <= outer.part(i))
        {
            return Err(BridgeError::InvalidPath(format!(
                "inner shape {inner} is not contained in outer shape {outer}"
            )));
        }
        let lower: Vec<i64> = (1..=k as usize)
            .map(|r| i64::from(inner.part(k as usize - r)))
            .collect();
        let upper: Vec<i64> = (1..=k as usize)
            .map(|r| i64::from(outer.part(k as usize - r)))
            .collect();
        Self::from_profiles(&lower, &upper, m)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The period `n = k + m` of the attached affine permutations.
    pub fn n(&self) -> usize {
        (self.k + self.m) as usize
    }

    pub fn lower_word(&self) -> String {
        word_string(&self.lower)
    }

    pub fn upper_word(&self) -> String {
        word_string(&self.upper)
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Column of the lower path's step through row `r`, for `r = 1..=k`.
    pub fn lower_profile(&self) -> Vec<i64> {
        word_profile(&self.lower, 0)
    }

    /// Column of the upper path's step through row `r`, for `r = 1..=k`.
    pub fn upper_profile(&self) -> Vec<i64> {
        word_profile(&self.upper, self.offset)
    }

    /// The cells of the fundamental window, row by row.
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let (low, up) = (self.lower_profile(), self.upper_profile());
        let mut out = Vec::new();
        for r in 0..self.k as usize {
            for c in low[r] + 1..=up[r] {
                out.push((r as i64 + 1, c));
            }
        }
        out
    }

    /// Number of cells per period.
    pub fn size(&self) -> u64 {
        let (low, up) = (self.lower_profile(), self.upper_profile());
        (0..self.k as usize).map(|r| (up[r] - low[r]) as u64).sum()
    }

    /// Sizes of the nonempty rows.
    pub fn row_sizes(&self) -> Vec<usize> {
        let (low, up) = (self.lower_profile(), self.upper_profile());
        (0..self.k as usize)
            .map(|r| (up[r] - low[r]) as usize)
            .filter(|&s| s > 0)
            .collect()
    }

    /// Sizes of the nonempty cylinder columns (column residues mod `m`).
    pub fn column_sizes(&self) -> Vec<usize> {
        self.to_diagram().column_sizes()
    }

    /// Whether the shape embeds injectively in the torus: no row is longer
    /// than the horizontal period `m`.
    pub fn is_toric(&self) -> bool {
        let (low, up) = (self.lower_profile(), self.upper_profile());
        (0..self.k as usize).all(|r| up[r] - low[r] <= i64::from(self.m))
    }

    /// The cells as a cylindric diagram on `C_{k,m}`.
    pub fn to_diagram(&self) -> Diagram {
        Diagram::cylindric(self.k, self.m, self.cells())
    }
}

impl fmt::Display for CylindricSkewShape {
    /// `lower=VH… upper=VH… offset=d` — enough to reconstruct the shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lower={} upper={} offset={}",
            self.lower_word(),
            self.upper_word(),
            self.offset
        )
    }
}

/// The bounded affine permutation of a cylindric skew shape: lower path
/// positions map to upper path positions matching the same row (for `V`
/// steps) or the same cylinder column (for `H` steps, with period
/// correction).  The result is shifted into `Bound(k, n)`; shapes that wrap
/// past the torus admit no such shift.
pub fn f_from_cylindric_shape(
    shape: &CylindricSkewShape,
) -> Result<AffinePermutation, BridgeError> {
    let n = shape.n();
    let k = shape.k();
    let m = i64::from(shape.m);
    let mut upper_v = Vec::new();
    let mut upper_h = Vec::new();
    for (pos, step) in shape.upper.iter().enumerate() {
        match step {
            Step::V => upper_v.push(pos as i64 + 1),
            Step::H => upper_h.push(pos as i64 + 1),
        }
    }
    let mut window = Vec::with_capacity(n);
    let mut v_seen = 0usize;
    let mut h_seen = 0i64;
    for step in &shape.lower {
        match step {
            Step::V => {
                window.push(upper_v[v_seen]);
                v_seen += 1;
            }
            Step::H => {
                // The (h_seen+1)-th lower H runs along the column whose west
                // edge is x = h_seen; the j'-th upper H runs along
                // x = offset + j' − 1 + p·m for each period shift p.
                let rel = h_seen - shape.offset;
                let j_prime = rel.rem_euclid(m);
                let period = (rel - j_prime) / m;
                window.push(upper_h[j_prime as usize] + period * n as i64);
                h_seen += 1;
            }
        }
    }
    let f0 = AffinePermutation::from_window(n, window).expect("path matching is bijective");
    let root = f0.shift(i64::from(k) - f0.av());
    if root.bounded_class() != Some(k) {
        return Err(BridgeError::NormalizationFailed { window: f0.window().to_vec() });
    }
    // The Rothe diagram of the image is equivalent to the shape itself: the
    // two have identical row-size and column-size multisets.
    let rothe = root.rothe_diagram();
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    assert_eq!(
        sorted(rothe.row_sizes()),
        sorted(shape.row_sizes()),
        "row sizes of the Rothe diagram match the shape"
    );
    assert_eq!(
        sorted(rothe.column_sizes()),
        sorted(shape.column_sizes()),
        "column sizes of the Rothe diagram match the shape"
    );
    Ok(root)
}

/// The Schur expansion of the toric Schur polynomial of the shape — the
/// Gromov–Witten expansion in the ring tagged `(k, m)`.  Errors with
/// [`BridgeError::NotToric`] when a row wraps past the torus.
pub fn toric_gw_expand(shape: &CylindricSkewShape) -> Result<SchurVector, BridgeError> {
    if !shape.is_toric() {
        return Err(BridgeError::NotToric);
    }
    let f = f_from_cylindric_shape(shape)?;
    assert_eq!(f.length(), shape.size(), "toric shapes keep their full cell count");
    let expansion = lstree::expand(&f, shape.k()).expect("normalized into the bounded class");
    Ok(expansion.into_result())
}
