use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SchurError;

/// A partition λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ > 0) of a nonnegative integer.
///
/// The stored part list is canonical — weakly decreasing with no zero parts —
/// so structural equality coincides with equality of partitions, and the
/// derived `Ord` (lexicographic on parts) is a valid map key order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from a weakly decreasing part list.  Trailing
    /// zeros are stripped; any increase (including an interior zero) is
    /// rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, SchurError> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchurError::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Builds a partition by sorting arbitrary nonnegative values
    /// decreasingly and dropping zeros (e.g. sorting a Lehmer code).
    pub fn from_unsorted(values: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = values.into_iter().filter(|&v| v > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of (positive) parts, ℓ(λ).
    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// The i-th part (0-indexed), 0 beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// |λ|, the number of boxes.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The conjugate (transpose) partition λ^t.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.0.iter().take_while(|&&p| p as usize > j).count() as u32);
        }
        Partition(parts)
    }

    /// Dominance order: λ ≤ μ iff λ_1+…+λ_i ≤ μ_1+…+μ_i for all i.
    /// Only partitions of equal size are comparable.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, SchurError> {
        if self.size() != other.size() {
            return Err(SchurError::SizeMismatch(self.clone(), other.clone()));
        }
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..self.num_parts().max(other.num_parts()) {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether λ fits inside the k × m rectangle (at most k parts, each ≤ m).
    pub fn fits_in_rect(&self, k: u32, m: u32) -> bool {
        self.num_parts() as u32 <= k && self.part(0) <= m
    }

    /// The complement λ^∨ inside the k × m rectangle: the partition whose
    /// diagram is the 180°-rotation of the rectangle minus λ.
    pub fn complement(&self, k: u32, m: u32) -> Result<Partition, SchurError> {
        if !self.fits_in_rect(k, m) {
            return Err(SchurError::RectangleOverflow(self.clone(), k, m));
        }
        let parts: Vec<u32> = (0..k as usize)
            .rev()
            .map(|i| m - self.part(i))
            .collect();
        Partition::new(parts)
    }

    /// Adds one box at the end of the given 0-indexed row, returning `None`
    /// if the result is not a partition shape.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row > self.num_parts() {
            return None;
        }
        let above = if row == 0 { u32::MAX } else { self.part(row - 1) };
        if self.part(row) >= above {
            return None;
        }
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = SchurError;

    /// Parses "[2,1]" (brackets optional; "[]" and "" are the empty partition).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = inner.split(',').map(|t| t.trim().parse()).collect();
        let parts = parts.map_err(|_| SchurError::InvalidPartition(Vec::new()))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `size` with at most `max_len` parts, each part ≤ `max_part`,
/// in lexicographically decreasing order.
pub fn partitions_bounded(size: u64, max_part: u32, max_len: u32) -> Vec<Partition> {
    fn rec(remaining: u64, max_part: u32, slots: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 || u64::from(max_part) * u64::from(slots) < remaining {
            return;
        }
        let hi = max_part.min(remaining.min(u64::from(u32::MAX)) as u32);
        for p in (1..=hi).rev() {
            prefix.push(p);
            rec(remaining - u64::from(p), p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `size`, unrestricted shape.
pub fn partitions_of_size(size: u64) -> Vec<Partition> {
    let cap = size.min(u64::from(u32::MAX)) as u32;
    partitions_bounded(size, cap.max(1), cap.max(1))
}
