use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SchurError;
use crate::partition::Partition;
use crate::tableau::syt_count;

/// An element of the truncated ring Λ^m(k): an integer combination of Schur
/// functions s_λ with λ inside the k × m rectangle.
///
/// Truncation is the quotient map, applied eagerly: inserting a term whose
/// partition leaves the rectangle silently discards it.  Vectors over
/// different (k, m) are elements of different rings, and arithmetic between
/// them is refused rather than coerced.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurVector {
    k: u32,
    m: u32,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn zero(k: u32, m: u32) -> Self {
        SchurVector { k, m, terms: BTreeMap::new() }
    }

    /// The basis vector s_λ, or zero if λ does not fit the rectangle.
    pub fn schur(k: u32, m: u32, shape: &Partition) -> Self {
        let mut v = SchurVector::zero(k, m);
        v.insert(shape.clone(), BigInt::from(1));
        v
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c · s_λ`, truncating out-of-rectangle terms and dropping zeros.
    pub fn insert(&mut self, shape: Partition, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() || !shape.fits_in_rect(self.k, self.m) {
            return;
        }
        match self.terms.entry(shape) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The coefficient of s_λ (zero if absent).
    pub fn coeff(&self, shape: &Partition) -> BigInt {
        self.terms.get(shape).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates terms in lexicographic partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    fn check_ring(&self, other: &SchurVector) -> Result<(), SchurError> {
        if (self.k, self.m) != (other.k, other.m) {
            return Err(SchurError::RingMismatch(self.k, self.m, other.k, other.m));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurVector) -> Result<SchurVector, SchurError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (shape, c) in &other.terms {
            out.insert(shape.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchurVector) -> Result<SchurVector, SchurError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (shape, c) in &other.terms {
            out.insert(shape.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &SchurVector) -> Result<(), SchurError> {
        self.check_ring(other)?;
        for (shape, c) in &other.terms {
            self.insert(shape.clone(), c.clone());
        }
        Ok(())
    }

    pub fn sub_assign(&mut self, other: &SchurVector) -> Result<(), SchurError> {
        self.check_ring(other)?;
        for (shape, c) in &other.terms {
            self.insert(shape.clone(), -c.clone());
        }
        Ok(())
    }

    pub fn scale(&self, c: &BigInt) -> SchurVector {
        if c.is_zero() {
            return SchurVector::zero(self.k, self.m);
        }
        SchurVector {
            k: self.k,
            m: self.m,
            terms: self.terms.iter().map(|(s, v)| (s.clone(), v * c)).collect(),
        }
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Pieri step: multiply by s_1 inside the truncated ring.  Each s_λ maps
    /// to the sum of s_{λ + box} over addable corners, with terms leaving
    /// the rectangle truncated away.
    pub fn multiply_by_s1(&self) -> SchurVector {
        let mut out = SchurVector::zero(self.k, self.m);
        for (shape, c) in &self.terms {
            for row in 0..=shape.num_parts() {
                if let Some(grown) = shape.add_box(row) {
                    out.insert(grown, c.clone());
                }
            }
        }
        out
    }

    /// The involution s_λ ↦ s_{λ^t}, landing in the transposed ring Λ^k(m).
    pub fn omega_dual(&self) -> SchurVector {
        let mut out = SchurVector::zero(self.m, self.k);
        for (shape, c) in &self.terms {
            out.insert(shape.conjugate(), c.clone());
        }
        out
    }

    /// The linear functional δ(s_λ) = f^{λ^∨}: counts standard tableaux of
    /// the rectangle complement.
    pub fn delta(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (shape, c) in &self.terms {
            let comp = shape
                .complement(self.k, self.m)
                .expect("stored terms fit the rectangle");
            total += c * BigInt::from(syt_count(&comp));
        }
        total
    }
}

impl fmt::Display for SchurVector {
    /// Renders e.g. `s[2,1] + 2 * s[1,1,1] - s[3]`; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (shape, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == BigInt::from(1) {
                write!(f, "s{shape}")?;
            } else {
                write!(f, "{mag} * s{shape}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})-ring ", self.k, self.m)?;
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: serde_json::Number,
}

impl Serialize for SchurVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Result<Vec<TermRepr>, S::Error> = self
            .terms
            .iter()
            .map(|(shape, c)| {
                serde_json::Number::from_str(&c.to_string())
                    .map(|coeff| TermRepr { partition: shape.clone(), coeff })
                    .map_err(|e| serde::ser::Error::custom(e.to_string()))
            })
            .collect();
        let mut st = serializer.serialize_struct("SchurVector", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("terms", &terms?)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SchurVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            k: u32,
            m: u32,
            terms: Vec<TermRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut v = SchurVector::zero(repr.k, repr.m);
        for term in repr.terms {
            let c = BigInt::from_str(&term.coeff.to_string())
                .map_err(|_| D::Error::custom("coefficient is not an integer"))?;
            if !term.partition.fits_in_rect(repr.k, repr.m) {
                return Err(D::Error::custom(format!(
                    "partition {} outside the {}x{} rectangle",
                    term.partition, repr.k, repr.m
                )));
            }
            v.insert(term.partition, c);
        }
        Ok(v)
    }
}
