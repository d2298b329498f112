use num_bigint::BigInt;
use num_traits::Zero;
use schurring::Partition;
use std::collections::BTreeMap;

/// Monomial weight multiplicities of a homogeneous symmetric polynomial in a
/// bounded number of variables, indexed by the partition sorting each weight.
///
/// A table of degree `d` in `vars` variables records, for each partition
/// `mu` of `d` with at most `vars` parts, the coefficient of the monomial
/// `x^mu`. By symmetry this determines every other monomial coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    degree: u64,
    vars: u32,
    entries: BTreeMap<Partition, BigInt>,
}

impl WeightTable {
    /// An empty table for a homogeneous degree-`degree` polynomial in `vars`
    /// variables.
    pub fn new(degree: u64, vars: u32) -> Self {
        WeightTable {
            degree,
            vars,
            entries: BTreeMap::new(),
        }
    }

    /// Adds `coeff` to the multiplicity of the weight `shape`.
    ///
    /// # Panics
    ///
    /// Panics if `shape` does not have size `degree` or has more than `vars`
    /// parts: such a weight cannot occur in the polynomial being tabulated.
    pub fn add(&mut self, shape: Partition, coeff: BigInt) {
        assert_eq!(
            shape.size(),
            self.degree,
            "weight {shape} does not have the table degree {}",
            self.degree
        );
        assert!(
            shape.num_parts() as u32 <= self.vars,
            "weight {shape} uses more than {} variables",
            self.vars
        );
        if coeff.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry(shape.clone())
            .or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.entries.remove(&shape);
        }
    }

    /// The common degree of every tabulated weight.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// The number of variables the table is valid for.
    pub fn vars(&self) -> u32 {
        self.vars
    }

    /// The nonzero multiplicities, keyed by sorted weight.
    pub fn entries(&self) -> &BTreeMap<Partition, BigInt> {
        &self.entries
    }

    /// The multiplicity of the weight `shape` (zero if absent).
    pub fn coeff(&self, shape: &Partition) -> BigInt {
        self.entries.get(shape).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Expands the tabulated polynomial in the Schur basis.
    ///
    /// # Panics
    ///
    /// Panics if the table is not actually symmetric (triangularity against
    /// Kostka numbers fails); the brute-force constructions in this crate
    /// always produce symmetric tables, so this indicates a bug.
    pub fn schur_expansion(&self) -> BTreeMap<Partition, BigInt> {
        if self.entries.is_empty() {
            return BTreeMap::new();
        }
        schurring::schur_expand_from_monomials(&self.entries, self.vars)
            .expect("weight table of a symmetric polynomial must Schur-expand")
    }
}
