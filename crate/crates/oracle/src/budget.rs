/// Size caps that keep the exponential reference algorithms honest.
///
/// Every brute-force entry point checks its input against these limits and
/// returns [`OracleError::BudgetExceeded`](crate::OracleError::BudgetExceeded)
/// rather than silently running forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest permutation length admitted by the affine Stanley expansion.
    pub max_stanley_length: u64,
    /// Largest cylindric shape (in cells) admitted by tableau enumeration.
    pub max_cylindric_cells: u64,
    /// Largest diagram (in cells) admitted by the Schur-module rank computation.
    pub max_module_cells: u64,
    /// Largest number of variables admitted by the Schur-module rank computation.
    pub max_module_dim: u32,
    /// Largest number of saturated chains admitted by chain enumeration.
    pub max_chains: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_stanley_length: 10,
            max_cylindric_cells: 14,
            max_module_cells: 8,
            max_module_dim: 3,
            max_chains: 1_000_000,
        }
    }
}

impl OracleBudget {
    /// Replaces every cap with `cap`, never lowering a default floor: the
    /// chain cap stays at least its default, and the dimension cap at least
    /// three. Used by the command-line `--budget` flag.
    pub fn with_cap(cap: u64) -> Self {
        let defaults = OracleBudget::default();
        OracleBudget {
            max_stanley_length: cap,
            max_cylindric_cells: cap,
            max_module_cells: cap,
            max_module_dim: u32::try_from(cap.min(1_000)).expect("clamped").max(defaults.max_module_dim),
            max_chains: cap.max(defaults.max_chains),
        }
    }
}
