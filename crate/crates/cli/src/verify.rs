//! The `verify` subcommand: sweeps the fast pipelines against brute-force
//! reference computations and reports the first disagreement found, together
//! with a reproducing input.

use std::collections::BTreeMap;

use affperm::{enumerate_bounded, AffinePermutation, Diagram};
use bridge::CylindricSkewShape;
use num_bigint::BigInt;
use oracle::{OracleBudget, OracleError};
use schurring::Partition;

/// A disagreement or a budget overrun found while cross-checking.
pub enum VerifyError {
    /// Two pipelines disagree; the message contains a reproducing input.
    Mismatch(String),
    /// A reference computation refused to run at the requested size.
    Budget(String),
}

impl From<OracleError> for VerifyError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => VerifyError::Budget(e.to_string()),
            other => VerifyError::Mismatch(other.to_string()),
        }
    }
}

/// Bundled window fixture: a 4-periodic class known to expand to s[2,2].
const WINDOW_FIXTURE: [i64; 4] = [5, 2, 7, 4];

/// Bundled cylinder fixture: a 12-cell toric shape on the 4-by-5 cylinder,
/// with the bounded window its encoding must produce.
const CYLINDER_LOWER: &str = "VHVVHHVHH";
const CYLINDER_UPPER: &str = "HVHHVHVHV";
const CYLINDER_OFFSET: i64 = 1;
const CYLINDER_WINDOW: [i64; 9] = [7, 4, 10, 12, 6, 8, 14, 9, 11];

/// Runs every sweep in order and returns the number of bounded permutations
/// cross-checked against the reference expansion.
pub fn run_verify(
    max_n: usize,
    budget: &OracleBudget,
    threads: usize,
) -> Result<u64, VerifyError> {
    invariant_sweep(max_n)?;
    let checked = agreement_sweep(max_n, budget, threads)?;
    duality_sweep(max_n, threads)?;
    toric_fixture_checks(budget)?;
    three_row_sweep(budget)?;
    Ok(checked)
}

/// A command line reproducing the expansion of `f` at rank `k`.
fn repro(f: &AffinePermutation, k: u32) -> String {
    let window: Vec<String> = f.window().iter().map(i64::to_string).collect();
    format!("expand --n {} --k {k} --window {}", f.n(), window.join(","))
}

fn for_each_bounded(
    max_n: usize,
    mut body: impl FnMut(usize, u32, AffinePermutation) -> Result<(), VerifyError>,
) -> Result<(), VerifyError> {
    for n in 1..=max_n {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                body(n, k, f)?;
            }
        }
    }
    Ok(())
}

/// Structural invariants of bounded windows: class membership, code/length
/// agreement, inverse arithmetic, and the diagram row/column bounds.
fn invariant_sweep(max_n: usize) -> Result<(), VerifyError> {
    for_each_bounded(max_n, |n, k, f| {
        let fail = |what: &str| {
            VerifyError::Mismatch(format!(
                "{what} fails for window {:?} (n = {n}, k = {k})",
                f.window()
            ))
        };
        if f.bounded_class() != Some(k) {
            return Err(fail("bounded-class detection"));
        }
        if !f.in_t_bound(k) {
            return Err(fail("shift-orbit membership"));
        }
        let code_sum: u64 = f.code().entries().iter().map(|&c| u64::from(c)).sum();
        if code_sum != f.length() {
            return Err(fail("code/length agreement"));
        }
        if f.inverse().inverse() != f {
            return Err(fail("inverse involution"));
        }
        if f.compose(&f.inverse()).expect("equal periods") != AffinePermutation::identity(n) {
            return Err(fail("inverse composition"));
        }
        let diagram = f.rothe_diagram();
        if diagram.cells().count() as u64 != f.length() {
            return Err(fail("diagram size"));
        }
        if diagram.row_sizes().iter().any(|&r| r > n - k as usize) {
            return Err(fail("diagram row bound"));
        }
        if diagram.column_sizes().iter().any(|&c| c > k as usize) {
            return Err(fail("diagram column bound"));
        }
        if AffinePermutation::from_window(n, f.window().to_vec()).as_ref() != Ok(&f) {
            return Err(fail("window round-trip"));
        }
        Ok(())
    })
}

/// Tree expansion versus the truncated affine Stanley reference, for every
/// bounded window of period at most `max_n`.
fn agreement_sweep(
    max_n: usize,
    budget: &OracleBudget,
    threads: usize,
) -> Result<u64, VerifyError> {
    let mut checked = 0u64;
    for_each_bounded(max_n, |_, k, f| {
        let tree = lstree::expand_with_threads(&f, k, threads)
            .map_err(|e| VerifyError::Mismatch(format!("{} rejected: {e}", repro(&f, k))))?;
        let reference = oracle::affine_stanley_truncated(&f, k, budget)?;
        if tree.result() != &reference {
            return Err(VerifyError::Mismatch(format!(
                "{}: tree gives {}, reference gives {}",
                repro(&f, k),
                tree.result(),
                reference
            )));
        }
        checked += 1;
        Ok(())
    })?;
    Ok(checked)
}

/// The conjugation identity: the dual of the expansion of `f` at rank `k`
/// equals the expansion of the inverse window at rank `n - k`.
fn duality_sweep(max_n: usize, threads: usize) -> Result<(), VerifyError> {
    for_each_bounded(max_n, |n, k, f| {
        let direct = lstree::expand_with_threads(&f, k, threads)
            .map_err(|e| VerifyError::Mismatch(format!("{} rejected: {e}", repro(&f, k))))?;
        let inverse = f.inverse();
        let dual_rank = n as u32 - k;
        let dual = lstree::expand_with_threads(&inverse, dual_rank, threads).map_err(|e| {
            VerifyError::Mismatch(format!("{} rejected: {e}", repro(&inverse, dual_rank)))
        })?;
        if direct.result().omega_dual() != *dual.result() {
            return Err(VerifyError::Mismatch(format!(
                "conjugation duality fails between {} and {}",
                repro(&f, k),
                repro(&inverse, dual_rank)
            )));
        }
        Ok(())
    })
}

/// The bundled fixtures: the frozen window expansion, the cylinder encoding
/// with its pipeline equality, and tableau-counted toric expansions on small
/// shapes.
fn toric_fixture_checks(budget: &OracleBudget) -> Result<(), VerifyError> {
    let f = AffinePermutation::from_window(4, WINDOW_FIXTURE.to_vec()).expect("fixture window");
    let expansion = lstree::expand(&f, 2)
        .map_err(|e| VerifyError::Mismatch(format!("{} rejected: {e}", repro(&f, 2))))?;
    let expected = schurring::SchurVector::schur(
        2,
        2,
        &Partition::new(vec![2, 2]).expect("fixture shape"),
    );
    if expansion.result() != &expected {
        return Err(VerifyError::Mismatch(format!(
            "{}: expected s[2,2], got {}",
            repro(&f, 2),
            expansion.result()
        )));
    }

    let shape = CylindricSkewShape::from_words(CYLINDER_LOWER, CYLINDER_UPPER, CYLINDER_OFFSET)
        .expect("fixture words");
    let encoded = bridge::f_from_cylindric_shape(&shape)
        .map_err(|e| VerifyError::Mismatch(format!("cylinder fixture rejected: {e}")))?;
    if encoded.window() != CYLINDER_WINDOW {
        return Err(VerifyError::Mismatch(format!(
            "cylinder fixture encodes to {:?}, expected {:?}",
            encoded.window(),
            CYLINDER_WINDOW
        )));
    }
    if encoded.length() != shape.size() {
        return Err(VerifyError::Mismatch(format!(
            "cylinder fixture window has length {}, expected the cell count {}",
            encoded.length(),
            shape.size()
        )));
    }
    let toric = bridge::toric_gw_expand(&shape)
        .map_err(|e| VerifyError::Mismatch(format!("cylinder fixture rejected: {e}")))?;
    let direct = lstree::expand(&encoded, shape.k()).map_err(|e| {
        VerifyError::Mismatch(format!("{} rejected: {e}", repro(&encoded, shape.k())))
    })?;
    if &toric != direct.result() {
        return Err(VerifyError::Mismatch(format!(
            "toric --lower {CYLINDER_LOWER} --upper {CYLINDER_UPPER} --offset {CYLINDER_OFFSET} \
             gives {toric}, but {} gives {}",
            repro(&encoded, shape.k()),
            direct.result()
        )));
    }

    let small: [(&[i64], &[i64], u32); 3] = [
        (&[0, 1], &[2, 3], 3),
        (&[0, 0, 1], &[2, 2, 3], 2),
        (&[0, 2], &[3, 4], 4),
    ];
    for (lower, upper, m) in small {
        let shape = CylindricSkewShape::from_profiles(lower, upper, m).expect("fixture profiles");
        let tableaux = oracle::cylindric_schur(&shape, budget)?;
        let toric = bridge::toric_gw_expand(&shape)
            .map_err(|e| VerifyError::Mismatch(format!("small toric fixture rejected: {e}")))?;
        if tableaux.out_of_rectangle || tableaux.vector != toric {
            return Err(VerifyError::Mismatch(format!(
                "toric --lower {} --upper {} --offset {}: tableaux give {}, pipeline gives {}",
                shape.lower_word(),
                shape.upper_word(),
                shape.offset(),
                tableaux.vector,
                toric
            )));
        }
    }
    Ok(())
}

/// Three-row decomposition versus the symmetrizer-rank reference on every
/// diagram with at most five cells inside a 3-by-3 grid.
fn three_row_sweep(budget: &OracleBudget) -> Result<(), VerifyError> {
    let grid: Vec<(i64, i64)> =
        (1..=3).flat_map(|r| (1..=3).map(move |c| (r, c))).collect();
    for bits in 0u32..1 << grid.len() {
        if bits.count_ones() > 5 {
            continue;
        }
        let cells: Vec<(i64, i64)> = grid
            .iter()
            .enumerate()
            .filter(|&(x, _)| bits >> x & 1 == 1)
            .map(|(_, &cell)| cell)
            .collect();
        let diagram = Diagram::planar(cells);
        let fast = bridge::three_row_decompose(&diagram, 3).map_err(|e| {
            VerifyError::Mismatch(format!(
                "three-row --diagram {:?} --k 3 rejected: {e}",
                inline_diagram(&diagram)
            ))
        })?;
        let reference = oracle::schur_module_character(&diagram, 3, budget)?;
        if fast != reference {
            return Err(VerifyError::Mismatch(format!(
                "three-row --diagram {:?} --k 3: decomposition gives {}, rank reference gives {}",
                inline_diagram(&diagram),
                render_map(&fast),
                render_map(&reference)
            )));
        }
    }
    Ok(())
}

fn inline_diagram(diagram: &Diagram) -> String {
    diagram.to_string().replace('\n', "; ")
}

fn render_map(map: &BTreeMap<Partition, BigInt>) -> String {
    if map.is_empty() {
        return "0".to_owned();
    }
    map.iter()
        .map(|(shape, coeff)| format!("{coeff} * s{shape}"))
        .collect::<Vec<_>>()
        .join(" + ")
}
