//! Acceptance suite: one test per primary acceptance criterion.  Each test
//! prints a single `criterion N PASS` line on success and fails loudly
//! otherwise, so the suite doubles as a checklist.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::{Duration, Instant};

use affperm::{
    bcov, enumerate_bounded, phi_minus_bounded, phi_plus_bounded, AffinePermutation, Diagram,
};
use bridge::{
    f_from_cylindric_shape, f_from_interval, permutation_from_one_line, three_row_decompose,
    toric_gw_expand, BridgeError, CylindricSkewShape, KBruhatInterval,
};
use itertools::Itertools;
use num_bigint::BigInt;
use oracle::{
    affine_stanley_truncated, affine_stanley_weight_table, count_maximal_chains, cylindric_schur,
    schur_module_character, simple_reflection, OracleBudget,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schurring::{Partition, SchurVector};

fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("test partitions are sorted")
}

fn vector_as_map(v: &SchurVector) -> BTreeMap<Partition, BigInt> {
    v.terms().map(|(shape, coeff)| (shape.clone(), coeff.clone())).collect()
}

/// Lazily expanded classes of one `Bound(k, n)`, keyed by window.
struct Classes {
    k: u32,
    cache: HashMap<Vec<i64>, SchurVector>,
}

impl Classes {
    fn new(k: u32) -> Self {
        Classes { k, cache: HashMap::new() }
    }

    fn class(&mut self, f: &AffinePermutation) -> SchurVector {
        self.cache
            .entry(f.window().to_vec())
            .or_insert_with(|| lstree::expand(f, self.k).expect("bounded input").into_result())
            .clone()
    }

    fn sum(&mut self, members: &[AffinePermutation], n: usize) -> SchurVector {
        let mut total = SchurVector::zero(self.k, n as u32 - self.k);
        for g in members {
            total.add_assign(&self.class(g)).expect("same ring");
        }
        total
    }
}

#[test]
fn criterion_1_frozen_window_expands_to_s22_within_a_millisecond() {
    let f = AffinePermutation::from_window(4, vec![5, 2, 7, 4]).expect("fixture window");
    let mut best = Duration::from_secs(3600);
    let mut result = None;
    for _ in 0..50 {
        let clock = Instant::now();
        let expansion = lstree::expand(&f, 2).expect("bounded fixture");
        best = best.min(clock.elapsed());
        result = Some(expansion);
    }
    let expansion = result.expect("ran at least once");
    assert_eq!(
        expansion.result(),
        &SchurVector::schur(2, 2, &partition(&[2, 2])),
        "class of [5,2,7,4] at k = 2"
    );

    // The untruncated symmetric function is s[2,2] + s[2,1,1] - s[1,1,1,1];
    // truncation to the 2x2 rectangle must reproduce the class expansion.
    let full = affine_stanley_weight_table(&f, 4).schur_expansion();
    let expected: BTreeMap<Partition, BigInt> = [
        (partition(&[2, 2]), BigInt::from(1)),
        (partition(&[2, 1, 1]), BigInt::from(1)),
        (partition(&[1, 1, 1, 1]), BigInt::from(-1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(full, expected, "untruncated Schur expansion");
    let truncated: BTreeMap<Partition, BigInt> = full
        .into_iter()
        .filter(|(shape, _)| shape.fits_in_rect(2, 2))
        .collect();
    assert_eq!(truncated, vector_as_map(expansion.result()), "truncation consistency");

    assert!(best < Duration::from_millis(1), "best expansion time was {best:?}");
    println!("criterion 1 PASS: [5,2,7,4] at k = 2 expands to s[2,2], consistent with truncation (best of 50: {best:?})");
}

#[test]
fn criterion_2_cylinder_fixture_encodes_correctly_and_matches_the_tableau_count() {
    let shape = CylindricSkewShape::from_words("VHVVHHVHH", "HVHHVHVHV", 1).expect("fixture");
    let f = f_from_cylindric_shape(&shape).expect("fixture is a valid shape");
    assert_eq!(f.window(), [7, 4, 10, 12, 6, 8, 14, 9, 11], "encoded window");
    assert_eq!(f.bounded_class(), Some(4), "lands in Bound(4, 9)");
    assert_eq!(shape.size(), 12, "twelve cells");
    assert_eq!(f.length(), 12, "degree twelve");

    let toric = toric_gw_expand(&shape).expect("fixture is toric");
    let clock = Instant::now();
    let tableaux = cylindric_schur(&shape, &OracleBudget::default()).expect("within budget");
    let elapsed = clock.elapsed();
    assert!(!tableaux.out_of_rectangle, "all weights fit the 4x5 rectangle");
    assert_eq!(tableaux.vector, toric, "tableau counts equal the pipeline expansion");
    assert!(
        toric.terms().all(|(shape, _)| shape.size() == 12),
        "expansion is homogeneous of degree 12"
    );
    assert!(elapsed < Duration::from_secs(60), "tableau enumeration took {elapsed:?}");
    println!(
        "criterion 2 PASS: cylinder fixture encodes to [7,4,10,12,6,8,14,9,11] and its {} terms match the tableau count (oracle in {elapsed:?})",
        toric.num_terms()
    );
}

#[test]
fn criterion_3_tree_matches_the_stanley_reference_on_every_bounded_class_to_n5() {
    let budget = OracleBudget::default();
    let clock = Instant::now();
    let mut checked = 0u64;
    for n in 1..=5 {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                let tree = lstree::expand(&f, k).expect("enumerated windows are bounded");
                let reference =
                    affine_stanley_truncated(&f, k, &budget).expect("short lengths fit the budget");
                assert_eq!(
                    tree.result(),
                    &reference,
                    "window {:?} at k = {k}",
                    f.window()
                );
                checked += 1;
            }
        }
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(600), "sweep took {elapsed:?}");
    println!("criterion 3 PASS: {checked} bounded classes agree with the truncated reference (in {elapsed:?})");
}

/// All average-zero affine permutations of period `n` with length at most
/// `max_len`, by breadth-first search over right multiplication by simple
/// reflections.
fn affine_zero_up_to_length(n: usize, max_len: u64) -> Vec<AffinePermutation> {
    let identity = AffinePermutation::identity(n);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(identity.window().to_vec());
    let mut out = vec![identity.clone()];
    let mut frontier = vec![identity];
    for length in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..n as u32 {
                let ws = w.compose(&simple_reflection(n, i)).expect("same period");
                if ws.length() == length && seen.insert(ws.window().to_vec()) {
                    next.push(ws);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn criterion_4_truncation_support_equals_membership_equals_diagram_bounds() {
    let budget = OracleBudget::default();
    let clock = Instant::now();
    let mut checked = 0u64;
    for n in 1..=4usize {
        for f in affine_zero_up_to_length(n, 6) {
            let diagram = f.rothe_diagram();
            let max_row = diagram.row_sizes().into_iter().max().unwrap_or(0);
            let max_col = diagram.column_sizes().into_iter().max().unwrap_or(0);
            for k in 0..=n as u32 {
                let truncation_nonzero =
                    !affine_stanley_truncated(&f, k, &budget).expect("length at most 6").is_zero();
                let membership = f.in_t_bound(k);
                let bounds = max_row <= n - k as usize && max_col <= k as usize;
                assert_eq!(
                    truncation_nonzero, membership,
                    "support vs membership at window {:?}, k = {k}",
                    f.window()
                );
                assert_eq!(
                    membership, bounds,
                    "membership vs diagram bounds at window {:?}, k = {k}",
                    f.window()
                );
                checked += 1;
            }
        }
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(300), "sweep took {elapsed:?}");
    println!("criterion 4 PASS: {checked} (window, k) pairs agree on truncation support, orbit membership, and diagram bounds (in {elapsed:?})");
}

#[test]
fn criterion_5_ring_identity_sweeps() {
    // (a) Chevalley: a class times s1 equals the sum of its bounded covers
    // in any column.
    let clock = Instant::now();
    for n in 2..=5usize {
        for k in 0..=n as u32 {
            let mut classes = Classes::new(k);
            for f in enumerate_bounded(k, n) {
                let product = classes.class(&f).multiply_by_s1();
                for r in 0..n as i64 {
                    let covers: Vec<AffinePermutation> = bcov(&f, r)
                        .into_iter()
                        .map(|(i, j)| f.right_multiply_t(i, j).expect("distinct residues"))
                        .collect();
                    assert_eq!(
                        product,
                        classes.sum(&covers, n),
                        "Chevalley at {:?}, column {r}",
                        f.window()
                    );
                }
            }
        }
    }
    let chevalley = clock.elapsed();
    assert!(chevalley < Duration::from_secs(300), "Chevalley sweep took {chevalley:?}");

    // (b) Transition: the signed sums below and above a pivot agree in every
    // column.
    let clock = Instant::now();
    for n in 2..=5usize {
        for k in 0..=n as u32 {
            let mut classes = Classes::new(k);
            for f in enumerate_bounded(k, n) {
                for r in 0..n as i64 {
                    let lower = classes.sum(&phi_minus_bounded(&f, r, k), n);
                    let upper = classes.sum(&phi_plus_bounded(&f, r, k), n);
                    assert_eq!(lower, upper, "transition at {:?}, column {r}", f.window());
                }
            }
        }
    }
    let transition = clock.elapsed();
    assert!(transition < Duration::from_secs(300), "transition sweep took {transition:?}");

    // (c) Duality: conjugating the expansion of f gives the expansion of its
    // inverse at the complementary rank.
    let clock = Instant::now();
    for n in 1..=5usize {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                let dual = lstree::expand(&f, k).expect("bounded").result().omega_dual();
                let inverse = lstree::expand(&f.inverse(), n as u32 - k).expect("bounded");
                assert_eq!(&dual, inverse.result(), "duality at {:?}", f.window());
            }
        }
    }
    let duality = clock.elapsed();
    assert!(duality < Duration::from_secs(300), "duality sweep took {duality:?}");

    // (d) Positivity: every class expansion is nonzero and Schur-positive.
    let clock = Instant::now();
    for n in 1..=5usize {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                let expansion = lstree::expand(&f, k).expect("bounded");
                assert!(!expansion.result().is_zero(), "zero class at {:?}", f.window());
                assert!(
                    expansion.result().is_schur_positive(),
                    "negative coefficient at {:?}: {}",
                    f.window(),
                    expansion.result()
                );
            }
        }
    }
    let positivity = clock.elapsed();
    assert!(positivity < Duration::from_secs(300), "positivity sweep took {positivity:?}");

    // (e) Leading monomial: the conjugate of the diagram's column lengths is
    // the dominance-largest weight and carries coefficient one.
    let clock = Instant::now();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    for n in 1..=5usize {
        for k in 0..=n as u32 {
            for f in enumerate_bounded(k, n) {
                let canonical = f.shift(-i64::from(k));
                if !seen.insert(canonical.window().to_vec()) {
                    continue;
                }
                let degree = canonical.length();
                let table = affine_stanley_weight_table(&canonical, degree as u32);
                let columns = canonical.rothe_diagram().column_sizes();
                let leading = Partition::from_unsorted(columns.iter().map(|&c| c as u32)).conjugate();
                assert_eq!(
                    table.coeff(&leading),
                    BigInt::from(1),
                    "leading coefficient at {:?}",
                    canonical.window()
                );
                for (weight, _) in table.entries() {
                    assert!(
                        weight.dominance_leq(&leading).expect("equal sizes"),
                        "weight {weight} exceeds {leading} at {:?}",
                        canonical.window()
                    );
                }
            }
        }
    }
    let leading = clock.elapsed();
    assert!(leading < Duration::from_secs(300), "leading-term sweep took {leading:?}");

    println!("criterion 5 PASS: Chevalley ({chevalley:?}), transition ({transition:?}), duality ({duality:?}), positivity ({positivity:?}), and leading-term ({leading:?}) sweeps all hold to n = 5");
}

#[test]
fn criterion_6_interval_delta_pairing_counts_maximal_chains() {
    let clock = Instant::now();

    // Exhaustive: every pair of S4 permutations under the 3-Bruhat order.
    let mut comparable = 0u64;
    let words: Vec<Vec<i64>> = (1..=4i64).permutations(4).collect();
    for u in &words {
        for v in &words {
            let pu = permutation_from_one_line(u).expect("permutation");
            let pv = permutation_from_one_line(v).expect("permutation");
            match KBruhatInterval::new(3, u, v) {
                Ok(interval) => {
                    let f = f_from_interval(&interval);
                    let delta = lstree::expand(&f, 3).expect("interval image").result().delta();
                    let chains = count_maximal_chains(&pu, &pv, 3);
                    assert_eq!(delta, BigInt::from(chains), "interval [{u:?}, {v:?}] at k = 3");
                    comparable += 1;
                }
                Err(BridgeError::NotComparable { .. }) => {
                    assert_eq!(
                        count_maximal_chains(&pu, &pv, 3),
                        0,
                        "incomparable pair [{u:?}, {v:?}] admits a chain"
                    );
                }
                Err(e) => panic!("unexpected interval error: {e}"),
            }
        }
    }

    // 50 seeded random comparable S5 intervals at random ranks.
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_814);
    let mut found = 0u32;
    while found < 50 {
        let mut u: Vec<i64> = (1..=5).collect();
        let mut v: Vec<i64> = (1..=5).collect();
        u.shuffle(&mut rng);
        v.shuffle(&mut rng);
        let k = rng.gen_range(1..=4u32);
        let Ok(interval) = KBruhatInterval::new(k, &u, &v) else {
            continue;
        };
        let f = f_from_interval(&interval);
        let delta = lstree::expand(&f, k).expect("interval image").result().delta();
        let chains = count_maximal_chains(
            &permutation_from_one_line(&u).expect("permutation"),
            &permutation_from_one_line(&v).expect("permutation"),
            k,
        );
        assert_eq!(delta, BigInt::from(chains), "interval [{u:?}, {v:?}] at k = {k}");
        found += 1;
    }

    let elapsed = clock.elapsed();
    println!("criterion 6 PASS: {comparable} comparable S4 intervals at k = 3 and 50 random S5 intervals pair to their chain counts (in {elapsed:?})");
}

#[test]
fn criterion_7_three_row_decomposition_matches_the_rank_reference() {
    let budget = OracleBudget::default();

    // Worked example: the two-row diagram with cells (1,1), (2,2), (1,3).
    let example = Diagram::planar(vec![(1, 1), (2, 2), (1, 3)]);
    let character = schur_module_character(&example, 2, &budget).expect("three cells");
    let expected: BTreeMap<Partition, BigInt> = [
        (partition(&[3]), BigInt::from(1)),
        (partition(&[2, 1]), BigInt::from(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(character, expected, "worked module character");

    // The skew shape (3,2)/(1) decomposes as s[3,1] + s[2,2].
    let skew = Diagram::planar(vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
    let decomposition = three_row_decompose(&skew, 3).expect("two rows");
    let expected: BTreeMap<Partition, BigInt> = [
        (partition(&[3, 1]), BigInt::from(1)),
        (partition(&[2, 2]), BigInt::from(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(decomposition, expected, "skew decomposition");

    // 120 seeded random diagrams with at most eight cells in three rows.
    let clock = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7_031_994);
    let grid: Vec<(i64, i64)> = (1..=3).flat_map(|r| (1..=6).map(move |c| (r, c))).collect();
    for trial in 0..120 {
        let size = rng.gen_range(0..=8usize);
        let mut cells = grid.clone();
        cells.shuffle(&mut rng);
        cells.truncate(size);
        let diagram = Diagram::planar(cells);
        let fast = three_row_decompose(&diagram, 3).expect("three rows");
        let slow = schur_module_character(&diagram, 3, &budget).expect("within budget");
        assert_eq!(fast, slow, "trial {trial}: diagram {diagram}");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(600), "random sweep took {elapsed:?}");
    println!("criterion 7 PASS: worked examples and 120 random three-row diagrams match the rank reference (random sweep in {elapsed:?})");
}

#[test]
fn criterion_8_toric_schur_equals_the_module_character_up_to_seven_cells() {
    let budget = OracleBudget::default();
    let clock = Instant::now();
    let mut shapes_checked = 0u64;
    let mut character_memo: HashMap<Vec<(i64, i64)>, BTreeMap<Partition, BigInt>> = HashMap::new();
    for m in 1..=7u32 {
        let span = i64::from(m);
        for a in 0..=span {
            for b in a..=span {
                for u0 in 0..=span {
                    for u1 in u0.max(a)..=(a + span) {
                        for u2 in u1.max(b)..=(b + span).min(u0 + span) {
                            let total = u0 + (u1 - a) + (u2 - b);
                            if total > 7 {
                                continue;
                            }
                            let shape =
                                CylindricSkewShape::from_profiles(&[0, a, b], &[u0, u1, u2], m)
                                    .expect("enumerated profiles are valid");
                            assert!(shape.is_toric(), "enumeration bounds keep rows short");

                            let tableaux =
                                cylindric_schur(&shape, &budget).expect("at most seven cells");
                            assert!(!tableaux.out_of_rectangle, "weights escape at {shape}");

                            let mut folded: Vec<(i64, i64)> = shape
                                .cells()
                                .into_iter()
                                .map(|(r, c)| (r, (c - 1).rem_euclid(span) + 1))
                                .collect();
                            folded.sort_unstable();
                            assert_eq!(
                                folded.len() as u64,
                                shape.size(),
                                "folding is injective on toric shapes"
                            );
                            let character = character_memo.entry(folded).or_insert_with_key(|cells| {
                                schur_module_character(&Diagram::planar(cells.clone()), 3, &budget)
                                    .expect("at most seven cells")
                            });
                            assert_eq!(
                                &vector_as_map(&tableaux.vector),
                                character,
                                "toric Schur vs module character at {shape}"
                            );
                            shapes_checked += 1;
                        }
                    }
                }
            }
        }
    }
    let elapsed = clock.elapsed();
    assert!(shapes_checked > 500, "only {shapes_checked} shapes enumerated");
    println!(
        "criterion 8 PASS: {shapes_checked} toric shapes at k = 3 ({} distinct torus images) match their module characters (in {elapsed:?})",
        character_memo.len()
    );
}
