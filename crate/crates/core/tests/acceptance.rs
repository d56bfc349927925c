//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every comparison is exact; there are no tolerances anywhere. Run with
//! `cargo test --test acceptance -- --nocapture` to see the per-criterion
//! lines.

use crossfam::bounds::{mixed_bound, nonmixed_bound, two_family_bound};
use crossfam::oracle::{classify_extremal, exact_m, f_profile, SearchBudget, SystemIds};
use crossfam::verify::{
    exceptional_pattern, increments_suite, kk_suite, mixed_params, nonmixed_params, partners_suite,
    weighted_sanity, SuiteReport,
};
use crossfam::{Count, Error, KSubset, Params};

const BUDGET: SearchBudget = SearchBudget {
    max_nodes: 10_000_000,
    max_seconds: None,
};
const KK_SEED: u64 = 20250809;

fn ks(n: u32, elems: &[u32]) -> KSubset {
    KSubset::new(n, elems.to_vec()).unwrap()
}

fn params(n: u32, ks: &[u32]) -> Params {
    Params::new(n, ks.to_vec()).unwrap()
}

fn cnt(v: u64) -> Count {
    Count::from(v)
}

fn report_suite(criterion: &str, rep: &SuiteReport) {
    if rep.passed() {
        println!("ACCEPTANCE {criterion}: PASS ({} checks)", rep.checks);
    } else {
        println!(
            "ACCEPTANCE {criterion}: FAIL ({} of {} checks failed)",
            rep.failures, rep.checks
        );
        for s in &rep.failure_samples {
            println!("  {s}");
        }
    }
    assert!(rep.passed(), "{criterion}: {} failures", rep.failures);
}

/// Criterion 1: in the mixed window (t in 3..=5, k_t >= 2, n <= 9, search
/// space <= 1e7) the exhaustive maximum equals max(lambda_1, lambda_2),
/// including the two frozen instances.
#[test]
fn criterion_1_mixed_regime_maximum() {
    let mut ran = 0usize;
    let mut skipped = 0usize;
    for p in mixed_params(9, 3, 5, 2) {
        match exact_m(&p, &BUDGET) {
            Ok(out) => {
                ran += 1;
                let bound = mixed_bound(&p).unwrap();
                assert_eq!(out.max_sum, bound, "oracle vs bound at {p}");
            }
            Err(Error::BudgetExceeded { .. }) => skipped += 1,
            Err(e) => panic!("{p}: {e}"),
        }
    }
    assert_eq!(
        exact_m(&params(5, &[3, 3, 2]), &BUDGET).unwrap().max_sum,
        cnt(19)
    );
    assert_eq!(
        exact_m(&params(5, &[3, 3, 2, 2]), &BUDGET).unwrap().max_sum,
        cnt(20)
    );
    println!(
        "ACCEPTANCE 1 (mixed-regime maximum = max(lambda_1, lambda_2)): PASS \
         ({ran} tuples exact, {skipped} beyond the node budget)"
    );
}

/// Criterion 2: every extremal tuple in the mixed sweep classifies as star
/// or kernel, except under the tight four-family pattern where all are
/// exceptional; the frozen tuple is among the maximizers at (5, (3,3,2,2)).
#[test]
fn criterion_2_structure_classification() {
    let mut classified = 0usize;
    for p in mixed_params(9, 3, 5, 2) {
        let out = match exact_m(&p, &BUDGET) {
            Ok(out) => out,
            Err(Error::BudgetExceeded { .. }) => continue,
            Err(e) => panic!("{p}: {e}"),
        };
        let exceptional = exceptional_pattern(&p);
        for sys in &out.extremal {
            let label = classify_extremal(sys).unwrap().label().to_string();
            classified += 1;
            if exceptional {
                assert_eq!(label, "exceptional", "{p}: {sys}");
            } else {
                assert!(
                    label == "star" || label == "kernel",
                    "{p}: {sys} -> {label}"
                );
            }
        }
    }
    let out = exact_m(&params(5, &[3, 3, 2, 2]), &BUDGET).unwrap();
    let frozen = SystemIds {
        ids: vec![
            ks(5, &[2, 3, 5]),
            ks(5, &[2, 3, 5]),
            ks(5, &[1, 3]),
            ks(5, &[1, 3]),
        ],
        params: params(5, &[3, 3, 2, 2]),
    };
    assert!(
        out.extremal.contains(&frozen),
        "frozen exceptional tuple not found"
    );
    println!(
        "ACCEPTANCE 2 (extremal structure classification): PASS ({classified} extremal tuples)"
    );
}

/// Criterion 3: for n >= k_1 + k_2 (n <= 9, t <= 4) the exhaustive maximum
/// equals the non-mixed bound; the two-family bound reproduces the frozen
/// values at n = 2k and n = k + l.
#[test]
fn criterion_3_nonmixed_crosscheck() {
    let mut ran = 0usize;
    let mut skipped = 0usize;
    for p in nonmixed_params(9, 4) {
        match exact_m(&p, &BUDGET) {
            Ok(out) => {
                ran += 1;
                assert_eq!(
                    out.max_sum,
                    nonmixed_bound(&p).unwrap(),
                    "oracle vs bound at {p}"
                );
            }
            Err(Error::BudgetExceeded { .. }) => skipped += 1,
            Err(e) => panic!("{p}: {e}"),
        }
    }
    assert_eq!(
        exact_m(&params(4, &[2, 2]), &BUDGET).unwrap().max_sum,
        cnt(6)
    );
    assert_eq!(two_family_bound(4, 2, 2).unwrap(), cnt(6));
    let out = exact_m(&params(5, &[3, 2]), &BUDGET).unwrap();
    assert_eq!(out.max_sum, cnt(10));
    assert_eq!(out.max_sum, crossfam::bounds::binom(5, 2));
    assert_eq!(two_family_bound(5, 3, 2).unwrap(), cnt(10));
    println!(
        "ACCEPTANCE 3 (non-mixed oracle = formula): PASS \
         ({ran} tuples exact, {skipped} beyond the node budget)"
    );
}

/// Criterion 4: the partner machinery suite is exhaustive for n <= 9 with
/// zero failures; the worked n = 9 example is pinned in the library's unit
/// tests and re-checked here.
#[test]
fn criterion_4_partner_machinery() {
    use crossfam::partners::{is_maximal_pair, k_partner, remaximalize};
    let a = ks(9, &[2, 4, 7]);
    let b = k_partner(&a, 4).unwrap();
    assert_eq!(b, ks(9, &[1, 3, 4, 9]));
    assert!(!is_maximal_pair(&a, &b).unwrap());
    assert_eq!(remaximalize(&a, 4).unwrap(), ks(9, &[2, 4, 9]));

    report_suite(
        "4 (partner machinery, exhaustive n <= 9)",
        &partners_suite(9),
    );
}

/// Criterion 5: the increment suite (identity, additivity, closed forms,
/// monotonicity, invariance laws) is exhaustive over mixed tuples with
/// n <= 9 and fails nowhere.
#[test]
fn criterion_5_increment_suite() {
    report_suite(
        "5 (increment laws, mixed tuples n <= 9)",
        &increments_suite(9),
    );
}

/// Criterion 6: the profile of f over the leading ID window attains its
/// maximum only at an endpoint, except under the tight four-family pattern
/// where it is constant; the frozen profile at (5, (3,3,2)) is exact.
#[test]
fn criterion_6_endpoint_maximality() {
    let mut tuples = 0usize;
    for p in mixed_params(9, 3, 5, 2) {
        let profile = f_profile(&p).unwrap();
        tuples += 1;
        if exceptional_pattern(&p) {
            assert!(
                profile.iter().all(|v| *v == profile[0]),
                "{p}: profile not constant"
            );
        } else {
            let max = profile.iter().max().unwrap().clone();
            let interior = &profile[1..profile.len() - 1];
            assert!(
                interior.iter().all(|v| *v < max),
                "{p}: interior ID attains the maximum"
            );
        }
    }
    let frozen: Vec<Count> = [16u64, 17, 18, 19].iter().map(|&v| cnt(v)).collect();
    assert_eq!(f_profile(&params(5, &[3, 3, 2])).unwrap(), frozen);
    println!("ACCEPTANCE 6 (endpoint maximality of f): PASS ({tuples} profiles)");
}

/// Criterion 7: 10,000 seeded random cross-intersecting pairs per ground set
/// n in 5..=8 compress to cross-intersecting L-initial pairs with zero
/// counterexamples.
#[test]
fn criterion_7_lex_compression() {
    report_suite(
        &format!("7 (lex compression, 10000 trials per n, seed {KK_SEED})"),
        &kk_suite(8, KK_SEED, 10_000),
    );
}

/// Criterion 8: the weighted bound with unit weights equals the plain bound
/// on every shared instance with n <= 9, and the size-one dominance laws
/// hold on grids up to n = 12.
#[test]
fn criterion_8_weighted_bound_sanity() {
    report_suite("8 (weighted bound and dominance)", &weighted_sanity(9, 12));
}
