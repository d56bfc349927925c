//! Module-level invariant sweeps that go past the acceptance criteria:
//! the lex suite at n = 10, oracle/formula agreement up to n = 10, and the
//! per-step loss closed form on its original domain n >= k_1 + k_2.

use crossfam::bounds::beta_closed_form;
use crossfam::oracle::SearchBudget;
use crossfam::partners::k_partner;
use crossfam::subsets::{count_l, successor, Count, KSubset};
use crossfam::verify::{lex_suite, nonmixed_params, oracle_suite};

#[test]
fn lex_suite_to_n10() {
    let rep = lex_suite(10);
    assert!(
        rep.passed(),
        "{} failures: {:?}",
        rep.failures,
        rep.failure_samples
    );
}

#[test]
fn oracle_agreement_to_n10() {
    let rep = oracle_suite(10, &SearchBudget::default());
    assert!(
        rep.passed(),
        "{} failures: {:?}",
        rep.failures,
        rep.failure_samples
    );
}

/// With every family tied to the leading ID by its k_j-partner, each
/// consecutive step of the leading ID gains exactly one set and loses
/// `sum_{j>=2} C(n-q, k_j - (q - k_1))` sets, where `q` is the maximum of
/// the new ID. The loss is non-increasing in `q` and strictly decreasing
/// while any non-tight summand is positive; it is the constant `t - 1`
/// exactly when `n = k_1 + k_j` for every `j >= 2`.
#[test]
fn step_loss_closed_form_nonmixed_domain() {
    for params in nonmixed_params(9, 4) {
        let n = params.n();
        let k1 = params.k(1);
        let kt = params.k_min();
        let lo = KSubset::new(n, vec![1])
            .unwrap()
            .with_suffix_run(k1 - 1)
            .unwrap();
        let hi = KSubset::new(n, vec![kt])
            .unwrap()
            .with_suffix_run(k1 - 1)
            .unwrap();

        let ranks = |r: &KSubset| -> Vec<Count> {
            (2..=params.t())
                .map(|j| {
                    let t_j = k_partner(r, params.k(j)).unwrap();
                    count_l(&t_j, params.k(j)).unwrap()
                })
                .collect()
        };

        let floor: u64 = (2..=params.t()).filter(|&j| n == k1 + params.k(j)).count() as u64;
        let all_tight = floor == (params.t() - 1) as u64;

        let mut cur = lo.clone();
        let mut cur_ranks = ranks(&cur);
        let mut prev_q_delta: Option<(u32, u64)> = None;
        while cur != hi {
            let next = successor(&cur)
                .unwrap()
                .expect("window is not lex-terminal");
            let next_ranks = ranks(&next);

            // gain: the leading family grows by exactly one set
            assert_eq!(
                count_l(&next, k1).unwrap(),
                count_l(&cur, k1).unwrap() + Count::from(1u32),
                "{params}: gain differs from 1 at {next}"
            );

            let loss: Count = cur_ranks
                .iter()
                .zip(next_ranks.iter())
                .map(|(a, b)| a - b)
                .sum();
            let q = next.max_elem().unwrap();
            assert_eq!(
                loss,
                beta_closed_form(q, &params),
                "{params}: loss closed form fails at step onto {next}"
            );

            let loss: u64 = u64::try_from(&loss).unwrap();
            if all_tight {
                assert_eq!(loss, floor, "{params}: tight case is not constant");
            }
            if let Some((pq, pd)) = prev_q_delta {
                if q > pq {
                    assert!(loss <= pd, "{params}: loss increases at q={q}");
                    if pd > floor {
                        assert!(loss < pd, "{params}: loss stalls above its floor at q={q}");
                    }
                } else if q == pq {
                    assert_eq!(loss, pd, "{params}: equal maxima disagree at q={q}");
                }
            }
            if prev_q_delta.map_or(true, |(pq, _)| q >= pq) {
                prev_q_delta = Some((q, loss));
            }

            cur = next;
            cur_ranks = next_ranks;
        }
    }
}
