//! Exhaustive and randomized verification suites.
//!
//! Each suite sweeps every instance up to a ground-set cap and compares the
//! crate's closed forms against member-level brute force. Family-level
//! clauses batch the member checks through per-rank bitsets (`u128` over the
//! at most `C(9,4) = 126` sets of one size), which keeps full sweeps at
//! `n = 9` in the seconds range; those clauses clamp at `n = 9`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    alpha_closed_form, beta_closed_form, f_i_of_s, in_r1_window, increments, lambda_values,
    mixed_bound, nonmixed_bound, system_ids_for, two_family_bound, weighted_bound, WeightVector,
};
use crate::oracle::{
    classify_extremal, exact_m, families_cross_intersecting, kk_compress_check,
    maximality_bruteforce, star_id, SearchBudget, SystemIds,
};
use crate::partners::{
    corresponding_k_set, is_maximal_pair, k_parity, k_partner, maximal_counterpart, partner,
};
use crate::subsets::{
    count_l, enumerate_ksets, is_c_sequential, lex_precedes, lex_strictly_precedes, r1_window,
    successor, tail_decompose, ubinom, unrank, Count, KSubset, Params, Regime,
};
use crate::{Error, Result};

const MAX_FAILURE_SAMPLES: usize = 16;

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub failures: u64,
    pub failure_samples: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        Self {
            suite: suite.into(),
            checks: 0,
            failures: 0,
            failure_samples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.failure_samples.len() < MAX_FAILURE_SAMPLES {
                self.failure_samples.push(msg());
            }
        }
    }
}

fn all_subsets(n: u32) -> Vec<KSubset> {
    (1..=n)
        .flat_map(|k| enumerate_ksets(n, k).unwrap())
        .collect()
}

/// Every mixed-window parameter tuple with `t_min <= t <= t_max` families,
/// `k_t >= kt_min` and `k_1 + k_3 <= n <= n_max`.
pub fn mixed_params(n_max: u32, t_min: usize, t_max: usize, kt_min: u32) -> Vec<Params> {
    let mut out = Vec::new();
    let mut ks: Vec<u32> = Vec::new();
    fn rec(ks: &mut Vec<u32>, t: usize, kt_min: u32, n_max: u32, out: &mut Vec<Params>) {
        if ks.len() == t {
            let (k1, k2, k3) = (ks[0], ks[1], ks[2]);
            if k2 <= k3 {
                return;
            }
            for n in k1 + k3..=n_max.min(k1 + k2 - 1) {
                out.push(Params::new(n, ks.clone()).unwrap());
            }
            return;
        }
        let hi = ks.last().copied().unwrap_or(n_max.saturating_sub(kt_min));
        for k in (kt_min..=hi).rev() {
            ks.push(k);
            rec(ks, t, kt_min, n_max, out);
            ks.pop();
        }
    }
    for t in t_min..=t_max {
        rec(&mut ks, t, kt_min, n_max, &mut out);
    }
    out.sort_by_key(|a| (a.n(), a.ks().to_vec()));
    out
}

/// Every non-mixed parameter tuple: `2 <= t <= t_max`, `k_t >= 1` and
/// `k_1 + k_2 <= n <= n_max`.
pub fn nonmixed_params(n_max: u32, t_max: usize) -> Vec<Params> {
    let mut out = Vec::new();
    let mut ks: Vec<u32> = Vec::new();
    fn rec(ks: &mut Vec<u32>, t: usize, n_max: u32, out: &mut Vec<Params>) {
        if ks.len() == t {
            for n in ks[0] + ks[1]..=n_max {
                out.push(Params::new(n, ks.clone()).unwrap());
            }
            return;
        }
        let hi = ks.last().copied().unwrap_or(n_max - 1);
        for k in (1..=hi).rev() {
            ks.push(k);
            rec(ks, t, n_max, out);
            ks.pop();
        }
    }
    for t in 2..=t_max {
        rec(&mut ks, t, n_max, &mut out);
    }
    out.sort_by_key(|a| (a.n(), a.ks().to_vec()));
    out
}

// ---------------------------------------------------------------------------
// lex suite
// ---------------------------------------------------------------------------

/// Order totality, rank/successor coherence, rank/unrank round trips,
/// prefix-count agreement with enumeration, and tail reassembly.
pub fn lex_suite(n_max: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("lex");

    for n in 1..=n_max {
        let sets = all_subsets(n);
        for a in &sets {
            for b in &sets {
                let ab = lex_strictly_precedes(a, b).unwrap();
                let ba = lex_strictly_precedes(b, a).unwrap();
                let ok = if a == b { !ab && !ba } else { ab ^ ba };
                rep.check(ok, || format!("totality fails at n={n} A={a} B={b}"));
            }
        }

        for k in 1..=n {
            let ksets = enumerate_ksets(n, k).unwrap();
            // coherence of rank with the successor chain
            for (i, r) in ksets.iter().enumerate() {
                let rk = count_l(r, k).unwrap();
                rep.check(rk == Count::from(i + 1), || {
                    format!("rank of {r} is {rk}, expected {}", i + 1)
                });
                rep.check(unrank(n, &rk, k).unwrap() == *r, || {
                    format!("unrank(rank({r})) diverges at n={n}")
                });
                let next = successor(r).unwrap();
                rep.check(next.as_ref() == ksets.get(i + 1), || {
                    format!("successor of {r} diverges at n={n}")
                });
            }
            // prefix counts vs enumeration, for IDs of every size
            for r in &sets {
                let brute = ksets.iter().filter(|f| lex_precedes(f, r).unwrap()).count();
                let counted = count_l(r, k).unwrap();
                rep.check(counted == Count::from(brute), || {
                    format!("count mismatch at n={n} R={r} k={k}: {counted} vs {brute}")
                });
            }
        }

        for f in &sets {
            let (head, ell) = tail_decompose(f).unwrap();
            let ok = head.with_suffix_run(ell).map(|g| g == *f).unwrap_or(false)
                && (ell == 0 || !head.contains(n - ell));
            rep.check(ok, || format!("tail reassembly fails at n={n} F={f}"));
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// family bitset tables
// ---------------------------------------------------------------------------

/// For one ordered size pair `(a, b)` over `[n]`: `p[ra]` holds the b-sets
/// (as rank bits) meeting every member of the first `ra` a-sets, and `q[rb]`
/// the a-sets meeting every member of the first `rb` b-sets.
struct PairTables {
    p: Vec<u128>,
    q: Vec<u128>,
}

fn ones(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

fn pair_tables(masks_a: &[u64], masks_b: &[u64]) -> PairTables {
    let mut p = Vec::with_capacity(masks_a.len() + 1);
    p.push(ones(masks_b.len()));
    for &ma in masks_a {
        let mut row = 0u128;
        for (ib, &mb) in masks_b.iter().enumerate() {
            if ma & mb != 0 {
                row |= 1u128 << ib;
            }
        }
        p.push(p.last().unwrap() & row);
    }
    let mut q = Vec::with_capacity(masks_b.len() + 1);
    q.push(ones(masks_a.len()));
    for &mb in masks_b {
        let mut col = 0u128;
        for (ia, &ma) in masks_a.iter().enumerate() {
            if ma & mb != 0 {
                col |= 1u128 << ia;
            }
        }
        q.push(q.last().unwrap() & col);
    }
    PairTables { p, q }
}

impl PairTables {
    /// Member-level cross-intersection of the rank-`ra` and rank-`rb`
    /// L-initial families.
    fn cross(&self, ra: usize, rb: usize) -> bool {
        self.p[ra] & ones(rb) == ones(rb)
    }

    /// Member-level mutual maximality (which subsumes cross-intersection).
    fn maximal(&self, ra: usize, rb: usize) -> bool {
        self.p[ra] == ones(rb) && self.q[rb] == ones(ra)
    }

    /// Rank of the greatest b-ID compatible with the rank-`ra` a-family:
    /// the length of the initial all-ones run of `p[ra]`.
    fn cap(&self, ra: usize) -> u64 {
        (!self.p[ra]).trailing_zeros() as u64
    }
}

// ---------------------------------------------------------------------------
// partners suite
// ---------------------------------------------------------------------------

enum KpEntry {
    Invalid,
    Empty,
    Id(KSubset),
}

struct Universe {
    n: u32,
    sets: Vec<KSubset>,
    kp: Vec<Vec<KpEntry>>, // kp[idx][k-1]
}

impl Universe {
    fn build(n: u32) -> Self {
        let sets = all_subsets(n);
        let kp = sets
            .iter()
            .map(|f| {
                (1..=n)
                    .map(|k| {
                        if k > n - f.len() {
                            return KpEntry::Invalid;
                        }
                        match k_partner(f, k) {
                            Ok(id) => KpEntry::Id(id),
                            Err(Error::NoPrecedingSet { .. }) => KpEntry::Empty,
                            Err(e) => panic!("unexpected k_partner error: {e}"),
                        }
                    })
                    .collect()
            })
            .collect();
        Self { n, sets, kp }
    }

    fn kp(&self, idx: usize, k: u32) -> &KpEntry {
        &self.kp[idx][(k - 1) as usize]
    }
}

/// Partner involution, k-partner maximality, head invariance, antitonicity,
/// re-maximalization, the head-partner maximality criterion against member
/// brute force, parity transfer, the star threshold, and complement closure
/// at tight ground sets.
pub fn partners_suite(n_max: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("partners");

    for n in 1..=n_max {
        partner_involution(&mut rep, n);
    }
    for n in 2..=n_max {
        let uni = Universe::build(n);
        kp_family_equivalence(&mut rep, &uni);
        kp_antitone(&mut rep, &uni);
        kp_size_comparison(&mut rep, &uni);
        remaximalization(&mut rep, &uni);
        parity_transfer(&mut rep, n);
        complement_closure(&mut rep, n);
    }
    for n in 2..=n_max.min(9) {
        let masks: Vec<Vec<u64>> = (0..=n)
            .map(|k| {
                if k == 0 {
                    Vec::new()
                } else {
                    enumerate_ksets(n, k)
                        .unwrap()
                        .iter()
                        .map(KSubset::mask)
                        .collect()
                }
            })
            .collect();
        let uni = Universe::build(n);
        kp_is_greatest_compatible(&mut rep, &uni, &masks);
        maximality_criterion(&mut rep, &uni, &masks);
        star_threshold(&mut rep, &uni, &masks);
    }
    rep
}

fn partner_involution(rep: &mut SuiteReport, n: u32) {
    for f in all_subsets(n) {
        let q = f.max_elem().unwrap();
        let h = partner(&f).unwrap();
        let ok = partner(&h).unwrap() == f
            && h.max_elem() == Some(q)
            && h.len() == q - f.len() + 1
            && (1..=n).all(|x| {
                (f.contains(x) && h.contains(x)) == (x == q)
                    && (f.contains(x) || h.contains(x)) == (x <= q)
            });
        rep.check(ok, || format!("partner shape fails at n={n} F={f}"));
    }
}

/// `L(partner(F), k)` and `L(k_partner(F, k), k)` are the same family: equal
/// counts, and the k-partner is the family's last member.
fn kp_family_equivalence(rep: &mut SuiteReport, uni: &Universe) {
    let n = uni.n;
    for (idx, f) in uni.sets.iter().enumerate() {
        let h = partner(f).unwrap();
        for k in 1..=n - f.len() {
            let via_partner = count_l(&h, k).unwrap();
            match uni.kp(idx, k) {
                KpEntry::Invalid => unreachable!(),
                KpEntry::Empty => {
                    rep.check(via_partner.is_zero(), || {
                        format!("n={n} F={f} k={k}: empty k-partner but |L(H,k)| = {via_partner}")
                    });
                }
                KpEntry::Id(kp) => {
                    let ok = count_l(kp, k).unwrap() == via_partner
                        && unrank(n, &via_partner, k).unwrap() == *kp;
                    rep.check(ok, || {
                        format!("n={n} F={f} k={k}: k-partner {kp} does not close L(H,k)")
                    });
                }
            }
        }
    }
}

/// The k-partner is the lex-greatest k-ID whose family is cross-intersecting
/// with `L(F, |F|)`; equivalently the run of compatible k-IDs is an initial
/// segment ending exactly there.
fn kp_is_greatest_compatible(rep: &mut SuiteReport, uni: &Universe, masks: &[Vec<u64>]) {
    let n = uni.n;
    let mut tables: HashMap<(u32, u32), PairTables> = HashMap::new();
    for (idx, f) in uni.sets.iter().enumerate() {
        let a = f.len();
        for k in 1..=n - a {
            let tab = tables
                .entry((a, k))
                .or_insert_with(|| pair_tables(&masks[a as usize], &masks[k as usize]));
            let ra = count_l(f, a).unwrap().to_usize().unwrap();
            let run = tab.cap(ra);
            match uni.kp(idx, k) {
                KpEntry::Invalid => unreachable!(),
                KpEntry::Empty => rep.check(run == 0, || {
                    format!("n={n} F={f} k={k}: no k-partner but {run} compatible k-IDs")
                }),
                KpEntry::Id(kp) => {
                    let kp_rank = count_l(kp, k).unwrap().to_u64().unwrap();
                    rep.check(kp_rank == run, || {
                        format!("n={n} F={f} k={k}: k-partner rank {kp_rank}, compatible run {run}")
                    });
                }
            }
        }
    }
}

/// Head-partner criterion vs member-level maximality, in both directions,
/// on every ID pair: against the batched rank sets and against the one-pair
/// brute force.
fn maximality_criterion(rep: &mut SuiteReport, uni: &Universe, masks: &[Vec<u64>]) {
    let n = uni.n;
    for a in 1..n {
        for b in 1..=n - a {
            let tab = pair_tables(&masks[a as usize], &masks[b as usize]);
            let asets = enumerate_ksets(n, a).unwrap();
            let bsets = enumerate_ksets(n, b).unwrap();
            for (ia, aset) in asets.iter().enumerate() {
                for (ib, bset) in bsets.iter().enumerate() {
                    let gold = tab.maximal(ia + 1, ib + 1);
                    let fast = is_maximal_pair(aset, bset).unwrap();
                    rep.check(gold == fast, || {
                        format!("n={n} A={aset} B={bset}: criterion {fast}, members {gold}")
                    });
                    let slow = maximality_bruteforce(aset, a, bset, b).unwrap();
                    rep.check(slow == gold, || {
                        format!("n={n} A={aset} B={bset}: pairwise brute force diverges")
                    });
                }
            }
        }
    }
}

/// If `A ⪯ B` then the k-partners reverse: `K_B ⪯ K_A`; parity inputs give
/// equal k-partners.
fn kp_antitone(rep: &mut SuiteReport, uni: &Universe) {
    let n = uni.n;
    for (ia, a) in uni.sets.iter().enumerate() {
        for (ib, b) in uni.sets.iter().enumerate() {
            if !lex_precedes(a, b).unwrap() {
                continue;
            }
            let kmax = (n - a.len()).min(n - b.len());
            for k in 1..=kmax {
                let (ka, kb) = (uni.kp(ia, k), uni.kp(ib, k));
                match (ka, kb) {
                    (KpEntry::Id(ka), KpEntry::Id(kb)) => {
                        rep.check(lex_precedes(kb, ka).unwrap(), || {
                            format!("n={n} {a} ⪯ {b} but k_partners {ka} vs {kb} not reversed")
                        });
                        if a.len() == b.len() && k_parity(b, a.len()).unwrap().as_ref() == Some(a) {
                            rep.check(ka == kb, || {
                                format!("n={n}: parity pair {a},{b} with distinct k-partners")
                            });
                        }
                    }
                    (KpEntry::Empty, KpEntry::Id(kb)) => {
                        rep.check(false, || {
                            format!("n={n}: {a} has no {k}-partner yet later {b} has {kb}")
                        });
                    }
                    _ => {}
                }
            }
        }
    }
}

/// For a common base set, the b-partner precedes the a-partner when `b <= a`,
/// unless the a-partner is the a-parity of the b-partner. Also head
/// invariance: `F` and its head share every k-partner.
fn kp_size_comparison(rep: &mut SuiteReport, uni: &Universe) {
    let n = uni.n;
    for (ic, c) in uni.sets.iter().enumerate() {
        let kmax = n - c.len();
        for a in 1..=kmax {
            for b in 1..=a {
                let (pa, pb) = (uni.kp(ic, a), uni.kp(ic, b));
                if let (KpEntry::Id(pa), KpEntry::Id(pb)) = (pa, pb) {
                    let ok = lex_precedes(pb, pa).unwrap()
                        || k_parity(pb, a).unwrap().as_ref() == Some(pa);
                    rep.check(ok, || {
                        format!("n={n} C={c}: partners {pb} (b={b}) vs {pa} (a={a}) unrelated")
                    });
                }
            }
        }
        // head invariance
        let (head, ell) = tail_decompose(c).unwrap();
        if ell > 0 && !head.is_empty() {
            let ih = uni.sets.iter().position(|s| s == &head).unwrap();
            for k in 1..=kmax {
                let same = match (uni.kp(ic, k), uni.kp(ih, k)) {
                    (KpEntry::Id(x), KpEntry::Id(y)) => x == y,
                    (KpEntry::Empty, KpEntry::Empty) => true,
                    // the head allows larger k than F does; only shared k count
                    (KpEntry::Invalid, _) | (_, KpEntry::Invalid) => true,
                    _ => false,
                };
                rep.check(same, || {
                    format!("n={n} F={c}: k={k} partner differs from head's")
                });
            }
        }
    }
}

/// `B = k_partner(A, b)`, then the `|A|`-partner `A'` of `B` forms a maximal
/// pair with `B` and `A ⪯ A'`.
fn remaximalization(rep: &mut SuiteReport, uni: &Universe) {
    let n = uni.n;
    for a in uni.sets.iter().filter(|s| s.len() < n) {
        for b in 1..=n - a.len() {
            let bset = match k_partner(a, b) {
                Ok(s) => s,
                Err(Error::NoPrecedingSet { .. }) => continue,
                Err(e) => panic!("unexpected error: {e}"),
            };
            if a.len() > n - bset.len() {
                continue;
            }
            match k_partner(&bset, a.len()) {
                Ok(aprime) => {
                    let ok = is_maximal_pair(&aprime, &bset).unwrap()
                        && lex_precedes(a, &aprime).unwrap();
                    rep.check(ok, || {
                        format!("n={n} A={a} b={b}: re-maximalized {aprime} fails")
                    });
                }
                Err(_) => rep.check(false, || {
                    format!("n={n} A={a} b={b}: re-maximalization impossible")
                }),
            }
        }
    }
}

/// The f-sets admitting a maximal h-counterpart are the f-parity of the
/// g-sets admitting one (f >= g), and parity transport preserves the
/// counterpart.
fn parity_transfer(rep: &mut SuiteReport, n: u32) {
    let cap = 4.min(n);
    for h in 1..=cap {
        for f in 1..=(n - h).min(cap) {
            for g in 1..=f {
                let admits = |k: u32| -> Vec<KSubset> {
                    enumerate_ksets(n, k)
                        .unwrap()
                        .into_iter()
                        .filter(|s| maximal_counterpart(s, h).unwrap().is_some())
                        .collect()
                };
                let ff = admits(f);
                let gg = admits(g);
                for gset in &gg {
                    match k_parity(gset, f).unwrap() {
                        Some(fset) => {
                            rep.check(ff.contains(&fset), || {
                                format!("n={n} f={f} g={g} h={h}: parity of {gset} not admitted")
                            });
                            let hset = maximal_counterpart(&fset, h).unwrap().unwrap();
                            rep.check(is_maximal_pair(gset, &hset).unwrap(), || {
                                format!("n={n}: counterpart does not transport to {gset}")
                            });
                        }
                        None => rep.check(false, || {
                            format!("n={n} f={f} g={g} h={h}: {gset} admits no f-parity")
                        }),
                    }
                }
                for fset in &ff {
                    if let Some(gset) = k_parity(fset, g).unwrap() {
                        rep.check(gg.contains(&gset), || {
                            format!("n={n} f={f} g={g} h={h}: g-parity of {fset} not admitted")
                        });
                    }
                }
            }
        }
    }
}

/// If `L(A, a)` reaches past the star ID and `L(B, b)` is cross-intersecting
/// with it, then `B` stays at or before the star ID of its size.
fn star_threshold(rep: &mut SuiteReport, uni: &Universe, masks: &[Vec<u64>]) {
    let n = uni.n;
    for a in 1..n {
        for b in 1..=n - a {
            let tab = pair_tables(&masks[a as usize], &masks[b as usize]);
            let star_a = count_l(&star_id(n, a).unwrap(), a)
                .unwrap()
                .to_usize()
                .unwrap();
            let star_b = count_l(&star_id(n, b).unwrap(), b)
                .unwrap()
                .to_u64()
                .unwrap();
            let count_a = masks[a as usize].len();
            for ra in star_a..=count_a {
                rep.check(tab.cap(ra) <= star_b, || {
                    format!("n={n} a={a} b={b}: family past the star admits ID beyond the star")
                });
            }
        }
    }
}

/// At `n = a + b` every non-last `a`-set has a maximal b-counterpart, and the
/// two family sizes always sum to `C(n, b)`.
fn complement_closure(rep: &mut SuiteReport, n: u32) {
    for a in 1..n {
        let b = n - a;
        let total = ubinom(n as u64, b as u64);
        for aset in enumerate_ksets(n, a).unwrap() {
            let (head, _) = tail_decompose(&aset).unwrap();
            match maximal_counterpart(&aset, b).unwrap() {
                Some(bset) => {
                    let ok = is_maximal_pair(&aset, &bset).unwrap()
                        && count_l(&aset, a).unwrap() + count_l(&bset, b).unwrap() == total;
                    rep.check(ok, || {
                        format!("n={n} A={aset}: counterpart {bset} misses the closure")
                    });
                }
                None => rep.check(head.is_empty(), || {
                    format!("n={n} A={aset}: missing maximal counterpart")
                }),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// increments suite
// ---------------------------------------------------------------------------

struct WindowData {
    window: Vec<KSubset>,
    /// per member, the per-family rank vector of the forced ID tuple
    ranks: Vec<Vec<u64>>,
    s: usize,
}

impl WindowData {
    fn build(params: &Params, regime: &Regime) -> Result<Self> {
        let window = r1_window(params)?;
        let mut ranks = Vec::with_capacity(window.len());
        for r1 in &window {
            let ids = system_ids_for(r1, params, regime)?;
            let v = ids
                .iter()
                .enumerate()
                .map(|(i, id)| count_l(id, params.k(i + 1)).map(|c| c.to_u64().unwrap()))
                .collect::<Result<Vec<u64>>>()?;
            ranks.push(v);
        }
        Ok(Self {
            window,
            ranks,
            s: regime.s(),
        })
    }

    fn f(&self, i: usize) -> u64 {
        self.ranks[i].iter().sum()
    }

    fn gamma(&self, i: usize, j: usize) -> u64 {
        (0..self.s)
            .map(|x| self.ranks[j][x] - self.ranks[i][x])
            .sum()
    }

    fn delta(&self, i: usize, j: usize) -> u64 {
        (self.s..self.ranks[i].len())
            .map(|x| self.ranks[i][x] - self.ranks[j][x])
            .sum()
    }
}

/// The increment identity, additivity, the closed forms for the per-step
/// gains and losses, their monotonicity and invariance laws, and the profile
/// endpoint facts, over every mixed tuple with `n <= n_max`.
pub fn increments_suite(n_max: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("increments");
    for params in mixed_params(n_max, 3, 5, 2) {
        if let Err(e) = increments_suite_one(&mut rep, &params) {
            rep.check(false, || format!("{params}: suite error {e}"));
        }
    }
    rep
}

fn increments_suite_one(rep: &mut SuiteReport, params: &Params) -> Result<()> {
    let regime = Regime::mixed(params)?;
    let data = WindowData::build(params, &regime)?;
    let n = params.n();
    let k1 = params.k(1);
    let len = data.window.len();
    let reduced = reduced_params(params, &regime);

    // parity existence inside the window: a k_i-parity exists iff the head
    // fits inside k_i
    for r in &data.window {
        let (head, _) = tail_decompose(r)?;
        for i in 2..=regime.s() {
            let has = k_parity(r, params.k(i))?.is_some();
            rep.check(has == (head.len() <= params.k(i)), || {
                format!("{params}: parity existence fails at {r} i={i}")
            });
        }
    }

    // every forced ID tuple is itself a pairwise cross-intersecting system
    for r1 in &data.window {
        let ids = system_ids_for(r1, params, &regime)?;
        let mut ok = true;
        for i in 0..params.t() {
            for j in i + 1..params.t() {
                ok &= families_cross_intersecting(
                    &ids[i],
                    params.k(i + 1),
                    &ids[j],
                    params.k(j + 1),
                )?;
            }
        }
        rep.check(ok, || {
            format!("{params}: forced tuple at {r1} is not a system")
        });
    }

    // increment identity f(B) - f(A) = gamma - delta on all ordered pairs,
    // with the public increments() cross-checked against the cached ranks
    for i in 0..len {
        for j in i..len {
            let inc = increments(&data.window[i], &data.window[j], params, &regime)?;
            let gamma = inc.gamma.to_u64().unwrap();
            let delta = inc.delta.to_u64().unwrap();
            let ok = gamma == data.gamma(i, j)
                && delta == data.delta(i, j)
                && BigInt::from(data.f(j)) - BigInt::from(data.f(i))
                    == BigInt::from(gamma) - BigInt::from(delta);
            rep.check(ok, || {
                format!(
                    "{params}: increment identity fails {} -> {}",
                    data.window[i], data.window[j]
                )
            });
        }
    }

    // additivity across every ordered triple
    for i in 0..len {
        for j in i..len {
            for k in j..len {
                let ok = data.gamma(i, k) == data.gamma(i, j) + data.gamma(j, k)
                    && data.delta(i, k) == data.delta(i, j) + data.delta(j, k);
                rep.check(ok, || {
                    format!("{params}: additivity fails at indices {i},{j},{k}")
                });
            }
        }
    }

    // per-step closed forms
    let mut delta_by_q: HashMap<u32, u64> = HashMap::new();
    for j in 1..len {
        let (i, r1p) = (j - 1, &data.window[j]);
        let (_, ell) = tail_decompose(r1p)?;
        for fam in 1..=regime.s() {
            let alpha = alpha_closed_form(r1p, fam, params, &regime)?;
            let direct = data.ranks[j][fam - 1] - data.ranks[i][fam - 1];
            let ok = alpha == Count::from(direct) && (direct == 0) == (ell < k1 - params.k(fam));
            rep.check(ok, || {
                format!("{params}: alpha closed form fails at {r1p} i={fam}")
            });
        }
        let q = r1p.max_elem().unwrap();
        let delta = data.delta(i, j);
        rep.check(beta_closed_form(q, &reduced) == Count::from(delta), || {
            format!("{params}: beta closed form fails at step onto {r1p}")
        });
        if let Some(&prev) = delta_by_q.get(&q) {
            rep.check(prev == delta, || {
                format!("{params}: steps with equal max {q} disagree on delta")
            });
        }
        delta_by_q.insert(q, delta);
    }

    // loss is non-increasing in the step maximum and strictly decreasing
    // while any vanishing summand is still positive; summands at tight
    // ground (n = k_1 + k_j) contribute a constant floor
    let floor: u64 = (regime.s() + 1..=params.t())
        .filter(|&j| n == k1 + params.k(j))
        .count() as u64;
    let mut qs: Vec<u32> = delta_by_q.keys().copied().collect();
    qs.sort_unstable();
    for w in qs.windows(2) {
        let (d0, d1) = (delta_by_q[&w[0]], delta_by_q[&w[1]]);
        rep.check(d1 <= d0, || {
            format!("{params}: delta increases from q={} to q={}", w[0], w[1])
        });
        if d0 > floor {
            rep.check(d1 < d0, || {
                format!("{params}: delta stalls above its floor at q={}", w[1])
            });
        }
    }
    if floor == (params.t() - regime.s()) as u64 && !qs.is_empty() {
        // every non-free family tight: constant loss along the whole chain
        rep.check(qs.iter().all(|q| delta_by_q[q] == floor), || {
            format!("{params}: expected constant delta {floor}")
        });
    }

    // translation invariance: consecutive steps that land on the same
    // maximum have equal delta; gains are ordered by the landing run length
    for j in 1..len {
        for j2 in 1..len {
            let (b1, b2) = (&data.window[j], &data.window[j2]);
            if b1.max_elem() != b2.max_elem() {
                continue;
            }
            let (_, ell1) = tail_decompose(b1)?;
            let (_, ell2) = tail_decompose(b2)?;
            let (g1, g2) = (data.gamma(j - 1, j), data.gamma(j2 - 1, j2));
            if ell1 <= ell2 {
                rep.check(g1 <= g2, || {
                    format!("{params}: gain inversion between steps onto {b1} and {b2}")
                });
            }
            if ell1 == ell2 {
                rep.check(g1 == g2, || {
                    format!("{params}: equal-run steps onto {b1} and {b2} disagree on gain")
                });
            }
        }
    }

    // sequential invariance: chain segments with matching endpoints' maxima
    // carry the same gain and loss
    for c in 1..=k1 {
        let mut by_key: HashMap<(u32, u32), (u64, u64)> = HashMap::new();
        for i in 0..len {
            for j in i + 1..len {
                let (a, b) = (&data.window[i], &data.window[j]);
                if !is_c_sequential(a, b, c)? {
                    continue;
                }
                let key = (a.max_elem().unwrap(), b.max_elem().unwrap());
                let val = (data.gamma(i, j), data.delta(i, j));
                match by_key.get(&key) {
                    Some(&prev) => rep.check(prev == val, || {
                        format!("{params}: {c}-sequential segments at max {key:?} disagree")
                    }),
                    None => {
                        by_key.insert(key, val);
                    }
                }
            }
        }
    }

    // pivot triples: moving the head step past the tail keeps the loss and
    // cannot shrink the gain
    for (jb, b1) in data.window.iter().enumerate() {
        let (head, ell) = tail_decompose(b1)?;
        if ell == 0 || head.is_empty() {
            continue;
        }
        let prefix = &head.elements()[..head.elements().len() - 1];
        let a_top = *head.elements().last().unwrap();
        if a_top + 1 > n - ell {
            continue;
        }
        let mut c_el = prefix.to_vec();
        c_el.push(a_top + 1);
        let c1 = KSubset::new(n, c_el)?.with_suffix_run(ell)?;
        let mut a_el = prefix.to_vec();
        a_el.extend([a_top, a_top + 1]);
        let a1 = KSubset::new(n, a_el)?.with_suffix_run(ell - 1)?;
        if !(in_r1_window(&a1, params)? && in_r1_window(&c1, params)?) {
            continue;
        }
        let ja = data.window.iter().position(|r| r == &a1).unwrap();
        let jc = data.window.iter().position(|r| r == &c1).unwrap();
        let ok =
            data.delta(ja, jb) == data.delta(jb, jc) && data.gamma(ja, jb) <= data.gamma(jb, jc);
        rep.check(ok, || {
            format!("{params}: pivot triple {a1} {b1} {c1} fails")
        });
    }

    // profile endpoints and endpoint maximality
    let (l1, l2) = lambda_values(params)?;
    let profile: Vec<u64> = (0..len).map(|i| data.f(i)).collect();
    rep.check(Count::from(profile[0]) == l1, || {
        format!(
            "{params}: profile starts at {} instead of lambda_1",
            profile[0]
        )
    });
    rep.check(Count::from(profile[len - 1]) == l2, || {
        format!(
            "{params}: profile ends at {} instead of lambda_2",
            profile[len - 1]
        )
    });
    let exceptional = exceptional_pattern(params);
    if exceptional {
        rep.check(profile.iter().all(|&v| v == profile[0]), || {
            format!("{params}: exceptional profile is not constant")
        });
    } else {
        let max = *profile.iter().max().unwrap();
        let interior_hit = profile[1..len - 1].contains(&max);
        rep.check(!interior_hit, || {
            format!("{params}: profile maximum attained at an interior ID")
        });
    }
    Ok(())
}

/// The parameter pattern whose extremal systems are the exceptional ones:
/// `t = 4`, `k_1 = k_2`, `k_3 = k_4`, `n = k_1 + k_3`.
pub fn exceptional_pattern(params: &Params) -> bool {
    params.t() == 4
        && params.k(1) == params.k(2)
        && params.k(3) == params.k(4)
        && params.n() == params.k(1) + params.k(3)
}

/// The non-free parameter list `(k_1, k_{s+1}, ..., k_t)`.
fn reduced_params(params: &Params, regime: &Regime) -> Params {
    let mut ks = vec![params.k(1)];
    ks.extend((regime.s() + 1..=params.t()).map(|i| params.k(i)));
    Params::new(params.n(), ks).unwrap()
}

// ---------------------------------------------------------------------------
// oracle suite
// ---------------------------------------------------------------------------

/// Oracle/formula agreement in both windows, extremal-structure
/// classification, companion-ID laws at the optima, and soundness of the
/// k-partner fast path against member enumeration.
pub fn oracle_suite(n_max: u32, budget: &SearchBudget) -> SuiteReport {
    let mut rep = SuiteReport::new("oracle");

    for params in mixed_params(n_max, 3, 5, 2) {
        match exact_m(&params, budget) {
            Ok(out) => check_mixed_outcome(&mut rep, &params, &out.max_sum, &out.extremal),
            Err(Error::BudgetExceeded { .. }) => continue,
            Err(e) => rep.check(false, || format!("{params}: oracle error {e}")),
        }
    }

    for params in nonmixed_params(n_max, 4) {
        match exact_m(&params, budget) {
            Ok(out) => {
                let bound = nonmixed_bound(&params).unwrap();
                rep.check(out.max_sum == bound, || {
                    format!("{params}: oracle {} vs bound {bound}", out.max_sum)
                });
                let ks = params.ks();
                if ks.iter().all(|&k| k == ks[0]) {
                    let (n, k, t) = (params.n() as i64, ks[0] as i64, params.t() as u64);
                    let equal_k = (crate::bounds::binom(n, k) - crate::bounds::binom(n - k, k)
                        + Count::from(t - 1))
                    .max(Count::from(t) * crate::bounds::binom(n - 1, k - 1));
                    rep.check(out.max_sum == equal_k, || {
                        format!("{params}: equal-size formula disagrees")
                    });
                }
                if params.t() == 2 {
                    let ft = two_family_bound(params.n(), params.k(1), params.k(2)).unwrap();
                    rep.check(out.max_sum == ft, || {
                        format!("{params}: two-family bound disagrees")
                    });
                }
            }
            Err(Error::BudgetExceeded { .. }) => continue,
            Err(e) => rep.check(false, || format!("{params}: oracle error {e}")),
        }
    }

    for n in 3..=n_max.min(9) {
        fast_path_soundness(&mut rep, n);
    }
    rep
}

fn check_mixed_outcome(
    rep: &mut SuiteReport,
    params: &Params,
    max_sum: &Count,
    extremal: &[SystemIds],
) {
    let bound = mixed_bound(params).unwrap();
    rep.check(*max_sum == bound, || {
        format!("{params}: oracle {max_sum} vs bound {bound}")
    });
    let exceptional = exceptional_pattern(params);
    let regime = Regime::mixed(params).unwrap();
    for sys in extremal {
        let class = classify_extremal(sys).unwrap();
        let ok = if exceptional {
            class.label() == "exceptional"
        } else {
            matches!(class.label(), "star" | "kernel")
        };
        rep.check(ok, || {
            format!("{params}: extremal {sys} classifies as {}", class.label())
        });

        // optima keep the leading IDs past the star threshold
        for i in [1usize, 2] {
            let star = star_id(params.n(), params.k(i)).unwrap();
            rep.check(lex_precedes(&star, &sys.ids[i - 1]).unwrap(), || {
                format!("{params}: extremal {sys} has family {i} below the star")
            });
        }
        // and force every companion ID
        let i1 = &sys.ids[0];
        for i in 2..=params.t() {
            let want = if i <= regime.s() {
                corresponding_k_set(i1, params.k(i)).unwrap()
            } else {
                k_partner(i1, params.k(i)).unwrap()
            };
            rep.check(sys.ids[i - 1] == want, || {
                format!("{params}: extremal {sys} breaks the companion law at family {i}")
            });
        }
    }
}

fn fast_path_soundness(rep: &mut SuiteReport, n: u32) {
    let masks: Vec<Vec<u64>> = (0..=n)
        .map(|k| {
            if k == 0 {
                Vec::new()
            } else {
                enumerate_ksets(n, k)
                    .unwrap()
                    .iter()
                    .map(KSubset::mask)
                    .collect()
            }
        })
        .collect();
    for ka in 1..n {
        for kb in 1..=n - ka {
            let tab = pair_tables(&masks[ka as usize], &masks[kb as usize]);
            let asets = enumerate_ksets(n, ka).unwrap();
            let bsets = enumerate_ksets(n, kb).unwrap();
            for (ia, a) in asets.iter().enumerate() {
                for (ib, b) in bsets.iter().enumerate() {
                    let fast = families_cross_intersecting(a, ka, b, kb).unwrap();
                    let gold = tab.cross(ia + 1, ib + 1);
                    rep.check(fast == gold, || {
                        format!("n={n} A={a} B={b}: fast path {fast}, members {gold}")
                    });
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// kk suite
// ---------------------------------------------------------------------------

/// Randomized lex-compression trials: seeded random cross-intersecting pairs
/// must compress to cross-intersecting L-initial pairs.
pub fn kk_suite(n_max: u32, seed: u64, trials_per_n: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("kk");
    for n in 5..=n_max.min(8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32));
        let spaces: Vec<Vec<KSubset>> = (0..=n)
            .map(|k| {
                if k == 0 {
                    Vec::new()
                } else {
                    enumerate_ksets(n, k).unwrap()
                }
            })
            .collect();
        let mut done = 0;
        let mut attempts = 0u64;
        while done < trials_per_n {
            attempts += 1;
            if attempts > trials_per_n as u64 * 50 {
                rep.check(false, || format!("n={n}: trial generation stalled"));
                break;
            }
            let ka = rng.gen_range(1..n);
            let kb = rng.gen_range(1..=n - ka);
            let aspace = &spaces[ka as usize];
            let ra = rng.gen_range(1..=aspace.len());
            let fam_a: Vec<KSubset> = sample(&mut rng, aspace.len(), ra)
                .iter()
                .map(|i| aspace[i].clone())
                .collect();
            let amasks: Vec<u64> = fam_a.iter().map(KSubset::mask).collect();
            let bcand: Vec<KSubset> = spaces[kb as usize]
                .iter()
                .filter(|s| {
                    let m = s.mask();
                    amasks.iter().all(|&x| x & m != 0)
                })
                .cloned()
                .collect();
            if bcand.is_empty() {
                continue;
            }
            let rb = rng.gen_range(1..=bcand.len());
            let fam_b: Vec<KSubset> = sample(&mut rng, bcand.len(), rb)
                .iter()
                .map(|i| bcand[i].clone())
                .collect();
            let ok = kk_compress_check(n, &fam_a, &fam_b).unwrap();
            rep.check(ok, || {
                format!("n={n} ka={ka} kb={kb}: compression broke cross-intersection")
            });
            done += 1;
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// bounds sanity (used by the acceptance gate)
// ---------------------------------------------------------------------------

/// Unit-weight agreement of the weighted bound with the plain bound on its
/// shared domain, and the size-one dominance laws, over parameter grids.
pub fn weighted_sanity(n_max: u32, grid_n_max: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("weighted");
    for params in nonmixed_params(n_max, 4) {
        let unit = WeightVector::unit(params.t());
        let w = weighted_bound(&params, &unit, 1).unwrap();
        let plain = BigRational::from_integer(BigInt::from(nonmixed_bound(&params).unwrap()));
        rep.check(w == plain, || {
            format!("{params}: unit weighted bound differs from the plain bound")
        });
    }
    for params in nonmixed_params(grid_n_max, 5) {
        let kt = params.k_min();
        let t = params.t();
        for s in 1..=kt {
            let f1 = f_i_of_s(&params, 1, s).unwrap();
            for j in 2..=t {
                let mj = (1..=t)
                    .filter(|&x| x != j)
                    .map(|x| params.k(x))
                    .min()
                    .unwrap();
                if s <= mj {
                    let fj = f_i_of_s(&params, j, s).unwrap();
                    rep.check(f1 >= fj, || {
                        format!("{params}: dominance fails at s={s} j={j}")
                    });
                }
            }
        }
        let last = f_i_of_s(&params, t, params.k(t - 1)).unwrap();
        let cap = f_i_of_s(&params, 1, 1)
            .unwrap()
            .max(f_i_of_s(&params, 1, kt).unwrap());
        rep.check(last <= cap, || format!("{params}: tail dominance fails"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_sweeps_non_trivial() {
        let mixed = mixed_params(9, 3, 5, 2);
        assert!(mixed.iter().all(|p| p.is_mixed()));
        assert!(mixed.contains(&Params::new(5, vec![3, 3, 2]).unwrap()));
        assert!(mixed.contains(&Params::new(5, vec![3, 3, 2, 2]).unwrap()));
        assert!(mixed.len() > 20);

        let nonmixed = nonmixed_params(9, 4);
        assert!(nonmixed.iter().all(|p| p.is_nonmixed()));
        assert!(nonmixed.contains(&Params::new(4, vec![2, 2]).unwrap()));
        assert!(nonmixed.contains(&Params::new(5, vec![3, 2]).unwrap()));
    }

    #[test]
    fn pair_table_matches_direct_products() {
        let n = 6;
        for (ka, kb) in [(2u32, 2u32), (3, 2), (2, 4)] {
            let asets = enumerate_ksets(n, ka).unwrap();
            let bsets = enumerate_ksets(n, kb).unwrap();
            let am: Vec<u64> = asets.iter().map(KSubset::mask).collect();
            let bm: Vec<u64> = bsets.iter().map(KSubset::mask).collect();
            let tab = pair_tables(&am, &bm);
            for ra in 1..=asets.len() {
                for rb in 1..=bsets.len() {
                    let direct = am[..ra]
                        .iter()
                        .all(|&x| bm[..rb].iter().all(|&y| x & y != 0));
                    assert_eq!(tab.cross(ra, rb), direct);
                }
            }
        }
    }

    #[test]
    fn small_suites_pass() {
        assert!(lex_suite(6).passed());
        assert!(partners_suite(6).passed());
        assert!(increments_suite(6).passed());
        assert!(oracle_suite(6, &SearchBudget::default()).passed());
        assert!(kk_suite(5, 7, 50).passed());
        assert!(weighted_sanity(6, 6).passed());
    }
}
