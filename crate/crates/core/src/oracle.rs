//! Brute-force ground truth at desk scale.
//!
//! Everything here works at the level of family members (bitmasks over a
//! ground set of at most 64 points) or of exhaustively enumerated L-initial
//! ID tuples, so the closed forms elsewhere in the crate can be checked
//! against first principles.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::time::Instant;

use num_traits::{One, ToPrimitive, Zero};

use crate::partners::k_partner;
use crate::subsets::{
    count_l, enumerate_ksets, lex_precedes, successor, ubinom, unrank, Count, KSubset, Params,
};
use crate::{Error, Result};

/// Limits for the exhaustive ID-tuple search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Upper bound on the raw search space `prod_i C(n, k_i)`.
    pub max_nodes: u64,
    /// Optional wall-clock limit.
    pub max_seconds: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_nodes: 10_000_000,
            max_seconds: None,
        }
    }
}

/// A candidate system given by the IDs of its L-initial families.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SystemIds {
    pub ids: Vec<KSubset>,
    pub params: Params,
}

impl fmt::Display for SystemIds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, id) in self.ids.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, ")")
    }
}

/// Extremal structure of an ID tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalClass {
    /// Every family is the star of a common element.
    Star {
        center: u32,
    },
    /// The two large families meet a fixed k_t-set, the rest contain it.
    Kernel {
        kernel: KSubset,
    },
    /// The tight four-family case: two equal intersecting small families and
    /// their complement-closure on top.
    Exceptional {
        shared: KSubset,
    },
    Other,
}

impl ExtremalClass {
    pub fn label(&self) -> &'static str {
        match self {
            ExtremalClass::Star { .. } => "star",
            ExtremalClass::Kernel { .. } => "kernel",
            ExtremalClass::Exceptional { .. } => "exceptional",
            ExtremalClass::Other => "other",
        }
    }
}

/// Result of the exhaustive search: the exact maximum total size, every
/// maximizing L-initial tuple, and the work accounted against the budget.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub max_sum: Count,
    pub extremal: Vec<SystemIds>,
    pub space: Count,
    pub nodes: u64,
}

/// A structured result row, rendered by the CLI as JSON or CSV.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub params: Option<Params>,
    pub regime: String,
    /// Ordered label/value pairs; values are decimal integers or short labels.
    pub values: Vec<(String, String)>,
    /// The f-profile sequence when the command produced one.
    pub profile: Vec<String>,
    pub tuples: Vec<Vec<String>>,
    pub classes: Vec<String>,
    pub checks: u64,
    pub failures: u64,
    pub runtime_ms: u128,
}

fn ground_guard(n: u32) -> Result<()> {
    if n > 64 {
        return Err(Error::InvalidParams {
            reason: format!("oracle paths require n <= 64, got {n}"),
        });
    }
    Ok(())
}

/// All members of `L(id, k)` in lex order.
pub fn lfamily(id: &KSubset, k: u32) -> Result<Vec<KSubset>> {
    let size = count_l(id, k)?
        .to_usize()
        .ok_or_else(|| Error::InvalidParams {
            reason: "family too large to enumerate".into(),
        })?;
    let mut out = Vec::with_capacity(size);
    if size == 0 {
        return Ok(out);
    }
    let mut cur = KSubset::first(id.ground(), k)?;
    for _ in 0..size {
        out.push(cur.clone());
        if out.len() < size {
            cur = successor(&cur)?.expect("enumeration stays within C(n,k)");
        }
    }
    Ok(out)
}

pub(crate) fn lfamily_masks(id: &KSubset, k: u32) -> Result<Vec<u64>> {
    ground_guard(id.ground())?;
    Ok(lfamily(id, k)?.iter().map(KSubset::mask).collect())
}

fn pairwise_meet(a: &[u64], b: &[u64]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| x & y != 0))
}

/// Reduce `(id, k)` to the size-k ID of the same family.
fn uniform_id(id: &KSubset, k: u32) -> Result<KSubset> {
    if id.len() == k {
        return Ok(id.clone());
    }
    let r = count_l(id, k)?;
    if r.is_zero() {
        return Err(Error::InvalidFamily {
            reason: format!("no {k}-set precedes {id}: the named family is empty"),
        });
    }
    unrank(id.ground(), &r, k)
}

/// Member-by-member cross-intersection test between `L(idA, kA)` and
/// `L(idB, kB)`.
pub fn families_cross_intersecting_bruteforce(
    id_a: &KSubset,
    ka: u32,
    id_b: &KSubset,
    kb: u32,
) -> Result<bool> {
    if id_a.ground() != id_b.ground() {
        return Err(Error::GroundMismatch {
            left: id_a.ground(),
            right: id_b.ground(),
        });
    }
    let fam_a = lfamily_masks(id_a, ka)?;
    let fam_b = lfamily_masks(id_b, kb)?;
    if fam_a.is_empty() || fam_b.is_empty() {
        return Err(Error::InvalidFamily {
            reason: "families must be non-empty".into(),
        });
    }
    Ok(pairwise_meet(&fam_a, &fam_b))
}

/// Cross-intersection test via the k-partner: `L(idA, kA)` and `L(idB, kB)`
/// are cross-intersecting iff `idB ⪯ k_partner(idA, kB)`; the test is free
/// when `kA + kB > n`. Agrees with the brute-force path everywhere.
pub fn families_cross_intersecting(
    id_a: &KSubset,
    ka: u32,
    id_b: &KSubset,
    kb: u32,
) -> Result<bool> {
    if id_a.ground() != id_b.ground() {
        return Err(Error::GroundMismatch {
            left: id_a.ground(),
            right: id_b.ground(),
        });
    }
    let n = id_a.ground();
    let a = uniform_id(id_a, ka)?;
    let b = uniform_id(id_b, kb)?;
    if ka + kb > n {
        return Ok(true);
    }
    match k_partner(&a, kb) {
        Ok(cap) => lex_precedes(&b, &cap),
        Err(Error::NoPrecedingSet { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Family-level maximality by exhaustion: the families are cross-intersecting
/// and neither can absorb another set of its own size. Agrees with the
/// head-partner criterion on IDs.
pub fn maximality_bruteforce(id_a: &KSubset, ka: u32, id_b: &KSubset, kb: u32) -> Result<bool> {
    if id_a.ground() != id_b.ground() {
        return Err(Error::GroundMismatch {
            left: id_a.ground(),
            right: id_b.ground(),
        });
    }
    let n = id_a.ground();
    if ka + kb > n {
        return Err(Error::SizeOutOfRange {
            k: ka + kb,
            ground: n,
        });
    }
    let fam_a = lfamily_masks(id_a, ka)?;
    let fam_b = lfamily_masks(id_b, kb)?;
    if fam_a.is_empty() || fam_b.is_empty() {
        return Err(Error::InvalidFamily {
            reason: "families must be non-empty".into(),
        });
    }
    if !pairwise_meet(&fam_a, &fam_b) {
        return Ok(false);
    }
    let grows = |fam: &[u64], other: &[u64], k: u32| -> Result<bool> {
        let all = enumerate_ksets(n, k)?;
        for cand in all.iter().skip(fam.len()) {
            let m = cand.mask();
            if other.iter().all(|&y| m & y != 0) {
                return Ok(true);
            }
        }
        Ok(false)
    };
    Ok(!grows(&fam_a, &fam_b, ka)? && !grows(&fam_b, &fam_a, kb)?)
}

struct Search {
    t: usize,
    sizes: Vec<u64>,
    suffix_full: Vec<u64>,
    caps: Vec<Vec<Option<Rc<Vec<u64>>>>>,
    best: u64,
    extremal: Vec<Vec<u64>>,
    ranks: Vec<u64>,
    nodes: u64,
    started: Instant,
    max_seconds: Option<u64>,
}

impl Search {
    fn dfs(&mut self, level: usize, sum: u64) -> Result<()> {
        let mut ub = self.sizes[level];
        for j in 0..level {
            if let Some(tab) = &self.caps[j][level] {
                ub = ub.min(tab[self.ranks[j] as usize - 1]);
            }
        }
        let rest = self.suffix_full[level + 1];
        let mut r = ub;
        while r >= 1 {
            self.nodes += 1;
            if self.nodes & 0xFFF == 0 {
                if let Some(limit) = self.max_seconds {
                    if self.started.elapsed().as_secs() >= limit {
                        return Err(Error::TimeBudgetExceeded { seconds: limit });
                    }
                }
            }
            if sum + r + rest < self.best {
                break;
            }
            self.ranks.push(r);
            if level + 1 == self.t {
                let total = sum + r;
                if total > self.best {
                    self.best = total;
                    self.extremal.clear();
                }
                if total == self.best {
                    self.extremal.push(self.ranks.clone());
                }
                self.ranks.pop();
                break;
            }
            self.dfs(level + 1, sum + r)?;
            self.ranks.pop();
            r -= 1;
        }
        Ok(())
    }
}

/// Canonical star ID `{1, n-k+2, ..., n}`.
pub fn star_id(n: u32, k: u32) -> Result<KSubset> {
    KSubset::new(n, vec![1])?.with_suffix_run(k - 1)
}

/// Kernel IDs: `{k_t, n-k+2, ..., n}` for the large families and
/// `[k_t] ∪ [n-k+k_t+1, n]` for families forced to contain the kernel.
fn kernel_meet_id(n: u32, k: u32, kt: u32) -> Result<KSubset> {
    KSubset::new(n, vec![kt])?.with_suffix_run(k - 1)
}

fn kernel_contain_id(n: u32, k: u32, kt: u32) -> Result<KSubset> {
    KSubset::interval(n, 1, kt)?.with_suffix_run(k - kt)
}

/// The pattern tuples seeding the search: the star tuple always, plus the
/// kernel tuple matching the regime. Seeds are feasible systems, so their
/// sums are constructive lower bounds; they never bias the exact maximum.
fn seed_tuples(params: &Params) -> Result<Vec<Vec<KSubset>>> {
    let n = params.n();
    let kt = params.k_min();
    let mut seeds = Vec::new();
    let star: Result<Vec<KSubset>> = params.ks().iter().map(|&k| star_id(n, k)).collect();
    seeds.push(star?);
    let meet_count = if params.is_mixed() {
        2
    } else if params.is_nonmixed() {
        1
    } else {
        0
    };
    if meet_count > 0 {
        let kernel: Result<Vec<KSubset>> = params
            .ks()
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                if i < meet_count {
                    kernel_meet_id(n, k, kt)
                } else {
                    kernel_contain_id(n, k, kt)
                }
            })
            .collect();
        seeds.push(kernel?);
    }
    Ok(seeds)
}

/// Exact maximum of `sum_i |L(I_i, k_i)|` over non-empty pairwise
/// cross-intersecting L-initial tuples, together with every maximizer.
///
/// The search walks the leading ID downward from the lex-last set and prunes
/// a branch as soon as completing every remaining family in full could no
/// longer match the incumbent.
pub fn exact_m(params: &Params, budget: &SearchBudget) -> Result<OracleOutcome> {
    let n = params.n();
    ground_guard(n)?;
    let t = params.t();
    let mut space = Count::one();
    for &k in params.ks() {
        space *= ubinom(n as u64, k as u64);
    }
    if space > Count::from(budget.max_nodes) {
        return Err(Error::BudgetExceeded {
            space: space.to_string(),
            budget: budget.max_nodes,
        });
    }

    let mut ids_by_size: HashMap<u32, Rc<Vec<KSubset>>> = HashMap::new();
    for &k in params.ks() {
        if let std::collections::hash_map::Entry::Vacant(e) = ids_by_size.entry(k) {
            e.insert(Rc::new(enumerate_ksets(n, k)?));
        }
    }
    let sizes: Vec<u64> = params
        .ks()
        .iter()
        .map(|k| ids_by_size[k].len() as u64)
        .collect();

    // cap[(ka, kb)][r-1]: greatest rank of a k_b-ID compatible with the
    // rank-r k_a-ID; only needed for non-free pairs
    let mut cap_by_sizes: HashMap<(u32, u32), Rc<Vec<u64>>> = HashMap::new();
    for &ka in params.ks() {
        for &kb in params.ks() {
            if ka + kb > n || cap_by_sizes.contains_key(&(ka, kb)) {
                continue;
            }
            let mut caps = Vec::with_capacity(ids_by_size[&ka].len());
            for id in ids_by_size[&ka].iter() {
                let cap = match k_partner(id, kb) {
                    Ok(kp) => count_l(&kp, kb)?.to_u64().expect("rank fits u64"),
                    Err(Error::NoPrecedingSet { .. }) => 0,
                    Err(e) => return Err(e),
                };
                caps.push(cap);
            }
            cap_by_sizes.insert((ka, kb), Rc::new(caps));
        }
    }
    let caps: Vec<Vec<Option<Rc<Vec<u64>>>>> = (0..t)
        .map(|i| {
            (0..t)
                .map(|j| {
                    cap_by_sizes
                        .get(&(params.k(i + 1), params.k(j + 1)))
                        .cloned()
                })
                .collect()
        })
        .collect();

    let mut suffix_full = vec![0u64; t + 1];
    for i in (0..t).rev() {
        suffix_full[i] = suffix_full[i + 1] + sizes[i];
    }

    // constructive lower bound from the pattern tuples
    let mut best = 0u64;
    for seed in seed_tuples(params)? {
        let ranks: Vec<u64> = seed
            .iter()
            .enumerate()
            .map(|(i, id)| count_l(id, params.k(i + 1)).map(|c| c.to_u64().unwrap()))
            .collect::<Result<_>>()?;
        let feasible = (0..t).all(|i| {
            (i + 1..t).all(|j| match &caps[i][j] {
                Some(tab) => ranks[j] <= tab[ranks[i] as usize - 1],
                None => true,
            })
        });
        if feasible {
            best = best.max(ranks.iter().sum());
        }
    }

    let mut search = Search {
        t,
        sizes,
        suffix_full,
        caps,
        best,
        extremal: Vec::new(),
        ranks: Vec::with_capacity(t),
        nodes: 0,
        started: Instant::now(),
        max_seconds: budget.max_seconds,
    };
    search.dfs(0, 0)?;

    let mut extremal: Vec<SystemIds> = search
        .extremal
        .iter()
        .map(|ranks| {
            let ids = ranks
                .iter()
                .enumerate()
                .map(|(i, &r)| ids_by_size[&params.k(i + 1)][r as usize - 1].clone())
                .collect();
            SystemIds {
                ids,
                params: params.clone(),
            }
        })
        .collect();
    extremal.sort();
    debug_assert!(!extremal.is_empty());

    Ok(OracleOutcome {
        max_sum: Count::from(search.best),
        extremal,
        space,
        nodes: search.nodes,
    })
}

fn family_intersecting(id: &KSubset, k: u32) -> Result<bool> {
    let masks = lfamily_masks(id, k)?;
    for (i, &x) in masks.iter().enumerate() {
        for &y in &masks[i + 1..] {
            if x & y == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Classify an extremal tuple by its canonical ID pattern. The caller is
/// responsible for extremality.
///
/// Under the tight four-family pattern (`t = 4`, `k_1 = k_2`, `k_3 = k_4`,
/// `n = k_1 + k_3`) the star and kernel tuples are degenerate instances of
/// the exceptional structure and classify as such.
pub fn classify_extremal(sys: &SystemIds) -> Result<ExtremalClass> {
    let p = &sys.params;
    let n = p.n();
    let t = p.t();
    if sys.ids.len() != t {
        return Err(Error::InvalidParams {
            reason: format!("expected {t} ids, got {}", sys.ids.len()),
        });
    }
    for (i, id) in sys.ids.iter().enumerate() {
        if id.ground() != n || id.len() != p.k(i + 1) {
            return Err(Error::InvalidParams {
                reason: format!("id {id} does not fit family {}", i + 1),
            });
        }
    }
    let kt = p.k_min();

    let exceptional_params = t == 4 && p.k(1) == p.k(2) && p.k(3) == p.k(4) && n == p.k(1) + p.k(3);
    if exceptional_params
        && sys.ids[0] == sys.ids[1]
        && sys.ids[2] == sys.ids[3]
        && count_l(&sys.ids[0], p.k(1))? + count_l(&sys.ids[2], p.k(3))?
            == ubinom(n as u64, p.k(1) as u64)
        && family_intersecting(&sys.ids[2], p.k(3))?
    {
        return Ok(ExtremalClass::Exceptional {
            shared: sys.ids[2].clone(),
        });
    }

    let is_star = (1..=t).try_fold(true, |acc, i| {
        Ok::<_, Error>(acc && sys.ids[i - 1] == star_id(n, p.k(i))?)
    })?;
    if is_star {
        return Ok(ExtremalClass::Star { center: 1 });
    }

    let meet_count = if p.is_mixed() { 2 } else { 1 };
    let is_kernel = (1..=t).try_fold(true, |acc, i| {
        let want = if i <= meet_count {
            kernel_meet_id(n, p.k(i), kt)?
        } else {
            kernel_contain_id(n, p.k(i), kt)?
        };
        Ok::<_, Error>(acc && sys.ids[i - 1] == want)
    })?;
    if is_kernel {
        return Ok(ExtremalClass::Kernel {
            kernel: KSubset::interval(n, 1, kt)?,
        });
    }

    Ok(ExtremalClass::Other)
}

/// `f` over every `R_1` in the window `ℛ_1`, in lex order. The first entry
/// is `lambda_1` and the last is `lambda_2`.
pub fn f_profile(params: &Params) -> Result<Vec<Count>> {
    let regime = crate::subsets::Regime::mixed(params)?;
    crate::subsets::r1_window(params)?
        .iter()
        .map(|r1| crate::bounds::f_value(r1, params, &regime))
        .collect()
}

fn validated_family(ground: u32, fam: &[KSubset]) -> Result<(u32, Vec<u64>)> {
    if fam.is_empty() {
        return Err(Error::InvalidFamily {
            reason: "family is empty".into(),
        });
    }
    let k = fam[0].len();
    let mut masks = Vec::with_capacity(fam.len());
    for s in fam {
        if s.ground() != ground {
            return Err(Error::GroundMismatch {
                left: ground,
                right: s.ground(),
            });
        }
        if s.len() != k {
            return Err(Error::InvalidFamily {
                reason: "family is not uniform".into(),
            });
        }
        masks.push(s.mask());
    }
    let mut seen = masks.clone();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidFamily {
            reason: "family has repeated members".into(),
        });
    }
    Ok((k, masks))
}

/// Lex-compression check: given explicit cross-intersecting uniform families,
/// replace each by the L-initial family of the same size and report whether
/// the compressed pair is still cross-intersecting. Any `false` is a
/// counterexample to the compression theorem.
pub fn kk_compress_check(ground: u32, fam_a: &[KSubset], fam_b: &[KSubset]) -> Result<bool> {
    ground_guard(ground)?;
    let (ka, masks_a) = validated_family(ground, fam_a)?;
    let (kb, masks_b) = validated_family(ground, fam_b)?;
    if !pairwise_meet(&masks_a, &masks_b) {
        return Err(Error::NotCrossIntersecting);
    }
    let la: Vec<u64> = enumerate_ksets(ground, ka)?
        .iter()
        .take(masks_a.len())
        .map(KSubset::mask)
        .collect();
    let lb: Vec<u64> = enumerate_ksets(ground, kb)?
        .iter()
        .take(masks_b.len())
        .map(KSubset::mask)
        .collect();
    Ok(pairwise_meet(&la, &lb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::Regime;

    fn ks(n: u32, elems: &[u32]) -> KSubset {
        KSubset::new(n, elems.to_vec()).unwrap()
    }

    fn params(n: u32, ks: &[u32]) -> Params {
        Params::new(n, ks.to_vec()).unwrap()
    }

    fn cnt(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn cross_intersecting_examples() {
        let t = |a: &KSubset, ka, b: &KSubset, kb| {
            let fast = families_cross_intersecting(a, ka, b, kb).unwrap();
            let gold = families_cross_intersecting_bruteforce(a, ka, b, kb).unwrap();
            assert_eq!(fast, gold);
            fast
        };
        assert!(t(&ks(5, &[1, 4, 5]), 3, &ks(5, &[1, 5]), 2));
        assert!(!t(&ks(5, &[2, 3, 4]), 3, &ks(5, &[1, 5]), 2));
        assert!(t(&ks(5, &[2, 3, 4]), 3, &ks(5, &[1, 4]), 2));
    }

    #[test]
    fn cross_intersecting_fast_agrees_with_bruteforce() {
        for n in 3..=6u32 {
            for ka in 1..n {
                for kb in 1..n {
                    for a in enumerate_ksets(n, ka).unwrap() {
                        for b in enumerate_ksets(n, kb).unwrap() {
                            assert_eq!(
                                families_cross_intersecting(&a, ka, &b, kb).unwrap(),
                                families_cross_intersecting_bruteforce(&a, ka, &b, kb).unwrap(),
                                "n={n} A={a} B={b}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn maximality_examples() {
        assert!(maximality_bruteforce(&ks(9, &[2, 4, 7]), 3, &ks(9, &[1, 3, 5, 6, 7]), 5).unwrap());
        assert!(!maximality_bruteforce(&ks(9, &[2, 4, 7]), 3, &ks(9, &[1, 3, 4, 9]), 4).unwrap());
        assert!(maximality_bruteforce(&ks(5, &[1, 4, 5]), 3, &ks(5, &[1, 5]), 2).unwrap());
        assert!(maximality_bruteforce(&ks(5, &[1, 4, 5]), 3, &ks(5, &[1, 5]), 3).is_err());
    }

    #[test]
    fn exact_m_examples() {
        let budget = SearchBudget::default();

        let out = exact_m(&params(5, &[3, 3, 2]), &budget).unwrap();
        assert_eq!(out.max_sum, cnt(19));
        assert_eq!(out.extremal.len(), 1);
        assert_eq!(
            out.extremal[0].ids,
            vec![ks(5, &[2, 4, 5]), ks(5, &[2, 4, 5]), ks(5, &[1, 2])]
        );

        let out = exact_m(&params(4, &[2, 2]), &budget).unwrap();
        assert_eq!(out.max_sum, cnt(6));
        assert_eq!(out.extremal.len(), 5);

        let out = exact_m(&params(5, &[3, 3, 2, 2]), &budget).unwrap();
        assert_eq!(out.max_sum, cnt(20));
        assert!(out.extremal.len() >= 4);
        let named = SystemIds {
            ids: vec![
                ks(5, &[2, 3, 5]),
                ks(5, &[2, 3, 5]),
                ks(5, &[1, 3]),
                ks(5, &[1, 3]),
            ],
            params: params(5, &[3, 3, 2, 2]),
        };
        assert!(out.extremal.contains(&named));
    }

    #[test]
    fn exact_m_budget() {
        let out = exact_m(
            &params(5, &[3, 3, 2]),
            &SearchBudget {
                max_nodes: 10,
                max_seconds: None,
            },
        );
        assert!(matches!(out, Err(Error::BudgetExceeded { .. })));

        // this search visits several thousand nodes, enough to hit the
        // periodic deadline check
        let out = exact_m(
            &params(9, &[4, 4, 3]),
            &SearchBudget {
                max_nodes: 10_000_000,
                max_seconds: Some(0),
            },
        );
        assert!(matches!(out, Err(Error::TimeBudgetExceeded { .. })));
    }

    #[test]
    fn classify_examples() {
        let sys = SystemIds {
            ids: vec![ks(5, &[1, 4, 5]), ks(5, &[1, 4, 5]), ks(5, &[1, 5])],
            params: params(5, &[3, 3, 2]),
        };
        assert_eq!(
            classify_extremal(&sys).unwrap(),
            ExtremalClass::Star { center: 1 }
        );

        let sys = SystemIds {
            ids: vec![ks(5, &[2, 4, 5]), ks(5, &[2, 4, 5]), ks(5, &[1, 2])],
            params: params(5, &[3, 3, 2]),
        };
        assert_eq!(
            classify_extremal(&sys).unwrap(),
            ExtremalClass::Kernel {
                kernel: ks(5, &[1, 2])
            }
        );

        let sys = SystemIds {
            ids: vec![
                ks(5, &[2, 3, 5]),
                ks(5, &[2, 3, 5]),
                ks(5, &[1, 3]),
                ks(5, &[1, 3]),
            ],
            params: params(5, &[3, 3, 2, 2]),
        };
        assert_eq!(
            classify_extremal(&sys).unwrap(),
            ExtremalClass::Exceptional {
                shared: ks(5, &[1, 3])
            }
        );

        // star and kernel degenerate into the exceptional structure
        let sys = SystemIds {
            ids: vec![
                ks(5, &[1, 4, 5]),
                ks(5, &[1, 4, 5]),
                ks(5, &[1, 5]),
                ks(5, &[1, 5]),
            ],
            params: params(5, &[3, 3, 2, 2]),
        };
        assert_eq!(classify_extremal(&sys).unwrap().label(), "exceptional");
    }

    #[test]
    fn profile_examples() {
        let seq = f_profile(&params(5, &[3, 3, 2])).unwrap();
        assert_eq!(seq, vec![cnt(16), cnt(17), cnt(18), cnt(19)]);

        let seq = f_profile(&params(5, &[3, 3, 2, 2])).unwrap();
        assert_eq!(seq, vec![cnt(20); 4]);

        let seq = f_profile(&params(6, &[4, 3, 2])).unwrap();
        assert_eq!(seq.first(), Some(&cnt(25)));
        assert_eq!(seq.last(), Some(&cnt(31)));

        assert!(f_profile(&params(6, &[3, 3, 2])).is_err());
    }

    #[test]
    fn kk_examples() {
        let a = vec![ks(4, &[1, 2])];
        let b = vec![ks(4, &[1, 3]), ks(4, &[1, 4]), ks(4, &[1, 2])];
        assert!(kk_compress_check(4, &a, &b).unwrap());

        let star: Vec<KSubset> = lfamily(&star_id(6, 3).unwrap(), 3).unwrap();
        assert!(kk_compress_check(6, &star, &star).unwrap());

        // not cross-intersecting: rejected
        let a = vec![ks(4, &[1, 2])];
        let b = vec![ks(4, &[3, 4])];
        assert!(matches!(
            kk_compress_check(4, &a, &b),
            Err(Error::NotCrossIntersecting)
        ));
    }

    #[test]
    fn forced_tuple_is_feasible_and_matches_f() {
        // the f objective equals the actual family sizes of its forced tuple
        let p = params(5, &[3, 3, 2]);
        let regime = Regime::mixed(&p).unwrap();
        for r1 in crate::subsets::r1_window(&p).unwrap() {
            let ids = crate::bounds::system_ids_for(&r1, &p, &regime).unwrap();
            for i in 0..p.t() {
                for j in i + 1..p.t() {
                    assert!(families_cross_intersecting_bruteforce(
                        &ids[i],
                        p.k(i + 1),
                        &ids[j],
                        p.k(j + 1)
                    )
                    .unwrap());
                }
            }
        }
    }
}
