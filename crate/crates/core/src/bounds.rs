//! Closed-form bounds and the single-variable objective `f(R_1)`.
//!
//! For a system in the mixed window the two candidate maxima are
//!
//! ```text
//! lambda_1 = sum_i C(n-1, k_i - 1)                              (star value)
//! lambda_2 = sum_{i<=2} (C(n,k_i) - C(n-k_t,k_i))
//!          + sum_{i>=3} C(n-k_t, k_i - k_t)                     (kernel value)
//! ```
//!
//! and the objective `f(R_1)` sums the sizes of the L-initial families forced
//! by the ID `R_1` of the first family: corresponding k-sets for the freely
//! cross-intersecting group, k-partners for the rest. Advancing `R_1` changes
//! `f` by `gamma - delta`, where the increments have closed forms in terms of
//! the suffix-run length of the new ID.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partners::{corresponding_k_set, k_partner};
use crate::subsets::{
    count_l, lex_precedes, range_ri, tail_decompose, ubinom, Count, KSubset, Params, Regime,
};
use crate::{Error, Result};

/// Exact binomial coefficient; out-of-range indices yield 0.
pub fn binom(n: i64, k: i64) -> Count {
    if n < 0 || k < 0 || k > n {
        return Count::zero();
    }
    ubinom(n as u64, k as u64)
}

/// Positive rational weights, one per family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<BigRational>,
}

impl WeightVector {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if weights.is_empty() || weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::InvalidParams {
                reason: "weights must be positive".into(),
            });
        }
        Ok(Self { weights })
    }

    pub fn unit(t: usize) -> Self {
        Self {
            weights: vec![BigRational::one(); t],
        }
    }

    pub fn from_integers(weights: &[i64]) -> Result<Self> {
        Self::new(
            weights
                .iter()
                .map(|&w| BigRational::from_integer(w.into()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn get(&self, i: usize) -> &BigRational {
        &self.weights[i - 1]
    }
}

/// How family sizes move as the leading ID advances from `R_1` to `R'_1`:
/// `alpha_i` per free family, their sum `gamma`, and the total loss `delta`
/// across the non-free families. Always `f(R'_1) - f(R_1) = gamma - delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncrementReport {
    pub alpha_per_index: Vec<Count>,
    pub gamma: Count,
    pub delta: Count,
}

fn rational(c: &Count) -> BigRational {
    BigRational::from_integer(BigInt::from(c.clone()))
}

/// `(lambda_1, lambda_2)` for mixed-window parameters.
pub fn lambda_values(params: &Params) -> Result<(Count, Count)> {
    if !params.is_mixed() {
        return Err(Error::RegimeViolation {
            reason: format!("{params} is not in the mixed window"),
        });
    }
    Ok(lambda_values_unchecked(params))
}

pub(crate) fn lambda_values_unchecked(params: &Params) -> (Count, Count) {
    let n = params.n() as i64;
    let kt = params.k_min() as i64;
    let mut l1 = Count::zero();
    let mut l2 = Count::zero();
    for (i, &k) in params.ks().iter().enumerate() {
        let k = k as i64;
        l1 += binom(n - 1, k - 1);
        if i < 2 {
            l2 += binom(n, k) - binom(n - kt, k);
        } else {
            l2 += binom(n - kt, k - kt);
        }
    }
    (l1, l2)
}

/// `max(lambda_1, lambda_2)`: the exact maximum total size in the mixed
/// window `k_1 + k_3 <= n < k_1 + k_2`.
pub fn mixed_bound(params: &Params) -> Result<Count> {
    let (l1, l2) = lambda_values(params)?;
    Ok(l1.max(l2))
}

/// The exact maximum total size for `n >= k_1 + k_2`.
pub fn nonmixed_bound(params: &Params) -> Result<Count> {
    if !params.is_nonmixed() {
        return Err(Error::RegimeViolation {
            reason: format!("{params} requires n >= k_1 + k_2"),
        });
    }
    let (star, kernel) = nonmixed_branches(params);
    Ok(star.max(kernel))
}

/// The two competing values behind [`nonmixed_bound`]:
/// `sum_i C(n-1, k_i-1)` and
/// `C(n,k_1) - C(n-k_t,k_1) + sum_{i>=2} C(n-k_t, k_i-k_t)`.
pub fn nonmixed_branches(params: &Params) -> (Count, Count) {
    let n = params.n() as i64;
    let kt = params.k_min() as i64;
    let mut star = Count::zero();
    let mut kernel = Count::zero();
    for (i, &k) in params.ks().iter().enumerate() {
        let k = k as i64;
        star += binom(n - 1, k - 1);
        if i == 0 {
            kernel += binom(n, k) - binom(n - kt, k);
        } else {
            kernel += binom(n - kt, k - kt);
        }
    }
    (star, kernel)
}

/// Two-family maximum `C(n,k) - C(n-l,k) + 1` for `n >= k + l`, `k >= l`.
/// At `n = k + l` this equals `C(n, l)`.
pub fn two_family_bound(n: u32, k: u32, l: u32) -> Result<Count> {
    if l < 1 || k < l || n < k + l {
        return Err(Error::RegimeViolation {
            reason: format!("two-family bound needs n >= k + l and k >= l, got ({n},{k},{l})"),
        });
    }
    let (n, k, l) = (n as i64, k as i64, l as i64);
    Ok(binom(n, k) - binom(n - l, k) + Count::one())
}

/// Weighted maximum of `sum_j d_j |A_j|` over systems where some family `i`
/// has at least star size, valid when `n >= k_i + k_j` for all `j != i`:
///
/// ```text
/// max { d_i C(n,k_i) - d_i C(n-m_i,k_i) + sum_{j!=i} d_j C(n-m_i, k_j-m_i),
///       sum_j d_j C(n-1, k_j-1) }
/// ```
///
/// with `m_i = min_{j != i} k_j`.
pub fn weighted_bound(params: &Params, d: &WeightVector, i: usize) -> Result<BigRational> {
    let t = params.t();
    if i < 1 || i > t {
        return Err(Error::FamilyIndex { index: i, t });
    }
    if d.len() != t {
        return Err(Error::InvalidParams {
            reason: format!("expected {t} weights, got {}", d.len()),
        });
    }
    let n = params.n();
    let ki = params.k(i);
    let mi = (1..=t)
        .filter(|&j| j != i)
        .map(|j| params.k(j))
        .min()
        .unwrap();
    for j in 1..=t {
        if j != i && n < ki + params.k(j) {
            return Err(Error::RegimeViolation {
                reason: format!("{params} requires n >= k_{i} + k_{j}"),
            });
        }
    }
    let (n, ki, mi) = (n as i64, ki as i64, mi as i64);
    let mut kernel = d.get(i) * rational(&(binom(n, ki) - binom(n - mi, ki)));
    let mut star = BigRational::zero();
    for j in 1..=t {
        let kj = params.k(j) as i64;
        star += d.get(j) * rational(&binom(n - 1, kj - 1));
        if j != i {
            kernel += d.get(j) * rational(&binom(n - mi, kj - mi));
        }
    }
    Ok(star.max(kernel))
}

/// `f_i({s}) = C(n,k_i) - C(n-s,k_i) + sum_{j != i} C(n-s, k_j - s)` for
/// `s in [m_i]`, in the regime `n >= k_1 + k_2`.
pub fn f_i_of_s(params: &Params, i: usize, s: u32) -> Result<Count> {
    let t = params.t();
    if i < 1 || i > t {
        return Err(Error::FamilyIndex { index: i, t });
    }
    if !params.is_nonmixed() {
        return Err(Error::RegimeViolation {
            reason: format!("{params} requires n >= k_1 + k_2"),
        });
    }
    let mi = (1..=t)
        .filter(|&j| j != i)
        .map(|j| params.k(j))
        .min()
        .unwrap();
    if s < 1 || s > mi {
        return Err(Error::SizeOutOfRange { k: s, ground: mi });
    }
    let (n, s) = (params.n() as i64, s as i64);
    let ki = params.k(i) as i64;
    let mut total = binom(n, ki) - binom(n - s, ki);
    for j in 1..=t {
        if j != i {
            total += binom(n - s, params.k(j) as i64 - s);
        }
    }
    Ok(total)
}

/// Whether `R` lies in the window `ℛ_1` for these parameters.
pub fn in_r1_window(r: &KSubset, params: &Params) -> Result<bool> {
    let (lo, hi) = range_ri(1, params)?;
    Ok(lex_precedes(&lo, r)? && lex_precedes(r, &hi)?)
}

fn require_window(r: &KSubset, params: &Params) -> Result<()> {
    if r.len() != params.k(1) || !in_r1_window(r, params)? {
        return Err(Error::OutsideWindow { set: r.to_string() });
    }
    Ok(())
}

/// The full ID tuple forced by `R_1`: `R_1` itself, corresponding `k_i`-sets
/// for the remaining free families, and `k_i`-partners for the rest.
pub fn system_ids_for(r1: &KSubset, params: &Params, regime: &Regime) -> Result<Vec<KSubset>> {
    require_window(r1, params)?;
    let mut ids = Vec::with_capacity(params.t());
    for i in 1..=params.t() {
        if i == 1 {
            ids.push(r1.clone());
        } else if i <= regime.s() {
            ids.push(corresponding_k_set(r1, params.k(i))?);
        } else {
            ids.push(k_partner(r1, params.k(i))?);
        }
    }
    Ok(ids)
}

/// `f(R_1) = sum_i |L(R_i, k_i)|` over the forced ID tuple.
pub fn f_value(r1: &KSubset, params: &Params, regime: &Regime) -> Result<Count> {
    let ids = system_ids_for(r1, params, regime)?;
    let mut total = Count::zero();
    for (idx, id) in ids.iter().enumerate() {
        total += count_l(id, params.k(idx + 1))?;
    }
    Ok(total)
}

/// The increment report for `R_1 ⪯ R'_1`, both in `ℛ_1`.
pub fn increments(
    r1: &KSubset,
    r1p: &KSubset,
    params: &Params,
    regime: &Regime,
) -> Result<IncrementReport> {
    if !lex_precedes(r1, r1p)? {
        return Err(Error::OrderViolation {
            first: r1.to_string(),
            second: r1p.to_string(),
        });
    }
    let ids = system_ids_for(r1, params, regime)?;
    let ids_p = system_ids_for(r1p, params, regime)?;
    let s = regime.s();
    let mut alpha_per_index = Vec::with_capacity(s);
    let mut gamma = Count::zero();
    let mut delta = Count::zero();
    for i in 1..=params.t() {
        let k = params.k(i);
        let before = count_l(&ids[i - 1], k)?;
        let after = count_l(&ids_p[i - 1], k)?;
        if i <= s {
            let a = after - before;
            gamma += &a;
            alpha_per_index.push(a);
        } else {
            delta += before - after;
        }
    }
    Ok(IncrementReport {
        alpha_per_index,
        gamma,
        delta,
    })
}

/// Closed form for `alpha_i` across the step onto `R'_1` from its immediate
/// predecessor in `ℛ_1`: `C(ℓ(R'_1), k_i - |R'_1 ∖ R'_1^t|)`. Zero exactly
/// when `ℓ(R'_1) < k_1 - k_i`.
pub fn alpha_closed_form(
    r1p: &KSubset,
    i: usize,
    params: &Params,
    regime: &Regime,
) -> Result<Count> {
    if i < 1 || i > regime.s() {
        return Err(Error::FamilyIndex {
            index: i,
            t: regime.s(),
        });
    }
    require_window(r1p, params)?;
    let (lo, _) = range_ri(1, params)?;
    if *r1p == lo {
        return Err(Error::OutsideWindow {
            set: format!("{r1p} has no predecessor in the window"),
        });
    }
    let (head, ell) = tail_decompose(r1p)?;
    Ok(binom(ell as i64, params.k(i) as i64 - head.len() as i64))
}

/// Closed form for the loss across a consecutive step whose upper set has
/// maximum `q`: `sum_{j=2}^t C(n-q, k_j - (q - k_1))`.
///
/// Matching the per-step `delta` of a split system means evaluating this on
/// the reduced parameter list `(k_1, k_{s+1}, ..., k_t)`.
pub fn beta_closed_form(q: u32, params: &Params) -> Count {
    let n = params.n() as i64;
    let k1 = params.k(1) as i64;
    let q = q as i64;
    let mut total = Count::zero();
    for j in 2..=params.t() {
        total += binom(n - q, params.k(j) as i64 - (q - k1));
    }
    total
}
