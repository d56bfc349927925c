//! Lexicographic arithmetic on k-subsets of `[n] = {1, ..., n}`.
//!
//! The order used throughout is: `A ⪯ B` iff `A ⊇ B`, or both difference
//! sets are non-empty and `min(A∖B) < min(B∖A)`. It is reflexive and total
//! on distinct sets of any sizes; restricted to sets of one size it is the
//! usual lexicographic order on sorted element sequences. A proper subset
//! does *not* precede its superset (`min(∅)` counts as `+∞`).

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact non-negative count of unbounded magnitude.
pub type Count = BigUint;

/// A subset of `[n]` kept as a strictly increasing element list.
///
/// Elements are 1-based. The empty set is representable; operations that
/// require non-empty input reject it explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    ground: u32,
    elems: Vec<u32>,
}

impl KSubset {
    pub fn new(ground: u32, elems: Vec<u32>) -> Result<Self> {
        if ground == 0 {
            return Err(Error::InvalidParams {
                reason: "ground set must be non-empty".into(),
            });
        }
        for (i, &e) in elems.iter().enumerate() {
            if e < 1 || e > ground {
                return Err(Error::ElementOutOfRange { element: e, ground });
            }
            if i > 0 && elems[i - 1] >= e {
                return Err(Error::NotStrictlyIncreasing);
            }
        }
        Ok(Self { ground, elems })
    }

    pub fn empty(ground: u32) -> Self {
        Self {
            ground,
            elems: Vec::new(),
        }
    }

    /// The interval `[a, b]` as a subset; `a > b` yields the empty set.
    pub fn interval(ground: u32, a: u32, b: u32) -> Result<Self> {
        if a > b {
            return Ok(Self::empty(ground));
        }
        Self::new(ground, (a..=b).collect())
    }

    /// Lex-first k-set `{1, ..., k}`.
    pub fn first(ground: u32, k: u32) -> Result<Self> {
        if k < 1 || k > ground {
            return Err(Error::SizeOutOfRange { k, ground });
        }
        Self::interval(ground, 1, k)
    }

    /// Lex-last k-set `{n-k+1, ..., n}`.
    pub fn last(ground: u32, k: u32) -> Result<Self> {
        if k < 1 || k > ground {
            return Err(Error::SizeOutOfRange { k, ground });
        }
        Self::interval(ground, ground - k + 1, ground)
    }

    pub fn ground(&self) -> u32 {
        self.ground
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> u32 {
        self.elems.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn max_elem(&self) -> Option<u32> {
        self.elems.last().copied()
    }

    pub fn min_elem(&self) -> Option<u32> {
        self.elems.first().copied()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    /// Bitmask with bit `e-1` set for each element `e`. Requires `n <= 64`.
    pub fn mask(&self) -> u64 {
        debug_assert!(self.ground <= 64);
        self.elems.iter().fold(0u64, |m, &e| m | 1u64 << (e - 1))
    }

    /// `self ∪ [n-ell+1, n]`; the run must be disjoint from `self`.
    pub fn with_suffix_run(&self, ell: u32) -> Result<Self> {
        if ell == 0 {
            return Ok(self.clone());
        }
        let start =
            self.ground
                .checked_sub(ell - 1)
                .filter(|&s| s >= 1)
                .ok_or(Error::SizeOutOfRange {
                    k: ell,
                    ground: self.ground,
                })?;
        if let Some(m) = self.max_elem() {
            if m >= start {
                return Err(Error::NotStrictlyIncreasing);
            }
        }
        let mut elems = self.elems.clone();
        elems.extend(start..=self.ground);
        Ok(Self {
            ground: self.ground,
            elems,
        })
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// System parameters `(n, k_1 >= k_2 >= ... >= k_t)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params {
    n: u32,
    ks: Vec<u32>,
}

impl Params {
    pub fn new(n: u32, ks: Vec<u32>) -> Result<Self> {
        if ks.len() < 2 {
            return Err(Error::InvalidParams {
                reason: "need at least two families".into(),
            });
        }
        if ks.contains(&0) {
            return Err(Error::InvalidParams {
                reason: "family sizes must be positive".into(),
            });
        }
        if ks.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams {
                reason: "family sizes must be non-increasing".into(),
            });
        }
        if ks[0] > n {
            return Err(Error::InvalidParams {
                reason: format!("k_1 = {} exceeds n = {}", ks[0], n),
            });
        }
        Ok(Self { n, ks })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> usize {
        self.ks.len()
    }

    pub fn ks(&self) -> &[u32] {
        &self.ks
    }

    /// `k_i`, 1-based.
    pub fn k(&self, i: usize) -> u32 {
        self.ks[i - 1]
    }

    pub fn k_min(&self) -> u32 {
        *self.ks.last().unwrap()
    }

    /// Mixed window: `t >= 3` and `k_1 + k_3 <= n < k_1 + k_2`.
    pub fn is_mixed(&self) -> bool {
        self.ks.len() >= 3 && self.ks[0] + self.ks[2] <= self.n && self.n < self.ks[0] + self.ks[1]
    }

    /// Non-mixed window: `n >= k_1 + k_2`.
    pub fn is_nonmixed(&self) -> bool {
        self.n >= self.ks[0] + self.ks[1]
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.ks.iter().map(|k| k.to_string()).collect();
        write!(f, "n={} ks=({})", self.n, ks.join(","))
    }
}

/// Splits a system into the `s` freely cross-intersecting top families and
/// the rest, with `s'` the number of indices attaining `k_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Regime {
    s: usize,
    s_prime: usize,
}

impl Regime {
    /// The standard mixed split `s = 2`, valid when `k_1+k_3 <= n < k_1+k_2`.
    pub fn mixed(params: &Params) -> Result<Self> {
        if !params.is_mixed() {
            return Err(Error::RegimeViolation {
                reason: format!("{params} is not in the mixed window k_1+k_3 <= n < k_1+k_2"),
            });
        }
        Self::with_free_count(params, 2)
    }

    /// General split: `s >= s' >= 1`, `t >= s+1`,
    /// `k_1 = ... = k_{s'} > k_{s'+1}` and `k_1+k_{s+1} <= n < k_{s-1}+k_s`.
    pub fn with_free_count(params: &Params, s: usize) -> Result<Self> {
        let t = params.t();
        if s < 2 || s + 1 > t {
            return Err(Error::RegimeViolation {
                reason: format!("free count s={s} needs 2 <= s <= t-1 = {}", t - 1),
            });
        }
        let ks = params.ks();
        let s_prime = ks.iter().take_while(|&&k| k == ks[0]).count();
        if s_prime > s {
            return Err(Error::RegimeViolation {
                reason: format!("s'={s_prime} exceeds s={s}"),
            });
        }
        let n = params.n();
        let lo = ks[0] + ks[s];
        let hi = ks[s - 2] + ks[s - 1];
        if !(lo <= n && n < hi) {
            return Err(Error::RegimeViolation {
                reason: format!(
                    "{params} violates k_1+k_{} <= n < k_{}+k_{}",
                    s + 1,
                    s - 1,
                    s
                ),
            });
        }
        Ok(Self { s, s_prime })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn s_prime(&self) -> usize {
        self.s_prime
    }

    /// The flat-profile exception: `n = k_1 + k_t` and `s' = t - s`.
    pub fn is_flat_exception(&self, params: &Params) -> bool {
        params.n() == params.k(1) + params.k_min() && self.s_prime == params.t() - self.s
    }
}

pub(crate) fn ubinom(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut res = Count::one();
    for i in 0..k {
        res = res * (n - i) / (i + 1);
    }
    res
}

fn check_ground(a: &KSubset, b: &KSubset) -> Result<()> {
    if a.ground() != b.ground() {
        return Err(Error::GroundMismatch {
            left: a.ground(),
            right: b.ground(),
        });
    }
    Ok(())
}

/// `A ⪯ B`: `A ⊇ B` or `min(A∖B) < min(B∖A)` with `min(∅) = +∞`.
pub fn lex_precedes(a: &KSubset, b: &KSubset) -> Result<bool> {
    check_ground(a, b)?;
    let (xs, ys) = (a.elements(), b.elements());
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        if xs[i] == ys[j] {
            i += 1;
            j += 1;
        } else if xs[i] < ys[j] {
            // xs[i] = min(A∖B) and every earlier element is common
            return Ok(true);
        } else {
            // ys[j] = min(B∖A); A precedes only if it were a superset,
            // impossible once B holds an element A lacks below all of A∖B
            return Ok(false);
        }
    }
    // one list exhausted: A ⪯ B iff B ⊆ A
    Ok(j == ys.len())
}

/// Strict variant: `A ⪯ B` and `A != B`.
pub fn lex_strictly_precedes(a: &KSubset, b: &KSubset) -> Result<bool> {
    Ok(a != b && lex_precedes(a, b)?)
}

/// The immediate next same-size set in lex order, or `None` at the lex-last.
pub fn successor(r: &KSubset) -> Result<Option<KSubset>> {
    if r.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = r.ground();
    let k = r.elements().len();
    let mut elems = r.elements().to_vec();
    // rightmost position that can advance: elems[i] < n - (k-1-i)
    let mut pos = None;
    for i in (0..k).rev() {
        if elems[i] < n - (k - 1 - i) as u32 {
            pos = Some(i);
            break;
        }
    }
    let Some(i) = pos else { return Ok(None) };
    elems[i] += 1;
    for j in i + 1..k {
        elems[j] = elems[i] + (j - i) as u32;
    }
    Ok(Some(KSubset { ground: n, elems }))
}

/// `|L([n], R, k)|`: the number of k-sets `F` with `F ⪯ R`.
///
/// `R` may have any non-zero size. Closed form: one block of
/// `C(n - max R, k - |R|)` supersets when `k >= |R|`, plus, for each branch
/// position `j` and each `x` strictly between consecutive elements
/// `r_{j-1} < x < r_j`, a block of `C(n - x, k - j)` sets that agree with `R`
/// below `r_j` and continue freely above `x`.
pub fn count_l(r: &KSubset, k: u32) -> Result<Count> {
    let n = r.ground();
    if k < 1 || k > n {
        return Err(Error::SizeOutOfRange { k, ground: n });
    }
    if r.is_empty() {
        return Err(Error::EmptySet);
    }
    let rs = r.elements();
    let m = rs.len();
    let k = k as usize;
    let mut total = Count::zero();
    if k >= m {
        total += ubinom((n - rs[m - 1]) as u64, (k - m) as u64);
    }
    let mut prev = 0u32;
    for (j, &rj) in rs.iter().enumerate().take(k.min(m)) {
        for x in prev + 1..rj {
            total += ubinom((n - x) as u64, (k - j - 1) as u64);
        }
        prev = rj;
    }
    Ok(total)
}

/// Inverse of [`count_l`] on size-k IDs: the k-set `R` with rank `r`, 1-based.
pub fn unrank(ground: u32, rank: &Count, k: u32) -> Result<KSubset> {
    if k < 1 || k > ground {
        return Err(Error::SizeOutOfRange { k, ground });
    }
    let total = ubinom(ground as u64, k as u64);
    if rank.is_zero() || *rank > total {
        return Err(Error::RankOutOfRange {
            rank: rank.to_string(),
            max: total.to_string(),
        });
    }
    let mut remaining = rank - Count::one(); // 0-based position
    let mut elems = Vec::with_capacity(k as usize);
    let mut x = 1u32;
    for j in 0..k {
        loop {
            let block = ubinom((ground - x) as u64, (k - j - 1) as u64);
            if remaining < block {
                elems.push(x);
                x += 1;
                break;
            }
            remaining -= block;
            x += 1;
        }
    }
    Ok(KSubset { ground, elems })
}

/// Convenience: rank of a k-set among sets of its own size (`count_l` with
/// `k = |R|`).
pub fn rank(r: &KSubset) -> Result<Count> {
    count_l(r, r.len())
}

/// Splits `F` into `(F ∖ F^t, ℓ(F))` where `F^t = [n-ℓ+1, n]` is the maximal
/// suffix run (`ℓ = 0` when `max F < n`). The head may be empty.
pub fn tail_decompose(f: &KSubset) -> Result<(KSubset, u32)> {
    if f.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = f.ground();
    let elems = f.elements();
    let mut ell = 0usize;
    while ell < elems.len() && elems[elems.len() - 1 - ell] == n - ell as u32 {
        ell += 1;
    }
    let head = KSubset {
        ground: n,
        elems: elems[..elems.len() - ell].to_vec(),
    };
    Ok((head, ell as u32))
}

/// Whether `A` and `B` belong to a common c-sequential chain with `A ⪯ B`:
/// both decompose as `P ⊔ {x+1, ..., x+c}` with the same prefix `P`, and
/// `A`'s window starts no later than `B`'s.
pub fn is_c_sequential(a: &KSubset, b: &KSubset, c: u32) -> Result<bool> {
    check_ground(a, b)?;
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.elements().len(),
            right: b.elements().len(),
        });
    }
    let k = a.elements().len();
    if c < 1 || c as usize > k {
        return Err(Error::SizeOutOfRange {
            k: c,
            ground: a.ground(),
        });
    }
    let split = k - c as usize;
    let (pa, wa) = a.elements().split_at(split);
    let (pb, wb) = b.elements().split_at(split);
    if pa != pb {
        return Ok(false);
    }
    let run = |w: &[u32]| w.windows(2).all(|p| p[1] == p[0] + 1);
    Ok(run(wa) && run(wb) && wa[0] <= wb[0])
}

/// All k-subsets of `[n]` in lex order.
pub fn enumerate_ksets(n: u32, k: u32) -> Result<Vec<KSubset>> {
    let mut out = Vec::new();
    let mut cur = KSubset::first(n, k)?;
    loop {
        out.push(cur.clone());
        match successor(&cur)? {
            Some(next) => cur = next,
            None => break,
        }
    }
    Ok(out)
}

/// The admissible ID window `ℛ_i` as its `(lo, hi)` endpoints.
///
/// For `i ∈ {1, 2}`: `{1, n-k_i+2, ..., n} ⪯ R ⪯ {k_t, n-k_i+2, ..., n}`.
/// For `i ∈ [3, t]`: `[k_t] ∪ [n-k_i+k_t+1, n] ⪯ R ⪯ {1, n-k_i+2, ..., n}`.
pub fn range_ri(i: usize, params: &Params) -> Result<(KSubset, KSubset)> {
    let t = params.t();
    if i < 1 || i > t {
        return Err(Error::FamilyIndex { index: i, t });
    }
    let n = params.n();
    let ki = params.k(i);
    let kt = params.k_min();
    let near_last = |first: u32| -> Result<KSubset> {
        // {first} ∪ [n-k_i+2, n]
        KSubset::new(n, vec![first])?.with_suffix_run(ki - 1)
    };
    if i <= 2 {
        Ok((near_last(1)?, near_last(kt)?))
    } else {
        let lo = KSubset::interval(n, 1, kt)?.with_suffix_run(ki - kt)?;
        Ok((lo, near_last(1)?))
    }
}

/// All members of `ℛ_1` in lex order.
pub fn r1_window(params: &Params) -> Result<Vec<KSubset>> {
    let (lo, hi) = range_ri(1, params)?;
    let mut out = vec![lo];
    while out.last() != Some(&hi) {
        match successor(out.last().unwrap())? {
            Some(next) => out.push(next),
            None => {
                return Err(Error::InvalidParams {
                    reason: format!("window for {params} is not lex-contiguous"),
                })
            }
        }
    }
    Ok(out)
}
