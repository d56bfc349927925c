//! Partner, k-partner, parity and corresponding k-set machinery.
//!
//! Two sets strongly intersect at their last element when `F ∩ H = {q}` and
//! `F ∪ H = [q]` for `q = max F = max H`; each is the *partner* of the other.
//! An L-initial pair `(A, B)` is mutually maximal exactly when the heads
//! `A ∖ A^t` and `B ∖ B^t` are partners.

use std::fmt;

use crate::subsets::{lex_strictly_precedes, tail_decompose, KSubset};
use crate::{Error, Result};

/// Outcome of a maximality test on an ID pair, with the heads it compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalPairWitness {
    pub a_head: KSubset,
    pub b_head: KSubset,
    /// `q` with heads strongly intersecting at `q`; `None` when not maximal.
    pub strongly_intersect_at: Option<u32>,
}

impl fmt::Display for MaximalPairWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.strongly_intersect_at {
            Some(q) => write!(f, "heads {} and {} meet at {q}", self.a_head, self.b_head),
            None => write!(
                f,
                "heads {} and {} are not partners",
                self.a_head, self.b_head
            ),
        }
    }
}

/// The partner `H = ([q] ∖ F) ∪ {q}` of a non-empty `F`, where `q = max F`.
///
/// Then `F ∩ H = {q}`, `F ∪ H = [q]`, `|H| = q - |F| + 1`, and
/// `partner(partner(F)) = F`.
pub fn partner(f: &KSubset) -> Result<KSubset> {
    let q = f.max_elem().ok_or(Error::EmptySet)?;
    let elems: Vec<u32> = (1..q)
        .filter(|&x| !f.contains(x))
        .chain(std::iter::once(q))
        .collect();
    KSubset::new(f.ground(), elems)
}

/// Lex-last k-set strictly preceding `h`, for `k <= |h|`.
///
/// Branch as late as possible: the largest position `j` admitting an element
/// `h_j - 1` above `h_{j-1}` and low enough to leave room for a suffix run.
fn last_k_set_strictly_preceding(h: &KSubset, k: u32) -> Option<KSubset> {
    let n = h.ground();
    let hs = h.elements();
    debug_assert!(k >= 1 && (k as usize) <= hs.len());
    for j in (1..=k as usize).rev() {
        let x = hs[j - 1] - 1;
        let prev = if j >= 2 { hs[j - 2] } else { 0 };
        if x > prev && x + (k as usize - j) as u32 <= n {
            let mut elems = hs[..j - 1].to_vec();
            elems.push(x);
            let fill = (k as usize - j) as u32;
            elems.extend(n - fill + 1..=n);
            return Some(KSubset::new(n, elems).expect("constructed k-set is valid"));
        }
    }
    None
}

/// The k-partner of `F`: the partner `H` resized to `k` elements.
///
/// `k = |H|` keeps `H`; `k > |H|` pads with the suffix run
/// `[n-k+|H|+1, n]`; `k < |H|` takes the lex-last k-set strictly preceding
/// `H`. Requires `k <= n - |F|`.
pub fn k_partner(f: &KSubset, k: u32) -> Result<KSubset> {
    let n = f.ground();
    if f.is_empty() {
        return Err(Error::EmptySet);
    }
    if k < 1 || k > n - f.len() {
        return Err(Error::SizeOutOfRange { k, ground: n });
    }
    let h = partner(f)?;
    let hlen = h.len();
    if k == hlen {
        Ok(h)
    } else if k > hlen {
        h.with_suffix_run(k - hlen)
    } else {
        last_k_set_strictly_preceding(&h, k).ok_or_else(|| Error::NoPrecedingSet {
            k,
            set: h.to_string(),
        })
    }
}

/// The k-parity of `F`: the set with the same head whose tail length differs
/// by exactly `|F| - k`, in either direction. `None` when no such set exists.
pub fn k_parity(f: &KSubset, k: u32) -> Result<Option<KSubset>> {
    let n = f.ground();
    if f.is_empty() {
        return Err(Error::EmptySet);
    }
    if k < 1 || k > n {
        return Err(Error::SizeOutOfRange { k, ground: n });
    }
    let fsize = f.len();
    if k == fsize {
        return Ok(Some(f.clone()));
    }
    let (head, ell) = tail_decompose(f)?;
    if k < fsize {
        let drop = fsize - k;
        if ell < drop {
            return Ok(None);
        }
        Ok(Some(head.with_suffix_run(ell - drop)?))
    } else {
        let ell2 = ell + (k - fsize);
        if ell2 > n {
            return Ok(None);
        }
        // the run [n-ell2+1, n] must be the exact tail: head below n-ell2
        if let Some(m) = head.max_elem() {
            if ell2 >= n || m >= n - ell2 {
                return Ok(None);
            }
        }
        Ok(Some(head.with_suffix_run(ell2)?))
    }
}

/// The corresponding k-set of `A` for `k <= |A|`: the k-parity when it
/// exists, otherwise the lex-last k-set strictly preceding `A`.
pub fn corresponding_k_set(a: &KSubset, k: u32) -> Result<KSubset> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if k < 1 || k > a.len() {
        return Err(Error::SizeOutOfRange {
            k,
            ground: a.ground(),
        });
    }
    if let Some(g) = k_parity(a, k)? {
        return Ok(g);
    }
    last_k_set_strictly_preceding(a, k).ok_or_else(|| Error::NoPrecedingSet {
        k,
        set: a.to_string(),
    })
}

/// Maximality witness for the ID pair `(A, B)` with `|A| + |B| <= n`.
pub fn maximal_pair_witness(a: &KSubset, b: &KSubset) -> Result<MaximalPairWitness> {
    if a.ground() != b.ground() {
        return Err(Error::GroundMismatch {
            left: a.ground(),
            right: b.ground(),
        });
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = a.ground();
    if a.len() + b.len() > n {
        return Err(Error::SizeOutOfRange {
            k: a.len() + b.len(),
            ground: n,
        });
    }
    let (a_head, _) = tail_decompose(a)?;
    let (b_head, _) = tail_decompose(b)?;
    // an empty head names the full uniform family, which admits no
    // cross-intersecting counterpart at these sizes
    let meet = if a_head.is_empty() || b_head.is_empty() {
        None
    } else if partner(&b_head)? == a_head {
        a_head.max_elem()
    } else {
        None
    };
    Ok(MaximalPairWitness {
        a_head,
        b_head,
        strongly_intersect_at: meet,
    })
}

/// Whether the L-initial families named by `A` and `B` are maximal to each
/// other: true iff their heads are partners.
pub fn is_maximal_pair(a: &KSubset, b: &KSubset) -> Result<bool> {
    Ok(maximal_pair_witness(a, b)?.strongly_intersect_at.is_some())
}

/// The b-set `B` making `(A, B)` maximal, if one exists: the partner of
/// `A`'s head padded with a suffix run. Requires `|A| + b <= n`.
pub fn maximal_counterpart(a: &KSubset, b: u32) -> Result<Option<KSubset>> {
    let n = a.ground();
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if b < 1 || a.len() + b > n {
        return Err(Error::SizeOutOfRange { k: b, ground: n });
    }
    let (head, _) = tail_decompose(a)?;
    if head.is_empty() {
        return Ok(None);
    }
    let bp = partner(&head)?;
    if bp.len() > b {
        return Ok(None);
    }
    let result = bp.with_suffix_run(b - bp.len())?;
    debug_assert_eq!(is_maximal_pair(a, &result), Ok(true));
    Ok(Some(result))
}

/// Re-maximalize `A` against its b-partner: with `B = k_partner(A, b)`, the
/// `|A|`-partner `A'` of `B` forms a maximal pair with `B`, and `A ⪯ A'`.
pub fn remaximalize(a: &KSubset, b: u32) -> Result<KSubset> {
    let bset = k_partner(a, b)?;
    let aprime = k_partner(&bset, a.len())?;
    debug_assert!(!lex_strictly_precedes(&aprime, a)?);
    Ok(aprime)
}
