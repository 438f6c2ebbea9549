//! Littlewood–Richardson and Kostka coefficients.
//!
//! Everything here reduces to one search: grow a shape by successive
//! horizontal strips, strip `i` holding the letters `i`. With the lattice
//! constraint switched on (the `i`'s in rows `≤ r` never outnumber the
//! `i-1`'s in rows `< r`) the leaves are exactly the LR fillings.

use std::collections::BTreeSet;
use std::sync::{Arc, LazyLock};

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};

/// Strip sizes: either prescribed (a content vector) or free, in which case
/// every leaf reports the content it used.
#[derive(Clone, Copy)]
enum Letters<'a> {
    Fixed(&'a [u8]),
    Free,
}

struct Search<'a, F> {
    outer: Option<&'a [u8]>,
    cap: usize,
    letters: Letters<'a>,
    lattice: bool,
    target: usize,
    shape: Vec<u8>,
    counts: Vec<Vec<u8>>,
    content: Vec<u8>,
    emit: F,
    stop: bool,
}

impl<'a, F: FnMut(&[u8], &[u8]) -> bool> Search<'a, F> {
    #[inline]
    fn outer_at(&self, r: usize) -> usize {
        match self.outer {
            Some(o) => o.get(r).map_or(0, |&x| x as usize),
            None => usize::MAX,
        }
    }

    fn letter(&mut self, i: usize, placed: usize) {
        if self.stop {
            return;
        }
        let done = match self.letters {
            Letters::Fixed(sz) => i == sz.len(),
            Letters::Free => placed == self.target,
        };
        if done {
            let len = self.shape.iter().take_while(|&&x| x > 0).count();
            if (self.emit)(&self.shape[..len], &self.content) {
                self.stop = true;
            }
            return;
        }
        if self.counts.len() <= i {
            self.counts.push(vec![0; self.cap]);
        }
        let old = self.shape.clone();
        let remaining = match self.letters {
            Letters::Fixed(sz) => sz[i] as usize,
            Letters::Free => self.target - placed,
        };
        // capacity of rows r.. for a horizontal strip over `old`, no lattice
        let mut suffix = vec![0usize; self.cap + 1];
        for r in (0..self.cap).rev() {
            let room = if r == 0 {
                self.outer_at(0).saturating_sub(old[0] as usize)
            } else {
                let up = (old[r - 1] as usize).min(self.outer_at(r));
                up.saturating_sub(old[r] as usize)
            };
            suffix[r] = suffix[r + 1].saturating_add(room);
        }
        if let Letters::Fixed(_) = self.letters {
            if suffix[0] < remaining {
                return;
            }
        }
        let limit = match self.letters {
            Letters::Free if i > 0 => self.content[i - 1] as usize,
            _ => usize::MAX,
        };
        self.row(i, 0, remaining, 0, 0, &old, &suffix, limit, placed);
    }

    #[allow(clippy::too_many_arguments)]
    fn row(
        &mut self,
        i: usize,
        r: usize,
        remaining: usize,
        cum: usize,
        prev_prefix: usize,
        old: &[u8],
        suffix: &[usize],
        limit: usize,
        placed: usize,
    ) {
        if self.stop {
            return;
        }
        let fixed = matches!(self.letters, Letters::Fixed(_));
        if r == self.cap || (r > 0 && old[r - 1] == 0) {
            if fixed {
                if remaining == 0 {
                    self.letter(i + 1, placed + cum);
                }
            } else if cum > 0 {
                self.content.push(cum as u8);
                self.letter(i + 1, placed + cum);
                self.content.pop();
            }
            return;
        }
        let upper = if r == 0 {
            self.outer_at(0)
        } else {
            (old[r - 1] as usize).min(self.outer_at(r))
        };
        let mut room = upper.saturating_sub(old[r] as usize);
        if self.lattice && i > 0 {
            // letters i in rows ≤ r bounded by letters i-1 in rows < r
            room = room.min(prev_prefix.saturating_sub(cum));
        }
        room = room.min(remaining);
        if !fixed {
            room = room.min(limit - cum);
        }
        let lower = if fixed {
            remaining.saturating_sub(suffix[r + 1])
        } else {
            0
        };
        if lower > room {
            return;
        }
        let next_prefix = if i > 0 {
            prev_prefix + self.counts[i - 1][r] as usize
        } else {
            0
        };
        for a in lower..=room {
            self.shape[r] = old[r] + a as u8;
            self.counts[i][r] = a as u8;
            self.row(
                i,
                r + 1,
                remaining - a,
                cum + a,
                next_prefix,
                old,
                suffix,
                limit,
                placed,
            );
            if self.stop {
                break;
            }
        }
        self.shape[r] = old[r];
        self.counts[i][r] = 0;
    }
}

fn run_search<F: FnMut(&[u8], &[u8]) -> bool>(
    start: &[u8],
    outer: Option<&[u8]>,
    cap: usize,
    letters: Letters<'_>,
    lattice: bool,
    emit: F,
) {
    if start.len() > cap {
        return;
    }
    let mut shape = vec![0u8; cap];
    shape[..start.len()].copy_from_slice(start);
    let target = match (letters, outer) {
        (Letters::Free, Some(o)) => {
            let so: usize = o.iter().map(|&x| x as usize).sum();
            let ss: usize = start.iter().map(|&x| x as usize).sum();
            so - ss
        }
        (Letters::Free, None) => panic!("free letters need an outer shape"),
        _ => 0,
    };
    let mut s = Search {
        outer,
        cap,
        letters,
        lattice,
        target,
        shape,
        counts: Vec::new(),
        content: Vec::new(),
        emit,
        stop: false,
    };
    s.letter(0, 0);
}

/// Calls `f(λ, c^λ_{μ,ν})`-style leaves: every LR filling of `λ/μ` of type `ν`
/// reached by adding strips to `μ`, restricted to at most `cap` rows.
/// `f` receives each resulting shape once per filling.
pub(crate) fn for_each_product_leaf<F: FnMut(&[u8])>(
    mu: &Partition,
    nu: &Partition,
    cap: usize,
    mut f: F,
) {
    run_search(
        mu.parts(),
        None,
        cap,
        Letters::Fixed(nu.parts()),
        true,
        |shape, _| {
            f(shape);
            false
        },
    );
}

/// Calls `f(ν)` once for every LR filling of the skew shape `outer/inner`,
/// passing its type.
pub(crate) fn for_each_skew_filling<F: FnMut(&[u8])>(
    outer: &Partition,
    inner: &Partition,
    mut f: F,
) {
    if !inner.is_contained_in(outer) {
        return;
    }
    if inner == outer {
        f(&[]);
        return;
    }
    run_search(
        inner.parts(),
        Some(outer.parts()),
        outer.len(),
        Letters::Free,
        true,
        |_, content| {
            f(content);
            false
        },
    );
}

type Key3 = (Partition, Partition, Partition);

static LR_CACHE: LazyLock<RwLock<FxHashMap<Key3, u64>>> = LazyLock::new(Default::default);
type SkewMemo = FxHashMap<(Partition, Partition), Arc<Vec<(Partition, u64)>>>;

static SKEW_CACHE: LazyLock<RwLock<SkewMemo>> = LazyLock::new(Default::default);
static KOSTKA_CACHE: LazyLock<RwLock<FxHashMap<(Partition, Partition), u64>>> =
    LazyLock::new(Default::default);

/// Drops all memoised LR, skew and Kostka values.
pub fn clear_caches() {
    LR_CACHE.write().clear();
    SKEW_CACHE.write().clear();
    KOSTKA_CACHE.write().clear();
}

fn count_strip_fillings(
    start: &Partition,
    outer: &Partition,
    letters: &Partition,
    lattice: bool,
) -> u64 {
    let mut count: u64 = 0;
    run_search(
        start.parts(),
        Some(outer.parts()),
        outer.len(),
        Letters::Fixed(letters.parts()),
        lattice,
        |s, _| {
            if s == outer.parts() {
                count = count.checked_add(1).expect("filling count overflows u64");
            }
            false
        },
    );
    count
}

/// `c^λ_{μ,ν}`: the number of LR fillings of `λ/μ` of type `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size()
        || !mu.is_contained_in(lambda)
        || !nu.is_contained_in(lambda)
    {
        return 0;
    }
    if nu.is_empty() {
        return (lambda == mu) as u64;
    }
    if mu.is_empty() {
        return (lambda == nu) as u64;
    }
    // c is symmetric; normalise so the cache sees each triple once
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (lambda.clone(), a.clone(), b.clone());
    if let Some(&v) = LR_CACHE.read().get(&key) {
        return v;
    }
    // fewer letters is usually the cheaper search
    let (start, letters) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let v = count_strip_fillings(start, lambda, letters, true);
    LR_CACHE.write().insert(key, v);
    v
}

/// The generalised coefficient `c^λ_{μ¹,…,μʳ}`.
pub fn lr_multi(lambda: &Partition, factors: &[Partition]) -> u64 {
    let total: usize = factors.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return 0;
    }
    // expand the product left to right, keeping only shapes inside λ
    let mut cur: FxHashMap<Partition, u64> = FxHashMap::default();
    cur.insert(Partition::empty(), 1);
    for f in factors {
        let mut next: FxHashMap<Partition, u64> = FxHashMap::default();
        for (shape, &c) in &cur {
            run_search(
                shape.parts(),
                Some(lambda.parts()),
                lambda.len(),
                Letters::Fixed(f.parts()),
                true,
                |s, _| {
                    let e = next
                        .entry(Partition::from_canonical(s.to_vec()))
                        .or_insert(0);
                    *e = e.checked_add(c).expect("lr_multi overflows u64");
                    false
                },
            );
        }
        cur = next;
    }
    cur.get(lambda).copied().unwrap_or(0)
}

/// The Kostka number `K_{γ,λ}`: semistandard tableaux of shape `γ` and
/// content `λ`.
pub fn kostka(gamma: &Partition, lambda: &Partition) -> Result<u64> {
    if gamma.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: gamma.size(),
            found: lambda.size(),
        });
    }
    if !gamma.dominates(lambda) {
        return Ok(0);
    }
    let key = (gamma.clone(), lambda.clone());
    if let Some(&v) = KOSTKA_CACHE.read().get(&key) {
        return Ok(v);
    }
    let v = count_strip_fillings(&Partition::empty(), gamma, lambda, false);
    KOSTKA_CACHE.write().insert(key, v);
    Ok(v)
}

/// Schur expansion of the skew Schur function `s_{λ/μ}`:
/// pairs `(ν, c^λ_{μ,ν})` sorted by `ν`.
pub fn skew_expand(outer: &Partition, inner: &Partition) -> Arc<Vec<(Partition, u64)>> {
    let key = (outer.clone(), inner.clone());
    if let Some(v) = SKEW_CACHE.read().get(&key) {
        return v.clone();
    }
    let v = Arc::new(skew_expand_uncached(outer, inner));
    SKEW_CACHE.write().insert(key, v.clone());
    v
}

/// As [`skew_expand`] without the memo, for callers that visit each pair
/// once.
pub(crate) fn skew_expand_uncached(outer: &Partition, inner: &Partition) -> Vec<(Partition, u64)> {
    let mut acc: FxHashMap<Partition, u64> = FxHashMap::default();
    for_each_skew_filling(outer, inner, |t| {
        *acc.entry(Partition::from_canonical(t.to_vec()))
            .or_insert(0) += 1;
    });
    let mut v: Vec<_> = acc.into_iter().collect();
    v.sort_unstable();
    v
}

/// Schur expansion of `s_μ s_ν`, optionally truncated to at most
/// `max_rows` rows, sorted by shape.
pub fn product_expand(
    mu: &Partition,
    nu: &Partition,
    max_rows: Option<usize>,
) -> Vec<(Partition, u64)> {
    let cap = max_rows
        .unwrap_or(mu.len() + nu.len())
        .min(mu.len() + nu.len());
    let (start, letters) = if mu.size() >= nu.size() {
        (mu, nu)
    } else {
        (nu, mu)
    };
    let mut acc: FxHashMap<Partition, u64> = FxHashMap::default();
    for_each_product_leaf(start, letters, cap, |s| {
        *acc.entry(Partition::from_canonical(s.to_vec()))
            .or_insert(0) += 1;
    });
    let mut v: Vec<_> = acc.into_iter().collect();
    v.sort_unstable();
    v
}

/// `⟨χ^{γ/α}, χ^{δ/β}⟩`, counted as type-matched pairs of LR fillings.
pub fn skew_inner(a: &SkewShape, b: &SkewShape) -> Result<u64> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            expected: a.size(),
            found: b.size(),
        });
    }
    let mut buckets: FxHashMap<Vec<u8>, u64> = FxHashMap::default();
    for_each_skew_filling(a.outer(), a.inner(), |t| {
        *buckets.entry(t.to_vec()).or_insert(0) += 1
    });
    let mut total: u64 = 0;
    for_each_skew_filling(b.outer(), b.inner(), |t| {
        if let Some(&c) = buckets.get(t) {
            total = total
                .checked_add(c)
                .expect("skew inner product overflows u64");
        }
    });
    Ok(total)
}

fn homogeneous_size(set: &BTreeSet<Partition>) -> Result<Option<usize>> {
    let mut it = set.iter().map(Partition::size);
    match it.next() {
        None => Ok(None),
        Some(n) if it.all(|m| m == n) => Ok(Some(n)),
        Some(_) => Err(Error::MixedSizes),
    }
}

/// The set-level product `A ⋆ B`.
pub fn star_product(
    a: &BTreeSet<Partition>,
    b: &BTreeSet<Partition>,
) -> Result<BTreeSet<Partition>> {
    homogeneous_size(a)?;
    homogeneous_size(b)?;
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            let cap = x.len() + y.len();
            let (start, letters) = if x.size() >= y.size() { (x, y) } else { (y, x) };
            for_each_product_leaf(start, letters, cap, |s| {
                if !out.contains(s) {
                    out.insert(Partition::from_canonical(s.to_vec()));
                }
            });
        }
    }
    Ok(out)
}

/// `A ⋆ B` restricted to partitions with at most `max_rows` rows.
pub fn star_product_rows(
    a: &BTreeSet<Partition>,
    b: &BTreeSet<Partition>,
    max_rows: usize,
) -> Result<BTreeSet<Partition>> {
    homogeneous_size(a)?;
    homogeneous_size(b)?;
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            let (start, letters) = if x.size() >= y.size() { (x, y) } else { (y, x) };
            for_each_product_leaf(start, letters, max_rows, |s| {
                if !out.contains(s) {
                    out.insert(Partition::from_canonical(s.to_vec()));
                }
            });
        }
    }
    Ok(out)
}

/// Whether the skew shape admits an LR filling of type `ν`.
pub fn has_lr_filling_of_type(shape: &SkewShape, nu: &Partition) -> Result<bool> {
    if shape.size() != nu.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: nu.size(),
        });
    }
    let outer = shape.outer();
    let mut found = false;
    run_search(
        shape.inner().parts(),
        Some(outer.parts()),
        outer.len(),
        Letters::Fixed(nu.parts()),
        true,
        |s, _| {
            found = s == outer.parts();
            found
        },
    );
    Ok(found)
}

/// An LR filling: the entries of each row of a skew shape, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRFilling {
    pub shape: SkewShape,
    pub rows: Vec<Vec<u8>>,
}

impl LRFilling {
    /// Checks the row, column and lattice conditions directly.
    pub fn is_valid(&self) -> bool {
        let (outer, inner) = (self.shape.outer(), self.shape.inner());
        if self.rows.len() != outer.len() {
            return false;
        }
        let entry = |r: usize, c: usize| -> Option<u8> {
            let start = inner.part(r);
            if c >= start && c < outer.part(r) {
                Some(self.rows[r][c - start])
            } else {
                None
            }
        };
        for r in 0..outer.len() {
            if self.rows[r].len() != outer.part(r) - inner.part(r) {
                return false;
            }
            if self.rows[r].windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 {
                for c in inner.part(r)..outer.part(r) {
                    if let (Some(up), Some(here)) = (entry(r - 1, c), entry(r, c)) {
                        if up >= here {
                            return false;
                        }
                    }
                }
            }
        }
        let mut seen = vec![0usize; 256];
        for row in &self.rows {
            for &x in row.iter().rev() {
                seen[x as usize] += 1;
                if x > 1 && seen[x as usize] > seen[x as usize - 1] {
                    return false;
                }
            }
        }
        true
    }

    /// Content `(#1's, #2's, …)`.
    pub fn content(&self) -> Partition {
        let mut c = vec![0usize; 256];
        for row in &self.rows {
            for &x in row {
                c[x as usize - 1] += 1;
            }
        }
        Partition::new(c).expect("content is a partition")
    }
}

/// All LR fillings of `shape` of type `ν`.
pub fn lr_fillings(shape: &SkewShape, nu: &Partition) -> Vec<LRFilling> {
    let out = Vec::new();
    if shape.size() != nu.size() {
        return out;
    }
    let outer = shape.outer().clone();
    let inner = shape.inner().clone();
    // record the strip of each letter, then paint rows
    struct Rec<'a> {
        outer: &'a Partition,
        inner: &'a Partition,
        nu: &'a [u8],
        out: Vec<LRFilling>,
        shape: SkewShape,
    }
    fn go(rec: &mut Rec<'_>, cur: Vec<u8>, letter: usize, history: &mut Vec<Vec<u8>>) {
        if letter == rec.nu.len() {
            if cur.as_slice() == rec.outer.parts() {
                let mut rows: Vec<Vec<u8>> = (0..rec.outer.len()).map(|_| Vec::new()).collect();
                let mut prev: Vec<u8> = rec.inner.parts().to_vec();
                prev.resize(rec.outer.len(), 0);
                for (i, h) in history.iter().enumerate() {
                    for r in 0..rec.outer.len() {
                        let add = h.get(r).copied().unwrap_or(0) - prev[r];
                        rows[r].extend(std::iter::repeat_n((i + 1) as u8, add as usize));
                    }
                    prev = h.clone();
                    prev.resize(rec.outer.len(), 0);
                }
                rec.out.push(LRFilling {
                    shape: rec.shape.clone(),
                    rows,
                });
            }
            return;
        }
        let mut leaves = Vec::new();
        let one = [rec.nu[letter]];
        // one strip at a time; the lattice condition is re-checked at the end
        run_search(
            &cur,
            Some(rec.outer.parts()),
            rec.outer.len(),
            Letters::Fixed(&one),
            false,
            |s, _| {
                leaves.push(s.to_vec());
                false
            },
        );
        for mut s in leaves {
            s.resize(rec.outer.len(), 0);
            history.push(s.clone());
            let trimmed: Vec<u8> = s.iter().copied().take_while(|&x| x > 0).collect();
            go(rec, trimmed, letter + 1, history);
            history.pop();
        }
    }
    let mut rec = Rec {
        outer: &outer,
        inner: &inner,
        nu: nu.parts(),
        out: Vec::new(),
        shape: shape.clone(),
    };
    let mut history = Vec::new();
    go(&mut rec, inner.parts().to_vec(), 0, &mut history);
    rec.out.retain(LRFilling::is_valid);
    rec.out
}
