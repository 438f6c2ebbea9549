//! Partitions, skew shapes and shape-level operations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest part (and length) a [`Partition`] can hold.
pub const MAX_PART: usize = u8::MAX as usize;

/// A weakly decreasing sequence of positive integers.
///
/// Parts are stored as bytes; every size handled by this crate is far below
/// [`MAX_PART`]. The derived order is lexicographic on the parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u8>);

impl Partition {
    /// Builds a partition from arbitrary nonnegative parts, sorting and
    /// dropping zeros.
    pub fn new<I: IntoIterator<Item = usize>>(parts: I) -> Result<Self> {
        let mut v = Vec::new();
        for p in parts {
            if p > MAX_PART {
                return Err(Error::PartTooLarge(p));
            }
            if p > 0 {
                v.push(p as u8);
            }
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(v))
    }

    /// Builds a partition from parts already in canonical form.
    ///
    /// Panics in debug builds if the parts are not weakly decreasing and
    /// positive.
    pub fn from_canonical(parts: Vec<u8>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition(parts)
    }

    /// Like [`Partition::new`] but panics on invalid input. Handy in tests.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.iter().copied()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::of(&[n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The rectangle `(w^h)`.
    pub fn rectangle(w: usize, h: usize) -> Self {
        if w == 0 {
            return Self::empty();
        }
        Partition(vec![w as u8; h])
    }

    /// The hook `(n-t, 1^t)`.
    pub fn hook(n: usize, t: usize) -> Self {
        assert!(t < n, "hook leg too long");
        let mut v = vec![(n - t) as u8];
        v.extend(std::iter::repeat_n(1, t));
        Partition(v)
    }

    /// The near hook `(n-l, 2, 1^{l-2})`.
    pub fn near_hook(n: usize, l: usize) -> Result<Self> {
        if l < 2 || n < l + 2 {
            return Err(Error::PreconditionViolated(format!(
                "near hook ({}-{l},2,1^{}) is not a partition",
                n,
                l.saturating_sub(2)
            )));
        }
        let mut v = vec![(n - l) as u8, 2];
        v.extend(std::iter::repeat_n(1, l - 2));
        Ok(Partition(v))
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u8> {
        self.0
    }

    /// Parts as machine integers.
    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().map(|&p| p as usize).collect()
    }

    /// `λ_i` with zero-based `i`; zero beyond the length.
    #[inline]
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).map_or(0, |&p| p as usize)
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Smallest nonzero part, zero for the empty partition.
    pub fn last(&self) -> usize {
        self.0.last().map_or(0, |&p| p as usize)
    }

    /// The conjugate partition (column lengths).
    pub fn conjugate(&self) -> Self {
        let w = self.first();
        let mut out = Vec::with_capacity(w);
        for j in 0..w {
            let c = self.0.iter().take_while(|&&p| p as usize > j).count();
            out.push(c as u8);
        }
        Partition(out)
    }

    /// Componentwise sum, zero-padded.
    pub fn add(&self, other: &Self) -> Self {
        let l = self.len().max(other.len());
        Partition(
            (0..l)
                .map(|i| (self.part(i) + other.part(i)) as u8)
                .collect(),
        )
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Componentwise difference `self - other`, assuming `other ⊆ self`
    /// and that the result is again a partition.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if !other.is_contained_in(self) {
            return Err(not_contained(other, self));
        }
        Self::new((0..self.len()).map(|i| self.part(i) - other.part(i)))
    }

    /// True if the Young diagram of `self` lies inside that of `other`.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// True if the diagram fits in a `w × h` box.
    pub fn fits_in(&self, w: usize, h: usize) -> bool {
        self.len() <= h && self.first() <= w
    }

    /// The 180° rotation of the complement of `self` inside `(w^h)`.
    pub fn rect_complement(&self, w: usize, h: usize) -> Result<Self> {
        if !self.fits_in(w, h) {
            return Err(not_contained(self, &Self::rectangle(w, h)));
        }
        Self::new((0..h).rev().map(|i| w - self.part(i)))
    }

    /// The inside partition `(μ_2 - 1, …, μ_l - 1)`.
    pub fn inside_partition(&self) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(self.inside_unchecked())
    }

    pub(crate) fn inside_unchecked(&self) -> Self {
        let v: Vec<u8> = self
            .0
            .iter()
            .skip(1)
            .map(|&p| p - 1)
            .filter(|&p| p > 0)
            .collect();
        Partition(v)
    }

    /// `μ` with its first column removed, `μ - (1^{l(μ)})`.
    pub fn strip_first_column(&self) -> Self {
        Partition(self.0.iter().map(|&p| p - 1).filter(|&p| p > 0).collect())
    }

    /// `(μ - (1^{l(μ)}))'`: remove the first column, then conjugate.
    pub fn tilde(&self) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(self.tilde_or_empty())
    }

    /// [`Partition::tilde`] extended by `∅ ↦ ∅`.
    pub fn tilde_or_empty(&self) -> Self {
        self.strip_first_column().conjugate()
    }

    /// Dominance order `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Self) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All parts even.
    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// All parts odd.
    pub fn all_parts_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// Sign of a permutation with this cycle type.
    pub fn cycle_sign(&self) -> i64 {
        let even_cycles = self.0.iter().filter(|p| *p % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Multiplicities `m_1, m_2, …` of each part size (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.first() + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `λ` is `(2,…,2,ε)` with `ε ∈ {0,1}`.
    pub fn is_twos_then_epsilon(&self) -> bool {
        match self.0.split_last() {
            None => true,
            Some((&last, rest)) => rest.iter().all(|&p| p == 2) && (last == 2 || last == 1),
        }
    }

    /// `Some(t)` if `self = (n-t, 1^t)`.
    pub fn hook_leg(&self) -> Option<usize> {
        if self.is_empty() || self.0[1..].iter().any(|&p| p != 1) {
            return None;
        }
        Some(self.len() - 1)
    }

    /// `Some(l)` if `self = (n-l, 2, 1^{l-2})` with `n - l ≥ 2`.
    pub fn near_hook_index(&self) -> Option<usize> {
        if self.len() < 2 || self.0[1] != 2 || self.0[0] < 2 || self.0[2..].iter().any(|&p| p != 1)
        {
            return None;
        }
        Some(self.len())
    }
}

fn not_contained(inner: &Partition, outer: &Partition) -> Error {
    Error::ShapeNotContained {
        inner: inner.to_string(),
        outer: outer.to_string(),
    }
}

impl std::borrow::Borrow<[u8]> for Partition {
    fn borrow(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[6,3,3]`; brackets are optional (but must match) and `[]` is
    /// the empty partition. Parts must already be weakly decreasing.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = match (t.strip_prefix('['), t.ends_with(']')) {
            (Some(inner), true) => &inner[..inner.len() - 1],
            (None, false) => t,
            _ => return Err(Error::Parse(s.to_string())),
        };
        let t = t.trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(s.to_string()))?;
            if p == 0 || p > MAX_PART {
                return Err(Error::Parse(s.to_string()));
            }
            parts.push(p);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "{s}: parts must be weakly decreasing"
            )));
        }
        Self::new(parts)
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(not_contained(&inner, &outer));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// No two boxes in the same column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }

    /// The conjugate skew shape `outer' / inner'`.
    pub fn conjugate(&self) -> Self {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Iterator over partitions of `n` in reverse-lexicographic order,
/// optionally restricted to parts `≤ max_part` and length `≤ max_len`.
#[derive(Clone, Debug)]
pub struct Partitions {
    cur: Vec<u8>,
    max_len: usize,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Self::bounded(n, n, n)
    }

    /// Partitions of `n` fitting in a `max_part × max_len` box.
    pub fn bounded(n: usize, max_part: usize, max_len: usize) -> Self {
        let max_part = max_part.min(n).min(MAX_PART);
        let mut it = Partitions {
            cur: Vec::new(),
            max_len,
            started: false,
            done: false,
        };
        match fill(n, max_part, max_len) {
            Some(v) => it.cur = v,
            None => it.done = true,
        }
        it
    }

    fn advance(&mut self) -> bool {
        let mut rest: usize = 0;
        while let Some(p) = self.cur.pop() {
            rest += p as usize;
            if p > 1 {
                let q = p as usize - 1;
                let len_left = self.max_len - self.cur.len();
                // try to place parts of size ≤ q, starting with q itself
                if q * len_left >= rest {
                    self.cur.extend(fill(rest, q, len_left).expect("fits"));
                    return true;
                }
            }
        }
        false
    }
}

/// Greedy lexicographically largest filling of `n` with parts `≤ w` in at
/// most `h` rows.
fn fill(n: usize, w: usize, h: usize) -> Option<Vec<u8>> {
    if n == 0 {
        return Some(Vec::new());
    }
    if w == 0 || w * h < n {
        return None;
    }
    let mut v = vec![w as u8; n / w];
    if !n.is_multiple_of(w) {
        v.push((n % w) as u8);
    }
    Some(v)
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Partition(self.cur.clone()))
    }
}

/// All partitions of `n`, reverse-lexicographic.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions::new(n)
}

/// Partitions of `n` satisfying `filter`, reverse-lexicographic.
pub fn enumerate_partitions_filtered<F>(n: usize, filter: F) -> impl Iterator<Item = Partition>
where
    F: Fn(&Partition) -> bool,
{
    Partitions::new(n).filter(move |p| filter(p))
}

/// `B_{w,h}(n)`: partitions of `n` inside the `w × h` rectangle.
pub fn box_partitions(n: usize, w: usize, h: usize) -> Vec<Partition> {
    Partitions::bounded(n, w, h).collect()
}

/// All `ν ⊆ outer` with `|ν| = size`, in reverse-lexicographic order.
pub fn subpartitions(outer: &Partition, size: usize) -> Vec<Partition> {
    fn go(
        outer: &Partition,
        r: usize,
        left: usize,
        cap: usize,
        cur: &mut Vec<u8>,
        out: &mut Vec<Partition>,
    ) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if r >= outer.len() {
            return;
        }
        let hi = outer.part(r).min(cap).min(left);
        // the remaining rows can hold at most Σ_{s>r} min(outer_s, a)
        for a in (1..=hi).rev() {
            let room: usize = (r + 1..outer.len()).map(|s| outer.part(s).min(a)).sum();
            if a + room < left {
                break;
            }
            cur.push(a as u8);
            go(outer, r + 1, left - a, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size > outer.size() {
        return out;
    }
    go(outer, 0, size, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// All `ζ` such that `α/ζ` is a horizontal strip with `s` boxes.
pub fn remove_horizontal_strips(alpha: &Partition, s: usize) -> Vec<Partition> {
    fn go(alpha: &Partition, r: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if r == alpha.len() {
            if left == 0 {
                out.push(Partition::new(cur.iter().map(|&x| x as usize)).expect("valid"));
            }
            return;
        }
        // row r may shrink down to α_{r+1}
        let lo = alpha.part(r + 1);
        let max_take = (alpha.part(r) - lo).min(left);
        let room_below: usize = (r + 1..alpha.len())
            .map(|q| alpha.part(q) - alpha.part(q + 1))
            .sum();
        let min_take = left.saturating_sub(room_below);
        for t in min_take..=max_take {
            cur.push((alpha.part(r) - t) as u8);
            go(alpha, r + 1, left - t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(alpha, 0, s, &mut Vec::new(), &mut out);
    out
}

/// All `λ ⊇ α` with at most `cap` rows such that `λ/α` is a horizontal
/// strip with `s` boxes.
pub fn add_horizontal_strips(alpha: &Partition, s: usize, cap: usize) -> Vec<Partition> {
    let rows = (alpha.len() + 1).min(cap);
    let mut out = Vec::new();
    if alpha.len() > cap {
        return out;
    }
    fn go(
        alpha: &Partition,
        rows: usize,
        r: usize,
        left: usize,
        cur: &mut Vec<u8>,
        out: &mut Vec<Partition>,
    ) {
        if r == rows {
            if left == 0 {
                out.push(Partition::new(cur.iter().map(|&x| x as usize)).expect("valid"));
            }
            return;
        }
        let max_add = if r == 0 {
            left
        } else {
            (alpha.part(r - 1) - alpha.part(r)).min(left)
        };
        let room_below: usize = (r + 1..rows)
            .map(|q| alpha.part(q - 1) - alpha.part(q))
            .sum();
        let min_add = left.saturating_sub(room_below);
        for t in min_add..=max_add {
            cur.push((alpha.part(r) + t) as u8);
            go(alpha, rows, r + 1, left - t, cur, out);
            cur.pop();
        }
    }
    go(alpha, rows, 0, s, &mut Vec::new(), &mut out);
    out
}

/// Number of ones in the binary expansion of `n`.
pub fn binary_digit_count(n: usize) -> u32 {
    n.count_ones()
}

/// Compares two partitions in the enumeration order (reverse lexicographic).
pub fn enumeration_order(a: &Partition, b: &Partition) -> Ordering {
    b.cmp(a)
}
