//! Criteria that certify `Z^μ = 0` without computing it.
//!
//! [`classify_zero`] lists every applicable criterion; the first entry is
//! the first-match classification. The fixed priority is: tall, `N_i` in
//! increasing `i`, two columns, hook, near hook, inside partition at the
//! boundary `l(μ) - |I(μ)| = |μ|/4`, length `|μ|/2`, three columns.

use std::fmt;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::partition::{binary_digit_count, Partition};

use super::closed::{binomial, z_closed_near_hook};
use super::stats::{n_stats, DEFAULT_N_LEVELS};
use super::ZTable;

/// Which special case of the inside-partition boundary applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InsideCase {
    /// `k(μ) > ⌈h/4⌉` with `h = |μ|/2`.
    LargeK,
    /// `I(μ) = (1^{h/2-k})`, including `I(μ) = ∅`.
    Column,
    /// `I(μ) = (h/2-k)` with `I(μ)` nonempty.
    Row,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZeroTag {
    Tall,
    NiCriterion(u8),
    TwoColumn,
    Hook,
    NearHook,
    InsideHalf(InsideCase),
    LengthHalf,
    ThreeColumn,
    Unexplained,
}

impl ZeroTag {
    /// Short name used in reports and CSV output.
    pub fn name(&self) -> String {
        match self {
            ZeroTag::Tall => "tall".into(),
            ZeroTag::NiCriterion(i) => format!("N{i}"),
            ZeroTag::TwoColumn => "two-column".into(),
            ZeroTag::Hook => "hook".into(),
            ZeroTag::NearHook => "near-hook".into(),
            ZeroTag::InsideHalf(InsideCase::LargeK) => "inside-large-k".into(),
            ZeroTag::InsideHalf(InsideCase::Column) => "inside-column".into(),
            ZeroTag::InsideHalf(InsideCase::Row) => "inside-row".into(),
            ZeroTag::LengthHalf => "length-half".into(),
            ZeroTag::ThreeColumn => "three-column".into(),
            ZeroTag::Unexplained => "unexplained".into(),
        }
    }
}

impl Serialize for ZeroTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for ZeroTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroReason {
    pub tag: ZeroTag,
    pub detail: String,
}

impl ZeroReason {
    fn new(tag: ZeroTag, detail: String) -> Self {
        ZeroReason { tag, detail }
    }
}

/// Every criterion certifying `Z^μ = 0`, in priority order. `half` is the
/// table at `|μ|/2`, needed for the length and three-column criteria.
pub fn classify_zero(mu: &Partition, half: Option<&ZTable>, levels: usize) -> Vec<ZeroReason> {
    let mut out = Vec::new();
    let n = mu.size();
    if n == 0 {
        return out;
    }
    let l = mu.len();
    let even = n.is_multiple_of(2);

    let bound = if even { n / 2 } else { n.div_ceil(2) };
    if l > bound {
        out.push(ZeroReason::new(ZeroTag::Tall, format!("l = {l} > {bound}")));
    }

    let stats = n_stats(mu, levels);
    let half_size = Rational64::new(n as i64, 2);
    for i in 1..=levels {
        if n.is_multiple_of(1usize << i) && stats.n(i) > half_size {
            out.push(ZeroReason::new(
                ZeroTag::NiCriterion(i as u8),
                format!("N_{i} = {} > {n}/2", stats.n(i)),
            ));
        }
    }

    if mu.first() <= 2 && !mu.is_twos_then_epsilon() {
        out.push(ZeroReason::new(
            ZeroTag::TwoColumn,
            "two columns, not (2,…,2,ε)".into(),
        ));
    }

    if let Some(t) = mu.hook_leg() {
        let k = binary_digit_count(n) as u64;
        if binomial(k - 1, t as u64) == 0 {
            out.push(ZeroReason::new(
                ZeroTag::Hook,
                format!("C({}, {t}) = 0", k - 1),
            ));
        }
    }

    if let Some(l) = mu.near_hook_index() {
        if z_closed_near_hook(n, l).is_ok_and(|z| z == 0) {
            out.push(ZeroReason::new(
                ZeroTag::NearHook,
                format!("λ_{{{n},{l}}} closed form is 0"),
            ));
        }
    }

    if n.is_multiple_of(4) {
        inside_cases(mu, &mut out);
    }

    if let Some(t) = half.filter(|t| even && t.n() == n / 2) {
        let h = n / 2;
        if l == h {
            let tilde = mu.tilde_or_empty();
            if t.get(&tilde) == 0 {
                out.push(ZeroReason::new(
                    ZeroTag::LengthHalf,
                    format!("Z{tilde} = 0"),
                ));
            }
        }
        if mu.fits_in(3, h) {
            if let Ok(c) = mu.rect_complement(3, h) {
                let c = c.conjugate();
                if t.get(&c) == 0 {
                    out.push(ZeroReason::new(ZeroTag::ThreeColumn, format!("Z{c} = 0")));
                }
            }
        }
    }
    out
}

/// `l(μ) - |I(μ)| = h/2` with `h = |μ|/2` and `k = h - l(μ) ≥ 0`.
fn inside_cases(mu: &Partition, out: &mut Vec<ZeroReason>) {
    let h = mu.size() / 2;
    let l = mu.len();
    let inside = mu.inside_partition().unwrap_or_else(|_| Partition::empty());
    if l > h || l < inside.size() || l - inside.size() != h / 2 {
        return;
    }
    let k = h - l;
    let (lo, hi) = (h / 4, h.div_ceil(4));
    if k > hi {
        out.push(ZeroReason::new(
            ZeroTag::InsideHalf(InsideCase::LargeK),
            format!("k = {k} > {hi}"),
        ));
    }
    let w = h / 2 - k;
    if inside == Partition::column(w) && k != lo && k != hi {
        out.push(ZeroReason::new(
            ZeroTag::InsideHalf(InsideCase::Column),
            format!("I = (1^{w}), k = {k}"),
        ));
    }
    if w > 0 && inside == Partition::row(w) {
        let b = binary_digit_count(h / 2) as u64;
        if binomial(b, k as u64) == 0 {
            out.push(ZeroReason::new(
                ZeroTag::InsideHalf(InsideCase::Row),
                format!("I = ({w}), C({b}, {k}) = 0"),
            ));
        }
    }
}

/// The first criterion that needs no table, if any.
pub fn certify_zero(mu: &Partition) -> Option<ZeroReason> {
    certify_zero_with(mu, None)
}

/// The first criterion in priority order, using the half-size table when
/// given.
pub fn certify_zero_with(mu: &Partition, half: Option<&ZTable>) -> Option<ZeroReason> {
    classify_zero(mu, half, DEFAULT_N_LEVELS).into_iter().next()
}
