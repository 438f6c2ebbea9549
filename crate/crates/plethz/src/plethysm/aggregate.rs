//! `V[h_2]` for a whole Schur vector `V` at once, without forming any
//! individual deflation.
//!
//! Write `U = ωV` and `Φ(s_β) = s_{β'}[h_2]`. Summing the `m = 2` recursion
//! against the coefficients of `V` gives, for `μ` with `l(μ) = n - k`,
//!
//! ```text
//! ⟨V[h_2], s_μ⟩ = ⟨s_{μ̂}, H_k⟩,   H_k = Σ_{i ≤ k} (-1)^{k+i} h_{k-i} · G_i,
//! G_i = Σ_{β ⊢ i} Φ(s_β) · s_β^⊥ U.
//! ```
//!
//! Only Schur functions with at most `n - k` rows pair with `s_{μ̂}`, so
//! every factor is truncated to that many rows. `Φ(s_β)` is the same
//! computation one degree down and is memoised per `β`.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::lr::{product_expand, skew_expand_uncached};
use crate::partition::{add_horizontal_strips, enumerate_partitions, Partition};

/// A homogeneous element of the ring of symmetric functions in the Schur
/// basis.
pub type SchurVec = BTreeMap<Partition, i128>;

type Sparse = FxHashMap<Partition, i128>;

/// `β ↦ (rows, Φ(s_β)` truncated to `rows` rows`)`.
type PhiMemo = FxHashMap<Partition, (usize, Arc<Sparse>)>;

static PHI: LazyLock<RwLock<PhiMemo>> = LazyLock::new(Default::default);

pub(super) fn clear_cache() {
    PHI.write().clear();
}

fn bump(map: &mut Sparse, key: Partition, v: i128) -> Result<()> {
    if v == 0 {
        return Ok(());
    }
    let e = map.entry(key).or_insert(0);
    *e = e
        .checked_add(v)
        .ok_or(Error::Overflow("aggregated plethysm"))?;
    Ok(())
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b)
        .ok_or(Error::Overflow("aggregated plethysm"))
}

/// `V[h_2]`.
pub fn pleth2_pairing(v: &SchurVec) -> Result<SchurVec> {
    let rows = v.keys().next().map_or(0, |p| 2 * p.size());
    pleth2_pairing_rows(v, rows)
}

/// `V[h_2]` restricted to partitions with at most `rows` rows.
pub fn pleth2_pairing_rows(v: &SchurVec, rows: usize) -> Result<SchurVec> {
    let mut degree = None;
    for p in v.keys() {
        if *degree.get_or_insert(p.size()) != p.size() {
            return Err(Error::MixedSizes);
        }
    }
    let sparse: Sparse = v
        .iter()
        .filter(|(_, &c)| c != 0)
        .map(|(p, &c)| (p.clone(), c))
        .collect();
    let out = pairing(&sparse, degree.unwrap_or(0), rows)?;
    Ok(out.into_iter().filter(|(_, c)| *c != 0).collect())
}

fn phi(beta: &Partition, rows: usize) -> Result<Arc<Sparse>> {
    let rows = rows.min(beta.size());
    if let Some((r, cached)) = PHI.read().get(beta) {
        if *r >= rows {
            if *r == rows {
                return Ok(cached.clone());
            }
            return Ok(Arc::new(
                cached
                    .iter()
                    .filter(|(p, _)| p.len() <= rows)
                    .map(|(p, &c)| (p.clone(), c))
                    .collect(),
            ));
        }
    }
    let mut single = Sparse::default();
    single.insert(beta.conjugate(), 1);
    let value = Arc::new(pairing(&single, beta.size(), rows)?);
    let mut w = PHI.write();
    let keep = w.get(beta).is_none_or(|(r, _)| *r < rows);
    if keep {
        w.insert(beta.clone(), (rows, value.clone()));
    }
    Ok(value)
}

fn pairing(v: &Sparse, n: usize, rows: usize) -> Result<Sparse> {
    if n == 0 {
        return Ok(v.clone());
    }
    let r = rows.min(n);
    let mut out = Sparse::default();
    if r == 0 {
        return Ok(out);
    }
    let u: Vec<(Partition, i128)> = v.iter().map(|(p, &c)| (p.conjugate(), c)).collect();
    let k_min = n - r;

    let mut g: Vec<Sparse> = Vec::with_capacity(n);
    for i in 0..n {
        let t = n - i.max(k_min);
        // M_σ = Σ_β Φ(s_β)_σ · s_β^⊥ U, then G_i = Σ_σ s_σ · M_σ
        let mut m: FxHashMap<Partition, Sparse> = FxHashMap::default();
        for beta in enumerate_partitions(i) {
            let mut kb = Sparse::default();
            for (lam, c) in &u {
                if !beta.is_contained_in(lam) {
                    continue;
                }
                for (tau, d) in skew_expand_uncached(lam, &beta) {
                    if tau.len() <= t {
                        bump(&mut kb, tau, mul(*c, d as i128)?)?;
                    }
                }
            }
            kb.retain(|_, c| *c != 0);
            if kb.is_empty() {
                continue;
            }
            for (sigma, a) in phi(&beta, t)?.iter() {
                let e = m.entry(sigma.clone()).or_default();
                for (tau, x) in &kb {
                    bump(e, tau.clone(), mul(*a, *x)?)?;
                }
            }
        }
        let mut gi = Sparse::default();
        for (sigma, ms) in m {
            for (tau, x) in ms {
                if x == 0 {
                    continue;
                }
                for (nu, c) in product_expand(&sigma, &tau, Some(t)) {
                    bump(&mut gi, nu, mul(x, c as i128)?)?;
                }
            }
        }
        gi.retain(|_, c| *c != 0);
        g.push(gi);
    }

    for k in k_min..n {
        let t = n - k;
        let mut h = Sparse::default();
        for (i, gi) in g.iter().enumerate().take(k + 1) {
            let sign = if (k + i) % 2 == 0 { 1 } else { -1 };
            for (nu, c) in gi {
                if nu.len() > t {
                    continue;
                }
                for lam in add_horizontal_strips(nu, k - i, t) {
                    bump(&mut h, lam, sign * c)?;
                }
            }
        }
        let col = Partition::column(t);
        for (nu, c) in h {
            if c != 0 {
                out.insert(nu.add(&col), c);
            }
        }
    }
    Ok(out)
}
