//! The `m = 2` specialisation with explicit branches for `k ≤ 2`.

use std::sync::LazyLock;

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, skew_expand};
use crate::partition::{remove_horizontal_strips, subpartitions, Partition};

static CACHE: LazyLock<RwLock<FxHashMap<(Partition, Partition), i64>>> =
    LazyLock::new(Default::default);

pub(super) fn clear_cache() {
    CACHE.write().clear();
}

/// `a^μ_{λ,(2)}`. Requires `|μ| = 2|λ|`.
pub fn pleth_m2(mu: &Partition, lambda: &Partition) -> Result<u64> {
    if mu.size() != 2 * lambda.size() {
        return Err(Error::PreconditionViolated(format!(
            "|{mu}| != 2·|{lambda}|"
        )));
    }
    Ok(coefficient(mu, lambda)? as u64)
}

fn coefficient(mu: &Partition, lambda: &Partition) -> Result<i64> {
    let n = lambda.size();
    if n == 0 {
        return Ok(mu.is_empty() as i64);
    }
    if mu.len() > n {
        return Ok(0);
    }
    let key = (mu.clone(), lambda.clone());
    if let Some(&v) = CACHE.read().get(&key) {
        return Ok(v);
    }
    let v = match n - mu.len() {
        0 => (mu.strip_first_column() == lambda.conjugate()) as i64,
        1 => k_one(mu, lambda),
        2 => k_two(mu, lambda),
        k => general(mu, lambda, k)?,
    };
    if v < 0 {
        return Err(Error::NegativeResult {
            value: v,
            context: format!("a^{mu}_{{{lambda},(2)}}"),
        });
    }
    CACHE.write().insert(key, v);
    Ok(v)
}

fn p(v: &[usize]) -> Partition {
    Partition::of(v)
}

/// `Σ_{τ ⊢ |L|-1} c^{μ̂}_{τ,(2)} c^L_{τ,(1)} - c^{μ̂}_{L,(1)}`.
fn k_one(mu: &Partition, lambda: &Partition) -> i64 {
    let big_l = lambda.conjugate();
    let mu_hat = mu.strip_first_column();
    let (one, two) = (p(&[1]), p(&[2]));
    let mut total = 0i64;
    for tau in subpartitions(&big_l, big_l.size() - 1) {
        total += lr_coefficient(&mu_hat, &tau, &two) as i64;
    }
    total - lr_coefficient(&mu_hat, &big_l, &one) as i64
}

fn k_two(mu: &Partition, lambda: &Partition) -> i64 {
    let big_l = lambda.conjugate();
    let mu_hat = mu.strip_first_column();
    let n = big_l.size();
    let c = |outer: &Partition, a: &Partition, b: &[usize]| lr_coefficient(outer, a, &p(b)) as i64;
    let mut total = 0i64;
    if n >= 2 {
        for tau in subpartitions(&big_l, n - 2) {
            let (l11, l2) = (c(&big_l, &tau, &[1, 1]), c(&big_l, &tau, &[2]));
            total += c(&mu_hat, &tau, &[4]) * l11
                + c(&mu_hat, &tau, &[3, 1]) * l2
                + c(&mu_hat, &tau, &[2, 2]) * l11;
        }
    }
    for tau in subpartitions(&big_l, n - 1) {
        total -= c(&mu_hat, &tau, &[3]) + c(&mu_hat, &tau, &[2, 1]);
    }
    total + c(&mu_hat, &big_l, &[2])
}

/// `Σ_i (-1)^{k+i} Σ_{α ⊢ k+i, β ⊢ i} (Σ_σ c^α_{σ,(k-i)} a^σ_{β',(2)}) (Σ_τ c^{μ̂}_{τ,α} c^L_{τ,β})`.
fn general(mu: &Partition, lambda: &Partition, k: usize) -> Result<i64> {
    let big_l = lambda.conjugate();
    let mu_hat = mu.strip_first_column();
    let mut total = 0i64;
    for i in 0..=k {
        if k + i > mu_hat.size() {
            continue;
        }
        let alphas = subpartitions(&mu_hat, k + i);
        let mut inner = 0i64;
        for beta in subpartitions(&big_l, i) {
            let beta_c = beta.conjugate();
            let l_over_beta = skew_expand(&big_l, &beta);
            for alpha in &alphas {
                let mut f1 = 0i64;
                for sigma in remove_horizontal_strips(alpha, k - i) {
                    f1 += coefficient(&sigma, &beta_c)?;
                }
                if f1 == 0 {
                    continue;
                }
                let mu_over_alpha = skew_expand(&mu_hat, alpha);
                let f2 = sorted_dot(&mu_over_alpha, &l_over_beta)?;
                let t = f1.checked_mul(f2).ok_or(Error::Overflow("pleth_m2"))?;
                inner = inner.checked_add(t).ok_or(Error::Overflow("pleth_m2"))?;
            }
        }
        total = if (k + i).is_multiple_of(2) {
            total.checked_add(inner)
        } else {
            total.checked_sub(inner)
        }
        .ok_or(Error::Overflow("pleth_m2"))?;
    }
    Ok(total)
}

pub(super) fn sorted_dot(a: &[(Partition, u64)], b: &[(Partition, u64)]) -> Result<i64> {
    let (mut i, mut j, mut total) = (0, 0, 0i64);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let t = (a[i].1 as i64)
                    .checked_mul(b[j].1 as i64)
                    .ok_or(Error::Overflow("pleth_m2"))?;
                total = total.checked_add(t).ok_or(Error::Overflow("pleth_m2"))?;
                i += 1;
                j += 1;
            }
        }
    }
    Ok(total)
}
