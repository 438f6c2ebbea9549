//! Murnaghan–Nakayama evaluation on beta-sets.

use std::sync::LazyLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Beads `λ_i + len - 1 - i` for `i < len`, strictly decreasing.
pub(crate) fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lambda.part(i) + len - 1 - i).collect()
}

/// Inverse of [`beta_set`]; `beads` may be in any order.
pub(crate) fn from_beta(beads: &mut [usize]) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let len = beads.len();
    let v: Vec<u8> = (0..len)
        .map(|i| (beads[i] - (len - 1 - i)) as u8)
        .filter(|&p| p > 0)
        .collect();
    Partition::from_canonical(v)
}

/// Every way of removing a rim hook of size `k` from `λ`, as
/// `(λ minus hook, (-1)^{height})`.
pub(crate) fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(Partition, i32)> {
    let len = lambda.len();
    let beads = beta_set(lambda, len);
    let mut out = Vec::new();
    for j in 0..len {
        let x = beads[j];
        if x < k {
            continue;
        }
        let y = x - k;
        if beads.contains(&y) {
            continue;
        }
        let between = beads.iter().filter(|&&b| b > y && b < x).count();
        let mut nb = beads.clone();
        nb[j] = y;
        out.push((from_beta(&mut nb), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Every way of adding a rim hook of size `k` to `λ`.
pub(crate) fn add_rim_hooks(lambda: &Partition, k: usize) -> Vec<(Partition, i32)> {
    let len = lambda.len() + k;
    let beads = beta_set(lambda, len);
    let mut out = Vec::new();
    for j in 0..len {
        let x = beads[j];
        let y = x + k;
        if beads.contains(&y) {
            continue;
        }
        let between = beads.iter().filter(|&&b| b > x && b < y).count();
        let mut nb = beads.clone();
        nb[j] = y;
        out.push((from_beta(&mut nb), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// `f^λ`, the number of standard tableaux, by the hook length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    for i in 2..=n {
        num *= i as u64;
    }
    let mut den = BigUint::one();
    for r in 0..lambda.len() {
        for c in 0..lambda.part(r) {
            let hook = lambda.part(r) - c - 1 + conj.part(c) - r - 1 + 1;
            den *= hook as u64;
        }
    }
    num / den
}

/// `f^λ` as a fixed-width integer; panics beyond `i128`.
pub fn dimension_i128(lambda: &Partition) -> i128 {
    dimension(lambda).to_i128().expect("dimension exceeds i128")
}

static CHAR_CACHE: LazyLock<RwLock<FxHashMap<(Partition, Partition), i128>>> =
    LazyLock::new(Default::default);

/// `χ^λ(ρ)`, the irreducible character at a permutation of cycle type `ρ`.
pub fn character_value(lambda: &Partition, rho: &Partition) -> Result<i128> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: rho.size(),
        });
    }
    Ok(chi(lambda, rho))
}

fn chi(lambda: &Partition, rho: &Partition) -> i128 {
    if rho.is_empty() {
        return 1;
    }
    if rho.first() == 1 {
        return dimension_i128(lambda);
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = CHAR_CACHE.read().get(&key) {
        return v;
    }
    // strip the largest cycle first so the small-cycle tails are shared
    let k = rho.first();
    let rest = Partition::from_canonical(rho.parts()[1..].to_vec());
    let mut total: i128 = 0;
    for (mu, sign) in remove_rim_hooks(lambda, k) {
        total += sign as i128 * chi(&mu, &rest);
    }
    CHAR_CACHE.write().insert(key, total);
    total
}

/// Multiplies a Schur-basis vector by the power sum `p_k`.
pub(crate) fn mul_power_sum(
    v: &FxHashMap<Partition, i128>,
    k: usize,
) -> FxHashMap<Partition, i128> {
    let mut out: FxHashMap<Partition, i128> = FxHashMap::default();
    for (lambda, &c) in v {
        for (mu, sign) in add_rim_hooks(lambda, k) {
            *out.entry(mu).or_insert(0) += sign as i128 * c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    #[test]
    fn trivial_and_sign() {
        for rho in enumerate_partitions(6) {
            assert_eq!(character_value(&p(&[6]), &rho).unwrap(), 1);
            assert_eq!(
                character_value(&Partition::column(6), &rho).unwrap(),
                rho.cycle_sign() as i128
            );
        }
        assert_eq!(character_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character_value(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(character_value(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert!(character_value(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn dims() {
        assert_eq!(dimension(&p(&[3, 2])), BigUint::from(5u32));
        assert_eq!(dimension(&p(&[4, 2, 1])), BigUint::from(35u32));
    }

    #[test]
    fn rim_hooks_roundtrip() {
        let lambda = p(&[4, 3, 1]);
        for (mu, s) in remove_rim_hooks(&lambda, 3) {
            assert!(add_rim_hooks(&mu, 3).contains(&(lambda.clone(), s)));
        }
    }
}
