//! Closed forms for `Z^λ` on hooks, two-column shapes and near hooks.

use crate::error::{Error, Result};
use crate::partition::{binary_digit_count, Partition};

use super::{z_table_with, ZOptions};

/// `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `Z^{(n-t,1^t)} = C(k-1, t)` where `n` has `k` binary digits.
pub fn z_closed_hook(lambda: &Partition) -> Result<u128> {
    let t = lambda
        .hook_leg()
        .ok_or_else(|| Error::NotAHook(lambda.to_string()))?;
    let k = binary_digit_count(lambda.size()) as u64;
    Ok(binomial(k - 1, t as u64))
}

/// For `λ_1 ≤ 2`: `1` if `λ = (2,…,2,ε)` with `ε ∈ {0,1}`, else `0`.
pub fn z_closed_two_column(lambda: &Partition) -> Result<u128> {
    if lambda.is_empty() || lambda.first() > 2 {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} has more than two columns"
        )));
    }
    Ok(lambda.is_twos_then_epsilon() as u128)
}

/// `Z^{(n-l,2,1^{l-2})}` for `λ_{n,l} = (n-l, 2, 1^{l-2}) ⊢ n`.
///
/// Powers of two use `C(r-1, l-1)`. Even `n = 2m` with `m ≥ 4` uses
/// `C(t, l-1) + Z^{λ_{m,l}} + Z^{λ_{m,l-1}}` (`t` binary digits of `m`,
/// out-of-range shapes counted as 0). Odd `n` removes the box of `P_1`:
/// `Z^{λ_{n-1,l}} + Z^{(n-l,1^{l-1})} + Z^{λ_{n-1,l-1}}`. Sizes below 8
/// read the table.
pub fn z_closed_near_hook(n: usize, l: usize) -> Result<u128> {
    if l < 2 || n < l + 2 {
        return Err(Error::PreconditionViolated(format!(
            "(n-l,2,1^(l-2)) invalid for n = {n}, l = {l}"
        )));
    }
    near(n, l)
}

fn near(n: usize, l: usize) -> Result<u128> {
    if l < 2 || n < l + 2 {
        return Ok(0);
    }
    if n.is_power_of_two() {
        let r = n.trailing_zeros() as u64;
        return Ok(binomial(r - 1, l as u64 - 1));
    }
    if n < 8 {
        let shape = Partition::near_hook(n, l)?;
        return Ok(z_table_with(n, &ZOptions::default())?.get(&shape));
    }
    if n % 2 == 1 {
        let hook = binomial(binary_digit_count(n - 1) as u64 - 1, l as u64 - 1);
        return Ok(near(n - 1, l)? + hook + near(n - 1, l - 1)?);
    }
    let m = n / 2;
    let t = binary_digit_count(m) as u64;
    Ok(binomial(t, l as u64 - 1) + near(m, l)? + near(m, l - 1)?)
}
