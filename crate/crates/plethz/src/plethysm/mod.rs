//! Plethysm coefficients `a^μ_{λ,(m)}` by the signed recursion on `m`.
//!
//! For `λ ⊢ n`, `μ ⊢ mn` with `l(μ) = n - k` and `μ̂ = μ - (1^{n-k})`:
//!
//! ```text
//! a^μ_{λ',(m)} = Σ_{i=0..k} (-1)^{k+i} Σ_{α ⊢ k+(m-1)i, β ⊢ i} a^{α/(k-i)}_{β',(m)} · a^{μ̂/α}_{λ/β,(m-1)}
//! ```
//!
//! Skew coefficients are expanded by their definition,
//! `a^{α/β}_{γ/δ,(m)} = Σ_{η,ζ} c^γ_{η,δ} c^α_{ζ,β} a^ζ_{η,(m)}`.

mod aggregate;
mod checks;
mod deflation;
mod m2;

use std::sync::LazyLock;

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, skew_expand};
use crate::partition::{remove_horizontal_strips, subpartitions, Partition, SkewShape};

pub use aggregate::{pleth2_pairing, pleth2_pairing_rows, SchurVec};
pub use checks::{
    bor_complement, check_conjecture18, check_de_boeck_651, check_de_boeck_652,
    check_stability_prop17, conj_symmetry, stability_sample, thrall, BorOutcome,
    Conjecture18Report, DeBoeckReport, StabilityReport, ThrallDirection,
};
pub use deflation::{
    closed_form_deflation, deflate, deflate_by_recursion, irreducible_deflations, Deflation,
};
pub use m2::pleth_m2;

/// A query `a^μ_{λ,(m)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlethysmKey {
    pub mu: Partition,
    pub lambda: Partition,
    pub m: usize,
}

impl PlethysmKey {
    pub fn new(mu: Partition, lambda: Partition, m: usize) -> Self {
        PlethysmKey { mu, lambda, m }
    }

    /// Sizes are compatible: `|μ| = m·|λ|`.
    pub fn is_homogeneous(&self) -> bool {
        self.mu.size() == self.m * self.lambda.size()
    }

    pub fn evaluate(&self) -> Result<u64> {
        pleth_recursive(&self.mu, &self.lambda, self.m)
    }
}

type Key = (Partition, Partition, usize);

static CACHE: LazyLock<RwLock<FxHashMap<Key, i64>>> = LazyLock::new(Default::default);

/// Drops memoised plethysm coefficients.
pub fn clear_caches() {
    CACHE.write().clear();
    m2::clear_cache();
    aggregate::clear_cache();
}

fn checked_mul_add(acc: i64, a: i64, b: i64, what: &'static str) -> Result<i64> {
    let t = a.checked_mul(b).ok_or(Error::Overflow(what))?;
    acc.checked_add(t).ok_or(Error::Overflow(what))
}

/// `a^μ_{λ,(m)}` by the recursion; zero on size mismatch or when
/// `l(μ) > |λ|`.
pub fn pleth_recursive(mu: &Partition, lambda: &Partition, m: usize) -> Result<u64> {
    let v = coefficient(mu, lambda, m)?;
    Ok(v as u64)
}

/// Memoised signed evaluation; every stored value is checked nonnegative.
pub(crate) fn coefficient(mu: &Partition, lambda: &Partition, m: usize) -> Result<i64> {
    let n = lambda.size();
    if m == 0 {
        return Ok((mu.is_empty() && lambda.len() <= 1) as i64);
    }
    if mu.size() != m * n {
        return Ok(0);
    }
    if n == 0 {
        return Ok(1);
    }
    if m == 1 {
        return Ok((mu == lambda) as i64);
    }
    if mu.len() > n {
        return Ok(0);
    }
    if n == 1 {
        return Ok((mu.len() == 1) as i64);
    }
    let key = (mu.clone(), lambda.clone(), m);
    if let Some(&v) = CACHE.read().get(&key) {
        return Ok(v);
    }
    let v = recursion(mu, lambda, m)?;
    if v < 0 {
        return Err(Error::NegativeResult {
            value: v,
            context: format!("a^{mu}_{{{lambda},({m})}}"),
        });
    }
    CACHE.write().insert(key, v);
    Ok(v)
}

fn recursion(mu: &Partition, lambda: &Partition, m: usize) -> Result<i64> {
    let n = lambda.size();
    // the formula computes a^μ_{L',(m)}, so feed it L = λ'
    let big_l = lambda.conjugate();
    let k = n - mu.len();
    let mu_hat = mu.strip_first_column();
    let mut total: i64 = 0;
    for i in 0..=k {
        let alpha_size = k + (m - 1) * i;
        if alpha_size > mu_hat.size() {
            continue;
        }
        let alphas = subpartitions(&mu_hat, alpha_size);
        let mut inner: i64 = 0;
        for beta in subpartitions(&big_l, i) {
            let beta_c = beta.conjugate();
            let l_over_beta = skew_expand(&big_l, &beta);
            for alpha in &alphas {
                let f1 = row_skew_coefficient(alpha, k - i, &beta_c, m)?;
                if f1 == 0 {
                    continue;
                }
                let f2 = skew_coefficient_expanded(&mu_hat, alpha, &l_over_beta, m - 1)?;
                inner = checked_mul_add(inner, f1, f2, "plethysm recursion")?;
            }
        }
        if (k + i).is_multiple_of(2) {
            total = total
                .checked_add(inner)
                .ok_or(Error::Overflow("plethysm recursion"))?;
        } else {
            total = total
                .checked_sub(inner)
                .ok_or(Error::Overflow("plethysm recursion"))?;
        }
    }
    Ok(total)
}

/// `a^{α/(r)}_{β,(m)} = Σ_ζ c^α_{ζ,(r)} a^ζ_{β,(m)}`.
fn row_skew_coefficient(alpha: &Partition, r: usize, beta: &Partition, m: usize) -> Result<i64> {
    let mut total = 0i64;
    for zeta in remove_horizontal_strips(alpha, r) {
        total = total
            .checked_add(coefficient(&zeta, beta, m)?)
            .ok_or(Error::Overflow("skew plethysm"))?;
    }
    Ok(total)
}

/// `a^{outer/inner}_{γ/δ,(m)}` with the inner skew expansion `s_{γ/δ}`
/// already supplied.
fn skew_coefficient_expanded(
    outer: &Partition,
    inner: &Partition,
    gamma_over_delta: &[(Partition, u64)],
    m: usize,
) -> Result<i64> {
    if !inner.is_contained_in(outer) {
        return Ok(0);
    }
    let outer_exp = skew_expand(outer, inner);
    let mut total = 0i64;
    if m == 1 {
        // a^ζ_{η,(1)} = δ_{ζη}
        return m2::sorted_dot(&outer_exp, gamma_over_delta);
    }
    for (eta, c1) in gamma_over_delta {
        for (zeta, c2) in outer_exp.iter() {
            if zeta.len() > eta.size() {
                continue;
            }
            let a = coefficient(zeta, eta, m)?;
            if a != 0 {
                let w = (*c1 as i64)
                    .checked_mul(*c2 as i64)
                    .ok_or(Error::Overflow("skew plethysm"))?;
                total = checked_mul_add(total, w, a, "skew plethysm")?;
            }
        }
    }
    Ok(total)
}

/// The skew plethysm coefficient `a^{α/β}_{γ/δ,(m)}`.
pub fn skew_pleth(outer: &SkewShape, inner: &SkewShape, m: usize) -> Result<u64> {
    let gd = skew_expand(inner.outer(), inner.inner());
    let v = skew_coefficient_expanded(outer.outer(), outer.inner(), &gd, m)?;
    if v < 0 {
        return Err(Error::NegativeResult {
            value: v,
            context: format!("a^{outer}_{{{inner},({m})}}"),
        });
    }
    Ok(v as u64)
}

/// The right-hand side of the column-removal identity: for `l(ν) = n`,
/// `ν ⊢ mn + k`, `ν̂ = ν - (1^n)`,
/// `a^{ν/(1^k)}_{λ',(m)} = Σ_{α ⊢ mk, β ⊢ k} a^α_{β',(m)} · a^{ν̂/α}_{λ/β,(m-1)}`.
pub fn pleth_14_6ii(nu: &Partition, lambda: &Partition, m: usize, k: usize) -> Result<u64> {
    let n = lambda.size();
    if m == 0 || nu.len() != n || nu.size() != m * n + k || k >= n.max(1) {
        return Err(Error::PreconditionViolated(format!(
            "need l(ν) = |λ| = n, |ν| = mn + k and k < n; got ν = {nu}, λ = {lambda}, m = {m}, k = {k}"
        )));
    }
    let nu_hat = nu.strip_first_column();
    let mut total = 0i64;
    for beta in subpartitions(lambda, k) {
        let beta_c = beta.conjugate();
        let l_over_beta = skew_expand(lambda, &beta);
        for alpha in subpartitions(&nu_hat, m * k) {
            let f1 = coefficient(&alpha, &beta_c, m)?;
            if f1 == 0 {
                continue;
            }
            let f2 = skew_coefficient_expanded(&nu_hat, &alpha, &l_over_beta, m - 1)?;
            total = checked_mul_add(total, f1, f2, "column-removal identity")?;
        }
    }
    Ok(total as u64)
}

/// `a^{ν/(1^k)}_{λ',(m)} = Σ_τ c^ν_{τ,(1^k)} a^τ_{λ',(m)}`, evaluated
/// directly through the LR rule and [`pleth_recursive`].
pub fn pleth_column_skew_direct(
    nu: &Partition,
    lambda: &Partition,
    m: usize,
    k: usize,
) -> Result<u64> {
    let col = Partition::column(k);
    let lc = lambda.conjugate();
    let mut total = 0u64;
    for tau in subpartitions(nu, nu.size() - k) {
        let c = lr_coefficient(nu, &tau, &col);
        if c > 0 {
            total += c * pleth_recursive(&tau, &lc, m)?;
        }
    }
    Ok(total)
}
