//! Symmetric functions in the power-sum basis, and the brute-force oracles
//! for plethysm and Sylow branching coefficients.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use super::character::{character_value, mul_power_sum};
use super::IrrDecomposition;
use crate::error::{Error, Result};
use crate::lr;
use crate::partition::{enumerate_partitions, Partition, SkewShape};

/// Default bound on `|λ|·|ν|` for [`plethysm_oracle`].
pub const DEFAULT_PLETHYSM_BOUND: usize = 16;
/// Default bound on `m·|shape|` for [`rho`].
pub const DEFAULT_RHO_BOUND: usize = 14;
/// Default bound on `n` for [`sylow_branching_oracle`].
pub const DEFAULT_SYLOW_BOUND: usize = 16;

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (i, &m) in rho.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m {
            z *= (i * j) as u64;
        }
    }
    z
}

/// A homogeneous symmetric function `Σ_ρ c_ρ p_ρ` with rational
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PowerSumPoly {
    degree: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl PowerSumPoly {
    pub fn zero(degree: usize) -> Self {
        PowerSumPoly {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single power sum `p_ρ`.
    pub fn power_sum(rho: Partition) -> Self {
        let mut p = Self::zero(rho.size());
        p.coeffs.insert(rho, BigRational::one());
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, rho: &Partition) -> BigRational {
        self.coeffs
            .get(rho)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> + '_ {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, rho: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .coeffs
            .entry(rho.clone())
            .or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&rho);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in other.iter() {
            out.add_term(r.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(self.degree);
        if k.is_zero() {
            return out;
        }
        for (r, c) in self.iter() {
            out.coeffs.insert(r.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    /// `p_k ∘ f`: replace every `p_j` by `p_{jk}`.
    pub fn adams(&self, k: usize) -> Self {
        let mut out = Self::zero(self.degree * k);
        for (r, c) in self.iter() {
            let scaled = Partition::new(r.parts().iter().map(|&x| x as usize * k))
                .expect("scaled parts fit");
            out.coeffs.insert(scaled, c.clone());
        }
        out
    }

    /// `s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ`.
    pub fn schur(lambda: &Partition) -> Self {
        let n = lambda.size();
        let mut out = Self::zero(n);
        for rho in enumerate_partitions(n) {
            let chi = character_value(lambda, &rho).expect("sizes agree");
            if chi != 0 {
                let c = BigRational::new(BigInt::from(chi), BigInt::from(z_rho(&rho)));
                out.coeffs.insert(rho, c);
            }
        }
        out
    }

    /// The symmetric function of a virtual character.
    pub fn from_irr(phi: &IrrDecomposition) -> Self {
        let mut out = Self::zero(phi.degree());
        for (lambda, c) in phi.iter() {
            out = out.add(&Self::schur(lambda).scale(&BigRational::from_integer(BigInt::from(c))));
        }
        out
    }

    /// Exact Schur coefficients `⟨self, s_λ⟩` for every `λ`.
    pub fn schur_coefficients(&self) -> BTreeMap<Partition, BigRational> {
        // p_ρ in the Schur basis, built by adding rim hooks for the parts of
        // ρ in increasing order; prefixes are shared through the memo
        let mut memo: FxHashMap<Vec<u8>, FxHashMap<Partition, i128>> = FxHashMap::default();
        let mut base = FxHashMap::default();
        base.insert(Partition::empty(), 1i128);
        memo.insert(Vec::new(), base);
        let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (rho, c) in self.iter() {
            let asc: Vec<u8> = rho.parts().iter().rev().copied().collect();
            for l in 1..=asc.len() {
                if !memo.contains_key(&asc[..l]) {
                    let next = mul_power_sum(&memo[&asc[..l - 1]], asc[l - 1] as usize);
                    memo.insert(asc[..l].to_vec(), next);
                }
            }
            for (lambda, &v) in &memo[&asc[..]] {
                let e = acc.entry(lambda.clone()).or_insert_with(BigRational::zero);
                *e += c * BigRational::from_integer(BigInt::from(v));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    /// Converts to the irreducible basis; fails if a coefficient is not an
    /// integer or does not fit in 64 bits.
    pub fn to_irr(&self) -> Result<IrrDecomposition> {
        let mut out = IrrDecomposition::zero(self.degree);
        for (lambda, c) in self.schur_coefficients() {
            if !c.is_integer() {
                return Err(Error::NonIntegerResult(format!(
                    "coefficient of s{lambda} is {c}"
                )));
            }
            let v = c
                .to_integer()
                .to_i64()
                .ok_or(Error::Overflow("PowerSumPoly::to_irr"))?;
            out.add_term(lambda, v)?;
        }
        Ok(out)
    }

    /// The plethysm `self ∘ g`.
    pub fn plethysm(&self, g: &Self) -> Self {
        let mut adams: FxHashMap<usize, Self> = FxHashMap::default();
        let mut out = Self::zero(self.degree * g.degree);
        for (rho, c) in self.iter() {
            let mut term = Self::power_sum(Partition::empty());
            for &k in rho.parts() {
                let a = adams
                    .entry(k as usize)
                    .or_insert_with(|| g.adams(k as usize));
                term = term.mul(a);
            }
            out = out.add(&term.scale(c));
        }
        out
    }
}

fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::ScaleExceeded { what, value, bound });
    }
    Ok(())
}

/// Schur expansion of `s_λ ∘ s_ν` with the default scale bound.
pub fn plethysm_oracle(lambda: &Partition, nu: &Partition) -> Result<IrrDecomposition> {
    plethysm_oracle_bounded(lambda, nu, DEFAULT_PLETHYSM_BOUND)
}

/// Schur expansion of `s_λ ∘ s_ν`, refusing if `|λ|·|ν| > bound`.
pub fn plethysm_oracle_bounded(
    lambda: &Partition,
    nu: &Partition,
    bound: usize,
) -> Result<IrrDecomposition> {
    check_bound("|λ|·|ν|", lambda.size() * nu.size(), bound)?;
    let key = (lambda.clone(), nu.clone());
    if let Some(v) = PLETHYSM_CACHE.read().get(&key) {
        return Ok(v.clone());
    }
    let v = PowerSumPoly::schur(lambda)
        .plethysm(&PowerSumPoly::schur(nu))
        .to_irr()?;
    PLETHYSM_CACHE.write().insert(key, v.clone());
    Ok(v)
}

static PLETHYSM_CACHE: LazyLock<RwLock<FxHashMap<(Partition, Partition), IrrDecomposition>>> =
    LazyLock::new(Default::default);

/// `ρ^{α/β}_m`, the character of `s_{α/β} ∘ h_m`, with the default bound.
pub fn rho(shape: &SkewShape, m: usize) -> Result<IrrDecomposition> {
    rho_bounded(shape, m, DEFAULT_RHO_BOUND)
}

/// `ρ^{α/β}_m`, refusing if `m·|α/β| > bound`.
pub fn rho_bounded(shape: &SkewShape, m: usize, bound: usize) -> Result<IrrDecomposition> {
    check_bound("m·|shape|", m * shape.size(), bound)?;
    let row = Partition::row(m);
    let mut out = IrrDecomposition::zero(m * shape.size());
    for (gamma, c) in lr::skew_expand(shape.outer(), shape.inner()).iter() {
        let part = plethysm_oracle_bounded(gamma, &row, bound)?;
        out = out.add(&part.scale(*c as i64)?)?;
    }
    Ok(out)
}

/// The cycle index of a permutation group: class proportions by cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleIndex {
    pub group_order: BigUint,
    pub coeffs: BTreeMap<Partition, BigRational>,
}

impl CycleIndex {
    /// The trivial group on `n` points.
    fn trivial(n: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::column(n), BigRational::one());
        CycleIndex {
            group_order: BigUint::one(),
            coeffs,
        }
    }

    fn direct_product(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                *coeffs.entry(a.union(b)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        CycleIndex {
            group_order: &self.group_order * &other.group_order,
            coeffs,
        }
    }

    /// `Z(G ≀ S_2) = ½[Z(G)² + Z(G)(p_j → p_{2j})]`.
    fn wreath_square(&self) -> Self {
        let sq = self.direct_product(self);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut coeffs: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (a, c) in &sq.coeffs {
            *coeffs.entry(a.clone()).or_insert_with(BigRational::zero) += c * &half;
        }
        for (a, c) in &self.coeffs {
            let doubled =
                Partition::new(a.parts().iter().map(|&x| 2 * x as usize)).expect("parts fit");
            *coeffs.entry(doubled).or_insert_with(BigRational::zero) += c * &half;
        }
        CycleIndex {
            group_order: &sq.group_order * 2u32,
            coeffs,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.keys().next().map_or(0, Partition::size)
    }

    /// As a symmetric function `Σ_ρ prop(ρ) p_ρ`, whose Schur coefficients
    /// are the multiplicities of `χ^λ` in the permutation character.
    pub fn to_power_sum(&self) -> PowerSumPoly {
        let mut p = PowerSumPoly::zero(self.degree());
        for (r, c) in &self.coeffs {
            p.add_term(r.clone(), c.clone());
        }
        p
    }
}

/// The cycle index of a Sylow 2-subgroup `P_n` of `S_n`.
pub fn cycle_index_sylow2(n: usize) -> CycleIndex {
    if n == 0 {
        return CycleIndex::trivial(0);
    }
    let mut out: Option<CycleIndex> = None;
    let mut block = CycleIndex::trivial(1);
    let mut bits = n;
    while bits > 0 {
        if bits & 1 == 1 {
            out = Some(match out {
                None => block.clone(),
                Some(o) => o.direct_product(&block),
            });
        }
        bits >>= 1;
        if bits > 0 {
            block = block.wreath_square();
        }
    }
    out.expect("n ≥ 1")
}

/// `Z^λ` from the cycle index, with the default bound.
pub fn sylow_branching_oracle(lambda: &Partition) -> Result<u64> {
    sylow_branching_oracle_bounded(lambda, DEFAULT_SYLOW_BOUND)
}

/// `Z^λ = Σ_ρ prop(ρ) χ^λ(ρ)`, refusing if `|λ| > bound`.
pub fn sylow_branching_oracle_bounded(lambda: &Partition, bound: usize) -> Result<u64> {
    let n = lambda.size();
    check_bound("n", n, bound)?;
    let ci = cycle_index_sylow2(n);
    let mut total = BigRational::zero();
    for (rho, c) in &ci.coeffs {
        let chi = character_value(lambda, rho)?;
        total += c * BigRational::from_integer(BigInt::from(chi));
    }
    rational_to_count(&total, lambda)
}

fn rational_to_count(v: &BigRational, lambda: &Partition) -> Result<u64> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::NonIntegerResult(format!("Z{lambda} = {v}")));
    }
    v.to_integer()
        .to_u64()
        .ok_or(Error::Overflow("sylow oracle"))
}

/// `Z^λ` for every `λ ⊢ n`, from the Schur expansion of the cycle index.
pub fn sylow_oracle_table(n: usize, bound: usize) -> Result<BTreeMap<Partition, u64>> {
    check_bound("n", n, bound)?;
    let coeffs = cycle_index_sylow2(n).to_power_sum().schur_coefficients();
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        let v = coeffs
            .get(&lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero);
        out.insert(lambda.clone(), rational_to_count(&v, &lambda)?);
    }
    Ok(out)
}
