//! Class functions of symmetric groups in the irreducible basis, the
//! power-sum layer, and the brute-force oracles built on it.

mod character;
mod powersum;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lr;
use crate::partition::{enumerate_partitions, Partition, SkewShape};

pub use character::{character_value, dimension, dimension_i128};
pub use powersum::{
    cycle_index_sylow2, plethysm_oracle, plethysm_oracle_bounded, rho, rho_bounded,
    sylow_branching_oracle, sylow_branching_oracle_bounded, sylow_oracle_table, z_rho, CycleIndex,
    PowerSumPoly, DEFAULT_PLETHYSM_BOUND, DEFAULT_RHO_BOUND, DEFAULT_SYLOW_BOUND,
};

/// A virtual character of `S_n` written in the irreducible basis.
///
/// Keys are partitions of `degree`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IrrDecomposition {
    degree: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl IrrDecomposition {
    pub fn zero(degree: usize) -> Self {
        IrrDecomposition {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The irreducible character `χ^λ`.
    pub fn irreducible(lambda: Partition) -> Self {
        let mut d = Self::zero(lambda.size());
        d.coeffs.insert(lambda, 1);
        d
    }

    /// Builds from `(λ, c)` pairs, summing repeated keys.
    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(
        degree: usize,
        terms: I,
    ) -> Result<Self> {
        let mut d = Self::zero(degree);
        for (p, c) in terms {
            d.add_term(p, c)?;
        }
        Ok(d)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `⟨self, χ^λ⟩`.
    pub fn get(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    /// Nonzero terms in lexicographic order of the partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c·χ^λ` in place.
    pub fn add_term(&mut self, lambda: Partition, c: i64) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                found: lambda.size(),
            });
        }
        if c == 0 {
            return Ok(());
        }
        let e = self.coeffs.entry(lambda.clone()).or_insert(0);
        *e = e
            .checked_add(c)
            .ok_or(Error::Overflow("IrrDecomposition::add_term"))?;
        if *e == 0 {
            self.coeffs.remove(&lambda);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        if other.is_zero() {
            return Ok(out);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        for (p, c) in other.iter() {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.degree);
        if k == 0 {
            return Ok(out);
        }
        for (p, c) in self.iter() {
            out.coeffs.insert(
                p.clone(),
                c.checked_mul(k)
                    .ok_or(Error::Overflow("IrrDecomposition::scale"))?,
            );
        }
        Ok(out)
    }

    /// The inner product of class functions.
    pub fn inner(&self, other: &Self) -> Result<i64> {
        let mut total: i64 = 0;
        for (p, c) in self.iter() {
            let d = other.get(p);
            if d != 0 {
                let t = c
                    .checked_mul(d)
                    .ok_or(Error::Overflow("IrrDecomposition::inner"))?;
                total = total
                    .checked_add(t)
                    .ok_or(Error::Overflow("IrrDecomposition::inner"))?;
            }
        }
        Ok(total)
    }

    /// Multiplication by the sign character: `χ^λ ↦ χ^{λ'}`.
    pub fn sign_twist(&self) -> Self {
        IrrDecomposition {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, &c)| (p.conjugate(), c))
                .collect(),
        }
    }

    /// Smallest coefficient over all irreducibles of `S_degree`
    /// (so `0` whenever some irreducible is absent).
    pub fn min_coefficient(&self) -> i64 {
        let absent = self.coeffs.len() < enumerate_partitions(self.degree).count();
        let m = self.coeffs.values().copied().min().unwrap_or(0);
        if absent {
            m.min(0)
        } else {
            m
        }
    }

    /// True if every coefficient is nonnegative.
    pub fn is_character(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// The value at the identity, `Σ c_λ f^λ`.
    pub fn degree_at_identity(&self) -> i128 {
        self.iter()
            .map(|(p, c)| c as i128 * dimension_i128(p))
            .sum()
    }
}

impl fmt::Debug for IrrDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}{{", self.degree)?;
        for (i, (p, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·χ{p}")?;
        }
        write!(f, "}}")
    }
}

/// The induction product `φ ⊠ θ = (φ × θ)↑`.
pub fn boxtimes(phi: &IrrDecomposition, theta: &IrrDecomposition) -> Result<IrrDecomposition> {
    let mut out = IrrDecomposition::zero(phi.degree + theta.degree);
    for (a, ca) in phi.iter() {
        for (b, cb) in theta.iter() {
            let w = ca.checked_mul(cb).ok_or(Error::Overflow("boxtimes"))?;
            for (lambda, c) in lr::product_expand(a, b, None) {
                let t = w.checked_mul(c as i64).ok_or(Error::Overflow("boxtimes"))?;
                out.add_term(lambda, t)?;
            }
        }
    }
    Ok(out)
}

/// `φ / χ^λ = Σ_μ ⟨φ,χ^μ⟩ χ^{μ/λ}`, skew characters expanded by LR.
pub fn divide(phi: &IrrDecomposition, lambda: &Partition) -> Result<IrrDecomposition> {
    if lambda.size() > phi.degree {
        return Err(Error::PreconditionViolated(format!(
            "cannot divide a character of degree {} by χ{}",
            phi.degree, lambda
        )));
    }
    let mut out = IrrDecomposition::zero(phi.degree - lambda.size());
    for (mu, c) in phi.iter() {
        if !lambda.is_contained_in(mu) {
            continue;
        }
        for (nu, k) in lr::skew_expand(mu, lambda).iter() {
            let t = c.checked_mul(*k as i64).ok_or(Error::Overflow("divide"))?;
            out.add_term(nu.clone(), t)?;
        }
    }
    Ok(out)
}

/// The skew character `χ^{α/β}` in the irreducible basis.
pub fn skew_character(shape: &SkewShape) -> IrrDecomposition {
    let mut out = IrrDecomposition::zero(shape.size());
    for (nu, k) in lr::skew_expand(shape.outer(), shape.inner()).iter() {
        out.add_term(nu.clone(), *k as i64)
            .expect("skew character fits i64");
    }
    out
}

/// `ζ^λ = Σ_γ K_{γ,λ} χ^γ`, the permutation character on `M^λ`.
pub fn permutation_character(lambda: &Partition) -> IrrDecomposition {
    let n = lambda.size();
    let mut out = IrrDecomposition::zero(n);
    for gamma in enumerate_partitions(n) {
        if gamma.dominates(lambda) {
            let k = lr::kostka(&gamma, lambda).expect("sizes agree");
            out.add_term(gamma, k as i64)
                .expect("Kostka numbers fit i64");
        }
    }
    out
}
