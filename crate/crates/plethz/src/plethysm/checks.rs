//! Symmetries of plethysm coefficients and finite checks of known results
//! and conjectures.

use crate::charalg::{boxtimes, divide, rho, IrrDecomposition};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition, SkewShape};

use super::{m2::pleth_m2, pleth_recursive};

/// `(ν', λ*, μ')` with `λ* = λ` for `|μ|` even and `λ'` otherwise, so that
/// `a^ν_{λ,μ} = a^{ν'}_{λ*,μ'}`.
pub fn conj_symmetry(
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
) -> (Partition, Partition, Partition) {
    let star = if mu.size().is_multiple_of(2) {
        lambda.clone()
    } else {
        lambda.conjugate()
    };
    (nu.conjugate(), star, mu.conjugate())
}

/// Result of complementing a plethysm query inside rectangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BorOutcome {
    /// `a^ν_{λ,μ}` equals this coefficient `a^{ν̂}_{λ,μ̂}`.
    Equivalent {
        nu: Partition,
        lambda: Partition,
        mu: Partition,
    },
    /// The coefficient is zero.
    Zero,
}

/// For `μ ⊆ (w^h)` and `l(ν) ≤ h`: `a^ν_{λ,μ} = a^{□_{w|λ|,h}(ν)}_{λ,□_{w,h}(μ)}`
/// when `ν ⊆ ((w|λ|)^h)`, and `0` otherwise.
pub fn bor_complement(
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    w: usize,
    h: usize,
) -> Result<BorOutcome> {
    if !mu.fits_in(w, h) || nu.len() > h {
        return Err(Error::PreconditionViolated(format!(
            "need {mu} ⊆ ({w}^{h}) and l({nu}) ≤ {h}"
        )));
    }
    let big_w = w * lambda.size();
    if !nu.fits_in(big_w, h) {
        return Ok(BorOutcome::Zero);
    }
    Ok(BorOutcome::Equivalent {
        nu: nu.rect_complement(big_w, h)?,
        lambda: lambda.clone(),
        mu: mu.rect_complement(w, h)?,
    })
}

/// Which of the two Thrall plethysms to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThrallDirection {
    /// `a^λ_{(n),(2)}`: `s_(n) ∘ s_(2)`.
    RowOfPairs,
    /// `a^λ_{(2),(n)}`: `s_(2) ∘ s_(n)`.
    PairOfRows,
}

/// Closed form of the two Thrall plethysms.
pub fn thrall(lambda: &Partition, which: ThrallDirection) -> u64 {
    let even = lambda.all_parts_even();
    match which {
        ThrallDirection::RowOfPairs => even as u64,
        ThrallDirection::PairOfRows => (even && lambda.len() <= 2) as u64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeBoeckReport {
    pub m: usize,
    pub n: usize,
    /// Partitions examined.
    pub checked: usize,
    /// Those with coefficient 1.
    pub ones: Vec<Partition>,
}

/// The coefficient compared in both de Boeck statements:
/// `a^λ_{(n),(m)}` for `m` even, `a^λ_{(1^n),(m)}` for `m` odd.
fn de_boeck_coefficient(lambda: &Partition, m: usize, n: usize) -> Result<u64> {
    let outer = if m.is_multiple_of(2) {
        Partition::row(n)
    } else {
        Partition::column(n)
    };
    if m == 2 {
        pleth_m2(lambda, &outer)
    } else {
        pleth_recursive(lambda, &outer, m)
    }
}

/// For `λ ⊢ mn` with `l(λ) ≤ n` and `λ_1 = m + 2` the coefficient is 1 when
/// `λ` (padded with zeros to `n` parts) has all parts even for `m` even,
/// all parts odd for `m` odd, and 0 otherwise.
pub fn check_de_boeck_651(m: usize, n: usize) -> Result<DeBoeckReport> {
    let mut report = DeBoeckReport {
        m,
        n,
        checked: 0,
        ones: Vec::new(),
    };
    if m == 0 || n == 0 {
        return Ok(report);
    }
    for lambda in enumerate_partitions(m * n) {
        if lambda.first() != m + 2 || lambda.len() > n {
            continue;
        }
        let expected = if m.is_multiple_of(2) {
            lambda.all_parts_even()
        } else {
            lambda.len() == n && lambda.all_parts_odd()
        } as u64;
        let got = de_boeck_coefficient(&lambda, m, n)?;
        if got != expected {
            return Err(Error::TheoremViolated(format!(
                "(m,n) = ({m},{n}), λ = {lambda}: coefficient {got}, expected {expected}"
            )));
        }
        report.checked += 1;
        if got == 1 {
            report.ones.push(lambda);
        }
    }
    Ok(report)
}

/// The lexicographically smallest `λ ⊢ mn` with positive coefficient and an
/// odd part (`m` even) or an even part (`m` odd); must be
/// `(m+3, m^{n-2}, m-3)`.
pub fn check_de_boeck_652(m: usize, n: usize) -> Result<Partition> {
    if m < 3 || n < 3 {
        return Err(Error::PreconditionViolated(format!(
            "need m, n ≥ 3, got ({m},{n})"
        )));
    }
    let mut expected = vec![m + 3];
    expected.extend(std::iter::repeat_n(m, n - 2));
    expected.push(m - 3);
    let expected = Partition::new(expected)?;
    let mut all: Vec<Partition> = enumerate_partitions(m * n)
        .filter(|l| l.len() <= n)
        .collect();
    all.reverse();
    for lambda in all {
        let parity_ok = if m.is_multiple_of(2) {
            !lambda.all_parts_even()
        } else {
            !lambda.all_parts_odd()
        };
        if !parity_ok {
            continue;
        }
        if de_boeck_coefficient(&lambda, m, n)? > 0 {
            if lambda != expected {
                return Err(Error::TheoremViolated(format!(
                    "(m,n) = ({m},{n}): smallest is {lambda}, expected {expected}"
                )));
            }
            return Ok(lambda);
        }
    }
    Err(Error::TheoremViolated(format!(
        "(m,n) = ({m},{n}): no partition found"
    )))
}

/// Length of the tail on which a stable sequence must be constant.
pub const STABILITY_WINDOW: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub values: Vec<u64>,
    pub stable_value: u64,
    /// First `j` from which the sequence is constant.
    pub stabilized_at: usize,
}

/// `a^{μ^j}_{λ^j,(2)}` for `j = 0..=j_max`, `λ^j = λ ⊔ (1^j)`,
/// `μ^j = (μ + (j)) ⊔ (1^j)`.
pub fn check_stability_prop17(
    lambda: &Partition,
    mu: &Partition,
    j_max: usize,
) -> Result<StabilityReport> {
    let mut values = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let lj = lambda.union(&Partition::column(j));
        let mj = mu.add(&Partition::row(j)).union(&Partition::column(j));
        let v = if mj.size() == 2 * lj.size() {
            pleth_m2(&mj, &lj)?
        } else {
            0
        };
        values.push(v);
    }
    let last = *values.last().expect("j_max + 1 values");
    let mut start = values.len();
    while start > 0 && values[start - 1] == last {
        start -= 1;
    }
    if values.len() - start < STABILITY_WINDOW {
        return Err(Error::NotStabilized { window: j_max });
    }
    Ok(StabilityReport {
        values,
        stable_value: last,
        stabilized_at: start,
    })
}

/// `count` pairs `(λ, μ)` with `λ ⊢ n`, `μ ⊢ 2n`, `2 ≤ n ≤ 4`, spread
/// evenly over enumeration order.
pub fn stability_sample(count: usize) -> Vec<(Partition, Partition)> {
    let all: Vec<(Partition, Partition)> = (2..=4)
        .flat_map(|n| {
            enumerate_partitions(n)
                .flat_map(move |l| enumerate_partitions(2 * n).map(move |m| (l.clone(), m)))
        })
        .collect();
    let count = count.min(all.len());
    (0..count)
        .map(|i| all[i * all.len() / count].clone())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjecture18Report {
    pub a: usize,
    pub b: usize,
    /// `ρ^{(a)}_{b-1} ⊠ χ^{(a-1)} - ρ^{(a-1)}_b ⊠ χ^{(b-1)}`.
    pub first: IrrDecomposition,
    /// `(ρ^{(b)}_a - ρ^{(a)}_b) / χ^{(1)}`.
    pub second: IrrDecomposition,
    pub min_first: i64,
    pub min_second: i64,
}

impl Conjecture18Report {
    pub fn holds(&self) -> bool {
        self.min_first >= 0 && self.min_second >= 0
    }
}

/// Both virtual characters of the conjecture for one pair `a ≤ b`.
pub fn check_conjecture18(a: usize, b: usize) -> Result<Conjecture18Report> {
    if a == 0 || a > b {
        return Err(Error::PreconditionViolated(format!(
            "need 1 ≤ a ≤ b, got ({a},{b})"
        )));
    }
    let row = |k: usize| SkewShape::straight(Partition::row(k));
    let irr_row = |k: usize| IrrDecomposition::irreducible(Partition::row(k));
    let first = boxtimes(&rho(&row(a), b - 1)?, &irr_row(a - 1))?
        .sub(&boxtimes(&rho(&row(a - 1), b)?, &irr_row(b - 1))?)?;
    let second = divide(
        &rho(&row(b), a)?.sub(&rho(&row(a), b)?)?,
        &Partition::row(1),
    )?;
    Ok(Conjecture18Report {
        a,
        b,
        min_first: first.min_coefficient(),
        min_second: second.min_coefficient(),
        first,
        second,
    })
}
