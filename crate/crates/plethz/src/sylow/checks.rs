//! Finite checks of the positivity machinery for `Z^λ`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lr::star_product_rows;
use crate::partition::{box_partitions, enumerate_partitions, Partition};

use super::{z_table_with, z_vector_rows, ZOptions, ZTable};

/// Multiplicities of the constituents `ψ` of `1↑^{S_n ≀ S_2}` from the
/// Sylow subgroup `P_n ≀ P_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathSquareSummary {
    pub n: usize,
    /// `(λ_i, λ_j, Z^i Z^j)` for `λ_i > λ_j` with nonzero product.
    pub mixed: Vec<(Partition, Partition, u128)>,
    /// `(λ, ½(Z² + Z), ½(Z² - Z))` for `Z^λ ≠ 0`.
    pub square: Vec<(Partition, u128, u128)>,
}

impl WreathSquareSummary {
    /// Sum of all multiplicities.
    pub fn total(&self) -> u128 {
        self.mixed.iter().map(|m| m.2).sum::<u128>()
            + self.square.iter().map(|s| s.1 + s.2).sum::<u128>()
    }
}

/// `(½(z² + z), ½(z² - z))`.
pub fn square_multiplicities(z: u128) -> (u128, u128) {
    ((z * z + z) / 2, (z * z - z) / 2)
}

pub fn wreath_square_multiplicities(zt: &ZTable) -> WreathSquareSummary {
    let support: Vec<(&Partition, u128)> = zt.iter().filter(|(_, z)| *z != 0).collect();
    let mut mixed = Vec::new();
    let mut square = Vec::new();
    for (i, &(a, za)) in support.iter().enumerate() {
        let (plus, minus) = square_multiplicities(za);
        square.push((a.clone(), plus, minus));
        for &(b, zb) in &support[i + 1..] {
            mixed.push((a.clone(), b.clone(), za * zb));
        }
    }
    WreathSquareSummary {
        n: zt.n(),
        mixed,
        square,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geq3Report {
    pub n: usize,
    /// `|{λ ⊢ n : Z^λ ≥ 3}|`.
    pub set_size: usize,
    pub product_size: usize,
    /// Elements of the `⋆`-square with `Z < 3` at `2n`.
    pub violations: Vec<Partition>,
}

impl Geq3Report {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `A ⋆ A ⊆ {μ ⊢ 2n : Z^μ ≥ 3}` for `A = {λ ⊢ n : Z^λ ≥ 3}`.
///
/// The argument goes through `P_{2n} = P_n ≀ P_2`, so it needs `n` a power
/// of two. Other sizes can fail: at `n = 7`, `(5,2) ⋆ (5,2) ∋ (7,7)` and
/// `Z^{(7,7)} = 2`.
pub fn check_geq3_closure(n: usize) -> Result<Geq3Report> {
    let opts = ZOptions::from_env();
    let small = z_table_with(n, &opts)?;
    let big = z_table_with(2 * n, &opts)?;
    let a: BTreeSet<Partition> = small
        .iter()
        .filter(|(_, z)| *z >= 3)
        .map(|(p, _)| p.clone())
        .collect();
    let product = if a.is_empty() {
        BTreeSet::new()
    } else {
        star_product_rows(&a, &a, 2 * n)?
    };
    let violations = product
        .iter()
        .filter(|mu| big.get(mu) < 3)
        .cloned()
        .collect();
    Ok(Geq3Report {
        n,
        set_size: a.len(),
        product_size: product.len(),
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleReport {
    pub n: usize,
    pub k: usize,
    /// `|B_{(k+1)n,k}(2kn)|`.
    pub box_size: usize,
    /// Box partitions missing from `{(2n-2,2)}^{⋆k}`.
    pub missing: Vec<Partition>,
}

impl RectangleReport {
    pub fn holds(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Checks `{(2n-2,2)}^{⋆k} ⊇ B_{(k+1)n,k}(2kn)`, keeping only products
/// with at most `k` rows.
pub fn check_rectangle_containment(n: usize, k: usize) -> Result<RectangleReport> {
    if n < 2 || k == 0 {
        return Err(Error::PreconditionViolated(format!(
            "rectangle check needs n ≥ 2, k ≥ 1; got {n}, {k}"
        )));
    }
    let seed: BTreeSet<Partition> = [Partition::of(&[2 * n - 2, 2])].into_iter().collect();
    let mut power = seed.clone();
    for _ in 1..k {
        power = star_product_rows(&power, &seed, k)?;
    }
    let boxed = box_partitions(2 * k * n, (k + 1) * n, k);
    let missing = boxed
        .iter()
        .filter(|mu| !power.contains(*mu))
        .cloned()
        .collect();
    Ok(RectangleReport {
        n,
        k,
        box_size: boxed.len(),
        missing,
    })
}

/// `B_{8(k+1),k}(16k)` members with `Z < 3`, from the row-truncated layer.
pub fn check_box_geq3(k: usize) -> Result<Vec<(Partition, u128)>> {
    let v = z_vector_rows(16 * k, k, &ZOptions::from_env())?;
    Ok(box_partitions(16 * k, 8 * (k + 1), k)
        .into_iter()
        .map(|mu| {
            let z = v.get(&mu).copied().unwrap_or(0).max(0) as u128;
            (mu, z)
        })
        .filter(|(_, z)| *z < 3)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjecture2cReport {
    pub k: u32,
    /// `λ ⊢ 2^k` with smallest part `≥ 2` and `Z^λ = 0`.
    pub observed: Vec<Partition>,
    pub predicted: Vec<Partition>,
}

impl Conjecture2cReport {
    pub fn matches(&self) -> bool {
        self.observed == self.predicted
    }
}

/// The exceptions predicted at `2^k`, sorted.
fn predicted_2c(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if k == 3 {
        out.push(Partition::of(&[5, 3]));
    }
    if k >= 3 {
        let mut v = vec![3, 3];
        v.extend(std::iter::repeat_n(2, (1usize << (k - 1)) - 3));
        out.push(Partition::of(&v));
    }
    out.sort();
    out
}

/// Lists the exceptions at `2^k` next to the predicted ones.
pub fn check_conjecture_2c(k: u32) -> Result<Conjecture2cReport> {
    if k > 6 {
        return Err(Error::ScaleExceeded {
            what: "2^k",
            value: 1usize << k.min(20),
            bound: 64,
        });
    }
    let n = 1usize << k;
    let table = z_table_with(n, &ZOptions::from_env())?;
    let mut observed: Vec<Partition> = enumerate_partitions(n)
        .filter(|l| l.last() >= 2 && table.get(l) == 0)
        .collect();
    observed.sort();
    Ok(Conjecture2cReport {
        k,
        observed,
        predicted: predicted_2c(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_formulas() {
        assert_eq!(square_multiplicities(3), (6, 3));
        assert_eq!(square_multiplicities(0), (0, 0));
        let zt = z_table_with(8, &ZOptions::default()).unwrap();
        let s = wreath_square_multiplicities(&zt);
        let sum: u128 = zt.iter().map(|(_, z)| z).sum();
        let sq: u128 = zt.iter().map(|(_, z)| z * z).sum();
        assert_eq!(2 * s.total(), sum * sum + sq);
    }

    #[test]
    fn closure_small() {
        let r = check_geq3_closure(8).unwrap();
        assert!(r.holds(), "{:?}", r.violations);
    }

    #[test]
    fn rectangle_base_case() {
        let r = check_rectangle_containment(4, 2).unwrap();
        assert!(r.box_size > 0);
        assert!(r.holds(), "{:?}", r.missing);
    }

    #[test]
    fn conjecture_2c_small() {
        let r = check_conjecture_2c(2).unwrap();
        assert!(r.observed.is_empty() && r.matches());
        let r = check_conjecture_2c(3).unwrap();
        assert!(r.observed.contains(&Partition::of(&[5, 3])));
    }
}
