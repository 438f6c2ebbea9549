//! Sylow branching coefficients `Z^λ = ⟨χ^λ↓_{P_n}, 1⟩` at `p = 2`.
//!
//! Tables are built in layers. For `n = 2m` a power of two,
//! `P_n = P_2 ≀ P_m` gives `Σ_μ Z^μ s_μ = (Σ_γ Z^γ s_γ)[h_2]`, evaluated by
//! [`pleth2_pairing`](crate::plethysm::pleth2_pairing). Other sizes factor
//! through the binary expansion `P_n = P_{2^{n_1}} × ⋯ × P_{2^{n_k}}`.

mod cache;
mod census;
mod certify;
mod checks;
mod closed;
mod stats;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::{Arc, LazyLock};

use parking_lot::Mutex;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::lr::product_expand;
use crate::partition::{enumerate_partitions, Partition};
use crate::plethysm::{pleth2_pairing_rows, SchurVec};

pub use cache::{cache_entries, clear_cache_dir, CacheEntry, CACHE_ENV, CACHE_VERSION};
pub use census::{census, CensusOptions, CensusReport, CensusRow, CensusRun, FalseCertificate};
pub use certify::{
    certify_zero, certify_zero_with, classify_zero, InsideCase, ZeroReason, ZeroTag,
};
pub use checks::{
    check_box_geq3, check_conjecture_2c, check_geq3_closure, check_rectangle_containment,
    square_multiplicities, wreath_square_multiplicities, Conjecture2cReport, Geq3Report,
    RectangleReport, WreathSquareSummary,
};
pub use closed::{binomial, z_closed_hook, z_closed_near_hook, z_closed_two_column};
pub use stats::{
    n_stats, n_stats_from_weights, weight_sequence, NStats, WeightSequence, DEFAULT_N_LEVELS,
};

/// `Z^λ` for every `λ ⊢ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZTable {
    n: usize,
    values: BTreeMap<Partition, u128>,
    algo: &'static str,
}

impl ZTable {
    pub(crate) fn from_values(
        n: usize,
        values: BTreeMap<Partition, u128>,
        algo: &'static str,
    ) -> Result<Self> {
        let table = ZTable { n, values, algo };
        let expected = enumerate_partitions(n).count();
        if table.values.len() != expected || table.values.keys().any(|p| p.size() != n) {
            return Err(Error::PreconditionViolated(format!(
                "incomplete Z table for n = {n}"
            )));
        }
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// How the table was produced: `base`, `pairing` or `binary`.
    pub fn algo(&self) -> &'static str {
        self.algo
    }

    /// `Z^λ`; zero for partitions of other sizes.
    pub fn get(&self, lambda: &Partition) -> u128 {
        self.values.get(lambda).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entries in enumeration (reverse-lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u128)> + '_ {
        self.values.iter().rev().map(|(p, &z)| (p, z))
    }

    pub fn zero_count(&self) -> usize {
        self.values.values().filter(|&&z| z == 0).count()
    }

    /// `π_n = Σ Z^λ s_λ`.
    pub fn to_schur_vec(&self) -> SchurVec {
        self.values
            .iter()
            .filter(|(_, &z)| z != 0)
            .map(|(p, &z)| (p.clone(), z as i128))
            .collect()
    }
}

/// Where to find and store table files.
#[derive(Clone, Debug, Default)]
pub struct ZOptions {
    pub cache_dir: Option<PathBuf>,
}

impl ZOptions {
    /// Reads the cache directory from [`CACHE_ENV`].
    pub fn from_env() -> Self {
        ZOptions {
            cache_dir: std::env::var_os(CACHE_ENV).map(PathBuf::from),
        }
    }
}

static TABLES: LazyLock<Mutex<FxHashMap<usize, Arc<ZTable>>>> = LazyLock::new(Default::default);

/// The algorithm tag used for size `n`.
pub fn algo_for(n: usize) -> &'static str {
    if n <= 1 {
        "base"
    } else if n.is_power_of_two() {
        "pairing"
    } else {
        "binary"
    }
}

/// `Z^λ` for all `λ ⊢ n`, cached on disk under `PLETH_CACHE_DIR` when set.
pub fn z_table(n: usize) -> Result<Arc<ZTable>> {
    z_table_with(n, &ZOptions::from_env())
}

/// As [`z_table`] with an explicit cache location.
pub fn z_table_with(n: usize, opts: &ZOptions) -> Result<Arc<ZTable>> {
    if n == 0 {
        return Err(Error::PreconditionViolated("z_table needs n ≥ 1".into()));
    }
    let held = TABLES.lock().get(&n).cloned();
    if let Some(t) = held {
        if let Some(dir) = &opts.cache_dir {
            if !cache::exists(dir, n) {
                cache::store(dir, &t)?;
            }
        }
        return Ok(t);
    }
    if let Some(dir) = &opts.cache_dir {
        if let Some(t) = cache::load(dir, n, algo_for(n))? {
            let t = Arc::new(t);
            TABLES.lock().insert(n, t.clone());
            return Ok(t);
        }
    }
    let table = Arc::new(compute(n, opts)?);
    if let Some(dir) = &opts.cache_dir {
        cache::store(dir, &table)?;
    }
    TABLES.lock().insert(n, table.clone());
    Ok(table)
}

/// Forgets the in-memory tables (disk caches are untouched).
pub fn clear_memory_tables() {
    TABLES.lock().clear();
}

fn to_table(n: usize, v: SchurVec, algo: &'static str) -> Result<ZTable> {
    let mut values = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        let z = v.get(&lambda).copied().unwrap_or(0);
        let z = u128::try_from(z).map_err(|_| Error::NegativeResult {
            value: z.clamp(i64::MIN as i128, 0) as i64,
            context: format!("Z{lambda}"),
        })?;
        values.insert(lambda, z);
    }
    ZTable::from_values(n, values, algo)
}

fn compute(n: usize, opts: &ZOptions) -> Result<ZTable> {
    let algo = algo_for(n);
    let v = z_vector_rows(n, n, opts)?;
    to_table(n, v, algo)
}

/// `Σ Z^λ s_λ` over `λ ⊢ n` with at most `rows` rows. Uses full tables of
/// the smaller layers.
pub fn z_vector_rows(n: usize, rows: usize, opts: &ZOptions) -> Result<SchurVec> {
    if n == 1 {
        return Ok([(Partition::row(1), 1)].into_iter().collect());
    }
    if n.is_power_of_two() {
        let half = z_table_with(n / 2, opts)?;
        return pleth2_pairing_rows(&half.to_schur_vec(), rows);
    }
    let mut acc: Option<SchurVec> = None;
    for bit in (0..usize::BITS).rev().filter(|b| n >> b & 1 == 1) {
        let block = z_table_with(1 << bit, opts)?.to_schur_vec();
        acc = Some(match acc {
            None => block.into_iter().filter(|(p, _)| p.len() <= rows).collect(),
            Some(a) => multiply_rows(&a, &block, rows)?,
        });
    }
    Ok(acc.expect("n ≥ 1"))
}

fn multiply_rows(a: &SchurVec, b: &SchurVec, rows: usize) -> Result<SchurVec> {
    let mut out: FxHashMap<Partition, i128> = FxHashMap::default();
    for (p, x) in a {
        for (q, y) in b {
            if q.len() > rows {
                continue;
            }
            let w = x.checked_mul(*y).ok_or(Error::Overflow("Z product"))?;
            for (nu, c) in product_expand(p, q, Some(rows)) {
                let e = out.entry(nu).or_insert(0);
                *e = w
                    .checked_mul(c as i128)
                    .and_then(|t| e.checked_add(t))
                    .ok_or(Error::Overflow("Z product"))?;
            }
        }
    }
    Ok(out.into_iter().filter(|(_, c)| *c != 0).collect())
}

/// The table for `n` from the binary expansion alone (never the pairing
/// path at `n` itself). Meant for cross-checks at moderate `n`.
pub fn z_table_binary(n: usize, opts: &ZOptions) -> Result<ZTable> {
    if n == 0 {
        return Err(Error::PreconditionViolated("z_table needs n ≥ 1".into()));
    }
    let mut acc: SchurVec = [(Partition::empty(), 1)].into_iter().collect();
    for bit in (0..usize::BITS).rev().filter(|b| n >> b & 1 == 1) {
        let block = z_table_with(1 << bit, opts)?.to_schur_vec();
        acc = multiply_rows(&acc, &block, n)?;
    }
    to_table(n, acc, "binary")
}

/// The table for even `n` from the pairing with `z_table(n / 2)`, whatever
/// `n` is.
pub fn z_table_pairing(n: usize, opts: &ZOptions) -> Result<ZTable> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::PreconditionViolated(format!(
            "pairing path needs even n, got {n}"
        )));
    }
    let half = z_table_with(n / 2, opts)?;
    to_table(n, pleth2_pairing_rows(&half.to_schur_vec(), n)?, "pairing")
}
