//! Full census of a layer: every `Z^μ`, the vanishing criteria that apply,
//! and an audit of those criteria against the exact values.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

use super::certify::{classify_zero, ZeroTag};
use super::stats::DEFAULT_N_LEVELS;
use super::{z_table_with, ZOptions};

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    /// Highest `i` for the `N_i` criterion.
    pub levels: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            jobs: 0,
            cache_dir: None,
            levels: DEFAULT_N_LEVELS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub partition: Partition,
    pub z: u128,
    /// First-match reason for zeros, `None` otherwise.
    pub reason: Option<ZeroTag>,
}

impl CensusRow {
    /// `"<parts comma-joined>",<Z>,<reason-tag-or-empty>`.
    pub fn to_csv(&self) -> String {
        let parts = self
            .partition
            .to_vec()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let tag = self.reason.map(|t| t.name()).unwrap_or_default();
        format!("\"{parts}\",{},{tag}", self.z)
    }
}

/// A partition that some criterion certifies although `Z^μ ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FalseCertificate {
    pub partition: Partition,
    pub z: u128,
    pub tag: ZeroTag,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub total: usize,
    pub zeros: usize,
    pub explained: usize,
    /// First-match classification of the zeros; sums to `explained`.
    pub reason_histogram: BTreeMap<ZeroTag, usize>,
    /// Every criterion counted separately, so rows overlap.
    pub overlap_histogram: BTreeMap<ZeroTag, usize>,
    pub unexplained: Vec<Partition>,
    pub false_certificates: Vec<FalseCertificate>,
    pub runtime: f64,
}

impl CensusReport {
    /// Overlapping count for one criterion.
    pub fn overlap(&self, tag: ZeroTag) -> usize {
        self.overlap_histogram.get(&tag).copied().unwrap_or(0)
    }

    pub fn is_consistent(&self) -> bool {
        self.reason_histogram.values().sum::<usize>() == self.explained
            && self.explained + self.unexplained.len() == self.zeros
    }
}

#[derive(Clone, Debug)]
pub struct CensusRun {
    pub report: CensusReport,
    /// One row per partition in enumeration order.
    pub rows: Vec<CensusRow>,
}

impl CensusRun {
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "partition,z,reason")?;
        for row in &self.rows {
            writeln!(w, "{}", row.to_csv())?;
        }
        Ok(())
    }
}

struct Audit {
    row: CensusRow,
    tags: Vec<ZeroTag>,
}

/// Computes and classifies every `Z^μ`, `μ ⊢ n`. Rows and histograms do
/// not depend on `jobs`.
pub fn census(n: usize, opts: &CensusOptions) -> Result<CensusRun> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?;
    let zopts = ZOptions {
        cache_dir: opts.cache_dir.clone(),
    };
    let table = z_table_with(n, &zopts)?;
    let half = if n.is_multiple_of(2) && n >= 2 {
        Some(z_table_with(n / 2, &zopts)?)
    } else {
        None
    };

    let partitions: Vec<Partition> = enumerate_partitions(n).collect();
    let audits: Vec<Audit> = pool.install(|| {
        partitions
            .into_par_iter()
            .map(|mu| {
                let z = table.get(&mu);
                let tags: Vec<ZeroTag> = classify_zero(&mu, half.as_deref(), opts.levels)
                    .into_iter()
                    .map(|r| r.tag)
                    .collect();
                let reason =
                    (z == 0).then(|| tags.first().copied().unwrap_or(ZeroTag::Unexplained));
                Audit {
                    row: CensusRow {
                        partition: mu,
                        z,
                        reason,
                    },
                    tags,
                }
            })
            .collect()
    });

    let mut report = CensusReport {
        n,
        total: audits.len(),
        zeros: 0,
        explained: 0,
        reason_histogram: BTreeMap::new(),
        overlap_histogram: BTreeMap::new(),
        unexplained: Vec::new(),
        false_certificates: Vec::new(),
        runtime: 0.0,
    };
    let mut rows = Vec::with_capacity(audits.len());
    for Audit { row, tags } in audits {
        if row.z == 0 {
            report.zeros += 1;
            match row.reason {
                Some(ZeroTag::Unexplained) | None => report.unexplained.push(row.partition.clone()),
                Some(tag) => {
                    report.explained += 1;
                    *report.reason_histogram.entry(tag).or_default() += 1;
                }
            }
            for tag in tags {
                *report.overlap_histogram.entry(tag).or_default() += 1;
            }
        } else {
            for tag in tags {
                report.false_certificates.push(FalseCertificate {
                    partition: row.partition.clone(),
                    z: row.z,
                    tag,
                });
            }
        }
        rows.push(row);
    }
    report.runtime = start.elapsed().as_secs_f64();
    Ok(CensusRun { report, rows })
}
