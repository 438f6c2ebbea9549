//! The statistics `N_i(μ)` and their cell weights.

use num_rational::Rational64;

use crate::partition::Partition;

/// Levels checked by default, `i = 1..=6`.
pub const DEFAULT_N_LEVELS: usize = 6;

/// `m_i = (4^i + 8) / 6`.
fn m(i: usize) -> i64 {
    (4i64.pow(i as u32) + 8) / 6
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NStats {
    pub mu: Partition,
    /// `m_1, …, m_{i_max}`.
    pub m_seq: Vec<i64>,
    /// `N_0(μ), …, N_{i_max}(μ)`.
    pub n_seq: Vec<Rational64>,
    /// `k(μ) = |μ|/2 - l(μ)`.
    pub k: Rational64,
}

impl NStats {
    /// `N_i(μ)`.
    pub fn n(&self, i: usize) -> Rational64 {
        self.n_seq[i]
    }
}

fn k_of(mu: &Partition) -> Rational64 {
    Rational64::new(mu.size() as i64, 2) - Rational64::from_integer(mu.len() as i64)
}

fn n_rec(mu: &Partition, i: usize) -> Rational64 {
    if mu.is_empty() {
        return Rational64::from_integer(0);
    }
    if i == 0 {
        return Rational64::new(mu.size() as i64, 2);
    }
    n_rec(&mu.tilde_or_empty(), i - 1) * 2 - k_of(mu) * m(i)
}

/// `N_0 = |μ|/2` and `N_i(μ) = 2 N_{i-1}(μ̃) - m_i k(μ)` for `i ≤ i_max`.
pub fn n_stats(mu: &Partition, i_max: usize) -> NStats {
    NStats {
        mu: mu.clone(),
        m_seq: (1..=i_max).map(m).collect(),
        n_seq: (0..=i_max).map(|i| n_rec(mu, i)).collect(),
        k: k_of(mu),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSequence {
    pub i: usize,
    /// `a_i^{(1)}, a_i^{(2)}, …`.
    pub values: Vec<i64>,
    /// `a_i^{(∞)} = 2 - m_i`.
    pub limit: i64,
}

/// The first `len` weights `a_i^{(j)}`: `a_1 = (1, 0, 0, …)`,
/// `a_i^{(1)} = m_i/2`, `a_i^{(j)} = 2a_{i-1}^{(j-1)} - m_i/2`.
pub fn weight_sequence(i: usize, len: usize) -> WeightSequence {
    assert!(i >= 1, "weights start at level 1");
    let mut cur: Vec<i64> = (0..len).map(|j| (j == 0) as i64).collect();
    let mut limit = 0;
    for level in 2..=i {
        let half = m(level) / 2;
        let mut next = vec![half; len];
        for j in 1..len {
            next[j] = 2 * cur[j - 1] - half;
        }
        cur = next;
        limit = 2 * limit - half;
    }
    WeightSequence {
        i,
        values: cur,
        limit,
    }
}

/// `N_i(μ)` for `i ≥ 1` as a weighted cell count: cells of column `j` in
/// rows `≥ j` weigh `a^{(2j-1)}`, cells of row `j` in columns `> j` weigh
/// `a^{(2j)}`.
pub fn n_stats_from_weights(mu: &Partition, i: usize) -> i64 {
    let w = weight_sequence(i, 2 * mu.len().max(mu.first()) + 2);
    let conj = mu.conjugate();
    let mut total = 0;
    for j in 1..=mu.len().min(mu.first()) {
        let col = conj.part(j - 1).saturating_sub(j - 1) as i64;
        let row = mu.part(j - 1).saturating_sub(j) as i64;
        total += col * w.values[2 * j - 2] + row * w.values[2 * j - 1];
    }
    total
}
