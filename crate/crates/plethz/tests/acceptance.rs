//! Acceptance run. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Criterion 5 (the full `n = 64` census) runs only when `PLETHZ_ACCEPT_64`
//! is set; it is reported as `SKIP` otherwise.

#![allow(clippy::absurd_extreme_comparisons)]

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use plethz::charalg::{
    boxtimes, character_value, cycle_index_sylow2, divide, plethysm_oracle, rho, skew_character,
    sylow_oracle_table, IrrDecomposition,
};
use plethz::lr::lr_coefficient;
use plethz::partition::{binary_digit_count, enumerate_partitions};
use plethz::plethysm::{
    bor_complement, check_conjecture18, check_de_boeck_651, check_de_boeck_652,
    check_stability_prop17, deflate_by_recursion, pleth_recursive, stability_sample, BorOutcome,
};
use plethz::sylow::{
    binomial, census, check_box_geq3, check_conjecture_2c, check_geq3_closure,
    check_rectangle_containment, clear_memory_tables, z_closed_hook, z_closed_near_hook,
    z_closed_two_column, z_table_with, CensusOptions, CensusReport, InsideCase, ZOptions, ZeroTag,
};
use plethz::{Partition, SkewShape};

/// Every comparison below is between exact integers.
const MAX_MISMATCHES: usize = 0;

type Check = Result<String, String>;
type ZOracle = Box<dyn Fn(&Partition) -> Result<u128, String>>;
type Snapshot = (Vec<u8>, BTreeMap<String, Vec<u8>>);

fn p(v: &[usize]) -> Partition {
    Partition::of(v)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Parses `(23,2,2,1^5)` style notation.
fn parse_exp(s: &str) -> Partition {
    let mut parts = Vec::new();
    for tok in s.trim_matches(|c| c == '(' || c == ')').split(',') {
        match tok.split_once('^') {
            Some((a, k)) => parts.extend(std::iter::repeat_n(
                a.parse::<usize>().unwrap(),
                k.parse().unwrap(),
            )),
            None => parts.push(tok.parse().unwrap()),
        }
    }
    Partition::of(&parts)
}

fn to_u128(v: &BigRational) -> Option<u128> {
    if v.is_integer() {
        v.to_integer().to_u128()
    } else {
        None
    }
}

fn cycle_terms(n: usize) -> Vec<(Vec<usize>, BigRational)> {
    cycle_index_sylow2(n)
        .to_power_sum()
        .iter()
        .map(|(r, c)| (r.to_vec(), c.clone()))
        .collect()
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Check {
    let mut compared = 0usize;
    let mut mismatches = Vec::new();
    for n in 1..=12 {
        for m in 1..=12 / n {
            for lambda in enumerate_partitions(n) {
                let full = plethysm_oracle(&lambda, &Partition::row(m)).map_err(err)?;
                for mu in enumerate_partitions(m * n) {
                    let got = pleth_recursive(&mu, &lambda, m).map_err(err)? as i64;
                    compared += 1;
                    if got != full.get(&mu) {
                        mismatches.push(format!("a^{mu}_({lambda},({m}))"));
                    }
                }
            }
        }
    }
    ensure(mismatches.len() <= MAX_MISMATCHES, || {
        format!("mismatches: {mismatches:?}")
    })?;
    Ok(format!(
        "{compared} coefficients with mn ≤ 12 agree with the power-sum oracle"
    ))
}

fn criterion_2() -> Check {
    let opts = ZOptions::default();
    let mut compared = 0usize;
    let mut mismatches = Vec::new();
    for n in (1..=16).chain([32]) {
        let t = z_table_with(n, &opts).map_err(err)?;
        let oracle = sylow_oracle_table(n, 32).map_err(err)?;
        ensure(t.len() == oracle.len(), || {
            format!("n = {n}: table sizes differ")
        })?;
        for (lambda, z) in t.iter() {
            compared += 1;
            if z != oracle[lambda] as u128 {
                mismatches.push(format!("Z{lambda}"));
            }
        }
    }
    ensure(mismatches.len() <= MAX_MISMATCHES, || {
        format!("mismatches: {mismatches:?}")
    })?;
    Ok(format!(
        "{compared} values for n ≤ 16 and n = 32 agree with the cycle index"
    ))
}

fn criterion_3(c32: &CensusReport) -> Check {
    let opts = ZOptions::default();
    let mut got = Vec::new();
    for n in [4, 8, 16] {
        let t = z_table_with(n, &opts).map_err(err)?;
        got.push((n, t.zero_count(), t.len()));
    }
    got.push((32, c32.zeros, c32.total));
    let expected = [(4, 3, 5), (8, 15, 22), (16, 77, 231), (32, 879, 8349)];
    ensure(got == expected, || format!("got {got:?}"))?;
    Ok(format!(
        "3/5, 15/22, 77/231, 879/8349; census n=32 in {:.1}s",
        c32.runtime
    ))
}

const UNEXPLAINED_32: [&str; 11] = [
    "(23,2,2,1^5)",
    "(22,3,1^7)",
    "(22,2,2,1^6)",
    "(20,4,1^8)",
    "(17,4,2,1^9)",
    "(17,3,2,2,1^8)",
    "(13,4,2^3,1^9)",
    "(13,3^3,1^10)",
    "(11,2^8,1^5)",
    "(10,9,1^13)",
    "(8,2^10,1^4)",
];

fn criterion_4(c: &CensusReport) -> Check {
    let expected = [
        (ZeroTag::Tall, 684),
        (ZeroTag::TwoColumn, 16),
        (ZeroTag::Hook, 31),
        (ZeroTag::NearHook, 25),
        (ZeroTag::LengthHalf, 77),
        (ZeroTag::ThreeColumn, 2),
        (ZeroTag::InsideHalf(InsideCase::LargeK), 7),
        (ZeroTag::InsideHalf(InsideCase::Column), 8),
        (ZeroTag::InsideHalf(InsideCase::Row), 6),
        (ZeroTag::NiCriterion(1), 684),
        (ZeroTag::NiCriterion(2), 640),
        (ZeroTag::NiCriterion(3), 702),
        (ZeroTag::NiCriterion(4), 724),
        (ZeroTag::NiCriterion(5), 734),
    ];
    let wrong: Vec<String> = expected
        .iter()
        .filter(|(t, k)| c.overlap(*t) != *k)
        .map(|(t, k)| format!("{t}: {} ≠ {k}", c.overlap(*t)))
        .collect();
    ensure(wrong.is_empty(), || format!("overlap counts: {wrong:?}"))?;
    ensure(c.explained == 868, || format!("explained {}", c.explained))?;
    ensure(c.false_certificates.is_empty(), || {
        format!("false certificates: {:?}", c.false_certificates)
    })?;
    let listed: Vec<Partition> = UNEXPLAINED_32.iter().map(|s| parse_exp(s)).collect();
    ensure(c.unexplained == listed, || {
        format!("unexplained {:?}", c.unexplained)
    })?;
    Ok("14 overlapping counts, 868 explained, 11 unexplained as listed".into())
}

fn criterion_5() -> Check {
    let opts = CensusOptions {
        cache_dir: std::env::var_os("PLETH_CACHE_DIR").map(Into::into),
        ..Default::default()
    };
    let c = census(64, &opts).map_err(err)?.report;
    ensure(
        (c.total, c.zeros, c.explained) == (1741630, 38531, 38386),
        || {
            format!(
                "total {}, zeros {}, explained {}",
                c.total, c.zeros, c.explained
            )
        },
    )?;
    let expected = [
        (ZeroTag::LengthHalf, 879),
        (ZeroTag::ThreeColumn, 2),
        (ZeroTag::Hook, 63),
        (ZeroTag::NearHook, 56),
        (ZeroTag::InsideHalf(InsideCase::LargeK), 45),
        (ZeroTag::InsideHalf(InsideCase::Column), 16),
        (ZeroTag::InsideHalf(InsideCase::Row), 14),
        (ZeroTag::NiCriterion(1), 35471),
        (ZeroTag::NiCriterion(2), 21751),
        (ZeroTag::NiCriterion(3), 22216),
        (ZeroTag::NiCriterion(4), 22937),
        (ZeroTag::NiCriterion(5), 23513),
        (ZeroTag::NiCriterion(6), 23722),
    ];
    let wrong: Vec<String> = expected
        .iter()
        .filter(|(t, k)| c.overlap(*t) != *k)
        .map(|(t, k)| format!("{t}: {} ≠ {k}", c.overlap(*t)))
        .collect();
    ensure(wrong.is_empty(), || format!("overlap counts: {wrong:?}"))?;
    ensure(c.false_certificates.is_empty(), || {
        "false certificates".into()
    })?;
    Ok(format!(
        "38531/1741630 zeros, 38386 explained, in {:.0}s",
        c.runtime
    ))
}

/// `Σ_t χ^{(n-t,1^t)}(ρ) q^t = Π_i (1 - (-q)^{ρ_i}) / (1 + q)`.
fn hook_characters(rho: &[usize], n: usize) -> Vec<i128> {
    let mut poly = vec![0i128; n + 1];
    poly[0] = 1;
    for &r in rho {
        let s = if r % 2 == 0 { 1 } else { -1 };
        for k in (r..=n).rev() {
            poly[k] -= s * poly[k - r];
        }
    }
    let mut out = vec![0i128; n];
    out[0] = poly[0];
    for k in 1..n {
        out[k] = poly[k] - out[k - 1];
    }
    out
}

/// `χ^{(2^a,1^{n-2a})}(ρ) = sgn(ρ) (e_a - e_{a-1})` with `e_j` the number of
/// `j`-sets that are unions of cycles.
fn two_column_characters(rho: &[usize], n: usize) -> Vec<i128> {
    let mut e = vec![0i128; n + 1];
    e[0] = 1;
    for &r in rho {
        for k in (r..=n).rev() {
            e[k] += e[k - r];
        }
    }
    let sign = if (n - rho.len()).is_multiple_of(2) {
        1
    } else {
        -1
    };
    (0..=n / 2)
        .map(|a| sign * (e[a] - if a > 0 { e[a - 1] } else { 0 }))
        .collect()
}

fn criterion_6() -> Check {
    let mut mismatches = Vec::new();
    let (mut hooks, mut columns) = (0usize, 0usize);
    for n in 1..=64 {
        let terms = cycle_terms(n);
        let mut zh = vec![BigRational::zero(); n];
        let mut zc = vec![BigRational::zero(); n / 2 + 1];
        for (r, c) in &terms {
            for (t, x) in hook_characters(r, n).into_iter().enumerate() {
                zh[t] += c * BigRational::from_integer(BigInt::from(x));
            }
            for (a, x) in two_column_characters(r, n).into_iter().enumerate() {
                zc[a] += c * BigRational::from_integer(BigInt::from(x));
            }
        }
        let k = binary_digit_count(n) as u64;
        for (t, z) in zh.iter().enumerate() {
            let lambda = Partition::hook(n, t);
            let closed = z_closed_hook(&lambda).map_err(err)?;
            hooks += 1;
            if to_u128(z) != Some(closed) || closed != binomial(k - 1, t as u64) {
                mismatches.push(format!("Z{lambda}"));
            }
        }
        for (a, z) in zc.iter().enumerate() {
            let mut v = vec![2; a];
            v.extend(std::iter::repeat_n(1, n - 2 * a));
            let lambda = Partition::of(&v);
            columns += 1;
            if to_u128(z) != Some(z_closed_two_column(&lambda).map_err(err)?) {
                mismatches.push(format!("Z{lambda}"));
            }
        }
    }

    let opts = ZOptions::default();
    let mut near = 0usize;
    for r in 2..=6u32 {
        let n = 1usize << r;
        let oracle: ZOracle = if r <= 5 {
            let t = z_table_with(n, &opts).map_err(err)?;
            Box::new(move |l| Ok(t.get(l)))
        } else {
            let terms = cycle_terms(n);
            Box::new(move |l| {
                let mut s = BigRational::zero();
                for (r, c) in &terms {
                    let chi = character_value(l, &Partition::of(r)).map_err(err)?;
                    s += c * BigRational::from_integer(BigInt::from(chi));
                }
                to_u128(&s).ok_or_else(|| format!("Z{l} not a count"))
            })
        };
        for l in 2..=n - 2 {
            let lambda = Partition::near_hook(n, l).map_err(err)?;
            let expected = binomial(r as u64 - 1, l as u64 - 1);
            near += 1;
            if oracle(&lambda)? != expected || z_closed_near_hook(n, l).map_err(err)? != expected {
                mismatches.push(format!("Z{lambda}"));
            }
        }
    }

    let mut recursion = 0usize;
    for n in 4..=32 {
        let t = z_table_with(n, &opts).map_err(err)?;
        for l in 2..=n - 2 {
            let lambda = Partition::near_hook(n, l).map_err(err)?;
            recursion += 1;
            if z_closed_near_hook(n, l).map_err(err)? != t.get(&lambda) {
                mismatches.push(format!("Z{lambda}"));
            }
        }
    }
    ensure(mismatches.len() <= MAX_MISMATCHES, || {
        format!("mismatches: {mismatches:?}")
    })?;
    Ok(format!(
        "{hooks} hooks and {columns} two-column shapes for n ≤ 64 against the cycle index, \
         {near} near-hooks at 2^r with r ≤ 6, {recursion} near-hooks for n ≤ 32"
    ))
}

fn criterion_7() -> Check {
    for n in 6..=10 {
        let mut v = vec![6];
        v.extend(std::iter::repeat_n(3, n - 2));
        let mu = Partition::of(&v);
        for lambda in enumerate_partitions(n) {
            let c = lambda.conjugate();
            let expected = if c == p(&[n - 1, 1]) {
                2
            } else if [p(&[n]), p(&[n - 2, 2]), p(&[n - 2, 1, 1]), p(&[n - 3, 3])].contains(&c) {
                1
            } else {
                0
            };
            let got = pleth_recursive(&mu, &lambda, 3).map_err(err)?;
            ensure(got == expected, || {
                format!("a^{mu}_({lambda},(3)) = {got}, expected {expected}")
            })?;
        }
    }
    let with_ones = |head: &[usize], ones: usize| {
        let mut v = head.to_vec();
        v.extend(std::iter::repeat_n(1, ones));
        Partition::of(&v)
    };
    for n in 5..=9 {
        for l in 2..=n {
            let expected: Vec<Partition> = if l == n {
                vec![with_ones(&[2], n - 2)]
            } else if l == n - 1 {
                vec![
                    with_ones(&[2], n - 2),
                    with_ones(&[3], n - 3),
                    with_ones(&[2, 2], n - 4),
                ]
            } else if l == 2 {
                vec![p(&[n]), p(&[n - 1, 1]), p(&[n - 2, 2])]
            } else {
                vec![
                    with_ones(&[n - l + 1], l - 1),
                    with_ones(&[n - l + 2], l - 2),
                    with_ones(&[n - l, 2], l - 2),
                    with_ones(&[n - l + 1, 2], l - 3),
                ]
            };
            let expected = IrrDecomposition::from_terms(n, expected.into_iter().map(|q| (q, 1)))
                .map_err(err)?;
            let mu = Partition::near_hook(2 * n, l).map_err(err)?;
            let got = deflate_by_recursion(&mu, n).map_err(err)?.value;
            ensure(got == expected, || format!("deflation of {mu} by {n}"))?;
        }
    }
    Ok("profile of (6,3^{n-2}) for 6 ≤ n ≤ 10, near-hook deflations for 5 ≤ n ≤ 9".into())
}

type OracleCache = HashMap<(Partition, Partition), IrrDecomposition>;

fn cached_oracle<'a>(
    cache: &'a mut OracleCache,
    lambda: &Partition,
    mu: &Partition,
) -> Result<&'a IrrDecomposition, String> {
    let key = (lambda.clone(), mu.clone());
    if !cache.contains_key(&key) {
        let v = plethysm_oracle(lambda, mu).map_err(err)?;
        cache.insert(key.clone(), v);
    }
    Ok(&cache[&key])
}

fn criterion_8() -> Check {
    let mut lifts = 0usize;
    for n in 1..=10 {
        for m in 1..=10 / n {
            for nu in enumerate_partitions(n) {
                for lambda in enumerate_partitions(m * n).filter(|l| l.len() <= n) {
                    let lifted = lambda.add(&Partition::column(n));
                    let a = pleth_recursive(&lambda, &nu, m).map_err(err)?;
                    let b = pleth_recursive(&lifted, &nu.conjugate(), m + 1).map_err(err)?;
                    ensure(a == b, || format!("{lambda} {nu} {m}: {a} ≠ {b}"))?;
                    lifts += 1;
                }
            }
        }
    }

    const ORACLE_DEGREE: usize = 12;
    let mut cache = OracleCache::new();
    let mut complements = 0usize;
    for a in 1..=ORACLE_DEGREE {
        for b in 1..=ORACLE_DEGREE / a {
            for lambda in enumerate_partitions(a) {
                for mu in enumerate_partitions(b) {
                    for h in mu.len()..=b + 2 {
                        for w in mu.first()..=b + 2 {
                            if w * h < b || a * (w * h - b) > ORACLE_DEGREE || w * h - b == 0 {
                                continue;
                            }
                            let full = cached_oracle(&mut cache, &lambda, &mu)?.clone();
                            for nu in enumerate_partitions(a * b).filter(|q| q.len() <= h) {
                                let lhs = full.get(&nu);
                                let rhs =
                                    match bor_complement(&nu, &lambda, &mu, w, h).map_err(err)? {
                                        BorOutcome::Zero => 0,
                                        BorOutcome::Equivalent {
                                            nu: n2,
                                            lambda: l2,
                                            mu: m2,
                                        } => cached_oracle(&mut cache, &l2, &m2)?.get(&n2),
                                    };
                                ensure(lhs == rhs, || {
                                    format!("a^{nu}_({lambda},{mu}) in ({w}^{h})")
                                })?;
                                complements += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    let mut deflations = 0usize;
    for n in 2..=6 {
        for m1 in 1..=ORACLE_DEGREE / n {
            for m2 in 1..=ORACLE_DEGREE / n {
                if (m1 + m2) * n > ORACLE_DEGREE + n {
                    continue;
                }
                let w = m1 + m2;
                for mu1 in enumerate_partitions(m1 * n).filter(|q| q.fits_in(w, n)) {
                    let mu2 = mu1.rect_complement(w, n).map_err(err)?;
                    let d1 = deflate_by_recursion(&mu1, n).map_err(err)?.value;
                    let d2 = deflate_by_recursion(&mu2, n).map_err(err)?.value;
                    let expected = if w % 2 == 0 { d2 } else { d2.sign_twist() };
                    ensure(d1 == expected, || format!("deflations of {mu1} and {mu2}"))?;
                    deflations += 1;
                }
            }
        }
    }

    let mut de_boeck = 0usize;
    for m in 3..=20 / 3 {
        for n in 3..=20 / m {
            check_de_boeck_651(m, n).map_err(err)?;
            check_de_boeck_652(m, n).map_err(err)?;
            de_boeck += 1;
        }
    }

    let mut onsets = BTreeMap::new();
    for (lambda, mu) in stability_sample(20) {
        let r =
            check_stability_prop17(&lambda, &mu, 10).map_err(|e| format!("{lambda}, {mu}: {e}"))?;
        *onsets.entry(r.stabilized_at).or_insert(0usize) += 1;
    }
    Ok(format!(
        "{lifts} column lifts, {complements} rectangle complements, {deflations} complementary deflations, \
         de Boeck on {de_boeck} (m,n) pairs, 20 sequences stable by j ≤ 10 (onset histogram {onsets:?})"
    ))
}

fn small_character(deg: usize, seed: &[i64]) -> IrrDecomposition {
    let terms = enumerate_partitions(deg)
        .zip(seed.iter().cycle())
        .map(|(q, &c)| (q, c));
    IrrDecomposition::from_terms(deg, terms).unwrap()
}

const PROOF_DEGREE: usize = 12;

fn skewing_a_product() -> Result<usize, String> {
    let mut count = 0;
    for d1 in 1..PROOF_DEGREE {
        for d2 in 1..=(PROOF_DEGREE - d1).min(d1) {
            let phi1 = small_character(d1, &[1, 0, 2, -1]);
            let phi2 = small_character(d2, &[0, 1, 1]);
            let prod = boxtimes(&phi1, &phi2).map_err(err)?;
            let mut skews: HashMap<Partition, (IrrDecomposition, IrrDecomposition)> =
                HashMap::new();
            for g in 0..=d1.max(d2) {
                for gamma in enumerate_partitions(g) {
                    let a = if g <= d1 {
                        divide(&phi1, &gamma).map_err(err)?
                    } else {
                        IrrDecomposition::zero(0)
                    };
                    let b = if g <= d2 {
                        divide(&phi2, &gamma).map_err(err)?
                    } else {
                        IrrDecomposition::zero(0)
                    };
                    skews.insert(gamma, (a, b));
                }
            }
            for g in 0..=d1 + d2 {
                for gamma in enumerate_partitions(g) {
                    let lhs = divide(&prod, &gamma).map_err(err)?;
                    let mut rhs = IrrDecomposition::zero(d1 + d2 - g);
                    for j in g.saturating_sub(d2)..=g.min(d1) {
                        for g1 in enumerate_partitions(j) {
                            for g2 in enumerate_partitions(g - j) {
                                let c = lr_coefficient(&gamma, &g1, &g2);
                                if c == 0 {
                                    continue;
                                }
                                let t = boxtimes(&skews[&g1].0, &skews[&g2].1).map_err(err)?;
                                rhs = rhs.add(&t.scale(c as i64).map_err(err)?).map_err(err)?;
                            }
                        }
                    }
                    ensure(lhs == rhs, || format!("γ = {gamma}, degrees {d1}, {d2}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn long_shape_column() -> Result<usize, String> {
    let mut count = 0;
    for size in 1..=PROOF_DEGREE {
        for nu in enumerate_partitions(size) {
            let n = nu.len();
            let hat = nu.strip_first_column();
            for k in 0..=n {
                let skew =
                    skew_character(&SkewShape::new(nu.clone(), Partition::column(k)).map_err(err)?);
                for delta in enumerate_partitions(size - k).filter(|d| d.len() <= n) {
                    let right = divide(
                        &IrrDecomposition::irreducible(delta.clone()),
                        &Partition::column(n - k),
                    )
                    .map_err(err)?;
                    ensure(skew.get(&delta) == right.get(&hat), || {
                        format!("ν = {nu}, δ = {delta}, k = {k}")
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn row_rho_column() -> Result<usize, String> {
    let mut count = 0;
    for m in 2..=PROOF_DEGREE / 2 {
        for u in 1..=PROOF_DEGREE / m {
            let base = rho(&SkewShape::straight(Partition::row(u)), m).map_err(err)?;
            for t in 0..=u {
                let lhs = divide(&base, &Partition::column(u - t)).map_err(err)?;
                let rhs = boxtimes(
                    &rho(&SkewShape::straight(Partition::row(t)), m).map_err(err)?,
                    &rho(&SkewShape::straight(Partition::column(u - t)), m - 1).map_err(err)?,
                )
                .map_err(err)?;
                ensure(lhs == rhs, || format!("m = {m}, u = {u}, t = {t}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn rho_column() -> Result<usize, String> {
    let mut count = 0;
    for m in 2..=PROOF_DEGREE / 2 {
        for n in 1..=PROOF_DEGREE / m {
            for lambda in enumerate_partitions(n) {
                let base = rho(&SkewShape::straight(lambda.clone()), m).map_err(err)?;
                let lc = lambda.conjugate();
                for k in 0..=n {
                    let lhs = divide(&base, &Partition::column(n - k)).map_err(err)?;
                    let mut rhs = IrrDecomposition::zero(lhs.degree());
                    for beta in enumerate_partitions(k) {
                        let bc = beta.conjugate();
                        if !bc.is_contained_in(&lc) {
                            continue;
                        }
                        let rest = rho(&SkewShape::new(lc.clone(), bc).map_err(err)?, m - 1)
                            .map_err(err)?;
                        let term =
                            boxtimes(&rho(&SkewShape::straight(beta), m).map_err(err)?, &rest)
                                .map_err(err)?;
                        rhs = rhs.add(&term).map_err(err)?;
                    }
                    ensure(lhs == rhs, || format!("λ = {lambda}, m = {m}, k = {k}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn criterion_9() -> Check {
    let mut notes = Vec::new();
    for n in [4, 5, 8, 16] {
        let r = check_geq3_closure(n).map_err(err)?;
        ensure(r.holds(), || format!("closure n = {n}: {:?}", r.violations))?;
        notes.push(format!(
            "closure n={n} |A|={} |A⋆A|={}",
            r.set_size, r.product_size
        ));
    }
    let r = check_geq3_closure(7).map_err(err)?;
    println!(
        "  report closure n=7 (not a power of two): {} of {} below 3: {:?}",
        r.violations.len(),
        r.product_size,
        r.violations
    );
    for n in [4, 5] {
        for k in [2, 3] {
            let r = check_rectangle_containment(n, k).map_err(err)?;
            ensure(r.holds(), || {
                format!("rectangle n = {n}, k = {k}: missing {:?}", r.missing)
            })?;
        }
    }
    notes.push("rectangle n∈{4,5} k∈{2,3}".into());
    let low = check_box_geq3(3).map_err(err)?;
    ensure(low.is_empty(), || format!("box members below 3: {low:?}"))?;
    notes.push("B_{32,3}(48) ⊆ {Z ≥ 3}".into());

    let proofs = [
        skewing_a_product()?,
        long_shape_column()?,
        row_rho_column()?,
        rho_column()?,
    ];
    notes.push(format!(
        "proof identities on {} instances",
        proofs.iter().sum::<usize>()
    ));

    for a in 1..=4 {
        for b in a..=PROOF_DEGREE / a {
            match check_conjecture18(a, b) {
                Ok(r) => println!(
                    "  report conjecture18 a={a} b={b}: min {} and {}",
                    r.min_first, r.min_second
                ),
                Err(e) => println!("  report conjecture18 a={a} b={b}: {e}"),
            }
        }
    }
    for k in 2..=5 {
        let r = check_conjecture_2c(k).map_err(err)?;
        println!(
            "  report conjecture2c k={k}: observed {:?}, predicted {:?}",
            r.observed, r.predicted
        );
    }
    Ok(notes.join(", "))
}

fn census_bytes(n: usize, jobs: usize, dir: &Path) -> Result<Snapshot, String> {
    clear_memory_tables();
    let opts = CensusOptions {
        jobs,
        cache_dir: Some(dir.to_path_buf()),
        ..Default::default()
    };
    let run = census(n, &opts).map_err(err)?;
    let mut csv = Vec::new();
    run.write_csv(&mut csv).map_err(err)?;
    let mut files = BTreeMap::new();
    for entry in fs::read_dir(dir).map_err(err)? {
        let path = entry.map_err(err)?.path();
        files.insert(
            path.file_name().unwrap().to_string_lossy().into_owned(),
            fs::read(&path).map_err(err)?,
        );
    }
    Ok((csv, files))
}

fn criterion_10() -> Check {
    let n = 32;
    let (d1, d2) = (
        tempfile::tempdir().map_err(err)?,
        tempfile::tempdir().map_err(err)?,
    );
    let (csv1, files1) = census_bytes(n, 1, d1.path())?;
    let (csv3, files3) = census_bytes(n, 3, d2.path())?;
    ensure(csv1 == csv3, || "census tables differ".into())?;
    ensure(files1 == files3, || "cache files differ".into())?;
    ensure(files1.len() >= 6, || {
        format!("only {} cache files", files1.len())
    })?;
    Ok(format!("census n={n} with 1 and 3 workers: identical table ({} bytes) and {} identical cache files", csv1.len(), files1.len()))
}

// ---------------------------------------------------------------------------

fn report(id: u32, check: Check, started: Instant) -> bool {
    let secs = started.elapsed().as_secs_f64();
    match check {
        Ok(detail) => {
            println!("PASS criterion {id}: {detail} [{secs:.1}s]");
            true
        }
        Err(why) => {
            println!("FAIL criterion {id}: {why} [{secs:.1}s]");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut ok = true;
    let t = Instant::now();
    ok &= report(1, criterion_1(), t);
    let t = Instant::now();
    ok &= report(2, criterion_2(), t);

    let t = Instant::now();
    match census(32, &CensusOptions::default()) {
        Ok(run) => {
            ok &= report(3, criterion_3(&run.report), t);
            let t = Instant::now();
            ok &= report(4, criterion_4(&run.report), t);
        }
        Err(e) => {
            ok &= report(3, Err(e.to_string()), t);
            ok &= report(4, Err("census n=32 failed".into()), t);
        }
    }

    if std::env::var_os("PLETHZ_ACCEPT_64").is_some() {
        let t = Instant::now();
        ok &= report(5, criterion_5(), t);
    } else {
        println!("SKIP criterion 5: census n=64 runs only with PLETHZ_ACCEPT_64 set");
    }

    for (id, f) in [
        (6, criterion_6 as fn() -> Check),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ] {
        let t = Instant::now();
        ok &= report(id, f(), t);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
