//! Deflations `δ^μ = Σ_λ a^μ_{λ,(m)} χ^λ` and their known closed forms.

use crate::charalg::IrrDecomposition;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

use super::{m2::pleth_m2, pleth_recursive};

/// The deflation of `χ^μ` to `S_n`, with `m = |μ| / n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deflation {
    pub source: Partition,
    pub n: usize,
    pub m: usize,
    pub value: IrrDecomposition,
    /// Name of the closed form used, if any.
    pub closed_form: Option<&'static str>,
}

fn arity(mu: &Partition, n: usize) -> Result<usize> {
    if n == 0 || !mu.size().is_multiple_of(n) {
        return Err(Error::ArityError { size: mu.size(), n });
    }
    Ok(mu.size() / n)
}

/// `δ^μ`, taking a closed form when one applies.
pub fn deflate(mu: &Partition, n: usize) -> Result<Deflation> {
    let m = arity(mu, n)?;
    if let Some((name, value)) = closed_form_deflation(mu, n) {
        return Ok(Deflation {
            source: mu.clone(),
            n,
            m,
            value,
            closed_form: Some(name),
        });
    }
    deflate_by_recursion(mu, n)
}

/// `δ^μ` coefficient by coefficient, never using a closed form.
pub fn deflate_by_recursion(mu: &Partition, n: usize) -> Result<Deflation> {
    let m = arity(mu, n)?;
    let mut value = IrrDecomposition::zero(n);
    if mu.len() <= n {
        for lambda in enumerate_partitions(n) {
            let a = if m == 2 {
                pleth_m2(mu, &lambda)?
            } else {
                pleth_recursive(mu, &lambda, m)?
            };
            value.add_term(
                lambda,
                i64::try_from(a).map_err(|_| Error::Overflow("deflate"))?,
            )?;
        }
    }
    Ok(Deflation {
        source: mu.clone(),
        n,
        m,
        value,
        closed_form: None,
    })
}

fn sum(n: usize, shapes: Vec<Vec<usize>>) -> IrrDecomposition {
    IrrDecomposition::from_terms(
        n,
        shapes
            .into_iter()
            .map(|v| (Partition::new(v).expect("closed-form shape"), 1)),
    )
    .expect("closed-form sizes agree")
}

fn with_ones(mut head: Vec<usize>, ones: usize) -> Vec<usize> {
    head.extend(std::iter::repeat_n(1, ones));
    head
}

/// Closed forms for `m = 2`: tall shapes, length `n`, hooks, shapes in
/// three columns and (for `n ≥ 5`) near hooks `(2n-l, 2, 1^{l-2})`.
pub fn closed_form_deflation(mu: &Partition, n: usize) -> Option<(&'static str, IrrDecomposition)> {
    if n == 0 || mu.size() != 2 * n {
        return None;
    }
    let l = mu.len();
    if l > n {
        return Some(("tall", IrrDecomposition::zero(n)));
    }
    if l == n {
        return Some((
            "length",
            IrrDecomposition::irreducible(mu.strip_first_column().conjugate()),
        ));
    }
    if let Some(t) = mu.hook_leg() {
        return Some(("hook", IrrDecomposition::irreducible(Partition::hook(n, t))));
    }
    if mu.first() <= 3 {
        let c = mu.rect_complement(3, n).ok()?;
        return Some(("three-column", IrrDecomposition::irreducible(c.conjugate())));
    }
    if n >= 5 {
        if let Some(l) = mu.near_hook_index() {
            let v = if l == n - 1 {
                sum(
                    n,
                    vec![
                        with_ones(vec![2], n - 2),
                        with_ones(vec![3], n - 3),
                        with_ones(vec![2, 2], n - 4),
                    ],
                )
            } else if l >= 3 {
                sum(
                    n,
                    vec![
                        with_ones(vec![n - l + 1], l - 1),
                        with_ones(vec![n - l + 2], l - 2),
                        with_ones(vec![n - l, 2], l - 2),
                        with_ones(vec![n - l + 1, 2], l - 3),
                    ],
                )
            } else {
                sum(n, vec![vec![n], vec![n - 1, 1], vec![n - 2, 2]])
            };
            return Some(("near-hook", v));
        }
    }
    None
}

/// All `μ ⊢ 2n` whose deflation is a single irreducible character.
pub fn irreducible_deflations(n: usize) -> Result<Vec<(Partition, Partition)>> {
    let mut out = Vec::new();
    for mu in enumerate_partitions(2 * n) {
        let d = deflate(&mu, n)?;
        if d.value.len() == 1 {
            let (lambda, c) = d.value.iter().next().expect("one term");
            if c == 1 {
                out.push((mu, lambda.clone()));
            }
        }
    }
    Ok(out)
}
