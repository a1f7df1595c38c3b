//! Rim `n`-hooks, `n`-cores and the shapes `ν[m]`.
//!
//! A rim walk starts at the bottom box of column `r` and moves up and to the
//! right along the border until `n` boxes have been counted. Everything here is
//! phrased in terms of column lengths `λ̃`: with `d_j = λ̃_j − j` strictly
//! decreasing, the walk from column `r` ends in the unique column `s ≥ r` with
//! `d_s > λ̃_r − r − n ≥ d_{s+1}`, and is illegal exactly when the right-hand
//! inequality is an equality.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{GrassmannContext, Partition};

/// Outcome of walking an `n`-rim from one column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RimStatus {
    /// Fewer than `n` rim boxes from this column onwards.
    Absent,
    /// The walk ends directly left of the bottom box of the next column, so
    /// its removal would not leave a partition.
    Illegal,
    /// A rim `n`-hook occupying columns `start..=end`.
    Hook { start: usize, end: usize, width: usize, remainder: Partition },
}

/// Result of stripping rim `n`-hooks until none remain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreResult {
    pub core: Partition,
    /// Number of hooks removed.
    pub m: usize,
    /// `(−1)^{Σ (k − width_i)}`.
    pub sign: i64,
    /// Widths of the removed hooks, in removal order.
    pub widths: Vec<usize>,
}

fn as_signed(x: usize) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Walks the `n`-rim of `p` starting at the bottom of column `r` (1-based).
pub fn n_rim_from_column(p: &Partition, r: usize, n: usize) -> Result<RimStatus> {
    let width = p.first();
    if r == 0 || r > width {
        return Err(Error::ColumnOutOfRange { column: r, first_part: width });
    }
    // cols[j - 1] = λ̃_j for j = 1..=λ_1 + 1 (the last one is 0)
    let cols = p.columns(width + 1);
    let col = |j: usize| cols[j - 1];
    if col(r) + width - r < n {
        return Ok(RimStatus::Absent);
    }
    let d = |j: usize| -> Result<i64> { Ok(as_signed(col(j))? - as_signed(j)?) };
    let target = as_signed(col(r))? - as_signed(r)? - as_signed(n)?;
    let mut s = r;
    while d(s + 1)? > target {
        s += 1;
    }
    if d(s + 1)? == target {
        return Ok(RimStatus::Illegal);
    }
    // λ̃ with columns r..=s replaced by (λ̃_{r+1} − 1, …, λ̃_s − 1, λ̃_r − r + s − n)
    let mut new_cols = cols[..width].to_vec();
    for j in r..s {
        new_cols[j - 1] = col(j + 1) - 1;
    }
    new_cols[s - 1] = col(r) + s - r - n;
    let remainder = Partition::from_columns(&new_cols).map_err(|_| Error::Invariant("rim hook remainder is not a partition"))?;
    if remainder.weight() + n != p.weight() {
        return Err(Error::Invariant("rim hook removed the wrong number of boxes"));
    }
    Ok(RimStatus::Hook { start: r, end: s, width: s - r + 1, remainder })
}

/// The first legal rim `n`-hook scanning start columns left to right.
pub(crate) fn first_hook(p: &Partition, n: usize) -> Result<Option<(usize, Partition)>> {
    for r in 1..=p.first() {
        if let RimStatus::Hook { width, remainder, .. } = n_rim_from_column(p, r, n)? {
            return Ok(Some((width, remainder)));
        }
    }
    Ok(None)
}

/// Strips hooks until none remain; returns the core and the widths in
/// removal order.
pub fn strip_hooks(p: &Partition, n: usize) -> Result<(Partition, Vec<usize>)> {
    let mut current = p.clone();
    let mut widths = Vec::new();
    if n == 0 {
        return Ok((current, widths));
    }
    while current.weight() >= n {
        match first_hook(&current, n)? {
            Some((w, rest)) => {
                widths.push(w);
                current = rest;
            }
            None => break,
        }
    }
    Ok((current, widths))
}

/// Parity sign `(−1)^{Σ (k − w)}` without the `w ≤ k` restriction.
pub(crate) fn width_parity_sign(widths: &[usize], k: usize) -> i64 {
    let odd = widths.iter().filter(|&&w| (k + w) % 2 == 1).count();
    if odd % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Removes rim `n`-hooks from `p` until none remain.
///
/// At each step the leftmost start column admitting a legal hook is used;
/// illegal rims are skipped. `ctx` only supplies `k` for the sign.
pub fn n_core(p: &Partition, n: usize, ctx: GrassmannContext) -> Result<CoreResult> {
    let (core, widths) = strip_hooks(p, n)?;
    let sign = width_parity_sign(&widths, ctx.k());
    Ok(CoreResult { core, m: widths.len(), sign, widths })
}

/// `ε = (−1)^{Σ (k − w_i)}` for hook widths in `1..=k`.
pub fn epsilon_sign(widths: &[usize], k: usize) -> Result<i64> {
    if let Some(&width) = widths.iter().find(|&&w| w == 0 || w > k) {
        return Err(Error::WidthOutOfRange { width, k });
    }
    Ok(width_parity_sign(widths, k))
}

/// `ν[m]`: `ν` with `m` rim `n`-hooks added, each running from the first
/// column to the `k`-th with height `l + 1`.
pub fn nu_bracket(nu: &Partition, m: usize, ctx: GrassmannContext) -> Result<Partition> {
    ctx.require_fits(nu)?;
    let k = ctx.k();
    let mut cols = nu.columns(k);
    for _ in 0..m {
        let last = cols[k - 1];
        for j in (1..k).rev() {
            cols[j] = cols[j - 1].checked_add(1).ok_or(Error::Overflow)?;
        }
        cols[0] = last.checked_add(ctx.l() + 1).ok_or(Error::Overflow)?;
    }
    Partition::from_columns(&cols)
}

/// All `ρ` with `ρ_1 ≤ k_max`, `|ρ| = |ν| + m·n` and `n`-core `ν`,
/// lexicographically decreasing.
pub fn enumerate_preimages(nu: &Partition, m: usize, n: usize, k_max: usize) -> Result<Vec<Partition>> {
    let extra = m.checked_mul(n).ok_or(Error::Overflow)?;
    let weight = nu.weight().checked_add(extra).ok_or(Error::Overflow)?;
    preimages_within(nu, weight, n, k_max, weight, nu)
}

/// Preimages restricted further to at most `max_len` rows and to shapes
/// containing `lower` (which should contain `nu`).
pub(crate) fn preimages_within(
    nu: &Partition,
    weight: usize,
    n: usize,
    k_max: usize,
    max_len: usize,
    lower: &Partition,
) -> Result<Vec<Partition>> {
    if nu.first() > k_max {
        return Ok(Vec::new());
    }
    if n == 0 {
        return Ok(if weight == nu.weight() { alloc::vec![nu.clone()] } else { Vec::new() });
    }
    let mut out = Vec::new();
    for rho in Partition::all_bounded(weight, k_max, max_len, lower) {
        if strip_hooks(&rho, n)?.0 == *nu {
            out.push(rho);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ctx(l: usize, k: usize) -> GrassmannContext {
        GrassmannContext::new(l, k).unwrap()
    }

    #[test]
    fn rim_statuses() {
        assert_eq!(n_rim_from_column(&p(&[1]), 1, 3).unwrap(), RimStatus::Absent);
        assert_eq!(n_rim_from_column(&p(&[2, 1, 1]), 1, 3).unwrap(), RimStatus::Illegal);
        assert_eq!(
            n_rim_from_column(&p(&[2, 1]), 1, 3).unwrap(),
            RimStatus::Hook { start: 1, end: 2, width: 2, remainder: Partition::empty() }
        );
        assert_eq!(
            n_rim_from_column(&p(&[2, 2, 1, 1]), 1, 4).unwrap(),
            RimStatus::Hook { start: 1, end: 2, width: 2, remainder: p(&[2]) }
        );
        assert_eq!(
            n_rim_from_column(&p(&[2, 1]), 3, 1),
            Err(Error::ColumnOutOfRange { column: 3, first_part: 2 })
        );
        assert!(n_rim_from_column(&Partition::empty(), 1, 1).is_err());
    }

    #[test]
    fn core_examples() {
        let small = n_core(&p(&[2, 1]), 4, ctx(2, 2)).unwrap();
        assert_eq!(small, CoreResult { core: p(&[2, 1]), m: 0, sign: 1, widths: vec![] });

        let r = n_core(&p(&[2, 1]), 3, ctx(1, 2)).unwrap();
        assert_eq!((r.core, r.m, r.sign), (Partition::empty(), 1, 1));

        let r = n_core(&p(&[2, 2, 1, 1]), 4, ctx(2, 2)).unwrap();
        assert_eq!((r.core, r.m, r.sign), (p(&[2]), 1, 1));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_sign(&[], 3), Ok(1));
        assert_eq!(epsilon_sign(&[4], 4), Ok(1));
        assert_eq!(epsilon_sign(&[1], 2), Ok(-1));
        assert_eq!(epsilon_sign(&[1, 1], 2), Ok(1));
        assert_eq!(epsilon_sign(&[3], 2), Err(Error::WidthOutOfRange { width: 3, k: 2 }));
        assert_eq!(epsilon_sign(&[0], 2), Err(Error::WidthOutOfRange { width: 0, k: 2 }));
    }

    #[test]
    fn bracket_examples() {
        let c = ctx(2, 2);
        assert_eq!(nu_bracket(&p(&[2, 1]), 0, c).unwrap(), p(&[2, 1]));
        assert_eq!(nu_bracket(&p(&[2, 1]), 1, c).unwrap(), p(&[2, 2, 2, 1]));
        let r = n_core(&p(&[2, 2, 2, 1]), 4, c).unwrap();
        assert_eq!((r.core, r.m, r.widths), (p(&[2, 1]), 1, vec![2]));

        let c = ctx(4, 5);
        let big = nu_bracket(&p(&[2, 1]), 2, c).unwrap();
        assert_eq!(big, p(&[5, 5, 4, 3, 2, 2]));
        assert_eq!(big.weight(), 3 + 2 * 9);
        assert!(nu_bracket(&p(&[6]), 1, c).is_err());
    }

    #[test]
    fn preimage_examples() {
        let nu = p(&[4, 2, 2, 1]);
        assert_eq!(enumerate_preimages(&nu, 0, 10, 6).unwrap(), vec![nu.clone()]);
        let six = enumerate_preimages(&nu, 1, 10, 6).unwrap();
        let tall = |extra: &[usize]| {
            let mut parts = vec![4];
            parts.extend_from_slice(extra);
            p(&parts)
        };
        let expected = vec![
            p(&[6, 5, 3, 3, 2]),
            p(&[5, 5, 3, 3, 2, 1]),
            p(&[4, 4, 3, 3, 2, 1, 1, 1]),
            tall(&[3, 3, 3, 2, 1, 1, 1, 1]),
            tall(&[2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1]),
            tall(&[2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
        ];
        assert_eq!(six, expected);
        for rho in &six {
            assert_eq!(strip_hooks(rho, 10).unwrap().0, nu);
        }
        let four = enumerate_preimages(&nu, 1, 10, 4).unwrap();
        assert_eq!(four, expected[2..].to_vec());
        assert!(enumerate_preimages(&p(&[5]), 1, 10, 4).unwrap().is_empty());
    }
}
