//! Independent recomputations used to cross-check the main routes.
//!
//! Nothing here touches the tableau module: Schur polynomials are built from
//! their own straight-shape filler, and the quantum product is rebuilt from
//! the Giambelli determinant and the interlacing form of the Pieri rule.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{GrassmannContext, Partition};
use crate::ring::{pieri_on_class, QClass};

/// Sparse polynomial in `nvars` variables with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivarPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MultivarPoly {
    pub fn zero(nvars: usize) -> Self {
        MultivarPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Sum of all coefficients (the value at `x = (1, …, 1)`).
    pub fn coefficient_sum(&self) -> Result<i64> {
        self.terms.values().try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }

    pub fn add_monomial(&mut self, exponents: Vec<u32>, coeff: i64) -> Result<()> {
        if exponents.len() != self.nvars {
            return Err(Error::Invariant("monomial has the wrong number of variables"));
        }
        let slot = self.terms.entry(exponents).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &MultivarPoly) -> Result<MultivarPoly> {
        if self.nvars != other.nvars {
            return Err(Error::Invariant("multiplying polynomials in different rings"));
        }
        let mut out = MultivarPoly::zero(self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_monomial(e, ca.checked_mul(cb).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// The polynomial with variables `i` and `j` exchanged.
    pub fn swap_variables(&self, i: usize, j: usize) -> MultivarPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut e = e.clone();
                e.swap(i, j);
                (e, c)
            })
            .collect();
        MultivarPoly { nvars: self.nvars, terms }
    }
}

/// Straight-shape semistandard fillings of `shape` with entries `≤ max`,
/// reported by their content vectors. `target` restricts to one content.
fn for_each_straight_filling(shape: &Partition, max: usize, target: Option<&[u32]>, visit: &mut impl FnMut(&[u32])) {
    let rows = shape.parts();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| alloc::vec![0; r]).collect();
    let mut content = alloc::vec![0u32; max];
    fill(rows, 0, 0, max, target, &mut grid, &mut content, visit);

    #[allow(clippy::too_many_arguments)]
    fn fill(
        rows: &[usize],
        r: usize,
        c: usize,
        max: usize,
        target: Option<&[u32]>,
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<u32>,
        visit: &mut impl FnMut(&[u32]),
    ) {
        if r == rows.len() {
            visit(content);
            return;
        }
        let (nr, nc) = if c + 1 == rows[r] { (r + 1, 0) } else { (r, c + 1) };
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=max {
            if let Some(t) = target {
                if content[v - 1] >= t[v - 1] {
                    continue;
                }
            }
            grid[r][c] = v;
            content[v - 1] += 1;
            fill(rows, nr, nc, max, target, grid, content, visit);
            content[v - 1] -= 1;
        }
        grid[r][c] = 0;
    }
}

/// `s_λ(x_1, …, x_N)` as the sum of `x^T` over semistandard tableaux `T` of
/// shape `λ` with entries `≤ N`.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> Result<MultivarPoly> {
    let mut out = MultivarPoly::zero(nvars);
    if lambda.len() > nvars {
        return Ok(out);
    }
    let mut err = None;
    for_each_straight_filling(lambda, nvars, None, &mut |content| {
        if err.is_none() {
            if let Err(e) = out.add_monomial(content.to_vec(), 1) {
                err = Some(e);
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Coefficient of `x^α` in `s_λ`, counting tableaux of that content only.
fn schur_monomial_coefficient(lambda: &Partition, alpha: &[u32]) -> i64 {
    let mut count = 0i64;
    if lambda.len() > alpha.len() {
        return 0;
    }
    for_each_straight_filling(lambda, alpha.len(), Some(alpha), &mut |_| count += 1);
    count
}

fn exponent_of(p: &Partition, nvars: usize) -> Vec<u32> {
    (1..=nvars).map(|i| p.part(i) as u32).collect()
}

/// Schur expansion of `s_λ · s_μ` in `N` variables (so only `ν` with at most
/// `N` rows appear), by repeatedly peeling off the lexicographically largest
/// monomial. Only monomials with weakly decreasing exponents are tracked,
/// which determines a symmetric polynomial.
pub fn poly_lr_expansion(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<BTreeMap<Partition, u64>> {
    let f = schur_poly(lambda, nvars)?;
    let g = schur_poly(mu, nvars)?;
    let weight = lambda.weight() + mu.weight();
    let dominant = dominant_exponents(weight, nvars);
    let mut remainder: Vec<i64> = Vec::with_capacity(dominant.len());
    for alpha in &dominant {
        let target = exponent_of(alpha, nvars);
        let mut c = 0i64;
        for (beta, cb) in f.terms() {
            if beta.iter().zip(&target).all(|(b, a)| b <= a) {
                let rest: Vec<u32> = target.iter().zip(beta).map(|(a, b)| a - b).collect();
                let cg = g.coefficient(&rest);
                if cg != 0 {
                    c = c.checked_add(cb.checked_mul(cg).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                }
            }
        }
        remainder.push(c);
    }
    let expansion = peel(&dominant, remainder, nvars)?;
    expansion
        .into_iter()
        .map(|(nu, c)| {
            u64::try_from(c)
                .map(|c| (nu, c))
                .map_err(|_| Error::Invariant("negative coefficient in a Schur product"))
        })
        .collect()
}

/// Schur expansion of a homogeneous symmetric polynomial.
pub fn schur_expansion(poly: &MultivarPoly) -> Result<BTreeMap<Partition, i64>> {
    let nvars = poly.nvars;
    let Some(first) = poly.terms.keys().next() else { return Ok(BTreeMap::new()) };
    let weight: u32 = first.iter().sum();
    if poly.terms.keys().any(|e| e.iter().sum::<u32>() != weight) {
        return Err(Error::Invariant("Schur expansion of an inhomogeneous polynomial"));
    }
    let dominant = dominant_exponents(weight as usize, nvars);
    let remainder = dominant.iter().map(|a| poly.coefficient(&exponent_of(a, nvars))).collect();
    peel(&dominant, remainder, nvars)
}

/// Partitions of `weight` with at most `nvars` parts, lexicographically
/// decreasing.
fn dominant_exponents(weight: usize, nvars: usize) -> Vec<Partition> {
    Partition::all_bounded(weight, weight, nvars, &Partition::empty())
}

/// Leading-term extraction on the dominant coefficients `remainder`
/// (indexed like `dominant`).
fn peel(dominant: &[Partition], mut remainder: Vec<i64>, nvars: usize) -> Result<BTreeMap<Partition, i64>> {
    let mut out = BTreeMap::new();
    let mut start = 0;
    while let Some(lead) = (start..dominant.len()).find(|&i| remainder[i] != 0) {
        let coeff = remainder[lead];
        let nu = &dominant[lead];
        out.insert(nu.clone(), coeff);
        for (i, beta) in dominant.iter().enumerate().skip(lead) {
            let kostka = schur_monomial_coefficient(nu, &exponent_of(beta, nvars));
            if kostka != 0 {
                let delta = coeff.checked_mul(kostka).ok_or(Error::Overflow)?;
                remainder[i] = remainder[i].checked_sub(delta).ok_or(Error::Overflow)?;
            }
        }
        if remainder[lead] != 0 {
            return Err(Error::Invariant("Schur expansion did not cancel its leading term"));
        }
        start = lead + 1;
    }
    Ok(out)
}

/// Coefficient of `s_ν` in `s_λ · s_μ` via polynomial expansion in
/// `max(ℓ(ν), 1)` variables.
pub fn poly_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if nu.weight() != lambda.weight() + mu.weight() {
        return Ok(0);
    }
    let expansion = poly_lr_expansion(lambda, mu, nu.len().max(1))?;
    Ok(expansion.get(nu).copied().unwrap_or(0))
}

/// `σ_{(1^r)}` from the closed form: with `r = m·n + j`, `0 ≤ j < n`, it is
/// `(−1)^{m(k−1)} q^m σ_{(1^j)}` for `j ≤ l` and zero for `l < j < n`.
pub fn y_closed_form(r: usize, ctx: GrassmannContext) -> Result<QClass> {
    let n = ctx.n();
    let (m, j) = (r / n, r % n);
    if j > ctx.l() {
        return Ok(QClass::zero(ctx));
    }
    let sign = if (m * (ctx.k() - 1)).is_multiple_of(2) { 1 } else { -1 };
    QClass::term(ctx, sign, m, Partition::column(j))
}

/// Permutations of `0..len` with their signs.
fn signed_permutations(len: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..len).collect();
    permute(0, &mut perm, 1, &mut out);
    return out;

    fn permute(i: usize, perm: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if i == perm.len() {
            out.push((perm.clone(), sign));
            return;
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            permute(i + 1, perm, if i == j { sign } else { -sign }, out);
            perm.swap(i, j);
        }
    }
}

/// `σ_λ · σ_μ` by expanding `σ_μ = det(σ_{μ_i + j − i})` over `S_l` and
/// multiplying each product of row classes into `σ_λ` with quantum Pieri.
pub fn pieri_giambelli_product(lambda: &Partition, mu: &Partition, ctx: GrassmannContext) -> Result<QClass> {
    if !ctx.fits(lambda) || !ctx.fits(mu) {
        let bad = if ctx.fits(lambda) { mu } else { lambda };
        return Err(Error::NotInRectangle { partition: bad.clone(), l: ctx.l(), k: ctx.k() });
    }
    let l = ctx.l();
    let start = QClass::basis(ctx, lambda.clone())?;
    let mut total = QClass::zero(ctx);
    'perms: for (perm, sign) in signed_permutations(l) {
        let mut acc = start.clone();
        for (i, &j) in perm.iter().enumerate() {
            // entry σ_{μ_i + j − i}, 0-based indices so the shift is j − i
            let index = mu.part(i + 1) as i64 + j as i64 - i as i64;
            if index < 0 || index > ctx.k() as i64 {
                continue 'perms;
            }
            acc = pieri_on_class(index as usize, &acc)?;
            if acc.is_zero() {
                continue 'perms;
            }
        }
        total = if sign > 0 { total.checked_add(&acc)? } else { total.checked_sub(&acc)? };
    }
    Ok(total)
}
