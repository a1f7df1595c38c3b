//! The ring `Λ(l, k)`: classes, rim-hook reduction and quantum products.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::{GrassmannContext, Partition};
use crate::rim::{n_rim_from_column, preimages_within, strip_hooks, width_parity_sign, RimStatus};
use crate::tableau::{classical_lr, lr_expansion, quantum_kostka, ContentVector, Graded};

/// A `Z`-combination of basis symbols `q^m σ_ν` with `ν ⊂ l×k`.
///
/// Terms are kept sorted by `(m, ν)`, q-degree first; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QClass {
    ctx: GrassmannContext,
    terms: BTreeMap<(usize, Partition), i64>,
}

impl QClass {
    pub fn zero(ctx: GrassmannContext) -> Self {
        QClass { ctx, terms: BTreeMap::new() }
    }

    /// `σ_∅ = 1`.
    pub fn one(ctx: GrassmannContext) -> Self {
        QClass::basis(ctx, Partition::empty()).expect("empty partition fits")
    }

    /// `σ_ν`.
    pub fn basis(ctx: GrassmannContext, nu: Partition) -> Result<Self> {
        QClass::term(ctx, 1, 0, nu)
    }

    /// `coeff · q^m · σ_ν`.
    pub fn term(ctx: GrassmannContext, coeff: i64, m: usize, nu: Partition) -> Result<Self> {
        ctx.require_fits(&nu)?;
        let mut out = QClass::zero(ctx);
        out.add_term(coeff, m, nu)?;
        Ok(out)
    }

    pub fn ctx(&self) -> GrassmannContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(m, ν, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Partition, i64)> + '_ {
        self.terms.iter().map(|((m, nu), &c)| (*m, nu, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^m σ_ν` (zero if absent).
    pub fn coefficient(&self, m: usize, nu: &Partition) -> i64 {
        self.terms.get(&(m, nu.clone())).copied().unwrap_or(0)
    }

    /// The common value of `m·n + |ν|` over all terms, if they agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let n = self.ctx.n();
        let mut degrees = self.terms.keys().map(|(m, nu)| m * n + nu.weight());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub(crate) fn add_term(&mut self, coeff: i64, m: usize, nu: Partition) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let key = (m, nu);
        let sum = self.terms.get(&key).copied().unwrap_or(0).checked_add(coeff).ok_or(Error::Overflow)?;
        if sum == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
        Ok(())
    }

    /// `self + factor · q^shift · other`.
    pub(crate) fn add_scaled(&mut self, other: &QClass, factor: i64, shift: usize) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        for ((m, nu), &c) in &other.terms {
            let c = c.checked_mul(factor).ok_or(Error::Overflow)?;
            let m = m.checked_add(shift).ok_or(Error::Overflow)?;
            self.add_term(c, m, nu.clone())?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QClass) -> Result<QClass> {
        let mut out = self.clone();
        out.add_scaled(other, 1, 0)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &QClass) -> Result<QClass> {
        let mut out = self.clone();
        out.add_scaled(other, -1, 0)?;
        Ok(out)
    }

    pub fn scaled(&self, factor: i64) -> Result<QClass> {
        let mut out = QClass::zero(self.ctx);
        out.add_scaled(self, factor, 0)?;
        Ok(out)
    }

    /// Drops every term with `m > 0`.
    pub fn at_q_zero(&self) -> QClass {
        let terms = self.terms.iter().filter(|((m, _), _)| *m == 0).map(|(k, &v)| (k.clone(), v)).collect();
        QClass { ctx: self.ctx, terms }
    }
}

impl fmt::Display for QClass {
    /// `σ[4,2,2,1] + q·σ[1]`, `-2·q^2·σ[0]`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((m, nu), &c)) in self.terms.iter().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}·")?;
            }
            match m {
                0 => {}
                1 => f.write_str("q·")?,
                _ => write!(f, "q^{m}·")?,
            }
            write!(f, "σ[{nu}]")?;
        }
        Ok(())
    }
}

/// A single signed term `ε q^m σ_core`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedTerm {
    pub sign: i64,
    pub m: usize,
    pub core: Partition,
}

impl fmt::Display for ReducedTerm {
    /// Explicit sign and exponent, e.g. `+q^1·σ[0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { '-' } else { '+' };
        write!(f, "{s}q^{}·σ[{}]", self.m, self.core)
    }
}

/// Rim-hook reduction of `σ_λ` for an arbitrary partition `λ`.
///
/// `None` means `σ_λ = 0`: `λ_1 > k`, an illegal `n`-rim at some step, or a
/// shape with more than `l` rows and no rim `n`-hook.
pub fn reduce_schur_term(lambda: &Partition, ctx: GrassmannContext) -> Result<Option<ReducedTerm>> {
    if lambda.first() > ctx.k() {
        return Ok(None);
    }
    let n = ctx.n();
    let mut current = lambda.clone();
    let mut sign = 1i64;
    let mut m = 0usize;
    while current.len() > ctx.l() {
        let mut hook = None;
        for r in 1..=current.first() {
            match n_rim_from_column(&current, r, n)? {
                RimStatus::Illegal => return Ok(None),
                RimStatus::Hook { width, remainder, .. } if hook.is_none() => hook = Some((width, remainder)),
                _ => {}
            }
        }
        let Some((width, rest)) = hook else { return Ok(None) };
        if (ctx.k() - width) % 2 == 1 {
            sign = -sign;
        }
        m += 1;
        current = rest;
    }
    Ok(Some(ReducedTerm { sign, m, core: current }))
}

/// `σ_λ` as an element of `Λ(l, k)`.
pub fn reduce_schur(lambda: &Partition, ctx: GrassmannContext) -> Result<QClass> {
    match reduce_schur_term(lambda, ctx)? {
        None => Ok(QClass::zero(ctx)),
        Some(t) => QClass::term(ctx, t.sign, t.m, t.core),
    }
}

/// Reduction through the `n`-core: `ε(λ/core) q^m σ_core` when the core fits
/// the rectangle, zero otherwise. Agrees with [`reduce_schur`].
pub fn reduce_via_core(lambda: &Partition, ctx: GrassmannContext) -> Result<QClass> {
    if lambda.first() > ctx.k() {
        return Ok(QClass::zero(ctx));
    }
    let (core, widths) = strip_hooks(lambda, ctx.n())?;
    if !ctx.fits(&core) {
        return Ok(QClass::zero(ctx));
    }
    QClass::term(ctx, width_parity_sign(&widths, ctx.k()), widths.len(), core)
}

/// One summand `ε(ρ/ν) · c^ρ_{λμ}` of a quantum Littlewood-Richardson number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreimageTerm {
    pub rho: Partition,
    pub sign: i64,
    pub classical: u64,
}

/// The `ρ ⊇ λ ∪ μ` with `ρ_1 ≤ k`, at most `ℓ(λ) + ℓ(μ)` rows, weight
/// `|λ| + |μ|` and `n`-core `ν`, with their signs and nonzero classical
/// coefficients.
pub fn qlr_terms(lambda: &Partition, mu: &Partition, nu: &Partition, ctx: GrassmannContext) -> Result<Graded<Vec<PreimageTerm>>> {
    for p in [lambda, mu, nu] {
        ctx.require_fits(p)?;
    }
    let total = lambda.weight() + mu.weight();
    let Some(m) = ctx.q_degree(total, nu.weight()) else { return Ok(Graded::DegreeMismatch) };
    let lower = union(&union(lambda, mu), nu);
    let max_len = lambda.len() + mu.len();
    let mut terms = Vec::new();
    for rho in preimages_within(nu, total, ctx.n(), ctx.k(), max_len, &lower)? {
        let classical = classical_lr(lambda, mu, &rho)?;
        if classical == 0 {
            continue;
        }
        let (_, widths) = strip_hooks(&rho, ctx.n())?;
        terms.push(PreimageTerm { rho, sign: width_parity_sign(&widths, ctx.k()), classical });
    }
    Ok(Graded::Degree { m, value: terms })
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let len = a.len().max(b.len());
    let parts: Vec<usize> = (1..=len).map(|i| a.part(i).max(b.part(i))).collect();
    Partition::new(parts).expect("union of partitions is a partition")
}

/// Quantum Littlewood-Richardson number `N^ν_{λμ}(l, k) = Σ_ρ ε(ρ/ν) c^ρ_{λμ}`.
///
/// A negative sum is reported as an invariant violation.
pub fn qlr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition, ctx: GrassmannContext) -> Result<Graded<i64>> {
    let Graded::Degree { m, value: terms } = qlr_terms(lambda, mu, nu, ctx)? else {
        return Ok(Graded::DegreeMismatch);
    };
    let mut sum = 0i64;
    for t in &terms {
        let c = i64::try_from(t.classical).map_err(|_| Error::Overflow)?;
        sum = sum.checked_add(t.sign * c).ok_or(Error::Overflow)?;
    }
    if sum < 0 {
        return Err(Error::Invariant("negative quantum Littlewood-Richardson number"));
    }
    Ok(Graded::Degree { m, value: sum })
}

/// `σ_λ · σ_μ` for basis classes: classical expansion, then reduction of each
/// `σ_ρ`.
pub fn basis_product(lambda: &Partition, mu: &Partition, ctx: GrassmannContext) -> Result<QClass> {
    ctx.require_fits(lambda)?;
    ctx.require_fits(mu)?;
    let mut out = QClass::zero(ctx);
    for (rho, c) in lr_expansion(lambda, mu, ctx.k(), lambda.len() + mu.len())? {
        if let Some(t) = reduce_schur_term(&rho, ctx)? {
            let c = i64::try_from(c).map_err(|_| Error::Overflow)?;
            out.add_term(t.sign.checked_mul(c).ok_or(Error::Overflow)?, t.m, t.core)?;
        }
    }
    Ok(out)
}

/// Bilinear product in `Λ(l, k)`.
pub fn qmul(a: &QClass, b: &QClass) -> Result<QClass> {
    multiply_with(a, b, |x, y| basis_product(x, y, a.ctx))
}

fn multiply_with(a: &QClass, b: &QClass, mut basis: impl FnMut(&Partition, &Partition) -> Result<QClass>) -> Result<QClass> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch);
    }
    let mut out = QClass::zero(a.ctx);
    for ((ma, x), &ca) in &a.terms {
        for ((mb, y), &cb) in &b.terms {
            let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
            let shift = ma.checked_add(*mb).ok_or(Error::Overflow)?;
            out.add_scaled(&basis(x, y)?, c, shift)?;
        }
    }
    Ok(out)
}

/// Memo table of basis products for one context.
///
/// Lookups take `&mut self`; wrap in a lock to share across threads.
#[derive(Debug, Clone)]
pub struct ProductCache {
    ctx: GrassmannContext,
    table: BTreeMap<(Partition, Partition), QClass>,
}

impl ProductCache {
    pub fn new(ctx: GrassmannContext) -> Self {
        ProductCache { ctx, table: BTreeMap::new() }
    }

    pub fn ctx(&self) -> GrassmannContext {
        self.ctx
    }

    pub fn basis_product(&mut self, lambda: &Partition, mu: &Partition) -> Result<QClass> {
        let key = (lambda.clone(), mu.clone());
        if let Some(hit) = self.table.get(&key) {
            return Ok(hit.clone());
        }
        let product = basis_product(lambda, mu, self.ctx)?;
        self.table.insert(key, product.clone());
        Ok(product)
    }

    pub fn mul(&mut self, a: &QClass, b: &QClass) -> Result<QClass> {
        if a.ctx != self.ctx {
            return Err(Error::ContextMismatch);
        }
        multiply_with(a, b, |x, y| self.basis_product(x, y))
    }
}

/// All vectors `v` of length `lo.len()` with `lo_i ≤ v_i ≤ hi_i` and sum `total`.
fn bounded_vectors(lo: &[usize], hi: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, lo: &[usize], hi: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == lo.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_min: usize = lo[i + 1..].iter().sum();
        let rest_max: usize = hi[i + 1..].iter().sum();
        for v in lo[i]..=hi[i] {
            if v + rest_min > left {
                break;
            }
            if v + rest_max < left {
                continue;
            }
            cur.push(v);
            go(i + 1, lo, hi, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo.iter().zip(hi).all(|(a, b)| a <= b) {
        go(0, lo, hi, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Rows `x_1 ≥ … ≥ x_len` interlacing `y` from above: `cap ≥ x_1 ≥ y_1 ≥ x_2 ≥ …`.
fn interlacing_above(y: &[usize], cap: usize, total: usize) -> Vec<Vec<usize>> {
    let hi: Vec<usize> = (0..y.len()).map(|i| if i == 0 { cap } else { y[i - 1] }).collect();
    bounded_vectors(y, &hi, total)
}

/// Rows with `y_1 − 1 ≥ x_1 ≥ y_2 − 1 ≥ x_2 ≥ … ≥ y_len − 1 ≥ x_len ≥ 0`;
/// requires every `y_i ≥ 1`.
fn interlacing_below_shifted(y: &[usize], total: usize) -> Vec<Vec<usize>> {
    if y.contains(&0) {
        return Vec::new();
    }
    let hi: Vec<usize> = y.iter().map(|v| v - 1).collect();
    let lo: Vec<usize> = (0..y.len()).map(|i| y.get(i + 1).map_or(0, |v| v - 1)).collect();
    bounded_vectors(&lo, &hi, total)
}

/// Quantum Pieri rule `σ_p · σ_λ`, read straight off the two interlacing
/// conditions (independent of rim-hook reduction).
pub fn quantum_pieri(p: usize, lambda: &Partition, ctx: GrassmannContext) -> Result<QClass> {
    ctx.require_fits(lambda)?;
    if p == 0 || p > ctx.k() {
        return Err(Error::PieriOutOfRange { p, bound: ctx.k() });
    }
    let rows: Vec<usize> = (1..=ctx.l()).map(|i| lambda.part(i)).collect();
    let mut out = QClass::zero(ctx);
    for mu in interlacing_above(&rows, ctx.k(), lambda.weight() + p) {
        out.add_term(1, 0, Partition::new(mu)?)?;
    }
    if let Some(target) = (lambda.weight() + p).checked_sub(ctx.n()) {
        for nu in interlacing_below_shifted(&rows, target) {
            out.add_term(1, 1, Partition::new(nu)?)?;
        }
    }
    Ok(out)
}

/// Dual quantum Pieri rule `σ_{(1^p)} · σ_λ`: vertical strips inside the
/// rectangle, plus `q` times the shapes whose columns interlace
/// `λ̃_1 − 1 ≥ ν̃_1 ≥ λ̃_2 − 1 ≥ … ≥ λ̃_k − 1 ≥ ν̃_k ≥ 0`.
pub fn quantum_dual_pieri(p: usize, lambda: &Partition, ctx: GrassmannContext) -> Result<QClass> {
    ctx.require_fits(lambda)?;
    if p == 0 || p > ctx.l() {
        return Err(Error::PieriOutOfRange { p, bound: ctx.l() });
    }
    let cols = lambda.columns(ctx.k());
    let mut out = QClass::zero(ctx);
    for mu_cols in interlacing_above(&cols, ctx.l(), lambda.weight() + p) {
        out.add_term(1, 0, Partition::from_columns(&mu_cols)?)?;
    }
    if let Some(target) = (lambda.weight() + p).checked_sub(ctx.n()) {
        for nu_cols in interlacing_below_shifted(&cols, target) {
            out.add_term(1, 1, Partition::from_columns(&nu_cols)?)?;
        }
    }
    Ok(out)
}

/// `σ_p · x` by applying [`quantum_pieri`] to each term; `p = 0` is the identity.
pub fn pieri_on_class(p: usize, x: &QClass) -> Result<QClass> {
    if p == 0 {
        return Ok(x.clone());
    }
    let mut out = QClass::zero(x.ctx);
    for ((m, nu), &c) in &x.terms {
        out.add_scaled(&quantum_pieri(p, nu, x.ctx)?, c, *m)?;
    }
    Ok(out)
}

/// `σ_{μ_r} ⋯ σ_{μ_1} · σ_λ` by repeated quantum Pieri.
pub fn pieri_fold(mu: &ContentVector, lambda: &Partition, ctx: GrassmannContext) -> Result<QClass> {
    check_row_content(mu, ctx)?;
    let mut acc = QClass::basis(ctx, lambda.clone())?;
    for &p in mu.entries() {
        acc = pieri_on_class(p, &acc)?;
    }
    Ok(acc)
}

fn check_row_content(mu: &ContentVector, ctx: GrassmannContext) -> Result<()> {
    match mu.entries().iter().find(|&&e| e > ctx.k()) {
        Some(&entry) => Err(Error::ContentTooLarge { entry, bound: ctx.k() }),
        None => Ok(()),
    }
}

/// `σ_{μ_r} ⋯ σ_{μ_1} · σ_λ` with every coefficient a quantum Kostka number.
pub fn kostka_product(mu: &ContentVector, lambda: &Partition, ctx: GrassmannContext) -> Result<QClass> {
    check_row_content(mu, ctx)?;
    ctx.require_fits(lambda)?;
    let total = lambda.weight() + mu.total();
    let mut out = QClass::zero(ctx);
    for nu in Partition::all_in_rect(ctx) {
        if let Graded::Degree { m, value } = quantum_kostka(lambda, mu, &nu, ctx)? {
            out.add_term(i64::try_from(value).map_err(|_| Error::Overflow)?, m, nu)?;
        }
    }
    debug_assert!(out.homogeneous_degree().is_none_or(|d| d == total));
    Ok(out)
}

/// The isomorphism `Λ(l, k) → Λ(k, l)`, `q^m σ_ν ↦ q^m τ_ν̃`.
pub fn duality_map(a: &QClass) -> QClass {
    let ctx = a.ctx.dual();
    let terms = a.terms.iter().map(|((m, nu), &c)| ((*m, nu.conjugate()), c)).collect();
    QClass { ctx, terms }
}
