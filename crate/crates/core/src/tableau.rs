//! Skew tableaux: enumeration, words, Littlewood-Richardson and Kostka
//! numbers, and the proper-tableau predicates behind quantum Kostka numbers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::{GrassmannContext, Partition};
use crate::rim::nu_bracket;

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// `None` unless `inner ⊆ outer`.
    pub fn new(outer: Partition, inner: Partition) -> Option<Self> {
        outer.contains(&inner).then_some(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Transposed shape `outer~ / inner~`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.outer.has_cell(row, col) && !self.inner.has_cell(row, col)
    }
}

/// Multiplicities `(μ_1, …, μ_r)` of the entries `1..=r`; any order, zeros
/// allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentVector(Vec<usize>);

impl ContentVector {
    pub fn new(entries: impl Into<Vec<usize>>) -> Self {
        ContentVector(entries.into())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    fn require_bounded(&self, bound: usize) -> Result<()> {
        match self.0.iter().find(|&&e| e > bound) {
            Some(&entry) => Err(Error::ContentTooLarge { entry, bound }),
            None => Ok(()),
        }
    }
}

impl From<&Partition> for ContentVector {
    fn from(p: &Partition) -> Self {
        ContentVector(p.parts().to_vec())
    }
}

/// Which monotonicity a filling obeys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Weakly increasing along rows, strictly down columns.
    Ordinary,
    /// Strictly increasing along rows, weakly down columns.
    Conjugate,
}

/// A filling of a skew shape with positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    /// `rows[i]` holds the entries of row `i + 1` left to right, skew cells only.
    rows: Vec<Vec<usize>>,
    orientation: Orientation,
}

impl SkewTableau {
    /// Checks that the rows match the shape and obey the orientation.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>, orientation: Orientation) -> Option<Self> {
        let t = SkewTableau { shape, rows, orientation };
        t.is_valid().then_some(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Entry at `(row, col)`, 1-based, if that cell belongs to the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let offset = self.shape.inner.part(row);
        Some(self.rows[row - 1][col - offset - 1])
    }

    /// Count of each value `1..=max`.
    pub fn content(&self) -> ContentVector {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = alloc::vec![0; max];
        for &e in self.rows.iter().flatten() {
            counts[e - 1] += 1;
        }
        ContentVector(counts)
    }

    fn is_valid(&self) -> bool {
        let outer = &self.shape.outer;
        if self.rows.len() != outer.len() {
            return false;
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != outer.part(i + 1) - self.shape.inner.part(i + 1) || row.contains(&0) {
                return false;
            }
        }
        for row in 1..=outer.len() {
            for col in 1..=outer.part(row) {
                let Some(here) = self.entry(row, col) else { continue };
                if let Some(left) = self.entry(row, col.wrapping_sub(1)) {
                    let ok = match self.orientation {
                        Orientation::Ordinary => left <= here,
                        Orientation::Conjugate => left < here,
                    };
                    if !ok {
                        return false;
                    }
                }
                if let Some(up) = self.entry(row.wrapping_sub(1), col) {
                    let ok = match self.orientation {
                        Orientation::Ordinary => up < here,
                        Orientation::Conjugate => up <= here,
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Column lengths (1..=width) of the shape `ρ(i)`: the inner shape together
    /// with every cell holding an entry `≤ i`.
    fn prefix_columns(&self, i: usize, width: usize) -> Vec<usize> {
        (1..=width)
            .map(|col| {
                (1..=self.shape.outer.column_len(col))
                    .filter(|&row| {
                        self.shape.inner.has_cell(row, col) || self.entry(row, col).is_some_and(|e| e <= i)
                    })
                    .count()
            })
            .collect()
    }

    /// The outer shape of the subtableau of entries `≤ i`.
    pub fn prefix_shape(&self, i: usize) -> Partition {
        let cols = self.prefix_columns(i, self.shape.outer.first());
        Partition::from_columns(&cols).expect("prefix of a tableau is a partition")
    }
}

impl fmt::Display for SkewTableau {
    /// One line per row; inner cells print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let dots = self.shape.inner.part(i + 1);
            let mut first = true;
            for _ in 0..dots {
                if !first {
                    f.write_str(" ")?;
                }
                f.write_str(".")?;
                first = false;
            }
            for e in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Backtracking filler over the cells of a skew shape in row-major order.
struct Filler<'a> {
    shape: &'a SkewShape,
    orientation: Orientation,
    remaining: Vec<usize>,
    /// grid[row - 1][col - 1]; 0 marks an inner cell.
    grid: Vec<Vec<usize>>,
    cells: Vec<(usize, usize)>,
}

/// Callbacks for the filler. `row_done` may prune: returning `false` abandons
/// every completion of the current partial filling.
trait Visit {
    fn row_done(&mut self, _row: usize, _grid: &[Vec<usize>]) -> bool {
        true
    }
    fn complete(&mut self, shape: &SkewShape, grid: &[Vec<usize>], orientation: Orientation) -> Result<()>;
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, content: &ContentVector, orientation: Orientation) -> Self {
        let outer = &shape.outer;
        let grid = (1..=outer.len()).map(|r| alloc::vec![0; outer.part(r)]).collect();
        let mut cells = Vec::with_capacity(shape.cell_count());
        for row in 1..=outer.len() {
            for col in shape.inner.part(row) + 1..=outer.part(row) {
                cells.push((row, col));
            }
        }
        Filler { shape, orientation, remaining: content.0.clone(), grid, cells }
    }

    fn run(&mut self, visit: &mut impl Visit) -> Result<()> {
        if self.remaining.iter().sum::<usize>() != self.cells.len() {
            return Ok(());
        }
        self.fill(0, visit)
    }

    fn fill(&mut self, idx: usize, visit: &mut impl Visit) -> Result<()> {
        if idx == self.cells.len() {
            return visit.complete(self.shape, &self.grid, self.orientation);
        }
        let (row, col) = self.cells[idx];
        let inner = &self.shape.inner;
        let left = (col > 1 && !inner.has_cell(row, col - 1)).then(|| self.grid[row - 1][col - 2]);
        let up = (row > 1 && !inner.has_cell(row - 1, col)).then(|| self.grid[row - 2][col - 1]);
        let (strict_left, strict_up) = match self.orientation {
            Orientation::Ordinary => (false, true),
            Orientation::Conjugate => (true, false),
        };
        let bound = |v: Option<usize>, strict: bool| v.map_or(1, |v| if strict { v + 1 } else { v.max(1) });
        let lo = bound(left, strict_left).max(bound(up, strict_up));
        let row_ends = col == self.shape.outer.part(row);
        for value in lo..=self.remaining.len() {
            if self.remaining[value - 1] == 0 {
                continue;
            }
            self.remaining[value - 1] -= 1;
            self.grid[row - 1][col - 1] = value;
            let keep = !row_ends || visit.row_done(row, &self.grid);
            if keep {
                self.fill(idx + 1, visit)?;
            }
            self.grid[row - 1][col - 1] = 0;
            self.remaining[value - 1] += 1;
        }
        Ok(())
    }
}

fn tableau_from_grid(shape: &SkewShape, grid: &[Vec<usize>], orientation: Orientation) -> SkewTableau {
    let rows = grid
        .iter()
        .enumerate()
        .map(|(i, r)| r[shape.inner.part(i + 1)..].to_vec())
        .collect();
    SkewTableau { shape: shape.clone(), rows, orientation }
}

struct Collect(Vec<SkewTableau>);

impl Visit for Collect {
    fn complete(&mut self, shape: &SkewShape, grid: &[Vec<usize>], orientation: Orientation) -> Result<()> {
        let t = tableau_from_grid(shape, grid, orientation);
        if !t.is_valid() {
            return Err(Error::Invariant("enumerated filling is not a tableau"));
        }
        self.0.push(t);
        Ok(())
    }
}

/// Counts completions accepted by `keep`, without materialising the list
/// unless `keep` needs the tableau.
struct CountIf<F> {
    keep: F,
    count: u64,
}

impl<F: FnMut(&SkewTableau) -> bool> Visit for CountIf<F> {
    fn complete(&mut self, shape: &SkewShape, grid: &[Vec<usize>], orientation: Orientation) -> Result<()> {
        let t = tableau_from_grid(shape, grid, orientation);
        if (self.keep)(&t) {
            self.count = self.count.checked_add(1).ok_or(Error::Overflow)?;
        }
        Ok(())
    }
}

/// Counts fillings whose word is reverse lattice, pruning each time a row is
/// finished (rows `1..=row` read right to left must already be lattice).
struct CountLattice {
    count: u64,
    inner: Partition,
}

impl Visit for CountLattice {
    fn row_done(&mut self, row: usize, grid: &[Vec<usize>]) -> bool {
        let mut seen: Vec<usize> = Vec::new();
        for r in 0..row {
            for &e in grid[r][self.inner.part(r + 1)..].iter().rev() {
                if seen.len() < e {
                    seen.resize(e, 0);
                }
                seen[e - 1] += 1;
                if e > 1 && seen[e - 1] > seen[e - 2] {
                    return false;
                }
            }
        }
        true
    }

    fn complete(&mut self, _: &SkewShape, _: &[Vec<usize>], _: Orientation) -> Result<()> {
        self.count = self.count.checked_add(1).ok_or(Error::Overflow)?;
        Ok(())
    }
}

/// All ordinary semistandard fillings of `shape` with the given content, in
/// row-major order with smaller entries first at each cell.
pub fn enumerate_ssyt(shape: &SkewShape, content: &ContentVector) -> Result<Vec<SkewTableau>> {
    let mut out = Collect(Vec::new());
    Filler::new(shape, content, Orientation::Ordinary).run(&mut out)?;
    Ok(out.0)
}

/// All conjugate fillings (strict rows, weak columns).
pub fn enumerate_conjugate_tableaux(shape: &SkewShape, content: &ContentVector) -> Result<Vec<SkewTableau>> {
    let mut out = Collect(Vec::new());
    Filler::new(shape, content, Orientation::Conjugate).run(&mut out)?;
    Ok(out.0)
}

/// Number of fillings of the given orientation accepted by `keep`.
pub fn count_tableaux(
    shape: &SkewShape,
    content: &ContentVector,
    orientation: Orientation,
    keep: impl FnMut(&SkewTableau) -> bool,
) -> Result<u64> {
    let mut visit = CountIf { keep, count: 0 };
    Filler::new(shape, content, orientation).run(&mut visit)?;
    Ok(visit.count)
}

/// Rows read bottom to top, each left to right.
pub fn word(t: &SkewTableau) -> Vec<usize> {
    t.rows.iter().rev().flatten().copied().collect()
}

/// Every suffix has at least as many `i` as `i + 1`.
pub fn is_reverse_lattice(w: &[usize]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for &e in w.iter().rev() {
        if e == 0 {
            return false;
        }
        if seen.len() < e {
            seen.resize(e, 0);
        }
        seen[e - 1] += 1;
        if e > 1 && seen[e - 1] > seen[e - 2] {
            return false;
        }
    }
    true
}

/// Classical Littlewood-Richardson coefficient `c^ν_{λμ}`: tableaux on `ν/λ`
/// of content `μ` with reverse lattice word.
pub fn classical_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let Some(shape) = SkewShape::new(nu.clone(), lambda.clone()) else { return Ok(0) };
    if shape.cell_count() != mu.weight() {
        return Ok(0);
    }
    let mut visit = CountLattice { count: 0, inner: lambda.clone() };
    Filler::new(&shape, &ContentVector::from(mu), Orientation::Ordinary).run(&mut visit)?;
    Ok(visit.count)
}

/// Kostka number `K^ν_{λμ}`: tableaux on `ν/λ` with content `μ`.
pub fn classical_kostka(lambda: &Partition, mu: &ContentVector, nu: &Partition) -> Result<u64> {
    let Some(shape) = SkewShape::new(nu.clone(), lambda.clone()) else { return Ok(0) };
    count_tableaux(&shape, mu, Orientation::Ordinary, |_| true)
}

/// `s_λ · s_μ` restricted to `ν_1 ≤ k_max` and at most `max_len` rows, built
/// directly as Littlewood-Richardson fillings: the `v`'s form a horizontal
/// strip and, row by row, `#v` in rows `1..=j` never exceeds `#(v−1)` in rows
/// `1..j`.
pub fn lr_expansion(lambda: &Partition, mu: &Partition, k_max: usize, max_len: usize) -> Result<BTreeMap<Partition, u64>> {
    let mut out = BTreeMap::new();
    if lambda.first() > k_max || lambda.len() > max_len {
        return Ok(out);
    }
    let shape: Vec<usize> = lambda.parts().to_vec();
    let mut search = StripSearch { strips: mu.parts(), k_max, max_len, out: &mut out };
    search.place(0, shape, Vec::new())?;
    Ok(out)
}

struct StripSearch<'a> {
    strips: &'a [usize],
    k_max: usize,
    max_len: usize,
    out: &'a mut BTreeMap<Partition, u64>,
}

impl StripSearch<'_> {
    /// Places strip `v` (0-based) on `shape`; `prev` holds per-row counts of
    /// the previous value.
    fn place(&mut self, v: usize, shape: Vec<usize>, prev: Vec<usize>) -> Result<()> {
        if v == self.strips.len() {
            let p = Partition::new(shape)?;
            let slot = self.out.entry(p).or_insert(0);
            *slot = slot.checked_add(1).ok_or(Error::Overflow)?;
            return Ok(());
        }
        let rows = (shape.len() + 1).min(self.max_len);
        let mut added = alloc::vec![0; rows];
        self.strip_rows(v, &shape, &prev, 0, self.strips[v], 0, 0, &mut added)
    }

    #[allow(clippy::too_many_arguments)]
    fn strip_rows(
        &mut self,
        v: usize,
        shape: &[usize],
        prev: &[usize],
        row: usize,
        left: usize,
        cum_here: usize,
        cum_prev_above: usize,
        added: &mut Vec<usize>,
    ) -> Result<()> {
        if left == 0 {
            let mut next: Vec<usize> = shape.to_vec();
            next.resize(added.len().max(shape.len()), 0);
            for (r, a) in added.iter().enumerate() {
                next[r] += a;
            }
            while next.last() == Some(&0) {
                next.pop();
            }
            let counts = added.clone();
            return self.place(v + 1, next, counts);
        }
        if row == added.len() {
            return Ok(());
        }
        let current = shape.get(row).copied().unwrap_or(0);
        let cap = if row == 0 { self.k_max } else { shape[row - 1] };
        let room = cap.saturating_sub(current).min(left);
        for a in 0..=room {
            let cum = cum_here + a;
            if v > 0 && cum > cum_prev_above {
                break;
            }
            added[row] = a;
            let prev_here = prev.get(row).copied().unwrap_or(0);
            self.strip_rows(v, shape, prev, row + 1, left - a, cum, cum_prev_above + prev_here, added)?;
        }
        added[row] = 0;
        Ok(())
    }
}

/// Literal properness: for each entry `i` in column 1, row `l + p`, the box
/// in column `k`, row `p` lies in the inner shape or holds an entry `≤ i`.
pub fn is_proper(t: &SkewTableau, ctx: GrassmannContext) -> bool {
    kth_column_check(t, ctx, |above, i| above <= i)
}

/// Conjugate properness: as [`is_proper`] but with a strict `< i`.
pub fn is_proper_conjugate(t: &SkewTableau, ctx: GrassmannContext) -> bool {
    kth_column_check(t, ctx, |above, i| above < i)
}

fn kth_column_check(t: &SkewTableau, ctx: GrassmannContext, ok: impl Fn(usize, usize) -> bool) -> bool {
    let (l, k) = (ctx.l(), ctx.k());
    let depth = t.shape.outer.column_len(1);
    (l + 1..=depth).all(|row| {
        let Some(i) = t.entry(row, 1) else { return true };
        let p = row - l;
        if t.shape.inner.has_cell(p, k) {
            return true;
        }
        t.entry(p, k).is_some_and(|above| ok(above, i))
    })
}

fn entry_range(t: &SkewTableau) -> usize {
    t.rows.iter().flatten().copied().max().unwrap_or(0)
}

/// Properness through prefix shapes: `ρ(i)~_1 − ρ(i)~_k ≤ l` for every `i`.
pub fn is_proper_via_prefixes(t: &SkewTableau, ctx: GrassmannContext) -> bool {
    (1..=entry_range(t)).all(|i| {
        let cols = t.prefix_columns(i, ctx.k());
        cols[0] <= cols[ctx.k() - 1] + ctx.l()
    })
}

/// Conjugate properness through prefix shapes: `ρ(i)~_1 − ρ(i−1)~_k ≤ l`
/// for every `i`.
///
/// With at most one `i` in column `k` this is `ρ(i)~_1 − ρ(i)~_k ≤ l`, strict
/// when column `k` holds an `i`. Conjugate columns are only weakly
/// increasing, so column `k` may hold several `i`'s and the general form is
/// needed.
pub fn is_proper_conjugate_via_prefixes(t: &SkewTableau, ctx: GrassmannContext) -> bool {
    let k = ctx.k();
    (1..=entry_range(t)).all(|i| {
        let first = t.prefix_columns(i, 1)[0];
        let kth_before = t.prefix_columns(i - 1, k)[k - 1];
        first <= kth_before + ctx.l()
    })
}

/// A count attached to a q-degree, or the absence of any valid degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graded<T> {
    /// No `m ≥ 0` satisfies the degree equation; the count is zero.
    DegreeMismatch,
    Degree { m: usize, value: T },
}

impl<T: Copy + Default> Graded<T> {
    pub fn value(&self) -> T {
        match self {
            Graded::DegreeMismatch => T::default(),
            Graded::Degree { value, .. } => *value,
        }
    }

    pub fn q_degree(&self) -> Option<usize> {
        match self {
            Graded::DegreeMismatch => None,
            Graded::Degree { m, .. } => Some(*m),
        }
    }
}

/// Shape `ν[m]/λ` for the degree-matching `m`, if any.
fn bracket_shape(lambda: &Partition, total: usize, nu: &Partition, ctx: GrassmannContext) -> Result<Option<(usize, Option<SkewShape>)>> {
    ctx.require_fits(lambda)?;
    ctx.require_fits(nu)?;
    let Some(m) = ctx.q_degree(total, nu.weight()) else { return Ok(None) };
    let outer = nu_bracket(nu, m, ctx)?;
    Ok(Some((m, SkewShape::new(outer, lambda.clone()))))
}

/// The shape `ν[m]/λ` on which quantum Kostka numbers count tableaux.
pub fn kostka_shape(lambda: &Partition, mu: &ContentVector, nu: &Partition, ctx: GrassmannContext) -> Result<Option<(usize, Option<SkewShape>)>> {
    let total = lambda.weight().checked_add(mu.total()).ok_or(Error::Overflow)?;
    bracket_shape(lambda, total, nu, ctx)
}

/// Quantum Kostka number: proper ordinary tableaux on `ν[m]/λ` with content
/// `μ`, where `|λ| + Σμ = |ν| + m·n`.
pub fn quantum_kostka(lambda: &Partition, mu: &ContentVector, nu: &Partition, ctx: GrassmannContext) -> Result<Graded<u64>> {
    mu.require_bounded(ctx.k())?;
    let Some((m, shape)) = kostka_shape(lambda, mu, nu, ctx)? else { return Ok(Graded::DegreeMismatch) };
    let value = match shape {
        Some(shape) => count_tableaux(&shape, mu, Orientation::Ordinary, |t| is_proper(t, ctx))?,
        None => 0,
    };
    Ok(Graded::Degree { m, value })
}

/// Conjugate quantum Kostka number: proper conjugate tableaux on `ν[m]/λ`
/// with content `μ`.
pub fn conjugate_quantum_kostka(lambda: &Partition, mu: &ContentVector, nu: &Partition, ctx: GrassmannContext) -> Result<Graded<u64>> {
    mu.require_bounded(ctx.l())?;
    let Some((m, shape)) = kostka_shape(lambda, mu, nu, ctx)? else { return Ok(Graded::DegreeMismatch) };
    let value = match shape {
        Some(shape) => count_tableaux(&shape, mu, Orientation::Conjugate, |t| is_proper_conjugate(t, ctx))?,
        None => 0,
    };
    Ok(Graded::Degree { m, value })
}
