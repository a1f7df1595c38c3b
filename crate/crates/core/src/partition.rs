//! Partitions, Young-diagram geometry and the `l×k` rectangle.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so the empty partition is `parts == []`
/// and equality is structural. Ordering is lexicographic on the parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping zero parts. Fails if the nonzero parts are
    /// not weakly decreasing or a zero is followed by a positive part.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^r)`, a single column of height `r`.
    pub fn column(r: usize) -> Self {
        Partition { parts: alloc::vec![1; r] }
    }

    /// `(p)`, a single row of length `p`.
    pub fn row(p: usize) -> Self {
        if p == 0 {
            Partition::empty()
        } else {
            Partition { parts: alloc::vec![p] }
        }
    }

    /// Partition from column lengths (the conjugate of `cols`, which need only
    /// be weakly decreasing once zeros are dropped).
    pub fn from_columns(cols: &[usize]) -> Result<Self> {
        Partition::new(cols.to_vec()).map(|c| c.conjugate())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` counted from 1; zero past the end and for `i == 0`.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `λ_1`, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Length of column `j` (1-based), i.e. `λ̃_j`.
    pub fn column_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    /// Column lengths padded (or truncated) to exactly `width` entries.
    pub fn columns(&self, width: usize) -> Vec<usize> {
        (1..=width).map(|j| self.column_len(j)).collect()
    }

    /// `λ̃`: `λ̃_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        Partition { parts: self.columns(self.first()) }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Whether `(row, col)` (both 1-based) is a box of the diagram.
    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    /// All partitions of `weight` with parts `≤ max_part`, at most `max_len`
    /// parts, and containing `lower`, in lexicographically decreasing order.
    pub fn all_bounded(weight: usize, max_part: usize, max_len: usize, lower: &Partition) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        if lower.first() <= max_part && lower.len() <= max_len && lower.weight() <= weight {
            fill_bounded(weight, max_part, max_len, lower, &mut current, &mut out);
        }
        out
    }

    /// All partitions of `weight`, lexicographically decreasing.
    pub fn all_of_weight(weight: usize) -> Vec<Partition> {
        Partition::all_bounded(weight, weight, weight, &Partition::empty())
    }

    /// All partitions inside the rectangle of `ctx`, ordered by weight and
    /// then lexicographically.
    pub fn all_in_rect(ctx: GrassmannContext) -> Vec<Partition> {
        let mut out = Vec::new();
        for w in 0..=ctx.l() * ctx.k() {
            let mut layer = Partition::all_bounded(w, ctx.k(), ctx.l(), &Partition::empty());
            layer.reverse();
            out.extend(layer);
        }
        out
    }
}

fn fill_bounded(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    lower: &Partition,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let row = current.len() + 1;
    // what `lower` still demands from rows `row..`
    let owed: usize = lower.parts.iter().skip(row - 1).sum();
    if remaining == 0 {
        if owed == 0 {
            out.push(Partition { parts: current.clone() });
        }
        return;
    }
    if current.len() == max_len || remaining < owed {
        return;
    }
    let hi = max_part.min(remaining);
    let lo = lower.part(row).max(1);
    let rows_left = max_len - current.len();
    for p in (lo..=hi).rev() {
        // rows after this one can hold at most p each
        if p.saturating_mul(rows_left) < remaining {
            break;
        }
        current.push(p);
        fill_bounded(remaining - p, p, max_len, lower, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition is written `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse(String::new()));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::Parse(s.to_string()))
    }
}

/// The pair `(l, k)` fixing the ring `Λ(l, k)`, with `n = k + l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassmannContext {
    l: usize,
    k: usize,
}

impl GrassmannContext {
    pub fn new(l: usize, k: usize) -> Result<Self> {
        if l == 0 || k == 0 || l.checked_add(k).is_none() {
            return Err(Error::InvalidContext { l, k });
        }
        Ok(GrassmannContext { l, k })
    }

    /// Number of rows of the rectangle.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Number of columns of the rectangle.
    pub fn k(&self) -> usize {
        self.k
    }

    /// `n = k + l`, the degree of `q`.
    pub fn n(&self) -> usize {
        self.l + self.k
    }

    /// The context of `Gr(k, n)`: rows and columns swapped.
    pub fn dual(&self) -> GrassmannContext {
        GrassmannContext { l: self.k, k: self.l }
    }

    pub fn fits(&self, p: &Partition) -> bool {
        fits_in_rect(p, *self)
    }

    pub(crate) fn require_fits(&self, p: &Partition) -> Result<()> {
        if self.fits(p) {
            Ok(())
        } else {
            Err(Error::NotInRectangle { partition: p.clone(), l: self.l, k: self.k })
        }
    }

    /// The q-degree `m` with `total = weight + m·n`, if one exists.
    pub fn q_degree(&self, total: usize, weight: usize) -> Option<usize> {
        let diff = total.checked_sub(weight)?;
        (diff % self.n() == 0).then(|| diff / self.n())
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// `length(p) ≤ l` and `p_1 ≤ k`.
pub fn fits_in_rect(p: &Partition, ctx: GrassmannContext) -> bool {
    p.len() <= ctx.l && p.first() <= ctx.k
}

/// `ν^∨ = (k − ν_l, …, k − ν_1)`, the complement of `ν` in the rectangle.
pub fn complement_dual(p: &Partition, ctx: GrassmannContext) -> Result<Partition> {
    ctx.require_fits(p)?;
    let parts: Vec<usize> = (1..=ctx.l).rev().map(|i| ctx.k - p.part(i)).collect();
    Partition::new(parts)
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

    /// Column counts read straight off the box set.
    fn conjugate_by_box_scan(q: &Partition) -> Vec<usize> {
        let mut cols = Vec::new();
        for (i, &row) in q.parts().iter().enumerate() {
            for j in 0..row {
                if cols.len() <= j {
                    cols.push(0);
                }
                assert_eq!(cols[j], i);
                cols[j] += 1;
            }
        }
        cols
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        let lam = p(&[5, 4, 4, 2, 2]);
        assert_eq!(conjugate_by_box_scan(&lam), vec![5, 5, 3, 3, 1]);
        assert_eq!(lam.conjugate(), p(&[5, 5, 3, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(Partition::new(vec![0, 0]).unwrap(), Partition::empty());
        assert_eq!(Partition::new(vec![1, 2]), Err(Error::NotAPartition));
        assert_eq!(Partition::new(vec![1, 0, 1]), Err(Error::NotAPartition));
    }

    #[test]
    fn rectangle_membership() {
        assert!(fits_in_rect(&Partition::empty(), ctx(1, 1)));
        assert!(fits_in_rect(&p(&[2, 2, 1, 1]), ctx(4, 4)));
        assert!(!fits_in_rect(&p(&[6, 5, 3, 3, 2]), ctx(4, 6)));
        assert!(!fits_in_rect(&p(&[3]), ctx(4, 2)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_dual(&Partition::empty(), ctx(2, 2)).unwrap(), p(&[2, 2]));
        assert_eq!(complement_dual(&p(&[3, 3]), ctx(2, 3)).unwrap(), Partition::empty());
        // 2×3 box complement of (2,1): row 1 keeps 3−1, row 2 keeps 3−2
        assert_eq!(complement_dual(&p(&[2, 1]), ctx(2, 3)).unwrap(), p(&[2, 1]));
        assert!(matches!(
            complement_dual(&p(&[4]), ctx(2, 3)),
            Err(Error::NotInRectangle { .. })
        ));
        for c in [ctx(2, 3), ctx(3, 3), ctx(1, 4)] {
            for lam in Partition::all_in_rect(c) {
                let dual = complement_dual(&lam, c).unwrap();
                assert_eq!(lam.weight() + dual.weight(), c.l() * c.k());
                assert_eq!(complement_dual(&dual, c).unwrap(), lam);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("5,4,4,2,2".parse::<Partition>().unwrap(), p(&[5, 4, 4, 2, 2]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(p(&[4, 2, 2, 1]).to_string(), "4,2,2,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn bounded_enumeration_counts() {
        // p(10) = 42
        assert_eq!(Partition::all_of_weight(10).len(), 42);
        // binomial(l+k, l) partitions in the rectangle
        assert_eq!(Partition::all_in_rect(ctx(3, 3)).len(), 20);
        assert_eq!(Partition::all_in_rect(ctx(2, 4)).len(), 15);
        let lower = p(&[2, 1]);
        for q in Partition::all_bounded(7, 3, 4, &lower) {
            assert!(q.contains(&lower) && q.first() <= 3 && q.len() <= 4 && q.weight() == 7);
        }
        let all = Partition::all_of_weight(7);
        let expected = all
            .iter()
            .filter(|q| q.contains(&lower) && q.first() <= 3 && q.len() <= 4)
            .count();
        assert_eq!(Partition::all_bounded(7, 3, 4, &lower).len(), expected);
    }

    #[test]
    fn q_degree() {
        let c = ctx(5, 5);
        assert_eq!(c.q_degree(23, 3), Some(2));
        assert_eq!(c.q_degree(22, 3), None);
        assert_eq!(c.q_degree(2, 3), None);
        assert_eq!(c.q_degree(3, 3), Some(0));
    }
}
