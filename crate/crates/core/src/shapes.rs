//! Partitions, skew shapes and the shape statistics used by the
//! Murnaghan-Nakayama rules.
//!
//! Rows and columns are 1-based throughout, matching the usual English
//! convention for Young diagrams: row 1 is the top row, column 1 the
//! leftmost column.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so `(2,1,0)` and `(2,1)`
/// are the same value. The total order is graded: smaller partitions first,
/// and within one size, lexicographically larger parts first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Parses a comma-separated list such as `"3,2,1"`. The empty string
    /// (or only whitespace) is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| invalid(format!("malformed partition entry {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (1-based); zero past the last nonzero part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Membership in the set of partitions with at most `n` nonzero parts.
    pub fn fits(&self, n: usize) -> bool {
        self.length() <= n
    }

    /// `true` when the diagram of `other` lies inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The parts padded with zeros to length `n`. Panics if the partition
    /// has more than `n` parts.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(self.fits(n), "{self} has more than {n} parts");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// `true` for hooks `(p+1, 1^q)`, including the empty partition.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// All partitions whose diagram fits in a `rows` x `cols` box, in the
    /// graded order.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rows: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if cur.len() == rows {
                return;
            }
            for p in 1..=cap {
                cur.push(p);
                go(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    fn cmp_graded(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_graded(other)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }
}

/// The cells of `Y(outer)` that are not in `Y(inner)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeStats {
    pub size: usize,
    pub rows_occupied: usize,
    pub cols_occupied: usize,
    pub connected: bool,
}

/// Builds `outer/inner`, rejecting pairs where `inner` is not contained in `outer`.
pub fn skew(outer: &Partition, inner: &Partition) -> Result<SkewShape> {
    SkewShape::new(outer.clone(), inner.clone())
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Column interval `(first, last)` occupied in row `i`, if any.
    pub fn row_interval(&self, i: usize) -> Option<(usize, usize)> {
        let (lo, hi) = (self.inner.part(i), self.outer.part(i));
        (hi > lo).then_some((lo + 1, hi))
    }

    /// Nonempty rows, top to bottom.
    pub fn occupied_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.outer.length()).filter(move |&i| self.row_interval(i).is_some())
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.occupied_rows()
            .flat_map(|i| {
                let (a, b) = self.row_interval(i).unwrap();
                (a..=b).map(move |j| Cell::new(i, j))
            })
            .collect()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col > self.inner.part(c.row) && c.col <= self.outer.part(c.row)
    }

    pub fn rows_occupied(&self) -> usize {
        self.occupied_rows().count()
    }

    pub fn cols_occupied(&self) -> usize {
        let mut cols = BTreeSet::new();
        for i in self.occupied_rows() {
            let (a, b) = self.row_interval(i).unwrap();
            cols.extend(a..=b);
        }
        cols.len()
    }

    /// Edge-connectivity. A skew shape is connected iff its nonempty rows
    /// are consecutive and every pair of consecutive rows shares a column.
    pub fn is_connected(&self) -> bool {
        let rows: Vec<usize> = self.occupied_rows().collect();
        rows.windows(2).all(|w| {
            let (i, i1) = (w[0], w[1]);
            i1 == i + 1 && self.outer.part(i1) > self.inner.part(i)
        })
    }

    pub fn stats(&self) -> ShapeStats {
        ShapeStats {
            size: self.size(),
            rows_occupied: self.rows_occupied(),
            cols_occupied: self.cols_occupied(),
            connected: self.is_connected(),
        }
    }

    /// Contains a 2x2 block iff two consecutive rows overlap in two or more columns.
    fn has_square(&self) -> bool {
        (1..self.outer.length()).any(|i| {
            let lo = self.inner.part(i).max(self.inner.part(i + 1));
            let hi = self.outer.part(i).min(self.outer.part(i + 1));
            hi >= lo + 2
        })
    }

    pub fn is_ribbon(&self) -> bool {
        !self.is_empty() && self.is_connected() && !self.has_square()
    }

    /// Number of nonempty rows minus one; defined for ribbons only.
    pub fn height(&self) -> Result<usize> {
        if !self.is_ribbon() {
            return Err(invalid(format!("{self} is not a ribbon")));
        }
        Ok(self.rows_occupied() - 1)
    }

    /// Lowest nonempty row.
    pub fn bottom_row(&self) -> Option<usize> {
        self.occupied_rows().last()
    }

    /// Outer partition of the maximal ribbon along the northwest border.
    ///
    /// Any ribbon `mu/inner` inside the shape satisfies
    /// `mu_i <= min(outer_i, inner_{i-1} + 1)`, and the partition attaining
    /// that bound row by row is itself a ribbon when the shape is connected.
    pub fn nw_ribbon(&self) -> Result<Partition> {
        self.require_connected_nonempty()?;
        let n = self.outer.length();
        let parts = (1..=n)
            .map(|i| {
                let cap = if i == 1 { usize::MAX } else { self.inner.part(i - 1) + 1 };
                self.outer.part(i).min(cap).max(self.inner.part(i))
            })
            .collect();
        Partition::new(parts)
    }

    pub fn max_nw_ribbon_size(&self) -> Result<usize> {
        Ok(self.nw_ribbon()?.size() - self.inner.size())
    }

    /// Exhaustive search over every partition between `inner` and `outer`.
    pub fn max_nw_ribbon_size_oracle(&self) -> Result<usize> {
        self.require_connected_nonempty()?;
        let mut best = 0;
        for mu in partitions_between(&self.inner, &self.outer) {
            let s = SkewShape { outer: mu, inner: self.inner.clone() };
            if s.is_ribbon() {
                best = best.max(s.size());
            }
        }
        Ok(best)
    }

    fn require_connected_nonempty(&self) -> Result<()> {
        if self.is_empty() || !self.is_connected() {
            return Err(invalid(format!("{self} is empty or disconnected")));
        }
        Ok(())
    }

    /// Flood-fill connectivity on the explicit cell set.
    pub fn is_connected_flood(&self) -> bool {
        let cells = self.cells();
        let Some(&start) = cells.first() else {
            return true;
        };
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let nbrs = [
                (c.row + 1, c.col),
                (c.row.wrapping_sub(1), c.col),
                (c.row, c.col + 1),
                (c.row, c.col.wrapping_sub(1)),
            ];
            for (r, col) in nbrs {
                if r == 0 || col == 0 || r == usize::MAX || col == usize::MAX {
                    continue;
                }
                let nb = Cell::new(r, col);
                if set.contains(&nb) && seen.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
        seen.len() == set.len()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Every partition `mu` with `lower <= mu <= upper`, in no particular order.
pub fn partitions_between(lower: &Partition, upper: &Partition) -> Vec<Partition> {
    fn go(i: usize, lower: &Partition, upper: &Partition, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > upper.length() {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        let hi = upper.part(i).min(prev);
        for v in lower.part(i)..=hi {
            cur.push(v);
            go(i + 1, lower, upper, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if upper.contains(lower) {
        go(1, lower, upper, usize::MAX, &mut Vec::new(), &mut out);
    }
    out
}

fn check_mn_args(lambda: &Partition, k: usize, n: usize) -> Result<()> {
    if k < 1 {
        return Err(invalid("k must be at least 1"));
    }
    if n < 1 {
        return Err(invalid("n must be at least 1"));
    }
    if !lambda.fits(n) {
        return Err(invalid(format!("{lambda} has more than {n} parts")));
    }
    Ok(())
}

/// All `nu` with at most `n` parts such that `nu/lambda` is nonempty and
/// connected, spans at most `k` columns, and has a northwest-border ribbon
/// of size at least `k`. Sorted in the graded order.
pub fn enumerate_mn_outer(lambda: &Partition, k: usize, n: usize) -> Result<Vec<Partition>> {
    check_mn_args(lambda, k, n)?;
    let mut out = Vec::new();
    for top in 1..=n {
        for bottom in top..=n {
            // c(nu/lambda) = nu_top - lambda_bottom for a connected block.
            let col_cap = lambda.part(bottom) + k;
            let mut rows = Vec::with_capacity(bottom - top + 1);
            fill_block(lambda, top, bottom, top, lambda.part(top - 1), col_cap, &mut rows, &mut |block| {
                let mut parts = lambda.padded(n);
                parts[top - 1..bottom].copy_from_slice(block);
                let nu = Partition::new(parts).expect("block respects monotonicity");
                let s = SkewShape { outer: nu.clone(), inner: lambda.clone() };
                if s.max_nw_ribbon_size().is_ok_and(|m| m >= k) {
                    out.push(nu);
                }
            });
        }
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill_block(
    lambda: &Partition,
    top: usize,
    bottom: usize,
    i: usize,
    prev: usize,
    col_cap: usize,
    rows: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if i > bottom {
        emit(rows);
        return;
    }
    let mut lo = lambda.part(i) + 1;
    if i > top {
        lo = lo.max(lambda.part(i - 1) + 1);
    }
    let hi = prev.min(col_cap);
    for v in lo..=hi {
        rows.push(v);
        fill_block(lambda, top, bottom, i + 1, v, col_cap, rows, emit);
        rows.pop();
    }
}

/// The members of [`enumerate_mn_outer`] whose skew shape has its lowest
/// nonempty row in row `j`.
pub fn enumerate_mn_outer_row(lambda: &Partition, k: usize, n: usize, j: usize) -> Result<Vec<Partition>> {
    if j < 1 || j > n {
        return Err(invalid(format!("row {j} is outside 1..={n}")));
    }
    Ok(enumerate_mn_outer(lambda, k, n)?
        .into_iter()
        .filter(|nu| {
            let s = SkewShape { outer: nu.clone(), inner: lambda.clone() };
            s.bottom_row() == Some(j)
        })
        .collect())
}

/// All `nu` with at most `n` parts such that `nu/lambda` is a ribbon with
/// `k` cells, found by direct search rather than through the
/// northwest-border machinery.
pub fn enumerate_ribbon_outer(lambda: &Partition, k: usize, n: usize) -> Result<Vec<Partition>> {
    check_mn_args(lambda, k, n)?;
    let upper: Vec<usize> = lambda.padded(n).iter().map(|&p| p + k).collect();
    let upper = Partition::new(upper)?;
    let mut out: Vec<Partition> = partitions_between(lambda, &upper)
        .into_iter()
        .filter(|nu| nu.size() == lambda.size() + k)
        .filter(|nu| SkewShape { outer: nu.clone(), inner: lambda.clone() }.is_ribbon())
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        skew(&p(o), &p(i)).unwrap()
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(Partition::parse("3,2,1").unwrap(), p(&[3, 2, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("2,1,0").unwrap(), p(&[2, 1]));
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("a").is_err());
    }

    #[test]
    fn skew_construction() {
        let s = sk(&[5, 3, 1], &[2, 1]);
        assert_eq!(s.size(), 6);
        assert_eq!(
            s.cells(),
            vec![Cell::new(1, 3), Cell::new(1, 4), Cell::new(1, 5), Cell::new(2, 2), Cell::new(2, 3), Cell::new(3, 1)]
        );
        assert_eq!(sk(&[2, 1], &[2, 1]).size(), 0);
        assert!(matches!(skew(&p(&[2, 1]), &p(&[3])), Err(Error::NotContained { .. })));
    }

    #[test]
    fn stats_examples() {
        let st = sk(&[5, 3, 1], &[2, 1]).stats();
        assert_eq!(st, ShapeStats { size: 6, rows_occupied: 3, cols_occupied: 5, connected: false });
        let st = sk(&[6, 2, 1], &[3, 2, 1]).stats();
        assert_eq!(st, ShapeStats { size: 3, rows_occupied: 1, cols_occupied: 3, connected: true });
        let st = sk(&[], &[]).stats();
        assert_eq!(st, ShapeStats { size: 0, rows_occupied: 0, cols_occupied: 0, connected: true });
    }

    #[test]
    fn ribbon_examples() {
        let s = sk(&[3, 3], &[2]);
        assert!(s.is_ribbon());
        assert_eq!(s.height().unwrap(), 1);
        assert!(!sk(&[2, 2], &[]).is_ribbon());
        assert!(sk(&[2, 2], &[]).height().is_err());
        assert_eq!(sk(&[1, 1, 1], &[]).height().unwrap(), 2);
    }

    #[test]
    fn max_ribbon_examples() {
        assert_eq!(sk(&[4, 4, 1], &[3, 2, 1]).max_nw_ribbon_size().unwrap(), 3);
        assert_eq!(sk(&[5, 5, 1], &[3, 2, 1]).max_nw_ribbon_size().unwrap(), 4);
        assert_eq!(sk(&[6, 2, 1], &[3, 2, 1]).max_nw_ribbon_size_oracle().unwrap(), 3);
        assert_eq!(sk(&[1], &[]).max_nw_ribbon_size_oracle().unwrap(), 1);
        for pp in 0..4 {
            for q in 0..4 {
                let mut parts = vec![pp + 1];
                parts.extend(std::iter::repeat_n(1, q));
                let s = skew(&p(&parts), &Partition::empty()).unwrap();
                assert_eq!(s.max_nw_ribbon_size().unwrap(), pp + q + 1);
            }
        }
        assert!(sk(&[5, 3, 1], &[2, 1]).max_nw_ribbon_size().is_err());
        assert!(sk(&[2], &[2]).max_nw_ribbon_size().is_err());
    }

    #[test]
    fn mn_outer_examples() {
        let got = enumerate_mn_outer(&p(&[3, 2, 1]), 3, 3).unwrap();
        let mut want = vec![
            p(&[6, 2, 1]),
            p(&[4, 4, 1]),
            p(&[5, 4, 1]),
            p(&[5, 5, 1]),
            p(&[3, 3, 3]),
            p(&[4, 4, 3]),
            p(&[4, 4, 4]),
        ];
        want.sort();
        assert_eq!(got, want);

        let got: Vec<_> =
            enumerate_mn_outer(&p(&[2, 1]), 3, 5).unwrap().into_iter().filter(|nu| nu.size() == 6).collect();
        let mut want = vec![p(&[5, 1]), p(&[3, 3]), p(&[2, 2, 2]), p(&[2, 1, 1, 1, 1])];
        want.sort();
        assert_eq!(got, want);

        assert_eq!(enumerate_mn_outer(&p(&[1]), 1, 1).unwrap(), vec![p(&[2])]);
        assert!(enumerate_mn_outer(&p(&[1]), 0, 1).is_err());
    }

    #[test]
    fn mn_outer_row_examples() {
        let l = p(&[3, 2, 1]);
        assert_eq!(enumerate_mn_outer_row(&l, 3, 3, 1).unwrap(), vec![p(&[6, 2, 1])]);
        let mut want = vec![p(&[4, 4, 1]), p(&[5, 4, 1]), p(&[5, 5, 1])];
        want.sort();
        assert_eq!(enumerate_mn_outer_row(&l, 3, 3, 2).unwrap(), want);
        assert!(enumerate_mn_outer_row(&l, 3, 3, 0).is_err());
        assert!(enumerate_mn_outer_row(&l, 3, 3, 4).is_err());
    }

    #[test]
    fn ribbon_outer_from_empty() {
        let got = enumerate_ribbon_outer(&Partition::empty(), 3, 3).unwrap();
        assert_eq!(got, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn graded_order() {
        let mut v = vec![p(&[1, 1]), p(&[3]), p(&[2]), p(&[2, 1]), Partition::empty()];
        v.sort();
        assert_eq!(v, vec![Partition::empty(), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])]);
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(Partition::in_box(3, 3).len(), 20);
    }
}
