//! Semistandard, set-valued and hook-valued tableaux.
//!
//! A hook-valued tableau fills every box of a Young diagram with a small
//! semistandard tableau of hook shape: a head `h`, an arm `h <= a1 <= ... <= ar`
//! to its right and a leg `h < b1 < ... < bl` below it. Boxes are compared by
//! their extreme entries: `T1 <= T2` when `max T1 <= min T2`, and `T1 < T2`
//! when `max T1 < min T2`. Rows weakly increase and columns strictly increase
//! in that order. Set-valued tableaux are the ones with empty arms, and
//! semistandard tableaux the ones with empty arms and legs.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{invalid, Result};
use crate::polyring::{Monomial, Poly};
use crate::shapes::{Cell, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookEntry {
    head: u32,
    arm: Vec<u32>,
    leg: Vec<u32>,
}

impl HookEntry {
    pub fn new(head: u32, arm: Vec<u32>, leg: Vec<u32>) -> Result<Self> {
        if head == 0 {
            return Err(invalid("entries are positive integers"));
        }
        if arm.first().is_some_and(|&a| a < head) || arm.windows(2).any(|w| w[0] > w[1]) {
            return Err(invalid(format!("arm {arm:?} does not weakly increase from {head}")));
        }
        if leg.first().is_some_and(|&b| b <= head) || leg.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(format!("leg {leg:?} does not strictly increase from {head}")));
        }
        Ok(HookEntry { head, arm, leg })
    }

    pub fn single(head: u32) -> Self {
        HookEntry { head, arm: Vec::new(), leg: Vec::new() }
    }

    pub fn head(&self) -> u32 {
        self.head
    }

    pub fn arm(&self) -> &[u32] {
        &self.arm
    }

    pub fn leg(&self) -> &[u32] {
        &self.leg
    }

    pub fn min(&self) -> u32 {
        self.head
    }

    pub fn max(&self) -> u32 {
        let a = self.arm.last().copied().unwrap_or(0);
        let b = self.leg.last().copied().unwrap_or(0);
        self.head.max(a).max(b)
    }

    /// Number of entries in the box.
    pub fn len(&self) -> usize {
        1 + self.arm.len() + self.leg.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn values(&self) -> impl Iterator<Item = u32> + '_ {
        std::iter::once(self.head).chain(self.arm.iter().copied()).chain(self.leg.iter().copied())
    }
}

fn digits(v: &[u32]) -> String {
    v.iter().map(|&e| if e < 10 { e.to_string() } else { format!("{{{e}}}") }).collect()
}

fn parse_digits(t: &str) -> Result<Vec<u32>> {
    let bad = || invalid(format!("bad entry list {t:?}"));
    let mut out = Vec::new();
    let mut chars = t.chars();
    while let Some(c) = chars.next() {
        if c == '{' {
            let num: String = chars.by_ref().take_while(|&c| c != '}').collect();
            out.push(num.parse().map_err(|_| bad())?);
        } else {
            out.push(c.to_digit(10).ok_or_else(bad)?);
        }
    }
    Ok(out)
}

/// `h(arm|leg)`, or just `h` when arm and leg are empty. Arm and leg values
/// are concatenated digits, with values of 10 or more written as `{12}`.
impl fmt::Display for HookEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arm.is_empty() && self.leg.is_empty() {
            write!(f, "{}", self.head)
        } else {
            write!(f, "{}({}|{})", self.head, digits(&self.arm), digits(&self.leg))
        }
    }
}

impl std::str::FromStr for HookEntry {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| t.parse::<u32>().map_err(|_| invalid(format!("bad entry {t:?}")));
        match s.split_once('(') {
            None => HookEntry::new(num(s)?, Vec::new(), Vec::new()),
            Some((h, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(|| invalid(format!("unclosed box {s:?}")))?;
                let (arm, leg) = inner.split_once('|').ok_or_else(|| invalid(format!("missing '|' in {s:?}")))?;
                HookEntry::new(num(h)?, parse_digits(arm)?, parse_digits(leg)?)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookValuedTableau {
    shape: Partition,
    rows: Vec<Vec<HookEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauStats {
    pub weight: Vec<u32>,
    pub arm_total: usize,
    pub leg_total: usize,
    pub total_entries: usize,
}

impl HookValuedTableau {
    /// Builds a tableau from its rows and checks the row and column order.
    pub fn new(rows: Vec<Vec<HookEntry>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let t = HookValuedTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<HookEntry>] {
        &self.rows
    }

    pub fn get(&self, c: Cell) -> Option<&HookEntry> {
        self.rows.get(c.row.checked_sub(1)?)?.get(c.col.checked_sub(1)?)
    }

    /// Weak increase along rows, strict increase down columns.
    pub fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if j > 0 && row[j - 1].max() > e.min() {
                    return Err(invalid(format!("row {} decreases at column {}", i + 1, j + 1)));
                }
                if i > 0 && self.rows[i - 1][j].max() >= e.min() {
                    return Err(invalid(format!("column {} is not strict at row {}", j + 1, i + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn arm_total(&self) -> usize {
        self.entries().map(|e| e.arm.len()).sum()
    }

    pub fn leg_total(&self) -> usize {
        self.entries().map(|e| e.leg.len()).sum()
    }

    pub fn total_entries(&self) -> usize {
        self.entries().map(HookEntry::len).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.entries().map(HookEntry::max).max().unwrap_or(0)
    }

    fn entries(&self) -> impl Iterator<Item = &HookEntry> {
        self.rows.iter().flatten()
    }

    /// Weight vector of length `n`, and the arm and leg totals.
    pub fn statistics(&self, n: usize) -> Result<TableauStats> {
        if self.max_entry() as usize > n {
            return Err(invalid(format!("entry {} exceeds bound {n}", self.max_entry())));
        }
        let mut weight = vec![0u32; n];
        for e in self.entries() {
            for v in e.values() {
                weight[v as usize - 1] += 1;
            }
        }
        Ok(TableauStats {
            weight,
            arm_total: self.arm_total(),
            leg_total: self.leg_total(),
            total_entries: self.total_entries(),
        })
    }
}

/// Boxes separated by spaces, rows by `" / "`.
impl fmt::Display for HookValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl std::str::FromStr for HookValuedTableau {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return HookValuedTableau::new(Vec::new());
        }
        let rows = s
            .split('/')
            .map(|r| r.split_whitespace().map(str::parse).collect::<Result<Vec<HookEntry>>>())
            .collect::<Result<Vec<_>>>()?;
        HookValuedTableau::new(rows)
    }
}

/// Which tableau family to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ssyt,
    Svt,
    /// Hook-valued tableaux with at most `cap` entries in total.
    Hvt {
        cap: usize,
    },
}

/// Depth-first enumeration of tableaux in row-major fill order.
///
/// Each box is chosen from the entries compatible with its left and upper
/// neighbours and with the entry budget left for the remaining boxes.
pub struct TableauIter {
    shape: Partition,
    n: u32,
    family: Family,
    cells: Vec<(usize, usize)>,
    row_start: Vec<usize>,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

struct Frame {
    cands: Vec<HookEntry>,
    idx: usize,
    used: usize,
}

impl TableauIter {
    pub fn new(shape: &Partition, n: usize, family: Family) -> Self {
        let mut cells = Vec::new();
        let mut row_start = Vec::new();
        for (i, &len) in shape.parts().iter().enumerate() {
            row_start.push(cells.len());
            cells.extend((0..len).map(|j| (i, j)));
        }
        let infeasible = matches!(family, Family::Hvt { cap } if cap < shape.size());
        TableauIter {
            shape: shape.clone(),
            n: n as u32,
            family,
            cells,
            row_start,
            stack: Vec::new(),
            started: false,
            done: infeasible,
        }
    }

    fn chosen(&self, idx: usize) -> &HookEntry {
        let f = &self.stack[idx];
        &f.cands[f.idx]
    }

    fn frame_for(&self, pos: usize) -> Frame {
        let (i, j) = self.cells[pos];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(self.chosen(pos - 1).max());
        }
        if i > 0 {
            lo = lo.max(self.chosen(self.row_start[i - 1] + j).max() + 1);
        }
        let used = self.stack.last().map_or(0, |f| f.used + f.cands[f.idx].len());
        let remaining_after = self.cells.len() - pos - 1;
        let (max_arm, max_extra) = match self.family {
            Family::Ssyt => (0, 0),
            Family::Svt => (0, self.n as usize),
            Family::Hvt { cap } => {
                let extra = cap.saturating_sub(used + remaining_after + 1);
                (extra, extra)
            }
        };
        let mut cands = Vec::new();
        for h in lo..=self.n {
            hook_entries(h, self.n, max_arm, max_extra, &mut cands);
        }
        Frame { cands, idx: 0, used }
    }

    /// Moves to the next complete filling; `false` once exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            if self.cells.is_empty() {
                // The single empty tableau; the next call finishes.
                return true;
            }
            let f = self.frame_for(0);
            self.stack.push(f);
        } else if self.cells.is_empty() {
            self.done = true;
            return false;
        } else if let Some(top) = self.stack.last_mut() {
            top.idx += 1;
        }
        loop {
            match self.stack.last() {
                None => {
                    self.done = true;
                    return false;
                }
                Some(top) if top.idx >= top.cands.len() => {
                    self.stack.pop();
                    if let Some(t) = self.stack.last_mut() {
                        t.idx += 1;
                    }
                    continue;
                }
                _ => {}
            }
            if self.stack.len() == self.cells.len() {
                return true;
            }
            let f = self.frame_for(self.stack.len());
            self.stack.push(f);
        }
    }

    fn current(&self) -> HookValuedTableau {
        let mut rows: Vec<Vec<HookEntry>> = self.shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        for (pos, &(i, _)) in self.cells.iter().enumerate() {
            rows[i].push(self.chosen(pos).clone());
        }
        HookValuedTableau { shape: self.shape.clone(), rows }
    }

    /// Weight, arm total and leg total of the current filling.
    fn current_stats(&self) -> (Vec<u32>, u32, u32) {
        let mut w = vec![0u32; self.n as usize];
        let (mut arms, mut legs) = (0, 0);
        for pos in 0..self.cells.len() {
            let e = self.chosen(pos);
            for v in e.values() {
                w[v as usize - 1] += 1;
            }
            arms += e.arm.len() as u32;
            legs += e.leg.len() as u32;
        }
        (w, arms, legs)
    }

    /// Sums `a^{arms} b^{legs} x^{weight}` over the remaining tableaux.
    pub fn generating_function(mut self) -> Poly {
        let n = self.n as usize;
        let mut counts: HashMap<(Vec<u32>, u32, u32), u64> = HashMap::new();
        while self.advance() {
            *counts.entry(self.current_stats()).or_default() += 1;
        }
        let mut p = Poly::zero(n);
        if let Family::Hvt { cap } = self.family {
            p = p.truncate(cap as u32);
        }
        for ((w, a, b), c) in counts {
            p.add_term(Monomial::new(w, a, b), BigInt::from(c));
        }
        p
    }
}

impl Iterator for TableauIter {
    type Item = HookValuedTableau;

    fn next(&mut self) -> Option<HookValuedTableau> {
        self.advance().then(|| self.current())
    }
}

/// Every hook entry with head `h`, values at most `n`, arm length at most
/// `max_arm` and arm plus leg length at most `max_extra`.
fn hook_entries(h: u32, n: u32, max_arm: usize, max_extra: usize, out: &mut Vec<HookEntry>) {
    let mut legs = Vec::new();
    subsets(h + 1, n, max_extra, &mut Vec::new(), &mut legs);
    for leg in legs {
        let arm_budget = max_arm.min(max_extra - leg.len());
        let mut arms = Vec::new();
        multisets(h, n, arm_budget, &mut Vec::new(), &mut arms);
        for arm in arms {
            out.push(HookEntry { head: h, arm, leg: leg.clone() });
        }
    }
}

fn subsets(from: u32, n: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    out.push(cur.clone());
    if cur.len() == max_len {
        return;
    }
    for v in from..=n {
        cur.push(v);
        subsets(v + 1, n, max_len, cur, out);
        cur.pop();
    }
}

fn multisets(from: u32, n: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    out.push(cur.clone());
    if cur.len() == max_len {
        return;
    }
    for v in from..=n {
        cur.push(v);
        multisets(v, n, max_len, cur, out);
        cur.pop();
    }
}

pub fn enumerate_ssyt(shape: &Partition, n: usize) -> TableauIter {
    TableauIter::new(shape, n, Family::Ssyt)
}

pub fn enumerate_svt(shape: &Partition, n: usize) -> TableauIter {
    TableauIter::new(shape, n, Family::Svt)
}

/// Hook-valued tableaux with at most `cap` entries; empty when `cap < |shape|`.
pub fn enumerate_hvt_capped(shape: &Partition, n: usize, cap: usize) -> TableauIter {
    TableauIter::new(shape, n, Family::Hvt { cap })
}
