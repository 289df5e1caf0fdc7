//! Excited diagrams: finite ones inside a Young diagram, and cylindric ones
//! inside a cylindric diagram.
//!
//! A cylindric excited diagram `D` is infinite, but `lambda_hat \ D` consists of
//! exactly `n` orbits, so states are stored by that complement (as canonical
//! cells in the strip). An excitation at `y` swaps `y` into the complement and
//! `y + (1, 1)` out of it; seen from the complement, one cell jumps to the
//! upper-left, either from `(a+1, b+1)` to `(a, b)` or, across the seam, from
//! `(1, b+1+ell)` to `(m, b)`. Complement cells therefore only move left, and
//! `sum(row * ell + col * m)` drops by exactly `ell + m` per move, which makes
//! the excitation graph graded: every path to a state has the same length.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{canonicalize, skew_cells, Cell, CylCell, GeneralizedPartition, Omega, Partition, SkewShape};
use crate::error::{Error, Result};

/// A finite excited diagram: the cells of `D` inside an ordinary `lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExcitedDiagram {
    cells: Vec<Cell>,
}

impl ExcitedDiagram {
    pub fn from_partition(mu: &Partition) -> Self {
        ExcitedDiagram { cells: mu.cells() }
    }

    pub fn from_cells(mut cells: Vec<Cell>) -> Self {
        cells.sort();
        cells.dedup();
        ExcitedDiagram { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// `lambda \ D` in row-major order.
    pub fn complement_in(&self, lambda: &Partition) -> Vec<Cell> {
        lambda.cells().into_iter().filter(|&c| !self.contains(c)).collect()
    }
}

fn free_in(lambda: &Partition, d: &ExcitedDiagram, c: Cell) -> bool {
    lambda.contains(c) && !d.contains(c)
}

pub fn active_cells_finite(lambda: &Partition, d: &ExcitedDiagram) -> Vec<Cell> {
    d.cells
        .iter()
        .copied()
        .filter(|&y| [y.right(), y.down(), y.diag()].iter().all(|&c| free_in(lambda, d, c)))
        .collect()
}

pub fn excite_finite(lambda: &Partition, d: &ExcitedDiagram, y: Cell) -> Result<ExcitedDiagram> {
    let active = d.contains(y) && [y.right(), y.down(), y.diag()].iter().all(|&c| free_in(lambda, d, c));
    if !active {
        return Err(Error::NotActive(y));
    }
    let mut cells: Vec<Cell> = d.cells.iter().copied().filter(|&c| c != y).collect();
    cells.push(y.diag());
    Ok(ExcitedDiagram::from_cells(cells))
}

/// `E_lambda(mu)`, sorted by cell list.
pub fn enumerate_excited_finite(lambda: &Partition, mu: &Partition) -> Result<Vec<ExcitedDiagram>> {
    if !lambda.contains_partition(mu) {
        let row = (1..=mu.len() as i64)
            .find(|&a| mu.part(a) > lambda.part(a))
            .unwrap_or(1);
        return Err(Error::NotContained { row: row as usize });
    }
    let start = ExcitedDiagram::from_partition(mu);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut frontier = vec![start];
    while let Some(d) = frontier.pop() {
        for y in active_cells_finite(lambda, &d) {
            let next = excite_finite(lambda, &d, y)?;
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// A cylindric excited diagram, stored by the `n` canonical cells of its complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CylExcitedDiagram {
    complement: Vec<CylCell>,
    depth: u32,
}

impl CylExcitedDiagram {
    pub fn from_complement(cells: &[Cell], omega: Omega, depth: u32) -> Self {
        let mut complement: Vec<CylCell> = cells.iter().map(|&c| canonicalize(c, omega)).collect();
        complement.sort();
        CylExcitedDiagram { complement, depth }
    }

    pub fn complement(&self) -> &[CylCell] {
        &self.complement
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn in_complement(&self, c: CylCell) -> bool {
        self.complement.binary_search(&c).is_ok()
    }

    /// Complement cells as `(row, col)` pairs.
    pub fn cell_pairs(&self) -> Vec<(i64, i64)> {
        self.complement.iter().map(|c| (c.row(), c.col())).collect()
    }
}

/// One depth layer in the JSON stream `{"depth": k, "diagrams": [[[a, b], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub depth: u32,
    pub diagrams: Vec<Vec<(i64, i64)>>,
}

impl Stratum {
    pub fn from_layer(layer: &[CylExcitedDiagram]) -> Self {
        Stratum {
            depth: layer.first().map_or(0, |d| d.depth),
            diagrams: layer.iter().map(|d| d.cell_pairs()).collect(),
        }
    }
}

/// ASCII picture of `d` on a window of the strip: `#` for complement cells
/// (every lift), `o` for cells of `D`, `.` outside `lambda_hat`.
pub fn render_excited(
    lambda: &GeneralizedPartition,
    d: &CylExcitedDiagram,
    rows: std::ops::RangeInclusive<i64>,
    cols: std::ops::RangeInclusive<i64>,
) -> String {
    let omega = lambda.omega();
    let mut out = String::new();
    for a in rows {
        for b in cols.clone() {
            let c = Cell::new(a, b);
            out.push(if !lambda.contains(c) {
                '.'
            } else if d.in_complement(canonicalize(c, omega)) {
                '#'
            } else {
                'o'
            });
        }
        out.push('\n');
    }
    out
}

/// Counters from a windowed walk.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkStats {
    pub states: u64,
    pub max_depth: u32,
    /// No excitation was ever cut off by the window, so the whole (finite) set was visited.
    pub exhausted: bool,
}

/// A cylindric skew shape `lambda_check / mu_check` with its excitation rules.
#[derive(Debug, Clone)]
pub struct CylindricSkew {
    lambda: GeneralizedPartition,
    mu: GeneralizedPartition,
    shape: SkewShape,
    omega: Omega,
    /// Smallest column of `lambda / mu` in the strip; windows are measured from here.
    c0: i64,
}

/// Layers at or above this size are expanded in parallel.
const PAR_THRESHOLD: usize = 64;

impl CylindricSkew {
    pub fn new(lambda: &GeneralizedPartition, mu: &GeneralizedPartition) -> Result<Self> {
        let shape = skew_cells(lambda, mu)?;
        let c0 = shape.cells().iter().map(|c| c.col).min().unwrap_or(0);
        Ok(CylindricSkew {
            lambda: lambda.clone(),
            mu: mu.clone(),
            omega: lambda.omega(),
            shape,
            c0,
        })
    }

    pub fn lambda(&self) -> &GeneralizedPartition {
        &self.lambda
    }

    pub fn mu(&self) -> &GeneralizedPartition {
        &self.mu
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn omega(&self) -> Omega {
        self.omega
    }

    /// Leftmost column of the skew shape; windows are measured from here.
    pub fn c0(&self) -> i64 {
        self.c0
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// The starting state `mu_check`.
    pub fn initial(&self) -> CylExcitedDiagram {
        CylExcitedDiagram::from_complement(self.shape.cells(), self.omega, 0)
    }

    /// Smallest window that retains `d`.
    pub fn window_of(&self, d: &CylExcitedDiagram) -> i64 {
        d.complement.iter().map(|c| self.c0 - c.col()).max().unwrap_or(0).max(0)
    }

    pub fn hook(&self, c: CylCell) -> i64 {
        self.lambda
            .hook_length(c.lift())
            .expect("complement cells lie in lambda")
    }

    fn is_active(&self, d: &CylExcitedDiagram, y: Cell) -> bool {
        let canon = |c: Cell| canonicalize(c, self.omega);
        self.lambda.contains(y)
            && !d.in_complement(canon(y))
            && d.in_complement(canon(y.right()))
            && d.in_complement(canon(y.down()))
            && d.in_complement(canon(y.diag()))
    }

    /// Canonical representatives of the `D`-active orbits.
    pub fn active_cells(&self, d: &CylExcitedDiagram) -> Vec<CylCell> {
        let mut out: Vec<CylCell> = d
            .complement
            .iter()
            .map(|c| Cell::new(c.row(), c.col() - 1))
            .filter(|&y| self.is_active(d, y))
            .map(|y| canonicalize(y, self.omega))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Excites the orbit of `y` (any lift is accepted).
    pub fn excite(&self, d: &CylExcitedDiagram, y: Cell) -> Result<CylExcitedDiagram> {
        let y = canonicalize(y, self.omega).lift();
        if !self.is_active(d, y) {
            return Err(Error::NotActive(y));
        }
        Ok(self.excite_unchecked(d, y))
    }

    fn excite_unchecked(&self, d: &CylExcitedDiagram, y: Cell) -> CylExcitedDiagram {
        let gone = canonicalize(y.diag(), self.omega);
        let mut complement: Vec<CylCell> = d.complement.iter().copied().filter(|&c| c != gone).collect();
        complement.push(canonicalize(y, self.omega));
        complement.sort();
        CylExcitedDiagram {
            complement,
            depth: d.depth + 1,
        }
    }

    /// Successors of `d` inside the window, plus whether any were cut off.
    fn successors(&self, d: &CylExcitedDiagram, min_col: i64) -> (Vec<CylExcitedDiagram>, bool) {
        let mut out = Vec::new();
        let mut cut = false;
        for y in self.active_cells(d) {
            if y.col() < min_col {
                cut = true;
                continue;
            }
            out.push(self.excite_unchecked(d, y.lift()));
        }
        (out, cut)
    }

    /// Visits every state with `window_of <= window`, one depth layer at a time
    /// (each layer sorted). Complement cells only move left, so every such
    /// state is reached through states that also fit the window.
    pub fn walk_layers<F>(&self, window: i64, mut visit: F) -> WalkStats
    where
        F: FnMut(&[CylExcitedDiagram]),
    {
        let min_col = self.c0 - window;
        let mut stats = WalkStats {
            exhausted: true,
            ..WalkStats::default()
        };
        let mut layer = vec![self.initial()];
        while !layer.is_empty() {
            stats.states += layer.len() as u64;
            stats.max_depth = layer[0].depth;
            visit(&layer);
            let expanded: Vec<(Vec<CylExcitedDiagram>, bool)> = if layer.len() >= PAR_THRESHOLD {
                layer.par_iter().map(|d| self.successors(d, min_col)).collect()
            } else {
                layer.iter().map(|d| self.successors(d, min_col)).collect()
            };
            let mut next = Vec::new();
            for (succ, cut) in expanded {
                stats.exhausted &= !cut;
                next.extend(succ);
            }
            if next.len() >= PAR_THRESHOLD {
                next.par_sort_unstable();
            } else {
                next.sort_unstable();
            }
            next.dedup();
            layer = next;
        }
        stats
    }

    /// All states within `window`, grouped by depth.
    pub fn enumerate(&self, window: i64) -> Vec<Vec<CylExcitedDiagram>> {
        let mut strata = Vec::new();
        self.walk_layers(window, |layer| strata.push(layer.to_vec()));
        strata
    }
}

pub fn active_cells_cyl(
    lambda: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    d: &CylExcitedDiagram,
) -> Result<Vec<CylCell>> {
    Ok(CylindricSkew::new(lambda, mu)?.active_cells(d))
}

pub fn excite_cyl(
    lambda: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    d: &CylExcitedDiagram,
    y: CylCell,
) -> Result<CylExcitedDiagram> {
    CylindricSkew::new(lambda, mu)?.excite(d, y.lift())
}

pub fn enumerate_excited_cyl(
    lambda: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    window: i64,
) -> Result<Vec<Vec<CylExcitedDiagram>>> {
    Ok(CylindricSkew::new(lambda, mu)?.enumerate(window))
}

/// Unwindowed reachability, used to cross-check windowed walks: explores the
/// excitation graph up to `max_depth` with a global visited set.
pub fn reachable_within_depth(skew: &CylindricSkew, max_depth: u32) -> HashSet<Vec<CylCell>> {
    let start = skew.initial();
    let mut seen = HashSet::from([start.complement.clone()]);
    let mut frontier = vec![start];
    while let Some(d) = frontier.pop() {
        if d.depth >= max_depth {
            continue;
        }
        for y in skew.active_cells(&d) {
            let next = skew.excite_unchecked(&d, y.lift());
            if seen.insert(next.complement.clone()) {
                frontier.push(next);
            }
        }
    }
    seen
}
