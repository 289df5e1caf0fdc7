//! Reverse standard tableaux (linear extensions) of finite skew shapes and
//! their `ell`-restricted variants.
//!
//! A filling `eps` of `lambda / mu` with `1..=n` is valid when entries strictly
//! decrease to the right along rows and downward along columns. It is
//! `ell`-restricted when additionally `eps(1, b) < eps(m, b - ell)` for every
//! such pair of cells; these are exactly the tableaux of the cylindric shape.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::diagram::{skew_cells, Cell, GeneralizedPartition, Omega, SkewShape};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    /// Entry of `shape.cells()[i]`.
    entries: Vec<u32>,
}

impl Tableau {
    /// Builds a tableau from entries listed in the shape's row-major cell order.
    pub fn new(shape: SkewShape, entries: Vec<u32>) -> Result<Self> {
        let n = shape.n();
        if entries.len() != n {
            return Err(Error::InvalidTableau(format!(
                "{} entries for {} cells",
                entries.len(),
                n
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries are not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        let t = Tableau { shape, entries };
        for (i, &c) in t.shape.cells().iter().enumerate() {
            for nb in [c.right(), c.down()] {
                if let Some(j) = t.shape.index_of(nb) {
                    if t.entries[i] <= t.entries[j] {
                        return Err(Error::InvalidTableau(format!(
                            "entry at {c} is not larger than the entry at {nb}"
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn from_cells(shape: SkewShape, entries: &[(Cell, u32)]) -> Result<Self> {
        let mut vals = vec![0; shape.n()];
        for &(c, v) in entries {
            let i = shape.index_of(c).ok_or(Error::CellNotInDiagram(c))?;
            vals[i] = v;
        }
        Tableau::new(shape, vals)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.shape.index_of(c).map(|i| self.entries[i])
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.shape.cells().iter().copied().zip(self.entries.iter().copied())
    }

    /// The entry-increasing filling `eps -> n + 1 - eps`.
    pub fn reversed_entries(&self) -> Vec<u32> {
        let n = self.entries.len() as u32;
        self.entries.iter().map(|&v| n + 1 - v).collect()
    }

    /// Grid picture with blanks for the inner shape.
    pub fn render(&self) -> String {
        let width = self.entries.len().to_string().len().max(1);
        let min_col = self
            .shape
            .inner()
            .iter()
            .zip(self.shape.outer())
            .filter(|(u, l)| l > u)
            .map(|(u, _)| u + 1)
            .min()
            .unwrap_or(1);
        let mut out = String::new();
        for (i, (&u, &l)) in self.shape.inner().iter().zip(self.shape.outer()).enumerate() {
            let a = i as i64 + 1;
            let mut line = String::new();
            for b in min_col..=l {
                let cell = if b <= u {
                    format!("{:>width$}", ".")
                } else {
                    format!("{:>width$}", self.get(Cell::new(a, b)).unwrap_or(0))
                };
                if !line.is_empty() {
                    line.push(' ');
                }
                line.push_str(&cell);
            }
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

#[derive(Serialize)]
struct ShapeRepr<'a> {
    outer: &'a [i64],
    inner: &'a [i64],
}

#[derive(Serialize)]
struct TableauRepr<'a> {
    shape: ShapeRepr<'a>,
    entries: Vec<(i64, i64, u32)>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr {
            shape: ShapeRepr {
                outer: self.shape.outer(),
                inner: self.shape.inner(),
            },
            entries: self.iter().map(|(c, v)| (c.row, c.col, v)).collect(),
        }
        .serialize(s)
    }
}

/// All tableaux of `shape`, in lexicographic order of the row-major entry vector.
pub fn enumerate_linear_extensions(shape: &SkewShape) -> LinearExtensions {
    LinearExtensions::new(shape.clone())
}

/// Lazy lexicographic enumerator. Each partial filling is extended only when
/// a completion exists, so every step of the search yields a tableau.
pub struct LinearExtensions {
    shape: SkewShape,
    /// Row-major indices of the left and upper neighbours of each cell.
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    vals: Vec<u32>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl LinearExtensions {
    fn new(shape: SkewShape) -> Self {
        let cells = shape.cells();
        let left = cells
            .iter()
            .map(|&c| shape.index_of(Cell::new(c.row, c.col - 1)))
            .collect();
        let above = cells
            .iter()
            .map(|&c| shape.index_of(Cell::new(c.row - 1, c.col)))
            .collect();
        let n = shape.n();
        LinearExtensions {
            shape,
            left,
            above,
            vals: Vec::with_capacity(n),
            used: vec![false; n + 1],
            started: false,
            done: false,
        }
    }

    fn bound(&self, pos: usize) -> u32 {
        let n = self.shape.n() as u32;
        [self.left[pos], self.above[pos]]
            .iter()
            .flatten()
            .map(|&j| self.vals[j])
            .min()
            .unwrap_or(n + 1)
    }

    /// Whether the cells after the current prefix can still be filled.
    ///
    /// Unfilled cells only carry upper bounds from filled ones, so this is unit
    /// scheduling with deadlines and precedence: tighten each deadline against
    /// the cells that must exceed it, then earliest-deadline-first decides.
    fn completable(&self) -> bool {
        let n = self.shape.n();
        let start = self.vals.len();
        if start == n {
            return true;
        }
        let free: Vec<u32> = (1..=n as u32).filter(|&v| !self.used[v as usize]).collect();
        let mut deadline = vec![0usize; n];
        for pos in start..n {
            let mut d = usize::MAX;
            for j in [self.left[pos], self.above[pos]].into_iter().flatten() {
                let lim = if j < start {
                    free.partition_point(|&v| v < self.vals[j])
                } else {
                    deadline[j].saturating_sub(1)
                };
                d = d.min(lim);
            }
            deadline[pos] = d.min(free.len());
        }
        let mut ds: Vec<usize> = deadline[start..].to_vec();
        ds.sort_unstable();
        ds.iter().enumerate().all(|(i, &d)| i < d)
    }

    /// Fills positions from the current prefix onward, trying values `>= from`
    /// at the first open position.
    fn descend(&mut self, mut from: u32) -> bool {
        let n = self.shape.n();
        loop {
            let pos = self.vals.len();
            if pos == n {
                return true;
            }
            let bound = self.bound(pos);
            let mut placed = false;
            for v in from..bound {
                if self.used[v as usize] {
                    continue;
                }
                self.vals.push(v);
                self.used[v as usize] = true;
                if self.completable() {
                    placed = true;
                    break;
                }
                self.vals.pop();
                self.used[v as usize] = false;
            }
            if placed {
                from = 1;
                continue;
            }
            match self.vals.pop() {
                Some(prev) => {
                    self.used[prev as usize] = false;
                    from = prev + 1;
                }
                None => return false,
            }
        }
    }
}

impl Iterator for LinearExtensions {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.descend(1)
        } else {
            match self.vals.pop() {
                Some(last) => {
                    self.used[last as usize] = false;
                    self.descend(last + 1)
                }
                None => false,
            }
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(Tableau {
            shape: self.shape.clone(),
            entries: self.vals.clone(),
        })
    }
}

/// Pairs `((1, b), (m, b - ell))` of cells that the restriction compares.
fn wrap_pairs(shape: &SkewShape, omega: Omega) -> Vec<(Cell, Cell)> {
    let m = omega.m();
    shape
        .cells()
        .iter()
        .filter(|c| c.row == 1)
        .map(|&c| (c, Cell::new(m, c.col - omega.ell())))
        .filter(|(_, d)| shape.contains(*d))
        .collect()
}

pub fn is_restricted_extension(t: &Tableau, omega: Omega) -> bool {
    wrap_pairs(&t.shape, omega)
        .iter()
        .all(|&(top, bottom)| t.get(top) < t.get(bottom))
}

/// `ell`-restricted tableaux of `lambda / mu`, lexicographically ordered.
pub fn enumerate_restricted(
    lambda: &GeneralizedPartition,
    mu: &GeneralizedPartition,
) -> Result<impl Iterator<Item = Tableau>> {
    let shape = skew_cells(lambda, mu)?;
    let omega = lambda.omega();
    Ok(enumerate_linear_extensions(&shape).filter(move |t| is_restricted_extension(t, omega)))
}

pub fn count_linear_extensions(shape: &SkewShape) -> BigUint {
    count_fillings(shape, None)
}

/// `f` of the cylindric skew shape: the number of `ell`-restricted tableaux.
pub fn count_restricted(lambda: &GeneralizedPartition, mu: &GeneralizedPartition) -> Result<BigUint> {
    let shape = skew_cells(lambda, mu)?;
    Ok(count_fillings(&shape, Some(lambda.ell())))
}

/// Counts fillings by placing `1, 2, ..., n` in turn. The filled cells always
/// form a suffix of each row, so a state is the vector of suffix lengths; a
/// cell may be filled once its lower neighbour is (and, with the restriction,
/// once the wrapped cell `(1, col + ell)` above a bottom-row cell is).
fn count_fillings(shape: &SkewShape, wrap: Option<i64>) -> BigUint {
    let rows = shape.rows() as usize;
    let outer = shape.outer();
    let inner = shape.inner();
    let len: Vec<i64> = outer.iter().zip(inner).map(|(l, u)| l - u).collect();
    let filled = |k: &[u16], a: usize, col: i64| -> bool {
        // cell (a+1, col) in 1-indexed rows is row index `a` here
        col > outer[a] - k[a] as i64
    };
    let in_row = |a: usize, col: i64| col > inner[a] && col <= outer[a];

    let mut layer: HashMap<Vec<u16>, BigUint> = HashMap::new();
    layer.insert(vec![0; rows], BigUint::one());
    for _ in 0..shape.n() {
        let mut next: HashMap<Vec<u16>, BigUint> = HashMap::with_capacity(layer.len() * 2);
        for (k, ways) in &layer {
            for a in 0..rows {
                if k[a] as i64 >= len[a] {
                    continue;
                }
                let col = outer[a] - k[a] as i64;
                if a + 1 < rows && in_row(a + 1, col) && !filled(k, a + 1, col) {
                    continue;
                }
                if let Some(ell) = wrap {
                    if a + 1 == rows && in_row(0, col + ell) && !filled(k, 0, col + ell) {
                        continue;
                    }
                }
                let mut k2 = k.clone();
                k2[a] += 1;
                *next.entry(k2).or_insert_with(BigUint::zero) += ways;
            }
        }
        layer = next;
    }
    layer.into_values().fold(BigUint::zero(), |acc, v| acc + v)
}
