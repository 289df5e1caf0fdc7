//! Lattice paths, bar-case index tuples, and the explicit bijections that
//! describe excited diagrams of bars and hooks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{
    arrow_cyl, canonicalize, validate_partition, Cell, CylCell, GeneralizedPartition, Omega, Partition,
};
use crate::error::{Error, Result};
use crate::excited::{CylExcitedDiagram, ExcitedDiagram};
use crate::rational::binomial;

const DOWN: Cell = Cell::new(1, 0);
const LEFT: Cell = Cell::new(0, -1);

/// A chain of cells joined by unit steps down `(1, 0)` or left `(0, -1)`.
/// Serializes as `{"start": {"row": a, "col": b}, "steps": "DLL"}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "PathRepr", try_from = "PathRepr")]
pub struct LatticePath {
    cells: Vec<Cell>,
}

#[derive(Serialize, Deserialize)]
struct PathRepr {
    start: Cell,
    steps: String,
}

impl From<LatticePath> for PathRepr {
    fn from(p: LatticePath) -> Self {
        PathRepr {
            start: p.start(),
            steps: p.steps(),
        }
    }
}

impl TryFrom<PathRepr> for LatticePath {
    type Error = Error;

    fn try_from(r: PathRepr) -> Result<Self> {
        LatticePath::from_steps(r.start, &r.steps)
    }
}

impl LatticePath {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        if let Some(w) = cells.windows(2).find(|w| w[1] - w[0] != DOWN && w[1] - w[0] != LEFT) {
            return Err(Error::InvalidPath(format!("step from {} to {}", w[0], w[1])));
        }
        Ok(LatticePath { cells })
    }

    /// Path from `start` following a word over `D` (down) and `L` (left).
    pub fn from_steps(start: Cell, steps: &str) -> Result<Self> {
        let mut cells = vec![start];
        let mut cur = start;
        for ch in steps.chars() {
            cur = match ch {
                'D' => cur + DOWN,
                'L' => cur + LEFT,
                _ => return Err(Error::InvalidPath(format!("unknown step {ch:?}"))),
            };
            cells.push(cur);
        }
        Ok(LatticePath { cells })
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

    pub fn start(&self) -> Cell {
        self.cells[0]
    }

    pub fn end(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }

    pub fn steps(&self) -> String {
        self.cells
            .windows(2)
            .map(|w| if w[1] - w[0] == DOWN { 'D' } else { 'L' })
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start(), self.steps())
    }
}

/// Number of paths from `u` to `v`.
pub fn count_paths(u: Cell, v: Cell) -> u64 {
    let down = v.row - u.row;
    let left = u.col - v.col;
    if down < 0 || left < 0 {
        return 0;
    }
    u64::try_from(binomial(down + left, down)).expect("path count fits in u64")
}

/// `L(u, v)` in lexicographic order of step words (`D` before `L`); empty
/// unless `v` is weakly below and weakly left of `u`.
pub fn enumerate_paths(u: Cell, v: Cell) -> Vec<LatticePath> {
    let down = v.row - u.row;
    let left = u.col - v.col;
    let mut out = Vec::new();
    if down < 0 || left < 0 {
        return out;
    }
    fn rec(word: &mut String, down: i64, left: i64, start: Cell, out: &mut Vec<LatticePath>) {
        if down == 0 && left == 0 {
            out.push(LatticePath::from_steps(start, word).expect("valid word"));
            return;
        }
        if down > 0 {
            word.push('D');
            rec(word, down - 1, left, start, out);
            word.pop();
        }
        if left > 0 {
            word.push('L');
            rec(word, down, left - 1, start, out);
            word.pop();
        }
    }
    rec(&mut String::new(), down, left, u, &mut out);
    out
}

/// `c_i = (1, n - i + 1)`: the `i`-th cell of the bar counted from its right end.
pub fn bar_cell(n: i64, i: i64) -> Cell {
    Cell::new(1, n - i + 1)
}

/// An index tuple `(i_1, ..., i_q)` with `i_1 >= r + 1` and gaps `>= ell + 1`,
/// where `n = q (ell + 1) + r` and `0 <= r <= ell`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarTuple {
    pub n: i64,
    pub ell: i64,
    pub q: i64,
    pub r: i64,
    pub indices: Vec<i64>,
}

/// `(q, r)` with `n = q (ell + 1) + r`, `0 <= r <= ell`.
pub fn bar_split(n: i64, ell: i64) -> (i64, i64) {
    (n.div_euclid(ell + 1), n.rem_euclid(ell + 1))
}

impl BarTuple {
    pub fn new(n: i64, ell: i64, indices: Vec<i64>) -> Result<Self> {
        if n < 1 || ell < 1 {
            return Err(Error::InvalidTuple(format!(
                "need n >= 1 and ell >= 1, got n={n}, ell={ell}"
            )));
        }
        let (q, r) = bar_split(n, ell);
        if indices.len() as i64 != q {
            return Err(Error::InvalidTuple(format!(
                "expected {q} indices, got {}",
                indices.len()
            )));
        }
        if let Some(&first) = indices.first() {
            if first < r + 1 {
                return Err(Error::InvalidTuple(format!("first index {first} is below {}", r + 1)));
            }
        }
        if let Some(w) = indices.windows(2).find(|w| w[1] - w[0] < ell + 1) {
            return Err(Error::InvalidTuple(format!(
                "indices {} and {} are closer than {}",
                w[0],
                w[1],
                ell + 1
            )));
        }
        Ok(BarTuple { n, ell, q, r, indices })
    }

    /// The tuple of `mu_check`: `i_k = (k - 1)(ell + 1) + r + 1`.
    pub fn minimal(n: i64, ell: i64) -> Result<Self> {
        let (q, r) = bar_split(n, ell);
        BarTuple::new(n, ell, (0..q).map(|k| k * (ell + 1) + r + 1).collect())
    }

    /// Number of single-index increments from the minimal tuple.
    pub fn depth(&self) -> i64 {
        (0..self.q)
            .zip(&self.indices)
            .map(|(k, &i)| i - (k * (self.ell + 1) + self.r + 1))
            .sum()
    }
}

/// Every tuple with `i_q <= bound`, in lexicographic order.
pub fn enumerate_bar_tuples(ell: i64, n: i64, bound: i64) -> Result<Vec<BarTuple>> {
    let (q, r) = bar_split(n, ell);
    let mut out = Vec::new();
    fn rec(acc: &mut Vec<i64>, lo: i64, q: i64, ell: i64, bound: i64, out: &mut Vec<Vec<i64>>) {
        if acc.len() as i64 == q {
            out.push(acc.clone());
            return;
        }
        let remaining = q - acc.len() as i64 - 1;
        let hi = bound - remaining * (ell + 1);
        for i in lo..=hi {
            acc.push(i);
            rec(acc, i + ell + 1, q, ell, bound, out);
            acc.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), r + 1, q, ell, bound, &mut raw);
    for idx in raw {
        out.push(BarTuple::new(n, ell, idx)?);
    }
    Ok(out)
}

/// `C(bound - (q-1) ell - r, q)`, the size of `enumerate_bar_tuples`.
pub fn count_bar_tuples(ell: i64, n: i64, bound: i64) -> u64 {
    let (q, r) = bar_split(n, ell);
    if q == 0 {
        return 1;
    }
    u64::try_from(binomial(bound - (q - 1) * ell - r, q)).expect("count fits in u64")
}

/// The cylindric excited diagram of the bar `(n)` over `(0)` with period
/// `(1, -ell)` whose complement is `[c_1, c_r]` together with the blocks
/// `[c_{i_k}, c_{i_k + ell}]`.
pub fn psi_bar(t: &BarTuple) -> Result<CylExcitedDiagram> {
    let t = BarTuple::new(t.n, t.ell, t.indices.clone())?;
    let omega = Omega::new(1, t.ell)?;
    let mut cells: Vec<Cell> = (1..=t.r).map(|i| bar_cell(t.n, i)).collect();
    for &i in &t.indices {
        cells.extend((i..=i + t.ell).map(|j| bar_cell(t.n, j)));
    }
    let depth = u32::try_from(t.depth()).map_err(|_| Error::InvalidTuple("depth out of range".into()))?;
    Ok(CylExcitedDiagram::from_complement(&cells, omega, depth))
}

/// Inverse of [`psi_bar`]: reads the block starts off a complement.
pub fn psi_bar_inverse(n: i64, ell: i64, d: &CylExcitedDiagram) -> Result<BarTuple> {
    let (_, r) = bar_split(n, ell);
    let mut idx: Vec<i64> = d.complement().iter().map(|c| n - c.col() + 1).collect();
    idx.sort();
    if idx.len() as i64 != n || idx[..r as usize] != (1..=r).collect::<Vec<_>>()[..] {
        return Err(Error::InvalidTuple("complement is not a bar configuration".into()));
    }
    let rest = &idx[r as usize..];
    let mut starts = Vec::new();
    for block in rest.chunks(ell as usize + 1) {
        if block.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(Error::InvalidTuple("complement blocks are not contiguous".into()));
        }
        starts.push(block[0]);
    }
    BarTuple::new(n, ell, starts)
}

/// `((ell + 1)^m)`.
pub fn rectangle(ell: i64, m: i64) -> Result<GeneralizedPartition> {
    validate_partition(&vec![ell + 1; m as usize], m, ell)
}

/// `nu^(k) = (ell^(m-1), k)`.
pub fn nu_k(ell: i64, m: i64, k: i64) -> Partition {
    let mut parts = vec![ell; m as usize];
    parts[m as usize - 1] = k;
    Partition::new(parts).expect("0 <= k <= ell")
}

/// `p -> lambda \ p` for `p` in `L((1, ell+1), (m, k+1))` and `lambda = ((ell+1)^m)`;
/// the image is an excited diagram of `nu^(k)`.
pub fn path_to_excited(p: &LatticePath, ell: i64, m: i64, k: i64) -> Result<ExcitedDiagram> {
    let (u, v) = (Cell::new(1, ell + 1), Cell::new(m, k + 1));
    if p.start() != u || p.end() != v {
        return Err(Error::BadEndpoints(format!(
            "path runs {} to {}, expected {u} to {v}",
            p.start(),
            p.end()
        )));
    }
    let lambda = Partition::new(vec![ell + 1; m as usize])?;
    let on_path = |c: &Cell| p.cells().contains(c);
    Ok(ExcitedDiagram::from_cells(
        lambda.cells().into_iter().filter(|c| !on_path(c)).collect(),
    ))
}

/// Recovers the path from `lambda \ D`, ordered from the top-right end.
pub fn excited_to_path(d: &ExcitedDiagram, ell: i64, m: i64) -> Result<LatticePath> {
    let lambda = Partition::new(vec![ell + 1; m as usize])?;
    let mut cells = d.complement_in(&lambda);
    cells.sort_by_key(|c| (c.row, -c.col));
    LatticePath::new(cells)
}

/// A cyclic chain `u_1 -> u_2 -> ... -> u_n -> u_1` on the cylinder.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Loop {
    cells: Vec<CylCell>,
}

impl Loop {
    pub fn cells(&self) -> &[CylCell] {
        &self.cells
    }

    pub fn is_closed(&self, omega: Omega) -> bool {
        let n = self.cells.len();
        n == (omega.m() + omega.ell()) as usize
            && (0..n).all(|k| arrow_cyl(self.cells[k], self.cells[(k + 1) % n], omega))
    }
}

/// Projects a path onto the cylinder, keeping its order.
pub fn project(p: &LatticePath, omega: Omega) -> Loop {
    Loop {
        cells: p.cells().iter().map(|&c| canonicalize(c, omega)).collect(),
    }
}

/// For each shift `i = 0..=max_shift`, the paths of `L((1, lambda_1 - i), (m, lambda_1 - ell - i))`
/// that stay inside `lambda_hat`. Their projections are the complements of
/// the cylindric excited diagrams of `((ell+1)^m) / (ell^(m-1), 0)`.
pub fn loop_decomposition(lambda: &GeneralizedPartition, max_shift: i64) -> Vec<(i64, Vec<LatticePath>)> {
    let (m, ell) = (lambda.m(), lambda.ell());
    let top = lambda.part(1);
    (0..=max_shift)
        .map(|i| {
            let paths = enumerate_paths(Cell::new(1, top - i), Cell::new(m, top - ell - i))
                .into_iter()
                .filter(|p| p.cells().iter().all(|&c| lambda.contains(c)))
                .collect();
            (i, paths)
        })
        .collect()
}
