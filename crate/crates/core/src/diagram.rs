//! Diagram geometry on the lattice and on the cylinder `Z^2 / Z(m, -ell)`.
//!
//! Cells are `(row, col)` with rows growing downward and columns growing to
//! the right. A restricted generalized partition `lambda` of length `m`
//! describes the periodic diagram
//!
//! ```text
//! lambda_hat = { (a, b) : 1 <= a <= m, b <= lambda_a } + Z (m, -ell)
//! ```
//!
//! which is closed under moving up or left. Its image on the cylinder is the
//! cylindric diagram; the strip `1 <= row <= m` is used as the fundamental
//! domain throughout.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: i64,
    pub col: i64,
}

impl Cell {
    pub const fn new(row: i64, col: i64) -> Self {
        Cell { row, col }
    }

    /// Componentwise order on `Z^2`.
    pub fn leq(&self, other: &Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    pub fn down(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn diag(self) -> Cell {
        Cell::new(self.row + 1, self.col + 1)
    }
}

impl Add for Cell {
    type Output = Cell;
    fn add(self, o: Cell) -> Cell {
        Cell::new(self.row + o.row, self.col + o.col)
    }
}

impl Sub for Cell {
    type Output = Cell;
    fn sub(self, o: Cell) -> Cell {
        Cell::new(self.row - o.row, self.col - o.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The period `omega = (m, -ell)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Omega {
    m: i64,
    ell: i64,
}

impl Omega {
    pub fn new(m: i64, ell: i64) -> Result<Self> {
        if m < 1 || ell < 1 {
            return Err(Error::InvalidOmega { m, ell });
        }
        Ok(Omega { m, ell })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn vector(&self) -> Cell {
        Cell::new(self.m, -self.ell)
    }

    /// `cell + k * omega`.
    pub fn shift(&self, cell: Cell, k: i64) -> Cell {
        Cell::new(cell.row + k * self.m, cell.col - k * self.ell)
    }

    /// The `k` with `cell - k * omega` in the strip `1 <= row <= m`.
    pub fn period_of(&self, cell: Cell) -> i64 {
        (cell.row - 1).div_euclid(self.m)
    }
}

/// A point of the cylinder, stored as its unique lift with `1 <= row <= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CylCell {
    row: i64,
    col: i64,
}

impl CylCell {
    pub fn row(&self) -> i64 {
        self.row
    }

    pub fn col(&self) -> i64 {
        self.col
    }

    pub fn lift(&self) -> Cell {
        Cell::new(self.row, self.col)
    }
}

impl fmt::Display for CylCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lift().fmt(f)
    }
}

pub fn canonicalize(cell: Cell, omega: Omega) -> CylCell {
    let k = omega.period_of(cell);
    let c = omega.shift(cell, -k);
    CylCell { row: c.row, col: c.col }
}

/// Induced order on the cylinder: some lifts satisfy `x <= y` componentwise.
///
/// Lifts `x` and `y + k omega` compare iff `(x.row - y.row) / m <= k <= (y.col - x.col) / ell`,
/// so the search over `k` reduces to comparing a ceiling with a floor.
pub fn poset_leq_cyl(x: CylCell, y: CylCell, omega: Omega) -> bool {
    let lo = div_ceil(x.row - y.row, omega.m);
    let hi = (y.col - x.col).div_euclid(omega.ell);
    lo <= hi
}

/// Cover step on the cylinder: some lifts differ by `(1, 0)` or `(0, -1)`.
pub fn arrow_cyl(u: CylCell, v: CylCell, omega: Omega) -> bool {
    let u = u.lift();
    [Cell::new(1, 0), Cell::new(0, -1)]
        .iter()
        .any(|&step| canonicalize(u + step, omega) == v)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// An `ell`-restricted generalized partition of length `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralizedPartition {
    parts: Vec<i64>,
    omega: Omega,
}

/// Checks `parts` against `P_{m, ell}`: length `m`, weakly decreasing, and
/// `parts[0] - parts[m-1] <= ell`.
pub fn validate_partition(parts: &[i64], m: i64, ell: i64) -> Result<GeneralizedPartition> {
    let omega = Omega::new(m, ell)?;
    if parts.len() != m as usize {
        return Err(Error::BadLength {
            expected: m as usize,
            got: parts.len(),
        });
    }
    if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::NotWeaklyDecreasing { index: i + 1 });
    }
    let spread = parts[0] - parts[parts.len() - 1];
    if spread > ell {
        return Err(Error::NotRestricted { spread, ell });
    }
    Ok(GeneralizedPartition {
        parts: parts.to_vec(),
        omega,
    })
}

impl GeneralizedPartition {
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn omega(&self) -> Omega {
        self.omega
    }

    pub fn m(&self) -> i64 {
        self.omega.m
    }

    pub fn ell(&self) -> i64 {
        self.omega.ell
    }

    /// `lambda_a` for `1 <= a <= m`.
    pub fn part(&self, a: i64) -> i64 {
        self.parts[(a - 1) as usize]
    }

    /// Largest column of `lambda_hat` in an arbitrary row; non-increasing in `row`.
    pub fn row_bound(&self, row: i64) -> i64 {
        let k = self.omega.period_of(Cell::new(row, 0));
        self.part(row - k * self.omega.m) - k * self.omega.ell
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col <= self.row_bound(cell.row)
    }

    /// Hook length in `lambda_hat` by counting: arm from the row bound, leg as
    /// the last row (over every residue class) whose bound still reaches the column.
    pub fn hook_length(&self, x: Cell) -> Result<i64> {
        if !self.contains(x) {
            return Err(Error::CellNotInDiagram(x));
        }
        let (m, ell) = (self.omega.m, self.omega.ell);
        let arm = self.row_bound(x.row) - x.col;
        let last_row = (1..=m)
            .map(|r| r + m * (self.part(r) - x.col).div_euclid(ell))
            .max()
            .expect("m >= 1");
        Ok(arm + last_row - x.row + 1)
    }

    pub fn shift(&self, u: Cell) -> Result<GeneralizedPartition> {
        let parts: Vec<i64> = (1..=self.m()).map(|a| self.row_bound(a - u.row) + u.col).collect();
        validate_partition(&parts, self.m(), self.ell()).map_err(|e| Error::NotRepresentable(e.to_string()))
    }
}

pub fn contains_periodic(lambda: &GeneralizedPartition, cell: Cell) -> bool {
    lambda.contains(cell)
}

/// The hook `H(x)`: `x`, the cells below it and the cells to its right that lie
/// in `lambda_hat`. Walks the arm and the leg explicitly; the leg terminates
/// because row bounds drop by `ell` every `m` rows.
pub fn hook_cells_periodic(lambda: &GeneralizedPartition, x: Cell) -> Result<Vec<Cell>> {
    if !lambda.contains(x) {
        return Err(Error::CellNotInDiagram(x));
    }
    let mut cells = Vec::new();
    let mut c = x;
    while lambda.contains(c) {
        cells.push(c);
        c = c.down();
    }
    let mut c = x.right();
    while lambda.contains(c) {
        cells.push(c);
        c = c.right();
    }
    cells.sort();
    Ok(cells)
}

pub fn hook_length_cyl(lambda: &GeneralizedPartition, x: CylCell) -> Result<i64> {
    lambda.hook_length(x.lift())
}

/// An ordinary partition: non-negative, weakly decreasing parts. Trailing
/// zeros are kept so shapes of equal length line up row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p < 0) {
            return Err(Error::NegativePart { index: i + 1 });
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing { index: i + 1 });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `lambda_a` for 1-indexed `a`, zero past the end.
    pub fn part(&self, a: i64) -> i64 {
        if a < 1 {
            return 0;
        }
        self.0.get((a - 1) as usize).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.len() as i64)
            .flat_map(|a| (1..=self.part(a)).map(move |b| Cell::new(a, b)))
            .collect()
    }

    /// Column length `lambda'_b`.
    pub fn column_length(&self, b: i64) -> i64 {
        self.0.iter().take_while(|&&p| p >= b).count() as i64
    }

    pub fn hook_length(&self, x: Cell) -> Result<i64> {
        if !self.contains(x) {
            return Err(Error::CellNotInDiagram(x));
        }
        Ok(self.part(x.row) - x.col + self.column_length(x.col) - x.row + 1)
    }

    pub fn contains_partition(&self, mu: &Partition) -> bool {
        (1..=mu.len().max(self.len()) as i64).all(|a| mu.part(a) <= self.part(a))
    }

    /// The same shape as a generalized partition with a period wide enough
    /// that no wrap-around relation touches it.
    pub fn to_generalized(&self) -> GeneralizedPartition {
        let m = self.len().max(1) as i64;
        let parts: Vec<i64> = (1..=m).map(|a| self.part(a)).collect();
        let ell = (parts[0] - parts[parts.len() - 1]).max(parts[0]).max(1);
        validate_partition(&parts, m, ell).expect("ordinary partition is restricted for wide period")
    }
}

impl From<&GeneralizedPartition> for Vec<i64> {
    fn from(p: &GeneralizedPartition) -> Self {
        p.parts.clone()
    }
}

/// The finite skew diagram `lambda / mu` inside the strip `1 <= row <= m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Vec<i64>,
    inner: Vec<i64>,
    cells: Vec<Cell>,
}

impl SkewShape {
    pub fn new(outer: Vec<i64>, inner: Vec<i64>) -> Result<Self> {
        if outer.len() != inner.len() {
            return Err(Error::BadLength {
                expected: outer.len(),
                got: inner.len(),
            });
        }
        if let Some(i) = outer.iter().zip(&inner).position(|(l, u)| u > l) {
            return Err(Error::NotContained { row: i + 1 });
        }
        let cells = outer
            .iter()
            .zip(&inner)
            .enumerate()
            .flat_map(|(i, (&l, &u))| ((u + 1)..=l).map(move |b| Cell::new(i as i64 + 1, b)))
            .collect();
        Ok(SkewShape { outer, inner, cells })
    }

    pub fn from_partitions(lambda: &Partition, mu: &Partition) -> Result<Self> {
        let m = lambda.len().max(mu.len()) as i64;
        if !lambda.contains_partition(mu) {
            let row = (1..=m).find(|&a| mu.part(a) > lambda.part(a)).unwrap_or(1);
            return Err(Error::NotContained { row: row as usize });
        }
        SkewShape::new(
            (1..=m).map(|a| lambda.part(a)).collect(),
            (1..=m).map(|a| mu.part(a)).collect(),
        )
    }

    pub fn outer(&self) -> &[i64] {
        &self.outer
    }

    pub fn inner(&self) -> &[i64] {
        &self.inner
    }

    pub fn rows(&self) -> i64 {
        self.outer.len() as i64
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1
            && c.row <= self.rows()
            && c.col > self.inner[(c.row - 1) as usize]
            && c.col <= self.outer[(c.row - 1) as usize]
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        if !self.contains(c) {
            return None;
        }
        self.cells.binary_search(&c).ok()
    }
}

pub fn skew_cells(lambda: &GeneralizedPartition, mu: &GeneralizedPartition) -> Result<SkewShape> {
    if lambda.omega != mu.omega {
        return Err(Error::PeriodMismatch);
    }
    SkewShape::new(lambda.parts.clone(), mu.parts.clone())
}

/// ASCII picture of `lambda_hat` (or `lambda_hat / mu_hat`) on a window:
/// `#` for a cell, `.` otherwise.
pub fn render_periodic(
    lambda: &GeneralizedPartition,
    mu: Option<&GeneralizedPartition>,
    rows: std::ops::RangeInclusive<i64>,
    cols: std::ops::RangeInclusive<i64>,
) -> String {
    let mut out = String::new();
    for a in rows {
        for b in cols.clone() {
            let c = Cell::new(a, b);
            let inside = lambda.contains(c) && !mu.is_some_and(|mu| mu.contains(c));
            out.push(if inside { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}
