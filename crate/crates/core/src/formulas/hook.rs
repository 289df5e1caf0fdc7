//! The hook case `lambda = ((ell+1)^m)`, `mu = (ell^(m-1), 0)` and the weighted
//! path sums `F_(ell,m;s)` and `F_(ell,m;s,t)` that evaluate its series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{validate_partition, Cell};
use crate::error::{Error, Result};
use crate::excited::CylindricSkew;
use crate::formulas::series::periodic_tail_estimate;
use crate::paths::count_paths;
use crate::rational::{self, binomial, factorial, int, recip_product, BigRational, TreeSum};
use crate::tableaux::count_restricted;

/// `ell + m - a - b + 2`: the hook length of `(a, b)` in the rectangle `((ell+1)^m)`.
pub fn h_ml(x: Cell, m: i64, ell: i64) -> i64 {
    ell + m - x.row - x.col + 2
}

/// `ell + m - a - b + (d - c) t + s + 1` where `x = (a + c m, b - d ell)` with
/// `1 <= a <= m`, `2 <= b <= ell + 1` and `c, d >= 0`.
pub fn h_st(x: Cell, m: i64, ell: i64, s: i64, t: i64) -> Result<i64> {
    let c = (x.row - 1).div_euclid(m);
    let a = x.row - c * m;
    let d = (ell + 1 - x.col).div_euclid(ell);
    let b = x.col + d * ell;
    if c < 0 || d < 0 {
        return Err(Error::NoDecomposition(x));
    }
    Ok(ell + m - a - b + (d - c) * t + s + 1)
}

/// `sum over paths from u to v (steps down and left) of prod 1/weight(x)`.
/// Zero when `v` is not weakly below-left of `u`.
pub fn path_sum(u: Cell, v: Cell, weight: &dyn Fn(Cell) -> i64) -> BigRational {
    if v.row < u.row || v.col > u.col {
        return BigRational::zero();
    }
    let rows = (v.row - u.row + 1) as usize;
    let cols = (u.col - v.col + 1) as usize;
    let cell = |i: usize, j: usize| Cell::new(u.row + i as i64, v.col + j as i64);
    // p[i][j]: sum over paths from cell(i, j) to v
    let mut p = vec![vec![BigRational::zero(); cols]; rows];
    for i in (0..rows).rev() {
        for j in 0..cols {
            let onward = if i + 1 == rows && j == 0 {
                BigRational::one()
            } else {
                let down = if i + 1 < rows {
                    p[i + 1][j].clone()
                } else {
                    BigRational::zero()
                };
                let left = if j > 0 {
                    p[i][j - 1].clone()
                } else {
                    BigRational::zero()
                };
                down + left
            };
            p[i][j] = onward / int(weight(cell(i, j)));
        }
    }
    p[0][cols - 1].clone()
}

fn h_weight(m: i64, ell: i64, s: i64, t: i64) -> impl Fn(Cell) -> i64 {
    move |x| h_st(x, m, ell, s, t).expect("path cells lie in rows 1..=m and columns <= ell + 1")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlmsReport {
    pub ell: i64,
    pub m: i64,
    pub s: i64,
    #[serde(with = "rational::json")]
    pub sum: BigRational,
    #[serde(with = "rational::json")]
    pub closed: BigRational,
    pub equal: bool,
}

/// `(s-1)! / (ell+m+s-2)! * C(ell+m-2, m-1)`.
pub fn f_lms_closed(ell: i64, m: i64, s: i64) -> BigRational {
    BigRational::new(factorial((s - 1) as u64), factorial((ell + m + s - 2) as u64)) * int(binomial(ell + m - 2, m - 1))
}

/// `(s-1)! / ((ell+m+s-2)! t) * C(ell+m-2, m-1)`.
pub fn f_lmst_closed(ell: i64, m: i64, s: i64, t: i64) -> BigRational {
    f_lms_closed(ell, m, s) / int(t)
}

fn f_lms_sum(ell: i64, m: i64, s: i64) -> BigRational {
    path_sum(Cell::new(1, ell + 1), Cell::new(m, 2), &|x| h_ml(x, m, ell) + s - 1)
}

fn check_positive(vals: &[(&str, i64)]) -> Result<()> {
    match vals.iter().find(|(_, v)| *v < 1) {
        Some((name, v)) => Err(Error::BadSequence(format!("{name} must be >= 1, got {v}"))),
        None => Ok(()),
    }
}

/// Sum over `L((1, ell+1), (m, 2))` weighted by `h_(m,ell) + s - 1`, against its closed form.
pub fn f_lms(ell: i64, m: i64, s: i64) -> Result<FlmsReport> {
    check_positive(&[("ell", ell), ("m", m), ("s", s)])?;
    let sum = f_lms_sum(ell, m, s);
    let closed = f_lms_closed(ell, m, s);
    Ok(FlmsReport {
        ell,
        m,
        s,
        equal: sum == closed,
        sum,
        closed,
    })
}

/// Stratum `i` of `F_(ell,m;s,t)`: paths `L((1, ell+1-i), (m, 1-i))`. Zero for `m = 0`.
fn stratum(ell: i64, m: i64, s: i64, t: i64, i: i64) -> BigRational {
    if m == 0 {
        return BigRational::zero();
    }
    path_sum(Cell::new(1, ell + 1 - i), Cell::new(m, 1 - i), &h_weight(m, ell, s, t))
}

/// Paths `L((1, ell+1-i), (m, 2-i))` with `h^(s,t)` weights; these telescope
/// the strata and `A_0 = F_(ell,m;s)`.
fn head(ell: i64, m: i64, s: i64, t: i64, i: i64) -> BigRational {
    path_sum(Cell::new(1, ell + 1 - i), Cell::new(m, 2 - i), &h_weight(m, ell, s, t))
}

fn truncated(ell: i64, m: i64, s: i64, t: i64, trunc: i64) -> BigRational {
    (0..=trunc)
        .map(|i| stratum(ell, m, s, t, i))
        .collect::<TreeSum>()
        .total()
}

/// `F_(ell,m;s,t) - (strata 0..=trunc)` written through the finitely many
/// `A_(trunc+1)` terms of the recurrence, or `None` when some `t - k + 1`
/// (`1 <= k <= m`) vanishes.
fn exact_remainder(ell: i64, m: i64, s: i64, t: i64, trunc: i64) -> Option<BigRational> {
    if m == 0 {
        return Some(BigRational::zero());
    }
    let denom = t - m + 1;
    if denom == 0 {
        return None;
    }
    let lower_up = exact_remainder(ell, m - 1, s + 1, t, trunc)?;
    let lower = exact_remainder(ell, m - 1, s, t, trunc)?;
    Some((head(ell, m, s, t, trunc + 1) + lower_up - lower) / int(denom))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlmstReport {
    pub ell: i64,
    pub m: i64,
    pub s: i64,
    pub t: i64,
    pub trunc: i64,
    #[serde(with = "rational::json")]
    pub truncated_sum: BigRational,
    #[serde(with = "rational::json")]
    pub closed: BigRational,
    /// `closed - truncated_sum`.
    #[serde(with = "rational::json")]
    pub gap: BigRational,
    /// Heuristic tail from the last three periods of strata.
    #[serde(with = "rational::json::option")]
    pub tail_estimate: Option<BigRational>,
    /// `truncated_sum + remainder == closed`, with the remainder built from
    /// boundary path sums; `None` when the recurrence divides by zero.
    pub remainder_exact: Option<bool>,
    /// `(t-m+1) T = F_(ell,m;s) - A_(trunc+1) + T(ell,m-1;s+1,t) - T(ell,m-1;s,t)`
    /// on truncations `T` at the same shift.
    pub recurrence_ok: bool,
    /// For `m = 1`: `T + A_(trunc+1)/t == 1 / (t s (s+1) ... (s+ell-1))`.
    pub base_case_ok: Option<bool>,
}

pub fn f_lmst(ell: i64, m: i64, s: i64, t: i64, trunc: i64) -> Result<FlmstReport> {
    check_positive(&[("ell", ell), ("m", m), ("s", s), ("t", t)])?;
    if trunc < 0 {
        return Err(Error::InvalidWindow(trunc));
    }
    let strata: Vec<BigRational> = (0..=trunc).map(|i| stratum(ell, m, s, t, i)).collect();
    let truncated_sum = strata.iter().cloned().collect::<TreeSum>().total();
    let closed = f_lmst_closed(ell, m, s, t);
    let tail_estimate = periodic_tail_estimate(&strata, ell as usize).ok();
    let remainder_exact = exact_remainder(ell, m, s, t, trunc).map(|r| &truncated_sum + r == closed);
    let lhs = &truncated_sum * int(t - m + 1);
    let rhs = f_lms_sum(ell, m, s) - head(ell, m, s, t, trunc + 1) + truncated(ell, m - 1, s + 1, t, trunc)
        - truncated(ell, m - 1, s, t, trunc);
    let base_case_ok = (m == 1).then(|| {
        let limit = &truncated_sum + head(ell, 1, s, t, trunc + 1) / int(t);
        limit == recip_product((0..ell).map(|k| s + k)) / int(t)
    });
    Ok(FlmstReport {
        ell,
        m,
        s,
        t,
        trunc,
        gap: &closed - &truncated_sum,
        truncated_sum,
        closed,
        tail_estimate,
        remainder_exact,
        recurrence_ok: lhs == rhs,
        base_case_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumCheck {
    pub shift: i64,
    pub paths: u64,
    pub diagrams: u64,
    #[serde(with = "rational::json")]
    pub path_sum: BigRational,
    #[serde(with = "rational::json")]
    pub diagram_sum: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookReport {
    pub ell: i64,
    pub m: i64,
    pub n: i64,
    #[serde(with = "rational::json")]
    pub f: BigRational,
    #[serde(with = "rational::json")]
    pub binomial: BigRational,
    /// `n! F_(ell,m;1,ell+m)` in closed form.
    #[serde(with = "rational::json")]
    pub g_closed: BigRational,
    pub window: i64,
    /// `g` over windows `0..=window`, from the excited diagrams.
    #[serde(with = "rational::json::vec")]
    pub partial_sums: Vec<BigRational>,
    /// Per window, the path stratum next to the excited stratum (unscaled).
    pub strata: Vec<StratumCheck>,
    pub strata_match: bool,
    pub monotone: bool,
    pub holds: bool,
}

pub fn hook_formula_check(ell: i64, m: i64, window: i64) -> Result<HookReport> {
    check_positive(&[("ell", ell), ("m", m)])?;
    if window < 0 {
        return Err(Error::InvalidWindow(window));
    }
    let lam = validate_partition(&vec![ell + 1; m as usize], m, ell)?;
    let mut inner = vec![ell; m as usize];
    inner[m as usize - 1] = 0;
    let mu = validate_partition(&inner, m, ell)?;
    let n = ell + m;
    let f = int(BigInt::from(count_restricted(&lam, &mu)?));
    let binom = int(binomial(ell + m - 2, m - 1));
    let scale = int(factorial(n as u64));
    let g_closed = &scale * f_lmst_closed(ell, m, 1, ell + m);

    let skew = CylindricSkew::new(&lam, &mu)?;
    let mut by_window: BTreeMap<i64, (u64, TreeSum)> = BTreeMap::new();
    skew.walk_layers(window, |layer| {
        for d in layer {
            let e = by_window.entry(skew.window_of(d)).or_default();
            e.0 += 1;
            e.1.push(recip_product(d.complement().iter().map(|&c| skew.hook(c))));
        }
    });
    let weight = h_weight(m, ell, 1, ell + m);
    let mut strata = Vec::new();
    let mut partial_sums = Vec::new();
    let mut acc = BigRational::zero();
    for i in 0..=window {
        let (u, v) = (Cell::new(1, ell + 1 - i), Cell::new(m, 1 - i));
        let (diagrams, diagram_sum) = by_window
            .remove(&i)
            .map(|(k, sum)| (k, sum.total()))
            .unwrap_or((0, BigRational::zero()));
        acc += &diagram_sum * &scale;
        partial_sums.push(acc.clone());
        strata.push(StratumCheck {
            shift: i,
            paths: count_paths(u, v),
            diagrams,
            path_sum: path_sum(u, v, &weight),
            diagram_sum,
        });
    }
    let strata_match = strata
        .iter()
        .all(|s| s.paths == s.diagrams && s.path_sum == s.diagram_sum);
    let monotone = partial_sums.windows(2).all(|w| w[0] < w[1]) && partial_sums.last().is_some_and(|g| *g < binom);
    let holds = f == binom && g_closed == binom && strata_match && monotone;
    Ok(HookReport {
        ell,
        m,
        n,
        f,
        binomial: binom,
        g_closed,
        window,
        partial_sums,
        strata,
        strata_match,
        monotone,
        holds,
    })
}
