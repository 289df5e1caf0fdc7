//! The bar `lambda = (n)`, `mu = (0)` with period `(1, -ell)`: a telescoping
//! identity over the index tuples of [`crate::paths::BarTuple`] evaluates `g`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::validate_partition;
use crate::error::{Error, Result};
use crate::paths::bar_split;
use crate::rational::{self, factorial, int, BigRational};
use crate::tableaux::count_restricted;

/// `h(c_i)` for the bar: `(ell + 1) t + j` where `i = ell t + j`, `1 <= j <= ell`.
pub fn bar_hook(ell: i64, i: i64) -> i64 {
    let t = (i - 1).div_euclid(ell);
    let j = i - ell * t;
    (ell + 1) * t + j
}

/// `sum over i_1 >= r+1, i_{k+1} >= i_k + ell + 1, i_q <= bound` of
/// `prod_k 1 / (a_{i_k} a_{i_k + 1} ... a_{i_k + ell})`.
fn tuple_sum(ell: i64, q: i64, r: i64, bound: i64, a: &dyn Fn(i64) -> BigRational) -> BigRational {
    if q == 0 {
        return BigRational::one();
    }
    let lo = r + 1;
    if bound < lo {
        return BigRational::zero();
    }
    let weight = |i: i64| -> BigRational {
        let p = (0..=ell).fold(BigRational::one(), |acc, u| acc * a(i + u));
        p.recip()
    };
    let len = (bound - lo + 1) as usize;
    let w: Vec<BigRational> = (lo..=bound).map(weight).collect();
    // cur[k] = sum of tuples of the current length whose last index is lo + k
    let mut cur = w.clone();
    for _ in 1..q {
        let mut next = vec![BigRational::zero(); len];
        let mut prefix = BigRational::zero();
        for k in 0..len {
            let j = k as i64 - (ell + 1);
            if j >= 0 {
                prefix += &cur[j as usize];
            }
            if !prefix.is_zero() {
                next[k] = &prefix * &w[k];
            }
        }
        cur = next;
    }
    cur.into_iter().fold(BigRational::zero(), |acc, v| acc + v)
}

/// `1 / (q! c^q prod_{u=0}^{ell q - 1} a_{r+1+u})`.
fn tuple_closed(ell: i64, c: i64, q: i64, r: i64, a: &dyn Fn(i64) -> BigRational) -> BigRational {
    let mut den = int(factorial(q as u64)) * int(BigInt::from(c).pow(q as u32));
    for u in 0..ell * q {
        den *= a(r + 1 + u);
    }
    den.recip()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TagawaReport {
    pub ell: i64,
    pub c: i64,
    pub q: i64,
    pub r: i64,
    pub trunc: i64,
    /// Sum over tuples with `i_q <= trunc`.
    #[serde(with = "rational::json")]
    pub lhs: BigRational,
    /// The closed form of the full sum.
    #[serde(with = "rational::json")]
    pub rhs: BigRational,
    /// For `q <= 1`, the exact value of the truncated sum by telescoping.
    #[serde(with = "rational::json::option")]
    pub partial_closed: Option<BigRational>,
    /// `1/prod_{u<ell t} a_{j+u} - 1/prod_{1<=u<=ell t} a_{j+u} = c t / prod_{u<=ell t} a_{j+u}`
    /// for all `1 <= j, t <= 20`.
    pub telescoping_ok: bool,
    pub holds: bool,
}

/// Checks the tuple identity for a sequence with `a_{i+ell} - a_i = c > 0`.
/// The hypotheses are checked on indices `1..=trunc + ell + 21 ell`.
pub fn tagawa_identity_check(
    ell: i64,
    c: i64,
    q: i64,
    r: i64,
    a: &dyn Fn(i64) -> BigRational,
    trunc: i64,
) -> Result<TagawaReport> {
    if ell < 1 || q < 0 || r < 0 {
        return Err(Error::BadSequence(format!(
            "need ell >= 1, q >= 0, r >= 0, got {ell}, {q}, {r}"
        )));
    }
    if c <= 0 {
        return Err(Error::BadSequence(format!(
            "difference c={c} must be positive for a_i to diverge"
        )));
    }
    let top = trunc.max(r + 1) + ell + 21 * ell;
    for i in 1..=top {
        if a(i).is_zero() {
            return Err(Error::BadSequence(format!("a_{i} = 0")));
        }
        if a(i + ell) - a(i) != int(c) {
            return Err(Error::BadSequence(format!("a_{} - a_{i} != {c}", i + ell)));
        }
    }
    let top_needed = top.max(20 + 20 * ell + 1);
    let values: Vec<BigRational> = (0..=top_needed)
        .map(|i| if i == 0 { BigRational::one() } else { a(i) })
        .collect();
    let prod = |from: i64, to: i64| {
        let (num, den) = values[from as usize..=to as usize]
            .iter()
            .fold((BigInt::one(), BigInt::one()), |(n, d), v| {
                (n * v.numer(), d * v.denom())
            });
        BigRational::new(num, den)
    };
    let telescoping_ok = (1..=20).all(|j| {
        (1..=20).all(|t| {
            let lhs = prod(j, j + ell * t - 1).recip() - prod(j + 1, j + ell * t).recip();
            lhs == int(c * t) / prod(j, j + ell * t)
        })
    });
    let lhs = tuple_sum(ell, q, r, trunc, a);
    let rhs = tuple_closed(ell, c, q, r, a);
    let partial_closed = match q {
        0 => Some(BigRational::one()),
        1 if trunc >= r => {
            let head = prod(r + 1, r + ell).recip();
            let tail = prod(trunc + 1, trunc + ell).recip();
            Some((head - tail) / int(c))
        }
        1 => Some(BigRational::zero()),
        _ => None,
    };
    let holds = telescoping_ok && lhs <= rhs && partial_closed.as_ref().is_none_or(|p| *p == lhs);
    Ok(TagawaReport {
        ell,
        c,
        q,
        r,
        trunc,
        lhs,
        rhs,
        partial_closed,
        telescoping_ok,
        holds,
    })
}

/// `g` of the bar over window `window`, through the tuple bijection:
/// `n! / prod_{i<=r} h_i` times the tuple sum with `a_i = h_i` and `i_q <= window + n - ell`.
pub fn bar_window_sum(n: i64, ell: i64, window: i64) -> BigRational {
    let (q, r) = bar_split(n, ell);
    let h = |i: i64| int(bar_hook(ell, i));
    let head = (1..=r).fold(BigRational::one(), |acc, i| acc * h(i));
    int(factorial(n as u64)) / head * tuple_sum(ell, q, r, window + n - ell, &h)
}

/// A lower bound on [`bar_window_sum`]: the same tuple recursion carried out in
/// fixed point with `frac_bits` fractional bits, rounding every step down.
/// Costs `O(q (window + n))` word-sized operations, where the exact sum's
/// denominators grow with the window.
pub fn bar_window_lower_bound(n: i64, ell: i64, window: i64, frac_bits: u32) -> BigRational {
    let (q, r) = bar_split(n, ell);
    let head = (1..=r).fold(BigInt::one(), |acc, i| acc * bar_hook(ell, i));
    let scale = int(factorial(n as u64)) / int(head);
    if q == 0 {
        return scale;
    }
    let lo = r + 1;
    let bound = window + n - ell;
    if bound < lo {
        return BigRational::zero();
    }
    let unit = BigUint::one() << frac_bits;
    let w: Vec<BigUint> = (lo..=bound)
        .map(|i| &unit / (0..=ell).fold(BigUint::one(), |acc, u| acc * bar_hook(ell, i + u) as u64))
        .collect();
    let mut cur = w.clone();
    for _ in 1..q {
        let mut prefix = BigUint::zero();
        let next: Vec<BigUint> = (0..w.len())
            .map(|k| {
                if let Some(j) = k.checked_sub(ell as usize + 1) {
                    prefix += &cur[j];
                }
                (&prefix * &w[k]) >> frac_bits
            })
            .collect();
        cur = next;
    }
    let total: BigUint = cur.iter().sum();
    scale * BigRational::new(BigInt::from(total), BigInt::from(unit))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarReport {
    pub n: i64,
    pub ell: i64,
    pub q: i64,
    pub r: i64,
    #[serde(with = "rational::json")]
    pub f: BigRational,
    /// `q! (ell + 1)^q prod_{u=1}^{q ell + r} h_u`, which is `n! / g`.
    #[serde(with = "rational::json")]
    pub factorial_product: BigRational,
    #[serde(with = "rational::json")]
    pub n_factorial: BigRational,
    /// `g` in closed form.
    #[serde(with = "rational::json")]
    pub g: BigRational,
    pub window: i64,
    #[serde(with = "rational::json")]
    pub g_window: BigRational,
    /// `f - g_window`.
    #[serde(with = "rational::json")]
    pub gap: BigRational,
    pub holds: bool,
}

pub fn bar_formula_check(n: i64, ell: i64, window: i64) -> Result<BarReport> {
    if window < 0 {
        return Err(Error::InvalidWindow(window));
    }
    let lambda = validate_partition(&[n], 1, ell)?;
    let mu = validate_partition(&[0], 1, ell)?;
    let f = int(BigInt::from(count_restricted(&lambda, &mu)?));
    let (q, r) = bar_split(n, ell);
    let h = |i: i64| int(bar_hook(ell, i));
    let hooks = (1..=q * ell + r).fold(BigRational::one(), |acc, u| acc * h(u));
    let factorial_product = int(factorial(q as u64)) * int(BigInt::from(ell + 1).pow(q as u32)) * hooks;
    let n_factorial = int(factorial(n as u64));
    let head = (1..=r).fold(BigRational::one(), |acc, i| acc * h(i));
    let g = &n_factorial / head * tuple_closed(ell, ell + 1, q, r, &h);
    let g_window = bar_window_sum(n, ell, window);
    let gap = &f - &g_window;
    let holds = f.is_one() && factorial_product == n_factorial && g.is_one() && g_window <= f;
    Ok(BarReport {
        n,
        ell,
        q,
        r,
        f,
        factorial_product,
        n_factorial,
        g,
        window,
        g_window,
        gap,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{canonicalize, hook_length_cyl, Omega};
    use crate::excited::CylindricSkew;
    use crate::paths::{bar_cell, enumerate_bar_tuples};
    use crate::rational::{ratio, recip_product};

    #[test]
    fn bar_hooks_match_the_diagram() {
        for ell in 1..=6 {
            for n in 1..=8 {
                let lam = validate_partition(&[n], 1, ell).unwrap();
                let omega = Omega::new(1, ell).unwrap();
                for i in 1..=(10 * ell + ell) {
                    assert_eq!(
                        hook_length_cyl(&lam, canonicalize(bar_cell(n, i), omega)).unwrap(),
                        bar_hook(ell, i),
                        "ell={ell} n={n} i={i}"
                    );
                }
            }
        }
        assert_eq!((1..=5).map(|i| bar_hook(2, i)).collect::<Vec<_>>(), vec![1, 2, 4, 5, 7]);
    }

    #[test]
    fn tuple_dp_matches_enumeration() {
        for ell in 1..=3 {
            for n in 1..=8 {
                let (q, r) = bar_split(n, ell);
                let h = |i: i64| int(bar_hook(ell, i));
                for bound in 0..=14 {
                    let direct = if q == 0 {
                        BigRational::one()
                    } else {
                        enumerate_bar_tuples(ell, n, bound)
                            .unwrap()
                            .iter()
                            .map(|t| {
                                recip_product(t.indices.iter().flat_map(|&i| (i..=i + ell).map(|j| bar_hook(ell, j))))
                            })
                            .fold(BigRational::zero(), |a, b| a + b)
                    };
                    assert_eq!(tuple_sum(ell, q, r, bound, &h), direct, "ell={ell} n={n} bound={bound}");
                }
            }
        }
    }

    #[test]
    fn window_sum_matches_excited_enumeration() {
        for ell in 1..=3 {
            for n in 1..=6 {
                let lam = validate_partition(&[n], 1, ell).unwrap();
                let mu = validate_partition(&[0], 1, ell).unwrap();
                let skew = CylindricSkew::new(&lam, &mu).unwrap();
                for window in 0..=6 {
                    let mut acc = BigRational::zero();
                    skew.walk_layers(window, |layer| {
                        for d in layer {
                            acc += recip_product(d.complement().iter().map(|&c| skew.hook(c)));
                        }
                    });
                    acc *= int(factorial(n as u64));
                    assert_eq!(bar_window_sum(n, ell, window), acc, "ell={ell} n={n} window={window}");
                }
            }
        }
    }

    #[test]
    fn fixed_point_bound_sits_just_below_the_exact_sum() {
        let tiny = ratio(1, 1u64 << 40);
        for ell in 1..=3 {
            for n in 1..=8 {
                for window in [0, 3, 17, 40] {
                    let exact = bar_window_sum(n, ell, window);
                    let low = bar_window_lower_bound(n, ell, window, 64);
                    assert!(low <= exact, "ell={ell} n={n} window={window}");
                    assert!(&exact - &low < tiny, "ell={ell} n={n} window={window}");
                }
            }
        }
        // 2! floor(2^8 / (1 * 3)) / 2^8
        assert_eq!(bar_window_lower_bound(2, 1, 0, 8), ratio(85, 128));
        assert_eq!(bar_window_lower_bound(1, 1, 5, 8), int(1));
    }

    #[test]
    fn odd_reciprocal_series() {
        let a = |i: i64| int(2 * i - 1);
        let rep = tagawa_identity_check(1, 2, 1, 0, &a, 50).unwrap();
        assert_eq!(rep.rhs, ratio(1, 2));
        // sum_{i<=N} 1/((2i-1)(2i+1)) = N/(2N+1)
        assert_eq!(rep.lhs, ratio(50, 101));
        assert!(rep.holds);
    }

    #[test]
    fn identity_holds_on_bar_hooks() {
        for ell in 1..=4 {
            for n in 0..=3 * (ell + 1) {
                let (q, r) = bar_split(n, ell);
                let h = |i: i64| int(bar_hook(ell, i));
                let rep = tagawa_identity_check(ell, ell + 1, q, r, &h, 40).unwrap();
                assert!(rep.holds, "{rep:?}");
                if q == 0 {
                    assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (int(1), int(1)));
                }
            }
        }
    }

    #[test]
    fn bad_sequences() {
        let a = |i: i64| int(i);
        assert!(matches!(
            tagawa_identity_check(1, 2, 1, 0, &a, 5),
            Err(Error::BadSequence(_))
        ));
        let z = |i: i64| int(i - 3);
        assert!(matches!(
            tagawa_identity_check(1, 1, 1, 0, &z, 5),
            Err(Error::BadSequence(_))
        ));
        let d = |i: i64| int(-i);
        assert!(matches!(
            tagawa_identity_check(1, -1, 1, 0, &d, 5),
            Err(Error::BadSequence(_))
        ));
    }

    #[test]
    fn bar_theorem_small() {
        let rep = bar_formula_check(2, 1, 10).unwrap();
        assert_eq!((rep.q, rep.r), (1, 0));
        assert_eq!(rep.factorial_product, int(2));
        assert_eq!(rep.g_window, int(1) - ratio(1, 23));
        assert!(rep.holds);
        let rep = bar_formula_check(1, 1, 0).unwrap();
        assert_eq!(rep.g_window, int(1));
        let rep = bar_formula_check(3, 5, 0).unwrap();
        assert_eq!((rep.q, rep.r, rep.gap.clone()), (0, 3, BigRational::zero()));
        for ell in 1..=6 {
            for n in 1..=8 {
                assert!(bar_formula_check(n, ell, 4).unwrap().holds);
            }
        }
    }
}
