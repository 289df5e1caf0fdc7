//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any criterion fails. Tolerances and runtime budgets are pinned below.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};

use cylhook_core::formulas::{
    bar_formula_check, bar_hook, cyl_partial_sum, f_lms, f_lmst, h_st, hook_formula_check, naruse_rhs, verify_until,
    Method, Verdict,
};
use cylhook_core::paths::{
    bar_cell, count_paths, enumerate_bar_tuples, enumerate_paths, loop_decomposition, nu_k, path_to_excited, psi_bar,
    rectangle,
};
use cylhook_core::rational::{int, ratio};
use cylhook_core::{
    canonicalize, count_linear_extensions, count_restricted, enumerate_excited_cyl, enumerate_excited_finite,
    hook_length_cyl, validate_partition, Cell, CylCell, CylindricSkew, GeneralizedPartition, Partition, SkewShape,
};
use rayon::prelude::*;

/// Tolerance for the cylindric sweep.
const SWEEP_TOL: (i64, i64) = (1, 1_000_000);
/// Work budget per shape in the sweep (states, or tuple-table entries for one-row shapes).
const SWEEP_BUDGET: u64 = 10_000_000;
/// Truncated bar sums must be this close to 1 at window 200.
const BAR_TOL: (i64, i64) = (1, 1_000);
const BAR_WINDOW: i64 = 200;
const HOOK_WINDOW: i64 = 20;
const FLMST_TRUNC: i64 = 60;
/// `f_lmst` gaps must agree with the heuristic tail to within `tail / 100`.
const FLMST_TAIL_REL: i64 = 100;

type Check = Result<String, String>;
/// Id, name, runtime budget, check.
type Criterion = (u32, &'static str, Duration, fn() -> Check);

fn gp(parts: &[i64], m: i64, ell: i64) -> GeneralizedPartition {
    validate_partition(parts, m, ell).expect("valid shape")
}

fn part(parts: &[i64]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// Weakly decreasing sequences of length `len` with entries in `lo..=hi`.
fn decreasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in decreasing(len - 1, lo, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn intro_identity() -> Check {
    let (lam, mu) = (part(&[2, 2]), part(&[1, 0]));
    let rhs = naruse_rhs(&lam, &mu).map_err(|e| e.to_string())?;
    let count = count_linear_extensions(&SkewShape::from_partitions(&lam, &mu).map_err(|e| e.to_string())?);
    if rhs == int(2) && count == 2u32.into() {
        Ok("rhs = 2, linear extensions = 2".into())
    } else {
        Err(format!("rhs = {rhs}, linear extensions = {count}"))
    }
}

fn naruse_sweep() -> Check {
    let shapes = decreasing(4, 0, 4);
    let pairs: Vec<(Vec<i64>, Vec<i64>)> = shapes
        .iter()
        .flat_map(|l| {
            shapes
                .iter()
                .filter(move |u| u.iter().zip(l).all(|(a, b)| a <= b))
                .map(move |u| (l.clone(), u.clone()))
        })
        .collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|(l, u)| {
            let (lam, mu) = (part(l), part(u));
            let rhs = naruse_rhs(&lam, &mu).ok()?;
            let count = int(count_linear_extensions(&SkewShape::from_partitions(&lam, &mu).ok()?));
            (rhs != count).then(|| format!("{l:?}/{u:?}"))
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} pairs in the 4x4 box", pairs.len()))
    } else {
        Err(format!(
            "{} of {} pairs differ, first {}",
            bad.len(),
            pairs.len(),
            bad[0]
        ))
    }
}

fn bar_example_series() -> Check {
    let (lam, mu) = (gp(&[2], 1, 1), gp(&[0], 1, 1));
    let f = int(count_restricted(&lam, &mu).map_err(|e| e.to_string())?);
    let sums = cyl_partial_sum(&lam, &mu, 49).map_err(|e| e.to_string())?;
    for k in 1..=50i64 {
        // window k - 1 holds the first k diagrams
        let p = sums
            .checkpoints
            .iter()
            .find(|p| p.window == k - 1)
            .ok_or(format!("no checkpoint {}", k - 1))?;
        if p.sum != int(1) - ratio(1, 2 * k + 1) {
            return Err(format!("K = {k}: got {}", p.sum));
        }
    }
    if f != int(1) {
        return Err(format!("f = {f}"));
    }
    Ok("g = 1 - 1/(2K+1) for K = 1..50, f = 1".into())
}

fn cylindric_sweep() -> Check {
    let mut cases = Vec::new();
    for m in 1..=3i64 {
        for ell in 1..=3i64 {
            for l in decreasing(m as usize, 0, 4)
                .into_iter()
                .filter(|l| l[0] - l[m as usize - 1] <= ell)
            {
                for u in decreasing(m as usize, 0, 4) {
                    let size: i64 = l.iter().zip(&u).map(|(a, b)| a - b).sum();
                    if u[0] - u[m as usize - 1] <= ell
                        && u.iter().zip(&l).all(|(a, b)| a <= b)
                        && (1..=4).contains(&size)
                    {
                        cases.push((m, ell, l.clone(), u));
                    }
                }
            }
        }
    }
    let tol = ratio(SWEEP_TOL.0, SWEEP_TOL.1);
    let reports: Vec<_> = cases
        .par_iter()
        .map(|(m, ell, l, u)| verify_until(&gp(l, *m, *ell), &gp(u, *m, *ell), &tol, 64, SWEEP_BUDGET))
        .collect();
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut bad = Vec::new();
    for ((m, ell, l, u), r) in cases.iter().zip(&reports) {
        let r = r.as_ref().map_err(|e| format!("{l:?}/{u:?} m={m} ell={ell}: {e}"))?;
        let key = match (r.verdict, r.method) {
            (v, Method::Enumeration) => format!("{v:?}"),
            (v, Method::BarTupleBound) => format!("{v:?} via bar bound"),
        };
        *tally.entry(key).or_default() += 1;
        let decided = matches!(r.verdict, Verdict::ExactPass | Verdict::ConvergedWithinTol);
        if !decided || r.rhs > r.lhs {
            bad.push(format!(
                "{l:?}/{u:?} m={m} ell={ell}: {:?} at window {}",
                r.verdict, r.window
            ));
        }
    }
    let summary = format!("{} shapes, {tally:?}", cases.len());
    if bad.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; undecided: {}", bad.join("; ")))
    }
}

fn bar_theorem() -> Check {
    let tol = ratio(BAR_TOL.0, BAR_TOL.1);
    let mut bad = Vec::new();
    for n in 1..=8 {
        for ell in 1..=6 {
            let r = bar_formula_check(n, ell, BAR_WINDOW).map_err(|e| e.to_string())?;
            let exact = r.f == int(1) && r.factorial_product == r.n_factorial && r.g == int(1);
            if !exact || r.gap > tol || r.gap < int(0) {
                bad.push(format!("n={n} ell={ell} gap={}", cylhook_cli::show(&r.gap)));
            }
        }
    }
    if bad.is_empty() {
        Ok("n <= 8, ell <= 6".into())
    } else {
        Err(format!("{} of 48 cases: {}", bad.len(), bad.join("; ")))
    }
}

fn hook_theorem() -> Check {
    let grid: Vec<(i64, i64)> = (1..=6).flat_map(|ell| (1..=6).map(move |m| (ell, m))).collect();
    let bad: Vec<String> = grid
        .par_iter()
        .filter_map(|&(ell, m)| match hook_formula_check(ell, m, HOOK_WINDOW) {
            Ok(r) if r.holds => None,
            Ok(r) => Some(format!(
                "ell={ell} m={m}: f={} match={} monotone={}",
                r.f, r.strata_match, r.monotone
            )),
            Err(e) => Some(format!("ell={ell} m={m}: {e}")),
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("ell, m <= 6 at window {HOOK_WINDOW}"))
    } else {
        Err(bad.join("; "))
    }
}

fn f_functions() -> Check {
    let mut bad = Vec::new();
    for ell in 1..=6 {
        for m in 1..=6 {
            for s in 1..=6 {
                match f_lms(ell, m, s) {
                    Ok(r) if r.equal => {}
                    other => bad.push(format!("F(ell={ell},m={m};s={s}): {other:?}")),
                }
            }
        }
    }
    let grid: Vec<(i64, i64, i64, i64)> = (1..=6)
        .flat_map(|ell| (1..=6).flat_map(move |m| (1..=5).flat_map(move |s| (1..=5).map(move |t| (ell, m, s, t)))))
        .collect();
    let zero = int(0);
    bad.extend(
        grid.par_iter()
            .filter_map(|&(ell, m, s, t)| {
                let r = match f_lmst(ell, m, s, t, FLMST_TRUNC) {
                    Ok(r) => r,
                    Err(e) => return Some(format!("F(ell={ell},m={m};s={s},t={t}): {e}")),
                };
                let tail_ok = r.tail_estimate.as_ref().is_some_and(|tail| {
                    let diff = &r.gap - tail;
                    let slack = tail / int(FLMST_TAIL_REL);
                    r.gap > zero && diff <= slack && -diff <= slack
                });
                let base_ok = if m == 1 { r.base_case_ok == Some(true) } else { true };
                let ok = tail_ok && r.recurrence_ok && r.remainder_exact != Some(false) && base_ok;
                (!ok).then(|| {
                    format!(
                        "F(ell={ell},m={m};s={s},t={t}): tail_ok={tail_ok} recurrence={} remainder={:?} base={:?}",
                        r.recurrence_ok, r.remainder_exact, r.base_case_ok
                    )
                })
            })
            .collect::<Vec<_>>(),
    );
    if bad.is_empty() {
        Ok(format!(
            "216 closed sums, {} truncated sums at trunc {FLMST_TRUNC}",
            grid.len()
        ))
    } else {
        Err(format!("{} failures, first {}", bad.len(), bad[0]))
    }
}

fn complement_set(layers: &[Vec<cylhook_core::CylExcitedDiagram>]) -> BTreeSet<Vec<CylCell>> {
    layers
        .iter()
        .flatten()
        .map(|d| {
            let mut c = d.complement().to_vec();
            c.sort();
            c
        })
        .collect()
}

fn bijections() -> Check {
    // bar: psi image against the windowed excited set
    let window = 30;
    for n in 1..=8 {
        for ell in 1..=4 {
            let (lam, mu) = (gp(&[n], 1, ell), gp(&[0], 1, ell));
            let excited = complement_set(&enumerate_excited_cyl(&lam, &mu, window).map_err(|e| e.to_string())?);
            let image: BTreeSet<Vec<CylCell>> = enumerate_bar_tuples(ell, n, window + n - ell)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|t| psi_bar(t).map(|d| complement_set(&[vec![d]]).into_iter().next().unwrap()))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            if image != excited {
                return Err(format!(
                    "bar n={n} ell={ell}: {} images, {} excited",
                    image.len(),
                    excited.len()
                ));
            }
        }
    }
    // hook: path strata against excited strata
    let shifts = 10;
    for ell in 1..=4 {
        for m in 1..=4 {
            let lam = rectangle(ell, m).map_err(|e| e.to_string())?;
            let mut inner = vec![ell; m as usize];
            inner[m as usize - 1] = 0;
            let mu = gp(&inner, m, ell);
            let skew = CylindricSkew::new(&lam, &mu).map_err(|e| e.to_string())?;
            let mut by_window: BTreeMap<i64, BTreeSet<Vec<CylCell>>> = BTreeMap::new();
            for layer in skew.enumerate(shifts) {
                for d in &layer {
                    let mut c = d.complement().to_vec();
                    c.sort();
                    by_window.entry(skew.window_of(d)).or_default().insert(c);
                }
            }
            for (i, paths) in loop_decomposition(&lam, shifts) {
                let loops: BTreeSet<Vec<CylCell>> = paths
                    .iter()
                    .map(|p| {
                        let mut c: Vec<CylCell> = p.cells().iter().map(|&x| canonicalize(x, lam.omega())).collect();
                        c.sort();
                        c
                    })
                    .collect();
                let diagrams = by_window.remove(&i).unwrap_or_default();
                if paths.len() != diagrams.len() || loops != diagrams {
                    return Err(format!(
                        "hook ell={ell} m={m} shift {i}: {} paths, {} diagrams",
                        paths.len(),
                        diagrams.len()
                    ));
                }
            }
        }
    }
    // finite: L((1, ell+1), (m, k+1)) against E(nu^(k)) in the rectangle
    for ell in 1..=4 {
        for m in 1..=4 {
            let outer = part(&vec![ell + 1; m as usize]);
            for k in 0..=ell.min(4) {
                let (u, v) = (Cell::new(1, ell + 1), Cell::new(m, k + 1));
                let mut excited: Vec<_> =
                    enumerate_excited_finite(&outer, &nu_k(ell, m, k)).map_err(|e| e.to_string())?;
                excited.sort_by(|a, b| a.cells().cmp(b.cells()));
                let mut image: Vec<_> = enumerate_paths(u, v)
                    .iter()
                    .map(|p| path_to_excited(p, ell, m, k))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                image.sort_by(|a, b| a.cells().cmp(b.cells()));
                if count_paths(u, v) as usize != excited.len() || image != excited {
                    return Err(format!("finite ell={ell} m={m} k={k}"));
                }
            }
        }
    }
    Ok("bar (n <= 8, ell <= 4, window 30), hook (ell, m <= 4, 10 shifts), finite (ell, m, k <= 4)".into())
}

fn hook_laws() -> Check {
    let mut checked = 0;
    for ell in 1..=6 {
        let omega_lam = gp(&[8], 1, ell);
        for n in 1..=8 {
            let lam = gp(&[n], 1, ell);
            for t in 0..=10 {
                for j in 1..=ell {
                    let c = canonicalize(bar_cell(n, ell * t + j), omega_lam.omega());
                    let h = hook_length_cyl(&lam, c).map_err(|e| e.to_string())?;
                    if h != (ell + 1) * t + j || bar_hook(ell, ell * t + j) != h {
                        return Err(format!("bar n={n} ell={ell} t={t} j={j}: h = {h}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    for ell in 1..=5 {
        for m in 1..=5 {
            let lam = rectangle(ell, m).map_err(|e| e.to_string())?;
            for row in 1..=3 * m {
                for col in (ell + 1 - 3 * ell)..=(ell + 1) {
                    let x = Cell::new(row, col);
                    if !lam.contains(x) {
                        continue;
                    }
                    let Ok(h) = h_st(x, m, ell, 1, ell + m) else { continue };
                    if h != hook_length_cyl(&lam, canonicalize(x, lam.omega())).map_err(|e| e.to_string())? {
                        return Err(format!("hook ell={ell} m={m} x={x}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} cells"))
}

fn cli_json(args: &[&str], jobs: &str) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cylhook"))
        .args(args)
        .args(["--json", "--jobs", jobs])
        .env_remove("CYLHOOK_JOBS")
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn determinism() -> Check {
    let commands: &[&[&str]] = &[
        &["verify-naruse", "--lambda", "2,2", "--mu", "1,0"],
        &["verify-naruse", "--lambda", "4,3,3,1", "--mu", "2,1"],
        &[
            "verify-cyl",
            "--lambda",
            "2",
            "--mu",
            "0",
            "--m",
            "1",
            "--ell",
            "1",
            "--window",
            "49",
            "--tol",
            "1e-2",
        ],
        &[
            "verify-cyl",
            "--lambda",
            "4,3,2",
            "--mu",
            "2,2,0",
            "--m",
            "3",
            "--ell",
            "2",
            "--window",
            "16",
            "--tol",
            "1e-6",
            "--max-states",
            "200000",
        ],
        &[
            "verify-cyl",
            "--lambda",
            "4",
            "--mu",
            "0",
            "--m",
            "1",
            "--ell",
            "1",
            "--window",
            "8",
            "--tol",
            "1e-3",
            "--max-states",
            "20000",
        ],
        &["formula", "--kind", "bar", "--n", "7", "--ell", "2"],
        &["formula", "--kind", "hook", "--ell", "4", "--m", "3"],
        &["formula", "--kind", "flms", "--ell", "3", "--m", "4", "--s", "2"],
        &[
            "formula", "--kind", "flmst", "--ell", "3", "--m", "2", "--s", "2", "--t", "3",
        ],
        &[
            "excited", "--lambda", "6", "--mu", "0", "--m", "1", "--ell", "2", "--window", "12",
        ],
        &["excited", "--lambda", "3,3,3", "--mu", "2,1"],
        &[
            "tableaux", "--lambda", "4,3,2", "--mu", "2,1,0", "--m", "3", "--ell", "2",
        ],
    ];
    for args in commands {
        let first = cli_json(args, "1")?;
        for jobs in ["4", "1", "4"] {
            if cli_json(args, jobs)? != first {
                return Err(format!("{args:?} differs at --jobs {jobs}"));
            }
        }
        if first.0 == 2 || first.1.is_empty() {
            return Err(format!("{args:?} exited {} with no report", first.0));
        }
    }
    Ok(format!("{} commands, jobs 1 and 4, repeated", commands.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "intro identity", Duration::from_secs(1), intro_identity),
        (2, "finite hook formula sweep", Duration::from_secs(120), naruse_sweep),
        (3, "bar example series", Duration::from_secs(1), bar_example_series),
        (4, "cylindric sweep n <= 4", Duration::from_secs(600), cylindric_sweep),
        (5, "bar theorem", Duration::from_secs(60), bar_theorem),
        (6, "hook theorem", Duration::from_secs(120), hook_theorem),
        (7, "F-function suite", Duration::from_secs(120), f_functions),
        (8, "bijections", Duration::from_secs(600), bijections),
        (9, "hook-length laws", Duration::from_secs(600), hook_laws),
        (10, "determinism across jobs", Duration::from_secs(600), determinism),
    ];
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; took {elapsed:.1?}, budget {budget:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("criterion {id}: PASS {name} ({detail}; {elapsed:.1?})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id}: FAIL {name} ({detail}; {elapsed:.1?})");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
