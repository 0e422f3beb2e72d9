//! Loop and Kronecker quivers: reflections, normalization into the window
//! `d1 <= d2 <= (m/2) d1`, the inequality chain used to rule out criterion
//! failures, and exhaustive scans over `(m, d)` grids.
//!
//! Kronecker scans use the stability `Theta = (1, 0)`. A cell is scanned on
//! its normalized representative; cells whose orbit hits a zero entry, and
//! normalized vectors `(np, nq)` with `mpq - p^2 - q^2 < 0`, are skipped.
//! Failures are reported once per normalized representative, together with
//! the grid cells that reflect onto it.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quiver::{euler_form, DimensionVector, Quiver, Stability};
use crate::stability::check_ample_stability_criterion;

pub type Pair = (u64, u64);

/// `(m, d)` for `K_m`, with `d = (np, nq)` and `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KroneckerInstance {
    pub m: u64,
    pub d: Pair,
}

impl KroneckerInstance {
    pub fn new(m: u64, d: Pair) -> Result<Self> {
        if d == (0, 0) {
            return Err(Error::domain("Kronecker dimension vector must be nonzero"));
        }
        Ok(KroneckerInstance { m, d })
    }

    pub fn n(&self) -> u64 {
        self.d.0.gcd(&self.d.1)
    }

    /// `(p, q) = d / n`.
    pub fn primitive(&self) -> Pair {
        let n = self.n();
        (self.d.0 / n, self.d.1 / n)
    }

    pub fn is_normalized(&self) -> bool {
        let (d1, d2) = self.d;
        d1 <= d2 && 2 * d2 <= self.m * d1
    }

    /// `m p q - p^2 - q^2`; negative means the stable locus is empty or a
    /// point.
    pub fn discriminant(&self) -> i128 {
        let (p, q) = self.primitive();
        let (m, p, q) = (self.m as i128, p as i128, q as i128);
        m * p * q - p * p - q * q
    }
}

/// `(d1, d2) -> (m d2 - d1, d2)`.
pub fn kronecker_reflect_source(m: u64, d: Pair) -> Result<Pair> {
    let top = m
        .checked_mul(d.1)
        .ok_or_else(|| Error::domain("reflection overflow"))?;
    let d1 = top
        .checked_sub(d.0)
        .ok_or_else(|| Error::domain(format!("source reflection of {d:?} leaves the positive cone for m = {m}")))?;
    Ok((d1, d.1))
}

/// `(d1, d2) -> (d1, m d1 - d2)`.
pub fn kronecker_reflect_sink(m: u64, d: Pair) -> Result<Pair> {
    let top = m
        .checked_mul(d.0)
        .ok_or_else(|| Error::domain("reflection overflow"))?;
    let d2 = top
        .checked_sub(d.1)
        .ok_or_else(|| Error::domain(format!("sink reflection of {d:?} leaves the positive cone for m = {m}")))?;
    Ok((d.0, d2))
}

pub fn kronecker_dualize(d: Pair) -> Pair {
    (d.1, d.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Dualize,
    ReflectSink,
    ReflectSource,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalization {
    Normalized { d: Pair, trace: Vec<Move> },
    /// The orbit reached a zero entry, left the cone, or cycled.
    DegenerateOrbit { last: Pair, trace: Vec<Move> },
}

impl Normalization {
    pub fn normalized(&self) -> Option<Pair> {
        match self {
            Normalization::Normalized { d, .. } => Some(*d),
            Normalization::DegenerateOrbit { .. } => None,
        }
    }
}

/// Moves `d` into the window `d1 <= d2 <= (m/2) d1` by dualizing when
/// `d1 > d2` and sink-reflecting when `2 d2 > m d1`. Each sink reflection
/// strictly lowers `d1 + d2`, so the walk terminates.
pub fn normalize_kronecker(m: u64, d: Pair) -> Result<Normalization> {
    if m < 3 {
        return Err(Error::domain("normalization is defined for m >= 3"));
    }
    if d == (0, 0) {
        return Err(Error::domain("Kronecker dimension vector must be nonzero"));
    }
    let mut cur = d;
    let mut trace = Vec::new();
    let mut seen = HashSet::new();
    loop {
        if cur.0 == 0 || cur.1 == 0 || !seen.insert(cur) {
            return Ok(Normalization::DegenerateOrbit { last: cur, trace });
        }
        if cur.0 > cur.1 {
            cur = kronecker_dualize(cur);
            trace.push(Move::Dualize);
        } else if 2 * cur.1 > m * cur.0 {
            match kronecker_reflect_sink(m, cur) {
                Ok(next) => {
                    cur = next;
                    trace.push(Move::ReflectSink);
                }
                Err(_) => return Ok(Normalization::DegenerateOrbit { last: cur, trace }),
            }
        } else {
            return Ok(Normalization::Normalized { d: cur, trace });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanException {
    pub m: u64,
    /// Normalized representative for Kronecker scans; `(d)` for loop scans.
    pub d: DimensionVector,
    /// Grid cells that led to this representative, in grid order.
    pub cells: Vec<DimensionVector>,
}

#[derive(Debug, Clone)]
pub struct ScanResult {
    /// Ordered by `m`, then `d` lexicographically.
    pub exceptions: Vec<ScanException>,
    pub scanned: usize,
    pub skipped: usize,
    pub elapsed: Duration,
}

impl ScanResult {
    /// `(m, d)` pairs of the exceptions.
    pub fn exception_keys(&self) -> Vec<(u64, Vec<u64>)> {
        self.exceptions
            .iter()
            .map(|e| (e.m, e.d.entries().to_vec()))
            .collect()
    }
}

/// Worker count for scans; `None` uses rayon's global pool.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanConfig {
    pub threads: Option<usize>,
}

enum CellOutcome {
    Skipped,
    Pass,
    Fail { m: u64, key: DimensionVector, cell: DimensionVector },
}

fn run_cells<C, F>(cells: Vec<C>, cfg: ScanConfig, eval: F) -> Result<Vec<CellOutcome>>
where
    C: Send + Sync,
    F: Fn(&C) -> Result<CellOutcome> + Send + Sync,
{
    match cfg.threads {
        Some(1) => cells.iter().map(&eval).collect(),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Capacity(format!("cannot build thread pool: {e}")))?;
            pool.install(|| cells.par_iter().map(&eval).collect())
        }
        None => cells.par_iter().map(&eval).collect(),
    }
}

fn merge(outcomes: Vec<CellOutcome>, elapsed_from: Instant) -> ScanResult {
    let mut grouped: BTreeMap<(u64, DimensionVector), Vec<DimensionVector>> = BTreeMap::new();
    let (mut scanned, mut skipped) = (0, 0);
    for o in outcomes {
        scanned += 1;
        match o {
            CellOutcome::Skipped => skipped += 1,
            CellOutcome::Pass => {}
            CellOutcome::Fail { m, key, cell } => grouped.entry((m, key)).or_default().push(cell),
        }
    }
    ScanResult {
        exceptions: grouped
            .into_iter()
            .map(|((m, d), cells)| ScanException { m, d, cells })
            .collect(),
        scanned,
        skipped,
        elapsed: elapsed_from.elapsed(),
    }
}

/// Runs the criterion for `L_m` at `d` over the grid. Expected failures:
/// only `(m, d) = (2, 2)`.
pub fn loop_criterion_exceptions(
    m_range: RangeInclusive<u64>,
    d_range: RangeInclusive<u64>,
    cfg: ScanConfig,
) -> Result<ScanResult> {
    if m_range.is_empty() || d_range.is_empty() {
        return Err(Error::domain("scan ranges must be nonempty"));
    }
    if *m_range.start() < 2 || *d_range.start() < 2 {
        return Err(Error::domain("loop scans need m >= 2 and d >= 2"));
    }
    let start = Instant::now();
    let cells: Vec<Pair> = m_range
        .flat_map(|m| d_range.clone().map(move |d| (m, d)))
        .collect();
    let theta = Stability::new(vec![0]);
    let outcomes = run_cells(cells, cfg, |&(m, d)| {
        let dv = DimensionVector::new(vec![d]);
        let report = check_ample_stability_criterion(&Quiver::loop_quiver(m), &theta, &dv)?;
        Ok(if report.passes() {
            CellOutcome::Pass
        } else {
            CellOutcome::Fail {
                m,
                key: dv.clone(),
                cell: dv,
            }
        })
    })?;
    Ok(merge(outcomes, start))
}

/// Runs the criterion with `Theta = (1, 0)` on the normalized representative
/// of every cell `(m, (d1, d2))` with `d1, d2` in `box_range`. Expected
/// failures: only `(3, (2, 2))`.
pub fn kronecker_criterion_exceptions(
    m_range: RangeInclusive<u64>,
    box_range: RangeInclusive<u64>,
    cfg: ScanConfig,
) -> Result<ScanResult> {
    if m_range.is_empty() || box_range.is_empty() {
        return Err(Error::domain("scan ranges must be nonempty"));
    }
    if *m_range.start() < 3 {
        return Err(Error::domain("Kronecker scans need m >= 3"));
    }
    let start = Instant::now();
    let cells: Vec<(u64, Pair)> = m_range
        .flat_map(|m| {
            let b = box_range.clone();
            b.clone()
                .flat_map(move |d1| b.clone().map(move |d2| (m, (d1, d2))))
        })
        .collect();
    let theta = Stability::new(vec![1, 0]);
    let outcomes = run_cells(cells, cfg, |&(m, d)| {
        if d == (0, 0) {
            return Ok(CellOutcome::Skipped);
        }
        let Some(nd) = normalize_kronecker(m, d)?.normalized() else {
            return Ok(CellOutcome::Skipped);
        };
        let inst = KroneckerInstance::new(m, nd)?;
        if inst.discriminant() < 0 {
            return Ok(CellOutcome::Skipped);
        }
        let key = DimensionVector::new(vec![nd.0, nd.1]);
        let report = check_ample_stability_criterion(&Quiver::kronecker(m), &theta, &key)?;
        Ok(if report.passes() {
            CellOutcome::Pass
        } else {
            CellOutcome::Fail {
                m,
                key,
                cell: DimensionVector::new(vec![d.0, d.1]),
            }
        })
    })?;
    Ok(merge(outcomes, start))
}

/// The failures the loop analysis predicts inside a grid.
pub fn expected_loop_exceptions(m_range: &RangeInclusive<u64>, d_range: &RangeInclusive<u64>) -> BTreeSet<(u64, Vec<u64>)> {
    let mut out = BTreeSet::new();
    if m_range.contains(&2) && d_range.contains(&2) {
        out.insert((2, vec![2]));
    }
    out
}

/// The failures the Kronecker analysis predicts inside a grid.
pub fn expected_kronecker_exceptions(
    m_range: &RangeInclusive<u64>,
    box_range: &RangeInclusive<u64>,
) -> BTreeSet<(u64, Vec<u64>)> {
    let mut out = BTreeSet::new();
    if m_range.contains(&3) && box_range.contains(&2) {
        out.insert((3, vec![2, 2]));
    }
    out
}

/// All quantities in the inequality chain for one split
/// `(np, nq) = (a, b) + (c, dd)` of a normalized instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityTrace {
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub dd: u64,
    /// `k = p dd + q a - n p q`; `k >= 0` iff `mu(a, b) >= mu(c, dd)`.
    pub k: BigInt,
    /// `p q`.
    pub f3_lhs: BigInt,
    /// `(m p q - p^2 - q^2) a dd + (p a + q dd) k`.
    pub f3_rhs: BigInt,
    /// `f3_lhs >= f3_rhs` iff `<(a, b), (c, dd)> >= -1`.
    pub f3_holds: bool,
    /// For `m = 3`: `(n a p + n dd q, a^2 + dd^2 + 3 a dd - 1)`; equal iff the
    /// pairing is exactly `-1`.
    pub finfty: Option<(BigInt, BigInt)>,
    /// `<(a, b), (c, dd)>` evaluated directly.
    pub pairing: BigInt,
}

pub fn kronecker_inequality_trace(m: u64, d: Pair, first: Pair) -> Result<InequalityTrace> {
    let inst = KroneckerInstance::new(m, d)?;
    if !inst.is_normalized() {
        return Err(Error::domain(format!("{d:?} is not normalized for m = {m}")));
    }
    let (a, b) = first;
    let (Some(c), Some(dd)) = (d.0.checked_sub(a), d.1.checked_sub(b)) else {
        return Err(Error::domain("split part exceeds the dimension vector"));
    };
    if (a, b) == (0, 0) || (c, dd) == (0, 0) {
        return Err(Error::domain("split must be proper"));
    }
    if a == 0 || dd == 0 {
        // a = 0 forces c = 0 under mu(e) >= mu(f), hence d = 0; symmetrically for dd
        return Err(Error::domain(
            "degenerate split: a = 0 or dd = 0 is incompatible with the slope condition",
        ));
    }
    let n = inst.n();
    let (p, q) = inst.primitive();
    let big = |x: u64| BigInt::from(x);
    let k = big(p) * big(dd) + big(q) * big(a) - big(n) * big(p) * big(q);
    let f3_lhs = big(p) * big(q);
    let disc = big(m) * big(p) * big(q) - big(p) * big(p) - big(q) * big(q);
    let f3_rhs = &disc * big(a) * big(dd) + (big(p) * big(a) + big(q) * big(dd)) * &k;
    let finfty = (m == 3).then(|| {
        (
            big(n) * big(a) * big(p) + big(n) * big(dd) * big(q),
            big(a) * big(a) + big(dd) * big(dd) + big(3) * big(a) * big(dd) - big(1),
        )
    });
    let pairing = euler_form(
        &Quiver::kronecker(m),
        &DimensionVector::new(vec![a, b]),
        &DimensionVector::new(vec![c, dd]),
    )?;
    Ok(InequalityTrace {
        n,
        p,
        q,
        a,
        b,
        c,
        dd,
        f3_holds: f3_lhs >= f3_rhs,
        k,
        f3_lhs,
        f3_rhs,
        finfty,
        pairing,
    })
}
