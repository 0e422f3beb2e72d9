//! Decompositions of dimension vectors, the ample-stability criterion,
//! Harder-Narasimhan types with their codimensions, the strictly
//! semistable wall estimate, and Brauer-order predictions.
//!
//! All slope comparisons are exact (cross-multiplied integers).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quiver::{euler_form, gcd_of, DimensionVector, Quiver, Stability};

/// A proper splitting `d = e + f` with `e, f` nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub e: DimensionVector,
    pub f: DimensionVector,
}

/// Iterator over proper decompositions of `d`, in lexicographic order of `e`.
#[derive(Debug, Clone)]
pub struct Decompositions {
    d: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Decompositions {
    fn advance(&self, e: &[u64]) -> Option<Vec<u64>> {
        let mut e = e.to_vec();
        for i in (0..e.len()).rev() {
            if e[i] < self.d[i] {
                e[i] += 1;
                return Some(e);
            }
            e[i] = 0;
        }
        None
    }
}

impl Iterator for Decompositions {
    type Item = Decomposition;

    fn next(&mut self) -> Option<Decomposition> {
        loop {
            let e = self.next.take()?;
            self.next = self.advance(&e);
            if e == self.d {
                // the last vector in lex order; nothing follows
                self.next = None;
                return None;
            }
            if e.iter().all(|&x| x == 0) {
                continue;
            }
            let f: Vec<u64> = self.d.iter().zip(&e).map(|(a, b)| a - b).collect();
            return Some(Decomposition {
                e: DimensionVector::new(e),
                f: DimensionVector::new(f),
            });
        }
    }
}

/// Every proper `(e, f)` with `e + f = d`; there are `prod(d_i + 1) - 2`.
pub fn enumerate_decompositions(d: &DimensionVector) -> Result<Decompositions> {
    if d.is_zero() {
        return Err(Error::domain("cannot decompose the zero dimension vector"));
    }
    Ok(Decompositions {
        d: d.entries().to_vec(),
        next: Some(vec![0; d.len()]),
    })
}

fn check_sizes(q: &Quiver, theta: &Stability, d: &DimensionVector) -> Result<()> {
    q.check_len(d.len())?;
    q.check_len(theta.weights().len())?;
    if d.is_zero() {
        return Err(Error::domain("dimension vector must be nonzero"));
    }
    Ok(())
}

/// Outcome of the sufficient criterion for ample stability: every proper
/// `d = e + f` with `mu(e) >= mu(f)` must have `<e, f> <= -2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmpleStabilityReport {
    /// Lexicographically first qualifying decomposition with `<e, f> >= -1`.
    pub witness: Option<Decomposition>,
    /// Largest `<e, f>` among qualifying decompositions; the criterion passes
    /// exactly when this is `<= -2` or there is nothing to check.
    pub max_pairing: Option<BigInt>,
    /// Number of decompositions with `mu(e) >= mu(f)`.
    pub qualifying: usize,
}

impl AmpleStabilityReport {
    pub fn passes(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn check_ample_stability_criterion(
    q: &Quiver,
    theta: &Stability,
    d: &DimensionVector,
) -> Result<AmpleStabilityReport> {
    check_sizes(q, theta, d)?;
    let minus_one = BigInt::from(-1);
    let mut report = AmpleStabilityReport {
        witness: None,
        max_pairing: None,
        qualifying: 0,
    };
    for dec in enumerate_decompositions(d)? {
        if theta.compare_slopes(&dec.e, &dec.f)? == Ordering::Less {
            continue;
        }
        report.qualifying += 1;
        let pairing = euler_form(q, &dec.e, &dec.f)?;
        if report.witness.is_none() && pairing >= minus_one {
            report.witness = Some(dec);
        }
        if report.max_pairing.as_ref().is_none_or(|m| pairing > *m) {
            report.max_pairing = Some(pairing);
        }
    }
    Ok(report)
}

/// An ordered tuple of nonzero dimension vectors with strictly decreasing
/// slopes. A single part is the semistable stratum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HnType {
    parts: Vec<DimensionVector>,
}

impl HnType {
    pub fn new(parts: Vec<DimensionVector>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(DimensionVector::is_zero) {
            return Err(Error::domain("HN type parts must be a nonempty list of nonzero vectors"));
        }
        Ok(HnType { parts })
    }

    pub fn parts(&self) -> &[DimensionVector] {
        &self.parts
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.len() == 1
    }
}

impl fmt::Display for HnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Predicate deciding whether a dimension vector has nonempty semistable
/// locus.
pub type SemistableFilter<'a> = &'a (dyn Fn(&DimensionVector) -> bool + Sync);

/// Candidate HN types of `d` with at most `max_parts` parts.
///
/// Without `sst_filter` this is a superset of the true HN types: nonemptiness
/// of the semistable locus of each part is not checked. Output is ordered by
/// the parts, lexicographically, first part first.
pub fn hn_types(
    q: &Quiver,
    theta: &Stability,
    d: &DimensionVector,
    max_parts: usize,
    sst_filter: Option<SemistableFilter<'_>>,
) -> Result<Vec<HnType>> {
    check_sizes(q, theta, d)?;
    if max_parts == 0 {
        return Err(Error::domain("max_parts must be at least 1"));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    collect_hn(theta, d, max_parts, sst_filter, &mut prefix, &mut out)?;
    Ok(out)
}

fn collect_hn(
    theta: &Stability,
    rest: &DimensionVector,
    parts_left: usize,
    filter: Option<SemistableFilter<'_>>,
    prefix: &mut Vec<DimensionVector>,
    out: &mut Vec<HnType>,
) -> Result<()> {
    let admissible = |p: &DimensionVector| filter.is_none_or(|f| f(p));
    // the remainder itself as the last part
    let closes = |prefix: &[DimensionVector], p: &DimensionVector| -> Result<bool> {
        Ok(match prefix.last() {
            Some(prev) => theta.compare_slopes(prev, p)? == Ordering::Greater,
            None => true,
        })
    };
    let mut candidates: Vec<DimensionVector> = enumerate_decompositions(rest)?.map(|dec| dec.e).collect();
    candidates.push(rest.clone());
    for part in candidates {
        if !closes(prefix, &part)? || !admissible(&part) {
            continue;
        }
        if &part == rest {
            let mut parts = prefix.clone();
            parts.push(part);
            out.push(HnType { parts });
            continue;
        }
        if parts_left < 2 {
            continue;
        }
        let remainder = rest.checked_sub(&part).expect("part is a sub-vector");
        prefix.push(part);
        collect_hn(theta, &remainder, parts_left - 1, filter, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

/// `-sum_{k<l} <d^k, d^l>`, the codimension of the HN stratum.
pub fn hn_codimension(q: &Quiver, t: &HnType) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for (k, a) in t.parts.iter().enumerate() {
        for b in &t.parts[k + 1..] {
            acc -= euler_form(q, a, b)?;
        }
    }
    Ok(acc)
}

/// Minimum of `-<e, f>` over proper decompositions with `mu(e) = mu(f)`;
/// `None` when no equal-slope decomposition exists.
pub fn strictly_semistable_wall_codim(
    q: &Quiver,
    theta: &Stability,
    d: &DimensionVector,
) -> Result<Option<BigInt>> {
    check_sizes(q, theta, d)?;
    let mut best: Option<BigInt> = None;
    for dec in enumerate_decompositions(d)? {
        if theta.compare_slopes(&dec.e, &dec.f)? != Ordering::Equal {
            continue;
        }
        let codim = -euler_form(q, &dec.e, &dec.f)?;
        if best.as_ref().is_none_or(|b| codim < *b) {
            best = Some(codim);
        }
    }
    Ok(best)
}

/// How a Brauer-order prediction is backed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PredictionStatus {
    /// The ample-stability criterion holds, so the main theorem applies.
    Theorem,
    /// `L_2` at `d = 2`, or `K_3` at `(2, 2)` with the standard stability:
    /// the two cases computed by hand.
    SpecialCase,
    /// Only the general conjecture supports the prediction.
    Conjectural,
}

impl PredictionStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            PredictionStatus::Theorem => "theorem",
            PredictionStatus::SpecialCase => "special-case",
            PredictionStatus::Conjectural => "conjectural",
        }
    }
}

impl fmt::Display for PredictionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerPrediction {
    /// `g(d)`.
    pub order: u64,
    pub generator_note: String,
    pub status: PredictionStatus,
}

/// `(Q, Theta, d)` is one of the two hand-computed moduli spaces.
pub fn is_special_case(q: &Quiver, theta: &Stability, d: &DimensionVector) -> bool {
    if q.is_loop_quiver(2) && d.entries() == [2] {
        return true;
    }
    // any Theta with Theta_0 > Theta_1 is a positive rescaling plus shift of (1, 0)
    q.is_kronecker(3) && d.entries() == [2, 2] && theta.weights()[0] > theta.weights()[1]
}

/// Predicted Brauer group: cyclic of order `g(d)`, generated by the class of
/// any framed bundle `P_n` with `n != 0`.
pub fn predict_brauer(q: &Quiver, theta: &Stability, d: &DimensionVector) -> Result<BrauerPrediction> {
    check_sizes(q, theta, d)?;
    let order = gcd_of(d)?;
    let status = if check_ample_stability_criterion(q, theta, d)?.passes() {
        PredictionStatus::Theorem
    } else if is_special_case(q, theta, d) {
        PredictionStatus::SpecialCase
    } else {
        PredictionStatus::Conjectural
    };
    let generator_note = if order == 1 {
        "trivial group; every P_n is the projectivization of a vector bundle".to_string()
    } else {
        format!("cyclic of order {order}, generated by the class of P_n for every nonzero n")
    };
    Ok(BrauerPrediction {
        order,
        generator_note,
        status,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FineModuli {
    pub fine: bool,
    pub note: String,
}

/// Fine moduli (a universal representation) exist iff `g(d) = 1`.
pub fn fine_moduli_predicate(d: &DimensionVector) -> Result<FineModuli> {
    let g = gcd_of(d)?;
    if g == 1 {
        return Ok(FineModuli {
            fine: true,
            note: "g(d) = 1: universal bundles exist via a character with sum a_i d_i = 1".to_string(),
        });
    }
    Ok(FineModuli {
        fine: false,
        note: format!(
            "g(d) = {g}: no universal or tautological representation on any nonempty open \
             subset, provided the Brauer group is cyclic of order g(d) \
             (a theorem when the ample-stability criterion holds)"
        ),
    })
}
