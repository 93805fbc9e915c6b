//! Certified thresholds for long Dehn fillings of fully augmented links.
//!
//! All quantities are outward-rounded intervals. A condition `lhs <= rhs`
//! counts as satisfied only when the upper end of `lhs` does not exceed the
//! lower end of `rhs`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cusp::{total_inverse_normalized_length_sq, BoundMode, CuspData, CuspError, MultiSlope};
use crate::interval::Interval;
use crate::lattice::{check_quotient_bound, rvec, GeometricBasis, LatticeError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertError {
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("the geometry has no systole; it is needed to bound epsilon")]
    MissingSystole,
    #[error("the link is not flagged arithmetic")]
    NotArithmetic,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no q up to {0} passes")]
    NoPassingQ(i64),
    #[error(transparent)]
    Cusp(#[from] CuspError),
}

fn lit(s: &str) -> Interval {
    Interval::parse(s).expect("numeric literal")
}

/// Bernoulli numbers `B_0..=B_n` from `sum_{k<=m} C(m+1,k) B_k = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

const CLAUSEN_TERMS: usize = 18;

/// Clausen's function `Cl2(phi)` for `0 < phi < 2pi`:
/// `phi - phi·ln(phi) + sum_k |B_2k| phi^(2k+1) / (2k (2k+1) (2k)!)`.
pub fn clausen(phi: Interval) -> Interval {
    let two_pi = Interval::from_i64(2) * Interval::pi();
    assert!(phi.certainly_positive() && phi.certainly_lt(&two_pi));
    static BERN: OnceLock<Vec<BigRational>> = OnceLock::new();
    let bern = BERN.get_or_init(|| bernoulli_numbers(2 * CLAUSEN_TERMS));
    let mut sum = phi - phi * phi.ln();
    let phi2 = phi.square();
    let mut pow = phi * phi2;
    let mut fact = BigInt::from(2);
    for k in 1..=CLAUSEN_TERMS {
        let two_k = 2 * k;
        if k > 1 {
            fact = fact * BigInt::from(two_k - 1) * BigInt::from(two_k);
        }
        let coeff = bern[two_k].abs() / BigRational::from_integer(BigInt::from(two_k * (two_k + 1)) * &fact);
        sum = sum + Interval::from_rational(&coeff) * pow;
        pow = pow * phi2;
    }
    // |B_2k| <= 4 (2k)!/(2pi)^(2k), so term k is at most 4·phi·rho^k/(2k(2k+1)) with rho = (phi/2pi)^2.
    let rho = (phi / two_pi).square();
    let k1 = (CLAUSEN_TERMS + 1) as i64;
    let tail =
        Interval::from_i64(4) * phi * rho.powi(k1 as u32) / (Interval::from_i64(2 * k1 * (2 * k1 + 1)) * (Interval::one() - rho));
    sum.inflate(tail.hi())
}

/// Lobachevsky function `Lambda(theta) = Cl2(2 theta)/2`.
pub fn lobachevsky(theta: Interval) -> Interval {
    clausen(Interval::from_i64(2) * theta) * Interval::point(0.5)
}

/// Volume of the regular ideal tetrahedron, `3·Lambda(pi/3)`.
pub fn v0() -> Interval {
    static V0: OnceLock<Interval> = OnceLock::new();
    *V0.get_or_init(|| Interval::from_i64(3) * lobachevsky(Interval::pi() / Interval::from_i64(3)))
}

pub fn log3() -> Interval {
    Interval::from_i64(3).ln()
}

/// `d_N = 4·vol/v0`.
pub fn d_n(volume: Interval) -> Interval {
    Interval::from_i64(4) * volume / v0()
}

/// Bracket `(2pi/(L^2 + 16.17), 2pi/(L^2 - 28.78))` for the length of the core
/// geodesic of a filling with normalized length `L`, valid for `L^2 >= 61.2`.
pub fn fps_bracket(l_sq: Interval) -> Result<(Interval, Interval), CertError> {
    if !l_sq.certainly_ge(&lit("61.2")) {
        return Err(CertError::OutOfRange(format!(
            "normalized length squared {l_sq} is below 61.2"
        )));
    }
    let two_pi = Interval::from_i64(2) * Interval::pi();
    Ok((two_pi / (l_sq + lit("16.17")), two_pi / (l_sq - lit("28.78"))))
}

/// [`fps_bracket`] for an exactly known `L^2`; the guard is checked exactly.
pub fn fps_bracket_exact(l_sq: &BigRational) -> Result<(Interval, Interval), CertError> {
    if *l_sq < BigRational::new(BigInt::from(612), BigInt::from(10)) {
        return Err(CertError::OutOfRange(format!(
            "normalized length squared {l_sq} is below 61.2"
        )));
    }
    let l = Interval::from_rational(l_sq);
    let two_pi = Interval::from_i64(2) * Interval::pi();
    Ok((two_pi / (l + lit("16.17")), two_pi / (l - lit("28.78"))))
}

/// `C(eps) = eps^5 / (6771·cosh^5(0.6 eps + 0.1475))` for `0 < eps <= ln 3`.
pub fn c_of_eps(eps: Interval) -> Result<Interval, CertError> {
    check_eps(eps)?;
    let ch = (lit("0.6") * eps + lit("0.1475")).cosh();
    Ok(eps.powi(5) / (Interval::from_i64(6771) * ch.powi(5)))
}

fn check_eps(eps: Interval) -> Result<(), CertError> {
    if !eps.certainly_positive() {
        return Err(CertError::OutOfRange(format!("epsilon {eps} must be positive")));
    }
    if eps.certainly_gt(&log3()) {
        return Err(CertError::OutOfRange(format!("epsilon {eps} exceeds ln 3")));
    }
    Ok(())
}

fn check_volume(volume: Interval) -> Result<(), CertError> {
    if !volume.certainly_positive() {
        return Err(CertError::OutOfRange(format!("volume {volume} must be positive")));
    }
    Ok(())
}

/// `eps·v0 / (8pi·vol + 28.78·eps·v0)`.
fn volume_term(eps: Interval, volume: Interval) -> Interval {
    let v = v0();
    let eight_pi = Interval::from_i64(8) * Interval::pi();
    eps * v / (eight_pi * volume + lit("28.78") * eps * v)
}

/// `numerator / (2pi/C(eps) + 28.78)`.
fn fps_term(eps: Interval, numerator: i64) -> Result<Interval, CertError> {
    let c = c_of_eps(eps)?;
    let two_pi = Interval::from_i64(2) * Interval::pi();
    Ok(Interval::from_i64(numerator) / (two_pi / c + lit("28.78")))
}

/// `min{1/61.2, eps·v0/(8pi·vol + 28.78·eps·v0)}`: a total of `1/L_i^2` below
/// this keeps every filled core geodesic shorter than `eps/d_N`.
pub fn exp_thin_threshold(eps: Interval, volume: Interval) -> Result<Interval, CertError> {
    check_volume(volume)?;
    if !eps.certainly_positive() {
        return Err(CertError::OutOfRange(format!("epsilon {eps} must be positive")));
    }
    Ok((Interval::one() / lit("61.2")).min(&volume_term(eps, volume)))
}

/// `min{eps·v0/(8pi·vol + 28.78·eps·v0), 1/(2pi/C(eps) + 28.78)}`.
pub fn quantify_threshold(eps: Interval, volume: Interval) -> Result<Interval, CertError> {
    check_volume(volume)?;
    Ok(volume_term(eps, volume).min(&fps_term(eps, 1)?))
}

/// The same threshold with the `2/(...)` second term that appears in the
/// proof; reported alongside the stated one, never used for verdicts.
pub fn quantify_threshold_proof_variant(eps: Interval, volume: Interval) -> Result<Interval, CertError> {
    check_volume(volume)?;
    Ok(volume_term(eps, volume).min(&fps_term(eps, 2)?))
}

/// Largest epsilon allowed by the systole: the lower end of
/// `min{systole/1.001, ln 3}`, as a point.
pub fn largest_admissible_epsilon(systole: Interval) -> Result<Interval, CertError> {
    let b = epsilon_cap(systole);
    if b.lo() <= 0.0 {
        return Err(CertError::OutOfRange(format!("systole {systole} must be positive")));
    }
    Ok(Interval::point(b.lo()))
}

fn epsilon_cap(systole: Interval) -> Interval {
    (systole / lit("1.001")).min(&log3())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Relation {
    fn holds(&self, lhs: &Interval, rhs: &Interval) -> bool {
        match self {
            Relation::Le => lhs.certainly_le(rhs),
            Relation::Lt => lhs.certainly_lt(rhs),
            Relation::Ge => lhs.certainly_ge(rhs),
            Relation::Gt => lhs.certainly_gt(rhs),
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Condition {
    pub name: String,
    pub relation: Relation,
    pub lhs: Interval,
    /// `None` when the right side could not be evaluated.
    pub rhs: Option<Interval>,
    pub satisfied: bool,
}

impl Condition {
    pub fn new(name: &str, lhs: Interval, relation: Relation, rhs: Interval) -> Self {
        let satisfied = relation.holds(&lhs, &rhs);
        Condition {
            name: name.to_string(),
            relation,
            lhs,
            rhs: Some(rhs),
            satisfied,
        }
    }

    pub fn unevaluated(name: &str, lhs: Interval, relation: Relation) -> Self {
        Condition {
            name: name.to_string(),
            relation,
            lhs,
            rhs: None,
            satisfied: false,
        }
    }

    /// Certified slack: distance from the worst end of `lhs` to the worst end
    /// of `rhs`, negative when the condition fails.
    pub fn margin(&self) -> Option<Interval> {
        let rhs = self.rhs?;
        let d = match self.relation {
            Relation::Le | Relation::Lt => rhs - self.lhs,
            Relation::Ge | Relation::Gt => self.lhs - rhs,
        };
        Some(Interval::point(d.lo()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Sums `1/q_i^2`, as printed.
    AsPrinted,
    /// Sums `1/|q_i|`, which is what the estimate behind it supports.
    Corrected,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::AsPrinted => "as-printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = CertError;
    fn from_str(s: &str) -> Result<Self, CertError> {
        match s {
            "as-printed" => Ok(Variant::AsPrinted),
            "corrected" => Ok(Variant::Corrected),
            _ => Err(CertError::InvalidInput(format!("unknown variant `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub kind: String,
    pub verdict: Verdict,
    pub mode: Option<BoundMode>,
    pub variant: Option<Variant>,
    pub conditions: Vec<Condition>,
    /// Intermediate values, for inspection only.
    pub trace: Vec<(String, Interval)>,
}

impl Certificate {
    fn from_conditions(kind: &str, conditions: Vec<Condition>) -> Self {
        let verdict = if conditions.iter().all(|c| c.satisfied) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Certificate {
            kind: kind.to_string(),
            verdict,
            mode: None,
            variant: None,
            conditions,
            trace: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn first_violation(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| !c.satisfied)
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn trace_value(&self, name: &str) -> Option<Interval> {
        self.trace.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn to_document(&self) -> CertificateDocument {
        let pair = |i: &Interval| {
            let (l, h) = i.to_decimal_strings();
            [l, h]
        };
        CertificateDocument {
            version: env!("CARGO_PKG_VERSION").to_string(),
            kind: self.kind.clone(),
            verdict: self.verdict,
            mode: self.mode,
            variant: self.variant,
            first_violation: self.first_violation().map(|c| c.name.clone()),
            conditions: self
                .conditions
                .iter()
                .map(|c| ConditionDocument {
                    name: c.name.clone(),
                    relation: c.relation,
                    lhs: pair(&c.lhs),
                    rhs: c.rhs.as_ref().map(pair),
                    satisfied: c.satisfied,
                    margin: c.margin().map(|m| m.to_decimal_strings().0),
                })
                .collect(),
            trace: self
                .trace
                .iter()
                .map(|(n, v)| TraceDocument {
                    name: n.clone(),
                    value: pair(v),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub version: String,
    pub kind: String,
    pub verdict: Verdict,
    pub mode: Option<BoundMode>,
    pub variant: Option<Variant>,
    pub first_violation: Option<String>,
    pub conditions: Vec<ConditionDocument>,
    pub trace: Vec<TraceDocument>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionDocument {
    pub name: String,
    pub relation: Relation,
    pub lhs: [String; 2],
    pub rhs: Option<[String; 2]>,
    pub satisfied: bool,
    pub margin: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub name: String,
    pub value: [String; 2],
}

/// Geometry of a fully augmented link complement: cusp 0 is the planar
/// component left unfilled, cusps `1..=n` are the crossing circles.
#[derive(Clone, Debug, PartialEq)]
pub struct FalGeometry {
    pub volume: Interval,
    pub systole: Option<Interval>,
    pub n: usize,
    pub arithmetic: bool,
    /// Data for crossing-circle cusps `1..=n`; empty when not known.
    pub cusps: Vec<Option<CuspData>>,
}

impl FalGeometry {
    pub fn new(
        volume: Interval,
        systole: Option<Interval>,
        n: usize,
        arithmetic: bool,
        cusps: Vec<Option<CuspData>>,
    ) -> Result<Self, CertError> {
        check_volume(volume)?;
        if n == 0 {
            return Err(CertError::InvalidInput("at least one crossing circle is required".into()));
        }
        if let Some(s) = systole {
            if !s.certainly_positive() {
                return Err(CertError::OutOfRange(format!("systole {s} must be positive")));
            }
        }
        if !cusps.is_empty() && cusps.len() != n {
            return Err(CertError::InvalidInput(format!(
                "{} cusp entries for {n} crossing circles",
                cusps.len()
            )));
        }
        Ok(FalGeometry {
            volume,
            systole,
            n,
            arithmetic,
            cusps,
        })
    }

    fn indexed_cusps(&self) -> Vec<Option<CuspData>> {
        std::iter::once(None).chain(self.cusps.iter().copied()).collect()
    }
}

pub const EPSILON_CAP: &str = "3.45";

/// Checks that filling cusp `i` of `fal` along `1/q_list[i-1]` gives an
/// `(eps, d_L)`-twisted knot complement:
/// (a) `eps <= min{systole/1.001, ln 3}`, (b) `eps < 3.45`,
/// (c) `sum 1/L_i^2 <= quantify_threshold(eps, vol)`.
///
/// With `epsilon = None` the largest admissible value is used.
pub fn certify_twisted_filling(
    fal: &FalGeometry,
    q_list: &[i64],
    epsilon: Option<Interval>,
    mode: BoundMode,
) -> Result<Certificate, CertError> {
    if q_list.len() != fal.n {
        return Err(CertError::InvalidInput(format!(
            "{} slopes for {} crossing circles",
            q_list.len(),
            fal.n
        )));
    }
    let systole = fal.systole.ok_or(CertError::MissingSystole)?;
    let cap = epsilon_cap(systole);
    let eps = match epsilon {
        Some(e) => e,
        None => largest_admissible_epsilon(systole)?,
    };
    let ms = MultiSlope::reciprocal(q_list)?;
    let total = total_inverse_normalized_length_sq(&fal.indexed_cusps(), &ms, mode)?;

    let mut conditions = vec![
        Condition::new("epsilon_admissible", eps, Relation::Le, cap),
        Condition::new("epsilon_below_cap", eps, Relation::Lt, lit(EPSILON_CAP)),
    ];
    let mut trace = vec![
        ("v0".to_string(), v0()),
        ("d_N".to_string(), d_n(fal.volume)),
        ("epsilon".to_string(), eps),
    ];
    match quantify_threshold(eps, fal.volume) {
        Ok(t) => {
            conditions.push(Condition::new("total_inverse_length", total, Relation::Le, t));
            trace.push(("C(epsilon)".into(), c_of_eps(eps)?));
            trace.push(("volume_term".into(), volume_term(eps, fal.volume)));
            trace.push(("fps_term".into(), fps_term(eps, 1)?));
            trace.push(("fps_term_proof_variant".into(), fps_term(eps, 2)?));
            trace.push(("exp_thin_threshold".into(), exp_thin_threshold(eps, fal.volume)?));
        }
        Err(_) => conditions.push(Condition::unevaluated("total_inverse_length", total, Relation::Le)),
    }
    let mut cert = Certificate::from_conditions("twisted-filling", conditions);
    if !fal.volume.certainly_gt(&(Interval::from_i64(2) * v0())) {
        cert.verdict = Verdict::NotApplicable;
    }
    cert.mode = Some(mode);
    cert.trace = trace;
    Ok(cert)
}

const MAX_Q: i64 = 1 << 40;

/// Smallest `q >= 1` such that the uniform filling `(1/q, ..., 1/q)` and every
/// larger uniform filling pass [`certify_twisted_filling`]. The pass set is
/// upward closed for every mode whose per-cusp bound decreases in `q`, which
/// the search relies on; the answer is checked on both sides.
pub fn min_uniform_q(fal: &FalGeometry, epsilon: Option<Interval>, mode: BoundMode) -> Result<i64, CertError> {
    let pass = |q: i64| -> Result<bool, CertError> { Ok(certify_twisted_filling(fal, &vec![q; fal.n], epsilon, mode)?.passed()) };
    let mut hi = 1;
    while !pass(hi)? {
        hi *= 2;
        if hi > MAX_Q {
            return Err(CertError::NoPassingQ(MAX_Q));
        }
    }
    let mut lo = hi / 2;
    if lo == 0 {
        return Ok(1);
    }
    // invariant: lo fails, hi passes
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pass(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    debug_assert!(pass(hi)? && !pass(hi - 1)?);
    Ok(hi)
}

/// Volume-free sufficient condition for `n >= 1` crossing circles:
/// `sum f(q_i) <= min{2eps/(80pi(n-1) + 28.78eps), 2/(2pi/C(eps) + 28.78)}`
/// with `f(q) = 1/q^2` as printed or `f(q) = 1/|q|` corrected.
pub fn fal_sufficient_condition(n: usize, eps: Interval, q_list: &[i64], variant: Variant) -> Result<Certificate, CertError> {
    check_q_list(n, q_list)?;
    check_eps(eps)?;
    let as_printed = sum_inverse(q_list, true);
    let corrected = sum_inverse(q_list, false);
    let rhs = sufficient_rhs(n, eps)?;
    let lhs = match variant {
        Variant::AsPrinted => as_printed,
        Variant::Corrected => corrected,
    };
    let mut cert = Certificate::from_conditions(
        "fal-sufficient",
        vec![Condition::new("sum_inverse_q", lhs, Relation::Le, rhs)],
    );
    cert.variant = Some(variant);
    cert.trace = vec![
        ("epsilon".into(), eps),
        ("sum_inverse_q_squared".into(), as_printed),
        ("sum_inverse_abs_q".into(), corrected),
        ("C(epsilon)".into(), c_of_eps(eps)?),
    ];
    Ok(cert)
}

fn check_q_list(n: usize, q_list: &[i64]) -> Result<(), CertError> {
    if n < 2 {
        return Err(CertError::InvalidInput(format!("need at least 2 crossing circles, got {n}")));
    }
    if q_list.len() != n {
        return Err(CertError::InvalidInput(format!(
            "{} slopes for {n} crossing circles",
            q_list.len()
        )));
    }
    if q_list.contains(&0) {
        return Err(CertError::InvalidInput("q = 0 is the trivial filling".into()));
    }
    Ok(())
}

fn sum_inverse(q_list: &[i64], squared: bool) -> Interval {
    q_list.iter().fold(Interval::zero(), |acc, &q| {
        let a = Interval::from_i64(q.abs());
        acc + if squared { a.square().recip() } else { a.recip() }
    })
}

fn sufficient_rhs(n: usize, eps: Interval) -> Result<Interval, CertError> {
    let eighty_pi = Interval::from_i64(80) * Interval::pi();
    let first = Interval::from_i64(2) * eps / (eighty_pi * Interval::from_i64(n as i64 - 1) + lit("28.78") * eps);
    Ok(first.min(&fps_term(eps, 2)?))
}

pub const ARITHMETIC_EPSILON: &str = "0.86168";
/// Shortest geodesic length known for arithmetic link complements.
pub const ARITHMETIC_SYSTOLE: &str = "0.862554";

/// The arithmetic-FAL specialisation at `eps = 0.86168`: `sum 1/|q_i|` must lie
/// below both the printed constants `1.72336/(80pi(n-1) + 24.8)`,
/// `7.963e-6` and their recomputed counterparts.
pub fn arithmetic_sufficient_condition(n: usize, q_list: &[i64], arithmetic: bool) -> Result<Certificate, CertError> {
    if !arithmetic {
        return Err(CertError::NotArithmetic);
    }
    check_q_list(n, q_list)?;
    let eps = lit(ARITHMETIC_EPSILON);
    let eighty_pi_n = Interval::from_i64(80) * Interval::pi() * Interval::from_i64(n as i64 - 1);
    let printed_first = lit("1.72336") / (eighty_pi_n + lit("24.8"));
    let printed_second = lit("7.963e-6");
    let recomputed = sufficient_rhs(n, eps)?;
    let rhs = printed_first.min(&printed_second).min(&recomputed);
    let lhs = sum_inverse(q_list, false);
    let mut cert = Certificate::from_conditions(
        "arithmetic-sufficient",
        vec![Condition::new("sum_inverse_abs_q", lhs, Relation::Le, rhs)],
    );
    cert.variant = Some(Variant::Corrected);
    cert.trace = vec![
        ("epsilon".into(), eps),
        ("printed_volume_term".into(), printed_first),
        ("printed_fps_term".into(), printed_second),
        ("recomputed_fps_term".into(), fps_term(eps, 2)?),
        ("arithmetic_systole".into(), lit(ARITHMETIC_SYSTOLE)),
        ("two_epsilon".into(), Interval::from_i64(2) * eps),
        ("28.78_epsilon".into(), lit("28.78") * eps),
    ];
    Ok(cert)
}

/// Checks `vol > 2 v0` (so `d_N > 8`) and `eps/d_N < 3.45/8 = 0.43125 < 0.43137`,
/// which places short geodesics below the arithmetic systole bound.
pub fn nonarithmetic_gate(eps: Interval, volume: Interval) -> Result<Certificate, CertError> {
    check_volume(volume)?;
    if !eps.certainly_positive() {
        return Err(CertError::OutOfRange(format!("epsilon {eps} must be positive")));
    }
    let two_v0 = Interval::from_i64(2) * v0();
    let ratio = eps / d_n(volume);
    let bound = lit(EPSILON_CAP) / Interval::from_i64(8);
    let conditions = vec![
        Condition::new("volume_exceeds_2v0", volume, Relation::Gt, two_v0),
        Condition::new("epsilon_over_d_N", ratio, Relation::Lt, bound),
        Condition::new("cap_below_arithmetic_bound", bound, Relation::Lt, lit("0.43137")),
    ];
    let mut cert = Certificate::from_conditions("nonarithmetic-gate", conditions);
    cert.trace = vec![("d_N".into(), d_n(volume)), ("v0".into(), v0())];
    Ok(cert)
}

/// Hypotheses for the uniqueness of a twisted knot complement in its
/// commensurability class:
/// (a) at least 9 twist regions; (b) at least 6 crossings per region, so each
/// filling slope is longer than `sqrt(c^2 + 1) > 6`; (c) the planar longitude,
/// crossing every crossing disk twice, has length at least
/// `2·twist_regions > 16`; (d) every index-2 quotient of the planar cusp has
/// slopes longer than 6.
///
/// `basis` is the planar cusp's geometric basis with the meridian first; when
/// absent the rectangular basis `(2, 0), (0, 2·twist_regions)` is used.
pub fn certify_commensurability_hypotheses(
    twist_regions: u64,
    min_crossings: u64,
    basis: Option<&GeometricBasis<BigRational>>,
) -> Result<Certificate, CertError> {
    let int = |n: u64| Interval::from_i64(n as i64);
    let longitude = 2 * twist_regions;
    let derived;
    let g2 = match basis {
        Some(b) => b,
        None => {
            derived =
                GeometricBasis::new(rvec(2, 0), rvec(0, longitude as i64)).map_err(|e| CertError::InvalidInput(e.to_string()))?;
            &derived
        }
    };
    let quotient = match check_quotient_bound(g2) {
        Ok(report) => {
            let worst = report
                .iter()
                .map(|r| Interval::from_rational(&r.max_len_sq))
                .fold(Interval::point(f64::INFINITY), |a, b| if b.lo() < a.lo() { b } else { a });
            Condition::new("d_quotient_slopes_exceed_6", worst, Relation::Gt, int(36))
        }
        Err(LatticeError::HypothesisViolated(_)) => {
            let b2 = Interval::from_rational(&g2.b.norm_sq());
            Condition::new("d_quotient_slopes_exceed_6", b2, Relation::Gt, int(256))
        }
        Err(LatticeError::BoundViolated { max_len_sq, .. }) => Condition::new(
            "d_quotient_slopes_exceed_6",
            Interval::point(max_len_sq),
            Relation::Gt,
            int(36),
        ),
        Err(e) => return Err(CertError::InvalidInput(e.to_string())),
    };
    let conditions = vec![
        Condition::new("a_twist_regions", int(twist_regions), Relation::Ge, int(9)),
        Condition::new(
            "b_twist_slope_length_sq",
            int(min_crossings * min_crossings + 1),
            Relation::Gt,
            int(36),
        ),
        Condition::new("c_planar_longitude", int(longitude), Relation::Gt, int(16)),
        quotient,
    ];
    let mut cert = Certificate::from_conditions("commensurability", conditions);
    cert.trace = vec![
        ("meridian_length_sq".into(), Interval::from_rational(&g2.a.norm_sq())),
        ("longitude_length_sq".into(), Interval::from_rational(&g2.b.norm_sq())),
    ];
    Ok(cert)
}
