//! Cusp shapes, filling slopes and slope lengths.
//!
//! A cusp torus is described by the meridian `mu = r·e^(i·theta)` and a
//! longitude of length `lambda` along the real axis. The normalized length of
//! a slope `p·mu + q·lambda` is its Euclidean length divided by the square
//! root of the cusp area.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::Interval;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CuspError {
    #[error("invalid cusp shape: {0}")]
    InvalidShape(&'static str),
    #[error("invalid slope ({p}, {q}): {why}")]
    InvalidSlope { p: i64, q: i64, why: &'static str },
    #[error("invalid multi-slope: {0}")]
    InvalidMultiSlope(String),
    #[error("no usable cusp data for cusp {0}")]
    MissingCuspData(usize),
    #[error("{mode} mode needs slopes of the form 1/q, got ({p}, {q}) on cusp {cusp}")]
    NotUnitNumerator { mode: BoundMode, cusp: usize, p: i64, q: i64 },
    #[error("unknown bound mode `{0}`")]
    UnknownMode(String),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CuspShape {
    pub r: Interval,
    pub theta: Interval,
    pub lambda: Interval,
}

impl CuspShape {
    pub fn new(r: Interval, theta: Interval, lambda: Interval) -> Result<Self, CuspError> {
        if !r.certainly_positive() {
            return Err(CuspError::InvalidShape("meridian length must be positive"));
        }
        if !lambda.certainly_positive() {
            return Err(CuspError::InvalidShape("longitude length must be positive"));
        }
        if !theta.certainly_positive() || !theta.certainly_lt(&Interval::pi()) {
            return Err(CuspError::InvalidShape("angle must lie in (0, pi)"));
        }
        Ok(CuspShape { r, theta, lambda })
    }

    pub fn area(&self) -> Interval {
        self.r * self.lambda * self.theta.sin()
    }

    pub fn meridian(&self) -> (Interval, Interval) {
        (self.r * self.theta.cos(), self.r * self.theta.sin())
    }

    pub fn scaled(&self, t: Interval) -> Result<Self, CuspError> {
        CuspShape::new(self.r * t, self.theta, self.lambda * t)
    }
}

/// Bounds a cusp is known to satisfy when its exact shape is not at hand:
/// `r >= r_min`, `0 <= cot(theta) <= cot_theta_max`, `r·lambda·sin(theta) <= area_max`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CuspConstraints {
    pub r_min: Interval,
    pub cot_theta_max: Interval,
    pub area_max: Interval,
    pub lambda: Interval,
}

impl CuspConstraints {
    pub fn new(r_min: Interval, cot_theta_max: Interval, area_max: Interval, lambda: Interval) -> Result<Self, CuspError> {
        if !r_min.certainly_positive() || !area_max.certainly_positive() || !lambda.certainly_positive() {
            return Err(CuspError::InvalidShape("constraint bounds must be positive"));
        }
        if cot_theta_max.certainly_negative() {
            return Err(CuspError::InvalidShape("cot bound must be non-negative"));
        }
        Ok(CuspConstraints {
            r_min,
            cot_theta_max,
            area_max,
            lambda,
        })
    }

    pub fn admits(&self, c: &CuspShape) -> bool {
        let cot = c.theta.cos() / c.theta.sin();
        c.r.certainly_ge(&self.r_min)
            && cot.certainly_ge(&Interval::zero())
            && cot.certainly_le(&self.cot_theta_max)
            && c.area().certainly_le(&self.area_max)
            && self.lambda.contains_interval(&c.lambda)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CuspData {
    Shape(CuspShape),
    Constraints(CuspConstraints),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self, CuspError> {
        if p == 0 && q == 0 {
            return Err(CuspError::InvalidSlope { p, q, why: "zero slope" });
        }
        if p.gcd(&q) != 1 {
            return Err(CuspError::InvalidSlope {
                p,
                q,
                why: "not primitive",
            });
        }
        Ok(Slope { p, q })
    }

    /// The slope `1/q`.
    pub fn reciprocal(q: i64) -> Result<Self, CuspError> {
        if q == 0 {
            return Err(CuspError::InvalidSlope {
                p: 1,
                q,
                why: "1/0 is the trivial filling",
            });
        }
        Slope::new(1, q)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// One unfilled cusp and a slope for each filled cusp.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiSlope {
    pub unfilled: usize,
    pub fillings: Vec<(usize, Slope)>,
}

impl MultiSlope {
    pub fn new(unfilled: usize, fillings: Vec<(usize, Slope)>) -> Result<Self, CuspError> {
        let mut seen = BTreeSet::new();
        for (c, _) in &fillings {
            if *c == unfilled {
                return Err(CuspError::InvalidMultiSlope(format!("cusp {c} is both filled and unfilled")));
            }
            if !seen.insert(*c) {
                return Err(CuspError::InvalidMultiSlope(format!("cusp {c} filled twice")));
            }
        }
        Ok(MultiSlope { unfilled, fillings })
    }

    /// Cusp 0 unfilled, cusp `i + 1` filled along `1/q_list[i]`.
    pub fn reciprocal(q_list: &[i64]) -> Result<Self, CuspError> {
        let fillings = q_list
            .iter()
            .enumerate()
            .map(|(i, &q)| Ok((i + 1, Slope::reciprocal(q)?)))
            .collect::<Result<Vec<_>, CuspError>>()?;
        MultiSlope::new(0, fillings)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundMode {
    /// Exact shape data.
    Exact,
    /// The printed lower bound for normalized length, from a shape or a
    /// constraint set.
    PaperBound,
    /// `L^2 >= 2|q|` for slopes `1/q`.
    Purcell,
    /// `1/L^2 <= 3/(2(|q|-1)^2)` for slopes `1/q`, `|q| >= 3`.
    L4,
}

impl BoundMode {
    pub fn name(&self) -> &'static str {
        match self {
            BoundMode::Exact => "exact",
            BoundMode::PaperBound => "paper-bound",
            BoundMode::Purcell => "purcell",
            BoundMode::L4 => "l4",
        }
    }
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundMode {
    type Err = CuspError;
    fn from_str(s: &str) -> Result<Self, CuspError> {
        match s {
            "exact" => Ok(BoundMode::Exact),
            "paper-bound" => Ok(BoundMode::PaperBound),
            "purcell" => Ok(BoundMode::Purcell),
            "l4" => Ok(BoundMode::L4),
            _ => Err(CuspError::UnknownMode(s.to_string())),
        }
    }
}

/// `|p·mu + q·lambda|^2 = p^2 r^2 + q^2 lambda^2 + 2pq·r·lambda·cos(theta)`.
pub fn euclidean_length_sq(c: &CuspShape, s: &Slope) -> Interval {
    let p = Interval::from_i64(s.p);
    let q = Interval::from_i64(s.q);
    let (mx, my) = c.meridian();
    let x = p * mx + q * c.lambda;
    let y = p * my;
    x.square() + y.square()
}

pub fn normalized_length_sq(c: &CuspShape, s: &Slope) -> Interval {
    euclidean_length_sq(c, s) / c.area()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LowerBound {
    pub value: Interval,
    /// Whether `p·q·cos(theta) >= 0` is certified. Only then is `value`
    /// guaranteed not to exceed the exact normalized length.
    pub sign_condition: bool,
}

/// `(p^2 r^2 + q^2 lambda^2)/(r·lambda·sin(theta)) - |p·q·cot(theta)|`.
pub fn normalized_length_sq_lower_bound(c: &CuspShape, s: &Slope) -> LowerBound {
    let p = Interval::from_i64(s.p);
    let q = Interval::from_i64(s.q);
    let (sin, cos) = (c.theta.sin(), c.theta.cos());
    let num = (p * c.r).square() + (q * c.lambda).square();
    let value = num / (c.r * c.lambda * sin) - (p * q * cos / sin).abs();
    let pq_cos = Interval::from_i64(s.p.signum() * s.q.signum()) * cos;
    LowerBound {
        value,
        sign_condition: pq_cos.certainly_ge(&Interval::zero()),
    }
}

/// The same bound evaluated over a whole constraint set:
/// `(p^2 r_min^2 + q^2 lambda^2)/area_max - |p·q|·cot_theta_max`.
pub fn constraint_lower_bound(k: &CuspConstraints, s: &Slope) -> Interval {
    let p = Interval::from_i64(s.p);
    let q = Interval::from_i64(s.q);
    ((p * k.r_min).square() + (q * k.lambda).square()) / k.area_max - (p * q).abs() * k.cot_theta_max
}

pub fn purcell_lower_bound(q: i64) -> Interval {
    Interval::from_i64(2) * Interval::from_i64(q.abs())
}

/// Upper bound on `1/L^2` for the slope `1/q` on an L4 crossing-circle cusp;
/// unbounded for `|q| < 3`.
pub fn l4_inverse_upper_bound(q: i64) -> Interval {
    let q = q.abs();
    if q < 3 {
        return Interval::new(0.0, f64::INFINITY);
    }
    let d = Interval::from_i64(q - 1);
    Interval::from_i64(3) / (Interval::from_i64(2) * d.square())
}

fn inverse_of_lower_bound(l: Interval) -> Interval {
    if l.certainly_positive() {
        l.recip()
    } else {
        Interval::new(0.0, f64::INFINITY)
    }
}

/// Upper bound on `sum 1/L_i^2` over the filled cusps. `cusps[i]` describes
/// cusp `i`; it may be `None` where the mode does not need shape data.
pub fn total_inverse_normalized_length_sq(
    cusps: &[Option<CuspData>],
    ms: &MultiSlope,
    mode: BoundMode,
) -> Result<Interval, CuspError> {
    let mut total = Interval::zero();
    for &(cusp, s) in &ms.fillings {
        let data = cusps.get(cusp).copied().flatten();
        let term = match mode {
            BoundMode::Exact => match data {
                Some(CuspData::Shape(c)) => normalized_length_sq(&c, &s).recip(),
                _ => return Err(CuspError::MissingCuspData(cusp)),
            },
            BoundMode::PaperBound => match data {
                Some(CuspData::Shape(c)) => inverse_of_lower_bound(normalized_length_sq_lower_bound(&c, &s).value),
                Some(CuspData::Constraints(k)) => inverse_of_lower_bound(constraint_lower_bound(&k, &s)),
                None => return Err(CuspError::MissingCuspData(cusp)),
            },
            BoundMode::Purcell | BoundMode::L4 => {
                if s.p.abs() != 1 {
                    return Err(CuspError::NotUnitNumerator {
                        mode,
                        cusp,
                        p: s.p,
                        q: s.q,
                    });
                }
                if mode == BoundMode::Purcell {
                    inverse_of_lower_bound(purcell_lower_bound(s.q))
                } else {
                    l4_inverse_upper_bound(s.q)
                }
            }
        };
        total = total + term;
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CuspComponent {
    /// A planar component passing through `crossing_disks` crossing disks,
    /// counted with multiplicity.
    Planar {
        crossing_disks: usize,
    },
    CrossingCircle,
}

/// Rectangle tiling of a cusp torus by truncated polyhedron vertices. Tiles
/// have unit side along the imaginary axis and width at least one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CuspTiling {
    pub tiles: usize,
    /// Tiles crossed by the curve parallel to the imaginary axis.
    pub vertical_tiles: usize,
    /// Tiles crossed by the curve along the real axis.
    pub horizontal_tiles: usize,
    /// Length of the vertical curve (the meridian for planar cusps, the
    /// longitude for crossing-circle cusps).
    pub vertical_length: usize,
    /// Lower bound for the length of the horizontal curve.
    pub horizontal_length_at_least: usize,
}

pub fn cusp_tiling(component: CuspComponent) -> CuspTiling {
    match component {
        CuspComponent::Planar { crossing_disks: m } => CuspTiling {
            tiles: 2 * m,
            vertical_tiles: 2,
            horizontal_tiles: m,
            vertical_length: 2,
            horizontal_length_at_least: m,
        },
        CuspComponent::CrossingCircle => CuspTiling {
            tiles: 2,
            vertical_tiles: 2,
            horizontal_tiles: 1,
            vertical_length: 2,
            horizontal_length_at_least: 1,
        },
    }
}

/// Whether a twist region with `crossings` crossings gives a filling slope of
/// length at least `sqrt(crossings^2 + 1)`, exceeding six.
pub fn twist_slope_longer_than_six(crossings: u64) -> bool {
    crossings * crossings + 1 > 36
}
