//! Full-sized horoball patterns seen from a planar cusp, and the rotational
//! symmetry obstructions of orders 3 and 4.
//!
//! A pattern is a finite set of colored centers in the fundamental domain
//! `[0, Lx) x [0, 2)` of the group generated by the meridian `2i` and a
//! longitude `(Lx, Ly)`. Coordinates lie in Q(sqrt 3), so every rotation
//! of order 2, 3 or 4 is computed exactly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{int, rat, QSqrt3};
use crate::interval::Interval;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HoroballError {
    #[error("invalid lines: {0}")]
    InvalidLines(String),
    #[error("invalid longitude: {0}")]
    InvalidLongitude(String),
    #[error("rotation order must be 2, 3 or 4, got {0}")]
    InvalidOrder(u32),
    #[error("center {0} is given two colors")]
    ConflictingColor(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn swap(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HPoint {
    pub x: QSqrt3,
    pub y: QSqrt3,
}

impl HPoint {
    pub fn new(x: QSqrt3, y: QSqrt3) -> Self {
        HPoint { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        HPoint::new(QSqrt3::from_i64(x), QSqrt3::from_i64(y))
    }

    pub fn add(&self, o: &HPoint) -> HPoint {
        HPoint::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &HPoint) -> HPoint {
        HPoint::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, k: &QSqrt3) -> HPoint {
        HPoint::new(k * &self.x, k * &self.y)
    }

    fn as_integers(&self) -> Option<(BigInt, BigInt)> {
        Some((self.x.as_integer()?, self.y.as_integer()?))
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn floor(x: &QSqrt3) -> BigInt {
    let mut n = BigInt::from(x.to_f64().floor() as i64);
    let q = |n: &BigInt| QSqrt3::rational(BigRational::from_integer(n.clone()));
    while x.cmp(&q(&n)) == Ordering::Less {
        n -= 1;
    }
    while x.cmp(&q(&(&n + 1))) != Ordering::Less {
        n += 1;
    }
    n
}

fn qint(n: &BigInt) -> QSqrt3 {
    QSqrt3::rational(BigRational::from_integer(n.clone()))
}

/// Rotation by `2pi/order` about the origin, applied to a vector.
fn rotate_vector(v: &HPoint, order: u32) -> Result<HPoint, HoroballError> {
    match order {
        2 => Ok(HPoint::new(-&v.x, -&v.y)),
        4 => Ok(HPoint::new(-&v.y, v.x.clone())),
        3 => {
            let c = QSqrt3::rational(rat(-1, 2));
            let s = QSqrt3::new(BigRational::zero(), rat(1, 2));
            Ok(HPoint::new(&(&c * &v.x) - &(&s * &v.y), &(&s * &v.x) + &(&c * &v.y)))
        }
        _ => Err(HoroballError::InvalidOrder(order)),
    }
}

pub fn rotate(p: &HPoint, center: &HPoint, order: u32) -> Result<HPoint, HoroballError> {
    Ok(center.add(&rotate_vector(&p.sub(center), order)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoroballPattern {
    /// Longitude translation `(Lx, Ly)`, `Lx > 0`; the meridian is `(0, 2)`.
    pub longitude: HPoint,
    /// Centers reduced into `[0, Lx) x [0, 2)`.
    pub centers: BTreeMap<HPoint, Color>,
    /// Line positions when the pattern was built from lines.
    pub lines: Option<Vec<QSqrt3>>,
}

impl HoroballPattern {
    pub fn meridian() -> HPoint {
        HPoint::int(0, 2)
    }

    pub fn from_centers(centers: Vec<(HPoint, Color)>, longitude: HPoint) -> Result<Self, HoroballError> {
        if longitude.x.signum() != Ordering::Greater {
            return Err(HoroballError::InvalidLongitude(format!(
                "x component {} must be positive",
                longitude.x
            )));
        }
        let mut p = HoroballPattern {
            longitude,
            centers: BTreeMap::new(),
            lines: None,
        };
        for (c, col) in centers {
            let r = p.reduce(&c);
            if let Some(old) = p.centers.insert(r.clone(), col) {
                if old != col {
                    return Err(HoroballError::ConflictingColor(r.to_string()));
                }
            }
        }
        Ok(p)
    }

    /// Representative of `p` modulo the translation group.
    pub fn reduce(&self, p: &HPoint) -> HPoint {
        let n = floor(&(&p.x / &self.longitude.x));
        let shifted = p.sub(&self.longitude.scale(&qint(&n)));
        let two = QSqrt3::from_i64(2);
        let m = floor(&(&shifted.y / &two));
        HPoint::new(shifted.x, &shifted.y - &(&two * &qint(&m)))
    }

    pub fn color_at(&self, p: &HPoint) -> Option<Color> {
        self.centers.get(&self.reduce(p)).copied()
    }

    pub fn generators(&self) -> [HPoint; 2] {
        [Self::meridian(), self.longitude.clone()]
    }

    /// Whether translation by `t` maps the colored center set to itself.
    pub fn is_translation_symmetry(&self, t: &HPoint) -> bool {
        self.centers.iter().all(|(c, col)| self.color_at(&c.add(t)) == Some(*col))
    }

    /// Every center with `x0 <= x < x1` and `0 <= y < 2`.
    pub fn centers_in_window(&self, x0: &QSqrt3, x1: &QSqrt3) -> Vec<(HPoint, Color)> {
        let lx = &self.longitude.x;
        let mut out = Vec::new();
        for (c, col) in &self.centers {
            let n0 = floor(&(&(x0 - &c.x) / lx)) - 1;
            let n1 = floor(&(&(x1 - &c.x) / lx)) + 1;
            let mut n = n0;
            while n <= n1 {
                let p = c.add(&self.longitude.scale(&qint(&n)));
                if p.x >= *x0 && p.x < *x1 {
                    let two = QSqrt3::from_i64(2);
                    let m = floor(&(&p.y / &two));
                    out.push((HPoint::new(p.x.clone(), &p.y - &(&two * &qint(&m))), *col));
                }
                n += 1;
            }
        }
        out.sort();
        out
    }
}

/// Lines `Re z = l_j` of full-sized balls at `l_j + k i`; the center at
/// height `k` is red when `k + parity_j` is even.
pub fn generate_pattern(lines: &[QSqrt3], parity: &[u8], longitude: HPoint) -> Result<HoroballPattern, HoroballError> {
    if lines.is_empty() {
        return Err(HoroballError::InvalidLines("no lines".into()));
    }
    if !lines[0].is_zero() {
        return Err(HoroballError::InvalidLines(format!("first line is {}, expected 0", lines[0])));
    }
    if let Some(w) = lines.windows(2).find(|w| w[0] >= w[1]) {
        return Err(HoroballError::InvalidLines(format!("{} does not increase to {}", w[0], w[1])));
    }
    if parity.len() != lines.len() || parity.iter().any(|&p| p > 1) {
        return Err(HoroballError::InvalidLines("need one parity bit (0 or 1) per line".into()));
    }
    if longitude.x <= *lines.last().unwrap() {
        return Err(HoroballError::InvalidLongitude(format!(
            "x component {} must exceed the last line",
            longitude.x
        )));
    }
    let mut centers = Vec::new();
    for (l, &p) in lines.iter().zip(parity) {
        for k in 0..2i64 {
            let col = if (k + p as i64) % 2 == 0 { Color::Red } else { Color::Blue };
            centers.push((HPoint::new(l.clone(), QSqrt3::from_i64(k)), col));
        }
    }
    let mut pat = HoroballPattern::from_centers(centers, longitude)?;
    pat.lines = Some(lines.to_vec());
    Ok(pat)
}

/// `Z[i]` with red at `a + b` even (`complete`), or its subset with `a` or `b`
/// even otherwise. Period 2 in both directions.
pub fn checkerboard(complete: bool) -> HoroballPattern {
    reference_pattern(if complete {
        Reference::EvenComplete
    } else {
        Reference::EvenPartial
    })
}

/// The other packing forced by an order-4 rotation: `a` even or `b` odd, red
/// at `a + b` even.
pub fn odd_pattern() -> HoroballPattern {
    reference_pattern(Reference::Odd)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Reference {
    EvenComplete,
    EvenPartial,
    Odd,
}

impl Reference {
    fn contains(self, a: &BigInt, b: &BigInt) -> bool {
        let even = |n: &BigInt| (n % 2i32).is_zero();
        match self {
            Reference::EvenComplete => true,
            Reference::EvenPartial => even(a) || even(b),
            Reference::Odd => even(a) || !even(b),
        }
    }

    fn color(a: &BigInt, b: &BigInt) -> Color {
        if ((a + b) % 2i32).is_zero() {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

fn reference_pattern(r: Reference) -> HoroballPattern {
    let mut centers = Vec::new();
    for a in 0..2i64 {
        for b in 0..2i64 {
            let (ba, bb) = (BigInt::from(a), BigInt::from(b));
            if r.contains(&ba, &bb) {
                centers.push((HPoint::int(a, b), Reference::color(&ba, &bb)));
            }
        }
    }
    HoroballPattern::from_centers(centers, HPoint::int(2, 0)).expect("reference pattern")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationReport {
    pub order: u32,
    pub center: HPoint,
    /// The rotation maps the colored center set onto itself.
    pub maps_pattern: bool,
    /// A red center fixed by the rotation composed with some translation.
    pub fixes_red_center: Option<HPoint>,
}

impl RotationReport {
    /// A symmetry that fixes no red center, so no crossing circle sits at
    /// one of its fixed points.
    pub fn admissible(&self) -> bool {
        self.maps_pattern && self.fixes_red_center.is_none()
    }
}

const FIXED_POINT_RANGE: i64 = 4;

pub fn rotation_report(p: &HoroballPattern, order: u32, center: &HPoint) -> Result<RotationReport, HoroballError> {
    let mut maps = true;
    for (c, col) in &p.centers {
        if p.color_at(&rotate(c, center, order)?) != Some(*col) {
            maps = false;
            break;
        }
    }
    if maps {
        for t in p.generators() {
            if !p.is_translation_symmetry(&rotate_vector(&t, order)?) {
                maps = false;
                break;
            }
        }
    }
    let mut fixes_red_center = None;
    if maps {
        // gamma∘R fixes center + (I - R)^{-1} t for the translation t of gamma.
        'search: for a in -FIXED_POINT_RANGE..=FIXED_POINT_RANGE {
            for b in -FIXED_POINT_RANGE..=FIXED_POINT_RANGE {
                let t = HoroballPattern::meridian()
                    .scale(&QSqrt3::from_i64(a))
                    .add(&p.longitude.scale(&QSqrt3::from_i64(b)));
                let z = center.add(&solve_fixed(&t, order)?);
                if p.color_at(&z) == Some(Color::Red) {
                    fixes_red_center = Some(p.reduce(&z));
                    break 'search;
                }
            }
        }
    }
    Ok(RotationReport {
        order,
        center: center.clone(),
        maps_pattern: maps,
        fixes_red_center,
    })
}

/// `(I - R)^{-1} t` for the rotation `R` of the given order.
fn solve_fixed(t: &HPoint, order: u32) -> Result<HPoint, HoroballError> {
    let (c, s) = match order {
        2 => (QSqrt3::from_i64(-1), QSqrt3::zero()),
        3 => (QSqrt3::rational(rat(-1, 2)), QSqrt3::new(BigRational::zero(), rat(1, 2))),
        4 => (QSqrt3::zero(), QSqrt3::from_i64(1)),
        _ => return Err(HoroballError::InvalidOrder(order)),
    };
    // I - R = [[1-c, s], [-s, 1-c]], determinant (1-c)^2 + s^2.
    let one_c = &QSqrt3::from_i64(1) - &c;
    let det = &(&one_c * &one_c) + &(&s * &s);
    let x = &(&(&one_c * &t.x) - &(&s * &t.y)) / &det;
    let y = &(&(&s * &t.x) + &(&one_c * &t.y)) / &det;
    Ok(HPoint::new(x, y))
}

/// Whether the rotation of the given order about `center` maps the colored
/// center set to itself.
pub fn rotation_symmetry_test(p: &HoroballPattern, order: u32, center: &HPoint) -> Result<bool, HoroballError> {
    Ok(rotation_report(p, order, center)?.maps_pattern)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Order3Report {
    /// Lines not of the form `k sqrt 3`; empty when the necessary condition holds.
    pub lines_off_sqrt3_lattice: Vec<QSqrt3>,
    /// Distance from a vertex to the barycenter of the unit equilateral triangle.
    pub x: QSqrt3,
    /// `x^2 - (1/2)^2 - (sqrt3/2 - x)^2`.
    pub x_residual: QSqrt3,
    /// Radius of the largest ball in the interstice.
    pub r: QSqrt3,
    /// `(1/2 + r)^2 - (1/2 - r)^2 - x^2`.
    pub r_residual: QSqrt3,
    /// `sqrt3 - 2(r + x)`, exactly `(sqrt3 - 1)/3`.
    pub gap: QSqrt3,
    pub gap_enclosure: Interval,
    /// Minimum number of vertices of an unshaded face under an order-3 symmetry.
    pub face_vertices_at_least: u32,
}

impl Order3Report {
    pub fn lines_condition(&self) -> bool {
        self.lines_off_sqrt3_lattice.is_empty()
    }

    /// An order-3 symmetry would make every nerve vertex at least 6-valent,
    /// which no triangulated sphere allows; so it never exists.
    pub fn order3_possible(&self) -> bool {
        false
    }
}

pub fn order3_obstruction(p: &HoroballPattern) -> Order3Report {
    let lines: Vec<QSqrt3> = match &p.lines {
        Some(l) => l.clone(),
        None => {
            let mut xs: Vec<QSqrt3> = p.centers.keys().map(|c| c.x.clone()).collect();
            xs.dedup();
            xs
        }
    };
    let half = QSqrt3::rational(rat(1, 2));
    let h = QSqrt3::new(BigRational::zero(), rat(1, 2));
    // x^2 = 1/4 + (h - x)^2 is linear in x: x = (1/4 + h^2) / (2h).
    let x = &(&(&half * &half) + &(&h * &h)) / &(&QSqrt3::from_i64(2) * &h);
    let x_residual = &(&x * &x) - &(&(&half * &half) + &(&(&h - &x) * &(&h - &x)));
    // (1/2 - r)^2 + x^2 = (1/2 + r)^2 gives r = x^2 / 2.
    let r = &(&x * &x) / &QSqrt3::from_i64(2);
    let r_residual = &(&(&(&half + &r) * &(&half + &r)) - &(&(&half - &r) * &(&half - &r))) - &(&x * &x);
    let gap = &QSqrt3::sqrt3() - &(&QSqrt3::from_i64(2) * &(&r + &x));
    let gap_enclosure = Interval::sqrt3() - Interval::from_i64(2) * (r.to_interval() + Interval::sqrt3().recip());
    Order3Report {
        lines_off_sqrt3_lattice: lines.into_iter().filter(|l| l.sqrt3_multiple().is_none()).collect(),
        x,
        x_residual,
        r,
        r_residual,
        gap,
        gap_enclosure,
        face_vertices_at_least: 6,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order4Kind {
    Even,
    Odd,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order4Classification {
    pub kind: Order4Kind,
    /// For `Even`: whether every Gaussian integer is a center.
    pub complete: bool,
    /// Colors match the reference only after exchanging red and blue.
    pub colors_swapped: bool,
    /// Blue centers in `[0, 2)^2` that are admissible order-4 centers.
    pub blue_fixed_points: Vec<HPoint>,
    /// Centers found in `[0, 2)^2`.
    pub square_centers: Vec<(HPoint, Color)>,
}

fn matches_reference(p: &HoroballPattern, r: Reference, swapped: bool) -> bool {
    let (Some(lx), Some(ly)) = (p.longitude.x.as_integer(), p.longitude.y.as_integer()) else {
        return false;
    };
    let color = |a: &BigInt, b: &BigInt| {
        let c = Reference::color(a, b);
        if swapped {
            c.swap()
        } else {
            c
        }
    };
    // The reference must be invariant under the longitude.
    for a in 0..2i64 {
        for b in 0..2i64 {
            let (a0, b0) = (BigInt::from(a), BigInt::from(b));
            let (a1, b1) = (&a0 + &lx, &b0 + &ly);
            if r.contains(&a0, &b0) != r.contains(&a1, &b1) || (r.contains(&a0, &b0) && color(&a0, &b0) != color(&a1, &b1)) {
                return false;
            }
        }
    }
    for (c, col) in &p.centers {
        match c.as_integers() {
            Some((a, b)) if r.contains(&a, &b) && color(&a, &b) == *col => {}
            _ => return false,
        }
    }
    let Some(n) = lx.to_i64() else { return false };
    for a in 0..n {
        for b in 0..2i64 {
            let (ba, bb) = (BigInt::from(a), BigInt::from(b));
            if r.contains(&ba, &bb) && !p.centers.contains_key(&HPoint::int(a, b)) {
                return false;
            }
        }
    }
    true
}

pub fn classify_order4(p: &HoroballPattern) -> Order4Classification {
    let two = QSqrt3::from_i64(2);
    let square_centers: Vec<(HPoint, Color)> = p
        .centers_in_window(&QSqrt3::zero(), &two)
        .into_iter()
        .filter(|(c, _)| c.y < two)
        .collect();
    let found = [
        (Reference::EvenComplete, Order4Kind::Even, true),
        (Reference::EvenPartial, Order4Kind::Even, false),
        (Reference::Odd, Order4Kind::Odd, false),
    ]
    .into_iter()
    .flat_map(|(r, k, c)| [(r, k, c, false), (r, k, c, true)])
    .find(|&(r, _, _, s)| matches_reference(p, r, s));
    let Some((_, kind, complete, colors_swapped)) = found else {
        return Order4Classification {
            kind: Order4Kind::None,
            complete: false,
            colors_swapped: false,
            blue_fixed_points: vec![],
            square_centers,
        };
    };
    let blue_fixed_points = if kind == Order4Kind::Even {
        square_centers
            .iter()
            .filter(|(_, col)| *col == Color::Blue)
            .filter(|(c, _)| rotation_report(p, 4, c).map(|r| r.admissible()).unwrap_or(false))
            .map(|(c, _)| c.clone())
            .collect()
    } else {
        vec![]
    };
    Order4Classification {
        kind,
        complete,
        colors_swapped,
        blue_fixed_points,
        square_centers,
    }
}

/// Full-sized centers in `[0, 2)^2` are exactly the Gaussian integers there.
pub fn full_sized_iff_gaussian(p: &HoroballPattern) -> bool {
    let c = classify_order4(p);
    let mut got: Vec<HPoint> = c.square_centers.into_iter().map(|(c, _)| c).collect();
    got.sort();
    let mut want: Vec<HPoint> = (0..2).flat_map(|a| (0..2).map(move |b| HPoint::int(a, b))).collect();
    want.sort();
    got == want
}

pub fn sqrt3_lines(k: &[i64]) -> Vec<QSqrt3> {
    k.iter().map(|&k| QSqrt3::new(BigRational::zero(), int(k))).collect()
}
