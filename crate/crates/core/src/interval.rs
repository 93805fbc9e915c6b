//! Closed `f64` intervals with outward rounding.
//!
//! Every arithmetic operation returns an interval containing the exact real
//! result. Rounding direction is emulated with error-free transforms
//! (two-sum and fused multiply-add residuals), so the enclosures are tight:
//! a result that happens to be exact stays a point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::exact::{parse_rational, ParseError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

// Results this small may have lost bits to gradual underflow, where the
// residual tricks below are no longer exact.
const TINY: f64 = 1e-290;

fn add_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if s == f64::INFINITY {
        return f64::MAX;
    }
    if !s.is_finite() {
        return s;
    }
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    if err < 0.0 {
        s.next_down()
    } else {
        s
    }
}

fn add_up(a: f64, b: f64) -> f64 {
    -add_down(-a, -b)
}

fn mul_down(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    let p = a * b;
    if p == f64::INFINITY {
        return f64::MAX;
    }
    if !p.is_finite() {
        return p;
    }
    if p.abs() < TINY {
        return p.next_down();
    }
    let e = a.mul_add(b, -p);
    if e < 0.0 {
        p.next_down()
    } else {
        p
    }
}

fn mul_up(a: f64, b: f64) -> f64 {
    -mul_down(-a, b)
}

fn div_down(a: f64, b: f64) -> f64 {
    let q = a / b;
    if q == f64::INFINITY {
        return f64::MAX;
    }
    if !q.is_finite() {
        return q;
    }
    if q.abs() < TINY {
        return q.next_down();
    }
    let r = (-q).mul_add(b, a);
    if (r < 0.0) != (b < 0.0) && r != 0.0 {
        q.next_down()
    } else {
        q
    }
}

fn div_up(a: f64, b: f64) -> f64 {
    -div_down(-a, b)
}

fn sqrt_down(x: f64) -> f64 {
    let s = x.sqrt();
    if s == 0.0 {
        return 0.0;
    }
    let r = (-s).mul_add(s, x);
    if r < 0.0 {
        s.next_down()
    } else {
        s
    }
}

fn sqrt_up(x: f64) -> f64 {
    let s = x.sqrt();
    if s == 0.0 {
        return if x > 0.0 { f64::MIN_POSITIVE } else { 0.0 };
    }
    let r = (-s).mul_add(s, x);
    if r > 0.0 {
        s.next_up()
    } else {
        s
    }
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval::new(x, x)
    }

    pub fn zero() -> Self {
        Interval::point(0.0)
    }

    pub fn one() -> Self {
        Interval::point(1.0)
    }

    pub fn entire() -> Self {
        Interval::new(f64::NEG_INFINITY, f64::INFINITY)
    }

    pub fn from_i64(n: i64) -> Self {
        let x = n as f64;
        if x as i128 == n as i128 {
            Interval::point(x)
        } else {
            Interval::new(x.next_down(), x.next_up())
        }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        let x = n.to_f64().unwrap_or(f64::NAN);
        if x.is_finite() && BigInt::from_f64(x).as_ref() == Some(n) {
            Interval::point(x)
        } else if x.is_finite() {
            Interval::new(x.next_down(), x.next_up())
        } else if n.is_negative() {
            Interval::new(f64::NEG_INFINITY, -f64::MAX)
        } else {
            Interval::new(f64::MAX, f64::INFINITY)
        }
    }

    /// Tightest available enclosure of an exact rational.
    pub fn from_rational(q: &BigRational) -> Self {
        Interval::from_bigint(q.numer()) / Interval::from_bigint(q.denom())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Interval::from_i64(n) / Interval::from_i64(d)
    }

    /// Parses `"16.01"`, `"-3/4"`, `"1e-3"` and multiples of pi such as
    /// `"pi/2"` or `"2*pi/3"`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        if t.contains("pi") {
            return parse_pi_multiple(t);
        }
        Ok(Interval::from_rational(&parse_rational(t)?))
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn mid(&self) -> f64 {
        if self.lo == self.hi {
            return self.lo;
        }
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return if self.lo.is_finite() {
                self.lo
            } else if self.hi.is_finite() {
                self.hi
            } else {
                0.0
            };
        }
        self.lo * 0.5 + self.hi * 0.5
    }

    pub fn width(&self) -> f64 {
        add_up(self.hi, -self.lo)
    }

    /// Upper bound on the distance from the midpoint to either endpoint.
    pub fn radius(&self) -> f64 {
        let m = self.mid();
        add_up(self.hi, -m).max(add_up(m, -self.lo))
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_gt(&self, other: &Interval) -> bool {
        other.certainly_lt(self)
    }

    pub fn certainly_ge(&self, other: &Interval) -> bool {
        other.certainly_le(self)
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi < 0.0
    }

    /// Sign if decided by the enclosure.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo > 0.0 {
            Some(Ordering::Greater)
        } else if self.hi < 0.0 {
            Some(Ordering::Less)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }

    pub fn min(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.min(other.lo), self.hi.min(other.hi))
    }

    pub fn max(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.max(other.lo), self.hi.max(other.hi))
    }

    pub fn abs(&self) -> Interval {
        if self.lo >= 0.0 {
            *self
        } else if self.hi <= 0.0 {
            -*self
        } else {
            Interval::new(0.0, self.hi.max(-self.lo))
        }
    }

    /// Widens symmetrically by `r >= 0`.
    pub fn inflate(&self, r: f64) -> Interval {
        Interval::new(add_down(self.lo, -r), add_up(self.hi, r))
    }

    pub fn square(&self) -> Interval {
        let a = self.abs();
        Interval::new(mul_down(a.lo, a.lo), mul_up(a.hi, a.hi))
    }

    pub fn powi(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::one();
        }
        if n % 2 == 0 {
            return self.square().powi(n / 2);
        }
        if self.lo >= 0.0 || self.hi <= 0.0 {
            let mut acc = *self;
            for _ in 1..n {
                acc = acc * *self;
            }
            acc
        } else {
            *self * self.square().powi((n - 1) / 2)
        }
    }

    pub fn recip(&self) -> Interval {
        Interval::one() / *self
    }

    pub fn sqrt(&self) -> Interval {
        assert!(self.hi >= 0.0, "sqrt of negative interval");
        Interval::new(sqrt_down(self.lo.max(0.0)), sqrt_up(self.hi))
    }

    pub fn exp(&self) -> Interval {
        Interval::new(exp_point(self.lo).lo, exp_point(self.hi).hi)
    }

    pub fn ln(&self) -> Interval {
        assert!(self.lo > 0.0, "ln of non-positive interval");
        Interval::new(ln_point(self.lo).lo, ln_point(self.hi).hi)
    }

    pub fn cosh(&self) -> Interval {
        let a = self.abs();
        let f = |x: f64| {
            let e = exp_point(x);
            (e + e.recip()) * Interval::point(0.5)
        };
        let lo = if a.lo == 0.0 { Interval::one() } else { f(a.lo) };
        Interval::new(lo.lo.max(1.0), f(a.hi).hi)
    }

    pub fn sin(&self) -> Interval {
        let r = self.radius();
        let s = sin_point(self.mid()).inflate(r);
        Interval::new(s.lo.max(-1.0), s.hi.min(1.0))
    }

    pub fn cos(&self) -> Interval {
        let r = self.radius();
        let c = cos_point(self.mid()).inflate(r);
        Interval::new(c.lo.max(-1.0), c.hi.min(1.0))
    }

    pub fn pi() -> Interval {
        let a = atan_series(Interval::ratio(1, 5));
        let b = atan_series(Interval::ratio(1, 239));
        Interval::from_i64(16) * a - Interval::from_i64(4) * b
    }

    pub fn sqrt3() -> Interval {
        Interval::from_i64(3).sqrt()
    }

    pub fn ln2() -> Interval {
        Interval::from_i64(2) * atanh_series(Interval::ratio(1, 3))
    }

    /// Outward-rounded decimal endpoints.
    ///
    /// The lower string denotes a number no larger than the lower endpoint and
    /// the upper string one no smaller than the upper endpoint.
    pub fn to_decimal_strings(&self) -> (String, String) {
        (decimal_down(self.lo), decimal_up(self.hi))
    }

    /// Parses a pair produced by [`Interval::to_decimal_strings`].
    pub fn from_decimal_strings(lo: &str, hi: &str) -> Result<Interval, ParseError> {
        let l = Interval::parse(lo)?;
        let h = Interval::parse(hi)?;
        Ok(Interval::new(l.lo, h.hi))
    }
}

fn exactly_printable(x: f64) -> bool {
    x == 0.0 || (x.fract() == 0.0 && x.abs() < 9.0e15)
}

fn decimal_down(x: f64) -> String {
    if !x.is_finite() || exactly_printable(x) {
        return format_f64(x);
    }
    format_f64(x.next_down())
}

fn decimal_up(x: f64) -> String {
    if !x.is_finite() || exactly_printable(x) {
        return format_f64(x);
    }
    format_f64(x.next_up())
}

fn format_f64(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else if x != 0.0 && (x.abs() < 1e-4 || x.abs() >= 1e16) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn parse_pi_multiple(t: &str) -> Result<Interval, ParseError> {
    let bad = || ParseError::Number(t.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let coeff = match num.strip_suffix("pi") {
        Some(c) => {
            let c = c.trim().trim_end_matches('*').trim();
            match c {
                "" => BigRational::one(),
                "-" => -BigRational::one(),
                _ => parse_rational(c)?,
            }
        }
        None => return Err(bad()),
    };
    let mut x = Interval::from_rational(&coeff) * Interval::pi();
    if let Some(d) = den {
        let d = parse_rational(d)?;
        if d.is_zero() {
            return Err(bad());
        }
        x = x / Interval::from_rational(&d);
    }
    Ok(x)
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, h) = self.to_decimal_strings();
        write!(f, "[{l}, {h}]")
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::new(add_down(self.lo, o.lo), add_up(self.hi, o.hi))
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval::new(add_down(self.lo, -o.hi), add_up(self.hi, -o.lo))
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-self.hi, -self.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let c = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)];
        let lo = c.iter().map(|&(a, b)| mul_down(a, b)).fold(f64::INFINITY, f64::min);
        let hi = c.iter().map(|&(a, b)| mul_up(a, b)).fold(f64::NEG_INFINITY, f64::max);
        Interval::new(lo, hi)
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, o: Interval) -> Interval {
        if o.lo <= 0.0 && o.hi >= 0.0 {
            return Interval::entire();
        }
        let c = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)];
        let lo = c.iter().map(|&(a, b)| div_down(a, b)).fold(f64::INFINITY, f64::min);
        let hi = c.iter().map(|&(a, b)| div_up(a, b)).fold(f64::NEG_INFINITY, f64::max);
        Interval::new(lo, hi)
    }
}

fn factorial_interval(n: u32) -> Interval {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= k;
    }
    Interval::from_bigint(&f)
}

/// exp(x) for a single float, by halving into |y| <= 1/2 and squaring back.
fn exp_point(x: f64) -> Interval {
    assert!(x.is_finite() && x.abs() < 700.0, "exp argument out of range: {x}");
    let mut s = 0;
    let mut y = x;
    while y.abs() > 0.5 {
        y *= 0.5;
        s += 1;
    }
    const N: u32 = 22;
    let yi = Interval::point(y);
    let mut term = Interval::one();
    let mut sum = Interval::one();
    for k in 1..=N {
        term = term * yi / Interval::from_i64(k as i64);
        sum = sum + term;
    }
    // Lagrange remainder with e^|y| <= 2.
    let rem = Interval::point(2.0) * Interval::point(y.abs()).powi(N + 1) / factorial_interval(N + 1);
    let mut e = sum.inflate(rem.hi);
    for _ in 0..s {
        e = e.square();
    }
    e
}

/// Sum of y^(2k+1)/(2k+1) with the geometric tail bound, valid for |y| < 1/2.
fn atanh_series(y: Interval) -> Interval {
    let m = y.abs().hi;
    assert!(m < 0.5);
    let y2 = y.square();
    let mut term = y;
    let mut sum = Interval::zero();
    let mut k = 0u32;
    loop {
        sum = sum + term / Interval::from_i64(2 * k as i64 + 1);
        term = term * y2;
        k += 1;
        if term.abs().hi < 1e-40 || k > 200 {
            break;
        }
    }
    let tail = term.abs() / Interval::from_i64(2 * k as i64 + 1) / (Interval::one() - y2);
    sum.inflate(tail.hi)
}

/// Alternating arctangent series, |y| < 1/2.
fn atan_series(y: Interval) -> Interval {
    assert!(y.abs().hi < 0.5);
    let y2 = y.square();
    let mut term = y;
    let mut sum = Interval::zero();
    let mut k = 0u32;
    loop {
        let t = term / Interval::from_i64(2 * k as i64 + 1);
        sum = if k % 2 == 0 { sum + t } else { sum - t };
        term = term * y2;
        k += 1;
        if term.abs().hi < 1e-40 || k > 200 {
            break;
        }
    }
    let tail = term.abs() / Interval::from_i64(2 * k as i64 + 1);
    sum.inflate(tail.hi)
}

fn ln_point(x: f64) -> Interval {
    assert!(x > 0.0 && x.is_finite());
    let mut m = x;
    let mut e: i64 = 0;
    while m >= 1.0 {
        m *= 0.5;
        e += 1;
    }
    while m < 0.5 {
        m *= 2.0;
        e -= 1;
    }
    let mi = Interval::point(m);
    let y = (mi - Interval::one()) / (mi + Interval::one());
    Interval::from_i64(2) * atanh_series(y) + Interval::from_i64(e) * Interval::ln2()
}

fn sin_point(x: f64) -> Interval {
    assert!(x.abs() <= 8.0, "sin argument out of range: {x}");
    let xi = Interval::point(x);
    let x2 = xi.square();
    let mut term = xi;
    let mut sum = Interval::zero();
    let mut k = 0u32;
    while k < 40 {
        sum = if k % 2 == 0 { sum + term } else { sum - term };
        let d = Interval::from_i64(((2 * k + 2) * (2 * k + 3)) as i64);
        term = term * x2 / d;
        k += 1;
    }
    sum.inflate(term.abs().hi)
}

fn cos_point(x: f64) -> Interval {
    assert!(x.abs() <= 8.0, "cos argument out of range: {x}");
    let x2 = Interval::point(x).square();
    let mut term = Interval::one();
    let mut sum = Interval::zero();
    let mut k = 0u32;
    while k < 40 {
        sum = if k % 2 == 0 { sum + term } else { sum - term };
        let d = Interval::from_i64(((2 * k + 1) * (2 * k + 2)) as i64);
        term = term * x2 / d;
        k += 1;
    }
    sum.inflate(term.abs().hi)
}
