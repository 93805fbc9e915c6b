//! Exact rationals and the quadratic field Q(sqrt 3).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::interval::Interval;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("malformed number `{0}`")]
    Number(String),
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses an integer, a fraction `p/q`, or a decimal with optional exponent.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let t = s.trim();
    let bad = || ParseError::Number(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(n / d);
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let n = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    let scale = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let mut q = BigRational::from_integer(n);
    if scale >= 0 {
        q *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        q /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -q } else { q })
}

/// a + b·sqrt(3) with rational a, b.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt3 {
    pub a: BigRational,
    pub b: BigRational,
}

impl QSqrt3 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt3 { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        QSqrt3 {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        QSqrt3::rational(int(n))
    }

    pub fn sqrt3() -> Self {
        QSqrt3 {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        QSqrt3::from_i64(0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    /// `Some(k)` when the value is k·sqrt(3) for an integer k.
    pub fn sqrt3_multiple(&self) -> Option<BigInt> {
        (self.a.is_zero() && self.b.is_integer()).then(|| self.b.to_integer())
    }

    pub fn conjugate(&self) -> Self {
        QSqrt3 {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - int(3) * &self.b * &self.b
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // Opposite signs: compare a^2 with 3b^2.
        let a2 = &self.a * &self.a;
        let b2 = int(3) * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn recip(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QSqrt3 {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    pub fn to_interval(&self) -> Interval {
        Interval::from_rational(&self.a) + Interval::from_rational(&self.b) * Interval::sqrt3()
    }

    pub fn to_f64(&self) -> f64 {
        self.to_interval().mid()
    }

    /// Accepts `"2"`, `"1/2"`, `"sqrt3"`, `"-sqrt3/2"`, `"3*sqrt3"`,
    /// `"1/2+3/2*sqrt3"`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ParseError::Number(s.to_string());
        if t.is_empty() {
            return Err(bad());
        }
        let bytes = t.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            let c = bytes[i];
            let prev = bytes[i - 1];
            if (c == b'+' || c == b'-') && prev != b'e' && prev != b'E' && prev != b'/' && prev != b'*' {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut out = QSqrt3::zero();
        for term in terms {
            if let Some(pos) = term.find("sqrt3") {
                let before = term[..pos].trim_end_matches('*');
                let after = &term[pos + 5..];
                let mut c = match before {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    x => parse_rational(x)?,
                };
                if let Some(d) = after.strip_prefix('/') {
                    let d = parse_rational(d)?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    c /= d;
                } else if !after.is_empty() {
                    return Err(bad());
                }
                out.b += c;
            } else {
                out.a += parse_rational(term)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt3", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}*sqrt3", self.a, -&self.b)
                } else {
                    write!(f, "{}+{}*sqrt3", self.a, self.b)
                }
            }
        }
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<'a> Add<&'a QSqrt3> for &'a QSqrt3 {
    type Output = QSqrt3;
    fn add(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3 {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl<'a> Sub<&'a QSqrt3> for &'a QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3 {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl<'a> Mul<&'a QSqrt3> for &'a QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3 {
            a: &self.a * &o.a + int(3) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl<'a> Div<&'a QSqrt3> for &'a QSqrt3 {
    type Output = QSqrt3;
    fn div(self, o: &QSqrt3) -> QSqrt3 {
        self * &o.recip().expect("division by zero in Q(sqrt3)")
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSqrt3 {
            type Output = QSqrt3;
            fn $m(self, o: QSqrt3) -> QSqrt3 {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(parse_rational("16.01").unwrap(), rat(1601, 100));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), int(250));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn parses_quadratic_field_elements() {
        assert_eq!(QSqrt3::parse("sqrt3").unwrap(), QSqrt3::sqrt3());
        assert_eq!(QSqrt3::parse("-sqrt3/2").unwrap(), QSqrt3::new(int(0), rat(-1, 2)));
        assert_eq!(QSqrt3::parse("1/2 + 3/2*sqrt3").unwrap(), QSqrt3::new(rat(1, 2), rat(3, 2)));
        assert_eq!(QSqrt3::parse("2-sqrt3").unwrap(), QSqrt3::new(int(2), int(-1)));
        assert!(QSqrt3::parse("sqrt3x").is_err());
    }

    #[test]
    fn field_arithmetic() {
        let s = QSqrt3::sqrt3();
        assert_eq!(&s * &s, QSqrt3::from_i64(3));
        let x = QSqrt3::new(int(2), int(1));
        let y = &QSqrt3::from_i64(1) / &x;
        assert_eq!(&x * &y, QSqrt3::from_i64(1));
        assert_eq!(y, QSqrt3::new(int(2), int(-1)));
    }

    #[test]
    fn sign_is_exact() {
        assert_eq!(QSqrt3::new(int(-1), int(1)).signum(), Ordering::Greater);
        assert_eq!(QSqrt3::new(int(2), int(-1)).signum(), Ordering::Greater);
        assert_eq!(QSqrt3::new(int(1), int(-1)).signum(), Ordering::Less);
        assert_eq!(QSqrt3::new(int(-2), int(1)).signum(), Ordering::Less);
        assert!(QSqrt3::sqrt3() > QSqrt3::new(rat(173, 100), int(0)));
        assert!(QSqrt3::sqrt3() < QSqrt3::new(rat(174, 100), int(0)));
    }

    #[test]
    fn sqrt3_multiples() {
        assert_eq!(QSqrt3::parse("4*sqrt3").unwrap().sqrt3_multiple(), Some(BigInt::from(4)));
        assert_eq!(QSqrt3::parse("sqrt3/2").unwrap().sqrt3_multiple(), None);
        assert_eq!(QSqrt3::from_i64(0).sqrt3_multiple(), Some(BigInt::from(0)));
        assert_eq!(QSqrt3::from_i64(2).sqrt3_multiple(), None);
    }
}
