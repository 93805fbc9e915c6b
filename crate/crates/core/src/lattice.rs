//! Planar translation lattices, greedy (Lagrange-Gauss) reduction and the
//! index-2 sub- and superlattice machinery used for cusp quotients.
//!
//! Coordinates are generic over [`Scalar`]: exact [`BigRational`] or outward
//! rounded [`Interval`]. Reduction control flow uses best-guess comparisons;
//! the resulting basis is then certified with rigorous ones.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::interval::Interval;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("generators are linearly dependent")]
    DegenerateLattice,
    #[error("basis is not geometric: {0}")]
    NotGeometric(&'static str),
    #[error("comparison could not be certified with the available precision")]
    Uncertified,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("quotient bound violated for superlattice {index}: max squared length {max_len_sq}")]
    BoundViolated { index: usize, max_len_sq: f64 },
    #[error("reduced basis matches none of the listed forms for sublattice {0}")]
    Unclassified(usize),
}

pub trait Scalar:
    Clone + Debug + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn from_i64(n: i64) -> Self;
    fn halve(&self) -> Self;
    /// Sign when it can be certified.
    fn sign(&self) -> Option<Ordering>;
    /// Best-guess sign, used only for control flow.
    fn approx_sign(&self) -> Ordering;
    /// Nearest integer to `num / den`; exact halves round down.
    fn nearest_integer_ratio(num: &Self, den: &Self) -> Self;
    fn approx_f64(&self) -> f64;

    fn certainly_nonneg(&self) -> bool {
        matches!(self.sign(), Some(Ordering::Greater | Ordering::Equal))
    }

    fn certainly_positive(&self) -> bool {
        self.sign() == Some(Ordering::Greater)
    }

    fn possibly_zero(&self) -> bool {
        matches!(self.sign(), None | Some(Ordering::Equal))
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn halve(&self) -> Self {
        self / BigRational::from_integer(BigInt::from(2))
    }
    fn sign(&self) -> Option<Ordering> {
        Some(self.cmp(&Zero::zero()))
    }
    fn approx_sign(&self) -> Ordering {
        self.cmp(&Zero::zero())
    }
    fn nearest_integer_ratio(num: &Self, den: &Self) -> Self {
        let mu = num / den;
        let half = BigRational::new(One::one(), BigInt::from(2));
        (mu - half).ceil()
    }
    fn approx_f64(&self) -> f64 {
        self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for Interval {
    fn zero() -> Self {
        Interval::zero()
    }
    fn from_i64(n: i64) -> Self {
        Interval::from_i64(n)
    }
    fn halve(&self) -> Self {
        *self * Interval::point(0.5)
    }
    fn sign(&self) -> Option<Ordering> {
        Interval::sign(self)
    }
    fn approx_sign(&self) -> Ordering {
        self.mid().partial_cmp(&0.0).unwrap_or(Ordering::Equal)
    }
    fn nearest_integer_ratio(num: &Self, den: &Self) -> Self {
        let mu = num.mid() / den.mid();
        Interval::point((mu - 0.5).ceil())
    }
    fn approx_f64(&self) -> f64 {
        self.mid()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlanarVector<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> PlanarVector<S> {
    pub fn new(x: S, y: S) -> Self {
        PlanarVector { x, y }
    }

    pub fn dot(&self, o: &Self) -> S {
        self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone()
    }

    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    pub fn cross(&self, o: &Self) -> S {
        self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone()
    }

    pub fn add(&self, o: &Self) -> Self {
        PlanarVector::new(self.x.clone() + o.x.clone(), self.y.clone() + o.y.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        PlanarVector::new(self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    pub fn scale(&self, t: &S) -> Self {
        PlanarVector::new(t.clone() * self.x.clone(), t.clone() * self.y.clone())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&S::from_i64(k))
    }

    pub fn halve(&self) -> Self {
        PlanarVector::new(self.x.halve(), self.y.halve())
    }

    pub fn neg(&self) -> Self {
        PlanarVector::new(-self.x.clone(), -self.y.clone())
    }

    /// Best-guess lexicographic comparison on (x, y).
    pub fn approx_lex_cmp(&self, o: &Self) -> Ordering {
        (self.x.clone() - o.x.clone())
            .approx_sign()
            .then_with(|| (self.y.clone() - o.y.clone()).approx_sign())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.approx_f64(), self.y.approx_f64())
    }
}

pub type RationalVector = PlanarVector<BigRational>;

pub fn rvec(x: i64, y: i64) -> RationalVector {
    PlanarVector::new(BigRational::from_i64(x), BigRational::from_i64(y))
}

#[derive(Clone, Debug, PartialEq)]
pub struct TranslationLattice<S> {
    pub u: PlanarVector<S>,
    pub v: PlanarVector<S>,
}

impl<S: Scalar> TranslationLattice<S> {
    pub fn new(u: PlanarVector<S>, v: PlanarVector<S>) -> Result<Self, LatticeError> {
        match u.cross(&v).sign() {
            Some(Ordering::Equal) => Err(LatticeError::DegenerateLattice),
            None => Err(LatticeError::Uncertified),
            Some(_) => Ok(TranslationLattice { u, v }),
        }
    }

    /// Signed area of the fundamental parallelogram spanned by the generators.
    pub fn signed_covolume(&self) -> S {
        self.u.cross(&self.v)
    }

    pub fn covolume(&self) -> S {
        let d = self.signed_covolume();
        if d.approx_sign() == Ordering::Less {
            -d
        } else {
            d
        }
    }
}

impl TranslationLattice<BigRational> {
    /// Integer coordinates of `w` in the generators, when `w` is in the lattice.
    pub fn coordinates(&self, w: &RationalVector) -> Option<(BigInt, BigInt)> {
        let d = self.u.cross(&self.v);
        let n = w.cross(&self.v) / &d;
        let m = self.u.cross(w) / &d;
        (n.is_integer() && m.is_integer()).then(|| (n.to_integer(), m.to_integer()))
    }

    pub fn contains(&self, w: &RationalVector) -> bool {
        self.coordinates(w).is_some()
    }

    /// Whether `p` and `q` generate exactly this lattice.
    pub fn generated_by(&self, p: &RationalVector, q: &RationalVector) -> bool {
        self.contains(p) && self.contains(q) && p.cross(q).abs() == self.signed_covolume().abs()
    }
}

/// A basis `{a, b}` with `|a| <= |b|` and `2|<a,b>| <= |a|^2`; its lengths are
/// the two successive minima of the lattice it generates.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricBasis<S> {
    pub a: PlanarVector<S>,
    pub b: PlanarVector<S>,
}

impl<S: Scalar> GeometricBasis<S> {
    pub fn new(a: PlanarVector<S>, b: PlanarVector<S>) -> Result<Self, LatticeError> {
        match a.cross(&b).sign() {
            Some(Ordering::Equal) => return Err(LatticeError::DegenerateLattice),
            None => return Err(LatticeError::Uncertified),
            Some(_) => {}
        }
        let a2 = a.norm_sq();
        let ab2 = a.dot(&b) + a.dot(&b);
        let checks = [
            (b.norm_sq() - a2.clone(), "|a| > |b|"),
            (a2.clone() - ab2.clone(), "2<a,b> > |a|^2"),
            (a2 + ab2, "-2<a,b> > |a|^2"),
        ];
        for (d, what) in checks {
            match d.sign() {
                Some(Ordering::Less) => return Err(LatticeError::NotGeometric(what)),
                None => return Err(LatticeError::Uncertified),
                _ => {}
            }
        }
        Ok(GeometricBasis { a, b })
    }

    pub fn lattice(&self) -> TranslationLattice<S> {
        TranslationLattice {
            u: self.a.clone(),
            v: self.b.clone(),
        }
    }

    pub fn max_norm_sq(&self) -> S {
        self.b.norm_sq()
    }
}

const MAX_REDUCTION_STEPS: usize = 100_000;

/// Greedy reduction without certification; always returns a basis of the
/// same lattice.
pub fn reduce_pair<S: Scalar>(lat: &TranslationLattice<S>) -> Result<(PlanarVector<S>, PlanarVector<S>), LatticeError> {
    let (mut a, mut b) = (lat.u.clone(), lat.v.clone());
    if (b.norm_sq() - a.norm_sq()).approx_sign() == Ordering::Less {
        std::mem::swap(&mut a, &mut b);
    }
    let mut steps = 0;
    loop {
        let t = S::nearest_integer_ratio(&a.dot(&b), &a.norm_sq());
        b = b.sub(&a.scale(&t));
        if (b.norm_sq() - a.norm_sq()).approx_sign() == Ordering::Less {
            std::mem::swap(&mut a, &mut b);
        } else {
            break;
        }
        steps += 1;
        if steps > MAX_REDUCTION_STEPS {
            return Err(LatticeError::Uncertified);
        }
    }
    if (b.norm_sq() - a.norm_sq()).approx_sign() == Ordering::Equal && b.approx_lex_cmp(&a) == Ordering::Greater {
        std::mem::swap(&mut a, &mut b);
    }
    Ok((a, b))
}

/// Geometric basis of `lat`.
///
/// Ties between equal-length candidates are settled deterministically: `b` is
/// chosen with `<a,b> >= 0`, and when `|a| = |b|` the lexicographically
/// greater vector comes first.
pub fn reduce_basis<S: Scalar>(lat: &TranslationLattice<S>) -> Result<GeometricBasis<S>, LatticeError> {
    let (a, b) = reduce_pair(lat)?;
    GeometricBasis::new(a, b)
}

/// Exhaustive shortest-pair search.
///
/// A scan of the box `|n|, |m| <= bound` seeds a radius `R` (the second
/// vector found, so `R >= lambda2`); every lattice point `n·u + m·v` with
/// `|n·u + m·v| <= R` is then enumerated exactly and the two shortest
/// independent ones are returned. The result does not depend on `bound`.
pub fn brute_force_shortest(
    lat: &TranslationLattice<BigRational>,
    bound: u64,
) -> Result<GeometricBasis<BigRational>, LatticeError> {
    let d = lat.u.cross(&lat.v);
    if d.is_zero() {
        return Err(LatticeError::DegenerateLattice);
    }
    let g11 = lat.u.norm_sq();
    let g12 = lat.u.dot(&lat.v);
    let g22 = lat.v.norm_sq();
    let den = num_integer::lcm(
        num_integer::lcm(g11.denom().clone(), g12.denom().clone()),
        g22.denom().clone(),
    );
    let scale = BigRational::from_integer(den);
    let gi = |g: &BigRational| (g * &scale).to_integer();
    let gram = [gi(&g11), gi(&g12), gi(&g22)];

    let b = bound.clamp(1, 64) as i64;
    let mut boxed = Vec::new();
    for n in -b..=b {
        for m in -b..=b {
            if n != 0 || m != 0 {
                boxed.push((n, m));
            }
        }
    }
    let (_, seed_b) = pick_pair(&gram, &boxed, lat);
    let radius = quad(&gram, seed_b.0, seed_b.1);
    let inside = ellipse_points(&gram, &radius);
    let (a_c, b_c) = pick_pair(&gram, &inside, lat);
    let a = lat.u.scale_int(a_c.0).add(&lat.v.scale_int(a_c.1));
    let bv = lat.u.scale_int(b_c.0).add(&lat.v.scale_int(b_c.1));
    GeometricBasis::new(a, bv)
}

fn quad(g: &[BigInt; 3], n: i64, m: i64) -> BigInt {
    let n = BigInt::from(n);
    let m = BigInt::from(m);
    &n * &n * &g[0] + BigInt::from(2) * &n * &m * &g[1] + &m * &m * &g[2]
}

/// All nonzero `(n, m)` with `q(n, m) <= r`.
fn ellipse_points(g: &[BigInt; 3], r: &BigInt) -> Vec<(i64, i64)> {
    let det = &g[0] * &g[2] - &g[1] * &g[1];
    // q(n,m) <= r forces m^2 * det <= g11 * r.
    let m_max = (&g[0] * r / &det).sqrt().to_i64().expect("enumeration radius too large") + 1;
    let mut out = Vec::new();
    for m in -m_max..=m_max {
        let mb = BigInt::from(m);
        let disc = &g[0] * r - &det * &mb * &mb;
        if disc.is_negative() {
            continue;
        }
        let s = disc.sqrt() + 1;
        let c = -(&g[1] * &mb);
        let lo = num_integer::Integer::div_floor(&(&c - &s), &g[0]).to_i64().unwrap() - 1;
        let hi = num_integer::Integer::div_ceil(&(&c + &s), &g[0]).to_i64().unwrap() + 1;
        for n in lo..=hi {
            if (n != 0 || m != 0) && quad(g, n, m) <= *r {
                out.push((n, m));
            }
        }
    }
    out
}

/// Shortest vector, then shortest vector independent of it, among `cands`.
fn pick_pair(gram: &[BigInt; 3], cands: &[(i64, i64)], lat: &TranslationLattice<BigRational>) -> ((i64, i64), (i64, i64)) {
    let vec_of = |c: (i64, i64)| lat.u.scale_int(c.0).add(&lat.v.scale_int(c.1));
    let vals: Vec<BigInt> = cands.iter().map(|&(n, m)| quad(gram, n, m)).collect();

    let mut ia = 0;
    for i in 1..cands.len() {
        match vals[i].cmp(&vals[ia]) {
            Ordering::Less => ia = i,
            Ordering::Equal if vec_of(cands[i]).approx_lex_cmp(&vec_of(cands[ia])) == Ordering::Greater => ia = i,
            _ => {}
        }
    }
    let a_c = cands[ia];
    let a = vec_of(a_c);

    let mut ib: Option<usize> = None;
    for (i, &(n, m)) in cands.iter().enumerate() {
        if n * a_c.1 - m * a_c.0 == 0 {
            continue;
        }
        let better = match ib {
            None => true,
            Some(j) => match vals[i].cmp(&vals[j]) {
                Ordering::Less => true,
                Ordering::Equal => {
                    let w = vec_of(cands[i]);
                    let cur = vec_of(cands[j]);
                    let wpos = !a.dot(&w).is_negative();
                    let cpos = !a.dot(&cur).is_negative();
                    (wpos && !cpos) || (wpos == cpos && w.approx_lex_cmp(&cur) == Ordering::Greater)
                }
                Ordering::Greater => false,
            },
        };
        if better {
            ib = Some(i);
        }
    }
    (a_c, cands[ib.expect("box contains independent vectors")])
}

/// The three index-2 sublattices `<2u,v>`, `<u,2v>`, `<u+v,2u>`.
pub fn index_two_sublattices<S: Scalar>(lat: &TranslationLattice<S>) -> [TranslationLattice<S>; 3] {
    let (u, v) = (&lat.u, &lat.v);
    [
        TranslationLattice {
            u: u.scale_int(2),
            v: v.clone(),
        },
        TranslationLattice {
            u: u.clone(),
            v: v.scale_int(2),
        },
        TranslationLattice {
            u: u.add(v),
            v: u.scale_int(2),
        },
    ]
}

/// The three index-2 superlattices `<u/2,v>`, `<u,v/2>`, `<(u+v)/2,u>`.
pub fn index_two_superlattices<S: Scalar>(lat: &TranslationLattice<S>) -> [TranslationLattice<S>; 3] {
    let (u, v) = (&lat.u, &lat.v);
    [
        TranslationLattice {
            u: u.halve(),
            v: v.clone(),
        },
        TranslationLattice {
            u: u.clone(),
            v: v.halve(),
        },
        TranslationLattice {
            u: u.add(v).halve(),
            v: u.clone(),
        },
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientCase {
    /// `a` stays in the sublattice, `2b` is added.
    One,
    /// `b` stays in the sublattice, `2a` is added.
    Two,
    /// Neither `a` nor `b` stays; `a ± b` does.
    Three,
}

impl QuotientCase {
    pub fn label(&self) -> &'static str {
        match self {
            QuotientCase::One => "1",
            QuotientCase::Two => "2",
            QuotientCase::Three => "3",
        }
    }
}

type Form = (QuotientCase, &'static str, (i64, i64), (i64, i64));

const FORMS: [Form; 11] = [
    (QuotientCase::One, "{a, 2b}", (1, 0), (0, 2)),
    (QuotientCase::One, "{a, a+2b}", (1, 0), (1, 2)),
    (QuotientCase::One, "{a, a-2b}", (1, 0), (1, -2)),
    (QuotientCase::Two, "{b, 2a}", (0, 1), (2, 0)),
    (QuotientCase::Two, "{b, b+2a}", (0, 1), (2, 1)),
    (QuotientCase::Two, "{b, b-2a}", (0, 1), (-2, 1)),
    (QuotientCase::Three, "{a+b, a-b}", (1, 1), (1, -1)),
    (QuotientCase::Three, "{a+b, 2a}", (1, 1), (2, 0)),
    (QuotientCase::Three, "{a-b, 2a}", (1, -1), (2, 0)),
    (QuotientCase::Three, "{a+b, 2b}", (1, 1), (0, 2)),
    (QuotientCase::Three, "{a-b, 2b}", (1, -1), (0, 2)),
];

#[derive(Clone, Debug, PartialEq)]
pub struct QuotientRecord {
    pub sublattice: TranslationLattice<BigRational>,
    pub basis: GeometricBasis<BigRational>,
    pub case: QuotientCase,
    pub form: &'static str,
}

/// Reduces each index-2 sublattice of the lattice spanned by `g1` and names
/// the form its geometric basis takes in terms of `a` and `b`.
pub fn classify_quotient_basis(g1: &GeometricBasis<BigRational>) -> Result<[QuotientRecord; 3], LatticeError> {
    let lat = g1.lattice();
    let subs = index_two_sublattices(&lat);
    let mut out = Vec::with_capacity(3);
    for (i, s) in subs.into_iter().enumerate() {
        let basis = reduce_basis(&s)?;
        let mut lens = [basis.a.norm_sq(), basis.b.norm_sq()];
        lens.sort();
        let hit = FORMS.iter().find(|(_, _, p, q)| {
            let pv = g1.a.scale_int(p.0).add(&g1.b.scale_int(p.1));
            let qv = g1.a.scale_int(q.0).add(&g1.b.scale_int(q.1));
            let mut fl = [pv.norm_sq(), qv.norm_sq()];
            fl.sort();
            fl == lens && s.generated_by(&pv, &qv)
        });
        match hit {
            Some(&(case, form, _, _)) => out.push(QuotientRecord {
                sublattice: s,
                basis,
                case,
                form,
            }),
            None => return Err(LatticeError::Unclassified(i)),
        }
    }
    let [x, y, z]: [QuotientRecord; 3] = out.try_into().unwrap();
    Ok([x, y, z])
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuperlatticeBound<S> {
    pub superlattice: TranslationLattice<S>,
    /// Certified lower bound on `max(|a1|, |b1|)^2`.
    pub max_len_sq: S,
    /// `max(|a1|, |b1|) - 6`, approximate.
    pub margin: f64,
    /// False when the reduced basis could not be certified and the bound came
    /// from `covolume^2 / |a1|^2` instead.
    pub from_geometric_basis: bool,
}

/// Checks that every index-2 superlattice of the lattice spanned by `g2`,
/// where `|a2| = 2` and `|b2| > 16`, has a geometric basis with a vector
/// longer than 6.
pub fn check_quotient_bound<S: Scalar>(g2: &GeometricBasis<S>) -> Result<[SuperlatticeBound<S>; 3], LatticeError> {
    let four = S::from_i64(4);
    if !(g2.a.norm_sq() - four).possibly_zero() {
        return Err(LatticeError::HypothesisViolated("|a2| != 2".into()));
    }
    if !(g2.b.norm_sq() - S::from_i64(256)).certainly_positive() {
        return Err(LatticeError::HypothesisViolated("|b2| <= 16".into()));
    }
    let mut out = Vec::with_capacity(3);
    for (index, sup) in index_two_superlattices(&g2.lattice()).into_iter().enumerate() {
        let (max_len_sq, from_geometric_basis) = match reduce_basis(&sup) {
            Ok(g) => (g.b.norm_sq(), true),
            Err(LatticeError::Uncertified) => {
                // lambda1 * lambda2 >= covolume and lambda1 <= |a| for any lattice vector a.
                let (a, _) = reduce_pair(&sup)?;
                let c = sup.signed_covolume();
                (c.clone() * c / a.norm_sq(), false)
            }
            Err(e) => return Err(e),
        };
        let excess = max_len_sq.clone() - S::from_i64(36);
        if !excess.certainly_positive() {
            return Err(LatticeError::BoundViolated {
                index,
                max_len_sq: max_len_sq.approx_f64(),
            });
        }
        let margin = max_len_sq.approx_f64().sqrt() - 6.0;
        out.push(SuperlatticeBound {
            superlattice: sup,
            max_len_sq,
            margin,
            from_geometric_basis,
        });
    }
    let [x, y, z]: [SuperlatticeBound<S>; 3] = out.try_into().unwrap();
    Ok([x, y, z])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn lat(u: (i64, i64), v: (i64, i64)) -> TranslationLattice<BigRational> {
        TranslationLattice::new(rvec(u.0, u.1), rvec(v.0, v.1)).unwrap()
    }

    #[test]
    fn reduces_skewed_basis() {
        let g = reduce_basis(&lat((1, 0), (100, 1))).unwrap();
        assert_eq!(g.a, rvec(1, 0));
        assert_eq!(g.b, rvec(0, 1));
    }

    #[test]
    fn equal_norms_put_lexicographically_greater_first() {
        let g = reduce_basis(&lat((0, 1), (1, 0))).unwrap();
        assert_eq!(g.a, rvec(1, 0));
        assert_eq!(g.b, rvec(0, 1));
        let g = reduce_basis(&lat((1, 0), (0, 1))).unwrap();
        assert_eq!(g.a, rvec(1, 0));
    }

    #[test]
    fn half_integer_tie_keeps_nonnegative_inner_product() {
        let g = reduce_basis(&lat((2, 0), (1, 5))).unwrap();
        assert_eq!(g.a, rvec(2, 0));
        assert_eq!(g.b, rvec(1, 5));
        let g = reduce_basis(&lat((2, 0), (-1, 5))).unwrap();
        assert_eq!(g.b, rvec(1, 5));
    }

    #[test]
    fn dependent_generators_rejected() {
        assert_eq!(
            TranslationLattice::new(rvec(1, 2), rvec(2, 4)).unwrap_err(),
            LatticeError::DegenerateLattice
        );
    }

    #[test]
    fn geometric_basis_validation() {
        assert!(GeometricBasis::new(rvec(1, 0), rvec(3, 1)).is_err());
        assert!(GeometricBasis::new(rvec(2, 0), rvec(1, 3)).is_ok());
        assert!(GeometricBasis::new(rvec(0, 3), rvec(1, 0)).is_err());
    }

    #[test]
    fn brute_force_examples() {
        let g = brute_force_shortest(&lat((3, 0), (1, 5)), 50).unwrap();
        assert_eq!(g.a, rvec(3, 0));
        assert_eq!(g.b, rvec(1, 5));
        let g = brute_force_shortest(&lat((1, 0), (100, 1)), 1).unwrap();
        assert_eq!(g.a, rvec(1, 0));
        assert_eq!(g.b, rvec(0, 1));
    }

    #[test]
    fn brute_force_escalates_small_bound() {
        let l = lat((50, 49), (49, 48));
        let g = brute_force_shortest(&l, 1).unwrap();
        let r = reduce_basis(&l).unwrap();
        assert_eq!(g.a.norm_sq(), r.a.norm_sq());
        assert_eq!(g.b.norm_sq(), r.b.norm_sq());
    }

    #[test]
    fn sublattices_of_square_lattice() {
        let g1 = GeometricBasis::new(rvec(1, 0), rvec(0, 1)).unwrap();
        let recs = classify_quotient_basis(&g1).unwrap();
        assert_eq!(recs[0].case, QuotientCase::Two);
        assert_eq!(recs[0].form, "{b, 2a}");
        assert_eq!(recs[1].case, QuotientCase::One);
        assert_eq!(recs[1].form, "{a, 2b}");
        assert_eq!(recs[2].case, QuotientCase::Three);
        assert_eq!(recs[2].form, "{a+b, a-b}");
        for r in &recs {
            assert_eq!(r.sublattice.covolume(), rat(2, 1));
        }
    }

    #[test]
    fn quotient_bound_examples() {
        let g2 = GeometricBasis::new(rvec(2, 0), PlanarVector::new(rat(1, 1), rat(33, 2))).unwrap();
        let report = check_quotient_bound(&g2).unwrap();
        for r in &report {
            assert!(r.margin > 0.0);
        }
        let g2 = GeometricBasis::new(rvec(2, 0), rvec(0, 16)).unwrap();
        assert!(matches!(check_quotient_bound(&g2), Err(LatticeError::HypothesisViolated(_))));
        let g2 = GeometricBasis::new(rvec(3, 0), rvec(0, 17)).unwrap();
        assert!(matches!(check_quotient_bound(&g2), Err(LatticeError::HypothesisViolated(_))));
    }

    #[test]
    fn interval_reduction_matches_exact() {
        let u = PlanarVector::new(Interval::from_i64(7), Interval::from_i64(2));
        let v = PlanarVector::new(Interval::from_i64(3), Interval::from_i64(1));
        let g = reduce_basis(&TranslationLattice::new(u, v).unwrap()).unwrap();
        let e = reduce_basis(&lat((7, 2), (3, 1))).unwrap();
        assert!(g.a.norm_sq().contains(e.a.norm_sq().approx_f64()));
        assert!(g.b.norm_sq().contains(e.b.norm_sq().approx_f64()));
    }

    #[test]
    fn interval_tie_falls_back_to_covolume_bound() {
        let half_pi = Interval::parse("pi/2").unwrap();
        let l = 17.0;
        let b = PlanarVector::new(Interval::point(2.0 * 0.5) * half_pi.cos(), Interval::point(l));
        let a = PlanarVector::new(Interval::from_i64(2), Interval::zero());
        let g2 = GeometricBasis::new(a, b).unwrap();
        let report = check_quotient_bound(&g2).unwrap();
        assert!(report.iter().all(|r| r.margin > 1.0));
    }
}
