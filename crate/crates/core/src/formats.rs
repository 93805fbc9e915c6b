//! JSON input documents. Numbers may be JSON numbers or strings; strings
//! accept integers, decimals, rationals `p/q` and, for angles, multiples of
//! `pi`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certifier::{CertError, FalGeometry};
use crate::cusp::{CuspConstraints, CuspData, CuspError, CuspShape, MultiSlope, Slope};
use crate::exact::{parse_rational, QSqrt3};
use crate::horoball::{generate_pattern, Color, HPoint, HoroballError, HoroballPattern};
use crate::interval::Interval;
use crate::lattice::{GeometricBasis, LatticeError, PlanarVector, TranslationLattice};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("field `{field}`: {why}")]
    Field { field: String, why: String },
}

fn field_err(field: &str, why: impl ToString) -> FormatError {
    FormatError::Field {
        field: field.to_string(),
        why: why.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Text(String),
    Number(serde_json::Number),
}

impl Num {
    fn text(&self) -> String {
        match self {
            Num::Text(s) => s.trim().to_string(),
            Num::Number(n) => n.to_string(),
        }
    }

    pub fn rational(&self, field: &str) -> Result<BigRational, FormatError> {
        parse_rational(&self.text()).map_err(|e| field_err(field, e))
    }

    pub fn interval(&self, field: &str) -> Result<Interval, FormatError> {
        Interval::parse(&self.text()).map_err(|e| field_err(field, e))
    }

    pub fn qsqrt3(&self, field: &str) -> Result<QSqrt3, FormatError> {
        QSqrt3::parse(&self.text()).map_err(|e| field_err(field, e))
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T, FormatError> {
    serde_json::from_str(s).map_err(|e| FormatError::Json(e.to_string()))
}

/// `{"u": [x, y], "v": [x, y]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub u: [Num; 2],
    pub v: [Num; 2],
}

impl LatticeDoc {
    pub fn exact(&self) -> Result<TranslationLattice<BigRational>, FormatError> {
        let vec = |p: &[Num; 2], f: &str| -> Result<_, FormatError> {
            Ok(PlanarVector::new(
                p[0].rational(&format!("{f}[0]"))?,
                p[1].rational(&format!("{f}[1]"))?,
            ))
        };
        TranslationLattice::new(vec(&self.u, "u")?, vec(&self.v, "v")?).map_err(|e| field_err("v", e))
    }

    pub fn interval(&self) -> Result<TranslationLattice<Interval>, FormatError> {
        let vec = |p: &[Num; 2], f: &str| -> Result<_, FormatError> {
            Ok(PlanarVector::new(
                p[0].interval(&format!("{f}[0]"))?,
                p[1].interval(&format!("{f}[1]"))?,
            ))
        };
        TranslationLattice::new(vec(&self.u, "u")?, vec(&self.v, "v")?).map_err(|e| field_err("v", e))
    }
}

/// `{"a": [x, y], "b": [x, y]}`: an exact geometric basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDoc {
    pub a: [Num; 2],
    pub b: [Num; 2],
}

impl BasisDoc {
    pub fn exact(&self) -> Result<GeometricBasis<BigRational>, FormatError> {
        let vec = |p: &[Num; 2], f: &str| -> Result<_, FormatError> {
            Ok(PlanarVector::new(
                p[0].rational(&format!("{f}[0]"))?,
                p[1].rational(&format!("{f}[1]"))?,
            ))
        };
        GeometricBasis::new(vec(&self.a, "a")?, vec(&self.b, "b")?).map_err(|e: LatticeError| field_err("b", e))
    }
}

/// `{"r": .., "theta": .., "lambda": ..}` with `theta` in radians.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeDoc {
    pub r: Num,
    pub theta: Num,
    pub lambda: Num,
}

impl ShapeDoc {
    pub fn shape(&self) -> Result<CuspShape, FormatError> {
        CuspShape::new(
            self.r.interval("r")?,
            self.theta.interval("theta")?,
            self.lambda.interval("lambda")?,
        )
        .map_err(|e: CuspError| field_err("theta", e))
    }
}

/// `{"r_min": .., "cot_theta_max": .., "area_max": .., "lambda": ..}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintsDoc {
    pub r_min: Num,
    pub cot_theta_max: Num,
    pub area_max: Num,
    pub lambda: Num,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CuspDoc {
    Shape(ShapeDoc),
    Constraints(ConstraintsDoc),
}

impl CuspDoc {
    pub fn data(&self, i: usize) -> Result<CuspData, FormatError> {
        match self {
            CuspDoc::Shape(s) => s.shape().map(CuspData::Shape).map_err(|e| prefix(&format!("cusps[{i}]"), e)),
            CuspDoc::Constraints(c) => {
                let f = |n: &Num, name: &str| n.interval(&format!("cusps[{i}].{name}"));
                CuspConstraints::new(
                    f(&c.r_min, "r_min")?,
                    f(&c.cot_theta_max, "cot_theta_max")?,
                    f(&c.area_max, "area_max")?,
                    f(&c.lambda, "lambda")?,
                )
                .map(CuspData::Constraints)
                .map_err(|e| field_err(&format!("cusps[{i}]"), e))
            }
        }
    }
}

fn prefix(p: &str, e: FormatError) -> FormatError {
    match e {
        FormatError::Field { field, why } => FormatError::Field {
            field: format!("{p}.{field}"),
            why,
        },
        other => other,
    }
}

/// `{"volume": .., "systole": .., "n": .., "arithmetic": bool, "cusps": [..]}`;
/// `cusps` lists the crossing-circle cusps `1..=n`, `null` where unknown.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FalDoc {
    pub volume: Num,
    #[serde(default)]
    pub systole: Option<Num>,
    pub n: usize,
    #[serde(default)]
    pub arithmetic: bool,
    #[serde(default)]
    pub cusps: Vec<Option<CuspDoc>>,
}

impl FalDoc {
    pub fn geometry(&self) -> Result<FalGeometry, FormatError> {
        let volume = self.volume.interval("volume")?;
        let systole = self.systole.as_ref().map(|s| s.interval("systole")).transpose()?;
        let cusps = self
            .cusps
            .iter()
            .enumerate()
            .map(|(i, c)| c.as_ref().map(|c| c.data(i)).transpose())
            .collect::<Result<Vec<_>, _>>()?;
        FalGeometry::new(volume, systole, self.n, self.arithmetic, cusps).map_err(|e: CertError| match e {
            CertError::InvalidInput(s) => field_err("cusps", s),
            other => field_err("volume", other),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FillingDoc {
    pub cusp: usize,
    #[serde(default = "one")]
    pub p: i64,
    pub q: i64,
}

fn one() -> i64 {
    1
}

/// `{"unfilled": i, "fillings": [{"cusp": j, "p": 1, "q": ..}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiSlopeDoc {
    pub unfilled: usize,
    pub fillings: Vec<FillingDoc>,
}

impl MultiSlopeDoc {
    pub fn multislope(&self) -> Result<MultiSlope, FormatError> {
        let fillings = self
            .fillings
            .iter()
            .enumerate()
            .map(|(i, f)| {
                Ok((
                    f.cusp,
                    Slope::new(f.p, f.q).map_err(|e| field_err(&format!("fillings[{i}]"), e))?,
                ))
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        MultiSlope::new(self.unfilled, fillings).map_err(|e| field_err("fillings", e))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CenterDoc {
    pub x: Num,
    pub y: Num,
    pub color: Color,
}

/// Either `{"lines": [..], "parity": [..], "longitude": [x, y]}` or
/// `{"centers": [{"x", "y", "color"}], "longitude": [x, y]}`; coordinates are
/// elements of Q(sqrt 3) such as `"2*sqrt3"` or `"1/2+sqrt3/2"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternDoc {
    #[serde(default)]
    pub lines: Option<Vec<Num>>,
    #[serde(default)]
    pub parity: Option<Vec<u8>>,
    #[serde(default)]
    pub centers: Option<Vec<CenterDoc>>,
    pub longitude: [Num; 2],
}

impl PatternDoc {
    pub fn pattern(&self) -> Result<HoroballPattern, FormatError> {
        let lon = HPoint::new(
            self.longitude[0].qsqrt3("longitude[0]")?,
            self.longitude[1].qsqrt3("longitude[1]")?,
        );
        match (&self.lines, &self.centers) {
            (Some(lines), None) => {
                let ls = lines
                    .iter()
                    .enumerate()
                    .map(|(i, l)| l.qsqrt3(&format!("lines[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                let parity = match &self.parity {
                    Some(p) => p.clone(),
                    None => (0..ls.len()).map(|i| (i % 2) as u8).collect(),
                };
                generate_pattern(&ls, &parity, lon).map_err(|e: HoroballError| field_err("lines", e))
            }
            (None, Some(cs)) => {
                let centers = cs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        Ok((
                            HPoint::new(
                                c.x.qsqrt3(&format!("centers[{i}].x"))?,
                                c.y.qsqrt3(&format!("centers[{i}].y"))?,
                            ),
                            c.color,
                        ))
                    })
                    .collect::<Result<Vec<_>, FormatError>>()?;
                HoroballPattern::from_centers(centers, lon).map_err(|e: HoroballError| field_err("centers", e))
            }
            _ => Err(field_err("lines", "give exactly one of `lines` and `centers`")),
        }
    }
}
