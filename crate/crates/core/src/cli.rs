//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 certified fail, 2 invalid input, 3 internal
//! invariant breach.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::certifier::{
    self, arithmetic_sufficient_condition, c_of_eps, certify_commensurability_hypotheses, certify_twisted_filling,
    fal_sufficient_condition, largest_admissible_epsilon, min_uniform_q, nonarithmetic_gate, v0, CertError, Certificate, Variant,
    Verdict,
};
use crate::cusp::{euclidean_length_sq, normalized_length_sq, normalized_length_sq_lower_bound, BoundMode, Slope};
use crate::exact::QSqrt3;
use crate::formats::{from_json, BasisDoc, FalDoc, FormatError, LatticeDoc, PatternDoc, ShapeDoc};
use crate::horoball::{classify_order4, order3_obstruction, rotation_report, HPoint, HoroballPattern};
use crate::interval::Interval;
use crate::lattice::{
    classify_quotient_basis, index_two_sublattices, index_two_superlattices, reduce_basis, LatticeError, PlanarVector, Scalar,
    TranslationLattice,
};
use crate::nerve::{
    degree_excess_sum, generalized_crossing_disk_cycles, low_degree_vertex, unique_crossing_disk_circle, NerveGraph,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "falcert",
    version,
    about = "Certified Dehn-filling bounds for fully augmented links"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Scalar type for lattice computations.
    #[arg(long, global = true, value_enum, default_value_t = Numeric::Exact)]
    pub numeric: Numeric,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Numeric {
    Exact,
    Interval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Threshold check of a filling against the FAL's volume and systole.
    Twisted,
    /// Volume-free condition from the number of crossing circles.
    Sufficient,
    /// The arithmetic specialization at epsilon = 0.86168.
    Arithmetic,
    /// Volume gate for non-arithmeticity.
    Gate,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Geometric basis of a lattice {"u": [x, y], "v": [x, y]}.
    ReduceBasis {
        #[arg(long)]
        input: String,
    },
    /// Index-2 sub- and superlattices with their geometric bases.
    Sublattices {
        #[arg(long)]
        input: String,
    },
    /// Euclidean and normalized length of a slope on a cusp shape.
    SlopeLength {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Certify a filling of a fully augmented link.
    Certify {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Check::Twisted)]
        check: Check,
        #[arg(long, default_value = "purcell")]
        mode: String,
        /// Comma-separated q_i for the slopes 1/q_i.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long)]
        epsilon: Option<String>,
        #[arg(long, default_value = "corrected")]
        variant: String,
    },
    /// Smallest q such that the uniform filling (1/q, ..., 1/q) certifies.
    MinQ {
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "purcell")]
        mode: String,
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Hypotheses for uniqueness in the commensurability class.
    Commensurability {
        #[arg(long)]
        twist_regions: u64,
        #[arg(long)]
        min_crossings: u64,
        /// Planar cusp basis {"a": meridian, "b": longitude}.
        #[arg(long)]
        input: Option<String>,
    },
    /// Validate a nerve and find a uniquely disked crossing circle.
    Nervecheck {
        #[arg(long)]
        input: String,
    },
    /// Classify a horoball pattern, or test one rotation.
    Horoball {
        #[arg(long)]
        input: String,
        #[arg(long)]
        order: Option<u32>,
        /// Rotation center as X,Y.
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
    },
    /// Certified constants.
    Constants,
}

/// Result of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub text: String,
}

enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<CertError> for Failure {
    fn from(e: CertError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::BoundViolated { .. } | LatticeError::Unclassified(_) => Failure::Internal(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Report = (i32, Value, String);

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS };
            return Output {
                code,
                text: e.to_string(),
            };
        }
    };
    let format = cli.format;
    match dispatch(&cli) {
        Ok((code, json, text)) => Output {
            code,
            text: match format {
                Format::Json => serde_json::to_string_pretty(&json).expect("serializable") + "\n",
                Format::Text => text,
            },
        },
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Invalid(m) => (EXIT_INVALID, "invalid-input", m),
                Failure::Internal(m) => (EXIT_INTERNAL, "internal-error", m),
            };
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&json!({ "error": kind, "message": msg })).unwrap() + "\n",
                Format::Text => format!("error ({kind}): {msg}\n"),
            };
            Output { code, text }
        }
    }
}

fn read_input(s: &str) -> Result<String, Failure> {
    if s.trim_start().starts_with('{') {
        return Ok(s.to_string());
    }
    std::fs::read_to_string(s).map_err(|e| Failure::Invalid(format!("cannot read {s}: {e}")))
}

fn doc<T: for<'de> serde::Deserialize<'de>>(input: &str) -> Result<T, Failure> {
    Ok(from_json(&read_input(input)?)?)
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::ReduceBasis { input } => reduce_cmd(&doc(input)?, cli.numeric),
        Command::Sublattices { input } => sublattice_cmd(&doc(input)?, cli.numeric),
        Command::SlopeLength { input, p, q } => slope_cmd(&doc(input)?, *p, *q),
        Command::Certify {
            input,
            check,
            mode,
            q,
            epsilon,
            variant,
        } => {
            let fal: FalDoc = doc(input)?;
            certify_cmd(&fal, *check, mode, q.as_deref(), epsilon.as_deref(), variant)
        }
        Command::MinQ { input, mode, epsilon } => {
            let fal: FalDoc = doc(input)?;
            min_q_cmd(&fal, mode, epsilon.as_deref())
        }
        Command::Commensurability {
            twist_regions,
            min_crossings,
            input,
        } => {
            let basis = match input {
                Some(i) => Some(doc::<BasisDoc>(i)?.exact()?),
                None => None,
            };
            Ok(cert_report(&certify_commensurability_hypotheses(
                *twist_regions,
                *min_crossings,
                basis.as_ref(),
            )?))
        }
        Command::Nervecheck { input } => nerve_cmd(&doc(input)?),
        Command::Horoball { input, order, center } => horoball_cmd(&doc(input)?, *order, center.as_deref()),
        Command::Constants => constants_cmd(),
    }
}

pub fn iv(i: &Interval) -> Value {
    let (l, h) = i.to_decimal_strings();
    json!([l, h])
}

fn ivs(i: &Interval) -> String {
    let (l, h) = i.to_decimal_strings();
    format!("[{l}, {h}]")
}

trait Show {
    fn json(&self) -> Value;
    fn text(&self) -> String;
}

impl Show for BigRational {
    fn json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn text(&self) -> String {
        self.to_string()
    }
}

impl Show for Interval {
    fn json(&self) -> Value {
        iv(self)
    }
    fn text(&self) -> String {
        ivs(self)
    }
}

fn vec_json<S: Show>(v: &PlanarVector<S>) -> Value {
    json!([v.x.json(), v.y.json()])
}

fn vec_text<S: Show>(v: &PlanarVector<S>) -> String {
    format!("({}, {})", v.x.text(), v.y.text())
}

fn reduce_cmd(d: &LatticeDoc, numeric: Numeric) -> Result<Report, Failure> {
    fn go<S: Scalar + Show>(lat: &TranslationLattice<S>) -> Result<Report, Failure> {
        let g = match reduce_basis(lat) {
            Ok(g) => g,
            Err(LatticeError::Uncertified) => {
                let msg = "the reduction could not be certified at this precision";
                return Ok((EXIT_FAIL, json!({ "certified": false, "message": msg }), format!("{msg}\n")));
            }
            Err(e) => return Err(e.into()),
        };
        let (na, nb, cov) = (g.a.norm_sq(), g.b.norm_sq(), lat.covolume());
        let json = json!({
            "certified": true,
            "a": vec_json(&g.a), "b": vec_json(&g.b),
            "a_len_sq": na.json(), "b_len_sq": nb.json(), "covolume": cov.json(),
        });
        let text = format!(
            "a = {}  |a|^2 = {}\nb = {}  |b|^2 = {}\ncovolume = {}\n",
            vec_text(&g.a),
            na.text(),
            vec_text(&g.b),
            nb.text(),
            cov.text()
        );
        Ok((EXIT_PASS, json, text))
    }
    match numeric {
        Numeric::Exact => go(&d.exact()?),
        Numeric::Interval => go(&d.interval()?),
    }
}

fn lattice_json<S: Show>(l: &TranslationLattice<S>) -> Value {
    json!({ "u": vec_json(&l.u), "v": vec_json(&l.v) })
}

fn sublattice_cmd(d: &LatticeDoc, numeric: Numeric) -> Result<Report, Failure> {
    fn go<S: Scalar + Show>(lat: &TranslationLattice<S>) -> Result<(Vec<Value>, Vec<Value>, String), Failure> {
        let mut text = String::new();
        let mut subs = Vec::new();
        let mut sups = Vec::new();
        for (kind, list, out) in [
            ("sublattice", index_two_sublattices(lat), &mut subs),
            ("superlattice", index_two_superlattices(lat), &mut sups),
        ] {
            for (i, s) in list.iter().enumerate() {
                let g = reduce_basis(s)?;
                writeln!(
                    text,
                    "{kind} {i}: <{}, {}>  covolume {}  basis {} {}",
                    vec_text(&s.u),
                    vec_text(&s.v),
                    s.covolume().text(),
                    vec_text(&g.a),
                    vec_text(&g.b)
                )
                .unwrap();
                out.push(json!({ "generators": lattice_json(s), "covolume": s.covolume().json(), "basis": [vec_json(&g.a), vec_json(&g.b)] }));
            }
        }
        Ok((subs, sups, text))
    }
    let (subs, sups, mut text, forms) = match numeric {
        Numeric::Exact => {
            let lat = d.exact()?;
            let (a, b, t) = go(&lat)?;
            let g = reduce_basis(&lat)?;
            let recs = classify_quotient_basis(&g)?;
            let forms: Vec<Value> = recs
                .iter()
                .map(|r| json!({ "case": r.case.label(), "form": r.form }))
                .collect();
            let mut t = t;
            for (i, r) in recs.iter().enumerate() {
                writeln!(
                    t,
                    "sublattice {i} of the geometric basis: case {} form {}",
                    r.case.label(),
                    r.form
                )
                .unwrap();
            }
            (a, b, t, Some(forms))
        }
        Numeric::Interval => {
            let (a, b, t) = go(&d.interval()?)?;
            (a, b, t, None)
        }
    };
    if forms.is_none() {
        text.push_str("case forms are only classified in exact mode\n");
    }
    Ok((
        EXIT_PASS,
        json!({ "sublattices": subs, "superlattices": sups, "forms": forms }),
        text,
    ))
}

fn slope_cmd(d: &ShapeDoc, p: i64, q: i64) -> Result<Report, Failure> {
    let c = d.shape()?;
    let s = Slope::new(p, q).map_err(|e| Failure::Invalid(e.to_string()))?;
    let (e, n, lb) = (
        euclidean_length_sq(&c, &s),
        normalized_length_sq(&c, &s),
        normalized_length_sq_lower_bound(&c, &s),
    );
    let json = json!({
        "slope": [p, q],
        "euclidean_length_sq": iv(&e),
        "normalized_length_sq": iv(&n),
        "lower_bound": iv(&lb.value),
        "lower_bound_applies": lb.sign_condition,
    });
    let mut text = format!(
        "slope {s}\neuclidean length^2  {}\nnormalized length^2 {}\nprinted lower bound {}\n",
        ivs(&e),
        ivs(&n),
        ivs(&lb.value)
    );
    if !lb.sign_condition {
        text.push_str("warning: p*q*cos(theta) >= 0 is not certified, so the lower bound may exceed the exact value\n");
    }
    Ok((EXIT_PASS, json, text))
}

fn parse_q_list(q: Option<&str>) -> Result<Vec<i64>, Failure> {
    let q = q.ok_or_else(|| Failure::Invalid("--q is required".into()))?;
    q.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Invalid(format!("--q: `{s}` is not an integer")))
        })
        .collect()
}

fn parse_mode(m: &str) -> Result<BoundMode, Failure> {
    m.parse().map_err(|e: crate::cusp::CuspError| Failure::Invalid(e.to_string()))
}

fn parse_eps(e: Option<&str>) -> Result<Option<Interval>, Failure> {
    e.map(|s| Interval::parse(s).map_err(|e| Failure::Invalid(format!("--epsilon: {e}"))))
        .transpose()
}

fn certify_cmd(
    d: &FalDoc,
    check: Check,
    mode: &str,
    q: Option<&str>,
    eps: Option<&str>,
    variant: &str,
) -> Result<Report, Failure> {
    let fal = d.geometry()?;
    let eps = parse_eps(eps)?;
    let default_eps = || -> Result<Interval, Failure> {
        match eps {
            Some(e) => Ok(e),
            None => Ok(largest_admissible_epsilon(fal.systole.ok_or(CertError::MissingSystole)?)?),
        }
    };
    let cert = match check {
        Check::Twisted => certify_twisted_filling(&fal, &parse_q_list(q)?, eps, parse_mode(mode)?)?,
        Check::Sufficient => {
            let v: Variant = variant.parse()?;
            fal_sufficient_condition(fal.n, default_eps()?, &parse_q_list(q)?, v)?
        }
        Check::Arithmetic => arithmetic_sufficient_condition(fal.n, &parse_q_list(q)?, fal.arithmetic)?,
        Check::Gate => nonarithmetic_gate(default_eps()?, fal.volume)?,
    };
    Ok(cert_report(&cert))
}

pub fn cert_report(cert: &Certificate) -> Report {
    let code = match cert.verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail | Verdict::NotApplicable => EXIT_FAIL,
    };
    let json = serde_json::to_value(cert.to_document()).expect("serializable");
    (code, json, certificate_text(cert))
}

pub fn certificate_text(cert: &Certificate) -> String {
    let verdict = match cert.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::NotApplicable => "not-applicable",
    };
    let mut t = format!("{}: {verdict}", cert.kind);
    if let Some(m) = cert.mode {
        write!(t, " (mode {m})").unwrap();
    }
    if let Some(v) = cert.variant {
        write!(t, " (variant {})", v.name()).unwrap();
    }
    t.push('\n');
    for c in &cert.conditions {
        let rhs = c.rhs.as_ref().map(ivs).unwrap_or_else(|| "unavailable".into());
        let margin = c.margin().map(|m| m.to_decimal_strings().0).unwrap_or_else(|| "-".into());
        writeln!(
            t,
            "  [{}] {}: {} {} {}  margin {}",
            if c.satisfied { "ok" } else { "FAIL" },
            c.name,
            ivs(&c.lhs),
            c.relation.symbol(),
            rhs,
            margin
        )
        .unwrap();
    }
    if let Some(c) = cert.first_violation() {
        writeln!(t, "first violated condition: {}", c.name).unwrap();
    }
    if cert.verdict == Verdict::NotApplicable {
        t.push_str("volume is not certified above 2*v0, so the verdict does not apply\n");
    }
    for (n, v) in &cert.trace {
        writeln!(t, "  {n} = {}", ivs(v)).unwrap();
    }
    t
}

fn min_q_cmd(d: &FalDoc, mode: &str, eps: Option<&str>) -> Result<Report, Failure> {
    let fal = d.geometry()?;
    let mode = parse_mode(mode)?;
    let eps = parse_eps(eps)?;
    match min_uniform_q(&fal, eps, mode) {
        Ok(q) => Ok((EXIT_PASS, json!({ "min_q": q, "mode": mode.name() }), format!("{q}\n"))),
        Err(CertError::NoPassingQ(m)) => {
            let msg = format!("no q up to {m} passes");
            Ok((
                EXIT_FAIL,
                json!({ "min_q": null, "mode": mode.name(), "message": msg }),
                msg + "\n",
            ))
        }
        Err(e) => Err(e.into()),
    }
}

fn nerve_cmd(g: &NerveGraph) -> Result<Report, Failure> {
    let report = g.validate();
    let mut text = format!("V = {}, E = {}, F = {}\n", report.vertices, report.edges, report.faces);
    for c in &report.checks {
        match &c.witness {
            None => writeln!(text, "  [ok] {}", c.name).unwrap(),
            Some(w) => writeln!(text, "  [FAIL] {}: {w}", c.name).unwrap(),
        }
    }
    let mut json = json!({ "report": report });
    if !report.is_valid() {
        text.push_str("not a valid nerve\n");
        return Ok((EXIT_FAIL, json, text));
    }
    let mut cycles = Vec::new();
    for e in g.red_set() {
        let cs = generalized_crossing_disk_cycles(g, e).map_err(|e| Failure::Internal(e.to_string()))?;
        writeln!(
            text,
            "red edge ({}, {}): {} extra crossing disk(s) {:?}",
            e.0,
            e.1,
            cs.len(),
            cs
        )
        .unwrap();
        cycles.push(json!({ "edge": [e.0, e.1], "cycles": cs }));
    }
    let unique = unique_crossing_disk_circle(g).map_err(|e| Failure::Internal(e.to_string()))?;
    let low = low_degree_vertex(g).map_err(|e| Failure::Internal(e.to_string()))?;
    let excess = degree_excess_sum(g);
    if excess != 12 {
        return Err(Failure::Internal(format!("sum of 6 - deg is {excess} on a valid nerve")));
    }
    writeln!(text, "uniquely disked red edge: ({}, {})", unique.0, unique.1).unwrap();
    writeln!(text, "vertex of degree at most 5: {low}; sum of (6 - deg) = {excess}").unwrap();
    json["red_edges"] = json!(cycles);
    json["unique_crossing_disk_circle"] = json!([unique.0, unique.1]);
    json["low_degree_vertex"] = json!(low);
    json["degree_excess_sum"] = json!(excess);
    Ok((EXIT_PASS, json, text))
}

fn point_json(p: &HPoint) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn parse_center(s: Option<&str>) -> Result<HPoint, Failure> {
    let s = s.ok_or_else(|| Failure::Invalid("--center is required with --order".into()))?;
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::Invalid(format!("--center: expected X,Y, got `{s}`")));
    }
    let q = |t: &str| QSqrt3::parse(t.trim()).map_err(|e| Failure::Invalid(format!("--center: {e}")));
    Ok(HPoint::new(q(parts[0])?, q(parts[1])?))
}

fn horoball_cmd(d: &PatternDoc, order: Option<u32>, center: Option<&str>) -> Result<Report, Failure> {
    let p: HoroballPattern = d.pattern()?;
    if let Some(order) = order {
        let c = parse_center(center)?;
        let r = rotation_report(&p, order, &c).map_err(|e| Failure::Invalid(e.to_string()))?;
        let json = json!({
            "order": order,
            "center": point_json(&c),
            "maps_pattern": r.maps_pattern,
            "fixes_red_center": r.fixes_red_center.as_ref().map(point_json),
            "admissible": r.admissible(),
        });
        let mut text = format!(
            "order {order} rotation about {c}: {}\n",
            if r.maps_pattern {
                "maps the pattern to itself"
            } else {
                "is not a symmetry"
            }
        );
        if let Some(z) = &r.fixes_red_center {
            writeln!(
                text,
                "composed with a translation it fixes the red center {z}, so it is excluded"
            )
            .unwrap();
        }
        let code = if r.admissible() { EXIT_PASS } else { EXIT_FAIL };
        return Ok((code, json, text));
    }
    let c4 = classify_order4(&p);
    let o3 = order3_obstruction(&p);
    let kind = serde_json::to_value(c4.kind).unwrap();
    let json = json!({
        "order4": {
            "kind": kind,
            "complete": c4.complete,
            "colors_swapped": c4.colors_swapped,
            "blue_fixed_points": c4.blue_fixed_points.iter().map(point_json).collect::<Vec<_>>(),
        },
        "order3": {
            "lines_in_sqrt3_z": o3.lines_condition(),
            "lines_off_lattice": o3.lines_off_sqrt3_lattice.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "x": o3.x.to_string(),
            "r": o3.r.to_string(),
            "r_residual": o3.r_residual.to_string(),
            "gap": o3.gap.to_string(),
            "gap_enclosure": iv(&o3.gap_enclosure),
            "face_vertices_at_least": o3.face_vertices_at_least,
            "order3_possible": o3.order3_possible(),
        },
    });
    let mut text = format!("order-4 pattern: {}", kind.as_str().unwrap());
    if c4.kind == crate::horoball::Order4Kind::Even {
        write!(text, " ({})", if c4.complete { "complete" } else { "partial" }).unwrap();
    }
    if c4.colors_swapped {
        text.push_str(" with colors swapped");
    }
    text.push('\n');
    for z in &c4.blue_fixed_points {
        writeln!(text, "  order-4 center at blue {z}").unwrap();
    }
    writeln!(
        text,
        "order 3: lines in sqrt3*Z: {}; r = {} (residual {}); gap sqrt3 - 2(r + x) = {} = {}",
        o3.lines_condition(),
        o3.r,
        o3.r_residual,
        o3.gap,
        ivs(&o3.gap_enclosure)
    )
    .unwrap();
    Ok((EXIT_PASS, json, text))
}

fn constants_cmd() -> Result<Report, Failure> {
    let lit = |s: &str| Interval::parse(s).expect("literal");
    let v = v0();
    let ln3 = certifier::log3();
    let c_ln3 = c_of_eps(ln3)?;
    let two_pi = Interval::from_i64(2) * Interval::pi();
    let guard = Interval::one() / (two_pi / c_ln3 + lit("28.78"));
    let gate = lit("3.45") / Interval::from_i64(8);
    let e9 = lit(certifier::ARITHMETIC_EPSILON);
    let arith = Interval::from_i64(2) / (two_pi / c_of_eps(e9)? + lit("28.78"));
    let checks = [
        ("guard_term_below_0.0000086", guard.certainly_le(&lit("0.0000086"))),
        ("gate_below_0.43137", gate.certainly_lt(&lit("0.43137"))),
    ];
    let json = json!({
        "v0": iv(&v),
        "v0_over_4": iv(&(v / Interval::from_i64(4))),
        "two_v0": iv(&(Interval::from_i64(2) * v)),
        "pi": iv(&Interval::pi()),
        "log3": iv(&ln3),
        "C_log3": iv(&c_ln3),
        "guard_term": iv(&guard),
        "gate_ratio": iv(&gate),
        "arithmetic_fps_term": iv(&arith),
        "checks": checks.iter().map(|(n, ok)| json!({ "name": n, "satisfied": ok })).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for (n, val) in [
        ("v0", v),
        ("v0/4", v / Interval::from_i64(4)),
        ("2*v0", Interval::from_i64(2) * v),
        ("pi", Interval::pi()),
        ("log 3", ln3),
        ("C(log 3)", c_ln3),
        ("1/(2pi/C(log 3) + 28.78)", guard),
        ("3.45/8", gate),
        ("2/(2pi/C(0.86168) + 28.78)", arith),
    ] {
        writeln!(text, "{n:<28} {}", ivs(&val)).unwrap();
    }
    for (n, ok) in checks {
        writeln!(text, "[{}] {n}", if ok { "ok" } else { "FAIL" }).unwrap();
    }
    let code = if checks.iter().all(|c| c.1) {
        EXIT_PASS
    } else {
        EXIT_INTERNAL
    };
    Ok((code, json, text))
}
