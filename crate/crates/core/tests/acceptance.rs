//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails.

use std::time::{Duration, Instant};

use falcert::certifier::{
    arithmetic_sufficient_condition, c_of_eps, certify_commensurability_hypotheses, certify_twisted_filling,
    largest_admissible_epsilon, log3, min_uniform_q, quantify_threshold, FalGeometry,
};
use falcert::cusp::BoundMode;
use falcert::exact::{rat, QSqrt3};
use falcert::horoball::{
    checkerboard, classify_order4, full_sized_iff_gaussian, generate_pattern, order3_obstruction, rotation_report, sqrt3_lines,
    Color, HPoint, Order4Kind,
};
use falcert::interval::Interval;
use falcert::lattice::{
    brute_force_shortest, check_quotient_bound, classify_quotient_basis, reduce_basis, rvec, GeometricBasis, PlanarVector,
    TranslationLattice,
};
use falcert::nerve::{
    bipyramid_with_extra_disk, borromean, degree_excess_sum, generalized_crossing_disk_cycles, low_degree_vertex,
    random_red_matching, random_triangulation, unique_crossing_disk_circle, NerveGraph,
};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn lit(s: &str) -> Interval {
    Interval::parse(s).unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(x: Interval, target: f64, rel: f64) -> bool {
    let t = Interval::point(target);
    let tol = Interval::point(target.abs() * rel);
    x.certainly_ge(&(t - tol)) && x.certainly_le(&(t + tol))
}

fn l4() -> FalGeometry {
    FalGeometry::new(lit("21.9831742603"), Some(lit("0.962424")), 4, true, vec![]).unwrap()
}

fn criterion_1() -> Outcome {
    let fal = l4();
    let eps = largest_admissible_epsilon(fal.systole.unwrap()).map_err(|e| e.to_string())?;
    let thr = quantify_threshold(eps, fal.volume).map_err(|e| e.to_string())?;
    ensure(
        thr.certainly_ge(&lit("5.695e-6")) && thr.certainly_le(&lit("5.810e-6")),
        format!("threshold {thr}"),
    )?;
    let q = min_uniform_q(&fal, None, BoundMode::L4).map_err(|e| e.to_string())?;
    ensure(q == 1023, format!("min q {q}"))?;
    let pass = certify_twisted_filling(&fal, &[1023; 4], None, BoundMode::L4).map_err(|e| e.to_string())?;
    let fail = certify_twisted_filling(&fal, &[1022; 4], None, BoundMode::L4).map_err(|e| e.to_string())?;
    ensure(pass.passed() && !fail.passed(), "1023 must pass and 1022 fail")?;
    Ok(format!("threshold {:.6e}, min q {q}", thr.mid()))
}

fn criterion_2() -> Outcome {
    let c = arithmetic_sufficient_condition(4, &[1_000_000; 4], true).map_err(|e| e.to_string())?;
    let fps = c.trace_value("recomputed_fps_term").ok_or("missing recomputed term")?;
    let two = c.trace_value("two_epsilon").ok_or("missing 2 epsilon")?;
    let big = c.trace_value("28.78_epsilon").ok_or("missing 28.78 epsilon")?;
    ensure(within(fps, 7.963e-6, 1e-3), format!("fps term {fps}"))?;
    ensure(within(two, 1.72336, 5e-4), format!("2 eps {two}"))?;
    ensure(within(big, 24.80, 5e-4), format!("28.78 eps {big}"))?;
    ensure(c.passed(), "q = 10^6 should pass")?;
    Ok(format!("{:.6e}, {:.5}, {:.4}", fps.mid(), two.mid(), big.mid()))
}

fn criterion_3() -> Outcome {
    let c = c_of_eps(log3()).map_err(|e| e.to_string())?;
    let term = Interval::one() / (Interval::from_i64(2) * Interval::pi() / c + lit("28.78"));
    ensure(term.certainly_le(&lit("0.0000086")), format!("term {term}"))?;
    Ok(format!("{:.7e} <= 8.6e-6", term.hi()))
}

fn random_lattice(rng: &mut ChaCha8Rng, range: i64) -> TranslationLattice<BigRational> {
    loop {
        let mut e = || rng.gen_range(-range..=range);
        let (u, v) = (rvec(e(), e()), rvec(e(), e()));
        if let Ok(l) = TranslationLattice::new(u, v) {
            return l;
        }
    }
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..1000 {
        let lat = random_lattice(&mut rng, 50);
        let g = reduce_basis(&lat).map_err(|e| e.to_string())?;
        let b = brute_force_shortest(&lat, 8).map_err(|e| e.to_string())?;
        ensure(
            g.a.norm_sq() == b.a.norm_sq() && g.b.norm_sq() == b.b.norm_sq(),
            format!("lattice {i}: {lat:?} reduced to {:?}, brute force {:?}", g, b),
        )?;
    }
    Ok("1000/1000 lattices agree".into())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..1000 {
        let g = reduce_basis(&random_lattice(&mut rng, 50)).map_err(|e| e.to_string())?;
        classify_quotient_basis(&g).map_err(|e| format!("basis {i} {g:?}: {e}"))?;
    }
    Ok("3000/3000 sublattices matched a listed form".into())
}

fn criterion_6() -> Outcome {
    let mut lengths = vec![lit("16.01")];
    lengths.extend((33..=80).map(|k| Interval::ratio(k, 2)));
    let a = PlanarVector::new(Interval::from_i64(2), Interval::zero());
    let deg = Interval::pi() / Interval::from_i64(180);
    let mut cells = 0;
    let mut worst = f64::INFINITY;
    for l in &lengths {
        for k in 1..=90 {
            let c = (Interval::from_i64(k) * deg).cos();
            for s in [1, -1] {
                let b = PlanarVector::new(Interval::from_i64(s) * c, (l.square() - c.square()).sqrt());
                let g = GeometricBasis::new(a.clone(), b).map_err(|e| format!("|b2| = {l}, {k} deg: {e}"))?;
                let bounds = check_quotient_bound(&g).map_err(|e| format!("|b2| = {l}, {k} deg: {e}"))?;
                worst = bounds.iter().map(|b| b.margin).fold(worst, f64::min);
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells, smallest max(|a1|,|b1|) - 6 = {worst:.4}"))
}

fn criterion_7() -> Outcome {
    let p = generate_pattern(
        &sqrt3_lines(&[0, 1]),
        &[0, 1],
        HPoint::new(QSqrt3::new(rat(0, 1), rat(2, 1)), QSqrt3::zero()),
    )
    .map_err(|e| e.to_string())?;
    let o = order3_obstruction(&p);
    ensure(o.lines_condition(), "lines should lie in sqrt3 Z")?;
    ensure(o.r == QSqrt3::rational(rat(1, 6)), format!("r = {}", o.r))?;
    ensure(o.r_residual.is_zero() && o.x_residual.is_zero(), "non-zero residual")?;
    ensure(o.gap == QSqrt3::new(rat(-1, 3), rat(1, 3)), format!("gap = {}", o.gap))?;
    ensure(o.gap_enclosure.certainly_ge(&lit("0.24")), format!("gap {}", o.gap_enclosure))?;
    ensure(!o.order3_possible(), "order 3 reported possible")?;
    Ok(format!("r = {}, gap = {} >= {:.6}", o.r, o.gap, o.gap_enclosure.lo()))
}

fn criterion_8() -> Outcome {
    let p = generate_pattern(&[QSqrt3::zero(), QSqrt3::from_i64(1)], &[0, 1], HPoint::int(2, 0)).map_err(|e| e.to_string())?;
    ensure(
        p.centers == checkerboard(true).centers,
        "generated pattern differs from the Z[i] checkerboard",
    )?;
    let c = classify_order4(&p);
    ensure(
        c.kind == Order4Kind::Even && c.complete && !c.colors_swapped,
        format!("classified {:?}", c.kind),
    )?;
    ensure(full_sized_iff_gaussian(&p), "full-sized centers differ from Z[i]")?;
    let blue: Vec<HPoint> = c
        .square_centers
        .iter()
        .filter(|(_, k)| *k == Color::Blue)
        .map(|(z, _)| z.clone())
        .collect();
    ensure(
        !blue.is_empty() && c.blue_fixed_points == blue,
        format!("fixed points {:?}", c.blue_fixed_points),
    )?;
    for (z, k) in &c.square_centers {
        let r = rotation_report(&p, 4, z).map_err(|e| e.to_string())?;
        ensure(r.maps_pattern, format!("order 4 about {z} is not a symmetry"))?;
        ensure(r.admissible() == (*k == Color::Blue), format!("admissibility at {z}"))?;
    }
    Ok(format!("even, {} blue order-4 centers in the square", blue.len()))
}

fn criterion_9() -> Outcome {
    let b = borromean();
    ensure(b.validate().is_valid(), "Borromean nerve invalid")?;
    for e in b.red_set() {
        let cs = generalized_crossing_disk_cycles(&b, e).map_err(|e| e.to_string())?;
        ensure(cs.is_empty(), format!("Borromean red edge {e:?} has cycles {cs:?}"))?;
    }
    let f = bipyramid_with_extra_disk();
    ensure(f.validate().is_valid(), "bipyramid nerve invalid")?;
    let cs = generalized_crossing_disk_cycles(&f, (0, 1)).map_err(|e| e.to_string())?;
    ensure(!cs.is_empty(), "central red edge has no extra disk")?;
    unique_crossing_disk_circle(&f).map_err(|e| e.to_string())?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut matched = 0;
    for i in 0..200 {
        let n = rng.gen_range(4..=60);
        let faces = random_triangulation(n, &mut rng);
        let red = random_red_matching(&faces, &mut rng).unwrap_or_default();
        let g = NerveGraph::new(faces, red.iter().map(|&(a, b)| [a, b]).collect());
        ensure(
            degree_excess_sum(&g) == 12,
            format!("triangulation {i}: sum {}", degree_excess_sum(&g)),
        )?;
        let v = low_degree_vertex(&g).map_err(|e| format!("triangulation {i}: {e}"))?;
        ensure(g.degree(v) <= 5, format!("triangulation {i}: vertex {v}"))?;
        if !red.is_empty() {
            ensure(g.validate().is_valid(), format!("triangulation {i}: matched nerve invalid"))?;
            matched += 1;
        }
    }
    Ok(format!("200 triangulations, {matched} with red matchings validated"))
}

fn criterion_10() -> Outcome {
    let basis = GeometricBasis::new(rvec(2, 0), rvec(0, 18)).unwrap();
    let pass = certify_commensurability_hypotheses(9, 6, Some(&basis)).map_err(|e| e.to_string())?;
    ensure(
        pass.passed() && pass.conditions.len() == 4,
        "(9, 6, 18) should pass all four clauses",
    )?;
    let derived = certify_commensurability_hypotheses(9, 6, None).map_err(|e| e.to_string())?;
    ensure(derived.passed(), "(9, 6) with derived longitude should pass")?;
    for (regions, crossings, clause) in [(8, 6, "a_twist_regions"), (9, 5, "b_twist_slope_length_sq")] {
        let c = certify_commensurability_hypotheses(regions, crossings, None).map_err(|e| e.to_string())?;
        let first = c.first_violation().map(|c| c.name.clone());
        ensure(
            first.as_deref() == Some(clause),
            format!("({regions}, {crossings}) failed on {first:?}"),
        )?;
    }
    Ok("(9,6,18) passes; (8,6) fails a; (9,5) fails b".into())
}

fn main() {
    let criteria: [(fn() -> Outcome, Duration); 10] = [
        (criterion_1, Duration::from_secs(1)),
        (criterion_2, Duration::from_millis(100)),
        (criterion_3, Duration::from_millis(100)),
        (criterion_4, Duration::from_secs(5)),
        (criterion_5, Duration::from_secs(10)),
        (criterion_6, Duration::from_secs(30)),
        (criterion_7, Duration::from_millis(100)),
        (criterion_8, Duration::from_millis(500)),
        (criterion_9, Duration::from_secs(10)),
        (criterion_10, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let dt = t.elapsed();
        let r = match r {
            Ok(msg) if dt > *limit => Err(format!("{msg}; took {dt:?}, limit {limit:?}")),
            other => other,
        };
        match r {
            Ok(msg) => println!("criterion {}: PASS ({msg}; {dt:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({msg}; {dt:.2?})", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
