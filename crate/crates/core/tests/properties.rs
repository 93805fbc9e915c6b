use falcert::certifier::{
    certify_twisted_filling, fal_sufficient_condition, min_uniform_q, quantify_threshold, v0, CertificateDocument, FalGeometry,
    Variant,
};
use falcert::cusp::{
    normalized_length_sq, normalized_length_sq_lower_bound, total_inverse_normalized_length_sq, twist_slope_longer_than_six,
    BoundMode, CuspShape, MultiSlope, Slope,
};
use falcert::exact::{int, rat, QSqrt3};
use falcert::horoball::{checkerboard, generate_pattern, odd_pattern, rotation_report, HPoint, HoroballPattern};
use falcert::interval::Interval;
use falcert::lattice::{
    check_quotient_bound, classify_quotient_basis, index_two_sublattices, index_two_superlattices, reduce_basis, GeometricBasis,
    PlanarVector, TranslationLattice,
};
use falcert::nerve::{
    degree_excess_sum, generalized_crossing_disk_cycles, low_degree_vertex, random_red_matching, random_triangulation,
    unique_crossing_disk_circle, NerveGraph,
};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lattice() -> impl Strategy<Value = TranslationLattice<BigRational>> {
    let c = || (-50i64..=50, 1i64..=4).prop_map(|(n, d)| rat(n, d));
    (c(), c(), c(), c()).prop_filter_map("degenerate", |(a, b, c, d)| {
        TranslationLattice::new(PlanarVector::new(a, b), PlanarVector::new(c, d)).ok()
    })
}

fn shape() -> impl Strategy<Value = CuspShape> {
    (0.1f64..10.0, 0.05f64..3.09, 0.1f64..10.0)
        .prop_map(|(r, t, l)| CuspShape::new(Interval::point(r), Interval::point(t), Interval::point(l)).unwrap())
}

fn slope() -> impl Strategy<Value = Slope> {
    (-40i64..=40, -40i64..=40).prop_filter_map("not primitive", |(p, q)| Slope::new(p, q).ok())
}

fn q_list() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(
        prop_oneof![3i64..5000, 5000i64..3_000_000].prop_flat_map(|q| prop_oneof![Just(q), Just(-q)]),
        1..6,
    )
}

fn fal(volume: f64, systole: f64, n: usize) -> FalGeometry {
    FalGeometry::new(Interval::point(volume), Some(Interval::point(systole)), n, false, vec![]).unwrap()
}

fn nerve(seed: u64, n: usize) -> NerveGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let faces = random_triangulation(n, &mut rng);
    let red = random_red_matching(&faces, &mut rng).expect("triangulations have perfect dual matchings");
    NerveGraph::new(faces, red.iter().map(|&(a, b)| [a, b]).collect())
}

fn line_pattern() -> impl Strategy<Value = HoroballPattern> {
    (
        prop::collection::btree_set((1i64..8, 0i64..2), 0..4),
        prop::collection::vec(0u8..2, 5),
        1i64..4,
        0i64..2,
    )
        .prop_map(|(extra, parity, gap, ly)| {
            let mut lines = vec![QSqrt3::zero()];
            let mut xs: Vec<QSqrt3> = extra
                .into_iter()
                .map(|(k, r)| {
                    if r == 0 {
                        QSqrt3::from_i64(k)
                    } else {
                        QSqrt3::new(rat(0, 1), int(k))
                    }
                })
                .collect();
            xs.sort();
            xs.dedup();
            lines.extend(xs);
            let last = lines.last().unwrap().clone();
            let lx = &last + &QSqrt3::from_i64(gap);
            let parity = parity[..lines.len()].to_vec();
            generate_pattern(&lines, &parity, HPoint::new(lx, QSqrt3::from_i64(ly))).unwrap()
        })
}

fn half_point() -> impl Strategy<Value = HPoint> {
    (-8i64..8, -8i64..8).prop_map(|(a, b)| HPoint::new(QSqrt3::rational(rat(a, 2)), QSqrt3::rational(rat(b, 2))))
}

proptest! {
    #[test]
    fn reduce_is_idempotent(lat in lattice()) {
        let g = reduce_basis(&lat).unwrap();
        let h = reduce_basis(&g.lattice()).unwrap();
        prop_assert_eq!(g.a.norm_sq(), h.a.norm_sq());
        prop_assert_eq!(g.b.norm_sq(), h.b.norm_sq());
    }

    #[test]
    fn covolume_is_preserved(lat in lattice()) {
        let g = reduce_basis(&lat).unwrap();
        let c = lat.covolume();
        prop_assert_eq!(g.lattice().covolume(), c.clone());
        for s in index_two_sublattices(&lat) {
            prop_assert_eq!(s.covolume(), &c * rat(2, 1));
        }
        for s in index_two_superlattices(&lat) {
            prop_assert_eq!(s.covolume(), &c / rat(2, 1));
        }
    }

    #[test]
    fn every_sublattice_basis_has_a_listed_form(lat in lattice()) {
        let g = reduce_basis(&lat).unwrap();
        prop_assert!(classify_quotient_basis(&g).is_ok());
    }

    #[test]
    fn long_b2_gives_long_quotient_vectors(len in 16.001f64..40.0, proj in -1.0f64..=1.0) {
        let l = Interval::point(len);
        let x = Interval::point(proj);
        let b = PlanarVector::new(x, (l.square() - x.square()).sqrt());
        let g = GeometricBasis::new(PlanarVector::new(Interval::from_i64(2), Interval::zero()), b).unwrap();
        prop_assert!(check_quotient_bound(&g).is_ok());
    }

    #[test]
    fn lower_bound_holds_under_sign_condition(c in shape(), s in slope()) {
        let lb = normalized_length_sq_lower_bound(&c, &s);
        if lb.sign_condition {
            prop_assert!(!lb.value.certainly_gt(&normalized_length_sq(&c, &s)));
        }
    }

    #[test]
    fn normalized_length_is_scale_invariant(c in shape(), s in slope(), t in 0.01f64..100.0) {
        let a = normalized_length_sq(&c, &s);
        let b = normalized_length_sq(&c.scaled(Interval::point(t)).unwrap(), &s);
        prop_assert!(a.lo() <= b.hi() && b.lo() <= a.hi(), "{} vs {}", a, b);
    }

    #[test]
    fn bound_modes_decrease_in_q(qs in q_list(), i in 0usize..6, extra in 1i64..1000) {
        let i = i % qs.len();
        let mut larger = qs.clone();
        larger[i] += larger[i].signum() * extra;
        let cusps = vec![None; qs.len() + 1];
        for mode in [BoundMode::Purcell, BoundMode::L4] {
            let a = total_inverse_normalized_length_sq(&cusps, &MultiSlope::reciprocal(&qs).unwrap(), mode).unwrap();
            let b = total_inverse_normalized_length_sq(&cusps, &MultiSlope::reciprocal(&larger).unwrap(), mode).unwrap();
            prop_assert!(b.hi() <= a.hi());
        }
    }

    #[test]
    fn twist_predicate_matches_crossing_count(c in 0u64..100) {
        prop_assert_eq!(twist_slope_longer_than_six(c), c >= 6);
    }

    #[test]
    fn threshold_decreases_in_volume(v in 2.1f64..200.0, dv in 0.01f64..50.0, eps in 0.05f64..1.09) {
        let e = Interval::point(eps);
        let a = quantify_threshold(e, Interval::point(v)).unwrap();
        let b = quantify_threshold(e, Interval::point(v + dv)).unwrap();
        prop_assert!(!b.certainly_gt(&a));
    }

    #[test]
    fn threshold_increases_in_epsilon(v in 2.1f64..200.0, eps in 0.05f64..1.0, de in 0.001f64..0.09) {
        let vol = Interval::point(v);
        let a = quantify_threshold(Interval::point(eps), vol).unwrap();
        let b = quantify_threshold(Interval::point(eps + de), vol).unwrap();
        prop_assert!(!a.certainly_gt(&b));
    }

    #[test]
    fn pass_persists_for_larger_q(
        v in 2.1f64..60.0, sys in 0.1f64..1.5, qs in q_list(), extra in prop::collection::vec(0i64..100_000, 6),
        mode in prop_oneof![Just(BoundMode::Purcell), Just(BoundMode::L4)],
    ) {
        let f = fal(v, sys, qs.len());
        if certify_twisted_filling(&f, &qs, None, mode).unwrap().passed() {
            let larger: Vec<i64> = qs.iter().zip(&extra).map(|(q, e)| q + q.signum() * e).collect();
            prop_assert!(certify_twisted_filling(&f, &larger, None, mode).unwrap().passed());
        }
    }

    #[test]
    fn widened_pass_implies_pass(v in 2.1f64..60.0, sys in 0.1f64..1.5, qs in q_list(), r in 0.0f64..0.05) {
        let wide = FalGeometry::new(
            Interval::point(v).inflate(r * v),
            Some(Interval::point(sys).inflate(r * sys / 2.0)),
            qs.len(),
            false,
            vec![],
        ).unwrap();
        let narrow = fal(v, sys, qs.len());
        if certify_twisted_filling(&wide, &qs, None, BoundMode::Purcell).unwrap().passed() {
            prop_assert!(certify_twisted_filling(&narrow, &qs, None, BoundMode::Purcell).unwrap().passed());
        }
    }

    #[test]
    fn corrected_sufficient_condition_implies_direct_check(
        n in 2usize..8, t in 0.21f64..1.0, eps in 0.05f64..1.09, qs in prop::collection::vec(1000i64..2_000_000, 8),
    ) {
        let qs = &qs[..n];
        let e = Interval::point(eps);
        if fal_sufficient_condition(n, e, qs, Variant::Corrected).unwrap().passed() {
            let vol = t * 10.0 * v0().lo() * (n - 1) as f64;
            let f = fal(vol, 2.0 * eps, n);
            prop_assert!(certify_twisted_filling(&f, qs, Some(e), BoundMode::Purcell).unwrap().passed());
        }
    }

    #[test]
    fn certificate_json_round_trips(v in 2.1f64..60.0, sys in 0.1f64..1.5, qs in q_list()) {
        let c = certify_twisted_filling(&fal(v, sys, qs.len()), &qs, None, BoundMode::L4).unwrap();
        let doc = c.to_document();
        let s = serde_json::to_string(&doc).unwrap();
        let back: CertificateDocument = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn nerve_invariants(seed in any::<u64>(), n in 4usize..40) {
        let g = nerve(seed, n);
        prop_assert!(g.validate().is_valid());
        prop_assert_eq!(degree_excess_sum(&g), 12);
        prop_assert!(g.degree(low_degree_vertex(&g).unwrap()) <= 5);
        prop_assert_eq!(g.red_edges.len() * 2, g.faces.len());
        let faces: Vec<[usize; 3]> = g.faces.iter().map(|f| { let mut f = *f; f.sort_unstable(); f }).collect();
        for e in g.red_set() {
            for c in generalized_crossing_disk_cycles(&g, e).unwrap() {
                prop_assert!(!faces.contains(&c));
            }
        }
        prop_assert!(unique_crossing_disk_circle(&g).is_ok());
    }

    #[test]
    fn patterns_are_invariant_under_generators(p in line_pattern()) {
        for t in p.generators() {
            prop_assert!(p.is_translation_symmetry(&t));
        }
    }

    #[test]
    fn rotation_verdict_is_translation_invariant(
        which in 0usize..4, order in prop_oneof![Just(2u32), Just(3), Just(4)], c in half_point(),
        a in -3i64..=3, b in -3i64..=3, lp in line_pattern(),
    ) {
        let p = match which {
            0 => checkerboard(true),
            1 => checkerboard(false),
            2 => odd_pattern(),
            _ => lp,
        };
        let [m, l] = p.generators();
        let shifted = c.add(&m.scale(&QSqrt3::from_i64(a))).add(&l.scale(&QSqrt3::from_i64(b)));
        let r0 = rotation_report(&p, order, &c).unwrap();
        let r1 = rotation_report(&p, order, &shifted).unwrap();
        prop_assert_eq!(r0.maps_pattern, r1.maps_pattern);
        prop_assert_eq!(r0.admissible(), r1.admissible());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn min_q_is_nondecreasing_in_volume(v in 2.1f64..60.0, dv in 0.0f64..40.0, sys in 0.2f64..1.2) {
        let a = min_uniform_q(&fal(v, sys, 3), None, BoundMode::Purcell).unwrap();
        let b = min_uniform_q(&fal(v + dv, sys, 3), None, BoundMode::Purcell).unwrap();
        prop_assert!(a <= b);
    }
}
