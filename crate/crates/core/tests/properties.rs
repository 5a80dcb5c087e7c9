use ccm_core::centers::{ccm_polygon, ccm_triangulated, cm_polygon, phi_polygon, phi_simplex, Polygon2D};
use ccm_core::geometry::{centroid, circumcenter, signed_volume, AffineMap, Point, Simplex};
use ccm_core::linalg::rank;
use ccm_core::random::Sampler;
use ccm_core::scalar::{format_exact, int, parse_exact, ratio, Rational, Scalar};
use ccm_core::skew::coefficients::{ccm_coefficients, cm_coefficients, evaluate_center};
use ccm_core::skew::determinants::{eval_v, eval_x, rotation_action, subdivision_check};
use ccm_core::valuation::{continuous_limit, k_alpha_phi, moment_polynomial, StarCurve};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-5000i64..=5000, 1i64..=1000).prop_map(|(p, q)| ratio(p, q))
}

fn point(n: usize) -> impl Strategy<Value = Point<Rational>> {
    prop::collection::vec(rational(), n).prop_map(Point::new)
}

fn simplex(n: usize) -> impl Strategy<Value = Simplex<Rational>> {
    prop::collection::vec(point(n), n + 1)
        .prop_map(|vs| Simplex::new(vs).unwrap())
        .prop_filter("nondegenerate", |s| !signed_volume(s).is_zero())
}

fn any_simplex() -> impl Strategy<Value = Simplex<Rational>> {
    (2usize..=4).prop_flat_map(simplex)
}

fn polygon() -> impl Strategy<Value = Polygon2D<Rational>> {
    any::<u64>().prop_map(|seed| Polygon2D::new(Sampler::new(seed).polygon(12)).unwrap())
}

/// Strictly convex polygon with vertices on a circle, via the rational
/// parameterization `((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`.
fn convex_polygon() -> impl Strategy<Value = Polygon2D<Rational>> {
    (prop::collection::btree_set(-400i64..=400, 3..10), 1i64..=5).prop_map(|(ts, r)| {
        let mut pts: Vec<(f64, Point<Rational>)> = ts
            .into_iter()
            .map(|k| {
                let t = ratio(k, 100);
                let d = int(1) + &t * &t;
                let x = (int(1) - &t * &t) / &d * int(r);
                let y = int(2) * &t / &d * int(r);
                let angle = y.to_f64().atan2(x.to_f64());
                (angle, Point::new(vec![x, y]))
            })
            .collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        Polygon2D::new(pts.into_iter().map(|(_, p)| p).collect()).unwrap()
    })
}

fn rotation(n: usize, a: usize, b: usize) -> AffineMap<Rational> {
    AffineMap::plane_rotation(n, a, b, ratio(3, 5), ratio(4, 5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fraction_text_round_trips(q in rational()) {
        prop_assert_eq!(parse_exact(&format_exact(&q)), Some(q));
    }

    #[test]
    fn volume_is_alternating(s in any_simplex(), a in 0usize..5, b in 0usize..5) {
        let n = s.dim();
        let (a, b) = (a % (n + 1), b % (n + 1));
        prop_assume!(a != b);
        prop_assert_eq!(signed_volume(&s.swapped(a, b)), -signed_volume(&s));
    }

    #[test]
    fn circumcenter_commutes_with_rational_isometries(s in any_simplex(), t in point(4), axis in 0usize..4) {
        let n = s.dim();
        let shift = Point::new(t.coords()[..n].to_vec());
        let axis = axis % n;
        let maps = [
            AffineMap::translation(shift.into_coords()).compose(&rotation(n, 0, n - 1)),
            AffineMap::coordinate_swap(n, 0, n - 1),
            AffineMap::reflection(n, axis),
            AffineMap::scaling(n, ratio(7, 3)),
        ];
        let c = circumcenter(&s).unwrap();
        for g in &maps {
            prop_assert_eq!(circumcenter(&g.apply_simplex(&s)).unwrap(), g.apply(&c));
        }
    }

    #[test]
    fn float_circumcenter_is_covariant_within_tolerance(s in simplex(3)) {
        let sf = s.map_to(Point::to_f64);
        let g = AffineMap::<f64>::plane_rotation(3, 0, 2, 0.6, 0.8).compose(&AffineMap::translation(vec![1.5, -2.0, 0.25]));
        let lhs = circumcenter(&g.apply_simplex(&sf)).unwrap();
        let rhs = g.apply(&circumcenter(&sf).unwrap());
        prop_assert!(lhs.close_to(&rhs, 1e-9 * (1.0 + rhs.distance_f64(&Point::origin(3)))));
    }

    #[test]
    fn translating_shifts_the_centroid(s in any_simplex(), t in point(4)) {
        let n = s.dim();
        let shift = Point::new(t.coords()[..n].to_vec());
        let moved = s.map_vertices(|v| v + &shift);
        prop_assert_eq!(centroid(&moved), &centroid(&s) + &shift);
    }

    #[test]
    fn polygon_fan_is_apex_independent(p in polygon(), a in point(2), b in point(2)) {
        let ca = ccm_triangulated(&p.fan(&a)).unwrap();
        let cb = ccm_triangulated(&p.fan(&b)).unwrap();
        prop_assert_eq!(ca, cb);
    }

    #[test]
    fn polytope_fan_volume_is_apex_independent(seed in any::<u64>(), n in 2usize..=4) {
        let mut s = Sampler::new(seed);
        let p = s.polytope(n);
        let a = s.point(n, -20.0, 20.0);
        prop_assert_eq!(p.fan_volume(&a), p.volume());
    }

    #[test]
    fn closed_form_matches_fan(p in polygon()) {
        let fan = ccm_triangulated(&p.fan(&p.vertices()[0])).unwrap().point;
        prop_assert_eq!(ccm_polygon(&p).unwrap(), fan);
    }

    #[test]
    fn polygon_formulas_ignore_orientation(p in polygon()) {
        let r = p.reversed();
        prop_assert_eq!(ccm_polygon(&r).unwrap(), ccm_polygon(&p).unwrap());
        prop_assert_eq!(cm_polygon(&r).unwrap(), cm_polygon(&p).unwrap());
        prop_assert_eq!(phi_polygon(&r), phi_polygon(&p).scale(&int(-1)));
    }

    #[test]
    fn scaling_laws(p in polygon(), s in any_simplex(), num in 1i64..20, den in 1i64..20) {
        let l = ratio(num, den);
        let scaled = p.map_vertices(|v| v.scale(&l));
        prop_assert_eq!(ccm_polygon(&scaled).unwrap(), ccm_polygon(&p).unwrap().scale(&l));
        let n = s.dim();
        let power = (0..=n).fold(int(1), |acc, _| acc * &l);
        prop_assert_eq!(phi_simplex(&s.map_vertices(|v| v.scale(&l))), phi_simplex(&s).scale(&power));
    }

    #[test]
    fn archimedes_subdivision(s in any_simplex(), o in point(4)) {
        let n = s.dim();
        let o = Point::new(o.coords()[..n].to_vec());
        let pieces: Vec<Simplex<Rational>> = (0..=n).map(|m| s.with_vertex(m, o.clone())).collect();
        let phi = pieces.iter().fold(Point::origin(n), |acc, d| &acc + &phi_simplex(d));
        let vol: Rational = pieces.iter().map(signed_volume).sum();
        prop_assert_eq!(phi, phi_simplex(&s));
        prop_assert_eq!(vol, signed_volume(&s));
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    prop_assert!(subdivision_check(&s, &o, i, j, k).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn diagonal_split_is_additive(p in polygon(), k in 2usize..11) {
        let v = p.vertices();
        let k = 2 + k % (v.len() - 1).max(1);
        prop_assume!(k < v.len());
        let first = Polygon2D::new(v[..=k].to_vec()).unwrap();
        let mut rest = v[k..].to_vec();
        rest.push(v[0].clone());
        prop_assume!(rest.len() >= 3);
        let second = Polygon2D::new(rest).unwrap();
        prop_assert_eq!(phi_polygon(&p), &phi_polygon(&first) + &phi_polygon(&second));
    }

    #[test]
    fn x_is_skew_in_the_vertices(s in any_simplex(), a in 0usize..5, b in 0usize..5, ijk in (0usize..4, 0usize..4, 0usize..4)) {
        let n = s.dim();
        let (a, b) = (a % (n + 1), b % (n + 1));
        prop_assume!(a != b);
        let (i, j, k) = (ijk.0 % n, ijk.1 % n, ijk.2 % n);
        prop_assert_eq!(eval_x(&s.swapped(a, b), i, j, k).unwrap(), -eval_x(&s, i, j, k).unwrap());
        prop_assert_eq!(eval_x(&s, i, j, k).unwrap(), eval_x(&s, i, k, j).unwrap());
    }

    #[test]
    fn coordinate_swap_action(s in any_simplex(), a in 0usize..4, b in 0usize..4) {
        let n = s.dim();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let sigma = |x: usize| if x == a { b } else if x == b { a } else { x };
        let swapped = AffineMap::coordinate_swap(n, a, b).apply_simplex(&s);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    prop_assert_eq!(
                        eval_x(&swapped, i, j, k).unwrap(),
                        -eval_x(&s, sigma(i), sigma(j), sigma(k)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn v_is_factorial_times_volume(s in any_simplex()) {
        prop_assert_eq!(eval_v(&s), signed_volume(&s) * Rational::factorial(s.dim()));
    }

    #[test]
    fn coefficient_tensors_evaluate_to_centers(s in any_simplex()) {
        let n = s.dim();
        prop_assert_eq!(evaluate_center(&cm_coefficients(n), &s).unwrap(), centroid(&s));
        prop_assert_eq!(evaluate_center(&ccm_coefficients(n), &s).unwrap(), circumcenter(&s).unwrap());
    }

    #[test]
    fn rotation_identity_in_four_dimensions(s in simplex(4), idx in prop::collection::vec(0usize..4, 5)) {
        prop_assume!(idx[0] != idx[1]);
        prop_assert!(rotation_action(&s, idx[0], idx[1], idx[2], idx[3], idx[4]).unwrap().is_zero());
    }

    #[test]
    fn duplicating_a_column_keeps_rank(rows in prop::collection::vec(prop::collection::vec(rational(), 4), 1..6), col in 0usize..4) {
        let widened: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.push(r[col].clone());
                r
            })
            .collect();
        prop_assert_eq!(rank(&widened), rank(&rows));
    }

    #[test]
    fn k_alpha_closed_form(h in rational().prop_filter("positive", |h| *h > Rational::zero())) {
        let expected = Point::new(vec![int(0), (&h * &h - int(1)) / int(2)]);
        prop_assert_eq!(k_alpha_phi(&h).unwrap(), expected);
    }

    #[test]
    fn moment_free_term_and_steiner(p in convex_polygon()) {
        let mp = moment_polynomial(&p).unwrap();
        let expected = cm_polygon(&p).unwrap().scale(&p.signed_area());
        prop_assert_eq!(mp.coefficient(0)[0].as_rational(), Some(expected[0].clone()));
        prop_assert_eq!(mp.coefficient(0)[1].as_rational(), Some(expected[1].clone()));
        prop_assert!(mp.steiner_holds());
        prop_assert!(mp.degree() <= 3);
    }

    #[test]
    fn ellipse_gap_does_not_grow(a in 0.5f64..3.0, b in 0.5f64..3.0, warp in 0.1f64..0.5) {
        let mut previous = f64::INFINITY;
        for n in [64, 128, 256, 512, 1024] {
            let gap = continuous_limit(&StarCurve::ellipse([0.5, -1.0], a, b, n, warp).unwrap()).unwrap().gap;
            prop_assert!(gap <= previous + 1e-12, "n={n}: {gap} after {previous}");
            previous = gap;
        }
    }
}
