//! Seeded generators for random rational test instances.
//!
//! All randomness comes from ChaCha8 seeded with a `u64`. Trial `k` of a run
//! with seed `s` uses stream `k` of the generator seeded with `s`, so trials
//! can run in any order or in parallel and still reproduce exactly.
//!
//! Coordinates are snapped to rationals with denominators at most 1000.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{AffineMap, Point, Simplex, SimplicialPolytope};
use crate::scalar::{ratio, Rational, Scalar};
use crate::Error;

pub const MAX_DENOMINATOR: i64 = 1000;

/// Primitive Pythagorean triples `(a, b, c)` with `a^2 + b^2 = c^2`.
pub const PYTHAGOREAN_TRIPLES: [(i64, i64, i64); 6] = [
    (3, 4, 5),
    (5, 12, 13),
    (8, 15, 17),
    (7, 24, 25),
    (20, 21, 29),
    (12, 35, 37),
];

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn for_trial(seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Self { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.random_range(0..upper)
    }

    /// `x` rounded to the nearest multiple of `1/d` for a random `d <= 1000`.
    pub fn snap(&mut self, x: f64) -> Rational {
        let d = self.rng.random_range(1..=MAX_DENOMINATOR);
        ratio((x * d as f64).round() as i64, d)
    }

    /// Uniform rational in `[lo, hi]` with denominator at most 1000.
    pub fn rational(&mut self, lo: f64, hi: f64) -> Rational {
        let x = self.rng.random_range(lo..=hi);
        self.snap(x)
    }

    pub fn point(&mut self, dim: usize, lo: f64, hi: f64) -> Point<Rational> {
        Point::new((0..dim).map(|_| self.rational(lo, hi)).collect())
    }

    /// Random configuration of `n + 1` points in `[-5, 5]^n`, nondegenerate.
    pub fn configuration(&mut self, n: usize) -> Simplex<Rational> {
        loop {
            let s = Simplex::new((0..=n).map(|_| self.point(n, -5.0, 5.0)).collect())
                .expect("n + 1 points of dimension n");
            if !crate::geometry::signed_volume(&s).is_zero() {
                return s;
            }
        }
    }

    /// Star-shaped polygon around the origin with 3 to `max_vertices` vertices
    /// and nonzero area, in random orientation.
    pub fn polygon(&mut self, max_vertices: usize) -> Vec<Point<Rational>> {
        loop {
            let m = self.rng.random_range(3..=max_vertices.max(3));
            let mut angles: Vec<f64> = (0..m)
                .map(|_| self.rng.random_range(0.0..std::f64::consts::TAU))
                .collect();
            angles.sort_by(f64::total_cmp);
            let mut vertices: Vec<Point<Rational>> = angles
                .iter()
                .map(|t| {
                    let r = self.rng.random_range(1.0..4.0);
                    Point::new(vec![self.snap(r * t.cos()), self.snap(r * t.sin())])
                })
                .collect();
            if self.rng.random_bool(0.5) {
                vertices.reverse();
            }
            let offset = self.point(2, -3.0, 3.0);
            let vertices: Vec<Point<Rational>> = vertices.iter().map(|v| v + &offset).collect();
            let twice_area = (0..m).fold(Rational::zero(), |acc, i| {
                let (a, b) = (&vertices[i], &vertices[(i + 1) % m]);
                acc + &a[0] * &b[1] - &a[1] * &b[0]
            });
            if !twice_area.is_zero() {
                return vertices;
            }
        }
    }

    /// Random rational simplicial polytope in dimension `n`: a perturbed
    /// cross-polytope or simplex boundary, or (for `n = 3`) a bipyramid over a
    /// random polygon. Shifted by a random offset. The result need not be
    /// convex or star-shaped, but its boundary is a closed, consistently
    /// oriented cycle with positive volume.
    pub fn polytope(&mut self, n: usize) -> SimplicialPolytope<Rational> {
        let kind = self.rng.random_range(0..if n == 3 { 3 } else { 2 });
        let (vertices, faces) = match kind {
            0 => {
                let base = crate::shapes::cross_polytope::<Rational>(n);
                (self.perturb(base.vertices(), 0.3), base.faces().to_vec())
            }
            1 => {
                let base = crate::shapes::simplex_boundary::<Rational>(n);
                let shift = Point::new(vec![ratio(-1, n as i64 + 1); n]);
                let moved: Vec<Point<Rational>> = base.vertices().iter().map(|v| v + &shift).collect();
                (self.perturb(&moved, 0.08), base.faces().to_vec())
            }
            _ => self.bipyramid(),
        };
        // The face lists are consistently oriented already; only the global
        // sign can be wrong. Flipping faces one by one would break the cycle
        // whenever the polytope is not star-shaped about the origin.
        let faces = match SimplicialPolytope::new_unoriented(vertices.clone(), faces.clone()) {
            Ok(p) if p.volume() < Rational::zero() => faces
                .into_iter()
                .map(|mut f| {
                    f.swap(0, 1);
                    f
                })
                .collect(),
            _ => faces,
        };
        let offset = self.point(n, -3.0, 3.0);
        let vertices = vertices.iter().map(|v| v + &offset).collect();
        SimplicialPolytope::new(vertices, faces).expect("closed boundary with positive volume")
    }

    fn perturb(&mut self, vertices: &[Point<Rational>], amount: f64) -> Vec<Point<Rational>> {
        vertices
            .iter()
            .map(|v| {
                let scale = self.rational(0.7, 1.6);
                let jitter = self.point(v.dim(), -amount, amount);
                &v.scale(&scale) + &jitter
            })
            .collect()
    }

    fn bipyramid(&mut self) -> (Vec<Point<Rational>>, Vec<Vec<usize>>) {
        let k = self.rng.random_range(3..=8);
        let mut angles: Vec<f64> = (0..k)
            .map(|i| (i as f64 + self.rng.random_range(0.1..0.9)) * std::f64::consts::TAU / k as f64)
            .collect();
        angles.sort_by(f64::total_cmp);
        let mut vertices: Vec<Point<Rational>> = angles
            .iter()
            .map(|t| {
                let r = self.rng.random_range(1.0..2.5);
                let z = self.rng.random_range(-0.2..0.2);
                Point::new(vec![self.snap(r * t.cos()), self.snap(r * t.sin()), self.snap(z)])
            })
            .collect();
        let top = Point::new(vec![self.rational(-0.3, 0.3), self.rational(-0.3, 0.3), self.rational(1.0, 2.0)]);
        let bottom = Point::new(vec![self.rational(-0.3, 0.3), self.rational(-0.3, 0.3), self.rational(-2.0, -1.0)]);
        vertices.push(top);
        vertices.push(bottom);
        let mut faces = Vec::with_capacity(2 * k);
        for i in 0..k {
            let j = (i + 1) % k;
            faces.push(vec![i, j, k]);
            faces.push(vec![j, i, k + 1]);
        }
        (vertices, faces)
    }

    /// A random rational isometry of `R^n`: a composition of a Pythagorean
    /// plane rotation, a coordinate swap and a reflection (each present with
    /// probability 1/2) followed by a rational translation.
    pub fn isometry(&mut self, n: usize) -> AffineMap<Rational> {
        let mut map = AffineMap::identity(n);
        if self.rng.random_bool(0.5) || n < 2 {
            map = self.rotation(n).compose(&map);
        }
        if n >= 2 && self.rng.random_bool(0.5) {
            let (a, b) = self.plane(n);
            map = AffineMap::coordinate_swap(n, a, b).compose(&map);
        }
        if self.rng.random_bool(0.5) {
            let axis = self.index(n);
            map = AffineMap::reflection(n, axis).compose(&map);
        }
        let offset = self.point(n, -5.0, 5.0).into_coords();
        AffineMap::translation(offset).compose(&map)
    }

    fn plane(&mut self, n: usize) -> (usize, usize) {
        let a = self.index(n);
        let mut b = self.index(n - 1);
        if b >= a {
            b += 1;
        }
        (a, b)
    }

    /// Rotation by a Pythagorean angle in a random coordinate plane.
    pub fn rotation(&mut self, n: usize) -> AffineMap<Rational> {
        if n < 2 {
            return AffineMap::identity(n);
        }
        let (a, b) = self.plane(n);
        let (x, y, z) = PYTHAGOREAN_TRIPLES[self.index(PYTHAGOREAN_TRIPLES.len())];
        let (cos, sin) = if self.rng.random_bool(0.5) { (x, y) } else { (y, x) };
        let sign = if self.rng.random_bool(0.5) { 1 } else { -1 };
        AffineMap::plane_rotation(n, a, b, ratio(cos, z), ratio(sign * sin, z))
    }
}

/// Converts exact values to the requested backend.
pub fn convert_point<S: Scalar>(p: &Point<Rational>) -> Point<S> {
    Point::new(p.coords().iter().map(S::from_rational).collect())
}

pub fn convert_polytope<S: Scalar>(p: &SimplicialPolytope<Rational>) -> Result<SimplicialPolytope<S>, Error> {
    SimplicialPolytope::new(
        p.vertices().iter().map(convert_point).collect(),
        p.faces().to_vec(),
    )
}

pub fn convert_map<S: Scalar>(m: &AffineMap<Rational>) -> AffineMap<S> {
    let n = m.dim();
    let image_of = |p: &Point<Rational>| convert_point::<S>(&m.apply(p));
    let offset = image_of(&Point::origin(n));
    let linear: Vec<Vec<S>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = vec![BigInt::from(0); n];
                    e[j] = BigInt::from(1);
                    let unit = Point::new(e.into_iter().map(Rational::from_integer).collect());
                    image_of(&unit)[i].clone() - offset[i].clone()
                })
                .collect()
        })
        .collect();
    AffineMap::new(linear, offset.into_coords())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::signed_volume;

    #[test]
    fn deterministic_per_trial() {
        let a = Sampler::for_trial(42, 7).polygon(12);
        let b = Sampler::for_trial(42, 7).polygon(12);
        let c = Sampler::for_trial(42, 8).polygon(12);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn denominators_are_bounded() {
        let mut s = Sampler::new(1);
        for _ in 0..200 {
            let q = s.rational(-5.0, 5.0);
            assert!(q.denom() <= &BigInt::from(MAX_DENOMINATOR));
        }
    }

    #[test]
    fn polytopes_are_valid_and_closed() {
        let mut s = Sampler::new(3);
        for n in 2..=4 {
            for _ in 0..10 {
                let p = s.polytope(n);
                let a = s.point(n, -10.0, 10.0);
                assert_eq!(p.fan_volume(&a), p.volume());
                assert!(p.volume() > Rational::zero());
            }
        }
    }

    #[test]
    fn random_surfaces_are_oriented_cycles() {
        use std::collections::BTreeMap;
        for trial in 0..300 {
            let p = Sampler::for_trial(9, trial).polytope(3);
            let mut edges: BTreeMap<(usize, usize), i32> = BTreeMap::new();
            for f in p.faces() {
                for k in 0..3 {
                    let (a, b) = (f[k], f[(k + 1) % 3]);
                    *edges.entry((a.min(b), a.max(b))).or_default() += if a < b { 1 } else { -1 };
                }
            }
            assert!(edges.values().all(|&c| c == 0), "trial {trial}: {:?}", p.faces());
        }
    }

    #[test]
    fn isometries_preserve_volume_magnitude() {
        let mut s = Sampler::new(5);
        for n in 2..=4 {
            let map = s.isometry(n);
            let simplex = s.configuration(n);
            let image = map.apply_simplex(&simplex);
            let (v0, v1) = (signed_volume(&simplex), signed_volume(&image));
            if map.reverses_orientation() {
                assert_eq!(v0, -v1);
            } else {
                assert_eq!(v0, v1);
            }
        }
    }
}
