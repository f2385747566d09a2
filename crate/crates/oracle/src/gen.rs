//! Seeded random instance generators shared by the test suites.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use num_traits::Zero;
use polyfan::classes::ClassSpec;
use polyfan::complex::{Complex, Fan};
use polyfan::linalg;
use polyfan::num::{frac, int, Scalar};
use polyfan::Polyhedron;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random rational with numerator in `[-span, span]` and denominator in
/// `[1, max_denom]`.
pub fn rational(r: &mut StdRng, span: i64, max_denom: i64) -> Scalar {
    let d = r.random_range(1..=max_denom);
    let n = r.random_range(-span * d..=span * d);
    frac(n, d)
}

pub fn lattice_point(r: &mut StdRng, dim: usize, span: i64, step: &Scalar) -> Vec<Scalar> {
    (0..dim)
        .map(|_| step * int(r.random_range(-span..=span)))
        .collect()
}

/// A random primitive integer vector with entries in `[-span, span]`.
pub fn primitive_ray(r: &mut StdRng, dim: usize, span: i64) -> Vec<Scalar> {
    loop {
        let v: Vec<Scalar> = (0..dim)
            .map(|_| int(r.random_range(-span..=span)))
            .collect();
        if v.iter().all(Scalar::is_zero) {
            continue;
        }
        return polyfan::num::primitive_scaled(&v);
    }
}

/// A random polytope: convex hull of a few lattice points.
pub fn polytope(r: &mut StdRng, dim: usize, span: i64, step: &Scalar, points: usize) -> Polyhedron {
    loop {
        let verts: Vec<Vec<Scalar>> = (0..points)
            .map(|_| lattice_point(r, dim, span, step))
            .collect();
        if let Ok(p) = Polyhedron::from_generators(dim, &verts, &[], &[]) {
            return p;
        }
    }
}

/// A random pointed polyhedron with at least one ray: hull of lattice points
/// plus rays sampled from an open half-space.
pub fn pointed_unbounded(r: &mut StdRng, dim: usize, span: i64, rays: usize) -> Polyhedron {
    loop {
        let verts: Vec<Vec<Scalar>> = (0..r.random_range(1..=3))
            .map(|_| lattice_point(r, dim, span, &int(1)))
            .collect();
        let ray_set: Vec<Vec<Scalar>> = (0..rays)
            .map(|_| {
                let mut v = primitive_ray(r, dim, 3);
                // force into the open upper half-space so the cone is pointed
                if v[dim - 1].is_zero() {
                    v[dim - 1] = int(1);
                } else if v[dim - 1] < Scalar::zero() {
                    v = linalg::neg(&v);
                }
                polyfan::num::primitive_scaled(&v)
            })
            .collect();
        let Ok(p) = Polyhedron::from_generators(dim, &verts, &ray_set, &[]) else {
            continue;
        };
        if p.is_pointed() && !p.is_bounded() {
            return p;
        }
    }
}

/// A random fan built from random primitive rays: the face fan of the convex
/// hull of the rays together with all signed unit vectors (so the hull
/// contains the origin in its interior), restricted to a random subset of
/// maximal cones.
pub fn fan(r: &mut StdRng, dim: usize, extra_rays: usize, keep_probability: f64) -> Fan {
    let mut rays: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..dim {
        rays.push(linalg::unit(dim, i));
        rays.push(linalg::neg(&linalg::unit(dim, i)));
    }
    for _ in 0..extra_rays {
        rays.push(primitive_ray(r, dim, 3));
    }
    rays.sort();
    rays.dedup();
    let complete = face_fan_of_hull(dim, &rays);
    loop {
        let kept: Vec<Polyhedron> = complete
            .iter()
            .filter(|_| r.random_bool(keep_probability))
            .cloned()
            .collect();
        let cones = if kept.is_empty() {
            vec![Polyhedron::point(&linalg::zeros(dim))]
        } else {
            kept
        };
        if let Ok(f) = Fan::validate(cones) {
            return f;
        }
    }
}

/// Maximal cones of the face fan of `conv(rays)` (the origin is interior).
pub fn face_fan_of_hull(dim: usize, rays: &[Vec<Scalar>]) -> Vec<Polyhedron> {
    let hull = Polyhedron::from_generators(dim, rays, &[], &[]).expect("hull of rays");
    let mut cones = Vec::new();
    for facet in hull.facet_faces() {
        let cone_rays: Vec<Vec<Scalar>> = facet.polyhedron.vertices().to_vec();
        cones.push(Polyhedron::cone(dim, &cone_rays));
    }
    cones.sort();
    cones.dedup();
    cones
}

/// A random complex of axis-aligned grid squares with side `step`, connected
/// by construction, with vertices on the `step` lattice.
pub fn grid_square_complex(r: &mut StdRng, step: &Scalar, squares: usize) -> Complex {
    let mut occupied: Vec<(i64, i64)> = vec![(0, 0)];
    while occupied.len() < squares {
        let &(x, y) = &occupied[r.random_range(0..occupied.len())];
        let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][r.random_range(0..4)];
        let cand = (x + dx, y + dy);
        if !occupied.contains(&cand) {
            occupied.push(cand);
        }
    }
    let cells: Vec<Polyhedron> = occupied
        .iter()
        .map(|&(x, y)| {
            Polyhedron::axis_box(&[
                (step * int(x), step * int(x + 1)),
                (step * int(y), step * int(y + 1)),
            ])
        })
        .collect();
    Complex::validate(cells).expect("grid squares form a complex")
}

/// A random lattice-rational complex in the plane: a grid-square complex,
/// possibly extended by unbounded half-strip cells on the right edge whose
/// recession cones are the positive x-ray.
pub fn gamma_complex(r: &mut StdRng, step: &Scalar, squares: usize, unbounded: bool) -> Complex {
    let base = grid_square_complex(r, step, squares);
    if !unbounded {
        return base;
    }
    // attach half-strips to the right of the rightmost squares
    let mut cells = base.maximal_cells().to_vec();
    let mut max_x: Option<Scalar> = None;
    for c in &cells {
        for v in c.vertices() {
            max_x = Some(match &max_x {
                None => v[0].clone(),
                Some(m) => {
                    if &v[0] > m {
                        v[0].clone()
                    } else {
                        m.clone()
                    }
                }
            });
        }
    }
    let max_x = max_x.unwrap();
    let mut strips = Vec::new();
    for c in &cells {
        let touches: Vec<&Vec<Scalar>> = c
            .vertices()
            .iter()
            .filter(|v| v[0] == max_x)
            .collect();
        if touches.len() == 2 {
            let y0 = touches[0][1].clone();
            let y1 = touches[1][1].clone();
            let verts = vec![
                vec![max_x.clone(), y0.clone()],
                vec![max_x.clone(), y1.clone()],
            ];
            let strip = Polyhedron::from_generators(
                2,
                &verts,
                &[vec![int(1), int(0)]],
                &[],
            )
            .expect("strip is nonempty");
            strips.push(strip);
            let _ = (y0, y1);
        }
    }
    cells.extend(strips);
    Complex::validate(cells).expect("grid with right strips is a complex")
}

/// Random class member suitable for Minkowski-closure property tests: for the
/// lattice classes a polytope-plus-cone with vertices on the class lattice;
/// zonotopes for the zonotopal class; arbitrary polyhedra otherwise.
pub fn class_member(r: &mut StdRng, class: &ClassSpec, dim: usize) -> Polyhedron {
    match class {
        ClassSpec::GammaRational(g) | ClassSpec::GammaRationalVertices(g) => {
            let n = r.random_range(1..=4);
            let p = polytope(r, dim, 3, g, n);
            if r.random_bool(0.4) {
                let ray = primitive_ray(r, dim, 2);
                let verts = p.vertices().to_vec();
                Polyhedron::from_generators(dim, &verts, &[ray], &[]).expect("nonempty")
            } else {
                p
            }
        }
        ClassSpec::Zonotopal => {
            // Minkowski sum of random segments
            let mut z = Polyhedron::point(&lattice_point(r, dim, 2, &int(1)));
            for _ in 0..r.random_range(1..=3) {
                let d = primitive_ray(r, dim, 2);
                let seg =
                    Polyhedron::from_generators(dim, &[linalg::zeros(dim), d], &[], &[]).unwrap();
                z = z.minkowski_sum(&seg).unwrap();
            }
            z
        }
        _ => {
            let n = r.random_range(1..=4);
            let p = polytope(r, dim, 3, &int(1), n);
            if r.random_bool(0.3) {
                let ray = primitive_ray(r, dim, 2);
                let verts = p.vertices().to_vec();
                Polyhedron::from_generators(dim, &verts, &[ray], &[]).expect("nonempty")
            } else {
                p
            }
        }
    }
}
