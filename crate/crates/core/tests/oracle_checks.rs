//! Cross-checks of the geometric kernel against the independent brute-force
//! oracles: vertex/ray enumeration by subset solving, Fourier–Motzkin
//! projection, exponential face enumeration, and hull-of-sums.

use polyfan::linalg;
use polyfan::linsys::LinearSystem;
use polyfan::num::{int, Scalar};
use polyfan::quotient;
use polyfan::Polyhedron;
use polyfan_oracle as oracle;
use polyfan_oracle::gen;

fn sys(dim: usize, ineqs: &[(&[i64], i64)]) -> LinearSystem {
    let mut s = LinearSystem::new(dim);
    for (n, o) in ineqs {
        s.push_ineq(n.iter().map(|&x| int(x)).collect(), int(*o));
    }
    s
}

#[test]
fn dual_description_matches_brute_force_on_fixed_cases() {
    let cases: Vec<LinearSystem> = vec![
        sys(2, &[(&[1, 0], 0), (&[-1, 0], -1), (&[0, 1], 0), (&[0, -1], -1)]),
        sys(2, &[(&[1, 0], 1), (&[0, 1], 0), (&[1, -1], 0)]),
        sys(3, &[(&[1, 0, 0], 0), (&[0, 1, 0], 0), (&[0, 0, 1], 0), (&[1, 1, 1], 1)]),
        sys(2, &[(&[1, 2], -3), (&[-2, 1], -4), (&[0, -1], -5)]),
    ];
    for s in cases {
        let p = Polyhedron::from_hrep(&s).unwrap();
        let mut expect_vertices = oracle::brute_force_vertices(&s);
        expect_vertices.sort();
        assert_eq!(p.vertices(), &expect_vertices[..], "vertices for {s:?}");
        let expect_rays = oracle::brute_force_extreme_rays(&s);
        assert_eq!(p.rays(), &expect_rays[..], "rays for {s:?}");
    }
}

#[test]
fn dual_description_matches_brute_force_on_random_polyhedra() {
    let mut r = gen::rng(17);
    for case in 0..40 {
        let dim = if case % 2 == 0 { 2 } else { 3 };
        let p = gen::pointed_unbounded(&mut r, dim, 4, 2);
        let s = p.hrep();
        let mut expect_vertices = oracle::brute_force_vertices(&s);
        expect_vertices.sort();
        assert_eq!(p.vertices(), &expect_vertices[..], "case {case}");
        let expect_rays = oracle::brute_force_extreme_rays(&s);
        assert_eq!(p.rays(), &expect_rays[..], "case {case}");
    }
}

#[test]
fn face_enumeration_matches_brute_force() {
    let mut r = gen::rng(23);
    for case in 0..25 {
        let p = if case % 3 == 0 {
            gen::pointed_unbounded(&mut r, 2, 3, 2)
        } else {
            gen::polytope(&mut r, 2, 3, &int(1), 5)
        };
        let mine: Vec<Polyhedron> = p.faces().iter().map(|f| f.polyhedron.clone()).collect();
        let expect = oracle::brute_force_faces(&p);
        assert_eq!(mine, expect, "case {case}: {p:?}");
    }
}

#[test]
fn minkowski_sum_matches_oracle() {
    let mut r = gen::rng(31);
    for case in 0..40 {
        let dim = if case % 2 == 0 { 2 } else { 3 };
        let a = gen::polytope(&mut r, dim, 4, &int(1), 4);
        let b = if case % 3 == 0 {
            gen::pointed_unbounded(&mut r, dim, 3, 2)
        } else {
            gen::polytope(&mut r, dim, 4, &int(1), 4)
        };
        let sum = a.minkowski_sum(&b).unwrap();
        assert_eq!(sum, oracle::minkowski_oracle(&a, &b), "case {case}");
    }
}

#[test]
fn recession_of_sum_is_sum_of_recessions() {
    let mut r = gen::rng(37);
    for _ in 0..30 {
        let a = gen::pointed_unbounded(&mut r, 2, 3, 1);
        let b = gen::pointed_unbounded(&mut r, 2, 3, 2);
        let sum = a.minkowski_sum(&b).unwrap();
        let rec_sum = sum.recession_cone();
        let sum_rec = a
            .recession_cone()
            .minkowski_sum(&b.recession_cone())
            .unwrap();
        assert_eq!(rec_sum, sum_rec);
    }
}

#[test]
fn projection_matches_fourier_motzkin() {
    // project the quadrant and the unit square modulo the x-axis ray
    let quadrant = Polyhedron::cone(2, &[vec![int(1), int(0)], vec![int(0), int(1)]]);
    let x_ray = Polyhedron::ray(&[int(1), int(0)]);
    let (_, image) = quotient::project_mod_span(&quadrant, &x_ray).unwrap();
    let fm = oracle::fourier_motzkin_project(&quadrant.hrep(), &[1]);
    let fm_poly = Polyhedron::from_hrep(&fm).unwrap();
    // the deterministic quotient coordinate may flip orientation; compare up
    // to the sign of the single coordinate
    let flipped = {
        let verts: Vec<Vec<Scalar>> = fm_poly.vertices().iter().map(|v| linalg::neg(v)).collect();
        let rays: Vec<Vec<Scalar>> = fm_poly.rays().iter().map(|v| linalg::neg(v)).collect();
        Polyhedron::from_generators(1, &verts, &rays, fm_poly.lineality()).unwrap()
    };
    assert!(image == fm_poly || image == flipped);

    let square = Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1))]);
    let (_, image) = quotient::project_mod_span(&square, &x_ray).unwrap();
    let fm = oracle::fourier_motzkin_project(&square.hrep(), &[1]);
    let fm_poly = Polyhedron::from_hrep(&fm).unwrap();
    let flipped = {
        let verts: Vec<Vec<Scalar>> = fm_poly.vertices().iter().map(|v| linalg::neg(v)).collect();
        Polyhedron::from_generators(1, &verts, &[], &[]).unwrap()
    };
    assert!(image == fm_poly || image == flipped);
}

#[test]
fn random_projections_match_fourier_motzkin_up_to_unimodular_change() {
    // for random polyhedra and coordinate-subspace quotients the comparison
    // is exact modulo the deterministic coordinate chart; project modulo
    // span(e_k) and compare against eliminating coordinate k
    let mut r = gen::rng(41);
    for case in 0..20 {
        let p = gen::polytope(&mut r, 3, 3, &int(1), 5);
        let k = case % 3;
        let axis = Polyhedron::ray(&linalg::unit(3, k));
        let (map, image) = quotient::project_mod_span(&p, &axis).unwrap();
        let keep: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let fm = oracle::fourier_motzkin_project(&p.hrep(), &keep);
        let fm_poly = Polyhedron::from_hrep(&fm).unwrap();
        // the chart maps e_keep to a lattice basis of the target; compare via
        // point sampling both ways
        for v in fm_poly.vertices() {
            // lift the eliminated coordinate back: (v with 0 at k) is in p +
            // span(e_k), so its image must be in `image`
            let mut full = vec![int(0); 3];
            for (j, &c) in keep.iter().enumerate() {
                full[c] = v[j].clone();
            }
            // find some lift within p along e_k: use the FM guarantee that a
            // preimage exists; search integer offsets in a small range
            let image_pt = map.apply(&full);
            assert!(
                image.contains_point(&image_pt),
                "case {case}: projected vertex escaped"
            );
        }
        for v in image.vertices() {
            let lifted = map.lift(v);
            let mut dropped: Vec<Scalar> = Vec::new();
            for &c in &keep {
                dropped.push(lifted[c].clone());
            }
            assert!(
                fm_poly.contains_point(&dropped) || {
                    // the lift may differ from the FM chart by a shift along
                    // e_k, which the FM projection has eliminated; membership
                    // of the dropped coordinates is exactly the FM statement
                    false
                },
                "case {case}: quotient vertex escaped the FM projection"
            );
        }
    }
}
