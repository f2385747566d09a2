//! End-to-end library pipelines on the worked examples and random instances:
//! the six-cell half-grid complex, toric closures, and completion contracts.

use polyfan::classes::ClassSpec;
use polyfan::completion::{
    complete_complex_finite, complete_fan, complete_locally_finite, polytopal_completion,
    zonotopal_completion,
};
use polyfan::complex::{Complex, Fan};
use polyfan::lazy::{cells_in_window, locate_point, validate_window, Window};
use polyfan::num::{frac, int};
use polyfan::quotient::{face_image_in_quotient, project_mod_span};
use polyfan::toric::{closure_in_toric, ToricSpace};
use polyfan::Polyhedron;
use polyfan_oracle::gen;

/// The six-cell configuration: a strip between x=0 and x=1 with half-planes
/// on both sides, lower half preserved, upper half to be subdivided.
fn six_cell_complexes() -> (Complex, Complex) {
    let cell = |ineqs: &[(&[i64], i64)]| {
        let mut s = polyfan::LinearSystem::new(2);
        for (n, o) in ineqs {
            s.push_ineq(n.iter().map(|&x| int(x)).collect(), int(*o));
        }
        Polyhedron::from_hrep(&s).unwrap()
    };
    let p1 = cell(&[(&[1, 0], 1), (&[0, 1], 0)]);
    let p2 = cell(&[(&[1, 0], 0), (&[-1, 0], -1), (&[0, 1], 0)]);
    let p3 = cell(&[(&[-1, 0], 0), (&[0, 1], 0)]);
    let p4 = cell(&[(&[-1, 0], 0), (&[0, -1], 0)]);
    let p5 = cell(&[(&[1, 0], 0), (&[-1, 0], -1), (&[0, -1], 0)]);
    let p6 = cell(&[(&[1, 0], 1), (&[0, -1], 0)]);
    let pi = Complex::validate(vec![p1, p2, p3, p4.clone(), p5.clone(), p6.clone()]).unwrap();
    let phi = Complex::validate(vec![p4, p5, p6]).unwrap();
    (pi, phi)
}

#[test]
fn six_cell_completion_recovers_the_grid() {
    let (pi, phi) = six_cell_complexes();
    let sigma = phi.recession_fan().unwrap();
    let report = complete_complex_finite(&phi, &sigma, &ClassSpec::GammaRational(int(1))).unwrap();
    assert!(report.preserved);
    // the natural completion re-creates the three upper cells
    assert_eq!(report.output.maximal_cells(), pi.maximal_cells());
}

#[test]
fn six_cell_seed_windows_validate() {
    let (_, phi) = six_cell_complexes();
    let sigma = phi.recession_fan().unwrap();
    let report = complete_locally_finite(&phi, &sigma, &ClassSpec::GammaRational(int(1))).unwrap();
    let seed = report.output;
    // three recession cones leave the fan: both upper quadrants and the
    // upward ray
    assert_eq!(seed.ray_choices().len(), 3);
    for window in [
        Window::from_box(&[(int(-3), int(3)), (int(-3), int(3))]),
        Window::from_box(&[(int(0), int(4)), (int(0), int(4))]),
        Window::from_box(&[(int(0), int(1)), (int(1), int(3))]),
    ] {
        let report = validate_window(&seed, &window).unwrap();
        for check in &report.checks {
            assert!(check.pass, "{}: {:?}", check.name, check.witness);
        }
        // recession cones of all window cells lie in sigma
        for cell in &report.cells {
            assert!(seed
                .target_fan()
                .contains_cone(&cell.geometry.recession_cone()));
        }
    }
}

#[test]
fn six_cell_point_location_consistent_with_windows() {
    let (_, phi) = six_cell_complexes();
    let sigma = phi.recession_fan().unwrap();
    let seed = complete_locally_finite(&phi, &sigma, &ClassSpec::GammaRational(int(1)))
        .unwrap()
        .output;
    let window = Window::from_box(&[(int(-2), int(2)), (int(-2), int(2))]);
    let cells = cells_in_window(&seed, &window).unwrap();
    let points = [
        [frac(1, 2), frac(1, 2)],
        [frac(-3, 2), frac(1, 2)],
        [int(0), int(0)],
        [frac(1, 2), frac(-1, 2)],
        [frac(3, 2), frac(3, 2)],
    ];
    for x in &points {
        let id = locate_point(&seed, x).unwrap();
        let geom = seed.cell_geometry(&id);
        assert!(geom.contains_point(x));
        // the located cell is minimal: no proper face contains the point
        for f in geom.proper_faces() {
            assert!(!f.polyhedron.contains_point(x));
        }
        assert!(cells.iter().any(|c| c.id == id), "{x:?} not in window list");
    }
}

#[test]
fn toric_closure_invariants_on_random_pairs() {
    let mut r = gen::rng(71);
    let mut tested = 0;
    while tested < 40 {
        let p = gen::pointed_unbounded(&mut r, 2, 3, 2);
        let rec = p.recession_cone();
        if rec.is_zero_cone() {
            continue;
        }
        // Σ: a random subfan of a completion of the recession fan's faces
        let rec_fan = Fan::face_fan(&rec).unwrap();
        let complete = complete_fan(&rec_fan).unwrap();
        let kept: Vec<Polyhedron> = complete
            .maximal_cones()
            .iter()
            .filter(|_| gen::rng((tested * 13) as u64).clone().random_bool(0.7))
            .cloned()
            .collect();
        let sigma = if kept.is_empty() {
            Fan::zero_fan(2)
        } else {
            Fan::validate(kept).unwrap()
        };
        let space = ToricSpace::new(sigma.clone());
        let Ok(pairs) = closure_in_toric(&p, &space) else {
            continue;
        };
        tested += 1;
        for (tau, piece) in &pairs {
            // rec(π(P)) = π(rec P)
            let (map, rec_image) = project_mod_span(&rec, tau).unwrap();
            assert_eq!(piece.recession_cone(), rec_image);
            let _ = map;
            // π(F) is a face of π(P) for every face with τ ≤ rec F
            for f in p.faces() {
                if f.polyhedron.recession_cone().face_of(tau).is_some() {
                    let img = face_image_in_quotient(&p, f, tau).unwrap();
                    assert!(img.polyhedron.is_face_of(piece));
                }
            }
        }
    }
}

#[test]
fn complete_fan_contract_on_random_fans_dim2() {
    let mut r = gen::rng(83);
    for case in 0..30 {
        let d = gen::fan(&mut r, 2, 3, 0.5);
        let fan = complete_fan(&d).unwrap();
        assert!(fan.is_complete_certificate(), "case {case}");
        for cone in d.maximal_cones() {
            assert!(fan.contains_cone(cone), "case {case}: input cone lost");
        }
    }
}

#[test]
fn complete_fan_contract_on_random_fans_dim3() {
    let mut r = gen::rng(89);
    for case in 0..8 {
        let d = gen::fan(&mut r, 3, 2, 0.4);
        let fan = complete_fan(&d).unwrap();
        assert!(fan.is_complete_certificate(), "case {case}");
        for cone in d.maximal_cones() {
            assert!(fan.contains_cone(cone), "case {case}: input cone lost");
        }
    }
}

#[test]
fn polytopal_completion_windows_are_bounded() {
    let mut r = gen::rng(97);
    for case in 0..4 {
        let phi = gen::grid_square_complex(&mut r, &int(1), 2 + case);
        let report = polytopal_completion(&phi).unwrap();
        assert!(report.preserved);
        let seed = report.output;
        let window = Window::from_box(&[(int(-3), int(4)), (int(-3), int(4))]);
        let wr = validate_window(&seed, &window).unwrap();
        assert!(wr.all_pass(), "case {case}: {:?}", wr.checks);
        for cell in &wr.cells {
            assert!(cell.geometry.is_bounded(), "case {case}");
        }
    }
}

#[test]
fn zonotopal_completion_cells_are_zonotopes() {
    // 2×1 rectangle split into two unit squares
    let a = Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1))]);
    let b = Polyhedron::axis_box(&[(int(1), int(2)), (int(0), int(1))]);
    let phi = Complex::validate(vec![a.clone(), b.clone()]).unwrap();
    let report = zonotopal_completion(&phi).unwrap();
    assert!(report.preserved);
    let seed = report.output;
    let window = Window::from_box(&[(int(-2), int(3)), (int(-2), int(2))]);
    let wr = validate_window(&seed, &window).unwrap();
    assert!(wr.all_pass(), "{:?}", wr.checks);
    for cell in &wr.cells {
        assert!(cell.geometry.is_bounded());
        assert!(ClassSpec::Zonotopal.is_member(&cell.geometry));
    }
    // originals preserved in the window list
    let geoms: Vec<Polyhedron> = wr.cells.iter().map(|c| c.geometry.clone()).collect();
    assert!(geoms.contains(&a));
    assert!(geoms.contains(&b));
}

#[test]
fn cone_over_complex_validates_on_six_cells() {
    let (_, phi) = six_cell_complexes();
    let sigma = phi.recession_fan().unwrap();
    let lifted = polyfan::complex::cone_over_complex(&phi, &sigma).unwrap();
    // three 3-dimensional cones over the cells plus boundary cones at height 0
    let top: Vec<&Polyhedron> = lifted
        .maximal_cones()
        .iter()
        .filter(|c| c.dim() == 3)
        .collect();
    assert_eq!(top.len(), 3);
    let round_trip = polyfan::complex::height_slice_one(&lifted).unwrap();
    assert_eq!(round_trip.maximal_cells(), phi.maximal_cells());
}

use rand::Rng;

#[test]
fn polytopal_completion_of_triangle() {
    let tri = Polyhedron::from_generators(
        2,
        &[vec![int(0), int(0)], vec![int(2), int(0)], vec![int(0), int(2)]],
        &[],
        &[],
    )
    .unwrap();
    let phi = Complex::validate(vec![tri.clone()]).unwrap();
    let report = polytopal_completion(&phi).unwrap();
    assert!(report.preserved);
    let seed = report.output;
    let window = Window::from_box(&[(int(-2), int(3)), (int(-2), int(3))]);
    let wr = validate_window(&seed, &window).unwrap();
    assert!(wr.all_pass(), "{:?}", wr.checks);
    for cell in &wr.cells {
        assert!(cell.geometry.is_bounded());
    }
    assert!(wr.cells.iter().any(|c| c.geometry == tri));
}

#[test]
fn six_cell_recession_fan_shape() {
    let (pi, _) = six_cell_complexes();
    let fan = pi.recession_fan().unwrap();
    // maximal cones: all four quadrants (the strips' vertical rays are faces)
    assert_eq!(fan.maximal_cones().len(), 4);
    assert!(fan.is_complete_certificate());
    let up = Polyhedron::ray(&[int(0), int(1)]);
    assert!(fan.contains_cone(&up));
}

#[test]
fn face_image_of_wedge_edge_is_quotient_vertex() {
    // P = {x >= 1, 0 <= y <= x}, F the upper edge, τ = rec F = ray (1,1):
    // the image of F in W/span(τ) is a vertex of the image of P
    let mut s = polyfan::LinearSystem::new(2);
    s.push_ineq(vec![int(1), int(0)], int(1));
    s.push_ineq(vec![int(0), int(1)], int(0));
    s.push_ineq(vec![int(1), int(-1)], int(0));
    let p = Polyhedron::from_hrep(&s).unwrap();
    let diag = Polyhedron::ray(&[int(1), int(1)]);
    let upper_edge = p
        .faces()
        .iter()
        .find(|f| f.polyhedron.dim() == 1 && f.polyhedron.recession_cone() == diag)
        .cloned()
        .unwrap();
    let img = face_image_in_quotient(&p, &upper_edge, &diag).unwrap();
    assert_eq!(img.polyhedron.dim(), 0);
    let (_, p_img) = project_mod_span(&p, &diag).unwrap();
    assert!(img.polyhedron.is_face_of(&p_img));
}

#[test]
fn trivial_seed_generates_the_input() {
    let (_, phi) = six_cell_complexes();
    let sigma = phi.recession_fan().unwrap();
    let seed = polyfan::subdivision::build_seed(&phi, &phi, &sigma, &ClassSpec::All).unwrap();
    assert!(seed.ray_choices().is_empty());
    let window = Window::from_box(&[(int(-2), int(2)), (int(-2), int(-1))]);
    let cells = cells_in_window(&seed, &window).unwrap();
    for c in &cells {
        assert!(c.id.chain.is_empty());
        assert!(phi.contains_cell(&c.geometry));
    }
}

#[test]
fn subdivision_window_covers_the_polyhedron() {
    // {Q + R} windows cover P ∩ K exactly
    let quadrant = Polyhedron::cone(2, &[vec![int(1), int(0)], vec![int(0), int(1)]]);
    let boundary = Complex::validate(vec![
        Polyhedron::from_generators(2, &[vec![int(0), int(0)]], &[vec![int(1), int(0)]], &[])
            .unwrap(),
        Polyhedron::from_generators(2, &[vec![int(0), int(0)]], &[vec![int(0), int(1)]], &[])
            .unwrap(),
    ])
    .unwrap();
    let rho = Polyhedron::ray(&[int(1), int(1)]);
    let ladder = polyfan::classes::RayLadder::with_step(vec![int(1), int(1)], int(1));
    let cells =
        polyfan::subdivision::subdivide_polyhedron(&quadrant, &rho, &ladder, &boundary, 6).unwrap();
    let window = Polyhedron::axis_box(&[(int(0), int(3)), (int(0), int(3))]);
    let clipped: Vec<Polyhedron> = cells
        .iter()
        .filter_map(|c| c.intersect(&window))
        .collect();
    assert!(polyfan::arrangement::coverage_witness(&window, &clipped).is_none());
}

#[test]
fn polytopal_completion_works_in_three_dimensions() {
    // the cone space is 4-dimensional here, exercising the validate-or-fail
    // regime of fan completion
    let cube = Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1)), (int(0), int(1))]);
    let phi = Complex::validate(vec![cube.clone()]).unwrap();
    let report = polytopal_completion(&phi).unwrap();
    assert!(report.preserved);
    let seed = report.output;
    let window = Window::from_box(&[
        (frac(-1, 2), frac(1, 2)),
        (frac(-1, 2), frac(1, 2)),
        (frac(1, 4), frac(3, 4)),
    ]);
    let wr = validate_window(&seed, &window).unwrap();
    assert!(wr.all_pass(), "{:?}", wr.checks);
    for cell in &wr.cells {
        assert!(cell.geometry.is_bounded());
    }
}
