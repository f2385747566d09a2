//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Every check is exact; the only tolerances are the stated
//! per-case runtime limits. Run with `cargo test --test acceptance --
//! --nocapture` to see the lines.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use num_traits::Zero;
use rand::Rng;

use polyfan::classes::{relint_ray, ClassSpec};
use polyfan::completion::{complete_fan, complete_locally_finite, polytopal_completion, zonotopal_completion};
use polyfan::complex::{Complex, Fan};
use polyfan::lazy::{cells_in_window, validate_window, Window};
use polyfan::linalg;
use polyfan::num::{frac, int, primitive_integer, Scalar};
use polyfan::quotient::{face_image_in_quotient, project_mod_span};
use polyfan::subdivision::{build_seed, decompose_by_ray};
use polyfan::toric::{closure_in_toric, ToricSpace};
use polyfan::Polyhedron;
use polyfan_cli::schema::{Document, ParseMode, Payload};
use polyfan_oracle as oracle;
use polyfan_oracle::gen;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polyfan"))
}

fn tempdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("polyfan-acceptance-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn verdict(criterion: u32, name: &str, pass: bool) {
    println!(
        "ACCEPTANCE {criterion} ({name}): {}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {criterion} ({name}) failed");
}

fn load_seed(path: &PathBuf) -> polyfan::SubdivisionSeed {
    let text = std::fs::read_to_string(path).unwrap();
    let doc = Document::from_json(&text, ParseMode::Strict).unwrap();
    match &doc.payload {
        Payload::Seed(dto) => polyfan_cli::convert::seed_from_dto(dto, ParseMode::Strict).unwrap(),
        _ => panic!("expected seed document"),
    }
}

/// Criterion 1: the quadrant example end to end through the CLI, with the
/// window cell set checked against the brute-force chain enumerator.
#[test]
fn criterion_1_quadrant_example_end_to_end() {
    let start = Instant::now();
    let dir = tempdir("c1");
    let out = bin().args(["examples", "one", "-o"]).arg(&dir).output().unwrap();
    assert!(out.status.success());
    let seed_path = dir.join("seed.json");
    let out = bin()
        .args(["complete", "--class", "gamma:1", "--sigma"])
        .arg(dir.join("one-sigma.json"))
        .arg(dir.join("one-complex.json"))
        .arg("-o")
        .arg(&seed_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = bin()
        .args(["check-window", "--window", "-3:3,-3:3"])
        .arg(&seed_path)
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let six_checks_pass = out.status.success() && stdout.matches(": pass").count() >= 6;

    // oracle equality of the window cell set
    let seed = load_seed(&seed_path);
    let window = Window::from_box(&[(int(-3), int(3)), (int(-3), int(3))]);
    let mine = cells_in_window(&seed, &window).unwrap();
    let oracle_cells = oracle::brute_force_window_cells(&seed, window.region(), 16);
    let same_sets = mine.len() == oracle_cells.len()
        && mine
            .iter()
            .zip(&oracle_cells)
            .all(|(a, (id, geom))| &a.id == id && &a.geometry == geom);

    let in_time = start.elapsed().as_secs_f64() < 5.0;
    verdict(
        1,
        "quadrant example end-to-end",
        six_checks_pass && same_sets && in_time,
    );
}

/// Criterion 2: the six-cell example end to end; recession cones of all
/// window cells lie in the target fan and exhaust it on the radius-4 window.
#[test]
fn criterion_2_six_cell_example_end_to_end() {
    let start = Instant::now();
    let dir = tempdir("c2");
    bin().args(["examples", "three", "-o"]).arg(&dir).output().unwrap();
    let seed_path = dir.join("seed.json");
    let out = bin()
        .args(["complete", "--class", "gamma:1", "--sigma"])
        .arg(dir.join("three-sigma.json"))
        .arg(dir.join("three-complex.json"))
        .arg("-o")
        .arg(&seed_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let mut pass = true;
    for w in ["-3:3,-3:3", "0:4,0:4"] {
        let out = bin()
            .args(["check-window", "--window", w])
            .arg(&seed_path)
            .output()
            .unwrap();
        pass &= out.status.success();
    }

    let seed = load_seed(&seed_path);
    let sigma_cones = seed.target_fan().all_cones();
    let big = Window::from_box(&[(int(-4), int(4)), (int(-4), int(4))]);
    let cells = cells_in_window(&seed, &big).unwrap();
    let mut seen: Vec<Polyhedron> = Vec::new();
    for c in &cells {
        let rec = c.geometry.recession_cone();
        pass &= sigma_cones.contains(&rec);
        if !seen.contains(&rec) {
            seen.push(rec);
        }
    }
    seen.sort();
    pass &= seen == sigma_cones;
    let in_time = start.elapsed().as_secs_f64() < 10.0;
    verdict(2, "six-cell example end-to-end", pass && in_time);
}

/// Criterion 3: 50 random half-integer lattice complexes, target fans their
/// completed recession fans; every window check plus strict lattice
/// rationality of every cell.
#[test]
fn criterion_3_lattice_rational_completions() {
    let step = frac(1, 2);
    let class = ClassSpec::GammaRational(step.clone());
    let mut r = gen::rng(1001);
    let mut pass = true;
    for case in 0..50 {
        let unbounded = case % 3 == 0;
        let squares = if unbounded { 1 + case % 3 } else { 1 + case % 6 };
        let phi = gen::gamma_complex(&mut r, &step, squares, unbounded);
        assert!(phi.maximal_cells().len() <= 6);
        let sigma = complete_fan(&phi.recession_fan().unwrap()).unwrap();
        let report = match complete_locally_finite(&phi, &sigma, &class) {
            Ok(rep) => rep,
            Err(e) => {
                eprintln!("case {case}: completion failed: {e}");
                pass = false;
                continue;
            }
        };
        let seed = report.output;
        for _ in 0..3 {
            let lo_x = frac(r.random_range(-8..0), 2);
            let lo_y = frac(r.random_range(-8..0), 2);
            let side = frac(r.random_range(3..8), 2);
            let window = Window::from_box(&[
                (lo_x.clone(), &lo_x + &side),
                (lo_y.clone(), &lo_y + &side),
            ]);
            let wr = validate_window(&seed, &window).unwrap();
            if !wr.all_pass() {
                eprintln!("case {case}: window checks failed: {:?}", wr.checks);
                pass = false;
            }
            for cell in &wr.cells {
                // normals primitive integer, offsets in (1/2)Z, on every row
                for c in cell.geometry.equalities().iter().chain(cell.geometry.inequalities()) {
                    let prim = primitive_integer(&c.normal);
                    let as_scalars: Vec<Scalar> =
                        prim.iter().map(|x| Scalar::from_integer(x.clone())).collect();
                    if as_scalars != c.normal && linalg::neg(&as_scalars) != c.normal {
                        eprintln!("case {case}: non-primitive normal {:?}", c.normal);
                        pass = false;
                    }
                    if !polyfan::num::is_multiple_of(&c.offset, &step) {
                        eprintln!("case {case}: offset {} outside lattice", c.offset);
                        pass = false;
                    }
                }
                if !class.is_member(&cell.geometry) {
                    eprintln!("case {case}: class violation");
                    pass = false;
                }
            }
        }
    }
    verdict(3, "lattice-rational completions, 50 cases", pass);
}

/// Criterion 4: 50 random polytopal complexes; windows contain only bounded
/// cells, originals preserved, each case within 30 seconds.
#[test]
fn criterion_4_polytopal_completions() {
    let mut r = gen::rng(2002);
    let mut pass = true;
    for case in 0..50 {
        let t0 = Instant::now();
        let phi = gen::grid_square_complex(&mut r, &int(1), 1 + case % 5);
        let report = match polytopal_completion(&phi) {
            Ok(rep) => rep,
            Err(e) => {
                eprintln!("case {case}: completion failed: {e}");
                pass = false;
                continue;
            }
        };
        pass &= report.preserved;
        let seed = report.output;
        for _ in 0..2 {
            let lo_x = int(r.random_range(-5..1));
            let lo_y = int(r.random_range(-5..1));
            let side = int(r.random_range(2..6));
            let window = Window::from_box(&[
                (lo_x.clone(), &lo_x + &side),
                (lo_y.clone(), &lo_y + &side),
            ]);
            let wr = validate_window(&seed, &window).unwrap();
            if !wr.all_pass() {
                eprintln!("case {case}: window checks failed: {:?}", wr.checks);
                pass = false;
            }
            for cell in &wr.cells {
                if !cell.geometry.is_bounded() {
                    eprintln!("case {case}: unbounded cell in polytopal completion");
                    pass = false;
                }
            }
            // originals preserved in every window they meet
            for m in phi.maximal_cells() {
                if m.intersect(window.region()).is_some()
                    && !wr.cells.iter().any(|c| &c.geometry == m)
                {
                    eprintln!("case {case}: original cell missing from window");
                    pass = false;
                }
            }
        }
        let elapsed = t0.elapsed().as_secs_f64();
        if elapsed >= 30.0 {
            eprintln!("case {case}: took {elapsed:.1}s");
            pass = false;
        }
    }
    verdict(4, "polytopal completions, 50 cases", pass);
}

/// Criterion 5: zonotopal completions of the square, the split rectangle,
/// and a non-convex three-square complex; every window cell is a zonotope.
#[test]
fn criterion_5_zonotopal_completions() {
    let square = Complex::validate(vec![Polyhedron::axis_box(&[
        (int(-1), int(1)),
        (int(-1), int(1)),
    ])])
    .unwrap();
    let rectangle = Complex::validate(vec![
        Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1))]),
        Polyhedron::axis_box(&[(int(1), int(2)), (int(0), int(1))]),
    ])
    .unwrap();
    let l_shape = Complex::validate(vec![
        Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1))]),
        Polyhedron::axis_box(&[(int(0), int(1)), (int(1), int(2))]),
        Polyhedron::axis_box(&[(int(1), int(2)), (int(0), int(1))]),
    ])
    .unwrap();

    let mut pass = true;
    for (name, phi) in [("square", square), ("rectangle", rectangle), ("l-shape", l_shape)] {
        let report = match zonotopal_completion(&phi) {
            Ok(rep) => rep,
            Err(e) => {
                eprintln!("{name}: completion failed: {e}");
                pass = false;
                continue;
            }
        };
        pass &= report.preserved;
        let seed = report.output;
        let window = Window::from_box(&[(int(-2), int(3)), (int(-2), int(3))]);
        let wr = validate_window(&seed, &window).unwrap();
        if !wr.all_pass() {
            eprintln!("{name}: window checks failed: {:?}", wr.checks);
            pass = false;
        }
        for cell in &wr.cells {
            if !ClassSpec::Zonotopal.is_member(&cell.geometry) || !cell.geometry.is_bounded() {
                eprintln!("{name}: non-zonotopal window cell {:?}", cell.geometry);
                pass = false;
            }
        }
        for m in phi.maximal_cells() {
            if !wr.cells.iter().any(|c| &c.geometry == m) {
                eprintln!("{name}: input cell missing");
                pass = false;
            }
        }
    }
    verdict(5, "zonotopal completions", pass);
}

/// Criterion 6: 1000 random ray-boundary decompositions in dimensions 2 and
/// 3, with exactness and uniqueness against exhaustive face search.
#[test]
fn criterion_6_ray_decomposition_oracle() {
    let mut r = gen::rng(3003);
    let mut pass = true;
    let mut done = 0;
    while done < 1000 {
        let dim = if done % 2 == 0 { 2 } else { 3 };
        let p = gen::pointed_unbounded(&mut r, dim, 3, dim);
        let rec = p.recession_cone();
        if rec.is_zero_cone() {
            continue;
        }
        let rho = relint_ray(&rec, &ClassSpec::All).unwrap();
        let w = {
            let verts = p.vertices();
            let mut w = verts[r.random_range(0..verts.len())].clone();
            for ray in p.rays() {
                let c = frac(r.random_range(0..=4), r.random_range(1..=2));
                w = linalg::add(&w, &linalg::scale(&c, ray));
            }
            w
        };
        done += 1;
        let (b, rr) = decompose_by_ray(&p, &rho, &w).unwrap();
        if linalg::add(&b, &rr) != w {
            eprintln!("case {done}: b + r != w");
            pass = false;
        }
        let b_face = p
            .faces()
            .iter()
            .filter(|f| f.polyhedron.contains_point(&b))
            .min_by_key(|f| f.polyhedron.dim())
            .unwrap()
            .polyhedron
            .clone();
        if b_face.recession_cone() == rec {
            eprintln!("case {done}: boundary point not on a proper-recession face");
            pass = false;
        }
        // uniqueness: the parameter of the decomposition is the only value
        // any boundary face admits
        let v = &rho.rays()[0];
        let t0 = rr
            .iter()
            .zip(v)
            .find(|(_, vi)| !vi.is_zero())
            .map(|(ri, vi)| ri / vi)
            .unwrap_or_else(|| int(0));
        for f in p.boundary_faces_with_proper_recession() {
            if let Some((lo, hi)) = oracle::ray_parameter_interval(&f.polyhedron, &w, v) {
                if lo != t0 || !(hi.is_none() || hi == Some(t0.clone())) {
                    eprintln!("case {done}: alternative decomposition interval");
                    pass = false;
                }
            }
        }
    }
    verdict(6, "ray decomposition, 1000 cases", pass);
}

/// Criterion 7: fan completion contract on 200 planar and 100 spatial random
/// fans; input preserved verbatim, validated, facet-matching certificate,
/// spatial cases within 10 seconds each.
#[test]
fn criterion_7_fan_completion_contract() {
    let mut pass = true;
    let mut r = gen::rng(4004);
    for case in 0..200 {
        let d = gen::fan(&mut r, 2, 1 + case % 4, 0.5);
        match complete_fan(&d) {
            Ok(fan) => {
                pass &= fan.is_complete_certificate();
                for cone in d.maximal_cones() {
                    pass &= fan.contains_cone(cone);
                }
            }
            Err(e) => {
                eprintln!("planar case {case}: {e}");
                pass = false;
            }
        }
    }
    let mut r = gen::rng(4005);
    for case in 0..100 {
        let d = gen::fan(&mut r, 3, 1 + case % 3, 0.4);
        let t0 = Instant::now();
        match complete_fan(&d) {
            Ok(fan) => {
                if !fan.is_complete_certificate() {
                    eprintln!("spatial case {case}: certificate failed");
                    pass = false;
                }
                for cone in d.maximal_cones() {
                    if !fan.contains_cone(cone) {
                        eprintln!("spatial case {case}: input cone lost");
                        pass = false;
                    }
                }
            }
            Err(e) => {
                eprintln!("spatial case {case}: {e}");
                pass = false;
            }
        }
        let elapsed = t0.elapsed().as_secs_f64();
        if elapsed >= 10.0 {
            eprintln!("spatial case {case}: took {elapsed:.1}s");
            pass = false;
        }
    }
    verdict(7, "fan completion, 200 planar + 100 spatial", pass);
}

/// Criterion 8: toric closure formula on 200 random pairs: recession
/// commutes with every stratum projection and faces map to faces.
#[test]
fn criterion_8_toric_closure_formula() {
    let mut r = gen::rng(5005);
    let mut pass = true;
    let mut done = 0;
    while done < 200 {
        let dim = if done % 4 == 3 { 3 } else { 2 };
        let p = gen::pointed_unbounded(&mut r, dim, 3, dim - 1 + done % 2);
        let rec = p.recession_cone();
        if rec.is_zero_cone() {
            continue;
        }
        // Σ: a subfan of a completion of Face(rec P), so the compatibility
        // hypothesis holds by construction
        let complete = match complete_fan(&Fan::face_fan(&rec).unwrap()) {
            Ok(f) => f,
            Err(_) => continue,
        };
        let kept: Vec<Polyhedron> = complete
            .maximal_cones()
            .iter()
            .filter(|_| r.random_bool(0.6))
            .cloned()
            .collect();
        let sigma = if kept.is_empty() {
            Fan::zero_fan(dim)
        } else {
            Fan::validate(kept).unwrap()
        };
        let space = ToricSpace::new(sigma);
        let Ok(pairs) = closure_in_toric(&p, &space) else {
            continue;
        };
        done += 1;
        for (tau, piece) in &pairs {
            let (_, rec_image) = project_mod_span(&rec, tau).unwrap();
            if piece.recession_cone() != rec_image {
                eprintln!("case {done}: recession does not commute on stratum {tau:?}");
                pass = false;
            }
            for f in p.faces() {
                if f.polyhedron.recession_cone().face_of(tau).is_some() {
                    match face_image_in_quotient(&p, f, tau) {
                        Ok(img) => {
                            if !img.polyhedron.is_face_of(piece) {
                                eprintln!("case {done}: face image is not a face");
                                pass = false;
                            }
                        }
                        Err(e) => {
                            eprintln!("case {done}: face image failed: {e}");
                            pass = false;
                        }
                    }
                }
            }
        }
    }
    verdict(8, "toric closure formula, 200 cases", pass);
}

/// Criterion 9: thirty injected seed faults — class-breaking ladder steps,
/// boundary rays, and dropped cells — are all caught by the window
/// validator with a concrete witness.
#[test]
fn criterion_9_fault_detection() {
    let mut caught = 0;
    let mut injected = 0;
    let class = ClassSpec::GammaRational(int(1));

    // pool A/C: grid complexes against the zero fan (polytopal-style seeds,
    // every nonzero recession cone carries a ray choice)
    let mut r = gen::rng(6006);
    let mut pool_zero: Vec<polyfan::SubdivisionSeed> = Vec::new();
    while pool_zero.len() < 10 {
        let phi = gen::grid_square_complex(&mut r, &int(1), 1 + pool_zero.len() % 4);
        match complete_locally_finite(&phi, &Fan::zero_fan(2), &class) {
            Ok(rep) if !rep.output.ray_choices().is_empty() => pool_zero.push(rep.output),
            Ok(_) => eprintln!("pool A/C source skipped: no ray choices"),
            Err(e) => eprintln!("pool A/C source skipped: {e}"),
        }
    }

    // pool B: complexes against their own uncompleted recession fans, so
    // unbounded boundary cells stay whole (the worked-example shape)
    let mut pool_fan: Vec<polyfan::SubdivisionSeed> = Vec::new();
    for phi in [
        polyfan_cli::examples::quadrants_input(),
        polyfan_cli::examples::half_grid_input(),
    ] {
        let sigma = phi.recession_fan().unwrap();
        pool_fan.push(complete_locally_finite(&phi, &sigma, &class).unwrap().output);
    }
    while pool_fan.len() < 10 {
        let phi = gen::gamma_complex(&mut r, &int(1), 1 + pool_fan.len() % 3, true);
        let sigma = phi.recession_fan().unwrap();
        match complete_locally_finite(&phi, &sigma, &class) {
            Ok(rep) if corruptible_cone(&rep.output).is_some() => pool_fan.push(rep.output),
            Ok(_) => eprintln!("pool B source skipped: no corruptible cone"),
            Err(e) => eprintln!("pool B source skipped: {e}"),
        }
    }

    // a window centered inside a cell subdivided along the corrupted cone
    let window_on_parent = |seed: &polyfan::SubdivisionSeed, cone: &Polyhedron| -> Window {
        let parent = (0..seed.cells().len())
            .find(|&ci| seed.recession_of(ci) == cone)
            .expect("some cell recedes to the corrupted cone");
        let p = seed.cells()[parent].relint_point();
        Window::from_box(&[
            (&p[0] - int(2), &p[0] + int(2)),
            (&p[1] - int(2), &p[1] + int(2)),
        ])
    };

    // ten class-breaking ladder steps (caught by the class check)
    for seed in &pool_zero {
        let cone = seed.ray_choices()[0].cone.clone();
        let dir = seed.ray_choices()[0].ray_direction.clone();
        let mutated = seed.clone().with_ray_choice(&cone, dir, frac(1, 3)).unwrap();
        injected += 1;
        let window = window_on_parent(seed, &cone);
        let wr = validate_window(&mutated, &window).unwrap();
        if wr.checks.iter().any(|c| !c.pass && c.witness.is_some()) {
            caught += 1;
        } else {
            eprintln!("ladder-step fault went undetected");
        }
    }

    // ten boundary rays not meeting the relative interior (caught by the
    // pairwise-face or coverage check against the unsubdivided boundary
    // cells running parallel to the corrupted ray)
    for seed in &pool_fan {
        let (cone, boundary_ray) =
            corruptible_cone(seed).expect("pool B seeds have a corruptible cone");
        let mutated = seed
            .clone()
            .with_ray_choice(&cone, boundary_ray, int(1))
            .unwrap();
        injected += 1;
        let window = window_on_parent(seed, &cone);
        let detected = match validate_window(&mutated, &window) {
            Ok(wr) => wr.checks.iter().any(|c| !c.pass && c.witness.is_some()),
            // a boundary ray can also break enumeration termination; the
            // budget error is a detection as well
            Err(_) => true,
        };
        if detected {
            caught += 1;
        } else {
            eprintln!("boundary-ray fault went undetected");
        }
    }

    // ten dropped cells (caught by the coverage check)
    for seed in &pool_zero {
        let pi = seed.complex().clone();
        let phi = seed.preserved().clone();
        let Some(drop) = pi
            .maximal_cells()
            .iter()
            .find(|m| !phi.maximal_cells().contains(m))
        else {
            eprintln!("nothing to drop");
            continue;
        };
        let remaining: Vec<Polyhedron> = pi
            .maximal_cells()
            .iter()
            .filter(|m| *m != drop)
            .cloned()
            .collect();
        let Ok(pi_broken) = Complex::validate(remaining) else {
            injected += 1;
            caught += 1;
            continue;
        };
        let Ok(broken_seed) = build_seed(&pi_broken, &phi, seed.target_fan(), seed.class()) else {
            injected += 1;
            caught += 1;
            continue;
        };
        injected += 1;
        let probe = drop.relint_point();
        let window = Window::from_box(&[
            (&probe[0] - int(1), &probe[0] + int(1)),
            (&probe[1] - int(1), &probe[1] + int(1)),
        ]);
        let wr = validate_window(&broken_seed, &window).unwrap();
        if wr.checks.iter().any(|c| !c.pass && c.witness.is_some()) {
            caught += 1;
        } else {
            eprintln!("dropped-cell fault went undetected");
        }
    }

    let pass = injected == 30 && caught == injected;
    if !pass {
        eprintln!("{caught}/{injected} faults detected");
    }
    verdict(9, "fault detection, 30 injected faults", pass);
}

/// A full-dimensional subdivided cone together with an extreme ray whose ray
/// cone lies in the target fan; corrupting the ladder onto that ray clashes
/// with the whole (unsubdivided) boundary cells parallel to it.
fn corruptible_cone(seed: &polyfan::SubdivisionSeed) -> Option<(Polyhedron, Vec<Scalar>)> {
    for choice in seed.ray_choices() {
        if choice.cone.dim() < 2 {
            continue;
        }
        for r in choice.cone.rays() {
            if seed.target_fan().contains_cone(&Polyhedron::ray(r)) {
                return Some((choice.cone.clone(), r.clone()));
            }
        }
    }
    None
}
