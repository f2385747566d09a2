//! Bundled example inputs: the quadrant completion, the six-cell half-grid,
//! and the zonotopal square.

use polyfan::complex::Complex;
use polyfan::linsys::LinearSystem;
use polyfan::num::int;
use polyfan::Polyhedron;

fn cell(ineqs: &[(&[i64], i64)]) -> Polyhedron {
    let dim = ineqs[0].0.len();
    let mut s = LinearSystem::new(dim);
    for (n, o) in ineqs {
        s.push_ineq(n.iter().map(|&x| int(x)).collect(), int(*o));
    }
    Polyhedron::from_hrep(&s).expect("example cells are nonempty")
}

/// Three quadrants of the plane; the missing first quadrant is what the
/// completion fills with a staircase.
pub fn quadrants_input() -> Complex {
    let p2 = cell(&[(&[-1, 0], 0), (&[0, 1], 0)]);
    let p3 = cell(&[(&[-1, 0], 0), (&[0, -1], 0)]);
    let p4 = cell(&[(&[1, 0], 0), (&[0, -1], 0)]);
    Complex::validate(vec![p2, p3, p4]).expect("quadrant complex validates")
}

/// The lower half of a three-column grid: two half-planes and the strip
/// between them, all below the x-axis.
pub fn half_grid_input() -> Complex {
    let p4 = cell(&[(&[-1, 0], 0), (&[0, -1], 0)]);
    let p5 = cell(&[(&[1, 0], 0), (&[-1, 0], -1), (&[0, -1], 0)]);
    let p6 = cell(&[(&[1, 0], 1), (&[0, -1], 0)]);
    Complex::validate(vec![p4, p5, p6]).expect("half grid validates")
}

/// The faces of the square [-1,1]^2.
pub fn square_input() -> Complex {
    let square = Polyhedron::axis_box(&[(int(-1), int(1)), (int(-1), int(1))]);
    Complex::validate(vec![square]).expect("square validates")
}

/// Named example inputs as (complex, suggested class) pairs.
pub fn by_name(name: &str) -> Option<(Complex, &'static str)> {
    match name {
        "one" => Some((quadrants_input(), "gamma:1")),
        "three" => Some((half_grid_input(), "gamma:1")),
        "square-zonotopal" => Some((square_input(), "zonotopal")),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_examples_validate() {
        for name in ["one", "three", "square-zonotopal"] {
            let (complex, _) = by_name(name).unwrap();
            assert!(!complex.maximal_cells().is_empty());
            assert!(complex.recession_fan().is_ok());
        }
        assert!(by_name("unknown").is_none());
    }
}
