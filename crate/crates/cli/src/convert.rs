//! Conversions between schema DTOs and domain values.

use std::str::FromStr;

use polyfan::classes::ClassSpec;
use polyfan::complex::{Complex, Fan};
use polyfan::lazy::Window;
use polyfan::linsys::LinearSystem;
use polyfan::num::Scalar;
use polyfan::subdivision::{build_seed, SubdivisionSeed};
use polyfan::Polyhedron;

use crate::schema::{
    content_hash, format_scalar, format_vector, parse_scalar, parse_vector, ComplexDto, FanDto,
    ParseMode, PolyhedronDto, RayChoiceDto, SchemaError, SeedDto, WindowDto,
};

fn invalid(path: &str, message: impl Into<String>) -> SchemaError {
    SchemaError::Invalid {
        path: path.to_string(),
        message: message.into(),
    }
}

fn geometry(path: &str, message: impl Into<String>) -> SchemaError {
    SchemaError::Geometry {
        path: path.to_string(),
        message: message.into(),
    }
}

pub fn polyhedron_from_dto(
    dto: &PolyhedronDto,
    mode: ParseMode,
    path: &str,
) -> Result<Polyhedron, SchemaError> {
    let mut sys = LinearSystem::new(dto.dim);
    for (i, (n, o)) in dto.inequalities.iter().enumerate() {
        let p = format!("{path}.inequalities[{i}]");
        sys.push_ineq(parse_vector(n, mode, &p)?, parse_scalar(o, mode, &p)?);
    }
    for (i, (n, o)) in dto.equalities.iter().enumerate() {
        let p = format!("{path}.equalities[{i}]");
        sys.push_eq(parse_vector(n, mode, &p)?, parse_scalar(o, mode, &p)?);
    }
    sys.check_dims()
        .map_err(|e| invalid(path, e.to_string()))?;
    Polyhedron::from_hrep(&sys).map_err(|e| geometry(path, e.to_string()))
}

pub fn polyhedron_to_dto(p: &Polyhedron) -> PolyhedronDto {
    PolyhedronDto {
        dim: p.ambient_dim(),
        inequalities: p
            .inequalities()
            .iter()
            .map(|c| (format_vector(&c.normal), format_scalar(&c.offset)))
            .collect(),
        equalities: p
            .equalities()
            .iter()
            .map(|c| (format_vector(&c.normal), format_scalar(&c.offset)))
            .collect(),
        id: Some(content_hash(p)),
        extra: Default::default(),
    }
}

pub fn complex_from_dto(
    dto: &ComplexDto,
    mode: ParseMode,
    path: &str,
) -> Result<Complex, SchemaError> {
    let cells: Result<Vec<Polyhedron>, SchemaError> = dto
        .cells
        .iter()
        .enumerate()
        .map(|(i, c)| polyhedron_from_dto(c, mode, &format!("{path}.cells[{i}]")))
        .collect();
    Complex::validate(cells?).map_err(|e| geometry(path, e.to_string()))
}

pub fn complex_to_dto(c: &Complex) -> ComplexDto {
    ComplexDto {
        ambient_dim: c.ambient_dim(),
        cells: c.maximal_cells().iter().map(polyhedron_to_dto).collect(),
        extra: Default::default(),
    }
}

pub fn fan_from_dto(dto: &FanDto, mode: ParseMode, path: &str) -> Result<Fan, SchemaError> {
    let cones: Result<Vec<Polyhedron>, SchemaError> = dto
        .cones
        .iter()
        .enumerate()
        .map(|(i, c)| polyhedron_from_dto(c, mode, &format!("{path}.cones[{i}]")))
        .collect();
    Fan::validate(cones?).map_err(|e| geometry(path, e.to_string()))
}

pub fn fan_to_dto(f: &Fan) -> FanDto {
    FanDto {
        ambient_dim: f.ambient_dim(),
        cones: f.maximal_cones().iter().map(polyhedron_to_dto).collect(),
        extra: Default::default(),
    }
}

pub fn class_from_str(s: &str) -> Result<ClassSpec, SchemaError> {
    let s = s.trim();
    if s == "all" {
        return Ok(ClassSpec::All);
    }
    if s == "q" {
        return Ok(ClassSpec::QDefinable);
    }
    if s == "zonotopal" {
        return Ok(ClassSpec::Zonotopal);
    }
    if let Some(step) = s.strip_prefix("gamma-vertices:") {
        let g = Scalar::from_str(step)
            .map_err(|e| invalid("class", format!("bad step '{step}': {e}")))?;
        if g <= polyfan::num::zero() {
            return Err(invalid("class", "step must be positive"));
        }
        return Ok(ClassSpec::GammaRationalVertices(g));
    }
    if let Some(step) = s.strip_prefix("gamma:") {
        let g = Scalar::from_str(step)
            .map_err(|e| invalid("class", format!("bad step '{step}': {e}")))?;
        if g <= polyfan::num::zero() {
            return Err(invalid("class", "step must be positive"));
        }
        return Ok(ClassSpec::GammaRational(g));
    }
    Err(invalid(
        "class",
        format!("unknown class '{s}' (expected all | q | zonotopal | gamma:<step> | gamma-vertices:<step>)"),
    ))
}

/// Seeds serialize as the finite data: the completion's cells, hash
/// references for the preserved subcomplex, the target fan, and the ray
/// choices. Rebuilding goes through `build_seed`, then reapplies any ray
/// overrides recorded in the document.
pub fn seed_to_dto(seed: &SubdivisionSeed) -> SeedDto {
    let pi: Vec<PolyhedronDto> = seed
        .complex()
        .maximal_cells()
        .iter()
        .map(polyhedron_to_dto)
        .collect();
    let phi: Vec<String> = seed
        .preserved()
        .maximal_cells()
        .iter()
        .map(content_hash)
        .collect();
    let ray_choices: Vec<RayChoiceDto> = seed
        .ray_choices()
        .iter()
        .map(|rc| RayChoiceDto {
            cone: content_hash(&rc.cone),
            direction: format_vector(&rc.ray_direction),
            step: format_scalar(&rc.step),
            extra: Default::default(),
        })
        .collect();
    SeedDto {
        pi,
        phi,
        sigma: fan_to_dto(seed.target_fan()),
        ray_choices,
        class: seed.class().to_string(),
        extra: Default::default(),
    }
}

pub fn seed_from_dto(dto: &SeedDto, mode: ParseMode) -> Result<SubdivisionSeed, SchemaError> {
    let pi_cells: Result<Vec<Polyhedron>, SchemaError> = dto
        .pi
        .iter()
        .enumerate()
        .map(|(i, c)| polyhedron_from_dto(c, mode, &format!("$.payload.pi[{i}]")))
        .collect();
    let pi_cells = pi_cells?;
    let pi =
        Complex::validate(pi_cells.clone()).map_err(|e| geometry("$.payload.pi", e.to_string()))?;
    // resolve phi references by content hash
    let mut phi_cells = Vec::new();
    for (i, href) in dto.phi.iter().enumerate() {
        let Some(cell) = pi_cells.iter().find(|c| &content_hash(c) == href) else {
            return Err(invalid(
                &format!("$.payload.phi[{i}]"),
                format!("unresolved cell reference '{href}'"),
            ));
        };
        phi_cells.push(cell.clone());
    }
    let phi =
        Complex::validate(phi_cells).map_err(|e| geometry("$.payload.phi", e.to_string()))?;
    let sigma = fan_from_dto(&dto.sigma, mode, "$.payload.sigma")?;
    let class = class_from_str(&dto.class)?;
    let mut seed =
        build_seed(&pi, &phi, &sigma, &class).map_err(|e| geometry("$.payload", e.to_string()))?;
    // apply recorded ray choices (they may override the canonical ones)
    for (i, rc) in dto.ray_choices.iter().enumerate() {
        let path = format!("$.payload.ray_choices[{i}]");
        let direction = parse_vector(&rc.direction, mode, &format!("{path}.direction"))?;
        let step = parse_scalar(&rc.step, mode, &format!("{path}.step"))?;
        let Some(cone) = seed
            .ray_choices()
            .iter()
            .map(|c| c.cone.clone())
            .find(|c| content_hash(c) == rc.cone)
        else {
            return Err(invalid(
                &path,
                format!("cone reference '{}' is not a subdivided cone of this seed", rc.cone),
            ));
        };
        seed = seed
            .with_ray_choice(&cone, direction, step)
            .map_err(|e| geometry(&path, e.to_string()))?;
    }
    Ok(seed)
}

pub fn window_from_dto(
    dto: &WindowDto,
    mode: ParseMode,
    path: &str,
) -> Result<Window, SchemaError> {
    if let Some(intervals) = &dto.intervals {
        let mut bounds = Vec::new();
        for (i, (lo, hi)) in intervals.iter().enumerate() {
            let p = format!("{path}.intervals[{i}]");
            let lo = parse_scalar(lo, mode, &p)?;
            let hi = parse_scalar(hi, mode, &p)?;
            if lo > hi {
                return Err(invalid(&p, "interval bounds out of order"));
            }
            bounds.push((lo, hi));
        }
        return Ok(Window::from_box(&bounds));
    }
    if let Some(hrep) = &dto.hrep {
        let p = polyhedron_from_dto(hrep, mode, &format!("{path}.hrep"))?;
        return Window::new(p).map_err(|e| invalid(path, e.to_string()));
    }
    Err(invalid(path, "window needs either 'intervals' or 'hrep'"))
}

/// Parses the CLI window syntax `lo:hi,lo:hi,...`.
pub fn window_from_arg(arg: &str) -> Result<Window, SchemaError> {
    let mut bounds = Vec::new();
    for (i, part) in arg.split(',').enumerate() {
        let Some((lo, hi)) = part.split_once(':') else {
            return Err(invalid(
                "window",
                format!("interval {i} must look like lo:hi, got '{part}'"),
            ));
        };
        let lo = parse_scalar(lo.trim(), ParseMode::Lax, "window")?;
        let hi = parse_scalar(hi.trim(), ParseMode::Lax, "window")?;
        if lo > hi {
            return Err(invalid("window", format!("interval {i} out of order")));
        }
        bounds.push((lo, hi));
    }
    if bounds.is_empty() {
        return Err(invalid("window", "empty window"));
    }
    Ok(Window::from_box(&bounds))
}

pub fn point_from_arg(arg: &str) -> Result<Vec<Scalar>, SchemaError> {
    if arg.trim().is_empty() {
        return Ok(Vec::new());
    }
    arg.split(',')
        .map(|s| parse_scalar(s.trim(), ParseMode::Lax, "point"))
        .collect()
}
