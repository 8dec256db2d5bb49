//! Command implementations behind the `hypoly` binary.
//!
//! Exit codes: 0 success, 2 input error, 3 verification failure, 4 internal
//! numerical failure.

pub mod args;
pub mod render;

use args::{CheckArgs, Cli, Command, IncircleArgs, MinimizeArgs, RenderArgs};
use hypoly::incircle::{self, IncircleSolutionData};
use hypoly::optimizer;
use hypoly::polygon::PolygonData;
use hypoly::{AngleSpec, Error, IncircleSolution, Polygon};
use render::RenderOptions;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidInput(_)
        | Error::DegenerateInput(_)
        | Error::NotConvex(_)
        | Error::NotOnManifold(_)
        | Error::NotClosed(_) => EXIT_INPUT,
        _ => EXIT_NUMERIC,
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {}", path.display(), e)),
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

/// Entry point; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Incircle(args) => cmd_incircle(args),
        Command::Minimize(args) => cmd_minimize(args),
        Command::Render(args) => cmd_render(args),
        Command::Check(args) => cmd_check(args),
    };
    match outcome {
        Ok(code) => code,
        Err((code, message)) => {
            eprintln!("error: {}", message);
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn parse_angles(radians: Vec<f64>) -> Result<AngleSpec, (i32, String)> {
    AngleSpec::new(radians).map_err(|e| (exit_code_for(&e), e.to_string()))
}

fn solve_incircle(spec: &AngleSpec) -> Result<IncircleSolution, (i32, String)> {
    incircle::solve(spec).map_err(|e| (exit_code_for(&e), e.to_string()))
}

fn incircle_table(sol: &IncircleSolution) -> String {
    let p = &sol.polygon;
    let n = p.n();
    let mut s = String::new();
    let _ = writeln!(s, "polygon with an inscribed circle, n = {}", n);
    let _ = writeln!(s, "  radius   r = {:.12}", sol.radius);
    let c = sol.center.v();
    let _ = writeln!(
        s,
        "  center     = ({:.12}, {:.12}, {:.12})",
        c.x0, c.x1, c.x2
    );
    let _ = writeln!(s, "  perimeter  = {:.12}", p.perimeter());
    let _ = writeln!(
        s,
        "  criticality residual = {:.3e}",
        incircle::criticality_residual(p)
    );
    let _ = writeln!(s, "  {:>4} {:>14} {:>16} {:>16}", "i", "angle (deg)", "tangent t_i", "edge l_i");
    for i in 0..n {
        let _ = writeln!(
            s,
            "  {:>4} {:>14.8} {:>16.12} {:>16.12}",
            i + 1,
            p.angles().beta()[i].to_degrees(),
            sol.tangent_lengths[i],
            p.lengths()[i]
        );
    }
    s
}

fn cmd_incircle(args: IncircleArgs) -> CmdResult {
    let spec = parse_angles(args.angles.radians())?;
    let sol = solve_incircle(&spec)?;
    let content = if args.json {
        format!("{}\n", sol.to_json_string())
    } else {
        incircle_table(&sol)
    };
    emit(&args.out, &content).map_err(|m| (EXIT_INPUT, m))?;
    Ok(EXIT_OK)
}

fn minimize_summary(report: &optimizer::TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "perimeter minimality, n = {}, samples = {}, seed = {}",
        report.n, report.samples, report.seed
    );
    let _ = writeln!(s, "  incircle perimeter = {:.12}", report.incircle_perimeter);
    let _ = writeln!(s, "  incircle radius    = {:.12}", report.incircle_radius);
    if report.zero_dimensional {
        let _ = writeln!(
            s,
            "  the manifold is zero-dimensional: triangles are rigid given their angles"
        );
    } else {
        let _ = writeln!(
            s,
            "  perimeter gap      = [{:.6e}, {:.6e}], mean {:.6e}",
            report.gap_min, report.gap_max, report.gap_mean
        );
        let iters = &report.iterations;
        if !iters.is_empty() {
            let min = iters.iter().min().unwrap();
            let max = iters.iter().max().unwrap();
            let mean = iters.iter().sum::<usize>() as f64 / iters.len() as f64;
            let _ = writeln!(
                s,
                "  descent iterations = [{}, {}], mean {:.1}",
                min, max, mean
            );
        }
        let _ = writeln!(
            s,
            "  max length error after descent = {:.3e}",
            report.max_length_error
        );
    }
    for v in &report.violations {
        let _ = writeln!(s, "  VIOLATION: {}", v);
    }
    let _ = writeln!(s, "  result: {}", if report.passed { "PASS" } else { "FAIL" });
    s
}

fn cmd_minimize(args: MinimizeArgs) -> CmdResult {
    let spec = parse_angles(args.angles.radians())?;
    let report = optimizer::verify_theorem(&spec, args.samples, args.seed)
        .map_err(|e| (exit_code_for(&e), e.to_string()))?;
    let content = if args.json {
        format!("{}\n", report.to_json_string())
    } else {
        minimize_summary(&report)
    };
    emit(&args.out, &content).map_err(|m| (EXIT_INPUT, m))?;
    Ok(if report.passed { EXIT_OK } else { EXIT_VERIFY })
}

/// A JSON input is either a bare polygon or a full incircle solution.
fn load_polygon_file(path: &Path) -> Result<(Polygon, Option<IncircleSolutionData>), (i32, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (EXIT_INPUT, format!("cannot read {}: {}", path.display(), e)))?;
    if let Ok(data) = serde_json::from_str::<IncircleSolutionData>(&text) {
        let polygon = Polygon::from_data(&data.polygon)
            .map_err(|e| (exit_code_for(&e), e.to_string()))?;
        return Ok((polygon, Some(data)));
    }
    let data: PolygonData = serde_json::from_str(&text)
        .map_err(|e| (EXIT_INPUT, format!("polygon JSON: {}", e)))?;
    let polygon = Polygon::from_data(&data).map_err(|e| (exit_code_for(&e), e.to_string()))?;
    Ok((polygon, None))
}

fn cmd_render(args: RenderArgs) -> CmdResult {
    let opts = RenderOptions {
        width_px: args.width_px,
        samples_per_edge: args.samples_per_edge,
        draw_incircle: args.incircle,
        draw_duals_table: args.duals_table,
    };
    opts.validate().map_err(|m| (EXIT_INPUT, m))?;

    let polygon = if let Some(path) = &args.input {
        load_polygon_file(path)?.0
    } else if let Some(raw) = &args.angles {
        let radians = if args.rad {
            raw.clone()
        } else {
            raw.iter().map(|a| a.to_radians()).collect()
        };
        let spec = parse_angles(radians)?;
        match &args.lengths {
            Some(lengths) => Polygon::build(spec, lengths.clone())
                .map_err(|e| (exit_code_for(&e), e.to_string()))?,
            None => solve_incircle(&spec)?.polygon,
        }
    } else {
        return Err((
            EXIT_INPUT,
            "render needs either --input FILE or --angles".into(),
        ));
    };

    let incircle_data = if opts.draw_incircle {
        let residual = incircle::criticality_residual(&polygon);
        if residual >= 1e-8 {
            return Err((
                EXIT_INPUT,
                format!(
                    "polygon has no inscribed circle (criticality residual {:.3e})",
                    residual
                ),
            ));
        }
        let (center, radius) =
            incircle::incircle_center(&polygon).map_err(|e| (exit_code_for(&e), e.to_string()))?;
        Some((center, radius))
    } else {
        None
    };

    let svg = render::render_svg(&polygon, incircle_data, &opts);
    emit(&args.out, &svg).map_err(|m| (EXIT_INPUT, m))?;
    Ok(EXIT_OK)
}

fn cmd_check(args: CheckArgs) -> CmdResult {
    let (polygon, solution) = load_polygon_file(&args.input)?;
    let closure =
        hypoly::developing::closure_residual(polygon.angles().beta(), polygon.lengths())
            .map_err(|e| (exit_code_for(&e), e.to_string()))?;
    let mut s = String::new();
    let _ = writeln!(s, "{}: valid polygon", args.input.display());
    let _ = writeln!(s, "  n = {}", polygon.n());
    let _ = writeln!(s, "  perimeter = {:.12}", polygon.perimeter());
    let _ = writeln!(s, "  closure residual = {:.3e}", closure.euclid_norm());
    let _ = writeln!(
        s,
        "  criticality residual = {:.3e}",
        incircle::criticality_residual(&polygon)
    );
    if let Some(sol) = solution {
        let _ = writeln!(s, "  incircle radius (stored) = {:.12}", sol.radius);
    }
    print!("{}", s);
    Ok(EXIT_OK)
}
