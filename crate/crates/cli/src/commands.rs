use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;
use std::fs;

use serde_json::json;

use sedenion_core::algebra::{format_number, multiplication_table, reference_table, table_csv, SignedBasis};
use sedenion_core::figure::{classify_panels, figure_panels, polar_grid, region_csv, render_svg};
use sedenion_core::series::{
    convergence_scan, evaluate_series, ConvergenceDomain, ExtendedReal, Membership, ScanOptions,
};
use sedenion_core::slice::{
    cker_curve_point, cker_membership, is_hyper_solution, random_hyper_pair, random_slice_unit, seeded_rng,
    HyperSolution, SliceUnit,
};
use sedenion_core::zero::{is_zero_divisor, kernel_of_left_mult};
use sedenion_core::{CDElement, ComplexPoint};

use crate::{input, Cli, Command, Failure, PolarCoords, ScanGrid, SeriesArgs};

type Outcome = Result<String, Failure>;

/// Text form with round-off below `1e-12` relative to the norm removed.
fn show(x: &CDElement) -> String {
    x.snapped(1e-12 * x.norm().max(1.0)).to_string()
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Table { verify, level, csv } => table(cli, *verify, *level, *csv),
        Command::Mul { left, right } => mul(cli, left, right),
        Command::Kernel { element } => kernel(cli, element),
        Command::ZdCheck { element } => zd_check(cli, element),
        Command::Hyper { j1, j2 } => hyper(cli, j1.as_deref(), j2.as_deref()),
        Command::Polar { element, coords } => polar(cli, element.as_deref(), coords),
        Command::Cker { j1, j2, theta, member, samples } => cker(cli, j1, j2, *theta, member.as_deref(), *samples),
        Command::Radii(series) => radii(cli, series),
        Command::Contains { series, point } => contains(cli, series, point),
        Command::Eval { series, point, max_terms, tol } => eval(cli, series, point, *max_terms, *tol),
        Command::Scan { series, slice, grid, max_terms, tol, band, csv } => {
            let opts = ScanOptions { max_terms: *max_terms, tol: *tol, band: *band };
            scan(cli, series, slice, grid, &opts, csv.as_deref())
        }
        Command::Figure { series, grid, extent, out_dir, svg } => figure(series, *grid, *extent, out_dir, *svg),
    }
}

fn to_json(value: &impl serde::Serialize) -> Outcome {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| Failure::Usage(e.to_string()))
}

fn table(cli: &Cli, verify: bool, level: u8, csv: bool) -> Outcome {
    if verify {
        let generated = multiplication_table(4)?;
        let reference = reference_table();
        let mut report = String::new();
        let mut matches = 0;
        for (i, (row, expected)) in generated.iter().zip(&reference).enumerate() {
            for (j, (got, want)) in row.iter().zip(expected).enumerate() {
                if got == want {
                    matches += 1;
                } else {
                    let _ = writeln!(report, "mismatch e{i}*e{j}: generated {got}, reference {want}");
                }
            }
        }
        let _ = writeln!(report, "{matches}/256 entries match");
        return if matches == 256 { Ok(report) } else { Err(Failure::Verification(report)) };
    }
    let rows = multiplication_table(level)?;
    if cli.json {
        let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(SignedBasis::to_string).collect()).collect();
        return to_json(&cells);
    }
    if csv {
        return Ok(table_csv(&rows));
    }
    let mut out = String::new();
    for row in &rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>4}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    Ok(out)
}

fn mul(cli: &Cli, left: &str, right: &str) -> Outcome {
    let product = input::element(left)? * input::element(right)?;
    if cli.json {
        return to_json(&json!({ "product": product.to_string(), "coeffs": product }));
    }
    Ok(format!("{}\n", show(&product)))
}

fn kernel(cli: &Cli, element: &str) -> Outcome {
    let s = input::element(element)?;
    let k = kernel_of_left_mult(&s);
    if cli.json {
        return to_json(&json!({ "element": s.to_string(), "dim": k.dim(), "basis": k }));
    }
    let mut out = format!("dim={}\n", k.dim());
    for b in k.basis() {
        let _ = writeln!(out, "{}", show(b));
    }
    Ok(out)
}

fn zd_check(cli: &Cli, element: &str) -> Outcome {
    let s = input::element(element)?;
    let dim = kernel_of_left_mult(&s).dim();
    let verdict = is_zero_divisor(&s);
    let out = if cli.json {
        to_json(&json!({ "element": s.to_string(), "zero_divisor": verdict, "kernel_dim": dim }))?
    } else if verdict {
        format!("{s}: zero divisor, kernel dimension {dim}\n")
    } else {
        format!("{s}: not a zero divisor\n")
    };
    if verdict {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn hyper_pair(cli: &Cli, j1: Option<&str>, j2: Option<&str>) -> Result<(SliceUnit, SliceUnit), Failure> {
    match (j1, j2) {
        (Some(a), Some(b)) => Ok((input::slice_unit(a)?, input::slice_unit(b)?)),
        (None, None) => Ok(random_hyper_pair(&mut seeded_rng(cli.seed))),
        _ => Err(Failure::Usage("give both slice units or neither".into())),
    }
}

fn hyper(cli: &Cli, j1: Option<&str>, j2: Option<&str>) -> Outcome {
    let (j1, j2) = hyper_pair(cli, j1, j2)?;
    if !is_hyper_solution(&j1, &j2)? {
        let out = if cli.json {
            to_json(&json!({ "j1": j1.to_string(), "j2": j2.to_string(), "hyper_solution": false }))?
        } else {
            format!("j1={j1} j2={j2}\nhyper-solution: no\n")
        };
        return Err(Failure::Verification(out));
    }
    let j = HyperSolution::new(&j1, &j2)?;
    if cli.json {
        return to_json(&json!({ "hyper_solution": true, "solution": j, "kernel_dim": j.kernel().dim() }));
    }
    Ok(format!(
        "j1={j1} j2={j2}\nhyper-solution: yes\nalpha={}\nframe i1={} i2={}\nkernel dimension={}\n",
        format_number(j.alpha),
        show(&j.frame.i1),
        show(&j.frame.i2),
        j.kernel().dim()
    ))
}

fn polar(cli: &Cli, element: Option<&str>, coords: &PolarCoords) -> Outcome {
    let s = match (element, coords.alpha, coords.theta) {
        (Some(text), _, _) => input::slice_unit(text)?,
        (None, Some(alpha), Some(theta)) => input::polar_unit(alpha, theta, &coords.frame)?,
        _ => random_slice_unit(&mut seeded_rng(cli.seed)),
    };
    if cli.json {
        return to_json(&s);
    }
    Ok(format!(
        "unit={s}\nalpha={}\ntheta={}\njmath={}\n",
        format_number(s.alpha()),
        format_number(s.theta()),
        show(&s.jmath())
    ))
}

fn cker(cli: &Cli, j1: &str, j2: &str, theta: Option<f64>, member: Option<&str>, samples: Option<usize>) -> Outcome {
    let (j1, j2) = (input::slice_unit(j1)?, input::slice_unit(j2)?);
    if !is_hyper_solution(&j1, &j2)? {
        return Err(Failure::Usage(format!("({j1}, {j2}) is not a hyper-solution")));
    }
    let j = HyperSolution::new(&j1, &j2)?;
    match (theta, member, samples) {
        (Some(theta), None, None) => {
            let k = cker_curve_point(&j, theta)?;
            if cli.json {
                return to_json(&k);
            }
            Ok(format!("{k}\n"))
        }
        (None, Some(text), None) => {
            let k = input::slice_unit(text)?;
            let inside = cker_membership(&k, &j);
            let out = if cli.json {
                to_json(&json!({ "unit": k.to_string(), "member": inside }))?
            } else {
                format!("{k}: {}\n", if inside { "on the curve" } else { "not on the curve" })
            };
            if inside {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        (None, None, Some(count)) if count > 0 => {
            let mut out = String::from("theta");
            for i in 0..16 {
                let _ = write!(out, ",c{i}");
            }
            out.push('\n');
            for k in 0..count {
                let theta = k as f64 * PI / count as f64;
                let unit = cker_curve_point(&j, theta)?.value();
                let unit = unit.snapped(1e-12);
                out.push_str(&format_number(theta));
                for c in unit.padded() {
                    let _ = write!(out, ",{}", format_number(*c));
                }
                out.push('\n');
            }
            Ok(out)
        }
        _ => Err(Failure::Usage("give exactly one of --theta, --member or a positive --samples".into())),
    }
}

fn domain(series: &SeriesArgs) -> Result<ConvergenceDomain, Failure> {
    let p = input::point(&series.center)?;
    let seq = input::sequence(&series.seq)?;
    Ok(ConvergenceDomain::new(&p, &seq))
}

fn radii(cli: &Cli, series: &SeriesArgs) -> Outcome {
    let domain = domain(series)?;
    let report = domain.report();
    if cli.json {
        return to_json(report);
    }
    let witness = report.witness.map_or_else(|| "none".to_owned(), |k| k.to_string());
    let mut out = format!("R_a={} R_a^p={} witness={witness}\n", report.r_a, report.r_ap);
    if report.approximate {
        out.push_str("radii are windowed estimates from a finite table\n");
    }
    Ok(out)
}

fn contains(cli: &Cli, series: &SeriesArgs, point: &str) -> Outcome {
    let domain = domain(series)?;
    let q = input::point(point)?;
    let class = domain.classify(&q);
    if cli.json {
        return to_json(&class);
    }
    Ok(format!("{} margin={}\n", class.membership, format_number(class.margin)))
}

fn eval(cli: &Cli, series: &SeriesArgs, point: &str, max_terms: usize, tol: f64) -> Outcome {
    let p = input::point(&series.center)?;
    let seq = input::sequence(&series.seq)?;
    let q = input::point(point)?;
    let report = evaluate_series(&q, &p, &seq, max_terms, tol)?;
    if cli.json {
        return to_json(&report);
    }
    Ok(format!(
        "sum={}\nverdict={}\nterms={}\ntail={}\n",
        show(&report.partial_sum),
        report.verdict,
        report.terms_used,
        format_number(report.tail_norm)
    ))
}

fn scan_axes(grid: &ScanGrid) -> Result<(Vec<f64>, Vec<f64>), Failure> {
    if !(grid.r_step > 0.0 && grid.r_min >= 0.0 && grid.r_max >= grid.r_min && grid.angles > 0) {
        return Err(Failure::Usage("scan grid needs 0 <= r-min <= r-max, r-step > 0 and angles >= 1".into()));
    }
    let count = ((grid.r_max - grid.r_min) / grid.r_step + 1e-9).floor() as usize + 1;
    let radial = (0..count).map(|k| grid.r_min + grid.r_step * k as f64).collect();
    let angular = if grid.angles == 1 {
        vec![FRAC_PI_2]
    } else {
        (0..grid.angles).map(|k| PI * k as f64 / (grid.angles - 1) as f64).collect()
    };
    Ok((radial, angular))
}

fn scan(
    cli: &Cli,
    series: &SeriesArgs,
    slice: &str,
    grid: &ScanGrid,
    opts: &ScanOptions,
    csv: Option<&std::path::Path>,
) -> Outcome {
    let p = input::point(&series.center)?;
    let seq = input::sequence(&series.seq)?;
    let slice = input::slice_unit(slice)?;
    let (radial, angular) = scan_axes(grid)?;
    let report = convergence_scan(&p, &seq, &slice, &radial, &angular, opts)?;
    if let Some(path) = csv {
        fs::write(path, report.to_csv())?;
    }
    if cli.json {
        return to_json(&report);
    }
    Ok(format!(
        "agreement rate={} agreed={} scored={} excluded={}\n",
        format_number(report.rate()),
        report.agreed,
        report.scored,
        report.excluded
    ))
}

fn describe_disk((center, radius): (ComplexPoint, ExtendedReal)) -> String {
    format!("B({}{:+}i, {radius})", format_number(center.re), center.im)
}

fn figure(series: &SeriesArgs, grid: usize, extent: f64, out_dir: &std::path::Path, svg: bool) -> Outcome {
    if grid == 0 || extent.is_nan() || extent <= 0.0 {
        return Err(Failure::Usage("figure needs grid >= 1 and extent > 0".into()));
    }
    let domain = domain(series)?;
    let panels = figure_panels(&domain)?;
    let (radial, angular) = polar_grid(grid, extent);
    let samples = classify_panels(&domain, &panels, &radial, &angular);
    fs::create_dir_all(out_dir)?;
    let csv_path = out_dir.join("figure.csv");
    fs::write(&csv_path, region_csv(&samples))?;
    let mut out = String::new();
    for panel in &panels {
        let disks: Vec<String> = domain.slice_view(&panel.slice).disks().into_iter().map(describe_disk).collect();
        let count = |m: Membership| samples.iter().filter(|s| s.panel == panel.kind && s.membership == m).count();
        let _ = writeln!(
            out,
            "{} slice={} region={} interior={} exterior={} boundary={}",
            panel.kind,
            panel.slice,
            disks.join(" & "),
            count(Membership::Interior),
            count(Membership::Exterior),
            count(Membership::Boundary)
        );
    }
    let _ = writeln!(out, "wrote {}", csv_path.display());
    if svg {
        let svg_path = out_dir.join("figure.svg");
        fs::write(&svg_path, render_svg(&domain, &panels, extent))?;
        let _ = writeln!(out, "wrote {}", svg_path.display());
    }
    Ok(out)
}
