//! Command line surface for the fundom library.
//!
//! Every command emits a versioned JSON document (or CSV for the tabular
//! commands) with sorted keys and sorted point lists, so identical
//! invocations produce byte-identical output. Exit codes: 0 success,
//! 1 runtime failure, 2 usage error.

mod figures;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fundom::ak::{ak_classify_with_scale, default_scale, ParabolicLabel, MIN_SCALE};
use fundom::family::OrthogonalFamily;
use fundom::paving::{
    cell_dimension, closed_form, closed_form_t, fundamental_fixed_points, poincare_pipeline,
    triangle_points, triangle_region, v_region,
};
use fundom::poly::IntPolynomial;
use fundom::series::{compare, direct_series, poincare_generating};
use fundom::weyl::{Coweight, RootValuation};

#[derive(Parser)]
#[command(
    name = "fundom",
    version,
    about = "Lattice combinatorics of the GL(3) fundamental domain"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Closed,
    Pipeline,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Regions {
    Triangle,
    V,
    Ak,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Partition,
    Hexagon,
    Nonstandard,
    Triangle,
    Complement,
}

#[derive(Subcommand)]
enum Command {
    /// Poincare polynomial of the fundamental domain for valuations (n1, n2)
    Poincare {
        n1: i64,
        n2: i64,
        /// closed formula, enumeration pipeline, or both with an equality flag
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lattice points of the fundamental domain, optionally region-labeled
    FixedPoints {
        n1: i64,
        n2: i64,
        /// triangle and ak label the full Schubert triangle, v the hexagon
        #[arg(long, value_enum)]
        regions: Option<Regions>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regular vertices of the orthogonal family for the given valuations
    Vertices {
        /// simple root valuations; the rank is one more than the count
        #[arg(required = true, num_args = 1..=5)]
        valuations: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stratum of one lattice point (x1, x2, x3) for valuations (n1, n2)
    #[command(allow_negative_numbers = true)]
    Classify {
        n1: i64,
        n2: i64,
        x1: i64,
        x2: i64,
        x3: i64,
        /// tie-break scale override, at least 13
        #[arg(long)]
        scale: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the rational generating series against the direct sum
    Series {
        /// truncation order in total degree, at least 2
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render one of the lattice figures as a standalone SVG file
    Svg {
        #[arg(value_enum)]
        figure: Figure,
        n1: i64,
        n2: i64,
        /// output path
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<fundom::Error> for Failure {
    fn from(e: fundom::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Poincare {
            n1,
            n2,
            mode,
            format,
            out,
        } => cmd_poincare(n1, n2, mode, format, out),
        Command::FixedPoints {
            n1,
            n2,
            regions,
            format,
            out,
        } => cmd_fixed_points(n1, n2, regions, format, out),
        Command::Vertices {
            valuations,
            format,
            out,
        } => cmd_vertices(valuations, format, out),
        Command::Classify {
            n1,
            n2,
            x1,
            x2,
            x3,
            scale,
            format,
            out,
        } => cmd_classify(n1, n2, [x1, x2, x3], scale, format, out),
        Command::Series { order, format, out } => cmd_series(order, format, out),
        Command::Svg {
            figure,
            n1,
            n2,
            out,
        } => cmd_svg(figure, n1, n2, out),
    }
}

fn check_positive(name: &str, value: i64) -> Result<(), Failure> {
    if value < 1 {
        return Err(Failure::Usage(format!(
            "{name} must be a positive integer, got {value}"
        )));
    }
    Ok(())
}

fn sorted_valuation(n1: i64, n2: i64) -> Result<(RootValuation, bool), Failure> {
    check_positive("n1", n1)?;
    check_positive("n2", n2)?;
    let swapped = n1 > n2;
    let (a, b) = if swapped { (n2, n1) } else { (n1, n2) };
    Ok((RootValuation::new(vec![a, b])?, swapped))
}

fn reject_csv(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage(format!(
            "csv output is not available for `{command}`; it is limited to \
             fixed-points, vertices, and series"
        )));
    }
    Ok(())
}

fn conventions() -> Value {
    json!({
        "boundary": "closed",
        "sign_zero": 1,
        "v_overlap_priority": "V1",
        "v_tie": "V3",
    })
}

fn document(command: &str, inputs: Value, payload: Value, metadata: Value) -> Value {
    json!({
        "schema_version": "1",
        "command": command,
        "inputs": inputs,
        "payload": payload,
        "metadata": metadata,
    })
}

fn emit(text: String, out: Option<PathBuf>) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display()))),
    }
}

fn emit_json(doc: Value, out: Option<PathBuf>) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(&doc)
        .map_err(|e| Failure::Runtime(format!("serialization failed: {e}")))?;
    text.push('\n');
    emit(text, out)
}

fn emit_csv(header: &str, rows: Vec<String>, out: Option<PathBuf>) -> Result<(), Failure> {
    let mut text = String::from(header);
    text.push('\n');
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    emit(text, out)
}

fn poly_json(p: &IntPolynomial, var: &str) -> Value {
    json!({ "coefficients": p.coeffs(), "display": p.display(var) })
}

fn poly_pair(q_form: &IntPolynomial, t_form: &IntPolynomial) -> Value {
    json!({ "q": poly_json(q_form, "q"), "t": poly_json(t_form, "t") })
}

fn cmd_poincare(
    n1: i64,
    n2: i64,
    mode: Mode,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    reject_csv(format, "poincare")?;
    let (rv, swapped) = sorted_valuation(n1, n2)?;
    let payload = match mode {
        Mode::Closed => {
            json!({
                "mode": "closed",
                "polynomial": poly_pair(&closed_form(&rv)?, &closed_form_t(&rv)?),
            })
        }
        Mode::Pipeline => {
            let p = poincare_pipeline(&rv)?;
            let t = p.stretch(2);
            json!({ "mode": "pipeline", "polynomial": poly_pair(&p, &t) })
        }
        Mode::Both => {
            let c = closed_form(&rv)?;
            let p = poincare_pipeline(&rv)?;
            json!({
                "mode": "both",
                "closed": poly_pair(&c, &closed_form_t(&rv)?),
                "pipeline": poly_pair(&p, &p.stretch(2)),
                "equal": c == p,
            })
        }
    };
    let doc = document(
        "poincare",
        json!({ "n1": n1, "n2": n2 }),
        payload,
        json!({ "conventions": conventions(), "swapped": swapped }),
    );
    emit_json(doc, out)
}

fn cmd_fixed_points(
    n1: i64,
    n2: i64,
    regions: Option<Regions>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let (rv, swapped) = sorted_valuation(n1, n2)?;

    struct Row {
        x: Vec<i64>,
        dim: i64,
        region: Option<String>,
        overlap: Option<bool>,
    }

    let mut scale_used: Option<i64> = None;
    let (point_set, rows): (&str, Vec<Row>) = match regions {
        None => {
            let points = fundamental_fixed_points(&rv)?;
            let rows = points
                .iter()
                .map(|mu| {
                    Ok(Row {
                        x: mu.coords().to_vec(),
                        dim: cell_dimension(&rv, mu)?,
                        region: None,
                        overlap: None,
                    })
                })
                .collect::<Result<_, fundom::Error>>()?;
            ("hexagon", rows)
        }
        Some(Regions::V) => {
            let points = fundamental_fixed_points(&rv)?;
            let rows = points
                .iter()
                .map(|mu| {
                    let report = v_region(&rv, mu)?;
                    Ok(Row {
                        x: mu.coords().to_vec(),
                        dim: cell_dimension(&rv, mu)?,
                        region: Some(report.region.to_string()),
                        overlap: Some(report.in_overlap),
                    })
                })
                .collect::<Result<_, fundom::Error>>()?;
            ("hexagon", rows)
        }
        Some(Regions::Triangle) => {
            let points = triangle_points(&rv)?;
            let rows = points
                .iter()
                .map(|mu| {
                    Ok(Row {
                        x: mu.coords().to_vec(),
                        dim: cell_dimension(&rv, mu)?,
                        region: Some(triangle_region(&rv, mu)?.to_string()),
                        overlap: None,
                    })
                })
                .collect::<Result<_, fundom::Error>>()?;
            ("triangle", rows)
        }
        Some(Regions::Ak) => {
            let points = triangle_points(&rv)?;
            let scale = points
                .iter()
                .map(|mu| default_scale(&rv, mu))
                .try_fold(MIN_SCALE, |acc, s| s.map(|s| acc.max(s)))?;
            scale_used = Some(scale);
            let rows = points
                .iter()
                .map(|mu| {
                    Ok(Row {
                        x: mu.coords().to_vec(),
                        dim: cell_dimension(&rv, mu)?,
                        region: Some(ak_classify_with_scale(&rv, mu, scale)?.to_string()),
                        overlap: None,
                    })
                })
                .collect::<Result<_, fundom::Error>>()?;
            ("triangle", rows)
        }
    };

    match format {
        Format::Csv => {
            let mut header = String::from("x1,x2,x3,dim");
            if rows.first().is_some_and(|r| r.region.is_some()) {
                header.push_str(",region");
            }
            if rows.first().is_some_and(|r| r.overlap.is_some()) {
                header.push_str(",overlap");
            }
            let body = rows
                .iter()
                .map(|r| {
                    let mut cells: Vec<String> = r.x.iter().map(|c| c.to_string()).collect();
                    cells.push(r.dim.to_string());
                    if let Some(region) = &r.region {
                        cells.push(region.clone());
                    }
                    if let Some(overlap) = r.overlap {
                        cells.push(overlap.to_string());
                    }
                    cells.join(",")
                })
                .collect();
            emit_csv(&header, body, out)
        }
        Format::Json => {
            let points: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("x".into(), json!(r.x));
                    obj.insert("dim".into(), json!(r.dim));
                    if let Some(region) = &r.region {
                        obj.insert("region".into(), json!(region));
                    }
                    if let Some(overlap) = r.overlap {
                        obj.insert("overlap".into(), json!(overlap));
                    }
                    Value::Object(obj)
                })
                .collect();
            let mut metadata = serde_json::Map::new();
            metadata.insert("conventions".into(), conventions());
            metadata.insert("swapped".into(), json!(swapped));
            if let Some(scale) = scale_used {
                metadata.insert("tie_break_scale".into(), json!(scale));
            }
            let doc = document(
                "fixed-points",
                json!({
                    "n1": n1,
                    "n2": n2,
                    "regions": regions.map(|r| match r {
                        Regions::Triangle => "triangle",
                        Regions::V => "v",
                        Regions::Ak => "ak",
                    }),
                }),
                json!({
                    "count": points.len(),
                    "point_set": point_set,
                    "points": points,
                }),
                Value::Object(metadata),
            );
            emit_json(doc, out)
        }
    }
}

fn cmd_vertices(valuations: Vec<i64>, format: Format, out: Option<PathBuf>) -> Result<(), Failure> {
    for &v in &valuations {
        check_positive("each valuation", v)?;
    }
    let rv = RootValuation::new(valuations.clone())?;
    let family = OrthogonalFamily::regular(&rv);
    let d = rv.rank();

    match format {
        Format::Csv => {
            let coords: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
            let header = format!("w,{}", coords.join(","));
            let rows = family
                .vertices()
                .iter()
                .map(|(w, vertex)| {
                    let cells: Vec<String> =
                        vertex.coords().iter().map(|c| c.to_string()).collect();
                    format!("{},{}", w.one_line(), cells.join(","))
                })
                .collect();
            emit_csv(&header, rows, out)
        }
        Format::Json => {
            let vertices: Vec<Value> = family
                .vertices()
                .iter()
                .map(|(w, vertex)| json!({ "w": w.one_line(), "x": vertex.coords() }))
                .collect();
            let doc = document(
                "vertices",
                json!({ "valuations": valuations }),
                json!({
                    "rank": d,
                    "level": family.level(),
                    "vertices": vertices,
                }),
                json!({ "conventions": conventions() }),
            );
            emit_json(doc, out)
        }
    }
}

fn cmd_classify(
    n1: i64,
    n2: i64,
    x: [i64; 3],
    scale: Option<i64>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    reject_csv(format, "classify")?;
    check_positive("n1", n1)?;
    check_positive("n2", n2)?;
    if let Some(s) = scale {
        if s < MIN_SCALE {
            return Err(Failure::Usage(format!(
                "scale must be at least {MIN_SCALE}, got {s}"
            )));
        }
    }
    let rv = RootValuation::new(vec![n1, n2])?;
    let mu = Coweight::new(x.to_vec());
    let scale = match scale {
        Some(s) => s,
        None => default_scale(&rv, &mu)?,
    };
    let label = ak_classify_with_scale(&rv, &mu, scale)?;
    let kind = match &label {
        ParabolicLabel::Full => "full",
        ParabolicLabel::Maximal(_) => "maximal",
        ParabolicLabel::Borel(_) => "borel",
    };
    let doc = document(
        "classify",
        json!({ "n1": n1, "n2": n2, "x": x }),
        json!({
            "x": x,
            "level": x.iter().sum::<i64>(),
            "label": label.to_string(),
            "kind": kind,
        }),
        json!({ "conventions": conventions(), "tie_break_scale": scale }),
    );
    emit_json(doc, out)
}

fn cmd_series(order: usize, format: Format, out: Option<PathBuf>) -> Result<(), Failure> {
    if order < 2 {
        return Err(Failure::Usage(format!(
            "series order must be at least 2, got {order}"
        )));
    }
    let rational = poincare_generating().expand(order)?;
    let direct = direct_series(order)?;
    let mismatch = compare(&rational, &direct)?;

    struct Cell {
        u1: usize,
        u2: usize,
        rational: IntPolynomial,
        direct: IntPolynomial,
    }
    let mut cells = Vec::new();
    for total in 0..=order {
        for u1 in 0..=total {
            let u2 = total - u1;
            let r = rational.coefficient(u1, u2);
            let d = direct.coefficient(u1, u2);
            if r.is_zero() && d.is_zero() {
                continue;
            }
            cells.push(Cell {
                u1,
                u2,
                rational: r,
                direct: d,
            });
        }
    }

    match format {
        Format::Csv => {
            let join = |p: &IntPolynomial| {
                p.coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let mut rows = Vec::new();
            for cell in &cells {
                rows.push(format!(
                    "{},{},rational,{}",
                    cell.u1,
                    cell.u2,
                    join(&cell.rational)
                ));
                rows.push(format!(
                    "{},{},direct,{}",
                    cell.u1,
                    cell.u2,
                    join(&cell.direct)
                ));
            }
            emit_csv("u1,u2,source,coefficients", rows, out)
        }
        Format::Json => {
            let table: Vec<Value> = cells
                .iter()
                .map(|c| {
                    json!({
                        "u1": c.u1,
                        "u2": c.u2,
                        "rational": c.rational.coeffs(),
                        "direct": c.direct.coeffs(),
                    })
                })
                .collect();
            let doc = document(
                "series",
                json!({ "order": order }),
                json!({
                    "order": order,
                    "equal": mismatch.is_none(),
                    "mismatch": mismatch.map(|m| json!({
                        "u1": m.u1,
                        "u2": m.u2,
                        "rational": m.left.coeffs(),
                        "direct": m.right.coeffs(),
                    })),
                    "cells": table,
                }),
                json!({ "conventions": conventions() }),
            );
            emit_json(doc, out)
        }
    }
}

fn cmd_svg(figure: Figure, n1: i64, n2: i64, out: PathBuf) -> Result<(), Failure> {
    let (rv, _) = sorted_valuation(n1, n2)?;
    let svg = figures::render(figure, &rv)?;
    fs::write(&out, svg)
        .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", out.display())))
}
