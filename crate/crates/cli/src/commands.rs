use std::f64::consts::PI;
use std::fmt::Write as _;

use pyramid_core::dof::FaceVector;
use pyramid_core::geom::{congruent, CongruenceTolerance, EdgeLengthSet, Realization};
use pyramid_core::rigidity::{
    flex_example, max_abs, residuals, trace_family, verdict_at, CoordVector, TraceOptions, TraceStop, DEFAULT_RANK_TOL,
};
use pyramid_core::sample::random_convex_pyramid;
use pyramid_core::solver::{critical_points, ec_profile, find_realizations, RealizeOptions, DEFAULT_GRID};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{Direction, Example, Format, GlobalArgs, LengthInput, PyramidInput, RangeArgs};
use crate::error::CliError;
use crate::format::{csv, join, text};
use crate::input::{full_lengths, length_slots, parse_length, parse_reals, sweep_lengths, FileOptions, ProblemFile};

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub grid: usize,
    pub tol: f64,
    pub congruence: CongruenceTolerance,
    pub include_degenerate: bool,
    pub seed: u64,
    pub format: Format,
}

impl Settings {
    /// Command-line flags win over problem-file options, which win over defaults.
    pub fn resolve(global: &GlobalArgs, file: Option<&FileOptions>) -> Result<Self, CliError> {
        let opts = file.cloned().unwrap_or_default();
        let grid = global.grid.or(opts.grid).unwrap_or(DEFAULT_GRID);
        if grid < 2 {
            return Err(CliError::Input("--grid must be at least 2".into()));
        }
        let tol = global.tol.or(opts.tol).unwrap_or(RealizeOptions::default().residual_tol);
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::Input("--tol must be positive".into()));
        }
        let congruence = match global.congruence_tol.or(opts.congruence_tol) {
            Some(t) => CongruenceTolerance::new(t)?,
            None => CongruenceTolerance::default(),
        };
        Ok(Self {
            grid,
            tol,
            congruence,
            include_degenerate: global.include_degenerate || opts.include_degenerate.unwrap_or(false),
            seed: global.seed.or(opts.seed).unwrap_or(0),
            format: global.format,
        })
    }

    fn realize_options(&self) -> RealizeOptions {
        RealizeOptions {
            grid: self.grid,
            residual_tol: self.tol,
            congruence: self.congruence,
            include_degenerate: self.include_degenerate,
            ..RealizeOptions::default()
        }
    }
}

fn to_json(value: &impl Serialize) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn read_file(input: &LengthInput) -> Result<Option<ProblemFile>, CliError> {
    input.file.as_deref().map(ProblemFile::read).transpose()
}

pub fn file_options(input: &LengthInput) -> Result<(Option<ProblemFile>, Option<FileOptions>), CliError> {
    let file = read_file(input)?;
    let opts = file.as_ref().map(|f| f.options.clone());
    Ok((file, opts))
}

#[derive(Debug, Serialize)]
struct Coordinates {
    x1: f64,
    y1: f64,
    x2: f64,
    y2: f64,
    x3: f64,
    y3: f64,
    z3: f64,
}

impl From<[f64; 7]> for Coordinates {
    fn from([x1, y1, x2, y2, x3, y3, z3]: [f64; 7]) -> Self {
        Self { x1, y1, x2, y2, x3, y3, z3 }
    }
}

#[derive(Debug, Serialize)]
struct RealizationRecord {
    alpha: f64,
    #[serde(flatten)]
    coords: Coordinates,
    residual_norm: f64,
    base_class: &'static str,
}

#[derive(Debug, Serialize)]
struct RealizeReport {
    lengths: [f64; 8],
    count: usize,
    realizations: Vec<RealizationRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    empty_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<Coordinates>,
    #[serde(skip_serializing_if = "Option::is_none")]
    recovered: Option<bool>,
}

const COORD_HEADER: &str = "x1 y1 x2 y2 x3 y3 z3";

pub fn realize(s: &Settings, input: &LengthInput, file: Option<&ProblemFile>, random: bool) -> Result<String, CliError> {
    let (lengths, source) = if random {
        let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
        let r = random_convex_pyramid(&mut rng);
        let unit: f64 = rng.gen_range(0.5..3.0);
        let source = Realization::from_coords(r.coords(), 1.0 / unit);
        (source.edge_lengths(true), Some(source))
    } else {
        (full_lengths(&length_slots(&input.lengths, file)?)?, None)
    };
    let found = find_realizations(&lengths, &s.realize_options());
    let report = RealizeReport {
        lengths: lengths.as_array(),
        count: found.count(),
        realizations: found
            .solutions
            .iter()
            .map(|sol| RealizationRecord {
                alpha: sol.alpha,
                coords: sol.realization.coords_unscaled().into(),
                residual_norm: sol.residual_norm,
                base_class: sol.realization.base_class.as_str(),
            })
            .collect(),
        empty_reason: found.empty_reason.as_ref().map(ToString::to_string),
        input: source.map(|r| r.coords_unscaled().into()),
        recovered: source.map(|r| found.realizations().any(|f| congruent(f, &r, s.congruence))),
    };
    if s.format == Format::Json {
        return to_json(&report);
    }
    let mut out = String::new();
    writeln!(out, "lengths {}", join(report.lengths)).unwrap();
    if let Some(r) = &source {
        writeln!(out, "input {}", join(r.coords_unscaled())).unwrap();
    }
    writeln!(out, "count={}", report.count).unwrap();
    if let Some(reason) = &report.empty_reason {
        writeln!(out, "reason={reason}").unwrap();
    }
    if let Some(rec) = report.recovered {
        writeln!(out, "recovered={rec}").unwrap();
    }
    if report.count > 0 {
        writeln!(out, "alpha {COORD_HEADER} residual_norm base_class").unwrap();
        for sol in &found.solutions {
            writeln!(
                out,
                "{} {} {} {}",
                text(sol.alpha),
                join(sol.realization.coords_unscaled()),
                text(sol.residual_norm),
                sol.realization.base_class
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn angle_range(r: &RangeArgs) -> Result<(f64, f64), CliError> {
    let range = (r.from.unwrap_or(0.0), r.to.unwrap_or(PI));
    if !(range.0.is_finite() && range.1.is_finite() && range.0 < range.1) {
        return Err(CliError::Input("need --from < --to".into()));
    }
    Ok(range)
}

#[derive(Debug, Serialize)]
struct SweepRow {
    alpha: f64,
    branch: u8,
    ec2: Option<f64>,
    z3sq: f64,
    base_class: &'static str,
    admissible: bool,
}

#[derive(Debug, Serialize)]
struct IntervalRecord {
    branch: u8,
    start: f64,
    end: f64,
}

#[derive(Debug, Serialize)]
struct SweepReport {
    samples: Vec<SweepRow>,
    intervals: Vec<IntervalRecord>,
}

pub const SWEEP_HEADER: &str = "alpha,branch,ec2,z3sq,base_class,admissible";

pub fn sweep(s: &Settings, input: &LengthInput, file: Option<&ProblemFile>, range: &RangeArgs) -> Result<String, CliError> {
    let lengths = sweep_lengths(&length_slots(&input.lengths, file)?)?;
    let profile = ec_profile(lengths, angle_range(range)?, s.grid);
    let rows: Vec<SweepRow> = profile
        .samples
        .iter()
        .map(|x| SweepRow {
            alpha: x.alpha,
            branch: x.branch.index(),
            ec2: x.ec2,
            z3sq: x.z3sq,
            base_class: x.base_class.as_str(),
            admissible: x.admissible,
        })
        .collect();
    if s.format == Format::Json {
        let intervals = profile
            .intervals
            .iter()
            .map(|iv| IntervalRecord {
                branch: iv.branch.index(),
                start: iv.start,
                end: iv.end,
            })
            .collect();
        return to_json(&SweepReport { samples: rows, intervals });
    }
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    writeln!(out, "{SWEEP_HEADER}").unwrap();
    for r in &rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            csv(r.alpha),
            r.branch,
            r.ec2.map(csv).unwrap_or_default(),
            csv(r.z3sq),
            r.base_class,
            u8::from(r.admissible)
        )
        .unwrap();
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct CriticalRecord {
    branch: String,
    kind: String,
    alpha: f64,
    ec2: f64,
}

pub fn critical(s: &Settings, input: &LengthInput, file: Option<&ProblemFile>, range: &RangeArgs) -> Result<String, CliError> {
    let lengths = sweep_lengths(&length_slots(&input.lengths, file)?)?;
    let profile = ec_profile(lengths, angle_range(range)?, s.grid);
    let points: Vec<CriticalRecord> = critical_points(&profile)
        .into_iter()
        .map(|c| CriticalRecord {
            branch: c.branch.to_string(),
            kind: c.kind.to_string(),
            alpha: c.alpha,
            ec2: c.value,
        })
        .collect();
    if s.format == Format::Json {
        return to_json(&serde_json::json!({ "critical": points }));
    }
    let mut out = String::from("branch kind alpha ec2\n");
    for c in &points {
        writeln!(out, "{} {} {} {}", c.branch, c.kind, text(c.alpha), text(c.ec2)).unwrap();
    }
    Ok(out)
}

fn example_coords(e: Example) -> [f64; 7] {
    match e {
        Example::Square => [0.0, 1.0, 1.0, 1.0, 0.5, 0.5, 1.0],
        Example::Flex => flex_example(),
    }
}

fn resolve_pyramid(p: &PyramidInput, fallback: Option<Example>) -> Result<(CoordVector, EdgeLengthSet), CliError> {
    let coords: [f64; 7] = match (&p.coords, p.example.or(fallback)) {
        (Some(text), _) => parse_reals(text, 7)?.try_into().expect("seven values"),
        (None, Some(e)) => example_coords(e),
        (None, None) => return Err(CliError::Input("give --coords or --example".into())),
    };
    let c = CoordVector(coords);
    let lengths = match &p.lengths {
        Some(text) => {
            let v: Vec<f64> = text.split(',').map(parse_length).collect::<Result<_, _>>()?;
            let arr: [f64; 8] = v
                .try_into()
                .map_err(|v: Vec<f64>| CliError::Input(format!("expected 8 lengths, got {}", v.len())))?;
            EdgeLengthSet::new(arr)?
        }
        None => c.to_realization(1.0).edge_lengths(false),
    };
    Ok((c, lengths))
}

pub fn rigidity(s: &Settings, p: &PyramidInput) -> Result<String, CliError> {
    let (c, lengths) = resolve_pyramid(p, None)?;
    let report = verdict_at(&c, &lengths, DEFAULT_RANK_TOL)?;
    let sv = report.singular_values;
    let ratio = if sv[0] > 0.0 { sv[6] / sv[0] } else { 0.0 };
    if s.format == Format::Json {
        let jac: Vec<Vec<f64>> = report.jacobian.row_iter().map(|r| r.iter().copied().collect()).collect();
        return to_json(&serde_json::json!({
            "verdict": report.verdict.to_string(),
            "kernel_dim": report.kernel_dim,
            "condition_ratio": ratio,
            "singular_values": sv,
            "residuals": report.residuals,
            "jacobian": jac,
        }));
    }
    let mut out = String::new();
    writeln!(out, "verdict={} kernel_dim={}", report.verdict, report.kernel_dim).unwrap();
    writeln!(out, "condition_ratio={}", text(ratio)).unwrap();
    writeln!(out, "singular_values {}", join(sv)).unwrap();
    writeln!(out, "residuals {}", join(report.residuals)).unwrap();
    Ok(out)
}

fn stop_label(stop: &TraceStop) -> String {
    match stop {
        TraceStop::Completed => "completed".into(),
        TraceStop::KernelCollapse { kernel_dim, z3 } => {
            format!("kernel-collapse(kernel_dim={kernel_dim},z3={})", text(*z3))
        }
        TraceStop::CorrectionDiverged { step } => format!("correction-diverged(step={})", text(*step)),
    }
}

#[derive(Debug, Serialize)]
struct TracePoint {
    step: i64,
    #[serde(flatten)]
    coords: Coordinates,
    diagonal_ac: f64,
    residual: f64,
}

#[derive(Debug, Serialize)]
struct StopRecord {
    direction: &'static str,
    stop: String,
    accepted: usize,
}

pub fn flex_trace(s: &Settings, p: &PyramidInput, steps: usize, step: f64, direction: Direction) -> Result<String, CliError> {
    if !(step.is_finite() && step > 0.0) {
        return Err(CliError::Input("--step must be positive".into()));
    }
    let (start, lengths) = resolve_pyramid(p, Some(Example::Flex))?;
    let dirs: &[(&'static str, f64)] = match direction {
        Direction::Forward => &[("forward", 1.0)],
        Direction::Backward => &[("backward", -1.0)],
        Direction::Both => &[("backward", -1.0), ("forward", 1.0)],
    };
    let point = |i: i64, c: &CoordVector| TracePoint {
        step: i,
        coords: c.0.into(),
        diagonal_ac: c.diagonal_ac(),
        residual: max_abs(&residuals(c, &lengths)),
    };
    let mut stops = Vec::new();
    let (mut before, mut after) = (Vec::new(), Vec::new());
    for &(name, sign) in dirs {
        let opts = TraceOptions {
            steps,
            step,
            direction: sign,
            ..TraceOptions::default()
        };
        let trace = trace_family(&start, &lengths, &opts)?;
        stops.push(StopRecord {
            direction: name,
            stop: stop_label(&trace.stop),
            accepted: trace.accepted_steps(),
        });
        let side = trace.points.iter().enumerate().skip(1).map(|(i, c)| point(sign as i64 * i as i64, c));
        if sign < 0.0 {
            before = side.rev().collect();
        } else {
            after = side.collect();
        }
    }
    let points: Vec<TracePoint> = before.into_iter().chain([point(0, &start)]).chain(after).collect();
    if s.format == Format::Json {
        return to_json(&serde_json::json!({ "stops": stops, "points": points }));
    }
    let mut out = String::new();
    for st in &stops {
        writeln!(out, "{} stop={} accepted={}", st.direction, st.stop, st.accepted).unwrap();
    }
    writeln!(out, "step {COORD_HEADER} diagonal_ac residual").unwrap();
    for p in &points {
        let c = &p.coords;
        writeln!(
            out,
            "{} {} {} {}",
            p.step,
            join([c.x1, c.y1, c.x2, c.y2, c.x3, c.y3, c.z3]),
            text(p.diagonal_ac),
            text(p.residual)
        )
        .unwrap();
    }
    Ok(out)
}

pub fn dof(s: &Settings, faces: &str, pinned: Option<u32>) -> Result<String, CliError> {
    let mut fv: FaceVector = faces.parse()?;
    if let Some(k) = pinned {
        fv = FaceVector::with_pinned(fv.faces().collect::<Vec<_>>(), k)?;
    }
    let counts = fv.counts()?;
    let b = fv.dof_balance()?;
    if s.format == Format::Json {
        return to_json(&serde_json::json!({
            "freedoms": b.freedoms,
            "relations": b.relations,
            "balanced": b.balanced,
            "edges": counts.edges,
            "vertices": counts.vertices,
            "pinned": fv.pinned(),
        }));
    }
    Ok(format!("freedoms={} relations={} balanced={}\n", b.freedoms, b.relations, b.balanced))
}
