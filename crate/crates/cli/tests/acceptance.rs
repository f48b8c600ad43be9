//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use pyramid_core::dof::FaceVector;
use pyramid_core::geom::{congruent, segments_intersect, Point2};
use pyramid_core::rigidity::{
    flex_example, flex_example_lengths, flex_sample, jacobian, max_abs, rank_analysis, residuals, rigidity_verdict,
    trace_family, verdict_at, CoordVector, Matrix7, TraceOptions, TraceStop, Verdict, DEFAULT_RANK_TOL,
};
use pyramid_core::sample::{random_convex_pyramid, random_length_set};
use pyramid_core::solver::{
    branch_nonconvex, branch_parallelogram, critical_points, ec_profile, find_realizations, CriticalKind,
    RealizeOptions, SweepLengths, DEFAULT_GRID,
};
use pyramid_core::{DofError, Edge, EdgeLengthSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn example_sweep() -> SweepLengths {
    let s = f64::sqrt;
    SweepLengths::new([1.0, 2.0, s(2.0), 1.0, s(2.0), s(5.0), s(3.0)]).unwrap()
}

fn example_lengths(ec2: f64) -> EdgeLengthSet {
    let s = f64::sqrt;
    EdgeLengthSet::new([1.0, 2.0, s(2.0), 1.0, s(2.0), s(5.0), s(ec2), s(3.0)]).unwrap()
}

fn example_profile() -> Outcome {
    let started = Instant::now();
    let profile = ec_profile(example_sweep(), (0.0, PI), DEFAULT_GRID);
    let critical = critical_points(&profile);
    let elapsed = started.elapsed();

    check(profile.intervals.len() == 1, || format!("{} admissible intervals", profile.intervals.len()))?;
    let iv = profile.intervals[0];
    check((iv.start - 0.9449).abs() <= 1e-3, || format!("alpha0 = {}", iv.start))?;
    check((iv.end - 0.75 * PI).abs() <= 1e-9, || format!("alpha1 = {}", iv.end))?;
    let find = |kind| critical.iter().find(|c| c.kind == kind && c.branch == iv.branch).copied();
    let left = find(CriticalKind::LeftEndpoint).ok_or("no left endpoint")?;
    let right = find(CriticalKind::RightEndpoint).ok_or("no right endpoint")?;
    check((left.value - 7.8284).abs() <= 1e-3, || format!("|EC|^2(alpha0) = {}", left.value))?;
    check((right.value - 9.3067).abs() <= 1e-3, || format!("|EC|^2(alpha1) = {}", right.value))?;
    let interior: Vec<_> = critical
        .iter()
        .filter(|c| matches!(c.kind, CriticalKind::LocalMax | CriticalKind::LocalMin))
        .collect();
    check(interior.len() == 2, || format!("{} interior critical points", interior.len()))?;
    let max = find(CriticalKind::LocalMax).ok_or("no local max")?;
    let min = find(CriticalKind::LocalMin).ok_or("no local min")?;
    check((max.alpha - FRAC_PI_2).abs() <= 1e-6 && (max.value - 9.0).abs() <= 1e-9, || {
        format!("local max ({}, {})", max.alpha, max.value)
    })?;
    check((min.alpha - 1.9404).abs() <= 5e-3 && (min.value - 8.9555).abs() <= 2e-3, || {
        format!("local min ({}, {})", min.alpha, min.value)
    })?;
    check(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "interval [{:.6}, {:.10}], ends {:.6}/{:.6}, max ({:.8}, {:.10}), min ({:.6}, {:.6}), {:.0?}",
        iv.start, iv.end, left.value, right.value, max.alpha, max.value, min.alpha, min.value, elapsed
    ))
}

fn cli_count(ec2: f64) -> Result<u64, String> {
    let ec = format!("sqrt({ec2})");
    let out = Command::new(env!("CARGO_BIN_EXE_pyramid"))
        .args(["realize", "--format", "json", "1", "2", "sqrt(2)", "1", "sqrt(2)", "sqrt(5)", &ec, "sqrt(3)"])
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    v["count"].as_u64().ok_or_else(|| "no count".to_string())
}

fn realization_window() -> Outcome {
    let opts = RealizeOptions::default();
    let mut summary = Vec::new();
    for (ec2, expected) in [(8.98, 3), (9.2, 1), (8.5, 1), (9.0, 2)] {
        let count = cli_count(ec2)?;
        check(count == expected, || format!("l7^2 = {ec2}: {count} realizations, expected {expected}"))?;
        let found = find_realizations(&example_lengths(ec2), &opts);
        let rs: Vec<_> = found.realizations().collect();
        check(rs.len() as u64 == count, || format!("library and CLI disagree at {ec2}"))?;
        for (i, a) in rs.iter().enumerate() {
            for b in &rs[i + 1..] {
                check(!congruent(a, b, opts.congruence), || format!("congruent pair at {ec2}"))?;
            }
        }
        summary.push(format!("{ec2}->{count}"));
    }
    Ok(summary.join(", "))
}

fn realization_bound() -> Outcome {
    let started = Instant::now();
    let opts = RealizeOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut histogram = [0usize; 5];
    for i in 0..1000 {
        let r = random_convex_pyramid(&mut rng);
        let found = find_realizations(&r.edge_lengths(false), &opts);
        let n = found.count();
        check(n <= 4, || format!("pyramid {i}: {n} realizations"))?;
        check(found.realizations().any(|f| congruent(f, &r, opts.congruence)), || {
            format!("pyramid {i} not recovered: {:?}", r.coords())
        })?;
        histogram[n] += 1;
    }
    let mut realizable = 0;
    for i in 0..1000 {
        let l = random_length_set(&mut rng);
        let found = find_realizations(&l, &opts);
        let n = found.count();
        check(n <= 4, || format!("length set {i}: {n} realizations"))?;
        // every reported realization is itself recovered from its own lengths
        for s in &found.solutions {
            let again = find_realizations(&s.realization.edge_lengths(false), &opts);
            check(again.realizations().any(|f| congruent(f, &s.realization, opts.congruence)), || {
                format!("length set {i}: realization not recovered")
            })?;
        }
        realizable += usize::from(n > 0);
        histogram[n] += 1;
    }
    let elapsed = started.elapsed();
    check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("counts 0..4: {histogram:?}, {realizable} realizable length sets, {elapsed:.1?}"))
}

fn flexible_example() -> Outcome {
    let lengths = flex_example_lengths();
    let start = CoordVector(flex_example());
    let report = verdict_at(&start, &lengths, DEFAULT_RANK_TOL).map_err(|e| e.to_string())?;
    check(report.kernel_dim == 1, || format!("kernel_dim {}", report.kernel_dim))?;

    let mut points = Vec::new();
    for direction in [1.0, -1.0] {
        let opts = TraceOptions {
            steps: 80,
            direction,
            ..TraceOptions::default()
        };
        let trace = trace_family(&start, &lengths, &opts).map_err(|e| e.to_string())?;
        check(trace.stop == TraceStop::Completed, || format!("trace stopped: {:?}", trace.stop))?;
        points.extend(trace.points);
    }
    let (lo, hi) = points.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| (lo.min(p.y1()), hi.max(p.y1())));
    check(lo <= 0.8 && hi >= 1.2, || format!("trace covers y1 in [{lo}, {hi}]"))?;
    let window: Vec<&CoordVector> = points.iter().filter(|p| (0.8..=1.2).contains(&p.y1())).collect();
    check(window.len() >= 40, || format!("{} steps inside [0.8, 1.2]", window.len()))?;
    let mut worst_residual = 0.0f64;
    let mut worst_gap = 0.0f64;
    for p in &window {
        worst_residual = worst_residual.max(max_abs(&residuals(p, &lengths)));
        let closed = flex_sample(p.y1()).map_err(|e| e.to_string())?.coords();
        worst_gap = p.0.iter().zip(closed).fold(worst_gap, |m, (x, y)| m.max((x - y).abs()));
    }
    let diag: Vec<f64> = window.iter().map(|p| p.diagonal_ac()).collect();
    let spread = diag.iter().cloned().fold(f64::MIN, f64::max) - diag.iter().cloned().fold(f64::MAX, f64::min);
    check(worst_residual <= 1e-10, || format!("residual {worst_residual:e}"))?;
    check(worst_gap <= 1e-7, || format!("closed-form gap {worst_gap:e}"))?;
    check(spread >= 1e-2, || format!("|AC| spread {spread}"))?;
    Ok(format!(
        "kernel_dim 1, {} points in [0.8, 1.2], residual {worst_residual:.1e}, gap {worst_gap:.1e}, |AC| spread {spread:.4}",
        window.len()
    ))
}

fn convex_rigidity() -> Outcome {
    let square = CoordVector([0.0, 1.0, 1.0, 1.0, 0.5, 0.5, 1.0]);
    let l = square.to_realization(1.0).edge_lengths(false);
    let report = verdict_at(&square, &l, DEFAULT_RANK_TOL).map_err(|e| e.to_string())?;
    check(report.verdict == Verdict::Rigid, || "unit square pyramid not rigid".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = f64::MAX;
    for i in 0..1000 {
        let r = random_convex_pyramid(&mut rng);
        let report = rigidity_verdict(&r, &r.edge_lengths(false), DEFAULT_RANK_TOL).map_err(|e| e.to_string())?;
        let s = report.singular_values;
        check(report.verdict == Verdict::Rigid, || format!("pyramid {i} flexible"))?;
        worst = worst.min(s[6] / s[0]);
    }
    check(worst > 1e-6, || format!("smallest sigma ratio {worst:e}"))?;
    Ok(format!("square rigid, 1000/1000 rigid, smallest sigma_min/sigma_max {worst:.3e}"))
}

fn dof_identity() -> Outcome {
    for (text, expected) in [("3:4,4:1", 7), ("4:6", 16), ("3:4", 5)] {
        let b = text.parse::<FaceVector>().map_err(|e| e.to_string())?.dof_balance().map_err(|e| e.to_string())?;
        check(b.freedoms == expected && b.relations == expected, || format!("{text}: {b:?}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut tested = 0;
    while tested < 10_000 {
        let mut faces: Vec<(u32, u64)> = (0..rng.gen_range(1..6))
            .map(|_| (rng.gen_range(3..12), rng.gen_range(1..50)))
            .collect();
        if faces.iter().map(|&(i, n)| i as u64 * n).sum::<u64>() % 2 == 1 {
            faces.push((3, 1));
        }
        let pinned = faces[rng.gen_range(0..faces.len())].0;
        let fv = match FaceVector::with_pinned(faces.iter().copied(), pinned) {
            Ok(fv) => fv,
            Err(DofError::TooFewVertices(_)) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let b = fv.dof_balance().map_err(|e| e.to_string())?;
        check(b.freedoms == b.relations && b.balanced, || format!("{faces:?}: {b:?}"))?;
        check(b.freedoms == oracle::dof_oracle(&faces, pinned), || format!("{faces:?}: oracle mismatch"))?;
        tested += 1;
    }
    Ok("pyramid 7=7, cube 16=16, tetrahedron 5=5, 10000 random face vectors balanced".into())
}

fn branch_formulas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut crossings = 0;
    for _ in 0..10_000 {
        let (a2, b2): (f64, f64) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let (a1, b1) = branch_nonconvex(a2, b2).map_err(|e| e.to_string())?;
        let det = a2 * b1 - b2 * a1;
        let scale = (a2 * b1).abs() + (b2 * a1).abs() + b2.abs();
        check((det + b2).abs() <= 1e-12 * scale, || format!("det at ({a2}, {b2})"))?;
        if b1 > 0.0 && b2 > 0.0 {
            let hit = segments_intersect(
                Point2::origin(),
                Point2::new(a1, b1),
                Point2::new(1.0, 0.0),
                Point2::new(a2, b2),
                1e-12,
            );
            check(hit, || format!("AD and BC disjoint at ({a2}, {b2})"))?;
            crossings += 1;
        }
    }
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let (a1, b1, c3) = (rng.gen_range(-3.0..3.0), rng.gen_range(0.01..3.0), rng.gen_range(0.01..3.0));
        let l = branch_parallelogram(a1, b1, c3).map_err(|e| e.to_string())?.edge_lengths(false);
        worst = worst
            .max((l.get(Edge::EA) - l.get(Edge::EC)).abs())
            .max((l.get(Edge::EB) - l.get(Edge::ED)).abs());
    }
    check(worst <= 1e-14, || format!("parallelogram apex imbalance {worst:e}"))?;
    Ok(format!("det identity on 10000 inputs, {crossings} crossings checked, parallelogram imbalance {worst:.1e}"))
}

fn rows(m: &Matrix7) -> [[f64; 7]; 7] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[(i, j)]))
}

fn numerical_hygiene() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_fd = 0.0f64;
    for _ in 0..100 {
        let c: [f64; 7] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        let targets = random_length_set(&mut rng).normalized().squared();
        let fd = oracle::fd_jacobian(c, targets, 1e-6);
        let j = jacobian(&CoordVector(c));
        let err: f64 = (0..7).flat_map(|i| (0..7).map(move |k| (j[(i, k)] - fd[i][k]).powi(2))).sum();
        worst_fd = worst_fd.max(err.sqrt() / j.norm());
    }
    check(worst_fd <= 1e-6, || format!("finite-difference mismatch {worst_fd:e}"))?;

    let mut worst_sv = 0.0f64;
    for i in 0..200 {
        let m = if i < 100 {
            Matrix7::from_fn(|_, _| rng.gen_range(-1.0..1.0))
        } else {
            jacobian(&CoordVector::from(&random_convex_pyramid(&mut rng)))
        };
        let ours = rank_analysis(&m, DEFAULT_RANK_TOL).singular_values;
        let reference = oracle::singular_values_oracle(rows(&m));
        for (s, o) in ours.iter().zip(reference) {
            worst_sv = worst_sv.max((s - o).abs() / ours[0]);
        }
    }
    check(worst_sv <= 1e-9, || format!("singular value mismatch {worst_sv:e}"))?;
    Ok(format!("Jacobian vs central differences {worst_fd:.1e}, SVD vs Jacobi eigen oracle {worst_sv:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("sweep profile of the worked example", example_profile),
        ("three-realization window", realization_window),
        ("at most four realizations, round trip", realization_bound),
        ("flexible crossed pyramid", flexible_example),
        ("rigidity of convex pyramids", convex_rigidity),
        ("freedom/relation identity", dof_identity),
        ("branch formulas", branch_formulas),
        ("numerical hygiene", numerical_hygiene),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
