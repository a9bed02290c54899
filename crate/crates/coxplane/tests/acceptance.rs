//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use coxplane_core::coxeter::{block_diagonalize_check, cartan_inverse, cartan_matrix};
use coxplane_core::projection::{
    debruijn_vertices, dihedral_generators, hypercube_decompose, project_parallel, pythagoras_defect,
};
use coxplane_core::quasilattice::{
    golden_radius, strip_accept, strip_project, window_from_voronoi, StripConfig, StripLattice,
};
use coxplane_core::weyl::{
    dual_vertices, generate_group, generators, is_multiplication_closed, orbit, satisfies_a3_presentation,
    satisfies_a4_presentation, signed_first_components, symbolic_orbit, voronoi_vertices, DualPolytope, LatticeKind,
    SymbolicVector,
};
use coxplane_core::{Basis, Diagram, GoldenRational, GroupKind, LatticeVector, Matrix, PointSet2D, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, detail: String) -> Verdict {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn weight(d: Diagram, a: &[i64]) -> LatticeVector {
    LatticeVector::from_ints(d, Basis::Weight, a).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn group_orders() -> Verdict {
    let found: Vec<usize> = GroupKind::ALL.iter().map(|k| generate_group(*k).len()).collect();
    ensure(found == [24, 48, 120, 240, 10], format!("W(A3), Aut(A3), W(A4), Aut(A4), W(H2) = {found:?}"))
}

fn orbit_sizes() -> Verdict {
    let table: [(&[i64], usize); 11] = [
        (&[1, 0, 0, 0], 5),
        (&[0, 1, 0, 0], 10),
        (&[0, 0, 1, 0], 10),
        (&[0, 0, 0, 1], 5),
        (&[1, 0, 0, 1], 20),
        (&[0, 1, 1, 0], 30),
        (&[1, 1, 1, 1], 120),
        (&[1, 0, 0], 4),
        (&[0, 1, 0], 6),
        (&[1, 0, 1], 12),
        (&[1, 1, 1], 24),
    ];
    let mut bad = Vec::new();
    for (hw, n) in table {
        let d = if hw.len() == 3 { Diagram::A3 } else { Diagram::A4 };
        let got = orbit(&weight(d, hw)).map_err(|e| e.to_string())?.len();
        if got != n {
            bad.push(format!("{hw:?}: {got} != {n}"));
        }
    }
    ensure(bad.is_empty(), if bad.is_empty() { "11 orbit sizes match".into() } else { bad.join("; ") })
}

fn voronoi_sets() -> Verdict {
    let counts = [
        voronoi_vertices(LatticeKind::A4Root).len(),
        dual_vertices(DualPolytope::A4WeightVoronoi).len(),
        voronoi_vertices(LatticeKind::A3Root).len(),
        voronoi_vertices(LatticeKind::A3Weight).len(),
    ];
    ensure(
        counts == [30, 30, 14, 24],
        format!("A4 root cell, its weight-cell dual, A3 root cell, A3 weight cell = {counts:?}"),
    )
}

const TRANSCRIBED: &str = include_str!("../../core/tests/data/symbolic_orbit.tsv");

fn symbolic_table() -> Verdict {
    // The transcription lacks 61 rows and has two misprinted cells.
    let corrections = [
        ("a4\t-a2-a3\t-a1-a2\ta1", "a4\t-a3-a4\t-a1-a2\ta1"),
        ("a1+a2+a3+a4\t-a2-a3-a4\ta2\ta1", "a1+a2+a3+a4\t-a2-a3-a4\ta2\ta3"),
    ];
    let parse =
        |line: &str| SymbolicVector::parse(&line.split('\t').collect::<Vec<_>>()).ok_or(format!("bad row {line:?}"));
    let orbit = symbolic_orbit();
    let mut distinct = orbit.clone();
    distinct.dedup();
    let mut present = 0;
    let mut rows = 0;
    for line in TRANSCRIBED.lines().map(str::trim_end).filter(|l| !l.is_empty()) {
        rows += 1;
        let line = corrections.iter().find(|(bad, _)| *bad == line).map_or(line, |(_, fixed)| *fixed);
        present += orbit.binary_search(&parse(line)?).is_ok() as usize;
    }
    let spots = ["a1\ta2\ta3\ta4", "a2+a3+a4\t-a4\t-a1-a2-a3\ta1+a2", "-a4\t-a3\t-a2\t-a1"];
    let spot_ok =
        spots.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?.iter().all(|s| orbit.binary_search(s).is_ok());
    ensure(
        distinct.len() == 120 && present == rows && spot_ok,
        format!(
            "{} distinct forms; {present}/{rows} transcribed rows present (2 misprints corrected); spot rows {}",
            distinct.len(),
            if spot_ok { "present" } else { "missing" }
        ),
    )
}

fn cartan_identities() -> Verdict {
    let check = |d: Diagram, rows: &[&[i64]], den: i64| {
        let inv = cartan_inverse(d).unwrap();
        let id = (&cartan_matrix(d).unwrap() * &inv).is_identity();
        id && rows.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &x)| *inv.get(i, j) == q(x, den)))
    };
    let a3 = check(Diagram::A3, &[&[3, 2, 1], &[2, 4, 2], &[1, 2, 3]], 4);
    let a4 = check(Diagram::A4, &[&[4, 3, 2, 1], &[3, 6, 4, 2], &[2, 4, 6, 3], &[1, 2, 3, 4]], 5);
    let m = block_diagonalize_check(Diagram::A4).map_err(|e| e.to_string())?;
    let t = GoldenRational::tau();
    let s = GoldenRational::sigma();
    let (two, z) = (GoldenRational::from_integer(2), GoldenRational::zero());
    let expected = Matrix::from_rows(vec![
        vec![two.clone(), -&t, z.clone(), z.clone()],
        vec![-&t, two.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), two.clone(), -&s],
        vec![z.clone(), z.clone(), -&s, two],
    ])
    .unwrap();
    ensure(a3 && a4 && m == expected, format!("C⁻¹(A3) {a3}, C⁻¹(A4) {a4}, X C Xᵀ = {m}"))
}

fn projection_identities() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let n = 10_000;
    let pyth = (0..n)
        .filter(|_| {
            let a: Vec<i64> = (0..4).map(|_| rng.gen_range(-100..=100)).collect();
            pythagoras_defect(&weight(Diagram::A4, &a)).unwrap().is_zero()
        })
        .count();
    let r = 0.4f64.sqrt();
    let vs = debruijn_vertices();
    let pentagon = vs.len() == 5
        && vs.iter().enumerate().all(|(k, (_, p))| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
            (p.fx - r * th.cos()).abs() < 1e-12
                && (p.fy - r * th.sin()).abs() < 1e-12
                && p.norm_squared() == golden_radius(0)
        });
    let d = dihedral_generators();
    let power = d.product().pow(5).is_identity();
    let rot = &d.r2_orth * &d.r1_orth;
    let (a1, a2) = (0.4 * std::f64::consts::PI, 0.8 * std::f64::consts::PI);
    let expected = [
        [a1.cos(), a1.sin(), 0.0, 0.0],
        [-a1.sin(), a1.cos(), 0.0, 0.0],
        [0.0, 0.0, a2.cos(), a2.sin()],
        [0.0, 0.0, -a2.sin(), a2.cos()],
    ];
    let dev = (0..16).map(|k| (rot.get(k / 4, k % 4) - expected[k / 4][k % 4]).abs()).fold(0.0, f64::max);
    ensure(
        pyth == n && pentagon && power && dev < 1e-12,
        format!("Pythagoras {pyth}/{n}; pentagon {pentagon}; (R1R2)^5 = I {power}; 72°/144° deviation {dev:.1e}"),
    )
}

fn hypercube() -> Verdict {
    let h = hypercube_decompose();
    let reps = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
    let hist: Vec<usize> = reps.iter().map(|k| h.get(k).copied().unwrap_or(0)).collect();
    let total: usize = h.values().sum();
    ensure(hist == [2, 5, 10, 10, 5] && total == 32 && h.len() == 5, format!("histogram {hist:?}, total {total}"))
}

fn decagrams() -> Verdict {
    let pts = voronoi_vertices(LatticeKind::A4Root).iter().map(|v| project_parallel(v).unwrap()).collect();
    let hist = PointSet2D::new(pts, vec![]).radius_histogram();
    let base = golden_radius(0);
    let expected = vec![
        (&base * &GoldenRational::sigma().square(), 10),
        (base.clone(), 10),
        (&base * &GoldenRational::tau().square(), 10),
    ];
    // Float oracle: radii √(2/5)·{−σ, 1, τ}.
    let t = (1.0 + 5f64.sqrt()) / 2.0;
    let float_ok =
        hist.iter().zip([1.0 / t, 1.0, t]).all(|((r, _), k)| (r.to_f64().sqrt() - 0.4f64.sqrt() * k).abs() < 1e-12);
    let text: Vec<String> = hist.iter().map(|(r, n)| format!("{r} ×{n}")).collect();
    ensure(hist == expected && float_ok, format!("squared radii {}", text.join(", ")))
}

fn strip_projection() -> Verdict {
    let gens = generators(GroupKind::WH2);
    let r1r2 = gens[0].then(&gens[1]);
    let mut lines = Vec::new();
    let mut ok = true;
    for k in 0..=6 {
        let cfg =
            StripConfig::new(StripLattice::Root, window_from_voronoi(StripLattice::Root), golden_radius(k)).unwrap();
        let start = Instant::now();
        let accepted = strip_accept(&cfg).map_err(|e| e.to_string())?;
        let set = strip_project(&cfg).map_err(|e| e.to_string())?;
        let secs = start.elapsed().as_secs_f64();
        let invariant = [&gens[0], &r1r2].iter().all(|g| {
            let mut image: Vec<[i64; 4]> = accepted
                .iter()
                .map(|c| {
                    let v = LatticeVector::from_ints(Diagram::A4, Basis::Root, c).unwrap();
                    let w = g.apply_vector(&v).int_coords().unwrap();
                    [w[0], w[1], w[2], w[3]]
                })
                .collect();
            image.sort();
            image == accepted
        });
        let origin = accepted.binary_search(&[0, 0, 0, 0]).is_ok();
        let distinct = set.collisions == 0 && set.len() == accepted.len();
        ok &= invariant && origin && distinct && secs < 60.0;
        lines.push(format!("τ^{k}: {} points {secs:.2}s", accepted.len()));
        if !(invariant && origin && distinct) {
            lines.push(format!("invariant {invariant} origin {origin} distinct {distinct}"));
        }
    }
    ensure(ok, format!("root window (2/5)τ², par² = (2/5)τ^k: {}", lines.join(", ")))
}

fn membership() -> Verdict {
    let a3 = generate_group(GroupKind::WA3).iter().filter(|e| satisfies_a3_presentation(e)).count();
    let w4 = generate_group(GroupKind::WA4);
    let a4 = w4.iter().filter(|e| satisfies_a4_presentation(e)).count();
    let ps = signed_first_components(&w4);
    let closed = is_multiplication_closed(&ps);
    ensure(
        a3 == 24 && a4 == 120 && ps.len() == 120 && closed,
        format!("W(A3) forms {a3}/24; W(A4) relation {a4}/120; {} first components, closed {closed}", ps.len()),
    )
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_coxplane")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("coxplane {} exited with {}", args.join(" "), out.status));
    }
    Ok(out.stdout)
}

fn read_dir_bytes(dir: &Path) -> Result<Vec<(String, Vec<u8>)>, String> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .map_err(|e| e.to_string())?
        .map(|e| {
            let e = e.map_err(|e| e.to_string())?;
            Ok((e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).map_err(|e| e.to_string())?))
        })
        .collect::<Result<_, String>>()?;
    files.sort();
    Ok(files)
}

fn determinism() -> Verdict {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let runs: Vec<_> = ["a", "b"]
        .iter()
        .map(|name| {
            let dir = tmp.path().join(name);
            run_cli(&["figure", "--all", "--out", dir.to_str().unwrap()])?;
            read_dir_bytes(&dir)
        })
        .collect::<Result<_, String>>()?;
    let figures_same = runs[0] == runs[1] && runs[0].len() == 24;
    let (v1, v2) = std::thread::scope(|s| {
        let a = s.spawn(|| run_cli(&["verify", "--suite", "all"]));
        let b = s.spawn(|| run_cli(&["verify", "--suite", "all"]));
        (a.join().unwrap(), b.join().unwrap())
    });
    let (v1, v2) = (v1?, v2?);
    ensure(
        figures_same && v1 == v2,
        format!(
            "{} figure files identical {figures_same}; verify report ({} bytes) identical {}",
            runs[0].len(),
            v1.len(),
            v1 == v2
        ),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("group orders", group_orders),
        ("orbit sizes", orbit_sizes),
        ("Voronoi vertex sets", voronoi_sets),
        ("symbolic 120-vector orbit", symbolic_table),
        ("Cartan identities", cartan_identities),
        ("projection identities", projection_identities),
        ("hypercube branching", hypercube),
        ("nested decagrams", decagrams),
        ("strip projection", strip_projection),
        ("membership invariants", membership),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {}: {name} PASS ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: {name} FAIL ({detail}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
