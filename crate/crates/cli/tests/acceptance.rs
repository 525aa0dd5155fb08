//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! fails. Run with `cargo test -p maxspan-cli --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use maxspan::scheduling::{latest_schedule, max_completion_spread, max_completion_spread_constrained, max_initiation_spread};
use maxspan::verification::{brute_force_max, brute_force_subeigen, GridSpec};
use maxspan::{
    solve_subeigen, solve_unconstrained, IndexPair, Matrix, MaxPlus, MaxTimes, MinPlus, ProblemInstance, Semifield,
    SubeigenGenerator, Vector,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

macro_rules! ensure_eq {
    ($left:expr, $right:expr) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{} = {:?}, expected {:?}", stringify!($left), l, r));
        }
    }};
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn mp(v: i64) -> MaxPlus {
    MaxPlus::finite(v)
}

fn v(values: &[i64]) -> Vector<MaxPlus> {
    Vector::from_ints(values).unwrap()
}

fn m(rows: &[&[i64]]) -> Matrix<MaxPlus> {
    Matrix::from_ints(rows).unwrap()
}

const Z: Option<i64> = None;

fn example_a() -> Matrix<MaxPlus> {
    m(&[&[4, 1, 1], &[2, 2, 0], &[0, 1, 3]])
}

fn example_c() -> Matrix<MaxPlus> {
    Matrix::from_int_options(&[&[Z, Some(-2), Some(1)], &[Some(0), Z, Some(2)], &[Some(-1), Z, Z]]).unwrap()
}

fn example_1() -> Check {
    let a = example_a();
    let report = ok(max_completion_spread(&a))?;
    ensure_eq!(report.delta, mp(4));
    ensure_eq!(report.pairs, vec![IndexPair { k: 0, s: 2 }]);
    let fam = &report.families[0];
    ensure_eq!(fam.pinned_index(), 0);
    ensure_eq!(fam.pinned_value(), mp(0));
    ensure_eq!(fam.upper_bounds(), &v(&[0, -1, -3]));
    let schedules = ok(latest_schedule(&report, None, Some(&a), MaxPlus::ONE))?;
    ensure_eq!(schedules.len(), 1);
    ensure_eq!(schedules[0].initiation, v(&[0, -1, -3]));
    ensure_eq!(schedules[0].completion, Some(v(&[4, 2, 0])));
    ensure_eq!(schedules[0].span, mp(4));
    Ok("delta 4, (k,s) = (1,3), x = (0,-1,-3), y = (4,2,0)".into())
}

fn example_2() -> Check {
    let c = example_c();
    ensure_eq!(ok(c.tr_closure())?, mp(0));
    let out = ok(max_initiation_spread(&c))?;
    ensure_eq!(out.closure, m(&[&[0, -2, 1], &[1, 0, 2], &[-1, -3, 0]]));
    ensure_eq!(out.report.delta, mp(3));
    ensure_eq!(out.report.pairs, vec![IndexPair { k: 1, s: 2 }]);
    let fam = &out.report.families[0];
    ensure_eq!(fam.pinned_index(), 1);
    ensure_eq!(fam.pinned_value(), mp(3));
    ensure_eq!(fam.upper_bounds(), &v(&[1, 3, 0]));
    let schedules = ok(latest_schedule(&out.report, Some(&out.closure), None, MaxPlus::ONE))?;
    ensure_eq!(schedules.len(), 1);
    ensure_eq!(schedules[0].initiation, v(&[1, 3, 0]));
    Ok("Tr(C) = 0, C* exact, delta 3, (k,s) = (2,3), x = (1,3,0)".into())
}

fn example_3() -> Check {
    let a = example_a();
    let c = example_c();
    let out = ok(max_completion_spread_constrained(&a, &c))?;
    let d = ok(a.mul(&out.closure))?;
    ensure_eq!(d, m(&[&[4, 2, 5], &[3, 2, 4], &[2, 1, 3]]));
    ensure_eq!(out.report.delta, mp(2));
    ensure_eq!(out.report.maximizing_columns(), vec![0, 2]);
    ensure_eq!(out.report.pairs, vec![IndexPair { k: 0, s: 2 }, IndexPair { k: 2, s: 2 }]);
    // each family separately maps to the same schedule
    for fam in &out.report.families {
        let x = ok(out.to_x(&fam.latest()))?;
        ensure_eq!(x, v(&[-2, -1, -3]));
    }
    let schedules = ok(latest_schedule(&out.report, Some(&out.closure), Some(&a), MaxPlus::ONE))?;
    ensure_eq!(schedules.len(), 1);
    ensure_eq!(schedules[0].initiation, v(&[-2, -1, -3]));
    ensure_eq!(schedules[0].completion, Some(v(&[2, 1, 0])));
    ensure_eq!(schedules[0].span, mp(2));
    Ok("D exact, delta 2, k in {1,3} with s = 3, one schedule after dedup".into())
}

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, lo: i64, hi: i64, zero_p: f64) -> Matrix<MaxPlus> {
    let rows = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.random_bool(zero_p) { MaxPlus::ZERO } else { mp(rng.random_range(lo..=hi)) })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).unwrap()
}

fn random_vector(rng: &mut StdRng, dim: usize, lo: i64, hi: i64) -> Vector<MaxPlus> {
    Vector::new((0..dim).map(|_| mp(rng.random_range(lo..=hi))).collect()).unwrap()
}

/// `A` without zero entries, `B` column regular, `p`, `q` regular.
fn random_instance(rng: &mut StdRng, max_dim: usize, lo: i64, hi: i64) -> ProblemInstance<MaxPlus> {
    let n = rng.random_range(1..=max_dim);
    let m = rng.random_range(1..=max_dim);
    let l = rng.random_range(1..=max_dim);
    let a = random_matrix(rng, m, n, lo, hi, 0.0);
    let mut b = random_matrix(rng, l, n, lo, hi, 0.3).to_rows();
    for j in 0..n {
        if b.iter().all(|row| row[j].is_zero()) {
            let i = rng.random_range(0..l);
            b[i][j] = mp(rng.random_range(lo..=hi));
        }
    }
    let b = Matrix::from_rows(b).unwrap();
    let p = random_vector(rng, m, lo, hi);
    let q = random_vector(rng, l, lo, hi);
    ProblemInstance::new(a, b, p, q).unwrap()
}

fn upper_bound() -> Check {
    let mut rng = StdRng::seed_from_u64(4);
    let (instances, points) = (1000, 100);
    let mut attained = 0usize;
    for case in 0..instances {
        let inst = random_instance(&mut rng, 5, -10, 10);
        let report = ok(solve_unconstrained(&inst))?;
        for _ in 0..points {
            let x = random_vector(&mut rng, inst.dim(), -30, 30);
            let value = ok(inst.evaluate_objective(&x))?;
            ensure!(value.leq(report.delta), "instance {case}: objective {value} at {x} exceeds delta {}", report.delta);
            attained += usize::from(value == report.delta);
        }
    }
    Ok(format!("{instances} instances x {points} points, {attained} random points hit the optimum"))
}

fn oracle_completeness() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    let instances = 200;
    let (mut maximizers, mut grid_points, mut touching) = (0usize, 0u128, 0usize);
    for case in 0..instances {
        let inst = random_instance(&mut rng, 3, -5, 5);
        let report = ok(solve_unconstrained(&inst))?;
        let grid = GridSpec::new(inst.dim(), -30, 30, 0);
        let oracle = ok(brute_force_max(&inst, &grid))?;
        ensure!(oracle.max == report.delta, "instance {case}: oracle max {} != delta {}", oracle.max, report.delta);
        for x in &oracle.argmax {
            ensure!(ok(report.contains(x))?, "instance {case}: maximizer {x} lies in no family");
        }
        // every family member on the grid is an oracle maximizer, so every
        // other grid point is strictly below delta
        let mut members = 0usize;
        let mut failure = None;
        ok(grid.for_each(|x| match report.contains(&v(x)) {
            Ok(true) => members += 1,
            Ok(false) => {}
            Err(e) => failure = Some(e.to_string()),
        }))?;
        if let Some(e) = failure {
            return Err(e);
        }
        ensure!(members == oracle.argmax.len(), "instance {case}: {members} family points vs {} maximizers", oracle.argmax.len());
        maximizers += members;
        grid_points += grid.size();
        touching += usize::from(oracle.touches_upper_boundary);
    }
    Ok(format!(
        "{instances} instances, {grid_points} grid points, {maximizers} maximizers all in families ({touching} reach the grid edge)"
    ))
}

fn random_irreducible(rng: &mut StdRng) -> Matrix<MaxPlus> {
    loop {
        let n = rng.random_range(1..=4);
        let c = random_matrix(rng, n, n, -6, 2, 0.4);
        if c.is_irreducible().unwrap() {
            return c;
        }
    }
}

fn subeigen_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(6);
    let (mut feasible, mut infeasible, mut grid_solutions) = (0usize, 0usize, 0usize);
    let mut attempts = 0;
    while feasible < 200 || infeasible < 50 {
        attempts += 1;
        ensure!(attempts < 100_000, "could not sample enough instances");
        let c = random_irreducible(&mut rng);
        let n = c.rows();
        let gen = ok(solve_subeigen(&c))?;
        let grid = GridSpec::new(n, -12, 12, 0);
        match &gen {
            SubeigenGenerator::Solvable { closure } => {
                if feasible >= 200 {
                    continue;
                }
                feasible += 1;
                for _ in 0..50 {
                    let x = ok(gen.generate(&random_vector(&mut rng, n, -10, 10)))?;
                    ensure!(ok(c.mul_vec(&x))?.entrywise_leq(&x), "C x <= x fails for x = {x}, C = {c}");
                }
                let sols = ok(brute_force_subeigen(&c, &grid))?;
                ensure!(!sols.is_empty(), "no grid solution for solvable C = {c}");
                for x in &sols {
                    ensure!(ok(closure.mul_vec(x))? == *x, "grid solution {x} is not fixed by C*, C = {c}");
                }
                grid_solutions += sols.len();
            }
            SubeigenGenerator::NoRegularSolution { tr } => {
                if infeasible >= 50 {
                    continue;
                }
                infeasible += 1;
                ensure!(!tr.leq(MaxPlus::ONE), "reported Tr {tr} is not above one");
                let sols = ok(brute_force_subeigen(&c, &grid))?;
                ensure!(sols.is_empty(), "grid solution {} for infeasible C = {c}", sols[0]);
            }
        }
    }
    Ok(format!(
        "{feasible} solvable (50 generated u each, {grid_solutions} grid solutions fixed by C*), {infeasible} with Tr > 0 and empty grid"
    ))
}

fn scalar_axioms<S: Semifield>(a: S, b: S, c: S) -> Result<(), String> {
    let name = || format!("a = {a}, b = {b}, c = {c}");
    ensure!(a.add(b).add(c) == a.add(b.add(c)), "add associativity, {}", name());
    ensure!(a.mul(b).mul(c) == a.mul(b.mul(c)), "mul associativity, {}", name());
    ensure!(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)), "distributivity, {}", name());
    ensure!(a.add(b) == b.add(a) && a.mul(b) == b.mul(a), "commutativity, {}", name());
    ensure!(a.add(a) == a, "idempotency, {}", name());
    ensure!(a.leq(a.add(b)) && b.leq(a.add(b)), "extremal property, {}", name());
    if a.leq(b) {
        ensure!(a.add(c).leq(b.add(c)) && a.mul(c).leq(b.mul(c)), "isotonicity, {}", name());
        if !a.is_zero() {
            ensure!(ok(b.inv())?.leq(ok(a.inv())?), "inverse antitone, {}", name());
        }
    }
    Ok(())
}

fn vec_of<S: Semifield>(rng: &mut StdRng, dim: usize, sample: &impl Fn(&mut StdRng) -> S) -> Vector<S> {
    Vector::new((0..dim).map(|_| sample(rng)).collect()).unwrap()
}

fn mat_of<S: Semifield>(rng: &mut StdRng, rows: usize, cols: usize, sample: &impl Fn(&mut StdRng) -> S) -> Matrix<S> {
    Matrix::new(rows, cols, (0..rows * cols).map(|_| sample(rng)).collect()).unwrap()
}

fn matrix_identities<S: Semifield>(
    rng: &mut StdRng,
    any: &impl Fn(&mut StdRng) -> S,
    nonzero: &impl Fn(&mut StdRng) -> S,
) -> Result<(), String> {
    let n = rng.random_range(1..=4);
    let x = vec_of(rng, n, nonzero);
    let y = vec_of(rng, n, nonzero);
    let xx = ok(x.as_column().mul(&ok(x.conjugate())?.as_row()))?;
    ensure!(ok(Matrix::identity(n))?.entrywise_leq(&xx), "x x- >= I fails for x = {x}");
    let lhs = ok(ok(x.outer(&ok(y.conjugate())?))?.conjugate_transpose())?;
    ensure!(lhs == ok(y.outer(&ok(x.conjugate())?))?, "(x y-)- = y x- fails for x = {x}, y = {y}");
    let z_dim = rng.random_range(1..=4);
    let z = vec_of(rng, z_dim, any);
    let w = vec_of(rng, n, any);
    ensure!(ok(z.outer(&w))?.norm() == z.norm().mul(w.norm()), "outer product norm fails for {z}, {w}");

    let a = mat_of(rng, n, 3, nonzero);
    let b = ok(a.add(&mat_of(rng, n, 3, any)))?;
    ensure!(
        ok(b.conjugate_transpose())?.entrywise_leq(&ok(a.conjugate_transpose())?),
        "conjugation not antitone for A = {a}, B = {b}"
    );

    let c = mat_of(rng, n, n, &|r: &mut StdRng| if r.random_bool(0.5) { S::zero() } else { any(r) });
    if ok(c.is_irreducible())? {
        ensure!(ok(c.star_series(n))?.find_zero_entry().is_none(), "I + A + ... + A^(n-1) has a zero for A = {c}");
    }
    if let Ok(star) = c.asterate() {
        ensure!(ok(Matrix::identity(n))?.entrywise_leq(&star), "C* >= I fails for C = {c}");
    }
    Ok(())
}

fn run_axioms<S: Semifield>(
    rng: &mut StdRng,
    scalar_cases: usize,
    matrix_cases: usize,
    any: impl Fn(&mut StdRng) -> S,
    nonzero: impl Fn(&mut StdRng) -> S,
) -> Result<usize, String> {
    for _ in 0..scalar_cases {
        scalar_axioms(any(rng), any(rng), any(rng))?;
    }
    for _ in 0..matrix_cases {
        matrix_identities(rng, &any, &nonzero)?;
    }
    Ok(scalar_cases + matrix_cases)
}

fn axiom_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    let max_plus = |r: &mut StdRng| mp(r.random_range(-1000..=1000));
    let min_plus = |r: &mut StdRng| MinPlus::new(r.random_range(-1000..=1000) as f64).unwrap();
    // powers of two keep products exact
    let max_times = |r: &mut StdRng| MaxTimes::new(2f64.powi(r.random_range(-30..=30))).unwrap();
    let mut total = 0;
    total += run_axioms(
        &mut rng,
        3000,
        1000,
        |r| if r.random_bool(0.1) { MaxPlus::ZERO } else { max_plus(r) },
        max_plus,
    )?;
    total += run_axioms(
        &mut rng,
        3000,
        1000,
        |r| if r.random_bool(0.1) { MinPlus::ZERO } else { min_plus(r) },
        min_plus,
    )?;
    total += run_axioms(
        &mut rng,
        3000,
        1000,
        |r| if r.random_bool(0.1) { MaxTimes::ZERO } else { max_times(r) },
        max_times,
    )?;
    ensure!(total >= 10_000, "only {total} cases");
    Ok(format!("{total} randomized cases over max-plus, min-plus, max-times"))
}

fn cli_goldens() -> Check {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests");
    let cases = [
        ("sf", "ex1.json", &[][..], "ex1.json"),
        ("sf", "ex1.json", &["--latest"][..], "ex1_latest.json"),
        ("ss", "ex2.json", &[][..], "ex2.json"),
        ("ss", "ex2.json", &["--latest"][..], "ex2_latest.json"),
        ("combined", "ex3.json", &[][..], "ex3.json"),
        ("combined", "ex3.json", &["--latest"][..], "ex3_latest.json"),
        ("ss", "bad.json", &[][..], "bad.json"),
    ];
    for (sub, input, extra, golden) in cases {
        let out = ok(Command::new(env!("CARGO_BIN_EXE_maxspan"))
            .arg(sub)
            .arg("--input")
            .arg(root.join("data").join(input))
            .args(extra)
            .output())?;
        let expected = ok(std::fs::read(root.join("golden").join(golden)))?;
        ensure!(out.stdout == expected, "{sub} {input} {extra:?}: output differs from golden {golden}");
        let code = if input == "bad.json" { 2 } else { 0 };
        ensure!(out.status.code() == Some(code), "{sub} {input}: exit {:?}, expected {code}", out.status.code());
    }
    Ok("6 example outputs byte-identical, infeasible case exits 2".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("example 1: completion spread", Duration::from_secs(1), example_1),
        ("example 2: initiation spread", Duration::from_secs(1), example_2),
        ("example 3: combined constraints", Duration::from_secs(1), example_3),
        ("objective never exceeds delta", Duration::from_secs(60), upper_bound),
        ("oracle equality and completeness", Duration::from_secs(120), oracle_completeness),
        ("solutions of C x <= x", Duration::from_secs(120), subeigen_suite),
        ("semifield and matrix identities", Duration::from_secs(30), axiom_suite),
        ("CLI golden files", Duration::from_secs(60), cli_goldens),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
