//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. The large E-table is built once through the on-disk cache
//! in a temporary directory and shared by every criterion that needs it.

use std::f64::consts::{PI, TAU};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use ezeta::build::{load_or_build, version_tag, TableSpec};
use ezeta::cache::CacheHandle;
use ezeta_core::afe::afe_meansquare_fit;
use ezeta_core::cf::{cf_expand, convergent_gap_check, determinant_identity_holds, lemma1_ratio};
use ezeta_core::divisor::{delta_short_interval_sq, delta_summatory_identity, divisor_sieve, r1_of};
use ezeta_core::fit::dyadic_envelope;
use ezeta_core::mean_square::{e_of, g_of, ErrorTermTable};
use ezeta_core::summatory::{e_short_interval_sq, moment_fit, theorem2_decomposition};
use ezeta_core::wilton::{theorem1_ratio, transform_residual, wilton_sum, Eta};
use ezeta_core::zeta::{zeta_sq, ZetaEvalConfig};
use ezeta_core::EULER_GAMMA;

/// Quadrature tolerance of the shared table.
const TABLE_TOL: f64 = 1e-6;
/// Covers `2T + U` for `T = 10^4`, `U = 50`.
const TABLE_X_MAX: f64 = 20_050.0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

struct Ctx {
    cache: CacheHandle,
    cache_dir: PathBuf,
    table: Option<(ErrorTermTable, Duration)>,
}

impl Ctx {
    fn table(&mut self) -> &ErrorTermTable {
        if self.table.is_none() {
            let start = Instant::now();
            let (t, _) = load_or_build(&self.cache, &TableSpec::new(TABLE_X_MAX, TABLE_TOL), 0).expect("shared table builds");
            self.table = Some((t, start.elapsed()));
        }
        &self.table.as_ref().unwrap().0
    }

    fn build_time(&self) -> Duration {
        self.table.as_ref().map_or(Duration::ZERO, |t| t.1)
    }
}

fn trial_division(n: u64) -> u32 {
    let mut c = 0;
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            c += if i * i == n { 1 } else { 2 };
        }
        i += 1;
    }
    c
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let t = divisor_sieve(10_000).unwrap();
    let mismatches = (1..=10_000u64).filter(|&n| t.d(n) != trial_division(n)).count();
    let secs = start.elapsed().as_secs_f64();
    let prefix = t.prefix(10);
    outcome(
        mismatches == 0 && prefix == 27 && secs < 1.0,
        format!("mismatches={mismatches} prefix(10)={prefix} time={secs:.3}s"),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let t = divisor_sieve(100_000).unwrap();
    let mut worst = 0.0f64;
    for x in [100u64, 1000, 10_000] {
        worst = worst.max(delta_summatory_identity(x, &t).unwrap().abs() / (x as f64).ln());
    }
    let r1: Vec<(f64, f64)> = (1000..=100_000u64).map(|x| (x as f64, r1_of(x as f64, &t).unwrap())).collect();
    let slope = dyadic_envelope(&r1).unwrap().slope().unwrap().slope;
    let changes = r1.windows(2).filter(|w| w[0].1.signum() != w[1].1.signum()).count();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        worst <= 5.0 && (0.70..=0.80).contains(&slope) && changes >= 1 && secs < 30.0,
        format!("max |residual|/log x={worst:.4} R1 envelope slope={slope:.4} R1 sign changes={changes} time={secs:.1}s"),
    )
}

fn criterion_3() -> Outcome {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/mean_square.csv");
    let text = std::fs::read_to_string(path).expect("oracle data present");
    let oracle: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    let cfg = ZetaEvalConfig::default();
    let mut worst_e = 0.0f64;
    for n in [10usize, 50, 200] {
        let row = &oracle[n];
        assert_eq!(row[0] as usize, n);
        worst_e = worst_e.max((e_of(n as f64, &cfg, 1e-10).unwrap() - row[2]).abs());
    }
    let h = 1e-3;
    let mut worst_d = 0.0f64;
    for t in [20.0, 100.0, 500.0] {
        let fd = (e_of(t + h, &cfg, 1e-11).unwrap() - e_of(t - h, &cfg, 1e-11).unwrap()) / (2.0 * h);
        let want = zeta_sq(t, &cfg).unwrap() - (t / TAU).ln() - 2.0 * EULER_GAMMA;
        worst_d = worst_d.max((fd - want).abs());
    }
    outcome(
        worst_e <= 1e-5 && worst_d <= 1e-3,
        format!("max |E - oracle|={worst_e:.2e} max |dE/dt - identity|={worst_d:.2e}"),
    )
}

fn g_profile(table: &ErrorTermTable) -> (f64, usize) {
    let gs: Vec<(f64, f64)> = (100..=10_000u64).map(|x| (x as f64, g_of(x as f64, table).unwrap())).collect();
    let sup = gs.iter().map(|&(x, g)| g.abs() / x.powf(0.75)).fold(0.0, f64::max);
    let changes = gs.windows(2).filter(|w| w[0].1.signum() != w[1].1.signum()).count();
    (sup, changes)
}

fn criterion_4(ctx: &mut Ctx) -> Outcome {
    let (sup, changes) = g_profile(ctx.table());
    let (finer, _) = load_or_build(&ctx.cache, &TableSpec::new(10_000.0, TABLE_TOL / 2.0), 0).unwrap();
    let (sup_half, _) = g_profile(&finer);
    let change = (sup_half - sup).abs() / sup;
    outcome(
        sup.is_finite() && change < 0.2 && changes >= 1,
        format!("sup |G|/x^(3/4)={sup:.6} at tol/2={sup_half:.6} (change {:.2e}) G sign changes={changes}", change),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let d = divisor_sieve(1000).unwrap();
    let ts = [250.0, 500.0, 1000.0, 2000.0, 4000.0];
    let f = afe_meansquare_fit(&ts, &d, &ZetaEvalConfig::default(), 1e-6).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let spread = (f.a_upper - f.a_lower).abs() / f.a;
    outcome(
        (0.45..=0.55).contains(&f.slope.slope) && f.a > 0.0 && spread <= 0.15 && secs < 300.0,
        format!(
            "slope={:.4} A={:.4} A(lower half)={:.4} A(upper half)={:.4} spread={:.1}% integrals={:?} time={secs:.1}s",
            f.slope.slope,
            f.a,
            f.a_lower,
            f.a_upper,
            100.0 * spread,
            f.integrals.iter().map(|v| (v * 10.0).round() / 10.0).collect::<Vec<_>>()
        ),
    )
}

fn criterion_6(ctx: &mut Ctx) -> Outcome {
    let t = ctx.table();
    let rows: Vec<_> = [100.0, 1000.0, 10_000.0].iter().map(|&x| theorem2_decomposition(x, t).unwrap()).collect();
    let c = rows.iter().map(|r| r.scaled_residual).fold(0.0, f64::max);
    let dev: Vec<f64> = rows.iter().map(|r| (r.sum_e / r.x - PI).abs()).collect();
    let monotone = dev.windows(2).all(|w| w[1] <= 1.1 * w[0]);
    let secs = ctx.build_time().as_secs_f64();
    outcome(
        c <= 50.0 && monotone && secs <= 600.0,
        format!(
            "C={c:.4} |mean - pi|={:?} table build (x_max={TABLE_X_MAX}, cached or built)={secs:.1}s",
            dev.iter().map(|v| format!("{v:.4e}")).collect::<Vec<_>>()
        ),
    )
}

fn criterion_7(ctx: &mut Ctx) -> Outcome {
    let t = ctx.table();
    let grid: Vec<f64> = (0..24).map(|i| 1e3 * 20f64.powf(f64::from(i) / 23.0)).map(|x: f64| x.min(2e4)).collect();
    let ranges = [(2u32, 1.45, 1.55), (3, 1.68, 1.82), (4, 1.93, 2.07)];
    let mut pass = true;
    let mut detail = Vec::new();
    for (k, lo, hi) in ranges {
        let s = moment_fit(k, &grid, t).unwrap();
        pass &= (lo..=hi).contains(&s.fitted_exponent);
        detail.push(format!("k={k} slope={:.4}", s.fitted_exponent));
        if k == 2 {
            let spread = (s.coeff_upper - s.coeff_lower).abs() / s.fitted_coeff;
            pass &= s.fitted_coeff > 0.0 && spread <= 0.10;
            detail.push(format!("C2={:.4} halves {:.4}/{:.4} spread={:.1}%", s.fitted_coeff, s.coeff_lower, s.coeff_upper, 100.0 * spread));
        }
    }
    outcome(pass, detail.join(" "))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for m in [1i64, 2] {
        let e = cf_expand(m, 40).unwrap();
        let det = determinant_identity_holds(&e);
        let gap = convergent_gap_check(&e).unwrap();
        let s20 = lemma1_ratio(m, 20).unwrap().sup.map(|s| s.1);
        let s40 = lemma1_ratio(m, 40).unwrap().sup.map(|s| s.1);
        let stable = matches!((s20, s40), (Some(a), Some(b)) if a.is_finite() && b.is_finite() && b <= 2.0 * a);
        pass &= e.certified_len >= 40 && det && gap.all_hold && stable;
        detail.push(format!(
            "m={m}: certified={} digits={} determinant={det} gap bound={} (max ratio {:.3}) sup20={s20:.4?} sup40={s40:.4?}",
            e.certified_len, e.working_digits, gap.all_hold, gap.tightest
        ));
    }
    let secs = start.elapsed().as_secs_f64();
    pass &= secs < 30.0;
    detail.push(format!("time={secs:.1}s"));
    outcome(pass, detail.join("; "))
}

fn criterion_9() -> Outcome {
    let t = divisor_sieve(30_000).unwrap();
    let eta = Eta::frac_exp_two_pi(1, 60).unwrap();
    let ratios: Vec<f64> = [1e3, 3e3, 1e4, 3e4].iter().map(|&x| transform_residual(x, &eta, &t).unwrap().ratio).collect();
    let mut sorted = ratios.clone();
    sorted.sort_by(f64::total_cmp);
    let median = 0.5 * (sorted[1] + sorted[2]);
    let within = ratios.iter().all(|&r| r <= 10.0 * median && r >= median / 10.0);
    let mut exact = true;
    for x in [1e3, 3e3, 1e4, 3e4] {
        let a = wilton_sum(x, &eta, &t).unwrap().value;
        exact &= wilton_sum(x, &eta.neg(), &t).unwrap().value == a.conj();
        exact &= wilton_sum(x, &eta.shifted(1), &t).unwrap().value == a;
        exact &= wilton_sum(x, &eta.shifted(-3), &t).unwrap().value == a;
    }
    outcome(
        within && exact,
        format!("ratios={:?} median={median:.4} identities exact={exact}", ratios.iter().map(|r| format!("{r:.4}")).collect::<Vec<_>>()),
    )
}

fn criterion_10() -> Outcome {
    let t = divisor_sieve(100_000).unwrap();
    let rows: Vec<_> = [1e3, 1e4, 1e5].iter().map(|&x| theorem1_ratio(x, 1, &t, 0.01).unwrap()).collect();
    let decreasing = rows.windows(2).all(|w| w[1].weak_ratio < w[0].weak_ratio);
    outcome(
        decreasing,
        format!(
            "|D|/(x log x)={:?} ratio with C=0.01={:?}",
            rows.iter().map(|r| format!("{:.4e}", r.weak_ratio)).collect::<Vec<_>>(),
            rows.iter().map(|r| format!("{:.4e}", r.ratio)).collect::<Vec<_>>()
        ),
    )
}

fn criterion_11(ctx: &mut Ctx) -> Outcome {
    let d = divisor_sieve(20_050).unwrap();
    let table = ctx.table();
    let mut pass = true;
    let mut detail = Vec::new();
    for u in [10u64, 50] {
        let s = delta_short_interval_sq(10_000, u, &d).unwrap();
        let e = e_short_interval_sq(10_000, u, table).unwrap();
        pass &= (0.4..=2.5).contains(&s.ratio);
        detail.push(format!("U={u}: delta ratio={:.4} (E analogue sum={e:.6e}, over main {:.4})", s.ratio, e / s.main));
    }
    outcome(pass, detail.join("; "))
}

fn criterion_12(ctx: &Ctx) -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cache = ctx.cache_dir.to_str().unwrap().to_owned();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let argv = ["ezeta", "--cache-dir", &cache, "moments", "--k", "2", "--x-max", "2000", "--out", out.to_str().unwrap()];
        assert_eq!(ezeta::cli::run(argv), 0);
        std::fs::read(out).unwrap()
    };
    let cold = run("cold.csv");
    let warm = run("warm.csv");
    let warm2 = run("warm2.csv");
    outcome(
        cold == warm && warm == warm2 && !cold.is_empty(),
        format!("{} bytes; cold/warm/warm identical={}", cold.len(), cold == warm && warm == warm2),
    )
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let mut ctx = Ctx {
        cache: CacheHandle::new(dir.path(), version_tag()),
        cache_dir: dir.path().to_path_buf(),
        table: None,
    };
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    let mut record = |n: u32, name: &'static str, o: Outcome| {
        println!("criterion {n:>2} [{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((n, name, o));
    };
    record(1, "divisor sieve vs trial division", criterion_1());
    record(2, "Delta identities", criterion_2());
    record(3, "E(T) against oracle and derivative", criterion_3());
    record(6, "sum E(n) decomposition", criterion_6(&mut ctx));
    record(4, "G(x) scale and stability", criterion_4(&mut ctx));
    record(5, "AFE remainder mean square", criterion_5());
    record(7, "moment exponents", criterion_7(&mut ctx));
    record(8, "continued fractions of e^(pi m)", criterion_8());
    record(9, "Wilton transformation residual", criterion_9());
    record(10, "Wilton sums at e^(-2 pi)", criterion_10());
    record(11, "short-interval mean squares", criterion_11(&mut ctx));
    record(12, "warm-cache reproducibility", criterion_12(&ctx));
    let failed: Vec<u32> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    println!("acceptance: {} of {} criteria pass", results.len() - failed.len(), results.len());
    if !failed.is_empty() {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
