//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use jue_core::exact::{parse_ratfun, ratfun_eq};
use jue_core::hurwitz::{weighted_hurwitz_char, weighted_hurwitz_sum, Guards, WeightSpec};
use jue_core::jacobi::coeffs::at_n;
use jue_core::jacobi::{
    a_hypergeometric, a_wilson, b_hypergeometric, b_wilson, coeff_value, connected_correlator, correlator, lax_residue,
    moment, pochhammer, r_series, Kind, Point,
};
use jue_core::schur::correlator_via_schur;
use jue_core::symgroup::{class_sum_expansion, partitions_of, yjm_product_expansion};
use jue_core::topo::{laguerre_limit, verify_theorem};
use jue_core::{Partition, Rational, RationalFunction, Sign, VarSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn rf(s: &str) -> RationalFunction {
    parse_ratfun(s, VarSet::Jacobi).expect("literal expression")
}

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn same(what: &str, got: &RationalFunction, want: &RationalFunction) -> Check {
    match ratfun_eq(got, want) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("{what}: got {got}, want {want}")),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn core<T>(r: jue_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn table_from_cli() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_jue"))
        .args(["hurwitz", "--lambda", "1,1,1", "--genus", "0", "--connected", "--table", "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit status {}", out.status));
    }
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let label = rec[0].to_string();
        let vals: Vec<u64> = rec.iter().skip(1).map(|v| v.parse().map_err(|_| format!("bad count {v}"))).collect::<Result<_, _>>()?;
        rows.push((label, vals));
    }
    let want = vec![
        ("3".to_string(), vec![2, 6, 4]),
        ("2,1".to_string(), vec![6, 18, 12]),
        ("1,1,1".to_string(), vec![4, 12, 8]),
    ];
    if rows != want {
        return Err(format!("table {rows:?}"));
    }
    Ok(())
}

fn closed_forms() -> Check {
    let pos = rf("2*N*(alpha+beta)*(beta-alpha)*(alpha+N)*(beta+N)*(alpha+beta+N)/((alpha+beta+2*N-2)*(alpha+beta+2*N-1)*(alpha+beta+2*N)^3*(alpha+beta+2*N+1)*(alpha+beta+2*N+2))");
    let neg = rf("2*N*(alpha+N)*(alpha+2*N)*(beta+N)*(alpha+beta+N)*(alpha+2*beta+2*N)/((alpha-2)*(alpha-1)*alpha^3*(alpha+1)*(alpha+2))");
    same("positive", &core(connected_correlator(&part("1,1,1"), Sign::Positive))?, &pos)?;
    same("negative", &core(connected_correlator(&part("1,1,1"), Sign::Negative))?, &neg)
}

fn theorem() -> Check {
    let guards = Guards::default();
    for n in 1..=4 {
        let gmax = if n <= 3 { 1 } else { 0 };
        for lambda in partitions_of(n) {
            for sign in [Sign::Positive, Sign::Negative] {
                for connected in [true, false] {
                    let r = core(verify_theorem(&lambda, sign, gmax, connected, &guards))?;
                    if !r.passed() {
                        return Err(format!("lambda={lambda} sign={sign} connected={connected}: {r:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn routes() -> Check {
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            for sign in [Sign::Positive, Sign::Negative] {
                let a = core(correlator(&lambda, sign))?;
                let b = core(correlator_via_schur(&lambda, sign))?;
                same(&format!("lambda={lambda} sign={sign}"), &a, &b)?;
            }
        }
    }
    Ok(())
}

fn one_point() -> Check {
    for k in 0..=8u32 {
        let a = core(coeff_value(Kind::A, k as usize))?;
        let at = core(coeff_value(Kind::ATilde, k as usize))?;
        let pos = core(moment(k, Sign::Positive))?.sub(&core(moment(k + 1, Sign::Positive))?);
        same(&format!("positive step k={k}"), &pos, &a)?;
        let neg = core(moment(k + 1, Sign::Negative))?.sub(&core(moment(k, Sign::Negative))?);
        same(&format!("negative step k={k}"), &neg, &at)?;
        let kk = k as i64;
        let ratio = core(
            pochhammer(&rf(&format!("alpha+beta+2*N-{kk}")), 2 * k + 1).div(&pochhammer(&rf(&format!("alpha-{kk}")), 2 * k + 1)),
        )?;
        same(&format!("tilde ratio k={k}"), &at, &ratio.mul(&a))?;
    }
    Ok(())
}

fn coefficient_routes() -> Check {
    for l in 0..=10 {
        same(&format!("A_{l}"), &core(coeff_value(Kind::A, l))?, &core(a_hypergeometric(l))?)?;
        same(&format!("B_{l}"), &core(coeff_value(Kind::B, l))?, &core(b_hypergeometric(l))?)?;
    }
    for n in 1..=3u32 {
        for l in 0..=4 {
            let a = core(at_n(&core(coeff_value(Kind::A, l))?, n as i64))?;
            same(&format!("Wilson A_{l} at N={n}"), &core(a_wilson(n, l))?, &a)?;
            let b = core(at_n(&core(coeff_value(Kind::B, l))?, n as i64))?;
            same(&format!("Wilson B_{l} at N={n}"), &core(b_wilson(n, l))?, &b)?;
        }
    }
    Ok(())
}

fn lax() -> Check {
    for p in [Point::Zero, Point::Infinity] {
        let s = core(r_series(p, 6))?;
        lax_residue(&s).map_err(|m| format!("{p}: fails at order {m}"))?;
        // The check must notice a single flipped entry.
        let mut bad = s.clone();
        let mut c = bad.coeff(3).clone();
        c.0[1][0] = c.0[1][0].neg();
        bad.set_coeff(3, c);
        if lax_residue(&bad).is_ok() {
            return Err(format!("{p}: corrupted series passed"));
        }
    }
    Ok(())
}

fn weighted() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let guards = Guards::default();
    for _ in 0..5 {
        let mut q = || Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=7).into());
        let w = WeightSpec { gamma: q(), delta: q() };
        for n in 1..=4 {
            for lambda in partitions_of(n) {
                let base = n as i64 + lambda.length() as i64 - 2;
                // d = 2g - 2 + n + l(lambda) must be a valid degree
                let g_lo = (-base + 1).div_euclid(2);
                for g in g_lo..=1 {
                    let d = (2 * g + base) as usize;
                    let a = core(weighted_hurwitz_sum(&w, &lambda, g, &guards))?;
                    let b = core(weighted_hurwitz_char(&w, &lambda, d))?;
                    if a != b {
                        return Err(format!("gamma={} delta={} lambda={lambda} g={g}: {a} vs {b}", w.gamma, w.delta));
                    }
                }
            }
        }
    }
    Ok(())
}

fn single_eigenvalue() -> Check {
    for k in 0..=8u32 {
        let m = core(at_n(&core(moment(k, Sign::Positive))?, 1))?;
        let want = core(pochhammer(&rf("alpha+1"), k).div(&pochhammer(&rf("alpha+beta+2"), k)))?;
        same(&format!("k={k}"), &m, &want)?;
    }
    let inv = core(at_n(&core(moment(1, Sign::Negative))?, 1))?;
    same("inverse", &inv, &rf("(alpha+beta+1)/alpha"))
}

fn laguerre() -> Check {
    let one = core(laguerre_limit(&part("1")))?;
    same("(1)", &one, &rf("N*(alpha+N)"))?;
    same("(1) at N=1", &core(at_n(&one, 1))?, &rf("alpha+1"))?;
    let two = core(laguerre_limit(&part("2")))?;
    same("(2) at N=1", &core(at_n(&two, 1))?, &rf("(alpha+1)*(alpha+2)"))
}

fn projector() -> Check {
    for p in [Point::Infinity, Point::Zero, Point::One] {
        let s = core(r_series(p, 8))?;
        if let Some(m) = s.trace_defect() {
            return Err(format!("{p}: trace fails at order {m}"));
        }
        if let Some(m) = s.det_defect() {
            return Err(format!("{p}: determinant fails at order {m}"));
        }
    }
    Ok(())
}

fn yjm() -> Check {
    for n in 1..=5 {
        if core(yjm_product_expansion(n))? != core(class_sum_expansion(n))? {
            return Err(format!("n={n}"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Hurwitz table for (1,1,1) from the CLI", Duration::from_secs(1), table_from_cli),
        ("closed forms of the connected three-point correlators", Duration::from_secs(5), closed_forms),
        ("genus expansion matches Hurwitz sums", Duration::from_secs(600), theorem),
        ("analytic and Schur routes agree through weight 5", Duration::from_secs(600), routes),
        ("one-point telescoping identities, k <= 8", Duration::from_secs(10), one_point),
        ("recurrence, 4F3 and Wilson coefficient forms", Duration::from_secs(30), coefficient_routes),
        ("Lax equation to order 6 at zero and infinity", Duration::from_secs(30), lax),
        ("weighted Hurwitz numbers, enumeration vs characters", Duration::from_secs(300), weighted),
        ("single-eigenvalue Beta integrals", Duration::from_secs(5), single_eigenvalue),
        ("Laguerre limit", Duration::from_secs(5), laguerre),
        ("projector invariants to order 8", Duration::from_secs(10), projector),
        ("Jucys-Murphy product equals class-sum expansion", Duration::from_secs(30), yjm),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match (&result, took <= *budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {}s budget)", budget.as_secs()),
            (Err(e), _) => format!("FAIL: {e}"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2} {verdict:<4} {name} [{:.2}s]", i + 1, took.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
