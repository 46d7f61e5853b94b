use std::collections::BTreeMap;
use std::str::FromStr;

use jue_core::exact::laurent::LaurentInN;
use jue_core::hurwitz::{count_hurwitz, hurwitz_table, Guards, HurwitzQuery};
use jue_core::jacobi::{connected_correlator, correlator, lax_residue, mixed_connected, r_series};
use jue_core::schur::correlator_via_schur;
use jue_core::symgroup::partitions_of;
use jue_core::topo::{correlator_side, verify_theorem, ExpansionReport};
use jue_core::{Error, Partition, Point, Rational, RationalFunction, Sign, VarSet};
use serde_json::{json, Value};

use crate::args::{CorrelatorArgs, ExpandArgs, HurwitzArgs, Suite, VerifyArgs};
use crate::config::Settings;
use crate::error::CliError;
use crate::output::{Check, Payload};

pub type Inputs = BTreeMap<String, Value>;
type Outcome = Result<(Inputs, Payload), CliError>;

fn partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse::<Partition>()?)
}

fn sign(s: &str) -> Result<Sign, CliError> {
    Ok(s.parse::<Sign>()?)
}

fn guards(st: &Settings) -> Guards {
    Guards { max_n: st.max_weight, max_r: st.max_r }
}

fn check_weight(w: u32, st: &Settings) -> Result<(), CliError> {
    if w > st.max_weight {
        return Err(Error::GuardExceeded(format!("weight {w} exceeds max_weight {}", st.max_weight)).into());
    }
    Ok(())
}

/// Splits `key=a,b,key2=c` into `{key: [a, b], key2: [c]}`.
fn keyed_groups(s: &str, keys: &[&str]) -> Result<BTreeMap<String, Vec<String>>, CliError> {
    let mut out: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let val = match tok.split_once('=') {
            Some((k, v)) => {
                let k = k.trim();
                if !keys.contains(&k) {
                    return Err(CliError::Usage(format!("unknown key '{k}', expected one of {}", keys.join(", "))));
                }
                if out.contains_key(k) {
                    return Err(CliError::Usage(format!("key '{k}' given twice")));
                }
                current = Some(k.to_string());
                out.insert(k.to_string(), Vec::new());
                v.trim()
            }
            None => tok,
        };
        let key = current.clone().ok_or_else(|| CliError::Usage(format!("value '{tok}' before any key")))?;
        if !val.is_empty() {
            out.get_mut(&key).expect("inserted above").push(val.to_string());
        }
    }
    Ok(out)
}

fn specialize(mut f: RationalFunction, spec: &str) -> Result<RationalFunction, CliError> {
    let groups = keyed_groups(spec, &["N", "alpha", "beta"])?;
    for (name, vals) in groups {
        let [v] = vals.as_slice() else {
            return Err(CliError::Usage(format!("{name} needs exactly one value")));
        };
        let q = Rational::from_str(v).map_err(|e| CliError::Usage(format!("{name}={v}: {e}")))?;
        let slot = VarSet::Jacobi.slot_of(&name).expect("key list matches the variable names");
        f = f.specialize(slot, &q)?;
    }
    Ok(f)
}

pub fn correlator_cmd(a: &CorrelatorArgs, st: &Settings) -> Outcome {
    let mut inputs = Inputs::new();
    let f = if let Some(spec) = &a.mixed {
        let g = keyed_groups(spec, &["pos", "neg", "one"])?;
        let part = |k: &str| -> Result<Partition, CliError> {
            g.get(k).map_or(Ok(Partition::empty()), |v| partition(&v.join(",")))
        };
        let (p, n, o) = (part("pos")?, part("neg")?, part("one")?);
        check_weight(p.weight() + n.weight() + o.weight(), st)?;
        inputs.insert("mixed".into(), json!({"pos": p.to_string(), "neg": n.to_string(), "one": o.to_string()}));
        inputs.insert("connected".into(), json!(true));
        mixed_connected(&p, &n, &o)?
    } else {
        let lambda = partition(a.powers.as_deref().expect("clap requires powers without mixed"))?;
        let s = sign(&a.sign)?;
        check_weight(lambda.weight(), st)?;
        inputs.insert("powers".into(), json!(lambda.to_string()));
        inputs.insert("sign".into(), json!(s.to_string()));
        inputs.insert("connected".into(), json!(a.connected));
        if a.connected {
            connected_correlator(&lambda, s)?
        } else {
            correlator(&lambda, s)?
        }
    };
    let f = match &a.numeric {
        Some(spec) => {
            inputs.insert("numeric".into(), json!(spec));
            specialize(f, spec)?
        }
        None => f,
    };
    Ok((inputs, Payload::Expr(f.to_string())))
}

pub fn hurwitz_cmd(a: &HurwitzArgs, st: &Settings) -> Outcome {
    let lambda = partition(&a.lambda)?;
    let mut inputs = Inputs::new();
    inputs.insert("lambda".into(), json!(lambda.to_string()));
    inputs.insert("genus".into(), json!(a.genus));
    inputs.insert("connected".into(), json!(a.connected));
    if a.strict {
        inputs.insert("strict".into(), json!(true));
    }
    let g = guards(st);
    if a.table {
        if a.strict {
            return Err(CliError::Usage("--strict is not supported with --table".into()));
        }
        let t = hurwitz_table(&lambda, a.genus, a.connected, &g)?;
        let ps = partitions_of(lambda.weight());
        let labels: Vec<String> = ps.iter().map(Partition::to_string).collect();
        let values = ps.iter().map(|m| ps.iter().map(|n| t[&(m.clone(), n.clone())]).collect()).collect();
        inputs.insert("table".into(), json!(true));
        return Ok((inputs, Payload::Table { rows: labels.clone(), cols: labels, values }));
    }
    let mu = partition(a.mu.as_deref().expect("clap requires mu without table"))?;
    let nu = partition(a.nu.as_deref().expect("clap requires nu without table"))?;
    inputs.insert("mu".into(), json!(mu.to_string()));
    inputs.insert("nu".into(), json!(nu.to_string()));
    let mut q = HurwitzQuery::new(lambda, mu, nu, a.genus, a.connected);
    q.strict = a.strict;
    Ok((inputs, Payload::Count(count_hurwitz(&q, &g)?)))
}

fn report_checks(r: &ExpansionReport, prefix: &str) -> Vec<Check> {
    let mut out: Vec<Check> = r
        .records
        .iter()
        .map(|rec| Check {
            name: format!("{prefix}g={}", rec.g),
            passed: rec.equal,
            detail: (!rec.equal).then(|| format!("correlator side {} vs hurwitz side {}", rec.correlator_side, rec.hurwitz_side)),
        })
        .collect();
    let odd = r.odd_failures.is_empty();
    out.push(Check {
        name: format!("{prefix}odd powers vanish"),
        passed: odd,
        detail: (!odd).then(|| format!("nonzero at N^{:?}", r.odd_failures)),
    });
    out
}

fn suite_routes(w: u32) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for n in 1..=w {
        for lambda in partitions_of(n) {
            for s in [Sign::Positive, Sign::Negative] {
                let a = correlator(&lambda, s)?;
                let b = correlator_via_schur(&lambda, s)?;
                let passed = a == b;
                out.push(Check {
                    name: format!("routes lambda={lambda} sign={s}"),
                    passed,
                    detail: (!passed).then(|| format!("analytic {a} vs schur {b}")),
                });
            }
        }
    }
    Ok(out)
}

fn suite_lax(order: usize) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for p in [Point::Infinity, Point::Zero, Point::One] {
        let r = lax_residue(&r_series(p, order)?);
        out.push(Check {
            name: format!("lax point={p} order={order}"),
            passed: r.is_ok(),
            detail: r.err().map(|m| format!("fails at order {m}")),
        });
    }
    Ok(out)
}

fn suite_theorem(w: u32, g: &Guards) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for n in 1..=w {
        let gmax = if n < w { 1 } else { 0 };
        for lambda in partitions_of(n) {
            for s in [Sign::Positive, Sign::Negative] {
                for connected in [true, false] {
                    let r = verify_theorem(&lambda, s, gmax, connected, g)?;
                    let kind = if connected { "connected" } else { "disconnected" };
                    out.extend(report_checks(&r, &format!("theorem lambda={lambda} sign={s} {kind} ")));
                }
            }
        }
    }
    Ok(out)
}

pub fn verify_cmd(a: &VerifyArgs, st: &Settings) -> Outcome {
    let mut inputs = Inputs::new();
    let g = guards(st);
    if let Some(suite) = a.suite {
        let routes_w = if st.max_weight_given { st.max_weight } else { 5 };
        let theorem_w = if st.max_weight_given { st.max_weight } else { 4 };
        let mut checks = Vec::new();
        if matches!(suite, Suite::Routes | Suite::All) {
            checks.extend(suite_routes(routes_w)?);
        }
        if matches!(suite, Suite::Lax | Suite::All) {
            checks.extend(suite_lax(a.order)?);
        }
        if matches!(suite, Suite::Genus | Suite::All) {
            checks.extend(suite_theorem(theorem_w, &g)?);
        }
        let name = match suite {
            Suite::Routes => "routes",
            Suite::Lax => "lax",
            Suite::Genus => "genus",
            Suite::All => "all",
        };
        inputs.insert("suite".into(), json!(name));
        return Ok((inputs, Payload::Report(checks)));
    }
    let lambda = partition(a.lambda.as_deref().expect("clap requires lambda without suite"))?;
    let s = sign(&a.sign)?;
    check_weight(lambda.weight(), st)?;
    inputs.insert("lambda".into(), json!(lambda.to_string()));
    inputs.insert("sign".into(), json!(s.to_string()));
    inputs.insert("gmax".into(), json!(a.gmax));
    inputs.insert("connected".into(), json!(a.connected));
    let r = verify_theorem(&lambda, s, a.gmax, a.connected, &g)?;
    Ok((inputs, Payload::Report(report_checks(&r, ""))))
}

fn genera(l: &LaurentInN, gmax: i64) -> Vec<(i64, String)> {
    let g_lo = (2 - l.e_max() + 1).div_euclid(2);
    (g_lo..=gmax)
        .filter_map(|g| l.coeff(2 - 2 * g).map(|c| (g, c.to_string())))
        .collect()
}

pub fn expand_cmd(a: &ExpandArgs, st: &Settings) -> Outcome {
    let lambda = partition(&a.powers)?;
    let s = sign(&a.sign)?;
    check_weight(lambda.weight(), st)?;
    let mut inputs = Inputs::new();
    inputs.insert("powers".into(), json!(lambda.to_string()));
    inputs.insert("sign".into(), json!(s.to_string()));
    inputs.insert("gmax".into(), json!(a.gmax));
    inputs.insert("connected".into(), json!(a.connected));
    let l = correlator_side(&lambda, s, a.gmax, a.connected)?;
    Ok((inputs, Payload::Genera(genera(&l, a.gmax))))
}
