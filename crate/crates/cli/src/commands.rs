//! Turns one parsed invocation into a finished report: resolves config
//! and flag precedence, sizes the worker pool, and runs the subcommand.

use std::time::Instant;

use majorder_core::dioph::{EquationId, ALL_EQUATIONS};
use majorder_core::exact::{digamma_interval, ln_gamma_interval};
use majorder_core::poset::{compare, enumerate_sequences};
use majorder_core::recur::{fib, RecurrenceSpec, TermSource};
use majorder_core::BigRat;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::cli::{Cli, Cmd};
use crate::config::Config;
use crate::report::RunReport;
use crate::suites::{self, GammaScope};
use crate::values::{enclosure_json, parse_positive_rational, parse_sequence, seq_parts, seq_table};
use crate::UsageError;

pub fn dispatch(cli: Cli) -> Result<RunReport, UsageError> {
    let started = Instant::now();
    let mut cfg = Config::load(cli.config.as_deref())?;
    cfg.apply_env()?;
    if let Some(bits) = cli.max_precision {
        if bits == 0 {
            return Err(UsageError("--max-precision must be positive".into()));
        }
        cfg.max_precision_bits = bits;
    }
    let threads = match cli.threads {
        Some(0) => return Err(UsageError("--threads must be at least 1".into())),
        Some(n) => n,
        None => cfg.threads.max(1),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| UsageError(format!("cannot build the worker pool: {e}")))?;
    let (command, parameters, records) =
        pool.install(|| run_command(&cli.command, &cfg, threads))?;
    Ok(RunReport::new(command, parameters, records, started))
}

type CommandOutput = (&'static str, Map<String, Value>, Vec<Value>);

fn params(entries: &[(&str, Value)]) -> Map<String, Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn positive(name: &str, value: u64) -> Result<u64, UsageError> {
    if value == 0 {
        return Err(UsageError(format!("{name} must be at least 1")));
    }
    Ok(value)
}

fn run_command(cmd: &Cmd, cfg: &Config, threads: usize) -> Result<CommandOutput, UsageError> {
    match cmd {
        Cmd::Majorize { first, second } => {
            let a = parse_sequence(first)?;
            let b = parse_sequence(second)?;
            let records = vec![json!({
                "kind": "dominance",
                "result": suites::dominance_name(compare(&a, &b)),
                "first": seq_table(&a),
                "second": seq_table(&b),
            })];
            Ok((
                "majorize",
                params(&[("first", json!(first)), ("second", json!(second))]),
                records,
            ))
        }

        Cmd::Enumerate { max_sum, max_len } => {
            let bound = positive("max_sum", max_sum.unwrap_or(cfg.solve_max_sum))?;
            if *max_len == Some(0) {
                return Err(UsageError("max_len must be at least 1".into()));
            }
            let mut p = params(&[("max_sum", json!(bound))]);
            if let Some(l) = max_len {
                p.insert("max_len".into(), json!(l));
            }
            let records = enumerate_sequences(bound, *max_len)
                .map(|s| {
                    json!({
                        "sequence": s.to_string(),
                        "parts": seq_parts(&s),
                        "sum": s.sum(),
                        "length": s.len(),
                    })
                })
                .collect();
            Ok(("enumerate", p, records))
        }

        Cmd::Solve { equation, bound } => {
            let eq = EquationId::from_cli_name(equation).ok_or_else(|| {
                UsageError(format!(
                    "unknown equation {equation:?}; expected one of {}",
                    ALL_EQUATIONS
                        .iter()
                        .map(|e| e.cli_name())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            })?;
            let default_bound = if eq.is_sequence_shaped() {
                cfg.solve_max_sum
            } else {
                cfg.solve_grid_max
            };
            let bound = positive("bound", bound.unwrap_or(default_bound))?;
            let records = suites::solve(eq, bound, cfg.start_precision_bits, cfg.max_precision_bits);
            Ok((
                "solve",
                params(&[
                    ("equation", json!(eq.cli_name())),
                    ("bound", json!(bound)),
                    ("start_precision_bits", json!(cfg.start_precision_bits)),
                    ("max_precision_bits", json!(cfg.max_precision_bits)),
                ]),
                records,
            ))
        }

        Cmd::Verify {
            suite,
            max_sum,
            x_max,
            n_max,
            map,
            grid_start,
            grid_end,
            grid_step,
            source,
            max_index,
            max_tuple_len,
            a,
            b,
            a1,
        } => match suite.as_str() {
            "poset-axioms" => {
                let bound = positive("max_sum", max_sum.unwrap_or(cfg.axioms_max_sum))?;
                Ok((
                    "verify",
                    params(&[
                        ("suite", json!(suite)),
                        ("max_sum", json!(bound)),
                        ("threads", json!(threads)),
                    ]),
                    suites::poset_axioms(bound),
                ))
            }
            "theorem-a" => {
                let bound = positive("max_sum", max_sum.unwrap_or(cfg.product_sweep_max_sum))?;
                let records = suites::theorem_a(bound, map.as_deref(), cfg.max_precision_bits)?;
                let mut p = params(&[("suite", json!(suite)), ("max_sum", json!(bound))]);
                if let Some(m) = map {
                    p.insert("map".into(), json!(m));
                }
                p.insert(
                    "max_precision_bits".into(),
                    json!(cfg.max_precision_bits),
                );
                p.insert("threads".into(), json!(threads));
                Ok(("verify", p, records))
            }
            "theorem-b" => {
                let bound = positive("max_sum", max_sum.unwrap_or(cfg.sum_sweep_max_sum))?;
                let x = x_max.unwrap_or(cfg.diff_x_max);
                if x < 2 {
                    return Err(UsageError("x_max must be at least 2".into()));
                }
                let sum_cap = cfg.sum_sweep_cap_bits.min(cfg.max_precision_bits);
                let records = suites::theorem_b(
                    bound,
                    x,
                    cfg.start_precision_bits,
                    sum_cap,
                    cfg.max_precision_bits,
                );
                Ok((
                    "verify",
                    params(&[
                        ("suite", json!(suite)),
                        ("max_sum", json!(bound)),
                        ("x_max", json!(x)),
                        ("start_precision_bits", json!(cfg.start_precision_bits)),
                        ("sum_cap_bits", json!(sum_cap)),
                        ("max_precision_bits", json!(cfg.max_precision_bits)),
                        ("threads", json!(threads)),
                    ]),
                    records,
                ))
            }
            "theorem-c" => {
                let (scope, mut p) = match (grid_start, grid_end, grid_step) {
                    (None, None, None) => (
                        GammaScope::Default {
                            grid: cfg.gamma_grid.clone(),
                            sandwich: cfg.gamma_sandwich_points.clone(),
                            samples: cfg.gamma_random_samples,
                            seed: cfg.gamma_random_seed,
                        },
                        params(&[
                            ("suite", json!(suite)),
                            ("grid", json!(cfg.gamma_grid)),
                            ("sandwich_points", json!(cfg.gamma_sandwich_points)),
                            ("random_samples", json!(cfg.gamma_random_samples)),
                            ("random_seed", json!(cfg.gamma_random_seed)),
                        ]),
                    ),
                    (Some(s), Some(e), Some(st)) => (
                        GammaScope::Dense {
                            start: parse_positive_rational(s)?,
                            end: parse_positive_rational(e)?,
                            step: parse_positive_rational(st)?,
                        },
                        params(&[
                            ("suite", json!(suite)),
                            ("grid_start", json!(s)),
                            ("grid_end", json!(e)),
                            ("grid_step", json!(st)),
                        ]),
                    ),
                    _ => {
                        return Err(UsageError(
                            "--grid-start, --grid-end, --grid-step must be given together".into(),
                        ))
                    }
                };
                p.insert(
                    "start_precision_bits".into(),
                    json!(cfg.start_precision_bits),
                );
                p.insert("max_precision_bits".into(), json!(cfg.max_precision_bits));
                p.insert("threads".into(), json!(threads));
                let records =
                    suites::theorem_c(scope, cfg.start_precision_bits, cfg.max_precision_bits)?;
                Ok(("verify", p, records))
            }
            "fibonacci" => {
                let n = n_max.unwrap_or(cfg.fib_n_max);
                if n < 2 {
                    return Err(UsageError("n_max must be at least 2".into()));
                }
                Ok((
                    "verify",
                    params(&[
                        ("suite", json!(suite)),
                        ("n_max", json!(n)),
                        ("threads", json!(threads)),
                    ]),
                    suites::fibonacci(n),
                ))
            }
            "recurrence" => {
                let single = spec_from_flags(*a, *b, *a1)?;
                let idx = positive("max_index", max_index.unwrap_or(8))?;
                let len = max_tuple_len.unwrap_or(3);
                if len == 0 {
                    return Err(UsageError("max_tuple_len must be at least 1".into()));
                }
                let mut p = params(&[("suite", json!(suite))]);
                if let Some(spec) = single {
                    p.insert("spec".into(), json!(spec.to_string()));
                }
                p.insert("max_index".into(), json!(idx));
                p.insert("max_tuple_len".into(), json!(len));
                p.insert("threads".into(), json!(threads));
                let records = suites::recurrence_matrix(single, idx, len)?;
                Ok(("verify", p, records))
            }
            "uniqueness" => {
                let sources = match source {
                    None => vec![TermSource::FibEven, TermSource::FibOdd],
                    Some(name) => vec![term_source(name, *a, *b, *a1)?],
                };
                let idx = positive("max_index", max_index.unwrap_or(cfg.uniqueness_max_index))?;
                let len = max_tuple_len.unwrap_or(cfg.uniqueness_max_tuple_len);
                if len == 0 {
                    return Err(UsageError("max_tuple_len must be at least 1".into()));
                }
                let names: Vec<String> = sources.iter().map(|s| s.to_string()).collect();
                let records = suites::uniqueness(&sources, idx, len)?;
                Ok((
                    "verify",
                    params(&[
                        ("suite", json!(suite)),
                        ("sources", json!(names)),
                        ("max_index", json!(idx)),
                        ("max_tuple_len", json!(len)),
                        ("threads", json!(threads)),
                    ]),
                    records,
                ))
            }
            other => Err(UsageError(format!(
                "unknown suite {other:?}; expected one of poset-axioms, theorem-a, \
                 theorem-b, theorem-c, fibonacci, recurrence, uniqueness"
            ))),
        },

        Cmd::Uniqueness {
            source,
            max_index,
            max_tuple_len,
            a,
            b,
            a1,
        } => {
            let src = term_source(source, *a, *b, *a1)?;
            let idx = positive("max_index", max_index.unwrap_or(cfg.uniqueness_max_index))?;
            let len = max_tuple_len.unwrap_or(cfg.uniqueness_max_tuple_len);
            if len == 0 {
                return Err(UsageError("max_tuple_len must be at least 1".into()));
            }
            let records = suites::uniqueness(&[src], idx, len)?;
            Ok((
                "uniqueness",
                params(&[
                    ("source", json!(src.to_string())),
                    ("max_index", json!(idx)),
                    ("max_tuple_len", json!(len)),
                    ("threads", json!(threads)),
                ]),
                records,
            ))
        }

        Cmd::Gamma { x, precision } => {
            let point = parse_positive_rational(x)?;
            let w = precision.unwrap_or(cfg.gamma_eval_precision_bits);
            if w == 0 {
                return Err(UsageError("precision must be positive".into()));
            }
            let mut records = vec![json!({
                "kind": "gamma-values",
                "x": point.to_string(),
                "ln_gamma": enclosure_json(&ln_gamma_interval(&point, w)),
                "digamma": enclosure_json(&digamma_interval(&point, w)),
            })];
            // The logarithmic bounds are stated for x > 1 only.
            if point > BigRat::one() {
                records.push(suites::gamma_point_record(
                    &point.to_string(),
                    suites::run_gamma_check(&point, w, cfg.max_precision_bits),
                ));
            }
            Ok((
                "gamma",
                params(&[
                    ("x", json!(x)),
                    ("precision_bits", json!(w)),
                    ("max_precision_bits", json!(cfg.max_precision_bits)),
                ]),
                records,
            ))
        }

        Cmd::Fib { n } => Ok((
            "fib",
            params(&[("n", json!(n))]),
            vec![json!({
                "kind": "fib",
                "n": n,
                "value": fib(*n).to_string(),
                "convention": "F0 = F1 = 1",
            })],
        )),
    }
}

fn spec_from_flags(
    a: Option<u64>,
    b: Option<i64>,
    a1: Option<u64>,
) -> Result<Option<RecurrenceSpec>, UsageError> {
    match (a, b, a1) {
        (None, None, None) => Ok(None),
        (Some(a), Some(b), Some(a1)) => {
            if a == 0 {
                return Err(UsageError("coefficient a must be positive".into()));
            }
            if b >= 0 {
                return Err(UsageError("coefficient b must be negative".into()));
            }
            Ok(Some(RecurrenceSpec { a, b, a1 }))
        }
        _ => Err(UsageError("--a, --b, --a1 must be given together".into())),
    }
}

fn term_source(
    name: &str,
    a: Option<u64>,
    b: Option<i64>,
    a1: Option<u64>,
) -> Result<TermSource, UsageError> {
    match name {
        "fib-even" => Ok(TermSource::FibEven),
        "fib-odd" => Ok(TermSource::FibOdd),
        "recurrence" => {
            let spec = spec_from_flags(a, b, a1)?
                .ok_or_else(|| UsageError("recurrence source needs --a, --b, --a1".into()))?;
            Ok(TermSource::Recurrence(spec))
        }
        other => Err(UsageError(format!(
            "unknown term source {other:?}; expected fib-even, fib-odd, or recurrence"
        ))),
    }
}
