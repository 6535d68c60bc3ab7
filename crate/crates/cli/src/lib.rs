//! Library behind the `agx` binary: argument types, table emitters, the
//! `verify` checks and command dispatch.

pub mod args;
pub mod reference;
pub mod tables;
pub mod verify;

use std::io::{self, BufRead, Write};

use agx_core::{
    ag_value, canonical_key, construction_plan, decode_graph6, derive_exception_catalog, enumerate,
    extremal_counts, local_search_traced, sharp_bound, BoundReport, BoundsError, Cache,
    ChemicalGraph, ConstructError, EnumError, EnumOptions, EnumSpec, ExactValue, MoveSearch,
};
use serde_json::{json, Value};
use thiserror::Error;

pub use args::{Cli, Command, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Budget(EnumError),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 1 verification failure or I/O, 2 usage, 3 budget exceeded.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<EnumError> for CliError {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::BudgetExceeded { .. } => CliError::Budget(e),
            EnumError::CatalogMismatch { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

pub fn options(cli: &Cli) -> EnumOptions {
    let opts = EnumOptions::default().with_cache(Cache::new(&cli.cache_dir));
    match cli.threads {
        Some(t) if t > 0 => opts.with_threads(t),
        _ => opts,
    }
}

/// Runs one command, writing its output to `out`.
pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), CliError> {
    let opts = options(cli);
    let exact = cli.exact;
    let format = |default: Format, allowed: &[Format]| -> Result<Format, CliError> {
        let f = cli.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(CliError::Usage(
                format!("--format {f:?} is not supported here").to_lowercase(),
            ))
        }
    };
    use Format::{Csv, Graph6, Json};

    match &cli.command {
        Command::Ag { graphs } => {
            let f = format(Csv, &[Csv, Json])?;
            let texts: Vec<String> = if graphs.is_empty() {
                input.lines().collect::<Result<Vec<_>, _>>()?
            } else {
                graphs.clone()
            };
            let mut rows = Vec::new();
            for text in texts.iter().map(|t| t.trim()).filter(|t| !t.is_empty()) {
                let g = decode_graph6(text).map_err(|e| CliError::Usage(format!("{text}: {e}")))?;
                rows.push((
                    canonical_key(&g).into_string(),
                    g.order(),
                    g.size(),
                    ag_value(&g),
                ));
            }
            match f {
                Json => {
                    let items: Vec<Value> = rows
                        .iter()
                        .map(|(key, n, m, ag)| {
                            json!({"graph6": key, "n": n, "m": m, "ag": float4(ag), "exact": ag.to_string(), "ag_exact": ag})
                        })
                        .collect();
                    write_json(out, &Value::Array(items))
                }
                _ => {
                    let mut header = vec!["graph6", "n", "m", "ag", "exact"];
                    if exact {
                        header.push("ag_exact");
                    }
                    let records = rows.iter().map(|(key, n, m, ag)| {
                        let mut r = vec![
                            key.clone(),
                            n.to_string(),
                            m.to_string(),
                            ag.format_float(4),
                            ag.to_string(),
                        ];
                        if exact {
                            r.push(ag.coefficient_string());
                        }
                        r
                    });
                    write_csv(out, &header, records)
                }
            }
        }
        Command::Bound(p) => {
            let f = format(Json, &[Csv, Json])?;
            let report = sharp_bound(p.n, p.m)?;
            match f {
                Json => write_json(out, &report_json(&report, exact)),
                _ => {
                    let mut header = vec!["n", "m", "ub", "residue", "exceptional", "sharp", "gap"];
                    let mut record = vec![
                        report.n.to_string(),
                        report.m.to_string(),
                        report.ub.format_float(4),
                        report.residue.to_string(),
                        report.exceptional.to_string(),
                        report.sharp.format_float(4),
                        report.gap().format_float(4),
                    ];
                    if exact {
                        header.extend(["ub_exact", "sharp_exact"]);
                        record.extend([
                            report.ub.coefficient_string(),
                            report.sharp.coefficient_string(),
                        ]);
                    }
                    write_csv(out, &header, [record])
                }
            }
        }
        Command::Construct(p) => {
            let f = format(Json, &[Graph6, Csv, Json])?;
            let plan = construction_plan(p.n, p.m)?;
            let g = plan.graph();
            let key = canonical_key(&g).into_string();
            let ag = ag_value(&g);
            match f {
                Graph6 => writeln!(out, "{key}").map_err(Into::into),
                Json => {
                    let report = sharp_bound(p.n, p.m)?;
                    let mut v = json!({
                        "graph6": key,
                        "n": p.n,
                        "m": p.m,
                        "ag": float4(&ag),
                        "connected": g.is_connected(),
                        "fallback": plan.used_fallback,
                        "report": report_json(&report, exact),
                    });
                    if exact {
                        v["ag_exact"] = serde_json::to_value(&ag)?;
                    }
                    write_json(out, &v)
                }
                Csv => {
                    let mut header = vec!["n", "m", "graph6", "ag"];
                    let mut record =
                        vec![p.n.to_string(), p.m.to_string(), key, ag.format_float(4)];
                    if exact {
                        header.push("ag_exact");
                        record.push(ag.coefficient_string());
                    }
                    write_csv(out, &header, [record])
                }
            }
        }
        Command::Enumerate {
            pair,
            connectivity,
            gnm,
        } => {
            let f = format(Graph6, &[Graph6, Csv, Json])?;
            let spec = if *gnm {
                EnumSpec::gnm(pair.n, pair.m)
            } else {
                EnumSpec::chemical(pair.n, pair.m)
            }
            .with_connectivity(connectivity.selected());
            let graphs = enumerate(&spec, &opts)?;
            let (connected, nonconnected) = tables::split_counts(&graphs);
            match f {
                Graph6 => {
                    for g in &graphs {
                        writeln!(out, "{}", g.to_graph6())?;
                    }
                    Ok(())
                }
                Json => {
                    let keys: Vec<String> = graphs.iter().map(ChemicalGraph::to_graph6).collect();
                    write_json(
                        out,
                        &json!({"n": pair.n, "m": pair.m, "connected": connected, "nonconnected": nonconnected, "graphs": keys}),
                    )
                }
                Csv => write_csv(
                    out,
                    &COUNT_HEADER,
                    [count_record(pair.n, pair.m, connected, nonconnected)],
                ),
            }
        }
        Command::Count(p) => {
            let f = format(Csv, &[Csv, Json])?;
            let counts = extremal_counts(p.n, p.m, &opts)?;
            match f {
                Json => write_json(
                    out,
                    &json!({"n": p.n, "m": p.m, "connected": counts.connected, "nonconnected": counts.disconnected}),
                ),
                _ => write_csv(
                    out,
                    &COUNT_HEADER,
                    [count_record(
                        p.n,
                        p.m,
                        counts.connected,
                        counts.disconnected,
                    )],
                ),
            }
        }
        Command::Verify { max_n } => {
            let checks = verify::run_all(*max_n, &opts)?;
            for check in &checks {
                writeln!(out, "{check}")?;
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                return Err(CliError::Failed(format!(
                    "{failed} of {} checks failed",
                    checks.len()
                )));
            }
            Ok(())
        }
        Command::Tables { which, max_n } => {
            let f = format(Csv, &[Csv, Json])?;
            match which {
                1 => {
                    let rows = tables::chemical_counts(usize::MAX, &opts)?;
                    if f == Json {
                        return write_json(out, &serde_json::to_value(&rows)?);
                    }
                    let records = rows
                        .iter()
                        .map(|r| vec![r.n.to_string(), r.m.to_string(), r.count.to_string()]);
                    write_csv(out, &["n", "m", "count"], records)
                }
                2 => {
                    let rows = tables::exceptional_gaps();
                    if f == Json {
                        return write_json(out, &serde_json::to_value(&rows)?);
                    }
                    let mut header = vec!["n", "m", "ag", "difference"];
                    if exact {
                        header.extend(["ag_exact", "difference_exact"]);
                    }
                    let records = rows.iter().map(|r| {
                        let mut rec = vec![
                            r.n.to_string(),
                            r.m.to_string(),
                            r.ag.format_float(4),
                            r.gap.format_float(4),
                        ];
                        if exact {
                            rec.extend([r.ag.coefficient_string(), r.gap.coefficient_string()]);
                        }
                        rec
                    });
                    write_csv(out, &header, records)
                }
                _ => {
                    let rows = tables::extremal_table(*max_n, &opts)?;
                    if f == Json {
                        return write_json(out, &serde_json::to_value(&rows)?);
                    }
                    let records = rows
                        .iter()
                        .map(|r| count_record(r.n, r.m, r.connected, r.nonconnected));
                    write_csv(out, &COUNT_HEADER, records)
                }
            }
        }
        Command::Catalog => {
            let f = format(Csv, &[Graph6, Csv, Json])?;
            let catalog = derive_exception_catalog(&opts)?;
            match f {
                Graph6 => {
                    for record in catalog.values() {
                        writeln!(out, "{}", record.key)?;
                    }
                    Ok(())
                }
                Json => write_json(
                    out,
                    &serde_json::to_value(catalog.values().collect::<Vec<_>>())?,
                ),
                Csv => {
                    let mut header = vec!["n", "m", "graph6", "ag", "ub", "gap"];
                    if exact {
                        header.extend(["ag_exact", "ub_exact", "gap_exact"]);
                    }
                    let records = catalog.values().map(|r| {
                        let gap = r.gap();
                        let mut rec = vec![
                            r.n.to_string(),
                            r.m.to_string(),
                            r.key.to_string(),
                            r.ag.format_float(4),
                            r.ub.format_float(4),
                            gap.format_float(4),
                        ];
                        if exact {
                            rec.extend([
                                r.ag.coefficient_string(),
                                r.ub.coefficient_string(),
                                gap.coefficient_string(),
                            ]);
                        }
                        rec
                    });
                    write_csv(out, &header, records)
                }
            }
        }
        Command::Improve { input: text, trace } => {
            let f = format(Graph6, &[Graph6, Json])?;
            let g =
                decode_graph6(text.trim()).map_err(|e| CliError::Usage(format!("{text}: {e}")))?;
            let run = local_search_traced(&g, MoveSearch::default());
            let result = canonical_key(&run.result).into_string();
            match f {
                Json => {
                    let steps: Vec<Value> = run
                        .steps
                        .iter()
                        .map(|s| json!({"move": s.mv.to_string(), "kind": s.mv.kind, "vertices": s.mv.vertices, "gain": float4(&s.gain), "gain_exact": s.gain.to_string()}))
                        .collect();
                    write_json(
                        out,
                        &json!({
                            "input": text.trim(),
                            "result": result,
                            "ag_before": float4(&ag_value(&g)),
                            "ag_after": float4(&ag_value(&run.result)),
                            "steps": steps,
                        }),
                    )
                }
                _ => {
                    if *trace {
                        for s in &run.steps {
                            writeln!(out, "{} gain {} ≈ {}", s.mv, s.gain, s.gain.format_float(4))?;
                        }
                    }
                    writeln!(out, "{result}").map_err(Into::into)
                }
            }
        }
    }
}

const COUNT_HEADER: [&str; 4] = ["n", "m", "connected", "nonconnected"];

fn count_record(n: usize, m: usize, connected: usize, nonconnected: usize) -> Vec<String> {
    vec![
        n.to_string(),
        m.to_string(),
        connected.to_string(),
        nonconnected.to_string(),
    ]
}

/// A float rounded to 4 decimals, as a JSON number.
fn float4(v: &ExactValue) -> Value {
    v.format_float(4)
        .parse::<f64>()
        .map_or(Value::Null, Value::from)
}

fn report_json(r: &BoundReport, exact: bool) -> Value {
    let mut v = json!({
        "n": r.n,
        "m": r.m,
        "ub": float4(&r.ub),
        "residue": r.residue,
        "exceptional": r.exceptional,
        "sharp": float4(&r.sharp),
        "gap": float4(&r.gap()),
    });
    if exact {
        v["ub_exact"] = serde_json::to_value(&r.ub).expect("serializable");
        v["sharp_exact"] = serde_json::to_value(&r.sharp).expect("serializable");
    }
    v
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<I>(out: &mut dyn Write, header: &[&str], records: I) -> Result<(), CliError>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in records {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}
