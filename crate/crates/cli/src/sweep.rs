//! Family sweeps written as CSV, one row per graph.
//!
//! Columns, in order: `family, params, order, size, obstruction, status,
//! interval, valence_set, nodes, millis`. `interval` is `lo..hi` or `empty`;
//! `valence_set` is `;`-separated (`empty` for no valences) and left blank
//! unless valences were requested; `millis` is blank unless timing was requested.

use std::io::Write;

use anyhow::{bail, Result};
use serde::Serialize;

use semlab::{
    degseq_4_2_realizations, first_obstruction, make_two_cycle, make_two_cycle_with_cycles, search_sem, sem_interval,
    sem_set, Graph, SearchConfig,
};

#[derive(Clone, Debug)]
pub enum Family {
    /// `C(m, n)` for every `m` and `n` in the ranges.
    TwoCycleGrid { m: (usize, usize), n: (usize, usize) },
    /// `C(3, 4k - 3)` for `k` in the range.
    ThreeCycleSeries { k: (usize, usize) },
    /// Every graph with degree sequence `4, 2, ..., 2` for each order.
    Degseq42 { order: (usize, usize) },
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub config: SearchConfig,
    pub max_order: usize,
    pub valences: bool,
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub params: String,
    pub order: usize,
    pub size: usize,
    pub obstruction: String,
    pub status: String,
    pub interval: String,
    pub valence_set: String,
    pub nodes: u64,
    pub millis: String,
}

/// Parses an inclusive range `A..B` (or a single value `A`).
pub fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad range {text:?}"));
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {text:?}"));
            }
            Ok((a, b))
        }
        None => parse(text).map(|a| (a, a)),
    }
}

/// The graphs of a family, in row order.
pub fn instances(family: &Family) -> Result<Vec<(String, String, Graph)>> {
    let mut out = Vec::new();
    match *family {
        Family::TwoCycleGrid { m, n } => {
            for m in m.0..=m.1 {
                for n in n.0..=n.1 {
                    out.push(("two-cycle".into(), format!("m={m};n={n}"), make_two_cycle(m, n)?));
                }
            }
        }
        Family::ThreeCycleSeries { k } => {
            for k in k.0..=k.1 {
                if k < 2 {
                    bail!("three-cycle-series needs k >= 2 so that 4k - 3 >= 5");
                }
                out.push(("three-cycle".into(), format!("k={k};n={}", 4 * k - 3), make_two_cycle(3, 4 * k - 3)?));
            }
        }
        Family::Degseq42 { order } => {
            for p in order.0..=order.1 {
                for (m, n, extra) in degseq_4_2_realizations(p) {
                    let extra_text: Vec<String> = extra.iter().map(ToString::to_string).collect();
                    out.push((
                        "degseq-4-2".into(),
                        format!("order={p};m={m};n={n};extra={}", extra_text.join("+")),
                        make_two_cycle_with_cycles(m, n, &extra)?,
                    ));
                }
            }
        }
    }
    Ok(out)
}

pub fn run_sweep(family: &Family, options: &SweepOptions) -> Result<Vec<SweepRow>> {
    let graphs = instances(family)?;
    if let Some((_, params, g)) = graphs.iter().find(|(_, _, g)| g.order() > options.max_order) {
        bail!(
            "instance {params} has order {} above the limit {}; raise --max-order to run it",
            g.order(),
            options.max_order
        );
    }
    graphs
        .into_iter()
        .map(|(family, params, g)| {
            let outcome = search_sem(&g, &options.config)?;
            let interval = match sem_interval(&g) {
                Ok(i) if i.is_empty() => "empty".to_string(),
                Ok(i) => format!("{}..{}", i.lo, i.hi),
                Err(_) => String::new(),
            };
            let valence_set = if options.valences && g.size() > 0 {
                let set = sem_set(&g, &options.config)?;
                let values: Vec<String> = set.values.iter().map(ToString::to_string).collect();
                let mut text = if values.is_empty() { "empty".to_string() } else { values.join(";") };
                if !set.complete {
                    text.push_str(";...");
                }
                text
            } else {
                String::new()
            };
            Ok(SweepRow {
                family,
                params,
                order: g.order(),
                size: g.size(),
                obstruction: first_obstruction(&g).map_or_else(|| "none".into(), |v| v.rule.id().to_string()),
                status: outcome.status.to_string(),
                interval,
                valence_set,
                nodes: outcome.stats.nodes,
                millis: if options.timing {
                    outcome.stats.millis.to_string()
                } else {
                    String::new()
                },
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    if rows.is_empty() {
        writer.write_record([
            "family",
            "params",
            "order",
            "size",
            "obstruction",
            "status",
            "interval",
            "valence_set",
            "nodes",
            "millis",
        ])?;
    }
    writer.flush()?;
    Ok(())
}
