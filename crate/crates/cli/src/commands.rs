use std::path::Path;

use ade_fusion::classify::{admissible_index_values, index_ceiling, parse_index_expr, section4_verdict_with};
use ade_fusion::embed::{braiding_report, double_for};
use ade_fusion::graph::{self, BipartiteGraph, Diagram, GraphVerdict};
use serde::Serialize;
use serde_json::json;

use crate::{parse_diagram, CmdResult, Ctx, Failure, Format};

const DECIMALS: u32 = 12;

pub fn index_values(ctx: &mut Ctx<'_>, max: &str) -> CmdResult {
    let mut bound = parse_index_expr(max)?;
    let top = index_ceiling();
    if bound > top {
        writeln!(ctx.err, "note: bound {max} lowered to 3+sqrt(3); nothing is claimed above it")?;
        bound = top;
    }
    let values = admissible_index_values(&bound)?;
    match ctx.format {
        Format::Json => {
            let rows: Vec<_> = values
                .iter()
                .map(|v| {
                    json!({
                        "symbol": v.symbol,
                        "value": v.value,
                        "decimal": v.value.to_decimal(DECIMALS),
                        "realization": v.realization,
                    })
                })
                .collect();
            ctx.json(&rows)?;
        }
        Format::Tsv => {
            writeln!(ctx.out, "symbol\tdecimal\trealization")?;
            for v in &values {
                writeln!(ctx.out, "{}\t{}\t{}", v.symbol, v.value.to_decimal(DECIMALS), v.realization)?;
            }
        }
        Format::Pretty => {
            for v in &values {
                writeln!(ctx.out, "{} ≈ {}", v.symbol, v.value.to_decimal(DECIMALS))?;
            }
        }
    }
    Ok(true)
}

/// Builtin names first, then files. Names with a path separator or an
/// extension are always files.
fn resolve_graphs(target: &str, depth: usize) -> Result<Vec<BipartiteGraph>, Failure> {
    if let Some(name) = target.strip_prefix("haagerup:") {
        if name == "*" {
            return Ok(graph::haagerup_corpus());
        }
        return Ok(vec![graph::haagerup_candidate(name)?]);
    }
    if matches!(target, "Ainf" | "A-infinity" | "A_inf") {
        return Ok(vec![graph::a_infinity(depth)?]);
    }
    let looks_like_path = target.contains(['/', '\\', '.']);
    if !looks_like_path {
        if let Ok(d) = target.parse::<Diagram>() {
            return Ok(vec![graph::dynkin(d)?]);
        }
    }
    let path = Path::new(target);
    if !path.exists() {
        if looks_like_path {
            return Err(Failure::MissingData(path.to_path_buf()));
        }
        return Err(Failure::Usage(format!("{target:?} is neither a builtin graph nor a file")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
    let graphs = graph::parse_corpus(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if graphs.is_empty() {
        return Err(Failure::Usage(format!("{} holds no graph", path.display())));
    }
    Ok(graphs)
}

#[derive(Serialize)]
struct GraphRow {
    #[serde(flatten)]
    verdict: GraphVerdict,
    excluded: bool,
}

pub fn graph_check(ctx: &mut Ctx<'_>, target: &str, depth: usize) -> CmdResult {
    let rows: Vec<GraphRow> = resolve_graphs(target, depth)?
        .iter()
        .map(|g| {
            let verdict = graph::screen(g);
            GraphRow { excluded: verdict.excluded(), verdict }
        })
        .collect();
    let dist = |r: &GraphRow| r.verdict.triple_point_distance.map_or("none".to_string(), |d| d.to_string());
    match ctx.format {
        Format::Json => ctx.json(&rows)?,
        Format::Tsv => {
            writeln!(ctx.out, "graph\tpendant_ok\ttriple_point_distance\tcorollary_excluded\texcluded")?;
            for r in &rows {
                let v = &r.verdict;
                writeln!(
                    ctx.out,
                    "{}\t{}\t{}\t{}\t{}",
                    v.graph,
                    v.pendant_ok,
                    dist(r),
                    v.corollary_excluded,
                    r.excluded
                )?;
            }
        }
        Format::Pretty => {
            for (i, r) in rows.iter().enumerate() {
                if i > 0 {
                    writeln!(ctx.out)?;
                }
                let v = &r.verdict;
                writeln!(ctx.out, "graph                  {}", v.graph)?;
                writeln!(ctx.out, "pendant_ok             {}", v.pendant_ok)?;
                if let Some(w) = &v.pendant_witness {
                    let pairs: Vec<String> = w.iter().map(|(odd, even)| format!("{odd}→{even}")).collect();
                    writeln!(ctx.out, "pendant_witness        {}", pairs.join(", "))?;
                }
                writeln!(ctx.out, "triple_point_distance  {}", dist(r))?;
                writeln!(ctx.out, "corollary_excluded     {}", v.corollary_excluded)?;
                writeln!(ctx.out, "excluded               {}", r.excluded)?;
            }
        }
    }
    Ok(true)
}

pub fn braidings(ctx: &mut Ctx<'_>, diagram: &str) -> CmdResult {
    let d = parse_diagram(diagram)?;
    let report = braiding_report(d, ctx.data_dir)?;
    match ctx.format {
        Format::Json => ctx.json(&report)?,
        Format::Tsv => {
            writeln!(ctx.out, "embedding\tobject\timage")?;
            for (i, m) in report.embeddings.iter().enumerate() {
                for (l, b) in m {
                    writeln!(ctx.out, "{}\t{l}\t{b}", i + 1)?;
                }
            }
        }
        Format::Pretty => {
            writeln!(ctx.out, "{}: {} braidings", report.diagram, report.count)?;
            for (i, m) in report.embeddings.iter().enumerate() {
                let pairs: Vec<String> = m.iter().map(|(l, b)| format!("{l}→{b}")).collect();
                writeln!(ctx.out, "  embedding {}: {}", i + 1, pairs.join(", "))?;
            }
            writeln!(ctx.out, "pruning:")?;
            for r in &report.pruning_log {
                writeln!(
                    ctx.out,
                    "  {}: candidates [{}], no edge [{}], {} of other dimension",
                    r.object,
                    r.candidates.join(", "),
                    r.no_edge.join(", "),
                    r.wrong_dimension
                )?;
                for e in &r.eliminated {
                    writeln!(ctx.out, "    {} eliminated: {}", e.candidate, e.reason)?;
                }
            }
        }
    }
    Ok(true)
}

pub fn double_show(ctx: &mut Ctx<'_>, diagram: &str) -> CmdResult {
    let d = parse_diagram(diagram)?;
    let (_, double) = double_for(d, ctx.data_dir)?;
    let inv = double.invariants();
    let base = double.base();
    let ring = double.ring();
    match ctx.format {
        Format::Json => {
            let file = serde_json::to_value(double.to_file()).map_err(|e| Failure::Other(e.to_string()))?;
            ctx.json(&json!({ "double": file, "invariants_hold": inv.all_hold() }))?;
        }
        Format::Tsv => {
            writeln!(ctx.out, "object\tdim\t{}", base.objects().join("\t"))?;
            for b in 0..double.rank() {
                let row: Vec<String> = (0..base.rank()).map(|l| double.edges(b, l).to_string()).collect();
                writeln!(ctx.out, "{}\t{}\t{}", ring.object(b), ring.dim(b).to_decimal(DECIMALS), row.join("\t"))?;
            }
        }
        Format::Pretty => {
            writeln!(ctx.out, "{} over {} ({} objects)", double.name(), base.name(), double.rank())?;
            if let Some(s) = double.source() {
                writeln!(ctx.out, "source: {s}")?;
            }
            let width = ring.objects().iter().map(|o| o.chars().count()).max().unwrap_or(0);
            for b in 0..double.rank() {
                let edges: Vec<String> = (0..base.rank())
                    .filter(|&l| double.edges(b, l) > 0)
                    .map(|l| match double.edges(b, l) {
                        1 => base.object(l).to_string(),
                        n => format!("{n}·{}", base.object(l)),
                    })
                    .collect();
                let name = ring.object(b);
                let pad = width - name.chars().count();
                writeln!(
                    ctx.out,
                    "  {name}{:pad$}  dim {} ≈ {}  restricts to {}",
                    "",
                    ring.dim(b),
                    ring.dim(b).to_decimal(6),
                    edges.join(" + ")
                )?;
            }
            writeln!(ctx.out, "invariants: {}", if inv.all_hold() { "all hold" } else { "FAILED" })?;
            for f in &inv.failures {
                writeln!(ctx.out, "  {f}")?;
            }
        }
    }
    Ok(inv.all_hold())
}

pub fn classify(ctx: &mut Ctx<'_>, diagram: &str) -> CmdResult {
    let d = parse_diagram(diagram)?;
    let v = section4_verdict_with(d, ctx.data_dir)?;
    match ctx.format {
        Format::Json => ctx.json(&v)?,
        Format::Tsv => {
            writeln!(ctx.out, "diagram\tadmissible\tindex\tclaim\tanchor")?;
            for r in &v.reasons {
                writeln!(
                    ctx.out,
                    "{}\t{}\t{}\t{}\t{}",
                    v.diagram,
                    v.admissible,
                    v.index.to_decimal(DECIMALS),
                    r.claim,
                    r.anchor
                )?;
            }
        }
        Format::Pretty => {
            writeln!(ctx.out, "{v}")?;
            writeln!(ctx.out, "index {} ≈ {}", v.index, v.index.to_decimal(DECIMALS))?;
            for r in &v.reasons {
                writeln!(ctx.out, "  - {} [{}]", r.claim, r.anchor)?;
            }
        }
    }
    Ok(true)
}
