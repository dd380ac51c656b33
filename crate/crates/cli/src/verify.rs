//! The invariant suite behind `verify`.

use std::path::Path;

use ade_fusion::classify::{admissible_index_values, index_ceiling, ExtensionTable};
use ade_fusion::embed::{braiding_report, double_for};
use ade_fusion::fusion::{self, verify_axioms};
use ade_fusion::graph::{self, Diagram};
use serde::Serialize;

use crate::{CmdResult, Ctx, Format};

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;
type Named<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn su2_axioms() -> Outcome {
    for k in 1..=16 {
        let r = fusion::su2_ring(k).map_err(|e| e.to_string())?;
        let report = verify_axioms(&r);
        if !report.all_passed() {
            return Err(format!("SU(2)_{k}: {}", report.first_failure()));
        }
        let even = fusion::su2_even_part(k).map_err(|e| e.to_string())?;
        if !verify_axioms(&even).all_passed() {
            return Err(format!("even part of SU(2)_{k}"));
        }
    }
    Ok("SU(2)_k and its even part satisfy every axiom for k ≤ 16".into())
}

fn d2n_unique() -> Outcome {
    for n in 2..=12 {
        let rings = fusion::d2n_even_ring_candidates(n).map_err(|e| e.to_string())?;
        if rings.len() != 1 {
            return Err(format!("D{}: {} completions", 2 * n, rings.len()));
        }
    }
    Ok("the D_2n even part is the unique completion for n ≤ 12".into())
}

fn series() -> Vec<Diagram> {
    let a = (2..=25).map(Diagram::A);
    let d = (2..=12).map(|n| Diagram::D(2 * n));
    a.chain(d).collect()
}

fn double_invariants(data_dir: Option<&Path>) -> Outcome {
    let mut n = 0;
    for d in series().into_iter().chain([Diagram::E(6), Diagram::E(8)]) {
        let (_, double) = double_for(d, data_dir).map_err(|e| format!("{d}: {e}"))?;
        let inv = double.invariants();
        if !inv.all_hold() {
            return Err(format!("{d}: {}", inv.failures.join("; ")));
        }
        n += 1;
    }
    Ok(format!("{n} doubles: dimensions restrict, split halves add up, Σ d_β² = (Σ d_λ²)²"))
}

fn exceptional_counts(data_dir: Option<&Path>) -> Outcome {
    for d in [Diagram::E(6), Diagram::E(8)] {
        let count = braiding_report(d, data_dir).map_err(|e| e.to_string())?.count;
        if count != 0 {
            return Err(format!("{d} has {count} braidings"));
        }
    }
    Ok("E6 and E8 have no braiding".into())
}

fn extension_table(data_dir: Option<&Path>) -> Outcome {
    let table = ExtensionTable::from_dir(data_dir).map_err(|e| e.to_string())?;
    let mut n = 0;
    for k in 1..=30 {
        for r in table.records_at(k).map_err(|e| e.to_string())? {
            if !r.index_invariant_holds().map_err(|e| e.to_string())? {
                return Err(format!("level {k}, {}: index differs from Σ d_j", r.label));
            }
            n += 1;
        }
    }
    Ok(format!("{n} records up to level 30 have index Σ_θ d_j"))
}

fn pendant_screen() -> Outcome {
    let corpus = (2..=30).map(Diagram::A).chain((4..=30).map(Diagram::D)).chain((6..=8).map(Diagram::E));
    let mut passing = Vec::new();
    for d in corpus {
        let g = graph::dynkin(d).map_err(|e| e.to_string())?;
        if graph::pendant_criterion(&g).ok {
            passing.push(d.to_string());
        }
    }
    if passing == ["A2", "A3", "A5", "D4", "D6"] {
        Ok("pendant criterion passes exactly A2, A3, A5, D4, D6".into())
    } else {
        Err(format!("pendant criterion passes {}", passing.join(", ")))
    }
}

fn haagerup_screen() -> Outcome {
    let mut n = 0;
    for g in graph::haagerup_corpus() {
        if !graph::screen(&g).excluded() {
            return Err(format!("{} is not excluded", g.name()));
        }
        n += 1;
    }
    for depth in 5..=50 {
        let g = graph::a_infinity(depth).map_err(|e| e.to_string())?;
        if !graph::screen(&g).excluded() {
            return Err(format!("Ainf at depth {depth} is not excluded"));
        }
    }
    Ok(format!("{n} candidates and Ainf at depths 5..50 are excluded"))
}

fn index_values() -> Outcome {
    let values = admissible_index_values(&index_ceiling()).map_err(|e| e.to_string())?;
    let symbols: Vec<&str> = values.iter().map(|v| v.symbol.as_str()).collect();
    if symbols == ["1", "2", "3", "4cos^2(pi/10)", "4", "3+sqrt(3)"] {
        Ok(format!("six values up to 3+sqrt(3): {}", symbols.join(", ")))
    } else {
        Err(format!("found {}", symbols.join(", ")))
    }
}

/// Runs every check in order.
pub fn checks(data_dir: Option<&Path>) -> Vec<Check> {
    let list: Vec<Named<'_>> = vec![
        ("fusion axioms", Box::new(su2_axioms)),
        ("D_2n completion", Box::new(d2n_unique)),
        ("double invariants", Box::new(move || double_invariants(data_dir))),
        ("exceptional braidings", Box::new(move || exceptional_counts(data_dir))),
        ("extension table", Box::new(move || extension_table(data_dir))),
        ("pendant screen", Box::new(pendant_screen)),
        ("Haagerup screen", Box::new(haagerup_screen)),
        ("index values", Box::new(index_values)),
    ];
    list.into_iter()
        .map(|(name, f)| {
            let (ok, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check { name: name.into(), ok, detail }
        })
        .collect()
}

pub fn run(ctx: &mut Ctx<'_>) -> CmdResult {
    let results = checks(ctx.data_dir);
    let ok = results.iter().all(|c| c.ok);
    match ctx.format {
        Format::Json => ctx.json(&serde_json::json!({ "checks": results, "ok": ok }))?,
        Format::Tsv => {
            writeln!(ctx.out, "check\tok\tdetail")?;
            for c in &results {
                writeln!(ctx.out, "{}\t{}\t{}", c.name, c.ok, c.detail)?;
            }
        }
        Format::Pretty => {
            for c in &results {
                writeln!(ctx.out, "{} {}: {}", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail)?;
            }
        }
    }
    Ok(ok)
}
