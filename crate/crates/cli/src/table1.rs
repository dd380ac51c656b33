//! The braiding-count table, one column per diagram class.

use std::collections::BTreeMap;

use ade_fusion::embed::braiding_report;
use ade_fusion::graph::Diagram;
use serde::Serialize;

use crate::{CmdResult, Ctx, Failure, Format};

/// Column name, its diagrams and the expected count for each.
pub fn columns() -> Vec<(&'static str, Vec<Diagram>, usize)> {
    let other_a = (3..=25).filter(|&n| n != 5).map(Diagram::A).collect();
    let other_d = (4..=12).map(|n| Diagram::D(2 * n)).collect();
    vec![
        ("A2", vec![Diagram::A(2)], 1),
        ("A5", vec![Diagram::A(5)], 3),
        ("otherA", other_a, 2),
        ("D4", vec![Diagram::D(4)], 3),
        ("D6", vec![Diagram::D(6)], 4),
        ("otherD", other_d, 2),
        ("E6", vec![Diagram::E(6)], 0),
        ("E8", vec![Diagram::E(8)], 0),
    ]
}

#[derive(Debug, Serialize)]
pub struct Column {
    pub name: String,
    pub expected: usize,
    pub counts: BTreeMap<String, usize>,
    pub ok: bool,
}

impl Column {
    /// The common count, or every distinct count joined by `|`.
    pub fn value(&self) -> String {
        let mut seen: Vec<usize> = self.counts.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.iter().map(usize::to_string).collect::<Vec<_>>().join("|")
    }
}

#[derive(Debug, Serialize)]
pub struct Table {
    pub columns: Vec<Column>,
    pub ok: bool,
}

pub fn compute(data_dir: Option<&std::path::Path>) -> Result<Table, Failure> {
    let mut out = Vec::new();
    for (name, diagrams, expected) in columns() {
        let mut counts = BTreeMap::new();
        for d in diagrams {
            counts.insert(d.to_string(), braiding_report(d, data_dir)?.count);
        }
        let ok = counts.values().all(|&c| c == expected);
        out.push(Column { name: name.into(), expected, counts, ok });
    }
    let ok = out.iter().all(|c| c.ok);
    Ok(Table { columns: out, ok })
}

pub fn run(ctx: &mut Ctx<'_>) -> CmdResult {
    let table = compute(ctx.data_dir)?;
    match ctx.format {
        Format::Json => ctx.json(&table)?,
        Format::Tsv => {
            let names: Vec<&str> = table.columns.iter().map(|c| c.name.as_str()).collect();
            let values: Vec<String> = table.columns.iter().map(Column::value).collect();
            writeln!(ctx.out, "{}", names.join("\t"))?;
            writeln!(ctx.out, "{}", values.join("\t"))?;
        }
        Format::Pretty => {
            let values: Vec<String> = table.columns.iter().map(Column::value).collect();
            let widths: Vec<usize> =
                table.columns.iter().zip(&values).map(|(c, v)| c.name.len().max(v.len())).collect();
            let row = |cells: Vec<&str>| {
                cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
            };
            writeln!(ctx.out, "{}", row(table.columns.iter().map(|c| c.name.as_str()).collect()))?;
            writeln!(ctx.out, "{}", row(values.iter().map(String::as_str).collect()))?;
            writeln!(ctx.out)?;
            writeln!(ctx.out, "otherA = A3, A4, A6..A25; otherD = D8..D24 (even)")?;
            for c in table.columns.iter().filter(|c| !c.ok) {
                for (d, n) in c.counts.iter().filter(|(_, &n)| n != c.expected) {
                    writeln!(ctx.out, "mismatch: {d} has {n} braidings, expected {}", c.expected)?;
                }
            }
            writeln!(ctx.out, "{}", if table.ok { "all counts match" } else { "counts do not match" })?;
        }
    }
    Ok(table.ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_cover_the_ranges() {
        let cols = columns();
        let names: Vec<&str> = cols.iter().map(|c| c.0).collect();
        assert_eq!(names, ["A2", "A5", "otherA", "D4", "D6", "otherD", "E6", "E8"]);
        assert_eq!(cols[2].1.len(), 22);
        assert_eq!(cols[5].1.first(), Some(&Diagram::D(8)));
        assert_eq!(cols[5].1.last(), Some(&Diagram::D(24)));
    }

    #[test]
    fn mixed_columns_show_every_count() {
        let counts = BTreeMap::from([("A3".to_string(), 2), ("A4".to_string(), 3)]);
        let c = Column { name: "otherA".into(), expected: 2, counts, ok: false };
        assert_eq!(c.value(), "2|3");
    }
}
