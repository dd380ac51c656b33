//! Verdicts on which principal graphs with index below four survive, the
//! list of admissible index values, and partial Longo–Rehren indices.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algnum::AlgReal;
use crate::embed;
use crate::error::{Error, Result};
use crate::fusion;
use crate::graph::Diagram;

/// Levels a table record applies to: `from, from + step, …`, or only
/// `from` when `step` is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Levels {
    pub from: u32,
    #[serde(default)]
    pub step: u32,
}

impl Levels {
    pub fn contains(&self, k: u32) -> bool {
        match self.step {
            0 => k == self.from,
            s => k >= self.from && (k - self.from) % s == 0,
        }
    }
}

/// One family of local extensions of SU(2)_k in the bundled table. Spins in
/// `theta` are numbers or `"k"` for the level.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableEntry {
    pub levels: Levels,
    pub theta: Vec<String>,
    pub label: String,
    pub index: AlgReal,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtensionTable {
    pub source: String,
    pub records: Vec<TableEntry>,
}

/// A table entry instantiated at one level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionRecord {
    pub k: u32,
    pub theta: Vec<u32>,
    pub index: AlgReal,
    pub label: String,
}

impl ExtensionRecord {
    /// `Σ_{j∈θ} d_j / d_0` in SU(2)_k equals the recorded index.
    pub fn index_invariant_holds(&self) -> Result<bool> {
        let r = fusion::su2_ring(self.k)?;
        let mut sum = AlgReal::zero();
        for &j in &self.theta {
            if j > self.k {
                return Ok(false);
            }
            sum = &sum + r.dim(j as usize);
        }
        Ok(self.theta.contains(&0) && sum == self.index)
    }
}

pub(crate) const KL_TABLE_JSON: &str = include_str!("../data/kl_table.json");

impl ExtensionTable {
    pub fn bundled() -> Self {
        serde_json::from_str(KL_TABLE_JSON).expect("bundled table parses")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => Error::MissingData { path: path.to_path_buf() },
            _ => Error::Io { path: path.to_path_buf(), source: e },
        })?;
        Ok(serde_json::from_str(&text)?)
    }

    /// The table file under `data_dir`, or the bundled copy.
    pub fn from_dir(data_dir: Option<&Path>) -> Result<Self> {
        match data_dir {
            Some(dir) => Self::load(&dir.join("kl_table.json")),
            None => Ok(Self::bundled()),
        }
    }

    /// Every record at level `k`.
    pub fn records_at(&self, k: u32) -> Result<Vec<ExtensionRecord>> {
        let mut out = Vec::new();
        for e in self.records.iter().filter(|e| e.levels.contains(k)) {
            let mut theta = e
                .theta
                .iter()
                .map(|s| match s.as_str() {
                    "k" => Ok(k),
                    _ => s.parse().map_err(|_| Error::InvalidArgument(format!("bad spin {s:?} in table"))),
                })
                .collect::<Result<Vec<u32>>>()?;
            theta.sort_unstable();
            out.push(ExtensionRecord { k, theta, index: e.index.clone(), label: e.label.clone() });
        }
        Ok(out)
    }

    pub fn contains(&self, k: u32, theta: &[u32]) -> Result<bool> {
        let mut t = theta.to_vec();
        t.sort_unstable();
        Ok(self.records_at(k)?.iter().any(|r| r.theta == t))
    }
}

/// Whether the bundled table lists a local extension of SU(2)_k with this
/// dual canonical endomorphism.
pub fn kl_lookup(k: u32, theta: &[u32]) -> bool {
    k >= 1 && ExtensionTable::bundled().contains(k, theta).unwrap_or(false)
}

/// The level and `θ` an A or even-D principal graph would force if every
/// braiding came from SU(2)_k.
pub fn theta_for_graph(diagram: Diagram) -> Result<(u32, Vec<u32>)> {
    match diagram.validate()? {
        Diagram::A(n) => Ok((n - 1, vec![0, 2])),
        Diagram::D(m) if m % 2 == 0 => {
            let n = m / 2;
            Ok((4 * n - 4, vec![0, 2, 4 * n - 6, 4 * n - 4]))
        }
        d => Err(Error::InvalidArgument(format!("no θ is attached to {d}"))),
    }
}

fn theta_text(theta: &[u32]) -> String {
    theta.iter().map(u32::to_string).collect::<Vec<_>>().join("⊕")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub claim: String,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub diagram: String,
    pub admissible: bool,
    pub index: AlgReal,
    pub reasons: Vec<Reason>,
    pub realization: Option<String>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.admissible {
            write!(f, "ADMISSIBLE: index {}", self.index)?;
            if let Some(r) = &self.realization {
                write!(f, ", realized by {r}")?;
            }
            Ok(())
        } else {
            let claim = self.reasons.last().map_or("", |r| r.claim.as_str());
            write!(f, "EXCLUDED: {claim}")
        }
    }
}

fn reason(claim: impl Into<String>, anchor: &str) -> Reason {
    Reason { claim: claim.into(), anchor: anchor.into() }
}

const ANCHOR_TABLE: &str = "braiding counts by embedding into the double";
const ANCHOR_SU2: &str = "braidings of the even part come from SU(2)_k";
const ANCHOR_KL: &str = "classification of local extensions of SU(2)_k";
const ANCHOR_REALIZED: &str = "realized by an explicit net";
const ANCHOR_FLAT: &str = "not a principal graph of a subfactor";

fn realization(diagram: Diagram) -> Option<&'static str> {
    match diagram {
        Diagram::A(2) => Some("orbifold (G,H) = ({e},{e})"),
        Diagram::A(3) => Some("orbifold (G,H) = (S_2,{e})"),
        Diagram::A(5) => Some("orbifold (G,H) = (S_3,S_2)"),
        Diagram::D(4) => Some("orbifold (G,H) = (Z/3,{e})"),
        Diagram::D(6) => Some("coset SU(2)_3 ⊗ Vir_{7/10} ⊂ SU(2)_2 ⊗ SU(2)_1"),
        _ => None,
    }
}

/// The verdict for one diagram, with bundled E6/E8 data.
pub fn section4_verdict(diagram: Diagram) -> Result<Verdict> {
    section4_verdict_with(diagram, None)
}

/// The verdict for one diagram, reading E6/E8 doubles and the extension
/// table from `data_dir` when given.
pub fn section4_verdict_with(diagram: Diagram, data_dir: Option<&Path>) -> Result<Verdict> {
    let diagram = diagram.validate()?;
    let index = diagram.index();
    let mut v =
        Verdict { diagram: diagram.to_string(), admissible: false, index, reasons: Vec::new(), realization: None };
    if let Some(r) = realization(diagram) {
        v.admissible = true;
        v.realization = Some(r.to_string());
        v.reasons.push(reason(format!("{diagram} is realized: {r}"), ANCHOR_REALIZED));
        return Ok(v);
    }
    match diagram {
        Diagram::E(6) | Diagram::E(8) => {
            let count = embed::braiding_report(diagram, data_dir)?.count;
            v.reasons.push(reason(format!("braiding count of the even part is {count}"), ANCHOR_TABLE));
            if count != 0 {
                return Err(Error::Double(format!("{diagram}: expected no braiding, found {count}")));
            }
            v.reasons.push(reason("no braiding", ANCHOR_TABLE));
        }
        Diagram::A(_) | Diagram::D(_) if theta_for_graph(diagram).is_ok() => {
            let (k, theta) = theta_for_graph(diagram)?;
            let table = ExtensionTable::from_dir(data_dir)?;
            v.reasons.push(reason(format!("every braiding of the even part comes from SU(2)_{k}"), ANCHOR_SU2));
            if table.contains(k, &theta)? {
                return Err(Error::InvalidArgument(format!(
                    "{diagram}: θ {} is listed at level {k}",
                    theta_text(&theta)
                )));
            }
            v.reasons
                .push(reason(format!("theta {} not a local extension of SU(2)_{k}", theta_text(&theta)), ANCHOR_KL));
        }
        _ => v.reasons.push(reason(format!("{diagram} does not occur"), ANCHOR_FLAT)),
    }
    Ok(v)
}

/// One admissible index value with how it is realized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexValue {
    pub value: AlgReal,
    pub symbol: String,
    pub realization: String,
}

/// `3 + √3`, the largest value covered.
pub fn index_ceiling() -> AlgReal {
    &AlgReal::from_integer(3) + &AlgReal::sqrt(3).expect("√3 is cyclotomic")
}

/// The admissible index values up to `ceiling`, in increasing order.
pub fn admissible_index_values(ceiling: &AlgReal) -> Result<Vec<IndexValue>> {
    let top = index_ceiling();
    if *ceiling > top {
        return Err(Error::InvalidArgument(format!("no claim is made above {top}")));
    }
    let all = [
        (AlgReal::from_integer(1), "1", "orbifold of order 1"),
        (AlgReal::from_integer(2), "2", "orbifold of order 2"),
        (AlgReal::from_integer(3), "3", "orbifold of order 3"),
        (AlgReal::four_cos_sq(10)?, "4cos^2(pi/10)", "coset with principal graph D6"),
        (AlgReal::from_integer(4), "4", "orbifold of index 4"),
        (top, "3+sqrt(3)", "conformal embedding SU(2)_10 ⊂ SO(5)_1"),
    ];
    Ok(all
        .into_iter()
        .filter(|(v, _, _)| v <= ceiling)
        .map(|(value, symbol, realization)| IndexValue {
            value,
            symbol: symbol.into(),
            realization: realization.into(),
        })
        .collect())
}

/// `Σ_{j∈subset} d_j²` in SU(2)_k.
pub fn lr_partial_index(k: u32, subset: &[u32]) -> Result<AlgReal> {
    if !subset.contains(&0) {
        return Err(Error::InvalidArgument("the subset must contain 0".into()));
    }
    let r = fusion::su2_ring(k)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut sum = AlgReal::zero();
    for &j in subset {
        if j > k {
            return Err(Error::InvalidArgument(format!("spin {j} exceeds level {k}")));
        }
        if seen.insert(j) {
            let d = r.dim(j as usize);
            sum = &sum + &(d * d);
        }
    }
    Ok(sum)
}

/// Parses an index bound: sums and differences of integers, decimals,
/// fractions, `sqrt(m)` / `sqrtm` / `√m` with optional integer coefficient,
/// and `4cos^2(pi/n)`.
pub fn parse_index_expr(text: &str) -> Result<AlgReal> {
    let bad = || Error::InvalidArgument(format!("cannot read {text:?} as an index value"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad());
    }
    let mut total = AlgReal::zero();
    let mut rest = s.as_str();
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = parse_term(&rest[..end]).ok_or_else(bad)?;
        total = &total + &(&term * &AlgReal::from_integer(sign));
        if end == rest.len() {
            return Ok(total);
        }
        sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
        rest = &rest[end + 1..];
    }
}

fn parse_term(t: &str) -> Option<AlgReal> {
    if let Some(inner) = t.strip_prefix("4cos^2(pi/").and_then(|r| r.strip_suffix(')')) {
        return AlgReal::four_cos_sq(inner.parse().ok()?).ok();
    }
    for marker in ["*sqrt", "sqrt", "*√", "√"] {
        if let Some(pos) = t.find(marker) {
            let coeff = match &t[..pos] {
                "" => AlgReal::one(),
                c => AlgReal::from_integer(c.parse().ok()?),
            };
            let arg = t[pos + marker.len()..].trim_start_matches('(').trim_end_matches(')');
            return Some(&coeff * &AlgReal::sqrt(arg.parse().ok()?).ok()?);
        }
    }
    if let Some((a, b)) = t.split_once('/') {
        let (a, b): (i64, i64) = (a.parse().ok()?, b.parse().ok()?);
        return (b != 0).then(|| AlgReal::from_ratio(a, b));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
            return None;
        }
        let den = 10i64.pow(frac.len() as u32);
        let whole: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
        let f: i64 = frac.parse().ok()?;
        return Some(AlgReal::from_ratio(whole * den + f, den));
    }
    Some(AlgReal::from_integer(t.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_examples() {
        assert_eq!(theta_for_graph(Diagram::A(7)).unwrap(), (6, vec![0, 2]));
        assert_eq!(theta_for_graph(Diagram::D(8)).unwrap(), (12, vec![0, 2, 10, 12]));
        assert_eq!(theta_for_graph(Diagram::D(6)).unwrap(), (8, vec![0, 2, 6, 8]));
        assert!(theta_for_graph(Diagram::E(6)).is_err());
    }

    #[test]
    fn lookup_examples() {
        assert!(!kl_lookup(6, &[0, 2]));
        assert!(!kl_lookup(12, &[0, 2, 10, 12]));
        assert!(kl_lookup(12, &[0, 12]));
        assert!(kl_lookup(10, &[6, 0]));
        assert!(kl_lookup(28, &[0, 10, 18, 28]));
        assert!(kl_lookup(7, &[0]));
        assert!(!kl_lookup(10, &[0, 10]));
    }

    #[test]
    fn table_records_pass_index_invariant() {
        let table = ExtensionTable::bundled();
        for k in 1..=40 {
            for rec in table.records_at(k).unwrap() {
                assert!(rec.index_invariant_holds().unwrap(), "{rec:?}");
            }
        }
    }

    /// The index of a conformal inclusion is `√(D²_outer / D²_local)`.
    #[test]
    fn exceptional_records_match_global_dimension_ratio() {
        let table = ExtensionTable::bundled();
        let su2_global = |k: f64| (k + 2.0) / (2.0 * (std::f64::consts::PI / (k + 2.0)).sin().powi(2));
        let e6 = table.records_at(10).unwrap().into_iter().find(|r| r.label == "E6").unwrap();
        assert!((e6.index.to_f64() - (su2_global(10.0) / 4.0).sqrt()).abs() < 1e-9);
        assert_eq!(e6.index, index_ceiling());
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let e8 = table.records_at(28).unwrap().into_iter().find(|r| r.label == "E8").unwrap();
        assert!((e8.index.to_f64() - (su2_global(28.0) / (1.0 + phi * phi)).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn verdict_examples() {
        let a5 = section4_verdict(Diagram::A(5)).unwrap();
        assert!(a5.admissible);
        assert_eq!(a5.index, AlgReal::from_integer(3));
        assert!(a5.realization.as_deref().unwrap().contains("(S_3,S_2)"));
        let d6 = section4_verdict(Diagram::D(6)).unwrap();
        assert_eq!(d6.index, AlgReal::four_cos_sq(10).unwrap());
        let a7 = section4_verdict(Diagram::A(7)).unwrap();
        assert_eq!(a7.to_string(), "EXCLUDED: theta 0⊕2 not a local extension of SU(2)_6");
        let e8 = section4_verdict(Diagram::E(8)).unwrap();
        assert!(!e8.admissible);
        assert!(e8.reasons.iter().any(|r| r.claim == "no braiding"));
    }

    #[test]
    fn index_values() {
        let six = admissible_index_values(&index_ceiling()).unwrap();
        assert_eq!(six.len(), 6);
        assert_eq!(six[3].value.to_decimal(12), "3.618033988750");
        assert_eq!(six[5].value.to_decimal(12), "4.732050807569");
        assert_eq!(admissible_index_values(&AlgReal::from_integer(4)).unwrap().len(), 5);
        assert_eq!(admissible_index_values(&AlgReal::from_integer(3)).unwrap().len(), 3);
        assert!(admissible_index_values(&AlgReal::from_integer(5)).is_err());
    }

    #[test]
    fn partial_index() {
        assert_eq!(lr_partial_index(3, &[0, 2]).unwrap(), AlgReal::four_cos_sq(10).unwrap());
        assert_eq!(lr_partial_index(3, &[0]).unwrap(), AlgReal::one());
        let full = lr_partial_index(3, &[0, 1, 2, 3]).unwrap();
        assert_eq!(full, &lr_partial_index(3, &[0, 2]).unwrap() * &AlgReal::from_integer(2));
        assert!(lr_partial_index(3, &[2]).is_err());
    }

    #[test]
    fn expressions() {
        let top = index_ceiling();
        assert_eq!(parse_index_expr("3+sqrt3").unwrap(), top);
        assert_eq!(parse_index_expr("3 + sqrt(3)").unwrap(), top);
        assert_eq!(parse_index_expr("3+√3").unwrap(), top);
        assert_eq!(parse_index_expr("4.8").unwrap(), AlgReal::from_ratio(24, 5));
        assert_eq!(parse_index_expr("7/2").unwrap(), AlgReal::from_ratio(7, 2));
        assert_eq!(parse_index_expr("4cos^2(pi/10)").unwrap(), AlgReal::four_cos_sq(10).unwrap());
        assert_eq!(
            parse_index_expr("1-2*sqrt(2)").unwrap(),
            &AlgReal::one() - &(&AlgReal::from_integer(2) * &AlgReal::sqrt(2).unwrap())
        );
        assert!(parse_index_expr("three").is_err());
        assert!(parse_index_expr("").is_err());
    }
}
