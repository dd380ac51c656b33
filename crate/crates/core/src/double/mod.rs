//! Quantum-double systems over a base ring, with restriction edges.
//!
//! A double carries its own fusion ring, a label per object and the edge
//! counts `edges(β, l)` of the induction–restriction graph to the base.
//! Restriction is a unital ring homomorphism, which is how unknown rows are
//! solved for.

mod restrict;

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

pub use restrict::{solve_restriction, RestrictionProblem};

use crate::algnum::AlgReal;
use crate::error::{Error, Result};
use crate::fusion::{self, FusionRing, FusionRingFile, OrbitClass, SimpleCurrentExtension};
use crate::graph::Diagram;

/// How a double object is named: a pair `(j,k)`, or one half of a split
/// fixed pair tagged `+`, `-`, `_1` or `_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DoubleLabel {
    Pair { j: String, k: String },
    Split { j: String, k: String, tag: String },
}

impl fmt::Display for DoubleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DoubleLabel::Pair { j, k } => write!(f, "({j},{k})"),
            DoubleLabel::Split { j, k, tag } => write!(f, "({j},{k}){tag}"),
        }
    }
}

/// The unsplit edge counts a split pair must add up to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitTotal {
    pub halves: (usize, usize),
    pub total: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct DoubleSystem {
    name: String,
    base: FusionRing,
    ring: FusionRing,
    labels: Vec<DoubleLabel>,
    edges: Vec<Vec<u32>>,
    split_totals: Vec<SplitTotal>,
    source: Option<String>,
}

/// Outcome of the three exact identities every double satisfies.
#[derive(Clone, Debug, Serialize)]
pub struct DoubleInvariants {
    pub restriction_dimension: bool,
    pub split_recovery: bool,
    pub global_dimension: bool,
    pub failures: Vec<String>,
}

impl DoubleInvariants {
    pub fn all_hold(&self) -> bool {
        self.restriction_dimension && self.split_recovery && self.global_dimension
    }
}

impl DoubleSystem {
    /// Assembles a double and checks its invariants exactly.
    pub fn new(
        name: impl Into<String>,
        base: FusionRing,
        ring: FusionRing,
        labels: Vec<DoubleLabel>,
        edges: Vec<Vec<u32>>,
        split_totals: Vec<SplitTotal>,
    ) -> Result<Self> {
        let d = DoubleSystem { name: name.into(), base, ring, labels, edges, split_totals, source: None };
        let r = d.ring.rank();
        if d.labels.len() != r || d.edges.len() != r || d.edges.iter().any(|row| row.len() != d.base.rank()) {
            return Err(Error::Double(format!("{}: labels or edges have the wrong shape", d.name)));
        }
        if d.split_totals.iter().any(|s| s.halves.0 >= r || s.halves.1 >= r || s.total.len() != d.base.rank()) {
            return Err(Error::Double(format!("{}: split totals have the wrong shape", d.name)));
        }
        let inv = d.invariants();
        if !inv.all_hold() {
            return Err(Error::Double(format!("{}: {}", d.name, inv.failures.join("; "))));
        }
        Ok(d)
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &FusionRing {
        &self.base
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn labels(&self) -> &[DoubleLabel] {
        &self.labels
    }

    pub fn label(&self, beta: usize) -> &DoubleLabel {
        &self.labels[beta]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.ring.index_of(label)
    }

    pub fn edges(&self, beta: usize, l: usize) -> u32 {
        self.edges[beta][l]
    }

    pub fn edge_rows(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn split_totals(&self) -> &[SplitTotal] {
        &self.split_totals
    }

    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn invariants(&self) -> DoubleInvariants {
        let mut failures = Vec::new();
        let base_dims = self.base.dims();
        let mut restriction_dimension = true;
        for (beta, row) in self.edges.iter().enumerate() {
            let restricted: AlgReal = row
                .iter()
                .zip(base_dims)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, d)| d * &AlgReal::from_integer(i64::from(e)))
                .sum();
            if &restricted != self.ring.dim(beta) {
                restriction_dimension = false;
                failures.push(format!("Σ_l edges·d_l ≠ d for {}", self.labels[beta]));
            }
        }
        let mut split_recovery = true;
        for s in &self.split_totals {
            let (a, b) = s.halves;
            let sum: Vec<u32> = self.edges[a].iter().zip(&self.edges[b]).map(|(x, y)| x + y).collect();
            if sum != s.total {
                split_recovery = false;
                failures.push(format!(
                    "halves {} and {} do not add up to the unsplit edges",
                    self.labels[a], self.labels[b]
                ));
            }
        }
        let base_global = self.base.global_dim();
        let global_dimension = self.ring.global_dim() == &base_global * &base_global;
        if !global_dimension {
            failures.push("Σ d_β² ≠ (Σ d_λ²)²".into());
        }
        DoubleInvariants { restriction_dimension, split_recovery, global_dimension, failures }
    }

    pub fn to_file(&self) -> DoubleFile {
        let mut edges = Vec::new();
        for (beta, row) in self.edges.iter().enumerate() {
            for (l, &c) in row.iter().enumerate() {
                if c > 0 {
                    edges.push([beta as u64, l as u64, u64::from(c)]);
                }
            }
        }
        DoubleFile {
            name: self.name.clone(),
            source: self.source.clone(),
            base: FusionRingFile::from(&self.base),
            ring: FusionRingFile::from(&self.ring),
            labels: self.labels.clone(),
            edges,
            split_totals: self.split_totals.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("serializable");
        s.push('\n');
        s
    }
}

/// JSON form of a double: two ring blocks, labels, and `[β, l, count]`
/// edge triples.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DoubleFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub base: FusionRingFile,
    pub ring: FusionRingFile,
    pub labels: Vec<DoubleLabel>,
    pub edges: Vec<[u64; 3]>,
    #[serde(default)]
    pub split_totals: Vec<SplitTotal>,
}

impl TryFrom<DoubleFile> for DoubleSystem {
    type Error = Error;

    fn try_from(f: DoubleFile) -> Result<Self> {
        let base = FusionRing::try_from(f.base)?;
        let ring = FusionRing::try_from(f.ring)?;
        let mut edges = vec![vec![0; base.rank()]; ring.rank()];
        for [beta, l, c] in f.edges {
            let (beta, l) = (beta as usize, l as usize);
            if beta >= ring.rank() || l >= base.rank() {
                return Err(Error::Double("edge index out of range".into()));
            }
            edges[beta][l] = u32::try_from(c).map_err(|_| Error::Double("edge count too large".into()))?;
        }
        for (beta, label) in f.labels.iter().enumerate() {
            if ring.objects().get(beta).map(String::as_str) != Some(label.to_string().as_str()) {
                return Err(Error::Double(format!("label {label} does not match ring object {beta}")));
            }
        }
        let d = DoubleSystem::new(f.name, base, ring, f.labels, edges, f.split_totals)?;
        Ok(match f.source {
            Some(s) => d.with_source(s),
            None => d,
        })
    }
}

/// Parses and validates a double from JSON text.
pub fn parse_double(text: &str) -> Result<DoubleSystem> {
    let file: DoubleFile = serde_json::from_str(text)?;
    DoubleSystem::try_from(file)
}

/// Reads and validates a double from a JSON file.
pub fn load_double(path: &Path) -> Result<DoubleSystem> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::MissingData { path: path.to_path_buf() },
        _ => Error::Io { path: path.to_path_buf(), source: e },
    })?;
    parse_double(&text)
}

/// `Δ ⊗ Δ` with `edges((j,k), l) = N_{jk}^l`.
///
/// This describes the double only when the braiding on `Δ` is
/// nondegenerate; the function itself accepts any ring.
pub fn product_double(delta: &FusionRing) -> DoubleSystem {
    let ring = fusion::tensor_ring(delta, delta).rename(format!("{} double", delta.name()));
    let n = delta.rank();
    let mut labels = Vec::with_capacity(n * n);
    let mut edges = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            labels.push(DoubleLabel::Pair { j: delta.object(j).into(), k: delta.object(k).into() });
            let mut row = vec![0; n];
            for &(l, c) in delta.product(j, k) {
                row[l] = c;
            }
            edges.push(row);
        }
    }
    DoubleSystem {
        name: ring.name().to_string(),
        base: delta.clone(),
        ring,
        labels,
        edges,
        split_totals: Vec::new(),
        source: None,
    }
}

/// Orbit representative with the smaller `j + k`, then the smaller `j`.
fn a_orbit_rep(pairs: &[(usize, usize)]) -> (usize, usize) {
    *pairs.iter().min_by_key(|&&(j, k)| (j + k, j)).unwrap()
}

/// The double of the even part of SU(2)_{2n}: pairs `(j,k)` with `j + k`
/// even modulo `(j,k) ~ (2n−j, 2n−k)`, with `(n,n)` split into halves.
pub fn a_odd_double(n: u32) -> Result<DoubleSystem> {
    let candidates = a_odd_double_candidates(n)?;
    let count = candidates.len();
    let mut iter = candidates.into_iter();
    match (iter.next(), count) {
        (Some(d), 1) => Ok(d),
        _ => Err(Error::Completion(format!("A{} double: {count} completions", 2 * n + 1))),
    }
}

/// Every completion of [`a_odd_double`] with consistent edges.
pub fn a_odd_double_candidates(n: u32) -> Result<Vec<DoubleSystem>> {
    if n < 1 {
        return Err(Error::InvalidArgument("a_odd_double needs n ≥ 1".into()));
    }
    let level = 2 * n;
    let su2 = fusion::su2_ring(level)?;
    let base = fusion::su2_even_part(level)?;
    let parent = fusion::tensor_ring(&su2, &su2);
    let m = su2.rank();
    let pair = |j: usize, k: usize| j * m + k;
    let local: Vec<usize> = (0..m)
        .flat_map(|j| (0..m).map(move |k| (j, k)))
        .filter(|(j, k)| (j + k) % 2 == 0)
        .map(|(j, k)| pair(j, k))
        .collect();
    let current = pair(m - 1, m - 1);
    let split_labels = |fixed: usize| (fixed / m, fixed % m);
    let name = format!("A{} double", 2 * n + 1);
    let ext = SimpleCurrentExtension::new(&parent, current, &local, &name, |c| match c {
        OrbitClass::Orbit(v) => {
            let (j, k) = a_orbit_rep(&v.iter().map(|&x| (x / m, x % m)).collect::<Vec<_>>());
            format!("({j},{k})")
        }
        OrbitClass::Split { fixed, index } => {
            let (j, k) = split_labels(*fixed);
            format!("({j},{k}){}", if *index == 0 { "_+" } else { "_-" })
        }
    })?;
    // Restriction of (j,k) to the base is j ⊗ k in SU(2)_{2n}.
    let restrict_pair = |j: usize, k: usize| -> Vec<u32> {
        let mut row = vec![0; base.rank()];
        for &(l, c) in su2.product(j, k) {
            row[l / 2] += c;
        }
        row
    };
    let mut out = Vec::new();
    for ring in ext.completions()? {
        let mut rows: Vec<Option<Vec<u32>>> = Vec::new();
        let mut labels = Vec::new();
        let mut split_totals = Vec::new();
        for (a, class) in ext.data.classes.iter().enumerate() {
            match class {
                OrbitClass::Orbit(v) => {
                    let (j, k) = a_orbit_rep(&v.iter().map(|&x| (x / m, x % m)).collect::<Vec<_>>());
                    labels.push(DoubleLabel::Pair { j: j.to_string(), k: k.to_string() });
                    rows.push(Some(restrict_pair(j, k)));
                }
                OrbitClass::Split { fixed, index } => {
                    let (j, k) = split_labels(*fixed);
                    let tag = if *index == 0 { "_+" } else { "_-" };
                    labels.push(DoubleLabel::Split { j: j.to_string(), k: k.to_string(), tag: tag.into() });
                    rows.push(None);
                    if *index == 0 {
                        split_totals.push(SplitTotal { halves: (a, a + 1), total: restrict_pair(j, k) });
                    }
                }
            }
        }
        let problem = RestrictionProblem { base: &base, ring: &ring, rows, split_totals: &split_totals };
        for edges in solve_restriction(&problem)? {
            let (ring, labels, edges) = orient_halves(ring.clone(), labels.clone(), edges, &split_totals, base.unit());
            out.push(DoubleSystem::new(name.clone(), base.clone(), ring, labels, edges, split_totals.clone())?);
        }
    }
    dedup_doubles(&mut out);
    Ok(out)
}

/// Names the half whose restriction contains the unit with the first tag.
fn orient_halves(
    ring: FusionRing,
    labels: Vec<DoubleLabel>,
    mut edges: Vec<Vec<u32>>,
    splits: &[SplitTotal],
    unit: usize,
) -> (FusionRing, Vec<DoubleLabel>, Vec<Vec<u32>>) {
    let mut perm: Vec<usize> = (0..ring.rank()).collect();
    for s in splits {
        let (a, b) = s.halves;
        if edges[a][unit] == 0 && edges[b][unit] > 0 {
            perm.swap(a, b);
        }
    }
    if perm.iter().enumerate().all(|(i, &p)| i == p) {
        return (ring, labels, edges);
    }
    let constants = ring.constants().into_iter().map(|(i, j, k, v)| (perm[i], perm[j], perm[k], v));
    let mut dual = vec![0; ring.rank()];
    for i in 0..ring.rank() {
        dual[perm[i]] = perm[ring.dual(i)];
    }
    let mut dims = ring.dims().to_vec();
    let mut new_edges = edges.clone();
    for i in 0..ring.rank() {
        dims[perm[i]] = ring.dim(i).clone();
        new_edges[perm[i]] = std::mem::take(&mut edges[i]);
    }
    let ring = FusionRing::from_constants_unchecked(
        ring.name().to_string(),
        ring.objects().to_vec(),
        perm[ring.unit()],
        dual,
        constants,
        dims,
    );
    (ring, labels, new_edges)
}

fn dedup_doubles(list: &mut Vec<DoubleSystem>) {
    let mut seen = std::collections::BTreeSet::new();
    list.retain(|d| seen.insert((d.ring.constants(), d.edges.clone())));
}

/// Which bundled double belongs to an exceptional diagram.
pub fn bundled_double_file(diagram: Diagram) -> Result<&'static str> {
    match diagram {
        Diagram::E(6) => Ok("e6_double.json"),
        Diagram::E(8) => Ok("e8_double.json"),
        _ => Err(Error::InvalidArgument(format!("no bundled double for {diagram}"))),
    }
}

pub(crate) const E6_DOUBLE_JSON: &str = include_str!("../../data/e6_double.json");
pub(crate) const E8_DOUBLE_JSON: &str = include_str!("../../data/e8_double.json");

/// Loads the double for E6 or E8, from `data_dir` when given and from the
/// copy compiled into the library otherwise.
pub fn exceptional_double(diagram: Diagram, data_dir: Option<&Path>) -> Result<DoubleSystem> {
    let file = bundled_double_file(diagram)?;
    match data_dir {
        Some(dir) => load_double(&dir.join(file)),
        None => parse_double(if file.starts_with("e6") { E6_DOUBLE_JSON } else { E8_DOUBLE_JSON }),
    }
}

pub mod exceptional;

#[cfg(test)]
mod tests;
