//! Fusion-preserving embeddings of a base ring into its double, and the
//! braiding counts they give.
//!
//! An embedding sends each base object `λ` to a double object of the same
//! dimension that restricts back onto `λ` (at least one edge), injectively
//! and preserving every structure constant.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::double::{self, DoubleSystem};
use crate::error::{Error, Result};
use crate::fusion::{self, FusionRing};
use crate::graph::Diagram;

/// Largest rank accepted by [`braiding_count`] for the A and D series.
pub const MAX_BRAIDING_RANK: u32 = 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Elimination {
    pub candidate: String,
    pub reason: String,
}

/// Candidates for one base object and what happened to them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PruningRecord {
    pub object: String,
    /// Double objects of the same dimension with an edge to the object.
    pub candidates: Vec<String>,
    /// Same dimension, but no edge back to the object.
    pub no_edge: Vec<String>,
    /// How many double objects have a different dimension.
    pub wrong_dimension: usize,
    /// Candidates that appear in no embedding, with the first failure met.
    pub eliminated: Vec<Elimination>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub diagram: String,
    pub count: usize,
    /// Each embedding as base object name → double object name.
    pub embeddings: Vec<BTreeMap<String, String>>,
    pub pruning_log: Vec<PruningRecord>,
    #[serde(skip)]
    pub maps: Vec<Vec<usize>>,
}

/// Double objects with the dimension of `generator` and an edge back to it,
/// in index order.
pub fn candidate_images(delta: &FusionRing, d: &DoubleSystem, generator: usize) -> Vec<usize> {
    (0..d.rank()).filter(|&b| d.ring().dim(b) == delta.dim(generator) && d.edges(b, generator) >= 1).collect()
}

/// Checks one map against every requirement, with no shortcuts.
pub fn verify_embedding(delta: &FusionRing, d: &DoubleSystem, map: &[usize]) -> std::result::Result<(), String> {
    let n = delta.rank();
    if map.len() != n {
        return Err("map has the wrong length".into());
    }
    if map[delta.unit()] != d.ring().unit() {
        return Err("unit is not sent to the unit".into());
    }
    let mut seen = std::collections::BTreeSet::new();
    for (l, &b) in map.iter().enumerate() {
        if !seen.insert(b) {
            return Err(format!("{} is hit twice", d.ring().object(b)));
        }
        if d.ring().dim(b) != delta.dim(l) {
            return Err(format!("dimension of {} differs from {}", d.ring().object(b), delta.object(l)));
        }
        if d.edges(b, l) == 0 {
            return Err(format!("{} has no edge to {}", d.ring().object(b), delta.object(l)));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if d.ring().n(map[i], map[j], map[k]) != delta.n(i, j, k) {
                    return Err(format!(
                        "N_{{{},{}}}^{} is not preserved",
                        delta.object(i),
                        delta.object(j),
                        delta.object(k)
                    ));
                }
            }
        }
    }
    Ok(())
}

struct Search<'a> {
    delta: &'a FusionRing,
    d: &'a DoubleSystem,
    order: Vec<usize>,
    cands: Vec<Vec<usize>>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
    /// (object, candidate) → first failure seen.
    failures: BTreeMap<(usize, usize), String>,
}

impl Search<'_> {
    /// First violated constant among assigned objects involving `l`.
    fn conflict(&self, l: usize) -> Option<String> {
        let ring = self.d.ring();
        let assigned: Vec<usize> = (0..self.delta.rank()).filter(|&x| self.map[x].is_some()).collect();
        let img = |x: usize| self.map[x].unwrap();
        for &i in &assigned {
            for &j in &assigned {
                if i != l && j != l {
                    continue;
                }
                let base_prod = self.delta.product(i, j);
                let image_prod = ring.product(img(i), img(j));
                let complete = base_prod.iter().all(|&(k, _)| self.map[k].is_some());
                let mismatch = assigned.iter().any(|&k| ring.n(img(i), img(j), img(k)) != self.delta.n(i, j, k))
                    || (complete && image_prod.len() != base_prod.len());
                if mismatch {
                    return Some(format!(
                        "{} but {}",
                        ring.format_product(img(i), img(j)),
                        self.delta.format_product(i, j)
                    ));
                }
            }
        }
        None
    }

    fn run(&mut self, t: usize) {
        if t == self.order.len() {
            let map: Vec<usize> = self.map.iter().map(|m| m.unwrap()).collect();
            match verify_embedding(self.delta, self.d, &map) {
                Ok(()) => self.found.push(map),
                Err(e) => {
                    let last = *self.order.last().unwrap();
                    self.failures.entry((last, map[last])).or_insert(e);
                }
            }
            return;
        }
        let l = self.order[t];
        for c in self.cands[l].clone() {
            if self.used[c] {
                self.failures
                    .entry((l, c))
                    .or_insert_with(|| format!("{} is already the image of another object", self.d.ring().object(c)));
                continue;
            }
            self.map[l] = Some(c);
            self.used[c] = true;
            match self.conflict(l) {
                Some(reason) => {
                    self.failures.entry((l, c)).or_insert(reason);
                }
                None => self.run(t + 1),
            }
            self.used[c] = false;
            self.map[l] = None;
        }
    }
}

/// All embeddings of `delta` into `d`, by backtracking over candidate
/// images. Objects with fewer candidates are placed first, then larger
/// dimensions.
pub fn count_embeddings(delta: &FusionRing, d: &DoubleSystem) -> Result<EmbeddingReport> {
    if d.base() != delta {
        return Err(Error::InvalidArgument(format!("{} is not the base of {}", delta.name(), d.name())));
    }
    let n = delta.rank();
    let approx: Vec<f64> = delta.dims().iter().map(|x| x.to_f64()).collect();
    let mut cands = Vec::with_capacity(n);
    let mut log = Vec::with_capacity(n);
    for l in 0..n {
        let c = if l == delta.unit() { vec![d.ring().unit()] } else { candidate_images(delta, d, l) };
        let same_dim: Vec<usize> = (0..d.rank()).filter(|&b| d.ring().dim(b) == delta.dim(l)).collect();
        log.push(PruningRecord {
            object: delta.object(l).to_string(),
            candidates: c.iter().map(|&b| d.ring().object(b).to_string()).collect(),
            no_edge: same_dim
                .iter()
                .filter(|&&b| d.edges(b, l) == 0)
                .map(|&b| d.ring().object(b).to_string())
                .collect(),
            wrong_dimension: d.rank() - same_dim.len(),
            eliminated: Vec::new(),
        });
        cands.push(c);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| cands[a].len().cmp(&cands[b].len()).then(approx[b].total_cmp(&approx[a])).then(a.cmp(&b)));
    let mut s = Search {
        delta,
        d,
        order,
        cands,
        map: vec![None; n],
        used: vec![false; d.rank()],
        found: Vec::new(),
        failures: BTreeMap::new(),
    };
    s.run(0);
    s.found.sort();
    for (l, record) in log.iter_mut().enumerate() {
        for &c in &s.cands[l] {
            if s.found.iter().any(|m| m[l] == c) {
                continue;
            }
            let reason = s
                .failures
                .get(&(l, c))
                .cloned()
                .unwrap_or_else(|| "never reached: an earlier object has no consistent image".into());
            record.eliminated.push(Elimination { candidate: d.ring().object(c).to_string(), reason });
        }
    }
    let embeddings = s
        .found
        .iter()
        .map(|m| {
            m.iter().enumerate().map(|(l, &b)| (delta.object(l).to_string(), d.ring().object(b).to_string())).collect()
        })
        .collect();
    Ok(EmbeddingReport {
        diagram: delta.name().to_string(),
        count: s.found.len(),
        embeddings,
        pruning_log: log,
        maps: s.found,
    })
}

/// The base ring and double used for a diagram's braiding count.
pub fn double_for(diagram: Diagram, data_dir: Option<&Path>) -> Result<(FusionRing, DoubleSystem)> {
    let diagram = diagram.validate()?;
    let too_large = || Error::InvalidArgument(format!("{diagram} is beyond the supported rank {MAX_BRAIDING_RANK}"));
    match diagram {
        Diagram::A(n) if n > MAX_BRAIDING_RANK => Err(too_large()),
        Diagram::D(n) if n > MAX_BRAIDING_RANK => Err(too_large()),
        Diagram::A(n) if n % 2 == 0 => {
            let delta = fusion::su2_even_part(n - 1)?;
            let d = double::product_double(&delta);
            Ok((delta, d))
        }
        Diagram::A(n) => {
            let d = double::a_odd_double((n - 1) / 2)?;
            Ok((d.base().clone(), d))
        }
        Diagram::D(n) if n % 2 == 0 => {
            let delta = fusion::d2n_even_ring(n / 2)?;
            let d = double::product_double(&delta);
            Ok((delta, d))
        }
        Diagram::E(6) | Diagram::E(8) => {
            let d = double::exceptional_double(diagram, data_dir)?;
            Ok((d.base().clone(), d))
        }
        _ => Err(Error::InvalidArgument(format!("no braiding count is defined for {diagram}"))),
    }
}

/// The embedding report behind a diagram's braiding count.
pub fn braiding_report(diagram: Diagram, data_dir: Option<&Path>) -> Result<EmbeddingReport> {
    let (delta, d) = double_for(diagram, data_dir)?;
    let mut report = count_embeddings(&delta, &d)?;
    report.diagram = diagram.to_string();
    Ok(report)
}

/// The number of braidings on the even part of a subfactor with this
/// principal graph, counted as embeddings into the double.
pub fn braiding_count(diagram: Diagram) -> Result<usize> {
    Ok(braiding_report(diagram, None)?.count)
}
