//! Rooted bipartite graphs: Dynkin diagrams, the pendant criterion for dual
//! principal graphs of local extensions, the triple-point distance filter,
//! the α-induction counting inequality, and graph norms.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed};
use serde::{Deserialize, Serialize};

use crate::algnum::{linalg, AlgReal, Interval};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub parity: Parity,
}

/// An A-D-E Dynkin diagram name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diagram {
    A(u32),
    D(u32),
    E(u32),
}

impl Diagram {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            Diagram::A(n) => n >= 2,
            Diagram::D(n) => n >= 4,
            Diagram::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidArgument(format!("no Dynkin diagram {self}")))
        }
    }

    pub fn rank(self) -> u32 {
        match self {
            Diagram::A(n) | Diagram::D(n) | Diagram::E(n) => n,
        }
    }

    pub fn coxeter_number(self) -> u32 {
        match self {
            Diagram::A(n) => n + 1,
            Diagram::D(n) => 2 * n - 2,
            Diagram::E(6) => 12,
            Diagram::E(7) => 18,
            Diagram::E(8) => 30,
            Diagram::E(n) => panic!("no diagram E{n}"),
        }
    }

    /// Squared norm `4cos²(π/h)`, the index of a subfactor with this
    /// principal graph.
    pub fn index(self) -> AlgReal {
        AlgReal::four_cos_sq(self.coxeter_number()).expect("h >= 3")
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::A(n) => write!(f, "A{n}"),
            Diagram::D(n) => write!(f, "D{n}"),
            Diagram::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownName(format!("diagram {s:?}"));
        let s = s.trim();
        let (head, tail) = s.split_at(s.chars().next().ok_or_else(bad)?.len_utf8());
        let tail = tail.trim_start_matches('_');
        let n: u32 = tail.parse().map_err(|_| bad())?;
        let d = match head {
            "A" | "a" => Diagram::A(n),
            "D" | "d" => Diagram::D(n),
            "E" | "e" => Diagram::E(n),
            _ => return Err(bad()),
        };
        d.validate()
    }
}

/// A connected rooted bipartite multigraph, possibly a finite window of an
/// infinite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    name: String,
    vertices: Vec<Vertex>,
    root: usize,
    edges: Vec<(usize, usize)>,
    truncation: Option<usize>,
}

impl BipartiteGraph {
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<Vertex>,
        root: usize,
        edges: Vec<(usize, usize)>,
        truncation: Option<usize>,
    ) -> Result<Self> {
        let g = BipartiteGraph { name: name.into(), vertices, root, edges, truncation };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(Error::Graph("no vertices".into()));
        }
        if self.root >= n {
            return Err(Error::Graph("root out of range".into()));
        }
        if self.vertices[self.root].parity != Parity::Even {
            return Err(Error::Graph("root must be even".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &self.vertices {
            if !seen.insert(v.id.as_str()) {
                return Err(Error::Graph(format!("duplicate vertex {}", v.id)));
            }
        }
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                return Err(Error::Graph("edge endpoint out of range".into()));
            }
            if self.vertices[a].parity == self.vertices[b].parity {
                return Err(Error::Graph(format!(
                    "edge {} - {} joins vertices of equal parity",
                    self.vertices[a].id, self.vertices[b].id
                )));
            }
        }
        let dist = self.distances();
        if let Some(v) = dist.iter().position(Option::is_none) {
            return Err(Error::Graph(format!("vertex {} is disconnected", self.vertices[v].id)));
        }
        if let Some(depth) = self.truncation {
            if let Some(v) = dist.iter().position(|d| d.unwrap() > depth) {
                return Err(Error::Graph(format!(
                    "vertex {} lies beyond the truncation depth {depth}",
                    self.vertices[v].id
                )));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    /// Neighbors with multiplicity.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    /// Valency, counting multiple edges.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Breadth-first distances from the root.
    pub fn distances(&self) -> Vec<Option<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut dist = vec![None; n];
        dist[self.root] = Some(0);
        let mut queue = VecDeque::from([self.root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn has_multi_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().any(|&(a, b)| !seen.insert((a.min(b), a.max(b))))
    }

    /// Recognizes the graph as an A-D-E Dynkin diagram, if it is one.
    pub fn as_dynkin(&self) -> Option<Diagram> {
        let n = self.vertices.len();
        if self.truncation.is_some() || self.edges.len() + 1 != n || self.has_multi_edges() {
            return None;
        }
        let degrees: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        if n == 1 {
            return None;
        }
        let branch: Vec<usize> = (0..n).filter(|&v| degrees[v] > 2).collect();
        match branch.as_slice() {
            [] => Some(Diagram::A(n as u32)),
            [c] if degrees[*c] == 3 => {
                let mut arms: Vec<u32> = self
                    .neighbors(*c)
                    .into_iter()
                    .map(|start| {
                        let (mut prev, mut cur, mut len) = (*c, start, 1);
                        loop {
                            let next: Vec<usize> = self.neighbors(cur).into_iter().filter(|&w| w != prev).collect();
                            match next.as_slice() {
                                [w] => {
                                    prev = cur;
                                    cur = *w;
                                    len += 1;
                                }
                                _ => return len,
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, k] => Some(Diagram::D(k + 3)),
                    [1, 2, 2] => Some(Diagram::E(6)),
                    [1, 2, 3] => Some(Diagram::E(7)),
                    [1, 2, 4] => Some(Diagram::E(8)),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        let n = self.vertices.len();
        let mut a = vec![vec![0.0; n]; n];
        for &(u, v) in &self.edges {
            a[u][v] += 1.0;
            a[v][u] += 1.0;
        }
        a
    }

    /// Renders the text graph format.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.name);
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("vertex {} {}", v.id, v.parity.as_str()));
            if i == self.root {
                s.push_str(" root");
            }
            s.push('\n');
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("edge {} {}\n", self.vertices[a].id, self.vertices[b].id));
        }
        if let Some(d) = self.truncation {
            s.push_str(&format!("truncated {d}\n"));
        }
        s
    }

    /// Parses a single graph in the text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graphs = parse_corpus(text)?;
        match graphs.len() {
            1 => Ok(graphs.pop().unwrap()),
            n => Err(Error::GraphParse { line: 0, msg: format!("expected one graph, found {n}") }),
        }
    }
}

struct GraphBuilder {
    name: String,
    vertices: Vec<Vertex>,
    root: Option<usize>,
    edges: Vec<(usize, usize)>,
    truncation: Option<usize>,
    start_line: usize,
}

impl GraphBuilder {
    fn finish(self) -> Result<BipartiteGraph> {
        let root = self.root.ok_or(Error::GraphParse {
            line: self.start_line,
            msg: format!("graph {} has no root vertex", self.name),
        })?;
        BipartiteGraph::new(self.name, self.vertices, root, self.edges, self.truncation)
    }
}

/// Parses a file holding any number of graphs. Blank lines and lines starting
/// with `#` are ignored.
pub fn parse_corpus(text: &str) -> Result<Vec<BipartiteGraph>> {
    let mut out = Vec::new();
    let mut cur: Option<GraphBuilder> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::GraphParse { line: line_no, msg };
        let words: Vec<&str> = line.split_whitespace().collect();
        if words[0] == "graph" {
            if words.len() != 2 {
                return Err(err("expected `graph <name>`".into()));
            }
            if let Some(b) = cur.take() {
                out.push(b.finish()?);
            }
            cur = Some(GraphBuilder {
                name: words[1].to_string(),
                vertices: Vec::new(),
                root: None,
                edges: Vec::new(),
                truncation: None,
                start_line: line_no,
            });
            continue;
        }
        let b = cur.as_mut().ok_or_else(|| err("statement before `graph` header".into()))?;
        match words.as_slice() {
            ["vertex", id, parity, rest @ ..] => {
                let parity = match *parity {
                    "even" => Parity::Even,
                    "odd" => Parity::Odd,
                    p => return Err(err(format!("bad parity {p:?}"))),
                };
                match rest {
                    [] => {}
                    ["root"] => {
                        if b.root.is_some() {
                            return Err(err("second root".into()));
                        }
                        b.root = Some(b.vertices.len());
                    }
                    _ => return Err(err("trailing tokens after vertex".into())),
                }
                b.vertices.push(Vertex { id: id.to_string(), parity });
            }
            ["edge", x, y] => {
                let find = |id: &str| {
                    b.vertices.iter().position(|v| v.id == id).ok_or_else(|| err(format!("unknown vertex {id:?}")))
                };
                let (x, y) = (find(x)?, find(y)?);
                b.edges.push((x, y));
            }
            ["truncated", d] => {
                let d = d.parse().map_err(|_| err(format!("bad depth {d:?}")))?;
                b.truncation = Some(d);
            }
            _ => return Err(err(format!("unrecognized line {line:?}"))),
        }
    }
    if let Some(b) = cur {
        out.push(b.finish()?);
    }
    Ok(out)
}

fn path_graph(name: String, n: usize, truncation: Option<usize>) -> BipartiteGraph {
    let vertices = (0..n)
        .map(|i| Vertex { id: i.to_string(), parity: if i % 2 == 0 { Parity::Even } else { Parity::Odd } })
        .collect();
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    BipartiteGraph::new(name, vertices, 0, edges, truncation).expect("paths are valid")
}

/// Builds a tree from a rooted chain and branches hanging off chain vertices,
/// assigning parities by distance from the root.
fn tree_from_chain(name: String, chain: usize, branches: &[(usize, usize)]) -> BipartiteGraph {
    let mut parity = Vec::new();
    let mut edges = Vec::new();
    for i in 0..chain {
        parity.push(if i % 2 == 0 { Parity::Even } else { Parity::Odd });
        if i > 0 {
            edges.push((i - 1, i));
        }
    }
    for &(at, len) in branches {
        let mut prev = at;
        for _ in 0..len {
            let v = parity.len();
            parity.push(parity[prev].flip());
            edges.push((prev, v));
            prev = v;
        }
    }
    let vertices = parity.into_iter().enumerate().map(|(i, parity)| Vertex { id: i.to_string(), parity }).collect();
    BipartiteGraph::new(name, vertices, 0, edges, None).expect("trees are valid")
}

/// The Dynkin diagram as a rooted bipartite graph, rooted at the end of the
/// longest arm. Vertex ids are `0..n`, numbered along the rooted arm first.
pub fn dynkin(diagram: Diagram) -> Result<BipartiteGraph> {
    let diagram = diagram.validate()?;
    let name = diagram.to_string();
    Ok(match diagram {
        Diagram::A(n) => path_graph(name, n as usize, None),
        Diagram::D(n) => {
            let n = n as usize;
            // chain of n-2 vertices; fork vertex n-3 carries a second leaf
            tree_from_chain(name, n - 1, &[(n - 3, 1)])
        }
        Diagram::E(n) => {
            let n = n as usize;
            // long arm ending at the trivalent vertex n-4, then arms of 2 and 1
            tree_from_chain(name, n - 3, &[(n - 4, 2), (n - 4, 1)])
        }
    })
}

/// Finite window of the half-infinite path `A_∞`, with `depth + 1` vertices.
pub fn a_infinity(depth: usize) -> Result<BipartiteGraph> {
    if depth < 5 {
        return Err(Error::InvalidArgument(format!("A_inf window needs depth >= 5, got {depth}")));
    }
    Ok(path_graph("Ainf".into(), depth + 1, Some(depth)))
}

pub const DEFAULT_AINF_DEPTH: usize = 9;

/// Outcome of the pendant-vertex criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantCheck {
    pub ok: bool,
    /// odd vertex id → pendant even neighbor id, for every verified odd vertex
    pub witness: BTreeMap<String, String>,
    /// odd vertices violating the criterion on interior evidence
    pub violations: Vec<String>,
    /// odd vertices on the boundary of a truncated window
    pub unverified: Vec<String>,
}

/// Every odd vertex must have an even neighbor of valency one attached only
/// to it.
///
/// On a truncated window, odd vertices at the truncation depth are never
/// judged, and an even neighbor at the boundary that looks pendant may still
/// continue outside the window, so it neither witnesses nor refutes.
pub fn pendant_criterion(g: &BipartiteGraph) -> PendantCheck {
    let dist = g.distances();
    let depth = g.truncation;
    let boundary = |v: usize| depth.is_some_and(|d| dist[v].unwrap() >= d);
    let mut check = PendantCheck { ok: true, witness: BTreeMap::new(), violations: Vec::new(), unverified: Vec::new() };
    for (b, vb) in g.vertices.iter().enumerate() {
        if vb.parity != Parity::Odd {
            continue;
        }
        if boundary(b) {
            check.unverified.push(vb.id.clone());
            continue;
        }
        let neighbors = g.neighbors(b);
        if let Some(&t) = neighbors.iter().find(|&&t| g.degree(t) == 1 && !boundary(t)) {
            check.witness.insert(vb.id.clone(), g.vertices[t].id.clone());
        } else if neighbors.iter().all(|&t| g.degree(t) >= 2) {
            check.violations.push(vb.id.clone());
        } else {
            check.unverified.push(vb.id.clone());
        }
    }
    check.ok = check.violations.is_empty();
    check
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryCheck {
    /// distance from the root to the nearest vertex of valency > 2
    pub triple_point_distance: Option<usize>,
    pub excluded: bool,
}

pub fn corollary_filter(g: &BipartiteGraph) -> CorollaryCheck {
    let dist = g.distances();
    let d = (0..g.vertices.len()).filter(|&v| g.degree(v) > 2).map(|v| dist[v].unwrap()).min();
    CorollaryCheck { triple_point_distance: d, excluded: d.is_some_and(|d| d > 3) }
}

/// Combined screen of a candidate dual principal graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphVerdict {
    pub graph: String,
    pub pendant_ok: bool,
    pub pendant_witness: Option<BTreeMap<String, String>>,
    pub triple_point_distance: Option<usize>,
    pub corollary_excluded: bool,
}

impl GraphVerdict {
    /// Ruled out as the dual principal graph of a local extension.
    pub fn excluded(&self) -> bool {
        self.corollary_excluded || !self.pendant_ok
    }
}

pub fn screen(g: &BipartiteGraph) -> GraphVerdict {
    let p = pendant_criterion(g);
    let c = corollary_filter(g);
    GraphVerdict {
        graph: g.name.clone(),
        pendant_ok: p.ok,
        pendant_witness: p.ok.then_some(p.witness),
        triple_point_distance: c.triple_point_distance,
        corollary_excluded: c.excluded,
    }
}

const HAAGERUP_CORPUS: &str = include_str!("../data/haagerup.graphs");

/// The bundled Haagerup-range corpus.
pub fn haagerup_corpus() -> Vec<BipartiteGraph> {
    parse_corpus(HAAGERUP_CORPUS).expect("bundled corpus parses")
}

pub fn haagerup_candidate(name: &str) -> Result<BipartiteGraph> {
    if matches!(name, "A-infinity" | "Ainf" | "A_inf") {
        return a_infinity(DEFAULT_AINF_DEPTH);
    }
    haagerup_corpus()
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| Error::UnknownName(format!("Haagerup candidate {name:?}")))
}

/// Squared norm of a graph.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphNorm {
    Exact(AlgReal),
    Certified(Interval),
}

impl GraphNorm {
    pub fn contains(&self, x: &AlgReal) -> bool {
        match self {
            GraphNorm::Exact(v) => v == x,
            GraphNorm::Certified(iv) => {
                let w = BigRational::new(BigInt::one(), BigInt::from(10).pow(15));
                let xv = x.approx(&w);
                xv.hi() >= iv.lo() && xv.lo() <= iv.hi()
            }
        }
    }
}

pub const NORM_WIDTH_EXPONENT: u32 = 9;

/// Squared norm of the adjacency matrix: exact `4cos²(π/h)` for A-D-E
/// diagrams, otherwise a certified interval of width at most 1e-9.
pub fn graph_norm_sq(g: &BipartiteGraph) -> Result<GraphNorm> {
    if g.truncation.is_some() {
        return Err(Error::InvalidArgument(format!("graph {} is truncated; its norm is not determined", g.name)));
    }
    if let Some(d) = g.as_dynkin() {
        return Ok(GraphNorm::Exact(d.index()));
    }
    certified_norm_sq(g).map(GraphNorm::Certified)
}

/// Collatz–Wielandt bounds on the Perron eigenvalue of `A + I`, from a
/// floating-point power iteration checked in exact rationals.
pub fn certified_norm_sq(g: &BipartiteGraph) -> Result<Interval> {
    let n = g.vertices.len();
    let a = g.adjacency_f64();
    let mut x = vec![1.0; n];
    let target = BigRational::new(BigInt::one(), BigInt::from(10).pow(NORM_WIDTH_EXPONENT));
    let one = BigRational::one();
    for round in 0..40 {
        for _ in 0..200 {
            let mut y: Vec<f64> = (0..n).map(|i| x[i] + (0..n).map(|j| a[i][j] * x[j]).sum::<f64>()).collect();
            let norm = y.iter().cloned().fold(0.0, f64::max);
            y.iter_mut().for_each(|v| *v /= norm);
            x = y;
        }
        let xr: Vec<BigRational> = x.iter().map(|&v| BigRational::from_float(v).unwrap()).collect();
        if xr.iter().any(|v| !v.is_positive()) {
            continue;
        }
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for i in 0..n {
            let mut bx = xr[i].clone();
            for &(u, v) in &g.edges {
                if u == i {
                    bx += &xr[v];
                }
                if v == i {
                    bx += &xr[u];
                }
            }
            let ratio = bx / &xr[i];
            if lo.as_ref().is_none_or(|l| &ratio < l) {
                lo = Some(ratio.clone());
            }
            if hi.as_ref().is_none_or(|h| &ratio > h) {
                hi = Some(ratio);
            }
        }
        let (lo, hi) = (lo.unwrap() - &one, hi.unwrap() - &one);
        let lo = if lo.is_negative() { BigRational::from_integer(0.into()) } else { lo };
        let iv = Interval::new(&lo * &lo, &hi * &hi);
        if iv.width() <= target {
            return Ok(iv);
        }
        if round > 2 {
            // f64 iteration has stalled
            break;
        }
    }
    Err(Error::NotExact(format!("norm of {} not certified to 1e-9", g.name)))
}

/// Exact Perron–Frobenius vector of an A-D-E diagram, normalized to 1 at
/// the root.
pub fn perron_vector(g: &BipartiteGraph) -> Result<Vec<AlgReal>> {
    let d = g.as_dynkin().ok_or_else(|| Error::InvalidArgument(format!("{} is not an A-D-E diagram", g.name)))?;
    let beta = AlgReal::two_cos_pi_over(d.coxeter_number())?;
    let n = g.vertices.len();
    let mut m = vec![vec![AlgReal::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = -&beta;
    }
    for &(u, v) in &g.edges {
        m[u][v] = &m[u][v] + &AlgReal::one();
        m[v][u] = &m[v][u] + &AlgReal::one();
    }
    let mut rhs = vec![AlgReal::zero(); n];
    m[g.root] = (0..n).map(|j| if j == g.root { AlgReal::one() } else { AlgReal::zero() }).collect();
    rhs[g.root] = AlgReal::one();
    linalg::solve(m, rhs).ok_or_else(|| Error::NotExact("singular Perron system".into()))
}

/// Result of the counting inequality `Σ_τ (Σ_b k_{bτ}²) m_τ² ≤ Σ_τ m_τ²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaCheck {
    pub holds: bool,
    /// `Σ m_τ² − Σ_τ (Σ_b k_{bτ}²) m_τ²`
    pub slack: i128,
    /// for each τ with `m_τ > 0`: whether exactly one `b` has `k_{bτ} > 0`
    /// and that entry equals one
    pub forced: Vec<(usize, bool)>,
}

/// `k` is indexed `[b][τ]`, `m` by `τ`.
pub fn alpha_inequality_holds(k: &[Vec<u64>], m: &[u64]) -> Result<AlphaCheck> {
    if k.iter().any(|row| row.len() != m.len()) {
        return Err(Error::InvalidArgument("k columns must match the length of m".into()));
    }
    let mut lhs: i128 = 0;
    let mut rhs: i128 = 0;
    let mut forced = Vec::new();
    for (t, &mt) in m.iter().enumerate() {
        let col: Vec<u64> = k.iter().map(|row| row[t]).collect();
        let sq: i128 = col.iter().map(|&c| i128::from(c) * i128::from(c)).sum();
        let m2 = i128::from(mt) * i128::from(mt);
        lhs += sq * m2;
        rhs += m2;
        if mt > 0 {
            let positive: Vec<u64> = col.into_iter().filter(|&c| c > 0).collect();
            forced.push((t, positive == [1]));
        }
    }
    Ok(AlphaCheck { holds: lhs <= rhs, slack: rhs - lhs, forced })
}

/// Counting data read off a dual principal graph: `k[b][τ]` is the number of
/// edges between odd `b` and even `τ`, and `m` is supported on the pendant
/// witnesses of the graph.
pub fn pendant_alpha_data(g: &BipartiteGraph) -> (Vec<Vec<u64>>, Vec<u64>) {
    let odd: Vec<usize> = (0..g.vertices.len()).filter(|&v| g.vertices[v].parity == Parity::Odd).collect();
    let even: Vec<usize> = (0..g.vertices.len()).filter(|&v| g.vertices[v].parity == Parity::Even).collect();
    let mut k = vec![vec![0u64; even.len()]; odd.len()];
    for &(u, v) in &g.edges {
        let (o, e) = if g.vertices[u].parity == Parity::Odd { (u, v) } else { (v, u) };
        let bi = odd.iter().position(|&x| x == o).unwrap();
        let ti = even.iter().position(|&x| x == e).unwrap();
        k[bi][ti] += 1;
    }
    let check = pendant_criterion(g);
    let m = even.iter().map(|&e| u64::from(check.witness.values().any(|w| w == &g.vertices[e].id))).collect();
    (k, m)
}
