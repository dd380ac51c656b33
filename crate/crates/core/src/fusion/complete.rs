//! Exhaustive completion of partially known structure constants.
//!
//! Unknown slots are grouped into orbits of the symmetries every fusion ring
//! satisfies (Frobenius reciprocity, contragredience and, when requested,
//! commutativity), so each orbit is one integer variable. A depth-first
//! search assigns variables in breadth-first order of the objects they
//! involve. Linear and dimension constraints prune on partial sums;
//! associativity equations are checked once their last variable is set.
//! Every surviving assignment is re-verified exactly before it is returned.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::verify::verify_axioms;
use super::FusionRing;
use crate::algnum::AlgReal;
use crate::error::{Error, Result};

pub type Slot = (usize, usize, usize);

/// Searches producing more completions than this are reported as errors.
pub const MAX_SOLUTIONS: usize = 4096;

/// `Σ coeff · N_slot = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub terms: Vec<(Slot, u32)>,
    pub rhs: u32,
}

/// A ring skeleton with some structure constants left open.
///
/// Slots listed in `known` fix their whole symmetry orbit. Slots listed in
/// `unknown` whose orbit meets no known slot become search variables. Every
/// other slot is zero. Unit laws are imposed automatically.
#[derive(Clone, Debug)]
pub struct PartialFusionData {
    pub name: String,
    pub objects: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    pub dims: Vec<AlgReal>,
    pub known: HashMap<Slot, u32>,
    pub unknown: BTreeSet<Slot>,
    pub linear: Vec<LinearConstraint>,
    pub commutative: bool,
    /// Pairs of objects that may be exchanged without changing the answer;
    /// completions are returned up to these exchanges.
    pub swap_pairs: Vec<(usize, usize)>,
}

impl PartialFusionData {
    fn validate(&self) -> Result<()> {
        let r = self.objects.len();
        let bad = |msg: &str| Err(Error::Completion(format!("{}: {msg}", self.name)));
        if r == 0 || self.unit >= r || self.dual.len() != r || self.dims.len() != r {
            return bad("object, dual and dimension lists disagree");
        }
        if (0..r).any(|i| self.dual[i] >= r || self.dual[self.dual[i]] != i) {
            return bad("dual is not an involution");
        }
        let in_range = |&(i, j, k): &Slot| i < r && j < r && k < r;
        if !self.known.keys().all(in_range)
            || !self.unknown.iter().all(in_range)
            || !self.linear.iter().flat_map(|c| &c.terms).all(|(s, _)| in_range(s))
            || !self.swap_pairs.iter().all(|&(a, b)| a < r && b < r)
        {
            return bad("slot index out of range");
        }
        Ok(())
    }
}

/// All completions satisfying every fusion-ring axiom, up to the declared
/// swaps. An empty list means the data is inconsistent.
pub fn complete_by_associativity(p: &PartialFusionData) -> Result<Vec<FusionRing>> {
    p.validate()?;
    let Some(mut engine) = Engine::build(p) else {
        return Ok(Vec::new());
    };
    engine.search(0)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for values in std::mem::take(&mut engine.solutions) {
        let ring = engine.ring_from(p, &values);
        if !verify_axioms(&ring).all_passed() {
            continue;
        }
        if seen.insert(canonical_key(&ring, &p.swap_pairs)) {
            out.push(ring);
        }
    }
    Ok(out)
}

/// The least constant table over all combinations of declared swaps.
fn canonical_key(ring: &FusionRing, swaps: &[(usize, usize)]) -> Vec<(Slot, u32)> {
    let r = ring.rank();
    let mut best: Option<Vec<(Slot, u32)>> = None;
    for mask in 0u32..(1 << swaps.len()) {
        let mut perm: Vec<usize> = (0..r).collect();
        for (bit, &(a, b)) in swaps.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                perm.swap(a, b);
            }
        }
        let key: Vec<(Slot, u32)> = ring.permuted_constants(&perm).into_iter().collect();
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap_or_default()
}

struct Var {
    slots: Vec<Slot>,
    max: u32,
}

/// `Σ coeff · x_var = rhs` in floating point, used only for pruning.
struct SumConstraint {
    rhs: f64,
    tol: f64,
    assigned: f64,
    remaining_max: f64,
}

struct Engine {
    r: usize,
    val: Vec<u32>,
    vars: Vec<Var>,
    assigned: Vec<Option<u32>>,
    supp: Vec<Vec<usize>>,
    sums: Vec<SumConstraint>,
    var_sums: Vec<Vec<(usize, f64)>>,
    var_triples: Vec<Vec<Slot>>,
    solutions: Vec<Vec<u32>>,
    lhs: Vec<u64>,
    rhs: Vec<u64>,
}

fn symmetry_images(s: Slot, dual: &[usize], commutative: bool) -> Vec<Slot> {
    let (i, j, k) = s;
    let mut v = vec![(dual[i], k, j), (k, dual[j], i), (dual[j], dual[i], dual[k])];
    if commutative {
        v.push((j, i, k));
    }
    v
}

fn orbit(s: Slot, dual: &[usize], commutative: bool) -> Vec<Slot> {
    let mut seen = BTreeSet::from([s]);
    let mut queue = VecDeque::from([s]);
    while let Some(t) = queue.pop_front() {
        for u in symmetry_images(t, dual, commutative) {
            if seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen.into_iter().collect()
}

impl Engine {
    fn idx(&self, (i, j, k): Slot) -> usize {
        (i * self.r + j) * self.r + k
    }

    /// `None` when the fixed data already contradicts itself.
    fn build(p: &PartialFusionData) -> Option<Self> {
        let r = p.objects.len();
        let dual = &p.dual;
        let mut fixed: HashMap<Slot, u32> = HashMap::new();
        let mut seeds: Vec<(Slot, u32)> = p.known.iter().map(|(&s, &v)| (s, v)).collect();
        for j in 0..r {
            for k in 0..r {
                let v = u32::from(j == k);
                seeds.push(((p.unit, j, k), v));
                seeds.push(((j, p.unit, k), v));
            }
        }
        seeds.sort_unstable();
        for (s, v) in seeds {
            if let Some(&w) = fixed.get(&s) {
                if w != v {
                    return None;
                }
                continue;
            }
            for t in orbit(s, dual, p.commutative) {
                if let Some(&w) = fixed.get(&t) {
                    if w != v {
                        return None;
                    }
                }
                fixed.insert(t, v);
            }
        }

        let fdims: Vec<f64> = p.dims.iter().map(AlgReal::to_f64).collect();
        let mut var_of: HashMap<Slot, usize> = HashMap::new();
        let mut raw_vars: Vec<Var> = Vec::new();
        for &s in &p.unknown {
            if fixed.contains_key(&s) || var_of.contains_key(&s) {
                continue;
            }
            let slots = orbit(s, dual, p.commutative);
            let max = slots
                .iter()
                .map(|&(i, j, k)| ((fdims[i] * fdims[j] / fdims[k]) + 1e-9).floor() as u32)
                .min()
                .unwrap_or(0);
            for &t in &slots {
                var_of.insert(t, raw_vars.len());
            }
            raw_vars.push(Var { slots, max });
        }

        // Checker objects: declared swap objects plus small objects until
        // the known products connect everything to the unit.
        let mut known_supp: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r * r];
        for (&(i, j, k), &v) in &fixed {
            if v > 0 {
                known_supp[i * r + j].insert(k);
            }
        }
        let mut checkers: BTreeSet<usize> = p.swap_pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let mut by_dim: Vec<usize> = (0..r).filter(|&i| i != p.unit).collect();
        by_dim.sort_by(|&a, &b| fdims[a].total_cmp(&fdims[b]).then(a.cmp(&b)));
        let depth = loop {
            let depth = bfs_depth(r, p.unit, &checkers, &known_supp);
            if depth.iter().all(Option::is_some) {
                break depth.into_iter().map(Option::unwrap).collect::<Vec<_>>();
            }
            match by_dim.iter().find(|c| !checkers.contains(c)) {
                Some(&c) => {
                    checkers.insert(c);
                }
                None => break depth.into_iter().map(|d| d.unwrap_or(r)).collect(),
            }
        };

        // Order variables by how deep their objects sit.
        let key =
            |v: &Var| v.slots.iter().map(|&(i, j, k)| (depth[i].max(depth[j]).max(depth[k]), (i, j, k))).min().unwrap();
        let mut order: Vec<usize> = (0..raw_vars.len()).collect();
        order.sort_by_key(|&v| key(&raw_vars[v]));
        let mut slots_taken: Vec<Option<Var>> = raw_vars.into_iter().map(Some).collect();
        let vars: Vec<Var> = order.iter().map(|&v| slots_taken[v].take().unwrap()).collect();

        let mut engine = Engine {
            r,
            val: vec![0; r * r * r],
            assigned: vec![None; vars.len()],
            supp: vec![Vec::new(); r * r],
            sums: Vec::new(),
            var_sums: vec![Vec::new(); vars.len()],
            var_triples: vec![Vec::new(); vars.len()],
            vars,
            solutions: Vec::new(),
            lhs: vec![0; r],
            rhs: vec![0; r],
        };
        let mut var_at: HashMap<Slot, usize> = HashMap::new();
        for (v, var) in engine.vars.iter().enumerate() {
            for &s in &var.slots {
                var_at.insert(s, v);
            }
        }
        let mut supp: Vec<BTreeSet<usize>> = known_supp;
        for (&s, &v) in &fixed {
            let idx = engine.idx(s);
            engine.val[idx] = v;
        }
        let mut rowmax: Vec<Option<usize>> = vec![None; r * r];
        for (&(i, j, k), &v) in &var_at {
            supp[i * r + j].insert(k);
            let m = &mut rowmax[i * r + j];
            *m = Some(m.map_or(v, |x: usize| x.max(v)));
        }
        engine.supp = supp.into_iter().map(|s| s.into_iter().collect()).collect();

        // Linear constraints.
        for c in &p.linear {
            let mut terms: BTreeMap<usize, f64> = BTreeMap::new();
            let mut rhs = f64::from(c.rhs);
            for &(s, coeff) in &c.terms {
                match var_at.get(&s) {
                    Some(&v) => *terms.entry(v).or_default() += f64::from(coeff),
                    None => rhs -= f64::from(coeff) * f64::from(fixed.get(&s).copied().unwrap_or(0)),
                }
            }
            if !engine.add_sum(terms, rhs, 1e-6) {
                return None;
            }
        }
        // Dimension equations for every row containing a variable.
        for i in 0..r {
            for j in 0..r {
                if rowmax[i * r + j].is_none() {
                    continue;
                }
                let mut terms: BTreeMap<usize, f64> = BTreeMap::new();
                let mut rhs = fdims[i] * fdims[j];
                for &k in &engine.supp[i * r + j] {
                    match var_at.get(&(i, j, k)) {
                        Some(&v) => *terms.entry(v).or_default() += fdims[k],
                        None => rhs -= f64::from(engine.val[engine.idx((i, j, k))]) * fdims[k],
                    }
                }
                let tol = 1e-7 * (fdims[i] * fdims[j]).max(1.0);
                if !engine.add_sum(terms, rhs, tol) {
                    return None;
                }
            }
        }
        // Associativity equations for checker objects, attached to their
        // last variable; fully fixed ones are checked now.
        for &c in &checkers {
            for j in 0..r {
                for k in 0..r {
                    let mut last: Option<usize> = None;
                    let mut bump = |row: usize| {
                        if let Some(v) = rowmax[row] {
                            last = Some(last.map_or(v, |x: usize| x.max(v)));
                        }
                    };
                    bump(c * r + j);
                    bump(j * r + k);
                    for &m in &engine.supp[c * r + j] {
                        bump(m * r + k);
                    }
                    for &m in &engine.supp[j * r + k] {
                        bump(c * r + m);
                    }
                    match last {
                        Some(v) => engine.var_triples[v].push((c, j, k)),
                        None => {
                            if !engine.associative_at((c, j, k)) {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        Some(engine)
    }

    fn add_sum(&mut self, terms: BTreeMap<usize, f64>, rhs: f64, tol: f64) -> bool {
        if terms.is_empty() {
            return rhs.abs() <= tol;
        }
        let id = self.sums.len();
        let mut remaining_max = 0.0;
        for (&v, &coeff) in &terms {
            remaining_max += coeff * f64::from(self.vars[v].max);
            self.var_sums[v].push((id, coeff));
        }
        self.sums.push(SumConstraint { rhs, tol, assigned: 0.0, remaining_max });
        true
    }

    fn set_var(&mut self, v: usize, value: Option<u32>) {
        let old = self.assigned[v];
        let max = f64::from(self.vars[v].max);
        for &(id, coeff) in &self.var_sums[v] {
            let s = &mut self.sums[id];
            match old {
                Some(o) => {
                    s.assigned -= coeff * f64::from(o);
                    s.remaining_max += coeff * max;
                }
                None => {}
            }
            if let Some(n) = value {
                s.assigned += coeff * f64::from(n);
                s.remaining_max -= coeff * max;
            }
        }
        let x = value.unwrap_or(0);
        for t in 0..self.vars[v].slots.len() {
            let idx = self.idx(self.vars[v].slots[t]);
            self.val[idx] = x;
        }
        self.assigned[v] = value;
    }

    fn sums_ok(&self, v: usize) -> bool {
        self.var_sums[v].iter().all(|&(id, _)| {
            let s = &self.sums[id];
            s.assigned <= s.rhs + s.tol && s.assigned + s.remaining_max >= s.rhs - s.tol
        })
    }

    fn associative_at(&mut self, (i, j, k): Slot) -> bool {
        let r = self.r;
        let mut lhs = std::mem::take(&mut self.lhs);
        let mut rhs = std::mem::take(&mut self.rhs);
        for &m in &self.supp[i * r + j] {
            let a = u64::from(self.val[self.idx((i, j, m))]);
            if a == 0 {
                continue;
            }
            for &l in &self.supp[m * r + k] {
                lhs[l] += a * u64::from(self.val[self.idx((m, k, l))]);
            }
        }
        for &m in &self.supp[j * r + k] {
            let a = u64::from(self.val[self.idx((j, k, m))]);
            if a == 0 {
                continue;
            }
            for &l in &self.supp[i * r + m] {
                rhs[l] += a * u64::from(self.val[self.idx((i, m, l))]);
            }
        }
        let ok = lhs == rhs;
        lhs.iter_mut().for_each(|x| *x = 0);
        rhs.iter_mut().for_each(|x| *x = 0);
        self.lhs = lhs;
        self.rhs = rhs;
        ok
    }

    fn search(&mut self, v: usize) -> Result<()> {
        if v == self.vars.len() {
            if self.solutions.len() >= MAX_SOLUTIONS {
                return Err(Error::Completion(format!("more than {MAX_SOLUTIONS} completions")));
            }
            self.solutions.push(self.assigned.iter().map(|x| x.unwrap_or(0)).collect());
            return Ok(());
        }
        for value in 0..=self.vars[v].max {
            self.set_var(v, Some(value));
            if self.sums_ok(v) {
                let triples = std::mem::take(&mut self.var_triples[v]);
                let ok = triples.iter().all(|&t| self.associative_at(t));
                self.var_triples[v] = triples;
                if ok {
                    self.search(v + 1)?;
                }
            }
        }
        self.set_var(v, None);
        Ok(())
    }

    fn ring_from(&mut self, p: &PartialFusionData, values: &[u32]) -> FusionRing {
        for (v, &x) in values.iter().enumerate() {
            self.set_var(v, Some(x));
        }
        let r = self.r;
        let mut constants = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for &k in &self.supp[i * r + j] {
                    let x = self.val[self.idx((i, j, k))];
                    if x > 0 {
                        constants.push((i, j, k, x));
                    }
                }
            }
        }
        for v in 0..values.len() {
            self.set_var(v, None);
        }
        FusionRing::from_constants_unchecked(
            p.name.clone(),
            p.objects.clone(),
            p.unit,
            p.dual.clone(),
            constants,
            p.dims.clone(),
        )
    }
}

fn bfs_depth(r: usize, unit: usize, checkers: &BTreeSet<usize>, supp: &[BTreeSet<usize>]) -> Vec<Option<usize>> {
    let mut depth = vec![None; r];
    depth[unit] = Some(0);
    let mut queue = VecDeque::from([unit]);
    while let Some(x) = queue.pop_front() {
        let d = depth[x].unwrap();
        for &c in checkers {
            for &y in supp[c * r + x].iter().chain(&supp[x * r + c]) {
                if depth[y].is_none() {
                    depth[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
    }
    depth
}
