//! Extensions of a ring by an order-two invertible object.
//!
//! Objects of the extension are orbits `{x, Jx}` of the admissible parent
//! objects; each fixed point `Jf = f` splits into two objects. The induction
//! map `F` (orbit class, or the sum of both halves for a fixed point) is a
//! ring homomorphism, which fixes every constant except those between split
//! halves. The rest are left to [`complete_by_associativity`].

use std::collections::{BTreeSet, HashMap};

use super::complete::{complete_by_associativity, LinearConstraint, PartialFusionData, Slot};
use super::FusionRing;
use crate::algnum::AlgReal;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitClass {
    /// A free orbit, listed by parent object index in ascending order.
    Orbit(Vec<usize>),
    /// Half `index ∈ {0, 1}` of the fixed parent object `fixed`.
    Split { fixed: usize, index: usize },
}

/// How the extension's objects sit over the parent ring.
#[derive(Clone, Debug)]
pub struct OrbitData {
    pub classes: Vec<OrbitClass>,
    /// New objects over each parent object; empty when not admissible.
    pub over: Vec<Vec<usize>>,
    pub dims: Vec<AlgReal>,
    pub unit: usize,
}

impl OrbitData {
    /// `F(x)` as new objects with multiplicity.
    pub fn induce(&self, x: usize) -> &[usize] {
        &self.over[x]
    }

    pub fn split_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, c) in self.classes.iter().enumerate() {
            if let OrbitClass::Split { index: 0, .. } = c {
                out.push((a, a + 1));
            }
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.classes
            .iter()
            .filter_map(|c| match c {
                OrbitClass::Split { fixed, index: 0 } => Some(*fixed),
                _ => None,
            })
            .collect()
    }
}

pub struct SimpleCurrentExtension {
    pub data: OrbitData,
    /// One partial table per admissible choice of duals on split halves.
    pub partials: Vec<PartialFusionData>,
}

impl SimpleCurrentExtension {
    /// Builds the partial data. `namer` labels each new object.
    pub fn new(
        parent: &FusionRing,
        current: usize,
        admissible: &[usize],
        name: &str,
        namer: impl Fn(&OrbitClass) -> String,
    ) -> Result<Self> {
        let r = parent.rank();
        let u = parent.unit();
        let j_obj = current;
        let apply = |x: usize| -> Result<usize> {
            match parent.product(j_obj, x) {
                [(y, 1)] => Ok(*y),
                _ => Err(Error::Fusion(format!("{} is not invertible", parent.object(j_obj)))),
            }
        };
        if apply(j_obj)? != u {
            return Err(Error::Fusion("only currents of order two are supported".into()));
        }
        let admissible: BTreeSet<usize> = admissible.iter().copied().collect();
        if !admissible.contains(&u) {
            return Err(Error::Fusion("the unit must be admissible".into()));
        }
        for &x in &admissible {
            if x >= r || !admissible.contains(&apply(x)?) {
                return Err(Error::Fusion("admissible set is not closed under the current".into()));
            }
        }

        let mut classes = Vec::new();
        let mut over = vec![Vec::new(); r];
        let mut dims = Vec::new();
        let half = AlgReal::from_ratio(1, 2);
        for &x in &admissible {
            let y = apply(x)?;
            if y < x {
                continue;
            }
            if y == x {
                for index in 0..2 {
                    over[x].push(classes.len());
                    classes.push(OrbitClass::Split { fixed: x, index });
                    dims.push(parent.dim(x) * &half);
                }
            } else {
                over[x].push(classes.len());
                over[y].push(classes.len());
                classes.push(OrbitClass::Orbit(vec![x, y]));
                dims.push(parent.dim(x).clone());
            }
        }
        // Keep split halves adjacent and free orbits first, in parent order.
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&a| match &classes[a] {
            OrbitClass::Orbit(v) => (0, v[0], 0),
            OrbitClass::Split { fixed, index } => (1, *fixed, *index),
        });
        let mut renumber = vec![0; classes.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let classes: Vec<OrbitClass> = order.iter().map(|&a| classes[a].clone()).collect();
        let dims: Vec<AlgReal> = order.iter().map(|&a| dims[a].clone()).collect();
        for list in &mut over {
            for a in list.iter_mut() {
                *a = renumber[*a];
            }
            list.sort_unstable();
        }
        let n = classes.len();
        let unit = over[u][0];
        let data = OrbitData { classes, over, dims, unit };
        let objects: Vec<String> = data.classes.iter().map(&namer).collect();

        let rep = |a: usize| match &data.classes[a] {
            OrbitClass::Orbit(v) => v[0],
            OrbitClass::Split { fixed, .. } => *fixed,
        };
        let is_split = |a: usize| matches!(data.classes[a], OrbitClass::Split { .. });

        // F is a ring map: F(x)F(y) = Σ N_{xy}^z F(z).
        let induced_product = |x: usize, y: usize| -> HashMap<usize, u32> {
            let mut acc = HashMap::new();
            for &(z, c) in parent.product(x, y) {
                for &a in &data.over[z] {
                    *acc.entry(a).or_insert(0) += c;
                }
            }
            acc
        };

        let mut known: HashMap<Slot, u32> = HashMap::new();
        let mut unknown = BTreeSet::new();
        let mut linear = Vec::new();
        for a in 0..n {
            for b in 0..n {
                match (is_split(a), is_split(b)) {
                    (false, false) => {
                        let prod = induced_product(rep(a), rep(b));
                        for c in 0..n {
                            let v = prod.get(&c).copied().unwrap_or(0);
                            if v > 0 || is_split(c) {
                                known.insert((a, b, c), v);
                            }
                        }
                    }
                    _ => {
                        for c in 0..n {
                            unknown.insert((a, b, c));
                        }
                    }
                }
            }
        }
        // Σ over the halves of each split factor equals the induced product.
        for a in 0..n {
            if is_split(a) && !matches!(data.classes[a], OrbitClass::Split { index: 0, .. }) {
                continue;
            }
            for b in 0..n {
                if is_split(b) && !matches!(data.classes[b], OrbitClass::Split { index: 0, .. }) {
                    continue;
                }
                if !is_split(a) && !is_split(b) {
                    continue;
                }
                let lefts: Vec<usize> = if is_split(a) { vec![a, a + 1] } else { vec![a] };
                let rights: Vec<usize> = if is_split(b) { vec![b, b + 1] } else { vec![b] };
                let prod = induced_product(rep(a), rep(b));
                for c in 0..n {
                    let mut terms = Vec::new();
                    for &x in &lefts {
                        for &y in &rights {
                            terms.push(((x, y, c), 1));
                        }
                    }
                    linear.push(LinearConstraint { terms, rhs: prod.get(&c).copied().unwrap_or(0) });
                }
            }
        }

        // Dual choices: a self-dual fixed point may have self-dual or
        // exchanged halves; mutually dual fixed points pair halves directly.
        let mut base_dual = vec![0; n];
        let mut self_dual_pairs = Vec::new();
        for a in 0..n {
            match &data.classes[a] {
                OrbitClass::Orbit(v) => base_dual[a] = data.over[parent.dual(v[0])][0],
                OrbitClass::Split { fixed, index } => {
                    let fd = parent.dual(*fixed);
                    base_dual[a] = data.over[fd][*index];
                    if fd == *fixed && *index == 0 {
                        self_dual_pairs.push(a);
                    }
                }
            }
        }
        let split_pairs = data.split_pairs();
        let partials = (0u32..(1 << self_dual_pairs.len()))
            .map(|mask| {
                let mut dual = base_dual.clone();
                for (bit, &a) in self_dual_pairs.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        dual[a] = a + 1;
                        dual[a + 1] = a;
                    }
                }
                PartialFusionData {
                    name: name.to_string(),
                    objects: objects.clone(),
                    unit,
                    dual,
                    dims: data.dims.clone(),
                    known: known.clone(),
                    unknown: unknown.clone(),
                    linear: linear.clone(),
                    commutative: parent.is_commutative(),
                    swap_pairs: split_pairs.clone(),
                }
            })
            .collect();
        Ok(SimpleCurrentExtension { data, partials })
    }

    /// Every completion over all dual choices, up to exchanging halves.
    pub fn completions(&self) -> Result<Vec<FusionRing>> {
        let mut out = Vec::new();
        for p in &self.partials {
            out.extend(complete_by_associativity(p)?);
        }
        Ok(out)
    }
}
