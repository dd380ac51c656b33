//! Fusion rings with exact quantum dimensions.

mod complete;
mod orbit;
mod pf;
mod ring;
mod verify;

use std::path::Path;

pub use complete::{complete_by_associativity, LinearConstraint, PartialFusionData, Slot, MAX_SOLUTIONS};
pub use orbit::{OrbitClass, OrbitData, SimpleCurrentExtension};
pub use pf::{pf_dimensions, pf_dimensions_or_interval, PfDimensions, DEFAULT_CONDUCTOR_BOUND};
pub use ring::{Constant, FusionRing, FusionRingFile};
pub use verify::{algebra_generators, verify_axioms, Axiom, AxiomCheck, AxiomReport};

use crate::algnum::AlgReal;
use crate::error::{Error, Result};

/// The SU(2)_k ring: objects `0..=k` (twice the spin) with truncated
/// Clebsch–Gordan rules and dimensions `[j+1]_q`.
pub fn su2_ring(k: u32) -> Result<FusionRing> {
    if k < 1 {
        return Err(Error::InvalidArgument("su2_ring needs level k ≥ 1".into()));
    }
    let n = k as usize;
    let mut constants = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            let hi = (i + j).min(2 * n - i - j);
            for l in (i.abs_diff(j)..=hi).step_by(2) {
                constants.push((i, j, l, 1));
            }
        }
    }
    let dims = (0..=k).map(|j| AlgReal::quantum_integer(k + 2, j)).collect::<Result<Vec<_>>>()?;
    Ok(FusionRing::from_constants_unchecked(
        format!("SU(2)_{k}"),
        (0..=k).map(|j| j.to_string()).collect(),
        0,
        (0..=n).collect(),
        constants,
        dims,
    ))
}

/// The full subring on `evens`, which must contain the unit and be closed
/// under products and duals.
pub fn even_subring(r: &FusionRing, evens: &[usize]) -> Result<FusionRing> {
    let mut index = vec![None; r.rank()];
    for (new, &old) in evens.iter().enumerate() {
        if old >= r.rank() || index[old].is_some() {
            return Err(Error::InvalidArgument("subset lists an object twice or out of range".into()));
        }
        index[old] = Some(new);
    }
    if index[r.unit()].is_none() {
        return Err(Error::NotClosed("subset does not contain the unit".into()));
    }
    let mut constants = Vec::new();
    for &i in evens {
        if index[r.dual(i)].is_none() {
            return Err(Error::NotClosed(format!("dual of {} is missing", r.object(i))));
        }
        for &j in evens {
            for &(k, v) in r.product(i, j) {
                let Some(kk) = index[k] else {
                    return Err(Error::NotClosed(format!("{}·{} contains {}", r.object(i), r.object(j), r.object(k))));
                };
                constants.push((index[i].unwrap(), index[j].unwrap(), kk, v));
            }
        }
    }
    Ok(FusionRing::from_constants_unchecked(
        format!("{} (sub)", r.name()),
        evens.iter().map(|&i| r.object(i).to_string()).collect(),
        index[r.unit()].unwrap(),
        evens.iter().map(|&i| index[r.dual(i)].unwrap()).collect(),
        constants,
        evens.iter().map(|&i| r.dim(i).clone()).collect(),
    ))
}

/// The even spins of SU(2)_k.
pub fn su2_even_part(k: u32) -> Result<FusionRing> {
    let r = su2_ring(k)?;
    let evens: Vec<usize> = (0..=k as usize).step_by(2).collect();
    Ok(even_subring(&r, &evens)?.rename(format!("SU(2)_{k} even")))
}

/// The group ring of ℤ/n.
pub fn pointed_ring(n: u32) -> FusionRing {
    let n = n.max(1) as usize;
    let constants = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n, 1)));
    FusionRing::from_constants_unchecked(
        format!("Z/{n}"),
        (0..n).map(|i| i.to_string()).collect(),
        0,
        (0..n).map(|i| (n - i) % n).collect(),
        constants,
        vec![AlgReal::one(); n],
    )
}

/// `{1, σ}` with `σ² = 1 + σ`.
pub fn fibonacci_ring() -> FusionRing {
    FusionRing::from_constants_unchecked(
        "Fib",
        vec!["1".into(), "σ".into()],
        0,
        vec![0, 1],
        [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
        vec![AlgReal::one(), AlgReal::golden_ratio()],
    )
}

/// Pairs `(a, b)` named `"(a,b)"`, indexed `a · |S| + b`.
pub fn tensor_ring(r: &FusionRing, s: &FusionRing) -> FusionRing {
    let (n, m) = (r.rank(), s.rank());
    let pair = |a: usize, b: usize| a * m + b;
    let mut constants = Vec::new();
    for (i1, j1, k1, v1) in r.constants() {
        for (i2, j2, k2, v2) in s.constants() {
            constants.push((pair(i1, i2), pair(j1, j2), pair(k1, k2), v1 * v2));
        }
    }
    let mut objects = Vec::with_capacity(n * m);
    let mut dual = Vec::with_capacity(n * m);
    let mut dims = Vec::with_capacity(n * m);
    for a in 0..n {
        for b in 0..m {
            objects.push(format!("({},{})", r.object(a), s.object(b)));
            dual.push(pair(r.dual(a), s.dual(b)));
            dims.push(r.dim(a) * s.dim(b));
        }
    }
    FusionRing::from_constants_unchecked(
        format!("{} ⊗ {}", r.name(), s.name()),
        objects,
        pair(r.unit(), s.unit()),
        dual,
        constants,
        dims,
    )
}

/// Every completion of the even part of the index-two extension of
/// SU(2)_{4n−4}: orbits `{j, 4n−4−j}` of even spins, with `2n−2` split
/// into `(2n−2)+` and `(2n−2)-`.
pub fn d2n_even_ring_candidates(n: u32) -> Result<Vec<FusionRing>> {
    if n < 2 {
        return Err(Error::InvalidArgument("d2n_even_ring needs n ≥ 2".into()));
    }
    let level = 4 * n - 4;
    let parent = su2_ring(level)?;
    let evens: Vec<usize> = (0..=level as usize).step_by(2).collect();
    let name = format!("D{} even", 2 * n);
    let ext = SimpleCurrentExtension::new(&parent, level as usize, &evens, &name, |c| match c {
        OrbitClass::Orbit(v) => v[0].to_string(),
        OrbitClass::Split { fixed, index } => format!("{fixed}{}", if *index == 0 { "+" } else { "-" }),
    })?;
    ext.completions()
}

/// The unique completion of [`d2n_even_ring_candidates`]; zero or several
/// completions are reported as errors.
pub fn d2n_even_ring(n: u32) -> Result<FusionRing> {
    let mut rings = d2n_even_ring_candidates(n)?;
    match rings.len() {
        1 => Ok(rings.pop().unwrap()),
        c => Err(Error::Completion(format!("D{} even part: {c} completions", 2 * n))),
    }
}

/// Reads a ring in the JSON format, validating every axiom.
pub fn load_ring(path: &Path) -> Result<FusionRing> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::MissingData { path: path.to_path_buf() },
        _ => Error::Io { path: path.to_path_buf(), source: e },
    })?;
    Ok(serde_json::from_str(&text)?)
}

/// Searches for a bijection of objects preserving every constant.
pub fn find_isomorphism(a: &FusionRing, b: &FusionRing) -> Option<Vec<usize>> {
    let n = a.rank();
    if n != b.rank() {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.unit()] = b.unit();
    used[b.unit()] = true;
    let order: Vec<usize> = (0..n).filter(|&i| i != a.unit()).collect();
    fn consistent(a: &FusionRing, b: &FusionRing, map: &[usize]) -> bool {
        for i in 0..a.rank() {
            if map[i] == usize::MAX {
                continue;
            }
            if map[a.dual(i)] != usize::MAX && b.dual(map[i]) != map[a.dual(i)] {
                return false;
            }
            for j in 0..a.rank() {
                if map[j] == usize::MAX {
                    continue;
                }
                for k in 0..a.rank() {
                    if map[k] != usize::MAX && a.n(i, j, k) != b.n(map[i], map[j], map[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(
        a: &FusionRing,
        b: &FusionRing,
        order: &[usize],
        t: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if t == order.len() {
            return true;
        }
        let i = order[t];
        for c in 0..b.rank() {
            if used[c] || a.dim(i) != b.dim(c) {
                continue;
            }
            map[i] = c;
            used[c] = true;
            if consistent(a, b, map) && go(a, b, order, t + 1, map, used) {
                return true;
            }
            used[c] = false;
            map[i] = usize::MAX;
        }
        false
    }
    go(a, b, &order, 0, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests;
