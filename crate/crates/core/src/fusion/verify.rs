//! Itemized checks of the fusion-ring axioms.

use std::fmt;

use num::{BigInt, Integer, One, ToPrimitive};
use serde::Serialize;

use super::FusionRing;
use crate::algnum::{self, AlgReal};

const MAX_REPORTED: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Unit,
    Duality,
    Frobenius,
    Contragredient,
    Associativity,
    Dimension,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Unit => "unit",
            Axiom::Duality => "duality",
            Axiom::Frobenius => "frobenius",
            Axiom::Contragredient => "contragredient",
            Axiom::Associativity => "associativity",
            Axiom::Dimension => "dimension",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Number of violated instances; only the first few are itemized.
    pub failure_count: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub ring: String,
    pub items: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        self.items.iter().find(|c| c.axiom == axiom).expect("every axiom is checked")
    }

    pub fn first_failure(&self) -> String {
        self.items
            .iter()
            .find(|c| !c.passed)
            .map(|c| format!("{}: {}", c.axiom, c.failures.first().map_or("", String::as_str)))
            .unwrap_or_default()
    }
}

struct Collector {
    axiom: Axiom,
    count: usize,
    failures: Vec<String>,
}

impl Collector {
    fn new(axiom: Axiom) -> Self {
        Collector { axiom, count: 0, failures: Vec::new() }
    }

    fn fail(&mut self, msg: impl FnOnce() -> String) {
        self.count += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(msg());
        }
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck { axiom: self.axiom, passed: self.count == 0, failure_count: self.count, failures: self.failures }
    }
}

/// Checks unit, duality, Frobenius reciprocity, contragredient symmetry,
/// associativity and the exact dimension equation.
pub fn verify_axioms(ring: &FusionRing) -> AxiomReport {
    let items = vec![
        check_unit(ring),
        check_duality(ring),
        check_frobenius(ring),
        check_contragredient(ring),
        check_associativity(ring),
        check_dimensions(ring),
    ];
    AxiomReport { ring: ring.name().to_string(), items }
}

fn check_unit(r: &FusionRing) -> AxiomCheck {
    let mut c = Collector::new(Axiom::Unit);
    let u = r.unit();
    for j in 0..r.rank() {
        for (side, prod) in [("left", r.product(u, j)), ("right", r.product(j, u))] {
            if prod != [(j, 1)] {
                c.fail(|| format!("{side} unit law fails for {}", r.object(j)));
            }
        }
    }
    c.finish()
}

fn check_duality(r: &FusionRing) -> AxiomCheck {
    let mut c = Collector::new(Axiom::Duality);
    let u = r.unit();
    if r.dual(u) != u {
        c.fail(|| "unit is not self-dual".into());
    }
    for i in 0..r.rank() {
        if r.dual(r.dual(i)) != i {
            c.fail(|| format!("dual is not an involution at {}", r.object(i)));
        }
        for j in 0..r.rank() {
            let expected = u32::from(j == r.dual(i));
            if r.n(i, j, u) != expected {
                c.fail(|| {
                    format!("N_{{{},{}}}^unit = {}, expected {expected}", r.object(i), r.object(j), r.n(i, j, u))
                });
            }
        }
    }
    c.finish()
}

/// Checking every nonzero constant against each generator of the symmetry
/// group is enough: the nonzero support is then invariant with equal values.
fn check_symmetry(
    r: &FusionRing,
    axiom: Axiom,
    maps: &[&dyn Fn(usize, usize, usize) -> (usize, usize, usize)],
) -> AxiomCheck {
    let mut c = Collector::new(axiom);
    if r.duals().iter().any(|&d| d >= r.rank()) {
        c.fail(|| "dual out of range".into());
        return c.finish();
    }
    for (i, j, k, v) in r.constants() {
        for map in maps {
            let (a, b, d) = map(i, j, k);
            let w = r.n(a, b, d);
            if w != v {
                c.fail(|| {
                    format!(
                        "N_{{{},{}}}^{} = {v} but N_{{{},{}}}^{} = {w}",
                        r.object(i),
                        r.object(j),
                        r.object(k),
                        r.object(a),
                        r.object(b),
                        r.object(d)
                    )
                });
            }
        }
    }
    c.finish()
}

fn check_frobenius(r: &FusionRing) -> AxiomCheck {
    let d = |x: usize| r.dual(x);
    check_symmetry(r, Axiom::Frobenius, &[&|i, j, k| (d(i), k, j), &|i, j, k| (k, d(j), i)])
}

fn check_contragredient(r: &FusionRing) -> AxiomCheck {
    let d = |x: usize| r.dual(x);
    check_symmetry(r, Axiom::Contragredient, &[&|i, j, k| (d(j), d(i), d(k))])
}

const PRIME: u64 = 2_147_483_647; // 2^31 - 1

fn mulmod(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

/// Row-echelon basis over 𝔽_p; a nonzero vector that survives reduction is
/// new. Rank over 𝔽_p bounds rank over ℚ from below.
struct ModSpan {
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModSpan {
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (pivot, row) in &self.rows {
            let f = v[*pivot];
            if f != 0 {
                let g = PRIME - f;
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + g * *y) % PRIME;
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = powmod(v[p], PRIME - 2);
        for x in &mut v {
            *x = mulmod(*x, inv);
        }
        self.rows.push((p, v));
        true
    }
}

/// A set of objects whose products span the ring over ℚ, chosen greedily by
/// ascending dimension. Objects of equal dimension are tried in index order.
pub fn algebra_generators(r: &FusionRing) -> Vec<usize> {
    let n = r.rank();
    let mut order: Vec<usize> = (0..n).filter(|&i| i != r.unit()).collect();
    if r.dims().len() == n {
        let approx: Vec<f64> = r.dims().iter().map(AlgReal::to_f64).collect();
        order.sort_by(|&a, &b| approx[a].total_cmp(&approx[b]).then(a.cmp(&b)));
    }
    let mut span = ModSpan { rows: Vec::new() };
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut unit = vec![0; n];
    unit[r.unit()] = 1;
    span.insert(unit.clone());
    basis.push(unit);
    let mut gens: Vec<usize> = Vec::new();
    // applied[b] counts the generators already applied to basis[b].
    let mut applied: Vec<usize> = vec![0];
    for g in order {
        if span.rows.len() == n {
            break;
        }
        let mut e = vec![0; n];
        e[g] = 1;
        if !span.insert(e.clone()) {
            continue;
        }
        gens.push(g);
        basis.push(e);
        applied.push(0);
        // Close the span under left multiplication by every chosen generator.
        let mut idx = 0;
        while idx < basis.len() && span.rows.len() < n {
            if applied[idx] == gens.len() {
                idx += 1;
                continue;
            }
            let h = gens[applied[idx]];
            applied[idx] += 1;
            let mut w = vec![0u64; n];
            for (j, &c) in basis[idx].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &(k, m) in r.product(h, j) {
                    w[k] = (w[k] + mulmod(c, u64::from(m))) % PRIME;
                }
            }
            if span.insert(w.clone()) {
                basis.push(w);
                applied.push(0);
            }
        }
    }
    gens
}

/// Left associativity `(g i) j = g (i j)` for every algebra generator `g`,
/// which implies it for all objects once the unit law holds.
fn check_associativity(r: &FusionRing) -> AxiomCheck {
    let mut c = Collector::new(Axiom::Associativity);
    let n = r.rank();
    let mut lhs = vec![0u64; n];
    let mut rhs = vec![0u64; n];
    for g in algebra_generators(r) {
        for i in 0..n {
            for j in 0..n {
                for &(m, a) in r.product(g, i) {
                    for &(l, b) in r.product(m, j) {
                        lhs[l] += u64::from(a) * u64::from(b);
                    }
                }
                for &(m, a) in r.product(i, j) {
                    for &(l, b) in r.product(g, m) {
                        rhs[l] += u64::from(a) * u64::from(b);
                    }
                }
                for l in 0..n {
                    if lhs[l] != rhs[l] {
                        let (x, y) = (lhs[l], rhs[l]);
                        c.fail(|| {
                            format!(
                                "({}·{})·{} ∋ {} with multiplicity {x}, {}·({}·{}) with {y}",
                                r.object(g),
                                r.object(i),
                                r.object(j),
                                r.object(l),
                                r.object(g),
                                r.object(i),
                                r.object(j)
                            )
                        });
                    }
                    lhs[l] = 0;
                    rhs[l] = 0;
                }
            }
        }
    }
    c.finish()
}

/// Dimensions scaled to integer coordinates in the power basis of one common
/// field, so the dimension equation can be checked in machine integers.
struct IntegralDims {
    minpoly: Vec<i128>,
    denom: i128,
    coords: Vec<Vec<i128>>,
}

impl IntegralDims {
    fn new(dims: &[AlgReal]) -> Option<Self> {
        let conductor = dims.iter().fold(1, |acc, d| algnum::field::lcm(acc, d.conductor()));
        let field = algnum::field::field(conductor);
        let lifted: Vec<_> = dims.iter().map(|d| d.lift(conductor)).collect();
        let mut denom = BigInt::one();
        for c in lifted.iter().flatten() {
            denom = denom.lcm(c.denom());
        }
        let to_i128 = |x: &BigInt| x.to_i128();
        let minpoly = field
            .minpoly
            .iter()
            .map(|c| c.is_integer().then(|| to_i128(c.numer())).flatten())
            .collect::<Option<Vec<_>>>()?;
        let m = minpoly.len() - 1;
        let coords = lifted
            .iter()
            .map(|p| {
                let mut v = vec![0i128; m];
                for (slot, c) in v.iter_mut().zip(p) {
                    *slot = to_i128(&(c * &denom).to_integer())?;
                }
                Some(v)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(IntegralDims { minpoly, denom: to_i128(&denom)?, coords })
    }

    /// `d_i · d_j · denom²`, reduced modulo the monic minimal polynomial.
    fn product(&self, i: usize, j: usize) -> Option<Vec<i128>> {
        let m = self.minpoly.len() - 1;
        let (a, b) = (&self.coords[i], &self.coords[j]);
        let mut prod = vec![0i128; 2 * m.max(1)];
        for (x, &ax) in a.iter().enumerate() {
            if ax == 0 {
                continue;
            }
            for (y, &by) in b.iter().enumerate() {
                prod[x + y] = prod[x + y].checked_add(ax.checked_mul(by)?)?;
            }
        }
        for deg in (m..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for t in 0..m {
                let sub = lead.checked_mul(self.minpoly[t])?;
                prod[deg - m + t] = prod[deg - m + t].checked_sub(sub)?;
            }
        }
        prod.truncate(m);
        Some(prod)
    }
}

fn check_dimensions(r: &FusionRing) -> AxiomCheck {
    let mut c = Collector::new(Axiom::Dimension);
    let n = r.rank();
    if r.dims().len() != n {
        c.fail(|| "dimension vector has the wrong length".into());
        return c.finish();
    }
    if !r.dim(r.unit()).is_rational() || r.dim(r.unit()) != &AlgReal::one() {
        c.fail(|| "unit dimension is not 1".into());
    }
    let one = AlgReal::one();
    for i in 0..n {
        if r.dim(i) < &one {
            c.fail(|| format!("d({}) < 1", r.object(i)));
        }
    }
    let fast = IntegralDims::new(r.dims());
    for i in 0..n {
        for j in 0..n {
            let ok = fast
                .as_ref()
                .and_then(|f| dimension_eq_integral(r, f, i, j))
                .unwrap_or_else(|| dimension_eq_exact(r, i, j));
            if !ok {
                c.fail(|| format!("d({})·d({}) ≠ Σ N d", r.object(i), r.object(j)));
            }
        }
    }
    c.finish()
}

fn dimension_eq_integral(r: &FusionRing, f: &IntegralDims, i: usize, j: usize) -> Option<bool> {
    let lhs = f.product(i, j)?;
    let mut rhs = vec![0i128; lhs.len()];
    for &(k, v) in r.product(i, j) {
        for (slot, &x) in rhs.iter_mut().zip(&f.coords[k]) {
            *slot = slot.checked_add(x.checked_mul(i128::from(v))?.checked_mul(f.denom)?)?;
        }
    }
    Some(lhs == rhs)
}

fn dimension_eq_exact(r: &FusionRing, i: usize, j: usize) -> bool {
    let lhs = r.dim(i) * r.dim(j);
    let rhs: AlgReal = r.product(i, j).iter().map(|&(k, v)| r.dim(k) * &AlgReal::from_integer(i64::from(v))).sum();
    lhs == rhs
}
