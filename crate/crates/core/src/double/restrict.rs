//! Solving for restriction rows.
//!
//! Restriction is a unital, dimension-preserving ring homomorphism that
//! commutes with duality. Known rows propagate through products: when
//! `β·γ` contains exactly one object with an unknown row, that row is the
//! difference `Res(β)Res(γ) − Σ_{known δ} N Res(δ)` divided by its
//! multiplicity. Anything left undetermined is branched on.

use super::SplitTotal;
use crate::error::{Error, Result};
use crate::fusion::FusionRing;

pub struct RestrictionProblem<'a> {
    pub base: &'a FusionRing,
    pub ring: &'a FusionRing,
    /// Known rows; `None` marks a row to solve for.
    pub rows: Vec<Option<Vec<u32>>>,
    pub split_totals: &'a [SplitTotal],
}

const MAX_RESTRICTIONS: usize = 64;

/// Every full set of rows satisfying the homomorphism, dimension, duality,
/// split-total and adjunction identities.
pub fn solve_restriction(p: &RestrictionProblem<'_>) -> Result<Vec<Vec<Vec<u32>>>> {
    let r = p.ring.rank();
    if p.rows.len() != r {
        return Err(Error::Double("one row slot per double object is required".into()));
    }
    let mut rows = p.rows.clone();
    let unit_row: Vec<u32> = (0..p.base.rank()).map(|l| u32::from(l == p.base.unit())).collect();
    match &rows[p.ring.unit()] {
        Some(row) if *row != unit_row => return Ok(Vec::new()),
        _ => rows[p.ring.unit()] = Some(unit_row),
    }
    let solver = Solver {
        p,
        base_dims: p.base.dims().iter().map(|d| d.to_f64()).collect(),
        ring_dims: p.ring.dims().iter().map(|d| d.to_f64()).collect(),
    };
    let mut out = Vec::new();
    solver.search(rows, &mut out)?;
    Ok(out)
}

struct Solver<'a, 'b> {
    p: &'a RestrictionProblem<'b>,
    base_dims: Vec<f64>,
    ring_dims: Vec<f64>,
}

impl Solver<'_, '_> {
    fn search(&self, mut rows: Vec<Option<Vec<u32>>>, out: &mut Vec<Vec<Vec<u32>>>) -> Result<()> {
        if !self.propagate(&mut rows) {
            return Ok(());
        }
        let unknown: Vec<usize> = (0..rows.len()).filter(|&b| rows[b].is_none()).collect();
        if unknown.is_empty() {
            let full: Vec<Vec<u32>> = rows.into_iter().map(Option::unwrap).collect();
            if self.consistent(&full) && !out.contains(&full) {
                if out.len() == MAX_RESTRICTIONS {
                    return Err(Error::Double(format!("more than {MAX_RESTRICTIONS} restrictions")));
                }
                out.push(full);
            }
            return Ok(());
        }
        let (beta, cands) =
            unknown.iter().map(|&b| (b, self.candidates(b, &rows))).min_by_key(|(_, c)| c.len()).unwrap();
        for cand in cands {
            let mut next = rows.clone();
            next[beta] = Some(cand);
            self.search(next, out)?;
        }
        Ok(())
    }

    /// Applies forced rows until nothing changes; false on contradiction.
    fn propagate(&self, rows: &mut [Option<Vec<u32>>]) -> bool {
        let ring = self.p.ring;
        let base = self.p.base;
        let r = ring.rank();
        loop {
            let mut changed = false;
            for b in 0..r {
                let d = ring.dual(b);
                if let (Some(row), None) = (&rows[b], &rows[d]) {
                    let dual_row = (0..base.rank()).map(|l| row[base.dual(l)]).collect();
                    rows[d] = Some(dual_row);
                    changed = true;
                }
            }
            for s in self.p.split_totals {
                let (a, b) = s.halves;
                for (x, y) in [(a, b), (b, a)] {
                    if let (Some(row), None) = (&rows[x], &rows[y]) {
                        let mut other = Vec::with_capacity(row.len());
                        for (t, v) in s.total.iter().zip(row) {
                            match t.checked_sub(*v) {
                                Some(w) => other.push(w),
                                None => return false,
                            }
                        }
                        rows[y] = Some(other);
                        changed = true;
                    }
                }
            }
            for b in 0..r {
                let Some(rb) = rows[b].clone() else { continue };
                for c in 0..r {
                    let Some(rc) = rows[c].clone() else { continue };
                    let prod = ring.product(b, c);
                    let missing: Vec<(usize, u32)> = prod.iter().copied().filter(|&(d, _)| rows[d].is_none()).collect();
                    if missing.len() > 1 || (missing.is_empty() && changed) {
                        continue;
                    }
                    let mut rest: Vec<i64> = multiply(base, &rb, &rc);
                    for &(d, n) in prod {
                        if let Some(rd) = &rows[d] {
                            for (x, v) in rest.iter_mut().zip(rd) {
                                *x -= i64::from(n) * i64::from(*v);
                            }
                        }
                    }
                    match missing.as_slice() {
                        [] => {
                            if rest.iter().any(|&x| x != 0) {
                                return false;
                            }
                        }
                        [(d, n)] => {
                            let n = i64::from(*n);
                            if rest.iter().any(|&x| x < 0 || x % n != 0) {
                                return false;
                            }
                            rows[*d] = Some(rest.iter().map(|&x| (x / n) as u32).collect());
                            changed = true;
                        }
                        _ => unreachable!(),
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Nonnegative rows with the right dimension, bounded by a split total
    /// when there is one.
    fn candidates(&self, beta: usize, rows: &[Option<Vec<u32>>]) -> Vec<Vec<u32>> {
        let n = self.p.base.rank();
        let bound: Option<&Vec<u32>> =
            self.p.split_totals.iter().find(|s| s.halves.0 == beta || s.halves.1 == beta).map(|s| &s.total);
        let dual_row = rows[self.p.ring.dual(beta)].as_ref();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        let target = self.ring_dims[beta];
        fn rec(
            s: &Solver<'_, '_>,
            l: usize,
            remaining: f64,
            bound: Option<&Vec<u32>>,
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            let tol = 1e-9 * (1.0 + remaining.abs());
            if l == cur.len() {
                if remaining.abs() < tol {
                    out.push(cur.clone());
                }
                return;
            }
            let d = s.base_dims[l];
            let mut max = ((remaining + tol) / d).floor().max(0.0) as u32;
            if let Some(b) = bound {
                max = max.min(b[l]);
            }
            for v in 0..=max {
                cur[l] = v;
                rec(s, l + 1, remaining - f64::from(v) * d, bound, cur, out);
            }
            cur[l] = 0;
        }
        rec(self, 0, target, bound, &mut cur, &mut out);
        if let Some(dr) = dual_row {
            let base = self.p.base;
            out.retain(|row| (0..n).all(|l| row[l] == dr[base.dual(l)]));
        }
        out
    }

    /// The exact checks every finished assignment must pass.
    fn consistent(&self, rows: &[Vec<u32>]) -> bool {
        let ring = self.p.ring;
        let base = self.p.base;
        let r = ring.rank();
        for b in 0..r {
            if (0..base.rank()).any(|l| rows[ring.dual(b)][l] != rows[b][base.dual(l)]) {
                return false;
            }
            for c in 0..r {
                let mut rest = multiply(base, &rows[b], &rows[c]);
                for &(d, n) in ring.product(b, c) {
                    for (x, v) in rest.iter_mut().zip(&rows[d]) {
                        *x -= i64::from(n) * i64::from(*v);
                    }
                }
                if rest.iter().any(|&x| x != 0) {
                    return false;
                }
            }
        }
        for s in self.p.split_totals {
            let (a, b) = s.halves;
            if (0..base.rank()).any(|l| rows[a][l] + rows[b][l] != s.total[l]) {
                return false;
            }
        }
        for (b, row) in rows.iter().enumerate() {
            let restricted: crate::AlgReal = row
                .iter()
                .zip(base.dims())
                .filter(|(&e, _)| e > 0)
                .map(|(&e, d)| d * &crate::AlgReal::from_integer(i64::from(e)))
                .sum();
            if &restricted != ring.dim(b) {
                return false;
            }
        }
        adjunction_holds(base, rows)
    }
}

/// `Σ_l a_l b_m N_{lm}^k` as a signed vector.
pub(crate) fn multiply(base: &FusionRing, a: &[u32], b: &[u32]) -> Vec<i64> {
    let mut out = vec![0i64; base.rank()];
    for (l, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (m, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            for &(k, n) in base.product(l, m) {
                out[k] += i64::from(x) * i64::from(y) * i64::from(n);
            }
        }
    }
    out
}

/// `Σ_β edges(β,l)·edges(β,l') = Σ_m N(m ⊗ l' ⊗ m̄ → l)`, the statement
/// that restriction is adjoint to induction on the center.
pub(crate) fn adjunction_holds(base: &FusionRing, rows: &[Vec<u32>]) -> bool {
    let n = base.rank();
    for l in 0..n {
        for lp in 0..n {
            let lhs: u64 = rows.iter().map(|row| u64::from(row[l]) * u64::from(row[lp])).sum();
            let mut rhs = 0u64;
            for m in 0..n {
                for &(x, a) in base.product(m, lp) {
                    rhs += u64::from(a) * u64::from(base.n(x, base.dual(m), l));
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
