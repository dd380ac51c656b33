//! Generating the bundled E6 and E8 doubles.
//!
//! The base ring is read off the principal graph: on even vertices
//! `AAᵀ − 1` is multiplication by the vertex at depth two, and every other
//! even vertex is a polynomial in it applied to the root. The double is the
//! order-two orbit construction over SU(2)_k ⊗ D, with D the Ising ring for
//! E6 and the Fibonacci ring for E8, and restriction rows are solved as a
//! ring homomorphism.

use num::{BigRational, One, Signed, ToPrimitive, Zero};

use super::restrict::multiply;
use super::{solve_restriction, DoubleLabel, DoubleSystem, RestrictionProblem, SplitTotal};
use crate::algnum::AlgReal;
use crate::error::{Error, Result};
use crate::fusion::{self, FusionRing, OrbitClass, SimpleCurrentExtension};
use crate::graph::{dynkin, Diagram, Parity};

type Matrix = Vec<Vec<BigRational>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// The even part of an A-D-E principal graph as a fusion ring, when every
/// even vertex is a polynomial in the depth-two vertex.
pub fn even_part_from_graph(diagram: Diagram) -> Result<FusionRing> {
    let g = dynkin(diagram)?;
    let dims_all = crate::graph::perron_vector(&g)?;
    let even: Vec<usize> = (0..g.vertices().len()).filter(|&v| g.vertices()[v].parity == Parity::Even).collect();
    let n = even.len();
    let pos = |v: usize| even.iter().position(|&e| e == v);
    let root = pos(g.root()).ok_or_else(|| Error::Graph("root is not even".into()))?;
    // x[k][i] = multiplicity of even vertex k in x·(even vertex i).
    let mut x = vec![vec![BigRational::zero(); n]; n];
    for (i, &vi) in even.iter().enumerate() {
        for w in g.neighbors(vi) {
            for u in g.neighbors(w) {
                x[pos(u).unwrap()][i] += BigRational::one();
            }
        }
        x[i][i] -= BigRational::one();
    }
    // Krylov basis v_t = x^t e_root, then solve e_j = Σ c_t v_t.
    let mut powers = vec![identity(n)];
    for _ in 1..n {
        let next = mat_mul(powers.last().unwrap(), &x);
        powers.push(next);
    }
    let krylov: Vec<Vec<BigRational>> = powers.iter().map(|p| (0..n).map(|k| p[k][root].clone()).collect()).collect();
    let mut constants = Vec::new();
    for j in 0..n {
        let target: Vec<BigRational> =
            (0..n).map(|k| if k == j { BigRational::one() } else { BigRational::zero() }).collect();
        let coeffs = solve_rational(&krylov, &target)
            .ok_or_else(|| Error::Fusion(format!("{diagram}: even vertices are not generated by depth two")))?;
        let mut lj = vec![vec![BigRational::zero(); n]; n];
        for (c, p) in coeffs.iter().zip(&powers) {
            for k in 0..n {
                for i in 0..n {
                    lj[k][i] += c * &p[k][i];
                }
            }
        }
        for (k, row) in lj.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                if v.is_negative() || !v.is_integer() {
                    return Err(Error::Fusion(format!("{diagram}: non-integral constant")));
                }
                let v = v.to_integer().to_u32().unwrap();
                if v > 0 {
                    constants.push((j, i, k, v));
                }
            }
        }
    }
    let mut dual = vec![usize::MAX; n];
    for &(i, j, k, _) in &constants {
        if k == root {
            dual[i] = j;
        }
    }
    if dual.contains(&usize::MAX) {
        return Err(Error::Fusion(format!("{diagram}: missing duals")));
    }
    let dims: Vec<AlgReal> = even.iter().map(|&v| dims_all[v].clone()).collect();
    FusionRing::new(
        format!("{diagram} even"),
        even.iter().map(|&v| g.vertices()[v].id.clone()).collect(),
        root,
        dual,
        constants,
        Some(dims),
    )
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect()
}

/// Solves `Σ_t c_t cols[t] = target` for a square, invertible system.
fn solve_rational(cols: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = target.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|k| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[k].clone()).collect();
            row.push(target[k].clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v = &*v / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// `{0, 1}` with `1·1 = 0 + 1`.
fn fib_numbered() -> FusionRing {
    let f = fusion::fibonacci_ring();
    FusionRing::from_constants_unchecked(
        "Fib",
        vec!["0".into(), "1".into()],
        0,
        vec![0, 1],
        f.constants(),
        f.dims().to_vec(),
    )
}

struct Recipe {
    level: u32,
    second: FusionRing,
    /// Index in the second factor paired with `level` in the current.
    current_second: usize,
    admissible: fn(usize, usize) -> bool,
}

fn recipe(diagram: Diagram) -> Result<Recipe> {
    match diagram {
        Diagram::E(6) => Ok(Recipe {
            level: 10,
            second: fusion::su2_ring(2)?.rename("Ising"),
            current_second: 2,
            admissible: |j, k| (j % 2 == 0 && k != 1) || (j % 2 == 1 && k == 1),
        }),
        Diagram::E(8) => {
            Ok(Recipe { level: 28, second: fib_numbered(), current_second: 0, admissible: |j, _| j % 2 == 0 })
        }
        _ => Err(Error::InvalidArgument(format!("no exceptional double for {diagram}"))),
    }
}

/// Builds the double of the even part of E6 or E8 from scratch: the first
/// of [`generate_exceptional_doubles`].
pub fn generate_exceptional_double(diagram: Diagram) -> Result<DoubleSystem> {
    generate_exceptional_doubles(diagram)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Double(format!("{diagram} double: no consistent restriction")))
}

/// Every completion of the orbit ring paired with every consistent
/// restriction, in canonical order.
pub fn generate_exceptional_doubles(diagram: Diagram) -> Result<Vec<DoubleSystem>> {
    let rc = recipe(diagram)?;
    let base = even_part_from_graph(diagram)?;
    let su2 = fusion::su2_ring(rc.level)?;
    let parent = fusion::tensor_ring(&su2, &rc.second);
    let m = rc.second.rank();
    let admissible: Vec<usize> = (0..parent.rank()).filter(|&x| (rc.admissible)(x / m, x % m)).collect();
    let current = rc.level as usize * m + rc.current_second;
    let name = format!("{diagram} double");
    let pair_of = |x: usize| (x / m, rc.second.object(x % m).to_string());
    let rep = |v: &[usize]| -> usize { *v.iter().min_by_key(|&&x| (x % m, x / m)).unwrap() };
    let ext = SimpleCurrentExtension::new(&parent, current, &admissible, &name, |c| match c {
        OrbitClass::Orbit(v) => {
            let (j, k) = pair_of(rep(v));
            format!("({j},{k})")
        }
        OrbitClass::Split { fixed, index } => {
            let (j, k) = pair_of(*fixed);
            format!("({j},{k})_{}", index + 1)
        }
    })?;
    let labels: Vec<DoubleLabel> = ext
        .data
        .classes
        .iter()
        .map(|c| match c {
            OrbitClass::Orbit(v) => {
                let (j, k) = pair_of(rep(v));
                DoubleLabel::Pair { j: j.to_string(), k }
            }
            OrbitClass::Split { fixed, index } => {
                let (j, k) = pair_of(*fixed);
                DoubleLabel::Split { j: j.to_string(), k, tag: format!("_{}", index + 1) }
            }
        })
        .collect();

    let mut found = Vec::new();
    for ring in ext.completions()? {
        let problem = RestrictionProblem { base: &base, ring: &ring, rows: vec![None; ring.rank()], split_totals: &[] };
        for rows in solve_restriction(&problem)? {
            let totals = split_totals_from_unsplit(&ext, &base, &ring, &rows)?;
            found.push((ring.clone(), rows, totals));
        }
    }
    found.sort_by(|a, b| (a.0.constants(), &a.1).cmp(&(b.0.constants(), &b.1)));
    let source = format!(
        "orbit construction over SU(2)_{} ⊗ {} with current ({}, {}); restriction solved as a ring homomorphism",
        rc.level,
        rc.second.name(),
        rc.level,
        rc.second.object(rc.current_second)
    );
    found
        .into_iter()
        .map(|(ring, rows, totals)| {
            Ok(DoubleSystem::new(name.clone(), base.clone(), ring, labels.clone(), rows, totals)?
                .with_source(source.clone()))
        })
        .collect()
}

/// The unsplit row over each fixed point, obtained from a product of two
/// free orbits whose other summands are all free. Restriction and
/// induction are both ring maps, so the halves never enter.
fn split_totals_from_unsplit(
    ext: &SimpleCurrentExtension,
    base: &FusionRing,
    ring: &FusionRing,
    rows: &[Vec<u32>],
) -> Result<Vec<SplitTotal>> {
    let data = &ext.data;
    let is_free = |a: usize| matches!(data.classes[a], OrbitClass::Orbit(_));
    let mut out = Vec::new();
    for (a, b) in data.split_pairs() {
        let mut total = None;
        'search: for x in (0..ring.rank()).filter(|&x| is_free(x)) {
            for y in (0..ring.rank()).filter(|&y| is_free(y)) {
                let prod = ring.product(x, y);
                let mult = |t: usize| prod.iter().find(|&&(z, _)| z == t).map_or(0, |p| p.1);
                let n = mult(a);
                if n == 0 || n != mult(b) || prod.iter().any(|&(z, _)| z != a && z != b && !is_free(z)) {
                    continue;
                }
                let mut acc = multiply(base, &rows[x], &rows[y]);
                for &(z, c) in prod.iter().filter(|&&(z, _)| is_free(z)) {
                    for (v, e) in acc.iter_mut().zip(&rows[z]) {
                        *v -= i64::from(c) * i64::from(*e);
                    }
                }
                let n = i64::from(n);
                if acc.iter().any(|&v| v < 0 || v % n != 0) {
                    return Err(Error::Double("free products give a non-integral split total".into()));
                }
                total = Some(acc.iter().map(|&v| (v / n) as u32).collect());
                break 'search;
            }
        }
        let total = total.ok_or_else(|| Error::Double("no free product covers a fixed point".into()))?;
        out.push(SplitTotal { halves: (a, b), total });
    }
    Ok(out)
}
