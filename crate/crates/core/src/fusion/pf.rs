//! Exact Perron–Frobenius dimensions from structure constants alone.
//!
//! `M = Σ_i N_i` is a symmetric, entrywise positive integer matrix whose
//! Perron root `λ = Σ_i d_i` is a simple root of its characteristic
//! polynomial. `λ` is located to high precision, matched against each real
//! cyclotomic field by integer-relation search, confirmed as an exact root,
//! and the dimension vector is then the normalized kernel of `M − λ`.

use num::{BigInt, BigRational, One, Signed, Zero};

use super::FusionRing;
use crate::algnum::field;
use crate::algnum::linalg::kernel_line;
use crate::algnum::lll::integer_relations;
use crate::algnum::{AlgReal, Interval};
use crate::error::{Error, Result};

pub const DEFAULT_CONDUCTOR_BOUND: u32 = 60;
/// Fields of larger degree make the relation search impractically slow.
const MAX_FIELD_DEGREE: usize = 24;

#[derive(Clone, Debug)]
pub enum PfDimensions {
    Exact(Vec<AlgReal>),
    /// No exact representative was found; each interval certifiably contains
    /// the corresponding dimension.
    Approximate {
        intervals: Vec<Interval>,
        warning: String,
    },
}

impl PfDimensions {
    pub fn exact(self) -> Result<Vec<AlgReal>> {
        match self {
            PfDimensions::Exact(d) => Ok(d),
            PfDimensions::Approximate { warning, .. } => Err(Error::NotExact(warning)),
        }
    }
}

/// Computes the dimensions, searching conductors up to `conductor_bound`.
pub fn pf_dimensions(ring: &FusionRing, conductor_bound: u32) -> Result<Vec<AlgReal>> {
    pf_dimensions_or_interval(ring, conductor_bound).exact()
}

pub fn pf_dimensions_or_interval(ring: &FusionRing, conductor_bound: u32) -> PfDimensions {
    let n = ring.rank();
    let m = sum_matrix(ring);
    let v = perron_vector_f64(&m);
    if let Some(dims) = exact_attempt(ring, &m, &v, conductor_bound) {
        return PfDimensions::Exact(dims);
    }
    let intervals = (0..n).map(|i| collatz_wielandt(ring, i, &v)).collect();
    PfDimensions::Approximate {
        intervals,
        warning: format!(
            "{}: no exact dimensions in conductors up to {conductor_bound}; returning certified intervals",
            ring.name()
        ),
    }
}

fn sum_matrix(ring: &FusionRing) -> Vec<Vec<i64>> {
    let n = ring.rank();
    let mut m = vec![vec![0i64; n]; n];
    for (_, j, k, v) in ring.constants() {
        m[k][j] += i64::from(v);
    }
    m
}

fn perron_vector_f64(m: &[Vec<i64>]) -> Vec<f64> {
    let n = m.len();
    let mut v = vec![1.0; n];
    for _ in 0..2000 {
        let mut w: Vec<f64> = (0..n).map(|k| (0..n).map(|j| m[k][j] as f64 * v[j]).sum()).collect();
        let norm = w.iter().cloned().fold(0.0, f64::max);
        w.iter_mut().for_each(|x| *x /= norm);
        let delta = w.iter().zip(&v).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        v = w;
        if delta < 1e-15 {
            break;
        }
    }
    v
}

/// Rational bracket for `d_i = ρ(N_i)` from any positive test vector.
fn collatz_wielandt(ring: &FusionRing, i: usize, v: &[f64]) -> Interval {
    let q: Vec<BigRational> = v.iter().map(|&x| BigRational::from_float(x.max(1e-300)).expect("finite")).collect();
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for k in 0..ring.rank() {
        let mut s = BigRational::zero();
        for j in 0..ring.rank() {
            let c = ring.n(i, j, k);
            if c > 0 {
                s += &q[j] * BigRational::from_integer(BigInt::from(c));
            }
        }
        let ratio = s / &q[k];
        lo = Some(lo.map_or(ratio.clone(), |l| l.min(ratio.clone())));
        hi = Some(hi.map_or(ratio.clone(), |h| h.max(ratio)));
    }
    Interval::new(lo.unwrap_or_default(), hi.unwrap_or_default())
}

/// Characteristic polynomial `det(x − M)` by Faddeev–LeVerrier, lowest
/// degree first.
fn charpoly(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let mb: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // mk ← M·mk + c_{n−k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in mb.iter().enumerate() {
            for (l, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !mk[l][j].is_zero() {
                        next[i][j] += a * &mk[l][j];
                    }
                }
            }
        }
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let mut tr = BigInt::zero();
        for (i, row) in mb.iter().enumerate() {
            for (l, a) in row.iter().enumerate() {
                tr += a * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k as u64);
    }
    coeffs
}

fn sign_at(p: &[BigInt], x: &BigRational) -> i32 {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

/// Bisects the sign change around `guess` down to width `2^-bits`.
fn refine_root(p: &[BigInt], guess: f64, bits: u32) -> Option<BigRational> {
    let eps = 1e-9 * guess.abs().max(1.0);
    let mut lo = BigRational::from_float(guess - eps)?;
    let mut hi = BigRational::from_float(guess + eps)?;
    let s_lo = sign_at(p, &lo);
    if s_lo == 0 {
        return Some(lo);
    }
    if sign_at(p, &hi) == s_lo {
        return None;
    }
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > width {
        let mid = (&lo + &hi) / &two;
        match sign_at(p, &mid) {
            0 => return Some(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Some((lo + hi) / two)
}

fn eval_exact(p: &[BigInt], x: &AlgReal) -> AlgReal {
    let mut acc = AlgReal::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + &AlgReal::from_rational(BigRational::from_integer(c.clone()));
    }
    acc
}

fn exact_attempt(ring: &FusionRing, m: &[Vec<i64>], v: &[f64], bound: u32) -> Option<Vec<AlgReal>> {
    let n = ring.rank();
    let lambda_f: f64 = {
        let mv: f64 = (0..n).map(|j| m[0][j] as f64 * v[j]).sum();
        mv / v[0]
    };
    let chi = charpoly(m);
    let lambda = find_lambda(&chi, lambda_f, bound)?;
    let mut a: Vec<Vec<AlgReal>> =
        m.iter().map(|row| row.iter().map(|&x| AlgReal::from_integer(x)).collect()).collect();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = &row[i] - &lambda;
    }
    let dims = kernel_line(a, ring.unit())?;
    let one = AlgReal::one();
    dims.iter().all(|d| d >= &one).then_some(dims)
}

fn find_lambda(chi: &[BigInt], guess: f64, bound: u32) -> Option<AlgReal> {
    let rounded = guess.round();
    if (guess - rounded).abs() < 1e-6 {
        let q = AlgReal::from_integer(rounded as i64);
        if eval_exact(chi, &q).is_zero() {
            return Some(q);
        }
    }
    let max_bits = 24 * (MAX_FIELD_DEGREE as u32 + 1) + 72;
    let lambda = refine_root(chi, guess, max_bits)?;
    for conductor in 4..=bound {
        let f = field::field(conductor);
        let deg = f.degree();
        if deg < 2 || deg > MAX_FIELD_DEGREE {
            continue;
        }
        let bits = 24 * (deg as u32 + 1) + 64;
        let width = BigRational::new(BigInt::one(), BigInt::one() << (bits + 2 * deg as u32 + 16));
        let (blo, bhi) = f.beta_interval(&width);
        let beta = (blo + bhi) / BigRational::from_integer(BigInt::from(2));
        let mut xs = vec![lambda.clone()];
        let mut pow = BigRational::one();
        for _ in 0..deg {
            xs.push(pow.clone());
            pow *= &beta;
        }
        for rel in integer_relations(&xs, bits).into_iter().take(3) {
            if rel[0].is_zero() {
                continue;
            }
            let c0 = BigRational::from_integer(rel[0].clone());
            let coeffs: Vec<BigRational> =
                rel[1..].iter().map(|c| -BigRational::from_integer(c.clone()) / &c0).collect();
            let cand = AlgReal::new(conductor, coeffs).ok()?;
            if (cand.to_f64() - guess).abs() < 1e-6 * guess.abs().max(1.0) && eval_exact(chi, &cand).is_zero() {
                return Some(cand);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{fibonacci_ring, pointed_ring, su2_ring};

    #[test]
    fn charpoly_of_small_matrix() {
        // [[2,1],[1,2]]: x² − 4x + 3
        let p = charpoly(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(p, vec![BigInt::from(3), BigInt::from(-4), BigInt::one()]);
    }

    #[test]
    fn pointed_dimensions_are_one() {
        let d = pf_dimensions(&pointed_ring(3), DEFAULT_CONDUCTOR_BOUND).unwrap();
        assert_eq!(d, vec![AlgReal::one(); 3]);
    }

    #[test]
    fn fibonacci_dimensions() {
        let d = pf_dimensions(&fibonacci_ring(), DEFAULT_CONDUCTOR_BOUND).unwrap();
        assert_eq!(d, vec![AlgReal::one(), AlgReal::golden_ratio()]);
    }

    #[test]
    fn su2_level_four_dimensions() {
        let r = su2_ring(4).unwrap();
        let d = pf_dimensions(&r, DEFAULT_CONDUCTOR_BOUND).unwrap();
        let s3 = AlgReal::sqrt(3).unwrap();
        let expected = vec![AlgReal::one(), s3.clone(), AlgReal::from_integer(2), s3, AlgReal::one()];
        assert_eq!(d, expected);
    }

    #[test]
    fn larger_levels_match_sine_quotients() {
        for k in [5u32, 7, 10] {
            let r = su2_ring(k).unwrap();
            let d = pf_dimensions(&r, DEFAULT_CONDUCTOR_BOUND).unwrap();
            assert_eq!(d.as_slice(), r.dims(), "level {k}");
        }
    }
}
