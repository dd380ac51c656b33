//! Dense univariate polynomials over ℚ, lowest degree first.
//!
//! Every function returns trimmed vectors: no trailing zero coefficients, and
//! the zero polynomial is the empty vector.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Poly = Vec<BigRational>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn constant(c: BigRational) -> Poly {
    let mut p = vec![c];
    trim(&mut p);
    p
}

pub fn from_ints(coeffs: &[i64]) -> Poly {
    let mut p: Poly = coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    trim(&mut p);
    p
}

pub fn add(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub fn neg(a: &[BigRational]) -> Poly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    add(a, &neg(b))
}

pub fn scale(a: &[BigRational], s: &BigRational) -> Poly {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * s).collect()
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[shift + j] -= &c * bj;
            }
        }
        quot[shift] = c;
        // the leading term cancels exactly
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn rem(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.len() < b.len() {
        let mut r = a.to_vec();
        trim(&mut r);
        return r;
    }
    divrem(a, b).1
}

pub fn mulmod(a: &[BigRational], b: &[BigRational], m: &[BigRational]) -> Poly {
    rem(&mul(a, b), m)
}

/// Inverse of `a` modulo the irreducible `m`, by the extended Euclidean
/// algorithm. `None` when `a ≡ 0`.
pub fn invmod(a: &[BigRational], m: &[BigRational]) -> Option<Poly> {
    let a = rem(a, m);
    if a.is_empty() {
        return None;
    }
    // invariant: s * a ≡ r (mod m)
    let (mut r0, mut r1) = (m.to_vec(), a);
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), constant(BigRational::one()));
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant when m is irreducible
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(rem(&scale(&s0, &(BigRational::one() / c)), m))
}

/// Evaluates `p` at `x` (Horner).
pub fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Composition `p(q(y))` reduced modulo `m`.
pub fn compose_mod(p: &[BigRational], q: &[BigRational], m: &[BigRational]) -> Poly {
    let mut acc: Poly = Vec::new();
    for c in p.iter().rev() {
        acc = add(&mulmod(&acc, q, m), &constant(c.clone()));
    }
    acc
}

pub fn sign_at(p: &[BigRational], x: &BigRational) -> i32 {
    let v = eval(p, x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn divrem_reconstructs_dividend() {
        let a = from_ints(&[5, -3, 0, 2, 1]);
        let b = from_ints(&[1, 0, 1]);
        let (quot, r) = divrem(&a, &b);
        assert!(r.len() < b.len());
        assert_eq!(add(&mul(&quot, &b), &r), a);
    }

    #[test]
    fn inverse_modulo_golden_polynomial() {
        // x^2 - x - 1; x^{-1} = x - 1
        let m = from_ints(&[-1, -1, 1]);
        let inv = invmod(&from_ints(&[0, 1]), &m).unwrap();
        assert_eq!(inv, from_ints(&[-1, 1]));
        assert!(invmod(&m, &m).is_none());
    }

    #[test]
    fn eval_and_sign() {
        let p = from_ints(&[-2, 0, 1]);
        assert_eq!(eval(&p, &q(3)), q(7));
        assert_eq!(sign_at(&p, &q(1)), -1);
        assert_eq!(sign_at(&p, &q(2)), 1);
    }
}
