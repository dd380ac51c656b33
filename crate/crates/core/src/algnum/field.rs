//! The real cyclotomic fields ℚ(2cos(π/N)) and their generators.
//!
//! Field data is computed once per conductor and shared through a global
//! cache; everything stored there is immutable apart from the isolating
//! interval of the generator, which only ever shrinks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, Integer, One, Zero};

use super::poly::{self, Poly};

pub struct Field {
    /// Monic minimal polynomial of `2cos(π/N)`.
    pub minpoly: Poly,
    beta_bracket: Mutex<(BigRational, BigRational)>,
    pub beta_f64: f64,
}

impl Field {
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// A rational interval of width at most `width` containing `2cos(π/N)`.
    pub fn beta_interval(&self, width: &BigRational) -> (BigRational, BigRational) {
        let mut guard = self.beta_bracket.lock().unwrap();
        let two = BigRational::from_integer(BigInt::from(2));
        while &(&guard.1 - &guard.0) > width {
            let (lo, hi) = guard.clone();
            let mid = (&lo + &hi) / &two;
            let s_lo = poly::sign_at(&self.minpoly, &lo);
            let s_mid = poly::sign_at(&self.minpoly, &mid);
            if s_mid == 0 {
                *guard = (mid.clone(), mid);
            } else if s_mid == s_lo {
                *guard = (mid, hi);
            } else {
                *guard = (lo, mid);
            }
        }
        guard.clone()
    }
}

/// Chebyshev-type polynomials `C_k` with `C_k(2cos θ) = 2cos(kθ)`.
pub fn chebyshev_c(k: u32) -> Poly {
    let x = poly::from_ints(&[0, 1]);
    let mut prev = poly::from_ints(&[2]);
    if k == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..k {
        let next = poly::sub(&poly::mul(&x, &cur), &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn cyclotomic(m: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    let mut num = vec![BigRational::zero(); m as usize + 1];
    num[0] = -BigRational::one();
    num[m as usize] = BigRational::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic(d, memo);
            num = poly::divrem(&num, &phi_d).0;
        }
    }
    memo.insert(m, num.clone());
    num
}

/// Minimal polynomial of `2cos(π/N)` over ℚ.
pub fn minimal_polynomial(conductor: u32) -> Poly {
    match conductor {
        0 => panic!("conductor must be positive"),
        1 => poly::from_ints(&[2, 1]),
        2 => poly::from_ints(&[0, 1]),
        n => {
            let m = 2 * n;
            let phi = cyclotomic(m, &mut HashMap::new());
            let d = (phi.len() - 1) / 2;
            // Φ_m(x) / x^d = a_d + Σ_j a_{d+j} (x^j + x^{-j})
            let mut psi = poly::constant(phi[d].clone());
            for j in 1..=d {
                let term = poly::scale(&chebyshev_c(j as u32), &phi[d + j]);
                psi = poly::add(&psi, &term);
            }
            psi
        }
    }
}

fn initial_bracket(conductor: u32, minpoly: &Poly) -> (BigRational, BigRational) {
    if minpoly.len() == 2 {
        let root = -&minpoly[0] / &minpoly[1];
        return (root.clone(), root);
    }
    let guess = 2.0 * (std::f64::consts::PI / f64::from(conductor)).cos();
    let mut delta = 1e-10;
    loop {
        let lo = BigRational::from_float(guess - delta).expect("finite");
        let hi = BigRational::from_float((guess + delta).min(2.0)).expect("finite");
        let (sl, sh) = (poly::sign_at(minpoly, &lo), poly::sign_at(minpoly, &hi));
        if sl == 0 {
            return (lo.clone(), lo);
        }
        if sh == 0 {
            return (hi.clone(), hi);
        }
        if sl != sh {
            return (lo, hi);
        }
        delta *= 4.0;
        assert!(delta < 1e-2, "failed to isolate 2cos(pi/{conductor})");
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<Field>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn field(conductor: u32) -> Arc<Field> {
    if let Some(f) = cache().lock().unwrap().get(&conductor) {
        return Arc::clone(f);
    }
    let minpoly = minimal_polynomial(conductor);
    let bracket = initial_bracket(conductor, &minpoly);
    let f = Arc::new(Field {
        minpoly,
        beta_bracket: Mutex::new(bracket),
        beta_f64: 2.0 * (std::f64::consts::PI / f64::from(conductor)).cos(),
    });
    cache().lock().unwrap().entry(conductor).or_insert(f).clone()
}

/// Image of `2cos(π/N)` inside ℚ(2cos(π/M)) for `N | M`, as a reduced
/// polynomial in `2cos(π/M)`.
pub fn embedding_image(from: u32, to: u32) -> Arc<Poly> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Poly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&(from, to)) {
        return Arc::clone(p);
    }
    assert!(to % from == 0, "conductor {from} does not divide {to}");
    let target = field(to);
    let image = Arc::new(poly::rem(&chebyshev_c(to / from), &target.minpoly));
    cache.lock().unwrap().entry((from, to)).or_insert(image).clone()
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_minimal_polynomials() {
        // 2cos(π/3) = 1, 2cos(π/4) = √2, 2cos(π/5) = φ, 2cos(π/6) = √3
        assert_eq!(minimal_polynomial(3), poly::from_ints(&[-1, 1]));
        assert_eq!(minimal_polynomial(4), poly::from_ints(&[-2, 0, 1]));
        assert_eq!(minimal_polynomial(5), poly::from_ints(&[-1, -1, 1]));
        assert_eq!(minimal_polynomial(6), poly::from_ints(&[-3, 0, 1]));
        // 2cos(π/10)^2 = (5+√5)/2: x^4 - 5x^2 + 5
        assert_eq!(minimal_polynomial(10), poly::from_ints(&[5, 0, -5, 0, 1]));
    }

    #[test]
    fn degree_is_half_totient() {
        for n in 3..60u32 {
            let m = 2 * n;
            let phi = (1..=m).filter(|k| k.gcd(&m) == 1).count();
            assert_eq!(field(n).degree(), phi / 2, "conductor {n}");
        }
    }

    #[test]
    fn bracket_contains_cosine() {
        for n in [3u32, 7, 10, 30, 46] {
            let f = field(n);
            let w = BigRational::new(BigInt::from(1), BigInt::from(10).pow(20));
            let (lo, hi) = f.beta_interval(&w);
            let c = 2.0 * (std::f64::consts::PI / f64::from(n)).cos();
            let lo = num::ToPrimitive::to_f64(&lo).unwrap();
            let hi = num::ToPrimitive::to_f64(&hi).unwrap();
            assert!(lo <= c + 1e-15 && c - 1e-15 <= hi, "{n}: {lo} {hi} {c}");
        }
    }
}
