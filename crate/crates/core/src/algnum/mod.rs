//! Exact arithmetic in the real cyclotomic fields ℚ(2cos(π/N)).
//!
//! An [`AlgReal`] is a polynomial in `β = 2cos(π/N)` reduced modulo the
//! minimal polynomial of `β`. Values from different conductors are combined
//! by lifting both into the field of the least common multiple, using
//! `2cos(π/N) = C_{M/N}(2cos(π/M))`. Ordering is decided by certified
//! interval refinement, with an exact shortcut for equal values.

pub(crate) mod field;
mod interval;
pub mod linalg;
pub mod lll;
pub mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use field::{chebyshev_c, minimal_polynomial};
pub use interval::Interval;

use crate::error::{Error, Result};
use poly::Poly;

/// An exact element of ℚ(2cos(π/N)).
#[derive(Clone)]
pub struct AlgReal {
    conductor: u32,
    coeffs: Poly,
}

impl AlgReal {
    fn from_parts(conductor: u32, coeffs: Poly) -> Self {
        let f = field::field(conductor);
        let mut coeffs = poly::rem(&coeffs, &f.minpoly);
        poly::trim(&mut coeffs);
        // rationals always live in conductor 1
        let conductor = if coeffs.len() <= 1 { 1 } else { conductor };
        AlgReal { conductor, coeffs }
    }

    /// Builds `Σ coeffs[i] β^i` in conductor `conductor`, reducing as needed.
    pub fn new(conductor: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidArgument("conductor must be positive".into()));
        }
        Ok(Self::from_parts(conductor, coeffs))
    }

    pub fn zero() -> Self {
        AlgReal { conductor: 1, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        AlgReal { conductor: 1, coeffs: poly::constant(q) }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The generator `2cos(π/N)`.
    pub fn two_cos_pi_over(n: u32) -> Result<Self> {
        Self::new(n, poly::from_ints(&[0, 1]))
    }

    /// `4cos²(π/n)`, the n-th value of the discrete index series.
    pub fn four_cos_sq(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("four_cos_sq needs n >= 3, got {n}")));
        }
        let b = Self::two_cos_pi_over(n)?;
        Ok(&b * &b)
    }

    /// `√m` for `m ∈ {2, 3, 5}` and perfect squares, expressed in a
    /// cyclotomic conductor.
    pub fn sqrt(m: u32) -> Result<Self> {
        let r = (m as f64).sqrt().round() as u32;
        if r * r == m {
            return Ok(Self::from_integer(i64::from(r)));
        }
        match m {
            2 => Self::two_cos_pi_over(4),
            3 => Self::two_cos_pi_over(6),
            5 => {
                // √5 = 2φ − 1 with φ = 2cos(π/5)
                let phi = Self::two_cos_pi_over(5)?;
                Ok(&(&phi + &phi) - &Self::one())
            }
            _ => Err(Error::InvalidArgument(format!("no cyclotomic square root for {m} is provided"))),
        }
    }

    /// The golden ratio `(1+√5)/2 = 2cos(π/5)`.
    pub fn golden_ratio() -> Self {
        Self::two_cos_pi_over(5).expect("conductor 5 is valid")
    }

    /// `U_j(β)` for `β = 2cos(π/N)`: the quantum integer
    /// `sin((j+1)π/N) / sin(π/N)`.
    pub fn quantum_integer(conductor: u32, j: u32) -> Result<Self> {
        let beta = Self::two_cos_pi_over(conductor)?;
        let mut prev = Self::zero();
        let mut cur = Self::one();
        for _ in 0..j {
            let next = &(&beta * &cur) - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        Ok(cur)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Canonical coefficients in powers of `2cos(π/conductor)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Re-expresses the value in conductor `target`, which must be a multiple
    /// of the current conductor.
    pub fn lift(&self, target: u32) -> Poly {
        if target == self.conductor || self.coeffs.len() <= 1 {
            return self.coeffs.clone();
        }
        let image = field::embedding_image(self.conductor, target);
        let f = field::field(target);
        poly::compose_mod(&self.coeffs, &image, &f.minpoly)
    }

    fn binary(&self, other: &Self, op: impl Fn(&[BigRational], &[BigRational], &Poly) -> Poly) -> Self {
        let n = field::lcm(self.conductor, other.conductor);
        let f = field::field(n);
        let a = self.lift(n);
        let b = other.lift(n);
        Self::from_parts(n, op(&a, &b, &f.minpoly))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let f = field::field(self.conductor);
        poly::invmod(&self.coeffs, &f.minpoly).map(|c| Self::from_parts(self.conductor, c))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// A rational interval of width at most `width` containing the value.
    pub fn approx(&self, width: &BigRational) -> Interval {
        assert!(width.is_positive(), "approximation width must be positive");
        if let Some(q) = self.to_rational() {
            return Interval::point(q);
        }
        let f = field::field(self.conductor);
        // |p'| ≤ Σ i|c_i| 2^{i-1} on [-2, 2]; slack factor for the interval
        let slope: BigRational = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.abs() * BigRational::from_integer(BigInt::from(i) * BigInt::from(3).pow(i as u32)))
            .fold(BigRational::one(), |a, b| a + b);
        let mut beta_width = width / slope;
        loop {
            let (lo, hi) = f.beta_interval(&beta_width);
            let out = Interval::new(lo, hi).eval_poly(&self.coeffs);
            if &out.width() <= width {
                return out;
            }
            beta_width /= BigRational::from_integer(BigInt::from(16));
        }
    }

    /// Floating-point value, accurate to about 1e-12 relative.
    pub fn to_f64(&self) -> f64 {
        if let Some(v) = self.to_f64_fast() {
            return v;
        }
        let w = BigRational::new(BigInt::one(), BigInt::from(1u64 << 60));
        self.approx(&w).midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Horner evaluation in f64, kept only when the rounding bound is small
    /// next to the result.
    fn to_f64_fast(&self) -> Option<f64> {
        let beta = field::field(self.conductor).beta_f64;
        let mut v = 0.0f64;
        let mut scale = 0.0f64;
        for c in self.coeffs.iter().rev() {
            let c = c.to_f64()?;
            v = v * beta + c;
            scale = scale * 2.0 + c.abs();
        }
        let err = scale * 1e-15 * (self.coeffs.len() as f64 + 1.0);
        (v.is_finite() && err <= 1e-13 * v.abs()).then_some(v)
    }

    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut width = BigRational::new(BigInt::one(), BigInt::from(1u32 << 10));
        loop {
            let iv = self.approx(&width);
            if iv.lo().is_positive() {
                return Ordering::Greater;
            }
            if iv.hi().is_negative() {
                return Ordering::Less;
            }
            width /= BigRational::from_integer(BigInt::from(1u64 << 32));
        }
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        let mut width = BigRational::new(BigInt::one(), BigInt::from(1u32 << 10));
        loop {
            let iv = self.approx(&width);
            let (a, b) = (iv.lo().floor(), iv.hi().floor());
            if a == b {
                return a.to_integer();
            }
            if self.is_rational() {
                return self.to_rational().unwrap().floor().to_integer();
            }
            width /= BigRational::from_integer(BigInt::from(1u64 << 32));
        }
    }

    /// Decimal rendering with `digits` fractional digits, truncated from a
    /// certified interval (round-half-up on the exact value).
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10).pow(digits);
        let scaled = self * &AlgReal::from_rational(BigRational::from_integer(scale.clone()));
        let half = AlgReal::from_ratio(1, 2);
        let n = (&scaled + &half).floor();
        let neg = n.is_negative();
        let n = n.abs();
        let int = &n / &scale;
        let frac = &n % &scale;
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push_str(&int.to_string());
        if digits > 0 {
            s.push('.');
            s.push_str(&format!("{:0>width$}", frac.to_string(), width = digits as usize));
        }
        s
    }
}

impl AlgReal {
    /// The order of two clearly separated values, from floats alone.
    fn float_order(&self, other: &Self) -> Option<Ordering> {
        let (x, y) = (self.to_f64(), other.to_f64());
        let gap = 1e-9 * (1.0 + x.abs() + y.abs());
        if !x.is_finite() || !y.is_finite() || (x - y).abs() <= gap {
            return None;
        }
        x.partial_cmp(&y)
    }
}

impl PartialEq for AlgReal {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        if self.float_order(other).is_some() {
            return false;
        }
        let n = field::lcm(self.conductor, other.conductor);
        self.lift(n) == other.lift(n)
    }
}

impl Eq for AlgReal {}

impl PartialOrd for AlgReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgReal {
    fn cmp(&self, other: &Self) -> Ordering {
        if let Some(o) = self.float_order(other) {
            return o;
        }
        if self == other {
            return Ordering::Equal;
        }
        (self - other).signum()
    }
}

impl<'a> Add<&'a AlgReal> for &'a AlgReal {
    type Output = AlgReal;
    fn add(self, rhs: &AlgReal) -> AlgReal {
        self.binary(rhs, |a, b, _| poly::add(a, b))
    }
}

impl<'a> Sub<&'a AlgReal> for &'a AlgReal {
    type Output = AlgReal;
    fn sub(self, rhs: &AlgReal) -> AlgReal {
        self.binary(rhs, |a, b, _| poly::sub(a, b))
    }
}

impl<'a> Mul<&'a AlgReal> for &'a AlgReal {
    type Output = AlgReal;
    fn mul(self, rhs: &AlgReal) -> AlgReal {
        self.binary(rhs, |a, b, m| poly::mulmod(a, b, m))
    }
}

impl Neg for &AlgReal {
    type Output = AlgReal;
    fn neg(self) -> AlgReal {
        AlgReal { conductor: self.conductor, coeffs: poly::neg(&self.coeffs) }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<AlgReal> for AlgReal {
            type Output = AlgReal;
            fn $m(self, rhs: AlgReal) -> AlgReal {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for AlgReal {
    fn sum<I: Iterator<Item = AlgReal>>(iter: I) -> AlgReal {
        iter.fold(AlgReal::zero(), |a, b| &a + &b)
    }
}

impl fmt::Debug for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgReal({self} ≈ {:.12})", self.to_f64())
    }
}

/// Prints the polynomial form, e.g. `1 + b10^2` for `β = 2cos(π/10)`.
impl fmt::Display for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => format!("b{}", self.conductor),
                _ => format!("b{}^{i}", self.conductor),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct AlgRealRepr {
    conductor: u32,
    coeffs: Vec<(serde_json::Value, serde_json::Value)>,
}

fn int_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

fn json_to_int(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => {
            n.as_i64().map(BigInt::from).ok_or_else(|| format!("non-integer coefficient {n}"))
        }
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        other => Err(format!("bad integer {other}")),
    }
}

impl Serialize for AlgReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgRealRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| (int_to_json(c.numer()), int_to_json(c.denom()))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = AlgRealRepr::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for (n, q) in &repr.coeffs {
            let n = json_to_int(n).map_err(D::Error::custom)?;
            let q = json_to_int(q).map_err(D::Error::custom)?;
            if q.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(n, q));
        }
        AlgReal::new(repr.conductor, coeffs).map_err(D::Error::custom)
    }
}
