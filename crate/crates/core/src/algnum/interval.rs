use num::{BigInt, BigRational, Signed, Zero};

/// A closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn add_scalar(&self, c: &BigRational) -> Interval {
        Interval::new(&self.lo + c, &self.hi + c)
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    /// Horner evaluation of a rational polynomial over the interval.
    pub fn eval_poly(&self, coeffs: &[BigRational]) -> Interval {
        let mut acc = Interval::point(BigRational::zero());
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).add_scalar(c);
        }
        acc
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn horner_encloses_values() {
        let iv = Interval::new(q(-1), q(2));
        // x^2 - 1 over [-1, 2] is within [-3, 3] by naive Horner
        let out = iv.eval_poly(&[q(-1), q(0), q(1)]);
        assert!(out.contains(&q(-1)) && out.contains(&q(3)));
    }
}
