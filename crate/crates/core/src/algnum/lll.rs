//! LLL reduction over exact rationals and integer-relation detection.

use num::{BigInt, BigRational, One, Signed, Zero};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn round(q: &BigRational) -> BigInt {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    (q + half).floor().to_integer()
}

/// LLL-reduces linearly independent integer rows with δ = 3/4.
pub fn lll_reduce(mut b: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = b.len();
    if n < 2 {
        return b;
    }
    let zero = BigRational::zero();
    let mut mu = vec![vec![zero.clone(); n]; n];
    let mut bb = vec![zero; n];
    bb[0] = BigRational::from_integer(dot(&b[0], &b[0]));
    let (mut k, mut kmax) = (1usize, 0usize);
    let three_quarters = BigRational::new(BigInt::from(3), BigInt::from(4));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));

    let reduce = |b: &mut Vec<Vec<BigInt>>, mu: &mut Vec<Vec<BigRational>>, k: usize, l: usize| {
        if mu[k][l].abs() > half {
            let q = round(&mu[k][l]);
            let row_l = b[l].clone();
            for (x, y) in b[k].iter_mut().zip(&row_l) {
                *x -= &q * y;
            }
            let qr = BigRational::from_integer(q);
            mu[k][l] -= &qr;
            for i in 0..l {
                let t = &qr * &mu[l][i];
                mu[k][i] -= t;
            }
        }
    };

    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..k {
                let mut s = BigRational::from_integer(dot(&b[k], &b[j]));
                for i in 0..j {
                    s -= &mu[j][i] * &mu[k][i] * &bb[i];
                }
                mu[k][j] = s / &bb[j];
            }
            let mut s = BigRational::from_integer(dot(&b[k], &b[k]));
            for j in 0..k {
                s -= &mu[k][j] * &mu[k][j] * &bb[j];
            }
            bb[k] = s;
        }
        reduce(&mut b, &mut mu, k, k - 1);
        let lovasz = (&three_quarters - &mu[k][k - 1] * &mu[k][k - 1]) * &bb[k - 1];
        if bb[k] < lovasz {
            b.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = mu[k][j].clone();
                mu[k][j] = std::mem::replace(&mut mu[k - 1][j], t);
            }
            let m = mu[k][k - 1].clone();
            let new_b = &bb[k] + &m * &m * &bb[k - 1];
            mu[k][k - 1] = &m * &bb[k - 1] / &new_b;
            bb[k] = &bb[k - 1] * &bb[k] / &new_b;
            bb[k - 1] = new_b;
            for i in k + 1..=kmax {
                let t = mu[i][k].clone();
                mu[i][k] = &mu[i][k - 1] - &m * &t;
                mu[i][k - 1] = t + &mu[k][k - 1] * &mu[i][k];
            }
            k = (k - 1).max(1);
        } else {
            for l in (0..k - 1).rev() {
                reduce(&mut b, &mut mu, k, l);
            }
            k += 1;
        }
    }
    b
}

/// Short integer vectors `c` with `Σ c_i x_i ≈ 0`, given the `x_i` to
/// absolute precision well below `2^-bits`. Candidates come back shortest
/// first; callers must verify them exactly.
pub fn integer_relations(x: &[BigRational], bits: u32) -> Vec<Vec<BigInt>> {
    let n = x.len();
    let scale = BigRational::from_integer(BigInt::one() << bits);
    let rows = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n + 1];
            row[i] = BigInt::one();
            row[n] = round(&(&x[i] * &scale));
            row
        })
        .collect();
    lll_reduce(rows)
        .into_iter()
        .map(|mut row| {
            row.pop();
            row
        })
        .filter(|row| row.iter().any(|c| !c.is_zero()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(f: f64) -> BigRational {
        BigRational::from_float(f).unwrap()
    }

    #[test]
    fn finds_golden_ratio_relation() {
        // φ² - φ - 1 = 0
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let rels = integer_relations(&[ratio(phi * phi), ratio(phi), ratio(1.0)], 40);
        let r = &rels[0];
        let sign = if r[0].is_negative() { -1 } else { 1 };
        let r: Vec<i64> = r.iter().map(|c| sign * i64::try_from(c).unwrap()).collect();
        assert_eq!(r, vec![1, -1, -1]);
    }

    #[test]
    fn reduction_keeps_the_lattice() {
        let b: Vec<Vec<BigInt>> =
            [[1, 1, 1], [-1, 0, 2], [3, 5, 6]].iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let red = lll_reduce(b);
        // The determinant of the original basis is 3 up to sign.
        let det = |m: &Vec<Vec<BigInt>>| {
            &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
        };
        assert_eq!(det(&red).abs(), BigInt::from(3));
        for row in &red {
            assert!(dot(row, row) <= BigInt::from(6));
        }
    }
}
