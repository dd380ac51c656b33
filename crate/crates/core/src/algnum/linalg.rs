//! Gaussian elimination over the exact field.

use super::AlgReal;

/// Solves the square system `m · x = rhs`; `None` when `m` is singular.
pub fn solve(mut m: Vec<Vec<AlgReal>>, mut rhs: Vec<AlgReal>) -> Option<Vec<AlgReal>> {
    let n = rhs.len();
    assert!(m.len() == n && m.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].inv()?;
        for c in col..n {
            m[col][c] = &m[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..n {
                let t = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &t;
            }
            let t = &factor * &rhs[col];
            rhs[r] = &rhs[r] - &t;
        }
    }
    Some(rhs)
}

/// A basis vector of the one-dimensional kernel of `m`, scaled so that
/// coordinate `normalize_at` is 1. `None` if the kernel is not a line or that
/// coordinate vanishes on it.
pub fn kernel_line(mut m: Vec<Vec<AlgReal>>, normalize_at: usize) -> Option<Vec<AlgReal>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].inv()?;
        for c in col..cols {
            m[r][c] = &m[r][c] * &inv;
        }
        for i in 0..rows {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].clone();
            for c in col..cols {
                let t = &factor * &m[r][c];
                m[i][c] = &m[i][c] - &t;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    if pivots.len() + 1 != cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![AlgReal::zero(); cols];
    v[free] = AlgReal::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -&m[row][free];
    }
    let scale = v[normalize_at].inv()?;
    Some(v.iter().map(|x| x * &scale).collect())
}
