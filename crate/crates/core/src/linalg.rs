//! Small exact linear algebra over the integers.
//!
//! Ranks, span membership and base-coefficient solves all run on `i128`
//! fraction-free elimination. Dimensions are at most nine and entries stay
//! tiny, so there is no overflow concern.

use crate::vector::ExactVector;

/// Row-echelon span of a set of integer vectors, kept fraction-free.
pub struct IntSpan {
    rows: Vec<Vec<i128>>,
    dim: usize,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn normalize(row: &mut [i128]) {
    let mut g = 0;
    for &c in row.iter() {
        g = gcd(g, c);
    }
    if g > 1 {
        for c in row.iter_mut() {
            *c /= g;
        }
    }
    // fix the sign of the leading entry
    if let Some(&lead) = row.iter().find(|&&c| c != 0) {
        if lead < 0 {
            for c in row.iter_mut() {
                *c = -*c;
            }
        }
    }
}

impl IntSpan {
    pub fn new(dim: usize) -> Self {
        IntSpan { rows: Vec::new(), dim }
    }

    pub fn from_vectors<'a>(dim: usize, vs: impl IntoIterator<Item = &'a ExactVector>) -> Self {
        let mut span = IntSpan::new(dim);
        for v in vs {
            span.insert(v);
        }
        span
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the echelon rows; the remainder is zero exactly
    /// when `v` lies in the rational span.
    fn reduce(&self, v: &ExactVector) -> Vec<i128> {
        let mut r: Vec<i128> = v.doubled().iter().map(|&c| c as i128).collect();
        for row in &self.rows {
            let lead = row.iter().position(|&c| c != 0).unwrap();
            if r[lead] != 0 {
                let (a, b) = (row[lead], r[lead]);
                let g = gcd(a, b);
                let (ma, mb) = (a / g, b / g);
                for i in 0..self.dim {
                    r[i] = r[i] * ma - row[i] * mb;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &ExactVector) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Adds `v` to the span; returns true if the rank grew.
    pub fn insert(&mut self, v: &ExactVector) -> bool {
        let mut r = self.reduce(v);
        if r.iter().all(|&c| c == 0) {
            return false;
        }
        normalize(&mut r);
        self.rows.push(r);
        // keep rows ordered by leading position so reduce() stays triangular
        self.rows
            .sort_by_key(|row| row.iter().position(|&c| c != 0).unwrap());
        true
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(mat: &[Vec<i128>]) -> i128 {
    let n = mat.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = mat.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let swap = (k + 1..n).find(|&i| m[i][k] != 0);
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Solves `g * x = b` by Cramer's rule, requiring an integral solution.
///
/// Returns `None` if `g` is singular; panics if the exact solution is not
/// integral (never the case for root coordinates over a base).
pub fn solve_integral(g: &[Vec<i128>], b: &[i128]) -> Option<Vec<i64>> {
    let n = g.len();
    let d = det(g);
    if d == 0 {
        return None;
    }
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut gj = g.to_vec();
        for (row, &bi) in gj.iter_mut().zip(b) {
            row[j] = bi;
        }
        let dj = det(&gj);
        assert_eq!(dj % d, 0, "non-integral solution in base expansion");
        out.push((dj / d) as i64);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_rank_and_membership() {
        let a = ExactVector::from_ints(&[1, -1, 0]);
        let b = ExactVector::from_ints(&[0, 1, -1]);
        let c = ExactVector::from_ints(&[1, 0, -1]);
        let d = ExactVector::from_ints(&[1, 1, 1]);
        let span = IntSpan::from_vectors(3, [&a, &b]);
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&c));
        assert!(!span.contains(&d));
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn cramer_integral() {
        let g = vec![vec![2, -1], vec![-1, 2]];
        let x = solve_integral(&g, &[1, 1]).unwrap();
        assert_eq!(x, vec![1, 1]);
    }
}
