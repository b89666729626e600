//! Exterior and symmetric powers of linear maps.
//!
//! Basis conventions: `Λ^k F^n` is indexed by ascending `k`-subsets of `0..n` in
//! lexicographic order; `S^k F^n` by non-decreasing `k`-sequences (monomials) in
//! lexicographic order.

use std::collections::BTreeMap;

use crate::field::Field;
use crate::linalg::Matrix;

/// Ascending `k`-subsets of `0..n`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Non-decreasing `k`-sequences over `0..n`, lexicographic.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl<F: Field> Matrix<F> {
    /// `Λ^k` of the map: entry `(I, J)` is the minor on rows `I`, columns `J`.
    pub fn exterior_power(&self, k: usize) -> Matrix<F> {
        let rs = subsets(self.rows(), k);
        let cs = subsets(self.cols(), k);
        let mut out = Matrix::zeros(rs.len(), cs.len());
        for (i, ri) in rs.iter().enumerate() {
            for (j, cj) in cs.iter().enumerate() {
                out[(i, j)] = self.submatrix(ri, cj).det().expect("square minor");
            }
        }
        out
    }

    /// `S^k` of the map on the monomial basis.
    pub fn symmetric_power(&self, k: usize) -> Matrix<F> {
        let rs = multisets(self.rows(), k);
        let cs = multisets(self.cols(), k);
        let index: BTreeMap<&[usize], usize> =
            rs.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let mut out = Matrix::zeros(rs.len(), cs.len());
        for (j, mono) in cs.iter().enumerate() {
            // Expand prod_t (sum_i m[i, mono_t] e_i) into row monomials.
            let mut acc: BTreeMap<Vec<usize>, F> = BTreeMap::new();
            acc.insert(Vec::new(), F::one());
            for &c in mono {
                let mut next: BTreeMap<Vec<usize>, F> = BTreeMap::new();
                for (m, coeff) in &acc {
                    for i in 0..self.rows() {
                        let a = &self[(i, c)];
                        if a.is_zero() {
                            continue;
                        }
                        let mut key = m.clone();
                        let pos = key.partition_point(|&x| x <= i);
                        key.insert(pos, i);
                        let e = next.entry(key).or_insert_with(F::zero);
                        *e = e.clone() + coeff.clone() * a.clone();
                    }
                }
                acc = next;
            }
            for (m, coeff) in acc {
                if !coeff.is_zero() {
                    out[(index[m.as_slice()], j)] = coeff;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type M = Matrix<Rational>;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(2, 3).len(), 0);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(multisets(0, 2).len(), 0);
        assert_eq!(multisets(0, 0).len(), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
    }

    #[test]
    fn exterior_square_of_three_by_two() {
        // minors on rows {0,1}: 1, {0,2}: 1, {1,2}: 0·1 − 1·1 = −1
        let m = M::from_ints(3, 2, &[1, 0, 0, 1, 1, 1]);
        assert_eq!(m.exterior_power(2), M::from_ints(3, 1, &[1, 1, -1]));
    }

    #[test]
    fn powers_of_identity() {
        assert_eq!(M::identity(2).symmetric_power(2), M::identity(3));
        for n in 0..5 {
            for k in 0..=n + 1 {
                assert_eq!(M::identity(n).exterior_power(k), M::identity(binomial(n, k)));
            }
        }
    }

    #[test]
    fn degree_zero_and_one() {
        let m = M::from_ints(2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(m.exterior_power(0), M::identity(1));
        assert_eq!(m.symmetric_power(0), M::identity(1));
        assert_eq!(m.exterior_power(1), m);
        assert_eq!(m.symmetric_power(1), m);
        assert_eq!(m.exterior_power(3).shape(), (0, 1));
    }

    #[test]
    fn symmetric_square_of_diagonal() {
        let d = M::from_ints(2, 2, &[2, 0, 0, 3]);
        // monomials e0e0, e0e1, e1e1 scale by 4, 6, 9
        assert_eq!(d.symmetric_power(2), M::from_ints(3, 3, &[4, 0, 0, 0, 6, 0, 0, 0, 9]));
    }
}
