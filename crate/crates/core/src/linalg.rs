//! Exact integer determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant by fraction-free Bareiss elimination. Every division is
/// exact, so no rationals are ever formed.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn from_i64(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(rows: &[Vec<i64>]) -> i64 {
        determinant(from_i64(rows)).try_into().unwrap()
    }

    fn cofactor(rows: &[Vec<i64>]) -> i64 {
        let n = rows.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * rows[0][j] * cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(det(&[]), 1);
        assert_eq!(det(&[vec![7]]), 7);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]), 4);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn needs_pivot_midway() {
        let m = vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 3]];
        assert_eq!(det(&m), cofactor(&m));
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(n in 1usize..6, seed in proptest::collection::vec(-4i64..5, 36)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 6 + j]).collect()).collect();
            proptest::prop_assert_eq!(det(&m), cofactor(&m));
        }
    }
}
