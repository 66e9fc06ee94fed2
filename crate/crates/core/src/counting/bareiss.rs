use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

fn eliminate(mut m: Vec<Vec<BigInt>>, checked: bool) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != k {
            m.swap(pivot, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = if checked {
                    let (q, r) = num.div_rem(&prev);
                    assert!(r.is_zero(), "Bareiss division left a remainder");
                    q
                } else {
                    num / &prev
                };
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m.last().map_or_else(BigInt::one, |row| row[n - 1].clone());
    if sign {
        -det
    } else {
        det
    }
}

/// Determinant by fraction-free Gaussian elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    eliminate(m.to_vec(), false)
}

/// Same as [`determinant`], panicking if any intermediate division is inexact.
pub fn determinant_checked(m: &[Vec<BigInt>]) -> BigInt {
    eliminate(m.to_vec(), true)
}
