//! Exact rank via fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of a rational matrix. Rows are cleared to integers first; the
/// elimination then divides by the previous pivot, which Sylvester's
/// identity keeps exact.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let cleared: Vec<Vec<BigInt>> = rows.iter().map(|row| clear_denominators(row)).collect();
    rank_bigint(cleared)
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for entry in row {
        lcm = lcm.lcm(entry.denom());
    }
    row.iter()
        .map(|entry| entry.numer() * (&lcm / entry.denom()))
        .collect()
}

pub fn rank_bigint(mut mat: Vec<Vec<BigInt>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        mat.swap(rank, pivot_row);
        let pivot = mat[rank][col].clone();
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let value = &mat[r][c] * &pivot - &mat[r][col] * &mat[rank][c];
                let (quotient, remainder) = value.div_rem(&prev_pivot);
                assert!(remainder.is_zero(), "Bareiss division must be exact");
                mat[r][c] = quotient;
            }
            mat[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        col += 1;
    }
    rank
}
