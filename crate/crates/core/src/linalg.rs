//! Dense linear algebra over a [`Field`], on row-major `Vec<Vec<u32>>`.

use crate::gf::Field;

/// Determinant by Gaussian elimination.
pub fn determinant(field: &Field, mut m: Vec<Vec<u32>>) -> u32 {
    let n = m.len();
    let mut det = 1;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = field.neg(det);
        }
        let pv = m[col][col];
        det = field.mul(det, pv);
        let inv = field.inv(pv).unwrap();
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let factor = field.mul(m[r][col], inv);
            for c in col..n {
                let t = field.mul(factor, m[col][c]);
                m[r][c] = field.sub(m[r][c], t);
            }
        }
    }
    det
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(field: &Field, m: &mut [Vec<u32>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(p, row);
        let inv = field.inv(m[row][col]).unwrap();
        for c in 0..cols {
            m[row][c] = field.mul(m[row][c], inv);
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..cols {
                    let t = field.mul(factor, m[row][c]);
                    m[r][c] = field.sub(m[r][c], t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of `{x : M x = 0}` for an `r × cols` matrix `M`.
pub fn nullspace(field: &Field, rows: &[Vec<u32>], cols: usize) -> Vec<Vec<u32>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![0u32; cols];
            x[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = field.neg(m[r][fc]);
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_examples() {
        let f = Field::prime(5).unwrap();
        assert_eq!(determinant(&f, vec![vec![1, 2], vec![3, 4]]), f.from_int(-2));
        assert_eq!(determinant(&f, vec![vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(determinant(&f, vec![vec![0, 1], vec![1, 0]]), 4);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = Field::prime(7).unwrap();
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&f, &m, 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for row in &m {
                let dot = row.iter().zip(x).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }
}
