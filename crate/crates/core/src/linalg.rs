//! Dense linear algebra over a coefficient field.

use crate::field::Field;

/// Row echelon form of `rows` in place; returns the pivot columns.
pub fn row_reduce<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = field.sub(x, &field.mul(&factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Dimension of the span of `vectors`, each of length `dim`.
pub fn rank<F: Field>(field: &F, vectors: &[Vec<F::Elem>], dim: usize) -> usize {
    let mut rows = vectors.to_vec();
    row_reduce(field, &mut rows, dim).len()
}

/// Basis of the kernel of the linear map whose columns are `columns`
/// (each of length `target_dim`); kernel vectors have length `columns.len()`.
pub fn kernel<F: Field>(field: &F, columns: &[Vec<F::Elem>], target_dim: usize) -> Vec<Vec<F::Elem>> {
    let n = columns.len();
    let mut rows: Vec<Vec<F::Elem>> =
        (0..target_dim).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let pivots = row_reduce(field, &mut rows, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = field.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

/// Apply a matrix given by columns to a vector.
pub fn apply<F: Field>(field: &F, columns: &[Vec<F::Elem>], target_dim: usize, v: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); target_dim];
    for (c, x) in columns.iter().zip(v) {
        if field.is_zero(x) {
            continue;
        }
        for (o, y) in out.iter_mut().zip(c) {
            *o = field.add(o, &field.mul(x, y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    #[test]
    fn kernel_of_rank_one_map() {
        let f = PrimeField::new(7).unwrap();
        let cols = vec![vec![1, 2], vec![2, 4], vec![0, 0]];
        let k = kernel(&f, &cols, 2);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&f, &cols, 2, v).iter().all(|x| *x == 0));
        }
        assert_eq!(rank(&f, &cols, 2), 1);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(0u32..5, 12)) {
            let f = PrimeField::new(5).unwrap();
            let cols: Vec<Vec<u32>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let k = kernel(&f, &cols, 3);
            prop_assert_eq!(k.len() + rank(&f, &cols, 3), cols.len());
            for v in &k {
                prop_assert!(apply(&f, &cols, 3, v).iter().all(|x| *x == 0));
            }
        }
    }
}
