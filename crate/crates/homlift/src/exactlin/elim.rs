//! Gaussian elimination with one deterministic pivot rule: columns are
//! scanned left to right and, within a column, rows top to bottom; the first
//! nonzero entry becomes the pivot. Over `F_2` rows are bit-packed.
//!
//! Inconsistent systems can report a Farkas row `y` with `y^T A = 0` and
//! `y^T b != 0`, an exact nonexistence witness that certificates embed.

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::Error;

/// Result of solving `A x = b`.
pub enum AffineOutcome {
    /// One solution (free variables set to zero) plus a kernel basis, the
    /// columns of `kernel`.
    Solution { x: Matrix, kernel: Matrix },
    /// No solution; `farkas` is a 1 x rows certificate of inconsistency.
    Inconsistent { farkas: Matrix },
}

/// Rank over the matrix's field.
pub fn rank(m: &Matrix) -> usize {
    match to_packed(m) {
        Some(mut rows) => packed_rref(&mut rows, m.cols(), m.cols()).len(),
        None => {
            let mut rows = to_dense_rows(m);
            dense_rref(m.field(), &mut rows, m.cols()).len()
        }
    }
}

/// Basis of `ker m` as the columns of an `m.cols() x k` matrix.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let sys = LinSystem::from_matrix(m, None, false);
    match sys.solve(true) {
        SysOutcome::Solution { kernel, .. } => columns_to_matrix(m.field(), m.cols(), &kernel),
        SysOutcome::Inconsistent { .. } => unreachable!("homogeneous system"),
    }
}

/// Basis of the column space: the original columns at the pivot positions of
/// the row-reduced matrix.
pub fn image_basis(m: &Matrix) -> Matrix {
    let pivots = match to_packed(m) {
        Some(mut rows) => packed_rref(&mut rows, m.cols(), m.cols()),
        None => {
            let mut rows = to_dense_rows(m);
            dense_rref(m.field(), &mut rows, m.cols())
        }
    };
    let cols: Vec<Matrix> = pivots.iter().map(|&j| m.col(j)).collect();
    if cols.is_empty() {
        Matrix::zeros(m.field(), m.rows(), 0)
    } else {
        let refs: Vec<&Matrix> = cols.iter().collect();
        Matrix::hstack(m.field(), &refs)
    }
}

/// Solves `A x = b` for a single column `b`.
pub fn solve_affine(a: &Matrix, b: &Matrix) -> Result<AffineOutcome, Error> {
    if b.rows() != a.rows() || b.cols() != 1 {
        return Err(Error::invalid(format!(
            "solve_affine: A is {}x{}, b is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.field() != b.field() {
        return Err(Error::invalid("solve_affine: field mismatch"));
    }
    let sys = LinSystem::from_matrix(a, Some(b), true);
    match sys.solve(true) {
        SysOutcome::Solution { x, kernel, .. } => Ok(AffineOutcome::Solution {
            x: columns_to_matrix(a.field(), a.cols(), &[x]),
            kernel: columns_to_matrix(a.field(), a.cols(), &kernel),
        }),
        SysOutcome::Inconsistent { farkas } => {
            let y = farkas.expect("farkas tracking was requested");
            Ok(AffineOutcome::Inconsistent {
                farkas: Matrix::new(a.field(), 1, a.rows(), y),
            })
        }
    }
}

/// Solves `A X = B` columnwise in one reduction; `None` if any column is
/// inconsistent. Free variables are zero.
pub fn solve_matrix(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(a.rows(), b.rows(), "solve_matrix: row mismatch");
    assert_eq!(a.field(), b.field(), "solve_matrix: field mismatch");
    let field = a.field();
    let n = a.cols();
    let k = b.cols();
    // Reduce [A | B] eliminating only on the A columns.
    let width = n;
    let total = n + k;
    let stacked = Matrix::hstack(field, &[a, b]);
    let (pivots, rows_dense, rows_packed) = match to_packed(&stacked) {
        Some(mut rows) => {
            let p = packed_rref(&mut rows, width, total);
            (p, None, Some(rows))
        }
        None => {
            let mut rows = to_dense_rows(&stacked);
            let p = dense_rref(field, &mut rows, width);
            (p, Some(rows), None)
        }
    };
    let rank = pivots.len();
    let nrows = a.rows();
    let entry = |r: usize, c: usize| -> Scalar {
        if let Some(rows) = &rows_packed {
            if get_bit(&rows[r], c) {
                field.one()
            } else {
                field.zero()
            }
        } else {
            rows_dense.as_ref().unwrap()[r][c].clone()
        }
    };
    // Consistency: below the pivot rows the A-part is zero, so any nonzero
    // B-part entry there is an inconsistency.
    for r in rank..nrows {
        for c in n..total {
            if !field.is_zero(&entry(r, c)) {
                return None;
            }
        }
    }
    let mut x = Matrix::zeros(field, n, k);
    for (r, &pc) in pivots.iter().enumerate() {
        for j in 0..k {
            x.set(pc, j, entry(r, n + j));
        }
    }
    Some(x)
}

/// Projection/section pair presenting the quotient of `k^ambient` by the
/// column span of `gens`: `projection * section = id` on the quotient and
/// `projection * gens = 0`.
pub fn quotient_basis(ambient: usize, gens: &Matrix) -> Result<(Matrix, Matrix), Error> {
    if gens.rows() != ambient {
        return Err(Error::invalid(format!(
            "quotient_basis: generators live in dimension {}, ambient is {ambient}",
            gens.rows()
        )));
    }
    let field = gens.field();
    // Row-reduce the generators written as rows.
    let t = gens.transpose();
    let (pivots, rows_dense, rows_packed) = match to_packed(&t) {
        Some(mut rows) => {
            let p = packed_rref(&mut rows, ambient, ambient);
            (p, None, Some(rows))
        }
        None => {
            let mut rows = to_dense_rows(&t);
            let p = dense_rref(field, &mut rows, ambient);
            (p, Some(rows), None)
        }
    };
    let entry = |r: usize, c: usize| -> Scalar {
        if let Some(rows) = &rows_packed {
            if get_bit(&rows[r], c) {
                field.one()
            } else {
                field.zero()
            }
        } else {
            rows_dense.as_ref().unwrap()[r][c].clone()
        }
    };
    let is_pivot = {
        let mut flags = vec![false; ambient];
        for &c in &pivots {
            flags[c] = true;
        }
        flags
    };
    let free: Vec<usize> = (0..ambient).filter(|c| !is_pivot[*c]).collect();
    let q = free.len();
    let mut projection = Matrix::zeros(field, q, ambient);
    let mut section = Matrix::zeros(field, ambient, q);
    for (t_idx, &c) in free.iter().enumerate() {
        projection.set(t_idx, c, field.one());
        section.set(c, t_idx, field.one());
    }
    // A reduced row e_{j_s} + sum_c R[s,c] e_c says e_{j_s} = -sum R[s,c] e_c
    // in the quotient.
    for (s, &js) in pivots.iter().enumerate() {
        for (t_idx, &c) in free.iter().enumerate() {
            projection.set(t_idx, js, field.neg(&entry(s, c)));
        }
    }
    Ok((projection, section))
}

fn columns_to_matrix(field: Field, n: usize, cols: &[Vec<Scalar>]) -> Matrix {
    Matrix::from_fn(field, n, cols.len(), |i, j| cols[j][i].clone())
}

// ---------------------------------------------------------------------------
// Shared system representation for the solver pipeline.
// ---------------------------------------------------------------------------

/// One scalar equation `sum coeff * x_col = rhs`.
pub(crate) struct SparseRow {
    pub cols: Vec<(usize, Scalar)>,
    pub rhs: Scalar,
}

/// An affine system ready for elimination, packed when the field is `F_2`.
pub(crate) enum LinSystem {
    Packed {
        ncols: usize,
        nrows: usize,
        words: usize,
        rows: Vec<Vec<u64>>,
        track: bool,
    },
    Dense {
        field: Field,
        ncols: usize,
        nrows: usize,
        rows: Vec<Vec<Scalar>>,
        track: bool,
    },
}

pub(crate) enum SysOutcome {
    Solution {
        x: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
    Inconsistent {
        farkas: Option<Vec<Scalar>>,
    },
}

impl LinSystem {
    pub fn new(field: Field, ncols: usize, rows: Vec<SparseRow>, track_farkas: bool) -> LinSystem {
        let nrows = rows.len();
        if field == Field::Prime(2) {
            let track_bits = if track_farkas { nrows } else { 0 };
            let total_bits = ncols + 1 + track_bits;
            let words = total_bits.div_ceil(64);
            let mut packed = vec![vec![0u64; words]; nrows];
            for (r, row) in rows.iter().enumerate() {
                for (c, v) in &row.cols {
                    if !field.is_zero(v) {
                        flip_bit(&mut packed[r], *c);
                    }
                }
                if !field.is_zero(&row.rhs) {
                    flip_bit(&mut packed[r], ncols);
                }
                if track_farkas {
                    flip_bit(&mut packed[r], ncols + 1 + r);
                }
            }
            LinSystem::Packed { ncols, nrows, words, rows: packed, track: track_farkas }
        } else {
            let track_cols = if track_farkas { nrows } else { 0 };
            let width = ncols + 1 + track_cols;
            let mut dense = vec![vec![field.zero(); width]; nrows];
            for (r, row) in rows.iter().enumerate() {
                for (c, v) in &row.cols {
                    dense[r][*c] = field.add(&dense[r][*c], v);
                }
                dense[r][ncols] = row.rhs.clone();
                if track_farkas {
                    dense[r][ncols + 1 + r] = field.one();
                }
            }
            LinSystem::Dense { field, ncols, nrows, rows: dense, track: track_farkas }
        }
    }

    fn from_matrix(a: &Matrix, b: Option<&Matrix>, track: bool) -> LinSystem {
        let field = a.field();
        let rows = (0..a.rows())
            .map(|i| {
                let cols = (0..a.cols())
                    .filter_map(|j| {
                        let v = a.get(i, j);
                        if field.is_zero(v) {
                            None
                        } else {
                            Some((j, v.clone()))
                        }
                    })
                    .collect();
                let rhs = b.map_or_else(|| field.zero(), |bb| bb.get(i, 0).clone());
                SparseRow { cols, rhs }
            })
            .collect();
        LinSystem::new(field, a.cols(), rows, track)
    }

    /// Runs elimination. The canonical solution sets free variables to zero;
    /// `want_kernel` additionally extracts a kernel basis of the coefficient
    /// matrix.
    pub fn solve(self, want_kernel: bool) -> SysOutcome {
        match self {
            LinSystem::Packed { ncols, nrows, words, mut rows, track } => {
                let total_bits = ncols + 1 + if track { nrows } else { 0 };
                debug_assert_eq!(words, total_bits.div_ceil(64));
                let pivots = packed_rref(&mut rows, ncols, total_bits);
                let rank = pivots.len();
                let f2 = Field::f2();
                for r in rank..nrows {
                    if get_bit(&rows[r], ncols) {
                        let farkas = track.then(|| {
                            (0..nrows)
                                .map(|i| {
                                    if get_bit(&rows[r], ncols + 1 + i) {
                                        f2.one()
                                    } else {
                                        f2.zero()
                                    }
                                })
                                .collect()
                        });
                        return SysOutcome::Inconsistent { farkas };
                    }
                }
                let mut x = vec![f2.zero(); ncols];
                for (r, &c) in pivots.iter().enumerate() {
                    if get_bit(&rows[r], ncols) {
                        x[c] = f2.one();
                    }
                }
                let mut kernel = Vec::new();
                if want_kernel {
                    let mut is_pivot = vec![false; ncols];
                    for &c in &pivots {
                        is_pivot[c] = true;
                    }
                    for fc in (0..ncols).filter(|c| !is_pivot[*c]) {
                        let mut v = vec![f2.zero(); ncols];
                        v[fc] = f2.one();
                        for (r, &c) in pivots.iter().enumerate() {
                            if get_bit(&rows[r], fc) {
                                v[c] = f2.one();
                            }
                        }
                        kernel.push(v);
                    }
                }
                SysOutcome::Solution { x, kernel }
            }
            LinSystem::Dense { field, ncols, nrows, mut rows, track } => {
                let pivots = dense_rref(field, &mut rows, ncols);
                let rank = pivots.len();
                for r in rank..nrows {
                    if !field.is_zero(&rows[r][ncols]) {
                        let farkas = track
                            .then(|| (0..nrows).map(|i| rows[r][ncols + 1 + i].clone()).collect());
                        return SysOutcome::Inconsistent { farkas };
                    }
                }
                let mut x = vec![field.zero(); ncols];
                for (r, &c) in pivots.iter().enumerate() {
                    x[c] = rows[r][ncols].clone();
                }
                let mut kernel = Vec::new();
                if want_kernel {
                    let mut is_pivot = vec![false; ncols];
                    for &c in &pivots {
                        is_pivot[c] = true;
                    }
                    for fc in (0..ncols).filter(|c| !is_pivot[*c]) {
                        let mut v = vec![field.zero(); ncols];
                        v[fc] = field.one();
                        for (r, &c) in pivots.iter().enumerate() {
                            v[c] = field.neg(&rows[r][fc]);
                        }
                        kernel.push(v);
                    }
                }
                SysOutcome::Solution { x, kernel }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Elimination kernels.
// ---------------------------------------------------------------------------

/// Reduced row echelon form in place, eliminating only on columns `< width`
/// (trailing columns carry the right-hand side and tracking data). Returns
/// the pivot columns in order.
fn dense_rref(field: Field, rows: &mut [Vec<Scalar>], width: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(pr) = (next..nrows).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(next, pr);
        let inv = field.inv(&rows[next][col]).expect("pivot is nonzero");
        for v in rows[next].iter_mut() {
            *v = field.mul(&inv, v);
        }
        for r in 0..nrows {
            if r != next && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                let (head, tail) = if r < next {
                    let (a, b) = rows.split_at_mut(next);
                    (&mut a[r], &b[0])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&mut b[0], &a[next])
                };
                for (dst, src) in head.iter_mut().zip(tail.iter()) {
                    if !field.is_zero(src) {
                        *dst = field.sub(dst, &field.mul(&factor, src));
                    }
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == nrows {
            break;
        }
    }
    pivots
}

/// Packed `F_2` variant; rows are bit vectors of `total_bits` bits.
fn packed_rref(rows: &mut [Vec<u64>], width: usize, total_bits: usize) -> Vec<usize> {
    let _ = total_bits;
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(pr) = (next..nrows).find(|&r| get_bit(&rows[r], col)) else {
            continue;
        };
        rows.swap(next, pr);
        for r in 0..nrows {
            if r != next && get_bit(&rows[r], col) {
                let (dst, src) = if r < next {
                    let (a, b) = rows.split_at_mut(next);
                    (&mut a[r], &b[0])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&mut b[0], &a[next])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d ^= *s;
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == nrows {
            break;
        }
    }
    pivots
}

fn to_dense_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect()
}

fn to_packed(m: &Matrix) -> Option<Vec<Vec<u64>>> {
    if m.field() != Field::Prime(2) {
        return None;
    }
    let words = m.cols().max(1).div_ceil(64);
    let mut rows = vec![vec![0u64; words]; m.rows()];
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.field().is_zero(m.get(i, j)) {
                flip_bit(&mut rows[i], j);
            }
        }
    }
    Some(rows)
}

fn get_bit(row: &[u64], bit: usize) -> bool {
    row[bit / 64] >> (bit % 64) & 1 == 1
}

fn flip_bit(row: &mut [u64], bit: usize) {
    row[bit / 64] ^= 1 << (bit % 64);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let f2 = Field::f2();
        assert_eq!(rank(&Matrix::zeros(f2, 0, 0)), 0);
        assert_eq!(rank(&Matrix::identity(f2, 2)), 2);
        // Both rows equal: reduces to rank 1.
        let m = Matrix::from_i64s(f2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(rank(&m), 1);
        let q = Matrix::from_i64s(Field::Rational, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&q), 1);
    }

    #[test]
    fn solve_identity() {
        let f = Field::prime(7).unwrap();
        let a = Matrix::identity(f, 3);
        let b = Matrix::from_i64s(f, &[vec![1], vec![5], vec![6]]);
        match solve_affine(&a, &b).unwrap() {
            AffineOutcome::Solution { x, kernel } => {
                assert_eq!(x, b);
                assert_eq!(kernel.cols(), 0);
            }
            AffineOutcome::Inconsistent { .. } => panic!("identity system is consistent"),
        }
    }

    #[test]
    fn solve_inconsistent_zero_row() {
        let f2 = Field::f2();
        let a = Matrix::zeros(f2, 1, 1);
        let b = Matrix::from_i64s(f2, &[vec![1]]);
        match solve_affine(&a, &b).unwrap() {
            AffineOutcome::Inconsistent { farkas } => {
                // y^T A = 0 and y^T b != 0.
                assert!(farkas.mul(&a).is_zero());
                assert!(!farkas.mul(&b).is_zero());
            }
            AffineOutcome::Solution { .. } => panic!("0*x = 1 has no solution"),
        }
    }

    #[test]
    fn solve_underdetermined_f2() {
        // One equation x0 + x1 = 0 over F_2: canonical solution is zero, the
        // kernel is spanned by (1, 1). Checked against enumerating all four
        // candidate vectors.
        let f2 = Field::f2();
        let a = Matrix::from_i64s(f2, &[vec![1, 1]]);
        let b = Matrix::zeros(f2, 1, 1);
        match solve_affine(&a, &b).unwrap() {
            AffineOutcome::Solution { x, kernel } => {
                assert!(x.is_zero());
                assert_eq!(kernel, Matrix::from_i64s(f2, &[vec![1], vec![1]]));
            }
            AffineOutcome::Inconsistent { .. } => panic!("homogeneous"),
        }
    }

    #[test]
    fn kernel_and_image() {
        let f2 = Field::f2();
        assert_eq!(kernel_basis(&Matrix::identity(f2, 3)).cols(), 0);
        assert_eq!(image_basis(&Matrix::zeros(f2, 3, 2)).cols(), 0);
        let m = Matrix::from_i64s(f2, &[vec![1, 1, 0], vec![0, 0, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        assert_eq!(rank(&m) + k.cols(), m.cols());
    }

    #[test]
    fn quotient_of_plane_by_diagonal() {
        let f2 = Field::f2();
        let gens = Matrix::from_i64s(f2, &[vec![1], vec![1]]);
        let (proj, sect) = quotient_basis(2, &gens).unwrap();
        assert_eq!(proj.rows(), 1);
        assert_eq!(proj.mul(&sect), Matrix::identity(f2, 1));
        assert!(proj.mul(&gens).is_zero());
    }

    #[test]
    fn quotient_by_nothing_is_identity() {
        let f = Field::Rational;
        let gens = Matrix::zeros(f, 3, 0);
        let (proj, sect) = quotient_basis(3, &gens).unwrap();
        assert_eq!(proj, Matrix::identity(f, 3));
        assert_eq!(sect, Matrix::identity(f, 3));
    }

    #[test]
    fn solve_matrix_batch() {
        let f = Field::Rational;
        let a = Matrix::from_i64s(f, &[vec![2, 0], vec![0, 4]]);
        let b = Matrix::from_i64s(f, &[vec![1, 0], vec![0, 1]]);
        let x = solve_matrix(&a, &b).unwrap();
        assert_eq!(a.mul(&x), b);
        assert_eq!(x.get(0, 0), &Scalar::rational(1, 2));
        let bad = solve_matrix(&Matrix::zeros(f, 2, 2), &b);
        assert!(bad.is_none());
    }

    #[test]
    fn farkas_over_q() {
        let f = Field::Rational;
        let a = Matrix::from_i64s(f, &[vec![1, 1], vec![2, 2]]);
        let b = Matrix::from_i64s(f, &[vec![1], vec![3]]);
        match solve_affine(&a, &b).unwrap() {
            AffineOutcome::Inconsistent { farkas } => {
                assert!(farkas.mul(&a).is_zero());
                assert!(!farkas.mul(&b).is_zero());
            }
            AffineOutcome::Solution { .. } => panic!("inconsistent by scaling"),
        }
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn any_field() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::f2()),
            Just(Field::Prime(5)),
            Just(Field::Rational),
        ]
    }

    fn matrix_with(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |vals| {
            Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(vals[i * cols + j]))
        })
    }

    fn any_matrix() -> impl Strategy<Value = Matrix> {
        (any_field(), 0usize..4, 0usize..4)
            .prop_flat_map(|(f, r, c)| matrix_with(f, r, c))
    }

    proptest! {
        #[test]
        fn rank_nullity(m in any_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.cols(), m.cols());
            prop_assert!(m.mul(&k).is_zero());
        }

        #[test]
        fn planted_systems_solve_exactly(
            (a, x0) in (any_field(), 1usize..4, 1usize..4).prop_flat_map(|(f, r, c)| {
                (matrix_with(f, r, c), matrix_with(f, c, 1))
            })
        ) {
            let b = a.mul(&x0);
            match solve_affine(&a, &b).unwrap() {
                AffineOutcome::Solution { x, kernel } => {
                    prop_assert_eq!(a.mul(&x), b);
                    prop_assert!(a.mul(&kernel).is_zero());
                }
                AffineOutcome::Inconsistent { .. } => prop_assert!(false, "planted system"),
            }
        }

        #[test]
        fn solve_or_refute(
            (a, b) in (any_field(), 1usize..4, 1usize..4).prop_flat_map(|(f, r, c)| {
                (matrix_with(f, r, c), matrix_with(f, r, 1))
            })
        ) {
            match solve_affine(&a, &b).unwrap() {
                AffineOutcome::Solution { x, .. } => prop_assert_eq!(a.mul(&x), b),
                AffineOutcome::Inconsistent { farkas } => {
                    prop_assert!(farkas.mul(&a).is_zero());
                    prop_assert!(!farkas.mul(&b).is_zero());
                }
            }
        }

        #[test]
        fn quotient_projection_section(
            (gens, ambient) in (any_field(), 1usize..5, 0usize..4).prop_flat_map(|(f, n, k)| {
                (matrix_with(f, n, k), Just(n))
            })
        ) {
            let (proj, sect) = quotient_basis(ambient, &gens).unwrap();
            prop_assert_eq!(proj.mul(&sect), Matrix::identity(gens.field(), proj.rows()));
            prop_assert!(proj.mul(&gens).is_zero());
            prop_assert_eq!(proj.rows() + rank(&gens), ambient);
        }
    }
}
