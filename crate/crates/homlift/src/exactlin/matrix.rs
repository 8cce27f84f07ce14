use std::fmt;

use super::field::{Field, Scalar};

/// Dense row-major matrix over a fixed field. All entries stay in canonical
/// form, so equality is entrywise.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        assert!(entries.iter().all(|e| field.matches(e)), "field/scalar mismatch");
        Matrix { field, rows, cols, entries }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(field, rows, cols, entries)
    }

    /// Convenience constructor from signed integers (handy in tests and
    /// fixtures; `rows` may be empty only for a 0-row matrix, so 0-column
    /// shapes go through `zeros`).
    pub fn from_i64s(field: Field, data: &[Vec<i64>]) -> Matrix {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(data[i][j]))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert!(self.field.matches(&v), "field/scalar mismatch");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = f.mul(a, rhs.get(k, j));
                    let cur = f.add(out.get(i, j), &t);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |f, a, b| f.sub(a, b))
    }

    fn zip(&self, rhs: &Matrix, op: impl Fn(Field, &Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| op(self.field, a, b))
            .collect();
        Matrix::new(self.field, self.rows, self.cols, entries)
    }

    pub fn neg(&self) -> Matrix {
        let entries = self.entries.iter().map(|a| self.field.neg(a)).collect();
        Matrix::new(self.field, self.rows, self.cols, entries)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| self.field.mul(s, a)).collect();
        Matrix::new(self.field, self.rows, self.cols, entries)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn col(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.field, self.rows, 1, |i, _| self.get(i, j).clone())
    }

    /// Assembles a block matrix. Every block row must agree on heights and
    /// every block column on widths; zero-dimensional blocks are fine.
    pub fn from_blocks(field: Field, blocks: &[Vec<&Matrix>]) -> Matrix {
        let block_rows = blocks.len();
        let block_cols = blocks.first().map_or(0, |r| r.len());
        assert!(blocks.iter().all(|r| r.len() == block_cols), "ragged block grid");
        let heights: Vec<usize> = (0..block_rows).map(|i| blocks[i][0].rows).collect();
        let widths: Vec<usize> = (0..block_cols).map(|j| blocks[0][j].cols).collect();
        for (i, row) in blocks.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                assert_eq!(b.field, field, "field mismatch in block");
                assert_eq!(b.rows, heights[i], "block height mismatch");
                assert_eq!(b.cols, widths[j], "block width mismatch");
            }
        }
        let rows: usize = heights.iter().sum();
        let cols: usize = widths.iter().sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for (i, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (j, b) in row.iter().enumerate() {
                for r in 0..heights[i] {
                    for c in 0..widths[j] {
                        out.set(r0 + r, c0 + c, b.get(r, c).clone());
                    }
                }
                c0 += widths[j];
            }
            r0 += heights[i];
        }
        out
    }

    pub fn hstack(field: Field, parts: &[&Matrix]) -> Matrix {
        Matrix::from_blocks(field, &[parts.to_vec()])
    }

    pub fn vstack(field: Field, parts: &[&Matrix]) -> Matrix {
        let rows: Vec<Vec<&Matrix>> = parts.iter().map(|p| vec![*p]).collect();
        Matrix::from_blocks(field, &rows)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?} [", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).display()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_assembly() {
        let f = Field::f2();
        let id = Matrix::identity(f, 2);
        let z = Matrix::zeros(f, 2, 1);
        let b = Matrix::from_blocks(f, &[vec![&id, &z]]);
        assert_eq!((b.rows(), b.cols()), (2, 3));
        assert_eq!(b.get(1, 1), &f.one());
        assert_eq!(b.get(1, 2), &f.zero());
    }

    #[test]
    fn product_over_q() {
        let f = Field::Rational;
        let a = Matrix::from_i64s(f, &[vec![1, 2], vec![3, 4]]);
        let b = Matrix::from_i64s(f, &[vec![0, 1], vec![1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, Matrix::from_i64s(f, &[vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn empty_shapes() {
        let f = Field::f2();
        let a = Matrix::zeros(f, 0, 3);
        let b = Matrix::zeros(f, 3, 2);
        let ab = a.mul(&b);
        assert_eq!((ab.rows(), ab.cols()), (0, 2));
        assert!(Matrix::identity(f, 0).is_zero());
    }
}
