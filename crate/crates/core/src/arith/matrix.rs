use std::fmt;

use super::{ArithError, Field};

/// Dense row-major matrix over a field. Values are immutable; every
/// operation returns a fresh matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self, ArithError> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(ArithError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Identity matrix whose entries share the context of `one`.
    pub fn identity(n: usize, one: &F) -> Self {
        let zero = one.zero_like();
        Matrix::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<G: Field>(&self, f: impl FnMut(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field, E>(&self, f: impl FnMut(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(k, x)| {
                let (i, j) = (k / self.cols, k % self.cols);
                if i == j {
                    x.sub(&x.one_like()).is_zero()
                } else {
                    x.is_zero()
                }
            })
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Result<Matrix<F>, ArithError> {
        if self.cols != rhs.rows {
            return Err(ArithError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let zero = self.data[0].zero_like();
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    fn same_shape(&self, rhs: &Matrix<F>) -> Result<(), ArithError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(ArithError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Result<Matrix<F>, ArithError> {
        self.same_shape(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Result<Matrix<F>, ArithError> {
        self.same_shape(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        self.map(|x| x.mul(c))
    }

    fn require_square(&self) -> Result<(), ArithError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ArithError::Shape(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )))
        }
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<F, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = a[0].one_like();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(det.zero_like());
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = det.neg();
            }
            let p = a[col * n + col].clone();
            det = det.mul(&p);
            let p_inv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let f = a[r * n + col].mul(&p_inv);
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a[r * n + j].sub(&f.mul(&a[col * n + j]));
                    a[r * n + j] = v;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination. `role` names the matrix in the
    /// error raised when it is singular.
    pub fn inverse(&self, role: &str) -> Result<Matrix<F>, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let one = self.data[0].one_like();
        let mut a = self.data.clone();
        let mut inv = Matrix::identity(n, &one).data;
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or_else(|| ArithError::Singular(role.to_string()))?;
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
            }
            let p_inv = a[col * n + col].inv().expect("pivot is nonzero");
            for j in 0..n {
                a[col * n + j] = a[col * n + j].mul(&p_inv);
                inv[col * n + j] = inv[col * n + j].mul(&p_inv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a[r * n + j].sub(&f.mul(&a[col * n + j]));
                    a[r * n + j] = v;
                    let w = inv[r * n + j].sub(&f.mul(&inv[col * n + j]));
                    inv[r * n + j] = w;
                }
            }
        }
        Ok(Matrix {
            rows: n,
            cols: n,
            data: inv,
        })
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Result<Matrix<F>, ArithError> {
        self.require_square()?;
        let mut acc = Matrix::identity(self.rows, &self.data[0].one_like());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl<F: Field + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}
