use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactring::{forward_owned, LaurentPoly};
use crate::rootdata::Parity;

/// A dense matrix with Laurent polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl LMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<LaurentPoly>) -> Self {
        let dim = entries.len();
        let mut m = Self::zeros(dim, dim);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// The matrix unit with a 1 at `(i, j)`, 0-based.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        m.set(i, j, LaurentPoly::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    /// Largest absolute exponent over all entries; `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<i64> {
        self.data.iter().filter_map(LaurentPoly::max_abs_exp).max()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&LaurentPoly::from_int(c))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.nonzero() {
            out.set(j, i, v.clone());
        }
        out
    }

    /// Super Kronecker product: the operator `x ⊗ y` on `A ⊗ B` under
    /// `(x⊗y)(v⊗w) = (-1)^{[y][v]} xv ⊗ yw`, with basis `(i, j) ↦ i·dim B + j`.
    pub fn super_kron(x: &LMatrix, y: &LMatrix, y_parity: Parity, a_parity: &[Parity]) -> LMatrix {
        let (da, db) = (x.rows, y.rows);
        let mut out = LMatrix::zeros(da * db, x.cols * y.cols);
        for (i2, i, xv) in x.nonzero() {
            let sign = y_parity.sign_with(a_parity[i]);
            for (j2, j, yv) in y.nonzero() {
                let mut v = xv * yv;
                if sign < 0 {
                    v = -v;
                }
                out.set(i2 * db + j2, i * y.cols + j, v);
            }
        }
        out
    }
}

impl<'a> Mul<&'a LMatrix> for &LMatrix {
    type Output = LMatrix;
    fn mul(self, rhs: &'a LMatrix) -> LMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = LMatrix::zeros(self.rows, rhs.cols);
        for (i, k, a) in self.nonzero() {
            for j in 0..rhs.cols {
                let b = rhs.get(k, j);
                if !b.is_zero() {
                    let idx = i * out.cols + j;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a LMatrix> for &LMatrix {
    type Output = LMatrix;
    fn add(self, rhs: &'a LMatrix) -> LMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        LMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a LMatrix> for &LMatrix {
    type Output = LMatrix;
    fn sub(self, rhs: &'a LMatrix) -> LMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        LMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &LMatrix {
    type Output = LMatrix;
    fn neg(self) -> LMatrix {
        self.scale_int(-1)
    }
}

forward_owned!(LMatrix, Add, add);
forward_owned!(LMatrix, Sub, sub);
forward_owned!(LMatrix, Mul, mul);

impl fmt::Display for LMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::exactring::pretty(self.get(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
