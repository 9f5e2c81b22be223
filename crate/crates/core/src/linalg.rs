//! Dense exact linear algebra over Q(ζₙ): coefficient vectors, linear maps,
//! row reduction, kernels and inverses.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::CycNum;

/// A coefficient vector with respect to some fixed basis.
pub type Vector = Vec<CycNum>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

pub fn zero_vector(dim: usize, conductor: u32) -> Vector {
    vec![CycNum::zero(conductor); dim]
}

pub fn basis_vector(dim: usize, index: usize, conductor: u32) -> Vector {
    let mut v = zero_vector(dim, conductor);
    v[index] = CycNum::one(conductor);
    v
}

pub fn is_zero_vector(v: &[CycNum]) -> bool {
    v.iter().all(CycNum::is_zero)
}

/// `dst += c * src`
pub fn axpy(dst: &mut [CycNum], c: &CycNum, src: &[CycNum]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            let t = c * s;
            *d += &t;
        }
    }
}

pub fn scaled(c: &CycNum, v: &[CycNum]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn add(a: &[CycNum], b: &[CycNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[CycNum], b: &[CycNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Nonzero entries of a vector as `(index, coefficient)` pairs.
pub fn support(v: &[CycNum]) -> impl Iterator<Item = (usize, &CycNum)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero())
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vector]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -&row[c];
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vector]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{v : M v = 0}` for the matrix with the given rows.
pub fn kernel(rows: &[Vector], ncols: usize, conductor: u32) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vector(ncols, conductor);
            v[f] = CycNum::one(conductor);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[r][f];
            }
            v
        })
        .collect()
}

/// A linear map between coordinate spaces, stored as a `dst × src` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinMap {
    src_dim: usize,
    dst_dim: usize,
    matrix: Vec<Vector>,
}

impl LinMap {
    pub fn from_rows(src_dim: usize, matrix: Vec<Vector>) -> Result<Self, LinAlgError> {
        for row in &matrix {
            if row.len() != src_dim {
                return Err(LinAlgError::DimensionMismatch(row.len(), src_dim));
            }
        }
        Ok(LinMap {
            src_dim,
            dst_dim: matrix.len(),
            matrix,
        })
    }

    /// Builds the map from the images of the source basis vectors.
    pub fn from_columns(dst_dim: usize, columns: &[Vector], conductor: u32) -> Result<Self, LinAlgError> {
        let src_dim = columns.len();
        let mut matrix = vec![zero_vector(src_dim, conductor); dst_dim];
        for (j, col) in columns.iter().enumerate() {
            if col.len() != dst_dim {
                return Err(LinAlgError::DimensionMismatch(col.len(), dst_dim));
            }
            for (i, c) in col.iter().enumerate() {
                matrix[i][j] = c.clone();
            }
        }
        Ok(LinMap {
            src_dim,
            dst_dim,
            matrix,
        })
    }

    pub fn identity(dim: usize, conductor: u32) -> Self {
        LinMap {
            src_dim: dim,
            dst_dim: dim,
            matrix: (0..dim).map(|i| basis_vector(dim, i, conductor)).collect(),
        }
    }

    pub fn zero(dst_dim: usize, src_dim: usize, conductor: u32) -> Self {
        LinMap {
            src_dim,
            dst_dim,
            matrix: vec![zero_vector(src_dim, conductor); dst_dim],
        }
    }

    pub fn src_dim(&self) -> usize {
        self.src_dim
    }

    pub fn dst_dim(&self) -> usize {
        self.dst_dim
    }

    pub fn rows(&self) -> &[Vector] {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> &CycNum {
        &self.matrix[row][col]
    }

    /// Image of the j-th source basis vector.
    pub fn column(&self, j: usize) -> Vector {
        self.matrix.iter().map(|row| row[j].clone()).collect()
    }

    pub fn apply(&self, v: &[CycNum]) -> Vector {
        assert_eq!(v.len(), self.src_dim, "LinMap applied to wrong dimension");
        self.matrix
            .iter()
            .map(|row| {
                let mut acc = CycNum::zero(v.first().map_or(1, CycNum::conductor));
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinMap) -> Result<LinMap, LinAlgError> {
        if self.src_dim != other.dst_dim {
            return Err(LinAlgError::DimensionMismatch(self.src_dim, other.dst_dim));
        }
        let cols: Vec<Vector> = (0..other.src_dim)
            .map(|j| self.apply(&other.column(j)))
            .collect();
        let conductor = self.conductor();
        LinMap::from_columns(self.dst_dim, &cols, conductor)
    }

    pub fn transpose(&self) -> LinMap {
        let conductor = self.conductor();
        let cols: Vec<Vector> = self.matrix.clone();
        LinMap::from_columns(self.src_dim, &cols, conductor).expect("shapes agree")
    }

    fn conductor(&self) -> u32 {
        self.matrix
            .first()
            .and_then(|r| r.first())
            .map_or(1, CycNum::conductor)
    }

    pub fn is_identity(&self) -> bool {
        self.src_dim == self.dst_dim
            && self.matrix.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
            })
    }

    pub fn determinant(&self) -> Result<CycNum, LinAlgError> {
        if self.src_dim != self.dst_dim {
            return Err(LinAlgError::NotSquare {
                rows: self.dst_dim,
                cols: self.src_dim,
            });
        }
        let conductor = self.conductor();
        let mut m = self.matrix.clone();
        let n = m.len();
        let mut det = CycNum::one(conductor);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Ok(CycNum::zero(conductor));
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det = &det * &m[c][c];
            let inv = m[c][c].inv().expect("pivot is nonzero");
            let pivot_row = m[c].clone();
            for row in m.iter_mut().skip(c + 1) {
                if !row[c].is_zero() {
                    let f = -(&row[c] * &inv);
                    axpy(row, &f, &pivot_row);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<LinMap, LinAlgError> {
        if self.src_dim != self.dst_dim {
            return Err(LinAlgError::NotSquare {
                rows: self.dst_dim,
                cols: self.src_dim,
            });
        }
        let n = self.src_dim;
        let conductor = self.conductor();
        let mut aug: Vec<Vector> = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend(basis_vector(n, i, conductor));
                r
            })
            .collect();
        let pivots = rref(&mut aug);
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return Err(LinAlgError::Singular);
        }
        let matrix = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Ok(LinMap {
            src_dim: n,
            dst_dim: n,
            matrix,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: u32, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| CycNum::from_int(c, x)).collect()
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let rows = vec![v(1, &[1, 2, 3]), v(1, &[2, 4, 6])];
        let k = kernel(&rows, 3, 1);
        assert_eq!(k.len(), 2);
        for vec in &k {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(vec)
                    .fold(CycNum::zero(1), |acc, (a, b)| acc + a * b);
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let z = CycNum::zeta(3);
        let one = CycNum::one(3);
        let m = LinMap::from_rows(2, vec![vec![one.clone(), z.clone()], vec![z.clone(), one.clone()]]).unwrap();
        let det = m.determinant().unwrap();
        assert_eq!(det, &one - &(&z * &z));
        let inv = m.inverse().unwrap();
        assert!(inv.compose(&m).unwrap().is_identity());
        assert!(m.compose(&inv).unwrap().is_identity());
        let singular = LinMap::from_rows(2, vec![v(3, &[1, 2]), v(3, &[2, 4])]).unwrap();
        assert_eq!(singular.inverse(), Err(LinAlgError::Singular));
        assert!(singular.determinant().unwrap().is_zero());
    }

    #[test]
    fn composition_is_associative() {
        let a = LinMap::from_rows(2, vec![v(1, &[1, 2]), v(1, &[0, 1]), v(1, &[3, -1])]).unwrap();
        let b = LinMap::from_rows(3, vec![v(1, &[1, 0, 2]), v(1, &[-1, 1, 1])]).unwrap();
        let c = LinMap::from_rows(2, vec![v(1, &[2, 1]), v(1, &[1, 1])]).unwrap();
        let left = a.compose(&b).unwrap().compose(&a).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&a.compose(&c).unwrap()).unwrap()).unwrap();
        assert_eq!(left, right);
        let id = LinMap::identity(2, 1);
        assert_eq!(a.compose(&id).unwrap(), a);
    }
}
