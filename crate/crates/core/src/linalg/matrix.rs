use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Dense square matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<T> {
    order: usize,
    data: Vec<T>,
}

impl<T: Clone + Default> SquareMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        SquareMatrix {
            order,
            data: vec![T::default(); order * order],
        }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        SquareMatrix { order, data }
    }

    /// Builds a matrix from rows, rejecting ragged or non-square input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != order {
                return Err(Error::NotSquare {
                    order,
                    row,
                    len: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(SquareMatrix { order, data })
    }
}

impl<T> SquareMatrix<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.order.max(1)).take(self.order)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            order: self.order,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        (0..self.order).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl SquareMatrix<i64> {
    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self[(i, i)]).sum()
    }

    pub fn to_f64(&self) -> SquareMatrix<f64> {
        self.map(|&x| x as f64)
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.order + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.order + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_rows() {
        let err = SquareMatrix::from_rows(vec![vec![1, 2], vec![3]]).unwrap_err();
        assert_eq!(
            err,
            Error::NotSquare {
                order: 2,
                row: 1,
                len: 1
            }
        );
        assert!(SquareMatrix::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6]]).is_err());
    }

    #[test]
    fn trace_and_symmetry() {
        let m = SquareMatrix::from_rows(vec![vec![1i64, 2], vec![2, 5]]).unwrap();
        assert_eq!(m.trace(), 6);
        assert!(m.is_symmetric());
        assert_eq!(m.to_rows(), vec![vec![1, 2], vec![2, 5]]);
    }
}
