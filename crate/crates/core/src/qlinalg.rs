//! Exact dense linear algebra over a field, generic over the scalar
//! (used with Q and with Q(t)). Row-reduced echelon forms are canonical,
//! which makes subspace comparisons deterministic.

use crate::ringcore::{Rat, TRat};
use num_traits::{One, Zero};
use std::fmt::Debug;

pub trait FieldElem: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    /// Division by a nonzero element.
    fn div_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl FieldElem for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
}

impl FieldElem for TRat {
    fn zero() -> Self {
        TRat::zero()
    }
    fn one() -> Self {
        TRat::one()
    }
    fn is_zero(&self) -> bool {
        TRat::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn div_ref(&self, o: &Self) -> Self {
        self.div(o).expect("division by zero in linear algebra")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: FieldElem> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = T::one().div_ref(self.at(r, c));
            for j in c..self.cols {
                let v = self.at(r, j).mul_ref(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let factor = self.at(i, c).clone();
                for j in c..self.cols {
                    let v = self.at(i, j).sub_ref(&factor.mul_ref(self.at(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }
}

/// Scale a vector so its first nonzero entry is one; zero vectors pass
/// through.
pub fn normalize_leading<T: FieldElem>(v: &mut [T]) {
    if let Some(p) = v.iter().position(|x| !x.is_zero()) {
        let inv = T::one().div_ref(&v[p]);
        for x in v.iter_mut() {
            *x = x.mul_ref(&inv);
        }
    }
}

/// Basis of the right kernel { x : M x = 0 }, one vector per free column,
/// each normalized to leading coefficient one.
pub fn kernel_basis<T: FieldElem>(m: &Mat<T>) -> Vec<Vec<T>> {
    let mut r = m.clone();
    let pivots = r.rref();
    let mut out = Vec::new();
    let mut pivot_at = vec![None; m.cols];
    for (row, &c) in pivots.iter().enumerate() {
        pivot_at[c] = Some(row);
    }
    for free in 0..m.cols {
        if pivot_at[free].is_some() {
            continue;
        }
        let mut v = vec![T::zero(); m.cols];
        v[free] = T::one();
        for (c, slot) in pivot_at.iter().enumerate() {
            if let Some(row) = slot {
                v[c] = r.at(*row, free).neg_ref();
            }
        }
        normalize_leading(&mut v);
        out.push(v);
    }
    out
}

/// Solve M x = rhs exactly; None when inconsistent. With multiple solutions
/// the free variables are set to zero.
pub fn solve<T: FieldElem>(m: &Mat<T>, rhs: &[T]) -> Option<Vec<T>> {
    assert_eq!(rhs.len(), m.rows);
    let mut aug = Mat::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.at(i, j).clone());
        }
        aug.set(i, m.cols, rhs[i].clone());
    }
    let pivots = aug.rref();
    if pivots.contains(&m.cols) {
        return None;
    }
    let mut x = vec![T::zero(); m.cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug.at(row, m.cols).clone();
    }
    Some(x)
}

/// Canonical subspace of a coordinate space: the RREF rows of any spanning
/// set. Two equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq)]
pub struct RowSpace<T> {
    dim_ambient: usize,
    rows: Vec<Vec<T>>,
}

impl<T: FieldElem> RowSpace<T> {
    pub fn from_spanning(dim_ambient: usize, vectors: &[Vec<T>]) -> Self {
        if vectors.is_empty() {
            return RowSpace {
                dim_ambient,
                rows: Vec::new(),
            };
        }
        let mut m = Mat::from_rows(vectors.to_vec());
        let pivots = m.rref();
        let rows = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        RowSpace { dim_ambient, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.dim_ambient);
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row.iter()) {
                *x = x.sub_ref(&factor.mul_ref(r));
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &RowSpace<T>) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::{rat_int, Rat};

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_of_sum_constraint() {
        // x + y = 0 -> kernel spanned by (1, -1) after leading-one scaling
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k, vec![vec![rat_int(1), rat_int(-1)]]);
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let a = m(&[&[2, 0], &[0, 4]]);
        let x = solve(&a, &[rat_int(6), rat_int(8)]).unwrap();
        assert_eq!(x, vec![rat_int(3), rat_int(2)]);
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(solve(&b, &[rat_int(0), rat_int(1)]).is_none());
    }

    #[test]
    fn rowspace_equality_is_canonical() {
        let s1 = RowSpace::from_spanning(
            3,
            &[
                vec![rat_int(1), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat_int(1)],
            ],
        );
        let s2 = RowSpace::from_spanning(
            3,
            &[
                vec![rat_int(2), rat_int(3), rat_int(1)],
                vec![rat_int(1), rat_int(0), rat_int(-1)],
            ],
        );
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        assert!(s1.contains(&[rat_int(1), rat_int(2), rat_int(1)]));
        assert!(!s1.contains(&[rat_int(1), rat_int(0), rat_int(0)]));
    }

    #[test]
    fn empty_matrix_edge_cases() {
        let e: Mat<Rat> = Mat::zeros(0, 3);
        assert_eq!(kernel_basis(&e).len(), 3);
        let f: Mat<Rat> = Mat::zeros(3, 0);
        assert!(kernel_basis(&f).is_empty());
    }
}
