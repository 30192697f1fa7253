//! Exact linear algebra over the DVR Q[t]_(t): Smith normal form, finitely
//! generated submodules of free modules, their saturations Sigma_k and
//! Sigma, the dimensions delta(k), and membership with cofactors.
//!
//! Pivoting always selects the entry of minimal valuation, breaking ties in
//! row-major position, so every computation is deterministic.

use crate::ringcore::{RingError, TRat};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DvrError {
    #[error("matrix entries must be regular (valuation >= 0)")]
    IrregularEntry,
    #[error("vector length {got} does not match ambient rank {expected}")]
    RankMismatch { got: usize, expected: usize },
    #[error("quotient is not defined: {0}")]
    BadQuotient(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Rectangular matrix with regular entries.
#[derive(Clone, Debug, PartialEq)]
pub struct DVRMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<TRat>,
}

impl DVRMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<TRat>) -> Result<Self, DvrError> {
        assert_eq!(entries.len(), rows * cols);
        if entries.iter().any(|e| !e.is_regular()) {
            return Err(DvrError::IrregularEntry);
        }
        Ok(DVRMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DVRMatrix {
            rows,
            cols,
            entries: vec![TRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DVRMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, TRat::one());
        }
        m
    }

    pub fn from_columns(rows: usize, cols: &[Vec<TRat>]) -> Result<Self, DvrError> {
        let mut m = DVRMatrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(DvrError::RankMismatch {
                    got: col.len(),
                    expected: rows,
                });
            }
            for (i, v) in col.iter().enumerate() {
                if !v.is_regular() {
                    return Err(DvrError::IrregularEntry);
                }
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn at(&self, i: usize, j: usize) -> &TRat {
        &self.entries[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: TRat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<TRat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &DVRMatrix) -> DVRMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = DVRMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = TRat::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[TRat]) -> Vec<TRat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = TRat::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn scale_row(&mut self, i: usize, c: &TRat) {
        for j in 0..self.cols {
            let v = self.at(i, j).mul(c);
            self.set(i, j, v);
        }
    }

    /// row_i += c * row_k
    fn add_row_multiple(&mut self, i: usize, k: usize, c: &TRat) {
        for j in 0..self.cols {
            let v = self.at(i, j).add(&self.at(k, j).mul(c));
            self.set(i, j, v);
        }
    }

    /// col_j += c * col_k
    fn add_col_multiple(&mut self, j: usize, k: usize, c: &TRat) {
        for i in 0..self.rows {
            let v = self.at(i, j).add(&self.at(i, k).mul(c));
            self.set(i, j, v);
        }
    }
}

/// Smith normal form over the DVR: U M V = diag(t^{a_1}, ..., t^{a_s}, 0,
/// ...) with unit-determinant transforms and a nondecreasing divisor list.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: DVRMatrix,
    pub u_inv: DVRMatrix,
    pub v: DVRMatrix,
    pub divisors: Vec<u32>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    pub fn max_divisor(&self) -> u32 {
        self.divisors.iter().copied().max().unwrap_or(0)
    }

    /// The diagonal matrix D = U M V, reconstructed from the divisors.
    pub fn diagonal(&self, rows: usize, cols: usize) -> DVRMatrix {
        let mut d = DVRMatrix::zeros(rows, cols);
        for (i, &a) in self.divisors.iter().enumerate() {
            d.set(i, i, TRat::t_power(a as i64));
        }
        d
    }
}

/// Smith form by valuation-pivot reduction. The pivot of minimal valuation
/// (row-major tie-break) divides every remaining entry, so one clearing
/// pass per pivot suffices and divisors come out nondecreasing.
pub fn smith_form(m: &DVRMatrix) -> SmithForm {
    let mut a = m.clone();
    let mut u = DVRMatrix::identity(m.rows);
    let mut u_inv = DVRMatrix::identity(m.rows);
    let mut v = DVRMatrix::identity(m.cols);
    let mut divisors = Vec::new();
    let steps = m.rows.min(m.cols);
    for p in 0..steps {
        // minimal-valuation pivot in the trailing submatrix
        let mut pivot: Option<(usize, usize, i64)> = None;
        for i in p..m.rows {
            for j in p..m.cols {
                if let Some(val) = a.at(i, j).valuation() {
                    if pivot.map_or(true, |(_, _, best)| val < best) {
                        pivot = Some((i, j, val));
                    }
                }
            }
        }
        let Some((pi, pj, val)) = pivot else { break };
        // move to (p, p); row swaps act on U (and inversely on U_inv
        // columns), column swaps on V
        a.swap_rows(p, pi);
        u.swap_rows(p, pi);
        u_inv.swap_cols(p, pi);
        a.swap_cols(p, pj);
        v.swap_cols(p, pj);
        // normalize the pivot to exactly t^val
        let unit = a.at(p, p).mul(&TRat::t_power(-val));
        let unit_inv = unit.inv().expect("unit part of the pivot");
        a.scale_row(p, &unit_inv);
        u.scale_row(p, &unit_inv);
        // U_inv column p picks up the inverse scaling
        for i in 0..m.rows {
            let w = u_inv.at(i, p).mul(&unit);
            u_inv.set(i, p, w);
        }
        let tpow = TRat::t_power(val);
        // clear the column below
        for i in (p + 1)..m.rows {
            if a.at(i, p).is_zero() {
                continue;
            }
            let q = a.at(i, p).div(&tpow).expect("pivot has minimal valuation");
            debug_assert!(q.is_regular());
            let negq = q.neg();
            a.add_row_multiple(i, p, &negq);
            u.add_row_multiple(i, p, &negq);
            // inverse operation on U_inv columns: col_p += q * col_i
            for r in 0..m.rows {
                let w = u_inv.at(r, p).add(&u_inv.at(r, i).mul(&q));
                u_inv.set(r, p, w);
            }
        }
        // clear the row to the right
        for j in (p + 1)..m.cols {
            if a.at(p, j).is_zero() {
                continue;
            }
            let q = a.at(p, j).div(&tpow).expect("pivot has minimal valuation");
            debug_assert!(q.is_regular());
            let negq = q.neg();
            a.add_col_multiple(j, p, &negq);
            v.add_col_multiple(j, p, &negq);
        }
        divisors.push(val as u32);
    }
    SmithForm {
        u,
        u_inv,
        v,
        divisors,
    }
}

/// Result of a membership query.
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// Regular cofactors c with v = sum c_j gen_j.
    Member(Vec<TRat>),
    /// Not in the module; `needed_shift` is the least k with t^k v in the
    /// module, or None when no power of t suffices.
    NotMember { needed_shift: Option<u32> },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// Finitely generated submodule of a free module DVR^m, carried with the
/// Smith form of its generator matrix (generators are the columns).
#[derive(Clone, Debug)]
pub struct DVRSubmodule {
    ambient_rank: usize,
    generators: Vec<Vec<TRat>>,
    smith: SmithForm,
}

impl DVRSubmodule {
    pub fn new(ambient_rank: usize, generators: Vec<Vec<TRat>>) -> Result<Self, DvrError> {
        let matrix = DVRMatrix::from_columns(ambient_rank, &generators)?;
        let smith = smith_form(&matrix);
        Ok(DVRSubmodule {
            ambient_rank,
            generators,
            smith,
        })
    }

    pub fn zero(ambient_rank: usize) -> Self {
        DVRSubmodule::new(ambient_rank, Vec::new()).expect("empty generators")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[Vec<TRat>] {
        &self.generators
    }

    pub fn smith(&self) -> &SmithForm {
        &self.smith
    }

    pub fn rank(&self) -> usize {
        self.smith.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.smith.rank() == 0
    }

    /// Free basis of the module: columns U^{-1} t^{a_i} e_i.
    pub fn basis(&self) -> Vec<Vec<TRat>> {
        (0..self.rank())
            .map(|i| {
                let mut col = self.smith.u_inv.column(i);
                let t = TRat::t_power(self.smith.divisors[i] as i64);
                for c in col.iter_mut() {
                    *c = c.mul(&t);
                }
                col
            })
            .collect()
    }

    /// Basis of the saturation: columns U^{-1} e_i for i < rank.
    pub fn saturated_basis(&self) -> Vec<Vec<TRat>> {
        (0..self.rank()).map(|i| self.smith.u_inv.column(i)).collect()
    }

    /// Sigma_k(M) = { x : t^k x in M }: replace each divisor a_i with
    /// max(a_i - k, 0) in the transformed basis.
    pub fn sigma_k(&self, k: u32) -> DVRSubmodule {
        let gens: Vec<Vec<TRat>> = (0..self.rank())
            .map(|i| {
                let a = self.smith.divisors[i];
                let mut col = self.smith.u_inv.column(i);
                let t = TRat::t_power(a.saturating_sub(k) as i64);
                for c in col.iter_mut() {
                    *c = c.mul(&t);
                }
                col
            })
            .collect();
        DVRSubmodule::new(self.ambient_rank, gens).expect("regular generators")
    }

    /// Sigma(M), reached at k = max divisor; all output divisors are zero.
    pub fn saturate(&self) -> DVRSubmodule {
        self.sigma_k(self.smith.max_divisor())
    }

    /// dim_Q Sigma_k(M)/M = sum_i min(k, a_i).
    pub fn delta(&self, k: u32) -> u64 {
        self.smith
            .divisors
            .iter()
            .map(|&a| a.min(k) as u64)
            .sum()
    }

    /// Solve v = sum c_j gen_j with regular cofactors via the Smith
    /// transform, or report the obstructing t-power.
    pub fn membership_with_cofactors(&self, v: &[TRat]) -> Result<Membership, DvrError> {
        if v.len() != self.ambient_rank {
            return Err(DvrError::RankMismatch {
                got: v.len(),
                expected: self.ambient_rank,
            });
        }
        if v.iter().any(|c| !c.is_regular()) {
            return Err(DvrError::IrregularEntry);
        }
        let w = self.smith.u.mul_vec(v);
        let rank = self.rank();
        let mut deficit: u32 = 0;
        for (i, wi) in w.iter().enumerate() {
            if i >= rank {
                if !wi.is_zero() {
                    return Ok(Membership::NotMember { needed_shift: None });
                }
                continue;
            }
            let a = self.smith.divisors[i] as i64;
            match wi.valuation() {
                None => {}
                Some(val) if val >= a => {}
                Some(val) => deficit = deficit.max((a - val) as u32),
            }
        }
        if deficit > 0 {
            return Ok(Membership::NotMember {
                needed_shift: Some(deficit),
            });
        }
        // D y = w with y_i = w_i / t^{a_i}; cofactors are V (y padded)
        let s = self.generators.len();
        let mut y = vec![TRat::zero(); s];
        for i in 0..rank {
            y[i] = w[i].mul(&TRat::t_power(-(self.smith.divisors[i] as i64)));
        }
        let c = self.smith.v.mul_vec(&y);
        debug_assert!(c.iter().all(|x| x.is_regular()));
        Ok(Membership::Member(c))
    }

    pub fn contains(&self, v: &[TRat]) -> Result<bool, DvrError> {
        Ok(self.membership_with_cofactors(v)?.is_member())
    }

    /// Module equality by mutual containment of generators.
    pub fn eq_module(&self, other: &DVRSubmodule) -> Result<bool, DvrError> {
        if self.ambient_rank != other.ambient_rank {
            return Err(DvrError::RankMismatch {
                got: other.ambient_rank,
                expected: self.ambient_rank,
            });
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sum of two submodules of the same ambient module.
    pub fn sum(&self, other: &DVRSubmodule) -> Result<DVRSubmodule, DvrError> {
        if self.ambient_rank != other.ambient_rank {
            return Err(DvrError::RankMismatch {
                got: other.ambient_rank,
                expected: self.ambient_rank,
            });
        }
        DVRSubmodule::new(
            self.ambient_rank,
            self.generators
                .iter()
                .cloned()
                .chain(other.generators.iter().cloned())
                .collect(),
        )
    }
}

/// dim_Q(A/B) for B <= A with torsion quotient: express B's generators in a
/// free basis of A and sum the Smith divisors of that coefficient matrix.
pub fn quotient_dim(a: &DVRSubmodule, b: &DVRSubmodule) -> Result<u64, DvrError> {
    if a.ambient_rank() != b.ambient_rank() {
        return Err(DvrError::RankMismatch {
            got: b.ambient_rank(),
            expected: a.ambient_rank(),
        });
    }
    for g in b.generators() {
        if !a.contains(g)? {
            return Err(DvrError::BadQuotient("B is not contained in A".into()));
        }
    }
    let rank_a = a.rank();
    // coordinates of y in A's free basis: (U y) component i divided by t^{a_i}
    let coords = |y: &[TRat]| -> Vec<TRat> {
        let w = a.smith().u.mul_vec(y);
        (0..rank_a)
            .map(|i| w[i].mul(&TRat::t_power(-(a.smith().divisors[i] as i64))))
            .collect()
    };
    let cols: Vec<Vec<TRat>> = b.generators().iter().map(|g| coords(g)).collect();
    let rel = DVRSubmodule::new(rank_a, cols)?;
    if rel.rank() < rank_a {
        return Err(DvrError::BadQuotient(
            "quotient has positive rank, dimension is infinite".into(),
        ));
    }
    Ok(rel.smith().divisors.iter().map(|&d| d as u64).sum())
}
