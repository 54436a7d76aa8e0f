//! Smith normal form over the integers.
//!
//! The elimination runs on `i64` with checked arithmetic first and restarts on
//! arbitrary-precision integers if any intermediate value overflows, so the
//! result is always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Int, IntMatrix};

/// `U · M · V = S` with `U`, `V` unimodular and `S` diagonal in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    rank: usize,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Diagonal entries `d_1 | d_2 | ... | d_rank`, all positive.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Diagonal entries greater than one.
    pub fn invariant_factors(&self) -> Vec<Int> {
        self.diagonal().into_iter().filter(|d| !d.is_one()).collect()
    }
}

/// Which transformation matrices to accumulate. Tracking a side costs a
/// square matrix of that dimension per elementary operation, so callers only
/// ask for what they use.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Track {
    pub left: bool,
    pub right: bool,
}

impl Track {
    pub const ALL: Track = Track { left: true, right: true };
    pub const LEFT: Track = Track { left: true, right: false };
    pub const RIGHT: Track = Track { left: false, right: true };
}

/// Partial decomposition; the untracked sides are `None`.
#[derive(Clone, Debug)]
pub(crate) struct SmithParts {
    pub diagonal: Vec<Int>,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

impl SmithParts {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

/// Computes the Smith normal form with both transforms.
///
/// Pivots are chosen as the entry of smallest nonzero magnitude in the active
/// submatrix, ties broken by lowest row and then lowest column, so the output
/// is a deterministic function of the input.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let p = smith_with(m, Track::ALL);
    let mut s = IntMatrix::zeros(m.rows(), m.cols());
    for (i, d) in p.diagonal.iter().enumerate() {
        s[(i, i)] = d.clone();
    }
    SmithDecomposition {
        rank: p.diagonal.len(),
        u: p.u.unwrap(),
        u_inv: p.u_inv.unwrap(),
        v: p.v.unwrap(),
        v_inv: p.v_inv.unwrap(),
        s,
    }
}

pub(crate) fn smith_with(m: &IntMatrix, track: Track) -> SmithParts {
    if let Some(small) = m.entries().iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>() {
        if let Some(out) = Work::new(m.rows(), m.cols(), small, track).run() {
            return out;
        }
    }
    Work::new(m.rows(), m.cols(), m.entries().to_vec(), track)
        .run()
        .expect("arbitrary-precision elimination cannot overflow")
}

trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude_lt(&self, other: &Self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    /// Quotient rounded to the nearest integer, so the remainder is at most
    /// half the divisor in magnitude.
    fn div_round(&self, b: &Self) -> Self;
    fn divides(&self, b: &Self) -> bool;
    fn into_int(self) -> Int;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn div_round(&self, b: &Self) -> Self {
        let q = self / b;
        let r = self - q * b;
        if r.unsigned_abs().saturating_mul(2) > b.unsigned_abs() {
            if (r < 0) == (*b < 0) {
                q + 1
            } else {
                q - 1
            }
        } else {
            q
        }
    }
    fn divides(&self, b: &Self) -> bool {
        b % self == 0
    }
    fn into_int(self) -> Int {
        BigInt::from(self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn div_round(&self, b: &Self) -> Self {
        let (q, r) = self.div_rem(b);
        if (r.magnitude() * 2u32) > *b.magnitude() {
            if Signed::is_negative(&r) == Signed::is_negative(b) {
                q + 1
            } else {
                q - 1
            }
        } else {
            q
        }
    }
    fn divides(&self, b: &Self) -> bool {
        b.is_multiple_of(self)
    }
    fn into_int(self) -> Int {
        self
    }
}

struct Dense<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Dense<T> {
    fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Dense { rows: n, cols: n, data }
    }

    fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    /// row_i -= q * row_k
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &T) -> Option<()> {
        for j in 0..self.cols {
            let b = &self.data[k * self.cols + j];
            if b.is_zero() {
                continue;
            }
            let v = self.data[i * self.cols + j].sub_mul(q, b)?;
            self.data[i * self.cols + j] = v;
        }
        Some(())
    }

    /// col_j -= q * col_k
    fn col_sub_mul(&mut self, j: usize, k: usize, q: &T) -> Option<()> {
        for i in 0..self.rows {
            let b = &self.data[i * self.cols + k];
            if b.is_zero() {
                continue;
            }
            let v = self.data[i * self.cols + j].sub_mul(q, b)?;
            self.data[i * self.cols + j] = v;
        }
        Some(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        for j in 0..self.cols {
            let v = self.data[i * self.cols + j].neg()?;
            self.data[i * self.cols + j] = v;
        }
        Some(())
    }

    fn negate_col(&mut self, j: usize) -> Option<()> {
        for i in 0..self.rows {
            let v = self.data[i * self.cols + j].neg()?;
            self.data[i * self.cols + j] = v;
        }
        Some(())
    }

    fn into_matrix(self) -> IntMatrix {
        let data = self.data.into_iter().map(Scalar::into_int).collect();
        IntMatrix::new(self.rows, self.cols, data).expect("shape preserved")
    }
}

struct Work<T> {
    a: Dense<T>,
    u: Option<Dense<T>>,
    u_inv: Option<Dense<T>>,
    v: Option<Dense<T>>,
    v_inv: Option<Dense<T>>,
}

impl<T: Scalar> Work<T> {
    fn new(rows: usize, cols: usize, data: Vec<T>, track: Track) -> Self {
        Work {
            a: Dense { rows, cols, data },
            u: track.left.then(|| Dense::identity(rows)),
            u_inv: track.left.then(|| Dense::identity(rows)),
            v: track.right.then(|| Dense::identity(cols)),
            v_inv: track.right.then(|| Dense::identity(cols)),
        }
    }

    // Row operation E acts as A <- E A, U <- E U, U^-1 <- U^-1 E^-1.
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &T) -> Option<()> {
        if q.is_zero() {
            return Some(());
        }
        self.a.row_sub_mul(i, k, q)?;
        if let Some(u) = &mut self.u {
            u.row_sub_mul(i, k, q)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.col_sub_mul(k, i, &q.neg()?)?;
        }
        Some(())
    }

    // Column operation E acts as A <- A E, V <- V E, V^-1 <- E^-1 V^-1.
    fn col_sub_mul(&mut self, j: usize, k: usize, q: &T) -> Option<()> {
        if q.is_zero() {
            return Some(());
        }
        self.a.col_sub_mul(j, k, q)?;
        if let Some(v) = &mut self.v {
            v.col_sub_mul(j, k, q)?;
        }
        if let Some(vi) = &mut self.v_inv {
            vi.row_sub_mul(k, j, &q.neg()?)?;
        }
        Some(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(a, b);
        }
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        self.a.negate_row(i)?;
        if let Some(u) = &mut self.u {
            u.negate_row(i)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i)?;
        }
        Some(())
    }

    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = self.a.at(i, j);
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if !x.magnitude_lt(self.a.at(bi, bj)) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn run(mut self) -> Option<SmithParts> {
        let (rows, cols) = (self.a.rows, self.a.cols);
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.smallest_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if self.a.at(i, t).is_zero() {
                        continue;
                    }
                    let q = self.a.at(i, t).div_round(self.a.at(t, t));
                    self.row_sub_mul(i, t, &q)?;
                    clean &= self.a.at(i, t).is_zero();
                }
                for j in t + 1..cols {
                    if self.a.at(t, j).is_zero() {
                        continue;
                    }
                    let q = self.a.at(t, j).div_round(self.a.at(t, t));
                    self.col_sub_mul(j, t, &q)?;
                    clean &= self.a.at(t, j).is_zero();
                }
                if !clean {
                    let (pi, pj) = self.smallest_entry(t).expect("nonzero remainder exists");
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                let pivot = self.a.at(t, t).clone();
                let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !pivot.divides(self.a.at(i, j))));
                match offender {
                    Some(i) => {
                        let minus_one = T::one().neg()?;
                        self.row_sub_mul(t, i, &minus_one)?;
                    }
                    None => break,
                }
            }
            if self.a.at(t, t).is_negative() {
                self.negate_row(t)?;
            }
            t += 1;
        }
        let diagonal = (0..t).map(|i| self.a.at(i, i).clone().into_int()).collect();
        Some(SmithParts {
            diagonal,
            u: self.u.map(Dense::into_matrix),
            u_inv: self.u_inv.map(Dense::into_matrix),
            v: self.v.map(Dense::into_matrix),
            v_inv: self.v_inv.map(Dense::into_matrix),
        })
    }
}
