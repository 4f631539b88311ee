//! Windows of tame SL2-tilings and the correspondence with path pairs.
//!
//! A tiling is a bi-infinite integer matrix (m_{i,j}) in which every
//! 2x2 submatrix of consecutive entries has determinant 1; it is tame
//! when every 3x3 submatrix of consecutive entries has determinant 0.
//! Rows are indexed by i (increasing downwards), columns by j.
//!
//! A pair of paths (gamma, delta) with lifts v_i = a_i/b_i and
//! w_j = c_j/d_j determines the tiling
//!
//! ```text
//! m_{i,j} = a_i d_j - b_i c_j,
//! ```
//!
//! and every tame SL2-tiling arises this way, uniquely up to applying a
//! single element of SL2(Z) to both paths and a global sign.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::path::{FareyPath, Lift};

/// A rectangular window of a tiling: entry(i, j) = m_{i,j} for
/// i in [i0, i1], j in [j0, j1].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TilingWindow {
    i0: i64,
    j0: i64,
    rows: Vec<Vec<BigInt>>,
}

impl TilingWindow {
    /// Wraps a dense grid whose top-left entry sits at (i0, j0).
    pub fn from_rows(i0: i64, j0: i64, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyWindow);
        }
        let width = rows[0].len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::RaggedWindow {
                    row: k,
                    got: row.len(),
                    expected: width,
                });
            }
        }
        Ok(TilingWindow { i0, j0, rows })
    }

    pub fn from_i64_rows(i0: i64, j0: i64, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        TilingWindow::from_rows(i0, j0, rows)
    }

    /// Inclusive row index range (i0, i1).
    pub fn i_range(&self) -> (i64, i64) {
        (self.i0, self.i0 + self.rows.len() as i64 - 1)
    }

    /// Inclusive column index range (j0, j1).
    pub fn j_range(&self) -> (i64, i64) {
        (self.j0, self.j0 + self.rows[0].len() as i64 - 1)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, i: i64, j: i64) -> Result<&BigInt> {
        let (i0, i1) = self.i_range();
        let (j0, j1) = self.j_range();
        if i < i0 || i > i1 || j < j0 || j > j1 {
            return Err(Error::Other(format!(
                "entry ({i}, {j}) lies outside the window [{i0}, {i1}] x [{j0}, {j1}]"
            )));
        }
        Ok(&self.rows[(i - self.i0) as usize][(j - self.j0) as usize])
    }

    pub fn neg(&self) -> TilingWindow {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| -x).collect())
            .collect();
        TilingWindow {
            i0: self.i0,
            j0: self.j0,
            rows,
        }
    }

    /// Flips the global sign so the first nonzero entry in row-major
    /// order is positive. A tiling and its negative carry the same
    /// information, so this picks the canonical representative.
    pub fn canonical_sign(&self) -> TilingWindow {
        for row in &self.rows {
            for x in row {
                if x.is_positive() {
                    return self.clone();
                }
                if x.is_negative() {
                    return self.neg();
                }
            }
        }
        self.clone()
    }

    /// Re-indexes the window: the result has m'_{i,j} = m_{i-p,j-q}.
    pub fn shifted(&self, p: i64, q: i64) -> TilingWindow {
        TilingWindow {
            i0: self.i0 + p,
            j0: self.j0 + q,
            rows: self.rows.clone(),
        }
    }

    /// True when every 2x2 block of consecutive entries has determinant 1.
    /// Global negation does not change these determinants, so a window
    /// and its negative agree here.
    pub fn is_sl2(&self) -> Result<bool> {
        Ok(self.validate_sl2().is_ok())
    }

    pub fn validate_sl2(&self) -> Result<()> {
        if self.n_rows() < 2 || self.n_cols() < 2 {
            return Err(Error::WindowTooSmall {
                need: 2,
                rows: self.n_rows(),
                cols: self.n_cols(),
            });
        }
        for a in 0..self.n_rows() - 1 {
            for b in 0..self.n_cols() - 1 {
                let det = &self.rows[a][b] * &self.rows[a + 1][b + 1]
                    - &self.rows[a][b + 1] * &self.rows[a + 1][b];
                if !det.is_one() {
                    return Err(Error::NotSl2 {
                        i: self.i0 + a as i64,
                        j: self.j0 + b as i64,
                        det: det.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// True when every 3x3 block of consecutive entries has determinant 0.
    pub fn is_tame(&self) -> Result<bool> {
        Ok(self.validate_tame().is_ok())
    }

    pub fn validate_tame(&self) -> Result<()> {
        if self.n_rows() < 3 || self.n_cols() < 3 {
            return Err(Error::WindowTooSmall {
                need: 3,
                rows: self.n_rows(),
                cols: self.n_cols(),
            });
        }
        for a in 0..self.n_rows() - 2 {
            for b in 0..self.n_cols() - 2 {
                if !det3(&self.rows, a, b).is_zero() {
                    return Err(Error::NotTame {
                        i: self.i0 + a as i64,
                        j: self.j0 + b as i64,
                    });
                }
            }
        }
        Ok(())
    }
}

fn det3(rows: &[Vec<BigInt>], a: usize, b: usize) -> BigInt {
    let m = |da: usize, db: usize| &rows[a + da][b + db];
    let minor =
        |r1: usize, r2: usize, c1: usize, c2: usize| m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
    m(0, 0) * minor(1, 2, 1, 2) - m(0, 1) * minor(1, 2, 0, 2) + m(0, 2) * minor(1, 2, 0, 1)
}

/// A pair of paths: gamma indexes rows, delta indexes columns.
#[derive(Clone, Debug)]
pub struct PathPair {
    pub gamma: FareyPath,
    pub delta: FareyPath,
}

fn fill<F>(i_range: (i64, i64), j_range: (i64, i64), f: F) -> Result<TilingWindow>
where
    F: Fn(i64, i64) -> Result<BigInt>,
{
    let (i0, i1) = i_range;
    let (j0, j1) = j_range;
    if i0 > i1 || j0 > j1 {
        return Err(Error::EmptyWindow);
    }
    let mut rows = Vec::with_capacity((i1 - i0 + 1) as usize);
    for i in i0..=i1 {
        let mut row = Vec::with_capacity((j1 - j0 + 1) as usize);
        for j in j0..=j1 {
            row.push(f(i, j)?);
        }
        rows.push(row);
    }
    TilingWindow::from_rows(i0, j0, rows)
}

/// The window of the tiling m_{i,j} = a_i d_j - b_i c_j determined by a
/// pair, in canonical sign. Closed paths are extended periodically;
/// otherwise the lift windows must cover the requested ranges.
pub fn phi(pair: &PathPair, i_range: (i64, i64), j_range: (i64, i64)) -> Result<TilingWindow> {
    Ok(phi_raw(pair, i_range, j_range)?.canonical_sign())
}

/// As `phi` but keeping the sign induced by the lifts; used where a
/// different sign convention pins the global sign.
pub fn phi_raw(pair: &PathPair, i_range: (i64, i64), j_range: (i64, i64)) -> Result<TilingWindow> {
    fill(i_range, j_range, |i, j| {
        let g = pair.gamma.lift_extended(i)?;
        let d = pair.delta.lift_extended(j)?;
        Ok(g.det_with(&d))
    })
}

/// The frieze window m_{i,j} = a_j b_i - b_j a_i of a single path. The
/// window is antisymmetric under (i, j) -> (j, i) with zero diagonal,
/// and the sign is pinned by m_{i+1,i} = 1 rather than canonicalized:
/// the entries do not depend on the sign choice of the lift.
pub fn frieze_phi(
    gamma: &FareyPath,
    i_range: (i64, i64),
    j_range: (i64, i64),
) -> Result<TilingWindow> {
    fill(i_range, j_range, |i, j| {
        let row = gamma.lift_extended(i)?;
        let col = gamma.lift_extended(j)?;
        Ok(col.det_with(&row))
    })
}

/// Recovers the path pair from a tame SL2 window containing rows 0, 1
/// and columns 0, 1:
///
/// ```text
/// a_i = m_{i,0},  b_i = m_{i,1},
/// c_j = m_{1,0} m_{0,j} - m_{0,0} m_{1,j},
/// d_j = m_{1,1} m_{0,j} - m_{0,1} m_{1,j}.
/// ```
///
/// phi of the result reproduces the window exactly (not just up to
/// sign): negating the input negates gamma's lifts and fixes delta's.
pub fn psi(window: &TilingWindow) -> Result<PathPair> {
    let (i0, i1) = window.i_range();
    let (j0, j1) = window.j_range();
    if i0 > 0 || i1 < 1 || j0 > 0 || j1 < 1 {
        return Err(Error::MissingCentralBlock);
    }
    window.validate_sl2()?;
    window.validate_tame()?;
    let mut gamma = Vec::with_capacity(window.n_rows());
    for i in i0..=i1 {
        gamma.push(Lift {
            a: window.entry(i, 0)?.clone(),
            b: window.entry(i, 1)?.clone(),
        });
    }
    let m00 = window.entry(0, 0)?;
    let m01 = window.entry(0, 1)?;
    let m10 = window.entry(1, 0)?;
    let m11 = window.entry(1, 1)?;
    let mut delta = Vec::with_capacity(window.n_cols());
    for j in j0..=j1 {
        let m0j = window.entry(0, j)?;
        let m1j = window.entry(1, j)?;
        delta.push(Lift {
            a: m10 * m0j - m00 * m1j,
            b: m11 * m0j - m01 * m1j,
        });
    }
    Ok(PathPair {
        gamma: FareyPath::from_lifts(gamma, i0)?,
        delta: FareyPath::from_lifts(delta, j0)?,
    })
}

/// The linear recurrences a tame window satisfies: row i+1 plus row i-1
/// equals u_i times row i, and likewise column j+1 plus column j-1
/// equals v_j times column j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub u_start: i64,
    pub u: Vec<BigInt>,
    pub v_start: i64,
    pub v: Vec<BigInt>,
    pub periodic: bool,
}

impl RecurrenceCoeffs {
    /// Marks the coefficients as one full period, to be repeated in both
    /// directions when extending.
    pub fn periodic(mut self) -> Self {
        self.periodic = true;
        self
    }

    pub fn u_at(&self, i: i64) -> Result<BigInt> {
        Self::lookup(&self.u, self.u_start, self.periodic, i)
    }

    pub fn v_at(&self, j: i64) -> Result<BigInt> {
        Self::lookup(&self.v, self.v_start, self.periodic, j)
    }

    fn lookup(xs: &[BigInt], start: i64, periodic: bool, i: i64) -> Result<BigInt> {
        if xs.is_empty() {
            return Err(Error::CoeffOutOfRange { index: i });
        }
        let off = i - start;
        if off >= 0 && off < xs.len() as i64 {
            return Ok(xs[off as usize].clone());
        }
        if periodic {
            return Ok(xs[off.rem_euclid(xs.len() as i64) as usize].clone());
        }
        Err(Error::CoeffOutOfRange { index: i })
    }
}

/// Solves the recurrence coefficients over the interior rows and columns
/// of the window and cross-validates each against every column (resp.
/// row). In an SL2 window no two consecutive entries of a line vanish,
/// so a nonzero pivot always exists.
pub fn recurrence_coeffs(window: &TilingWindow) -> Result<RecurrenceCoeffs> {
    if window.n_rows() < 3 || window.n_cols() < 3 {
        return Err(Error::WindowTooSmall {
            need: 3,
            rows: window.n_rows(),
            cols: window.n_cols(),
        });
    }
    let (i0, i1) = window.i_range();
    let (j0, j1) = window.j_range();
    let mut u = Vec::new();
    for i in i0 + 1..i1 {
        u.push(line_coeff(
            i,
            (j0..=j1)
                .map(|j| window.entry(i, j).unwrap().clone())
                .collect(),
            (j0..=j1)
                .map(|j| window.entry(i - 1, j).unwrap() + window.entry(i + 1, j).unwrap())
                .collect(),
        )?);
    }
    let mut v = Vec::new();
    for j in j0 + 1..j1 {
        v.push(line_coeff(
            j,
            (i0..=i1)
                .map(|i| window.entry(i, j).unwrap().clone())
                .collect(),
            (i0..=i1)
                .map(|i| window.entry(i, j - 1).unwrap() + window.entry(i, j + 1).unwrap())
                .collect(),
        )?);
    }
    Ok(RecurrenceCoeffs {
        u_start: i0 + 1,
        u,
        v_start: j0 + 1,
        v,
        periodic: false,
    })
}

fn line_coeff(index: i64, line: Vec<BigInt>, sums: Vec<BigInt>) -> Result<BigInt> {
    let pivot = match line.iter().position(|x| !x.is_zero()) {
        Some(k) => k,
        None => return Err(Error::NoRecurrenceCoeff { i: index }),
    };
    let (q, r) = num_integer::div_rem(sums[pivot].clone(), line[pivot].clone());
    if !r.is_zero() {
        return Err(Error::InconsistentCoeff { index });
    }
    for (x, s) in line.iter().zip(&sums) {
        if &(&q * x) != s {
            return Err(Error::InconsistentCoeff { index });
        }
    }
    Ok(q)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtendDirection {
    Up,
    Down,
    Left,
    Right,
}

/// Grows the window k rows or columns in the given direction using the
/// recurrences: for example, extending down computes
/// m_{i1+1, j} = u_{i1} m_{i1, j} - m_{i1-1, j} along the bottom edge.
/// The coefficient at the boundary line must be available, so callers
/// typically pass periodic coefficients.
pub fn extend(
    window: &TilingWindow,
    coeffs: &RecurrenceCoeffs,
    dir: ExtendDirection,
    k: usize,
) -> Result<TilingWindow> {
    let vertical = matches!(dir, ExtendDirection::Up | ExtendDirection::Down);
    if vertical && window.n_rows() < 2 || !vertical && window.n_cols() < 2 {
        return Err(Error::WindowTooSmall {
            need: 2,
            rows: window.n_rows(),
            cols: window.n_cols(),
        });
    }
    let mut w = window.clone();
    for _ in 0..k {
        let (i0, i1) = w.i_range();
        let (j0, j1) = w.j_range();
        match dir {
            ExtendDirection::Down => {
                let u = coeffs.u_at(i1)?;
                let row: Vec<BigInt> = (j0..=j1)
                    .map(|j| &u * w.entry(i1, j).unwrap() - w.entry(i1 - 1, j).unwrap())
                    .collect();
                w.rows.push(row);
            }
            ExtendDirection::Up => {
                let u = coeffs.u_at(i0)?;
                let row: Vec<BigInt> = (j0..=j1)
                    .map(|j| &u * w.entry(i0, j).unwrap() - w.entry(i0 + 1, j).unwrap())
                    .collect();
                w.rows.insert(0, row);
                w.i0 -= 1;
            }
            ExtendDirection::Right => {
                let v = coeffs.v_at(j1)?;
                for row in w.rows.iter_mut() {
                    let x = &v * &row[(j1 - j0) as usize] - &row[(j1 - 1 - j0) as usize];
                    row.push(x);
                }
            }
            ExtendDirection::Left => {
                let v = coeffs.v_at(j0)?;
                for row in w.rows.iter_mut() {
                    let x = &v * &row[0] - &row[1];
                    row.insert(0, x);
                }
                w.j0 -= 1;
            }
        }
    }
    Ok(w)
}

/// The minimum of an all-positive window and every position attaining
/// it, in row-major order.
pub fn unique_min(window: &TilingWindow) -> Result<(BigInt, Vec<(i64, i64)>)> {
    require_positive(window)?;
    let mut min: Option<BigInt> = None;
    for row in &window.rows {
        for x in row {
            if min.as_ref().is_none_or(|m| x < m) {
                min = Some(x.clone());
            }
        }
    }
    let min = min.unwrap();
    let mut at = Vec::new();
    for (a, row) in window.rows.iter().enumerate() {
        for (b, x) in row.iter().enumerate() {
            if *x == min {
                at.push((window.i0 + a as i64, window.j0 + b as i64));
            }
        }
    }
    Ok((min, at))
}

/// All positions of entry 1 in an all-positive window, in row-major
/// order, after checking the staircase property: no position of a 1 may
/// dominate another in both coordinates strictly. A violation means the
/// window is not a window of a tame SL2-tiling.
pub fn ones_structure(window: &TilingWindow) -> Result<Vec<(i64, i64)>> {
    require_positive(window)?;
    let mut ones = Vec::new();
    for (a, row) in window.rows.iter().enumerate() {
        for (b, x) in row.iter().enumerate() {
            if x.is_one() {
                ones.push((window.i0 + a as i64, window.j0 + b as i64));
            }
        }
    }
    for (k, &(i1, j1)) in ones.iter().enumerate() {
        for &(i2, j2) in &ones[k + 1..] {
            // Row-major order makes i1 <= i2; strict domination in both
            // coordinates is the violation.
            if i1 < i2 && j1 < j2 {
                return Err(Error::Other(format!(
                    "entries 1 at ({i1}, {j1}) and ({i2}, {j2}) dominate in both coordinates"
                )));
            }
        }
    }
    Ok(ones)
}

fn require_positive(window: &TilingWindow) -> Result<()> {
    for (a, row) in window.rows.iter().enumerate() {
        for (b, x) in row.iter().enumerate() {
            if !x.is_positive() {
                return Err(Error::Other(format!(
                    "window is not positive: entry ({}, {}) is {x}",
                    window.i0 + a as i64,
                    window.j0 + b as i64
                )));
            }
        }
    }
    Ok(())
}

/// Applies an element of SL2(Z) to both paths of a pair; phi of the
/// result is unchanged.
pub fn transform_pair(pair: &PathPair, g: &Mat2) -> PathPair {
    PathPair {
        gamma: pair.gamma.transformed(g),
        delta: pair.delta.transformed(g),
    }
}
