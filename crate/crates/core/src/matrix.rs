//! 2x2 integer matrices of determinant one and their Mobius action.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::ExtRational;

/// An element of SL2(Z), stored row-major as [[p, q], [r, s]].
#[derive(Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

impl Mat2 {
    /// Builds the matrix and checks det = 1.
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        s: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Mat2 {
            p: p.into(),
            q: q.into(),
            r: r.into(),
            s: s.into(),
        };
        let det = m.det();
        if !det.is_one() {
            return Err(Error::Other(format!(
                "matrix has determinant {det}, expected 1"
            )));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Mat2 {
            p: BigInt::one(),
            q: BigInt::zero(),
            r: BigInt::zero(),
            s: BigInt::one(),
        }
    }

    /// The step matrix [[0, -1], [1, e]]: the column pair of lifts
    /// [l_i l_{i+1}] times this is [l_{i+1} l_{i+2}] when the itinerary
    /// entry at i + 1 is e.
    pub fn step(e: BigInt) -> Self {
        Mat2 {
            p: BigInt::zero(),
            q: -BigInt::one(),
            r: BigInt::one(),
            s: e,
        }
    }

    /// Builds [[a, c], [b, d]] from the columns (a, b) and (c, d),
    /// checking det = 1.
    pub fn from_columns(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Result<Self> {
        Mat2::new(a.clone(), c.clone(), b.clone(), d.clone())
    }

    /// The rotation j = [[0, 1], [-1, 0]], acting as z -> -1/z.
    pub fn j() -> Self {
        Mat2 {
            p: BigInt::zero(),
            q: BigInt::one(),
            r: -BigInt::one(),
            s: BigInt::zero(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn trace(&self) -> BigInt {
        &self.p + &self.s
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        Mat2 {
            p: &self.p * &other.p + &self.q * &other.r,
            q: &self.p * &other.q + &self.q * &other.s,
            r: &self.r * &other.p + &self.s * &other.r,
            s: &self.r * &other.q + &self.s * &other.s,
        }
    }

    /// Inverse, using det = 1: [[s, -q], [-r, p]].
    pub fn inverse(&self) -> Mat2 {
        Mat2 {
            p: self.s.clone(),
            q: -self.q.clone(),
            r: -self.r.clone(),
            s: self.p.clone(),
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            p: -&self.p,
            q: -&self.q,
            r: -&self.r,
            s: -&self.s,
        }
    }

    /// Applies the matrix to a column vector (x, y).
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.p * x + &self.q * y, &self.r * x + &self.s * y)
    }

    /// The Mobius action z -> (pz + q)/(rz + s) on the extended rationals.
    ///
    /// For z = a/b this is (pa + qb)/(ra + sb); the result is automatically
    /// reduced because the matrix is invertible over Z.
    pub fn mobius(&self, z: &ExtRational) -> ExtRational {
        let (num, den) = self.apply(z.numerator(), z.denominator());
        ExtRational::new(num, den).expect("SL2 action maps vertices to vertices")
    }

    /// +1 for the identity, -1 for minus the identity, None otherwise.
    pub fn identity_sign(&self) -> Option<i8> {
        if *self == Mat2::identity() {
            Some(1)
        } else if *self == Mat2::identity().neg() {
            Some(-1)
        } else {
            None
        }
    }

    /// Flips the global sign so the first nonzero of (p, q, r, s) is positive.
    ///
    /// A matrix and its negative act identically on the circle, so this
    /// picks a canonical representative of the pair.
    pub fn canonical_sign(&self) -> Mat2 {
        for entry in [&self.p, &self.q, &self.r, &self.s] {
            if entry.is_positive() {
                return self.clone();
            }
            if entry.is_negative() {
                return self.neg();
            }
        }
        self.clone()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.p, self.q, self.r, self.s)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The element g with g(u) = 0 and g(v) = inf, for adjacent u, v.
///
/// g is unique up to sign; the canonical-sign representative is returned.
pub fn edge_normalizer(u: &ExtRational, v: &ExtRational) -> Result<Mat2> {
    if !u.is_adjacent(v) {
        return Err(Error::NotAdjacent(Box::new(u.clone()), Box::new(v.clone())));
    }
    // Columns (u, v) form a matrix l with det +-1; fix the sign of the v
    // column so det l = 1, then g = j * l^{-1} sends u -> 0 and v -> inf.
    let (ua, ub) = (u.numerator().clone(), u.denominator().clone());
    let (mut va, mut vb) = (v.numerator().clone(), v.denominator().clone());
    if (&ua * &vb - &ub * &va).is_negative() {
        va = -va;
        vb = -vb;
    }
    let l = Mat2 {
        p: ua,
        q: va,
        r: ub,
        s: vb,
    };
    debug_assert!(l.det().is_one());
    Ok(Mat2::j().mul(&l.inverse()).canonical_sign())
}
