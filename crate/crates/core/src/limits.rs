//! Period transforms and limit points of eventually periodic paths.
//!
//! A path window with lifts l_i satisfies l_{i+1} = e_i l_i - l_{i-1}, so
//! the column pair L_i = [l_i l_{i+1}] obeys L_i = L_{i-1} R_{e_i} with
//!
//! ```text
//! R_e = [[0, -1], [1, e]].
//! ```
//!
//! When the itinerary has period e_1, ..., e_n on a tail, the element
//! A = L_{k+n} L_k^{-1} of SL2(Z) advances the tail by one period and does
//! not depend on k within the tail. The vertices of a forward tail
//! converge to a point of the circle exactly when A has an attracting or
//! parabolic fixed point, which happens exactly when |tr A| >= 2 with
//! A != +-I. The limit is then rational (parabolic case) or a quadratic
//! irrational (hyperbolic case).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::path::FareyPath;
use crate::rational::ExtRational;

/// Product R_{e_1} ... R_{e_n} for a period word.
pub fn period_transform(word: &[BigInt]) -> Result<Mat2> {
    if word.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let mut m = Mat2::identity();
    for e in word {
        m = m.mul(&Mat2::step(e.clone()));
    }
    Ok(m)
}

/// A real quadratic irrational (p + q sqrt(d)) / r in canonical form:
/// d squarefree and > 1, q nonzero, r > 0, gcd(p, q, r) = 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticIrrational {
    pub p: BigInt,
    pub q: BigInt,
    pub d: BigInt,
    pub r: BigInt,
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt({})) / {}", self.p, self.q, self.d, self.r)
    }
}

/// Where the vertices of one end of an eventually periodic path go.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LimitClass {
    /// The tail does not converge: the period transform is +-I or elliptic.
    None,
    /// Parabolic period transform: the limit is the rational fixed point.
    Rational(ExtRational),
    /// Hyperbolic period transform: the limit is the attracting fixed point.
    QuadraticIrrational(QuadraticIrrational),
}

impl fmt::Display for LimitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitClass::None => write!(f, "none"),
            LimitClass::Rational(v) => write!(f, "{v}"),
            LimitClass::QuadraticIrrational(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Backward,
}

/// Classifies the limit of one end of a path window whose itinerary is
/// periodic with the given word on that end.
///
/// The window must contain at least one full period plus the two lifts
/// needed to read off the transform, i.e. word.len() + 2 vertices, and
/// the itinerary entries actually present at that end must be a cyclic
/// rotation of the word.
pub fn classify_tail_limit(
    path: &FareyPath,
    word: &[BigInt],
    dir: Direction,
) -> Result<LimitClass> {
    if word.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let n = word.len() as i64;
    if (path.len() as i64) < n + 2 {
        return Err(Error::PathTooShort {
            need: (n + 2) as usize,
            got: path.len(),
        });
    }
    let (lo, hi) = (path.start(), path.end());
    let (i0, itin) = path.itinerary()?;
    let tail_entries: Vec<BigInt> = match dir {
        Direction::Forward => {
            let from = (hi - n - i0) as usize;
            itin[from..].to_vec()
        }
        Direction::Backward => itin[..n as usize].to_vec(),
    };
    if !is_rotation(&tail_entries, word) {
        return Err(Error::Other(format!(
            "itinerary near the {} end is not a rotation of the period word",
            match dir {
                Direction::Forward => "forward",
                Direction::Backward => "backward",
            }
        )));
    }
    let pair = |i: i64| -> Result<Mat2> {
        let l = path.lift_at(i)?;
        let m = path.lift_at(i + 1)?;
        Mat2::from_columns(&l.a, &l.b, &m.a, &m.b)
    };
    let a = match dir {
        Direction::Forward => pair(hi - 1)?.mul(&pair(hi - n - 1)?.inverse()),
        Direction::Backward => pair(lo)?.mul(&pair(lo + n)?.inverse()),
    };
    Ok(classify_transform(&a))
}

/// Limit behaviour of a hyperbolic or parabolic element acting on the
/// circle, as relevant for tails it advances.
pub fn classify_transform(a: &Mat2) -> LimitClass {
    if a.identity_sign().is_some() {
        return LimitClass::None;
    }
    let t = a.trace();
    let t_abs = t.abs();
    let two = BigInt::from(2);
    if t_abs < two {
        return LimitClass::None;
    }
    if t_abs == two {
        // Parabolic: unique fixed point. With r = 0 the map is a
        // translation and fixes inf.
        if a.r.is_zero() {
            return LimitClass::Rational(ExtRational::infinity());
        }
        let v = ExtRational::new(&a.p - &a.s, 2 * &a.r).expect("r nonzero");
        return LimitClass::Rational(v);
    }
    // Hyperbolic. Both off-diagonal entries are nonzero: q = 0 or r = 0
    // forces ps = 1 over the integers, hence |trace| = 2. The attracting
    // fixed point is ((p - s) + sign(t) sqrt(t^2 - 4)) / (2 r).
    debug_assert!(!a.q.is_zero() && !a.r.is_zero());
    let disc = &t * &t - BigInt::from(4);
    let (f, d) = squarefree_decompose(&disc);
    let sigma = if t.is_positive() { f } else { -f };
    canonical_quadratic(&a.p - &a.s, sigma, d, 2 * &a.r)
}

fn canonical_quadratic(p: BigInt, q: BigInt, d: BigInt, r: BigInt) -> LimitClass {
    debug_assert!(!q.is_zero() && !r.is_zero());
    let g = p.gcd(&q).gcd(&r);
    let (mut p, mut q, mut r) = (p / &g, q / &g, r / g);
    if r.is_negative() {
        p = -p;
        q = -q;
        r = -r;
    }
    LimitClass::QuadraticIrrational(QuadraticIrrational { p, q, d, r })
}

/// Writes n = f^2 * d with d squarefree, returning (f, d).
///
/// Trial division up to 10^6 followed by a perfect-square check on the
/// cofactor. A cofactor with a repeated prime above 10^6 that is not a
/// perfect square would be misreported, but such traces do not arise at
/// the scales this library works at.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive());
    let mut rest = n.clone();
    let mut f = BigInt::one();
    let mut d = BigInt::one();
    let mut k = BigInt::from(2);
    let cap = BigInt::from(1_000_000u64);
    while &k * &k <= rest && k <= cap {
        if rest.is_multiple_of(&k) {
            let mut e = 0u32;
            while rest.is_multiple_of(&k) {
                rest /= &k;
                e += 1;
            }
            for _ in 0..e / 2 {
                f *= &k;
            }
            if e % 2 == 1 {
                d *= &k;
            }
        }
        k += 1;
    }
    if !rest.is_one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            f *= root;
        } else {
            d *= rest;
        }
    }
    (f, d)
}

fn is_rotation(xs: &[BigInt], word: &[BigInt]) -> bool {
    if xs.len() != word.len() {
        return false;
    }
    let n = word.len();
    (0..n).any(|k| (0..n).all(|i| xs[i] == word[(i + k) % n]))
}
