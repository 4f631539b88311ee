//! The circular (clockwise) order on the extended rationals.
//!
//! The extended rationals sit on a circle; the convention used throughout
//! this crate is that clockwise means *decreasing*, with inf as the wrap
//! point. Concretely, under z -> (iz + 1)/(z + i) the real line maps onto
//! the unit circle with inf at the top, 0 at the bottom, 1 on the right,
//! and decreasing reals travel clockwise.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::ExtRational;

/// True when the three pairwise distinct points appear in clockwise order.
///
/// Evaluated by an integer case split: with all points finite the triple is
/// clockwise iff it is a cyclic rotation of a strictly decreasing sequence;
/// a point at infinity reduces the test to one comparison of the other two.
/// Errors when the points are not pairwise distinct.
pub fn clockwise3(x: &ExtRational, y: &ExtRational, z: &ExtRational) -> Result<bool> {
    for (a, b) in [(x, y), (y, z), (x, z)] {
        if a == b {
            return Err(Error::RepeatedVertex(a.clone()));
        }
    }
    Ok(if x.is_infinity() {
        y > z
    } else if y.is_infinity() {
        z > x
    } else if z.is_infinity() {
        x > y
    } else {
        (x > y && y > z) || (y > z && z > x) || (z > x && x > y)
    })
}

/// The same predicate computed through the circle model: map each point to
/// the unit circle by z -> (iz + 1)/(z + i) and take the sign of the
/// orientation determinant. Exact integer arithmetic throughout.
///
/// This exists as an independent second route; `clockwise3` must agree with
/// it everywhere, and the property tests check that they do.
pub fn clockwise3_circle(x: &ExtRational, y: &ExtRational, z: &ExtRational) -> Result<bool> {
    for (a, b) in [(x, y), (y, z), (x, z)] {
        if a == b {
            return Err(Error::RepeatedVertex(a.clone()));
        }
    }
    // p/q lands at (2pq, p^2 - q^2) / (p^2 + q^2). Clearing the positive
    // denominators row by row leaves the sign of
    //   det [[x1, y1, s1], [x2, y2, s2], [x3, y3, s3]]
    // which is negative exactly for clockwise triples.
    let coords = |v: &ExtRational| -> (BigInt, BigInt, BigInt) {
        let (p, q) = (v.numerator(), v.denominator());
        (2 * p * q, p * p - q * q, p * p + q * q)
    };
    let (x1, y1, s1) = coords(x);
    let (x2, y2, s2) = coords(y);
    let (x3, y3, s3) = coords(z);
    let det = &x1 * (&y2 * &s3 - &y3 * &s2) - &y1 * (&x2 * &s3 - &x3 * &s2)
        + &s1 * (&x2 * &y3 - &x3 * &y2);
    Ok(det.is_negative())
}
