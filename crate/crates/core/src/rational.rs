//! Reduced rationals extended with a point at infinity.
//!
//! A vertex of the Farey graph is a fraction a/b in lowest terms together
//! with inf = 1/0. Two vertices a/b and c/d are joined by an edge exactly
//! when |ad - bc| = 1. All arithmetic here is exact.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A reduced rational number, or infinity represented as 1/0.
///
/// Canonical form: gcd(num, den) = 1, den >= 0, and infinity is exactly
/// (1, 0). The sign lives in the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: BigInt,
    den: BigInt,
}

impl ExtRational {
    /// Reduce (num, den) to canonical form. Errors when both are zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (mut num, mut den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::InvalidVertex);
        }
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
        if den.is_zero() {
            num = BigInt::one();
        } else if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(ExtRational { num, den })
    }

    pub fn infinity() -> Self {
        ExtRational {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExtRational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    /// |ad - bc| for self = a/b and other = c/d.
    ///
    /// This is invariant under the Mobius action of SL2(Z) and equals 1
    /// exactly when the two vertices are adjacent in the Farey graph.
    pub fn delta(&self, other: &ExtRational) -> BigInt {
        (&self.num * &other.den - &self.den * &other.num).abs()
    }

    pub fn is_adjacent(&self, other: &ExtRational) -> bool {
        self.delta(other).is_one()
    }

    /// Farey sum (a+c)/(b+d) of two adjacent vertices.
    ///
    /// The result is automatically in lowest terms (any common divisor of
    /// a+c and b+d divides ad - bc = +-1) and is adjacent to both inputs.
    pub fn mediant(&self, other: &ExtRational) -> Result<ExtRational> {
        if !self.is_adjacent(other) {
            return Err(Error::NotAdjacent(
                Box::new(self.clone()),
                Box::new(other.clone()),
            ));
        }
        Ok(ExtRational {
            num: &self.num + &other.num,
            den: &self.den + &other.den,
        })
    }

    /// The two neighbours of a non-integer rational with strictly smaller
    /// denominator, returned as (x, y) with x < self < y.
    ///
    /// They are adjacent to each other and their mediant is self.
    pub fn farey_parents(&self) -> Result<(ExtRational, ExtRational)> {
        if self.den <= BigInt::one() {
            return Err(Error::NoParents(self.clone()));
        }
        // Solve a*d - b*c = 1 with 0 < d < b: d is the inverse of a mod b.
        let egcd = self.num.extended_gcd(&self.den);
        debug_assert!(egcd.gcd.is_one());
        let d1 = egcd.x.mod_floor(&self.den);
        let c1 = (&self.num * &d1 - BigInt::one()) / &self.den;
        let p = ExtRational {
            num: c1.clone(),
            den: d1.clone(),
        };
        let q = ExtRational {
            num: &self.num - c1,
            den: &self.den - d1,
        };
        debug_assert!(p.is_adjacent(self) && q.is_adjacent(self) && p.is_adjacent(&q));
        if p < q {
            Ok((p, q))
        } else {
            Ok((q, p))
        }
    }
}

/// Total order with infinity greatest. Finite fractions compare as usual.
///
/// This is the order on the real line, not the circular order; see
/// [`crate::circular::clockwise3`] for the latter.
impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    /// Parses "inf", "n", or "a/b". Printing then parsing round-trips.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "-inf" || s == "+inf" {
            return Ok(ExtRational::infinity());
        }
        let parse_int = |t: &str| -> Result<BigInt> {
            BigInt::from_str(t.trim())
                .map_err(|_| Error::Other(format!("cannot parse integer {t:?}")))
        };
        match s.split_once('/') {
            Some((a, b)) => ExtRational::new(parse_int(a)?, parse_int(b)?),
            None => Ok(ExtRational::from_integer(parse_int(s)?)),
        }
    }
}
