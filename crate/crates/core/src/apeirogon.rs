//! Duals of clockwise paths: the apeirogon spanned by a bi-infinite
//! clockwise path splits into the path itself and a complementary
//! clockwise path, its dual.
//!
//! For each interior vertex v_j of the window, the neighbors of v_j
//! are the chain n_k = prev + k * cur for k in Z, where prev and cur
//! are the lifts of v_{j-1} and v_j. The chain passes n_0 = v_{j-1}
//! and n_{-e_j} = v_{j+1} (with e_j the itinerary entry at j) and
//! accumulates at v_j from both sides, so the neighbors lying outside
//! the arc through v_j are exactly those with k between 0 and -e_j.
//! Collecting them over all interior vertices, discarding the window
//! vertices themselves and sorting clockwise yields the dual.

use std::collections::HashSet;
use std::convert::TryFrom;

use crate::circular::clockwise3;
use crate::error::{Error, Result};
use crate::path::{FareyPath, Lift};
use crate::rational::ExtRational;

/// A clockwise path window together with the window of its dual that
/// the input certifies.
#[derive(Clone, Debug)]
pub struct ApeirogonWindow {
    pub gamma: FareyPath,
    pub dual: FareyPath,
}

/// Computes the window of the dual path certified by a clockwise path
/// window: all apeirogon vertices attached to the interior vertices of
/// the window, in clockwise order.
///
/// The result can be empty (both ends of the window may continue
/// toward irrational limits without shedding any dual vertices yet).
/// An error of kind `DualGap` means consecutive certified dual
/// vertices are not adjacent, which cannot happen for windows of
/// genuine bi-infinite clockwise paths.
pub fn dual_path(gamma: &FareyPath) -> Result<FareyPath> {
    if gamma.len() < 3 {
        return Err(Error::PathTooShort {
            need: 3,
            got: gamma.len(),
        });
    }
    if !gamma.is_clockwise()? {
        return Err(Error::NotClockwise);
    }
    let window: HashSet<ExtRational> = gamma.vertices().into_iter().collect();
    let mut seen = HashSet::new();
    let mut candidates: Vec<ExtRational> = Vec::new();
    let (lo, hi) = (gamma.start(), gamma.end());
    for j in lo + 1..hi {
        let prev = gamma.lift_at(j - 1)?;
        let cur = gamma.lift_at(j)?;
        let e = prev.det_with(gamma.lift_at(j + 1)?);
        let beta = i64::try_from(-&e)
            .map_err(|_| Error::Other(format!("fan at index {j} is too large ({e} triangles)")))?;
        for k in beta.min(0)..=beta.max(0) {
            let u = Lift::new(&prev.a + &cur.a * k, &prev.b + &cur.b * k).vertex();
            if !window.contains(&u) && seen.insert(u.clone()) {
                candidates.push(u);
            }
        }
    }
    let anchor = gamma.vertex_at(hi)?;
    candidates.sort_by(|u, w| {
        if u == w {
            std::cmp::Ordering::Equal
        } else if clockwise3(&anchor, u, w).expect("distinct vertices") {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    for pair in candidates.windows(2) {
        if !pair[0].is_adjacent(&pair[1]) {
            return Err(Error::DualGap(
                Box::new(pair[0].clone()),
                Box::new(pair[1].clone()),
            ));
        }
    }
    FareyPath::lift(&candidates, 0)
}

/// Pairs a clockwise path window with its certified dual window.
pub fn apeirogon(gamma: &FareyPath) -> Result<ApeirogonWindow> {
    Ok(ApeirogonWindow {
        gamma: gamma.clone(),
        dual: dual_path(gamma)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    fn path(vs: &[&str], start: i64) -> FareyPath {
        let vs: Vec<ExtRational> = vs.iter().map(|s| s.parse().unwrap()).collect();
        FareyPath::lift(&vs, start).unwrap()
    }

    #[test]
    fn dual_of_descending_window() {
        let gamma = path(&["2/3", "1/2", "0", "-1/2"], 0);
        let dual = dual_path(&gamma).unwrap();
        assert_eq!(dual.vertices(), vec![q("-1"), q("inf"), q("1")]);
    }

    #[test]
    fn fans_dual_to_their_center() {
        // A run of descending integers is a window of the fan at
        // infinity; the only vertex it certifies is the center.
        let vs: Vec<String> = (-4..=4).rev().map(|k| k.to_string()).collect();
        let refs: Vec<&str> = vs.iter().map(|s| s.as_str()).collect();
        let gamma = path(&refs, 0);
        assert_eq!(dual_path(&gamma).unwrap().vertices(), vec![q("inf")]);
        // Likewise a window of the fan at 1.
        let gamma = path(&["0", "inf", "2", "3/2"], 0);
        assert_eq!(dual_path(&gamma).unwrap().vertices(), vec![q("1")]);
    }

    #[test]
    fn short_triangle_window_certifies_nothing() {
        // Two sides of a Farey triangle: the lone interior vertex has
        // itinerary entry 1, so its whole fan lies in the window.
        let gamma = path(&["0", "inf", "1"], 0);
        let dual = dual_path(&gamma).unwrap();
        assert_eq!(dual.len(), 0);
    }

    #[test]
    fn rejects_counterclockwise_windows() {
        let gamma = path(&["-1/2", "0", "1/2"], 0);
        assert!(matches!(dual_path(&gamma), Err(Error::NotClockwise)));
    }
}
