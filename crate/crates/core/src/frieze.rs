//! Tame friezes of finite order and their positivity structure.
//!
//! A tame frieze of order n is a tame SL2-tiling with m_{i,i} = 0 and
//! m_{i+n,i} = 0 for all i. Friezes arise from closed paths of length n
//! via the antisymmetric formula m_{i,j} = a_j b_i - b_j a_i, and the
//! frieze repeats with period n either identically or with a sign flip,
//! according to whether the path's period transform is plus or minus
//! the identity.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::path::{FareyPath, ItinerarySpec};
use crate::rational::ExtRational;
use crate::tiling::{frieze_phi, phi_raw, PathPair, TilingWindow};
use crate::words::contains_cycle_sequence;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignPeriod {
    /// m_{i+n,j} = m_{i,j}.
    Periodic,
    /// m_{i+n,j} = -m_{i,j}.
    Antiperiodic,
}

/// A tame frieze of order n, carried by a closed path together with a
/// computed window of its entries.
#[derive(Clone, Debug)]
pub struct FriezeOrderN {
    order: i64,
    path: FareyPath,
    window: TilingWindow,
    sign_period: SignPeriod,
}

impl FriezeOrderN {
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn path(&self) -> &FareyPath {
        &self.path
    }

    pub fn window(&self) -> &TilingWindow {
        &self.window
    }

    pub fn sign_period(&self) -> SignPeriod {
        self.sign_period
    }

    /// Entry m_{i,j} for arbitrary indices, from the periodic lifts.
    pub fn entry(&self, i: i64, j: i64) -> Result<BigInt> {
        let row = self.path.lift_extended(i)?;
        let col = self.path.lift_extended(j)?;
        Ok(col.det_with(&row))
    }

    /// One period of the quiddity sequence: m_{i+1,i-1} for i = 1..n.
    pub fn quiddity_cycle(&self) -> Result<Vec<BigInt>> {
        (1..=self.order).map(|i| self.entry(i + 1, i - 1)).collect()
    }

    /// True when every entry strictly between the zero diagonals is
    /// positive, checked on one fundamental domain (which suffices,
    /// since positive friezes are antiperiodic and antisymmetric).
    pub fn is_positive(&self) -> Result<bool> {
        let n = self.order;
        for j in 0..n {
            for i in j + 1..j + n {
                if !self.entry(i, j)?.is_positive() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Builds the order-n frieze of a closed path. The order may be any
/// positive multiple of the path's length: a frieze of order n is also
/// one of order 2n, 3n, and so on.
pub fn frieze_from_closed_path(
    path: &FareyPath,
    n: i64,
    i_range: (i64, i64),
    j_range: (i64, i64),
) -> Result<FriezeOrderN> {
    if !path.is_closed() {
        return Err(Error::NotClosed);
    }
    let edges = path.len() as i64 - 1;
    if n < 2 || n % edges != 0 {
        return Err(Error::NotFrieze {
            reason: format!("order {n} is not a positive multiple of the path length {edges}"),
        });
    }
    let window = frieze_phi(path, i_range, j_range)?;
    let wraps = n / edges;
    let eps = path.period_sign()?;
    let sign_period = if eps == 1 || wraps % 2 == 0 {
        SignPeriod::Periodic
    } else {
        SignPeriod::Antiperiodic
    };
    Ok(FriezeOrderN {
        order: n,
        path: path.clone(),
        window,
        sign_period,
    })
}

/// Reads the quiddity sequence m_{i+1,i-1} off a frieze window, returned
/// with the index of its first entry.
///
/// The window must have a zero main diagonal and a constant second
/// diagonal m_{i+1,i} of 1s or -1s; in the latter case the window is
/// negated first, since a tiling and its negative are identified.
pub fn quiddity(window: &TilingWindow) -> Result<(i64, Vec<BigInt>)> {
    let (i0, i1) = window.i_range();
    let (j0, j1) = window.j_range();
    for i in i0.max(j0)..=i1.min(j1) {
        if !window.entry(i, i)?.is_zero() {
            return Err(Error::NotFrieze {
                reason: format!(
                    "main diagonal entry at ({i}, {i}) is {}",
                    window.entry(i, i)?
                ),
            });
        }
    }
    let mut sign: Option<i8> = None;
    for i in (i0 - 1).max(j0)..=(i1 - 1).min(j1) {
        let x = window.entry(i + 1, i)?;
        let s = if x.is_one() {
            1
        } else if (-x).is_one() {
            -1
        } else {
            return Err(Error::NotFrieze {
                reason: format!("second diagonal entry at ({}, {i}) is {x}", i + 1),
            });
        };
        if *sign.get_or_insert(s) != s {
            return Err(Error::NotFrieze {
                reason: "second diagonal has mixed signs".into(),
            });
        }
    }
    let Some(sign) = sign else {
        return Err(Error::NotFrieze {
            reason: "window does not meet the second diagonal".into(),
        });
    };
    let lo = (i0 - 1).max(j0 + 1);
    let hi = (i1 - 1).min(j1 + 1);
    if lo > hi {
        return Err(Error::NotFrieze {
            reason: "window too narrow to read the quiddity".into(),
        });
    }
    let word = (lo..=hi)
        .map(|i| {
            let x = window.entry(i + 1, i - 1)?;
            Ok(if sign == 1 { x.clone() } else { -x })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((lo, word))
}

/// Window-level certificate that a positive word is the quiddity
/// sequence of a positive infinite frieze: no contiguous subword may be
/// a cycle sequence.
pub fn quiddity_realizable(word: &[BigInt]) -> Result<bool> {
    if let Some(e) = word.iter().find(|e| !e.is_positive()) {
        return Err(Error::Other(format!(
            "quiddity entries must be positive, got {e}"
        )));
    }
    Ok(!contains_cycle_sequence(word))
}

/// The tame SL2-tiling of a pair of disjoint clockwise simple closed
/// paths of lengths r and s.
///
/// The pair is re-phased so that the edge from vertex 0 to vertex 1 of
/// each path separates it from the other path, and the global sign is
/// chosen to make m_{1,1} positive. With that normalization the block
/// i in [1, r], j in [1, s] is entirely positive, and the tiling is
/// antiperiodic: m_{i+r,j} = m_{i,j+s} = -m_{i,j}.
pub fn antiperiodic_tiling(
    gamma: &FareyPath,
    delta: &FareyPath,
    i_range: (i64, i64),
    j_range: (i64, i64),
) -> Result<TilingWindow> {
    let gv = base_cycle(gamma, "gamma")?;
    let dv = base_cycle(delta, "delta")?;
    for w in &dv {
        if gv.contains(w) {
            return Err(Error::PathsIntersect(w.clone()));
        }
    }
    let p = separating_phase(&gv, &dv)?;
    let q = separating_phase(&dv, &gv)?;
    let pair = PathPair {
        gamma: rephase(&gv, p)?,
        delta: rephase(&dv, q)?,
    };
    let m11 = pair.gamma.lift_at(1)?.det_with(pair.delta.lift_at(1)?);
    debug_assert!(!m11.is_zero());
    let window = phi_raw(&pair, i_range, j_range)?;
    Ok(if m11.is_negative() {
        window.neg()
    } else {
        window
    })
}

fn base_cycle(path: &FareyPath, name: &str) -> Result<Vec<ExtRational>> {
    if !path.is_clockwise_simple_closed()? {
        return Err(Error::Other(format!(
            "{name} must be a clockwise simple closed path"
        )));
    }
    let mut vs = path.vertices();
    vs.pop();
    Ok(vs)
}

/// Finds the first p in 1..=r such that the whole other cycle lies in
/// the open clockwise arc from vertex p-1 to vertex p.
fn separating_phase(cycle: &[ExtRational], other: &[ExtRational]) -> Result<usize> {
    let r = cycle.len();
    for p in 1..=r {
        let a = &cycle[p - 1];
        let b = &cycle[p % r];
        if other
            .iter()
            .all(|w| crate::circular::clockwise3(a, w, b).unwrap_or(false))
        {
            return Ok(p);
        }
    }
    Err(Error::NotSeparable)
}

/// Rotates the cycle so the separating edge becomes (v_0, v_1) and
/// closes it up again.
fn rephase(cycle: &[ExtRational], p: usize) -> Result<FareyPath> {
    let r = cycle.len();
    let vs: Vec<ExtRational> = (0..=r).map(|k| cycle[(p - 1 + k) % r].clone()).collect();
    FareyPath::lift(&vs, 0)
}

/// Realizes a quiddity cycle as a closed path and returns its frieze.
/// The word is one full period t_1, ..., t_n of the cyclic quiddity.
pub fn frieze_from_quiddity_cycle(
    word: &[BigInt],
    i_range: (i64, i64),
    j_range: (i64, i64),
) -> Result<FriezeOrderN> {
    let path = ItinerarySpec::realize_closed(word)?;
    frieze_from_closed_path(&path, word.len() as i64, i_range, j_range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::ItinerarySpec;

    fn q(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    fn word(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn triangle() -> FareyPath {
        let vs = [q("inf"), q("1"), q("0"), q("inf")];
        FareyPath::lift(&vs, 0).unwrap()
    }

    #[test]
    fn triangle_frieze_is_positive_of_order_three() {
        let f = frieze_from_closed_path(&triangle(), 3, (0, 3), (0, 3)).unwrap();
        assert_eq!(f.sign_period(), SignPeriod::Antiperiodic);
        assert!(f.is_positive().unwrap());
        assert_eq!(f.quiddity_cycle().unwrap(), word(&[1, 1, 1]));
        // Re-declared at order 6 the frieze is periodic and no longer
        // counts as positive (the strip picks up negated entries).
        let f6 = frieze_from_closed_path(&triangle(), 6, (0, 3), (0, 3)).unwrap();
        assert_eq!(f6.sign_period(), SignPeriod::Periodic);
        assert!(!f6.is_positive().unwrap());
    }

    #[test]
    fn heptagon_frieze_quiddity_and_positivity() {
        let f = frieze_from_quiddity_cycle(&word(&[1, 2, 2, 3, 1, 2, 4]), (0, 7), (0, 7)).unwrap();
        assert_eq!(f.sign_period(), SignPeriod::Antiperiodic);
        assert!(f.is_positive().unwrap());
        assert_eq!(f.quiddity_cycle().unwrap(), word(&[1, 2, 2, 3, 1, 2, 4]));
        let (lo, w) = quiddity(f.window()).unwrap();
        assert_eq!(lo, 1);
        assert_eq!(w, word(&[1, 2, 2, 3, 1, 2]));
    }

    #[test]
    fn quiddity_negates_minus_one_second_diagonal() {
        let f = frieze_from_quiddity_cycle(&word(&[1, 2, 2, 3, 1, 2, 4]), (0, 7), (0, 7)).unwrap();
        let neg = f.window().neg();
        assert_eq!(quiddity(&neg).unwrap(), quiddity(f.window()).unwrap());
    }

    #[test]
    fn quiddity_rejects_non_friezes() {
        let not_zero_diag =
            TilingWindow::from_i64_rows(0, 0, &[vec![1, 0, -1], vec![1, 1, 0], vec![1, 2, 1]])
                .unwrap();
        assert!(matches!(
            quiddity(&not_zero_diag),
            Err(Error::NotFrieze { .. })
        ));
    }

    #[test]
    fn order_must_be_a_multiple_of_the_path_length() {
        assert!(matches!(
            frieze_from_closed_path(&triangle(), 4, (0, 3), (0, 3)),
            Err(Error::NotFrieze { .. })
        ));
        let open = ItinerarySpec::finite(&[2, 2]).realize(0, 3).unwrap();
        assert!(matches!(
            frieze_from_closed_path(&open, 3, (0, 3), (0, 3)),
            Err(Error::NotClosed)
        ));
    }

    #[test]
    fn quiddity_realizability_window_checks() {
        assert!(!quiddity_realizable(&word(&[8, 8, 1, 2, 2, 3, 1, 2, 8, 8])).unwrap());
        assert!(quiddity_realizable(&word(&[2, 2, 2, 2, 2, 2])).unwrap());
        assert!(quiddity_realizable(&word(&[3, 3, 1, 2, 3, 3])).unwrap());
        assert!(quiddity_realizable(&word(&[1, 0, 1])).is_err());
    }

    #[test]
    fn antiperiodic_tiling_of_two_triangles() {
        // gamma is the fundamental triangle; delta is a disjoint
        // clockwise triangle deep in the negative arc.
        let gamma = triangle();
        let dv = [q("-1"), q("-3/2"), q("-2"), q("-1")];
        let delta = FareyPath::lift(&dv, 0).unwrap();
        let w = antiperiodic_tiling(&gamma, &delta, (0, 7), (0, 7)).unwrap();
        assert!(w.is_sl2().unwrap() && w.is_tame().unwrap());
        // Antiperiodicity in both directions with r = s = 3.
        for i in 0..=4i64 {
            for j in 0..=7i64 {
                assert_eq!(*w.entry(i + 3, j).unwrap(), -w.entry(i, j).unwrap());
            }
        }
        for i in 0..=7i64 {
            for j in 0..=4i64 {
                assert_eq!(*w.entry(i, j + 3).unwrap(), -w.entry(i, j).unwrap());
            }
        }
        // The normalized block is positive.
        for i in 1..=3i64 {
            for j in 1..=3i64 {
                assert!(w.entry(i, j).unwrap().is_positive(), "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn antiperiodic_tiling_rejects_intersecting_pairs() {
        let gamma = triangle();
        let dv = [q("inf"), q("1"), q("0"), q("inf")];
        let delta = FareyPath::lift(&dv, 0).unwrap();
        assert!(matches!(
            antiperiodic_tiling(&gamma, &delta, (0, 3), (0, 3)),
            Err(Error::PathsIntersect(_))
        ));
    }
}
