//! Paths in the Farey graph, their integer lifts, and itineraries.
//!
//! A path is a sequence of vertices with consecutive vertices adjacent.
//! Each vertex v_i is lifted to an integer vector (a_i, b_i) with
//! v_i = a_i/b_i such that consecutive lifts satisfy
//!
//! ```text
//! a_i * b_{i+1} - a_{i+1} * b_i = 1.
//! ```
//!
//! Such a lift exists for every path and is unique up to one global sign.
//! The itinerary records the turn taken at each interior vertex: e_i is the
//! image of v_{i+1} under the element g_i of SL2(Z) with g_i(v_{i-1}) = 0
//! and g_i(v_i) = inf. In terms of lifts, e_i = a_{i-1} b_{i+1} - a_{i+1} b_{i-1},
//! and the lifts obey the two-term recurrence
//!
//! ```text
//! lift_{i+1} = e_i * lift_i - lift_{i-1}.
//! ```

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::circular::clockwise3;
use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::rational::ExtRational;

/// An integer lift (a, b) of a vertex a/b. Always a primitive vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Lift {
    pub a: BigInt,
    pub b: BigInt,
}

impl Lift {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Lift {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn vertex(&self) -> ExtRational {
        ExtRational::new(self.a.clone(), self.b.clone()).expect("lift is a nonzero vector")
    }

    pub fn neg(&self) -> Lift {
        Lift {
            a: -&self.a,
            b: -&self.b,
        }
    }

    /// det [[a, a'], [b, b']] = a b' - a' b.
    pub fn det_with(&self, other: &Lift) -> BigInt {
        &self.a * &other.b - &other.a * &self.b
    }
}

impl fmt::Debug for Lift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// A window of a path in the Farey graph: lifts for indices
/// start, start + 1, ..., start + len - 1, with unit step determinants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FareyPath {
    start: i64,
    lifts: Vec<Lift>,
}

impl FareyPath {
    /// Lifts a vertex sequence, with indices start, start+1, ...
    ///
    /// The global sign is fixed at index 0 when the window contains it,
    /// otherwise at the first vertex: the b-coordinate there is positive,
    /// falling back to (1, 0) for inf. Errors name the first index whose
    /// step is not a Farey edge.
    pub fn lift(vertices: &[ExtRational], start: i64) -> Result<FareyPath> {
        let mut lifts: Vec<Lift> = Vec::with_capacity(vertices.len());
        for (k, v) in vertices.iter().enumerate() {
            let cand = Lift {
                a: v.numerator().clone(),
                b: v.denominator().clone(),
            };
            match lifts.last() {
                None => lifts.push(cand),
                Some(prev) => {
                    let d = prev.det_with(&cand);
                    if d.is_one() {
                        lifts.push(cand);
                    } else if (-&d).is_one() {
                        lifts.push(cand.neg());
                    } else {
                        return Err(Error::PathStep {
                            index: start + k as i64 - 1,
                        });
                    }
                }
            }
        }
        let mut path = FareyPath { start, lifts };
        path.fix_anchor_sign();
        Ok(path)
    }

    /// Wraps precomputed lifts; validates the unit step determinants.
    pub fn from_lifts(lifts: Vec<Lift>, start: i64) -> Result<FareyPath> {
        for (k, pair) in lifts.windows(2).enumerate() {
            if !pair[0].det_with(&pair[1]).is_one() {
                return Err(Error::PathStep {
                    index: start + k as i64,
                });
            }
        }
        for l in &lifts {
            if l.a.is_zero() && l.b.is_zero() {
                return Err(Error::InvalidVertex);
            }
        }
        Ok(FareyPath { start, lifts })
    }

    pub fn empty() -> FareyPath {
        FareyPath {
            start: 0,
            lifts: Vec::new(),
        }
    }

    fn fix_anchor_sign(&mut self) {
        if self.lifts.is_empty() {
            return;
        }
        let anchor = if self.start <= 0 && 0 <= self.end() {
            0
        } else {
            self.start
        };
        let l = self.lift_at(anchor).unwrap();
        let flip = l.b.is_negative() || (l.b.is_zero() && l.a.is_negative());
        if flip {
            for l in &mut self.lifts {
                *l = l.neg();
            }
        }
    }

    pub fn len(&self) -> usize {
        self.lifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lifts.is_empty()
    }

    /// Index of the first vertex in the window.
    pub fn start(&self) -> i64 {
        self.start
    }

    /// Index of the last vertex in the window.
    pub fn end(&self) -> i64 {
        self.start + self.lifts.len() as i64 - 1
    }

    pub fn lift_at(&self, i: i64) -> Result<&Lift> {
        if self.lifts.is_empty() || i < self.start || i > self.end() {
            return Err(Error::IndexOutOfWindow {
                index: i,
                lo: self.start,
                hi: self.end(),
            });
        }
        Ok(&self.lifts[(i - self.start) as usize])
    }

    pub fn vertex_at(&self, i: i64) -> Result<ExtRational> {
        Ok(self.lift_at(i)?.vertex())
    }

    pub fn vertices(&self) -> Vec<ExtRational> {
        self.lifts.iter().map(Lift::vertex).collect()
    }

    pub fn lifts(&self) -> &[Lift] {
        &self.lifts
    }

    /// True when the window lists a closed path: at least three vertices
    /// and the last vertex equals the first.
    pub fn is_closed(&self) -> bool {
        self.lifts.len() >= 3
            && self.lifts.first().unwrap().vertex() == self.lifts.last().unwrap().vertex()
    }

    /// For a closed path of length n, the sign eps with lift_n = eps * lift_0.
    pub fn period_sign(&self) -> Result<i8> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let first = self.lifts.first().unwrap();
        let last = self.lifts.last().unwrap();
        if first == last {
            Ok(1)
        } else {
            debug_assert_eq!(first.neg(), *last);
            Ok(-1)
        }
    }

    /// Lift at an arbitrary index for a closed path, extending the window
    /// periodically with the sign from `period_sign`. Inside the window
    /// this works for any path.
    pub fn lift_extended(&self, i: i64) -> Result<Lift> {
        if !self.lifts.is_empty() && i >= self.start && i <= self.end() {
            return Ok(self.lift_at(i)?.clone());
        }
        if !self.is_closed() {
            return Err(Error::IndexOutOfWindow {
                index: i,
                lo: self.start,
                hi: self.end(),
            });
        }
        let n = self.lifts.len() as i64 - 1;
        let eps = self.period_sign()?;
        let k = (i - self.start).div_euclid(n);
        let r = (i - self.start).rem_euclid(n);
        let base = self.lifts[r as usize].clone();
        if eps == -1 && k.rem_euclid(2) == 1 {
            Ok(base.neg())
        } else {
            Ok(base)
        }
    }

    /// Itinerary over the interior of the window, returned with the index
    /// of its first entry: entries e_i for i = start+1, ..., end-1.
    pub fn itinerary(&self) -> Result<(i64, Vec<BigInt>)> {
        if self.lifts.len() < 3 {
            return Err(Error::PathTooShort {
                need: 3,
                got: self.lifts.len(),
            });
        }
        let word = self
            .lifts
            .windows(3)
            .map(|w| w[0].det_with(&w[2]))
            .collect();
        Ok((self.start + 1, word))
    }

    /// One full period e_{start+1}, ..., e_{start+n} of the cyclic
    /// itinerary of a closed path of length n.
    pub fn itinerary_period(&self) -> Result<Vec<BigInt>> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let n = self.lifts.len() - 1;
        let mut word = Vec::with_capacity(n);
        for i in (self.start + 1)..=(self.start + n as i64) {
            let prev = self.lift_extended(i - 1)?;
            let next = self.lift_extended(i + 1)?;
            word.push(prev.det_with(&next));
        }
        Ok(word)
    }

    /// The shift map: the result lists the same lifts at indices moved
    /// forward by p, so the new vertex at index i is the old one at i - p.
    pub fn shifted(&self, p: i64) -> FareyPath {
        FareyPath {
            start: self.start + p,
            lifts: self.lifts.clone(),
        }
    }

    /// Applies an element of SL2(Z) to every lift.
    pub fn transformed(&self, g: &Mat2) -> FareyPath {
        let lifts = self
            .lifts
            .iter()
            .map(|l| {
                let (a, b) = g.apply(&l.a, &l.b);
                Lift { a, b }
            })
            .collect();
        FareyPath {
            start: self.start,
            lifts,
        }
    }

    /// Restricts the window to [lo, hi].
    pub fn slice(&self, lo: i64, hi: i64) -> Result<FareyPath> {
        if lo > hi || lo < self.start || hi > self.end() {
            return Err(Error::IndexOutOfWindow {
                index: lo.min(hi),
                lo: self.start,
                hi: self.end(),
            });
        }
        let a = (lo - self.start) as usize;
        let b = (hi - self.start) as usize;
        Ok(FareyPath {
            start: lo,
            lifts: self.lifts[a..=b].to_vec(),
        })
    }

    /// True when the whole window is in clockwise circular order.
    pub fn is_clockwise(&self) -> Result<bool> {
        is_clockwise(&self.vertices())
    }

    /// Simple closed: closed, and all vertices except the repeated
    /// endpoint are pairwise distinct.
    pub fn is_simple_closed(&self) -> bool {
        if !self.is_closed() {
            return false;
        }
        let vs = self.vertices();
        distinct(&vs[..vs.len() - 1])
    }

    /// Clockwise simple closed: a simple closed path whose cyclic vertex
    /// sequence is in clockwise order.
    pub fn is_clockwise_simple_closed(&self) -> Result<bool> {
        if !self.is_simple_closed() {
            return Ok(false);
        }
        let vs = self.vertices();
        is_clockwise(&vs[..vs.len() - 1])
    }

    /// True for a closed path each of whose consecutive vertex triples,
    /// taken cyclically, is clockwise. Repeated vertices are allowed as
    /// long as no triple degenerates, so paths winding several times
    /// around a cycle qualify.
    pub fn is_locally_clockwise(&self) -> Result<bool> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let n = self.lifts.len() as i64 - 1;
        for i in (self.start + 1)..=(self.start + n) {
            let a = self.lift_extended(i - 1)?.vertex();
            let b = self.lift_at(i)?.vertex();
            let c = self.lift_extended(i + 1)?.vertex();
            match clockwise3(&a, &b, &c) {
                Ok(true) => {}
                Ok(false) | Err(Error::RepeatedVertex(_)) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
        Ok(true)
    }
}

impl fmt::Display for FareyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.lifts.iter().map(|l| l.vertex().to_string()).collect();
        write!(f, "<{}>", vs.join(", "))
    }
}

fn distinct(vs: &[ExtRational]) -> bool {
    let mut seen = HashSet::new();
    vs.iter().all(|v| seen.insert(v.clone()))
}

/// True when the vertices are pairwise distinct and listed in clockwise
/// circular order.
///
/// Uses the linear-time reduction: anchor at the first vertex and check
/// that each later consecutive pair is clockwise as seen from the anchor.
/// That is equivalent to every triple being clockwise because cutting the
/// circle at the anchor turns the circular order into a total order.
/// Errors on repeated vertices.
pub fn is_clockwise(vertices: &[ExtRational]) -> Result<bool> {
    for (k, v) in vertices.iter().enumerate() {
        if vertices[..k].contains(v) {
            return Err(Error::RepeatedVertex(v.clone()));
        }
    }
    if vertices.len() < 3 {
        return Ok(true);
    }
    let anchor = &vertices[0];
    for w in vertices[1..].windows(2) {
        if !clockwise3(anchor, &w[0], &w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An itinerary with eventually periodic tails: `core` occupies indices
/// 1, ..., core.len(); `right_period` repeats beyond the core and
/// `left_period` repeats before index 1. Either period may be empty, in
/// which case the spec only defines a finite stretch on that side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItinerarySpec {
    pub left_period: Vec<BigInt>,
    pub core: Vec<BigInt>,
    pub right_period: Vec<BigInt>,
}

impl ItinerarySpec {
    pub fn finite(core: &[i64]) -> Self {
        ItinerarySpec {
            left_period: Vec::new(),
            core: core.iter().map(|&x| BigInt::from(x)).collect(),
            right_period: Vec::new(),
        }
    }

    pub fn periodic(left: &[i64], core: &[i64], right: &[i64]) -> Self {
        let conv = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect();
        ItinerarySpec {
            left_period: conv(left),
            core: conv(core),
            right_period: conv(right),
        }
    }

    /// The itinerary entry e_i.
    pub fn entry(&self, i: i64) -> Result<BigInt> {
        let m = self.core.len() as i64;
        if i >= 1 && i <= m {
            return Ok(self.core[(i - 1) as usize].clone());
        }
        if i > m {
            if self.right_period.is_empty() {
                return Err(Error::MissingPeriod { side: "right" });
            }
            let k = ((i - m - 1) as usize) % self.right_period.len();
            return Ok(self.right_period[k].clone());
        }
        if self.left_period.is_empty() {
            return Err(Error::MissingPeriod { side: "left" });
        }
        let len = self.left_period.len() as i64;
        let k = (i - 1).rem_euclid(len) as usize;
        Ok(self.left_period[k].clone())
    }

    /// Realizes the itinerary as a path window over indices [lo, hi].
    ///
    /// The path is seeded at v_0 = 0 with lift (0, 1) and v_1 = inf with
    /// lift (-1, 0) and extended both ways by the two-term recurrence.
    /// Every itinerary arises this way; any other realization is the image
    /// of this one under a unique element of SL2(Z).
    pub fn realize(&self, lo: i64, hi: i64) -> Result<FareyPath> {
        if lo > hi {
            return Err(Error::Other(format!("empty window [{lo}, {hi}]")));
        }
        if hi - lo + 1 < 2 {
            return Err(Error::PathTooShort {
                need: 2,
                got: (hi - lo + 1) as usize,
            });
        }
        let bot = lo.min(0);
        let top = hi.max(1);
        let seed0 = Lift::new(0, 1);
        let seed1 = Lift::new(-1, 0);
        let mut fwd: Vec<Lift> = vec![seed0.clone(), seed1.clone()];
        for i in 1..top {
            let e = self.entry(i)?;
            let prev = &fwd[(i - 1) as usize];
            let cur = &fwd[i as usize];
            fwd.push(Lift {
                a: &e * &cur.a - &prev.a,
                b: &e * &cur.b - &prev.b,
            });
        }
        let mut bwd: Vec<Lift> = Vec::new(); // lifts at indices -1, -2, ...
        {
            let mut next = seed1; // lift at i+1
            let mut cur = seed0; // lift at i
            let mut i = 0i64;
            while i > bot {
                let e = self.entry(i)?;
                let prev = Lift {
                    a: &e * &cur.a - &next.a,
                    b: &e * &cur.b - &next.b,
                };
                bwd.push(prev.clone());
                next = cur;
                cur = prev;
                i -= 1;
            }
        }
        let mut lifts = Vec::with_capacity((top - bot + 1) as usize);
        for i in bot..=top {
            if i < 0 {
                lifts.push(bwd[(-i - 1) as usize].clone());
            } else {
                lifts.push(fwd[i as usize].clone());
            }
        }
        let path = FareyPath { start: bot, lifts };
        path.slice(lo, hi)
    }

    /// Realizes a word as a closed path: the word is read as one full
    /// period e_1, ..., e_n of the cyclic itinerary, and the result lists
    /// v_0, ..., v_n with v_n = v_0.
    ///
    /// Errors when the path fails to close or when the final entry is
    /// inconsistent with the turn the closed path actually takes at v_0.
    pub fn realize_closed(word: &[BigInt]) -> Result<FareyPath> {
        let n = word.len();
        if n < 2 {
            return Err(Error::NotQuiddityCycle {
                reason: format!("period has length {n}, need at least 2"),
            });
        }
        let spec = ItinerarySpec {
            left_period: Vec::new(),
            core: word[..n - 1].to_vec(),
            right_period: Vec::new(),
        };
        let path = spec.realize(0, n as i64)?;
        if !path.is_closed() {
            return Err(Error::NotQuiddityCycle {
                reason: format!("path does not close: v_{n} = {}", path.vertex_at(n as i64)?),
            });
        }
        // The turn at the closing vertex is determined by the path; it must
        // reproduce the final entry of the word.
        let eps = path.period_sign()?;
        let prev = path.lift_at(n as i64 - 1)?;
        let next1 = path.lift_at(1)?;
        let next = if eps == -1 {
            next1.neg()
        } else {
            next1.clone()
        };
        let e_n = prev.det_with(&next);
        if e_n != word[n - 1] {
            return Err(Error::NotQuiddityCycle {
                reason: format!("closing turn is {e_n}, word says {}", word[n - 1]),
            });
        }
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    fn path(vs: &[&str]) -> FareyPath {
        let vs: Vec<ExtRational> = vs.iter().map(|s| q(s)).collect();
        FareyPath::lift(&vs, 0).unwrap()
    }

    fn word(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn lift_two_vertex_path() {
        let p = path(&["0", "inf"]);
        assert_eq!(*p.lift_at(0).unwrap(), Lift::new(0, 1));
        assert_eq!(*p.lift_at(1).unwrap(), Lift::new(-1, 0));
    }

    #[test]
    fn lift_integer_path_matches_closed_form() {
        // The path <..., -2, -1, 0, 1, 2, ...> lifts to a_i = (-1)^i i,
        // b_i = (-1)^i when anchored at index 0.
        let vs: Vec<ExtRational> = (-3..=3).map(ExtRational::from_integer).collect();
        let p = FareyPath::lift(&vs, -3).unwrap();
        for i in -3i64..=3 {
            let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            assert_eq!(
                *p.lift_at(i).unwrap(),
                Lift::new(sign * i, sign),
                "index {i}"
            );
        }
    }

    #[test]
    fn lift_rejects_non_adjacent_steps() {
        let vs = [q("0"), q("2/5"), q("1/2")];
        match FareyPath::lift(&vs, 5) {
            Err(Error::PathStep { index }) => assert_eq!(index, 5),
            other => panic!("expected PathStep, got {other:?}"),
        }
    }

    #[test]
    fn itinerary_of_elementary_paths() {
        let (i0, w) = path(&["0", "inf", "7"]).itinerary().unwrap();
        assert_eq!((i0, w), (1, word(&[7])));
        let (i0, w) = path(&["0", "inf", "-3"]).itinerary().unwrap();
        assert_eq!((i0, w), (1, word(&[-3])));
    }

    #[test]
    fn itinerary_matches_edge_normalizer_definition() {
        use crate::matrix::edge_normalizer;
        let p = path(&["1/2", "0", "-1", "inf", "-2", "-5/3"]);
        let (i0, w) = p.itinerary().unwrap();
        assert_eq!(i0, 1);
        for (k, e) in w.iter().enumerate() {
            let i = i0 + k as i64;
            let g =
                edge_normalizer(&p.vertex_at(i - 1).unwrap(), &p.vertex_at(i).unwrap()).unwrap();
            let img = g.mobius(&p.vertex_at(i + 1).unwrap());
            assert_eq!(img, ExtRational::new(e.clone(), 1).unwrap(), "entry at {i}");
        }
    }

    #[test]
    fn realize_elementary_itineraries() {
        let p = ItinerarySpec::finite(&[5]).realize(0, 2).unwrap();
        assert_eq!(p.vertices(), vec![q("0"), q("inf"), q("5")]);
        let p = ItinerarySpec::finite(&[2, 2, 2]).realize(0, 4).unwrap();
        assert_eq!(
            p.vertices(),
            vec![q("0"), q("inf"), q("2"), q("3/2"), q("4/3")]
        );
    }

    #[test]
    fn realize_and_itinerary_round_trip() {
        let spec = ItinerarySpec::periodic(&[3, -1], &[2, 0, -4, 1], &[5]);
        let p = spec.realize(-6, 9).unwrap();
        let (i0, w) = p.itinerary().unwrap();
        assert_eq!(i0, -5);
        for (k, e) in w.iter().enumerate() {
            let i = i0 + k as i64;
            assert_eq!(*e, spec.entry(i).unwrap(), "entry at {i}");
        }
    }

    #[test]
    fn realize_closed_heptagon() {
        let p = ItinerarySpec::realize_closed(&word(&[1, 2, 2, 3, 1, 2, 4])).unwrap();
        assert!(p.is_closed());
        assert_eq!(p.period_sign().unwrap(), -1);
        assert!(p.is_clockwise_simple_closed().unwrap());
        assert_eq!(p.itinerary_period().unwrap(), word(&[1, 2, 2, 3, 1, 2, 4]));
    }

    #[test]
    fn realize_closed_rejects_open_words() {
        assert!(matches!(
            ItinerarySpec::realize_closed(&word(&[2, 2])),
            Err(Error::NotQuiddityCycle { .. })
        ));
        // Closes as a path but the final turn disagrees with the word.
        assert!(matches!(
            ItinerarySpec::realize_closed(&word(&[1, 1, 2])),
            Err(Error::NotQuiddityCycle { .. })
        ));
    }

    #[test]
    fn clockwise_windows() {
        assert!(path(&["inf", "2", "1", "0"]).is_clockwise().unwrap());
        assert!(!path(&["0", "1", "inf"]).is_clockwise().unwrap());
        assert!(path(&["0", "inf", "2", "3/2"]).is_clockwise().unwrap());
        assert!(matches!(
            is_clockwise(&[q("0"), q("inf"), q("0")]),
            Err(Error::RepeatedVertex(_))
        ));
    }

    #[test]
    fn simple_closed_predicates() {
        let tri = path(&["inf", "1", "0", "inf"]);
        assert!(tri.is_simple_closed());
        assert!(tri.is_clockwise_simple_closed().unwrap());
        let anti = path(&["inf", "0", "1", "inf"]);
        assert!(anti.is_simple_closed());
        assert!(!anti.is_clockwise_simple_closed().unwrap());
        let hexagon = path(&["inf", "2", "1", "inf", "0", "-1", "inf"]);
        assert!(hexagon.is_closed());
        assert!(!hexagon.is_simple_closed());
    }

    #[test]
    fn locally_clockwise_windings() {
        let doubly_wound = path(&["inf", "1", "0", "inf", "1", "0", "inf"]);
        assert!(doubly_wound.is_locally_clockwise().unwrap());
        let hexagon = path(&["inf", "2", "1", "inf", "0", "-1", "inf"]);
        assert!(!hexagon.is_locally_clockwise().unwrap());
        let triangle = path(&["inf", "1", "0", "inf"]);
        assert!(triangle.is_locally_clockwise().unwrap());
    }

    #[test]
    fn shift_moves_indices() {
        let p = path(&["0", "inf", "2"]).shifted(4);
        assert_eq!(p.start(), 4);
        assert_eq!(p.vertex_at(6).unwrap(), q("2"));
    }

    #[test]
    fn itinerary_is_sl2_invariant() {
        let p = ItinerarySpec::finite(&[2, -1, 3, 0, 1])
            .realize(0, 6)
            .unwrap();
        let g = Mat2::new(3, 2, 1, 1).unwrap();
        let (i0, w) = p.itinerary().unwrap();
        let (j0, u) = p.transformed(&g).itinerary().unwrap();
        assert_eq!((i0, w), (j0, u));
    }
}
