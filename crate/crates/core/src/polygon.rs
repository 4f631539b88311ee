//! Triangulated polygons in the Farey graph and the Conway-Coxeter
//! counting that links them to positive friezes.
//!
//! A clockwise simple closed path of length n spans an ideal polygon
//! whose sides and diagonals are the Farey edges among its vertices.
//! Those edges cut the polygon into exactly n - 2 triangles, and the
//! number of triangles at each vertex is the quiddity sequence of a
//! positive frieze of order n.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::frieze::{frieze_from_closed_path, FriezeOrderN};
use crate::path::{FareyPath, ItinerarySpec};
use crate::rational::ExtRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulatedPolygon {
    vertices: Vec<ExtRational>,
    triangles: Vec<[usize; 3]>,
}

impl TriangulatedPolygon {
    /// Builds a combinatorial triangulation of the labeled n-gon from
    /// its diagonal list and realizes it as a clockwise polygon in the
    /// Farey graph via its quiddity cycle.
    pub fn from_diagonals(n: usize, diagonals: &[(usize, usize)]) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadPolygon(format!(
                "a polygon needs at least 3 vertices, got {n}"
            )));
        }
        let mut ds = Vec::with_capacity(diagonals.len());
        for &(a, b) in diagonals {
            let (a, b) = (a.min(b), a.max(b));
            if b >= n || a == b {
                return Err(Error::BadPolygon(format!("bad diagonal ({a}, {b})")));
            }
            if b - a == 1 || (a == 0 && b == n - 1) {
                return Err(Error::BadPolygon(format!(
                    "({a}, {b}) is a side, not a diagonal"
                )));
            }
            if ds.contains(&(a, b)) {
                return Err(Error::BadPolygon(format!("duplicate diagonal ({a}, {b})")));
            }
            ds.push((a, b));
        }
        if ds.len() != n - 3 {
            return Err(Error::BadPolygon(format!(
                "a triangulation of an {n}-gon has {} diagonals, got {}",
                n - 3,
                ds.len()
            )));
        }
        for (k, &(a, b)) in ds.iter().enumerate() {
            for &(c, d) in &ds[k + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(Error::BadPolygon(format!(
                        "diagonals ({a}, {b}) and ({c}, {d}) cross"
                    )));
                }
            }
        }
        let adj = adjacency_from_edges(n, &ds);
        let triangles = cliques(&adj);
        if triangles.len() != n - 2 {
            return Err(Error::BadPolygon(format!(
                "expected {} triangles, found {}",
                n - 2,
                triangles.len()
            )));
        }
        let counts = counts_of(n, &triangles);
        let mut word: Vec<BigInt> = counts[1..].to_vec();
        word.push(counts[0].clone());
        let path = ItinerarySpec::realize_closed(&word)
            .map_err(|e| Error::BadPolygon(format!("triangulation does not close up: {e}")))?;
        let mut vertices = path.vertices();
        vertices.pop();
        let poly = TriangulatedPolygon {
            vertices,
            triangles,
        };
        debug_assert_eq!(poly.triangles, farey_triangles(&poly.vertices));
        Ok(poly)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices in clockwise order.
    pub fn vertices(&self) -> &[ExtRational] {
        &self.vertices
    }

    /// Triangles as sorted index triples, in lexicographic order.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Diagonals of the triangulation (triangle edges that are not
    /// polygon sides), sorted.
    pub fn diagonals(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut ds: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])])
            .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The number of triangles at each vertex, in vertex order.
    pub fn triangle_counts(&self) -> Vec<BigInt> {
        counts_of(self.n(), &self.triangles)
    }

    /// Conway-Coxeter counts from the base vertex u: zero at u, one at
    /// the endpoints of edges at u, and across each triangle the
    /// largest count is the sum of the other two.
    pub fn cc_count(&self, u: usize) -> Result<Vec<BigInt>> {
        let n = self.n();
        if u >= n {
            return Err(Error::BadPolygon(format!(
                "vertex {u} out of range for an {n}-gon"
            )));
        }
        let mut vals: Vec<Option<BigInt>> = vec![None; n];
        vals[u] = Some(BigInt::zero());
        for t in &self.triangles {
            if t.contains(&u) {
                for &v in t {
                    if v != u {
                        vals[v] = Some(BigInt::from(1));
                    }
                }
            }
        }
        loop {
            let mut changed = false;
            for t in &self.triangles {
                let known: Vec<usize> = t.iter().copied().filter(|&v| vals[v].is_some()).collect();
                if known.len() == 2 {
                    let apex = *t.iter().find(|&&v| vals[v].is_none()).unwrap();
                    let sum = vals[known[0]].clone().unwrap() + vals[known[1]].as_ref().unwrap();
                    vals[apex] = Some(sum);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let vals: Vec<BigInt> = vals
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::BadPolygon("triangulation is not connected".into()))?;
        for t in &self.triangles {
            let (a, b, c) = (&vals[t[0]], &vals[t[1]], &vals[t[2]]);
            let ok = a + b == *c || a + c == *b || b + c == *a;
            if !ok {
                return Err(Error::BadPolygon(format!(
                    "counts {a}, {b}, {c} on triangle {t:?} are inconsistent"
                )));
            }
        }
        Ok(vals)
    }
}

/// Reads the triangulated polygon off a clockwise simple closed path:
/// its triangles are the pairwise-adjacent vertex triples.
pub fn polygon_from_path(path: &FareyPath) -> Result<TriangulatedPolygon> {
    if !path.is_clockwise_simple_closed()? {
        return Err(Error::Other(
            "expected a clockwise simple closed path".into(),
        ));
    }
    let mut vertices = path.vertices();
    vertices.pop();
    let n = vertices.len();
    let triangles = farey_triangles(&vertices);
    if triangles.len() != n - 2 {
        return Err(Error::BadPolygon(format!(
            "expected {} triangles, found {}",
            n - 2,
            triangles.len()
        )));
    }
    Ok(TriangulatedPolygon {
        vertices,
        triangles,
    })
}

/// The positive frieze of order n whose quiddity is the triangle-count
/// cycle of the polygon.
pub fn positive_frieze_from_triangulation(
    poly: &TriangulatedPolygon,
    i_range: (i64, i64),
    j_range: (i64, i64),
) -> Result<FriezeOrderN> {
    let mut vs = poly.vertices().to_vec();
    vs.push(vs[0].clone());
    let path = FareyPath::lift(&vs, 0)?;
    frieze_from_closed_path(&path, poly.n() as i64, i_range, j_range)
}

/// All triangulations of the labeled n-gon, as diagonal lists. There
/// are Catalan(n - 2) of them; intended for small n.
pub fn enumerate_triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in lo + 1..hi {
            let lefts = rec(lo, k);
            let rights = rec(k, hi);
            for left in &lefts {
                for right in &rights {
                    let mut ds = left.clone();
                    ds.extend_from_slice(right);
                    if k - lo > 1 {
                        ds.push((lo, k));
                    }
                    if hi - k > 1 {
                        ds.push((k, hi));
                    }
                    out.push(ds);
                }
            }
        }
        out
    }
    assert!(n >= 3);
    rec(0, n - 1)
        .into_iter()
        .map(|mut ds| {
            ds.sort_unstable();
            ds
        })
        .collect()
}

fn adjacency_from_edges(n: usize, diagonals: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        let j = (i + 1) % n;
        adj[i][j] = true;
        adj[j][i] = true;
    }
    for &(a, b) in diagonals {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

fn cliques(adj: &[Vec<bool>]) -> Vec<[usize; 3]> {
    let n = adj.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !adj[i][j] {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for k in j + 1..n {
                if adj[i][k] && adj[j][k] {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

fn farey_triangles(vertices: &[ExtRational]) -> Vec<[usize; 3]> {
    let n = vertices.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if vertices[i].is_adjacent(&vertices[j]) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    cliques(&adj)
}

fn counts_of(n: usize, triangles: &[[usize; 3]]) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); n];
    for t in triangles {
        for &v in t {
            counts[v] += 1u32;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn triangle_polygon() {
        let poly = TriangulatedPolygon::from_diagonals(3, &[]).unwrap();
        assert_eq!(poly.triangles(), &[[0, 1, 2]]);
        assert_eq!(poly.triangle_counts(), ints(&[1, 1, 1]));
        assert_eq!(poly.cc_count(0).unwrap(), ints(&[0, 1, 1]));
    }

    #[test]
    fn pentagon_fan_counts() {
        let poly = TriangulatedPolygon::from_diagonals(5, &[(0, 2), (0, 3)]).unwrap();
        assert_eq!(poly.triangle_counts(), ints(&[3, 1, 2, 2, 1]));
        assert_eq!(poly.diagonals(), vec![(0, 2), (0, 3)]);
        assert_eq!(poly.cc_count(0).unwrap(), ints(&[0, 1, 1, 1, 1]));
        assert_eq!(poly.cc_count(1).unwrap(), ints(&[1, 0, 1, 2, 3]));
    }

    #[test]
    fn from_diagonals_validation() {
        assert!(TriangulatedPolygon::from_diagonals(5, &[(0, 2)]).is_err());
        assert!(TriangulatedPolygon::from_diagonals(5, &[(0, 2), (1, 3)]).is_err());
        assert!(TriangulatedPolygon::from_diagonals(5, &[(0, 2), (0, 2)]).is_err());
        assert!(TriangulatedPolygon::from_diagonals(5, &[(0, 1), (2, 4)]).is_err());
        assert!(TriangulatedPolygon::from_diagonals(5, &[(0, 2), (3, 9)]).is_err());
    }

    #[test]
    fn polygon_round_trips_through_its_path() {
        let poly = TriangulatedPolygon::from_diagonals(6, &[(0, 2), (2, 4), (0, 4)]).unwrap();
        let mut vs = poly.vertices().to_vec();
        vs.push(vs[0].clone());
        let path = FareyPath::lift(&vs, 0).unwrap();
        let again = polygon_from_path(&path).unwrap();
        assert_eq!(again, poly);
    }

    #[test]
    fn counts_are_deltas() {
        let poly =
            TriangulatedPolygon::from_diagonals(7, &[(0, 2), (0, 3), (3, 5), (3, 6)]).unwrap();
        for u in 0..poly.n() {
            let counts = poly.cc_count(u).unwrap();
            for (v, count) in counts.iter().enumerate() {
                assert_eq!(*count, poly.vertices()[u].delta(&poly.vertices()[v]));
            }
        }
    }

    #[test]
    fn frieze_of_a_triangulation_is_positive() {
        let poly = TriangulatedPolygon::from_diagonals(6, &[(1, 3), (1, 4), (4, 0)]).unwrap();
        let n = poly.n() as i64;
        let f = positive_frieze_from_triangulation(&poly, (0, n), (0, n)).unwrap();
        assert!(f.is_positive().unwrap());
        let mut quiddity = f.quiddity_cycle().unwrap();
        quiddity.rotate_right(1);
        assert_eq!(quiddity, poly.triangle_counts());
    }

    #[test]
    fn catalan_counts() {
        for (n, expect) in [(3, 1), (4, 2), (5, 5), (6, 14), (7, 42)] {
            let all = enumerate_triangulations(n);
            assert_eq!(all.len(), expect, "n = {n}");
            for ds in &all {
                TriangulatedPolygon::from_diagonals(n, ds).unwrap();
            }
        }
    }
}
