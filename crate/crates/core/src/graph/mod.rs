//! Simple undirected graphs, standard families and structural predicates.

mod distance;
mod enumerate;
mod graph6;

pub use distance::{bfs_distances, DistMatrix};
pub use enumerate::{connected_count, enumerate_connected, MAX_ENUMERATION_ORDER};
pub use graph6::{from_graph6, to_graph6};

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::SquareMatrix;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are kept in canonical order: pairs `(i, j)` with `i < j`, sorted
/// lexicographically. Incidence-matrix columns, line-graph vertices and
/// subdivision vertices all follow this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints; an empty vertex set is rejected as well.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut canon = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_canonical(n, canon))
    }

    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(a, b) in &edges {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        Graph {
            n,
            neighbors,
            edges,
        }
    }

    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, [])
    }

    pub fn complete(n: usize) -> Result<Self> {
        positive("complete", n)?;
        Self::from_edges(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))))
    }

    /// `K_{a,b}`: part sizes `a` then `b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        positive("complete_bipartite", a)?;
        positive("complete_bipartite", b)?;
        Self::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        positive("path", n)?;
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `K_{1,n-1}` with the centre at vertex 0.
    pub fn star(n: usize) -> Result<Self> {
        positive("star", n)?;
        Self::from_edges(n, (1..n).map(|i| (0, i)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].binary_search(&b).is_ok()
    }

    /// Index of edge `{a, b}` in canonical order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Common degree if every vertex has the same degree.
    pub fn is_regular(&self) -> Option<usize> {
        let r = self.degree(0);
        self.neighbors.iter().all(|nb| nb.len() == r).then_some(r)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(a, b)| {
            let (na, nb) = (&self.neighbors[a], &self.neighbors[b]);
            let (mut i, mut j) = (0, 0);
            while i < na.len() && j < nb.len() {
                match na[i].cmp(&nb[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap_or(0);
            for &w in &self.neighbors[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_from(0).iter().all(Option::is_some)
    }

    /// Some vertex not reachable from vertex 0, if any.
    pub(crate) fn unreachable_from_zero(&self) -> Option<usize> {
        self.bfs_from(0).iter().position(Option::is_none)
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> SquareMatrix<i64> {
        let mut a = SquareMatrix::zeros(self.n);
        for &(i, j) in &self.edges {
            a[(i, j)] = 1;
            a[(j, i)] = 1;
        }
        a
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let edges = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j))
            .collect();
        Self::from_canonical(n, edges)
    }

    /// Line graph; vertex `k` is the `k`-th canonical edge.
    pub fn line_graph(&self) -> Result<Graph> {
        self.require_edges("line graph")?;
        let m = self.size();
        let mut edges = Vec::new();
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            for (l, &(c, d)) in self.edges.iter().enumerate().skip(k + 1) {
                if a == c || a == d || b == c || b == d {
                    edges.push((k, l));
                }
            }
        }
        Ok(Self::from_canonical(m, edges))
    }

    pub fn incidence(&self) -> Result<IncidenceMatrix> {
        self.require_edges("incidence matrix")?;
        Ok(IncidenceMatrix {
            rows: self.n,
            edges: self.edges.clone(),
        })
    }

    pub(crate) fn require_edges(&self, what: &'static str) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::Edgeless(what))
        } else {
            Ok(())
        }
    }

    /// Relabelled copy with every vertex shifted by `offset` inside a graph
    /// of `total` vertices. Used by the union and join builders.
    pub(crate) fn shifted_edges(&self, offset: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges
            .iter()
            .map(move |&(a, b)| (a + offset, b + offset))
    }
}

fn positive(kind: &str, n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!(
            "{kind} needs a positive size"
        )))
    } else {
        Ok(())
    }
}

/// Disjoint union with vertex blocks in list order.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    if gs.is_empty() {
        return Err(Error::InvalidParameter(
            "disjoint union of an empty list".into(),
        ));
    }
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in gs {
        edges.extend(g.shifted_edges(offset));
        offset += g.order();
    }
    // Blocks are appended in increasing offset, so canonical order holds.
    Ok(Graph::from_canonical(offset, edges))
}

/// Vertex-by-edge 0/1 incidence matrix; columns follow canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    edges: Vec<(usize, usize)>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.edges.len()
    }

    pub fn get(&self, vertex: usize, edge: usize) -> u8 {
        let (a, b) = self.edges[edge];
        u8::from(vertex == a || vertex == b)
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|v| (0..self.cols()).map(|e| self.get(v, e)).collect())
            .collect()
    }
}

/// The named families accepted by [`StandardGraph::build`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
}

impl StandardGraph {
    pub fn build(self) -> Result<Graph> {
        match self {
            StandardGraph::Complete(n) => Graph::complete(n),
            StandardGraph::CompleteBipartite(a, b) => Graph::complete_bipartite(a, b),
            StandardGraph::Cycle(n) => Graph::cycle(n),
            StandardGraph::Path(n) => Graph::path(n),
            StandardGraph::Star(n) => Graph::star(n),
        }
    }
}

impl fmt::Display for StandardGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardGraph::Complete(n) => write!(f, "complete:{n}"),
            StandardGraph::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            StandardGraph::Cycle(n) => write!(f, "cycle:{n}"),
            StandardGraph::Path(n) => write!(f, "path:{n}"),
            StandardGraph::Star(n) => write!(f, "star:{n}"),
        }
    }
}

/// Parses `kind:params`, e.g. `complete:4` or `complete_bipartite:2,3`.
impl FromStr for StandardGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("expected kind:params, got {s:?}")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad size {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = |nums: &[usize]| match nums {
            [n] => Ok(*n),
            _ => Err(Error::InvalidParameter(format!("{kind} takes one size"))),
        };
        match kind {
            "complete" => Ok(StandardGraph::Complete(one(&nums)?)),
            "cycle" => Ok(StandardGraph::Cycle(one(&nums)?)),
            "path" => Ok(StandardGraph::Path(one(&nums)?)),
            "star" => Ok(StandardGraph::Star(one(&nums)?)),
            "complete_bipartite" => match nums[..] {
                [a, b] => Ok(StandardGraph::CompleteBipartite(a, b)),
                _ => Err(Error::InvalidParameter(
                    "complete_bipartite takes two sizes".into(),
                )),
            },
            _ => Err(Error::InvalidParameter(format!(
                "unknown graph kind {kind:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_families() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
        assert!((0..4).all(|i| (0..4).all(|j| i == j || k4.has_edge(i, j))));

        let k11 = Graph::complete_bipartite(1, 1).unwrap();
        assert_eq!((k11.order(), k11.size()), (2, 1));

        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.size(), 6);
        assert!((0..6).all(|i| c6.has_edge(i, (i + 1) % 6)));

        assert_eq!(Graph::star(5).unwrap().degrees(), vec![4, 1, 1, 1, 1]);
        assert_eq!(Graph::path(1).unwrap().size(), 0);
    }

    #[test]
    fn generator_errors() {
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete(0).is_err());
        assert!(Graph::complete_bipartite(0, 3).is_err());
        assert!(Graph::path(0).is_err());
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn parse_standard() {
        assert_eq!(
            "complete:4".parse::<StandardGraph>().unwrap(),
            StandardGraph::Complete(4)
        );
        assert_eq!(
            "complete_bipartite:2,3".parse::<StandardGraph>().unwrap(),
            StandardGraph::CompleteBipartite(2, 3)
        );
        assert!("cycle".parse::<StandardGraph>().is_err());
        assert!("wheel:5".parse::<StandardGraph>().is_err());
        assert!("complete_bipartite:2".parse::<StandardGraph>().is_err());
        let s = StandardGraph::Star(6);
        assert_eq!(s.to_string().parse::<StandardGraph>().unwrap(), s);
    }

    #[test]
    fn unions() {
        let c3 = Graph::cycle(3).unwrap();
        let u = disjoint_union(&[c3.clone(), c3.clone()]).unwrap();
        assert_eq!((u.order(), u.size()), (6, 6));
        assert!(!u.is_connected());

        let k2 = Graph::complete(2).unwrap();
        assert_eq!(disjoint_union(std::slice::from_ref(&k2)).unwrap(), k2);

        let u = disjoint_union(&[c3, Graph::cycle(4).unwrap()]).unwrap();
        assert_eq!((u.order(), u.size()), (7, 7));
        assert!(disjoint_union(&[]).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::complete(4).unwrap().complement().size(), 0);
        let c4c = Graph::cycle(4).unwrap().complement();
        assert_eq!(c4c.edges(), &[(0, 2), (1, 3)]);
        assert!(!c4c.is_connected());
    }

    #[test]
    fn self_complementary_pentagon() {
        // Oracle: C5's complement is the 5-cycle 0-2-4-1-3-0.
        let c5c = Graph::cycle(5).unwrap().complement();
        let expected = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5c, expected);
        assert_eq!(c5c.is_regular(), Some(2));
        assert!(c5c.is_connected());
    }

    #[test]
    fn line_graphs() {
        let l = Graph::path(3).unwrap().line_graph().unwrap();
        assert_eq!(l, Graph::complete(2).unwrap());

        // C5 edges in canonical order: 01, 04, 12, 23, 34
        let l = Graph::cycle(5).unwrap().line_graph().unwrap();
        assert_eq!(l.is_regular(), Some(2));
        assert!(l.is_connected());
        assert_eq!(l.edges(), &[(0, 1), (0, 2), (1, 4), (2, 3), (3, 4)]);

        let l = Graph::complete(4).unwrap().line_graph().unwrap();
        assert_eq!((l.order(), l.size(), l.is_regular()), (6, 12, Some(4)));
        // octahedron: complement is a perfect matching
        let comp = l.complement();
        assert_eq!(comp.size(), 3);
        assert_eq!(comp.is_regular(), Some(1));

        assert!(Graph::empty(3).unwrap().line_graph().is_err());
    }

    #[test]
    fn incidence_matrices() {
        let q = Graph::path(3).unwrap().incidence().unwrap();
        assert_eq!(q.to_rows(), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        let q = Graph::complete(2).unwrap().incidence().unwrap();
        assert_eq!(q.to_rows(), vec![vec![1], vec![1]]);
        let q = Graph::cycle(3).unwrap().incidence().unwrap();
        let rows = q.to_rows();
        assert!(rows
            .iter()
            .all(|r| r.iter().map(|&x| x as usize).sum::<usize>() == 2));
        assert!((0..3).all(|e| (0..3).map(|v| q.get(v, e) as usize).sum::<usize>() == 2));
        assert!(Graph::empty(2).unwrap().incidence().is_err());
    }

    #[test]
    fn predicates() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.degrees(), vec![2; 6]);
        assert_eq!(c6.is_regular(), Some(2));
        assert!(c6.is_triangle_free());

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.is_regular(), Some(3));
        assert!(!k4.is_triangle_free());
        assert!(k4.is_complete());

        assert_eq!(Graph::path(3).unwrap().is_regular(), None);
    }
}
