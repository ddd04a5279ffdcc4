//! Subdivision and central graphs, the subdivision and central joins, and
//! cycle unions indexed by integer partitions.

use std::fmt::Write as _;
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::linalg::SquareMatrix;

/// Edge set of the subdivision: original vertices keep their labels,
/// edge `k` becomes vertex `n + k`.
fn subdivision_edges(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = g.order();
    g.edges()
        .iter()
        .enumerate()
        .flat_map(move |(k, &(a, b))| [(a, n + k), (b, n + k)])
}

pub fn subdivision(g: &Graph) -> Result<Graph> {
    g.require_edges("subdivision")?;
    Graph::from_edges(g.order() + g.size(), subdivision_edges(g))
}

/// Subdivision plus an edge between every pair of originally nonadjacent vertices.
pub fn central_graph(g: &Graph) -> Result<Graph> {
    g.require_edges("central graph")?;
    let extra = g.complement().edges().to_vec();
    Graph::from_edges(g.order() + g.size(), subdivision_edges(g).chain(extra))
}

/// Which two blocks a subdivision join connects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JoinKind {
    /// Original vertices of `G1` to original vertices of `G2`.
    VertexVertex,
    /// Edge-vertices of `S(G1)` to edge-vertices of `S(G2)`.
    EdgeEdge,
}

/// Vertex blocks `[V(G1), E(G1), V(G2), E(G2)]` of a subdivision join.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinLayout {
    pub v1: Range<usize>,
    pub e1: Range<usize>,
    pub v2: Range<usize>,
    pub e2: Range<usize>,
}

impl JoinLayout {
    fn new(g1: &Graph, g2: &Graph) -> Self {
        let (n1, m1, n2, m2) = (g1.order(), g1.size(), g2.order(), g2.size());
        JoinLayout {
            v1: 0..n1,
            e1: n1..n1 + m1,
            v2: n1 + m1..n1 + m1 + n2,
            e2: n1 + m1 + n2..n1 + m1 + n2 + m2,
        }
    }

    pub fn total(&self) -> usize {
        self.e2.end
    }

    pub fn blocks(&self) -> [Range<usize>; 4] {
        [
            self.v1.clone(),
            self.e1.clone(),
            self.v2.clone(),
            self.e2.clone(),
        ]
    }
}

/// `S(G1) ∪ S(G2)` plus a complete bipartite join chosen by `kind`.
/// Operands may be disconnected; both need at least one edge.
pub fn subdivision_join(g1: &Graph, g2: &Graph, kind: JoinKind) -> Result<(Graph, JoinLayout)> {
    g1.require_edges("subdivision join (first operand)")?;
    g2.require_edges("subdivision join (second operand)")?;
    let layout = JoinLayout::new(g1, g2);
    let (left, right) = match kind {
        JoinKind::VertexVertex => (layout.v1.clone(), layout.v2.clone()),
        JoinKind::EdgeEdge => (layout.e1.clone(), layout.e2.clone()),
    };
    let offset2 = layout.v2.start;
    let edges = subdivision_edges(g1)
        .chain(subdivision_edges(g2).map(|(a, b)| (a + offset2, b + offset2)))
        .chain(left.flat_map(|a| right.clone().map(move |b| (a, b))));
    Ok((Graph::from_edges(layout.total(), edges)?, layout))
}

/// Subdivision vertex-vertex join `G1 ∘ G2`.
pub fn sub_vv_join(g1: &Graph, g2: &Graph) -> Result<(Graph, JoinLayout)> {
    subdivision_join(g1, g2, JoinKind::VertexVertex)
}

/// Subdivision edge-edge join `G1 ⊖ G2`.
pub fn sub_ee_join(g1: &Graph, g2: &Graph) -> Result<(Graph, JoinLayout)> {
    subdivision_join(g1, g2, JoinKind::EdgeEdge)
}

/// Which block of `C(G1)` is joined to all of `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralJoinKind {
    Vertex,
    Edge,
}

/// `C(G1) ∪ G2` with the original (or edge-) vertices of `G1` joined to
/// every vertex of `G2`. Vertex order: `V(G1)`, `E(G1)`, `V(G2)`.
pub fn central_join(g1: &Graph, g2: &Graph, kind: CentralJoinKind) -> Result<Graph> {
    let c = central_graph(g1)?;
    let (n1, m1) = (g1.order(), g1.size());
    let offset = n1 + m1;
    let from = match kind {
        CentralJoinKind::Vertex => 0..n1,
        CentralJoinKind::Edge => n1..n1 + m1,
    };
    let to = offset..offset + g2.order();
    let edges = c
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(a, b)| (a + offset, b + offset)))
        .chain(from.flat_map(|a| to.clone().map(move |b| (a, b))));
    Graph::from_edges(offset + g2.order(), edges)
}

pub fn central_vertex_join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    central_join(g1, g2, CentralJoinKind::Vertex)
}

pub fn central_edge_join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    central_join(g1, g2, CentralJoinKind::Edge)
}

/// The distance matrix of a subdivision join written block by block from
/// `J`, `I`, the incidence matrices and the line-graph adjacencies.
///
/// For `∘` this holds whenever both operands have an edge. For `⊖` it
/// additionally needs both operands free of isolated vertices; compare
/// against `bfs_distances` before relying on it.
pub fn join_distance_blocks(g1: &Graph, g2: &Graph, kind: JoinKind) -> Result<SquareMatrix<i64>> {
    g1.require_edges("join distance blocks (first operand)")?;
    g2.require_edges("join distance blocks (second operand)")?;
    let layout = JoinLayout::new(g1, g2);
    let (q1, q2) = (g1.incidence()?, g2.incidence()?);
    let (l1, l2) = (g1.line_graph()?, g2.line_graph()?);
    let blocks = layout.blocks();
    let locate = |x: usize| {
        let b = blocks
            .iter()
            .position(|r| r.contains(&x))
            .expect("in layout");
        (b, x - blocks[b].start)
    };
    // (block, block) -> value; only the upper block triangle is spelled out.
    let entry = |bi: usize, i: usize, bj: usize, j: usize| -> i64 {
        let diag = i64::from(i == j);
        let off = 1 - diag;
        match (kind, bi, bj) {
            (JoinKind::VertexVertex, 0, 0) => 2 * off,
            (JoinKind::VertexVertex, 0, 1) => 3 - 2 * i64::from(q1.get(i, j)),
            (JoinKind::VertexVertex, 0, 2) => 1,
            (JoinKind::VertexVertex, 0, 3) => 2,
            (JoinKind::VertexVertex, 1, 1) => 4 * off - 2 * i64::from(l1.has_edge(i, j)),
            (JoinKind::VertexVertex, 1, 2) => 2,
            (JoinKind::VertexVertex, 1, 3) => 3,
            (JoinKind::VertexVertex, 2, 2) => 2 * off,
            (JoinKind::VertexVertex, 2, 3) => 3 - 2 * i64::from(q2.get(i, j)),
            (JoinKind::VertexVertex, 3, 3) => 4 * off - 2 * i64::from(l2.has_edge(i, j)),
            (JoinKind::EdgeEdge, 0, 0) => 4 * off - 2 * i64::from(g1.has_edge(i, j)),
            (JoinKind::EdgeEdge, 0, 1) => 3 - 2 * i64::from(q1.get(i, j)),
            (JoinKind::EdgeEdge, 0, 2) => 3,
            (JoinKind::EdgeEdge, 0, 3) => 2,
            (JoinKind::EdgeEdge, 1, 1) => 2 * off,
            (JoinKind::EdgeEdge, 1, 2) => 2,
            (JoinKind::EdgeEdge, 1, 3) => 1,
            (JoinKind::EdgeEdge, 2, 2) => 4 * off - 2 * i64::from(g2.has_edge(i, j)),
            (JoinKind::EdgeEdge, 2, 3) => 3 - 2 * i64::from(q2.get(i, j)),
            (JoinKind::EdgeEdge, 3, 3) => 2 * off,
            _ => unreachable!("lower blocks are mirrored"),
        }
    };
    Ok(SquareMatrix::from_fn(layout.total(), |x, y| {
        let (bx, i) = locate(x);
        let (by, j) = locate(y);
        if bx <= by {
            entry(bx, i, by, j)
        } else {
            entry(by, j, bx, i)
        }
    }))
}

/// An integer partition whose parts are all at least 3, stored non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartitionMin3 {
    parts: Vec<usize>,
}

impl PartitionMin3 {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("partition has no parts".into()));
        }
        if let Some(p) = parts.iter().find(|&&p| p < 3) {
            return Err(Error::InvalidParameter(format!(
                "partition part {p} is smaller than 3"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionMin3 { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl std::fmt::Display for PartitionMin3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Every partition of `l` into parts of size at least 3, in descending
/// lexicographic order.
pub fn partitions_min3(l: usize) -> Result<Vec<PartitionMin3>> {
    if l < 3 {
        return Err(Error::InvalidParameter(format!(
            "no partition of {l} into parts of size at least 3"
        )));
    }
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<PartitionMin3>) {
        if rest == 0 {
            out.push(PartitionMin3 {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (3..=max.min(rest)).rev() {
            if rest - p == 0 || rest - p >= 3 {
                prefix.push(p);
                rec(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(l, l, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Disjoint union of cycles `C_{p_1} ∪ ... ∪ C_{p_s}`.
pub fn cycle_union(p: &PartitionMin3) -> Result<Graph> {
    let cycles = p
        .parts()
        .iter()
        .map(|&k| Graph::cycle(k))
        .collect::<Result<Vec<_>>>()?;
    disjoint_union(&cycles)
}

/// Graphviz DOT text. With a layout, vertices are grouped into one cluster
/// per join block and edge-vertices are drawn as boxes.
pub fn to_dot(g: &Graph, layout: Option<&JoinLayout>) -> String {
    let mut out = String::from("graph G {\n");
    match layout {
        Some(l) => {
            let names = ["V1", "E1", "V2", "E2"];
            for (k, (name, block)) in names.iter().zip(l.blocks()).enumerate() {
                let shape = if k % 2 == 1 { "box" } else { "circle" };
                let _ = writeln!(out, "  subgraph cluster_{name} {{\n    label=\"{name}\";");
                for v in block {
                    let _ = writeln!(out, "    {v} [shape={shape}];");
                }
                out.push_str("  }\n");
            }
        }
        None => {
            for v in 0..g.order() {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}
