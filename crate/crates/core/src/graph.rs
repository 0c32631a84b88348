//! Simple undirected graphs on dense vertex indices, plus the generators used
//! throughout the crate (cycles, two cycles sharing a vertex, cacti of cycles).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A simple graph: vertices are `0..order`, edges are unordered pairs.
///
/// Edges are stored with the smaller endpoint first, in insertion order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.order, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            order: g.order,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    order,
                });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            normalized.push(e);
        }
        Ok(Graph {
            order,
            edges: normalized,
        })
    }

    /// The graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            edges: Vec::new(),
        }
    }

    /// Number of vertices `p`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges `q`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    /// Degree of every vertex, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    /// Neighbour lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph {
            order: self.order + other.order,
            edges,
        }
    }

    /// Number of connected components (isolated vertices count as components).
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.order).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.order;
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                components -= 1;
            }
        }
        components
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(p={}, q={})", self.order, self.size())
    }
}

/// Vertex degrees as a multiset, stored in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Distinct degree values, descending.
    pub fn distinct(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.dedup();
        d
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|d| d % 2 == 0)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The cycle `C_n`, vertices in cycle order.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `C(m, n)`: a cycle of length `m` and one of length `n` glued at vertex 0.
///
/// Vertices `0..m` run around the first cycle; vertex 0 followed by
/// `m..m+n-1` run around the second.
pub fn make_two_cycle(m: usize, n: usize) -> Result<Graph, GraphError> {
    make_cactus(&CactusSpec::new(
        vec![m, n],
        vec![Attachment {
            cycle: 0,
            position: 0,
        }],
    ))
}

/// Where a cycle is glued onto an earlier one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    /// Index of an earlier cycle in the spec.
    pub cycle: usize,
    /// Position on that cycle of the shared cut vertex.
    pub position: usize,
}

/// A connected graph whose blocks are all cycles.
///
/// `attachments[i]` glues cycle `i + 1` onto an earlier cycle. Several cycles
/// may share one cut vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CactusSpec {
    pub cycles: Vec<usize>,
    pub attachments: Vec<Attachment>,
}

impl CactusSpec {
    pub fn new(cycles: Vec<usize>, attachments: Vec<Attachment>) -> Self {
        CactusSpec {
            cycles,
            attachments,
        }
    }

    /// Order of the generated graph: every attachment merges one vertex.
    pub fn order(&self) -> usize {
        self.cycles.iter().sum::<usize>() - self.attachments.len()
    }

    pub fn size(&self) -> usize {
        self.cycles.iter().sum()
    }

    /// Parses `LEN LEN@CYCLE.POS ...`, e.g. `3 5@0.0` for `C(3,5)`.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let bad = || GraphError::CactusSyntax(text.to_string());
        let mut cycles = Vec::new();
        let mut attachments = Vec::new();
        for (i, token) in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).enumerate() {
            match token.split_once('@') {
                None if i == 0 => cycles.push(token.parse().map_err(|_| bad())?),
                Some((len, at)) if i > 0 => {
                    let (cycle, position) = at.split_once('.').ok_or_else(bad)?;
                    cycles.push(len.parse().map_err(|_| bad())?);
                    attachments.push(Attachment {
                        cycle: cycle.parse().map_err(|_| bad())?,
                        position: position.parse().map_err(|_| bad())?,
                    });
                }
                _ => return Err(bad()),
            }
        }
        if cycles.is_empty() {
            return Err(bad());
        }
        Ok(CactusSpec::new(cycles, attachments))
    }
}

impl fmt::Display for CactusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycles[0])?;
        for (len, at) in self.cycles[1..].iter().zip(&self.attachments) {
            write!(f, " {}@{}.{}", len, at.cycle, at.position)?;
        }
        Ok(())
    }
}

/// Builds the cactus described by `spec`.
///
/// Cycle 0 occupies vertices `0..len0` in cycle order. Every later cycle
/// starts at its cut vertex and takes fresh indices for the rest of its
/// vertices.
pub fn make_cactus(spec: &CactusSpec) -> Result<Graph, GraphError> {
    if spec.cycles.is_empty() {
        return Err(GraphError::EmptyCactus);
    }
    if let Some(&len) = spec.cycles.iter().find(|&&len| len < 3) {
        return Err(GraphError::CycleTooShort(len));
    }
    if spec.attachments.len() != spec.cycles.len() - 1 {
        return Err(GraphError::AttachmentCount {
            cycles: spec.cycles.len(),
            attachments: spec.attachments.len(),
        });
    }

    // vertices[i][j]: graph vertex at position j of cycle i
    let mut vertices: Vec<Vec<usize>> = Vec::with_capacity(spec.cycles.len());
    let mut next = 0;
    for (i, &len) in spec.cycles.iter().enumerate() {
        let mut cycle = Vec::with_capacity(len);
        if i == 0 {
            cycle.extend(0..len);
            next = len;
        } else {
            let at = spec.attachments[i - 1];
            let cut = vertices
                .get(at.cycle)
                .and_then(|c| c.get(at.position))
                .copied()
                .ok_or(GraphError::BadAttachment {
                    cycle: i,
                    target: at.cycle,
                    position: at.position,
                })?;
            cycle.push(cut);
            cycle.extend(next..next + len - 1);
            next += len - 1;
        }
        vertices.push(cycle);
    }

    let edges = vertices
        .iter()
        .flat_map(|c| (0..c.len()).map(move |j| (c[j], c[(j + 1) % c.len()])));
    Graph::new(next, edges)
}

/// Every graph (up to isomorphism) of the given order whose degree sequence
/// is `(4, 2, ..., 2)`: some `C(m, n)` plus zero or more disjoint cycles.
///
/// Each entry is `(m, n, extra cycle lengths)` with `m <= n` and the extra
/// lengths non-decreasing.
pub fn degseq_4_2_realizations(order: usize) -> Vec<(usize, usize, Vec<usize>)> {
    fn partitions(rest: usize, min_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for part in min_part..=rest {
            acc.push(part);
            partitions(rest - part, part, acc, out);
            acc.pop();
        }
    }

    let mut result = Vec::new();
    for m in 3..order {
        for n in m..order {
            let core = m + n - 1;
            if core > order {
                break;
            }
            let mut parts = Vec::new();
            partitions(order - core, 3, &mut Vec::new(), &mut parts);
            result.extend(parts.into_iter().map(|p| (m, n, p)));
        }
    }
    result
}

/// Builds `C(m, n)` followed by disjoint cycles of the given lengths.
pub fn make_two_cycle_with_cycles(m: usize, n: usize, extra: &[usize]) -> Result<Graph, GraphError> {
    extra
        .iter()
        .try_fold(make_two_cycle(m, n)?, |g, &len| Ok(g.disjoint_union(&make_cycle(len)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_edges() {
        let g = make_cycle(3).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
    }

    #[test]
    fn cycle_rejects_short() {
        assert!(matches!(make_cycle(2), Err(GraphError::CycleTooShort(2))));
        assert!(make_two_cycle(2, 5).is_err());
        assert!(make_two_cycle(5, 1).is_err());
    }

    #[test]
    fn cycle_degrees() {
        let g = make_cycle(5).unwrap();
        assert_eq!((g.order(), g.size()), (5, 5));
        assert_eq!(make_cycle(4).unwrap().degree_sequence().as_slice(), &[2, 2, 2, 2]);
    }

    #[test]
    fn two_cycle_counts() {
        let g = make_two_cycle(3, 5).unwrap();
        assert_eq!((g.order(), g.size()), (7, 8));
        assert_eq!(g.degree_sequence().as_slice(), &[4, 2, 2, 2, 2, 2, 2]);
        let g = make_two_cycle(3, 3).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        let g = make_two_cycle(4, 5).unwrap();
        assert_eq!((g.order(), g.size()), (8, 9));
    }

    #[test]
    fn two_cycle_degree_shape() {
        for m in 3..=8 {
            for n in 3..=8 {
                let deg = make_two_cycle(m, n).unwrap().degrees();
                assert_eq!(deg.iter().filter(|&&d| d == 4).count(), 1);
                assert_eq!(deg.iter().filter(|&&d| d == 2).count(), m + n - 2);
            }
        }
    }

    #[test]
    fn cactus_chain_of_triangles() {
        // cycle 1 hangs off vertex 1 of cycle 0, cycle 2 off position 2 of cycle 1
        let spec = CactusSpec::parse("3 3@0.1 3@1.2").unwrap();
        let g = make_cactus(&spec).unwrap();
        assert_eq!((g.order(), g.size()), (7, 9));
        assert_eq!(g.degree_sequence().as_slice(), &[4, 4, 2, 2, 2, 2, 2]);
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn cactus_flower() {
        let spec = CactusSpec::parse("3 3@0.0 3@1.0").unwrap();
        let g = make_cactus(&spec).unwrap();
        assert_eq!(g.degree_sequence().as_slice(), &[6, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn cactus_single_cycle_matches_cycle() {
        let g = make_cactus(&CactusSpec::new(vec![6], vec![])).unwrap();
        assert_eq!(g, make_cycle(6).unwrap());
    }

    #[test]
    fn cactus_two_cycles_is_two_cycle() {
        let g = make_cactus(&CactusSpec::parse("3 5@0.2").unwrap()).unwrap();
        let h = make_two_cycle(3, 5).unwrap();
        assert_eq!(g.degree_sequence(), h.degree_sequence());
        assert_eq!((g.order(), g.size()), (h.order(), h.size()));
    }

    #[test]
    fn cactus_bad_attachments() {
        let bad_pos = CactusSpec::new(vec![3, 3], vec![Attachment { cycle: 0, position: 3 }]);
        assert!(matches!(make_cactus(&bad_pos), Err(GraphError::BadAttachment { .. })));
        let forward = CactusSpec::new(vec![3, 3], vec![Attachment { cycle: 1, position: 0 }]);
        assert!(matches!(make_cactus(&forward), Err(GraphError::BadAttachment { .. })));
        let missing = CactusSpec::new(vec![3, 3], vec![]);
        assert!(matches!(make_cactus(&missing), Err(GraphError::AttachmentCount { .. })));
        assert!(CactusSpec::parse("3@0.0").is_err());
        assert!(CactusSpec::parse("3 4").is_err());
    }

    #[test]
    fn cactus_spec_display_round_trip() {
        let spec = CactusSpec::parse("4 3@0.2 5@1.1").unwrap();
        assert_eq!(CactusSpec::parse(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn empty_graph_degrees() {
        assert_eq!(Graph::empty(3).degree_sequence().as_slice(), &[0, 0, 0]);
    }

    #[test]
    fn new_rejects_invalid() {
        assert!(matches!(Graph::new(3, [(0, 0)]), Err(GraphError::Loop(0))));
        assert!(matches!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1))));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn realizations_of_small_orders() {
        assert_eq!(degseq_4_2_realizations(6), vec![(3, 4, vec![])]);
        assert_eq!(
            degseq_4_2_realizations(8),
            vec![(3, 3, vec![3]), (3, 6, vec![]), (4, 5, vec![])]
        );
        for order in 5..=12 {
            for (m, n, extra) in degseq_4_2_realizations(order) {
                let g = make_two_cycle_with_cycles(m, n, &extra).unwrap();
                assert_eq!(g.order(), order);
                let mut expected = vec![2; order];
                expected[0] = 4;
                assert_eq!(g.degree_sequence().as_slice(), expected.as_slice());
            }
        }
    }

    #[test]
    fn serde_validates() {
        let g: Graph = serde_json::from_str(r#"{"order":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g.size(), 2);
        assert!(serde_json::from_str::<Graph>(r#"{"order":2,"edges":[[0,0]]}"#).is_err());
    }
}
