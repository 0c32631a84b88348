//! Vertex labelings, edge-sum sets and super edge-magic labelings.
//!
//! A vertex bijection `f: V -> {1..p}` extends to a super edge-magic labeling
//! exactly when its edge sums `f(u) + f(v)` are `q` distinct consecutive
//! integers. The extension is then forced: with `s` the smallest sum, the
//! valence is `k = p + q + s` and edge `uv` gets `k - f(u) - f(v)`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::LabelingError;
use crate::graph::Graph;

/// A bijection from vertices `0..p` onto labels `1..=p`, indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexLabeling(Vec<u32>);

impl VertexLabeling {
    pub fn new(labels: Vec<u32>) -> Result<Self, LabelingError> {
        let p = labels.len();
        let mut seen = vec![false; p + 1];
        for &l in &labels {
            let l = l as usize;
            if l == 0 || l > p || std::mem::replace(&mut seen[l], true) {
                return Err(LabelingError::NotBijective(p));
            }
        }
        Ok(VertexLabeling(labels))
    }

    /// Checks the length against the graph as well as bijectivity.
    pub fn for_graph(g: &Graph, labels: Vec<u32>) -> Result<Self, LabelingError> {
        if labels.len() != g.order() {
            return Err(LabelingError::WrongLength {
                expected: g.order(),
                got: labels.len(),
            });
        }
        Self::new(labels)
    }

    pub fn identity(p: usize) -> Self {
        VertexLabeling((1..=p as u32).collect())
    }

    /// The dual labeling `v -> p + 1 - f(v)`.
    pub fn complement(&self) -> Self {
        let top = self.0.len() as u32 + 1;
        VertexLabeling(self.0.iter().map(|&l| top - l).collect())
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

/// The multiset `{f(u) + f(v) : uv in E}`, one entry per edge in edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSumSet {
    sums: Vec<u32>,
}

impl EdgeSumSet {
    pub fn from_sums(sums: Vec<u32>) -> Self {
        EdgeSumSet { sums }
    }

    pub fn sums(&self) -> &[u32] {
        &self.sums
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn min(&self) -> Option<u32> {
        self.sums.iter().copied().min()
    }

    pub fn max(&self) -> Option<u32> {
        self.sums.iter().copied().max()
    }
}

pub fn edge_sums(g: &Graph, f: &VertexLabeling) -> EdgeSumSet {
    EdgeSumSet {
        sums: g.edges().iter().map(|&(u, v)| f.label(u) + f.label(v)).collect(),
    }
}

/// True iff the sums are pairwise distinct and span exactly `q` consecutive
/// integers. Vacuously true when there are no edges.
pub fn is_extendable(s: &EdgeSumSet) -> bool {
    let (Some(lo), Some(hi)) = (s.min(), s.max()) else {
        return true;
    };
    if (hi - lo) as usize != s.len() - 1 {
        return false;
    }
    let mut seen = vec![false; s.len()];
    s.sums
        .iter()
        .all(|&x| !std::mem::replace(&mut seen[(x - lo) as usize], true))
}

/// `1 + 2 + ... + n`.
pub(crate) fn triangular(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// Sum of the edge labels `p+1 ..= p+q`.
pub fn edge_label_total(p: usize, q: usize) -> i64 {
    triangular((p + q) as i64) - triangular(p as i64)
}

/// An edge together with its label, serialized as `[u, v, label]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLabel(pub usize, pub usize, pub u32);

/// A total labeling of vertices and edges with constant edge sum.
///
/// This is also the certificate format: fields deserialize without
/// validation so that [`verify_sem`] can say what is wrong with a bad one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemLabeling {
    pub vertex_labels: Vec<u32>,
    pub edge_labels: Vec<EdgeLabel>,
    pub valence: i64,
}

impl SemLabeling {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("labeling serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn edge_label_map(&self) -> HashMap<(usize, usize), u32> {
        self.edge_labels
            .iter()
            .map(|&EdgeLabel(u, v, l)| ((u.min(v), u.max(v)), l))
            .collect()
    }
}

/// Extends an extendable vertex labeling to a super edge-magic labeling.
pub fn extend_to_sem(g: &Graph, f: &VertexLabeling) -> Result<SemLabeling, LabelingError> {
    if f.len() != g.order() {
        return Err(LabelingError::WrongLength {
            expected: g.order(),
            got: f.len(),
        });
    }
    let q = g.size();
    if q == 0 {
        return Err(LabelingError::Edgeless);
    }
    let sums = edge_sums(g, f);
    if !is_extendable(&sums) {
        return Err(LabelingError::NotExtendable(q));
    }
    let p = g.order();
    let valence = (p + q) as i64 + i64::from(sums.min().expect("q >= 1"));
    let edge_labels: Vec<EdgeLabel> = g
        .edges()
        .iter()
        .zip(sums.sums())
        .map(|(&(u, v), &s)| EdgeLabel(u, v, (valence - i64::from(s)) as u32))
        .collect();

    let range = (p as u32 + 1)..=((p + q) as u32);
    assert!(
        edge_labels.iter().all(|e| range.contains(&e.2)),
        "edge label outside {range:?}"
    );
    debug_assert_eq!(
        valence_of(g, f).ok(),
        Some(Ratio::from_integer(valence)),
        "degree-weighted valence disagrees with the extension formula"
    );

    Ok(SemLabeling {
        vertex_labels: f.labels().to_vec(),
        edge_labels,
        valence,
    })
}

/// The valence a labeling with vertex part `f` would have:
/// `(sum of deg(u) f(u) + sum of edge labels) / q`.
///
/// Integral for every extendable `f`; a non-integral value rules `f` out.
pub fn valence_of(g: &Graph, f: &VertexLabeling) -> Result<Ratio<i64>, LabelingError> {
    let q = g.size();
    if q == 0 {
        return Err(LabelingError::Edgeless);
    }
    let weighted: i64 = g
        .degrees()
        .iter()
        .zip(f.labels())
        .map(|(&d, &l)| d as i64 * i64::from(l))
        .sum();
    Ok(Ratio::new(weighted + edge_label_total(g.order(), q), q as i64))
}

/// The first invariant a candidate labeling breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    VertexCount { expected: usize, got: usize },
    VertexLabelRange { vertex: usize, label: u32 },
    DuplicateVertexLabel { label: u32 },
    EdgeCount { expected: usize, got: usize },
    UnknownEdge { u: usize, v: usize },
    DuplicateEdge { u: usize, v: usize },
    EdgeLabelRange { u: usize, v: usize, label: u32 },
    DuplicateEdgeLabel { label: u32 },
    NonConstantValence { u: usize, v: usize, sum: i64, first: i64 },
    ValenceMismatch { declared: i64, actual: i64 },
}

impl VerifyFailure {
    /// Stable machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            VerifyFailure::VertexCount { .. } => "vertex-count",
            VerifyFailure::VertexLabelRange { .. } => "vertex-label-range",
            VerifyFailure::DuplicateVertexLabel { .. } => "duplicate-vertex-label",
            VerifyFailure::EdgeCount { .. } => "edge-count",
            VerifyFailure::UnknownEdge { .. } => "unknown-edge",
            VerifyFailure::DuplicateEdge { .. } => "duplicate-edge",
            VerifyFailure::EdgeLabelRange { .. } => "edge-label-range",
            VerifyFailure::DuplicateEdgeLabel { .. } => "duplicate-edge-label",
            VerifyFailure::NonConstantValence { .. } => "non-constant-valence",
            VerifyFailure::ValenceMismatch { .. } => "valence-mismatch",
        }
    }
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::VertexCount { expected, got } => {
                write!(f, "vertex count: {got} vertex labels for {expected} vertices")
            }
            VerifyFailure::VertexLabelRange { vertex, label } => {
                write!(f, "vertex label out of range: vertex {vertex} has label {label}")
            }
            VerifyFailure::DuplicateVertexLabel { label } => {
                write!(f, "duplicate vertex label {label}")
            }
            VerifyFailure::EdgeCount { expected, got } => {
                write!(f, "edge count: {got} edge labels for {expected} edges")
            }
            VerifyFailure::UnknownEdge { u, v } => write!(f, "unknown edge {u}-{v}"),
            VerifyFailure::DuplicateEdge { u, v } => write!(f, "edge {u}-{v} labelled twice"),
            VerifyFailure::EdgeLabelRange { u, v, label } => {
                write!(f, "edge label out of range: edge {u}-{v} has label {label}")
            }
            VerifyFailure::DuplicateEdgeLabel { label } => {
                write!(f, "duplicate edge label {label}")
            }
            VerifyFailure::NonConstantValence { u, v, sum, first } => {
                write!(f, "non-constant valence: edge {u}-{v} sums to {sum}, first edge to {first}")
            }
            VerifyFailure::ValenceMismatch { declared, actual } => {
                write!(f, "valence mismatch: declared {declared}, edges sum to {actual}")
            }
        }
    }
}

impl std::error::Error for VerifyFailure {}

/// Checks every super edge-magic condition of `l` against `g`.
pub fn verify_sem(g: &Graph, l: &SemLabeling) -> Result<(), VerifyFailure> {
    let (p, q) = (g.order(), g.size());

    if l.vertex_labels.len() != p {
        return Err(VerifyFailure::VertexCount {
            expected: p,
            got: l.vertex_labels.len(),
        });
    }
    let mut used = vec![false; p + q + 1];
    for (vertex, &label) in l.vertex_labels.iter().enumerate() {
        if label == 0 || label as usize > p {
            return Err(VerifyFailure::VertexLabelRange { vertex, label });
        }
        if std::mem::replace(&mut used[label as usize], true) {
            return Err(VerifyFailure::DuplicateVertexLabel { label });
        }
    }

    if l.edge_labels.len() != q {
        return Err(VerifyFailure::EdgeCount {
            expected: q,
            got: l.edge_labels.len(),
        });
    }
    let edges: HashSet<(usize, usize)> = g.edges().iter().copied().collect();
    let mut seen_edges = HashSet::new();
    for &EdgeLabel(u, v, label) in &l.edge_labels {
        let e = (u.min(v), u.max(v));
        if !edges.contains(&e) {
            return Err(VerifyFailure::UnknownEdge { u, v });
        }
        if !seen_edges.insert(e) {
            return Err(VerifyFailure::DuplicateEdge { u, v });
        }
        if (label as usize) <= p || label as usize > p + q {
            return Err(VerifyFailure::EdgeLabelRange { u, v, label });
        }
        if std::mem::replace(&mut used[label as usize], true) {
            return Err(VerifyFailure::DuplicateEdgeLabel { label });
        }
    }

    let mut first = None;
    for &EdgeLabel(u, v, label) in &l.edge_labels {
        let sum = i64::from(l.vertex_labels[u]) + i64::from(l.vertex_labels[v]) + i64::from(label);
        match first {
            None => first = Some(sum),
            Some(k) if k != sum => {
                return Err(VerifyFailure::NonConstantValence { u, v, sum, first: k })
            }
            _ => {}
        }
    }
    if let Some(actual) = first {
        if actual != l.valence {
            return Err(VerifyFailure::ValenceMismatch {
                declared: l.valence,
                actual,
            });
        }
    }
    Ok(())
}
