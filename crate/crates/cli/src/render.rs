use std::fmt::Write;

use semlab::{Graph, SemLabeling};

/// DOT text for `g`. With a (verified) labeling the nodes show their labels,
/// edges carry their labels and the graph title gives the valence.
pub fn to_dot(g: &Graph, labeling: Option<&SemLabeling>) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(l) = labeling {
        let _ = writeln!(out, "  label=\"valence {}\";", l.valence);
        let _ = writeln!(out, "  labelloc=t;");
    }
    for v in 0..g.order() {
        match labeling {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label=\"{}\", xlabel=\"v{v}\"];", l.vertex_labels[v]);
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    let edge_labels = labeling.map(SemLabeling::edge_label_map);
    for &(u, v) in g.edges() {
        match edge_labels.as_ref().and_then(|m| m.get(&(u, v))) {
            Some(label) => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{label}\"];");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}
