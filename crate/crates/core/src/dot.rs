//! Graphviz output for presentations and AR quivers.

use std::fmt::Write as _;

use crate::lattices::{ArQuiver, LatticeLabel};
use crate::presentation::GentlePresentation;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Each arrow passes through a small label node so that relations can be
/// drawn as dotted, undirected edges between the labels of paired arrows.
pub fn quiver_dot(gp: &GentlePresentation) -> String {
    let q = gp.quiver();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(q.name())).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in q.vertex_ids() {
        writeln!(out, "  {};", quote(&format!("v:{}", q.vertex_name(v)))).unwrap();
    }
    for a in q.arrow_ids() {
        let label = quote(&format!("a:{}", q.arrow_name(a)));
        writeln!(
            out,
            "  {label} [shape=plaintext, label={}];",
            quote(q.arrow_name(a))
        )
        .unwrap();
        writeln!(
            out,
            "  {} -> {label} [arrowhead=none];",
            quote(&format!("v:{}", q.vertex_name(q.source(a))))
        )
        .unwrap();
        writeln!(
            out,
            "  {label} -> {};",
            quote(&format!("v:{}", q.vertex_name(q.target(a))))
        )
        .unwrap();
    }
    for &(a, b) in gp.relations().pairs() {
        writeln!(
            out,
            "  {} -> {} [style=dotted, dir=none, constraint=false];",
            quote(&format!("a:{}", q.arrow_name(a))),
            quote(&format!("a:{}", q.arrow_name(b)))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Projectives are boxes and arrow ideals ellipses; irreducible maps are
/// solid, the translate is dashed.
pub fn ar_dot(gp: &GentlePresentation, ar: &ArQuiver) -> String {
    let id = |l: LatticeLabel| quote(&l.name(gp));
    let mut out = String::new();
    writeln!(
        out,
        "digraph {} {{",
        quote(&format!("AR({})", gp.quiver().name()))
    )
    .unwrap();
    for &node in &ar.nodes {
        let shape = if node.is_projective() {
            "box"
        } else {
            "ellipse"
        };
        writeln!(out, "  {} [shape={shape}];", id(node)).unwrap();
    }
    for &(from, to) in &ar.irreducible {
        writeln!(out, "  {} -> {} [style=solid];", id(from), id(to)).unwrap();
    }
    for &(from, to) in &ar.tau {
        writeln!(
            out,
            "  {} -> {} [style=dashed, constraint=false];",
            id(from),
            id(to)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
