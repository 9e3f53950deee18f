//! Graphviz renderings. Nodes and edges are emitted in sorted order so the
//! output is byte-stable.

use std::fmt::Write;

use crate::permutation::Alphabet;
use crate::permutohedron::Permutohedron;
use crate::rational::format_fixed;
use crate::structure::HasseDiagram;

pub fn permutohedron_dot(p: &Permutohedron, alphabet: &Alphabet) -> String {
    let name = |v: usize| alphabet.render(p.vertex(v));
    let mut out = format!("graph permutohedron_{} {{\n", p.n());
    for v in 0..p.len() {
        writeln!(out, "  \"{}\";", name(v)).unwrap();
    }
    for (a, b) in p.edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", name(a), name(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Strict arcs are solid; each tie is drawn once, dashed, with arrows at
/// both ends.
pub fn hasse_dot(
    h: &HasseDiagram,
    p: &Permutohedron,
    alphabet: &Alphabet,
    precision: u32,
) -> String {
    let name = |v: usize| alphabet.render(p.vertex(v));
    let mut out = String::from("digraph hasse {\n  rankdir=TB;\n");
    for (v, value) in h.values.iter().enumerate() {
        writeln!(
            out,
            "  \"{}\" [label=\"{}\\n{}\"];",
            name(v),
            name(v),
            format_fixed(value, precision)
        )
        .unwrap();
    }
    for arc in &h.arcs {
        if arc.tie {
            if arc.from < arc.to {
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [dir=both, style=dashed, label=\"tie\"];",
                    name(arc.from),
                    name(arc.to)
                )
                .unwrap();
            }
        } else {
            writeln!(out, "  \"{}\" -> \"{}\";", name(arc.from), name(arc.to)).unwrap();
        }
    }
    for (k, group) in h.tie_groups.iter().enumerate() {
        let members: Vec<String> = group.iter().map(|&v| name(v)).collect();
        writeln!(out, "  // tie group {}: {}", k + 1, members.join(" ")).unwrap();
    }
    out.push_str("}\n");
    out
}
