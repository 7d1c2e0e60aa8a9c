//! Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::dfa::Dfa;

/// Renders `a` as a DOT digraph. Nodes and edges come out sorted, and
/// parallel edges are merged into one with comma-joined letters.
pub fn to_dot(a: &Dfa, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
    out.push_str("  rankdir=LR;\n  __start [shape=point];\n");
    for q in 0..a.state_count() {
        let shape = if a.is_final(q) { "doublecircle" } else { "circle" };
        writeln!(out, "  {q} [shape={shape}];").unwrap();
    }
    writeln!(out, "  __start -> {};", a.initial()).unwrap();
    let mut edges: BTreeMap<(usize, usize), Vec<char>> = BTreeMap::new();
    for q in 0..a.state_count() {
        for (x, &c) in a.alphabet().iter().enumerate() {
            edges.entry((q, a.step(q, x))).or_default().push(c);
        }
    }
    for ((q, r), letters) in edges {
        let label: Vec<String> = letters.iter().map(char::to_string).collect();
        writeln!(out, "  {q} -> {r} [label=\"{}\"];", label.join(",")).unwrap();
    }
    out.push_str("}\n");
    out
}
