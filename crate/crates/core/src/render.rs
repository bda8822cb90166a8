//! ASCII and DOT renderings of Vogan diagrams.
//!
//! ASCII: `o` even, `*` painted, `(x)` odd isotropic, `(*)` odd
//! non-isotropic; `---` single bond, `==>`/`<==` double and `===>`/`<===`
//! triple bonds pointing at the shorter root. Nodes off the main chain
//! (fork ends and auxiliary even nodes) hang below their first neighbour.

use crate::classify::RealFormDescriptor;
use crate::diagram::{NodeKind, SuperDynkinDiagram};
use crate::vogan::VoganDiagram;
use num_traits::{Signed, Zero};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RenderOptions {
    pub show_labels: bool,
    pub show_realform: bool,
}

fn glyph(v: &VoganDiagram, i: usize) -> &'static str {
    match v.diagram.nodes[i].kind {
        NodeKind::Even if v.painted.contains(&i) => "*",
        NodeKind::Even => "o",
        NodeKind::OddIsotropic => "(x)",
        NodeKind::OddNonisotropic => "(*)",
    }
}

/// Bond drawn from `i` (left) to `j` (right).
fn bond(d: &SuperDynkinDiagram, i: usize, j: usize) -> String {
    let Some(e) = d.edge(i, j) else { return "   ".into() };
    let (ni, nj) = (d.inner(i, i).abs(), d.inner(j, j).abs());
    let mult = e.multiplicity() as usize;
    // bonds at isotropic nodes are drawn single
    if mult == 1 || ni.is_zero() || nj.is_zero() {
        return "---".into();
    }
    let bars = "=".repeat(mult);
    if ni == nj {
        format!("{bars}=")
    } else if nj < ni {
        format!("{bars}>")
    } else {
        format!("<{bars}")
    }
}

/// Main chain: the longest prefix `0, 1, 2, ...` of consecutively bonded
/// simple nodes.
fn main_chain(d: &SuperDynkinDiagram) -> Vec<usize> {
    let mut chain = vec![0];
    while chain.len() < d.rank && d.edge(chain.len() - 1, chain.len()).is_some() {
        chain.push(chain.len());
    }
    chain
}

pub fn ascii(v: &VoganDiagram, realform: Option<&RealFormDescriptor>, opts: RenderOptions) -> String {
    let d = &v.diagram;
    let chain = main_chain(d);
    let mut line = String::new();
    let mut center = vec![None; d.len()];
    for (k, &i) in chain.iter().enumerate() {
        if k > 0 {
            line.push_str(&bond(d, chain[k - 1], i));
        }
        let g = glyph(v, i);
        center[i] = Some(line.chars().count() + g.len() / 2);
        line.push_str(g);
    }
    let mut out = String::new();
    out.push_str(&line);
    out.push('\n');
    if opts.show_labels {
        let mut labels = String::new();
        for &i in &chain {
            let c = center[i].expect("chain node");
            let text = (i + 1).to_string();
            while labels.chars().count() < c {
                labels.push(' ');
            }
            labels.push_str(&text);
        }
        out.push_str(&labels);
        out.push('\n');
    }
    for x in 0..d.len() {
        if center[x].is_some() {
            continue;
        }
        let neighbours: Vec<usize> = (0..d.len()).filter(|&j| j != x && d.edge(x, j).is_some()).collect();
        let anchor = neighbours.iter().copied().find(|&j| center[j].is_some());
        let g = glyph(v, x);
        let col = anchor.and_then(|a| center[a]).unwrap_or(0);
        let pad = col.saturating_sub(g.len() / 2);
        let bonds: Vec<String> = neighbours.iter().map(|&j| format!("{} {}", bond(d, x, j).trim(), j + 1)).collect();
        let aux = if d.nodes[x].auxiliary { " aux" } else { "" };
        if anchor.is_some() {
            let _ = writeln!(out, "{}|", " ".repeat(col));
        }
        let _ = writeln!(out, "{}{}  node {}{}: {}", " ".repeat(pad), g, x + 1, aux, bonds.join(", "));
    }
    for (i, j) in v.involution.arrows() {
        let _ = writeln!(out, "{} <--> {}", i + 1, j + 1);
    }
    if opts.show_realform {
        if let Some(r) = realform {
            let _ = writeln!(out, "real form: {} [{}]", r.super_name, r.even_name());
        }
    }
    out
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn dot(v: &VoganDiagram, realform: Option<&RealFormDescriptor>, opts: RenderOptions) -> String {
    let d = &v.diagram;
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", dot_quote(&d.family.to_string()));
    out.push_str("  node [shape=circle, label=\"\", width=0.3];\n");
    for (i, n) in d.nodes.iter().enumerate() {
        let mut attrs = vec![format!("xlabel={}", dot_quote(&(i + 1).to_string()))];
        match n.kind {
            NodeKind::Even => {}
            NodeKind::OddIsotropic => attrs.push("label=\"x\"".into()),
            NodeKind::OddNonisotropic => attrs.push("label=\"*\"".into()),
        }
        let mut style = Vec::new();
        if v.painted.contains(&i) {
            style.push("filled");
            attrs.push("fillcolor=black".into());
        }
        if n.auxiliary {
            style.push("dashed");
        }
        if !style.is_empty() {
            attrs.push(format!("style={}", dot_quote(&style.join(","))));
        }
        let _ = writeln!(out, "  n{} [{}];", i + 1, attrs.join(", "));
    }
    for e in &d.edges {
        let b = bond(d, e.i, e.j);
        if b == "---" {
            let _ = writeln!(out, "  n{} -- n{};", e.i + 1, e.j + 1);
        } else {
            let _ = writeln!(out, "  n{} -- n{} [label={}];", e.i + 1, e.j + 1, dot_quote(&b));
        }
    }
    for (i, j) in v.involution.arrows() {
        let _ = writeln!(out, "  n{} -- n{} [style=dotted, dir=both, constraint=false];", i + 1, j + 1);
    }
    if opts.show_realform {
        if let Some(r) = realform {
            let _ = writeln!(out, "  label={};", dot_quote(&format!("{} [{}]", r.super_name, r.even_name())));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec_parse::parse_family;
    use crate::vogan::enumerate_vogan;

    fn first(s: &str) -> VoganDiagram {
        enumerate_vogan(&parse_family(s).unwrap()).unwrap().remove(0)
    }

    #[test]
    fn a11_ascii() {
        assert_eq!(ascii(&first("A(1,1)"), None, RenderOptions::default()), "o---(x)---o\n");
    }

    #[test]
    fn b01_ascii() {
        assert_eq!(ascii(&first("B(0,1)"), None, RenderOptions::default()), "(*)\n");
        assert_eq!(ascii(&first("B(0,2)"), None, RenderOptions::default()), "o==>(*)\n");
    }

    #[test]
    fn fork_and_aux_hang_below() {
        let out = ascii(&first("D(3,1)"), None, RenderOptions { show_labels: true, show_realform: false });
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "(x)---o---o");
        assert_eq!(lines[1], " 1    2   3");
        assert!(out.contains("node 4: --- 2"), "{out}");
        assert!(out.contains("node 5 aux"), "{out}");
    }

    #[test]
    fn arrows_annotated() {
        let vs = enumerate_vogan(&parse_family("D(2,1;1)").unwrap()).unwrap();
        let swap = vs.iter().find(|v| !v.involution.is_identity()).unwrap();
        assert!(ascii(swap, None, RenderOptions::default()).contains("1 <--> 3"));
        assert!(dot(swap, None, RenderOptions::default()).contains("n1 -- n3 [style=dotted"));
    }
}
