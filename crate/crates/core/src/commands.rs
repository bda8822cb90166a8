//! Command implementations behind the CLI. Each returns the rendered text.

use crate::classify::{classified_classes, classify, enumerate_real_forms, RealFormDescriptor};
use crate::diagram::build_diagram;
use crate::document::{to_json, DiagramDocument, ReduceDocument};
use crate::error::{Error, Result};
use crate::family::{FamilyId, FamilyKind};
use crate::involution::automorphisms;
use crate::render::{ascii, dot, RenderOptions};
use crate::spec_parse::parse_family;
use crate::table::{self, find_match, records_of, row_info, row_of, Source, ROWS};
use crate::vogan::{enumerate_vogan, reduce_with_trail, vogan_classes, VoganDiagram};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt::Write;
use std::sync::Arc;

/// Largest diagram (auxiliary nodes included) accepted by `enumerate`.
pub const RANK_GUARD: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Ascii,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: Format,
    pub show_labels: bool,
    pub show_realform: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { format: Format::Ascii, show_labels: false, show_realform: true }
    }
}

impl RenderSpec {
    fn options(&self) -> RenderOptions {
        RenderOptions { show_labels: self.show_labels, show_realform: self.show_realform }
    }

    fn one(&self, v: &VoganDiagram, rf: Option<&RealFormDescriptor>) -> Result<String> {
        match self.format {
            Format::Ascii => Ok(ascii(v, rf, self.options())),
            Format::Dot => Ok(dot(v, rf, self.options())),
            Format::Json => to_json(&DiagramDocument::from_vogan(v, rf.cloned())),
        }
    }
}

fn unpainted(family: &FamilyId) -> Result<VoganDiagram> {
    let d = Arc::new(build_diagram(family)?);
    let id = automorphisms(&d).remove(0);
    VoganDiagram::new(d, id, BTreeSet::new())
}

pub fn cmd_diagram(spec: &str, render: &RenderSpec) -> Result<String> {
    let v = unpainted(&parse_family(spec)?)?;
    render.one(&v, None)
}

pub fn cmd_enumerate(spec: &str, reduce: bool, classify_flag: bool, render: &RenderSpec) -> Result<String> {
    let family = parse_family(spec)?;
    let size = build_diagram(&family)?.len();
    if size > RANK_GUARD {
        return Err(Error::RankGuardExceeded(size, RANK_GUARD));
    }
    let items: Vec<(VoganDiagram, Option<RealFormDescriptor>)> = match (reduce, classify_flag) {
        (true, true) => classified_classes(&family)?.into_iter().map(|(v, d)| (v, Some(d))).collect(),
        (true, false) => vogan_classes(&family)?.into_iter().map(|v| (v, None)).collect(),
        (false, c) => enumerate_vogan(&family)?
            .into_iter()
            .map(|v| {
                let rf = c.then(|| classify(&v));
                (v, rf)
            })
            .collect(),
    };
    match render.format {
        Format::Json => {
            let docs: Vec<DiagramDocument> =
                items.iter().map(|(v, rf)| DiagramDocument::from_vogan(v, rf.clone())).collect();
            to_json(&docs)
        }
        Format::Ascii => {
            let mut out = String::new();
            for (k, (v, rf)) in items.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "#{} {}", k + 1, v.involution.name);
                out.push_str(&render.one(v, rf.as_ref())?);
            }
            Ok(out)
        }
        Format::Dot => items.iter().map(|(v, rf)| render.one(v, rf.as_ref())).collect(),
    }
}

/// Builds a diagram from 1-based painted indices and an involution name.
pub fn select_diagram(family: &FamilyId, painted: &[usize], involution: Option<&str>) -> Result<VoganDiagram> {
    let d = Arc::new(build_diagram(family)?);
    let name = involution.unwrap_or("identity");
    let inv = automorphisms(&d)
        .into_iter()
        .find(|a| a.name == name)
        .ok_or_else(|| Error::UnknownInvolution(name.to_string()))?;
    let mut set = BTreeSet::new();
    for &i in painted {
        if i == 0 || i > d.len() {
            return Err(Error::BadIndex(i, format!("nodes are numbered 1..={}", d.len())));
        }
        if !d.is_even(i - 1) {
            return Err(Error::BadIndex(i, "odd nodes cannot be painted".into()));
        }
        if !d.is_paintable(i - 1) {
            return Err(Error::BadIndex(i, format!("{family} has no paintable nodes")));
        }
        if !inv.fixes(i - 1) {
            return Err(Error::BadIndex(i, format!("node is moved by `{name}`")));
        }
        set.insert(i - 1);
    }
    VoganDiagram::new(d, inv, set)
}

pub fn cmd_reduce(spec: &str, painted: &[usize], involution: Option<&str>, render: &RenderSpec) -> Result<String> {
    let v = select_diagram(&parse_family(spec)?, painted, involution)?;
    let (r, trail) = reduce_with_trail(&v);
    let rf = render.show_realform.then(|| classify(&r));
    let flips: Vec<String> = trail.iter().map(|f| (f.at + 1).to_string()).collect();
    let trail_text = if flips.is_empty() { "none".to_string() } else { flips.join(", ") };
    match render.format {
        Format::Json => to_json(&ReduceDocument::new(&r, &trail, rf)),
        Format::Ascii => Ok(format!("{}flips: {trail_text}\n", render.one(&r, rf.as_ref())?)),
        Format::Dot => Ok(format!("// flips: {trail_text}\n{}", render.one(&r, rf.as_ref())?)),
    }
}

pub fn cmd_classify(spec: &str, painted: &[usize], involution: Option<&str>, render: &RenderSpec) -> Result<String> {
    let v = select_diagram(&parse_family(spec)?, painted, involution)?;
    let rf = classify(&v);
    let spec = RenderSpec { show_realform: true, ..*render };
    spec.one(&v, Some(&rf))
}

/// One line of `table` output. `status` is `match`, `figure` (a shape
/// drawn in the published figures only), `absent` (table line not realized
/// at this rank), `symbolic` (row listing) or `MISMATCH`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableLine {
    pub g: String,
    pub g0: String,
    pub g_c: String,
    pub g_0c: String,
    pub table_g_c: String,
    pub table_g_0c: String,
    pub status: String,
}

pub const MISMATCH: &str = "MISMATCH";

fn g0_of(f: &FamilyId) -> String {
    let (m, n) = (f.m, f.n);
    match f.kind {
        FamilyKind::A if f.is_psl() => format!("sl({})⊕sl({})", m + 1, n + 1),
        FamilyKind::A => format!("sl({})⊕sl({})⊕U(1)", m + 1, n + 1),
        FamilyKind::B => format!("so({})⊕sp({})", 2 * m + 1, 2 * n),
        FamilyKind::B0 => format!("sp({})", 2 * n),
        FamilyKind::C => format!("so(2)⊕sp({})", 2 * n),
        FamilyKind::D => format!("so({})⊕sp({})", 2 * m, 2 * n),
        _ => row_info(row_of(f)).g0.to_string(),
    }
}

fn symbolic_record(idx: usize) -> (String, String) {
    let r = &table::RECORDS[idx];
    let even: Vec<String> = r.even.iter().map(|e| e.symbolic()).collect();
    (r.super_shape.symbolic(), even.join("⊕"))
}

fn symbolic_row(spec: &str) -> Option<table::Row> {
    let key: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let alias = match key.as_str() {
        "C(n)" => "C(n+1)",
        "D(2,1;a)" | "D(2,1;alpha)" => "D(2,1;α)",
        other => other,
    };
    ROWS.iter().find(|r| r.g == alias).map(|r| r.row)
}

pub fn table_lines(spec: &str) -> Result<Vec<TableLine>> {
    let family = match parse_family(spec) {
        Ok(f) => f,
        Err(e) => {
            let Some(row) = symbolic_row(spec) else { return Err(e) };
            let info = row_info(row);
            return Ok(records_of(row)
                .into_iter()
                .map(|idx| {
                    let (gc, g0c) = symbolic_record(idx);
                    TableLine {
                        g: info.g.into(),
                        g0: info.g0.into(),
                        g_c: gc.clone(),
                        g_0c: g0c.clone(),
                        table_g_c: gc,
                        table_g_0c: g0c,
                        status: "symbolic".into(),
                    }
                })
                .collect());
        }
    };
    let forms = enumerate_real_forms(&family)?;
    let g = family.to_string();
    let g0 = g0_of(&family);
    let mut lines = Vec::new();
    let mut realized = BTreeSet::new();
    for d in &forms {
        let even = d.even_name();
        let found = find_match(&family, &d.super_name, &even);
        let (status, record) = match found {
            Some((idx, _, _)) => {
                realized.insert(idx);
                let status = if table::RECORDS[idx].source == Source::Figure { "figure" } else { "match" };
                (status, symbolic_record(idx))
            }
            None => (MISMATCH, ("-".to_string(), "-".to_string())),
        };
        lines.push(TableLine {
            g: g.clone(),
            g0: g0.clone(),
            g_c: d.super_name.clone(),
            g_0c: even,
            table_g_c: record.0,
            table_g_0c: record.1,
            status: status.into(),
        });
    }
    for idx in records_of(row_of(&family)) {
        if !realized.contains(&idx) {
            let (gc, g0c) = symbolic_record(idx);
            lines.push(TableLine {
                g: g.clone(),
                g0: g0.clone(),
                g_c: "-".into(),
                g_0c: "-".into(),
                table_g_c: gc,
                table_g_0c: g0c,
                status: "absent".into(),
            });
        }
    }
    Ok(lines)
}

pub fn cmd_table(spec: &str, render: &RenderSpec) -> Result<String> {
    let lines = table_lines(spec)?;
    match render.format {
        Format::Json => to_json(&lines),
        Format::Dot => Err(Error::Unsupported("`table` has no DOT rendering; use ascii or json".into())),
        Format::Ascii => {
            let header = ["g", "g0", "g_C", "g_0C", "table g_C", "table g_0C", "status"];
            let rows: Vec<[&str; 7]> = lines
                .iter()
                .map(|l| [&*l.g, &*l.g0, &*l.g_c, &*l.g_0c, &*l.table_g_c, &*l.table_g_0c, &*l.status])
                .collect();
            let width =
                |k: usize| rows.iter().map(|r| r[k].chars().count()).chain([header[k].len()]).max().unwrap_or(0);
            let widths: Vec<usize> = (0..7).map(width).collect();
            let fmt_row = |cells: &[&str; 7]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                padded.join(" | ").trim_end().to_string()
            };
            let mut out = fmt_row(&header);
            out.push('\n');
            out.push_str(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("-+-"));
            out.push('\n');
            for r in &rows {
                out.push_str(&fmt_row(r));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json() -> RenderSpec {
        RenderSpec { format: Format::Json, ..RenderSpec::default() }
    }

    #[test]
    fn diagram_examples() {
        assert_eq!(cmd_diagram("A(1,1)", &RenderSpec::default()).unwrap(), "o---(x)---o\n");
        assert!(matches!(cmd_diagram("D(2,1;0)", &RenderSpec::default()), Err(Error::InvalidFamily(_))));
        assert!(matches!(cmd_diagram("Q(3)", &RenderSpec::default()), Err(Error::ParseError { pos: 0, .. })));
    }

    #[test]
    fn enumerate_f4_reduced_classified() {
        let out = cmd_enumerate("F(4)", true, true, &json()).unwrap();
        let docs: Vec<DiagramDocument> = serde_json::from_str(&out).unwrap();
        let evens: Vec<String> = docs.iter().map(|d| d.realform.as_ref().unwrap().even_name()).collect();
        assert_eq!(evens, vec!["sl(2,R)⊕so(7)", "sl(2,R)⊕so(1,6)", "sl(2,R)⊕so(2,5)", "sl(2,R)⊕so(3,4)"]);
        let b0 = cmd_enumerate("B(0,2)", false, true, &json()).unwrap();
        let docs: Vec<DiagramDocument> = serde_json::from_str(&b0).unwrap();
        assert_eq!(docs.len(), 1);
        assert_eq!(docs[0].realform.as_ref().unwrap().super_name, "osp(1|4;R)");
    }

    #[test]
    fn rank_guard() {
        assert_eq!(cmd_enumerate("A(6,6)", false, false, &json()), Err(Error::RankGuardExceeded(13, 12)));
    }

    #[test]
    fn reduce_examples() {
        let out = cmd_reduce("A(3,0)", &[1, 3], None, &json()).unwrap();
        let doc: ReduceDocument = serde_json::from_str(&out).unwrap();
        let painted: Vec<usize> = doc.diagram.nodes.iter().filter(|n| n.painted).map(|n| n.index).collect();
        assert_eq!(painted, vec![2]);
        assert!(!doc.trail.is_empty());
        let out = cmd_reduce("A(3,0)", &[], None, &json()).unwrap();
        let doc: ReduceDocument = serde_json::from_str(&out).unwrap();
        assert!(doc.trail.is_empty());
        assert!(matches!(cmd_reduce("A(3,0)", &[4], None, &json()), Err(Error::BadIndex(4, _))));
        assert!(matches!(cmd_reduce("A(3,0)", &[1], Some("nope"), &json()), Err(Error::UnknownInvolution(_))));
    }

    #[test]
    fn table_exceptional_rows_match() {
        for spec in ["F(4)", "G(3)", "D(2,1;1)", "B(0,1)", "B(0,2)", "B(0,3)"] {
            let lines = table_lines(spec).unwrap();
            assert!(lines.iter().all(|l| l.status == "match"), "{spec}: {lines:?}");
        }
        assert_eq!(table_lines("F(4)").unwrap().len(), 4);
    }

    #[test]
    fn symbolic_tables() {
        let b = table_lines("B(m,n)").unwrap();
        assert_eq!(b[0].g0, "so(2m+1)⊕sp(2n)");
        assert_eq!(b[0].g_c, "osp(p,2m+1-p|2n;R)");
        let a = table_lines("A(n,n)").unwrap();
        assert!(a[0].g_c.starts_with("psl("));
        assert!(cmd_table("F(4)", &RenderSpec { format: Format::Dot, ..RenderSpec::default() }).is_err());
    }
}
