//! JSON document model for diagrams. Node indices are 1-based.

use crate::classify::RealFormDescriptor;
use crate::diagram::{build_diagram, NodeKind};
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::involution::{automorphisms, DiagramInvolution};
use crate::vogan::{FlipMove, VoganDiagram};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub index: usize,
    pub kind: NodeKind,
    pub painted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub schema_version: String,
    pub family: FamilyId,
    pub nodes: Vec<NodeDoc>,
    pub arrows: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realform: Option<RealFormDescriptor>,
}

/// Output of `reduce`: the canonical diagram and the 1-based flip nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceDocument {
    pub diagram: DiagramDocument,
    pub trail: Vec<usize>,
}

impl DiagramDocument {
    pub fn from_vogan(v: &VoganDiagram, realform: Option<RealFormDescriptor>) -> Self {
        DiagramDocument {
            schema_version: SCHEMA_VERSION.into(),
            family: v.family().clone(),
            nodes: v
                .diagram
                .nodes
                .iter()
                .map(|n| NodeDoc { index: n.index + 1, kind: n.kind, painted: v.painted.contains(&n.index) })
                .collect(),
            arrows: v.involution.arrows().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
            realform,
        }
    }

    /// Rebuilds the Vogan diagram; the arrows must form one of the family's
    /// involutions.
    pub fn to_vogan(&self) -> Result<VoganDiagram> {
        let d = Arc::new(build_diagram(&self.family)?);
        if self.nodes.len() != d.len() {
            return Err(Error::BadIndex(self.nodes.len(), format!("{} has {} nodes", self.family, d.len())));
        }
        let mut perm: Vec<usize> = (0..d.len()).collect();
        for &[i, j] in &self.arrows {
            if i == 0 || j == 0 || i > d.len() || j > d.len() {
                return Err(Error::BadIndex(i.max(j), "arrow endpoint out of range".into()));
            }
            perm.swap(i - 1, j - 1);
        }
        let inv: DiagramInvolution = automorphisms(&d)
            .into_iter()
            .find(|a| a.perm == perm)
            .ok_or_else(|| Error::UnknownInvolution(format!("{:?}", self.arrows)))?;
        let painted = self.nodes.iter().filter(|n| n.painted).map(|n| n.index - 1).collect();
        VoganDiagram::new(d, inv, painted)
    }
}

impl ReduceDocument {
    pub fn new(v: &VoganDiagram, trail: &[FlipMove], realform: Option<RealFormDescriptor>) -> Self {
        ReduceDocument {
            diagram: DiagramDocument::from_vogan(v, realform),
            trail: trail.iter().map(|f| f.at + 1).collect(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::ParseError { pos: e.column(), msg: e.to_string() })
}
