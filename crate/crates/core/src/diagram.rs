//! Distinguished super Dynkin diagrams.
//!
//! Besides the distinguished simple roots, each diagram carries the even
//! simple roots that are missing from the distinguished system (for example
//! `2d_n` in B(m,n) and D(m,n)) as *auxiliary* even nodes, so that the even
//! nodes together form a simple system of the even root system. Auxiliary
//! nodes always come after the `rank` simple nodes.

use crate::cartan::{cartan_entries, gram_matrix};
use crate::error::Result;
use crate::family::{FamilyId, FamilyKind};
use crate::rational::{frac, q, Matrix, Q};
use crate::weight::{Metric, WeightVector};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Even,
    OddIsotropic,
    OddNonisotropic,
}

impl NodeKind {
    pub fn is_odd(self) -> bool {
        self != NodeKind::Even
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub index: usize,
    pub kind: NodeKind,
    pub root: WeightVector,
    pub auxiliary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub a_ij: Q,
    pub a_ji: Q,
}

impl Edge {
    /// Number of bonds drawn between the two nodes (1 for isotropic ends).
    pub fn multiplicity(&self) -> u32 {
        let prod = (self.a_ij * self.a_ji).abs();
        if prod.is_integer() && *prod.numer() > 1 {
            *prod.numer() as u32
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
}

impl ClassicalType {
    pub fn rank(self) -> usize {
        match self {
            ClassicalType::A(l) | ClassicalType::B(l) | ClassicalType::C(l) | ClassicalType::D(l) => l,
            ClassicalType::G2 => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartSide {
    /// Built from the `e_i`.
    E,
    /// Built from the `d_j`.
    Delta,
    /// One of the three sl(2) legs of D(2,1;alpha), numbered 1..=3.
    Leg(u8),
}

/// One simple ideal (or, for D_2, the pair of ideals) of the even part.
/// `nodes` lists node indices in the standard order of `ctype`:
/// chain order for A; long to short for B; short to long for C (the long
/// root last); the fork pair last for D; short then long for G2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenPart {
    pub side: PartSide,
    pub ctype: ClassicalType,
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperDynkinDiagram {
    pub family: FamilyId,
    pub metric: Metric,
    pub nodes: Vec<Node>,
    pub rank: usize,
    pub edges: Vec<Edge>,
    pub parts: Vec<EvenPart>,
    /// Even simple roots that are neither simple nor drawn (only `2d_n`
    /// in B(0,n)); used to expand even roots, never paintable.
    pub implicit_even: Vec<WeightVector>,
}

impl SuperDynkinDiagram {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn simple_roots(&self) -> Vec<WeightVector> {
        self.nodes[..self.rank].iter().map(|n| n.root.clone()).collect()
    }

    pub fn even_nodes(&self) -> Vec<usize> {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Even).map(|n| n.index).collect()
    }

    pub fn odd_nodes(&self) -> Vec<usize> {
        self.nodes.iter().filter(|n| n.kind.is_odd()).map(|n| n.index).collect()
    }

    pub fn is_even(&self, i: usize) -> bool {
        self.nodes.get(i).is_some_and(|n| n.kind == NodeKind::Even)
    }

    /// Nodes that may carry paint. In B(0,n) none do: the unique diagram
    /// is unpainted, its painted long root being the implicit `2d_n`.
    pub fn is_paintable(&self, i: usize) -> bool {
        self.is_even(i) && self.family.kind != FamilyKind::B0
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.i == i || e.j == i).count()
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&Edge> {
        self.edges.iter().find(|e| (e.i == i && e.j == j) || (e.i == j && e.j == i))
    }

    pub fn inner(&self, i: usize, j: usize) -> Q {
        self.metric.inner(&self.nodes[i].root, &self.nodes[j].root)
    }

    /// Gram matrix of all drawn nodes, auxiliary ones included.
    pub fn gram(&self) -> Matrix {
        let roots: Vec<WeightVector> = self.nodes.iter().map(|n| n.root.clone()).collect();
        gram_matrix(&self.metric, &roots)
    }

    /// Even simple system: even nodes first, then the implicit extras.
    pub fn even_basis(&self) -> Vec<WeightVector> {
        self.even_nodes()
            .into_iter()
            .map(|i| self.nodes[i].root.clone())
            .chain(self.implicit_even.iter().cloned())
            .collect()
    }

    /// Reflection integer `2<a_j, a_at>/<a_at, a_at>` between even nodes.
    pub fn reflection_integer(&self, at: usize, j: usize) -> Q {
        let n = self.inner(at, at);
        q(2) * self.inner(j, at) / n
    }

    /// Connected components of the even nodes restricted to `allowed`.
    pub fn even_components(&self, allowed: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for &start in allowed {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for &j in allowed {
                    if !seen[j] && !self.inner(i, j).is_zero() {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn part_of(&self, node: usize) -> Option<&EvenPart> {
        self.parts.iter().find(|p| p.nodes.contains(&node))
    }
}

struct Builder {
    m: usize,
    n: usize,
    nodes: Vec<(NodeKind, WeightVector, bool)>,
}

impl Builder {
    fn new(m: usize, n: usize) -> Self {
        Builder { m, n, nodes: Vec::new() }
    }
    fn e(&self, i: usize) -> WeightVector {
        WeightVector::e(self.m, self.n, i)
    }
    fn d(&self, j: usize) -> WeightVector {
        WeightVector::d(self.m, self.n, j)
    }
    fn push(&mut self, kind: NodeKind, root: WeightVector) -> usize {
        self.nodes.push((kind, root, false));
        self.nodes.len() - 1
    }
    fn aux(&mut self, root: WeightVector) -> usize {
        self.nodes.push((NodeKind::Even, root, true));
        self.nodes.len() - 1
    }
}

/// Builds the distinguished diagram of `family`.
pub fn build_diagram(family: &FamilyId) -> Result<SuperDynkinDiagram> {
    family.validate()?;
    let (m, n) = (family.m as usize, family.n as usize);
    let mut parts = Vec::new();
    let mut implicit_even = Vec::new();
    let (metric, b) = match family.kind {
        FamilyKind::A => {
            let mut b = Builder::new(m + 1, n + 1);
            for i in 0..m {
                let r = &b.e(i) - &b.e(i + 1);
                b.push(NodeKind::Even, r);
            }
            let r = &b.e(m) - &b.d(0);
            b.push(NodeKind::OddIsotropic, r);
            for j in 0..n {
                let r = &b.d(j) - &b.d(j + 1);
                b.push(NodeKind::Even, r);
            }
            if m > 0 {
                parts.push(EvenPart { side: PartSide::E, ctype: ClassicalType::A(m), nodes: (0..m).collect() });
            }
            if n > 0 {
                parts.push(EvenPart {
                    side: PartSide::Delta,
                    ctype: ClassicalType::A(n),
                    nodes: (m + 1..m + 1 + n).collect(),
                });
            }
            (Metric::standard(m + 1, n + 1), b)
        }
        FamilyKind::B | FamilyKind::B0 | FamilyKind::D => {
            let mut b = Builder::new(m, n);
            for j in 0..n - 1 {
                let r = &b.d(j) - &b.d(j + 1);
                b.push(NodeKind::Even, r);
            }
            if family.kind == FamilyKind::B0 {
                let r = b.d(n - 1);
                b.push(NodeKind::OddNonisotropic, r);
                implicit_even.push(q(2) * &b.d(n - 1));
                if n > 1 {
                    parts.push(EvenPart {
                        side: PartSide::Delta,
                        ctype: ClassicalType::A(n - 1),
                        nodes: (0..n - 1).collect(),
                    });
                }
            } else {
                let r = &b.d(n - 1) - &b.e(0);
                b.push(NodeKind::OddIsotropic, r);
                for i in 0..m - 1 {
                    let r = &b.e(i) - &b.e(i + 1);
                    b.push(NodeKind::Even, r);
                }
                let last = if family.kind == FamilyKind::B { b.e(m - 1) } else { &b.e(m - 2) + &b.e(m - 1) };
                b.push(NodeKind::Even, last);
                let aux = b.aux(q(2) * &b.d(n - 1));
                let mut c_nodes: Vec<usize> = (0..n - 1).collect();
                c_nodes.push(aux);
                parts.push(EvenPart { side: PartSide::Delta, ctype: ClassicalType::C(n), nodes: c_nodes });
                let ctype = if family.kind == FamilyKind::B { ClassicalType::B(m) } else { ClassicalType::D(m) };
                parts.push(EvenPart { side: PartSide::E, ctype, nodes: (n..n + m).collect() });
            }
            (Metric::standard(m, n), b)
        }
        FamilyKind::C => {
            let mut b = Builder::new(1, n);
            let r = &b.e(0) - &b.d(0);
            b.push(NodeKind::OddIsotropic, r);
            for j in 0..n - 1 {
                let r = &b.d(j) - &b.d(j + 1);
                b.push(NodeKind::Even, r);
            }
            let r = q(2) * &b.d(n - 1);
            b.push(NodeKind::Even, r);
            parts.push(EvenPart { side: PartSide::Delta, ctype: ClassicalType::C(n), nodes: (1..=n).collect() });
            (Metric::standard(1, n), b)
        }
        FamilyKind::F4 => {
            // e_1..e_3 orthonormal, <d,d> = -3
            let mut b = Builder::new(3, 1);
            let odd = frac(1, 2) * &(&(&(&b.d(0) - &b.e(0)) - &b.e(1)) - &b.e(2));
            b.push(NodeKind::OddIsotropic, odd);
            let r = b.e(2);
            b.push(NodeKind::Even, r);
            let r = &b.e(1) - &b.e(2);
            b.push(NodeKind::Even, r);
            let r = &b.e(0) - &b.e(1);
            b.push(NodeKind::Even, r);
            let aux = b.aux(b.d(0));
            parts.push(EvenPart { side: PartSide::Delta, ctype: ClassicalType::A(1), nodes: vec![aux] });
            parts.push(EvenPart { side: PartSide::E, ctype: ClassicalType::B(3), nodes: vec![3, 2, 1] });
            (Metric { e: vec![q(1); 3], d: vec![q(-3)] }, b)
        }
        FamilyKind::G3 => {
            // eps_i = e_i - (e_1+e_2+e_3)/3 in the standard metric, <d,d> = -2/3
            let mut b = Builder::new(3, 1);
            let third = WeightVector { e: vec![frac(1, 3); 3], d: vec![Q::zero()] };
            let eps: Vec<WeightVector> = (0..3).map(|i| &b.e(i) - &third).collect();
            let r = &b.d(0) + &eps[0];
            b.push(NodeKind::OddIsotropic, r);
            b.push(NodeKind::Even, eps[1].clone());
            b.push(NodeKind::Even, &eps[2] - &eps[1]);
            let aux = b.aux(q(2) * &b.d(0));
            parts.push(EvenPart { side: PartSide::Delta, ctype: ClassicalType::A(1), nodes: vec![aux] });
            parts.push(EvenPart { side: PartSide::E, ctype: ClassicalType::G2, nodes: vec![1, 2] });
            (Metric { e: vec![q(1); 3], d: vec![frac(-2, 3)] }, b)
        }
        FamilyKind::D21alpha => {
            let a = family.alpha();
            let mut b = Builder::new(3, 0);
            let r = q(2) * &b.e(1);
            b.push(NodeKind::Even, r);
            let r = &(&b.e(0) - &b.e(1)) - &b.e(2);
            b.push(NodeKind::OddIsotropic, r);
            let r = q(2) * &b.e(2);
            b.push(NodeKind::Even, r);
            let aux = b.aux(q(2) * &b.e(0));
            parts.push(EvenPart { side: PartSide::Leg(1), ctype: ClassicalType::A(1), nodes: vec![aux] });
            parts.push(EvenPart { side: PartSide::Leg(2), ctype: ClassicalType::A(1), nodes: vec![0] });
            parts.push(EvenPart { side: PartSide::Leg(3), ctype: ClassicalType::A(1), nodes: vec![2] });
            let metric = Metric { e: vec![-(q(1) + a) / q(2), frac(1, 2), a / q(2)], d: vec![] };
            (metric, b)
        }
    };
    let rank = b.nodes.iter().filter(|n| !n.2).count();
    let nodes: Vec<Node> = b
        .nodes
        .into_iter()
        .enumerate()
        .map(|(index, (kind, root, auxiliary))| Node { index, kind, root, auxiliary })
        .collect();
    let roots: Vec<WeightVector> = nodes.iter().map(|n| n.root.clone()).collect();
    let gram = gram_matrix(&metric, &roots);
    let a = cartan_entries(&gram, rank)?;
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if !gram[(i, j)].is_zero() {
                edges.push(Edge { i, j, a_ij: a[(i, j)], a_ji: a[(j, i)] });
            }
        }
    }
    Ok(SuperDynkinDiagram { family: family.clone(), metric, nodes, rank, edges, parts, implicit_even })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a11_nodes() {
        let d = build_diagram(&FamilyId::a(1, 1).unwrap()).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.rank, 3);
        let kinds: Vec<NodeKind> = d.nodes.iter().map(|n| n.kind).collect();
        assert_eq!(kinds, vec![NodeKind::Even, NodeKind::OddIsotropic, NodeKind::Even]);
        assert_eq!(d.inner(1, 1), q(0));
        assert_eq!(d.inner(0, 0), q(2));
        assert_eq!(d.inner(2, 2), q(-2));
    }

    #[test]
    fn b01_single_nonisotropic_node() {
        let d = build_diagram(&FamilyId::b(0, 1).unwrap()).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.nodes[0].kind, NodeKind::OddNonisotropic);
        assert!(d.even_nodes().is_empty());
        assert_eq!(d.inner(0, 0), q(-1));
    }

    #[test]
    fn d21_odd_node_has_degree_three() {
        let d = build_diagram(&FamilyId::d21(q(1)).unwrap()).unwrap();
        assert_eq!(d.rank, 3);
        assert_eq!(d.odd_nodes(), vec![1]);
        assert_eq!(d.degree(1), 3);
        assert_eq!(d.even_nodes().len(), 3);
    }

    #[test]
    fn node_counts() {
        let cases = [
            (FamilyId::a(2, 3).unwrap(), 6),
            (FamilyId::b(2, 3).unwrap(), 5),
            (FamilyId::c(3).unwrap(), 4),
            (FamilyId::d(3, 2).unwrap(), 5),
            (FamilyId::f4(), 4),
            (FamilyId::g3(), 3),
        ];
        for (f, r) in cases {
            let d = build_diagram(&f).unwrap();
            assert_eq!(d.rank, r, "{f}");
            assert_eq!(d.odd_nodes().len(), 1, "{f}");
        }
    }

    #[test]
    fn kinds_match_norms_and_edges_match_inner_products() {
        for f in crate::families::desk_families(4) {
            let d = build_diagram(&f).unwrap();
            for node in &d.nodes {
                let norm = d.inner(node.index, node.index);
                match node.kind {
                    NodeKind::OddIsotropic => assert!(norm.is_zero(), "{f}"),
                    _ => assert!(!norm.is_zero(), "{f}"),
                }
            }
            for i in 0..d.len() {
                for j in 0..d.len() {
                    if i != j {
                        assert_eq!(d.edge(i, j).is_some(), !d.inner(i, j).is_zero(), "{f} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn parts_cover_even_nodes_once() {
        for f in crate::families::desk_families(4) {
            let d = build_diagram(&f).unwrap();
            let mut covered: Vec<usize> = d.parts.iter().flat_map(|p| p.nodes.clone()).collect();
            covered.sort_unstable();
            assert_eq!(covered, d.even_nodes(), "{f}");
            for p in &d.parts {
                assert_eq!(p.nodes.len(), p.ctype.rank(), "{f}");
            }
        }
    }
}
