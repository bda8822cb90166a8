//! Vogan diagrams: enumeration, flips, reduction and equivalence.

use crate::cartan::{block_sign, dual_basis_of};
use crate::diagram::{build_diagram, SuperDynkinDiagram};
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::involution::{automorphisms, DiagramInvolution};
use crate::rational::Q;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

/// A diagram with an involution and a painted set of fixed even nodes.
#[derive(Clone)]
pub struct VoganDiagram {
    pub diagram: Arc<SuperDynkinDiagram>,
    pub involution: DiagramInvolution,
    pub painted: BTreeSet<usize>,
}

impl PartialEq for VoganDiagram {
    fn eq(&self, o: &Self) -> bool {
        self.diagram.family == o.diagram.family
            && self.involution.perm == o.involution.perm
            && self.painted == o.painted
    }
}

impl Eq for VoganDiagram {}

impl fmt::Debug for VoganDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] painted {:?}", self.diagram.family, self.involution.name, self.painted)
    }
}

/// One flip, at a painted node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipMove {
    pub at: usize,
}

impl VoganDiagram {
    pub fn new(
        diagram: Arc<SuperDynkinDiagram>,
        involution: DiagramInvolution,
        painted: BTreeSet<usize>,
    ) -> Result<Self> {
        for &i in &painted {
            if i >= diagram.len() {
                return Err(Error::BadIndex(i, "no such node".into()));
            }
            if !diagram.is_even(i) {
                return Err(Error::BadIndex(i, "odd nodes are never painted".into()));
            }
            if !diagram.is_paintable(i) {
                return Err(Error::BadIndex(i, "node is not paintable".into()));
            }
            if !involution.fixes(i) {
                return Err(Error::BadIndex(i, "node lies in a two-element orbit".into()));
            }
        }
        Ok(VoganDiagram { diagram, involution, painted })
    }

    pub fn family(&self) -> &FamilyId {
        &self.diagram.family
    }

    /// Paintable even nodes fixed by the involution.
    pub fn fixed_even(&self) -> Vec<usize> {
        fixed_even(&self.diagram, &self.involution)
    }

    fn mask(&self) -> u64 {
        to_mask(&self.painted)
    }

    fn with_mask(&self, mask: u64) -> Self {
        VoganDiagram {
            diagram: Arc::clone(&self.diagram),
            involution: self.involution.clone(),
            painted: from_mask(mask),
        }
    }
}

fn to_mask(s: &BTreeSet<usize>) -> u64 {
    s.iter().fold(0, |m, &i| m | (1 << i))
}

fn from_mask(mut mask: u64) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        out.insert(i);
        mask &= mask - 1;
    }
    out
}

pub fn fixed_even(d: &SuperDynkinDiagram, inv: &DiagramInvolution) -> Vec<usize> {
    d.even_nodes().into_iter().filter(|&i| inv.fixes(i) && d.is_paintable(i)).collect()
}

/// All Vogan diagrams of `family`: for each involution, every subset of
/// its fixed even nodes, in increasing bitmask order.
pub fn enumerate_vogan(family: &FamilyId) -> Result<Vec<VoganDiagram>> {
    let d = Arc::new(build_diagram(family)?);
    Ok(enumerate_for(&d))
}

pub fn enumerate_for(d: &Arc<SuperDynkinDiagram>) -> Vec<VoganDiagram> {
    let mut out = Vec::new();
    for inv in automorphisms(d) {
        let fixed = fixed_even(d, &inv);
        for bits in 0u64..(1 << fixed.len()) {
            let painted = fixed.iter().enumerate().filter(|(k, _)| bits & (1 << k) != 0).map(|(_, &i)| i).collect();
            out.push(VoganDiagram { diagram: Arc::clone(d), involution: inv.clone(), painted });
        }
    }
    out
}

/// Mask of the fixed even nodes toggled by a flip at `at`: those whose
/// reflection integer `2<a_j,a_at>/<a_at,a_at>` is odd.
fn toggle_mask(d: &SuperDynkinDiagram, fixed: &[usize], at: usize) -> u64 {
    fixed
        .iter()
        .filter(|&&j| j != at)
        .filter(|&&j| {
            let r = d.reflection_integer(at, j);
            r.is_integer() && r.numer().rem_euclid(2) == 1
        })
        .fold(0, |m, &j| m | (1 << j))
}

/// Reflects in the painted node `at`: the node stays painted and every fixed
/// even node whose reflection integer with it is odd toggles.
pub fn flip(v: &VoganDiagram, at: usize) -> Result<VoganDiagram> {
    let d = &v.diagram;
    if at >= d.len() {
        return Err(Error::BadIndex(at, "no such node".into()));
    }
    if !d.is_even(at) {
        return Err(Error::FlipAtOddNode(at));
    }
    if !v.involution.fixes(at) {
        return Err(Error::FlipAtMovedNode(at));
    }
    if !v.painted.contains(&at) {
        return Err(Error::FlipAtUnpainted(at));
    }
    let t = toggle_mask(d, &v.fixed_even(), at);
    Ok(v.with_mask(v.mask() ^ t))
}

/// Connected components of the fixed even nodes; flips never leave one.
pub fn flip_components(v: &VoganDiagram) -> Vec<Vec<usize>> {
    let mut comps = v.diagram.even_components(&v.fixed_even());
    comps.sort();
    comps
}

/// BFS over flips restricted to one component. Returns states in
/// discovery order with their parent links.
fn component_orbit(
    d: &SuperDynkinDiagram,
    fixed: &[usize],
    comp: &[usize],
    start: u64,
) -> (Vec<u64>, HashMap<u64, (u64, usize)>) {
    let toggles: Vec<(usize, u64)> = comp.iter().map(|&i| (i, toggle_mask(d, fixed, i))).collect();
    let mut order = vec![start];
    let mut parent = HashMap::new();
    let mut seen = HashSet::from([start]);
    let mut k = 0;
    while k < order.len() {
        let s = order[k];
        for &(at, t) in &toggles {
            if s & (1 << at) != 0 {
                let next = s ^ t;
                if seen.insert(next) {
                    parent.insert(next, (s, at));
                    order.push(next);
                }
            }
        }
        k += 1;
    }
    (order, parent)
}

/// Redundancy score of painting `i` alone in `comp`:
/// `max_{i' != i} sign * <w_i - w_i', w_i'>`, with `sign` the block's
/// symmetrizer sign. `None` when the component is a single node.
pub fn redundancy_score(d: &SuperDynkinDiagram, comp: &[usize], i: usize) -> Option<Q> {
    let omegas = dual_basis_of(d, comp)?;
    let sign = Q::from_integer(block_sign(d, comp) as i64);
    let pos = comp.iter().position(|&x| x == i)?;
    comp.iter()
        .enumerate()
        .filter(|&(p, _)| p != pos)
        .map(|(p, _)| {
            let diff = &omegas[pos] - &omegas[p];
            sign * d.metric.inner(&diff, &omegas[p])
        })
        .max()
}

/// Canonical flip-equivalent representative with at most one painted node
/// per component (when the orbit allows it), and the flips leading to it.
pub fn reduce_with_trail(v: &VoganDiagram) -> (VoganDiagram, Vec<FlipMove>) {
    let d = &v.diagram;
    let fixed = v.fixed_even();
    let start = v.mask();
    let mut result = start;
    let mut trail = Vec::new();
    for comp in flip_components(v) {
        let cmask = comp.iter().fold(0u64, |m, &i| m | (1 << i));
        let local = start & cmask;
        if local == 0 {
            continue;
        }
        let (orbit, parent) = component_orbit(d, &fixed, &comp, local);
        let singles: Vec<usize> =
            orbit.iter().filter(|s| s.count_ones() == 1).map(|s| s.trailing_zeros() as usize).collect();
        let target = if singles.is_empty() {
            *orbit
                .iter()
                .min_by_key(|s| (s.count_ones(), from_mask(**s).into_iter().collect::<Vec<_>>()))
                .expect("orbit contains its start")
        } else {
            let best = singles
                .iter()
                .copied()
                .min_by(|&a, &b| {
                    let (sa, sb) = (redundancy_score(d, &comp, a), redundancy_score(d, &comp, b));
                    sa.cmp(&sb).then(a.cmp(&b))
                })
                .expect("nonempty");
            1u64 << best
        };
        let mut path = Vec::new();
        let mut s = target;
        while s != local {
            let (prev, at) = parent[&s];
            path.push(FlipMove { at });
            s = prev;
        }
        path.reverse();
        trail.extend(path);
        result = (result & !cmask) | target;
    }
    (v.with_mask(result), trail)
}

pub fn reduce(v: &VoganDiagram) -> VoganDiagram {
    reduce_with_trail(v).0
}

/// Reachability by flips and relabelings through the family's diagram
/// involutions.
pub fn equivalent(v1: &VoganDiagram, v2: &VoganDiagram) -> Result<bool> {
    if v1.family() != v2.family() {
        return Err(Error::FamilyMismatch);
    }
    let d = &v1.diagram;
    let autos = automorphisms(d);
    let goal = (v2.involution.perm.clone(), v2.mask());
    let start = (v1.involution.perm.clone(), v1.mask());
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((perm, mask)) = queue.pop_front() {
        if (&perm, mask) == (&goal.0, goal.1) {
            return Ok(true);
        }
        let inv = DiagramInvolution { name: String::new(), perm };
        let fixed = fixed_even(d, &inv);
        let mut next = Vec::new();
        for &at in &fixed {
            if mask & (1 << at) != 0 {
                next.push((inv.perm.clone(), mask ^ toggle_mask(d, &fixed, at)));
            }
        }
        for sigma in &autos {
            let relabeled = (0..d.len()).filter(|&i| mask & (1 << i) != 0).fold(0u64, |m, i| m | (1 << sigma.perm[i]));
            next.push((inv.conjugate_by(sigma), relabeled));
        }
        for s in next {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    Ok(false)
}

/// Applies the diagram automorphism `sigma`: conjugates the involution and
/// moves the painting.
pub fn relabel(v: &VoganDiagram, sigma: &DiagramInvolution) -> VoganDiagram {
    let perm = v.involution.conjugate_by(sigma);
    let name = automorphisms(&v.diagram)
        .into_iter()
        .find(|a| a.perm == perm)
        .map_or_else(|| "conjugate".to_string(), |a| a.name);
    VoganDiagram {
        diagram: Arc::clone(&v.diagram),
        involution: DiagramInvolution { name, perm },
        painted: v.painted.iter().map(|&i| sigma.perm[i]).collect(),
    }
}

/// One reduced representative per equivalence class, in enumeration order.
pub fn vogan_classes(family: &FamilyId) -> Result<Vec<VoganDiagram>> {
    let d = Arc::new(build_diagram(family)?);
    let autos = automorphisms(&d);
    let key = |v: &VoganDiagram| (v.involution.perm.clone(), v.mask());
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in enumerate_for(&d) {
        let r = reduce(&v);
        if !seen.insert(key(&r)) {
            continue;
        }
        // reduced diagrams of the class are closed under relabel-then-reduce
        let mut queue = vec![r.clone()];
        while let Some(x) = queue.pop() {
            for sigma in &autos {
                let y = reduce(&relabel(&x, sigma));
                if seen.insert(key(&y)) {
                    queue.push(y);
                }
            }
        }
        out.push(r);
    }
    Ok(out)
}
