//! Diagram involutions of the even part.

use crate::diagram::SuperDynkinDiagram;
use crate::family::FamilyKind;
use serde::{Deserialize, Serialize};

/// An involutive permutation of the diagram nodes. Odd nodes are always
/// fixed; on even nodes the permutation preserves the Cartan integers of
/// the even simple system.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramInvolution {
    pub name: String,
    pub perm: Vec<usize>,
}

impl DiagramInvolution {
    pub fn identity(len: usize) -> Self {
        DiagramInvolution { name: "identity".into(), perm: (0..len).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.perm[i] == i
    }

    /// Two-element orbits `(i, j)` with `i < j`.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.perm.iter().enumerate().filter(|&(i, &p)| i < p).map(|(i, &p)| (i, p)).collect()
    }

    /// `sigma * self * sigma^-1` for an involution `sigma`.
    pub fn conjugate_by(&self, sigma: &DiagramInvolution) -> Vec<usize> {
        let mut out = vec![0; self.perm.len()];
        for i in 0..self.perm.len() {
            out[sigma.perm[i]] = sigma.perm[self.perm[i]];
        }
        out
    }
}

/// Checks the involution axioms against a diagram.
pub fn is_valid_involution(d: &SuperDynkinDiagram, inv: &DiagramInvolution) -> bool {
    let p = &inv.perm;
    if p.len() != d.len() || p.iter().enumerate().any(|(i, &j)| j >= p.len() || p[j] != i) {
        return false;
    }
    for (i, node) in d.nodes.iter().enumerate() {
        if node.kind != d.nodes[p[i]].kind || (node.kind.is_odd() && p[i] != i) {
            return false;
        }
    }
    let even = d.even_nodes();
    even.iter().all(|&i| even.iter().all(|&j| d.reflection_integer(i, j) == d.reflection_integer(p[i], p[j])))
}

/// The identity plus the nontrivial involutions admitted by the family,
/// in a fixed order.
pub fn automorphisms(d: &SuperDynkinDiagram) -> Vec<DiagramInvolution> {
    let len = d.len();
    let mut out = vec![DiagramInvolution::identity(len)];
    let (m, n) = (d.family.m as usize, d.family.n as usize);
    match d.family.kind {
        FamilyKind::A => {
            if m >= 2 || n >= 2 {
                let mut perm: Vec<usize> = (0..len).collect();
                for (i, x) in perm[..m].iter_mut().enumerate() {
                    *x = m - 1 - i;
                }
                for j in 0..n {
                    perm[m + 1 + j] = m + n - j;
                }
                out.push(DiagramInvolution { name: "tail-reversal".into(), perm });
            }
            if m == n {
                let perm = (0..len).map(|i| len - 1 - i).collect();
                out.push(DiagramInvolution { name: "reversal".into(), perm });
            }
        }
        FamilyKind::D => {
            let mut perm: Vec<usize> = (0..len).collect();
            perm.swap(d.rank - 2, d.rank - 1);
            out.push(DiagramInvolution { name: "fork-swap".into(), perm });
        }
        FamilyKind::D21alpha => {
            // legs of equal length can be exchanged; this happens exactly
            // for alpha in {1, -2, -1/2}
            let legs = d.even_nodes();
            for (x, &i) in legs.iter().enumerate() {
                for &j in &legs[x + 1..] {
                    if d.inner(i, i) == d.inner(j, j) {
                        let mut perm: Vec<usize> = (0..len).collect();
                        perm.swap(i, j);
                        out.push(DiagramInvolution { name: "leg-swap".into(), perm });
                    }
                }
            }
        }
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_diagram;
    use crate::rational::{frac, q};
    use crate::spec_parse::parse_family;

    fn autos(s: &str) -> Vec<DiagramInvolution> {
        automorphisms(&build_diagram(&parse_family(s).unwrap()).unwrap())
    }

    #[test]
    fn b_type_has_identity_only() {
        let a = autos("B(2,1)");
        assert_eq!(a.len(), 1);
        assert!(a[0].is_identity());
    }

    #[test]
    fn d21_alpha_one_has_a_leg_swap() {
        let a = autos("D(2,1;1)");
        assert_eq!(a.len(), 2);
        assert_eq!(a[1].arrows(), vec![(0, 2)]);
        assert_eq!(autos("D(2,1;2)").len(), 1);
    }

    #[test]
    fn d21_swaps_only_for_symmetric_alphas() {
        for (a, expect) in [(q(1), 2), (q(-2), 2), (frac(-1, 2), 2), (q(2), 1), (frac(1, 2), 1), (q(3), 1)] {
            let d = build_diagram(&crate::FamilyId::d21(a).unwrap()).unwrap();
            assert_eq!(automorphisms(&d).len(), expect, "alpha = {a}");
        }
    }

    #[test]
    fn a22_has_tail_reversal_and_reversal() {
        let a = autos("A(2,2)");
        let names: Vec<&str> = a.iter().map(|i| i.name.as_str()).collect();
        assert_eq!(names, vec!["identity", "tail-reversal", "reversal"]);
        assert_eq!(a[1].perm, vec![1, 0, 2, 4, 3]);
        assert_eq!(a[2].perm, vec![4, 3, 2, 1, 0]);
    }

    #[test]
    fn all_listed_involutions_are_valid() {
        for f in crate::families::desk_families(4) {
            let d = build_diagram(&f).unwrap();
            for inv in automorphisms(&d) {
                assert!(is_valid_involution(&d, &inv), "{f} {}", inv.name);
            }
        }
    }

    #[test]
    fn invalid_perm_rejected() {
        let d = build_diagram(&parse_family("B(2,1)").unwrap()).unwrap();
        let inv = DiagramInvolution { name: "x".into(), perm: vec![0, 2, 1, 3] };
        assert!(!is_valid_involution(&d, &inv));
    }
}
