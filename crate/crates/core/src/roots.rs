//! Closed-form root systems and the compactness functional on even roots.

use crate::diagram::{build_diagram, SuperDynkinDiagram};
use crate::error::{Error, Result};
use crate::family::{FamilyId, FamilyKind};
use crate::rational::{frac, q, solve_in_span, Q};
use crate::weight::WeightVector;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Positive roots split as `even_pos_1` (e-side), `even_pos_2` (d-side) and
/// `odd_pos`.
///
/// For D(2,1;alpha), which has no d-coordinates, the leg `2e_1` plays the
/// role of the second side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub even_pos_1: BTreeSet<WeightVector>,
    pub even_pos_2: BTreeSet<WeightVector>,
    pub odd_pos: BTreeSet<WeightVector>,
}

impl RootSystem {
    pub fn even_pos(&self) -> BTreeSet<WeightVector> {
        self.even_pos_1.union(&self.even_pos_2).cloned().collect()
    }

    pub fn positive(&self) -> BTreeSet<WeightVector> {
        let mut all = self.even_pos();
        all.extend(self.odd_pos.iter().cloned());
        all
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Compactness {
    Compact,
    Noncompact,
}

/// Every root of `family` (both signs), tagged with its parity (`true` = odd).
pub fn all_roots(diagram: &SuperDynkinDiagram) -> Vec<(WeightVector, bool)> {
    let (m, n) = diagram.metric.dims();
    let e = |i: usize| WeightVector::e(m, n, i);
    let d = |j: usize| WeightVector::d(m, n, j);
    let mut even: Vec<WeightVector> = Vec::new();
    let mut odd: Vec<WeightVector> = Vec::new();
    let pm_pairs = |out: &mut Vec<WeightVector>, v: &dyn Fn(usize) -> WeightVector, k: usize, diffs_only: bool| {
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    out.push(&v(i) - &v(j));
                    if !diffs_only && i < j {
                        out.push(&v(i) + &v(j));
                        out.push(-&(&v(i) + &v(j)));
                    }
                }
            }
        }
    };
    match diagram.family.kind {
        FamilyKind::A => {
            pm_pairs(&mut even, &e, m, true);
            pm_pairs(&mut even, &d, n, true);
            for i in 0..m {
                for j in 0..n {
                    odd.push(&e(i) - &d(j));
                    odd.push(&d(j) - &e(i));
                }
            }
        }
        FamilyKind::B | FamilyKind::B0 | FamilyKind::C | FamilyKind::D => {
            let is_c = diagram.family.kind == FamilyKind::C;
            if !is_c {
                pm_pairs(&mut even, &e, m, false);
            }
            pm_pairs(&mut even, &d, n, false);
            for j in 0..n {
                even.push(q(2) * &d(j));
                even.push(q(-2) * &d(j));
            }
            if matches!(diagram.family.kind, FamilyKind::B | FamilyKind::B0) {
                for i in 0..m {
                    even.push(e(i));
                    even.push(-&e(i));
                }
                for j in 0..n {
                    odd.push(d(j));
                    odd.push(-&d(j));
                }
            }
            for i in 0..m {
                for j in 0..n {
                    for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        odd.push(&(q(s) * &d(j)) + &(q(t) * &e(i)));
                    }
                }
            }
        }
        FamilyKind::F4 => {
            even.push(d(0));
            even.push(-&d(0));
            pm_pairs(&mut even, &e, 3, false);
            for i in 0..3 {
                even.push(e(i));
                even.push(-&e(i));
            }
            for signs in 0..16u32 {
                let s = |b: u32| if signs & (1 << b) == 0 { frac(1, 2) } else { frac(-1, 2) };
                let v = WeightVector { e: vec![s(1), s(2), s(3)], d: vec![s(0)] };
                odd.push(v);
            }
        }
        FamilyKind::G3 => {
            let third = WeightVector { e: vec![frac(1, 3); 3], d: vec![Q::zero()] };
            let eps: Vec<WeightVector> = (0..3).map(|i| &e(i) - &third).collect();
            even.push(q(2) * &d(0));
            even.push(q(-2) * &d(0));
            for i in 0..3 {
                even.push(eps[i].clone());
                even.push(-&eps[i]);
                for j in 0..3 {
                    if i != j {
                        even.push(&eps[i] - &eps[j]);
                    }
                }
            }
            odd.push(d(0));
            odd.push(-&d(0));
            for ep in &eps {
                for s in [1, -1] {
                    odd.push(&(q(s) * &d(0)) + ep);
                    odd.push(&(q(s) * &d(0)) - ep);
                }
            }
        }
        FamilyKind::D21alpha => {
            for i in 0..3 {
                even.push(q(2) * &e(i));
                even.push(q(-2) * &e(i));
            }
            for signs in 0..8u32 {
                let s = |b: u32| if signs & (1 << b) == 0 { q(1) } else { q(-1) };
                odd.push(WeightVector { e: vec![s(0), s(1), s(2)], d: vec![] });
            }
        }
    }
    even.into_iter().map(|r| (r, false)).chain(odd.into_iter().map(|r| (r, true))).collect()
}

/// Coordinates of `v` in the distinguished simple roots, if `v` is in their span.
pub fn expand(diagram: &SuperDynkinDiagram, v: &WeightVector) -> Option<Vec<Q>> {
    let basis: Vec<Vec<Q>> = diagram.simple_roots().iter().map(WeightVector::coords).collect();
    solve_in_span(&basis, &v.coords())
}

/// Coordinates of `v` in the even simple system (even nodes in index
/// order, then the implicit extras).
pub fn expand_even(diagram: &SuperDynkinDiagram, v: &WeightVector) -> Option<Vec<Q>> {
    let basis: Vec<Vec<Q>> = diagram.even_basis().iter().map(WeightVector::coords).collect();
    solve_in_span(&basis, &v.coords())
}

/// Positive root system of `family` relative to the distinguished simple system.
pub fn generate_roots(family: &FamilyId) -> Result<RootSystem> {
    let diagram = build_diagram(family)?;
    Ok(roots_of(&diagram))
}

pub fn roots_of(diagram: &SuperDynkinDiagram) -> RootSystem {
    let mut rs = RootSystem { even_pos_1: BTreeSet::new(), even_pos_2: BTreeSet::new(), odd_pos: BTreeSet::new() };
    for (root, odd) in all_roots(diagram) {
        let coeffs = expand(diagram, &root).expect("root outside the simple span");
        debug_assert!(coeffs.iter().all(|c| c.is_integer()));
        if coeffs.iter().any(Signed::is_negative) {
            continue;
        }
        if odd {
            rs.odd_pos.insert(root);
        } else if second_side(diagram, &root) {
            rs.even_pos_2.insert(root);
        } else {
            rs.even_pos_1.insert(root);
        }
    }
    rs
}

fn second_side(diagram: &SuperDynkinDiagram, root: &WeightVector) -> bool {
    if diagram.family.kind == FamilyKind::D21alpha {
        !root.e[0].is_zero()
    } else {
        root.has_d()
    }
}

/// Parity of a lattice vector: the sum of its coefficients on odd simple roots.
pub fn is_odd_vector(diagram: &SuperDynkinDiagram, v: &WeightVector) -> Result<bool> {
    let c = expand(diagram, v).ok_or(Error::NotInRootLattice)?;
    let odd_sum = diagram.odd_nodes().iter().fold(Q::zero(), |acc, &i| acc + c[i]);
    if !odd_sum.is_integer() {
        return Err(Error::NotInRootLattice);
    }
    Ok(odd_sum.numer().rem_euclid(2) == 1)
}

/// Compact or noncompact, by the parity of the sum of the even-system
/// coefficients of `root` over the painted nodes.
pub fn noncompact_parity(
    diagram: &SuperDynkinDiagram,
    painted: &BTreeSet<usize>,
    root: &WeightVector,
) -> Result<Compactness> {
    if is_odd_vector(diagram, root)? {
        return Err(Error::NotAnEvenRoot);
    }
    let coeffs = expand_even(diagram, root).ok_or(Error::NotInRootLattice)?;
    let position: BTreeMap<usize, usize> = diagram.even_nodes().into_iter().enumerate().map(|(p, i)| (i, p)).collect();
    let mut sum = Q::zero();
    for i in painted {
        let p = position.get(i).ok_or_else(|| Error::BadIndex(*i, "painted node is not even".into()))?;
        sum += coeffs[*p];
    }
    if !sum.is_integer() {
        return Err(Error::NotInRootLattice);
    }
    Ok(if sum.numer().rem_euclid(2) == 1 { Compactness::Noncompact } else { Compactness::Compact })
}

/// Closed-form `(|even positive|, |odd positive|)` for the classical
/// families, from the dimensions of gl/osp.
pub fn expected_counts(family: &FamilyId) -> (usize, usize) {
    let (m, n) = (family.m as usize, family.n as usize);
    match family.kind {
        FamilyKind::A => ((m + 1) * m / 2 + (n + 1) * n / 2, (m + 1) * (n + 1)),
        FamilyKind::B | FamilyKind::B0 => (m * m + n * n, 2 * m * n + n),
        FamilyKind::C => (n * n, 2 * n),
        FamilyKind::D => (m * (m - 1) + n * n, 2 * m * n),
        FamilyKind::F4 => (10, 8),
        FamilyKind::G3 => (7, 7),
        FamilyKind::D21alpha => (3, 4),
    }
}

/// Complex dimension of the superalgebra (the gl/osp matrix count).
pub fn dimension(family: &FamilyId) -> usize {
    let (m, n) = (family.m as usize, family.n as usize);
    let osp = |big_m: usize, n: usize| big_m * (big_m - 1) / 2 + n * (2 * n + 1) + 2 * big_m * n;
    match family.kind {
        FamilyKind::A => (m + n + 2) * (m + n + 2) - 1,
        FamilyKind::B | FamilyKind::B0 => osp(2 * m + 1, n),
        FamilyKind::C => osp(2, n),
        FamilyKind::D => osp(2 * m, n),
        FamilyKind::F4 => 40,
        FamilyKind::G3 => 31,
        FamilyKind::D21alpha => 17,
    }
}

/// Cartan subalgebra dimension of the matrix algebra (sl, not psl, for A).
pub fn cartan_dimension(family: &FamilyId) -> usize {
    let (m, n) = (family.m as usize, family.n as usize);
    match family.kind {
        FamilyKind::A => m + n + 1,
        FamilyKind::B | FamilyKind::B0 | FamilyKind::D => m + n,
        FamilyKind::C => n + 1,
        FamilyKind::F4 => 4,
        FamilyKind::G3 => 3,
        FamilyKind::D21alpha => 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn fam(s: &str) -> FamilyId {
        crate::spec_parse::parse_family(s).unwrap()
    }

    #[test]
    fn sl21_counts() {
        let rs = generate_roots(&fam("A(1,0)")).unwrap();
        assert_eq!(rs.even_pos().len(), 1);
        assert_eq!(rs.odd_pos.len(), 2);
    }

    #[test]
    fn osp12() {
        let d = build_diagram(&fam("B(0,1)")).unwrap();
        let rs = roots_of(&d);
        let delta = WeightVector::d(0, 1, 0);
        assert_eq!(rs.even_pos(), BTreeSet::from([q(2) * &delta]));
        assert_eq!(rs.odd_pos, BTreeSet::from([delta]));
    }

    #[test]
    fn b11_odd_roots() {
        let rs = generate_roots(&fam("B(1,1)")).unwrap();
        let e = WeightVector::e(1, 1, 0);
        let d = WeightVector::d(1, 1, 0);
        let want = BTreeSet::from([d.clone(), &d + &e, &d - &e]);
        assert_eq!(rs.odd_pos, want);
    }

    #[test]
    fn counts_and_dimensions() {
        for f in crate::families::desk_families(3) {
            let rs = generate_roots(&f).unwrap();
            let (ev, od) = expected_counts(&f);
            assert_eq!((rs.even_pos().len(), rs.odd_pos.len()), (ev, od), "{f}");
            assert_eq!(cartan_dimension(&f) + 2 * (ev + od), dimension(&f), "{f}");
            assert!(rs.even_pos_1.is_disjoint(&rs.even_pos_2));
        }
    }

    #[test]
    fn even_roots_expand_over_even_system() {
        for f in crate::families::desk_families(3) {
            let d = build_diagram(&f).unwrap();
            for r in roots_of(&d).even_pos() {
                let c = expand_even(&d, &r).unwrap_or_else(|| panic!("{f} {r:?}"));
                assert!(c.iter().all(|x| x.is_integer() && !x.is_negative()), "{f} {r:?}");
            }
        }
    }

    #[test]
    fn compactness_examples() {
        let d = build_diagram(&fam("A(3,0)")).unwrap();
        let a: Vec<WeightVector> = d.simple_roots();
        let painted = BTreeSet::from([1]);
        let sum = &(&a[0] + &a[1]) + &a[2];
        assert_eq!(noncompact_parity(&d, &painted, &sum), Ok(Compactness::Noncompact));
        assert_eq!(noncompact_parity(&d, &painted, &a[1]), Ok(Compactness::Noncompact));
        assert_eq!(noncompact_parity(&d, &BTreeSet::new(), &sum), Ok(Compactness::Compact));
        assert_eq!(noncompact_parity(&d, &painted, &a[3]), Err(Error::NotAnEvenRoot));
    }
}
