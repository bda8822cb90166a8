//! Real forms: per-block classical dictionary and the superalgebra names.

use crate::diagram::{ClassicalType, EvenPart, PartSide};
use crate::error::{Error, Result};
use crate::family::{FamilyId, FamilyKind};
use crate::involution::DiagramInvolution;
use crate::par::{self, Strategy};
use crate::table::{self, even_name, instantiate, records_of, row_of};
use crate::vogan::{enumerate_vogan, reduce, VoganDiagram};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet};

/// A real form of one simple summand of the even part, or of its center
/// (`block_type` is `None` for the center).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvenBlockRealForm {
    pub block_type: Option<ClassicalType>,
    pub name: String,
    pub params: Vec<i64>,
}

fn signed(kind: &str, a: i64, b: i64, block_type: ClassicalType) -> EvenBlockRealForm {
    let (lo, hi) = (a.min(b), a.max(b));
    let name = if lo == 0 { format!("{kind}({hi})") } else { format!("{kind}({lo},{hi})") };
    EvenBlockRealForm { block_type: Some(block_type), name, params: vec![lo, hi] }
}

fn single(name: String, k: i64, block_type: ClassicalType) -> EvenBlockRealForm {
    EvenBlockRealForm { block_type: Some(block_type), name, params: vec![k] }
}

// Constructors normalize signatures to `p <= q` and return `None` for the
// zero algebra.
impl EvenBlockRealForm {
    /// `su(1,1)` is written `sl(2,R)`.
    pub fn su(a: i64, b: i64) -> Option<Self> {
        let t = a + b;
        let mut f = (t >= 2).then(|| signed("su", a, b, ClassicalType::A(t as usize - 1)))?;
        if f.params == [1, 1] {
            f.name = "sl(2,R)".into();
        }
        Some(f)
    }

    pub fn so(a: i64, b: i64) -> Option<Self> {
        let t = a + b;
        let ct = if t % 2 == 1 { ClassicalType::B(t as usize / 2) } else { ClassicalType::D(t as usize / 2) };
        (t >= 2).then(|| signed("so", a, b, ct))
    }

    pub fn sp(a: i64, b: i64) -> Option<Self> {
        let t = a + b;
        (t >= 1).then(|| signed("sp", a, b, ClassicalType::C(t as usize)))
    }

    pub fn sl_r(k: i64) -> Option<Self> {
        (k >= 2).then(|| single(format!("sl({k},R)"), k, ClassicalType::A(k as usize - 1)))
    }

    pub fn su_star(k: i64) -> Option<Self> {
        (k >= 2).then(|| single(format!("su*({k})"), k, ClassicalType::A(k as usize - 1)))
    }

    pub fn sl_c(k: i64) -> Option<Self> {
        (k >= 2).then(|| single(format!("sl({k},C)"), k, ClassicalType::A(k as usize - 1)))
    }

    pub fn so_star(k: i64) -> Option<Self> {
        (k >= 4).then(|| single(format!("so*({k})"), k, ClassicalType::D(k as usize / 2)))
    }

    pub fn sp_r(k: i64) -> Option<Self> {
        (k >= 2).then(|| single(format!("sp({k},R)"), k, ClassicalType::C(k as usize / 2)))
    }

    pub fn g2(split: bool) -> Self {
        let (name, k) = if split { ("G2,2", 2) } else { ("G2,0", 0) };
        single(name.into(), k, ClassicalType::G2)
    }

    pub fn center(name: &str) -> Self {
        EvenBlockRealForm { block_type: None, name: name.into(), params: vec![] }
    }

    pub fn is_compact(&self) -> bool {
        self.params.len() == 2 && self.params[0] == 0 || self.name == "G2,0"
    }

    /// Smaller signature entry of `su/so/sp(p,q)`; 0 for compact forms.
    fn lo(&self) -> i64 {
        self.params.first().copied().unwrap_or(0)
    }

    fn hi(&self) -> i64 {
        self.params.get(1).copied().unwrap_or(0)
    }
}

/// A named real form of the superalgebra. `record` indexes the golden
/// table and `signature` holds the spliced-in `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealFormDescriptor {
    pub family: FamilyId,
    pub super_name: String,
    pub even_parts: Vec<EvenBlockRealForm>,
    pub record: usize,
    pub signature: (i64, i64),
}

impl RealFormDescriptor {
    pub fn even_name(&self) -> String {
        even_name(&self.even_parts)
    }

    fn build(family: &FamilyId, record: usize, p: i64, q: i64) -> Self {
        let (super_name, even_parts) = instantiate(record, family, p, q);
        RealFormDescriptor { family: family.clone(), super_name, even_parts, record, signature: (p, q) }
    }
}

/// Classical Vogan-diagram dictionary for one part of the even diagram.
/// `painted` may contain nodes outside the part; they are ignored.
pub fn classify_block(
    family: &FamilyId,
    part: &EvenPart,
    inv: &DiagramInvolution,
    painted: &BTreeSet<usize>,
) -> Result<EvenBlockRealForm> {
    let nodes = &part.nodes;
    let l = part.ctype.rank() as i64;
    let pos: Vec<i64> =
        nodes.iter().enumerate().filter(|(_, i)| painted.contains(i)).map(|(k, _)| k as i64 + 1).collect();
    let internal = nodes.iter().all(|&i| nodes.contains(&inv.perm[i]));
    let moved = nodes.iter().any(|&i| !inv.fixes(i));
    let zero = || Error::InvalidFamily(format!("{family}: empty even block"));
    if !internal {
        // exchanged with an isomorphic part
        return EvenBlockRealForm::sl_c(l + 1).ok_or_else(zero);
    }
    let two_fork = matches!(part.ctype, ClassicalType::D(2)) && pos.len() == 2;
    if pos.len() > 1 && !two_fork {
        return Err(Error::UnreducedInput(pos.len()));
    }
    let p = pos.first().copied();
    let form = match part.ctype {
        ClassicalType::A(_) if family.kind == FamilyKind::A && !inv.is_identity() => {
            let size = l + 1;
            if size % 2 == 1 || p == Some(size / 2) {
                EvenBlockRealForm::sl_r(size)
            } else {
                EvenBlockRealForm::su_star(size)
            }
        }
        ClassicalType::A(_) => match p {
            Some(p) => EvenBlockRealForm::su(p, l + 1 - p),
            None => EvenBlockRealForm::su(0, l + 1),
        },
        ClassicalType::B(_) => {
            let p = p.unwrap_or(0);
            EvenBlockRealForm::so(2 * p, 2 * l + 1 - 2 * p)
        }
        ClassicalType::C(_) => match p {
            Some(p) if p == l => EvenBlockRealForm::sp_r(2 * l),
            Some(p) => EvenBlockRealForm::sp(p, l - p),
            None => EvenBlockRealForm::sp(0, l),
        },
        ClassicalType::D(_) if moved => {
            let p = p.unwrap_or(0);
            EvenBlockRealForm::so(2 * p + 1, 2 * l - 2 * p - 1)
        }
        ClassicalType::D(_) if two_fork => EvenBlockRealForm::so(2, 2),
        ClassicalType::D(_) => match p {
            Some(p) if p >= l - 1 => EvenBlockRealForm::so_star(2 * l),
            Some(p) => EvenBlockRealForm::so(2 * p, 2 * l - 2 * p),
            None => EvenBlockRealForm::so(0, 2 * l),
        },
        ClassicalType::G2 => Some(EvenBlockRealForm::g2(p.is_some())),
    };
    form.ok_or_else(zero)
}

/// Per-part real forms of a diagram, in the order of `diagram.parts`.
pub fn classify_blocks(v: &VoganDiagram) -> Result<Vec<(EvenPart, EvenBlockRealForm)>> {
    v.diagram
        .parts
        .iter()
        .map(|part| Ok((part.clone(), classify_block(v.family(), part, &v.involution, &v.painted)?)))
        .collect()
}

fn side_form(blocks: &[(EvenPart, EvenBlockRealForm)], side: PartSide) -> Option<&EvenBlockRealForm> {
    blocks.iter().find(|(p, _)| p.side == side).map(|(_, f)| f)
}

/// Picks the table record and signature from the per-part forms.
fn select(family: &FamilyId, inv: &DiagramInvolution, blocks: &[(EvenPart, EvenBlockRealForm)]) -> (usize, i64, i64) {
    let recs = records_of(row_of(family));
    let e = side_form(blocks, PartSide::E);
    let delta = side_form(blocks, PartSide::Delta);
    let forms: Vec<&EvenBlockRealForm> = blocks.iter().map(|(_, f)| f).collect();
    let complex = forms.iter().any(|f| f.name.ends_with(",C)"));
    match family.kind {
        FamilyKind::A => {
            if complex {
                return (recs[3], 0, 0);
            }
            if !inv.is_identity() {
                let quaternionic =
                    e.is_some_and(|f| f.name.starts_with("su*(")) && delta.is_some_and(|f| f.name.starts_with("su*("));
                return (if quaternionic { recs[1] } else { recs[0] }, 0, 0);
            }
            let p = e.map_or(1, |f| f.hi());
            let q = delta.map_or(1, |f| f.hi());
            // sl(n|n) swaps its two blocks: su(p,.|q,.) = su(q,.|p,.)
            if family.m == family.n && p < q {
                (recs[2], q, p)
            } else {
                (recs[2], p, q)
            }
        }
        FamilyKind::B => (recs[0], e.expect("B block").lo(), 0),
        FamilyKind::B0 => (recs[0], 0, 0),
        FamilyKind::C => {
            let c = delta.expect("C block");
            if c.name.ends_with(",R)") {
                (recs[0], 0, 0)
            } else {
                (recs[1], 0, c.lo())
            }
        }
        FamilyKind::D => {
            let so = e.expect("D block");
            if so.name.starts_with("so*(") {
                let c = delta.expect("C block");
                let q = if c.name.ends_with(",R)") { 0 } else { c.lo() };
                (recs[1], 0, q)
            } else {
                (recs[0], so.lo(), 0)
            }
        }
        FamilyKind::F4 => (recs[e.expect("B3 block").lo() as usize], 0, 0),
        FamilyKind::G3 => (recs[usize::from(!e.expect("G2 block").is_compact())], 0, 0),
        FamilyKind::D21alpha => {
            if complex {
                (recs[2], 0, 0)
            } else if forms.iter().all(|f| !f.is_compact()) {
                (recs[0], 0, 0)
            } else {
                (recs[1], 0, 0)
            }
        }
    }
}

/// Names the real form of a Vogan diagram. The diagram is reduced first;
/// the result is therefore constant on flip orbits.
pub fn classify(v: &VoganDiagram) -> RealFormDescriptor {
    let r = reduce(v);
    let blocks = classify_blocks(&r).expect("reduced diagrams have at most one painted vertex per block");
    let (record, p, q) = select(v.family(), &r.involution, &blocks);
    RealFormDescriptor::build(v.family(), record, p, q)
}

/// All real forms of `family`, one per name, in table order.
pub fn enumerate_real_forms(family: &FamilyId) -> Result<Vec<RealFormDescriptor>> {
    enumerate_real_forms_with(family, Strategy::default())
}

pub fn enumerate_real_forms_with(family: &FamilyId, strategy: Strategy) -> Result<Vec<RealFormDescriptor>> {
    let diagrams = enumerate_vogan(family)?;
    let all = par::map(&diagrams, strategy, classify);
    let mut seen = HashSet::new();
    let mut out: Vec<RealFormDescriptor> = all.into_iter().filter(|d| seen.insert(d.super_name.clone())).collect();
    out.sort_by_key(|a| (a.record, a.signature));
    Ok(out)
}

/// Reduced class representatives paired with their real forms, one per
/// name, in table order. Among the classes sharing a name, the first whose
/// own block forms all occur in the descriptor's even part is preferred.
pub fn classified_classes(family: &FamilyId) -> Result<Vec<(VoganDiagram, RealFormDescriptor)>> {
    let reps = crate::vogan::vogan_classes(family)?;
    let mut chosen: Vec<(VoganDiagram, RealFormDescriptor, bool)> = Vec::new();
    for v in reps {
        let desc = classify(&v);
        let faithful = classify_blocks(&v)
            .map(|bs| bs.iter().all(|(_, f)| desc.even_parts.iter().any(|e| e.name == f.name)))
            .unwrap_or(false);
        match chosen.iter_mut().find(|(_, d, _)| d.super_name == desc.super_name) {
            Some(slot) if faithful && !slot.2 => *slot = (v, desc, true),
            Some(_) => {}
            None => chosen.push((v, desc, faithful)),
        }
    }
    chosen.sort_by_key(|a| (a.1.record, a.1.signature));
    Ok(chosen.into_iter().map(|(v, d, _)| (v, d)).collect())
}

/// Real forms of many families.
pub fn sweep(families: &[FamilyId], strategy: Strategy) -> Vec<(FamilyId, Vec<RealFormDescriptor>)> {
    par::map(families, strategy, |f| {
        let forms = enumerate_real_forms_with(f, Strategy::Sequential).expect("sweep families are valid");
        (f.clone(), forms)
    })
}

/// The table record a descriptor instantiates, if any.
pub fn table_record(d: &RealFormDescriptor) -> Option<&'static table::TableRecord> {
    table::RECORDS.get(d.record)
}
