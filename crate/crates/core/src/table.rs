//! Embedded golden classification table.
//!
//! One record per (row, real-form line) of the published table. Names are
//! templates over linear expressions in the row variables `m, n` and the
//! signature parameters `p, q`; a record is matched against a computed
//! descriptor by trying every parameter pair in range.
//!
//! Row variables follow the table's own conventions: for A rows `m, n` are
//! the matrix sizes (our `m+1, n+1`); for C(n+1) only `n` is used.

use crate::classify::EvenBlockRealForm;
use crate::family::{FamilyId, FamilyKind};
use crate::rational::fmt_q;
use serde::Serialize;

/// `c + m*M + n*N + p*P + q*Q` over the row variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lin {
    pub c: i64,
    pub m: i64,
    pub n: i64,
    pub p: i64,
    pub q: i64,
}

pub const fn lin(c: i64, m: i64, n: i64, p: i64, q: i64) -> Lin {
    Lin { c, m, n, p, q }
}

const fn k(c: i64) -> Lin {
    lin(c, 0, 0, 0, 0)
}

fn k0() -> Lin {
    k(0)
}

const M: Lin = lin(0, 1, 0, 0, 0);
const N: Lin = lin(0, 0, 1, 0, 0);
const P: Lin = lin(0, 0, 0, 1, 0);
const QV: Lin = lin(0, 0, 0, 0, 1);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vars {
    pub m: i64,
    pub n: i64,
    pub p: i64,
    pub q: i64,
}

impl Lin {
    pub fn eval(&self, v: &Vars) -> i64 {
        self.c + self.m * v.m + self.n * v.n + self.p * v.p + self.q * v.q
    }

    pub fn symbolic(&self) -> String {
        let mut out = String::new();
        let terms = [(self.m, "m"), (self.n, "n"), (self.c, ""), (self.p, "p"), (self.q, "q")];
        for (coef, var) in terms {
            if coef == 0 {
                continue;
            }
            let sign = if coef < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = coef.abs();
            let body = match (mag, var) {
                (_, "") => mag.to_string(),
                (1, v) => v.to_string(),
                (c, v) => format!("{c}{v}"),
            };
            out.push_str(sign);
            out.push_str(&body);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenShape {
    Su(Lin, Lin),
    So(Lin, Lin),
    Sp(Lin, Lin),
    SlR(Lin),
    SuStar(Lin),
    SlC(Lin),
    SoStar(Lin),
    SpR(Lin),
    G2 { split: bool },
    Center(&'static str),
}

impl EvenShape {
    /// Concrete summand, or `None` when it is the zero algebra.
    pub fn form(&self, v: &Vars) -> Option<EvenBlockRealForm> {
        use EvenBlockRealForm as F;
        match *self {
            EvenShape::Su(a, b) => F::su(a.eval(v), b.eval(v)),
            EvenShape::So(a, b) => F::so(a.eval(v), b.eval(v)),
            EvenShape::Sp(a, b) => F::sp(a.eval(v), b.eval(v)),
            EvenShape::SlR(x) => F::sl_r(x.eval(v)),
            EvenShape::SuStar(x) => F::su_star(x.eval(v)),
            EvenShape::SlC(x) => F::sl_c(x.eval(v)),
            EvenShape::SoStar(x) => F::so_star(x.eval(v)),
            EvenShape::SpR(x) => F::sp_r(x.eval(v)),
            EvenShape::G2 { split } => Some(F::g2(split)),
            EvenShape::Center(name) => Some(F::center(name)),
        }
    }

    fn lins(&self) -> Vec<Lin> {
        match *self {
            EvenShape::Su(a, b) | EvenShape::So(a, b) | EvenShape::Sp(a, b) => vec![a, b],
            EvenShape::SlR(x) | EvenShape::SuStar(x) | EvenShape::SlC(x) | EvenShape::SoStar(x) | EvenShape::SpR(x) => {
                vec![x]
            }
            EvenShape::G2 { .. } | EvenShape::Center(_) => vec![],
        }
    }

    /// Symbolic name; shapes without variables render canonically.
    pub fn symbolic(&self) -> String {
        if self.lins().iter().all(|l| (l.m, l.n, l.p, l.q) == (0, 0, 0, 0)) {
            let v = Vars { m: 0, n: 0, p: 0, q: 0 };
            if let Some(f) = self.form(&v) {
                return f.name;
            }
        }
        match *self {
            EvenShape::Su(a, b) => format!("su({},{})", a.symbolic(), b.symbolic()),
            EvenShape::So(a, b) => format!("so({},{})", a.symbolic(), b.symbolic()),
            EvenShape::Sp(a, b) => format!("sp({},{})", a.symbolic(), b.symbolic()),
            EvenShape::SlR(x) => format!("sl({},R)", x.symbolic()),
            EvenShape::SuStar(x) => format!("su*({})", x.symbolic()),
            EvenShape::SlC(x) => format!("sl({},C)", x.symbolic()),
            EvenShape::SoStar(x) => format!("so*({})", x.symbolic()),
            EvenShape::SpR(x) => format!("sp({},R)", x.symbolic()),
            EvenShape::G2 { split } => if split { "G2,2" } else { "G2,0" }.into(),
            EvenShape::Center(name) => name.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuperShape {
    SuSig(Lin, Lin, Lin, Lin),
    Sl { m: Lin, n: Lin, field: char, psl: bool },
    Osp(Lin, Lin, Lin),
    OspH(Lin, Lin, Lin),
    F4(u8),
    G3(u8),
    D21(u8),
}

/// `osp(a,b|k;R)`; a zero first signature entry is omitted.
pub fn osp_r(a: i64, b: i64, k: i64) -> String {
    let (lo, hi) = (a.min(b), a.max(b));
    if lo == 0 {
        format!("osp({hi}|{k};R)")
    } else {
        format!("osp({lo},{hi}|{k};R)")
    }
}

/// `osp(k|a,b;H)`; a zero first signature entry is omitted.
pub fn osp_h(k: i64, a: i64, b: i64) -> String {
    let (lo, hi) = (a.min(b), a.max(b));
    if lo == 0 {
        format!("osp({k}|{hi};H)")
    } else {
        format!("osp({k}|{lo},{hi};H)")
    }
}

impl SuperShape {
    pub fn render(&self, v: &Vars, alpha: &str) -> String {
        match *self {
            SuperShape::SuSig(a, b, c, d) => {
                format!("su({},{}|{},{})", a.eval(v), b.eval(v), c.eval(v), d.eval(v))
            }
            SuperShape::Sl { m, n, field, psl } => {
                format!("{}sl({}|{};{field})", if psl { "p" } else { "" }, m.eval(v), n.eval(v))
            }
            SuperShape::Osp(a, b, k) => osp_r(a.eval(v), b.eval(v), k.eval(v)),
            SuperShape::OspH(k, a, b) => osp_h(k.eval(v), a.eval(v), b.eval(v)),
            SuperShape::F4(i) => format!("F(4;{i})"),
            SuperShape::G3(i) => format!("G(3,{i})"),
            SuperShape::D21(i) => format!("D(2,1;{alpha};{i})"),
        }
    }

    pub fn symbolic(&self) -> String {
        let s = |l: Lin| l.symbolic();
        match *self {
            SuperShape::SuSig(a, b, c, d) => format!("su({},{}|{},{})", s(a), s(b), s(c), s(d)),
            SuperShape::Sl { m, n, field, psl } => {
                format!("{}sl({}|{};{field})", if psl { "p" } else { "" }, s(m), s(n))
            }
            SuperShape::Osp(a, b, k) if a == k0() => format!("osp({}|{};R)", s(b), s(k)),
            SuperShape::Osp(a, b, k) => format!("osp({},{}|{};R)", s(a), s(b), s(k)),
            SuperShape::OspH(k, a, b) => format!("osp({}|{},{};H)", s(k), s(a), s(b)),
            SuperShape::F4(i) => format!("F(4;{i})"),
            SuperShape::G3(i) => format!("G(3,{i})"),
            SuperShape::D21(i) => format!("D(2,1;α;{i})"),
        }
    }
}

/// Table rows; A(n,n) has its own row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Row {
    A,
    Ann,
    B,
    B0,
    C,
    D,
    F4,
    G3,
    D21,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    /// A line of the published table.
    Table,
    /// A shape drawn in the published figures but absent from the table.
    Figure,
}

#[derive(Debug, Clone, Copy)]
pub struct TableRecord {
    pub row: Row,
    pub super_shape: SuperShape,
    pub even: &'static [EvenShape],
    pub source: Source,
}

#[derive(Debug, Clone, Copy)]
pub struct RowInfo {
    pub row: Row,
    pub g: &'static str,
    pub g0: &'static str,
}

use EvenShape as E;
use SuperShape as S;

const fn rec(row: Row, super_shape: SuperShape, even: &'static [EvenShape]) -> TableRecord {
    TableRecord { row, super_shape, even, source: Source::Table }
}

pub static ROWS: &[RowInfo] = &[
    RowInfo { row: Row::A, g: "A(m,n)", g0: "sl(m)⊕sl(n)⊕U(1)" },
    RowInfo { row: Row::Ann, g: "A(n,n)", g0: "sl(n)⊕sl(n)" },
    RowInfo { row: Row::B, g: "B(m,n)", g0: "so(2m+1)⊕sp(2n)" },
    RowInfo { row: Row::B0, g: "B(0,n)", g0: "sp(2n)" },
    RowInfo { row: Row::C, g: "C(n+1)", g0: "so(2)⊕sp(2n)" },
    RowInfo { row: Row::D, g: "D(m,n)", g0: "so(2m)⊕sp(2n)" },
    RowInfo { row: Row::F4, g: "F(4)", g0: "sl(2)⊕so(7)" },
    RowInfo { row: Row::G3, g: "G(3)", g0: "sl(2)⊕G2" },
    RowInfo { row: Row::D21, g: "D(2,1;α)", g0: "sl(2)⊕sl(2)⊕sl(2)" },
];

pub static RECORDS: &[TableRecord] = &[
    rec(Row::A, S::Sl { m: M, n: N, field: 'R', psl: false }, &[E::SlR(M), E::SlR(N), E::Center("R")]),
    rec(Row::A, S::Sl { m: M, n: N, field: 'H', psl: false }, &[E::SuStar(M), E::SuStar(N), E::Center("R")]),
    rec(
        Row::A,
        S::SuSig(P, lin(0, 1, 0, -1, 0), QV, lin(0, 0, 1, 0, -1)),
        &[E::Su(P, lin(0, 1, 0, -1, 0)), E::Su(QV, lin(0, 0, 1, 0, -1)), E::Center("iR")],
    ),
    rec(Row::Ann, S::Sl { m: N, n: N, field: 'R', psl: true }, &[E::SlR(N), E::SlR(N)]),
    rec(Row::Ann, S::Sl { m: N, n: N, field: 'H', psl: true }, &[E::SuStar(N), E::SuStar(N)]),
    rec(
        Row::Ann,
        S::SuSig(P, lin(0, 0, 1, -1, 0), QV, lin(0, 0, 1, 0, -1)),
        &[E::Su(P, lin(0, 0, 1, -1, 0)), E::Su(QV, lin(0, 0, 1, 0, -1))],
    ),
    TableRecord {
        row: Row::Ann,
        super_shape: S::Sl { m: N, n: N, field: 'C', psl: true },
        even: &[E::SlC(N)],
        source: Source::Figure,
    },
    rec(
        Row::B,
        S::Osp(P, lin(1, 2, 0, -1, 0), lin(0, 0, 2, 0, 0)),
        &[E::So(P, lin(1, 2, 0, -1, 0)), E::SpR(lin(0, 0, 2, 0, 0))],
    ),
    rec(Row::B0, S::Osp(k(0), k(1), lin(0, 0, 2, 0, 0)), &[E::SpR(lin(0, 0, 2, 0, 0))]),
    rec(Row::C, S::Osp(k(0), k(2), lin(0, 0, 2, 0, 0)), &[E::Center("so*(2)"), E::SpR(lin(0, 0, 2, 0, 0))]),
    rec(
        Row::C,
        S::OspH(k(2), lin(0, 0, 0, 0, 2), lin(0, 0, 2, 0, -2)),
        &[E::Center("so*(2)"), E::Sp(QV, lin(0, 0, 1, 0, -1))],
    ),
    rec(
        Row::D,
        S::Osp(P, lin(0, 2, 0, -1, 0), lin(0, 0, 2, 0, 0)),
        &[E::So(P, lin(0, 2, 0, -1, 0)), E::SpR(lin(0, 0, 2, 0, 0))],
    ),
    rec(
        Row::D,
        S::OspH(lin(0, 2, 0, 0, 0), lin(0, 0, 0, 0, 2), lin(0, 0, 2, 0, -2)),
        &[E::SoStar(lin(0, 2, 0, 0, 0)), E::Sp(QV, lin(0, 0, 1, 0, -1))],
    ),
    rec(Row::F4, S::F4(0), &[E::SlR(k(2)), E::So(k(0), k(7))]),
    rec(Row::F4, S::F4(3), &[E::SlR(k(2)), E::So(k(1), k(6))]),
    rec(Row::F4, S::F4(2), &[E::SlR(k(2)), E::So(k(2), k(5))]),
    rec(Row::F4, S::F4(1), &[E::SlR(k(2)), E::So(k(3), k(4))]),
    rec(Row::G3, S::G3(0), &[E::SlR(k(2)), E::G2 { split: false }]),
    rec(Row::G3, S::G3(1), &[E::SlR(k(2)), E::G2 { split: true }]),
    rec(Row::D21, S::D21(0), &[E::SlR(k(2)), E::SlR(k(2)), E::SlR(k(2))]),
    rec(Row::D21, S::D21(1), &[E::Su(k(0), k(2)), E::Su(k(0), k(2)), E::Su(k(0), k(2))]),
    rec(Row::D21, S::D21(2), &[E::SlC(k(2)), E::SlR(k(2))]),
];

pub fn row_of(f: &FamilyId) -> Row {
    match f.kind {
        FamilyKind::A if f.is_psl() => Row::Ann,
        FamilyKind::A => Row::A,
        FamilyKind::B => Row::B,
        FamilyKind::B0 => Row::B0,
        FamilyKind::C => Row::C,
        FamilyKind::D => Row::D,
        FamilyKind::F4 => Row::F4,
        FamilyKind::G3 => Row::G3,
        FamilyKind::D21alpha => Row::D21,
    }
}

pub fn row_info(row: Row) -> &'static RowInfo {
    ROWS.iter().find(|r| r.row == row).expect("every row has info")
}

/// Indices into [`RECORDS`] for one row, in table order.
pub fn records_of(row: Row) -> Vec<usize> {
    (0..RECORDS.len()).filter(|&i| RECORDS[i].row == row).collect()
}

/// Row variables `(m, n)` of a concrete family.
pub fn row_vars(f: &FamilyId) -> (i64, i64) {
    let (m, n) = (f.m as i64, f.n as i64);
    match f.kind {
        FamilyKind::A => (m + 1, n + 1),
        FamilyKind::B | FamilyKind::D => (m, n),
        FamilyKind::B0 | FamilyKind::C => (0, n),
        _ => (0, 0),
    }
}

fn alpha_text(f: &FamilyId) -> String {
    f.alpha.as_ref().map(fmt_q).unwrap_or_default()
}

/// Renders record `idx` for `family` at signature `(p, q)`: the super name
/// and the nonzero even summands in table order.
pub fn instantiate(idx: usize, family: &FamilyId, p: i64, q: i64) -> (String, Vec<EvenBlockRealForm>) {
    let (m, n) = row_vars(family);
    let v = Vars { m, n, p, q };
    let r = &RECORDS[idx];
    let name = r.super_shape.render(&v, &alpha_text(family));
    let even = r.even.iter().filter_map(|e| e.form(&v)).collect();
    (name, even)
}

pub fn even_name(parts: &[EvenBlockRealForm]) -> String {
    parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("⊕")
}

/// Searches the family's records for one that renders to `super_name` and
/// `even`, trying every `(p, q)` in range.
pub fn find_match(family: &FamilyId, super_name: &str, even: &str) -> Option<(usize, i64, i64)> {
    let (m, n) = row_vars(family);
    let bound = 2 * (m + n) + 2;
    for idx in records_of(row_of(family)) {
        for p in 0..=bound {
            for q in 0..=bound {
                let (name, parts) = instantiate(idx, family, p, q);
                if name == super_name && even_name(&parts) == even {
                    return Some((idx, p, q));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_rendering() {
        assert_eq!(lin(1, 2, 0, -1, 0).symbolic(), "2m+1-p");
        assert_eq!(lin(0, 0, 2, 0, -2).symbolic(), "2n-2q");
        assert_eq!(k(0).symbolic(), "0");
        let b = &RECORDS[records_of(Row::B)[0]];
        assert_eq!(b.super_shape.symbolic(), "osp(p,2m+1-p|2n;R)");
        let even: Vec<String> = b.even.iter().map(|e| e.symbolic()).collect();
        assert_eq!(even.join("⊕"), "so(p,2m+1-p)⊕sp(2n,R)");
    }

    #[test]
    fn every_row_has_info_and_records() {
        for info in ROWS {
            assert!(!records_of(info.row).is_empty(), "{:?}", info.row);
        }
    }

    #[test]
    fn instantiation_drops_zero_summands() {
        // sl(1|2): the first block is zero
        let f = FamilyId::a(0, 1).unwrap();
        let (name, even) = instantiate(2, &f, 1, 0);
        assert_eq!(name, "su(1,0|0,2)");
        assert_eq!(even_name(&even), "su(2)⊕iR");
    }

    #[test]
    fn match_roundtrip() {
        let f = FamilyId::b(2, 1).unwrap();
        let (name, even) = instantiate(records_of(Row::B)[0], &f, 2, 0);
        assert_eq!(name, "osp(2,3|2;R)");
        assert_eq!(even_name(&even), "so(2,3)⊕sp(2,R)");
        assert!(find_match(&f, &name, &even_name(&even)).is_some());
        assert!(find_match(&f, "osp(2,3|4;R)", "so(2,3)⊕sp(4,R)").is_none());
    }
}
