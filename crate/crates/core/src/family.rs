//! Family identifiers for the basic classical Lie superalgebras.

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    A,
    B,
    B0,
    C,
    D,
    D21alpha,
    F4,
    G3,
}

/// A family together with its rank parameters.
///
/// Conventions: `A(m,n)` is sl(m+1|n+1), `B(m,n)` is osp(2m+1|2n),
/// `B0` is B(0,n) = osp(1|2n), `C` with parameter `n` is C(n+1) = osp(2|2n),
/// `D(m,n)` is osp(2m|2n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub m: u32,
    pub n: u32,
    pub alpha: Option<Q>,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, m: u32, n: u32, alpha: Option<Q>) -> Result<Self> {
        let f = FamilyId { kind, m, n, alpha };
        f.validate()?;
        Ok(f)
    }

    pub fn a(m: u32, n: u32) -> Result<Self> {
        Self::new(FamilyKind::A, m, n, None)
    }

    /// `B(m,n)`; `m = 0` yields the `B0` kind.
    pub fn b(m: u32, n: u32) -> Result<Self> {
        if m == 0 {
            Self::new(FamilyKind::B0, 0, n, None)
        } else {
            Self::new(FamilyKind::B, m, n, None)
        }
    }

    /// `C(n+1)` = osp(2|2n).
    pub fn c(n: u32) -> Result<Self> {
        Self::new(FamilyKind::C, 0, n, None)
    }

    pub fn d(m: u32, n: u32) -> Result<Self> {
        Self::new(FamilyKind::D, m, n, None)
    }

    pub fn d21(alpha: Q) -> Result<Self> {
        Self::new(FamilyKind::D21alpha, 2, 1, Some(alpha))
    }

    pub fn f4() -> Self {
        FamilyId { kind: FamilyKind::F4, m: 0, n: 0, alpha: None }
    }

    pub fn g3() -> Self {
        FamilyId { kind: FamilyKind::G3, m: 0, n: 0, alpha: None }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidFamily(format!("{self}: {why}")));
        match self.kind {
            FamilyKind::A if self.m + self.n == 0 => bad("A(0,0) is not simple"),
            FamilyKind::B if self.m < 1 || self.n < 1 => bad("B(m,n) needs m >= 1 and n >= 1"),
            FamilyKind::B0 if self.m != 0 || self.n < 1 => bad("B(0,n) needs n >= 1"),
            FamilyKind::C if self.n < 1 => bad("C(n+1) needs n >= 1"),
            FamilyKind::D if self.m < 2 || self.n < 1 => bad("D(m,n) needs m >= 2 and n >= 1"),
            FamilyKind::D21alpha => match self.alpha {
                None => bad("missing alpha"),
                Some(a) if a.is_zero() || a == -Q::one() => bad("alpha must avoid 0 and -1"),
                _ => Ok(()),
            },
            _ if self.kind != FamilyKind::D21alpha && self.alpha.is_some() => bad("alpha only applies to D(2,1;alpha)"),
            _ => Ok(()),
        }
    }

    /// `A(n,n)`, whose simple quotient is psl(n+1|n+1).
    pub fn is_psl(&self) -> bool {
        self.kind == FamilyKind::A && self.m == self.n
    }

    pub fn alpha(&self) -> Q {
        self.alpha.unwrap_or_else(Q::one)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::A => write!(f, "A({},{})", self.m, self.n),
            FamilyKind::B => write!(f, "B({},{})", self.m, self.n),
            FamilyKind::B0 => write!(f, "B(0,{})", self.n),
            FamilyKind::C => write!(f, "C({})", self.n + 1),
            FamilyKind::D => write!(f, "D({},{})", self.m, self.n),
            FamilyKind::D21alpha => write!(f, "D(2,1;{})", fmt_q(&self.alpha())),
            FamilyKind::F4 => write!(f, "F(4)"),
            FamilyKind::G3 => write!(f, "G(3)"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    kind: FamilyKind,
    m: u32,
    n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
}

impl From<FamilyId> for FamilyRepr {
    fn from(f: FamilyId) -> Self {
        FamilyRepr { kind: f.kind, m: f.m, n: f.n, alpha: f.alpha.as_ref().map(fmt_q) }
    }
}

impl TryFrom<FamilyRepr> for FamilyId {
    type Error = Error;
    fn try_from(r: FamilyRepr) -> Result<Self> {
        let alpha = match r.alpha {
            Some(s) => Some(crate::spec_parse::parse_rational(&s)?),
            None => None,
        };
        FamilyId::new(r.kind, r.m, r.n, alpha)
    }
}
