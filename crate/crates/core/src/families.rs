//! Standard family sweeps used by tests, benches and the CLI.

use crate::family::FamilyId;
use crate::rational::{frac, q, Q};

/// The D(2,1;alpha) parameters exercised by default.
pub fn desk_alphas() -> Vec<Q> {
    vec![q(1), q(2), frac(1, 2), q(-2), frac(-1, 2)]
}

/// Every family with rank parameters `m, n <= max`, plus F(4), G(3) and
/// D(2,1;alpha) for [`desk_alphas`].
pub fn desk_families(max: u32) -> Vec<FamilyId> {
    let mut out = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            if let Ok(f) = FamilyId::a(m, n) {
                out.push(f);
            }
        }
    }
    for m in 0..=max {
        for n in 1..=max {
            out.push(FamilyId::b(m, n).expect("valid B"));
        }
    }
    for n in 1..=max {
        out.push(FamilyId::c(n).expect("valid C"));
    }
    for m in 2..=max {
        for n in 1..=max {
            out.push(FamilyId::d(m, n).expect("valid D"));
        }
    }
    out.push(FamilyId::f4());
    out.push(FamilyId::g3());
    out.extend(desk_alphas().into_iter().map(|a| FamilyId::d21(a).expect("valid alpha")));
    out
}
