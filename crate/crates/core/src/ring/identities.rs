//! Registry of symbolic identities. Each entry recomputes a left side from
//! the ring machinery and compares it coefficientwise with a stated form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::int;

use super::chern::{normal_chern, reduce_to_params, twisted_normal_schur};
use super::graded::{times, GradedPoly};
use super::params::ParamExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    NormalC1,
    NormalC2,
    NormalC3,
    RelH2K,
    RelHK2,
    RelK3,
    RelHC2,
    RelC3,
    SchurS1,
    SchurS20,
    SchurS11,
    SchurS300,
    SchurS210,
    SchurS111,
    DoublePoint,
    HodgeTwisted,
    HodgeHyperplane,
    DegreeQuadratic,
    SchurSum,
}

impl IdentityId {
    pub const ALL: [IdentityId; 19] = [
        IdentityId::NormalC1,
        IdentityId::NormalC2,
        IdentityId::NormalC3,
        IdentityId::RelH2K,
        IdentityId::RelHK2,
        IdentityId::RelK3,
        IdentityId::RelHC2,
        IdentityId::RelC3,
        IdentityId::SchurS1,
        IdentityId::SchurS20,
        IdentityId::SchurS11,
        IdentityId::SchurS300,
        IdentityId::SchurS210,
        IdentityId::SchurS111,
        IdentityId::DoublePoint,
        IdentityId::HodgeTwisted,
        IdentityId::HodgeHyperplane,
        IdentityId::DegreeQuadratic,
        IdentityId::SchurSum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::NormalC1 => "L3.4.1",
            IdentityId::NormalC2 => "L3.4.2",
            IdentityId::NormalC3 => "L3.4.3",
            IdentityId::RelH2K => "L3.6.1",
            IdentityId::RelHK2 => "L3.6.2",
            IdentityId::RelK3 => "L3.6.3",
            IdentityId::RelHC2 => "L3.6.4",
            IdentityId::RelC3 => "L3.6.5",
            IdentityId::SchurS1 => "L4.3.1",
            IdentityId::SchurS20 => "L4.3.2",
            IdentityId::SchurS11 => "L4.3.3",
            IdentityId::SchurS300 => "L4.3.4",
            IdentityId::SchurS210 => "L4.3.5",
            IdentityId::SchurS111 => "L4.3.6",
            IdentityId::DoublePoint => "DP",
            IdentityId::HodgeTwisted => "C4.5.1",
            IdentityId::HodgeHyperplane => "C4.5.2",
            IdentityId::DegreeQuadratic => "S5.QUAD",
            IdentityId::SchurSum => "S5.SUM",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::NormalC1 => "n1 = 7h + k",
            IdentityId::NormalC2 => "n2 = 21h² + 7hk + k² - c2",
            IdentityId::NormalC3 => "n3 = 35h³ + 21h²k + 7hk² + k³ - 7h·c2 - c3 + 48",
            IdentityId::RelH2K => "h²k = -2d + δ (adjunction)",
            IdentityId::RelHK2 => "hk² = 3d - 2δ + 10χ - u (K_S² = 10χ - u)",
            IdentityId::RelK3 => "k³ = -4d - 24δ - 120χ + 12u + v (definition of v)",
            IdentityId::RelHC2 => "h·c2 = d - δ + 2χ + u (c2(S) = 2χ + u)",
            IdentityId::RelC3 => "c3 = 3d - 10δ - 64χ - 2u + v - d² + 48 (n3 = d²)",
            IdentityId::SchurS1 => "s1·h² = 2d + δ",
            IdentityId::SchurS20 => "s20·h = 2d + 4δ + 8χ - 2u",
            IdentityId::SchurS11 => "s11·h = d + 2δ + 2χ + u",
            IdentityId::SchurS300 => "s300 = -5d - 5δ - 8χ + 2u + d²",
            IdentityId::SchurS210 => "s210 = 4d - 3δ - 30χ - 3u + v + 24 - d²",
            IdentityId::SchurS111 => "s111 = -3d + 11δ + 68χ + 4u - v - 48 + d²",
            IdentityId::DoublePoint => "n3 = d² (double-point formula)",
            IdentityId::HodgeTwisted => "Hodge index on 4H+K: (3d+6δ+10χ-u)² - v(2d+δ)",
            IdentityId::HodgeHyperplane => "Hodge index on H: δ² - (2δ+10χ-u)d + d²",
            IdentityId::DegreeQuadratic => {
                "(3d+6δ+9)² - (2d+δ)(d²-4d+3δ+9) = 33δ² + (-d²+34d+99)δ + (81+17d²+36d-2d³)"
            }
            IdentityId::SchurSum => "s20·h + s11·h = 3d + 6δ + 10χ - u",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One side of an identity: either an intersection-ring class or a
/// polynomial in the invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Class(GradedPoly),
    Params(ParamExpr),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Class(p) => p.fmt(f),
            Side::Params(e) => e.fmt(f),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub id: IdentityId,
    pub computed: Side,
    pub stated: Side,
    /// `computed - stated`; zero exactly when the identity holds.
    pub diff: Side,
    pub passed: bool,
}

fn reduce(p: &GradedPoly) -> ParamExpr {
    reduce_to_params(p).expect("registry classes are homogeneous of degree 3")
}

fn h() -> GradedPoly {
    GradedPoly::h()
}

fn k() -> GradedPoly {
    GradedPoly::k()
}

fn lin(c: i64, a: [i64; 5]) -> ParamExpr {
    ParamExpr::linear(c, a)
}

fn d2() -> ParamExpr {
    ParamExpr::d().pow(2)
}

fn schur_lhs(id: IdentityId) -> ParamExpr {
    let s = twisted_normal_schur();
    let h2 = h().pow(2);
    match id {
        IdentityId::SchurS1 => reduce(&(&s.s1 * &h2)),
        IdentityId::SchurS20 => reduce(&(&s.s20 * &h())),
        IdentityId::SchurS11 => reduce(&(&s.s11 * &h())),
        IdentityId::SchurS300 => reduce(&s.s300),
        IdentityId::SchurS210 => reduce(&s.s210),
        IdentityId::SchurS111 => reduce(&s.s111),
        IdentityId::SchurSum => reduce(&(&(&s.s20 + &s.s11) * &h())),
        _ => unreachable!("not a Schur identity"),
    }
}

/// The stated closed forms of the six Schur numbers of `N(-1)`, in the
/// order `s1·h², s20·h, s11·h, s300, s210, s111`.
pub fn schur_closed_forms() -> [ParamExpr; 6] {
    [
        lin(0, [2, 1, 0, 0, 0]),
        lin(0, [2, 4, 8, -2, 0]),
        lin(0, [1, 2, 2, 1, 0]),
        lin(0, [-5, -5, -8, 2, 0]) + d2(),
        lin(24, [4, -3, -30, -3, 1]) - d2(),
        lin(-48, [-3, 11, 68, 4, -1]) + d2(),
    ]
}

fn sides(id: IdentityId) -> (Side, Side) {
    use IdentityId::*;
    use Side::{Class, Params};
    let (n1, n2, n3) = normal_chern();
    let hk = &h() * &k();
    match id {
        NormalC1 => (Class(n1), Class(times(7, &h()) + k())),
        NormalC2 => (
            Class(n2),
            Class(times(21, &h().pow(2)) + times(7, &hk) + k().pow(2) - GradedPoly::c2()),
        ),
        NormalC3 => {
            // The constant 48 is 2c1·c2 = -2k·c2; it stays symbolic here.
            let stated = times(35, &h().pow(3))
                + times(21, &(&h().pow(2) * &k()))
                + times(7, &(&h() * &k().pow(2)))
                + k().pow(3)
                - times(7, &(&h() * &GradedPoly::c2()))
                - GradedPoly::c3()
                - times(2, &(&k() * &GradedPoly::c2()));
            (Class(n3), Class(stated))
        }
        RelH2K => {
            let adjunction = &ParamExpr::delta() - &reduce(&times(2, &h().pow(3)));
            (Params(reduce(&(&h().pow(2) * &k()))), Params(adjunction))
        }
        RelHK2 => {
            let ks2 = lin(0, [0, 0, 10, -1, 0]);
            let rest = reduce(&(h().pow(3) + times(2, &(&h().pow(2) * &k()))));
            (Params(reduce(&(&h() * &k().pow(2)))), Params(&ks2 - &rest))
        }
        RelK3 => {
            let rest = reduce(
                &(times(64, &h().pow(3))
                    + times(48, &(&h().pow(2) * &k()))
                    + times(12, &(&h() * &k().pow(2)))),
            );
            (Params(reduce(&k().pow(3))), Params(&ParamExpr::v() - &rest))
        }
        RelHC2 => {
            let c2s = lin(0, [0, 0, 2, 1, 0]);
            let rest = reduce(&(&(&k() + &h()) * &h().pow(2)));
            (
                Params(reduce(&(&h() * &GradedPoly::c2()))),
                Params(&c2s - &rest),
            )
        }
        RelC3 => {
            // n3 = d² solved for c3.
            let without_c3 = &n3 + &GradedPoly::c3();
            (
                Params(reduce(&GradedPoly::c3())),
                Params(&reduce(&without_c3) - &d2()),
            )
        }
        SchurS1 | SchurS20 | SchurS11 | SchurS300 | SchurS210 | SchurS111 => {
            let idx = [SchurS1, SchurS20, SchurS11, SchurS300, SchurS210, SchurS111]
                .iter()
                .position(|&x| x == id)
                .unwrap();
            (
                Params(schur_lhs(id)),
                Params(schur_closed_forms()[idx].clone()),
            )
        }
        DoublePoint => (Params(reduce(&n3)), Params(d2())),
        HodgeTwisted => {
            // (H·D·D)² ≥ (H²·D)(D³) with D = 4H + K.
            let det = &times(4, &h()) + &k();
            let hdd = reduce(&(&h() * &det.pow(2)));
            let hhd = reduce(&(&h().pow(2) * &det));
            let ddd = reduce(&det.pow(3));
            let stated =
                &lin(0, [3, 6, 10, -1, 0]).pow(2) - &(&ParamExpr::v() * &lin(0, [2, 1, 0, 0, 0]));
            (Params(&hdd.pow(2) - &(&hhd * &ddd)), Params(stated))
        }
        HodgeHyperplane => {
            // (H·K·H)² ≥ (H³)(K²·H).
            let hkh = reduce(&(&h().pow(2) * &k()));
            let hhh = reduce(&h().pow(3));
            let kkh = reduce(&(&h() * &k().pow(2)));
            let dd = ParamExpr::d();
            let delta = ParamExpr::delta();
            let stated = &(&delta.pow(2) - &(&lin(0, [0, 2, 10, -1, 0]) * &dd)) + &d2();
            (Params(&hkh.pow(2) - &(&hhh * &kkh)), Params(stated))
        }
        DegreeQuadratic => {
            let lhs = &lin(9, [3, 6, 0, 0, 0]).pow(2)
                - &(&lin(0, [2, 1, 0, 0, 0]) * &(&lin(9, [-4, 3, 0, 0, 0]) + &d2()));
            let dd = ParamExpr::d();
            let delta = ParamExpr::delta();
            let b = &(&lin(99, [34, 0, 0, 0, 0]) - &d2()) * &delta;
            let c =
                &(&lin(81, [36, 0, 0, 0, 0]) + &d2().scale(&int(17))) - &dd.pow(3).scale(&int(2));
            let stated = &(&delta.pow(2).scale(&int(33)) + &b) + &c;
            (Params(lhs), Params(stated))
        }
        SchurSum => (Params(schur_lhs(id)), Params(lin(0, [3, 6, 10, -1, 0]))),
    }
}

pub fn verify_identity(id: IdentityId) -> Verdict {
    let (computed, stated) = sides(id);
    let diff = match (&computed, &stated) {
        (Side::Class(a), Side::Class(b)) => Side::Class(a - b),
        (Side::Params(a), Side::Params(b)) => Side::Params(a - b),
        _ => unreachable!("both sides of an identity live in the same space"),
    };
    let passed = match &diff {
        Side::Class(p) => p.is_zero(),
        Side::Params(e) => e.is_zero(),
    };
    Verdict {
        id,
        computed,
        stated,
        diff,
        passed,
    }
}

pub fn verify_all() -> Vec<Verdict> {
    IdentityId::ALL.into_iter().map(verify_identity).collect()
}
