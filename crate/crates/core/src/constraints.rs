//! The inequality system every smooth threefold in P⁶ must satisfy,
//! evaluated with exact slack values.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::invariants::InvariantTuple;
use crate::rational::{self, parity, Rational};

/// Geometric conditions each implying `K_S² ≤ 9`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverFlag {
    CoveredByLines,
    SectionNotGeneralType,
    KxPlusHEmpty,
}

impl CoverFlag {
    pub fn note(self) -> &'static str {
        match self {
            CoverFlag::CoveredByLines => {
                "covered by lines: lines are free, so |K_X + H| is empty, p_g(S) = 0 and K_S² ≤ 9"
            }
            CoverFlag::SectionNotGeneralType => {
                "hyperplane section not of general type: K_S² ≤ 9 by the classification of surfaces"
            }
            CoverFlag::KxPlusHEmpty => "|K_X + H| empty: p_g(S) = 0, χ = 1 and K_S² = 10 - u ≤ 9",
        }
    }
}

/// Cap on `K_S²` implied by any cover flag.
pub const COVER_KS2_CAP: i64 = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisConfig {
    /// Enforce `d ≥ min_degree`, `δ` even, `δ ≥ -2`, `χ ≥ 1`, `u ≥ 1`.
    pub geometric_mode: bool,
    pub min_degree: i64,
    pub ks2_cap: Option<i64>,
    pub cover_flags: BTreeSet<CoverFlag>,
}

impl Default for HypothesisConfig {
    fn default() -> Self {
        Self::geometric()
    }
}

impl HypothesisConfig {
    pub fn geometric() -> Self {
        HypothesisConfig {
            geometric_mode: true,
            min_degree: 1,
            ks2_cap: None,
            cover_flags: BTreeSet::new(),
        }
    }

    pub fn raw() -> Self {
        HypothesisConfig {
            geometric_mode: false,
            ..Self::geometric()
        }
    }

    pub fn with_ks2_cap(mut self, kappa: i64) -> Self {
        self.ks2_cap = Some(kappa);
        self
    }

    pub fn with_cover_flag(mut self, flag: CoverFlag) -> Self {
        self.cover_flags.insert(flag);
        self
    }

    /// The cap actually enforced: the explicit one, or 9 when any cover
    /// flag is set.
    pub fn effective_ks2_cap(&self) -> Option<i64> {
        self.ks2_cap
            .or_else(|| (!self.cover_flags.is_empty()).then_some(COVER_KS2_CAP))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstraintId {
    B1,
    B2,
    B3,
    B4,
    B5,
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    H1,
    H2,
    K,
}

impl ConstraintId {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstraintId::B1 => "B1",
            ConstraintId::B2 => "B2",
            ConstraintId::B3 => "B3",
            ConstraintId::B4 => "B4",
            ConstraintId::B5 => "B5",
            ConstraintId::S1 => "S1",
            ConstraintId::S2 => "S2",
            ConstraintId::S3 => "S3",
            ConstraintId::S4 => "S4",
            ConstraintId::S5 => "S5",
            ConstraintId::S6 => "S6",
            ConstraintId::H1 => "H1",
            ConstraintId::H2 => "H2",
            ConstraintId::K => "K",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ConstraintId::B1 => "d - d_min >= 0",
            ConstraintId::B2 => "delta mod 2 = 0",
            ConstraintId::B3 => "delta + 2 >= 0",
            ConstraintId::B4 => "chi - 1 >= 0",
            ConstraintId::B5 => "u - 1 >= 0",
            ConstraintId::S1 => "s1.h^2 = 2d + delta >= 0",
            ConstraintId::S2 => "s20.h = 2d + 4delta + 8chi - 2u >= 0",
            ConstraintId::S3 => "s11.h = d + 2delta + 2chi + u >= 0",
            ConstraintId::S4 => "s300 = -5d - 5delta - 8chi + 2u + d^2 >= 0",
            ConstraintId::S5 => "s210 = 4d - 3delta - 30chi - 3u + v + 24 - d^2 >= 0",
            ConstraintId::S6 => "s111 = -3d + 11delta + 68chi + 4u - v - 48 + d^2 >= 0",
            ConstraintId::H1 => "(3d + 6delta + 10chi - u)^2 - v(2d + delta) >= 0",
            ConstraintId::H2 => "delta^2 - (2delta + 10chi - u)d + d^2 >= 0",
            ConstraintId::K => "kappa - (10chi - u) >= 0",
        }
    }

    /// Parity constraints pass at value zero; all others at value `>= 0`.
    pub fn is_parity(self) -> bool {
        self == ConstraintId::B2
    }
}

impl fmt::Display for ConstraintId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

const BASELINE: [ConstraintId; 5] = [
    ConstraintId::B1,
    ConstraintId::B2,
    ConstraintId::B3,
    ConstraintId::B4,
    ConstraintId::B5,
];

const CORE: [ConstraintId; 8] = [
    ConstraintId::S1,
    ConstraintId::S2,
    ConstraintId::S3,
    ConstraintId::S4,
    ConstraintId::S5,
    ConstraintId::S6,
    ConstraintId::H1,
    ConstraintId::H2,
];

/// Constraints checked under `cfg`, in report order.
pub fn active_constraints(cfg: &HypothesisConfig) -> Vec<ConstraintId> {
    let mut ids = Vec::with_capacity(14);
    if cfg.geometric_mode {
        ids.extend(BASELINE);
    }
    ids.extend(CORE);
    if cfg.effective_ks2_cap().is_some() {
        ids.push(ConstraintId::K);
    }
    ids
}

fn lin(t: &InvariantTuple, c: i64, a: [i64; 5]) -> BigInt {
    t.values()
        .iter()
        .zip(a)
        .fold(BigInt::from(c), |acc, (x, k)| acc + *x * k)
}

/// Exact value of one constraint at `t`.
pub fn constraint_value(id: ConstraintId, t: &InvariantTuple, cfg: &HypothesisConfig) -> BigInt {
    let d = &t.d;
    let d2 = d * d;
    match id {
        ConstraintId::B1 => d - cfg.min_degree,
        ConstraintId::B2 => parity(&t.delta),
        ConstraintId::B3 => &t.delta + 2,
        ConstraintId::B4 => &t.chi - 1,
        ConstraintId::B5 => &t.u - 1,
        ConstraintId::S1 => lin(t, 0, [2, 1, 0, 0, 0]),
        ConstraintId::S2 => lin(t, 0, [2, 4, 8, -2, 0]),
        ConstraintId::S3 => lin(t, 0, [1, 2, 2, 1, 0]),
        ConstraintId::S4 => lin(t, 0, [-5, -5, -8, 2, 0]) + d2,
        ConstraintId::S5 => lin(t, 24, [4, -3, -30, -3, 1]) - d2,
        ConstraintId::S6 => lin(t, -48, [-3, 11, 68, 4, -1]) + d2,
        ConstraintId::H1 => {
            let a = lin(t, 0, [3, 6, 10, -1, 0]);
            &a * &a - &t.v * lin(t, 0, [2, 1, 0, 0, 0])
        }
        ConstraintId::H2 => &t.delta * &t.delta - lin(t, 0, [0, 2, 10, -1, 0]) * d + d2,
        ConstraintId::K => {
            let kappa = cfg
                .effective_ks2_cap()
                .expect("K is only active with a K_S² cap");
            BigInt::from(kappa) - lin(t, 0, [0, 0, 10, -1, 0])
        }
    }
}

fn passes(id: ConstraintId, value: &BigInt) -> bool {
    if id.is_parity() {
        value.is_zero()
    } else {
        !value.is_negative()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintEntry {
    pub id: ConstraintId,
    #[serde(with = "rational::serde_text")]
    pub value: Rational,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    pub tuple: InvariantTuple,
    pub constraints: Vec<ConstraintEntry>,
    pub feasible: bool,
}

impl ConstraintReport {
    pub fn get(&self, id: ConstraintId) -> Option<&ConstraintEntry> {
        self.constraints.iter().find(|e| e.id == id)
    }

    pub fn violations(&self) -> impl Iterator<Item = &ConstraintEntry> {
        self.constraints.iter().filter(|e| !e.ok)
    }
}

pub fn evaluate(t: &InvariantTuple, cfg: &HypothesisConfig) -> ConstraintReport {
    let constraints: Vec<ConstraintEntry> = active_constraints(cfg)
        .into_iter()
        .map(|id| {
            let value = constraint_value(id, t, cfg);
            ConstraintEntry {
                id,
                ok: passes(id, &value),
                value: Rational::from_integer(value),
            }
        })
        .collect();
    let feasible = constraints.iter().all(|e| e.ok);
    ConstraintReport {
        tuple: t.clone(),
        constraints,
        feasible,
    }
}

/// Same verdict as `evaluate(t, cfg).feasible`, stopping at the first
/// violated constraint.
pub fn is_feasible(t: &InvariantTuple, cfg: &HypothesisConfig) -> bool {
    active_constraints(cfg)
        .into_iter()
        .all(|id| passes(id, &constraint_value(id, t, cfg)))
}
