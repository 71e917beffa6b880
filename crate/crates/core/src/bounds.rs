//! Lifting threshold, sectional-genus bound, the quadratic lower bound for
//! `δ`, and the exact degree-bound solver built from them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, ceil, from_big, int, isqrt, ratio, to_text, Rational};

/// Largest even integer not above `s`.
pub fn effective_even(s: i64) -> i64 {
    if s % 2 == 0 {
        s
    } else {
        s - 1
    }
}

/// Degree above which a threefold whose sectional curve lies on a surface of
/// degree `s` in P⁴ already lies on a fourfold of degree `s`:
/// `(s-1)(s-3)/2 + 8s - 3`.
pub fn lifting_threshold(s: i64) -> Result<Rational> {
    if s < 1 {
        return Err(Error::Domain(format!(
            "lifting threshold needs s >= 1, got {s}"
        )));
    }
    Ok(ratio((s - 1) * (s - 3), 2) + int(8 * s - 3))
}

/// Upper bound for `δ` from the sectional genus bound, with `s` replaced by
/// `s - 1` when odd and without the applicability checks.
fn genus_upper_formula(d: &Rational, s_eff: i64) -> Rational {
    d * d / int(s_eff) + d * ratio(s_eff - 6, 2) + ratio(3 * s_eff * s_eff - 28, 4)
}

/// `δ ≤ d²/s + d(s/2 - 3) + (3s² - 28)/4` for a curve in P⁴ on no surface
/// of degree below `s` (even part used for odd `s`).
pub fn genus_upper_delta(d: &BigInt, s: i64) -> Result<Rational> {
    let s_eff = effective_even(s);
    if s_eff < 12 {
        return Err(Error::Domain(format!(
            "genus bound needs even s >= 12 (s >= 11), got s = {s}"
        )));
    }
    if d <= &BigInt::from(s_eff).pow(3) {
        return Err(Error::Domain(format!(
            "genus bound applies only for d > s^3 = {}, got d = {d}",
            BigInt::from(s_eff).pow(3)
        )));
    }
    Ok(genus_upper_formula(&from_big(d), s_eff))
}

/// Coefficients `(A, B, C)` of the quadratic `Aδ² + Bδ + C ≥ 0` obtained by
/// combining Hodge index on `4H + K` with `s210 ≥ 0` under `K_S² ≤ κ`:
/// `(3d + 6δ + κ)² - (2d + δ)(d² - 4d + 3δ + 9)`.
pub fn section5_quadratic(d: &BigInt, kappa: i64) -> (Rational, Rational, Rational) {
    let d = from_big(d);
    let k = int(kappa);
    let d2 = &d * &d;
    let a = int(33);
    let b = -&d2 + int(34) * &d + int(12) * &k - int(9);
    let c = int(-2) * &d2 * &d + int(17) * &d2 + (int(6) * &k - int(18)) * &d + &k * &k;
    (a, b, c)
}

fn quadratic_at(coeffs: &(Rational, Rational, Rational), x: &Rational) -> Rational {
    let (a, b, c) = coeffs;
    (a * x + b) * x + c
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundMode {
    /// `-B/A`, the published relaxation.
    #[default]
    Paper,
    /// The positive root itself, to within [`sharp_tolerance`].
    Sharp,
}

impl fmt::Display for LowerBoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerBoundMode::Paper => "paper",
            LowerBoundMode::Sharp => "sharp",
        })
    }
}

/// Bracket width for the sharp root, `1/10⁶`.
pub fn sharp_tolerance() -> Rational {
    ratio(1, 1_000_000)
}

/// Bracket `[lo, hi]` around the positive root of the quadratic with
/// `q(lo) < 0 < q(hi)` and `hi - lo <= 1/10⁶`, starting from `lo = -B/A`.
pub fn sharp_root_bracket(d: &BigInt, kappa: i64) -> Result<(Rational, Rational)> {
    let coeffs = section5_quadratic(d, kappa);
    let (a, b, c) = &coeffs;
    if !c.is_negative() {
        return Err(Error::Domain(format!(
            "no forced lower bound for delta at d = {d}, kappa = {kappa}: constant term {} >= 0",
            to_text(c)
        )));
    }
    // q(-B/A) = C < 0, so the positive root lies to the right.
    let mut lo = -b / a;
    let mut step = int(1);
    let mut hi = &lo + &step;
    while !quadratic_at(&coeffs, &hi).is_positive() {
        lo = hi;
        step = &step * int(2);
        hi = &lo + &step;
    }
    let tol = sharp_tolerance();
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / int(2);
        let q = quadratic_at(&coeffs, &mid);
        if q.is_zero() {
            return Ok((mid.clone(), mid));
        }
        if q.is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Lower bound for `δ` forced by the quadratic, valid where its constant
/// term is negative.
pub fn delta_lower(d: &BigInt, kappa: i64, mode: LowerBoundMode) -> Result<Rational> {
    match mode {
        LowerBoundMode::Paper => {
            let (a, b, c) = section5_quadratic(d, kappa);
            if !c.is_negative() {
                return Err(Error::Domain(format!(
                    "no forced lower bound for delta at d = {d}, kappa = {kappa}: constant term {} >= 0",
                    to_text(&c)
                )));
            }
            Ok(-b / a)
        }
        LowerBoundMode::Sharp => sharp_root_bracket(d, kappa).map(|(lo, _)| lo),
    }
}

/// Smallest even `s` for which the two `δ` bounds can cross.
pub const MIN_CLOSING_S: i64 = 34;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub s: i64,
    pub s_effective: i64,
    pub kappa: i64,
    pub mode: LowerBoundMode,
    #[serde(with = "rational::serde_text")]
    pub lifting_threshold: Rational,
    #[serde(with = "rational::serde_text::bigint")]
    pub s_cubed: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub first_contradictory_degree: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub final_bound: BigInt,
}

/// `F(d) = 132·s·(lower(d) - upper(d))` in the default mode, an integer
/// quadratic `a d² + b d + c` with `a = 4s - 132`.
fn crossing_quadratic(s_eff: i64, kappa: i64) -> (BigInt, BigInt, BigInt) {
    let s = BigInt::from(s_eff);
    let k = BigInt::from(kappa);
    let a = 4 * &s - 132;
    let b = -136 * &s - 66 * &s * (&s - 6);
    let c = 4 * &s * (9 - 12 * &k) - 33 * &s * (3 * &s * &s - 28);
    (a, b, c)
}

fn eval_int(coeffs: &(BigInt, BigInt, BigInt), x: &BigInt) -> BigInt {
    let (a, b, c) = coeffs;
    (a * x + b) * x + c
}

fn constant_term_negative(d: &BigInt, kappa: i64) -> bool {
    section5_quadratic(d, kappa).2.is_negative()
}

/// Least `d >= 1` at which the linear lower bound for `δ` exceeds the genus
/// upper bound (and the lower bound is in force).
fn paper_crossing(s_eff: i64, kappa: i64) -> BigInt {
    let f = crossing_quadratic(s_eff, kappa);
    let (a, b, c) = &f;
    let disc: BigInt = b * b - 4 * a * c;
    // floor of the larger root of F; F <= 0 exactly between the roots.
    let past_root = if disc.is_negative() {
        None
    } else {
        let num = -b + isqrt(&disc);
        Some(num.div_floor(&(2 * a)) + 1)
    };
    let mut d = BigInt::from(1);
    loop {
        if !eval_int(&f, &d).is_positive() {
            let jump = past_root
                .clone()
                .expect("F <= 0 somewhere means real roots");
            d = if jump > d { jump } else { d + 1 };
            continue;
        }
        if !constant_term_negative(&d, kappa) {
            d += 1;
            continue;
        }
        return d;
    }
}

/// Sharp-mode contradiction at `d`: the positive root of the quadratic
/// exceeds the genus upper bound `U`. With `C < 0` the other root is
/// negative and `U > 0`, so this is `q(U) < 0`.
fn sharp_contradiction(d: &BigInt, s_eff: i64, kappa: i64) -> bool {
    if !constant_term_negative(d, kappa) {
        return false;
    }
    let upper = genus_upper_formula(&from_big(d), s_eff);
    quadratic_at(&section5_quadratic(d, kappa), &upper).is_negative()
}

/// Exact degree bound for threefolds not on a fourfold of degree `<= s`,
/// with `K_S² <= κ`.
pub fn degree_bound(s: i64, kappa: i64, mode: LowerBoundMode) -> Result<BoundReport> {
    let s_eff = effective_even(s);
    if s_eff < MIN_CLOSING_S {
        return Err(Error::Domain(format!(
            "inequality chain cannot close for s = {s}: need even s >= {MIN_CLOSING_S}"
        )));
    }
    let lifting_threshold = lifting_threshold(s)?;
    let s_cubed = BigInt::from(s_eff).pow(3);

    let mut first = paper_crossing(s_eff, kappa);
    if mode == LowerBoundMode::Sharp {
        // The sharp bound dominates the linear one, so the run of
        // contradictory degrees only extends downwards.
        while first > BigInt::from(1) && sharp_contradiction(&(&first - 1), s_eff, kappa) {
            first -= 1;
        }
    }

    let final_bound = [s_cubed.clone(), ceil(&lifting_threshold), &first - 1]
        .into_iter()
        .max()
        .unwrap();

    Ok(BoundReport {
        s,
        s_effective: s_eff,
        kappa,
        mode,
        lifting_threshold,
        s_cubed,
        first_contradictory_degree: first,
        final_bound,
    })
}

/// Human-readable chain of inequalities behind a report.
pub fn proof_trace(r: &BoundReport) -> Vec<String> {
    let s = r.s_effective;
    let k = r.kappa;
    let mut lines = vec![
        format!("hypothesis: K_S^2 = 10chi - u <= {k}"),
        "baseline: chi >= 1 and u >= 1, so 30chi + 3u - 24 >= 9".to_string(),
        "Schur semi-positivity of N(-1): s20.h + s11.h = 3d + 6delta + 10chi - u >= 0".to_string(),
        format!("Hodge index on 4H+K: v(2d + delta) <= (3d + 6delta + 10chi - u)^2 <= (3d + 6delta + {k})^2"),
        "Schur semi-positivity of N(-1): s210 >= 0 gives v >= d^2 - 4d + 3delta + 9".to_string(),
        format!(
            "combined: 33delta^2 + (-d^2 + 34d + {})delta + (-2d^3 + 17d^2 + {}d + {}) >= 0",
            12 * k - 9,
            6 * k - 18,
            k * k
        ),
    ];
    match r.mode {
        LowerBoundMode::Paper => lines.push(format!(
            "constant term negative, roots of opposite sign: delta >= (d^2 - 34d - {})/33",
            12 * k - 9
        )),
        LowerBoundMode::Sharp => lines.push(
            "constant term negative, roots of opposite sign: delta >= positive root (exact sign test)"
                .to_string(),
        ),
    }
    lines.push(format!(
        "lifting (Chiantini-Ciliberto): for d > {} the sectional curve lies on no surface of degree <= {} in P^4",
        to_text(&r.lifting_threshold),
        r.s
    ));
    lines.push(format!(
        "genus bound (Chiantini-Ciliberto-di Gennaro, s = {s}, d > {}): delta <= d^2/{s} + {}d + {}",
        r.s_cubed,
        s / 2 - 3,
        to_text(&ratio(3 * s * s - 28, 4))
    ));
    lines.push(format!(
        "the two delta bounds contradict each other for every d >= {}",
        r.first_contradictory_degree
    ));
    lines.push(format!(
        "both external bounds need d > max({}, {}); hence d <= {}",
        r.s_cubed,
        to_text(&r.lifting_threshold),
        r.final_bound
    ));
    lines
}
