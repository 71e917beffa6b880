//! Invariant tuples `(d, δ, χ, u, v)` and the numeric profile they
//! determine.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, from_big, int, Rational};
use crate::ring::{substitution_table, ParamExpr};

/// The five free integers determining every Chern number in scope:
/// degree `d = H³`, `δ = 2g - 2`, `χ = χ(O_S)`, `u = h^{1,1}(S)` and
/// `v = c1(N(-H))³`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InvariantTuple {
    #[serde(with = "rational::serde_text::bigint")]
    pub d: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub delta: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub chi: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub u: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub v: BigInt,
}

impl InvariantTuple {
    pub fn new(
        d: impl Into<BigInt>,
        delta: impl Into<BigInt>,
        chi: impl Into<BigInt>,
        u: impl Into<BigInt>,
        v: impl Into<BigInt>,
    ) -> Self {
        InvariantTuple {
            d: d.into(),
            delta: delta.into(),
            chi: chi.into(),
            u: u.into(),
            v: v.into(),
        }
    }

    /// Build from the sectional genus instead of `δ`.
    pub fn from_geometry(
        d: impl Into<BigInt>,
        g: impl Into<BigInt>,
        chi: impl Into<BigInt>,
        u: impl Into<BigInt>,
        v: impl Into<BigInt>,
    ) -> Result<Self> {
        let g = g.into();
        if g < BigInt::zero() {
            return Err(Error::NegativeGenus(g.to_string()));
        }
        let delta = 2 * g - 2;
        Ok(Self::new(d, delta, chi, u, v))
    }

    pub fn values(&self) -> [&BigInt; 5] {
        [&self.d, &self.delta, &self.chi, &self.u, &self.v]
    }

    /// The tuple as a point for [`ParamExpr::eval`].
    pub fn point(&self) -> [Rational; 5] {
        self.values().map(from_big)
    }

    pub fn eval(&self, e: &ParamExpr) -> Rational {
        e.eval(&self.point())
    }
}

impl fmt::Display for InvariantTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            self.d, self.delta, self.chi, self.u, self.v
        )
    }
}

/// Malformed tuple text, naming the offending field.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TupleParseError {
    #[error("expected 5 comma-separated integers d,delta,chi,u,v; got {0}")]
    Arity(usize),
    #[error("field {field}: {value:?} is not an integer")]
    Field { field: &'static str, value: String },
}

pub const FIELD_NAMES: [&str; 5] = ["d", "delta", "chi", "u", "v"];

impl FromStr for InvariantTuple {
    type Err = TupleParseError;

    fn from_str(s: &str) -> Result<Self, TupleParseError> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(TupleParseError::Arity(parts.len()));
        }
        let mut vals = Vec::with_capacity(5);
        for (field, text) in FIELD_NAMES.iter().zip(&parts) {
            let n: BigInt = text.parse().map_err(|_| TupleParseError::Field {
                field,
                value: text.to_string(),
            })?;
            vals.push(n);
        }
        let [d, delta, chi, u, v]: [BigInt; 5] = vals.try_into().unwrap();
        Ok(InvariantTuple::new(d, delta, chi, u, v))
    }
}

/// Every derived number of one invariant tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    #[serde(with = "rational::serde_text::bigint")]
    pub h3: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub h2k: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub hk2: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub k3: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub hc2: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub kc2: BigInt,
    /// Topological Euler number `c3`.
    #[serde(rename = "c3", with = "rational::serde_text::bigint")]
    pub c3top: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub n3: BigInt,
    #[serde(rename = "KS2", with = "rational::serde_text::bigint")]
    pub ks2: BigInt,
    #[serde(rename = "c2S", with = "rational::serde_text::bigint")]
    pub c2s: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub pg: BigInt,
    /// Sectional genus `(δ + 2) / 2`; half-integral for odd `δ`.
    #[serde(with = "rational::serde_text")]
    pub g: Rational,
    #[serde(with = "rational::serde_text::bigint")]
    pub s1h2: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub s20h: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub s11h: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub s300: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub s210: BigInt,
    #[serde(with = "rational::serde_text::bigint")]
    pub s111: BigInt,
}

impl Profile {
    /// Schur numbers in the order `s1·h², s20·h, s11·h, s300, s210, s111`.
    pub fn schur(&self) -> [&BigInt; 6] {
        [
            &self.s1h2, &self.s20h, &self.s11h, &self.s300, &self.s210, &self.s111,
        ]
    }
}

fn integral(q: Rational, what: &str) -> BigInt {
    assert!(q.is_integer(), "{what} is not integral: {q}");
    q.to_integer()
}

/// Compute the profile of `t`. Total on every integer tuple.
pub fn profile(t: &InvariantTuple) -> Profile {
    let point = t.point();
    let [h3, h2k, hk2, k3, hc2, kc2, c3] = substitution_table().map(|e| e.eval(&point));
    let [d, delta, chi, _, _] = point;

    // n3 from its expansion, with 2c1·c2 = -2k·c2.
    let n3 =
        int(35) * &h3 + int(21) * &h2k + int(7) * &hk2 + &k3 - int(7) * &hc2 - &c3 - int(2) * &kc2;
    assert_eq!(n3, &d * &d, "double-point formula violated");

    // Surface and curve invariants.
    let ks2 = &h3 + int(2) * &h2k + &hk2;
    let c2s = &hc2 + &h3 + &h2k;
    assert_eq!(&ks2 + &c2s, int(12) * &chi, "Noether identity violated");
    let pg = &chi - int(1);
    let g = (&delta + int(2)) / int(2);

    // Schur numbers of N(-1) in terms of the seven basic numbers.
    let s1h2 = int(4) * &h3 + &h2k;
    let s20h = int(10) * &h3 + int(5) * &h2k + &hk2 - &hc2;
    let s11h = int(6) * &h3 + int(3) * &h2k + &hc2;
    let s300 = &n3 - int(15) * &h3 - int(6) * &h2k - &hk2 + &hc2;
    let s210 = int(20) * &h3 + int(15) * &h2k + int(3) * &hk2 + int(2) * &hc2 + &kc2 + &c3;
    let s111 = int(4) * &h3 + int(3) * &h2k + int(2) * &hc2 - &c3;

    Profile {
        h3: integral(h3, "h3"),
        h2k: integral(h2k, "h2k"),
        hk2: integral(hk2, "hk2"),
        k3: integral(k3, "k3"),
        hc2: integral(hc2, "hc2"),
        kc2: integral(kc2, "kc2"),
        c3top: integral(c3, "c3"),
        n3: integral(n3, "n3"),
        ks2: integral(ks2, "KS2"),
        c2s: integral(c2s, "c2S"),
        pg: integral(pg, "pg"),
        g,
        s1h2: integral(s1h2, "s1h2"),
        s20h: integral(s20h, "s20h"),
        s11h: integral(s11h, "s11h"),
        s300: integral(s300, "s300"),
        s210: integral(s210, "s210"),
        s111: integral(s111, "s111"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn schur(p: &Profile) -> [i64; 6] {
        p.schur().map(|x| i64::try_from(x).unwrap())
    }

    #[test]
    fn linear_three_space() {
        let p = profile(&InvariantTuple::new(1, -2, 1, 1, 0));
        assert_eq!(p.h2k, b(-4));
        assert_eq!(p.hk2, b(16));
        assert_eq!(p.k3, b(-64));
        assert_eq!(p.hc2, b(6));
        assert_eq!(p.c3top, b(4));
        assert_eq!(p.ks2, b(9));
        assert_eq!(p.g, int(0));
        assert_eq!(schur(&p), [0; 6]);
    }

    #[test]
    fn quadric_threefold() {
        let p = profile(&InvariantTuple::new(2, -2, 1, 2, 2));
        assert_eq!(p.k3, b(-54));
        assert_eq!(p.hc2, b(8));
        assert_eq!(p.c3top, b(4));
        assert_eq!(p.ks2, b(8));
        assert_eq!(schur(&p), [2, 0, 2, 0, 0, 2]);
    }

    #[test]
    fn complete_intersection_of_two_quadrics() {
        let p = profile(&InvariantTuple::new(4, 0, 1, 6, 32));
        assert_eq!(p.h2k, b(-8));
        assert_eq!(p.hk2, b(16));
        assert_eq!(p.k3, b(-32));
        assert_eq!(p.hc2, b(12));
        assert_eq!(p.c3top, b(0));
        assert_eq!(p.ks2, b(4));
        assert_eq!(p.g, int(1));
        assert_eq!(schur(&p), [8, 4, 12, 0, 8, 16]);
    }

    #[test]
    fn odd_delta_gives_half_integral_genus() {
        let p = profile(&InvariantTuple::new(3, -1, 1, 1, 0));
        assert_eq!(p.g, rational::ratio(1, 2));
    }

    #[test]
    fn from_geometry_shifts_genus() {
        let cases = [
            ((1, 0, 1, 1, 0), (1, -2, 1, 1, 0)),
            ((4, 1, 1, 6, 32), (4, 0, 1, 6, 32)),
            ((34, 5, 2, 3, 7), (34, 8, 2, 3, 7)),
        ];
        for ((d, g, c, u, v), (d2, dl, c2, u2, v2)) in cases {
            assert_eq!(
                InvariantTuple::from_geometry(d, g, c, u, v).unwrap(),
                InvariantTuple::new(d2, dl, c2, u2, v2)
            );
        }
        assert!(matches!(
            InvariantTuple::from_geometry(1, -1, 1, 1, 0),
            Err(Error::NegativeGenus(_))
        ));
    }

    #[test]
    fn parse_tuple() {
        let t: InvariantTuple = "4, 0,1,6,32".parse().unwrap();
        assert_eq!(t, InvariantTuple::new(4, 0, 1, 6, 32));
        assert_eq!(
            "1,2,3".parse::<InvariantTuple>(),
            Err(TupleParseError::Arity(3))
        );
        assert_eq!(
            "1,x,1,1,0".parse::<InvariantTuple>(),
            Err(TupleParseError::Field {
                field: "delta",
                value: "x".into()
            })
        );
    }

    #[test]
    fn json_field_names_are_stable() {
        let p = profile(&InvariantTuple::new(4, 0, 1, 6, 32));
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with(r#"{"h3":"4","h2k":"-8","hk2":"16","k3":"-32","hc2":"12","kc2":"-24","c3":"0","n3":"16","KS2":"4","c2S":"8","pg":"0","g":"1","#));
        let back: Profile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
