//! Exact rational and integer helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn to_text(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_text(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Smallest integer not below `q`.
pub fn ceil(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

/// Largest integer `r` with `r * r <= n`, for `n >= 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// `a mod 2` in `{0, 1}` regardless of sign.
pub fn parity(a: &BigInt) -> BigInt {
    a.mod_floor(&BigInt::from(2))
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

/// Serde adapters writing exact numbers as strings.
pub mod serde_text {
    use super::*;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_text(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_text(&s).ok_or_else(|| D::Error::custom(format!("not a rational: {s:?}")))
    }

    pub mod bigint {
        use num_bigint::BigInt;
        use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&n.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            let s = String::deserialize(d)?;
            s.parse()
                .map_err(|_| D::Error::custom(format!("not an integer: {s:?}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_forms() {
        assert_eq!(to_text(&ratio(1561, 2)), "1561/2");
        assert_eq!(to_text(&ratio(-6, 3)), "-2");
        assert_eq!(parse_text("1561/2"), Some(ratio(1561, 2)));
        assert_eq!(parse_text("-7"), Some(int(-7)));
        assert_eq!(parse_text("1/0"), None);
        assert_eq!(parse_text("x"), None);
    }

    #[test]
    fn ceil_and_sqrt() {
        assert_eq!(ceil(&ratio(1561, 2)), BigInt::from(781));
        assert_eq!(ceil(&ratio(-3, 2)), BigInt::from(-1));
        assert_eq!(isqrt(&BigInt::from(72066910)), BigInt::from(8489));
        assert_eq!(parity(&BigInt::from(-3)), BigInt::from(1));
    }
}
