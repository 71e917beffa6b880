//! Truncated graded polynomials in `h, k` (degree 1), `c2` (degree 2) and
//! `c3` (degree 3). Everything above total degree 3 vanishes on a threefold.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Top degree of the ring.
pub const TOP_DEGREE: u32 = 3;

const WEIGHTS: [u32; 4] = [1, 1, 2, 3];
const NAMES: [&str; 4] = ["h", "k", "c2", "c3"];

/// Exponent vector over `(h, k, c2, c3)`. The derived ordering is the
/// lexicographic order on exponent vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u8; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);
    pub const H3: Monomial = Monomial([3, 0, 0, 0]);
    pub const H2K: Monomial = Monomial([2, 1, 0, 0]);
    pub const HK2: Monomial = Monomial([1, 2, 0, 0]);
    pub const K3: Monomial = Monomial([0, 3, 0, 0]);
    pub const HC2: Monomial = Monomial([1, 0, 1, 0]);
    pub const KC2: Monomial = Monomial([0, 1, 1, 0]);
    pub const C3: Monomial = Monomial([0, 0, 0, 1]);

    pub fn degree(&self) -> u32 {
        self.0
            .iter()
            .zip(WEIGHTS)
            .map(|(&e, w)| u32::from(e) * w)
            .sum()
    }

    fn times(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u8; 4];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.0[i] + other.0[i];
        }
        let m = Monomial(exps);
        (m.degree() <= TOP_DEGREE).then_some(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &e) in NAMES.iter().zip(&self.0) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Element of the intersection ring of a threefold, as a formal polynomial
/// truncated above degree 3. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    /// `c * m`, or zero if `m` lies above the top degree.
    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        if m.degree() <= TOP_DEGREE {
            p.add_term(m, c);
        }
        p
    }

    pub fn h() -> Self {
        Self::monomial(Monomial([1, 0, 0, 0]), int(1))
    }

    pub fn k() -> Self {
        Self::monomial(Monomial([0, 1, 0, 0]), int(1))
    }

    pub fn c2() -> Self {
        Self::monomial(Monomial([0, 0, 1, 0]), int(1))
    }

    pub fn c3() -> Self {
        Self::monomial(Monomial([0, 0, 0, 1]), int(1))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(Monomial::ONE)
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn component(&self, degree: u32) -> GradedPoly {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// True when every stored term has the given degree. Zero is pure of
    /// every degree.
    pub fn is_pure(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> GradedPoly {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Multiplicative inverse of a polynomial with constant term 1.
    pub fn invert_unit(&self) -> Result<GradedPoly> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::NotUnit(c0));
        }
        // 1 / (1 + x) = 1 - x + x^2 - x^3, and x^4 has degree >= 4.
        let x = self - &Self::one();
        let mut inverse = Self::one();
        let mut power = Self::one();
        for i in 1..=TOP_DEGREE {
            power = &power * &x;
            if i % 2 == 1 {
                inverse = &inverse - &power;
            } else {
                inverse = &inverse + &power;
            }
        }
        Ok(inverse)
    }
}

impl fmt::Display for GradedPoly {
    /// Terms in descending canonical order, e.g. `35*h^3 + 21*h^2*k - 1*c3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(m, c)| (m.to_string(), c)))
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let negative = c < &Rational::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let text = crate::rational::to_text(&magnitude);
        if mono == "1" {
            f.write_str(&text)?;
        } else {
            write!(f, "{text}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Add for &GradedPoly {
    type Output = GradedPoly;

    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;

    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;

    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if let Some(m) = ma.times(mb) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;

    fn neg(self) -> GradedPoly {
        self.scale(&int(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: GradedPoly) -> GradedPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GradedPoly {
    type Output = GradedPoly;

    fn neg(self) -> GradedPoly {
        -&self
    }
}

/// Shorthand for an integer multiple of a polynomial.
pub fn times(n: i64, p: &GradedPoly) -> GradedPoly {
    p.scale(&int(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> GradedPoly {
        GradedPoly::h()
    }

    fn k() -> GradedPoly {
        GradedPoly::k()
    }

    fn c(n: i64) -> GradedPoly {
        GradedPoly::constant(int(n))
    }

    #[test]
    fn binomial_square() {
        let a = &c(1) + &h();
        let expected = c(1) + times(2, &h()) + h().pow(2);
        assert_eq!(&a * &a, expected);
    }

    #[test]
    fn seventh_power_truncates() {
        let p = (&c(1) + &h()).pow(7);
        let expected = c(1) + times(7, &h()) + times(21, &h().pow(2)) + times(35, &h().pow(3));
        assert_eq!(p, expected);
    }

    #[test]
    fn degree_four_vanishes() {
        assert!((&h().pow(2) * &GradedPoly::c2()).is_zero());
        assert!((&GradedPoly::c3() * &k()).is_zero());
        assert!(GradedPoly::monomial(Monomial([4, 0, 0, 0]), int(5)).is_zero());
    }

    #[test]
    fn invert_total_chern_class() {
        let c2 = GradedPoly::c2();
        let c3 = GradedPoly::c3();
        let cx = c(1) - k() + c2.clone() - c3.clone();
        let expected =
            c(1) + k() + (k().pow(2) - c2.clone()) + (k().pow(3) - times(2, &(&k() * &c2)) + c3);
        assert_eq!(cx.invert_unit().unwrap(), expected);
    }

    #[test]
    fn invert_trivial_cases() {
        assert_eq!(c(1).invert_unit().unwrap(), c(1));
        let expected = c(1) - h() + h().pow(2) - h().pow(3);
        assert_eq!((c(1) + h()).invert_unit().unwrap(), expected);
    }

    #[test]
    fn invert_rejects_non_unit() {
        assert!(matches!((c(2) + h()).invert_unit(), Err(Error::NotUnit(_))));
        assert!(matches!(h().invert_unit(), Err(Error::NotUnit(_))));
    }

    #[test]
    fn display_is_canonical() {
        let p = times(35, &h().pow(3)) - GradedPoly::c3() + c(1);
        assert_eq!(p.to_string(), "35*h^3 - 1*c3 + 1");
        assert_eq!(GradedPoly::zero().to_string(), "0");
        let q = (&h() * &k()).scale(&crate::rational::ratio(-1, 2));
        assert_eq!(q.to_string(), "-1/2*h*k");
    }
}
