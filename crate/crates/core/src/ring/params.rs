//! Polynomials with rational coefficients in the five invariants
//! `d, δ, χ, u, v`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{int, Rational};

use super::graded::write_terms;

/// The five free invariants, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    D,
    Delta,
    Chi,
    U,
    V,
}

impl Param {
    pub const ALL: [Param; 5] = [Param::D, Param::Delta, Param::Chi, Param::U, Param::V];

    pub fn symbol(self) -> &'static str {
        match self {
            Param::D => "d",
            Param::Delta => "δ",
            Param::Chi => "χ",
            Param::U => "u",
            Param::V => "v",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponents over `(d, δ, χ, u, v)`, ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamMonomial(pub [u16; 5]);

impl ParamMonomial {
    pub const ONE: ParamMonomial = ParamMonomial([0; 5]);

    pub fn of(p: Param) -> Self {
        let mut e = [0; 5];
        e[p.index()] = 1;
        ParamMonomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn times(&self, other: &ParamMonomial) -> ParamMonomial {
        let mut e = [0; 5];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i] + other.0[i];
        }
        ParamMonomial(e)
    }

    fn eval(&self, point: &[Rational; 5]) -> Rational {
        let mut acc = Rational::one();
        for (x, &e) in point.iter().zip(&self.0) {
            for _ in 0..e {
                acc *= x;
            }
        }
        acc
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, &e) in Param::ALL.iter().zip(&self.0) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(p.symbol())?;
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

/// Rational polynomial in the invariants. Equality is coefficientwise.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamExpr {
    terms: BTreeMap<ParamMonomial, Rational>,
}

impl ParamExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(ParamMonomial::ONE, c);
        e
    }

    pub fn int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(p: Param) -> Self {
        let mut e = Self::zero();
        e.add_term(ParamMonomial::of(p), int(1));
        e
    }

    pub fn d() -> Self {
        Self::var(Param::D)
    }

    pub fn delta() -> Self {
        Self::var(Param::Delta)
    }

    pub fn chi() -> Self {
        Self::var(Param::Chi)
    }

    pub fn u() -> Self {
        Self::var(Param::U)
    }

    pub fn v() -> Self {
        Self::var(Param::V)
    }

    /// Integer linear combination `c + Σ aᵢ·pᵢ`.
    pub fn linear(constant: i64, coeffs: [i64; 5]) -> Self {
        let mut e = Self::int(constant);
        for (p, a) in Param::ALL.iter().zip(coeffs) {
            e.add_term(ParamMonomial::of(*p), int(a));
        }
        e
    }

    fn add_term(&mut self, m: ParamMonomial, c: Rational) {
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

    pub fn coeff(&self, m: ParamMonomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> ParamExpr {
        if c.is_zero() {
            return Self::zero();
        }
        ParamExpr {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> ParamExpr {
        (0..n).fold(Self::int(1), |acc, _| &acc * self)
    }

    /// Value at `(d, δ, χ, u, v)`.
    pub fn eval(&self, point: &[Rational; 5]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * m.eval(point))
            .fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for ParamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(m, c)| (m.to_string(), c)))
    }
}

impl Add for &ParamExpr {
    type Output = ParamExpr;

    fn add(self, rhs: &ParamExpr) -> ParamExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &ParamExpr {
    type Output = ParamExpr;

    fn sub(self, rhs: &ParamExpr) -> ParamExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &ParamExpr {
    type Output = ParamExpr;

    fn mul(self, rhs: &ParamExpr) -> ParamExpr {
        let mut out = ParamExpr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParamExpr {
    type Output = ParamExpr;

    fn neg(self) -> ParamExpr {
        self.scale(&int(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for ParamExpr {
            type Output = ParamExpr;
            fn $method(self, rhs: ParamExpr) -> ParamExpr {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ParamExpr {
    type Output = ParamExpr;

    fn neg(self) -> ParamExpr {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_builder_and_display() {
        let e = ParamExpr::linear(24, [4, -3, -30, -3, 1]) - ParamExpr::d().pow(2);
        assert_eq!(e.to_string(), "-1*d^2 + 4*d - 3*δ - 30*χ - 3*u + 1*v + 24");
    }

    #[test]
    fn eval_matches_hand_computation() {
        let e = &ParamExpr::d().pow(2) - &(&ParamExpr::delta() * &ParamExpr::v());
        let point = [int(3), int(2), int(0), int(0), int(5)];
        assert_eq!(e.eval(&point), int(-1));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let e = &ParamExpr::chi() - &ParamExpr::chi();
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
    }
}
