//! Chern classes of the normal bundle, twists, Schur classes, and the
//! reduction of degree-3 classes to the five invariants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::graded::{times, GradedPoly, Monomial};
use super::params::ParamExpr;

/// Total Chern class `1 - k + c2 + c3` of the threefold (`c1 = -k`).
pub fn tangent_total_chern() -> GradedPoly {
    GradedPoly::one() - GradedPoly::k() + GradedPoly::c2() + GradedPoly::c3()
}

/// Chern classes `(n1, n2, n3)` of the normal bundle in P⁶, from
/// `c(N) = (1+h)^7 / c(X)`.
///
/// `k·c2` stays a free monomial: `n3` carries `-2k·c2` where the relation
/// `k·c2 = -24` would give the familiar constant `+48`. Only
/// [`reduce_to_params`] applies that relation.
pub fn normal_chern() -> (GradedPoly, GradedPoly, GradedPoly) {
    let ambient = (GradedPoly::one() + GradedPoly::h()).pow(7);
    let inverse = tangent_total_chern()
        .invert_unit()
        .expect("total Chern class has constant term 1");
    let total = &ambient * &inverse;
    (total.component(1), total.component(2), total.component(3))
}

fn require_pure(p: &GradedPoly, degree: u32, what: &'static str) -> Result<()> {
    if p.is_pure(degree) {
        Ok(())
    } else {
        Err(Error::DegreeMismatch {
            what,
            expected: degree,
        })
    }
}

/// Chern classes of `E ⊗ L` for a rank-3 bundle `E` with classes
/// `(c1, c2, c3)` and a line bundle with first Chern class `l`.
pub fn twist_rank3(
    c1: &GradedPoly,
    c2: &GradedPoly,
    c3: &GradedPoly,
    l: &GradedPoly,
) -> Result<(GradedPoly, GradedPoly, GradedPoly)> {
    require_pure(c1, 1, "c1")?;
    require_pure(c2, 2, "c2")?;
    require_pure(c3, 3, "c3")?;
    require_pure(l, 1, "twisting class")?;
    let l2 = l * l;
    let t1 = c1 + &times(3, l);
    let t2 = c2 + &(&times(2, &(l * c1)) + &times(3, &l2));
    let t3 = c3 + &(&(l * c2) + &(&(&l2 * c1) + &(&l2 * l)));
    Ok((t1, t2, t3))
}

/// The six Schur classes of a rank-3 bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurClasses {
    pub s1: GradedPoly,
    pub s20: GradedPoly,
    pub s300: GradedPoly,
    pub s11: GradedPoly,
    pub s210: GradedPoly,
    pub s111: GradedPoly,
}

pub fn schur_values(c1: &GradedPoly, c2: &GradedPoly, c3: &GradedPoly) -> SchurClasses {
    let c1c2 = c1 * c2;
    SchurClasses {
        s1: c1.clone(),
        s20: c2.clone(),
        s300: c3.clone(),
        s11: &(c1 * c1) - c2,
        s210: &c1c2 - c3,
        s111: &(&c1.pow(3) - &times(2, &c1c2)) + c3,
    }
}

/// Schur classes of `N(-1)`, the normal bundle twisted down by `h`.
pub fn twisted_normal_schur() -> SchurClasses {
    let (n1, n2, n3) = normal_chern();
    let (a1, a2, a3) =
        twist_rank3(&n1, &n2, &n3, &-GradedPoly::h()).expect("normal classes are degree-pure");
    schur_values(&a1, &a2, &a3)
}

/// The seven canonical degree-3 monomials, in the order
/// `h³, h²k, hk², k³, h·c2, k·c2, c3`.
pub const BASIS3: [Monomial; 7] = [
    Monomial::H3,
    Monomial::H2K,
    Monomial::HK2,
    Monomial::K3,
    Monomial::HC2,
    Monomial::KC2,
    Monomial::C3,
];

/// Coordinates of a degree-3 class in [`BASIS3`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis3(pub [Rational; 7]);

impl Basis3 {
    /// Degree-3 component of `p`; lower-degree terms are ignored.
    pub fn of(p: &GradedPoly) -> Basis3 {
        Basis3(BASIS3.map(|m| p.coeff(m)))
    }

    /// Degree-3 component of `p`, rejecting nonzero lower-degree terms.
    pub fn of_homogeneous(p: &GradedPoly) -> Result<Basis3> {
        if !p.is_pure(3) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Self::of(p))
    }
}

/// Parameter values of the seven basic intersection numbers:
/// `h³ = d`, `h²k = -2d+δ`, `hk² = 3d-2δ+10χ-u`,
/// `k³ = -4d-24δ-120χ+12u+v`, `h·c2 = d-δ+2χ+u`, `k·c2 = -24`,
/// `c3 = 3d-10δ-64χ-2u+v-d²+48`.
pub fn substitution_table() -> [ParamExpr; 7] {
    let d2 = ParamExpr::d().pow(2);
    [
        ParamExpr::d(),
        ParamExpr::linear(0, [-2, 1, 0, 0, 0]),
        ParamExpr::linear(0, [3, -2, 10, -1, 0]),
        ParamExpr::linear(0, [-4, -24, -120, 12, 1]),
        ParamExpr::linear(0, [1, -1, 2, 1, 0]),
        ParamExpr::int(-24),
        ParamExpr::linear(48, [3, -10, -64, -2, 1]) - d2,
    ]
}

impl Basis3 {
    pub fn to_params(&self) -> ParamExpr {
        self.0
            .iter()
            .zip(substitution_table())
            .filter(|(c, _)| !c.is_zero())
            .fold(ParamExpr::zero(), |acc, (c, e)| &acc + &e.scale(c))
    }
}

/// Express a degree-3 class in terms of `(d, δ, χ, u, v)`.
pub fn reduce_to_params(p: &GradedPoly) -> Result<ParamExpr> {
    Ok(Basis3::of_homogeneous(p)?.to_params())
}
