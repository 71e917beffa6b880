//! Independent oracle: smooth complete intersections in P⁶ with split
//! normal bundle `O(a1) ⊕ O(a2) ⊕ O(a3)`. Every class is a multiple of a
//! power of `h`, so Chern numbers come from one-variable polynomials
//! truncated at `h³` with `h³ = d`.

#![allow(dead_code)]

/// Coefficients of `1, h, h², h³`.
type Poly = [i64; 4];

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = [0; 4];
    for i in 0..4 {
        for j in 0..4 - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

fn inv(a: &Poly) -> Poly {
    assert_eq!(a[0], 1);
    let mut out = [1, 0, 0, 0];
    for n in 1..4 {
        out[n] = -(1..=n).map(|i| a[i] * out[n - i]).sum::<i64>();
    }
    out
}

fn one_plus(a: i64) -> Poly {
    [1, a, 0, 0]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitExpected {
    pub tuple: [i64; 5],
    pub h3: i64,
    pub h2k: i64,
    pub hk2: i64,
    pub k3: i64,
    pub hc2: i64,
    pub kc2: i64,
    pub c3: i64,
    pub n3: i64,
    pub ks2: i64,
    pub c2s: i64,
    /// s1·h², s20·h, s11·h, s300, s210, s111 of N(-1).
    pub schur: [i64; 6],
}

/// Complete intersection of multidegree `a` in P⁶.
pub fn complete_intersection(a: [i64; 3]) -> SplitExpected {
    let d: i64 = a.iter().product();
    let ambient = (0..7).fold([1, 0, 0, 0], |acc, _| mul(&acc, &one_plus(1)));
    let normal = a
        .iter()
        .fold([1, 0, 0, 0], |acc, &ai| mul(&acc, &one_plus(ai)));
    let cx = mul(&ambient, &inv(&normal));
    let m = -cx[1]; // K = m·H
    let cs = mul(&cx, &inv(&one_plus(1)));
    let ks2 = (m + 1) * (m + 1) * d;
    let c2s = cs[2] * d;
    assert_eq!((ks2 + c2s) % 12, 0);
    let chi = (ks2 + c2s) / 12;
    let u = c2s - 2 * chi;
    let delta = (m + 2) * d;
    let b: Vec<i64> = a.iter().map(|x| x - 1).collect();
    let e1 = b[0] + b[1] + b[2];
    let e2 = b[0] * b[1] + b[0] * b[2] + b[1] * b[2];
    let e3 = b[0] * b[1] * b[2];
    let v = e1 * e1 * e1 * d;
    SplitExpected {
        tuple: [d, delta, chi, u, v],
        h3: d,
        h2k: m * d,
        hk2: m * m * d,
        k3: m * m * m * d,
        hc2: cx[2] * d,
        kc2: m * cx[2] * d,
        c3: cx[3] * d,
        n3: normal[3] * d,
        ks2,
        c2s,
        schur: [
            e1 * d,
            e2 * d,
            (e1 * e1 - e2) * d,
            e3 * d,
            (e1 * e2 - e3) * d,
            (e1 * e1 * e1 - 2 * e1 * e2 + e3) * d,
        ],
    }
}

/// Fano complete intersections (rationally connected, so `k·c2 = -24`).
pub const FANO_TYPES: [[i64; 3]; 7] = [
    [1, 1, 1],
    [2, 1, 1],
    [2, 2, 1],
    [3, 1, 1],
    [2, 2, 2],
    [3, 2, 1],
    [4, 1, 1],
];
