//! Sign formulas expressing `sign(w)` through the tableaux of `w`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{permutation_sign, SignedPermutation};
use crate::harness::{self, RunConfig, VerificationReport};
use crate::rs_maps::{g_infinity, g_r};
use crate::young::{parity_sign, rs};

/// The right-hand side `(-1)^d · (-1)^{spin(P)+spin(Q)} · sign(P) · sign(Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignFormulaRhs {
    pub d: usize,
    pub twice_spin_sum: usize,
    pub sign_p: i8,
    pub sign_q: i8,
    pub value: i8,
}

impl SignFormulaRhs {
    fn assemble(d: usize, twice_spin_sum: usize, sign_p: i8, sign_q: i8) -> Self {
        debug_assert!(twice_spin_sum.is_multiple_of(2));
        let value = parity_sign(d) * parity_sign(twice_spin_sum / 2) * sign_p * sign_q;
        SignFormulaRhs {
            d,
            twice_spin_sum,
            sign_p,
            sign_q,
            value,
        }
    }
}

/// The formula evaluated on `G_r(w)`.
pub fn rhs_main(w: &SignedPermutation, r: usize) -> SignFormulaRhs {
    let (p, q) = g_r(w, r);
    SignFormulaRhs::assemble(
        p.d_statistic(),
        p.vertical_count() + q.vertical_count(),
        p.sign(),
        q.sign(),
    )
}

/// The formula on `G_∞(w)`, with `d` replaced by the even-row count `e`.
pub fn rhs_g_infinity(w: &SignedPermutation) -> SignFormulaRhs {
    let (p, q) = g_infinity(w);
    SignFormulaRhs::assemble(
        p.e_statistic(),
        p.twice_spin() + q.twice_spin(),
        p.sign(),
        q.sign(),
    )
}

/// `(-1)^e · sign(P) · sign(Q)` for a permutation of `1..=n` under RS.
pub fn rhs_type_a(perm: &[u32]) -> i8 {
    let (p, q) = rs(perm);
    parity_sign(p.shape().even_row_sum()) * p.sign() * q.sign()
}

pub fn type_a_law_holds(perm: &[u32]) -> bool {
    permutation_sign(perm) == rhs_type_a(perm)
}

pub fn main_law_holds(w: &SignedPermutation, r: usize) -> bool {
    w.sign() == rhs_main(w, r).value
}

pub fn g_infinity_law_holds(w: &SignedPermutation) -> bool {
    w.sign() == rhs_g_infinity(w).value
}

/// For an involution `i` with `G_r(i) = (P, P)`: `sign(i) = (-1)^{d(P) + 2 spin(P)}`.
pub fn involution_rhs(i: &SignedPermutation, r: usize) -> Result<i8> {
    if !i.is_involution() {
        return Err(Error::PreconditionViolated(format!(
            "{i} is not an involution"
        )));
    }
    let (p, q) = g_r(i, r);
    if p != q {
        return Err(Error::PreconditionViolated(format!(
            "tableaux of the involution {i} differ at rank {r}"
        )));
    }
    Ok(parity_sign(p.d_statistic() + p.vertical_count()))
}

/// `(-1)^{ℓ(v) + ℓ(w)}`, the value of the Möbius function on comparable pairs.
pub fn mobius_parity(v: &SignedPermutation, w: &SignedPermutation) -> i8 {
    v.sign() * w.sign()
}

/// For `x, y` with a common left tableau, `x', y'` with a common left
/// tableau, `x, x'` with a common right tableau and `y, y'` likewise:
/// whether `μ(x, y)` and `μ(x', y')` have the same parity.
pub fn corollary_check(
    x: &SignedPermutation,
    y: &SignedPermutation,
    x2: &SignedPermutation,
    y2: &SignedPermutation,
    r: usize,
) -> Result<bool> {
    let [gx, gy, gx2, gy2] = [x, y, x2, y2].map(|w| g_r(w, r));
    let agreements = [
        (gx.0 == gy.0, "left tableaux of x and y"),
        (gx2.0 == gy2.0, "left tableaux of x' and y'"),
        (gx.1 == gx2.1, "right tableaux of x and x'"),
        (gy.1 == gy2.1, "right tableaux of y and y'"),
    ];
    if let Some((_, what)) = agreements.iter().find(|(ok, _)| !ok) {
        return Err(Error::PreconditionViolated(format!("{what} differ")));
    }
    Ok(mobius_parity(x, y) == mobius_parity(x2, y2))
}

fn verify(suite: &str, n: usize, rank: Option<usize>) -> Result<VerificationReport> {
    let mut config = RunConfig::new(suite, n);
    config.ranks = rank.into_iter().collect();
    harness::run(&config)
}

/// Exhaustive check of the main law over `H_n` at rank `r`.
pub fn verify_main(n: usize, r: usize) -> Result<VerificationReport> {
    verify("main", n, Some(r))
}

pub fn verify_type_a(n: usize) -> Result<VerificationReport> {
    verify("typeA", n, None)
}

pub fn verify_g_infinity(n: usize) -> Result<VerificationReport> {
    verify("ginf", n, None)
}

pub fn verify_color_to_spin(n: usize, r: usize) -> Result<VerificationReport> {
    verify("tc", n, Some(r))
}

pub fn verify_involution_lemma(n: usize, r: usize) -> Result<VerificationReport> {
    verify("involution", n, Some(r))
}
