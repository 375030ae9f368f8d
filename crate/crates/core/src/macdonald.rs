//! Specializations of nonsymmetric Macdonald polynomials, characters and
//! dimensions of generalized Weyl modules, and the cominuscule twist.

use serde::Serialize;

use crate::affine::{translation_word, ExtAffineElt};
use crate::error::{Error, Result};
use crate::genfun::{c_function_word, c_translation, w0_twist};
use crate::lattice::{dot, Weight};
use crate::paths::PathProblem;
use crate::poly::LaurentPoly;
use crate::qbg::QuantumBruhatGraph;
use crate::weyl::WeylElt;

fn check(graph: &QuantumBruhatGraph, lambda: &Weight) -> Result<()> {
    let n = graph.datum().rank();
    if lambda.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: lambda.rank(),
        });
    }
    if !lambda.is_anti_dominant() {
        return Err(Error::NotAntiDominant(lambda.0.clone()));
    }
    Ok(())
}

/// `E_λ(x; q, 0) = C_id^{t_λ}`.
pub fn e_zero(graph: &QuantumBruhatGraph, lambda: &Weight) -> Result<LaurentPoly> {
    check(graph, lambda)?;
    c_translation(graph, &ExtAffineElt::identity(lambda.rank()), lambda)
}

/// `E_λ(x; q^{−1}, ∞)` as `w_0 C_{w_0}^{t_λ}`.
pub fn e_infinity_word(graph: &QuantumBruhatGraph, lambda: &Weight) -> Result<LaurentPoly> {
    check(graph, lambda)?;
    let (pi, word) = translation_word(graph.datum(), lambda)?;
    let w0 = ExtAffineElt::finite(graph.group().longest());
    Ok(w0_twist(graph, &c_function_word(graph, &w0, &pi, &word, false)?))
}

/// `E_λ(x; q^{−1}, ∞)` as a sum over paths from `t_λ` in the reversed graph.
pub fn e_infinity_reversed(graph: &QuantumBruhatGraph, lambda: &Weight) -> Result<LaurentPoly> {
    check(graph, lambda)?;
    let (pi, word) = translation_word(graph.datum(), lambda)?;
    c_function_word(graph, &ExtAffineElt::identity(lambda.rank()), &pi, &word, true)
}

/// Both routes to `E_λ(x; q^{−1}, ∞)`; fails if they differ.
pub fn e_infinity(graph: &QuantumBruhatGraph, lambda: &Weight) -> Result<LaurentPoly> {
    let word = e_infinity_word(graph, lambda)?;
    let reversed = e_infinity_reversed(graph, lambda)?;
    if word != reversed {
        return Err(Error::RouteMismatch {
            word: word.to_string(),
            reversed: reversed.to_string(),
        });
    }
    Ok(word)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializationReport {
    pub lambda: Weight,
    pub e_zero: LaurentPoly,
    pub e_inf_word: LaurentPoly,
    pub e_inf_reversed: LaurentPoly,
    pub agree: bool,
}

pub fn specialization_report(graph: &QuantumBruhatGraph, lambda: &Weight) -> Result<SpecializationReport> {
    let e_inf_word = e_infinity_word(graph, lambda)?;
    let e_inf_reversed = e_infinity_reversed(graph, lambda)?;
    Ok(SpecializationReport {
        lambda: lambda.clone(),
        e_zero: e_zero(graph, lambda)?,
        agree: e_inf_word == e_inf_reversed,
        e_inf_word,
        e_inf_reversed,
    })
}

/// `ch W_{σ(λ)} = C_σ^{t_λ}`.
pub fn weyl_character(graph: &QuantumBruhatGraph, sigma: &WeylElt, lambda: &Weight) -> Result<LaurentPoly> {
    check(graph, lambda)?;
    c_translation(graph, &ExtAffineElt::finite(sigma), lambda)
}

pub fn weyl_dimension(graph: &QuantumBruhatGraph, sigma: &WeylElt, lambda: &Weight) -> Result<i64> {
    Ok(weyl_character(graph, sigma, lambda)?.evaluate())
}

/// Number of quantum alcove paths of type `t_{−ω_i}` from the identity.
pub fn fundamental_dim(graph: &QuantumBruhatGraph, i: usize) -> Result<u128> {
    let datum = graph.datum();
    if i >= datum.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: datum.rank(),
        });
    }
    let lambda = -datum.fundamental_weight(i);
    let (pi, word) = translation_word(datum, &lambda)?;
    let t = crate::affine::word_element(datum, &pi, &word)?;
    let betas = crate::affine::beta_sequence(datum, &word)?;
    Ok(PathProblem::new(graph, &t, &betas, false)?.count())
}

/// `dim V(λ)` for dominant `λ`, by the Weyl dimension formula.
pub fn weyl_dimension_formula(datum: &crate::lattice::RootDatum, lambda: &Weight) -> Result<u128> {
    if !lambda.is_dominant() {
        return Err(Error::Convention(format!("{lambda} is not dominant")));
    }
    let (mut num, mut den) = (1u128, 1u128);
    for c in datum.pos_coroots() {
        let rho: i64 = c.coords().iter().sum();
        num *= (dot(&c.0, &lambda.0) + rho) as u128;
        den *= rho as u128;
    }
    Ok(num / den)
}

/// Indices `i` with `α_i` of coefficient one in the highest root.
pub fn cominuscule_indices(datum: &crate::lattice::RootDatum) -> Vec<usize> {
    let theta = datum.highest_root();
    (0..datum.rank()).filter(|&i| theta[i] == 1).collect()
}

/// Which extreme weight of `E_{−mω_i}(x; q, 0)` the twist measures from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    /// `β = μ + mω_i`, measured up from the anti-dominant extreme.
    AntiDominant,
    /// `β = mω_i − μ`, measured down from the dominant extreme.
    Dominant,
}

/// Multiply the coefficient of `x^μ` by `q^{c_i(β)}`, where `c_i(β)` is the
/// `α_i`-coordinate of `β` and `β` is read off `μ` per `anchor`.
pub fn cominuscule_twist(
    graph: &QuantumBruhatGraph,
    p: &LaurentPoly,
    i: usize,
    m: i64,
    anchor: Anchor,
) -> Result<LaurentPoly> {
    let datum = graph.datum();
    let top = datum.fundamental_weight(i).scale(m);
    let mut bad = None;
    let out = p.map_terms(|mu, k| {
        let beta = match anchor {
            Anchor::AntiDominant => mu + &top,
            Anchor::Dominant => &top - mu,
        };
        match datum.weight_to_root(&beta) {
            Some(r) => (mu.clone(), k + r[i]),
            None => {
                bad = Some(beta);
                (mu.clone(), k)
            }
        }
    });
    match bad {
        Some(b) => Err(Error::Convention(format!("{b} is not in the root lattice"))),
        None => Ok(out),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistCheck {
    pub e_zero: LaurentPoly,
    pub twisted: LaurentPoly,
    pub e_infinity: LaurentPoly,
    pub holds: bool,
}

/// Twist `E_{−mω_i}(x; q, 0)` from the anti-dominant extreme and compare
/// with `E_{−mω_i}(x; q^{−1}, ∞)`.
pub fn cominuscule_twist_check(graph: &QuantumBruhatGraph, i: usize, m: i64) -> Result<TwistCheck> {
    cominuscule_twist_check_anchored(graph, i, m, Anchor::AntiDominant)
}

pub fn cominuscule_twist_check_anchored(
    graph: &QuantumBruhatGraph,
    i: usize,
    m: i64,
    anchor: Anchor,
) -> Result<TwistCheck> {
    let datum = graph.datum();
    if i >= datum.rank() || !cominuscule_indices(datum).contains(&i) {
        return Err(Error::NotCominuscule(i + 1));
    }
    if m < 1 {
        return Err(Error::Convention(format!("twist multiple must be positive, got {m}")));
    }
    let lambda = -datum.fundamental_weight(i).scale(m);
    let a = e_zero(graph, &lambda)?;
    let twisted = cominuscule_twist(graph, &a, i, m, anchor)?;
    let b = e_infinity(graph, &lambda)?;
    Ok(TwistCheck {
        holds: twisted == b,
        e_zero: a,
        twisted,
        e_infinity: b,
    })
}
