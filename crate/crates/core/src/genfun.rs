//! The generating function
//! `C_u^w(x, q) = Σ_{p ∈ 𝒬ℬ(u, w)} x^{wt(end p)} q^{deg qwt(p)}`
//! and the recursion over fundamental translations.

use std::collections::HashMap;

use crate::affine::{
    beta_sequence, reduced_word_ext, shifted_beta, translation_word, word_element, ExtAffineElt,
};
use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::paths::{AlcovePath, PathProblem};
use crate::poly::LaurentPoly;
use crate::qbg::QuantumBruhatGraph;
use crate::weyl::WeylElt;

fn terms_to_poly(rank: usize, terms: HashMap<(Weight, i64), i64>) -> LaurentPoly {
    LaurentPoly::from_terms(rank, terms)
}

/// `C_u^w` with `w = π · s_{i_1} ⋯ s_{i_l}` given explicitly. The walk
/// starts at `z_0 = u · w` and folds along `β(s_{i_1} ⋯ s_{i_l})`;
/// `reversed` switches to the reversed quantum Bruhat graph.
pub fn c_function_word(
    graph: &QuantumBruhatGraph,
    u: &ExtAffineElt,
    pi: &ExtAffineElt,
    word: &[usize],
    reversed: bool,
) -> Result<LaurentPoly> {
    let datum = graph.datum();
    let w = word_element(datum, pi, word)?;
    let betas = beta_sequence(datum, word)?;
    let problem = PathProblem::new(graph, &u.multiply(&w), &betas, reversed)?;
    Ok(terms_to_poly(datum.rank(), problem.generating_terms()))
}

/// `C_u^w`, reading a reduced word off `w`.
pub fn c_function(graph: &QuantumBruhatGraph, u: &ExtAffineElt, w: &ExtAffineElt) -> Result<LaurentPoly> {
    let (pi, word) = reduced_word_ext(graph.datum(), w)?;
    c_function_word(graph, u, &pi, &word, false)
}

/// `C_u^{t_λ}` through the canonical word of `t_λ`.
pub fn c_translation(graph: &QuantumBruhatGraph, u: &ExtAffineElt, lambda: &Weight) -> Result<LaurentPoly> {
    let (pi, word) = translation_word(graph.datum(), lambda)?;
    c_function_word(graph, u, &pi, &word, false)
}

/// A path of type `β̄^{i,λ}` with its contribution `q^{deg qwt}` and end.
#[derive(Clone, Debug)]
pub struct TypedPath {
    pub path: AlcovePath,
    pub qdeg: i64,
    pub end: ExtAffineElt,
}

/// `𝒬ℬ(u, λ, β̄^{i,λ})`: paths from `u · t_{λ−ω_i}` of type
/// `β^i_j + ⟨Re β^i_j, λ⟩δ`.
pub fn c_function_typed(
    graph: &QuantumBruhatGraph,
    u: &ExtAffineElt,
    i: usize,
    lambda: &Weight,
) -> Result<Vec<TypedPath>> {
    let datum = graph.datum();
    if !lambda.is_anti_dominant() {
        return Err(Error::NotAntiDominant(lambda.0.clone()));
    }
    let betas = shifted_beta(datum, i, lambda)?;
    let target = lambda - &datum.fundamental_weight(i);
    let z0 = u.multiply(&ExtAffineElt::translation(&target));
    let problem = PathProblem::new(graph, &z0, &betas, false)?;
    Ok(problem
        .enumerate()
        .map(|p| TypedPath {
            qdeg: p.qdeg,
            end: ExtAffineElt::new(p.end_wt.clone(), problem.end_dir(&p).clone()),
            path: p,
        })
        .collect())
}

/// Both sides of
/// `C_u^{t_{λ−ω_i}} = Σ_p q^{deg qwt(p)} C^{t_λ}_{dir(end p)} x^{wt(end p) − dir(end p)λ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionCheck {
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub equal: bool,
}

pub fn recursion_check(graph: &QuantumBruhatGraph, u: &WeylElt, i: usize, lambda: &Weight) -> Result<RecursionCheck> {
    let mut memo: HashMap<usize, LaurentPoly> = HashMap::new();
    recursion_check_with(graph, u, i, lambda, &mut memo)
}

/// As [`recursion_check`], sharing the inner `C^{t_λ}_v` across calls with
/// the same `λ` through `memo` (keyed by the index of `v`).
pub fn recursion_check_with(
    graph: &QuantumBruhatGraph,
    u: &WeylElt,
    i: usize,
    lambda: &Weight,
    memo: &mut HashMap<usize, LaurentPoly>,
) -> Result<RecursionCheck> {
    let datum = graph.datum();
    let u_ext = ExtAffineElt::finite(u);
    let lhs = c_translation(graph, &u_ext, &(lambda - &datum.fundamental_weight(i)))?;
    let mut rhs = LaurentPoly::zero(datum.rank());
    for tp in c_function_typed(graph, &u_ext, i, lambda)? {
        let dir = &tp.end.dir;
        let inner = match memo.get(&tp.path.end_dir) {
            Some(p) => p.clone(),
            None => {
                let p = c_translation(graph, &ExtAffineElt::finite(dir), lambda)?;
                memo.insert(tp.path.end_dir, p.clone());
                p
            }
        };
        let correction = &tp.end.wt - &dir.act_weight(lambda);
        let term = inner.map_terms(|m, k| (m + &correction, k + tp.qdeg));
        rhs = &rhs + &term;
    }
    let equal = lhs == rhs;
    Ok(RecursionCheck { lhs, rhs, equal })
}

/// `x^μ · p`.
pub fn shift(p: &LaurentPoly, mu: &Weight) -> LaurentPoly {
    p.shift(mu)
}

/// `x^ν ↦ x^{w_0 ν}`.
pub fn w0_twist(graph: &QuantumBruhatGraph, p: &LaurentPoly) -> LaurentPoly {
    p.act(graph.group().longest())
}

/// Sum of coefficients.
pub fn evaluate(p: &LaurentPoly) -> i64 {
    p.evaluate()
}
