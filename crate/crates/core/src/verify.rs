//! Identity suites. Each suite runs exhaustively over a stated domain and
//! collects failures instead of stopping at the first one.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{
    beta_sequence, canonical_beta_order, concat_words, fundamental_translation_word, length_ext,
    reduced_word_ext, shifted_beta, translation_word, AffineCoroot, ExtAffineElt,
};
use crate::error::Result;
use crate::genfun::{c_function, c_function_word, recursion_check_with};
use crate::lattice::{Coroot, Family, RootDatum, Weight};
use crate::macdonald::{
    cominuscule_indices, cominuscule_twist_check, e_infinity_reversed, e_infinity_word, e_zero, weyl_character,
};
use crate::poly::LaurentPoly;
use crate::qbg::{criterion_edge, lenart_edge_type_a, lenart_edge_type_c, QuantumBruhatGraph, TypeCClass};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub scope: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str, scope: String) -> SuiteReport {
        SuiteReport {
            name: name.into(),
            scope,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// Every anti-dominant weight with coordinates in `[min, 0]`.
pub fn anti_dominant_box(rank: usize, min: i64) -> Vec<Weight> {
    let mut out = vec![Weight::zero(rank)];
    for k in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (min..=0).map(move |a| {
                    let mut v = w.clone();
                    v.0[k] = a;
                    v
                })
            })
            .collect();
    }
    out.sort();
    out
}

fn nonneg(rep: &mut SuiteReport, what: &str, p: &LaurentPoly) {
    rep.record(p.is_nonnegative(), || format!("{what} has a negative coefficient: {p}"));
}

/// `C_{t_μ u}^w = x^μ C_u^w` for all `u ∈ W`, `μ = ±ω_k`, and `w` among the
/// simple affine reflections and the `t_{−ω_k}`.
pub fn shift_suite(graph: &QuantumBruhatGraph) -> Result<SuiteReport> {
    let datum = graph.datum();
    let n = datum.rank();
    let mut rep = SuiteReport::new("shift", datum.label());
    let mut ws: Vec<ExtAffineElt> = (0..=n)
        .map(|j| crate::affine::simple_affine_reflection(datum, j))
        .collect::<Result<_>>()?;
    for k in 0..n {
        ws.push(ExtAffineElt::translation(&-datum.fundamental_weight(k)));
    }
    for u in graph.group().elements() {
        let u = ExtAffineElt::finite(u);
        for w in &ws {
            let base = c_function(graph, &u, w)?;
            for k in 0..n {
                for sign in [1, -1] {
                    let mu = datum.fundamental_weight(k).scale(sign);
                    let lhs = c_function(graph, &ExtAffineElt::translation(&mu).multiply(&u), w)?;
                    rep.record(lhs == base.shift(&mu), || {
                        format!("u={u:?} μ={mu}: {lhs} vs shifted {base}")
                    });
                }
            }
        }
    }
    Ok(rep)
}

/// `C_u^{πw} = C_u^w`: with `t_λ = π · word`, compare the walk from
/// `u · t_λ` with the walk from `u · s_{i_1} ⋯ s_{i_l}` along the same β.
pub fn pi_invariance_suite(graph: &QuantumBruhatGraph, lambdas: &[Weight]) -> Result<SuiteReport> {
    let datum = graph.datum();
    let id = ExtAffineElt::identity(datum.rank());
    let mut rep = SuiteReport::new("pi-invariance", datum.label());
    for lam in lambdas {
        let (pi, word) = translation_word(datum, lam)?;
        for v in graph.group().elements() {
            let u = ExtAffineElt::finite(v);
            let with_pi = c_function_word(graph, &u, &pi, &word, false)?;
            let without = c_function_word(graph, &u, &id, &word, false)?;
            rep.record(with_pi == without, || {
                format!(
                    "λ={lam} u={}: C^(πw) = {with_pi}, C^w = {without}",
                    crate::weyl::format_word(&v.reduced_word(datum))
                )
            });
        }
    }
    Ok(rep)
}

/// `w → ws_γ` is an edge iff `w_0ws_γ → w_0w` is one, of the same kind.
pub fn w0_inversion_suite(graph: &QuantumBruhatGraph) -> SuiteReport {
    let group = graph.group();
    let w0 = group.longest();
    let mut rep = SuiteReport::new("w0-inversion", graph.datum().label());
    for v in 0..graph.num_vertices() {
        for c in 0..graph.datum().num_pos_roots() {
            let t = graph.target(v, c);
            let image = group.index_of(&w0.multiply(group.element(t))).expect("closed group");
            let here = graph.kind_at(v, c, false);
            let there = graph.kind_at(image, c, false);
            rep.record(here == there, || format!("vertex {v}, coroot {c}: {here:?} vs {there:?}"));
        }
    }
    rep
}

/// Explicit type A and C descriptions, and the rank-two obstruction
/// criterion, against the length-defined graph.
pub fn lenart_suite(graph: &QuantumBruhatGraph) -> Result<SuiteReport> {
    let datum = graph.datum();
    let n = datum.rank();
    let mut rep = SuiteReport::new("lenart", datum.label());
    for (v, w) in graph.group().elements().iter().enumerate() {
        match datum.family() {
            Family::A => {
                for i in 1..=n + 1 {
                    for j in i + 1..=n + 1 {
                        let c = datum.coroot_index(&crate::qbg::type_a_coroot(n, i, j)).expect("type A coroot");
                        let got = lenart_edge_type_a(datum, w, i, j)?;
                        let want = graph.kind_at(v, c, false);
                        rep.record(got == want, || format!("w={v} ({i},{j}): {got:?} vs {want:?}"));
                    }
                }
            }
            Family::C => {
                for class in TypeCClass::all(n) {
                    let c = datum.coroot_index(&class.coroot(n)).expect("type C coroot");
                    let got = lenart_edge_type_c(datum, w, class)?;
                    let want = graph.kind_at(v, c, false);
                    rep.record(got == want, || format!("w={v} {class:?}: {got:?} vs {want:?}"));
                }
            }
            _ => {}
        }
        for (c, gamma) in datum.pos_coroots().iter().enumerate() {
            let got = criterion_edge(datum, w, gamma)?;
            let want = graph.kind_at(v, c, false).is_some();
            rep.record(got == want, || format!("w={v} γ={gamma}: criterion {got}, graph {want}"));
        }
    }
    Ok(rep)
}

fn check_multiset(rep: &mut SuiteReport, datum: &RootDatum, i: usize, betas: &[AffineCoroot], tag: &str) {
    let omega = datum.fundamental_weight(i);
    let mut seen: HashMap<&Coroot, Vec<i64>> = HashMap::new();
    for b in betas {
        seen.entry(&b.re).or_default().push(b.deg);
    }
    let mut expected = 0;
    for c in datum.pos_coroots() {
        let gamma = -c;
        let a = -datum.pair(&gamma, &omega).unwrap();
        let mut degs = seen.remove(&gamma).unwrap_or_default();
        degs.sort();
        expected += a.max(0) as usize;
        let want: Vec<i64> = (1..=a).collect();
        rep.record(degs == want, || {
            format!("{tag} ω_{}: Re β = {gamma} has degrees {degs:?}, expected {want:?}", i + 1)
        });
    }
    rep.record(seen.is_empty() && betas.len() == expected, || {
        format!("{tag} ω_{}: stray real parts {:?}", i + 1, seen.keys().collect::<Vec<_>>())
    });
}

/// Running count of real part `−γ` among `betas[..=j]`.
fn prefix_count(betas: &[AffineCoroot], j: usize, gamma: &Coroot) -> usize {
    let neg = -gamma;
    betas[..=j].iter().filter(|b| b.re == neg).count()
}

fn check_corollary(rep: &mut SuiteReport, datum: &RootDatum, i: usize, betas: &[AffineCoroot]) {
    let pos = datum.pos_coroots();
    rep.record(
        betas.first() == Some(&AffineCoroot::new(-&datum.simple_coroot(i), 1)),
        || format!("ω_{}: first β is {:?}", i + 1, betas.first()),
    );
    for tau in pos {
        for eta in pos {
            let gamma = tau + eta;
            if !datum.is_coroot(&gamma) {
                continue;
            }
            for (j, b) in betas.iter().enumerate() {
                if b.re != -&gamma {
                    continue;
                }
                let lhs = prefix_count(betas, j, &gamma);
                let rhs = prefix_count(betas, j, tau) + prefix_count(betas, j, eta);
                rep.record(lhs == rhs, || {
                    format!("ω_{}: γ={gamma}=τ+η with τ={tau}, η={eta} at j={}: {lhs} vs {rhs}", i + 1, j + 1)
                });
            }
            let long = tau + &eta.scale(2);
            if !datum.is_coroot(&long) {
                continue;
            }
            let members = [eta.clone(), long.clone(), gamma.clone(), long.clone()];
            let other = [tau.clone(), gamma.clone(), long.clone()];
            let sub: Vec<Coroot> = betas
                .iter()
                .map(|b| -&b.re)
                .filter(|c| c == tau || c == eta || *c == gamma || *c == long)
                .collect();
            let mut k = 0;
            let mut ok = true;
            while k < sub.len() {
                let block: &[Coroot] = if sub[k] == *eta { &members } else { &other };
                if sub.len() < k + block.len() || sub[k..k + block.len()] != *block {
                    ok = false;
                    break;
                }
                k += block.len();
            }
            rep.record(ok, || {
                format!("ω_{}: τ={tau}, η={eta} subsequence {sub:?} is not made of the two blocks", i + 1)
            });
        }
    }
}

/// The first-coroot, prefix-count and two-block checks on one ordering of
/// the β-sequence of `t_{−ω_i}`.
pub fn order_report(datum: &RootDatum, i: usize, betas: &[AffineCoroot]) -> SuiteReport {
    let mut rep = SuiteReport::new("beta-order", datum.label());
    check_multiset(&mut rep, datum, i, betas, "given");
    check_corollary(&mut rep, datum, i, betas);
    rep
}

/// β-sequences of fundamental translations: the multiset of real parts and
/// degrees (for the canonical and the descent-stripping words), the first
/// coroot, the prefix-count additivity, the two-block pattern, and the
/// concatenation with `t_λ`.
pub fn beta_structure_suite(datum: &RootDatum) -> Result<SuiteReport> {
    let n = datum.rank();
    let mut rep = SuiteReport::new("beta-structure", datum.label());
    let mut lambdas: Vec<Weight> = (0..n).map(|k| -datum.fundamental_weight(k)).collect();
    lambdas.push(Weight(vec![-1; n]));
    for i in 0..n {
        let canonical = canonical_beta_order(datum, i, None)?;
        check_multiset(&mut rep, datum, i, &canonical, "canonical");
        let t = ExtAffineElt::translation(&-datum.fundamental_weight(i));
        let (_, greedy) = reduced_word_ext(datum, &t)?;
        check_multiset(&mut rep, datum, i, &beta_sequence(datum, &greedy)?, "greedy");
        check_corollary(&mut rep, datum, i, &canonical);

        let piece = fundamental_translation_word(datum, i)?;
        for lam in &lambdas {
            let tail = translation_word(datum, lam)?;
            let joined = concat_words(datum, &piece, &tail)?;
            let target = ExtAffineElt::translation(&(lam - &datum.fundamental_weight(i)));
            rep.record(
                joined.1.len() == length_ext(datum, &target),
                || format!("ω_{} then t_{lam}: word of length {} is not reduced", i + 1, joined.1.len()),
            );
            let betas = beta_sequence(datum, &joined.1)?;
            let head = shifted_beta(datum, i, lam)?;
            let rest = beta_sequence(datum, &tail.1)?;
            let split = head.len().min(betas.len());
            rep.record(betas[..split] == head[..] && betas[split..] == rest[..], || {
                format!("ω_{} then t_{lam}: concatenated β-sequence does not split", i + 1)
            });
        }
    }
    Ok(rep)
}

/// The recursion over `C_u^{t_{λ−ω_i}}` for all `u ∈ W`, all `i`, and each
/// given `λ`.
pub fn recursion_suite(graph: &QuantumBruhatGraph, lambdas: &[Weight]) -> Result<SuiteReport> {
    let datum = graph.datum();
    let parts: Vec<Result<SuiteReport>> = lambdas
        .par_iter()
        .map(|lam| {
            let mut rep = SuiteReport::default();
            let mut memo = HashMap::new();
            for u in graph.group().elements() {
                for i in 0..datum.rank() {
                    let r = recursion_check_with(graph, u, i, lam, &mut memo)?;
                    nonneg(&mut rep, "C_u^t", &r.lhs);
                    rep.record(r.equal, || {
                        format!(
                            "u={} i={} λ={lam}: lhs {} rhs {}",
                            crate::weyl::format_word(&u.reduced_word(datum)),
                            i + 1,
                            r.lhs,
                            r.rhs
                        )
                    });
                }
            }
            Ok(rep)
        })
        .collect();
    let mut rep = SuiteReport::new("recursion", datum.label());
    for p in parts {
        rep.merge(p?);
    }
    Ok(rep)
}

/// The two routes to `E_λ(x; q^{−1}, ∞)` agree.
pub fn dual_route_suite(graph: &QuantumBruhatGraph, lambdas: &[Weight]) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("dual-route", graph.datum().label());
    for lam in lambdas {
        let a = e_infinity_word(graph, lam)?;
        let b = e_infinity_reversed(graph, lam)?;
        nonneg(&mut rep, "E_inf", &a);
        rep.record(a == b, || format!("λ={lam}: word route {a}, reversed route {b}"));
    }
    Ok(rep)
}

/// The cominuscule twist for every cominuscule `i` and `m = 1..=max_m`.
pub fn cominuscule_suite(graph: &QuantumBruhatGraph, max_m: i64) -> Result<SuiteReport> {
    cominuscule_suite_for(graph, &cominuscule_indices(graph.datum()), max_m)
}

pub fn cominuscule_suite_for(graph: &QuantumBruhatGraph, indices: &[usize], max_m: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("cominuscule", graph.datum().label());
    for &i in indices {
        for m in 1..=max_m {
            let c = cominuscule_twist_check(graph, i, m)?;
            nonneg(&mut rep, "E_0", &c.e_zero);
            nonneg(&mut rep, "E_inf", &c.e_infinity);
            rep.record(c.holds, || {
                format!("i={} m={m}: twisted {} vs {}", i + 1, c.twisted, c.e_infinity)
            });
        }
    }
    Ok(rep)
}

/// Every coefficient of `E_λ(x;q,0)`, `E_λ(x;q^{−1},∞)` and `C_σ^{t_λ}` is
/// a non-negative integer.
pub fn nonnegativity_suite(graph: &QuantumBruhatGraph, lambdas: &[Weight]) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("nonnegativity", graph.datum().label());
    for lam in lambdas {
        nonneg(&mut rep, "E_0", &e_zero(graph, lam)?);
        nonneg(&mut rep, "E_inf", &e_infinity_word(graph, lam)?);
        for s in graph.group().elements() {
            nonneg(&mut rep, "C_σ^t", &weyl_character(graph, s, lam)?);
        }
    }
    Ok(rep)
}

/// The suites run by default, on small types with `λ` in `[−1, 0]^n`.
pub fn default_suites(graph: &QuantumBruhatGraph) -> Result<Vec<SuiteReport>> {
    let lambdas = anti_dominant_box(graph.datum().rank(), -1);
    Ok(vec![
        shift_suite(graph)?,
        recursion_suite(graph, &lambdas)?,
        w0_inversion_suite(graph),
        lenart_suite(graph)?,
        beta_structure_suite(graph.datum())?,
        dual_route_suite(graph, &lambdas)?,
        cominuscule_suite(graph, 2)?,
        nonnegativity_suite(graph, &lambdas)?,
    ])
}
