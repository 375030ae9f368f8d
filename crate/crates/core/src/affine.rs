//! The extended affine Weyl group `W^e = W ⋉ X` and β-sequences.
//!
//! Elements are kept in the canonical form `t_wt · dir`. Affine coroots are
//! `γ + Nδ` with `γ ∈ Δ^∨`, and `t_λ(γ + Nδ) = γ + (N − ⟨γ, λ⟩)δ`.
//!
//! Affine words use letters `0..=rank`: letter `0` is `s_0`, the reflection
//! in `−θ̃ + δ` with `θ̃` the highest coroot, and letter `k ≥ 1` is the finite
//! simple reflection `s_k`. This matches the 1-based node numbering used in
//! finite words.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{dot, Coroot, RootDatum, Weight};
use crate::weyl::{format_word, parse_word, WeylElt};

/// `re + deg·δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineCoroot {
    pub re: Coroot,
    pub deg: i64,
}

impl AffineCoroot {
    pub fn new(re: Coroot, deg: i64) -> AffineCoroot {
        AffineCoroot { re, deg }
    }

    /// The simple affine coroot `α_j^∨`; `j = 0` gives `−θ̃ + δ`.
    pub fn simple(datum: &RootDatum, j: usize) -> AffineCoroot {
        if j == 0 {
            AffineCoroot::new(-datum.highest_dual_root(), 1)
        } else {
            AffineCoroot::new(datum.simple_coroot(j - 1), 0)
        }
    }

    /// Positive iff `deg > 0`, or `deg = 0` and `re` is a positive coroot.
    pub fn is_positive(&self) -> bool {
        self.deg > 0 || (self.deg == 0 && self.re.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        !self.re.is_zero() && !self.is_positive()
    }

    /// `self + k·δ`.
    pub fn shift(&self, k: i64) -> AffineCoroot {
        AffineCoroot::new(self.re.clone(), self.deg + k)
    }

    /// Index of `self` among the simple affine coroots, if it is one.
    pub fn simple_index(&self, datum: &RootDatum) -> Option<usize> {
        (0..=datum.rank()).find(|&j| *self == AffineCoroot::simple(datum, j))
    }
}

impl std::ops::Neg for &AffineCoroot {
    type Output = AffineCoroot;
    fn neg(self) -> AffineCoroot {
        AffineCoroot::new(-&self.re, -self.deg)
    }
}

impl fmt::Display for AffineCoroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}δ", self.re, self.deg)
    }
}

/// `t_wt · dir`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtAffineElt {
    pub wt: Weight,
    pub dir: WeylElt,
}

impl ExtAffineElt {
    pub fn identity(rank: usize) -> ExtAffineElt {
        ExtAffineElt {
            wt: Weight::zero(rank),
            dir: WeylElt::identity(rank),
        }
    }

    pub fn translation(lambda: &Weight) -> ExtAffineElt {
        ExtAffineElt {
            wt: lambda.clone(),
            dir: WeylElt::identity(lambda.rank()),
        }
    }

    pub fn finite(w: &WeylElt) -> ExtAffineElt {
        ExtAffineElt {
            wt: Weight::zero(w.rank()),
            dir: w.clone(),
        }
    }

    pub fn new(wt: Weight, dir: WeylElt) -> ExtAffineElt {
        ExtAffineElt { wt, dir }
    }

    pub fn is_identity(&self) -> bool {
        self.wt.is_zero() && self.dir.is_identity()
    }

    /// `(t_μ u)(t_ν v) = t_{μ + u(ν)} uv`.
    pub fn multiply(&self, other: &ExtAffineElt) -> ExtAffineElt {
        ExtAffineElt {
            wt: &self.wt + &self.dir.act_weight(&other.wt),
            dir: self.dir.multiply(&other.dir),
        }
    }

    /// `(t_μ u)⁻¹ = t_{−u⁻¹μ} u⁻¹`.
    pub fn inverse(&self) -> ExtAffineElt {
        let inv = self.dir.inverse();
        ExtAffineElt {
            wt: -inv.act_weight(&self.wt),
            dir: inv,
        }
    }

    /// Action on `γ + mδ`: `dir` first, then `t_wt`.
    pub fn act(&self, beta: &AffineCoroot) -> AffineCoroot {
        let re = self.dir.act_coroot(&beta.re);
        let deg = beta.deg - dot(&re.0, &self.wt.0);
        AffineCoroot { re, deg }
    }

    /// Like [`ExtAffineElt::act`], but rejects real parts outside `Δ^∨`.
    pub fn act_checked(&self, datum: &RootDatum, beta: &AffineCoroot) -> Result<AffineCoroot> {
        if !datum.is_coroot(&beta.re) {
            return Err(Error::NotACoroot(beta.re.0.clone()));
        }
        Ok(self.act(beta))
    }
}

/// `s_{γ+Nδ} = t_{−N·α} s_γ`, where `α` is the root with coroot `γ`, written
/// as a weight.
pub fn affine_reflection(datum: &RootDatum, beta: &AffineCoroot) -> Result<ExtAffineElt> {
    if beta.re.is_zero() {
        return Err(Error::ZeroRealPart);
    }
    let root = datum.root_of(&beta.re)?;
    let rw = datum.root_to_weight(&root);
    Ok(ExtAffineElt {
        wt: rw.scale(-beta.deg),
        dir: WeylElt::reflection_of(datum, &beta.re)?,
    })
}

/// The simple affine reflection for letter `j ∈ 0..=rank`.
pub fn simple_affine_reflection(datum: &RootDatum, j: usize) -> Result<ExtAffineElt> {
    if j > datum.rank() {
        return Err(Error::IndexOutOfRange {
            index: j,
            rank: datum.rank(),
        });
    }
    affine_reflection(datum, &AffineCoroot::simple(datum, j))
}

/// `π · s_{i_1} ⋯ s_{i_l}`.
pub fn word_element(datum: &RootDatum, pi: &ExtAffineElt, word: &[usize]) -> Result<ExtAffineElt> {
    let mut w = pi.clone();
    for &j in word {
        w = w.multiply(&simple_affine_reflection(datum, j)?);
    }
    Ok(w)
}

/// Closed-form length: for `w = t_λ v`,
/// `ℓ(w) = Σ_{γ∈Δ^∨_+} |⟨γ, λ⟩ − [v⁻¹γ < 0]|`.
pub fn length_ext(datum: &RootDatum, w: &ExtAffineElt) -> usize {
    let vinv = w.dir.inverse();
    datum
        .pos_coroots()
        .iter()
        .map(|g| {
            let neg = vinv.act_coroot(g).is_negative() as i64;
            (dot(&g.0, &w.wt.0) - neg).unsigned_abs() as usize
        })
        .sum()
}

/// Whether `w·s_j` is shorter than `w`, i.e. `w(α_j^∨)` is negative.
pub fn has_right_descent(datum: &RootDatum, w: &ExtAffineElt, j: usize) -> bool {
    w.act(&AffineCoroot::simple(datum, j)).is_negative()
}

/// `w = π · s_{i_1} ⋯ s_{i_l}` with `ℓ(π) = 0`, stripping the smallest
/// right descent at each step.
pub fn reduced_word_ext(datum: &RootDatum, w: &ExtAffineElt) -> Result<(ExtAffineElt, Vec<usize>)> {
    let budget = length_ext(datum, w);
    let mut cur = w.clone();
    let mut word = Vec::with_capacity(budget);
    while let Some(j) = (0..=datum.rank()).find(|&j| has_right_descent(datum, &cur, j)) {
        if word.len() >= budget {
            return Err(Error::Convention(format!(
                "descent search exceeded the closed-form length {budget}"
            )));
        }
        cur = cur.multiply(&simple_affine_reflection(datum, j)?);
        word.push(j);
    }
    if word.len() != budget || length_ext(datum, &cur) != 0 {
        return Err(Error::Convention(format!(
            "descent search stalled after {} steps, expected {budget}",
            word.len()
        )));
    }
    word.reverse();
    Ok((cur, word))
}

/// `β_k = s_{i_l} ⋯ s_{i_{k+1}} α^∨_{i_k}`.
pub fn beta_sequence(datum: &RootDatum, word: &[usize]) -> Result<Vec<AffineCoroot>> {
    let mut v = ExtAffineElt::identity(datum.rank());
    let mut out = vec![AffineCoroot::new(Coroot::zero(datum.rank()), 0); word.len()];
    for (k, &j) in word.iter().enumerate().rev() {
        let s = simple_affine_reflection(datum, j)?;
        let b = v.act(&AffineCoroot::simple(datum, j));
        if !datum.is_coroot(&b.re) {
            return Err(Error::NotACoroot(b.re.0));
        }
        out[k] = b;
        v = v.multiply(&s);
    }
    Ok(out)
}

/// Recover the word from a β-sequence. With a target element `w`, the
/// returned `π` satisfies `π · word = w` and must have length zero.
pub fn word_from_beta(
    datum: &RootDatum,
    betas: &[AffineCoroot],
    target: Option<&ExtAffineElt>,
) -> Result<(ExtAffineElt, Vec<usize>)> {
    let mut v = ExtAffineElt::identity(datum.rank());
    let mut word = vec![0; betas.len()];
    for (k, b) in betas.iter().enumerate().rev() {
        let a = v.act_checked(datum, b)?;
        let j = a.simple_index(datum).ok_or_else(|| {
            Error::NotABetaSequence(format!("β_{} = {b} maps to {a}, not a simple coroot", k + 1))
        })?;
        word[k] = j;
        v = simple_affine_reflection(datum, j)?.multiply(&v);
    }
    let pi = match target {
        None => ExtAffineElt::identity(datum.rank()),
        Some(t) => {
            let pi = t.multiply(&word_element(datum, &ExtAffineElt::identity(datum.rank()), &word)?.inverse());
            if length_ext(datum, &pi) != 0 {
                return Err(Error::NotABetaSequence(
                    "target is not π times the recovered word".into(),
                ));
            }
            pi
        }
    };
    Ok((pi, word))
}

/// The multiset `{γ + kδ : ⟨γ, ω_i⟩ < 0, 1 ≤ k ≤ −⟨γ, ω_i⟩}` sorted by the
/// vectors `(a_i/D, a_{t_1}/a_i, …)` for `γ + Dδ = −Σ a_j α_j^∨ + Dδ`.
///
/// `i` is a 0-based node index. `tail` lists the remaining nodes in the
/// order they enter the comparison; `None` means ascending.
pub fn canonical_beta_order(
    datum: &RootDatum,
    i: usize,
    tail: Option<&[usize]>,
) -> Result<Vec<AffineCoroot>> {
    let n = datum.rank();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    let tail: Vec<usize> = match tail {
        Some(t) => {
            let mut sorted = t.to_vec();
            sorted.sort();
            let expected: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            if sorted != expected {
                return Err(Error::Parse(format!(
                    "tail order {t:?} is not a permutation of the nodes other than {i}"
                )));
            }
            t.to_vec()
        }
        None => (0..n).filter(|&j| j != i).collect(),
    };
    let mut out = Vec::new();
    for g in datum.pos_coroots() {
        let a = g[i];
        for k in 1..=a {
            out.push(AffineCoroot::new(-g, k));
        }
    }
    let key = |b: &AffineCoroot| -> Vec<(i64, i64)> {
        let a_i = -b.re[i];
        let mut v = vec![(a_i, b.deg)];
        v.extend(tail.iter().map(|&t| (-b.re[t], a_i)));
        v
    };
    out.sort_by(|x, y| {
        for (p, q) in key(x).iter().zip(key(y).iter()) {
            match (p.0 * q.1).cmp(&(q.0 * p.1)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    });
    Ok(out)
}

/// Reduced decomposition `t_{−ω_i} = π · word` read off the canonical order.
pub fn fundamental_translation_word(datum: &RootDatum, i: usize) -> Result<(ExtAffineElt, Vec<usize>)> {
    let betas = canonical_beta_order(datum, i, None)?;
    let target = ExtAffineElt::translation(&-datum.fundamental_weight(i));
    word_from_beta(datum, &betas, Some(&target))
        .map_err(|e| Error::Convention(format!("canonical order for ω_{} is not a β-sequence: {e}", i + 1)))
}

/// Permutation of simple affine coroots induced by `π⁻¹`:
/// `π⁻¹(α_j^∨) = α_{p[j]}^∨`.
pub fn pi_inverse_permutation(datum: &RootDatum, pi: &ExtAffineElt) -> Result<Vec<usize>> {
    let inv = pi.inverse();
    (0..=datum.rank())
        .map(|j| {
            inv.act(&AffineCoroot::simple(datum, j))
                .simple_index(datum)
                .ok_or_else(|| Error::Convention("element of length zero does not permute simple coroots".into()))
        })
        .collect()
}

/// `(π_a · a)(π_b · b) = (π_a π_b) · (π_b⁻¹ a π_b) · b`.
pub fn concat_words(
    datum: &RootDatum,
    a: &(ExtAffineElt, Vec<usize>),
    b: &(ExtAffineElt, Vec<usize>),
) -> Result<(ExtAffineElt, Vec<usize>)> {
    let perm = pi_inverse_permutation(datum, &b.0)?;
    let mut word: Vec<usize> = a.1.iter().map(|&j| perm[j]).collect();
    word.extend_from_slice(&b.1);
    Ok((a.0.multiply(&b.0), word))
}

fn check_anti_dominant(lambda: &Weight) -> Result<()> {
    if !lambda.is_anti_dominant() {
        return Err(Error::NotAntiDominant(lambda.0.clone()));
    }
    Ok(())
}

/// Reduced decomposition of `t_λ` for anti-dominant `λ`: the fundamental
/// pieces `t_{−ω_k}`, each repeated `−λ_k` times, in ascending `k`.
pub fn translation_word(datum: &RootDatum, lambda: &Weight) -> Result<(ExtAffineElt, Vec<usize>)> {
    if lambda.rank() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            got: lambda.rank(),
        });
    }
    check_anti_dominant(lambda)?;
    let mut acc = (ExtAffineElt::identity(datum.rank()), Vec::new());
    for k in 0..datum.rank() {
        if lambda[k] == 0 {
            continue;
        }
        let piece = fundamental_translation_word(datum, k)?;
        for _ in 0..-lambda[k] {
            acc = concat_words(datum, &acc, &piece)?;
        }
    }
    Ok(acc)
}

/// `β^i_j + ⟨Re β^i_j, λ⟩δ` over the canonical sequence for `ω_i`.
pub fn shifted_beta(datum: &RootDatum, i: usize, lambda: &Weight) -> Result<Vec<AffineCoroot>> {
    check_anti_dominant(lambda)?;
    Ok(canonical_beta_order(datum, i, None)?
        .into_iter()
        .map(|b| {
            let s = dot(&b.re.0, &lambda.0);
            b.shift(s)
        })
        .collect())
}

/// `π;word` with `π` given as `{"wt":[..],"dir":"word"}` and omitted when
/// it is the identity, e.g. `0,2,1` or `{"wt":[1,0],"dir":"1"};0,2`.
pub fn format_ext_word(datum: &RootDatum, pi: &ExtAffineElt, word: &[usize]) -> String {
    let letters = word.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",");
    if pi.is_identity() {
        letters
    } else {
        let desc = serde_json::json!({
            "wt": pi.wt.0,
            "dir": format_word(&pi.dir.reduced_word(datum)),
        });
        format!("{desc};{letters}")
    }
}

pub fn parse_ext_word(datum: &RootDatum, s: &str) -> Result<(ExtAffineElt, Vec<usize>)> {
    let n = datum.rank();
    let (pi, rest) = match s.rsplit_once(';') {
        Some((head, rest)) if !head.trim().is_empty() => {
            #[derive(Deserialize)]
            struct Desc {
                wt: Vec<i64>,
                dir: String,
            }
            let d: Desc = serde_json::from_str(head.trim()).map_err(|e| Error::Parse(e.to_string()))?;
            if d.wt.len() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    got: d.wt.len(),
                });
            }
            let dir = WeylElt::from_word(datum, &parse_word(&d.dir, n)?)?;
            (ExtAffineElt::new(Weight(d.wt), dir), rest)
        }
        Some((_, rest)) => (ExtAffineElt::identity(n), rest),
        None => (ExtAffineElt::identity(n), s),
    };
    let word = crate::lattice::parse_ints(rest)?
        .into_iter()
        .map(|j| {
            if (0..=n as i64).contains(&j) {
                Ok(j as usize)
            } else {
                Err(Error::IndexOutOfRange {
                    index: j.max(0) as usize,
                    rank: n,
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((pi, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Family;
    use crate::weyl::WeylGroup;
    use std::sync::Arc;

    fn datum(f: Family, n: usize) -> RootDatum {
        RootDatum::build(f, n).unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight(coords.to_vec())
    }

    fn ac(re: &[i64], deg: i64) -> AffineCoroot {
        AffineCoroot::new(Coroot(re.to_vec()), deg)
    }

    /// Positive affine coroots sent negative, by direct search.
    fn inversions(d: &RootDatum, x: &ExtAffineElt) -> Vec<AffineCoroot> {
        let bound = d
            .pos_coroots()
            .iter()
            .map(|g| dot(&g.0, &x.wt.0).abs())
            .max()
            .unwrap_or(0)
            + 1;
        let mut out = Vec::new();
        for g in d.pos_coroots() {
            for re in [g.clone(), -g] {
                for k in 0..=bound {
                    let b = AffineCoroot::new(re.clone(), k);
                    if b.is_positive() && x.act(&b).is_negative() {
                        out.push(b);
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn translations_compose() {
        let d = datum(Family::A, 2);
        let a = ExtAffineElt::translation(&w(&[1, -2]));
        let b = ExtAffineElt::translation(&w(&[0, 3]));
        assert_eq!(a.multiply(&b), ExtAffineElt::translation(&w(&[1, 1])));
        assert!(ExtAffineElt::translation(&Weight::zero(2)).is_identity());
        assert!(a.dir.is_identity());
        let u = ExtAffineElt::finite(&WeylElt::from_word(&d, &[0, 1]).unwrap());
        let conj = u.multiply(&b).multiply(&u.inverse());
        assert_eq!(conj, ExtAffineElt::translation(&u.dir.act_weight(&b.wt)));
    }

    #[test]
    fn a1_semidirect_relation() {
        let d = datum(Family::A, 1);
        let s = ExtAffineElt::finite(&WeylElt::simple_reflection(&d, 0).unwrap());
        let t = ExtAffineElt::translation(&w(&[1]));
        let lhs = s.multiply(&t);
        assert_eq!(lhs, ExtAffineElt::translation(&w(&[-1])).multiply(&s));
        assert!(lhs.multiply(&lhs.inverse()).is_identity());
    }

    #[test]
    fn translation_shifts_degree() {
        let d = datum(Family::A, 2);
        let t = ExtAffineElt::translation(&d.fundamental_weight(0));
        for n in -2..3 {
            assert_eq!(t.act(&ac(&[1, 0], n)), ac(&[1, 0], n - 1));
            assert_eq!(t.act(&ac(&[0, 1], n)), ac(&[0, 1], n));
        }
        let u = ExtAffineElt::finite(&WeylElt::simple_reflection(&d, 0).unwrap());
        assert_eq!(u.act(&ac(&[1, 1], 3)), ac(&[0, 1], 3));
        assert!(t.act_checked(&d, &ac(&[1, 2], 0)).is_err());
    }

    #[test]
    fn affine_reflections_are_involutions_negating_their_coroot() {
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::B, 3)] {
            let d = datum(f, n);
            for g in d.pos_coroots() {
                for re in [g.clone(), -g] {
                    for k in -2..=2 {
                        let b = AffineCoroot::new(re.clone(), k);
                        let s = affine_reflection(&d, &b).unwrap();
                        assert!(s.multiply(&s).is_identity());
                        assert_eq!(s.act(&b), -&b);
                    }
                }
            }
            let s0 = simple_affine_reflection(&d, 0).unwrap();
            assert_eq!(length_ext(&d, &s0), 1);
        }
    }

    #[test]
    fn a1_affine_reflection_example() {
        let d = datum(Family::A, 1);
        let s = affine_reflection(&d, &ac(&[-1], 1)).unwrap();
        assert_eq!(s.wt, w(&[2]));
        assert_eq!(s.dir, WeylElt::simple_reflection(&d, 0).unwrap());
        let s0 = affine_reflection(&d, &ac(&[0], 1));
        assert_eq!(s0, Err(Error::ZeroRealPart));
    }

    #[test]
    fn g2_translation_lengths() {
        let d = datum(Family::G, 2);
        assert_eq!(length_ext(&d, &ExtAffineElt::translation(&w(&[-1, 0]))), 10);
        assert_eq!(length_ext(&d, &ExtAffineElt::translation(&w(&[0, -1]))), 6);
        assert_eq!(length_ext(&d, &ExtAffineElt::identity(2)), 0);
    }

    #[test]
    fn closed_length_matches_inversions_and_greedy_words() {
        for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::B, 3)] {
            let d = Arc::new(datum(f, n));
            let group = WeylGroup::enumerate(d.clone()).unwrap();
            let range: Vec<i64> = if n <= 2 { (-3..=3).collect() } else { (-2..=2).collect() };
            let mut lams = vec![vec![]];
            for _ in 0..n {
                lams = lams
                    .into_iter()
                    .flat_map(|v: Vec<i64>| {
                        range.iter().map(move |&c| {
                            let mut v = v.clone();
                            v.push(c);
                            v
                        })
                    })
                    .collect();
            }
            for lam in &lams {
                for v in group.elements().iter().step_by(if n > 2 { 7 } else { 1 }) {
                    let x = ExtAffineElt::new(w(lam), v.clone());
                    let l = length_ext(&d, &x);
                    let inv = inversions(&d, &x);
                    assert_eq!(l, inv.len());
                    let (pi, word) = reduced_word_ext(&d, &x).unwrap();
                    assert_eq!(word.len(), l);
                    assert_eq!(length_ext(&d, &pi), 0);
                    assert_eq!(word_element(&d, &pi, &word).unwrap(), x);
                    let mut betas = beta_sequence(&d, &word).unwrap();
                    assert!(betas.iter().all(|b| b.is_positive()));
                    betas.sort();
                    assert_eq!(betas, inv);
                }
            }
        }
    }

    #[test]
    fn a1_and_a2_reduced_words() {
        let d = datum(Family::A, 1);
        let t = ExtAffineElt::translation(&w(&[-1]));
        // t_{−ω} = π s_0: only α_0^∨ = −α^∨ + δ is sent negative.
        let (pi, word) = reduced_word_ext(&d, &t).unwrap();
        assert_eq!(word, vec![0]);
        assert_eq!(length_ext(&d, &pi), 0);
        assert!(!pi.is_identity());
        let d2 = datum(Family::A, 2);
        let (_, word) = reduced_word_ext(&d2, &ExtAffineElt::translation(&w(&[-1, 0]))).unwrap();
        assert_eq!(word.len(), 2);
        let (pi, word) = reduced_word_ext(&d2, &pi.clone()).unwrap();
        assert!(word.is_empty());
        assert_eq!(length_ext(&d2, &pi), 0);
    }

    #[test]
    fn single_letter_beta() {
        let d = datum(Family::A, 3);
        for j in 1..=3 {
            assert_eq!(beta_sequence(&d, &[j]).unwrap(), vec![AffineCoroot::simple(&d, j)]);
            assert_eq!(
                word_from_beta(&d, &[AffineCoroot::simple(&d, j)], None).unwrap().1,
                vec![j]
            );
        }
    }

    #[test]
    fn canonical_orders_start_with_simple_and_round_trip() {
        for (f, n) in [
            (Family::A, 1),
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let d = datum(f, n);
            for i in 0..n {
                let betas = canonical_beta_order(&d, i, None).unwrap();
                assert_eq!(betas[0], ac(&(-d.simple_coroot(i)).0, 1));
                let (pi, word) = fundamental_translation_word(&d, i).unwrap();
                assert_eq!(beta_sequence(&d, &word).unwrap(), betas);
                assert_eq!(
                    word_element(&d, &pi, &word).unwrap(),
                    ExtAffineElt::translation(&-d.fundamental_weight(i))
                );
            }
        }
    }

    #[test]
    fn c2_fixture_in_root_reading() {
        // The printed C2 lists read as roots: α_1 ↦ α_1^∨, 2α_1+α_2 ↦
        // α_1^∨+α_2^∨, α_1+α_2 ↦ α_1^∨+2α_2^∨, α_2 ↦ α_2^∨.
        let d = datum(Family::C, 2);
        assert_eq!(
            canonical_beta_order(&d, 0, None).unwrap(),
            vec![ac(&[-1, 0], 1), ac(&[-1, -1], 1), ac(&[-1, -2], 1)]
        );
        assert_eq!(
            canonical_beta_order(&d, 1, None).unwrap(),
            vec![ac(&[0, -1], 1), ac(&[-1, -2], 2), ac(&[-1, -1], 1), ac(&[-1, -2], 1)]
        );
    }

    #[test]
    fn g2_second_fundamental_fixture() {
        let d = datum(Family::G, 2);
        // coordinates (α_1^∨, α_2^∨)
        let expected = vec![
            ac(&[0, -1], 1),
            ac(&[-1, -1], 1),
            ac(&[-3, -2], 2),
            ac(&[-2, -1], 1),
            ac(&[-3, -1], 1),
            ac(&[-3, -2], 1),
        ];
        assert_eq!(canonical_beta_order(&d, 1, None).unwrap(), expected);
        let (pi, word) = fundamental_translation_word(&d, 1).unwrap();
        assert_eq!(word.len(), 6);
        assert_eq!(
            word_element(&d, &pi, &word).unwrap(),
            ExtAffineElt::translation(&w(&[0, -1]))
        );
    }

    #[test]
    fn translation_words_are_reduced() {
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::C, 3)] {
            let d = datum(f, n);
            for lam in [vec![-1; n], vec![-2; n], {
                let mut v = vec![0; n];
                v[n - 1] = -2;
                v
            }] {
                let lam = Weight(lam);
                let (pi, word) = translation_word(&d, &lam).unwrap();
                let t = ExtAffineElt::translation(&lam);
                assert_eq!(word.len(), length_ext(&d, &t));
                assert_eq!(word_element(&d, &pi, &word).unwrap(), t);
            }
        }
        let d = datum(Family::A, 2);
        assert!(matches!(
            translation_word(&d, &w(&[1, 0])),
            Err(Error::NotAntiDominant(_))
        ));
    }

    #[test]
    fn shifted_beta_examples() {
        let d = datum(Family::A, 1);
        assert_eq!(shifted_beta(&d, 0, &w(&[-1])).unwrap(), vec![ac(&[-1], 2)]);
        assert_eq!(
            shifted_beta(&d, 0, &w(&[0])).unwrap(),
            canonical_beta_order(&d, 0, None).unwrap()
        );
        assert!(shifted_beta(&d, 0, &w(&[1])).is_err());
    }

    #[test]
    fn word_format_round_trip() {
        let d = datum(Family::A, 2);
        let (pi, word) = reduced_word_ext(&d, &ExtAffineElt::translation(&w(&[-1, 0]))).unwrap();
        let s = format_ext_word(&d, &pi, &word);
        assert!(s.contains(';'));
        assert_eq!(parse_ext_word(&d, &s).unwrap(), (pi, word));
        let id = ExtAffineElt::identity(2);
        assert_eq!(format_ext_word(&d, &id, &[0, 2, 1]), "0,2,1");
        assert_eq!(parse_ext_word(&d, "0,2,1").unwrap(), (id.clone(), vec![0, 2, 1]));
        assert_eq!(parse_ext_word(&d, "").unwrap(), (id, vec![]));
        assert!(parse_ext_word(&d, "3").is_err());
        let json = serde_json::to_string(&ac(&[-1, 0], 2)).unwrap();
        assert_eq!(json, r#"{"re":[-1,0],"deg":2}"#);
    }
}
