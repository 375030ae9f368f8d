//! The finite Weyl group `W`.
//!
//! An element is stored as two integer matrices: its action on weight
//! coordinates and its action on coroot coordinates. The two are related by
//! `⟨wγ, wλ⟩ = ⟨γ, λ⟩`, i.e. the coroot matrix is the inverse transpose of the
//! weight matrix. Equality and hashing only look at the weight matrix.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{parse_ints, Coroot, RootDatum, Weight};

/// Default cap on `|W|` when materializing the group (the order of `W(E6)`).
pub const DEFAULT_GROUP_CAP: u128 = 51_840;

#[derive(Clone, Debug)]
pub struct WeylElt {
    n: usize,
    /// Row-major action on weight coordinates.
    on_weights: Vec<i64>,
    /// Row-major action on coroot coordinates.
    on_coroots: Vec<i64>,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.on_weights == other.on_weights
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.on_weights.hash(state);
    }
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

fn matvec(n: usize, a: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum())
        .collect()
}

fn transpose(n: usize, a: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}

impl WeylElt {
    pub fn identity(rank: usize) -> WeylElt {
        WeylElt {
            n: rank,
            on_weights: identity_matrix(rank),
            on_coroots: identity_matrix(rank),
        }
    }

    pub fn simple_reflection(datum: &RootDatum, i: usize) -> Result<WeylElt> {
        let n = datum.rank();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let a = datum.cartan();
        let mut w = identity_matrix(n);
        let mut c = identity_matrix(n);
        for r in 0..n {
            // s_i(λ) = λ − λ_i Σ_r a[r][i] ω_r
            w[r * n + i] -= a[r][i];
            // s_i(γ) = γ − (Σ_j γ_j a[j][i]) α_i^∨
            c[i * n + r] -= a[r][i];
        }
        Ok(WeylElt {
            n,
            on_weights: w,
            on_coroots: c,
        })
    }

    /// The reflection `s_γ` for a coroot `γ` of either sign.
    pub fn reflection_of(datum: &RootDatum, gamma: &Coroot) -> Result<WeylElt> {
        let root = datum.root_of(gamma)?;
        let rw = datum.root_to_weight(&root);
        let n = datum.rank();
        // s(λ) = λ − ⟨γ, λ⟩ α;  s(c) = c − ⟨c, α⟩ γ
        let mut w = identity_matrix(n);
        for r in 0..n {
            for c in 0..n {
                w[r * n + c] -= rw[r] * gamma[c];
            }
        }
        let c = transpose(n, &w);
        Ok(WeylElt {
            n,
            on_weights: w,
            on_coroots: c,
        })
    }

    /// Product of simple reflections `s_{i_1} ⋯ s_{i_k}` (0-based indices).
    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Result<WeylElt> {
        let mut w = WeylElt::identity(datum.rank());
        for &i in word {
            w = w.multiply(&WeylElt::simple_reflection(datum, i)?);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.on_weights == identity_matrix(self.n)
    }

    pub fn multiply(&self, other: &WeylElt) -> WeylElt {
        WeylElt {
            n: self.n,
            on_weights: matmul(self.n, &self.on_weights, &other.on_weights),
            on_coroots: matmul(self.n, &self.on_coroots, &other.on_coroots),
        }
    }

    pub fn inverse(&self) -> WeylElt {
        WeylElt {
            n: self.n,
            on_weights: transpose(self.n, &self.on_coroots),
            on_coroots: transpose(self.n, &self.on_weights),
        }
    }

    pub fn act_weight(&self, w: &Weight) -> Weight {
        Weight(matvec(self.n, &self.on_weights, &w.0))
    }

    pub fn act_coroot(&self, c: &Coroot) -> Coroot {
        Coroot(matvec(self.n, &self.on_coroots, &c.0))
    }

    /// Image of the simple coroot `α_i^∨` (column `i` of the coroot matrix).
    pub fn image_of_simple_coroot(&self, i: usize) -> Coroot {
        Coroot((0..self.n).map(|r| self.on_coroots[r * self.n + i]).collect())
    }

    pub fn weight_matrix(&self) -> &[i64] {
        &self.on_weights
    }

    /// Number of positive coroots sent to negative coroots.
    pub fn length(&self, datum: &RootDatum) -> usize {
        datum
            .pos_coroots()
            .iter()
            .filter(|c| self.act_coroot(c).is_negative())
            .count()
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.image_of_simple_coroot(i).is_negative()
    }

    /// Reduced word by repeatedly stripping the smallest right descent.
    /// Indices are 0-based.
    pub fn reduced_word(&self, datum: &RootDatum) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.n).find(|&i| w.has_right_descent(i)) {
            w = w.multiply(&WeylElt::simple_reflection(datum, i).unwrap());
            word.push(i);
        }
        word.reverse();
        word
    }

    /// The longest element, by greedy ascent.
    pub fn longest(datum: &RootDatum) -> WeylElt {
        let mut w = WeylElt::identity(datum.rank());
        while let Some(i) = (0..datum.rank()).find(|&i| !w.has_right_descent(i)) {
            w = w.multiply(&WeylElt::simple_reflection(datum, i).unwrap());
        }
        w
    }
}

/// Format a 0-based word with 1-based letters: `"1,2,1"`, or `"e"` when empty.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse a 1-based word (`"1,2,1"`, `"e"` or empty) into 0-based letters.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(vec![]);
    }
    parse_ints(s)?
        .into_iter()
        .map(|i| {
            if i >= 1 && (i as usize) <= rank {
                Ok(i as usize - 1)
            } else {
                Err(Error::IndexOutOfRange {
                    index: i.max(0) as usize,
                    rank,
                })
            }
        })
        .collect()
}

/// The materialized group: every element exactly once, indexed.
#[derive(Debug)]
pub struct WeylGroup {
    datum: Arc<RootDatum>,
    elements: Vec<WeylElt>,
    lengths: Vec<usize>,
    index: HashMap<WeylElt, usize>,
    longest: usize,
}

impl WeylGroup {
    pub fn enumerate(datum: Arc<RootDatum>) -> Result<WeylGroup> {
        Self::enumerate_with_cap(datum, DEFAULT_GROUP_CAP)
    }

    pub fn enumerate_with_cap(datum: Arc<RootDatum>, cap: u128) -> Result<WeylGroup> {
        let order = datum.weyl_group_order();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        let n = datum.rank();
        let gens: Vec<WeylElt> = (0..n)
            .map(|i| WeylElt::simple_reflection(&datum, i).unwrap())
            .collect();
        let id = WeylElt::identity(n);
        let mut index: HashMap<WeylElt, usize> = HashMap::new();
        let mut elements = vec![id.clone()];
        index.insert(id, 0);
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            head += 1;
            for g in &gens {
                let x = w.multiply(g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elements.len());
                    elements.push(x);
                }
            }
        }
        debug_assert_eq!(elements.len() as u128, order);

        // Deterministic order: by length, then by reduced word.
        let mut keyed: Vec<(usize, Vec<usize>, WeylElt)> = elements
            .into_iter()
            .map(|w| (w.length(&datum), w.reduced_word(&datum), w))
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let lengths = keyed.iter().map(|k| k.0).collect();
        let elements: Vec<WeylElt> = keyed.into_iter().map(|k| k.2).collect();
        let index: HashMap<WeylElt, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let longest = elements.len() - 1;
        Ok(WeylGroup {
            datum,
            elements,
            lengths,
            index,
            longest,
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &WeylElt {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &WeylElt) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length_of(&self, k: usize) -> usize {
        self.lengths[k]
    }

    pub fn longest_index(&self) -> usize {
        self.longest
    }

    pub fn longest(&self) -> &WeylElt {
        &self.elements[self.longest]
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.on_weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Family;

    fn datum(f: Family, n: usize) -> RootDatum {
        RootDatum::build(f, n).unwrap()
    }

    #[test]
    fn simple_reflection_on_fundamental_weight() {
        let d = datum(Family::A, 2);
        let s1 = WeylElt::simple_reflection(&d, 0).unwrap();
        let w1 = d.fundamental_weight(0);
        assert_eq!(
            s1.act_weight(&w1),
            &w1 - &d.root_to_weight(&d.simple_root(0))
        );
        assert!(s1.multiply(&s1).is_identity());
        assert!(WeylElt::simple_reflection(&d, 2).is_err());
    }

    #[test]
    fn braid_relation_a2() {
        let d = datum(Family::A, 2);
        assert_eq!(
            WeylElt::from_word(&d, &[0, 1, 0]).unwrap(),
            WeylElt::from_word(&d, &[1, 0, 1]).unwrap()
        );
    }

    #[test]
    fn longest_elements() {
        let a1 = datum(Family::A, 1);
        assert_eq!(WeylElt::longest(&a1), WeylElt::from_word(&a1, &[0]).unwrap());
        let a2 = datum(Family::A, 2);
        let w0 = WeylElt::longest(&a2);
        assert_eq!(w0, WeylElt::from_word(&a2, &[0, 1, 0]).unwrap());
        assert_eq!(w0.length(&a2), 3);
        let c2 = datum(Family::C, 2);
        assert_eq!(
            WeylElt::longest(&c2),
            WeylElt::from_word(&c2, &[0, 1, 0, 1]).unwrap()
        );
        let g2 = datum(Family::G, 2);
        assert_eq!(WeylElt::longest(&g2).length(&g2), 6);
        assert_eq!(WeylElt::identity(2).length(&g2), 0);
    }

    #[test]
    fn reflections_of_coroots() {
        let d = datum(Family::A, 2);
        for i in 0..2 {
            assert_eq!(
                WeylElt::reflection_of(&d, &d.simple_coroot(i)).unwrap(),
                WeylElt::simple_reflection(&d, i).unwrap()
            );
        }
        let theta = Coroot(vec![1, 1]);
        let s = WeylElt::reflection_of(&d, &theta).unwrap();
        assert_eq!(s, WeylElt::from_word(&d, &[0, 1, 0]).unwrap());
        assert_eq!(s, WeylElt::reflection_of(&d, &-&theta).unwrap());
        assert!(s.multiply(&s).is_identity());
        assert!(WeylElt::reflection_of(&d, &Coroot(vec![1, 2])).is_err());
    }

    #[test]
    fn group_orders() {
        for (f, n, order) in [
            (Family::A, 2, 6),
            (Family::G, 2, 12),
            (Family::C, 3, 48),
            (Family::B, 3, 48),
            (Family::D, 4, 192),
            (Family::F, 4, 1152),
        ] {
            let g = WeylGroup::enumerate(Arc::new(datum(f, n))).unwrap();
            assert_eq!(g.len(), order);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e7 = Arc::new(datum(Family::E, 7));
        assert!(matches!(
            WeylGroup::enumerate(e7),
            Err(Error::CapExceeded { .. })
        ));
        let a3 = Arc::new(datum(Family::A, 3));
        assert!(WeylGroup::enumerate_with_cap(a3, 10).is_err());
    }

    #[test]
    fn reduced_words() {
        let d = Arc::new(datum(Family::G, 2));
        let g = WeylGroup::enumerate(d.clone()).unwrap();
        assert!(WeylElt::identity(2).reduced_word(&d).is_empty());
        for w in g.elements() {
            let word = w.reduced_word(&d);
            assert_eq!(word.len(), w.length(&d));
            assert_eq!(&WeylElt::from_word(&d, &word).unwrap(), w);
        }
    }

    #[test]
    fn length_and_action_invariants() {
        for (f, n) in [(Family::A, 3), (Family::C, 3), (Family::B, 3), (Family::G, 2)] {
            let d = Arc::new(datum(f, n));
            let g = WeylGroup::enumerate(d.clone()).unwrap();
            let w0 = g.longest().clone();
            let l0 = w0.length(&d);
            assert_eq!(l0, d.num_pos_roots());
            for w in g.elements() {
                let l = w.length(&d);
                for i in 0..n {
                    let ws = w.multiply(&WeylElt::simple_reflection(&d, i).unwrap());
                    assert_eq!(ws.length(&d).abs_diff(l), 1);
                }
                assert_eq!(w0.multiply(w).length(&d), l0 - l);
                assert!(w.multiply(&w.inverse()).is_identity());
                for c in d.pos_coroots() {
                    assert!(d.is_coroot(&w.act_coroot(c)));
                    for k in 0..n {
                        let lam = d.fundamental_weight(k);
                        assert_eq!(
                            d.pair(&w.act_coroot(c), &w.act_weight(&lam)).unwrap(),
                            d.pair(c, &lam).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn word_format_roundtrip() {
        assert_eq!(format_word(&[]), "e");
        assert_eq!(format_word(&[0, 1, 0]), "1,2,1");
        assert_eq!(parse_word("1,2,1", 2).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("e", 2).unwrap(), Vec::<usize>::new());
        assert!(parse_word("3", 2).is_err());
    }
}
