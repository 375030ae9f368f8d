//! Sparse Laurent polynomials in `x^μ` (μ a weight) and `q`.
//!
//! Terms are kept in a `BTreeMap` keyed by `(μ, k)` so iteration, printing
//! and JSON output are sorted by `(x, q)`. Zero coefficients are never
//! stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::Weight;
use crate::weyl::WeylElt;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<(Weight, i64), i64>,
}

/// One term in the JSON form `{"x":[..],"q":k,"c":c}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: Vec<i64>,
    pub q: i64,
    pub c: i64,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> LaurentPoly {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> LaurentPoly {
        LaurentPoly::monomial(Weight::zero(rank), 0, 1)
    }

    /// `c · x^μ q^k`.
    pub fn monomial(mu: Weight, k: i64, c: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero(mu.rank());
        p.add_term(mu, k, c);
        p
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = ((Weight, i64), i64)>) -> LaurentPoly {
        let mut p = LaurentPoly::zero(rank);
        for ((mu, k), c) in terms {
            p.add_term(mu, k, c);
        }
        p
    }

    pub fn add_term(&mut self, mu: Weight, k: i64, c: i64) {
        debug_assert_eq!(mu.rank(), self.rank);
        if c == 0 {
            return;
        }
        let key = (mu, k);
        let v = self.terms.entry(key.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64, i64)> {
        self.terms.iter().map(|((mu, k), c)| (mu, *k, *c))
    }

    pub fn coefficient(&self, mu: &Weight, k: i64) -> i64 {
        self.terms.get(&(mu.clone(), k)).copied().unwrap_or(0)
    }

    /// The polynomial in `q` multiplying `x^μ`, as `(k, c)` pairs.
    pub fn q_slice(&self, mu: &Weight) -> Vec<(i64, i64)> {
        self.terms
            .iter()
            .filter(|((m, _), _)| m == mu)
            .map(|((_, k), c)| (*k, *c))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Rewrite every term `c x^μ q^k` as `c x^{f(μ)} q^{g(μ, k)}`.
    pub fn map_terms(&self, mut f: impl FnMut(&Weight, i64) -> (Weight, i64)) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for ((mu, k), c) in &self.terms {
            let (m, j) = f(mu, *k);
            out.add_term(m, j, *c);
        }
        out
    }

    /// `x^μ · self`.
    pub fn shift(&self, mu: &Weight) -> LaurentPoly {
        self.map_terms(|m, k| (m + mu, k))
    }

    /// `x^ν ↦ x^{wν}`, `q` untouched.
    pub fn act(&self, w: &WeylElt) -> LaurentPoly {
        self.map_terms(|m, k| (w.act_weight(m), k))
    }

    /// Sum of all coefficients, i.e. the value at `x = 1, q = 1`.
    pub fn evaluate(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Value at `x_i = x` for every `i` and the given `q`, exactly.
    pub fn evaluate_at(&self, x: i64, q: i64) -> Option<Ratio<i128>> {
        let pow = |b: i64, e: i64| -> Option<Ratio<i128>> {
            let b = Ratio::from_integer(b as i128);
            if e < 0 && *b.numer() == 0 {
                return None;
            }
            Some(b.pow(e.try_into().ok()?))
        };
        let mut acc = Ratio::from_integer(0i128);
        for ((mu, k), c) in &self.terms {
            let e: i64 = mu.coords().iter().sum();
            acc += pow(x, e)? * pow(q, *k)? * Ratio::from_integer(*c as i128);
        }
        Some(acc)
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|((mu, k), c)| TermJson {
                x: mu.0.clone(),
                q: *k,
                c: *c,
            })
            .collect()
    }

    pub fn from_json_terms(rank: usize, terms: &[TermJson]) -> LaurentPoly {
        LaurentPoly::from_terms(
            rank,
            terms.iter().map(|t| ((Weight(t.x.clone()), t.q), t.c)),
        )
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for ((mu, k), c) in &rhs.terms {
            out.add_term(mu.clone(), *k, *c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &-rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(key, c)| (key.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for ((m1, k1), c1) in &self.terms {
            for ((m2, k2), c2) in &rhs.terms {
                out.add_term(m1 + m2, k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let rank = terms.first().map_or(0, |t| t.x.len());
        if terms.iter().any(|t| t.x.len() != rank) {
            return Err(serde::de::Error::custom("terms of different rank"));
        }
        Ok(LaurentPoly::from_json_terms(rank, &terms))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, mu: &Weight, k: i64) -> fmt::Result {
    let mut parts = Vec::new();
    for (i, &a) in mu.coords().iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, a)),
        }
    }
    match k {
        0 => {}
        1 => parts.push("q".into()),
        _ => parts.push(format!("q^{k}")),
    }
    if parts.is_empty() {
        write!(f, "1")
    } else {
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((mu, k), c)) in self.terms.iter().enumerate() {
            let c = *c;
            if n > 0 {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            let unit = mu.is_zero() && *k == 0;
            if a != 1 || unit {
                write!(f, "{a}")?;
                if unit {
                    continue;
                }
                write!(f, " ")?;
            }
            write_monomial(f, mu, *k)?;
        }
        Ok(())
    }
}
