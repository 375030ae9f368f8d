//! Root data for the simple types A–G.
//!
//! Three integer lattices appear everywhere: weights in the basis of
//! fundamental weights `ω_i`, roots in the basis of simple roots `α_i`, and
//! coroots in the basis of simple coroots `α_i^∨`. Because `⟨α_i^∨, ω_j⟩ = δ_ij`
//! the pairing of a coroot with a weight is a plain dot product.
//!
//! Node numbering follows Bourbaki, with one exception: in `G2` node 1 carries
//! the long simple root. That is the labeling under which `dim W(ω_1) = 15`
//! and `dim W(ω_2) = 7`, and it is used consistently by every fixture and the
//! command line.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

macro_rules! lattice_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn new(coords: Vec<i64>) -> Self {
                Self(coords)
            }

            pub fn zero(rank: usize) -> Self {
                Self(vec![0; rank])
            }

            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = vec![0; rank];
                v[i] = 1;
                Self(v)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            /// All coordinates non-negative and at least one positive.
            pub fn is_positive(&self) -> bool {
                self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
            }

            pub fn is_negative(&self) -> bool {
                self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
            }

            pub fn scale(&self, k: i64) -> Self {
                Self(self.0.iter().map(|&c| c * k).collect())
            }

            pub fn height(&self) -> i64 {
                self.0.iter().sum()
            }
        }

        impl Index<usize> for $name {
            type Output = i64;
            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl AddAssign<&$name> for $name {
            fn add_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a += b;
                }
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|c| -c).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                rhs.scale(self)
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                Self(v)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    };
}

lattice_vector!(
    /// A weight, in coordinates with respect to the fundamental weights.
    Weight
);
lattice_vector!(
    /// A root, in coordinates with respect to the simple roots.
    Root
);
lattice_vector!(
    /// A coroot, in coordinates with respect to the simple coroots.
    Coroot
);

impl Weight {
    pub fn is_anti_dominant(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Parse comma-separated coordinates, e.g. `"-2,-1"`.
    pub fn parse(s: &str) -> Result<Self> {
        parse_ints(s).map(Weight)
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

pub(crate) fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

/// Coordinate-wise dot product; the pairing between dual bases.
pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Parse a type label such as `"A2"`, `"c3"` or `"G2"`.
pub fn parse_type(s: &str) -> Result<(Family, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let family = chars
        .next()
        .and_then(Family::from_letter)
        .ok_or_else(|| Error::Parse(format!("unknown type {s:?}")))?;
    let rank = chars
        .as_str()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("missing rank in type {s:?}")))?;
    Ok((family, rank))
}

/// Cartan data and the positive roots and coroots of a simple type.
#[derive(Clone, Debug)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    /// `cartan[i][j] = ⟨α_i^∨, α_j⟩`.
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)` normalized so that short roots have squared length 2.
    simple_norms: Vec<i64>,
    pos_roots: Vec<Root>,
    /// `pos_coroots[k]` is the coroot of `pos_roots[k]`.
    pos_coroots: Vec<Coroot>,
    coroot_lookup: HashMap<Vec<i64>, usize>,
    root_lookup: HashMap<Vec<i64>, usize>,
}

impl RootDatum {
    pub fn build(family: Family, rank: usize) -> Result<RootDatum> {
        let cartan = cartan_matrix(family, rank)?;
        Self::from_cartan(family, cartan)
    }

    fn from_cartan(family: Family, cartan: Vec<Vec<i64>>) -> Result<RootDatum> {
        let rank = cartan.len();
        let invalid = |reason| Error::InvalidType {
            family: family.letter(),
            rank,
            reason,
        };
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(invalid("Cartan diagonal must be 2"));
            }
            for j in 0..rank {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(invalid("malformed off-diagonal Cartan entries"));
                }
            }
        }

        let simple_norms = simple_norms(&cartan).ok_or_else(|| invalid("not symmetrizable"))?;
        let pos_roots = close_positive(rank, |i, v| {
            // ⟨α_i^∨, α⟩ for α = Σ v_j α_j
            (0..rank).map(|j| cartan[i][j] * v[j]).sum()
        });

        let mut datum = RootDatum {
            family,
            rank,
            cartan,
            simple_norms,
            pos_roots: pos_roots.into_iter().map(Root).collect(),
            pos_coroots: vec![],
            coroot_lookup: HashMap::new(),
            root_lookup: HashMap::new(),
        };

        // α^∨ = 2α/(α,α); in the simple coroot basis this is
        // Σ_j c_j (α_j,α_j)/(α,α) α_j^∨.
        let mut coroots = Vec::with_capacity(datum.pos_roots.len());
        for root in &datum.pos_roots {
            let norm = datum.root_norm(root);
            let mut c = Vec::with_capacity(rank);
            for j in 0..rank {
                let num = root[j] * datum.simple_norms[j];
                if num % norm != 0 {
                    return Err(invalid("non-integral coroot"));
                }
                c.push(num / norm);
            }
            coroots.push(Coroot(c));
        }
        datum.pos_coroots = coroots;

        for (k, (r, c)) in datum.pos_roots.iter().zip(&datum.pos_coroots).enumerate() {
            datum.root_lookup.insert(r.0.clone(), k);
            datum.coroot_lookup.insert(c.0.clone(), k);
            if dot(&c.0, &datum.root_to_weight(r).0) != 2 {
                return Err(invalid("coroot does not pair to 2 with its root"));
            }
        }
        if datum.coroot_lookup.len() != datum.pos_roots.len() {
            return Err(invalid("coroot map is not injective"));
        }
        Ok(datum)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Type label, e.g. `"C2"`.
    pub fn label(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    /// `cartan()[i][j] = ⟨α_i^∨, α_j⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn pos_roots(&self) -> &[Root] {
        &self.pos_roots
    }

    /// Positive coroots, index-aligned with [`RootDatum::pos_roots`].
    pub fn pos_coroots(&self) -> &[Coroot] {
        &self.pos_coroots
    }

    pub fn num_pos_roots(&self) -> usize {
        self.pos_roots.len()
    }

    pub fn simple_coroot(&self, i: usize) -> Coroot {
        Coroot::unit(self.rank, i)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::unit(self.rank, i)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::unit(self.rank, i)
    }

    /// Index of a positive coroot in [`RootDatum::pos_coroots`].
    pub fn coroot_index(&self, c: &Coroot) -> Option<usize> {
        self.coroot_lookup.get(&c.0).copied()
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.root_lookup.get(&r.0).copied()
    }

    pub fn is_coroot(&self, c: &Coroot) -> bool {
        self.coroot_index(c).is_some() || self.coroot_index(&-c).is_some()
    }

    /// For a coroot of either sign, its positive representative's index and
    /// the sign (`+1` or `-1`).
    pub fn signed_coroot_index(&self, c: &Coroot) -> Result<(usize, i64)> {
        if let Some(k) = self.coroot_index(c) {
            Ok((k, 1))
        } else if let Some(k) = self.coroot_index(&-c) {
            Ok((k, -1))
        } else {
            Err(Error::NotACoroot(c.0.clone()))
        }
    }

    /// The root whose coroot is `c` (either sign).
    pub fn root_of(&self, c: &Coroot) -> Result<Root> {
        let (k, sign) = self.signed_coroot_index(c)?;
        Ok(self.pos_roots[k].scale(sign))
    }

    pub fn coroot_of_root(&self, r: &Root) -> Result<Coroot> {
        if let Some(k) = self.root_index(r) {
            Ok(self.pos_coroots[k].clone())
        } else if let Some(k) = self.root_index(&-r) {
            Ok(-&self.pos_coroots[k])
        } else {
            Err(Error::Parse(format!("{r} is not a root")))
        }
    }

    fn check_rank(&self, got: usize) -> Result<()> {
        if got != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got,
            });
        }
        Ok(())
    }

    /// `⟨c, w⟩`.
    pub fn pair(&self, c: &Coroot, w: &Weight) -> Result<i64> {
        self.check_rank(c.rank())?;
        self.check_rank(w.rank())?;
        Ok(dot(&c.0, &w.0))
    }

    /// `⟨c, α⟩` for a coroot and a root.
    pub fn pair_root(&self, c: &Coroot, r: &Root) -> i64 {
        dot(&c.0, &self.root_to_weight(r).0)
    }

    /// `⟨2ρ, c⟩` with `2ρ` the sum of the positive roots.
    pub fn two_rho_pair(&self, c: &Coroot) -> Result<i64> {
        self.check_rank(c.rank())?;
        Ok(self.pos_roots.iter().map(|r| self.pair_root(c, r)).sum())
    }

    /// Basis change `α_j ↦ Σ_i ⟨α_i^∨, α_j⟩ ω_i`.
    pub fn root_to_weight(&self, r: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * r[j]).sum())
                .collect(),
        )
    }

    /// Express a weight of the root lattice in simple-root coordinates.
    /// Returns `None` if the weight is not in the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Option<Root> {
        use num_rational::Ratio;
        let n = self.rank;
        // Solve cartan · r = w by Gauss–Jordan elimination over the rationals.
        let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> =
                    self.cartan[i].iter().map(|&a| Ratio::from_integer(a)).collect();
                row.push(Ratio::from_integer(w[i]));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| *m[r][col].numer() != 0)?;
            m.swap(col, pivot);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && *m[r][col].numer() != 0 {
                    let f = m[r][col];
                    for c in 0..=n {
                        let v = m[col][c];
                        m[r][c] -= f * v;
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for row in &m {
            let v = row[n];
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(Root(out))
    }

    /// `(α, α)` with short roots normalized to 2.
    pub fn root_norm(&self, r: &Root) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                // (α_i, α_j) = ⟨α_i^∨, α_j⟩ (α_i, α_i) / 2
                s += r[i] * r[j] * self.cartan[i][j] * self.simple_norms[i];
            }
        }
        s / 2
    }

    /// `(γ, γ)` for a coroot, scaled so that short coroots have norm 2.
    pub fn coroot_norm(&self, c: &Coroot) -> i64 {
        // The coroot system has Cartan matrix transpose(cartan) and simple
        // norms proportional to 1/(α_i, α_i).
        let max = *self.simple_norms.iter().max().unwrap();
        let norms: Vec<i64> = self.simple_norms.iter().map(|&d| 2 * max / d).collect();
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += c[i] * c[j] * self.cartan[j][i] * norms[i];
            }
        }
        s / 2
    }

    /// Highest element of `Δ^∨_+` in the dominance order; defines `s_0`.
    pub fn highest_dual_root(&self) -> Coroot {
        let top = self
            .pos_coroots
            .iter()
            .max_by_key(|c| c.height())
            .expect("non-empty root system");
        debug_assert!(self
            .pos_coroots
            .iter()
            .all(|c| (top - c).0.iter().all(|&x| x >= 0)));
        top.clone()
    }

    /// Highest root of `Δ_+`.
    pub fn highest_root(&self) -> Root {
        self.pos_roots
            .iter()
            .max_by_key(|r| r.height())
            .expect("non-empty root system")
            .clone()
    }

    /// Simple reflection on a coroot: `γ − ⟨γ, α_i⟩ α_i^∨`.
    pub fn reflect_coroot(&self, i: usize, c: &Coroot) -> Coroot {
        let p: i64 = (0..self.rank).map(|j| c[j] * self.cartan[j][i]).sum();
        let mut out = c.clone();
        out.0[i] -= p;
        out
    }

    /// Simple reflection on a root: `α − ⟨α_i^∨, α⟩ α_i`.
    pub fn reflect_root(&self, i: usize, r: &Root) -> Root {
        let p: i64 = (0..self.rank).map(|j| self.cartan[i][j] * r[j]).sum();
        let mut out = r.clone();
        out.0[i] -= p;
        out
    }

    /// Order of the Weyl group, from the classification.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of positive roots expected from the classification.
    pub fn expected_num_pos_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

/// Close the set of simple roots under simple reflections, keeping the
/// positive vectors. `pairing(i, v)` must return `⟨α_i^∨, v⟩` in the
/// relevant system. Output is sorted by height, then coordinates.
fn close_positive(rank: usize, pairing: impl Fn(usize, &[i64]) -> i64) -> Vec<Vec<i64>> {
    let mut seen: std::collections::HashSet<Vec<i64>> = Default::default();
    let mut queue: std::collections::VecDeque<Vec<i64>> = Default::default();
    for i in 0..rank {
        let mut v = vec![0; rank];
        v[i] = 1;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..rank {
            let p = pairing(i, &v);
            let mut w = v.clone();
            w[i] -= p;
            if w.iter().all(|&c| c >= 0) && w.iter().any(|&c| c > 0) && seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    out
}

/// Squared lengths of simple roots, short roots normalized to 2.
fn simple_norms(cartan: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = cartan.len();
    // a_ij (α_i,α_i) = a_ji (α_j,α_j); start from a multiple of 6 so that
    // ratios 2 and 3 stay integral.
    let mut d: Vec<Option<i64>> = vec![None; n];
    d[0] = Some(36);
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 {
                    if let (Some(di), None) = (d[i], d[j]) {
                        let num = cartan[i][j] * di;
                        if num % cartan[j][i] != 0 {
                            return None;
                        }
                        d[j] = Some(num / cartan[j][i]);
                        changed = true;
                    }
                }
            }
        }
    }
    let d: Vec<i64> = d.into_iter().collect::<Option<_>>()?;
    let min = *d.iter().min()?;
    if d.iter().any(|x| (2 * x) % min != 0) {
        return None;
    }
    Some(d.iter().map(|x| 2 * x / min).collect())
}

/// Cartan matrix `a_ij = ⟨α_i^∨, α_j⟩`.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    let invalid = |reason| Error::InvalidType {
        family: family.letter(),
        rank,
        reason,
    };
    let ok = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !ok {
        return Err(invalid("no simple Lie algebra of this type and rank"));
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C | Family::F => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::G => link(0, 1),
    }
    match family {
        // α_n short
        Family::B => a[n - 1][n - 2] = -2,
        // α_n long
        Family::C => a[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        Family::F => a[2][1] = -2,
        // α_1 long, α_2 short
        Family::G => a[1][0] = -3,
        _ => {}
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(f: Family, n: usize) -> RootDatum {
        RootDatum::build(f, n).unwrap()
    }

    fn all_types() -> Vec<(Family, usize)> {
        use Family::*;
        vec![
            (A, 1),
            (A, 2),
            (A, 3),
            (A, 4),
            (B, 2),
            (B, 3),
            (B, 4),
            (C, 2),
            (C, 3),
            (C, 4),
            (D, 4),
            (D, 5),
            (E, 6),
            (E, 7),
            (E, 8),
            (F, 4),
            (G, 2),
        ]
    }

    #[test]
    fn a2_cartan_and_roots() {
        let d = datum(Family::A, 2);
        assert_eq!(d.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.num_pos_roots(), 3);
    }

    #[test]
    fn positive_root_counts_match_classification() {
        for (f, n) in all_types() {
            let d = datum(f, n);
            assert_eq!(d.num_pos_roots(), d.expected_num_pos_roots(), "{}", d.label());
            assert_eq!(d.pos_coroots().len(), d.num_pos_roots());
        }
    }

    #[test]
    fn rejects_invalid_types() {
        assert!(RootDatum::build(Family::D, 3).is_err());
        assert!(RootDatum::build(Family::G, 3).is_err());
        assert!(RootDatum::build(Family::B, 1).is_err());
        assert!(RootDatum::build(Family::E, 5).is_err());
        assert!(RootDatum::build(Family::A, 0).is_err());
    }

    #[test]
    fn rank_one() {
        let d = datum(Family::A, 1);
        assert_eq!(d.pos_roots(), &[Root(vec![1])]);
        assert_eq!(d.root_to_weight(&Root(vec![1])), Weight(vec![2]));
    }

    #[test]
    fn g2_coroots_have_coefficient_three_on_first_node() {
        let d = datum(Family::G, 2);
        let mut cs: Vec<_> = d.pos_coroots().iter().map(|c| c.0.clone()).collect();
        cs.sort();
        assert_eq!(
            cs,
            vec![
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2]
            ]
        );
        // α_1 long
        assert_eq!(d.root_norm(&Root(vec![1, 0])), 6);
        assert_eq!(d.root_norm(&Root(vec![0, 1])), 2);
    }

    #[test]
    fn simple_coroots_map_to_simple_roots() {
        for (f, n) in all_types() {
            let d = datum(f, n);
            for i in 0..n {
                assert_eq!(d.coroot_of_root(&d.simple_root(i)).unwrap(), d.simple_coroot(i));
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let d = datum(Family::A, 2);
        for i in 0..2 {
            for j in 0..2 {
                let p = d.pair(&d.simple_coroot(i), &d.fundamental_weight(j)).unwrap();
                assert_eq!(p, (i == j) as i64);
            }
        }
        let theta = Coroot(vec![1, 1]);
        assert_eq!(d.pair(&theta, &Weight(vec![1, 1])).unwrap(), 2);
        assert_eq!(d.pair(&theta, &Weight::zero(2)).unwrap(), 0);
        assert!(matches!(
            d.pair(&theta, &Weight(vec![1])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn two_rho_examples() {
        let d = datum(Family::A, 2);
        assert_eq!(d.two_rho_pair(&Coroot(vec![1, 1])).unwrap(), 4);
        assert_eq!(datum(Family::A, 1).two_rho_pair(&Coroot(vec![1])).unwrap(), 2);
    }

    #[test]
    fn two_rho_is_twice_height_and_minimal_on_simples() {
        for (f, n) in all_types() {
            let d = datum(f, n);
            for c in d.pos_coroots() {
                let v = d.two_rho_pair(c).unwrap();
                assert_eq!(v, 2 * c.height());
                assert!(v >= 2);
                assert_eq!(v == 2, c.height() == 1);
            }
        }
    }

    #[test]
    fn root_to_weight_examples() {
        let d = datum(Family::A, 2);
        assert_eq!(d.root_to_weight(&Root(vec![1, 0])), Weight(vec![2, -1]));
        assert_eq!(d.root_to_weight(&Root(vec![0, 0])), Weight(vec![0, 0]));
    }

    #[test]
    fn closure_and_pairing_invariants() {
        for (f, n) in all_types() {
            let d = datum(f, n);
            for (r, c) in d.pos_roots().iter().zip(d.pos_coroots()) {
                assert_eq!(d.pair(c, &d.root_to_weight(r)).unwrap(), 2);
                for i in 0..n {
                    let s = d.reflect_root(i, r);
                    assert!(d.root_index(&s).is_some() || d.root_index(&-&s).is_some());
                    let sc = d.reflect_coroot(i, c);
                    assert!(d.is_coroot(&sc));
                }
            }
        }
    }

    #[test]
    fn highest_dual_root_examples() {
        assert_eq!(datum(Family::A, 2).highest_dual_root(), Coroot(vec![1, 1]));
        assert_eq!(datum(Family::A, 1).highest_dual_root(), Coroot(vec![1]));
        // C2: the coroot system is of type B2 and its highest element is the
        // long coroot α_1^∨ + 2α_2^∨ (the coroot of the short root α_1 + α_2).
        let d = datum(Family::C, 2);
        let top = d.highest_dual_root();
        assert_eq!(top, Coroot(vec![1, 2]));
        assert_eq!(d.coroot_norm(&top), 4);
        for c in d.pos_coroots() {
            assert!((&top - c).0.iter().all(|&x| x >= 0));
        }
    }

    #[test]
    fn weight_to_root_inverts_basis_change() {
        let d = datum(Family::C, 3);
        for r in d.pos_roots() {
            assert_eq!(d.weight_to_root(&d.root_to_weight(r)).as_ref(), Some(r));
        }
        assert_eq!(datum(Family::A, 1).weight_to_root(&Weight(vec![1])), None);
    }

    #[test]
    fn parse_helpers() {
        assert_eq!(Weight::parse("-2, -1").unwrap(), Weight(vec![-2, -1]));
        assert_eq!(Weight::parse("").unwrap(), Weight(vec![]));
        assert!(Weight::parse("1,x").is_err());
        assert_eq!(parse_type("G2").unwrap(), (Family::G, 2));
        assert!(parse_type("Q2").is_err());
    }
}
