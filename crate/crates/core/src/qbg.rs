//! The quantum Bruhat graph of `Δ^∨`.
//!
//! Vertices are the elements of `W`; an edge `w → w s_γ`, `γ ∈ Δ^∨_+`, is
//! Bruhat when `ℓ(w s_γ) = ℓ(w) + 1` and quantum when
//! `ℓ(w s_γ) = ℓ(w) − ⟨2ρ, γ⟩ + 1`.
//!
//! Besides the length test, three independent descriptions are provided for
//! cross-validation: the circular-order criteria in types A and C, and an
//! obstruction criterion valid in every type.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Coroot, Family, RootDatum, Weight};
use crate::weyl::{format_word, parse_word, WeylElt, WeylGroup, DEFAULT_GROUP_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Bruhat => "bruhat",
            EdgeKind::Quantum => "quantum",
        }
    }
}

#[derive(Debug)]
pub struct QuantumBruhatGraph {
    group: Arc<WeylGroup>,
    reflections: Vec<WeylElt>,
    /// `targets[v * npos + c]` is the index of `w_v s_{γ_c}`.
    targets: Vec<u32>,
    kinds: Vec<Option<EdgeKind>>,
}

fn classify(datum: &RootDatum, l: usize, l2: usize, gamma: &Coroot) -> Option<EdgeKind> {
    let two_rho = 2 * gamma.height();
    debug_assert_eq!(Ok(two_rho), datum.two_rho_pair(gamma));
    if l2 == l + 1 {
        Some(EdgeKind::Bruhat)
    } else if l2 as i64 == l as i64 - two_rho + 1 {
        Some(EdgeKind::Quantum)
    } else {
        None
    }
}

impl QuantumBruhatGraph {
    pub fn build(datum: Arc<RootDatum>) -> Result<QuantumBruhatGraph> {
        Self::build_with_cap(datum, DEFAULT_GROUP_CAP)
    }

    pub fn build_with_cap(datum: Arc<RootDatum>, cap: u128) -> Result<QuantumBruhatGraph> {
        let group = Arc::new(WeylGroup::enumerate_with_cap(datum, cap)?);
        Ok(Self::from_group(group))
    }

    pub fn from_group(group: Arc<WeylGroup>) -> QuantumBruhatGraph {
        let datum = group.datum();
        let reflections: Vec<WeylElt> = datum
            .pos_coroots()
            .iter()
            .map(|g| WeylElt::reflection_of(datum, g).unwrap())
            .collect();
        let npos = reflections.len();
        let mut targets = Vec::with_capacity(group.len() * npos);
        let mut kinds = Vec::with_capacity(group.len() * npos);
        for (v, w) in group.elements().iter().enumerate() {
            let l = group.length_of(v);
            for (c, s) in reflections.iter().enumerate() {
                let t = group.index_of(&w.multiply(s)).expect("group is closed");
                targets.push(t as u32);
                kinds.push(classify(datum, l, group.length_of(t), &datum.pos_coroots()[c]));
            }
        }
        QuantumBruhatGraph {
            group,
            reflections,
            targets,
            kinds,
        }
    }

    pub fn datum(&self) -> &RootDatum {
        self.group.datum()
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn num_vertices(&self) -> usize {
        self.group.len()
    }

    pub fn num_edges(&self) -> usize {
        self.kinds.iter().filter(|k| k.is_some()).count()
    }

    pub fn num_quantum_edges(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| **k == Some(EdgeKind::Quantum))
            .count()
    }

    /// The reflection `s_γ` for the positive coroot with index `c`.
    pub fn reflection(&self, c: usize) -> &WeylElt {
        &self.reflections[c]
    }

    /// Index of `w_v s_{γ_c}`.
    #[inline]
    pub fn target(&self, v: usize, c: usize) -> usize {
        self.targets[v * self.reflections.len() + c] as usize
    }

    /// Kind of the edge `w_v → w_v s_{γ_c}`; in reversed mode, of the edge
    /// `w_v s_{γ_c} → w_v`.
    #[inline]
    pub fn kind_at(&self, v: usize, c: usize, reversed: bool) -> Option<EdgeKind> {
        let npos = self.reflections.len();
        if reversed {
            self.kinds[self.target(v, c) * npos + c]
        } else {
            self.kinds[v * npos + c]
        }
    }

    /// Edge lookup by element and coroot of either sign.
    pub fn edge_kind(&self, w: &WeylElt, gamma: &Coroot, reversed: bool) -> Result<Option<EdgeKind>> {
        let (c, _) = self.datum().signed_coroot_index(gamma)?;
        let v = self
            .group
            .index_of(w)
            .ok_or_else(|| Error::Convention("element not in the enumerated group".into()))?;
        Ok(self.kind_at(v, c, reversed))
    }

    /// All edges as `(source, coroot index, target, kind)`, in vertex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize, EdgeKind)> + '_ {
        let npos = self.reflections.len();
        self.kinds.iter().enumerate().filter_map(move |(k, kind)| {
            kind.map(|kind| (k / npos, k % npos, self.targets[k] as usize, kind))
        })
    }

    fn vertex_word(&self, v: usize) -> String {
        format_word(&self.group.element(v).reduced_word(self.datum()))
    }

    /// Deterministic Graphviz output. Quantum edges are dashed and carry
    /// `kind="quantum"`.
    pub fn export_dot(&self) -> String {
        let datum = self.datum();
        let words: Vec<String> = (0..self.num_vertices()).map(|v| self.vertex_word(v)).collect();
        let mut out = String::new();
        writeln!(out, "digraph QBG_{} {{", datum.label()).unwrap();
        for w in &words {
            writeln!(out, "  \"{w}\" [label=\"{w}\"];").unwrap();
        }
        for (v, c, t, kind) in self.edges() {
            let label = &datum.pos_coroots()[c];
            match kind {
                EdgeKind::Bruhat => writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [label=\"{label}\", kind=\"bruhat\"];",
                    words[v], words[t]
                ),
                EdgeKind::Quantum => writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [label=\"{label}\", kind=\"quantum\", style=dashed];",
                    words[v], words[t]
                ),
            }
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        let datum = self.datum();
        let mut vertices: Vec<String> = (0..self.num_vertices()).map(|v| self.vertex_word(v)).collect();
        let mut edges: Vec<EdgeJson> = self
            .edges()
            .map(|(v, c, _, kind)| EdgeJson {
                src: self.vertex_word(v),
                label: datum.pos_coroots()[c].0.clone(),
                kind,
            })
            .collect();
        vertices.sort();
        edges.sort();
        GraphJson {
            family: datum.family().letter().to_string(),
            rank: datum.rank(),
            vertices,
            edges,
        }
    }

    /// Rebuild from serialized form, checking that it describes a graph on
    /// the full group of the given type.
    pub fn from_json(group: Arc<WeylGroup>, json: &GraphJson) -> Result<QuantumBruhatGraph> {
        let datum = group.datum();
        let n = datum.rank();
        if json.rank != n || json.family != datum.family().letter().to_string() {
            return Err(Error::Parse(format!(
                "graph is for {}{}, expected {}",
                json.family,
                json.rank,
                datum.label()
            )));
        }
        if json.vertices.len() != group.len() {
            return Err(Error::Parse("vertex count does not match |W|".into()));
        }
        let reflections: Vec<WeylElt> = datum
            .pos_coroots()
            .iter()
            .map(|g| WeylElt::reflection_of(datum, g).unwrap())
            .collect();
        let npos = reflections.len();
        let mut targets = Vec::with_capacity(group.len() * npos);
        for w in group.elements() {
            for s in &reflections {
                targets.push(group.index_of(&w.multiply(s)).unwrap() as u32);
            }
        }
        let mut kinds = vec![None; group.len() * npos];
        for e in &json.edges {
            let w = WeylElt::from_word(datum, &parse_word(&e.src, n)?)?;
            let v = group.index_of(&w).unwrap();
            let c = datum
                .coroot_index(&Coroot(e.label.clone()))
                .ok_or_else(|| Error::NotACoroot(e.label.clone()))?;
            kinds[v * npos + c] = Some(e.kind);
        }
        Ok(QuantumBruhatGraph {
            group,
            reflections,
            targets,
            kinds,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub family: String,
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeJson {
    pub src: String,
    pub label: Vec<i64>,
    pub kind: EdgeKind,
}

/// Coordinates of a weight in the `ε` basis, with `ω_i = ε_1 + ⋯ + ε_i`.
/// Valid for types A (with `n + 1` coordinates) and C.
fn epsilon_coords(lambda: &Weight, len: usize) -> Vec<i64> {
    let n = lambda.rank();
    (0..len)
        .map(|k| (k..n).map(|i| lambda[i]).sum())
        .collect()
}

fn require(datum: &RootDatum, family: Family) -> Result<()> {
    if datum.family() != family {
        return Err(Error::InvalidType {
            family: datum.family().letter(),
            rank: datum.rank(),
            reason: "criterion applies to a different type",
        });
    }
    Ok(())
}

/// `w` as a permutation of `1..=n+1`, via `w(ε_j) = ε_{w(j)}`.
pub fn permutation_type_a(datum: &RootDatum, w: &WeylElt) -> Result<Vec<usize>> {
    require(datum, Family::A)?;
    let n = datum.rank();
    let mut images = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // ε_{j+1} = ω_{j+1} − ω_j
        let mut eps = Weight::zero(n);
        if j < n {
            eps.0[j] += 1;
        }
        if j > 0 {
            eps.0[j - 1] -= 1;
        }
        let e = epsilon_coords(&w.act_weight(&eps), n + 1);
        // ε_k for k ≤ n is a unit vector; ε_{n+1} ≡ −(ε_1 + ⋯ + ε_n).
        let image = if let Some(k) = (0..n + 1).find(|&k| e[k] == 1) {
            k + 1
        } else {
            n + 1
        };
        images.push(image);
    }
    Ok(images)
}

/// The positive coroot `ε_i − ε_j` of `A_n`, `1 ≤ i < j ≤ n + 1`.
pub fn type_a_coroot(n: usize, i: usize, j: usize) -> Coroot {
    let mut c = vec![0; n];
    for x in c.iter_mut().take(j - 1).skip(i - 1) {
        *x = 1;
    }
    Coroot(c)
}

/// Whether `a ≺ b ≺ c` in the circular order on `1..=m` starting at `a`.
fn circular(a: usize, b: usize, c: usize, m: usize) -> bool {
    let db = (b + m - a) % m;
    let dc = (c + m - a) % m;
    0 < db && db < dc
}

/// Edge `w → w s_{α_ij}` in type `A_n` by the circular-order criterion:
/// it exists iff there is no `i < k < j` with `w(i) ≺ w(k) ≺ w(j)`, and it is
/// quantum iff `w(i) > w(j)`.
pub fn lenart_edge_type_a(datum: &RootDatum, w: &WeylElt, i: usize, j: usize) -> Result<Option<EdgeKind>> {
    let p = permutation_type_a(datum, w)?;
    let m = datum.rank() + 1;
    if !(1 <= i && i < j && j <= m) {
        return Err(Error::IndexOutOfRange { index: j, rank: m });
    }
    let (wi, wj) = (p[i - 1], p[j - 1]);
    if (i + 1..j).any(|k| circular(wi, p[k - 1], wj, m)) {
        return Ok(None);
    }
    Ok(Some(if wi > wj { EdgeKind::Quantum } else { EdgeKind::Bruhat }))
}

/// `w` as a signed permutation: `w(ε_j) = ±ε_k` recorded as `±k`.
pub fn signed_permutation_type_c(datum: &RootDatum, w: &WeylElt) -> Result<Vec<i64>> {
    require(datum, Family::C)?;
    let n = datum.rank();
    (0..n)
        .map(|j| {
            let mut eps = Weight::zero(n);
            eps.0[j] += 1;
            if j > 0 {
                eps.0[j - 1] -= 1;
            }
            let e = epsilon_coords(&w.act_weight(&eps), n);
            let k = e.iter().position(|&x| x != 0).expect("unit vector");
            Ok((k as i64 + 1) * e[k])
        })
        .collect()
}

/// Positive coroots of `C_n`, by the root they belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeCClass {
    /// `ε_i − ε_j`, `i < j`.
    Difference(usize, usize),
    /// `ε_i + ε_j`, `i < j`.
    Sum(usize, usize),
    /// `2ε_i`, whose coroot is `ε_i`.
    Long(usize),
}

impl TypeCClass {
    pub fn all(n: usize) -> Vec<TypeCClass> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(TypeCClass::Difference(i, j));
                out.push(TypeCClass::Sum(i, j));
            }
            out.push(TypeCClass::Long(i));
        }
        out
    }

    /// The coroot in simple-coroot coordinates, where
    /// `α_k^∨ = ε_k − ε_{k+1}` and `α_n^∨ = ε_n`.
    pub fn coroot(self, n: usize) -> Coroot {
        // ε vector → coefficients: c_k = e_1 + ⋯ + e_k for k < n, c_n = e_1 + ⋯ + e_n.
        let mut e = vec![0i64; n];
        match self {
            TypeCClass::Difference(i, j) => {
                e[i - 1] += 1;
                e[j - 1] -= 1;
            }
            TypeCClass::Sum(i, j) => {
                e[i - 1] += 1;
                e[j - 1] += 1;
            }
            TypeCClass::Long(i) => e[i - 1] += 1,
        }
        let mut c = vec![0; n];
        let mut acc = 0;
        for k in 0..n {
            acc += e[k];
            c[k] = acc;
        }
        Coroot(c)
    }
}

/// Edge `w → w s_γ` in type `C_n` by the circular-order criterion on the
/// alphabet `1 < ⋯ < n < n̄ < ⋯ < 1̄`.
///
/// For `ε_i + ε_j` the edge exists iff `w(i) < w(j̄)`, both have the same
/// sign, and no `i < k < j̄` has `w(i) < w(k) < w(j̄)`; such edges are never
/// quantum.
pub fn lenart_edge_type_c(datum: &RootDatum, w: &WeylElt, class: TypeCClass) -> Result<Option<EdgeKind>> {
    let p = signed_permutation_type_c(datum, w)?;
    let n = datum.rank() as i64;
    let m = 2 * n as usize;
    // position of a signed letter in the alphabet, 1-based
    let pos = |a: i64| -> usize { if a > 0 { a as usize } else { (2 * n + 1 + a) as usize } };
    let image = |a: i64| -> i64 { if a > 0 { p[a as usize - 1] } else { -p[(-a) as usize - 1] } };
    let letters_between = |a: i64, b: i64| -> Vec<i64> {
        (pos(a) + 1..pos(b))
            .map(|r| if r as i64 <= n { r as i64 } else { r as i64 - 2 * n - 1 })
            .collect()
    };
    let circular_case = |a: i64, b: i64| -> Option<EdgeKind> {
        let (wa, wb) = (pos(image(a)), pos(image(b)));
        if letters_between(a, b).into_iter().any(|k| circular(wa, pos(image(k)), wb, m)) {
            None
        } else if wa > wb {
            Some(EdgeKind::Quantum)
        } else {
            Some(EdgeKind::Bruhat)
        }
    };
    let check = |i: usize, j: usize| -> Result<()> {
        if i == 0 || j as i64 > n || i > j {
            return Err(Error::IndexOutOfRange { index: j, rank: n as usize });
        }
        Ok(())
    };
    Ok(match class {
        TypeCClass::Difference(i, j) => {
            check(i, j)?;
            circular_case(i as i64, j as i64)
        }
        TypeCClass::Long(i) => {
            check(i, i)?;
            circular_case(i as i64, -(i as i64))
        }
        TypeCClass::Sum(i, j) => {
            check(i, j)?;
            let (a, b) = (i as i64, -(j as i64));
            let (wa, wb) = (image(a), image(b));
            let same_sign = (wa > 0) == (wb > 0);
            let (ra, rb) = (pos(wa), pos(wb));
            let blocked = letters_between(a, b).into_iter().any(|k| {
                let rk = pos(image(k));
                ra < rk && rk < rb
            });
            (ra < rb && same_sign && !blocked).then_some(EdgeKind::Bruhat)
        }
    })
}

/// The literal reading of the type-2 clause, `w(i) > w(j̄)` with no
/// `i < k < j` having `w(i) < w(k) < w(j)`. Kept for the record; it does
/// not describe the graph.
pub fn lenart_type_c_sum_literal(datum: &RootDatum, w: &WeylElt, i: usize, j: usize) -> Result<bool> {
    let p = signed_permutation_type_c(datum, w)?;
    let n = datum.rank() as i64;
    let pos = |a: i64| -> i64 { if a > 0 { a } else { 2 * n + 1 + a } };
    let wi = pos(p[i - 1]);
    let wjbar = pos(-p[j - 1]);
    let wj = pos(p[j - 1]);
    let blocked = (i + 1..j).any(|k| {
        let wk = pos(p[k - 1]);
        wi < wk && wk < wj
    });
    Ok(wi > wjbar && !blocked)
}

/// Rank-two subsystems `Δ^∨ ∩ span(τ, η)` that contain two root lengths,
/// each given by its positive coroots.
fn non_simply_laced_rank_two(datum: &RootDatum) -> Vec<Vec<usize>> {
    let pos = datum.pos_coroots();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..pos.len() {
        for b in a + 1..pos.len() {
            let members: Vec<usize> = (0..pos.len())
                .filter(|&c| in_span(&pos[a], &pos[b], &pos[c]))
                .collect();
            let norms: BTreeSet<i64> = members
                .iter()
                .map(|&c| datum.root_norm(&datum.pos_roots()[c]))
                .collect();
            if norms.len() > 1 {
                seen.insert(members);
            }
        }
    }
    seen.into_iter().collect()
}

fn in_span(a: &Coroot, b: &Coroot, c: &Coroot) -> bool {
    // all 3×3 minors of the matrix with rows a, b, c vanish
    let n = a.rank();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let det = a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i])
                    + a[k] * (b[i] * c[j] - b[j] * c[i]);
                if det != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `γ` belongs to a short root (equivalently, is a long coroot) and
/// is not simple in some rank-two subsystem with two root lengths. Simple
/// means indecomposable as a sum of two positive coroots of the subsystem.
pub fn is_short_nonsimple_in_rank_two(datum: &RootDatum, gamma: &Coroot) -> bool {
    let Some(g) = datum.coroot_index(gamma) else {
        return false;
    };
    let pos = datum.pos_coroots();
    let roots = datum.pos_roots();
    non_simply_laced_rank_two(datum).into_iter().any(|members| {
        if !members.contains(&g) {
            return false;
        }
        let max = members.iter().map(|&c| datum.root_norm(&roots[c])).max().unwrap();
        let short = datum.root_norm(&roots[g]) < max;
        let decomposable = members
            .iter()
            .any(|&a| members.iter().any(|&b| &pos[a] + &pos[b] == *gamma));
        short && decomposable
    })
}

/// Edge existence by the obstruction criterion. With
/// `σ̂(x) = σx + [σx < 0]δ`, the edge `σ → σ s_γ` exists iff no positive
/// `α, β ≠ γ` satisfy `α + β = cγ` and `σ̂α + σ̂β = σ̂(cγ)`, where
/// `c = 2(α, γ)/(γ, γ)`; when `σγ < 0`, `γ` must in addition not come from a
/// short nonsimple root of a rank-two subsystem.
pub fn criterion_edge(datum: &RootDatum, sigma: &WeylElt, gamma: &Coroot) -> Result<bool> {
    obstruction_test(datum, sigma, gamma, false)
}

/// The same test with the right-hand side read as `c·σ̂(γ)`, which carries
/// `c·[σγ < 0]` copies of `δ`. It differs from [`criterion_edge`] only when
/// `c ≥ 2` and `σγ < 0`.
pub fn criterion_edge_scalar_outside(datum: &RootDatum, sigma: &WeylElt, gamma: &Coroot) -> Result<bool> {
    obstruction_test(datum, sigma, gamma, true)
}

fn obstruction_test(datum: &RootDatum, sigma: &WeylElt, gamma: &Coroot, scalar_outside: bool) -> Result<bool> {
    let root = datum.root_of(gamma)?;
    if !gamma.is_positive() {
        return Err(Error::Convention("criterion expects a positive coroot".into()));
    }
    let neg = |c: &Coroot| sigma.act_coroot(c).is_negative() as i64;
    let ng = neg(gamma);
    for alpha in datum.pos_coroots() {
        if alpha == gamma {
            continue;
        }
        let c = datum.pair_root(alpha, &root);
        let beta = &gamma.scale(c) - alpha;
        if beta == *gamma || datum.coroot_index(&beta).is_none() {
            continue;
        }
        let rhs = if scalar_outside { c * ng } else { ng };
        if neg(alpha) + neg(&beta) == rhs {
            return Ok(false);
        }
    }
    if ng == 1 && is_short_nonsimple_in_rank_two(datum, gamma) {
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(f: Family, n: usize) -> QuantumBruhatGraph {
        QuantumBruhatGraph::build(Arc::new(RootDatum::build(f, n).unwrap())).unwrap()
    }

    #[test]
    fn a1_graph() {
        let g = graph(Family::A, 1);
        assert_eq!(g.num_vertices(), 2);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 0, 1, EdgeKind::Bruhat), (1, 0, 0, EdgeKind::Quantum)]);
    }

    #[test]
    fn a2_edge_examples() {
        let g = graph(Family::A, 2);
        let d = g.datum();
        // 6 two-way pairs on simple labels, s_1 → s_2s_1 and s_2 → s_1s_2 on
        // θ^∨, and the long arrow w_0 → id
        assert_eq!(g.num_edges(), 15);
        assert_eq!(g.num_quantum_edges(), 7);
        let w0 = WeylElt::from_word(d, &[0, 1, 0]).unwrap();
        let theta = Coroot(vec![1, 1]);
        assert_eq!(g.edge_kind(&w0, &theta, false).unwrap(), Some(EdgeKind::Quantum));
        assert_eq!(g.edge_kind(&w0, &-&theta, false).unwrap(), Some(EdgeKind::Quantum));
        let id = WeylElt::identity(2);
        assert_eq!(g.edge_kind(&id, &theta, false).unwrap(), None);
        for i in 0..2 {
            assert_eq!(
                g.edge_kind(&id, &d.simple_coroot(i), false).unwrap(),
                Some(EdgeKind::Bruhat)
            );
        }
        // reversed mode at id reads the edge s_θ = w_0 → id
        assert_eq!(g.edge_kind(&id, &theta, true).unwrap(), Some(EdgeKind::Quantum));
        assert_eq!(g.edge_kind(&w0, &theta, true).unwrap(), None);
        let s1 = WeylElt::simple_reflection(d, 0).unwrap();
        assert_eq!(g.edge_kind(&s1, &d.simple_coroot(0), true).unwrap(), Some(EdgeKind::Bruhat));
        assert_eq!(g.edge_kind(&id, &d.simple_coroot(0), true).unwrap(), Some(EdgeKind::Quantum));
        assert!(g.edge_kind(&id, &Coroot(vec![2, 1]), false).is_err());
    }

    #[test]
    fn c2_long_quantum_arrows() {
        let g = graph(Family::C, 2);
        assert_eq!(g.num_vertices(), 8);
        let d = g.datum();
        // quantum edges for the coroots of α_1 + α_2 and 2α_1 + α_2 (s_{α}
        // has length 3 for both, ⟨2ρ, γ⟩ = 6 and 4)
        let w0 = WeylElt::longest(d);
        for c in d.pos_coroots() {
            let k = g.edge_kind(&w0, c, false).unwrap();
            let s = WeylElt::reflection_of(d, c).unwrap();
            let expected = (w0.multiply(&s).length(d) as i64 == 4 - 2 * c.height() + 1)
                .then_some(EdgeKind::Quantum);
            assert_eq!(k, expected);
        }
    }

    #[test]
    fn dot_export_is_deterministic_and_styled() {
        let g = graph(Family::A, 1);
        let dot = g.export_dot();
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert_eq!(dot.matches("style=dashed").count(), 1);
        assert!(dot.contains("kind=\"quantum\""));
        assert_eq!(dot, graph(Family::A, 1).export_dot());
        let a2 = graph(Family::A, 2).export_dot();
        assert_eq!(a2.matches(" -> ").count(), 15);
        assert_eq!(a2.matches("[label=\"").count(), 6 + 15);
    }

    #[test]
    fn json_round_trip() {
        let g = graph(Family::C, 2);
        let j = g.to_json();
        assert!(j.vertices.windows(2).all(|w| w[0] <= w[1]));
        assert!(j.edges.windows(2).all(|w| w[0] <= w[1]));
        let back = QuantumBruhatGraph::from_json(g.group().clone(), &j).unwrap();
        assert_eq!(back.kinds, g.kinds);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"kind\":\"quantum\""));
    }

    #[test]
    fn type_a_permutations() {
        let d = RootDatum::build(Family::A, 2).unwrap();
        let w0 = WeylElt::from_word(&d, &[0, 1, 0]).unwrap();
        assert_eq!(permutation_type_a(&d, &w0).unwrap(), vec![3, 2, 1]);
        let s1 = WeylElt::simple_reflection(&d, 0).unwrap();
        assert_eq!(permutation_type_a(&d, &s1).unwrap(), vec![2, 1, 3]);
        assert_eq!(
            lenart_edge_type_a(&d, &w0, 1, 3).unwrap(),
            Some(EdgeKind::Quantum)
        );
        let a1 = RootDatum::build(Family::A, 1).unwrap();
        assert_eq!(
            lenart_edge_type_a(&a1, &WeylElt::identity(1), 1, 2).unwrap(),
            Some(EdgeKind::Bruhat)
        );
        assert!(lenart_edge_type_a(&RootDatum::build(Family::C, 2).unwrap(), &WeylElt::identity(2), 1, 2).is_err());
    }

    #[test]
    fn type_c_classes_are_coroots() {
        for n in 2..=4 {
            let d = RootDatum::build(Family::C, n).unwrap();
            let mut got: Vec<Coroot> = TypeCClass::all(n).into_iter().map(|c| c.coroot(n)).collect();
            got.sort();
            let mut want = d.pos_coroots().to_vec();
            want.sort();
            assert_eq!(got, want);
        }
        let d = RootDatum::build(Family::C, 2).unwrap();
        // 2ε_2 = α_2 is simple; s_{2ε_1} has length 3
        let id = WeylElt::identity(2);
        assert_eq!(lenart_edge_type_c(&d, &id, TypeCClass::Long(2)).unwrap(), Some(EdgeKind::Bruhat));
        assert_eq!(lenart_edge_type_c(&d, &id, TypeCClass::Long(1)).unwrap(), None);
    }

    #[test]
    fn simple_coroots_always_give_edges() {
        for (f, n) in [(Family::A, 3), (Family::C, 3), (Family::G, 2), (Family::B, 3)] {
            let g = graph(f, n);
            let d = g.datum();
            for w in g.group().elements() {
                for i in 0..n {
                    assert!(g.edge_kind(w, &d.simple_coroot(i), false).unwrap().is_some());
                    assert!(criterion_edge(d, w, &d.simple_coroot(i)).unwrap());
                }
            }
        }
    }
}
