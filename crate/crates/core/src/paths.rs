//! Quantum alcove paths.
//!
//! A path of type `β_1, …, β_l` starting at `z_0` is a set of fold positions
//! `J = {j_1 < ⋯ < j_r}` with `z_{k+1} = z_k s_{β_{j_{k+1}}}`, admissible when
//! every step `dir(z_k) → dir(z_{k+1})` is an edge of the quantum Bruhat
//! graph (or of the reversed graph). Folds across quantum edges form `J^−`
//! and contribute their `δ`-degree to `deg qwt`.
//!
//! The state carried through the search is `(wt(z), dir(z))`. Folding at
//! `β = γ + Nδ` with `γ = ±γ_c` maps it to
//! `(wt − N·(±1)·dir(α_c), dir·s_{γ_c})`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{AffineCoroot, ExtAffineElt};
use crate::error::{Error, Result};
use crate::lattice::{dot, Weight};
use crate::qbg::{EdgeKind, QuantumBruhatGraph};
use crate::weyl::{format_word, WeylElt};

#[derive(Clone, Copy, Debug)]
struct Step {
    coroot: usize,
    sign: i64,
    deg: i64,
}

/// Coefficients keyed by `(x-exponent, q-exponent)`.
pub type Terms = HashMap<(Weight, i64), i64>;

/// A starting element, a type, and the graph to walk in.
pub struct PathProblem<'g> {
    graph: &'g QuantumBruhatGraph,
    start_wt: Weight,
    start_dir: usize,
    betas: Vec<AffineCoroot>,
    steps: Vec<Step>,
    reversed: bool,
    /// Each positive root as a weight, by coroot index.
    root_weights: Vec<Weight>,
}

/// One admissible fold set and its statistics. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlcovePath {
    pub folds: Vec<usize>,
    pub quantum_folds: Vec<usize>,
    pub end_wt: Weight,
    #[serde(skip)]
    pub end_dir: usize,
    pub qdeg: i64,
}

impl<'g> PathProblem<'g> {
    pub fn new(
        graph: &'g QuantumBruhatGraph,
        start: &ExtAffineElt,
        betas: &[AffineCoroot],
        reversed: bool,
    ) -> Result<PathProblem<'g>> {
        let datum = graph.datum();
        let start_dir = graph
            .group()
            .index_of(&start.dir)
            .ok_or_else(|| Error::Convention("start element is not in the group".into()))?;
        let steps = betas
            .iter()
            .map(|b| {
                if b.re.is_zero() {
                    return Err(Error::ZeroRealPart);
                }
                let (coroot, sign) = datum.signed_coroot_index(&b.re)?;
                Ok(Step {
                    coroot,
                    sign,
                    deg: b.deg,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let root_weights = datum.pos_roots().iter().map(|r| datum.root_to_weight(r)).collect();
        Ok(PathProblem {
            graph,
            start_wt: start.wt.clone(),
            start_dir,
            betas: betas.to_vec(),
            steps,
            reversed,
            root_weights,
        })
    }

    pub fn graph(&self) -> &QuantumBruhatGraph {
        self.graph
    }

    pub fn betas(&self) -> &[AffineCoroot] {
        &self.betas
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The edge crossed by folding at position `p` (0-based) from `dir`.
    #[inline]
    fn fold(&self, dir: usize, p: usize) -> Option<EdgeKind> {
        self.graph.kind_at(dir, self.steps[p].coroot, self.reversed)
    }

    /// Weight increment of a fold at position `p` from `dir`.
    fn fold_shift(&self, dir: usize, p: usize) -> Weight {
        let s = self.steps[p];
        let moved = self
            .graph
            .group()
            .element(dir)
            .act_weight(&self.root_weights[s.coroot]);
        moved.scale(-s.deg * s.sign)
    }

    fn apply(&self, st: &State, p: usize, kind: EdgeKind) -> State {
        let s = self.steps[p];
        let mut folds = st.folds.clone();
        folds.push(p + 1);
        let mut quantum = st.quantum.clone();
        let mut qdeg = st.qdeg;
        if kind == EdgeKind::Quantum {
            quantum.push(p + 1);
            qdeg += s.deg;
        }
        State {
            wt: &st.wt + &self.fold_shift(st.dir, p),
            dir: self.graph.target(st.dir, s.coroot),
            folds,
            quantum,
            qdeg,
        }
    }

    fn root_state(&self) -> State {
        State {
            wt: self.start_wt.clone(),
            dir: self.start_dir,
            folds: vec![],
            quantum: vec![],
            qdeg: 0,
        }
    }

    /// All admissible paths, streamed in lexicographic order of `J`.
    pub fn enumerate(&self) -> PathIter<'_, 'g> {
        PathIter {
            problem: self,
            stack: vec![(self.root_state(), 0)],
            pending: true,
        }
    }

    /// Same paths and order as [`PathProblem::enumerate`], with the subtrees
    /// below each first fold explored in parallel.
    pub fn enumerate_parallel(&self) -> Vec<AlcovePath> {
        let root = self.root_state();
        let mut out = vec![root.to_path()];
        let subtrees: Vec<Vec<AlcovePath>> = (0..self.len())
            .into_par_iter()
            .map(|p| match self.fold(root.dir, p) {
                None => vec![],
                Some(kind) => {
                    let st = self.apply(&root, p, kind);
                    PathIter {
                        problem: self,
                        stack: vec![(st, p + 1)],
                        pending: true,
                    }
                    .collect()
                }
            })
            .collect();
        for s in subtrees {
            out.extend(s);
        }
        out
    }

    /// Number of admissible paths, by dynamic programming over
    /// `(dir, position)`.
    pub fn count(&self) -> u128 {
        let n = self.graph.num_vertices();
        let l = self.len();
        let mut next = vec![1u128; n];
        for p in (0..l).rev() {
            let mut cur = next.clone();
            for (v, slot) in cur.iter_mut().enumerate() {
                if self.fold(v, p).is_some() {
                    *slot += next[self.graph.target(v, self.steps[p].coroot)];
                }
            }
            next = cur;
        }
        next[self.start_dir]
    }

    /// `Σ_J x^{wt(end)} q^{deg qwt}` as a map `(weight, q-degree) → count`,
    /// by dynamic programming over `(dir, position)`; only the directions
    /// reachable from the start are expanded.
    pub fn generating_terms(&self) -> Terms {
        let mut memo: HashMap<(usize, usize), Terms> = HashMap::new();
        let rel = self.relative_terms(self.start_dir, 0, &mut memo);
        rel.iter()
            .map(|((w, q), c)| ((&self.start_wt + w, *q), *c))
            .collect()
    }

    fn relative_terms(
        &self,
        dir: usize,
        p: usize,
        memo: &mut HashMap<(usize, usize), Terms>,
    ) -> Terms {
        if p == self.len() {
            let mut one = HashMap::new();
            one.insert((Weight::zero(self.start_wt.rank()), 0), 1);
            return one;
        }
        if let Some(v) = memo.get(&(dir, p)) {
            return v.clone();
        }
        let mut out = self.relative_terms(dir, p + 1, memo);
        if let Some(kind) = self.fold(dir, p) {
            let s = self.steps[p];
            let shift = self.fold_shift(dir, p);
            let dq = if kind == EdgeKind::Quantum { s.deg } else { 0 };
            let tail = self.relative_terms(self.graph.target(dir, s.coroot), p + 1, memo);
            for ((w, q), c) in tail {
                *out.entry((&w + &shift, q + dq)).or_insert(0) += c;
            }
            out.retain(|_, c| *c != 0);
        }
        memo.insert((dir, p), out.clone());
        out
    }

    /// `z_0, …, z_r` for a fold set (1-based positions).
    pub fn ends(&self, folds: &[usize]) -> Result<Vec<ExtAffineElt>> {
        let datum = self.graph.datum();
        let mut z = ExtAffineElt::new(
            self.start_wt.clone(),
            self.graph.group().element(self.start_dir).clone(),
        );
        let mut out = vec![z.clone()];
        for &j in folds {
            let b = self
                .betas
                .get(j.wrapping_sub(1))
                .ok_or(Error::IndexOutOfRange {
                    index: j,
                    rank: self.len(),
                })?;
            z = z.multiply(&crate::affine::affine_reflection(datum, b)?);
            out.push(z.clone());
        }
        Ok(out)
    }

    pub fn end_dir(&self, path: &AlcovePath) -> &WeylElt {
        self.graph.group().element(path.end_dir)
    }
}

#[derive(Clone)]
struct State {
    wt: Weight,
    dir: usize,
    folds: Vec<usize>,
    quantum: Vec<usize>,
    qdeg: i64,
}

impl State {
    fn to_path(&self) -> AlcovePath {
        AlcovePath {
            folds: self.folds.clone(),
            quantum_folds: self.quantum.clone(),
            end_wt: self.wt.clone(),
            end_dir: self.dir,
            qdeg: self.qdeg,
        }
    }
}

/// Depth-first stream of admissible paths.
pub struct PathIter<'p, 'g> {
    problem: &'p PathProblem<'g>,
    /// Each frame holds a state and the next position to try folding at.
    stack: Vec<(State, usize)>,
    /// Whether the top frame's own path has not been yielded yet.
    pending: bool,
}

impl Iterator for PathIter<'_, '_> {
    type Item = AlcovePath;

    fn next(&mut self) -> Option<AlcovePath> {
        loop {
            if self.pending {
                self.pending = false;
                return self.stack.last().map(|(st, _)| st.to_path());
            }
            let (st, p) = self.stack.last_mut()?;
            let l = self.problem.len();
            let mut child = None;
            while *p < l {
                let q = *p;
                *p += 1;
                if let Some(kind) = self.problem.fold(st.dir, q) {
                    child = Some((self.problem.apply(st, q, kind), q + 1));
                    break;
                }
            }
            match child {
                Some(frame) => {
                    self.stack.push(frame);
                    self.pending = true;
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

/// `Σ_{j ∈ J^−} deg β_j`.
pub fn qwt_degree(betas: &[AffineCoroot], path: &AlcovePath) -> i64 {
    path.quantum_folds.iter().map(|&j| betas[j - 1].deg).sum()
}

/// Check that every real part is a negative coroot, as it must be for the
/// β-sequence of a translation.
pub fn assert_negative_real_parts(betas: &[AffineCoroot]) -> Result<()> {
    match betas.iter().find(|b| !b.re.is_negative()) {
        None => Ok(()),
        Some(b) => Err(Error::Convention(format!("β = {b} has a non-negative real part"))),
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// One CSV record per path: `J`, `J^−`, `wt(end)`, `dir(end)`, `deg qwt`.
pub fn paths_to_csv<W: std::io::Write>(
    problem: &PathProblem<'_>,
    paths: impl IntoIterator<Item = AlcovePath>,
    out: W,
) -> std::result::Result<(), csv::Error> {
    let datum = problem.graph().datum();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["J", "J_minus", "wt", "dir", "qdeg"])?;
    for p in paths {
        w.write_record([
            join(&p.folds),
            join(&p.quantum_folds),
            p.end_wt.to_string(),
            format_word(&problem.end_dir(&p).reduced_word(datum)),
            p.qdeg.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// The same records as JSON objects.
pub fn paths_to_json(problem: &PathProblem<'_>, paths: impl IntoIterator<Item = AlcovePath>) -> serde_json::Value {
    let datum = problem.graph().datum();
    serde_json::Value::Array(
        paths
            .into_iter()
            .map(|p| {
                serde_json::json!({
                    "J": p.folds,
                    "J_minus": p.quantum_folds,
                    "wt": p.end_wt.0,
                    "dir": format_word(&problem.end_dir(&p).reduced_word(datum)),
                    "qdeg": p.qdeg,
                })
            })
            .collect(),
    )
}

/// Whether `Re(z_m β_{j_m})` is negative for the `m`-th fold; this marks the
/// same folds as the quantum edges.
pub fn quantum_by_real_part(problem: &PathProblem<'_>, path: &AlcovePath) -> Result<Vec<usize>> {
    let ends = problem.ends(&path.folds)?;
    Ok(path
        .folds
        .iter()
        .enumerate()
        .filter(|(m, &j)| {
            let b = &problem.betas()[j - 1];
            let z = &ends[m + 1];
            z.act(b).re.is_negative()
        })
        .map(|(_, &j)| j)
        .collect())
}

/// `⟨Re β, λ⟩` summed over the folds; handy in tests.
pub fn pairing_sum(betas: &[AffineCoroot], folds: &[usize], lambda: &Weight) -> i64 {
    folds.iter().map(|&j| dot(&betas[j - 1].re.0, &lambda.0)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{beta_sequence, translation_word, word_element};
    use crate::lattice::{Family, RootDatum};
    use std::sync::Arc;

    fn graph(f: Family, n: usize) -> QuantumBruhatGraph {
        QuantumBruhatGraph::build(Arc::new(RootDatum::build(f, n).unwrap())).unwrap()
    }

    fn translation_problem<'g>(g: &'g QuantumBruhatGraph, lam: &[i64], reversed: bool) -> PathProblem<'g> {
        let d = g.datum();
        let lam = Weight(lam.to_vec());
        let (pi, word) = translation_word(d, &lam).unwrap();
        let t = word_element(d, &pi, &word).unwrap();
        let betas = beta_sequence(d, &word).unwrap();
        PathProblem::new(g, &t, &betas, reversed).unwrap()
    }

    #[test]
    fn empty_type_has_one_path() {
        let g = graph(Family::A, 1);
        let p = PathProblem::new(&g, &ExtAffineElt::identity(1), &[], false).unwrap();
        let all: Vec<_> = p.enumerate().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].folds.is_empty());
        assert_eq!(p.count(), 1);
    }

    #[test]
    fn a1_single_fold() {
        let g = graph(Family::A, 1);
        let p = translation_problem(&g, &[-1], false);
        let all: Vec<_> = p.enumerate().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].end_wt, Weight(vec![-1]));
        assert_eq!(all[1].folds, vec![1]);
        assert_eq!(all[1].end_wt, Weight(vec![1]));
        assert!(all[1].quantum_folds.is_empty());
        assert!(!p.end_dir(&all[1]).is_identity());
    }

    #[test]
    fn g2_fundamental_counts() {
        let g = graph(Family::G, 2);
        assert_eq!(translation_problem(&g, &[-1, 0], false).count(), 15);
        assert_eq!(translation_problem(&g, &[0, -1], false).count(), 7);
        assert_eq!(translation_problem(&g, &[-1, 0], false).enumerate().count(), 15);
    }

    #[test]
    fn streams_agree_with_dp_and_parallel() {
        for (f, n, lam) in [
            (Family::A, 2, vec![-1, -2]),
            (Family::C, 2, vec![-1, -1]),
            (Family::G, 2, vec![-1, -1]),
        ] {
            let g = graph(f, n);
            for reversed in [false, true] {
                let p = translation_problem(&g, &lam, reversed);
                let seq: Vec<_> = p.enumerate().collect();
                assert!(seq.windows(2).all(|w| w[0].folds < w[1].folds));
                assert_eq!(seq, p.enumerate_parallel());
                assert_eq!(seq.len() as u128, p.count());
                let mut terms: HashMap<(Weight, i64), i64> = HashMap::new();
                for path in &seq {
                    assert_eq!(qwt_degree(p.betas(), path), path.qdeg);
                    *terms.entry((path.end_wt.clone(), path.qdeg)).or_insert(0) += 1;
                }
                assert_eq!(terms, p.generating_terms());
            }
        }
    }

    #[test]
    fn quantum_folds_match_real_part_sign() {
        let g = graph(Family::C, 2);
        let p = translation_problem(&g, &[-1, -1], false);
        assert_negative_real_parts(p.betas()).unwrap();
        for path in p.enumerate() {
            assert_eq!(quantum_by_real_part(&p, &path).unwrap(), path.quantum_folds);
            let ends = p.ends(&path.folds).unwrap();
            let last = ends.last().unwrap();
            assert_eq!(last.wt, path.end_wt);
            assert_eq!(&last.dir, p.end_dir(&path));
        }
    }

    #[test]
    fn admissibility_is_prefix_closed() {
        let g = graph(Family::A, 2);
        let p = translation_problem(&g, &[-2, -1], false);
        let all: Vec<Vec<usize>> = p.enumerate().map(|x| x.folds).collect();
        for j in &all {
            for k in 0..j.len() {
                assert!(all.contains(&j[..k].to_vec()));
            }
        }
    }

    #[test]
    fn exports() {
        let g = graph(Family::A, 1);
        let p = translation_problem(&g, &[-2], false);
        let mut buf = Vec::new();
        paths_to_csv(&p, p.enumerate(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 5);
        assert!(text.starts_with("J,J_minus,wt,dir,qdeg"));
        let json = paths_to_json(&p, p.enumerate());
        assert_eq!(json.as_array().unwrap().len(), 4);
    }
}
