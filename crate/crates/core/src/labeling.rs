//! Labelings of bipartite graphs that separate adjacent vertices.
//!
//! Given per-vertex polynomials `f_v` with positive leading coefficients and
//! degree at most `l`, and an orientation with outdegree at most `k`, there is a
//! labeling `c` from lists of size `kl + 1` with
//! `c(u) − Σ_{v∈N(u)} f_v(c(v)) ≠ c(w) − Σ_{v∈N(w)} f_v(c(v))` on every edge.
//! The labeling is read off a nonvanishing point of the edge product
//! `h = ∏_{uw} (Σ_{N(u)} f_v(x_v) + x_w − Σ_{N(w)} f_v(x_v) − x_u)`, whose
//! monomial built from the orientation has a nonzero coefficient.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::nss::{self, Grid};
use crate::poly::{Monomial, Polynomial, Ring};

/// A simple undirected graph on vertices `0..n`. Edges are stored as `(u, w)` with `u < w`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} references a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, w) in &list {
            adj[u].push(w);
            adj[w].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Reads the `p <n> <m>` / `e <u> <w>` text format; lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::InvalidGraph(format!("line {}: cannot parse {line:?}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let nums = |s: &[&str]| -> Result<(usize, usize)> {
                match s {
                    [a, b] => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
                    _ => Err(bad()),
                }
            };
            match fields[0] {
                "p" if header.is_none() => header = Some(nums(&fields[1..])?),
                "e" if header.is_some() => edges.push(nums(&fields[1..])?),
                _ => return Err(bad()),
            }
        }
        let (n, m) = header.ok_or_else(|| Error::InvalidGraph("missing 'p' line".into()))?;
        if edges.len() != m {
            return Err(Error::InvalidGraph(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("p {} {}\n", self.n, self.edges.len());
        for (u, w) in &self.edges {
            s.push_str(&format!("e {u} {w}\n"));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    /// Side (0 or 1) of each vertex.
    pub side: Vec<u8>,
    pub parts: [Vec<usize>; 2],
}

/// Two-colors the graph by breadth-first search, or returns an odd cycle.
pub fn check_bipartite(g: &Graph) -> Result<Bipartition> {
    let n = g.vertex_count();
    let mut side: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are colored");
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(1 - su);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(Error::NotBipartite {
                            cycle: odd_cycle(&parent, u, w),
                        })
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let side: Vec<u8> = side.into_iter().map(|s| s.expect("all colored")).collect();
    let mut parts = [Vec::new(), Vec::new()];
    for (v, &s) in side.iter().enumerate() {
        parts[s as usize].push(v);
    }
    Ok(Bipartition { side, parts })
}

/// Closes the tree paths from `u` and `w` (same color, adjacent) into a cycle.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pu = path(u);
    let pw = path(w);
    let lca = *pu.iter().find(|v| pw.contains(v)).expect("same component");
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&v| v != lca).collect();
    cycle.push(lca);
    let tail: Vec<usize> = pw.iter().copied().take_while(|&v| v != lca).collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

/// Each edge directed `tail -> head`, aligned with [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
    pub outdegree: Vec<usize>,
}

impl Orientation {
    pub fn max_outdegree(&self) -> usize {
        self.outdegree.iter().copied().max().unwrap_or(0)
    }
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, c: usize) -> usize {
        let id = self.to.len();
        self.head[u].push(id);
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        id
    }

    fn levels(&self, s: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.head.len()];
        level[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.head[u] {
                let v = self.to[id];
                if self.cap[id] > 0 && level[v].is_none() {
                    level[v] = Some(level[u].expect("visited") + 1);
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(
        &mut self,
        u: usize,
        t: usize,
        pushed: usize,
        level: &[Option<usize>],
        next: &mut [usize],
    ) -> usize {
        if u == t {
            return pushed;
        }
        while next[u] < self.head[u].len() {
            let id = self.head[u][next[u]];
            let v = self.to[id];
            if self.cap[id] > 0 && level[v] == level[u].map(|l| l + 1) {
                let got = self.augment(v, t, pushed.min(self.cap[id]), level, next);
                if got > 0 {
                    self.cap[id] -= got;
                    self.cap[id ^ 1] += got;
                    return got;
                }
            }
            next[u] += 1;
        }
        0
    }

    /// Dinic's algorithm.
    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            let level = self.levels(s);
            if level[t].is_none() {
                return total;
            }
            let mut next = vec![0; self.head.len()];
            loop {
                let got = self.augment(s, t, usize::MAX, &level, &mut next);
                if got == 0 {
                    break;
                }
                total += got;
            }
        }
    }
}

/// Orients every edge so that no vertex has more than `k` outgoing edges.
///
/// Flow network: source → edge node (capacity 1) → either endpoint → sink
/// (capacity `k`). An edge is directed away from the endpoint that receives its
/// unit. On failure the error carries a vertex set `H` with `|E(H)| > k·|H|`.
pub fn orient_bounded_outdegree(g: &Graph, k: usize) -> Result<Orientation> {
    let m = g.edges().len();
    let n = g.vertex_count();
    let source = 0;
    let sink = 1;
    let edge_node = |e: usize| 2 + e;
    let vertex_node = |v: usize| 2 + m + v;
    let mut net = FlowNet::new(2 + m + n);
    let mut choice = Vec::with_capacity(m);
    for (e, &(u, w)) in g.edges().iter().enumerate() {
        net.add_arc(source, edge_node(e), 1);
        // m + 1 behaves as infinite here and keeps the min cut closed under endpoints
        let to_u = net.add_arc(edge_node(e), vertex_node(u), m + 1);
        let to_w = net.add_arc(edge_node(e), vertex_node(w), m + 1);
        choice.push((to_u, to_w));
    }
    for v in 0..n {
        net.add_arc(vertex_node(v), sink, k);
    }
    let flow = net.max_flow(source, sink);
    if flow < m {
        let level = net.levels(source);
        let vertices: Vec<usize> = (0..n)
            .filter(|&v| level[vertex_node(v)].is_some())
            .collect();
        let edges = g
            .edges()
            .iter()
            .filter(|(u, w)| vertices.contains(u) && vertices.contains(w))
            .count();
        return Err(Error::Infeasible { k, vertices, edges });
    }
    let mut outdegree = vec![0; n];
    let arcs = g
        .edges()
        .iter()
        .zip(&choice)
        .map(|(&(u, w), &(to_u, _))| {
            // residual on the reverse arc means the unit went to u
            let (tail, head) = if net.cap[to_u ^ 1] > 0 {
                (u, w)
            } else {
                (w, u)
            };
            outdegree[tail] += 1;
            (tail, head)
        })
        .collect();
    Ok(Orientation { arcs, outdegree })
}

/// Smallest `k` admitting an orientation with outdegree at most `k`.
pub fn min_outdegree_bound(g: &Graph) -> (usize, Orientation) {
    let mut k = 0;
    loop {
        if let Ok(o) = orient_bounded_outdegree(g, k) {
            return (k, o);
        }
        k += 1;
    }
}

/// Graph, vertex polynomials over ℚ, bounds `k` and `l`, and optional label lists.
#[derive(Debug, Clone)]
pub struct LabelingInstance {
    pub graph: Graph,
    pub vertex_polys: Vec<Polynomial>,
    pub k: usize,
    pub l: usize,
    pub label_lists: Option<Vec<Vec<FieldValue>>>,
}

impl LabelingInstance {
    /// Validates the hypotheses on the vertex polynomials and label lists.
    pub fn new(
        graph: Graph,
        vertex_polys: Vec<Polynomial>,
        k: usize,
        l: usize,
        label_lists: Option<Vec<Vec<FieldValue>>>,
    ) -> Result<Self> {
        let inst = Self::new_unchecked(graph, vertex_polys, k, l, label_lists)?;
        for (v, f) in inst.vertex_polys.iter().enumerate() {
            let deg = f.total_degree().unwrap_or(0);
            if deg == 0 {
                return Err(Error::InvalidInstance(format!("f_{v} is constant")));
            }
            if deg > l as u64 {
                return Err(Error::InvalidInstance(format!(
                    "f_{v} has degree {deg} > l = {l}"
                )));
            }
            let (_, lc) = f.leading_term().expect("nonconstant");
            if !lc.is_positive() {
                return Err(Error::InvalidInstance(format!(
                    "f_{v} has non-positive leading coefficient {lc}"
                )));
            }
        }
        if let Some(lists) = &inst.label_lists {
            let need = k * l + 1;
            for (v, list) in lists.iter().enumerate() {
                if list.len() < need {
                    return Err(Error::InvalidInstance(format!(
                        "label list of vertex {v} has {} entries, needs {need}",
                        list.len()
                    )));
                }
            }
        }
        Ok(inst)
    }

    /// Checks only shapes (one univariate rational polynomial per vertex,
    /// duplicate-free lists), leaving the degree and sign hypotheses unchecked.
    pub fn new_unchecked(
        graph: Graph,
        vertex_polys: Vec<Polynomial>,
        k: usize,
        l: usize,
        label_lists: Option<Vec<Vec<FieldValue>>>,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        if vertex_polys.len() != n {
            return Err(Error::InvalidInstance(format!(
                "{} vertex polynomials for {n} vertices",
                vertex_polys.len()
            )));
        }
        for (v, f) in vertex_polys.iter().enumerate() {
            if f.arity() != 1 || f.spec() != FieldSpec::Rationals {
                return Err(Error::InvalidInstance(format!(
                    "f_{v} must be a univariate polynomial over q"
                )));
            }
        }
        if let Some(lists) = &label_lists {
            if lists.len() != n {
                return Err(Error::InvalidInstance(format!(
                    "{} label lists for {n} vertices",
                    lists.len()
                )));
            }
            for (v, list) in lists.iter().enumerate() {
                if list.iter().any(|x| x.spec() != FieldSpec::Rationals) {
                    return Err(Error::InvalidInstance(format!(
                        "label list of vertex {v} is not rational"
                    )));
                }
                if (1..list.len()).any(|i| list[..i].contains(&list[i])) {
                    return Err(Error::InvalidInstance(format!(
                        "label list of vertex {v} has duplicates"
                    )));
                }
            }
        }
        Ok(LabelingInstance {
            graph,
            vertex_polys,
            k,
            l,
            label_lists,
        })
    }

    /// The same polynomial at every vertex.
    pub fn uniform(graph: Graph, f: Polynomial, k: usize, l: usize) -> Result<Self> {
        let polys = vec![f; graph.vertex_count()];
        Self::new(graph, polys, k, l, None)
    }

    /// Candidate labels of `v`: its list, or `1, …, kl + 1`.
    pub fn labels_for(&self, v: usize) -> Vec<FieldValue> {
        match &self.label_lists {
            Some(lists) => lists[v].clone(),
            None => (1..=(self.k * self.l + 1) as i64)
                .map(|i| FieldValue::from_i64(FieldSpec::Rationals, i))
                .collect(),
        }
    }

    pub fn ring(&self) -> Ring {
        Ring::new(
            (0..self.graph.vertex_count()).map(|v| format!("x{v}")),
            FieldSpec::Rationals,
        )
        .expect("generated names are valid")
    }

    /// `c(u) − Σ_{v∈N(u)} f_v(c(v))`.
    fn side_value(&self, u: usize, labels: &[FieldValue]) -> Result<FieldValue> {
        let mut acc = labels[u].clone();
        for &v in self.graph.neighbors(u) {
            acc = &acc - &self.vertex_polys[v].eval(std::slice::from_ref(&labels[v]))?;
        }
        Ok(acc)
    }
}

/// The edge product, kept both factored and expanded.
#[derive(Debug, Clone)]
pub struct EdgeProduct {
    pub factors: Vec<Polynomial>,
    pub expanded: Polynomial,
}

impl EdgeProduct {
    /// Evaluates through the factors.
    pub fn eval(&self, point: &[FieldValue]) -> Result<FieldValue> {
        let mut acc = self.expanded.spec().one();
        for f in &self.factors {
            acc = &acc * &f.eval(point)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

/// One factor per edge `(u, w)`, `u < w`:
/// `Σ_{v∈N(u)} f_v(x_v) + x_w − Σ_{v∈N(w)} f_v(x_v) − x_u`.
pub fn build_edge_polynomial(inst: &LabelingInstance) -> Result<EdgeProduct> {
    check_bipartite(&inst.graph)?;
    let ring = inst.ring();
    let lifted: Vec<Polynomial> = inst
        .vertex_polys
        .iter()
        .enumerate()
        .map(|(v, f)| f.embed(&ring, &[v]))
        .collect::<Result<_>>()?;
    let neighborhood_sum = |u: usize| -> Result<Polynomial> {
        inst.graph
            .neighbors(u)
            .iter()
            .try_fold(ring.zero(), |acc, &v| acc.add(&lifted[v]))
    };
    let mut factors = Vec::with_capacity(inst.graph.edges().len());
    let mut expanded = ring.one();
    for &(u, w) in inst.graph.edges() {
        let factor = neighborhood_sum(u)?
            .add(&ring.var(w)?)?
            .sub(&neighborhood_sum(w)?)?
            .sub(&ring.var(u)?)?;
        expanded = expanded.mul(&factor)?;
        factors.push(factor);
    }
    Ok(EdgeProduct { factors, expanded })
}

/// For each arc `u → w`, the leading monomial of `f_u(x_u)`; their product.
pub fn select_target_monomial(
    inst: &LabelingInstance,
    orientation: &Orientation,
) -> Result<Monomial> {
    if orientation.max_outdegree() > inst.k {
        return Err(Error::Precondition(format!(
            "orientation has outdegree {} > k = {}",
            orientation.max_outdegree(),
            inst.k
        )));
    }
    let mut exps = vec![0u32; inst.graph.vertex_count()];
    for &(tail, _) in &orientation.arcs {
        exps[tail] += inst.vertex_polys[tail].total_degree().unwrap_or(0) as u32;
    }
    Ok(Monomial::new(exps))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub target: Monomial,
    /// Read directly from the expanded product.
    pub coefficient: FieldValue,
    /// Recovered from evaluations on `grid`.
    pub via_formula: FieldValue,
    pub grid: Grid,
}

/// Checks that `target` is maximal in the support of `h` and that its
/// coefficient is nonzero, computing the coefficient both from the expansion
/// and from evaluations of `h` on the grid `∏ {0, …, target_v}`.
pub fn certify_target_coefficient(h: &EdgeProduct, target: &Monomial) -> Result<Certificate> {
    let spec = h.expanded.spec();
    let coefficient = h.expanded.coefficient(target);
    if coefficient.is_zero() {
        return Err(Error::Certificate(format!(
            "coefficient of {:?} in h is zero",
            target.exponents()
        )));
    }
    if h.expanded.is_strictly_dominated(target) {
        return Err(Error::Certificate(format!(
            "{:?} is not maximal in the support of h",
            target.exponents()
        )));
    }
    let grid = Grid::new(
        spec,
        target
            .exponents()
            .iter()
            .map(|&e| {
                (0..=e as i64)
                    .map(|i| FieldValue::from_i64(spec, i))
                    .collect()
            })
            .collect(),
    )?;
    nss::check_formula_grid(h.expanded.arity(), target, &grid)?;
    let via_formula = nss::coefficient_from_evaluations(&grid, |p| h.eval(p))?;
    if via_formula != coefficient {
        return Err(Error::Certificate(format!(
            "expansion gives {coefficient}, evaluations give {via_formula}"
        )));
    }
    Ok(Certificate {
        target: target.clone(),
        coefficient,
        via_formula,
        grid,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// First edge (in graph order) whose two sides coincide.
    Violated(usize, usize),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        *self == Verdict::Valid
    }
}

pub fn verify_labeling(inst: &LabelingInstance, labels: &[FieldValue]) -> Result<Verdict> {
    if labels.len() != inst.graph.vertex_count() {
        return Err(Error::ArityMismatch {
            expected: inst.graph.vertex_count(),
            found: labels.len(),
        });
    }
    for &(u, w) in inst.graph.edges() {
        if inst.side_value(u, labels)? == inst.side_value(w, labels)? {
            return Ok(Verdict::Violated(u, w));
        }
    }
    Ok(Verdict::Valid)
}

#[derive(Debug, Clone)]
pub struct LabelingResult {
    pub labels: Vec<FieldValue>,
    pub orientation: Orientation,
    pub certificate: Certificate,
    pub evaluations_used: u64,
}

/// Orient, build the edge product, certify the target monomial, then search
/// the grid of label lists for a nonvanishing point.
pub fn find_labeling(inst: &LabelingInstance) -> Result<LabelingResult> {
    check_bipartite(&inst.graph)?;
    let orientation = orient_bounded_outdegree(&inst.graph, inst.k)?;
    let h = build_edge_polynomial(inst)?;
    let target = select_target_monomial(inst, &orientation)?;
    let certificate = certify_target_coefficient(&h, &target)?;
    let grid = Grid::new(
        FieldSpec::Rationals,
        (0..inst.graph.vertex_count())
            .map(|v| inst.labels_for(v))
            .collect(),
    )?;
    let report = nss::find_witness_recursive(&h.expanded, &target, &grid)?;
    let witness = report
        .witness
        .ok_or_else(|| Error::Internal("witness search returned nothing".into()))?;
    let labels = witness.point;
    match verify_labeling(inst, &labels)? {
        Verdict::Valid => Ok(LabelingResult {
            labels,
            orientation,
            certificate,
            evaluations_used: report.evaluations_used,
        }),
        Verdict::Violated(u, w) => Err(Error::Internal(format!(
            "witness labeling violates edge {u}-{w}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn q(v: i64) -> FieldValue {
        FieldValue::from_i64(FieldSpec::Rationals, v)
    }

    fn ident() -> Polynomial {
        let r = Ring::new(["x"], FieldSpec::Rationals).unwrap();
        parse_polynomial(&r, "x").unwrap()
    }

    fn cycle4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
        let g = Graph::parse("# c4\np 4 4\ne 0 1\ne 1 2\n\ne 2 3\ne 3 0\n").unwrap();
        assert_eq!(g, cycle4());
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(Graph::parse("p 3 2\ne 0 1\n").is_err());
        assert!(Graph::parse("e 0 1\n").is_err());
        assert!(Graph::parse("p 3 1\ne 0 x\n").is_err());
    }

    #[test]
    fn bipartite_examples() {
        let b = check_bipartite(&cycle4()).unwrap();
        assert_eq!(b.parts, [vec![0, 2], vec![1, 3]]);
        let b = check_bipartite(&Graph::new(2, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(b.parts, [vec![0], vec![1]]);
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        match check_bipartite(&tri) {
            Err(Error::NotBipartite { cycle }) => {
                let mut c = cycle.clone();
                c.sort();
                assert_eq!(c, vec![0, 1, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn odd_cycle_certificate_is_a_cycle() {
        // 5-cycle with a pendant path
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)]).unwrap();
        let Err(Error::NotBipartite { cycle }) = check_bipartite(&g) else {
            panic!("expected odd cycle")
        };
        assert_eq!(cycle.len() % 2, 1);
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            assert!(g.neighbors(a).contains(&b), "{cycle:?}");
        }
    }

    #[test]
    fn orientation_examples() {
        let o = orient_bounded_outdegree(&cycle4(), 1).unwrap();
        assert_eq!(o.outdegree, vec![1, 1, 1, 1]);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let o = orient_bounded_outdegree(&star, 1).unwrap();
        assert_eq!(o.max_outdegree(), 1);
        assert_eq!(o.outdegree.iter().sum::<usize>(), 3);
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        match orient_bounded_outdegree(&tri, 0) {
            Err(Error::Infeasible {
                k: 0,
                vertices,
                edges,
            }) => {
                assert!(edges > 0 && !vertices.is_empty());
            }
            other => panic!("{other:?}"),
        }
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let Err(Error::Infeasible {
            vertices, edges, ..
        }) = orient_bounded_outdegree(&k4, 1)
        else {
            panic!()
        };
        assert!(edges > vertices.len());
        assert_eq!(min_outdegree_bound(&k4).0, 2);
    }

    #[test]
    fn edge_polynomial_examples() {
        let r = Ring::new(["x0", "x1"], FieldSpec::Rationals).unwrap();
        let inst =
            LabelingInstance::uniform(Graph::new(2, [(0, 1)]).unwrap(), ident(), 1, 1).unwrap();
        let h = build_edge_polynomial(&inst).unwrap();
        assert_eq!(h.expanded, parse_polynomial(&r, "2*x1 - 2*x0").unwrap());

        let empty = LabelingInstance::uniform(Graph::new(2, []).unwrap(), ident(), 0, 1).unwrap();
        assert!(build_edge_polynomial(&empty)
            .unwrap()
            .expanded
            .is_one_poly());

        // path u=0, v=1, w=2
        let r3 = Ring::new(["x0", "x1", "x2"], FieldSpec::Rationals).unwrap();
        let path =
            LabelingInstance::uniform(Graph::new(3, [(0, 1), (1, 2)]).unwrap(), ident(), 1, 1)
                .unwrap();
        let h = build_edge_polynomial(&path).unwrap();
        let expect =
            parse_polynomial(&r3, "(x1 + x1 - x0 - x2 - x0)*(x0 + x2 + x2 - x1 - x1)").unwrap();
        assert_eq!(h.expanded, expect);

        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = LabelingInstance::uniform(tri, ident(), 2, 1).unwrap();
        assert!(matches!(
            build_edge_polynomial(&inst),
            Err(Error::NotBipartite { .. })
        ));
    }

    trait IsOne {
        fn is_one_poly(&self) -> bool;
    }

    impl IsOne for Polynomial {
        fn is_one_poly(&self) -> bool {
            *self == self.ring().one()
        }
    }

    #[test]
    fn target_monomial_examples() {
        let edge =
            LabelingInstance::uniform(Graph::new(2, [(0, 1)]).unwrap(), ident(), 1, 1).unwrap();
        let o = Orientation {
            arcs: vec![(0, 1)],
            outdegree: vec![1, 0],
        };
        assert_eq!(
            select_target_monomial(&edge, &o).unwrap(),
            Monomial::new(vec![1, 0])
        );

        let c4 = LabelingInstance::uniform(cycle4(), ident(), 1, 1).unwrap();
        let o = orient_bounded_outdegree(&c4.graph, 1).unwrap();
        assert_eq!(
            select_target_monomial(&c4, &o).unwrap(),
            Monomial::new(vec![1; 4])
        );

        let tight = LabelingInstance::uniform(cycle4(), ident(), 0, 1).unwrap();
        assert!(select_target_monomial(&tight, &o).is_err());
    }

    #[test]
    fn certify_examples() {
        let edge =
            LabelingInstance::uniform(Graph::new(2, [(0, 1)]).unwrap(), ident(), 1, 1).unwrap();
        let h = build_edge_polynomial(&edge).unwrap();
        let cert = certify_target_coefficient(&h, &Monomial::new(vec![1, 0])).unwrap();
        assert_eq!(cert.coefficient, q(-2));
        assert_eq!(cert.via_formula, q(-2));

        let c4 = LabelingInstance::uniform(cycle4(), ident(), 1, 1).unwrap();
        let h = build_edge_polynomial(&c4).unwrap();
        let cert = certify_target_coefficient(&h, &Monomial::new(vec![1; 4])).unwrap();
        assert!(!cert.coefficient.is_zero());
        assert_eq!(cert.coefficient, cert.via_formula);
    }

    #[test]
    fn negative_leading_coefficient_can_cancel() {
        // Edge 0-1, f_0 = x, f_1 = -x. Factor: f_1(x1) + x1 - f_0(x0) - x0 = -2*x0,
        // so the coefficient of x1 (orientation 1 -> 0) vanishes.
        let r = Ring::new(["x"], FieldSpec::Rationals).unwrap();
        let neg = parse_polynomial(&r, "-x").unwrap();
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert!(LabelingInstance::new(g.clone(), vec![ident(), neg.clone()], 1, 1, None).is_err());
        let inst = LabelingInstance::new_unchecked(g, vec![ident(), neg], 1, 1, None).unwrap();
        let h = build_edge_polynomial(&inst).unwrap();
        let o = Orientation {
            arcs: vec![(1, 0)],
            outdegree: vec![0, 1],
        };
        let m = select_target_monomial(&inst, &o).unwrap();
        assert!(matches!(
            certify_target_coefficient(&h, &m),
            Err(Error::Certificate(_))
        ));
    }

    #[test]
    fn verify_examples() {
        let edge =
            LabelingInstance::uniform(Graph::new(2, [(0, 1)]).unwrap(), ident(), 1, 1).unwrap();
        assert!(verify_labeling(&edge, &[q(1), q(2)]).unwrap().is_valid());
        assert_eq!(
            verify_labeling(&edge, &[q(1), q(1)]).unwrap(),
            Verdict::Violated(0, 1)
        );
    }

    #[test]
    fn find_labeling_examples() {
        let edge =
            LabelingInstance::uniform(Graph::new(2, [(0, 1)]).unwrap(), ident(), 1, 1).unwrap();
        let res = find_labeling(&edge).unwrap();
        assert_ne!(res.labels[0], res.labels[1]);
        assert!(verify_labeling(&edge, &res.labels).unwrap().is_valid());

        let c4 = LabelingInstance::uniform(cycle4(), ident(), 1, 1).unwrap();
        let res = find_labeling(&c4).unwrap();
        assert!(verify_labeling(&c4, &res.labels).unwrap().is_valid());
        assert!(res.labels.iter().all(|c| *c == q(1) || *c == q(2)));

        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = LabelingInstance::uniform(tri, ident(), 2, 1).unwrap();
        assert!(matches!(
            find_labeling(&inst),
            Err(Error::NotBipartite { .. })
        ));
    }

    #[test]
    fn instance_validation() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let r = Ring::new(["x"], FieldSpec::Rationals).unwrap();
        let sq = parse_polynomial(&r, "x^2").unwrap();
        assert!(LabelingInstance::uniform(g.clone(), sq.clone(), 1, 1).is_err());
        assert!(LabelingInstance::uniform(g.clone(), sq, 1, 2).is_ok());
        assert!(LabelingInstance::uniform(g.clone(), r.one(), 1, 1).is_err());
        let dup = Some(vec![vec![q(1), q(1)], vec![q(1), q(2)]]);
        assert!(LabelingInstance::new(g.clone(), vec![ident(), ident()], 1, 1, dup).is_err());
        let short = Some(vec![vec![q(1)], vec![q(1), q(2)]]);
        assert!(LabelingInstance::new(g, vec![ident(), ident()], 1, 1, short).is_err());
    }
}
