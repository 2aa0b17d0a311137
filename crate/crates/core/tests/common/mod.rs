#![allow(dead_code)]

use nullstellensatz::labeling::Graph;
use nullstellensatz::{FieldSpec, FieldValue, Monomial, Polynomial, Ring};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

pub const Q: FieldSpec = FieldSpec::Rationals;
pub const F101: FieldSpec = FieldSpec::PrimeField(101);

pub fn ring(n: usize, spec: FieldSpec) -> Ring {
    Ring::new((1..=n).map(|i| format!("x{i}")), spec).unwrap()
}

pub fn random_scalar<R: Rng>(rng: &mut R, spec: FieldSpec) -> FieldValue {
    match spec {
        FieldSpec::Rationals => {
            let num = rng.gen_range(-20i64..=20);
            let den = if rng.gen_bool(0.3) {
                rng.gen_range(2i64..=5)
            } else {
                1
            };
            FieldValue::from_ratio(spec, &BigInt::from(num), &BigInt::from(den)).unwrap()
        }
        FieldSpec::PrimeField(p) => FieldValue::from_i64(spec, rng.gen_range(0..p as i64)),
    }
}

pub fn random_nonzero<R: Rng>(rng: &mut R, spec: FieldSpec) -> FieldValue {
    loop {
        let v = random_scalar(rng, spec);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Sparse polynomial with up to `max_terms` terms and per-variable degree at most `max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, ring: &Ring, max_terms: usize, max_deg: u32) -> Polynomial {
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<(Monomial, FieldValue)> = (0..count)
        .map(|_| {
            let e = (0..ring.arity())
                .map(|_| rng.gen_range(0..=max_deg))
                .collect();
            (Monomial::new(e), random_nonzero(rng, ring.spec()))
        })
        .collect();
    ring.from_terms(terms).unwrap()
}

/// `len` distinct field elements; rationals may be non-integral.
pub fn distinct_values<R: Rng>(rng: &mut R, spec: FieldSpec, len: usize) -> Vec<FieldValue> {
    let mut out: Vec<FieldValue> = Vec::with_capacity(len);
    while out.len() < len {
        let v = random_scalar(rng, spec);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.shuffle(rng);
    out
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn grid_graph(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges).unwrap()
}

pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    Graph::new(8, edges).unwrap()
}

/// Every graph without isolated vertices having 1..=max_edges edges, up to relabeling
/// (with isomorphic repeats). New endpoints always take the next free index.
pub fn small_graphs(max_edges: usize) -> Vec<Graph> {
    fn grow(
        edges: &mut Vec<(usize, usize)>,
        used: usize,
        max_edges: usize,
        seen: &mut std::collections::BTreeSet<Vec<(usize, usize)>>,
        out: &mut Vec<Graph>,
    ) {
        if !edges.is_empty() {
            let mut key = edges.clone();
            key.sort();
            if seen.insert(key) {
                out.push(Graph::new(used, edges.iter().copied()).unwrap());
            }
        }
        if edges.len() == max_edges {
            return;
        }
        let mut candidates = Vec::new();
        for a in 0..used {
            for b in a + 1..=used {
                candidates.push((a, b));
            }
        }
        candidates.push((used, used + 1));
        for e in candidates {
            if edges.contains(&e) {
                continue;
            }
            edges.push(e);
            grow(edges, used.max(e.1 + 1), max_edges, seen, out);
            edges.pop();
        }
    }
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    grow(&mut Vec::new(), 0, max_edges, &mut seen, &mut out);
    out
}
