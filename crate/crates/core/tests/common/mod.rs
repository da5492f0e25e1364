//! Graph generators shared by the integration tests.
#![allow(dead_code)]

pub mod naive;

use std::collections::HashSet;
use std::sync::OnceLock;

use czoo::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Edges = Vec<(usize, usize)>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Adjacency rows as bitmasks, n ≤ 16.
type Masks = Vec<u16>;

fn masks_to_edges(m: &Masks) -> Edges {
    let n = m.len();
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if m[i] >> j & 1 == 1 {
                e.push((i, j));
            }
        }
    }
    e
}

/// Stable color classes by iterated neighbor-color refinement, as invariant ranks.
fn refine(m: &Masks) -> Vec<usize> {
    let n = m.len();
    let mut color: Vec<usize> = m.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|i| {
                let mut nb: Vec<usize> = (0..n).filter(|&j| m[i] >> j & 1 == 1).map(|j| color[j]).collect();
                nb.sort_unstable();
                (color[i], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = color.iter().collect::<HashSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        color = next;
    }
}

/// Canonical adjacency code: the minimum pair-bit code over all orderings
/// that list color classes in rank order.
fn canonical(m: &Masks) -> (u64, Masks) {
    let n = m.len();
    let color = refine(m);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| color[i]);
    for &i in &order {
        match classes.last_mut() {
            Some(c) if color[c[0]] == color[i] => c.push(i),
            _ => classes.push(vec![i]),
        }
    }
    if n == 0 {
        return (0, Vec::new());
    }
    fn search(
        classes: &[Vec<usize>],
        ci: usize,
        rest: &mut Vec<usize>,
        perm: &mut Vec<usize>,
        m: &Masks,
        best: &mut Option<(u64, Vec<usize>)>,
    ) {
        if rest.is_empty() {
            if ci + 1 < classes.len() {
                let mut next = classes[ci + 1].clone();
                search(classes, ci + 1, &mut next, perm, m, best);
                return;
            }
            let n = perm.len();
            let mut code = 0u64;
            for a in 0..n {
                for b in a + 1..n {
                    code = code << 1 | (m[perm[a]] >> perm[b] & 1) as u64;
                }
            }
            if best.as_ref().is_none_or(|(c, _)| code < *c) {
                *best = Some((code, perm.clone()));
            }
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            perm.push(v);
            search(classes, ci, rest, perm, m, best);
            perm.pop();
            rest.insert(k, v);
        }
    }
    let mut best = None;
    let mut first = classes[0].clone();
    search(&classes, 0, &mut first, &mut Vec::with_capacity(n), m, &mut best);
    let (code, p) = best.unwrap();
    let mut relabeled = vec![0u16; n];
    for a in 0..n {
        for b in 0..n {
            if m[p[a]] >> p[b] & 1 == 1 {
                relabeled[a] |= 1 << b;
            }
        }
    }
    (code, relabeled)
}

fn level(prev: &[Masks], n: usize) -> Vec<Masks> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in prev {
        for subset in 0u16..(1 << (n - 1)) {
            let mut m: Masks = base.clone();
            m.push(subset);
            for j in 0..n - 1 {
                if subset >> j & 1 == 1 {
                    m[j] |= 1 << (n - 1);
                }
            }
            let (code, canon) = canonical(&m);
            if seen.insert(code) {
                out.push(canon);
            }
        }
    }
    out
}

/// Every simple undirected graph on `n ≤ 8` nodes, one per isomorphism class.
pub fn all_graphs(n: usize) -> &'static [Edges] {
    static LEVELS: OnceLock<Vec<Vec<Edges>>> = OnceLock::new();
    assert!(n <= 8);
    let levels = LEVELS.get_or_init(|| {
        let mut masks: Vec<Vec<Masks>> = vec![vec![Vec::new()]];
        for k in 1..=8 {
            let next = level(&masks[k - 1], k);
            masks.push(next);
        }
        masks
            .iter()
            .map(|l| l.iter().map(masks_to_edges).collect())
            .collect()
    });
    &levels[n]
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// All graphs with `lo..=hi` nodes, optionally only connected ones.
pub fn exhaustive(lo: usize, hi: usize, connected: bool) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| {
            all_graphs(n)
                .iter()
                .filter(move |e| !connected || is_connected(n, e))
                .map(move |e| Graph::from_edges(n, false, e))
        })
        .collect()
}

/// Erdős–Rényi G(n, p), undirected.
pub fn gnp(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    Graph::from_edges(n, false, &e)
}

/// Uniformly random recursive tree: node i attaches to a random earlier node.
pub fn random_tree_edges(r: &mut impl Rng, n: usize) -> Edges {
    (1..n).map(|i| (r.gen_range(0..i), i)).collect()
}

pub fn random_tree(r: &mut impl Rng, n: usize) -> Graph {
    let mut e = random_tree_edges(r, n);
    // Shuffle labels so trees are not always rooted at 0.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    for (u, v) in e.iter_mut() {
        *u = perm[*u];
        *v = perm[*v];
    }
    Graph::from_edges(n, false, &e)
}

/// A random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut e = random_tree_edges(r, n);
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    Graph::from_edges(n, false, &e)
}

pub fn random_weighted_connected(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let g = random_connected(r, n, p);
    let e: Vec<(usize, usize, f64)> = g
        .edges()
        .map(|(u, v, _)| (u, v, r.gen_range(1..=4) as f64 * 0.5))
        .collect();
    Graph::from_weighted_edges(n, false, &e).unwrap()
}

pub fn random_directed(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && r.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    Graph::from_edges(n, true, &e)
}

pub fn random_permutation(r: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(r);
    p
}

pub fn assert_close(a: &[f64], b: &[f64], tol: f64, what: &str) {
    assert_eq!(a.len(), b.len(), "{what}: length");
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        let ok = (x - y).abs() <= tol * (1.0 + y.abs()) || (x.is_infinite() && x == y);
        assert!(ok, "{what}: node {i}: {x} vs {y}\n{a:?}\n{b:?}");
    }
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Indices sorted by decreasing score, ties by id.
pub fn argsort_desc(v: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&a, &b| v[b].total_cmp(&v[a]).then(a.cmp(&b)));
    idx
}

/// Same ordering up to numerically tied groups (relative gap `tol`).
pub fn same_ranking(a: &[f64], b: &[f64], tol: f64) -> bool {
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            let da = a[i] - a[j];
            let db = b[i] - b[j];
            let ta = da.abs() <= tol * (1.0 + a[i].abs());
            let tb = db.abs() <= tol * (1.0 + b[i].abs());
            if ta != tb || (!ta && (da > 0.0) != (db > 0.0)) {
                return false;
            }
        }
    }
    true
}

