//! Test-side oracles written without the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use facet_core::embedding::EmbeddedGraph;
use rand::Rng;

/// Edge sequences of all face walks, traced directly from the rotations:
/// the walk leaves along the dart following the reverse of the one it
/// arrived on.
pub fn face_edge_walks(g: &EmbeddedGraph) -> Vec<Vec<usize>> {
    let darts = 2 * g.edge_count();
    let mut next_at_vertex = vec![usize::MAX; darts];
    for v in 0..g.vertex_count() {
        let rot: Vec<usize> = g.rotation(v).iter().map(|d| d.index()).collect();
        for (i, &d) in rot.iter().enumerate() {
            next_at_vertex[d] = rot[(i + 1) % rot.len()];
        }
    }
    let mut seen = vec![false; darts];
    let mut walks = Vec::new();
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            walk.push(d / 2);
            d = next_at_vertex[d ^ 1];
        }
        walks.push(walk);
    }
    walks
}

/// Smallest cyclic gap between occurrences of `e` and `f` on any walk.
pub fn distance_oracle(walks: &[Vec<usize>], e: usize, f: usize) -> Option<usize> {
    if e == f {
        return Some(0);
    }
    let mut best = None;
    for w in walks {
        let k = w.len();
        for i in (0..k).filter(|&i| w[i] == e) {
            for j in (0..k).filter(|&j| w[j] == f) {
                let gap = (i + k - j) % k;
                let gap = gap.min(k - gap);
                best = Some(best.map_or(gap, |b: usize| b.min(gap)));
            }
        }
    }
    best
}

/// Pairs of distinct edges at facial distance at most `ell`.
pub fn conflicts_oracle(g: &EmbeddedGraph, ell: usize) -> Vec<Vec<bool>> {
    let walks = face_edge_walks(g);
    let m = g.edge_count();
    let mut adj = vec![vec![false; m]; m];
    for e in 0..m {
        for f in 0..m {
            if e != f {
                adj[e][f] = distance_oracle(&walks, e, f).is_some_and(|d| d <= ell);
            }
        }
    }
    adj
}

/// Chromatic number by enumerating restricted growth strings: vertex `i`
/// takes a block in `0..=max(previous blocks) + 1`, so every partition into
/// independent sets is visited exactly once.
pub fn chromatic_by_partitions(adj: &[Vec<bool>]) -> usize {
    fn go(adj: &[Vec<bool>], blocks: &mut Vec<usize>, used: usize, best: &mut usize) {
        let i = blocks.len();
        if used >= *best {
            return;
        }
        if i == adj.len() {
            *best = used;
            return;
        }
        for b in 0..=used {
            if (0..i).all(|j| !(adj[i][j] && blocks[j] == b)) {
                blocks.push(b);
                go(adj, blocks, used.max(b + 1), best);
                blocks.pop();
            }
        }
    }
    let mut best = adj.len();
    go(adj, &mut Vec::new(), 0, &mut best);
    best
}

/// Coefficient of `target` in the product of `(X_i - X_j)` over `pairs`,
/// summing `(-1)^(number of second choices)` over every way of picking one
/// variable per factor that lands on `target`.
pub fn coefficient_by_choices(pairs: &[(usize, usize)], target: &[u8]) -> i64 {
    fn go(pairs: &[(usize, usize)], t: usize, need: &mut [i32], sign: i64) -> i64 {
        if t == pairs.len() {
            return if need.iter().all(|&x| x == 0) { sign } else { 0 };
        }
        let (i, j) = pairs[t];
        let mut total = 0;
        for (var, s) in [(i, sign), (j, -sign)] {
            if need[var] > 0 {
                need[var] -= 1;
                total += go(pairs, t + 1, need, s);
                need[var] += 1;
            }
        }
        total
    }
    let mut need: Vec<i32> = target.iter().map(|&k| k as i32).collect();
    go(pairs, 0, &mut need, 1)
}

/// Full expansion as a map from exponent vectors to coefficients.
pub fn dense_expansion(vars: usize, pairs: &[(usize, usize)]) -> BTreeMap<Vec<u8>, i64> {
    let mut poly = BTreeMap::from([(vec![0u8; vars], 1i64)]);
    for &(i, j) in pairs {
        let mut next = BTreeMap::new();
        for (mono, c) in poly {
            for (var, s) in [(i, c), (j, -c)] {
                let mut m = mono.clone();
                m[var] += 1;
                *next.entry(m).or_insert(0) += s;
            }
        }
        next.retain(|_, c| *c != 0);
        poly = next;
    }
    poly
}

/// Random pairs on `vars` variables, no repeated unordered pair.
pub fn random_pairs(rng: &mut impl Rng, vars: usize, count: usize) -> Vec<(usize, usize)> {
    let mut all: Vec<(usize, usize)> = (0..vars).flat_map(|i| (i + 1..vars).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    while out.len() < count && !all.is_empty() {
        let (i, j) = all.swap_remove(rng.gen_range(0..all.len()));
        out.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
    }
    out
}
