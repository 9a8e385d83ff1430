//! Exact graph coloring by DSATUR branch and bound.
//!
//! The chromatic number is bracketed by a maximum clique (lower) and greedy
//! DSATUR (upper). Each candidate `k` in between is decided by a complete
//! search: the clique is precolored `1..=q`, the next vertex is the one with
//! the most distinct neighbor colors (ties: larger degree, then smaller id),
//! a branch opens at most one new color, and a vertex whose neighbors block
//! all `k` colors cuts the branch at once.

use std::cmp::Reverse;

use super::{conflict_graph, greedy_on, ColorSet, ColoringError, OrderPolicy, PartialColoring, MAX_COLOR};
use crate::embedding::EmbeddedGraph;
use crate::simple::SimpleGraph;

#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// A color count believed to suffice; tried before the greedy bound.
    pub upper_hint: Option<u32>,
    /// Search nodes allowed per tested color count.
    pub node_budget: u64,
    /// Color counts tested concurrently. The answer and witness do not depend
    /// on this value.
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { upper_hint: None, node_budget: 20_000_000, threads: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromaticIndex {
    Exact { chi: u32, witness: Vec<u32>, nodes: u64 },
    /// The budget ran out; the true value lies in `lower..=upper`.
    TooLarge { lower: u32, upper: u32, nodes: u64 },
}

impl ChromaticIndex {
    pub fn exact(&self) -> Option<u32> {
        match self {
            ChromaticIndex::Exact { chi, .. } => Some(*chi),
            ChromaticIndex::TooLarge { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<PartialColoring> {
        match self {
            ChromaticIndex::Exact { chi, witness, .. } => Some(PartialColoring::total(witness.clone(), *chi)),
            ChromaticIndex::TooLarge { .. } => None,
        }
    }
}

/// Exact `ell`-facial chromatic index of `g`.
pub fn chromatic_index(
    g: &EmbeddedGraph,
    ell: usize,
    options: &SolverOptions,
) -> Result<ChromaticIndex, ColoringError> {
    let conflicts = conflict_graph(g, ell)?;
    chromatic_number(&conflicts.graph, options)
}

/// Exact chromatic number of a simple graph.
pub fn chromatic_number(graph: &SimpleGraph, options: &SolverOptions) -> Result<ChromaticIndex, ColoringError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Ok(ChromaticIndex::Exact { chi: 0, witness: Vec::new(), nodes: 0 });
    }
    let clique = max_clique(graph);
    let lower = clique.len() as u32;
    let mut best = greedy_on(graph, OrderPolicy::Dsatur, None)?;
    let mut upper = best.iter().copied().max().unwrap_or(0);
    if upper > MAX_COLOR {
        return Err(ColoringError::PaletteExhausted { edge: 0, palette: MAX_COLOR });
    }
    let mut nodes = 0;

    if let Some(hint) = options.upper_hint.filter(|&h| h >= lower && h < upper) {
        let (outcome, used) = decide(graph, &clique, hint, options.node_budget);
        nodes += used;
        match outcome {
            Some(Some(colors)) => {
                best = colors;
                upper = hint;
            }
            Some(None) => {
                // Nothing at or below the hint works; the search resumes above it.
                return finish(graph, &clique, hint + 1, upper, best, nodes, options);
            }
            None => return Ok(ChromaticIndex::TooLarge { lower, upper, nodes }),
        }
    }
    finish(graph, &clique, lower, upper, best, nodes, options)
}

fn finish(
    graph: &SimpleGraph,
    clique: &[usize],
    lower: u32,
    upper: u32,
    best: Vec<u32>,
    mut nodes: u64,
    options: &SolverOptions,
) -> Result<ChromaticIndex, ColoringError> {
    let candidates: Vec<u32> = (lower..upper).collect();
    for batch in candidates.chunks(options.threads.max(1)) {
        let results: Vec<(Option<Option<Vec<u32>>>, u64)> = if batch.len() == 1 {
            vec![decide(graph, clique, batch[0], options.node_budget)]
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> = batch
                    .iter()
                    .map(|&k| scope.spawn(move || decide(graph, clique, k, options.node_budget)))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("solver thread panicked")).collect()
            })
        };
        for (&k, (outcome, used)) in batch.iter().zip(results) {
            nodes += used;
            match outcome {
                Some(Some(witness)) => return Ok(ChromaticIndex::Exact { chi: k, witness, nodes }),
                Some(None) => {}
                None => return Ok(ChromaticIndex::TooLarge { lower: k, upper, nodes }),
            }
        }
    }
    Ok(ChromaticIndex::Exact { chi: upper, witness: best, nodes })
}

/// A maximum clique, found by branch and bound over vertices in id order.
pub fn max_clique(graph: &SimpleGraph) -> Vec<usize> {
    fn grow(graph: &SimpleGraph, current: &mut Vec<usize>, candidates: &[usize], best: &mut Vec<usize>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - i <= best.len() {
                return;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| graph.has_edge(v, w))
                .collect();
            current.push(v);
            grow(graph, current, &next, best);
            current.pop();
        }
    }
    let mut order: Vec<usize> = (0..graph.vertex_count()).collect();
    order.sort_by_key(|&v| (Reverse(graph.degree(v)), v));
    let mut best = Vec::new();
    grow(graph, &mut Vec::new(), &order, &mut best);
    best.sort_unstable();
    best
}

struct Search<'a> {
    graph: &'a SimpleGraph,
    k: u32,
    colors: Vec<u32>,
    /// `blockers[v * (k + 1) + c]`: colored neighbors of `v` with color `c`.
    blockers: Vec<u16>,
    saturation: Vec<ColorSet>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Colors `v` with `c`; returns false if some uncolored neighbor is left
    /// without options. Always fully applied so `unassign` can undo it.
    fn assign(&mut self, v: usize, c: u32) -> bool {
        self.colors[v] = c;
        let stride = self.k as usize + 1;
        let mut alive = true;
        for &w in self.graph.neighbors(v) {
            let slot = &mut self.blockers[w * stride + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.saturation[w].insert(c);
                if self.colors[w] == 0 && self.saturation[w].len() == self.k as usize {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        let stride = self.k as usize + 1;
        for &w in self.graph.neighbors(v) {
            let slot = &mut self.blockers[w * stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w].remove(c);
            }
        }
    }

    /// `Some(true)` once a full coloring is in `colors`; `None` on budget.
    fn extend(&mut self, remaining: usize, used: u32) -> Option<bool> {
        if remaining == 0 {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let v = (0..self.colors.len())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.saturation[v].len(), self.graph.degree(v), Reverse(v)))
            .expect("remaining > 0");
        for c in 1..=(used + 1).min(self.k) {
            if self.saturation[v].contains(c) {
                continue;
            }
            let alive = self.assign(v, c);
            if alive {
                match self.extend(remaining - 1, used.max(c)) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.unassign(v);
        }
        Some(false)
    }
}

/// Decides `k`-colorability. Outer `None` means the budget ran out; inner
/// `None` means no coloring exists.
fn decide(graph: &SimpleGraph, clique: &[usize], k: u32, budget: u64) -> (Option<Option<Vec<u32>>>, u64) {
    if (k as usize) < clique.len() {
        return (Some(None), 0);
    }
    let n = graph.vertex_count();
    let mut search = Search {
        graph,
        k,
        colors: vec![0; n],
        blockers: vec![0; n * (k as usize + 1)],
        saturation: vec![ColorSet::empty(); n],
        nodes: 0,
        budget,
    };
    let mut alive = true;
    for (i, &v) in clique.iter().enumerate() {
        alive &= search.assign(v, i as u32 + 1);
    }
    if !alive {
        return (Some(None), 0);
    }
    let outcome = match search.extend(n - clique.len(), clique.len() as u32) {
        Some(true) => Some(Some(search.colors)),
        Some(false) => Some(None),
        None => None,
    };
    (outcome, search.nodes)
}
