use std::cmp::Reverse;

use serde::Serialize;

use super::{is_gallai_tree, ChoosabilityError};
use crate::facial_coloring::ColorSet;
use crate::simple::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ListOutcome {
    Colored(Vec<u32>),
    /// The search space was exhausted without finding a coloring.
    Uncolorable,
    BudgetExceeded,
}

impl ListOutcome {
    pub fn is_colored(&self) -> bool {
        matches!(self, ListOutcome::Colored(_))
    }
}

fn check_lengths(graph: &SimpleGraph, lists: &[ColorSet]) -> Result<(), ChoosabilityError> {
    if lists.len() != graph.vertex_count() {
        return Err(ChoosabilityError::ListCount { expected: graph.vertex_count(), found: lists.len() });
    }
    Ok(())
}

/// Complete backtracking search for a proper coloring from the lists.
///
/// Always branches on the uncolored vertex with the fewest remaining options
/// (ties: larger degree, then smaller id) and tries colors in increasing
/// order, so results are deterministic.
pub fn list_color(graph: &SimpleGraph, lists: &[ColorSet], budget: u64) -> Result<ListOutcome, ChoosabilityError> {
    check_lengths(graph, lists)?;
    let n = graph.vertex_count();
    let mut colors = vec![0u32; n];
    let mut nodes = 0u64;

    fn options(graph: &SimpleGraph, lists: &[ColorSet], colors: &[u32], v: usize) -> ColorSet {
        let mut set = lists[v];
        for &w in graph.neighbors(v) {
            if colors[w] != 0 {
                set.remove(colors[w]);
            }
        }
        set
    }

    fn go(
        graph: &SimpleGraph,
        lists: &[ColorSet],
        colors: &mut Vec<u32>,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let pick = (0..colors.len())
            .filter(|&v| colors[v] == 0)
            .map(|v| (options(graph, lists, colors, v), v))
            .min_by_key(|&(opts, v)| (opts.len(), Reverse(graph.degree(v)), v));
        let Some((opts, v)) = pick else {
            return Some(true);
        };
        for c in opts.iter() {
            colors[v] = c;
            match go(graph, lists, colors, nodes, budget) {
                Some(false) => {}
                other => return other,
            }
        }
        colors[v] = 0;
        Some(false)
    }

    Ok(match go(graph, lists, &mut colors, &mut nodes, budget) {
        Some(true) => ListOutcome::Colored(colors),
        Some(false) => ListOutcome::Uncolorable,
        None => ListOutcome::BudgetExceeded,
    })
}

/// Why the degree-list theorem does or does not promise a coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Guarantee {
    /// Some list is longer than the degree of its vertex.
    SpareColor { vertex: usize },
    /// Some block is neither complete nor an odd cycle.
    NotGallaiTree,
    /// Tight lists on a Gallai tree: no promise either way.
    Silent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeChoice {
    pub guarantee: Guarantee,
    pub outcome: ListOutcome,
}

impl DegreeChoice {
    pub fn guaranteed(&self) -> bool {
        self.guarantee != Guarantee::Silent
    }
}

/// Applies the degree-list theorem: on a connected graph with
/// `|L(v)| >= d(v)` everywhere, a coloring exists if some list has a spare
/// color or the graph is not a Gallai tree. The coloring itself comes from
/// [`list_color`]; a failed search under a positive guarantee is reported as
/// an error rather than silently trusted.
pub fn degree_feasible_colorable(
    graph: &SimpleGraph,
    lists: &[ColorSet],
    budget: u64,
) -> Result<DegreeChoice, ChoosabilityError> {
    check_lengths(graph, lists)?;
    if !graph.is_connected() {
        return Err(ChoosabilityError::Disconnected);
    }
    if let Some(v) = (0..graph.vertex_count()).find(|&v| lists[v].len() < graph.degree(v)) {
        return Err(ChoosabilityError::ListTooShort { vertex: v, size: lists[v].len(), degree: graph.degree(v) });
    }
    let guarantee = if let Some(vertex) = (0..graph.vertex_count()).find(|&v| lists[v].len() > graph.degree(v)) {
        Guarantee::SpareColor { vertex }
    } else if !is_gallai_tree(graph)? {
        Guarantee::NotGallaiTree
    } else {
        Guarantee::Silent
    };
    let outcome = list_color(graph, lists, budget)?;
    if guarantee != Guarantee::Silent && outcome == ListOutcome::Uncolorable {
        return Err(ChoosabilityError::GuaranteeViolated);
    }
    Ok(DegreeChoice { guarantee, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(sets: &[&[u32]]) -> Vec<ColorSet> {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    fn same(set: &[u32], n: usize) -> Vec<ColorSet> {
        vec![set.iter().copied().collect(); n]
    }

    #[test]
    fn triangle_lists() {
        let k3 = SimpleGraph::complete(3);
        let ok = list_color(&k3, &lists(&[&[1, 2], &[1, 2], &[1, 3]]), 1000).unwrap();
        assert!(ok.is_colored());
        let none = list_color(&k3, &lists(&[&[1, 2], &[1, 2], &[1, 2]]), 1000).unwrap();
        assert_eq!(none, ListOutcome::Uncolorable);
        let empty = SimpleGraph::from_edges(0, &[]).unwrap();
        assert_eq!(list_color(&empty, &[], 10).unwrap(), ListOutcome::Colored(vec![]));
    }

    #[test]
    fn degree_theorem_cases() {
        let c4 = degree_feasible_colorable(&SimpleGraph::cycle(4), &same(&[1, 2], 4), 1000).unwrap();
        assert_eq!(c4.guarantee, Guarantee::NotGallaiTree);
        assert!(c4.outcome.is_colored());

        let k3 = degree_feasible_colorable(&SimpleGraph::complete(3), &same(&[1, 2], 3), 1000).unwrap();
        assert!(!k3.guaranteed());
        assert_eq!(k3.outcome, ListOutcome::Uncolorable);

        let mut c5_lists = same(&[1, 2], 5);
        c5_lists[2] = [1, 2, 3].into_iter().collect();
        let c5 = degree_feasible_colorable(&SimpleGraph::cycle(5), &c5_lists, 1000).unwrap();
        assert_eq!(c5.guarantee, Guarantee::SpareColor { vertex: 2 });
        assert!(c5.outcome.is_colored());

        assert!(matches!(
            degree_feasible_colorable(&SimpleGraph::cycle(5), &same(&[1], 5), 1000),
            Err(ChoosabilityError::ListTooShort { .. })
        ));
    }
}
