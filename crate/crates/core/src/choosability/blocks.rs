use serde::Serialize;

use super::ChoosabilityError;
use crate::simple::SimpleGraph;

/// A maximal 2-connected piece, a bridge, or an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_complete(&self) -> bool {
        let k = self.vertices.len();
        self.edges.len() == k * (k.saturating_sub(1)) / 2
    }

    /// An odd cycle of length at least 3 (blocks are induced, so a block
    /// with as many edges as vertices and all degrees 2 is an induced cycle).
    pub fn is_odd_cycle(&self) -> bool {
        let k = self.vertices.len();
        k >= 3 && k % 2 == 1 && self.edges.len() == k && {
            let mut deg = std::collections::BTreeMap::new();
            for &(u, v) in &self.edges {
                *deg.entry(u).or_insert(0) += 1;
                *deg.entry(v).or_insert(0) += 1;
            }
            deg.values().all(|&d| d == 2)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

struct Tarjan<'a> {
    graph: &'a SimpleGraph,
    order: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Block>,
    is_cut: Vec<bool>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.clock += 1;
        self.order[v] = self.clock;
        self.low[v] = self.clock;
        let mut children = 0;
        for &w in self.graph.neighbors(v) {
            if Some(w) == parent {
                continue;
            }
            if self.order[w] == 0 {
                children += 1;
                self.stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.order[v] {
                    if parent.is_some() || children > 1 {
                        self.is_cut[v] = true;
                    }
                    self.pop_block((v, w));
                }
            } else if self.order[w] < self.order[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.order[w]);
            }
        }
    }

    fn pop_block(&mut self, until: (usize, usize)) {
        let mut edges = Vec::new();
        while let Some(edge) = self.stack.pop() {
            edges.push((edge.0.min(edge.1), edge.0.max(edge.1)));
            if edge == until {
                break;
            }
        }
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        self.blocks.push(Block { vertices, edges });
    }
}

/// Block and cut-vertex decomposition. Isolated vertices form one-vertex
/// blocks so that every vertex lies in some block.
pub fn blocks(graph: &SimpleGraph) -> BlockDecomposition {
    let n = graph.vertex_count();
    let mut t = Tarjan {
        graph,
        order: vec![0; n],
        low: vec![0; n],
        clock: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    for v in 0..n {
        if t.order[v] == 0 {
            if graph.degree(v) == 0 {
                t.clock += 1;
                t.order[v] = t.clock;
                t.blocks.push(Block { vertices: vec![v], edges: Vec::new() });
            } else {
                t.visit(v, None);
            }
        }
    }
    let mut blocks = t.blocks;
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices).then(a.edges.cmp(&b.edges)));
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| t.is_cut[v]).collect(),
    }
}

/// A connected graph all of whose blocks are complete or odd cycles.
pub fn is_gallai_tree(graph: &SimpleGraph) -> Result<bool, ChoosabilityError> {
    if !graph.is_connected() {
        return Err(ChoosabilityError::Disconnected);
    }
    Ok(blocks(graph).blocks.iter().all(|b| b.is_complete() || b.is_odd_cycle()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn paths_cycles_and_bowties() {
        let path = blocks(&graph(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(path.blocks.len(), 3);
        assert_eq!(path.cut_vertices, vec![1, 2]);
        let c5 = blocks(&SimpleGraph::cycle(5));
        assert_eq!(c5.blocks.len(), 1);
        assert!(c5.cut_vertices.is_empty());
        let bowtie = blocks(&graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]));
        assert_eq!(bowtie.blocks.len(), 2);
        assert_eq!(bowtie.cut_vertices, vec![2]);
    }

    #[test]
    fn gallai_trees() {
        assert_eq!(is_gallai_tree(&SimpleGraph::complete(4)), Ok(true));
        assert_eq!(is_gallai_tree(&SimpleGraph::cycle(4)), Ok(false));
        let two_triangles = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(is_gallai_tree(&two_triangles), Ok(true));
        assert_eq!(is_gallai_tree(&SimpleGraph::cycle(7)), Ok(true));
        // K4 minus an edge is 2-connected but neither complete nor a cycle.
        let diamond = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(is_gallai_tree(&diamond), Ok(false));
        assert_eq!(is_gallai_tree(&graph(2, &[])), Err(ChoosabilityError::Disconnected));
    }
}
