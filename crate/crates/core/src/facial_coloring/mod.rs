//! Facial edge-colorings: conflict graphs, verification, available colors,
//! greedy coloring and the exact chromatic index.
//!
//! Two edges are in conflict when they are at facial distance at most `ell`,
//! that is, when some face walk contains both within `ell` steps of each
//! other. Colors are positive integers; a palette of size `p` is `1..=p`.

mod colorset;
mod solver;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{EmbeddedGraph, EmbeddingError};
use crate::simple::SimpleGraph;

pub use colorset::{ColorSet, MAX_COLOR};
pub use solver::{chromatic_index, chromatic_number, max_clique, ChromaticIndex, SolverOptions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("coloring has {found} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {edge} is colored twice")]
    DuplicateEntry { edge: usize },
    #[error("color {color} is outside 1..={max}")]
    ColorOutOfRange { color: u32, max: u32 },
    #[error("ell must be at least 1")]
    ZeroEll,
    #[error("partial coloring is not proper: edges {e} and {f} share color {color}")]
    Improper { e: usize, f: usize, color: u32 },
    #[error("palette of {palette} colors exhausted at edge {edge}")]
    PaletteExhausted { edge: usize, palette: u32 },
    #[error("recoloring precondition failed: {0}")]
    Precondition(String),
}

/// The `ell`-facial conflict graph; node `e` is edge `e` of the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    pub ell: usize,
    pub graph: SimpleGraph,
}

/// Calls `visit(i, j, gap)` for every pair of walk positions at cyclic
/// distance `1..=ell`, each unordered pair once.
fn for_each_close_pair(len: usize, ell: usize, mut visit: impl FnMut(usize, usize, usize)) {
    for i in 0..len {
        for step in 1..=ell.min(len / 2) {
            let j = (i + step) % len;
            // When len is even the antipodal pair would be met from both sides.
            if 2 * step == len && j < i {
                continue;
            }
            visit(i, j, step);
        }
    }
}

pub fn conflict_graph(g: &EmbeddedGraph, ell: usize) -> Result<ConflictGraph, ColoringError> {
    if ell == 0 {
        return Err(ColoringError::ZeroEll);
    }
    let mut pairs = Vec::new();
    for walk in g.faces() {
        let edges = walk.edges();
        for_each_close_pair(edges.len(), ell, |i, j, _| {
            if edges[i] != edges[j] {
                pairs.push((edges[i], edges[j]));
            }
        });
    }
    let graph = SimpleGraph::from_edges(g.edge_count(), &pairs).expect("pairs are in range and loop-free");
    Ok(ConflictGraph { ell, graph })
}

impl ConflictGraph {
    pub fn to_dot(&self) -> String {
        self.graph.to_dot("conflicts", |e| format!("e{e}"))
    }
}

/// An assignment of optional colors to the edges of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialColoring {
    pub colors: Vec<Option<u32>>,
    pub palette: u32,
}

impl PartialColoring {
    pub fn uncolored(m: usize, palette: u32) -> Self {
        PartialColoring { colors: vec![None; m], palette }
    }

    pub fn total(colors: Vec<u32>, palette: u32) -> Self {
        PartialColoring { colors: colors.into_iter().map(Some).collect(), palette }
    }

    /// Default palette size `3 * ell + 1`.
    pub fn default_palette(ell: usize) -> u32 {
        3 * ell as u32 + 1
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                out.push_str(&format!("c {e} {c}\n"));
            }
        }
        out
    }
}

/// Parses `c <edge> <color>` lines for a graph with `m` edges.
pub fn parse_coloring(text: &str, m: usize) -> Result<Vec<Option<u32>>, ColoringError> {
    let mut colors = vec![None; m];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: &str| ColoringError::Syntax { line: line_no, message: message.into() };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [kw, edge, color] = tokens.as_slice() else {
            return Err(syntax("expected `c <edge> <color>`"));
        };
        if *kw != "c" {
            return Err(syntax("expected `c <edge> <color>`"));
        }
        let edge: usize = edge.parse().map_err(|_| syntax("invalid edge id"))?;
        let color: u32 = color.parse().map_err(|_| syntax("invalid color"))?;
        if edge >= m {
            return Err(EmbeddingError::EdgeOutOfRange { edge, m }.into());
        }
        if color == 0 {
            return Err(ColoringError::ColorOutOfRange { color, max: MAX_COLOR });
        }
        if colors[edge].replace(color).is_some() {
            return Err(ColoringError::DuplicateEntry { edge });
        }
    }
    Ok(colors)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub e: usize,
    pub f: usize,
    pub color: u32,
    /// Face whose walk brings `e` and `f` within `gap` steps.
    pub face: usize,
    pub gap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    /// Number of distinct colors used.
    pub chi: usize,
    pub violations: Vec<Violation>,
    pub uncolored: Vec<usize>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.ok { "accept" } else { "reject" })?;
        writeln!(f, "colors used = {}", self.chi)?;
        for v in &self.violations {
            writeln!(
                f,
                "conflict: items {} and {} share color {} at distance {} on face {}",
                v.e, v.f, v.color, v.gap, v.face
            )?;
        }
        if !self.uncolored.is_empty() {
            let list: Vec<String> = self.uncolored.iter().map(ToString::to_string).collect();
            writeln!(f, "uncolored: {}", list.join(" "))?;
        }
        Ok(())
    }
}

/// Scans `sequence`s (one per face) for equal colors within `ell` steps.
fn scan<'a>(
    sequences: impl Iterator<Item = &'a [usize]>,
    ell: usize,
    colors: &[Option<u32>],
    require_total: bool,
) -> Verdict {
    let mut worst: BTreeMap<(usize, usize), Violation> = BTreeMap::new();
    for (face, seq) in sequences.enumerate() {
        for_each_close_pair(seq.len(), ell, |i, j, gap| {
            let (a, b) = (seq[i].min(seq[j]), seq[i].max(seq[j]));
            if a == b {
                return;
            }
            if let (Some(ca), Some(cb)) = (colors[a], colors[b]) {
                if ca == cb {
                    let candidate = Violation { e: a, f: b, color: ca, face, gap };
                    worst
                        .entry((a, b))
                        .and_modify(|v| {
                            if (gap, face) < (v.gap, v.face) {
                                *v = candidate.clone();
                            }
                        })
                        .or_insert(candidate);
                }
            }
        });
    }
    let uncolored: Vec<usize> = (0..colors.len()).filter(|&i| colors[i].is_none()).collect();
    let violations: Vec<Violation> = worst.into_values().collect();
    let chi = colors.iter().flatten().collect::<BTreeSet<_>>().len();
    Verdict {
        ok: violations.is_empty() && (!require_total || uncolored.is_empty()),
        chi,
        violations,
        uncolored,
    }
}

/// Checks an edge coloring. Violations are reported once per pair with the
/// smallest gap (ties broken by face id).
pub fn verify(
    g: &EmbeddedGraph,
    ell: usize,
    coloring: &[Option<u32>],
    require_total: bool,
) -> Result<Verdict, ColoringError> {
    if ell == 0 {
        return Err(ColoringError::ZeroEll);
    }
    if coloring.len() != g.edge_count() {
        return Err(ColoringError::LengthMismatch { expected: g.edge_count(), found: coloring.len() });
    }
    Ok(scan(g.faces().iter().map(|w| w.edges()), ell, coloring, require_total))
}

/// Checks a vertex coloring against facial distance between vertex
/// occurrences on face walks. Isolated vertices impose no constraint.
pub fn verify_vertex(g: &EmbeddedGraph, ell: usize, coloring: &[Option<u32>]) -> Result<Verdict, ColoringError> {
    if ell == 0 {
        return Err(ColoringError::ZeroEll);
    }
    if coloring.len() != g.vertex_count() {
        return Err(ColoringError::LengthMismatch { expected: g.vertex_count(), found: coloring.len() });
    }
    Ok(scan(g.faces().iter().map(|w| w.vertices()), ell, coloring, true))
}

fn check_palette(partial: &PartialColoring) -> Result<(), ColoringError> {
    let max = partial.palette.min(MAX_COLOR);
    for &c in partial.colors.iter().flatten() {
        if c == 0 || c > max {
            return Err(ColoringError::ColorOutOfRange { color: c, max });
        }
    }
    Ok(())
}

/// Colors of the palette not used on the `ell`-facial neighborhood of each
/// edge. A colored edge ignores its own color, so the set describes the
/// options for recoloring it.
pub fn available_colors(
    g: &EmbeddedGraph,
    ell: usize,
    partial: &PartialColoring,
) -> Result<Vec<ColorSet>, ColoringError> {
    check_palette(partial)?;
    let verdict = verify(g, ell, &partial.colors, false)?;
    if let Some(v) = verdict.violations.first() {
        return Err(ColoringError::Improper { e: v.e, f: v.f, color: v.color });
    }
    let conflicts = conflict_graph(g, ell)?;
    let full = ColorSet::palette(partial.palette);
    Ok((0..g.edge_count())
        .map(|e| {
            let mut set = full;
            for &f in conflicts.graph.neighbors(e) {
                if let Some(c) = partial.colors[f] {
                    set.remove(c);
                }
            }
            set
        })
        .collect())
}

/// Colors that `uv` can be switched to while both other edges at the
/// 3-vertex `u` stay uncolored and keep every color they could take.
///
/// The result is `A(uu1) & A(uu2)` minus the colors of colored edges that
/// are close to `uv` but to neither `uu1` nor `uu2`. Any color left is free
/// for `uv` because every other colored neighbor of `uv` already blocks it
/// from `uu1` or `uu2`.
pub fn recolor_candidates(
    g: &EmbeddedGraph,
    ell: usize,
    partial: &PartialColoring,
    uv: usize,
    u: usize,
) -> Result<ColorSet, ColoringError> {
    g.check_edge(uv)?;
    g.check_vertex(u)?;
    let pre = |msg: String| Err(ColoringError::Precondition(msg));
    if g.degree(u) != 3 {
        return pre(format!("vertex {u} has degree {}, not 3", g.degree(u)));
    }
    let (a, b) = g.endpoints(uv);
    if a == b || (a != u && b != u) {
        return pre(format!("edge {uv} is not a non-loop edge at vertex {u}"));
    }
    if partial.colors[uv].is_none() {
        return pre(format!("edge {uv} is uncolored"));
    }
    let others: Vec<usize> = g.rotation(u).iter().map(|d| d.edge()).filter(|&e| e != uv).collect();
    let [uu1, uu2] = others.as_slice() else {
        return pre(format!("vertex {u} carries a loop"));
    };
    if uu1 == uu2 || partial.colors[*uu1].is_some() || partial.colors[*uu2].is_some() {
        return pre(format!("edges {uu1} and {uu2} at vertex {u} must be distinct and uncolored"));
    }
    let avail = available_colors(g, ell, partial)?;
    let mut result = avail[*uu1].intersection(avail[*uu2]);
    let near_uv = g.facial_neighborhood(ell, uv)?;
    let mut covered = g.facial_neighborhood(ell, *uu1)?;
    covered.extend(g.facial_neighborhood(ell, *uu2)?);
    covered.extend([*uu1, *uu2]);
    for f in near_uv.difference(&covered) {
        if let Some(c) = partial.colors[*f] {
            result.remove(c);
        }
    }
    Ok(result)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OrderPolicy {
    /// Edge id order.
    EdgeOrder,
    /// Conflict degree, largest first; ties by edge id.
    DegreeDesc,
    /// Most distinct neighbor colors first; ties by degree, then edge id.
    Dsatur,
}

/// First-fit coloring. With `cap`, fails instead of exceeding `cap` colors.
pub fn greedy_color(
    g: &EmbeddedGraph,
    ell: usize,
    policy: OrderPolicy,
    cap: Option<u32>,
) -> Result<PartialColoring, ColoringError> {
    let conflicts = conflict_graph(g, ell)?;
    let colors = greedy_on(&conflicts.graph, policy, cap.map(|c| c.min(MAX_COLOR)))?;
    let used = colors.iter().copied().max().unwrap_or(0);
    Ok(PartialColoring::total(colors, cap.unwrap_or(used)))
}

pub(crate) fn greedy_on(graph: &SimpleGraph, policy: OrderPolicy, cap: Option<u32>) -> Result<Vec<u32>, ColoringError> {
    let n = graph.vertex_count();
    let mut colors = vec![0u32; n];
    let mut blocked = vec![ColorSet::empty(); n];
    let mut static_order: Vec<usize> = (0..n).collect();
    if policy != OrderPolicy::EdgeOrder {
        static_order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    }
    for step in 0..n {
        let v = match policy {
            OrderPolicy::Dsatur => *static_order
                .iter()
                .filter(|&&v| colors[v] == 0)
                .max_by_key(|&&v| (blocked[v].len(), graph.degree(v), std::cmp::Reverse(v)))
                .expect("an uncolored vertex remains"),
            _ => static_order[step],
        };
        let limit = cap.unwrap_or(MAX_COLOR);
        let c = (1..=limit)
            .find(|&c| !blocked[v].contains(c))
            .ok_or(ColoringError::PaletteExhausted { edge: v, palette: limit })?;
        colors[v] = c;
        for &w in graph.neighbors(v) {
            blocked[w].insert(c);
        }
    }
    Ok(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::generate::{cycle, k4, theta};

    #[test]
    fn conflict_graphs_of_short_cycles() {
        let c7 = conflict_graph(&cycle(7).unwrap(), 3).unwrap();
        assert_eq!(c7.graph, SimpleGraph::complete(7));
        let c8 = conflict_graph(&cycle(8).unwrap(), 3).unwrap();
        for e in 0..8 {
            let missing: Vec<usize> = (0..8).filter(|&f| f != e && !c8.graph.has_edge(e, f)).collect();
            assert_eq!(missing, vec![(e + 4) % 8]);
        }
        assert_eq!(conflict_graph(&k4(), 0), Err(ColoringError::ZeroEll));
    }

    #[test]
    fn large_ell_makes_faces_cliques() {
        let g = theta(2, 3, 4).unwrap();
        let c = conflict_graph(&g, 20).unwrap();
        for walk in g.faces() {
            for &e in walk.edges() {
                for &f in walk.edges() {
                    assert!(e == f || c.graph.has_edge(e, f));
                }
            }
        }
    }

    #[test]
    fn verify_on_c7() {
        let g = cycle(7).unwrap();
        let good: Vec<Option<u32>> = (1..=7).map(Some).collect();
        assert!(verify(&g, 3, &good, true).unwrap().ok);
        let mut bad = good.clone();
        bad[6] = Some(3);
        let verdict = verify(&g, 3, &bad, true).unwrap();
        assert!(!verdict.ok);
        assert_eq!(verdict.violations.len(), 1);
        let v = &verdict.violations[0];
        assert_eq!((v.e, v.f, v.color, v.gap), (2, 6, 3, 3));
        let partial = vec![Some(1), None, None, None, None, None, None];
        assert!(!verify(&g, 3, &partial, true).unwrap().ok);
        assert!(verify(&g, 3, &partial, false).unwrap().ok);
    }

    #[test]
    fn vertex_verification() {
        let c5 = cycle(5).unwrap();
        let distinct: Vec<Option<u32>> = (1..=5).map(Some).collect();
        assert!(verify_vertex(&c5, 2, &distinct).unwrap().ok);
        let repeat = vec![Some(1), Some(2), Some(3), Some(4), Some(2)];
        assert!(!verify_vertex(&c5, 2, &repeat).unwrap().ok);
        let dot = EmbeddedGraph::new(1, vec![], vec![vec![]]).unwrap();
        assert!(verify_vertex(&dot, 3, &[Some(1)]).unwrap().ok);
    }

    #[test]
    fn coloring_files() {
        let colors = parse_coloring("# c7\nc 0 1\nc 3 2 # trailing\n", 7).unwrap();
        assert_eq!(colors[0], Some(1));
        assert_eq!(colors[3], Some(2));
        assert!(matches!(parse_coloring("c 9 1\n", 7), Err(ColoringError::Embedding(_))));
        assert!(matches!(parse_coloring("c 1\n", 7), Err(ColoringError::Syntax { line: 1, .. })));
        assert_eq!(parse_coloring("c 1 1\nc 1 2\n", 7), Err(ColoringError::DuplicateEntry { edge: 1 }));
    }

    #[test]
    fn available_sets() {
        let g = cycle(8).unwrap();
        let blank = PartialColoring::uncolored(8, 10);
        assert!(available_colors(&g, 3, &blank).unwrap().iter().all(|s| s.len() == 10));
        let mut partial = blank.clone();
        partial.colors[0] = Some(4);
        let avail = available_colors(&g, 3, &partial).unwrap();
        assert!(!avail[1].contains(4));
        assert!(avail[4].contains(4));
        assert!(avail[0].contains(4));
        partial.colors[1] = Some(4);
        assert!(matches!(available_colors(&g, 3, &partial), Err(ColoringError::Improper { .. })));
    }

    #[test]
    fn greedy_policies() {
        let c7 = cycle(7).unwrap();
        for policy in [OrderPolicy::EdgeOrder, OrderPolicy::DegreeDesc, OrderPolicy::Dsatur] {
            let col = greedy_color(&c7, 3, policy, None).unwrap();
            assert_eq!(col.colors_used(), 7);
            assert!(verify(&c7, 3, &col.colors, true).unwrap().ok);
            let c8 = greedy_color(&cycle(8).unwrap(), 3, policy, None).unwrap();
            assert!(c8.colors_used() <= 7);
        }
        assert!(matches!(
            greedy_color(&c7, 3, OrderPolicy::EdgeOrder, Some(6)),
            Err(ColoringError::PaletteExhausted { .. })
        ));
    }
}
