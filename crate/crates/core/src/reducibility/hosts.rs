//! Concrete plane hosts for the catalog configurations.
//!
//! Most hosts are a "ringed face": a central `k`-face whose vertices sit on
//! the unit circle, a spoke from every vertex of degree at least 3 out to
//! radius 3, and an outer path between consecutive spoke tips. Each outer
//! path is long enough that every face around the central one has length at
//! least `min_side`, so those faces never wrap around within facial
//! distance 3 and the counts match the worst case the arguments assume.

use std::collections::BTreeSet;
use std::f64::consts::TAU;

use crate::embedding::generate::theta;
use crate::embedding::{EmbeddedGraph, EmbeddingError};
use crate::nullstellensatz::{lemma_polynomial, LemmaId};

use super::{Certificate, Configuration, SurgeryOp};

fn polar(radius: f64, turn: f64) -> (f64, f64) {
    // Turn 0 points up; increasing turns go clockwise.
    let angle = TAU / 4.0 - TAU * turn;
    (radius * angle.cos(), radius * angle.sin())
}

/// Central face edges are `0..k` with edge `i` joining vertex `i` to
/// vertex `i + 1 (mod k)`; vertices in `two_vertices` get no spoke.
pub fn ringed_face(k: usize, two_vertices: &[usize], min_side: usize) -> Result<EmbeddedGraph, EmbeddingError> {
    let skip: BTreeSet<usize> = two_vertices.iter().copied().collect();
    let spoked: Vec<usize> = (0..k).filter(|v| !skip.contains(v)).collect();
    if k < 3 || spoked.len() < 3 {
        return Err(EmbeddingError::BadParameters(
            "a ringed face needs at least 3 vertices and 3 spokes".into(),
        ));
    }
    let mut points: Vec<(f64, f64)> = (0..k).map(|i| polar(1.0, i as f64 / k as f64)).collect();
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut tip = vec![usize::MAX; k];
    for &v in &spoked {
        tip[v] = points.len();
        points.push(polar(3.0, v as f64 / k as f64));
        edges.push((v, tip[v]));
    }
    for (idx, &from) in spoked.iter().enumerate() {
        let to = spoked[(idx + 1) % spoked.len()];
        let gap = (to + k - from) % k;
        let length = min_side.saturating_sub(gap + 2).max(1);
        let mut prev = tip[from];
        for step in 1..length {
            let turn = (from as f64 + gap as f64 * step as f64 / length as f64) / k as f64;
            points.push(polar(3.0, turn));
            edges.push((prev, points.len() - 1));
            prev = points.len() - 1;
        }
        edges.push((prev, tip[to]));
    }
    EmbeddedGraph::from_straight_line(&points, &edges)
}

/// The face whose edges are exactly `0..k`.
pub(crate) fn central_face(g: &EmbeddedGraph, k: usize) -> usize {
    g.faces()
        .iter()
        .position(|w| w.len() == k && w.edges().iter().all(|&e| e < k))
        .expect("ringed faces keep their central face")
}

/// A central 4-vertex with four 2-neighbors whose other neighbors form a
/// 4-cycle. Edges `0..4` are the center's edges in clockwise order, edge
/// `4 + i` continues edge `i`, and `8..12` form the outer cycle.
pub fn four_vertex_host() -> Result<EmbeddedGraph, EmbeddingError> {
    let mut points = vec![(0.0, 0.0)];
    points.extend((0..4).map(|i| polar(1.0, i as f64 / 4.0)));
    points.extend((0..4).map(|i| polar(2.0, i as f64 / 4.0)));
    let mut edges: Vec<(usize, usize)> = (1..=4).map(|i| (0, i)).collect();
    edges.extend((1..=4).map(|i| (i, i + 4)));
    edges.extend((5..=8).map(|i| (i, if i == 8 { 5 } else { i + 1 })));
    EmbeddedGraph::from_straight_line(&points, &edges)
}

fn all_pairs(vars: usize, skip: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=vars {
        for j in i + 1..=vars {
            if !skip.contains(&(i, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

fn lemma_config(
    name: &str,
    description: &str,
    lemma: LemmaId,
    host: EmbeddedGraph,
    surgery: SurgeryOp,
    variables: Vec<Option<usize>>,
) -> Configuration {
    let poly = lemma_polynomial(lemma);
    Configuration {
        name: name.into(),
        description: description.into(),
        ell: 3,
        palette: 10,
        host,
        surgery,
        variables,
        bounds: poly.caps.clone(),
        pairs: poly.pairs.pairs().iter().map(|&(i, j)| (i + 1, j + 1)).collect(),
        certificate: Certificate::Nullstellensatz { target: poly.target.exponents().to_vec(), lemma: Some(lemma) },
    }
}

fn ten_face(name: &str, description: &str, lemma: LemmaId, two_vertices: [usize; 2], identified: (usize, usize)) -> Configuration {
    let host = ringed_face(10, &two_vertices, 7).expect("valid host");
    let face = central_face(&host, 10);
    let variables = (0..10).map(|i| (i != identified.0 && i != identified.1).then_some(i)).collect();
    lemma_config(
        name,
        description,
        lemma,
        host,
        SurgeryOp::IdentifyEdges { e: identified.0, f: identified.1, face },
        variables,
    )
}

/// The catalog of reducible configurations with their hosts.
pub fn catalog() -> Vec<Configuration> {
    let mut out = Vec::new();

    let host = four_vertex_host().expect("valid host");
    out.push(lemma_config(
        "four-vertex",
        "a 4-vertex with four 2-neighbors; delete it and its neighbors",
        LemmaId::FourVertex,
        host,
        SurgeryOp::DeleteVertices { vertices: vec![0, 1, 2, 3, 4] },
        (0..8).map(Some).collect(),
    ));

    let host = ringed_face(4, &[], 7).expect("valid host");
    let face = central_face(&host, 4);
    out.push(Configuration {
        name: "face-length-4".into(),
        description: "a 4-face; contract it".into(),
        ell: 3,
        palette: 10,
        host,
        surgery: SurgeryOp::ContractFace { face },
        variables: (0..4).map(Some).collect(),
        bounds: vec![4; 4],
        pairs: all_pairs(4, &[]),
        certificate: Certificate::DegreeList,
    });

    // Three paths of length 4 between two poles; edge 1 joins the first and
    // second interior vertex of the first path.
    let host = theta(4, 4, 4).expect("valid host");
    out.push(Configuration {
        name: "three-thread".into(),
        description: "a 2-vertex with two 2-neighbors; contract one of its edges".into(),
        ell: 3,
        palette: 10,
        host,
        surgery: SurgeryOp::ContractEdge { edge: 1 },
        variables: vec![Some(1)],
        bounds: vec![1],
        pairs: Vec::new(),
        certificate: Certificate::DegreeList,
    });

    let host = ringed_face(8, &[], 8).expect("valid host");
    let face = central_face(&host, 8);
    // Variables are edges 1, 2, 3, 5, 6, 7; far pairs are 1-5, 2-6, 3-7.
    out.push(Configuration {
        name: "eight-face".into(),
        description: "an 8-face; identify two opposite edges".into(),
        ell: 3,
        palette: 10,
        host,
        surgery: SurgeryOp::IdentifyEdges { e: 0, f: 4, face },
        variables: [1, 2, 3, 5, 6, 7].into_iter().map(Some).collect(),
        bounds: vec![3; 6],
        pairs: all_pairs(6, &[(1, 4), (2, 5), (3, 6)]),
        certificate: Certificate::HallWithPairing { pairs: vec![(0, 3), (1, 4), (2, 5)] },
    });

    // Vertex order v1 v2 v3 v4' v4 v5 v6 v7 v1' with the 2-vertex v6 at
    // index 6; edges 8 (v1'v1) and 3 (v4'v4) are identified.
    let host = ringed_face(9, &[6], 7).expect("valid host");
    let face = central_face(&host, 9);
    out.push(lemma_config(
        "nine-face",
        "a 9-face with a 2-vertex; identify two edges at distance 4",
        LemmaId::NineFace,
        host,
        SurgeryOp::IdentifyEdges { e: 8, f: 3, face },
        [0, 1, 2, 4, 5, 6, 7].into_iter().map(Some).collect(),
    ));

    out.push(ten_face(
        "ten-face-adjacent",
        "a 10-face with two adjacent 2-vertices",
        LemmaId::TenFaceAdjacent,
        [0, 1],
        (3, 7),
    ));
    out.push(ten_face(
        "ten-face-dist3",
        "a 10-face with 2-vertices at distance 3",
        LemmaId::TenFaceDist3,
        [0, 3],
        (4, 8),
    ));
    out.push(ten_face(
        "ten-face-dist4",
        "a 10-face with 2-vertices at distance 4",
        LemmaId::TenFaceDist4,
        [0, 4],
        (4, 8),
    ));
    out
}
