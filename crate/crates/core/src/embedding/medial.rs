use super::{Dart, EmbeddedGraph, EmbeddingError};

/// The medial graph together with the map from host edges to medial vertices.
#[derive(Clone, Debug)]
pub struct Medial {
    pub graph: EmbeddedGraph,
    /// `correspondence[e]` is the medial vertex standing for host edge `e`.
    pub correspondence: Vec<usize>,
}

/// Builds the medial graph: one vertex per edge, one edge per corner.
///
/// Host dart `x` becomes medial edge `x`, running from the vertex of
/// `edge(x)` to the vertex of `edge(phi(x))`, so consecutive edges of every
/// face walk are joined and the medial graph has `2m` edges. Around the
/// medial vertex of `e` (with `d` its end-0 dart) the clockwise order is:
/// the corner entering `d`, the corner leaving `d`, the corner entering
/// `twin(d)`, the corner leaving `twin(d)`.
pub fn medial(g: &EmbeddedGraph) -> Result<Medial, EmbeddingError> {
    if let Some(vertex) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(EmbeddingError::IsolatedVertex { vertex });
    }
    let m = g.edge_count();
    let endpoints = (0..2 * m)
        .map(|x| {
            let x = Dart::from_index(x);
            (x.edge(), g.phi(x).edge())
        })
        .collect();
    let rotation = (0..m)
        .map(|e| {
            let d = Dart::new(e, 0);
            let t = d.twin();
            vec![
                Dart::new(g.phi_inv(d).index(), 1),
                Dart::new(d.index(), 0),
                Dart::new(g.phi_inv(t).index(), 1),
                Dart::new(t.index(), 0),
            ]
        })
        .collect();
    let graph = EmbeddedGraph::new(m, endpoints, rotation)?;
    Ok(Medial { graph, correspondence: (0..m).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::generate::{cycle, k4};

    #[test]
    fn medial_of_a_triangle_doubles_every_pair() {
        let md = medial(&cycle(3).unwrap()).unwrap();
        let h = &md.graph;
        assert_eq!((h.vertex_count(), h.edge_count()), (3, 6));
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            let joins = h
                .all_endpoints()
                .iter()
                .filter(|&&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
                .count();
            assert_eq!(joins, 2);
        }
    }

    #[test]
    fn medial_of_k4_is_the_octahedron() {
        let h = medial(&k4()).unwrap().graph;
        assert_eq!((h.vertex_count(), h.edge_count(), h.face_count()), (6, 12, 8));
        assert!(h.faces().iter().all(|f| f.len() == 3));
        assert!((0..6).all(|v| h.degree(v) == 4));
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = EmbeddedGraph::new(1, vec![], vec![vec![]]).unwrap();
        assert_eq!(medial(&g).unwrap_err(), EmbeddingError::IsolatedVertex { vertex: 0 });
    }
}
