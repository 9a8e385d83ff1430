//! Graph surgeries that keep the embedding plane: face and edge contraction,
//! edge identification across a face, vertex deletion and face splitting.
//!
//! Every operation returns a fresh [`EmbeddedGraph`] together with maps from
//! old edge and vertex ids to new ones. The result goes through the same
//! validation as parsed input, so a wrong splice shows up as an error rather
//! than a silently broken embedding.

use std::collections::BTreeSet;

use super::{Dart, EmbeddedGraph, EmbeddingError};

#[derive(Clone, Debug)]
pub struct Surgery {
    pub graph: EmbeddedGraph,
    /// Old edge id to new edge id. After `identify_edges` both merged edges
    /// map to the same new id.
    pub edge_map: Vec<Option<usize>>,
    pub vertex_map: Vec<Option<usize>>,
}

/// Assembles a graph from old-id pieces. `rep[v]` is the old vertex that `v`
/// is merged into (`None` = deleted); `rotation` is indexed by old
/// representative vertices and holds old darts. Kept edges keep their end
/// orientation.
fn assemble(
    g: &EmbeddedGraph,
    rep: &[Option<usize>],
    removed_edges: &BTreeSet<usize>,
    mut rotation: Vec<Vec<Dart>>,
    alias: &[(usize, usize)],
) -> Result<Surgery, EmbeddingError> {
    let mut vertex_new = vec![None; g.vertex_count()];
    let mut n = 0;
    for v in 0..g.vertex_count() {
        if rep[v] == Some(v) {
            vertex_new[v] = Some(n);
            n += 1;
        }
    }
    let vertex_map: Vec<Option<usize>> = (0..g.vertex_count())
        .map(|v| rep[v].and_then(|r| vertex_new[r]))
        .collect();

    let mut edge_map = vec![None; g.edge_count()];
    let mut endpoints = Vec::new();
    for e in 0..g.edge_count() {
        if removed_edges.contains(&e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let map = |w: usize| vertex_map[w].expect("kept edge touches a deleted vertex");
        edge_map[e] = Some(endpoints.len());
        endpoints.push((map(u), map(v)));
    }
    for &(from, to) in alias {
        edge_map[from] = edge_map[to];
    }

    let mut new_rotation = vec![Vec::new(); n];
    for v in 0..g.vertex_count() {
        if let Some(id) = vertex_new[v] {
            new_rotation[id] = std::mem::take(&mut rotation[v])
                .into_iter()
                .filter(|d| !removed_edges.contains(&d.edge()))
                .map(|d| Dart::new(edge_map[d.edge()].expect("kept dart"), d.end()))
                .collect();
        }
    }
    let graph = EmbeddedGraph::new(n, endpoints, new_rotation)?;
    Ok(Surgery { graph, edge_map, vertex_map })
}

/// Darts at the vertex of `start`, clockwise from `sigma(start)` up to but
/// excluding `stop`.
fn arc(g: &EmbeddedGraph, start: Dart, stop: Dart) -> Vec<Dart> {
    let mut out = Vec::new();
    let mut d = g.sigma(start);
    while d != stop {
        out.push(d);
        d = g.sigma(d);
    }
    out
}

impl EmbeddedGraph {
    /// Removes every edge of the face boundary and identifies its vertices.
    ///
    /// With walk darts `d_0..d_{k-1}` at vertices `v_0..v_{k-1}`, the surviving
    /// darts at `v_i` form the clockwise arc from `d_i` to `twin(d_{i-1})`.
    /// The merged vertex lists these arcs in reverse walk order, which is the
    /// order met when walking around the collapsed face.
    pub fn contract_face(&self, face: usize) -> Result<Surgery, EmbeddingError> {
        self.check_face(face)?;
        let walk = self.face(face);
        if !walk.is_simple() {
            return Err(EmbeddingError::NonSimpleFace { face });
        }
        let k = walk.len();
        let darts = walk.darts();
        let boundary_vertices: BTreeSet<usize> = walk.vertices().iter().copied().collect();
        let merged = *boundary_vertices.iter().next().expect("faces are nonempty");
        let removed: BTreeSet<usize> = walk.edges().iter().copied().collect();

        let mut merged_rotation = Vec::new();
        for i in (0..k).rev() {
            let stop = darts[(i + k - 1) % k].twin();
            merged_rotation.extend(arc(self, darts[i], stop));
        }

        let rep: Vec<Option<usize>> = (0..self.vertex_count())
            .map(|v| Some(if boundary_vertices.contains(&v) { merged } else { v }))
            .collect();
        let mut rotation = self.rotations().to_vec();
        rotation[merged] = merged_rotation;
        assemble(self, &rep, &removed, rotation, &[])
    }

    /// Contracts a non-loop edge; edges parallel to it become loops.
    pub fn contract_edge(&self, edge: usize) -> Result<Surgery, EmbeddingError> {
        self.check_edge(edge)?;
        if self.is_loop(edge) {
            return Err(EmbeddingError::LoopEdge { edge });
        }
        let a = Dart::new(edge, 0);
        let b = a.twin();
        let (u, v) = (self.origin(a), self.origin(b));
        let keep = u.min(v);
        let mut merged = arc(self, a, a);
        merged.extend(arc(self, b, b));
        let rep: Vec<Option<usize>> = (0..self.vertex_count())
            .map(|w| Some(if w == u || w == v { keep } else { w }))
            .collect();
        let mut rotation = self.rotations().to_vec();
        rotation[keep] = merged;
        assemble(self, &rep, &BTreeSet::from([edge]), rotation, &[])
    }

    pub fn delete_vertex(&self, vertex: usize) -> Result<Surgery, EmbeddingError> {
        self.delete_vertices(&[vertex])
    }

    pub fn delete_vertices(&self, vertices: &[usize]) -> Result<Surgery, EmbeddingError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let gone: BTreeSet<usize> = vertices.iter().copied().collect();
        let removed: BTreeSet<usize> = (0..self.edge_count())
            .filter(|&e| {
                let (u, v) = self.endpoints(e);
                gone.contains(&u) || gone.contains(&v)
            })
            .collect();
        let rep: Vec<Option<usize>> = (0..self.vertex_count())
            .map(|v| (!gone.contains(&v)).then_some(v))
            .collect();
        assemble(self, &rep, &removed, self.rotations().to_vec(), &[])
    }

    /// Identifies two vertex-disjoint edges of one face so that the face
    /// boundary turns into a dumbbell.
    ///
    /// Let `e` run `a -> b` and `f` run `c -> d` along the face. Then `a` and
    /// `d` merge into `X`, `b` and `c` merge into `Y`, and `e` survives as the
    /// bar `X - Y`. Splice rule: `X` is the rotation of `a` read from `e`,
    /// followed by the rotation of `d` read from the dart after `f`; `Y` is
    /// `e`'s other dart, then the rotation of `c` read after `f`, then the
    /// rotation of `b` read after `e`. The face splits into the two cycles
    /// `b..c` and `d..a`, while the bar separates the two faces that used to
    /// lie across `e` and `f`.
    pub fn identify_edges(&self, e: usize, f: usize, face: usize) -> Result<Surgery, EmbeddingError> {
        self.check_edge(e)?;
        self.check_edge(f)?;
        self.check_face(face)?;
        for x in [e, f] {
            if self.is_loop(x) {
                return Err(EmbeddingError::LoopEdge { edge: x });
            }
        }
        let on_face = |x: usize| -> Result<Dart, EmbeddingError> {
            let hits: Vec<Dart> = [Dart::new(x, 0), Dart::new(x, 1)]
                .into_iter()
                .filter(|&d| self.face_of(d).0 == face)
                .collect();
            match hits.as_slice() {
                [d] => Ok(*d),
                _ => Err(EmbeddingError::NotOnFace { edge: x, face }),
            }
        };
        if e == f {
            return Err(EmbeddingError::EdgesShareVertex { e, f });
        }
        let de = on_face(e)?;
        let df = on_face(f)?;
        let (a, b) = (self.origin(de), self.target(de));
        let (c, d) = (self.origin(df), self.target(df));
        if [a, b].iter().any(|x| *x == c || *x == d) {
            return Err(EmbeddingError::EdgesShareVertex { e, f });
        }

        let mut x_rot = vec![de];
        x_rot.extend(arc(self, de, de));
        x_rot.extend(arc(self, df.twin(), df.twin()));
        let mut y_rot = vec![de.twin()];
        y_rot.extend(arc(self, df, df));
        y_rot.extend(arc(self, de.twin(), de.twin()));

        let rep: Vec<Option<usize>> = (0..self.vertex_count())
            .map(|w| {
                Some(if w == d {
                    a
                } else if w == c {
                    b
                } else {
                    w
                })
            })
            .collect();
        let mut rotation = self.rotations().to_vec();
        rotation[a] = x_rot;
        rotation[b] = y_rot;
        rotation[c].clear();
        rotation[d].clear();
        let mut s = assemble(self, &rep, &BTreeSet::from([f]), rotation, &[(f, e)])?;
        // The bar keeps e's orientation: end 0 at the merged a/d vertex.
        debug_assert_eq!(
            s.graph.endpoints(s.edge_map[e].unwrap()).0,
            s.vertex_map[if de.end() == 0 { a } else { b }].unwrap()
        );
        s.edge_map[f] = s.edge_map[e];
        Ok(s)
    }

    /// Inserts a path of `length` edges inside `face`, joining the corners at
    /// walk positions `i` and `j`. New edges get ids `m..m + length` in path
    /// order; new vertices get ids `n..`.
    pub fn split_face(&self, face: usize, i: usize, j: usize, length: usize) -> Result<EmbeddedGraph, EmbeddingError> {
        self.check_face(face)?;
        let walk = self.face(face);
        let k = walk.len();
        if i >= k || j >= k || i == j || length == 0 {
            return Err(EmbeddingError::BadParameters(format!(
                "corners {i}, {j} of a {k}-face with path length {length}"
            )));
        }
        let darts = walk.darts();
        let (x, y) = (self.origin(darts[i]), self.origin(darts[j]));
        let n0 = self.vertex_count();
        let m0 = self.edge_count();

        let mut path = vec![x];
        path.extend(n0..n0 + length - 1);
        path.push(y);
        let mut endpoints = self.all_endpoints().to_vec();
        for s in 0..length {
            endpoints.push((path[s], path[s + 1]));
        }
        let mut rotation = self.rotations().to_vec();
        rotation.resize(n0 + length - 1, Vec::new());
        let insert_before = |rot: &mut Vec<Dart>, anchor: Dart, new: Dart| {
            let pos = rot.iter().position(|&d| d == anchor).expect("anchor at vertex");
            rot.insert(pos, new);
        };
        insert_before(&mut rotation[x], darts[i], Dart::new(m0, 0));
        insert_before(&mut rotation[y], darts[j], Dart::new(m0 + length - 1, 1));
        for s in 1..length {
            rotation[n0 + s - 1] = vec![Dart::new(m0 + s - 1, 1), Dart::new(m0 + s, 0)];
        }
        EmbeddedGraph::new(n0 + length - 1, endpoints, rotation)
    }
}

#[cfg(test)]
mod tests {
    use crate::embedding::generate::{cycle, k4};
    use crate::embedding::{EmbeddedGraph, EmbeddingError};

    fn counts(g: &EmbeddedGraph) -> (usize, usize, usize) {
        (g.vertex_count(), g.edge_count(), g.face_count())
    }

    #[test]
    fn contracting_a_k4_face_leaves_a_triple_edge() {
        let g = k4();
        let tri = g.faces().iter().position(|f| !f.vertices().contains(&0)).unwrap();
        let s = g.contract_face(tri).unwrap();
        assert_eq!(counts(&s.graph), (2, 3, 3));
        assert_eq!(s.graph.euler_characteristic(), 2);
        for f in s.graph.faces() {
            assert_eq!(f.len(), 2);
        }
    }

    #[test]
    fn contracting_a_standalone_triangle_leaves_one_vertex() {
        let s = cycle(3).unwrap().contract_face(0).unwrap();
        assert_eq!(counts(&s.graph), (1, 0, 1));
        assert_eq!(s.graph.euler_characteristic(), 2);
        assert!(s.edge_map.iter().all(Option::is_none));
    }

    #[test]
    fn contract_face_rejects_repeated_vertices() {
        // A pendant edge hanging inside a square repeats its attachment vertex.
        let g = cycle(4).unwrap();
        let with_spike = {
            let inner = g.faces()[0].len();
            assert_eq!(inner, 4);
            let mut h = g.split_face(0, 0, 2, 2).unwrap();
            h = h.delete_vertex(0).unwrap().graph;
            h
        };
        let bad = with_spike
            .faces()
            .iter()
            .position(|f| !f.is_simple())
            .expect("spike face");
        assert_eq!(
            with_spike.contract_face(bad).unwrap_err(),
            EmbeddingError::NonSimpleFace { face: bad }
        );
    }

    #[test]
    fn deleting_vertices() {
        let c5 = cycle(5).unwrap();
        let p4 = c5.delete_vertex(2).unwrap().graph;
        assert_eq!(counts(&p4), (4, 3, 1));
        let c3 = k4().delete_vertex(0).unwrap().graph;
        assert_eq!(counts(&c3), (3, 3, 2));
        let split = cycle(4).unwrap().split_face(0, 0, 2, 2).unwrap();
        // Vertex 4 is the middle of the chord; removing both chord ends of a
        // theta leaves two paths.
        let cut = split.delete_vertices(&[0, 2]).unwrap().graph;
        assert_eq!(cut.component_count(), 3);
        assert!(!cut.warnings().is_empty());
    }

    #[test]
    fn identify_edges_on_an_eight_cycle_gives_a_dumbbell() {
        let g = cycle(8).unwrap();
        let s = g.identify_edges(0, 4, 0).unwrap();
        let h = &s.graph;
        assert_eq!(counts(h), (6, 7, 3));
        assert_eq!(h.euler_characteristic(), 2);
        assert_eq!(s.edge_map[0], s.edge_map[4]);
        let mut lengths: Vec<usize> = h.faces().iter().map(|f| f.len()).collect();
        lengths.sort();
        // Two 3-edge cycles joined by the bar; the outside walk uses the bar twice.
        assert_eq!(lengths, vec![3, 3, 8]);
    }

    #[test]
    fn identify_edges_rejects_adjacent_edges() {
        let g = cycle(8).unwrap();
        assert_eq!(
            g.identify_edges(0, 1, 0).unwrap_err(),
            EmbeddingError::EdgesShareVertex { e: 0, f: 1 }
        );
    }

    #[test]
    fn contract_edge_merges_endpoints() {
        let s = cycle(5).unwrap().contract_edge(1).unwrap();
        assert_eq!(counts(&s.graph), (4, 4, 2));
        assert_eq!(s.edge_map[1], None);
    }
}
