use std::collections::BTreeSet;

use super::{Dart, EmbeddingError};

/// A closed walk of darts bounding one face: one orbit of the face
/// permutation `phi(d) = sigma(twin(d))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    darts: Vec<Dart>,
    edges: Vec<usize>,
    vertices: Vec<usize>,
}

impl FaceWalk {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Edge sequence of the walk; a bridge shows up twice.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Vertex sequence: entry `i` is the vertex the `i`-th dart leaves from.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        let distinct: BTreeSet<usize> = self.vertices.iter().copied().collect();
        distinct.len() == self.vertices.len()
    }
}

/// Non-fatal observations about an otherwise valid embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    Disconnected { components: usize },
}

/// A plane pseudograph given by its rotation system.
///
/// Loops and parallel edges are allowed. `rotation[v]` lists the darts at `v`
/// in clockwise order; faces are the orbits of `phi(d) = sigma(twin(d))`
/// where `sigma` is the clockwise successor at the dart's vertex. Faces are
/// numbered by their smallest dart and every walk starts at that dart, so
/// face ids are a pure function of the rotation system.
#[derive(Clone, Debug)]
pub struct EmbeddedGraph {
    n: usize,
    endpoints: Vec<(usize, usize)>,
    rotation: Vec<Vec<Dart>>,
    origin: Vec<usize>,
    next: Vec<Dart>,
    prev: Vec<Dart>,
    faces: Vec<FaceWalk>,
    /// (face, position) of each dart.
    dart_face: Vec<(usize, usize)>,
    components: usize,
}

impl PartialEq for EmbeddedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.endpoints == other.endpoints
            && self.rotation.len() == other.rotation.len()
            && self
                .rotation
                .iter()
                .zip(&other.rotation)
                .all(|(a, b)| same_cycle(a, b))
    }
}

impl Eq for EmbeddedGraph {}

fn same_cycle(a: &[Dart], b: &[Dart]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    match b.iter().position(|&d| d == a[0]) {
        Some(shift) => (0..a.len()).all(|i| a[i] == b[(i + shift) % b.len()]),
        None => false,
    }
}

impl EmbeddedGraph {
    /// Validates a rotation system and derives its faces.
    pub fn new(
        n: usize,
        endpoints: Vec<(usize, usize)>,
        rotation: Vec<Vec<Dart>>,
    ) -> Result<Self, EmbeddingError> {
        let m = endpoints.len();
        if rotation.len() != n {
            return Err(EmbeddingError::RotationCount {
                expected: n,
                found: rotation.len(),
            });
        }
        for (edge, &(u, v)) in endpoints.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(EmbeddingError::EndpointOutOfRange { edge, vertex: w });
                }
            }
        }

        let mut origin = vec![usize::MAX; 2 * m];
        let mut next = vec![Dart::from_index(0); 2 * m];
        let mut prev = vec![Dart::from_index(0); 2 * m];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d.index() >= 2 * m {
                    return Err(EmbeddingError::DartOutOfRange { vertex: v, dart: d.index() });
                }
                if origin[d.index()] != usize::MAX {
                    return Err(EmbeddingError::DuplicateDart { dart: d.index() });
                }
                let (a, b) = endpoints[d.edge()];
                let expected = if d.end() == 0 { a } else { b };
                if expected != v {
                    return Err(EmbeddingError::WrongVertex {
                        dart: d.index(),
                        listed_at: v,
                        expected,
                    });
                }
                origin[d.index()] = v;
                let succ = rot[(i + 1) % rot.len()];
                next[d.index()] = succ;
                prev[succ.index()] = d;
            }
        }
        if let Some(missing) = origin.iter().position(|&o| o == usize::MAX) {
            return Err(EmbeddingError::MissingDart { dart: missing });
        }

        let mut dart_face = vec![(usize::MAX, 0); 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if dart_face[start].0 != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut d = Dart::from_index(start);
            loop {
                dart_face[d.index()] = (id, darts.len());
                darts.push(d);
                d = next[d.twin().index()];
                if d.index() == start {
                    break;
                }
            }
            let edges = darts.iter().map(|d| d.edge()).collect();
            let vertices = darts.iter().map(|d| origin[d.index()]).collect();
            faces.push(FaceWalk { darts, edges, vertices });
        }

        let components = count_components(n, &endpoints);
        let isolated = rotation.iter().filter(|r| r.is_empty()).count();
        // Each component of a plane embedding satisfies V - E + F = 2 on its own.
        let chi = n as i64 - m as i64 + (faces.len() + isolated) as i64;
        if chi != 2 * components as i64 {
            return Err(EmbeddingError::NotPlane {
                euler: chi - 2 * (components as i64 - 1),
                components,
            });
        }

        Ok(EmbeddedGraph {
            n,
            endpoints,
            rotation,
            origin,
            next,
            prev,
            faces,
            dart_face,
            components,
        })
    }

    /// Builds the rotation system of a straight-line drawing: darts around
    /// each vertex are sorted clockwise by angle. Crossing-free drawings only;
    /// a drawing with crossings fails the plane check.
    pub fn from_straight_line(
        points: &[(f64, f64)],
        edges: &[(usize, usize)],
    ) -> Result<Self, EmbeddingError> {
        let n = points.len();
        let mut rotation: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(EmbeddingError::EndpointOutOfRange {
                    edge: e,
                    vertex: u.max(v),
                });
            }
            if u == v {
                return Err(EmbeddingError::Unsupported("loops have no straight-line drawing"));
            }
            let angle = |from: usize, to: usize| {
                let (x0, y0) = points[from];
                let (x1, y1) = points[to];
                (y1 - y0).atan2(x1 - x0)
            };
            rotation[u].push((angle(u, v), Dart::new(e, 0)));
            rotation[v].push((angle(v, u), Dart::new(e, 1)));
        }
        let rotation = rotation
            .into_iter()
            .map(|mut r| {
                r.sort_by(|a, b| b.0.total_cmp(&a.0));
                r.into_iter().map(|(_, d)| d).collect()
            })
            .collect();
        EmbeddedGraph::new(n, edges.to_vec(), rotation)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.endpoints.len()
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.endpoints[edge]
    }

    pub fn all_endpoints(&self) -> &[(usize, usize)] {
        &self.endpoints
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (u, v) = self.endpoints[edge];
        u == v
    }

    /// Vertex the dart leaves from.
    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d.index()]
    }

    /// Vertex the dart points to.
    pub fn target(&self, d: Dart) -> usize {
        self.origin[d.twin().index()]
    }

    /// Clockwise successor of `d` around its vertex.
    pub fn sigma(&self, d: Dart) -> Dart {
        self.next[d.index()]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.prev[d.index()]
    }

    /// Face permutation: the dart following `d` on its face walk.
    pub fn phi(&self, d: Dart) -> Dart {
        self.next[d.twin().index()]
    }

    pub fn phi_inv(&self, d: Dart) -> Dart {
        self.prev[d.index()].twin()
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &FaceWalk {
        &self.faces[id]
    }

    /// Face containing `d` and the position of `d` on that walk.
    pub fn face_of(&self, d: Dart) -> (usize, usize) {
        self.dart_face[d.index()]
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    /// Faces of the drawing. Components drawn side by side share their outer
    /// face, and an isolated vertex sits inside one face of its own.
    pub fn face_count(&self) -> usize {
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        (self.faces.len() + isolated + 1).saturating_sub(self.components.max(1))
    }

    /// `V - E + F`; equals `1 + components` for every valid embedding.
    pub fn euler_characteristic(&self) -> i64 {
        self.n as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn warnings(&self) -> Vec<Warning> {
        let mut out = Vec::new();
        if self.components > 1 {
            out.push(Warning::Disconnected { components: self.components });
        }
        out
    }

    /// Neighbors of `v` with multiplicity (a loop contributes `v` twice).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().map(move |&d| self.target(d))
    }

    pub fn check_edge(&self, edge: usize) -> Result<(), EmbeddingError> {
        if edge >= self.edge_count() {
            Err(EmbeddingError::EdgeOutOfRange { edge, m: self.edge_count() })
        } else {
            Ok(())
        }
    }

    pub fn check_vertex(&self, vertex: usize) -> Result<(), EmbeddingError> {
        if vertex >= self.n {
            Err(EmbeddingError::VertexOutOfRange { vertex, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_face(&self, face: usize) -> Result<(), EmbeddingError> {
        if face >= self.faces.len() {
            Err(EmbeddingError::FaceOutOfRange { face, count: self.faces.len() })
        } else {
            Ok(())
        }
    }

    /// Facial distance together with a face realizing it.
    ///
    /// The distance is the smallest cyclic gap between an occurrence of `e`
    /// and an occurrence of `f` on a common face walk. `None` means the two
    /// edges never share a face.
    pub fn facial_distance_witness(
        &self,
        e: usize,
        f: usize,
    ) -> Result<Option<(usize, usize)>, EmbeddingError> {
        self.check_edge(e)?;
        self.check_edge(f)?;
        if e == f {
            let (face, _) = self.face_of(Dart::new(e, 0));
            return Ok(Some((0, face)));
        }
        let mut best: Option<(usize, usize)> = None;
        for de in [Dart::new(e, 0), Dart::new(e, 1)] {
            let (fe, pe) = self.face_of(de);
            for df in [Dart::new(f, 0), Dart::new(f, 1)] {
                let (ff, pf) = self.face_of(df);
                if fe != ff {
                    continue;
                }
                let len = self.faces[fe].len();
                let diff = pe.abs_diff(pf);
                let gap = diff.min(len - diff);
                if best.is_none_or(|(g, face)| (gap, fe) < (g, face)) {
                    best = Some((gap, fe));
                }
            }
        }
        Ok(best)
    }

    pub fn facial_distance(&self, e: usize, f: usize) -> Result<Option<usize>, EmbeddingError> {
        Ok(self.facial_distance_witness(e, f)?.map(|(gap, _)| gap))
    }

    /// All edges other than `e` within facial distance `ell` of `e`.
    pub fn facial_neighborhood(&self, ell: usize, e: usize) -> Result<BTreeSet<usize>, EmbeddingError> {
        self.check_edge(e)?;
        let mut out = BTreeSet::new();
        for d in [Dart::new(e, 0), Dart::new(e, 1)] {
            let (face, pos) = self.face_of(d);
            let walk = self.faces[face].edges();
            let len = walk.len();
            for step in 1..=ell.min(len) {
                out.insert(walk[(pos + step) % len]);
                out.insert(walk[(pos + len - step % len) % len]);
            }
        }
        out.remove(&e);
        Ok(out)
    }

    /// Smallest cyclic gap between occurrences of `u` and `w` on a common
    /// face walk (vertex version of facial distance).
    pub fn vertex_facial_distance(&self, u: usize, w: usize) -> Result<Option<usize>, EmbeddingError> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if u == w {
            return Ok(Some(0));
        }
        let mut best: Option<usize> = None;
        for walk in &self.faces {
            let len = walk.len();
            let vs = walk.vertices();
            for (i, &a) in vs.iter().enumerate() {
                if a != u {
                    continue;
                }
                for (j, &b) in vs.iter().enumerate() {
                    if b == w {
                        let diff = i.abs_diff(j);
                        let gap = diff.min(len - diff);
                        best = Some(best.map_or(gap, |g| g.min(gap)));
                    }
                }
            }
        }
        Ok(best)
    }
}

fn count_components(n: usize, endpoints: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut count = n;
    for &(u, v) in endpoints {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}
