//! Small families of plane graphs used as test inputs.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Dart, EmbeddedGraph, EmbeddingError};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    K4,
    Prism(usize),
    Theta(usize, usize, usize),
    /// K4 with the three edges at one vertex each subdivided `ell - 1` times.
    SubdividedK4(usize),
}

impl Family {
    pub fn build(self) -> Result<EmbeddedGraph, EmbeddingError> {
        match self {
            Family::Cycle(n) => cycle(n),
            Family::K4 => Ok(k4()),
            Family::Prism(n) => prism(n),
            Family::Theta(a, b, c) => theta(a, b, c),
            Family::SubdividedK4(ell) => subdivided_k4(ell),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::K4 => write!(f, "k4"),
            Family::Prism(n) => write!(f, "prism:{n}"),
            Family::Theta(a, b, c) => write!(f, "theta:{a},{b},{c}"),
            Family::SubdividedK4(ell) => write!(f, "subdivided_k4:{ell}"),
        }
    }
}

impl FromStr for Family {
    type Err = EmbeddingError;

    /// Parses `name` or `name:p1,p2,...`, e.g. `cycle:8` or `theta:2,3,4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EmbeddingError::BadParameters(format!("unrecognized family `{s}`"));
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        match (name, params.as_slice()) {
            ("cycle", [n]) => Ok(Family::Cycle(*n)),
            ("k4", []) => Ok(Family::K4),
            ("prism", [n]) => Ok(Family::Prism(*n)),
            ("theta", [a, b, c]) => Ok(Family::Theta(*a, *b, *c)),
            ("subdivided_k4", [ell]) => Ok(Family::SubdividedK4(*ell)),
            _ => Err(bad()),
        }
    }
}

/// Point `i` of `k` on a circle, clockwise from the top.
fn on_circle(radius: f64, i: usize, k: usize) -> (f64, f64) {
    let angle = PI / 2.0 - 2.0 * PI * i as f64 / k as f64;
    (radius * angle.cos(), radius * angle.sin())
}

/// Cycle with edge `i` joining vertices `i` and `i + 1`. `cycle(1)` is a
/// loop and `cycle(2)` a pair of parallel edges.
pub fn cycle(n: usize) -> Result<EmbeddedGraph, EmbeddingError> {
    match n {
        0 => Err(EmbeddingError::BadParameters("cycle needs n >= 1".into())),
        1 => EmbeddedGraph::new(1, vec![(0, 0)], vec![vec![Dart::from_index(0), Dart::from_index(1)]]),
        2 => EmbeddedGraph::new(
            2,
            vec![(0, 1), (1, 0)],
            vec![
                vec![Dart::from_index(0), Dart::from_index(3)],
                vec![Dart::from_index(1), Dart::from_index(2)],
            ],
        ),
        _ => {
            let points: Vec<_> = (0..n).map(|i| on_circle(1.0, i, n)).collect();
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            EmbeddedGraph::from_straight_line(&points, &edges)
        }
    }
}

/// The tetrahedron: vertex 0 in the middle of the triangle 1, 2, 3. Edges
/// 0..3 form the triangle and edge `3 + i` joins the center to vertex `i + 1`.
pub fn k4() -> EmbeddedGraph {
    subdivided_k4(1).expect("K4 drawing is plane")
}

/// Two concentric `n`-cycles joined by spokes; outer vertices `0..n`.
pub fn prism(n: usize) -> Result<EmbeddedGraph, EmbeddingError> {
    if n < 3 {
        return Err(EmbeddingError::BadParameters("prism needs n >= 3".into()));
    }
    let mut points: Vec<_> = (0..n).map(|i| on_circle(2.0, i, n)).collect();
    points.extend((0..n).map(|i| on_circle(1.0, i, n)));
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (n + i, n + (i + 1) % n)));
    edges.extend((0..n).map(|i| (i, n + i)));
    EmbeddedGraph::from_straight_line(&points, &edges)
}

/// Three internally disjoint paths with `a`, `b`, `c` edges between vertex 0
/// and vertex 1. Path edges are numbered consecutively from vertex 0.
pub fn theta(a: usize, b: usize, c: usize) -> Result<EmbeddedGraph, EmbeddingError> {
    if a == 0 || b == 0 || c == 0 {
        return Err(EmbeddingError::BadParameters("theta needs path lengths >= 1".into()));
    }
    let n = 2 + (a - 1) + (b - 1) + (c - 1);
    let mut endpoints = Vec::new();
    let mut rotation = vec![Vec::new(); n];
    let mut first = Vec::new();
    let mut last = Vec::new();
    let mut next_vertex = 2;
    for len in [a, b, c] {
        let mut path = vec![0];
        path.extend(next_vertex..next_vertex + len - 1);
        path.push(1);
        next_vertex += len - 1;
        for w in path.windows(2) {
            let e = endpoints.len();
            endpoints.push((w[0], w[1]));
            if w[0] != 0 {
                rotation[w[0]].push(Dart::new(e, 0));
            }
            if w[1] != 1 {
                rotation[w[1]].push(Dart::new(e, 1));
            }
        }
        first.push(Dart::new(endpoints.len() - len, 0));
        last.push(Dart::new(endpoints.len() - 1, 1));
    }
    rotation[0] = first;
    rotation[1] = vec![last[0], last[2], last[1]];
    EmbeddedGraph::new(n, endpoints, rotation)
}

/// K4 whose three edges at the central vertex are each subdivided
/// `ell - 1` times.
pub fn subdivided_k4(ell: usize) -> Result<EmbeddedGraph, EmbeddingError> {
    if ell == 0 {
        return Err(EmbeddingError::BadParameters("subdivided_k4 needs ell >= 1".into()));
    }
    let mut points = vec![(0.0, 0.0)];
    points.extend((0..3).map(|i| on_circle(1.0, i, 3)));
    let mut edges = vec![(1, 2), (2, 3), (3, 1)];
    for spoke in 0..3 {
        let tip = on_circle(1.0, spoke, 3);
        let mut prev = 0;
        for s in 1..ell {
            let t = s as f64 / ell as f64;
            points.push((tip.0 * t, tip.1 * t));
            let id = points.len() - 1;
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, spoke + 1));
    }
    EmbeddedGraph::from_straight_line(&points, &edges)
}

/// The fixed test catalog: cycles 3..=14, K4, prisms 3..=5, all thetas with
/// path lengths in 1..=4 and subdivided K4 for ell 1..=3.
pub fn catalog() -> Vec<(Family, EmbeddedGraph)> {
    let mut families: Vec<Family> = (3..=14).map(Family::Cycle).collect();
    families.push(Family::K4);
    families.extend((3..=5).map(Family::Prism));
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                families.push(Family::Theta(a, b, c));
            }
        }
    }
    families.extend((1..=3).map(Family::SubdividedK4));
    families
        .into_iter()
        .map(|f| (f, f.build().expect("catalog parameters are valid")))
        .collect()
}

/// A random 2-connected plane graph with every face of length at least 4.
///
/// Starts from a cycle and repeatedly draws a path of 1 to 3 edges across a
/// random face, choosing the corners so that both halves keep length >= 4.
pub fn random_plane(seed: u64, steps: usize) -> EmbeddedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = cycle(rng.gen_range(4..=9)).expect("cycle length >= 4");
    for _ in 0..steps {
        let face = rng.gen_range(0..g.faces().len());
        let k = g.face(face).len();
        let path = rng.gen_range(1..=3);
        let options: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| j - i + path >= 4 && k - (j - i) + path >= 4)
            .collect();
        if options.is_empty() {
            continue;
        }
        let (i, j) = options[rng.gen_range(0..options.len())];
        g = g.split_face(face, i, j, path).expect("split of a simple face");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let c8 = cycle(8).unwrap();
        assert_eq!((c8.face_count(), c8.faces()[0].len()), (2, 8));
        let k = k4();
        assert_eq!(k.face_count(), 4);
        assert!(k.faces().iter().all(|f| f.len() == 3));
        assert_eq!(subdivided_k4(1).unwrap(), k4());
        let s3 = subdivided_k4(3).unwrap();
        assert_eq!((s3.vertex_count(), s3.edge_count()), (10, 12));
        let p = prism(5).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count(), p.face_count()), (10, 15, 7));
        let t = theta(3, 3, 3).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count(), t.face_count()), (8, 9, 3));
        assert!(t.faces().iter().all(|f| f.len() == 6));
    }

    #[test]
    fn degenerate_cycles() {
        for n in 1..=2 {
            let g = cycle(n).unwrap();
            assert_eq!(g.face_count(), 2);
            assert!(g.faces().iter().all(|f| f.len() == n));
        }
        assert!(cycle(0).is_err());
    }

    #[test]
    fn single_edge_has_one_face_of_length_two() {
        let g = EmbeddedGraph::from_straight_line(&[(0.0, 0.0), (1.0, 0.0)], &[(0, 1)]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.faces()[0].edges(), &[0, 0]);
    }

    #[test]
    fn family_names_round_trip() {
        for (family, _) in catalog() {
            assert_eq!(family.to_string().parse::<Family>().unwrap(), family);
        }
        assert!("cube".parse::<Family>().is_err());
    }

    #[test]
    fn random_graphs_have_no_short_faces() {
        for seed in 0..50 {
            let g = random_plane(seed, 6);
            assert_eq!(g.euler_characteristic(), 2);
            assert!(g.faces().iter().all(|f| f.len() >= 4 && f.is_simple()));
        }
    }
}
