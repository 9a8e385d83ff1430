//! Structural properties that a smallest graph needing more than `3ℓ + 1`
//! colors would have, evaluated literally on a concrete embedding.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::choosability::blocks;
use crate::embedding::{face_profiles, Dart, EmbeddedGraph, FaceProfile};
use crate::simple::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    TwoConnected,
    MinDegreeTwo,
    Loopless,
    /// A 4-vertex has at most three 2-neighbors.
    FourVertexTwoNeighbors,
    /// No separating cycle of length at most 7.
    NoShortSeparatingCycle,
    FacesAtLeastFive,
    NoEightFace,
    /// Every 2-vertex has a neighbor of degree at least 3.
    NoThreeThread,
    /// On an 8+-face, the three vertices beyond each end of a 2-thread have
    /// degree at least 3.
    ThreadClearance,
    /// Face sections of 8+-faces: `n2 <= k/2`, `5 s2 <= k - 2 s1`, and an
    /// 11-face with a 2-section has at most four 2-vertices.
    LongFaceSections,
    /// Every vertex of a 5-face has degree at least 4.
    FiveFaceHighDegree,
    /// Both neighbors of a 2-vertex on a 6-face have degree at least 4.
    SixFaceTwoVertexNeighbors,
    /// No 2-thread lies on a face of length at most 6.
    NoThreadOnShortFace,
    /// Every 2-vertex lies on a face of length at least 7.
    TwoVertexOnLongFace,
    /// A 2-thread on a 7-face has a neighbor of degree at least 4.
    SevenFaceThreadHighNeighbor,
    /// A 2-thread lies on at most one 7-face.
    ThreadOneSevenFace,
    /// On a 7-face with a 2-thread and another 2-vertex, each 2-vertex has
    /// neighbors of degrees {2, 4+} or {4+, 4+}.
    SevenFaceThreadTwoVertices,
    /// On a 7-face with two 2-vertices and no 2-thread, each 2-vertex has a
    /// neighbor of degree at least 4.
    SevenFaceNoThreadHighNeighbor,
    /// A 6-face and a 7-face sharing a 2-vertex `v`: every other vertex of
    /// the 7-face has degree at least 3.
    SixFaceSevenFace,
    /// Two 7-faces sharing a 2-vertex with a 3-neighbor and a 4+-neighbor:
    /// the designated edges of one are far from the other's edges.
    SevenFacesApart,
    /// Two 7-faces sharing a 2-vertex `v`, each with two 2-vertices: both
    /// neighbors of `v` have degree at least 4.
    SevenFacesTwoVertices,
    /// Two 7-faces sharing a 2-vertex `v`, one with three 2-vertices: `v` is
    /// the only 2-vertex of the other.
    SevenFaceThreeTwoVertices,
    NineFaceNoTwoVertex,
    /// A 10-face has at most two 2-vertices.
    TenFaceTwoVertices,
}

impl Predicate {
    pub const ALL: [Predicate; 24] = [
        Predicate::TwoConnected,
        Predicate::MinDegreeTwo,
        Predicate::Loopless,
        Predicate::FourVertexTwoNeighbors,
        Predicate::NoShortSeparatingCycle,
        Predicate::FacesAtLeastFive,
        Predicate::NoEightFace,
        Predicate::NoThreeThread,
        Predicate::ThreadClearance,
        Predicate::LongFaceSections,
        Predicate::FiveFaceHighDegree,
        Predicate::SixFaceTwoVertexNeighbors,
        Predicate::NoThreadOnShortFace,
        Predicate::TwoVertexOnLongFace,
        Predicate::SevenFaceThreadHighNeighbor,
        Predicate::ThreadOneSevenFace,
        Predicate::SevenFaceThreadTwoVertices,
        Predicate::SevenFaceNoThreadHighNeighbor,
        Predicate::SixFaceSevenFace,
        Predicate::SevenFacesApart,
        Predicate::SevenFacesTwoVertices,
        Predicate::SevenFaceThreeTwoVertices,
        Predicate::NineFaceNoTwoVertex,
        Predicate::TenFaceTwoVertices,
    ];

    pub fn name(self) -> String {
        serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub predicate: Predicate,
    pub holds: bool,
    /// The first offending element when the predicate fails.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub predicates: Vec<PredicateResult>,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.predicates.iter().all(|p| p.holds)
    }

    pub fn failed(&self) -> Vec<Predicate> {
        self.predicates.iter().filter(|p| !p.holds).map(|p| p.predicate).collect()
    }

    pub fn holds(&self, predicate: Predicate) -> bool {
        self.predicates.iter().any(|p| p.predicate == predicate && p.holds)
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.predicates {
            write!(f, "{:<34} {}", p.predicate.name(), if p.holds { "holds" } else { "fails" })?;
            if let Some(w) = &p.witness {
                write!(f, " ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Scan<'a> {
    g: &'a EmbeddedGraph,
    profiles: Vec<FaceProfile>,
}

impl<'a> Scan<'a> {
    fn deg(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    fn is_two(&self, v: usize) -> bool {
        self.deg(v) == 2
    }

    /// Far ends of the darts at `v`.
    fn ends(&self, v: usize) -> Vec<usize> {
        self.g.rotation(v).iter().map(|&d| self.g.target(d)).collect()
    }

    fn in_thread(&self, v: usize) -> bool {
        self.is_two(v) && self.ends(v).iter().any(|&w| w != v && self.is_two(w))
    }

    /// Distinct faces around `v`.
    fn faces_at(&self, v: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.g.rotation(v).iter().map(|&d| self.g.face_of(d).0).collect();
        set.into_iter().collect()
    }

    fn len(&self, face: usize) -> usize {
        self.g.face(face).len()
    }

    fn twos_on(&self, face: usize) -> BTreeSet<usize> {
        self.g.face(face).vertices().iter().copied().filter(|&v| self.is_two(v)).collect()
    }

    fn two_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.g.vertex_count()).filter(|&v| self.is_two(v))
    }

    /// 2-vertices `v` lying on two distinct faces of length 7.
    fn shared_seven(&self) -> Vec<(usize, usize, usize)> {
        self.two_vertices()
            .filter_map(|v| match self.faces_at(v)[..] {
                [a, b] if self.len(a) == 7 && self.len(b) == 7 => Some((v, a, b)),
                _ => None,
            })
            .collect()
    }
}

fn first<T>(mut items: impl Iterator<Item = T>, describe: impl Fn(T) -> String) -> Option<String> {
    items.next().map(describe)
}

fn two_connected(s: &Scan) -> Option<String> {
    let g = s.g;
    if !g.is_connected() {
        return Some(format!("{} components", g.component_count()));
    }
    let pairs: Vec<(usize, usize)> = g.all_endpoints().iter().copied().filter(|(u, v)| u != v).collect();
    let simple = SimpleGraph::from_edges(g.vertex_count(), &pairs).expect("endpoints are in range");
    blocks(&simple).cut_vertices.first().map(|v| format!("cut vertex {v}"))
}

/// Simple cycles of length at most `max_len` as dart sequences, each once.
fn short_cycles(g: &EmbeddedGraph, max_len: usize) -> Vec<Vec<Dart>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut path: Vec<Dart> = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];

    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &EmbeddedGraph,
        start: usize,
        at: usize,
        max_len: usize,
        path: &mut Vec<Dart>,
        on_path: &mut [bool],
        seen: &mut BTreeSet<Vec<usize>>,
        out: &mut Vec<Vec<Dart>>,
    ) {
        for &d in g.rotation(at) {
            if path.iter().any(|p| p.edge() == d.edge()) {
                continue;
            }
            let next = g.target(d);
            if next == start {
                path.push(d);
                let mut key: Vec<usize> = path.iter().map(|p| p.edge()).collect();
                key.sort_unstable();
                if seen.insert(key) {
                    out.push(path.clone());
                }
                path.pop();
            } else if next > start && !on_path[next] && path.len() + 1 < max_len {
                on_path[next] = true;
                path.push(d);
                extend(g, start, next, max_len, path, on_path, seen, out);
                path.pop();
                on_path[next] = false;
            }
        }
    }

    for start in 0..g.vertex_count() {
        on_path[start] = true;
        extend(g, start, start, max_len, &mut path, &mut on_path, &mut seen, &mut out);
        on_path[start] = false;
    }
    out
}

/// Whether both sides of the cycle contain a vertex. The darts leaving a
/// cycle vertex clockwise strictly between the outgoing cycle dart and the
/// incoming one point to one side, the rest to the other.
fn separates(g: &EmbeddedGraph, cycle: &[Dart]) -> bool {
    let k = cycle.len();
    let on_cycle: BTreeSet<usize> = cycle.iter().map(|&d| g.origin(d)).collect();
    let mut seeds = [Vec::new(), Vec::new()];
    for i in 0..k {
        let out_dart = cycle[i];
        let in_dart = cycle[(i + k - 1) % k].twin();
        let mut d = g.sigma(out_dart);
        let mut side = 0;
        while d != out_dart {
            if d == in_dart {
                side = 1;
            } else if !on_cycle.contains(&g.target(d)) {
                seeds[side].push(g.target(d));
            }
            d = g.sigma(d);
        }
    }
    !seeds[0].is_empty() && !seeds[1].is_empty()
}

fn ordered_neighbors(s: &Scan, v: usize) -> (usize, usize) {
    let ends = s.ends(v);
    (ends[0], ends[1])
}

fn evaluate(s: &Scan, p: Predicate) -> Option<String> {
    let g = s.g;
    let n = g.vertex_count();
    let faces = 0..g.faces().len();
    match p {
        Predicate::TwoConnected => two_connected(s),
        Predicate::MinDegreeTwo => first((0..n).filter(|&v| s.deg(v) < 2), |v| format!("vertex {v} has degree {}", s.deg(v))),
        Predicate::Loopless => first((0..g.edge_count()).filter(|&e| g.is_loop(e)), |e| format!("edge {e} is a loop")),
        Predicate::FourVertexTwoNeighbors => first(
            (0..n).filter(|&v| {
                s.deg(v) == 4 && s.ends(v).into_iter().filter(|&w| w != v && s.is_two(w)).collect::<BTreeSet<_>>().len() == 4
            }),
            |v| format!("vertex {v}"),
        ),
        Predicate::NoShortSeparatingCycle => first(
            short_cycles(g, 7).into_iter().filter(|c| separates(g, c)),
            |c| format!("cycle through vertices {:?}", c.iter().map(|&d| g.origin(d)).collect::<Vec<_>>()),
        ),
        Predicate::FacesAtLeastFive => first(faces.filter(|&f| s.len(f) < 5), |f| format!("face {f} has length {}", s.len(f))),
        Predicate::NoEightFace => first(faces.filter(|&f| s.len(f) == 8), |f| format!("face {f}")),
        Predicate::NoThreeThread => first(
            s.two_vertices().filter(|&v| s.ends(v).iter().all(|&w| s.deg(w) < 3)),
            |v| format!("vertex {v}"),
        ),
        Predicate::ThreadClearance => first(
            faces.filter(|&f| s.len(f) >= 8).filter_map(|f| {
                let vs = g.face(f).vertices();
                let k = vs.len();
                (0..k).find_map(|i| {
                    let (u, v) = (vs[i], vs[(i + 1) % k]);
                    if u == v || !s.is_two(u) || !s.is_two(v) {
                        return None;
                    }
                    let near = [k - 3, k - 2, k - 1, 2, 3, 4].map(|off| vs[(i + off) % k]);
                    near.iter().find(|&&w| s.deg(w) < 3).map(|&w| (f, u, v, w))
                })
            }),
            |(f, u, v, w)| format!("face {f}: thread {u}-{v} is near vertex {w}"),
        ),
        Predicate::LongFaceSections => first(
            s.profiles.iter().filter(|pr| pr.length >= 8 && pr.n2 > 0).filter(|pr| {
                let k = pr.length as i64;
                2 * pr.n2 > pr.length
                    || 5 * pr.s2 as i64 > k - 2 * pr.s1 as i64
                    || (pr.length == 11 && pr.s2 > 0 && pr.n2 > 4)
            }),
            |pr| format!("face {} (length {}, n2 {}, s1 {}, s2 {})", pr.face, pr.length, pr.n2, pr.s1, pr.s2),
        ),
        Predicate::FiveFaceHighDegree => first(
            faces.filter(|&f| s.len(f) == 5).filter_map(|f| g.face(f).vertices().iter().find(|&&v| s.deg(v) < 4).map(|&v| (f, v))),
            |(f, v)| format!("face {f} has vertex {v} of degree {}", s.deg(v)),
        ),
        Predicate::SixFaceTwoVertexNeighbors => first(
            faces.filter(|&f| s.len(f) == 6).flat_map(|f| s.twos_on(f).into_iter().map(move |v| (f, v))).filter(|&(_, v)| {
                s.ends(v).iter().any(|&w| s.deg(w) < 4)
            }),
            |(f, v)| format!("2-vertex {v} on face {f}"),
        ),
        Predicate::NoThreadOnShortFace => first(
            (0..n).filter(|&v| s.in_thread(v)).flat_map(|v| s.faces_at(v).into_iter().map(move |f| (v, f))).filter(|&(_, f)| s.len(f) <= 6),
            |(v, f)| format!("thread vertex {v} on face {f}"),
        ),
        Predicate::TwoVertexOnLongFace => first(
            s.two_vertices().filter(|&v| s.faces_at(v).iter().all(|&f| s.len(f) < 7)),
            |v| format!("vertex {v}"),
        ),
        Predicate::SevenFaceThreadHighNeighbor => first(
            threads(s).into_iter().filter(|&(u, v)| {
                s.faces_at(u).iter().any(|&f| s.len(f) == 7) && thread_outer(s, u, v).iter().all(|&w| s.deg(w) < 4)
            }),
            |(u, v)| format!("thread {u}-{v}"),
        ),
        Predicate::ThreadOneSevenFace => first(
            threads(s).into_iter().filter(|&(u, _)| s.faces_at(u).iter().filter(|&&f| s.len(f) == 7).count() > 1),
            |(u, v)| format!("thread {u}-{v}"),
        ),
        Predicate::SevenFaceThreadTwoVertices => first(
            faces.filter(|&f| s.len(f) == 7).filter_map(|f| {
                let twos = s.twos_on(f);
                let has_thread = twos.iter().any(|&v| s.in_thread(v));
                let threaded: BTreeSet<usize> = twos.iter().copied().filter(|&v| s.in_thread(v)).collect();
                let other = twos.len() > 2 || (twos.len() == 2 && threaded.len() < 2);
                if !(has_thread && other) {
                    return None;
                }
                twos.iter()
                    .find(|&&v| {
                        let (a, b) = ordered_neighbors(s, v);
                        let (da, db) = (s.deg(a), s.deg(b));
                        let ok = (da == 2 && db >= 4) || (db == 2 && da >= 4) || (da >= 4 && db >= 4);
                        !ok
                    })
                    .map(|&v| (f, v))
            }),
            |(f, v)| format!("2-vertex {v} on face {f}"),
        ),
        Predicate::SevenFaceNoThreadHighNeighbor => first(
            faces.filter(|&f| s.len(f) == 7).filter_map(|f| {
                let twos = s.twos_on(f);
                if twos.len() < 2 || twos.iter().any(|&v| s.in_thread(v)) {
                    return None;
                }
                twos.iter().find(|&&v| s.ends(v).iter().all(|&w| s.deg(w) < 4)).map(|&v| (f, v))
            }),
            |(f, v)| format!("2-vertex {v} on face {f}"),
        ),
        Predicate::SixFaceSevenFace => first(
            s.two_vertices().filter_map(|v| {
                let at = s.faces_at(v);
                let six = at.iter().any(|&f| s.len(f) == 6);
                let seven = at.iter().copied().find(|&f| s.len(f) == 7)?;
                if !six {
                    return None;
                }
                g.face(seven).vertices().iter().find(|&&u| u != v && s.deg(u) < 3).map(|&u| (v, seven, u))
            }),
            |(v, f, u)| format!("2-vertex {v}: vertex {u} of face {f}"),
        ),
        Predicate::SevenFacesApart => first(seven_faces_apart(s).into_iter(), |(v, e1, e2)| {
            format!("2-vertex {v}: edges {e1} and {e2} are 3-facially adjacent")
        }),
        Predicate::SevenFacesTwoVertices => first(
            s.shared_seven().into_iter().filter(|&(v, a, b)| {
                s.twos_on(a).len() >= 2 && s.twos_on(b).len() >= 2 && s.ends(v).iter().any(|&w| s.deg(w) < 4)
            }),
            |(v, a, b)| format!("2-vertex {v} on faces {a} and {b}"),
        ),
        Predicate::SevenFaceThreeTwoVertices => first(
            s.shared_seven().into_iter().filter(|&(_, a, b)| {
                let (na, nb) = (s.twos_on(a).len(), s.twos_on(b).len());
                (na >= 3 && nb > 1) || (nb >= 3 && na > 1)
            }),
            |(v, a, b)| format!("2-vertex {v} on faces {a} and {b}"),
        ),
        Predicate::NineFaceNoTwoVertex => first(
            faces.filter(|&f| s.len(f) == 9 && !s.twos_on(f).is_empty()),
            |f| format!("face {f}"),
        ),
        Predicate::TenFaceTwoVertices => first(
            faces.filter(|&f| s.len(f) == 10 && s.twos_on(f).len() > 2),
            |f| format!("face {f} has {} 2-vertices", s.twos_on(f).len()),
        ),
    }
}

/// Adjacent pairs of 2-vertices, smaller id first.
fn threads(s: &Scan) -> Vec<(usize, usize)> {
    let mut out = BTreeSet::new();
    for u in s.two_vertices() {
        for w in s.ends(u) {
            if w != u && s.is_two(w) {
                out.insert((u.min(w), u.max(w)));
            }
        }
    }
    out.into_iter().collect()
}

/// Neighbors of a 2-thread outside it.
fn thread_outer(s: &Scan, u: usize, v: usize) -> Vec<usize> {
    s.ends(u).into_iter().chain(s.ends(v)).filter(|&w| w != u && w != v).collect()
}

fn seven_faces_apart(s: &Scan) -> Vec<(usize, usize, usize)> {
    let g = s.g;
    let mut out = Vec::new();
    for (v, a, b) in s.shared_seven() {
        let (x, y) = ordered_neighbors(s, v);
        let (u, w) = match (s.deg(x), s.deg(y)) {
            (3, dy) if dy >= 4 => (x, y),
            (dx, 3) if dx >= 4 => (y, x),
            _ => continue,
        };
        for (alpha1, alpha2) in [(a, b), (b, a)] {
            let walk = g.face(alpha1);
            let (vs, es) = (walk.vertices(), walk.edges());
            let k = vs.len();
            if !walk.is_simple() {
                continue;
            }
            let pos = |x: usize| vs.iter().position(|&y| y == x).expect("on face");
            let (pu, pv, pw) = (pos(u), pos(v), pos(w));
            let beyond = |p: usize| if (p + 1) % k == pv { (p + k - 1) % k } else { (p + 1) % k };
            let (pu1, pw1) = (beyond(pu), beyond(pw));
            let edge = |i, j| walk_edge(es, i, j).expect("adjacent positions");
            let (uv, vw, uu1, ww1) = (edge(pu, pv), edge(pv, pw), edge(pu, pu1), edge(pw, pw1));
            let firsts: Vec<usize> = if s.deg(vs[pu1]) >= 3 {
                es.iter().copied().filter(|&e| e != uu1 && e != uv && e != vw).collect()
            } else {
                vec![ww1]
            };
            let seconds: Vec<usize> = g.face(alpha2).edges().iter().copied().filter(|&e| e != uv && e != vw).collect();
            for &e1 in &firsts {
                for &e2 in &seconds {
                    if g.facial_distance(e1, e2).expect("valid edges").is_some_and(|d| d <= 3) {
                        out.push((v, e1, e2));
                    }
                }
            }
        }
    }
    out
}

/// The walk edge joining cyclically adjacent positions `i` and `j`.
fn walk_edge(es: &[usize], i: usize, j: usize) -> Option<usize> {
    let k = es.len();
    if (i + 1) % k == j {
        Some(es[i])
    } else if (j + 1) % k == i {
        Some(es[j])
    } else {
        None
    }
}

pub fn structure_report(g: &EmbeddedGraph) -> StructureReport {
    let scan = Scan { g, profiles: face_profiles(g) };
    StructureReport {
        predicates: Predicate::ALL
            .into_iter()
            .map(|predicate| {
                let witness = evaluate(&scan, predicate);
                PredicateResult { predicate, holds: witness.is_none(), witness }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::generate::{cycle, k4, prism, theta};

    #[test]
    fn cycle_predicates() {
        let r = structure_report(&cycle(7).unwrap());
        assert!(r.holds(Predicate::TwoConnected));
        assert!(r.holds(Predicate::FacesAtLeastFive));
        assert!(!r.holds(Predicate::NoThreeThread));
    }

    #[test]
    fn k4_has_no_separating_triangle() {
        let r = structure_report(&k4());
        assert!(r.holds(Predicate::NoShortSeparatingCycle));
        assert!(!r.holds(Predicate::FacesAtLeastFive));
    }

    #[test]
    fn theta_with_threads_on_six_faces() {
        let r = structure_report(&theta(3, 3, 3).unwrap());
        assert!(!r.holds(Predicate::NoThreadOnShortFace));
        assert!(!r.holds(Predicate::SixFaceTwoVertexNeighbors));
    }

    #[test]
    fn separating_cycles_are_found() {
        // The cube has hexagons splitting two antipodal vertices apart.
        let cube = prism(4).unwrap();
        assert!(short_cycles(&cube, 7).iter().any(|c| c.len() == 6 && separates(&cube, c)));
        assert!(short_cycles(&cube, 5).iter().all(|c| !separates(&cube, c)));
        assert!(!structure_report(&cube).holds(Predicate::NoShortSeparatingCycle));
    }
}
