use std::collections::BTreeSet;

use serde::Serialize;

use super::EmbeddedGraph;

/// Counts of degree-2 vertices on one face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceProfile {
    pub face: usize,
    pub length: usize,
    /// Distinct 2-vertices on the face.
    pub n2: usize,
    /// Those 2-vertices that have a 2-neighbor, i.e. lie in a 2-thread.
    pub n2t: usize,
    /// Maximal runs of exactly one 2-vertex along the walk.
    pub s1: usize,
    /// Maximal runs of exactly two 2-vertices along the walk.
    pub s2: usize,
    /// Longest run of consecutive 2-vertices; equals the face length when
    /// the face has no vertex of other degree.
    pub longest_run: usize,
}

pub fn face_profiles(g: &EmbeddedGraph) -> Vec<FaceProfile> {
    let is_two = |v: usize| g.degree(v) == 2;
    let in_thread = |v: usize| is_two(v) && g.neighbors(v).any(|w| w != v && is_two(w));
    g.faces()
        .iter()
        .enumerate()
        .map(|(face, walk)| {
            let vs = walk.vertices();
            let twos: BTreeSet<usize> = vs.iter().copied().filter(|&v| is_two(v)).collect();
            let n2t = twos.iter().filter(|&&v| in_thread(v)).count();
            let (mut s1, mut s2, mut longest) = (0, 0, 0);
            match vs.iter().position(|&v| !is_two(v)) {
                None => longest = vs.len(),
                Some(anchor) => {
                    let mut run = 0;
                    // Walk once around starting just after a non-2-vertex so
                    // every run is closed by a non-2-vertex.
                    for step in 1..=vs.len() {
                        if is_two(vs[(anchor + step) % vs.len()]) {
                            run += 1;
                            continue;
                        }
                        match run {
                            1 => s1 += 1,
                            2 => s2 += 1,
                            _ => {}
                        }
                        longest = longest.max(run);
                        run = 0;
                    }
                }
            }
            FaceProfile {
                face,
                length: walk.len(),
                n2: twos.len(),
                n2t,
                s1,
                s2,
                longest_run: longest,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::generate::{cycle, prism, theta};

    #[test]
    fn cycle_faces_are_all_thread() {
        for p in face_profiles(&cycle(12).unwrap()) {
            assert_eq!((p.n2, p.n2t, p.s1, p.s2, p.longest_run), (12, 12, 0, 0, 12));
        }
    }

    #[test]
    fn cubic_graphs_have_no_two_vertices() {
        assert!(face_profiles(&prism(3).unwrap()).iter().all(|p| p.n2 == 0));
    }

    #[test]
    fn theta_faces_count_internal_path_vertices() {
        let profiles = face_profiles(&theta(2, 3, 4).unwrap());
        let mut by_len: Vec<(usize, usize, usize, usize)> =
            profiles.iter().map(|p| (p.length, p.n2, p.s1, p.s2)).collect();
        by_len.sort();
        // Faces are pairs of paths: 2+3, 2+4 and 3+4 edges.
        assert_eq!(by_len, vec![(5, 3, 1, 1), (6, 4, 1, 0), (7, 5, 0, 1)]);
        for p in &profiles {
            if p.longest_run <= 2 {
                assert_eq!(p.n2, p.s1 + 2 * p.s2);
            }
        }
    }
}
