use serde::Serialize;

use crate::facial_coloring::ColorSet;

/// Result of a distinct-representatives query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Sdr {
    /// One color per set, pairwise distinct.
    Representatives(Vec<u32>),
    /// Sets whose union is smaller than their number.
    HallViolator { nodes: Vec<usize>, neighborhood: ColorSet },
}

/// Picks pairwise distinct colors, one from each set, by augmenting paths.
/// When impossible, the sets reachable from an unmatched one along
/// alternating paths form a Hall violator.
pub fn sdr(sets: &[ColorSet]) -> Sdr {
    let mut owner: [Option<usize>; 128] = [None; 128];
    let mut chosen: Vec<Option<u32>> = vec![None; sets.len()];

    fn augment(
        v: usize,
        sets: &[ColorSet],
        owner: &mut [Option<usize>; 128],
        chosen: &mut [Option<u32>],
        seen: &mut ColorSet,
    ) -> bool {
        for c in sets[v].iter() {
            if seen.contains(c) {
                continue;
            }
            seen.insert(c);
            let free = match owner[c as usize] {
                None => true,
                Some(w) => augment(w, sets, owner, chosen, seen),
            };
            if free {
                owner[c as usize] = Some(v);
                chosen[v] = Some(c);
                return true;
            }
        }
        false
    }

    for v in 0..sets.len() {
        let mut seen = ColorSet::empty();
        if !augment(v, sets, &mut owner, &mut chosen, &mut seen) {
            // Alternating reachability from v: every color seen is owned, and
            // the owners together with v exceed the colors by one.
            let mut nodes = vec![v];
            let mut stack = vec![v];
            let mut colors = ColorSet::empty();
            while let Some(u) = stack.pop() {
                for c in sets[u].iter() {
                    if colors.contains(c) {
                        continue;
                    }
                    colors.insert(c);
                    let w = owner[c as usize].expect("v could not be augmented, so every reachable color is owned");
                    nodes.push(w);
                    stack.push(w);
                }
            }
            nodes.sort_unstable();
            nodes.dedup();
            return Sdr::HallViolator { nodes, neighborhood: colors };
        }
    }
    Sdr::Representatives(chosen.into_iter().map(|c| c.expect("all matched")).collect())
}

/// Hall's condition when only sizes are known.
///
/// `bounds[i]` is a lower bound on the size of set `i`; each entry of
/// `union_bounds` is a subset with a lower bound on the size of its union.
/// The union over a family is at least every bound attached to it or to a
/// subfamily. Returns the first family (by size, then lexicographic bitmask)
/// for which these guarantees fall below its size, or `None` when Hall's
/// condition is guaranteed.
pub fn hall_by_bounds(bounds: &[usize], union_bounds: &[(Vec<usize>, usize)]) -> Option<Vec<usize>> {
    let n = bounds.len();
    assert!(n < 24, "subset enumeration is limited to 23 sets");
    let masks: Vec<(u32, usize)> = union_bounds
        .iter()
        .map(|(family, b)| (family.iter().fold(0u32, |m, &i| m | 1 << i), *b))
        .collect();
    let mut subsets: Vec<u32> = (1..1u32 << n).collect();
    subsets.sort_by_key(|&s| (s.count_ones(), s));
    subsets.into_iter().find_map(|s| {
        let single = (0..n).filter(|&i| s >> i & 1 == 1).map(|i| bounds[i]).max().unwrap_or(0);
        let joint = masks.iter().filter(|&&(m, _)| m & s == m).map(|&(_, b)| b).max().unwrap_or(0);
        (single.max(joint) < s.count_ones() as usize).then(|| (0..n).filter(|&i| s >> i & 1 == 1).collect())
    })
}
