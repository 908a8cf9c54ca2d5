//! Individualization-refinement search for isomorphisms between two
//! tournaments of the same order.
//!
//! Both tournaments are coloured in lockstep: a refinement round gives each
//! vertex the key (own colour, sorted list of (neighbour colour, direction))
//! and renumbers the union of keys from both sides by rank, so equal colour
//! ids always mean "could correspond". Any mismatch in colour-class sizes
//! prunes the branch. Initial colours come from the per-arc triangle
//! profiles, since degrees are useless on regular tournaments.

use std::collections::BTreeMap;

use super::permutation::Permutation;
use crate::tournament::Tournament;
use crate::triangles::{profile_idx, TriangleProfile};

type Colouring = Vec<u32>;

/// Multiset over incident arcs of (arc leaves the vertex, arc profile).
fn vertex_invariant(t: &Tournament, v: usize) -> Vec<(bool, TriangleProfile)> {
    let mut key: Vec<(bool, TriangleProfile)> = (0..t.order())
        .filter(|&w| w != v)
        .map(|w| {
            if t.beats_idx(v, w) {
                (true, profile_idx(t, v, w))
            } else {
                (false, profile_idx(t, w, v))
            }
        })
        .collect();
    key.sort_unstable();
    key
}

/// Renumbers keys from both sides jointly by rank. Returns `None` when the
/// colour-class sizes disagree.
fn rank_jointly<K: Ord + Clone>(k1: &[K], k2: &[K]) -> Option<(Colouring, Colouring, usize)> {
    let mut counts: BTreeMap<&K, (usize, usize)> = BTreeMap::new();
    for k in k1 {
        counts.entry(k).or_default().0 += 1;
    }
    for k in k2 {
        counts.entry(k).or_default().1 += 1;
    }
    if counts.values().any(|(a, b)| a != b) {
        return None;
    }
    let ids: BTreeMap<&K, u32> = counts.keys().enumerate().map(|(i, k)| (*k, i as u32)).collect();
    let c1 = k1.iter().map(|k| ids[k]).collect();
    let c2 = k2.iter().map(|k| ids[k]).collect();
    Some((c1, c2, ids.len()))
}

fn refinement_keys(t: &Tournament, c: &[u32]) -> Vec<(u32, Vec<(u32, bool)>)> {
    (0..t.order())
        .map(|v| {
            let mut nbrs: Vec<(u32, bool)> = (0..t.order())
                .filter(|&w| w != v)
                .map(|w| (c[w], t.beats_idx(v, w)))
                .collect();
            nbrs.sort_unstable();
            (c[v], nbrs)
        })
        .collect()
}

fn distinct(c: &[u32]) -> usize {
    let mut seen: Vec<u32> = c.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Refines both colourings to a joint equitable partition.
fn refine(t1: &Tournament, t2: &Tournament, mut c1: Colouring, mut c2: Colouring) -> Option<(Colouring, Colouring)> {
    let mut classes = distinct(&c1);
    loop {
        let (n1, n2, next) = rank_jointly(&refinement_keys(t1, &c1), &refinement_keys(t2, &c2))?;
        c1 = n1;
        c2 = n2;
        if next == classes {
            return Some((c1, c2));
        }
        classes = next;
    }
}

pub(crate) fn is_isomorphism(t1: &Tournament, t2: &Tournament, p: &Permutation) -> bool {
    p.len() == t1.order()
        && t1.order() == t2.order()
        && (0..t1.order()).all(|x| {
            let mut image = 0u64;
            let mut row = t1.out_mask(x);
            while row != 0 {
                let y = row.trailing_zeros() as usize;
                image |= 1 << p.apply(y);
                row &= row - 1;
            }
            image == t2.out_mask(p.apply(x))
        })
}

struct Search<'a> {
    t1: &'a Tournament,
    t2: &'a Tournament,
    limit: usize,
    found: Vec<Permutation>,
    truncated: bool,
}

impl Search<'_> {
    /// Returns true once the search should stop.
    fn descend(&mut self, c1: Colouring, c2: Colouring) -> bool {
        let order = c1.len();
        let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &c1 {
            *sizes.entry(c).or_default() += 1;
        }
        // Rarest non-singleton cell first, ties by lowest vertex index.
        let target = (0..order)
            .filter(|&v| sizes[&c1[v]] > 1)
            .min_by_key(|&v| (sizes[&c1[v]], v));
        let Some(v) = target else {
            let mut images = vec![0; order];
            for x in 0..order {
                images[x] = (0..order).find(|&y| c2[y] == c1[x]).expect("matched cells");
            }
            let p = Permutation::new(images).expect("discrete cells give a bijection");
            if is_isomorphism(self.t1, self.t2, &p) {
                if self.found.len() == self.limit {
                    self.truncated = true;
                    return true;
                }
                self.found.push(p);
            }
            return false;
        };
        let fresh = sizes.len() as u32;
        let colour = c1[v];
        for w in (0..order).filter(|&w| c2[w] == colour) {
            let (mut d1, mut d2) = (c1.clone(), c2.clone());
            d1[v] = fresh;
            d2[w] = fresh;
            if let Some((r1, r2)) = refine(self.t1, self.t2, d1, d2) {
                if self.descend(r1, r2) {
                    return true;
                }
            }
        }
        false
    }
}

/// All isomorphisms `t1 → t2`, up to `limit`. The flag reports whether the
/// limit cut the enumeration short.
pub(crate) fn isomorphisms(t1: &Tournament, t2: &Tournament, limit: usize) -> (Vec<Permutation>, bool) {
    if t1.order() != t2.order() || limit == 0 {
        return (Vec::new(), false);
    }
    let k1: Vec<_> = (0..t1.order()).map(|v| vertex_invariant(t1, v)).collect();
    let k2: Vec<_> = (0..t2.order()).map(|v| vertex_invariant(t2, v)).collect();
    let mut search = Search {
        t1,
        t2,
        limit,
        found: Vec::new(),
        truncated: false,
    };
    if let Some((c1, c2, _)) = rank_jointly(&k1, &k2) {
        if let Some((c1, c2)) = refine(t1, t2, c1, c2) {
            search.descend(c1, c2);
        }
    }
    (search.found, search.truncated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::build_tournament;

    #[test]
    fn refinement_respects_isomorphism() {
        let u: crate::signature::Signature = "110100".parse().unwrap();
        let t1 = build_tournament(&u).unwrap();
        let t2 = build_tournament(&u.register_shift(1)).unwrap();
        let (found, truncated) = isomorphisms(&t1, &t2, 1);
        assert!(!truncated);
        assert_eq!(found.len(), 1);
        assert!(is_isomorphism(&t1, &t2, &found[0]));
    }

    #[test]
    fn limit_marks_truncation() {
        let t = build_tournament(&"101".parse().unwrap()).unwrap();
        let (found, truncated) = isomorphisms(&t, &t, 5);
        assert_eq!(found.len(), 5);
        assert!(truncated);
    }
}
