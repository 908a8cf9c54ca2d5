//! Per-arc triangle census.
//!
//! For an arc `a = (x, y)` every third vertex `l` closes either a directed
//! triangle or a transitive one, and in the transitive case `a` plays the
//! role of an in, out or bypass arc. In a regular tournament on `2m + 1`
//! vertices the four counts are tied together by `o = i`, `b = m - 1 - i`
//! and `d = m - i`.

use crate::error::{Error, Result};
use crate::signature::Signature;
use crate::tournament::{Arc, Tournament, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleType {
    /// Both other arcs point from the third vertex toward `a`.
    In,
    /// Both other arcs point away from `a` to the third vertex.
    Out,
    /// The other arcs form a path from the tail of `a` to its head.
    Bypass,
    /// The other arcs form a path from the head of `a` back to its tail.
    Directed,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleProfile {
    pub in_count: u32,
    pub out_count: u32,
    pub bypass_count: u32,
    pub directed_count: u32,
}

impl TriangleProfile {
    pub fn total(&self) -> u32 {
        self.in_count + self.out_count + self.bypass_count + self.directed_count
    }

    /// The regular-tournament identities for a tournament with out-degree `m`.
    pub fn satisfies_regular_identities(&self, m: u32) -> bool {
        self.in_count < m
            && self.out_count == self.in_count
            && self.bypass_count == m - 1 - self.in_count
            && self.directed_count == m - self.in_count
    }
}

fn arc_indices(t: &Tournament, a: Arc) -> Result<(usize, usize)> {
    let (x, y) = (t.index_of(a.tail)?, t.index_of(a.head)?);
    if x == y {
        return Err(Error::SameVertex(a.tail.to_string()));
    }
    if !t.beats_idx(x, y) {
        return Err(Error::NotAnArc {
            tail: a.tail.to_string(),
            head: a.head.to_string(),
        });
    }
    Ok((x, y))
}

pub fn triangle_type(t: &Tournament, a: Arc, ell: Vertex) -> Result<TriangleType> {
    let (x, y) = arc_indices(t, a)?;
    let l = t.index_of(ell)?;
    if l == x || l == y {
        return Err(Error::ThirdVertexOnArc(ell.to_string()));
    }
    Ok(match (t.beats_idx(x, l), t.beats_idx(y, l)) {
        (true, true) => TriangleType::Out,
        (false, false) => TriangleType::In,
        (true, false) => TriangleType::Bypass,
        (false, true) => TriangleType::Directed,
    })
}

/// Profile of the arc from index `x` to index `y`; the caller guarantees
/// `beats(x, y)`.
#[inline]
pub(crate) fn profile_idx(t: &Tournament, x: usize, y: usize) -> TriangleProfile {
    let others = t.all_mask() & !(1u64 << x) & !(1u64 << y);
    let (out_x, in_x) = (t.out_mask(x) & others, t.in_mask(x) & others);
    let (out_y, in_y) = (t.out_mask(y) & others, t.in_mask(y) & others);
    TriangleProfile {
        in_count: (in_x & in_y).count_ones(),
        out_count: (out_x & out_y).count_ones(),
        bypass_count: (out_x & in_y).count_ones(),
        directed_count: (in_x & out_y).count_ones(),
    }
}

pub fn arc_profile(t: &Tournament, a: Arc) -> Result<TriangleProfile> {
    let (x, y) = arc_indices(t, a)?;
    Ok(profile_idx(t, x, y))
}

/// Every arc with profile, sorted by `(tail, head)` with `*` last.
pub fn all_profiles(t: &Tournament) -> Vec<((usize, usize), TriangleProfile)> {
    t.arc_indices()
        .into_iter()
        .map(|(x, y)| ((x, y), profile_idx(t, x, y)))
        .collect()
}

/// Arcs in exactly one directed triangle, as `(tail, head, third)` indices.
pub(crate) fn unique_triangle_indices(t: &Tournament) -> Vec<(usize, usize, usize)> {
    t.arc_indices()
        .into_iter()
        .filter_map(|(x, y)| {
            let directed = t.in_mask(x) & t.out_mask(y);
            (directed.count_ones() == 1).then(|| (x, y, directed.trailing_zeros() as usize))
        })
        .collect()
}

/// Arcs lying in exactly one directed triangle, each with that triangle's
/// third vertex.
pub fn unique_triangle_arcs(t: &Tournament) -> Vec<(Arc, Vertex)> {
    unique_triangle_indices(t)
        .into_iter()
        .map(|(x, y, w)| (Arc::new(t.vertex(x), t.vertex(y)), t.vertex(w)))
        .collect()
}

fn require_seven(t: &Tournament) -> Result<()> {
    if t.order() < 7 {
        return Err(Error::TooFewVertices {
            order: t.order(),
            min: 7,
        });
    }
    Ok(())
}

/// Whether every arc in a unique directed triangle has `*` as that
/// triangle's third vertex. Tournaments on fewer than 7 vertices are
/// rejected: the 5-vertex case is a genuine exception.
pub fn check_unique_star(t: &Tournament) -> Result<bool> {
    require_seven(t)?;
    Ok(unique_triangle_indices(t)
        .into_iter()
        .all(|(_, _, w)| w == t.star()))
}

/// Whether the arc between `x` and `y` joins two ring vertices of equal
/// parity, or joins `i` and `i + m` where `m` is odd and the signature is
/// `1_m R_i`.
pub fn parity_condition_holds(t: &Tournament, a: Arc) -> Result<bool> {
    let (x, y) = (t.index_of(a.tail)?, t.index_of(a.head)?);
    let (m, n) = (t.m(), t.n());
    if x == n || y == n {
        return Ok(false);
    }
    if (x + y) % 2 == 0 {
        return Ok(true);
    }
    if m % 2 == 0 {
        return Ok(false);
    }
    let ones = Signature::ones(m)?;
    Ok([x, y]
        .into_iter()
        .any(|i| (i + m) % n == x + y - i && t.signature() == &ones.register_shift(i as i64)))
}

/// Whether every arc in a unique directed triangle satisfies
/// [`parity_condition_holds`].
pub fn check_parity_condition(t: &Tournament) -> Result<bool> {
    require_seven(t)?;
    for (a, _) in unique_triangle_arcs(t) {
        if !parity_condition_holds(t, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// CSV with one row per arc:
/// `tail,head,in,out,bypass,directed,unique_third_vertex`.
pub fn arc_report_csv(t: &Tournament) -> String {
    let mut out = String::from("tail,head,in,out,bypass,directed,unique_third_vertex\n");
    for ((x, y), p) in all_profiles(t) {
        let third = if p.directed_count == 1 {
            let w = (t.in_mask(x) & t.out_mask(y)).trailing_zeros() as usize;
            t.vertex(w).to_string()
        } else {
            String::new()
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            t.vertex(x),
            t.vertex(y),
            p.in_count,
            p.out_count,
            p.bypass_count,
            p.directed_count,
            third
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::enumerate_family_s;
    use crate::tournament::build_tournament;

    fn w(s: &str) -> Tournament {
        build_tournament(&s.parse().unwrap()).unwrap()
    }

    fn r(i: usize) -> Vertex {
        Vertex::Ring(i)
    }

    /// Counts from an explicit walk over third vertices using only `beats`.
    fn brute_profile(t: &Tournament, a: Arc) -> TriangleProfile {
        let mut p = TriangleProfile::default();
        for l in t.vertices().filter(|&l| l != a.tail && l != a.head) {
            let xl = t.beats(a.tail, l).unwrap();
            let yl = t.beats(a.head, l).unwrap();
            match (xl, yl) {
                (true, true) => p.out_count += 1,
                (false, false) => p.in_count += 1,
                (true, false) => p.bypass_count += 1,
                (false, true) => p.directed_count += 1,
            }
        }
        p
    }

    #[test]
    fn w1_single_directed_triangle() {
        let t = w("1");
        let a = Arc::new(Vertex::Star, r(0));
        assert_eq!(triangle_type(&t, a, r(1)).unwrap(), TriangleType::Directed);
        assert_eq!(
            arc_profile(&t, a).unwrap(),
            TriangleProfile {
                directed_count: 1,
                ..Default::default()
            }
        );
    }

    #[test]
    fn triangle_type_errors() {
        let t = w("11");
        let a = t.arc_between(r(0), r(1)).unwrap();
        assert_eq!(
            triangle_type(&t, a, a.head),
            Err(Error::ThirdVertexOnArc(a.head.to_string()))
        );
        assert!(matches!(
            triangle_type(&t, a.reversed(), r(2)),
            Err(Error::NotAnArc { .. })
        ));
        assert!(matches!(arc_profile(&t, a.reversed()), Err(Error::NotAnArc { .. })));
    }

    #[test]
    fn w11_types_match_arc_listing() {
        let t = w("11");
        let arcs = t.arcs();
        let has = |x: Vertex, y: Vertex| arcs.contains(&Arc::new(x, y));
        let a = t.arc_between(r(0), r(1)).unwrap();
        for ell in [r(2), r(3), Vertex::Star] {
            let expected = match (has(a.tail, ell), has(a.head, ell)) {
                (true, true) => TriangleType::Out,
                (false, false) => TriangleType::In,
                (true, false) => TriangleType::Bypass,
                (false, true) => TriangleType::Directed,
            };
            assert_eq!(triangle_type(&t, a, ell).unwrap(), expected);
        }
        assert_eq!(arcs.len(), 10);
        for a in arcs {
            let p = arc_profile(&t, a).unwrap();
            assert_eq!(p, brute_profile(&t, a));
            assert!(p.satisfies_regular_identities(2));
        }
    }

    #[test]
    fn out_type_by_definition() {
        let t = w("1011");
        for a in t.arcs() {
            for l in t.vertices().filter(|&l| l != a.tail && l != a.head) {
                if t.beats(a.tail, l).unwrap() && t.beats(a.head, l).unwrap() {
                    assert_eq!(triangle_type(&t, a, l).unwrap(), TriangleType::Out);
                }
            }
        }
    }

    #[test]
    fn profiles_exhaustive() {
        for m in 1..=8usize {
            for u in Signature::all(m).unwrap() {
                let t = build_tournament(&u).unwrap();
                let mut directed_sum = 0;
                for ((x, y), p) in all_profiles(&t) {
                    assert_eq!(p.total() as usize, t.order() - 2);
                    assert!(p.satisfies_regular_identities(m as u32), "u={u} arc=({x},{y}) {p:?}");
                    assert!(p.directed_count >= 1);
                    if p.bypass_count >= 1 {
                        assert!(p.directed_count >= 2);
                    }
                    directed_sum += p.directed_count;
                }
                // Count directed triangles directly.
                let order = t.order();
                let mut cyclic = 0;
                for a in 0..order {
                    for b in a + 1..order {
                        for c in b + 1..order {
                            let ab = t.beats_idx(a, b);
                            let bc = t.beats_idx(b, c);
                            let ca = t.beats_idx(c, a);
                            if ab == bc && bc == ca {
                                cyclic += 1;
                            }
                        }
                    }
                }
                assert_eq!(directed_sum, 3 * cyclic);
            }
        }
    }

    #[test]
    fn profile_matches_brute_force_walk() {
        for u in ["101", "1011", "10001", "110011"] {
            let t = w(u);
            for a in t.arcs() {
                assert_eq!(arc_profile(&t, a).unwrap(), brute_profile(&t, a));
            }
        }
    }

    #[test]
    fn star_arcs_have_many_directed_triangles() {
        // Holds for every m >= 3 except the R_1-orbit of 00100 at m = 5.
        for m in 3..=8 {
            let mut failing = std::collections::BTreeSet::new();
            for u in Signature::all(m).unwrap() {
                let t = build_tournament(&u).unwrap();
                let any_single = (0..t.n()).any(|v| {
                    let a = t.arc_between(Vertex::Star, r(v)).unwrap();
                    arc_profile(&t, a).unwrap().directed_count == 1
                });
                if any_single {
                    failing.insert(u);
                }
            }
            let expected = if m == 5 { "00100".parse::<Signature>().unwrap().r1_orbit() } else { Default::default() };
            assert_eq!(failing, expected, "m={m}");
        }
    }

    #[test]
    fn star_arc_in_single_directed_triangle_at_m5() {
        let t = w("00100");
        let a = Arc::new(r(0), Vertex::Star);
        let p = arc_profile(&t, a).unwrap();
        assert_eq!(p.directed_count, 1);
        assert_eq!(triangle_type(&t, a, r(9)).unwrap(), TriangleType::Directed);
    }

    #[test]
    fn consecutive_arcs_have_many_directed_triangles() {
        for m in 3..=8 {
            let n = 2 * m;
            for u in Signature::all(m).unwrap() {
                let t = build_tournament(&u).unwrap();
                for i in 0..n {
                    let a = t.arc_between(r(i), r((i + 1) % n)).unwrap();
                    assert!(arc_profile(&t, a).unwrap().directed_count > 1);
                }
            }
        }
    }

    #[test]
    fn family_arc_between_zero_and_m() {
        for k in 3..=5 {
            let m = 2 * k;
            for u in enumerate_family_s(k).unwrap() {
                let t = build_tournament(&u).unwrap();
                let a = t.arc_between(r(0), r(m)).unwrap();
                let p = arc_profile(&t, a).unwrap();
                let expected = m as u32 - 1;
                assert_eq!(
                    p,
                    TriangleProfile {
                        in_count: expected,
                        out_count: expected,
                        bypass_count: 0,
                        directed_count: 1
                    }
                );
                assert!(unique_triangle_arcs(&t).contains(&(a, Vertex::Star)));
            }
        }
    }

    #[test]
    fn negative_examples_have_no_unique_arcs() {
        assert!(unique_triangle_arcs(&w("10001")).is_empty());
        assert!(unique_triangle_arcs(&w("110011")).is_empty());
    }

    #[test]
    fn unique_arcs_sorted_with_star_last() {
        let t = w("111111");
        let idx = unique_triangle_indices(&t);
        let mut sorted = idx.clone();
        sorted.sort();
        assert_eq!(idx, sorted);
        assert!(!idx.is_empty());
    }

    #[test]
    fn unique_star_examples() {
        assert_eq!(check_unique_star(&w("1011")), Ok(true));
        let t = w("1111111");
        assert_eq!(check_unique_star(&t), Ok(true));
        let a = t.arc_between(r(0), r(7)).unwrap();
        assert!(unique_triangle_arcs(&t).contains(&(a, Vertex::Star)));
        assert_eq!(
            check_unique_star(&w("11")),
            Err(Error::TooFewVertices { order: 5, min: 7 })
        );
        assert!(check_parity_condition(&w("1")).is_err());
    }

    #[test]
    fn five_vertex_exception_exists() {
        // Some arc of W_11 has a unique directed triangle avoiding *.
        let t = w("11");
        assert!(unique_triangle_indices(&t)
            .into_iter()
            .any(|(_, _, third)| third != t.star()));
    }

    #[test]
    fn parity_condition_examples() {
        let t = w("11111");
        assert_eq!(check_parity_condition(&t), Ok(true));
        let opposite: Vec<_> = unique_triangle_indices(&t)
            .into_iter()
            .filter(|&(x, y, _)| (x + y) % 2 == 1)
            .map(|(x, y, _)| (x.min(y), x.max(y)))
            .collect();
        assert_eq!(opposite, vec![(0, 5)]);

        let t = w("1001");
        assert_eq!(check_parity_condition(&t), Ok(true));
        let witnesses = unique_triangle_indices(&t);
        assert!(!witnesses.is_empty());
        assert!(witnesses.iter().all(|&(x, y, _)| (x + y) % 2 == 0));

        let t = w("10001");
        assert_eq!(check_parity_condition(&t), Ok(true));
    }

    /// Signatures of length `m` whose tournament has an arc in a unique
    /// directed triangle avoiding `*`.
    fn non_star_witnesses(m: usize) -> std::collections::BTreeSet<Signature> {
        Signature::all(m)
            .unwrap()
            .into_iter()
            .filter(|u| !check_unique_star(&build_tournament(u).unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn unique_star_sweep_exceptions() {
        // The third vertex is * everywhere except on the R_1-orbit of 1_m for
        // even m and the R_1-orbit of 00100 for m = 5.
        for m in 3..=8 {
            let expected = match m {
                5 => "00100".parse::<Signature>().unwrap().r1_orbit(),
                m if m % 2 == 0 => Signature::ones(m).unwrap().r1_orbit(),
                _ => Default::default(),
            };
            assert_eq!(non_star_witnesses(m), expected, "m={m}");
            for u in Signature::all(m).unwrap() {
                let t = build_tournament(&u).unwrap();
                assert_eq!(check_parity_condition(&t).unwrap(), !expected.contains(&u), "u={u}");
            }
        }
    }

    #[test]
    fn all_ones_of_even_length_has_non_star_witness() {
        // out(0) = {1,3,5,7}, in(0) = {*,2,4,6}, out(3) = {1,4,5,7}.
        let t = w("1111");
        let a = Arc::new(r(0), r(3));
        assert_eq!(arc_profile(&t, a).unwrap().directed_count, 1);
        assert!(unique_triangle_arcs(&t).contains(&(a, r(4))));
        assert_eq!(check_unique_star(&t), Ok(false));
    }

    #[test]
    fn csv_report_shape() {
        let csv = arc_report_csv(&w("1"));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "tail,head,in,out,bypass,directed,unique_third_vertex");
        assert_eq!(lines.len(), 4);
        assert!(lines.contains(&"*,0,0,0,0,1,1"));
        let csv = arc_report_csv(&w("11"));
        assert_eq!(csv.lines().count(), 11);
    }
}
