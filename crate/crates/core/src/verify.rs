//! The exhaustive verification suite run by `walecki verify`.
//!
//! Each criterion sweeps its own range and reports how many cases it checked
//! and how many failed, with a few failing cases spelled out.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::signature::{enumerate_family_s, r1_orbits, Signature};
use crate::symmetry::{are_isomorphic, automorphism_group, is_automorphism, is_isomorphism, sigma, Permutation};
use crate::tournament::{arc_direction, build_tournament, verify_decomposition, Tournament, Vertex};
use crate::triangles::{all_profiles, arc_profile, parity_condition_holds, unique_triangle_arcs, TriangleProfile};

const EXAMPLE_LIMIT: usize = 5;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Shrinks every sweep to finish in a few seconds.
    pub quick: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] {:>2} {}: checked={} failures={}",
            self.id, self.title, self.checked, self.failures
        )?;
        for e in &self.examples {
            write!(f, "\n       {e}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < EXAMPLE_LIMIT {
                self.examples.push(detail());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures += other.failures;
        let room = EXAMPLE_LIMIT.saturating_sub(self.examples.len());
        self.examples.extend(other.examples.into_iter().take(room));
        self
    }

    fn finish(self, id: u8, title: &'static str) -> CriterionOutcome {
        CriterionOutcome {
            id,
            title,
            checked: self.checked,
            failures: self.failures,
            examples: self.examples,
        }
    }
}

/// Runs `per_tournament` over every signature with length in `lengths`, in
/// parallel, merging tallies in signature order.
fn sweep<F>(lengths: impl IntoIterator<Item = usize>, per_tournament: F) -> Tally
where
    F: Fn(&Signature, &Tournament, &mut Tally) + Sync,
{
    let sigs: Vec<Signature> = lengths
        .into_iter()
        .flat_map(|m| Signature::all(m).expect("m >= 1"))
        .collect();
    sigs.par_iter()
        .map(|u| {
            let mut tally = Tally::default();
            match build_tournament(u) {
                Ok(t) => per_tournament(u, &t, &mut tally),
                Err(e) => tally.check(false, || format!("u={u}: {e}")),
            }
            tally
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn w(s: &str) -> Tournament {
    build_tournament(&s.parse().expect("literal signature")).expect("small signature")
}

fn max_m(opts: &VerifyOptions, full: usize, quick: usize) -> usize {
    if opts.quick {
        quick
    } else {
        full
    }
}

pub fn triangle_count_identities(opts: &VerifyOptions) -> CriterionOutcome {
    let tally = sweep(1..=max_m(opts, 8, 6), |u, t, tally| {
        let m = t.m() as u32;
        for ((x, y), p) in all_profiles(t) {
            tally.check(p.satisfies_regular_identities(m), || format!("u={u} arc=({x},{y}) {p:?}"));
        }
    });
    tally.finish(1, "regular-tournament triangle identities o=i, b=m-1-i, d=m-i")
}

pub fn directed_lower_bounds(opts: &VerifyOptions) -> CriterionOutcome {
    let tally = sweep(1..=max_m(opts, 8, 6), |u, t, tally| {
        for ((x, y), p) in all_profiles(t) {
            let ok = p.directed_count >= 1 && (p.bypass_count == 0 || p.directed_count >= 2);
            tally.check(ok, || format!("u={u} arc=({x},{y}) {p:?}"));
        }
    });
    tally.finish(2, "d(a) >= 1, and b(a) >= 1 implies d(a) >= 2")
}

pub fn all_ones_groups(opts: &VerifyOptions) -> CriterionOutcome {
    let mut tally = Tally::default();
    let expect_order = |m: usize, expected: usize, tally: &mut Tally| {
        let g = automorphism_group(&build_tournament(&Signature::ones(m).expect("m >= 1")).expect("small m"));
        tally.check(g.complete && g.order == expected, || {
            format!("|Aut(W_1_{m})| = {} (complete={}), expected {expected}", g.order, g.complete)
        });
    };
    expect_order(1, 3, &mut tally);
    expect_order(2, 5, &mut tally);
    let top = max_m(opts, 9, 7);
    for m in 3..=top {
        expect_order(m, if m % 2 == 1 { m } else { 1 }, &mut tally);
    }
    for m in (3..=top).step_by(2) {
        let t = build_tournament(&Signature::ones(m).expect("m >= 1")).expect("small m");
        let ok = is_automorphism(&t, &sigma(m)) == Ok(true);
        tally.check(ok, || format!("sigma is not an automorphism of W_1_{m}"));
    }
    let c3 = Permutation::from_cycles(3, &[&[0, 1, 2]]).expect("valid cycle");
    tally.check(is_automorphism(&w("1"), &c3) == Ok(true), || "(0 1 *) not in Aut(W_1)".into());
    let c5 = Permutation::from_cycles(5, &[&[0, 1, 3, 2, 4]]).expect("valid cycle");
    tally.check(is_automorphism(&w("11"), &c5) == Ok(true), || "(0 1 3 2 *) not in Aut(W_11)".into());
    tally.finish(3, "automorphism groups of W_{1_m}")
}

pub fn exceptional_cases(_opts: &VerifyOptions) -> CriterionOutcome {
    let mut tally = Tally::default();

    let g = automorphism_group(&w("101"));
    let orbit_sizes: Vec<usize> = g.vertex_orbits.iter().map(Vec::len).collect();
    tally.check(g.order == 21 && orbit_sizes == [7], || {
        format!("W_101: order {} orbits {orbit_sizes:?}", g.order)
    });

    let g = automorphism_group(&w("1011"));
    let mut moved: Vec<usize> = g.vertex_orbits.iter().map(Vec::len).filter(|&s| s > 1).collect();
    moved.sort_unstable();
    let three_cycles = g.generators.iter().all(|p| {
        let lens: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
        lens == [3, 3]
    });
    tally.check(
        g.order == 3 && g.fixed_vertex_count == 3 && moved == [3, 3] && three_cycles,
        || format!("W_1011: order {} fixed {} moved orbits {moved:?}", g.order, g.fixed_vertex_count),
    );

    let g = automorphism_group(&w("1001"));
    tally.check(g.order == 3, || format!("W_1001: order {}", g.order));

    let iso = are_isomorphic(&w("1001"), &w("1111"));
    tally.check(iso == Ok(None), || format!("W_1001 vs W_1111: {iso:?}"));
    tally.finish(4, "exceptional groups W_101, W_1011, W_1001 and W_1001 vs W_1111")
}

pub fn register_shift_isomorphisms(opts: &VerifyOptions) -> CriterionOutcome {
    let tally = sweep(1..=max_m(opts, 6, 4), |u, t, tally| {
        for i in 0..2 * u.len() as i64 {
            let shifted = u.register_shift(i);
            let ok = match build_tournament(&shifted) {
                Ok(s) => matches!(are_isomorphic(t, &s), Ok(Some(p)) if is_isomorphism(t, &s, &p)),
                Err(_) => false,
            };
            tally.check(ok, || format!("no verified isomorphism W_{u} -> W_{shifted} (i={i})"));
        }
    });
    tally.finish(5, "W_u isomorphic to W_{uR_i} with verified witness")
}

pub fn family_arc(opts: &VerifyOptions) -> CriterionOutcome {
    let mut tally = Tally::default();
    for k in 3..=max_m(opts, 5, 4) {
        let m = 2 * k;
        for u in enumerate_family_s(k).expect("k >= 1") {
            let t = build_tournament(&u).expect("small m");
            let a = t.arc_between(Vertex::Ring(0), Vertex::Ring(m)).expect("distinct vertices");
            let p = arc_profile(&t, a).expect("arc of t");
            let want = TriangleProfile {
                in_count: m as u32 - 1,
                out_count: m as u32 - 1,
                bypass_count: 0,
                directed_count: 1,
            };
            let third_is_star = unique_triangle_arcs(&t).contains(&(a, Vertex::Star));
            tally.check(p == want && third_is_star, || format!("u={u} arc {a}: {p:?}, third vertex * = {third_is_star}"));
        }
    }
    tally.finish(6, "family S: arc between 0 and m has profile (m-1, m-1, 0, 1) with third vertex *")
}

pub fn unique_triangle_third_vertex(opts: &VerifyOptions) -> CriterionOutcome {
    let tally = sweep(3..=max_m(opts, 8, 6), |u, t, tally| {
        for (a, third) in unique_triangle_arcs(t) {
            let parity_ok = parity_condition_holds(t, a).unwrap_or(false);
            tally.check(third == Vertex::Star && parity_ok, || {
                format!("u={u} arc {a}: third vertex {third}, parity condition {parity_ok}")
            });
        }
    });
    tally.finish(7, "every arc with d(a)=1 has third vertex * and meets the parity condition")
}

pub fn star_fixed_by_automorphisms(opts: &VerifyOptions) -> CriterionOutcome {
    let tally = sweep(3..=max_m(opts, 8, 6), |u, t, tally| {
        if unique_triangle_arcs(t).is_empty() {
            return;
        }
        let g = automorphism_group(t);
        tally.check(g.complete && g.star_orbit_size == 1, || {
            format!("u={u}: star orbit size {}", g.star_orbit_size)
        });
    });
    tally.finish(8, "every automorphism fixes * when some arc has d(a)=1")
}

pub fn family_census(_opts: &VerifyOptions) -> CriterionOutcome {
    let mut tally = Tally::default();
    let family = enumerate_family_s(3).expect("k >= 1");
    tally.check(family.len() == 8, || format!("|S| = {}", family.len()));
    let mut union = BTreeSet::new();
    let mut touched = BTreeSet::new();
    for u in &family {
        union.extend(u.r1_orbit());
        touched.insert(u.orbit_canonical());
    }
    let total = r1_orbits(6).expect("m >= 1").len();
    tally.check(union.len() == 48, || format!("orbit union has {} signatures", union.len()));
    tally.check(touched.len() == 4 && total == 6, || {
        format!("S meets {} of {total} R_1-orbits", touched.len())
    });
    tally.finish(9, "m=6: |S|=8, orbit union 48 signatures, 4 of 6 R_1-orbits")
}

pub fn negative_examples(_opts: &VerifyOptions) -> CriterionOutcome {
    let mut tally = Tally::default();
    for u in ["10001", "110011"] {
        let arcs = unique_triangle_arcs(&w(u));
        tally.check(arcs.is_empty(), || format!("W_{u} has {} arcs with d(a)=1", arcs.len()));
    }
    tally.finish(10, "W_10001 and W_110011 have no arc with d(a)=1")
}

pub fn oracle_equivalence(opts: &VerifyOptions) -> CriterionOutcome {
    let tally = sweep(1..=max_m(opts, 8, 6), |u, t, tally| {
        tally.check(verify_decomposition(t), || format!("u={u}: decomposition check failed"));
        for x in t.vertices() {
            for y in t.vertices().filter(|&y| y != x) {
                let closed = arc_direction(u, x, y);
                let built = t.arc_between(x, y);
                tally.check(closed.is_ok() && closed == built, || {
                    format!("u={u} pair ({x},{y}): closed form {closed:?}, construction {built:?}")
                });
            }
        }
    });
    tally.finish(11, "closed-form arc direction agrees with cycle construction")
}

/// Every permutation of `0..len`, by Heap's algorithm.
fn all_permutations(len: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..len).collect();
    let mut counters = vec![0; len];
    let mut out = vec![items.clone()];
    let mut i = 0;
    while i < len {
        if counters[i] < i {
            let swap = if i % 2 == 0 { 0 } else { counters[i] };
            items.swap(swap, i);
            out.push(items.clone());
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn brute_force_groups(_opts: &VerifyOptions) -> CriterionOutcome {
    let mut tally = Tally::default();
    for m in 1..=3 {
        let perms = all_permutations(2 * m + 1);
        for u in Signature::all(m).expect("m >= 1") {
            let t = build_tournament(&u).expect("small m");
            let order = t.order();
            let mut brute: Vec<Vec<usize>> = perms
                .iter()
                .filter(|p| {
                    (0..order).all(|x| (0..order).all(|y| x == y || t.beats_idx(x, y) == t.beats_idx(p[x], p[y])))
                })
                .cloned()
                .collect();
            brute.sort();
            let found: Vec<Vec<usize>> = automorphism_group(&t).elements.iter().map(|p| p.images().to_vec()).collect();
            tally.check(brute == found, || {
                format!("u={u}: search found {} automorphisms, brute force {}", found.len(), brute.len())
            });
        }
    }
    tally.finish(12, "automorphism search matches brute force for N in {3,5,7}")
}

pub fn same_parity_alternation(opts: &VerifyOptions) -> CriterionOutcome {
    let tally = sweep(1..=max_m(opts, 8, 6), |u, t, tally| {
        let n = t.n();
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i && (i + j) % 2 == 0) {
                let toward = t.beats_idx(j, i) as u8 + t.beats_idx((j + 1) % n, i) as u8;
                tally.check(toward == 1, || format!("u={u} i={i} j={j}: {toward} arcs toward i"));
            }
        }
    });
    tally.finish(13, "same-parity pairs: exactly one of j, j+1 beats i")
}

pub type Criterion = fn(&VerifyOptions) -> CriterionOutcome;

/// Every criterion in order.
pub const CRITERIA: [Criterion; 13] = [
    triangle_count_identities,
    directed_lower_bounds,
    all_ones_groups,
    exceptional_cases,
    register_shift_isomorphisms,
    family_arc,
    unique_triangle_third_vertex,
    star_fixed_by_automorphisms,
    family_census,
    negative_examples,
    oracle_equivalence,
    brute_force_groups,
    same_parity_alternation,
];

pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionOutcome> {
    CRITERIA.iter().map(|c| c(opts)).collect()
}
