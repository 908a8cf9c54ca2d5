//! Automorphisms and isomorphisms of Walecki tournaments.

mod permutation;
mod search;

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

pub use permutation::Permutation;

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::triangles::unique_triangle_arcs;

/// Upper bound on the number of group elements enumerated or closed over.
pub const GROUP_CAP: usize = 100_000;

/// `ρ = (0 1 ... n-1)`, fixing `*`.
pub fn rho(m: usize) -> Permutation {
    let n = 2 * m;
    let mut images: Vec<usize> = (1..=n).map(|i| i % n).collect();
    images.push(n);
    Permutation::new(images).expect("rotation is a bijection")
}

/// `σ = (0 1 ... m-1)(n-1 n-2 ... m)`, fixing `*`.
pub fn sigma(m: usize) -> Permutation {
    let n = 2 * m;
    let low: Vec<usize> = (0..m).collect();
    let high: Vec<usize> = (m..n).rev().collect();
    Permutation::from_cycles(n + 1, &[&low, &high]).expect("disjoint cycles")
}

pub fn is_automorphism(t: &Tournament, p: &Permutation) -> Result<bool> {
    if p.len() != t.order() {
        return Err(Error::SizeMismatch {
            left: t.order(),
            right: p.len(),
        });
    }
    Ok(search::is_isomorphism(t, t, p))
}

/// Whether `p` maps the arcs of `t1` exactly onto the arcs of `t2`.
pub fn is_isomorphism(t1: &Tournament, t2: &Tournament, p: &Permutation) -> bool {
    search::is_isomorphism(t1, t2, p)
}

/// Group generated by `generators`, by breadth-first products. Stops after
/// `cap` elements and then returns `None`.
pub fn closure(len: usize, generators: &[Permutation], cap: usize) -> Option<HashSet<Permutation>> {
    let id = Permutation::identity(len);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(h);
            }
        }
    }
    Some(seen)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroupReport {
    pub generators: Vec<Permutation>,
    pub order: usize,
    pub star_orbit_size: usize,
    pub vertex_orbits: Vec<Vec<usize>>,
    pub fixed_vertex_count: usize,
    /// False when the element enumeration or closure hit [`GROUP_CAP`].
    pub complete: bool,
    /// Whether every automorphism is a power of ρ, a power of σ, or a power
    /// of σ conjugated by a power of ρ. Recorded, never asserted.
    pub classical_only: bool,
    /// Every automorphism found, sorted.
    pub elements: Vec<Permutation>,
}

impl AutGroupReport {
    pub fn fixes_star(&self) -> bool {
        self.star_orbit_size == 1
    }

    /// `|orbit(*)| * |Stab(*)| = |G|`, computed over the enumerated elements.
    pub fn orbit_stabilizer_holds(&self) -> bool {
        let star = self.elements.first().map_or(0, |e| e.len() - 1);
        let stab = self.elements.iter().filter(|g| g.apply(star) == star).count();
        self.star_orbit_size * stab == self.order
    }
}

impl fmt::Display for AutGroupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.vertex_orbits.iter().map(Vec::len).sum::<usize>();
        let label = |x: usize| if x + 1 == len { "*".to_string() } else { x.to_string() };
        writeln!(f, "order={}", self.order)?;
        writeln!(f, "complete={}", self.complete)?;
        writeln!(f, "star_orbit_size={}", self.star_orbit_size)?;
        writeln!(f, "fixed_vertex_count={}", self.fixed_vertex_count)?;
        let orbits: Vec<String> = self
            .vertex_orbits
            .iter()
            .map(|o| format!("{{{}}}", o.iter().map(|&x| label(x)).collect::<Vec<_>>().join(" ")))
            .collect();
        writeln!(f, "orbits={}", orbits.join(" "))?;
        let gens: Vec<String> = self.generators.iter().map(Permutation::cycle_notation).collect();
        writeln!(f, "generators={}", gens.join(" "))?;
        writeln!(f, "classical_only={}", self.classical_only)
    }
}

fn classical_automorphisms(m: usize) -> HashSet<Permutation> {
    let (r, s) = (rho(m), sigma(m));
    let mut set = HashSet::new();
    for a in 0..2 * m {
        let ra = r.pow(a);
        set.insert(ra.clone());
        for b in 0..m {
            // ρ^{-a} σ^b ρ^a, composing left to right.
            set.insert(ra.inverse().then(&s.pow(b)).then(&ra));
        }
    }
    set
}

fn orbits(len: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..len).collect();
    fn find(label: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while label[r] != r {
            r = label[r];
        }
        label[x] = r;
        r
    }
    for g in generators {
        for x in 0..len {
            let (a, b) = (find(&mut label, x), find(&mut label, g.apply(x)));
            if a != b {
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..len {
        let root = find(&mut label, x);
        groups.entry(root).or_default().push(x);
    }
    groups.into_values().collect()
}

/// Full automorphism group of `t` by exhaustive refinement search.
pub fn automorphism_group(t: &Tournament) -> AutGroupReport {
    let len = t.order();
    let (mut elements, truncated) = search::isomorphisms(t, t, GROUP_CAP);
    elements.sort();

    // Greedy generating set: keep an element only if it is new to the
    // closure of those kept so far.
    let mut generators: Vec<Permutation> = Vec::new();
    let mut generated: HashSet<Permutation> = HashSet::from([Permutation::identity(len)]);
    let mut closed = true;
    for g in &elements {
        if !generated.contains(g) {
            generators.push(g.clone());
            match closure(len, &generators, GROUP_CAP) {
                Some(c) => generated = c,
                None => {
                    closed = false;
                    break;
                }
            }
        }
    }
    let complete = closed && !truncated;
    let order = if complete { generated.len() } else { elements.len() };
    debug_assert!(!complete || order == elements.len());

    let vertex_orbits = orbits(len, &generators);
    let star = t.star();
    let star_orbit_size = vertex_orbits
        .iter()
        .find(|o| o.contains(&star))
        .map_or(1, Vec::len);
    let fixed_vertex_count = vertex_orbits.iter().filter(|o| o.len() == 1).count();
    let classical = classical_automorphisms(t.m());
    let classical_only = elements.iter().all(|g| classical.contains(g));

    AutGroupReport {
        generators,
        order,
        star_orbit_size,
        vertex_orbits,
        fixed_vertex_count,
        complete,
        classical_only,
        elements,
    }
}

/// An isomorphism `t1 → t2`, if one exists.
pub fn are_isomorphic(t1: &Tournament, t2: &Tournament) -> Result<Option<Permutation>> {
    if t1.order() != t2.order() {
        return Err(Error::SizeMismatch {
            left: t1.order(),
            right: t2.order(),
        });
    }
    let (mut found, _) = search::isomorphisms(t1, t2, 1);
    Ok(found.pop())
}

/// Whether every automorphism of each tournament fixes `*` and every
/// isomorphism between them sends `*` to `*`.
///
/// All isomorphisms are `witness ∘ Aut(t2)`, so it is enough that both
/// groups fix `*` and one witness does.
pub fn star_fixed_and_mapped(t1: &Tournament, t2: &Tournament) -> Result<bool> {
    for t in [t1, t2] {
        if t.order() < 7 {
            return Err(Error::TooFewVertices {
                order: t.order(),
                min: 7,
            });
        }
        if unique_triangle_arcs(t).is_empty() {
            return Err(Error::NoUniqueTriangleArc);
        }
    }
    let witness = are_isomorphic(t1, t2)?;
    let fixes = automorphism_group(t1).fixes_star() && automorphism_group(t2).fixes_star();
    Ok(fixes && witness.is_none_or(|p| p.apply(t1.star()) == t2.star()))
}
