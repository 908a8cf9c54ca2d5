//! Walecki tournaments on `N = 2m + 1` vertices.
//!
//! Vertices are `Z_n ∪ {*}` with `n = 2m`. Internally ring vertex `i` has
//! index `i` and `*` has index `n`, so every vertex index lies in `0..N`.
//! Adjacency is an `N x N` bit matrix with one `u64` row per tail.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::signature::Signature;

/// Largest `m` whose tournament fits the `u64` row representation.
pub const MAX_M: usize = 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Ring(usize),
    Star,
}

impl Vertex {
    /// Ring vertex `value mod n`.
    pub fn ring(value: i64, n: usize) -> Self {
        Vertex::Ring(value.rem_euclid(n as i64) as usize)
    }

    pub fn index(self, n: usize) -> usize {
        match self {
            Vertex::Ring(v) => v,
            Vertex::Star => n,
        }
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        if index == n {
            Vertex::Star
        } else {
            Vertex::Ring(index)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Ring(v) => write!(f, "{v}"),
            Vertex::Star => f.write_str("*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        Self { tail, head }
    }

    pub fn reversed(self) -> Self {
        Self::new(self.head, self.tail)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tail, self.head)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Orientation::Plus
        } else {
            Orientation::Minus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedHamCycle {
    pub base_index: usize,
    pub orientation: Orientation,
    pub arcs: Vec<Arc>,
}

/// Vertex sequence `[j, j+1, j-1, j+2, j-2, ..., j+m]` of `C_j` between the
/// two visits to `*`. `j` may be any residue mod `n`.
fn ring_sequence(m: usize, j: i64) -> Vec<Vertex> {
    let n = 2 * m;
    let mut seq = Vec::with_capacity(n);
    seq.push(Vertex::ring(j, n));
    for l in 1..m as i64 {
        seq.push(Vertex::ring(j + l, n));
        seq.push(Vertex::ring(j - l, n));
    }
    seq.push(Vertex::ring(j + m as i64, n));
    seq
}

/// Arcs of `C_j^+` for any `j` in `Z_n` (so `C_{j+m}^+` is `C_j^-`).
pub(crate) fn forward_cycle(m: usize, j: usize) -> Vec<Arc> {
    let seq = ring_sequence(m, j as i64);
    let mut arcs = Vec::with_capacity(2 * m + 1);
    arcs.push(Arc::new(Vertex::Star, seq[0]));
    arcs.extend(seq.windows(2).map(|w| Arc::new(w[0], w[1])));
    arcs.push(Arc::new(*seq.last().unwrap(), Vertex::Star));
    arcs
}

/// The directed Hamilton cycle `C_j^+` or `C_j^-`.
pub fn cycle_arcs(m: usize, j: usize, orientation: Orientation) -> Result<DirectedHamCycle> {
    if m == 0 {
        return Err(Error::EmptySignature);
    }
    if j >= m {
        return Err(Error::CycleIndexOutOfRange { j, m });
    }
    let mut arcs = forward_cycle(m, j);
    if orientation == Orientation::Minus {
        arcs = arcs.into_iter().rev().map(Arc::reversed).collect();
    }
    Ok(DirectedHamCycle {
        base_index: j,
        orientation,
        arcs,
    })
}

/// An orientation of the complete graph on `2m + 1` vertices together with
/// the signature it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    signature: Signature,
    rows: Vec<u64>,
}

impl Tournament {
    pub fn m(&self) -> usize {
        self.signature.len()
    }

    pub fn n(&self) -> usize {
        2 * self.m()
    }

    /// Number of vertices, `2m + 1`.
    pub fn order(&self) -> usize {
        2 * self.m() + 1
    }

    pub fn star(&self) -> usize {
        self.n()
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        Vertex::from_index(index, self.n())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.order()).map(|i| self.vertex(i))
    }

    pub fn index_of(&self, v: Vertex) -> Result<usize> {
        match v {
            Vertex::Ring(i) if i < self.n() => Ok(i),
            Vertex::Star => Ok(self.n()),
            _ => Err(Error::VertexOutOfRange(v.to_string())),
        }
    }

    /// Bitmask of all vertex indices.
    pub fn all_mask(&self) -> u64 {
        (1u64 << self.order()) - 1
    }

    /// Out-neighbourhood of vertex index `x` as a bitmask.
    #[inline]
    pub fn out_mask(&self, x: usize) -> u64 {
        self.rows[x]
    }

    /// In-neighbourhood of vertex index `x` as a bitmask.
    #[inline]
    pub fn in_mask(&self, x: usize) -> u64 {
        self.all_mask() & !self.rows[x] & !(1u64 << x)
    }

    #[inline]
    pub fn beats_idx(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn beats(&self, x: Vertex, y: Vertex) -> Result<bool> {
        Ok(self.beats_idx(self.index_of(x)?, self.index_of(y)?))
    }

    /// The oriented arc on the edge `{x, y}`.
    pub fn arc_between(&self, x: Vertex, y: Vertex) -> Result<Arc> {
        let (xi, yi) = (self.index_of(x)?, self.index_of(y)?);
        if xi == yi {
            return Err(Error::SameVertex(x.to_string()));
        }
        Ok(if self.beats_idx(xi, yi) {
            Arc::new(x, y)
        } else {
            Arc::new(y, x)
        })
    }

    pub fn contains_arc(&self, a: Arc) -> Result<bool> {
        let (t, h) = (self.index_of(a.tail)?, self.index_of(a.head)?);
        Ok(t != h && self.beats_idx(t, h))
    }

    /// All arcs as index pairs, sorted by `(tail, head)` with `*` last.
    pub fn arc_indices(&self) -> Vec<(usize, usize)> {
        let order = self.order();
        (0..order)
            .flat_map(|x| (0..order).filter(move |&y| y != x).map(move |y| (x, y)))
            .filter(|&(x, y)| self.beats_idx(x, y))
            .collect()
    }

    pub fn arcs(&self) -> Vec<Arc> {
        self.arc_indices()
            .into_iter()
            .map(|(x, y)| Arc::new(self.vertex(x), self.vertex(y)))
            .collect()
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.rows[x].count_ones() as usize
    }

    /// Exactly one of `beats(x,y)`, `beats(y,x)` for every distinct pair.
    pub fn is_tournament(&self) -> bool {
        let order = self.order();
        (0..order).all(|x| {
            !self.beats_idx(x, x)
                && self.rows[x] & !self.all_mask() == 0
                && (0..order)
                    .filter(|&y| y != x)
                    .all(|y| self.beats_idx(x, y) != self.beats_idx(y, x))
        })
    }

    pub fn is_regular(&self) -> bool {
        let m = self.m();
        (0..self.order()).all(|x| self.out_degree(x) == m && self.in_mask(x).count_ones() as usize == m)
    }

    /// A copy with the arc between `x` and `y` reversed. The result is still a
    /// tournament but generally no longer a Walecki tournament.
    pub fn with_arc_flipped(&self, x: Vertex, y: Vertex) -> Result<Self> {
        let (xi, yi) = (self.index_of(x)?, self.index_of(y)?);
        if xi == yi {
            return Err(Error::SameVertex(x.to_string()));
        }
        let mut rows = self.rows.clone();
        rows[xi] ^= 1 << yi;
        rows[yi] ^= 1 << xi;
        Ok(Self {
            signature: self.signature.clone(),
            rows,
        })
    }

    /// Text dump: header `m=<m> u=<bits>`, then one 0/1 row per vertex in
    /// the order `0, ..., n-1, *`.
    pub fn to_text(&self) -> String {
        let mut out = format!("m={} u={}\n", self.m(), self.signature);
        for x in 0..self.order() {
            for y in 0..self.order() {
                out.push(if self.beats_idx(x, y) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::MalformedDump(msg.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let mut fields = header.split_whitespace();
        let m: usize = fields
            .next()
            .and_then(|f| f.strip_prefix("m="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("header must start with m=<int>"))?;
        let signature: Signature = fields
            .next()
            .and_then(|f| f.strip_prefix("u="))
            .ok_or_else(|| bad("header must contain u=<bits>"))?
            .parse()?;
        if signature.len() != m {
            return Err(bad("signature length disagrees with m"));
        }
        if m > MAX_M {
            return Err(Error::TooLarge { m, max: MAX_M });
        }
        let order = 2 * m + 1;
        let mut rows = Vec::with_capacity(order);
        for line in lines {
            let line = line.trim();
            if line.len() != order {
                return Err(bad("adjacency row has the wrong length"));
            }
            let mut row = 0u64;
            for (y, c) in line.chars().enumerate() {
                match c {
                    '1' => row |= 1 << y,
                    '0' => {}
                    _ => return Err(bad("adjacency rows must be 0/1")),
                }
            }
            rows.push(row);
        }
        if rows.len() != order {
            return Err(bad("wrong number of adjacency rows"));
        }
        let t = Self { signature, rows };
        if !t.is_tournament() {
            return Err(bad("adjacency matrix is not a tournament"));
        }
        Ok(t)
    }

    /// Graphviz rendering; `*` becomes the node `star`.
    pub fn to_dot(&self) -> String {
        let name = |v: Vertex| match v {
            Vertex::Star => "star".to_string(),
            Vertex::Ring(i) => format!("v{i}"),
        };
        let mut out = format!("digraph W_{} {{\n", self.signature);
        for v in self.vertices() {
            let _ = writeln!(out, "  {} [label=\"{}\"];", name(v), v);
        }
        for a in self.arcs() {
            let _ = writeln!(out, "  {} -> {};", name(a.tail), name(a.head));
        }
        out.push_str("}\n");
        out
    }
}

/// `W_u`: cycle `j` oriented forward when `u_j = 1`, backward otherwise.
pub fn build_tournament(u: &Signature) -> Result<Tournament> {
    let m = u.len();
    if m > MAX_M {
        return Err(Error::TooLarge { m, max: MAX_M });
    }
    let n = 2 * m;
    let mut rows = vec![0u64; n + 1];
    for j in 0..m {
        let cycle = cycle_arcs(m, j, Orientation::from_bit(u.bit(j)))?;
        for a in cycle.arcs {
            let (t, h) = (a.tail.index(n), a.head.index(n));
            debug_assert_eq!((rows[t] >> h | rows[h] >> t) & 1, 0, "cycles share an edge");
            rows[t] |= 1 << h;
        }
    }
    Ok(Tournament {
        signature: u.clone(),
        rows,
    })
}

/// Closed-form orientation of the edge `{x, y}` in `W_u`, without building
/// the tournament.
///
/// A ring edge with odd sum `x + y = 2c + 1` is `{c - l, c + 1 + l}` with
/// `0 <= l < m` in `C_c`; an even-sum edge `x + y = 2c` is `{c + l, c - l}`
/// with `1 <= l < m`. Halving in `Z_n` gives `c` only up to `m`, but `C_c`
/// and `C_{c+m}` are the same cycle with opposite direction, so either
/// candidate works once the orientation is read relative to it.
pub fn arc_direction(u: &Signature, x: Vertex, y: Vertex) -> Result<Arc> {
    let m = u.len();
    let n = 2 * m;
    let check = |v: Vertex| match v {
        Vertex::Ring(i) if i >= n => Err(Error::VertexOutOfRange(v.to_string())),
        _ => Ok(()),
    };
    check(x)?;
    check(y)?;
    if x == y {
        return Err(Error::SameVertex(x.to_string()));
    }
    // Whether C_c^+ (c in Z_n) is one of the chosen cycles of W_u.
    let forward = |c: usize| if c < m { u.bit(c) } else { !u.bit(c - m) };

    let (tail, head, c) = match (x, y) {
        (Vertex::Star, Vertex::Ring(r)) | (Vertex::Ring(r), Vertex::Star) => {
            // C_c^+ starts with (*, c).
            (Vertex::Star, Vertex::Ring(r), r)
        }
        (Vertex::Ring(i), Vertex::Ring(j)) => {
            if (i + j) % 2 == 1 {
                let c = ((i + j - 1) / 2) % n;
                // tail is c - l for the endpoint with (c - v) mod n in [0, m).
                if (c + n - i) % n < m {
                    (Vertex::Ring(i), Vertex::Ring(j), c)
                } else {
                    (Vertex::Ring(j), Vertex::Ring(i), c)
                }
            } else {
                let c = ((i + j) / 2) % n;
                // tail is c + l for the endpoint with (v - c) mod n in [1, m).
                let l = (i + n - c) % n;
                if (1..m).contains(&l) {
                    (Vertex::Ring(i), Vertex::Ring(j), c)
                } else {
                    (Vertex::Ring(j), Vertex::Ring(i), c)
                }
            }
        }
        (Vertex::Star, Vertex::Star) => unreachable!("distinct vertices"),
    };
    let arc = Arc::new(tail, head);
    Ok(if forward(c) { arc } else { arc.reversed() })
}

/// True iff the `m` directed cycles selected by the tournament's signature
/// are arc-disjoint and together give exactly its arc set.
pub fn verify_decomposition(t: &Tournament) -> bool {
    let m = t.m();
    let n = t.n();
    let mut covered = vec![0u64; t.order()];
    for j in 0..m {
        let Ok(cycle) = cycle_arcs(m, j, Orientation::from_bit(t.signature().bit(j))) else {
            return false;
        };
        for a in cycle.arcs {
            let (x, y) = (a.tail.index(n), a.head.index(n));
            let already = (covered[x] >> y | covered[y] >> x) & 1 == 1;
            if already || !t.beats_idx(x, y) {
                return false;
            }
            covered[x] |= 1 << y;
        }
    }
    (0..t.order()).all(|x| covered[x] == t.out_mask(x))
}
