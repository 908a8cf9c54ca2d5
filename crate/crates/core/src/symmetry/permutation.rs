use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tournament::{Arc, Vertex};

/// A bijection on vertex indices `0..N`, with `*` in the last slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let len = images.len();
        let mut seen = vec![false; len];
        for &i in &images {
            if i >= len || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation(len));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(len: usize) -> Self {
        Self {
            images: (0..len).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles; unmentioned points are fixed.
    pub fn from_cycles(len: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..len).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= len {
                    return Err(Error::NotAPermutation(len));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn apply_vertex(&self, v: Vertex) -> Vertex {
        let n = self.len() - 1;
        Vertex::from_index(self.apply(v.index(n)), n)
    }

    pub fn apply_arc(&self, a: Arc) -> Arc {
        Arc::new(self.apply_vertex(a.tail), self.apply_vertex(a.head))
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Permutation::identity(self.len()), |acc, _| acc.then(self))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    fn label(&self, x: usize) -> String {
        if x + 1 == self.len() {
            "*".to_string()
        } else {
            x.to_string()
        }
    }

    /// Cycle notation with `*` for the last slot, `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|&x| self.label(x)).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

/// Space-separated image list, `*` for the last slot.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|&y| self.label(y)).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let len = tokens.len();
        let images = tokens
            .iter()
            .map(|t| match *t {
                "*" if len > 0 => Ok(len - 1),
                _ => t.parse::<usize>().map_err(|_| Error::NotAPermutation(len)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}
