//! Binary signatures and the complementing register shift.
//!
//! A signature `u = u_0 u_1 ... u_{m-1}` picks an orientation for each of the
//! `m` Walecki cycles. Text form is a plain `0`/`1` string with `u_0` first.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A nonempty binary string.
///
/// Ordering is lexicographic on the bit sequence, which for equal lengths
/// coincides with the ordering of the text form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    bits: Vec<bool>,
}

impl Signature {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptySignature);
        }
        Ok(Self { bits })
    }

    /// The all-ones string `1_m`.
    pub fn ones(m: usize) -> Result<Self> {
        Self::new(vec![true; m])
    }

    pub fn zeros(m: usize) -> Result<Self> {
        Self::new(vec![false; m])
    }

    /// The `index`-th string of length `m` in lexicographic order, reading
    /// `u_0` as the most significant bit.
    pub fn from_index(m: usize, index: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptySignature);
        }
        let bits = (0..m).map(|k| (index >> (m - 1 - k)) & 1 == 1).collect();
        Ok(Self { bits })
    }

    /// Every signature of length `m`, in lexicographic order.
    pub fn all(m: usize) -> Result<Vec<Self>> {
        if m == 0 {
            return Err(Error::EmptySignature);
        }
        if m > 63 {
            return Err(Error::TooLarge { m, max: 63 });
        }
        (0..1u64 << m).map(|i| Self::from_index(m, i)).collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing clippy expects.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, j: usize) -> bool {
        self.bits[j]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `u R_i`. The shift count is reduced mod `2m`; negative counts are
    /// inverse shifts.
    pub fn register_shift(&self, i: i64) -> Self {
        let m = self.len();
        let r = i.rem_euclid(2 * m as i64) as usize;
        let (r, flip) = if r >= m { (r - m, true) } else { (r, false) };
        // R_r for r < m: the last r entries wrap (complemented) to the front.
        let bits = (0..m)
            .map(|k| {
                let b = if k < r {
                    !self.bits[m - r + k]
                } else {
                    self.bits[k - r]
                };
                b ^ flip
            })
            .collect();
        Self { bits }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Membership in the anti-periodic family: `m = 2k` and
    /// `u_{i+k} != u_i` for every `0 <= i < k`. Odd lengths are never members.
    pub fn in_family_s(&self) -> bool {
        let m = self.len();
        if !m.is_multiple_of(2) {
            return false;
        }
        let k = m / 2;
        (0..k).all(|i| self.bits[i] != self.bits[i + k])
    }

    /// The `⟨R_1⟩`-orbit of this signature.
    pub fn r1_orbit(&self) -> BTreeSet<Signature> {
        let mut orbit = BTreeSet::new();
        let mut cur = self.clone();
        for _ in 0..2 * self.len() {
            cur = cur.register_shift(1);
            orbit.insert(cur.clone());
        }
        orbit
    }

    /// Lexicographically smallest member of the `R_1`-orbit.
    pub fn orbit_canonical(&self) -> Signature {
        self.r1_orbit()
            .into_iter()
            .next()
            .expect("orbit always contains the signature itself")
    }
}

/// All `2^k` members of the family of length `2k`, ordered by their first
/// `k` bits.
pub fn enumerate_family_s(k: usize) -> Result<Vec<Signature>> {
    Ok(Signature::all(k)?
        .into_iter()
        .map(|head| {
            let mut bits = head.bits.clone();
            bits.extend(head.bits.iter().map(|b| !b));
            Signature { bits }
        })
        .collect())
}

/// Partition of every signature of length `m` into `R_1`-orbits, each orbit
/// keyed by its canonical representative.
pub fn r1_orbits(m: usize) -> Result<Vec<BTreeSet<Signature>>> {
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for u in Signature::all(m)? {
        if seen.contains(&u) {
            continue;
        }
        let orbit = u.r1_orbit();
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    Ok(orbits)
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidSignature(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    /// One application of R_1, written straight from its definition.
    fn r1_step(u: &Signature) -> Signature {
        let m = u.len();
        let mut bits = vec![!u.bits[m - 1]];
        bits.extend_from_slice(&u.bits[..m - 1]);
        Signature { bits }
    }

    fn shift_by_steps(u: &Signature, i: i64) -> Signature {
        let period = 2 * u.len() as i64;
        let mut cur = u.clone();
        for _ in 0..i.rem_euclid(period) {
            cur = r1_step(&cur);
        }
        cur
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(sig("1011").to_string(), "1011");
        assert!(sig("1011").bit(0) && !sig("1011").bit(1));
        assert!(matches!("".parse::<Signature>(), Err(Error::EmptySignature)));
        assert!(matches!(
            "10a1".parse::<Signature>(),
            Err(Error::InvalidSignature(_))
        ));
    }

    #[test]
    fn register_shift_examples() {
        // Last entry 1 wraps to the front complemented, the rest move right.
        assert_eq!(sig("101").register_shift(1), sig("010"));
        assert_eq!(sig("1011").register_shift(4), sig("0100"));
        assert_eq!(sig("111111").register_shift(3), sig("000111"));
        assert_eq!(sig("1011").register_shift(0), sig("1011"));
        assert_eq!(sig("1").register_shift(1), sig("0"));
    }

    #[test]
    fn register_shift_matches_stepwise_oracle() {
        for m in 1..=6 {
            for u in Signature::all(m).unwrap() {
                for i in -(2 * m as i64)..=(3 * m as i64) {
                    assert_eq!(u.register_shift(i), shift_by_steps(&u, i), "u={u} i={i}");
                }
            }
        }
    }

    #[test]
    fn r1_has_order_2m() {
        for m in 1..=8 {
            for u in Signature::all(m).unwrap() {
                let mut cur = u.clone();
                for _ in 0..2 * m {
                    cur = cur.register_shift(1);
                }
                assert_eq!(cur, u);
                assert_eq!(u.register_shift(m as i64), u.complement());
            }
        }
    }

    #[test]
    fn shifts_compose_additively() {
        for m in 1..=6 {
            for u in Signature::all(m).unwrap() {
                for a in -3..=3 {
                    for b in -3..=3 {
                        assert_eq!(
                            u.register_shift(a).register_shift(b),
                            u.register_shift(a + b)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(sig("1011").complement(), sig("0100"));
        assert_eq!(Signature::ones(5).unwrap().complement(), Signature::zeros(5).unwrap());
        assert_eq!(sig("10110").complement().complement(), sig("10110"));
    }

    #[test]
    fn family_membership() {
        assert!(sig("1001").in_family_s());
        assert!(sig("111000").in_family_s());
        assert!(!sig("10001").in_family_s());
        assert!(!sig("1111").in_family_s());
        assert!(!sig("1").in_family_s());
    }

    #[test]
    fn enumerate_family_examples() {
        let k1: Vec<String> = enumerate_family_s(1).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(k1, ["01", "10"]);
        let k2: Vec<String> = enumerate_family_s(2).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(k2, ["0011", "0110", "1001", "1100"]);
        assert_eq!(enumerate_family_s(3).unwrap().len(), 8);
    }

    #[test]
    fn enumerate_family_matches_filter() {
        for k in 1..=8 {
            let listed = enumerate_family_s(k).unwrap();
            assert_eq!(listed.len(), 1 << k);
            let filtered: Vec<_> = Signature::all(2 * k)
                .unwrap()
                .into_iter()
                .filter(Signature::in_family_s)
                .collect();
            assert_eq!(listed, filtered);
        }
    }

    #[test]
    fn orbit_examples() {
        let o = sig("1").r1_orbit();
        assert_eq!(o.into_iter().collect::<Vec<_>>(), vec![sig("0"), sig("1")]);
        let o = sig("111111").r1_orbit();
        assert!(o.contains(&sig("000111")) && o.contains(&sig("111000")));
        assert_eq!(sig("1").orbit_canonical(), sig("0"));
    }

    #[test]
    fn family_orbit_union_at_six() {
        let mut union = BTreeSet::new();
        let mut reps = BTreeSet::new();
        for u in enumerate_family_s(3).unwrap() {
            union.extend(u.r1_orbit());
            reps.insert(u.orbit_canonical());
        }
        assert_eq!(union.len(), 48);
        assert_eq!(reps.len(), 4);
        assert_eq!(r1_orbits(6).unwrap().len(), 6);
    }

    proptest! {
        #[test]
        fn orbit_canonical_is_orbit_invariant(bits in prop::collection::vec(any::<bool>(), 1..10), i in -40i64..40) {
            let u = Signature::new(bits).unwrap();
            let c = u.orbit_canonical();
            prop_assert_eq!(u.register_shift(i).orbit_canonical(), c.clone());
            prop_assert_eq!(c.orbit_canonical(), c.clone());
            let orbit = u.r1_orbit();
            prop_assert!(orbit.contains(&u));
            prop_assert_eq!((2 * u.len()) % orbit.len(), 0);
            prop_assert_eq!(orbit.iter().next().unwrap(), &c);
        }

        #[test]
        fn text_form_round_trips(bits in prop::collection::vec(any::<bool>(), 1..20)) {
            let u = Signature::new(bits).unwrap();
            prop_assert_eq!(u.to_string().parse::<Signature>().unwrap(), u);
        }
    }
}
