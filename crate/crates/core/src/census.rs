//! Exhaustive sweeps over signature space.
//!
//! Rows are computed in parallel and merged in signature order, so the CSV
//! and summary are byte-identical between runs.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::signature::{enumerate_family_s, r1_orbits, Signature};
use crate::symmetry::automorphism_group;
use crate::tournament::build_tournament;
use crate::triangles::{arc_report_csv, check_parity_condition, check_unique_star, unique_triangle_arcs};

pub const CENSUS_MAX_M: usize = 12;
/// Largest `m` for which sweeps also compute automorphism groups.
pub const AUT_SWEEP_MAX_M: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub signature: Signature,
    pub orbit_canonical: Signature,
    pub has_unique_triangle_arc: bool,
    /// `None` below 7 vertices.
    pub unique_star_ok: Option<bool>,
    /// `None` below 7 vertices.
    pub parity_ok: Option<bool>,
    /// `None` when `m` exceeds [`AUT_SWEEP_MAX_M`].
    pub aut_order: Option<usize>,
    pub star_fixed: Option<bool>,
    pub in_s: bool,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str =
        "signature,orbit_canonical,has_unique_triangle_arc,unique_star_ok,parity_ok,aut_order,star_fixed,in_S";

    fn csv_line(&self) -> String {
        fn opt<T: fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{}",
            self.signature,
            self.orbit_canonical,
            self.has_unique_triangle_arc,
            opt(&self.unique_star_ok),
            opt(&self.parity_ok),
            opt(&self.aut_order),
            opt(&self.star_fixed),
            self.in_s
        )
    }
}

/// Computes one census row, with the automorphism group when `with_aut`.
pub fn census_row(u: &Signature, with_aut: bool) -> Result<CensusRow> {
    let t = build_tournament(u)?;
    let has_unique = !unique_triangle_arcs(&t).is_empty();
    let big_enough = t.order() >= 7;
    let (unique_star_ok, parity_ok) = if big_enough {
        (Some(check_unique_star(&t)?), Some(check_parity_condition(&t)?))
    } else {
        (None, None)
    };
    let (aut_order, star_fixed) = if with_aut {
        let g = automorphism_group(&t);
        (Some(g.order), Some(g.fixes_star()))
    } else {
        (None, None)
    };
    if has_unique && big_enough && star_fixed == Some(false) {
        return Err(Error::StarNotFixed(u.to_string()));
    }
    Ok(CensusRow {
        signature: u.clone(),
        orbit_canonical: u.orbit_canonical(),
        has_unique_triangle_arc: has_unique,
        unique_star_ok,
        parity_ok,
        aut_order,
        star_fixed,
        in_s: u.in_family_s(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusSummary {
    pub m: usize,
    pub signatures: usize,
    pub r1_orbits: usize,
    pub with_unique_triangle_arc: usize,
    pub unique_star_failures: usize,
    pub parity_failures: usize,
    pub family_s_size: usize,
    pub family_s_orbit_union: usize,
    pub family_s_orbits: usize,
}

impl fmt::Display for CensusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m={}", self.m)?;
        writeln!(f, "signatures={}", self.signatures)?;
        writeln!(f, "r1_orbits={}", self.r1_orbits)?;
        writeln!(f, "with_unique_triangle_arc={}", self.with_unique_triangle_arc)?;
        writeln!(f, "unique_star_failures={}", self.unique_star_failures)?;
        writeln!(f, "parity_failures={}", self.parity_failures)?;
        writeln!(f, "family_s_size={}", self.family_s_size)?;
        writeln!(f, "family_s_orbit_union={}", self.family_s_orbit_union)?;
        writeln!(f, "family_s_orbits={}", self.family_s_orbits)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    pub summary: CensusSummary,
}

impl Census {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CensusRow::CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.csv_line());
            out.push('\n');
        }
        out
    }
}

/// Summary statistics for the anti-periodic family at length `m`.
fn family_statistics(m: usize) -> Result<(usize, usize, usize)> {
    if !m.is_multiple_of(2) {
        return Ok((0, 0, 0));
    }
    let family = enumerate_family_s(m / 2)?;
    let mut union = BTreeSet::new();
    let mut reps = BTreeSet::new();
    for u in &family {
        union.extend(u.r1_orbit());
        reps.insert(u.orbit_canonical());
    }
    Ok((family.len(), union.len(), reps.len()))
}

/// One row per signature of length `m` in lexicographic order.
pub fn census(m: usize) -> Result<Census> {
    if !(1..=CENSUS_MAX_M).contains(&m) {
        return Err(Error::CensusCap { m, max: CENSUS_MAX_M });
    }
    let with_aut = m <= AUT_SWEEP_MAX_M;
    let rows = Signature::all(m)?
        .par_iter()
        .map(|u| census_row(u, with_aut))
        .collect::<Result<Vec<_>>>()?;
    let (family_s_size, family_s_orbit_union, family_s_orbits) = family_statistics(m)?;
    let summary = CensusSummary {
        m,
        signatures: rows.len(),
        r1_orbits: r1_orbits(m)?.len(),
        with_unique_triangle_arc: rows.iter().filter(|r| r.has_unique_triangle_arc).count(),
        unique_star_failures: rows.iter().filter(|r| r.unique_star_ok == Some(false)).count(),
        parity_failures: rows.iter().filter(|r| r.parity_ok == Some(false)).count(),
        family_s_size,
        family_s_orbit_union,
        family_s_orbits,
    };
    Ok(Census { rows, summary })
}

/// Per-arc triangle CSV followed by the automorphism group of `W_u`.
pub fn profile_report(u: &Signature) -> Result<String> {
    let t = build_tournament(u)?;
    let mut out = arc_report_csv(&t);
    out.push('\n');
    let _ = writeln!(out, "signature={u}");
    let _ = writeln!(out, "has_unique_triangle_arc={}", !unique_triangle_arcs(&t).is_empty());
    out.push_str(&automorphism_group(&t).to_string());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_at_six() {
        let c = census(6).unwrap();
        assert_eq!(c.rows.len(), 64);
        assert_eq!(c.summary.family_s_size, 8);
        assert_eq!(c.summary.family_s_orbit_union, 48);
        assert_eq!(c.summary.family_s_orbits, 4);
        assert_eq!(c.summary.r1_orbits, 6);
    }

    #[test]
    fn census_at_three() {
        let c = census(3).unwrap();
        assert_eq!(c.rows.len(), 8);
        let row = c.rows.iter().find(|r| r.signature.to_string() == "111").unwrap();
        assert_eq!(row.aut_order, Some(3));
        assert_eq!(c.summary.family_s_size, 0);
    }

    #[test]
    fn census_at_one() {
        let c = census(1).unwrap();
        assert_eq!(c.rows.len(), 2);
        assert!(c.rows.iter().all(|r| r.aut_order == Some(3)));
        assert!(c.rows.iter().all(|r| r.unique_star_ok.is_none() && r.parity_ok.is_none()));
        assert!(c.to_csv().lines().nth(1).unwrap().starts_with("0,0,true,,,3,"));
    }

    #[test]
    fn census_cap() {
        assert_eq!(census(0), Err(Error::CensusCap { m: 0, max: 12 }));
        assert_eq!(census(13), Err(Error::CensusCap { m: 13, max: 12 }));
    }

    #[test]
    fn census_is_deterministic() {
        let a = census(5).unwrap();
        let b = census(5).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.summary.to_string(), b.summary.to_string());
    }

    #[test]
    fn family_count_matches_power_of_two() {
        for m in [2, 4, 8] {
            assert_eq!(family_statistics(m).unwrap().0, 1 << (m / 2));
        }
    }

    #[test]
    fn profile_reports() {
        let r = profile_report(&"1011".parse().unwrap()).unwrap();
        assert!(r.contains("order=3\n") && r.contains("fixed_vertex_count=3\n"));
        let r = profile_report(&"1".parse().unwrap()).unwrap();
        assert!(r.contains("order=3\n"));
        let r = profile_report(&"10001".parse().unwrap()).unwrap();
        assert!(r.contains("has_unique_triangle_arc=false\n"));
    }
}
