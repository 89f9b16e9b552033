//! Catalog of rings on a cyclic additive group.
//!
//! Every ring structure on the cyclic group `Z_n` is `SZ(n, e)` for some
//! scale `e` (multiplication `x • y = x y e mod n`), so enumerating scales
//! enumerates all such rings. The catalog records, per ring, the structural
//! facts and both source sets, one JSON object per line; regeneration is
//! byte-identical for a fixed version.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::RingError;
use crate::expr::RingExpr;
use crate::ideals::{enumerate_prime_ideals, prime_radical};
use crate::parse::parse_ring_expr;
use crate::ring::FiniteRing;
use crate::source::{is_prime_ring, is_semiprime_ring, primeness_source, semiprimeness_source};
use crate::subset::Subset;

/// Largest ring order the isomorphism dedup will examine by default.
pub const DEFAULT_ISO_BOUND: usize = 8;

/// One catalog line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub descriptor: String,
    pub order: usize,
    /// The multiplication scale: `x • y = x y e mod order`.
    pub e: usize,
    pub has_identity: bool,
    pub commutative: bool,
    pub is_prime: bool,
    pub is_semiprime: bool,
    /// Members of the source of primeness of the whole ring, by label.
    pub p_source: Vec<String>,
    /// Members of the source of semiprimeness of the whole ring, by label.
    pub semi_source: Vec<String>,
    pub prime_ideal_count: usize,
    /// The prime radical, by label (every label when no prime ideal exists).
    pub radical: Vec<String>,
}

/// All `SZ(n, e)` rings with `1 <= n <= max_order`, ordered by `n` then `e`.
pub fn enumerate_cyclic_rings(max_order: usize) -> Result<Vec<FiniteRing>, RingError> {
    if max_order == 0 {
        return Err(RingError::InvalidParameter(
            "max order must be at least 1".into(),
        ));
    }
    let mut rings = Vec::new();
    for n in 1..=max_order {
        for e in 0..n {
            rings.push(FiniteRing::scaled_zn(n, e)?);
        }
    }
    Ok(rings)
}

/// Is `x -> u x mod n` a ring isomorphism from `a` onto `b`?
///
/// For rings whose elements are the residues of a common cyclic additive
/// group — which is exactly what the catalog enumerates — every additive
/// automorphism is such a unit multiplication, so searching the units
/// decides isomorphism completely.
fn unit_isomorphic(a: &FiniteRing, b: &FiniteRing) -> bool {
    let n = a.order();
    if b.order() != n {
        return false;
    }
    'units: for u in 1..n.max(2) {
        if gcd(u, n) != 1 {
            continue;
        }
        let map = |i: usize| (u * i) % n;
        for i in 0..n {
            for j in 0..n {
                if map(a.add(i, j)) != b.add(map(i), map(j))
                    || map(a.mul(i, j)) != b.mul(map(i), map(j))
                {
                    continue 'units;
                }
            }
        }
        return true;
    }
    false
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// What a dedup pass produced: the surviving rings, plus a note when some
/// orders exceeded the bound and were passed through untouched.
#[derive(Debug, Clone)]
pub struct DedupOutcome {
    pub rings: Vec<FiniteRing>,
    pub note: Option<String>,
}

/// Drops every ring isomorphic to an earlier one of the same order.
/// Enumeration order makes the smallest scale the surviving representative.
/// Orders above `bound` are never silently deduplicated: they pass through
/// unchanged and the outcome carries an explanatory note.
pub fn dedup_isomorphic(rings: Vec<FiniteRing>, bound: usize) -> DedupOutcome {
    let mut kept: Vec<FiniteRing> = Vec::new();
    let mut over_bound: BTreeSet<usize> = BTreeSet::new();
    for ring in rings {
        if ring.order() > bound {
            over_bound.insert(ring.order());
            kept.push(ring);
            continue;
        }
        let duplicate = kept
            .iter()
            .filter(|k| k.order() <= bound)
            .any(|k| unit_isomorphic(k, &ring));
        if !duplicate {
            kept.push(ring);
        }
    }
    let note = if over_bound.is_empty() {
        None
    } else {
        let orders: Vec<String> = over_bound.iter().map(|n| n.to_string()).collect();
        Some(format!(
            "iso-dedup skipped for orders above the bound {bound}: order(s) {} kept undeduplicated",
            orders.join(", ")
        ))
    };
    DedupOutcome { rings: kept, note }
}

/// Computes the catalog line for one enumerated ring. The scale is read
/// back from the ring's own descriptor, so only `SZ`-descriptor rings are
/// accepted.
pub fn catalog_entry(ring: &FiniteRing) -> Result<CatalogEntry, RingError> {
    let expr = parse_ring_expr(ring.descriptor()).map_err(|err| {
        RingError::InvalidParameter(format!(
            "catalog entries need an SZ descriptor, got {:?}: {err}",
            ring.descriptor()
        ))
    })?;
    let e = match expr {
        RingExpr::ScaledZn(_, e) => e as usize,
        other => {
            return Err(RingError::InvalidParameter(format!(
                "catalog entries need an SZ descriptor, got {:?}",
                other.render()
            )))
        }
    };
    let whole = Subset::whole(ring);
    let p = primeness_source(ring, &whole)?;
    let s = semiprimeness_source(ring, &whole)?;
    Ok(CatalogEntry {
        descriptor: ring.descriptor().to_string(),
        order: ring.order(),
        e,
        has_identity: ring.one().is_some(),
        commutative: ring.is_commutative(),
        is_prime: is_prime_ring(ring),
        is_semiprime: is_semiprime_ring(ring),
        p_source: p.label_vec(ring),
        semi_source: s.label_vec(ring),
        prime_ideal_count: enumerate_prime_ideals(ring).len(),
        radical: prime_radical(ring).label_vec(ring),
    })
}

/// What [`build_catalog`] wrote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogResult {
    pub entries: usize,
    pub dedup_note: Option<String>,
}

/// Writes the catalog for all cyclic-group rings up to `max_order` as JSON
/// lines. With `dedup` set, isomorphic duplicates are dropped first (under
/// [`DEFAULT_ISO_BOUND`]). Output is deterministic: rerunning with the
/// same arguments reproduces the file byte for byte.
pub fn build_catalog(
    max_order: usize,
    out: &Path,
    dedup: bool,
) -> Result<CatalogResult, RingError> {
    let rings = enumerate_cyclic_rings(max_order)?;
    let (rings, dedup_note) = if dedup {
        let outcome = dedup_isomorphic(rings, DEFAULT_ISO_BOUND);
        (outcome.rings, outcome.note)
    } else {
        (rings, None)
    };

    let file = std::fs::File::create(out)?;
    let mut writer = std::io::BufWriter::new(file);
    let mut count = 0usize;
    for ring in &rings {
        let entry = catalog_entry(ring)?;
        let line = serde_json::to_string(&entry)
            .map_err(|e| RingError::Io(format!("cannot serialize catalog entry: {e}")))?;
        writer.write_all(line.as_bytes())?;
        writer.write_all(b"\n")?;
        count += 1;
    }
    writer.flush()?;
    Ok(CatalogResult {
        entries: count,
        dedup_note,
    })
}
