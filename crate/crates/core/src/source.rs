//! The source-of-primeness machinery.
//!
//! For a ring `R`, a nonempty subset `A`, and an element `a`:
//!
//! * `S_R^a(A) = { b : a x b = 0 for all x in A }`;
//! * `P_R(A)` is the intersection of `S_R^a(A)` over all `a in R`,
//!   equivalently `{ b : r x b = 0 for all r in R, x in A }`;
//! * `S_R(A) = { b : b x b = 0 for all x in A }` (the semiprimeness source).
//!
//! `P_R(A)` always contains 0, so these sets are nonempty; the ring is
//! "trivially sourced" on `A` when they collapse to `{0}`.
//!
//! [`primeness_source`] and [`primeness_source_direct`] compute the same set
//! along the two different routes (intersection of s-sets vs. a direct
//! triple scan) and serve as mutual oracles in the test suite.

use serde::Serialize;

use crate::error::RingError;
use crate::ring::FiniteRing;
use crate::subset::Subset;

fn check_args(ring: &FiniteRing, a: Option<usize>, subset: &Subset) -> Result<(), RingError> {
    assert_eq!(
        subset.ring_order(),
        ring.order(),
        "subset belongs to a ring of different order"
    );
    if subset.is_empty() {
        return Err(RingError::EmptySubset);
    }
    if let Some(a) = a {
        ring.check_element(a)?;
    }
    Ok(())
}

/// `S_R^a(A)`: all `b` with `a x b = 0` for every `x` in `A`.
pub fn s_set(ring: &FiniteRing, a: usize, subset: &Subset) -> Result<Subset, RingError> {
    check_args(ring, Some(a), subset)?;
    let mut out = Subset::empty(ring);
    for b in ring.elements() {
        let kills_all = subset
            .iter()
            .all(|x| ring.mul(ring.mul(a, x), b) == ring.zero());
        if kills_all {
            out.insert(b);
        }
    }
    Ok(out)
}

/// `P_R(A)` computed literally as the intersection of `S_R^a(A)` over all
/// `a` in the ring.
pub fn primeness_source(ring: &FiniteRing, subset: &Subset) -> Result<Subset, RingError> {
    check_args(ring, None, subset)?;
    let mut acc = Subset::whole(ring);
    for a in ring.elements() {
        acc = acc.intersect(&s_set(ring, a, subset)?);
    }
    Ok(acc)
}

/// `P_R(A)` computed directly: `b` belongs exactly when `r x b = 0` for
/// every `r` in the ring and `x` in `A`.
///
/// This is an independent implementation path from [`primeness_source`]
/// (candidate-major scan instead of an intersection of s-sets); the two are
/// checked against each other exhaustively in tests.
pub fn primeness_source_direct(ring: &FiniteRing, subset: &Subset) -> Result<Subset, RingError> {
    check_args(ring, None, subset)?;
    let zero = ring.zero();
    let mut out = Subset::empty(ring);
    'candidates: for b in ring.elements() {
        for r in ring.elements() {
            for x in subset.iter() {
                if ring.mul(ring.mul(r, x), b) != zero {
                    continue 'candidates;
                }
            }
        }
        out.insert(b);
    }
    Ok(out)
}

/// `S_R(A)`: all `b` with `b x b = 0` for every `x` in `A`.
pub fn semiprimeness_source(ring: &FiniteRing, subset: &Subset) -> Result<Subset, RingError> {
    check_args(ring, None, subset)?;
    let mut out = Subset::empty(ring);
    for b in ring.elements() {
        let squashes = subset
            .iter()
            .all(|x| ring.mul(ring.mul(b, x), b) == ring.zero());
        if squashes {
            out.insert(b);
        }
    }
    Ok(out)
}

/// First (in ascending scan order) pair of nonzero elements `(a, b)` with
/// `a R b = 0`, or `None` when the ring is prime.
pub fn prime_ring_witness(ring: &FiniteRing) -> Option<(usize, usize)> {
    let zero = ring.zero();
    for a in ring.elements().skip(1) {
        for b in ring.elements().skip(1) {
            if ring.elements().all(|r| ring.mul(ring.mul(a, r), b) == zero) {
                return Some((a, b));
            }
        }
    }
    None
}

/// True when `a R b = 0` implies `a = 0` or `b = 0`.
pub fn is_prime_ring(ring: &FiniteRing) -> bool {
    prime_ring_witness(ring).is_none()
}

/// First nonzero `a` with `a R a = 0`, or `None` when the ring is
/// semiprime.
pub fn semiprime_ring_witness(ring: &FiniteRing) -> Option<usize> {
    let zero = ring.zero();
    ring.elements()
        .skip(1)
        .find(|&a| ring.elements().all(|r| ring.mul(ring.mul(a, r), a) == zero))
}

/// True when `a R a = 0` implies `a = 0`.
pub fn is_semiprime_ring(ring: &FiniteRing) -> bool {
    semiprime_ring_witness(ring).is_none()
}

/// Which of the three source sets a [`SourceResult`] reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceKind {
    /// `P_R(A)`
    P,
    /// `S_R^a(A)`
    S,
    /// `S_R(A)`
    Semi,
}

/// A computed source set in label form, ready for serialization.
///
/// Serializes as `{"kind": ..., "a": label-or-null, "A": [...], "members":
/// [...]}` with members listed in ascending element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SourceResult {
    pub kind: SourceKind,
    pub a: Option<String>,
    #[serde(rename = "A")]
    pub subset: Vec<String>,
    pub members: Vec<String>,
}

impl SourceResult {
    /// Packages a computed source set with its inputs.
    pub fn new(
        ring: &FiniteRing,
        kind: SourceKind,
        a: Option<usize>,
        subset: &Subset,
        members: &Subset,
    ) -> SourceResult {
        SourceResult {
            kind,
            a: a.map(|x| ring.label(x).to_string()),
            subset: subset.label_vec(ring),
            members: members.label_vec(ring),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn whole(r: &FiniteRing) -> Subset {
        Subset::whole(r)
    }

    #[test]
    fn s_set_examples_in_z6() {
        let r = FiniteRing::zn(6).unwrap();
        let a_set = whole(&r);
        let s2 = s_set(&r, 2, &a_set).unwrap();
        assert_eq!(s2.format_with(&r), "{0, 3}", "x = 1 forces 2b = 0, so b is 0 or 3");
        let s3 = s_set(&r, 3, &a_set).unwrap();
        assert_eq!(s3.format_with(&r), "{0, 2, 4}");
        let s0 = s_set(&r, 0, &a_set).unwrap();
        assert_eq!(s0.len(), 6, "a = 0 annihilates everything");
    }

    #[test]
    fn both_primeness_routes_agree_on_a_spread_of_rings() {
        let z2 = FiniteRing::zn(2).unwrap();
        let rings = vec![
            FiniteRing::zn(1).unwrap(),
            FiniteRing::zn(6).unwrap(),
            FiniteRing::zn(8).unwrap(),
            FiniteRing::zero_mult(6).unwrap(),
            FiniteRing::scaled_zn(4, 2).unwrap(),
            FiniteRing::scaled_zn(9, 3).unwrap(),
            FiniteRing::subring_kzn(2, 16).unwrap(),
            FiniteRing::matrix_ring(2, &z2).unwrap(),
            FiniteRing::product(&z2, &FiniteRing::zn(3).unwrap()).unwrap(),
        ];
        for r in &rings {
            // Whole ring plus every singleton keeps the cross-check cheap
            // but varied; acceptance tests sweep much wider.
            let mut subsets = vec![whole(r)];
            for x in r.elements() {
                subsets.push(Subset::singleton(r, x).unwrap());
            }
            for a_set in &subsets {
                let via_intersection = primeness_source(r, a_set).unwrap();
                let via_scan = primeness_source_direct(r, a_set).unwrap();
                assert_eq!(
                    via_intersection,
                    via_scan,
                    "routes disagree on {} with A = {}",
                    r.descriptor(),
                    a_set.format_with(r)
                );
            }
        }
    }

    #[test]
    fn primeness_source_of_2z16_is_the_multiples_of_four() {
        let r = FiniteRing::subring_kzn(2, 16).unwrap();
        let p = primeness_source(&r, &whole(&r)).unwrap();
        assert_eq!(p.format_with(&r), "{0, 4, 8, 12}");
        let p_direct = primeness_source_direct(&r, &whole(&r)).unwrap();
        assert_eq!(p_direct.format_with(&r), "{0, 4, 8, 12}");
    }

    #[test]
    fn primeness_source_of_zn_is_trivial() {
        for n in 1..=12 {
            let r = FiniteRing::zn(n).unwrap();
            let p = primeness_source(&r, &whole(&r)).unwrap();
            assert_eq!(
                p.iter().collect::<Vec<_>>(),
                vec![0],
                "Z({n}) should be trivially sourced"
            );
        }
    }

    #[test]
    fn primeness_source_of_zero_mult_is_everything() {
        let r = FiniteRing::zero_mult(8).unwrap();
        let p = primeness_source(&r, &whole(&r)).unwrap();
        assert_eq!(p.len(), 8);
    }

    #[test]
    fn primeness_source_on_a_singleton() {
        let r = FiniteRing::zn(6).unwrap();
        let three = Subset::singleton(&r, 3).unwrap();
        let p = primeness_source(&r, &three).unwrap();
        assert_eq!(p.format_with(&r), "{0, 2, 4}");
    }

    #[test]
    fn semiprimeness_source_examples() {
        let z4 = FiniteRing::zn(4).unwrap();
        let s = semiprimeness_source(&z4, &whole(&z4)).unwrap();
        assert_eq!(s.format_with(&z4), "{0, 2}");
        let sz = FiniteRing::scaled_zn(4, 2).unwrap();
        let s = semiprimeness_source(&sz, &whole(&sz)).unwrap();
        assert_eq!(
            s.format_with(&sz),
            "{0, 1, 2, 3}",
            "b x b picks up a factor e^2 = 4 = 0 mod 4, so every b qualifies"
        );
    }

    #[test]
    fn empty_subset_is_rejected_everywhere() {
        let r = FiniteRing::zn(6).unwrap();
        let empty = Subset::empty(&r);
        assert_eq!(s_set(&r, 1, &empty), Err(RingError::EmptySubset));
        assert_eq!(primeness_source(&r, &empty), Err(RingError::EmptySubset));
        assert_eq!(
            primeness_source_direct(&r, &empty),
            Err(RingError::EmptySubset)
        );
        assert_eq!(
            semiprimeness_source(&r, &empty),
            Err(RingError::EmptySubset)
        );
    }

    #[test]
    fn out_of_range_a_is_rejected() {
        let r = FiniteRing::zn(6).unwrap();
        assert_eq!(
            s_set(&r, 6, &whole(&r)),
            Err(RingError::ElementOutOfRange { index: 6, order: 6 })
        );
    }

    #[test]
    fn prime_ring_checks_and_witnesses() {
        let z5 = FiniteRing::zn(5).unwrap();
        assert!(is_prime_ring(&z5));
        assert_eq!(prime_ring_witness(&z5), None);

        let z6 = FiniteRing::zn(6).unwrap();
        assert!(!is_prime_ring(&z6));
        assert_eq!(
            prime_ring_witness(&z6),
            Some((2, 3)),
            "2 r 3 = 6r = 0 mod 6; (2, 3) is the first such pair in scan order"
        );

        let m = FiniteRing::matrix_ring(2, &FiniteRing::zn(2).unwrap()).unwrap();
        assert!(is_prime_ring(&m), "full matrix rings over fields are prime");
    }

    #[test]
    fn semiprime_ring_checks_and_witnesses() {
        let z6 = FiniteRing::zn(6).unwrap();
        assert!(is_semiprime_ring(&z6), "6 is squarefree");
        let z4 = FiniteRing::zn(4).unwrap();
        assert_eq!(semiprime_ring_witness(&z4), Some(2), "2 r 2 = 4r = 0 mod 4");
        assert!(!is_semiprime_ring(&z4));
    }

    #[test]
    fn the_one_element_ring_is_vacuously_prime() {
        let r = FiniteRing::zn(1).unwrap();
        assert!(is_prime_ring(&r));
        assert!(is_semiprime_ring(&r));
    }

    #[test]
    fn source_result_serializes_with_labels() {
        let r = FiniteRing::subring_kzn(2, 16).unwrap();
        let a_set = whole(&r);
        let p = primeness_source(&r, &a_set).unwrap();
        let result = SourceResult::new(&r, SourceKind::P, None, &a_set, &p);
        let json = serde_json::to_value(&result).unwrap();
        assert_eq!(json["kind"], "p");
        assert_eq!(json["a"], serde_json::Value::Null);
        assert_eq!(json["members"][1], "4");
        assert_eq!(json["A"].as_array().unwrap().len(), 8);
    }
}
