//! Subrings, ideals, and the prime-ideal layer.
//!
//! All predicates are exhaustive scans over the Cayley tables. In a finite
//! ring an additive subgroup is exactly a nonempty subset closed under
//! subtraction, which is what the checks below use.

use crate::error::RingError;
use crate::ring::FiniteRing;
use crate::subset::Subset;

fn check_subset(ring: &FiniteRing, s: &Subset) -> Result<(), RingError> {
    assert_eq!(
        s.ring_order(),
        ring.order(),
        "subset belongs to a ring of different order"
    );
    if s.is_empty() {
        return Err(RingError::EmptySubset);
    }
    Ok(())
}

fn is_additive_subgroup(ring: &FiniteRing, s: &Subset) -> bool {
    s.contains(ring.zero())
        && s.iter()
            .all(|x| s.iter().all(|y| s.contains(ring.sub(x, y))))
}

/// True when the nonempty subset is closed under subtraction and
/// multiplication (a non-unital subring).
pub fn is_subring(ring: &FiniteRing, s: &Subset) -> Result<bool, RingError> {
    check_subset(ring, s)?;
    Ok(is_additive_subgroup(ring, s)
        && s.iter()
            .all(|x| s.iter().all(|y| s.contains(ring.mul(x, y)))))
}

/// True when the subset is an additive subgroup with `I * R ⊆ I`.
pub fn is_right_ideal(ring: &FiniteRing, s: &Subset) -> Result<bool, RingError> {
    check_subset(ring, s)?;
    Ok(is_additive_subgroup(ring, s)
        && s.iter()
            .all(|x| ring.elements().all(|r| s.contains(ring.mul(x, r)))))
}

/// True when the subset is an additive subgroup with `R * I ⊆ I`.
pub fn is_left_ideal(ring: &FiniteRing, s: &Subset) -> Result<bool, RingError> {
    check_subset(ring, s)?;
    Ok(is_additive_subgroup(ring, s)
        && s.iter()
            .all(|x| ring.elements().all(|r| s.contains(ring.mul(r, x)))))
}

/// True when the subset is a two-sided ideal.
pub fn is_ideal(ring: &FiniteRing, s: &Subset) -> Result<bool, RingError> {
    Ok(is_right_ideal(ring, s)? && is_left_ideal(ring, s)?)
}

/// The two-sided ideal generated by a set of elements.
///
/// Starts from the generators (plus 0) and closes under addition and
/// two-sided absorption until a fixpoint; for the empty generating set this
/// returns `{0}`.
pub fn ideal_generated_by(ring: &FiniteRing, generators: &Subset) -> Subset {
    assert_eq!(
        generators.ring_order(),
        ring.order(),
        "generators belong to a ring of different order"
    );
    let mut current = generators.clone();
    current.insert(ring.zero());
    loop {
        let mut next = current.clone();
        for x in current.iter() {
            for y in current.iter() {
                next.insert(ring.add(x, y));
            }
            next.insert(ring.neg(x));
            for r in ring.elements() {
                next.insert(ring.mul(r, x));
                next.insert(ring.mul(x, r));
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Every two-sided ideal of the ring, sorted by size and then
/// lexicographically by member list. `{0}` comes first and the whole ring
/// last.
///
/// The enumeration is exact: every ideal is a sum of principal ideals, so
/// closing the principal ideals under pairwise ideal sum reaches all of
/// them.
pub fn enumerate_ideals(ring: &FiniteRing) -> Vec<Subset> {
    let mut found: Vec<Subset> = Vec::new();
    let mut queue: Vec<Subset> = Vec::new();
    for x in ring.elements() {
        let principal = ideal_generated_by(
            ring,
            &Subset::singleton(ring, x).expect("element index in range"),
        );
        if !found.contains(&principal) {
            found.push(principal.clone());
            queue.push(principal);
        }
    }
    // The sum of two ideals is the additive closure of their union; close
    // the collection under pairwise sums until nothing new appears.
    while let Some(ideal) = queue.pop() {
        let snapshot = found.clone();
        for other in &snapshot {
            let sum = additive_closure(ring, &ideal.union(other));
            if !found.contains(&sum) {
                found.push(sum.clone());
                queue.push(sum);
            }
        }
    }
    found.sort();
    found
}

/// Additive (subgroup) closure of a subset: closes under addition and
/// negation, always including 0.
fn additive_closure(ring: &FiniteRing, s: &Subset) -> Subset {
    let mut current = s.clone();
    current.insert(ring.zero());
    loop {
        let mut next = current.clone();
        for x in current.iter() {
            next.insert(ring.neg(x));
            for y in current.iter() {
                next.insert(ring.add(x, y));
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// True when `p` is a prime ideal: a proper two-sided ideal such that
/// `a R b ⊆ p` forces `a ∈ p` or `b ∈ p`.
///
/// Errors with [`RingError::NotAnIdeal`] if `p` is not an ideal at all.
pub fn is_prime_ideal(ring: &FiniteRing, p: &Subset) -> Result<bool, RingError> {
    if !is_ideal(ring, p)? {
        return Err(RingError::NotAnIdeal(p.format_with(ring)));
    }
    if p.len() == ring.order() {
        return Ok(false); // prime ideals are proper
    }
    for a in ring.elements().filter(|&a| !p.contains(a)) {
        for b in ring.elements().filter(|&b| !p.contains(b)) {
            let swallowed = ring
                .elements()
                .all(|r| p.contains(ring.mul(ring.mul(a, r), b)));
            if swallowed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All prime ideals, in the order produced by [`enumerate_ideals`].
pub fn enumerate_prime_ideals(ring: &FiniteRing) -> Vec<Subset> {
    enumerate_ideals(ring)
        .into_iter()
        .filter(|p| is_prime_ideal(ring, p).expect("enumerated subsets are ideals"))
        .collect()
}

/// The prime radical: the intersection of all prime ideals, or the whole
/// ring when there are none (the empty-intersection convention).
pub fn prime_radical(ring: &FiniteRing) -> Subset {
    let primes = enumerate_prime_ideals(ring);
    let mut acc = Subset::whole(ring);
    for p in &primes {
        acc = acc.intersect(p);
    }
    acc
}
