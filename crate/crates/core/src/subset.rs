//! Subsets of a ring's element set, stored as bitsets.
//!
//! A [`Subset`] is tied to a ring only structurally, through the order it
//! was created for; mixing subsets across rings of different orders is a
//! programming error and panics. Within one order, subsets are plain values
//! with set semantics, ordered by `(cardinality, lexicographic member list)`
//! so that enumerations come out in a stable, human-predictable order.

use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    order: usize,
    bits: Vec<u64>,
}

impl Subset {
    /// The empty subset of a ring.
    pub fn empty(ring: &FiniteRing) -> Subset {
        Subset::empty_of_order(ring.order())
    }

    pub(crate) fn empty_of_order(order: usize) -> Subset {
        Subset {
            order,
            bits: vec![0u64; order.div_ceil(64)],
        }
    }

    /// The whole element set of a ring.
    pub fn whole(ring: &FiniteRing) -> Subset {
        let mut s = Subset::empty(ring);
        for x in ring.elements() {
            s.insert(x);
        }
        s
    }

    /// The singleton `{x}`.
    pub fn singleton(ring: &FiniteRing, x: usize) -> Result<Subset, crate::error::RingError> {
        ring.check_element(x)?;
        let mut s = Subset::empty(ring);
        s.insert(x);
        Ok(s)
    }

    /// Builds a subset from element indices, rejecting out-of-range values.
    pub fn from_indices<I>(ring: &FiniteRing, indices: I) -> Result<Subset, crate::error::RingError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Subset::empty(ring);
        for x in indices {
            ring.check_element(x)?;
            s.insert(x);
        }
        Ok(s)
    }

    /// Order of the ring this subset belongs to.
    pub fn ring_order(&self) -> usize {
        self.order
    }

    /// Inserts an element index. Panics if out of range (use
    /// [`Subset::from_indices`] for checked construction).
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.order, "element {x} out of range for order {}", self.order);
        self.bits[x / 64] |= 1u64 << (x % 64);
    }

    /// Removes an element index if present.
    pub fn remove(&mut self, x: usize) {
        assert!(x < self.order, "element {x} out of range for order {}", self.order);
        self.bits[x / 64] &= !(1u64 << (x % 64));
    }

    /// Membership test.
    pub fn contains(&self, x: usize) -> bool {
        x < self.order && self.bits[x / 64] >> (x % 64) & 1 == 1
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&x| self.contains(x))
    }

    /// `self ∪ other`. Panics on a ring-order mismatch.
    pub fn union(&self, other: &Subset) -> Subset {
        self.check_same_order(other);
        Subset {
            order: self.order,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// `self ∩ other`. Panics on a ring-order mismatch.
    pub fn intersect(&self, other: &Subset) -> Subset {
        self.check_same_order(other);
        Subset {
            order: self.order,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// True when every member of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.check_same_order(other);
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0)
    }

    /// Renders the subset with the ring's element labels: `{0, 2, 4}`.
    pub fn format_with(&self, ring: &FiniteRing) -> String {
        assert_eq!(
            self.order,
            ring.order(),
            "subset of order {} formatted against ring of order {}",
            self.order,
            ring.order()
        );
        let labels: Vec<&str> = self.iter().map(|x| ring.label(x)).collect();
        format!("{{{}}}", labels.join(", "))
    }

    /// Member labels in ascending element order.
    pub fn label_vec(&self, ring: &FiniteRing) -> Vec<String> {
        self.iter().map(|x| ring.label(x).to_string()).collect()
    }

    fn check_same_order(&self, other: &Subset) {
        assert_eq!(
            self.order, other.order,
            "subsets belong to rings of different orders"
        );
    }
}

/// Subsets sort by cardinality first, then lexicographically by their
/// ascending member lists, giving deterministic enumeration orders.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.order.cmp(&other.order))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn z6() -> FiniteRing {
        FiniteRing::zn(6).unwrap()
    }

    #[test]
    fn membership_and_len() {
        let r = z6();
        let s = Subset::from_indices(&r, [0, 2, 4]).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(3));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 4]);
    }

    #[test]
    fn from_indices_rejects_out_of_range() {
        let r = z6();
        assert!(Subset::from_indices(&r, [0, 7]).is_err());
    }

    #[test]
    fn set_algebra() {
        let r = z6();
        let a = Subset::from_indices(&r, [0, 2, 4]).unwrap();
        let b = Subset::from_indices(&r, [0, 3]).unwrap();
        assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), vec![0, 2, 3, 4]);
        assert_eq!(a.intersect(&b).iter().collect::<Vec<_>>(), vec![0]);
        assert!(Subset::from_indices(&r, [2]).unwrap().is_subset_of(&a));
        assert!(!b.is_subset_of(&a));
        assert!(a.is_subset_of(&Subset::whole(&r)));
    }

    #[test]
    fn ordering_is_size_then_lex() {
        let r = z6();
        let mut sets = [
            Subset::from_indices(&r, [0, 3]).unwrap(),
            Subset::from_indices(&r, [5]).unwrap(),
            Subset::from_indices(&r, [0, 2, 4]).unwrap(),
            Subset::from_indices(&r, [0, 2]).unwrap(),
            Subset::empty(&r),
        ];
        sets.sort();
        let rendered: Vec<String> = sets.iter().map(|s| s.format_with(&r)).collect();
        assert_eq!(rendered, vec!["{}", "{5}", "{0, 2}", "{0, 3}", "{0, 2, 4}"]);
    }

    #[test]
    fn format_uses_ring_labels() {
        let r = FiniteRing::subring_kzn(2, 16).unwrap();
        let s = Subset::from_indices(&r, [0, 2, 4, 6]).unwrap();
        assert_eq!(s.format_with(&r), "{0, 4, 8, 12}");
    }

    #[test]
    fn whole_and_empty() {
        let r = z6();
        assert_eq!(Subset::whole(&r).len(), 6);
        assert!(Subset::empty(&r).is_empty());
        assert!(!Subset::whole(&r).is_empty());
    }

    #[test]
    #[should_panic(expected = "different orders")]
    fn cross_ring_union_panics() {
        let a = Subset::whole(&z6());
        let b = Subset::whole(&FiniteRing::zn(4).unwrap());
        let _ = a.union(&b);
    }
}
