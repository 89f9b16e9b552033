//! Element-level structure and ring homomorphisms.

use serde::Serialize;

use crate::error::{HomViolation, RingError};
use crate::ring::FiniteRing;
use crate::subset::Subset;

/// Everything the crate knows about a single element.
///
/// Zero-divisor flags follow the one-sided convention: `a` is a left zero
/// divisor when `a b = 0` for some nonzero `b` (and symmetrically on the
/// right); 0 itself is never counted as a zero divisor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementProfile {
    /// Element index in its ring.
    pub element: usize,
    /// Display label of the element.
    pub label: String,
    /// `x * x == x`.
    pub idempotent: bool,
    /// Least `k >= 1` with `x^k = 0`, if any (`0` itself has index 1).
    pub nilpotency_index: Option<usize>,
    pub left_zero_divisor: bool,
    pub right_zero_divisor: bool,
    /// Has a two-sided multiplicative inverse (requires the ring to have an
    /// identity).
    pub unit: bool,
    /// Commutes with every element.
    pub central: bool,
}

/// Computes the full profile of element `x`. Panics if `x` is out of range.
pub fn classify_element(ring: &FiniteRing, x: usize) -> ElementProfile {
    let zero = ring.zero();
    let n = ring.order();
    assert!(x < n, "element {x} out of range for order {n}");

    let idempotent = ring.mul(x, x) == x;

    // Powers of x cycle within n steps; search up to x^(n+1) is enough to
    // decide nilpotency in any ring of order n.
    let nilpotency_index = {
        let mut power = x;
        let mut index = None;
        for k in 1..=n + 1 {
            if power == zero {
                index = Some(k);
                break;
            }
            power = ring.mul(power, x);
        }
        index
    };

    let left_zero_divisor =
        x != zero && ring.elements().skip(1).any(|b| ring.mul(x, b) == zero);
    let right_zero_divisor =
        x != zero && ring.elements().skip(1).any(|b| ring.mul(b, x) == zero);

    let unit = match ring.one() {
        Some(e) => ring
            .elements()
            .any(|y| ring.mul(x, y) == e && ring.mul(y, x) == e),
        None => false,
    };

    let central = ring.elements().all(|y| ring.mul(x, y) == ring.mul(y, x));

    ElementProfile {
        element: x,
        label: ring.label(x).to_string(),
        idempotent,
        nilpotency_index,
        left_zero_divisor,
        right_zero_divisor,
        unit,
        central,
    }
}

/// True when every element of the ring is idempotent (e.g. Boolean rings).
pub fn all_idempotent(ring: &FiniteRing) -> bool {
    ring.elements().all(|x| ring.mul(x, x) == x)
}

/// A map between two finite rings, with explicit validation state.
///
/// A freshly constructed hom has only passed shape checks; call
/// [`RingHom::validate`] to verify additivity and multiplicativity
/// exhaustively. Image and push-forward operations insist on a validated
/// hom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    source: FiniteRing,
    target: FiniteRing,
    map: Vec<u32>,
    validated: bool,
    injective: bool,
}

impl RingHom {
    /// Wraps a raw element map after shape checks (length equals the source
    /// order, every image lies in the target).
    pub fn new(
        source: FiniteRing,
        target: FiniteRing,
        map: Vec<usize>,
    ) -> Result<RingHom, RingError> {
        if map.len() != source.order() {
            return Err(RingError::MalformedHom(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.order()) {
            return Err(RingError::MalformedHom(format!(
                "image {bad} out of range for a target of order {}",
                target.order()
            )));
        }
        Ok(RingHom {
            source,
            target,
            map: map.into_iter().map(|v| v as u32).collect(),
            validated: false,
            injective: false,
        })
    }

    /// The identity map on a ring (still needs [`RingHom::validate`] like
    /// any other hom; it cannot fail).
    pub fn identity(ring: &FiniteRing) -> RingHom {
        RingHom {
            source: ring.clone(),
            target: ring.clone(),
            map: (0..ring.order() as u32).collect(),
            validated: false,
            injective: false,
        }
    }

    /// The inclusion of a subring `A` (realized as a standalone ring via
    /// [`FiniteRing::subring_as_ring`]) into its ambient ring.
    pub fn inclusion(ambient: &FiniteRing, subring: &Subset) -> Result<RingHom, RingError> {
        let standalone = ambient.subring_as_ring(subring)?;
        let map: Vec<usize> = subring.iter().collect();
        RingHom::new(standalone, ambient.clone(), map)
    }

    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn target(&self) -> &FiniteRing {
        &self.target
    }

    /// Applies the map to a source element.
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// True when the map is injective. Meaningful only after validation.
    pub fn is_injective(&self) -> bool {
        self.injective
    }

    /// Exhaustively checks `f(0) = 0`, `f(x + y) = f(x) + f(y)`, and
    /// `f(x y) = f(x) f(y)`; returns the hom marked validated, or the first
    /// violation with its witness pair.
    pub fn validate(mut self) -> Result<RingHom, RingError> {
        if self.apply(self.source.zero()) != self.target.zero() {
            return Err(RingError::HomViolation {
                violation: HomViolation::Zero,
                x: self.source.zero(),
                y: self.source.zero(),
            });
        }
        let n = self.source.order();
        for x in 0..n {
            for y in 0..n {
                if self.apply(self.source.add(x, y))
                    != self.target.add(self.apply(x), self.apply(y))
                {
                    return Err(RingError::HomViolation {
                        violation: HomViolation::Additive,
                        x,
                        y,
                    });
                }
                if self.apply(self.source.mul(x, y))
                    != self.target.mul(self.apply(x), self.apply(y))
                {
                    return Err(RingError::HomViolation {
                        violation: HomViolation::Multiplicative,
                        x,
                        y,
                    });
                }
            }
        }
        let mut seen = vec![false; self.target.order()];
        let mut injective = true;
        for &v in &self.map {
            if seen[v as usize] {
                injective = false;
                break;
            }
            seen[v as usize] = true;
        }
        self.validated = true;
        self.injective = injective;
        Ok(self)
    }

    /// The image `f(A)` of a subset of the source. Requires validation.
    pub fn push_forward(&self, subset: &Subset) -> Result<Subset, RingError> {
        if !self.validated {
            return Err(RingError::HomNotValidated);
        }
        assert_eq!(
            subset.ring_order(),
            self.source.order(),
            "subset belongs to a ring of different order"
        );
        let mut out = Subset::empty(&self.target);
        for x in subset.iter() {
            out.insert(self.apply(x));
        }
        Ok(out)
    }

    /// The image of the whole source, as a subset of the target.
    pub fn image_subset(&self) -> Result<Subset, RingError> {
        self.push_forward(&Subset::whole(&self.source))
    }

    /// The image `f(R)` realized as a standalone ring (the image of a hom is
    /// always a subring of the target), together with the subset it occupies
    /// in the target.
    pub fn image_subring(&self) -> Result<(Subset, FiniteRing), RingError> {
        let image = self.image_subset()?;
        let ring = self.target.subring_as_ring(&image)?;
        Ok((image, ring))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_elements_of_z6() {
        let r = FiniteRing::zn(6).unwrap();
        let p3 = classify_element(&r, 3);
        assert!(p3.idempotent, "3 * 3 = 9 = 3 mod 6");
        assert_eq!(p3.nilpotency_index, None);
        assert!(p3.left_zero_divisor && p3.right_zero_divisor, "3 * 2 = 0");
        assert!(!p3.unit);
        assert!(p3.central);

        let p5 = classify_element(&r, 5);
        assert!(p5.unit, "5 * 5 = 25 = 1 mod 6");
        assert!(!p5.left_zero_divisor);

        let p0 = classify_element(&r, 0);
        assert_eq!(p0.nilpotency_index, Some(1), "0^1 = 0 by convention");
        assert!(!p0.left_zero_divisor, "0 is not counted as a zero divisor");
        assert!(p0.idempotent);
    }

    #[test]
    fn nilpotency_indices_in_z8() {
        let r = FiniteRing::zn(8).unwrap();
        assert_eq!(classify_element(&r, 2).nilpotency_index, Some(3), "2^3 = 8");
        assert_eq!(classify_element(&r, 4).nilpotency_index, Some(2));
        assert_eq!(classify_element(&r, 6).nilpotency_index, Some(3), "6^3 = 216 = 0 mod 8");
        assert_eq!(classify_element(&r, 3).nilpotency_index, None);
    }

    #[test]
    fn zero_mult_ring_elements_are_all_nilpotent_of_index_two() {
        let r = FiniteRing::zero_mult(5).unwrap();
        for x in 1..5 {
            let p = classify_element(&r, x);
            assert_eq!(p.nilpotency_index, Some(2));
            assert!(p.left_zero_divisor && p.right_zero_divisor);
            assert!(!p.unit, "no identity, so no units");
        }
    }

    #[test]
    fn one_sided_zero_divisors_differ_in_matrix_rings() {
        let m = FiniteRing::matrix_ring(2, &FiniteRing::zn(2).unwrap()).unwrap();
        // Over a field every singular nonzero matrix is a zero divisor on
        // both sides, and non-central elements exist.
        let e01 = 2; // [[0,1],[0,0]]
        let p = classify_element(&m, e01);
        assert!(p.left_zero_divisor && p.right_zero_divisor);
        assert_eq!(p.nilpotency_index, Some(2));
        assert!(!p.central);
        let identity = classify_element(&m, m.one().unwrap());
        assert!(identity.unit && identity.central && identity.idempotent);
    }

    #[test]
    fn all_idempotent_detects_boolean_rings() {
        let z2 = FiniteRing::zn(2).unwrap();
        assert!(all_idempotent(&z2));
        let b4 = FiniteRing::product(&z2, &z2).unwrap();
        assert!(all_idempotent(&b4));
        assert!(!all_idempotent(&FiniteRing::zn(4).unwrap()));
    }

    #[test]
    fn identity_hom_validates_and_is_injective() {
        let r = FiniteRing::zn(6).unwrap();
        let h = RingHom::identity(&r).validate().unwrap();
        assert!(h.is_validated());
        assert!(h.is_injective());
        assert_eq!(h.apply(4), 4);
    }

    #[test]
    fn reduction_mod_2_is_a_hom_from_z4() {
        let z4 = FiniteRing::zn(4).unwrap();
        let z2 = FiniteRing::zn(2).unwrap();
        let h = RingHom::new(z4.clone(), z2, vec![0, 1, 0, 1])
            .unwrap()
            .validate()
            .unwrap();
        assert!(!h.is_injective());
        let image = h.image_subset().unwrap();
        assert_eq!(image.len(), 2);
    }

    #[test]
    fn non_hom_is_rejected_with_a_witness() {
        let z4 = FiniteRing::zn(4).unwrap();
        let z2 = FiniteRing::zn(2).unwrap();
        // x mod 2 is additive, but swapping 1 -> 1, 3 -> 0 breaks it.
        let err = RingHom::new(z4, z2, vec![0, 1, 0, 0])
            .unwrap()
            .validate()
            .unwrap_err();
        match err {
            RingError::HomViolation { violation, .. } => {
                assert_eq!(violation, HomViolation::Additive)
            }
            other => panic!("expected hom violation, got {other}"),
        }
    }

    #[test]
    fn doubling_map_into_z4_preserves_addition_but_not_multiplication() {
        let z2 = FiniteRing::zn(2).unwrap();
        let z4 = FiniteRing::zn(4).unwrap();
        let err = RingHom::new(z2, z4, vec![0, 2]).unwrap().validate().unwrap_err();
        match err {
            RingError::HomViolation { violation, x, y } => {
                assert_eq!(violation, HomViolation::Multiplicative);
                assert_eq!((x, y), (1, 1), "f(1*1) = 2 but f(1)f(1) = 4 = 0");
            }
            other => panic!("expected hom violation, got {other}"),
        }
    }

    #[test]
    fn unvalidated_hom_cannot_push_forward() {
        let r = FiniteRing::zn(4).unwrap();
        let h = RingHom::identity(&r);
        let s = Subset::whole(&r);
        assert_eq!(h.push_forward(&s), Err(RingError::HomNotValidated));
        assert_eq!(h.image_subring().err(), Some(RingError::HomNotValidated));
    }

    #[test]
    fn inclusion_hom_embeds_the_subring() {
        let z4 = FiniteRing::zn(4).unwrap();
        let evens = Subset::from_indices(&z4, [0, 2]).unwrap();
        let h = RingHom::inclusion(&z4, &evens).unwrap().validate().unwrap();
        assert!(h.is_injective());
        assert_eq!(h.source().order(), 2);
        assert_eq!(h.apply(1), 2, "the second subring element is 2 in Z(4)");
        let (image, image_ring) = h.image_subring().unwrap();
        assert_eq!(image.format_with(&z4), "{0, 2}");
        assert_eq!(image_ring.order(), 2);
    }

    #[test]
    fn quotient_construction_returns_the_projection() {
        let z4 = FiniteRing::zn(4).unwrap();
        let evens = Subset::from_indices(&z4, [0, 2]).unwrap();
        let (q, pi) = z4.quotient(&evens).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.one(), Some(1));
        assert!(pi.is_validated());
        assert_eq!(pi.apply(3), 1, "3 + {{0, 2}} = {{1, 3}}, represented by 1");
        assert!(!pi.is_injective());
        // Quotient by the whole ring collapses to the zero ring.
        let whole = Subset::whole(&z4);
        let (zero_ring, _) = z4.quotient(&whole).unwrap();
        assert_eq!(zero_ring.order(), 1);
        // Quotient by {0} is the ring itself.
        let zero_ideal = Subset::singleton(&z4, 0).unwrap();
        let (same, id) = z4.quotient(&zero_ideal).unwrap();
        assert_eq!(same.order(), 4);
        assert!(id.is_injective());
    }

    #[test]
    fn quotient_rejects_non_ideals() {
        let z4 = FiniteRing::zn(4).unwrap();
        let s = Subset::from_indices(&z4, [0, 1]).unwrap();
        assert!(matches!(z4.quotient(&s), Err(RingError::NotAnIdeal(_))));
    }

    #[test]
    fn subring_as_ring_rejects_non_subrings() {
        let z4 = FiniteRing::zn(4).unwrap();
        let s = Subset::from_indices(&z4, [0, 3]).unwrap();
        assert!(matches!(
            z4.subring_as_ring(&s),
            Err(RingError::NotASubring(_))
        ));
    }

    #[test]
    fn hom_shape_errors() {
        let z4 = FiniteRing::zn(4).unwrap();
        let z2 = FiniteRing::zn(2).unwrap();
        assert!(matches!(
            RingHom::new(z4.clone(), z2.clone(), vec![0, 1]),
            Err(RingError::MalformedHom(_))
        ));
        assert!(matches!(
            RingHom::new(z4, z2, vec![0, 1, 0, 9]),
            Err(RingError::MalformedHom(_))
        ));
    }
}
