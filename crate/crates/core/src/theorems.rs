//! One executable verifier per source-of-primeness result.
//!
//! Each verifier checks its statement exhaustively on a concrete ring and
//! returns a [`TheoremEntry`]: hypotheses that do not hold produce an
//! explicit skip (never a silent pass), satisfied hypotheses with a holding
//! conclusion produce a pass, and a violated conclusion produces a fail
//! with the first witness in ascending scan order. On valid rings every
//! fail branch is unreachable — the statements are theorems — so a fail
//! always means an implementation bug somewhere.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::RingError;
use crate::ideals::{
    enumerate_prime_ideals, ideal_generated_by, is_ideal, is_right_ideal, is_subring,
    prime_radical,
};
use crate::ring::FiniteRing;
use crate::source::{
    prime_ring_witness, primeness_source, s_set, semiprimeness_source,
};
use crate::structure::{all_idempotent, classify_element, RingHom};
use crate::subset::Subset;

/// Stable identifiers for the verifiable results, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Product,
    SquareZero,
    PrimeImpliesTrivial,
    Monotonicity,
    SubringContainment,
    SemiprimenessContainment,
    SSetIdealProps,
    PIdeal,
    PrimeIdealContainment,
    ElementCorollaries,
    HomPushforward,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Product,
        TheoremId::SquareZero,
        TheoremId::PrimeImpliesTrivial,
        TheoremId::Monotonicity,
        TheoremId::SubringContainment,
        TheoremId::SemiprimenessContainment,
        TheoremId::SSetIdealProps,
        TheoremId::PIdeal,
        TheoremId::PrimeIdealContainment,
        TheoremId::ElementCorollaries,
        TheoremId::HomPushforward,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Product => "product",
            TheoremId::SquareZero => "square_zero",
            TheoremId::PrimeImpliesTrivial => "prime_implies_trivial",
            TheoremId::Monotonicity => "monotonicity",
            TheoremId::SubringContainment => "subring_containment",
            TheoremId::SemiprimenessContainment => "semiprimeness_containment",
            TheoremId::SSetIdealProps => "s_set_ideal_props",
            TheoremId::PIdeal => "p_ideal",
            TheoremId::PrimeIdealContainment => "prime_ideal_containment",
            TheoremId::ElementCorollaries => "element_corollaries",
            TheoremId::HomPushforward => "hom_pushforward",
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = TheoremId::ALL.iter().map(|id| id.as_str()).collect();
                format!("unknown theorem id {s:?} (expected one of: {})", known.join(", "))
            })
    }
}

/// pass / fail / skip, derived from the hypothesis and conclusion flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skip => "skip",
        }
    }
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one verifier on one instance.
///
/// `hypotheses_satisfied == false` means the check was vacuous on this
/// instance (reported as a skip). `conclusion_holds` may only be false when
/// the hypotheses were satisfied; such an entry fails its whole battery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremEntry {
    pub theorem: TheoremId,
    pub hypotheses_satisfied: bool,
    pub conclusion_holds: bool,
    /// On failure, the first offending elements in deterministic scan
    /// order, as `name=label` strings. Skips may carry informational
    /// witnesses (e.g. the non-primeness pair).
    pub witnesses: Vec<String>,
    pub notes: String,
}

impl TheoremEntry {
    pub(crate) fn pass(theorem: TheoremId, notes: String) -> TheoremEntry {
        TheoremEntry {
            theorem,
            hypotheses_satisfied: true,
            conclusion_holds: true,
            witnesses: Vec::new(),
            notes,
        }
    }

    pub(crate) fn fail(theorem: TheoremId, witnesses: Vec<String>, notes: String) -> TheoremEntry {
        TheoremEntry {
            theorem,
            hypotheses_satisfied: true,
            conclusion_holds: false,
            witnesses,
            notes,
        }
    }

    pub(crate) fn skip(theorem: TheoremId, notes: String) -> TheoremEntry {
        TheoremEntry {
            theorem,
            hypotheses_satisfied: false,
            conclusion_holds: true,
            witnesses: Vec::new(),
            notes,
        }
    }

    pub fn status(&self) -> CheckStatus {
        if !self.hypotheses_satisfied {
            CheckStatus::Skip
        } else if self.conclusion_holds {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

impl Serialize for TheoremEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("TheoremEntry", 4)?;
        state.serialize_field("theorem", self.theorem.as_str())?;
        state.serialize_field("status", self.status().as_str())?;
        state.serialize_field("witnesses", &self.witnesses)?;
        state.serialize_field("notes", &self.notes)?;
        state.end()
    }
}

// ----------------------------------------------------------------------
// Formatting helpers
// ----------------------------------------------------------------------

/// Renders a subset for notes, eliding large sets to a cardinality.
fn fmt_set(ring: &FiniteRing, s: &Subset) -> String {
    if s.len() <= 8 {
        s.format_with(ring)
    } else {
        format!("<{} elements>", s.len())
    }
}

/// First member of `sub` missing from `sup`.
fn first_excess(sub: &Subset, sup: &Subset) -> Option<usize> {
    sub.iter().find(|&x| !sup.contains(x))
}

/// First witness that `s` is not a right ideal: either a subtraction that
/// escapes or an absorption failure, described as witness strings.
fn right_ideal_violation(ring: &FiniteRing, s: &Subset) -> Option<Vec<String>> {
    if !s.contains(ring.zero()) {
        return Some(vec!["missing=0".to_string()]);
    }
    for x in s.iter() {
        for y in s.iter() {
            if !s.contains(ring.sub(x, y)) {
                return Some(vec![
                    format!("x={}", ring.label(x)),
                    format!("y={}", ring.label(y)),
                ]);
            }
        }
    }
    for x in s.iter() {
        for t in ring.elements() {
            if !s.contains(ring.mul(x, t)) {
                return Some(vec![
                    format!("x={}", ring.label(x)),
                    format!("r={}", ring.label(t)),
                ]);
            }
        }
    }
    None
}

/// Same, for the left-absorption side.
fn left_ideal_violation(ring: &FiniteRing, s: &Subset) -> Option<Vec<String>> {
    if !s.contains(ring.zero()) {
        return Some(vec!["missing=0".to_string()]);
    }
    for x in s.iter() {
        for y in s.iter() {
            if !s.contains(ring.sub(x, y)) {
                return Some(vec![
                    format!("x={}", ring.label(x)),
                    format!("y={}", ring.label(y)),
                ]);
            }
        }
    }
    for x in s.iter() {
        for t in ring.elements() {
            if !s.contains(ring.mul(t, x)) {
                return Some(vec![
                    format!("r={}", ring.label(t)),
                    format!("x={}", ring.label(x)),
                ]);
            }
        }
    }
    None
}

// ----------------------------------------------------------------------
// Verifiers
// ----------------------------------------------------------------------

/// Product theorem: `P_{r x s}(A x B) = P_r(A) x P_s(B)`.
///
/// Verified in the generalized two-ring form; the case `r = s` (the
/// statement's literal shape) is flagged in the notes.
pub fn verify_product_theorem(
    r: &FiniteRing,
    s: &FiniteRing,
    a: &Subset,
    b: &Subset,
) -> Result<TheoremEntry, RingError> {
    let product = FiniteRing::product(r, s)?;
    let m = s.order();
    let mut ab = Subset::empty(&product);
    for x in a.iter() {
        for y in b.iter() {
            ab.insert(x * m + y);
        }
    }
    let lhs = primeness_source(&product, &ab)?;
    let pa = primeness_source(r, a)?;
    let pb = primeness_source(s, b)?;
    let mut rhs = Subset::empty(&product);
    for x in pa.iter() {
        for y in pb.iter() {
            rhs.insert(x * m + y);
        }
    }

    let literal = if r.descriptor() == s.descriptor() {
        " (the statement's literal R x R shape)"
    } else {
        ""
    };
    let notes = format!(
        "R = {}, S = {}{literal}; |A| = {}, |B| = {}; P(A x B) has {} element(s), P(A) x P(B) has {}",
        r.descriptor(),
        s.descriptor(),
        a.len(),
        b.len(),
        lhs.len(),
        rhs.len(),
    );
    if lhs == rhs {
        Ok(TheoremEntry::pass(TheoremId::Product, notes))
    } else {
        let witness = first_excess(&lhs, &rhs)
            .or_else(|| first_excess(&rhs, &lhs))
            .expect("unequal sets differ somewhere");
        Ok(TheoremEntry::fail(
            TheoremId::Product,
            vec![format!("x={}", product.label(witness))],
            format!("{notes}; sides differ"),
        ))
    }
}

/// Square-zero theorem: in a commutative ring with identity,
/// `P_R ⊆ {x : x^2 = 0}`. Skipped when either hypothesis fails.
pub fn verify_square_zero(r: &FiniteRing) -> TheoremEntry {
    if r.one().is_none() {
        return TheoremEntry::skip(
            TheoremId::SquareZero,
            "skipped: ring has no identity".to_string(),
        );
    }
    if !r.is_commutative() {
        return TheoremEntry::skip(
            TheoremId::SquareZero,
            "skipped: ring is not commutative".to_string(),
        );
    }
    let whole = Subset::whole(r);
    let p = primeness_source(r, &whole).expect("whole ring is nonempty");
    let square_zero: Subset = {
        let mut s = Subset::empty(r);
        for x in r.elements() {
            if r.mul(x, x) == r.zero() {
                s.insert(x);
            }
        }
        s
    };
    let notes = format!(
        "P = {} contained in {{x : x^2 = 0}} = {}; under these hypotheses the identity lemma already forces P = {{0}}, so the containment is trivially true",
        fmt_set(r, &p),
        fmt_set(r, &square_zero),
    );
    match first_excess(&p, &square_zero) {
        None => TheoremEntry::pass(TheoremId::SquareZero, notes),
        Some(x) => TheoremEntry::fail(
            TheoremId::SquareZero,
            vec![format!("x={}", r.label(x))],
            notes,
        ),
    }
}

/// Primeness lemma: a prime ring has `P_R = {0}`. Skipped on non-prime
/// rings, where the skip records the witness pair and — when it applies —
/// the converse-failure control (`P = {0}` without primeness).
pub fn verify_prime_implies_trivial(r: &FiniteRing) -> TheoremEntry {
    let whole = Subset::whole(r);
    let p = primeness_source(r, &whole).expect("whole ring is nonempty");
    match prime_ring_witness(r) {
        None => {
            let notes = format!("ring is prime; P = {}", fmt_set(r, &p));
            if p.len() == 1 {
                TheoremEntry::pass(TheoremId::PrimeImpliesTrivial, notes)
            } else {
                let witness = p.iter().find(|&x| x != r.zero()).expect("len > 1");
                TheoremEntry::fail(
                    TheoremId::PrimeImpliesTrivial,
                    vec![format!("x={}", r.label(witness))],
                    notes,
                )
            }
        }
        Some((a, b)) => {
            let mut notes = format!(
                "skipped: ring is not prime ({} R {} = {{0}})",
                r.label(a),
                r.label(b)
            );
            if p.len() == 1 {
                notes.push_str(
                    "; converse-failure control: P = {0} even though the ring is not prime",
                );
            } else {
                notes.push_str(&format!("; P = {}", fmt_set(r, &p)));
            }
            let mut entry = TheoremEntry::skip(TheoremId::PrimeImpliesTrivial, notes);
            entry.witnesses = vec![format!("a={}", r.label(a)), format!("b={}", r.label(b))];
            entry
        }
    }
}

/// Monotonicity: `A ⊆ B` implies `P_R(B) ⊆ P_R(A)`.
pub fn verify_monotonicity(
    r: &FiniteRing,
    a: &Subset,
    b: &Subset,
) -> Result<TheoremEntry, RingError> {
    if a.is_empty() || b.is_empty() {
        return Err(RingError::EmptySubset);
    }
    if !a.is_subset_of(b) {
        return Err(RingError::InvalidParameter(
            "monotonicity requires A to be contained in B".into(),
        ));
    }
    let pa = primeness_source(r, a)?;
    let pb = primeness_source(r, b)?;
    let notes = format!(
        "A = {} ⊆ B = {}; P(B) = {} ⊆ P(A) = {}",
        fmt_set(r, a),
        fmt_set(r, b),
        fmt_set(r, &pb),
        fmt_set(r, &pa),
    );
    Ok(match first_excess(&pb, &pa) {
        None => TheoremEntry::pass(TheoremId::Monotonicity, notes),
        Some(x) => TheoremEntry::fail(
            TheoremId::Monotonicity,
            vec![format!("x={}", r.label(x))],
            notes,
        ),
    })
}

/// Subring containment: for a subring `A`, `A ∩ P_R(A) ⊆ P_A`, where `P_A`
/// is computed in `A` realized as a standalone ring.
pub fn verify_subring_containment(r: &FiniteRing, a: &Subset) -> Result<TheoremEntry, RingError> {
    if a.is_empty() {
        return Err(RingError::EmptySubset);
    }
    if !is_subring(r, a)? {
        return Ok(TheoremEntry::skip(
            TheoremId::SubringContainment,
            format!("skipped: A = {} is not a subring", fmt_set(r, a)),
        ));
    }
    let standalone = r.subring_as_ring(a)?;
    let members: Vec<usize> = a.iter().collect();
    let p_r_a = primeness_source(r, a)?;
    let intersection = a.intersect(&p_r_a);
    let p_standalone = primeness_source(&standalone, &Subset::whole(&standalone))?;

    let offender = intersection.iter().find(|&x| {
        let sub_index = members.binary_search(&x).expect("member of A");
        !p_standalone.contains(sub_index)
    });
    let notes = format!(
        "A = {}; A ∩ P_R(A) = {} ⊆ P_A = {}",
        fmt_set(r, a),
        fmt_set(r, &intersection),
        fmt_set(&standalone, &p_standalone),
    );
    Ok(match offender {
        None => TheoremEntry::pass(TheoremId::SubringContainment, notes),
        Some(x) => TheoremEntry::fail(
            TheoremId::SubringContainment,
            vec![format!("x={}", r.label(x))],
            notes,
        ),
    })
}

/// Semiprimeness containment: `P_R(A) ⊆ S_R(A)`.
pub fn verify_semiprimeness_containment(
    r: &FiniteRing,
    a: &Subset,
) -> Result<TheoremEntry, RingError> {
    let p = primeness_source(r, a)?;
    let s = semiprimeness_source(r, a)?;
    let notes = format!(
        "A = {}; P(A) = {} ⊆ S(A) = {}",
        fmt_set(r, a),
        fmt_set(r, &p),
        fmt_set(r, &s),
    );
    Ok(match first_excess(&p, &s) {
        None => TheoremEntry::pass(TheoremId::SemiprimenessContainment, notes),
        Some(x) => TheoremEntry::fail(
            TheoremId::SemiprimenessContainment,
            vec![format!("x={}", r.label(x))],
            notes,
        ),
    })
}

/// S-set ideal proposition: `S_R^a(I)` is a right ideal for any nonempty
/// `I` (item 1); when `I` is itself a right ideal, it is also a left ideal
/// (item 2) and hence two-sided (item 3).
pub fn verify_s_set_ideal_props(
    r: &FiniteRing,
    a: usize,
    i: &Subset,
) -> Result<TheoremEntry, RingError> {
    let s = s_set(r, a, i)?;
    let context = format!(
        "a = {}, I = {}; S_R^a(I) = {}",
        r.label(a),
        fmt_set(r, i),
        fmt_set(r, &s),
    );

    if let Some(witness) = right_ideal_violation(r, &s) {
        return Ok(TheoremEntry::fail(
            TheoremId::SSetIdealProps,
            witness,
            format!("{context}; item 1 fails: not a right ideal"),
        ));
    }
    if !is_right_ideal(r, i)? {
        return Ok(TheoremEntry::pass(
            TheoremId::SSetIdealProps,
            format!("{context}; item 1 holds (right ideal); items 2-3 not applicable: I is not a right ideal"),
        ));
    }
    if let Some(witness) = left_ideal_violation(r, &s) {
        return Ok(TheoremEntry::fail(
            TheoremId::SSetIdealProps,
            witness,
            format!("{context}; item 2 fails: not a left ideal although I is a right ideal"),
        ));
    }
    // Two-sidedness is items 1 + 2 together; re-assert it directly.
    if !is_ideal(r, &s)? {
        return Ok(TheoremEntry::fail(
            TheoremId::SSetIdealProps,
            vec![],
            format!("{context}; item 3 fails: not two-sided"),
        ));
    }
    Ok(TheoremEntry::pass(
        TheoremId::SSetIdealProps,
        format!("{context}; items 1-3 hold (two-sided ideal)"),
    ))
}

/// P-ideal lemma: for a right ideal `I`, `P_R(I)` is a two-sided ideal.
pub fn verify_p_ideal(r: &FiniteRing, i: &Subset) -> Result<TheoremEntry, RingError> {
    if i.is_empty() {
        return Err(RingError::EmptySubset);
    }
    if !is_right_ideal(r, i)? {
        return Ok(TheoremEntry::skip(
            TheoremId::PIdeal,
            format!("skipped: I = {} is not a right ideal", fmt_set(r, i)),
        ));
    }
    let p = primeness_source(r, i)?;
    let notes = format!("I = {}; P_R(I) = {}", fmt_set(r, i), fmt_set(r, &p));
    if let Some(witness) = right_ideal_violation(r, &p) {
        return Ok(TheoremEntry::fail(
            TheoremId::PIdeal,
            witness,
            format!("{notes}; not a right ideal"),
        ));
    }
    if let Some(witness) = left_ideal_violation(r, &p) {
        return Ok(TheoremEntry::fail(
            TheoremId::PIdeal,
            witness,
            format!("{notes}; not a left ideal"),
        ));
    }
    Ok(TheoremEntry::pass(
        TheoremId::PIdeal,
        format!("{notes}; two-sided ideal confirmed"),
    ))
}

/// Prime-ideal containment: `P_R` lies inside every prime ideal, hence
/// inside the prime radical (whole ring when no prime ideal exists).
pub fn verify_prime_ideal_containment(r: &FiniteRing) -> TheoremEntry {
    let whole = Subset::whole(r);
    let p = primeness_source(r, &whole).expect("whole ring is nonempty");
    let primes = enumerate_prime_ideals(r);
    for prime in &primes {
        if let Some(x) = first_excess(&p, prime) {
            return TheoremEntry::fail(
                TheoremId::PrimeIdealContainment,
                vec![format!("x={}", r.label(x))],
                format!(
                    "P = {} escapes the prime ideal {}",
                    fmt_set(r, &p),
                    fmt_set(r, prime)
                ),
            );
        }
    }
    let radical = prime_radical(r);
    if let Some(x) = first_excess(&p, &radical) {
        return TheoremEntry::fail(
            TheoremId::PrimeIdealContainment,
            vec![format!("x={}", r.label(x))],
            format!(
                "P = {} escapes the prime radical {}",
                fmt_set(r, &p),
                fmt_set(r, &radical)
            ),
        );
    }
    let notes = if primes.is_empty() {
        format!(
            "no prime ideals (containment vacuous); prime radical degenerates to the whole ring ⊇ P = {}",
            fmt_set(r, &p)
        )
    } else {
        format!(
            "P = {} contained in all {} prime ideals and in the radical {}",
            fmt_set(r, &p),
            primes.len(),
            fmt_set(r, &radical)
        )
    };
    TheoremEntry::pass(TheoremId::PrimeIdealContainment, notes)
}

/// Element corollaries on `P_R`: no nonzero idempotents, every member
/// nilpotent (sharpened: cube zero), every nonzero member a two-sided zero
/// divisor; plus the conditional lemmas (all-idempotent ⇒ trivial,
/// identity ⇒ trivial).
pub fn verify_element_corollaries(r: &FiniteRing) -> TheoremEntry {
    let whole = Subset::whole(r);
    let p = primeness_source(r, &whole).expect("whole ring is nonempty");
    let zero = r.zero();

    let mut nonzero_members = 0usize;
    for x in p.iter().filter(|&x| x != zero) {
        nonzero_members += 1;
        if r.mul(x, x) == x {
            return TheoremEntry::fail(
                TheoremId::ElementCorollaries,
                vec![format!("x={}", r.label(x))],
                "nonzero idempotent found in P".to_string(),
            );
        }
        if r.mul(r.mul(x, x), x) != zero {
            return TheoremEntry::fail(
                TheoremId::ElementCorollaries,
                vec![format!("x={}", r.label(x))],
                "member of P whose cube is nonzero".to_string(),
            );
        }
        let profile = classify_element(r, x);
        if !profile.left_zero_divisor || !profile.right_zero_divisor {
            return TheoremEntry::fail(
                TheoremId::ElementCorollaries,
                vec![format!("x={}", r.label(x))],
                "member of P that is not a two-sided zero divisor".to_string(),
            );
        }
    }

    let mut clauses = vec![format!(
        "{} nonzero member(s) of P = {}: cubes vanish, none idempotent, all two-sided zero divisors",
        nonzero_members,
        fmt_set(r, &p)
    )];
    if all_idempotent(r) {
        if p.len() != 1 {
            let witness = p.iter().find(|&x| x != zero).expect("len > 1");
            return TheoremEntry::fail(
                TheoremId::ElementCorollaries,
                vec![format!("x={}", r.label(witness))],
                "all elements idempotent but P is nontrivial".to_string(),
            );
        }
        clauses.push("all-idempotent lemma applies: P = {0}".to_string());
    } else {
        clauses.push("all-idempotent lemma vacuous (some element is not idempotent)".to_string());
    }
    if r.one().is_some() {
        if p.len() != 1 {
            let witness = p.iter().find(|&x| x != zero).expect("len > 1");
            return TheoremEntry::fail(
                TheoremId::ElementCorollaries,
                vec![format!("x={}", r.label(witness))],
                "ring has an identity but P is nontrivial".to_string(),
            );
        }
        clauses.push("identity lemma applies: P = {0}".to_string());
    } else {
        clauses.push("identity lemma vacuous (no identity)".to_string());
    }
    TheoremEntry::pass(TheoremId::ElementCorollaries, clauses.join("; "))
}

/// Hom push-forward: `f(P_R) ⊆ P_{f(R)}`, with equality when `f` is
/// injective. `P_{f(R)}` is computed in the image realized as a ring of its
/// own, not in the ambient target.
pub fn verify_hom_pushforward(h: &RingHom) -> Result<TheoremEntry, RingError> {
    if !h.is_validated() {
        return Err(RingError::HomNotValidated);
    }
    let source = h.source();
    let target = h.target();
    let p_source = primeness_source(source, &Subset::whole(source))?;
    let image_of_p = h.push_forward(&p_source)?;
    let (image, image_ring) = h.image_subring()?;
    let image_members: Vec<usize> = image.iter().collect();
    let p_image_standalone = primeness_source(&image_ring, &Subset::whole(&image_ring))?;
    // Pull the standalone result back into target coordinates for comparison.
    let mut p_image = Subset::empty_of_order(target.order());
    for (sub_index, &target_index) in image_members.iter().enumerate() {
        if p_image_standalone.contains(sub_index) {
            p_image.insert(target_index);
        }
    }

    let injective = h.is_injective();
    let notes = format!(
        "f: {} -> {} ({}); f(P_R) = {}; P_f(R) = {}",
        source.descriptor(),
        target.descriptor(),
        if injective { "injective" } else { "not injective" },
        fmt_set(target, &image_of_p),
        fmt_set(target, &p_image),
    );
    if let Some(x) = first_excess(&image_of_p, &p_image) {
        return Ok(TheoremEntry::fail(
            TheoremId::HomPushforward,
            vec![format!("x={}", target.label(x))],
            format!("{notes}; containment fails"),
        ));
    }
    if injective {
        if let Some(x) = first_excess(&p_image, &image_of_p) {
            return Ok(TheoremEntry::fail(
                TheoremId::HomPushforward,
                vec![format!("x={}", target.label(x))],
                format!("{notes}; equality fails despite injectivity"),
            ));
        }
        Ok(TheoremEntry::pass(
            TheoremId::HomPushforward,
            format!("{notes}; equality holds"),
        ))
    } else {
        Ok(TheoremEntry::pass(
            TheoremId::HomPushforward,
            format!("{notes}; containment holds"),
        ))
    }
}

/// Convenience: the principal ideal `⟨x⟩`, used by battery policies and a
/// few tests.
pub fn principal_ideal(r: &FiniteRing, x: usize) -> Result<Subset, RingError> {
    r.check_element(x)?;
    Ok(ideal_generated_by(
        r,
        &Subset::singleton(r, x)?,
    ))
}
