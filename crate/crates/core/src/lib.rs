//! Exhaustive computational algebra on small finite rings, centered on the
//! source of primeness.
//!
//! For a nonempty subset `A` of a finite ring `R`, the set
//! `S_R^a(A) = {b : a A b = 0}` collects the right annihilators of `A`
//! relative to `a`; intersecting over all `a` gives the source of
//! primeness `P_R(A)`, and the diagonal variant `S_R(A) = {b : b A b = 0}`
//! gives the source of semiprimeness. These sets measure how far `R` is
//! from being (semi)prime: `R` is prime exactly when `P_R({x}) = {0}` for
//! the right subsets, and `P_R = {0}` whenever `R` is prime or has an
//! identity.
//!
//! The crate provides:
//!
//! * [`FiniteRing`]: dense Cayley-table rings with full axiom validation,
//!   plus constructors for cyclic rings `Z(n)`, zero-multiplication rings
//!   `N(n)`, scaled cyclic rings `SZ(n, e)`, even-style subrings `kZ(n)`,
//!   matrix rings `M(d, R)`, products, quotients, and explicit tables from
//!   JSON ring files.
//! * [`Subset`], ideal machinery ([`ideals`]), prime ideals, and the prime
//!   radical.
//! * The source sets themselves ([`source`]), computed by two independent
//!   routes that cross-check each other.
//! * Executable verifiers for the structural theorems about these sets
//!   ([`theorems`]), a configurable battery runner ([`battery`]), and a
//!   deterministic JSONL catalog of all rings on cyclic additive groups
//!   ([`catalog`]).
//! * A small expression language ([`expr`], [`parse`]) naming the ring
//!   constructions, used by the CLI and the battery configs.
//!
//! Everything works by exhaustive search over element tuples — the point
//! is mechanical certainty on small rings, not asymptotic cleverness.

pub mod battery;
pub mod catalog;
pub mod error;
pub mod expr;
pub mod ideals;
pub mod parse;
pub mod ring;
pub mod source;
pub mod structure;
pub mod subset;
pub mod theorems;

pub use battery::{
    battery_subsets, resolve_ring_ref, run_battery, BatteryConfig, HomSpec, ReportSummary,
    SubsetPolicy, VerificationReport,
};
pub use catalog::{
    build_catalog, catalog_entry, dedup_isomorphic, enumerate_cyclic_rings, CatalogEntry,
    CatalogResult, DedupOutcome, DEFAULT_ISO_BOUND,
};
pub use error::{HomViolation, RingAxiom, RingError};
pub use expr::RingExpr;
pub use ideals::{
    enumerate_ideals, enumerate_prime_ideals, ideal_generated_by, is_ideal, is_left_ideal,
    is_prime_ideal, is_right_ideal, is_subring, prime_radical,
};
pub use parse::{parse_ring_expr, parse_subset, ParseError, ParseErrorKind};
pub use ring::{FiniteRing, DEFAULT_ELEMENT_CAP};
pub use source::{
    is_prime_ring, is_semiprime_ring, prime_ring_witness, primeness_source,
    primeness_source_direct, s_set, semiprime_ring_witness, semiprimeness_source, SourceKind,
    SourceResult,
};
pub use structure::{all_idempotent, classify_element, ElementProfile, RingHom};
pub use subset::Subset;
pub use theorems::{
    verify_element_corollaries, verify_hom_pushforward, verify_monotonicity, verify_p_ideal,
    verify_prime_ideal_containment, verify_prime_implies_trivial, verify_product_theorem,
    verify_s_set_ideal_props, verify_semiprimeness_containment, verify_square_zero,
    verify_subring_containment, CheckStatus, TheoremEntry, TheoremId,
};
