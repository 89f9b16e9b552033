//! Finite rings as dense Cayley tables.
//!
//! A [`FiniteRing`] stores its addition and multiplication tables as flat
//! row-major vectors, so every binary operation is a single indexed load.
//! Elements are the indices `0..order`; index 0 is always the additive
//! identity. Rings are plain values: clone freely, compare structurally.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{RingAxiom, RingError};
use crate::ideals::is_ideal;
use crate::structure::RingHom;
use crate::subset::Subset;

/// Largest ring order the plain constructors accept.
///
/// Everything in the crate is exhaustive search over Cayley tables, so the
/// cap keeps accidental `Z(10^9)` requests from allocating the universe.
/// Constructions above the cap fail with [`RingError::CapExceeded`].
pub const DEFAULT_ELEMENT_CAP: usize = 4096;

/// A finite associative ring, given by complete operation tables.
///
/// Invariants (enforced by the constructors, checked exhaustively by
/// [`FiniteRing::validate`]):
///
/// * `add` and `mul` are `order * order` row-major tables with entries in
///   `0..order`;
/// * index 0 is the additive identity, and every element has an additive
///   inverse (recorded in `neg`);
/// * `one` is `Some(e)` exactly when the ring has a two-sided multiplicative
///   identity `e`;
/// * `labels` has one distinct display string per element.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    one: Option<u32>,
    labels: Vec<String>,
    descriptor: String,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("descriptor", &self.descriptor)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// On-disk JSON form of a ring (see the CLI's `@file.json` references).
#[derive(Serialize, Deserialize)]
struct RingFile {
    order: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    one: Option<usize>,
}

impl FiniteRing {
    // ------------------------------------------------------------------
    // Accessors
    // ------------------------------------------------------------------

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Iterator over all element indices, ascending.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The additive identity (always index 0).
    pub fn zero(&self) -> usize {
        0
    }

    /// The multiplicative identity, if the ring has one.
    pub fn one(&self) -> Option<usize> {
        self.one.map(|e| e as usize)
    }

    /// `x + y`. Panics if either index is out of range.
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y] as usize
    }

    /// `x * y`. Panics if either index is out of range.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    /// `-x`. Panics if the index is out of range.
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    /// `x - y`.
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// Display label of element `x`.
    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// All element labels, indexed by element.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the element with the given label, if any.
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Canonical construction string (a DSL expression for built rings,
    /// `custom(n)` for table-supplied ones).
    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// Returns the ring with its descriptor replaced (used by callers that
    /// load rings from files and want the file name shown in reports).
    pub fn with_descriptor(mut self, descriptor: impl Into<String>) -> Self {
        self.descriptor = descriptor.into();
        self
    }

    /// Checks an element index, turning an out-of-range value into an error.
    pub fn check_element(&self, x: usize) -> Result<(), RingError> {
        if x < self.order {
            Ok(())
        } else {
            Err(RingError::ElementOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    /// True when multiplication is commutative.
    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (0..n).all(|y| self.mul[x * n + y] == self.mul[y * n + x]))
    }

    /// Scans for a two-sided multiplicative identity.
    pub fn find_identity(&self) -> Option<usize> {
        let n = self.order;
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    // ------------------------------------------------------------------
    // Validation
    // ------------------------------------------------------------------

    /// Exhaustively re-checks every ring axiom against the stored tables.
    ///
    /// Cost is `O(order^3)`; the first violated axiom is reported together
    /// with the witness elements at which it fails. Constructors in this
    /// module produce valid tables by construction, but every one of them is
    /// round-tripped through this check in the test suite, and
    /// [`FiniteRing::from_tables`] runs it on all user-supplied tables.
    pub fn validate(&self) -> Result<(), RingError> {
        let n = self.order;
        let shape_err = |msg: String| Err(RingError::MalformedTable(msg));
        if n == 0 {
            return shape_err("ring must have at least one element".into());
        }
        if self.add.len() != n * n || self.mul.len() != n * n {
            return shape_err(format!(
                "expected {} entries per table, got add={} mul={}",
                n * n,
                self.add.len(),
                self.mul.len()
            ));
        }
        if let Some(bad) = self.add.iter().chain(&self.mul).find(|&&v| v as usize >= n) {
            return shape_err(format!("table entry {bad} out of range for order {n}"));
        }

        let violation = |axiom, witness: &[usize]| {
            Err(RingError::AxiomViolation {
                axiom,
                witness: witness.to_vec(),
            })
        };

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return violation(RingAxiom::AddAssociative, &[x, y, z]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return violation(RingAxiom::AddCommutative, &[x, y]);
                }
            }
        }
        for x in 0..n {
            if self.add(0, x) != x {
                return violation(RingAxiom::ZeroIsAdditiveIdentity, &[x]);
            }
        }
        for x in 0..n {
            if !(0..n).any(|y| self.add(x, y) == 0) {
                return violation(RingAxiom::AddInverse, &[x]);
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return violation(RingAxiom::MulAssociative, &[x, y, z]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                        return violation(RingAxiom::LeftDistributive, &[x, y, z]);
                    }
                    if self.mul(self.add(x, y), z) != self.add(self.mul(x, z), self.mul(y, z)) {
                        return violation(RingAxiom::RightDistributive, &[x, y, z]);
                    }
                }
            }
        }
        for x in 0..n {
            if self.mul(0, x) != 0 || self.mul(x, 0) != 0 {
                return violation(RingAxiom::ZeroAnnihilates, &[x]);
            }
        }
        if let Some(e) = self.one() {
            if (0..n).any(|x| self.mul(e, x) != x || self.mul(x, e) != x) {
                let x = (0..n)
                    .find(|&x| self.mul(e, x) != x || self.mul(x, e) != x)
                    .unwrap();
                return violation(RingAxiom::DeclaredOneIsIdentity, &[e, x]);
            }
        }
        Ok(())
    }

    // ------------------------------------------------------------------
    // Constructors
    // ------------------------------------------------------------------

    /// The ring of integers modulo `n`, `Z(n)`.
    pub fn zn(n: usize) -> Result<FiniteRing, RingError> {
        Self::zn_capped(n, DEFAULT_ELEMENT_CAP)
    }

    pub(crate) fn zn_capped(n: usize, cap: usize) -> Result<FiniteRing, RingError> {
        check_order(n, cap)?;
        let add = build_table(n, |x, y| (x + y) % n);
        let mul = build_table(n, |x, y| (x * y) % n);
        let labels = (0..n).map(|x| x.to_string()).collect();
        let one = if n == 1 { 0 } else { 1 };
        Ok(Self::from_parts(
            n,
            add,
            mul,
            Some(one),
            labels,
            format!("Z({n})"),
        ))
    }

    /// The zero-multiplication ring `N(n)`: the cyclic group `Z_n` with
    /// `x * y = 0` for all `x`, `y`.
    pub fn zero_mult(n: usize) -> Result<FiniteRing, RingError> {
        Self::zero_mult_capped(n, DEFAULT_ELEMENT_CAP)
    }

    pub(crate) fn zero_mult_capped(n: usize, cap: usize) -> Result<FiniteRing, RingError> {
        check_order(n, cap)?;
        let add = build_table(n, |x, y| (x + y) % n);
        let mul = vec![0usize; n * n];
        let labels = (0..n).map(|x| x.to_string()).collect();
        // The one-element ring is its own identity; otherwise e * x = 0 != x.
        let one = if n == 1 { Some(0) } else { None };
        Ok(Self::from_parts(n, add, mul, one, labels, format!("N({n})")))
    }

    /// The scaled ring `SZ(n, e)`: the cyclic group `Z_n` with product
    /// `x • y = x * y * e mod n`.
    ///
    /// Every ring structure on a cyclic additive group arises this way, so
    /// this family is the raw material for the catalog. `SZ(n, 0)` is
    /// `N(n)`; `SZ(n, 1)` has the same tables as `Z(n)`.
    pub fn scaled_zn(n: usize, e: usize) -> Result<FiniteRing, RingError> {
        Self::scaled_zn_capped(n, e, DEFAULT_ELEMENT_CAP)
    }

    pub(crate) fn scaled_zn_capped(n: usize, e: usize, cap: usize) -> Result<FiniteRing, RingError> {
        check_order(n, cap)?;
        if e >= n {
            return Err(RingError::InvalidParameter(format!(
                "scale {e} must lie below the modulus {n}"
            )));
        }
        let add = build_table(n, |x, y| (x + y) % n);
        let mul = build_table(n, |x, y| x * y % n * e % n);
        let labels = (0..n).map(|x| x.to_string()).collect();
        let ring = Self::from_parts(n, add, mul, None, labels, format!("SZ({n}, {e})"));
        let one = ring.find_identity();
        Ok(FiniteRing {
            one: one.map(|v| v as u32),
            ..ring
        })
    }

    /// The subring `kZ(n)` of multiples of `k` inside `Z(n)`; requires
    /// `k | n`. Elements are the residues `0, k, 2k, ...`, labelled by their
    /// values in `Z(n)`.
    pub fn subring_kzn(k: usize, n: usize) -> Result<FiniteRing, RingError> {
        Self::subring_kzn_capped(k, n, DEFAULT_ELEMENT_CAP)
    }

    pub(crate) fn subring_kzn_capped(k: usize, n: usize, cap: usize) -> Result<FiniteRing, RingError> {
        if n == 0 || k == 0 {
            return Err(RingError::InvalidParameter(
                "kZ(n) requires k >= 1 and n >= 1".into(),
            ));
        }
        if !n.is_multiple_of(k) {
            return Err(RingError::InvalidParameter(format!(
                "{k} does not divide {n}"
            )));
        }
        let m = n / k;
        check_order(m, cap)?;
        let add = build_table(m, |i, j| (i + j) % m);
        // Index i stands for the residue i*k; products are reduced mod n and
        // re-indexed by dividing out k (i*k * j*k is again a multiple of k).
        let mul = build_table(m, |i, j| {
            let v = ((i * k) as u128 * (j * k) as u128 % n as u128) as usize;
            v / k
        });
        let labels = (0..m).map(|i| (i * k).to_string()).collect();
        let ring = Self::from_parts(m, add, mul, None, labels, format!("{k}Z({n})"));
        let one = ring.find_identity();
        Ok(FiniteRing {
            one: one.map(|v| v as u32),
            ..ring
        })
    }

    /// The ring of `d x d` matrices over `base`, `M(d, base)`.
    ///
    /// Elements are encoded positionally: entry `(i, j)` of matrix `x` is
    /// the base-`order` digit of `x` at position `i*d + j`.
    pub fn matrix_ring(d: usize, base: &FiniteRing) -> Result<FiniteRing, RingError> {
        Self::matrix_ring_capped(d, base, DEFAULT_ELEMENT_CAP)
    }

    pub(crate) fn matrix_ring_capped(
        d: usize,
        base: &FiniteRing,
        cap: usize,
    ) -> Result<FiniteRing, RingError> {
        if d == 0 {
            return Err(RingError::InvalidParameter(
                "matrix dimension must be at least 1".into(),
            ));
        }
        let b = base.order();
        let cells = d * d;
        let mut order = 1usize;
        for _ in 0..cells {
            order = order
                .checked_mul(b)
                .filter(|&o| o <= cap)
                .ok_or(RingError::CapExceeded {
                    requested: usize::MAX,
                    cap,
                })?;
        }
        check_order(order, cap)?;

        let decode = |x: usize| -> Vec<usize> {
            let mut digits = Vec::with_capacity(cells);
            let mut rest = x;
            for _ in 0..cells {
                digits.push(rest % b);
                rest /= b;
            }
            digits
        };
        let encode = |digits: &[usize]| -> usize {
            digits.iter().rev().fold(0usize, |acc, &v| acc * b + v)
        };

        let add = build_table(order, |x, y| {
            let (dx, dy) = (decode(x), decode(y));
            let sum: Vec<usize> = dx
                .iter()
                .zip(&dy)
                .map(|(&a, &c)| base.add(a, c))
                .collect();
            encode(&sum)
        });
        let mul = build_table(order, |x, y| {
            let (dx, dy) = (decode(x), decode(y));
            let mut out = vec![0usize; cells];
            for i in 0..d {
                for j in 0..d {
                    let mut acc = base.zero();
                    for t in 0..d {
                        acc = base.add(acc, base.mul(dx[i * d + t], dy[t * d + j]));
                    }
                    out[i * d + j] = acc;
                }
            }
            encode(&out)
        });

        let labels = (0..order)
            .map(|x| {
                let digits = decode(x);
                let rows: Vec<String> = (0..d)
                    .map(|i| {
                        let cells: Vec<&str> = (0..d)
                            .map(|j| base.label(digits[i * d + j]))
                            .collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            })
            .collect();

        let one = base.one().map(|e| {
            let mut digits = vec![0usize; cells];
            for i in 0..d {
                digits[i * d + i] = e;
            }
            encode(&digits)
        });

        let descriptor = format!("M({d}, {})", base.descriptor());
        Ok(Self::from_parts(order, add, mul, one, labels, descriptor))
    }

    /// The direct product `r x s` with componentwise operations.
    ///
    /// The pair `(x, y)` is stored at index `x * s.order() + y`.
    pub fn product(r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing, RingError> {
        Self::product_capped(r, s, DEFAULT_ELEMENT_CAP)
    }

    pub(crate) fn product_capped(
        r: &FiniteRing,
        s: &FiniteRing,
        cap: usize,
    ) -> Result<FiniteRing, RingError> {
        let order = r
            .order()
            .checked_mul(s.order())
            .ok_or(RingError::CapExceeded {
                requested: usize::MAX,
                cap,
            })?;
        check_order(order, cap)?;
        let m = s.order();
        let add = build_table(order, |x, y| {
            r.add(x / m, y / m) * m + s.add(x % m, y % m)
        });
        let mul = build_table(order, |x, y| {
            r.mul(x / m, y / m) * m + s.mul(x % m, y % m)
        });
        let labels = (0..order)
            .map(|x| format!("({},{})", r.label(x / m), s.label(x % m)))
            .collect();
        let one = match (r.one(), s.one()) {
            (Some(a), Some(b)) => Some(a * m + b),
            _ => None,
        };
        let rhs = s.descriptor();
        let rhs = if has_top_level_product(rhs) {
            format!("({rhs})")
        } else {
            rhs.to_string()
        };
        let descriptor = format!("{} x {}", r.descriptor(), rhs);
        Ok(Self::from_parts(order, add, mul, one, labels, descriptor))
    }

    /// Builds a ring from explicit tables, validating every axiom.
    ///
    /// `add` and `mul` are row-major (`add[x][y]` is `x + y`); the additive
    /// identity must sit at index 0; labels must be distinct. The identity
    /// element, if any, is detected automatically.
    pub fn from_tables(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        labels: Vec<String>,
    ) -> Result<FiniteRing, RingError> {
        Self::from_tables_capped(add, mul, labels, None, DEFAULT_ELEMENT_CAP)
    }

    pub(crate) fn from_tables_capped(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        labels: Vec<String>,
        declared_one: Option<usize>,
        cap: usize,
    ) -> Result<FiniteRing, RingError> {
        let n = add.len();
        check_order(n, cap)?;
        let flatten = |table: Vec<Vec<usize>>, name: &str| -> Result<Vec<u32>, RingError> {
            if table.len() != n {
                return Err(RingError::MalformedTable(format!(
                    "{name} table has {} rows, expected {n}",
                    table.len()
                )));
            }
            let mut flat = Vec::with_capacity(n * n);
            for (i, row) in table.into_iter().enumerate() {
                if row.len() != n {
                    return Err(RingError::MalformedTable(format!(
                        "{name} table row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for v in row {
                    if v >= n {
                        return Err(RingError::MalformedTable(format!(
                            "{name} table entry {v} out of range for order {n}"
                        )));
                    }
                    flat.push(v as u32);
                }
            }
            Ok(flat)
        };
        let add = flatten(add, "add")?;
        let mul = flatten(mul, "mul")?;
        if labels.len() != n {
            return Err(RingError::MalformedTable(format!(
                "{} labels supplied for {n} elements",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(RingError::MalformedTable(format!(
                    "duplicate label {label:?}"
                )));
            }
        }
        if let Some(e) = declared_one {
            if e >= n {
                return Err(RingError::MalformedTable(format!(
                    "declared identity {e} out of range for order {n}"
                )));
            }
        }

        let mut ring = FiniteRing {
            order: n,
            add,
            mul,
            neg: Vec::new(),
            one: declared_one.map(|e| e as u32),
            labels,
            descriptor: format!("custom({n})"),
        };
        ring.validate()?;
        if declared_one.is_none() {
            ring.one = ring.find_identity().map(|e| e as u32);
        }
        ring.neg = compute_neg(ring.order, &ring.add);
        Ok(ring)
    }

    /// Parses a ring from its JSON file form (`order`, `add`, `mul`,
    /// `labels`, optional `one`) and validates it fully.
    pub fn from_json_str(text: &str) -> Result<FiniteRing, RingError> {
        Self::from_json_str_capped(text, DEFAULT_ELEMENT_CAP)
    }

    pub(crate) fn from_json_str_capped(text: &str, cap: usize) -> Result<FiniteRing, RingError> {
        let file: RingFile =
            serde_json::from_str(text).map_err(|e| RingError::RingFile(e.to_string()))?;
        if file.order != file.add.len() {
            return Err(RingError::MalformedTable(format!(
                "declared order {} does not match table size {}",
                file.order,
                file.add.len()
            )));
        }
        Self::from_tables_capped(file.add, file.mul, file.labels, file.one, cap)
    }

    /// Serializes the ring into its JSON file form.
    pub fn to_json_string(&self) -> String {
        let n = self.order;
        let unflatten = |flat: &[u32]| -> Vec<Vec<usize>> {
            (0..n)
                .map(|x| (0..n).map(|y| flat[x * n + y] as usize).collect())
                .collect()
        };
        let file = RingFile {
            order: n,
            add: unflatten(&self.add),
            mul: unflatten(&self.mul),
            labels: self.labels.clone(),
            one: self.one(),
        };
        serde_json::to_string_pretty(&file).expect("ring file serialization cannot fail")
    }

    /// The quotient ring `R / I` by a two-sided ideal, together with the
    /// canonical projection.
    ///
    /// Each coset is represented by its least element index; cosets are
    /// numbered in ascending representative order, which puts the coset of 0
    /// (the ideal itself) at index 0.
    pub fn quotient(&self, ideal: &Subset) -> Result<(FiniteRing, RingHom), RingError> {
        if !is_ideal(self, ideal)? {
            return Err(RingError::NotAnIdeal(ideal.format_with(self)));
        }
        let n = self.order;
        // class_of[x] = least element of the coset x + I.
        let class_of: Vec<usize> = (0..n)
            .map(|x| {
                ideal
                    .iter()
                    .map(|v| self.add(x, v))
                    .min()
                    .expect("ideals are nonempty")
            })
            .collect();
        let mut reps: Vec<usize> = class_of.clone();
        reps.sort_unstable();
        reps.dedup();
        let index_of = |rep: usize| reps.binary_search(&rep).expect("rep is in reps");

        let m = reps.len();
        let add = build_table(m, |a, b| index_of(class_of[self.add(reps[a], reps[b])]));
        let mul = build_table(m, |a, b| index_of(class_of[self.mul(reps[a], reps[b])]));
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let descriptor = format!("{} / {}", self.descriptor, ideal.format_with(self));
        let ring = Self::from_parts(m, add, mul, None, labels, descriptor);
        let one = ring.find_identity();
        let ring = FiniteRing {
            one: one.map(|v| v as u32),
            ..ring
        };

        let map: Vec<usize> = (0..n).map(|x| index_of(class_of[x])).collect();
        let hom = RingHom::new(self.clone(), ring.clone(), map)?.validate()?;
        Ok((ring, hom))
    }

    /// Realizes a subring `A` of this ring as a standalone [`FiniteRing`]
    /// whose element `i` is the `i`-th member of `A` in ascending order.
    pub fn subring_as_ring(&self, subset: &Subset) -> Result<FiniteRing, RingError> {
        if !crate::ideals::is_subring(self, subset)? {
            return Err(RingError::NotASubring(subset.format_with(self)));
        }
        let members: Vec<usize> = subset.iter().collect();
        let index_of = |x: usize| {
            members
                .binary_search(&x)
                .expect("subring closed under its operations")
        };
        let m = members.len();
        let add = build_table(m, |a, b| index_of(self.add(members[a], members[b])));
        let mul = build_table(m, |a, b| index_of(self.mul(members[a], members[b])));
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        let descriptor = format!("{}[{}]", self.descriptor, subset.format_with(self));
        let ring = Self::from_parts(m, add, mul, None, labels, descriptor);
        let one = ring.find_identity();
        Ok(FiniteRing {
            one: one.map(|v| v as u32),
            ..ring
        })
    }

    /// Internal assembly from already-valid parts (all built-in constructors
    /// funnel through here; validity is asserted by the test suite, which
    /// round-trips every constructor output through [`FiniteRing::validate`]).
    fn from_parts(
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        one: Option<usize>,
        labels: Vec<String>,
        descriptor: String,
    ) -> FiniteRing {
        let add: Vec<u32> = add.into_iter().map(|v| v as u32).collect();
        let mul: Vec<u32> = mul.into_iter().map(|v| v as u32).collect();
        let neg = compute_neg(order, &add);
        FiniteRing {
            order,
            add,
            mul,
            neg,
            one: one.map(|v| v as u32),
            labels,
            descriptor,
        }
    }
}

fn check_order(n: usize, cap: usize) -> Result<(), RingError> {
    if n == 0 {
        return Err(RingError::InvalidParameter(
            "ring order must be at least 1".into(),
        ));
    }
    if n > cap {
        return Err(RingError::CapExceeded {
            requested: n,
            cap,
        });
    }
    Ok(())
}

fn build_table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(f(x, y));
        }
    }
    table
}

fn compute_neg(order: usize, add: &[u32]) -> Vec<u32> {
    (0..order)
        .map(|x| {
            (0..order)
                .find(|&y| add[x * order + y] == 0)
                .expect("validated ring has additive inverses") as u32
        })
        .collect()
}

/// True when the descriptor contains a product operator at parenthesis
/// depth 0, i.e. re-parsing it would yield a `Product` node. Such right
/// operands need parentheses to survive the left-associative grammar.
fn has_top_level_product(descriptor: &str) -> bool {
    let bytes = descriptor.as_bytes();
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth = depth.saturating_sub(1),
            b'x' if depth == 0 => {
                let before_ok = i > 0 && bytes[i - 1] == b' ';
                let after_ok = i + 1 < bytes.len() && bytes[i + 1] == b' ';
                if before_ok && after_ok {
                    return true;
                }
            }
            _ => {}
        }
    }
    false
}
