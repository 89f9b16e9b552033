//! The ring-expression AST.
//!
//! Grammar (parsed by [`crate::parse::parse_ring_expr`]):
//!
//! ```text
//! expr := term ('x' term)*                 -- product, left-associative
//! term := 'Z' '(' int ')'                  -- integers mod n
//!       | 'N' '(' int ')'                  -- zero-multiplication ring
//!       | 'SZ' '(' int ',' int ')'         -- scaled ring on Z_n
//!       | int 'Z' '(' int ')'              -- subring kZ(n), k | n
//!       | 'M' '(' int ',' expr ')'         -- d x d matrices over expr
//!       | '(' expr ')'
//! ```
//!
//! [`RingExpr::render`] emits the canonical spelling (single spaces after
//! commas and around `x`, parentheses only where the grammar needs them);
//! `parse(render(e)) == e` for every AST.

use crate::error::RingError;
use crate::ring::{FiniteRing, DEFAULT_ELEMENT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    /// `Z(n)`
    Zn(u64),
    /// `N(n)`
    ZeroMult(u64),
    /// `SZ(n, e)`
    ScaledZn(u64, u64),
    /// `kZ(n)`
    SubringKZn(u64, u64),
    /// `M(d, base)`
    Matrix(u64, Box<RingExpr>),
    /// `left x right`
    Product(Box<RingExpr>, Box<RingExpr>),
}

impl RingExpr {
    /// Canonical text form; re-parsing it yields this AST back.
    pub fn render(&self) -> String {
        match self {
            RingExpr::Zn(n) => format!("Z({n})"),
            RingExpr::ZeroMult(n) => format!("N({n})"),
            RingExpr::ScaledZn(n, e) => format!("SZ({n}, {e})"),
            RingExpr::SubringKZn(k, n) => format!("{k}Z({n})"),
            RingExpr::Matrix(d, base) => format!("M({d}, {})", base.render()),
            RingExpr::Product(l, r) => {
                let left = l.render();
                let right = match **r {
                    // The grammar is left-associative, so a product on the
                    // right only survives a round trip inside parentheses.
                    RingExpr::Product(_, _) => format!("({})", r.render()),
                    _ => r.render(),
                };
                format!("{left} x {right}")
            }
        }
    }

    /// Builds the ring under the default element cap.
    pub fn build(&self) -> Result<FiniteRing, RingError> {
        self.build_with_cap(DEFAULT_ELEMENT_CAP)
    }

    /// Builds the ring, bounding every intermediate construction by `cap`.
    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteRing, RingError> {
        let int = |v: u64| -> Result<usize, RingError> {
            usize::try_from(v).map_err(|_| RingError::CapExceeded {
                requested: usize::MAX,
                cap,
            })
        };
        match self {
            RingExpr::Zn(n) => FiniteRing::zn_capped(int(*n)?, cap),
            RingExpr::ZeroMult(n) => FiniteRing::zero_mult_capped(int(*n)?, cap),
            RingExpr::ScaledZn(n, e) => FiniteRing::scaled_zn_capped(int(*n)?, int(*e)?, cap),
            RingExpr::SubringKZn(k, n) => FiniteRing::subring_kzn_capped(int(*k)?, int(*n)?, cap),
            RingExpr::Matrix(d, base) => {
                let base = base.build_with_cap(cap)?;
                FiniteRing::matrix_ring_capped(int(*d)?, &base, cap)
            }
            RingExpr::Product(l, r) => {
                let left = l.build_with_cap(cap)?;
                let right = r.build_with_cap(cap)?;
                FiniteRing::product_capped(&left, &right, cap)
            }
        }
    }
}

impl std::fmt::Display for RingExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_is_canonical() {
        let e = RingExpr::Product(
            Box::new(RingExpr::Matrix(2, Box::new(RingExpr::Zn(2)))),
            Box::new(RingExpr::ScaledZn(4, 2)),
        );
        assert_eq!(e.render(), "M(2, Z(2)) x SZ(4, 2)");
        assert_eq!(RingExpr::SubringKZn(2, 16).render(), "2Z(16)");
    }

    #[test]
    fn right_nested_products_are_parenthesized() {
        let inner = RingExpr::Product(Box::new(RingExpr::Zn(2)), Box::new(RingExpr::Zn(3)));
        let left_nested = RingExpr::Product(Box::new(inner.clone()), Box::new(RingExpr::Zn(5)));
        assert_eq!(left_nested.render(), "Z(2) x Z(3) x Z(5)");
        let right_nested = RingExpr::Product(Box::new(RingExpr::Zn(5)), Box::new(inner));
        assert_eq!(right_nested.render(), "Z(5) x (Z(2) x Z(3))");
    }

    #[test]
    fn build_matches_descriptor() {
        let e = RingExpr::Matrix(2, Box::new(RingExpr::Zn(2)));
        let r = e.build().unwrap();
        assert_eq!(r.descriptor(), e.render());
        assert_eq!(r.order(), 16);
    }

    #[test]
    fn build_with_cap_applies_to_intermediates() {
        // Z(100) itself is under a cap of 100, but the product blows it.
        let e = RingExpr::Product(Box::new(RingExpr::Zn(100)), Box::new(RingExpr::Zn(2)));
        assert!(matches!(
            e.build_with_cap(100),
            Err(RingError::CapExceeded { requested: 200, cap: 100 })
        ));
        assert!(e.build_with_cap(200).is_ok());
        // The matrix base is an intermediate too.
        let m = RingExpr::Matrix(2, Box::new(RingExpr::Zn(5000)));
        assert!(matches!(m.build_with_cap(4096), Err(RingError::CapExceeded { .. })));
    }

    #[test]
    fn build_reports_constructor_errors() {
        assert!(matches!(
            RingExpr::SubringKZn(3, 16).build(),
            Err(RingError::InvalidParameter(_))
        ));
        assert!(matches!(
            RingExpr::ScaledZn(4, 4).build(),
            Err(RingError::InvalidParameter(_))
        ));
    }
}
