//! Irreducibility certificates over Q for integer polynomials
//!
//! `f(x) = a_n x^n + ... + a_m x^m + p^u`
//!
//! whose constant term is a prime power. `f` is irreducible when `p ∤ a_m`,
//! `gcd(u, m) = 1` and `p^u > |a_n| + ... + |a_m|`. The crate exposes each
//! ingredient separately: p-adic valuations and Newton polygons
//! ([`newton`]), the certifiers ([`criteria`]), root location ([`roots`]) and
//! an exhaustive Kronecker factor search ([`kronecker`]) that cross-checks
//! all of them.

pub mod arith;
pub mod corpus;
pub mod criteria;
pub mod decimal;
pub mod error;
pub mod kronecker;
pub mod newton;
pub mod poly;
pub mod roots;

pub use arith::{is_prime, prime_power_decompose, primality, PrimePowerForm};
pub use criteria::{
    check_all, check_corollary, check_prop1, check_prop2, check_prop3, check_prop4,
    check_theorem, Certificate, Criterion, HypothesisReport, Verdict,
};
pub use error::{Error, Result};
pub use kronecker::{
    divide_exact, full_factor, kronecker_find_factor, Factorization, FactorSearch, SearchLimits,
};
pub use newton::{
    lattice_points_on_segment, newton_polygon, p_adic_valuation, verify_dumas, NewtonPolygon,
    SegmentVector, ValuationPoint,
};
pub use poly::{multiply, parse_polynomial, Polynomial};
pub use roots::{
    dominant_constant_holds, min_root_modulus, numeric_roots, vieta_product_check, RootSet,
};
