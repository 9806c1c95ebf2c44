//! Exact commutative algebra over the rationals for blowup algebras of ideal pairs.
//!
//! The crate is layered bottom-up: polynomials and rings, a Groebner engine, ideal operations,
//! syzygies and minors, presentations of symmetric/Rees/Aluffi algebras, and the gradient-ideal
//! tooling for plane curves and their parameterized families.

pub mod blowup;
pub mod error;
pub mod fixtures;
pub mod gradient;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod syzygy;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, LiftData};
pub use ideal::{DimensionReport, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_list, parse_ring_header};
pub use poly::{Homogeneity, Polynomial, Rational};
pub use ring::RingContext;
pub use syzygy::PolyMatrix;
