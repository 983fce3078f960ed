//! Exact polynomial arithmetic over the rationals with local and mixed
//! monomial orders, Mora normal forms and standard bases.

pub mod coeff;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod mora;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod vector;

pub use coeff::Coeff;
pub use ideal::{eliminate, is_standard_basis, map_kernel, monomial_dimension, mora_normal_form, Ideal, StandardBasis};
pub use monomial::Monomial;
pub use mora::{set_step_cap, step_cap, with_step_cap, DEFAULT_STEP_CAP};
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use vector::{Term, Vector};
