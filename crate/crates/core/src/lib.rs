//! Betti numbers, Poincaré series and structure criteria for glued germs of
//! analytic spaces, computed exactly from local polynomial presentations.

pub mod corpus;
pub mod criteria;
pub mod error;
pub mod germ;
pub mod gluing;
pub mod poincare;
pub mod poly;
pub mod resolution;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use germ::format::Workspace;
pub use germ::{AnalyticGerm, GermSurjection, Subspace};
pub use gluing::{fiber_product_presentation, glue_at_point, self_glue, GluedGerm, GluingDatum, Side};
pub use criteria::StructureReport;
pub use poincare::{classify_gluing, convolution_check, GluingAnalysis, Verdict};
pub use poly::{Coeff, Ideal, Monomial, MonomialOrder, Polynomial};
pub use resolution::{BettiTable, MinimalResolution, PresentedModule};
pub use series::TruncatedSeries;
pub use verify::{verify_gluing, VerifyReport};
