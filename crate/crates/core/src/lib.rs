//! Exact computation of Jones polynomials of knots, the rational Vassiliev
//! invariants `a_k` read off from `J(e^x) = Σ a_k x^k`, their minimal integer
//! normalizations `v_k = λ_k·a_k`, and mechanical checks of the arithmetic
//! facts these quantities satisfy.
//!
//! The pipeline is `diagram` → `bracket` → `series`, with `verify` running
//! suites over the knots in `table`.

pub mod bracket;
pub mod diagram;
pub mod error;
pub mod exactnum;
pub mod laurent;
pub mod report;
pub mod series;
pub mod table;
pub mod verify;

pub use bracket::{bracket_fast, bracket_oracle, jones, BracketPoly};
pub use diagram::{parse_pd, BraidWord, PlanarDiagram};
pub use error::{Error, Result};
pub use exactnum::{BigRational, Valuation};
pub use laurent::{EisensteinInt, GaussianInt, LaurentPoly, ResidueSum};
pub use report::{CheckReport, CheckRow, Outcome};
pub use series::{LambdaStatus, LambdaValue, SeriesExpansion};
pub use table::{load_builtin, KnotRecord, KnotTable};
pub use verify::Suite;
pub use num_bigint::BigInt;
