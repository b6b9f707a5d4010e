//! Exact extremality analysis for Sasakian structures on `S³`-bundles over Riemann
//! surfaces of genus `g`, built as joins `M³_g ⋆_{l,1} S³_w`.
//!
//! All decisions are made in exact rational arithmetic: polynomials with rational
//! coefficients, Sturm chains, and real algebraic numbers held as isolating intervals.

pub mod csc;
pub mod curvature;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod topology;

pub use csc::{csc_cubic, csc_ray, csc_ray_with_width, CscRay, Regularity};
pub use curvature::{
    null_scalar_solutions, pi_bounds, sasaki_scalar, scalar_coefficients, transverse_homothety,
    NullScalarReport, NullScalarSolution, PiLinear, ScalarReport, Type3,
};
pub use error::{Error, Result};
pub use exact::{
    default_width, isolate_real_roots, positive_on_open_interval, rational_roots, sturm_sign_changes,
    IsolatingInterval, Poly, Positivity, Rational, RealAlgebraic,
};
pub use extremal::{
    exhaustion_bound, extremal_profile, extremal_region, extremal_region_with_width, extremal_verdict,
    extremal_verdict_at_slope, orbifold_h, regular_ray_extremal, smooth_h, ExhaustionReport,
    ExtremalProfile, ExtremalRegion, ExtremalVerdict, RegionPiece, RegionVerdict, RegularRayReport,
    Strength, Witness,
};
pub use topology::{
    bouquet_table, contact_invariants, km_from_params, params_from_km, quotient_orbifold, BouquetTable,
    Bundle, ContactInvariants, JoinParams, QuotientOrbifold, WeightVector,
};
