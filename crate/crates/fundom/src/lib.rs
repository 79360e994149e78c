//! Exact combinatorics of the rank 3 fundamental domain on the coweight
//! lattice.
//!
//! Starting from a valuation of the simple roots, the crate builds the
//! regular orthogonal family of lattice vertices indexed by Weyl chambers,
//! the hexagonal polytope they span, the stratification of the ambient
//! lattice by parabolic type, the affine paving of the domain with its cell
//! dimensions, the Poincare polynomial through several independent routes,
//! and the two-variable rational generating series of those polynomials.
//! Everything is integer or rational arithmetic; nothing is floating point.

pub mod ak;
pub mod error;
pub mod family;
pub mod paving;
pub mod poly;
pub mod series;
pub mod weyl;

pub use ak::{
    ak_classify, ak_classify_with_scale, classify_window, default_scale, stratum_fixed_points,
    ParabolicLabel, StratumSlice, Window,
};
pub use error::{Error, Result};
pub use family::{
    face_distance, hexagon_membership, regular_vertex, schubert_params, FaceFunctional,
    LatticePolytopeView, MaximalParabolic, OrthogonalFamily,
};
pub use paving::{
    cell_dimension, closed_form, closed_form_t, complement_region, fundamental_fixed_points,
    poincare_pipeline, triangle_region, v_region, ComplementRegion, TriangleRegion, VRegion,
};
pub use poly::IntPolynomial;
pub use weyl::{Coweight, RootValuation, WeylElem};
