//! Skew-gentle algebras and their orbifold dissections.
//!
//! The crate validates gentle and skew-gentle presentations, builds the
//! dissected surface (or orbifold) of such an algebra and reads it back,
//! checks Koszul duality against graph duality, enumerates homotopy
//! strings and bands, and translates them into graded curves.

pub mod complex;
pub mod curves;
pub mod error;
pub mod fixtures;
pub mod iso;
pub mod koszul;
pub mod orbifold;
pub mod presentation;
pub mod resolution;
pub mod ribbon;
pub mod strings;
pub mod surface;
pub mod text;
pub mod threads;
pub mod validate;

pub use complex::{
    canonical_code, complexes_isomorphic, dualize, topology, validate_complex, Polygon, PolygonComplex, Side,
    TopologyReport,
};
pub use curves::{
    grade, skein_normalize, validate_curve, winding_number, Curve, CurveModel, CurveShape, Endpoint, GradedCurve, Mark,
};
pub use error::{Error, Result};
pub use iso::isomorphic;
pub use koszul::{double_dual_check, quadratic_dual};
pub use orbifold::{
    koszul_dissection_check, koszul_dissection_check_up_to, orbifold_to_skewgentle, skewgentle_to_orbifold,
};
pub use presentation::{Arrow, Presentation, Quiver, Verdict};
pub use strings::{
    enumerate_bands, enumerate_strings, validate_band, validate_string, validate_word, Direction, HomotopyBand,
    HomotopyLetter, HomotopyString, HomotopyWord, Sign,
};
pub use surface::{dissection_to_gentle, finiteness_checks, gentle_to_dissection, FinitenessReport};
pub use threads::{dimension, threads, Thread, ThreadKind, ThreadShape, Threads};
pub use validate::{is_gentle, is_locally_gentle, is_skew_gentle};
