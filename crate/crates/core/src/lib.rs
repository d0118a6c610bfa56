//! Exact Ehrhart theory for small lattice polytopes.
//!
//! The crate computes lattice point counts and h*-polynomials, detects
//! lattice pyramids geometrically and through the toric ideal of the graded
//! monoid, and classifies polytopes of small normalized volume.
//!
//! ```
//! use latpoly::{ehrhart::hstar, LatticePolytope};
//!
//! let t = LatticePolytope::new(2, vec![vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
//! assert_eq!(hstar(&t).unwrap().coefficients(), &[1, 3]);
//! ```

pub mod artinian;
pub mod classify;
pub mod corpus;
pub mod ehrhart;
pub mod error;
pub mod hull;
pub mod io;
pub mod linalg;
pub mod monoid;
pub mod normal_form;
pub mod points;
pub mod polytope;
pub mod pyramid;
pub mod toric;
pub mod verify;
pub mod volume;

pub use ehrhart::HStarPolynomial;
pub use error::{Error, Result};
pub use normal_form::NormalForm;
pub use polytope::{AffineUnimodularMap, FacetDescription, LatticePolytope, Point};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polytopes.md")]
    mod polytopes {}
    #[doc = include_str!("../../../book/src/ehrhart.md")]
    mod ehrhart {}
    #[doc = include_str!("../../../book/src/pyramids.md")]
    mod pyramids {}
    #[doc = include_str!("../../../book/src/monoid.md")]
    mod monoid {}
    #[doc = include_str!("../../../book/src/artinian.md")]
    mod artinian {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
