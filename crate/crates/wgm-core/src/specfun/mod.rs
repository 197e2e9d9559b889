//! Special functions tuned for high-order whispering-gallery work:
//! spherical Bessel/Hankel functions at orders up to several hundred,
//! the first zeros of the Airy function, and closed-form angular
//! integrals of the fundamental mode profile.

pub mod airy;
pub mod angular;
pub mod bessel;

pub use airy::airy_zero;
pub use angular::{angular_moments, AngularMoments};
pub use bessel::{
    j_ratio, j_ratio_c, sph_h1, sph_h1_c, sph_h1_triple, sph_j, sph_j_triple, sph_j_triple_c,
    sph_y_triple, sph_y_triple_c,
};
