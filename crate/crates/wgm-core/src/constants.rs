/// Speed of light in vacuum (m/s).
pub const C: f64 = 299_792_458.0;

/// Interior phase radius k*r at which the outward march of the exterior
/// mode integral is cut off. The corresponding quantization radius
/// r_Q = X_Q / k sits deep in the radiation zone (hundreds of microns
/// for near-infrared resonances of micron-scale spheres); a mode whose
/// tail has not leveled off by then carries a `diverged` flag.
pub const X_QUANTIZATION: f64 = 5000.0;

/// Relative step contribution below which the outward march of the
/// exterior integral is considered converged.
pub const TAIL_TOL: f64 = 1e-8;

/// Relative tolerance of the adaptive radial quadrature.
pub const QUAD_REL_TOL: f64 = 1e-9;

/// Relative width to which resonance roots are bisected.
pub const ROOT_REL_TOL: f64 = 1e-12;
