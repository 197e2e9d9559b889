use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("wavelength {0:e} m is outside the dispersion model band 400-2000 nm")]
    WavelengthOutOfBand(f64),

    #[error("wavelength {0:e} m is outside the absorption table hull")]
    AbsorptionOutOfHull(f64),

    #[error("mode order l = {0} is below the supported minimum of 5")]
    OrderTooSmall(u32),

    #[error("sweep range {0}..={1} violates 5 <= l_min < l_max <= 200")]
    SweepRange(u32, u32),

    #[error("no resonance row in the sweep could be computed")]
    EmptySweep,

    #[error("no interior root of the characteristic equation found for l = {l} at n = {n}")]
    RootNotFound { l: u32, n: f64 },

    #[error("spherical Bessel y_{l} overflowed at argument {x:e}")]
    BesselOverflow { l: u32, x: f64 },

    #[error("Airy zero index {0} is outside the tabulated range 1..=10")]
    AiryOrder(u32),

    #[error(
        "radiative confinement lost for l = {l}: arccosh argument {arg} < 1 \
         (whispering-gallery description does not apply)"
    )]
    NoConfinement { l: u32, arg: f64 },

    #[error("complex pole search did not converge within {0} iterations")]
    PoleNoConvergence(u32),

    #[error("surface amplitude is not positive; beta is undefined")]
    ZeroSurfaceAmplitude,

    #[error("quality factor must be positive, got {0:e}")]
    NonPositiveQ(f64),

    #[error("target radius {0:e} m is too small to host a mode of order l >= 5")]
    RadiusTooSmall(f64),

    #[error("config: {0}")]
    Config(String),
}
