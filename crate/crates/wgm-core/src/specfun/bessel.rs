//! Spherical Bessel functions at large order.
//!
//! j_l is the minimal solution of the three-term recurrence, so it is
//! evaluated by downward recurrence anchored by a continued fraction
//! for the ratio j_{l-1}/j_l (modified Lentz). That stays accurate for
//! any mix of order and argument, including deep evanescent regimes
//! where upward recurrence would lose everything. y_l is the dominant
//! solution and recurses upward safely. Complex-argument variants
//! mirror the real ones; the pole search only needs them close to the
//! real axis.

use num_complex::Complex64;

use crate::error::{Error, Result};

const RESCALE: f64 = 1e250;
const INV_RESCALE: f64 = 1e-250;
const CF_MAX_ITER: usize = 100_000;
const CF_TINY: f64 = 1e-300;

/// j_{l-1}(x)/j_l(x) via the continued fraction
/// v_l = (2l+1)/x - 1/v_{l+1}, evaluated by modified Lentz.
///
/// While the partial denominators (2(l+m)+1)/x stay below 2 the
/// fraction is still in its oscillatory transient and the Lentz delta
/// can graze 1 without having converged, so termination is only
/// allowed past that turning point.
pub fn j_ratio(l: u32, x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let b0 = (2 * l + 1) as f64 / x;
    let mut f = if b0 == 0.0 { CF_TINY } else { b0 };
    let mut c = f;
    let mut d = 0.0f64;
    for m in 1..CF_MAX_ITER {
        let b = (2 * (l as usize + m) + 1) as f64 / x;
        d = b - d;
        if d == 0.0 {
            d = CF_TINY;
        }
        c = b - 1.0 / c;
        if c == 0.0 {
            c = CF_TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if b > 2.0 && (delta - 1.0).abs() < 1e-15 {
            break;
        }
    }
    f
}

/// Complex-argument twin of `j_ratio`.
pub fn j_ratio_c(l: u32, z: Complex64) -> Complex64 {
    let b0 = (2 * l + 1) as f64 / z;
    let tiny = Complex64::new(CF_TINY, 0.0);
    let mut f = if b0.norm() == 0.0 { tiny } else { b0 };
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for m in 1..CF_MAX_ITER {
        let bm = (2 * (l as usize + m) + 1) as f64;
        let b = bm / z;
        d = b - d;
        if d.norm() == 0.0 {
            d = tiny;
        }
        c = b - 1.0 / c;
        if c.norm() == 0.0 {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if bm > 2.0 * z.norm() && (delta - Complex64::new(1.0, 0.0)).norm() < 1e-15 {
            break;
        }
    }
    f
}

/// (j_{l-1}, j_l, j_{l+1}) at x > 0 in one downward pass.
pub fn sph_j_triple(l: u32, x: f64) -> (f64, f64, f64) {
    debug_assert!(x > 0.0);
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let j1 = s / (x * x) - c / x;
    if l == 0 {
        return (c / x, j0, j1);
    }
    // seed one order above l+1 with the continued-fraction ratio and
    // recurse down, collecting the wanted trio as the window passes it
    let ratio = j_ratio(l + 2, x); // j_{l+1}/j_{l+2}
    let mut fp = 1.0; // unnormalized f_{k+1}, starting at k = l+1
    let mut fc = ratio; // unnormalized f_k
    let mut out = (0.0, 0.0, 0.0);
    let mut k = l + 1;
    while k >= 1 {
        let fm = (2 * k + 1) as f64 / x * fc - fp;
        if k == l + 1 {
            out.2 = fc;
            out.1 = fm;
        } else if k == l {
            out.0 = fm;
        }
        if fm.abs() > RESCALE {
            fp = fc * INV_RESCALE;
            fc = fm * INV_RESCALE;
            out.0 *= INV_RESCALE;
            out.1 *= INV_RESCALE;
            out.2 *= INV_RESCALE;
        } else {
            fp = fc;
            fc = fm;
        }
        k -= 1;
    }
    // fc = unnormalized j_0, fp = unnormalized j_1
    let scale = if j0.abs() >= j1.abs() { j0 / fc } else { j1 / fp };
    (out.0 * scale, out.1 * scale, out.2 * scale)
}

/// Complex-argument twin of `sph_j_triple`.
pub fn sph_j_triple_c(l: u32, z: Complex64) -> (Complex64, Complex64, Complex64) {
    let s = z.sin();
    let c = z.cos();
    let j0 = s / z;
    let j1 = s / (z * z) - c / z;
    if l == 0 {
        return (c / z, j0, j1);
    }
    let ratio = j_ratio_c(l + 2, z);
    let mut fp = Complex64::new(1.0, 0.0);
    let mut fc = ratio;
    let zero = Complex64::new(0.0, 0.0);
    let mut out = (zero, zero, zero);
    let mut k = l + 1;
    while k >= 1 {
        let fm = (2 * k + 1) as f64 / z * fc - fp;
        if k == l + 1 {
            out.2 = fc;
            out.1 = fm;
        } else if k == l {
            out.0 = fm;
        }
        if fm.norm() > RESCALE {
            fp = fc * INV_RESCALE;
            fc = fm * INV_RESCALE;
            out.0 *= INV_RESCALE;
            out.1 *= INV_RESCALE;
            out.2 *= INV_RESCALE;
        } else {
            fp = fc;
            fc = fm;
        }
        k -= 1;
    }
    let scale = if j0.norm() >= j1.norm() { j0 / fc } else { j1 / fp };
    (out.0 * scale, out.1 * scale, out.2 * scale)
}

/// (y_{l-1}, y_l, y_{l+1}) at x > 0 by upward recurrence. Errors if the
/// dominant solution overflows before reaching order l.
pub fn sph_y_triple(l: u32, x: f64) -> Result<(f64, f64, f64)> {
    debug_assert!(x > 0.0);
    let (s, c) = x.sin_cos();
    let mut ym = -c / x; // y_0
    let mut yc = -c / (x * x) - s / x; // y_1
    if l == 0 {
        return Ok((s / x, ym, yc)); // y_{-1} = j_0
    }
    for k in 1..l {
        let yn = (2 * k + 1) as f64 / x * yc - ym;
        if !yn.is_finite() {
            return Err(Error::BesselOverflow { l, x });
        }
        ym = yc;
        yc = yn;
    }
    let yp = (2 * l + 1) as f64 / x * yc - ym;
    if !yp.is_finite() {
        return Err(Error::BesselOverflow { l, x });
    }
    Ok((ym, yc, yp))
}

/// Complex-argument twin of `sph_y_triple`.
pub fn sph_y_triple_c(l: u32, z: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
    let s = z.sin();
    let c = z.cos();
    let mut ym = -c / z;
    let mut yc = -c / (z * z) - s / z;
    if l == 0 {
        return Ok((s / z, ym, yc));
    }
    for k in 1..l {
        let yn = (2 * k + 1) as f64 / z * yc - ym;
        if !yn.is_finite() {
            return Err(Error::BesselOverflow { l, x: z.re });
        }
        ym = yc;
        yc = yn;
    }
    let yp = (2 * l + 1) as f64 / z * yc - ym;
    if !yp.is_finite() {
        return Err(Error::BesselOverflow { l, x: z.re });
    }
    Ok((ym, yc, yp))
}

/// j_l(x) alone.
pub fn sph_j(l: u32, x: f64) -> f64 {
    sph_j_triple(l, x).1
}

/// Outgoing spherical Hankel h_l^{(1)}(x) = j_l(x) + i y_l(x).
pub fn sph_h1(l: u32, x: f64) -> Result<Complex64> {
    let j = sph_j_triple(l, x).1;
    let y = sph_y_triple(l, x)?.1;
    Ok(Complex64::new(j, y))
}

/// (h_{l-1}, h_l, h_{l+1}) at real argument.
pub fn sph_h1_triple(l: u32, x: f64) -> Result<(Complex64, Complex64, Complex64)> {
    let (jm, jc, jp) = sph_j_triple(l, x);
    let (ym, yc, yp) = sph_y_triple(l, x)?;
    Ok((
        Complex64::new(jm, ym),
        Complex64::new(jc, yc),
        Complex64::new(jp, yp),
    ))
}

/// h_l^{(1)} at complex argument.
pub fn sph_h1_c(l: u32, z: Complex64) -> Result<Complex64> {
    let j = sph_j_triple_c(l, z).1;
    let y = sph_y_triple_c(l, z)?.1;
    Ok(j + Complex64::i() * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // reference values computed independently with 40-digit arithmetic

    #[test]
    fn low_order_closed_forms() {
        let x = 1.7f64;
        let (s, c) = x.sin_cos();
        let (jm, j0, j1) = sph_j_triple(0, x);
        assert_relative_eq!(jm, c / x, max_relative = 1e-14);
        assert_relative_eq!(j0, s / x, max_relative = 1e-14);
        assert_relative_eq!(j1, s / (x * x) - c / x, max_relative = 1e-14);
        let j2 = 3.0 / x * j1 - j0;
        assert_relative_eq!(sph_j(2, x), j2, max_relative = 1e-13);
    }

    #[test]
    fn high_order_oscillatory() {
        assert_relative_eq!(
            sph_j(50, 90.99),
            0.011902699199969781,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            sph_j(200, 400.0),
            -0.0022583295046128904,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            sph_j(150, 300.0),
            0.0022619825026393074,
            max_relative = 1e-12
        );
    }

    #[test]
    fn deep_evanescent_order() {
        assert_relative_eq!(
            sph_j(100, 1.0),
            7.444727741661077e-190,
            max_relative = 1e-11
        );
    }

    #[test]
    fn neumann_high_order() {
        let (_, yc, _) = sph_y_triple(150, 300.0).unwrap();
        assert_relative_eq!(yc, 0.0027798667115395983, max_relative = 1e-12);
    }

    #[test]
    fn hankel_in_the_evanescent_exterior() {
        // the regime the exterior mode tail lives in: order far above argument
        let y = 59.85784713485161;
        let h = sph_h1(79, y).unwrap();
        assert_relative_eq!(h.re, 2.5881769204658684e-7, max_relative = 1e-10);
        assert_relative_eq!(h.im, -617.2663639268593, max_relative = 1e-12);
    }

    #[test]
    fn ratio_matches_triple() {
        for &(l, x) in &[(33u32, 38.88f64), (79, 86.94), (150, 300.0), (20, 22.3)] {
            let r = j_ratio(l, x);
            let (jm, jc, _) = sph_j_triple(l, x);
            assert_relative_eq!(r, jm / jc, max_relative = 1e-12);
        }
    }

    #[test]
    fn complex_variants_reduce_to_real_on_axis() {
        let z = Complex64::new(86.94112864948657, 0.0);
        let (jm, jc, jp) = sph_j_triple(79, z.re);
        let (zm, zc, zp) = sph_j_triple_c(79, z);
        assert_relative_eq!(zm.re, jm, max_relative = 1e-12);
        assert_relative_eq!(zc.re, jc, max_relative = 1e-12);
        assert_relative_eq!(zp.re, jp, max_relative = 1e-12);
        assert!(zc.im.abs() <= 1e-15 * jc.abs().max(1.0));

        let (ym, yc, yp) = sph_y_triple(79, z.re).unwrap();
        let (wm, wc, wp) = sph_y_triple_c(79, z).unwrap();
        assert_relative_eq!(wm.re, ym, max_relative = 1e-12);
        assert_relative_eq!(wc.re, yc, max_relative = 1e-12);
        assert_relative_eq!(wp.re, yp, max_relative = 1e-12);
    }

    #[test]
    fn neumann_overflow_is_reported() {
        assert!(matches!(
            sph_y_triple(400, 1e-3),
            Err(Error::BesselOverflow { .. })
        ));
    }
}
