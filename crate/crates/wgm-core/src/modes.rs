//! TM whispering-gallery resonances of a dielectric sphere and their
//! mode functions.
//!
//! Modes are the fundamental radial / polar family (p = 1, l = m). The
//! size parameter is the interior phase radius at the surface,
//! x_tilde = k a with k = 2 pi n / lambda0, so the resonance condition
//! for order l traps x_tilde between l + 1/2 (total internal reflection
//! limit) and n (l + 1/2) (first interior antinode reaching the
//! surface).

use num_complex::Complex64;

use crate::constants::ROOT_REL_TOL;
use crate::error::{Error, Result};
use crate::material::MaterialModel;
use crate::specfun::bessel;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarization {
    Tm,
    Te,
}

/// Mode labels: polarization, radial order p (number of interior
/// antinodes), polar order l, azimuthal order m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeIndex {
    pub pol: Polarization,
    pub p: u32,
    pub l: u32,
    pub m: u32,
}

/// A solved resonance with its normalized mode-function data.
///
/// `b_out` scales the exterior radial profiles so the tangential field
/// magnitude is continuous at the surface; it carries the sign of the
/// interior tangential profile there. `norm` scales the whole mode so
/// its equatorial envelope peaks at exactly 1.
#[derive(Clone, Debug)]
pub struct Resonance {
    pub mode: ModeIndex,
    pub lambda0: f64,
    pub n: f64,
    pub x_tilde: f64,
    /// interior wavenumber 2 pi n / lambda0 (1/m)
    pub k: f64,
    /// sphere radius a = x_tilde / k (m)
    pub radius: f64,
    pub b_out: f64,
    pub norm: f64,
}

/// Mode function value at one point, in spherical components.
#[derive(Clone, Copy, Debug)]
pub struct FieldSample {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub psi_r: Complex64,
    pub psi_theta: Complex64,
    pub psi_phi: Complex64,
}

impl FieldSample {
    pub fn magnitude(&self) -> f64 {
        (self.psi_r.norm_sqr() + self.psi_theta.norm_sqr() + self.psi_phi.norm_sqr()).sqrt()
    }
}

/// Radial profile of the tangential components inside the sphere:
/// F(x) = j_l(x)/x + [l j_{l-1}(x) - (l+1) j_{l+1}(x)] / (2l+1).
pub fn f_factor(l: u32, x: f64) -> f64 {
    let (jm, jc, jp) = bessel::sph_j_triple(l, x);
    jc / x + (l as f64 * jm - (l + 1) as f64 * jp) / (2 * l + 1) as f64
}

/// Exterior twin of `f_factor` built on the outgoing Hankel function.
pub fn h_factor(l: u32, y: f64) -> Result<Complex64> {
    let (hm, hc, hp) = bessel::sph_h1_triple(l, y)?;
    Ok(hc / y + (l as f64 * hm - (l + 1) as f64 * hp) / (2 * l + 1) as f64)
}

/// TM characteristic function whose real-axis zeros are the resonances:
/// j_{l-1}(x)/j_l(x) - n Re[h_{l-1}(x/n)/h_l(x/n)] + (n^2-1) l / x.
/// Also returns j_l(x), whose zeros are poles of the first term that a
/// root scan must not mistake for sign changes.
fn residual_parts(l: u32, n: f64, x: f64) -> Result<(f64, f64)> {
    let y = x / n;
    let (jm, jc, _) = bessel::sph_j_triple(l, x);
    let (gm, gc, _) = bessel::sph_j_triple(l, y);
    let (wm, wc, _) = bessel::sph_y_triple(l, y)?;
    let hr = Complex64::new(gm, wm) / Complex64::new(gc, wc);
    Ok((jm / jc - n * hr.re + (n * n - 1.0) * l as f64 / x, jc))
}

/// Real-axis characteristic residual (see `residual_parts`).
pub fn characteristic_residual(l: u32, n: f64, x: f64) -> Result<f64> {
    residual_parts(l, n, x).map(|p| p.0)
}

/// Full complex characteristic function, used by the pole search. Off
/// the real axis the Hankel ratio term is kept complex.
pub fn characteristic_residual_c(l: u32, n: f64, z: Complex64) -> Result<Complex64> {
    let y = z / n;
    let (jm, jc, _) = bessel::sph_j_triple_c(l, z);
    let (gm, gc, _) = bessel::sph_j_triple_c(l, y);
    let (wm, wc, _) = bessel::sph_y_triple_c(l, y)?;
    let hm = gm + Complex64::i() * wm;
    let hc = gc + Complex64::i() * wc;
    Ok(jm / jc - n * (hm / hc) + (n * n - 1.0) * l as f64 / z)
}

const SCAN_STEP: f64 = 0.05;

/// Golden-section maximizer; returns (argmax, max).
fn golden_max<F: FnMut(f64) -> f64>(f: &mut F, mut a: f64, mut b: f64, iters: u32) -> (f64, f64) {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d);
        }
    }
    let xm = 0.5 * (a + b);
    (xm, f(xm))
}

/// Solve the fundamental (p = 1) TM resonance of order l = m at vacuum
/// wavelength `lambda0`, then normalize its mode function.
///
/// The scan walks x upward from l + 0.51 in steps of 0.05, skipping
/// sign changes caused by poles of j_{l-1}/j_l (where j_l itself flips
/// sign), and bisects the first clean bracket to 1e-12 relative width.
pub fn solve_resonance(l: u32, lambda0: f64, material: &MaterialModel) -> Result<Resonance> {
    if l < 5 {
        return Err(Error::OrderTooSmall(l));
    }
    let n = material.index(lambda0)?;
    let lf = l as f64;
    let lo = lf + 0.51;
    let hi = n * (lf + 0.5);

    let mut x_prev = lo;
    let (mut f_prev, mut j_prev) = residual_parts(l, n, x_prev)?;
    let mut root = None;
    while x_prev < hi {
        let x_next = (x_prev + SCAN_STEP).min(hi);
        let (f_next, j_next) = residual_parts(l, n, x_next)?;
        if f_prev * f_next <= 0.0 && j_prev * j_next > 0.0 {
            // clean bracket: bisect
            let (mut a, mut b) = (x_prev, x_next);
            let mut fa = f_prev;
            while b - a > ROOT_REL_TOL * b {
                let m = 0.5 * (a + b);
                let fm = characteristic_residual(l, n, m)?;
                if fa * fm <= 0.0 {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            root = Some(0.5 * (a + b));
            break;
        }
        x_prev = x_next;
        f_prev = f_next;
        j_prev = j_next;
    }
    let x_tilde = root.ok_or(Error::RootNotFound { l, n })?;

    let k = 2.0 * std::f64::consts::PI * n / lambda0;
    let ya = x_tilde / n;
    let fa = f_factor(l, x_tilde);
    let ha = h_factor(l, ya)?;
    let b_out = fa / ha.norm();

    // normalize: global max of the equatorial envelope is 1
    let lp1 = (l + 1) as f64;
    let mut g_in = |x: f64| {
        let (jm, jc, jp) = bessel::sph_j_triple(l, x);
        let f = jc / x + (lf * jm - lp1 * jp) / (2 * l + 1) as f64;
        (lp1 * jc / x).powi(2) + f * f
    };
    let mut g_out = |x: f64| {
        let y = x / n;
        let (hm, hc, hp) = bessel::sph_h1_triple(l, y).expect("exterior envelope in range");
        let hh = hc / y + (lf * hm - lp1 * hp) / (2 * l + 1) as f64;
        b_out * b_out * ((lp1 / y).powi(2) * hc.norm_sqr() + hh.norm_sqr())
    };

    const GRID: usize = 4096;
    let x0 = 1e-3 * x_tilde;
    let dx = (x_tilde - x0) / (GRID - 1) as f64;
    let mut best_i = 0;
    let mut best = f64::MIN;
    for i in 0..GRID {
        let g = g_in(x0 + i as f64 * dx);
        if g > best {
            best = g;
            best_i = i;
        }
    }
    let bl = x0 + best_i.saturating_sub(1) as f64 * dx;
    let br = (x0 + (best_i + 1) as f64 * dx).min(x_tilde);
    let (_, mut g_max) = golden_max(&mut g_in, bl, br, 100);

    // exterior can only take the global max for leaky low-order modes,
    // but check a few wavelengths of tail anyway
    let mut out_best_i = 0;
    let mut out_best = f64::MIN;
    const OUT_GRID: usize = 600;
    let out_dx = 30.0 / (OUT_GRID - 1) as f64;
    for i in 0..OUT_GRID {
        let g = g_out(x_tilde + i as f64 * out_dx);
        if g > out_best {
            out_best = g;
            out_best_i = i;
        }
    }
    if out_best > g_max {
        let bl = x_tilde + out_best_i.saturating_sub(1) as f64 * out_dx;
        let br = x_tilde + (out_best_i + 1) as f64 * out_dx;
        let (_, refined) = golden_max(&mut g_out, bl, br, 100);
        g_max = g_max.max(refined).max(out_best);
    }

    Ok(Resonance {
        mode: ModeIndex { pol: Polarization::Tm, p: 1, l, m: l },
        lambda0,
        n,
        x_tilde,
        k,
        radius: x_tilde / k,
        b_out,
        norm: 1.0 / g_max.sqrt(),
    })
}

/// Equatorial envelope |Psi|(x) at phase radius x = k r, continuous in
/// magnitude across the surface.
pub fn envelope(res: &Resonance, x: f64) -> f64 {
    let l = res.mode.l;
    let lp1 = (l + 1) as f64;
    if x <= 0.0 {
        return 0.0;
    }
    let g = if x < res.x_tilde {
        let (jc, f) = {
            let (jm, jc, jp) = bessel::sph_j_triple(l, x);
            (jc, jc / x + (l as f64 * jm - lp1 * jp) / (2 * l + 1) as f64)
        };
        (lp1 * jc / x).powi(2) + f * f
    } else {
        let y = x / res.n;
        let (hm, hc, hp) = bessel::sph_h1_triple(l, y).expect("envelope argument in range");
        let hh = hc / y + (l as f64 * hm - lp1 * hp) / (2 * l + 1) as f64;
        res.b_out * res.b_out * ((lp1 / y).powi(2) * hc.norm_sqr() + hh.norm_sqr())
    };
    res.norm * g.sqrt()
}

/// Normalized mode function at a point (spherical coordinates, r in
/// meters). Exactly zero at r = 0 for the orders handled here.
pub fn eval_mode(res: &Resonance, r: f64, theta: f64, phi: f64) -> FieldSample {
    let l = res.mode.l;
    let lf = l as f64;
    let lp1 = (l + 1) as f64;
    let zero = FieldSample {
        r,
        theta,
        phi,
        psi_r: Complex64::new(0.0, 0.0),
        psi_theta: Complex64::new(0.0, 0.0),
        psi_phi: Complex64::new(0.0, 0.0),
    };
    if r <= 0.0 {
        return zero;
    }
    let st = theta.sin();
    let ct = theta.cos();
    let sl1 = st.powi(l as i32 - 1);
    let sl = sl1 * st;
    let az = Complex64::from_polar(1.0, lf * phi);
    let x = res.k * r;
    let norm = res.norm;
    if x < res.x_tilde {
        let (jm, jc, jp) = bessel::sph_j_triple(l, x);
        let f = jc / x + (lf * jm - lp1 * jp) / (2 * l + 1) as f64;
        FieldSample {
            r,
            theta,
            phi,
            psi_r: az * (norm * lp1 * jc / x * sl),
            psi_theta: az * (norm * f * ct * sl1),
            psi_phi: az * Complex64::i() * (norm * f * sl1),
        }
    } else {
        let y = x / res.n;
        let (hm, hc, hp) = bessel::sph_h1_triple(l, y).expect("field point in range");
        let hh = hc / y + (lf * hm - lp1 * hp) / (2 * l + 1) as f64;
        let b = res.b_out;
        FieldSample {
            r,
            theta,
            phi,
            psi_r: az * hc * (norm * b * lp1 / y * sl),
            psi_theta: az * hh * (norm * b * ct * sl1),
            psi_phi: az * Complex64::i() * hh * (norm * b * sl1),
        }
    }
}

/// Equatorial field magnitude just outside the surface, the quantity
/// that sets the atom-mode coupling for a surface-coupled atom.
pub fn exterior_surface_amplitude(res: &Resonance) -> f64 {
    let l = res.mode.l;
    let lp1 = (l + 1) as f64;
    let ya = res.x_tilde / res.n;
    let hc = bessel::sph_h1_triple(l, ya).expect("surface in range").1;
    let hh = h_factor(l, ya).expect("surface in range");
    res.norm
        * res.b_out.abs()
        * ((lp1 / ya).powi(2) * hc.norm_sqr() + hh.norm_sqr()).sqrt()
}

/// Complex pole of the characteristic function nearest the real
/// resonance, via Newton iteration with a numerical derivative. The
/// pole sits just below the real axis; its real part is the resonance
/// position and its imaginary part the radiative half-linewidth, so
/// Q = -Re(z) / (2 Im(z)).
pub fn complex_pole(res: &Resonance) -> Result<(Complex64, f64)> {
    let l = res.mode.l;
    let n = res.n;
    let mut z = Complex64::new(res.x_tilde, 0.0);
    const MAX_ITER: u32 = 60;
    for _ in 0..MAX_ITER {
        let f = characteristic_residual_c(l, n, z)?;
        let h = 1e-6 * z.norm();
        let fp = (characteristic_residual_c(l, n, z + h)? - characteristic_residual_c(l, n, z - h)?)
            / (2.0 * h);
        let dz = f / fp;
        z -= dz;
        if dz.norm() <= 1e-14 * z.norm() {
            let q = -z.re / (2.0 * z.im);
            return Ok((z, q));
        }
    }
    Err(Error::PoleNoConvergence(MAX_ITER))
}
