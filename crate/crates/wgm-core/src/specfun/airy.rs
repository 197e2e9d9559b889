//! Zeros of the Airy function Ai on the negative real axis.
//!
//! Ai(t) is summed from its Maclaurin series. The series alternates and
//! cancels roughly exp((2/3)|t|^{3/2}) of precision, which already
//! exceeds f64 near the tenth zero, so the accumulation runs in
//! double-double arithmetic (~32 significant digits). That leaves ~14
//! clean digits at t = -12.8, plenty for the bisection below.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Double-double value: hi + lo with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    Dd { hi: p, lo: err }
}

impl Dd {
    const fn new(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        quick_two_sum(s.hi, s.lo + self.lo + o.lo)
    }

    fn sub(self, o: Dd) -> Dd {
        self.add(Dd { hi: -o.hi, lo: -o.lo })
    }

    fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    fn div_f64(self, d: f64) -> Dd {
        let q0 = self.hi / d;
        let p = two_prod(q0, d);
        let r = (self.hi - p.hi) + self.lo - p.lo;
        quick_two_sum(q0, r / d)
    }
}

// Ai(0) = 3^{-2/3} / Gamma(2/3) and Ai'(0) = -3^{-1/3} / Gamma(1/3),
// stored to double-double precision.
const AI0: Dd = Dd::new(0.3550280538878172, 3.926006318600418e-17);
const AIP0: Dd = Dd::new(0.2588194037928068, -1.594816439810796e-18);

/// Ai(t) from the Maclaurin series
/// Ai = Ai(0) f(t) + Ai'(0) g(t), f and g the standard ascending series.
fn ai(t: f64) -> f64 {
    let t3 = Dd::from_f64(t).mul(Dd::from_f64(t)).mul(Dd::from_f64(t));
    let mut fsum = Dd::from_f64(1.0);
    let mut fterm = Dd::from_f64(1.0);
    let mut gsum = Dd::from_f64(t);
    let mut gterm = Dd::from_f64(t);
    for k in 0u64..400 {
        let k = k as f64;
        fterm = fterm.mul(t3).div_f64((3.0 * k + 2.0) * (3.0 * k + 3.0));
        gterm = gterm.mul(t3).div_f64((3.0 * k + 3.0) * (3.0 * k + 4.0));
        fsum = fsum.add(fterm);
        gsum = gsum.add(gterm);
        if fterm.hi.abs() < 1e-40 && gterm.hi.abs() < 1e-40 {
            break;
        }
    }
    // Ai'(0) < 0, so the g part subtracts
    AI0.mul(fsum).sub(AIP0.mul(gsum)).hi
}

fn zeros_table() -> &'static [f64; 10] {
    static TABLE: OnceLock<[f64; 10]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut zeros = [0.0f64; 10];
        let mut found = 0usize;
        let mut t = -0.5;
        let mut f_prev = ai(t);
        while found < 10 {
            let t_next = t - 0.05;
            let f_next = ai(t_next);
            if f_prev * f_next <= 0.0 && f_prev != 0.0 {
                let (mut a, mut b) = (t, t_next); // f(a) = f_prev side
                let mut fa = f_prev;
                for _ in 0..100 {
                    let m = 0.5 * (a + b);
                    let fm = ai(m);
                    if fa * fm <= 0.0 {
                        b = m;
                    } else {
                        a = m;
                        fa = fm;
                    }
                    if (b - a).abs() < 1e-15 * m.abs() {
                        break;
                    }
                }
                zeros[found] = 0.5 * (a + b);
                found += 1;
            }
            t = t_next;
            f_prev = f_next;
        }
        zeros
    })
}

/// The p-th zero of Ai (p = 1 is the first, closest to the origin).
/// Supported for p in 1..=10, the range in which the double-double
/// series keeps full f64 accuracy.
pub fn airy_zero(p: u32) -> Result<f64> {
    if p == 0 || p > 10 {
        return Err(Error::AiryOrder(p));
    }
    Ok(zeros_table()[(p - 1) as usize])
}
