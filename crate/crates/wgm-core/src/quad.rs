//! One-dimensional quadrature used by the radial mode integrals.
//!
//! A 7-point Gauss-Legendre rule is exact through degree 13, which is
//! plenty per quarter-oscillation panel of the radial envelopes. The
//! adaptive driver bisects panels, estimating the error of a panel from
//! the change under halving; acceptance is relative to the panel value
//! itself, so panels in the deep evanescent tail resolve immediately.

const GL_X: [f64; 7] = [
    -0.9491079123427585,
    -0.7415311855993945,
    -0.4058451513773972,
    0.0,
    0.4058451513773972,
    0.7415311855993945,
    0.9491079123427585,
];

const GL_W: [f64; 7] = [
    0.1294849661688697,
    0.27970539148927664,
    0.3818300505051189,
    0.4179591836734694,
    0.3818300505051189,
    0.27970539148927664,
    0.1294849661688697,
];

/// Single 7-point Gauss-Legendre panel on [a, b]. Endpoints are never
/// evaluated, so integrands singular only at a panel edge are safe.
pub fn gauss7<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s = 0.0;
    for i in 0..7 {
        s += GL_W[i] * f(c + h * GL_X[i]);
    }
    s * h
}

/// Adaptive bisection of [a, b] to relative tolerance `rel_tol` per
/// panel. Deterministic: the panel stack is explicit and ordering never
/// depends on float comparisons beyond the acceptance test.
pub fn adaptive<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64, rel_tol: f64) -> f64 {
    let whole = gauss7(f, a, b);
    let mut stack = vec![(a, b, whole, 0u32)];
    let mut total = 0.0;
    while let Some((a, b, coarse, depth)) = stack.pop() {
        let m = 0.5 * (a + b);
        let left = gauss7(f, a, m);
        let right = gauss7(f, m, b);
        let fine = left + right;
        let err = (coarse - fine).abs();
        if err <= rel_tol * fine.abs() + f64::MIN_POSITIVE || depth >= 40 {
            total += fine;
        } else {
            stack.push((a, m, left, depth + 1));
            stack.push((m, b, right, depth + 1));
        }
    }
    total
}
