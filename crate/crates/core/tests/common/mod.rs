//! Shared helpers for the integration suites: an independent quadrature
//! oracle for matrix entries and small comparison utilities.

use oscbox::basis::{evaluate, evaluate_dphi_over_r, evaluate_dr, BasisIndex, BasisSpec};
use oscbox::{BasisKind, MatrixKind};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Chebyshev-style initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0f64;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// 2D quadrature oracle for one matrix entry: composite Gauss-Legendre in r
/// times a trapezoid rule in φ (exact for trigonometric polynomials of the
/// degrees that occur here).
pub fn entry_oracle(
    spec: &BasisSpec,
    r0: f64,
    a: BasisIndex,
    b: BasisIndex,
    kind: MatrixKind,
) -> f64 {
    let panels = match spec.kind {
        BasisKind::Polynomial => 4,
        BasisKind::Gaussian => 8,
    };
    let rule = gauss_legendre(40);
    let m_ang = 8 * (spec.n as usize + 2);
    let dphi = 2.0 * std::f64::consts::PI / m_ang as f64;

    let mut total = 0.0;
    for p in 0..panels {
        let lo = r0 * p as f64 / panels as f64;
        let hi = r0 * (p + 1) as f64 / panels as f64;
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for &(x, w) in &rule {
            let r = mid + half * x;
            let mut ang = 0.0;
            for k in 0..m_ang {
                let phi = dphi * k as f64;
                ang += integrand(spec, r0, a, b, kind, r, phi);
            }
            total += w * half * ang * dphi * r;
        }
    }
    total
}

fn integrand(
    spec: &BasisSpec,
    r0: f64,
    a: BasisIndex,
    b: BasisIndex,
    kind: MatrixKind,
    r: f64,
    phi: f64,
) -> f64 {
    match kind {
        MatrixKind::Overlap => {
            evaluate(spec, a, r0, r, phi).unwrap() * evaluate(spec, b, r0, r, phi).unwrap()
        }
        MatrixKind::Quadratic => {
            0.5 * r
                * r
                * evaluate(spec, a, r0, r, phi).unwrap()
                * evaluate(spec, b, r0, r, phi).unwrap()
        }
        MatrixKind::Dipole => {
            r * phi.cos()
                * evaluate(spec, a, r0, r, phi).unwrap()
                * evaluate(spec, b, r0, r, phi).unwrap()
        }
        MatrixKind::Kinetic => {
            let dra = evaluate_dr(spec, a, r0, r, phi).unwrap();
            let drb = evaluate_dr(spec, b, r0, r, phi).unwrap();
            let dpa = evaluate_dphi_over_r(spec, a, r0, r, phi).unwrap();
            let dpb = evaluate_dphi_over_r(spec, b, r0, r, phi).unwrap();
            0.5 * (dra * drb + dpa * dpb)
        }
    }
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}
