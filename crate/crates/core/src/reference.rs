//! Independent reference spectra for the two box-size limits.
//!
//! Shrinking box: `r0² E` tends to the particle-in-a-circular-box levels
//! `j_{ν,s}² / 2` built from Bessel zeros. Growing box: `E_00` tends to the
//! shifted free oscillator `1 - λ²/2`. Both limits cross-check the
//! variational solver from entirely different math.

use rug::ops::NegAssign;
use rug::{Assign, Float};

use crate::basis::BasisKind;
use crate::eigensolver::SectorReduction;
use crate::error::{Error, Result};
use crate::model::Parity;
use crate::scalar::{Real, ScalarPolicy};

/// `J_ν(x)` by the ascending series, for integer ν and moderate `x`
/// (|x| ≤ 12 covers every zero needed here). Alternating-series
/// cancellation is absorbed by raised working precision.
pub fn bessel_j(nu: u32, x: &Float, policy: ScalarPolicy) -> Float {
    let target = policy.nominal_bits();
    // cancellation loses roughly x/ln2 bits near the largest term
    let guard = (x.to_f64().abs() * 1.5) as u32 + 48;
    let work = target + guard;
    let xw = Float::with_val(work, x);
    if xw.is_zero() {
        return Float::with_val(target, if nu == 0 { 1 } else { 0 });
    }
    let half = Float::with_val(work, &xw / 2u32);
    let half_sq = half.clone().square();
    // leading term (x/2)^ν / ν!
    let mut term = Float::with_val(work, 1u32);
    for k in 1..=nu {
        term *= &half;
        term /= k;
    }
    let mut sum = term.clone();
    let mut m = 0u32;
    let floor = {
        let mut f = Float::with_val(work, 1u32);
        f >>= work - 4;
        f
    };
    loop {
        m += 1;
        term *= &half_sq;
        term /= m;
        term /= m + nu;
        term.neg_assign();
        sum += &term;
        let mut rel = term.clone().abs();
        let scale = crate::scalar::fmax(sum.clone().abs(), &Float::with_val(work, 1e-30f64));
        rel /= &scale;
        if rel < floor || m > 500 {
            break;
        }
    }
    Float::with_val(target, &sum)
}

/// Derivative `J_ν'(x)` from the standard recurrence.
fn bessel_j_prime(nu: u32, x: &Float, policy: ScalarPolicy) -> Float {
    if nu == 0 {
        let j1 = bessel_j(1, x, policy);
        return -j1;
    }
    let a = bessel_j(nu - 1, x, policy);
    let b = bessel_j(nu + 1, x, policy);
    let prec = a.prec();
    Float::with_val(prec, &a - &b) / 2u32
}

/// The `s`-th positive zero `j_{ν,s}` of `J_ν`, `s ≥ 1`.
///
/// McMahon's expansion brackets the root; safeguarded Newton polishes it to
/// the policy precision.
pub fn bessel_zero(nu: u32, s: u32, policy: ScalarPolicy) -> Result<Float> {
    if s == 0 {
        return Err(Error::InvalidInput("zero index s starts at 1".to_string()));
    }
    let prec = policy.nominal_bits();
    // McMahon: j ≈ β - (4ν² - 1)/(8β), β = (s + ν/2 - 1/4) π
    let beta = (s as f64 + nu as f64 / 2.0 - 0.25) * std::f64::consts::PI;
    let guess = beta - (4.0 * (nu * nu) as f64 - 1.0) / (8.0 * beta);

    // bracket by sign change around the guess
    let eval64 = |x: f64| bessel_j(nu, &Float::with_val(64, x), ScalarPolicy::DoubleFloat).to_f64();
    let mut lo = guess - 0.5;
    let mut hi = guess + 0.5;
    let mut flo = eval64(lo);
    let mut fhi = eval64(hi);
    let mut widen = 0;
    while flo * fhi > 0.0 {
        lo -= 0.25;
        hi += 0.25;
        if lo < 0.0 {
            lo = 1e-6;
        }
        flo = eval64(lo);
        fhi = eval64(hi);
        widen += 1;
        if widen > 20 {
            return Err(Error::NoConvergence(format!(
                "could not bracket zero {s} of J_{nu}"
            )));
        }
    }

    let mut x = Float::with_val(prec, 0.5 * (lo + hi));
    let mut lo_f = Float::with_val(prec, lo);
    let mut hi_f = Float::with_val(prec, hi);
    let flo_sign = flo < 0.0;
    let floor = {
        let mut f = Float::with_val(prec, 1u32);
        f >>= prec - 8;
        f
    };
    for _ in 0..200 {
        let f = bessel_j(nu, &x, policy);
        let fp = bessel_j_prime(nu, &x, policy);
        // maintain the bracket
        if (f.cmp0() == Some(std::cmp::Ordering::Less)) == flo_sign {
            lo_f.assign(&x);
        } else {
            hi_f.assign(&x);
        }
        let mut step = Float::with_val(prec, &f / &fp);
        let next = Float::with_val(prec, &x - &step);
        if next < lo_f || next > hi_f {
            // Newton left the bracket: bisect
            x.assign(Float::with_val(prec, &lo_f + &hi_f) / 2u32);
        } else {
            x = next;
        }
        step.abs_mut();
        let mut tol = x.clone().abs();
        tol *= &floor;
        if step <= tol {
            return Ok(x);
        }
    }
    Err(Error::NoConvergence(format!("Newton stalled for zero {s} of J_{nu}")))
}

/// Ascending table of zeros of one Bessel order, with verification hooks.
#[derive(Debug, Clone)]
pub struct BesselZeroTable {
    pub nu: u32,
    pub zeros: Vec<Float>,
}

impl BesselZeroTable {
    pub fn compute(nu: u32, count: u32, policy: ScalarPolicy) -> Result<Self> {
        let zeros = (1..=count)
            .map(|s| bessel_zero(nu, s, policy))
            .collect::<Result<Vec<_>>>()?;
        Ok(BesselZeroTable { nu, zeros })
    }
}

/// Particle-in-a-circular-box level: `j_{ν,n+1}² / (2 r0²)`.
pub fn pib_energy(n: u32, nu: u32, r0: &Real, policy: ScalarPolicy) -> Result<Float> {
    let z = bessel_zero(nu, n + 1, policy)?;
    let prec = z.prec();
    let mut e = z.square();
    e /= 2u32;
    let r = r0.to_float(prec);
    e /= Float::with_val(prec, r.clone().square());
    Ok(e)
}

/// One row of the shrinking-box comparison.
#[derive(Debug, Clone)]
pub struct SmallBoxRow {
    /// `r0² E` from the variational solve.
    pub scaled_energy: Float,
    /// The matching particle-in-a-box level (unit disk).
    pub pib: Float,
    pub deviation: Float,
}

/// Compare `r0² E` of the lowest even levels against the Bessel-zero
/// spectrum. The field term scales away as `r0³`, so any moderate λ gives
/// the same digits; λ = 0.05 is used unless overridden.
pub fn small_box_check(
    r0: &Real,
    levels: usize,
    policy: ScalarPolicy,
    lambda: Option<&Real>,
) -> Result<Vec<SmallBoxRow>> {
    let default_lambda = Real::parse("0.05").expect("literal");
    let lam = lambda.unwrap_or(&default_lambda);
    let red = SectorReduction::build(BasisKind::Polynomial, Parity::Even, 12, r0, policy)?;
    let prec = policy.work_bits();
    let s = red.solve(&lam.to_float(prec), levels, false)?;
    // even-sector zero-field order at small r0: (0,0), (0,1), (0,2), (1,0), ...
    let labels = red.labels_ascending();
    let r0_f = r0.to_float(prec);
    let r0_sq = Float::with_val(prec, r0_f.square());
    let mut rows = Vec::with_capacity(levels);
    for (k, e) in s.values.iter().enumerate() {
        let (label, _) = &labels[k];
        let scaled = Float::with_val(prec, e * &r0_sq);
        let pib = pib_energy(label.n, label.nu, &Real::from_int(1), policy)?;
        let deviation = Float::with_val(prec, &scaled - &pib);
        rows.push(SmallBoxRow { scaled_energy: scaled, pib, deviation });
    }
    Ok(rows)
}

/// The growing-box table: ground-state energies on an `(r0, λ)` grid plus
/// the separable-limit row `1 - λ²/2`.
#[derive(Debug, Clone)]
pub struct LargeBoxTable {
    pub r0_values: Vec<Real>,
    pub lambda_values: Vec<Real>,
    /// `energies[row][col]` for `r0_values[row]`, `lambda_values[col]`.
    pub energies: Vec<Vec<Float>>,
    pub asymptote: Vec<Float>,
}

pub fn large_box_check(
    r0_values: &[Real],
    lambda_values: &[Real],
    policy: ScalarPolicy,
) -> Result<LargeBoxTable> {
    let prec = policy.work_bits();
    let mut energies = Vec::with_capacity(r0_values.len());
    for r0 in r0_values {
        let n = crate::eigensolver::default_order(BasisKind::Gaussian, r0);
        let red = SectorReduction::build(BasisKind::Gaussian, Parity::Even, n, r0, policy)?;
        let mut row = Vec::with_capacity(lambda_values.len());
        for lam in lambda_values {
            let s = red.solve(&lam.to_float(prec), 1, false)?;
            row.push(s.values[0].clone());
        }
        energies.push(row);
    }
    let asymptote = lambda_values
        .iter()
        .map(|lam| {
            let l = lam.to_float(prec);
            let mut e = Float::with_val(prec, 1u32);
            let mut sq = l.square();
            sq /= 2u32;
            e -= sq;
            e
        })
        .collect();
    Ok(LargeBoxTable {
        r0_values: r0_values.to_vec(),
        lambda_values: lambda_values.to_vec(),
        energies,
        asymptote,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::float_from_str;

    const D30: ScalarPolicy = ScalarPolicy::Decimal(30);

    #[test]
    fn series_special_values() {
        let z = bessel_j(0, &Float::with_val(64, 0), D30);
        assert_eq!(z.to_f64(), 1.0);
        let z = bessel_j(1, &Float::with_val(64, 0), D30);
        assert_eq!(z.to_f64(), 0.0);
        // J_0 at its first zero
        let x = float_from_str("2.404825557695773", 128).unwrap();
        let v = bessel_j(0, &x, D30);
        assert!(v.to_f64().abs() < 1e-12);
    }

    #[test]
    fn zeros_match_reference_values() {
        let cases = [
            (0u32, 1u32, "2.404825557695772768621631879"),
            (1, 1, "3.831705970207512315614435886"),
            (2, 1, "5.135622301840682556301401694"),
            (0, 2, "5.520078110286310649596604112"),
        ];
        for (nu, s, want) in cases {
            let z = bessel_zero(nu, s, D30).unwrap();
            let w = float_from_str(want, 160).unwrap();
            let d = Float::with_val(160, &z - &w).abs();
            assert!(d.to_f64() < 1e-26, "j_{nu},{s}: {z} vs {want}");
            // the zero really is a sign change of the series
            let lo = Float::with_val(160, &z - Float::with_val(160, 1e-6f64));
            let hi = Float::with_val(160, &z + Float::with_val(160, 1e-6f64));
            let flo = bessel_j(nu, &lo, D30).to_f64();
            let fhi = bessel_j(nu, &hi, D30).to_f64();
            assert!(flo * fhi < 0.0);
        }
    }

    #[test]
    fn zero_table_interlaces() {
        let t0 = BesselZeroTable::compute(0, 3, D30).unwrap();
        let t1 = BesselZeroTable::compute(1, 3, D30).unwrap();
        for s in 0..3 {
            assert!(t0.zeros[s] < t1.zeros[s]);
            if s + 1 < 3 {
                assert!(t1.zeros[s] < t0.zeros[s + 1]);
            }
        }
    }

    #[test]
    fn pib_levels() {
        let e = pib_energy(0, 0, &Real::from_int(1), D30).unwrap();
        assert!((e.to_f64() - 2.891592981).abs() < 1e-8);
        let e = pib_energy(0, 1, &Real::from_int(1), D30).unwrap();
        assert!((e.to_f64() - 7.340985321).abs() < 1e-8);
        let e = pib_energy(1, 0, &Real::from_int(1), D30).unwrap();
        assert!((e.to_f64() - 15.23563117).abs() < 1e-7);
    }
}
