//! Dimensionless problem definition and level bookkeeping.
//!
//! The Hamiltonian solved everywhere else is the dimensionless
//! `H = -∇²/2 + r²/2 + λ r cos φ` on the disk `r < r0` with a hard wall at
//! `r = r0`. This module converts physical oscillator data to `(r0, λ)` and
//! provides the separable large-box energies used as reference asymptotes.

use std::fmt;

use rug::Float;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Angular reflection symmetry of a state (φ → −φ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn tag(&self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Dimensionless model instance: box radius `r0 > 0` and field strength λ.
#[derive(Debug, Clone)]
pub struct ModelParams {
    pub r0: Real,
    pub lambda: Real,
}

impl ModelParams {
    pub fn new(r0: Real, lambda: Real) -> Result<Self> {
        if !r0.is_positive() {
            return Err(Error::InvalidInput(format!("r0 must be positive, got {r0}")));
        }
        Ok(ModelParams { r0, lambda })
    }

    /// Convenience constructor from decimal strings, kept exact.
    pub fn parse(r0: &str, lambda: &str) -> Result<Self> {
        ModelParams::new(Real::parse(r0)?, Real::parse(lambda)?)
    }
}

/// Physical oscillator in a box: all positive except the field magnitude,
/// in any self-consistent unit system.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalInputs {
    pub mass: f64,
    pub force_constant: f64,
    pub charge: f64,
    pub field: f64,
    pub hbar: f64,
    pub box_radius: f64,
}

impl PhysicalInputs {
    fn validate(&self) -> Result<()> {
        let named = [
            ("mass", self.mass),
            ("force_constant", self.force_constant),
            ("charge", self.charge),
            ("hbar", self.hbar),
            ("box_radius", self.box_radius),
        ];
        for (name, v) in named {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidInput(format!("{name} must be positive, got {v}")));
            }
        }
        if !self.field.is_finite() || self.field < 0.0 {
            return Err(Error::InvalidInput(format!(
                "field must be non-negative, got {}",
                self.field
            )));
        }
        Ok(())
    }
}

/// Result of the nondimensionalization: model parameters plus the length and
/// energy units that undo it.
#[derive(Debug, Clone)]
pub struct Nondimensional {
    pub params: ModelParams,
    pub length_unit: Float,
    pub energy_unit: Float,
}

/// Convert physical inputs to the dimensionless `(r0, λ)` pair.
///
/// The length unit is `L = sqrt(hbar / (m ω))` with `ω = sqrt(k/m)`, the
/// energy unit is `hbar ω`, and `λ = m e f L³ / hbar²`.
pub fn nondimensionalize(phys: &PhysicalInputs, prec: u32) -> Result<Nondimensional> {
    phys.validate()?;
    let m = Float::with_val(prec, phys.mass);
    let k = Float::with_val(prec, phys.force_constant);
    let hbar = Float::with_val(prec, phys.hbar);
    let omega = Float::with_val(prec, &k / &m).sqrt();
    let length_unit = Float::with_val(prec, &hbar / Float::with_val(prec, &m * &omega)).sqrt();
    let energy_unit = Float::with_val(prec, &hbar * &omega);
    let l3 = Float::with_val(prec, &length_unit * &length_unit) * &length_unit;
    let mut lambda = Float::with_val(prec, &m * &l3);
    lambda *= Float::with_val(prec, phys.charge);
    lambda *= Float::with_val(prec, phys.field);
    lambda /= Float::with_val(prec, &hbar * &hbar);
    let r0 = Float::with_val(prec, phys.box_radius) / &length_unit;
    let params = ModelParams::new(
        Real::Approx(r0),
        if phys.field == 0.0 {
            Real::from_int(0)
        } else {
            Real::Approx(lambda)
        },
    )?;
    Ok(Nondimensional { params, length_unit, energy_unit })
}

/// Quantum numbers of a level, assigned at λ = 0 and kept under the field by
/// ordering within the parity sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LevelLabel {
    /// Radial quantum number (number of radial nodes), n ≥ 0.
    pub n: u32,
    /// Angular quantum number ν = |m| ≥ 0.
    pub nu: u32,
    pub parity: Parity,
}

impl LevelLabel {
    pub fn new(n: u32, nu: u32, parity: Parity) -> Result<Self> {
        if parity == Parity::Odd && nu == 0 {
            return Err(Error::InvalidInput(
                "odd-parity levels start at nu = 1".to_string(),
            ));
        }
        Ok(LevelLabel { n, nu, parity })
    }

    pub fn even(n: u32, nu: u32) -> Self {
        LevelLabel { n, nu, parity: Parity::Even }
    }

    pub fn odd(n: u32, nu: u32) -> Result<Self> {
        LevelLabel::new(n, nu, Parity::Odd)
    }
}

impl fmt::Display for LevelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}){}", self.n, self.nu, match self.parity {
            Parity::Even => "e",
            Parity::Odd => "o",
        })
    }
}

/// Separable limit of an unbounded box: `2n + ν + 1 − λ²/2`.
pub fn large_box_energy(label: &LevelLabel, lambda: f64) -> f64 {
    f64::from(2 * label.n + label.nu + 1) - lambda * lambda / 2.0
}

/// Same limit at arbitrary precision.
pub fn large_box_energy_float(label: &LevelLabel, lambda: &Float) -> Float {
    let prec = lambda.prec();
    let mut e = Float::with_val(prec, 2 * label.n + label.nu + 1);
    let mut sq = lambda.clone().square();
    sq /= 2u32;
    e -= sq;
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phys(m: f64, k: f64, e: f64, f: f64, hbar: f64, r0: f64) -> PhysicalInputs {
        PhysicalInputs {
            mass: m,
            force_constant: k,
            charge: e,
            field: f,
            hbar,
            box_radius: r0,
        }
    }

    #[test]
    fn unit_constants_zero_field() {
        let nd = nondimensionalize(&phys(1.0, 1.0, 1.0, 0.0, 1.0, 2.0), 128).unwrap();
        assert_eq!(nd.params.r0.to_f64(), 2.0);
        assert!(nd.params.lambda.is_zero());
        assert_eq!(nd.length_unit.to_f64(), 1.0);
        assert_eq!(nd.energy_unit.to_f64(), 1.0);
    }

    #[test]
    fn unit_length_passes_field_through() {
        let nd = nondimensionalize(&phys(1.0, 1.0, 1.0, 0.05, 1.0, 1.0), 128).unwrap();
        assert!((nd.params.lambda.to_f64() - 0.05).abs() < 1e-30);
        assert_eq!(nd.params.r0.to_f64(), 1.0);
    }

    #[test]
    fn stiff_oscillator() {
        // k = 4 gives omega = 2, L = 2^(-1/2), lambda = 2^(-3/2), r0 = sqrt(2)
        let nd = nondimensionalize(&phys(1.0, 4.0, 1.0, 1.0, 1.0, 1.0), 128).unwrap();
        assert!((nd.length_unit.to_f64() - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((nd.params.lambda.to_f64() - 0.125f64.sqrt()).abs() < 1e-15);
        assert!((nd.params.r0.to_f64() - 2f64.sqrt()).abs() < 1e-15);
        assert!((nd.energy_unit.to_f64() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(nondimensionalize(&phys(-1.0, 1.0, 1.0, 0.0, 1.0, 1.0), 64).is_err());
        assert!(nondimensionalize(&phys(1.0, 1.0, 1.0, 0.0, 0.0, 1.0), 64).is_err());
        assert!(ModelParams::parse("0", "1").is_err());
        assert!(LevelLabel::odd(0, 0).is_err());
    }

    #[test]
    fn large_box_values() {
        assert_eq!(large_box_energy(&LevelLabel::even(0, 0), 0.0), 1.0);
        assert_eq!(large_box_energy(&LevelLabel::even(0, 0), 5.0), -11.5);
        assert_eq!(large_box_energy(&LevelLabel::odd(1, 1).unwrap(), 0.0), 4.0);
        // even in lambda
        let l = LevelLabel::even(2, 1);
        assert_eq!(large_box_energy(&l, 1.5), large_box_energy(&l, -1.5));
    }
}
