//! Trial-function families for the variational solve.
//!
//! Both families are indexed by a radial power `i` and an angular frequency
//! `j`, with the hard-wall factor `(r0 - r)` built in:
//!
//! * polynomial:  `r^i (r0 - r) cos(jφ)` (even) / `sin(jφ)` (odd)
//! * Gaussian:    the same times `exp(-r²/2)`, for large boxes
//!
//! Even states use `0 ≤ j ≤ i ≤ N`, odd states `1 ≤ j ≤ i ≤ N`. Enumeration
//! order is fixed (ascending `j`, then ascending `i`) so that matrices and
//! dumped files are reproducible; it also keeps equal-`j` blocks contiguous,
//! which the solver exploits.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::Parity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Polynomial,
    Gaussian,
}

impl BasisKind {
    pub fn tag(&self) -> &'static str {
        match self {
            BasisKind::Polynomial => "poly",
            BasisKind::Gaussian => "gauss",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A concrete truncated basis: family, parity sector, and order `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisSpec {
    pub kind: BasisKind,
    pub parity: Parity,
    pub n: u32,
}

impl BasisSpec {
    pub fn new(kind: BasisKind, parity: Parity, n: u32) -> Result<Self> {
        if parity == Parity::Odd && n == 0 {
            return Err(Error::EmptyBasis(
                "odd sector needs N >= 1 (indices start at i = j = 1)".to_string(),
            ));
        }
        Ok(BasisSpec { kind, parity, n })
    }

    /// Number of basis functions: `(N+1)(N+2)/2` even, `N(N+1)/2` odd.
    pub fn size(&self) -> usize {
        let n = self.n as usize;
        match self.parity {
            Parity::Even => (n + 1) * (n + 2) / 2,
            Parity::Odd => n * (n + 1) / 2,
        }
    }

    /// Lowest angular frequency in this sector.
    pub fn j_min(&self) -> u32 {
        match self.parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for BasisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} N={}", self.kind, self.parity, self.n)
    }
}

/// One basis function: radial power `i`, angular frequency `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub i: u32,
    pub j: u32,
}

/// All indices of the sector in the fixed deterministic order.
pub fn enumerate(spec: &BasisSpec) -> Result<Vec<BasisIndex>> {
    if spec.parity == Parity::Odd && spec.n == 0 {
        return Err(Error::EmptyBasis("odd sector with N = 0".to_string()));
    }
    let mut out = Vec::with_capacity(spec.size());
    for j in spec.j_min()..=spec.n {
        for i in j..=spec.n {
            out.push(BasisIndex { i, j });
        }
    }
    debug_assert_eq!(out.len(), spec.size());
    Ok(out)
}

/// Point evaluation of a basis function (diagnostics and test oracles; the
/// production matrix elements are analytic).
pub fn evaluate(spec: &BasisSpec, idx: BasisIndex, r0: f64, r: f64, phi: f64) -> Result<f64> {
    if !(0.0..=r0).contains(&r) {
        return Err(Error::Domain(format!("r = {r} outside [0, {r0}]")));
    }
    let radial = r.powi(idx.i as i32)
        * (r0 - r)
        * match spec.kind {
            BasisKind::Polynomial => 1.0,
            BasisKind::Gaussian => (-r * r / 2.0).exp(),
        };
    let ang = phi * f64::from(idx.j);
    Ok(radial
        * match spec.parity {
            Parity::Even => ang.cos(),
            Parity::Odd => ang.sin(),
        })
}

/// Radial derivative of a basis function, for the gradient-form kinetic
/// oracle in tests.
pub fn evaluate_dr(spec: &BasisSpec, idx: BasisIndex, r0: f64, r: f64, phi: f64) -> Result<f64> {
    if !(0.0..=r0).contains(&r) {
        return Err(Error::Domain(format!("r = {r} outside [0, {r0}]")));
    }
    let i = idx.i as i32;
    let rpow = |k: i32| if k < 0 { 0.0 } else { r.powi(k) };
    let mut du = f64::from(idx.i) * rpow(i - 1) * (r0 - r) - rpow(i);
    if spec.kind == BasisKind::Gaussian {
        du -= r * rpow(i) * (r0 - r);
        du *= (-r * r / 2.0).exp();
    }
    let ang = phi * f64::from(idx.j);
    Ok(du
        * match spec.parity {
            Parity::Even => ang.cos(),
            Parity::Odd => ang.sin(),
        })
}

/// Angular derivative divided by r (the other gradient component).
pub fn evaluate_dphi_over_r(
    spec: &BasisSpec,
    idx: BasisIndex,
    r0: f64,
    r: f64,
    phi: f64,
) -> Result<f64> {
    if !(0.0..=r0).contains(&r) {
        return Err(Error::Domain(format!("r = {r} outside [0, {r0}]")));
    }
    if idx.j == 0 {
        return Ok(0.0);
    }
    if r == 0.0 {
        // radial factor has a zero of order i >= j >= 1 at the origin
        return Ok(0.0);
    }
    let radial = r.powi(idx.i as i32)
        * (r0 - r)
        * match spec.kind {
            BasisKind::Polynomial => 1.0,
            BasisKind::Gaussian => (-r * r / 2.0).exp(),
        };
    let j = f64::from(idx.j);
    let ang = phi * j;
    Ok(radial / r
        * j
        * match spec.parity {
            Parity::Even => -ang.sin(),
            Parity::Odd => ang.cos(),
        })
}
