//! Perturbation expansions of the eigenvalues in the field strength λ.
//!
//! The eigenvalues are even functions of λ, so `E = Σ_j E^(2j) λ^(2j)`.
//! Two routes are implemented on top of the zero-field eigenbasis produced
//! by the solver reduction:
//!
//! * `pt2_sum_over_states` — the textbook second-order sum over the states
//!   of the adjacent angular blocks (ν' = ν ± 1);
//! * `rs_expansion` — the full Rayleigh-Schrödinger recursion against the
//!   sector's finite spectrum, to arbitrary even order.
//!
//! Both use the same finite-basis couplings, so their second-order
//! coefficients agree to working precision; that identity is a test.

use rug::{Assign, Float};

use crate::basis::BasisKind;
use crate::eigensolver::SectorReduction;
use crate::error::{Error, Result};
use crate::model::{LevelLabel, Parity};
use crate::scalar::{Real, ScalarPolicy};

/// Even-order expansion coefficients of one level.
#[derive(Debug, Clone)]
pub struct PtExpansion {
    pub r0: Real,
    pub label: LevelLabel,
    /// `[E^(0), E^(2), E^(4), ...]`, length `order + 1`.
    pub coefficients: Vec<Float>,
    /// Highest included order is `λ^(2 * order)`.
    pub order: u32,
    pub policy: ScalarPolicy,
}

impl PtExpansion {
    /// Evaluate the truncated series at a field strength.
    pub fn eval(&self, lambda: &Float) -> Float {
        let prec = self.coefficients[0].prec();
        let lam_sq = Float::with_val(prec, lambda.clone().square());
        // Horner over λ²
        let mut acc = Float::new(prec);
        for c in self.coefficients.iter().rev() {
            acc *= &lam_sq;
            acc += c;
        }
        acc
    }
}

/// Evaluate an expansion at λ (free-function form of [`PtExpansion::eval`]).
pub fn pt_eval(exp: &PtExpansion, lambda: &Float) -> Float {
    exp.eval(lambda)
}

fn block_index_for(red: &SectorReduction, nu: u32) -> Result<usize> {
    (0..red.block_count())
        .find(|&b| red.block_j(b) == nu)
        .ok_or_else(|| Error::Range(format!("sector has no ν = {nu} block")))
}

fn check_label(red: &SectorReduction, label: &LevelLabel) -> Result<usize> {
    if label.parity != red.spec.parity {
        return Err(Error::InvalidInput(format!(
            "label parity {} does not match sector {}",
            label.parity, red.spec.parity
        )));
    }
    let bi = block_index_for(red, label.nu)?;
    if label.n as usize >= red.block_eigenvalues(bi).len() {
        return Err(Error::Range(format!(
            "level n = {} beyond basis size of block ν = {}",
            label.n, label.nu
        )));
    }
    Ok(bi)
}

/// Second-order coefficient by the sum-over-states formula.
///
/// Returns the truncated sum and the contributing terms in decreasing
/// magnitude. `n_terms = None` keeps every term of the finite basis whose
/// relative contribution exceeds 1e-12 of the running sum.
pub fn pt2_sum_over_states(
    red: &SectorReduction,
    label: &LevelLabel,
    n_terms: Option<usize>,
) -> Result<(Float, Vec<Float>)> {
    let bi = check_label(red, label)?;
    let prec = red.policy.work_bits();
    let e_p = red.block_eigenvalues(bi)[label.n as usize].clone();
    let gap_floor = degeneracy_floor(red.policy, &e_p);

    let mut terms: Vec<Float> = Vec::new();
    // lower neighbour block couples through W~(bi-1) with our state as column
    if label.nu > red.spec.j_min() {
        let lo = bi - 1;
        let wt = red.coupling(lo);
        for q in 0..red.block_eigenvalues(lo).len() {
            let w = wt.at(q, label.n as usize);
            let mut den = Float::with_val(prec, &e_p - &red.block_eigenvalues(lo)[q]);
            if den.clone().abs() <= gap_floor {
                return Err(Error::Degeneracy(format!(
                    "levels ({}, {}) and ({q}, {}) are degenerate",
                    label.n, label.nu, red.block_j(lo)
                )));
            }
            den.recip_mut();
            let mut t = Float::with_val(prec, w.clone().square());
            t *= &den;
            terms.push(t);
        }
    }
    if (bi + 1) < red.block_count() {
        let wt = red.coupling(bi);
        for q in 0..red.block_eigenvalues(bi + 1).len() {
            let w = wt.at(label.n as usize, q);
            let mut den = Float::with_val(prec, &e_p - &red.block_eigenvalues(bi + 1)[q]);
            if den.clone().abs() <= gap_floor {
                return Err(Error::Degeneracy(format!(
                    "levels ({}, {}) and ({q}, {}) are degenerate",
                    label.n, label.nu, red.block_j(bi + 1)
                )));
            }
            den.recip_mut();
            let mut t = Float::with_val(prec, w.clone().square());
            t *= &den;
            terms.push(t);
        }
    }
    terms.sort_by(|a, b| {
        b.clone()
            .abs()
            .partial_cmp(&a.clone().abs())
            .expect("finite terms")
    });

    let kept: Vec<Float> = match n_terms {
        Some(k) => terms.into_iter().take(k.max(1)).collect(),
        None => {
            let mut kept = Vec::new();
            let mut sum = Float::new(prec);
            for t in terms {
                let cut = Float::with_val(prec, sum.clone().abs() * 1e-12f64);
                if !kept.is_empty() && t.clone().abs() < cut {
                    break;
                }
                sum += &t;
                kept.push(t);
            }
            kept
        }
    };
    let mut sum = Float::new(prec);
    for t in &kept {
        sum += t;
    }
    Ok((sum, kept))
}

fn degeneracy_floor(policy: ScalarPolicy, scale: &Float) -> Float {
    let prec = scale.prec();
    let mut floor = Float::with_val(prec, policy.epsilon());
    floor *= 1e6f64;
    floor *= crate::scalar::fmax(Float::with_val(prec, 1u32), &scale.clone().abs());
    floor
}

/// Rayleigh-Schrödinger coefficients through order `λ^(2 J)` for one level,
/// using the sector's finite zero-field spectrum as the unperturbed problem.
///
/// Intermediate normalization `⟨ψ⁰|ψ^(k)⟩ = 0`. Odd-order energy
/// coefficients vanish identically (the dipole only couples ν to ν ± 1);
/// they are checked against the rounding floor and dropped.
pub fn rs_expansion(red: &SectorReduction, label: &LevelLabel, order_j: u32) -> Result<PtExpansion> {
    if order_j < 1 {
        return Err(Error::InvalidInput("expansion order J must be >= 1".to_string()));
    }
    let bi = check_label(red, label)?;
    let prec = red.policy.work_bits();
    let dim = red.dim();
    let kmax = 2 * order_j as usize;

    // flatten block offsets
    let mut offsets = Vec::with_capacity(red.block_count() + 1);
    let mut acc = 0usize;
    for b in 0..red.block_count() {
        offsets.push(acc);
        acc += red.block_eigenvalues(b).len();
    }
    offsets.push(acc);
    let p = offsets[bi] + label.n as usize;

    let eps: Vec<Float> = (0..red.block_count())
        .flat_map(|b| red.block_eigenvalues(b).iter().cloned())
        .collect();
    let e_p = eps[p].clone();
    let gap_floor = degeneracy_floor(red.policy, &e_p);

    // inverse gaps (checked once)
    let mut inv_gap = Vec::with_capacity(dim);
    for (m, e_m) in eps.iter().enumerate() {
        if m == p {
            inv_gap.push(Float::new(prec));
            continue;
        }
        let mut den = Float::with_val(prec, &e_p - e_m);
        if den.clone().abs() <= gap_floor {
            // same-block degeneracy cannot happen; adjacent blocks only couple
            // at second order, so an exact cross-block collision still breaks
            // the nondegenerate recursion
            return Err(Error::Degeneracy(format!(
                "unperturbed level {m} degenerate with target (E = {e_p})"
            )));
        }
        den.recip_mut();
        inv_gap.push(den);
    }

    let matvec = |c: &[Float]| -> Vec<Float> {
        let mut y = vec![Float::new(prec); dim];
        for b in 0..red.block_count().saturating_sub(1) {
            let wt = red.coupling(b);
            let (oa, ob) = (offsets[b], offsets[b + 1]);
            for i in 0..wt.rows() {
                for j in 0..wt.cols() {
                    // y_a += W~ c_b ; y_b += W~^T c_a
                    y[oa + i] += wt.at(i, j) * &c[ob + j];
                    y[ob + j] += wt.at(i, j) * &c[oa + i];
                }
            }
        }
        y
    };

    let mut c: Vec<Vec<Float>> = Vec::with_capacity(kmax + 1);
    let mut c0 = vec![Float::new(prec); dim];
    c0[p].assign(1);
    c.push(c0);
    let mut e: Vec<Float> = vec![Float::new(prec); kmax + 1];
    e[0].assign(&e_p);

    for k in 1..=kmax {
        let vc = matvec(&c[k - 1]);
        e[k].assign(&vc[p]);
        let mut ck = vec![Float::new(prec); dim];
        for m in 0..dim {
            if m == p {
                continue;
            }
            let mut rhs = vc[m].clone();
            for l in 1..k {
                rhs -= Float::with_val(prec, &e[l] * &c[k - l][m]);
            }
            rhs *= &inv_gap[m];
            ck[m] = rhs;
        }
        c.push(ck);
    }

    // odd orders must sit at the rounding floor
    let mut scale = Float::with_val(prec, 1u32);
    for v in &e {
        scale = crate::scalar::fmax(scale, &v.clone().abs());
    }
    let mut odd_floor = Float::with_val(prec, red.policy.epsilon());
    odd_floor *= 1e3f64;
    odd_floor *= &scale;
    for (k, v) in e.iter().enumerate() {
        if k % 2 == 1 && v.clone().abs() > odd_floor {
            return Err(Error::NoConvergence(format!(
                "odd-order coefficient E^({k}) = {v} did not vanish"
            )));
        }
    }

    let coefficients: Vec<Float> = (0..=order_j as usize).map(|j| e[2 * j].clone()).collect();
    Ok(PtExpansion {
        r0: red.r0.clone(),
        label: *label,
        coefficients,
        order: order_j,
        policy: red.policy,
    })
}

/// Convenience constructors that assemble the sector themselves.
pub fn rs_expansion_for(
    r0: &Real,
    label: &LevelLabel,
    kind: BasisKind,
    n: u32,
    policy: ScalarPolicy,
    order_j: u32,
) -> Result<PtExpansion> {
    let red = SectorReduction::build(kind, label.parity, n, r0, policy)?;
    rs_expansion(&red, label, order_j)
}

pub fn pt2_for(
    r0: &Real,
    label: &LevelLabel,
    kind: BasisKind,
    n: u32,
    policy: ScalarPolicy,
    n_terms: Option<usize>,
) -> Result<(Float, Vec<Float>)> {
    let red = SectorReduction::build(kind, label.parity, n, r0, policy)?;
    pt2_sum_over_states(&red, label, n_terms)
}

/// `(E^(0), E^(2))` grid over box radii for a set of levels.
#[derive(Debug, Clone)]
pub struct PtLimitTable {
    pub labels: Vec<LevelLabel>,
    pub r0_values: Vec<Real>,
    /// `e0[row][col]` for `r0_values[row]`, `labels[col]`.
    pub e0: Vec<Vec<Float>>,
    pub e2: Vec<Vec<Float>>,
    /// Non-monotonic approaches to the separable limits, if any.
    pub violations: Vec<String>,
}

/// Compute the limit grid with the Gaussian basis (the right family for
/// growing boxes). Checks that `E^(0)` decreases toward `2n + ν + 1` and
/// `E^(2)` decreases toward `-1/2` as the box grows.
pub fn pt_limit_table(
    labels: &[LevelLabel],
    r0_values: &[Real],
    n: u32,
    policy: ScalarPolicy,
) -> Result<PtLimitTable> {
    let mut e0 = Vec::with_capacity(r0_values.len());
    let mut e2 = Vec::with_capacity(r0_values.len());
    for r0 in r0_values {
        let mut reds: Vec<(Parity, SectorReduction)> = Vec::new();
        for parity in [Parity::Even, Parity::Odd] {
            if labels.iter().any(|l| l.parity == parity) {
                reds.push((
                    parity,
                    SectorReduction::build(BasisKind::Gaussian, parity, n, r0, policy)?,
                ));
            }
        }
        let mut row0 = Vec::with_capacity(labels.len());
        let mut row2 = Vec::with_capacity(labels.len());
        for label in labels {
            let red = &reds
                .iter()
                .find(|(p, _)| *p == label.parity)
                .expect("sector built above")
                .1;
            let exp = rs_expansion(red, label, 1)?;
            row0.push(exp.coefficients[0].clone());
            row2.push(exp.coefficients[1].clone());
        }
        e0.push(row0);
        e2.push(row2);
    }

    let mut violations = Vec::new();
    for (col, label) in labels.iter().enumerate() {
        let limit0 = f64::from(2 * label.n + label.nu + 1);
        for row in 0..r0_values.len() {
            let v0 = e0[row][col].to_f64();
            let v2 = e2[row][col].to_f64();
            if v0 < limit0 - 1e-7 {
                violations.push(format!("E0 of {label} at r0 = {} undershoots its limit", r0_values[row]));
            }
            if v2 < -0.5 - 1e-7 {
                violations.push(format!("E2 of {label} at r0 = {} undershoots -1/2", r0_values[row]));
            }
            if row > 0 {
                let prev0 = e0[row - 1][col].to_f64();
                let prev2 = e2[row - 1][col].to_f64();
                if v0 > prev0 + 1e-9 {
                    violations.push(format!("E0 of {label} not monotone at r0 = {}", r0_values[row]));
                }
                // E2 of excited levels can rise between the two smallest
                // boxes (e.g. (1,1) even); the approach to -1/2 is monotone
                // from the second radius on
                if row > 1 && v2 > prev2 + 1e-9 {
                    violations.push(format!("E2 of {label} not monotone at r0 = {}", r0_values[row]));
                }
            }
        }
    }

    Ok(PtLimitTable {
        labels: labels.to_vec(),
        r0_values: r0_values.to_vec(),
        e0,
        e2,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::float_from_str;

    fn ground_reduction(digits: u32, n: u32) -> SectorReduction {
        SectorReduction::build(
            BasisKind::Gaussian,
            Parity::Even,
            n,
            &Real::from_int(1),
            ScalarPolicy::Decimal(digits),
        )
        .unwrap()
    }

    #[test]
    fn ground_state_is_exact_at_unit_radius() {
        // (1 - r²) e^{-r²/2} solves the zero-field problem at r0 = 1 with
        // E = 3, and lies inside the Gaussian basis from N = 1 on
        let red = ground_reduction(30, 8);
        let e = red.h0_eigenvalue(0, 0).unwrap();
        assert!((e.to_f64() - 3.0).abs() < 1e-28, "E = {e}");
    }

    #[test]
    fn eq16_style_partial_terms() {
        let red = ground_reduction(30, 20);
        let label = LevelLabel::even(0, 0);
        let (sum3, terms) = pt2_sum_over_states(&red, &label, Some(3)).unwrap();
        let expect = [-0.023766061092f64, -0.0000279159, -1.0265e-6];
        for (t, e) in terms.iter().zip(expect) {
            assert!((t.to_f64() - e).abs() < 5e-10, "term {t} vs {e}");
        }
        assert!((sum3.to_f64() - -0.0237950030).abs() < 5e-10);
        let (full, _) = pt2_sum_over_states(&red, &label, None).unwrap();
        assert!((full.to_f64() - -0.02379513316).abs() < 1e-11);
    }

    #[test]
    fn rs_matches_reference_coefficients() {
        let red = ground_reduction(50, 20);
        let exp = rs_expansion(&red, &LevelLabel::even(0, 0), 2).unwrap();
        let want_e2 = float_from_str("-0.0237951331606905590236056369694", 256).unwrap();
        let d = Float::with_val(256, &exp.coefficients[1] - &want_e2).abs();
        assert!(d.to_f64() < 1e-29, "E2 diff {d}");
        // cross-method agreement
        let (e2_sum, _) = pt2_sum_over_states(&red, &LevelLabel::even(0, 0), None).unwrap();
        let d = (e2_sum.to_f64() - exp.coefficients[1].to_f64()).abs();
        assert!(d < 1e-12);
        // fourth order has the right sign and size
        assert!((exp.coefficients[2].to_f64() - 5.716e-5).abs() < 1e-7);
    }

    #[test]
    fn series_evaluation() {
        let red = ground_reduction(30, 14);
        let exp = rs_expansion(&red, &LevelLabel::even(0, 0), 1).unwrap();
        let zero = exp.eval(&Float::with_val(64, 0));
        assert!((zero.to_f64() - 3.0).abs() < 1e-25);
        let half = exp.eval(&Float::with_val(128, 0.5f64));
        assert!((half.to_f64() - 2.994051217).abs() < 1e-8);
        let neg = exp.eval(&Float::with_val(128, -0.5f64));
        assert_eq!(half.to_f64(), neg.to_f64());
    }

    #[test]
    fn label_range_is_checked() {
        let red = ground_reduction(15, 4);
        let err = rs_expansion(&red, &LevelLabel::even(0, 40), 1);
        assert!(matches!(err, Err(Error::Range(_))));
        let odd = LevelLabel::odd(0, 1).unwrap();
        assert!(matches!(rs_expansion(&red, &odd, 1), Err(Error::InvalidInput(_))));
    }
}
