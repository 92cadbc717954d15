//! Analytic matrix elements and assembly of S, T, Q, W.
//!
//! The Hamiltonian splits as `H(λ) = T + Q + λ W` over a basis sector, with
//! `S` the Gram (overlap) matrix. Angular integrals reduce to exact rational
//! multiples of π; radial integrals reduce to monomial moments (polynomial
//! family) or truncated Gaussian moments `∫ r^k e^{-r²} dr` (Gaussian
//! family). The kinetic matrix uses the symmetric gradient form
//! `T_ab = ⟨∇f_a, ∇f_b⟩ / 2`, which equals the `-∇²/2` form because every
//! basis function vanishes at the wall, and which is symmetric by
//! construction.
//!
//! Under `ScalarPolicy::ExactRational` (polynomial basis, rational radius)
//! every entry is held as the exact rational coefficient of π, so the first
//! rounding anywhere happens inside the eigensolver.

use rug::ops::Pow;
use rug::{Assign, Float, Rational};

use crate::basis::{enumerate, BasisKind, BasisSpec};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::model::Parity;
use crate::scalar::{format_sig, pi, powi, Real, ScalarPolicy};

/// An exact rational multiple of π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMultiple(pub Rational);

impl PiMultiple {
    pub fn zero() -> Self {
        PiMultiple(Rational::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Equal
    }

    pub fn to_float(&self, prec: u32) -> Float {
        Float::with_val(prec, &self.0) * pi(prec)
    }
}

/// `∫ A_j A_j' dφ` over a full turn for the sector's angular functions.
pub fn angular_overlap(parity: Parity, j: u32, jp: u32) -> PiMultiple {
    if j != jp {
        return PiMultiple::zero();
    }
    match (parity, j) {
        (Parity::Even, 0) => PiMultiple(Rational::from(2)),
        (Parity::Even, _) => PiMultiple(Rational::from(1)),
        (Parity::Odd, 0) => PiMultiple::zero(),
        (Parity::Odd, _) => PiMultiple(Rational::from(1)),
    }
}

/// `∫ A_j cos(φ) A_j' dφ`: the dipole selection rule `|j - j'| = 1`.
pub fn angular_dipole(parity: Parity, j: u32, jp: u32) -> PiMultiple {
    let (lo, hi) = (j.min(jp), j.max(jp));
    if hi - lo != 1 {
        return PiMultiple::zero();
    }
    match parity {
        Parity::Even => {
            if lo == 0 {
                PiMultiple(Rational::from(1))
            } else {
                PiMultiple(Rational::from((1, 2)))
            }
        }
        Parity::Odd => {
            if lo == 0 {
                PiMultiple::zero()
            } else {
                PiMultiple(Rational::from((1, 2)))
            }
        }
    }
}

/// `∫ A_j' A_j'' dφ` for the angular derivatives (gradient form): `j² π` on
/// the diagonal for `j ≥ 1`, zero otherwise.
fn angular_gradient(parity: Parity, j: u32, jp: u32) -> PiMultiple {
    if j != jp || j == 0 {
        return PiMultiple::zero();
    }
    let _ = parity;
    PiMultiple(Rational::from(j) * Rational::from(j))
}

/// Exact monomial moment `∫_0^{r0} r^k dr = r0^{k+1} / (k+1)`.
pub fn radial_moment_poly(k: u32, r0: &Rational) -> Rational {
    Rational::from(r0.pow(k + 1)) / Rational::from(k + 1)
}

/// Float version of the monomial moment.
pub fn radial_moment_poly_float(k: u32, r0: &Float) -> Float {
    let prec = r0.prec();
    powi(r0, k + 1) / Float::with_val(prec, k + 1)
}

/// Truncated Gaussian moments `g_k = ∫_0^{r0} r^k e^{-r²} dr` for
/// `k = 0..=kmax`, each equal to `γ((k+1)/2, r0²) / 2`.
///
/// Uses the upward recurrence `γ(a+1, x) = a γ(a, x) - x^a e^{-x}` from the
/// closed-form bases `γ(1, x) = 1 - e^{-x}` and `γ(1/2, x) = √π erf(√x)`.
/// The recurrence cancels digits once `a` exceeds `x`, so the computation
/// runs at an internally raised precision sized from the worst-case loss and
/// rounds down to `prec` at the end.
pub fn radial_moments_gauss(kmax: u32, r0: &Float, prec: u32) -> Vec<Float> {
    let amax = (kmax as f64 + 1.0) / 2.0;
    let x_f64 = (r0.to_f64() * r0.to_f64()).max(1e-300);
    let mut loss_bits = 0.0f64;
    let mut a = 1.0f64;
    while a <= amax + 1.0 {
        let ratio = (a / x_f64).ln() / std::f64::consts::LN_2;
        if ratio > 0.0 {
            loss_bits += ratio;
        }
        a += 0.5;
    }
    let work = prec + 48 + loss_bits.ceil() as u32;

    let x = Float::with_val(work, r0.clone().square());
    let emx = Float::with_val(work, x.clone() * -1i32).exp();
    let sqrt_x = x.clone().sqrt();
    // gamma(1/2, x) and gamma(1, x)
    let mut g_half = sqrt_x.clone().erf();
    g_half *= pi(work).sqrt();
    let mut g_int = Float::with_val(work, 1u32);
    g_int -= &emx;

    let mut out = Vec::with_capacity(kmax as usize + 1);
    // x^a e^{-x} tracked incrementally along each chain
    let mut pow_half = Float::with_val(work, &sqrt_x * &emx); // x^{1/2} e^{-x}
    let mut pow_int = Float::with_val(work, &x * &emx); // x^{1} e^{-x}
    let mut a_half = Float::with_val(work, Rational::from((1, 2)));
    let mut a_int = Float::with_val(work, 1u32);
    for k in 0..=kmax {
        let half_chain = k % 2 == 0; // a = (k+1)/2 is a half-integer
        let g = if half_chain { &g_half } else { &g_int };
        let mut v = Float::with_val(prec, g);
        v /= 2u32;
        out.push(v);
        // advance the chain that produced this k to its next a
        if half_chain {
            let mut next = Float::with_val(work, &a_half * &g_half);
            next -= &pow_half;
            g_half = next;
            pow_half *= &x;
            a_half += 1u32;
        } else {
            let mut next = Float::with_val(work, &a_int * &g_int);
            next -= &pow_int;
            g_int = next;
            pow_int *= &x;
            a_int += 1u32;
        }
    }
    out
}

/// Single truncated Gaussian moment at the policy's working precision.
pub fn radial_moment_gauss(k: u32, r0: &Float, policy: ScalarPolicy) -> Result<Float> {
    if policy.is_exact() {
        return Err(Error::Policy(
            "Gaussian moments are transcendental; use a float policy".to_string(),
        ));
    }
    Ok(radial_moments_gauss(k, r0, policy.work_bits()).pop().expect("nonempty"))
}

/// Matrix entries of one block, exact or floating.
#[derive(Debug, Clone)]
enum Entries {
    /// Rational coefficients of π.
    Exact(Vec<Rational>),
    /// Literal values (π included).
    Float(Vec<Float>),
}

impl Entries {
    fn to_mat(&self, rows: usize, cols: usize, prec: u32) -> Mat {
        let mut m = Mat::zeros(rows, cols, prec);
        match self {
            Entries::Exact(v) => {
                let pi_v = pi(prec + 8);
                for i in 0..rows {
                    for j in 0..cols {
                        let val = Float::with_val(prec + 8, &v[i * cols + j]) * &pi_v;
                        m.at_mut(i, j).assign(&val);
                    }
                }
            }
            Entries::Float(v) => {
                for i in 0..rows {
                    for j in 0..cols {
                        m.at_mut(i, j).assign(&v[i * cols + j]);
                    }
                }
            }
        }
        m
    }

}

/// Scalar used during assembly: exact rational or float, never mixed.
#[derive(Debug, Clone)]
enum Sc {
    Q(Rational),
    F(Float),
}

impl Sc {
    fn zero_like(&self) -> Sc {
        match self {
            Sc::Q(_) => Sc::Q(Rational::new()),
            Sc::F(f) => Sc::F(Float::new(f.prec())),
        }
    }

    fn add(&self, o: &Sc) -> Sc {
        match (self, o) {
            (Sc::Q(a), Sc::Q(b)) => Sc::Q(Rational::from(a + b)),
            (Sc::F(a), Sc::F(b)) => Sc::F(Float::with_val(a.prec(), a + b)),
            _ => unreachable!("mixed assembly scalars"),
        }
    }

    fn sub(&self, o: &Sc) -> Sc {
        match (self, o) {
            (Sc::Q(a), Sc::Q(b)) => Sc::Q(Rational::from(a - b)),
            (Sc::F(a), Sc::F(b)) => Sc::F(Float::with_val(a.prec(), a - b)),
            _ => unreachable!("mixed assembly scalars"),
        }
    }

    fn mul(&self, o: &Sc) -> Sc {
        match (self, o) {
            (Sc::Q(a), Sc::Q(b)) => Sc::Q(Rational::from(a * b)),
            (Sc::F(a), Sc::F(b)) => Sc::F(Float::with_val(a.prec(), a * b)),
            _ => unreachable!("mixed assembly scalars"),
        }
    }

    fn mul_i64(&self, k: i64) -> Sc {
        match self {
            Sc::Q(a) => Sc::Q(Rational::from(a * Rational::from(k))),
            Sc::F(a) => Sc::F(Float::with_val(a.prec(), a * k)),
        }
    }

    fn div_u32(&self, k: u32) -> Sc {
        match self {
            Sc::Q(a) => Sc::Q(Rational::from(a / Rational::from(k))),
            Sc::F(a) => Sc::F(Float::with_val(a.prec(), a / k)),
        }
    }

    fn mul_rational(&self, r: &Rational) -> Sc {
        match self {
            Sc::Q(a) => Sc::Q(Rational::from(a * r)),
            Sc::F(a) => Sc::F(Float::with_val(a.prec(), a * Float::with_val(a.prec(), r))),
        }
    }
}

/// Contiguous rows of one angular frequency inside a sector matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockRange {
    pub j: u32,
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone)]
struct BlockData {
    range: BlockRange,
    s: Entries,
    t: Entries,
    q: Entries,
}

/// Which of the four assembled matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Overlap,
    Kinetic,
    Quadratic,
    Dipole,
}

impl MatrixKind {
    pub fn tag(&self) -> &'static str {
        match self {
            MatrixKind::Overlap => "s",
            MatrixKind::Kinetic => "t",
            MatrixKind::Quadratic => "q",
            MatrixKind::Dipole => "w",
        }
    }
}

/// The assembled symmetric matrix family of one basis sector.
///
/// `S`, `T`, `Q` are block diagonal in the angular frequency `j`; the dipole
/// matrix `W` couples only adjacent `j` blocks. Only those blocks are stored;
/// `matrix()` materializes the dense form on demand.
#[derive(Debug, Clone)]
pub struct MatrixSet {
    pub spec: BasisSpec,
    pub r0: Real,
    pub policy: ScalarPolicy,
    dim: usize,
    blocks: Vec<BlockData>,
    /// Dipole coupling between block `b` and block `b + 1`.
    couplings: Vec<Entries>,
    pub warnings: Vec<String>,
}

impl MatrixSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn block_ranges(&self) -> Vec<BlockRange> {
        self.blocks.iter().map(|b| b.range).collect()
    }

    /// Dense per-block matrix at the given precision.
    pub fn block_matrix(&self, kind: MatrixKind, block: usize, prec: u32) -> Mat {
        let b = &self.blocks[block];
        let n = b.range.len;
        match kind {
            MatrixKind::Overlap => b.s.to_mat(n, n, prec),
            MatrixKind::Kinetic => b.t.to_mat(n, n, prec),
            MatrixKind::Quadratic => b.q.to_mat(n, n, prec),
            MatrixKind::Dipole => panic!("dipole blocks live on adjacent pairs"),
        }
    }

    /// Dense dipole coupling between block `b` and `b + 1`.
    pub fn coupling_matrix(&self, block: usize, prec: u32) -> Mat {
        let rows = self.blocks[block].range.len;
        let cols = self.blocks[block + 1].range.len;
        self.couplings[block].to_mat(rows, cols, prec)
    }

    /// Materialized dense matrix (mostly zeros off the structural blocks).
    pub fn matrix(&self, kind: MatrixKind, prec: u32) -> Mat {
        let mut out = Mat::zeros(self.dim, self.dim, prec);
        match kind {
            MatrixKind::Dipole => {
                for (bi, c) in self.couplings.iter().enumerate() {
                    let ra = self.blocks[bi].range;
                    let rb = self.blocks[bi + 1].range;
                    let m = c.to_mat(ra.len, rb.len, prec);
                    for a in 0..ra.len {
                        for b in 0..rb.len {
                            out.at_mut(ra.start + a, rb.start + b).assign(m.at(a, b));
                            out.at_mut(rb.start + b, ra.start + a).assign(m.at(a, b));
                        }
                    }
                }
            }
            _ => {
                for (bi, blk) in self.blocks.iter().enumerate() {
                    let r = blk.range;
                    let m = self.block_matrix(kind, bi, prec);
                    for a in 0..r.len {
                        for b in 0..r.len {
                            out.at_mut(r.start + a, r.start + b).assign(m.at(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Dense `H(λ) = T + Q + λ W`.
    pub fn hamiltonian(&self, lambda: &Float, prec: u32) -> Mat {
        let mut h = self.matrix(MatrixKind::Kinetic, prec);
        let q = self.matrix(MatrixKind::Quadratic, prec);
        let w = self.matrix(MatrixKind::Dipole, prec);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut v = h.at(i, j).clone();
                v += q.at(i, j);
                v += Float::with_val(prec, lambda * w.at(i, j));
                h.set(i, j, v);
            }
        }
        h
    }

    /// JSON dump with decimal-string entries, for debugging and goldens.
    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let prec = self.policy.work_bits().max((digits as f64 * crate::scalar::LOG2_10) as u32 + 16);
        let dump = |kind: MatrixKind| -> Vec<String> {
            let m = self.matrix(kind, prec);
            let mut rows = Vec::with_capacity(self.dim * self.dim);
            for i in 0..self.dim {
                for j in 0..self.dim {
                    rows.push(format_sig(m.at(i, j), digits));
                }
            }
            rows
        };
        serde_json::json!({
            "spec": {
                "kind": self.spec.kind.tag(),
                "parity": self.spec.parity.tag(),
                "n": self.spec.n,
            },
            "r0": self.r0.to_string(),
            "policy": self.policy.to_string(),
            "dim": self.dim,
            "matrices": {
                "s": dump(MatrixKind::Overlap),
                "t": dump(MatrixKind::Kinetic),
                "q": dump(MatrixKind::Quadratic),
                "w": dump(MatrixKind::Dipole),
            },
        })
    }
}

/// Assemble the matrix family for a sector.
pub fn assemble(spec: &BasisSpec, r0: &Real, policy: ScalarPolicy) -> Result<MatrixSet> {
    let indices = enumerate(spec)?;
    let dim = indices.len();
    let mut warnings = Vec::new();

    if policy.is_exact() {
        if spec.kind != BasisKind::Polynomial {
            return Err(Error::Policy(
                "exact rational assembly requires the polynomial basis".to_string(),
            ));
        }
        if !r0.is_exact() {
            return Err(Error::Policy(
                "exact rational assembly requires an exactly known radius".to_string(),
            ));
        }
    }
    if r0.to_f64() <= 1e-4 {
        warnings.push(format!(
            "r0 = {} is extremely small; overlap conditioning degrades as r0^(2N)",
            r0
        ));
    }

    let kmax = 2 * spec.n + 5;
    let work = policy.work_bits();
    let (moments, r0_sc): (Vec<Sc>, Sc) = match (policy, spec.kind) {
        (ScalarPolicy::ExactRational, _) => {
            let r = r0.as_exact().expect("checked above");
            let moms = (0..=kmax).map(|k| Sc::Q(radial_moment_poly(k, r))).collect();
            (moms, Sc::Q(r.clone()))
        }
        (_, BasisKind::Polynomial) => {
            let rf = r0.to_float(work);
            let moms = (0..=kmax).map(|k| Sc::F(radial_moment_poly_float(k, &rf))).collect();
            (moms, Sc::F(rf))
        }
        (_, BasisKind::Gaussian) => {
            let rf = r0.to_float(work);
            let moms = radial_moments_gauss(kmax, &rf, work).into_iter().map(Sc::F).collect();
            (moms, Sc::F(rf))
        }
    };
    let mom = |k: i64| -> Sc {
        debug_assert!(k >= 0);
        moments[k as usize].clone()
    };
    let r0_sq = r0_sc.mul(&r0_sc);

    // (r0 - r)^2 weighted moment combination around base power P
    let wall2 = |p: i64| -> Sc {
        let a = r0_sq.mul(&mom(p + 1));
        let b = r0_sc.mul(&mom(p + 2)).mul_i64(2);
        a.sub(&b).add(&mom(p + 3))
    };

    // blocks of equal j are contiguous in enumeration order
    let mut blocks: Vec<BlockData> = Vec::new();
    let mut couplings: Vec<Entries> = Vec::new();
    let mut start = 0usize;
    let jmin = spec.j_min();
    for j in jmin..=spec.n {
        let ilist: Vec<u32> = (j.max(jmin)..=spec.n).collect();
        let len = ilist.len();
        let alpha = angular_overlap(spec.parity, j, j);
        let grad = angular_gradient(spec.parity, j, j);
        let mut s_e = Vec::with_capacity(len * len);
        let mut t_e = Vec::with_capacity(len * len);
        let mut q_e = Vec::with_capacity(len * len);
        for (a, &i) in ilist.iter().enumerate() {
            for (_b, &ip) in ilist.iter().enumerate() {
                let p = (i + ip) as i64;
                let s_rad = wall2(p);
                let q_rad = wall2(p + 2).div_u32(2);
                let t1 = kinetic_radial(spec.kind, i, ip, &r0_sc, &r0_sq, &moments);
                let entry_s = s_rad.mul_rational(&alpha.0);
                let entry_q = q_rad.mul_rational(&alpha.0);
                let mut entry_t = t1.mul_rational(&alpha.0);
                if !grad.is_zero() {
                    // centrifugal part: ∫ r^{P-1} (r0-r)^2 [e^{-r²}] dr
                    let t2 = r0_sq
                        .mul(&mom(p - 1))
                        .sub(&r0_sc.mul(&mom(p)).mul_i64(2))
                        .add(&mom(p + 1));
                    entry_t = entry_t.add(&t2.mul_rational(&grad.0));
                }
                entry_t = entry_t.div_u32(2);
                s_e.push(entry_s);
                t_e.push(entry_t);
                q_e.push(entry_q);
                let _ = a;
            }
        }
        blocks.push(BlockData {
            range: BlockRange { j, start, len },
            s: pack(s_e, policy),
            t: pack(t_e, policy),
            q: pack(q_e, policy),
        });
        start += len;

        if j < spec.n {
            let jp = j + 1;
            let wang = angular_dipole(spec.parity, j, jp);
            let ilist_p: Vec<u32> = (jp..=spec.n).collect();
            let mut w_e = Vec::with_capacity(len * ilist_p.len());
            for &i in &ilist {
                for &ip in &ilist_p {
                    let p = (i + ip) as i64;
                    let w_rad = wall2(p + 1);
                    w_e.push(w_rad.mul_rational(&wang.0));
                }
            }
            couplings.push(pack(w_e, policy));
        }
    }

    Ok(MatrixSet {
        spec: *spec,
        r0: r0.clone(),
        policy,
        dim,
        blocks,
        couplings,
        warnings,
    })
}

/// `∫ u_i' u_{i'}' r dr` for the radial factors (gradient kinetic term).
fn kinetic_radial(kind: BasisKind, i: u32, ip: u32, r0: &Sc, r0_sq: &Sc, moments: &[Sc]) -> Sc {
    let p = (i + ip) as i64;
    let mom = |k: i64| -> &Sc { &moments[k as usize] };
    match kind {
        BasisKind::Polynomial => {
            // u' = r^{i-1} (i r0 - (i+1) r)
            let mut acc = mom(p + 1).mul_i64((i as i64 + 1) * (ip as i64 + 1));
            let cross = i as i64 * (ip as i64 + 1) + ip as i64 * (i as i64 + 1);
            acc = acc.sub(&r0.mul(mom(p)).mul_i64(cross));
            if i > 0 && ip > 0 {
                acc = acc.add(&r0_sq.mul(mom(p - 1)).mul_i64(i as i64 * ip as i64));
            }
            acc
        }
        BasisKind::Gaussian => {
            // u' = e^{-r²/2} r^{i-1} (i r0 - (i+1) r - r0 r² + r³):
            // convolve the two cubic coefficient lists
            let coeffs = |ii: u32| -> [Sc; 4] {
                [
                    r0.mul_i64(ii as i64),
                    r0.zero_like().sub(&one_like(r0).mul_i64(ii as i64 + 1)),
                    r0.zero_like().sub(r0),
                    one_like(r0),
                ]
            };
            let ca = coeffs(i);
            let cb = coeffs(ip);
            let mut acc = r0.zero_like();
            for (u, cu) in ca.iter().enumerate() {
                for (v, cv) in cb.iter().enumerate() {
                    if is_zero_sc(cu) || is_zero_sc(cv) {
                        continue;
                    }
                    let k = p - 1 + (u + v) as i64;
                    acc = acc.add(&cu.mul(cv).mul(mom(k)));
                }
            }
            acc
        }
    }
}

fn one_like(model: &Sc) -> Sc {
    match model {
        Sc::Q(_) => Sc::Q(Rational::from(1)),
        Sc::F(f) => Sc::F(Float::with_val(f.prec(), 1u32)),
    }
}

fn is_zero_sc(s: &Sc) -> bool {
    match s {
        Sc::Q(q) => q.cmp0() == std::cmp::Ordering::Equal,
        Sc::F(f) => f.is_zero(),
    }
}

/// Exact entries stay as coefficients of π; float entries get π multiplied
/// in here so they hold the literal matrix values.
fn pack(entries: Vec<Sc>, policy: ScalarPolicy) -> Entries {
    if policy.is_exact() {
        Entries::Exact(
            entries
                .into_iter()
                .map(|e| match e {
                    Sc::Q(q) => q,
                    Sc::F(_) => unreachable!("exact policy produced a float"),
                })
                .collect(),
        )
    } else {
        let pi_v = pi(policy.work_bits());
        Entries::Float(
            entries
                .into_iter()
                .map(|e| match e {
                    Sc::F(mut f) => {
                        f *= &pi_v;
                        f
                    }
                    Sc::Q(_) => unreachable!("float policy produced a rational"),
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::BasisKind;

    fn even_poly(n: u32) -> BasisSpec {
        BasisSpec::new(BasisKind::Polynomial, Parity::Even, n).unwrap()
    }

    #[test]
    fn angular_integrals() {
        let two_pi = angular_overlap(Parity::Even, 0, 0);
        assert_eq!(two_pi.0, Rational::from(2));
        assert_eq!(angular_overlap(Parity::Even, 2, 2).0, Rational::from(1));
        assert!(angular_overlap(Parity::Even, 1, 2).is_zero());
        assert!(angular_overlap(Parity::Odd, 0, 0).is_zero());

        assert_eq!(angular_dipole(Parity::Even, 0, 1).0, Rational::from(1));
        assert_eq!(angular_dipole(Parity::Even, 1, 0).0, Rational::from(1));
        assert_eq!(angular_dipole(Parity::Even, 1, 2).0, Rational::from((1, 2)));
        assert!(angular_dipole(Parity::Odd, 1, 1).is_zero());
        assert!(angular_dipole(Parity::Even, 3, 5).is_zero());
    }

    #[test]
    fn poly_moments() {
        let one = Rational::from(1);
        assert_eq!(radial_moment_poly(1, &one), Rational::from((1, 2)));
        assert_eq!(radial_moment_poly(5, &Rational::from(2)), Rational::from((32, 3)));
        let r = Rational::from((1, 100));
        assert_eq!(radial_moment_poly(0, &r), r);
    }

    #[test]
    fn gauss_moments_closed_forms() {
        let r0 = Float::with_val(256, 1u32);
        let g = radial_moments_gauss(2, &r0, 256);
        // g_1 = (1 - e^{-1}) / 2
        let expect = (Float::with_val(256, 1u32) - Float::with_val(256, -1i32).exp()) / 2u32;
        let d = Float::with_val(256, &g[1] - &expect).abs();
        assert!(d.to_f64() < 1e-70);
        // g_0 = sqrt(pi)/2 erf(1)
        let expect0 = pi(256).sqrt() * Float::with_val(256, 1u32).erf() / 2u32;
        let d0 = Float::with_val(256, &g[0] - &expect0).abs();
        assert!(d0.to_f64() < 1e-70);
        // effectively complete integral: g_1 at large r0 -> 1/2
        let big = Float::with_val(256, 40u32);
        let g = radial_moments_gauss(1, &big, 256);
        let d = Float::with_val(256, &g[1] - Rational::from((1, 2))).abs();
        assert!(d.to_f64() < 1e-70);
    }

    #[test]
    fn one_by_one_exact() {
        let ms = assemble(&even_poly(0), &Real::from_int(1), ScalarPolicy::ExactRational).unwrap();
        assert_eq!(ms.dim(), 1);
        let prec = 128;
        let s = ms.matrix(MatrixKind::Overlap, prec);
        let t = ms.matrix(MatrixKind::Kinetic, prec);
        let q = ms.matrix(MatrixKind::Quadratic, prec);
        let w = ms.matrix(MatrixKind::Dipole, prec);
        let pi_v = pi(prec);
        assert!((Float::with_val(prec, s.at(0, 0) / &pi_v).to_f64() - 1.0 / 6.0).abs() < 1e-30);
        assert!((Float::with_val(prec, t.at(0, 0) / &pi_v).to_f64() - 0.5).abs() < 1e-30);
        assert!((Float::with_val(prec, q.at(0, 0) / &pi_v).to_f64() - 1.0 / 60.0).abs() < 1e-30);
        assert!(w.at(0, 0).is_zero());
        // single-function energy estimate (T + Q) / S = 3.1
        let e = Float::with_val(prec, Float::with_val(prec, t.at(0, 0) + q.at(0, 0)) / s.at(0, 0));
        assert!((e.to_f64() - 3.1).abs() < 1e-30);
    }

    #[test]
    fn selection_rule_blocks() {
        let ms = assemble(&even_poly(4), &Real::from_int(1), ScalarPolicy::ExactRational).unwrap();
        let w = ms.matrix(MatrixKind::Dipole, 96);
        let idx = enumerate(&even_poly(4)).unwrap();
        for (a, ia) in idx.iter().enumerate() {
            for (b, ib) in idx.iter().enumerate() {
                let dj = ia.j.abs_diff(ib.j);
                if dj != 1 {
                    assert!(w.at(a, b).is_zero(), "W[{a}][{b}] must vanish for |dj| = {dj}");
                }
            }
        }
        // exact symmetry of all four matrices
        for kind in [MatrixKind::Overlap, MatrixKind::Kinetic, MatrixKind::Quadratic, MatrixKind::Dipole] {
            assert!(ms.matrix(kind, 96).max_asymmetry().is_zero());
        }
    }

    #[test]
    fn exact_policy_rejects_gaussian() {
        let spec = BasisSpec::new(BasisKind::Gaussian, Parity::Even, 2).unwrap();
        assert!(matches!(
            assemble(&spec, &Real::from_int(1), ScalarPolicy::ExactRational),
            Err(Error::Policy(_))
        ));
    }
}
