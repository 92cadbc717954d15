//! Dense symmetric linear algebra over MPFR floats.
//!
//! Everything here is precision-generic: tolerances derive from the mantissa
//! size of the matrix entries, so the same code serves 53-bit and 500-bit
//! solves. Two symmetric eigensolvers are provided: cyclic Jacobi (the
//! default for moderate sizes, simplest to trust at any precision) and
//! Householder tridiagonalization + implicit QL (much faster for the large
//! matrices produced by big boxes).

use rug::ops::NegAssign;
use rug::{Assign, Float};

use crate::error::{Error, Result};

/// Dense row-major matrix of MPFR floats, all entries at one precision.
#[derive(Debug, Clone)]
pub struct Mat {
    rows: usize,
    cols: usize,
    prec: u32,
    data: Vec<Float>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, prec: u32) -> Self {
        let data = vec![Float::new(prec); rows * cols];
        Mat { rows, cols, prec, data }
    }

    pub fn identity(n: usize, prec: u32) -> Self {
        let mut m = Mat::zeros(n, n, prec);
        for i in 0..n {
            m.data[i * n + i].assign(1u32);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Float {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Float {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Float) {
        self.data[i * self.cols + j] = v;
    }

    /// Round a copy of the matrix to a new precision.
    pub fn with_prec(&self, prec: u32) -> Mat {
        let mut out = Mat::zeros(self.rows, self.cols, prec);
        for (dst, src) in out.data.iter_mut().zip(&self.data) {
            dst.assign(src);
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Float> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows, self.prec);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    /// Largest |entry| (zero for an empty matrix).
    pub fn max_abs(&self) -> Float {
        let mut m = Float::new(self.prec);
        for v in &self.data {
            let a = v.clone().abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    /// max |A - A^T|, for symmetry diagnostics.
    pub fn max_asymmetry(&self) -> Float {
        let mut m = Float::new(self.prec);
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                let d = Float::with_val(self.prec, self.at(i, j) - self.at(j, i)).abs();
                if d > m {
                    m = d;
                }
            }
        }
        m
    }
}

/// C = A * B.
pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.cols, b.rows);
    let prec = a.prec.max(b.prec);
    let mut c = Mat::zeros(a.rows, b.cols, prec);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = Float::new(prec);
            for k in 0..a.cols {
                acc += a.at(i, k) * b.at(k, j);
            }
            c.set(i, j, acc);
        }
    }
    c
}

/// C = A^T * B.
pub fn mat_tr_mul(a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.rows, b.rows);
    let prec = a.prec.max(b.prec);
    let mut c = Mat::zeros(a.cols, b.cols, prec);
    for i in 0..a.cols {
        for j in 0..b.cols {
            let mut acc = Float::new(prec);
            for k in 0..a.rows {
                acc += a.at(k, i) * b.at(k, j);
            }
            c.set(i, j, acc);
        }
    }
    c
}

/// Cholesky factor L (lower) of a symmetric positive definite matrix,
/// together with the smallest and largest pivot encountered.
pub fn cholesky_lower(a: &Mat) -> Result<(Mat, Float, Float)> {
    let n = a.rows;
    let prec = a.prec;
    let mut l = Mat::zeros(n, n, prec);
    let mut min_piv = Float::new(prec);
    let mut max_piv = Float::new(prec);
    for j in 0..n {
        let mut d = a.at(j, j).clone();
        for k in 0..j {
            d -= l.at(j, k) * l.at(j, k);
        }
        if d.cmp0() != Some(std::cmp::Ordering::Greater) {
            return Err(Error::RankDeficient { dim: n, kept: j, need: n });
        }
        let piv = d.sqrt();
        if j == 0 {
            min_piv.assign(&piv);
            max_piv.assign(&piv);
        } else {
            if piv < min_piv {
                min_piv.assign(&piv);
            }
            if piv > max_piv {
                max_piv.assign(&piv);
            }
        }
        l.set(j, j, piv);
        for i in (j + 1)..n {
            let mut s = a.at(i, j).clone();
            for k in 0..j {
                s -= l.at(i, k) * l.at(j, k);
            }
            s /= l.at(j, j);
            l.set(i, j, s);
        }
    }
    Ok((l, min_piv, max_piv))
}

/// Solve L X = B for X, with L lower triangular.
pub fn solve_lower(l: &Mat, b: &Mat) -> Mat {
    let n = l.rows;
    let m = b.cols;
    let prec = l.prec.max(b.prec);
    let mut x = b.with_prec(prec);
    for j in 0..m {
        for i in 0..n {
            let mut s = x.at(i, j).clone();
            for k in 0..i {
                s -= l.at(i, k) * x.at(k, j);
            }
            s /= l.at(i, i);
            x.set(i, j, s);
        }
    }
    x
}

/// Solve L^T X = B for X, with L lower triangular.
pub fn solve_lower_transposed(l: &Mat, b: &Mat) -> Mat {
    let n = l.rows;
    let m = b.cols;
    let prec = l.prec.max(b.prec);
    let mut x = b.with_prec(prec);
    for j in 0..m {
        for i in (0..n).rev() {
            let mut s = x.at(i, j).clone();
            for k in (i + 1)..n {
                s -= l.at(k, i) * x.at(k, j);
            }
            s /= l.at(i, i);
            x.set(i, j, s);
        }
    }
    x
}

/// A = L^{-1} H L^{-T} for symmetric H; the result is symmetrized.
pub fn reduce_to_standard(l: &Mat, h: &Mat) -> Mat {
    let y = solve_lower(l, h); // Y = L^{-1} H
    let yt = y.transpose();
    let mut a = solve_lower(l, &yt); // A^T = L^{-1} Y^T, A symmetric
    let n = a.rows;
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = Float::with_val(a.prec, a.at(i, j) + a.at(j, i)) / 2u32;
            a.set(i, j, avg.clone());
            a.set(j, i, avg);
        }
    }
    a
}

/// Eigendecomposition of a symmetric matrix, ascending eigenvalues.
///
/// Dispatches to cyclic Jacobi for moderate sizes and to Householder + QL
/// beyond `JACOBI_MAX_DIM` (Jacobi needs several times more arithmetic and
/// the difference is hours versus minutes for the largest boxes).
pub fn sym_eigen(a: &Mat, want_vectors: bool) -> Result<(Vec<Float>, Mat)> {
    if a.rows <= JACOBI_MAX_DIM {
        jacobi_eigen(a, want_vectors)
    } else {
        tridiag_eigen(a, want_vectors)
    }
}

pub const JACOBI_MAX_DIM: usize = 110;

/// Cyclic Jacobi with the classic threshold strategy.
pub fn jacobi_eigen(a_in: &Mat, want_vectors: bool) -> Result<(Vec<Float>, Mat)> {
    let n = a_in.rows;
    assert_eq!(n, a_in.cols);
    let prec = a_in.prec;
    let mut a = a_in.clone();
    let mut v = if want_vectors {
        Mat::identity(n, prec)
    } else {
        Mat::zeros(0, 0, prec)
    };
    let mut d: Vec<Float> = (0..n).map(|i| a.at(i, i).clone()).collect();
    if n <= 1 {
        return Ok((d, v));
    }
    let mut b = d.clone();
    let mut z = vec![Float::new(prec); n];

    // termination scale: off-diagonal mass must drop below the rounding
    // floor of the diagonal magnitudes
    let mut scale = Float::new(prec);
    for i in 0..n {
        for j in i..n {
            let x = a.at(i, j).clone().abs();
            if x > scale {
                scale = x;
            }
        }
    }
    if scale.is_zero() {
        return Ok((d, v));
    }
    // safety-net termination: remaining off-diagonal mass below the
    // collective rounding floor (entries are usually zeroed exactly first)
    let mut floor = Float::with_val(prec, &scale * ((n * n) as u32));
    floor >>= prec - 2;

    let mut t1 = Float::new(prec);
    let mut t2 = Float::new(prec);
    let mut t3 = Float::new(prec);
    let mut t4 = Float::new(prec);

    const MAX_SWEEPS: usize = 60;
    for sweep in 0..MAX_SWEEPS {
        let mut off = Float::new(prec);
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                off += a.at(p, q).clone().abs();
            }
        }
        if off.is_zero() || off < floor {
            let mut vals = d;
            let perm = ascending_permutation(&vals);
            apply_permutation(&mut vals, &perm);
            if want_vectors {
                v = permute_columns(&v, &perm);
            }
            return Ok((vals, v));
        }
        let thresh = if sweep < 3 {
            let mut t = off.clone();
            t /= (5 * n * n) as u32;
            t
        } else {
            Float::new(prec)
        };
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq_abs = a.at(p, q).clone().abs();
                // late sweeps: zero out entries that no longer perturb the
                // diagonal at working precision
                let g = Float::with_val(prec, &apq_abs * 100u32);
                let dp_mag = d[p].clone().abs();
                let dq_mag = d[q].clone().abs();
                if sweep > 3
                    && Float::with_val(prec, &dp_mag + &g) == dp_mag
                    && Float::with_val(prec, &dq_mag + &g) == dq_mag
                {
                    a.at_mut(p, q).assign(0);
                    continue;
                }
                if apq_abs <= thresh {
                    continue;
                }
                // rotation angle
                t1.assign(&d[q]);
                t1 -= &d[p]; // h
                let habs = t1.clone().abs();
                let t = if Float::with_val(prec, &habs + &g) == habs {
                    // |theta| huge: t = a_pq / h
                    let mut t = a.at(p, q).clone();
                    t /= &t1;
                    t
                } else {
                    t2.assign(&t1);
                    t2 /= a.at(p, q);
                    t2 /= 2u32; // theta
                    let mut den = t2.clone().square();
                    den += 1u32;
                    den.sqrt_mut();
                    den += t2.clone().abs();
                    let mut t = Float::with_val(prec, 1u32);
                    t /= &den;
                    if t2.cmp0() == Some(std::cmp::Ordering::Less) {
                        t = -t;
                    }
                    t
                };
                let mut c = t.clone().square();
                c += 1u32;
                c.sqrt_mut();
                c.recip_mut();
                let s = Float::with_val(prec, &t * &c);
                let mut tau = c.clone();
                tau += 1u32;
                tau.recip_mut();
                tau *= &s;
                let h = Float::with_val(prec, &t * a.at(p, q));
                z[p] -= &h;
                z[q] += &h;
                d[p] -= &h;
                d[q] += &h;
                a.at_mut(p, q).assign(0);

                // rotate remaining entries; (r1, c1) pairs with (r2, c2)
                let mut rotate = |a: &mut Mat, i1: usize, j1: usize, i2: usize, j2: usize| {
                    t1.assign(a.at(i1, j1)); // g
                    t2.assign(a.at(i2, j2)); // h
                    t3.assign(&t1);
                    t3 *= &tau;
                    t3 += &t2;
                    t3 *= &s; // s*(h + g*tau)
                    t4.assign(&t1);
                    t4 -= &t3;
                    a.at_mut(i1, j1).assign(&t4);
                    t3.assign(&t2);
                    t3 *= &tau;
                    t3.neg_assign();
                    t3 += &t1;
                    t3 *= &s; // s*(g - h*tau)
                    t4.assign(&t2);
                    t4 += &t3;
                    a.at_mut(i2, j2).assign(&t4);
                };
                for j in 0..p {
                    rotate(&mut a, j, p, j, q);
                }
                for j in (p + 1)..q {
                    rotate(&mut a, p, j, j, q);
                }
                for j in (q + 1)..n {
                    rotate(&mut a, p, j, q, j);
                }
                if want_vectors {
                    for j in 0..n {
                        rotate(&mut v, j, p, j, q);
                    }
                }
            }
        }
        for p in 0..n {
            b[p] += &z[p];
            z[p].assign(0);
            d[p].assign(&b[p]);
        }
    }
    Err(Error::NoConvergence(format!(
        "jacobi sweep limit reached (n = {n}, prec = {prec})"
    )))
}

/// Householder tridiagonalization with accumulated transform (tred2),
/// followed by implicit-shift QL (tql2). Precision-generic port of the
/// classic EISPACK routines.
pub fn tridiag_eigen(a_in: &Mat, want_vectors: bool) -> Result<(Vec<Float>, Mat)> {
    let n = a_in.rows;
    assert_eq!(n, a_in.cols);
    let prec = a_in.prec;
    if n == 0 {
        return Ok((Vec::new(), Mat::zeros(0, 0, prec)));
    }
    let mut z = a_in.clone();
    let mut d = vec![Float::new(prec); n];
    let mut e = vec![Float::new(prec); n];

    // --- tred2 ---
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = Float::new(prec);
        if l > 0 {
            let mut scale = Float::new(prec);
            for k in 0..=l {
                scale += z.at(i, k).clone().abs();
            }
            if scale.is_zero() {
                e[i].assign(z.at(i, l));
            } else {
                for k in 0..=l {
                    let mut v = z.at(i, k).clone();
                    v /= &scale;
                    h += v.clone().square();
                    z.set(i, k, v);
                }
                let mut f = z.at(i, l).clone();
                let mut g = h.clone().sqrt();
                if f.cmp0() != Some(std::cmp::Ordering::Less) {
                    g = -g;
                }
                e[i].assign(&scale * &g);
                h -= &f * &g;
                f -= &g;
                z.set(i, l, f.clone());
                let mut ftmp = Float::new(prec);
                for j in 0..=l {
                    z.set(j, i, Float::with_val(prec, z.at(i, j) / &h));
                    let mut g = Float::new(prec);
                    for k in 0..=j {
                        g += z.at(j, k) * z.at(i, k);
                    }
                    for k in (j + 1)..=l {
                        g += z.at(k, j) * z.at(i, k);
                    }
                    e[j].assign(&g / &h);
                }
                ftmp.assign(0);
                for j in 0..=l {
                    ftmp += &e[j] * z.at(i, j);
                }
                let mut hh = ftmp;
                hh /= &h;
                hh /= 2u32;
                for j in 0..=l {
                    let mut ej = e[j].clone();
                    ej -= &hh * z.at(i, j);
                    e[j] = ej;
                }
                for j in 0..=l {
                    let f = z.at(i, j).clone();
                    let g = e[j].clone();
                    for k in 0..=j {
                        let mut v = z.at(j, k).clone();
                        v -= &f * &e[k];
                        v -= &g * z.at(i, k);
                        z.set(j, k, v);
                    }
                }
            }
        } else {
            e[i].assign(z.at(i, l));
        }
        d[i] = h;
    }
    d[0].assign(0);
    e[0].assign(0);
    // accumulate transforms
    for i in 0..n {
        let l = i;
        if !d[i].is_zero() {
            for j in 0..l {
                let mut g = Float::new(prec);
                for k in 0..l {
                    g += z.at(i, k) * z.at(k, j);
                }
                for k in 0..l {
                    let mut v = z.at(k, j).clone();
                    v -= &g * z.at(k, i);
                    z.set(k, j, v);
                }
            }
        }
        d[i].assign(z.at(i, i));
        z.at_mut(i, i).assign(1);
        if i > 0 {
            for k in 0..i {
                z.at_mut(i, k).assign(0);
                z.at_mut(k, i).assign(0);
            }
        }
    }

    // --- tql2 ---
    let mut eps = Float::with_val(prec, 1u32);
    eps >>= prec - 2;
    for i in 1..n {
        let v = e[i].clone();
        e[i - 1] = v;
    }
    e[n - 1].assign(0);
    for l in 0..n {
        let mut iter = 0usize;
        loop {
            // find small subdiagonal element
            let mut m = l;
            while m < n - 1 {
                let dd = Float::with_val(prec, d[m].clone().abs() + d[m + 1].clone().abs());
                let bound = Float::with_val(prec, &eps * &dd);
                if e[m].clone().abs() <= bound {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 100 {
                return Err(Error::NoConvergence(format!(
                    "ql iteration limit at eigenvalue {l} (n = {n}, prec = {prec})"
                )));
            }
            // shift
            let mut g = Float::with_val(prec, &d[l + 1] - &d[l]);
            g /= Float::with_val(prec, 2u32 * &e[l]);
            let mut r = pythag(&g, &Float::with_val(prec, 1u32));
            if g.cmp0() == Some(std::cmp::Ordering::Less) {
                r = -r;
            }
            let mut gg = Float::with_val(prec, &d[m] - &d[l]);
            g += &r;
            gg += Float::with_val(prec, &e[l] / &g);
            let mut g = gg;
            let mut s = Float::with_val(prec, 1u32);
            let mut c = Float::with_val(prec, 1u32);
            let mut p = Float::new(prec);
            let mut deflated = false;
            for i in (l..m).rev() {
                let mut f = Float::with_val(prec, &s * &e[i]);
                let b = Float::with_val(prec, &c * &e[i]);
                let r = pythag(&f, &g);
                e[i + 1].assign(&r);
                if r.is_zero() {
                    d[i + 1] -= &p;
                    e[m].assign(0);
                    deflated = true;
                    break;
                }
                s.assign(&f / &r);
                c.assign(&g / &r);
                f.assign(&d[i + 1]);
                f -= &p;
                let mut r2 = Float::with_val(prec, &d[i] - &f);
                r2 *= &s;
                r2 += Float::with_val(prec, 2u32 * &c) * &b;
                p.assign(&s * &r2);
                d[i + 1].assign(&f + &p);
                g.assign(&c * &r2);
                g -= &b;
                if want_vectors {
                    for k in 0..n {
                        let fk = z.at(k, i + 1).clone();
                        let zk = z.at(k, i).clone();
                        let mut v1 = Float::with_val(prec, &s * &zk);
                        v1 += &c * &fk;
                        z.set(k, i + 1, v1);
                        let mut v0 = Float::with_val(prec, &c * &zk);
                        v0 -= &s * &fk;
                        z.set(k, i, v0);
                    }
                }
            }
            if deflated {
                continue;
            }
            d[l] -= &p;
            e[l].assign(&g);
            e[m].assign(0);
        }
    }

    let perm = ascending_permutation(&d);
    apply_permutation(&mut d, &perm);
    let vecs = if want_vectors {
        permute_columns(&z, &perm)
    } else {
        Mat::zeros(0, 0, prec)
    };
    Ok((d, vecs))
}

fn pythag(a: &Float, b: &Float) -> Float {
    let prec = a.prec().max(b.prec());
    let mut s = Float::with_val(prec, a.clone().square());
    s += b.clone().square();
    s.sqrt()
}

fn ascending_permutation(vals: &[Float]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vals.len()).collect();
    idx.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).expect("NaN eigenvalue"));
    idx
}

fn apply_permutation(vals: &mut Vec<Float>, perm: &[usize]) {
    let old = std::mem::take(vals);
    let mut tagged: Vec<Option<Float>> = old.into_iter().map(Some).collect();
    *vals = perm.iter().map(|&i| tagged[i].take().expect("perm")).collect();
}

fn permute_columns(m: &Mat, perm: &[usize]) -> Mat {
    let mut out = Mat::zeros(m.rows, m.cols, m.prec);
    for (newc, &oldc) in perm.iter().enumerate() {
        for r in 0..m.rows {
            out.set(r, newc, m.at(r, oldc).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_from(rows: &[&[f64]], prec: u32) -> Mat {
        let n = rows.len();
        let m = rows[0].len();
        let mut out = Mat::zeros(n, m, prec);
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                out.at_mut(i, j).assign(*v);
            }
        }
        out
    }

    #[test]
    fn cholesky_and_solves() {
        let a = mat_from(&[&[4.0, 2.0], &[2.0, 5.0]], 128);
        let (l, min_piv, _) = cholesky_lower(&a).unwrap();
        assert!(min_piv.to_f64() > 0.0);
        assert!((l.at(0, 0).to_f64() - 2.0).abs() < 1e-30);
        assert!((l.at(1, 0).to_f64() - 1.0).abs() < 1e-30);
        assert!((l.at(1, 1).to_f64() - 2.0).abs() < 1e-30);
        let b = mat_from(&[&[2.0], &[6.0]], 128);
        let x = solve_lower(&l, &b);
        assert!((x.at(0, 0).to_f64() - 1.0).abs() < 1e-30);
        assert!((x.at(1, 0).to_f64() - 2.5).abs() < 1e-30);
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = mat_from(&[&[1.0, 2.0], &[2.0, 1.0]], 128);
        assert!(matches!(cholesky_lower(&a), Err(Error::RankDeficient { .. })));
    }

    #[test]
    fn jacobi_3x3() {
        let a = mat_from(&[&[1.0, 2.0, 3.0], &[2.0, 3.0, 2.0], &[3.0, 2.0, 2.0]], 192);
        let (vals, vecs) = jacobi_eigen(&a, true).unwrap();
        let expected = [-1.55809924785903786, 0.862725343814443657, 6.69537390404459476];
        for (v, ex) in vals.iter().zip(expected) {
            assert!((v.to_f64() - ex).abs() < 1e-14, "{v} vs {ex}");
        }
        // residual A v = lambda v
        for k in 0..3 {
            for i in 0..3 {
                let mut r = Float::new(192);
                for j in 0..3 {
                    r += a.at(i, j) * vecs.at(j, k);
                }
                r -= Float::with_val(192, &vals[k] * vecs.at(i, k));
                assert!(r.to_f64().abs() < 1e-40);
            }
        }
    }

    #[test]
    fn ql_matches_jacobi() {
        // pseudo-random symmetric matrix, fixed seed
        let n = 24;
        let prec = 160;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rnd = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
        };
        let mut a = Mat::zeros(n, n, prec);
        for i in 0..n {
            for j in i..n {
                let v = rnd();
                a.at_mut(i, j).assign(v);
                a.at_mut(j, i).assign(v);
            }
        }
        let (vj, _) = jacobi_eigen(&a, false).unwrap();
        let (vq, zq) = tridiag_eigen(&a, true).unwrap();
        for (x, y) in vj.iter().zip(&vq) {
            let d = Float::with_val(prec, x - y).abs();
            assert!(d.to_f64() < 1e-40, "jacobi {x} vs ql {y}");
        }
        // QL eigenvectors satisfy the residual equation too
        for k in 0..n {
            for i in 0..n {
                let mut r = Float::new(prec);
                for j in 0..n {
                    r += a.at(i, j) * zq.at(j, k);
                }
                r -= Float::with_val(prec, &vq[k] * zq.at(i, k));
                assert!(r.to_f64().abs() < 1e-38);
            }
        }
    }

    #[test]
    fn high_precision_eigenvalues() {
        // [[2,1],[1,2]] has exact eigenvalues 1 and 3
        let a = mat_from(&[&[2.0, 1.0], &[1.0, 2.0]], 400);
        let (vals, _) = jacobi_eigen(&a, false).unwrap();
        let d0 = Float::with_val(400, &vals[0] - 1u32).abs();
        let d1 = Float::with_val(400, &vals[1] - 3u32).abs();
        let tiny = Float::with_val(400, -390i32).exp2();
        assert!(d0 < tiny && d1 < tiny);
    }
}
