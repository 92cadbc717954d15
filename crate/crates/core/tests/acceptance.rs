//! Acceptance suite: reproduces every published reference table at its
//! stated tolerance and exercises the structural invariants of the solver.
//! One test per criterion; each prints a single pass/fail line (run with
//! `--nocapture` to see them).

mod common;

use common::{entry_oracle, rel_err};
use oscbox::assembly::assemble;
use oscbox::basis::{enumerate, BasisSpec};
use oscbox::eigensolver::{convergence_study, default_order, spectrum, SectorReduction};
use oscbox::perturbation::{pt2_sum_over_states, pt_limit_table, rs_expansion};
use oscbox::reference::{large_box_check, small_box_check};
use oscbox::scalar::float_from_str;
use oscbox::tables;
use oscbox::{BasisKind, LevelLabel, MatrixKind, ModelParams, Parity, Real, ScalarPolicy};
use rug::Float;

const D30: ScalarPolicy = ScalarPolicy::Decimal(30);

fn finish(name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("ACCEPTANCE {name}: PASS");
    } else {
        println!("ACCEPTANCE {name}: FAIL");
        for f in &failures {
            println!("  {f}");
        }
        panic!("{name} failed with {} violation(s)", failures.len());
    }
}

fn convergence_against(
    parity: Parity,
    rows: &[tables::ConvergenceRow],
    failures: &mut Vec<String>,
) -> Vec<(u32, Vec<Float>)> {
    let params = ModelParams::parse(tables::CONVERGENCE_R0, tables::CONVERGENCE_LAMBDA).unwrap();
    let n_range: Vec<u32> = rows.iter().map(|r| r.n).collect();
    let study =
        convergence_study(&params, BasisKind::Polynomial, parity, &n_range, D30, 4).unwrap();
    for (row, want) in study.rows.iter().zip(rows) {
        assert_eq!(row.0, want.n);
        for (k, cell) in want.values.iter().enumerate() {
            let w: f64 = cell.parse().unwrap();
            let got = row.1[k].to_f64();
            if rel_err(got, w) > 5e-9 {
                failures.push(format!(
                    "{parity:?} N={}: level {k} got {got:.10e}, printed {cell}",
                    want.n
                ));
            }
        }
    }
    study.rows
}

#[test]
fn criterion_01_table1_even_convergence() {
    let mut failures = Vec::new();
    convergence_against(Parity::Even, tables::TABLE_1_EVEN, &mut failures);
    finish("criterion 1 (table 1, even rows N=2..10 to 5e-9)", failures);
}

#[test]
fn criterion_02_table2_odd_convergence() {
    let mut failures = Vec::new();
    convergence_against(Parity::Odd, tables::TABLE_2_ODD, &mut failures);
    finish("criterion 2 (table 2, odd rows N=3..11 to 5e-9)", failures);
}

#[test]
fn criterion_03_table3_spot_rows() {
    // six rows spanning every block, including (r0=2, λ=1) and (r0=3, λ=6)
    let picks: [(usize, &[usize]); 3] = [(0, &[0, 6]), (1, &[2, 12]), (2, &[0, 12])];
    let mut failures = Vec::new();
    for (bi, row_ids) in picks {
        let block = &tables::TABLE_3[bi];
        let r0 = Real::parse(block.r0).unwrap();
        let n = default_order(BasisKind::Polynomial, &r0);
        let reds = [
            SectorReduction::build(BasisKind::Polynomial, Parity::Even, n, &r0, D30).unwrap(),
            SectorReduction::build(BasisKind::Polynomial, Parity::Odd, n, &r0, D30).unwrap(),
        ];
        for &ri in row_ids {
            let row = &block.rows[ri];
            let params = ModelParams::parse(block.r0, row.lambda).unwrap();
            let merged = oscbox::eigensolver::merged_from_reductions(&params, &reds, 5).unwrap();
            for (k, cell) in row.values.iter().enumerate() {
                let want: f64 = cell.parse().unwrap();
                let got = merged.levels[k].energy.to_f64();
                if rel_err(got, want) > 5e-9 {
                    failures.push(format!(
                        "r0={} λ={}: level {k} got {got:.10e}, printed {cell}",
                        block.r0, row.lambda
                    ));
                }
            }
        }
    }
    finish("criterion 3 (table 3, six rows to 5e-9)", failures);
}

#[test]
fn criterion_04_table4_small_box() {
    let mut failures = Vec::new();
    let r0 = Real::parse(tables::TABLE_4_R0).unwrap();
    let rows = small_box_check(&r0, 4, D30, None).unwrap();
    for (row, want) in rows.iter().zip(tables::TABLE_4) {
        let scaled: f64 = want.scaled.parse().unwrap();
        let pib: f64 = want.pib.parse().unwrap();
        let got = row.scaled_energy.to_f64();
        if rel_err(got, scaled) > 5e-9 {
            failures.push(format!("r0²E got {got:.10e}, printed {}", want.scaled));
        }
        if rel_err(got, pib) > 2e-8 {
            failures.push(format!("r0²E got {got:.10e}, Bessel level {}", want.pib));
        }
        if rel_err(row.pib.to_f64(), pib) > 1e-9 {
            failures.push(format!("PIB level got {}, printed {}", row.pib, want.pib));
        }
    }
    // the field term scales away as r0³: λ = 0 must give the same digits
    let zero = Real::from_int(0);
    let rows0 = small_box_check(&r0, 4, D30, Some(&zero)).unwrap();
    for (a, b) in rows.iter().zip(&rows0) {
        if rel_err(a.scaled_energy.to_f64(), b.scaled_energy.to_f64()) > 1e-9 {
            failures.push("λ = 0.05 and λ = 0 disagree at r0 = 0.01".to_string());
        }
    }
    finish("criterion 4 (table 4, r0²E vs Bessel levels)", failures);
}

#[test]
fn criterion_05_table5_large_box() {
    let mut failures = Vec::new();
    let r0s: Vec<Real> = tables::TABLE_5.iter().map(|r| Real::parse(r.r0).unwrap()).collect();
    let lams: Vec<Real> =
        tables::TABLE_5_LAMBDAS.iter().map(|l| Real::parse(l).unwrap()).collect();
    let table = large_box_check(&r0s, &lams, D30).unwrap();
    for (ri, want_row) in tables::TABLE_5.iter().enumerate() {
        for (ci, cell) in want_row.values.iter().enumerate() {
            let want: f64 = cell.parse().unwrap();
            let got = table.energies[ri][ci].to_f64();
            if rel_err(got, want) > 1e-7 {
                failures.push(format!(
                    "r0={} λ={}: got {got:.10e}, printed {cell}",
                    want_row.r0,
                    tables::TABLE_5_LAMBDAS[ci]
                ));
            }
        }
    }
    // analytic asymptote row is exact: 1 - λ²/2
    for (ci, cell) in tables::TABLE_5_ASYMPTOTE.iter().enumerate() {
        let want: f64 = cell.parse().unwrap();
        let got = table.asymptote[ci].to_f64();
        if got != want {
            failures.push(format!("asymptote at λ={}: {got} != {want}", ci + 1));
        }
    }
    finish("criterion 5 (table 5, Gaussian cells to 1e-7 + exact asymptote)", failures);
}

#[test]
fn criterion_06_table6_thirty_digits() {
    let mut failures = Vec::new();
    let policy = ScalarPolicy::Decimal(50);
    let r0 = Real::from_int(1);
    let n = 22;
    let reds = [
        SectorReduction::build(BasisKind::Gaussian, Parity::Even, n, &r0, policy).unwrap(),
        SectorReduction::build(BasisKind::Gaussian, Parity::Odd, n, &r0, policy).unwrap(),
    ];
    let prec = 340;
    for row in tables::TABLE_6 {
        let parity = if row.odd { Parity::Odd } else { Parity::Even };
        let red = if row.odd { &reds[1] } else { &reds[0] };
        let label = LevelLabel::new(row.n, row.nu, parity).unwrap();
        let exp = rs_expansion(red, &label, 1).unwrap();
        for (got, want_str, tag) in [
            (&exp.coefficients[0], row.e0, "E0"),
            (&exp.coefficients[1], row.e2, "E2"),
        ] {
            let want = float_from_str(want_str, prec).unwrap();
            let mut diff = Float::with_val(prec, got - &want);
            diff /= &want;
            diff.abs_mut();
            if diff.to_f64() > 1e-27 {
                failures.push(format!(
                    "{tag} of ({},{}){}: got {}, printed {want_str} (rel {:.2e})",
                    row.n,
                    row.nu,
                    if row.odd { "o" } else { "e" },
                    oscbox::scalar::format_sig(got, 33),
                    diff.to_f64()
                ));
            }
        }
    }
    finish("criterion 6 (table 6, E0/E2 to the 28th digit)", failures);
}

#[test]
fn criterion_07_three_term_sum() {
    let mut failures = Vec::new();
    let red =
        SectorReduction::build(BasisKind::Gaussian, Parity::Even, 20, &Real::from_int(1), D30)
            .unwrap();
    let (sum3, terms) = pt2_sum_over_states(&red, &LevelLabel::even(0, 0), Some(3)).unwrap();
    for (t, want_str) in terms.iter().zip(tables::EQ16_TERMS) {
        let want: f64 = want_str.parse().unwrap();
        if (t.to_f64() - want).abs() > 5e-10 {
            failures.push(format!("term {t} vs printed {want_str}"));
        }
    }
    let want_sum: f64 = tables::EQ16_SUM.parse().unwrap();
    if (sum3.to_f64() - want_sum).abs() > 5e-10 {
        failures.push(format!("3-term sum {sum3} vs printed {}", tables::EQ16_SUM));
    }
    finish("criterion 7 (three largest 2nd-order terms + their sum)", failures);
}

#[test]
fn criterion_08_table7_grid() {
    let mut failures = Vec::new();
    let r0s: Vec<Real> = (1..=5).map(Real::from_int).collect();
    for grid in [&tables::TABLE_7_EVEN, &tables::TABLE_7_ODD] {
        let labels: Vec<LevelLabel> = grid
            .columns
            .iter()
            .map(|&(n, nu)| {
                if grid.odd {
                    LevelLabel::odd(n, nu).unwrap()
                } else {
                    LevelLabel::even(n, nu)
                }
            })
            .collect();
        let table = pt_limit_table(&labels, &r0s, 30, D30).unwrap();
        for (check, got_rows, want_rows) in [
            ("E0", &table.e0, grid.e0_rows),
            ("E2", &table.e2, grid.e2_rows),
        ] {
            for (ri, want_row) in want_rows.iter().enumerate() {
                for (ci, cell) in want_row.iter().enumerate() {
                    let want: f64 = cell.parse().unwrap();
                    let got = got_rows[ri][ci].to_f64();
                    if (got - want).abs() > 5e-8 {
                        failures.push(format!(
                            "{check}[r0={}][{}] got {got:.9}, printed {cell}",
                            ri + 1,
                            labels[ci]
                        ));
                    }
                }
            }
        }
        if !table.violations.is_empty() {
            failures.extend(table.violations);
        }
    }
    finish("criterion 8 (table 7, nine-state E0/E2 grids to 5e-8)", failures);
}

#[test]
fn criterion_09_pt_vs_variational() {
    let mut failures = Vec::new();
    let r0 = Real::from_int(1);
    let red_pt =
        SectorReduction::build(BasisKind::Gaussian, Parity::Even, 18, &r0, D30).unwrap();
    let exp = rs_expansion(&red_pt, &LevelLabel::even(0, 0), 1).unwrap();
    let lam = float_from_str("0.5", D30.work_bits()).unwrap();
    let pt_value = exp.eval(&lam);

    let red = SectorReduction::build(BasisKind::Polynomial, Parity::Even, 12, &r0, D30).unwrap();
    let rrm = red.solve(&lam, 1, false).unwrap().values[0].to_f64();
    let gap = (pt_value.to_f64() - rrm).abs();
    // second order is this close at λ = 0.5 (printed tables put it at 3.56e-6)
    if gap > 1e-5 {
        failures.push(format!("pt {pt_value} vs variational {rrm}: gap {gap:.2e}"));
    }
    if gap < 1e-7 {
        failures.push(format!("gap {gap:.2e} suspiciously small; wrong level?"));
    }
    finish("criterion 9 (2nd-order series within 1e-5 of the solver)", failures);
}

#[test]
fn criterion_10a_variational_monotonicity() {
    let mut failures = Vec::new();
    let eps = D30.epsilon().to_f64();
    for (parity, rows) in [
        (Parity::Even, tables::TABLE_1_EVEN),
        (Parity::Odd, tables::TABLE_2_ODD),
    ] {
        let mut unused = Vec::new();
        let computed = convergence_against(parity, rows, &mut unused);
        for w in computed.windows(2) {
            let (n_prev, prev) = &w[0];
            let (_, next) = &w[1];
            for k in 0..prev.len().min(next.len()) {
                let p = prev[k].to_f64();
                let q = next[k].to_f64();
                if q > p + 10.0 * eps * p.abs().max(1.0) {
                    failures.push(format!(
                        "{parity:?}: level {k} rose from {p} (N={n_prev}) to {q}"
                    ));
                }
            }
        }
    }
    finish("criterion 10a (eigenvalues non-increasing in N)", failures);
}

#[test]
fn criterion_10b_field_sign_symmetry() {
    let mut failures = Vec::new();
    for r0_int in [1i64, 2] {
        let r0 = Real::from_int(r0_int);
        let n = default_order(BasisKind::Polynomial, &r0);
        for parity in [Parity::Even, Parity::Odd] {
            let red =
                SectorReduction::build(BasisKind::Polynomial, parity, n, &r0, D30).unwrap();
            for lam_str in ["0.5", "2", "5"] {
                let lam = float_from_str(lam_str, D30.work_bits()).unwrap();
                let plus = red.solve(&lam, 5, false).unwrap();
                let minus = red.solve(&(-lam.clone()), 5, false).unwrap();
                for (a, b) in plus.values.iter().zip(&minus.values) {
                    let d = (a.to_f64() - b.to_f64()).abs() / a.to_f64().abs().max(1.0);
                    if d > 1e-10 {
                        failures.push(format!(
                            "r0={r0_int} λ={lam_str} {parity:?}: E(λ) vs E(-λ) differ by {d:.2e}"
                        ));
                    }
                }
            }
        }
    }
    finish("criterion 10b (E(λ) = E(-λ) to 1e-10)", failures);
}

#[test]
fn criterion_10c_quadrature_oracle() {
    let mut failures = Vec::new();
    let cases = [
        (BasisSpec::new(BasisKind::Polynomial, Parity::Even, 4).unwrap(), Real::from_int(1), ScalarPolicy::ExactRational),
        (BasisSpec::new(BasisKind::Gaussian, Parity::Odd, 4).unwrap(), Real::from_int(3), D30),
    ];
    for (spec, r0, policy) in cases {
        let ms = assemble(&spec, &r0, policy).unwrap();
        let idx = enumerate(&spec).unwrap();
        for kind in [
            MatrixKind::Overlap,
            MatrixKind::Kinetic,
            MatrixKind::Quadratic,
            MatrixKind::Dipole,
        ] {
            let m = ms.matrix(kind, 128);
            let scale = m.max_abs().to_f64();
            for (a, &ia) in idx.iter().enumerate() {
                for (b, &ib) in idx.iter().enumerate() {
                    let got = m.at(a, b).to_f64();
                    let want = entry_oracle(&spec, r0.to_f64(), ia, ib, kind);
                    let ok = if got == 0.0 {
                        want.abs() <= 1e-12 * scale
                    } else {
                        (got - want).abs() / got.abs() <= 1e-10
                    };
                    if !ok {
                        failures.push(format!(
                            "{spec} {kind:?}[{a}][{b}]: {got} vs oracle {want}"
                        ));
                    }
                }
            }
        }
    }
    finish("criterion 10c (assembled entries vs quadrature to 1e-10)", failures);
}

#[test]
fn criterion_10d_overlap_orthonormality() {
    let mut failures = Vec::new();
    let r0 = Real::from_int(1);
    let spec = BasisSpec::new(BasisKind::Polynomial, Parity::Even, 10).unwrap();
    let ms = assemble(&spec, &r0, ScalarPolicy::ExactRational).unwrap();
    let red = SectorReduction::new(&ms, D30).unwrap();
    let prec = D30.work_bits();
    let lam = float_from_str("0.05", prec).unwrap();
    let s = red.solve(&lam, 4, true).unwrap();
    let smat = ms.matrix(MatrixKind::Overlap, prec);
    let c = s.vectors.as_ref().unwrap();
    for a in 0..4 {
        for b in 0..4 {
            let mut acc = Float::new(prec);
            for i in 0..smat.rows() {
                let mut row = Float::new(prec);
                for j in 0..smat.cols() {
                    row += smat.at(i, j) * c.at(j, b);
                }
                acc += Float::with_val(prec, c.at(i, a) * &row);
            }
            let target = if a == b { 1.0 } else { 0.0 };
            if (acc.to_f64() - target).abs() > 1e-10 {
                failures.push(format!("v{a}ᵀ S v{b} = {acc}"));
            }
        }
    }
    finish("criterion 10d (eigenvectors S-orthonormal to 1e-10)", failures);
}

#[test]
fn criterion_10e_basis_family_agreement() {
    let mut failures = Vec::new();
    let params = ModelParams::parse("2", "1").unwrap();
    let poly = spectrum(&params, BasisKind::Polynomial, 16, D30, 5).unwrap();
    let gauss = spectrum(&params, BasisKind::Gaussian, 17, D30, 5).unwrap();
    for (k, (p, g)) in poly.levels.iter().zip(&gauss.levels).enumerate() {
        let d = rel_err(p.energy.to_f64(), g.energy.to_f64());
        if d > 1e-7 {
            failures.push(format!(
                "level {k}: poly {} vs gauss {} (rel {d:.2e})",
                p.energy, g.energy
            ));
        }
    }
    finish("criterion 10e (polynomial vs Gaussian spectra to 1e-7)", failures);
}

#[test]
fn criterion_10f_cross_method_second_order() {
    let mut failures = Vec::new();
    for r0_int in [1i64, 3] {
        let r0 = Real::from_int(r0_int);
        let reds = [
            SectorReduction::build(BasisKind::Gaussian, Parity::Even, 24, &r0, D30).unwrap(),
            SectorReduction::build(BasisKind::Gaussian, Parity::Odd, 24, &r0, D30).unwrap(),
        ];
        let mut labels: Vec<LevelLabel> = tables::TABLE_7_EVEN
            .columns
            .iter()
            .map(|&(n, nu)| LevelLabel::even(n, nu))
            .collect();
        labels.extend(
            tables::TABLE_7_ODD
                .columns
                .iter()
                .map(|&(n, nu)| LevelLabel::odd(n, nu).unwrap()),
        );
        for label in labels {
            let red = if label.parity == Parity::Even { &reds[0] } else { &reds[1] };
            let exp = rs_expansion(red, &label, 1).unwrap();
            let (sum, _) = pt2_sum_over_states(red, &label, None).unwrap();
            let d = (exp.coefficients[1].to_f64() - sum.to_f64()).abs();
            if d > 1e-9 {
                failures.push(format!(
                    "r0={r0_int} {label}: recursion {} vs sum {} (diff {d:.2e})",
                    exp.coefficients[1], sum
                ));
            }
        }
    }
    finish("criterion 10f (recursion vs sum-over-states E2 to 1e-9)", failures);
}
