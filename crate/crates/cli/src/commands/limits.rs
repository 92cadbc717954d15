use anyhow::Result;
use oscbox::reference::{large_box_check, small_box_check};
use oscbox::tables::{TABLE_4, TABLE_4_R0, TABLE_5, TABLE_5_ASYMPTOTE, TABLE_5_LAMBDAS};
use oscbox::Real;

use super::{parse_list, parse_real, usage, Ctx};
use crate::args::LimitsArgs;
use crate::output::{GoldenReport, Table};

pub fn run(ctx: &Ctx, args: &LimitsArgs) -> Result<i32> {
    let mut code = 0;
    match args.which.as_str() {
        "small" => code = code.max(small(ctx, args)?),
        "large" => code = code.max(large(ctx, args)?),
        "both" => {
            code = code.max(small(ctx, args)?);
            code = code.max(large(ctx, args)?);
        }
        other => return Err(usage(&format!("--which {other:?} must be small, large or both"))),
    }
    Ok(code)
}

fn small(ctx: &Ctx, args: &LimitsArgs) -> Result<i32> {
    let r0 = match &args.r0 {
        Some(s) => parse_real("r0", s)?,
        None => Real::parse(TABLE_4_R0).expect("literal"),
    };
    let levels = args.levels.unwrap_or(4);
    let rows = small_box_check(&r0, levels, ctx.policy, None)?;

    let mut table = Table::new(&["r0sq_E", "E_PB", "deviation"]);
    table.policy_digits = ctx.policy.digits();
    table.basis = "poly".to_string();
    table.set_config("command", "limits small");
    table.set_config("r0", &r0);
    for row in &rows {
        table.push_row(vec![
            ctx.fmt(&row.scaled_energy),
            ctx.fmt(&row.pib),
            ctx.fmt(&row.deviation),
        ]);
    }
    ctx.emit(&table)?;

    if ctx.golden {
        let mut report = GoldenReport::default();
        for (row, want) in rows.iter().zip(TABLE_4) {
            report.check_rel("r0sq_E", row.scaled_energy.to_f64(), want.scaled, 5e-9);
            report.check_rel("E_PB", row.pib.to_f64(), want.pib, 1e-9);
            report.check_rel("r0sq_E vs Bessel", row.scaled_energy.to_f64(), want.pib, 2e-8);
        }
        return Ok(ctx.finish_golden(report));
    }
    Ok(0)
}

fn large(ctx: &Ctx, args: &LimitsArgs) -> Result<i32> {
    let r0s = match &args.r0_list {
        Some(s) => parse_list("r0-list", s)?,
        None => (1..=6).map(Real::from_int).collect(),
    };
    let lams = match &args.lambda_list {
        Some(s) => parse_list("lambda-list", s)?,
        None => (1..=5).map(Real::from_int).collect(),
    };
    let grid = large_box_check(&r0s, &lams, ctx.policy)?;

    let mut columns = vec!["r0".to_string()];
    columns.extend(lams.iter().map(|l| format!("lambda={l}")));
    let mut table = Table::new(&columns.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    table.policy_digits = ctx.policy.digits();
    table.basis = "gauss".to_string();
    table.set_config("command", "limits large");
    for (ri, r0) in grid.r0_values.iter().enumerate() {
        let mut row = vec![r0.to_string()];
        row.extend(grid.energies[ri].iter().map(|e| ctx.fmt(e)));
        table.push_row(row);
    }
    let mut last = vec!["inf".to_string()];
    last.extend(grid.asymptote.iter().map(|e| ctx.fmt(e)));
    table.push_row(last);
    ctx.emit(&table)?;

    if ctx.golden {
        let mut report = GoldenReport::default();
        for (ri, r0) in grid.r0_values.iter().enumerate() {
            let Some(want_row) = TABLE_5.iter().find(|w| {
                oscbox::scalar::parse_decimal_rational(w.r0).ok().as_ref() == r0.as_exact()
            }) else {
                continue;
            };
            for (ci, lam) in grid.lambda_values.iter().enumerate() {
                let Some(li) = TABLE_5_LAMBDAS.iter().position(|l| {
                    oscbox::scalar::parse_decimal_rational(l).ok().as_ref() == lam.as_exact()
                }) else {
                    continue;
                };
                report.check_rel(
                    &format!("E00[r0={r0}][λ={lam}]"),
                    grid.energies[ri][ci].to_f64(),
                    want_row.values[li],
                    1e-7,
                );
            }
        }
        // the asymptote row is analytic and must match exactly
        for (ci, lam) in grid.lambda_values.iter().enumerate() {
            if let Some(li) = TABLE_5_LAMBDAS.iter().position(|l| {
                oscbox::scalar::parse_decimal_rational(l).ok().as_ref() == lam.as_exact()
            }) {
                report.check_rel(
                    &format!("asymptote[λ={lam}]"),
                    grid.asymptote[ci].to_f64(),
                    TABLE_5_ASYMPTOTE[li],
                    1e-15,
                );
            }
        }
        if report.cells_checked == 0 {
            return Err(usage("golden large-box checks need the reference grid radii"));
        }
        return Ok(ctx.finish_golden(report));
    }
    Ok(0)
}
