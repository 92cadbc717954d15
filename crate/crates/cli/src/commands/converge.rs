use anyhow::Result;
use oscbox::eigensolver::convergence_study;
use oscbox::tables::{ConvergenceRow, TABLE_1_EVEN, TABLE_2_ODD};
use oscbox::{ModelParams, Parity};

use super::{basis_kind, parse_n_range, parse_real, require, sector_parity, usage, Ctx};
use crate::args::{ConvergeArgs, ParityArg};
use crate::output::{GoldenReport, Table};

pub fn run(ctx: &Ctx, args: &ConvergeArgs) -> Result<i32> {
    let parity = sector_parity(args.parity.unwrap_or(ParityArg::Even))
        .ok_or_else(|| usage("--parity must be even or odd for converge"))?;
    let r0 = parse_real("r0", require("r0", &args.r0)?)?;
    let lambda = parse_real("lambda", args.lambda.as_deref().unwrap_or("0"))?;
    let kind = basis_kind(args.basis);
    let count = args.count.unwrap_or(4);
    let n_range = match &args.n_range {
        Some(s) => parse_n_range(s)?,
        None => match parity {
            Parity::Even => (2..=10).collect(),
            Parity::Odd => (3..=11).collect(),
        },
    };

    let params = ModelParams::new(r0.clone(), lambda.clone())?;
    let study = convergence_study(&params, kind, parity, &n_range, ctx.policy, count)?;

    let single_row = study.rows.len() == 1;
    let mut columns: Vec<String> = vec!["N".to_string()];
    columns.extend((1..=count).map(|k| format!("E{k}")));
    if !single_row {
        columns.extend((1..=count).map(|k| format!("agree{k}")));
    }
    let mut table = Table::new(&columns.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    table.policy_digits = ctx.policy.digits();
    table.basis = kind.tag().to_string();
    table.set_config("command", "converge");
    table.set_config("r0", &r0);
    table.set_config("lambda", &lambda);
    table.set_config("parity", parity.tag());

    for (ri, (n, vals)) in study.rows.iter().enumerate() {
        let mut row = vec![n.to_string()];
        row.extend(vals.iter().map(|e| ctx.fmt(e)));
        if !single_row {
            row.extend(study.digits_vs_final[ri].iter().map(|d| d.to_string()));
        }
        table.push_row(row);
    }
    ctx.emit(&table)?;

    if ctx.golden {
        let reference: &[ConvergenceRow] = match parity {
            Parity::Even => TABLE_1_EVEN,
            Parity::Odd => TABLE_2_ODD,
        };
        let mut report = GoldenReport::default();
        for (n, vals) in &study.rows {
            let Some(want) = reference.iter().find(|r| r.n == *n) else {
                continue;
            };
            for (k, cell) in want.values.iter().enumerate().take(vals.len()) {
                report.check_rel(
                    &format!("{} N={n} E{}", parity.tag(), k + 1),
                    vals[k].to_f64(),
                    cell,
                    5e-9,
                );
            }
        }
        if report.cells_checked == 0 {
            return Err(usage(
                "golden converge checks compare against the r0=1, lambda=0.05 reference rows",
            ));
        }
        return Ok(ctx.finish_golden(report));
    }
    Ok(0)
}
