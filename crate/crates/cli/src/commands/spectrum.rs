use anyhow::Result;
use oscbox::eigensolver::{default_order, merged_from_reductions, SectorReduction};
use oscbox::{ModelParams, Parity, Real};
use rayon::prelude::*;

use super::{basis_kind, parity_tag, parse_lambda_range, parse_real, require, sector_parity, Ctx};
use crate::args::{ParityArg, SpectrumArgs};
use crate::output::{GoldenReport, Table};

pub fn run(ctx: &Ctx, args: &SpectrumArgs) -> Result<i32> {
    let r0 = parse_real("r0", require("r0", &args.r0)?)?;
    let kind = basis_kind(args.basis);
    let parity = sector_parity(args.parity.unwrap_or(ParityArg::Both));
    let n = args.n.unwrap_or_else(|| default_order(kind, &r0));
    let count = args.count.unwrap_or(oscbox::eigensolver::DEFAULT_COUNT);

    let lambdas: Vec<Real> = match (&args.lambda_list, &args.lambda_range, &args.lambda) {
        (Some(list), _, _) => super::parse_list("lambda-list", list)?,
        (None, Some(range), _) => parse_lambda_range(range)?,
        (None, None, Some(l)) => vec![parse_real("lambda", l)?],
        (None, None, None) => vec![Real::from_int(0)],
    };

    let mut table = Table::new(
        &std::iter::once("lambda".to_string())
            .chain((1..=count).map(|k| format!("E{k}")))
            .chain(std::iter::once("sectors".to_string()))
            .collect::<Vec<_>>()
            .iter()
            .map(|s| s.as_str())
            .collect::<Vec<_>>(),
    );
    table.policy_digits = ctx.policy.digits();
    table.basis = kind.tag().to_string();
    table.set_config("command", "spectrum");
    table.set_config("r0", &r0);
    table.set_config("basis", kind.tag());
    table.set_config("n", n);
    table.set_config("count", count);

    let prec = ctx.policy.work_bits();
    let rows: Result<Vec<(String, Vec<String>, String)>> = match parity {
        None => {
            let reds = [
                SectorReduction::build(kind, Parity::Even, n, &r0, ctx.policy)?,
                SectorReduction::build(kind, Parity::Odd, n, &r0, ctx.policy)?,
            ];
            lambdas
                .par_iter()
                .map(|lam| {
                    let params = ModelParams::new(r0.clone(), lam.clone())?;
                    let merged = merged_from_reductions(&params, &reds, count)?;
                    let cells: Vec<String> =
                        merged.levels.iter().map(|l| ctx.fmt(&l.energy)).collect();
                    let tags: Vec<&str> =
                        merged.levels.iter().map(|l| parity_tag(l.parity)).collect();
                    Ok((lam.to_string(), cells, tags.join("|")))
                })
                .collect::<Result<Vec<_>>>()
        }
        Some(p) => {
            let red = SectorReduction::build(kind, p, n, &r0, ctx.policy)?;
            lambdas
                .par_iter()
                .map(|lam| {
                    let s = red.solve(&lam.to_float(prec), count, false)?;
                    let cells: Vec<String> = s.values.iter().map(|e| ctx.fmt(e)).collect();
                    let tags = vec![parity_tag(p); count].join("|");
                    Ok((lam.to_string(), cells, tags))
                })
                .collect::<Result<Vec<_>>>()
        }
    };
    let rows = rows?;
    for (lam, cells, tags) in &rows {
        let mut row = vec![lam.clone()];
        row.extend(cells.iter().cloned());
        row.push(tags.clone());
        table.push_row(row);
    }
    ctx.emit(&table)?;

    if ctx.golden {
        let mut report = GoldenReport::default();
        let block = oscbox::tables::TABLE_3
            .iter()
            .find(|b| {
                oscbox::scalar::parse_decimal_rational(b.r0).ok().as_ref()
                    == r0.as_exact()
            })
            .ok_or_else(|| super::usage("golden spectrum checks need r0 in {1, 2, 3}"))?;
        for (lam, cells, _) in &rows {
            let lam_rat = oscbox::scalar::parse_decimal_rational(lam).unwrap();
            let Some(want) = block.rows.iter().find(|row| {
                oscbox::scalar::parse_decimal_rational(row.lambda).unwrap() == lam_rat
            }) else {
                continue;
            };
            for (k, (got, want_cell)) in cells.iter().zip(want.values.iter()).enumerate() {
                report.check_rel(
                    &format!("r0={} λ={lam} E{}", block.r0, k + 1),
                    got.parse().unwrap_or(f64::NAN),
                    want_cell,
                    5e-9,
                );
            }
        }
        return Ok(ctx.finish_golden(report));
    }
    Ok(0)
}
