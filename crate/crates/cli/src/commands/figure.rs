use anyhow::Result;
use oscbox::eigensolver::{default_order, merged_from_reductions, SectorReduction};
use oscbox::perturbation::rs_expansion;
use oscbox::{BasisKind, ModelParams, Parity, Real};
use rayon::prelude::*;

use super::{parity_tag, parse_lambda_range, parse_real, require, Ctx};
use crate::args::FigureArgs;
use crate::output::{GoldenReport, Table};

/// The reference λ grid: 0.05, then 0.5 to 6.0 in steps of 0.5.
fn default_grid() -> Vec<Real> {
    let mut out = vec![Real::parse("0.05").expect("literal")];
    out.extend(parse_lambda_range("0.5:6:0.5").expect("literal"));
    out
}

pub fn run(ctx: &Ctx, args: &FigureArgs) -> Result<i32> {
    let r0 = parse_real("r0", require("r0", &args.r0)?)?;
    let levels = args.levels.unwrap_or(5);
    let order = args.order.unwrap_or(1).max(1);
    let lambdas = match &args.lambda_range {
        Some(s) => parse_lambda_range(s)?,
        None => default_grid(),
    };

    // variational series: polynomial basis, merged sectors
    let n_poly = args.n.unwrap_or_else(|| default_order(BasisKind::Polynomial, &r0));
    let reds = [
        SectorReduction::build(BasisKind::Polynomial, Parity::Even, n_poly, &r0, ctx.policy)?,
        SectorReduction::build(BasisKind::Polynomial, Parity::Odd, n_poly, &r0, ctx.policy)?,
    ];
    let rrm_rows: Vec<(String, Vec<(String, &'static str)>)> = lambdas
        .par_iter()
        .map(|lam| {
            let params = ModelParams::new(r0.clone(), lam.clone())?;
            let merged = merged_from_reductions(&params, &reds, levels)?;
            let cells = merged
                .levels
                .iter()
                .map(|l| (ctx.fmt(&l.energy), parity_tag(l.parity)))
                .collect();
            Ok((lam.to_string(), cells))
        })
        .collect::<Result<Vec<_>>>()?;

    // perturbation series for the same lowest levels
    let n_gauss = default_order(BasisKind::Gaussian, &r0);
    let greds = [
        SectorReduction::build(BasisKind::Gaussian, Parity::Even, n_gauss, &r0, ctx.policy)?,
        SectorReduction::build(BasisKind::Gaussian, Parity::Odd, n_gauss, &r0, ctx.policy)?,
    ];
    let mut level_list: Vec<(oscbox::LevelLabel, rug::Float)> = Vec::new();
    for red in &greds {
        level_list.extend(red.labels_ascending());
    }
    level_list.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite"));
    level_list.truncate(levels);
    let expansions: Vec<_> = level_list
        .iter()
        .map(|(label, _)| {
            let red = if label.parity == Parity::Even { &greds[0] } else { &greds[1] };
            rs_expansion(red, label, order)
        })
        .collect::<oscbox::Result<Vec<_>>>()?;

    let mut table = Table::new(&["series", "lambda", "level", "parity", "energy"]);
    table.policy_digits = ctx.policy.digits();
    table.basis = "poly+gauss".to_string();
    table.set_config("command", "figure");
    table.set_config("r0", &r0);
    table.set_config("levels", levels);
    table.set_config("order", order);
    for (lam, cells) in &rrm_rows {
        for (k, (e, par)) in cells.iter().enumerate() {
            table.push_row(vec![
                "rrm".to_string(),
                lam.clone(),
                (k + 1).to_string(),
                par.to_string(),
                e.clone(),
            ]);
        }
    }
    let prec = ctx.policy.work_bits();
    for lam in &lambdas {
        let lam_f = lam.to_float(prec);
        for (k, exp) in expansions.iter().enumerate() {
            table.push_row(vec![
                format!("pt{}", 2 * order),
                lam.to_string(),
                (k + 1).to_string(),
                parity_tag(exp.label.parity).to_string(),
                ctx.fmt(&exp.eval(&lam_f)),
            ]);
        }
    }
    ctx.emit(&table)?;

    if ctx.golden {
        // the perturbation curve must hit the variational points at λ → 0
        let mut report = GoldenReport::default();
        let zero = rug::Float::new(prec);
        let params = ModelParams::new(r0.clone(), Real::from_int(0))?;
        let merged = merged_from_reductions(&params, &reds, levels)?;
        for (k, exp) in expansions.iter().enumerate() {
            report.check_abs(
                &format!("series B at λ=0, level {}", k + 1),
                exp.eval(&zero).to_f64(),
                &format!("{}", merged.levels[k].energy.to_f64()),
                1e-9,
            );
        }
        return Ok(ctx.finish_golden(report));
    }
    Ok(0)
}
