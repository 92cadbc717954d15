use anyhow::Result;

use super::{usage, Ctx};
use crate::args::{
    BasisArg, ConvergeArgs, LimitsArgs, ParityArg, PtArgs, SpectrumArgs, TableArgs,
};

/// Reproduce a built-in reference table by id, forwarding to the command
/// that owns it with the canonical parameters.
pub fn run(ctx: &Ctx, args: &TableArgs) -> Result<i32> {
    match args.id {
        1 => super::converge::run(
            ctx,
            &ConvergeArgs {
                r0: Some("1".to_string()),
                lambda: Some("0.05".to_string()),
                basis: Some(BasisArg::Poly),
                parity: Some(ParityArg::Even),
                n_range: Some("2..10".to_string()),
                count: Some(4),
            },
        ),
        2 => super::converge::run(
            ctx,
            &ConvergeArgs {
                r0: Some("1".to_string()),
                lambda: Some("0.05".to_string()),
                basis: Some(BasisArg::Poly),
                parity: Some(ParityArg::Odd),
                n_range: Some("3..11".to_string()),
                count: Some(4),
            },
        ),
        3 => {
            // all three radius blocks over the full λ grid
            let mut code = 0;
            for r0 in ["1", "2", "3"] {
                let c = super::spectrum::run(
                    ctx,
                    &SpectrumArgs {
                        r0: Some(r0.to_string()),
                        lambda: None,
                        lambda_range: None,
                        lambda_list: Some(
                            "0.05,0.5,1,1.5,2,2.5,3,3.5,4,4.5,5,5.5,6".to_string(),
                        ),
                        basis: Some(BasisArg::Poly),
                        parity: Some(ParityArg::Both),
                        n: None,
                        count: Some(5),
                    },
                )?;
                code = code.max(c);
            }
            Ok(code)
        }
        4 => super::limits::run(
            ctx,
            &LimitsArgs {
                which: "small".to_string(),
                r0: None,
                levels: Some(4),
                r0_list: None,
                lambda_list: None,
            },
        ),
        5 => super::limits::run(
            ctx,
            &LimitsArgs {
                which: "large".to_string(),
                r0: None,
                levels: None,
                r0_list: None,
                lambda_list: None,
            },
        ),
        6 => {
            let mut ctx6 = Ctx {
                format: ctx.format,
                out: ctx.out.clone(),
                digits: ctx.digits.max(31),
                policy: oscbox::ScalarPolicy::decimal(50)?,
                golden: ctx.golden,
            };
            if ctx.digits > 31 {
                ctx6.policy = oscbox::ScalarPolicy::decimal(ctx.digits.max(50))?;
            }
            super::pt::run(
                &ctx6,
                &PtArgs {
                    r0: Some("1".to_string()),
                    levels: Some(5),
                    order: Some(1),
                    n: Some(22),
                    grid: None,
                    ground: false,
                    terms: None,
                    show_partials: false,
                },
            )
        }
        7 => super::pt::run(
            ctx,
            &PtArgs {
                r0: None,
                levels: None,
                order: Some(1),
                n: Some(30),
                grid: Some("1..5".to_string()),
                ground: false,
                terms: None,
                show_partials: false,
            },
        ),
        other => Err(usage(&format!("--id {other} must be in 1..=7"))),
    }
}
