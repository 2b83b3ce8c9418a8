use std::fmt::Write as _;
use std::sync::Arc;

use junta_core::oracle::{run_suite_with, CheckRegistry, SuiteContext, MAX_SUITE_ARITY};
use junta_core::wrec::{w_table, LpCaps, WorstCaseCaps};

use super::lp_table;
use crate::args::{Common, Format, VerifyArgs};
use crate::{render, CliError, Outcome};

pub fn run(c: &Common, a: &VerifyArgs) -> Result<Outcome, CliError> {
    if a.n == 0 || a.n > MAX_SUITE_ARITY {
        return Err(CliError::Usage(format!(
            "--n must be between 1 and {MAX_SUITE_ARITY}"
        )));
    }
    let standard = CheckRegistry::standard();
    let checks = if a.checks.is_empty() {
        standard
    } else {
        let names: Vec<&str> = a.checks.iter().map(String::as_str).collect();
        standard.select(&names)?
    };

    // degrees never exceed the arity
    let depth = a.n as u32;
    let bs = lp_table(&a.lp, depth.min(a.lp.lp_max_degree))?;
    let lp = LpCaps::from_table(&bs);
    let ctx = SuiteContext {
        w_tables: vec![
            Arc::new(w_table(depth, &WorstCaseCaps, true)?),
            Arc::new(w_table(depth, &lp, true)?),
        ],
        bs_table: bs,
    };
    let report = run_suite_with(a.n, &checks, &ctx)?;

    let stdout = match c.format {
        Format::Text => {
            let mut s = format!(
                "arity {}: {} functions, {} composed pairs\n",
                report.arity, report.functions_checked, report.pairs_checked
            );
            writeln!(
                s,
                "{:<26} {:>8} {:>8} {:>8}",
                "check", "passed", "vacuous", "failed"
            )
            .unwrap();
            for (name, t) in &report.checks {
                writeln!(
                    s,
                    "{name:<26} {:>8} {:>8} {:>8}",
                    t.passed, t.vacuous, t.failed
                )
                .unwrap();
            }
            writeln!(s, "counterexamples: {}", report.counterexamples.len()).unwrap();
            for ce in &report.counterexamples {
                writeln!(s, "  {} [{}] {}", ce.function, ce.check, ce.details).unwrap();
            }
            s
        }
        Format::Json => render::json(&report),
        Format::Csv => render::csv(
            &["check", "passed", "vacuous", "failed"],
            report.checks.iter().map(|(name, t)| {
                vec![
                    name.clone(),
                    t.passed.to_string(),
                    t.vacuous.to_string(),
                    t.failed.to_string(),
                ]
            }),
        )?,
    };
    Ok(Outcome {
        stdout,
        ok: report.all_passed(),
    })
}
