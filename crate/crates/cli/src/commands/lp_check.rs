use std::fmt::Write as _;

use junta_core::lp::{parse_records, RecordCheck};

use super::read_file;
use crate::args::{Common, Format, LpCheckArgs};
use crate::{render, CliError, Outcome};

pub fn run(c: &Common, a: &LpCheckArgs) -> Result<Outcome, CliError> {
    let records = parse_records(&read_file(&a.input)?)?;
    let check = RecordCheck::run(&records);
    let stdout = match c.format {
        Format::Text => {
            let mut s = if check.records == 0 {
                "0 records\n".to_string()
            } else {
                format!(
                    "{} records, {} valid, {} invalid\n",
                    check.records,
                    check.passed,
                    check.failures.len()
                )
            };
            for (i, d, b, tau, why) in &check.failures {
                writeln!(
                    s,
                    "  record {} (d={d}, b={b}, tau={}): {why}",
                    i + 1,
                    *tau as u8
                )
                .unwrap();
            }
            s
        }
        Format::Json => render::json(&check),
        Format::Csv => render::csv(
            &["record", "d", "b", "tau", "reason"],
            check.failures.iter().map(|(i, d, b, tau, why)| {
                vec![
                    (i + 1).to_string(),
                    d.to_string(),
                    b.to_string(),
                    (*tau as u8).to_string(),
                    why.clone(),
                ]
            }),
        )?,
    };
    Ok(Outcome {
        stdout,
        ok: check.all_passed(),
    })
}
