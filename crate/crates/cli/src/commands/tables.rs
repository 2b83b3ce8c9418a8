//! `bs-table`, `w-table`, `w-star` and `baseline`.

use std::fmt::Write as _;

use junta_core::lp::{write_records, BsBoundTable, LpOutcome, DEFAULT_LP_MAX_DEGREE};
use junta_core::ratio::{ceil_decimal, int, to_fraction_string, Rational};
use junta_core::wrec::{chs_baseline, w_star_from_table, w_table as build_w_table};
use serde::Serialize;

use super::caps;
use crate::args::{BaselineArgs, BsTableArgs, Common, Format, WArgs};
use crate::{render, CliError, Outcome};

#[derive(Serialize)]
struct BsRow {
    d: u32,
    b: u64,
    /// τ of the witness below; absent for the conventional `b = 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<u8>,
    witness: Vec<String>,
}

fn bs_rows(table: &BsBoundTable) -> Vec<BsRow> {
    table
        .entries()
        .map(|e| {
            let found = e.records.iter().find_map(|r| match &r.outcome {
                LpOutcome::Feasible { witness } if r.b == e.bound => Some((r.tau, witness.clone())),
                _ => None,
            });
            let (tau, witness) = match found {
                Some((t, w)) => (Some(t as u8), w),
                // b = 1: p = (1, 0, …, 0) has p(1) = 1
                None => (
                    None,
                    (0..e.degree)
                        .map(|j| int((j == 0) as i64))
                        .collect::<Vec<Rational>>(),
                ),
            };
            BsRow {
                d: e.degree,
                b: e.bound,
                tau,
                witness: witness.iter().map(to_fraction_string).collect(),
            }
        })
        .collect()
}

pub fn bs_table(c: &Common, a: &BsTableArgs) -> Result<Outcome, CliError> {
    if a.dmax > DEFAULT_LP_MAX_DEGREE {
        if !a.allow_slow {
            return Err(CliError::Usage(format!(
                "--dmax {} is above the default ceiling {DEFAULT_LP_MAX_DEGREE}; pass --allow-slow to run it anyway",
                a.dmax
            )));
        }
        eprintln!("warning: LP scans above degree {DEFAULT_LP_MAX_DEGREE} take a long time");
    }
    let table = BsBoundTable::compute(a.dmax)?;
    if let Some(path) = &a.persist {
        std::fs::write(path, write_records(table.records()))
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let rows = bs_rows(&table);
    let stdout = match c.format {
        Format::Text => {
            let mut s = String::from("d → b(d)\n");
            for r in &rows {
                writeln!(s, "{} → {}", r.d, r.b).unwrap();
            }
            s
        }
        Format::Json => render::json(&rows),
        Format::Csv => render::csv(
            &["d", "b"],
            rows.iter().map(|r| vec![r.d.to_string(), r.b.to_string()]),
        )?,
    };
    Ok(Outcome::success(stdout))
}

#[derive(Serialize)]
struct WRow {
    d: u32,
    cap: u64,
    w: String,
    decimal: String,
}

#[derive(Serialize)]
struct WTableReport {
    caps: String,
    half_degree: bool,
    depth: u32,
    entries: Vec<WRow>,
}

fn table_for(a: &WArgs) -> Result<junta_core::wrec::WBoundTable, CliError> {
    let caps = caps(&a.caps, &a.lp, a.depth)?;
    Ok(build_w_table(a.depth, caps.as_ref(), !a.no_half_degree)?)
}

pub fn w_table(c: &Common, a: &WArgs) -> Result<Outcome, CliError> {
    let table = table_for(a)?;
    let digits = c.digits as usize;
    let report = WTableReport {
        caps: table.cap_mode().to_string(),
        half_degree: table.half_degree(),
        depth: a.depth,
        entries: (1..=a.depth)
            .map(|d| {
                let v = table.head(d).expect("table covers its depth");
                WRow {
                    d,
                    cap: table.cap(d).expect("table covers its depth"),
                    w: to_fraction_string(&v),
                    decimal: ceil_decimal(&v, digits),
                }
            })
            .collect(),
    };
    let stdout = match c.format {
        Format::Text => {
            let mut s = format!(
                "caps: {}, half-degree cap: {}\nd → W[cap(d)][d]\n",
                report.caps,
                if report.half_degree { "on" } else { "off" }
            );
            for r in &report.entries {
                writeln!(s, "{} → {} ≤ {}  (cap {})", r.d, r.w, r.decimal, r.cap).unwrap();
            }
            s
        }
        Format::Json => render::json(&report),
        Format::Csv => render::csv(
            &["d", "cap", "w", "decimal"],
            report.entries.iter().map(|r| {
                vec![
                    r.d.to_string(),
                    r.cap.to_string(),
                    r.w.clone(),
                    r.decimal.clone(),
                ]
            }),
        )?,
    };
    Ok(Outcome::success(stdout))
}

#[derive(Serialize)]
struct WStarReport {
    depth: u32,
    caps: String,
    half_degree: bool,
    head: String,
    tail: String,
    total: String,
    head_decimal: String,
    tail_decimal: String,
    total_decimal: String,
}

pub fn w_star(c: &Common, a: &WArgs) -> Result<Outcome, CliError> {
    let star = w_star_from_table(&table_for(a)?)?;
    let (hd, td, sd) = star.decimals(c.digits as usize);
    let report = WStarReport {
        depth: star.depth,
        caps: star.cap_mode.clone(),
        half_degree: star.half_degree,
        head: to_fraction_string(&star.head),
        tail: to_fraction_string(&star.tail),
        total: to_fraction_string(&star.total),
        head_decimal: hd,
        tail_decimal: td,
        total_decimal: sd,
    };
    let stdout = match c.format {
        Format::Text => format!(
            "caps: {}, depth: {}, half-degree cap: {}\nhead  = {} ≤ {}\ntail  = {} ≤ {}\ntotal = {} ≤ {}\n",
            report.caps,
            report.depth,
            if report.half_degree { "on" } else { "off" },
            report.head,
            report.head_decimal,
            report.tail,
            report.tail_decimal,
            report.total,
            report.total_decimal
        ),
        Format::Json => render::json(&report),
        Format::Csv => render::csv(
            &["depth", "caps", "head", "tail", "total", "head_decimal", "tail_decimal", "total_decimal"],
            [vec![
                report.depth.to_string(),
                report.caps,
                report.head,
                report.tail,
                report.total,
                report.head_decimal,
                report.tail_decimal,
                report.total_decimal,
            ]],
        )?,
    };
    Ok(Outcome::success(stdout))
}

#[derive(Serialize)]
struct BaselineReport {
    searched_depth: u32,
    argmin: u32,
    value: String,
    decimal: String,
}

pub fn baseline(c: &Common, a: &BaselineArgs) -> Result<Outcome, CliError> {
    let b = chs_baseline(a.depth)?;
    let report = BaselineReport {
        searched_depth: a.depth,
        argmin: b.argmin,
        value: to_fraction_string(&b.value),
        decimal: ceil_decimal(&b.value, c.digits as usize),
    };
    let stdout = match c.format {
        Format::Text => format!(
            "min over d ≤ {} of d/2 + tail(d+1): d = {}, value = {} ≤ {}\n",
            report.searched_depth, report.argmin, report.value, report.decimal
        ),
        Format::Json => render::json(&report),
        Format::Csv => render::csv(
            &["searched_depth", "argmin", "value", "decimal"],
            [vec![
                report.searched_depth.to_string(),
                report.argmin.to_string(),
                report.value,
                report.decimal,
            ]],
        )?,
    };
    Ok(Outcome::success(stdout))
}
