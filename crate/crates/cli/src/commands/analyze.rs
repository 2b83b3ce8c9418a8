use std::fmt::Write as _;
use std::path::Path;

use junta_core::boolfn::{mask_coords, BooleanFunction};
use junta_core::measures::{MeasureReport, MAX_BS_ARITY};
use junta_core::ratio::{ceil_decimal, to_fraction_string};

use super::read_file;
use crate::args::{AnalyzeArgs, Common, Format};
use crate::{render, CliError, Outcome};

/// A literal truth table, or else the contents of the named file.
fn load(input: &str) -> Result<BooleanFunction, CliError> {
    match input.parse::<BooleanFunction>() {
        Ok(f) => Ok(f),
        Err(parse_err) => {
            let path = Path::new(input);
            if path.is_file() {
                Ok(read_file(path)?.trim().parse()?)
            } else {
                Err(parse_err.into())
            }
        }
    }
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt(v: &Option<u32>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn sets(masks: &[u32]) -> String {
    list(
        masks
            .iter()
            .map(|&m| format!("{{{}}}", list(mask_coords(m)))),
    )
}

pub fn run(c: &Common, a: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let f = load(&a.input)?;
    if f.arity() > MAX_BS_ARITY {
        return Err(CliError::Usage(format!(
            "arity {} is above the analysis limit {MAX_BS_ARITY}",
            f.arity()
        )));
    }
    let r = MeasureReport::compute(&f)?;
    let digits = c.digits as usize;
    let exact = |v| format!("{} ≤ {}", to_fraction_string(v), ceil_decimal(v, digits));
    let stdout = match c.format {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "function: {}", r.function).unwrap();
            writeln!(s, "arity: {}", r.arity).unwrap();
            writeln!(s, "degree: {}", r.degree).unwrap();
            writeln!(s, "deg_i: {}", list(r.var_degrees.iter().map(opt))).unwrap();
            writeln!(s, "relevant: {{{}}}", list(&r.relevant)).unwrap();
            writeln!(
                s,
                "influence: {}",
                list(r.influence.iter().map(to_fraction_string))
            )
            .unwrap();
            writeln!(s, "total influence: {}", exact(&r.total_influence)).unwrap();
            writeln!(s, "sensitivity: {}", r.sensitivity).unwrap();
            writeln!(
                s,
                "block sensitivity: {} (input {}, blocks {})",
                r.block_sensitivity,
                r.block_witness.base_input,
                sets(&r.block_witness.blocks)
            )
            .unwrap();
            writeln!(s, "W: {}", exact(&r.w_value)).unwrap();
            writeln!(s, "s_i: {}", list(r.s_index.iter().map(opt))).unwrap();
            writeln!(s, "S: {}", exact(&r.s_value)).unwrap();
            writeln!(
                s,
                "top monomials: {} of degree {}, max disjoint ℓ = {}: {}",
                r.top_monomials.all.len(),
                r.top_monomials.degree,
                r.top_monomials.ell(),
                sets(&r.top_monomials.maximum)
            )
            .unwrap();
            s
        }
        Format::Json => render::json(&r),
        Format::Csv => render::csv(
            &[
                "function",
                "arity",
                "degree",
                "relevant",
                "total_influence",
                "sensitivity",
                "block_sensitivity",
                "w",
                "s",
                "ell",
            ],
            [vec![
                r.function.clone(),
                r.arity.to_string(),
                r.degree.to_string(),
                r.relevant.len().to_string(),
                to_fraction_string(&r.total_influence),
                r.sensitivity.to_string(),
                r.block_sensitivity.to_string(),
                to_fraction_string(&r.w_value),
                to_fraction_string(&r.s_value),
                r.top_monomials.ell().to_string(),
            ]],
        )?,
    };
    Ok(Outcome::success(stdout))
}
