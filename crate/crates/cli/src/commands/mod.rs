pub mod analyze;
pub mod lp_check;
pub mod tables;
pub mod verify;

use std::path::Path;
use std::sync::Arc;

use junta_core::lp::{parse_records, BsBoundTable, DEFAULT_LP_MAX_DEGREE};
use junta_core::wrec::{CapContext, CapRegistry, SharedCap};

use crate::args::LpSource;
use crate::CliError;

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn warn_slow(degree: u32) {
    if degree > DEFAULT_LP_MAX_DEGREE {
        eprintln!(
            "warning: LP scans above degree {DEFAULT_LP_MAX_DEGREE} take a long time (requested {degree})"
        );
    }
}

/// LP bounds for degrees `1..=needed`: loaded and re-verified from
/// `--lp-records` when given, solved otherwise.
pub fn lp_table(src: &LpSource, needed: u32) -> Result<Arc<BsBoundTable>, CliError> {
    match &src.lp_records {
        Some(path) => {
            let records = parse_records(&read_file(path)?)?;
            let table = BsBoundTable::from_verified_records(records)?;
            if table.max_degree() < needed {
                return Err(CliError::Usage(format!(
                    "{} covers degrees up to {}, but {needed} are needed",
                    path.display(),
                    table.max_degree()
                )));
            }
            // keep only the degrees asked for, so --lp-max-degree is honoured
            let records = table.records().cloned().collect();
            Ok(Arc::new(BsBoundTable::from_records(needed, records)))
        }
        None => {
            warn_slow(needed);
            Ok(Arc::new(BsBoundTable::compute(needed)?))
        }
    }
}

/// Caps by registry name; the LP table is only built for `lp`.
pub fn caps(name: &str, src: &LpSource, depth: u32) -> Result<SharedCap, CliError> {
    let registry = CapRegistry::default();
    // fail on an unknown name before any expensive work
    if !registry.names().contains(&name) {
        return Err(CliError::Usage(format!(
            "unknown cap strategy `{name}` (available: {})",
            registry.names().join(", ")
        )));
    }
    let needed = depth.min(src.lp_max_degree);
    let ctx = CapContext {
        lp_max_degree: needed,
        lp_table: if name == "lp" {
            Some(lp_table(src, needed)?)
        } else {
            None
        },
    };
    Ok(registry.create(name, &ctx)?)
}
