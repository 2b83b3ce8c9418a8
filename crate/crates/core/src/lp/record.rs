//! Line-oriented record files for LP verdicts.
//!
//! One JSON object per line:
//!
//! ```text
//! {"d":2,"b":3,"tau":0,"verdict":"feasible","witness":["3/2","-1/2"]}
//! {"d":1,"b":2,"tau":1,"verdict":"infeasible","certificate":["-2/1","1/1"]}
//! ```
//!
//! Rationals are always `numerator/denominator` strings. Certificate
//! multipliers follow the constraint order of [`super::MomentSystem`].

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_outcome, LpOutcome, MomentSystem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpRecord {
    #[serde(rename = "d")]
    pub degree: u32,
    pub b: u64,
    #[serde(with = "bit")]
    pub tau: bool,
    #[serde(flatten)]
    pub outcome: LpOutcome,
}

mod bit {
    use super::*;

    pub fn serialize<S: Serializer>(v: &bool, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(*v as u8)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<bool, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(false),
            1 => Ok(true),
            other => Err(serde::de::Error::custom(format!(
                "tau must be 0 or 1, got {other}"
            ))),
        }
    }
}

impl LpRecord {
    /// Re-validates the stored witness or certificate against a freshly
    /// built system.
    pub fn verify(&self) -> Result<bool> {
        let sys = MomentSystem::new(self.degree, self.b, self.tau)?;
        match check_outcome(&sys, &self.outcome) {
            Ok(ok) => Ok(ok),
            Err(Error::LengthMismatch { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

pub fn write_records<'a>(records: impl IntoIterator<Item = &'a LpRecord>) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Parses a record file; blank lines are ignored.
pub fn parse_records(text: &str) -> Result<Vec<LpRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l)
                .map_err(|e| Error::Input(format!("record on line {}: {e}", i + 1)))
        })
        .collect()
}

/// Summary of re-checking a record file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RecordCheck {
    pub records: usize,
    pub passed: usize,
    /// `(line-order index, d, b, tau, reason)` for each rejected record.
    pub failures: Vec<(usize, u32, u64, bool, String)>,
}

impl RecordCheck {
    pub fn run(records: &[LpRecord]) -> Self {
        let mut out = Self {
            records: records.len(),
            ..Self::default()
        };
        for (i, r) in records.iter().enumerate() {
            match r.verify() {
                Ok(true) => out.passed += 1,
                Ok(false) => out.failures.push((
                    i,
                    r.degree,
                    r.b,
                    r.tau,
                    "proof object does not validate".into(),
                )),
                Err(e) => out.failures.push((i, r.degree, r.b, r.tau, e.to_string())),
            }
        }
        out
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}
