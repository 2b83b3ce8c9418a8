//! Block-sensitivity cap strategies, selectable by name.
//!
//! A cap gives, for each degree `d`, an integer `cap(d) ≥ bs(f)` valid for
//! every degree-`d` function. Strategies live behind [`BsCap`] and are
//! constructed through a [`CapRegistry`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lp::{BsBoundTable, DEFAULT_LP_MAX_DEGREE};

pub trait BsCap: Send + Sync + fmt::Debug {
    /// Registry name.
    fn name(&self) -> &'static str;

    /// Upper bound on `bs(f)` for `deg(f) = d`; never above `d²`.
    fn cap(&self, degree: u32) -> u64;
}

pub type SharedCap = Arc<dyn BsCap>;

fn square(d: u32) -> u64 {
    (d as u64) * (d as u64)
}

/// `bs(f) ≤ deg(f)²` everywhere.
#[derive(Debug, Clone, Copy, Default)]
pub struct WorstCaseCaps;

impl BsCap for WorstCaseCaps {
    fn name(&self) -> &'static str {
        "worst"
    }

    fn cap(&self, degree: u32) -> u64 {
        square(degree)
    }
}

/// LP-derived `b(d)` where known, `d²` beyond.
#[derive(Debug, Clone)]
pub struct LpCaps {
    bounds: BTreeMap<u32, u64>,
}

impl LpCaps {
    /// Entries above `d²` are clamped to `d²`.
    pub fn from_bounds(bounds: impl IntoIterator<Item = (u32, u64)>) -> Self {
        Self {
            bounds: bounds
                .into_iter()
                .map(|(d, b)| (d, b.min(square(d))))
                .collect(),
        }
    }

    pub fn from_table(table: &BsBoundTable) -> Self {
        Self::from_bounds(table.bounds())
    }

    /// Runs the LP scan for `d = 1..=max_degree`.
    pub fn compute(max_degree: u32) -> Result<Self> {
        Ok(Self::from_table(&BsBoundTable::compute(max_degree)?))
    }

    pub fn max_degree(&self) -> u32 {
        self.bounds.keys().next_back().copied().unwrap_or(0)
    }
}

impl BsCap for LpCaps {
    fn name(&self) -> &'static str {
        "lp"
    }

    fn cap(&self, degree: u32) -> u64 {
        self.bounds
            .get(&degree)
            .copied()
            .unwrap_or_else(|| square(degree))
    }
}

/// Inputs available to cap factories.
#[derive(Debug, Clone)]
pub struct CapContext {
    /// Largest degree for which LP bounds are computed.
    pub lp_max_degree: u32,
    /// Precomputed LP table, reused instead of re-solving when present.
    pub lp_table: Option<Arc<BsBoundTable>>,
}

impl Default for CapContext {
    fn default() -> Self {
        Self {
            lp_max_degree: DEFAULT_LP_MAX_DEGREE,
            lp_table: None,
        }
    }
}

type CapFactory = Box<dyn Fn(&CapContext) -> Result<SharedCap> + Send + Sync>;

/// Name → constructor map for cap strategies.
pub struct CapRegistry {
    factories: BTreeMap<&'static str, CapFactory>,
}

impl CapRegistry {
    pub fn empty() -> Self {
        Self {
            factories: BTreeMap::new(),
        }
    }

    pub fn register<F>(&mut self, name: &'static str, factory: F) -> Result<()>
    where
        F: Fn(&CapContext) -> Result<SharedCap> + Send + Sync + 'static,
    {
        if self.factories.contains_key(name) {
            return Err(Error::Input(format!(
                "cap strategy `{name}` registered twice"
            )));
        }
        self.factories.insert(name, Box::new(factory));
        Ok(())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.factories.keys().copied().collect()
    }

    pub fn create(&self, name: &str, ctx: &CapContext) -> Result<SharedCap> {
        let factory = self.factories.get(name).ok_or_else(|| Error::UnknownName {
            kind: "cap strategy",
            name: name.to_string(),
            available: self.names().join(", "),
        })?;
        factory(ctx)
    }
}

impl Default for CapRegistry {
    /// `worst` and `lp`.
    fn default() -> Self {
        let mut reg = Self::empty();
        reg.register("worst", |_| Ok(Arc::new(WorstCaseCaps) as SharedCap))
            .expect("fresh registry");
        reg.register("lp", |ctx| {
            let caps = match &ctx.lp_table {
                Some(t) => LpCaps::from_table(t),
                None => LpCaps::compute(ctx.lp_max_degree)?,
            };
            Ok(Arc::new(caps) as SharedCap)
        })
        .expect("fresh registry");
        reg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_is_square() {
        let w = WorstCaseCaps;
        assert_eq!(w.cap(0), 0);
        assert_eq!(w.cap(7), 49);
    }

    #[test]
    fn lp_caps_fall_back_and_clamp() {
        let lp = LpCaps::from_bounds([(1, 1), (2, 3), (3, 99)]);
        assert_eq!(lp.cap(2), 3);
        assert_eq!(lp.cap(3), 9);
        assert_eq!(lp.cap(20), 400);
        assert_eq!(lp.max_degree(), 3);
        for d in 0..30 {
            assert!(lp.cap(d) <= WorstCaseCaps.cap(d));
        }
    }

    #[test]
    fn registry_lookup() {
        let reg = CapRegistry::default();
        assert_eq!(reg.names(), vec!["lp", "worst"]);
        let ctx = CapContext {
            lp_max_degree: 3,
            lp_table: None,
        };
        let lp = reg.create("lp", &ctx).unwrap();
        assert_eq!(lp.name(), "lp");
        assert_eq!((lp.cap(1), lp.cap(2), lp.cap(3), lp.cap(4)), (1, 3, 6, 16));
        assert_eq!(reg.create("worst", &ctx).unwrap().cap(3), 9);
        assert!(matches!(
            reg.create("best", &ctx),
            Err(Error::UnknownName { .. })
        ));
        let mut reg = reg;
        assert!(reg
            .register("worst", |_| Ok(Arc::new(WorstCaseCaps) as SharedCap))
            .is_err());
    }
}
