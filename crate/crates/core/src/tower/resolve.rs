use crate::discrepancy::GermModel;
use crate::error::{Error, Result};

use super::BlowupTower;

/// Far beyond anything a finite cluster needs; guards against a bookkeeping bug.
const MAX_STEPS: usize = 10_000;

/// Blows up non-SNC points of the germ's boundary until none remain.
///
/// Every bad point either carries a branch cluster point, a node, or three
/// components; each blow-up consumes a cluster point or separates
/// components, so this terminates.
pub fn resolve_pair(germ: &GermModel) -> Result<BlowupTower> {
    resolve_tower(BlowupTower::new(germ))
}

pub(crate) fn resolve_tower(mut t: BlowupTower) -> Result<BlowupTower> {
    for _ in 0..MAX_STEPS {
        match t.bad_point() {
            None => return Ok(t),
            Some(p) => t = t.blow_up(p)?,
        }
    }
    Err(Error::Unresolved(format!("no SNC model within {MAX_STEPS} blow-ups")))
}
