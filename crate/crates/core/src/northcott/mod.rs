//! Infinite sets with finite Northcott number: iterated sequences, the Habegger bound,
//! length-bounded polynomial families and radical towers.
//!
//! Nothing here computes m(S) from finite data. A [`NorthcottEstimate`] keeps an upper
//! bound backed by a certificate apart from the heights actually computed.

mod families;
mod habegger;
mod sequence;

use serde::Serialize;

use crate::heights::HeightValue;

pub use families::{
    prime_constant_family, radical_tower, selmer_family, unramified_tower_bound, PrimeFamilyCertificate,
    SelmerEntry, SelmerReport,
};
pub use habegger::{habegger_bound, habegger_gamma, recurrence_check, HabeggerBound, RecurrencePair, RecurrenceReport};
pub use sequence::{
    conjugate_tracking_heights, iterate_sequence, smyth_polynomial, Mode, RootSelection, SequenceEntry,
    SequenceProfile, SequenceSpec, Tag,
};

/// Limit point of the Smyth heights, as reported in the literature.
pub const SMYTH_LIMIT: f64 = 0.2732;
/// Upper bound for the Northcott number of the Smyth set.
pub const SMYTH_BOUND: f64 = 0.274;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    Habegger,
    Length,
    Tower,
    Exact,
}

#[derive(Clone, Debug, Serialize)]
pub struct Observation {
    pub label: String,
    pub height: HeightValue,
    /// Bound proven for this element alone (e.g. log|f|_1 / deg f), if any.
    pub element_bound: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NorthcottEstimate {
    pub certified_upper_bound: Option<f64>,
    pub certificate: Certificate,
    pub empirical: Vec<Observation>,
}

impl NorthcottEstimate {
    /// Every computed height sits below its own bound, or below the global bound when
    /// the certificate covers all elements at once (Habegger).
    pub fn dominates_profile(&self) -> bool {
        self.empirical.iter().all(|o| match o.element_bound.or(self.certified_upper_bound) {
            None => true,
            Some(b) => o.height.lower() <= b,
        })
    }
}
