use serde::{Deserialize, Serialize};

use crate::rep::{Conjugator, DEFAULT_VERIFY_LEN};

/// Knobs shared by every pipeline run. The seed is recorded in each
/// artifact so a run can be replayed exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Reduced words up to this many syllables are checked against `rho(w) = I`.
    pub verify_len: usize,
    /// First conjugator tried.
    pub conjugator: Conjugator,
    /// Total number of conjugators tried before giving up.
    pub max_conjugators: usize,
    /// Largest image group enumerated when sizing the quotient.
    pub closure_cap: usize,
    /// Retry `i >= 1` uses `random:(seed + i - 1)`.
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            verify_len: DEFAULT_VERIFY_LEN,
            conjugator: Conjugator::AllOnes,
            max_conjugators: 5,
            closure_cap: 10_000,
            seed: 0,
        }
    }
}

impl RunConfig {
    /// Conjugators in the order they are tried.
    pub fn conjugators(&self) -> impl Iterator<Item = Conjugator> + '_ {
        std::iter::once(self.conjugator)
            .chain((0..).map(|i: u64| Conjugator::Random(self.seed.wrapping_add(i))))
            .take(self.max_conjugators)
    }
}
