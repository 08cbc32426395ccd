//! Ordinates of nontrivial zeros of ζ: ingestion, computation and completeness checks.

mod count;
mod finder;
mod io;
pub mod siegel;
mod tables;

pub use count::{count_check, required_zero_accuracy, rosser_main_term, summand_sensitivity};
pub use finder::compute_zeros;
pub use io::{load_binary, load_text, load_zeros, save_binary, save_text};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest height the built-in finder will attempt.
pub const MAX_COMPUTE_HEIGHT: f64 = 1e7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroSource {
    File,
    Computed,
}

/// Ascending zero ordinates, complete up to `height`, each within `accuracy`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroList {
    gammas: Vec<f64>,
    height: f64,
    accuracy: f64,
    source: ZeroSource,
}

/// What a zero list promises, without the ordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroCoverage {
    pub height: f64,
    pub accuracy: f64,
    pub count: usize,
}

impl ZeroList {
    pub fn new(gammas: Vec<f64>, height: f64, accuracy: f64, source: ZeroSource) -> Result<Self> {
        if !(accuracy >= 0.0) || !accuracy.is_finite() {
            return Err(Error::ZeroTable(format!("invalid accuracy {accuracy}")));
        }
        if let Some(&first) = gammas.first() {
            if !(first > 14.0) {
                return Err(Error::ZeroTable(format!("first ordinate {first} is not above 14")));
            }
        }
        if let Some(i) = gammas.windows(2).position(|w| !(w[0] < w[1])) {
            return Err(Error::ZeroTable(format!(
                "ordinates not strictly ascending at index {}: {} then {}",
                i + 1,
                gammas[i],
                gammas[i + 1]
            )));
        }
        if gammas.iter().any(|g| !g.is_finite()) {
            return Err(Error::ZeroTable("non-finite ordinate".into()));
        }
        let last = gammas.last().copied().unwrap_or(0.0);
        if !(height >= last) {
            return Err(Error::ZeroTable(format!("height {height} below last ordinate {last}")));
        }
        Ok(Self {
            gammas,
            height,
            accuracy,
            source,
        })
    }

    /// The exact list of zeros below 1000 from the built-in table.
    pub fn builtin(height: f64) -> Result<Self> {
        if !(height < 1000.0) {
            return Err(Error::ZeroTable("built-in table only reaches 1000".into()));
        }
        let gammas = tables::SMALL_ZEROS.iter().copied().take_while(|&g| g <= height).collect();
        Self::new(gammas, height, 1e-15, ZeroSource::Computed)
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn accuracy(&self) -> f64 {
        self.accuracy
    }

    pub fn source(&self) -> ZeroSource {
        self.source
    }

    pub fn count(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    /// Number of ordinates `≤ t`.
    pub fn count_below(&self, t: f64) -> usize {
        self.gammas.partition_point(|&g| g <= t)
    }

    pub fn coverage(&self) -> ZeroCoverage {
        ZeroCoverage {
            height: self.height,
            accuracy: self.accuracy,
            count: self.count(),
        }
    }

    /// Copy restricted to ordinates `≤ t`, with coverage lowered to `t`.
    pub fn truncated(&self, t: f64) -> Self {
        let n = self.count_below(t);
        Self {
            gammas: self.gammas[..n].to_vec(),
            height: t.min(self.height),
            accuracy: self.accuracy,
            source: self.source,
        }
    }

    pub fn count_check(&self, t: f64) -> bool {
        t <= self.height && count_check(&self.gammas, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates() {
        assert!(ZeroList::new(vec![14.1, 21.0], 22.0, 1e-9, ZeroSource::File).is_ok());
        assert!(ZeroList::new(vec![13.9], 22.0, 1e-9, ZeroSource::File).is_err());
        assert!(ZeroList::new(vec![21.0, 14.2], 22.0, 1e-9, ZeroSource::File).is_err());
        assert!(ZeroList::new(vec![14.2, 14.2], 22.0, 1e-9, ZeroSource::File).is_err());
        assert!(ZeroList::new(vec![14.2, 30.0], 22.0, 1e-9, ZeroSource::File).is_err());
    }

    #[test]
    fn builtin_counts() {
        assert_eq!(ZeroList::builtin(30.0).unwrap().count(), 3);
        assert_eq!(ZeroList::builtin(100.0).unwrap().count(), 29);
        assert_eq!(ZeroList::builtin(999.9).unwrap().count(), 649);
        let z = ZeroList::builtin(100.0).unwrap();
        assert_eq!(z.count_below(25.0), 2);
        assert_eq!(z.truncated(25.0).count(), 2);
    }
}
