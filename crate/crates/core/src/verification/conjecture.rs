//! Bounded scans for S(n) = S(n+1) and S(n) + S(n+1) = S(n+2).
//!
//! Scans walk n = 2..=limit in blocks that end at multiples of
//! [`CHECKPOINT_STRIDE`]. Within a block the S values are computed in
//! parallel; solutions are then emitted in increasing order and a
//! [`Checkpoint`] is produced at each block boundary so an interrupted
//! scan can resume.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::{s, s_oracle};
use crate::error::{Error, Result};

pub const CHECKPOINT_STRIDE: u64 = 100_000;

/// First n examined. n = 1 is skipped: with S(1) = 1 it would make
/// S(1) + S(2) = S(3) a degenerate solution.
pub const SCAN_START: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjecture {
    /// S(n) = S(n+1) has no solutions.
    Tutescu,
    /// S(n) + S(n+1) = S(n+2) has infinitely many solutions.
    Radu,
}

impl Conjecture {
    pub fn name(self) -> &'static str {
        match self {
            Conjecture::Tutescu => "tutescu",
            Conjecture::Radu => "radu",
        }
    }

    pub fn default_limit(self) -> u64 {
        match self {
            Conjecture::Tutescu => 1_000_000,
            Conjecture::Radu => 100_000,
        }
    }

    fn holds_at(self, window: &[u64]) -> bool {
        match self {
            Conjecture::Tutescu => window[0] == window[1],
            Conjecture::Radu => window[0] + window[1] == window[2],
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tutescu" => Ok(Conjecture::Tutescu),
            "radu" => Ok(Conjecture::Radu),
            other => Err(Error::domain(
                "conjecture",
                format!("unknown conjecture `{other}`"),
            )),
        }
    }
}

/// Resumable scan state: every n < `next` has been examined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub conjecture: Conjecture,
    pub limit: u64,
    pub next: u64,
    pub solutions: Vec<u64>,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Checkpoint(e.to_string()))
    }

    /// Writes through a temporary file so a crash never leaves a torn file.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let text = serde_json::to_string(self).map_err(|e| Error::Checkpoint(e.to_string()))?;
        std::fs::write(&tmp, text)
            .and_then(|()| std::fs::rename(&tmp, path))
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))
    }

    fn check_resumable(&self, conjecture: Conjecture, limit: u64) -> Result<()> {
        if self.conjecture != conjecture {
            return Err(Error::Checkpoint(format!(
                "checkpoint is for {}, not {conjecture}",
                self.conjecture
            )));
        }
        if self.limit != limit {
            return Err(Error::Checkpoint(format!(
                "checkpoint limit {} differs from requested {limit}",
                self.limit
            )));
        }
        let aligned = self.next == SCAN_START
            || self.next.is_multiple_of(CHECKPOINT_STRIDE)
            || self.next == limit.saturating_add(1);
        if !aligned || self.next > limit.saturating_add(1) {
            return Err(Error::Checkpoint(format!(
                "invalid resume point {}",
                self.next
            )));
        }
        if self.solutions.iter().any(|&n| n >= self.next) {
            return Err(Error::Checkpoint(
                "solutions lie beyond the resume point".into(),
            ));
        }
        Ok(())
    }
}

/// Runs (or resumes) a scan. `on_solution` sees each solution in order as
/// soon as its block is done; `on_checkpoint` sees the state after every
/// block. Returns all solutions, including those carried by `resume`.
pub fn scan(
    conjecture: Conjecture,
    limit: u64,
    resume: Option<Checkpoint>,
    mut on_solution: impl FnMut(u64),
    mut on_checkpoint: impl FnMut(&Checkpoint) -> Result<()>,
) -> Result<Vec<u64>> {
    if limit < 2 {
        return Err(Error::domain("scan", "limit must be at least 2"));
    }
    // n + 2 must stay representable.
    if limit > u64::MAX - 2 {
        return Err(Error::overflow("scan"));
    }
    let mut state = match resume {
        Some(cp) => {
            cp.check_resumable(conjecture, limit)?;
            cp
        }
        None => Checkpoint {
            conjecture,
            limit,
            next: SCAN_START,
            solutions: Vec::new(),
        },
    };
    let lookahead = match conjecture {
        Conjecture::Tutescu => 1,
        Conjecture::Radu => 2,
    };

    while state.next <= limit {
        let lo = state.next;
        let hi = ((lo / CHECKPOINT_STRIDE + 1) * CHECKPOINT_STRIDE - 1).min(limit);
        let values: Vec<u64> = (lo..=hi + lookahead)
            .into_par_iter()
            .map(s)
            .collect::<Result<_>>()?;
        for (offset, window) in values.windows(lookahead as usize + 1).enumerate() {
            if conjecture.holds_at(window) {
                let n = lo + offset as u64;
                if conjecture == Conjecture::Radu {
                    reverify_radu(n)?;
                }
                state.solutions.push(n);
                on_solution(n);
            }
        }
        state.next = hi + 1;
        on_checkpoint(&state)?;
    }
    Ok(state.solutions)
}

/// Confirms a Radu solution with the definition-literal oracle.
fn reverify_radu(n: u64) -> Result<()> {
    let (a, b, c) = (s_oracle(n)?, s_oracle(n + 1)?, s_oracle(n + 2)?);
    if a + b == c {
        Ok(())
    } else {
        Err(Error::domain(
            "radu_scan",
            format!("oracle rejects n = {n}: S values {a}, {b}, {c}"),
        ))
    }
}

/// Every n in 2..=limit with S(n) = S(n+1).
pub fn tutescu_scan(limit: u64) -> Result<Vec<u64>> {
    scan(Conjecture::Tutescu, limit, None, |_| {}, |_| Ok(()))
}

/// Every n in 2..=limit with S(n) + S(n+1) = S(n+2), each confirmed by the
/// oracle.
pub fn radu_scan(limit: u64) -> Result<Vec<u64>> {
    scan(Conjecture::Radu, limit, None, |_| {}, |_| Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(conj: Conjecture, limit: u64) -> Vec<u64> {
        (SCAN_START..=limit)
            .filter(|&n| {
                let v: Vec<u64> = (n..=n + 2).map(|k| s_oracle(k).unwrap()).collect();
                conj.holds_at(&v)
            })
            .collect()
    }

    #[test]
    fn small_limits() {
        assert_eq!(tutescu_scan(2).unwrap(), Vec::<u64>::new());
        assert_eq!(tutescu_scan(100).unwrap(), Vec::<u64>::new());
        assert_eq!(radu_scan(2).unwrap(), Vec::<u64>::new());
        assert!(tutescu_scan(1).is_err());
    }

    #[test]
    fn scans_match_brute_force() {
        assert_eq!(radu_scan(3_000).unwrap(), brute(Conjecture::Radu, 3_000));
        assert_eq!(
            tutescu_scan(3_000).unwrap(),
            brute(Conjecture::Tutescu, 3_000)
        );
    }

    #[test]
    fn resume_reproduces_a_full_run() {
        let limit = 250_000;
        let full = radu_scan(limit).unwrap();
        let mut checkpoints = Vec::new();
        scan(
            Conjecture::Radu,
            limit,
            None,
            |_| {},
            |cp| {
                checkpoints.push(cp.clone());
                Ok(())
            },
        )
        .unwrap();
        let nexts: Vec<u64> = checkpoints.iter().map(|c| c.next).collect();
        assert_eq!(nexts, vec![100_000, 200_000, 250_001]);

        let mut streamed = Vec::new();
        let resumed = scan(
            Conjecture::Radu,
            limit,
            Some(checkpoints[0].clone()),
            |n| streamed.push(n),
            |_| Ok(()),
        )
        .unwrap();
        assert_eq!(resumed, full);
        assert!(streamed.iter().all(|&n| n >= 100_000));
    }

    #[test]
    fn checkpoint_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.json");
        let cp = Checkpoint {
            conjecture: Conjecture::Tutescu,
            limit: 1_000_000,
            next: 300_000,
            solutions: vec![],
        };
        cp.save(&path).unwrap();
        assert_eq!(Checkpoint::load(&path).unwrap(), cp);
    }

    #[test]
    fn mismatched_checkpoints_are_rejected() {
        let cp = Checkpoint {
            conjecture: Conjecture::Tutescu,
            limit: 500_000,
            next: 100_000,
            solutions: vec![],
        };
        let run =
            |c: Conjecture, limit, cp: Checkpoint| scan(c, limit, Some(cp), |_| {}, |_| Ok(()));
        assert!(run(Conjecture::Radu, 500_000, cp.clone()).is_err());
        assert!(run(Conjecture::Tutescu, 400_000, cp.clone()).is_err());
        let unaligned = Checkpoint {
            next: 123,
            ..cp.clone()
        };
        assert!(run(Conjecture::Tutescu, 500_000, unaligned).is_err());
        let ahead = Checkpoint {
            solutions: vec![150_000],
            ..cp
        };
        assert!(run(Conjecture::Tutescu, 500_000, ahead).is_err());
    }
}
