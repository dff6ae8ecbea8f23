//! Step-counting harness for the generators.
//!
//! Each generator reports the elementary operations it performs (tree
//! nodes visited, state mutations) in an [`OpCounter`]. Setup work is kept
//! apart in `preprocessing` so the steps-per-output ratio reflects the
//! traversal alone. Runs may be capped at a budget of outputs; the ratio
//! is then taken over the prefix that was produced.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ksum::C4State;
use crate::square::try_gen_vh_counted;
use crate::strip::try_gen_strip_counted;

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter {
    pub steps: u64,
    pub outputs: u64,
    pub preprocessing: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchTarget {
    Subsets { n: usize, k: u64 },
    Square { n: usize, k: u64 },
    Strip { r: usize, n: usize },
}

impl BenchTarget {
    pub fn label(&self) -> String {
        match *self {
            BenchTarget::Subsets { n, k } => format!("subsets n={n} k={k}"),
            BenchTarget::Square { n, k } => format!("square n={n} k={k}"),
            BenchTarget::Strip { r, n } => format!("strip r={r} n={n}"),
        }
    }

    /// Runs the instrumented generator, stopping after `budget` outputs.
    pub fn run(&self, budget: Option<u64>) -> Result<BenchReport> {
        let mut counter = OpCounter::default();
        let mut seen = 0u64;
        let mut tick = || {
            seen += 1;
            match budget {
                Some(b) if seen >= b => ControlFlow::Break(()),
                _ => ControlFlow::Continue(()),
            }
        };
        let flow = match *self {
            BenchTarget::Subsets { n, k } => {
                let mut state = C4State::new(n);
                counter.preprocessing += n as u64 + 1;
                let k = i64::try_from(k)
                    .map_err(|_| Error::InvalidParameter(format!("k out of range: {k}")))?;
                state.try_generate_counted(k, &mut counter, |_| tick())
            }
            BenchTarget::Square { n, k } => try_gen_vh_counted(n, k, &mut counter, |_| tick())?,
            BenchTarget::Strip { r, n } => try_gen_strip_counted(r, n, &mut counter, |_| tick())?,
        };
        Ok(BenchReport {
            label: self.label(),
            steps: counter.steps,
            outputs: counter.outputs,
            preprocessing_steps: counter.preprocessing,
            truncated: flow.is_break(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub label: String,
    pub steps: u64,
    pub outputs: u64,
    pub preprocessing_steps: u64,
    /// The run hit its output budget before finishing.
    pub truncated: bool,
}

impl BenchReport {
    /// Traversal steps per output; `None` when nothing was produced.
    pub fn ratio(&self) -> Option<f64> {
        (self.outputs > 0).then(|| self.steps as f64 / self.outputs as f64)
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} steps={} outputs={} preprocessing={} ratio=",
            self.label, self.steps, self.outputs, self.preprocessing_steps
        )?;
        match self.ratio() {
            Some(r) => write!(f, "{r:.4}")?,
            None => f.write_str("-")?,
        }
        if self.truncated {
            f.write_str(" truncated")?;
        }
        Ok(())
    }
}

/// Output cap used for the regression points.
pub const REGRESSION_BUDGET: u64 = 2_000_000;

/// The parameter points whose ratios are pinned in the regression file.
pub fn regression_points() -> Vec<BenchTarget> {
    let mut points: Vec<BenchTarget> = [10usize, 15, 20, 25]
        .into_iter()
        .map(|n| BenchTarget::Subsets {
            n,
            k: crate::ksum::triangular(n) / 2,
        })
        .collect();
    points.extend([(16, 24), (24, 40), (32, 56)].map(|(n, k)| BenchTarget::Square { n, k }));
    points.extend([8, 10, 12].map(|n| BenchTarget::Strip { r: 4, n }));
    points
}

const PINNED: &str = include_str!("../data/cat_constants.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct PinnedConstants {
    /// Allowed relative deviation from a pinned ratio.
    pub tolerance: f64,
    pub budget: u64,
    /// Label to pinned steps-per-output ratio.
    pub ratios: BTreeMap<String, f64>,
}

impl PinnedConstants {
    /// The checked-in regression constants.
    pub fn load() -> Result<Self> {
        Self::parse(PINNED)
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::parse(0, e.to_string()))
    }

    /// `Ok(pinned)` when the report's ratio is within tolerance of its pin.
    pub fn check(&self, report: &BenchReport) -> std::result::Result<f64, String> {
        let pinned = *self
            .ratios
            .get(&report.label)
            .ok_or_else(|| format!("no pinned ratio for `{}`", report.label))?;
        let ratio = report
            .ratio()
            .ok_or_else(|| format!("`{}` produced no outputs", report.label))?;
        if (ratio - pinned).abs() <= self.tolerance * pinned {
            Ok(pinned)
        } else {
            Err(format!(
                "`{}` ratio {ratio:.4} outside {:.0}% of pinned {pinned:.4}",
                report.label,
                self.tolerance * 100.0
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_subsets_run() {
        let r = BenchTarget::Subsets { n: 4, k: 3 }.run(None).unwrap();
        assert_eq!(r.outputs, 2);
        assert!(!r.truncated);
        assert_eq!(r.preprocessing_steps, 5);
        assert!(r.ratio().unwrap() >= 1.0);
    }

    #[test]
    fn budget_truncates() {
        let r = BenchTarget::Strip { r: 3, n: 4 }.run(Some(10)).unwrap();
        assert_eq!(r.outputs, 10);
        assert!(r.truncated);
        let r = BenchTarget::Square { n: 8, k: 7 }.run(Some(100)).unwrap();
        assert_eq!(r.outputs, 24);
        assert!(!r.truncated);
    }

    #[test]
    fn empty_output_has_no_ratio() {
        let r = BenchTarget::Subsets { n: 3, k: 7 }.run(None).unwrap();
        assert_eq!(r.ratio(), None);
        assert!(r.to_string().ends_with("ratio=-"));
    }

    #[test]
    fn pinned_file_covers_every_point() {
        let pins = PinnedConstants::load().unwrap();
        assert_eq!(pins.budget, REGRESSION_BUDGET);
        for p in regression_points() {
            assert!(pins.ratios.contains_key(&p.label()), "{}", p.label());
        }
    }

    #[test]
    fn check_uses_tolerance() {
        let pins =
            PinnedConstants::parse("tolerance = 0.1\nbudget = 1\n[ratios]\n\"x\" = 2.0\n").unwrap();
        let mut report = BenchReport {
            label: "x".into(),
            steps: 21,
            outputs: 10,
            preprocessing_steps: 0,
            truncated: false,
        };
        assert!(pins.check(&report).is_ok());
        report.steps = 23;
        assert!(pins.check(&report).is_err());
        report.label = "y".into();
        assert!(pins.check(&report).is_err());
    }
}
