//! Verification reports: tallies of expected against observed counts.

use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Every check matched, but the statement checked is a conjecture.
    ConjectureConsistent,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ConjectureConsistent => "CONJECTURE-CONSISTENT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally {
    pub n: usize,
    pub key: String,
    pub expected: u64,
    pub observed: u64,
}

impl Tally {
    pub fn passes(&self) -> bool {
        self.expected == self.observed
    }
}

pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    /// What `n` counts: tableau size or number of cells.
    pub measure: &'static str,
    pub min_n: usize,
    pub max_n: usize,
    pub tallies: Vec<Tally>,
    pub counterexamples: Vec<String>,
    pub conjecture: bool,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.tallies.iter().all(Tally::passes)
    }

    pub fn status(&self) -> Status {
        match (self.passed(), self.conjecture) {
            (false, _) => Status::Fail,
            (true, false) => Status::Pass,
            (true, true) => Status::ConjectureConsistent,
        }
    }

    /// Tab-separated `suite n key expected observed status` lines.
    pub fn structured(&self) -> String {
        let mut out = String::new();
        for t in &self.tallies {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                self.suite,
                t.n,
                t.key,
                t.expected,
                t.observed,
                if t.passes() { "PASS" } else { "FAIL" }
            ));
        }
        out
    }

    /// Comparison of everything but the timing.
    pub fn same_outcome(&self, other: &VerificationReport) -> bool {
        self.suite == other.suite
            && self.min_n == other.min_n
            && self.max_n == other.max_n
            && self.tallies == other.tallies
            && self.counterexamples == other.counterexamples
    }
}

/// The human-readable table; timing is left out so output is reproducible.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} ({} {}..{})",
            self.suite, self.measure, self.min_n, self.max_n
        )?;
        writeln!(f, "n key expected observed status")?;
        for t in &self.tallies {
            let status = if t.passes() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{} {} {} {} {}",
                t.n, t.key, t.expected, t.observed, status
            )?;
        }
        for c in &self.counterexamples {
            writeln!(f, "counterexample: {c}")?;
        }
        write!(f, "{}: {}", self.suite, self.status())?;
        if self.status() == Status::ConjectureConsistent {
            write!(f, " (checked {} <= {})", self.measure, self.max_n)?;
        }
        writeln!(f)
    }
}
