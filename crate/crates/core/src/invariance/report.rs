use std::fmt;

use crate::estimators::PatternTally;

/// Normal-approximation bound for the total-variation distance between two
/// independent empirical distributions: `4 sqrt(P / reps)` with `P` the
/// number of distinct patterns seen in either and `reps` the smaller total.
pub fn tv_threshold(a: &PatternTally, b: &PatternTally) -> f64 {
    let reps = a.total().min(b.total()).max(1) as f64;
    4.0 * (a.union_len(b).max(1) as f64 / reps).sqrt()
}

/// Outcome of a two-sample comparison of pattern tallies.
#[derive(Clone, Debug)]
pub struct TestReport {
    pub name: String,
    /// Total-variation distance between the operands.
    pub statistic: f64,
    pub threshold: f64,
    pub pass: bool,
    pub operands: [String; 2],
    pub tallies: [PatternTally; 2],
    pub notes: Vec<String>,
}

impl TestReport {
    pub(crate) fn compare(name: &str, operands: [&str; 2], left: PatternTally, right: PatternTally) -> Self {
        let statistic = left.tv(&right);
        let threshold = tv_threshold(&left, &right);
        Self {
            name: name.to_string(),
            statistic,
            threshold,
            pass: statistic <= threshold,
            operands: operands.map(str::to_string),
            tallies: [left, right],
            notes: Vec::new(),
        }
    }

    pub fn reps(&self) -> [u64; 2] {
        [self.tallies[0].total(), self.tallies[1].total()]
    }

    /// CSV with header `operand,pattern_key,count,density,stderr`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("operand,pattern_key,count,density,stderr\n");
        for (name, t) in self.operands.iter().zip(&self.tallies) {
            t.write_rows(&mut out, Some(name));
        }
        out
    }
}

impl fmt::Display for TestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.reps();
        writeln!(f, "test: {}", self.name)?;
        writeln!(f, "result: {}", if self.pass { "PASS" } else { "FAIL" })?;
        writeln!(f, "statistic (total variation): {}", self.statistic)?;
        writeln!(f, "threshold: {}", self.threshold)?;
        writeln!(f, "operands: {} ({a} reps, {} patterns), {} ({b} reps, {} patterns)",
            self.operands[0], self.tallies[0].len(), self.operands[1], self.tallies[1].len())?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}
