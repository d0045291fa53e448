use std::fmt::Write;

use braid_circuits::{ConventionProfile, GateAccounting};
use serde::{Deserialize, Serialize};

use crate::score::GateScore;
use crate::stats::Statistics;
use crate::{ReportError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub label: String,
    pub controlled_injection: String,
    pub decomposition: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub profile: ConventionProfile,
    pub word_length: usize,
    pub rows: Vec<Row>,
    pub controlled_injection: GateScore,
    pub decomposition: GateScore,
    pub controlled_injection_stats: Option<Statistics>,
    pub decomposition_stats: Option<Statistics>,
}

fn formula((a, b): (usize, usize)) -> String {
    match b {
        0 => format!("{a}L"),
        _ => format!("{a}L+{b}"),
    }
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

fn accounting(s: &GateScore) -> Result<GateAccounting> {
    s.accounting
        .ok_or_else(|| ReportError::InvalidInput(format!("{} has no accounting", s.name)))
}

pub fn comparison_report(
    ci: &GateScore,
    decomp: &GateScore,
    ci_stats: Option<Statistics>,
    decomp_stats: Option<Statistics>,
) -> Result<ComparisonReport> {
    if ci.word_length != decomp.word_length {
        return Err(ReportError::InvalidInput(format!(
            "word lengths differ: {} vs {}",
            ci.word_length, decomp.word_length
        )));
    }
    if ci.profile != decomp.profile {
        return Err(ReportError::InvalidInput("scores use different profiles".into()));
    }
    let (a, b) = (accounting(ci)?, accounting(decomp)?);
    let l = ci.word_length;
    let mut rows = Vec::new();
    let mut add = |label: &str, x: String, y: String| {
        rows.push(Row { label: label.into(), controlled_injection: x, decomposition: y })
    };
    add("Two-qubit gates", a.two_qubit_gates.to_string(), b.two_qubit_gates.to_string());
    add("Three-anyon gates", a.three_anyon_gates.to_string(), b.three_anyon_gates.to_string());
    add("Length formula", formula(a.length), formula(b.length));
    add(&format!("Length at L={l}"), a.length_at(l).to_string(), b.length_at(l).to_string());
    add("Depth formula", formula(a.depth), formula(b.depth));
    add(&format!("Depth at L={l}"), a.depth_at(l).to_string(), b.depth_at(l).to_string());
    add("Counted crossings", ci.elementary_length.to_string(), decomp.elementary_length.to_string());
    add("Layered depth", ci.elementary_depth.to_string(), decomp.elementary_depth.to_string());
    add("Best error", sci(ci.overall_error), sci(decomp.overall_error));
    add("Error in target", sci(ci.target_error()), sci(decomp.target_error()));
    add("Leakage", sci(ci.leakage), sci(decomp.leakage));
    if let (Some(x), Some(y)) = (&ci_stats, &decomp_stats) {
        add("Combinations", x.combinations.to_string(), y.combinations.to_string());
        add("Min error", sci(x.overall.min), sci(y.overall.min));
        add("Avg error", sci(x.overall.avg), sci(y.overall.avg));
        add("Max error", sci(x.overall.max), sci(y.overall.max));
        add("Min error in target", sci(x.target.min), sci(y.target.min));
        add("Avg error in target", sci(x.target.avg), sci(y.target.avg));
        add("Max error in target", sci(x.target.max), sci(y.target.max));
    }
    Ok(ComparisonReport {
        profile: ci.profile,
        word_length: l,
        rows,
        controlled_injection: ci.clone(),
        decomposition: decomp.clone(),
        controlled_injection_stats: ci_stats,
        decomposition_stats: decomp_stats,
    })
}

impl ComparisonReport {
    pub fn row(&self, label: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Controlled injection vs decomposition\n");
        let _ = writeln!(s, "Profile: `{}`, word length L = {}\n", self.profile, self.word_length);
        let _ = writeln!(s, "| | Controlled injection | Decomposition |");
        let _ = writeln!(s, "|---|---|---|");
        for r in &self.rows {
            let _ = writeln!(s, "| {} | {} | {} |", r.label, r.controlled_injection, r.decomposition);
        }
        let _ = writeln!(
            s,
            "\nFormula rows use the printed accounting; counted crossings and layered depth come from the built circuits."
        );
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
