//! Convention discovery. Standalone words fix the handedness; the
//! composite M(I,iX) and M(iX,iX) gates then fix reading order, strand
//! numbering and the lower-strand composition.

use std::fmt::Write;

use braid_circuits::{ConventionProfile, LowerStrands, StrandNumbering};
use fib_core::Handedness;
use fusion_basis::ReadingOrder;
use su2_compile::word_error;

use crate::fixtures::{self, CompositeFixture, WordFixture};
use crate::score::score_gate;
use crate::{ReportError, Result};

pub const STANDALONE_TOL: f64 = 0.02;
pub const COMPOSITE_TOL: f64 = 0.10;

fn rel(x: f64, printed: f64) -> f64 {
    (x - printed).abs() / printed
}

/// Relative residual of every fixture under one handedness and order.
pub fn standalone_residuals(fixtures: &[WordFixture], h: Handedness, order: ReadingOrder) -> Result<Vec<f64>> {
    fixtures
        .iter()
        .map(|f| Ok(rel(word_error(&f.word(), &f.target_matrix(), h, order)?, f.printed_error)))
        .collect()
}

fn composite_residuals(p: &ConventionProfile) -> Result<Vec<f64>> {
    let pairs: [(&CompositeFixture, braid_circuits::GateCircuit); 2] = [
        (&fixtures::M_IDENTITY_IX, fixtures::m_identity_ix(p)?),
        (&fixtures::M_NOT_IX, fixtures::m_not_ix(p)?),
    ];
    pairs
        .iter()
        .map(|(f, c)| Ok(rel(score_gate(c)?.overall_error, f.overall)))
        .collect()
}

fn worst(v: &[f64]) -> f64 {
    v.iter().copied().fold(0.0, f64::max)
}

pub fn calibrate_conventions(fixtures: &[WordFixture]) -> Result<ConventionProfile> {
    if fixtures.is_empty() {
        return Err(ReportError::InvalidInput("no fixtures".into()));
    }
    let mut table = String::from("profile | worst standalone | worst composite\n");
    let mut standalone_ok = Vec::new();
    for h in [Handedness::Right, Handedness::Left] {
        for order in ReadingOrder::ALL {
            let r = worst(&standalone_residuals(fixtures, h, order)?);
            let p = ConventionProfile::with(h, order);
            if r <= STANDALONE_TOL {
                standalone_ok.push(p);
            } else {
                let _ = writeln!(table, "{p} | {r:.4} | -");
            }
        }
    }
    let mut passing = Vec::new();
    for base in standalone_ok {
        let r = worst(&standalone_residuals(fixtures, base.handedness, base.word_reading_order)?);
        for numbering in [StrandNumbering::Mirrored, StrandNumbering::Direct] {
            for lower in [LowerStrands::Single, LowerStrands::Paired] {
                let p = ConventionProfile { strand_numbering: numbering, lower_strands: lower, ..base };
                let c = worst(&composite_residuals(&p)?);
                let _ = writeln!(table, "{p} | {r:.4} | {c:.4}");
                if c <= COMPOSITE_TOL {
                    passing.push(p);
                }
            }
        }
    }
    match passing.as_slice() {
        [p] => Ok(*p),
        [] => Err(ReportError::Calibration { reason: "no profile reproduces the fixtures".into(), table }),
        _ => Err(ReportError::Calibration { reason: format!("{} profiles pass; ambiguous", passing.len()), table }),
    }
}
