//! Report building and rendering for the `countsys` binary.
//!
//! Everything here is deterministic: node and edge orders follow element
//! indices, JSON field order follows struct order, so outputs are stable
//! enough for byte-exact golden tests.

use serde::{Deserialize, Serialize};

use countsys_core::arith::{check_law, LawId};
use countsys_core::minimal::{end_point, is_segment};
use countsys_core::{CountingSystem, Result};

/// Summary of one system: orbit shape plus the structural and algebraic
/// flags. The end-point and the algebraic flags only exist for minimal
/// systems and are omitted otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub x0: usize,
    pub tail: usize,
    pub cycle: usize,
    pub minimal: bool,
    pub standard: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end_point: Option<usize>,
    pub segment: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cancellation: Option<bool>,
}

/// Builds the analysis report for a system.
pub fn analyze(cs: &CountingSystem) -> Result<AnalysisReport> {
    let traj = cs.trajectory();
    let minimal = cs.is_minimal();
    let (end, group, cancellation) = if minimal {
        (
            Some(end_point(cs)?),
            Some(check_law(cs, LawId::Group)?.passed),
            Some(check_law(cs, LawId::Cancellation)?.passed),
        )
    } else {
        (None, None, None)
    };
    Ok(AnalysisReport {
        n: cs.carrier_size(),
        x0: cs.base_point(),
        tail: traj.tail(),
        cycle: traj.cycle(),
        minimal,
        standard: cs.is_standard(),
        end_point: end,
        segment: is_segment(cs),
        group,
        cancellation,
    })
}

/// Renders the transition graph in DOT format: one node per element, one
/// edge per application of the self-map, with the base point and (for
/// minimal systems) the end-point annotated.
pub fn render_dot(cs: &CountingSystem) -> String {
    let end = if cs.is_minimal() {
        Some(end_point(cs).expect("minimal system has an end-point"))
    } else {
        None
    };
    let mut out = String::new();
    out.push_str("digraph counting_system {\n");
    out.push_str("  rankdir=LR;\n");
    for i in 0..cs.carrier_size() {
        let mut notes = Vec::new();
        if i == cs.base_point() {
            notes.push("x0");
        }
        if Some(i) == end {
            notes.push("end");
        }
        let label = if notes.is_empty() {
            format!("{i}")
        } else {
            format!("{i} ({})", notes.join(", "))
        };
        let shape = if i == cs.base_point() {
            ", shape=doublecircle"
        } else {
            ""
        };
        out.push_str(&format!("  n{i} [label=\"{label}\"{shape}];\n"));
    }
    for i in 0..cs.carrier_size() {
        out.push_str(&format!("  n{i} -> n{};\n", cs.step(i)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use countsys_core::fixtures;

    #[test]
    fn analyze_fixtures() {
        let r5 = analyze(&fixtures::r5()).unwrap();
        assert_eq!(r5.tail, 2);
        assert_eq!(r5.cycle, 3);
        assert!(r5.minimal);
        assert_eq!(r5.end_point, Some(4));
        assert!(!r5.segment);
        assert_eq!(r5.group, Some(false));
        assert_eq!(r5.cancellation, Some(false));

        let c3 = analyze(&fixtures::c3()).unwrap();
        assert_eq!(c3.tail, 0);
        assert_eq!(c3.cycle, 3);
        assert_eq!(c3.group, Some(true));
        assert_eq!(c3.cancellation, Some(true));

        let n5 = analyze(&fixtures::n5()).unwrap();
        assert!(!n5.minimal);
        assert_eq!(n5.end_point, None);
        assert_eq!(n5.group, None);

        // group implies cancellation; segment implies a 1-cycle.
        for cs in [fixtures::one(), fixtures::c3(), fixtures::s4(), fixtures::r5()] {
            let report = analyze(&cs).unwrap();
            if report.group == Some(true) {
                assert_eq!(report.cancellation, Some(true));
            }
            if report.segment {
                assert_eq!(report.cycle, 1);
            }
        }
    }

    #[test]
    fn dot_of_the_one_point_system() {
        let dot = render_dot(&fixtures::one());
        assert!(dot.contains("n0 [label=\"0 (x0, end)\", shape=doublecircle];"));
        assert!(dot.contains("n0 -> n0;"));
    }

    #[test]
    fn dot_of_r5_closes_the_cycle() {
        let dot = render_dot(&fixtures::r5());
        assert!(dot.contains("n4 -> n2;"));
        assert!(dot.contains("n4 [label=\"4 (end)\"];"));
    }
}
