//! DOT rendering of a verified square.

use std::fmt::Write;

use squares_core::opposition::{CheckStatus, PairReport, SquareReport};
use squares_core::{Family, Formula, Quality};

fn corner_label(q: Quality, f: &Formula) -> String {
    match f {
        Formula::Atom(a) if a.copula.family() == Family::Synthetic => {
            let letter = match q {
                Quality::A => "𝔞",
                Quality::E => "𝔢",
                Quality::I => "𝔦",
                Quality::O => "𝔬",
            };
            format!("{}{letter}{}", a.subject, a.predicate)
        }
        Formula::Atom(a) => format!("{}{}{}", a.subject, node(q), a.predicate),
        other => other.to_string(),
    }
}

fn node(q: Quality) -> &'static str {
    match q {
        Quality::A => "a",
        Quality::E => "e",
        Quality::I => "i",
        Quality::O => "o",
    }
}

fn edge_style(p: &PairReport) -> &'static str {
    use squares_core::opposition::RelationKind::*;
    match p.expected {
        Contrary => "style=solid, dir=none",
        Subcontrary => "style=dashed, dir=none",
        Contradictory => "style=bold, dir=none",
        SubalternationForward | SubalternationBackward => "style=solid, arrowhead=normal",
        Independent => "style=dotted, dir=none",
    }
}

/// Corners on the top row of the drawing, left to right.
fn top_row(r: &SquareReport) -> [Quality; 2] {
    let family = r.corners.first().and_then(|(_, f)| match f {
        Formula::Atom(a) => Some(a.copula.family()),
        _ => None,
    });
    match family {
        Some(Family::Synthetic) => [Quality::A, Quality::I],
        _ => [Quality::A, Quality::E],
    }
}

/// A digraph with one node per corner and one edge per expected relation.
/// Failed edges are red and name the witness that refutes them.
pub fn emit_diagram(r: &SquareReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph square {{");
    let _ = writeln!(out, "  label=\"{} ({})\";", r.name, r.status.label());
    let _ = writeln!(out, "  node [shape=plaintext];");
    for (q, f) in &r.corners {
        let _ = writeln!(out, "  {} [label=\"{}\"];", node(*q), corner_label(*q, f));
    }
    let top = top_row(r);
    let bottom: Vec<&str> = r
        .corners
        .iter()
        .map(|(q, _)| *q)
        .filter(|q| !top.contains(q))
        .map(node)
        .collect();
    let _ = writeln!(out, "  {{ rank=same; {}; {}; }}", node(top[0]), node(top[1]));
    let _ = writeln!(out, "  {{ rank=same; {}; }}", bottom.join("; "));
    for p in &r.pairs {
        let (from, to) = match p.expected {
            squares_core::opposition::RelationKind::SubalternationBackward => (p.second, p.first),
            _ => (p.first, p.second),
        };
        let mut label = p.expected.name().trim_end_matches(" (converse)").to_string();
        let mut extra = String::new();
        match p.status {
            CheckStatus::Pass => {}
            CheckStatus::Inconclusive => {
                label.push_str(" (inconclusive)");
                extra.push_str(", color=gray");
            }
            CheckStatus::Fail => {
                match p.conflict() {
                    Some((_, w)) => label.push_str(&format!(" FAIL: witness #{}", w.index)),
                    None => label.push_str(" FAIL"),
                }
                extra.push_str(", color=red, fontcolor=red");
            }
        }
        let _ = writeln!(
            out,
            "  {} -> {} [label=\"{label}\", {}{extra}];",
            node(from),
            node(to),
            edge_style(p)
        );
    }
    out.push_str("}\n");
    out
}
