//! Text and JSON-lines output.

use std::fmt::Write;

use delpezzo::report::CheckReport;
use serde::Serialize;

use crate::axioms::{Axiom, AXIOMS};

#[derive(Serialize)]
struct Summary {
    checks: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum Line<'a> {
    Report(&'a CheckReport),
    Axiom(&'a Axiom),
    Summary(Summary),
}

fn summary(reports: &[CheckReport]) -> Summary {
    let passed = reports.iter().filter(|r| r.passed()).count();
    Summary { checks: reports.len(), passed, failed: reports.len() - passed }
}

pub fn jsonl(reports: &[CheckReport], with_axioms: bool) -> String {
    let mut out = String::new();
    let mut push = |line: Line| {
        out.push_str(&serde_json::to_string(&line).expect("plain data serializes"));
        out.push('\n');
    };
    for r in reports {
        push(Line::Report(r));
    }
    if with_axioms {
        for a in AXIOMS {
            push(Line::Axiom(a));
        }
    }
    push(Line::Summary(summary(reports)));
    out
}

pub fn text(reports: &[CheckReport], with_axioms: bool) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}  {}  {}", r.status, r.check_id, r.anchor.label);
        let _ = writeln!(out, "      anchor: {}", r.anchor.quote);
        for c in &r.claims {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "      [{mark}] {}: claimed {}, computed {}", c.name, c.claimed, c.computed);
        }
        for n in &r.notes {
            let _ = writeln!(out, "      note: {n}");
        }
        for a in &r.axioms_used {
            let _ = writeln!(out, "      axiom: {}", crate::axioms::cited_id(a));
        }
    }
    if with_axioms {
        let _ = writeln!(out, "\nAxioms assumed, not replayed:");
        for a in AXIOMS {
            let users = if a.used_by.is_empty() { "no replayed check".to_string() } else { a.used_by.join(", ") };
            let _ = writeln!(out, "  {}: {}  [used by {users}]", a.id, a.statement);
        }
    }
    let s = summary(reports);
    let _ = writeln!(out, "\n{} checks: {} passed, {} failed", s.checks, s.passed, s.failed);
    out
}
