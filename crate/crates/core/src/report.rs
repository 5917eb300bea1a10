//! Structured pass/fail records for verification runs.

use std::fmt::Display;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Where a claim comes from: a short label and the statement being checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub label: String,
    pub quote: String,
}

/// One claimed value or predicate together with what was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub claimed: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub anchor: Anchor,
    pub claims: Vec<Claim>,
    pub status: Status,
    pub axioms_used: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>, label: impl Into<String>, quote: impl Into<String>) -> Self {
        CheckReport {
            check_id: check_id.into(),
            anchor: Anchor { label: label.into(), quote: quote.into() },
            claims: Vec::new(),
            // no claims yet, nothing verified
            status: Status::Fail,
            axioms_used: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Exact equality claim.
    pub fn claim_eq<T: PartialEq + Display>(&mut self, name: impl Into<String>, claimed: T, computed: T) -> &mut Self {
        let pass = claimed == computed;
        self.push(Claim { name: name.into(), claimed: claimed.to_string(), computed: computed.to_string(), pass })
    }

    /// A predicate that should hold; `computed` describes the evidence.
    pub fn claim_holds(
        &mut self,
        name: impl Into<String>,
        statement: impl Into<String>,
        holds: bool,
        computed: impl Into<String>,
    ) -> &mut Self {
        self.push(Claim { name: name.into(), claimed: statement.into(), computed: computed.into(), pass: holds })
    }

    pub fn axiom(&mut self, statement: impl Into<String>) -> &mut Self {
        self.axioms_used.push(statement.into());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn push(&mut self, claim: Claim) -> &mut Self {
        self.claims.push(claim);
        self.status = if self.claims.iter().all(|c| c.pass) { Status::Pass } else { Status::Fail };
        self
    }
}
