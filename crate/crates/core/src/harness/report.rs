//! Verification outcomes and their record serialization.

use std::collections::BTreeMap;

use serde::Serialize;

use super::sum::SumStatus;

#[derive(Debug, Clone, Serialize)]
pub struct BestTruncation {
    pub diagonal: usize,
    pub rel_err: f64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Diagnostics {
    pub max_term_log10: Option<f64>,
    pub tail_log10: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quad_error: Option<f64>,
    /// For non-convergent sums: the partial sum at the smallest front.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best_truncation: Option<BestTruncation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subchecks: Vec<Subcheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Subcheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub prec: u32,
    pub tol: f64,
    /// Left-hand side; absent when the sum did not converge.
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub diagonals_used: usize,
    pub converged: bool,
    pub pass: bool,
    pub status: SumStatus,
    pub diagnostics: Diagnostics,
}

fn fmt_err(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |e| format!("{e:.3e}"))
}

impl VerificationReport {
    /// One JSON object, no trailing newline.
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut out = format!(
            "{} {verdict}  rel_err={} abs_err={} diagonals={} status={}\n",
            self.id,
            fmt_err(self.rel_err),
            fmt_err(self.abs_err),
            self.diagonals_used,
            status_word(&self.status),
        );
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out += &format!("  params: {}\n", params.join(" "));
        out += &format!("  lhs: {}\n", self.lhs.as_deref().unwrap_or("(none)"));
        out += &format!("  rhs: {}\n", self.rhs.as_deref().unwrap_or("(none)"));
        if let Some(q) = self.diagnostics.quad_error {
            out += &format!("  quadrature error: {q:.3e}\n");
        }
        if let Some(b) = &self.diagnostics.best_truncation {
            out += &format!("  best truncation: diagonal {} rel_err {:.3e}\n", b.diagonal, b.rel_err);
        }
        for s in &self.diagnostics.subchecks {
            out += &format!("  subcheck {}: {}\n", s.name, if s.pass { "ok" } else { "FAILED" });
        }
        for n in &self.diagnostics.notes {
            out += &format!("  note: {n}\n");
        }
        out
    }
}

pub fn status_word(s: &SumStatus) -> String {
    match s {
        SumStatus::Converged => "converged".into(),
        SumStatus::Diverged { diagonal } => format!("diverged@{diagonal}"),
        SumStatus::Singular { n, p, .. } => format!("singular@({n},{p})"),
        SumStatus::CapReached => "cap-reached".into(),
    }
}
