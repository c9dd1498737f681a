//! Line-delimited run reports.
//!
//! A report is plain text, one line per item. Fields are `key=value`
//! separated by tab characters (shown as spaces below):
//!
//! ```text
//! # gpgame-report version=1 command=<argv> generated=<unix seconds>
//! record suite=… instance=… family=… order=… status=… nodes=… checks=… [error=…] [wall_ms=…]
//! solve graph=… order=… size=… first=… value=… pv=… gp=… gp_lower=… nodes=… bound_min_max=… …
//! summary records=… passed=… failed=… budget_exhausted=…
//! ```
//!
//! The `generated` header field is the only wall-clock timestamp, and
//! per-instance wall times are written only on request, so two runs with
//! the same flags produce identical files apart from that field.
//!
//! `checks` is a `;`-separated list of `quantity|observed|expected|verdict|origin`.

use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use gpgame::verify::{Check, Record};

pub const VERSION: u32 = 1;

/// Keeps values on one line and free of the field separators.
fn clean(s: &str) -> String {
    s.chars().map(|c| if matches!(c, '\t' | '\n' | '\r') { ' ' } else { c }).collect()
}

pub fn header(command: &[String]) -> String {
    let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    header_at(command, secs)
}

pub fn header_at(command: &[String], unix_secs: u64) -> String {
    format!("# gpgame-report\tversion={VERSION}\tcommand={}\tgenerated={unix_secs}", clean(&command.join(" ")))
}

fn check_field(c: &Check) -> String {
    let part = |s: &str| clean(s).replace(['|', ';'], "/");
    format!(
        "{}|{}|{}|{}|{}",
        part(&c.quantity),
        part(&c.observed),
        part(&c.expected),
        c.verdict.name(),
        part(&c.origin)
    )
}

pub fn record_line(r: &Record, timings: bool) -> String {
    let mut line = format!(
        "record\tsuite={}\tinstance={}\tfamily={}\torder={}\tstatus={}\tnodes={}\tchecks={}",
        r.suite,
        clean(&r.instance),
        clean(&r.family),
        r.order,
        if r.passed() { "pass" } else { "fail" },
        r.nodes,
        r.checks.iter().map(check_field).collect::<Vec<_>>().join(";")
    );
    if let Some(e) = &r.error {
        let _ = write!(line, "\terror={}", clean(e));
    }
    if timings {
        let _ = write!(line, "\twall_ms={:.3}", r.elapsed.as_secs_f64() * 1e3);
    }
    line
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub records: usize,
    pub passed: usize,
    pub budget_exhausted: usize,
}

impl Summary {
    pub fn of(records: &[Record]) -> Summary {
        Summary {
            records: records.len(),
            passed: records.iter().filter(|r| r.passed()).count(),
            budget_exhausted: records.iter().filter(|r| r.budget_exhausted).count(),
        }
    }

    pub fn failed(&self) -> usize {
        self.records - self.passed
    }

    /// Instances that failed for a reason other than running out of budget.
    pub fn mismatched(&self) -> usize {
        self.failed() - self.budget_exhausted
    }

    pub fn line(&self) -> String {
        format!(
            "summary\trecords={}\tpassed={}\tfailed={}\tbudget_exhausted={}",
            self.records,
            self.passed,
            self.failed(),
            self.budget_exhausted
        )
    }
}

/// Human-readable differences for a failed record, one per line.
pub fn diff_lines(r: &Record) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(e) = &r.error {
        out.push(format!("{} [{}]: {e}", r.instance, r.family));
    }
    for c in r.checks.iter().filter(|c| !c.verdict.passed()) {
        out.push(format!(
            "{} [{}]: {} observed {} expected {} ({}, {})",
            r.instance, r.family, c.quantity, c.observed, c.expected, c.verdict, c.origin
        ));
    }
    out
}

/// Fields of a `solve` line, in output order.
#[derive(Clone, Debug, Default)]
pub struct SolveLine {
    pub graph: String,
    pub order: usize,
    pub size: usize,
    pub first: String,
    pub value: usize,
    pub pv: Vec<usize>,
    pub gp: Option<usize>,
    pub gp_lower: Option<usize>,
    pub nodes: u64,
    /// `(name, value or "n/a")`
    pub bounds: Vec<(String, String)>,
}

impl SolveLine {
    pub fn render(&self) -> String {
        let opt = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
        let pv = self.pv.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let mut line = format!(
            "solve\tgraph={}\torder={}\tsize={}\tfirst={}\tvalue={}\tpv={}\tgp={}\tgp_lower={}\tnodes={}",
            clean(&self.graph),
            self.order,
            self.size,
            self.first,
            self.value,
            if pv.is_empty() { "-".into() } else { pv },
            opt(self.gp),
            opt(self.gp_lower),
            self.nodes
        );
        for (k, v) in &self.bounds {
            let _ = write!(line, "\t{k}={}", clean(v));
        }
        line
    }
}
