use rayon::prelude::*;
use serde::Serialize;

use crate::depth::{depth_report_labeled, DepthOptions, DepthReport};
use crate::error::Result;
use crate::graph::parse_graph6;

const CHUNK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    Ok,
    GuardSkipped,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    /// 1-based line number in the input.
    pub line: usize,
    pub graph6: String,
    pub status: ScanStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<DepthReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub lines: usize,
    /// Disconnected or bipartite inputs; these produce no record.
    pub filtered: usize,
    pub processed: usize,
    pub exact: usize,
    pub inexact: usize,
    pub guard_skipped: usize,
    pub errors: usize,
    pub min_depth_lower: Option<usize>,
    pub min_exact_depth: Option<usize>,
    /// Records whose depth is certified below 7.
    pub certified_below_seven: usize,
    /// Records with lower bound below 7 whose upper bound is also below 7.
    pub upper_below_seven: usize,
}

impl ScanSummary {
    fn absorb(&mut self, rec: &ScanRecord) {
        self.processed += 1;
        match rec.status {
            ScanStatus::GuardSkipped => self.guard_skipped += 1,
            ScanStatus::Error => self.errors += 1,
            ScanStatus::Ok => {}
        }
        let Some(rep) = &rec.report else { return };
        self.min_depth_lower = Some(self.min_depth_lower.map_or(rep.depth_lower, |m| m.min(rep.depth_lower)));
        if rep.exact {
            self.exact += 1;
            self.min_exact_depth = Some(self.min_exact_depth.map_or(rep.depth_lower, |m| m.min(rep.depth_lower)));
            if rep.depth_lower < 7 {
                self.certified_below_seven += 1;
            }
        } else {
            self.inexact += 1;
        }
        if rep.depth_lower < 7 && rep.depth_upper < 7 {
            self.upper_below_seven += 1;
        }
    }
}

enum Outcome {
    Filtered,
    Record(ScanRecord),
}

fn process(line: usize, text: &str, opts: &DepthOptions) -> Outcome {
    let record = |status, report, error| Outcome::Record(ScanRecord { line, graph6: text.to_string(), status, report, error });
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => return record(ScanStatus::Error, None, Some(e.to_string())),
    };
    if !g.is_connected() || g.is_bipartite() {
        return Outcome::Filtered;
    }
    match depth_report_labeled(&g, text, opts) {
        Ok(rep) => record(ScanStatus::Ok, Some(rep), None),
        Err(e) if e.is_guard() => record(ScanStatus::GuardSkipped, None, Some(e.to_string())),
        Err(e) => record(ScanStatus::Error, None, Some(e.to_string())),
    }
}

/// Reports on every connected nonbipartite graph in `text` (one graph6 record
/// per line). Records reach `sink` in input order; work within a chunk of
/// lines runs in parallel.
pub fn scan(text: &str, opts: &DepthOptions, mut sink: impl FnMut(&ScanRecord) -> Result<()>) -> Result<ScanSummary> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut summary = ScanSummary { lines: lines.len(), ..ScanSummary::default() };
    for chunk in lines.chunks(CHUNK) {
        let outcomes: Vec<Outcome> = chunk.par_iter().map(|&(n, l)| process(n, l, opts)).collect();
        for o in outcomes {
            match o {
                Outcome::Filtered => summary.filtered += 1,
                Outcome::Record(rec) => {
                    summary.absorb(&rec);
                    sink(&rec)?;
                }
            }
        }
    }
    Ok(summary)
}
