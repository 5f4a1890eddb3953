//! Rendering of solve outcomes.

use std::fmt::Write as _;

use anyhow::Result;
use ssum_core::{Decision, SolveOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Renders `outcome`; timings are kept only when `with_timings` is set so
/// that fixed-seed reports are byte-identical.
pub fn render(outcome: &SolveOutcome, format: Format, with_timings: bool) -> Result<String> {
    let mut outcome = outcome.clone();
    if !with_timings {
        outcome.timings = None;
    }
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome)?;
            s.push('\n');
            s
        }
        Format::Text => render_text(&outcome),
    })
}

fn word(d: Decision) -> &'static str {
    if d.is_yes() {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn render_text(o: &SolveOutcome) -> String {
    let mut s = String::new();
    writeln!(s, "decision: {}", word(o.decision)).unwrap();
    writeln!(s, "branch: {}", o.report.branch.as_str()).unwrap();
    writeln!(s, "seed: {}", o.seed).unwrap();
    writeln!(s, "n: {} w: {} t: {}", o.n, o.w, o.t).unwrap();
    writeln!(
        s,
        "t_reduced: {} complemented: {}",
        o.t_reduced, o.complemented
    )
    .unwrap();
    let r = &o.report;
    writeln!(
        s,
        "sizes: S_G={} S_R={} S_D={} S_RD={} candidate={}",
        opt(&r.s_g_size),
        opt(&r.s_r_size),
        opt(&r.s_d_size),
        opt(&r.s_rd_size),
        opt(&r.candidate_size)
    )
    .unwrap();
    if let Some(note) = &r.note {
        writeln!(s, "note: {note}").unwrap();
    }
    if let Some(p) = &o.partition {
        writeln!(
            s,
            "partition: d={} alpha={} |G|={} |R|={} |D|={} sigma(G)={} sigma(R)={} sigma(D)={}",
            p.d, p.alpha, p.g_len, p.r_len, p.d_len, p.sigma_g, p.sigma_r, p.sigma_d
        )
        .unwrap();
    }
    if let Some(p) = &o.params {
        writeln!(s, "params: q={} groups={}", p.q, p.groups).unwrap();
    }
    if let Some(e) = &r.evidence {
        writeln!(
            s,
            "evidence: level={} sets={} total>={} threshold={} sum_f={}",
            e.level, e.num_sets, e.total_size_lower, e.threshold, e.sum_f
        )
        .unwrap();
    }
    if let Some(c) = &o.checked {
        writeln!(
            s,
            "checked: raw={} oracle={} disagreement={}",
            word(c.raw_decision),
            word(c.oracle_decision),
            c.disagreement
        )
        .unwrap();
    }
    if let Some(t) = &o.timings {
        writeln!(
            s,
            "timings_ns: partition={} small_sets={} phase_one={} phase_two={} phase_three={} combine={} total={}",
            t.partition_ns,
            t.small_sets_ns,
            t.phase_one_ns,
            t.phase_two_ns,
            t.phase_three_ns,
            t.combine_ns,
            t.total_ns
        )
        .unwrap();
    }
    s
}
