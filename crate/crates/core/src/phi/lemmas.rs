//! Invariants that every φ trace must satisfy, checked directly on the
//! recorded snapshots.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::trace::{SwitchTrace, TraceKind};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// Values passing through the last slot of `Γ_i` have decreasing `π`.
    DecreasingPi,
    /// No switch inside one cycle; relative order and leading maximum kept.
    RelativeOrder,
    /// Large values, the ends of later cycles and entries preceding large
    /// values stay put.
    NotMoved,
    /// Earlier cycles are left alone.
    NotBack,
    /// The last slot of `Γ_i` runs through `b_i, b_i+ε, b_i+2ε, …`.
    LastSlotRun,
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::DecreasingPi => "decreasing-pi",
            Lemma::RelativeOrder => "relative-order",
            Lemma::NotMoved => "not-moved",
            Lemma::NotBack => "not-back",
            Lemma::LastSlotRun => "last-slot-run",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaViolation {
    pub lemma: Lemma,
    /// Event index in the trace, if the violation is tied to one switch.
    pub event: Option<usize>,
    pub detail: String,
}

fn rank_pattern(group: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..group.len()).collect();
    idx.sort_by_key(|&k| group[k]);
    idx
}

/// Checks a φ trace of `pi` against all lemma invariants. Returns every
/// violation found; an empty vector means the trace is clean.
pub fn check_lemmas(pi: &Permutation, trace: &SwitchTrace) -> Vec<LemmaViolation> {
    let mut out = Vec::new();
    let mut fail = |lemma, event, detail: String| {
        out.push(LemmaViolation {
            lemma,
            event,
            detail,
        })
    };
    if trace.kind != TraceKind::Phi {
        fail(Lemma::RelativeOrder, None, "not a phi trace".into());
        return out;
    }

    let bounds = &trace.boundaries;
    let r = bounds.len() - 1;
    let init = trace.initial();
    let n = init.len();
    let first: Vec<usize> = (0..r).map(|j| init[bounds[j]]).collect();
    let last: Vec<usize> = (0..r).map(|j| init[bounds[j + 1] - 1]).collect();
    let patterns: Vec<Vec<usize>> = trace.groups(init).map(rank_pattern).collect();
    let mut group_of = vec![0; n];
    for j in 0..r {
        group_of[bounds[j]..bounds[j + 1]].fill(j);
    }

    let mut pos = vec![0; n + 1];
    for (k, e) in trace.events.iter().enumerate() {
        let before = trace.state_before(k);
        let after = trace.state_after(k);
        let i = e.iteration - 1;
        if i + 1 >= r {
            fail(Lemma::NotMoved, Some(k), format!("iteration {} out of range", e.iteration));
            continue;
        }
        let next_lead = first[i + 1];
        for (p, &v) in before.iter().enumerate() {
            pos[v] = p;
        }
        let succ = |v: usize| {
            let p = pos[v];
            let g = group_of[p];
            before[if p + 1 == bounds[g + 1] { bounds[g] } else { p + 1 }]
        };
        let (u, v) = e.values;
        if u.abs_diff(v) != 1 {
            fail(Lemma::RelativeOrder, Some(k), format!("switched {u} and {v}"));
        }
        let (pu, pv) = (pos[u], pos[v]);
        let (gu, gv) = (group_of[pu], group_of[pv]);

        if gu == gv {
            fail(
                Lemma::RelativeOrder,
                Some(k),
                format!("{u} and {v} both in cycle {}", gu + 1),
            );
        }
        if gu < i || gv < i {
            fail(
                Lemma::NotBack,
                Some(k),
                format!("switch {u},{v} touches a cycle before {}", i + 1),
            );
        }
        for (val, p) in [(u, pu), (v, pv)] {
            if val >= next_lead {
                fail(
                    Lemma::NotMoved,
                    Some(k),
                    format!("{val} >= a_{} = {next_lead} moved", i + 2),
                );
            }
            let g = group_of[p];
            if g > i && (p == bounds[g] || p + 1 == bounds[g + 1]) {
                fail(
                    Lemma::NotMoved,
                    Some(k),
                    format!("end entry {val} of cycle {} moved", g + 1),
                );
            }
            if (i + 1..r).any(|j| first[j] == val || last[j] == val) {
                fail(
                    Lemma::NotMoved,
                    Some(k),
                    format!("a_j or b_j value {val} moved"),
                );
            }
            if succ(val) >= next_lead {
                fail(
                    Lemma::NotMoved,
                    Some(k),
                    format!("{val} precedes {} >= {next_lead}", succ(val)),
                );
            }
        }
        for (j, g) in trace.groups(after).enumerate() {
            if rank_pattern(g) != patterns[j] {
                fail(
                    Lemma::RelativeOrder,
                    Some(k),
                    format!("relative order of cycle {} changed", j + 1),
                );
            }
            if g.iter().any(|&x| x > g[0]) {
                fail(
                    Lemma::RelativeOrder,
                    Some(k),
                    format!("cycle {} does not lead with its maximum", j + 1),
                );
            }
        }
        if e.step.is_rightmost() && before[bounds[i + 1] - 1] != u {
            fail(
                Lemma::LastSlotRun,
                Some(k),
                format!("step I switched {u}, which is not the last entry"),
            );
        }
    }

    // runs through the last slot of each fixed cycle
    for i in 0..r.saturating_sub(1) {
        let slot = bounds[i + 1] - 1;
        let ks: Vec<usize> = (0..trace.events.len())
            .filter(|&k| trace.events[k].iteration == i + 1)
            .collect();
        let mut run = vec![match ks.first() {
            Some(&k) => trace.state_before(k)[slot],
            None => continue,
        }];
        for &k in &ks {
            let v = trace.state_after(k)[slot];
            if *run.last().unwrap() != v {
                run.push(v);
            }
        }
        if run[0] != last[i] {
            fail(
                Lemma::LastSlotRun,
                None,
                format!("cycle {} starts its run at {} not b = {}", i + 1, run[0], last[i]),
            );
        }
        let steps: Vec<isize> = run
            .windows(2)
            .map(|w| w[1] as isize - w[0] as isize)
            .collect();
        if !steps.iter().all(|&d| d.abs() == 1) || steps.windows(2).any(|w| w[0] != w[1]) {
            fail(
                Lemma::LastSlotRun,
                None,
                format!("cycle {} last slot ran through {run:?}", i + 1),
            );
        }
        if run.windows(2).any(|w| pi.at(w[0]) <= pi.at(w[1])) {
            fail(
                Lemma::DecreasingPi,
                None,
                format!("pi is not decreasing along {run:?} in cycle {}", i + 1),
            );
        }
    }
    out
}
