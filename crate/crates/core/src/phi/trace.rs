use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::format_cycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    /// Switch of the rightmost entry of the current cycle (φ).
    #[serde(rename = "I")]
    Rightmost,
    /// Switch of two preceding entries (φ).
    #[serde(rename = "II")]
    Preceding,
    /// Switch of the rightmost entry of the current block (ψ).
    #[serde(rename = "I'")]
    BlockRightmost,
    /// Switch of two preceding entries (ψ).
    #[serde(rename = "II'")]
    BlockPreceding,
}

impl Step {
    pub fn label(self) -> &'static str {
        match self {
            Step::Rightmost => "I",
            Step::Preceding => "II",
            Step::BlockRightmost => "I'",
            Step::BlockPreceding => "II'",
        }
    }

    pub fn is_rightmost(self) -> bool {
        matches!(self, Step::Rightmost | Step::BlockRightmost)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceKind {
    Phi,
    Psi,
}

/// One switch. `values.0` is the entry on the side of the cycle (or block)
/// being fixed, `values.1` the entry it trades places with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchEvent {
    /// 1-based index of the cycle or block being fixed.
    pub iteration: usize,
    pub step: Step,
    pub values: (usize, usize),
    /// Index into [`SwitchTrace::snapshots`] of the state after the switch.
    pub state: usize,
}

/// Every switch made by one run of φ or ψ, with the flat entries after each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchTrace {
    pub kind: TraceKind,
    /// Group start offsets followed by the total length; fixed for the run.
    pub boundaries: Vec<usize>,
    /// `snapshots[0]` is the initial state.
    pub snapshots: Vec<Vec<usize>>,
    pub events: Vec<SwitchEvent>,
}

impl SwitchTrace {
    pub(crate) fn new(kind: TraceKind, boundaries: Vec<usize>, initial: Vec<usize>) -> Self {
        SwitchTrace {
            kind,
            boundaries,
            snapshots: vec![initial],
            events: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, iteration: usize, step: Step, values: (usize, usize), after: &[usize]) {
        self.snapshots.push(after.to_vec());
        self.events.push(SwitchEvent {
            iteration,
            step,
            values,
            state: self.snapshots.len() - 1,
        });
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn initial(&self) -> &[usize] {
        &self.snapshots[0]
    }

    pub fn last_state(&self) -> &[usize] {
        self.snapshots.last().expect("initial snapshot always present")
    }

    /// State in force just before event `k`.
    pub fn state_before(&self, k: usize) -> &[usize] {
        &self.snapshots[self.events[k].state - 1]
    }

    pub fn state_after(&self, k: usize) -> &[usize] {
        &self.snapshots[self.events[k].state]
    }

    /// The switched pairs in order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.events.iter().map(|e| e.values).collect()
    }

    /// Splits a flat snapshot at the group boundaries.
    pub fn groups<'a>(&'a self, state: &'a [usize]) -> impl Iterator<Item = &'a [usize]> + 'a {
        self.boundaries.windows(2).map(move |w| &state[w[0]..w[1]])
    }

    /// Cycle form for φ, `;`-separated block form for ψ.
    pub fn render(&self, state: &[usize]) -> String {
        match self.kind {
            TraceKind::Phi => self.groups(state).map(format_cycle).collect(),
            TraceKind::Psi => {
                let blocks: Vec<String> = self
                    .groups(state)
                    .map(|g| {
                        g.iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                format!("({})", blocks.join(";"))
            }
        }
    }

    /// One `iter=i step=S swap=(a,b)` line per event.
    pub fn to_text(&self) -> String {
        self.events
            .iter()
            .map(|e| {
                format!(
                    "iter={} step={} swap=({},{})\n",
                    e.iteration,
                    e.step.label(),
                    e.values.0,
                    e.values.1
                )
            })
            .collect()
    }
}

/// Narrative form, one `cycle i, step S: switch a and b` line per event
/// (`block` for ψ).
impl fmt::Display for SwitchTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(
                f,
                "{} {}, step {}: switch {} and {}",
                match self.kind {
                    TraceKind::Phi => "cycle",
                    TraceKind::Psi => "block",
                },
                e.iteration,
                e.step.label(),
                e.values.0,
                e.values.1
            )?;
        }
        Ok(())
    }
}
