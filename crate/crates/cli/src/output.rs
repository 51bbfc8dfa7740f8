//! JSON shapes. Each has a schema under `schemas/`.

use serde::Serialize;

#[derive(Serialize)]
pub struct MapOutput {
    pub map: &'static str,
    pub input: String,
    pub one_line: Vec<usize>,
    pub dotted: String,
    pub cycles: String,
    pub descents: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceOutput>,
}

#[derive(Serialize)]
pub struct TraceOutput {
    pub initial: String,
    pub events: Vec<TraceEvent>,
}

#[derive(Serialize)]
pub struct TraceEvent {
    pub iteration: usize,
    pub step: &'static str,
    pub switch: [usize; 2],
    /// Cycles (φ) or blocks (ψ) after the switch.
    pub state: String,
}

#[derive(Serialize)]
pub struct TableOutput {
    pub n: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Serialize)]
pub struct TableRow {
    pub cycle: String,
    pub pi: Vec<usize>,
    pub sigma: Vec<usize>,
    pub descents: Vec<usize>,
}

#[derive(Serialize)]
pub struct CountOutput {
    pub n: usize,
    pub subset: Vec<usize>,
    pub mode: &'static str,
    /// Decimal string; counts outgrow 64 bits quickly.
    pub count: String,
}

#[derive(Serialize)]
pub struct TransferOutput {
    pub perm: Vec<usize>,
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    /// 1-based block matching.
    pub alpha: Vec<usize>,
    pub image: Vec<usize>,
    pub cycle_type: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub necklaces: Option<String>,
}
