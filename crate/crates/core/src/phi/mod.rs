//! The descent-preserving bijection `φ: C_{n+1} → S_n` and its inverse `ψ`.
//!
//! `φ` cuts the cycle of `π` (written to end with `n+1`) before its
//! left-to-right maxima and then repairs the descents it broke by switching
//! consecutive values in the resulting cycle form, one cycle at a time. `ψ`
//! glues the canonical cycle form of `σ` back into one cycle and undoes the
//! switches block by block, from the right.

mod lemmas;
mod state;
mod trace;

pub use lemmas::{check_lemmas, Lemma, LemmaViolation};
pub use state::{WorkingBlocks, WorkingCycles};
pub use trace::{Step, SwitchEvent, SwitchTrace, TraceKind};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Writes `π ∈ C_{n+1}` as `(t_1, …, t_n, n+1)` and opens a new cycle before
/// every left-to-right maximum of `t` except `t_1`.
pub fn split_at_ltr_maxima(pi: &Permutation) -> Result<WorkingCycles> {
    let m = pi.n();
    if m < 2 {
        return Err(Error::Empty);
    }
    let t = pi.cycle_ending_with(m)?;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut max = 0;
    for &v in &t[..m - 1] {
        if v > max {
            max = v;
            cycles.push(Vec::new());
        }
        cycles.last_mut().expect("first entry opens a cycle").push(v);
    }
    Ok(WorkingCycles::new(&cycles))
}

/// `P(x, y)`: `π(x) > π(y)` and `σ̂(x) < σ̂(y)`; false unless `1 <= x, y <= n`.
pub fn condition_p(pi: &Permutation, state: &WorkingCycles, x: usize, y: usize) -> bool {
    let n = state.n();
    (1..=n).contains(&x)
        && (1..=n).contains(&y)
        && pi.at(x) > pi.at(y)
        && state.succ(x) < state.succ(y)
}

/// `Q(x, y)`: `π̂(x) > π̂(y)` and `σ(x) < σ(y)`; false unless `1 <= x, y <= n`.
pub fn condition_q(sigma: &Permutation, state: &WorkingBlocks, x: usize, y: usize) -> bool {
    let n = state.n();
    (1..=n).contains(&x)
        && (1..=n).contains(&y)
        && state.succ(x) > state.succ(y)
        && sigma.at(x) < sigma.at(y)
}

/// Runs one iteration of the main loop of φ on cycle `i` (0-based), i.e.
/// fixes `Γ_{i+1}`. Cycles before `i` must already be fixed.
pub fn fix_cycle(
    i: usize,
    pi: &Permutation,
    state: &mut WorkingCycles,
    mut trace: Option<&mut SwitchTrace>,
) -> Result<()> {
    let leftmost = state.group_start(i);
    let mut z = *state.cycle(i).last().expect("cycles are nonempty");
    let up = match (
        condition_p(pi, state, z, z + 1),
        condition_p(pi, state, z, z - 1),
    ) {
        (false, false) => return Ok(()),
        (true, false) => true,
        (false, true) => false,
        // both hold: take the direction whose σ̂-value is larger
        (true, true) => state.succ(z + 1) > state.succ(z - 1),
    };
    let next = |z: usize| if up { z + 1 } else { z - 1 };

    while condition_p(pi, state, z, next(z)) {
        let w = next(z);
        let (mut pa, mut pb) = (state.flat_pos(z), state.flat_pos(w));
        state.switch(z, w);
        if let Some(t) = trace.as_deref_mut() {
            t.record(i + 1, Step::Rightmost, (z, w), state.entries());
        }
        loop {
            if pa == leftmost || pb == leftmost {
                break;
            }
            if pb == state.group_start(state.group_of_flat(pb)) {
                return Err(Error::Internal(format!(
                    "switch cascade reached the leading entry {} of another cycle",
                    state.at_flat(pb)
                )));
            }
            let (x, y) = (state.at_flat(pa - 1), state.at_flat(pb - 1));
            if x.abs_diff(y) != 1 {
                break;
            }
            state.switch(x, y);
            if let Some(t) = trace.as_deref_mut() {
                t.record(i + 1, Step::Preceding, (x, y), state.entries());
            }
            pa -= 1;
            pb -= 1;
        }
        z = w;
    }
    Ok(())
}

fn phi_impl(pi: &Permutation, mut trace: Option<&mut SwitchTrace>) -> Result<(Permutation, WorkingCycles)> {
    let mut state = split_at_ltr_maxima(pi)?;
    if let Some(t) = trace.as_deref_mut() {
        *t = SwitchTrace::new(
            TraceKind::Phi,
            state.boundaries().to_vec(),
            state.entries().to_vec(),
        );
    }
    for i in 0..state.cycle_count() - 1 {
        fix_cycle(i, pi, &mut state, trace.as_deref_mut())?;
    }
    Ok((state.to_permutation(), state))
}

/// `φ(π)` for `π ∈ C_{n+1}`; the result satisfies `D(φ(π)) = D(π) ∩ [n-1]`.
pub fn phi(pi: &Permutation) -> Result<Permutation> {
    phi_impl(pi, None).map(|(sigma, _)| sigma)
}

/// `φ(π)` together with its final cycle form.
pub fn phi_cycles(pi: &Permutation) -> Result<WorkingCycles> {
    phi_impl(pi, None).map(|(_, state)| state)
}

pub fn phi_traced(pi: &Permutation) -> Result<(Permutation, SwitchTrace)> {
    let mut trace = SwitchTrace::new(TraceKind::Phi, Vec::new(), Vec::new());
    let (sigma, _) = phi_impl(pi, Some(&mut trace))?;
    Ok((sigma, trace))
}

/// Concatenates the canonical cycle form of `σ` and appends `n+1` as a final
/// block.
pub fn merge_blocks(sigma: &Permutation) -> WorkingBlocks {
    let mut blocks = sigma.canonical_cycle_form().into_cycles();
    blocks.push(vec![sigma.n() + 1]);
    WorkingBlocks::new(&blocks)
}

/// Runs one iteration of ψ on block `i` (0-based), i.e. on `Δ_{i+1}`.
pub fn fix_block(
    i: usize,
    sigma: &Permutation,
    state: &mut WorkingBlocks,
    mut trace: Option<&mut SwitchTrace>,
) -> Result<()> {
    let leftmost = state.group_start(i);
    let mut z = *state.block(i).last().expect("blocks are nonempty");
    let up = match (
        condition_q(sigma, state, z, z + 1),
        condition_q(sigma, state, z, z - 1),
    ) {
        (false, false) => return Ok(()),
        (true, false) => true,
        (false, true) => false,
        // both hold: take the direction whose π̂-value is smaller
        (true, true) => state.succ(z + 1) < state.succ(z - 1),
    };
    let next = |z: usize| if up { z + 1 } else { z - 1 };

    while condition_q(sigma, state, z, next(z)) {
        let w = next(z);
        let (mut pa, mut pb) = (state.flat_pos(z), state.flat_pos(w));
        state.switch(z, w);
        if let Some(t) = trace.as_deref_mut() {
            t.record(i + 1, Step::BlockRightmost, (z, w), state.entries());
        }
        loop {
            if pa == leftmost || pb == leftmost {
                break;
            }
            if pb == 0 {
                return Err(Error::Internal(
                    "switch cascade ran past the start of the cycle".into(),
                ));
            }
            let (x, y) = (state.at_flat(pa - 1), state.at_flat(pb - 1));
            if x.abs_diff(y) != 1 {
                break;
            }
            state.switch(x, y);
            if let Some(t) = trace.as_deref_mut() {
                t.record(i + 1, Step::BlockPreceding, (x, y), state.entries());
            }
            pa -= 1;
            pb -= 1;
        }
        z = w;
    }
    Ok(())
}

fn psi_impl(sigma: &Permutation, mut trace: Option<&mut SwitchTrace>) -> Result<Permutation> {
    let mut state = merge_blocks(sigma);
    if let Some(t) = trace.as_deref_mut() {
        *t = SwitchTrace::new(
            TraceKind::Psi,
            state.boundaries().to_vec(),
            state.entries().to_vec(),
        );
    }
    // the last cycle of σ and the n+1 block are never processed
    let processed = state.block_count().saturating_sub(2);
    for i in (0..processed).rev() {
        fix_block(i, sigma, &mut state, trace.as_deref_mut())?;
    }
    Ok(state.to_permutation())
}

/// `ψ(σ) ∈ C_{n+1}` for any `σ ∈ S_n`; inverse of [`phi`].
pub fn psi(sigma: &Permutation) -> Result<Permutation> {
    psi_impl(sigma, None)
}

pub fn psi_traced(sigma: &Permutation) -> Result<(Permutation, SwitchTrace)> {
    let mut trace = SwitchTrace::new(TraceKind::Psi, Vec::new(), Vec::new());
    let pi = psi_impl(sigma, Some(&mut trace))?;
    Ok((pi, trace))
}
