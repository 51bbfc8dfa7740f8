use std::fmt;

use crate::perm::{write_cycle, Permutation};

/// Entries written left to right and cut into fixed groups. Switching two
/// values swaps their positions; the group boundaries never move.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Layout {
    entries: Vec<usize>,
    /// `pos[v]` is the flat index of value `v`.
    pos: Vec<usize>,
    /// `group_of[p]` for flat index `p`.
    group_of: Vec<usize>,
    /// Group start indices followed by `entries.len()`.
    starts: Vec<usize>,
}

impl Layout {
    fn new(groups: &[Vec<usize>]) -> Self {
        let len: usize = groups.iter().map(Vec::len).sum();
        let mut entries = Vec::with_capacity(len);
        let mut group_of = Vec::with_capacity(len);
        let mut starts = Vec::with_capacity(groups.len() + 1);
        for (g, group) in groups.iter().enumerate() {
            starts.push(entries.len());
            entries.extend_from_slice(group);
            group_of.extend(std::iter::repeat_n(g, group.len()));
        }
        starts.push(len);
        let max = entries.iter().copied().max().unwrap_or(0);
        let mut pos = vec![usize::MAX; max + 1];
        for (p, &v) in entries.iter().enumerate() {
            pos[v] = p;
        }
        Layout {
            entries,
            pos,
            group_of,
            starts,
        }
    }

    fn groups(&self) -> impl Iterator<Item = &[usize]> {
        self.starts
            .windows(2)
            .map(move |w| &self.entries[w[0]..w[1]])
    }

    fn group_count(&self) -> usize {
        self.starts.len() - 1
    }

    fn swap_values(&mut self, a: usize, b: usize) {
        let (pa, pb) = (self.pos[a], self.pos[b]);
        self.entries.swap(pa, pb);
        self.pos[a] = pb;
        self.pos[b] = pa;
    }

    fn fmt_groups(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in self.groups() {
            write_cycle(f, g)?;
        }
        Ok(())
    }
}

/// The evolving cycle form `σ̂ = (a_1,…,b_1)(a_2,…,b_2)⋯(a_r,…,b_r)` on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkingCycles {
    layout: Layout,
}

impl WorkingCycles {
    pub(crate) fn new(cycles: &[Vec<usize>]) -> Self {
        WorkingCycles {
            layout: Layout::new(cycles),
        }
    }

    pub fn n(&self) -> usize {
        self.layout.entries.len()
    }

    pub fn cycle_count(&self) -> usize {
        self.layout.group_count()
    }

    pub fn cycle(&self, i: usize) -> &[usize] {
        let s = &self.layout.starts;
        &self.layout.entries[s[i]..s[i + 1]]
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.layout.groups().map(<[usize]>::to_vec).collect()
    }

    /// Flat entries, cycles concatenated.
    pub fn entries(&self) -> &[usize] {
        &self.layout.entries
    }

    /// Cycle start offsets into [`entries`](Self::entries), then `n`.
    pub fn boundaries(&self) -> &[usize] {
        &self.layout.starts
    }

    /// `(cycle index, offset within cycle)` of value `v`.
    pub fn position(&self, v: usize) -> (usize, usize) {
        let p = self.layout.pos[v];
        let g = self.layout.group_of[p];
        (g, p - self.layout.starts[g])
    }

    /// `σ̂(v)`: the entry after `v` in its cycle, wrapping around.
    #[inline]
    pub fn succ(&self, v: usize) -> usize {
        let l = &self.layout;
        let p = l.pos[v];
        let g = l.group_of[p];
        let next = if p + 1 == l.starts[g + 1] {
            l.starts[g]
        } else {
            p + 1
        };
        l.entries[next]
    }

    pub(crate) fn flat_pos(&self, v: usize) -> usize {
        self.layout.pos[v]
    }

    pub(crate) fn at_flat(&self, p: usize) -> usize {
        self.layout.entries[p]
    }

    pub(crate) fn group_of_flat(&self, p: usize) -> usize {
        self.layout.group_of[p]
    }

    pub(crate) fn group_start(&self, g: usize) -> usize {
        self.layout.starts[g]
    }

    pub(crate) fn switch(&mut self, a: usize, b: usize) {
        self.layout.swap_values(a, b);
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0; self.n()];
        for v in 1..=self.n() {
            word[v - 1] = self.succ(v);
        }
        Permutation::from_word_unchecked(word)
    }
}

impl fmt::Display for WorkingCycles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.layout.fmt_groups(f)
    }
}

/// The evolving `(n+1)`-cycle `π̂ = (c_1,…,d_1;c_2,…,d_2;…;n+1)`, kept with its
/// block boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkingBlocks {
    layout: Layout,
}

impl WorkingBlocks {
    pub(crate) fn new(blocks: &[Vec<usize>]) -> Self {
        WorkingBlocks {
            layout: Layout::new(blocks),
        }
    }

    /// Size of the underlying `σ`; the cycle itself has `n + 1` entries.
    pub fn n(&self) -> usize {
        self.layout.entries.len() - 1
    }

    /// Number of blocks, including the final `(n+1)` block.
    pub fn block_count(&self) -> usize {
        self.layout.group_count()
    }

    pub fn block(&self, i: usize) -> &[usize] {
        let s = &self.layout.starts;
        &self.layout.entries[s[i]..s[i + 1]]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.layout.groups().map(<[usize]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[usize] {
        &self.layout.entries
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.layout.starts
    }

    /// `π̂(v)`: the next entry of the whole cycle, wrapping from `n+1` back
    /// to the first entry.
    #[inline]
    pub fn succ(&self, v: usize) -> usize {
        let l = &self.layout;
        let next = (l.pos[v] + 1) % l.entries.len();
        l.entries[next]
    }

    pub(crate) fn flat_pos(&self, v: usize) -> usize {
        self.layout.pos[v]
    }

    pub(crate) fn at_flat(&self, p: usize) -> usize {
        self.layout.entries[p]
    }

    pub(crate) fn group_start(&self, g: usize) -> usize {
        self.layout.starts[g]
    }

    pub(crate) fn switch(&mut self, a: usize, b: usize) {
        self.layout.swap_values(a, b);
    }

    pub fn to_permutation(&self) -> Permutation {
        let m = self.layout.entries.len();
        let mut word = vec![0; m];
        for v in 1..=m {
            word[v - 1] = self.succ(v);
        }
        Permutation::from_word_unchecked(word)
    }
}

impl fmt::Display for WorkingBlocks {
    /// `(11,4,9,3,5;16,10,1,7,15;…;21)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (g, block) in self.layout.groups().enumerate() {
            if g > 0 {
                f.write_str(";")?;
            }
            for (k, v) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str(")")
    }
}
