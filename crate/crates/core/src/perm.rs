//! Permutations of `[n]` in one-line and cycle notation, descent sets and the
//! subset / composition / partition correspondence.
//!
//! Everything here is 1-indexed: position `i` of a word and the value `v` are
//! both in `1..=n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a permutation of `1..=word.len()`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The `n`-cycle `(1, 2, ..., n)`.
    pub fn long_cycle(n: usize) -> Self {
        let mut word: Vec<usize> = (2..=n).collect();
        word.push(1);
        Permutation { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `π(i)` for `1 <= i <= n`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// `π⁻¹(v)`.
    pub fn position_of(&self, v: usize) -> usize {
        self.word.iter().position(|&x| x == v).map_or(0, |p| p + 1)
    }

    pub fn descent_set(&self) -> DescentSet {
        descent_set(&self.word)
    }

    /// Cycles `(i, π(i), π²(i), ...)` started at their smallest element, in
    /// increasing order of that element.
    pub fn to_cycles(&self) -> CycleDecomposition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.at(v);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }

    /// Largest element first in each cycle, cycles by increasing first element.
    pub fn canonical_cycle_form(&self) -> CycleDecomposition {
        self.to_cycles().canonicalize()
    }

    /// The rotation `(t_1, ..., t_{n-1}, last)` of a cyclic permutation.
    pub fn cycle_ending_with(&self, last: usize) -> Result<Vec<usize>> {
        let n = self.n();
        if last == 0 || last > n {
            return Err(Error::OutOfRange {
                value: last,
                max: n,
            });
        }
        if !self.is_cyclic() {
            return Err(Error::NotCyclic { n });
        }
        let mut out = Vec::with_capacity(n);
        let mut v = self.at(last);
        for _ in 0..n {
            out.push(v);
            v = self.at(v);
        }
        Ok(out)
    }

    pub fn reverse_complement(&self) -> Permutation {
        Permutation {
            word: reverse_complement_word(&self.word, self.n()),
        }
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_parts(self.to_cycles().cycles.iter().map(Vec::len).collect())
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.n();
        let mut v = 1;
        for step in 1..=n {
            v = self.at(v);
            if v == 1 {
                return step == n;
            }
        }
        false
    }

    pub fn is_derangement(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v != i + 1)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                actual: other.n(),
            });
        }
        Ok(Permutation {
            word: other.word.iter().map(|&v| self.at(v)).collect(),
        })
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_spaced(f, &self.word)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts one-line (`2 5 1 7 3 6 4`) or cycle form (`(5,3,1,2)(6)(7,4)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let cycles: CycleDecomposition = s.parse()?;
            Ok(cycles.to_permutation())
        } else {
            Permutation::new(parse_word(s)?)
        }
    }
}

/// Disjoint cycle decomposition of a permutation of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Validates that `cycles` partition `1..=n`. Any rotation of a cycle and
    /// any cycle order is accepted.
    pub fn new(n: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &v in cycles.iter().flatten() {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("value {v} repeated"),
                });
            }
        }
        if let Some(missing) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("value {missing} missing"),
            });
        }
        if cycles.iter().any(Vec::is_empty) {
            return Err(Error::Parse("empty cycle".into()));
        }
        Ok(CycleDecomposition { n, cycles })
    }

    /// Builds from cycles, taking `n` to be the largest value present.
    pub fn from_cycles(cycles: Vec<Vec<usize>>) -> Result<Self> {
        let n = cycles.iter().flatten().copied().max().ok_or(Error::Empty)?;
        CycleDecomposition::new(n, cycles)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Vec<usize>> {
        self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0; self.n];
        for cycle in &self.cycles {
            for (k, &v) in cycle.iter().enumerate() {
                word[v - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_word_unchecked(word)
    }

    pub fn canonicalize(mut self) -> Self {
        for cycle in &mut self.cycles {
            let (argmax, _) = cycle
                .iter()
                .enumerate()
                .max_by_key(|&(_, &v)| v)
                .expect("cycles are nonempty");
            cycle.rotate_left(argmax);
        }
        self.cycles.sort_by_key(|c| c[0]);
        self
    }

    pub fn is_canonical(&self) -> bool {
        self.cycles
            .iter()
            .all(|c| c.iter().all(|&v| v <= c[0]))
            && self.cycles.windows(2).all(|w| w[0][0] < w[1][0])
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write_cycle(f, cycle)?;
        }
        Ok(())
    }
}

impl FromStr for CycleDecomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CycleDecomposition::from_cycles(parse_cycle_groups(s)?)
    }
}

/// Parses `(a,b,c)(d)...` into groups; whitespace is ignored and a group may
/// also be separated with `;`.
pub fn parse_cycle_groups(s: &str) -> Result<Vec<Vec<usize>>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Empty);
    }
    let mut groups = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` at `{rest}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::Parse("nested parentheses".into()));
        }
        let group = inner
            .split([',', ';'])
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        groups.push(group);
        rest = &body[close + 1..];
    }
    Ok(groups)
}

/// Whitespace-separated decimal integers.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let word = s
        .split_whitespace()
        .filter(|t| *t != DESCENT_DOT)
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    if word.is_empty() {
        return Err(Error::Empty);
    }
    Ok(word)
}

/// Separator token marking a descent in [`dotted_word`].
pub const DESCENT_DOT: &str = "·";

/// One-line form with a `·` token between `w_i` and `w_{i+1}` at each
/// descent: `7 · 6 · 5 9`. [`parse_word`] skips the dots.
pub fn dotted_word(values: &[usize]) -> String {
    let mut out = String::new();
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            out.push_str(if values[k - 1] > *v { " · " } else { " " });
        }
        out.push_str(&v.to_string());
    }
    out
}

pub(crate) fn write_spaced(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

pub(crate) fn write_cycle(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// Formats a single cycle as `(a,b,c)`.
pub fn format_cycle(values: &[usize]) -> String {
    struct Cycle<'a>(&'a [usize]);
    impl fmt::Display for Cycle<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_cycle(f, self.0)
        }
    }
    Cycle(values).to_string()
}

/// Positions `i` with `seq[i] > seq[i+1]` (1-indexed), for any sequence of
/// distinct integers. The ambient size is `seq.len()`.
pub fn descent_set(seq: &[usize]) -> DescentSet {
    DescentSet {
        n: seq.len(),
        elements: seq
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect(),
    }
}

/// Reverses positions and maps each value `j` to `n + 1 - j`. Marked words
/// go through unchanged in shape: a `0` becomes `n + 1` and vice versa.
pub fn reverse_complement_word(seq: &[usize], n: usize) -> Vec<usize> {
    seq.iter().rev().map(|&v| n + 1 - v).collect()
}

/// A subset of `[n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DescentSet {
    n: usize,
    elements: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&i| i == 0 || i + 1 > n) {
            return Err(Error::OutOfRange {
                value: bad,
                max: n.saturating_sub(1),
            });
        }
        Ok(DescentSet { n, elements })
    }

    pub fn empty(n: usize) -> Self {
        DescentSet {
            n,
            elements: Vec::new(),
        }
    }

    /// `[n-1]` itself.
    pub fn full(n: usize) -> Self {
        DescentSet {
            n,
            elements: (1..n).collect(),
        }
    }

    /// Decodes bit `i-1` of `mask` as membership of `i`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        DescentSet {
            n,
            elements: (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// Every subset of `[n-1]`, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = DescentSet> {
        let bits = n.saturating_sub(1);
        assert!(bits < 64, "too many subsets to enumerate");
        (0..1u64 << bits).map(move |m| DescentSet::from_mask(n, m))
    }

    /// Subsets of `self`.
    pub fn subsets(&self) -> impl Iterator<Item = DescentSet> + '_ {
        let k = self.elements.len();
        (0..1u64 << k).map(move |m| DescentSet {
            n: self.n,
            elements: (0..k)
                .filter(|&b| m >> b & 1 == 1)
                .map(|b| self.elements[b])
                .collect(),
        })
    }

    /// Parses `2,8`, `{2,8}`, `{}` or an empty string.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(DescentSet::empty(n));
        }
        let elements = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        DescentSet::new(n, elements)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.elements.iter().all(|&i| other.contains(i))
    }

    /// `self ∩ keep`, with ambient size unchanged.
    pub fn intersect(&self, keep: &DescentSet) -> DescentSet {
        DescentSet {
            n: self.n,
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&i| keep.contains(i))
                .collect(),
        }
    }

    /// Drops elements `>= m` and changes the ambient size to `m`; used for
    /// `D(π) ∩ [n-1]` when `π ∈ S_{n+1}`.
    pub fn truncate(&self, m: usize) -> DescentSet {
        DescentSet {
            n: m,
            elements: self.elements.iter().copied().filter(|&i| i < m).collect(),
        }
    }

    /// `{n - i : i ∈ I}`.
    pub fn reversed(&self) -> DescentSet {
        let mut elements: Vec<usize> = self.elements.iter().map(|&i| self.n - i).collect();
        elements.reverse();
        DescentSet {
            n: self.n,
            elements,
        }
    }

    /// `(i_1, i_2 - i_1, ..., n - i_k)`.
    pub fn composition(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.elements.len() + 1);
        let mut prev = 0;
        for &i in self.elements.iter().chain(std::iter::once(&self.n)) {
            parts.push(i - prev);
            prev = i;
        }
        Composition { parts }
    }

    pub fn associated_partition(&self) -> Partition {
        Partition::from_parts(self.composition().parts)
    }

    /// 1-based index of the composition block containing value `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.elements.partition_point(|&i| i < v) + 1
    }
}

impl Ord for DescentSet {
    /// By ambient size, then cardinality, then lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.elements.len(), &self.elements).cmp(&(
            other.n,
            other.elements.len(),
            &other.elements,
        ))
    }
}

impl PartialOrd for DescentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.elements.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Empty);
        }
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Inverse of [`DescentSet::composition`].
    pub fn descent_set(&self) -> DescentSet {
        let n = self.n();
        let mut acc = 0;
        let elements = self.parts[..self.parts.len() - 1]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        DescentSet { n, elements }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycle(f, &self.parts)
    }
}

/// Non-increasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` non-increasingly; zeros are dropped.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycle(f, &self.parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(n: usize, e: &[usize]) -> DescentSet {
        DescentSet::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn descent_sets() {
        assert!(descent_set(&[2, 3, 4, 5, 1]).elements() == [4]);
        assert_eq!(perm("2 3 4 5 1").descent_set().truncate(4), set(4, &[]));
        assert_eq!(descent_set(&[4, 3, 1]), set(3, &[1, 2]));
        assert_eq!(perm("2 5 1 7 3 6 4").descent_set(), set(7, &[2, 4, 6]));
    }

    #[test]
    fn cycles_round_trip_and_canonical_form() {
        let p = perm("2 5 1 7 3 6 4");
        assert_eq!(p.to_cycles().to_string(), "(1,2,5,3)(4,7)(6)");
        assert_eq!(p.canonical_cycle_form().to_string(), "(5,3,1,2)(6)(7,4)");
        assert_eq!(p.to_cycles().to_permutation(), p);
        assert_eq!(perm("(5,3,1,2)(6)(7,4)"), p);
        assert_eq!(perm("( 7 , 4 ) (2,5,3,1)(6)"), p);

        assert_eq!(Permutation::identity(3).to_cycles().to_string(), "(1)(2)(3)");
        assert_eq!(perm("(2,3,1,4)").to_string(), "4 3 1 2");
        assert_eq!(perm("3 2 1").canonical_cycle_form().to_string(), "(2)(3,1)");
        assert_eq!(
            Permutation::long_cycle(5).canonical_cycle_form().to_string(),
            "(5,1,2,3,4)"
        );
    }

    #[test]
    fn from_cycles_rejects_bad_input() {
        assert!(CycleDecomposition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(CycleDecomposition::new(4, vec![vec![1, 2], vec![3]]).is_err());
        assert!(CycleDecomposition::new(3, vec![vec![1, 2, 4]]).is_err());
        assert!("(1,2".parse::<CycleDecomposition>().is_err());
        assert!("1 2 2".parse::<Permutation>().is_err());
        assert!("1 3".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_ending_with() {
        let p = perm("(11,4,10,1,7,16,9,3,5,12,20,2,6,14,18,8,13,19,15,17,21)");
        assert_eq!(
            p.cycle_ending_with(21).unwrap(),
            vec![11, 4, 10, 1, 7, 16, 9, 3, 5, 12, 20, 2, 6, 14, 18, 8, 13, 19, 15, 17, 21]
        );
        assert_eq!(perm("(1,2,3)").cycle_ending_with(3).unwrap(), vec![1, 2, 3]);
        assert_eq!(perm("(2,3,1,4)").cycle_ending_with(1).unwrap(), vec![4, 2, 3, 1]);
        assert_eq!(
            perm("2 1 3").cycle_ending_with(1),
            Err(Error::NotCyclic { n: 3 })
        );
    }

    #[test]
    fn reverse_complement() {
        assert_eq!(perm("2 3 1").reverse_complement(), perm("3 1 2"));
        let p = perm("2 3 4 1");
        assert_eq!(p.reverse_complement(), perm("4 1 2 3"));
        // the marked word 031 has its 0 turned into 4
        assert_eq!(reverse_complement_word(&[0, 3, 1], 3), vec![3, 1, 4]);
    }

    #[test]
    fn compositions_and_partitions() {
        let i = set(13, &[3, 5, 8, 12]);
        assert_eq!(i.composition().parts(), [3, 2, 3, 4, 1]);
        assert_eq!(i.associated_partition().parts(), [4, 3, 3, 2, 1]);
        assert_eq!(set(5, &[]).composition().parts(), [5]);
        assert_eq!(set(5, &[]).associated_partition().parts(), [5]);
        assert_eq!(set(12, &[2, 8]).composition().parts(), [2, 6, 4]);
        assert!(DescentSet::new(5, vec![5]).is_err());
        assert!(DescentSet::new(5, vec![0]).is_err());
        assert_eq!(i.composition().descent_set(), i);
    }

    #[test]
    fn cycle_types() {
        let p = perm("2 5 1 7 3 6 4");
        assert_eq!(p.cycle_type().parts(), [4, 2, 1]);
        assert!(!p.is_cyclic());
        assert!(!p.is_derangement());
        assert_eq!(Permutation::identity(4).cycle_type().parts(), [1, 1, 1, 1]);
        assert_eq!(
            perm("3 4 1 2 5 9 11 12 6 7 8 10").cycle_type().parts(),
            [5, 2, 2, 2, 1]
        );
        assert!(perm("2 3 1").is_cyclic());
        assert!(perm("2 1 4 3").is_derangement());
    }

    #[test]
    fn descent_set_parsing() {
        assert_eq!(DescentSet::parse("{2,8}", 12).unwrap(), set(12, &[2, 8]));
        assert_eq!(DescentSet::parse(" 2, 8 ", 12).unwrap(), set(12, &[2, 8]));
        assert_eq!(DescentSet::parse("{}", 4).unwrap(), set(4, &[]));
        assert!(DescentSet::parse("2,x", 4).is_err());
        assert_eq!(set(12, &[2, 8]).to_string(), "{2,8}");
    }

    #[test]
    fn partitions_of_small_n() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn block_of() {
        let i = set(12, &[2, 8]);
        let blocks: Vec<usize> = (1..=12).map(|v| i.block_of(v)).collect();
        assert_eq!(blocks, [1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn dotted_words_reparse() {
        let w = [3, 1, 2, 5, 4];
        assert_eq!(dotted_word(&w), "3 · 1 2 5 · 4");
        assert_eq!(parse_word(&dotted_word(&w)).unwrap(), w);
    }

}
