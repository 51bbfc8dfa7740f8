//! Necklaces over the ordered alphabet `x_1 < x_2 < …` (letters are stored as
//! their indices `1, 2, …`), multisets of necklaces, and the cycle-type
//! preserving transfer between `{π : D(π) ⊆ I}` and `{σ : D(σ) ⊆ J}` for
//! subsets with the same associated partition.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{write_cycle, DescentSet, Partition, Permutation};

/// A rotation class of words, stored as its lexicographically least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Necklace {
    word: Vec<usize>,
}

impl Necklace {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// True when no proper rotation fixes the word.
    pub fn is_primitive(&self) -> bool {
        let l = self.word.len();
        (1..l).filter(|d| l.is_multiple_of(*d)).all(|d| {
            self.word[d..] != self.word[..l - d]
        })
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycle(f, &self.word)
    }
}

/// Offset of the least rotation of `word` (Booth-style two-pointer scan).
pub fn least_rotation(word: &[usize]) -> usize {
    let n = word.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let (a, b) = (word[(i + k) % n], word[(j + k) % n]);
        match a.cmp(&b) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

pub fn canonical_necklace(word: &[usize]) -> Result<Necklace> {
    if word.is_empty() {
        return Err(Error::Empty);
    }
    let mut w = word.to_vec();
    w.rotate_left(least_rotation(word));
    Ok(Necklace { word: w })
}

/// Compares the infinite periodic sequences read from `a` starting at offset
/// `oa` and from `b` starting at `ob`. Agreement on the first `|a| + |b|`
/// letters means agreement forever.
pub fn periodic_compare(a: &[usize], oa: usize, b: &[usize], ob: usize) -> Ordering {
    let (la, lb) = (a.len(), b.len());
    (0..la + lb)
        .map(|t| a[(oa + t) % la].cmp(&b[(ob + t) % lb]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// A multiset of necklaces. Each necklace is kept as it was read (e.g. from
/// a cycle) for display, while equality is on the multiset of classes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NecklaceMultiset {
    words: Vec<Vec<usize>>,
}

impl NecklaceMultiset {
    pub fn new(words: Vec<Vec<usize>>) -> Result<Self> {
        if words.iter().any(|w| w.is_empty() || w.contains(&0)) {
            return Err(Error::Parse(
                "necklaces must be nonempty over letters 1, 2, ...".into(),
            ));
        }
        Ok(NecklaceMultiset { words })
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    /// Canonical necklaces in sorted order.
    pub fn necklaces(&self) -> Vec<Necklace> {
        let mut out: Vec<Necklace> = self
            .words
            .iter()
            .map(|w| canonical_necklace(w).expect("nonempty"))
            .collect();
        out.sort();
        out
    }

    pub fn bead_count(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }

    /// `e[j-1]` beads carry letter `x_j`; no trailing zeros.
    pub fn evaluation(&self) -> Vec<usize> {
        let k = self.words.iter().flatten().copied().max().unwrap_or(0);
        let mut e = vec![0; k];
        for &x in self.words.iter().flatten() {
            e[x - 1] += 1;
        }
        e
    }

    pub fn cycle_structure(&self) -> Partition {
        Partition::from_parts(self.words.iter().map(Vec::len).collect())
    }
}

impl PartialEq for NecklaceMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.necklaces() == other.necklaces()
    }
}

impl Eq for NecklaceMultiset {}

impl fmt::Display for NecklaceMultiset {
    /// `(2,3)(2,3)(3)(3,1)(3,1,3,1,1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.words {
            write_cycle(f, w)?;
        }
        Ok(())
    }
}

/// A pair of subsets with equal associated partitions and the matching of
/// their composition parts: `from.composition()[j] == to.composition()[alpha[j]]`
/// (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferPlan {
    from: DescentSet,
    to: DescentSet,
    alpha: Vec<usize>,
}

impl TransferPlan {
    /// Picks the lexicographically least matching: each part of `from`, left
    /// to right, takes the leftmost unused part of `to` of the same size.
    pub fn new(from: DescentSet, to: DescentSet) -> Result<Self> {
        if from.n() != to.n() {
            return Err(Error::SizeMismatch {
                expected: from.n(),
                actual: to.n(),
            });
        }
        if from.associated_partition() != to.associated_partition() {
            return Err(Error::PartitionMismatch {
                from: from.to_string(),
                to: to.to_string(),
            });
        }
        let r = from.composition();
        let s = to.composition();
        let mut used = vec![false; s.parts().len()];
        let alpha = r
            .parts()
            .iter()
            .map(|&part| {
                let t = (0..used.len())
                    .find(|&t| !used[t] && s.parts()[t] == part)
                    .expect("equal partitions admit a matching");
                used[t] = true;
                t
            })
            .collect();
        Ok(TransferPlan { from, to, alpha })
    }

    pub fn from(&self) -> &DescentSet {
        &self.from
    }

    pub fn to(&self) -> &DescentSet {
        &self.to
    }

    /// 0-based: block `j` of `from` is relabelled with letter `alpha[j] + 1`.
    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn inverse(&self) -> TransferPlan {
        let mut inv = vec![0; self.alpha.len()];
        for (j, &t) in self.alpha.iter().enumerate() {
            inv[t] = j;
        }
        TransferPlan {
            from: self.to.clone(),
            to: self.from.clone(),
            alpha: inv,
        }
    }
}

/// Reads each cycle of `pi` (as listed by [`Permutation::to_cycles`]) as a
/// necklace, writing letter `x_{α(j)}` for every entry in block `j` of the
/// plan's source subset.
pub fn permutation_to_necklaces(pi: &Permutation, plan: &TransferPlan) -> Result<NecklaceMultiset> {
    let from = plan.from();
    if pi.n() != from.n() {
        return Err(Error::SizeMismatch {
            expected: from.n(),
            actual: pi.n(),
        });
    }
    let d = pi.descent_set();
    if !d.is_subset(from) {
        return Err(Error::DescentViolation {
            actual: d.to_string(),
            allowed: from.to_string(),
        });
    }
    let words = pi
        .to_cycles()
        .into_cycles()
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|v| plan.alpha()[from.block_of(v) - 1] + 1)
                .collect()
        })
        .collect();
    Ok(NecklaceMultiset { words })
}

/// Labels the beads `1..=n` in increasing order of their periodic sequences
/// and returns the permutation sending each bead's label to the label of the
/// next bead on its necklace.
///
/// Ties: equal sequences on different necklaces go by the necklaces' order
/// in [`NecklaceMultiset::necklaces`] (copies of one necklace by their
/// position in that list); equal sequences on one necklace go by offset in
/// its least rotation.
pub fn necklaces_to_permutation(m: &NecklaceMultiset, to: &DescentSet) -> Result<Permutation> {
    let evaluation = m.evaluation();
    let composition = to.composition();
    if evaluation != composition.parts() {
        return Err(Error::EvaluationMismatch {
            evaluation,
            composition: composition.parts().to_vec(),
        });
    }
    let necklaces = m.necklaces();
    let mut beads: Vec<(usize, usize)> = necklaces
        .iter()
        .enumerate()
        .flat_map(|(c, nk)| (0..nk.len()).map(move |o| (c, o)))
        .collect();
    beads.sort_by(|&(ca, oa), &(cb, ob)| {
        periodic_compare(necklaces[ca].word(), oa, necklaces[cb].word(), ob)
            .then(ca.cmp(&cb))
            .then(oa.cmp(&ob))
    });
    let mut offsets = Vec::with_capacity(necklaces.len());
    let mut total = 0;
    for nk in &necklaces {
        offsets.push(total);
        total += nk.len();
    }
    // label[offsets[c] + o] = rank of bead (c, o), 1-based
    let mut label = vec![0; total];
    for (rank, &(c, o)) in beads.iter().enumerate() {
        label[offsets[c] + o] = rank + 1;
    }
    let mut word = vec![0; total];
    for (c, nk) in necklaces.iter().enumerate() {
        let l = nk.len();
        for o in 0..l {
            word[label[offsets[c] + o] - 1] = label[offsets[c] + (o + 1) % l];
        }
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// The bijection `{π : D(π) ⊆ I} → {σ : D(σ) ⊆ J}` preserving cycle type.
pub fn gr_transfer(pi: &Permutation, from: &DescentSet, to: &DescentSet) -> Result<Permutation> {
    let plan = TransferPlan::new(from.clone(), to.clone())?;
    transfer_with_plan(pi, &plan)
}

pub fn transfer_with_plan(pi: &Permutation, plan: &TransferPlan) -> Result<Permutation> {
    let m = permutation_to_necklaces(pi, plan)?;
    necklaces_to_permutation(&m, plan.to())
}

/// Lyndon words (primitive necklace representatives) of length exactly `len`
/// over letters `1..=k`, in lexicographic order.
pub fn lyndon_words(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len == 0 || k == 0 {
        return out;
    }
    // FKM: successive prenecklaces, keeping those whose period is the length
    let mut a = vec![1; len];
    let mut p = 1;
    loop {
        if p == len {
            out.push(a.clone());
        }
        let Some(i) = (0..len).rev().find(|&i| a[i] < k) else {
            break;
        };
        a[i] += 1;
        for t in i + 1..len {
            a[t] = a[t - i - 1];
        }
        p = i + 1;
    }
    out
}

/// Counts multisets of primitive necklaces with cycle structure `lambda`
/// and evaluation `evaluation` (`evaluation[j-1]` beads of letter `x_j`) by
/// generating them.
pub fn count_necklace_multisets(evaluation: &[usize], lambda: &Partition) -> Result<u64> {
    NecklaceCounter::default().count(evaluation, lambda)
}

/// Reuses the per-(length, content) Lyndon word lists across calls.
#[derive(Debug, Default)]
pub struct NecklaceCounter {
    // (length, alphabet size) -> content -> number of Lyndon words
    by_content: HashMap<(usize, usize), HashMap<Vec<usize>, u64>>,
}

impl NecklaceCounter {
    fn table(&mut self, len: usize, k: usize) -> &HashMap<Vec<usize>, u64> {
        self.by_content.entry((len, k)).or_insert_with(|| {
            let mut table: HashMap<Vec<usize>, u64> = HashMap::new();
            for w in lyndon_words(len, k) {
                let mut content = vec![0; k];
                for x in w {
                    content[x - 1] += 1;
                }
                *table.entry(content).or_default() += 1;
            }
            table
        })
    }

    pub fn count(&mut self, evaluation: &[usize], lambda: &Partition) -> Result<u64> {
        let total: usize = evaluation.iter().sum();
        if total != lambda.n() {
            return Err(Error::SizeMismatch {
                expected: lambda.n(),
                actual: total,
            });
        }
        let k = evaluation.len();
        // Choose necklaces part by part (largest first); within equal parts
        // the choices are kept non-decreasing in (content, index) so every
        // multiset is produced once.
        let parts = lambda.parts().to_vec();
        let mut lists: HashMap<usize, Vec<(Vec<usize>, u64)>> = HashMap::new();
        for &l in &parts {
            lists.entry(l).or_insert_with(|| {
                let mut v: Vec<(Vec<usize>, u64)> = self
                    .table(l, k)
                    .iter()
                    .map(|(c, &cnt)| (c.clone(), cnt))
                    .collect();
                v.sort();
                v
            });
        }

        fn go(
            parts: &[usize],
            lists: &HashMap<usize, Vec<(Vec<usize>, u64)>>,
            remaining: &mut Vec<usize>,
            floor: Option<(usize, usize, u64)>,
        ) -> u64 {
            let Some((&l, rest)) = parts.split_first() else {
                return u64::from(remaining.iter().all(|&e| e == 0));
            };
            let list = &lists[&l];
            let (start_class, start_idx) = match floor {
                Some((fl, class, idx)) if fl == l => (class, idx),
                _ => (0, 0),
            };
            let mut total = 0;
            for (ci, (content, cnt)) in list.iter().enumerate().skip(start_class) {
                if content.iter().zip(remaining.iter()).any(|(c, r)| c > r) {
                    continue;
                }
                for (r, c) in remaining.iter_mut().zip(content) {
                    *r -= c;
                }
                let first = if ci == start_class { start_idx } else { 0 };
                for idx in first..*cnt {
                    total += go(rest, lists, remaining, Some((l, ci, idx)));
                }
                for (r, c) in remaining.iter_mut().zip(content) {
                    *r += c;
                }
            }
            total
        }

        let mut remaining = evaluation.to_vec();
        Ok(go(&parts, &lists, &mut remaining, None))
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
    fn canonical_rotation() {
        assert_eq!(
            canonical_necklace(&[3, 1, 3, 1, 1]).unwrap().word(),
            [1, 1, 3, 1, 3]
        );
        assert_eq!(canonical_necklace(&[4]).unwrap().word(), [4]);
        assert_eq!(
            canonical_necklace(&[2, 3]).unwrap(),
            canonical_necklace(&[3, 2]).unwrap()
        );
        assert!(canonical_necklace(&[]).is_err());
        assert!(!canonical_necklace(&[1, 2, 1, 2]).unwrap().is_primitive());
        assert!(canonical_necklace(&[1, 1, 2]).unwrap().is_primitive());
    }

    #[test]
    fn periodic_comparisons() {
        assert_eq!(periodic_compare(&[2, 3], 0, &[2, 3], 1), Ordering::Less);
        assert_eq!(periodic_compare(&[2, 3], 1, &[2, 3], 1), Ordering::Equal);
        let w = [3, 1, 3, 1, 1];
        // x3x1x3x1x1… against x3x1x1x3x1…
        assert_eq!(periodic_compare(&w, 0, &w, 2), Ordering::Greater);
        // x2x3x2x3… of one necklace equals the same reading of a copy
        assert_eq!(periodic_compare(&[2, 3], 0, &[2, 3, 2, 3], 2), Ordering::Equal);
    }

    #[test]
    fn lyndon_counts() {
        // binary Lyndon words by length: 2, 1, 2, 3, 6, 9, 18
        let counts: Vec<usize> = (1..=7).map(|l| lyndon_words(l, 2).len()).collect();
        assert_eq!(counts, [2, 1, 2, 3, 6, 9, 18]);
        assert_eq!(lyndon_words(3, 2), vec![vec![1, 1, 2], vec![1, 2, 2]]);
        assert_eq!(lyndon_words(4, 3).len(), 18);
    }

    #[test]
    fn transfer_plan_alpha() {
        let plan = TransferPlan::new(set(12, &[2, 8]), set(12, &[4, 6])).unwrap();
        assert_eq!(plan.alpha(), [1, 2, 0]);
        assert_eq!(plan.inverse().alpha(), [2, 0, 1]);
        let plan = TransferPlan::new(set(12, &[2, 8]), set(12, &[2, 6])).unwrap();
        assert_eq!(plan.alpha(), [0, 2, 1]);
        assert!(TransferPlan::new(set(12, &[2, 8]), set(12, &[3, 8])).is_err());
    }

    #[test]
    fn worked_necklace_example() {
        let pi = perm("3 4 1 2 5 9 11 12 6 7 8 10");
        let plan = TransferPlan::new(set(12, &[2, 8]), set(12, &[4, 6])).unwrap();
        let m = permutation_to_necklaces(&pi, &plan).unwrap();
        assert_eq!(m.to_string(), "(2,3)(2,3)(3)(3,1)(3,1,3,1,1)");
        assert_eq!(m.evaluation(), [4, 2, 6]);
        assert_eq!(m.cycle_structure(), pi.cycle_type());

        let sigma = necklaces_to_permutation(&m, &set(12, &[4, 6])).unwrap();
        assert_eq!(sigma, perm("3 7 8 9 10 11 1 2 4 5 6 12"));
        assert_eq!(sigma, perm("(5,10)(6,11)(12)(9,4)(8,2,7,1,3)"));
        assert_eq!(sigma.descent_set(), set(12, &[6]));

        let sigma2 = gr_transfer(&pi, &set(12, &[2, 8]), &set(12, &[2, 6])).unwrap();
        assert_eq!(sigma2, perm("7 8 5 9 10 11 1 2 3 4 6 12"));
        assert_eq!(sigma2, perm("(1,7)(2,8)(12)(11,6)(10,4,9,3,5)"));
    }

    #[test]
    fn transfer_errors() {
        let pi = perm("3 4 1 2 5 9 11 12 6 7 8 10");
        assert!(matches!(
            gr_transfer(&pi, &set(12, &[2]), &set(12, &[10])),
            Err(Error::DescentViolation { .. })
        ));
        assert!(matches!(
            gr_transfer(&pi, &set(12, &[2, 8]), &set(12, &[5, 8])),
            Err(Error::PartitionMismatch { .. })
        ));
        let m = NecklaceMultiset::new(vec![vec![1, 2]]).unwrap();
        assert!(matches!(
            necklaces_to_permutation(&m, &set(2, &[])),
            Err(Error::EvaluationMismatch { .. })
        ));
    }

    #[test]
    fn trivial_necklace_cases() {
        let id = Permutation::identity(5);
        let plan = TransferPlan::new(set(5, &[]), set(5, &[])).unwrap();
        let m = permutation_to_necklaces(&id, &plan).unwrap();
        assert_eq!(m.to_string(), "(1)(1)(1)(1)(1)");
        assert_eq!(necklaces_to_permutation(&m, &set(5, &[])).unwrap(), id);
    }

    #[test]
    fn necklace_counts() {
        // all letters distinct on one necklace of length n+1: n!
        for n in 1..=5 {
            let eval = vec![1; n + 1];
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(
                count_necklace_multisets(&eval, &Partition::from_parts(vec![n + 1])).unwrap(),
                fact
            );
        }
        assert_eq!(
            count_necklace_multisets(&[4, 1], &Partition::from_parts(vec![5])).unwrap(),
            1
        );
        // single beads: the multiset is forced
        assert_eq!(
            count_necklace_multisets(&[2, 3, 1], &Partition::from_parts(vec![1; 6])).unwrap(),
            1
        );
        // (x1,x1) is not primitive
        assert_eq!(
            count_necklace_multisets(&[2], &Partition::from_parts(vec![2])).unwrap(),
            0
        );
        assert!(count_necklace_multisets(&[2, 1], &Partition::from_parts(vec![2])).is_err());
    }
}
