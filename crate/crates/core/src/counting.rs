//! Enumeration of the permutation families, descent distributions, and the
//! multinomial / inclusion-exclusion descent-class counts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::marked::{MarkKind, MarkedWord};
use crate::perm::{descent_set, DescentSet, Permutation};

/// Permutations of `[n]` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            next: Some((1..=n).collect()),
        }
    }
}

fn advance(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("a[i] qualifies");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(cur)
    }
}

pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    Permutations::new(n).map(Permutation::from_word_unchecked)
}

/// `C_n`, generated as the cycles `(t_1, …, t_{n-1}, n)` for every ordering
/// `t` of `[n-1]`.
pub fn cyclic_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    Permutations::new(n.saturating_sub(1)).map(move |t| {
        let mut word = vec![0; n];
        let mut prev = n;
        for &v in &t {
            word[prev - 1] = v;
            prev = v;
        }
        word[prev - 1] = n;
        Permutation::from_word_unchecked(word)
    })
}

pub fn derangements(n: usize) -> impl Iterator<Item = Permutation> {
    permutations(n).filter(Permutation::is_derangement)
}

/// `T⁰_n` (`Zero`) or `U_n` (`Top`).
pub fn marked_words(n: usize, kind: MarkKind) -> impl Iterator<Item = MarkedWord> {
    cyclic_permutations(n).flat_map(move |pi| {
        (1..=n).map(move |k| MarkedWord::from_cycle(&pi, k, kind).expect("pi is an n-cycle"))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `S_n`.
    S,
    /// `C_n`.
    C,
    /// `T⁰_n`.
    T0,
    /// `U_n`.
    U,
    Derangements,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::S, Family::C, Family::T0, Family::U, Family::Derangements];

    pub fn cardinality(self, n: usize) -> BigUint {
        match self {
            Family::S | Family::T0 | Family::U => factorial(n),
            Family::C => factorial(n.saturating_sub(1)),
            Family::Derangements => derangement_number(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::C => "C",
            Family::T0 => "T0",
            Family::U => "U",
            Family::Derangements => "derangements",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(Family::S),
            "c" => Ok(Family::C),
            "t0" => Ok(Family::T0),
            "u" => Ok(Family::U),
            "d" | "derangements" => Ok(Family::Derangements),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// The words of a family in one-line notation (marked words include their
/// `0` or `n+1`).
pub fn iter_family(family: Family, n: usize) -> Box<dyn Iterator<Item = Vec<usize>> + Send> {
    match family {
        Family::S => Box::new(permutations(n).map(Permutation::into_word)),
        Family::C => Box::new(cyclic_permutations(n).map(Permutation::into_word)),
        Family::Derangements => Box::new(derangements(n).map(Permutation::into_word)),
        Family::T0 => Box::new(marked_words(n, MarkKind::Zero).map(|t| t.word().to_vec())),
        Family::U => Box::new(marked_words(n, MarkKind::Top).map(|t| t.word().to_vec())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistributionSource {
    Family(Family),
    /// `C_{n+1}` counted by `D(π) ∩ [n-1]`.
    CyclicPrefix,
}

/// Number of family members per descent set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentDistribution {
    pub n: usize,
    pub source: DistributionSource,
    pub counts: BTreeMap<DescentSet, u64>,
}

impl DescentDistribution {
    pub fn of_family(family: Family, n: usize) -> Self {
        let mut counts = BTreeMap::new();
        for w in iter_family(family, n) {
            *counts.entry(descent_set(&w)).or_insert(0) += 1;
        }
        DescentDistribution {
            n,
            source: DistributionSource::Family(family),
            counts,
        }
    }

    pub fn cyclic_prefix(n: usize) -> Self {
        let mut counts = BTreeMap::new();
        for pi in cyclic_permutations(n + 1) {
            *counts.entry(pi.descent_set().truncate(n)).or_insert(0) += 1;
        }
        DescentDistribution {
            n,
            source: DistributionSource::CyclicPrefix,
            counts,
        }
    }

    pub fn get(&self, set: &DescentSet) -> u64 {
        self.counts.get(set).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Same counts, ignoring the source tag; absent keys count as zero.
    pub fn same_counts(&self, other: &DescentDistribution) -> bool {
        self.n == other.n
            && self
                .counts
                .keys()
                .chain(other.counts.keys())
                .all(|k| self.get(k) == other.get(k))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `D_n = n·D_{n-1} + (-1)^n`.
pub fn derangement_number(n: usize) -> BigUint {
    let mut d = BigInt::one();
    for k in 1..=n {
        d = d * BigInt::from(k) + if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    }
    d.to_biguint().expect("nonnegative")
}

/// `|{σ ∈ S_n : D(σ) ⊆ I}|`: the multinomial coefficient over the
/// composition of `I`.
pub fn beta(n: usize, set: &DescentSet) -> Result<BigUint> {
    check_ambient(n, set)?;
    let denom = set
        .composition()
        .parts()
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * factorial(p));
    Ok(factorial(n) / denom)
}

/// `|{σ ∈ S_n : D(σ) = I}| = Σ_{J ⊆ I} (-1)^{|I \ J|} β(n, J)`.
pub fn alpha(n: usize, set: &DescentSet) -> Result<BigUint> {
    check_ambient(n, set)?;
    let mut total = BigInt::zero();
    for sub in set.subsets() {
        let term = BigInt::from(beta(n, &sub)?);
        if (set.len() - sub.len()).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    if total.is_negative() {
        return Err(Error::Internal("negative inclusion-exclusion count".into()));
    }
    Ok(total.to_biguint().expect("checked nonnegative"))
}

fn check_ambient(n: usize, set: &DescentSet) -> Result<()> {
    if set.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: set.n(),
        });
    }
    Ok(())
}
