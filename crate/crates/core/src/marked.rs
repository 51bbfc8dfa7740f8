//! Marked cycle words: the one-line word of an `n`-cycle with one entry
//! replaced by `0` (the set `T⁰_n`) or by `n+1` (the set `U_n`), and the
//! descent-preserving bijections from them onto `S_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{descent_set, parse_word, reverse_complement_word, write_spaced, DescentSet, Permutation};
use crate::phi::{phi, psi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MarkKind {
    /// The replaced entry is `0`.
    Zero,
    /// The replaced entry is `n + 1`.
    Top,
}

impl MarkKind {
    pub fn flipped(self) -> MarkKind {
        match self {
            MarkKind::Zero => MarkKind::Top,
            MarkKind::Top => MarkKind::Zero,
        }
    }

    fn mark_value(self, n: usize) -> usize {
        match self {
            MarkKind::Zero => 0,
            MarkKind::Top => n + 1,
        }
    }
}

/// An element of `T⁰_n` or `U_n`. Only constructible from a valid word, so
/// restoring the missing value always yields an `n`-cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedWord {
    word: Vec<usize>,
    marked_pos: usize,
    kind: MarkKind,
    missing: usize,
}

impl MarkedWord {
    pub fn new(word: Vec<usize>, kind: MarkKind) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mark = kind.mark_value(n);
        let marks: Vec<usize> = (0..n).filter(|&p| word[p] == mark).collect();
        let &[p] = marks.as_slice() else {
            return Err(Error::InvalidMarkedWord(format!(
                "expected exactly one {mark}, found {}",
                marks.len()
            )));
        };
        let mut seen = vec![false; n + 1];
        for (q, &v) in word.iter().enumerate() {
            if q == p {
                continue;
            }
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidMarkedWord(format!("bad entry {v}")));
            }
        }
        let missing = (1..=n).find(|&v| !seen[v]).expect("one value is missing");
        let mut restored = word.clone();
        restored[p] = missing;
        if !Permutation::from_word_unchecked(restored).is_cyclic() {
            return Err(Error::InvalidMarkedWord(
                "restoring the missing value does not give an n-cycle".into(),
            ));
        }
        Ok(MarkedWord {
            word,
            marked_pos: p + 1,
            kind,
            missing,
        })
    }

    /// Replaces `pi(k)` by the mark in the one-line word of the `n`-cycle `pi`.
    pub fn from_cycle(pi: &Permutation, k: usize, kind: MarkKind) -> Result<Self> {
        let n = pi.n();
        if !pi.is_cyclic() {
            return Err(Error::NotCyclic { n });
        }
        if k == 0 || k > n {
            return Err(Error::OutOfRange { value: k, max: n });
        }
        let mut word = pi.word().to_vec();
        let missing = std::mem::replace(&mut word[k - 1], kind.mark_value(n));
        Ok(MarkedWord {
            word,
            marked_pos: k,
            kind,
            missing,
        })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// 1-based position of the mark.
    pub fn marked_pos(&self) -> usize {
        self.marked_pos
    }

    pub fn kind(&self) -> MarkKind {
        self.kind
    }

    pub fn missing_value(&self) -> usize {
        self.missing
    }

    /// The `n`-cycle this word was made from.
    pub fn underlying(&self) -> Permutation {
        let mut w = self.word.clone();
        w[self.marked_pos - 1] = self.missing;
        Permutation::from_word_unchecked(w)
    }

    pub fn descent_set(&self) -> DescentSet {
        descent_set(&self.word)
    }

    /// Positional reversal and `j ↦ n+1-j`; swaps `T⁰_n` and `U_n`.
    pub fn reverse_complement(&self) -> MarkedWord {
        let n = self.n();
        MarkedWord {
            word: reverse_complement_word(&self.word, n),
            marked_pos: n + 1 - self.marked_pos,
            kind: self.kind.flipped(),
            missing: n + 1 - self.missing,
        }
    }
}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_spaced(f, &self.word)
    }
}

impl FromStr for MarkedWord {
    type Err = Error;

    /// The kind is inferred: a `0` entry means `T⁰_n`, otherwise `U_n`.
    fn from_str(s: &str) -> Result<Self> {
        let word = parse_word(s)?;
        let kind = if word.contains(&0) {
            MarkKind::Zero
        } else {
            MarkKind::Top
        };
        MarkedWord::new(word, kind)
    }
}

fn expect_kind(tau: &MarkedWord, kind: MarkKind) -> Result<()> {
    if tau.kind != kind {
        return Err(Error::InvalidMarkedWord(format!(
            "expected a {kind:?}-marked word"
        )));
    }
    Ok(())
}

/// `U_n → C_{n+1}`: write the underlying cycle as `(t_1,…,t_{n-1},k)` where
/// `k` is the marked position, and append `n+1`.
pub fn u_to_cycle(tau: &MarkedWord) -> Result<Permutation> {
    expect_kind(tau, MarkKind::Top)?;
    let n = tau.n();
    let mut cycle = tau.underlying().cycle_ending_with(tau.marked_pos)?;
    cycle.push(n + 1);
    Ok(single_cycle(&cycle))
}

/// Inverse of [`u_to_cycle`].
pub fn cycle_to_u(pi: &Permutation) -> Result<MarkedWord> {
    let m = pi.n();
    if m < 2 {
        return Err(Error::Empty);
    }
    let n = m - 1;
    let mut cycle = pi.cycle_ending_with(m)?;
    cycle.pop();
    let k = *cycle.last().expect("n >= 1");
    let underlying = single_cycle(&cycle);
    MarkedWord::from_cycle(&underlying, k, MarkKind::Top).inspect(|tau| {
        debug_assert_eq!(tau.n(), n);
    })
}

fn single_cycle(cycle: &[usize]) -> Permutation {
    let mut word = vec![0; cycle.len()];
    for (k, &v) in cycle.iter().enumerate() {
        word[v - 1] = cycle[(k + 1) % cycle.len()];
    }
    Permutation::from_word_unchecked(word)
}

/// `U_n → S_n` with `D(τ) = D(σ)` and `σ(k) = n` for the marked position `k`.
pub fn phi_u(tau: &MarkedWord) -> Result<Permutation> {
    phi(&u_to_cycle(tau)?)
}

pub fn psi_u(sigma: &Permutation) -> Result<MarkedWord> {
    cycle_to_u(&psi(sigma)?)
}

/// `T⁰_n → S_n` with `D(τ) = D(σ)` and `σ(k) = 1` for the marked position
/// `k`; conjugate of [`phi_u`] by reverse-complement.
pub fn phi_t0(tau: &MarkedWord) -> Result<Permutation> {
    expect_kind(tau, MarkKind::Zero)?;
    Ok(phi_u(&tau.reverse_complement())?.reverse_complement())
}

pub fn psi_t0(sigma: &Permutation) -> Result<MarkedWord> {
    Ok(psi_u(&sigma.reverse_complement())?.reverse_complement())
}

/// `C_n → {σ : σ(m) = 1}`: zero out `π(m)` and apply [`phi_t0`]. Preserves
/// descents away from `m-1` and `m`.
pub fn cyclesu_map(pi: &Permutation, m: usize) -> Result<Permutation> {
    phi_t0(&MarkedWord::from_cycle(pi, m, MarkKind::Zero)?)
}

/// Inverse of [`cyclesu_map`]; requires `σ(m) = 1`.
pub fn cyclesu_inverse(sigma: &Permutation, m: usize) -> Result<Permutation> {
    let n = sigma.n();
    if m == 0 || m > n {
        return Err(Error::OutOfRange { value: m, max: n });
    }
    if sigma.at(m) != 1 {
        return Err(Error::InvalidMarkedWord(format!("sigma({m}) is not 1")));
    }
    let tau = psi_t0(sigma)?;
    if tau.marked_pos != m {
        return Err(Error::Internal(format!(
            "inverse put the mark at {} instead of {m}",
            tau.marked_pos
        )));
    }
    Ok(tau.underlying())
}

/// `[n-1] \ {m-1, m}`: the positions whose descents [`cyclesu_map`] keeps.
pub fn cyclesu_window(n: usize, m: usize) -> DescentSet {
    DescentSet::new(
        n,
        (1..n).filter(|&i| i + 1 != m && i != m).collect(),
    )
    .expect("elements lie in [n-1]")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> MarkedWord {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        let tau = word("4 3 1");
        assert_eq!(tau.kind(), MarkKind::Top);
        assert_eq!((tau.marked_pos(), tau.missing_value()), (1, 2));
        assert_eq!(tau.underlying(), perm("2 3 1"));
        // 321 restored is not a 3-cycle
        assert!("0 2 1".parse::<MarkedWord>().is_err());
        assert!("0 0 1".parse::<MarkedWord>().is_err());
        assert!("1 2 3".parse::<MarkedWord>().is_err());
        assert!(MarkedWord::new(vec![4, 3, 1], MarkKind::Zero).is_err());
        assert!(MarkedWord::from_cycle(&perm("2 1 3"), 1, MarkKind::Zero).is_err());
    }

    #[test]
    fn reverse_complement_swaps_kinds() {
        let tau = word("0 3 1");
        let rc = tau.reverse_complement();
        assert_eq!(rc.word(), [3, 1, 4]);
        assert_eq!(rc.kind(), MarkKind::Top);
        assert_eq!(rc, word("3 1 4"));
        assert_eq!(rc.reverse_complement(), tau);
    }

    #[test]
    fn u_maps() {
        let tau = word("4 3 1");
        assert_eq!(u_to_cycle(&tau).unwrap(), perm("(2,3,1,4)"));
        assert_eq!(phi_u(&tau).unwrap(), perm("3 2 1"));
        assert_eq!(cycle_to_u(&perm("(2,3,1,4)")).unwrap(), tau);
        assert_eq!(psi_u(&perm("3 2 1")).unwrap(), tau);
        // n+1 last, ascending prefix: the long cycle
        assert_eq!(u_to_cycle(&word("2 3 4")).unwrap(), Permutation::long_cycle(4));
        assert_eq!(phi_u(&word("2 3 4")).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn t0_maps() {
        assert_eq!(phi_t0(&word("0 1 2")).unwrap(), perm("1 2 3"));
        assert_eq!(phi_t0(&word("3 1 0")).unwrap(), perm("3 2 1"));
        assert!(phi_t0(&word("4 3 1")).is_err());
        assert_eq!(psi_t0(&perm("3 2 1")).unwrap(), word("3 1 0"));
    }

    #[test]
    fn cyclesu_example() {
        let pi = perm("2 3 4 1");
        let sigma = cyclesu_map(&pi, 2).unwrap();
        assert_eq!(sigma.at(2), 1);
        let j = cyclesu_window(4, 2);
        assert_eq!(j.elements(), [3]);
        assert_eq!(sigma.descent_set().intersect(&j), pi.descent_set().intersect(&j));
        assert_eq!(cyclesu_inverse(&sigma, 2).unwrap(), pi);
        assert!(cyclesu_map(&pi, 5).is_err());
        assert!(cyclesu_map(&perm("2 1 3 4"), 1).is_err());
    }

    #[test]
    fn size_one() {
        let tau = word("2");
        assert_eq!(phi_u(&tau).unwrap(), Permutation::identity(1));
        assert_eq!(phi_t0(&word("0")).unwrap(), Permutation::identity(1));
    }
}
