//! Exhaustive verification suites. Each suite checks one statement over a
//! whole family at a fixed size and reports every counterexample instead of
//! stopping at the first.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{
    alpha, beta, cyclic_permutations, factorial, marked_words, permutations, DescentDistribution, Family,
};
use crate::error::{Error, Result};
use crate::marked::{cyclesu_inverse, cyclesu_map, cyclesu_window, phi_t0, phi_u, psi_t0, psi_u, MarkKind};
use crate::necklace::{transfer_with_plan, NecklaceCounter, TransferPlan};
use crate::perm::{dotted_word, DescentSet, Partition, Permutation};
use crate::phi::{check_lemmas, phi, phi_cycles, phi_traced, psi, psi_traced};

pub const SUITES: [&str; 12] = [
    "bij_roundtrip",
    "descents",
    "table1",
    "examples",
    "cor_cycles",
    "cor_biju",
    "cor_elishift",
    "cor_cyclesu",
    "thm_gr",
    "prop_subsets",
    "lemmas_trace",
    "independence",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `suite n=… checked=… failures=… (… ms)`.
    pub fn summary(&self) -> String {
        format!(
            "{} n={} checked={} failures={} ({} ms)",
            self.suite,
            self.n,
            self.checked,
            self.failures.len(),
            self.millis
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

/// Runs suite `name` at size `n`. Errors only for an unknown suite name or
/// a thread pool that cannot be built; counterexamples go in the report.
pub fn verify_suite(name: &str, n: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    let run = || -> Result<(u64, Vec<Failure>)> {
        Ok(match name {
            "bij_roundtrip" => bij_roundtrip(n),
            "descents" => descents(n),
            "table1" => table1(),
            "examples" => examples(),
            "cor_cycles" => cor_cycles(n),
            "cor_biju" => cor_biju(n),
            "cor_elishift" => cor_elishift(n),
            "cor_cyclesu" => cor_cyclesu(n),
            "thm_gr" => thm_gr(n),
            "prop_subsets" => prop_subsets(n),
            "lemmas_trace" => lemmas_trace(n),
            "independence" => independence(n),
            other => return Err(Error::UnknownSuite(other.to_string())),
        })
    };
    if n == 0 && !matches!(name, "table1" | "examples") {
        return Err(Error::Empty);
    }
    let start = Instant::now();
    let (checked, failures) = match options.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let n = match name {
        "table1" => 4,
        _ => n,
    };
    Ok(VerificationReport {
        suite: name.to_string(),
        n,
        checked,
        failures,
        millis: start.elapsed().as_millis() as u64,
    })
}

fn fail(input: impl ToString, expected: impl ToString, actual: impl ToString) -> Failure {
    Failure {
        input: input.to_string(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn check<T: PartialEq + ToString>(out: &mut Vec<Failure>, input: &dyn ToString, what: &str, expected: T, actual: T) {
    if expected != actual {
        out.push(fail(
            format!("{} [{what}]", input.to_string()),
            expected.to_string(),
            actual.to_string(),
        ));
    }
}

fn display<T: std::fmt::Display, E: std::fmt::Display>(r: &std::result::Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn injectivity<T: std::hash::Hash + Eq + std::fmt::Display>(
    out: &mut Vec<Failure>,
    what: &str,
    images: impl IntoIterator<Item = T>,
    expected_size: usize,
) {
    let set: HashSet<T> = images.into_iter().collect();
    if set.len() != expected_size {
        out.push(fail(
            format!("[{what}] image size"),
            expected_size,
            set.len(),
        ));
    }
}

fn bij_roundtrip(n: usize) -> (u64, Vec<Failure>) {
    let inputs: Vec<Permutation> = cyclic_permutations(n + 1).collect();
    let results: Vec<(Option<Permutation>, Vec<Failure>)> = inputs
        .par_iter()
        .map(|pi| {
            let mut f = Vec::new();
            let sigma = phi(pi);
            let back = sigma.as_ref().map_err(Clone::clone).and_then(psi);
            if back.as_ref() != Ok(pi) {
                f.push(fail(pi, pi, display(&back)));
            }
            (sigma.ok(), f)
        })
        .collect();
    let mut failures = Vec::new();
    let mut images = Vec::with_capacity(inputs.len());
    for (img, f) in results {
        failures.extend(f);
        images.extend(img);
    }
    let expected = factorial(n);
    if BigUint::from(inputs.len()) != expected {
        failures.push(fail("|C_{n+1}|", &expected, inputs.len()));
    }
    injectivity(&mut failures, "phi", images, inputs.len());
    (inputs.len() as u64, failures)
}

fn descents(n: usize) -> (u64, Vec<Failure>) {
    let inputs: Vec<Permutation> = cyclic_permutations(n + 1).collect();
    let failures: Vec<Failure> = inputs
        .par_iter()
        .flat_map_iter(|pi| {
            let mut f = Vec::new();
            match phi(pi) {
                Ok(sigma) => {
                    check(&mut f, pi, "descents", pi.descent_set().truncate(n), sigma.descent_set());
                    check(&mut f, pi, "position of max", pi.position_of(n + 1), sigma.position_of(n));
                }
                Err(e) => f.push(fail(pi, "phi image", format!("error: {e}"))),
            }
            f
        })
        .collect();
    (inputs.len() as u64, failures)
}

/// Every `π ∈ C_5` as `(cycle form, one-line, φ(π) one-line, D(φ(π)))`,
/// grouped by descent set.
pub const TABLE1: [(&str, &str, &str, &str); 24] = [
    ("(1,2,3,4,5)", "23451", "1234", "{}"),
    ("(2,1,3,4,5)", "31452", "2134", "{1}"),
    ("(3,2,1,4,5)", "41253", "3124", "{1}"),
    ("(4,3,2,1,5)", "51234", "4123", "{1}"),
    ("(1,3,2,4,5)", "34251", "1324", "{2}"),
    ("(1,4,3,2,5)", "45231", "1423", "{2}"),
    ("(3,1,2,4,5)", "24153", "2314", "{2}"),
    ("(3,1,4,2,5)", "45123", "3412", "{2}"),
    ("(4,3,1,2,5)", "25134", "2413", "{2}"),
    ("(1,2,4,3,5)", "24531", "1243", "{3}"),
    ("(2,4,1,3,5)", "34512", "1342", "{3}"),
    ("(4,1,2,3,5)", "23514", "2341", "{3}"),
    ("(2,3,1,4,5)", "43152", "3214", "{1,2}"),
    ("(2,4,3,1,5)", "54132", "4213", "{1,2}"),
    ("(4,2,3,1,5)", "53124", "4312", "{1,2}"),
    ("(1,4,2,3,5)", "43521", "3241", "{1,3}"),
    ("(2,1,4,3,5)", "41532", "2143", "{1,3}"),
    ("(2,3,4,1,5)", "53412", "4231", "{1,3}"),
    ("(3,4,2,1,5)", "51423", "4132", "{1,3}"),
    ("(4,2,1,3,5)", "31524", "3142", "{1,3}"),
    ("(1,3,4,2,5)", "35421", "1432", "{2,3}"),
    ("(3,4,1,2,5)", "25413", "2431", "{2,3}"),
    ("(4,1,3,2,5)", "35214", "3421", "{2,3}"),
    ("(3,2,4,1,5)", "54213", "4321", "{1,2,3}"),
];

fn digits(s: &str) -> String {
    s.chars().map(String::from).collect::<Vec<_>>().join(" ")
}

fn table1() -> (u64, Vec<Failure>) {
    let mut f = Vec::new();
    let mut seen = HashSet::new();
    for (cycle, one_line, image, d) in TABLE1 {
        let pi: Permutation = match cycle.parse() {
            Ok(p) => p,
            Err(e) => {
                f.push(fail(cycle, "a permutation", e));
                continue;
            }
        };
        check(&mut f, &cycle, "one-line", digits(one_line), pi.to_string());
        let sigma = phi(&pi);
        check(&mut f, &cycle, "phi", digits(image), display(&sigma));
        check(&mut f, &cycle, "D(pi)", d.to_string(), pi.descent_set().truncate(4).to_string());
        if let Ok(s) = &sigma {
            check(&mut f, &cycle, "D(sigma)", d.to_string(), s.descent_set().to_string());
        }
        seen.insert(pi);
    }
    let all: HashSet<Permutation> = cyclic_permutations(5).collect();
    check(&mut f, &"table rows", "cover C_5", true, seen == all);
    (TABLE1.len() as u64, f)
}

pub const EXAMPLE_PHI: [(&str, &str, &str); 2] = [
    (
        "(11,4,10,1,7,16,9,3,5,12,20,2,6,14,18,8,13,19,15,17,21)",
        "(11,4,9,3,5)(16,10,1,7,15)(20,2,6,13,18,8,12,19,14,17)",
        "7 6 5 9 11 13 15 12 3 1 4 19 18 17 16 10 20 8 14 2",
    ),
    (
        "(2,9,17,6,11,19,7,13,12,15,8,14,1,4,5,10,18,3,16,20)",
        "(1)(4)(17,6,10)(19,8,13,12,15,9,14,2,5,7,11,18,3,16)",
        "1 5 16 4 7 10 11 13 14 17 18 15 12 2 9 19 6 3 8",
    ),
];

/// The images above with descents marked.
pub const EXAMPLE_PHI_DOTTED: [&str; 2] = [
    "7 · 6 · 5 9 11 13 15 · 12 · 3 · 1 4 19 · 18 · 17 · 16 · 10 20 · 8 14 · 2",
    "1 5 16 · 4 7 10 11 13 14 17 18 · 15 · 12 · 2 9 19 · 6 · 3 8",
];

pub const EXAMPLE_PHI_SWITCHES: [&[(usize, usize)]; 2] = [
    &[(7, 6), (1, 2), (6, 5), (2, 3), (10, 9), (12, 13), (13, 14), (6, 7), (2, 1), (14, 15)],
    &[(2, 1), (9, 8), (8, 7), (7, 6), (6, 5), (5, 4), (11, 10), (7, 6)],
];

pub const EXAMPLE_PSI_SWITCHES: [&[(usize, usize)]; 2] = [
    &[(15, 14), (14, 13), (7, 6), (1, 2), (13, 12), (5, 6), (3, 2), (9, 10), (6, 7), (2, 1)],
    &[(10, 11), (6, 7), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (1, 2)],
];

/// `(π, I, J, σ)` transfers of the 12-element example.
pub const EXAMPLE_TRANSFERS: [(&str, &str, &str, &str); 2] = [
    ("3 4 1 2 5 9 11 12 6 7 8 10", "2,8", "4,6", "3 7 8 9 10 11 1 2 4 5 6 12"),
    ("3 4 1 2 5 9 11 12 6 7 8 10", "2,8", "2,6", "7 8 5 9 10 11 1 2 3 4 6 12"),
];

fn examples() -> (u64, Vec<Failure>) {
    let mut f = Vec::new();
    let mut checked = 0;
    for (k, (input, cycles, one_line)) in EXAMPLE_PHI.iter().enumerate() {
        checked += 1;
        let pi: Permutation = input.parse().expect("embedded example");
        check(&mut f, input, "phi cycles", cycles.to_string(), display(&phi_cycles(&pi)));
        check(&mut f, input, "phi one-line", one_line.to_string(), display(&phi(&pi)));
        check(
            &mut f,
            input,
            "phi dotted",
            EXAMPLE_PHI_DOTTED[k].to_string(),
            phi(&pi).map(|s| dotted_word(s.word())).unwrap_or_default(),
        );
        match phi_traced(&pi) {
            Ok((_, t)) => check(
                &mut f,
                input,
                "phi switches",
                format!("{:?}", EXAMPLE_PHI_SWITCHES[k]),
                format!("{:?}", t.pairs()),
            ),
            Err(e) => f.push(fail(input, "trace", e)),
        }
        let sigma: Permutation = cycles.parse().expect("embedded example");
        check(&mut f, cycles, "psi", pi.to_string(), display(&psi(&sigma)));
        match psi_traced(&sigma) {
            Ok((_, t)) => check(
                &mut f,
                cycles,
                "psi switches",
                format!("{:?}", EXAMPLE_PSI_SWITCHES[k]),
                format!("{:?}", t.pairs()),
            ),
            Err(e) => f.push(fail(cycles, "trace", e)),
        }
    }
    for (p, from, to, expected) in EXAMPLE_TRANSFERS {
        checked += 1;
        let pi: Permutation = p.parse().expect("embedded example");
        let from = DescentSet::parse(from, pi.n()).expect("embedded example");
        let to = DescentSet::parse(to, pi.n()).expect("embedded example");
        let got = crate::necklace::gr_transfer(&pi, &from, &to);
        check(&mut f, &format!("{p} {from}->{to}"), "transfer", expected.to_string(), display(&got));
    }
    (checked, f)
}

fn cor_cycles(n: usize) -> (u64, Vec<Failure>) {
    let cyc = DescentDistribution::cyclic_prefix(n);
    let sym = DescentDistribution::of_family(Family::S, n);
    let mut f = Vec::new();
    let mut checked = 0;
    for i in DescentSet::all(n) {
        checked += 1;
        let a = alpha(n, &i).expect("same ambient size");
        check(&mut f, &i, "C_{n+1} prefix vs alpha", a.to_string(), cyc.get(&i).to_string());
        check(&mut f, &i, "S_n vs alpha", a.to_string(), sym.get(&i).to_string());
    }
    (checked, f)
}

fn cor_biju(n: usize) -> (u64, Vec<Failure>) {
    let inputs: Vec<_> = marked_words(n, MarkKind::Top).collect();
    let results: Vec<(Option<Permutation>, Vec<Failure>)> = inputs
        .par_iter()
        .map(|tau| {
            let mut f = Vec::new();
            let sigma = match phi_u(tau) {
                Ok(s) => s,
                Err(e) => return (None, vec![fail(tau, "image", e)]),
            };
            check(&mut f, tau, "descents", tau.descent_set(), sigma.descent_set());
            check(&mut f, tau, "sigma(k)", n, sigma.at(tau.marked_pos()));
            check(&mut f, tau, "inverse", tau.to_string(), display(&psi_u(&sigma)));
            (Some(sigma), f)
        })
        .collect();
    collect_bijection(n, inputs.len(), results, "phi_U")
}

fn collect_bijection(
    n: usize,
    count: usize,
    results: Vec<(Option<Permutation>, Vec<Failure>)>,
    what: &str,
) -> (u64, Vec<Failure>) {
    let mut failures = Vec::new();
    let mut images = Vec::with_capacity(count);
    for (img, f) in results {
        failures.extend(f);
        images.extend(img);
    }
    if BigUint::from(count) != factorial(n) {
        failures.push(fail(format!("[{what}] domain size"), factorial(n), count));
    }
    injectivity(&mut failures, what, images, count);
    (count as u64, failures)
}

fn cor_elishift(n: usize) -> (u64, Vec<Failure>) {
    let inputs: Vec<_> = marked_words(n, MarkKind::Zero).collect();
    let results: Vec<(Option<Permutation>, Vec<Failure>)> = inputs
        .par_iter()
        .map(|tau| {
            let mut f = Vec::new();
            let k = tau.marked_pos();
            let d = tau.descent_set();
            if k > 1 && !d.contains(k - 1) {
                f.push(fail(tau, format!("{} in D(tau)", k - 1), &d));
            }
            if d.contains(k) {
                f.push(fail(tau, format!("{k} not in D(tau)"), &d));
            }
            let sigma = match phi_t0(tau) {
                Ok(s) => s,
                Err(e) => return (None, vec![fail(tau, "image", e)]),
            };
            check(&mut f, tau, "descents", d, sigma.descent_set());
            check(&mut f, tau, "sigma(k)", 1, sigma.at(k));
            check(&mut f, tau, "inverse", tau.to_string(), display(&psi_t0(&sigma)));
            (Some(sigma), f)
        })
        .collect();
    let (checked, mut failures) = collect_bijection(n, inputs.len(), results, "phi_T0");
    let t0 = DescentDistribution::of_family(Family::T0, n);
    let s = DescentDistribution::of_family(Family::S, n);
    for i in DescentSet::all(n) {
        check(&mut failures, &i, "T0 vs S distribution", s.get(&i), t0.get(&i));
    }
    (checked, failures)
}

fn cor_cyclesu(n: usize) -> (u64, Vec<Failure>) {
    let cycles: Vec<Permutation> = cyclic_permutations(n).collect();
    let all: Vec<Permutation> = permutations(n).collect();
    let per_m: Vec<(u64, Vec<Failure>)> = (1..=n)
        .into_par_iter()
        .map(|m| {
            let mut f = Vec::new();
            let window = cyclesu_window(n, m);
            let mut images = Vec::with_capacity(cycles.len());
            let mut lhs: BTreeMap<DescentSet, u64> = BTreeMap::new();
            for pi in &cycles {
                let input = format!("{pi} m={m}");
                *lhs.entry(pi.descent_set().intersect(&window)).or_default() += 1;
                let sigma = match cyclesu_map(pi, m) {
                    Ok(s) => s,
                    Err(e) => {
                        f.push(fail(&input, "image", e));
                        continue;
                    }
                };
                check(&mut f, &input, "sigma(m)", 1, sigma.at(m));
                check(
                    &mut f,
                    &input,
                    "descents on J",
                    pi.descent_set().intersect(&window),
                    sigma.descent_set().intersect(&window),
                );
                check(&mut f, &input, "inverse", pi.to_string(), display(&cyclesu_inverse(&sigma, m)));
                images.push(sigma);
            }
            injectivity(&mut f, &format!("cyclesu m={m}"), images, cycles.len());
            let mut rhs: BTreeMap<DescentSet, u64> = BTreeMap::new();
            for sigma in all.iter().filter(|s| s.at(m) == 1) {
                *rhs.entry(sigma.descent_set().intersect(&window)).or_default() += 1;
            }
            let mut checked = 0;
            for i in window.subsets() {
                checked += 1;
                check(
                    &mut f,
                    &format!("m={m} I={i}"),
                    "cardinalities",
                    lhs.get(&i).copied().unwrap_or(0),
                    rhs.get(&i).copied().unwrap_or(0),
                );
            }
            (checked + cycles.len() as u64, f)
        })
        .collect();
    per_m.into_iter().fold((0, Vec::new()), |(c, mut f), (c2, f2)| {
        f.extend(f2);
        (c + c2, f)
    })
}

fn thm_gr(n: usize) -> (u64, Vec<Failure>) {
    // permutation side: counts by (cycle type, descent mask)
    let mut by_type: HashMap<Partition, HashMap<u64, u64>> = HashMap::new();
    for p in permutations(n) {
        *by_type
            .entry(p.cycle_type())
            .or_default()
            .entry(p.descent_set().mask())
            .or_default() += 1;
    }
    let partitions = Partition::all(n);
    let cases: Vec<(Partition, DescentSet)> = partitions
        .iter()
        .flat_map(|l| DescentSet::all(n).map(move |i| (l.clone(), i)))
        .collect();
    let failures: Vec<Failure> = cases
        .par_iter()
        .map_init(NecklaceCounter::default, |counter, (lambda, i)| {
            let mask = i.mask();
            let perms: u64 = by_type
                .get(lambda)
                .map(|m| m.iter().filter(|(d, _)| *d & !mask == 0).map(|(_, c)| c).sum())
                .unwrap_or(0);
            let necklaces = counter.count(i.composition().parts(), lambda);
            let input = format!("lambda={lambda} I={i}");
            match necklaces {
                Ok(c) if c == perms => None,
                other => Some(fail(input, perms, display(&other))),
            }
        })
        .flatten()
        .collect();
    (cases.len() as u64, failures)
}

fn prop_subsets(n: usize) -> (u64, Vec<Failure>) {
    let all: Vec<(Permutation, u64)> = permutations(n)
        .map(|p| {
            let mask = p.descent_set().mask();
            (p, mask)
        })
        .collect();
    let mut classes: BTreeMap<Partition, Vec<DescentSet>> = BTreeMap::new();
    for i in DescentSet::all(n) {
        classes.entry(i.associated_partition()).or_default().push(i);
    }
    let pairs: Vec<(DescentSet, DescentSet)> = classes
        .values()
        .flat_map(|c| c.iter().flat_map(move |i| c.iter().map(move |j| (i.clone(), j.clone()))))
        .collect();
    let results: Vec<(u64, Vec<Failure>)> = pairs
        .par_iter()
        .map(|(i, j)| {
            let mut f = Vec::new();
            let plan = TransferPlan::new(i.clone(), j.clone()).expect("same class");
            let back = plan.inverse();
            let (im, jm) = (i.mask(), j.mask());
            let source: Vec<&Permutation> = all.iter().filter(|(_, d)| d & !im == 0).map(|(p, _)| p).collect();
            let target: Vec<&Permutation> = all.iter().filter(|(_, d)| d & !jm == 0).map(|(p, _)| p).collect();
            let mut images = HashSet::with_capacity(source.len());
            let mut deranged_images = 0;
            for pi in &source {
                let input = format!("{pi} {i}->{j}");
                let sigma = match transfer_with_plan(pi, &plan) {
                    Ok(s) => s,
                    Err(e) => {
                        f.push(fail(&input, "image", e));
                        continue;
                    }
                };
                if !sigma.descent_set().is_subset(j) {
                    f.push(fail(&input, format!("D subset of {j}"), sigma.descent_set()));
                }
                check(&mut f, &input, "cycle type", pi.cycle_type(), sigma.cycle_type());
                check(&mut f, &input, "inverse", pi.to_string(), display(&transfer_with_plan(&sigma, &back)));
                if pi.is_derangement() && sigma.is_derangement() {
                    deranged_images += 1;
                }
                images.insert(sigma);
            }
            let label = format!("{i}->{j}");
            check(&mut f, &label, "source size vs beta", beta(n, i).map(|b| b.to_string()).unwrap_or_default(), source.len().to_string());
            check(&mut f, &label, "image is the target set", target.len(), images.len());
            let source_der = source.iter().filter(|p| p.is_derangement()).count();
            let target_der = target.iter().filter(|p| p.is_derangement()).count();
            check(&mut f, &label, "derangements onto derangements", target_der, deranged_images);
            check(&mut f, &label, "derangement counts", source_der, target_der);
            (source.len() as u64, f)
        })
        .collect();
    results.into_iter().fold((0, Vec::new()), |(c, mut f), (c2, f2)| {
        f.extend(f2);
        (c + c2, f)
    })
}

fn lemmas_trace(n: usize) -> (u64, Vec<Failure>) {
    let inputs: Vec<Permutation> = cyclic_permutations(n + 1).collect();
    let failures: Vec<Failure> = inputs
        .par_iter()
        .flat_map_iter(|pi| match phi_traced(pi) {
            Ok((_, trace)) => check_lemmas(pi, &trace)
                .into_iter()
                .map(|v| fail(pi, v.lemma, v.detail))
                .collect(),
            Err(e) => vec![fail(pi, "trace", e)],
        })
        .collect();
    (inputs.len() as u64, failures)
}

/// Uniform `π ∈ S_{n+1}`: the events `D(π) ∩ [n-1] = I` and `π ∈ C_{n+1}`
/// are independent, i.e. `|A ∩ C|·(n+1)! = |A|·n!`.
fn independence(n: usize) -> (u64, Vec<Failure>) {
    let mut all: HashMap<u64, u64> = HashMap::new();
    let mut cyclic: HashMap<u64, u64> = HashMap::new();
    for p in permutations(n + 1) {
        let mask = p.descent_set().truncate(n).mask();
        *all.entry(mask).or_default() += 1;
        if p.is_cyclic() {
            *cyclic.entry(mask).or_default() += 1;
        }
    }
    let total = factorial(n + 1);
    let cyc_total = factorial(n);
    let mut f = Vec::new();
    let mut checked = 0;
    for i in DescentSet::all(n) {
        checked += 1;
        let a = BigUint::from(all.get(&i.mask()).copied().unwrap_or(0));
        let ac = BigUint::from(cyclic.get(&i.mask()).copied().unwrap_or(0));
        check(&mut f, &i, "independence", &a * &cyc_total, &ac * &total);
    }
    (checked, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, n: usize) -> VerificationReport {
        verify_suite(name, n, &VerifyOptions::default()).unwrap()
    }

    #[test]
    fn every_suite_passes_at_small_n() {
        for name in SUITES {
            for n in 1..=5 {
                let r = run(name, n);
                assert!(r.passed(), "{}: {:?}", r.summary(), &r.failures[..r.failures.len().min(5)]);
            }
        }
    }

    #[test]
    fn bij_roundtrip_at_one() {
        let r = run("bij_roundtrip", 1);
        assert_eq!(r.checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            verify_suite("nope", 3, &VerifyOptions::default()),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn explicit_worker_count() {
        let r = verify_suite("bij_roundtrip", 5, &VerifyOptions { jobs: Some(2) }).unwrap();
        assert_eq!(r.checked, 120);
        assert!(r.passed());
    }
}
