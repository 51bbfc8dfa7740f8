//! Randomized checks at sizes past the exhaustive suites.

use cycdesc::marked::{cyclesu_inverse, cyclesu_map, phi_t0, phi_u, psi_t0, psi_u, MarkKind, MarkedWord};
use cycdesc::necklace::{canonical_necklace, least_rotation, transfer_with_plan, TransferPlan};
use cycdesc::perm::{reverse_complement_word, Composition};
use cycdesc::phi::check_lemmas;
use cycdesc::{descent_set, phi, phi_traced, psi, CycleDecomposition, DescentSet, Permutation};
use proptest::prelude::*;

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(shuffled).prop_map(|w| Permutation::new(w).unwrap())
}

fn close_cycle(mut t: Vec<usize>) -> Permutation {
    t.push(t.len() + 1);
    CycleDecomposition::from_cycles(vec![t]).unwrap().to_permutation()
}

/// An `(n+1)`-cycle `(t_1, …, t_n, n+1)`.
fn cycle(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(shuffled).prop_map(close_cycle)
}

fn marked(max_n: usize, kind: MarkKind) -> impl Strategy<Value = MarkedWord> {
    (1..=max_n)
        .prop_flat_map(|n| (shuffled(n - 1).prop_map(close_cycle), 1..=n))
        .prop_map(move |(pi, k)| MarkedWord::from_cycle(&pi, k, kind).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn phi_round_trip_and_descents(pi in cycle(16)) {
        let n = pi.n() - 1;
        let sigma = phi(&pi).unwrap();
        prop_assert_eq!(psi(&sigma).unwrap(), pi.clone());
        prop_assert_eq!(sigma.descent_set(), pi.descent_set().truncate(n));
        prop_assert_eq!(sigma.position_of(n), pi.position_of(n + 1));
    }

    #[test]
    fn psi_then_phi_is_identity(sigma in permutation(16)) {
        let pi = psi(&sigma).unwrap();
        prop_assert!(pi.is_cyclic());
        prop_assert_eq!(phi(&pi).unwrap(), sigma);
    }

    #[test]
    fn traces_satisfy_lemmas(pi in cycle(16)) {
        let (_, trace) = phi_traced(&pi).unwrap();
        prop_assert_eq!(check_lemmas(&pi, &trace), vec![]);
    }

    #[test]
    fn reverse_complement_reflects_descents(w in (1..=14usize).prop_flat_map(shuffled)) {
        let n = w.len();
        let rc = reverse_complement_word(&w, n + 1);
        prop_assert_eq!(reverse_complement_word(&rc, n + 1), w.clone());
        prop_assert_eq!(descent_set(&rc), descent_set(&w).reversed());
    }

    #[test]
    fn reversal_keeps_associated_partition(n in 1..=20usize, mask in any::<u64>()) {
        let set = DescentSet::from_mask(n, mask & ((1u64 << (n - 1)) - 1));
        prop_assert_eq!(set.reversed().associated_partition(), set.associated_partition());
        prop_assert_eq!(set.reversed().reversed(), set.clone());
        prop_assert_eq!(set.composition().descent_set(), set);
    }

    #[test]
    fn necklaces_ignore_rotation(word in prop::collection::vec(1..=3usize, 1..12), k in 0..12usize) {
        let mut rotated = word.clone();
        rotated.rotate_left(k % word.len());
        prop_assert_eq!(canonical_necklace(&rotated).unwrap(), canonical_necklace(&word).unwrap());
        let mut best = word.clone();
        for r in 1..word.len() {
            let mut w = word.clone();
            w.rotate_left(r);
            best = best.min(w);
        }
        let mut w = word.clone();
        w.rotate_left(least_rotation(&word));
        prop_assert_eq!(w, best);
    }

    #[test]
    fn notation_round_trips(p in permutation(15)) {
        let c = p.canonical_cycle_form();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.to_permutation(), p.clone());
        prop_assert_eq!(c.to_string().parse::<Permutation>().unwrap(), p.clone());
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p.clone());
        prop_assert_eq!(p.to_cycles().to_permutation(), p);
    }

    #[test]
    fn marked_maps_invert(tau in marked(12, MarkKind::Top), z in marked(12, MarkKind::Zero)) {
        let sigma = phi_u(&tau).unwrap();
        prop_assert_eq!(sigma.descent_set(), tau.descent_set());
        prop_assert_eq!(sigma.at(tau.marked_pos()), tau.n());
        prop_assert_eq!(psi_u(&sigma).unwrap(), tau);
        let sigma = phi_t0(&z).unwrap();
        prop_assert_eq!(sigma.descent_set(), z.descent_set());
        prop_assert_eq!(sigma.at(z.marked_pos()), 1);
        prop_assert_eq!(psi_t0(&sigma).unwrap(), z);
    }

    #[test]
    fn cyclesu_inverts(pi in cycle(12), m in 1..=13usize) {
        let m = (m - 1) % pi.n() + 1;
        let sigma = cyclesu_map(&pi, m).unwrap();
        prop_assert_eq!(sigma.at(m), 1);
        prop_assert_eq!(cyclesu_inverse(&sigma, m).unwrap(), pi);
    }

    #[test]
    fn transfer_inverts(p in permutation(12), extra in any::<u64>(), order in any::<u64>()) {
        let n = p.n();
        let from = DescentSet::from_mask(n, p.descent_set().mask() | (extra & ((1u64 << (n - 1)) - 1)));
        // reorder the blocks of `from` to get a target with the same partition
        let mut parts = from.composition().parts().to_vec();
        let len = parts.len();
        for k in (1..len).rev() {
            parts.swap(k, (order >> (k % 60)) as usize % (k + 1));
        }
        let to = Composition::new(parts).unwrap().descent_set();
        let plan = TransferPlan::new(from.clone(), to.clone()).unwrap();
        let sigma = transfer_with_plan(&p, &plan).unwrap();
        prop_assert!(sigma.descent_set().is_subset(&to));
        prop_assert_eq!(sigma.cycle_type(), p.cycle_type());
        prop_assert_eq!(sigma.is_derangement(), p.is_derangement());
        prop_assert_eq!(transfer_with_plan(&sigma, &plan.inverse()).unwrap(), p);
    }
}
