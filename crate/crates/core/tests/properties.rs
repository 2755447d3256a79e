//! Invariants checked over every semigroup of small genus and over random
//! generator lists, against naive oracles written here.

use proptest::prelude::*;
use wilf_core::bounds::{self, BoundId};
use wilf_core::enumerate::{enumerate_tree, ScanConfig, ScanReport};
use wilf_core::lemma::{build_witness_cover, verify_lemma_bound};
use wilf_core::{invariants_of, sporadic_elements, wilf_number, NumericalSemigroup, Rational};

fn all_up_to(genus: u32) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    enumerate_tree(genus, |s| out.push(s.clone())).unwrap();
    out
}

fn nontrivial_up_to(genus: u32) -> Vec<NumericalSemigroup> {
    all_up_to(genus)
        .into_iter()
        .filter(|s| !s.is_full())
        .collect()
}

/// Unbounded-coin dynamic program over `[0, len)`.
fn naive_members(gens: &[u32], len: usize) -> Vec<bool> {
    let mut reach = vec![false; len];
    reach[0] = true;
    for n in 1..len {
        reach[n] = gens
            .iter()
            .any(|&g| g as usize <= n && reach[n - g as usize]);
    }
    reach
}

/// `S* \ (S* + S*)` by a double loop over `[1, limit)`.
fn naive_atoms(member: &[bool]) -> Vec<u32> {
    let len = member.len();
    (1..len)
        .filter(|&n| member[n])
        .filter(|&n| !(1..n).any(|a| member[a] && member[n - a]))
        .map(|n| n as u32)
        .collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn membership_agrees_with_coin_sieve() {
    for s in all_up_to(10) {
        let c = s.conductor() as usize;
        let member = naive_members(s.minimal_generators(), 4 * c + 4);
        for (n, &m) in member.iter().enumerate() {
            assert_eq!(s.contains(n as u64), m, "{s} at {n}");
        }
        assert_eq!(naive_atoms(&member), s.minimal_generators(), "{s}");
    }
}

#[test]
fn generators_round_trip() {
    for s in all_up_to(11) {
        let rebuilt = NumericalSemigroup::from_generators(s.minimal_generators()).unwrap();
        assert_eq!(rebuilt, s);
        let gaps: Vec<u32> = s.gaps().collect();
        assert_eq!(NumericalSemigroup::from_gaps(&gaps).unwrap(), s);
        assert_eq!(s.to_string().parse::<NumericalSemigroup>().unwrap(), s);
    }
}

#[test]
fn structural_invariants() {
    for s in nontrivial_up_to(12) {
        let inv = invariants_of(&s).unwrap();
        let f = inv.frobenius;
        assert!(!s.contains(f.into()) && s.contains(u64::from(f) + 1));
        assert_eq!(inv.genus as usize, s.gaps().count());
        assert_eq!(inv.multiplicity, inv.atoms[0]);
        assert!(inv.embedding_dim >= 2 && inv.embedding_dim <= inv.multiplicity);
        assert!(inv.genus + 1 >= inv.embedding_dim);
        assert!(f + 1 >= inv.multiplicity);
        assert_eq!(inv.atoms.iter().fold(0, |g, &a| gcd(g, a)), 1);

        let l = sporadic_elements(&s).unwrap().elements;
        assert_eq!(l.len() as u32, f + 1 - inv.genus);
        assert_eq!(l[0], 0);
        assert!(l.iter().all(|&x| x <= f && s.contains(x.into())));

        let d = inv.wilf_density;
        assert_eq!(d, Rational::new(l.len() as i64, i64::from(f) + 1).unwrap());
        assert!(d.is_positive() && d <= Rational::integer(1));

        let wilf = bounds::check_wilf(&inv).unwrap();
        assert_eq!(wilf_number(&s).unwrap() >= 0, wilf.holds);
    }
}

#[test]
fn rearranged_forms_agree_and_imply_prop_b() {
    for s in nontrivial_up_to(12) {
        let inv = invariants_of(&s).unwrap();
        let zhai = bounds::check_zhai(&inv).unwrap();
        let two = bounds::check_2star(&inv).unwrap();
        let lemma = bounds::check_lemma3(&inv).unwrap();
        let three = bounds::check_3star(&inv).unwrap();
        assert_eq!(zhai.holds, two.holds, "{s}");
        assert_eq!(zhai.is_equality, two.is_equality, "{s}");
        assert_eq!(lemma.holds, three.holds, "{s}");
        if zhai.holds && lemma.holds {
            assert!(bounds::check_prop_b(&inv).unwrap().holds, "{s}");
        }
    }
}

#[test]
fn small_embedding_dimensions_satisfy_wilf() {
    for s in nontrivial_up_to(14) {
        let inv = invariants_of(&s).unwrap();
        if inv.embedding_dim <= 3 {
            assert!(bounds::check_wilf(&inv).unwrap().holds, "{s}");
        }
        if inv.embedding_dim == 2 {
            assert_eq!(inv.wilf_density, Rational::new(1, 2).unwrap(), "{s}");
        }
    }
}

#[test]
fn checks_are_deterministic() {
    for s in nontrivial_up_to(8) {
        let inv = invariants_of(&s).unwrap();
        assert_eq!(
            bounds::check_all(&inv).unwrap(),
            bounds::check_all(&inv).unwrap()
        );
    }
}

#[test]
fn witness_cover_sanity() {
    for s in nontrivial_up_to(12) {
        let inv = invariants_of(&s).unwrap();
        let cover = build_witness_cover(&s).unwrap();
        let m = inv.multiplicity;
        assert_eq!(cover.assignments.len() as u32, m - 1);
        for w in &cover.assignments {
            assert_eq!(w.atom + w.sporadic, w.x);
            assert!(w.atom_index >= 2);
            assert_eq!(inv.atoms[w.atom_index as usize - 1], w.atom);
            assert!(w.sporadic <= inv.frobenius && s.contains(w.sporadic.into()));
            assert!(cover.cover_set.binary_search(&w.x).is_ok());
            // An atom in X is its own witness.
            if inv.atoms[1..].contains(&w.x) {
                assert_eq!((w.atom, w.sporadic), (w.x, 0));
            }
        }
        let chain = verify_lemma_bound(&cover, &inv).unwrap();
        assert!(chain.holds, "{s}");
        assert!(chain.implied.holds);
    }
}

#[test]
fn report_merge_is_associative_and_commutative() {
    let config = ScanConfig::new(9).rows(true);
    let all = nontrivial_up_to(9);
    let part = |k: usize| {
        let mut r = ScanReport::empty(&config);
        for s in all.iter().skip(k).step_by(3) {
            r.record(s).unwrap();
        }
        r
    };
    let (a, b, c) = (part(0), part(1), part(2));
    let left = a.clone().merge(b.clone()).merge(c.clone()).finish();
    let right = a.clone().merge(c.clone().merge(b.clone())).finish();
    let swapped = c.merge(a).merge(b).finish();
    assert_eq!(left, right);
    assert_eq!(left, swapped);
    assert_eq!(left.semigroups_checked as usize, all.len());
}

fn generator_lists() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..40, 1..6)
        .prop_filter("gcd 1", |v| v.iter().fold(0, |g, &a| gcd(g, a)) == 1)
}

proptest! {
    #[test]
    fn gaps_round_trip(gens in generator_lists()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let gaps: Vec<u32> = s.gaps().collect();
        prop_assert_eq!(NumericalSemigroup::from_gaps(&gaps).unwrap(), s.clone());
        prop_assert_eq!(s.genus() as usize, gaps.len());
    }

    #[test]
    fn closure_is_idempotent(gens in generator_lists(), pick in 0u32..200) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let extra = (pick..).find(|&n| n > 0 && s.contains(n.into())).unwrap();
        let mut more = gens.clone();
        more.push(extra);
        prop_assert_eq!(NumericalSemigroup::from_generators(&more).unwrap(), s);
    }

    #[test]
    fn closure_matches_coin_sieve(gens in generator_lists()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let len = 2 * s.conductor() as usize + 8;
        let member = naive_members(&gens, len);
        for (n, &m) in member.iter().enumerate() {
            prop_assert_eq!(s.contains(n as u64), m);
        }
        prop_assert!(s.minimal_generators().iter().all(|a| gens.contains(a)));
    }

    #[test]
    fn all_bounds_hold_on_random_semigroups(gens in generator_lists()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(!s.is_full());
        let inv = invariants_of(&s).unwrap();
        for check in bounds::check_all(&inv).unwrap() {
            prop_assert!(check.holds, "{} fails on {}", check.bound_id, s);
            prop_assert_eq!(check.bound_id == BoundId::PropA, check.branch.is_some());
        }
        let chain = verify_lemma_bound(&build_witness_cover(&s).unwrap(), &inv).unwrap();
        prop_assert!(chain.holds);
    }
}
