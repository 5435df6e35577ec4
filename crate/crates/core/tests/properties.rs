use nsgp_core::irreducible::{canonical_irreducible, children, parent};
use nsgp_core::oracle;
use nsgp_core::{enumerate_irreducible, irreducible_tree, GapVector, NumericalSemigroup};
use proptest::prelude::*;

fn gap_vectors(len: usize) -> impl Strategy<Value = GapVector> {
    prop::collection::vec(any::<bool>(), len).prop_map(|b| GapVector::from_bits(&b).unwrap())
}

/// Random semigroups: generator sets with gcd 1 drawn from 2..30.
fn semigroups() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::btree_set(2u32..30, 1..6).prop_filter_map("gcd must be 1", |g| {
        NumericalSemigroup::from_generators(g).ok()
    })
}

proptest! {
    #[test]
    fn join_encodes_intersection(a in semigroups(), b in semigroups()) {
        let n = a.frobenius().max(b.frobenius());
        let joined = a.gap_vector().padded(n).join(&b.gap_vector().padded(n)).unwrap();
        for i in 1..=n {
            prop_assert_eq!(!joined.get(i), a.contains(i) && b.contains(i));
        }
    }

    #[test]
    fn generators_bounded_and_round_trip(s in semigroups()) {
        let bound = s.frobenius() + s.multiplicity();
        prop_assert!(s.minimal_generators().iter().all(|&g| g <= bound));
        prop_assert_eq!(s.minimal_generators()[0], s.multiplicity());
        let back = NumericalSemigroup::from_generators(s.minimal_generators().iter().copied()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn bit_string_round_trip(v in (1usize..150).prop_flat_map(gap_vectors)) {
        let parsed: GapVector = v.to_string().parse().unwrap();
        prop_assert_eq!(parsed, v);
    }

    #[test]
    fn canonical_order_is_string_order(a in gap_vectors(70), b in gap_vectors(70)) {
        prop_assert_eq!(a.cmp(&b), a.to_string().cmp(&b.to_string()));
    }

    #[test]
    fn classification_consistent(s in semigroups()) {
        let c = s.classify();
        let e = s.special_gaps();
        prop_assert_eq!(c.special_gap_count as usize, e.len());
        prop_assert_eq!(c.is_irreducible, e.len() <= 1);
        prop_assert_eq!(c.is_atomic, e.len() <= 2);
        prop_assert_eq!(c.is_ani, e.len() == 2);
        prop_assert!(e.contains(&s.frobenius()));
    }
}

#[test]
fn tree_paths_reach_the_root() {
    for f in 1..=30 {
        let root = canonical_irreducible(f).unwrap();
        for s in enumerate_irreducible(f).unwrap() {
            let mut cur = s.clone();
            let mut steps = 0;
            while let Some(p) = parent(&cur, f) {
                assert!(
                    children(&p, f).unwrap().contains(&cur),
                    "{cur:?} not a child of {p:?}"
                );
                cur = p;
                steps += 1;
                assert!(steps <= f, "parent chain too long");
            }
            assert_eq!(cur, root, "F = {f}");
        }
    }
}

#[test]
fn tree_has_no_duplicates_and_consistent_edges() {
    for f in 1..=30 {
        let nodes = irreducible_tree(f).unwrap();
        let mut all: Vec<_> = nodes.iter().map(|n| n.semigroup.clone()).collect();
        let before = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), before, "duplicate node for F = {f}");
        for n in &nodes {
            assert_eq!(n.semigroup.frobenius(), f);
            match n.parent_edge {
                None => assert_eq!(n.depth, 0),
                Some((x, y)) => {
                    assert_eq!(x + y, f);
                    assert!(!n.semigroup.contains(x) && n.semigroup.contains(y));
                }
            }
        }
    }
}

#[test]
fn oracle_contains_extremes() {
    for f in 1..=18 {
        let all = oracle::all_semigroups(f).unwrap();
        assert!(all.contains(&canonical_irreducible(f).unwrap()));
        assert!(all.contains(&NumericalSemigroup::from_gaps(1..=f).unwrap()));
    }
}
