//! Invariants that must survive relabeling elements and rebuilding groups.

use grouplab::constructors::direct_product;
use grouplab::invariants::order_profile;
use grouplab::iso::{automorphisms, fingerprint};
use grouplab::{are_isomorphic, build, lambda, Group};
use proptest::prelude::*;

const SPECS: &[&str] = &[
    "C6",
    "D8",
    "Q8",
    "C4xC2",
    "A4",
    "D12",
    "Dic12",
    "C3^2",
    "SD16",
    "C8:C2[pow5]",
    "C4:C4[pow3]",
    "D8*C4",
    "C2^2:C4[aut2]",
    "C5:C4[pow2]",
    "C3^2:C2[inv]",
    "Q8xC2",
];

/// The same group with elements renamed by `perm` (identity kept at 0).
fn relabel(g: &Group, perm: &[usize]) -> Group {
    let n = g.order();
    let mut rows = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            rows[perm[a]][perm[b]] = perm[g.mul(a, b)];
        }
    }
    Group::from_table(&rows, "relabeled").unwrap()
}

fn spec_and_perm() -> impl Strategy<Value = (&'static str, Vec<usize>)> {
    prop::sample::select(SPECS).prop_flat_map(|s| {
        let n = build(s).unwrap().order();
        let rest: Vec<usize> = (1..n).collect();
        (
            Just(s),
            Just(rest).prop_shuffle().prop_map(|r| {
                let mut p = vec![0];
                p.extend(r);
                p
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabeling_preserves_invariants((spec, perm) in spec_and_perm()) {
        let g = build(spec).unwrap();
        let h = relabel(&g, &perm);
        prop_assert_eq!(lambda(&g), lambda(&h));
        prop_assert_eq!(order_profile(&g), order_profile(&h));
        prop_assert_eq!(fingerprint(&g), fingerprint(&h));
        let f = are_isomorphic(&g, &h).expect("relabeling is an isomorphism");
        prop_assert!(f.verify(&g, &h));
    }

    #[test]
    fn exchange_round_trip((spec, perm) in spec_and_perm()) {
        let g = relabel(&build(spec).unwrap(), &perm);
        let back = Group::from_exchange(&g.to_exchange(), "back").unwrap();
        prop_assert_eq!(g.table(), back.table());
    }

    #[test]
    fn direct_product_with_trivial(i in 0..SPECS.len()) {
        let g = build(SPECS[i]).unwrap();
        let p = direct_product(&g, &Group::trivial()).unwrap();
        prop_assert!(are_isomorphic(&g, &p).is_some());
        prop_assert_eq!(lambda(&g), lambda(&p));
    }
}

#[test]
fn automorphism_group_sizes() {
    // |Aut(C2^2)| = 6, |Aut(Q8)| = 24, |Aut(D8)| = 8, |Aut(C8)| = 4
    for (spec, n) in [("C2^2", 6), ("Q8", 24), ("D8", 8), ("C8", 4)] {
        assert_eq!(automorphisms(&build(spec).unwrap()).len(), n, "{spec}");
    }
}

#[test]
fn distinct_specs_are_distinguished() {
    let groups: Vec<Group> = SPECS.iter().map(|s| build(s).unwrap()).collect();
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            if groups[i].order() == groups[j].order() {
                assert!(
                    are_isomorphic(&groups[i], &groups[j]).is_none(),
                    "{} vs {}",
                    SPECS[i],
                    SPECS[j]
                );
            }
        }
    }
}
