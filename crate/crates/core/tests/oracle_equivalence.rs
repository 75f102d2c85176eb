use abelcount::modular::{invariant, InvariantKind};
use abelcount::oracle::{
    divisor_sum, enumerate_compositions, oracle, oracle_fls, oracle_n, oracle_n12, oracle_n34,
    sublattice_count,
};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use std::collections::HashSet;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn closed_form_matches_composition_sums() {
    for kind in InvariantKind::ALL {
        for genus in kind.min_genus()..=5 {
            for nodes in 0..=7 {
                assert_eq!(
                    oracle(kind, genus, nodes).unwrap(),
                    invariant(kind, genus, nodes).unwrap(),
                    "{kind} g={genus} n={nodes}"
                );
            }
        }
    }
}

#[test]
fn sigma_three_ways() {
    for k in 1..=200 {
        assert_eq!(
            sublattice_count(k).unwrap(),
            divisor_sum(k).unwrap(),
            "k={k}"
        );
    }
}

#[test]
fn symmetrised_identities() {
    for genus in 1..=6 {
        for nodes in 0..=8 {
            let n34 = oracle_n34(genus, nodes).unwrap();
            assert_eq!(oracle_n(genus, nodes).unwrap(), BigInt::from(genus) * &n34);
            if genus >= 2 {
                assert_eq!(
                    oracle_n12(genus, nodes).unwrap(),
                    BigInt::from(genus - 1) * oracle_fls(genus, nodes).unwrap()
                );
            }
        }
    }
}

#[test]
fn leading_terms() {
    for genus in 2..=8 {
        assert_eq!(
            invariant(InvariantKind::Fls, genus, 0).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            invariant(InvariantKind::N, genus, 0).unwrap(),
            BigInt::from(genus)
        );
    }
}

proptest! {
    #[test]
    fn composition_stream(total in 1u32..=11, length in 1usize..=6) {
        let all: Vec<_> = enumerate_compositions(total, length).collect();
        let expected = if (length as u32) > total { 0 } else { binomial(u64::from(total) - 1, length as u64 - 1) };
        prop_assert_eq!(all.len() as u64, expected);
        let distinct: HashSet<_> = all.iter().collect();
        prop_assert_eq!(distinct.len(), all.len());
        for c in &all {
            prop_assert_eq!(c.len(), length);
            prop_assert_eq!(c.total(), total);
            prop_assert_eq!(c.parts().iter().sum::<u32>(), total);
            prop_assert!(c.parts().iter().all(|&p| p >= 1));
        }
        prop_assert!(all.windows(2).all(|w| w[0].parts() < w[1].parts()));
    }

    #[test]
    fn sigma_is_multiplicative(m in 1u64..10_000, n in 1u64..10_000) {
        prop_assume!(m.gcd(&n) == 1);
        prop_assert_eq!(divisor_sum(m * n).unwrap(), divisor_sum(m).unwrap() * divisor_sum(n).unwrap());
    }
}
