//! Table-only criteria against the permutation-group side, on the bundled
//! tables.

use hallmark_core::catalog::lookup;
use hallmark_core::chartab::{
    block_partition, principal_block_degrees, shipped_group, shipped_names, shipped_table, table_criterion_b,
    table_criterion_c, CharacterTable,
};
use hallmark_core::classes::class_table;
use hallmark_core::criteria::{nilpotent_hall_criterion, verify_theorem_b, verify_theorem_c, Agreement};
use hallmark_core::numtheory::prime_divisors_big;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn subsets(primes: &[u64]) -> Vec<Vec<u64>> {
    (1u32..(1 << primes.len()))
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}

#[test]
fn class_data_matches_group() {
    for name in shipped_names() {
        let t = shipped_table(name).unwrap();
        let g = lookup(shipped_group(name).unwrap()).unwrap();
        let ct = class_table(&g).unwrap();
        let mut a: Vec<(u64, u64)> = t.classes.iter().map(|c| (c.size.to_u64().unwrap(), c.order)).collect();
        let mut b: Vec<(u64, u64)> = ct.classes().iter().map(|c| (c.size, c.element_order)).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn table_and_group_paths_agree() {
    for name in shipped_names() {
        let t = shipped_table(name).unwrap();
        let g = lookup(shipped_group(name).unwrap()).unwrap();
        let ct = class_table(&g).unwrap();
        let primes = prime_divisors_big(&t.order);
        for pi in subsets(&primes) {
            let tb = table_criterion_b(&t, &pi);
            let gb = nilpotent_hall_criterion(&ct, &pi);
            assert_eq!(tb.status, gb.status, "{name} {pi:?}");
            assert_eq!(tb.offending_primes(), gb.offending_primes(), "{name} {pi:?}");
            let rb = verify_theorem_b(&g, &pi).unwrap();
            assert_eq!(rb.agreement, Agreement::Agree, "{name} B {pi:?}");

            let tc = table_criterion_c(&t, &pi).unwrap();
            let blocks = principal_block_degrees(&t, &[3, 5]).unwrap();
            let rc = verify_theorem_c(&g, &pi, Some(&blocks)).unwrap();
            assert_eq!(rc.agreement, Agreement::Agree, "{name} C {pi:?}");
            let gc = rc.criterion.unwrap();
            assert_eq!(tc.status, gc.status, "{name} C {pi:?}");
            assert_eq!(tc.offending_primes(), gc.offending_primes(), "{name} C {pi:?}");
        }
    }
}

fn block_shape(t: &CharacterTable, p: u64) -> Vec<Vec<usize>> {
    block_partition(t, p).unwrap().blocks
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn galois_conjugation_preserves_blocks_and_verdicts(
        idx in 0usize..12,
        k in 1i64..200,
    ) {
        let name = shipped_names().nth(idx).unwrap();
        let t = shipped_table(name).unwrap();
        prop_assume!(num_integer::gcd(k, t.exponent as i64) == 1);
        let s = t.galois_conjugate(k);
        for p in prime_divisors_big(&t.order) {
            // conjugation permutes characters within each block set, and the
            // partition is described by character indices of the same table
            // shape, so compare block sizes and degree multisets
            let mut a: Vec<Vec<u64>> = block_shape(&t, p)
                .iter()
                .map(|b| { let mut d: Vec<u64> = b.iter().map(|&c| t.degree(c).to_u64().unwrap()).collect(); d.sort(); d })
                .collect();
            let mut b: Vec<Vec<u64>> = block_shape(&s, p)
                .iter()
                .map(|b| { let mut d: Vec<u64> = b.iter().map(|&c| s.degree(c).to_u64().unwrap()).collect(); d.sort(); d })
                .collect();
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
        }
        let primes = prime_divisors_big(&t.order);
        for pi in subsets(&primes) {
            prop_assert_eq!(table_criterion_c(&t, &pi).unwrap().status, table_criterion_c(&s, &pi).unwrap().status);
            prop_assert_eq!(table_criterion_b(&t, &pi).status, table_criterion_b(&s, &pi).status);
        }
    }
}
