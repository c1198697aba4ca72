//! Character tables with exact cyclotomic values, p-blocks, and the
//! table-only versions of the nilpotent and abelian Hall criteria.

pub mod blocks;
pub mod cyclotomic;
pub mod modp;
pub mod table;

use num_traits::ToPrimitive;
use rayon::prelude::*;

pub use blocks::{block_partition, central_character, BlockPartition};
pub use cyclotomic::Cyclotomic;
pub use table::CharacterTable;

use crate::criteria::{abelian_hall, nilpotent_hall, relevant_primes, BlockDegrees, ClassInfo, Verdict};
use crate::error::{Error, Result};

/// Bundled tables: name, matching catalog group, JSON text.
const SHIPPED: &[(&str, &str, &str)] = &[
    ("trivial", "cyclic_1", include_str!("../../data/tables/trivial.json")),
    ("c3", "cyclic_3", include_str!("../../data/tables/c3.json")),
    ("c6", "cyclic_6", include_str!("../../data/tables/c6.json")),
    ("c15", "cyclic_15", include_str!("../../data/tables/c15.json")),
    ("d8", "dihedral_4", include_str!("../../data/tables/d8.json")),
    ("d10", "dihedral_5", include_str!("../../data/tables/d10.json")),
    ("d12", "dihedral_6", include_str!("../../data/tables/d12.json")),
    ("s4", "sym_4", include_str!("../../data/tables/s4.json")),
    ("a5", "alt_5", include_str!("../../data/tables/a5.json")),
    ("psl2_7", "psl2_7", include_str!("../../data/tables/psl2_7.json")),
    ("psl2_11", "psl2_11", include_str!("../../data/tables/psl2_11.json")),
    ("psl2_31", "psl2_31", include_str!("../../data/tables/psl2_31.json")),
];

pub fn shipped_names() -> impl Iterator<Item = &'static str> {
    SHIPPED.iter().map(|s| s.0)
}

/// Catalog name of the permutation group the shipped table belongs to.
pub fn shipped_group(name: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|s| s.0 == name).map(|s| s.1)
}

pub fn shipped_table(name: &str) -> Result<CharacterTable> {
    let (_, _, text) = SHIPPED
        .iter()
        .find(|s| s.0 == name)
        .ok_or_else(|| Error::Malformed(format!("no bundled character table `{name}`")))?;
    CharacterTable::parse(text)
}

pub fn class_infos(t: &CharacterTable) -> Vec<ClassInfo> {
    t.classes
        .iter()
        .map(|c| ClassInfo {
            size: c.size.clone(),
            element_order: c.order,
        })
        .collect()
}

/// Degrees of the principal p-block for each listed prime. Primes are
/// handled in parallel.
pub fn principal_block_degrees(t: &CharacterTable, primes: &[u64]) -> Result<BlockDegrees> {
    primes
        .par_iter()
        .map(|&p| {
            let part = block_partition(t, p)?;
            let degrees = part
                .principal_block()
                .iter()
                .map(|&chi| {
                    t.degree(chi)
                        .to_u64()
                        .ok_or_else(|| Error::capacity("character degree", t.degree(chi), u64::MAX))
                })
                .collect::<Result<Vec<u64>>>()?;
            Ok((p, degrees))
        })
        .collect()
}

pub fn table_criterion_b(t: &CharacterTable, pi: &[u64]) -> Verdict {
    nilpotent_hall(&class_infos(t), pi)
}

/// Computes principal blocks only for the primes 3 and 5 in `π` that
/// divide `|G|`.
pub fn table_criterion_c(t: &CharacterTable, pi: &[u64]) -> Result<Verdict> {
    let classes = class_infos(t);
    let needed: Vec<u64> = relevant_primes(&classes, pi)
        .into_iter()
        .filter(|&p| p == 3 || p == 5)
        .collect();
    let blocks = principal_block_degrees(t, &needed)?;
    Ok(abelian_hall(&classes, pi, Some(&blocks)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees_of(t: &CharacterTable, block: &[usize]) -> Vec<u64> {
        let mut d: Vec<u64> = block.iter().map(|&c| t.degree(c).to_u64().unwrap()).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn shipped_tables_load() {
        for name in shipped_names() {
            let t = shipped_table(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(t.trivial_character(), Some(0), "{name}");
        }
    }

    #[test]
    fn a5_blocks() {
        let t = shipped_table("a5").unwrap();
        let b5 = block_partition(&t, 5).unwrap();
        assert_eq!(b5.blocks.len(), 2);
        assert_eq!(degrees_of(&t, b5.principal_block()), vec![1, 3, 3, 4]);
        let b3 = block_partition(&t, 3).unwrap();
        assert_eq!(degrees_of(&t, b3.principal_block()), vec![1, 4, 5]);
        assert_eq!(b3.blocks.len(), 3);
        let b2 = block_partition(&t, 2).unwrap();
        assert_eq!(degrees_of(&t, b2.principal_block()), vec![1, 3, 3, 5]);
        let b7 = block_partition(&t, 7).unwrap();
        assert!(b7.vacuous);
    }

    #[test]
    fn p_group_has_one_block() {
        let t = shipped_table("c3").unwrap();
        let b = block_partition(&t, 3).unwrap();
        assert!(!b.vacuous);
        assert_eq!(b.blocks, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn defect_zero_characters_are_singletons() {
        for name in shipped_names() {
            let t = shipped_table(name).unwrap();
            for p in crate::numtheory::prime_divisors_big(&t.order) {
                let part = block_partition(&t, p).unwrap();
                let pp = crate::numtheory::p_part_big(&t.order, p);
                for chi in 0..t.characters.len() {
                    if crate::numtheory::p_part_big(t.degree(chi), p) == pp {
                        let b = part.block_of(chi).unwrap();
                        assert_eq!(part.blocks[b], vec![chi], "{name} p={p} chi={chi}");
                    }
                }
            }
        }
    }

    #[test]
    fn corrupt_central_character() {
        // C2 with a non-integer scaled second row would fail orthogonality, so
        // build the table directly.
        use num_bigint::BigUint;
        let classes = vec![
            table::TableClass { label: "1".into(), size: BigUint::from(1u32), order: 1 },
            table::TableClass { label: "x".into(), size: BigUint::from(3u32), order: 2 },
        ];
        let row = vec![Cyclotomic::integer(2), Cyclotomic::integer(1)];
        let t = CharacterTable::from_parts("bad".into(), BigUint::from(4u32), 2, classes, vec![row]).unwrap();
        assert!(matches!(central_character(&t, 0, 1), Err(Error::TableCorrupt(_))));
    }

    #[test]
    fn central_character_examples() {
        let t = shipped_table("a5").unwrap();
        for k in 0..t.class_count() {
            let w = central_character(&t, 0, k).unwrap();
            assert_eq!(w.to_integer(), Some(t.classes[k].size.clone().into()));
        }
        let five = (0..5).find(|&c| t.degree(c).to_u64() == Some(5)).unwrap();
        assert_eq!(central_character(&t, five, 0).unwrap().to_integer(), Some(1.into()));
        let k12 = t.classes.iter().position(|c| c.size.to_u64() == Some(12)).unwrap();
        assert!(central_character(&t, five, k12).is_ok());
    }

    #[test]
    fn table_criterion_examples() {
        use crate::criteria::Status;
        let a5 = shipped_table("a5").unwrap();
        assert_eq!(table_criterion_b(&a5, &[2, 5]).status, Status::Fails);
        let c = table_criterion_c(&a5, &[3, 5]).unwrap();
        assert_eq!(c.status, Status::Fails);
        assert!(c.witnesses.iter().all(|w| matches!(w, crate::criteria::Witness::Class { .. })));
        let l = shipped_table("psl2_31").unwrap();
        assert_eq!(table_criterion_c(&l, &[3, 5]).unwrap().status, Status::Holds);
        assert_eq!(shipped_table("trivial").unwrap().class_count(), 1);
    }

    #[test]
    fn criterion_c_needs_blocks_only_for_three_and_five() {
        let t = shipped_table("a5").unwrap();
        let v = table_criterion_c(&t, &[2]).unwrap();
        assert!(v.is_determined());
    }
}
