//! p-blocks from central characters.
//!
//! Two irreducible characters lie in the same p-block exactly when their
//! central characters `ω_χ(K) = |K| χ(g_K) / χ(1)` agree modulo a prime over
//! `p` on every class. The values `ω_χ(K)` are algebraic integers, so the
//! exact division below must succeed on a genuine table.

use std::collections::HashMap;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use serde::Serialize;

use super::cyclotomic::Cyclotomic;
use super::modp::ResidueField;
use super::table::CharacterTable;
use crate::error::{Error, Result};
use crate::fpoly::FPoly;

/// `ω_χ(K)` for character `chi` and class `k`.
pub fn central_character(t: &CharacterTable, chi: usize, k: usize) -> Result<Cyclotomic> {
    let size = BigInt::from_biguint(Sign::Plus, t.classes[k].size.clone());
    let degree = BigInt::from_biguint(Sign::Plus, t.degree(chi).clone());
    t.characters[chi][k].scale(&size).div_exact(&degree).ok_or_else(|| {
        Error::TableCorrupt(format!(
            "central character of {} at class {} is not an algebraic integer",
            chi, t.classes[k].label
        ))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockPartition {
    pub prime: u64,
    /// Character indices, each block sorted, blocks ordered by least member.
    pub blocks: Vec<Vec<usize>>,
    /// Index into `blocks` of the block holding the trivial character.
    pub principal: usize,
    /// `p` does not divide `|G|`; everything was put in one block without
    /// computing.
    pub vacuous: bool,
}

impl BlockPartition {
    pub fn principal_block(&self) -> &[usize] {
        &self.blocks[self.principal]
    }

    pub fn block_of(&self, chi: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&chi))
    }
}

pub fn block_partition(t: &CharacterTable, p: u64) -> Result<BlockPartition> {
    let all: Vec<usize> = (0..t.characters.len()).collect();
    if !(&t.order % p).is_zero() {
        return Ok(BlockPartition {
            prime: p,
            blocks: vec![all],
            principal: 0,
            vacuous: true,
        });
    }
    let trivial = t
        .trivial_character()
        .ok_or_else(|| Error::TableCorrupt("no trivial character".into()))?;
    let field = ResidueField::for_exponent(t.exponent, p);
    let mut index: HashMap<Vec<FPoly>, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for chi in all {
        let mut key = Vec::with_capacity(t.class_count());
        for k in 0..t.class_count() {
            key.push(field.reduce(&central_character(t, chi, k)?, t.exponent));
        }
        let b = *index.entry(key).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[b].push(chi);
    }
    let principal = blocks
        .iter()
        .position(|b| b.contains(&trivial))
        .expect("trivial character is placed");
    Ok(BlockPartition {
        prime: p,
        blocks,
        principal,
        vacuous: false,
    })
}
