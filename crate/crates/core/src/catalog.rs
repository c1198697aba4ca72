//! Named groups: symmetric and alternating groups, PSL(2,q), semi-affine and
//! Frobenius groups, direct products, and a few shipped generator files.
//!
//! Lookup accepts registry names such as `psl2_31` or `semiaffine_2_3`,
//! and products written with `x`, e.g. `a5xc7` or `s3xs3`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::group::PermutationGroup;
use crate::groupfile::GroupFile;
use crate::numtheory::{is_prime, multiplicative_order, prime_power};
use crate::perm::{Permutation, MAX_DEGREE};

const PSL3_2: &str = include_str!("../data/groups/psl3_2.json");
const PSL3_3: &str = include_str!("../data/groups/psl3_3.json");
const J1: &str = include_str!("../data/groups/j1.json");

/// Largest field size accepted by [`semi_affine`].
pub const SEMI_AFFINE_FIELD_CAP: u64 = 1 << 14;

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[&pts]).expect("valid cycle")
}

fn from_map(degree: usize, f: impl Fn(usize) -> usize) -> Result<Permutation> {
    Permutation::from_images((0..degree).map(f).collect())
}

pub fn symmetric(n: usize) -> Result<PermutationGroup> {
    if !(1..=12).contains(&n) {
        return Err(Error::capacity("symmetric degree", n, 12));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, [0, 1]));
    }
    if n >= 3 {
        gens.push(cycle(n, 0..n));
    }
    PermutationGroup::new(n, gens)
}

pub fn alternating(n: usize) -> Result<PermutationGroup> {
    if !(1..=12).contains(&n) {
        return Err(Error::capacity("alternating degree", n, 12));
    }
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle(n, [0, 1, 2]));
    }
    if n >= 4 {
        if n % 2 == 1 {
            gens.push(cycle(n, 0..n));
        } else {
            gens.push(cycle(n, 1..n));
        }
    }
    PermutationGroup::new(n, gens)
}

pub fn cyclic(n: usize) -> Result<PermutationGroup> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::capacity("cyclic degree", n, MAX_DEGREE));
    }
    let gens = if n >= 2 { vec![cycle(n, 0..n)] } else { vec![] };
    PermutationGroup::new(n, gens)
}

/// Dihedral group of order `2n`. For `n >= 3` this is the symmetry group of
/// an `n`-gon; `n = 1, 2` give C2 and the Klein four-group.
pub fn dihedral(n: usize) -> Result<PermutationGroup> {
    match n {
        0 => Err(Error::Malformed("dihedral group needs n >= 1".into())),
        1 => cyclic(2),
        2 => PermutationGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
            ],
        ),
        _ if n > MAX_DEGREE => Err(Error::capacity("dihedral degree", n, MAX_DEGREE)),
        _ => {
            let rot = cycle(n, 0..n);
            let refl = from_map(n, |i| (n - i) % n)?;
            PermutationGroup::new(n, vec![rot, refl])
        }
    }
}

/// `C_n ⋊ C_k` acting on `Z/n` by `x ↦ x + 1` and `x ↦ a x`, where `a` is
/// the least unit of multiplicative order exactly `k`.
pub fn frobenius(n: usize, k: usize) -> Result<PermutationGroup> {
    if n < 2 || k == 0 {
        return Err(Error::Malformed(format!("frobenius({n}, {k}) needs n >= 2, k >= 1")));
    }
    if n > MAX_DEGREE {
        return Err(Error::capacity("frobenius degree", n, MAX_DEGREE));
    }
    let a = (1..n as u64)
        .filter(|&a| a.gcd(&(n as u64)) == 1)
        .find(|&a| multiplicative_order(a, n as u64) == Some(k as u64))
        .ok_or_else(|| Error::Malformed(format!("no unit of order {k} modulo {n}")))?;
    let translate = cycle(n, 0..n);
    let scale = from_map(n, |x| (x as u64 * a % n as u64) as usize)?;
    PermutationGroup::new(n, vec![translate, scale])
}

/// PSL(2,q) acting on the projective line; point `q` is infinity.
pub fn psl2(q: u64) -> Result<PermutationGroup> {
    let f = GaloisField::new(q)?;
    if !(4..=32).contains(&q) {
        return Err(Error::capacity("psl2 field size", q, 32));
    }
    let inf = q as usize;
    let degree = inf + 1;
    let mut gens = Vec::new();
    for i in 0..f.degree() {
        let a = f.basis(i);
        // z -> z + a
        gens.push(from_map(degree, |z| {
            if z == inf {
                inf
            } else {
                f.add(z as u32, a) as usize
            }
        })?);
        // z -> z / (a z + 1)
        gens.push(from_map(degree, |z| {
            if z == inf {
                return f.inv(a) as usize;
            }
            let den = f.add(f.mul(a, z as u32), 1);
            if den == 0 {
                inf
            } else {
                f.mul(z as u32, f.inv(den)) as usize
            }
        })?);
    }
    PermutationGroup::new(degree, gens)
}

/// The semi-affine group `F ⋊ (F^× ⋊ Gal(F/F_q))` on `F = GF(q^p)`, of order
/// `q^p (q^p - 1) p`.
pub fn semi_affine(q: u64, p: u64) -> Result<PermutationGroup> {
    if !is_prime(q) || !is_prime(p) || q == p {
        return Err(Error::Malformed(format!(
            "semi_affine({q}, {p}) needs two distinct primes"
        )));
    }
    let size = q
        .checked_pow(p as u32)
        .filter(|&s| s <= SEMI_AFFINE_FIELD_CAP)
        .ok_or_else(|| Error::capacity("semi-affine field size", format!("{q}^{p}"), SEMI_AFFINE_FIELD_CAP))?;
    if size as usize > MAX_DEGREE {
        return Err(Error::capacity("semi-affine degree", size, MAX_DEGREE));
    }
    let f = GaloisField::new(size)?;
    let n = size as usize;
    let w = f.primitive();
    let gens = vec![
        from_map(n, |x| f.add(x as u32, 1) as usize)?,
        from_map(n, |x| f.mul(x as u32, w) as usize)?,
        from_map(n, |x| f.pow(x as u32, q) as usize)?,
    ];
    PermutationGroup::new(n, gens)
}

/// `G × H` acting on the disjoint union of the two point sets.
pub fn direct_product(g: &PermutationGroup, h: &PermutationGroup) -> Result<PermutationGroup> {
    let degree = g.degree() + h.degree();
    if degree > MAX_DEGREE {
        return Err(Error::capacity("product degree", degree, MAX_DEGREE));
    }
    let mut gens: Vec<Permutation> = g.generators().iter().map(|x| x.shifted(0, degree)).collect();
    gens.extend(h.generators().iter().map(|x| x.shifted(g.degree(), degree)));
    PermutationGroup::new(degree, gens)
}

pub fn psl3_2() -> PermutationGroup {
    GroupFile::parse(PSL3_2).and_then(|f| f.build()).expect("shipped file")
}

pub fn psl3_3() -> PermutationGroup {
    GroupFile::parse(PSL3_3).and_then(|f| f.build()).expect("shipped file")
}

/// The first Janko group on 266 points.
pub fn j1() -> PermutationGroup {
    GroupFile::parse(J1).and_then(|f| f.build()).expect("shipped file")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Abelian,
    Solvable,
    Simple,
    SporadicStretch,
    Extended,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Abelian => "abelian",
            Tag::Solvable => "solvable",
            Tag::Simple => "simple",
            Tag::SporadicStretch => "sporadic-stretch",
            Tag::Extended => "extended",
        }
    }
}

/// A parsed catalog name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spec {
    Cyclic(usize),
    Dihedral(usize),
    Frobenius(usize, usize),
    Symmetric(usize),
    Alternating(usize),
    Psl2(u64),
    Psl3_2,
    Psl3_3,
    SemiAffine(u64, u64),
    J1,
    Product(Vec<Spec>),
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

impl Spec {
    pub fn parse(name: &str) -> Result<Spec> {
        let name = name.trim().to_ascii_lowercase();
        let parts: Vec<&str> = name.split('x').collect();
        if parts.len() > 1 {
            return parts
                .iter()
                .map(|p| Spec::parse_factor(p))
                .collect::<Result<Vec<_>>>()
                .map(Spec::Product);
        }
        Spec::parse_factor(&name)
    }

    fn parse_factor(s: &str) -> Result<Spec> {
        let bad = || Error::Malformed(format!("unknown catalog name `{s}`"));
        let num = |t: &str| t.parse::<u64>().map_err(|_| bad());
        let fields: Vec<&str> = s.split('_').collect();
        let spec = match fields.as_slice() {
            ["j1"] => Spec::J1,
            ["psl3", "2"] => Spec::Psl3_2,
            ["psl3", "3"] => Spec::Psl3_3,
            ["cyclic", n] => Spec::Cyclic(num(n)? as usize),
            ["dihedral", n] => Spec::Dihedral(num(n)? as usize),
            ["sym", n] => Spec::Symmetric(num(n)? as usize),
            ["alt", n] => Spec::Alternating(num(n)? as usize),
            ["psl2", q] => Spec::Psl2(num(q)?),
            ["frobenius", n, k] => Spec::Frobenius(num(n)? as usize, num(k)? as usize),
            ["semiaffine", q, p] => Spec::SemiAffine(num(q)?, num(p)?),
            [short] if short.len() >= 2 => {
                let (head, tail) = short.split_at(1);
                let n = num(tail)? as usize;
                match head {
                    "c" => Spec::Cyclic(n),
                    "d" => Spec::Dihedral(n),
                    "s" => Spec::Symmetric(n),
                    "a" => Spec::Alternating(n),
                    _ => return Err(bad()),
                }
            }
            _ => return Err(bad()),
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<PermutationGroup> {
        match *self {
            Spec::Cyclic(n) => cyclic(n),
            Spec::Dihedral(n) => dihedral(n),
            Spec::Frobenius(n, k) => frobenius(n, k),
            Spec::Symmetric(n) => symmetric(n),
            Spec::Alternating(n) => alternating(n),
            Spec::Psl2(q) => psl2(q),
            Spec::Psl3_2 => Ok(psl3_2()),
            Spec::Psl3_3 => Ok(psl3_3()),
            Spec::SemiAffine(q, p) => semi_affine(q, p),
            Spec::J1 => Ok(j1()),
            Spec::Product(ref parts) => {
                let mut acc = PermutationGroup::trivial(0);
                for p in parts {
                    acc = direct_product(&acc, &p.build()?)?;
                }
                Ok(acc)
            }
        }
    }

    /// Order predicted by the standard formula for the family.
    pub fn expected_order(&self) -> BigUint {
        match *self {
            Spec::Cyclic(n) => BigUint::from(n),
            Spec::Dihedral(n) => BigUint::from(2 * n),
            Spec::Frobenius(n, k) => BigUint::from(n * k),
            Spec::Symmetric(n) => factorial(n as u64),
            Spec::Alternating(n) => {
                let f = factorial(n as u64);
                if n >= 2 {
                    f / 2u32
                } else {
                    f
                }
            }
            Spec::Psl2(q) => {
                let q = BigUint::from(q);
                let d = if &q % 2u32 == BigUint::one() { 2u32 } else { 1 };
                &q * (&q * &q - 1u32) / d
            }
            Spec::Psl3_2 => BigUint::from(168u32),
            Spec::Psl3_3 => BigUint::from(5616u32),
            Spec::SemiAffine(q, p) => {
                let f = BigUint::from(q).pow(p as u32);
                &f * (&f - 1u32) * p
            }
            Spec::J1 => BigUint::from(175_560u32),
            Spec::Product(ref parts) => parts.iter().map(Spec::expected_order).product(),
        }
    }

    pub fn tags(&self) -> Vec<Tag> {
        let mut tags = Vec::new();
        let abelian = match *self {
            Spec::Cyclic(_) => true,
            Spec::Dihedral(n) => n <= 2,
            Spec::Symmetric(n) => n <= 2,
            Spec::Alternating(n) => n <= 3,
            Spec::Frobenius(_, k) => k == 1,
            Spec::Product(ref ps) => ps.iter().all(|p| p.tags().contains(&Tag::Abelian)),
            _ => false,
        };
        let solvable = match *self {
            Spec::Symmetric(n) | Spec::Alternating(n) => n <= 4,
            Spec::Psl2(_) | Spec::Psl3_2 | Spec::Psl3_3 | Spec::J1 => false,
            Spec::Product(ref ps) => ps.iter().all(|p| p.tags().contains(&Tag::Solvable)),
            _ => true,
        };
        let simple = match *self {
            Spec::Alternating(n) => n >= 5,
            Spec::Psl2(_) | Spec::Psl3_2 | Spec::Psl3_3 | Spec::J1 => true,
            Spec::Cyclic(n) => is_prime(n as u64),
            _ => false,
        };
        if abelian {
            tags.push(Tag::Abelian);
        }
        if solvable {
            tags.push(Tag::Solvable);
        }
        if simple {
            tags.push(Tag::Simple);
        }
        if *self == Spec::J1 {
            tags.push(Tag::SporadicStretch);
            tags.push(Tag::Extended);
        }
        tags
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: Spec,
    pub expected_order: BigUint,
    pub tags: Vec<Tag>,
}

impl CatalogEntry {
    pub fn new(name: &str) -> Result<Self> {
        let spec = Spec::parse(name)?;
        Ok(CatalogEntry {
            name: name.to_string(),
            expected_order: spec.expected_order(),
            tags: spec.tags(),
            spec,
        })
    }

    pub fn build(&self) -> Result<PermutationGroup> {
        self.spec.build()
    }

    pub fn has_tag(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }
}

/// Registry names of the default catalog, in listing order.
pub const DEFAULT_NAMES: &[&str] = &[
    "cyclic_6",
    "cyclic_15",
    "dihedral_3",
    "dihedral_4",
    "dihedral_5",
    "dihedral_6",
    "frobenius_7_3",
    "frobenius_5_4",
    "frobenius_7_6",
    "frobenius_13_3",
    "frobenius_11_5",
    "sym_4",
    "sym_5",
    "sym_6",
    "alt_4",
    "alt_5",
    "alt_6",
    "alt_7",
    "alt_8",
    "psl2_4",
    "psl2_5",
    "psl2_7",
    "psl2_8",
    "psl2_9",
    "psl2_11",
    "psl2_13",
    "psl2_31",
    "psl3_2",
    "psl3_3",
    "semiaffine_2_3",
    "semiaffine_3_2",
    "semiaffine_2_5",
    "c3xc5",
    "a5xc7",
    "s3xs3",
    "a4xc5",
    "s4xc3",
];

/// Entries outside the default battery.
pub const EXTENDED_NAMES: &[&str] = &["j1"];

pub fn default_catalog() -> Vec<CatalogEntry> {
    DEFAULT_NAMES
        .iter()
        .map(|n| CatalogEntry::new(n).expect("registry names parse"))
        .collect()
}

pub fn extended_catalog() -> Vec<CatalogEntry> {
    EXTENDED_NAMES
        .iter()
        .map(|n| CatalogEntry::new(n).expect("registry names parse"))
        .collect()
}

pub fn lookup(name: &str) -> Result<PermutationGroup> {
    CatalogEntry::new(name)?.build()
}

/// Whether `q` is accepted by [`psl2`].
pub fn psl2_supported(q: u64) -> bool {
    (4..=32).contains(&q) && prime_power(q).is_some()
}
