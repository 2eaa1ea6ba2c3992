//! Symmetric group machinery: permutations, cycle types, partitions and
//! Young-diagram combinatorics, irreducible character values, conjugacy
//! class sizes, point-stabilizer cosets, and the block construction of
//! families made from disjoint 1-cosets plus 2-cosets.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::factorial;
use crate::family::{Family, GroundId};

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Partition of n: nonincreasing positive parts. Indexes irreducible
/// characters, conjugacy classes and Cayley-graph eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.is_empty() {
            return Err(Error::BadParameter(
                "partition needs at least one part".into(),
            ));
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::BadParameter(format!(
                    "partition parts must be nonincreasing, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::BadParameter(
                "partition parts must be positive".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The single-row partition (n).
    pub fn row(n: u32) -> Partition {
        Partition { parts: vec![n] }
    }

    /// The single-column partition (1, ..., 1).
    pub fn column(n: u32) -> Partition {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// The hook partition (n-1, 1).
    pub fn near_row(n: u32) -> Partition {
        assert!(n >= 2);
        Partition {
            parts: vec![n - 1, 1],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts equal to 1; for a cycle type this is the
    /// number of fixed points of the class.
    pub fn fixed_parts(&self) -> u32 {
        self.parts.iter().filter(|&&p| p == 1).count() as u32
    }

    /// Column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let cols = self.parts[0] as usize;
        let mut t = Vec::with_capacity(cols);
        for j in 0..cols {
            t.push(self.parts.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition { parts: t }
    }

    /// Sign of the conjugacy class with this cycle type: (-1)^(n - #parts).
    pub fn class_sign(&self) -> i32 {
        if (self.n() as usize - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let parts: Result<Vec<u32>> = s
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect();
        Partition::new(parts?)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// All partitions of n in descending lexicographic order: (n) first,
/// (1, ..., 1) last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            prefix.push(p);
            rec(rem - p, p, prefix, out);
            prefix.pop();
        }
    }
    rec(n, n, &mut prefix, &mut out);
    out
}

/// Dimension of the irreducible representation indexed by a partition,
/// via the hook length formula: n! divided by the product of all hook
/// lengths of the Young diagram.
pub fn dim_irrep(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    let cols = lambda.transpose();
    let colparts = cols.parts();
    let mut denom = BigInt::one();
    for (i, &row_len) in parts.iter().enumerate() {
        for j in 0..row_len as usize {
            let hook = (row_len as usize - j) + (colparts[j] as usize - i) - 1;
            denom *= hook as u64;
        }
    }
    factorial(u64::from(lambda.n())) / denom
}

/// Size of the conjugacy class of cycle type mu: n! / prod_i (i^{m_i} m_i!)
/// where m_i is the multiplicity of part i.
pub fn class_size(mu: &Partition) -> BigInt {
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut centralizer = BigInt::one();
    for (&part, &m) in &mult {
        centralizer *= BigInt::from(part).pow(m);
        centralizer *= factorial(u64::from(m));
    }
    factorial(u64::from(mu.n())) / centralizer
}

// ---------------------------------------------------------------------------
// Characters (Murnaghan-Nakayama border-strip recursion)
// ---------------------------------------------------------------------------

type CharKey = (Vec<u32>, Vec<u32>);

fn char_cache() -> &'static RwLock<HashMap<CharKey, BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<CharKey, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Irreducible character value of the representation indexed by `lambda`
/// on the conjugacy class of cycle type `mu`, computed by the
/// Murnaghan-Nakayama border-strip recursion with memoization.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.n() != mu.n() {
        return Err(Error::BadParameter(format!(
            "character: {lambda} is a partition of {}, {mu} of {}",
            lambda.n(),
            mu.n()
        )));
    }
    Ok(mn_char(lambda.parts(), mu.parts()))
}

fn mn_char(lambda: &[u32], mu: &[u32]) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one(); // mu is empty too
    }
    let key: CharKey = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = char_cache().read().unwrap().get(&key) {
        return v.clone();
    }

    let strip = mu[0] as u64;
    let rest = &mu[1..];
    // beta numbers: strictly decreasing lambda_i + (L-1-i)
    let rows = lambda.len();
    let betas: Vec<u64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| u64::from(p) + (rows - 1 - i) as u64)
        .collect();
    let mut acc = BigInt::zero();
    for (i, &b) in betas.iter().enumerate() {
        if b < strip {
            continue;
        }
        let target = b - strip;
        if betas.contains(&target) {
            continue;
        }
        // leg length of the removed strip = betas strictly between target and b
        let leg = betas.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = betas.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let next: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(r, &beta)| (beta - (rows - 1 - r) as u64) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sub = mn_char(&next, rest);
        if leg % 2 == 0 {
            acc += sub;
        } else {
            acc -= sub;
        }
    }

    char_cache().write().unwrap().insert(key, acc.clone());
    acc
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// Permutation of 1..n in one-line notation (stored 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    /// Build from 0-based images, validating bijectivity.
    pub fn new(image: Vec<u8>) -> Result<Permutation> {
        let n = image.len();
        if n == 0 || n > 20 {
            return Err(Error::BadParameter(format!(
                "permutation degree {n} unsupported"
            )));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if (v as usize) >= n || seen[v as usize] {
                return Err(Error::BadParameter(format!(
                    "not a bijection on [{n}]: {image:?}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: u32) -> Permutation {
        Permutation {
            image: (0..n as u8).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.image.len() as u32
    }

    /// 0-based image of 0-based point i.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { image: inv }
    }

    /// (self o other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.image.len(), other.image.len()));
        }
        Ok(Permutation {
            image: other
                .image
                .iter()
                .map(|&v| self.image[v as usize])
                .collect(),
        })
    }

    /// Multiset of cycle lengths, as a partition of n.
    pub fn cycle_type(&self) -> Partition {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut lens: Vec<u32> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.image[cur] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: lens }
    }

    pub fn fixed_points(&self) -> u32 {
        self.image
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i == v as usize)
            .count() as u32
    }

    /// Parse 1-based one-line notation, e.g. "2 1 3".
    pub fn parse(s: &str) -> Result<Permutation> {
        let vals: Result<Vec<u8>> = s
            .split_whitespace()
            .map(|t| {
                let v: u8 = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad image value {t:?}")))?;
                if v == 0 {
                    return Err(Error::Parse("one-line notation is 1-based".into()));
                }
                Ok(v - 1)
            })
            .collect();
        Permutation::new(vals?)
    }
}

impl std::fmt::Display for Permutation {
    /// 1-based one-line notation.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.image.iter().map(|&v| (v + 1).to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

/// Number of positions where the two permutations agree.
pub fn int_perm(p: &Permutation, r: &Permutation) -> Result<u32> {
    if p.n() != r.n() {
        return Err(Error::SizeMismatch(p.image.len(), r.image.len()));
    }
    Ok(p.image.iter().zip(&r.image).filter(|(a, b)| a == b).count() as u32)
}

// ---------------------------------------------------------------------------
// The ground set S_n
// ---------------------------------------------------------------------------

/// All n! permutations in lexicographic one-line order; the identity has
/// index 0.
pub struct SymmetricGround {
    n: u32,
    perms: Vec<Permutation>,
    pair_ints: OnceLock<Vec<u8>>,
}

impl SymmetricGround {
    pub fn enumerate(n: u32, cap_n: u32) -> Result<SymmetricGround> {
        if n == 0 {
            return Err(Error::BadParameter("symmetric ground needs n >= 1".into()));
        }
        if n > cap_n {
            return Err(Error::SizeLimit {
                what: format!("enumerating S_{n}"),
                requested: factorial(u64::from(n)).to_string(),
                cap: format!("n <= {cap_n}"),
            });
        }
        let mut perms = Vec::with_capacity(factorial_u64(n) as usize);
        let mut image: Vec<u8> = Vec::with_capacity(n as usize);
        let mut used = vec![false; n as usize];
        fn rec(n: usize, image: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if image.len() == n {
                out.push(Permutation {
                    image: image.clone(),
                });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    image.push(v as u8);
                    rec(n, image, used, out);
                    image.pop();
                    used[v] = false;
                }
            }
        }
        rec(n as usize, &mut image, &mut used, &mut perms);
        Ok(SymmetricGround {
            n,
            perms,
            pair_ints: OnceLock::new(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> u64 {
        self.perms.len() as u64
    }

    pub fn id(&self) -> GroundId {
        GroundId::Symmetric { n: self.n }
    }

    pub fn at(&self, idx: u32) -> &Permutation {
        &self.perms[idx as usize]
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn cached_pair_table(&self) -> Option<&[u8]> {
        self.pair_ints.get().map(|v| v.as_slice())
    }

    /// The symmetric v x v table of pairwise agreement counts, built once
    /// (parallel fill, then read-only).
    pub fn pair_table(&self, workers: usize) -> &[u8] {
        self.pair_ints.get_or_init(|| {
            let v = self.perms.len();
            let mut table = vec![0u8; v * v];
            let workers = workers.clamp(1, v.max(1));
            let chunk = v.div_ceil(workers);
            std::thread::scope(|scope| {
                for (w, stripe) in table.chunks_mut(chunk * v).enumerate() {
                    let lo = w * chunk;
                    let perms = &self.perms;
                    scope.spawn(move || {
                        for (r, row) in stripe.chunks_mut(v).enumerate() {
                            let a = &perms[lo + r];
                            for (j, cell) in row.iter_mut().enumerate() {
                                *cell = int_perm(a, &perms[j]).unwrap() as u8;
                            }
                        }
                    });
                }
            });
            table
        })
    }

    /// Index in lexicographic order via the Lehmer code; O(n^2), no lookup table.
    pub fn index_of(&self, p: &Permutation) -> Result<u32> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch(p.image.len(), self.n as usize));
        }
        let img = &p.image;
        let n = img.len();
        let mut idx: u64 = 0;
        for i in 0..n {
            let smaller_later = img[i + 1..].iter().filter(|&&v| v < img[i]).count() as u64;
            idx += smaller_later * factorial_u64((n - 1 - i) as u32);
        }
        Ok(idx as u32)
    }
}

fn factorial_u64(n: u32) -> u64 {
    (2..=u64::from(n)).product::<u64>().max(1)
}

// ---------------------------------------------------------------------------
// Cosets and the disjoint-coset block construction
// ---------------------------------------------------------------------------

/// A t-coset descriptor: pins sigma(i_s) = j_s for s = 1..t
/// (positions and values 1-based, pairwise distinct on each side).
#[derive(Clone, Debug)]
pub struct CosetSpec {
    pairs: Vec<(u32, u32)>,
}

impl CosetSpec {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<CosetSpec> {
        let mut is: Vec<u32> = pairs.iter().map(|p| p.0).collect();
        let mut js: Vec<u32> = pairs.iter().map(|p| p.1).collect();
        is.sort_unstable();
        js.sort_unstable();
        if is.windows(2).any(|w| w[0] == w[1]) || js.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadParameter(
                "coset pins must be pairwise distinct".into(),
            ));
        }
        if pairs.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(Error::BadParameter("coset pins are 1-based".into()));
        }
        Ok(CosetSpec { pairs })
    }

    /// Parse "1:1,2:3" into pin pairs.
    pub fn parse(s: &str) -> Result<CosetSpec> {
        let mut pairs = Vec::new();
        for tok in s.split(',').filter(|t| !t.trim().is_empty()) {
            let (i, j) = tok
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad coset pin {tok:?}, want i:j")))?;
            let parse_u32 = |t: &str| -> Result<u32> {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coset pin value {t:?}")))
            };
            pairs.push((parse_u32(i)?, parse_u32(j)?));
        }
        CosetSpec::new(pairs)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn t(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn matches(&self, p: &Permutation) -> bool {
        self.pairs
            .iter()
            .all(|&(i, j)| p.apply((i - 1) as usize) == (j - 1) as usize)
    }
}

/// All permutations with sigma(i_s) = j_s; size (n-t)!.
pub fn coset_family(ground: &SymmetricGround, spec: &CosetSpec) -> Result<Family> {
    let n = ground.n();
    if spec.pairs.iter().any(|&(i, j)| i > n || j > n) {
        return Err(Error::BadParameter(format!("coset pins exceed n = {n}")));
    }
    let members: Vec<u32> = ground
        .perms
        .iter()
        .enumerate()
        .filter(|(_, p)| spec.matches(p))
        .map(|(i, _)| i as u32)
        .collect();
    Family::new(ground.id(), members, ground.size())
}

/// Shape parameters of the block construction of a given size:
/// a0 full 1-cosets, a1 full 2-cosets inside one further 1-coset, and a
/// padding remainder taken from the next 2-coset in enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockShape {
    pub a0: u64,
    pub a1: u64,
    pub pad: u64,
}

pub fn block_shape(n: u32, s: u64) -> Result<BlockShape> {
    let f1 = factorial_u64(n - 1);
    let f2 = factorial_u64(n.saturating_sub(2));
    let a0 = s / f1;
    if a0 > u64::from(n) - 1 {
        return Err(Error::BadParameter(format!(
            "size {s} needs {a0} disjoint 1-cosets, only {} available",
            n - 1
        )));
    }
    let r = s - a0 * f1;
    let a1 = r / f2;
    let pad = r - a1 * f2;
    Ok(BlockShape { a0, a1, pad })
}

/// The family of size s made of a0 1-cosets (sigma(1) = 2, ..., a0+1),
/// a1 2-cosets (sigma(1) = 1, sigma(2) = 2, ..., a1+1), padded to exactly
/// s members from the next 2-coset in enumeration order.
pub fn t0_family(ground: &SymmetricGround, s: u64) -> Result<Family> {
    let n = ground.n();
    if s > ground.size() {
        return Err(Error::BadParameter(format!(
            "size {s} exceeds |S_{n}| = {}",
            ground.size()
        )));
    }
    let shape = block_shape(n, s)?;
    let mut members: Vec<u32> = Vec::with_capacity(s as usize);
    for (idx, p) in ground.perms.iter().enumerate() {
        let img1 = p.apply(0) as u32 + 1;
        if img1 >= 2 && img1 <= shape.a0 as u32 + 1 {
            members.push(idx as u32);
        } else if img1 == 1 && n >= 2 {
            let img2 = p.apply(1) as u32 + 1;
            if img2 >= 2 && img2 <= shape.a1 as u32 + 1 {
                members.push(idx as u32);
            }
        }
    }
    if shape.pad > 0 {
        let target = shape.a1 as u32 + 2;
        let mut taken = 0u64;
        for (idx, p) in ground.perms.iter().enumerate() {
            if taken == shape.pad {
                break;
            }
            if p.apply(0) == 0 && p.apply(1) as u32 + 1 == target {
                members.push(idx as u32);
                taken += 1;
            }
        }
    }
    let fam = Family::new(ground.id(), members, ground.size())?;
    debug_assert_eq!(fam.m(), s);
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cycle_type_and_fixed_points() {
        let id4 = Permutation::identity(4);
        assert_eq!(id4.cycle_type(), part(&[1, 1, 1, 1]));
        assert_eq!(id4.fixed_points(), 4);
        let p = Permutation::parse("2 1 3").unwrap();
        assert_eq!(p.cycle_type(), part(&[2, 1]));
        assert_eq!(p.fixed_points(), 1);
        let c = Permutation::parse("2 3 1").unwrap();
        assert_eq!(c.cycle_type(), part(&[3]));
        assert_eq!(c.fixed_points(), 0);
    }

    #[test]
    fn fixed_points_agree_with_cycle_type_across_s4() {
        let g = SymmetricGround::enumerate(4, 8).unwrap();
        let mut derangements = 0;
        for p in g.perms() {
            assert_eq!(p.fixed_points(), p.cycle_type().fixed_parts());
            if p.fixed_points() == 0 {
                derangements += 1;
            }
        }
        assert_eq!(BigInt::from(derangements), crate::exactnum::derangement(4));
    }

    #[test]
    fn int_perm_values() {
        let a = Permutation::parse("1 2 3").unwrap();
        let b = Permutation::parse("2 1 3").unwrap();
        assert_eq!(int_perm(&a, &a).unwrap(), 3);
        assert_eq!(int_perm(&a, &b).unwrap(), 1);
        let c = Permutation::parse("2 3 1").unwrap();
        let d = Permutation::parse("3 1 2").unwrap();
        assert_eq!(int_perm(&c, &d).unwrap(), 0);
        assert!(int_perm(&a, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn int_perm_is_fixed_points_of_quotient() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.random_range(2..=7u32);
            let p = random_perm(&mut rng, n);
            let r = random_perm(&mut rng, n);
            let quo = p.compose(&r.inverse()).unwrap();
            assert_eq!(int_perm(&p, &r).unwrap(), quo.fixed_points());
        }
    }

    fn random_perm(rng: &mut StdRng, n: u32) -> Permutation {
        let mut v: Vec<u8> = (0..n as u8).collect();
        for i in (1..v.len()).rev() {
            let j = rng.random_range(0..=i);
            v.swap(i, j);
        }
        Permutation::new(v).unwrap()
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of(1), vec![part(&[1])]);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(8).len(), 22);
        let ps = partitions_of(5);
        assert_eq!(ps[0], part(&[5]));
        assert_eq!(ps[1], part(&[4, 1]));
        assert_eq!(*ps.last().unwrap(), part(&[1, 1, 1, 1, 1]));
        // descending lexicographic
        for w in ps.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }

    #[test]
    fn transpose_examples_and_involution() {
        assert_eq!(part(&[6]).transpose(), part(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(part(&[3, 2, 2]).transpose(), part(&[3, 3, 1]));
        for n in 1..=10 {
            for lam in partitions_of(n) {
                assert_eq!(lam.transpose().transpose(), lam);
            }
        }
    }

    #[test]
    fn irrep_dimensions() {
        for n in 2..=8 {
            assert_eq!(dim_irrep(&Partition::row(n)), BigInt::from(1));
            assert_eq!(dim_irrep(&Partition::near_row(n)), BigInt::from(n - 1));
        }
        assert_eq!(dim_irrep(&part(&[3, 1, 1])), BigInt::from(6));
        assert_eq!(dim_irrep(&part(&[3, 2])), BigInt::from(5));
        assert_eq!(dim_irrep(&part(&[2, 2])), BigInt::from(2));
    }

    #[test]
    fn dim_squares_sum_to_group_order_and_transpose_invariance() {
        for n in 1..=10u32 {
            let mut sum = BigInt::zero();
            for lam in partitions_of(n) {
                let d = dim_irrep(&lam);
                assert_eq!(d, dim_irrep(&lam.transpose()), "{lam}");
                sum += &d * &d;
            }
            assert_eq!(sum, factorial(u64::from(n)), "n = {n}");
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&part(&[1, 1, 1])), BigInt::one());
        assert_eq!(class_size(&part(&[2, 1])), BigInt::from(3));
        assert_eq!(class_size(&part(&[3, 2])), BigInt::from(20));
        for n in 1..=9u32 {
            let total: BigInt = partitions_of(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(u64::from(n)));
        }
    }

    /// Classical character tables of S_3 and S_4, rows = irreps in
    /// descending-lex partition order, columns = classes in the same order.
    #[test]
    fn characters_match_known_tables() {
        let s3 = [
            ((3u32, vec![3u32]), vec![1i64, 1, 1]),
            ((3, vec![2, 1]), vec![2, 0, -1]),
            ((3, vec![1, 1, 1]), vec![1, -1, 1]),
        ];
        let classes3 = [part(&[1, 1, 1]), part(&[2, 1]), part(&[3])];
        for ((_, lam), vals) in &s3 {
            let lam = part(lam);
            for (mu, want) in classes3.iter().zip(vals) {
                assert_eq!(
                    character(&lam, mu).unwrap(),
                    BigInt::from(*want),
                    "{lam} at {mu}"
                );
            }
        }

        let classes4 = [
            part(&[1, 1, 1, 1]),
            part(&[2, 1, 1]),
            part(&[2, 2]),
            part(&[3, 1]),
            part(&[4]),
        ];
        let s4: Vec<(Partition, Vec<i64>)> = vec![
            (part(&[4]), vec![1, 1, 1, 1, 1]),
            (part(&[3, 1]), vec![3, 1, -1, 0, -1]),
            (part(&[2, 2]), vec![2, 0, 2, -1, 0]),
            (part(&[2, 1, 1]), vec![3, -1, -1, 0, 1]),
            (part(&[1, 1, 1, 1]), vec![1, -1, 1, 1, -1]),
        ];
        for (lam, vals) in &s4 {
            for (mu, want) in classes4.iter().zip(vals) {
                assert_eq!(
                    character(lam, mu).unwrap(),
                    BigInt::from(*want),
                    "{lam} at {mu}"
                );
            }
        }
    }

    #[test]
    fn character_structure() {
        for n in 1..=8u32 {
            let id_class = Partition::column(n);
            for lam in partitions_of(n) {
                // trace at the identity is the dimension
                assert_eq!(character(&lam, &id_class).unwrap(), dim_irrep(&lam));
            }
            if n < 2 {
                continue;
            }
            let hook = Partition::near_row(n);
            let sign = Partition::column(n);
            for mu in partitions_of(n) {
                let fixm1 = i64::from(mu.fixed_parts()) - 1;
                assert_eq!(character(&hook, &mu).unwrap(), BigInt::from(fixm1), "{mu}");
                assert_eq!(
                    character(&sign, &mu).unwrap(),
                    BigInt::from(mu.class_sign()),
                    "{mu}"
                );
            }
        }
        // spelled-out spot checks
        assert_eq!(
            character(&part(&[2, 1]), &part(&[2, 1])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            character(&part(&[1, 1, 1, 1, 1]), &part(&[3, 2])).unwrap(),
            -BigInt::one()
        );
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=8u32 {
            let lams = partitions_of(n);
            let nf = factorial(u64::from(n));
            for a in &lams {
                for b in &lams {
                    let mut sum = BigInt::zero();
                    for mu in &lams {
                        sum +=
                            class_size(mu) * character(a, mu).unwrap() * character(b, mu).unwrap();
                    }
                    let want = if a == b { nf.clone() } else { BigInt::zero() };
                    assert_eq!(sum, want, "rows {a} and {b} of S_{n}");
                }
            }
        }
    }

    #[test]
    fn ground_enumeration_and_indexing() {
        let g = SymmetricGround::enumerate(4, 8).unwrap();
        assert_eq!(g.size(), 24);
        assert_eq!(*g.at(0), Permutation::identity(4));
        for (i, p) in g.perms().iter().enumerate() {
            assert_eq!(g.index_of(p).unwrap() as usize, i);
        }
        // lexicographic order of one-line images
        for w in g.perms().windows(2) {
            assert!(w[0].image < w[1].image);
        }
        assert!(SymmetricGround::enumerate(9, 8).is_err());
    }

    #[test]
    fn coset_families() {
        let g3 = SymmetricGround::enumerate(3, 8).unwrap();
        let c11 = coset_family(&g3, &CosetSpec::parse("1:1").unwrap()).unwrap();
        let members: Vec<String> = c11
            .members()
            .iter()
            .map(|&i| g3.at(i).to_string())
            .collect();
        assert_eq!(members, vec!["1 2 3", "1 3 2"]);

        let all = coset_family(&g3, &CosetSpec::new(vec![]).unwrap()).unwrap();
        assert_eq!(all.m(), 6);

        let g4 = SymmetricGround::enumerate(4, 8).unwrap();
        let swap = coset_family(&g4, &CosetSpec::parse("1:2,2:1").unwrap()).unwrap();
        assert_eq!(swap.m(), 2);

        assert!(CosetSpec::parse("1:1,1:2").is_err());
        assert!(coset_family(&g3, &CosetSpec::parse("4:1").unwrap()).is_err());
    }

    #[test]
    fn block_family_shapes() {
        let g4 = SymmetricGround::enumerate(4, 8).unwrap();

        // s = (n-1)!: exactly one 1-coset, namely sigma(1) = 2
        let f6 = t0_family(&g4, 6).unwrap();
        assert_eq!(f6.m(), 6);
        assert!(f6.members().iter().all(|&i| g4.at(i).apply(0) == 1));

        // s = 7: one 1-coset plus one padding permutation from C_{1->1,2->2}
        let shape7 = block_shape(4, 7).unwrap();
        assert_eq!(
            shape7,
            BlockShape {
                a0: 1,
                a1: 0,
                pad: 1
            }
        );
        let f7 = t0_family(&g4, 7).unwrap();
        assert_eq!(f7.m(), 7);

        // s = 8: C_{1->2} together with C_{1->1,2->2}
        let shape8 = block_shape(4, 8).unwrap();
        assert_eq!(
            shape8,
            BlockShape {
                a0: 1,
                a1: 1,
                pad: 0
            }
        );
        let f8 = t0_family(&g4, 8).unwrap();
        assert_eq!(f8.m(), 8);
        for &i in f8.members() {
            let p = g4.at(i);
            assert!(p.apply(0) == 1 || (p.apply(0) == 0 && p.apply(1) == 1));
        }

        assert_eq!(t0_family(&g4, 0).unwrap().m(), 0);
        // n! needs n disjoint 1-cosets, one too many
        assert!(t0_family(&g4, 24).is_err());
        for s in [1u64, 5, 11, 12, 17, 23] {
            assert_eq!(t0_family(&g4, s).unwrap().m(), s);
        }
    }

    #[test]
    fn partition_parse_display() {
        let p = Partition::parse("4,1").unwrap();
        assert_eq!(p, part(&[4, 1]));
        assert_eq!(p.to_string(), "4,1");
        assert!(Partition::parse("1,4").is_err());
        assert!(Partition::parse("0").is_err());
    }
}
