//! Linear algebra over F_q (q prime), enumeration of the Grassmannian
//! G_q(n, k), intersection dimensions, and full t-stars.
//!
//! Subspaces are stored as reduced-row-echelon bases, which makes equality
//! byte equality and gives a canonical, reproducible enumeration order:
//! bases compared as base-q integers read row-major.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{gaussian_binomial, is_prime, qpow};
use crate::family::{Family, GroundId};

// ---------------------------------------------------------------------------
// Matrices over F_q
// ---------------------------------------------------------------------------

/// Row-major matrix with entries in [0, q), q prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    q: u32,
    cols: usize,
    rows: Vec<Vec<u8>>,
}

impl FqMatrix {
    pub fn new(q: u32, cols: usize, rows: Vec<Vec<u8>>) -> Result<FqMatrix> {
        if !is_prime(u64::from(q)) {
            return Err(Error::UnsupportedField { q: u64::from(q) });
        }
        for r in &rows {
            if r.len() != cols || r.iter().any(|&e| u32::from(e) >= q) {
                return Err(Error::BadParameter(format!(
                    "bad row for a {cols}-column matrix over F_{q}: {r:?}"
                )));
            }
        }
        Ok(FqMatrix { q, cols, rows })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn inv_mod(&self, a: u8) -> u8 {
        // q is a small prime; Fermat inverse by scan is plenty
        for x in 1..self.q {
            if (u32::from(a) * x) % self.q == 1 {
                return x as u8;
            }
        }
        unreachable!("inverse of 0")
    }

    /// In-place reduction to reduced row echelon form; returns the rank.
    pub fn rref(&mut self) -> usize {
        let q = self.q;
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            let Some(src) = (pivot_row..self.rows.len()).find(|&r| self.rows[r][col] != 0) else {
                continue;
            };
            self.rows.swap(pivot_row, src);
            let inv = self.inv_mod(self.rows[pivot_row][col]);
            if inv != 1 {
                for e in self.rows[pivot_row].iter_mut() {
                    *e = ((u32::from(*e) * u32::from(inv)) % q) as u8;
                }
            }
            let pivot = self.rows[pivot_row].clone();
            for (r, row) in self.rows.iter_mut().enumerate() {
                if r == pivot_row || row[col] == 0 {
                    continue;
                }
                let factor = u32::from(row[col]);
                for (e, &p) in row.iter_mut().zip(&pivot) {
                    let sub = (factor * u32::from(p)) % q;
                    *e = ((u32::from(*e) + q - sub) % q) as u8;
                }
            }
            pivot_row += 1;
            if pivot_row == self.rows.len() {
                break;
            }
        }
        pivot_row
    }

    pub fn rank(mut self) -> usize {
        self.rref()
    }
}

/// Rank of a set of F_2 rows packed into machine words.
fn rank_gf2(rows: &mut [u64]) -> usize {
    let mut rank = 0usize;
    for bit in 0..64u32 {
        let mask = 1u64 << bit;
        let Some(src) = (rank..rows.len()).find(|&r| rows[r] & mask != 0) else {
            continue;
        };
        rows.swap(rank, src);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & mask != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A subspace of F_q^n held by its canonical reduced-row-echelon basis.
/// Two values are equal iff their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_n: u32,
    q: u32,
    basis: Vec<Vec<u8>>, // RREF, no zero rows, pivots strictly increasing
}

impl Subspace {
    /// Canonicalize an arbitrary spanning set of rows.
    pub fn from_rows(n: u32, q: u32, rows: Vec<Vec<u8>>) -> Result<Subspace> {
        let mut m = FqMatrix::new(q, n as usize, rows)?;
        let rank = m.rref();
        let basis = m.rows[..rank].to_vec();
        Ok(Subspace {
            ambient_n: n,
            q,
            basis,
        })
    }

    /// The zero subspace.
    pub fn zero(n: u32, q: u32) -> Subspace {
        Subspace {
            ambient_n: n,
            q,
            basis: Vec::new(),
        }
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn ambient(&self) -> (u32, u32) {
        (self.ambient_n, self.q)
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    /// Base-q digits of the basis read row-major; the enumeration sort key.
    fn digit_key(&self) -> Vec<u8> {
        self.basis.iter().flatten().copied().collect()
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_n != other.ambient_n || self.q != other.q {
            return Err(Error::AmbientMismatch {
                n1: self.ambient_n,
                q1: self.q,
                n2: other.ambient_n,
                q2: other.q,
            });
        }
        Ok(())
    }

    /// dim(self ∩ other) = dim self + dim other - rank of the stacked bases.
    pub fn intersection_dim(&self, other: &Subspace) -> Result<u32> {
        self.check_same_ambient(other)?;
        let stacked_rank = if self.q == 2 {
            let mut rows: Vec<u64> = self
                .basis
                .iter()
                .chain(&other.basis)
                .map(|r| pack_gf2(r))
                .collect();
            rank_gf2(&mut rows)
        } else {
            let rows: Vec<Vec<u8>> = self.basis.iter().chain(&other.basis).cloned().collect();
            FqMatrix::new(self.q, self.ambient_n as usize, rows)?.rank()
        };
        Ok(self.dim() + other.dim() - stacked_rank as u32)
    }

    /// Does this subspace contain `other`?
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.intersection_dim(other)? == other.dim())
    }

    /// Basis of self ∩ other by the Zassenhaus construction: reduce the
    /// block matrix [U | U; W | 0]; rows whose left half vanished carry the
    /// intersection in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let n = self.ambient_n as usize;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for u in &self.basis {
            let mut row = u.clone();
            row.extend_from_slice(u);
            rows.push(row);
        }
        for w in &other.basis {
            let mut row = w.clone();
            row.extend(std::iter::repeat_n(0, n));
            rows.push(row);
        }
        let mut m = FqMatrix::new(self.q, 2 * n, rows)?;
        let rank = m.rref();
        let meet: Vec<Vec<u8>> = m.rows[..rank]
            .iter()
            .filter(|r| r[..n].iter().all(|&e| e == 0))
            .map(|r| r[n..].to_vec())
            .collect();
        Subspace::from_rows(self.ambient_n, self.q, meet)
    }

    /// One basis row per line, entries as space-separated digits in [0, q).
    pub fn to_text(&self) -> String {
        self.basis
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn pack_gf2(row: &[u8]) -> u64 {
    row.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &e)| acc | (u64::from(e) << i))
}

// ---------------------------------------------------------------------------
// The Grassmannian ground set
// ---------------------------------------------------------------------------

/// All k-dimensional subspaces of F_q^n in canonical order, with an
/// optional precomputed table of pairwise intersection dimensions.
pub struct GrassmannGround {
    n: u32,
    k: u32,
    q: u32,
    subspaces: Vec<Subspace>,
    keys: Vec<Vec<u8>>,
    pair_dims: OnceLock<Vec<u8>>,
}

impl GrassmannGround {
    /// Enumerate G_q(n, k): every RREF basis with every choice of pivot
    /// columns and free entries, sorted by base-q row-major key.
    pub fn enumerate(n: u32, k: u32, q: u32, cap_elements: u64) -> Result<GrassmannGround> {
        if !is_prime(u64::from(q)) {
            return Err(Error::UnsupportedField { q: u64::from(q) });
        }
        if k > n {
            return Err(Error::BadParameter(format!("k = {k} exceeds n = {n}")));
        }
        let count = gaussian_binomial(u64::from(n), i64::from(k), u64::from(q));
        if count > BigInt::from(cap_elements) {
            return Err(Error::SizeLimit {
                what: format!("enumerating G_{q}({n}, {k})"),
                requested: count.to_string(),
                cap: cap_elements.to_string(),
            });
        }

        let mut subspaces = Vec::new();
        if k == 0 {
            subspaces.push(Subspace::zero(n, q));
        } else {
            let mut pivots = Vec::new();
            enumerate_pivot_sets(n as usize, k as usize, 0, &mut pivots, &mut |piv| {
                emit_rref_fills(n as usize, q, piv, &mut subspaces);
            });
        }
        debug_assert_eq!(BigInt::from(subspaces.len()), count);
        subspaces.sort_by_key(|a| a.digit_key());
        let keys = subspaces.iter().map(|s| s.digit_key()).collect();
        Ok(GrassmannGround {
            n,
            k,
            q,
            subspaces,
            keys,
            pair_dims: OnceLock::new(),
        })
    }

    pub fn params(&self) -> (u32, u32, u32) {
        (self.n, self.k, self.q)
    }

    pub fn id(&self) -> GroundId {
        GroundId::Grassmann {
            n: self.n,
            k: self.k,
            q: self.q,
        }
    }

    pub fn size(&self) -> u64 {
        self.subspaces.len() as u64
    }

    pub fn at(&self, idx: u32) -> &Subspace {
        &self.subspaces[idx as usize]
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn index_of(&self, s: &Subspace) -> Option<u32> {
        if s.ambient() != (self.n, self.q) || s.dim() != self.k {
            return None;
        }
        self.keys
            .binary_search(&s.digit_key())
            .ok()
            .map(|i| i as u32)
    }

    /// The pair table if it has already been built; used by callers that
    /// only want the speedup when it is free.
    pub fn cached_pair_table(&self) -> Option<&[u8]> {
        self.pair_dims.get().map(|v| v.as_slice())
    }

    /// The symmetric v x v table of pairwise intersection dimensions,
    /// built once on first use (parallel fill, then read-only).
    pub fn pair_table(&self, workers: usize) -> &[u8] {
        self.pair_dims.get_or_init(|| {
            let v = self.subspaces.len();
            let mut table = vec![0u8; v * v];
            let workers = workers.clamp(1, v.max(1));
            let chunk = v.div_ceil(workers);
            std::thread::scope(|scope| {
                for (w, stripe) in table.chunks_mut(chunk * v).enumerate() {
                    let lo = w * chunk;
                    let subspaces = &self.subspaces;
                    scope.spawn(move || {
                        for (r, row) in stripe.chunks_mut(v).enumerate() {
                            let i = lo + r;
                            for (j, cell) in row.iter_mut().enumerate() {
                                *cell = subspaces[i].intersection_dim(&subspaces[j]).unwrap() as u8;
                            }
                        }
                    });
                }
            });
            table
        })
    }
}

fn enumerate_pivot_sets(
    n: usize,
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if acc.len() == k {
        emit(acc);
        return;
    }
    let remaining = k - acc.len();
    for c in start..=(n - remaining) {
        acc.push(c);
        enumerate_pivot_sets(n, k, c + 1, acc, emit);
        acc.pop();
    }
}

/// All RREF matrices with the given pivot columns: odometer over the free
/// entries (row i, column j) with j past the pivot and j not a pivot column.
fn emit_rref_fills(n: usize, q: u32, pivots: &[usize], out: &mut Vec<Subspace>) {
    let k = pivots.len();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &p in pivots {
            v[p] = true;
        }
        v
    };
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for j in p + 1..n {
            if !is_pivot[j] {
                free.push((i, j));
            }
        }
    }
    let mut digits = vec![0u8; free.len()];
    loop {
        let mut rows = vec![vec![0u8; n]; k];
        for (i, &p) in pivots.iter().enumerate() {
            rows[i][p] = 1;
        }
        for (&(i, j), &d) in free.iter().zip(&digits) {
            rows[i][j] = d;
        }
        out.push(Subspace {
            ambient_n: n as u32,
            q,
            basis: rows,
        });
        // advance the odometer
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return;
            }
            digits[pos] += 1;
            if u32::from(digits[pos]) < q {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Counting and stars
// ---------------------------------------------------------------------------

/// Number of l-dimensional subspaces whose intersection with a fixed
/// k-dimensional subspace has dimension exactly j:
/// q^((k-j)(l-j)) [n-k, l-j]_q [k, j]_q.
pub fn count_at_intersection(n: u32, k: u32, l: u32, j: u32, q: u32) -> BigInt {
    if j > k.min(l) {
        return BigInt::from(0);
    }
    let e = u64::from(k - j) * u64::from(l - j);
    qpow(u64::from(q), e)
        * gaussian_binomial(u64::from(n - k), i64::from(l) - i64::from(j), u64::from(q))
        * gaussian_binomial(u64::from(k), i64::from(j), u64::from(q))
}

/// The family of all members of the ground containing `core`,
/// of size [n-t, k-t]_q when dim(core) = t.
pub fn full_t_star(ground: &GrassmannGround, core: &Subspace) -> Result<Family> {
    let (n, k, q) = ground.params();
    if core.ambient() != (n, q) {
        return Err(Error::AmbientMismatch {
            n1: core.ambient().0,
            q1: core.ambient().1,
            n2: n,
            q2: q,
        });
    }
    if core.dim() > k {
        return Err(Error::BadParameter(format!(
            "star core has dimension {} > k = {k}",
            core.dim()
        )));
    }
    let mut members = Vec::new();
    for (i, s) in ground.subspaces().iter().enumerate() {
        if s.contains(core)? {
            members.push(i as u32);
        }
    }
    Family::new(ground.id(), members, ground.size())
}

/// The canonical t-dimensional subspace spanned by the first t unit vectors.
pub fn coordinate_subspace(n: u32, q: u32, t: u32) -> Result<Subspace> {
    if t > n {
        return Err(Error::BadParameter(format!("t = {t} exceeds n = {n}")));
    }
    let mut rows = Vec::new();
    for i in 0..t as usize {
        let mut row = vec![0u8; n as usize];
        row[i] = 1;
        rows.push(row);
    }
    Subspace::from_rows(n, q, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    const CAP: u64 = 200_000;

    #[test]
    fn enumeration_counts() {
        let g = GrassmannGround::enumerate(4, 2, 2, CAP).unwrap();
        assert_eq!(g.size(), 35);
        let lines = GrassmannGround::enumerate(3, 1, 2, CAP).unwrap();
        assert_eq!(lines.size(), 7);
        let zero = GrassmannGround::enumerate(5, 0, 3, CAP).unwrap();
        assert_eq!(zero.size(), 1);
        assert_eq!(zero.at(0).dim(), 0);
        for (n, k, q) in [(5u32, 2u32, 2u32), (5, 2, 3), (4, 3, 3), (6, 3, 2)] {
            let g = GrassmannGround::enumerate(n, k, q, CAP).unwrap();
            let want = gaussian_binomial(u64::from(n), i64::from(k), u64::from(q));
            assert_eq!(BigInt::from(g.size()), want, "G_{q}({n},{k})");
        }
    }

    #[test]
    fn enumeration_is_sorted_distinct_and_indexable() {
        let g = GrassmannGround::enumerate(4, 2, 3, CAP).unwrap();
        for w in g.subspaces().windows(2) {
            assert!(w[0].digit_key() < w[1].digit_key());
        }
        for (i, s) in g.subspaces().iter().enumerate() {
            assert_eq!(g.index_of(s), Some(i as u32));
            // RREF shape: pivots strictly increasing, unit columns
            let mut last_pivot = None;
            for row in s.basis() {
                let p = row.iter().position(|&e| e != 0).unwrap();
                assert_eq!(row[p], 1);
                if let Some(lp) = last_pivot {
                    assert!(p > lp);
                }
                for other in s.basis() {
                    if other != row {
                        assert_eq!(other[p], 0);
                    }
                }
                last_pivot = Some(p);
            }
        }
    }

    #[test]
    fn enumeration_guards() {
        assert!(matches!(
            GrassmannGround::enumerate(4, 2, 4, CAP),
            Err(Error::UnsupportedField { q: 4 })
        ));
        assert!(matches!(
            GrassmannGround::enumerate(10, 5, 3, 1000),
            Err(Error::SizeLimit { .. })
        ));
        let a = coordinate_subspace(4, 2, 1).unwrap();
        let b = coordinate_subspace(5, 2, 1).unwrap();
        assert!(matches!(
            a.intersection_dim(&b),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn intersection_dims() {
        let g = GrassmannGround::enumerate(4, 2, 2, CAP).unwrap();
        for s in g.subspaces() {
            assert_eq!(s.intersection_dim(s).unwrap(), 2);
        }
        let lines = GrassmannGround::enumerate(3, 1, 2, CAP).unwrap();
        for (i, a) in lines.subspaces().iter().enumerate() {
            for b in &lines.subspaces()[i + 1..] {
                assert_eq!(a.intersection_dim(b).unwrap(), 0);
            }
        }
        // symmetry and the min bound, q = 2 bit path vs generic both covered
        for q in [2u32, 3] {
            let g = GrassmannGround::enumerate(4, 2, q, CAP).unwrap();
            for a in g.subspaces().iter().step_by(3) {
                for b in g.subspaces().iter().step_by(5) {
                    let d1 = a.intersection_dim(b).unwrap();
                    assert_eq!(d1, b.intersection_dim(a).unwrap());
                    assert!(d1 <= a.dim().min(b.dim()));
                }
            }
        }
    }

    #[test]
    fn fixed_plane_meets_18_planes_in_a_line() {
        let g = GrassmannGround::enumerate(4, 2, 2, CAP).unwrap();
        let w = g.at(0);
        let count = g
            .subspaces()
            .iter()
            .filter(|u| w.intersection_dim(u).unwrap() == 1)
            .count();
        assert_eq!(count, 18);
    }

    #[test]
    fn counting_formula_examples() {
        assert_eq!(count_at_intersection(4, 2, 2, 1, 2), BigInt::from(18));
        assert_eq!(count_at_intersection(4, 2, 2, 2, 2), BigInt::from(1));
        assert_eq!(count_at_intersection(4, 2, 2, 0, 2), BigInt::from(16));
        assert_eq!(count_at_intersection(4, 2, 2, 3, 2), BigInt::zero());
    }

    /// The counting invariant quantified over every base point: with the
    /// pair table in hand, tally distances from each W and compare.
    #[test]
    fn counting_formula_holds_at_every_base_point() {
        for q in [2u32, 3] {
            for n in 1..=5u32 {
                for k in 0..=n {
                    let g = GrassmannGround::enumerate(n, k, q, CAP).unwrap();
                    let v = g.size() as usize;
                    let table = g.pair_table(4);
                    let expected: Vec<BigInt> = (0..=k)
                        .map(|j| count_at_intersection(n, k, k, j, q))
                        .collect();
                    for w in 0..v {
                        let mut seen = vec![0u64; k as usize + 1];
                        for u in 0..v {
                            seen[table[w * v + u] as usize] += 1;
                        }
                        for (j, want) in expected.iter().enumerate() {
                            assert_eq!(
                                BigInt::from(seen[j]),
                                *want,
                                "({n},{k},{q}) base {w} j={j}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn counting_formula_matches_enumeration() {
        for q in [2u32, 3] {
            for n in 1..=5u32 {
                for k in 0..=n {
                    let count = gaussian_binomial(u64::from(n), i64::from(k), u64::from(q));
                    if count > BigInt::from(400) {
                        continue; // keep the double loop quick; larger cases run in release sweeps
                    }
                    let g = GrassmannGround::enumerate(n, k, q, CAP).unwrap();
                    for l in 0..=n {
                        let h = GrassmannGround::enumerate(n, l, q, CAP).unwrap();
                        for w in g.subspaces().iter().take(3) {
                            let mut total = BigInt::zero();
                            for j in 0..=k.min(l) {
                                let formula = count_at_intersection(n, k, l, j, q);
                                let seen = h
                                    .subspaces()
                                    .iter()
                                    .filter(|u| w.intersection_dim(u).unwrap() == j)
                                    .count();
                                assert_eq!(formula, BigInt::from(seen), "({n},{k},{l},{j},{q})");
                                total += formula;
                            }
                            assert_eq!(
                                total,
                                gaussian_binomial(u64::from(n), i64::from(l), u64::from(q))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_idempotent_on_random_bases() {
        let mut rng = StdRng::seed_from_u64(42);
        for q in [2u32, 3, 5] {
            let g = GrassmannGround::enumerate(4, 2, q, CAP).unwrap();
            for s in g.subspaces().iter().step_by(7) {
                // random invertible recombination of the basis rows
                for _ in 0..5 {
                    let b = s.basis();
                    let (a11, a12, a21, a22) = loop {
                        let c: Vec<u32> = (0..4).map(|_| rng.random_range(0..q)).collect();
                        let det = ((c[0] * c[3]) % q + q - (c[1] * c[2]) % q) % q;
                        if det != 0 {
                            break (c[0], c[1], c[2], c[3]);
                        }
                    };
                    let n = b[0].len();
                    let mix = |x: u32, y: u32| -> Vec<u8> {
                        (0..n)
                            .map(|j| ((x * u32::from(b[0][j]) + y * u32::from(b[1][j])) % q) as u8)
                            .collect()
                    };
                    let rows = vec![mix(a11, a12), mix(a21, a22)];
                    let re = Subspace::from_rows(4, q, rows).unwrap();
                    assert_eq!(&re, s);
                }
            }
        }
    }

    #[test]
    fn star_sizes() {
        let g = GrassmannGround::enumerate(4, 2, 2, CAP).unwrap();
        let line = coordinate_subspace(4, 2, 1).unwrap();
        let star = full_t_star(&g, &line).unwrap();
        assert_eq!(star.m(), 7);
        for &i in star.members() {
            assert!(g.at(i).contains(&line).unwrap());
        }

        // t = k: the singleton {core}
        let plane = g.at(5).clone();
        let single = full_t_star(&g, &plane).unwrap();
        assert_eq!(single.m(), 1);
        assert_eq!(g.at(single.members()[0]), &plane);

        let g63 = GrassmannGround::enumerate(6, 3, 2, CAP).unwrap();
        let plane2 = coordinate_subspace(6, 2, 2).unwrap();
        assert_eq!(full_t_star(&g63, &plane2).unwrap().m(), 15);

        let too_big = coordinate_subspace(4, 2, 3).unwrap();
        assert!(full_t_star(&g, &too_big).is_err());
    }

    #[test]
    fn intersection_basis_is_the_meet() {
        for q in [2u32, 3] {
            let g = GrassmannGround::enumerate(4, 2, q, CAP).unwrap();
            for a in g.subspaces().iter().step_by(4) {
                for b in g.subspaces().iter().step_by(5) {
                    let meet = a.intersection(b).unwrap();
                    assert_eq!(meet.dim(), a.intersection_dim(b).unwrap());
                    assert!(a.contains(&meet).unwrap());
                    assert!(b.contains(&meet).unwrap());
                }
            }
        }
    }

    #[test]
    fn pair_table_agrees_with_direct_queries() {
        let g = GrassmannGround::enumerate(4, 2, 2, CAP).unwrap();
        let t = g.pair_table(3);
        let v = g.size() as usize;
        for i in 0..v {
            for j in 0..v {
                assert_eq!(
                    u32::from(t[i * v + j]),
                    g.at(i as u32).intersection_dim(g.at(j as u32)).unwrap()
                );
            }
        }
    }

    #[test]
    fn subspace_text_round_trip() {
        let g = GrassmannGround::enumerate(4, 2, 3, CAP).unwrap();
        for s in g.subspaces().iter().step_by(11) {
            let text = s.to_text();
            let rows: Vec<Vec<u8>> = text
                .lines()
                .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
                .collect();
            let back = Subspace::from_rows(4, 3, rows).unwrap();
            assert_eq!(&back, s);
        }
    }
}
