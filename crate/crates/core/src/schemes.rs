//! Association-scheme core: exact eigenvalue and dual-eigenvalue tables for
//! the Grassmann scheme (generalized Eberlein and dual Hahn polynomials) and
//! the conjugacy scheme of S_n (character tables), plus inner and dual
//! distributions of families and their consistency relations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{gaussian_binomial, is_prime_power, qpow, rat, ratio, BigRat};
use crate::family::{Family, Ground, GroundId};
use crate::permgroup::{character, class_size, dim_irrep, partitions_of, Partition};

/// Which scheme a table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeKind {
    /// k-subspaces of F_q^n, relations by intersection codimension.
    Grassmann { n: u32, k: u32, q: u32 },
    /// S_n, relations by the conjugacy class of g h^{-1}.
    Conjugacy { n: u32 },
}

/// Exact P/Q eigenvalue tables of an association scheme with s classes:
/// `P[i][j]` and `Q[j][i]` are the change-of-basis coefficients between the
/// adjacency matrices and the primitive idempotents; valencies are P_i(0)
/// and multiplicities Q_j(0).
pub struct SchemeTables {
    kind: SchemeKind,
    v: BigInt,
    p: Vec<Vec<BigRat>>,
    q: Vec<Vec<BigRat>>,
    classes: Vec<String>,
    class_types: Option<Vec<Partition>>,
    irreps: Option<Vec<Partition>>,
}

impl SchemeTables {
    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    /// Number of classes s (tables are (s+1) x (s+1)).
    pub fn s(&self) -> usize {
        self.p.len() - 1
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn p(&self) -> &[Vec<BigRat>] {
        &self.p
    }

    /// Dual eigenvalues indexed as `q()[j][i]`.
    pub fn q(&self) -> &[Vec<BigRat>] {
        &self.q
    }

    pub fn valency(&self, i: usize) -> &BigRat {
        &self.p[i][0]
    }

    pub fn multiplicity(&self, j: usize) -> &BigRat {
        &self.q[j][0]
    }

    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    /// Cycle type of each class (conjugacy scheme only).
    pub fn class_types(&self) -> Option<&[Partition]> {
        self.class_types.as_deref()
    }

    /// Partition indexing each idempotent (conjugacy scheme only).
    pub fn irreps(&self) -> Option<&[Partition]> {
        self.irreps.as_deref()
    }

    /// Verify P Q = v I, the valency/multiplicity sums, P_0(j) = 1, and the
    /// relation P_i(j) / v_i = Q_j(i) / u_j. Exact; a failure means the
    /// tables were transcribed wrongly.
    pub fn check_axioms(&self) -> Result<()> {
        let s = self.s();
        let v = rat(self.v.clone());
        for i in 0..=s {
            for l in 0..=s {
                let mut acc = BigRat::zero();
                for j in 0..=s {
                    acc += &self.p[i][j] * &self.q[j][l];
                }
                let want = if i == l { v.clone() } else { BigRat::zero() };
                if acc != want {
                    return Err(Error::Inconsistent(format!(
                        "(P Q)[{i}][{l}] = {acc}, want {want}"
                    )));
                }
            }
        }
        let sum_val: BigRat = (0..=s).map(|i| self.valency(i).clone()).sum();
        let sum_mul: BigRat = (0..=s).map(|j| self.multiplicity(j).clone()).sum();
        if sum_val != v || sum_mul != v {
            return Err(Error::Inconsistent(
                "valencies or multiplicities do not sum to v".into(),
            ));
        }
        for j in 0..=s {
            if !self.p[0][j].is_one() {
                return Err(Error::Inconsistent(format!("P_0({j}) != 1")));
            }
        }
        for i in 0..=s {
            for j in 0..=s {
                let lhs = &self.p[i][j] / self.valency(i);
                let rhs = &self.q[j][i] / self.multiplicity(j);
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!(
                        "P_{i}({j})/v_{i} != Q_{j}({i})/u_{j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Grassmann scheme tables
// ---------------------------------------------------------------------------

/// Generalized Eberlein polynomial E_i^{(q)}(x) for G_q(n, k); the scheme
/// eigenvalue P_i(x). Integer-valued at integer x.
pub fn eberlein(n: u32, k: u32, q: u32, i: u32, x: u32) -> BigInt {
    let (n, k, q64, i, x) = (
        u64::from(n),
        u64::from(k),
        u64::from(q),
        u64::from(i),
        u64::from(x),
    );
    let mut acc = BigInt::zero();
    for r in 0..=i {
        let top = n as i64 + r as i64 - k as i64 - x as i64;
        if top < 0 {
            continue;
        }
        let d = i - r;
        let mut term = qpow(q64, d * d.saturating_sub(1) / 2)
            * gaussian_binomial(k - r, (k - i) as i64, q64)
            * gaussian_binomial(k - x, r as i64, q64)
            * gaussian_binomial(top as u64, r as i64, q64)
            * qpow(q64, r * x);
        if d % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    acc
}

/// Dual Hahn polynomial D_j^{(q)}(x) for G_q(n, k); the dual eigenvalue
/// Q_j(x). Rational in general. The [n+1-j, r] factor is the one that
/// satisfies P Q = v I and the valency relation on every desk-scale
/// instance (checked exhaustively in the tests).
pub fn dual_hahn(n: u32, k: u32, q: u32, j: u32, x: u32) -> BigRat {
    let (n, k, q64, j, x) = (
        u64::from(n),
        u64::from(k),
        u64::from(q),
        u64::from(j),
        u64::from(x),
    );
    let mult = rat(gaussian_binomial(n, j as i64, q64) - gaussian_binomial(n, j as i64 - 1, q64));
    let mut acc = BigRat::zero();
    for r in 0..=j {
        let num = qpow(q64, r * r.saturating_sub(1) / 2)
            * gaussian_binomial(j, r as i64, q64)
            * gaussian_binomial(n + 1 - j, r as i64, q64)
            * gaussian_binomial(x, r as i64, q64);
        let den = gaussian_binomial(k, r as i64, q64)
            * gaussian_binomial(n - k, r as i64, q64)
            * qpow(q64, r * x);
        let mut term = ratio(num, den);
        if r % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    mult * acc
}

/// Closed form of the top-degree eigenvalue P_k(r) for n >= 2k:
/// (-1)^r q^(C(r,2) + k(k-r)) [n-k-r, k-r]_q.
pub fn eberlein_top_closed(n: u32, k: u32, q: u32, r: u32) -> BigInt {
    let (n, k, q64, r) = (u64::from(n), u64::from(k), u64::from(q), u64::from(r));
    let mut val = qpow(q64, r * r.saturating_sub(1) / 2 + k * (k - r))
        * gaussian_binomial(n - k - r, (k - r) as i64, q64);
    if r % 2 == 1 {
        val = -val;
    }
    val
}

/// Exact P/Q tables of the Grassmann scheme G_q(n, k), classes indexed by
/// codimension i = k - dim(U ∩ W). Needs k <= n - k (use the complementary
/// dimension otherwise) and a prime power q.
pub fn grassmann_tables(n: u32, k: u32, q: u32) -> Result<SchemeTables> {
    if !is_prime_power(u64::from(q)) {
        return Err(Error::BadParameter(format!("q = {q} is not a prime power")));
    }
    if k > n || k > n - k {
        return Err(Error::BadParameter(format!(
            "tables need k <= n - k; for k > n/2 use the complementary dimension {}",
            n.saturating_sub(k)
        )));
    }
    let s = k as usize;
    let mut p = vec![vec![BigRat::zero(); s + 1]; s + 1];
    let mut qm = vec![vec![BigRat::zero(); s + 1]; s + 1];
    for i in 0..=s {
        for j in 0..=s {
            p[i][j] = rat(eberlein(n, k, q, i as u32, j as u32));
            qm[j][i] = dual_hahn(n, k, q, j as u32, i as u32);
        }
    }
    Ok(SchemeTables {
        kind: SchemeKind::Grassmann { n, k, q },
        v: gaussian_binomial(u64::from(n), i64::from(k), u64::from(q)),
        p,
        q: qm,
        classes: (0..=s).map(|i| i.to_string()).collect(),
        class_types: None,
        irreps: None,
    })
}

// ---------------------------------------------------------------------------
// Conjugacy scheme tables
// ---------------------------------------------------------------------------

/// Exact P/Q tables of the conjugacy scheme of S_n. Classes are cycle
/// types with the identity class first; idempotents are indexed by the
/// partitions in descending-lex order, so j = 0 is the trivial character
/// and j = 1 is the fixed-points-minus-one character (n-1, 1).
pub fn conjugacy_tables(n: u32, cap_n: u32) -> Result<SchemeTables> {
    if n == 0 {
        return Err(Error::BadParameter("conjugacy scheme needs n >= 1".into()));
    }
    if n > cap_n {
        return Err(Error::SizeLimit {
            what: format!("conjugacy scheme of S_{n}"),
            requested: n.to_string(),
            cap: cap_n.to_string(),
        });
    }
    let irreps = partitions_of(n);
    let mut classes = irreps.clone();
    classes.reverse(); // identity class (1, ..., 1) first
    let s = classes.len() - 1;

    let mut p = vec![vec![BigRat::zero(); s + 1]; s + 1];
    let mut qm = vec![vec![BigRat::zero(); s + 1]; s + 1];
    for (j, lam) in irreps.iter().enumerate() {
        let dim = dim_irrep(lam);
        for (i, cls) in classes.iter().enumerate() {
            let chi = character(lam, cls)?;
            p[i][j] = ratio(class_size(cls) * &chi, dim.clone());
            qm[j][i] = rat(&chi * &dim);
        }
    }
    Ok(SchemeTables {
        kind: SchemeKind::Conjugacy { n },
        v: crate::exactnum::factorial(u64::from(n)),
        p,
        q: qm,
        classes: classes.iter().map(|c| c.to_string()).collect(),
        class_types: Some(classes),
        irreps: Some(irreps),
    })
}

// ---------------------------------------------------------------------------
// Inner and dual distributions
// ---------------------------------------------------------------------------

/// Inner distribution of a family: a_i = (number of ordered member pairs in
/// relation R_i) / M. Always a_0 = 1 and sum a_i = M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerDistribution {
    a: Vec<BigRat>,
}

impl InnerDistribution {
    pub fn a(&self) -> &[BigRat] {
        &self.a
    }
}

/// Dual distribution: b_j = (v / M^2) u B_j u^T, computed from the inner
/// distribution through the dual eigenvalues. Nonnegative, b_0 = 1,
/// sum b_j = v / M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDistribution {
    b: Vec<BigRat>,
}

impl DualDistribution {
    pub fn b(&self) -> &[BigRat] {
        &self.b
    }
}

fn check_family(tables: &SchemeTables, ground: &Ground, family: &Family) -> Result<()> {
    let kind_id = match tables.kind() {
        SchemeKind::Grassmann { n, k, q } => GroundId::Grassmann { n, k, q },
        SchemeKind::Conjugacy { n } => GroundId::Symmetric { n },
    };
    if ground.id() != kind_id || family.id() != kind_id {
        return Err(Error::GroundMismatch(format!(
            "tables are for {kind_id}, ground is {}, family is {}",
            ground.id(),
            family.id()
        )));
    }
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(())
}

/// Inner distribution of a family with respect to a scheme.
pub fn inner_distribution(
    tables: &SchemeTables,
    ground: &Ground,
    family: &Family,
) -> Result<InnerDistribution> {
    check_family(tables, ground, family)?;
    let s = tables.s();
    let mut counts = vec![0u64; s + 1];
    match (tables.kind(), ground) {
        (SchemeKind::Grassmann { k, .. }, Ground::Grassmann(g)) => {
            let cached = g.cached_pair_table();
            let v = g.size() as usize;
            for &a in family.members() {
                for &b in family.members() {
                    let dim = match cached {
                        Some(t) => u32::from(t[a as usize * v + b as usize]),
                        None => g.at(a).intersection_dim(g.at(b))?,
                    };
                    counts[(k - dim) as usize] += 1;
                }
            }
        }
        (SchemeKind::Conjugacy { n }, Ground::Symmetric(g)) => {
            let class_index: HashMap<&Partition, usize> = tables
                .class_types
                .as_ref()
                .unwrap()
                .iter()
                .enumerate()
                .map(|(i, c)| (c, i))
                .collect();
            debug_assert_eq!(g.n(), n);
            for &a in family.members() {
                for &b in family.members() {
                    let quo = g.at(a).compose(&g.at(b).inverse())?;
                    counts[class_index[&quo.cycle_type()]] += 1;
                }
            }
        }
        _ => unreachable!("check_family enforces matching kinds"),
    }
    let m = BigInt::from(family.m());
    let a: Vec<BigRat> = counts.iter().map(|&c| ratio(c, m.clone())).collect();
    debug_assert!(a[0].is_one());
    debug_assert_eq!(a.iter().sum::<BigRat>(), rat(m));
    Ok(InnerDistribution { a })
}

/// Dual distribution b_j = (1/M) sum_i Q_j(i) a_i. Before returning, the
/// inner distribution is reconstructed through a_i = (M/v) sum_j b_j P_i(j)
/// and the Delsarte constraints (b_j >= 0, b_0 = 1, sum b_j = v/M) are
/// checked exactly; a mismatch means the tables are wrong and is an error.
pub fn dual_distribution(
    tables: &SchemeTables,
    inner: &InnerDistribution,
    m: u64,
) -> Result<DualDistribution> {
    let s = tables.s();
    if inner.a.len() != s + 1 {
        return Err(Error::BadParameter(format!(
            "inner distribution has {} entries, scheme has {}",
            inner.a.len(),
            s + 1
        )));
    }
    let m_rat = rat(BigInt::from(m));
    let mut b = Vec::with_capacity(s + 1);
    for j in 0..=s {
        let mut acc = BigRat::zero();
        for i in 0..=s {
            acc += &tables.q[j][i] * &inner.a[i];
        }
        b.push(acc / &m_rat);
    }

    for (j, bj) in b.iter().enumerate() {
        if bj.is_negative() {
            return Err(Error::Inconsistent(format!("b_{j} = {bj} is negative")));
        }
    }
    if !b[0].is_one() {
        return Err(Error::Inconsistent(format!("b_0 = {} != 1", b[0])));
    }
    let v_rat = rat(tables.v.clone());
    let total: BigRat = b.iter().sum();
    if total != &v_rat / &m_rat {
        return Err(Error::Inconsistent(format!("sum b_j = {total} != v/M")));
    }
    for i in 0..=s {
        let mut acc = BigRat::zero();
        for j in 0..=s {
            acc += &b[j] * &tables.p[i][j];
        }
        let back = acc * &m_rat / &v_rat;
        if back != inner.a[i] {
            return Err(Error::Inconsistent(format!(
                "reconstructed a_{i} = {back}, want {}",
                inner.a[i]
            )));
        }
    }
    Ok(DualDistribution { b })
}

/// Total intersection number read off the conjugacy-scheme inner
/// distribution: I(F) = M sum_i a_i U_i, with U_i the fixed-point count of
/// class i and the identity class included (it contributes U = n).
pub fn conjugacy_total_intersection(
    tables: &SchemeTables,
    inner: &InnerDistribution,
    m: u64,
) -> Result<BigInt> {
    let Some(types) = tables.class_types() else {
        return Err(Error::BadParameter("not a conjugacy scheme".into()));
    };
    let mut acc = BigRat::zero();
    for (i, ct) in types.iter().enumerate() {
        acc += &inner.a[i] * rat(ct.fixed_parts());
    }
    acc *= rat(BigInt::from(m));
    if !acc.is_integer() {
        return Err(Error::Inconsistent(format!(
            "I(F) = {acc} is not an integer"
        )));
    }
    Ok(acc.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::factorial;
    use crate::oracle;
    use crate::permgroup::{coset_family, CosetSpec, SymmetricGround};
    use crate::vecspace::{
        coordinate_subspace, count_at_intersection, full_t_star, GrassmannGround,
    };
    use rand::{rngs::StdRng, Rng, SeedableRng};

    const CAP: u64 = 200_000;

    #[test]
    fn grassmann_table_values() {
        let t = grassmann_tables(4, 2, 2).unwrap();
        assert_eq!(t.s(), 2);
        assert_eq!(*t.v(), BigInt::from(35));
        assert_eq!(*t.valency(1), rat(18));
        assert_eq!(t.p()[2][1], rat(-4));
        for j in 0..=2 {
            assert_eq!(t.p()[0][j], rat(1));
        }
        assert_eq!(*t.multiplicity(0), rat(1));
        assert_eq!(*t.multiplicity(1), rat(14));
        assert_eq!(*t.multiplicity(2), rat(20));
    }

    #[test]
    fn grassmann_valency_matches_counting_formula() {
        for (n, k, q) in [(4u32, 2u32, 2u32), (5, 2, 2), (5, 2, 3), (6, 3, 2)] {
            let t = grassmann_tables(n, k, q).unwrap();
            for i in 0..=k {
                let want = count_at_intersection(n, k, k, k - i, q);
                assert_eq!(*t.valency(i as usize), rat(want), "({n},{k},{q}) i={i}");
            }
        }
    }

    #[test]
    fn eberlein_top_closed_form_matches_sum() {
        for (n, k, q) in [(4u32, 2u32, 2u32), (5, 2, 3), (6, 3, 2), (8, 3, 2)] {
            for r in 0..=k {
                assert_eq!(
                    eberlein(n, k, q, k, r),
                    eberlein_top_closed(n, k, q, r),
                    "({n},{k},{q}) r={r}"
                );
            }
        }
    }

    #[test]
    fn scheme_axioms_grassmann() {
        for q in [2u32, 3] {
            for n in 2..=5u32 {
                for k in 1..=n / 2 {
                    grassmann_tables(n, k, q).unwrap().check_axioms().unwrap();
                }
            }
        }
        assert!(grassmann_tables(4, 3, 2).is_err());
        assert!(grassmann_tables(4, 2, 6).is_err());
    }

    #[test]
    fn scheme_axioms_hold_beyond_desk_scale() {
        for (n, k, q) in [(8u32, 3u32, 2u32), (7, 3, 3), (9, 4, 2), (10, 2, 5)] {
            grassmann_tables(n, k, q)
                .unwrap()
                .check_axioms()
                .unwrap_or_else(|e| panic!("({n},{k},{q}): {e}"));
        }
    }

    /// The first dual eigenvalue row in the closed form the bound
    /// derivation rests on: Q_1(i) = ([n 1]-1)(1 - [n 1][i 1] / ([k 1][n-k 1] q^i)).
    #[test]
    fn first_dual_row_closed_form() {
        for (n, k, q) in [
            (4u32, 2u32, 2u32),
            (5, 2, 3),
            (6, 3, 2),
            (8, 3, 2),
            (7, 2, 5),
        ] {
            let q64 = u64::from(q);
            let n1 = rat(gaussian_binomial(u64::from(n), 1, q64));
            for i in 0..=k {
                let correction = rat(gaussian_binomial(u64::from(n), 1, q64))
                    * rat(gaussian_binomial(u64::from(i), 1, q64))
                    / (rat(gaussian_binomial(u64::from(k), 1, q64))
                        * rat(gaussian_binomial(u64::from(n - k), 1, q64))
                        * rat(qpow(q64, u64::from(i))));
                let closed = (&n1 - rat(1)) * (rat(1) - correction);
                assert_eq!(dual_hahn(n, k, q, 1, i), closed, "({n},{k},{q}) i={i}");
            }
        }
    }

    #[test]
    fn conjugacy_tables_at_the_cap() {
        let t = conjugacy_tables(8, 8).unwrap();
        assert_eq!(t.s() + 1, 22);
        t.check_axioms().unwrap();
    }

    #[test]
    fn scheme_axioms_conjugacy() {
        for n in 1..=7u32 {
            conjugacy_tables(n, 8).unwrap().check_axioms().unwrap();
        }
        assert!(matches!(
            conjugacy_tables(9, 8),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn conjugacy_table_values() {
        let t = conjugacy_tables(3, 8).unwrap();
        // Q_j(0) over j = (3), (2,1), (1,1,1): squared dimensions 1, 4, 1
        assert_eq!(*t.multiplicity(0), rat(1));
        assert_eq!(*t.multiplicity(1), rat(4));
        assert_eq!(*t.multiplicity(2), rat(1));
        // trivial-character column carries the class sizes
        for (i, cls) in t.class_types().unwrap().iter().enumerate() {
            assert_eq!(*t.valency(i), rat(class_size(cls)));
        }

        let t5 = conjugacy_tables(5, 8).unwrap();
        let classes = t5.class_types().unwrap();
        let irreps = t5.irreps().unwrap();
        let i = classes
            .iter()
            .position(|c| c.parts() == [2, 1, 1, 1])
            .unwrap();
        let j = irreps.iter().position(|l| l.parts() == [4, 1]).unwrap();
        assert_eq!(t5.p()[i][j], rat(5));
        assert_eq!(j, 1, "the fixed-points-minus-one character sits at j = 1");
    }

    #[test]
    fn inner_distribution_examples() {
        let g = GrassmannGround::enumerate(4, 2, 2, CAP).unwrap();
        let t = grassmann_tables(4, 2, 2).unwrap();
        let single = Family::new(g.id(), vec![3], g.size()).unwrap();
        let inner = inner_distribution(&t, &Ground::Grassmann(&g), &single).unwrap();
        assert_eq!(inner.a(), &[rat(1), rat(0), rat(0)]);

        let star = full_t_star(&g, &coordinate_subspace(4, 2, 1).unwrap()).unwrap();
        let inner = inner_distribution(&t, &Ground::Grassmann(&g), &star).unwrap();
        assert_eq!(inner.a(), &[rat(1), rat(6), rat(0)]);

        let s3 = SymmetricGround::enumerate(3, 8).unwrap();
        let t3 = conjugacy_tables(3, 8).unwrap();
        let coset = coset_family(&s3, &CosetSpec::parse("1:1").unwrap()).unwrap();
        let inner = inner_distribution(&t3, &Ground::Symmetric(&s3), &coset).unwrap();
        assert_eq!(inner.a(), &[rat(1), rat(1), rat(0)]);

        let empty = Family::new(s3.id(), vec![], s3.size()).unwrap();
        assert!(matches!(
            inner_distribution(&t3, &Ground::Symmetric(&s3), &empty),
            Err(Error::EmptyFamily)
        ));
    }

    #[test]
    fn dual_distribution_examples() {
        let g = GrassmannGround::enumerate(4, 2, 2, CAP).unwrap();
        let t = grassmann_tables(4, 2, 2).unwrap();

        // the whole ground set: b = (1, 0, ..., 0)
        let all = Family::new(g.id(), (0..35).collect(), g.size()).unwrap();
        let inner = inner_distribution(&t, &Ground::Grassmann(&g), &all).unwrap();
        let dual = dual_distribution(&t, &inner, 35).unwrap();
        assert_eq!(dual.b(), &[rat(1), rat(0), rat(0)]);

        // full 1-star: sum of b equals v / M = 5
        let star = full_t_star(&g, &coordinate_subspace(4, 2, 1).unwrap()).unwrap();
        let inner = inner_distribution(&t, &Ground::Grassmann(&g), &star).unwrap();
        let dual = dual_distribution(&t, &inner, star.m()).unwrap();
        assert_eq!(dual.b().iter().sum::<BigRat>(), rat(5));
        assert_eq!(dual.b()[1], rat(4));

        // 1-coset of S_3: the (2,1) coordinate is 2
        let s3 = SymmetricGround::enumerate(3, 8).unwrap();
        let t3 = conjugacy_tables(3, 8).unwrap();
        let coset = coset_family(&s3, &CosetSpec::parse("1:1").unwrap()).unwrap();
        let inner = inner_distribution(&t3, &Ground::Symmetric(&s3), &coset).unwrap();
        let dual = dual_distribution(&t3, &inner, 2).unwrap();
        assert_eq!(dual.b()[1], rat(2));
    }

    fn random_family(rng: &mut StdRng, id: GroundId, v: u64, max_m: u64) -> Family {
        let m = rng.random_range(1..=max_m.min(v));
        let mut members = Vec::new();
        while (members.len() as u64) < m {
            members.push(rng.random_range(0..v) as u32);
            members.sort_unstable();
            members.dedup();
        }
        Family::new(id, members, v).unwrap()
    }

    #[test]
    fn delsarte_constraints_on_random_families() {
        let mut rng = StdRng::seed_from_u64(0xd15c);

        let g = GrassmannGround::enumerate(4, 2, 2, CAP).unwrap();
        let t = grassmann_tables(4, 2, 2).unwrap();
        for _ in 0..200 {
            let f = random_family(&mut rng, g.id(), g.size(), 20);
            let inner = inner_distribution(&t, &Ground::Grassmann(&g), &f).unwrap();
            // dual_distribution re-checks nonnegativity, b_0, the sum, and
            // the reconstruction before returning
            dual_distribution(&t, &inner, f.m()).unwrap();
        }

        let s5 = SymmetricGround::enumerate(5, 8).unwrap();
        let t5 = conjugacy_tables(5, 8).unwrap();
        for _ in 0..200 {
            let f = random_family(&mut rng, s5.id(), s5.size(), 24);
            let inner = inner_distribution(&t5, &Ground::Symmetric(&s5), &f).unwrap();
            dual_distribution(&t5, &inner, f.m()).unwrap();
        }
    }

    #[test]
    fn inner_distribution_recovers_total_intersection() {
        let mut rng = StdRng::seed_from_u64(0x1f);
        let s4 = SymmetricGround::enumerate(4, 8).unwrap();
        let t4 = conjugacy_tables(4, 8).unwrap();
        for _ in 0..50 {
            let f = random_family(&mut rng, s4.id(), s4.size(), 12);
            let inner = inner_distribution(&t4, &Ground::Symmetric(&s4), &f).unwrap();
            let via_scheme = conjugacy_total_intersection(&t4, &inner, f.m()).unwrap();
            let direct = oracle::total_intersection_symmetric(&s4, &f).unwrap();
            assert_eq!(via_scheme, direct);
        }
    }

    #[test]
    fn multiplicity_sums() {
        let t = conjugacy_tables(6, 8).unwrap();
        let total: BigRat = (0..=t.s()).map(|j| t.multiplicity(j).clone()).sum();
        assert_eq!(total, rat(factorial(6)));
    }
}
