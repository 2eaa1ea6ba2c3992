//! Exact spectra of Cayley graphs on S_n generated by fixed-point-count
//! classes, closed forms and identities for the top eigenvalues, and the
//! decomposition of a family's indicator function into its components on
//! the trivial eigenspace, the (n-1, 1) eigenspace, and the rest.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, derangement, factorial, rat, ratio, BigRat};
use crate::family::Family;
use crate::oracle;
use crate::permgroup::{
    character, class_size, dim_irrep, int_perm, partitions_of, Partition, SymmetricGround,
};

/// Hard ceiling for character-sum computations; class counts stay small
/// up to here and the border-strip recursion is comfortable.
const CHAR_N_CAP: u32 = 12;

// ---------------------------------------------------------------------------
// Generator sets
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    /// Permutations with fewer than k fixed points (k >= 1).
    FewerThan,
    /// Permutations with exactly k fixed points.
    Exactly,
}

/// A union of conjugacy classes selected by fixed-point count; always
/// inverse-closed, so it generates a Cayley graph on S_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    mode: GenMode,
    k: u32,
}

impl GeneratorSpec {
    pub fn fewer_than(k: u32) -> Result<GeneratorSpec> {
        if k == 0 {
            return Err(Error::BadParameter(
                "fewer-than generator needs k >= 1".into(),
            ));
        }
        Ok(GeneratorSpec {
            mode: GenMode::FewerThan,
            k,
        })
    }

    pub fn exactly(k: u32) -> GeneratorSpec {
        GeneratorSpec {
            mode: GenMode::Exactly,
            k,
        }
    }

    pub fn mode(&self) -> GenMode {
        self.mode
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Parse "fewer:k" or "exact:k".
    pub fn parse(s: &str) -> Result<GeneratorSpec> {
        let (mode, k) = s.split_once(':').ok_or_else(|| {
            Error::Parse(format!("bad generator spec {s:?}, want fewer:k or exact:k"))
        })?;
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator k in {s:?}")))?;
        match mode.trim() {
            "fewer" => GeneratorSpec::fewer_than(k),
            "exact" => Ok(GeneratorSpec::exactly(k)),
            _ => Err(Error::Parse(format!("bad generator mode in {s:?}"))),
        }
    }

    /// Does the conjugacy class with this cycle type belong to the set?
    pub fn contains_class(&self, cycle_type: &Partition) -> bool {
        let fixed = cycle_type.fixed_parts();
        match self.mode {
            GenMode::FewerThan => fixed < self.k,
            GenMode::Exactly => fixed == self.k,
        }
    }
}

impl std::fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.mode {
            GenMode::FewerThan => write!(f, "fewer:{}", self.k),
            GenMode::Exactly => write!(f, "exact:{}", self.k),
        }
    }
}

fn check_char_cap(n: u32) -> Result<()> {
    if n == 0 || n > CHAR_N_CAP {
        return Err(Error::SizeLimit {
            what: format!("character sums over S_{n}"),
            requested: n.to_string(),
            cap: CHAR_N_CAP.to_string(),
        });
    }
    Ok(())
}

/// Number of permutations in the generator set.
pub fn generator_size(n: u32, gen: &GeneratorSpec) -> BigInt {
    partitions_of(n)
        .iter()
        .filter(|c| gen.contains_class(c))
        .map(class_size)
        .sum()
}

/// Eigenvalue of the Cayley graph for the irreducible representation rho:
/// (1 / dim rho) * sum of chi_rho over the generator set. Exact; an
/// algebraic integer, returned as a rational.
///
/// ```
/// use tinum_core::permgroup::Partition;
/// use tinum_core::spectra::{eigenvalue, GeneratorSpec};
/// let derangement_graph = GeneratorSpec::fewer_than(1).unwrap();
/// let hook = Partition::near_row(5); // the partition (4, 1)
/// let lam = eigenvalue(5, &hook, &derangement_graph).unwrap();
/// assert_eq!(lam.to_string(), "-11");
/// ```
pub fn eigenvalue(n: u32, rho: &Partition, gen: &GeneratorSpec) -> Result<BigRat> {
    check_char_cap(n)?;
    if rho.n() != n {
        return Err(Error::BadParameter(format!(
            "{rho} is not a partition of {n}"
        )));
    }
    let mut acc = BigInt::zero();
    for cls in partitions_of(n) {
        if gen.contains_class(&cls) {
            acc += class_size(&cls) * character(rho, &cls)?;
        }
    }
    Ok(ratio(acc, dim_irrep(rho)))
}

/// The whole spectrum: eigenvalue per partition of n, in descending-lex
/// partition order.
pub fn spectrum_table(n: u32, gen: &GeneratorSpec) -> Result<Vec<(Partition, BigRat)>> {
    check_char_cap(n)?;
    partitions_of(n)
        .into_iter()
        .map(|rho| {
            let val = eigenvalue(n, &rho, gen)?;
            Ok((rho, val))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Closed forms for the top eigenvalues (fewer-than-k convention)
// ---------------------------------------------------------------------------

/// Closed forms of the eigenvalues at (n) and (n-1, 1) of the graph
/// generated by permutations with fewer than k fixed points:
/// `sum_{i<k} C(n,i) d_{n-i}` and `(1/(n-1)) sum_{i<k} C(n,i) d_{n-i} (i-1)`.
pub fn top_eigenvalues_closed(n: u32, k: u32) -> (BigRat, BigRat) {
    assert!(n >= 2 && k >= 1);
    let mut top = BigInt::zero();
    let mut hook = BigInt::zero();
    for i in 0..k.min(n + 1) {
        let term = binomial(u64::from(n), i64::from(i)) * derangement(u64::from(n - i));
        top += &term;
        hook += term * (i64::from(i) - 1);
    }
    (rat(top), ratio(hook, u64::from(n - 1)))
}

/// Closed form of the sign-partition eigenvalue of the graph generated by
/// permutations with exactly k fixed points: C(n,k) (-1)^(n-k-1) (n-k-1).
pub fn sign_eigenvalue_closed(n: u32, k: u32) -> BigInt {
    assert!(n > k);
    let mut val = binomial(u64::from(n), i64::from(k)) * BigInt::from(i64::from(n - k) - 1);
    if (n - k - 1) % 2 == 1 {
        val = -val;
    }
    val
}

// ---------------------------------------------------------------------------
// Summation identities
// ---------------------------------------------------------------------------

/// The double sum over truncated alternating exponential series,
/// sum_{k=2}^{n} sum_{i=1}^{k-1} 1/(i-1)! * sum_{s=0}^{n-i} (-1)^s / s!,
/// evaluated exactly. It collapses to n - 2.
pub fn derangement_series_sum(n: u32) -> BigRat {
    assert!(n >= 2);
    // truncated[m] = sum_{s<=m} (-1)^s / s!  ( = d_m / m! )
    let mut truncated = vec![BigRat::zero(); n as usize + 1];
    let mut term = BigRat::one();
    truncated[0] = BigRat::one();
    for m in 1..=n as usize {
        term = -term / rat(m as u64);
        truncated[m] = &truncated[m - 1] + &term;
    }
    let mut acc = BigRat::zero();
    for k in 2..=n {
        for i in 1..k {
            acc += &truncated[(n - i) as usize] / rat(factorial(u64::from(i - 1)));
        }
    }
    acc
}

/// The two exact eigenvalue sums over k = 1..n, computed from the closed
/// forms of the top eigenvalues:
/// sum_k (lambda_(n) + (n-1) lambda_(n-1,1))  =  n! (n - 2)
/// sum_k (lambda_(n) - lambda_(n-1,1))        =  n! (n - (n-2)/(n-1)).
pub fn eigenvalue_sums(n: u32) -> (BigRat, BigRat) {
    assert!(n >= 2);
    let nm1 = rat(u64::from(n - 1));
    let mut combined = BigRat::zero();
    let mut difference = BigRat::zero();
    for k in 1..=n {
        let (top, hook) = top_eigenvalues_closed(n, k);
        combined += &top + &nm1 * &hook;
        difference += &top - &hook;
    }
    (combined, difference)
}

// ---------------------------------------------------------------------------
// Branching recursion and the dimension bound
// ---------------------------------------------------------------------------

/// Partitions of n - 1 reachable by removing the rightmost box of a row.
pub fn removable_box_children(rho: &Partition) -> Vec<Partition> {
    let parts = rho.parts();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if parts[i] > next {
            let mut child: Vec<u32> = parts.to_vec();
            child[i] -= 1;
            if child[i] == 0 {
                child.pop();
            }
            if !child.is_empty() {
                out.push(Partition::new(child).unwrap());
            }
        }
    }
    out
}

/// Check the branching recursion for the exactly-k generator convention:
/// lambda_rho^(k) over S_n equals (n / (k dim rho)) * sum over children
/// mu (one box removed) of `dim[mu] * lambda_mu^(k-1)` over S_{n-1}.
pub fn branching_check(n: u32, rho: &Partition, k: u32) -> Result<bool> {
    if k == 0 || k >= n {
        return Err(Error::BadParameter(format!(
            "branching needs 0 < k < n, got k = {k}"
        )));
    }
    check_char_cap(n)?;
    let lhs = eigenvalue(n, rho, &GeneratorSpec::exactly(k))?;
    let mut acc = BigRat::zero();
    for child in removable_box_children(rho) {
        let sub = eigenvalue(n - 1, &child, &GeneratorSpec::exactly(k - 1))?;
        acc += rat(dim_irrep(&child)) * sub;
    }
    let rhs = acc * ratio(u64::from(n), BigInt::from(k) * dim_irrep(rho));
    Ok(lhs == rhs)
}

/// For every partition rho of n, compare the eigenvalue against the bound
/// |lambda_rho| <= sqrt(n! |X|) / dim rho, via the squared inequality
/// (dim rho * lambda)^2 <= n! |X| so no roots are taken.
pub fn dimension_eigenvalue_bounds(
    n: u32,
    gen: &GeneratorSpec,
) -> Result<Vec<(Partition, BigRat, bool)>> {
    check_char_cap(n)?;
    let x_size = generator_size(n, gen);
    let limit = rat(factorial(u64::from(n)) * x_size);
    let mut out = Vec::new();
    for rho in partitions_of(n) {
        let lam = eigenvalue(n, &rho, gen)?;
        let scaled = &lam * rat(dim_irrep(&rho));
        let ok = &scaled * &scaled <= limit;
        out.push((rho, lam, ok));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Projections onto the span of 1-coset indicators
// ---------------------------------------------------------------------------

/// Exact decomposition data for the indicator f of a family F in S_n,
/// under the expectation inner product: norms of f and of its components
/// f_0 (constant part), f_1 (the (n-1,1) part), f_2 (the rest), plus the
/// quadratic forms f A_s f = #{ordered pairs agreeing in fewer than s
/// positions} for s = 1..n.
#[derive(Clone, Debug)]
pub struct ProjectionReport {
    pub n: u32,
    pub m: u64,
    pub norm_f_sq: BigRat,
    pub norm_f0_sq: BigRat,
    pub norm_f1_sq: BigRat,
    pub norm_f2_sq: BigRat,
    pub quad_forms: Vec<BigRat>,
}

/// Solve G x = r exactly by Gauss-Jordan elimination; the system must be
/// consistent (G is a Gram matrix and r a vector of inner products against
/// the same span). Free variables are set to zero.
fn solve_gram(mut g: Vec<Vec<BigRat>>, mut r: Vec<BigRat>) -> Result<Vec<BigRat>> {
    let rows = g.len();
    let cols = g[0].len();
    let mut pivot_cols: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&i| !g[i][col].is_zero()) else {
            continue;
        };
        g.swap(pivot_row, src);
        r.swap(pivot_row, src);
        let inv = g[pivot_row][col].recip();
        for e in g[pivot_row].iter_mut() {
            *e *= &inv;
        }
        r[pivot_row] *= &inv;
        for i in 0..rows {
            if i == pivot_row || g[i][col].is_zero() {
                continue;
            }
            let factor = g[i][col].clone();
            for c in 0..cols {
                let sub = &factor * &g[pivot_row][c];
                g[i][c] -= sub;
            }
            let sub = &factor * &r[pivot_row];
            r[i] -= sub;
        }
        pivot_cols.push((pivot_row, col));
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    for i in pivot_row..rows {
        if !r[i].is_zero() {
            return Err(Error::Inconsistent(
                "normal equations are inconsistent; the Gram matrix is wrong".into(),
            ));
        }
    }
    let mut x = vec![BigRat::zero(); cols];
    for (row, col) in pivot_cols {
        x[col] = r[row].clone();
    }
    Ok(x)
}

/// Project the indicator of a family onto the span of the 1-coset
/// indicators and report all component norms exactly. The Gram matrix has
/// the closed-form entries 1/n (same coset), 0 (same position or same
/// value), 1/(n(n-1)) (otherwise); it is singular, since the n^2
/// indicators span a space of dimension (n-1)^2 + 1 only.
pub fn projection_report(ground: &SymmetricGround, family: &Family) -> Result<ProjectionReport> {
    if ground.id() != family.id() {
        return Err(Error::GroundMismatch(format!(
            "family over {} used with ground {}",
            family.id(),
            ground.id()
        )));
    }
    let n = ground.n();
    if !(2..=6).contains(&n) {
        return Err(Error::SizeLimit {
            what: "projection onto 1-coset indicators".into(),
            requested: n.to_string(),
            cap: "2 <= n <= 6".into(),
        });
    }
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let nu = n as usize;
    let m = family.m();
    let nf = factorial(u64::from(n));
    let norm_f_sq = ratio(m, nf.clone());
    let norm_f0_sq = &norm_f_sq * &norm_f_sq;

    // position-value counts and the agreement histogram
    let mut counts = vec![0u64; nu * nu];
    for &idx in family.members() {
        let p = ground.at(idx);
        for i in 0..nu {
            counts[i * nu + p.apply(i)] += 1;
        }
    }
    let mut hist = vec![0u64; nu + 1];
    for &a in family.members() {
        for &b in family.members() {
            hist[int_perm(ground.at(a), ground.at(b))? as usize] += 1;
        }
    }
    let mut quad_forms = Vec::with_capacity(nu);
    let mut below = 0u64;
    for s in 1..=nu {
        below += hist[s - 1];
        quad_forms.push(rat(below));
    }

    // Gram matrix of the n^2 coset indicators and the right-hand side
    let dim = nu * nu;
    let same = ratio(1u64, u64::from(n));
    let off = ratio(1u64, u64::from(n) * u64::from(n - 1));
    let mut gram = vec![vec![BigRat::zero(); dim]; dim];
    for i in 0..nu {
        for j in 0..nu {
            for k in 0..nu {
                for l in 0..nu {
                    let entry = if i == k && j == l {
                        same.clone()
                    } else if i == k || j == l {
                        BigRat::zero()
                    } else {
                        off.clone()
                    };
                    gram[i * nu + j][k * nu + l] = entry;
                }
            }
        }
    }
    let rhs: Vec<BigRat> = counts.iter().map(|&c| ratio(c, nf.clone())).collect();
    let coeffs = solve_gram(gram, rhs.clone())?;
    let norm_proj_sq: BigRat = coeffs.iter().zip(&rhs).map(|(c, r)| c * r).sum();

    let norm_f1_sq = &norm_proj_sq - &norm_f0_sq;
    let norm_f2_sq = &norm_f_sq - &norm_proj_sq;
    if norm_f1_sq.is_negative() || norm_f2_sq.is_negative() {
        return Err(Error::Inconsistent(
            "negative squared norm from the projection solve".into(),
        ));
    }
    Ok(ProjectionReport {
        n,
        m,
        norm_f_sq,
        norm_f0_sq,
        norm_f1_sq,
        norm_f2_sq,
        quad_forms,
    })
}

/// Both spectral identities for I(F), checked exactly.
#[derive(Clone, Debug)]
pub struct SpectralCheck {
    /// I(F) computed directly.
    pub direct: BigInt,
    /// n M^2 minus the sum of the quadratic forms.
    pub counting_form: BigRat,
    /// The eigenvalue/projection form built from the component norms.
    pub projection_form: BigRat,
    pub ok: bool,
}

/// Verify I(F) = n M^2 - sum_s f A_s f, and the refinement obtained by
/// splitting each quadratic form into eigenspace contributions:
/// I(F) = ((n-1)!)^2 [ (M/(n-1)!)^2 (n-2)/(n-1) + (M/(n-1)!) n/(n-1) ]
///        - (n!)^2/(n-1) |f_2|^2 - sum_s f_2 A_s f_2,
/// with f_2 A_s f_2 = f A_s f - n! (lambda_(n)^(s) |f_0|^2 +
/// lambda_(n-1,1)^(s) |f_1|^2). Everything is exact.
pub fn spectral_decomposition_check(
    ground: &SymmetricGround,
    family: &Family,
) -> Result<SpectralCheck> {
    let n = ground.n();
    let report = projection_report(ground, family)?;
    let direct = oracle::total_intersection_symmetric(ground, family)?;

    let m_rat = rat(report.m);
    let quad_total: BigRat = report.quad_forms.iter().sum();
    let counting_form = rat(u64::from(n)) * &m_rat * &m_rat - quad_total;

    let nf = rat(factorial(u64::from(n)));
    let nm1f = rat(factorial(u64::from(n - 1)));
    let mut f2_quads = BigRat::zero();
    for s in 1..=n {
        let (top, hook) = top_eigenvalues_closed(n, s);
        let projected = &nf * (top * &report.norm_f0_sq + hook * &report.norm_f1_sq);
        f2_quads += &report.quad_forms[(s - 1) as usize] - projected;
    }
    let alpha = &m_rat / &nm1f; // family size in units of (n-1)!
    let nm1 = rat(u64::from(n - 1));
    let head = &nm1f
        * &nm1f
        * (&alpha * &alpha * ratio(u64::from(n - 2), u64::from(n - 1))
            + &alpha * ratio(u64::from(n), u64::from(n - 1)));
    let projection_form = head - &nf * &nf / &nm1 * &report.norm_f2_sq - f2_quads;

    let direct_rat = rat(direct.clone());
    let ok = direct_rat == counting_form && direct_rat == projection_form;
    Ok(SpectralCheck {
        direct,
        counting_form,
        projection_form,
        ok,
    })
}
