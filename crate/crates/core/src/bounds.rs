//! Upper bounds on the maximal total intersection number MI for families of
//! given size, and the exact identities they rest on: the Delsarte-style
//! bounds from the Grassmann scheme (with the explicit dual feasible point
//! of the underlying linear program), the conjugacy-scheme bound for S_n,
//! and the b_1 identity that makes the permutation bound an equality.
//!
//! No numerical LP solver is involved: the programs are solved by closed
//! forms, and the feasibility inequalities are verified exactly before a
//! dual value is used.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, gaussian_binomial, is_prime_power, qpow, rat, ratio, BigRat};
use crate::schemes::{eberlein_top_closed, DualDistribution};

/// A named bound value with its applicability flags.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub name: &'static str,
    pub params: Vec<(String, String)>,
    pub value: BigRat,
    /// Whether the preconditions of the bound hold for these parameters.
    pub valid: bool,
    /// Human-readable precondition, when there is one beyond the ranges.
    pub requirement: Option<String>,
}

fn gauss(n: u32, k: i64, q: u32) -> BigInt {
    gaussian_binomial(u64::from(n), k, u64::from(q))
}

fn check_grassmann_params(n: u32, k: u32, q: u32, m: u64) -> Result<()> {
    if !is_prime_power(u64::from(q)) {
        return Err(Error::BadParameter(format!("q = {q} is not a prime power")));
    }
    if k == 0 || k > n || n < 2 {
        return Err(Error::BadParameter(format!(
            "need 1 <= k <= n and n >= 2, got n={n} k={k}"
        )));
    }
    let v = gauss(n, i64::from(k), q);
    if m == 0 || BigInt::from(m) > v {
        return Err(Error::BadParameter(format!("M = {m} outside 1..{v}")));
    }
    Ok(())
}

fn grassmann_params(n: u32, k: u32, q: u32, m: u64) -> Vec<(String, String)> {
    vec![
        ("n".into(), n.to_string()),
        ("k".into(), k.to_string()),
        ("q".into(), q.to_string()),
        ("M".into(), m.to_string()),
    ]
}

/// The common factor q M^2 [k 1][n-k 1] / ([n 1]([n 1] - 1)).
fn grassmann_scale(n: u32, k: u32, q: u32, m: u64) -> BigRat {
    let n1 = gauss(n, 1, q);
    ratio(
        BigInt::from(q) * BigInt::from(m) * BigInt::from(m) * gauss(k, 1, q) * gauss(n - k, 1, q),
        &n1 * (&n1 - BigInt::from(1)),
    )
}

/// General Grassmann bound, valid for every 1 <= M <= [n k]_q:
/// MI <= ([n k]/M - [n 1]) q M^2 [k 1][n-k 1] / ([n 1]([n 1]-1)) + k M^2.
pub fn bound_grassmann_general(n: u32, k: u32, q: u32, m: u64) -> Result<BoundReport> {
    check_grassmann_params(n, k, q, m)?;
    let head = ratio(gauss(n, i64::from(k), q), m) - rat(gauss(n, 1, q));
    let value = head * grassmann_scale(n, k, q, m) + rat(u64::from(k) * m * m);
    Ok(BoundReport {
        name: "grassmann-general",
        params: grassmann_params(n, k, q, m),
        value,
        valid: true,
        requirement: None,
    })
}

/// Sharpened Grassmann bound; needs n >= 2k and M <= [n-1 k-1]_q. The value
/// is evaluated for any in-range parameters, with the flag reporting whether
/// the preconditions hold.
pub fn bound_grassmann_refined(n: u32, k: u32, q: u32, m: u64) -> Result<BoundReport> {
    check_grassmann_params(n, k, q, m)?;
    let q64 = u64::from(q);
    // the (q^(k-1) - 1) factor kills the correction term at k = 1; taking
    // that branch early also avoids the 0/0 the raw display would hit at n = 2
    let value = if k == 1 {
        rat(m * m)
    } else {
        if n < 3 {
            return Err(Error::BadParameter(
                "refined bound needs n >= 3 when k >= 2".into(),
            ));
        }
        let head = ratio(gauss(n, i64::from(k), q), m)
            - ratio(
                (qpow(q64, u64::from(n)) - 1) * (qpow(q64, u64::from(n - 1)) - 1),
                (qpow(q64, 1) - 1) * (qpow(q64, u64::from(k)) - 1),
            );
        let scale = ratio(
            BigInt::from(m)
                * BigInt::from(m)
                * (qpow(q64, u64::from(k)) - 1)
                * (qpow(q64, u64::from(k - 1)) - 1)
                * (qpow(q64, u64::from(n - k)) - 1),
            (qpow(q64, u64::from(n)) - 1)
                * (qpow(q64, u64::from(n - 1)) - 1)
                * (qpow(q64, u64::from(n - 2)) - 1),
        );
        head * scale + rat(u64::from(k) * m * m)
    };
    let valid = n >= 2 * k && BigInt::from(m) <= gauss(n - 1, i64::from(k) - 1, q);
    Ok(BoundReport {
        name: "grassmann-refined",
        params: grassmann_params(n, k, q, m),
        value,
        valid,
        requirement: Some(format!("n >= 2k and M <= [{} {}]_{q}", n - 1, k - 1)),
    })
}

/// Conjugacy-scheme bound for S_n: MI <= M^2/(n-1) (n!/M + n - 2).
pub fn bound_symmetric(n: u32, m: u64) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::BadParameter("bound needs n >= 2".into()));
    }
    let nf = factorial(u64::from(n));
    if m == 0 || BigInt::from(m) > nf {
        return Err(Error::BadParameter(format!("M = {m} outside 1..{nf}")));
    }
    let value = ratio(m * m, u64::from(n - 1)) * (ratio(nf, m) + rat(u64::from(n) - 2));
    Ok(BoundReport {
        name: "symmetric",
        params: vec![("n".into(), n.to_string()), ("M".into(), m.to_string())],
        value,
        valid: true,
        requirement: None,
    })
}

/// Both dual-distribution forms of the Grassmann bound for a concrete
/// family: the b_1 form (b_1 + 1 - [n 1]) * scale + k M^2 and the
/// tail-sum form ([n k]/M - sum_{r>=2} b_r - [n 1]) * scale + k M^2.
/// They agree whenever b comes from an actual family.
pub fn bound_grassmann_dual_pair(
    n: u32,
    k: u32,
    q: u32,
    dual: &DualDistribution,
    m: u64,
) -> Result<(BigRat, BigRat)> {
    check_grassmann_params(n, k, q, m)?;
    if dual.b().len() != k as usize + 1 {
        return Err(Error::BadParameter(format!(
            "dual distribution has {} coordinates, scheme has {}",
            dual.b().len(),
            k + 1
        )));
    }
    let scale = grassmann_scale(n, k, q, m);
    let k_m2 = rat(u64::from(k) * m * m);
    let n1 = rat(gauss(n, 1, q));

    let b1_form = (&dual.b()[1] + rat(1) - &n1) * &scale + &k_m2;
    let tail: BigRat = dual.b()[2..].iter().sum();
    let tail_form = (ratio(gauss(n, i64::from(k), q), m) - tail - n1) * scale + k_m2;
    Ok((b1_form, tail_form))
}

/// The exact b_1 identity value for families of permutations:
/// I(F) = M^2 (b_1/(n-1) + 1), with b_1 the dual coordinate of the
/// fixed-points-minus-one character.
pub fn symmetric_b1_identity(n: u32, m: u64, b1: &BigRat) -> BigRat {
    rat(m * m) * (b1 / rat(u64::from(n) - 1) + rat(1))
}

/// Lower bound on the tail sum of the dual distribution, from the explicit
/// feasible point of the dual linear program (all weight on the top class):
/// ([n k]/M - (q^n-1)/(q^k-1)) * q^(k-1) (q^(n-k-1)-1) / (q^(n-2)-1).
/// Verifies the feasibility inequalities
/// (P_k(1) - P_k(r)) / (P_k(2) - P_k(1)) >= -1 for r = 2..k exactly before
/// returning; a violation signals a wrong eigenvalue table.
pub fn lp_dual_feasible_value(n: u32, k: u32, q: u32, m: u64) -> Result<BigRat> {
    check_grassmann_params(n, k, q, m)?;
    if n < 2 * k {
        return Err(Error::BadParameter(format!(
            "dual point needs n >= 2k, got n={n} k={k}"
        )));
    }
    if BigInt::from(m) > gauss(n - 1, i64::from(k) - 1, q) {
        return Err(Error::BadParameter(format!(
            "dual point needs M <= [{} {}]_{q}",
            n - 1,
            k - 1
        )));
    }
    if k == 1 {
        // no dual variables at all
        return Ok(BigRat::zero());
    }

    let p = |r: u32| rat(eberlein_top_closed(n, k, q, r));
    let gap = p(2) - p(1);
    if gap <= BigRat::zero() {
        return Err(Error::Inconsistent(
            "P_k(2) - P_k(1) is not positive".into(),
        ));
    }
    for r in 2..=k {
        if (p(1) - p(r)) / &gap < rat(-1) {
            return Err(Error::Inconsistent(format!(
                "dual feasibility fails at r = {r}"
            )));
        }
    }

    let q64 = u64::from(q);
    let head = ratio(gauss(n, i64::from(k), q), m)
        - ratio(qpow(q64, u64::from(n)) - 1, qpow(q64, u64::from(k)) - 1);
    let factor = ratio(
        qpow(q64, u64::from(k - 1)) * (qpow(q64, u64::from(n - k - 1)) - 1),
        qpow(q64, u64::from(n - 2)) - 1,
    );
    Ok(head * factor)
}
