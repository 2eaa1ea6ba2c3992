//! Closed-form total intersection values of the extremal constructions:
//! full t-stars in the Grassmannian and block families of disjoint cosets
//! in S_n, together with the tight special-case values they certify.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, gaussian_binomial, qpow};

fn gauss(n: u64, k: i64, q: u64) -> BigInt {
    gaussian_binomial(n, k, q)
}

/// I of the full t-star (all k-dim subspaces containing a fixed t-dim one):
/// [n-t k-t]_q * sum_{j=0}^{k-t} (j + t) q^((k-t-j)^2) [n-k k-t-j]_q [k-t j]_q.
///
/// ```
/// use tinum_core::extremal::star_value;
/// assert_eq!(star_value(4, 2, 1, 2).unwrap().to_string(), "56");
/// ```
pub fn star_value(n: u32, k: u32, t: u32, q: u32) -> Result<BigInt> {
    if !(1 <= t && t <= k && k <= n) {
        return Err(Error::BadParameter(format!(
            "need 1 <= t <= k <= n, got n={n} k={k} t={t}"
        )));
    }
    if q < 2 {
        return Err(Error::BadParameter(format!("need q >= 2, got {q}")));
    }
    let (n, k, t, q) = (u64::from(n), u64::from(k), u64::from(t), u64::from(q));
    let mut sum = BigInt::from(0);
    for j in 0..=k - t {
        let e = (k - t - j) * (k - t - j);
        sum += BigInt::from(j + t)
            * qpow(q, e)
            * gauss(n - k, (k - t - j) as i64, q)
            * gauss(k - t, j as i64, q);
    }
    Ok(gauss(n - t, (k - t) as i64, q) * sum)
}

fn sq(x: BigInt) -> BigInt {
    &x * &x
}

/// I of the block family with a0 full 1-cosets and no 2-coset part:
/// a0 ((n-1)!)^2 + (n-1) [ a0 ((a0-1)(n-2)!)^2 + (n-a0) (a0 (n-2)!)^2 ].
fn block_value_no_two_cosets(n: u64, a0: u64) -> BigInt {
    let f1 = factorial(n - 1);
    let f2 = factorial(n - 2);
    BigInt::from(a0) * sq(f1)
        + BigInt::from(n - 1)
            * (BigInt::from(a0) * sq(BigInt::from(a0 as i64 - 1) * &f2)
                + BigInt::from(n - a0) * sq(BigInt::from(a0) * &f2))
}

/// The long display for I of the block family in the regime a0 <= a1.
fn block_value_a0_below(n: u64, a0: u64, a1: u64) -> BigInt {
    let f1 = factorial(n - 1);
    let f2 = factorial(n - 2);
    let f3 = factorial(n - 3);
    let (a0i, a1i, ni) = (a0 as i64, a1 as i64, n as i64);
    let head = sq(BigInt::from(a1) * &f2) + BigInt::from(a0) * sq(f1);
    let middle =
        sq(f2.clone()) * BigInt::from(a0i * a0i * ni + 2 * a0i * a1i - 2 * a0i * a0i + a1i - a0i);
    let tail = BigInt::from(n - 2)
        * (sq(BigInt::from(a0) * &f2)
            + BigInt::from(a0) * sq(BigInt::from(a0i - 1) * &f2 + BigInt::from(a1i - 1) * &f3)
            + BigInt::from(a1 - a0) * sq(BigInt::from(a0) * &f2 + BigInt::from(a1i - 1) * &f3)
            + BigInt::from(ni - a1i - 1) * sq(BigInt::from(a0) * &f2 + BigInt::from(a1) * &f3));
    head + middle + tail
}

/// The companion display for the regime a1 <= a0.
fn block_value_a1_below(n: u64, a0: u64, a1: u64) -> BigInt {
    let f1 = factorial(n - 1);
    let f2 = factorial(n - 2);
    let f3 = factorial(n - 3);
    let (a0i, a1i, ni) = (a0 as i64, a1 as i64, n as i64);
    let head = sq(BigInt::from(a1) * &f2) + BigInt::from(a0) * sq(f1);
    let middle =
        sq(f2.clone()) * BigInt::from(a0i * a0i * ni + 2 * a0i * a1i - 2 * a0i * a0i + a0i - a1i);
    let tail = BigInt::from(n - 2)
        * (sq(BigInt::from(a0) * &f2)
            + BigInt::from(a1) * sq(BigInt::from(a0i - 1) * &f2 + BigInt::from(a1i - 1) * &f3)
            + BigInt::from(a0 - a1) * sq(BigInt::from(a0i - 1) * &f2 + BigInt::from(a1) * &f3)
            + BigInt::from(ni - a0i - 1) * sq(BigInt::from(a0) * &f2 + BigInt::from(a1) * &f3));
    head + middle + tail
}

/// Exact I of the block family of a0 1-cosets and a1 2-cosets (no padding),
/// by the closed displays. At a0 = a1 both displays apply and are both
/// evaluated as a transcription check; with a1 = 0 the dedicated
/// no-2-coset form is used.
pub fn t0_value(n: u32, a0: u64, a1: u64) -> Result<BigInt> {
    if n < 2 || a0 > u64::from(n) - 1 || a1 > u64::from(n) - 1 {
        return Err(Error::BadParameter(format!(
            "need n >= 2 and 0 <= a0, a1 <= n-1, got n={n} a0={a0} a1={a1}"
        )));
    }
    let n = u64::from(n);
    if a1 == 0 {
        return Ok(block_value_no_two_cosets(n, a0));
    }
    if n < 3 {
        return Err(Error::BadParameter("2-coset blocks need n >= 3".into()));
    }
    if a0 == a1 {
        let value = block_value_a0_below(n, a0, a1);
        let other = block_value_a1_below(n, a0, a1);
        if value != other {
            return Err(Error::Inconsistent(format!(
                "the two block displays disagree at a0 = a1 = {a0}: {value} vs {other}"
            )));
        }
        return Ok(value);
    }
    Ok(if a0 < a1 {
        block_value_a0_below(n, a0, a1)
    } else {
        block_value_a1_below(n, a0, a1)
    })
}

/// Tight MI value for families of [n-1 1]_q planes in G_q(n, 2):
/// (q^(n-1) + q - 2)(q^(n-1) - 1) / (q - 1)^2. Exact integer.
pub fn line_star_mi(n: u32, q: u32) -> Result<BigInt> {
    if n < 2 || q < 2 {
        return Err(Error::BadParameter("needs n >= 2 and q >= 2".into()));
    }
    let q = u64::from(q);
    let p = qpow(q, u64::from(n) - 1);
    let num = (&p + BigInt::from(q) - 2) * (&p - 1);
    let den = sq(BigInt::from(q - 1));
    let (quot, rem) = (&num / &den, &num % &den);
    debug_assert!(rem == BigInt::from(0));
    Ok(quot)
}

/// Tight MI value for families of [n-2 1]_q 3-spaces in G_q(n, 3):
/// (2 q^(n-2) + q - 3)(q^(n-2) - 1) / (q - 1)^2. Exact integer.
pub fn plane_star_mi(n: u32, q: u32) -> Result<BigInt> {
    if n < 6 || q < 2 {
        return Err(Error::BadParameter("needs n >= 6 and q >= 2".into()));
    }
    let q = u64::from(q);
    let p = qpow(q, u64::from(n) - 2);
    let num = (BigInt::from(2) * &p + BigInt::from(q) - 3) * (&p - 1);
    let den = sq(BigInt::from(q - 1));
    let (quot, rem) = (&num / &den, &num % &den);
    debug_assert!(rem == BigInt::from(0));
    Ok(quot)
}

/// Tight MI value for families of (n-1)! permutations: 2 ((n-1)!)^2,
/// achieved by a point stabilizer.
pub fn stabilizer_mi(n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::BadParameter("needs n >= 2".into()));
    }
    Ok(BigInt::from(2) * sq(factorial(u64::from(n) - 1)))
}
