//! Exact arithmetic and the basic counting functions everything else consumes.
//!
//! All values are exact: [`BigInt`] for integers, [`BigRat`] for rationals
//! (always in lowest terms, denominator positive). Floating point never
//! enters any computation; identities downstream are checked by equality,
//! not tolerance.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational; the universal scalar of this crate.
pub type BigRat = num_rational::BigRational;

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i; // exact: the partial product is C(n-k+i, i)
    }
    acc
}

/// Gaussian binomial coefficient [n k]_q; zero when k < 0 or k > n.
///
/// Computed by exact division of the telescoping product term by term;
/// every partial quotient is itself a Gaussian binomial, hence an integer.
///
/// ```
/// use tinum_core::exactnum::gaussian_binomial;
/// assert_eq!(gaussian_binomial(4, 2, 2).to_string(), "35");
/// assert_eq!(gaussian_binomial(5, 2, 2).to_string(), "155");
/// ```
pub fn gaussian_binomial(n: u64, k: i64, q: u64) -> BigInt {
    assert!(q >= 2, "gaussian_binomial needs q >= 2");
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as u64;
    let q = BigInt::from(q);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= q.pow((n - k + i) as u32) - 1;
        let divisor = q.pow(i as u32) - 1;
        debug_assert!(BigInt::is_zero(&(&acc % &divisor)));
        acc /= divisor;
    }
    acc
}

/// Derangement number d_n = sum_{i=0}^{n} (-1)^i n!/i!.
pub fn derangement(n: u64) -> BigInt {
    // term i holds n!/i!, built down from n!/n! = 1
    let mut term = BigInt::one();
    let mut acc = if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    for i in (0..n).rev() {
        term *= i + 1;
        if i % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// q^e as a BigInt.
pub fn qpow(q: u64, e: u64) -> BigInt {
    BigInt::from(q).pow(e as u32)
}

/// Exact rational from an integer.
pub fn rat<T: Into<BigInt>>(n: T) -> BigRat {
    BigRat::from_integer(n.into())
}

/// Exact rational p/q from two integers.
pub fn ratio<T: Into<BigInt>, U: Into<BigInt>>(p: T, q: U) -> BigRat {
    BigRat::new(p.into(), q.into())
}

/// Canonical text form of a rational: "p" when the denominator is one,
/// "p/q" otherwise (lowest terms, q > 0). Used in all JSON output.
pub fn rat_string(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse "p" or "p/q" back into a rational.
pub fn parse_rat(s: &str) -> crate::error::Result<BigRat> {
    let s = s.trim();
    let make_err = || crate::error::Error::Parse(format!("bad rational: {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| make_err())?;
            Ok(BigRat::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| make_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| make_err())?;
            if q.is_zero() {
                return Err(make_err());
            }
            Ok(BigRat::new(p, q))
        }
    }
}

/// Floating approximation for human-readable CLI summaries only;
/// the exact value is always printed alongside.
pub fn rat_approx(r: &BigRat) -> f64 {
    let digits = 15usize;
    let scale = BigInt::from(10u64).pow(digits as u32);
    let scaled = (r.numer() * &scale) / r.denom();
    let approx: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
    approx / 10f64.powi(digits as i32)
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut q = q;
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            while q.is_multiple_of(p) {
                q /= p;
            }
            return q == 1;
        }
        p += 1;
    }
    true // q itself is prime
}
